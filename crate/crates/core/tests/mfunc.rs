mod common;

use std::f64::consts::LN_2;

use digamma_laplace::mfunc::{self, Branch, Method};
use digamma_laplace::quad::{QuadConfig, Side};
use digamma_laplace::series::SeriesConfig;
use digamma_laplace::specfun;

use common::{figure_grid, EULER_GAMMA};

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

#[test]
fn value_at_zero() {
    let m = mfunc::m_direct(0.0, &cfg()).unwrap();
    assert!((m.value - 1.130_330_700_75).abs() < 1e-10);
    assert!((m.value - mfunc::m_at_zero()).abs() < 1e-12);
    assert_eq!(m.branch, Branch::Below);
}

#[test]
fn m_equals_l_plus_gamma_over_a_above_ln2() {
    for a in [0.7, 0.9, 1.0, 1.5, 2.0, 3.0, 5.0] {
        let m = mfunc::m_direct(a, &cfg()).unwrap().value;
        let l = mfunc::l_direct(a, &cfg()).unwrap().value;
        assert!((m - (l + EULER_GAMMA / a)).abs() < 1e-9, "a={a}");
    }
}

#[test]
fn m_differs_from_l_plus_gamma_over_a_below_ln2() {
    let m = mfunc::m_direct(0.5, &cfg()).unwrap().value;
    let l = mfunc::l_direct(0.5, &cfg()).unwrap().value;
    assert!((m - 1.395_91).abs() < 1e-5, "{m}");
    assert!((l + EULER_GAMMA / 0.5 - 2.495_74).abs() < 1e-5);
    for a in [0.1, 0.3, 0.5, 0.65] {
        let m = mfunc::m_direct(a, &cfg()).unwrap().value;
        let l = mfunc::l_direct(a, &cfg()).unwrap().value;
        assert!((m - (l + EULER_GAMMA / a)).abs() > 0.01, "a={a}");
    }
}

#[test]
fn closed_form_matches_quadrature_on_the_grid() {
    for a in figure_grid() {
        let d = mfunc::m_direct(a, &cfg()).unwrap();
        let c = mfunc::m_closed(a, &cfg()).unwrap();
        assert_eq!(c.method, Method::ClosedForm);
        assert!((d.value - c.value).abs() <= 1e-10, "a={a}");
        assert!(d.value > 0.0);
    }
}

#[test]
fn exp_integral_form_agrees_below_the_cusp() {
    for i in 1..=20 {
        let a = LN_2 * i as f64 / 20.0;
        let x = mfunc::m_exp_integral_form(a, &cfg()).unwrap().value;
        let y = mfunc::m_closed_forced(a, Branch::Below, &cfg())
            .unwrap()
            .value;
        assert!((x - y).abs() <= 1e-8, "a={a}");
    }
}

#[test]
fn branches_meet_continuously_at_ln2() {
    let below = mfunc::m_closed_forced(LN_2, Branch::Below, &cfg())
        .unwrap()
        .value;
    let above = mfunc::m_closed_forced(LN_2, Branch::Above, &cfg())
        .unwrap()
        .value;
    let direct = mfunc::m_direct(LN_2, &cfg()).unwrap();
    assert!((below - above).abs() <= 1e-10);
    assert!((direct.value - above).abs() <= 1e-9);
    assert_eq!(direct.branch, Branch::At);
}

#[test]
fn slope_drops_by_four() {
    let j = mfunc::mprime_jump(&cfg()).unwrap();
    assert!((j.left.value - 0.599_17).abs() < 1e-4, "{:?}", j.left);
    assert!((j.right.value + 3.400_83).abs() < 1e-4, "{:?}", j.right);
    assert!((j.jump.value - 4.0).abs() < 1e-3);
    let right_minus_left = j.right.value - j.left.value;
    assert!((right_minus_left + 4.0).abs() < 1e-3);

    let d = mfunc::mprime_jump_direct(&cfg()).unwrap();
    assert!((d.jump.value - 4.0).abs() < 1e-3, "{:?}", d.jump);
}

#[test]
fn one_sided_derivative_sees_the_cusp() {
    let m = |a: f64| mfunc::m_direct(a, &cfg()).unwrap().value;
    let l = digamma_laplace::quad::one_sided_derivative(m, LN_2, Side::Left, &cfg()).unwrap();
    let r = digamma_laplace::quad::one_sided_derivative(m, LN_2, Side::Right, &cfg()).unwrap();
    assert!((l.value - r.value - 4.0).abs() < 1e-3, "{l:?} {r:?}");
}

#[test]
fn small_a_uses_quadrature() {
    let a = 5e-4;
    let c = mfunc::m_closed(a, &cfg()).unwrap();
    assert_eq!(c.method, Method::DirectQuadrature);
    let d = mfunc::m_direct(a, &cfg()).unwrap();
    assert!((c.value - d.value).abs() < 1e-12);
    assert!((c.value - mfunc::m_at_zero()).abs() < 1e-2);
}

#[test]
fn l_routes_agree_and_decay() {
    for a in [0.3, 1.0, 4.0, 10.0] {
        let x = mfunc::l_direct(a, &cfg()).unwrap().value;
        let y = mfunc::l_from_lngamma(a, &cfg()).unwrap().value;
        assert!((x - y).abs() < 1e-9, "a={a}");
    }
    let l10 = mfunc::l_direct(10.0, &cfg()).unwrap().value;
    assert!(l10 + EULER_GAMMA / 10.0 > 0.0);
}

#[test]
fn laplace_of_lngamma_series_matches_quadrature() {
    let s = SeriesConfig::default();
    for a in [0.2, 0.4, 0.6] {
        let series = mfunc::laplace_lngamma_full(a, &s).unwrap().value;
        let quad = mfunc::laplace_lngamma_quad(a, f64::INFINITY, &cfg())
            .unwrap()
            .value;
        assert!((series - quad).abs() < 1e-9, "a={a}");
    }
    let unit = mfunc::laplace_lngamma_unit(0.5, &s).unwrap().value;
    let quad = mfunc::laplace_lngamma_quad(0.5, 1.0, &cfg()).unwrap().value;
    assert!((unit - quad).abs() < 1e-10);
}

#[test]
fn lngamma_moments() {
    // ∫₀¹ lnΓ = ½ ln 2π
    let m0 = mfunc::moment_lngamma(0).unwrap();
    assert!((m0 - 0.5 * specfun::constant(specfun::Constant::LnTwoPi)).abs() < 1e-14);
    for n in 1..=mfunc::MOMENT_MAX_N {
        let q = digamma_laplace::quad::integrate(
            |t| t.powi(n as i32) * specfun::ln_gamma(t).unwrap(),
            0.0,
            1.0,
            &cfg(),
        )
        .unwrap()
        .value;
        assert!(
            (mfunc::moment_lngamma(n).unwrap() - q).abs() < 1e-12,
            "n={n}"
        );
    }
}

#[test]
fn grid_shape() {
    assert_eq!(mfunc::grid(0.05, 2.0, 0.05, false).unwrap().len(), 40);
    let g = mfunc::grid(0.5, 1.0, 0.1, true).unwrap();
    assert_eq!(g.len(), 7);
    assert!(g.windows(2).all(|w| w[0] < w[1]));
    assert!(mfunc::grid(1.0, 0.0, 0.1, false).is_err());
}

#[test]
fn domain_errors() {
    assert!(mfunc::m_direct(-0.1, &cfg()).is_err());
    assert!(mfunc::m_direct(f64::NAN, &cfg()).is_err());
    assert!(mfunc::l_direct(0.0, &cfg()).is_err());
}
