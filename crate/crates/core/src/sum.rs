//! Summation helpers shared by `specfun` and `series`.

/// Kahan–Babuška–Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `Σ_{k≥0} (-1)^k a_k` for a totally monotone (moment) sequence `a_k`,
/// using the Cohen–Rodriguez Villegas–Zagier weights with `n` terms.
/// The relative error is about `5.83^{-n}`.
pub(crate) fn alternating_cvz(n: usize, mut a: impl FnMut(usize) -> f64) -> f64 {
    let nf = n as f64;
    let d = (3.0 + 8f64.sqrt()).powf(nf);
    let d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        s += c * a(k);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Outcome of a Richardson-extrapolated limit.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Limit {
    pub value: f64,
    pub err: f64,
    pub converged: bool,
    /// Largest index the sequence was sampled at.
    pub samples: usize,
}

/// Extrapolates `lim_{N→∞} seq(N)` for a sequence with error expansion
/// `Σ_m c_m N^{-(p+m)}`, sampling at `N = n0·2^i`. `seq` is called with
/// increasing `N` so callers can accumulate partial sums incrementally.
///
/// The error estimate is the distance between the last two diagonal
/// entries of the table plus a roundoff floor.
pub(crate) fn richardson_limit(
    mut seq: impl FnMut(usize) -> f64,
    p: f64,
    n0: usize,
    max_levels: usize,
    max_cols: usize,
    target: f64,
) -> Limit {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(max_levels);
    let mut best = Limit {
        value: f64::NAN,
        err: f64::INFINITY,
        converged: false,
        samples: 0,
    };
    for i in 0..max_levels {
        let n = n0 << i;
        let s = seq(n);
        let mut row = vec![s];
        let cols = i.min(max_cols);
        for j in 1..=cols {
            let q = p + (j - 1) as f64;
            let prev = rows[i - 1][j - 1];
            let cur = row[j - 1];
            row.push(cur + (cur - prev) / (2f64.powf(q) - 1.0));
        }
        if i >= 2 {
            let diag = row[cols];
            let prev_diag = rows[i - 1][rows[i - 1].len() - 1];
            let err = (diag - prev_diag).abs() + 16.0 * f64::EPSILON * diag.abs();
            if err < best.err {
                best = Limit {
                    value: diag,
                    err,
                    converged: false,
                    samples: n,
                };
            }
            if err <= target {
                best.converged = true;
                return best;
            }
        }
        rows.push(row);
    }
    best
}

/// `Σ_{k≥first} term(k)` for eventually one-signed terms whose partial sums
/// approach the limit like `N^{-p}`.
pub(crate) fn power_tail_sum(
    mut term: impl FnMut(usize) -> f64,
    first: usize,
    p: f64,
    n0: usize,
    max_levels: usize,
    target: f64,
) -> Limit {
    let mut acc = Neumaier::default();
    let mut next = first;
    richardson_limit(
        |n| {
            let upto = first + n;
            while next < upto {
                acc.add(term(next));
                next += 1;
            }
            acc.total()
        },
        p,
        n0,
        max_levels,
        6,
        target,
    )
}
