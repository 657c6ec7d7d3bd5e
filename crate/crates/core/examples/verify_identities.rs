//! Check the whole identity catalog and print a JSON report.

use digamma_laplace::registry::{self, VerifyConfig};

fn main() {
    for entry in registry::list_identities() {
        eprintln!("{:<14} {}", entry.id, entry.statement);
    }
    let report = registry::verify_all(&VerifyConfig {
        timing: false,
        ..VerifyConfig::default()
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    if !report.all_passed() {
        std::process::exit(1);
    }
}
