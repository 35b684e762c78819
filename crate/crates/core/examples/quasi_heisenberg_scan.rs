//! Lists every maximal parabolic with a quasi-Heisenberg nilradical.

use qhverma::parabolic::{expected_quasi_heisenberg, scan_quasi_heisenberg};

fn main() {
    let max_rank = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let scan = scan_quasi_heisenberg(max_rank);
    for c in &scan.cases {
        println!("{c}");
    }
    for c in &scan.three_factor {
        println!("{c}  (three-factor Levi)");
    }
    let found: std::collections::BTreeSet<_> = scan.cases.iter().copied().collect();
    assert_eq!(found, expected_quasi_heisenberg(max_rank));
    println!(
        "{} cases, agreeing with the closed-form list",
        scan.cases.len()
    );
}
