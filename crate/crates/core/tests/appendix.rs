mod common;

use qhverma::parabolic::ParabolicData;
use qhverma::report::{cases_for, parse_ranks};

#[test]
fn appendix_data_at_all_tested_ranks() {
    let cases = cases_for(&parse_ranks("B4..B8,C3..C7,D6..D8,E6,E7,E8,F4").unwrap()).unwrap();
    assert!(cases.len() > 40);
    for c in cases {
        let pd = ParabolicData::build(c.family, c.rank, c.node).unwrap();
        common::check_appendix(&pd).unwrap();
    }
}

#[test]
fn appendix_detects_wrong_node() {
    // B6(4) data checked against the B6(3) formulas must fail
    let pd = ParabolicData::build(qhverma::Family::B, 6, 4).unwrap();
    let wrong = ParabolicData::build(qhverma::Family::B, 6, 3).unwrap();
    let want = common::appendix(&wrong);
    assert_ne!(pd.mu().unwrap(), want.mu);
}
