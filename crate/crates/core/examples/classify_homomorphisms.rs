//! Standard / non-standard verdicts for the Ω₁ and Ω₂ maps, with witnesses.

use qhverma::parabolic::ParabolicData;
use qhverma::report::{cases_for, parse_ranks, ClassifyReport};

fn main() -> qhverma::Result<()> {
    let ranks = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "B6,C5,D7,E6,E7,E8,F4".into());
    for case in cases_for(&parse_ranks(&ranks)?)? {
        let pd = ParabolicData::build(case.family, case.rank, case.node)?;
        println!(
            "{}",
            ClassifyReport::build(&pd, qhverma::linkage::default_budget())?
        );
    }
    Ok(())
}
