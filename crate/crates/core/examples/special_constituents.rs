//! Special constituents, their types, special values and dual highest weights
//! for every quasi-Heisenberg case of the default rank set.

use qhverma::corpus::Corpus;
use qhverma::omega::{omega1_constituent, omega2_constituents};
use qhverma::parabolic::ParabolicData;
use qhverma::report::{cases_for, parse_ranks, DEFAULT_RANKS};

fn main() -> qhverma::Result<()> {
    for case in cases_for(&parse_ranks(DEFAULT_RANKS)?)? {
        let pd = ParabolicData::build(case.family, case.rank, case.node)?;
        let rs = pd.rs();
        let ls = pd.levi_structure()?;
        let mut all = vec![omega1_constituent(&pd)?];
        all.extend(omega2_constituents(&pd, &ls, Corpus::builtin())?);
        for c in all {
            let t = c.ctype.map(|t| t.to_string()).unwrap_or_else(|| "-".into());
            println!(
                "{:<7} {:<7} hw {:<28} type {:<2}  s0 {:<4}  ν {}",
                case.to_string(),
                c.kind.to_string(),
                rs.render(&c.hw),
                t,
                c.special_value.to_string(),
                rs.render(&c.nu)
            );
        }
    }
    Ok(())
}
