//! Structure constants and the degree-2 highest weight vector computations.

use qhverma::chevalley::{condition_h_solve, type2_identity, type2_reachability, ChevalleyBasis};
use qhverma::parabolic::ParabolicData;
use qhverma::Family;

fn main() -> qhverma::Result<()> {
    for (n, i) in [(5, 3), (5, 4), (6, 3), (7, 5)] {
        let pd = ParabolicData::build(Family::B, n, i)?;
        let cb = ChevalleyBasis::build(pd.rs_arc())?;
        println!("{}\n", condition_h_solve(&pd, &cb)?);
    }

    let pd = ParabolicData::build(Family::B, 4, 4)?;
    let cb = ChevalleyBasis::build(pd.rs_arc())?;
    println!("Jacobi failures on B4: {}", cb.jacobi_failures());
    let t = type2_identity(&pd, &cb)?;
    println!(
        "{}: {} = {} ({})",
        t.label,
        t.lhs,
        t.rhs,
        if t.holds { "ok" } else { "FAILED" }
    );

    for (f, n, i) in [(Family::C, 5, 3), (Family::F, 4, 4)] {
        let pd = ParabolicData::build(f, n, i)?;
        let cb = ChevalleyBasis::build(pd.rs_arc())?;
        let r = type2_reachability(&pd, &cb)?;
        println!("{}: {} -> {} via {:?}", r.label, r.start, r.end, r.path);
    }
    Ok(())
}
