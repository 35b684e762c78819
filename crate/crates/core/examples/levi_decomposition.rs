//! Grading of g by a maximal parabolic and the split of l into l_γ and l_nγ.
//!
//!     cargo run --example levi_decomposition -- D 7 4

use qhverma::parabolic::ParabolicData;
use qhverma::Family;

fn main() -> qhverma::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (family, rank, node) = match args.as_slice() {
        [f, n, i] => (
            f.parse::<Family>()?,
            n.parse().unwrap_or(5),
            i.parse().unwrap_or(3),
        ),
        _ => (Family::E, 6, 3),
    };
    let pd = ParabolicData::build(family, rank, node)?;
    let rs = pd.rs();
    let show = |idx: &[usize]| {
        idx.iter()
            .map(|&r| rs.render(&rs.positive_root(r)))
            .collect::<Vec<_>>()
            .join(", ")
    };

    println!(
        "{}: depth {}, quasi-Heisenberg: {}",
        pd.label(),
        pd.depth(),
        pd.is_quasi_heisenberg()
    );
    println!(
        "Δ(g(1))  [{}]: {}",
        pd.delta_g1().len(),
        show(pd.delta_g1())
    );
    println!(
        "Δ(z(n))  [{}]: {}",
        pd.delta_zn().len(),
        show(pd.delta_zn())
    );
    println!("μ = {}", rs.render(&pd.mu()?));

    let ls = pd.levi_structure()?;
    println!("α_γ = α{}", ls.alpha_gamma + 1);
    println!("γ = {}", rs.render(&rs.positive_root(ls.gamma)));
    println!(
        "l_γ nodes {:?}, ξ_γ = {}",
        ls.l_gamma.iter().map(|i| i + 1).collect::<Vec<_>>(),
        rs.render(&rs.positive_root(ls.xi_gamma))
    );
    match ls.xi_ngamma {
        Some(x) => println!(
            "l_nγ nodes {:?}, ξ_nγ = {}",
            ls.l_ngamma.iter().map(|i| i + 1).collect::<Vec<_>>(),
            rs.render(&rs.positive_root(x))
        ),
        None => println!("l_nγ = 0"),
    }
    Ok(())
}
