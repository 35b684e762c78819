//! Searches for BGG links and replays the certificates.

use qhverma::linkage::{link_exists, verify_link, DEFAULT_BUDGET};
use qhverma::notation::parse_weight;
use qhverma::{Family, RootSystem};

fn main() -> qhverma::Result<()> {
    let e6 = RootSystem::build(Family::E, 6)?;
    let from = parse_weight("rho - w3 - a4", &e6)?;
    let to = parse_weight("rho - w3 - a1 - 2*a3 - a4", &e6)?;
    let cert = link_exists(&e6, &from, &to, DEFAULT_BUDGET)?;
    verify_link(&e6, &from, &to, &cert.sequence)?;
    println!("E6: {cert}");
    for s in &cert.sequence {
        println!(
            "  reflect in {} (pairing {})",
            e6.render(&s.root),
            s.pairing
        );
    }

    // no link: the γ-constituent of B5(3) at s0 = 3/2
    let b5 = RootSystem::build(Family::B, 5)?;
    let base = parse_weight("rho - 3/2*w3", &b5)?;
    let target = &base
        - &b5
            .eps_unit(3)
            .expect("classical")
            .scale(qhverma::rational::q(2));
    for a in [0, 1, 3, 4] {
        let from = &base - &b5.simple_root(a);
        let c = link_exists(&b5, &from, &target, DEFAULT_BUDGET)?;
        println!("B5, from -α{} - 3/2 λ3 + ρ: {c}", a + 1);
    }
    Ok(())
}
