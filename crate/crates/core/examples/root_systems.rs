//! Builds a few root systems and prints their basic data.
//!
//!     cargo run --example root_systems -- B5

use qhverma::roots::parse_system_label;
use qhverma::RootSystem;

fn main() -> qhverma::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "B4".into());
    let (family, rank) = parse_system_label(&label)?;
    let rs = RootSystem::build(family, rank)?;

    println!("{}: {} positive roots", rs.label(), rs.num_positive());
    println!("rho = {}", rs.render(rs.rho()));
    for (i, w) in rs.fundamental_weights().iter().enumerate() {
        println!("w{} = {}", i + 1, rs.render(w));
    }
    println!(
        "highest root {}",
        rs.render(&rs.positive_root(rs.highest_root()))
    );

    let mut by_height = std::collections::BTreeMap::<i64, usize>::new();
    for k in 0..rs.num_positive() {
        *by_height
            .entry(rs.positive_root(k).height().to_integer())
            .or_default() += 1;
    }
    for (h, n) in by_height {
        println!("  height {h:>2}: {n}");
    }
    Ok(())
}
