#![allow(dead_code)]

use std::collections::BTreeSet;

use qhverma::parabolic::{LeviStructure, ParabolicData};
use qhverma::rational::q;
use qhverma::{Family, RootSystem, Weight, Q};

pub type EpsSet = BTreeSet<Vec<Q>>;

fn unit(n: usize, k: usize, c: i64) -> Vec<Q> {
    let mut v = vec![q(0); n];
    v[k - 1] = q(c);
    v
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `ε_j ± ε_k` over the given index pairs (`±` as requested).
fn pm(n: usize, pairs: impl Iterator<Item = (usize, usize)>, minus: bool) -> EpsSet {
    let mut s = EpsSet::new();
    for (j, k) in pairs {
        s.insert(add(&unit(n, j, 1), &unit(n, k, 1)));
        if minus {
            s.insert(add(&unit(n, j, 1), &unit(n, k, -1)));
        }
    }
    s
}

fn minus_only(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> EpsSet {
    pairs
        .map(|(j, k)| add(&unit(n, j, 1), &unit(n, k, -1)))
        .collect()
}

fn singles(n: usize, ks: impl Iterator<Item = usize>, c: i64) -> EpsSet {
    ks.map(|k| unit(n, k, c)).collect()
}

fn lower_pairs(lo: usize, hi: usize) -> impl Iterator<Item = (usize, usize)> {
    (lo..=hi).flat_map(move |j| (j + 1..=hi).map(move |k| (j, k)))
}

fn cross_pairs(i: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=i).flat_map(move |j| (i + 1..=n).map(move |k| (j, k)))
}

/// Reference data for one case, written out from closed formulas.
pub struct Appendix {
    pub alpha_gamma: usize,
    pub mu: Weight,
    pub gamma: Weight,
    pub xi_gamma: Weight,
    pub xi_ngamma: Option<Weight>,
    /// ε-coordinates of Δ(g(1)), Δ(z(n)), Δ⁺(l_γ), Δ⁺(l_{nγ}); classical only
    pub sets: Option<[EpsSet; 4]>,
}

fn eps_w(rs: &RootSystem, v: Vec<Q>) -> Weight {
    rs.from_eps(&v).expect("ε-vector is a weight")
}

fn classical(rs: &RootSystem, i: usize) -> Appendix {
    let n = rs.rank();
    let u = |k: usize, c: i64| unit(n, k, c);
    let e = |v: Vec<Q>| eps_w(rs, v);
    match rs.family() {
        Family::B => {
            let mu = if i == n {
                u(1, 1)
            } else {
                add(&u(1, 1), &u(i + 1, 1))
            };
            let xi_ngamma = if i == n {
                None
            } else if i == n - 1 {
                Some(e(u(n, 1)))
            } else {
                Some(e(add(&u(i + 1, 1), &u(i + 2, 1))))
            };
            let mut g1 = pm(n, cross_pairs(i, n), true);
            g1.extend(singles(n, 1..=i, 1));
            let mut lng = pm(n, lower_pairs(i + 1, n), true);
            lng.extend(singles(n, i + 1..=n, 1));
            Appendix {
                alpha_gamma: 2,
                mu: e(mu),
                gamma: e(add(&u(1, 1), &u(2, 1))),
                xi_gamma: e(add(&u(1, 1), &u(i, -1))),
                xi_ngamma,
                sets: Some([
                    g1,
                    pm(n, lower_pairs(1, i), false),
                    minus_only(n, lower_pairs(1, i)),
                    lng,
                ]),
            }
        }
        Family::C => {
            let mut zn = pm(n, lower_pairs(1, i), false);
            zn.extend(singles(n, 1..=i, 2));
            let mut lng = pm(n, lower_pairs(i + 1, n), true);
            lng.extend(singles(n, i + 1..=n, 2));
            Appendix {
                alpha_gamma: 1,
                mu: e(add(&u(1, 1), &u(i + 1, 1))),
                gamma: e(u(1, 2)),
                xi_gamma: e(add(&u(1, 1), &u(i, -1))),
                xi_ngamma: Some(e(u(i + 1, 2))),
                sets: Some([
                    pm(n, cross_pairs(i, n), true),
                    zn,
                    minus_only(n, lower_pairs(1, i)),
                    lng,
                ]),
            }
        }
        Family::D => Appendix {
            alpha_gamma: 2,
            mu: e(add(&u(1, 1), &u(i + 1, 1))),
            gamma: e(add(&u(1, 1), &u(2, 1))),
            xi_gamma: e(add(&u(1, 1), &u(i, -1))),
            xi_ngamma: Some(e(add(&u(i + 1, 1), &u(i + 2, 1)))),
            sets: Some([
                pm(n, cross_pairs(i, n), true),
                pm(n, lower_pairs(1, i), false),
                minus_only(n, lower_pairs(1, i)),
                pm(n, lower_pairs(i + 1, n), true),
            ]),
        },
        _ => unreachable!(),
    }
}

fn exceptional(f: Family, n: usize, i: usize) -> Appendix {
    let w = |c: &[i64]| Weight::from_ints(c);
    type Row<'a> = (usize, &'a [i64], &'a [i64], &'a [i64], Option<&'a [i64]>);
    let (ag, mu, gamma, xg, xng): Row = match (f, n, i) {
        (Family::E, 6, 3) => (
            2,
            &[1, 1, 1, 2, 2, 1],
            &[1, 2, 2, 3, 2, 1],
            &[0, 1, 0, 1, 1, 1],
            Some(&[1, 0, 0, 0, 0, 0]),
        ),
        (Family::E, 6, 5) => (
            2,
            &[1, 1, 2, 2, 1, 1],
            &[1, 2, 2, 3, 2, 1],
            &[1, 1, 1, 1, 0, 0],
            Some(&[0, 0, 0, 0, 0, 1]),
        ),
        (Family::E, 7, 2) => (
            1,
            &[1, 1, 2, 3, 3, 2, 1],
            &[2, 2, 3, 4, 3, 2, 1],
            &[1, 0, 1, 1, 1, 1, 1],
            None,
        ),
        (Family::E, 7, 6) => (
            1,
            &[1, 2, 2, 3, 2, 1, 1],
            &[2, 2, 3, 4, 3, 2, 1],
            &[1, 1, 2, 2, 1, 0, 0],
            Some(&[0, 0, 0, 0, 0, 0, 1]),
        ),
        (Family::E, 8, 1) => (
            8,
            &[1, 3, 3, 5, 4, 3, 2, 1],
            &[2, 3, 4, 6, 5, 4, 3, 2],
            &[0, 1, 1, 2, 2, 2, 2, 1],
            None,
        ),
        (Family::F, 4, 4) => (1, &[1, 2, 3, 1], &[2, 3, 4, 2], &[1, 2, 2, 0], None),
        _ => panic!("no reference data for {f}{n}({i})"),
    };
    Appendix {
        alpha_gamma: ag,
        mu: w(mu),
        gamma: w(gamma),
        xi_gamma: w(xg),
        xi_ngamma: xng.map(w),
        sets: None,
    }
}

pub fn appendix(pd: &ParabolicData) -> Appendix {
    let rs = pd.rs();
    if rs.family().is_classical() {
        classical(rs, pd.node())
    } else {
        exceptional(rs.family(), rs.rank(), pd.node())
    }
}

fn eps_of(rs: &RootSystem, idx: &[usize]) -> EpsSet {
    idx.iter()
        .map(|&r| rs.to_eps(&rs.positive_root(r)).expect("classical"))
        .collect()
}

/// Compares the computed grading and Levi data against the formulas.
pub fn check_appendix(pd: &ParabolicData) -> Result<(), String> {
    let rs = pd.rs();
    let ls: LeviStructure = pd.levi_structure().map_err(|e| e.to_string())?;
    let want = appendix(pd);
    let label = pd.label();
    let mut errs = Vec::new();
    let mut cmp = |what: &str, got: &Weight, exp: &Weight| {
        if got != exp {
            errs.push(format!(
                "{label} {what}: {} != {}",
                rs.render(got),
                rs.render(exp)
            ));
        }
    };
    cmp("μ", &pd.mu().map_err(|e| e.to_string())?, &want.mu);
    cmp("γ", &rs.positive_root(ls.gamma), &want.gamma);
    cmp("ξ_γ", &rs.positive_root(ls.xi_gamma), &want.xi_gamma);
    match (ls.xi_ngamma, &want.xi_ngamma) {
        (Some(x), Some(w)) => cmp("ξ_nγ", &rs.positive_root(x), w),
        (None, None) => {}
        _ => errs.push(format!("{label}: l_nγ presence differs")),
    }
    if ls.alpha_gamma + 1 != want.alpha_gamma {
        errs.push(format!(
            "{label} α_γ: α{} != α{}",
            ls.alpha_gamma + 1,
            want.alpha_gamma
        ));
    }
    if let Some(sets) = &want.sets {
        let got = [
            eps_of(rs, pd.delta_g1()),
            eps_of(rs, pd.delta_zn()),
            eps_of(rs, &ls.delta_l_gamma),
            eps_of(rs, &ls.delta_l_ngamma),
        ];
        for (name, (g, w)) in ["Δ(g(1))", "Δ(z(n))", "Δ⁺(l_γ)", "Δ⁺(l_nγ)"]
            .iter()
            .zip(got.iter().zip(sets))
        {
            if g != w {
                errs.push(format!(
                    "{label} {name}: {} computed vs {} expected",
                    g.len(),
                    w.len()
                ));
            }
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs.join("; "))
    }
}

/// Every valid system of rank at most `max_rank`.
pub fn all_systems(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in 1..=max_rank {
            if let Ok(rs) = RootSystem::build(f, n) {
                out.push(rs);
            }
        }
    }
    out
}
