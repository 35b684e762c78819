//! Maximal parabolic subalgebras, their gradings and Levi factors.
//!
//! Nodes are 1-based in every public signature (Bourbaki labels); the
//! `crossed` field is the 0-based index of `α_q` among the simple roots.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{Family, RootSystem, Weight};

/// Grading data of `q = l ⊕ g(1) ⊕ z(n)` for one crossed node.
#[derive(Clone, Debug)]
pub struct ParabolicData {
    rs: Arc<RootSystem>,
    crossed: usize,
    level: Vec<i64>,
    delta_l: Vec<usize>,
    delta_g1: Vec<usize>,
    delta_zn: Vec<usize>,
    depth: i64,
    pi_l: Vec<usize>,
}

impl ParabolicData {
    pub fn new(rs: Arc<RootSystem>, node: usize) -> Result<Self> {
        if node == 0 || node > rs.rank() {
            return Err(Error::InvalidNode {
                family: rs.family(),
                rank: rs.rank(),
                node,
            });
        }
        let crossed = node - 1;
        let level: Vec<i64> = rs.positive_roots().iter().map(|r| r[crossed]).collect();
        let depth = level.iter().copied().max().unwrap_or(0);
        let by_level =
            |k: i64| -> Vec<usize> { (0..level.len()).filter(|&i| level[i] == k).collect() };
        let delta_l = by_level(0);
        let delta_g1 = by_level(1);
        let delta_zn = if depth >= 2 {
            by_level(depth)
        } else {
            Vec::new()
        };
        let pi_l = (0..rs.rank()).filter(|&i| i != crossed).collect();
        Ok(Self {
            rs,
            crossed,
            level,
            delta_l,
            delta_g1,
            delta_zn,
            depth,
            pi_l,
        })
    }

    /// Builds the root system and the parabolic in one step.
    pub fn build(family: Family, rank: usize, node: usize) -> Result<Self> {
        Self::new(Arc::new(RootSystem::build(family, rank)?), node)
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rs_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    /// 0-based index of `α_q`.
    pub fn crossed(&self) -> usize {
        self.crossed
    }

    /// 1-based Bourbaki label of `α_q`.
    pub fn node(&self) -> usize {
        self.crossed + 1
    }

    pub fn label(&self) -> String {
        format!("{}({})", self.rs.label(), self.node())
    }

    /// Multiplicity of `α_q` in the positive root `idx`.
    pub fn level(&self, idx: usize) -> i64 {
        self.level[idx]
    }

    pub fn depth(&self) -> i64 {
        self.depth
    }

    /// `Δ⁺(l)` as positive-root indices.
    pub fn delta_l(&self) -> &[usize] {
        &self.delta_l
    }

    /// `Δ(g(1))`
    pub fn delta_g1(&self) -> &[usize] {
        &self.delta_g1
    }

    /// `Δ(z(n))`: top-level roots (empty for abelian nilradicals).
    pub fn delta_zn(&self) -> &[usize] {
        &self.delta_zn
    }

    /// `Π(l) = Π \ {α_q}` as 0-based simple indices.
    pub fn pi_l(&self) -> &[usize] {
        &self.pi_l
    }

    pub fn is_quasi_heisenberg(&self) -> bool {
        self.depth == 2 && self.delta_zn.len() > 1
    }

    pub fn lambda_q(&self) -> &Weight {
        self.rs.fundamental_weight(self.crossed)
    }

    pub fn alpha_q(&self) -> Weight {
        self.rs.simple_root(self.crossed)
    }

    pub fn roots_of(&self, idxs: &[usize]) -> Vec<Weight> {
        idxs.iter().map(|&i| self.rs.positive_root(i)).collect()
    }

    /// Highest weight `μ` of `g(1)`.
    pub fn mu(&self) -> Result<Weight> {
        extreme_weight(
            &self.rs,
            &self.roots_of(&self.delta_g1),
            &self.pi_l,
            Extreme::Highest,
        )
    }

    pub fn is_g1_root(&self, w: &Weight) -> bool {
        matches!(self.rs.find_root(w), Some((i, true)) if self.level[i] == 1)
    }

    /// `⟨w, α^∨⟩ ≥ 0` for all `α ∈ Π(l)`.
    pub fn is_levi_dominant(&self, w: &Weight) -> bool {
        self.pi_l
            .iter()
            .all(|&i| !self.rs.pairing_simple(w, i).is_negative())
    }

    fn require_qh(&self) -> Result<()> {
        if self.is_quasi_heisenberg() {
            Ok(())
        } else {
            Err(Error::NotQuasiHeisenberg {
                family: self.rs.family(),
                rank: self.rs.rank(),
                node: self.node(),
            })
        }
    }

    /// Splits `l` into `l_γ` and `l_{nγ}`.
    pub fn levi_structure(&self) -> Result<LeviStructure> {
        if self.rs.family() == Family::A {
            return Err(Error::TypeA);
        }
        self.require_qh()?;
        let rs = &*self.rs;
        let components = components(rs, &self.pi_l);
        if components.len() > 2 {
            return Err(Error::ThreeFactorLevi {
                family: rs.family(),
                rank: rs.rank(),
                node: self.node(),
                factors: components.len(),
            });
        }
        let gamma = rs.highest_root();
        let gw = rs.positive_root(gamma);
        let attached: Vec<usize> = (0..rs.rank())
            .filter(|&i| !rs.pairing_simple(&gw, i).is_zero())
            .collect();
        if attached.len() != 1 {
            return Err(Error::TypeA);
        }
        let alpha_gamma = attached[0];
        let gi = components
            .iter()
            .position(|c| c.contains(&alpha_gamma))
            .ok_or_else(|| Error::Invariant("α_γ is the crossed node".into()))?;
        let l_gamma = components[gi].clone();
        let l_ngamma: Vec<usize> = components
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != gi)
            .flat_map(|(_, c)| c.iter().copied())
            .collect();
        let delta_l_gamma = self.supported_in(&l_gamma);
        let delta_l_ngamma = self.supported_in(&l_ngamma);
        let xi_gamma = top_root(rs, &delta_l_gamma)
            .ok_or_else(|| Error::Invariant("l_γ has no roots".into()))?;
        let xi_ngamma = top_root(rs, &delta_l_ngamma);
        Ok(LeviStructure {
            components,
            alpha_gamma,
            l_gamma,
            l_ngamma,
            gamma,
            xi_gamma,
            xi_ngamma,
            delta_l_gamma,
            delta_l_ngamma,
        })
    }

    /// Level-0 positive roots whose support lies in `nodes`.
    fn supported_in(&self, nodes: &[usize]) -> Vec<usize> {
        self.delta_l
            .iter()
            .copied()
            .filter(|&r| {
                self.rs.positive_roots()[r]
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || nodes.contains(&k))
            })
            .filter(|_| !nodes.is_empty())
            .collect()
    }
}

fn top_root(rs: &RootSystem, roots: &[usize]) -> Option<usize> {
    // positive roots are sorted by height, so the last one is highest
    let top = *roots.iter().max()?;
    let h = rs.positive_root(top).height();
    let tied = roots
        .iter()
        .filter(|&&r| rs.positive_root(r).height() == h)
        .count();
    (tied == 1).then_some(top)
}

/// Connected components of the Dynkin subgraph on `nodes`, each sorted.
pub fn components(rs: &RootSystem, nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &start in nodes {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in nodes {
                if !seen.contains(&w) && !rs.gram()[(v, w)].is_zero() {
                    seen.insert(w);
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

/// `l = C H_q ⊕ l_γ ⊕ l_{nγ}` data. All indices 0-based; root fields are
/// positive-root indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviStructure {
    pub components: Vec<Vec<usize>>,
    pub alpha_gamma: usize,
    pub l_gamma: Vec<usize>,
    pub l_ngamma: Vec<usize>,
    pub gamma: usize,
    pub xi_gamma: usize,
    pub xi_ngamma: Option<usize>,
    pub delta_l_gamma: Vec<usize>,
    pub delta_l_ngamma: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extreme {
    Highest,
    Lowest,
}

/// Unique highest (or lowest) element of a weight support with respect to
/// the simple roots in `pi_l`.
pub fn extreme_weight(
    rs: &RootSystem,
    support: &[Weight],
    pi_l: &[usize],
    which: Extreme,
) -> Result<Weight> {
    let set: HashSet<&Weight> = support.iter().collect();
    let cands: Vec<&Weight> = support
        .iter()
        .filter(|w| {
            pi_l.iter().all(|&i| {
                let a = rs.simple_root(i);
                let next = match which {
                    Extreme::Highest => *w + &a,
                    Extreme::Lowest => *w - &a,
                };
                !set.contains(&next)
            })
        })
        .collect();
    match cands.as_slice() {
        [one] => Ok((*one).clone()),
        _ => Err(Error::NonUniqueExtreme(cands.len())),
    }
}

/// A quasi-Heisenberg maximal parabolic, identified by `(family, rank, node)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QhCase {
    pub family: Family,
    pub rank: usize,
    pub node: usize,
}

impl QhCase {
    pub fn new(family: Family, rank: usize, node: usize) -> Self {
        Self { family, rank, node }
    }
}

impl fmt::Display for QhCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}({})", self.family, self.rank, self.node)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ScanResult {
    /// Quasi-Heisenberg parabolics with a two-factor Levi subalgebra.
    pub cases: Vec<QhCase>,
    /// Quasi-Heisenberg parabolics whose Levi has three simple factors
    /// (`D_n(n-2)`); reported separately and left out of `cases`.
    pub three_factor: Vec<QhCase>,
}

/// Every maximal parabolic of every simple type with rank at most `max_rank`
/// whose nilradical is quasi-Heisenberg.
pub fn scan_quasi_heisenberg(max_rank: usize) -> ScanResult {
    let mut out = ScanResult::default();
    for family in Family::ALL {
        for rank in 1..=max_rank {
            let Ok(rs) = RootSystem::build(family, rank) else {
                continue;
            };
            let (two, three) = quasi_heisenberg_nodes(&Arc::new(rs));
            out.cases
                .extend(two.into_iter().map(|i| QhCase::new(family, rank, i)));
            out.three_factor
                .extend(three.into_iter().map(|i| QhCase::new(family, rank, i)));
        }
    }
    out
}

/// Quasi-Heisenberg nodes (1-based) of one system, split into two-factor
/// and three-factor Levi subalgebras.
pub fn quasi_heisenberg_nodes(rs: &Arc<RootSystem>) -> (Vec<usize>, Vec<usize>) {
    let (mut two, mut three) = (Vec::new(), Vec::new());
    for node in 1..=rs.rank() {
        let pd = ParabolicData::new(Arc::clone(rs), node).expect("valid node");
        if !pd.is_quasi_heisenberg() {
            continue;
        }
        if components(rs, pd.pi_l()).len() > 2 {
            three.push(node);
        } else {
            two.push(node);
        }
    }
    (two, three)
}

/// The quasi-Heisenberg list written out by formula, for `rank <= max_rank`.
pub fn expected_quasi_heisenberg(max_rank: usize) -> BTreeSet<QhCase> {
    let mut s = BTreeSet::new();
    for n in 2..=max_rank {
        for i in 3..=n {
            s.insert(QhCase::new(Family::B, n, i));
        }
        if n >= 3 {
            for i in 2..n {
                s.insert(QhCase::new(Family::C, n, i));
            }
        }
        if n >= 4 {
            for i in 3..=n.saturating_sub(3) {
                s.insert(QhCase::new(Family::D, n, i));
            }
        }
    }
    for (f, n, i) in [
        (Family::E, 6, 3),
        (Family::E, 6, 5),
        (Family::E, 7, 2),
        (Family::E, 7, 6),
        (Family::E, 8, 1),
        (Family::F, 4, 4),
    ] {
        if n <= max_rank {
            s.insert(QhCase::new(f, n, i));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn pd(f: Family, n: usize, i: usize) -> ParabolicData {
        ParabolicData::build(f, n, i).unwrap()
    }

    #[test]
    fn b5_node3_grading() {
        let p = pd(Family::B, 5, 3);
        assert_eq!(p.depth(), 2);
        assert_eq!(p.delta_zn().len(), 3);
        assert!(p.is_quasi_heisenberg());
        assert_eq!(
            p.delta_l().len() + p.delta_g1().len() + p.delta_zn().len(),
            p.rs().num_positive()
        );
    }

    #[test]
    fn abelian_and_g2_cases() {
        for i in 1..=4 {
            let p = pd(Family::A, 4, i);
            assert_eq!(p.depth(), 1);
            assert!(!p.is_quasi_heisenberg());
        }
        assert_eq!(pd(Family::G, 2, 1).depth(), 3);
        let g2 = pd(Family::G, 2, 2);
        assert_eq!((g2.depth(), g2.delta_zn().len()), (2, 1));
    }

    #[test]
    fn invalid_node() {
        assert!(matches!(
            ParabolicData::build(Family::B, 5, 6),
            Err(Error::InvalidNode { .. })
        ));
        assert!(ParabolicData::build(Family::B, 5, 0).is_err());
    }

    #[test]
    fn scan_matches_formula_list() {
        let r = scan_quasi_heisenberg(8);
        let got: BTreeSet<_> = r.cases.iter().copied().collect();
        assert_eq!(got, expected_quasi_heisenberg(8));
        assert_eq!(got.len(), r.cases.len());
        for c in &r.three_factor {
            assert_eq!((c.family, c.node), (Family::D, c.rank - 2));
        }
        assert!(scan_quasi_heisenberg(2).cases.is_empty());
    }

    #[test]
    fn level_is_additive() {
        let p = pd(Family::E, 7, 6);
        let rs = p.rs();
        for a in 0..rs.num_positive() {
            for b in 0..rs.num_positive() {
                let s = &rs.positive_root(a) + &rs.positive_root(b);
                if let Some((c, true)) = rs.find_root(&s) {
                    assert_eq!(p.level(c), p.level(a) + p.level(b));
                }
            }
        }
    }

    #[test]
    fn levi_e7_6() {
        let p = pd(Family::E, 7, 6);
        let ls = p.levi_structure().unwrap();
        let rs = p.rs();
        assert_eq!(ls.alpha_gamma, 0);
        assert_eq!(rs.positive_roots()[ls.xi_gamma], vec![1, 1, 2, 2, 1, 0, 0]);
        assert_eq!(
            rs.positive_roots()[ls.xi_ngamma.unwrap()],
            vec![0, 0, 0, 0, 0, 0, 1]
        );
    }

    #[test]
    fn levi_b5_5_has_no_ngamma() {
        let ls = pd(Family::B, 5, 5).levi_structure().unwrap();
        assert!(ls.l_ngamma.is_empty());
        assert!(ls.xi_ngamma.is_none());
        assert!(ls.delta_l_ngamma.is_empty());
    }

    #[test]
    fn levi_f4_4() {
        let p = pd(Family::F, 4, 4);
        let ls = p.levi_structure().unwrap();
        assert_eq!(p.rs().positive_roots()[ls.xi_gamma], vec![1, 2, 2, 0]);
    }

    #[test]
    fn levi_rejections() {
        assert!(matches!(
            pd(Family::A, 5, 2).levi_structure(),
            Err(Error::TypeA)
        ));
        assert!(matches!(
            pd(Family::D, 7, 5).levi_structure(),
            Err(Error::ThreeFactorLevi { factors: 3, .. })
        ));
        assert!(matches!(
            pd(Family::B, 5, 2).levi_structure(),
            Err(Error::NotQuasiHeisenberg { .. })
        ));
    }

    #[test]
    fn extreme_weights_b_series() {
        for n in 5..=7 {
            for i in 3..n {
                let p = pd(Family::B, n, i);
                let rs = p.rs();
                let e = |k: usize| rs.eps_unit(k).unwrap();
                assert_eq!(p.mu().unwrap(), &e(1) + &e(i + 1));
                let low = extreme_weight(rs, &p.roots_of(p.delta_g1()), p.pi_l(), Extreme::Lowest)
                    .unwrap();
                assert_eq!(low, p.alpha_q());
                let zl = extreme_weight(rs, &p.roots_of(p.delta_zn()), p.pi_l(), Extreme::Lowest)
                    .unwrap();
                assert_eq!(zl, &e(i - 1) + &e(i));
                let zh = extreme_weight(rs, &p.roots_of(p.delta_zn()), p.pi_l(), Extreme::Highest)
                    .unwrap();
                assert_eq!(zh, rs.positive_root(rs.highest_root()));
            }
        }
    }

    #[test]
    fn extreme_weight_rejects_reducible_support() {
        let p = pd(Family::B, 5, 3);
        let rs = p.rs();
        let mut support = p.roots_of(p.delta_g1());
        support.extend(p.roots_of(p.delta_zn()));
        // g(1) ⊕ z(n) has two Π(l)-highest weights
        assert!(matches!(
            extreme_weight(rs, &support, p.pi_l(), Extreme::Highest),
            Err(Error::NonUniqueExtreme(2))
        ));
    }

    #[test]
    fn levi_dominance_of_rho() {
        let p = pd(Family::D, 7, 4);
        assert!(p.is_levi_dominant(p.rs().rho()));
        assert!(!p.is_levi_dominant(&p.rs().rho().scale(q(-1))));
    }
}
