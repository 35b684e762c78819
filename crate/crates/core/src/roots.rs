//! Root systems of the simple Lie algebras with exact arithmetic.
//!
//! Weights are stored as rational coordinates in the basis of simple roots,
//! with Bourbaki node numbering. The inner product is the Gram matrix of the
//! simple roots, normalized so that long roots have squared length 2. Positive
//! roots are enumerated by closure from the simple roots using root strings;
//! no tables of roots are hard-coded.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{fmt_q, q, qf, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    /// Whether `(self, rank)` names a simple Lie algebra under the usual
    /// non-overlapping ranges.
    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Parses labels like `B5` or `e8`.
pub fn parse_system_label(s: &str) -> Result<(Family, usize)> {
    let s = s.trim();
    let mut chars = s.chars();
    let fam: Family = chars
        .next()
        .ok_or_else(|| Error::Parse("empty system label".into()))?
        .to_string()
        .parse()?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad system label {s:?}")))?;
    Ok((fam, rank))
}

/// A weight in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(#[serde(with = "crate::rational::serde_qvec")] pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Q::zero(); rank])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Weight(c.iter().map(|&x| q(x)).collect())
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    /// Sum of coordinates.
    pub fn height(&self) -> Q {
        self.0.iter().sum()
    }

    pub fn scale(&self, c: Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// Parses a comma separated list of rationals.
    pub fn parse_list(s: &str) -> Result<Weight> {
        s.split(',')
            .map(crate::rational::parse_q)
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_q).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for Q {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(self)
    }
}

/// Orthonormal ε-coordinates for the classical types B, C, D.
#[derive(Clone, Debug)]
struct EpsBasis {
    /// row i = simple root i in ε-coordinates
    simple: Matrix,
    inverse: Matrix,
}

/// Immutable catalogue of a simple root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    simple_len2: Vec<Q>,
    gram: Matrix,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    /// `coroot[b]` is the vector `v` with `<w, b^vee> = w . v`
    coroot: Vec<Vec<Q>>,
    len2: Vec<Q>,
    max_len2: Q,
    rho: Weight,
    fundamental: Vec<Weight>,
    eps: Option<EpsBasis>,
}

/// Dynkin data: edges (0-based) and squared lengths of simple roots.
fn dynkin(family: Family, n: usize) -> (Vec<(usize, usize)>, Vec<Q>) {
    let chain = |k: usize| {
        (0..k.saturating_sub(1))
            .map(|i| (i, i + 1))
            .collect::<Vec<_>>()
    };
    match family {
        Family::A => (chain(n), vec![q(2); n]),
        Family::B => {
            let mut l = vec![q(2); n];
            l[n - 1] = q(1);
            (chain(n), l)
        }
        Family::C => {
            let mut l = vec![q(1); n];
            l[n - 1] = q(2);
            (chain(n), l)
        }
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![q(2); n])
        }
        Family::E => {
            // 1-3-4-5-...-n with 2 attached to 4
            let mut e = vec![(0, 2), (1, 3)];
            for i in 2..n - 1 {
                e.push((i, i + 1));
            }
            (e, vec![q(2); n])
        }
        Family::F => (chain(4), vec![q(2), q(2), q(1), q(1)]),
        Family::G => (chain(2), vec![qf(2, 3), q(2)]),
    }
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        if !family.valid_rank(rank) {
            let reason = match family {
                Family::A => "A_n needs n >= 1",
                Family::B => "B_n needs n >= 2",
                Family::C => "C_n needs n >= 3",
                Family::D => "D_n needs n >= 4",
                Family::E => "E_n needs 6 <= n <= 8",
                Family::F => "only F4 exists",
                Family::G => "only G2 exists",
            };
            return Err(Error::InvalidSystem {
                family,
                rank,
                reason: reason.into(),
            });
        }
        let (edges, simple_len2) = dynkin(family, rank);
        let mut gram = Matrix::zeros(rank, rank);
        for i in 0..rank {
            gram[(i, i)] = simple_len2[i];
        }
        for &(i, j) in &edges {
            let v = -simple_len2[i].max(simple_len2[j]) / q(2);
            gram[(i, j)] = v;
            gram[(j, i)] = v;
        }

        let positive = enumerate_positive_roots(&gram, &simple_len2);
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let mut coroot = Vec::with_capacity(positive.len());
        let mut len2 = Vec::with_capacity(positive.len());
        for r in &positive {
            let w = Weight::from_ints(r);
            let gw = gram.mul_vec(w.coords());
            let l2: Q = w.coords().iter().zip(&gw).map(|(a, b)| a * b).sum();
            coroot.push(gw.iter().map(|x| q(2) * x / l2).collect());
            len2.push(l2);
        }
        let max_len2 = len2.iter().copied().max().unwrap_or_else(|| q(2));

        let mut rho = Weight::zero(rank);
        for r in &positive {
            rho += &Weight::from_ints(r);
        }
        let rho = rho.scale(qf(1, 2));

        let ginv = gram
            .inverse()
            .ok_or_else(|| Error::Invariant("singular Gram matrix".into()))?;
        let fundamental = (0..rank)
            .map(|i| {
                let mut rhs = vec![Q::zero(); rank];
                rhs[i] = simple_len2[i] / q(2);
                Weight(ginv.mul_vec(&rhs))
            })
            .collect();

        let eps = eps_basis(family, rank);

        Ok(Self {
            family,
            rank,
            simple_len2,
            gram,
            positive,
            index,
            coroot,
            len2,
            max_len2,
            rho,
            fundamental,
            eps,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Squared length of simple root `i` (0-based).
    pub fn simple_len2(&self, i: usize) -> Q {
        self.simple_len2[i]
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        let mut c = vec![0; self.rank];
        c[i] = 1;
        Weight::from_ints(&c)
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Positive roots as integer coefficient vectors, ordered by height; the
    /// first `rank` entries are the simple roots in Bourbaki order.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn positive_root(&self, idx: usize) -> Weight {
        Weight::from_ints(&self.positive[idx])
    }

    pub fn root_len2(&self, idx: usize) -> Q {
        self.len2[idx]
    }

    pub fn max_len2(&self) -> Q {
        self.max_len2
    }

    pub fn is_long(&self, idx: usize) -> bool {
        self.len2[idx] == self.max_len2
    }

    pub fn positive_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Locates a root: `(positive index, is_positive)`.
    pub fn find_root(&self, w: &Weight) -> Option<(usize, bool)> {
        if w.rank() != self.rank {
            return None;
        }
        let c = w.to_ints()?;
        if let Some(&i) = self.index.get(&c) {
            return Some((i, true));
        }
        let neg: Vec<i64> = c.iter().map(|x| -x).collect();
        self.index.get(&neg).map(|&i| (i, false))
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.find_root(w).is_some()
    }

    /// Index of the highest root.
    pub fn highest_root(&self) -> usize {
        self.positive.len() - 1
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Fundamental weight `λ_i` (0-based `i`).
    pub fn fundamental_weight(&self, i: usize) -> &Weight {
        &self.fundamental[i]
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub fn inner(&self, u: &Weight, v: &Weight) -> Q {
        let gv = self.gram.mul_vec(v.coords());
        u.coords().iter().zip(&gv).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self, u: &Weight) -> Q {
        self.inner(u, u)
    }

    /// `<w, β^∨>` for the positive root with index `idx`.
    pub fn pairing_idx(&self, w: &Weight, idx: usize) -> Q {
        w.coords()
            .iter()
            .zip(&self.coroot[idx])
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `<w, α_i^∨>` for simple root `i`.
    pub fn pairing_simple(&self, w: &Weight, i: usize) -> Q {
        let gw = self.gram.row(i);
        let ip: Q = w.coords().iter().zip(gw).map(|(a, b)| a * b).sum();
        q(2) * ip / self.simple_len2[i]
    }

    /// `<w, β^∨> = 2<w,β>/<β,β>`; `beta` must be a root.
    pub fn pairing(&self, w: &Weight, beta: &Weight) -> Result<Q> {
        self.check_rank(w)?;
        let (idx, pos) = self
            .find_root(beta)
            .ok_or_else(|| Error::NotARoot(beta.to_string()))?;
        let p = self.pairing_idx(w, idx);
        Ok(if pos { p } else { -p })
    }

    /// `s_β(w) = w - <w,β^∨> β`.
    pub fn reflect(&self, w: &Weight, beta: &Weight) -> Result<Weight> {
        let c = self.pairing(w, beta)?;
        Ok(w - &beta.scale(c))
    }

    pub fn reflect_idx(&self, w: &Weight, idx: usize) -> Weight {
        let c = self.pairing_idx(w, idx);
        let mut out = w.clone();
        for (x, r) in out.0.iter_mut().zip(&self.positive[idx]) {
            *x -= c * q(*r);
        }
        out
    }

    pub fn reflect_simple(&self, w: &Weight, i: usize) -> Weight {
        let c = self.pairing_simple(w, i);
        let mut out = w.clone();
        out.0[i] -= c;
        out
    }

    /// The element of the `W(subset)`-orbit of `w` that pairs non-negatively
    /// with every simple root in `subset` (0-based simple indices).
    pub fn dominant_representative(&self, w: &Weight, subset: &[usize]) -> Weight {
        let mut w = w.clone();
        'outer: loop {
            for &i in subset {
                if self.pairing_simple(&w, i).is_negative() {
                    w = self.reflect_simple(&w, i);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    pub fn has_eps(&self) -> bool {
        self.eps.is_some()
    }

    /// ε-coordinates (types B, C, D only).
    pub fn to_eps(&self, w: &Weight) -> Option<Vec<Q>> {
        let e = self.eps.as_ref()?;
        Some(e.simple.vec_mul(w.coords()))
    }

    /// Inverse of [`to_eps`](Self::to_eps).
    pub fn from_eps(&self, eps: &[Q]) -> Option<Weight> {
        let e = self.eps.as_ref()?;
        if eps.len() != self.rank {
            return None;
        }
        Some(Weight(e.inverse.vec_mul(eps)))
    }

    /// `ε_k` (1-based `k`) as a weight.
    pub fn eps_unit(&self, k: usize) -> Option<Weight> {
        if k == 0 || k > self.rank {
            return None;
        }
        let mut v = vec![Q::zero(); self.rank];
        v[k - 1] = q(1);
        self.from_eps(&v)
    }

    /// Human-readable rendering: ε-notation for B/C/D, α-notation otherwise.
    pub fn render(&self, w: &Weight) -> String {
        match self.to_eps(w) {
            Some(e) => render_linear(&e, "e"),
            None => render_linear(w.coords(), "a"),
        }
    }
}

/// Renders `Σ c_k sym_k` with 1-based subscripts, e.g. `2e1+e4`.
pub fn render_linear(coeffs: &[Q], sym: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if a != q(1) {
            out.push_str(&fmt_q(&a));
        }
        out.push_str(&format!("{sym}{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn eps_basis(family: Family, n: usize) -> Option<EpsBasis> {
    let mut rows = vec![vec![Q::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate().take(n - 1) {
        row[i] = q(1);
        row[i + 1] = q(-1);
    }
    match family {
        Family::B => rows[n - 1][n - 1] = q(1),
        Family::C => rows[n - 1][n - 1] = q(2),
        Family::D => {
            rows[n - 1][n - 2] = q(1);
            rows[n - 1][n - 1] = q(1);
        }
        _ => return None,
    }
    let simple = Matrix::from_rows(&rows);
    let inverse = simple.inverse()?;
    Some(EpsBasis { simple, inverse })
}

/// Closure of the simple roots under root strings. For a positive root β and
/// simple α_i, `β + α_i` is a root iff `p - <β, α_i^∨> > 0`, where `p` is the
/// largest k with `β - kα_i` a root; all such lower roots have smaller height
/// and are already known when β is processed.
fn enumerate_positive_roots(gram: &Matrix, len2: &[Q]) -> Vec<Vec<i64>> {
    let n = len2.len();
    let mut known: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    let mut all = Vec::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for r in &layer {
        known.insert(r.clone());
    }
    while !layer.is_empty() {
        // within a height, descending coefficient order puts α_1 first
        layer.sort_by(|a, b| b.cmp(a));
        all.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                if beta
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == i64::from(k == i))
                {
                    continue;
                }
                let mut p = 0;
                loop {
                    let mut b = beta.clone();
                    b[i] -= p + 1;
                    if known.contains(&b) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let ip: Q = (0..n).map(|k| q(beta[k]) * gram[(k, i)]).sum();
                let pair = q(2) * ip / len2[i];
                debug_assert!(pair.is_integer());
                if q(p) - pair > Q::zero() {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    all
}

/// Classical count of positive roots.
pub fn expected_positive_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_systems(max: usize) -> Vec<RootSystem> {
        let mut v = Vec::new();
        for f in Family::ALL {
            for n in 1..=max {
                if f.valid_rank(n) {
                    v.push(RootSystem::build(f, n).unwrap());
                }
            }
        }
        v
    }

    #[test]
    fn counts_match_classical_formulas() {
        for rs in all_systems(8) {
            assert_eq!(
                rs.num_positive(),
                expected_positive_count(rs.family(), rs.rank()),
                "{}",
                rs.label()
            );
        }
    }

    #[test]
    fn b5_and_e8_counts() {
        assert_eq!(RootSystem::build(Family::B, 5).unwrap().num_positive(), 25);
        assert_eq!(RootSystem::build(Family::E, 8).unwrap().num_positive(), 120);
    }

    #[test]
    fn a1_is_trivial() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(rs.positive_roots(), &[vec![1]]);
        assert_eq!(rs.rho(), &Weight(vec![qf(1, 2)]));
    }

    #[test]
    fn invalid_ranks_rejected() {
        for (f, n) in [
            (Family::B, 1),
            (Family::C, 2),
            (Family::D, 3),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            assert!(matches!(
                RootSystem::build(f, n),
                Err(Error::InvalidSystem { .. })
            ));
        }
    }

    #[test]
    fn rho_and_fundamental_pairings() {
        for rs in all_systems(8) {
            for i in 0..rs.rank() {
                assert_eq!(rs.pairing_simple(rs.rho(), i), q(1));
                for j in 0..rs.rank() {
                    let p = rs.pairing_simple(rs.fundamental_weight(i), j);
                    assert_eq!(p, q(i64::from(i == j)));
                }
            }
        }
    }

    #[test]
    fn highest_root_and_lengths() {
        let e8 = RootSystem::build(Family::E, 8).unwrap();
        assert_eq!(
            e8.positive_roots()[e8.highest_root()],
            vec![2, 3, 4, 6, 5, 4, 3, 2]
        );
        let f4 = RootSystem::build(Family::F, 4).unwrap();
        assert_eq!(f4.positive_roots()[f4.highest_root()], vec![2, 3, 4, 2]);
        let g2 = RootSystem::build(Family::G, 2).unwrap();
        assert_eq!(g2.positive_roots()[g2.highest_root()], vec![3, 2]);
        for rs in all_systems(8) {
            let top = rs.highest_root();
            assert_eq!(rs.root_len2(top), q(2));
            assert_eq!(rs.max_len2(), q(2));
        }
    }

    #[test]
    fn eps_coordinates_round_trip() {
        let b = RootSystem::build(Family::B, 5).unwrap();
        let e1 = b.eps_unit(1).unwrap();
        assert_eq!(e1, Weight::from_ints(&[1, 1, 1, 1, 1]));
        let c = RootSystem::build(Family::C, 4).unwrap();
        let two_e1 = c.eps_unit(1).unwrap().scale(q(2));
        assert_eq!(two_e1, Weight::from_ints(&[2, 2, 2, 1]));
        let d = RootSystem::build(Family::D, 6).unwrap();
        let e1e2 = &d.eps_unit(1).unwrap() + &d.eps_unit(2).unwrap();
        assert_eq!(
            e1e2.to_ints().unwrap(),
            d.positive_roots()[d.highest_root()]
        );
        for rs in [&b, &c, &d] {
            for r in rs.positive_roots() {
                let w = Weight::from_ints(r);
                let e = rs.to_eps(&w).unwrap();
                assert_eq!(rs.from_eps(&e).unwrap(), w);
            }
        }
    }

    #[test]
    fn pairing_rejects_non_roots() {
        let rs = RootSystem::build(Family::B, 3).unwrap();
        let bad = Weight::from_ints(&[1, 0, 1]);
        assert!(matches!(
            rs.pairing(rs.rho(), &bad),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn reflection_basics() {
        let rs = RootSystem::build(Family::B, 5).unwrap();
        for idx in 0..rs.num_positive() {
            let b = rs.positive_root(idx);
            assert_eq!(rs.reflect(&b, &b).unwrap(), -&b);
            let w = rs.rho().clone();
            let back = rs.reflect(&rs.reflect(&w, &b).unwrap(), &b).unwrap();
            assert_eq!(back, w);
        }
    }

    #[test]
    fn reflection_at_crossed_node() {
        // s_{α_q}(-s λ_q + ρ) = -(1-s) α_q - s λ_q + ρ
        let rs = RootSystem::build(Family::B, 6).unwrap();
        let qn = 3;
        for s in [q(0), q(-1), qf(3, 2), q(2)] {
            let w = rs.rho() - &rs.fundamental_weight(qn).scale(s);
            let aq = rs.simple_root(qn);
            let lhs = rs.reflect(&w, &aq).unwrap();
            let rhs = &w - &aq.scale(q(1) - s);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn half_integral_pairing_b_series() {
        // <-(n-i-1/2)λ_i + ρ, (ε_j+ε_k)^∨> = n-k+i-j+3/2 for j <= i < k
        for n in 5..=8 {
            let rs = RootSystem::build(Family::B, n).unwrap();
            for i in 3..n {
                let s0 = q((n - i) as i64) - qf(1, 2);
                let delta = rs.rho() - &rs.fundamental_weight(i - 1).scale(s0);
                for j in 1..=i {
                    for k in i + 1..=n {
                        let ej = rs.eps_unit(j).unwrap();
                        let ek = rs.eps_unit(k).unwrap();
                        let plus = rs.pairing(&delta, &(&ej + &ek)).unwrap();
                        let minus = rs.pairing(&delta, &(&ej - &ek)).unwrap();
                        let (n, i, j, k) = (n as i64, i as i64, j as i64, k as i64);
                        assert_eq!(plus, q(n - k + i - j) + qf(3, 2));
                        assert_eq!(minus, q(-n + k + i - j) + qf(1, 2));
                    }
                }
            }
        }
    }

    #[test]
    fn dominant_representative_examples() {
        let rs = RootSystem::build(Family::D, 6).unwrap();
        // Π(l) for D6(3)
        let pil = [0, 1, 3, 4, 5];
        let w = -&rs.eps_unit(1).unwrap().scale(q(2));
        let dom = rs.dominant_representative(&w, &pil);
        assert_eq!(dom, -&rs.eps_unit(3).unwrap().scale(q(2)));
        let already = rs.rho().clone();
        assert_eq!(rs.dominant_representative(&already, &pil), already);
    }
}
