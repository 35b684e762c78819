//! Special constituents of `l ⊗ z(n)` and their invariants.
//!
//! The highest weight of the `l_γ`-constituent is taken from the constituent
//! corpus and validated; the `l_{nγ}`-constituent is the whole tensor product
//! `l_{nγ} ⊗ z(n)`, so its highest weight `ξ_{nγ} + γ` is computed directly and
//! compared with the corpus.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::corpus::{Corpus, TableId, Value};
use crate::error::{Error, Result};
use crate::parabolic::{LeviStructure, ParabolicData};
use crate::rational::{fmt_q, Q};
use crate::roots::{RootSystem, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Omega1,
    Gamma,
    NGamma,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Omega1 => "omega1",
            Kind::Gamma => "gamma",
            Kind::NGamma => "ngamma",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "omega1" => Ok(Kind::Omega1),
            "gamma" => Ok(Kind::Gamma),
            "ngamma" => Ok(Kind::NGamma),
            other => Err(Error::Parse(format!("unknown constituent kind {other:?}"))),
        }
    }
}

impl Serialize for Kind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Shape of the highest weight `μ + ε` of a special constituent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CType {
    /// not a root, `ε ≠ μ`, both long
    T1a,
    /// not a root, `ε ≠ μ`, one of them short
    T1b,
    /// `μ + ε = 2μ`, not a root
    T2,
    /// `μ + ε` is a root
    T3,
}

impl CType {
    pub fn as_str(self) -> &'static str {
        match self {
            CType::T1a => "1a",
            CType::T1b => "1b",
            CType::T2 => "2",
            CType::T3 => "3",
        }
    }
}

impl fmt::Display for CType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1a" => Ok(CType::T1a),
            "1b" => Ok(CType::T1b),
            "2" => Ok(CType::T2),
            "3" => Ok(CType::T3),
            other => Err(Error::Parse(format!("unknown constituent type {other:?}"))),
        }
    }
}

impl Serialize for CType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A special value `s₀`, or `Unknown` where no formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialValue {
    Known(Q),
    Unknown,
}

impl SpecialValue {
    pub fn known(self) -> Option<Q> {
        match self {
            SpecialValue::Known(q) => Some(q),
            SpecialValue::Unknown => None,
        }
    }
}

impl fmt::Display for SpecialValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialValue::Known(q) => f.write_str(&fmt_q(q)),
            SpecialValue::Unknown => f.write_str("?"),
        }
    }
}

impl Serialize for SpecialValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SpecialValue::Known(q) => s.serialize_str(&fmt_q(q)),
            SpecialValue::Unknown => s.serialize_str("unknown"),
        }
    }
}

/// One special constituent together with its derived data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constituent {
    pub kind: Kind,
    /// `μ + ε` for `Ω₂`, `μ` for `Ω₁`
    pub hw: Weight,
    pub mu: Weight,
    /// `hw - μ`; absent for `Ω₁`
    pub epsilon: Option<Weight>,
    pub ctype: Option<CType>,
    pub special_value: SpecialValue,
    /// highest weight of the dual, `dominant_representative(-hw, Π(l))`
    pub nu: Weight,
}

/// Four-way type predicate on `μ + ε`.
pub fn classify_type(rs: &RootSystem, mu: &Weight, eps: &Weight) -> CType {
    let hw = mu + eps;
    if rs.is_root(&hw) {
        return CType::T3;
    }
    if eps == mu {
        return CType::T2;
    }
    let long = |w: &Weight| rs.norm2(w) == rs.max_len2();
    if long(mu) && long(eps) {
        CType::T1a
    } else {
        CType::T1b
    }
}

/// `Δ_{hw}(g(1)) = {α ∈ Δ(g(1)) | hw - α ∈ Δ(g(1))}` as positive-root indices.
pub fn delta_mu_eps(pd: &ParabolicData, hw: &Weight) -> Vec<usize> {
    let rs = pd.rs();
    pd.delta_g1()
        .iter()
        .copied()
        .filter(|&a| pd.is_g1_root(&(hw - &rs.positive_root(a))))
        .collect()
}

/// Special value from the type: `|Δ_{μ+ε}(g(1))|/2 - 1` for 1a, `-1` for 2.
pub fn special_value(pd: &ParabolicData, hw: &Weight, ctype: CType) -> SpecialValue {
    match ctype {
        CType::T1a => {
            let k = delta_mu_eps(pd, hw).len() as i64;
            SpecialValue::Known(Ratio::new(k, 2) - 1)
        }
        CType::T2 => SpecialValue::Known(Q::from_integer(-1)),
        CType::T1b | CType::T3 => SpecialValue::Unknown,
    }
}

/// `ν = dominant_representative(-hw, Π(l))`; `ν = 0` would contradict the
/// non-triviality of the dual constituent and is reported as an invariant
/// violation.
pub fn dual_highest_weight(pd: &ParabolicData, hw: &Weight) -> Result<Weight> {
    if !pd.is_levi_dominant(hw) {
        return Err(Error::Precondition(format!(
            "{} is not Π(l)-dominant in {}",
            pd.rs().render(hw),
            pd.label()
        )));
    }
    let nu = pd.rs().dominant_representative(&-hw, pd.pi_l());
    if nu.is_zero() {
        return Err(Error::Invariant(format!(
            "dual highest weight of {} vanishes in {}",
            pd.rs().render(hw),
            pd.label()
        )));
    }
    Ok(nu)
}

/// The `Ω₁` datum: `hw = μ`, `s₀ = 0`, `ν = -α_q`.
pub fn omega1_constituent(pd: &ParabolicData) -> Result<Constituent> {
    let mu = pd.mu()?;
    let nu = dual_highest_weight(pd, &mu)?;
    if nu != -pd.alpha_q() {
        return Err(Error::Invariant(format!(
            "Ω₁ dual weight {} differs from -α_q in {}",
            pd.rs().render(&nu),
            pd.label()
        )));
    }
    Ok(Constituent {
        kind: Kind::Omega1,
        hw: mu.clone(),
        mu,
        epsilon: None,
        ctype: None,
        special_value: SpecialValue::Known(Q::zero()),
        nu,
    })
}

/// Checks that `hw` can be the highest weight of a constituent of
/// `l ⊗ z(n)` inside `g(1) ⊗ g(1)`.
pub fn validate_hw(
    pd: &ParabolicData,
    mu: &Weight,
    hw: &Weight,
    label: &str,
    kind: Kind,
) -> Result<Weight> {
    let bad = |reason: String| Error::InvalidConstituent {
        label: label.to_string(),
        kind: kind.to_string(),
        reason,
    };
    let rs = pd.rs();
    if !pd.is_levi_dominant(hw) {
        return Err(bad(format!("{} is not Π(l)-dominant", rs.render(hw))));
    }
    let eps = hw - mu;
    if !pd.is_g1_root(&eps) {
        return Err(bad(format!(
            "ε = {} is not a weight of g(1)",
            rs.render(&eps)
        )));
    }
    let in_zn = |w: &Weight| matches!(rs.find_root(w), Some((i, true)) if pd.level(i) == 2);
    let split = in_zn(hw)
        || pd.delta_l().iter().any(|&b| {
            let beta = rs.positive_root(b);
            in_zn(&(hw - &beta)) || in_zn(&(hw + &beta))
        });
    if !split {
        return Err(bad(format!(
            "{} is not (root of l or 0) + (root of z(n))",
            rs.render(hw)
        )));
    }
    Ok(eps)
}

fn corpus_hw(pd: &ParabolicData, corpus: &Corpus, kind: Kind) -> Result<Option<Weight>> {
    let rs = pd.rs();
    let table = if rs.family().is_classical() {
        TableId::T1
    } else {
        TableId::T2
    };
    let value = corpus
        .lookup(table, rs.family(), rs.rank(), pd.node(), kind)
        .ok_or_else(|| Error::NoData(format!("{} {kind}", pd.label())))?;
    match value {
        Value::Absent => Ok(None),
        Value::Eps(e) => {
            let coords = e.eval(rs.rank(), pd.node())?;
            rs.from_eps(&coords).map(Some).ok_or_else(|| {
                Error::NoData(format!("{}: ε-data for an exceptional type", pd.label()))
            })
        }
        Value::Alpha(c) => {
            if c.len() != rs.rank() {
                return Err(Error::RankMismatch {
                    expected: rs.rank(),
                    got: c.len(),
                });
            }
            Ok(Some(Weight::from_ints(c)))
        }
        other => Err(Error::Parse(format!(
            "corpus entry for {} {kind} is not a weight: {other}",
            pd.label()
        ))),
    }
}

fn build_constituent(
    pd: &ParabolicData,
    mu: &Weight,
    hw: Weight,
    kind: Kind,
) -> Result<Constituent> {
    let eps = validate_hw(pd, mu, &hw, &pd.label(), kind)?;
    let ctype = classify_type(pd.rs(), mu, &eps);
    let special_value = special_value(pd, &hw, ctype);
    let nu = dual_highest_weight(pd, &hw)?;
    Ok(Constituent {
        kind,
        hw,
        mu: mu.clone(),
        epsilon: Some(eps),
        ctype: Some(ctype),
        special_value,
        nu,
    })
}

/// The one or two special constituents of `l ⊗ z(n)` for `Ω₂`.
pub fn omega2_constituents(
    pd: &ParabolicData,
    ls: &LeviStructure,
    corpus: &Corpus,
) -> Result<Vec<Constituent>> {
    let rs = pd.rs();
    let mu = pd.mu()?;
    let label = pd.label();
    let mut out = Vec::new();

    let gamma_hw = corpus_hw(pd, corpus, Kind::Gamma)?
        .ok_or_else(|| Error::NoData(format!("{label} gamma")))?;
    out.push(build_constituent(pd, &mu, gamma_hw, Kind::Gamma)?);

    let computed = ls
        .xi_ngamma
        .map(|x| &rs.positive_root(x) + &rs.positive_root(ls.gamma));
    let listed = corpus_hw(pd, corpus, Kind::NGamma)?;
    match (computed, listed) {
        (Some(c), Some(l)) if c == l => out.push(build_constituent(pd, &mu, c, Kind::NGamma)?),
        (None, None) => {}
        (c, l) => {
            let show = |w: &Option<Weight>| w.as_ref().map_or("-".to_string(), |w| rs.render(w));
            return Err(Error::InvalidConstituent {
                label,
                kind: Kind::NGamma.to_string(),
                reason: format!("computed {} but corpus lists {}", show(&c), show(&l)),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};
    use crate::roots::Family;

    fn cons(f: Family, n: usize, i: usize) -> (ParabolicData, Vec<Constituent>) {
        let pd = ParabolicData::build(f, n, i).unwrap();
        let ls = pd.levi_structure().unwrap();
        let c = omega2_constituents(&pd, &ls, Corpus::builtin()).unwrap();
        (pd, c)
    }

    fn eps(pd: &ParabolicData, v: &[i64]) -> Weight {
        pd.rs()
            .from_eps(&v.iter().map(|&x| q(x)).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn d6_3_ngamma() {
        let (pd, c) = cons(Family::D, 6, 3);
        assert_eq!(c[1].hw, eps(&pd, &[1, 1, 0, 1, 1, 0]));
        assert_eq!(c[1].ctype, Some(CType::T1a));
        assert_eq!(c[1].special_value, SpecialValue::Known(q(1)));
    }

    #[test]
    fn e7_2_gamma_only() {
        let (_, c) = cons(Family::E, 7, 2);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].hw, Weight::from_ints(&[2, 2, 4, 5, 4, 3, 2]));
        assert_eq!(c[0].special_value, SpecialValue::Known(q(2)));
    }

    #[test]
    fn c5_3_types() {
        let (pd, c) = cons(Family::C, 5, 3);
        assert_eq!(c[0].ctype, Some(CType::T3));
        assert_eq!(c[0].special_value, SpecialValue::Unknown);
        assert_eq!(c[1].hw, eps(&pd, &[2, 0, 0, 2, 0]));
        assert_eq!(c[1].ctype, Some(CType::T2));
        assert_eq!(c[1].nu, -&pd.alpha_q().scale(q(2)));
    }

    #[test]
    fn b_series_types_and_values() {
        let (_, c) = cons(Family::B, 7, 4);
        assert_eq!(c[0].ctype, Some(CType::T1a));
        let (_, c) = cons(Family::B, 6, 5);
        assert_eq!(c[1].ctype, Some(CType::T1b));
        assert_eq!(c[1].special_value, SpecialValue::Unknown);
        let (pd, c) = cons(Family::B, 7, 3);
        assert_eq!(c[0].special_value, SpecialValue::Known(qf(7, 2)));
        assert_eq!(c[0].nu, -&pd.rs().eps_unit(3).unwrap().scale(q(2)));
    }

    #[test]
    fn delta_mu_eps_counts() {
        let (pd, c) = cons(Family::E, 8, 1);
        assert_eq!(delta_mu_eps(&pd, &c[0].hw).len(), 8);
        for n in 6..=8 {
            for i in 3..=n - 3 {
                let (pd, c) = cons(Family::D, n, i);
                assert_eq!(delta_mu_eps(&pd, &c[0].hw).len(), 2 * (n - i));
            }
        }
        let (pd, c) = cons(Family::B, 5, 5);
        let _ = delta_mu_eps(&pd, &c[0].hw);
    }

    #[test]
    fn special_values_type2() {
        let (_, c) = cons(Family::F, 4, 4);
        assert_eq!(c[0].ctype, Some(CType::T2));
        assert_eq!(c[0].special_value, SpecialValue::Known(q(-1)));
        let (_, c) = cons(Family::C, 5, 2);
        assert_eq!(c[0].special_value, SpecialValue::Unknown);
    }

    #[test]
    fn dual_weight_e6_3() {
        let (pd, c) = cons(Family::E, 6, 3);
        let rs = pd.rs();
        let expect =
            &(-&rs.simple_root(2).scale(q(2))) - &(&rs.simple_root(0) + &rs.simple_root(3));
        assert_eq!(c[0].nu, expect);
    }

    #[test]
    fn omega1_nu_is_minus_alpha_q() {
        for (f, n, i) in [
            (Family::B, 5, 3),
            (Family::E, 8, 1),
            (Family::F, 4, 4),
            (Family::C, 4, 2),
        ] {
            let pd = ParabolicData::build(f, n, i).unwrap();
            let c = omega1_constituent(&pd).unwrap();
            assert_eq!(c.nu, -pd.alpha_q());
            assert_eq!(c.special_value, SpecialValue::Known(q(0)));
        }
    }

    #[test]
    fn validation_rejects_bad_weights() {
        let pd = ParabolicData::build(Family::B, 6, 3).unwrap();
        let mu = pd.mu().unwrap();
        // ε = e1 - e2 is not in g(1)
        let bad = eps(&pd, &[2, -1, 0, 1, 0, 0]);
        assert!(validate_hw(&pd, &mu, &bad, "x", Kind::Gamma).is_err());
        // not dominant
        let bad = eps(&pd, &[1, 0, 0, 1, 0, 0]).scale(q(-1));
        assert!(validate_hw(&pd, &mu, &bad, "x", Kind::Gamma).is_err());
    }

    #[test]
    fn missing_corpus_is_no_data() {
        let pd = ParabolicData::build(Family::B, 6, 3).unwrap();
        let ls = pd.levi_structure().unwrap();
        let empty = Corpus::parse("").unwrap();
        assert!(matches!(
            omega2_constituents(&pd, &ls, &empty),
            Err(Error::NoData(_))
        ));
    }

    #[test]
    fn type_predicate_on_g1_pairs() {
        // type 2 exactly when hw = 2μ and 2μ is not a root
        let pd = ParabolicData::build(Family::B, 5, 5).unwrap();
        let rs = pd.rs();
        let mu = pd.mu().unwrap();
        for &e in pd.delta_g1() {
            let e = rs.positive_root(e);
            let t = classify_type(rs, &mu, &e);
            let hw = &mu + &e;
            assert_eq!(t == CType::T2, hw == mu.scale(q(2)) && !rs.is_root(&hw));
        }
    }
}
