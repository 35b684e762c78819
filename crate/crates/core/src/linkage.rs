//! BGG links between weights and the standard/non-standard classifier.
//!
//! A sequence `(β₁,…,β_t)` of positive roots links `δ` to `λ` when
//! `δ_i = s_{β_i} δ_{i-1}` ends at `λ` and every pairing `⟨δ_{i-1}, β_i^∨⟩`
//! is a non-negative integer. Steps with pairing 0 fix the weight and are
//! never taken, so each step moves strictly down and every intermediate
//! weight `w` satisfies `0 <= δ - w <= δ - λ` coefficientwise. The search is a
//! breadth-first walk over that slab.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::omega::{omega1_constituent, omega2_constituents, Constituent, Kind, SpecialValue};
use crate::parabolic::{ParabolicData, QhCase};
use crate::rational::{fmt_q, is_nonneg_integer, is_positive_integer, q, Q};
use crate::roots::{RootSystem, Weight};

type Parent = (Vec<i64>, usize, i64);

/// Default cap on distinct weights visited by one search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "QHVERMA_BUDGET";

/// Budget from `QHVERMA_BUDGET`, falling back to [`DEFAULT_BUDGET`].
pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Found,
    None,
    Inconclusive,
}

/// One reflection of a link: the positive root and the pairing
/// `⟨δ_{i-1}, β^∨⟩` it was taken at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkStep {
    pub root: Weight,
    #[serde(with = "crate::rational::serde_q")]
    pub pairing: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkCertificate {
    pub outcome: Outcome,
    pub sequence: Vec<LinkStep>,
    pub explored: u64,
    pub budget_hit: bool,
    /// Why the search ended without a link, when it never started.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl LinkCertificate {
    fn none(reason: impl Into<String>) -> Self {
        Self {
            outcome: Outcome::None,
            sequence: Vec::new(),
            explored: 0,
            budget_hit: false,
            reason: Some(reason.into()),
        }
    }

    pub fn is_found(&self) -> bool {
        self.outcome == Outcome::Found
    }
}

/// Searches for a shortest link from `delta` to `lambda`. Among shortest
/// links the one with the lexicographically smallest sequence of root
/// indices (height order) is returned.
pub fn link_exists(
    rs: &RootSystem,
    delta: &Weight,
    lambda: &Weight,
    budget: u64,
) -> Result<LinkCertificate> {
    for w in [delta, lambda] {
        if w.rank() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: w.rank(),
            });
        }
    }
    if budget == 0 {
        return Err(Error::Precondition("search budget must be positive".into()));
    }
    let Some(bound) = (delta - lambda).to_ints() else {
        return Ok(LinkCertificate::none("δ - λ is not integral"));
    };
    if bound.iter().any(|&x| x < 0) {
        return Ok(LinkCertificate::none(
            "δ - λ is not a non-negative combination of simple roots",
        ));
    }

    let np = rs.num_positive();
    // ⟨δ, β^∨⟩ must be integral for β to ever be usable, since
    // ⟨δ - d, β^∨⟩ differs from it by an integer for integral d.
    let mut usable = Vec::new();
    for b in 0..np {
        let p = rs.pairing_idx(delta, b);
        if p.is_integer() {
            let cartan: Vec<i64> = (0..rs.rank())
                .map(|k| rs.pairing_idx(&rs.simple_root(k), b).to_integer())
                .collect();
            usable.push((b, p.to_integer(), cartan, rs.positive_roots()[b].clone()));
        }
    }

    let start = vec![0i64; rs.rank()];
    // d -> (previous d, root index, pairing)
    let mut parent: HashMap<Vec<i64>, Option<Parent>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    let mut explored: u64 = 1;
    let mut hit = None;

    'bfs: while let Some(d) = queue.pop_front() {
        if d == bound {
            hit = Some(d);
            break;
        }
        for (b, pd, cartan, root) in &usable {
            let c = pd - d.iter().zip(cartan).map(|(x, y)| x * y).sum::<i64>();
            if c < 1 {
                continue;
            }
            let next: Vec<i64> = d.iter().zip(root).map(|(x, r)| x + c * r).collect();
            if next.iter().zip(&bound).any(|(x, m)| x > m) || parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((d.clone(), *b, c)));
            explored += 1;
            if next == bound {
                hit = Some(next);
                break 'bfs;
            }
            if explored >= budget {
                return Ok(LinkCertificate {
                    outcome: Outcome::Inconclusive,
                    sequence: Vec::new(),
                    explored,
                    budget_hit: true,
                    reason: None,
                });
            }
            queue.push_back(next);
        }
    }

    let Some(mut cur) = hit else {
        return Ok(LinkCertificate {
            outcome: Outcome::None,
            sequence: Vec::new(),
            explored,
            budget_hit: false,
            reason: None,
        });
    };
    let mut seq = Vec::new();
    while let Some(Some((prev, b, c))) = parent.get(&cur) {
        seq.push(LinkStep {
            root: rs.positive_root(*b),
            pairing: q(*c),
        });
        cur = prev.clone();
    }
    seq.reverse();
    Ok(LinkCertificate {
        outcome: Outcome::Found,
        sequence: seq,
        explored,
        budget_hit: false,
        reason: None,
    })
}

/// Independent replay of a link: recomputes every pairing through the
/// generic root lookup and checks it against the recorded one.
pub fn verify_link(
    rs: &RootSystem,
    delta: &Weight,
    lambda: &Weight,
    steps: &[LinkStep],
) -> Result<()> {
    let mut w = delta.clone();
    for (k, step) in steps.iter().enumerate() {
        match rs.find_root(&step.root) {
            Some((_, true)) => {}
            _ => {
                return Err(Error::Invariant(format!(
                    "step {}: {} is not a positive root",
                    k + 1,
                    step.root
                )))
            }
        }
        let c = rs.pairing(&w, &step.root)?;
        if c != step.pairing {
            return Err(Error::Invariant(format!(
                "step {}: recorded pairing {} but ⟨δ, β^∨⟩ = {}",
                k + 1,
                fmt_q(&step.pairing),
                fmt_q(&c)
            )));
        }
        if !is_nonneg_integer(&c) {
            return Err(Error::Invariant(format!(
                "step {}: pairing {} is not a non-negative integer",
                k + 1,
                fmt_q(&c)
            )));
        }
        w = rs.reflect(&w, &step.root)?;
    }
    if &w != lambda {
        return Err(Error::Invariant(format!(
            "sequence ends at {w}, not at {lambda}"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Phi {
    Standard,
    NonStandard,
    Unknown,
}

impl Phi {
    pub fn as_str(self) -> &'static str {
        match self {
            Phi::Standard => "standard",
            Phi::NonStandard => "non-standard",
            Phi::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Phi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Phi {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "standard" => Ok(Phi::Standard),
            "non-standard" => Ok(Phi::NonStandard),
            "unknown" => Ok(Phi::Unknown),
            other => Err(Error::Parse(format!("unknown verdict {other:?}"))),
        }
    }
}

impl Serialize for Phi {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A link search started from `-α - s₀λ_q + ρ` for one `α ∈ Π(l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaSearch {
    /// 1-based simple root label
    pub alpha: usize,
    pub certificate: LinkCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardMapTest {
    /// `None` when a search ran out of budget
    pub nonzero: Option<bool>,
    /// `1 - s₀ ∈ 1 + Z≥0` and `ν = -(1 - s₀)α_q`
    pub shortcut: bool,
    pub searches: Vec<AlphaSearch>,
}

impl StandardMapTest {
    /// The first search that found a link, if any.
    pub fn witness(&self) -> Option<&AlphaSearch> {
        self.searches.iter().find(|s| s.certificate.is_found())
    }

    pub fn explored(&self) -> u64 {
        self.searches.iter().map(|s| s.certificate.explored).sum()
    }
}

fn check_regular(pd: &ParabolicData, w: &Weight, what: &str) -> Result<()> {
    for &a in pd.pi_l() {
        let c = pd.rs().pairing_simple(w, a);
        if !is_positive_integer(&c) {
            return Err(Error::Precondition(format!(
                "{what}: ⟨·, α_{}^∨⟩ = {} is not in 1 + Z≥0",
                a + 1,
                fmt_q(&c)
            )));
        }
    }
    Ok(())
}

/// Decides whether the standard map
/// `M_q(ν - s₀λ_q + ρ) → M_q(-s₀λ_q + ρ)` is non-zero: it vanishes exactly
/// when some `-α - s₀λ_q + ρ` (`α ∈ Π(l)`) links to `ν - s₀λ_q + ρ`. When the
/// sl₂ shortcut applies as well, both answers must agree.
pub fn standard_map_nonzero(
    pd: &ParabolicData,
    nu: &Weight,
    s0: Q,
    budget: u64,
) -> Result<StandardMapTest> {
    let rs = pd.rs();
    let base = rs.rho() - &pd.lambda_q().scale(s0);
    let target = nu + &base;
    check_regular(pd, &base, "-s₀λ_q + ρ")?;
    check_regular(pd, &target, "ν - s₀λ_q + ρ")?;

    let n = Q::one() - s0;
    let shortcut = is_positive_integer(&n) && *nu == -&pd.alpha_q().scale(n);

    let mut searches = Vec::new();
    let mut found = false;
    let mut inconclusive = false;
    for &a in pd.pi_l() {
        let delta = &base - &rs.simple_root(a);
        let cert = link_exists(rs, &delta, &target, budget)?;
        match cert.outcome {
            Outcome::Found => {
                verify_link(rs, &delta, &target, &cert.sequence)?;
                found = true;
            }
            Outcome::Inconclusive => inconclusive = true,
            Outcome::None => {}
        }
        searches.push(AlphaSearch {
            alpha: a + 1,
            certificate: cert,
        });
    }
    let searched = if found {
        Some(false)
    } else if inconclusive {
        None
    } else {
        Some(true)
    };
    if shortcut && searched == Some(false) {
        return Err(Error::Invariant(format!(
            "{}: sl₂ shortcut says non-zero but a link was found",
            pd.label()
        )));
    }
    Ok(StandardMapTest {
        nonzero: if shortcut { Some(true) } else { searched },
        shortcut,
        searches,
    })
}

/// Standardness of one homomorphism `φ_{Ω}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub map: Kind,
    pub constituent: Constituent,
    pub standard_map_nonzero: Option<bool>,
    pub phi: Phi,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub test: Option<StandardMapTest>,
}

/// All verdicts for one quasi-Heisenberg parabolic.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub case: QhCase,
    pub verdicts: Vec<Verdict>,
}

impl Classification {
    pub fn verdict(&self, kind: Kind) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.map == kind)
    }
}

fn verdict_for(pd: &ParabolicData, c: Constituent, budget: u64) -> Result<Verdict> {
    let SpecialValue::Known(s0) = c.special_value else {
        return Ok(Verdict {
            map: c.kind,
            constituent: c,
            standard_map_nonzero: None,
            phi: Phi::Unknown,
            test: None,
        });
    };
    let test = standard_map_nonzero(pd, &c.nu, s0, budget)?;
    let phi = match test.nonzero {
        Some(true) => Phi::Standard,
        Some(false) => Phi::NonStandard,
        None => Phi::Unknown,
    };
    Ok(Verdict {
        map: c.kind,
        constituent: c,
        standard_map_nonzero: test.nonzero,
        phi,
        test: Some(test),
    })
}

/// Classifies `φ_{Ω₁}` and every `φ_{Ω₂}` of a quasi-Heisenberg parabolic.
pub fn classify_phi_pd(pd: &ParabolicData, corpus: &Corpus, budget: u64) -> Result<Classification> {
    let ls = pd.levi_structure()?;
    let mut cons = vec![omega1_constituent(pd)?];
    cons.extend(omega2_constituents(pd, &ls, corpus)?);
    let verdicts = cons
        .into_iter()
        .map(|c| verdict_for(pd, c, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification {
        case: QhCase::new(pd.rs().family(), pd.rs().rank(), pd.node()),
        verdicts,
    })
}

pub fn classify_phi(case: QhCase, budget: u64) -> Result<Classification> {
    let pd = ParabolicData::build(case.family, case.rank, case.node)?;
    classify_phi_pd(&pd, Corpus::builtin(), budget)
}

/// `δ(i) = -(n - i - 1/2)λ_i + ρ` pairings against the long roots
/// `ε_j ± ε_k`, `1 <= j <= i < k <= n`, of `B_n`. Returns
/// `(j, k, ⟨δ(i), (ε_j+ε_k)^∨⟩, ⟨δ(i), (ε_j-ε_k)^∨⟩)`.
pub fn half_integral_pairings(rs: &RootSystem, i: usize) -> Result<Vec<(usize, usize, Q, Q)>> {
    let n = rs.rank();
    if rs.family() != crate::roots::Family::B || i < 1 || i >= n {
        return Err(Error::Precondition(format!(
            "need B_n with 1 <= i < n, got {}({i})",
            rs.label()
        )));
    }
    let s0 = q((n - i) as i64) - crate::rational::qf(1, 2);
    let delta = rs.rho() - &rs.fundamental_weight(i - 1).scale(s0);
    let e = |k: usize| rs.eps_unit(k).expect("classical");
    let mut out = Vec::new();
    for j in 1..=i {
        for k in i + 1..=n {
            let plus = rs.pairing(&delta, &(&e(j) + &e(k)))?;
            let minus = rs.pairing(&delta, &(&e(j) - &e(k)))?;
            out.push((j, k, plus, minus));
        }
    }
    Ok(out)
}

impl fmt::Display for LinkCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.outcome {
            Outcome::Found => {
                let roots: Vec<String> = self
                    .sequence
                    .iter()
                    .map(|s| format!("[{}]", s.root))
                    .collect();
                write!(f, "found ({})", roots.join(", "))
            }
            Outcome::None => write!(f, "none"),
            Outcome::Inconclusive => write!(f, "inconclusive"),
        }?;
        write!(f, ", {} weights explored", self.explored)
    }
}
