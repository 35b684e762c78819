//! Serializable reports behind the command-line tool: the regenerated
//! tables with their golden diff, classifications, link certificates and
//! the degree-2 highest-weight checks.
//!
//! Every report is wrapped in an [`Envelope`] carrying [`SCHEMA_VERSION`].
//! Rationals are always strings `p/q`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::chevalley::{self, ChevalleyBasis};
use crate::corpus::{Corpus, TableId, Value};
use crate::error::{Error, Result};
use crate::linkage::{classify_phi_pd, verify_link, LinkCertificate, Phi};
use crate::omega::{omega2_constituents, CType, Kind, SpecialValue};
use crate::parabolic::{quasi_heisenberg_nodes, ParabolicData, QhCase, ScanResult};
use crate::rational::fmt_q;
use crate::roots::{parse_system_label, Family, RootSystem, Weight};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: u32,
    pub command: String,
    pub result: T,
}

impl<T> Envelope<T> {
    pub fn new(command: impl Into<String>, result: T) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            command: command.into(),
            result,
        }
    }
}

/// Systems used by `tables` when no `--ranks` is given.
pub const DEFAULT_RANKS: &str = "B5..B8,C4..C6,D6,D7,E6,E7,E8,F4";

/// Parses `B5..B8,C4,E6` into a list of systems.
pub fn parse_ranks(s: &str) -> Result<Vec<(Family, usize)>> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        match item.split_once("..") {
            Some((a, b)) => {
                let (fa, lo) = parse_system_label(a)?;
                let b = b.trim();
                let (fb, hi) = match b.parse::<usize>() {
                    Ok(r) => (fa, r),
                    Err(_) => parse_system_label(b)?,
                };
                if fa != fb || lo > hi {
                    return Err(Error::Parse(format!("bad rank range {item:?}")));
                }
                out.extend((lo..=hi).map(|r| (fa, r)));
            }
            None => out.push(parse_system_label(item)?),
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("empty rank list".into()));
    }
    Ok(out)
}

/// Quasi-Heisenberg cases (two-factor Levi) of the given systems.
pub fn cases_for(systems: &[(Family, usize)]) -> Result<Vec<QhCase>> {
    let mut out = Vec::new();
    for &(f, n) in systems {
        let rs = Arc::new(RootSystem::build(f, n)?);
        let (two, _) = quasi_heisenberg_nodes(&rs);
        out.extend(two.into_iter().map(|i| QhCase::new(f, n, i)));
    }
    Ok(out)
}

fn coords(w: &Weight) -> Vec<String> {
    w.coords().iter().map(fmt_q).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub max_rank: usize,
    pub cases: Vec<String>,
    /// quasi-Heisenberg with a three-factor Levi, not classified
    pub three_factor: Vec<String>,
}

impl ScanReport {
    pub fn new(max_rank: usize, scan: &ScanResult) -> Self {
        Self {
            max_rank,
            cases: scan.cases.iter().map(ToString::to_string).collect(),
            three_factor: scan.three_factor.iter().map(ToString::to_string).collect(),
        }
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "quasi-Heisenberg maximal parabolics, rank <= {}: {}",
            self.max_rank,
            self.cases.len()
        )?;
        for c in &self.cases {
            writeln!(f, "  {c}")?;
        }
        if !self.three_factor.is_empty() {
            writeln!(f, "three-factor Levi (not classified):")?;
            for c in &self.three_factor {
                writeln!(f, "  {c}")?;
            }
        }
        Ok(())
    }
}

/// Concrete value of one table cell.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Cell {
    Absent,
    Unknown,
    Weight(Weight),
    Type(CType),
    Rational(crate::Q),
    Phi(Phi),
}

impl Cell {
    fn render(&self, rs: &RootSystem, table: TableId) -> String {
        match self {
            Cell::Absent => "-".into(),
            Cell::Unknown => "?".into(),
            Cell::Weight(w) if table == TableId::T2 => format!("({})", coords(w).join(",")),
            Cell::Weight(w) => rs.render(w),
            Cell::Type(t) => t.to_string(),
            Cell::Rational(v) => fmt_q(v),
            Cell::Phi(p) => p.to_string(),
        }
    }

    fn from_value(v: &Value, rs: &RootSystem, n: usize, i: usize) -> Result<Self> {
        Ok(match v {
            Value::Absent => Cell::Absent,
            Value::Unknown => Cell::Unknown,
            Value::Eps(e) => {
                Cell::Weight(rs.from_eps(&e.eval(n, i)?).ok_or_else(|| {
                    Error::Parse(format!("{e} is not a weight of {}", rs.label()))
                })?)
            }
            Value::Alpha(c) => {
                if c.len() != rs.rank() {
                    return Err(Error::RankMismatch {
                        expected: rs.rank(),
                        got: c.len(),
                    });
                }
                Cell::Weight(Weight::from_ints(c))
            }
            Value::Type(t) => Cell::Type(*t),
            Value::Rational(r) => Cell::Rational(r.eval(n, i)),
            Value::Phi(Phi::Unknown) => Cell::Unknown,
            Value::Phi(p) => Cell::Phi(*p),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub case: String,
    pub kind: String,
    pub computed: String,
    pub expected: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub table: String,
    pub caption: String,
    pub cells: Vec<CellReport>,
    pub mismatches: usize,
}

impl TableReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches == 0
    }

    pub fn mismatched(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.ok)
    }
}

fn table_applies(table: TableId, family: Family) -> bool {
    match table {
        TableId::T1 => family.is_classical(),
        TableId::T2 => !family.is_classical(),
        _ => true,
    }
}

fn computed_cells(pd: &ParabolicData, table: TableId, budget: u64) -> Result<Vec<(Kind, Cell)>> {
    let ls = pd.levi_structure()?;
    let cons = omega2_constituents(pd, &ls, Corpus::builtin())?;
    let phis = if table == TableId::T5 {
        Some(classify_phi_pd(pd, Corpus::builtin(), budget)?)
    } else {
        None
    };
    let mut out = Vec::new();
    for kind in [Kind::Gamma, Kind::NGamma] {
        let Some(c) = cons.iter().find(|c| c.kind == kind) else {
            out.push((kind, Cell::Absent));
            continue;
        };
        let cell = match table {
            TableId::T1 | TableId::T2 => Cell::Weight(c.hw.clone()),
            TableId::T3 => c.ctype.map_or(Cell::Unknown, Cell::Type),
            TableId::T4 => match c.special_value {
                SpecialValue::Known(v) => Cell::Rational(v),
                SpecialValue::Unknown => Cell::Unknown,
            },
            TableId::T5 => match phis.as_ref().and_then(|p| p.verdict(kind)).map(|v| v.phi) {
                Some(Phi::Unknown) | None => Cell::Unknown,
                Some(p) => Cell::Phi(p),
            },
        };
        out.push((kind, cell));
    }
    Ok(out)
}

/// Regenerates `table` for `cases` and diffs every cell against `golden`.
pub fn table_report(
    table: TableId,
    cases: &[QhCase],
    golden: &Corpus,
    budget: u64,
) -> Result<TableReport> {
    let mut cells = Vec::new();
    for case in cases.iter().filter(|c| table_applies(table, c.family)) {
        let pd = ParabolicData::build(case.family, case.rank, case.node)?;
        let rs = pd.rs();
        for (kind, got) in computed_cells(&pd, table, budget)? {
            let expected = golden
                .lookup(table, case.family, case.rank, case.node, kind)
                .map(|v| Cell::from_value(v, rs, case.rank, case.node))
                .transpose()?;
            let (expected_s, ok) = match &expected {
                Some(e) => (e.render(rs, table), *e == got),
                None => ("missing".to_string(), false),
            };
            cells.push(CellReport {
                case: case.to_string(),
                kind: kind.to_string(),
                computed: got.render(rs, table),
                expected: expected_s,
                ok,
            });
        }
    }
    let mismatches = cells.iter().filter(|c| !c.ok).count();
    Ok(TableReport {
        table: table.to_string(),
        caption: table.caption().to_string(),
        cells,
        mismatches,
    })
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}  {}", self.table, self.caption)?;
        let mut rows: Vec<(&str, [&str; 2])> = Vec::new();
        for c in &self.cells {
            let col = usize::from(c.kind != Kind::Gamma.as_str());
            match rows.last_mut() {
                Some((case, cols)) if *case == c.case => cols[col] = &c.computed,
                _ => {
                    let mut cols = ["", ""];
                    cols[col] = &c.computed;
                    rows.push((&c.case, cols));
                }
            }
        }
        let w0 = rows
            .iter()
            .map(|r| r.0.chars().count())
            .max()
            .unwrap_or(0)
            .max(4);
        let w1 = rows
            .iter()
            .map(|r| r.1[0].chars().count())
            .max()
            .unwrap_or(0)
            .max(5);
        writeln!(f, "  {:<w0$}  {:<w1$}  ngamma", "case", "gamma")?;
        for (case, [g, ng]) in &rows {
            let pad = |s: &str, w: usize| {
                format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())))
            };
            writeln!(f, "  {}  {}  {}", pad(case, w0), pad(g, w1), ng)?;
        }
        if self.is_ok() {
            write!(f, "all {} cells match", self.cells.len())
        } else {
            writeln!(
                f,
                "{} of {} cells differ:",
                self.mismatches,
                self.cells.len()
            )?;
            for c in self.mismatched() {
                writeln!(
                    f,
                    "  {} {}: computed {}, expected {}",
                    c.case, c.kind, c.computed, c.expected
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub root: String,
    pub coords: Vec<String>,
    pub pairing: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub system: String,
    pub from: Vec<String>,
    pub to: Vec<String>,
    pub outcome: String,
    pub steps: Vec<StepReport>,
    pub explored: u64,
    pub budget_hit: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl LinkReport {
    /// Builds the report after replaying any found sequence through the
    /// independent checker.
    pub fn new(
        rs: &RootSystem,
        from: &Weight,
        to: &Weight,
        cert: &LinkCertificate,
    ) -> Result<Self> {
        if cert.is_found() {
            verify_link(rs, from, to, &cert.sequence)?;
        }
        Ok(Self {
            system: rs.label(),
            from: coords(from),
            to: coords(to),
            outcome: format!("{:?}", cert.outcome).to_lowercase(),
            steps: cert
                .sequence
                .iter()
                .map(|s| StepReport {
                    root: rs.render(&s.root),
                    coords: coords(&s.root),
                    pairing: fmt_q(&s.pairing),
                })
                .collect(),
            explored: cert.explored,
            budget_hit: cert.budget_hit,
            reason: cert.reason.clone(),
        })
    }
}

impl fmt::Display for LinkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: ({}) -> ({})",
            self.system,
            self.from.join(","),
            self.to.join(",")
        )?;
        write!(f, "  {} after {} states", self.outcome, self.explored)?;
        if self.budget_hit {
            write!(f, " (budget exhausted)")?;
        }
        if let Some(r) = &self.reason {
            write!(f, "; {r}")?;
        }
        for (k, s) in self.steps.iter().enumerate() {
            write!(f, "\n  β{} = {}  pairing {}", k + 1, s.root, s.pairing)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapReport {
    pub map: String,
    pub phi: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hw: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ctype: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special_value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<String>,
    #[serde(default)]
    pub shortcut: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<LinkReport>,
    #[serde(default)]
    pub explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub case: String,
    pub budget: u64,
    pub maps: Vec<MapReport>,
}

impl ClassifyReport {
    pub fn build(pd: &ParabolicData, budget: u64) -> Result<Self> {
        let rs = pd.rs();
        let cls = classify_phi_pd(pd, Corpus::builtin(), budget)?;
        let mut maps = Vec::new();
        for kind in [Kind::Omega1, Kind::Gamma, Kind::NGamma] {
            let Some(v) = cls.verdict(kind) else {
                maps.push(MapReport {
                    map: kind.to_string(),
                    phi: "-".into(),
                    hw: None,
                    ctype: None,
                    special_value: None,
                    nu: None,
                    shortcut: false,
                    alpha: None,
                    witness: None,
                    explored: 0,
                });
                continue;
            };
            let c = &v.constituent;
            let (mut alpha, mut witness, mut shortcut, mut explored) = (None, None, false, 0);
            if let (Some(test), SpecialValue::Known(s0)) = (&v.test, c.special_value) {
                shortcut = test.shortcut;
                explored = test.explored();
                if let Some(w) = test.witness() {
                    let base = rs.rho() - &pd.lambda_q().scale(s0);
                    let from = &base - &rs.simple_root(w.alpha - 1);
                    let to = &c.nu + &base;
                    alpha = Some(w.alpha);
                    witness = Some(LinkReport::new(rs, &from, &to, &w.certificate)?);
                }
            }
            maps.push(MapReport {
                map: kind.to_string(),
                phi: v.phi.to_string(),
                hw: Some(rs.render(&c.hw)),
                ctype: c.ctype.map(|t| t.to_string()),
                special_value: Some(c.special_value.to_string()),
                nu: Some(rs.render(&c.nu)),
                shortcut,
                alpha,
                witness,
                explored,
            });
        }
        Ok(Self {
            case: pd.label(),
            budget,
            maps,
        })
    }
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.case)?;
        for m in &self.maps {
            write!(f, "\n  {:<7} {}", m.map, m.phi)?;
            if let (Some(hw), Some(sv)) = (&m.hw, &m.special_value) {
                let t = m
                    .ctype
                    .as_deref()
                    .map(|t| format!("type {t}, "))
                    .unwrap_or_default();
                write!(
                    f,
                    "  [hw {hw}, {t}s0 = {sv}, ν = {}]",
                    m.nu.as_deref().unwrap_or("?")
                )?;
            }
            if m.shortcut {
                write!(f, "\n          sl2 shortcut: ν = -(1-s0)α_q")?;
            }
            if let (Some(a), Some(w)) = (m.alpha, &m.witness) {
                let roots: Vec<String> = w
                    .steps
                    .iter()
                    .map(|s| format!("{} ({})", s.root, s.pairing))
                    .collect();
                write!(
                    f,
                    "\n          link from -α{a} - s0λ_q + ρ: {}",
                    roots.join(", ")
                )?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HwvReport {
    pub case: String,
    pub convention: String,
    pub checks: Vec<CheckReport>,
    pub ok: bool,
}

pub const SIGN_CONVENTION: &str =
    "N(α,β) = +(p+1) on extraspecial pairs, [E_r, E_-r] = H_r (coroot), H_i = α_i^∨";

/// Exhaustive Jacobi checks are run up to this rank.
pub const JACOBI_MAX_RANK: usize = 6;

fn check(name: &str, ok: bool, detail: Vec<String>) -> CheckReport {
    CheckReport {
        name: name.into(),
        ok,
        detail,
    }
}

impl HwvReport {
    /// Degree-2 computations available for `pd`: Condition (H) for
    /// `B_n(i)`, `3 <= i <= n-1`; the raising identity for `B_n(n)`; the
    /// reachability of `X_{-α_q}²` for every type-2 constituent.
    pub fn build(pd: &ParabolicData) -> Result<Self> {
        let rs = pd.rs();
        let (f, n, i) = (rs.family(), rs.rank(), pd.node());
        if !pd.is_quasi_heisenberg() {
            return Err(Error::NotQuasiHeisenberg {
                family: f,
                rank: n,
                node: i,
            });
        }
        let cb = ChevalleyBasis::build(pd.rs_arc())?;
        let mut checks = Vec::new();
        let consts = cb.check_constants();
        checks.push(check(
            "structure constants: antisymmetry and |N| = p+1",
            consts.is_ok(),
            consts
                .err()
                .map(|e| vec![e.to_string()])
                .unwrap_or_default(),
        ));
        if n <= JACOBI_MAX_RANK {
            let bad = cb.jacobi_failures();
            checks.push(check(
                "Jacobi identity on all basis triples",
                bad == 0,
                vec![format!("failing triples: {bad}")],
            ));
        }
        let mut ran = false;
        if f == Family::B && (3..n).contains(&i) {
            ran = true;
            let h = chevalley::condition_h_solve(pd, &cb)?;
            checks.push(check(
                "Condition (H) solution space has dimension 1",
                h.dimension == 1,
                vec![
                    format!("candidates of weight -2e{i}: {}", h.candidates),
                    format!("u0 = {}", h.solution),
                ],
            ));
            checks.push(check(
                "solutions use only X_{-e_i}^2 and X_{-(e_i+e_k)}X_{-(e_i-e_k)}",
                h.normal_form,
                vec![],
            ));
            checks.push(check("u0 annihilated by Π(l)", h.annihilated, vec![]));
            let bs: Vec<String> =
                h.b.iter()
                    .map(|(j, b)| format!("b_{j} = {}", fmt_q(b)))
                    .collect();
            checks.push(check(
                "b_n = -2 N(e_n,-e_i) / N(e_n,-(e_i+e_n))",
                h.constants2,
                bs,
            ));
            checks.push(check(
                "b_j recurrence in N(e_k-e_(k+1), ·)",
                h.constants1,
                vec![],
            ));
            checks.push(check(
                "α_i-multiplicity of 2e_i is 2 (no degree >= 3 term)",
                h.alpha_i_multiplicity == 2,
                vec![],
            ));
            checks.push(check(
                "2e_i - β not a positive root for β in Δ⁺(l) ∪ Δ(z(n))",
                h.root_gap,
                vec![],
            ));
        }
        if f == Family::B && i == n {
            ran = true;
            let t = chevalley::type2_identity(pd, &cb)?;
            checks.push(check(
                "X_{e1-en}^2 X_{-e1}^2 ⊗ 1 = 2N^2 X_{-en}^2 ⊗ 1",
                t.holds,
                vec![
                    format!("lhs = {}", t.lhs),
                    format!("rhs = {}", t.rhs),
                    format!("N(e1-en,-e1) = {}", t.n_constant),
                ],
            ));
        }
        let ls = pd.levi_structure()?;
        for c in omega2_constituents(pd, &ls, Corpus::builtin())? {
            if c.ctype == Some(CType::T2) {
                ran = true;
                let r = chevalley::type2_reachability(pd, &cb)?;
                let path: Vec<String> = r.path.iter().map(|a| format!("α{a}")).collect();
                checks.push(check(
                    &format!(
                        "{}: X_{{-μ}}^2 ⊗ 1 raises to a multiple of X_{{-α_q}}^2 ⊗ 1",
                        c.kind
                    ),
                    r.reached,
                    vec![
                        format!("start {}", r.start),
                        format!("path {}", path.join(" ")),
                        format!("end {}", r.end),
                    ],
                ));
            }
        }
        if !ran {
            return Err(Error::Precondition(format!(
                "{}: no degree-2 highest-weight computation applies (B_n(i) with i >= 3, or a type-2 constituent)",
                pd.label()
            )));
        }
        let ok = checks.iter().all(|c| c.ok);
        Ok(Self {
            case: pd.label(),
            convention: SIGN_CONVENTION.into(),
            checks,
            ok,
        })
    }
}

impl fmt::Display for HwvReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}  (convention: {})", self.case, self.convention)?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.ok { "ok" } else { "FAIL" }, c.name)?;
            for d in &c.detail {
                writeln!(f, "        {d}")?;
            }
        }
        write!(
            f,
            "{}",
            if self.ok {
                "all checks passed"
            } else {
                "some checks FAILED"
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_lists() {
        let r = parse_ranks("B5..B7,E6").unwrap();
        assert_eq!(
            r,
            vec![
                (Family::B, 5),
                (Family::B, 6),
                (Family::B, 7),
                (Family::E, 6)
            ]
        );
        assert_eq!(parse_ranks("C4..6").unwrap().len(), 3);
        assert!(parse_ranks("B5..C6").is_err());
        assert!(parse_ranks("").is_err());
        assert_eq!(parse_ranks(DEFAULT_RANKS).unwrap().len(), 13);
    }

    #[test]
    fn cases_skip_three_factor() {
        let c = cases_for(&[(Family::D, 6)]).unwrap();
        assert_eq!(c, vec![QhCase::new(Family::D, 6, 3)]);
    }

    #[test]
    fn t4_b_series_matches() {
        let cases = cases_for(&parse_ranks("B5..B6").unwrap()).unwrap();
        let t = table_report(TableId::T4, &cases, Corpus::golden(), 100_000).unwrap();
        assert!(t.is_ok(), "{t}");
        assert!(t.cells.iter().any(|c| c.computed == "?"));
        assert!(t.cells.iter().any(|c| c.computed == "5/2"));
    }

    #[test]
    fn typo_is_named() {
        let text = Corpus::golden().to_string().replace(
            "C | 2 <= i <= n-1 | T3 | gamma | 3",
            "C | 2 <= i <= n-1 | T3 | gamma | 1b",
        );
        let bad = Corpus::parse(&text).unwrap();
        let cases = cases_for(&[(Family::C, 4)]).unwrap();
        let t = table_report(TableId::T3, &cases, &bad, 1000).unwrap();
        let m: Vec<_> = t
            .mismatched()
            .map(|c| format!("{} {}", c.case, c.kind))
            .collect();
        assert_eq!(m, vec!["C4(2) gamma", "C4(3) gamma"]);
    }

    #[test]
    fn reports_round_trip() {
        let pd = ParabolicData::build(Family::B, 6, 4).unwrap();
        let r = Envelope::new(
            "classify B 6 4",
            ClassifyReport::build(&pd, 1_000_000).unwrap(),
        );
        let s = serde_json::to_string(&r).unwrap();
        let back: Envelope<ClassifyReport> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn hwv_rejects_non_qh() {
        let pd = ParabolicData::build(Family::A, 4, 2).unwrap();
        assert!(matches!(
            HwvReport::build(&pd),
            Err(Error::NotQuasiHeisenberg { .. })
        ));
        let pd = ParabolicData::build(Family::D, 6, 3).unwrap();
        assert!(matches!(HwvReport::build(&pd), Err(Error::Precondition(_))));
    }
}
