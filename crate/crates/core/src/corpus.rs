//! Line-oriented data files for the constituent corpus and the golden tables.
//!
//! Each non-blank, non-comment line is one record with five `|`-separated
//! fields:
//!
//! ```text
//! FAMILY | NODES         | TABLE | KIND   | VALUE
//! B      | 3 <= i <= n-2 | T1    | ngamma | e1+e2+e{i+1}+e{i+2}
//! E6     | i = 3         | T2    | gamma  | (1,2,2,4,3,2)
//! D      | 3 <= i <= n-3 | T4    | gamma  | n-i-1
//! ```
//!
//! * `FAMILY` is a letter (all ranks) or a letter with a rank (`E6`, `F4`).
//! * `NODES` is `lo <= i <= hi` or `i = x`; bounds are integer expressions in `n`.
//! * `TABLE` is `T1`..`T5`; `KIND` is `gamma` or `ngamma`.
//! * `VALUE` depends on the table: an ε-expression (T1), simple-root
//!   coefficients in parentheses (T2), a type `1a`/`1b`/`2`/`3` (T3), a
//!   rational expression in `n` and `i` (T4), or `standard`/`non-standard`
//!   (T5). `?` marks an unknown entry and `-` an absent constituent.
//!
//! `#` starts a comment.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linkage::Phi;
use crate::notation::{EpsExpr, IdxExpr, RatExpr};
use crate::omega::{CType, Kind};
use crate::roots::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl TableId {
    pub const ALL: [TableId; 5] = [
        TableId::T1,
        TableId::T2,
        TableId::T3,
        TableId::T4,
        TableId::T5,
    ];

    pub fn caption(self) -> &'static str {
        match self {
            TableId::T1 => "Highest weights of special constituents (classical)",
            TableId::T2 => "Highest weights of special constituents (exceptional)",
            TableId::T3 => "Types of special constituents",
            TableId::T4 => "Special values s0 (line bundle L(s0 λ_q))",
            TableId::T5 => "Standardness of the Ω₂ homomorphisms",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TableId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T1" => Ok(TableId::T1),
            "T2" => Ok(TableId::T2),
            "T3" => Ok(TableId::T3),
            "T4" => Ok(TableId::T4),
            "T5" => Ok(TableId::T5),
            other => Err(Error::Parse(format!("unknown table {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyKey {
    pub family: Family,
    pub rank: Option<usize>,
}

impl FamilyKey {
    pub fn matches(&self, family: Family, rank: usize) -> bool {
        self.family == family && self.rank.is_none_or(|r| r == rank)
    }
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank {
            Some(r) => write!(f, "{}{r}", self.family),
            None => write!(f, "{}", self.family),
        }
    }
}

impl FromStr for FamilyKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let family: Family = s.get(..1).unwrap_or("").parse()?;
        let rest = &s[1..];
        let rank = if rest.is_empty() {
            None
        } else {
            Some(
                rest.parse()
                    .map_err(|_| Error::Parse(format!("bad family key {s:?}")))?,
            )
        };
        Ok(Self { family, rank })
    }
}

/// Node range `lo <= i <= hi`, bounds in terms of the rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NodePattern {
    pub lo: IdxExpr,
    pub hi: IdxExpr,
}

impl NodePattern {
    pub fn matches(&self, rank: usize, node: usize) -> bool {
        let node = node as i64;
        self.lo.eval(rank, 0) <= node && node <= self.hi.eval(rank, 0)
    }
}

impl fmt::Display for NodePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "i = {}", self.lo)
        } else {
            write!(f, "{} <= i <= {}", self.lo, self.hi)
        }
    }
}

impl FromStr for NodePattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad node pattern {s:?}"));
        let check = |e: &IdxExpr| if e.i != 0 { Err(bad()) } else { Ok(()) };
        if let Some(rhs) = s
            .strip_prefix('i')
            .map(str::trim)
            .and_then(|r| r.strip_prefix('='))
        {
            let x = IdxExpr::parse(rhs)?;
            check(&x)?;
            return Ok(Self { lo: x, hi: x });
        }
        let parts: Vec<&str> = s.split("<=").map(str::trim).collect();
        match parts.as_slice() {
            [lo, "i", hi] => {
                let lo = IdxExpr::parse(lo)?;
                let hi = IdxExpr::parse(hi)?;
                check(&lo)?;
                check(&hi)?;
                Ok(Self { lo, hi })
            }
            _ => Err(bad()),
        }
    }
}

/// A table cell as written in a data file (possibly symbolic in `n`, `i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Absent,
    Unknown,
    Eps(EpsExpr),
    Alpha(Vec<i64>),
    Type(CType),
    Rational(RatExpr),
    Phi(Phi),
}

impl Value {
    pub fn parse(table: TableId, s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "-" => return Ok(Value::Absent),
            "?" => return Ok(Value::Unknown),
            _ => {}
        }
        match table {
            TableId::T1 => Ok(Value::Eps(EpsExpr::parse(s)?)),
            TableId::T2 => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("expected (c1,...,cn), got {s:?}")))?;
                inner
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad coefficient {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(Value::Alpha)
            }
            TableId::T3 => Ok(Value::Type(s.parse()?)),
            TableId::T4 => Ok(Value::Rational(RatExpr::parse(s)?)),
            TableId::T5 => Ok(Value::Phi(s.parse()?)),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Absent => f.write_str("-"),
            Value::Unknown => f.write_str("?"),
            Value::Eps(e) => write!(f, "{e}"),
            Value::Alpha(c) => {
                let parts: Vec<String> = c.iter().map(i64::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            Value::Type(t) => write!(f, "{t}"),
            Value::Rational(r) => write!(f, "{r}"),
            Value::Phi(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub family: FamilyKey,
    pub nodes: NodePattern,
    pub table: TableId,
    pub kind: Kind,
    pub value: Value,
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {} | {} | {}",
            self.family, self.nodes, self.table, self.kind, self.value
        )
    }
}

impl FromStr for Record {
    type Err = Error;
    fn from_str(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [family, nodes, table, kind, value] = fields.as_slice() else {
            return Err(Error::Parse(format!(
                "expected 5 fields, got {}",
                fields.len()
            )));
        };
        let table: TableId = table.parse()?;
        Ok(Record {
            family: family.parse()?,
            nodes: nodes.parse()?,
            table,
            kind: kind.parse()?,
            value: Value::parse(table, value)?,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub records: Vec<Record>,
}

const BUILTIN_CONSTITUENTS: &str = include_str!("../data/constituents.txt");
const BUILTIN_GOLDEN: &str = include_str!("../data/golden.txt");

impl Corpus {
    pub fn parse(text: &str) -> Result<Self> {
        let mut records = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let rec: Record = line
                .parse()
                .map_err(|e: Error| Error::Parse(format!("line {}: {e}", k + 1)))?;
            records.push(rec);
        }
        Ok(Self { records })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Highest weights of the special constituents (tables T1 and T2).
    pub fn builtin() -> &'static Corpus {
        static C: OnceLock<Corpus> = OnceLock::new();
        C.get_or_init(|| Corpus::parse(BUILTIN_CONSTITUENTS).expect("built-in constituent corpus"))
    }

    /// Reference tables T3, T4 and T5.
    pub fn golden() -> &'static Corpus {
        static C: OnceLock<Corpus> = OnceLock::new();
        C.get_or_init(|| Corpus::parse(BUILTIN_GOLDEN).expect("built-in golden tables"))
    }

    /// The built-in file holding `table`.
    pub fn builtin_for(table: TableId) -> &'static Corpus {
        match table {
            TableId::T1 | TableId::T2 => Self::builtin(),
            _ => Self::golden(),
        }
    }

    pub fn find(
        &self,
        table: TableId,
        family: Family,
        rank: usize,
        node: usize,
        kind: Kind,
    ) -> Option<&Record> {
        self.records.iter().find(|r| {
            r.table == table
                && r.kind == kind
                && r.family.matches(family, rank)
                && r.nodes.matches(rank, node)
        })
    }

    pub fn lookup(
        &self,
        table: TableId,
        family: Family,
        rank: usize,
        node: usize,
        kind: Kind,
    ) -> Option<&Value> {
        self.find(table, family, rank, node, kind).map(|r| &r.value)
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
