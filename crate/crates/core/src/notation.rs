//! Small expression languages used by the data files and the CLI.
//!
//! * [`IdxExpr`]: integer index expressions in `n` and `i`, e.g. `n-2`, `i+1`.
//! * [`RatExpr`]: rational expressions linear in `n` and `i`, e.g. `n-i-1/2`.
//! * [`EpsExpr`]: integer combinations of ε-coordinates, e.g. `e1+e2+e{i+1}`.
//! * [`parse_weight`]: CLI weights, either a comma separated coordinate list
//!   or an expression in `rho`, `w<k>` (fundamental weights), `a<k>` (simple
//!   roots) and `e<k>` (ε-coordinates, classical types only).

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, q, Q};
use crate::roots::{RootSystem, Weight};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Splits `s` into signed terms at top-level `+`/`-` (not inside braces).
fn signed_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(perr("empty expression"));
    }
    let mut out = Vec::new();
    let mut neg = false;
    let mut cur = String::new();
    let mut depth = 0;
    for (k, ch) in s.chars().enumerate() {
        match ch {
            '{' => {
                depth += 1;
                cur.push(ch);
            }
            '}' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if cur.is_empty() {
                    if k != 0 {
                        return Err(perr(format!("dangling sign in {s:?}")));
                    }
                } else {
                    out.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
            }
            _ => cur.push(ch),
        }
    }
    if cur.is_empty() {
        return Err(perr(format!("trailing sign in {s:?}")));
    }
    out.push((neg, cur));
    Ok(out)
}

/// Splits a term like `3/2n` or `2*w3` into coefficient and symbol parts.
fn split_coeff(term: &str) -> Result<(Q, &str)> {
    let t = term.trim_start_matches('*');
    let cut = t
        .find(|c: char| !(c.is_ascii_digit() || c == '/'))
        .unwrap_or(t.len());
    let (num, rest) = t.split_at(cut);
    let rest = rest.strip_prefix('*').unwrap_or(rest);
    let c = if num.is_empty() {
        Q::one()
    } else {
        parse_q(num)?
    };
    Ok((c, rest))
}

/// `a·n + b·i + c` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct IdxExpr {
    pub n: i64,
    pub i: i64,
    pub c: i64,
}

impl IdxExpr {
    pub fn constant(c: i64) -> Self {
        Self { n: 0, i: 0, c }
    }

    pub fn eval(&self, n: usize, i: usize) -> i64 {
        self.n * n as i64 + self.i * i as i64 + self.c
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut e = IdxExpr::default();
        for (neg, t) in signed_terms(s)? {
            let sign = if neg { -1 } else { 1 };
            let (c, sym) = split_coeff(&t)?;
            if !c.is_integer() {
                return Err(perr(format!("non-integral index term {t:?}")));
            }
            let c = sign * c.to_integer();
            match sym {
                "" => e.c += c,
                "n" => e.n += c,
                "i" => e.i += c,
                _ => return Err(perr(format!("unknown index symbol {sym:?}"))),
            }
        }
        Ok(e)
    }

    fn is_atomic(&self) -> bool {
        [self.n != 0, self.i != 0, self.c != 0]
            .iter()
            .filter(|&&b| b)
            .count()
            <= 1
            && self.n.abs() <= 1
            && self.i.abs() <= 1
            && self.c >= 0
    }
}

fn write_linear(f: &mut fmt::Formatter<'_>, parts: &[(Q, &str)]) -> fmt::Result {
    let mut first = true;
    for (c, sym) in parts {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if neg {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        if sym.is_empty() || a != Q::one() {
            write!(f, "{}", fmt_q(&a))?;
        }
        write!(f, "{sym}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IdxExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, &[(q(self.n), "n"), (q(self.i), "i"), (q(self.c), "")])
    }
}

/// `a·n + b·i + c` with rational coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RatExpr {
    pub n: Q,
    pub i: Q,
    pub c: Q,
}

impl RatExpr {
    pub fn constant(c: Q) -> Self {
        Self {
            n: Q::zero(),
            i: Q::zero(),
            c,
        }
    }

    pub fn eval(&self, n: usize, i: usize) -> Q {
        self.n * q(n as i64) + self.i * q(i as i64) + self.c
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut e = RatExpr::constant(Q::zero());
        for (neg, t) in signed_terms(s)? {
            let (c, sym) = split_coeff(&t)?;
            let c = if neg { -c } else { c };
            match sym {
                "" => e.c += c,
                "n" => e.n += c,
                "i" => e.i += c,
                _ => return Err(perr(format!("unknown symbol {sym:?} in {s:?}"))),
            }
        }
        Ok(e)
    }
}

impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, &[(self.n, "n"), (self.i, "i"), (self.c, "")])
    }
}

/// Integer combination of ε-coordinates with symbolic subscripts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsExpr(pub Vec<(i64, IdxExpr)>);

impl EpsExpr {
    pub fn parse(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (neg, t) in signed_terms(s)? {
            let (c, rest) = split_coeff(&t)?;
            if !c.is_integer() {
                return Err(perr(format!("non-integral ε coefficient in {t:?}")));
            }
            let sub = rest
                .strip_prefix('e')
                .ok_or_else(|| perr(format!("expected e<k> in {t:?}")))?;
            let idx = match sub.strip_prefix('{') {
                Some(inner) => IdxExpr::parse(
                    inner
                        .strip_suffix('}')
                        .ok_or_else(|| perr(format!("unbalanced brace in {t:?}")))?,
                )?,
                None => IdxExpr::parse(sub)?,
            };
            let c = c.to_integer();
            terms.push((if neg { -c } else { c }, idx));
        }
        Ok(EpsExpr(terms))
    }

    /// ε-coordinates for concrete `(n, i)`.
    pub fn eval(&self, n: usize, i: usize) -> Result<Vec<Q>> {
        let mut v = vec![Q::zero(); n];
        for (c, idx) in &self.0 {
            let k = idx.eval(n, i);
            if k < 1 || k as usize > n {
                return Err(perr(format!(
                    "subscript {idx} = {k} out of range for n = {n}"
                )));
            }
            v[k as usize - 1] += q(*c);
        }
        Ok(v)
    }
}

impl fmt::Display for EpsExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (c, idx)) in self.0.iter().enumerate() {
            if *c < 0 {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            if idx.is_atomic() && idx.n == 0 && idx.i == 0 {
                write!(f, "e{idx}")?;
            } else {
                write!(f, "e{{{idx}}}")?;
            }
        }
        Ok(())
    }
}

fn subscript(sym: &str, prefix: &str, rank: usize) -> Result<Option<usize>> {
    let Some(rest) = sym.strip_prefix(prefix) else {
        return Ok(None);
    };
    let k: usize = rest
        .parse()
        .map_err(|_| perr(format!("bad subscript in {sym:?}")))?;
    if k == 0 || k > rank {
        return Err(perr(format!("subscript {k} out of range 1..={rank}")));
    }
    Ok(Some(k))
}

/// Parses a weight for `rs`: either `c1,c2,...` in simple-root coordinates
/// or an expression such as `-a4-w3+rho` or `3/2*w3+e1`.
pub fn parse_weight(s: &str, rs: &RootSystem) -> Result<Weight> {
    let s = s.trim();
    if s.contains(',') || s.parse::<i64>().is_ok() && rs.rank() == 1 {
        let w = Weight::parse_list(s)?;
        if w.rank() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: w.rank(),
            });
        }
        return Ok(w);
    }
    let mut acc = Weight::zero(rs.rank());
    for (neg, t) in signed_terms(s)? {
        let (c, sym) = split_coeff(&t)?;
        let c = if neg { -c } else { c };
        let atom = if sym == "rho" {
            rs.rho().clone()
        } else if sym == "0" || sym.is_empty() && c.is_zero() {
            Weight::zero(rs.rank())
        } else if let Some(k) = subscript(sym, "w", rs.rank())? {
            rs.fundamental_weight(k - 1).clone()
        } else if let Some(k) = subscript(sym, "a", rs.rank())? {
            rs.simple_root(k - 1)
        } else if let Some(k) = subscript(sym, "e", rs.rank())? {
            rs.eps_unit(k)
                .ok_or_else(|| perr(format!("ε-coordinates unavailable for {}", rs.label())))?
        } else {
            return Err(perr(format!("unknown weight symbol {sym:?}")));
        };
        acc += &atom.scale(c);
    }
    Ok(acc)
}
