//! Chevalley basis structure constants and a small Verma-module calculator.
//!
//! Roots are addressed by signed index: `0..N` are the positive roots in the
//! order of [`RootSystem::positive_roots`], `N + k` is the negative of root `k`.
//! The constants `N_{r,s}` in `[E_r, E_s] = N_{r,s} E_{r+s}` are built from
//! extraspecial pairs: for each non-simple positive `ξ`, `α` is the first
//! positive root with `ξ - α` positive, `N_{α,ξ-α} = ±(p+1)` with the sign
//! taken from a seed, and every other constant follows from
//! `N_{s,r} = -N_{r,s}`, `N_{-r,-s} = -N_{r,s}`, the cyclic relation
//! `N_{r,s}/|t|² = N_{s,t}/|r|² = N_{t,r}/|s|²` for `r+s+t = 0`, and the
//! four-root relation for `r+s+t+u = 0`. `[E_r, E_{-r}] = H_r` is the coroot.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::parabolic::ParabolicData;
use crate::rational::{fmt_q, q, Q};
use crate::roots::{Family, RootSystem, Weight};

/// Basis element of `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    /// root vector, signed root index
    E(usize),
    /// simple coroot `H_i = α_i^∨`
    H(usize),
}

/// Linear combination of basis elements.
pub type LieElem = BTreeMap<Gen, Q>;

fn add_to<K: Ord + Clone>(m: &mut BTreeMap<K, Q>, k: &K, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(k.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        m.remove(k);
    }
}

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    rs: Arc<RootSystem>,
    np: usize,
    signed: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    len2: Vec<Q>,
    n: HashMap<(usize, usize), i64>,
}

impl ChevalleyBasis {
    /// Builds the constants with every extraspecial sign `+1`.
    pub fn build(rs: Arc<RootSystem>) -> Result<Self> {
        Self::build_with_signs(rs, |_| 1)
    }

    /// `sign(ξ)` chooses the sign of `N_{α,β}` for the extraspecial pair of
    /// the positive root with index `ξ`.
    pub fn build_with_signs(rs: Arc<RootSystem>, sign: impl Fn(usize) -> i64) -> Result<Self> {
        let np = rs.num_positive();
        let mut signed: Vec<Vec<i64>> = rs.positive_roots().to_vec();
        signed.extend(
            rs.positive_roots()
                .iter()
                .map(|r| r.iter().map(|x| -x).collect()),
        );
        let index = signed
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let len2 = (0..2 * np).map(|i| rs.root_len2(i % np)).collect();
        let mut cb = Self {
            rs,
            np,
            signed,
            index,
            len2,
            n: HashMap::new(),
        };
        cb.fill_positive(sign)?;
        cb.fill_all()?;
        Ok(cb)
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn num_positive(&self) -> usize {
        self.np
    }

    pub fn neg(&self, r: usize) -> usize {
        (r + self.np) % (2 * self.np)
    }

    pub fn is_positive(&self, r: usize) -> bool {
        r < self.np
    }

    pub fn root(&self, r: usize) -> Weight {
        Weight::from_ints(&self.signed[r])
    }

    /// Signed index of a root given as a weight.
    pub fn signed_index(&self, w: &Weight) -> Option<usize> {
        self.index.get(&w.to_ints()?).copied()
    }

    fn sum(&self, r: usize, s: usize) -> Option<usize> {
        let v: Vec<i64> = self.signed[r]
            .iter()
            .zip(&self.signed[s])
            .map(|(a, b)| a + b)
            .collect();
        self.index.get(&v).copied()
    }

    fn diff(&self, r: usize, s: usize) -> Option<usize> {
        self.sum(r, self.neg(s))
    }

    /// Largest `p` with `s - p·r` a root.
    pub fn string_below(&self, r: usize, s: usize) -> i64 {
        let mut p = 0;
        let mut cur = s;
        while let Some(next) = self.diff(cur, r) {
            p += 1;
            cur = next;
        }
        p
    }

    /// `N_{r,s}`, or `None` when `r + s` is not a root.
    pub fn n(&self, r: usize, s: usize) -> Option<i64> {
        self.n.get(&(r, s)).copied()
    }

    /// `N_{α,β}` for roots given as weights.
    pub fn n_of(&self, a: &Weight, b: &Weight) -> Result<i64> {
        let r = self
            .signed_index(a)
            .ok_or_else(|| Error::NotARoot(a.to_string()))?;
        let s = self
            .signed_index(b)
            .ok_or_else(|| Error::NotARoot(b.to_string()))?;
        self.n(r, s)
            .ok_or_else(|| Error::NotARoot(format!("{} + {}", a, b)))
    }

    /// Constant from the table built so far, reducing mixed-sign pairs to
    /// same-sign pairs via the cyclic relation.
    fn lookup(&self, r: usize, s: usize) -> Result<i64> {
        let Some(t_pos) = self.sum(r, s) else {
            return Ok(0);
        };
        let (pr, ps) = (self.is_positive(r), self.is_positive(s));
        if pr && ps {
            return self.n.get(&(r, s)).copied().ok_or_else(|| {
                Error::Invariant(format!("N[{r},{s}] requested before it was built"))
            });
        }
        if !pr && !ps {
            return Ok(-self.lookup(self.neg(r), self.neg(s))?);
        }
        let t = self.neg(t_pos);
        let val = if self.is_positive(t) == ps {
            q(self.lookup(s, t)?) * self.len2[t] / self.len2[r]
        } else {
            q(self.lookup(t, r)?) * self.len2[t] / self.len2[s]
        };
        if !val.is_integer() {
            return Err(Error::Invariant(format!(
                "non-integral N[{r},{s}] = {}",
                fmt_q(&val)
            )));
        }
        Ok(val.to_integer())
    }

    fn fill_positive(&mut self, sign: impl Fn(usize) -> i64) -> Result<()> {
        let np = self.np;
        for xi in 0..np {
            let pairs: Vec<(usize, usize)> = (0..np)
                .filter_map(|g| {
                    self.diff(xi, g)
                        .filter(|&d| d < np && g < d)
                        .map(|d| (g, d))
                })
                .collect();
            let Some(&(a, b)) = pairs.first() else {
                continue;
            };
            let nab = sign(xi).signum() * (self.string_below(a, b) + 1);
            self.n.insert((a, b), nab);
            self.n.insert((b, a), -nab);
            let xi2 = self.len2[xi];
            for &(g, d) in &pairs[1..] {
                let mut acc = Q::zero();
                if let Some(bg) = self.diff(b, g) {
                    acc += q(self.lookup(b, self.neg(g))? * self.lookup(a, self.neg(d))?)
                        / self.len2[bg];
                }
                if let Some(ag) = self.diff(a, g) {
                    acc += q(self.lookup(self.neg(g), a)? * self.lookup(b, self.neg(d))?)
                        / self.len2[ag];
                }
                let val = xi2 / q(nab) * acc;
                if !val.is_integer() || val.is_zero() {
                    return Err(Error::Invariant(format!(
                        "bad N[{g},{d}] = {}",
                        fmt_q(&val)
                    )));
                }
                let v = val.to_integer();
                self.n.insert((g, d), v);
                self.n.insert((d, g), -v);
            }
        }
        Ok(())
    }

    fn fill_all(&mut self) -> Result<()> {
        let total = 2 * self.np;
        let mut all = HashMap::new();
        for r in 0..total {
            for s in 0..total {
                if self.sum(r, s).is_some() {
                    all.insert((r, s), self.lookup(r, s)?);
                }
            }
        }
        self.n = all;
        Ok(())
    }

    /// `H_r` for a signed root as a combination of simple coroots.
    fn coroot(&self, r: usize) -> LieElem {
        let mut out = LieElem::new();
        for (i, &c) in self.signed[r].iter().enumerate() {
            let coeff = q(c) * self.rs.simple_len2(i) / self.len2[r];
            add_to(&mut out, &Gen::H(i), coeff);
        }
        out
    }

    pub fn bracket(&self, x: Gen, y: Gen) -> LieElem {
        let mut out = LieElem::new();
        match (x, y) {
            (Gen::H(_), Gen::H(_)) => {}
            (Gen::H(i), Gen::E(r)) => {
                let c = self.rs.pairing_simple(&self.root(r), i);
                add_to(&mut out, &Gen::E(r), c);
            }
            (Gen::E(_), Gen::H(_)) => {
                for (g, c) in self.bracket(y, x) {
                    add_to(&mut out, &g, -c);
                }
            }
            (Gen::E(r), Gen::E(s)) => {
                if s == self.neg(r) {
                    return self.coroot(r);
                }
                if let (Some(t), Some(nrs)) = (self.sum(r, s), self.n(r, s)) {
                    add_to(&mut out, &Gen::E(t), q(nrs));
                }
            }
        }
        out
    }

    pub fn bracket_elems(&self, x: &LieElem, y: &LieElem) -> LieElem {
        let mut out = LieElem::new();
        for (gx, cx) in x {
            for (gy, cy) in y {
                for (g, c) in self.bracket(*gx, *gy) {
                    add_to(&mut out, &g, c * cx * cy);
                }
            }
        }
        out
    }

    pub fn generators(&self) -> Vec<Gen> {
        (0..2 * self.np)
            .map(Gen::E)
            .chain((0..self.rs.rank()).map(Gen::H))
            .collect()
    }

    /// Number of basis triples on which the Jacobi identity fails.
    pub fn jacobi_failures(&self) -> usize {
        let gens = self.generators();
        let one = |g: Gen| LieElem::from([(g, Q::one())]);
        let mut bad = 0;
        for (ix, &x) in gens.iter().enumerate() {
            for (iy, &y) in gens.iter().enumerate().skip(ix) {
                for &z in gens.iter().skip(iy) {
                    let mut total = LieElem::new();
                    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                        let inner = self.bracket(b, c);
                        for (g, v) in self.bracket_elems(&one(a), &inner) {
                            add_to(&mut total, &g, v);
                        }
                    }
                    if !total.is_empty() {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Checks antisymmetry, `N_{-r,-s} = -N_{r,s}` and `|N_{r,s}| = p + 1`.
    pub fn check_constants(&self) -> Result<()> {
        for (&(r, s), &v) in &self.n {
            if self.n(s, r) != Some(-v) {
                return Err(Error::Invariant(format!("N[{r},{s}] not antisymmetric")));
            }
            if self.n(self.neg(r), self.neg(s)) != Some(-v) {
                return Err(Error::Invariant(format!("N[-{r},-{s}] != -N[{r},{s}]")));
            }
            if v.abs() != self.string_below(r, s) + 1 {
                return Err(Error::Invariant(format!(
                    "|N[{r},{s}]| = {} != p+1",
                    v.abs()
                )));
            }
        }
        Ok(())
    }

    pub fn render_root(&self, r: usize) -> String {
        self.rs.render(&self.root(r))
    }
}

/// An element `Σ c·(Y₁⋯Y_k ⊗ 1)` of `M_q(-s₀λ_q + ρ) ≅ U(n̄) ⊗ C`, with each
/// monomial a sorted list of signed indices of roots of `n̄`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VermaVector {
    pub terms: BTreeMap<Vec<usize>, Q>,
}

impl VermaVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(mut roots: Vec<usize>, c: Q) -> Self {
        roots.sort_unstable();
        let mut v = Self::zero();
        add_to(&mut v.terms, &roots, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn coeff(&self, mono: &[usize]) -> Q {
        let mut m = mono.to_vec();
        m.sort_unstable();
        self.terms.get(&m).copied().unwrap_or_else(Q::zero)
    }

    pub fn add_scaled(&mut self, other: &VermaVector, c: Q) {
        for (m, v) in &other.terms {
            add_to(&mut self.terms, m, *v * c);
        }
    }
}

/// Action of `g` on `M_q(-s₀λ_q + ρ)` for a maximal parabolic.
pub struct VermaModule<'a> {
    cb: &'a ChevalleyBasis,
    pd: &'a ParabolicData,
    s0: Q,
}

impl<'a> VermaModule<'a> {
    pub fn new(cb: &'a ChevalleyBasis, pd: &'a ParabolicData, s0: Q) -> Self {
        Self { cb, pd, s0 }
    }

    fn in_nbar(&self, g: Gen) -> bool {
        match g {
            Gen::E(r) => !self.cb.is_positive(r) && self.pd.level(r - self.cb.np) > 0,
            Gen::H(_) => false,
        }
    }

    /// Value of the highest weight `-s₀λ_q` on `H_i`.
    fn character(&self, i: usize) -> Q {
        if i == self.pd.crossed() {
            -self.s0
        } else {
            Q::zero()
        }
    }

    fn reduce(&self, word: Vec<Gen>, c: Q, out: &mut VermaVector) {
        if c.is_zero() {
            return;
        }
        match word.iter().rposition(|&g| !self.in_nbar(g)) {
            Some(p) if p + 1 == word.len() => {
                let mut rest = word;
                let g = rest.pop().expect("non-empty");
                if let Gen::H(i) = g {
                    self.reduce(rest, c * self.character(i), out);
                }
                // root vectors of l and n kill the highest weight vector
            }
            Some(p) => {
                let (x, y) = (word[p], word[p + 1]);
                let mut swapped = word.clone();
                swapped.swap(p, p + 1);
                self.reduce(swapped, c, out);
                for (g, v) in self.cb.bracket(x, y) {
                    let mut w = word[..p].to_vec();
                    w.push(g);
                    w.extend_from_slice(&word[p + 2..]);
                    self.reduce(w, c * v, out);
                }
            }
            None => self.normal_order(word, c, out),
        }
    }

    fn normal_order(&self, word: Vec<Gen>, c: Q, out: &mut VermaVector) {
        let key = |g: &Gen| match g {
            Gen::E(r) => *r,
            Gen::H(_) => unreachable!("only n̄ elements are reordered"),
        };
        match (0..word.len().saturating_sub(1)).find(|&k| key(&word[k]) > key(&word[k + 1])) {
            None => {
                let mono: Vec<usize> = word.iter().map(key).collect();
                add_to(&mut out.terms, &mono, c);
            }
            Some(k) => {
                let (x, y) = (word[k], word[k + 1]);
                let mut swapped = word.clone();
                swapped.swap(k, k + 1);
                self.normal_order(swapped, c, out);
                for (g, v) in self.cb.bracket(x, y) {
                    let mut w = word[..k].to_vec();
                    w.push(g);
                    w.extend_from_slice(&word[k + 2..]);
                    self.normal_order(w, c * v, out);
                }
            }
        }
    }

    /// `X_r · v` for a signed root index `r`.
    pub fn act(&self, r: usize, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero();
        for (mono, c) in &v.terms {
            let mut word = vec![Gen::E(r)];
            word.extend(mono.iter().map(|&m| Gen::E(m)));
            self.reduce(word, *c, &mut out);
        }
        out
    }

    /// `X_α · v` for a positive root `α` of `l`; the result has degree at
    /// most that of `v`.
    pub fn raise(&self, alpha: usize, v: &VermaVector) -> Result<VermaVector> {
        if !self.cb.is_positive(alpha) || self.pd.level(alpha) != 0 {
            return Err(Error::Precondition(format!(
                "{} is not a positive root of l",
                self.cb.render_root(alpha)
            )));
        }
        let out = self.act(alpha, v);
        if out.degree() > v.degree() {
            return Err(Error::Invariant("raising increased the degree".into()));
        }
        Ok(out)
    }

    /// Weight of a homogeneous vector relative to the highest weight.
    pub fn weight(&self, v: &VermaVector) -> Option<Weight> {
        let mut ws = v.terms.keys().map(|m| {
            let mut w = Weight::zero(self.cb.rs().rank());
            for &r in m {
                w += &self.cb.root(r);
            }
            w
        });
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn render(&self, v: &VermaVector) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = v
            .terms
            .iter()
            .map(|(m, c)| {
                let mut s = String::new();
                let mut k = 0;
                while k < m.len() {
                    let run = m[k..].iter().take_while(|&&x| x == m[k]).count();
                    s.push_str(&format!("X[{}]", self.cb.render_root(m[k])));
                    if run > 1 {
                        s.push_str(&format!("^{run}"));
                    }
                    k += run;
                }
                if m.is_empty() {
                    s.push('1');
                }
                format!("{}·{s}", fmt_q(c))
            })
            .collect();
        parts.join(" + ")
    }
}

fn require_b(pd: &ParabolicData, lo: usize, hi: usize) -> Result<()> {
    let rs = pd.rs();
    let i = pd.node();
    if rs.family() != Family::B || i < lo || i > rs.rank() - hi {
        return Err(Error::Precondition(format!(
            "{} is outside the B_n(i) range {lo} <= i <= n-{hi}",
            pd.label()
        )));
    }
    Ok(())
}

/// `2ε_i - β ∉ Δ⁺` for every `β ∈ Δ⁺(l) ∪ Δ(z(n))` in `B_n(i)`.
pub fn root_gap_check(pd: &ParabolicData) -> Result<bool> {
    require_b(pd, 3, 1)?;
    let rs = pd.rs();
    let two_ei = rs.eps_unit(pd.node()).expect("classical").scale(q(2));
    let ok = pd.delta_l().iter().chain(pd.delta_zn()).all(|&b| {
        !matches!(
            rs.find_root(&(&two_ei - &rs.positive_root(b))),
            Some((_, true))
        )
    });
    Ok(ok)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionH {
    pub label: String,
    /// dimension of the weight `-2ε_i` subspace of `Sym²(n̄)`
    pub candidates: usize,
    /// dimension of the solution space of `ad(X_α)u = 0`, `α ∈ Π(l)`
    pub dimension: usize,
    /// normalized solution: coefficient of `X_{-ε_i}²` is 1
    pub solution: String,
    /// `(j, b_j)` for `j = i+1..n`
    #[serde(serialize_with = "ser_pairs")]
    pub b: Vec<(usize, Q)>,
    /// every solution lies in the span of `X_{-ε_i}²` and `X_{-(ε_i+ε_k)}X_{-(ε_i-ε_k)}`
    pub normal_form: bool,
    pub constants1: bool,
    pub constants2: bool,
    pub annihilated: bool,
    /// `α_i`-multiplicity of `2ε_i`; no `Sym^r(n̄)` with `r` above it has this weight
    pub alpha_i_multiplicity: i64,
    pub root_gap: bool,
}

fn ser_pairs<S: serde::Serializer>(v: &[(usize, Q)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(v.iter().map(|(j, b)| (j.to_string(), fmt_q(b))))
}

impl ConditionH {
    pub fn holds(&self) -> bool {
        self.dimension == 1
            && self.normal_form
            && self.constants1
            && self.constants2
            && self.annihilated
            && self.alpha_i_multiplicity == 2
            && self.root_gap
    }
}

/// Solves the highest-weight condition for weight `-2ε_i` in `B_n(i)`,
/// `3 <= i <= n-1`, and checks the closed forms of the coefficients against
/// the engine's own structure constants.
pub fn condition_h_solve(pd: &ParabolicData, cb: &ChevalleyBasis) -> Result<ConditionH> {
    require_b(pd, 3, 1)?;
    let rs = pd.rs();
    let (n, i) = (rs.rank(), pd.node());
    let e = |k: usize| rs.eps_unit(k).expect("classical");
    let two_ei = e(i).scale(q(2));
    let s0 = q((n - i) as i64) - crate::rational::qf(1, 2);
    let vm = VermaModule::new(cb, pd, s0);
    let np = cb.num_positive();

    // weight -2ε_i monomials in Sym²(n̄)
    let nroots: Vec<usize> = (0..np).filter(|&r| pd.level(r) > 0).collect();
    let mut cands: Vec<Vec<usize>> = Vec::new();
    for (x, &a) in nroots.iter().enumerate() {
        for &b in &nroots[x..] {
            if &rs.positive_root(a) + &rs.positive_root(b) == two_ei {
                let mut m = vec![cb.neg(a), cb.neg(b)];
                m.sort_unstable();
                cands.push(m);
            }
        }
    }
    let neg_idx = |w: &Weight| cb.signed_index(&-w).expect("root");
    let x_ei = neg_idx(&e(i));
    let pair = |k: usize| {
        let mut m = vec![neg_idx(&(&e(i) + &e(k))), neg_idx(&(&e(i) - &e(k)))];
        m.sort_unstable();
        m
    };
    let mut expected: Vec<Vec<usize>> = vec![vec![x_ei, x_ei]];
    expected.extend((i + 1..=n).map(pair));
    let mut sorted_c = cands.clone();
    sorted_c.sort();
    let mut sorted_e = expected.clone();
    sorted_e.sort();
    let normal_form = sorted_c == sorted_e;

    // linear system: rows indexed by (α, result monomial)
    let mut rows: BTreeMap<(usize, Vec<usize>), Vec<Q>> = BTreeMap::new();
    for (col, m) in cands.iter().enumerate() {
        let v = VermaVector::monomial(m.clone(), Q::one());
        for &a in pd.pi_l() {
            let r = vm.raise(a, &v)?;
            for (mono, c) in r.terms {
                rows.entry((a, mono))
                    .or_insert_with(|| vec![Q::zero(); cands.len()])[col] += c;
            }
        }
    }
    let mat = if rows.is_empty() {
        Matrix::zeros(0, cands.len())
    } else {
        Matrix::from_rows(&rows.into_values().collect::<Vec<_>>())
    };
    let null = mat.nullspace();
    let dimension = null.len();
    if dimension != 1 {
        return Err(Error::Invariant(format!(
            "{}: solution space has dimension {dimension}, expected 1",
            pd.label()
        )));
    }
    let sol = &null[0];
    let a_col = cands
        .iter()
        .position(|m| *m == vec![x_ei, x_ei])
        .ok_or_else(|| Error::Invariant("X_{-ε_i}² missing from candidates".into()))?;
    if sol[a_col].is_zero() {
        return Err(Error::Invariant("solution has no X_{-ε_i}² term".into()));
    }
    let scale = sol[a_col].recip();
    let mut u0 = VermaVector::zero();
    for (m, c) in cands.iter().zip(sol) {
        u0.add_scaled(&VermaVector::monomial(m.clone(), Q::one()), *c * scale);
    }
    let b: Vec<(usize, Q)> = (i + 1..=n).map(|j| (j, u0.coeff(&pair(j)))).collect();
    let b_of = |j: usize| b[j - i - 1].1;

    let nc = |x: &Weight, y: &Weight| -> Result<Q> { Ok(q(cb.n_of(x, y)?)) };
    let constants2 = b_of(n) == q(-2) * nc(&e(n), &-e(i))? / nc(&e(n), &-(&e(i) + &e(n)))?;
    let mut constants1 = true;
    for j in i + 1..n {
        let mut prod = Q::one();
        for k in j..n {
            let simple = &e(k) - &e(k + 1);
            prod *= nc(&simple, &-(&e(i) - &e(k + 1)))? / nc(&simple, &-(&e(i) + &e(k)))?;
        }
        let sign = if (n - j) % 2 == 0 {
            Q::one()
        } else {
            -Q::one()
        };
        constants1 &= b_of(j) == sign * b_of(n) * prod;
    }
    let mut annihilated = true;
    for &a in pd.pi_l() {
        annihilated &= vm.raise(a, &u0)?.is_zero();
    }
    Ok(ConditionH {
        label: pd.label(),
        candidates: cands.len(),
        dimension,
        solution: vm.render(&u0),
        b,
        normal_form,
        constants1,
        constants2,
        annihilated,
        alpha_i_multiplicity: two_ei.coords()[i - 1].to_integer(),
        root_gap: root_gap_check(pd)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Type2Identity {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub n_constant: i64,
    pub holds: bool,
}

/// `X_{ε₁-ε_n}² · X_{-ε₁}² ⊗ 1 = 2N²_{ε₁-ε_n,-ε₁} X_{-ε_n}² ⊗ 1` in
/// `M_q(λ_n + ρ)` for `B_n(n)`.
pub fn type2_identity(pd: &ParabolicData, cb: &ChevalleyBasis) -> Result<Type2Identity> {
    let rs = pd.rs();
    let n = rs.rank();
    if rs.family() != Family::B || pd.node() != n {
        return Err(Error::Precondition(format!(
            "{} is not of type B_n(n)",
            pd.label()
        )));
    }
    let e = |k: usize| rs.eps_unit(k).expect("classical");
    let vm = VermaModule::new(cb, pd, q(-1));
    let x = cb.signed_index(&(&e(1) - &e(n))).expect("root");
    let m1 = cb.signed_index(&-e(1)).expect("root");
    let mn = cb.signed_index(&-e(n)).expect("root");
    let start = VermaVector::monomial(vec![m1, m1], Q::one());
    let lhs = vm.raise(x, &vm.raise(x, &start)?)?;
    let nc = cb
        .n(x, m1)
        .ok_or_else(|| Error::Invariant("ε₁-ε_n - ε₁ is not a root".into()))?;
    let rhs = VermaVector::monomial(vec![mn, mn], q(2 * nc * nc));
    Ok(Type2Identity {
        label: pd.label(),
        lhs: vm.render(&lhs),
        rhs: vm.render(&rhs),
        n_constant: nc,
        holds: lhs == rhs,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Reachability {
    pub label: String,
    pub start: String,
    /// simple roots (1-based) applied in order
    pub path: Vec<usize>,
    pub end: String,
    /// `end = c·X_{-α_q}²` with `c ≠ 0`
    pub reached: bool,
}

/// From `X_{-μ}² ⊗ 1` (`μ` the highest weight of `g(1)`), applies raising
/// operators of `Π(l)` until weight `-2α_q` is reached.
pub fn type2_reachability(pd: &ParabolicData, cb: &ChevalleyBasis) -> Result<Reachability> {
    let vm = VermaModule::new(cb, pd, q(-1));
    let mu = pd.mu()?;
    let m = cb.signed_index(&-&mu).expect("root");
    let aq = pd.crossed();
    let target = -&pd.alpha_q().scale(q(2));
    let start = VermaVector::monomial(vec![m, m], Q::one());
    let mut frontier: Vec<(VermaVector, Vec<usize>)> = vec![(start.clone(), Vec::new())];
    let mut seen = std::collections::HashSet::new();
    seen.insert(vm.weight(&start).expect("homogeneous"));
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (v, path) in &frontier {
            if vm.weight(v).as_ref() == Some(&target) {
                let goal = cb.neg(aq);
                let c = v.coeff(&[goal, goal]);
                let reached = !c.is_zero() && v.terms.len() == 1;
                return Ok(Reachability {
                    label: pd.label(),
                    start: vm.render(&start),
                    path: path.iter().map(|a| a + 1).collect(),
                    end: vm.render(v),
                    reached,
                });
            }
            for &a in pd.pi_l() {
                let r = vm.raise(a, v)?;
                if r.is_zero() {
                    continue;
                }
                let w = vm.weight(&r).expect("homogeneous");
                if seen.insert(w) {
                    let mut p = path.clone();
                    p.push(a);
                    next.push((r, p));
                }
            }
        }
        frontier = next;
    }
    Ok(Reachability {
        label: pd.label(),
        start: vm.render(&start),
        path: Vec::new(),
        end: "0".into(),
        reached: false,
    })
}

impl fmt::Display for ConditionH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: weight -2e_i subspace of Sym2(n-bar) has dimension {}",
            self.label, self.candidates
        )?;
        writeln!(f, "  solution space dimension: {}", self.dimension)?;
        writeln!(f, "  u0 = {}", self.solution)?;
        for (j, b) in &self.b {
            writeln!(f, "  b_{j} = {}", fmt_q(b))?;
        }
        writeln!(f, "  b_n closed form:          {}", ok(self.constants2))?;
        writeln!(f, "  b_j recurrence:           {}", ok(self.constants1))?;
        writeln!(f, "  annihilated by Π(l):      {}", ok(self.annihilated))?;
        writeln!(f, "  normal form:              {}", ok(self.normal_form))?;
        writeln!(f, "  2e_i - β ∉ Δ⁺ on l ∪ z(n): {}", ok(self.root_gap))?;
        write!(
            f,
            "  α_i-multiplicity of 2e_i: {}",
            self.alpha_i_multiplicity
        )
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cb(f: Family, n: usize) -> ChevalleyBasis {
        ChevalleyBasis::build(Arc::new(RootSystem::build(f, n).unwrap())).unwrap()
    }

    #[test]
    fn constants_are_consistent() {
        for (f, n) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::G, 2),
            (Family::D, 4),
        ] {
            let c = cb(f, n);
            c.check_constants().unwrap();
            assert_eq!(c.jacobi_failures(), 0, "{f}{n}");
        }
    }

    #[test]
    fn simply_laced_constants_are_units() {
        let c = cb(Family::D, 5);
        assert!(c.n.values().all(|v| v.abs() == 1));
    }

    #[test]
    fn b4_chain_lengths() {
        let c = cb(Family::B, 4);
        let rs = c.rs();
        let e = |k| rs.eps_unit(k).unwrap();
        assert_eq!(c.n_of(&(&e(3) - &e(4)), &e(4)).unwrap().abs(), 1);
        assert_eq!(c.n_of(&e(3), &e(4)).unwrap().abs(), 2);
        assert!(c.n_of(&e(4), &e(4)).is_err());
    }

    #[test]
    fn raise_zero_is_zero() {
        let pd = ParabolicData::build(Family::B, 5, 3).unwrap();
        let c = ChevalleyBasis::build(pd.rs_arc()).unwrap();
        let vm = VermaModule::new(&c, &pd, q(0));
        assert!(vm.raise(0, &VermaVector::zero()).unwrap().is_zero());
        assert!(vm.raise(2, &VermaVector::zero()).is_err());
    }

    #[test]
    fn h_acts_by_character() {
        let pd = ParabolicData::build(Family::B, 4, 4).unwrap();
        let c = ChevalleyBasis::build(pd.rs_arc()).unwrap();
        let vm = VermaModule::new(&c, &pd, q(-1));
        // X_{α_q} X_{-α_q} ⊗ 1 = H_{α_q} ⊗ 1 = ⟨λ_q, α_q^∨⟩ = 1
        let aq = pd.crossed();
        let v = VermaVector::monomial(vec![c.neg(aq)], Q::one());
        let r = vm.act(aq, &v);
        assert_eq!(r.coeff(&[]), q(1));
    }

    #[test]
    fn condition_h_b5() {
        for i in [3, 4] {
            let pd = ParabolicData::build(Family::B, 5, i).unwrap();
            let c = ChevalleyBasis::build(pd.rs_arc()).unwrap();
            let h = condition_h_solve(&pd, &c).unwrap();
            assert_eq!(h.dimension, 1);
            assert!(h.holds(), "{h}");
        }
    }

    #[test]
    fn type2_identity_b4() {
        let pd = ParabolicData::build(Family::B, 4, 4).unwrap();
        let c = ChevalleyBasis::build(pd.rs_arc()).unwrap();
        let t = type2_identity(&pd, &c).unwrap();
        assert!(t.holds, "{} vs {}", t.lhs, t.rhs);
    }

    #[test]
    fn sign_seed_changes_nothing_essential() {
        let rs = Arc::new(RootSystem::build(Family::B, 5).unwrap());
        let flipped =
            ChevalleyBasis::build_with_signs(rs.clone(), |x| if x % 3 == 1 { -1 } else { 1 })
                .unwrap();
        flipped.check_constants().unwrap();
        let plain = ChevalleyBasis::build(rs).unwrap();
        assert!(plain.n.iter().any(|(k, v)| flipped.n[k] != *v));
        let pd = ParabolicData::build(Family::B, 5, 3).unwrap();
        assert!(condition_h_solve(&pd, &flipped).unwrap().holds());
    }

    #[test]
    fn type2_reaches_alpha_q() {
        for (f, n, i) in [
            (Family::B, 4, 4),
            (Family::B, 6, 6),
            (Family::C, 4, 2),
            (Family::C, 5, 3),
            (Family::F, 4, 4),
        ] {
            let pd = ParabolicData::build(f, n, i).unwrap();
            let c = ChevalleyBasis::build(pd.rs_arc()).unwrap();
            let r = type2_reachability(&pd, &c).unwrap();
            assert!(r.reached, "{}: {}", r.label, r.end);
        }
    }

    #[test]
    fn root_gap_control() {
        let pd = ParabolicData::build(Family::B, 5, 3).unwrap();
        assert!(root_gap_check(&pd).unwrap());
        let rs = pd.rs();
        let e = |k| rs.eps_unit(k).unwrap();
        let w = &e(3).scale(q(2)) - &(&e(3) - &e(4));
        assert!(pd.is_g1_root(&w));
    }
}
