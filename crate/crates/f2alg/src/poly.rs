//! Sparse multivariate polynomials over F2 with per-variable truncation.
//!
//! A polynomial is a finite set of monomials; every monomial present has
//! coefficient 1, so addition is symmetric difference and squaring is the
//! term-wise Frobenius map `m -> m^2`. A [`RingContext`] fixes the number of
//! variables, a weighted degree per variable, an optional truncation cap per
//! variable (a monomial dies as soon as one exponent reaches its cap, i.e.
//! we compute in `F2[x_1..x_n] / <x_i^{q_i}>`), an optional total-degree cap,
//! and the rendering style.
//!
//! Terms are kept in a canonical order: ascending weighted total degree,
//! ties broken so that the lexicographically larger exponent vector
//! (variable 1 most significant) comes first. Rendering follows that order
//! exactly, so equal polynomials render to equal strings:
//!
//! ```
//! use f2alg::poly::RingContext;
//! let ctx = RingContext::new(vec![1, 2]).with_stem("V").with_uniform_cap(3).unwrap();
//! let w = ctx.parse("1 + V1^2 + V2 + V1*V2").unwrap();
//! let w3 = ctx.pow(&w, 3).unwrap();
//! assert_eq!(ctx.render(&w3), "1 + V1^2 + V2 + V1*V2 + V2^2");
//! ```

use std::cmp::Ordering;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

/// Hard upper limit for truncation caps and variable degrees; keeps every
/// weighted-degree computation comfortably inside `u64`.
const MAX_CAP: u32 = 1 << 16;

/// Default resource guard: the largest number of live terms any single
/// operation is allowed to materialize.
pub const DEFAULT_MAX_TERMS: usize = 10_000_000;

static TERM_GUARD: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_TERMS);

/// Adjusts the term guard picked up by every context built afterwards.
/// Contexts configured explicitly via [`RingContext::with_max_terms`] are
/// unaffected. Intended for process-wide configuration (e.g. a CLI flag)
/// before computation starts.
pub fn set_default_term_guard(max_terms: usize) {
    TERM_GUARD.store(max_terms.max(1), AtomicOrdering::Relaxed);
}

/// The term guard currently applied to newly created contexts.
pub fn default_term_guard() -> usize {
    TERM_GUARD.load(AtomicOrdering::Relaxed)
}

/// An exponent vector. The monomial `x_1^{e_1} ... x_n^{e_n}` is stored as
/// `[e_1, ..., e_n]`; the empty monomial (all zeros) is the constant 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps: exps.into_boxed_slice() }
    }

    /// The constant monomial 1 in `vars` variables.
    pub fn one(vars: usize) -> Self {
        Monomial { exps: vec![0; vars].into_boxed_slice() }
    }

    /// Builds a monomial from `(variable, exponent)` pairs, variables
    /// numbered from 0. Repeated variables accumulate.
    pub fn from_pairs(vars: usize, pairs: &[(usize, u32)]) -> Self {
        let mut exps = vec![0u32; vars];
        for &(v, e) in pairs {
            exps[v] += e;
        }
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

/// A polynomial over F2: the set of its monomials, in canonical order.
///
/// Instances are only constructed through a [`RingContext`], which
/// guarantees the ordering invariant; `==` is therefore exact ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: Vec<Monomial>,
}

impl Polynomial {
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }
}

/// Rendering style: variable stem and the index of the first variable
/// (`x1, x2, ...` vs `Q0, Q1, ...`). A single-variable ring may opt out of
/// indexing altogether and render the bare stem (`f`, `f^2`).
#[derive(Clone, Debug)]
struct VarStyle {
    stem: String,
    first_index: u32,
    indexed: bool,
}

/// The ambient ring: variable count, weighted degrees, truncation, guard.
#[derive(Clone, Debug)]
pub struct RingContext {
    degrees: Vec<u32>,
    caps: Vec<Option<u32>>,
    total_cap: Option<u64>,
    style: VarStyle,
    max_terms: usize,
}

impl RingContext {
    /// A polynomial ring with the given weighted variable degrees (all >= 1),
    /// no truncation, stem `x`, variables numbered from 1.
    ///
    /// Panics if `degrees` is empty or a degree is 0 or exceeds the cap
    /// limit; contexts are built from trusted module code, not user input.
    pub fn new(degrees: Vec<u32>) -> Self {
        assert!(!degrees.is_empty(), "a ring needs at least one variable");
        assert!(
            degrees.iter().all(|&d| d >= 1 && d <= MAX_CAP),
            "variable degrees must lie in 1..={MAX_CAP}"
        );
        let n = degrees.len();
        RingContext {
            degrees,
            caps: vec![None; n],
            total_cap: None,
            style: VarStyle { stem: "x".to_string(), first_index: 1, indexed: true },
            max_terms: default_term_guard(),
        }
    }

    /// Truncates every variable at the same cap `q` (computes in
    /// `F2[..]/<x_i^q>`). Errors if `q` is 0 or too large.
    pub fn with_uniform_cap(mut self, q: u32) -> crate::Result<Self> {
        if q == 0 || q > MAX_CAP {
            return Err(crate::Error::parameter(format!(
                "truncation cap must lie in 1..={MAX_CAP}, got {q}"
            )));
        }
        self.caps = vec![Some(q); self.degrees.len()];
        Ok(self)
    }

    /// Caps the weighted total degree: terms of degree > `cap` die.
    pub fn with_total_cap(mut self, cap: u64) -> Self {
        self.total_cap = Some(cap);
        self
    }

    pub fn with_stem(mut self, stem: &str) -> Self {
        self.style.stem = stem.to_string();
        self
    }

    /// First variable index used in rendering/parsing (1 for `x1`, 0 for `Q0`).
    pub fn with_first_index(mut self, first: u32) -> Self {
        self.style.first_index = first;
        self
    }

    /// Renders the single variable as the bare stem (`f` instead of `f1`).
    /// Only meaningful — and only allowed — for one-variable rings.
    pub fn with_unindexed_var(mut self) -> Self {
        assert_eq!(self.degrees.len(), 1, "bare-stem style needs exactly one variable");
        self.style.indexed = false;
        self
    }

    /// Overrides the live-term resource guard (default 10^7).
    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms.max(1);
        self
    }

    pub fn num_vars(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn caps(&self) -> &[Option<u32>] {
        &self.caps
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Weighted total degree of a monomial.
    pub fn degree(&self, m: &Monomial) -> u64 {
        m.exps
            .iter()
            .zip(&self.degrees)
            .map(|(&e, &d)| u64::from(e) * u64::from(d))
            .sum()
    }

    /// Canonical term order: ascending degree; within a degree the
    /// lexicographically larger exponent vector (variable 1 most
    /// significant) sorts first.
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.degree(a)
            .cmp(&self.degree(b))
            .then_with(|| b.exps.cmp(&a.exps))
    }

    /// Whether the monomial survives truncation.
    pub fn alive(&self, m: &Monomial) -> bool {
        let capped = m
            .exps
            .iter()
            .zip(&self.caps)
            .all(|(&e, cap)| cap.map_or(true, |q| e < q));
        capped && self.total_cap.map_or(true, |t| self.degree(m) <= t)
    }

    fn check_vars(&self, m: &Monomial) -> crate::Result<()> {
        if m.exps.len() != self.num_vars() {
            return Err(crate::Error::parameter(format!(
                "monomial has {} exponents, ring has {} variables",
                m.exps.len(),
                self.num_vars()
            )));
        }
        Ok(())
    }

    /// Builds a polynomial from raw monomials: validates variable counts,
    /// drops truncated terms, sorts canonically, cancels duplicate pairs.
    pub fn polynomial(&self, monomials: Vec<Monomial>) -> crate::Result<Polynomial> {
        for m in &monomials {
            self.check_vars(m)?;
        }
        self.guard(monomials.len())?;
        let mut terms: Vec<Monomial> =
            monomials.into_iter().filter(|m| self.alive(m)).collect();
        terms.sort_by(|a, b| self.cmp_mono(a, b));
        let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
        for m in terms {
            if out.last() == Some(&m) {
                out.pop();
            } else {
                out.push(m);
            }
        }
        Ok(Polynomial { terms: out })
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        let m = Monomial::one(self.num_vars());
        if self.alive(&m) {
            Polynomial { terms: vec![m] }
        } else {
            self.zero()
        }
    }

    /// The variable `var` (0-based) as a polynomial.
    pub fn var(&self, var: usize) -> Polynomial {
        let m = Monomial::from_pairs(self.num_vars(), &[(var, 1)]);
        if self.alive(&m) {
            Polynomial { terms: vec![m] }
        } else {
            self.zero()
        }
    }

    fn guard(&self, live: usize) -> crate::Result<()> {
        if live > self.max_terms {
            return Err(crate::Error::resource(format!(
                "operation would hold {live} live terms (guard: {})",
                self.max_terms
            )));
        }
        Ok(())
    }

    /// Sum = symmetric difference, by a linear merge of the sorted term lists.
    pub fn add(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(p.terms.len() + q.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < p.terms.len() && j < q.terms.len() {
            match self.cmp_mono(&p.terms[i], &q.terms[j]) {
                Ordering::Less => {
                    out.push(p.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(q.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&p.terms[i..]);
        out.extend_from_slice(&q.terms[j..]);
        Polynomial { terms: out }
    }

    fn mono_mul(&self, a: &Monomial, b: &Monomial) -> crate::Result<Option<Monomial>> {
        let mut exps = Vec::with_capacity(a.exps.len());
        for (&x, &y) in a.exps.iter().zip(b.exps.iter()) {
            let e = x.checked_add(y).ok_or_else(|| {
                crate::Error::resource("exponent overflow in monomial product")
            })?;
            exps.push(e);
        }
        let m = Monomial::new(exps);
        Ok(if self.alive(&m) { Some(m) } else { None })
    }

    fn merge_xor(
        &self,
        a: Vec<Monomial>,
        b: Vec<Monomial>,
    ) -> crate::Result<Vec<Monomial>> {
        self.guard(a.len() + b.len())?;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = b.into_iter().peekable();
        while let (Some(x), Some(y)) = (ai.peek(), bi.peek()) {
            match self.cmp_mono(x, y) {
                Ordering::Less => out.push(ai.next().unwrap()),
                Ordering::Greater => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    ai.next();
                    bi.next();
                }
            }
        }
        out.extend(ai);
        out.extend(bi);
        Ok(out)
    }

    /// Product. Shifts the longer factor by each term of the shorter one
    /// (a shift preserves the canonical order), then folds the shifted
    /// lists with cancelling merges. The live-term guard applies to every
    /// intermediate list.
    pub fn mul(&self, p: &Polynomial, q: &Polynomial) -> crate::Result<Polynomial> {
        let (small, big) = if p.terms.len() <= q.terms.len() { (p, q) } else { (q, p) };
        if small.is_zero() || big.is_zero() {
            return Ok(self.zero());
        }
        let mut lists: Vec<Vec<Monomial>> = Vec::with_capacity(small.terms.len());
        for t in &small.terms {
            let mut shifted = Vec::with_capacity(big.terms.len());
            for u in &big.terms {
                if let Some(m) = self.mono_mul(t, u)? {
                    shifted.push(m);
                }
            }
            self.guard(shifted.len())?;
            lists.push(shifted);
        }
        while lists.len() > 1 {
            let mut next = Vec::with_capacity(lists.len().div_ceil(2));
            let mut it = lists.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(self.merge_xor(a, b)?),
                    None => next.push(a),
                }
            }
            lists = next;
        }
        Ok(Polynomial { terms: lists.pop().unwrap_or_default() })
    }

    /// Term-wise squaring: over F2, `(sum m_i)^2 = sum m_i^2`.
    fn square(&self, p: &Polynomial) -> crate::Result<Polynomial> {
        let mut terms = Vec::with_capacity(p.terms.len());
        for m in &p.terms {
            let mut exps = Vec::with_capacity(m.exps.len());
            for &e in m.exps.iter() {
                exps.push(e.checked_mul(2).ok_or_else(|| {
                    crate::Error::resource("exponent overflow in squaring")
                })?);
            }
            let m2 = Monomial::new(exps);
            if self.alive(&m2) {
                terms.push(m2);
            }
        }
        // Squaring doubles degrees and preserves the lexicographic tie-break,
        // so the list is still sorted; distinct squares stay distinct.
        Ok(Polynomial { terms })
    }

    /// Power by square-and-multiply; the squarings are term-wise Frobenius
    /// steps, so `pow(p, 2^a)` never multiplies term lists at all.
    pub fn pow(&self, p: &Polynomial, n: u64) -> crate::Result<Polynomial> {
        if n == 0 {
            return Ok(self.one());
        }
        let mut acc = p.clone();
        let bits = 63 - n.leading_zeros();
        for i in (0..bits).rev() {
            acc = self.square(&acc)?;
            if (n >> i) & 1 == 1 {
                acc = self.mul(&acc, p)?;
            }
        }
        Ok(acc)
    }

    /// Inverse of a polynomial with constant term 1 in a truncated context,
    /// as the geometric series `sum_j (p - 1)^j`. Partial sums are doubled:
    /// `S_{2^{k+1}} = S_{2^k} (1 + u^{2^k})` with `u = p - 1`, and `u^{2^k}`
    /// advances by term-wise squaring until truncation kills it — at which
    /// point `p * S = 1 + u^{2^k} = 1` exactly.
    pub fn geometric_inverse(&self, p: &Polynomial) -> crate::Result<Polynomial> {
        let one = self.one();
        if !self.monomial_coefficient(p, &Monomial::one(self.num_vars())) {
            return Err(crate::Error::parameter(
                "geometric_inverse: input has no constant term (not a unit)",
            ));
        }
        let u = self.add(p, &one);
        if self.total_cap.is_none() {
            // Without a total cap every variable in u's support must be
            // truncated, or the series never terminates.
            for (v, cap) in self.caps.iter().enumerate() {
                let used = u.terms.iter().any(|m| m.exps[v] > 0);
                if used && cap.is_none() {
                    return Err(crate::Error::parameter(
                        "geometric_inverse: context is not truncated in a used variable",
                    ));
                }
            }
        }
        let mut sum = one;
        let mut u_pow = u;
        while !u_pow.is_zero() {
            let extra = self.mul(&sum, &u_pow)?;
            sum = self.add(&sum, &extra);
            u_pow = self.square(&u_pow)?;
        }
        Ok(sum)
    }

    /// Applies the F2-linear change of variables given by an invertible 0/1
    /// matrix: variable `i` (0-based) maps to the linear form in column `i`.
    /// All variable degrees must be equal for the map to be graded.
    pub fn linear_substitute(
        &self,
        p: &Polynomial,
        matrix: &[Vec<u8>],
    ) -> crate::Result<Polynomial> {
        let n = self.num_vars();
        if self.degrees.windows(2).any(|w| w[0] != w[1]) {
            return Err(crate::Error::parameter(
                "linear_substitute: variable degrees are not all equal",
            ));
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(crate::Error::parameter(format!(
                "linear_substitute: matrix must be {n} x {n}"
            )));
        }
        if !f2_invertible(matrix) {
            return Err(crate::Error::parameter(
                "linear_substitute: matrix is singular over F2",
            ));
        }
        // Image of variable i: the linear form sum_j matrix[j][i] x_j.
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let terms = (0..n)
                    .filter(|&j| matrix[j][i] & 1 == 1)
                    .map(|j| Monomial::from_pairs(n, &[(j, 1)]))
                    .collect();
                self.polynomial(terms)
            })
            .collect::<crate::Result<_>>()?;
        let mut acc = self.zero();
        for term in &p.terms {
            let mut prod = self.one();
            for (v, &e) in term.exps.iter().enumerate() {
                if e > 0 {
                    // l^e as a product of Frobenius powers of the linear form:
                    // each set bit a of e contributes l^{2^a} = sum_j x_j^{2^a}.
                    for a in 0..32 {
                        if (e >> a) & 1 == 1 {
                            let frob = self.frobenius_power(&images[v], a)?;
                            prod = self.mul(&prod, &frob)?;
                        }
                    }
                }
            }
            acc = self.add(&acc, &prod);
        }
        Ok(acc)
    }

    /// `p^{2^a}` by scaling every exponent.
    fn frobenius_power(&self, p: &Polynomial, a: u32) -> crate::Result<Polynomial> {
        let mut out = p.clone();
        for _ in 0..a {
            out = self.square(&out)?;
        }
        Ok(out)
    }

    /// The sum of the terms of exact weighted degree `n`.
    pub fn homogeneous_component(&self, p: &Polynomial, n: u64) -> Polynomial {
        Polynomial {
            terms: p
                .terms
                .iter()
                .filter(|m| self.degree(m) == n)
                .cloned()
                .collect(),
        }
    }

    /// Largest weighted degree of a term; `None` for the zero polynomial.
    pub fn top_degree(&self, p: &Polynomial) -> Option<u64> {
        p.terms.last().map(|m| self.degree(m))
    }

    /// Coefficient of `m` in `p` (true = 1).
    pub fn monomial_coefficient(&self, p: &Polynomial, m: &Monomial) -> bool {
        p.terms
            .binary_search_by(|t| self.cmp_mono(t, m))
            .is_ok()
    }

    fn var_name(&self, v: usize) -> String {
        if self.style.indexed {
            format!("{}{}", self.style.stem, v as u32 + self.style.first_index)
        } else {
            self.style.stem.clone()
        }
    }

    fn render_term(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .exps
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    self.var_name(v)
                } else {
                    format!("{}^{}", self.var_name(v), e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Canonical text form: terms in canonical order joined by `" + "`;
    /// the zero polynomial renders as `"0"`.
    pub fn render(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        p.terms
            .iter()
            .map(|m| self.render_term(m))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the textual form (any term order, flexible spacing around `+`
    /// and `*`); the result is reduced and canonically ordered, so
    /// `parse(render(p)) == p`.
    pub fn parse(&self, input: &str) -> crate::Result<Polynomial> {
        let input = input.trim();
        if input.is_empty() {
            return Err(crate::Error::parse("empty polynomial text"));
        }
        if input == "0" {
            return Ok(self.zero());
        }
        let mut monomials = Vec::new();
        for term in input.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(crate::Error::parse("empty term between '+' signs"));
            }
            monomials.push(self.parse_term(term)?);
        }
        self.polynomial(monomials)
    }

    fn parse_term(&self, term: &str) -> crate::Result<Monomial> {
        let mut exps = vec![0u32; self.num_vars()];
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor == "1" {
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let exp: u32 = e.trim().parse().map_err(|_| {
                        crate::Error::parse(format!("bad exponent in '{factor}'"))
                    })?;
                    (n.trim(), exp)
                }
                None => (factor, 1),
            };
            let stem = &self.style.stem;
            let rest = name.strip_prefix(stem.as_str()).ok_or_else(|| {
                crate::Error::parse(format!("unknown variable '{name}' (stem '{stem}')"))
            })?;
            let v = if rest.is_empty() {
                if !self.style.indexed {
                    0
                } else {
                    return Err(crate::Error::parse(format!(
                        "variable '{name}' needs an index in a {}-variable ring",
                        self.num_vars()
                    )));
                }
            } else {
                let idx: u32 = rest.parse().map_err(|_| {
                    crate::Error::parse(format!("bad variable index in '{name}'"))
                })?;
                let first = self.style.first_index;
                idx.checked_sub(first)
                    .filter(|&v| (v as usize) < self.num_vars())
                    .ok_or_else(|| {
                        crate::Error::parse(format!("variable '{name}' out of range"))
                    })? as usize
            };
            exps[v] = exps[v].checked_add(exp).ok_or_else(|| {
                crate::Error::parse(format!("exponent overflow in '{term}'"))
            })?;
        }
        Ok(Monomial::new(exps))
    }
}

/// Rank test over F2 by Gaussian elimination on packed rows (n <= 64 here).
fn f2_invertible(matrix: &[Vec<u8>]) -> bool {
    let n = matrix.len();
    if n > 64 {
        return false;
    }
    let mut rows: Vec<u64> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .fold(0u64, |acc, (j, &b)| acc | (u64::from(b & 1) << j))
        })
        .collect();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| (rows[r] >> col) & 1 == 1) else {
            return false;
        };
        rows.swap(col, pivot);
        for r in 0..n {
            if r != col && (rows[r] >> col) & 1 == 1 {
                rows[r] ^= rows[col];
            }
        }
    }
    true
}
