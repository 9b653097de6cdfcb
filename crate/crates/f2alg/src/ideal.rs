//! Membership and kernel slices for the truncation ideal of the invariant
//! generators.
//!
//! `n` formal generators `Q_0, .., Q_{n-1}` of degrees `2^n - 2^r` map to the
//! truncated ring `F2[V_1..V_n]/<V_i^q>` by `Q_r -> D_{n,r}(k_j -> V_j)`
//! (the closed-summation invariants). A polynomial in the `Q`s lies in the
//! truncation ideal `I(Q, q)` exactly when its expansion vanishes. Kernel
//! slices are computed degree by degree with bit-packed Gaussian elimination
//! over F2, and [`monomial_generation_check`] asks whether every kernel
//! element is a combination of monomials that vanish individually — the
//! failure witnesses are genuinely mixed relations such as `Q0^2 + Q1^3`.

use crate::invariants::dickson_upper_formula;
use crate::poly::{Monomial, Polynomial, RingContext};
use crate::{Error, Result};

const MAX_N: u32 = 6;
const MAX_DEGREE: u64 = 64;

/// The formal generator ring: `n` variables `Q0..Q{n-1}`, `deg Q_r = 2^n - 2^r`.
pub fn q_ctx(n: u32) -> Result<RingContext> {
    if n == 0 || n > MAX_N {
        return Err(Error::parameter(format!("n must lie in 1..={MAX_N}, got {n}")));
    }
    Ok(RingContext::new(
        (0..n).map(|r| (1u32 << n) - (1u32 << r)).collect(),
    )
    .with_stem("Q")
    .with_first_index(0))
}

/// The target ring `F2[V_1..V_n]` with optional uniform truncation.
pub fn v_ctx(n: u32, caps: Option<u32>) -> Result<RingContext> {
    if n == 0 || n > MAX_N {
        return Err(Error::parameter(format!("n must lie in 1..={MAX_N}, got {n}")));
    }
    let ctx = RingContext::new((0..n).map(|j| 1u32 << j).collect()).with_stem("V");
    match caps {
        Some(q) => ctx.with_uniform_cap(q),
        None => Ok(ctx),
    }
}

/// A polynomial in the formal generators, tagged with `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPolynomial {
    pub n: u32,
    pub poly: Polynomial,
}

impl QPolynomial {
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        Ok(QPolynomial { n, poly: q_ctx(n)?.parse(text)? })
    }

    pub fn render(&self) -> Result<String> {
        Ok(q_ctx(self.n)?.render(&self.poly))
    }
}

/// Expansion of a single generator `Q_r` in the (optionally truncated) target
/// ring. The generator degrees match on both sides, so expansions of
/// homogeneous `Q`-polynomials stay homogeneous.
pub fn generator_expansion(n: u32, r: u32, caps: Option<u32>) -> Result<Polynomial> {
    if r >= n {
        return Err(Error::parameter(format!(
            "generator index r must lie in 0..n={n}, got {r}"
        )));
    }
    let ctx = v_ctx(n, caps)?;
    let d = dickson_upper_formula(n, r)?;
    ctx.polynomial(d.poly.terms().to_vec())
}

/// Substitutes every `Q_r` by its expansion, reducing in `F2[V..]/<V_i^q>`
/// (or the untruncated ring when `caps` is `None`).
pub fn expand_q(p: &QPolynomial, caps: Option<u32>) -> Result<Polynomial> {
    let ctx = v_ctx(p.n, caps)?;
    let gens: Vec<Polynomial> = (0..p.n)
        .map(|r| generator_expansion(p.n, r, caps))
        .collect::<Result<_>>()?;
    let mut acc = ctx.zero();
    for mono in p.poly.terms() {
        let mut prod = ctx.one();
        for (r, &e) in mono.exps().iter().enumerate() {
            if e > 0 {
                prod = ctx.mul(&prod, &ctx.pow(&gens[r], u64::from(e))?)?;
            }
        }
        acc = ctx.add(&acc, &prod);
    }
    Ok(acc)
}

/// Membership in the truncation ideal: the expansion vanishes mod `<V_i^q>`.
pub fn in_truncation_ideal(p: &QPolynomial, q: u32) -> Result<bool> {
    Ok(expand_q(p, Some(q))?.is_zero())
}

/// All exponent tuples `(e_0, .., e_{n-1})` with
/// `sum e_r (2^n - 2^r) = degree`, in ascending lexicographic order.
fn monomials_of_degree(n: u32, degree: u64) -> Vec<Monomial> {
    let gen_degrees: Vec<u64> = (0..n).map(|r| (1u64 << n) - (1u64 << r)).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n as usize];
    fn rec(
        gen_degrees: &[u64],
        pos: usize,
        remaining: u64,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if pos == gen_degrees.len() {
            if remaining == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let d = gen_degrees[pos];
        let max_e = remaining / d;
        for e in 0..=max_e {
            exps[pos] = e as u32;
            rec(gen_degrees, pos + 1, remaining - e * d, exps, out);
        }
        exps[pos] = 0;
    }
    rec(&gen_degrees, 0, degree, &mut exps, &mut out);
    out
}

fn check_degree(degree: u64) -> Result<()> {
    if degree > MAX_DEGREE {
        return Err(Error::parameter(format!(
            "kernel slices support degree <= {MAX_DEGREE}, got {degree}"
        )));
    }
    Ok(())
}

/// Packed F2 row vector.
#[derive(Clone)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn zero(bits: usize) -> Self {
        BitRow(vec![0; bits.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }
    fn xor_in(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }
    fn first_set(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Basis of the degree-`degree` slice of the truncation-ideal kernel: all
/// independent F2-combinations of degree-`degree` `Q`-monomials whose
/// expansions cancel mod `<V_i^q>`. Output order follows the lexicographic
/// monomial enumeration; each element is reduced against earlier pivots, so
/// the basis is deterministic.
pub fn ideal_kernel_in_degree(n: u32, q: u32, degree: u64) -> Result<Vec<QPolynomial>> {
    check_degree(degree)?;
    let monos = monomials_of_degree(n, degree);
    kernel_of(n, q, &monos)
}

fn kernel_of(n: u32, q: u32, monos: &[Monomial]) -> Result<Vec<QPolynomial>> {
    let ctx = v_ctx(n, Some(q))?;
    let qc = q_ctx(n)?;
    let expansions: Vec<Polynomial> = monos
        .iter()
        .map(|m| {
            expand_q(&QPolynomial { n, poly: qc.polynomial(vec![m.clone()])? }, Some(q))
        })
        .collect::<Result<_>>()?;
    // Column space: every V-monomial that occurs anywhere, canonically sorted.
    let mut columns: Vec<Monomial> = expansions
        .iter()
        .flat_map(|p| p.terms().iter().cloned())
        .collect();
    columns.sort_by(|a, b| ctx.cmp_mono(a, b));
    columns.dedup();
    let col_index = |m: &Monomial| {
        columns
            .binary_search_by(|c| ctx.cmp_mono(c, m))
            .expect("column built from these expansions")
    };

    let cols = columns.len().max(1);
    let mut pivots: Vec<(usize, BitRow, BitRow)> = Vec::new(); // (col, row, combo)
    let mut kernel = Vec::new();
    for (i, expansion) in expansions.iter().enumerate() {
        let mut row = BitRow::zero(cols);
        for t in expansion.terms() {
            row.set(col_index(t));
        }
        let mut combo = BitRow::zero(monos.len());
        combo.set(i);
        // Reduce against the pivots found so far.
        loop {
            match row.first_set() {
                None => {
                    let support: Vec<Monomial> = monos
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| combo.get(*j))
                        .map(|(_, m)| m.clone())
                        .collect();
                    kernel.push(QPolynomial { n, poly: qc.polynomial(support)? });
                    break;
                }
                Some(col) => match pivots.iter().find(|(c, _, _)| *c == col) {
                    Some((_, prow, pcombo)) => {
                        row.xor_in(prow);
                        combo.xor_in(pcombo);
                    }
                    None => {
                        pivots.push((col, row, combo));
                        break;
                    }
                },
            }
        }
    }
    Ok(kernel)
}

/// Outcome of [`monomial_generation_check`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenerationCheck {
    /// True when, up to the inspected degree, the kernel is spanned by
    /// `Q`-monomials that vanish individually.
    pub holds: bool,
    /// First kernel element supported on a non-vanishing monomial.
    pub counterexample: Option<QPolynomial>,
    /// Degree of the counterexample.
    pub degree: Option<u64>,
}

/// Tests whether the truncation ideal is generated by its monomials in all
/// degrees `<= max_degree`. A kernel element whose support contains a
/// monomial with non-zero expansion witnesses failure.
pub fn monomial_generation_check(n: u32, q: u32, max_degree: u64) -> Result<GenerationCheck> {
    check_degree(max_degree)?;
    let qc = q_ctx(n)?;
    for degree in 1..=max_degree {
        let monos = monomials_of_degree(n, degree);
        if monos.is_empty() {
            continue;
        }
        let vanishing: Vec<bool> = monos
            .iter()
            .map(|m| {
                Ok(expand_q(
                    &QPolynomial { n, poly: qc.polynomial(vec![m.clone()])? },
                    Some(q),
                )?
                .is_zero())
            })
            .collect::<Result<_>>()?;
        for element in kernel_of(n, q, &monos)? {
            let mixed = element.poly.terms().iter().any(|t| {
                let idx = monos.iter().position(|m| m == t).expect("kernel support");
                !vanishing[idx]
            });
            if mixed {
                return Ok(GenerationCheck {
                    holds: false,
                    counterexample: Some(element),
                    degree: Some(degree),
                });
            }
        }
    }
    Ok(GenerationCheck { holds: true, counterexample: None, degree: None })
}
