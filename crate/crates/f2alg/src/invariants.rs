//! Mod-2 invariants of the general linear group and its upper-triangular
//! subgroup, computed by independent routes.
//!
//! Three families of generators, in three variable bases:
//!
//! - `mui_h(m, i)`: the degree-`2^{i-1}` products
//!   `h_i = prod_{v in span(x_m, ..., x_{m-i+2})} (x_{m-i+1} + v)`
//!   in the polynomial basis `x_1, ..., x_m` (all of degree 1);
//! - `dickson_bruteforce(m, r)`: the coefficient of `T^{2^r}` in
//!   `prod_{v in F2^m} (T + v)`, the classical orbit-product definition;
//! - `dickson_recurrence(m, r)` and `dickson_upper_formula(m, r)`: the same
//!   invariants written in the triangular generators `k_1, ..., k_m`
//!   (`deg k_j = 2^{j-1}`), via the mixed recurrence
//!   `d_{m,i} = d_{m-1,i} k_m + d_{m-1,i-1}^2` and via a closed sum over
//!   index tuples, respectively;
//! - `restriction_v(m, r)`: the image of the r-th generator on a maximal
//!   elementary abelian restriction, in variables `y_1, ..., y_m`.
//!
//! The two `k`-basis routes agree with each other, and — after substituting
//! `k_j` by the variable-reversed `h_j` — with the brute-force route; the
//! crate's test suites exercise exactly that triple agreement.

use crate::poly::{Monomial, Polynomial, RingContext};
use crate::{Error, Result};

/// Which variable basis a polynomial lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    /// `x_1..x_m`, all of degree 1.
    X,
    /// `y_1..y_m`, all of degree 1 (restriction images).
    Y,
    /// `k_1..k_m` with `deg k_j = 2^{j-1}` (triangular generators).
    K,
}

impl Basis {
    pub fn stem(self) -> &'static str {
        match self {
            Basis::X => "x",
            Basis::Y => "y",
            Basis::K => "k",
        }
    }

    /// The untruncated ring of this basis in `m` variables.
    pub fn ctx(self, m: u32) -> RingContext {
        let degrees = match self {
            Basis::X | Basis::Y => vec![1; m as usize],
            Basis::K => (0..m).map(|j| 1u32 << j).collect(),
        };
        RingContext::new(degrees).with_stem(self.stem())
    }
}

/// A polynomial tagged with its basis and variable count; cross-basis
/// comparison is a type error unless an explicit substitution is applied.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisPoly {
    pub basis: Basis,
    pub m: u32,
    pub poly: Polynomial,
}

impl BasisPoly {
    pub fn ctx(&self) -> RingContext {
        self.basis.ctx(self.m)
    }

    pub fn render(&self) -> String {
        self.ctx().render(&self.poly)
    }
}

fn check_m(m: u32, max: u32, op: &str) -> Result<()> {
    if m == 0 || m > max {
        return Err(Error::parameter(format!(
            "{op}: m must lie in 1..={max}, got {m}"
        )));
    }
    Ok(())
}

/// `h_i = prod_{v in span(x_m, ..., x_{m-i+2})} (x_{m-i+1} + v)`,
/// homogeneous of degree `2^{i-1}`. Requires `1 <= i <= m <= 8`.
pub fn mui_h(m: u32, i: u32) -> Result<BasisPoly> {
    check_m(m, 8, "mui_h")?;
    if i == 0 || i > m {
        return Err(Error::parameter(format!(
            "mui_h: i must lie in 1..=m={m}, got {i}"
        )));
    }
    let ctx = Basis::X.ctx(m);
    let poly = span_product(&ctx, (m - i) as usize, ((m - i + 1) as usize)..(m as usize))?;
    Ok(BasisPoly { basis: Basis::X, m, poly })
}

/// Product of `fixed + v` over all `v` in the span of the given variables
/// (0-based indices); `2^{|span|}` linear factors.
fn span_product(
    ctx: &RingContext,
    fixed: usize,
    span: std::ops::Range<usize>,
) -> Result<Polynomial> {
    let span: Vec<usize> = span.collect();
    let n = ctx.num_vars();
    let mut acc = ctx.one();
    for mask in 0u32..(1 << span.len()) {
        let mut terms = vec![Monomial::from_pairs(n, &[(fixed, 1)])];
        for (t, &v) in span.iter().enumerate() {
            if (mask >> t) & 1 == 1 {
                terms.push(Monomial::from_pairs(n, &[(v, 1)]));
            }
        }
        let factor = ctx.polynomial(terms)?;
        acc = ctx.mul(&acc, &factor)?;
    }
    Ok(acc)
}

/// Coefficient of `T^{2^r}` in `prod_{v in F2^m} (T + v_1 x_1 + ... + v_m x_m)`,
/// homogeneous of degree `2^m - 2^r`. Requires `0 <= r < m <= 5`.
pub fn dickson_bruteforce(m: u32, r: u32) -> Result<BasisPoly> {
    check_m(m, 5, "dickson_bruteforce")?;
    if r >= m {
        return Err(Error::parameter(format!(
            "dickson_bruteforce: r must lie in 0..m={m}, got {r}"
        )));
    }
    // Auxiliary ring with T as variable 0 and x_1..x_m following.
    let aux = RingContext::new(vec![1; m as usize + 1]);
    let mut acc = aux.one();
    for v in 0u32..(1 << m) {
        let mut terms = vec![Monomial::from_pairs(aux.num_vars(), &[(0, 1)])];
        for j in 0..m {
            if (v >> j) & 1 == 1 {
                terms.push(Monomial::from_pairs(aux.num_vars(), &[(j as usize + 1, 1)]));
            }
        }
        let factor = aux.polynomial(terms)?;
        acc = aux.mul(&acc, &factor)?;
    }
    let want_t = 1u32 << r;
    let ctx = Basis::X.ctx(m);
    let kept: Vec<Monomial> = acc
        .terms()
        .iter()
        .filter(|mono| mono.exps()[0] == want_t)
        .map(|mono| Monomial::new(mono.exps()[1..].to_vec()))
        .collect();
    let poly = ctx.polynomial(kept)?;
    Ok(BasisPoly { basis: Basis::X, m, poly })
}

/// The invariants in the triangular generators via the recurrence
/// `d_{m,i} = d_{m-1,i} k_m + d_{m-1,i-1}^2`, with `d_{j,j} = 1` and
/// `d_{j,-1} = 0`. Requires `0 <= r < m <= 16`.
pub fn dickson_recurrence(m: u32, r: u32) -> Result<BasisPoly> {
    check_m(m, 16, "dickson_recurrence")?;
    if r >= m {
        return Err(Error::parameter(format!(
            "dickson_recurrence: r must lie in 0..m={m}, got {r}"
        )));
    }
    let ctx = Basis::K.ctx(m);
    // prev[i] = d_{j,i} for the current level j; level 0 is just d_{0,0} = 1.
    let mut prev: Vec<Polynomial> = vec![ctx.one()];
    for j in 1..=m {
        let k_j = ctx.var(j as usize - 1);
        let mut next: Vec<Polynomial> = Vec::with_capacity(j as usize + 1);
        for i in 0..=j {
            let keep = if (i as usize) < prev.len() {
                ctx.mul(&prev[i as usize], &k_j)?
            } else {
                ctx.zero()
            };
            let square = if i > 0 {
                ctx.pow(&prev[i as usize - 1], 2)?
            } else {
                ctx.zero()
            };
            next.push(ctx.add(&keep, &square));
        }
        // d_{j,j} = 1 by definition; the recurrence above yields it too
        // (k_j * 0 + 1^2), so overwrite only as a belt-and-braces base case.
        next[j as usize] = ctx.one();
        prev = next;
    }
    Ok(BasisPoly { basis: Basis::K, m, poly: prev[r as usize].clone() })
}

/// The same invariants by the closed summation: over all strictly increasing
/// index tuples `J = (j_1 < ... < j_r)` in `{1..m}`, the term `k[J]` takes
/// every variable outside `J` to the power `2^{r-t}`, where `t` is the number
/// of elements of `J` below it. Requires `0 <= r < m <= 16`.
pub fn dickson_upper_formula(m: u32, r: u32) -> Result<BasisPoly> {
    check_m(m, 16, "dickson_upper_formula")?;
    if r >= m {
        return Err(Error::parameter(format!(
            "dickson_upper_formula: r must lie in 0..m={m}, got {r}"
        )));
    }
    let ctx = Basis::K.ctx(m);
    let mut monos = Vec::new();
    let mut tuple: Vec<u32> = Vec::with_capacity(r as usize);
    enumerate_tuples(m, r, 1, &mut tuple, &mut |j_tuple| {
        let mut exps = vec![0u32; m as usize];
        for v in 1..=m {
            if j_tuple.contains(&v) {
                continue;
            }
            let below = j_tuple.iter().filter(|&&j| j < v).count() as u32;
            exps[v as usize - 1] = 1 << (r - below);
        }
        monos.push(Monomial::new(exps));
    });
    let poly = ctx.polynomial(monos)?;
    Ok(BasisPoly { basis: Basis::K, m, poly })
}

fn enumerate_tuples(
    m: u32,
    remaining: u32,
    start: u32,
    tuple: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if remaining == 0 {
        visit(tuple);
        return;
    }
    for j in start..=(m - remaining + 1) {
        tuple.push(j);
        enumerate_tuples(m, remaining - 1, j + 1, tuple, visit);
        tuple.pop();
    }
}

/// Restriction image of the r-th triangular generator: the product of the
/// `2^{r-1}` forms `lam_m y_m + ... + lam_{m-r+2} y_{m-r+2} + y_{m-r+1}`.
/// Under `y_i = x_i` this is exactly `mui_h(m, r)`. Requires `1 <= r <= m <= 8`.
pub fn restriction_v(m: u32, r: u32) -> Result<BasisPoly> {
    check_m(m, 8, "restriction_v")?;
    if r == 0 || r > m {
        return Err(Error::parameter(format!(
            "restriction_v: r must lie in 1..=m={m}, got {r}"
        )));
    }
    let ctx = Basis::Y.ctx(m);
    let poly = span_product(&ctx, (m - r) as usize, ((m - r + 1) as usize)..(m as usize))?;
    Ok(BasisPoly { basis: Basis::Y, m, poly })
}

/// Variable reversal `x_i -> x_{m+1-i}` (an involution; the anti-diagonal
/// permutation as a linear substitution, done directly on exponents).
pub fn reverse_variables(ctx: &RingContext, p: &Polynomial) -> Result<Polynomial> {
    ctx.polynomial(
        p.terms()
            .iter()
            .map(|m| {
                let mut exps = m.exps().to_vec();
                exps.reverse();
                Monomial::new(exps)
            })
            .collect(),
    )
}

/// The j-th triangular generator written in the `x`-basis: the variable
/// reversal of `mui_h(m, j)`.
pub fn triangular_generator_in_x(m: u32, j: u32) -> Result<Polynomial> {
    let h = mui_h(m, j)?;
    reverse_variables(&h.ctx(), &h.poly)
}

/// Expands a `k`-basis polynomial into the `x`-basis by substituting each
/// `k_j` with [`triangular_generator_in_x`]. Used to compare the closed
/// summation route with the brute-force orbit route.
pub fn expand_k_to_x(m: u32, p: &Polynomial) -> Result<Polynomial> {
    let x_ctx = Basis::X.ctx(m);
    let gens: Vec<Polynomial> = (1..=m)
        .map(|j| triangular_generator_in_x(m, j))
        .collect::<Result<_>>()?;
    let mut acc = x_ctx.zero();
    for mono in p.terms() {
        let mut prod = x_ctx.one();
        for (v, &e) in mono.exps().iter().enumerate() {
            if e > 0 {
                prod = x_ctx.mul(&prod, &x_ctx.pow(&gens[v], u64::from(e))?)?;
            }
        }
        acc = x_ctx.add(&acc, &prod);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_products_match_hand_expansions() {
        assert_eq!(mui_h(3, 1).unwrap().render(), "x3");
        assert_eq!(mui_h(3, 2).unwrap().render(), "x2^2 + x2*x3");
        assert_eq!(
            mui_h(3, 3).unwrap().render(),
            "x1^4 + x1^2*x2^2 + x1^2*x2*x3 + x1^2*x3^2 + x1*x2^2*x3 + x1*x2*x3^2"
        );
    }

    #[test]
    fn orbit_products_match_hand_expansions() {
        assert_eq!(dickson_bruteforce(1, 0).unwrap().render(), "x1");
        assert_eq!(dickson_bruteforce(2, 0).unwrap().render(), "x1^2*x2 + x1*x2^2");
        assert_eq!(dickson_bruteforce(2, 1).unwrap().render(), "x1^2 + x1*x2 + x2^2");
    }

    #[test]
    fn recurrence_matches_hand_values_at_two_variables() {
        assert_eq!(dickson_recurrence(2, 0).unwrap().render(), "k1*k2");
        assert_eq!(dickson_recurrence(2, 1).unwrap().render(), "k1^2 + k2");
    }

    #[test]
    fn summation_route_equals_recurrence_route() {
        for m in 1..=8 {
            for r in 0..m {
                let a = dickson_recurrence(m, r).unwrap();
                let b = dickson_upper_formula(m, r).unwrap();
                assert_eq!(a, b, "m={m} r={r}");
            }
        }
    }

    #[test]
    fn summation_terms_count_binomially() {
        // One term per increasing r-tuple from {1..m}.
        let binom = |m: u64, r: u64| {
            (0..r).fold(1u64, |acc, t| acc * (m - t) / (t + 1))
        };
        for m in 1..=10u32 {
            for r in 0..m {
                let d = dickson_upper_formula(m, r).unwrap();
                assert_eq!(
                    d.poly.num_terms() as u64,
                    binom(u64::from(m), u64::from(r)),
                    "m={m} r={r}"
                );
            }
        }
    }

    #[test]
    fn degree_law_and_homogeneity() {
        for m in 1..=6 {
            for r in 0..m {
                let d = dickson_recurrence(m, r).unwrap();
                let ctx = d.ctx();
                let expected = (1u64 << m) - (1u64 << r);
                assert_eq!(ctx.top_degree(&d.poly), Some(expected), "m={m} r={r}");
                assert_eq!(
                    ctx.homogeneous_component(&d.poly, expected),
                    d.poly,
                    "m={m} r={r} should be homogeneous"
                );
            }
        }
        for m in 1..=6 {
            for i in 1..=m {
                let h = mui_h(m, i).unwrap();
                assert_eq!(h.ctx().top_degree(&h.poly), Some(1 << (i - 1)));
            }
        }
    }

    #[test]
    fn bottom_and_top_closed_forms() {
        for m in 1..=6u32 {
            // d_{m,0} = k_1 k_2 ... k_m.
            let bottom = dickson_recurrence(m, 0).unwrap();
            let ctx = bottom.ctx();
            let product = ctx
                .polynomial(vec![Monomial::new(vec![1; m as usize])])
                .unwrap();
            assert_eq!(bottom.poly, product, "m={m}");
            // d_{m,m-1} = k_1^{2^{m-1}} + k_2^{2^{m-2}} + ... + k_m.
            let top = dickson_recurrence(m, m - 1).unwrap();
            let expected = ctx
                .polynomial(
                    (0..m)
                        .map(|j| {
                            Monomial::from_pairs(
                                m as usize,
                                &[(j as usize, 1u32 << (m - 1 - j))],
                            )
                        })
                        .collect(),
                )
                .unwrap();
            assert_eq!(top.poly, expected, "m={m}");
        }
    }

    #[test]
    fn triple_agreement_at_low_rank() {
        for m in 1..=3 {
            for r in 0..m {
                let formula = dickson_upper_formula(m, r).unwrap();
                let in_x = expand_k_to_x(m, &formula.poly).unwrap();
                let brute = dickson_bruteforce(m, r).unwrap();
                assert_eq!(in_x, brute.poly, "m={m} r={r}");
            }
        }
    }

    #[test]
    fn restriction_images_equal_triangular_products() {
        for m in 1..=6 {
            for r in 1..=m {
                let v = restriction_v(m, r).unwrap();
                let h = mui_h(m, r).unwrap();
                // Same exponent vectors, different variable letters.
                assert_eq!(v.poly, h.poly, "m={m} r={r}");
            }
        }
    }

    #[test]
    fn orbit_products_are_invariant_under_every_linear_automorphism() {
        // Exhaustive over GL_2(F2) (6 matrices) and GL_3(F2) (168 matrices).
        for m in 2..=3u32 {
            let ctx = Basis::X.ctx(m);
            let n = m as usize;
            let polys: Vec<Polynomial> = (0..m)
                .map(|r| dickson_bruteforce(m, r).unwrap().poly)
                .collect();
            let mut checked = 0u32;
            for bits in 0u32..(1 << (n * n)) {
                let matrix: Vec<Vec<u8>> = (0..n)
                    .map(|i| (0..n).map(|j| ((bits >> (i * n + j)) & 1) as u8).collect())
                    .collect();
                match ctx.linear_substitute(&polys[0], &matrix) {
                    Err(_) => continue, // singular
                    Ok(image) => {
                        assert_eq!(image, polys[0], "m={m} bits={bits}");
                        for p in &polys[1..] {
                            assert_eq!(
                                ctx.linear_substitute(p, &matrix).unwrap(),
                                *p,
                                "m={m} bits={bits}"
                            );
                        }
                        checked += 1;
                    }
                }
            }
            let expected = if m == 2 { 6 } else { 168 };
            assert_eq!(checked, expected, "group order for m={m}");
        }
    }

    #[test]
    fn variable_reversal_agrees_with_matrix_substitution() {
        let m = 4;
        let ctx = Basis::X.ctx(m);
        let n = m as usize;
        let anti: Vec<Vec<u8>> = (0..n)
            .map(|i| (0..n).map(|j| u8::from(i + j == n - 1)).collect())
            .collect();
        for i in 1..=m {
            let h = mui_h(m, i).unwrap().poly;
            assert_eq!(
                reverse_variables(&ctx, &h).unwrap(),
                ctx.linear_substitute(&h, &anti).unwrap(),
                "i={i}"
            );
        }
    }

    #[test]
    fn out_of_range_parameters_are_rejected() {
        assert!(mui_h(9, 1).is_err());
        assert!(mui_h(3, 0).is_err());
        assert!(mui_h(3, 4).is_err());
        assert!(dickson_bruteforce(6, 0).is_err());
        assert!(dickson_recurrence(17, 0).is_err());
        assert!(dickson_upper_formula(4, 4).is_err());
        assert!(restriction_v(3, 0).is_err());
    }
}
