//! Total and dual characteristic-class expansions in truncated rings.
//!
//! For `d >= 2` and `1 <= m <= 6` the class image lives in
//! `F2[V_1..V_m] / <V_1^d, ..., V_m^d>` with `deg V_r = 2^{r-1}`:
//!
//! ```text
//! w = 1 + sum_{r=0}^{m-1} D_{m,r}(k_j -> V_j)
//! ```
//!
//! where `D_{m,r}` is the closed-summation invariant of
//! [`crate::invariants::dickson_upper_formula`]. The total class is a unit of
//! height dividing `H(d) = min { 2^t : 2^t >= d }`: every non-constant
//! monomial of `w^{H}` has an exponent multiplied by `H >= d`, so `w^H = 1`.
//! The dual class of a `p`-fold sum is therefore `w^{H - (p mod H)}`, and
//! Whitney powers reduce mod the height.

use crate::invariants::dickson_upper_formula;
use crate::poly::{Monomial, Polynomial, RingContext};
use crate::{Error, Result};

/// The truncated ring `F2[V_1..V_m]/<V_i^d>`, `deg V_r = 2^{r-1}`.
pub fn truncated_ctx(d: u32, m: u32) -> Result<RingContext> {
    if m == 0 || m > 6 {
        return Err(Error::parameter(format!("m must lie in 1..=6, got {m}")));
    }
    if d < 2 {
        return Err(Error::parameter(format!("d must be >= 2, got {d}")));
    }
    RingContext::new((0..m).map(|j| 1u32 << j).collect())
        .with_stem("V")
        .with_uniform_cap(d)
}

/// Smallest power of 2 that is `>= d`; the height bound for the class algebra.
pub fn height(d: u32) -> u64 {
    u64::from(d.next_power_of_two())
}

/// A class expansion together with the ring it lives in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassExpansion {
    pub d: u32,
    pub m: u32,
    pub poly: Polynomial,
}

impl ClassExpansion {
    pub fn ctx(&self) -> Result<RingContext> {
        truncated_ctx(self.d, self.m)
    }

    pub fn render(&self) -> Result<String> {
        Ok(self.ctx()?.render(&self.poly))
    }
}

/// The image of the total class: `1 + sum_r D_{m,r}` reduced mod `<V_i^d>`.
pub fn total_class_image(d: u32, m: u32) -> Result<ClassExpansion> {
    let ctx = truncated_ctx(d, m)?;
    let mut terms = vec![Monomial::one(m as usize)];
    for r in 0..m {
        // Same graded variables, so the k-basis monomials carry over directly.
        let dickson = dickson_upper_formula(m, r)?;
        terms.extend(dickson.poly.terms().iter().cloned());
    }
    Ok(ClassExpansion { d, m, poly: ctx.polynomial(terms)? })
}

/// Dual class of the `p`-fold Whitney sum: `w^{H(d) - (p mod H(d))}`,
/// computed by square-and-multiply (so powers of two are pure Frobenius
/// steps). `p` is reduced mod the height; `p = H(d)` gives 1.
pub fn dual_image(d: u32, m: u32, p: u64) -> Result<ClassExpansion> {
    if p == 0 {
        return Err(Error::parameter("Whitney power p must be >= 1"));
    }
    let ctx = truncated_ctx(d, m)?;
    let w = total_class_image(d, m)?;
    let h = height(d);
    let exponent = (h - (p % h)) % h;
    Ok(ClassExpansion { d, m, poly: ctx.pow(&w.poly, exponent)? })
}

/// Largest degree with a non-vanishing component; `None` when the expansion
/// is the trivial class 1.
pub fn top_nonzero_degree(class: &ClassExpansion) -> Result<Option<u64>> {
    let ctx = class.ctx()?;
    Ok(ctx.top_degree(&class.poly).filter(|&n| n > 0))
}

/// Coefficient of a single monomial in the expansion.
pub fn witness_coefficient(class: &ClassExpansion, witness: &Monomial) -> Result<bool> {
    let ctx = class.ctx()?;
    Ok(ctx.monomial_coefficient(&class.poly, witness))
}

/// Homogeneous component of the expansion in a given degree.
pub fn component(class: &ClassExpansion, degree: u64) -> Result<Polynomial> {
    let ctx = class.ctx()?;
    Ok(ctx.homogeneous_component(&class.poly, degree))
}
