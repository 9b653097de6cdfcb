//! Dyadic invariants, binomial-coefficient parity, and the key
//! divisibility condition behind the non-existence bounds.
//!
//! The central object is the parity of `C(a, b)` where the upper argument
//! may be negative; it is read off the formal power series `(1+T)^a` over
//! `F2`. [`key_condition`] packages the specific binomial test used by the
//! bound formulas, [`base_case_oracle`] recomputes its one-variable case by
//! honest polynomial arithmetic, and [`lemma69_families`] produces the
//! parameter families on which the condition is provably 1.

use crate::poly::RingContext;
use crate::{Error, Result};

/// Binary digit sum, parity, and bit length of a positive integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DyadicInvariants {
    pub alpha: u32,
    pub epsilon: u32,
    pub gamma: u32,
}

pub fn dyadic_invariants(k: u64) -> Result<DyadicInvariants> {
    if k == 0 {
        return Err(Error::parameter("dyadic invariants need k >= 1"));
    }
    Ok(DyadicInvariants {
        alpha: k.count_ones(),
        epsilon: (k % 2) as u32,
        gamma: 64 - k.leading_zeros(),
    })
}

/// Writes `d = 2^t + e` with `0 <= e < 2^t` and returns `(t, e)`.
pub fn two_power_split(d: u64) -> Result<(u32, u64)> {
    if d == 0 {
        return Err(Error::parameter("two_power_split needs d >= 1"));
    }
    let t = 63 - d.leading_zeros();
    Ok((t, d - (1u64 << t)))
}

/// Parity of the binomial coefficient `C(a, b)` — the coefficient of `T^b`
/// in `(1+T)^a` over `F2`, which makes sense for negative `a` too.
///
/// Since `(1+T)^{2^N} = 1 + T^{2^N}`, the parity only depends on `a` modulo
/// any `2^N > b`; after that reduction Lucas' rule applies.
pub fn binom_parity(a: i64, b: u64) -> u32 {
    binom_parity_wide(i128::from(a), b)
}

fn binom_parity_wide(a: i128, b: u64) -> u32 {
    let bits = 64 - b.leading_zeros(); // 2^bits > b
    let period = 1i128 << bits;
    let a_mod = a.rem_euclid(period) as u128;
    u32::from(u128::from(b) & !a_mod == 0)
}

/// Parameters of the key condition: dimension `d`, level `m`, twist `l`
/// (may be negative), and `m` nonnegative multiplicities `r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KeyQuery {
    pub d: u32,
    pub m: u32,
    pub l: i64,
    pub r: Vec<u64>,
}

/// The binomial test
/// `C(sum_{i<m} r_i 2^{m-1-i} + r_m - (d-1+l)(2^{m-1}-1) - l, d-1) mod 2`.
/// For `m = 1` the top argument degenerates to `r_1 - l`.
pub fn key_condition(q: &KeyQuery) -> Result<u32> {
    if q.d < 2 {
        return Err(Error::parameter(format!("key condition needs d >= 2, got {}", q.d)));
    }
    if q.m == 0 {
        return Err(Error::parameter("key condition needs m >= 1"));
    }
    if q.r.len() != q.m as usize {
        return Err(Error::parameter(format!(
            "expected {} multiplicities, got {}",
            q.m,
            q.r.len()
        )));
    }
    let m = q.m as usize;
    let mut top: i128 = 0;
    for (i, &ri) in q.r.iter().enumerate().take(m - 1) {
        top += i128::from(ri) << (m - 2 - i);
    }
    top += i128::from(q.r[m - 1]);
    let half = (1i128 << (m - 1)) - 1;
    top -= (i128::from(q.d) - 1 + i128::from(q.l)) * half;
    top -= i128::from(q.l);
    Ok(binom_parity_wide(top, u64::from(q.d) - 1))
}

/// Coefficient of `f^{d-1}` in `(1+f)^{r1 - l}` inside `F2[f]/<f^d>`,
/// computed by polynomial arithmetic (a geometric inverse supplies the
/// negative powers). Agrees with [`key_condition`] at `m = 1`.
pub fn base_case_oracle(d: u32, l: i64, r1: u64) -> Result<u32> {
    if d < 2 {
        return Err(Error::parameter(format!("base case oracle needs d >= 2, got {d}")));
    }
    let ctx = RingContext::new(vec![1])
        .with_stem("f")
        .with_unindexed_var()
        .with_uniform_cap(d)?;
    let one_plus_f = ctx.add(&ctx.one(), &ctx.var(0));
    let n = i128::from(r1) - i128::from(l);
    let power = if n >= 0 {
        ctx.pow(&one_plus_f, n as u64)?
    } else {
        ctx.pow(&ctx.geometric_inverse(&one_plus_f)?, (-n) as u64)?
    };
    let target = ctx.parse(&format!("f^{}", d - 1))?;
    Ok(u32::from(ctx.monomial_coefficient(&power, target.terms().first().unwrap())))
}

/// One instantiated family member: the query, the reduced binomial top
/// argument, and the condition's value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyCase {
    pub family: u32,
    pub m: u32,
    /// Multiplier for the third family's twist offset.
    pub k: Option<u64>,
    pub query: KeyQuery,
    pub parity: u32,
}

/// Instantiates, for `m` in `1..=6`, the three families on which the key
/// condition always evaluates to 1 (writing `d = 2^t + e`):
/// twist 1 with multiplicities `(0, 2e, .., 2e)`; twist `d+1` with all
/// multiplicities `2e`; and twist `-(d-1+k*2^{t+1})` for `k` in `{0,1,2}`
/// with zero multiplicities.
pub fn lemma69_families(d: u32) -> Result<Vec<FamilyCase>> {
    if d < 2 {
        return Err(Error::parameter(format!("families need d >= 2, got {d}")));
    }
    let (t, e) = two_power_split(u64::from(d))?;
    let mut out = Vec::new();
    for m in 1..=6u32 {
        let mu = m as usize;
        let mut fam1 = vec![2 * e; mu];
        fam1[0] = 0;
        let queries: Vec<(u32, Option<u64>, KeyQuery)> = std::iter::once((
            1,
            None,
            KeyQuery { d, m, l: 1, r: fam1 },
        ))
        .chain(std::iter::once((
            2,
            None,
            KeyQuery { d, m, l: i64::from(d) + 1, r: vec![2 * e; mu] },
        )))
        .chain((0..=2u64).map(|k| {
            (
                3,
                Some(k),
                KeyQuery {
                    d,
                    m,
                    l: -(i64::from(d) - 1 + ((k as i64) << (t + 1))),
                    r: vec![0; mu],
                },
            )
        }))
        .collect();
        for (family, k, query) in queries {
            let parity = key_condition(&query)?;
            out.push(FamilyCase { family, m, k, query, parity });
        }
    }
    Ok(out)
}
