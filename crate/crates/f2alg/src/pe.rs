//! Additive basis of the cohomology of iterated-wreath point arrangements,
//! built level by level, with the polynomial/ideal split of its Poincaré
//! series.
//!
//! Level 0 is the single unit class. Level `k+1` is produced from level `k`
//! by three rules: every element `v` yields `d` squared classes
//! `(v (x) v) f^j` of degree `2 deg(v) + j` for `0 <= j <= d-1`; every
//! unordered pair `u != v` yields a transfer class of degree
//! `deg(u) + deg(v)` and a twisted transfer class of degree
//! `deg(u) + deg(v) + d - 1`. Squared classes inherit the polynomial-part
//! tag of their predecessor; all pair classes land in the ideal part. The
//! polynomial part realizes a truncated polynomial algebra on generators of
//! degree `2^{r-1}`, which is what [`pe_series_split`] exposes.

use crate::{Error, Result};

const MAX_D: u32 = 16;
const MAX_M: u32 = 5;
const MAX_BASIS_ELEMENTS: u128 = 4_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tag {
    /// Lives in the truncated polynomial summand.
    APart,
    /// Lives in the complementary ideal summand.
    IPart,
}

/// How an element arose; indices refer to the previous level of the basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Construction {
    /// The level-0 unit.
    Unit,
    /// `(v (x) v) f^j` from predecessor `v`.
    Squared { v: usize, j: u32 },
    /// Transfer class of the unordered pair `u < v`.
    Pair { u: usize, v: usize },
    /// Twisted transfer class of the unordered pair `u < v`.
    TwistedPair { u: usize, v: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PeBasisElement {
    pub degree: u64,
    pub tag: Tag,
    pub construction: Construction,
}

/// All levels `0..=m` of the basis; construction indices of level `k+1`
/// point into level `k`.
#[derive(Clone, Debug)]
pub struct PeBasis {
    pub d: u32,
    pub levels: Vec<Vec<PeBasisElement>>,
}

impl PeBasis {
    pub fn final_level(&self) -> &[PeBasisElement] {
        self.levels.last().expect("at least level 0")
    }
}

fn check_dm(d: u32, m: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::parameter(format!("need d >= 2, got {d}")));
    }
    if d > MAX_D || m > MAX_M {
        return Err(Error::resource(format!(
            "level (d={d}, m={m}) exceeds the supported range d <= {MAX_D}, m <= {MAX_M}"
        )));
    }
    Ok(())
}

/// Exact sizes of levels `0..=m` by the counting recursion
/// `|B_{k+1}| = d |B_k| + |B_k|(|B_k| - 1)`.
pub fn level_sizes(d: u32, m: u32) -> Result<Vec<u128>> {
    check_dm(d, m)?;
    let mut sizes = vec![1u128];
    for _ in 0..m {
        let n = *sizes.last().unwrap();
        let next = u128::from(d)
            .checked_mul(n)
            .and_then(|a| n.checked_mul(n - 1).and_then(|b| a.checked_add(b)))
            .ok_or_else(|| Error::resource("basis size overflows 128 bits".to_string()))?;
        sizes.push(next);
    }
    Ok(sizes)
}

/// Materializes the basis through level `m`. Guarded by a hard budget on
/// the final level's size; use [`pe_series_split`] for counting beyond it.
pub fn pe_basis(d: u32, m: u32) -> Result<PeBasis> {
    let sizes = level_sizes(d, m)?;
    if *sizes.last().unwrap() > MAX_BASIS_ELEMENTS {
        return Err(Error::resource(format!(
            "level {m} holds {} elements; materialization is capped at {MAX_BASIS_ELEMENTS}",
            sizes.last().unwrap()
        )));
    }
    let mut levels = vec![vec![PeBasisElement {
        degree: 0,
        tag: Tag::APart,
        construction: Construction::Unit,
    }]];
    for _ in 0..m {
        let prev = levels.last().unwrap();
        let mut next = Vec::with_capacity(prev.len() * (prev.len() - 1) + prev.len() * d as usize);
        for (vi, v) in prev.iter().enumerate() {
            for j in 0..d {
                next.push(PeBasisElement {
                    degree: 2 * v.degree + u64::from(j),
                    tag: v.tag,
                    construction: Construction::Squared { v: vi, j },
                });
            }
        }
        for ui in 0..prev.len() {
            for vi in ui + 1..prev.len() {
                let base = prev[ui].degree + prev[vi].degree;
                next.push(PeBasisElement {
                    degree: base,
                    tag: Tag::IPart,
                    construction: Construction::Pair { u: ui, v: vi },
                });
                next.push(PeBasisElement {
                    degree: base + u64::from(d) - 1,
                    tag: Tag::IPart,
                    construction: Construction::TwistedPair { u: ui, v: vi },
                });
            }
        }
        levels.push(next);
    }
    Ok(PeBasis { d, levels })
}

/// Degree-indexed counts of the polynomial-part and ideal-part elements at
/// level `m`, length `(2^m - 1)(d - 1) + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesSplit {
    pub a_series: Vec<u128>,
    pub i_series: Vec<u128>,
}

impl SeriesSplit {
    pub fn total(&self) -> Vec<u128> {
        self.a_series
            .iter()
            .zip(&self.i_series)
            .map(|(a, i)| a + i)
            .collect()
    }
}

fn overflow() -> Error {
    Error::resource("series coefficient overflows 128 bits".to_string())
}

/// Counts without materializing: the same three rules acting on coefficient
/// vectors. Squaring doubles degrees and a geometric factor distributes the
/// `f^j` twist; unordered pairs are half of (square of the series minus its
/// degree-doubled diagonal).
pub fn pe_series_split(d: u32, m: u32) -> Result<SeriesSplit> {
    check_dm(d, m)?;
    let mut total = vec![1u128];
    let mut a_part = vec![1u128];
    for level in 0..m {
        let top = ((1u64 << (level + 1)) - 1) * u64::from(d - 1);
        let mut t_next = vec![0u128; top as usize + 1];
        let mut a_next = vec![0u128; top as usize + 1];
        for j in 0..d as usize {
            for (deg, &c) in total.iter().enumerate() {
                let slot = &mut t_next[2 * deg + j];
                *slot = slot.checked_add(c).ok_or_else(overflow)?;
            }
            for (deg, &c) in a_part.iter().enumerate() {
                let slot = &mut a_next[2 * deg + j];
                *slot = slot.checked_add(c).ok_or_else(overflow)?;
            }
        }
        // Ordered pairs u != v, then halve: counts stay integral.
        let mut pairs = vec![0u128; 2 * (total.len() - 1) + 1];
        for (a, &ca) in total.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in total.iter().enumerate() {
                pairs[a + b] = pairs[a + b]
                    .checked_add(ca.checked_mul(cb).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
        }
        for (a, &ca) in total.iter().enumerate() {
            pairs[2 * a] -= ca;
        }
        for (deg, &twice) in pairs.iter().enumerate() {
            debug_assert_eq!(twice % 2, 0);
            let count = twice / 2;
            t_next[deg] = t_next[deg].checked_add(count).ok_or_else(overflow)?;
            let twisted = deg + d as usize - 1;
            t_next[twisted] = t_next[twisted].checked_add(count).ok_or_else(overflow)?;
        }
        total = t_next;
        a_part = a_next;
    }
    let i_series = total
        .iter()
        .zip(&a_part)
        .map(|(t, a)| t - a)
        .collect();
    Ok(SeriesSplit { a_series: a_part, i_series })
}
