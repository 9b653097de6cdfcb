//! Mod-2 homology dimensions of unordered configuration spaces of `R^d`,
//! by counting monomials in iterated-square generators, plus the classical
//! binary-partition count for the plane as an independent oracle.
//!
//! A generator is an admissible word: a nondecreasing index sequence
//! `i_1 <= .. <= i_s` with `1 <= i_j <= d-1`. It has weight `2^s` and
//! intrinsic degree `i_1 + 2 i_2 + 4 i_3 + ..` (the period-independent part
//! of its topological degree). The dimension of the degree-`i` homology of
//! the `k`-point configuration space is the number of multisets of words
//! with total weight exactly `k` and total degree `i`.

use std::collections::HashMap;

use crate::{Error, Result};

const MAX_D: u32 = 9;
const MAX_K: u64 = 256;
const MAX_FUKS_N: u64 = 4096;

/// Nondecreasing index word `i_1 <= .. <= i_s`, `1 <= i_j <= d-1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AdmissibleWord {
    indices: Vec<u32>,
}

impl AdmissibleWord {
    pub fn new(d: u32, indices: Vec<u32>) -> Result<Self> {
        if d < 2 {
            return Err(Error::parameter(format!("admissible words need d >= 2, got {d}")));
        }
        for w in indices.windows(2) {
            if w[0] > w[1] {
                return Err(Error::parameter("indices must be nondecreasing".to_string()));
            }
        }
        if indices.iter().any(|&i| i == 0 || i > d - 1) {
            return Err(Error::parameter(format!("indices must lie in 1..={}", d - 1)));
        }
        if indices.len() >= 63 {
            return Err(Error::resource("word length >= 63 overflows weight".to_string()));
        }
        Ok(AdmissibleWord { indices })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// `2^s` for a word of length `s`; the empty word has weight 1.
    pub fn weight(&self) -> u64 {
        1 << self.indices.len()
    }

    /// `i_1 + 2 i_2 + 4 i_3 + ..`; the empty word has degree 0.
    pub fn intrinsic_degree(&self) -> u64 {
        self.indices
            .iter()
            .enumerate()
            .map(|(j, &i)| u64::from(i) << j)
            .sum()
    }
}

/// A multiset of admissible words; weight and degree are additive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorMonomial {
    pub words: Vec<AdmissibleWord>,
}

impl GeneratorMonomial {
    pub fn weight(&self) -> u64 {
        self.words.iter().map(AdmissibleWord::weight).sum()
    }

    pub fn intrinsic_degree(&self) -> u64 {
        self.words.iter().map(AdmissibleWord::intrinsic_degree).sum()
    }
}

fn check_dk(d: u32, k: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::parameter(format!("configuration spaces need d >= 2, got {d}")));
    }
    if k < 1 {
        return Err(Error::parameter("need k >= 1 points".to_string()));
    }
    if d > MAX_D || k > MAX_K {
        return Err(Error::resource(format!(
            "grid (d={d}, k={k}) exceeds the supported range d <= {MAX_D}, k <= {MAX_K}"
        )));
    }
    Ok(())
}

/// Number of length-`s` nondecreasing words over `1..=d-1`, tallied by
/// intrinsic degree: the result maps degree -> word count for each `s`.
fn words_by_degree(d: u32, s: u32) -> HashMap<u64, u128> {
    let mut tally = HashMap::new();
    // Positions are filled from the last (heaviest) index downward so the
    // nondecreasing constraint becomes an upper bound on each earlier index.
    fn rec(d: u32, pos: u32, max_index: u32, degree: u64, tally: &mut HashMap<u64, u128>) {
        if pos == 0 {
            *tally.entry(degree).or_insert(0) += 1;
            return;
        }
        for i in 1..=max_index {
            rec(d, pos - 1, i, degree + (u64::from(i) << (pos - 1)), tally);
        }
    }
    rec(d, s, d - 1, 0, &mut tally);
    tally
}

fn checked_add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b)
        .ok_or_else(|| Error::resource("dimension count overflows 128 bits".to_string()))
}

/// `C(c + j - 1, j)`: the number of multisets of size `j` from `c` items.
fn multichoose(c: u128, j: u64) -> Result<u128> {
    let mut acc: u128 = 1;
    for t in 1..=u128::from(j) {
        acc = acc
            .checked_mul(c - 1 + t)
            .ok_or_else(|| Error::resource("dimension count overflows 128 bits".to_string()))?
            / t;
    }
    Ok(acc)
}

/// Full coefficient vector over degrees `0 ..= (d-1)(k-1)` of the weight-`k`
/// monomial count.
pub fn poincare_config(d: u32, k: u64) -> Result<Vec<u128>> {
    check_dk(d, k)?;
    let top = ((u64::from(d) - 1) * (k - 1)) as usize;
    // dp[w][i] = number of multisets of total weight w and degree i using
    // the word classes processed so far.
    let mut dp = vec![vec![0u128; top + 1]; (k + 1) as usize];
    dp[0][0] = 1;
    let mut s = 0u32;
    while (1u64 << s) <= k {
        let weight = 1u64 << s;
        for (&degree, &count) in words_by_degree(d, s).iter().collect::<std::collections::BTreeMap<_, _>>() {
            if degree > top as u64 {
                continue;
            }
            let mut next = dp.clone();
            let mut j = 1u64;
            while j * weight <= k {
                let ways = multichoose(count, j)?;
                let (dw, dd) = ((j * weight) as usize, j * degree);
                if dd > top as u64 {
                    break;
                }
                for w in 0..=(k as usize - dw) {
                    for i in 0..=(top - dd as usize) {
                        if dp[w][i] != 0 {
                            let add = dp[w][i].checked_mul(ways).ok_or_else(|| {
                                Error::resource(
                                    "dimension count overflows 128 bits".to_string(),
                                )
                            })?;
                            next[w + dw][i + dd as usize] =
                                checked_add(next[w + dw][i + dd as usize], add)?;
                        }
                    }
                }
                j += 1;
            }
            dp = next;
        }
        s += 1;
    }
    Ok(dp[k as usize].clone())
}

/// Dimension of the degree-`i` mod-2 homology of the unordered `k`-point
/// configuration space of `R^d`.
pub fn dim_config_homology(d: u32, k: u64, i: u64) -> Result<u128> {
    check_dk(d, k)?;
    let top = (u64::from(d) - 1) * (k - 1);
    if i > top {
        return Ok(0);
    }
    Ok(poincare_config(d, k)?[i as usize])
}

/// Number of multisets of exactly `n - k` powers of two (1 allowed) summing
/// to `n`: the mod-2 Betti number of the unordered `n`-point configuration
/// space of the plane in degree `k`.
pub fn fuks_dim(n: u64, k: u64) -> Result<u128> {
    if n < 1 {
        return Err(Error::parameter("need n >= 1".to_string()));
    }
    if n > MAX_FUKS_N {
        return Err(Error::resource(format!("n must be <= {MAX_FUKS_N}, got {n}")));
    }
    if k > n {
        return Ok(0);
    }
    let mut memo = HashMap::new();
    return g(n, n - k, &mut memo);

    // g(n, p): multisets of exactly p powers of two summing to n. Either a
    // part equals 1 (strip it) or all parts are even (halve them).
    fn g(n: u64, p: u64, memo: &mut HashMap<(u64, u64), u128>) -> Result<u128> {
        if n == 0 {
            return Ok(u128::from(p == 0));
        }
        if p == 0 || p > n {
            return Ok(0);
        }
        if let Some(&v) = memo.get(&(n, p)) {
            return Ok(v);
        }
        let mut total = g(n - 1, p - 1, memo)?;
        if n % 2 == 0 {
            total = checked_add(total, g(n / 2, p, memo)?)?;
        }
        memo.insert((n, p), total);
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_weight_and_degree() {
        let w = AdmissibleWord::new(3, vec![1, 2]).unwrap();
        assert_eq!(w.weight(), 4);
        assert_eq!(w.intrinsic_degree(), 1 + 2 * 2);
        let empty = AdmissibleWord::new(5, vec![]).unwrap();
        assert_eq!(empty.weight(), 1);
        assert_eq!(empty.intrinsic_degree(), 0);
        assert!(AdmissibleWord::new(3, vec![2, 1]).is_err());
        assert!(AdmissibleWord::new(3, vec![3]).is_err());
        assert!(AdmissibleWord::new(3, vec![0]).is_err());
    }

    #[test]
    fn small_poincare_vectors() {
        assert_eq!(poincare_config(2, 2).unwrap(), vec![1, 1]);
        // Three points in the plane: the top class vanishes (3 is not a
        // power of two).
        assert_eq!(poincare_config(2, 3).unwrap(), vec![1, 1, 0]);
        assert_eq!(poincare_config(2, 4).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(poincare_config(3, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(poincare_config(3, 4).unwrap(), vec![1, 1, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn single_point_is_trivial() {
        for d in 2..=6 {
            assert_eq!(poincare_config(d, 1).unwrap(), vec![1]);
            assert_eq!(dim_config_homology(d, 1, 0).unwrap(), 1);
            assert_eq!(dim_config_homology(d, 1, 3).unwrap(), 0);
        }
    }

    #[test]
    fn brute_force_multiset_enumeration_agrees() {
        // Independent route: materialize every generator multiset.
        fn all_words(d: u32, max_weight: u64) -> Vec<AdmissibleWord> {
            let mut out = vec![AdmissibleWord::new(d, vec![]).unwrap()];
            let mut frontier: Vec<Vec<u32>> = vec![vec![]];
            while (1u64 << (frontier.first().map_or(0, |w| w.len()) + 1)) <= max_weight {
                let mut next = Vec::new();
                for w in &frontier {
                    let lo = *w.last().unwrap_or(&1);
                    for i in lo..=(d - 1) {
                        let mut v = w.clone();
                        v.push(i);
                        out.push(AdmissibleWord::new(d, v.clone()).unwrap());
                        next.push(v);
                    }
                }
                if next.is_empty() {
                    break;
                }
                frontier = next;
            }
            out.sort();
            out
        }
        fn count(
            words: &[AdmissibleWord],
            from: usize,
            weight_left: u64,
            tally: &mut Vec<u128>,
            degree: u64,
        ) {
            if weight_left == 0 {
                tally[degree as usize] += 1;
                return;
            }
            for idx in from..words.len() {
                let w = &words[idx];
                if w.weight() <= weight_left {
                    count(
                        words,
                        idx,
                        weight_left - w.weight(),
                        tally,
                        degree + w.intrinsic_degree(),
                    );
                }
            }
        }
        for d in 2..=4u32 {
            for k in 1..=8u64 {
                let words = all_words(d, k);
                let top = ((u64::from(d) - 1) * (k - 1)) as usize;
                let mut tally = vec![0u128; top + 1];
                count(&words, 0, k, &mut tally, 0);
                assert_eq!(poincare_config(d, k).unwrap(), tally, "d={d} k={k}");
            }
        }
    }

    #[test]
    fn fuks_values() {
        assert_eq!(fuks_dim(4, 2).unwrap(), 1); // {2, 2}
        assert_eq!(fuks_dim(3, 1).unwrap(), 1); // {2, 1}
        assert_eq!(fuks_dim(3, 2).unwrap(), 0); // 3 is not a power of two
        for n in 1..=64u64 {
            assert_eq!(fuks_dim(n, 0).unwrap(), 1, "all-ones partition");
            let top_nonzero = fuks_dim(n, n - 1).unwrap() > 0;
            assert_eq!(top_nonzero, n.is_power_of_two(), "n={n}");
            assert_eq!(fuks_dim(n, n).unwrap(), 0);
        }
    }

    #[test]
    fn fuks_agrees_with_plane_enumeration() {
        for n in 1..=40u64 {
            let pc = poincare_config(2, n).unwrap();
            for (i, &dim) in pc.iter().enumerate() {
                assert_eq!(dim, fuks_dim(n, i as u64).unwrap(), "n={n} i={i}");
            }
            for i in pc.len() as u64..n + 2 {
                assert_eq!(fuks_dim(n, i).unwrap(), 0, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn top_class_exists_exactly_at_power_of_two_weights() {
        for d in 2..=5u32 {
            for k in 1..=32u64 {
                let pc = poincare_config(d, k).unwrap();
                let top = *pc.last().unwrap();
                assert_eq!(top >= 1, k.is_power_of_two(), "d={d} k={k}");
                if k.is_power_of_two() {
                    assert_eq!(top, 1, "top class is one-dimensional");
                }
            }
        }
    }

    #[test]
    fn low_degrees_stabilize_in_d() {
        for d in 2..=6u32 {
            for k in 1..=16u64 {
                let here = poincare_config(d, k).unwrap();
                let above = poincare_config(d + 1, k).unwrap();
                for i in 0..=u64::from(d) - 2 {
                    let a = here.get(i as usize).copied().unwrap_or(0);
                    let b = above.get(i as usize).copied().unwrap_or(0);
                    assert_eq!(a, b, "d={d} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn guards() {
        assert!(poincare_config(1, 4).is_err());
        assert!(poincare_config(10, 4).is_err());
        assert!(poincare_config(3, 257).is_err());
        assert!(poincare_config(3, 0).is_err());
        assert!(fuks_dim(0, 0).is_err());
        assert!(fuks_dim(4097, 2).is_err());
        assert_eq!(fuks_dim(10, 20).unwrap(), 0);
    }
}
