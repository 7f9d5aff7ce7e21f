//! Partial Dyck words whose descents (maximal runs of ones) all have even
//! length: recognition and exact counting.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("r = {r} exceeds t = {t}")]
pub struct DyckDomainError {
    pub t: usize,
    pub r: usize,
}

/// No prefix has more ones than zeros, and every maximal run of ones is even.
pub fn is_partial_dyck_even(bits: &[bool]) -> bool {
    let (mut height, mut run) = (0i64, 0usize);
    for &b in bits {
        if b {
            height -= 1;
            if height < 0 {
                return false;
            }
            run += 1;
        } else {
            if run % 2 == 1 {
                return false;
            }
            height += 1;
            run = 0;
        }
    }
    run % 2 == 0
}

/// Parses a string of `0`/`1`, ignoring whitespace.
pub fn parse_bits(s: &str) -> Option<Vec<bool>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect()
}

/// Exact counts of words with `z` zeros and `o <= z` ones, for all `z <= max_zeros`.
///
/// The dynamic program walks words left to right with state
/// `(zeros, ones, parity of the current run of ones)`: a zero may only
/// follow an even run, and a one may only be added while `ones < zeros`.
#[derive(Debug, Clone)]
pub struct DyckCountTable {
    // even[z][o]: words ending outside a run or after an even run
    even: Vec<Vec<BigUint>>,
}

impl DyckCountTable {
    pub fn build(max_zeros: usize) -> Self {
        let mut even: Vec<Vec<BigUint>> = Vec::with_capacity(max_zeros + 1);
        for z in 0..=max_zeros {
            let mut e = vec![BigUint::zero(); z + 1];
            let mut odd = vec![BigUint::zero(); z + 1];
            for o in 0..=z {
                let mut acc = if z == 0 && o == 0 { BigUint::from(1u32) } else { BigUint::zero() };
                if z > 0 && o < z {
                    acc += &even[z - 1][o];
                }
                if o > 0 {
                    acc += &odd[o - 1];
                    odd[o] = e[o - 1].clone();
                }
                e[o] = acc;
            }
            even.push(e);
        }
        Self { even }
    }

    pub fn max_zeros(&self) -> usize {
        self.even.len() - 1
    }

    /// Words with exactly `t` zeros and `t - r` ones.
    pub fn partial(&self, t: usize, r: usize) -> Result<&BigUint, DyckDomainError> {
        if r > t {
            return Err(DyckDomainError { t, r });
        }
        Ok(&self.even[t][t - r])
    }

    /// Dyck words of length `2t`.
    pub fn dyck(&self, t: usize) -> &BigUint {
        &self.even[t][t]
    }
}

/// Number of Dyck words of length `2t` with all descents even.
pub fn count_dyck_even(t: usize) -> BigUint {
    DyckCountTable::build(t).dyck(t).clone()
}

/// Number of partial Dyck words with `t` zeros, `t - r` ones and all descents even.
pub fn count_partial_dyck_even(t: usize, r: usize) -> Result<BigUint, DyckDomainError> {
    if r > t {
        return Err(DyckDomainError { t, r });
    }
    DyckCountTable::build(t).partial(t, r).cloned()
}

/// `count * len^(3/2) / (3 sqrt(3) / 2)^len`, the quantity the growth bound
/// keeps below a constant.
pub fn growth_ratio(count: &BigUint, len: usize) -> f64 {
    if len == 0 {
        return count.to_f64().unwrap_or(f64::INFINITY);
    }
    let base: f64 = 1.5 * 3f64.sqrt();
    let c = count.to_f64().unwrap_or(f64::INFINITY);
    c * (len as f64).powf(1.5) / base.powi(len as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<bool> {
        parse_bits(s).unwrap()
    }

    // Enumerates every word with `zeros` zeros and any number of ones that
    // satisfies the prefix condition, classifying leaves with the recognizer.
    fn brute_force(zeros: usize) -> Vec<u64> {
        fn rec(word: &mut Vec<bool>, z: usize, o: usize, zeros: usize, out: &mut Vec<u64>) {
            if z == zeros && is_partial_dyck_even(word) {
                out[o] += 1;
            }
            if z < zeros {
                word.push(false);
                rec(word, z + 1, o, zeros, out);
                word.pop();
            }
            if o < z {
                word.push(true);
                rec(word, z, o + 1, zeros, out);
                word.pop();
            }
        }
        let mut out = vec![0u64; zeros + 1];
        rec(&mut Vec::new(), 0, 0, zeros, &mut out);
        out
    }

    #[test]
    fn recognizer() {
        assert!(is_partial_dyck_even(&[]));
        assert!(is_partial_dyck_even(&w("0011")));
        assert!(!is_partial_dyck_even(&w("0101")));
        assert!(!is_partial_dyck_even(&w("0110")));
        assert!(!is_partial_dyck_even(&w("1")));
        assert!(is_partial_dyck_even(&w("00 0 11 0")));
        assert!(!is_partial_dyck_even(&w("0001")));
        assert_eq!(parse_bits("01x"), None);
    }

    #[test]
    fn dyck_counts() {
        let table = DyckCountTable::build(8);
        let got: Vec<u64> = [2, 4, 6, 8].iter().map(|&t| table.dyck(t).to_u64().unwrap()).collect();
        assert_eq!(got, vec![1, 3, 12, 55]);
        for t in [1, 3, 5, 7] {
            assert!(table.dyck(t).is_zero());
        }
        assert_eq!(count_dyck_even(0), BigUint::from(1u32));
    }

    #[test]
    fn partial_counts() {
        assert_eq!(count_partial_dyck_even(2, 2).unwrap(), BigUint::from(1u32));
        assert_eq!(count_partial_dyck_even(2, 1).unwrap(), BigUint::zero());
        assert_eq!(count_partial_dyck_even(3, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(count_partial_dyck_even(2, 3), Err(DyckDomainError { t: 2, r: 3 }));
    }

    #[test]
    fn matches_brute_force() {
        let table = DyckCountTable::build(11);
        for t in 0..=11 {
            let bf = brute_force(t);
            for r in 0..=t {
                assert_eq!(table.partial(t, r).unwrap().to_u64().unwrap(), bf[t - r], "t={t} r={r}");
            }
        }
    }

    #[test]
    fn closed_form_at_even_lengths() {
        let table = DyckCountTable::build(60);
        for m in 1..=30usize {
            // C(3m, m) / (2m + 1)
            let mut binom = BigUint::from(1u32);
            for i in 0..m {
                binom = binom * (3 * m - i) / (i + 1);
            }
            assert_eq!(table.dyck(2 * m), &(binom / (2 * m + 1)), "m={m}");
        }
    }

    #[test]
    fn growth_ratio_increases_below_limit() {
        // limit from Stirling: sqrt(3 / (2 pi))
        let limit = (3.0 / (2.0 * std::f64::consts::PI)).sqrt();
        let table = DyckCountTable::build(60);
        let ratios: Vec<f64> = (1..=30).map(|m| growth_ratio(table.dyck(2 * m), 2 * m)).collect();
        assert!((ratios[0] - 0.41903).abs() < 1e-4);
        assert!(ratios.windows(2).all(|p| p[0] < p[1]));
        assert!(ratios.iter().all(|&r| r < limit));
    }
}
