//! Palette, list-size and radix computations for a given `(delta, kappa)`.
//!
//! Every quantity that feeds a comparison or the record arithmetic is
//! computed with exact integers. Irrational values such as
//! `delta^(4/3) * sqrt(kappa / 2)` are never materialized; instead both sides
//! of each inequality are raised to a power that clears the roots.

pub mod exact;
mod kappa;

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use exact::{big, ceil_nth_root, floor_nth_root, pow, to_u64};
pub use kappa::{Kappa, DEFAULT_KAPPA};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("kappa {kappa} is below 2/delta^(2/3) for delta = {delta}; the smallest admissible value with four decimals is {minimal} (~{:.4})", minimal.as_f64())]
    KappaTooSmall { delta: u64, kappa: Kappa, minimal: Kappa },
    #[error("invalid kappa: {0}")]
    InvalidKappa(String),
    #[error("maximum degree must be at least 1")]
    ZeroDelta,
    #[error("unknown mode {0:?} (expected safe or tight)")]
    UnknownMode(String),
    #[error("parameters were built for delta = {params} but the graph has maximum degree {graph}")]
    DeltaMismatch { params: u64, graph: u64 },
}

/// How the palette size is rounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `P = list_size + delta + d_max`; every candidate list has at least
    /// `list_size` colors.
    #[default]
    Safe,
    /// `P = floor(f(delta, kappa))`; lists may come up short.
    Tight,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Safe => "safe",
            Mode::Tight => "tight",
        })
    }
}

impl FromStr for Mode {
    type Err = ParamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "safe" => Ok(Mode::Safe),
            "tight" => Ok(Mode::Tight),
            other => Err(ParamError::UnknownMode(other.to_string())),
        }
    }
}

/// Memoized `floor(X^(2k-2))` for `X = delta^(4/3) * sqrt(kappa / 2)`.
#[derive(Debug, Default)]
pub struct RadixTable {
    // index k - 2
    values: RwLock<Vec<BigUint>>,
}

#[derive(Debug, Clone)]
pub struct AlgoParams {
    pub delta: u64,
    pub kappa: Kappa,
    /// `ceil((3/2) * sqrt(3 kappa / 2) * delta^(4/3))`
    pub list_size: u64,
    /// `ceil((delta^(4/3) - delta^(1/3)) / kappa)`
    pub d_max: u64,
    /// Number of colors; colors are `1..=palette`.
    pub palette: u64,
    pub f_approx: f64,
    pub mode: Mode,
    radices: Arc<RadixTable>,
}

/// `f(delta, kappa) = (1/kappa + (3/2) sqrt(3 kappa / 2)) delta^(4/3) + delta - delta^(1/3) / kappa`.
pub fn f_value(delta: f64, kappa: f64) -> f64 {
    bound_coefficient(kappa) * delta.powf(4.0 / 3.0) + delta - delta.cbrt() / kappa
}

/// Leading coefficient `1/kappa + (3/2) sqrt(3 kappa / 2)` of `f`.
pub fn bound_coefficient(kappa: f64) -> f64 {
    1.0 / kappa + 1.5 * (1.5 * kappa).sqrt()
}

// Sixth power of the real list size: list^6 = 19683 a^3 delta^8 / (512 b^3).
fn list_size_sixth(delta: u64, kappa: Kappa) -> (BigUint, BigUint) {
    (big(19683) * pow(kappa.num(), 3) * pow(delta, 8), big(512) * pow(kappa.den(), 3))
}

// Cube of the real dangerous-set bound: delta (delta - 1)^3 b^3 / a^3.
fn d_bound_cube(delta: u64, kappa: Kappa) -> (BigUint, BigUint) {
    (big(delta) * pow(delta - 1, 3) * pow(kappa.den(), 3), pow(kappa.num(), 3))
}

/// Exact `floor(f(delta, kappa))` by refining dyadic lower bounds of the two
/// irrational terms until both ends of the enclosing interval share a floor.
pub fn floor_f(delta: u64, kappa: Kappa) -> u64 {
    let (ln, ld) = list_size_sixth(delta, kappa);
    let (dn, dd) = d_bound_cube(delta, kappa);
    let mut lo = 0u64;
    for bits in [16u64, 32, 64, 128, 256, 512, 1024] {
        let scale = pow(2, bits);
        // floor(T * S) = floor_root(N * S^n, D, n)
        let l = floor_nth_root(&(&ln * num_traits::pow(scale.clone(), 6)), &ld, 6);
        let d = floor_nth_root(&(&dn * num_traits::pow(scale.clone(), 3)), &dd, 3);
        let sum = l + d;
        let lower = &sum / &scale;
        let upper = (&sum + 1u32) / &scale;
        lo = to_u64(&lower).expect("palette fits in u64");
        if lower == upper {
            break;
        }
    }
    lo + delta
}

/// Builds the parameters for maximum degree `delta`.
pub fn make_params(delta: u64, kappa: Kappa, mode: Mode) -> Result<AlgoParams, ParamError> {
    if delta == 0 {
        return Err(ParamError::ZeroDelta);
    }
    if !kappa.admissible_for(delta) {
        return Err(ParamError::KappaTooSmall { delta, kappa, minimal: Kappa::minimal_for(delta) });
    }
    let (ln, ld) = list_size_sixth(delta, kappa);
    let list_size = to_u64(&ceil_nth_root(&ln, &ld, 6)).expect("list size fits in u64");
    let (dn, dd) = d_bound_cube(delta, kappa);
    let d_max = to_u64(&ceil_nth_root(&dn, &dd, 3)).expect("d_max fits in u64");
    let palette = match mode {
        Mode::Safe => list_size + delta + d_max,
        Mode::Tight => floor_f(delta, kappa),
    };
    Ok(AlgoParams {
        delta,
        kappa,
        list_size,
        d_max,
        palette,
        f_approx: f_value(delta as f64, kappa.as_f64()),
        mode,
        radices: Arc::new(RadixTable::default()),
    })
}

impl AlgoParams {
    /// `floor(X^(2k-2))`, the radix that encodes which `2k`-cycle was uncolored.
    pub fn radix(&self, k: usize) -> BigUint {
        assert!(k >= 2, "cycles have length at least 4");
        let idx = k - 2;
        if let Some(r) = self.radices.values.read().unwrap().get(idx) {
            return r.clone();
        }
        let mut values = self.radices.values.write().unwrap();
        while values.len() <= idx {
            let kk = values.len() as u64 + 2;
            values.push(self.radix_uncached(kk));
        }
        values[idx].clone()
    }

    fn radix_uncached(&self, k: u64) -> BigUint {
        let e = k - 1;
        let num = pow(self.delta, 8 * e) * pow(self.kappa.num(), 3 * e);
        let den = pow(2 * self.kappa.den(), 3 * e);
        floor_nth_root(&num, &den, 3)
    }

    /// Exact test of `value < X^u`: `value^6 (2b)^(3u) < delta^(8u) a^(3u)`.
    pub fn below_x_power(&self, value: &BigUint, u: u64) -> bool {
        let lhs = num_traits::pow(value.clone(), 6) * pow(2 * self.kappa.den(), 3 * u);
        let rhs = pow(self.delta, 8 * u) * pow(self.kappa.num(), 3 * u);
        lhs < rhs
    }

    /// Exact test of the cycle-count bound `count < (kappa / 2) delta^(2k - 4/3)`,
    /// i.e. `8 count^3 b^3 < a^3 delta^(6k - 4)`.
    pub fn cycle_count_within_bound(&self, count: u64, k: usize) -> bool {
        let lhs = big(8) * pow(count, 3) * pow(self.kappa.den(), 3);
        let rhs = pow(self.kappa.num(), 3) * pow(self.delta, 6 * k as u64 - 4);
        lhs < rhs
    }

    /// `(kappa / 2) delta^(2k - 4/3)` as a float, for reporting only.
    pub fn cycle_count_bound_f64(&self, k: usize) -> f64 {
        self.kappa.as_f64() / 2.0 * (self.delta as f64).powf(2.0 * k as f64 - 4.0 / 3.0)
    }

    /// Number of common neighbors from which a pair counts as dangerous:
    /// the smallest `s` with `s^3 b^3 >= a^3 delta^2`.
    pub fn danger_threshold(&self) -> u64 {
        danger_threshold(self.delta, self.kappa)
    }
}

pub(crate) fn danger_threshold(delta: u64, kappa: Kappa) -> u64 {
    let s = ceil_nth_root(&(pow(kappa.num(), 3) * pow(delta, 2)), &pow(kappa.den(), 3), 3);
    to_u64(&s).expect("threshold fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: u64, b: u64) -> Kappa {
        Kappa::new(a, b).unwrap()
    }

    // Independent float evaluation of the per-term ceilings, far from any integer boundary.
    fn oracle_terms(delta: f64, kappa: f64) -> (f64, f64) {
        let list = 1.5 * (1.5 * kappa).sqrt() * delta.powf(4.0 / 3.0);
        let d = (delta.powf(4.0 / 3.0) - delta.cbrt()) / kappa;
        (list, d)
    }

    #[test]
    fn delta_three_default_kappa() {
        let p = make_params(3, DEFAULT_KAPPA, Mode::Safe).unwrap();
        let (list, d) = oracle_terms(3.0, 1.0583);
        assert!((list - 8.1771).abs() < 1e-3 && (d - 2.7256).abs() < 1e-3);
        assert_eq!((p.list_size, p.d_max, p.palette), (9, 3, 15));
        assert!((p.f_approx - 13.903).abs() < 1e-3, "{}", p.f_approx);
        let alt = 9.0 / 2f64.powf(5.0 / 3.0) * 3f64.powf(4.0 / 3.0) + 3.0 - 3f64.cbrt() / 1.0583;
        assert!((p.f_approx - alt).abs() < 1e-3);
    }

    #[test]
    fn delta_ten_default_kappa() {
        let p = make_params(10, DEFAULT_KAPPA, Mode::Safe).unwrap();
        assert_eq!((p.list_size, p.d_max, p.palette), (41, 19, 70));
        assert!((p.f_approx - 69.04).abs() < 1e-2, "{}", p.f_approx);
    }

    #[test]
    fn constraint_violation_suggests_minimum() {
        let err = make_params(2, DEFAULT_KAPPA, Mode::Safe).unwrap_err();
        assert_eq!(err, ParamError::KappaTooSmall { delta: 2, kappa: DEFAULT_KAPPA, minimal: k(63, 50) });
        assert!(err.to_string().contains("63/50"));
        assert_eq!(make_params(0, DEFAULT_KAPPA, Mode::Safe).unwrap_err(), ParamError::ZeroDelta);
    }

    #[test]
    fn cycle_graph_params() {
        let p = make_params(2, k(63, 50), Mode::Safe).unwrap();
        assert_eq!((p.list_size, p.d_max, p.palette), (6, 1, 9));
    }

    #[test]
    fn radix_examples() {
        // X^4 = 2^(16/3) * 0.63^2 = 16.002
        let p = make_params(2, k(63, 50), Mode::Safe).unwrap();
        assert_eq!(p.radix(3), big(16));
        // X^2 = 3^(8/3) * kappa / 2 = 9.906
        let p = make_params(3, DEFAULT_KAPPA, Mode::Safe).unwrap();
        assert_eq!(p.radix(2), big(9));
        let p = make_params(1, k(2, 1), Mode::Safe).unwrap();
        assert_eq!(p.radix(2), big(1));
        assert_eq!(p.radix(7), big(1));
    }

    #[test]
    fn radix_is_nondecreasing_and_matches_float() {
        for (delta, kappa) in [(3, DEFAULT_KAPPA), (5, DEFAULT_KAPPA), (2, k(63, 50)), (8, DEFAULT_KAPPA)] {
            let p = make_params(delta, kappa, Mode::Safe).unwrap();
            let x = (delta as f64).powf(4.0 / 3.0) * (kappa.as_f64() / 2.0).sqrt();
            let mut prev = big(0);
            for kk in 2..6 {
                let r = p.radix(kk);
                assert!(r >= prev);
                let fl = x.powi(2 * kk as i32 - 2);
                let r64 = r.to_string().parse::<f64>().unwrap();
                assert!(r64 <= fl * (1.0 + 1e-12) && fl < r64 + 1.0 + fl * 1e-12, "{delta} {kk}");
                prev = r;
            }
        }
    }

    #[test]
    fn ceilings_bracket_real_values() {
        for delta in 1..=40u64 {
            for kappa in [Kappa::default_for(delta), k(3, 2), k(2, 1), Kappa::minimal_for(delta)] {
                if !kappa.admissible_for(delta) {
                    continue;
                }
                let p = make_params(delta, kappa, Mode::Safe).unwrap();
                // l - 1 < list_real <= l, via sixth powers
                let (n, d) = list_size_sixth(delta, kappa);
                assert!(pow(p.list_size, 6) * &d >= n);
                assert!(pow(p.list_size - 1, 6) * &d < n);
                let f = p.f_approx;
                let fc = f.ceil() as u64;
                assert!(p.palette + 2 >= fc && p.palette <= fc + 2, "delta {delta}: P {} f {f}", p.palette);
                let tight = make_params(delta, kappa, Mode::Tight).unwrap();
                assert_eq!(tight.palette, f.floor() as u64, "delta {delta} kappa {kappa}");
                assert!(tight.palette <= p.palette);
            }
        }
    }

    #[test]
    fn danger_thresholds() {
        // kappa * delta^(2/3) = 2.2013 at delta 3
        assert_eq!(danger_threshold(3, DEFAULT_KAPPA), 3);
        // 2.0002 at delta 2, kappa 63/50
        assert_eq!(danger_threshold(2, k(63, 50)), 3);
        // exactly 2 at delta 1, kappa 2
        assert_eq!(danger_threshold(1, k(2, 1)), 2);
    }

    #[test]
    fn bound_coefficient_at_optimum() {
        let kappa = 2f64.powf(5.0 / 3.0) / 3.0;
        let c = bound_coefficient(kappa);
        assert!((c - 2.83482).abs() < 1e-5, "{c}");
        assert!(c < 2.83483);
        assert!((c - 9.0 / 2f64.powf(5.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn x_power_and_cycle_bounds() {
        let p = make_params(3, DEFAULT_KAPPA, Mode::Safe).unwrap();
        // X^2 = 9.906
        assert!(p.below_x_power(&big(9), 2));
        assert!(!p.below_x_power(&big(10), 2));
        assert!(p.below_x_power(&big(0), 0) && !p.below_x_power(&big(1), 0));
        // (kappa/2) 3^(8/3) = 9.906
        assert!(p.cycle_count_within_bound(9, 2));
        assert!(!p.cycle_count_within_bound(10, 2));
        assert!((p.cycle_count_bound_f64(2) - 9.906).abs() < 1e-2);
    }
}
