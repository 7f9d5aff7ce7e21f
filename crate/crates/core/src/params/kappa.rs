use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::exact::{ceil_nth_root, pow};
use super::ParamError;

/// The dangerous-pair density parameter, stored as a reduced positive fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Kappa {
    num: u64,
    den: u64,
}

/// 10583/10000, the rounding of `2^(5/3) / 3` that minimizes the leading
/// coefficient of the palette bound.
pub const DEFAULT_KAPPA: Kappa = Kappa { num: 10583, den: 10000 };

impl Kappa {
    pub fn new(num: u64, den: u64) -> Result<Self, ParamError> {
        if num == 0 || den == 0 {
            return Err(ParamError::InvalidKappa(format!("{num}/{den} is not positive")));
        }
        let g = num.gcd(&den);
        Ok(Self { num: num / g, den: den / g })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Exact check of `kappa >= 2 / delta^(2/3)`, i.e. `kappa^3 * delta^2 >= 8`.
    pub fn admissible_for(self, delta: u64) -> bool {
        pow(self.num, 3) * pow(delta, 2) >= pow(self.den, 3) * 8u32
    }

    /// Smallest multiple of 1/10000 that is admissible for `delta`.
    pub fn minimal_for(delta: u64) -> Self {
        assert!(delta >= 1);
        let scale = 10_000u64;
        let m = ceil_nth_root(&(pow(scale, 3) * 8u32), &pow(delta, 2), 3);
        let m = super::exact::to_u64(&m).expect("minimal kappa numerator fits in u64");
        Self::new(m.max(1), scale).expect("positive")
    }

    /// The default value, raised to [`Kappa::minimal_for`] when it is not admissible.
    pub fn default_for(delta: u64) -> Self {
        if DEFAULT_KAPPA.admissible_for(delta) {
            DEFAULT_KAPPA
        } else {
            Self::minimal_for(delta)
        }
    }

    /// Parses `"1.0583"`, `"63/50"` or `"2"`. Decimals become `digits / 10^places`.
    pub fn parse(s: &str) -> Result<Self, ParamError> {
        let s = s.trim();
        let bad = || ParamError::InvalidKappa(format!("cannot parse {s:?} as a positive rational"));
        if let Some((a, b)) = s.split_once('/') {
            let a = a.trim().parse::<u64>().map_err(|_| bad())?;
            let b = b.trim().parse::<u64>().map_err(|_| bad())?;
            return Self::new(a, b);
        }
        let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let places = u32::try_from(frac_part.len()).map_err(|_| bad())?;
        let den = 10u64.checked_pow(places).ok_or_else(bad)?;
        let digits = format!("{int_part}{frac_part}");
        let num = if digits.is_empty() { 0 } else { digits.parse::<u64>().map_err(|_| bad())? };
        Self::new(num, den)
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Kappa {
    type Err = ParamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(Kappa::parse("1.0583").unwrap(), Kappa::new(10583, 10000).unwrap());
        assert_eq!(Kappa::parse("1.26").unwrap(), Kappa::new(63, 50).unwrap());
        assert_eq!(Kappa::parse("2").unwrap(), Kappa::new(2, 1).unwrap());
        assert_eq!(Kappa::parse(".5").unwrap(), Kappa::new(1, 2).unwrap());
        assert_eq!(Kappa::parse("63/50").unwrap(), Kappa::new(63, 50).unwrap());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "abc", "-1", "0", "1.2.3", "1e3", "0/4", "3/0", "."] {
            assert!(Kappa::parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn admissibility() {
        assert!(DEFAULT_KAPPA.admissible_for(3));
        assert!(DEFAULT_KAPPA.admissible_for(10));
        // 1.0583^3 * 4 = 4.74... < 8
        assert!(!DEFAULT_KAPPA.admissible_for(2));
        assert!(!DEFAULT_KAPPA.admissible_for(1));
    }

    #[test]
    fn minimal_values() {
        // 1.26^3 * 4 = 8.0015 >= 8 while 1.2599^3 * 4 = 7.9995 < 8
        assert_eq!(Kappa::minimal_for(2), Kappa::new(63, 50).unwrap());
        assert_eq!(Kappa::minimal_for(1), Kappa::new(2, 1).unwrap());
        assert_eq!(Kappa::default_for(2), Kappa::new(63, 50).unwrap());
        assert_eq!(Kappa::default_for(3), DEFAULT_KAPPA);
        for delta in 1..40 {
            let k = Kappa::minimal_for(delta);
            assert!(k.admissible_for(delta));
            let below = Kappa::new(k.num() * (10_000 / k.den()) - 1, 10_000);
            if let Ok(below) = below {
                assert!(!below.admissible_for(delta), "delta {delta}");
            }
        }
    }
}
