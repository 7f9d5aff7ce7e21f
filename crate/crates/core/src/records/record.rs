use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::RecordError;
use crate::dyck::is_partial_dyck_even;
use crate::engine::{StepOutcome, StepResult};
use crate::params::exact::to_u64;
use crate::params::AlgoParams;

/// The pair `(r1, r2)` after `t` steps.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Record {
    r1: Vec<bool>,
    r2: BigUint,
    t: u64,
    u_total: u64,
}

/// What `r1` says about one step: kept, or a `2k`-cycle whose catalog index
/// was `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepCode {
    Kept,
    Uncolored { k: usize, z: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoppedStep {
    pub previous: Record,
    /// Number of ones after the last zero.
    pub q: usize,
    /// Catalog index of the uncolored cycle when `q > 0`.
    pub z: Option<u64>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rebuilds a record from its two components, validating the shape of `r1`.
    pub fn from_parts(r1: Vec<bool>, r2: BigUint) -> Result<Self, RecordError> {
        if r1.first() == Some(&true) {
            return Err(RecordError::Corrupt("r1 must start with a zero".into()));
        }
        let t = r1.iter().filter(|b| !**b).count() as u64;
        let u_total = r1.len() as u64 - t;
        Ok(Self { r1, r2, t, u_total })
    }

    pub fn r1(&self) -> &[bool] {
        &self.r1
    }

    pub fn r1_string(&self) -> String {
        self.r1.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn r2(&self) -> &BigUint {
        &self.r2
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Total number of vertex-uncolorings so far.
    pub fn u_total(&self) -> u64 {
        self.u_total
    }

    pub fn r1_bits(&self) -> u64 {
        self.r1.len() as u64
    }

    pub fn r2_bits(&self) -> u64 {
        self.r2.bits()
    }

    /// Appends one step: a `0`, then `2k - 2` ones and a new low digit
    /// `z - 1` of radix `floor(X^(2k-2))` when a cycle was uncolored.
    pub fn push(&mut self, outcome: &StepOutcome, params: &AlgoParams) -> Result<(), RecordError> {
        self.r1.push(false);
        self.t += 1;
        if let StepResult::Uncolored { k, z, .. } = &outcome.result {
            let (k, z) = (*k, *z);
            let radix = params.radix(k);
            if z == 0 || BigUint::from(z) > radix {
                return Err(RecordError::RadixOverflow { z, radix: radix.to_string(), cycle_len: 2 * k });
            }
            let ones = 2 * k - 2;
            self.r1.extend(std::iter::repeat_n(true, ones));
            self.u_total += ones as u64;
            self.r2 = &self.r2 * radix + (z - 1);
        }
        Ok(())
    }

    /// The properties every reachable record has, given the number of
    /// currently colored vertices.
    pub fn check_invariants(&self, colored: usize, params: &AlgoParams) -> Result<(), RecordError> {
        let bad = |m: String| Err(RecordError::Invariant(m));
        if !is_partial_dyck_even(&self.r1) {
            return bad(format!("r1 = {} is not a partial Dyck word with even descents", self.r1_string()));
        }
        let zeros = self.r1.iter().filter(|b| !**b).count() as u64;
        if zeros != self.t {
            return bad(format!("r1 has {zeros} zeros after {} steps", self.t));
        }
        if zeros - (self.r1.len() as u64 - zeros) != colored as u64 {
            return bad(format!("zeros - ones = {} but {colored} vertices are colored", 2 * zeros - self.r1.len() as u64));
        }
        if !params.below_x_power(&self.r2, self.u_total) {
            return bad(format!("r2 = {} is not below X^{}", self.r2, self.u_total));
        }
        Ok(())
    }
}

/// `rec` extended by one step.
pub fn log_step(rec: &Record, outcome: &StepOutcome, params: &AlgoParams) -> Result<Record, RecordError> {
    let mut next = rec.clone();
    next.push(outcome, params)?;
    Ok(next)
}

fn radix_for_ones(q: usize, params: &AlgoParams) -> Result<BigUint, RecordError> {
    if q % 2 != 0 {
        return Err(RecordError::Corrupt(format!("descent of odd length {q}")));
    }
    Ok(params.radix(q / 2 + 1))
}

fn index_from_digit(digit: BigUint) -> Result<u64, RecordError> {
    to_u64(&digit)
        .and_then(|d| d.checked_add(1))
        .ok_or_else(|| RecordError::Corrupt(format!("cycle index {digit} + 1 does not fit in 64 bits")))
}

/// Undoes the last [`log_step`]: drops the last zero and the ones after it,
/// and divides `r2` by the matching radix.
pub fn pop_last_step(rec: &Record, params: &AlgoParams) -> Result<PoppedStep, RecordError> {
    let p = rec.r1.iter().rposition(|b| !*b).ok_or(RecordError::Empty)?;
    let q = rec.r1.len() - p - 1;
    let mut previous = rec.clone();
    previous.r1.truncate(p);
    previous.t -= 1;
    previous.u_total -= q as u64;
    let z = if q == 0 {
        None
    } else {
        let (quot, digit) = rec.r2.div_rem(&radix_for_ones(q, params)?);
        previous.r2 = quot;
        Some(index_from_digit(digit)?)
    };
    Ok(PoppedStep { previous, q, z })
}

/// Splits a record into per-step codes, peeling the digits of `r2` from the
/// last uncolored step back to the first.
pub fn decode_steps(rec: &Record, params: &AlgoParams) -> Result<Vec<StepCode>, RecordError> {
    let mut ones_runs: Vec<usize> = Vec::with_capacity(rec.t as usize);
    for &bit in &rec.r1 {
        match (bit, ones_runs.last_mut()) {
            (false, _) => ones_runs.push(0),
            (true, Some(q)) => *q += 1,
            (true, None) => return Err(RecordError::Corrupt("r1 must start with a zero".into())),
        }
    }
    let mut rest = rec.r2.clone();
    let mut codes = vec![StepCode::Kept; ones_runs.len()];
    for (i, &q) in ones_runs.iter().enumerate().rev() {
        if q > 0 {
            let (quot, digit) = rest.div_rem(&radix_for_ones(q, params)?);
            rest = quot;
            codes[i] = StepCode::Uncolored { k: q / 2 + 1, z: index_from_digit(digit)? };
        }
    }
    if !rest.is_zero() {
        return Err(RecordError::Corrupt(format!("r2 has {} left over after the first uncoloring", rest)));
    }
    Ok(codes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{make_params, Kappa, Mode, DEFAULT_KAPPA};
    use crate::records::cycle_identifier;
    use proptest::prelude::*;

    fn kept() -> StepOutcome {
        StepOutcome { vertex: 1, color: 1, result: StepResult::Kept }
    }

    fn uncolored(k: usize, z: u64) -> StepOutcome {
        let ws: Vec<usize> = (2..=2 * k).collect();
        StepOutcome { vertex: 1, color: 1, result: StepResult::Uncolored { cycle: cycle_identifier(1, &ws).unwrap(), k, z } }
    }

    fn c6_params() -> AlgoParams {
        make_params(2, Kappa::new(63, 50).unwrap(), Mode::Safe).unwrap()
    }

    fn d3_params() -> AlgoParams {
        make_params(3, DEFAULT_KAPPA, Mode::Safe).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().filter(|c| !c.is_whitespace()).map(|c| c == '1').collect()
    }

    #[test]
    fn first_kept_step() {
        let rec = log_step(&Record::new(), &kept(), &c6_params()).unwrap();
        assert_eq!((rec.r1_string().as_str(), rec.r2().clone()), ("0", BigUint::zero()));
        assert_eq!((rec.t(), rec.u_total()), (1, 0));
    }

    #[test]
    fn six_cycle_uncoloring() {
        let p = c6_params();
        let rec = log_step(&Record::new(), &kept(), &p).unwrap();
        let rec = log_step(&rec, &uncolored(3, 1), &p).unwrap();
        assert_eq!(rec.r1_string(), "001111");
        assert_eq!(*rec.r2(), BigUint::zero());
        assert_eq!(rec.u_total(), 4);
    }

    #[test]
    fn mixed_radix_digit() {
        let p = d3_params();
        let rec = Record::from_parts(bits("0"), BigUint::from(5u32)).unwrap();
        let rec = log_step(&rec, &uncolored(2, 3), &p).unwrap();
        assert_eq!(*rec.r2(), BigUint::from(47u32));
        assert_eq!(rec.r1_string(), "0011");
    }

    #[test]
    fn radix_overflow_is_rejected() {
        let p = d3_params();
        assert!(matches!(log_step(&Record::new(), &uncolored(2, 10), &p), Err(RecordError::RadixOverflow { .. })));
        assert!(matches!(log_step(&Record::new(), &uncolored(2, 0), &p), Err(RecordError::RadixOverflow { .. })));
    }

    #[test]
    fn pop_examples() {
        let p = c6_params();
        let one = Record::from_parts(bits("0"), BigUint::zero()).unwrap();
        let popped = pop_last_step(&one, &p).unwrap();
        assert_eq!((popped.previous, popped.q, popped.z), (Record::new(), 0, None));

        let rec = Record::from_parts(bits("00 1111"), BigUint::zero()).unwrap();
        let popped = pop_last_step(&rec, &p).unwrap();
        assert_eq!(popped.previous.r1_string(), "0");
        assert_eq!((popped.q, popped.z), (4, Some(1)));

        let rec = Record::from_parts(bits("0 011"), BigUint::from(47u32)).unwrap();
        let popped = pop_last_step(&rec, &d3_params()).unwrap();
        assert_eq!(*popped.previous.r2(), BigUint::from(5u32));
        assert_eq!((popped.q, popped.z), (2, Some(3)));

        assert_eq!(pop_last_step(&Record::new(), &p), Err(RecordError::Empty));
        let odd = Record::from_parts(bits("001"), BigUint::zero()).unwrap();
        assert!(matches!(pop_last_step(&odd, &p), Err(RecordError::Corrupt(_))));
    }

    #[test]
    fn decode_detects_leftover() {
        let p = d3_params();
        let rec = Record::from_parts(bits("0011"), BigUint::from(9u32)).unwrap();
        assert!(matches!(decode_steps(&rec, &p), Err(RecordError::Corrupt(_))));
        assert!(Record::from_parts(bits("10"), BigUint::zero()).is_err());
    }

    #[test]
    fn invariants_of_small_record() {
        let p = d3_params();
        let rec = Record::from_parts(bits("000011"), BigUint::from(8u32)).unwrap();
        assert!(rec.check_invariants(2, &p).is_ok());
        assert!(rec.check_invariants(3, &p).is_err());
        let too_big = Record::from_parts(bits("000011"), BigUint::from(10u32)).unwrap();
        assert!(too_big.check_invariants(2, &p).is_err());
        let odd = Record::from_parts(bits("0001"), BigUint::zero()).unwrap();
        assert!(odd.check_invariants(2, &p).is_err());
    }

    fn step_strategy() -> impl Strategy<Value = (bool, usize, u64)> {
        (any::<bool>(), 2usize..5, any::<u64>())
    }

    proptest! {
        // log then pop, and log many then decode, invert each other
        #[test]
        fn push_pop_and_decode_invert(steps in prop::collection::vec(step_strategy(), 0..40)) {
            let p = d3_params();
            let mut rec = Record::new();
            let mut history = vec![rec.clone()];
            let mut expected = Vec::new();
            for (keep, k, raw) in steps {
                let radix = to_u64(&p.radix(k)).unwrap();
                let out = if keep { kept() } else { uncolored(k, raw % radix + 1) };
                expected.push(match &out.result {
                    StepResult::Kept => StepCode::Kept,
                    StepResult::Uncolored { k, z, .. } => StepCode::Uncolored { k: *k, z: *z },
                });
                rec = log_step(&rec, &out, &p).unwrap();
                history.push(rec.clone());
            }
            prop_assert_eq!(decode_steps(&rec, &p).unwrap(), expected.clone());
            prop_assert!(p.below_x_power(rec.r2(), rec.u_total()));
            let mut cur = rec;
            for (i, code) in expected.iter().enumerate().rev() {
                let popped = pop_last_step(&cur, &p).unwrap();
                match code {
                    StepCode::Kept => prop_assert_eq!(popped.z, None),
                    StepCode::Uncolored { z, .. } => prop_assert_eq!(popped.z, Some(*z)),
                }
                prop_assert_eq!(&popped.previous, &history[i]);
                cur = popped.previous;
            }
            prop_assert_eq!(cur, Record::new());
        }
    }
}
