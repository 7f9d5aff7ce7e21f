//! Binary record file.
//!
//! Layout, all integers big-endian:
//!
//! ```text
//! "ACRC1"            5 bytes
//! delta              u64
//! kappa numerator    u64
//! kappa denominator  u64
//! mode               u8   (0 safe, 1 tight)
//! n                  u64
//! seed               u64
//! t                  u64
//! r1 bit count       u64
//! r1 bits            ceil(count / 8) bytes, first bit in the high bit, zero padded
//! r2 byte count      u32
//! r2                 minimal big-endian magnitude (empty for zero)
//! ```

use num_bigint::BigUint;

use super::{Record, RecordError};
use crate::params::{Kappa, Mode};

pub const MAGIC: &[u8; 5] = b"ACRC1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordFile {
    pub delta: u64,
    pub kappa: Kappa,
    pub mode: Mode,
    pub n: u64,
    pub seed: u64,
    pub record: Record,
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, len: usize, what: &str) -> Result<&'a [u8], RecordError> {
        let end = self.pos.checked_add(len).filter(|&e| e <= self.bytes.len());
        let end = end.ok_or_else(|| RecordError::Format(format!("truncated while reading {what}")))?;
        let out = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    fn u64(&mut self, what: &str) -> Result<u64, RecordError> {
        Ok(u64::from_be_bytes(self.take(8, what)?.try_into().unwrap()))
    }
}

impl RecordFile {
    pub fn encode(&self) -> Vec<u8> {
        let rec = &self.record;
        let mut out = Vec::with_capacity(64 + rec.r1().len() / 8);
        out.extend_from_slice(MAGIC);
        for x in [self.delta, self.kappa.num(), self.kappa.den()] {
            out.extend_from_slice(&x.to_be_bytes());
        }
        out.push(match self.mode {
            Mode::Safe => 0,
            Mode::Tight => 1,
        });
        for x in [self.n, self.seed, rec.t(), rec.r1_bits()] {
            out.extend_from_slice(&x.to_be_bytes());
        }
        for chunk in rec.r1().chunks(8) {
            let byte = chunk.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (7 - i)));
            out.push(byte);
        }
        let r2 = if rec.r2().bits() == 0 { Vec::new() } else { rec.r2().to_bytes_be() };
        out.extend_from_slice(&(r2.len() as u32).to_be_bytes());
        out.extend_from_slice(&r2);
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, RecordError> {
        let bad = |m: &str| RecordError::Format(m.to_string());
        let mut rd = Reader { bytes, pos: 0 };
        if rd.take(5, "magic")? != MAGIC {
            return Err(bad("bad magic"));
        }
        let delta = rd.u64("delta")?;
        let (num, den) = (rd.u64("kappa")?, rd.u64("kappa")?);
        let kappa = Kappa::new(num, den).map_err(|e| RecordError::Format(e.to_string()))?;
        if kappa.num() != num {
            return Err(bad("kappa is not reduced"));
        }
        let mode = match rd.take(1, "mode")?[0] {
            0 => Mode::Safe,
            1 => Mode::Tight,
            _ => return Err(bad("unknown mode byte")),
        };
        let n = rd.u64("n")?;
        let seed = rd.u64("seed")?;
        let t = rd.u64("t")?;
        let r1_len = rd.u64("r1 length")?;
        let r1_len = usize::try_from(r1_len).map_err(|_| bad("r1 too long"))?;
        let packed = rd.take(r1_len.div_ceil(8), "r1")?;
        let r1: Vec<bool> = (0..r1_len).map(|i| packed[i / 8] >> (7 - i % 8) & 1 == 1).collect();
        if r1_len % 8 != 0 && packed[packed.len() - 1] & (0xff >> (r1_len % 8)) != 0 {
            return Err(bad("nonzero padding bits in r1"));
        }
        let r2_len = u32::from_be_bytes(rd.take(4, "r2 length")?.try_into().unwrap()) as usize;
        let r2_bytes = rd.take(r2_len, "r2")?;
        if r2_bytes.first() == Some(&0) {
            return Err(bad("r2 has a leading zero byte"));
        }
        if rd.pos != bytes.len() {
            return Err(bad("trailing bytes"));
        }
        let record = Record::from_parts(r1, BigUint::from_bytes_be(r2_bytes))?;
        if record.t() != t {
            return Err(bad("step count does not match r1"));
        }
        Ok(Self { delta, kappa, mode, n, seed, record })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> RecordFile {
        let r1 = "0001100001111".chars().map(|c| c == '1').collect();
        RecordFile {
            delta: 3,
            kappa: Kappa::new(10583, 10000).unwrap(),
            mode: Mode::Safe,
            n: 8,
            seed: 99,
            record: Record::from_parts(r1, BigUint::from(300u32)).unwrap(),
        }
    }

    #[test]
    fn layout() {
        let bytes = sample().encode();
        assert_eq!(&bytes[..5], b"ACRC1");
        // 5 + 3*8 + 1 + 4*8 + 2 + 4 + 2
        assert_eq!(bytes.len(), 70);
        assert_eq!(&bytes[62..64], &[0b0001_1000, 0b0111_1000]);
        assert_eq!(&bytes[64..], &[0, 0, 0, 2, 1, 44]);
        assert_eq!(RecordFile::decode(&bytes).unwrap(), sample());
    }

    #[test]
    fn every_truncation_fails() {
        let bytes = sample().encode();
        for cut in 0..bytes.len() {
            assert!(RecordFile::decode(&bytes[..cut]).is_err(), "cut {cut}");
        }
        let empty = RecordFile { record: Record::new(), ..sample() }.encode();
        assert!(RecordFile::decode(&empty[..empty.len() - 1]).is_err());
        assert!(RecordFile::decode(&empty).is_ok());
    }

    #[test]
    fn malformed_inputs() {
        let mut bytes = sample().encode();
        bytes.push(0);
        assert!(RecordFile::decode(&bytes).is_err());
        let mut bytes = sample().encode();
        bytes[0] = b'X';
        assert!(RecordFile::decode(&bytes).is_err());
        let mut bytes = sample().encode();
        bytes[29] = 7;
        assert!(RecordFile::decode(&bytes).is_err());
        let mut bytes = sample().encode();
        bytes[63] |= 1;
        assert!(RecordFile::decode(&bytes).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(steps in prop::collection::vec(0usize..4, 0..60), r2 in prop::collection::vec(any::<u8>(), 0..20), seed: u64) {
            let mut r1 = Vec::new();
            for s in steps {
                r1.push(false);
                r1.extend(std::iter::repeat_n(true, 2 * s));
            }
            let file = RecordFile {
                delta: 5,
                kappa: Kappa::new(3, 2).unwrap(),
                mode: Mode::Tight,
                n: 40,
                seed,
                record: Record::from_parts(r1, BigUint::from_bytes_be(&r2)).unwrap(),
            };
            prop_assert_eq!(RecordFile::decode(&file.encode()).unwrap(), file);
        }
    }
}
