use std::fmt;

use serde::{Deserialize, Serialize};

use super::RecordError;
use crate::graph::Vertex;

/// Canonical name `w2 w3 ... w2k` of a cycle `v, w2, ..., w2k` through `v`,
/// oriented so that `w2 < w2k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleId(Vec<Vertex>);

impl CycleId {
    /// Wraps an already canonical identifier without checks.
    pub(crate) fn from_canonical(ws: Vec<Vertex>) -> Self {
        debug_assert!(ws.len() >= 3 && ws.len() % 2 == 1 && ws[0] < ws[ws.len() - 1]);
        Self(ws)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Number of vertices on the cycle, `2k`.
    pub fn cycle_len(&self) -> usize {
        self.0.len() + 1
    }

    pub fn half_len(&self) -> usize {
        self.cycle_len() / 2
    }

    /// `w_i` for `2 <= i <= 2k`.
    pub fn w(&self, i: usize) -> Vertex {
        self.0[i - 2]
    }

    /// The vertices `w4, ..., w2k` that an uncoloring clears.
    pub fn cleared(&self) -> &[Vertex] {
        &self.0[2..]
    }
}

impl fmt::Display for CycleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Identifier of the cycle `v, ws[0], ..., ws[last]`.
pub fn cycle_identifier(v: Vertex, ws: &[Vertex]) -> Result<CycleId, RecordError> {
    let len = ws.len() + 1;
    if len < 4 || len % 2 != 0 {
        return Err(RecordError::InvalidCycle(format!("cycle through {v} has length {len}; expected even and >= 4")));
    }
    let mut seen = ws.to_vec();
    seen.push(v);
    seen.sort_unstable();
    if seen.windows(2).any(|p| p[0] == p[1]) {
        return Err(RecordError::InvalidCycle(format!("cycle through {v} repeats a vertex")));
    }
    let mut ws = ws.to_vec();
    if ws[0] > ws[ws.len() - 1] {
        ws.reverse();
    }
    Ok(CycleId(ws))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation() {
        assert_eq!(cycle_identifier(1, &[2, 3, 4]).unwrap().vertices(), &[2, 3, 4]);
        assert_eq!(cycle_identifier(1, &[4, 5, 2]).unwrap().vertices(), &[2, 5, 4]);
        assert_eq!(cycle_identifier(1, &[2, 3, 4, 5, 6]).unwrap().vertices(), &[2, 3, 4, 5, 6]);
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(cycle_identifier(1, &[2, 3]).is_err());
        assert!(cycle_identifier(1, &[2, 3, 4, 5]).is_err());
        assert!(cycle_identifier(1, &[2, 3, 2]).is_err());
        assert!(cycle_identifier(1, &[2, 1, 4]).is_err());
    }

    #[test]
    fn accessors() {
        let id = cycle_identifier(1, &[2, 3, 4, 5, 6]).unwrap();
        assert_eq!((id.cycle_len(), id.half_len()), (6, 3));
        assert_eq!((id.w(2), id.w(3), id.w(6)), (2, 3, 6));
        assert_eq!(id.cleared(), &[4, 5, 6]);
        assert_eq!(id.to_string(), "2,3,4,5,6");
    }
}
