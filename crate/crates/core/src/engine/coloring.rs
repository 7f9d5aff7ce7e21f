use std::collections::BTreeSet;

use crate::graph::Vertex;

pub type Color = u32;

/// Assignment of optional colors to vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
    uncolored: BTreeSet<Vertex>,
}

impl PartialColoring {
    pub fn new(n: usize) -> Self {
        Self { colors: vec![None; n], uncolored: (1..=n).collect() }
    }

    /// `colors[i]` is the color of vertex `i + 1`.
    pub fn from_colors(colors: Vec<Option<Color>>) -> Self {
        let uncolored = colors.iter().enumerate().filter(|(_, c)| c.is_none()).map(|(i, _)| i + 1).collect();
        Self { colors, uncolored }
    }

    pub fn from_assignments(n: usize, assignments: &[(Vertex, Color)]) -> Self {
        let mut c = Self::new(n);
        for &(v, x) in assignments {
            c.set(v, x);
        }
        c
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.colors[v - 1]
    }

    pub fn is_colored(&self, v: Vertex) -> bool {
        self.colors[v - 1].is_some()
    }

    pub fn set(&mut self, v: Vertex, color: Color) {
        self.colors[v - 1] = Some(color);
        self.uncolored.remove(&v);
    }

    pub fn clear(&mut self, v: Vertex) {
        self.colors[v - 1] = None;
        self.uncolored.insert(v);
    }

    pub fn smallest_uncolored(&self) -> Option<Vertex> {
        self.uncolored.first().copied()
    }

    pub fn uncolored(&self) -> &BTreeSet<Vertex> {
        &self.uncolored
    }

    pub fn colored_count(&self) -> usize {
        self.n() - self.uncolored.len()
    }

    pub fn is_complete(&self) -> bool {
        self.uncolored.is_empty()
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    /// Colors of a complete coloring, or `None` if some vertex is uncolored.
    pub fn to_complete(&self) -> Option<Vec<Color>> {
        self.colors.iter().copied().collect()
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bookkeeping() {
        let mut c = PartialColoring::new(4);
        assert_eq!(c.smallest_uncolored(), Some(1));
        c.set(1, 3);
        c.set(2, 3);
        assert_eq!(c.smallest_uncolored(), Some(3));
        assert_eq!((c.colored_count(), c.colors_used()), (2, 1));
        c.clear(1);
        assert_eq!(c.smallest_uncolored(), Some(1));
        assert_eq!(c, PartialColoring::from_colors(vec![None, Some(3), None, None]));
        assert!(c.to_complete().is_none());
        let full = PartialColoring::from_assignments(2, &[(1, 1), (2, 2)]);
        assert!(full.is_complete());
        assert_eq!(full.to_complete(), Some(vec![1, 2]));
    }
}
