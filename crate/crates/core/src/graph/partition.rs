//! Ordered vertex partitions and equitable refinement.
//!
//! Refinement is equivariant: for every permutation `φ`,
//! `refine(φ·g, φ·π) = φ·refine(g, π)` cell by cell. Both the canonical
//! labelling search and the automorphism search rely on this.

use super::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Partition {
    cells: Vec<u64>,
}

impl Partition {
    pub fn unit(n: usize) -> Self {
        let cells = if n == 0 { Vec::new() } else { vec![VertexSet::full(n).0] };
        Partition { cells }
    }

    pub fn cells(&self) -> &[u64] {
        &self.cells
    }

    #[cfg(test)]
    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.count_ones() == 1)
    }

    pub fn first_nonsingleton(&self) -> Option<usize> {
        self.cells.iter().position(|c| c.count_ones() > 1)
    }

    /// Split `v` off its cell, placing the singleton first.
    pub fn individualize(&self, v: usize) -> Partition {
        let bit = 1u64 << v;
        let idx = self
            .cells
            .iter()
            .position(|&c| c & bit != 0)
            .expect("vertex lies in some cell");
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..idx]);
        cells.push(bit);
        if self.cells[idx] != bit {
            cells.push(self.cells[idx] & !bit);
        }
        cells.extend_from_slice(&self.cells[idx + 1..]);
        Partition { cells }
    }

    /// Vertices in cell order; for a discrete partition this is the labelling
    /// `position -> vertex`.
    pub fn flatten(&self) -> Vec<usize> {
        self.cells.iter().flat_map(|&c| VertexSet(c).iter()).collect()
    }

    /// Refine to the coarsest equitable partition below `self`.
    pub fn refine(mut self, g: &Graph) -> Partition {
        let mut sig: Vec<(Vec<u32>, usize)> = Vec::new();
        loop {
            let snapshot = self.cells.clone();
            let mut next = Vec::with_capacity(snapshot.len());
            for &cell in &snapshot {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                sig.clear();
                for v in VertexSet(cell) {
                    let row = g.row(v);
                    let counts = snapshot.iter().map(|&c| (row & c).count_ones()).collect();
                    sig.push((counts, v));
                }
                sig.sort();
                let mut current = 0u64;
                for i in 0..sig.len() {
                    if i > 0 && sig[i].0 != sig[i - 1].0 {
                        next.push(current);
                        current = 0;
                    }
                    current |= 1u64 << sig[i].1;
                }
                next.push(current);
            }
            let done = next.len() == snapshot.len();
            self.cells = next;
            if done {
                return self;
            }
        }
    }

    /// Cell sizes plus the quotient matrix of an equitable partition; equal
    /// for partitions related by an automorphism.
    pub fn matches(&self, other: &Partition, g: &Graph) -> bool {
        if self.cells.len() != other.cells.len() {
            return false;
        }
        self.cells.iter().zip(&other.cells).all(|(&a, &b)| {
            if a.count_ones() != b.count_ones() {
                return false;
            }
            let (ra, rb) = (g.row(a.trailing_zeros() as usize), g.row(b.trailing_zeros() as usize));
            self.cells
                .iter()
                .zip(&other.cells)
                .all(|(&ca, &cb)| (ra & ca).count_ones() == (rb & cb).count_ones())
        })
    }
}
