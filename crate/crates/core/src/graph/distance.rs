use std::collections::VecDeque;

use super::Graph;

/// Marker for vertex pairs in different components.
pub const UNREACHABLE: u8 = u8::MAX;

/// All-pairs unweighted shortest-path distances, stored row-major in a flat
/// `n * n` table. Orders are capped at 64, so every finite distance fits a
/// byte and `u8::MAX` is free to mean "no path".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
}

impl DistanceMatrix {
    /// One BFS per source.
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut d = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for w in g.neighbors(u) {
                    if row[w] == UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Raw entry; [`UNREACHABLE`] across components.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u8 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.raw(u, v) {
            UNREACHABLE => None,
            x => Some(x as u32),
        }
    }

    #[inline]
    pub fn reachable(&self, u: usize, v: usize) -> bool {
        self.raw(u, v) != UNREACHABLE
    }

    #[inline]
    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.raw(u, v) == 1
    }

    /// Largest distance, or `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0u32;
        for &x in &self.d {
            if x == UNREACHABLE {
                return None;
            }
            best = best.max(x as u32);
        }
        Some(best)
    }

    pub fn row(&self, u: usize) -> &[u8] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}
