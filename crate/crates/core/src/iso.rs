//! Isomorphism testing by pruned permutation search.
//!
//! Vertices are matched only to vertices with the same degree and the same
//! sorted multiset of neighbor degrees, and each partial assignment must
//! preserve adjacency to every vertex already placed. The worst case is still
//! `n!` (e.g. vertex-transitive graphs with no refinement), which is fine for
//! the `n <= 10` graphs this is used on.

use crate::graph::{bit, bits, Graph};

/// Returns `Some(sigma)` with `sigma[v]` the image in `h` of vertex `v` of `g`
/// when the graphs are isomorphic. Graphs of different order are simply not
/// isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let inv_g = invariants(g);
    let inv_h = invariants(h);
    let mut sorted_g = inv_g.clone();
    let mut sorted_h = inv_h.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return None;
    }

    // Place the most constrained vertices first: rare invariant, then high degree.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| {
        let class = inv_g.iter().filter(|i| **i == inv_g[v]).count();
        (class, std::cmp::Reverse(g.degree(v)), v)
    });

    let mut search = Search {
        g,
        h,
        inv_g: &inv_g,
        inv_h: &inv_h,
        order: &order,
        map: vec![usize::MAX; g.n()],
        used: 0,
    };
    if search.extend(0) {
        Some(search.map)
    } else {
        None
    }
}

/// Checks that `sigma` is an isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, sigma: &[usize]) -> bool {
    if g.n() != h.n() || sigma.len() != g.n() {
        return false;
    }
    let mut seen = 0u64;
    for &s in sigma {
        if s >= h.n() || seen & bit(s) != 0 {
            return false;
        }
        seen |= bit(s);
    }
    g.relabel(sigma) == *h
}

type Invariant = (u64, Vec<u64>);

fn invariants(g: &Graph) -> Vec<Invariant> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<u64> = bits(g.row(v)).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    inv_g: &'a [Invariant],
    inv_h: &'a [Invariant],
    order: &'a [usize],
    map: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // Images of already-placed neighbors of v.
        let mut want = 0u64;
        for &u in &self.order[..depth] {
            if self.g.has_edge(u, v) {
                want |= bit(self.map[u]);
            }
        }
        for w in 0..self.h.n() {
            if self.used & bit(w) != 0 || self.inv_h[w] != self.inv_g[v] {
                continue;
            }
            if self.h.row(w) & self.used != want {
                continue;
            }
            self.map[v] = w;
            self.used |= bit(w);
            if self.extend(depth + 1) {
                return true;
            }
            self.used &= !bit(w);
            self.map[v] = usize::MAX;
        }
        false
    }
}
