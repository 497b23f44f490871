//! Vertex flipping (switching) and distance to the complete bipartite family.
//!
//! Flipping a vertex toggles every pair through it; it never changes which
//! triples are frustrated. Flipping every vertex of a set `X` toggles exactly
//! the pairs with one endpoint in `X`, so the edges of the result are the
//! *odd pairs* of the bipartition `X ∪ X^c`: edges inside a part plus
//! nonedges across. `t_G` is the fewest odd pairs over all bipartitions.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_mask, Graph};
use crate::iso::{are_isomorphic, is_isomorphism};

/// Largest order for which [`t_exact`] walks all `2^(n−1)` bipartitions.
pub const MAX_T_EXACT_ORDER: usize = 28;
/// Largest order accepted by [`switching_equivalent`].
pub const MAX_EQUIVALENCE_ORDER: usize = 12;

/// One side `X` of a vertex bipartition, normalized so vertex 0 is on the
/// other side (`X` and `X^c` describe the same bipartition).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Bipartition {
    n: usize,
    mask: u64,
}

impl Bipartition {
    pub fn new(n: usize, mask: u64) -> Self {
        let full = low_mask(n);
        let mask = mask & full;
        let mask = if mask & 1 != 0 { !mask & full } else { mask };
        Bipartition { n, mask }
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            mask |= bit(v);
        }
        Ok(Bipartition::new(n, mask))
    }

    pub fn empty(n: usize) -> Self {
        Bipartition { n, mask: 0 }
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Vec<usize> {
        bits(self.mask).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

/// Lexicographic order on the sorted vertex lists.
impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self.mask, other.mask)
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Certificate that `switch_subset(g, flip)` relabeled by `sigma` equals `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwitchWitness {
    pub flip: Bipartition,
    pub sigma: Vec<usize>,
}

impl SwitchWitness {
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        self.flip.n == g.n() && is_isomorphism(&switch_subset(g, &self.flip), h, &self.sigma)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TExact {
    pub t: u64,
    pub argmin: Bipartition,
}

pub fn flip_vertex(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    Ok(switch_mask(g, bit(v)))
}

/// Flips every vertex of `x`: a pair is toggled iff exactly one endpoint is in `x`.
pub fn switch_subset(g: &Graph, x: &Bipartition) -> Graph {
    switch_mask(g, x.mask)
}

pub(crate) fn switch_mask(g: &Graph, mask: u64) -> Graph {
    let n = g.n();
    let full = low_mask(n);
    let mask = mask & full;
    let rows: Vec<u64> = (0..n)
        .map(|u| {
            let across = if mask & bit(u) != 0 { !mask & full } else { mask };
            g.row(u) ^ across
        })
        .collect();
    Graph::from_rows_unchecked(n, &rows)
}

/// Edges inside `X`, edges inside `X^c`, and nonedges across.
pub fn odd_pair_count(g: &Graph, x: &Bipartition) -> u64 {
    odd_pairs_rows(g.rows(), g.n(), x.mask)
}

pub(crate) fn odd_pairs_rows(rows: &[u64], n: usize, mask: u64) -> u64 {
    let full = low_mask(n);
    let inside_twice: u64 = (0..n)
        .map(|u| {
            let side = if mask & bit(u) != 0 { mask } else { !mask & full };
            (rows[u] & side).count_ones() as u64
        })
        .sum();
    let across_nonedges: u64 = bits(mask)
        .map(|u| (!rows[u] & !mask & full).count_ones() as u64)
        .sum();
    inside_twice / 2 + across_nonedges
}

/// Exact `t_G`, with the lexicographically smallest minimizing `X`.
///
/// Walks the `2^(n−1)` normalized bipartitions in Gray-code order. Moving one
/// vertex `v` across the cut flips the odd status of all `n − 1` pairs at `v`,
/// so the count changes by `(n − 1) − 2·odd(v)` where `odd(v)` is the number
/// of odd pairs at `v` before the move.
pub fn t_exact(g: &Graph) -> Result<TExact> {
    let n = g.n();
    if n > MAX_T_EXACT_ORDER {
        return Err(Error::Capability(format!(
            "t_exact enumerates 2^(n-1) bipartitions; n = {n} exceeds {MAX_T_EXACT_ORDER}"
        )));
    }
    let (t, mask) = t_exact_rows(g.rows(), n);
    Ok(TExact {
        t,
        argmin: Bipartition::new(n, mask),
    })
}

pub(crate) fn t_exact_rows(rows: &[u64], n: usize) -> (u64, u64) {
    let full = low_mask(n);
    let mut mask = 0u64;
    let mut count = edge_total(rows);
    let mut best = count;
    let mut best_mask = 0u64;
    let movable = n.saturating_sub(1);
    for step in 1u64..(1u64 << movable) {
        let v = step.trailing_zeros() as usize + 1;
        let same = if mask & bit(v) != 0 { mask } else { !mask & full };
        let other = !same & full;
        let odd_v = (rows[v] & same & !bit(v)).count_ones() as u64
            + (!rows[v] & other).count_ones() as u64;
        count = count + (n as u64 - 1) - 2 * odd_v;
        mask ^= bit(v);
        if count < best || (count == best && lex_less(mask, best_mask)) {
            best = count;
            best_mask = mask;
        }
    }
    (best, best_mask)
}

#[inline]
fn edge_total(rows: &[u64]) -> u64 {
    rows.iter().map(|r| r.count_ones() as u64).sum::<u64>() / 2
}

/// Lexicographic comparison of the sorted member lists of two masks.
fn lex_cmp(a: u64, b: u64) -> Ordering {
    bits(a).cmp(bits(b))
}

#[inline]
fn lex_less(a: u64, b: u64) -> bool {
    lex_cmp(a, b) == Ordering::Less
}

/// Switches by the neighborhood of `v`, leaving `v` isolated.
pub fn isolate_normal_form(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    Ok(switch_mask(g, g.row(v)))
}

/// Searches for `X` and `sigma` with `switch_subset(g, X) ≅ h` via `sigma`.
///
/// Subsets are tried by increasing size, then lexicographically, so the
/// returned witness uses the fewest vertex flips. Returns `Ok(None)` when the
/// graphs are not switching equivalent and an error when their orders differ.
pub fn switching_equivalent(g: &Graph, h: &Graph) -> Result<Option<SwitchWitness>> {
    if g.n() != h.n() {
        return Err(Error::out_of_range(
            "order of second graph",
            h.n() as u64,
            g.n() as u64,
            g.n() as u64,
        ));
    }
    let n = g.n();
    if n > MAX_EQUIVALENCE_ORDER {
        return Err(Error::Capability(format!(
            "switching equivalence search is limited to n <= {MAX_EQUIVALENCE_ORDER}, got {n}"
        )));
    }
    let target_edges = h.edge_count();
    for x in subsets_by_size(n) {
        if odd_pairs_rows(g.rows(), n, x) != target_edges {
            continue;
        }
        let switched = switch_mask(g, x);
        if let Some(sigma) = are_isomorphic(&switched, h) {
            let witness = SwitchWitness {
                flip: Bipartition::new(n, x),
                sigma,
            };
            debug_assert!(witness.verify(g, h));
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// Masks over vertices `1..n`, by popcount then lexicographic member order.
fn subsets_by_size(n: usize) -> Vec<u64> {
    let movable = n.saturating_sub(1);
    let mut all: Vec<u64> = (0u64..(1u64 << movable)).map(|m| m << 1).collect();
    all.sort_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then_with(|| lex_cmp(a, b)));
    all
}
