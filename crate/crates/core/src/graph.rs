//! Labeled simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` neighborhood row, so intersections, symmetric
//! differences and degrees are single word operations.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::theory::choose2;

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of `mask`, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// Edge count, degrees, triangle count `p` and independent-edge-pair count `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub n: usize,
    pub e: u64,
    pub degrees: Vec<u64>,
    pub p: u64,
    pub q: u64,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = low_mask(n);
        Ok(Graph {
            n,
            rows: (0..n).map(|v| full & !bit(v)).collect(),
        })
    }

    /// Builds a graph from a list of vertex pairs. Repeated pairs are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop { v: u });
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighborhood rows, validating symmetry and the
    /// zero diagonal.
    pub fn from_rows(n: usize, rows: &[u64]) -> Result<Self> {
        check_order(n)?;
        if rows.len() != n {
            return Err(Error::out_of_range("row count", rows.len() as u64, n as u64, n as u64));
        }
        let full = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop { v });
            }
            if row & !full != 0 {
                let w = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { v: w, n });
            }
            for w in bits(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(Error::EdgeList(format!("rows not symmetric at ({v},{w})")));
                }
            }
        }
        Ok(Graph {
            n,
            rows: rows.to_vec(),
        })
    }

    /// Rows are trusted; used on hot paths that only ever produce symmetric rows.
    pub(crate) fn from_rows_unchecked(n: usize, rows: &[u64]) -> Self {
        debug_assert_eq!(rows.len(), n);
        Graph {
            n,
            rows: rows.to_vec(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    /// Bit mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u64 {
        self.rows[v].count_ones() as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.count_ones() as u64).collect()
    }

    pub fn edge_count(&self) -> u64 {
        edge_count_rows(&self.rows)
    }

    /// Edges as `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.rows[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    pub(crate) fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { v });
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        self.rows[u] ^= bit(v);
        self.rows[v] ^= bit(u);
    }

    /// Toggles the edge/nonedge status of the pair `uv`.
    pub fn flip_pair(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.toggle(u, v);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        Graph {
            n: self.n,
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(v, &r)| !r & full & !bit(v))
                .collect(),
        }
    }

    /// Places `other` after `self`, with no edges between the two parts.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow { n });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// Returns the graph in which vertex `v` is renamed `perm[v]`.
    ///
    /// # Panics
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen & bit(p) == 0, "not a permutation");
            seen |= bit(p);
        }
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.rows[u]) {
                rows[perm[u]] |= bit(perm[v]);
            }
        }
        Graph { n: self.n, rows }
    }

    /// Number of edges inside the vertex set `mask`.
    pub fn induced_edge_count(&self, mask: u64) -> u64 {
        let inside: u64 = bits(mask & self.vertex_mask())
            .map(|v| (self.rows[v] & mask).count_ones() as u64)
            .sum();
        inside / 2
    }

    pub fn structure_profile(&self) -> StructureProfile {
        let degrees = self.degrees();
        let e = degrees.iter().sum::<u64>() / 2;
        let p = triangle_count_rows(&self.rows);
        let dependent: u64 = degrees.iter().map(|&d| choose2(d)).sum();
        StructureProfile {
            n: self.n,
            e,
            degrees,
            p,
            q: choose2(e) - dependent,
        }
    }

    /// Renders the `n; u-v, u-v, ...` edge-list text form.
    pub fn to_edge_list(&self) -> String {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}; {}", self.n, edges.join(", "))
    }

    /// Parses the `n; u-v, u-v, ...` edge-list text form.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let (head, tail) = text
            .split_once(';')
            .ok_or_else(|| Error::EdgeList("expected `n; u-v, ...`".into()))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::EdgeList(format!("bad vertex count {:?}", head.trim())))?;
        let mut edges = Vec::new();
        for item in tail.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::EdgeList(format!("bad edge {item:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::EdgeList(format!("bad vertex {s:?} in {item:?}")))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Accepts either the edge-list form (contains `;`) or graph6.
    fn from_str(s: &str) -> Result<Graph> {
        let s = s.trim();
        if s.contains(';') {
            Graph::parse_edge_list(s)
        } else {
            crate::graph6::decode(s)
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::VertexCount { n })
    }
}

#[inline]
pub(crate) fn edge_count_rows(rows: &[u64]) -> u64 {
    rows.iter().map(|r| r.count_ones() as u64).sum::<u64>() / 2
}

/// Each triangle is seen once from each of its three edges.
pub(crate) fn triangle_count_rows(rows: &[u64]) -> u64 {
    let mut thrice = 0u64;
    for (u, &row) in rows.iter().enumerate() {
        for v in bits(row & !low_mask(u + 1)) {
            thrice += (row & rows[v]).count_ones() as u64;
        }
    }
    thrice / 3
}
