//! Binary-reflected Gray code walks over a set of vertex pairs.
//!
//! Consecutive states differ in one pair, so `f` moves by the flip delta and
//! `e` by one. A full enumeration splits the pairs into a fixed prefix (the
//! last `k` pairs in colex order) and a free suffix; each prefix value starts
//! its own walk from a freshly scanned `f`, so sub-walks are independent and
//! their accumulators merge by union.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::frustration::{f_scan, flip_delta_rows};
use crate::graph::{bit, edge_count_rows, Graph};

/// All pairs `(u, v)` with `u < v < n`, in colex order.
pub fn colex_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// Gray code walk over the subsets of `pairs`, starting at `start`.
///
/// Step `s` toggles `pairs[trailing_zeros(s)]`. After `len() − 1` steps every
/// subset has been visited exactly once.
#[derive(Debug, Clone)]
pub struct GrayWalk {
    n: usize,
    rows: Vec<u64>,
    pairs: Vec<(usize, usize)>,
    step: u64,
    f: u64,
    e: u64,
}

impl GrayWalk {
    pub fn new(start: &Graph, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.len() > 62 {
            return Err(Error::Capability(format!(
                "a walk over {} pairs has more than 2^62 states",
                pairs.len()
            )));
        }
        for &(u, v) in &pairs {
            start.check_pair(u, v)?;
        }
        Ok(GrayWalk {
            n: start.n(),
            rows: start.rows().to_vec(),
            pairs,
            step: 0,
            f: f_scan(start).get(),
            e: start.edge_count(),
        })
    }

    /// Walk over every graph on `n` vertices, starting from the empty graph.
    pub fn all_graphs(n: usize) -> Result<Self> {
        GrayWalk::new(&Graph::empty(n)?, colex_pairs(n))
    }

    /// Number of states, `2^pairs`.
    pub fn len(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the current state.
    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.n, &self.rows)
    }

    /// Moves to the next state; `false` once the walk is exhausted.
    #[inline]
    pub fn advance(&mut self) -> bool {
        let next = self.step + 1;
        if next >= self.len() {
            return false;
        }
        self.step = next;
        let (u, v) = self.pairs[next.trailing_zeros() as usize];
        let delta = flip_delta_rows(&self.rows, self.n, u, v);
        if self.rows[u] & bit(v) != 0 {
            self.e -= 1;
        } else {
            self.e += 1;
        }
        self.f = (self.f as i64 + delta) as u64;
        self.rows[u] ^= bit(v);
        self.rows[v] ^= bit(u);
        true
    }

    /// Calls `visit(rows, f, e)` on the current state and every later one.
    pub fn for_each(mut self, mut visit: impl FnMut(&[u64], u64, u64)) {
        loop {
            visit(&self.rows, self.f, self.e);
            if !self.advance() {
                break;
            }
        }
    }
}

/// Number of pair bits fixed per sub-walk in parallel enumeration.
pub(crate) const PREFIX_BITS: usize = 6;

/// Runs `visit` over every graph on `n` vertices, split into independent
/// sub-walks, and returns the per-sub-walk accumulators in prefix order.
///
/// The result does not depend on the thread count: prefixes are fixed, each
/// accumulator sees the same states in the same order, and `collect` keeps
/// prefix order.
pub(crate) fn partitioned_walk<A, I, V>(n: usize, threads: usize, init: I, visit: V) -> Result<Vec<A>>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &[u64], u64, u64) + Sync,
{
    let pairs = colex_pairs(n);
    let k = PREFIX_BITS.min(pairs.len());
    let (free, fixed) = pairs.split_at(pairs.len() - k);
    let free = free.to_vec();
    let fixed = fixed.to_vec();
    let run_one = |prefix: u64| -> A {
        let mut start = Graph::from_rows_unchecked(n, &vec![0; n]);
        for (i, &(u, v)) in fixed.iter().enumerate() {
            if prefix & bit(i) != 0 {
                start.toggle(u, v);
            }
        }
        debug_assert_eq!(edge_count_rows(start.rows()), prefix.count_ones() as u64);
        let walk = GrayWalk::new(&start, free.clone()).expect("pairs validated");
        let mut acc = init();
        walk.for_each(|rows, f, e| visit(&mut acc, rows, f, e));
        acc
    };
    let prefixes: Vec<u64> = (0..1u64 << k).collect();
    ordered_map(threads, prefixes, run_one)
}

/// `items.map(op)` in input order, on a dedicated pool when `threads > 1`.
pub(crate) fn ordered_map<T, R, F>(threads: usize, items: Vec<T>, op: F) -> Result<Vec<R>>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    if threads <= 1 {
        return Ok(items.into_iter().map(op).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|err| Error::Capability(format!("thread pool: {err}")))?;
    Ok(pool.install(|| items.into_par_iter().map(&op).collect()))
}
