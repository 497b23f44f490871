//! Exact spectra `F_n = {f(G)}` by exhaustive enumeration, the isolated-vertex
//! recursion, restricted spectra for a fixed edge count, and the verifiers
//! that check the structural claims against them.

mod verify;
mod walk;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits};
use crate::theory::{choose2, choose3, step_two, IntervalTable};

pub use verify::{
    verify_structure, verify_thm1_structure, verify_thm2_family, verify_thm3, GapCheck,
    StructureReport, Thm1Report, Thm2Report, Thm3Report, Thm3Row, THM2_DEFAULT_V1_STEPS,
};
pub use walk::{colex_pairs, GrayWalk};

pub(crate) use walk::{ordered_map, partitioned_walk};

/// Largest order handled by exhaustive enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 8;
/// Orders at or above this need `allow_large`.
pub const LARGE_ENUMERATION_ORDER: usize = 8;
/// Largest `t` accepted by [`restricted_spectrum`].
pub const MAX_RESTRICTED_EDGES: u64 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Worker threads; `0` and `1` both run serially.
    pub threads: usize,
    /// Permit the `2^28`-state walk at `n = 8`.
    pub allow_large: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            threads: 1,
            allow_large: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Recursion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeSlice {
    pub min: u64,
    pub max: u64,
    pub values: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumResult {
    pub n: usize,
    pub method: Method,
    #[serde(rename = "F")]
    pub values: Vec<u64>,
    /// Attainable `(f, e)` pairs; only produced by brute enumeration.
    #[serde(rename = "P", skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<(u64, u64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_e: Option<BTreeMap<u64, EdgeSlice>>,
}

impl SpectrumResult {
    pub fn contains(&self, f: u64) -> bool {
        self.values.binary_search(&f).is_ok()
    }

    pub fn pair_set(&self) -> Option<BTreeSet<(u64, u64)>> {
        self.pairs.as_ref().map(|p| p.iter().copied().collect())
    }

    /// `f` column, then `e,min,max` rows when available.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("f\n");
        for f in &self.values {
            let _ = writeln!(out, "{f}");
        }
        if let Some(per_e) = &self.per_e {
            out.push_str("\ne,min,max,values\n");
            for (e, slice) in per_e {
                let values: Vec<String> = slice.values.iter().map(u64::to_string).collect();
                let _ = writeln!(out, "{e},{},{},{}", slice.min, slice.max, values.join(";"));
            }
        }
        out
    }
}

fn check_enumeration_order(n: usize, opts: &EnumerationOptions) -> Result<()> {
    if !(3..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::Capability(format!(
            "exhaustive enumeration supports 3 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    if n >= LARGE_ENUMERATION_ORDER && !opts.allow_large {
        return Err(Error::Capability(format!(
            "n = {n} walks 2^{} graphs; pass allow_large to run it",
            choose2(n as u64)
        )));
    }
    Ok(())
}

/// Per-`e` bitmask of attainable `f`. Valid while `C(n,3) < 64`.
pub(crate) fn edge_masks(n: usize, threads: usize) -> Result<Vec<u64>> {
    debug_assert!(choose3(n as u64) < 64);
    let slots = choose2(n as u64) as usize + 1;
    let parts = partitioned_walk(
        n,
        threads,
        || vec![0u64; slots],
        |acc, _, f, e| acc[e as usize] |= bit(f as usize),
    )?;
    let mut merged = vec![0u64; slots];
    for part in parts {
        for (m, p) in merged.iter_mut().zip(part) {
            *m |= p;
        }
    }
    Ok(merged)
}

fn result_from_masks(n: usize, masks: &[u64]) -> SpectrumResult {
    let mut values = 0u64;
    let mut pairs = Vec::new();
    let mut per_e = BTreeMap::new();
    for (e, &mask) in masks.iter().enumerate() {
        values |= mask;
        if mask == 0 {
            continue;
        }
        let fs: Vec<u64> = bits(mask).map(|f| f as u64).collect();
        pairs.extend(fs.iter().map(|&f| (f, e as u64)));
        per_e.insert(
            e as u64,
            EdgeSlice {
                min: fs[0],
                max: *fs.last().expect("nonempty"),
                values: fs,
            },
        );
    }
    pairs.sort_unstable();
    SpectrumResult {
        n,
        method: Method::Brute,
        values: bits(values).map(|f| f as u64).collect(),
        pairs: Some(pairs),
        per_e: Some(per_e),
    }
}

/// `F_n`, the `(f, e)` pairs and per-edge-count slices by walking all
/// `2^C(n,2)` labeled graphs.
pub fn enumerate_full(n: usize, opts: &EnumerationOptions) -> Result<SpectrumResult> {
    check_enumeration_order(n, opts)?;
    let masks = edge_masks(n, opts.threads)?;
    Ok(result_from_masks(n, &masks))
}

/// Attainable `(f, e)` pairs on `n` vertices, `1 <= n <= 8`.
pub fn pair_set(n: usize, opts: &EnumerationOptions) -> Result<BTreeSet<(u64, u64)>> {
    match n {
        1 => Ok(BTreeSet::from([(0, 0)])),
        2 => Ok(BTreeSet::from([(0, 0), (0, 1)])),
        _ => Ok(enumerate_full(n, opts)?.pair_set().expect("brute result has pairs")),
    }
}

/// `{f' + e' : (f', e') ∈ P_{n−1}}`.
///
/// Switching a graph so one vertex is isolated keeps `f`, and a graph with an
/// isolated vertex `v` has `f(G) = f(G − v) + e(G − v)`, so this is `F_n`.
pub fn spectrum_by_recursion(prev_pairs: &BTreeSet<(u64, u64)>) -> BTreeSet<u64> {
    prev_pairs.iter().map(|&(f, e)| f + e).collect()
}

/// `F_n` through [`spectrum_by_recursion`] on an exhaustive `P_{n−1}`.
///
/// Only `n − 1` is enumerated, so `n = 8` runs without `allow_large`.
pub fn spectrum_recursive(n: usize, opts: &EnumerationOptions) -> Result<SpectrumResult> {
    if !(3..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::Capability(format!(
            "recursive spectrum supports 3 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let prev = pair_set(n - 1, opts)?;
    Ok(SpectrumResult {
        n,
        method: Method::Recursion,
        values: spectrum_by_recursion(&prev).into_iter().collect(),
        pairs: None,
        per_e: None,
    })
}

/// `{f(G) : e(G) = t}` on `n` vertices and its relation to `a_t, a_t + 2, ..., b_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedSpectrum {
    pub n: u64,
    pub t: u64,
    pub values: Vec<u64>,
    /// `a_t, a_t + 2, ..., b_t`, empty when `b_t` is undefined (`2t > n`).
    pub superset: Vec<u64>,
    /// `superset − values`.
    pub missing: Vec<u64>,
    /// `values − superset`; always empty for `t <= t_max`.
    pub outside: Vec<u64>,
    pub within_t_max: bool,
}

/// Attainable `4p + 2q` over graphs with `t` edges on `m` vertices, where `p`
/// counts triangles and `q` pairs of disjoint edges.
pub fn edge_structure_values(m: usize, t: u64) -> BTreeSet<u64> {
    let pairs = colex_pairs(m);
    let mut out = BTreeSet::new();
    let mut rows = vec![0u64; m];
    let mut deg = vec![0u64; m];
    structure_dfs(&pairs, 0, t, 0, 0, &mut rows, &mut deg, &mut out);
    let total = choose2(t);
    out.into_iter()
        .map(|(p, adjacent)| 4 * p + 2 * (total - adjacent))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn structure_dfs(
    pairs: &[(usize, usize)],
    from: usize,
    left: u64,
    p: u64,
    adjacent: u64,
    rows: &mut [u64],
    deg: &mut [u64],
    out: &mut BTreeSet<(u64, u64)>,
) {
    if left == 0 {
        out.insert((p, adjacent));
        return;
    }
    if pairs.len() - from < left as usize {
        return;
    }
    for idx in from..pairs.len() {
        if pairs.len() - idx < left as usize {
            break;
        }
        let (u, v) = pairs[idx];
        let dp = (rows[u] & rows[v]).count_ones() as u64;
        let da = deg[u] + deg[v];
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        deg[u] += 1;
        deg[v] += 1;
        structure_dfs(pairs, idx + 1, left - 1, p + dp, adjacent + da, rows, deg, out);
        rows[u] &= !bit(v);
        rows[v] &= !bit(u);
        deg[u] -= 1;
        deg[v] -= 1;
    }
}

fn restricted_from_structure(table: &IntervalTable, t: u64, structure: &BTreeSet<u64>) -> RestrictedSpectrum {
    let n = table.n;
    // t(n − t − 1) goes negative for t >= n; the sum with 4p + 2q never does
    let base = t as i64 * (n as i64 - t as i64 - 1);
    let values: Vec<u64> = structure.iter().map(|&s| (base + s as i64) as u64).collect();
    let superset = match table.b(t) {
        Ok(b) => step_two(base as u64, b),
        Err(_) => Vec::new(),
    };
    let missing = superset
        .iter()
        .copied()
        .filter(|v| values.binary_search(v).is_err())
        .collect();
    let outside = values
        .iter()
        .copied()
        .filter(|v| superset.binary_search(v).is_err())
        .collect();
    RestrictedSpectrum {
        n,
        t,
        values,
        superset,
        missing,
        outside,
        within_t_max: t <= table.t_max,
    }
}

fn check_restricted(n: u64, t: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::out_of_range("n", n, 3, u64::MAX));
    }
    if t > choose2(n) {
        return Err(Error::out_of_range("t", t, 0, choose2(n)));
    }
    if t > MAX_RESTRICTED_EDGES {
        return Err(Error::Capability(format!(
            "restricted spectra enumerate t-edge graphs on 2t vertices; t = {t} exceeds {MAX_RESTRICTED_EDGES}"
        )));
    }
    Ok(())
}

/// `{f(G) : e(G) = t}` via `f = t(n − t − 1) + 4p + 2q`, enumerating `t`-edge
/// graphs on `min(n, 2t)` vertices.
pub fn restricted_spectrum(n: u64, t: u64) -> Result<RestrictedSpectrum> {
    check_restricted(n, t)?;
    let table = IntervalTable::new(n)?;
    let m = n.min(2 * t) as usize;
    Ok(restricted_from_structure(&table, t, &edge_structure_values(m, t)))
}

/// [`restricted_spectrum`] for each `n` in `orders`, sharing the structure
/// enumeration across orders with `n >= 2t`.
pub fn restricted_spectra(orders: impl IntoIterator<Item = u64>, t: u64) -> Result<Vec<RestrictedSpectrum>> {
    let mut wide: Option<BTreeSet<u64>> = None;
    let mut out = Vec::new();
    for n in orders {
        check_restricted(n, t)?;
        let table = IntervalTable::new(n)?;
        let spectrum = if n >= 2 * t {
            let structure = wide.get_or_insert_with(|| edge_structure_values(2 * t as usize, t));
            restricted_from_structure(&table, t, structure)
        } else {
            restricted_spectrum(n, t)?
        };
        out.push(spectrum);
    }
    Ok(out)
}
