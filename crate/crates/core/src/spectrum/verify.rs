//! Verifiers that check the structural claims against exhaustive data.
//!
//! Each returns a report; a claim that does not hold shows up in `failures`,
//! never as an `Err`. Errors are reserved for requests outside the supported
//! range.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{edge_masks, enumerate_full, ordered_map, partitioned_walk, EnumerationOptions, Method};
use crate::constructors::{clique_edge, extremal_for_edges, star, thm2_family, Thm2Params};
use crate::error::{Error, Result};
use crate::frustration::{f_scan, flip_pair_delta, parity_of_f, Parity};
use crate::graph::Graph;
use crate::switching::{switching_equivalent, t_exact_rows};
use crate::theory::{
    bipartite_distance, choose2, choose3, max_achievable_min_edges, max_f_for_edges,
    min_achievable_max_edges, min_f_for_edges, step_two, Band, IntervalTable,
};

/// Failure messages kept per report; the total count is always exact.
const FAILURE_SAMPLE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapCheck {
    pub t: u64,
    /// Smallest value strictly above `b_t`.
    pub lo: u64,
    /// Largest value strictly below `a_{t+1}`.
    pub hi: u64,
    pub empty: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeRange {
    pub min: u64,
    pub max: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub method: Method,
    #[serde(rename = "F")]
    pub values: Vec<u64>,
    pub gaps_checked: Vec<GapCheck>,
    pub symmetry: bool,
    pub parity: bool,
    pub min_positive: Option<u64>,
    /// `F ∩ [a_t, b_t] ⊆ {a_t, a_t + 2, ..., b_t}` for every `t <= t_max`.
    pub progression: bool,
    pub per_e: BTreeMap<u64, EdgeRange>,
    pub failures: Vec<String>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Gap emptiness, symmetry, parity, minimum positive value and the step-two
/// progression inside each low interval, all on `enumerate_full(n)`.
pub fn verify_structure(n: usize, opts: &EnumerationOptions) -> Result<StructureReport> {
    let spectrum = enumerate_full(n, opts)?;
    let table = IntervalTable::new(n as u64)?;
    let total = choose3(n as u64);
    let mut failures = Vec::new();

    let mut gaps_checked = Vec::new();
    for t in 0..=table.t_max {
        let lo = table.b[t as usize] + 1;
        let hi = table.a[t as usize + 1] - 1;
        let inside: Vec<u64> = spectrum
            .values
            .iter()
            .copied()
            .filter(|f| (lo..=hi).contains(f))
            .collect();
        if !inside.is_empty() {
            failures.push(format!("gap ({}, {}) after t = {t} contains {inside:?}", lo - 1, hi + 1));
        }
        gaps_checked.push(GapCheck {
            t,
            lo,
            hi,
            empty: inside.is_empty(),
        });
    }

    let asymmetric: Vec<u64> = spectrum
        .values
        .iter()
        .copied()
        .filter(|&f| !spectrum.contains(total - f))
        .collect();
    if !asymmetric.is_empty() {
        failures.push(format!("values without mirror image about C(n,3)/2: {asymmetric:?}"));
    }

    let pairs = spectrum.pairs.as_deref().unwrap_or_default();
    let bad_parity: Vec<(u64, u64)> = pairs
        .iter()
        .copied()
        .filter(|&(f, e)| Parity::of(f) != parity_of_f(n, e))
        .collect();
    if !bad_parity.is_empty() {
        failures.push(format!("(f, e) pairs with the wrong parity: {bad_parity:?}"));
    }

    let min_positive = spectrum.values.iter().copied().find(|&f| f > 0);
    if min_positive != Some(n as u64 - 2) {
        failures.push(format!("smallest positive value is {min_positive:?}, expected {}", n - 2));
    }

    let mut progression = true;
    for t in 0..=table.t_max {
        let allowed = table.interval_superset(t)?;
        let (a, b) = (table.a[t as usize], table.b[t as usize]);
        for &f in spectrum.values.iter().filter(|f| (a..=b).contains(*f)) {
            if allowed.binary_search(&f).is_err() {
                progression = false;
                failures.push(format!("{f} in [a_{t}, b_{t}] breaks the step-two progression"));
            }
        }
    }

    let per_e = spectrum
        .per_e
        .as_ref()
        .map(|m| {
            m.iter()
                .map(|(&e, s)| (e, EdgeRange { min: s.min, max: s.max }))
                .collect()
        })
        .unwrap_or_default();

    Ok(StructureReport {
        n,
        method: spectrum.method,
        values: spectrum.values.clone(),
        gaps_checked,
        symmetry: asymmetric.is_empty(),
        parity: bad_parity.is_empty(),
        min_positive,
        progression,
        per_e,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm1Report {
    pub n: usize,
    pub t_max: u64,
    /// `a_{t_max + 1}`.
    pub threshold: u64,
    pub graphs_checked: u64,
    /// Graphs with `f < a_{t_max + 1}`.
    pub below_threshold: u64,
    /// Graph count per exact `t_G`.
    pub t_histogram: BTreeMap<u64, u64>,
    pub failure_count: u64,
    pub failures: Vec<String>,
}

impl Thm1Report {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Default)]
struct Thm1Acc {
    below: u64,
    graphs: u64,
    hist: BTreeMap<u64, u64>,
    failure_count: u64,
    failures: Vec<String>,
}

impl Thm1Acc {
    fn fail(&mut self, rows: &[u64], msg: String) {
        self.failure_count += 1;
        if self.failures.len() < FAILURE_SAMPLE {
            let g = Graph::from_rows_unchecked(rows.len(), rows);
            self.failures.push(format!("{}: {msg}", g.to_edge_list()));
        }
    }
}

/// Checks on every labeled graph on `n <= 7` vertices, with `t = t_G`:
///
/// * `f < a_{t_max+1}` implies `f` classifies as `Interval(t)`;
/// * for `s <= t_max`, `t = s` exactly when `a_s <= f <= b_s`;
/// * `f < a_{s+1}` implies `t <= s`, and `f > b_{s−1}` implies `t >= s`, for
///   every `s` where the bound is defined.
pub fn verify_thm1_structure(n: usize, opts: &EnumerationOptions) -> Result<Thm1Report> {
    if !(3..=7).contains(&n) {
        return Err(Error::Capability(format!(
            "the characterization check computes t_G for every graph; supports 3 <= n <= 7, got {n}"
        )));
    }
    let table = IntervalTable::new(n as u64)?;
    let parts = partitioned_walk(n, opts.threads, Thm1Acc::default, |acc, rows, f, _| {
        let (t, _) = t_exact_rows(rows, n);
        acc.graphs += 1;
        *acc.hist.entry(t).or_default() += 1;
        if f < table.threshold {
            acc.below += 1;
            let band = table.classify(f).expect("f <= C(n,3)").band;
            if band != Band::Interval(t) {
                acc.fail(rows, format!("f = {f}, t_G = {t}, classified {band:?}"));
            }
        }
        for s in 0..=table.t_max {
            let inside = (table.a[s as usize]..=table.b[s as usize]).contains(&f);
            if inside != (t == s) {
                acc.fail(rows, format!("f = {f}, t_G = {t}, interval membership for t = {s} is {inside}"));
            }
        }
        for s in 0..table.a.len() as u64 - 1 {
            if f < table.a[s as usize + 1] && t > s {
                acc.fail(rows, format!("f = {f} < a_{} but t_G = {t} > {s}", s + 1));
            }
        }
        for s in 1..=table.b.len() as u64 {
            if f > table.b[s as usize - 1] && t < s {
                acc.fail(rows, format!("f = {f} > b_{} but t_G = {t} < {s}", s - 1));
            }
        }
    })?;
    let mut report = Thm1Report {
        n,
        t_max: table.t_max,
        threshold: table.threshold,
        graphs_checked: 0,
        below_threshold: 0,
        t_histogram: BTreeMap::new(),
        failure_count: 0,
        failures: Vec::new(),
    };
    for part in parts {
        report.graphs_checked += part.graphs;
        report.below_threshold += part.below;
        report.failure_count += part.failure_count;
        for (t, c) in part.hist {
            *report.t_histogram.entry(t).or_default() += c;
        }
        let room = FAILURE_SAMPLE - report.failures.len().min(FAILURE_SAMPLE);
        report.failures.extend(part.failures.into_iter().take(room));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm3Row {
    pub e: u64,
    pub g: u64,
    /// `a_{g(e)}`.
    pub bound: u64,
    pub observed_min: u64,
    /// Labeled graphs with `e` edges attaining `observed_min`.
    pub minimizers: u64,
    /// Every minimizer is switching equivalent to the `g(e)`-star.
    pub minimizers_equivalent: bool,
    /// Every graph from `extremal_for_edges` has `f = bound`.
    pub extremal_attains: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm3MaxRow {
    pub e: u64,
    /// `C(n,3) − a_{g(C(n,2) − e)}`.
    pub bound: u64,
    pub observed_max: u64,
    /// Complements of the extremal graphs for `C(n,2) − e` edges attain it.
    pub complement_attains: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm3Report {
    pub n: usize,
    pub min_side: Vec<Thm3Row>,
    pub max_side: Vec<Thm3MaxRow>,
    pub failures: Vec<String>,
}

impl Thm3Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The lower bound `f >= a_{g(e)}` and its extremal graphs, exhaustively for
/// `n <= 7`, plus the mirrored upper bound.
pub fn verify_thm3(n: usize, opts: &EnumerationOptions) -> Result<Thm3Report> {
    if !(3..=7).contains(&n) {
        return Err(Error::Capability(format!(
            "the extremal check tests every minimizer for switching equivalence; supports 3 <= n <= 7, got {n}"
        )));
    }
    let nn = n as u64;
    let masks = edge_masks(n, opts.threads)?;
    let min_of = |e: u64| masks[e as usize].trailing_zeros() as u64;
    let max_of = |e: u64| 63 - masks[e as usize].leading_zeros() as u64;
    let limit = min_achievable_max_edges(nn);
    let dist = bipartite_distance(nn);

    // second pass: every labeled minimizer within the achievable range
    let mins: Vec<u64> = (0..=limit).map(min_of).collect();
    let parts = partitioned_walk(n, opts.threads, Vec::new, |acc: &mut Vec<(u64, Vec<u64>)>, rows, f, e| {
        if e <= limit && f == mins[e as usize] {
            acc.push((e, rows.to_vec()));
        }
    })?;
    let minimizers: Vec<(u64, Vec<u64>)> = parts.into_iter().flatten().collect();
    let stars: Vec<Graph> = (0..=limit)
        .map(|e| star(n, dist.g(e).expect("e <= C(n,2)") as usize))
        .collect::<Result<_>>()?;
    let equivalent = ordered_map(opts.threads, minimizers.clone(), |(e, rows)| {
        let g = Graph::from_rows_unchecked(n, &rows);
        matches!(switching_equivalent(&g, &stars[e as usize]), Ok(Some(_)))
    })?;

    let mut failures = Vec::new();
    let mut min_side = Vec::new();
    for e in 0..=limit {
        let bound = min_f_for_edges(nn, e)?;
        let observed_min = min_of(e);
        let mut count = 0;
        let mut all_equivalent = true;
        for ((me, rows), ok) in minimizers.iter().zip(&equivalent) {
            if *me == e {
                count += 1;
                if !ok {
                    if all_equivalent {
                        let g = Graph::from_rows_unchecked(n, rows);
                        failures.push(format!(
                            "e = {e}: minimizer {} is not switching equivalent to the {}-star",
                            g.to_edge_list(),
                            bound.g
                        ));
                    }
                    all_equivalent = false;
                }
            }
        }
        if observed_min != bound.bound {
            failures.push(format!("e = {e}: minimum f is {observed_min}, bound a_{} = {}", bound.g, bound.bound));
        }
        let extremal_attains = extremal_for_edges(n, e)?
            .iter()
            .all(|g| g.edge_count() == e && f_scan(g).get() == bound.bound);
        if !extremal_attains {
            failures.push(format!("e = {e}: a constructed extremal graph misses f = {}", bound.bound));
        }
        min_side.push(Thm3Row {
            e,
            g: bound.g,
            bound: bound.bound,
            observed_min,
            minimizers: count,
            minimizers_equivalent: all_equivalent,
            extremal_attains,
        });
    }

    let mut max_side = Vec::new();
    for e in max_achievable_min_edges(nn)..=choose2(nn) {
        let bound = max_f_for_edges(nn, e)?;
        let observed_max = max_of(e);
        if observed_max != bound.bound {
            failures.push(format!("e = {e}: maximum f is {observed_max}, bound {}", bound.bound));
        }
        let complement_attains = extremal_for_edges(n, choose2(nn) - e)?
            .iter()
            .map(Graph::complement)
            .all(|g| g.edge_count() == e && f_scan(&g).get() == bound.bound);
        if !complement_attains {
            failures.push(format!("e = {e}: a complemented extremal graph misses f = {}", bound.bound));
        }
        max_side.push(Thm3MaxRow {
            e,
            bound: bound.bound,
            observed_max,
            complement_attains,
        });
    }

    Ok(Thm3Report {
        n,
        min_side,
        max_side,
        failures,
    })
}

/// Default number of `V1` steps examined by [`verify_thm2_family`].
pub const THM2_DEFAULT_V1_STEPS: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm2Report {
    pub n: usize,
    pub params: Option<Thm2Params>,
    pub v1_steps_checked: usize,
    pub star_steps_checked: usize,
    pub path_steps_checked: usize,
    /// States `G_i` whose accumulation run was checked for coverage.
    pub runs_checked: usize,
    /// Consecutive pairs `(G_i, G_{i+1})` checked for tiling.
    pub pairs_tiled: usize,
    pub failures: Vec<String>,
}

impl Thm2Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn family_f(p: &Thm2Params, i: usize, j: usize, k: usize, l: usize) -> Result<u64> {
    Ok(f_scan(&thm2_family(&p.with_state(i, j, k, l)?)?).get())
}

/// Values reached from `G_i` by star and path accumulation.
fn accumulation_run(p: &Thm2Params, i: usize) -> Result<Vec<u64>> {
    let mut run = Vec::new();
    for j in 1..=p.s1 {
        for k in 1..=p.s2 {
            for l in 1..=p.s2 {
                run.push(family_f(p, i, j, k, l)?);
            }
        }
    }
    run.sort_unstable();
    run.dedup();
    Ok(run)
}

/// Step deltas and coverage of the four-part family at order `n`.
///
/// Checks, with `f_i = f(G_i)` for the first `max_v1_steps` clique edges:
///
/// * each `V1` step moves `f` by at most `n − 2`, with the parity of `n`;
/// * star step `j` (state `j − 1` to `j`) in `V2` or `V3` moves `f` by `−2(j − 1)`;
/// * each path step in `V4` moves `f` by `−2`;
/// * the run from `G_i` covers `f_i − 2m` for `0 <= m <= (n − 2)/2` (even `n`)
///   or `0 <= m <= n − 2` (odd `n`);
/// * every value of admissible parity (even for even `n`, any for odd `n`)
///   between `f_i` and `f_{i+1}` is reached by some run. For odd `n` the value
///   of the parity opposite to `f_i` comes from `G_{i+2}`, so runs are taken two
///   states past the checked steps, and nothing above `f(H) − (n − 2)` is
///   claimed once the clique is complete.
pub fn verify_thm2_family(n: usize, max_v1_steps: usize) -> Thm2Report {
    let mut report = Thm2Report {
        n,
        params: None,
        v1_steps_checked: 0,
        star_steps_checked: 0,
        path_steps_checked: 0,
        runs_checked: 0,
        pairs_tiled: 0,
        failures: Vec::new(),
    };
    if let Err(err) = thm2_checks(n, max_v1_steps, &mut report) {
        report.failures.push(err.to_string());
    }
    report
}

fn thm2_checks(n: usize, max_v1_steps: usize, report: &mut Thm2Report) -> Result<()> {
    let p = Thm2Params::for_order(n)?;
    report.params = Some(p);
    let steps = max_v1_steps.min(p.v1_capacity());
    let nn = n as i64;
    let odd = n % 2 == 1;

    let f_at: Vec<u64> = (0..=steps).map(|i| family_f(&p, i, 1, 1, 1)).collect::<Result<_>>()?;
    for i in 0..steps {
        let d = f_at[i + 1] as i64 - f_at[i] as i64;
        let (u, v) = clique_edge(p.r, i);
        let expected = flip_pair_delta(&thm2_family(&p.with_state(i, 1, 1, 1)?)?, u, v)?;
        if d.abs() > nn - 2 || (d - nn).rem_euclid(2) != 0 || d != expected {
            report
                .failures
                .push(format!("V1 step {i} -> {}: delta {d} (flip delta {expected})", i + 1));
        }
        report.v1_steps_checked += 1;
    }

    for &i in &[0, steps] {
        for j in 2..=p.s1 {
            let d = family_f(&p, i, j, 1, 1)? as i64 - family_f(&p, i, j - 1, 1, 1)? as i64;
            if d != -2 * (j as i64 - 1) {
                report.failures.push(format!("V2 star step j = {j} at i = {i}: delta {d}"));
            }
            report.star_steps_checked += 1;
        }
        for k in 2..=p.s2 {
            let d = family_f(&p, i, p.s1, k, 1)? as i64 - family_f(&p, i, p.s1, k - 1, 1)? as i64;
            if d != -2 * (k as i64 - 1) {
                report.failures.push(format!("V3 star step k = {k} at i = {i}: delta {d}"));
            }
            report.star_steps_checked += 1;
        }
        for l in 2..=p.s2 {
            let d = family_f(&p, i, p.s1, p.s2, l)? as i64 - family_f(&p, i, p.s1, p.s2, l - 1)? as i64;
            if d != -2 {
                report.failures.push(format!("V4 path step l = {l} at i = {i}: delta {d}"));
            }
            report.path_steps_checked += 1;
        }
    }

    // Runs of G_0..G_last, where last reaches two states past the checked
    // steps so a value between f_i and f_{i+1} can be claimed by G_{i+2}.
    let last = (steps + 2).min(p.v1_capacity());
    let f_ext: Vec<u64> = (0..=last).map(|i| family_f(&p, i, 1, 1, 1)).collect::<Result<_>>()?;
    let runs: Vec<Vec<u64>> = (0..=last).map(|i| accumulation_run(&p, i)).collect::<Result<_>>()?;
    let depth = if odd { n - 2 } else { (n - 2) / 2 };
    for (i, run) in runs.iter().enumerate() {
        let top = f_ext[i];
        let lacking: Vec<u64> = (0..=depth as u64)
            .filter_map(|m| top.checked_sub(2 * m))
            .filter(|v| run.binary_search(v).is_err())
            .collect();
        if !lacking.is_empty() {
            report.failures.push(format!("run from G_{i} (f = {top}) misses {lacking:?}"));
        }
        report.runs_checked += 1;
    }
    let mut union: Vec<u64> = runs.iter().flatten().copied().collect();
    union.sort_unstable();
    union.dedup();
    // Past the last clique edge nothing sits above f(H); the claim stops at f(H) − (n − 2).
    let ceiling = if last == p.v1_capacity() {
        f_ext[last].saturating_sub(n as u64 - 2)
    } else {
        u64::MAX
    };
    for i in 0..steps {
        let (lo, hi) = (f_ext[i].min(f_ext[i + 1]), f_ext[i].max(f_ext[i + 1]).min(ceiling));
        let admissible: Vec<u64> = if odd { (lo..=hi).collect() } else { step_two(lo, hi) };
        let holes: Vec<u64> = admissible
            .into_iter()
            .filter(|v| union.binary_search(v).is_err())
            .collect();
        if !holes.is_empty() {
            report
                .failures
                .push(format!("values between f(G_{i}) and f(G_{}) not reached: {holes:?}", i + 1));
        }
        report.pairs_tiled += 1;
    }
    Ok(())
}
