//! Closed-form sequences behind the structure of the frustration spectrum.
//!
//! * `a_t = t(n − t − 1)`: frustrated triangles of a `t`-star, `0 <= t <= n − 1`.
//! * `b_t = t(n − 2)`: frustrated triangles of a `t`-matching, `0 <= t <= n/2`.
//! * `t_max`: last `t` with `b_t < a_{t+1}`, equal to `max{t : t(t+1) < n − 2}`.
//! * `c_x = x(n − x)`: edges of `K_{x,n−x}`; `g(e)` is the distance from `e`
//!   to the nearest `c_x`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

pub const fn choose2(n: u64) -> u64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

pub const fn choose3(n: u64) -> u64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// `a_t` and `b_t` for one `n`, plus `t_max` and the threshold `a_{t_max+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalTable {
    pub n: u64,
    /// `a[t]` for `0 <= t <= n − 1`.
    pub a: Vec<u64>,
    /// `b[t]` for `0 <= t <= n/2`.
    pub b: Vec<u64>,
    pub t_max: u64,
    pub threshold: u64,
}

/// Where a value sits relative to the low intervals `[a_t, b_t]`, `t <= t_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "t")]
pub enum Band {
    /// `a_t <= f <= b_t`.
    Interval(u64),
    /// `b_t < f < a_{t+1}`; such values never occur as `f(G)`.
    Gap(u64),
    /// `f >= a_{t_max+1}`.
    Central,
}

/// Classification of `f` and of its mirror image `C(n,3) − f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: u64,
    pub f: u64,
    pub band: Band,
    /// Band of `C(n,3) − f`. `Interval(t)` here places `f` in
    /// `[C(n,3) − b_t, C(n,3) − a_t]`, the range reached from a disjoint union
    /// of two cliques by `t` pair flips.
    pub complement: Band,
}

/// `max{t : t(t+1) < n − 2}`.
pub fn t_max_by_definition(n: u64) -> u64 {
    let mut t = 0;
    while (t + 1) * (t + 2) + 2 < n {
        t += 1;
    }
    t
}

/// `⌈√(n − 7/4) − 3/2⌉`, evaluated exactly: the least `c >= 0` with
/// `(2c + 3)² >= 4n − 7`.
pub fn t_max_by_ceiling(n: u64) -> u64 {
    let target = 4 * n - 7;
    // float seed, then exact correction in both directions
    let mut c = (((n as f64) - 1.75).sqrt() - 1.5).ceil().max(0.0) as u64;
    while c > 0 && (2 * (c - 1) + 3) * (2 * (c - 1) + 3) >= target {
        c -= 1;
    }
    while (2 * c + 3) * (2 * c + 3) < target {
        c += 1;
    }
    c
}

impl IntervalTable {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::out_of_range("n", n, 3, u64::MAX));
        }
        let by_def = t_max_by_definition(n);
        let by_ceil = t_max_by_ceiling(n);
        assert_eq!(by_def, by_ceil, "t_max formulas disagree at n = {n}");
        let a: Vec<u64> = (0..n).map(|t| t * (n - t - 1)).collect();
        let b: Vec<u64> = (0..=n / 2).map(|t| t * (n - 2)).collect();
        let threshold = a[(by_def + 1) as usize];
        Ok(IntervalTable {
            n,
            a,
            b,
            t_max: by_def,
            threshold,
        })
    }

    pub fn a(&self, t: u64) -> Result<u64> {
        self.a
            .get(t as usize)
            .copied()
            .ok_or_else(|| Error::out_of_range("t for a_t", t, 0, self.n - 1))
    }

    pub fn b(&self, t: u64) -> Result<u64> {
        self.b
            .get(t as usize)
            .copied()
            .ok_or_else(|| Error::out_of_range("t for b_t", t, 0, self.n / 2))
    }

    pub fn binom3(&self) -> u64 {
        choose3(self.n)
    }

    /// Band of a value below or above the threshold; no range check on `f`.
    fn band(&self, f: u64) -> Band {
        if f >= self.threshold {
            return Band::Central;
        }
        for t in 0..=self.t_max as usize {
            if f <= self.b[t] {
                return if f >= self.a[t] {
                    Band::Interval(t as u64)
                } else {
                    Band::Gap(t as u64 - 1)
                };
            }
        }
        // b_{t_max} < f < a_{t_max+1}
        Band::Gap(self.t_max)
    }

    pub fn classify(&self, f: u64) -> Result<Classification> {
        let total = self.binom3();
        if f > total {
            return Err(Error::out_of_range("f", f, 0, total));
        }
        Ok(Classification {
            n: self.n,
            f,
            band: self.band(f),
            complement: self.band(total - f),
        })
    }

    /// The values `a_t, a_t + 2, ..., b_t`; only defined for `t <= t_max`.
    pub fn interval_superset(&self, t: u64) -> Result<Vec<u64>> {
        if t > self.t_max {
            return Err(Error::out_of_range("t", t, 0, self.t_max));
        }
        Ok(step_two(self.a[t as usize], self.b[t as usize]))
    }

    /// CSV with columns `t,a_t,b_t`; `b_t` is blank where undefined.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,a_t,b_t\n");
        for (t, a) in self.a.iter().enumerate() {
            let b = self.b.get(t).map(|b| b.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{t},{a},{b}");
        }
        out
    }
}

pub(crate) fn step_two(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).step_by(2).collect()
}

pub fn interval_table(n: u64) -> Result<IntervalTable> {
    IntervalTable::new(n)
}

pub fn classify_f(n: u64, f: u64) -> Result<Classification> {
    IntervalTable::new(n)?.classify(f)
}

pub fn interval_superset(n: u64, t: u64) -> Result<Vec<u64>> {
    IntervalTable::new(n)?.interval_superset(t)
}

/// `c_x` for `0 <= x <= n/2`, and `g(e)` with its minimizers for every `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteDistance {
    pub n: u64,
    pub c: Vec<u64>,
    /// `g[e]` for `0 <= e <= C(n,2)`.
    pub g: Vec<u64>,
    /// The one or two `x` with `|e − c_x| = g(e)`.
    pub argmins: Vec<Vec<u64>>,
}

impl BipartiteDistance {
    pub fn new(n: u64) -> Self {
        let c: Vec<u64> = (0..=n / 2).map(|x| x * (n - x)).collect();
        let max_e = choose2(n);
        let mut g = Vec::with_capacity(max_e as usize + 1);
        let mut argmins = Vec::with_capacity(max_e as usize + 1);
        for e in 0..=max_e {
            let best = c.iter().map(|&cx| cx.abs_diff(e)).min().unwrap_or(e);
            g.push(best);
            argmins.push(
                c.iter()
                    .enumerate()
                    .filter(|(_, &cx)| cx.abs_diff(e) == best)
                    .map(|(x, _)| x as u64)
                    .collect(),
            );
        }
        BipartiteDistance { n, c, g, argmins }
    }

    pub fn g(&self, e: u64) -> Result<u64> {
        self.g
            .get(e as usize)
            .copied()
            .ok_or_else(|| Error::out_of_range("e", e, 0, choose2(self.n)))
    }

    pub fn argmins(&self, e: u64) -> Result<&[u64]> {
        self.argmins
            .get(e as usize)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::out_of_range("e", e, 0, choose2(self.n)))
    }

    /// CSV with columns `e,g,argmins` (argmins separated by `;`).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("e,g,argmins\n");
        for (e, (g, xs)) in self.g.iter().zip(&self.argmins).enumerate() {
            let xs: Vec<String> = xs.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "{e},{g},{}", xs.join(";"));
        }
        out
    }
}

pub fn bipartite_distance(n: u64) -> BipartiteDistance {
    BipartiteDistance::new(n)
}

/// Largest `e` for which the minimum `f` over `e`-edge graphs equals the bound:
/// `⌊n²/4⌋ + ⌊(n−1)/2⌋ − 1`.
pub fn min_achievable_max_edges(n: u64) -> u64 {
    (n * n / 4 + (n.saturating_sub(1)) / 2).saturating_sub(1)
}

/// Smallest `e` for which the maximum bound is attained:
/// `C(n,2) − ⌊n²/4⌋ − ⌊(n−1)/2⌋ + 1`.
pub fn max_achievable_min_edges(n: u64) -> u64 {
    (choose2(n) + 1).saturating_sub(n * n / 4 + n.saturating_sub(1) / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinBound {
    pub n: u64,
    pub e: u64,
    pub g: u64,
    /// `a_{g(e)}`.
    pub bound: u64,
    pub achievable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MaxBound {
    pub n: u64,
    pub e: u64,
    /// `C(n,3) − a_{g(C(n,2) − e)}`.
    pub bound: u64,
    pub achievable: bool,
    /// `b_e = e(n − 2)` when `e <= n/2`; the `e`-matching attains it.
    pub matching_bound: Option<u64>,
}

fn check_edges(n: u64, e: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::out_of_range("n", n, 3, u64::MAX));
    }
    if e > choose2(n) {
        return Err(Error::out_of_range("e", e, 0, choose2(n)));
    }
    Ok(())
}

/// Lower bound `f(G) >= a_{g(e)}` for graphs with `n` vertices and `e` edges.
pub fn min_f_for_edges(n: u64, e: u64) -> Result<MinBound> {
    check_edges(n, e)?;
    let g = BipartiteDistance::new(n).g(e)?;
    // a_g is negative once g >= n − 1; the bound is then just f >= 0
    let bound = g * n.saturating_sub(g + 1);
    Ok(MinBound {
        n,
        e,
        g,
        bound,
        achievable: e <= min_achievable_max_edges(n),
    })
}

/// Upper bound `f(G) <= C(n,3) − a_{g(C(n,2) − e)}`.
pub fn max_f_for_edges(n: u64, e: u64) -> Result<MaxBound> {
    check_edges(n, e)?;
    let dual = min_f_for_edges(n, choose2(n) - e)?;
    Ok(MaxBound {
        n,
        e,
        bound: choose3(n) - dual.bound,
        achievable: e >= max_achievable_min_edges(n),
        matching_bound: (e <= n / 2).then_some(e * (n - 2)),
    })
}
