//! Named graph families: stars, matchings, complete bipartite graphs, the
//! clique-plus-matching graphs, extremal graphs for a fixed edge count, the
//! four-part family used to fill the central range of the spectrum, and the
//! pair of 6-vertex graphs with equal `f` that are not switching equivalent.

use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::theory::{bipartite_distance, choose2, choose3, min_achievable_max_edges};

/// Vertex `0` joined to `1..=t`.
pub fn star(n: usize, t: usize) -> Result<Graph> {
    if t >= n.max(1) {
        return Err(Error::out_of_range("star size t", t as u64, 0, n.saturating_sub(1) as u64));
    }
    let edges: Vec<_> = (1..=t).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Edges `(0,1), (2,3), ...`, `t` of them.
pub fn matching(n: usize, t: usize) -> Result<Graph> {
    if 2 * t > n {
        return Err(Error::out_of_range("matching size t", t as u64, 0, (n / 2) as u64));
    }
    let edges: Vec<_> = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{x, n−x}` with parts `0..x` and `x..n`.
pub fn complete_bipartite(n: usize, x: usize) -> Result<Graph> {
    if x > n {
        return Err(Error::out_of_range("part size x", x as u64, 0, n as u64));
    }
    let mut edges = Vec::with_capacity(x * (n - x));
    for u in 0..x {
        for v in x..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `K_r` on `0..r`, then `m` matching edges, then isolated vertices.
pub fn clique_plus_matching(n: usize, r: usize, m: usize) -> Result<Graph> {
    if r + 2 * m > n {
        return Err(Error::Construction(format!(
            "K_{r} plus a {m}-matching needs {} vertices, have {n}",
            r + 2 * m
        )));
    }
    let mut edges = Vec::new();
    for u in 0..r {
        for v in u + 1..r {
            edges.push((u, v));
        }
    }
    for i in 0..m {
        edges.push((r + 2 * i, r + 2 * i + 1));
    }
    Graph::from_edges(n, &edges)
}

/// `f` of [`clique_plus_matching`]: `C(r,3) + C(r,2)(n − r) + m(n − 2)`.
pub fn clique_plus_matching_frustration(n: u64, r: u64, m: u64) -> u64 {
    choose3(r) + choose2(r) * (n - r) + m * (n - 2)
}

/// The graphs with `e` edges and the fewest frustrated triangles.
///
/// For each `x` with `|e − c_x| = g(e)`: when `e < c_x`, `K_{x,n−x}` minus a
/// `g(e)`-star centered in the smaller part with leaves in the larger part;
/// when `e > c_x`, `K_{x,n−x}` plus a `g(e)`-star inside the larger part.
pub fn extremal_for_edges(n: usize, e: u64) -> Result<Vec<Graph>> {
    let limit = min_achievable_max_edges(n as u64);
    if n < 3 || e > limit {
        return Err(Error::Construction(format!(
            "extremal graphs are known for e <= floor(n^2/4) + floor((n-1)/2) - 1 = {limit}, got e = {e}"
        )));
    }
    let dist = bipartite_distance(n as u64);
    let g = dist.g(e)? as usize;
    let mut out: Vec<Graph> = Vec::new();
    for &x in dist.argmins(e)? {
        let x = x as usize;
        let cx = (x * (n - x)) as u64;
        let base = complete_bipartite(n, x)?;
        let mut h = base.clone();
        if e < cx {
            // center 0 in the smaller part, leaves x.. in the larger part
            for leaf in x..x + g {
                h.toggle(0, leaf);
            }
        } else if e > cx {
            // star inside the larger part x..n
            for leaf in x + 1..=x + g {
                h.toggle(x, leaf);
            }
        }
        debug_assert_eq!(h.edge_count(), e);
        if !out.contains(&h) {
            out.push(h);
        }
    }
    Ok(out)
}

/// `P_2 ⊔ P_2` and `P_1 ⊔ P_3` (paths counted by edges), both on 6 vertices.
pub fn counterexample_pair() -> (Graph, Graph) {
    let p2 = Graph::from_edges(3, &[(0, 1), (1, 2)]).expect("valid");
    let p1 = Graph::from_edges(2, &[(0, 1)]).expect("valid");
    let p3 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).expect("valid");
    (
        p2.disjoint_union(&p2).expect("6 vertices"),
        p1.disjoint_union(&p3).expect("6 vertices"),
    )
}

/// Parameters of the four-part family.
///
/// Vertices are laid out as `V1 = 0..r`, then `V2` (`2·s1` vertices holding
/// pairs `x_a y_a`), then `V3` (`2·s2`, pairs `x'_a y'_a`), then `V4` (`2·s2`,
/// pairs `z_a w_a`). With `s1 = ⌈√n⌉, s2 = ⌈(4n)^{1/4}⌉` for even `n` and
/// `s1 = ⌈√(2n)⌉, s2 = ⌈(8n)^{1/4}⌉` for odd `n`.
///
/// State coordinates: `i` edges of `K_r` placed in `V1` (lexicographic order),
/// `j` the star-accumulation state of `V2` (`1` = untouched matching, state
/// `j` has edges `x_1 y_1, ..., x_1 y_j`), `k` the same for `V3`, and `l` the
/// path-accumulation state of `V4` (state `l` has `z_1 w_1, w_1 w_2, ...,
/// w_{l−1} w_l`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Thm2Params {
    pub n: usize,
    pub s1: usize,
    pub s2: usize,
    pub r: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

pub const THM2_MIN_ORDER: usize = 24;

/// Least `s` with `s^power >= value`.
fn ceil_root(value: u64, power: u32) -> u64 {
    let mut s = (value as f64).powf(1.0 / power as f64).floor() as u64;
    while s > 0 && (s - 1).pow(power) >= value {
        s -= 1;
    }
    while s.pow(power) < value {
        s += 1;
    }
    s
}

impl Thm2Params {
    /// Base state `i = 0, j = k = l = 1` for order `n`.
    pub fn for_order(n: usize) -> Result<Self> {
        if !(THM2_MIN_ORDER..=crate::graph::MAX_VERTICES).contains(&n) {
            return Err(Error::out_of_range("n", n as u64, THM2_MIN_ORDER as u64, 64));
        }
        let nn = n as u64;
        let (s1, s2) = if n % 2 == 0 {
            (ceil_root(nn, 2), ceil_root(4 * nn, 4))
        } else {
            (ceil_root(2 * nn, 2), ceil_root(8 * nn, 4))
        };
        let (s1, s2) = (s1 as usize, s2 as usize);
        let used = 2 * s1 + 4 * s2;
        if used > n {
            return Err(Error::Construction(format!(
                "four-part family at n = {n}: s1 = {s1}, s2 = {s2} give r = n - 2*s1 - 4*s2 = {}",
                n as i64 - used as i64
            )));
        }
        Ok(Thm2Params {
            n,
            s1,
            s2,
            r: n - used,
            i: 0,
            j: 1,
            k: 1,
            l: 1,
        })
    }

    pub fn with_state(self, i: usize, j: usize, k: usize, l: usize) -> Result<Self> {
        let p = Thm2Params { i, j, k, l, ..self };
        p.validate()?;
        Ok(p)
    }

    /// Number of `V1` steps available, `C(r, 2)`.
    pub fn v1_capacity(&self) -> usize {
        self.r * self.r.saturating_sub(1) / 2
    }

    pub fn parts(&self) -> [Range<usize>; 4] {
        let o2 = self.r;
        let o3 = o2 + 2 * self.s1;
        let o4 = o3 + 2 * self.s2;
        [0..o2, o2..o3, o3..o4, o4..o4 + 2 * self.s2]
    }

    fn validate(&self) -> Result<()> {
        let fresh = Thm2Params::for_order(self.n)?;
        if (fresh.s1, fresh.s2, fresh.r) != (self.s1, self.s2, self.r) {
            return Err(Error::Construction("inconsistent part sizes".into()));
        }
        let check = |what, v: usize, lo: usize, hi: usize| {
            if (lo..=hi).contains(&v) {
                Ok(())
            } else {
                Err(Error::out_of_range(what, v as u64, lo as u64, hi as u64))
            }
        };
        check("i", self.i, 0, self.v1_capacity())?;
        check("j", self.j, 1, self.s1)?;
        check("k", self.k, 1, self.s2)?;
        check("l", self.l, 1, self.s2)?;
        Ok(())
    }

    /// `(s1 + 2·s2)(n − 2)`: `f` of the base state.
    pub fn base_frustration(&self) -> u64 {
        ((self.s1 + 2 * self.s2) * (self.n - 2)) as u64
    }

    /// `f` with all of `K_r` placed and no accumulation steps.
    pub fn full_clique_frustration(&self) -> u64 {
        clique_plus_matching_frustration(self.n as u64, self.r as u64, (self.s1 + 2 * self.s2) as u64)
    }
}

/// The `i`-th edge of `K_r` in lexicographic order.
pub fn clique_edge(r: usize, mut i: usize) -> (usize, usize) {
    for u in 0..r {
        let span = r - u - 1;
        if i < span {
            return (u, u + 1 + i);
        }
        i -= span;
    }
    panic!("edge index out of range for K_{r}");
}

fn star_accumulated(edges: &mut Vec<(usize, usize)>, base: usize, size: usize, state: usize) {
    let x = |a: usize| base + 2 * (a - 1);
    let y = |a: usize| base + 2 * (a - 1) + 1;
    for a in 1..=size {
        if a <= state {
            edges.push((x(1), y(a)));
        } else {
            edges.push((x(a), y(a)));
        }
    }
}

fn path_accumulated(edges: &mut Vec<(usize, usize)>, base: usize, size: usize, state: usize) {
    let z = |a: usize| base + 2 * (a - 1);
    let w = |a: usize| base + 2 * (a - 1) + 1;
    for a in 1..=size {
        if a == 1 {
            edges.push((z(1), w(1)));
        } else if a <= state {
            edges.push((w(a - 1), w(a)));
        } else {
            edges.push((z(a), w(a)));
        }
    }
}

/// Builds the state `(i, j, k, l)` of the four-part family.
pub fn thm2_family(params: &Thm2Params) -> Result<Graph> {
    params.validate()?;
    let [_, v2, v3, v4] = params.parts();
    let mut edges: Vec<(usize, usize)> = (0..params.i).map(|e| clique_edge(params.r, e)).collect();
    star_accumulated(&mut edges, v2.start, params.s1, params.j);
    star_accumulated(&mut edges, v3.start, params.s2, params.k);
    path_accumulated(&mut edges, v4.start, params.s2, params.l);
    Graph::from_edges(params.n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frustration::{f_scan, flip_pair_delta};
    use crate::switching::switching_equivalent;
    use crate::theory::min_f_for_edges;

    #[test]
    fn stars_and_matchings_hit_the_sequences() {
        assert_eq!(f_scan(&star(10, 2).unwrap()).get(), 14);
        assert_eq!(star(7, 0).unwrap(), Graph::empty(7).unwrap());
        assert_eq!(f_scan(&star(5, 1).unwrap()).get(), 3);
        assert_eq!(f_scan(&matching(10, 2).unwrap()).get(), 16);
        for n in 3..=12usize {
            assert_eq!(matching(n, 1).unwrap(), star(n, 1).unwrap());
            for t in 0..n {
                assert_eq!(f_scan(&star(n, t).unwrap()).get(), (t * (n - t - 1)) as u64);
            }
            for t in 0..=n / 2 {
                assert_eq!(f_scan(&matching(n, t).unwrap()).get(), (t * (n - 2)) as u64);
            }
        }
        assert!(star(5, 5).is_err());
        assert!(matching(5, 3).is_err());
    }

    #[test]
    fn complete_bipartite_family() {
        for n in 1..=8usize {
            for x in 0..=n {
                let g = complete_bipartite(n, x).unwrap();
                assert_eq!(f_scan(&g).get(), 0);
                assert_eq!(g.edge_count(), (x * (n - x)) as u64);
            }
            assert_eq!(complete_bipartite(n, 0).unwrap(), Graph::empty(n).unwrap());
        }
        assert!(complete_bipartite(4, 5).is_err());
    }

    #[test]
    fn clique_plus_matching_formula() {
        for n in 3..=10usize {
            assert_eq!(clique_plus_matching(n, n, 0).unwrap(), Graph::complete(n).unwrap());
            for m in 0..=n / 2 {
                assert_eq!(clique_plus_matching(n, 0, m).unwrap(), matching(n, m).unwrap());
            }
            for r in 0..=n {
                for m in 0..=(n - r) / 2 {
                    let g = clique_plus_matching(n, r, m).unwrap();
                    let formula = clique_plus_matching_frustration(n as u64, r as u64, m as u64);
                    assert_eq!(f_scan(&g).get(), formula, "n={n} r={r} m={m}");
                }
            }
        }
        assert!(clique_plus_matching(5, 4, 1).is_err());
    }

    #[test]
    fn extremal_graphs_for_seven_vertices_eight_edges() {
        let graphs = extremal_for_edges(7, 8).unwrap();
        assert_eq!(graphs.len(), 2);
        for g in &graphs {
            assert_eq!(g.edge_count(), 8);
            assert_eq!(f_scan(g).get(), 8);
        }
        // K_{1,6} plus a 2-star inside the 6-side, and K_{2,5} minus a 2-star
        let plus = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3)],
        )
        .unwrap();
        assert!(graphs.contains(&plus));
        let mut minus = complete_bipartite(7, 2).unwrap();
        minus.toggle(0, 2);
        minus.toggle(0, 3);
        assert!(graphs.contains(&minus));
    }

    #[test]
    fn extremal_graphs_small_cases() {
        for n in 3..=9usize {
            for x in 0..=n / 2 {
                let e = (x * (n - x)) as u64;
                if e <= min_achievable_max_edges(n as u64) {
                    let gs = extremal_for_edges(n, e).unwrap();
                    assert!(gs.contains(&complete_bipartite(n, x).unwrap()));
                    assert!(gs.iter().all(|g| f_scan(g).get() == 0));
                }
            }
        }
        assert_eq!(extremal_for_edges(5, 1).unwrap(), vec![star(5, 1).unwrap()]);
        assert!(extremal_for_edges(7, 15).is_err());
    }

    #[test]
    fn extremal_graphs_attain_bound_and_are_switched_stars() {
        for n in 3..=9usize {
            for e in 0..=min_achievable_max_edges(n as u64) {
                let bound = min_f_for_edges(n as u64, e).unwrap();
                let s = star(n, bound.g as usize).unwrap();
                for g in extremal_for_edges(n, e).unwrap() {
                    assert_eq!(g.edge_count(), e);
                    assert_eq!(f_scan(&g).get(), bound.bound, "n={n} e={e}");
                    assert!(switching_equivalent(&g, &s).unwrap().is_some(), "n={n} e={e}");
                }
            }
        }
    }

    #[test]
    fn counterexample_pair_shape() {
        let (g, h) = counterexample_pair();
        assert_eq!((g.n(), h.n()), (6, 6));
        assert_eq!((g.edge_count(), h.edge_count()), (4, 4));
        assert_eq!(f_scan(&g).get(), 12);
        assert_eq!(f_scan(&h).get(), 12);
        assert_eq!(switching_equivalent(&g, &h).unwrap(), None);
    }

    #[test]
    fn thm2_part_sizes() {
        let p = Thm2Params::for_order(36).unwrap();
        assert_eq!((p.s1, p.s2, p.r), (6, 4, 8));
        let p = Thm2Params::for_order(39).unwrap();
        assert_eq!((p.s1, p.s2, p.r), (9, 5, 1));
        // odd n = 37: s1 = 9, s2 = 5 need 38 vertices
        assert!(matches!(Thm2Params::for_order(37), Err(Error::Construction(_))));
        assert!(matches!(Thm2Params::for_order(24), Err(Error::Construction(_))));
        assert!(Thm2Params::for_order(23).is_err());
        for n in THM2_MIN_ORDER..=64 {
            if let Ok(p) = Thm2Params::for_order(n) {
                let sizes: usize = p.parts().iter().map(|r| r.len()).sum();
                assert_eq!(sizes, n);
                assert!(p.s1 * p.s1 >= if n % 2 == 0 { n } else { 2 * n });
                assert!((p.s1 - 1) * (p.s1 - 1) < if n % 2 == 0 { n } else { 2 * n });
            }
        }
    }

    #[test]
    fn ceil_roots() {
        assert_eq!(ceil_root(36, 2), 6);
        assert_eq!(ceil_root(37, 2), 7);
        assert_eq!(ceil_root(144, 4), 4);
        assert_eq!(ceil_root(256, 4), 4);
        assert_eq!(ceil_root(257, 4), 5);
        assert_eq!(ceil_root(1, 4), 1);
    }

    #[test]
    fn clique_edges_lexicographic() {
        let edges: Vec<_> = (0..6).map(|i| clique_edge(4, i)).collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn thm2_endpoints() {
        let p = Thm2Params::for_order(36).unwrap();
        let g = thm2_family(&p).unwrap();
        assert_eq!(f_scan(&g).get(), p.base_frustration());
        assert_eq!(f_scan(&g).get(), (6 + 8) * 34);
        let h = thm2_family(&p.with_state(p.v1_capacity(), 1, 1, 1).unwrap()).unwrap();
        assert_eq!(f_scan(&h).get(), p.full_clique_frustration());
        assert_eq!(
            h,
            clique_plus_matching(36, p.r, p.s1 + 2 * p.s2).unwrap()
        );
        assert!(p.with_state(0, 0, 1, 1).is_err());
        assert!(p.with_state(0, 7, 1, 1).is_err());
        assert!(p.with_state(29, 1, 1, 1).is_err());
    }

    #[test]
    fn thm2_star_and_path_steps_at_36() {
        let p = Thm2Params::for_order(36).unwrap();
        for j in 1..p.s1 {
            let a = thm2_family(&p.with_state(3, j, 2, 2).unwrap()).unwrap();
            let b = thm2_family(&p.with_state(3, j + 1, 2, 2).unwrap()).unwrap();
            assert_eq!(f_scan(&b).get() as i64 - f_scan(&a).get() as i64, -2 * j as i64);
        }
        for l in 1..p.s2 {
            let a = thm2_family(&p.with_state(5, 2, 3, l).unwrap()).unwrap();
            let b = thm2_family(&p.with_state(5, 2, 3, l + 1).unwrap()).unwrap();
            assert_eq!(f_scan(&b).get() as i64 - f_scan(&a).get() as i64, -2);
        }
        for i in 0..p.v1_capacity() {
            let a = thm2_family(&p.with_state(i, 1, 1, 1).unwrap()).unwrap();
            let b = thm2_family(&p.with_state(i + 1, 1, 1, 1).unwrap()).unwrap();
            let (u, v) = clique_edge(p.r, i);
            let d = f_scan(&b).get() as i64 - f_scan(&a).get() as i64;
            assert_eq!(d, flip_pair_delta(&a, u, v).unwrap());
            assert!(d.unsigned_abs() <= 34);
            assert_eq!(d.rem_euclid(2), 0);
        }
    }
}
