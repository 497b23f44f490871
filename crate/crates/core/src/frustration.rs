//! Frustrated triangle counts.
//!
//! A vertex triple is frustrated when it induces an odd number of edges
//! (one edge or a triangle). Three independent counting routes are provided
//! and must always agree: a direct triple scan, the degree formula
//! `f = e·n − Σ d_v² + 4p`, and the pair formula `f = e(n − e − 1) + 4p + 2q`.
//!
//! Flipping one pair `uv` toggles the frustration status of exactly the
//! `n − 2` triples containing it, so the change in `f` is
//! `(n − 2) − 2·|{w : uvw frustrated}|`. That identity drives the Gray-code
//! enumeration in [`crate::spectrum`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Graph};

/// Number of frustrated triples of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FrustrationCount(pub u64);

impl FrustrationCount {
    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl From<FrustrationCount> for u64 {
    fn from(f: FrustrationCount) -> u64 {
        f.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: u64) -> Parity {
        if x % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Reference count: every triple `i < j < k`, membership read from rows.
pub fn f_scan(g: &Graph) -> FrustrationCount {
    let n = g.n();
    let mut f = 0u64;
    for i in 0..n {
        let ri = g.row(i);
        for j in i + 1..n {
            let ij = (ri >> j) & 1;
            let rj = g.row(j);
            for k in j + 1..n {
                let induced = ij + ((ri >> k) & 1) + ((rj >> k) & 1);
                f += induced & 1;
            }
        }
    }
    FrustrationCount(f)
}

/// `f = e·n − Σ d_v² + 4p`.
pub fn f_degree_formula(g: &Graph) -> FrustrationCount {
    let prof = g.structure_profile();
    let n = prof.n as i64;
    let e = prof.e as i64;
    let sq: i64 = prof.degrees.iter().map(|&d| (d * d) as i64).sum();
    let f = e * n - sq + 4 * prof.p as i64;
    debug_assert!(f >= 0);
    FrustrationCount(f as u64)
}

/// `f = e(n − e − 1) + 4p + 2q`.
pub fn f_pair_formula(g: &Graph) -> FrustrationCount {
    let prof = g.structure_profile();
    let n = prof.n as i64;
    let e = prof.e as i64;
    let f = e * (n - e - 1) + 4 * prof.p as i64 + 2 * prof.q as i64;
    debug_assert!(f >= 0);
    FrustrationCount(f as u64)
}

/// Number of `w` for which the triple `{u, v, w}` is frustrated.
pub fn frustrated_on_pair(g: &Graph, u: usize, v: usize) -> Result<u64> {
    g.check_pair(u, v)?;
    Ok(frustrated_on_pair_rows(g.rows(), g.n(), u, v))
}

/// With `uv` a nonedge, `uvw` is frustrated iff exactly one of `uw`, `vw` is an
/// edge (the symmetric difference of the rows). With `uv` an edge it is
/// frustrated iff both or neither are, i.e. outside the symmetric difference.
#[inline]
pub(crate) fn frustrated_on_pair_rows(rows: &[u64], n: usize, u: usize, v: usize) -> u64 {
    let others = low_mask(n) & !bit(u) & !bit(v);
    let split = ((rows[u] ^ rows[v]) & others).count_ones() as u64;
    if rows[u] & bit(v) != 0 {
        (n as u64 - 2) - split
    } else {
        split
    }
}

/// `f(flip_pair(g, u, v)) − f(g)`, valid whether `uv` is currently an edge or not.
pub fn flip_pair_delta(g: &Graph, u: usize, v: usize) -> Result<i64> {
    g.check_pair(u, v)?;
    Ok(flip_delta_rows(g.rows(), g.n(), u, v))
}

#[inline]
pub(crate) fn flip_delta_rows(rows: &[u64], n: usize, u: usize, v: usize) -> i64 {
    (n as i64 - 2) - 2 * frustrated_on_pair_rows(rows, n, u, v) as i64
}

/// Frustrated `k`-cycles.
///
/// A `k`-cycle is a cyclic ordering of `k` distinct vertices, identified up to
/// rotation and reflection, so every `k`-set carries `(k − 1)!/2` of them (one
/// for `k = 3`, making `f_k_count(g, 3) == f_scan(g)`). It is frustrated when
/// its `k` consecutive pairs contain an odd number of edges. Brute force; meant
/// for `k <= 6` and `n <= 12`.
pub fn f_k_count(g: &Graph, k: usize) -> Result<u64> {
    let n = g.n();
    if k < 3 || k > n {
        return Err(Error::out_of_range("cycle length k", k as u64, 3, n.max(3) as u64));
    }
    let mut count = 0u64;
    let mut subset = Vec::with_capacity(k);
    for_each_subset(n, k, 0, &mut subset, &mut |set| {
        // Fix the smallest vertex first; orient so the second vertex is
        // smaller than the last to drop the reflected copy.
        let first = set[0];
        let mut rest: Vec<usize> = set[1..].to_vec();
        for_each_permutation(&mut rest, 0, &mut |perm| {
            if perm.len() >= 2 && perm[0] > perm[perm.len() - 1] {
                return;
            }
            let mut parity = g.has_edge(first, perm[0]) as u32;
            for w in perm.windows(2) {
                parity += g.has_edge(w[0], w[1]) as u32;
            }
            parity += g.has_edge(perm[perm.len() - 1], first) as u32;
            count += (parity & 1) as u64;
        });
    });
    Ok(count)
}

fn for_each_subset(
    n: usize,
    k: usize,
    start: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if current.len() == k {
        visit(current);
        return;
    }
    let need = k - current.len();
    for v in start..=n - need {
        current.push(v);
        for_each_subset(n, k, v + 1, current, visit);
        current.pop();
    }
}

fn for_each_permutation(items: &mut [usize], pos: usize, visit: &mut impl FnMut(&[usize])) {
    if pos == items.len() {
        visit(items);
        return;
    }
    for i in pos..items.len() {
        items.swap(pos, i);
        for_each_permutation(items, pos + 1, visit);
        items.swap(pos, i);
    }
}

/// Parity forced on `f` by the vertex and edge counts: always even for even
/// `n`, the parity of `e` for odd `n`.
pub fn parity_of_f(n: usize, e: u64) -> Parity {
    if n % 2 == 0 {
        Parity::Even
    } else {
        Parity::of(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::choose3;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Plain boolean-matrix oracle, independent of the row encoding.
    fn matrix_oracle(g: &Graph) -> u64 {
        let n = g.n();
        let adj: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect())
            .collect();
        let mut f = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a < b && b < c {
                        let m = adj[a][b] as u32 + adj[a][c] as u32 + adj[b][c] as u32;
                        if m % 2 == 1 {
                            f += 1;
                        }
                    }
                }
            }
        }
        f
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let density: f64 = rng.random_range(0.05..0.95);
        let mut g = Graph::empty(n).unwrap();
        for v in 1..n {
            for u in 0..v {
                if rng.random_bool(density) {
                    g.toggle(u, v);
                }
            }
        }
        g
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let m = pairs.len();
        (0u64..1 << m).map(move |code| {
            let edges: Vec<_> = (0..m).filter(|b| code >> b & 1 == 1).map(|b| pairs[b]).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn scan_examples() {
        let single = Graph::from_edges(5, &[(0, 1)]).unwrap();
        assert_eq!(f_scan(&single).get(), 3);
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(f_scan(&k23).get(), 0);
        let fig = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(f_scan(&fig).get(), 12);
        assert_eq!(f_scan(&Graph::complete(4).unwrap()).get(), 4);
    }

    #[test]
    fn formula_examples() {
        let single = Graph::from_edges(5, &[(0, 1)]).unwrap();
        assert_eq!(f_degree_formula(&single).get(), 3);
        assert_eq!(f_degree_formula(&Graph::complete(3).unwrap()).get(), 1);
        let c5 = cycle(5);
        assert_eq!(matrix_oracle(&c5), 5);
        assert_eq!(f_degree_formula(&c5).get(), 5);
        assert_eq!(f_scan(&c5).get(), 5);

        for n in 3..=12 {
            for t in 0..=n / 2 {
                let edges: Vec<_> = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
                let m = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(f_pair_formula(&m).get(), (t * (n - 2)) as u64);
            }
            for t in 0..n {
                let edges: Vec<_> = (1..=t).map(|i| (0, i)).collect();
                let s = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(f_pair_formula(&s).get(), (t * (n - t - 1)) as u64);
            }
        }
        let fig = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(f_pair_formula(&fig).get(), 12);
    }

    #[test]
    fn pair_counts() {
        let single = Graph::from_edges(5, &[(0, 1)]).unwrap();
        assert_eq!(frustrated_on_pair(&single, 0, 1).unwrap(), 3);
        let k3 = Graph::complete(3).unwrap();
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(frustrated_on_pair(&k3, u, v).unwrap(), 1);
        }
        // C5 edge 0-1: w=2 (edge 12), w=4 (edge 40) give two edges, w=3 gives one
        let c5 = cycle(5);
        let by_hand = (2..5)
            .filter(|&w| {
                let m = c5.has_edge(0, 1) as u32 + c5.has_edge(0, w) as u32 + c5.has_edge(1, w) as u32;
                m % 2 == 1
            })
            .count() as u64;
        assert_eq!(by_hand, 1);
        assert_eq!(frustrated_on_pair(&c5, 0, 1).unwrap(), by_hand);
        assert!(frustrated_on_pair(&c5, 2, 2).is_err());
    }

    #[test]
    fn flip_deltas() {
        let e5 = Graph::empty(5).unwrap();
        assert_eq!(flip_pair_delta(&e5, 0, 1).unwrap(), 3);
        let single = e5.flip_pair(0, 1).unwrap();
        assert_eq!(flip_pair_delta(&single, 0, 1).unwrap(), -3);

        let c5 = cycle(5);
        let p4 = c5.flip_pair(0, 1).unwrap();
        let oracle = matrix_oracle(&p4) as i64 - matrix_oracle(&c5) as i64;
        assert_eq!(flip_pair_delta(&c5, 0, 1).unwrap(), oracle);
        assert_eq!(flip_pair_delta(&c5, 1, 1), Err(Error::SelfLoop { v: 1 }));
    }

    #[test]
    fn parity_rule() {
        assert_eq!(parity_of_f(6, 0), Parity::Even);
        assert_eq!(parity_of_f(6, 7), Parity::Even);
        assert_eq!(parity_of_f(5, 5), Parity::Odd);
        assert_eq!(Parity::of(f_scan(&cycle(5)).get()), Parity::Odd);
        assert_eq!(parity_of_f(7, 4), Parity::Even);
    }

    /// Orderings as ordered tuples, each cycle counted 2k times.
    fn cycle_oracle(g: &Graph, k: usize) -> u64 {
        let n = g.n();
        let mut tuples = 0u64;
        let mut stack = vec![];
        fn rec(g: &Graph, n: usize, k: usize, stack: &mut Vec<usize>, tuples: &mut u64) {
            if stack.len() == k {
                let mut m = 0;
                for i in 0..k {
                    m += g.has_edge(stack[i], stack[(i + 1) % k]) as u32;
                }
                *tuples += (m % 2) as u64;
                return;
            }
            for v in 0..n {
                if !stack.contains(&v) {
                    stack.push(v);
                    rec(g, n, k, stack, tuples);
                    stack.pop();
                }
            }
        }
        rec(g, n, k, &mut stack, &mut tuples);
        assert_eq!(tuples % (2 * k as u64), 0);
        tuples / (2 * k as u64)
    }

    #[test]
    fn k_cycles() {
        for n in 3..=7 {
            for k in 3..=n {
                assert_eq!(f_k_count(&Graph::empty(n).unwrap(), k).unwrap(), 0);
            }
        }
        // 4 vertices, one edge: of the three 4-cycles on {0,1,2,3}, two use the pair 01
        let single = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(cycle_oracle(&single, 4), 2);
        assert_eq!(f_k_count(&single, 4).unwrap(), 2);

        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..100 {
            let n = rng.random_range(3..=8);
            let g = random_graph(&mut rng, n);
            assert_eq!(f_k_count(&g, 3).unwrap(), f_scan(&g).get());
        }
        for _ in 0..20 {
            let n = rng.random_range(4..=7);
            let g = random_graph(&mut rng, n);
            let k = rng.random_range(4..=n);
            assert_eq!(f_k_count(&g, k).unwrap(), cycle_oracle(&g, k));
        }
        let g = Graph::empty(5).unwrap();
        assert!(f_k_count(&g, 2).is_err());
        assert!(f_k_count(&g, 6).is_err());
    }

    #[test]
    fn exhaustive_oracle_and_delta_agreement() {
        for n in 3..=6 {
            let total = choose3(n as u64);
            for g in all_graphs(n) {
                let f = f_scan(&g).get();
                assert_eq!(f, f_degree_formula(&g).get());
                assert_eq!(f, f_pair_formula(&g).get());
                assert_eq!(f + f_scan(&g.complement()).get(), total);
                assert_eq!(Parity::of(f), parity_of_f(n, g.edge_count()));
                for v in 1..n {
                    for u in 0..v {
                        let d = flip_pair_delta(&g, u, v).unwrap();
                        let flipped = f_scan(&g.flip_pair(u, v).unwrap()).get() as i64;
                        assert_eq!(flipped, f as i64 + d);
                        assert!(d.unsigned_abs() <= n as u64 - 2);
                        assert_eq!(d.rem_euclid(2), (n % 2) as i64);
                    }
                }
            }
        }
    }

    #[test]
    fn scan_matches_matrix_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..300 {
            let n = rng.random_range(3..=20);
            let g = random_graph(&mut rng, n);
            assert_eq!(f_scan(&g).get(), matrix_oracle(&g));
        }
    }

    #[test]
    fn random_oracle_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let n = rng.random_range(7..=24);
            let g = random_graph(&mut rng, n);
            let f = f_scan(&g).get();
            assert_eq!(f, f_degree_formula(&g).get());
            assert_eq!(f, f_pair_formula(&g).get());
            assert_eq!(f + f_scan(&g.complement()).get(), choose3(n as u64));
            assert_eq!(Parity::of(f), parity_of_f(n, g.edge_count()));
            let e = g.edge_count();
            assert!(f <= e * (n as u64 - 2));
            if e < n as u64 {
                assert!(f >= e * (n as u64 - e - 1));
            }
        }
    }
}
