//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use permcut::graph::Cut;
use permcut::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Backtracking search for a transitive orientation, checking every
/// triple as soon as its edges are oriented.
pub fn brute_comparability(g: &Graph) -> bool {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    // dir[u][v] = true when u -> v has been chosen
    let mut dir = vec![vec![false; n]; n];
    fn consistent(g: &Graph, dir: &[Vec<bool>], x: usize, y: usize) -> bool {
        let n = g.vertex_count();
        for z in 0..n {
            if z == x || z == y {
                continue;
            }
            // x -> y -> z needs x -> z
            if dir[y][z] && (!g.has_edge(x, z) || dir[z][x]) {
                return false;
            }
            // z -> x -> y needs z -> y
            if dir[z][x] && (!g.has_edge(z, y) || dir[y][z]) {
                return false;
            }
        }
        true
    }
    fn go(g: &Graph, edges: &[(usize, usize)], k: usize, dir: &mut Vec<Vec<bool>>) -> bool {
        let Some(&(u, v)) = edges.get(k) else {
            return true;
        };
        for (x, y) in [(u, v), (v, u)] {
            dir[x][y] = true;
            if consistent(g, dir, x, y) && go(g, edges, k + 1, dir) {
                return true;
            }
            dir[x][y] = false;
        }
        false
    }
    go(g, &edges, 0, &mut dir)
}

/// Plain `2^n` enumeration without symmetry breaking; returns the maximum.
pub fn naive_max_cut(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0..1u64 << n)
        .map(|mask| edges.iter().filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1)).count() as u64)
        .max()
        .unwrap_or(0)
}

/// Graph on `n` vertices whose edges are the set bits of `code` over the
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniform-ish random cubic graph on `n` (even) vertices by the pairing
/// model with rejection of loops and multi-edges.
pub fn random_cubic(seed: u64, n: usize) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::from_edges(n, &pairs) {
            return g;
        }
    }
}

/// Cut whose `A` side is the set bits of `x`.
pub fn cut_from_x(n: usize, x: u64) -> Cut {
    Cut::from_mask(n, !x & ((1u64 << n) - 1))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
