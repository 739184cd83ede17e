//! MaxCut solvers: exhaustive enumeration for small graphs and a seeded
//! multi-start local search for everything else.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadget::GadgetVertices;
use crate::graph::{Cut, Graph};

/// Default vertex limit for [`max_cut_exact`].
pub const DEFAULT_EXACT_LIMIT: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub size: u64,
    /// Vertex 0 is always in `A`.
    pub cut: Cut,
    /// whether `size` is proven maximum
    pub exact: bool,
    /// seed of the local search
    pub seed: Option<u64>,
    pub restarts: u64,
}

/// Whether membership mask `a` precedes `b` lexicographically (vertex 0
/// first, `A` before `B`).
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a & (d & d.wrapping_neg()) == 0
}

/// Gray-code walk over the lowest `free` bits above vertex 0, starting
/// from `start`. Calls `visit(mask, cut_size)` for each of the `2^free`
/// masks. Bit `v` set means `v ∈ B`; vertex 0 stays in `A`.
fn walk(g: &Graph, nb: &[u64], free: usize, start: u64, mut visit: impl FnMut(u64, u64)) {
    let mut mask = start;
    let mut size = g
        .edges()
        .filter(|&(u, v)| (mask >> u & 1) != (mask >> v & 1))
        .count() as i64;
    visit(mask, size as u64);
    for step in 1..1u64 << free {
        let v = 1 + step.trailing_zeros() as usize;
        let same = if mask >> v & 1 == 1 { mask } else { !mask };
        let same = (nb[v] & same).count_ones() as i64;
        size += 2 * same - nb[v].count_ones() as i64;
        mask ^= 1 << v;
        visit(mask, size as u64);
    }
}

fn masks(g: &Graph, limit: usize) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    if n > limit.min(64) {
        return Err(Error::SizeLimit { n, limit: limit.min(64) });
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect())
}

/// Work split: the top `high` of the `n - 1` free vertices are fixed per
/// chunk, the rest are walked.
fn split(n: usize) -> (usize, usize) {
    let free = n.saturating_sub(1);
    let high = free.min(8);
    (free - high, high)
}

fn chunk_start(low: usize, c: u64) -> u64 {
    c << (low + 1)
}

/// Maximum cut by exhaustive enumeration, for graphs with at most `limit`
/// vertices (never more than 64). Among optimal cuts with vertex 0 in `A`
/// the lexicographically smallest membership vector is returned.
pub fn max_cut_exact(g: &Graph, limit: usize) -> Result<SolveResult> {
    let nb = masks(g, limit)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(SolveResult { size: 0, cut: Cut::all_a(0), exact: true, seed: None, restarts: 0 });
    }
    let (low, high) = split(n);
    let best = (0..1u64 << high)
        .into_par_iter()
        .map(|c| {
            let mut best = (0u64, u64::MAX);
            walk(g, &nb, low, chunk_start(low, c), |mask, size| {
                if size > best.0 || (size == best.0 && lex_less(mask, best.1)) {
                    best = (size, mask);
                }
            });
            best
        })
        .reduce(
            || (0, u64::MAX),
            |a, b| if b.0 > a.0 || (b.0 == a.0 && lex_less(b.1, a.1)) { b } else { a },
        );
    let cut = Cut::from_mask(n, best.1);
    assert_eq!(g.cut_size(&cut)? as u64, best.0, "enumerated size disagrees with recount");
    Ok(SolveResult {
        size: best.0,
        cut,
        exact: true,
        seed: None,
        restarts: 0,
    })
}

/// Optimal cuts of a graph containing a gadget, checked against the three
/// conclusions of the gadget lemma.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCensus {
    pub max: u64,
    /// optimal cuts with vertex 0 in `A`
    pub optimal: u64,
    /// optimal cuts violating at least one conclusion
    pub violations: u64,
    /// smallest such cut as a `B`-membership mask
    pub first_violation: Option<u64>,
}

/// Enumerates every cut of `g` and checks, for each maximum one, that
/// `S'` is opposite `K'`, `S''` opposite `K''` and `K'` opposite `K''`.
pub fn census(g: &Graph, h: &GadgetVertices, limit: usize) -> Result<CutCensus> {
    let nb = masks(g, limit)?;
    let n = g.vertex_count();
    let part = |s: &[usize]| -> Result<u64> {
        s.iter().try_fold(0u64, |m, &v| {
            if v >= n {
                Err(Error::VertexOutOfRange { vertex: v, n })
            } else {
                Ok(m | 1 << v)
            }
        })
    };
    let (kp, kpp, sp, spp) = (part(&h.k_prime)?, part(&h.k_double_prime)?, part(&h.s_prime)?, part(&h.s_double_prime)?);
    // Some(true) when the part is wholly in B, Some(false) wholly in A
    let side = |mask: u64, p: u64| match mask & p {
        0 => Some(false),
        x if x == p => Some(true),
        _ => None,
    };
    let opposite = |mask: u64, p: u64, q: u64| matches!((side(mask, p), side(mask, q)), (Some(a), Some(b)) if a != b);
    let holds = |mask: u64| opposite(mask, sp, kp) && opposite(mask, spp, kpp) && opposite(mask, kp, kpp);
    if n == 0 {
        return Ok(CutCensus { max: 0, optimal: 1, violations: 0, first_violation: None });
    }
    let (low, high) = split(n);
    let merge = |a: CutCensus, b: CutCensus| -> CutCensus {
        use std::cmp::Ordering::*;
        match a.max.cmp(&b.max) {
            Greater => a,
            Less => b,
            Equal => CutCensus {
                max: a.max,
                optimal: a.optimal + b.optimal,
                violations: a.violations + b.violations,
                first_violation: match (a.first_violation, b.first_violation) {
                    (Some(x), Some(y)) => Some(if lex_less(x, y) { x } else { y }),
                    (x, y) => x.or(y),
                },
            },
        }
    };
    let empty = || CutCensus { max: 0, optimal: 0, violations: 0, first_violation: None };
    let result = (0..1u64 << high)
        .into_par_iter()
        .map(|c| {
            let mut acc = empty();
            walk(g, &nb, low, chunk_start(low, c), |mask, size| {
                if size < acc.max {
                    return;
                }
                if size > acc.max {
                    acc = empty();
                    acc.max = size;
                }
                acc.optimal += 1;
                if !holds(mask) {
                    acc.violations += 1;
                    if acc.first_violation.is_none_or(|f| lex_less(mask, f)) {
                        acc.first_violation = Some(mask);
                    }
                }
            });
            acc
        })
        .reduce(empty, merge);
    Ok(result)
}

/// One restart: uniform random start, then repeated ascending sweeps that
/// flip any vertex with positive gain until none is left.
fn local_restart(g: &Graph, seed: u64, restart: u64) -> SolveResult {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart);
    let mut in_b: Vec<bool> = (0..n).map(|_| rng.random()).collect();
    // gain[v] = (same-side neighbors) - (other-side neighbors)
    let mut gain: Vec<i64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&w| if in_b[w as usize] == in_b[v] { 1 } else { -1 })
                .sum()
        })
        .collect();
    let mut improved = true;
    while improved {
        improved = false;
        for v in 0..n {
            if gain[v] <= 0 {
                continue;
            }
            improved = true;
            in_b[v] = !in_b[v];
            gain[v] = -gain[v];
            for &w in g.neighbors(v) {
                let w = w as usize;
                gain[w] += if in_b[w] == in_b[v] { 2 } else { -2 };
            }
        }
    }
    let cut = Cut::from_membership(in_b).normalized();
    let size = g.cut_size(&cut).expect("cut built for this graph") as u64;
    SolveResult {
        size,
        cut,
        exact: false,
        seed: Some(seed),
        restarts: restart + 1,
    }
}

fn better(a: &SolveResult, b: &SolveResult) -> bool {
    a.size > b.size || (a.size == b.size && a.cut.membership() < b.cut.membership())
}

/// Best of `restarts` local-search runs. Restart `r` draws from stream `r`
/// of a ChaCha8 generator seeded with `seed`, so the answer depends only on
/// `(g, seed, restarts)` and not on thread scheduling. Ties go to the
/// lexicographically smallest membership vector.
pub fn max_cut_local(g: &Graph, seed: u64, restarts: u64) -> SolveResult {
    let runs: Vec<SolveResult> = (0..restarts.max(1))
        .into_par_iter()
        .map(|r| local_restart(g, seed, r))
        .collect();
    pick_best(runs)
}

/// Single-threaded [`max_cut_local`].
pub fn max_cut_local_sequential(g: &Graph, seed: u64, restarts: u64) -> SolveResult {
    pick_best((0..restarts.max(1)).map(|r| local_restart(g, seed, r)).collect())
}

fn pick_best(runs: Vec<SolveResult>) -> SolveResult {
    let restarts = runs.len() as u64;
    let mut best = runs
        .into_iter()
        .reduce(|a, b| if better(&b, &a) { b } else { a })
        .expect("at least one restart");
    best.restarts = restarts;
    best
}

/// Whether `cut` cuts exactly `claimed` edges of `g`.
pub fn verify_cut(g: &Graph, cut: &Cut, claimed: u64) -> Result<bool> {
    Ok(g.cut_size(cut)? as u64 == claimed)
}

/// Like [`verify_cut`] for explicit parts; `false` when `a` and `b` do not
/// partition the vertices.
pub fn verify_parts(g: &Graph, a: &[usize], b: &[usize], claimed: u64) -> bool {
    match Cut::from_parts(g.vertex_count(), a, b) {
        Ok(cut) => verify_cut(g, &cut, claimed).unwrap_or(false),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, complete_bipartite, cycle, petersen};

    fn brute(g: &Graph) -> (u64, u64) {
        let n = g.vertex_count();
        let mut best = (0, u64::MAX);
        for mask in (0..1u64 << n).filter(|m| m & 1 == 0) {
            let size = g.cut_size(&Cut::from_mask(n, mask)).unwrap() as u64;
            if size > best.0 || (size == best.0 && lex_less(mask, best.1)) {
                best = (size, mask);
            }
        }
        best
    }

    #[test]
    fn lex_order() {
        // vertex 1 in A beats vertex 1 in B regardless of later vertices
        assert!(lex_less(0b1100, 0b0010));
        assert!(!lex_less(0b0010, 0b1100));
        assert!(!lex_less(5, 5));
    }

    #[test]
    fn known_values() {
        assert_eq!(max_cut_exact(&complete(4), 30).unwrap().size, 4);
        assert_eq!(max_cut_exact(&cycle(5), 30).unwrap().size, 4);
        assert_eq!(max_cut_exact(&petersen(), 30).unwrap().size, 12);
        assert_eq!(max_cut_exact(&complete_bipartite(3, 3), 30).unwrap().size, 9);
        assert_eq!(max_cut_exact(&Graph::empty(0), 30).unwrap().size, 0);
        assert_eq!(max_cut_exact(&Graph::empty(1), 30).unwrap().size, 0);
        assert!(matches!(max_cut_exact(&complete(5), 4), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn matches_brute_force_with_tie_break() {
        for g in [complete(5), cycle(6), cycle(7), petersen(), complete_bipartite(2, 5)] {
            let r = max_cut_exact(&g, 30).unwrap();
            let (size, mask) = brute(&g);
            assert_eq!(r.size, size);
            assert_eq!(r.cut, Cut::from_mask(g.vertex_count(), mask));
            assert!(r.cut.in_a(0));
        }
    }

    #[test]
    fn local_search_is_reproducible() {
        let g = petersen();
        let a = max_cut_local(&g, 7, 16);
        assert_eq!(a, max_cut_local(&g, 7, 16));
        assert_eq!(a, max_cut_local_sequential(&g, 7, 16));
        assert_eq!(a.size, 12);
        assert!(verify_cut(&g, &a.cut, a.size).unwrap());
        assert!(a.cut.in_a(0));
        assert_eq!((a.exact, a.seed, a.restarts), (false, Some(7), 16));
    }

    #[test]
    fn verify_parts_examples() {
        let g = complete(4);
        assert!(verify_parts(&g, &[0, 1], &[2, 3], 4));
        assert!(!verify_parts(&g, &[0, 1], &[2, 3], 3));
        assert!(!verify_parts(&g, &[0, 1], &[1, 2, 3], 4));
        assert!(!verify_parts(&g, &[0, 1], &[2], 3));
    }

    #[test]
    fn census_of_small_gadget() {
        let spec = crate::gadget::GadgetSpec::new(crate::label::GadgetOwner::Vertex(1), 3, 1).unwrap();
        let g = spec.direct_graph();
        let h = spec.resolve(&g).unwrap();
        let c = census(&g.graph, &h, 30).unwrap();
        assert_eq!(c.max as usize, spec.edge_count());
        assert_eq!(c.violations, 0);
        assert_eq!(c.optimal, 1);
    }
}
