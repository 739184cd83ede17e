//! Class recognizers with checkable certificates: comparability (and
//! hence permutation), chordality and interval graphs.
//!
//! Comparability uses edge forcing. Two arcs `ab` and `ab'` force each
//! other when `bb'` is not an edge (likewise `ab`, `a'b` when `aa'` is not
//! an edge); the classes of this relation are the implication classes. A
//! graph is a comparability graph iff no implication class contains an
//! arc together with its reverse, so a forcing chain from an arc to its
//! reverse refutes comparability. Otherwise a transitive orientation is
//! assembled class by class on shrinking edge sets and checked before it
//! is returned.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{find_induced_c4, is_induced_c4, iter_bits, Graph};
use crate::label::{GadgetOwner, Part, VertexLabel};
use crate::reduction::perm::ReductionArtifact;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationCertificate {
    /// One arc `(u, v)` per edge, meaning `u → v`, in ascending edge order.
    Orientation(Vec<(usize, usize)>),
    /// Arcs `x_0, …, x_k` where consecutive arcs force each other and
    /// `x_k` is the reverse of `x_0`.
    ForcingCycle(Vec<(usize, usize)>),
}

impl OrientationCertificate {
    pub fn is_orientation(&self) -> bool {
        matches!(self, OrientationCertificate::Orientation(_))
    }
}

/// Why a proposed orientation is not transitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationDefect {
    /// `(u, v)` is not an edge of the graph.
    NotAnEdge(usize, usize),
    /// The edge is oriented both ways.
    BothWays(usize, usize),
    /// The edge is not oriented.
    Missing(usize, usize),
    /// `a → b → c` without `a → c`.
    NotTransitive(usize, usize, usize),
}

/// Independent check that `arcs` orient every edge exactly once and
/// transitively. Runs in `O(Σ deg²)` word operations.
pub fn verify_orientation(g: &Graph, arcs: &[(usize, usize)]) -> std::result::Result<(), OrientationDefect> {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut out = vec![0u64; n * words];
    let bit = |v: usize| (v / 64, 1u64 << (v % 64));
    for &(u, v) in arcs {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return Err(OrientationDefect::NotAnEdge(u, v));
        }
        let (w, b) = bit(v);
        let (wr, br) = bit(u);
        if out[u * words + w] & b != 0 || out[v * words + wr] & br != 0 {
            return Err(OrientationDefect::BothWays(u.min(v), u.max(v)));
        }
        out[u * words + w] |= b;
    }
    if arcs.len() != g.edge_count() {
        let (u, v) = g
            .edges()
            .find(|&(u, v)| {
                let (w, b) = bit(v);
                let (wr, br) = bit(u);
                out[u * words + w] & b == 0 && out[v * words + wr] & br == 0
            })
            .expect("some edge is unoriented");
        return Err(OrientationDefect::Missing(u, v));
    }
    for a in 0..n {
        let row_a = &out[a * words..(a + 1) * words];
        for b in iter_bits(row_a) {
            let row_b = &out[b * words..(b + 1) * words];
            for w in 0..words {
                let missing = row_b[w] & !row_a[w];
                if missing != 0 {
                    let c = w * 64 + missing.trailing_zeros() as usize;
                    return Err(OrientationDefect::NotTransitive(a, b, c));
                }
            }
        }
    }
    Ok(())
}

fn forces(g: &Graph, x: (usize, usize), y: (usize, usize)) -> bool {
    let ((a, b), (c, d)) = (x, y);
    (a == c && b != d && !g.has_edge(b, d)) || (b == d && a != c && !g.has_edge(a, c))
}

/// Independent check of a forcing cycle: every arc is an edge, consecutive
/// arcs force each other, and the chain ends on the reverse of its start.
pub fn verify_forcing_cycle(g: &Graph, chain: &[(usize, usize)]) -> bool {
    let n = g.vertex_count();
    let (Some(&first), Some(&last)) = (chain.first(), chain.last()) else {
        return false;
    };
    chain.iter().all(|&(u, v)| u < n && v < n && g.has_edge(u, v))
        && last == (first.1, first.0)
        && chain.windows(2).all(|w| forces(g, w[0], w[1]))
}

/// Arc ids: arc `k` of vertex `u` (to `neighbors(u)[k]`) is `offset[u] + k`.
struct Arcs<'a> {
    g: &'a Graph,
    offset: Vec<usize>,
}

impl<'a> Arcs<'a> {
    fn new(g: &'a Graph) -> Self {
        let mut offset = Vec::with_capacity(g.vertex_count() + 1);
        let mut total = 0;
        for v in 0..g.vertex_count() {
            offset.push(total);
            total += g.degree(v);
        }
        offset.push(total);
        Arcs { g, offset }
    }

    fn len(&self) -> usize {
        *self.offset.last().unwrap_or(&0)
    }

    fn id(&self, u: usize, v: usize) -> usize {
        let k = self.g.neighbors(u).binary_search(&(v as u32)).expect("arc of an edge");
        self.offset[u] + k
    }

    fn ends(&self, id: usize) -> (usize, usize) {
        let u = self.offset.partition_point(|&o| o <= id) - 1;
        (u, self.g.neighbors(u)[id - self.offset[u]] as usize)
    }

    /// Arcs forced by `(a, b)`, in ascending order of the varying end.
    fn forced(&self, (a, b): (usize, usize), out: &mut Vec<usize>) {
        out.clear();
        let g = self.g;
        for &c in g.neighbors(a) {
            let c = c as usize;
            if c != b && !g.has_edge(b, c) {
                out.push(self.id(a, c));
            }
        }
        for &c in g.neighbors(b) {
            let c = c as usize;
            if c != a && !g.has_edge(a, c) {
                out.push(self.id(c, b));
            }
        }
    }
}

/// Looks for an implication class of `g` that contains an arc and its
/// reverse; returns the forcing chain if there is one.
fn find_forcing_cycle(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let arcs = Arcs::new(g);
    let mut class = vec![usize::MAX; arcs.len()];
    let mut buf = Vec::new();
    let mut members = Vec::new();
    for (u, v) in g.edges() {
        let start = arcs.id(u, v);
        if class[start] != usize::MAX {
            continue;
        }
        members.clear();
        class[start] = start;
        members.push(start);
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            arcs.forced(arcs.ends(x), &mut buf);
            for &y in &buf {
                if class[y] == usize::MAX {
                    class[y] = start;
                    members.push(y);
                }
            }
        }
        let conflict = members.iter().copied().find(|&x| {
            let (a, b) = arcs.ends(x);
            class[arcs.id(b, a)] == start
        });
        if let Some(x) = conflict {
            return Some(forcing_path(&arcs, x));
        }
    }
    None
}

/// Shortest forcing chain from arc `x` to its reverse.
fn forcing_path(arcs: &Arcs<'_>, x: usize) -> Vec<(usize, usize)> {
    let (a, b) = arcs.ends(x);
    let target = arcs.id(b, a);
    let mut parent = vec![usize::MAX; arcs.len()];
    parent[x] = x;
    let mut queue = VecDeque::from([x]);
    let mut buf = Vec::new();
    while let Some(y) = queue.pop_front() {
        if y == target {
            break;
        }
        arcs.forced(arcs.ends(y), &mut buf);
        for &z in &buf {
            if parent[z] == usize::MAX {
                parent[z] = y;
                queue.push_back(z);
            }
        }
    }
    let mut chain = vec![arcs.ends(target)];
    let mut cur = target;
    while cur != x {
        cur = parent[cur];
        chain.push(arcs.ends(cur));
    }
    chain.reverse();
    chain
}

/// Assembles a transitive orientation of a graph known to have no
/// self-reverse implication class: repeatedly take the smallest remaining
/// edge, orient its implication class within the remaining edges, and
/// delete that class and its reverse.
fn assemble_orientation(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut rem: Vec<u64> = (0..n).flat_map(|v| g.row(v).iter().copied()).collect();
    let mut oriented = vec![0u64; n * words];
    let has = |m: &[u64], u: usize, v: usize| m[u * words + v / 64] >> (v % 64) & 1 == 1;
    let mut class = Vec::new();
    let mut cand = vec![0u64; words];
    for (u, v) in g.edges() {
        if !has(&rem, u, v) {
            continue;
        }
        class.clear();
        class.push((u, v));
        oriented[u * words + v / 64] |= 1 << (v % 64);
        let mut head = 0;
        while head < class.len() {
            let (a, b) = class[head];
            head += 1;
            // (a, c) for c ∈ rem(a) \ rem(b) \ {b}; then (c, b) for c ∈ rem(b) \ rem(a) \ {a}
            for (fixed, other, tail_fixed) in [(a, b, true), (b, a, false)] {
                for w in 0..words {
                    cand[w] = rem[fixed * words + w] & !rem[other * words + w];
                }
                cand[other / 64] &= !(1 << (other % 64));
                for c in iter_bits(&cand) {
                    let (x, y) = if tail_fixed { (fixed, c) } else { (c, fixed) };
                    if has(&oriented, x, y) {
                        continue;
                    }
                    if has(&oriented, y, x) {
                        return None;
                    }
                    oriented[x * words + y / 64] |= 1 << (y % 64);
                    class.push((x, y));
                }
            }
        }
        for &(a, b) in &class {
            rem[a * words + b / 64] &= !(1 << (b % 64));
            rem[b * words + a / 64] &= !(1 << (a % 64));
        }
    }
    Some(
        g.edges()
            .map(|(u, v)| if has(&oriented, u, v) { (u, v) } else { (v, u) })
            .collect(),
    )
}

/// Decides comparability. `true` comes with a transitive orientation that
/// has passed [`verify_orientation`]; `false` with a forcing cycle that
/// has passed [`verify_forcing_cycle`]. Edges are explored in ascending
/// `(u, v)` order, so certificates are deterministic.
pub fn is_comparability(g: &Graph) -> (bool, OrientationCertificate) {
    if let Some(chain) = find_forcing_cycle(g) {
        assert!(verify_forcing_cycle(g, &chain), "forcing cycle failed its own check");
        return (false, OrientationCertificate::ForcingCycle(chain));
    }
    let arcs = assemble_orientation(g).expect("no self-reverse implication class, so assembly succeeds");
    if let Err(defect) = verify_orientation(g, &arcs) {
        panic!("assembled orientation failed its check: {defect:?}");
    }
    (true, OrientationCertificate::Orientation(arcs))
}

/// Shrinks `vertices` to an inclusion-minimal subset whose induced
/// subgraph is still not a comparability graph, dropping vertices in the
/// given order whenever that keeps the property. `None` if the starting
/// set already induces a comparability graph.
pub fn minimal_non_comparability(g: &Graph, vertices: &[usize]) -> Result<Option<Vec<usize>>> {
    let refutes = |set: &[usize]| -> Result<bool> { Ok(!is_comparability(&g.induced(set)?).0) };
    if !refutes(vertices)? {
        return Ok(None);
    }
    let mut keep = vertices.to_vec();
    let mut k = 0;
    while k < keep.len() {
        let mut trial = keep.clone();
        trial.remove(k);
        if refutes(&trial)? {
            keep = trial;
        } else {
            k += 1;
        }
    }
    Ok(Some(keep))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationVerdict {
    pub graph: OrientationCertificate,
    pub complement: OrientationCertificate,
}

impl PermutationVerdict {
    pub fn holds(&self) -> bool {
        self.graph.is_orientation() && self.complement.is_orientation()
    }
}

/// Permutation graphs are exactly the comparability graphs whose
/// complement is also a comparability graph.
pub fn is_permutation(g: &Graph) -> PermutationVerdict {
    let (_, graph) = is_comparability(g);
    let (_, complement) = is_comparability(&g.complement());
    PermutationVerdict { graph, complement }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordalCertificate {
    /// Perfect elimination ordering.
    Elimination(Vec<usize>),
    /// Chordless cycle of length at least 4, in cycle order.
    ChordlessCycle(Vec<usize>),
}

/// Maximum cardinality search; the reverse visit order is a perfect
/// elimination ordering exactly when `g` is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![(0..n).rev().collect()];
    let mut top = 0;
    let mut visit = Vec::with_capacity(n);
    while visit.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !done[v] && weight[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        done[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            let w = w as usize;
            if !done[w] {
                weight[w] += 1;
                if buckets.len() <= weight[w] {
                    buckets.push(Vec::new());
                }
                buckets[weight[w]].push(w);
                top = top.max(weight[w]);
            }
        }
    }
    visit.reverse();
    visit
}

/// First vertex of `order` whose later neighbors are not a clique, with
/// two non-adjacent later neighbors.
fn peo_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let mut pos = vec![0; order.len()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| w as usize)
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&w) = later.iter().find(|&&w| w != parent && !g.has_edge(parent, w)) {
            return Some((v, parent, w));
        }
    }
    None
}

/// Whether `order` is a perfect elimination ordering of `g`.
pub fn verify_elimination(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    order.len() == n
        && order.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && peo_violation(g, order).is_none()
}

/// Whether `cycle` is a chordless cycle of length at least 4.
pub fn verify_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if k < 4 || !cycle.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true)) {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Shortest `u`–`w` path avoiding `N[v] \ {u, w}`, closed into a cycle
/// through `v`. Such a path is induced and misses `N(v)`, so the cycle is
/// chordless.
fn cycle_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        blocked[x as usize] = true;
    }
    blocked[u] = false;
    blocked[w] = false;
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            break;
        }
        for &y in g.neighbors(x) {
            let y = y as usize;
            // leave v's neighbors u and w only through the path ends
            if blocked[y] || parent[y] != usize::MAX || (x == u && y == w) {
                continue;
            }
            parent[y] = x;
            queue.push_back(y);
        }
    }
    if parent[w] == usize::MAX {
        return None;
    }
    let mut path = vec![w];
    let mut cur = w;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.push(v);
    path.reverse();
    Some(path)
}

fn find_chordless_cycle(g: &Graph, hint: (usize, usize, usize)) -> Option<Vec<usize>> {
    if let Some(c) = cycle_through(g, hint.0, hint.1, hint.2) {
        return Some(c);
    }
    for v in 0..g.vertex_count() {
        let nb = g.neighbors(v);
        for (k, &u) in nb.iter().enumerate() {
            for &w in &nb[k + 1..] {
                let (u, w) = (u as usize, w as usize);
                if !g.has_edge(u, w) {
                    if let Some(c) = cycle_through(g, v, u, w) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Decides chordality; the certificate has already passed
/// [`verify_elimination`] or [`verify_chordless_cycle`].
pub fn is_chordal(g: &Graph) -> (bool, ChordalCertificate) {
    let order = mcs_order(g);
    match peo_violation(g, &order) {
        None => {
            assert!(verify_elimination(g, &order));
            (true, ChordalCertificate::Elimination(order))
        }
        Some(hint) => {
            let cycle = find_chordless_cycle(g, hint).expect("a non-chordal graph has a chordless cycle");
            assert!(verify_chordless_cycle(g, &cycle));
            (false, ChordalCertificate::ChordlessCycle(cycle))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalVerdict {
    pub c4: Option<[usize; 4]>,
    pub complement: OrientationCertificate,
}

impl IntervalVerdict {
    pub fn holds(&self) -> bool {
        self.c4.is_none() && self.complement.is_orientation()
    }
}

/// Interval graphs are exactly the `C4`-free co-comparability graphs.
pub fn is_interval(g: &Graph) -> IntervalVerdict {
    let c4 = find_induced_c4(g);
    let (_, complement) = is_comparability(&g.complement());
    IntervalVerdict { c4, complement }
}

/// The induced 4-cycle every permutation reduction contains: with
/// `e_{j1}, e_{j2}` the first two edges at `v_1` and `v_i` the other end of
/// `e_{j2}`, take `a = L¹_{1,j1}`, `b ∈ K''_i`, `c = L¹_{i,j2}`,
/// `d ∈ K'ᵉ_{j1}`. The tuple is checked against `realized` before it is
/// returned.
pub fn c4_witness_in_reduction(artifact: &ReductionArtifact, realized: &Graph) -> Result<[VertexLabel; 4]> {
    let layout = &artifact.layout;
    if layout.n() == 0 {
        return Err(Error::Precondition("empty source graph".into()));
    }
    let &[j1, j2, ..] = layout.incident(1) else {
        return Err(Error::Precondition("v1 needs at least two incident edges".into()));
    };
    let (lo, hi) = layout.edge(j2);
    let i = if lo == 1 { hi } else { lo };
    let labels = [
        VertexLabel::link(1, 1, j1),
        VertexLabel::gadget(GadgetOwner::Vertex(i), Part::KDoublePrime, 1),
        VertexLabel::link(1, i, j2),
        VertexLabel::gadget(GadgetOwner::Edge(j1), Part::KPrime, 1),
    ];
    if realized.vertex_count() != artifact.vertex_count() {
        return Err(Error::Precondition("realized graph does not match the artifact".into()));
    }
    let mut ids = [0; 4];
    for (slot, l) in ids.iter_mut().zip(&labels) {
        *slot = artifact.require(l)?;
    }
    if !is_induced_c4(realized, ids) {
        return Err(Error::Precondition(format!(
            "{} {} {} {} is not an induced 4-cycle",
            labels[0], labels[1], labels[2], labels[3]
        )));
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, complete_bipartite, cycle, path, petersen};

    #[test]
    fn small_classes() {
        assert!(is_comparability(&complete_bipartite(3, 4)).0);
        assert!(is_comparability(&complete(5)).0);
        assert!(is_comparability(&cycle(4)).0);
        assert!(is_comparability(&cycle(6)).0);
        let (ok, cert) = is_comparability(&cycle(5));
        assert!(!ok);
        let OrientationCertificate::ForcingCycle(chain) = cert else { panic!() };
        assert!(verify_forcing_cycle(&cycle(5), &chain));
        assert!(!is_comparability(&petersen()).0);
        assert!(is_comparability(&Graph::empty(0)).0);
    }

    #[test]
    fn orientation_checker() {
        let p = path(3);
        assert_eq!(verify_orientation(&p, &[(0, 1), (1, 2)]), Err(OrientationDefect::NotTransitive(0, 1, 2)));
        assert_eq!(verify_orientation(&p, &[(1, 0), (1, 2)]), Ok(()));
        assert_eq!(verify_orientation(&p, &[(1, 0)]), Err(OrientationDefect::Missing(1, 2)));
        assert_eq!(verify_orientation(&p, &[(0, 2)]), Err(OrientationDefect::NotAnEdge(0, 2)));
        assert_eq!(verify_orientation(&p, &[(0, 1), (1, 0)]), Err(OrientationDefect::BothWays(0, 1)));
    }

    #[test]
    fn forcing_checker_rejects_junk() {
        let c = cycle(5);
        assert!(!verify_forcing_cycle(&c, &[]));
        assert!(!verify_forcing_cycle(&c, &[(0, 1), (1, 0)]));
        assert!(!verify_forcing_cycle(&c, &[(0, 2), (2, 0)]));
    }

    #[test]
    fn permutation_and_interval() {
        assert!(is_permutation(&cycle(4)).holds());
        assert!(!is_permutation(&cycle(5)).holds());
        assert!(!is_interval(&cycle(4)).holds());
        assert!(is_interval(&path(5)).holds());
        assert!(is_interval(&complete(4)).holds());
        // the 6-cycle's complement is the prism, not a comparability graph
        assert!(!is_permutation(&cycle(6)).holds());
    }

    #[test]
    fn chordality() {
        let (ok, cert) = is_chordal(&path(6));
        assert!(ok);
        let ChordalCertificate::Elimination(order) = cert else { panic!() };
        assert!(verify_elimination(&path(6), &order));
        let (ok, cert) = is_chordal(&cycle(4));
        assert!(!ok);
        let ChordalCertificate::ChordlessCycle(c) = cert else { panic!() };
        assert_eq!(c.len(), 4);
        assert!(!is_chordal(&cycle(7)).0);
        assert!(!is_chordal(&petersen()).0);
        assert!(is_chordal(&complete(6)).0);
        assert!(is_chordal(&Graph::empty(3)).0);
    }

    #[test]
    fn cycle_checker() {
        let c = cycle(5);
        assert!(verify_chordless_cycle(&c, &[0, 1, 2, 3, 4]));
        assert!(!verify_chordless_cycle(&c, &[0, 1, 2]));
        assert!(!verify_chordless_cycle(&complete(4), &[0, 1, 2, 3]));
    }
}
