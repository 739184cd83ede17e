//! `(x, y)`-grained gadgets: construction in three representations, the
//! ways an outside vertex may meet a gadget, and the premises/conclusions
//! of the gadget's max-cut lemma.
//!
//! A gadget is a split graph with clique `K' ∪ K''` (`|K'| = |K''| = y`)
//! and stable set `S' ∪ S''` (`|S'| = |S''| = x`), where `K'` is complete to
//! `S'`, `K''` is complete to `S''`, and there are no other edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph};
use crate::label::{GadgetOwner, Part, VertexLabel};
use crate::model::{Coord, Interval, IntervalModel, LabeledGraph, PermSequence, PermutationModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GadgetSpec {
    pub owner: GadgetOwner,
    /// size of each stable side
    pub x: usize,
    /// size of each clique side
    pub y: usize,
}

/// Offsets inside a width-10 gadget window.
pub mod layout {
    use crate::model::{Coord, Interval};

    pub const WIDTH: i64 = 10;

    /// Right endpoint for a link that weakly meets the gadget on its `K'`
    /// side.
    pub fn weak_left() -> Coord {
        Coord::new(3, 2)
    }

    /// Right endpoint for a link that strongly meets the gadget on its
    /// `K' ∪ S'` side.
    pub fn strong_left() -> Coord {
        Coord::new(7, 2)
    }

    /// Left endpoint for a link that weakly meets the gadget on its `K''`
    /// side.
    pub fn weak_right() -> Coord {
        Coord::new(17, 2)
    }

    pub fn k_prime() -> Interval {
        Interval::new(Coord::int(1), Coord::int(6))
    }

    pub fn k_double_prime() -> Interval {
        Interval::new(Coord::int(4), Coord::int(9))
    }

    /// Member `t` (1-based) of a stable side with `x` members starting at
    /// `start`: disjoint slivers of `[start, start + 1)`.
    pub fn stable_member(start: i64, t: usize, x: usize) -> Interval {
        let den = 2 * x as i64;
        let t = t as i64;
        Interval::new(
            Coord::int(start) + Coord::new(2 * t - 2, den),
            Coord::int(start) + Coord::new(2 * t - 1, den),
        )
    }
}

impl GadgetSpec {
    pub fn new(owner: GadgetOwner, x: usize, y: usize) -> Result<Self> {
        if x == 0 || y == 0 {
            return Err(Error::GadgetSize { x: x as u64, y: y as u64 });
        }
        Ok(GadgetSpec { owner, x, y })
    }

    pub fn part_size(&self, part: Part) -> usize {
        if part.is_clique_side() {
            self.y
        } else {
            self.x
        }
    }

    pub fn vertex_count(&self) -> usize {
        2 * (self.x + self.y)
    }

    /// `C(2y, 2) + 2xy`.
    pub fn edge_count(&self) -> usize {
        self.y * (2 * self.y - 1) + 2 * self.x * self.y
    }

    pub fn labels(&self, part: Part) -> impl Iterator<Item = VertexLabel> + '_ {
        (1..=self.part_size(part)).map(move |t| VertexLabel::gadget(self.owner, part, t))
    }

    pub fn all_labels(&self) -> impl Iterator<Item = VertexLabel> + '_ {
        Part::ALL.into_iter().flat_map(move |p| self.labels(p))
    }

    /// The part, in ascending member order, as a sequence.
    pub fn sequence(&self, part: Part) -> PermSequence<VertexLabel> {
        PermSequence::new(self.labels(part).collect()).expect("gadget labels are unique")
    }

    /// `K' S' S'' K''`.
    pub fn first_sequence(&self) -> PermSequence<VertexLabel> {
        use Part::*;
        PermSequence::concat_all(&[
            self.sequence(KPrime),
            self.sequence(SPrime),
            self.sequence(SDoublePrime),
            self.sequence(KDoublePrime),
        ])
        .expect("parts are disjoint")
    }

    /// `S' ←K'' ←K' S''`.
    pub fn second_sequence(&self) -> PermSequence<VertexLabel> {
        use Part::*;
        PermSequence::concat_all(&[
            self.sequence(SPrime),
            self.sequence(KDoublePrime).reverse(),
            self.sequence(KPrime).reverse(),
            self.sequence(SDoublePrime),
        ])
        .expect("parts are disjoint")
    }

    pub fn permutation_model(&self) -> PermutationModel<VertexLabel> {
        PermutationModel::new(self.first_sequence(), self.second_sequence())
            .expect("both sequences cover the gadget")
    }

    /// Intervals of the gadget placed in the window starting at `base`.
    pub fn intervals(&self, base: i64) -> Vec<(VertexLabel, Interval)> {
        let shift = Coord::int(base);
        let mut out = Vec::with_capacity(self.vertex_count());
        for part in Part::ALL {
            for (k, label) in self.labels(part).enumerate() {
                let iv = match part {
                    Part::KPrime => layout::k_prime(),
                    Part::KDoublePrime => layout::k_double_prime(),
                    Part::SPrime => layout::stable_member(2, k + 1, self.x),
                    Part::SDoublePrime => layout::stable_member(7, k + 1, self.x),
                };
                out.push((label, iv.shifted(shift)));
            }
        }
        out
    }

    pub fn interval_model(&self) -> IntervalModel<VertexLabel> {
        IntervalModel::from_entries(self.intervals(0)).expect("gadget labels are unique")
    }

    /// Edge-by-edge construction straight from the definition.
    pub fn direct_graph(&self) -> LabeledGraph<VertexLabel> {
        use Part::*;
        let labels: Vec<VertexLabel> = self.all_labels().collect();
        let offset = |p: Part| match p {
            KPrime => 0,
            KDoublePrime => self.y,
            SPrime => 2 * self.y,
            SDoublePrime => 2 * self.y + self.x,
        };
        let ids = |p: Part| offset(p)..offset(p) + self.part_size(p);
        let mut edges = Vec::with_capacity(self.edge_count());
        let clique: Vec<usize> = ids(KPrime).chain(ids(KDoublePrime)).collect();
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                edges.push((u, v));
            }
        }
        for (k, s) in [(KPrime, SPrime), (KDoublePrime, SDoublePrime)] {
            for u in ids(k) {
                for v in ids(s) {
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::from_edges(labels.len(), &edges).expect("definition yields a simple graph");
        LabeledGraph::new(graph, labels).expect("gadget labels are unique")
    }

    /// Vertex ids of the gadget's parts inside `g`.
    pub fn resolve(&self, g: &LabeledGraph<VertexLabel>) -> Result<GadgetVertices> {
        let ids = |p: Part| self.labels(p).map(|l| g.require(&l)).collect::<Result<Vec<_>>>();
        Ok(GadgetVertices {
            k_prime: ids(Part::KPrime)?,
            k_double_prime: ids(Part::KDoublePrime)?,
            s_prime: ids(Part::SPrime)?,
            s_double_prime: ids(Part::SDoublePrime)?,
        })
    }
}

/// Builds the `(x, y)`-grained gadget of `owner` together with its
/// permutation model and its interval model (window at 0).
pub fn build_gadget(
    x: usize,
    y: usize,
    owner: GadgetOwner,
) -> Result<(GadgetSpec, PermutationModel<VertexLabel>, IntervalModel<VertexLabel>)> {
    let spec = GadgetSpec::new(owner, x, y)?;
    Ok((spec, spec.permutation_model(), spec.interval_model()))
}

/// A gadget's parts as vertex ids of some host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetVertices {
    pub k_prime: Vec<usize>,
    pub k_double_prime: Vec<usize>,
    pub s_prime: Vec<usize>,
    pub s_double_prime: Vec<usize>,
}

impl GadgetVertices {
    pub fn part(&self, p: Part) -> &[usize] {
        match p {
            Part::KPrime => &self.k_prime,
            Part::KDoublePrime => &self.k_double_prime,
            Part::SPrime => &self.s_prime,
            Part::SDoublePrime => &self.s_double_prime,
        }
    }

    pub fn all(&self) -> impl Iterator<Item = usize> + '_ {
        Part::ALL.into_iter().flat_map(|p| self.part(p).iter().copied())
    }

    pub fn x(&self) -> usize {
        self.s_prime.len()
    }

    pub fn y(&self) -> usize {
        self.k_prime.len()
    }

    fn membership(&self, n: usize) -> Vec<bool> {
        let mut inside = vec![false; n];
        for v in self.all() {
            inside[v] = true;
        }
        inside
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CliqueSide {
    KPrime,
    KDoublePrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StrongSide {
    /// `K' ∪ S'`
    Left,
    /// `K'' ∪ S''`
    Right,
}

/// How an outside vertex meets a gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Disjoint,
    Covers,
    Weak(CliqueSide),
    Strong(StrongSide),
    /// None of the recognized patterns.
    Other,
}

impl Relation {
    pub fn is_structured(self) -> bool {
        self != Relation::Other
    }
}

/// Classifies `N(u) ∩ V(H)`.
pub fn classify_relation(g: &Graph, h: &GadgetVertices, u: usize) -> Result<Relation> {
    if h.all().any(|v| v == u) {
        return Err(Error::InsideGadget(u));
    }
    // bit k set: part Part::ALL[k] fully adjacent
    let mut full = 0u8;
    for (k, p) in Part::ALL.into_iter().enumerate() {
        let members = h.part(p);
        let hits = members.iter().filter(|&&v| g.has_edge(u, v)).count();
        if hits == members.len() {
            full |= 1 << k;
        } else if hits != 0 {
            return Ok(Relation::Other);
        }
    }
    const KP: u8 = 1;
    const KPP: u8 = 2;
    const SP: u8 = 4;
    const SPP: u8 = 8;
    Ok(match full {
        0 => Relation::Disjoint,
        15 => Relation::Covers,
        KP => Relation::Weak(CliqueSide::KPrime),
        KPP => Relation::Weak(CliqueSide::KDoublePrime),
        x if x == KP | SP => Relation::Strong(StrongSide::Left),
        x if x == KPP | SPP => Relation::Strong(StrongSide::Right),
        _ => Relation::Other,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub respects: bool,
    /// outside vertices classified as [`Relation::Other`], ascending
    pub violators: Vec<usize>,
}

/// Outside vertices adjacent to the gadget, ascending.
fn attached_vertices(g: &Graph, h: &GadgetVertices) -> Vec<usize> {
    let inside = h.membership(g.vertex_count());
    let mut seen = vec![false; g.vertex_count()];
    for v in h.all() {
        for &w in g.neighbors(v) {
            let w = w as usize;
            if !inside[w] {
                seen[w] = true;
            }
        }
    }
    (0..g.vertex_count()).filter(|&w| seen[w]).collect()
}

/// Whether every outside vertex is disjoint from, covers, weakly or
/// strongly meets the gadget.
pub fn respects_structure(g: &Graph, h: &GadgetVertices) -> StructureReport {
    let violators: Vec<usize> = attached_vertices(g, h)
        .into_iter()
        .filter(|&u| classify_relation(g, h, u) == Ok(Relation::Other))
        .collect();
    StructureReport {
        respects: violators.is_empty(),
        violators,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub x: usize,
    pub y: usize,
    /// outside vertices adjacent to the gadget
    pub t: usize,
    /// vertices adjacent to some vertex of `S'`
    pub ell: usize,
    /// vertices adjacent to some vertex of `S''`
    pub r: usize,
    pub parity: bool,
    pub clique_large: bool,
    pub stable_large: bool,
}

impl LemmaReport {
    pub fn premises_hold(&self) -> bool {
        self.parity && self.clique_large && self.stable_large
    }
}

fn neighborhood_union(g: &Graph, set: &[usize]) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    for &v in set {
        for &w in g.neighbors(v) {
            seen[w as usize] = true;
        }
    }
    seen.iter().filter(|&&s| s).count()
}

/// Counts `t`, `ℓ`, `r` and evaluates `ℓ, r odd`, `y > 2t`, `x > t + 2y`.
pub fn lemma_premises(g: &Graph, h: &GadgetVertices) -> Result<LemmaReport> {
    let structure = respects_structure(g, h);
    if !structure.respects {
        return Err(Error::StructureViolated(structure.violators.len()));
    }
    let t = attached_vertices(g, h).len();
    let ell = neighborhood_union(g, &h.s_prime);
    let r = neighborhood_union(g, &h.s_double_prime);
    let (x, y) = (h.x(), h.y());
    Ok(LemmaReport {
        x,
        y,
        t,
        ell,
        r,
        parity: ell % 2 == 1 && r % 2 == 1,
        clique_large: y > 2 * t,
        stable_large: x > t + 2 * y,
    })
}

/// The lemma's three conclusions for one cut. Each is a statement about
/// two parts lying in opposite sides, so the naming of `A` and `B` does
/// not matter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusions {
    pub s_prime_vs_k_prime: bool,
    pub s_double_prime_vs_k_double_prime: bool,
    pub k_prime_vs_k_double_prime: bool,
}

impl Conclusions {
    pub fn all(&self) -> bool {
        self.s_prime_vs_k_prime && self.s_double_prime_vs_k_double_prime && self.k_prime_vs_k_double_prime
    }

    pub fn as_array(&self) -> [bool; 3] {
        [
            self.s_prime_vs_k_prime,
            self.s_double_prime_vs_k_double_prime,
            self.k_prime_vs_k_double_prime,
        ]
    }
}

/// `Some(in_b)` when the whole set sits on one side.
fn uniform_side(cut: &Cut, set: &[usize]) -> Option<bool> {
    let first = cut.in_b(*set.first()?);
    set.iter().all(|&v| cut.in_b(v) == first).then_some(first)
}

fn opposite(cut: &Cut, a: &[usize], b: &[usize]) -> bool {
    matches!((uniform_side(cut, a), uniform_side(cut, b)), (Some(x), Some(y)) if x != y)
}

pub fn lemma_conclusions(h: &GadgetVertices, cut: &Cut) -> Conclusions {
    Conclusions {
        s_prime_vs_k_prime: opposite(cut, &h.s_prime, &h.k_prime),
        s_double_prime_vs_k_double_prime: opposite(cut, &h.s_double_prime, &h.k_double_prime),
        k_prime_vs_k_double_prime: opposite(cut, &h.k_prime, &h.k_double_prime),
    }
}
