//! The permutation-model reduction.
//!
//! For a cubic source graph with orders `v_1..v_n` and `e_1..e_m`:
//!
//! ```text
//! π¹_i = K'_i S'_i S''_i C_i K''_i          π²_i = S'_i ←K''_i ←K'_i S''_i
//! γ¹_j = K'ᵉ_j L²_{i',j} L¹_{i',j} S'ᵉ_j L²_{i,j} L¹_{i,j} S''ᵉ_j K''ᵉ_j
//! γ²_j = S'ᵉ_j ←K''ᵉ_j ←K'ᵉ_j S''ᵉ_j
//! Π  = π¹_1 … π¹_n γ²_1 … γ²_m
//! Π' = π²_1 … π²_n γ¹_1 … γ¹_m
//! ```
//!
//! where `e_j = v_i v_{i'}` with `i < i'` and `C_i` lists `L¹_{i,j} L²_{i,j}`
//! for the edges at `v_i` in ascending `j`. Vertex ids of the realized graph
//! are positions in `Π`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::params::{alpha_phi, validate_parameters, Alphas, ConstraintReport, ParamSet};
use super::{gadget_specs, registry_lines, SourceLayout};
use crate::error::{Error, Result};
use crate::gadget::{
    classify_relation, lemma_conclusions, respects_structure, CliqueSide, Conclusions, GadgetSpec, GadgetVertices, Relation, StrongSide,
};
use crate::graph::{Cut, Graph};
use crate::label::{GadgetOwner, Part, VertexLabel};
use crate::model::{LabeledGraph, PermSequence, PermutationModel};

/// Construction switches. `force` admits non-cubic sources, `n < 4` and
/// parameter sets violating the soundness constraints; the artifact is then
/// marked unsound.
#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    pub vertex_order: Option<Vec<usize>>,
    pub edge_order: Option<Vec<usize>>,
    pub force: bool,
}

impl BuildOptions {
    pub fn forced() -> Self {
        BuildOptions {
            force: true,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub source: Graph,
    pub params: ParamSet,
    pub layout: SourceLayout,
    pub model: PermutationModel<VertexLabel>,
    /// `H_1..H_n` then `E_1..E_m`
    pub gadgets: Vec<GadgetSpec>,
    pub constraints: ConstraintReport,
    /// Cubic source, `n >= 4` and every constraint satisfied.
    pub sound: bool,
}

/// Which kind of vertex a reduction-graph vertex is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    VertexGadget,
    EdgeGadget,
    Link,
}

fn region_of(l: &VertexLabel) -> Region {
    match l.owner() {
        Some(GadgetOwner::Vertex(_)) => Region::VertexGadget,
        Some(GadgetOwner::Edge(_)) => Region::EdgeGadget,
        None => Region::Link,
    }
}

pub(crate) fn gadget_size(v: u64, what: &str) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Precondition(format!("{what} = {v} does not fit in memory")))
}

/// Checks shared by both constructions; returns whether the source itself
/// is admissible for a sound instance.
pub(crate) fn check_source(g: &Graph, params: &ParamSet, force: bool) -> Result<bool> {
    if !params.is_positive() {
        return Err(Error::Precondition(format!("parameters must be positive, got {params}")));
    }
    let cubic = g.is_regular(3);
    let big_enough = g.vertex_count() >= 4;
    if !force {
        if !cubic {
            return Err(Error::Precondition("source graph is not cubic".into()));
        }
        if !big_enough {
            return Err(Error::Precondition("source graph needs at least 4 vertices".into()));
        }
    }
    Ok(cubic && big_enough)
}

pub fn build_reduction(g: &Graph, params: ParamSet, opts: BuildOptions) -> Result<ReductionArtifact> {
    let source_ok = check_source(g, &params, opts.force)?;
    let layout = SourceLayout::new(g, opts.vertex_order, opts.edge_order)?;
    let (n, m) = (layout.n(), layout.m());
    let constraints = validate_parameters(n as u64, m as u64, &params);
    if !opts.force && !constraints.sound {
        let failing: Vec<&str> = constraints.failing().collect();
        return Err(Error::Precondition(format!(
            "parameters {params} violate: {}",
            failing.join(", ")
        )));
    }
    let gadgets = gadget_specs(
        &layout,
        gadget_size(params.p, "p")?,
        gadget_size(params.q, "q")?,
        gadget_size(params.p_e, "p'")?,
        gadget_size(params.q_e, "q'")?,
    )?;
    let (vertex_gadgets, edge_gadgets) = gadgets.split_at(n);

    let total: usize = gadgets.iter().map(GadgetSpec::vertex_count).sum::<usize>() + 4 * m;
    let mut pi = Vec::with_capacity(total);
    let mut pi_prime = Vec::with_capacity(total);
    for (idx, h) in vertex_gadgets.iter().enumerate() {
        let i = idx + 1;
        pi.extend(h.labels(Part::KPrime));
        pi.extend(h.labels(Part::SPrime));
        pi.extend(h.labels(Part::SDoublePrime));
        for &j in layout.incident(i) {
            pi.push(VertexLabel::link(1, i, j));
            pi.push(VertexLabel::link(2, i, j));
        }
        pi.extend(h.labels(Part::KDoublePrime));
        pi_prime.extend(h.second_sequence().items().iter().copied());
    }
    for (idx, e) in edge_gadgets.iter().enumerate() {
        let j = idx + 1;
        let (lo, hi) = layout.edge(j);
        pi.extend(e.second_sequence().items().iter().copied());
        pi_prime.extend(e.labels(Part::KPrime));
        pi_prime.push(VertexLabel::link(2, hi, j));
        pi_prime.push(VertexLabel::link(1, hi, j));
        pi_prime.extend(e.labels(Part::SPrime));
        pi_prime.push(VertexLabel::link(2, lo, j));
        pi_prime.push(VertexLabel::link(1, lo, j));
        pi_prime.extend(e.labels(Part::SDoublePrime));
        pi_prime.extend(e.labels(Part::KDoublePrime));
    }
    let model = PermutationModel::new(PermSequence::new(pi)?, PermSequence::new(pi_prime)?)?;
    Ok(ReductionArtifact {
        source: g.clone(),
        params,
        layout,
        model,
        gadgets,
        sound: source_ok && constraints.sound,
        constraints,
    })
}

/// `n(2p + 2q) + m(2p' + 2q') + 4m`.
pub fn expected_vertex_count(n: u64, m: u64, params: &ParamSet) -> u64 {
    n * (2 * params.p + 2 * params.q) + m * (2 * params.p_e + 2 * params.q_e) + 4 * m
}

/// The Karp map `(G, k) ↦ (G', φ(n, m, k))`.
pub fn decide_instance(g: &Graph, k: u64, params: ParamSet, opts: BuildOptions) -> Result<(ReductionArtifact, u64)> {
    let artifact = build_reduction(g, params, opts)?;
    let threshold = artifact.alphas(k)?.phi;
    Ok((artifact, threshold))
}

/// Cut edges split by where they sit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionCounts {
    /// at least one endpoint in a vertex gadget
    pub vertex_gadget_edges: u64,
    /// at least one endpoint in an edge gadget, none in a vertex gadget
    pub edge_gadget_edges: u64,
    /// both endpoints link vertices
    pub link_link_edges: u64,
}

impl RegionCounts {
    pub fn total(&self) -> u64 {
        self.vertex_gadget_edges + self.edge_gadget_edges + self.link_link_edges
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    /// `(i, j)` where `K''_i` sits in one part and a link of `(v_i, e_j)`
    /// is in the same part.
    pub property1_violations: Vec<(usize, usize)>,
    /// `j` where both lower-endpoint links of `e_j` share a part with some
    /// vertex of `S'ᵉ_j`.
    pub property2_violations: Vec<usize>,
    /// lemma conclusions per gadget, in gadget order
    pub conclusions: Vec<(GadgetOwner, Conclusions)>,
}

impl PropertyReport {
    pub fn properties_hold(&self) -> bool {
        self.property1_violations.is_empty() && self.property2_violations.is_empty()
    }

    pub fn conclusions_hold(&self) -> bool {
        self.conclusions.iter().all(|(_, c)| c.all())
    }

    pub fn all_hold(&self) -> bool {
        self.properties_hold() && self.conclusions_hold()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutAudit {
    /// bit `v` set iff source vertex `v` is in `X`
    pub x_mask: u64,
    pub k: u64,
    pub exact: u64,
    pub lower: u64,
    pub upper: u64,
    pub ok: bool,
    pub regions: RegionCounts,
    /// `|A ∩ L| · |B ∩ L|`, which is `36|X||Y|` for cubic sources
    pub link_pairs: u64,
    /// opposite-part link pairs that are non-adjacent by the link rules
    pub link_non_adjacent: u64,
    /// `link_link_edges == link_pairs - link_non_adjacent`
    pub link_identity_ok: bool,
    /// `link_link_edges <= link_pairs <= 9n²`
    pub link_bound_ok: bool,
    /// `vertex_gadget_edges == α1` and `edge_gadget_edges == α2 + 2q'k`
    pub formula_ok: bool,
    pub properties_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub all_sandwich: bool,
    pub all_link_identity: bool,
    pub all_link_bound: bool,
    pub all_formula: bool,
    pub all_properties: bool,
    pub strictly_monotone_in_k: bool,
}

impl AuditSummary {
    pub fn ok(&self) -> bool {
        self.all_sandwich
            && self.all_link_identity
            && self.all_link_bound
            && self.all_formula
            && self.all_properties
            && self.strictly_monotone_in_k
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub n: u64,
    pub m: u64,
    pub params: ParamSet,
    pub sound: bool,
    pub vertices: u64,
    pub edges: u64,
    pub alpha1: u64,
    pub alpha2: u64,
    pub nine_n_squared: u64,
    pub rows: Vec<CutAudit>,
    pub summary: AuditSummary,
}

/// Structural facts of a realized reduction measured against the
/// construction rules. Mismatch lists hold human-readable descriptions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureAudit {
    pub vertices: u64,
    pub expected_vertices: u64,
    pub unstructured_gadgets: Vec<String>,
    pub relation_mismatches: Vec<String>,
    pub cross_gadget_edges: u64,
    pub link_mismatches: Vec<String>,
}

impl StructureAudit {
    pub fn ok(&self) -> bool {
        self.vertices == self.expected_vertices
            && self.unstructured_gadgets.is_empty()
            && self.relation_mismatches.is_empty()
            && self.cross_gadget_edges == 0
            && self.link_mismatches.is_empty()
    }
}

/// Largest source for which all `2^n` cuts are audited.
pub const MAX_AUDIT_VERTICES: usize = 24;

impl ReductionArtifact {
    pub fn n(&self) -> usize {
        self.layout.n()
    }

    pub fn m(&self) -> usize {
        self.layout.m()
    }

    pub fn vertex_count(&self) -> usize {
        self.model.len()
    }

    /// Vertex id (position in `Π`) of a label.
    pub fn id(&self, l: &VertexLabel) -> Option<usize> {
        self.model.pi().position(l)
    }

    pub fn require(&self, l: &VertexLabel) -> Result<usize> {
        self.id(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))
    }

    pub fn labels(&self) -> &[VertexLabel] {
        self.model.pi().items()
    }

    pub fn realize(&self) -> LabeledGraph<VertexLabel> {
        self.model.realize()
    }

    pub fn alphas(&self, k: u64) -> Result<Alphas> {
        alpha_phi(self.n() as u64, self.m() as u64, &self.params, k)
    }

    pub fn gadget(&self, owner: GadgetOwner) -> Option<&GadgetSpec> {
        let idx = match owner {
            GadgetOwner::Vertex(i) if (1..=self.n()).contains(&i) => i - 1,
            GadgetOwner::Edge(j) if (1..=self.m()).contains(&j) => self.n() + j - 1,
            _ => return None,
        };
        self.gadgets.get(idx)
    }

    pub fn gadget_vertices(&self, spec: &GadgetSpec) -> Result<GadgetVertices> {
        let ids = |p: Part| spec.labels(p).map(|l| self.require(&l)).collect::<Result<Vec<_>>>();
        Ok(GadgetVertices {
            k_prime: ids(Part::KPrime)?,
            k_double_prime: ids(Part::KDoublePrime)?,
            s_prime: ids(Part::SPrime)?,
            s_double_prime: ids(Part::SDoublePrime)?,
        })
    }

    pub fn link_labels(&self) -> Vec<VertexLabel> {
        self.layout.link_labels().collect()
    }

    /// `(label, role)` rows sorted by label string.
    pub fn registry(&self) -> Vec<(String, String)> {
        registry_lines(&self.layout, self.labels().iter())
    }

    /// How `link` should meet the gadget of `owner`, from the construction
    /// rules alone:
    ///
    /// * own vertex gadget `H_i`: weak on `K''_i`;
    /// * `H_k` with `k > i`: covered; `k < i`: untouched;
    /// * own edge gadget `E_j`: strong on `K'ᵉ ∪ S'ᵉ` from the lower
    ///   endpoint, weak on `K'ᵉ` from the upper endpoint;
    /// * `E_k` with `k < j`: covered; `k > j`: untouched.
    pub fn link_adjacency_expected(&self, link: &VertexLabel, owner: GadgetOwner) -> Result<Relation> {
        let VertexLabel::Link { vertex: i, edge: j, .. } = *link else {
            return Err(Error::BadLabel(link.to_string()));
        };
        if !self.layout.is_valid_link(link) || self.gadget(owner).is_none() {
            return Err(Error::UnknownLabel(format!("{link} / {owner}")));
        }
        use std::cmp::Ordering::*;
        Ok(match owner {
            GadgetOwner::Vertex(k) => match k.cmp(&i) {
                Equal => Relation::Weak(CliqueSide::KDoublePrime),
                Greater => Relation::Covers,
                Less => Relation::Disjoint,
            },
            GadgetOwner::Edge(k) => match k.cmp(&j) {
                Equal if self.layout.is_lower_endpoint(i, j) => Relation::Strong(StrongSide::Left),
                Equal => Relation::Weak(CliqueSide::KPrime),
                Less => Relation::Covers,
                Greater => Relation::Disjoint,
            },
        })
    }

    /// Link-to-link adjacency from the construction rules: links of one
    /// edge form a clique, links of one vertex on different edges are
    /// non-adjacent, otherwise `L_{i,j}` and `L_{i',j'}` are adjacent iff
    /// `i < i'` and `j > j'` disagree in direction.
    pub fn links_adjacent_expected(a: &VertexLabel, b: &VertexLabel) -> bool {
        match (*a, *b) {
            (
                VertexLabel::Link { vertex: i1, edge: j1, .. },
                VertexLabel::Link { vertex: i2, edge: j2, .. },
            ) => {
                if a == b {
                    false
                } else if j1 == j2 {
                    true
                } else if i1 == i2 {
                    false
                } else {
                    (i1 < i2) != (j1 < j2)
                }
            }
            _ => false,
        }
    }

    /// Checks every gadget's shape, every link/gadget relation, every
    /// link pair and the absence of gadget-to-gadget edges.
    pub fn audit_structure(&self, realized: &LabeledGraph<VertexLabel>) -> Result<StructureAudit> {
        let g = &realized.graph;
        let mut audit = StructureAudit {
            vertices: g.vertex_count() as u64,
            expected_vertices: expected_vertex_count(self.n() as u64, self.m() as u64, &self.params),
            unstructured_gadgets: Vec::new(),
            relation_mismatches: Vec::new(),
            cross_gadget_edges: 0,
            link_mismatches: Vec::new(),
        };
        let links = self.link_labels();
        let link_ids: Vec<usize> = links.iter().map(|l| realized.require(l)).collect::<Result<_>>()?;
        for spec in &self.gadgets {
            let h = spec.resolve(realized)?;
            if !respects_structure(g, &h).respects {
                audit.unstructured_gadgets.push(spec.owner.to_string());
            }
            for (l, &u) in links.iter().zip(&link_ids) {
                let got = classify_relation(g, &h, u)?;
                let want = self.link_adjacency_expected(l, spec.owner)?;
                if got != want {
                    audit.relation_mismatches.push(format!("{l} on {}: {got:?}, expected {want:?}", spec.owner));
                }
            }
        }
        audit.cross_gadget_edges = g
            .edges()
            .filter(|&(u, v)| {
                matches!((realized.label(u).owner(), realized.label(v).owner()), (Some(x), Some(y)) if x != y)
            })
            .count() as u64;
        for (a, (la, &u)) in links.iter().zip(&link_ids).enumerate() {
            for (lb, &v) in links.iter().zip(&link_ids).skip(a + 1) {
                if g.has_edge(u, v) != Self::links_adjacent_expected(la, lb) {
                    audit.link_mismatches.push(format!("{la} {lb}"));
                }
            }
        }
        Ok(audit)
    }

    /// The canonical cut `f(X, Y)` of the reduction graph, with `X` read
    /// as part `A` of `source_cut`.
    pub fn canonical_cut(&self, source_cut: &Cut) -> Result<Cut> {
        let x = self.layout.x_side(source_cut)?;
        let mut in_b = vec![false; self.vertex_count()];
        let mut put = |l: VertexLabel, b: bool| {
            in_b[self.id(&l).expect("label of this artifact")] = b;
        };
        for (idx, spec) in self.gadgets[..self.n()].iter().enumerate() {
            let i = idx + 1;
            // v_i ∈ X: K' ∪ S'' ∪ L(v_i) → A, K'' ∪ S' → B
            let b = !x[idx];
            for l in spec.labels(Part::KPrime).chain(spec.labels(Part::SDoublePrime)) {
                put(l, b);
            }
            for l in spec.labels(Part::KDoublePrime).chain(spec.labels(Part::SPrime)) {
                put(l, !b);
            }
            for &j in self.layout.incident(i) {
                put(VertexLabel::link(1, i, j), b);
                put(VertexLabel::link(2, i, j), b);
            }
        }
        for (idx, spec) in self.gadgets[self.n()..].iter().enumerate() {
            let (lo, _) = self.layout.edge(idx + 1);
            // K'ᵉ ∪ S''ᵉ follows L¹ of the lower endpoint
            let b = !x[lo - 1];
            for l in spec.labels(Part::KPrime).chain(spec.labels(Part::SDoublePrime)) {
                put(l, b);
            }
            for l in spec.labels(Part::KDoublePrime).chain(spec.labels(Part::SPrime)) {
                put(l, !b);
            }
        }
        Ok(Cut::from_membership(in_b))
    }

    fn check_cut_len(&self, cut: &Cut) -> Result<()> {
        if cut.len() != self.vertex_count() {
            return Err(Error::InvalidCut(format!(
                "cut covers {} vertices, reduction graph has {}",
                cut.len(),
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Evaluates the link-placement properties and the gadget lemma
    /// conclusions on an arbitrary cut of the reduction graph.
    pub fn check_cut_properties(&self, cut: &Cut) -> Result<PropertyReport> {
        self.check_cut_len(cut)?;
        let side = |l: VertexLabel| cut.in_b(self.id(&l).expect("label of this artifact"));
        let uniform = |mut labels: &mut dyn Iterator<Item = VertexLabel>| -> Option<bool> {
            let first = side(labels.next()?);
            Iterator::all(&mut labels, |l| side(l) == first).then_some(first)
        };
        let mut property1_violations = Vec::new();
        for (idx, spec) in self.gadgets[..self.n()].iter().enumerate() {
            let i = idx + 1;
            let Some(k_side) = uniform(&mut spec.labels(Part::KDoublePrime)) else {
                continue;
            };
            for &j in self.layout.incident(i) {
                if side(VertexLabel::link(1, i, j)) == k_side || side(VertexLabel::link(2, i, j)) == k_side {
                    property1_violations.push((i, j));
                }
            }
        }
        let mut property2_violations = Vec::new();
        for (idx, spec) in self.gadgets[self.n()..].iter().enumerate() {
            let j = idx + 1;
            let (lo, _) = self.layout.edge(j);
            let (s1, s2) = (side(VertexLabel::link(1, lo, j)), side(VertexLabel::link(2, lo, j)));
            if s1 != s2 {
                continue;
            }
            if spec.labels(Part::SPrime).any(|l| side(l) == s1) {
                property2_violations.push(j);
            }
        }
        let conclusions = self
            .gadgets
            .iter()
            .map(|spec| Ok((spec.owner, lemma_conclusions(&self.gadget_vertices(spec)?, cut))))
            .collect::<Result<_>>()?;
        Ok(PropertyReport {
            property1_violations,
            property2_violations,
            conclusions,
        })
    }

    fn regions(&self) -> Vec<Region> {
        self.labels().iter().map(region_of).collect()
    }

    /// Cut edges of the realized graph bucketed by region.
    pub fn region_counts(&self, realized: &Graph, cut: &Cut) -> Result<RegionCounts> {
        self.check_cut_len(cut)?;
        if realized.vertex_count() != self.vertex_count() {
            return Err(Error::Precondition("realized graph does not match the artifact".into()));
        }
        Ok(count_regions(&self.regions(), realized, cut))
    }

    /// Canonical cut of `source_cut`, counted on the realized graph and
    /// checked against `[φ, φ + 9n²]`.
    pub fn audit_canonical_cut(&self, realized: &Graph, source_cut: &Cut) -> Result<CutAudit> {
        self.audit_with(&self.regions(), realized, source_cut)
    }

    fn audit_with(&self, regions: &[Region], realized: &Graph, source_cut: &Cut) -> Result<CutAudit> {
        let cut = self.canonical_cut(source_cut)?;
        if realized.vertex_count() != self.vertex_count() {
            return Err(Error::Precondition("realized graph does not match the artifact".into()));
        }
        let k = self.source.cut_size(source_cut)? as u64;
        let counts = count_regions(regions, realized, &cut);
        let exact = realized.cut_size(&cut)? as u64;
        debug_assert_eq!(exact, counts.total());
        let alphas = self.alphas(k)?;
        let n = self.n() as u64;
        let nine_n2 = 9 * n * n;
        let lower = alphas.phi;
        let upper = alphas.phi + nine_n2;

        let links = self.link_labels();
        let (in_a, in_b): (Vec<&VertexLabel>, Vec<&VertexLabel>) = links
            .iter()
            .partition(|l| cut.in_a(self.id(l).expect("link of this artifact")));
        let link_pairs = (in_a.len() * in_b.len()) as u64;
        let link_non_adjacent = in_a
            .iter()
            .flat_map(|a| in_b.iter().map(move |b| (a, b)))
            .filter(|(a, b)| !Self::links_adjacent_expected(a, b))
            .count() as u64;

        let x_mask = (0..self.source.vertex_count())
            .filter(|&v| source_cut.in_a(v))
            .fold(0u64, |acc, v| acc | 1 << v);
        let zero = self.alphas(0)?;
        Ok(CutAudit {
            x_mask,
            k,
            exact,
            lower,
            upper,
            ok: lower <= exact && exact <= upper,
            regions: counts,
            link_pairs,
            link_non_adjacent,
            link_identity_ok: counts.link_link_edges + link_non_adjacent == link_pairs,
            link_bound_ok: counts.link_link_edges <= link_pairs && link_pairs <= nine_n2,
            formula_ok: counts.vertex_gadget_edges == zero.alpha1
                && counts.edge_gadget_edges == zero.alpha2 + 2 * self.params.q_e * k,
            properties_ok: self.check_cut_properties(&cut)?.all_hold(),
        })
    }

    /// Audits the canonical cut of every source cut `X ⊆ V(G)`. Rows are
    /// ordered by `X` bitmask; the work is spread over threads.
    pub fn audit_all_cuts(&self, realized: &Graph) -> Result<AuditReport> {
        let n = self.source.vertex_count();
        if n > MAX_AUDIT_VERTICES {
            return Err(Error::SizeLimit {
                n,
                limit: MAX_AUDIT_VERTICES,
            });
        }
        let regions = self.regions();
        let rows: Vec<CutAudit> = (0..1u64 << n)
            .into_par_iter()
            .map(|mask| {
                // mask lists X; Cut::from_mask puts set bits in B
                let source_cut = Cut::from_mask(n, mask).swapped();
                self.audit_with(&regions, realized, &source_cut)
            })
            .collect::<Result<_>>()?;
        let alphas = self.alphas(0)?;
        let summary = AuditSummary {
            all_sandwich: rows.iter().all(|r| r.ok),
            all_link_identity: rows.iter().all(|r| r.link_identity_ok),
            all_link_bound: rows.iter().all(|r| r.link_bound_ok),
            all_formula: rows.iter().all(|r| r.formula_ok),
            all_properties: rows.iter().all(|r| r.properties_ok),
            strictly_monotone_in_k: strictly_monotone(&rows),
        };
        let n = n as u64;
        Ok(AuditReport {
            n,
            m: self.m() as u64,
            params: self.params,
            sound: self.sound,
            vertices: realized.vertex_count() as u64,
            edges: realized.edge_count() as u64,
            alpha1: alphas.alpha1,
            alpha2: alphas.alpha2,
            nine_n_squared: 9 * n * n,
            rows,
            summary,
        })
    }
}

fn count_regions(regions: &[Region], realized: &Graph, cut: &Cut) -> RegionCounts {
    let mut c = RegionCounts::default();
    for (u, v) in realized.edges() {
        if !cut.separates(u, v) {
            continue;
        }
        match (regions[u], regions[v]) {
            (Region::VertexGadget, _) | (_, Region::VertexGadget) => c.vertex_gadget_edges += 1,
            (Region::EdgeGadget, _) | (_, Region::EdgeGadget) => c.edge_gadget_edges += 1,
            _ => c.link_link_edges += 1,
        }
    }
    c
}

/// Every cut with larger `k` has a strictly larger canonical cut size.
fn strictly_monotone(rows: &[CutAudit]) -> bool {
    let mut by_k: std::collections::BTreeMap<u64, (u64, u64)> = Default::default();
    for r in rows {
        let e = by_k.entry(r.k).or_insert((u64::MAX, 0));
        e.0 = e.0.min(r.exact);
        e.1 = e.1.max(r.exact);
    }
    let levels: Vec<(u64, u64)> = by_k.into_values().collect();
    levels.windows(2).all(|w| w[0].1 < w[1].0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, cycle};

    fn k4(params: ParamSet) -> ReductionArtifact {
        build_reduction(&complete(4), params, BuildOptions::forced()).unwrap()
    }

    #[test]
    fn sizes() {
        let a = k4(ParamSet::uniform(1));
        assert_eq!(a.vertex_count(), 64);
        assert_eq!(expected_vertex_count(4, 6, &ParamSet::uniform(1)), 64);
        assert!(!a.sound);
        assert_eq!(expected_vertex_count(4, 6, &ParamSet::new(520, 241, 200, 81)), 9484);
    }

    #[test]
    fn preconditions() {
        let sound = ParamSet::new(520, 241, 200, 81);
        assert!(build_reduction(&cycle(5), sound, BuildOptions::default()).is_err());
        assert!(build_reduction(&complete(4), ParamSet::uniform(1), BuildOptions::default()).is_err());
        assert!(build_reduction(&complete(4), ParamSet::new(0, 1, 1, 1), BuildOptions::forced()).is_err());
        let a = build_reduction(&complete(4), sound, BuildOptions::default()).unwrap();
        assert!(a.sound);
        let c = build_reduction(&cycle(5), ParamSet::uniform(1), BuildOptions::forced()).unwrap();
        assert!(!c.sound);
    }

    #[test]
    fn sequences_for_one_edge() {
        let a = k4(ParamSet::uniform(1));
        let pi: Vec<String> = a.model.pi().items()[..10].iter().map(|l| l.to_string()).collect();
        assert_eq!(
            pi,
            ["H1.Kp.1", "H1.Sp.1", "H1.Spp.1", "L1.1.1", "L2.1.1", "L1.1.2", "L2.1.2", "L1.1.3", "L2.1.3", "H1.Kpp.1"]
        );
        let tail: Vec<String> = a.model.pi_prime().items()[16..24].iter().map(|l| l.to_string()).collect();
        assert_eq!(
            tail,
            ["E1.Kp.1", "L2.2.1", "L1.2.1", "E1.Sp.1", "L2.1.1", "L1.1.1", "E1.Spp.1", "E1.Kpp.1"]
        );
    }

    #[test]
    fn spot_adjacencies() {
        let a = k4(ParamSet::uniform(2));
        let g = a.realize();
        let e = |x: &str, y: &str| g.has_edge_labels(&x.parse().unwrap(), &y.parse().unwrap()).unwrap();
        assert!(e("L1.1.1", "L2.1.1"));
        assert!(e("L1.1.1", "L1.2.1") && e("L2.1.1", "L2.2.1") && e("L1.1.1", "L2.2.1"));
        assert!(!e("L1.1.1", "L1.1.2") && !e("L2.1.1", "L1.1.3"));
        for l in a.link_labels() {
            for m in a.link_labels() {
                if l != m {
                    assert_eq!(
                        g.has_edge_labels(&l, &m).unwrap(),
                        ReductionArtifact::links_adjacent_expected(&l, &m),
                        "{l} {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn link_rules() {
        let a = k4(ParamSet::uniform(1));
        let l = |s: &str| s.parse::<VertexLabel>().unwrap();
        assert_eq!(
            a.link_adjacency_expected(&l("L1.1.1"), GadgetOwner::Vertex(1)).unwrap(),
            Relation::Weak(CliqueSide::KDoublePrime)
        );
        assert_eq!(
            a.link_adjacency_expected(&l("L1.1.1"), GadgetOwner::Edge(1)).unwrap(),
            Relation::Strong(StrongSide::Left)
        );
        assert_eq!(
            a.link_adjacency_expected(&l("L1.2.1"), GadgetOwner::Edge(1)).unwrap(),
            Relation::Weak(CliqueSide::KPrime)
        );
        assert_eq!(
            a.link_adjacency_expected(&l("L1.2.1"), GadgetOwner::Vertex(3)).unwrap(),
            Relation::Covers
        );
        assert_eq!(
            a.link_adjacency_expected(&l("L1.2.4"), GadgetOwner::Edge(1)).unwrap(),
            Relation::Covers
        );
        assert_eq!(
            a.link_adjacency_expected(&l("L1.2.1"), GadgetOwner::Edge(4)).unwrap(),
            Relation::Disjoint
        );
        assert!(a.link_adjacency_expected(&l("L1.3.1"), GadgetOwner::Edge(1)).is_err());
        assert!(a.link_adjacency_expected(&l("H1.Kp.1"), GadgetOwner::Edge(1)).is_err());
    }

    #[test]
    fn canonical_cut_placement() {
        let a = k4(ParamSet::uniform(2));
        let x = Cut::from_part_a(4, [0, 1]).unwrap();
        let cut = a.canonical_cut(&x).unwrap();
        let side = |s: &str| cut.in_a(a.id(&s.parse().unwrap()).unwrap());
        assert!(side("H1.Kp.1") && side("H1.Spp.2") && !side("H1.Kpp.1") && !side("H1.Sp.1"));
        assert!(side("L1.1.1") && side("L2.1.3"));
        assert!(!side("H3.Kp.1") && side("H3.Kpp.2") && !side("L1.3.2"));
        // e_1 = v1v2 with L¹_{1,1} ∈ A
        assert!(side("E1.Kp.1") && side("E1.Spp.1") && !side("E1.Sp.1") && !side("E1.Kpp.2"));
        // e_4 = v2v3: L¹_{2,4} ∈ A
        assert!(side("E4.Kp.1"));
        // e_6 = v3v4: L¹_{3,6} ∈ B
        assert!(!side("E6.Kp.1") && side("E6.Sp.1"));
        assert!(a.check_cut_properties(&cut).unwrap().all_hold());
        assert!(a.canonical_cut(&Cut::all_a(3)).is_err());
    }

    #[test]
    fn property_violations_detected() {
        let a = k4(ParamSet::uniform(2));
        let mut cut = a.canonical_cut(&Cut::all_a(4)).unwrap();
        // v1 ∈ X: K''_1 ⊆ B, links in A. Move K''_1 into A.
        for t in 1..=2 {
            cut.set(a.id(&format!("H1.Kpp.{t}").parse().unwrap()).unwrap(), false);
        }
        let r = a.check_cut_properties(&cut).unwrap();
        assert_eq!(r.property1_violations, vec![(1, 1), (1, 2), (1, 3)]);
        assert!(!r.conclusions_hold());

        let mut cut = a.canonical_cut(&Cut::all_a(4)).unwrap();
        for t in 1..=2 {
            cut.set(a.id(&format!("E2.Sp.{t}").parse().unwrap()).unwrap(), false);
        }
        let r = a.check_cut_properties(&cut).unwrap();
        assert_eq!(r.property2_violations, vec![2]);

        let r = a.check_cut_properties(&Cut::all_a(a.vertex_count())).unwrap();
        assert!(r.conclusions.iter().all(|(_, c)| c.as_array() == [false; 3]));
    }

    #[test]
    fn monotone_helper() {
        let row = |k, exact| CutAudit {
            x_mask: 0,
            k,
            exact,
            lower: 0,
            upper: 0,
            ok: true,
            regions: RegionCounts::default(),
            link_pairs: 0,
            link_non_adjacent: 0,
            link_identity_ok: true,
            link_bound_ok: true,
            formula_ok: true,
            properties_ok: true,
        };
        assert!(strictly_monotone(&[row(0, 5), row(1, 7), row(1, 6), row(3, 8)]));
        assert!(!strictly_monotone(&[row(0, 5), row(1, 7), row(2, 7)]));
    }
}
