//! Reductions from MaxCut on cubic graphs.
//!
//! Both constructions index source vertices `v_1..v_n` and edges
//! `e_1..e_m` through caller-chosen orders (input order by default) and
//! attach one grained gadget per vertex and per edge plus four link
//! vertices per edge.

pub mod interval;
pub mod params;
pub mod perm;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadget::GadgetSpec;
use crate::graph::{Cut, Graph};
use crate::label::{GadgetOwner, Part, VertexLabel};

/// Orders on the source graph and the resulting incidence structure, all
/// with one-based reduction indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceLayout {
    /// `vertex_order[i - 1]` is the source id of `v_i`.
    pub vertex_order: Vec<usize>,
    /// `edge_order[j - 1]` is the position of `e_j` in the source edge list.
    pub edge_order: Vec<usize>,
    /// `endpoints[j - 1] = (i, i')` with `i < i'`.
    pub endpoints: Vec<(usize, usize)>,
    /// `incident[i - 1]`: indices `j` of edges at `v_i`, ascending.
    pub incident: Vec<Vec<usize>>,
}

fn check_permutation(order: &[usize], len: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; len];
    if order.len() != len {
        return Err(Error::Precondition(format!("{what} order has {} entries, expected {len}", order.len())));
    }
    for &x in order {
        if x >= len || std::mem::replace(&mut seen[x], true) {
            return Err(Error::Precondition(format!("{what} order is not a permutation")));
        }
    }
    Ok(())
}

impl SourceLayout {
    pub fn new(g: &Graph, vertex_order: Option<Vec<usize>>, edge_order: Option<Vec<usize>>) -> Result<Self> {
        let n = g.vertex_count();
        let source_edges: Vec<(usize, usize)> = g.edges().collect();
        let vertex_order = vertex_order.unwrap_or_else(|| (0..n).collect());
        let edge_order = edge_order.unwrap_or_else(|| (0..source_edges.len()).collect());
        check_permutation(&vertex_order, n, "vertex")?;
        check_permutation(&edge_order, source_edges.len(), "edge")?;
        let mut index_of = vec![0; n];
        for (k, &v) in vertex_order.iter().enumerate() {
            index_of[v] = k + 1;
        }
        let mut incident = vec![Vec::new(); n];
        let endpoints = edge_order
            .iter()
            .enumerate()
            .map(|(k, &e)| {
                let (u, v) = source_edges[e];
                let (a, b) = (index_of[u], index_of[v]);
                incident[a - 1].push(k + 1);
                incident[b - 1].push(k + 1);
                (a.min(b), a.max(b))
            })
            .collect();
        Ok(SourceLayout {
            vertex_order,
            edge_order,
            endpoints,
            incident,
        })
    }

    pub fn n(&self) -> usize {
        self.vertex_order.len()
    }

    pub fn m(&self) -> usize {
        self.endpoints.len()
    }

    /// `(i, i')` of edge `e_j`.
    pub fn edge(&self, j: usize) -> (usize, usize) {
        self.endpoints[j - 1]
    }

    /// Edges at `v_i`, ascending.
    pub fn incident(&self, i: usize) -> &[usize] {
        &self.incident[i - 1]
    }

    /// Whether `v_i` is the lower-indexed endpoint of `e_j`.
    pub fn is_lower_endpoint(&self, i: usize, j: usize) -> bool {
        self.edge(j).0 == i
    }

    /// `X` membership by reduction index (`x[i - 1]`) from a source cut,
    /// reading `X` as part `A`.
    pub fn x_side(&self, source_cut: &Cut) -> Result<Vec<bool>> {
        if source_cut.len() != self.n() {
            return Err(Error::InvalidCut(format!(
                "source cut covers {} vertices, source graph has {}",
                source_cut.len(),
                self.n()
            )));
        }
        Ok(self.vertex_order.iter().map(|&v| source_cut.in_a(v)).collect())
    }

    /// Link labels in edge order: `L¹_{i,j}, L²_{i,j}, L¹_{i',j}, L²_{i',j}`.
    pub fn link_labels(&self) -> impl Iterator<Item = VertexLabel> + '_ {
        (1..=self.m()).flat_map(move |j| {
            let (i, i2) = self.edge(j);
            [
                VertexLabel::link(1, i, j),
                VertexLabel::link(2, i, j),
                VertexLabel::link(1, i2, j),
                VertexLabel::link(2, i2, j),
            ]
        })
    }

    /// Whether a label names a link of an incident `(v_i, e_j)` pair.
    pub fn is_valid_link(&self, label: &VertexLabel) -> bool {
        match *label {
            VertexLabel::Link { vertex, edge, .. } => {
                edge >= 1 && edge <= self.m() && {
                    let (a, b) = self.edge(edge);
                    vertex == a || vertex == b
                }
            }
            _ => false,
        }
    }

    /// Human-readable role of a label, used in registry files.
    pub fn role(&self, label: &VertexLabel) -> String {
        match *label {
            VertexLabel::Gadget { owner: GadgetOwner::Vertex(i), part, .. } => {
                format!("vertex-gadget v{i} (source {}) {}", self.vertex_order[i - 1] + 1, part_name(part))
            }
            VertexLabel::Gadget { owner: GadgetOwner::Edge(j), part, .. } => {
                let (a, b) = self.edge(j);
                format!("edge-gadget e{j} (v{a}v{b}) {}", part_name(part))
            }
            VertexLabel::Link { vertex, edge, .. } => {
                let end = if self.is_lower_endpoint(vertex, edge) { "lower" } else { "upper" };
                format!("link v{vertex} e{edge} {end}-endpoint")
            }
        }
    }
}

fn part_name(p: Part) -> &'static str {
    match p {
        Part::KPrime => "K'",
        Part::KDoublePrime => "K''",
        Part::SPrime => "S'",
        Part::SDoublePrime => "S''",
    }
}

/// One `(p, q)` gadget per vertex then one `(p', q')` gadget per edge.
pub(crate) fn gadget_specs(layout: &SourceLayout, p: usize, q: usize, p_e: usize, q_e: usize) -> Result<Vec<GadgetSpec>> {
    let vertex = (1..=layout.n()).map(|i| GadgetSpec::new(GadgetOwner::Vertex(i), p, q));
    let edge = (1..=layout.m()).map(|j| GadgetSpec::new(GadgetOwner::Edge(j), p_e, q_e));
    vertex.chain(edge).collect()
}

/// `label<TAB>role` lines sorted by label string.
pub(crate) fn registry_lines<'a>(layout: &SourceLayout, labels: impl Iterator<Item = &'a VertexLabel>) -> Vec<(String, String)> {
    let mut rows: Vec<(String, String)> = labels.map(|l| (l.to_string(), layout.role(l))).collect();
    rows.sort();
    rows
}

pub fn registry_text(rows: &[(String, String)]) -> String {
    let mut out = String::new();
    for (label, role) in rows {
        out.push_str(label);
        out.push('\t');
        out.push_str(role);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::complete;

    #[test]
    fn layout_of_k4() {
        let l = SourceLayout::new(&complete(4), None, None).unwrap();
        assert_eq!(l.endpoints, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(l.incident(1), &[1, 2, 3]);
        assert_eq!(l.incident(3), &[2, 4, 6]);
        assert!(l.is_lower_endpoint(1, 1));
        assert!(!l.is_lower_endpoint(2, 1));
        assert_eq!(l.link_labels().count(), 24);
        assert!(l.is_valid_link(&VertexLabel::link(1, 3, 2)));
        assert!(!l.is_valid_link(&VertexLabel::link(1, 2, 2)));
    }

    #[test]
    fn custom_orders() {
        let l = SourceLayout::new(&complete(4), Some(vec![3, 2, 1, 0]), Some(vec![5, 4, 3, 2, 1, 0])).unwrap();
        // source edge (2,3) comes first; v_1 = source 3, v_2 = source 2
        assert_eq!(l.edge(1), (1, 2));
        assert_eq!(l.edge(6), (3, 4));
        assert!(SourceLayout::new(&complete(4), Some(vec![0, 0, 1, 2]), None).is_err());
        assert!(SourceLayout::new(&complete(4), None, Some(vec![0, 1])).is_err());
    }
}
