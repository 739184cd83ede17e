//! The interval-model construction whose gadgets the permutation reduction
//! reuses.
//!
//! Gadget windows of width 10 are laid out left to right: `H_1..H_n`
//! first, then `E_1..E_m`. For `e_j = v_i v_{i'}` with `i < i'`, the links
//! `L¹_{i,j}, L²_{i,j}` start on the `K''` side of `H_i` and end weakly on
//! the left of `E_j`; the links of `v_{i'}` start on `H_{i'}` and end
//! strongly on the left of `E_j`.

use super::params::{interval_parameters, ParamSet};
use super::perm::{check_source, gadget_size};
use super::{gadget_specs, registry_lines, SourceLayout};
use crate::error::{Error, Result};
use crate::gadget::{layout, GadgetSpec};
use crate::graph::{find_induced_subgraph_bounded, Graph};
use crate::label::{GadgetOwner, VertexLabel};
use crate::model::{Coord, Interval, IntervalModel, LabeledGraph};

#[derive(Clone, Debug)]
pub struct IntervalReduction {
    pub source: Graph,
    pub params: ParamSet,
    pub layout: SourceLayout,
    pub model: IntervalModel<VertexLabel>,
    pub gadgets: Vec<GadgetSpec>,
    /// Cubic source and the closed-form parameters for its size.
    pub sound: bool,
}

/// Builds the interval model. Without `force` the source must be cubic
/// and `params` must equal [`interval_parameters`]; with `force` any
/// positive sizes are accepted, which is how the scaled instances used for
/// recognition are made.
pub fn build_interval_reduction(g: &Graph, params: ParamSet, force: bool) -> Result<IntervalReduction> {
    let source_ok = check_source(g, &params, force)?;
    let expected = interval_parameters(g.vertex_count() as u64)?;
    if !force && params != expected {
        return Err(Error::Precondition(format!(
            "interval construction for n = {} needs parameters {expected}, got {params}",
            g.vertex_count()
        )));
    }
    let layout = SourceLayout::new(g, None, None)?;
    let gadgets = gadget_specs(
        &layout,
        gadget_size(params.p, "p")?,
        gadget_size(params.q, "q")?,
        gadget_size(params.p_e, "p'")?,
        gadget_size(params.q_e, "q'")?,
    )?;
    let mut model = IntervalModel::new();
    for (k, spec) in gadgets.iter().enumerate() {
        for (label, iv) in spec.intervals(layout::WIDTH * k as i64) {
            model.insert(label, iv)?;
        }
    }
    let n = layout.n();
    for j in 1..=layout.m() {
        let (lo, hi) = layout.edge(j);
        let edge_base = Coord::int(window_base(n, GadgetOwner::Edge(j)));
        for (i, end) in [(lo, layout::weak_left()), (hi, layout::strong_left())] {
            let start = Coord::int(window_base(n, GadgetOwner::Vertex(i))) + layout::weak_right();
            for order in [1, 2] {
                model.insert(VertexLabel::link(order, i, j), Interval::new(start, edge_base + end))?;
            }
        }
    }
    Ok(IntervalReduction {
        source: g.clone(),
        params,
        layout,
        model,
        gadgets,
        sound: source_ok && params == expected,
    })
}

/// Left end of the gadget window of `owner` when the source has `n`
/// vertices.
pub fn window_base(n: usize, owner: GadgetOwner) -> i64 {
    let k = match owner {
        GadgetOwner::Vertex(i) => i - 1,
        GadgetOwner::Edge(j) => n + j - 1,
    };
    layout::WIDTH * k as i64
}

impl IntervalReduction {
    pub fn n(&self) -> usize {
        self.layout.n()
    }

    pub fn m(&self) -> usize {
        self.layout.m()
    }

    /// Intersection graph; vertex ids follow model insertion order.
    pub fn realize(&self) -> LabeledGraph<VertexLabel> {
        self.model.realize()
    }

    pub fn registry(&self) -> Vec<(String, String)> {
        registry_lines(&self.layout, self.model.entries().iter().map(|(l, _)| l))
    }

    /// Labels of `H_i`, `H_{i'}`, `E_j` and the four links of
    /// `e_j = v_i v_{i'}`.
    pub fn hint_region(&self, j: usize) -> Result<Vec<VertexLabel>> {
        if j == 0 || j > self.m() {
            return Err(Error::Precondition(format!("edge index {j} out of range 1..={}", self.m())));
        }
        let (lo, hi) = self.layout.edge(j);
        let mut out = Vec::new();
        for spec in [&self.gadgets[lo - 1], &self.gadgets[hi - 1], &self.gadgets[self.n() + j - 1]] {
            out.extend(spec.all_labels());
        }
        for i in [lo, hi] {
            for order in [1, 2] {
                out.push(VertexLabel::link(order, i, j));
            }
        }
        Ok(out)
    }
}

/// Largest pattern accepted by [`locate_x34`].
pub const X34_PATTERN_BOUND: usize = 16;

/// Induced embedding of `pattern` into the subgraph of `host` induced by
/// the `hint` labels. The result maps each pattern vertex to a host id.
pub fn locate_x34(
    host: &LabeledGraph<VertexLabel>,
    pattern: &Graph,
    hint: &[VertexLabel],
) -> Result<Option<Vec<usize>>> {
    let ids: Vec<usize> = hint.iter().map(|l| host.require(l)).collect::<Result<_>>()?;
    let region = host.graph.induced(&ids)?;
    let found = find_induced_subgraph_bounded(&region, pattern, X34_PATTERN_BOUND)?;
    Ok(found.map(|m| m.into_iter().map(|k| ids[k]).collect()))
}
