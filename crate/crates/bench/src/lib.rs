//! Shared inputs for the benchmarks.

use permcut::graph::named::{complete, k33, petersen, prism};
use permcut::reduction::params::closed_form_parameters;
use permcut::reduction::perm::{build_reduction, BuildOptions, ReductionArtifact};
use permcut::{Graph, ParamSet};

/// The cubic sources used across benchmarks, with short names.
pub fn cubic_sources() -> Vec<(&'static str, Graph)> {
    vec![("k4", complete(4)), ("prism", prism()), ("k33", k33()), ("petersen", petersen())]
}

/// Permutation reduction of `g` with every gadget size set to `scale`.
pub fn scaled(g: &Graph, scale: u64) -> ReductionArtifact {
    build_reduction(g, ParamSet::uniform(scale), BuildOptions::forced()).expect("scaled reduction")
}

/// Permutation reduction of `g` with the closed-form parameters.
pub fn full_size(g: &Graph) -> ReductionArtifact {
    let params = closed_form_parameters(g.vertex_count() as u64).expect("n >= 4");
    build_reduction(g, params, BuildOptions::default()).expect("sound reduction")
}
