use anyhow::{bail, Context, Result};
use permcut::graph::{text, MAX_VERTICES};
use permcut::model::ModelDocument;
use permcut::reduction::params::ParamChoice;
use permcut::{Graph, ParamSet};

use crate::report::RunReport;
use crate::{GraphInput, SourceArgs};

/// A graph with one display label per vertex.
pub struct Labeled {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl Labeled {
    pub fn names(&self, ids: impl IntoIterator<Item = usize>) -> Vec<String> {
        ids.into_iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn arcs(&self, arcs: &[(usize, usize)]) -> Vec<(String, String)> {
        arcs.iter().map(|&(u, v)| (self.labels[u].clone(), self.labels[v].clone())).collect()
    }

    pub fn find(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .with_context(|| format!("no vertex labeled {label:?}"))
    }
}

/// Refuses realizations too large for the dense pair matrix.
pub fn ensure_realizable(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        bail!("realizing {n} vertices exceeds the limit of {MAX_VERTICES}; use smaller parameters");
    }
    Ok(())
}

pub fn read_graph(report: &mut RunReport, path: &std::path::Path) -> Result<Graph> {
    let text = report.read_input_text(path)?;
    text::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn load(report: &mut RunReport, input: &GraphInput) -> Result<Labeled> {
    match (&input.graph, &input.model) {
        (Some(path), None) => {
            let graph = read_graph(report, path)?;
            let labels = (1..=graph.vertex_count()).map(|v| v.to_string()).collect();
            Ok(Labeled { graph, labels })
        }
        (None, Some(path)) => {
            let text = report.read_input_text(path)?;
            let doc = ModelDocument::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
            let n = match &doc {
                ModelDocument::Permutation { pi, .. } => pi.len(),
                ModelDocument::Interval { intervals, .. } => intervals.len(),
            };
            ensure_realizable(n)?;
            let realized = doc.into_model::<String>()?.realize();
            Ok(Labeled {
                labels: realized.labels().to_vec(),
                graph: realized.graph,
            })
        }
        _ => bail!("give exactly one of --graph and --model"),
    }
}

pub fn params(choice: &str, n: usize) -> Result<ParamSet> {
    let choice: ParamChoice = choice.parse()?;
    Ok(choice.resolve(n as u64)?)
}

/// Source graph and resolved parameters, recorded in the report.
pub fn source(report: &mut RunReport, args: &SourceArgs) -> Result<(Graph, ParamSet)> {
    let g = read_graph(report, &args.graph)?;
    let p = params(&args.params, g.vertex_count())?;
    report.params = Some(p);
    Ok((g, p))
}
