use anyhow::{bail, Result};
use permcut::gadget::{build_gadget, lemma_premises};
use permcut::graph::{find_induced_c4, text, Cut};
use permcut::model::ModelDocument;
use permcut::recognition::{
    is_chordal, is_comparability, is_interval, is_permutation, ChordalCertificate, OrientationCertificate,
};
use permcut::reduction::interval::build_interval_reduction;
use permcut::reduction::params::{alpha_phi, validate_parameters};
use permcut::reduction::perm::{build_reduction, expected_vertex_count, BuildOptions};
use permcut::reduction::registry_text;
use permcut::solvers::{census, max_cut_exact, max_cut_local, verify_parts};
use permcut::{GadgetOwner, Graph};
use serde_json::json;

use crate::input::{self, Labeled};
use crate::report::RunReport;
use crate::{
    Algo, AuditArgs, Command, Kind, Prop, RecognizeArgs, ReduceArgs, ReportArgs, SolveArgs, SourceArgs, VerifyCommand,
};

pub fn run(cmd: &Command, report: &mut RunReport) -> Result<()> {
    match cmd {
        Command::Reduce(a) => reduce(a, report),
        Command::Solve(a) => solve(a, report),
        Command::Verify { what } => verify(what, report),
        Command::Recognize(a) => recognize(a, report),
        Command::Audit(a) => audit(a, report),
        Command::Report(a) => numbers(a, report),
    }
}

fn reduce(a: &ReduceArgs, report: &mut RunReport) -> Result<()> {
    let g = input::read_graph(report, &a.graph)?;
    let default = match a.kind {
        Kind::Perm => "closed-form",
        Kind::Interval => "interval",
    };
    let params = input::params(a.params.as_deref().unwrap_or(default), g.vertex_count())?;
    report.params = Some(params);
    if a.graph_out.is_some() {
        let n = expected_vertex_count(g.vertex_count() as u64, g.edge_count() as u64, &params);
        input::ensure_realizable(usize::try_from(n)?)?;
    }
    let (doc, registry, realized, sound, kind) = match a.kind {
        Kind::Perm => {
            let art = build_reduction(&g, params, BuildOptions { force: a.force, ..Default::default() })?;
            let realized = a.graph_out.as_ref().map(|_| art.realize());
            (ModelDocument::from_permutation(&art.model), art.registry(), realized, art.sound, "perm")
        }
        Kind::Interval => {
            let ir = build_interval_reduction(&g, params, a.force)?;
            let realized = a.graph_out.as_ref().map(|_| ir.realize());
            (ModelDocument::from_interval(&ir.model), ir.registry(), realized, ir.sound, "interval")
        }
    };
    report.write_output(&a.out, doc.to_json().as_bytes())?;
    if let Some(path) = &a.registry {
        report.write_output(path, registry_text(&registry).as_bytes())?;
    }
    let mut edges = None;
    if let (Some(path), Some(r)) = (&a.graph_out, &realized) {
        let note = format!("{kind} reduction of {}; vertex k carries the k-th label of the model", a.graph.display());
        report.write_output(path, text::write(&r.graph, &[&note]).as_bytes())?;
        edges = Some(r.graph.edge_count());
    }
    report.result = json!({
        "kind": kind,
        "source_vertices": g.vertex_count(),
        "source_edges": g.edge_count(),
        "vertices": registry.len(),
        "edges": edges,
        "sound": sound,
        "constraints": validate_parameters(g.vertex_count() as u64, g.edge_count() as u64, &params),
    });
    eprintln!("{kind} reduction: {} vertices, sound: {sound}", registry.len());
    Ok(())
}

fn solve(a: &SolveArgs, report: &mut RunReport) -> Result<()> {
    let input = input::load(report, &a.input)?;
    let r = match a.algo {
        Algo::Exact => max_cut_exact(&input.graph, a.limit)?,
        Algo::Local => max_cut_local(&input.graph, a.seed, a.restarts),
    };
    report.result = json!({
        "size": r.size,
        "exact": r.exact,
        "seed": r.seed,
        "restarts": r.restarts,
        "part_a": input.names(r.cut.part_a()),
    });
    eprintln!("max cut {}{}", if r.exact { "" } else { ">= " }, r.size);
    Ok(())
}

fn verify(what: &VerifyCommand, report: &mut RunReport) -> Result<()> {
    match what {
        VerifyCommand::Gadget { x, y, weak, limit } => {
            let (spec, perm, interval) = build_gadget(*x, *y, GadgetOwner::Vertex(1))?;
            let direct = spec.direct_graph();
            let agree = perm.realize().same_labeled_graph(&direct) && interval.realize().same_labeled_graph(&direct);
            let h = spec.resolve(&direct)?;
            let g = if *weak {
                let n = direct.graph.vertex_count();
                let mut edges: Vec<(usize, usize)> = direct.graph.edges().collect();
                edges.extend(h.k_prime.iter().map(|&v| (v, n)));
                Graph::from_edges(n + 1, &edges)?
            } else {
                direct.graph.clone()
            };
            let premises = lemma_premises(&g, &h)?;
            let c = census(&g, &h, *limit)?;
            report.verdict("representations_agree", agree);
            report.verdict("premises", premises.premises_hold());
            report.verdict("conclusions", c.violations == 0);
            report.result = json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "premises": premises,
                "census": c,
            });
            eprintln!("max cut {}, {} optimal, {} violating", c.max, c.optimal, c.violations);
        }
        VerifyCommand::Structure(args) => {
            let art = build(report, args)?;
            let audit = art.audit_structure(&art.realize())?;
            report.verdict("structure", audit.ok());
            report.result = serde_json::to_value(&audit)?;
        }
        VerifyCommand::Cut { input, part_a, size } => {
            let input = input::load(report, input)?;
            let a: Vec<usize> = part_a.iter().map(|l| input.find(l)).collect::<Result<_>>()?;
            let cut = Cut::from_part_a(input.graph.vertex_count(), a.iter().copied())?;
            let counted = input.graph.cut_size(&cut)?;
            let holds = verify_parts(&input.graph, &cut.part_a(), &cut.part_b(), *size);
            report.verdict("cut_size", holds);
            report.result = json!({ "claimed": size, "counted": counted });
            eprintln!("claimed {size}, counted {counted}");
        }
        VerifyCommand::Formula { source, x } => {
            let art = build(report, source)?;
            let n = art.n();
            if let Some(bad) = x.iter().find(|&&v| v == 0 || v > n) {
                bail!("vertex {bad} outside 1..={n}");
            }
            let source_cut = Cut::from_part_a(n, x.iter().map(|v| v - 1))?;
            let realized = art.realize();
            let row = art.audit_canonical_cut(&realized.graph, &source_cut)?;
            let alphas = art.alphas(row.k)?;
            report.verdict("formula", row.formula_ok);
            report.result = json!({
                "k": row.k,
                "alpha1": alphas.alpha1,
                "alpha2": alphas.alpha2,
                "edge_gadget_expected": alphas.alpha2 + 2 * art.params.q_e * row.k,
                "counted": row.regions,
            });
            eprintln!(
                "vertex gadgets {} (alpha1 {}), edge gadgets {} (alpha2 + 2q'k {})",
                row.regions.vertex_gadget_edges,
                alphas.alpha1,
                row.regions.edge_gadget_edges,
                alphas.alpha2 + 2 * art.params.q_e * row.k
            );
        }
    }
    Ok(())
}

fn build(report: &mut RunReport, args: &SourceArgs) -> Result<permcut::ReductionArtifact> {
    let (g, params) = input::source(report, args)?;
    let art = build_reduction(&g, params, BuildOptions { force: args.force, ..Default::default() })?;
    input::ensure_realizable(art.vertex_count())?;
    Ok(art)
}

fn orientation_witness(input: &Labeled, cert: &OrientationCertificate) -> serde_json::Value {
    match cert {
        OrientationCertificate::Orientation(_) => serde_json::Value::Null,
        OrientationCertificate::ForcingCycle(chain) => json!({ "forcing_cycle": input.arcs(chain) }),
    }
}

fn recognize(a: &RecognizeArgs, report: &mut RunReport) -> Result<()> {
    let input = input::load(report, &a.input)?;
    let g = &input.graph;
    let (name, holds, witness) = match a.prop {
        Prop::Comparability => {
            let (ok, cert) = is_comparability(g);
            ("comparability", ok, orientation_witness(&input, &cert))
        }
        Prop::Permutation => {
            let v = is_permutation(g);
            let witness = if !v.graph.is_orientation() {
                json!({ "graph": orientation_witness(&input, &v.graph) })
            } else if !v.complement.is_orientation() {
                json!({ "complement": orientation_witness(&input, &v.complement) })
            } else {
                serde_json::Value::Null
            };
            ("permutation", v.holds(), witness)
        }
        Prop::Chordal => {
            let (ok, cert) = is_chordal(g);
            let witness = match cert {
                ChordalCertificate::ChordlessCycle(c) => json!({ "chordless_cycle": input.names(c) }),
                ChordalCertificate::Elimination(_) => serde_json::Value::Null,
            };
            ("chordal", ok, witness)
        }
        Prop::Interval => {
            let v = is_interval(g);
            let witness = match &v.c4 {
                Some(c) => json!({ "induced_c4": input.names(*c) }),
                None => json!({ "complement": orientation_witness(&input, &v.complement) }),
            };
            let holds = v.holds();
            ("interval", holds, if holds { serde_json::Value::Null } else { witness })
        }
        Prop::C4 => {
            let found = find_induced_c4(g);
            let witness = found.map_or(serde_json::Value::Null, |c| json!({ "induced_c4": input.names(c) }));
            ("c4_free", found.is_none(), witness)
        }
    };
    report.verdict(name, holds);
    report.result = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "witness": witness,
    });
    Ok(())
}

fn audit(a: &AuditArgs, report: &mut RunReport) -> Result<()> {
    let art = build(report, &a.source)?;
    let realized = art.realize();
    let audit = art.audit_all_cuts(&realized.graph)?;
    drop(realized);
    let s = &audit.summary;
    for (name, holds) in [
        ("sandwich", s.all_sandwich),
        ("link_identity", s.all_link_identity),
        ("link_bound", s.all_link_bound),
        ("formula", s.all_formula),
        ("properties", s.all_properties),
        ("strictly_monotone_in_k", s.strictly_monotone_in_k),
    ] {
        report.verdict(name, holds);
    }
    let mut doc = serde_json::to_string_pretty(&audit)?;
    doc.push('\n');
    if let Some(path) = &a.out {
        report.write_output(path, doc.as_bytes())?;
    }
    eprintln!("{} vertices, {} cuts audited", audit.vertices, audit.rows.len());
    report.result = serde_json::to_value(&audit)?;
    Ok(())
}

fn numbers(a: &ReportArgs, report: &mut RunReport) -> Result<()> {
    let g = input::read_graph(report, &a.graph)?;
    let (n, m) = (g.vertex_count() as u64, g.edge_count() as u64);
    let params = input::params(&a.params, g.vertex_count())?;
    report.params = Some(params);
    let zero = alpha_phi(n, m, &params, 0)?;
    let phi: Vec<serde_json::Value> = (0..=m)
        .map(|k| alpha_phi(n, m, &params, k).map(|al| json!({ "k": k, "phi": al.phi })))
        .collect::<permcut::Result<_>>()?;
    report.result = json!({
        "n": n,
        "m": m,
        "constraints": validate_parameters(n, m, &params),
        "alpha1": zero.alpha1,
        "alpha2": zero.alpha2,
        "phi": phi,
    });
    eprintln!("n {n}, m {m}, alpha1 {}, alpha2 {}", zero.alpha1, zero.alpha2);
    Ok(())
}
