use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

use pcc_core::construct::{
    color_2connected, color_cartesian, color_complete_bipartite, color_complete_multipartite,
    color_hypercube, color_join, color_permutation_graph, color_traceable, color_tree, color_wheel,
    ConstructionReport,
};
use pcc_core::exact::{min_colors_exact, ExactOutcome, SearchBudget};
use pcc_core::graph::{
    cartesian_product, join, permutation_graph, read_coloring, read_graph, write_coloring,
    write_graph,
};
use pcc_core::structure::hamiltonian_path;
use pcc_core::verify::{verify_coloring, verify_coloring_with, VerifyOptions};
use pcc_core::{Family, Graph, Permutation, WindowParam};

use crate::args::{ColorArgs, ExactArgs, FamilyArgs, FamilyName, GenerateArgs, Method, VerifyArgs};
use crate::{CmdResult, Failure};

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn need(value: Option<usize>, flag: &str, family: FamilyName) -> Result<usize, Failure> {
    value.ok_or_else(|| usage(format!("--{flag} is required for {family:?}")))
}

pub(crate) fn seconds(s: f64) -> Result<Duration, Failure> {
    Duration::try_from_secs_f64(s)
        .ok()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| usage(format!("time limit must be positive, got {s}")))
}

pub(crate) fn window(ell: usize) -> Result<WindowParam, Failure> {
    Ok(WindowParam::new(ell)?)
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

pub(crate) fn write_text(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    read_graph(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key} {value}");
}

/// Translates a family name plus flags into a generator spec.
fn family_spec(family: FamilyName, p: &FamilyArgs) -> Result<Family, Failure> {
    use FamilyName as F;
    Ok(match family {
        F::Path => Family::Path { n: need(p.n, "n", family)? },
        F::Cycle => Family::Cycle { n: need(p.n, "n", family)? },
        F::Star => Family::Star { n: need(p.n, "n", family)? },
        F::Wheel => Family::Wheel { n: need(p.n, "n", family)? },
        F::Complete => Family::Complete { n: need(p.n, "n", family)? },
        F::CompleteBipartite => Family::CompleteBipartite {
            m: need(p.m, "m", family)?,
            n: need(p.n, "n", family)?,
        },
        F::CompleteMultipartite => Family::CompleteMultipartite {
            parts: p.parts.clone().ok_or_else(|| usage("--parts is required for CompleteMultipartite"))?,
        },
        F::Hypercube => Family::Hypercube { t: need(p.t, "t", family)? },
        F::DoubleStar => Family::DoubleStar {
            a: need(p.a, "a", family)?,
            b: need(p.b, "b", family)?,
        },
        F::RandomTree => Family::RandomTree {
            n: need(p.n, "n", family)?,
            seed: p.seed,
        },
        F::Random2Connected => {
            let n = need(p.n, "n", family)?;
            Family::Random2Connected {
                n,
                m: p.m.unwrap_or(n + n / 2),
                seed: p.seed,
            }
        }
    })
}

pub fn generate(a: &GenerateArgs, out: &mut dyn Write) -> CmdResult {
    let g = generate_graph(&family_spec(a.family, &a.params)?)?;
    write_text(&a.output, &write_graph(&g))?;
    emit(out, "n", g.n());
    emit(out, "m", g.m());
    Ok(())
}

fn generate_graph(spec: &Family) -> Result<Graph, Failure> {
    Ok(pcc_core::graph::generate(spec)?)
}

fn ham_path(g: &Graph) -> Result<Vec<usize>, Failure> {
    hamiltonian_path(g).ok_or_else(|| usage("graph has no Hamiltonian path"))
}

fn require_ell2(ell: WindowParam, what: &str) -> CmdResult {
    if ell.get() == 2 {
        Ok(())
    } else {
        Err(usage(format!("{what} coloring is defined for --ell 2 only")))
    }
}

/// The colored graph and its construction for `--family` mode. Family
/// constructors build the same graph as the generator.
fn color_family(family: FamilyName, p: &FamilyArgs, ell: WindowParam) -> Result<(Graph, ConstructionReport), Failure> {
    let spec = family_spec(family, p)?;
    let g = generate_graph(&spec)?;
    let report = match &spec {
        // K_n has singleton parts as a complete multipartite graph.
        Family::Complete { n } if *n >= 3 => color_complete_multipartite(&vec![1; *n], ell)?,
        Family::Path { .. } | Family::Cycle { .. } | Family::Complete { .. } => {
            color_traceable(&g, &ham_path(&g)?, ell)?
        }
        Family::Star { .. } | Family::DoubleStar { .. } | Family::RandomTree { .. } => color_tree(&g, ell)?,
        Family::Wheel { n } => color_wheel(*n, ell)?,
        Family::CompleteBipartite { m, n } => color_complete_bipartite(*m, *n, ell)?,
        Family::CompleteMultipartite { parts } => {
            if parts.windows(2).any(|w| w[0] > w[1]) {
                return Err(usage("--parts must be sorted ascending"));
            }
            color_complete_multipartite(parts, ell)?
        }
        Family::Hypercube { t } => color_hypercube(*t, ell)?,
        Family::Random2Connected { .. } => {
            require_ell2(ell, "2-connected")?;
            color_2connected(&g)?
        }
    };
    Ok((g, report))
}

fn color_input(a: &ColorArgs, method: Method, ell: WindowParam) -> Result<(Graph, ConstructionReport), Failure> {
    let g = load_graph(a.input.as_deref().expect("clap enforces --input with --method"))?;
    let other = || -> Result<Graph, Failure> {
        let path = a
            .other
            .as_deref()
            .ok_or_else(|| usage(format!("--other is required for method {method:?}")))?;
        load_graph(path)
    };
    let separate_output = matches!(method, Method::Join | Method::Cartesian | Method::Permutation);
    if separate_output && a.graph_out.is_none() {
        return Err(usage(format!("--graph-out is required for method {method:?}")));
    }
    Ok(match method {
        Method::Traceable => {
            let path = ham_path(&g)?;
            let r = color_traceable(&g, &path, ell)?;
            (g, r)
        }
        Method::Tree => {
            let r = color_tree(&g, ell)?;
            (g, r)
        }
        Method::TwoConnected => {
            require_ell2(ell, "2-connected")?;
            let r = color_2connected(&g)?;
            (g, r)
        }
        Method::Join => {
            require_ell2(ell, "join")?;
            let h = other()?;
            let r = color_join(&g, &h)?;
            (join(&g, &h), r)
        }
        Method::Cartesian => {
            require_ell2(ell, "cartesian")?;
            let h = other()?;
            let r = color_cartesian(&g, &h)?;
            (cartesian_product(&g, &h), r)
        }
        Method::Permutation => {
            let alpha = a
                .alpha
                .as_deref()
                .ok_or_else(|| usage("--alpha is required for method Permutation"))?;
            let alpha = Permutation::from_one_indexed(alpha)?;
            let path = ham_path(&g)?;
            let r = color_permutation_graph(&g, &path, &alpha, ell)?;
            (permutation_graph(&g, &alpha)?, r)
        }
    })
}

pub fn color(a: &ColorArgs, out: &mut dyn Write) -> CmdResult {
    let ell = window(a.ell)?;
    let (graph, report) = match (a.family, a.method) {
        (Some(f), _) => color_family(f, &a.params, ell)?,
        (None, Some(m)) => color_input(a, m, ell)?,
        (None, None) => return Err(usage("give --family or --input with --method")),
    };
    let cert = verify_coloring(&graph, &report.coloring, ell, 1)?;
    if let Some((u, v)) = cert.failing_pair {
        return Err(Failure::Negative(format!(
            "{} construction failed to verify: no distance-{} proper path between {u} and {v}",
            report.theorem,
            ell.get()
        )));
    }
    write_text(&a.output, &write_coloring(&graph, &report.coloring))?;
    if let Some(path) = &a.graph_out {
        write_text(path, &write_graph(&graph))?;
    }
    emit(out, "theorem", report.theorem);
    emit(out, "case", &report.notes);
    emit(out, "colors", report.coloring.num_colors());
    emit(out, "claimed", report.claimed_colors);
    emit(out, "verified", true);
    Ok(())
}

pub fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let ell = window(a.ell)?;
    let graph = load_graph(&a.graph)?;
    let coloring = read_coloring(&read_text(&a.coloring)?, &graph)
        .map_err(|e| usage(format!("{}: {e}", a.coloring.display())))?;
    let options = VerifyOptions {
        pair_budget: a.time_limit.map(seconds).transpose()?,
    };
    let cert = verify_coloring_with(&graph, &coloring, ell, a.k, &options)?;
    if let Some((u, v)) = cert.failing_pair {
        emit(out, "failing_pair", format_args!("{u} {v}"));
        return Err(Failure::Negative(format!(
            "vertices {u} and {v} are not joined by {} distance-{} proper path(s)",
            a.k,
            ell.get()
        )));
    }
    if !cert.timed_out.is_empty() {
        let (u, v) = cert.timed_out[0];
        emit(out, "timed_out", cert.timed_out.len());
        return Err(Failure::Negative(format!(
            "{} pair(s) ran out of time, first {u} {v}",
            cert.timed_out.len()
        )));
    }
    emit(out, "ok", format_args!("{} pairs", cert.witnesses.len()));
    Ok(())
}

pub fn exact(a: &ExactArgs, out: &mut dyn Write) -> CmdResult {
    let ell = window(a.ell)?;
    let graph = load_graph(&a.graph)?;
    let budget = SearchBudget::default()
        .with_max_colors(a.max_colors)
        .with_max_edges(a.max_edges)
        .with_time_limit(Some(seconds(a.time_limit)?));
    match min_colors_exact(&graph, ell, &budget)? {
        ExactOutcome::Found(r) => {
            emit(out, "min_colors", r.min_colors);
            emit(out, "colorings_examined", r.colorings_examined);
            if let Some(path) = &a.output {
                write_text(path, &write_coloring(&graph, &r.witness))?;
            }
            Ok(())
        }
        ExactOutcome::Inconclusive {
            exhausted, limit, ..
        } => {
            let lower = exhausted.last().map_or(1, |t| t + 1);
            emit(out, "inconclusive", format_args!("{limit:?}"));
            emit(out, "lower_bound", lower);
            Err(Failure::Negative(format!(
                "search stopped on its {limit:?} budget; at least {lower} colors are needed"
            )))
        }
    }
}
