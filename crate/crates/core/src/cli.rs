//! Command-line front end. [`run`] parses arguments, executes one verb and
//! returns the process exit code: 0 on success, 1 when `verify` finds
//! violations, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classify::classify;
use crate::cohomology::poincare_polynomial;
use crate::error::{Error, Result};
use crate::graph::{build_hessenberg_graph_capped, interval_graph, DEFAULT_MAX_N};
use crate::hessenberg::{enumerate_admissible, is_admissible, HessenbergFunction};
use crate::patterns::{contains_hpattern, HPattern};
use crate::perm::Permutation;
use crate::roots::{
    build_root_system, classify_arbitrary, h_admissible_elements, partition_classes, tables,
    validate_hessenberg_space, weyl_type_subsets, z_and_w, CartanType, WeylGroup,
};
use crate::verify::{parse_suites, sweep_all, SweepOptions};

#[derive(Debug, Parser)]
#[command(
    name = "hessgkm",
    version,
    about = "GKM graphs of Hessenberg Schubert varieties"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Smoothness and irreducibility verdicts for one (h, w).
    Classify {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long)]
        w: Permutation,
    },
    /// All h-admissible permutations, in lexicographic order.
    EnumerateAdmissible {
        #[arg(long)]
        h: HessenbergFunction,
    },
    /// The GKM graph of Hess(s, h), or of its intersection with Ω_w.
    Graph {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long)]
        w: Option<Permutation>,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest n for which the full graph is built.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Betti numbers of Hess(s, h).
    Betti {
        #[arg(long)]
        h: HessenbergFunction,
    },
    /// Occurrences of the seven h-patterns in w.
    Patterns {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long)]
        w: Permutation,
    },
    /// Hessenberg spaces in arbitrary type.
    Roots {
        #[arg(long = "type")]
        cartan_type: CartanType,
        #[arg(long)]
        rank: usize,
        /// Roots of M, e.g. "a1,a2,a1+a2" or "[1,0],[0,1]"; all of Φ⁺ if omitted.
        #[arg(long)]
        m: Option<String>,
        /// Print the N(w) and S ↦ (W(S,H), z_S, w_S) tables.
        #[arg(long)]
        tables: bool,
        /// Classify one element, given as a word such as "s2s1".
        #[arg(long)]
        w: Option<String>,
    },
    /// Exhaustive checks. `--suite` takes "all" or a comma-separated list.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long)]
        budget_seconds: Option<f64>,
        /// Spread work over all cores.
        #[arg(long)]
        parallel: bool,
    },
}

/// Parses `args` (including the program name) and runs the verb.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn write_all(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes())
        .map_err(|e| Error::Internal(format!("write failed: {e}")))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value") + "\n"
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Classify { h, w } => {
            let r = classify(w, h)?;
            write_all(out, &if cli.json { r.to_json() } else { r.to_text() })?;
        }
        Command::EnumerateAdmissible { h } => {
            let adm = enumerate_admissible(h);
            let s = if cli.json {
                pretty(&json!({ "h": h, "admissible": adm }))
            } else {
                adm.iter().map(|w| format!("{w}\n")).collect()
            };
            write_all(out, &s)?;
        }
        Command::Graph {
            h,
            w,
            format,
            out: path,
            max_n,
        } => {
            let g = match w {
                Some(w) => interval_graph(h, w)?,
                None => build_hessenberg_graph_capped(h, *max_n)?,
            };
            let s = if cli.json || *format == GraphFormat::Json {
                g.to_json()
            } else {
                g.to_dot()
            };
            match path {
                Some(p) => fs::write(p, s).map_err(|e| {
                    Error::Precondition(format!("cannot write {}: {e}", p.display()))
                })?,
                None => write_all(out, &s)?,
            }
        }
        Command::Betti { h } => {
            let b = poincare_polynomial(h);
            let s = if cli.json {
                pretty(&json!({ "h": h, "betti": b }))
            } else {
                let terms: Vec<String> = b.iter().map(ToString::to_string).collect();
                format!("{}\n", terms.join(" "))
            };
            write_all(out, &s)?;
        }
        Command::Patterns { h, w } => {
            let admissible = is_admissible(w, h)?;
            let mut rows = Vec::new();
            for p in HPattern::ALL {
                rows.push((p, contains_hpattern(w, h, p)?.witness.map(|x| x.indices)));
            }
            let s = if cli.json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|(p, idx)| json!({ "pattern": p, "indices": idx }))
                    .collect();
                pretty(&json!({
                    "h": h,
                    "w": w,
                    "admissible": admissible,
                    "avoids": rows.iter().all(|(_, idx)| idx.is_none()),
                    "patterns": items,
                }))
            } else {
                let mut s = String::new();
                if !admissible {
                    s.push_str(
                        "note: w is not h-admissible; avoidance does not decide regularity here\n",
                    );
                }
                for (p, idx) in &rows {
                    match idx {
                        Some([i, j, k, l]) => s.push_str(&format!("{p}: ({i},{j},{k},{l})\n")),
                        None => s.push_str(&format!("{p}: avoided\n")),
                    }
                }
                s
            };
            write_all(out, &s)?;
        }
        Command::Roots {
            cartan_type,
            rank,
            m,
            tables: want_tables,
            w,
        } => {
            let rs = build_root_system(*cartan_type, *rank)?;
            let m = match m {
                Some(text) => rs.parse_root_list(text)?,
                None => rs.all_positive(),
            };
            let hs = validate_hessenberg_space(&rs, m)?;
            let group = WeylGroup::new(rs)?;
            write_all(
                out,
                &roots_output(&group, &hs, cli.json, *want_tables, w.as_deref())?,
            )?;
        }
        Command::Verify {
            suite,
            n_max,
            budget_seconds,
            parallel,
        } => {
            let suites = parse_suites(suite)?;
            let budget = match budget_seconds {
                Some(b) if !(b.is_finite() && *b >= 0.0) => {
                    return Err(Error::Precondition(
                        "--budget-seconds must be nonnegative".into(),
                    ))
                }
                Some(b) => Some(Duration::from_secs_f64(*b)),
                None => None,
            };
            let opts = SweepOptions {
                n_max: *n_max,
                budget,
                parallel: *parallel,
            };
            let results = sweep_all(&suites, &opts)?;
            let failed = results.iter().any(|r| !r.passed());
            let s = if cli.json {
                serde_json::to_string_pretty(&results).expect("results serialize") + "\n"
            } else {
                let mut s = String::new();
                for r in &results {
                    let status = match (r.passed(), r.complete) {
                        (false, _) => "FAIL",
                        (true, true) => "PASS",
                        (true, false) => "PARTIAL",
                    };
                    s.push_str(&format!(
                        "{:<15} {status:<7} n<={} jobs {}/{} cases {} violations {} ({:.2}s)\n",
                        r.suite,
                        r.n_max,
                        r.jobs_done,
                        r.jobs_total,
                        r.w_count,
                        r.violations.len(),
                        r.elapsed_seconds
                    ));
                    for v in r.violations.iter().take(10) {
                        let h =
                            v.h.as_deref()
                                .map(|h| format!(" h=({h})"))
                                .unwrap_or_default();
                        let w =
                            v.w.as_deref()
                                .map(|w| format!(" w={w}"))
                                .unwrap_or_default();
                        s.push_str(&format!("    {}{h}{w}: {}\n", r.suite, v.detail));
                    }
                    if r.violations.len() > 10 {
                        s.push_str(&format!("    ... {} more\n", r.violations.len() - 10));
                    }
                }
                s
            };
            write_all(out, &s)?;
            return Ok(if failed { 1 } else { 0 });
        }
    }
    Ok(0)
}

fn roots_output(
    group: &WeylGroup,
    hs: &crate::roots::HessenbergSpace,
    as_json: bool,
    want_tables: bool,
    w: Option<&str>,
) -> Result<String> {
    let rs = group.root_system();
    let report = match w {
        Some(text) => Some(classify_arbitrary(group, hs, group.parse_element(text)?)?),
        None => None,
    };
    let admissible = h_admissible_elements(group, hs)?;
    if as_json {
        let classes = partition_classes(group, hs);
        let subsets: Vec<_> = weyl_type_subsets(group, hs)
            .into_iter()
            .map(|s| {
                let (z, ws) = z_and_w(group, hs, s)?;
                let members: Vec<String> = classes
                    .get(&s)
                    .map(|c| c.iter().map(|&x| group.display(x)).collect())
                    .unwrap_or_default();
                Ok(json!({
                    "s": s.iter().map(|p| rs.format_root(p)).collect::<Vec<_>>(),
                    "class": members,
                    "z": group.display(z),
                    "w": group.display(ws),
                }))
            })
            .collect::<Result<_>>()?;
        let positive: Vec<_> = (0..rs.positive_count())
            .map(|p| json!({ "name": rs.format_root(p), "coords": rs.root(p) }))
            .collect();
        let inversions: Vec<_> = group
            .elements()
            .map(|x| {
                let n = group.inversion_set(x);
                json!({
                    "w": group.display(x),
                    "n": rs.format_set(n),
                    "n_in_m": rs.format_set(n.intersect(hs.roots())),
                })
            })
            .collect();
        let value = json!({
            "root_system": rs.label(),
            "weyl_group_order": group.len(),
            "positive_roots": positive,
            "inversion_sets": inversions,
            "m": hs.roots().iter().map(|p| rs.format_root(p)).collect::<Vec<_>>(),
            "weyl_type_subsets": subsets,
            "admissible": admissible.iter().map(|&x| group.display(x)).collect::<Vec<_>>(),
            "classification": report,
        });
        return Ok(pretty(&value));
    }
    let mut s = String::new();
    if want_tables {
        s.push_str(&tables(group, hs)?);
    } else {
        let positive: Vec<String> = (0..rs.positive_count())
            .map(|p| rs.format_root(p))
            .collect();
        s.push_str(&format!(
            "{}: |W| = {}, Φ⁺ = {{{}}}\n",
            rs.label(),
            group.len(),
            positive.join(", ")
        ));
        s.push_str(&format!("M = {}\n", rs.format_set(hs.roots())));
        s.push_str(&format!(
            "Weyl-type subsets: {}\n",
            weyl_type_subsets(group, hs).len()
        ));
        let names: Vec<String> = admissible.iter().map(|&x| group.display(x)).collect();
        s.push_str(&format!("H-admissible elements: {}\n", names.join(", ")));
    }
    if let Some(r) = report {
        s.push('\n');
        s.push_str(&format!("w = {}, S = {{{}}}\n", r.w, r.s.join(", ")));
        s.push_str(&format!("representative w_S = {}\n", r.representative));
        s.push_str(&format!(
            "interval graph: {} vertices, cell dimension {}, regular = {}, connected = {}\n",
            r.interval_size, r.cell_dimension, r.regular, r.connected
        ));
        if let Some(v) = &r.violating_vertex {
            s.push_str(&format!("  first vertex off the cell dimension: {v}\n"));
        }
        let verdict = serde_json::to_value(r.hess_schubert_smooth).expect("verdict");
        s.push_str(&format!(
            "closure smooth: {} ({})\n",
            verdict.as_str().unwrap_or("unknown"),
            r.reason
        ));
    }
    Ok(s)
}
