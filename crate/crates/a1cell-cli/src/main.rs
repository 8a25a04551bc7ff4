//! Command-line surface for the cellular chain-complex library: pi_1
//! classification, realized and symbolic homology, pi_3 reports, and the
//! dichotomy table. Text output by default, versioned JSON with `--json`.
//!
//! Exit codes: 0 success, 2 usage or validation error, 1 internal invariant
//! violation.

use a1cell::complexes::{
    build_flag_low_degrees, build_pi1_presentation, build_pi3_complex, build_projective_space,
    build_punctured_affine, GradedComplex, Pi1Presentation,
};
use a1cell::exec::ExecMode;
use a1cell::homology::{
    homology_over_realization, pi3_homology, solve_pi1_symbolic, symbolic_descriptors,
    AbGroupDescriptor, Pi1Result,
};
use a1cell::mwscalar::{Realization, SignAssignment, UnitSymbol};
use a1cell::rootdata::{make_root_datum, normalize, DynkinType, Family, RootDatum};
use a1cell::table::{compute_table, tau_assignments};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "a1cell",
    version,
    about = "Cellular chain complexes of split simply connected groups: \
             symbolic pi_1, realized homology, pi_3, and the dichotomy table"
)]
struct Cli {
    /// Emit the full JSON report instead of the text summary.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized tau-sign sampling (used only when a sweep cannot
    /// be exhaustive).
    #[arg(long, global = true, default_value_t = 20260823)]
    seed: u64,
    /// Explicit tau sign choices, e.g. "tau1=-1,tau2=1" (unset symbols
    /// default to +1).
    #[arg(long, global = true)]
    signs: Option<String>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Symbolic pi_1 classification for the simply connected group of a type.
    Classify { family: String, rank: usize },
    /// Homology of a cellular complex, symbolic and under realizations.
    Homology {
        #[command(subcommand)]
        space: Space,
    },
    /// Middle homology of the bilinear-form complex (pi_3 of the group).
    Pi3 {
        family: String,
        rank: usize,
        /// Deliberately break an internal invariant (diagnostics testing).
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// The dichotomy table over all irreducible types up to a rank bound.
    Table {
        #[arg(long = "max-rank", default_value_t = 8)]
        max_rank: usize,
        /// Compute rows sequentially instead of in parallel.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand)]
enum Space {
    /// Projective space P^n.
    Pn {
        n: usize,
        #[command(flatten)]
        opts: SpaceOpts,
    },
    /// Punctured affine space A^{n+1} - {0}.
    Punctured {
        n: usize,
        #[command(flatten)]
        opts: SpaceOpts,
    },
    /// The full flag variety of a type, in degrees <= 2.
    Flag {
        family: String,
        rank: usize,
        #[command(flatten)]
        opts: SpaceOpts,
    },
    /// The group cell complex in degree 1 (the pi_1 presentation).
    Group {
        family: String,
        rank: usize,
        #[command(flatten)]
        opts: SpaceOpts,
    },
}

#[derive(Args)]
struct SpaceOpts {
    /// Realize over the real numbers (eta -> 2).
    #[arg(long)]
    real: bool,
    /// Realize over the complex numbers (eta -> 0, positive weights vanish).
    #[arg(long = "complex")]
    complex_top: bool,
    /// Milnor realization (eta -> 0, weights kept).
    #[arg(long)]
    milnor: bool,
    /// Include the symbolic differential matrices in the report.
    #[arg(long)]
    matrices: bool,
}

enum CliError {
    /// Bad input: exit 2.
    Usage(String),
    /// Violated internal invariant: exit 1.
    Internal(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Cmd::Classify { family, rank } => cmd_classify(cli, family, *rank),
        Cmd::Homology { space } => cmd_homology(cli, space),
        Cmd::Pi3 {
            family,
            rank,
            corrupt,
        } => cmd_pi3(cli, family, *rank, *corrupt),
        Cmd::Table {
            max_rank,
            sequential,
        } => cmd_table(cli, *max_rank, *sequential),
    }
}

// ---------------------------------------------------------------------------
// shared plumbing

fn parse_type(family: &str, rank: usize) -> Result<DynkinType, CliError> {
    let letter = match family.to_ascii_uppercase().as_str() {
        s if s.len() == 1 => s.chars().next().unwrap(),
        _ => return usage(format!("family must be a single letter A-G, got {family:?}")),
    };
    let fam = Family::from_letter(letter)
        .ok_or_else(|| CliError::Usage(format!("family must be one of A-G, got {family:?}")))?;
    normalize(DynkinType::new(fam, rank)).map_err(CliError::Usage)
}

fn datum_for(family: &str, rank: usize) -> Result<RootDatum, CliError> {
    let t = parse_type(family, rank)?;
    make_root_datum(t).map_err(CliError::Usage)
}

/// Parse "--signs tau1=-1,tau2=1" against the tau symbols actually present;
/// unknown symbols and malformed entries are usage errors. Unset symbols get
/// +1.
fn resolve_signs(
    arg: &Option<String>,
    symbols: &[UnitSymbol],
) -> Result<SignAssignment, CliError> {
    let mut signs: SignAssignment = symbols.iter().map(|s| (*s, 1)).collect();
    let Some(arg) = arg else {
        return Ok(signs);
    };
    for part in arg.split(',').filter(|p| !p.is_empty()) {
        let Some((name, value)) = part.split_once('=') else {
            return usage(format!("malformed sign entry {part:?}, expected tauK=+/-1"));
        };
        let sym = match name.trim().strip_prefix("tau") {
            Some(num) => match num.parse::<u32>() {
                Ok(k) if k >= 1 => UnitSymbol::Tau(k),
                _ => return usage(format!("malformed tau symbol {name:?}")),
            },
            None => return usage(format!("unknown unit symbol {name:?}, expected tauK")),
        };
        if !symbols.contains(&sym) {
            return usage(format!(
                "unknown symbol {sym}: this complex has {} tau symbol(s)",
                symbols.len()
            ));
        }
        let v = match value.trim() {
            "1" | "+1" => 1,
            "-1" => -1,
            other => return usage(format!("sign for {sym} must be +1 or -1, got {other:?}")),
        };
        signs.insert(sym, v);
    }
    Ok(signs)
}

fn realization_of(opts: &SpaceOpts) -> Result<Option<Realization>, CliError> {
    let chosen = [opts.real, opts.complex_top, opts.milnor]
        .iter()
        .filter(|b| **b)
        .count();
    if chosen > 1 {
        return usage("choose at most one of --real, --complex, --milnor");
    }
    Ok(if opts.real {
        Some(Realization::real())
    } else if opts.complex_top {
        Some(Realization::complex_top())
    } else if opts.milnor {
        Some(Realization::milnor())
    } else {
        None
    })
}

fn group_value(g: &AbGroupDescriptor) -> Value {
    json!({
        "freeRank": g.free_rank,
        "torsion": g.torsion,
        "display": g.to_string(),
    })
}

fn report(command: &str, inputs: Value, results: Value, provenance: &[&str]) -> Value {
    json!({
        "schemaVersion": 1,
        "command": command,
        "inputs": inputs,
        "results": results,
        "provenance": provenance,
    })
}

fn emit(cli: &Cli, report: &Value, text: &str) {
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serialization")
        );
    } else {
        println!("{text}");
    }
}

fn matrices_value(c: &GradedComplex) -> Value {
    let mats: Vec<Value> = (1..=c.top_degree())
        .map(|d| {
            let rows: Vec<Vec<String>> = c.differentials[d]
                .iter()
                .map(|row| row.iter().map(|e| e.to_string()).collect())
                .collect();
            json!({
                "fromDegree": d,
                "toDegree": d - 1,
                "rowsAreTargetGenerators": true,
                "entries": rows,
            })
        })
        .collect();
    Value::Array(mats)
}

// ---------------------------------------------------------------------------
// classify

fn cmd_classify(cli: &Cli, family: &str, rank: usize) -> Result<(), CliError> {
    let datum = datum_for(family, rank)?;
    let p = build_pi1_presentation(&datum);
    // --signs is validated even though the classification never depends on it.
    resolve_signs(&cli.signs, &p.tau_symbols)?;
    let res = solve_pi1_symbolic(&p);
    let t = datum.dynkin;

    let results = json!({
        "classification": res.classification.to_string(),
        "witnessRoot": res.witness_root,
        "h1Formula": res.h1_formula,
        "symplectic": p.symplectic.symplectic,
        "cells": p.columns.len(),
        "tauSymbols": p.tau_symbols.len(),
        "trace": res.trace,
    });
    let rep = report(
        "classify",
        json!({ "type": t.to_string(), "family": t.family.letter().to_string(), "rank": t.rank }),
        results,
        &[
            "pi_1 of a split, semisimple, simply connected group is K^MW_2 for symplectic types and K^M_2 otherwise",
            "the classification is independent of all tau sign choices: the deciding test is whether eta times the cell entry vanishes, and tau symbols are units",
        ],
    );
    let mut text = format!(
        "type {t}\nclassification: {}\nwitness root: {} (canonical long root)\nH^1(G, M) = {}\ntrace:\n",
        res.classification, res.witness_root, res.h1_formula
    );
    for line in &res.trace {
        text.push_str(&format!("  {line}\n"));
    }
    text.pop();
    emit(cli, &rep, &text);
    Ok(())
}

// ---------------------------------------------------------------------------
// homology

fn realized_degrees(
    c: &GradedComplex,
    r: &Realization,
    signs: &SignAssignment,
    degrees: impl Iterator<Item = usize>,
) -> Result<Vec<(usize, AbGroupDescriptor)>, CliError> {
    degrees
        .map(|d| {
            homology_over_realization(c, r, signs, d)
                .map(|g| (d, g))
                .map_err(CliError::Internal)
        })
        .collect()
}

/// Sweep summary for complexes carrying tau symbols: re-derives every
/// realized degree under each assignment and reports whether the outcome is
/// assignment-independent (it always is; a counterexample is an internal
/// error).
fn sweep_summary(
    c: &GradedComplex,
    r: &Realization,
    seed: u64,
    degrees: &[(usize, AbGroupDescriptor)],
) -> Result<Value, CliError> {
    let symbols = c.tau_symbols();
    let assignments = tau_assignments(&symbols, seed);
    for signs in &assignments {
        for (d, expected) in degrees {
            let got = homology_over_realization(c, r, signs, *d).map_err(CliError::Internal)?;
            if got != *expected {
                return Err(CliError::Internal(format!(
                    "degree-{d} homology depends on the tau signs ({expected} vs {got})"
                )));
            }
        }
    }
    Ok(json!({
        "tauSymbols": symbols.len(),
        "assignmentsChecked": assignments.len(),
        "exhaustive": symbols.len() <= a1cell::table::EXHAUSTIVE_TAU_LIMIT,
        "stable": true,
    }))
}

fn cmd_homology(cli: &Cli, space: &Space) -> Result<(), CliError> {
    match space {
        Space::Pn { n, opts } => {
            let c = build_projective_space(*n).map_err(CliError::Usage)?;
            homology_report(
                cli,
                opts,
                &c,
                "pn",
                json!({ "n": n }),
                &[
                    "P^n carries one cell in each degree 0..n with differentials alternating 0 and eta",
                    "under the real realization (eta -> 2) the complex computes the singular homology of RP^n",
                ],
                None,
            )
        }
        Space::Punctured { n, opts } => {
            let c = build_punctured_affine(*n).map_err(CliError::Usage)?;
            homology_report(
                cli,
                opts,
                &c,
                "punctured",
                json!({ "n": n }),
                &[
                    "A^{n+1} - 0 has homology Z in degree 0, one Milnor-Witt sheaf of weight n+1 in degree n, and nothing between",
                    "under the real realization the complex computes the singular homology of S^n",
                ],
                None,
            )
        }
        Space::Flag { family, rank, opts } => {
            let datum = datum_for(family, *rank)?;
            let c = build_flag_low_degrees(&datum);
            homology_report(
                cli,
                opts,
                &c,
                "flag",
                json!({ "type": datum.dynkin.to_string() }),
                &[
                    "degree-1 homology of the flag variety: one Gm for each simple root hit by an odd Cartan integer, one weight-1 Milnor-Witt sheaf for each root that is not",
                    "in symplectic type exactly the long root contributes the Milnor-Witt summand",
                ],
                None,
            )
        }
        Space::Group { family, rank, opts } => {
            let datum = datum_for(family, *rank)?;
            let p = build_pi1_presentation(&datum);
            let res = solve_pi1_symbolic(&p);
            let c = p.to_complex();
            homology_report(
                cli,
                opts,
                &c,
                "group",
                json!({ "type": datum.dynkin.to_string() }),
                &[
                    "degree-1 homology of the group complex presents pi_1: K^MW_2 in symplectic type, K^M_2 otherwise",
                    "real realization: pi_1 of the real points is Z in symplectic type and Z/2 otherwise",
                    "Milnor realization: degree-1 homology is one free copy of K^M_2 (Suslin homology)",
                ],
                Some((&p, &res)),
            )
        }
    }
}

fn homology_report(
    cli: &Cli,
    opts: &SpaceOpts,
    c: &GradedComplex,
    command: &str,
    mut inputs: Value,
    provenance: &[&str],
    group: Option<(&Pi1Presentation, &Pi1Result)>,
) -> Result<(), CliError> {
    let realization = realization_of(opts)?;
    let signs = resolve_signs(&cli.signs, &c.tau_symbols())?;
    let mut results = serde_json::Map::new();
    let mut text = String::new();

    // Symbolic part: descriptors where defined, the solved presentation for
    // the group complex.
    match group {
        Some((p, res)) => {
            results.insert(
                "symbolic".into(),
                json!({
                    "classification": res.classification.to_string(),
                    "witnessRoot": res.witness_root,
                    "h1Formula": res.h1_formula,
                    "rows": p.rows.len(),
                    "cells": p.columns.len(),
                }),
            );
            text.push_str(&format!(
                "symbolic H_1 = {} (witness root {})\n",
                res.classification, res.witness_root
            ));
        }
        None => {
            let top = match c.kind {
                a1cell::complexes::ComplexKind::Flag => 1,
                _ => c.top_degree(),
            };
            let mut descr = Vec::new();
            for d in 0..=top {
                let s = symbolic_descriptors(c, d).map_err(CliError::Internal)?;
                text.push_str(&format!("symbolic H_{d} = {s}\n"));
                descr.push(json!({ "degree": d, "display": s.to_string() }));
            }
            results.insert("symbolic".into(), Value::Array(descr));
        }
    }

    if let Some(r) = realization {
        let degrees: Vec<usize> = match group {
            Some(_) => vec![1],
            None => (0..=c.top_degree()).collect(),
        };
        let realized = realized_degrees(c, &r, &signs, degrees.into_iter())?;
        for (d, g) in &realized {
            text.push_str(&format!("{} H_{d} = {g}\n", r.label()));
        }
        let realized_value: Vec<Value> = realized
            .iter()
            .map(|(d, g)| json!({ "degree": d, "group": group_value(g) }))
            .collect();
        results.insert(
            "realized".into(),
            json!({ "realization": r.label(), "degrees": realized_value }),
        );
        // tau-sweep summary for the complexes that carry tau symbols.
        if !c.tau_symbols().is_empty() || group.is_some() {
            let sweep = sweep_summary(c, &r, cli.seed, &realized)?;
            text.push_str(&format!(
                "tau sweep: {} assignment(s), result stable\n",
                sweep["assignmentsChecked"]
            ));
            results.insert("tauSweep".into(), sweep);
        }
        if let Some(obj) = inputs.as_object_mut() {
            obj.insert("realization".into(), json!(r.label()));
        }
    }

    if opts.matrices {
        results.insert("differentials".into(), matrices_value(c));
    }

    text.pop();
    let rep = report(command, inputs, Value::Object(results), provenance);
    emit(cli, &rep, &text);
    Ok(())
}

// ---------------------------------------------------------------------------
// pi3

fn cmd_pi3(cli: &Cli, family: &str, rank: usize, corrupt: bool) -> Result<(), CliError> {
    let datum = datum_for(family, rank)?;
    let mut c = build_pi3_complex(&datum).map_err(CliError::Usage)?;
    if corrupt {
        // Flip a mixed-coordinate sign: breaks the wedge-composite invariant.
        c.left[1][0] = -c.left[1][0];
    }
    let h = pi3_homology(&c).map_err(CliError::Internal)?;
    let t = datum.dynkin;
    let results = json!({
        "middle": group_value(&h.middle),
        "leftRank": h.left_rank,
        "leftInjective": h.left_injective,
        "cells": h.num_cells,
        "signs": c.signs,
    });
    let rep = report(
        "pi3",
        json!({ "type": t.to_string(), "family": t.family.letter().to_string(), "rank": t.rank }),
        results,
        &[
            "for every simple simply connected compact Lie group, pi_3 is free abelian of rank one",
            "the middle homology of the cell complex between the squares and the exterior square computes it",
        ],
    );
    let text = format!(
        "type {t}: pi_3 middle homology = {}\nleft matrix: rank {} over {} columns ({})",
        h.middle,
        h.left_rank,
        h.num_cells,
        if h.left_injective {
            "injective"
        } else {
            "not injective"
        }
    );
    emit(cli, &rep, &text);
    Ok(())
}

// ---------------------------------------------------------------------------
// table

fn cmd_table(cli: &Cli, max_rank: usize, sequential: bool) -> Result<(), CliError> {
    if cli.signs.is_some() {
        return usage("the table sweeps all tau sign assignments; --signs is not accepted here");
    }
    let mode = if sequential {
        ExecMode::Sequential
    } else {
        ExecMode::Parallel
    };
    let rows = compute_table(max_rank, mode, cli.seed).map_err(|e| {
        if e.contains("max rank") {
            CliError::Usage(e)
        } else {
            CliError::Internal(e)
        }
    })?;

    let row_values: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "type": r.type_label,
                "pi1": r.classification.to_string(),
                "witnessRoot": r.witness_root,
                "realPi1": r.real_pi1.to_string(),
                "suslinRank": r.suslin_rank,
                "pi3": r.pi3.to_string(),
                "cells": r.cell_count,
                "tauSymbols": r.num_tau,
            })
        })
        .collect();
    let rep = report(
        "table",
        json!({ "maxRank": max_rank }),
        json!({ "rows": row_values }),
        &[
            "pi_1 is K^MW_2 exactly for the symplectic types (family C and A1 = C1) and K^M_2 otherwise",
            "pi_1 of the real points is Z in symplectic type and Z/2 otherwise",
            "degree-1 homology under the Milnor realization is one free copy of K^M_2 for every type",
            "pi_3 is free abelian of rank one for every type",
        ],
    );

    let mut text = format!(
        "{:<5} {:<6} {:<8} {:<9} {:<4} {:<6} {}\n",
        "type", "pi1", "realPi1", "suslinH1", "pi3", "cells", "tau"
    );
    for r in &rows {
        text.push_str(&format!(
            "{:<5} {:<6} {:<8} {:<9} {:<4} {:<6} {}\n",
            r.type_label,
            r.classification.to_string(),
            r.real_pi1.to_string(),
            format!("Z^{}", r.suslin_rank),
            r.pi3.to_string(),
            r.cell_count,
            r.num_tau
        ));
    }
    text.pop();
    emit(cli, &rep, &text);
    Ok(())
}
