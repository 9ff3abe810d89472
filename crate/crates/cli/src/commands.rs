use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use belief_decision::oracle::{pure_strategy_count, selection_count};
use belief_decision::tree::EvaluatedNode;
use belief_decision::{
    evaluate, evi, extract_strategy, induced_distribution, load_problem, oracle_evi,
    oracle_tree_value, pignistic_expect, probabilistic_expect, proportional_expect, rho_expect,
    simulate_nature, strategy_regions, MassFunction, Problem, Rho, StrategyRegion,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::{
    interval, money, rows, value_set, Input, OutputDocument, Report, FORMAT_VERSION,
};
use crate::Command;

/// Monte Carlo agreement is judged in standard errors.
const MC_STANDARD_ERRORS: f64 = 4.0;
const EXACT_TOLERANCE: f64 = 1e-9;

struct Loaded {
    input: Input,
    text: String,
}

fn load(path: &Path) -> Result<Loaded> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let text = String::from_utf8(bytes.clone())
        .with_context(|| format!("{} is not UTF-8", path.display()))?;
    Ok(Loaded {
        input: Input::new(path, &bytes),
        text,
    })
}

fn mass(loaded: &Loaded) -> Result<MassFunction> {
    Ok(MassFunction::from_json(&loaded.text)?)
}

fn problem(loaded: &Loaded) -> Result<Problem> {
    Ok(load_problem(&loaded.text)?)
}

pub fn run(command: &Command, argv: Vec<String>) -> Result<Report> {
    let (loaded, passed, results, table) = match command {
        Command::Evi {
            file,
            rho,
            transforms,
        } => {
            let loaded = load(file)?;
            let (results, table) = evi_command(&mass(&loaded)?, *rho, *transforms)?;
            (loaded, true, results, table)
        }
        Command::Evaluate { file, rho } => {
            let loaded = load(file)?;
            let (results, table) = evaluate_command(&problem(&loaded)?, *rho)?;
            (loaded, true, results, table)
        }
        Command::Sensitivity { file, resolution } => {
            let loaded = load(file)?;
            let (results, table) = sensitivity_command(&problem(&loaded)?, *resolution as usize)?;
            (loaded, true, results, table)
        }
        Command::Oracle {
            file,
            rho,
            samples,
            seed,
        } => {
            let loaded = load(file)?;
            let (passed, results, table) = oracle_command(&loaded, *rho, *samples as usize, *seed)?;
            (loaded, passed, results, table)
        }
    };
    Ok(Report {
        document: OutputDocument {
            format_version: FORMAT_VERSION.to_string(),
            command: argv,
            input: loaded.input,
            passed,
            results,
        },
        table,
        passed,
    })
}

#[derive(Serialize)]
struct Focal {
    elements: Vec<f64>,
    mass: f64,
    support: f64,
    plausibility: f64,
}

#[derive(Serialize)]
struct Outcome {
    value: f64,
    probability: f64,
}

fn evi_command(m: &MassFunction, rho: Option<Rho>, transforms: bool) -> Result<(Value, String)> {
    let e = evi(m);
    let focals = m
        .focal_elements()
        .iter()
        .map(|f| {
            let b = m.belief_interval(f.elements())?;
            Ok(Focal {
                elements: f.elements().to_vec(),
                mass: f.mass(),
                support: b.support,
                plausibility: b.plausibility,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut table = String::new();
    let _ = writeln!(table, "frame  {}", value_set(m.frame().values()));
    let _ = writeln!(
        table,
        "{:<24} {:>8} {:>8} {:>8}",
        "focal element", "mass", "spt", "pls"
    );
    for f in &focals {
        let _ = writeln!(
            table,
            "{:<24} {:>8.4} {:>8.4} {:>8.4}",
            value_set(&f.elements),
            f.mass,
            f.support,
            f.plausibility
        );
    }
    let mut summary = vec![
        ("EVI", interval(e.lower, e.upper)),
        ("width", money(e.width())),
    ];

    let mut results = json!({
        "frame": m.frame().values(),
        "focal_elements": focals,
        "evi": e,
    });

    let mut induced = None;
    if let Some(rho) = rho {
        let value = rho_expect(e, rho);
        let dist: Vec<Outcome> = induced_distribution(m, rho)
            .iter()
            .map(|(value, probability)| Outcome { value, probability })
            .collect();
        summary.push(("rho", format!("{:.6}", rho.value())));
        summary.push(("value at rho", money(value)));
        results["rho"] = json!(rho);
        results["value"] = json!(value);
        results["induced_distribution"] = json!(dist);
        induced = Some(dist);
    }
    if transforms {
        let pignistic = pignistic_expect(m);
        summary.push(("pignistic", money(pignistic)));
        let proportional = match proportional_expect(m) {
            Ok(v) => {
                summary.push(("proportional", money(v)));
                json!(v)
            }
            Err(e) => {
                summary.push(("proportional", format!("undefined ({e})")));
                Value::Null
            }
        };
        results["transforms"] = json!({
            "pignistic": pignistic,
            "proportional": proportional,
        });
    }
    rows(&mut table, &summary);
    if let Some(dist) = induced {
        let _ = writeln!(table, "induced distribution");
        for o in dist {
            let _ = writeln!(table, "  {:>12}  {:.4}", money(o.value), o.probability);
        }
    }
    Ok((results, table))
}

fn evaluate_command(p: &Problem, rho: Rho) -> Result<(Value, String)> {
    let tree = evaluate(p.root(), rho);
    let strategy = extract_strategy(&tree);

    let mut table = String::new();
    rows(
        &mut table,
        &[
            ("problem", p.name.clone()),
            ("rho", format!("{:.6}", rho.value())),
            ("root value", money(tree.value())),
            (
                "root EVI",
                interval(tree.interval().lower, tree.interval().upper),
            ),
            ("strategy", strategy.to_string()),
        ],
    );
    let _ = writeln!(table, "tree");
    render_node(&mut table, &tree.root, 1);

    let results = json!({
        "problem": p.name,
        "rho": rho,
        "value": tree.value(),
        "evi": tree.interval(),
        "strategy": strategy,
        "tree": tree.root,
    });
    Ok((results, table))
}

fn node_summary(node: &EvaluatedNode) -> String {
    let head = match &node.id {
        Some(id) => format!("{} {id:?}", format!("{:?}", node.kind).to_lowercase()),
        None => format!("leaf {}", value_set(&node.outcomes)),
    };
    format!(
        "{head}  {}  value {}",
        interval(node.interval.lower, node.interval.upper),
        money(node.value)
    )
}

fn render_node(out: &mut String, node: &EvaluatedNode, depth: usize) {
    if depth == 1 {
        let _ = writeln!(out, "  {}", node_summary(node));
    }
    for (i, b) in node.branches.iter().enumerate() {
        let mark = if node.chosen == Some(i) { "*" } else { " " };
        let detail = match (b.mass, b.cost) {
            (Some(m), _) => format!(" (mass {m:.4})"),
            (None, Some(c)) if c != 0.0 => format!(" (cost {})", money(c)),
            _ => String::new(),
        };
        let _ = writeln!(
            out,
            "{}{mark} {}{detail} -> {}",
            "  ".repeat(depth + 1),
            b.label,
            node_summary(&b.node)
        );
        render_node(out, &b.node, depth + 1);
    }
}

fn sensitivity_command(p: &Problem, resolution: usize) -> Result<(Value, String)> {
    let regions: Vec<StrategyRegion> = strategy_regions(p.root(), resolution);

    let mut table = String::new();
    rows(
        &mut table,
        &[
            ("problem", p.name.clone()),
            ("resolution", resolution.to_string()),
            ("regions", regions.len().to_string()),
        ],
    );
    let _ = writeln!(
        table,
        "{:>10} {:>10} {:>14} {:>14}  strategy",
        "rho from", "rho to", "value from", "value to"
    );
    for r in &regions {
        let _ = writeln!(
            table,
            "{:>10.6} {:>10.6} {:>14} {:>14}  {}",
            r.rho_low,
            r.rho_high,
            money(r.value_at_low),
            money(r.value_at_high),
            r.strategy
        );
    }
    let results = json!({
        "problem": p.name,
        "resolution": resolution,
        "regions": regions,
    });
    Ok((results, table))
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
    analytic: Value,
    oracle: Value,
    detail: String,
}

fn oracle_command(
    loaded: &Loaded,
    rho: Rho,
    samples: usize,
    seed: u64,
) -> Result<(bool, Value, String)> {
    let doc: Value = serde_json::from_str(&loaded.text).context("input is not valid JSON")?;
    let (kind, checks) = if doc.get("frame").is_some() {
        ("mass", mass_checks(&mass(loaded)?, rho, samples, seed)?)
    } else if doc.get("tree").is_some() {
        ("problem", problem_checks(&problem(loaded)?, rho)?)
    } else {
        bail!("input has neither a \"frame\" nor a \"tree\" key");
    };
    let passed = checks.iter().all(|c| c.passed);

    let mut table = String::new();
    for c in &checks {
        let _ = writeln!(
            table,
            "{}  {:<22} {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    let _ = writeln!(
        table,
        "{}",
        if passed {
            "all checks passed"
        } else {
            "oracle check failed"
        }
    );
    let results = json!({ "input_kind": kind, "rho": rho, "checks": checks });
    Ok((passed, results, table))
}

fn mass_checks(m: &MassFunction, rho: Rho, samples: usize, seed: u64) -> Result<Vec<Check>> {
    let e = evi(m);
    let brute = oracle_evi(m)?;
    let enumeration = Check {
        name: "selection enumeration",
        passed: brute == e,
        analytic: json!(e),
        oracle: json!(brute),
        detail: format!(
            "{} selections, EVI {} vs {}",
            selection_count(m),
            interval(e.lower, e.upper),
            interval(brute.lower, brute.upper)
        ),
    };

    let analytic = rho_expect(e, rho);
    let induced = probabilistic_expect(&induced_distribution(m, rho));
    let theorem = Check {
        name: "induced distribution",
        passed: (induced - analytic).abs() <= EXACT_TOLERANCE * analytic.abs().max(1.0),
        analytic: json!(analytic),
        oracle: json!(induced),
        detail: format!("{} vs {}", money(analytic), money(induced)),
    };

    let sim = simulate_nature(m, rho, samples, seed);
    let allowed = (MC_STANDARD_ERRORS * sim.standard_error).max(EXACT_TOLERANCE);
    let gap = (sim.empirical_mean - analytic).abs();
    let monte_carlo = Check {
        name: "Monte Carlo",
        passed: gap <= allowed,
        analytic: json!(analytic),
        oracle: json!(sim),
        detail: if sim.standard_error > 0.0 {
            format!(
                "mean {:.4} over {} samples, {:.2} standard errors from {:.4}",
                sim.empirical_mean,
                sim.samples,
                gap / sim.standard_error,
                analytic
            )
        } else {
            format!(
                "mean {:.4} over {} samples with zero spread, expected {:.4}",
                sim.empirical_mean, sim.samples, analytic
            )
        },
    };
    Ok(vec![enumeration, theorem, monte_carlo])
}

fn problem_checks(p: &Problem, rho: Rho) -> Result<Vec<Check>> {
    let analytic = evaluate(p.root(), rho).value();
    let brute = oracle_tree_value(p.root(), rho)?;
    Ok(vec![Check {
        name: "strategy enumeration",
        passed: (brute - analytic).abs() <= EXACT_TOLERANCE * analytic.abs().max(1.0),
        analytic: json!(analytic),
        oracle: json!(brute),
        detail: format!(
            "{} pure strategies, best {} vs backward induction {}",
            pure_strategy_count(p.root()),
            money(brute),
            money(analytic)
        ),
    }])
}
