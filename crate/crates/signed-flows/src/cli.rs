//! JSON command-line front end.
//!
//! Every command reads a graph file, writes one line of JSON to stdout and
//! exits 0; domain failures produce a machine-readable error object and
//! exit 1; unknown verbs or flags print usage to stderr and exit 2.

use crate::bonds::{self, EdgeOrder};
use crate::circuits::{CircuitKind, FundamentalSystem};
use crate::error::{Budget, Error, Result};
use crate::flowpoly::{self, IntPolynomial};
use crate::flows::{self, FlowVector};
use crate::group::AbelianGroup;
use crate::sgraph::{EdgeSet, SignedGraph};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

const USAGE: &str = "usage: sflow <command> [options]

commands:
  info <file>                                  graph summary (n, m, beta, kappa, balance)
  poly --d <int> [--budget N] <file>           flow polynomial F_d by subset expansion
  f0 --method broken|subset [--order i,j,...] [--budget N] <file>
                                               F_0 via broken bonds or subset expansion
  flows --group <orders> [--nowhere-zero] [--count|--list] [--budget N] <file>
                                               count or list group-valued flows
  bonds [--broken] [--budget N] <file>         all bonds (or broken bonds) as edge-id sets
  complex [--order i,j,...] [--budget N] <file>
                                               f-vector and homogeneity of the bond-free complex
  circuits [--budget N] <file>                 fundamental system dump (tree, root, vectors)
  gt --tree <file> --girth <g> [--budget N]    leaf-circuit expansion of a tree, with both F_0 forms
  verify [--budget N] <file>                   cross-check the counting identities on one graph

options:
  --group  comma-separated cyclic orders, e.g. 2,4 for Z_2 x Z_4
  --order  explicit edge order: all edge ids from smallest to largest
  --budget work cap for exponential enumerations (default 10000000)";

enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

/// Run the command line; returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(args) {
        Ok(value) => {
            let _ = writeln!(out, "{value}");
            0
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(out, "{}", error_json(&e));
            1
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\n{USAGE}");
            2
        }
    }
}

fn error_json(e: &Error) -> Value {
    let mut obj = json!({
        "code": e.code(),
        "message": e.to_string(),
    });
    if let Error::Parse { line, .. } = e {
        obj["line"] = json!(line);
    }
    json!({ "error": obj })
}

struct Options {
    values: BTreeMap<String, String>,
    switches: BTreeSet<String>,
    positional: Vec<String>,
}

fn parse_options(
    args: &[String],
    value_flags: &[&str],
    switch_flags: &[&str],
) -> std::result::Result<Options, CliError> {
    let mut opts = Options {
        values: BTreeMap::new(),
        switches: BTreeSet::new(),
        positional: Vec::new(),
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            if value_flags.contains(&name) {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::Usage(format!("--{name} needs a value")))?;
                opts.values.insert(name.to_string(), value.clone());
            } else if switch_flags.contains(&name) {
                opts.switches.insert(name.to_string());
            } else {
                return Err(CliError::Usage(format!("unknown flag --{name}")));
            }
        } else {
            opts.positional.push(arg.clone());
        }
    }
    Ok(opts)
}

impl Options {
    fn budget(&self) -> std::result::Result<Budget, CliError> {
        match self.values.get("budget") {
            None => Ok(Budget::DEFAULT),
            Some(v) => v
                .parse::<u64>()
                .map(Budget)
                .map_err(|_| CliError::Usage(format!("--budget must be an integer, got '{v}'"))),
        }
    }

    fn graph_file(&self) -> std::result::Result<&str, CliError> {
        match self.positional.as_slice() {
            [one] => Ok(one),
            [] => Err(CliError::Usage("missing graph file".into())),
            _ => Err(CliError::Usage("expected exactly one graph file".into())),
        }
    }

    fn order(&self, m: usize) -> Result<EdgeOrder> {
        match self.values.get("order") {
            None => Ok(EdgeOrder::identity(m)),
            Some(list) => {
                let seq: Vec<usize> = list
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidOrder(format!("bad edge id '{t}'")))
                    })
                    .collect::<Result<_>>()?;
                EdgeOrder::from_sequence(m, &seq)
            }
        }
    }
}

fn load_graph(path: &str) -> Result<SignedGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read '{path}': {e}"),
    })?;
    SignedGraph::parse(&text)
}

fn dispatch(args: &[String]) -> std::result::Result<Value, CliError> {
    let (verb, rest) = match args.split_first() {
        Some((v, rest)) => (v.as_str(), rest),
        None => return Err(CliError::Usage("missing command".into())),
    };
    match verb {
        "info" => cmd_info(rest),
        "poly" => cmd_poly(rest),
        "f0" => cmd_f0(rest),
        "flows" => cmd_flows(rest),
        "bonds" => cmd_bonds(rest),
        "complex" => cmd_complex(rest),
        "circuits" => cmd_circuits(rest),
        "gt" => cmd_gt(rest),
        "verify" => cmd_verify(rest),
        other => Err(CliError::Usage(format!("unknown command '{other}'"))),
    }
}

fn big_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn poly_to_json(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(big_to_json).collect())
}

fn edge_set_to_json(s: EdgeSet) -> Value {
    Value::Array(s.iter().map(|e| json!(e)).collect())
}

fn flow_to_json(f: &FlowVector) -> Value {
    Value::Array(
        f.values()
            .iter()
            .map(|v| Value::Array(v.residues().iter().map(|&r| json!(r)).collect()))
            .collect(),
    )
}

fn cmd_info(args: &[String]) -> std::result::Result<Value, CliError> {
    let opts = parse_options(args, &["budget"], &[])?;
    let g = load_graph(opts.graph_file()?)?;
    Ok(json!({
        "n": g.n(),
        "m": g.m(),
        "beta": g.beta(),
        "kappa": g.kappa(),
        "balanced": g.is_balanced(),
        "components": g.components().len(),
    }))
}

fn cmd_poly(args: &[String]) -> std::result::Result<Value, CliError> {
    let opts = parse_options(args, &["d", "budget"], &[])?;
    let d = opts
        .values
        .get("d")
        .ok_or_else(|| CliError::Usage("poly needs --d".into()))?
        .parse::<u32>()
        .map_err(|_| CliError::Usage("--d must be a non-negative integer".into()))?;
    let g = load_graph(opts.graph_file()?)?;
    let p = flowpoly::fd_polynomial(&g, d, opts.budget()?)?;
    Ok(json!({ "d": d, "coeffs": poly_to_json(&p) }))
}

fn cmd_f0(args: &[String]) -> std::result::Result<Value, CliError> {
    let opts = parse_options(args, &["method", "order", "budget"], &[])?;
    let method = opts.values.get("method").map(String::as_str).unwrap_or("broken");
    let g = load_graph(opts.graph_file()?)?;
    let budget = opts.budget()?;
    let p = match method {
        "broken" => bonds::f0_broken(&g, &opts.order(g.m())?, budget)?,
        "subset" => flowpoly::fd_polynomial(&g, 0, budget)?,
        other => {
            return Err(CliError::Usage(format!(
                "--method must be 'broken' or 'subset', got '{other}'"
            )))
        }
    };
    Ok(json!({ "method": method, "coeffs": poly_to_json(&p) }))
}

fn cmd_flows(args: &[String]) -> std::result::Result<Value, CliError> {
    let opts = parse_options(args, &["group", "budget"], &["nowhere-zero", "count", "list"])?;
    let spec = opts
        .values
        .get("group")
        .ok_or_else(|| CliError::Usage("flows needs --group".into()))?;
    if opts.switches.contains("count") && opts.switches.contains("list") {
        return Err(CliError::Usage("--count and --list are mutually exclusive".into()));
    }
    let group = AbelianGroup::parse(spec)?;
    let g = load_graph(opts.graph_file()?)?;
    let budget = opts.budget()?;
    let nowhere_zero = opts.switches.contains("nowhere-zero");
    if opts.switches.contains("list") {
        let list = flows::brute_force_flows(&g, &group, nowhere_zero, budget)?;
        Ok(json!({
            "group": spec,
            "nowhere_zero": nowhere_zero,
            "flows": Value::Array(list.iter().map(flow_to_json).collect()),
        }))
    } else {
        let count = if nowhere_zero {
            let p = flowpoly::fd_polynomial(&g, group.epsilon(), budget)?;
            let v = p.evaluate(group.order() as i64);
            if v < BigInt::from(0) {
                return Err(CliError::Domain(Error::Internal(
                    "negative nowhere-zero count".into(),
                )));
            }
            v
        } else {
            BigInt::from(flows::total_flow_count(&g, &group))
        };
        Ok(json!({
            "group": spec,
            "nowhere_zero": nowhere_zero,
            "count": big_to_json(&count),
        }))
    }
}

fn cmd_bonds(args: &[String]) -> std::result::Result<Value, CliError> {
    let opts = parse_options(args, &["order", "budget"], &["broken"])?;
    let g = load_graph(opts.graph_file()?)?;
    let budget = opts.budget()?;
    if opts.switches.contains("broken") {
        let brokens = bonds::broken_bonds(&g, &opts.order(g.m())?, budget)?;
        Ok(Value::Array(brokens.into_iter().map(edge_set_to_json).collect()))
    } else {
        let all = bonds::enumerate_bonds(&g, budget)?;
        Ok(Value::Array(all.into_iter().map(|b| edge_set_to_json(b.edges)).collect()))
    }
}

fn cmd_complex(args: &[String]) -> std::result::Result<Value, CliError> {
    let opts = parse_options(args, &["order", "budget"], &[])?;
    let g = load_graph(opts.graph_file()?)?;
    let budget = opts.budget()?;
    let order = opts.order(g.m())?;
    let fvector = bonds::bb_free_fvector(&g, &order, budget)?;
    let mut obj = json!({
        "fvector": fvector,
    });
    match bonds::check_homogeneous(&g, &order, budget) {
        Ok(report) => {
            obj["top_dim"] = json!(report.top_dim);
            obj["homogeneous"] = json!(report.homogeneous);
            obj["characterization_holds"] = json!(report.characterization_holds);
            obj["maximal_simplices"] = json!(report.maximal_count);
        }
        Err(Error::Budget { required, limit }) => {
            return Err(CliError::Domain(Error::Budget { required, limit }))
        }
        Err(e) => {
            obj["homogeneous"] = Value::Null;
            obj["reason"] = json!(e.to_string());
        }
    }
    Ok(obj)
}

fn cmd_circuits(args: &[String]) -> std::result::Result<Value, CliError> {
    let opts = parse_options(args, &["budget"], &[])?;
    let g = load_graph(opts.graph_file()?)?;
    let fs = FundamentalSystem::build(&g)?;
    let circuits: Vec<Value> = fs
        .circuits()
        .iter()
        .map(|c| {
            json!({
                "edge": c.edge,
                "circuit": edge_set_to_json(c.circuit),
                "kind": match &c.kind {
                    CircuitKind::Ordinary => json!("ordinary"),
                    CircuitKind::BalancedWithRoot => json!("balanced-with-root"),
                    CircuitKind::Barbell { path } => json!({"barbell": edge_set_to_json(*path)}),
                },
                "vector": c.vector.values().iter().map(|&v| json!(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "normalized": fs.graph().to_text(),
        "switched": fs.switched().iter().map(|&b| json!(b)).collect::<Vec<_>>(),
        "tree": edge_set_to_json(fs.tree()),
        "root_edge": fs.root_edge(),
        "root_circuit": edge_set_to_json(fs.root_circuit()),
        "root_vector": fs.root_vector().values().iter().map(|&v| json!(v)).collect::<Vec<_>>(),
        "cotree": fs.cotree(),
        "circuits": circuits,
    }))
}

fn cmd_gt(args: &[String]) -> std::result::Result<Value, CliError> {
    let opts = parse_options(args, &["tree", "girth", "budget"], &[])?;
    let tree_path = opts
        .values
        .get("tree")
        .ok_or_else(|| CliError::Usage("gt needs --tree".into()))?;
    let girth = opts
        .values
        .get("girth")
        .ok_or_else(|| CliError::Usage("gt needs --girth".into()))?
        .parse::<usize>()
        .map_err(|_| CliError::Usage("--girth must be a positive integer".into()))?;
    if !opts.positional.is_empty() {
        return Err(CliError::Usage("gt takes no positional arguments".into()));
    }
    let tree = load_graph(tree_path)?;
    let budget = opts.budget()?;
    let (gt, order) = bonds::build_gt(&tree, girth)?;
    let formula = bonds::gt_formula(&tree)?;
    let f0 = bonds::f0_broken(&gt, &order, budget)?;
    let subset = flowpoly::fd_polynomial(&gt, 0, budget)?;
    Ok(json!({
        "graph": gt.to_text(),
        "order": order.sequence(),
        "formula": poly_to_json(&formula),
        "f0_broken": poly_to_json(&f0),
        "f0_subset": poly_to_json(&subset),
    }))
}

struct Checks {
    list: Vec<Value>,
    all_pass: bool,
    incomplete: bool,
}

impl Checks {
    fn new() -> Checks {
        Checks { list: Vec::new(), all_pass: true, incomplete: false }
    }

    fn record(&mut self, name: &str, outcome: Result<(bool, String)>) {
        match outcome {
            Ok((pass, detail)) => {
                self.all_pass &= pass;
                self.list.push(json!({ "name": name, "pass": pass, "detail": detail }));
            }
            Err(Error::Budget { required, limit }) => {
                self.incomplete = true;
                self.list.push(json!({
                    "name": name,
                    "pass": Value::Null,
                    "detail": format!("skipped: needs budget {required} > {limit}"),
                }));
            }
            Err(e) => {
                self.all_pass = false;
                self.list.push(json!({ "name": name, "pass": false, "detail": e.to_string() }));
            }
        }
    }
}

fn cmd_verify(args: &[String]) -> std::result::Result<Value, CliError> {
    let opts = parse_options(args, &["budget"], &[])?;
    let g = load_graph(opts.graph_file()?)?;
    let budget = opts.budget()?;
    Ok(verify_graph(&g, budget))
}

/// Cross-check the counting and coefficient identities on one graph over a
/// fixed panel of groups, comparing each closed form against the
/// brute-force oracle.
pub fn verify_graph(g: &SignedGraph, budget: Budget) -> Value {
    let panel: Vec<(&str, AbelianGroup)> = [
        ("3", vec![3u64]),
        ("4", vec![4]),
        ("5", vec![5]),
        ("2,2", vec![2, 2]),
        ("6", vec![6]),
        ("2,4", vec![2, 4]),
    ]
    .into_iter()
    .map(|(name, orders)| (name, AbelianGroup::new(&orders).unwrap()))
    .collect();

    let mut checks = Checks::new();
    let order = EdgeOrder::identity(g.m());
    let connected_unbalanced = g.is_connected() && !g.is_balanced();

    for (name, group) in &panel {
        checks.record(&format!("nowhere-zero count, polynomial vs brute force, Z[{name}]"), (|| {
            let poly = flowpoly::fd_polynomial(g, group.epsilon(), budget)?;
            let value = poly.evaluate(group.order() as i64);
            let oracle = flows::brute_force_flows(g, group, true, budget)?.len();
            Ok((value == BigInt::from(oracle), format!("poly {value}, brute force {oracle}")))
        })());

        checks.record(&format!("total count, closed form vs brute force, Z[{name}]"), (|| {
            let closed = flows::total_flow_count(g, group);
            let oracle = flows::brute_force_flows(g, group, false, budget)?.len();
            Ok((closed == oracle.into(), format!("closed form {closed}, brute force {oracle}")))
        })());

        if connected_unbalanced {
            checks.record(&format!("flow basis generation and classes, Z[{name}]"), (|| {
                let fs = FundamentalSystem::build(g)?;
                let generated = flows::enumerate_flows(&fs, group, budget)?;
                let expected =
                    (1u128 << group.epsilon()) * (group.order() as u128).pow((g.m() - g.n()) as u32);
                let distinct: std::collections::HashSet<&FlowVector> = generated.iter().collect();
                if distinct.len() as u128 != expected {
                    return Ok((false, format!("{} distinct of {expected}", distinct.len())));
                }
                let oracle = flows::brute_force_flows_oriented(
                    fs.graph(),
                    fs.orientation(),
                    group,
                    false,
                    budget,
                )?;
                if oracle.len() != generated.len()
                    || !oracle.iter().all(|f| distinct.contains(f))
                {
                    return Ok((false, "generated flows differ from brute force".into()));
                }
                let classes = flows::flow_classes(&fs, group, budget)?;
                let class_size = (group.order() as u128).pow((g.m() - g.n()) as u32);
                let even = classes.len() == 1 << group.epsilon()
                    && classes.iter().all(|(_, c)| c.len() as u128 == class_size);
                if !even {
                    return Ok((false, "classes are not even".into()));
                }
                for f in &generated {
                    let (gamma, coeffs) = flows::decompose_flow(&fs, group, f)?;
                    if &flows::compose_flow(&fs, group, &gamma, &coeffs)? != f {
                        return Ok((false, "decompose/compose mismatch".into()));
                    }
                }
                Ok((true, format!("{expected} flows, {} classes", classes.len())))
            })());
        }
    }

    checks.record("f0 broken-bond vs subset expansion", (|| {
        let broken = bonds::f0_broken(g, &order, budget)?;
        let subset = flowpoly::fd_polynomial(g, 0, budget)?;
        Ok((broken == subset, format!("broken [{broken}], subset [{subset}]")))
    })());

    if connected_unbalanced {
        checks.record("f0 coefficient facts", (|| {
            let report = bonds::coefficient_report(g, &order, budget)?;
            if !report.applicable {
                return Ok((true, "not admissible for d = 0; nothing to check".into()));
            }
            let mut notes = Vec::new();
            if !report.a1_matches_sigma {
                notes.push(format!(
                    "flagged: a_1 = {:?} but m - sigma = {}",
                    report.fvector.get(1),
                    g.m() - report.sigma
                ));
            }
            if !report.a0_is_one {
                notes.push("a_0 != 1".into());
            }
            if !report.all_positive {
                notes.push("zero coefficient below top degree".into());
            }
            if !report.alternation_matches {
                notes.push("signs do not alternate against the f-vector".into());
            }
            let detail = if notes.is_empty() {
                format!("a = {:?}, sigma = {}", report.fvector, report.sigma)
            } else {
                notes.join("; ")
            };
            Ok((report.passed(), detail))
        })());

        checks.record("bond-free complex homogeneity", (|| {
            match bonds::check_homogeneous(g, &order, budget) {
                Ok(report) => {
                    let f0 = bonds::f0_broken(g, &order, budget)?;
                    let fvector = bonds::bb_free_fvector(g, &order, budget)?;
                    let coeffs_match = (0..=report.top_dim).all(|i| {
                        let c = f0.coeff(report.top_dim - i);
                        let want = BigInt::from(fvector[i]) * if i % 2 == 0 { 1 } else { -1 };
                        c == want
                    });
                    Ok((
                        report.passed() && coeffs_match,
                        format!(
                            "top dim {}, {} maximal simplices, f-vector {:?}",
                            report.top_dim, report.maximal_count, fvector
                        ),
                    ))
                }
                Err(Error::Unsupported(_)) => {
                    Ok((true, "empty complex (not admissible); nothing to check".into()))
                }
                Err(e) => Err(e),
            }
        })());

        checks.record("bond-free sets leave unbalanced components", (|| {
            let report = bonds::proposition_check(g, &order, budget)?;
            Ok((
                report.passed,
                if report.skipped {
                    "skipped (balanced)".into()
                } else {
                    format!("counterexample: {:?}", report.counterexample)
                },
            ))
        })());
    }

    json!({
        "checks": checks.list,
        "all_pass": checks.all_pass,
        "incomplete": checks.incomplete,
    })
}
