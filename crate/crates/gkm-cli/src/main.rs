//! Command-line front end for the gkm library.
//!
//! Reads moment graphs from files (text or JSON, see the library's format
//! docs) or from `--builtin NAME`, validates them, and runs the
//! cohomology computations. All output is deterministic byte-for-byte for
//! a fixed input. Exit codes: 0 success, 1 domain error (validation
//! failure, infeasible computation, unwritable output), 2 usage or syntax
//! error.

use clap::{ArgAction, Args, Parser, Subcommand};
use gkm::builtins;
use gkm::cohomology::{self, FlowUpClass, GKMClass, GeneratorSet};
use gkm::dslio::{self, DslError};
use gkm::momentgraph::{GraphError, MomentGraph};
use gkm::polyring::{rat, LinearForm, Rational};
use serde_json::json;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gkm",
    version,
    about = "Equivariant cohomology of moment graphs",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file in the text or JSON format ('-' for standard input).
    #[arg(
        value_name = "GRAPH",
        required_unless_present = "builtin",
        conflicts_with = "builtin"
    )]
    file: Option<PathBuf>,

    /// Use a built-in graph instead of a file (see `gkm builtin --list`).
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,

    /// Parameter n for parametrized built-ins.
    #[arg(long, value_name = "N", requires = "builtin")]
    n: Option<usize>,

    /// Parameter k for parametrized built-ins.
    #[arg(long, value_name = "K", requires = "builtin")]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the validation checks and report each result.
    Validate(InputArgs),

    /// Section-space dimensions per degree with Betti deconvolution.
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        /// Highest degree to compute (default: max down-degree + 2).
        #[arg(long, value_name = "D")]
        max_degree: Option<usize>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },

    /// Betti numbers only.
    Betti {
        #[command(flatten)]
        input: InputArgs,
        /// Highest degree to examine (default: max down-degree + 2).
        #[arg(long, value_name = "D")]
        max_degree: Option<usize>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },

    /// Flow-up generator classes, one per vertex in stored order.
    Generators {
        #[command(flatten)]
        input: InputArgs,
        /// Only the generator based at this vertex.
        #[arg(long, value_name = "NAME")]
        vertex: Option<String>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },

    /// Check a class file against the edge divisibility relations.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Class file (JSON).
        #[arg(long, value_name = "FILE")]
        class: PathBuf,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },

    /// Multiply two classes; optionally expand in the generator basis.
    Multiply {
        #[command(flatten)]
        input: InputArgs,
        /// Class file; give exactly twice, once per factor.
        #[arg(long = "class", value_name = "FILE", action = ArgAction::Append)]
        classes: Vec<PathBuf>,
        /// Expand the product over the flow-up generators.
        #[arg(long)]
        expand: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },

    /// Multiplication table of the generators in ordinary cohomology.
    Ordinary {
        #[command(flatten)]
        input: InputArgs,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },

    /// Write the graph in Graphviz DOT format.
    Render {
        #[command(flatten)]
        input: InputArgs,
        /// Output file (default: standard output); written atomically.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },

    /// Print a built-in graph, or list all of them.
    Builtin {
        /// Built-in name.
        #[arg(
            value_name = "NAME",
            required_unless_present = "list",
            conflicts_with = "list"
        )]
        name: Option<String>,
        /// List available built-ins.
        #[arg(long)]
        list: bool,
        /// Parameter n.
        #[arg(long, value_name = "N", requires = "name")]
        n: Option<usize>,
        /// Parameter k.
        #[arg(long, value_name = "K", requires = "name")]
        k: Option<usize>,
        /// Emit the JSON graph format instead of the text format.
        #[arg(long)]
        json: bool,
    },
}

struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    fn domain(msg: impl Into<String>) -> Self {
        CliError { code: 1, msg: msg.into() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        CliError { code: 2, msg: msg.into() }
    }
}

impl From<DslError> for CliError {
    fn from(e: DslError) -> Self {
        match e {
            DslError::Syntax { .. } => CliError::usage(e.to_string()),
            DslError::Semantic { .. } => CliError::domain(e.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::UnknownBuiltin(_) | GraphError::InvalidParameter(_) => {
                CliError::usage(e.to_string())
            }
            _ => CliError::domain(e.to_string()),
        }
    }
}

impl From<cohomology::CohomologyError> for CliError {
    fn from(e: cohomology::CohomologyError) -> Self {
        CliError::domain(e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::domain(format!("cannot read standard input: {}", e)))?;
        Ok(s)
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::domain(format!("cannot read {}: {}", path.display(), e)))
    }
}

/// Load the input graph. With `checked` the graph must pass validation
/// (file graphs fail as semantic errors); `validate` itself loads raw so
/// it can print the full report.
fn load_graph(input: &InputArgs, checked: bool) -> Result<MomentGraph, CliError> {
    if let Some(name) = &input.builtin {
        Ok(builtins::by_name(name, input.n, input.k)?)
    } else {
        let path = input.file.as_ref().expect("clap enforces one input source");
        let text = read_input(path)?;
        let g = if checked {
            dslio::parse_graph(&text)?
        } else {
            dslio::parse_graph_raw(&text)?
        };
        Ok(g)
    }
}

fn load_class(path: &Path, g: &MomentGraph) -> Result<GKMClass, CliError> {
    let text = read_input(path)?;
    Ok(dslio::parse_class(&text, g)?)
}

fn default_degree(g: &MomentGraph, requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| g.max_down_degree() + 2)
}

/// Render a linear form with the positive terms first (`t2-t1` rather
/// than `-t1+t2`). Forms with no positive coefficient are negated and
/// flagged so callers can track the sign.
fn positives_first(lf: &LinearForm) -> (bool, String, usize) {
    let zero = rat(0);
    let one = rat(1);
    let negated = !lf.coeffs().iter().any(|c| *c > zero);
    let mut pos: Vec<String> = Vec::new();
    let mut neg: Vec<String> = Vec::new();
    for (i, c) in lf.coeffs().iter().enumerate() {
        if *c == zero {
            continue;
        }
        let c: Rational = if negated { -c.clone() } else { c.clone() };
        let mag = if c < zero { -c.clone() } else { c.clone() };
        let txt = if mag == one {
            format!("t{}", i + 1)
        } else {
            format!("{}*t{}", mag, i + 1)
        };
        if c > zero {
            pos.push(txt);
        } else {
            neg.push(txt);
        }
    }
    let mut s = String::new();
    let count = pos.len() + neg.len();
    for (i, t) in pos.iter().enumerate() {
        if i > 0 {
            s.push('+');
        }
        s.push_str(t);
    }
    for t in &neg {
        s.push('-');
        s.push_str(t);
    }
    (negated, s, count)
}

/// The base value of a flow-up class displayed as a product of the
/// downward edge directions, e.g. `t2*(t2-t1)`.
fn factored_base(g: &MomentGraph, v: usize) -> String {
    let mut plain: Vec<String> = Vec::new();
    let mut composite: Vec<String> = Vec::new();
    let mut flips = 0usize;
    for (_, e) in g.in_edges(v) {
        let (negated, s, count) = positives_first(&e.direction);
        if negated {
            flips += 1;
        }
        if count > 1 {
            composite.push(format!("({})", s));
        } else {
            plain.push(s);
        }
    }
    if plain.is_empty() && composite.is_empty() {
        return "1".to_string();
    }
    plain.sort();
    composite.sort();
    let body: Vec<String> = plain.into_iter().chain(composite).collect();
    let body = body.join("*");
    if flips % 2 == 1 {
        format!("-{}", body)
    } else {
        body
    }
}

fn generator_line(g: &MomentGraph, fu: &FlowUpClass) -> String {
    let parts: Vec<String> = fu
        .class
        .values()
        .iter()
        .enumerate()
        .map(|(v, p)| {
            if v == fu.base && !p.is_zero() {
                factored_base(g, fu.base)
            } else {
                p.to_string()
            }
        })
        .collect();
    format!(
        "base={} degree={} ambiguity={} ({})",
        g.vertex_name(fu.base),
        fu.class.degree(),
        fu.ambiguity_dim,
        parts.join(",")
    )
}

fn generator_json(g: &MomentGraph, fu: &FlowUpClass) -> serde_json::Value {
    let mut values = serde_json::Map::new();
    for (v, p) in fu.class.values().iter().enumerate() {
        if !p.is_zero() {
            values.insert(g.vertex_name(v).to_string(), json!(p.to_string()));
        }
    }
    json!({
        "base": g.vertex_name(fu.base),
        "degree": fu.class.degree(),
        "ambiguity": fu.ambiguity_dim,
        "values": values,
    })
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_validate(input: &InputArgs) -> Result<u8, CliError> {
    let g = load_graph(input, false)?;
    let report = g.validate();
    for c in &report.checks {
        println!("{}: {}", c.name, c.status);
        for f in &c.failures {
            println!("  - {}", f);
        }
    }
    let ps = g.palais_smale();
    println!(
        "palais-smale (advisory): {}",
        if ps.ok { "PASS" } else { "FAIL" }
    );
    for v in &ps.violations {
        println!("  - {}", v);
    }
    let valid = report.is_valid();
    println!("result: {}", if valid { "valid" } else { "invalid" });
    Ok(if valid { 0 } else { 1 })
}

fn cmd_hilbert(
    input: &InputArgs,
    max_degree: Option<usize>,
    as_json: bool,
) -> Result<u8, CliError> {
    let g = load_graph(input, true)?;
    let d = default_degree(&g, max_degree);
    let hd = cohomology::hilbert(&g, d)?;
    if as_json {
        print_json(&json!({
            "dims": hd.dims,
            "betti": hd.betti,
            "free": hd.free,
        }));
    } else {
        println!("dims: {}", join_usizes(&hd.dims));
        match &hd.betti {
            Some(b) => println!("betti: {}", join_usizes(b)),
            None => println!("betti: undefined"),
        }
        println!("free: {}", if hd.free { "yes" } else { "no" });
    }
    Ok(0)
}

fn cmd_betti(
    input: &InputArgs,
    max_degree: Option<usize>,
    as_json: bool,
) -> Result<u8, CliError> {
    let g = load_graph(input, true)?;
    let d = default_degree(&g, max_degree);
    let hd = cohomology::hilbert(&g, d)?;
    let betti = hd.betti.ok_or_else(|| {
        CliError::domain(format!(
            "betti numbers are undefined from the dimensions up to degree {}; \
             raise --max-degree",
            d
        ))
    })?;
    if as_json {
        print_json(&json!({ "betti": betti }));
    } else {
        println!("{}", join_usizes(&betti));
    }
    Ok(0)
}

fn cmd_generators(
    input: &InputArgs,
    vertex: Option<&str>,
    as_json: bool,
) -> Result<u8, CliError> {
    let g = load_graph(input, true)?;
    let (gens, note) = match vertex {
        Some(name) => {
            let v = g
                .vertex_index(name)
                .ok_or_else(|| CliError::domain(format!("unknown vertex '{}'", name)))?;
            (vec![cohomology::flow_up_generator(&g, v)?], None)
        }
        None => {
            let GeneratorSet { generators, betti_note } = cohomology::all_generators(&g)?;
            (generators, betti_note)
        }
    };
    if as_json {
        let arr: Vec<serde_json::Value> =
            gens.iter().map(|fu| generator_json(&g, fu)).collect();
        print_json(&json!(arr));
    } else {
        for fu in &gens {
            println!("{}", generator_line(&g, fu));
        }
        if let Some(note) = note {
            println!("note: {}", note);
        }
    }
    Ok(0)
}

fn cmd_check(input: &InputArgs, class: &Path, as_json: bool) -> Result<u8, CliError> {
    let g = load_graph(input, true)?;
    let c = load_class(class, &g)?;
    let (ok, violated) = cohomology::check_class(&g, &c)?;
    if as_json {
        let labels: Vec<String> = violated.iter().map(|&e| g.edge_label(e)).collect();
        print_json(&json!({ "ok": ok, "violations": labels }));
    } else if ok {
        println!("PASS");
    } else {
        println!("FAIL");
        for &e in &violated {
            println!("  - {}", g.edge_label(e));
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_multiply(
    input: &InputArgs,
    classes: &[PathBuf],
    expand: bool,
    as_json: bool,
) -> Result<u8, CliError> {
    if classes.len() != 2 {
        return Err(CliError::usage(
            "expected exactly two --class FILE arguments",
        ));
    }
    let g = load_graph(input, true)?;
    let a = load_class(&classes[0], &g)?;
    let b = load_class(&classes[1], &g)?;
    let prod = cohomology::multiply(&g, &a, &b)?;
    let expansion = if expand {
        let gens = cohomology::all_generators(&g)?;
        Some(cohomology::expand(&g, &gens.generators, &prod)?)
    } else {
        None
    };
    if as_json {
        let mut values = serde_json::Map::new();
        for (v, p) in prod.values().iter().enumerate() {
            if !p.is_zero() {
                values.insert(g.vertex_name(v).to_string(), json!(p.to_string()));
            }
        }
        let mut doc = serde_json::Map::new();
        doc.insert("degree".into(), json!(prod.degree()));
        doc.insert("values".into(), json!(values));
        if let Some(coeffs) = &expansion {
            let strs: Vec<String> = coeffs.iter().map(|p| p.to_string()).collect();
            doc.insert("expand".into(), json!(strs));
        }
        print_json(&serde_json::Value::Object(doc));
    } else {
        println!("{}", prod.tuple_string());
        if let Some(coeffs) = &expansion {
            let parts: Vec<String> = coeffs.iter().map(|p| p.to_string()).collect();
            println!("expand: ({})", parts.join(","));
        }
    }
    Ok(0)
}

fn cmd_ordinary(input: &InputArgs, as_json: bool) -> Result<u8, CliError> {
    let g = load_graph(input, true)?;
    let gens = cohomology::all_generators(&g)?;
    let table = cohomology::ordinary_table(&g, &gens)?;
    if as_json {
        let cells: Vec<Vec<Vec<serde_json::Value>>> = table
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        cell.iter()
                            .map(|(l, q)| json!([l, q.to_string()]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        print_json(&json!({
            "generators": table.degrees,
            "table": cells,
        }));
    } else {
        for (i, fu) in gens.generators.iter().enumerate() {
            println!(
                "g{}: base={} degree={}",
                i + 1,
                g.vertex_name(fu.base),
                fu.class.degree()
            );
        }
        let n = table.degrees.len();
        for i in 0..n {
            if table.degrees[i] == 0 {
                continue;
            }
            for j in i..n {
                if table.degrees[j] == 0 {
                    continue;
                }
                println!(
                    "g{}*g{} = {}",
                    i + 1,
                    j + 1,
                    render_combination(&table.table[i][j])
                );
            }
        }
    }
    Ok(0)
}

fn render_combination(cell: &[(usize, Rational)]) -> String {
    if cell.is_empty() {
        return "0".to_string();
    }
    let one = rat(1);
    let parts: Vec<String> = cell
        .iter()
        .map(|(l, q)| {
            if *q == one {
                format!("g{}", l + 1)
            } else {
                format!("{}*g{}", q, l + 1)
            }
        })
        .collect();
    parts.join(" + ")
}

fn cmd_render(input: &InputArgs, output: Option<&Path>) -> Result<u8, CliError> {
    let g = load_graph(input, true)?;
    let dot = dslio::emit_dot(&g);
    match output {
        None => {
            print!("{}", dot);
        }
        Some(path) => {
            let file_name = path
                .file_name()
                .ok_or_else(|| CliError::domain(format!("not a file path: {}", path.display())))?;
            let mut tmp_name = file_name.to_os_string();
            tmp_name.push(".tmp");
            let tmp = path.with_file_name(tmp_name);
            fs::write(&tmp, &dot).map_err(|e| {
                CliError::domain(format!("cannot write {}: {}", tmp.display(), e))
            })?;
            fs::rename(&tmp, path).map_err(|e| {
                let _ = fs::remove_file(&tmp);
                CliError::domain(format!("cannot write {}: {}", path.display(), e))
            })?;
        }
    }
    Ok(0)
}

fn cmd_builtin(
    name: Option<&str>,
    list: bool,
    n: Option<usize>,
    k: Option<usize>,
    as_json: bool,
) -> Result<u8, CliError> {
    if list {
        for (name, params) in builtins::catalog() {
            if params.is_empty() {
                println!("{}", name);
            } else {
                println!("{} {}", name, params);
            }
        }
        return Ok(0);
    }
    let name = name.expect("clap enforces name or --list");
    let g = builtins::by_name(name, n, k)?;
    if as_json {
        print!("{}", dslio::emit_json(&g));
    } else {
        print!("{}", dslio::serialize_dsl(&g));
    }
    Ok(0)
}

fn join_usizes(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match &cli.cmd {
        Cmd::Validate(input) => cmd_validate(input),
        Cmd::Hilbert { input, max_degree, json } => cmd_hilbert(input, *max_degree, *json),
        Cmd::Betti { input, max_degree, json } => cmd_betti(input, *max_degree, *json),
        Cmd::Generators { input, vertex, json } => {
            cmd_generators(input, vertex.as_deref(), *json)
        }
        Cmd::Check { input, class, json } => cmd_check(input, class, *json),
        Cmd::Multiply { input, classes, expand, json } => {
            cmd_multiply(input, classes, *expand, *json)
        }
        Cmd::Ordinary { input, json } => cmd_ordinary(input, *json),
        Cmd::Render { input, output } => cmd_render(input, output.as_deref()),
        Cmd::Builtin { name, list, n, k, json } => {
            cmd_builtin(name.as_deref(), *list, *n, *k, *json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
