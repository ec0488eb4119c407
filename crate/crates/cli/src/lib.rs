//! Argument handling for the `jvass` binary, kept in a library so tests can
//! drive it without spawning processes.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use jvass::exactnum::{factorial, format_rational, BigRational};
use jvass::series::{empirical_lambda, expand_exp, lambda_for_order, log_expand, moments, vassiliev_from_moment};
use jvass::table::{load_builtin, load_file, KnotTable};
use jvass::verify::{run_suite, Suite};
use jvass::{BraidWord, CheckReport, Error, LaurentPoly, PlanarDiagram};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "jvass", version, about = "Jones polynomials and their integer Vassiliev invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct Input {
    /// PD code, e.g. "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)" or "U"
    #[arg(long, group = "source")]
    pd: Option<String>,
    /// Braid word, e.g. "strands: 3; word: 1,-2,1,-2"
    #[arg(long, group = "source")]
    braid: Option<String>,
    /// Knot name from the builtin table (or one added with --table)
    #[arg(long, group = "source")]
    knot: Option<String>,
    /// File holding a PD code or a braid word
    #[arg(long, group = "source")]
    file: Option<PathBuf>,
    /// Use the mirror image
    #[arg(long)]
    mirror: bool,
    /// JSON-lines table extending the builtin one
    #[arg(long)]
    table: Option<PathBuf>,
}

impl Input {
    fn has_source(&self) -> bool {
        self.pd.is_some() || self.braid.is_some() || self.knot.is_some() || self.file.is_some()
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jones polynomial of a knot
    Jones {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients a_0..a_K of J(e^x)
    Expand {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// λ_k: closed form, table value, or empirical over the given knots
    Lambda {
        #[arg(long, alias = "k")]
        order: u64,
        /// Knots for an empirical value (repeat the flag or separate with commas)
        #[arg(long, value_delimiter = ',')]
        knot: Vec<String>,
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// v_k = λ_k·a_k
    Vassiliev {
        #[command(flatten)]
        input: Input,
        #[arg(long, alias = "k")]
        order: u64,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients w_0..w_K of log J(e^x)
    Logexpand {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite over one knot or the whole table
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        kmax: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Inspect or validate knot tables
    Table {
        #[command(subcommand)]
        action: TableAction,
    },
}

#[derive(Subcommand, Debug)]
enum TableAction {
    /// List knots with their Jones polynomials
    List {
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Validate a JSON-lines file, reporting bad lines
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

/// Result of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json serializes");
    s.push('\n');
    s
}

fn table_with(extra: Option<&PathBuf>) -> jvass::Result<KnotTable> {
    let mut table = load_builtin()?;
    if let Some(path) = extra {
        let outcome = load_file(path)?;
        if let Some(e) = outcome.errors.first() {
            return Err(Error::Input(format!("{}:{}: {}", path.display(), e.line, e.message)));
        }
        table.extend(outcome.records)?;
    }
    Ok(table)
}

fn parse_diagram(text: &str) -> jvass::Result<PlanarDiagram> {
    let t = text.trim();
    if t.starts_with("strands") {
        t.parse::<BraidWord>()?.to_pd()
    } else {
        t.parse()
    }
}

/// Resolves the input to a display name and its Jones polynomial.
fn resolve(input: &Input, table: &KnotTable) -> jvass::Result<(String, LaurentPoly)> {
    let (name, j) = if let Some(pd) = &input.pd {
        ("input".to_string(), jvass::jones(&pd.parse::<PlanarDiagram>()?)?)
    } else if let Some(b) = &input.braid {
        ("input".to_string(), jvass::jones(&b.parse::<BraidWord>()?.to_pd()?)?)
    } else if let Some(path) = &input.file {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        ("input".to_string(), jvass::jones(&parse_diagram(&text)?)?)
    } else if let Some(k) = &input.knot {
        let r = table.require(k)?;
        (r.name.clone(), r.jones()?)
    } else {
        return Err(Error::Input("one of --pd, --braid, --knot, --file is required".into()));
    };
    if input.mirror {
        Ok((format!("{name}*"), j.invert_variable()))
    } else {
        Ok((name, j))
    }
}

fn rationals(xs: &[BigRational]) -> Vec<String> {
    xs.iter().map(format_rational).collect()
}

fn indexed_lines(prefix: &str, xs: &[BigRational]) -> String {
    xs.iter().enumerate().map(|(i, x)| format!("{prefix}_{i} = {}\n", format_rational(x))).collect()
}

fn report_output(report: &CheckReport, json: bool) -> Output {
    let stdout = if json { format!("{}\n", report.to_json()) } else { report.to_text() };
    Output {
        code: if report.pass() { EXIT_OK } else { EXIT_VIOLATION },
        stdout,
        stderr: String::new(),
    }
}

fn run_command(command: Command) -> jvass::Result<Output> {
    match command {
        Command::Jones { input, json } => {
            let table = table_with(input.table.as_ref())?;
            let (name, j) = resolve(&input, &table)?;
            Ok(Output::ok(if json {
                to_line(&json!({"knot": name, "jones": j.to_string(), "polynomial": j.to_json_value("t")}))
            } else {
                format!("{j}\n")
            }))
        }
        Command::Expand { input, order, json } => {
            let table = table_with(input.table.as_ref())?;
            let (name, j) = resolve(&input, &table)?;
            let s = expand_exp(&j, order)?;
            Ok(Output::ok(if json {
                to_line(&json!({"knot": name, "order": order, "a": rationals(s.coeffs())}))
            } else {
                indexed_lines("a", s.coeffs())
            }))
        }
        Command::Logexpand { input, order, json } => {
            let table = table_with(input.table.as_ref())?;
            let (name, j) = resolve(&input, &table)?;
            let w = log_expand(&expand_exp(&j, order)?)?;
            Ok(Output::ok(if json {
                to_line(&json!({"knot": name, "order": order, "w": rationals(w.coeffs())}))
            } else {
                indexed_lines("w", w.coeffs())
            }))
        }
        Command::Lambda { order, knot, table, json } => {
            let lam = if knot.is_empty() {
                lambda_for_order(order)?
            } else {
                let table = table_with(table.as_ref())?;
                let f = factorial(order);
                let values = knot
                    .iter()
                    .map(|k| {
                        let a = moments(&table.require(k)?.jones()?, order as usize);
                        Ok(BigRational::new(a[order as usize].clone(), f.clone()))
                    })
                    .collect::<jvass::Result<Vec<_>>>()?;
                empirical_lambda(order, &values)?
            };
            Ok(Output::ok(if json {
                to_line(&lam.to_json_value())
            } else {
                format!("lambda_{order} = {} ({})\n", format_rational(&lam.value), lam.status)
            }))
        }
        Command::Vassiliev { input, order, json } => {
            let table = table_with(input.table.as_ref())?;
            let (name, j) = resolve(&input, &table)?;
            let lam = lambda_for_order(order)?;
            let a = moments(&j, order as usize);
            let v = vassiliev_from_moment(&a[order as usize], &lam)?;
            Ok(Output::ok(if json {
                to_line(&json!({
                    "knot": name,
                    "order": order,
                    "lambda": lam.to_json_value(),
                    "value": format_rational(&v.value),
                    "integer": v.integer,
                }))
            } else {
                let note = if v.integer { "" } else { " (not an integer)" };
                format!(
                    "v_{order} = {}{note}; lambda_{order} = {} ({})\n",
                    format_rational(&v.value),
                    format_rational(&lam.value),
                    lam.status
                )
            }))
        }
        Command::Verify { suite, input, kmax, json } => {
            let suites = Suite::parse_list(&suite)?;
            let table = table_with(input.table.as_ref())?;
            let knots = if input.has_source() { vec![resolve(&input, &table)?] } else { table.jones_list()? };
            let reports = suites
                .iter()
                .map(|s| run_suite(*s, &knots, &table, kmax))
                .collect::<jvass::Result<Vec<_>>>()?;
            if reports.len() == 1 {
                return Ok(report_output(&reports[0], json));
            }
            let pass = reports.iter().all(CheckReport::pass);
            let stdout = if json {
                to_line(&json!({
                    "pass": pass,
                    "reports": reports.iter().map(CheckReport::to_json_value).collect::<Vec<_>>(),
                }))
            } else {
                reports.iter().map(CheckReport::to_text).collect::<Vec<_>>().join("\n")
            };
            Ok(Output { code: if pass { EXIT_OK } else { EXIT_VIOLATION }, stdout, stderr: String::new() })
        }
        Command::Table { action: TableAction::List { table, json } } => {
            let table = table_with(table.as_ref())?;
            let rows = table
                .records()
                .iter()
                .map(|r| Ok((r.name.clone(), r.pd.crossing_count(), r.jones()?)))
                .collect::<jvass::Result<Vec<_>>>()?;
            Ok(Output::ok(if json {
                rows.iter()
                    .map(|(n, c, j)| to_line(&json!({"name": n, "crossings": c, "jones": j.to_string()})))
                    .collect()
            } else {
                let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
                rows.iter().map(|(n, c, j)| format!("{n:<width$}  {c:>2}  {j}\n")).collect()
            }))
        }
        Command::Table { action: TableAction::Validate { path, json } } => {
            let outcome = load_file(&path)?;
            let code = if outcome.errors.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
            let stdout = if json {
                to_line(&json!({
                    "pass": outcome.errors.is_empty(),
                    "records": outcome.records.iter().map(|r| r.name.clone()).collect::<Vec<_>>(),
                    "errors": outcome.errors.iter().map(|e| json!({"line": e.line, "message": e.message})).collect::<Vec<_>>(),
                }))
            } else {
                let mut s = format!("{} records accepted, {} lines rejected\n", outcome.records.len(), outcome.errors.len());
                for e in &outcome.errors {
                    s.push_str(&format!("line {}: {}\n", e.line, e.message));
                }
                s
            };
            Ok(Output { code, stdout, stderr: String::new() })
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output::ok(text)
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match run_command(cli.command) {
        Ok(out) => out,
        Err(e) => Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
