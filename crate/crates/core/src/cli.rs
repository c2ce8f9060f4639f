//! Command-line front end. Every subcommand formats library results as
//! `key: value` lines, or as one JSON object with the same keys.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{Map, Value};

use crate::chartab::{
    eta, involution_cover, kappa, parse_table, serialize_table, validate_table, CharacterTable,
};
use crate::error::{Error, Result};
use crate::ff::FFMatrix;
use crate::lie::{
    d2_unipotent_closed, d3_unipotent_closed, ppd, reconcile, table1_value, torus_order_unitary,
    weil_chi, weil_zeta, DualPair, Partition, Variant, WeilContext,
};
use crate::oracle::{dixon_character_table, groups, involution_width_oracle, GroupElement, SmallGroup};
use crate::permutation::Permutation;
use crate::involution::decompose;

#[derive(Parser, Debug)]
#[command(name = "iwidth", version, about = "Exact tools for involution widths of finite groups")]
pub struct Cli {
    /// Emit one JSON object instead of `key: value` lines.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write an even permutation as a product of at most three involutions.
    Decompose {
        #[arg(short = 'm', long)]
        degree: usize,
        /// Cycle notation, e.g. "(1 2 3)(4 5)".
        permutation: String,
    },
    /// Structure constant: tuples from the given classes multiplying to a
    /// fixed element of the target class.
    Eta {
        table: PathBuf,
        /// Source class names, separated by spaces or commas.
        #[arg(long, short = 'c')]
        classes: String,
        #[arg(long, short = 't')]
        target: String,
    },
    /// Exact involution width of every class by brute force.
    Width {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Character table by the Burnside-Dixon method.
    TableCompute {
        #[command(flatten)]
        group: GroupArg,
        /// Write the table as JSON here.
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Orthogonality and consistency checks on a table file.
    TableValidate { table: PathBuf },
    /// Classes reachable as products of involution classes, up to `k` factors.
    Cover {
        table: PathBuf,
        #[arg(short = 'k', default_value_t = 4)]
        k: u32,
    },
    /// Degree of the unipotent character indexed by a partition.
    Degree {
        /// Comma-separated parts, e.g. 4,2,1.
        #[arg(short = 'p', long)]
        partition: String,
        #[arg(short = 'q')]
        q: u64,
        #[arg(long, default_value = "unitary")]
        variant: String,
    },
    /// Primitive prime divisors of q^n - 1.
    Ppd {
        #[arg(short = 'q')]
        q: u64,
        #[arg(short = 'n')]
        n: u32,
    },
    /// Order of the maximal torus of SU_n(q) of the given shape.
    Torus {
        /// Comma-separated parts.
        #[arg(short = 's', long)]
        shape: String,
        #[arg(short = 'q')]
        q: u64,
    },
    /// Weil character values of a unitary matrix.
    Weil {
        /// Matrix file over GF(q^2).
        matrix: PathBuf,
        /// Only this constituent; all of 0..=q otherwise.
        #[arg(short = 't')]
        t: Option<u64>,
    },
    /// Value of D_alpha for a row of the GU_k(q) table.
    Dalpha {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'q')]
        q: u64,
        #[arg(long)]
        row: usize,
        /// Matrix file over GF(q^2); the identity of size `n` otherwise.
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(short = 'n', required_unless_present = "matrix")]
        n: Option<usize>,
    },
    /// Closed form for the k = 2 unipotent values.
    D2closed(ClosedArgs),
    /// Closed form for the k = 3 unipotent values.
    D3closed(ClosedArgs),
    /// Evaluate a row of the constituent-degree table.
    Table1 {
        #[arg(long)]
        row: String,
        #[arg(short = 'n')]
        n: u32,
        #[arg(short = 'q')]
        q: u64,
    },
    /// Compare the closed forms with direct dual-pair evaluation.
    Reconcile {
        #[arg(short = 'n', default_value_t = 7)]
        n: usize,
        #[arg(short = 'q', default_value_t = 2)]
        q: u64,
    },
}

#[derive(Args, Debug)]
pub struct ClosedArgs {
    #[arg(short = 'q')]
    q: u64,
    /// Number of Jordan blocks of the unipotent element.
    #[arg(short = 'r')]
    r: i64,
    /// Number of blocks of size one.
    #[arg(long)]
    r1: i64,
}

#[derive(Args, Debug)]
pub struct GroupArg {
    /// A named group: A3..A10, PSL27, M11.
    #[arg(required_unless_present = "generators")]
    name: Option<String>,
    /// Generator file: one permutation per line, or matrices each starting
    /// with a `GF(p^k) n` header.
    #[arg(long, short = 'g', conflicts_with = "name")]
    generators: Option<PathBuf>,
    /// Permutation degree; required for permutation generator files.
    #[arg(short = 'm', long)]
    degree: Option<usize>,
    #[arg(long, default_value_t = 100_000)]
    cap: usize,
}

/// Ordered `key: value` report.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.entries.push((key.into(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.entries {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            s.push_str(&format!("{k}: {v}\n"));
        }
        s
    }

    pub fn to_json(&self) -> String {
        let mut m = Map::new();
        for (k, v) in &self.entries {
            m.insert(k.clone(), v.clone());
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Exit status and rendered output of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                CommandResult { status, stdout: text, stderr: String::new() }
            } else {
                CommandResult { status, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> CommandResult {
    match execute(&cli.command) {
        Ok(r) => CommandResult {
            status: 0,
            stdout: if cli.json { r.to_json() } else { r.to_text() },
            stderr: String::new(),
        },
        Err(e) => CommandResult {
            status: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Decompose { degree, permutation } => run_decompose(*degree, permutation),
        Command::Eta { table, classes, target } => run_eta(table, classes, target),
        Command::Width { group } => run_width(group),
        Command::TableCompute { group, output } => run_table_compute(group, output.as_deref()),
        Command::TableValidate { table } => run_table_validate(table),
        Command::Cover { table, k } => run_cover(table, *k),
        Command::Degree { partition, q, variant } => run_degree(partition, *q, variant),
        Command::Ppd { q, n } => {
            let mut r = Report::default();
            r.push("q", *q);
            r.push("n", *n);
            r.push("ppd", ppd(*q, *n)?);
            Ok(r)
        }
        Command::Torus { shape, q } => {
            let parts = parse_parts(shape)?;
            let mut r = Report::default();
            r.push("shape", shape.as_str());
            r.push("q", *q);
            r.push("order", torus_order_unitary(&parts, *q)?.to_string());
            Ok(r)
        }
        Command::Weil { matrix, t } => run_weil(matrix, *t),
        Command::Dalpha { k, q, row, matrix, n } => run_dalpha(*k, *q, *row, matrix.as_deref(), *n),
        Command::D2closed(a) => run_closed(a, 2),
        Command::D3closed(a) => run_closed(a, 3),
        Command::Table1 { row, n, q } => {
            let v = table1_value(row, *n, *q)?;
            let mut r = Report::default();
            r.push("row", row.as_str());
            r.push("n", *n);
            r.push("q", *q);
            r.push("value", v.to_string());
            r.push("integral", v.is_integer());
            Ok(r)
        }
        Command::Reconcile { n, q } => run_reconcile(*n, *q),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part list {s:?}"))))
        .collect()
}

fn run_decompose(degree: usize, text: &str) -> Result<Report> {
    let g = Permutation::parse(text, degree)?;
    let f = decompose(&g)?;
    let mut r = Report::default();
    r.push("degree", degree);
    r.push("target", g.to_string());
    r.push("cycle_type", format!("{:?}", g.cycle_decomposition().cycle_type()));
    r.push("factors", f.factors.len());
    for (i, x) in f.factors.iter().enumerate() {
        r.push(format!("factor.{}", i + 1), x.to_string());
        r.push(format!("factor.{}.order", i + 1), x.order());
        r.push(format!("factor.{}.parity", i + 1), x.parity().to_string());
    }
    r.push("verified", f.verify());
    Ok(r)
}

fn run_eta(path: &Path, classes: &str, target: &str) -> Result<Report> {
    let t = parse_table(path)?;
    let names: Vec<&str> = classes
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .collect();
    let sources = names.iter().map(|n| t.class_index(n)).collect::<Result<Vec<_>>>()?;
    let tgt = t.class_index(target)?;
    let mut r = Report::default();
    r.push("group", t.group_name.as_str());
    r.push("classes", names.join(" "));
    r.push("target", target);
    r.push("eta", eta(&t, &sources, tgt)?.to_string());
    r.push("kappa", kappa(&t, &sources, tgt)?.to_string());
    let mut seen = Vec::new();
    for &c in sources.iter().chain(std::iter::once(&tgt)) {
        if !seen.contains(&c) {
            seen.push(c);
            r.push(format!("centralizer.{}", t.classes[c].name), t.centralizer_order(c));
        }
    }
    Ok(r)
}

enum LoadedGroup {
    Perm(SmallGroup<Permutation>),
    Matrix(SmallGroup<FFMatrix>),
}

fn load_group(g: &GroupArg) -> Result<(String, LoadedGroup)> {
    if let Some(name) = &g.name {
        return Ok((name.clone(), LoadedGroup::Perm(groups::named(name)?)));
    }
    let path = g.generators.as_ref().expect("clap requires a name or a generator file");
    let text = read(path)?;
    let label = path.display().to_string();
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .collect();
    if lines.first().is_some_and(|l| l.starts_with("GF(")) {
        let mut gens = Vec::new();
        let mut block = String::new();
        for l in lines {
            if l.starts_with("GF(") && !block.is_empty() {
                gens.push(FFMatrix::parse(&block)?);
                block.clear();
            }
            block.push_str(l);
            block.push('\n');
        }
        gens.push(FFMatrix::parse(&block)?);
        return Ok((label, LoadedGroup::Matrix(SmallGroup::enumerate(&gens, g.cap)?)));
    }
    let degree = g.degree.ok_or_else(|| {
        Error::Precondition("permutation generator files need an explicit --degree".into())
    })?;
    let gens = lines
        .iter()
        .map(|l| Permutation::parse(l, degree))
        .collect::<Result<Vec<_>>>()?;
    Ok((label, LoadedGroup::Perm(SmallGroup::enumerate(&gens, g.cap)?)))
}

fn width_report<E: GroupElement>(name: &str, g: &SmallGroup<E>) -> Result<Report> {
    let cd = g.conjugacy_classes();
    let w = involution_width_oracle(g, &cd)?;
    let mut r = Report::default();
    r.push("group", name);
    r.push("order", g.order());
    r.push("classes", cd.len());
    for (c, name) in w.class_names.iter().enumerate() {
        r.push(format!("width.{name}"), w.class_widths[c]);
    }
    r.push("width", w.group_width);
    Ok(r)
}

fn run_width(arg: &GroupArg) -> Result<Report> {
    match load_group(arg)? {
        (n, LoadedGroup::Perm(g)) => width_report(&n, &g),
        (n, LoadedGroup::Matrix(g)) => width_report(&n, &g),
    }
}

fn table_of<E: GroupElement>(name: &str, g: &SmallGroup<E>) -> Result<CharacterTable> {
    dixon_character_table(g, &g.conjugacy_classes(), name)
}

fn run_table_compute(arg: &GroupArg, output: Option<&Path>) -> Result<Report> {
    let t = match load_group(arg)? {
        (n, LoadedGroup::Perm(g)) => table_of(&n, &g)?,
        (n, LoadedGroup::Matrix(g)) => table_of(&n, &g)?,
    };
    let mut r = Report::default();
    r.push("group", t.group_name.as_str());
    r.push("order", t.order);
    r.push("classes", t.classes.iter().map(|c| c.name.as_str()).collect::<Vec<_>>().join(" "));
    r.push(
        "degrees",
        t.degrees().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "),
    );
    r.push("valid", validate_table(&t).passed());
    if let Some(path) = output {
        serialize_table(&t, path)?;
        r.push("written", path.display().to_string());
    }
    Ok(r)
}

fn run_table_validate(path: &Path) -> Result<Report> {
    let t = parse_table(path)?;
    let v = validate_table(&t);
    let mut r = Report::default();
    r.push("group", t.group_name.as_str());
    r.push("passed", v.passed());
    r.push("failures", v.failures.len());
    for (i, f) in v.failures.iter().enumerate() {
        r.push(format!("failure.{}", i + 1), f.to_string());
    }
    Ok(r)
}

fn run_cover(path: &Path, k: u32) -> Result<Report> {
    let t = parse_table(path)?;
    let c = involution_cover(&t, k)?;
    let mut r = Report::default();
    r.push("group", t.group_name.as_str());
    r.push("k", k);
    for (i, lvl) in c.min_level.iter().enumerate() {
        let v = match lvl {
            Some(l) => Value::from(*l),
            None => Value::Null,
        };
        r.push(format!("level.{}", t.classes[i].name), v);
    }
    r.push(
        "width",
        c.width.map_or_else(|| format!("> {k}"), |w| w.to_string()),
    );
    Ok(r)
}

fn run_degree(partition: &str, q: u64, variant: &str) -> Result<Report> {
    let lam: Partition = partition.parse()?;
    let v: Variant = variant.parse()?;
    let mut r = Report::default();
    r.push("partition", lam.to_string());
    r.push("q", q);
    r.push("variant", variant);
    r.push("rho", lam.rho_polynomial().to_string());
    r.push("degree", lam.unipotent_degree(q, v).to_string());
    Ok(r)
}

/// `q` with `GF(q²)` the field of the matrix.
fn unitary_q(m: &FFMatrix) -> Result<u64> {
    let f = m.field();
    if f.degree() % 2 != 0 {
        return Err(Error::Precondition(format!(
            "unitary matrices live over GF(q^2); got GF({}^{})",
            f.characteristic(),
            f.degree()
        )));
    }
    Ok(f.characteristic().pow(f.degree() / 2))
}

fn run_weil(path: &Path, t: Option<u64>) -> Result<Report> {
    let g = FFMatrix::parse(&read(path)?)?;
    let q = unitary_q(&g)?;
    let ctx = WeilContext::new(g.dim(), q)?;
    let mut r = Report::default();
    r.push("n", g.dim());
    r.push("q", q);
    r.push("unitary", g.is_unitary(q));
    r.push("zeta", weil_zeta(&ctx, &g)?.to_string());
    let ts: Vec<u64> = match t {
        Some(t) => vec![t],
        None => (0..=q).collect(),
    };
    for t in ts {
        r.push(format!("chi.{t}"), weil_chi(&ctx, t, &g)?.to_string());
    }
    Ok(r)
}

fn run_dalpha(k: usize, q: u64, row: usize, matrix: Option<&Path>, n: Option<usize>) -> Result<Report> {
    let pair = DualPair::new(k, q)?;
    let mut r = Report::default();
    r.push("k", k);
    r.push("q", q);
    r.push("row", row);
    let degree = pair
        .row_degree(row)
        .ok_or_else(|| Error::Precondition(format!("no row {row} in the GU_{k}({q}) table")))?;
    r.push("alpha_degree", degree);
    r.push("alpha_real", pair.row_is_real(row));
    let value = match matrix {
        Some(p) => {
            let g = FFMatrix::parse(&read(p)?)?;
            r.push("n", g.dim());
            pair.d_alpha(row, &g)?
        }
        None => {
            let n = n.expect("clap requires n without a matrix");
            r.push("n", n);
            pair.d_alpha_at_identity(row, n)?
        }
    };
    r.push("d_alpha", value.to_string());
    Ok(r)
}

fn run_closed(a: &ClosedArgs, k: usize) -> Result<Report> {
    let v = if k == 2 {
        d2_unipotent_closed(a.q, a.r, a.r1)?
    } else {
        d3_unipotent_closed(a.q, a.r, a.r1)?
    };
    let mut r = Report::default();
    r.push("k", k);
    r.push("q", a.q);
    r.push("r", a.r);
    r.push("r1", a.r1);
    r.push("value", v.to_string());
    r.push("integral", v.is_integer());
    Ok(r)
}

fn run_reconcile(n: usize, q: u64) -> Result<Report> {
    let rep = reconcile(n, q)?;
    let mut r = Report::default();
    r.push("n", n);
    r.push("q", q);
    r.push("alpha.2", rep.alpha2.to_string());
    r.push("alpha.3", rep.alpha3.to_string());
    for (i, l) in rep.lines.iter().enumerate() {
        r.push(format!("line.{}", i + 1), l.to_string());
    }
    let mismatches = rep.lines.iter().filter(|l| !l.matches).count();
    r.push("mismatches", mismatches);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CommandResult {
        run_args(std::iter::once("iwidth").chain(args.iter().copied()))
    }

    #[test]
    fn decompose_seven_cycle() {
        let out = run(&["decompose", "-m", "7", "(1 2 3 4 5 6 7)"]);
        assert_eq!(out.status, 0);
        assert!(out.stdout.contains("factors: 3\n"));
        assert!(out.stdout.contains("verified: true\n"));
    }

    #[test]
    fn errors_exit_nonzero() {
        let out = run(&["decompose", "-m", "5", "(1 2)"]);
        assert_eq!(out.status, 1);
        assert!(out.stderr.contains("odd permutation"));
        assert_eq!(run(&["decompose", "-m", "5"]).status, 2);
    }

    #[test]
    fn json_mirrors_text() {
        let text = run(&["ppd", "-q", "2", "-n", "6"]);
        assert_eq!(text.stdout, "q: 2\nn: 6\nppd: []\n");
        let json = run(&["--json", "ppd", "-q", "2", "-n", "10"]);
        let v: Value = serde_json::from_str(&json.stdout).unwrap();
        assert_eq!(v["ppd"], serde_json::json!([11]));
    }
}
