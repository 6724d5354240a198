//! The `cis` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed flags or
//! input, 3 parameters out of range. Errors go to stderr as one line,
//! `error[CODE]: message`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use cis_core::counting::count_query;
use cis_core::formulas::{bound_value, closed_form_total, BoundId, BoundSpec, Measure};
use cis_core::{
    count_profile, emit_graph6, enumerate_cis, parse_graph6, AnchorQuery, FamilySpec, FamilyTag,
    Graph, GraphClass,
};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::input::read_single_graph;
use crate::report::{scan_csv, to_json, verification_csv};
use crate::scan::extremal_scan;
use crate::verify::{verify_theorems, VerifyCaps};

#[derive(Debug, Parser)]
#[command(
    name = "cis",
    version,
    about = "Count and enumerate connected induced subgraphs of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a family member as graph6.
    Construct(FamilyArgs),
    /// Count connected induced subgraphs by order, optionally anchored.
    Count(CountArgs),
    /// List connected induced subgraphs, one vertex set per line.
    Enumerate(CountArgs),
    /// Evaluate a closed-form family count or an extremal bound.
    Formula(FormulaArgs),
    /// Exact minimum and maximum of a measure over a catalog.
    Scan(ScanArgs),
    /// Check every extremal claim over complete catalogs.
    Verify(VerifyArgs),
}

fn family_tag(s: &str) -> Result<FamilyTag, String> {
    s.parse().map_err(|e: cis_core::Error| e.to_string())
}

fn bound_id(s: &str) -> Result<BoundId, String> {
    s.parse().map_err(|e: cis_core::Error| e.to_string())
}

fn graph_class(s: &str) -> Result<GraphClass, String> {
    if s == "components" {
        // resolved against --r later
        return Ok(GraphClass::Components(0));
    }
    s.parse().map_err(|e: cis_core::Error| e.to_string())
}

#[derive(Debug, Args)]
struct FamilyParams {
    #[arg(long)]
    n: Option<usize>,
    /// Cycle length of a tadpole.
    #[arg(long)]
    p: Option<usize>,
    /// Tail length of a tadpole.
    #[arg(long)]
    q: Option<usize>,
    /// Removed matching size for complete_minus_matching.
    #[arg(long)]
    l: Option<usize>,
}

impl FamilyParams {
    fn spec(&self, tag: FamilyTag) -> cis_core::Result<FamilySpec> {
        FamilySpec::from_parts(tag, self.n, self.p, self.q, self.l)
    }
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_parser = family_tag)]
    family: FamilyTag,
    #[command(flatten)]
    params: FamilyParams,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["graph6", "file", "family"])))]
#[command(group(ArgGroup::new("anchor").args(["containing", "pair"])))]
struct CountArgs {
    #[arg(long)]
    graph6: Option<String>,
    /// File with one graph6 string or edge list.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_parser = family_tag)]
    family: Option<FamilyTag>,
    #[command(flatten)]
    params: FamilyParams,
    /// Only sets with exactly this many vertices.
    #[arg(long)]
    k: Option<usize>,
    /// Only sets containing this vertex.
    #[arg(long)]
    containing: Option<usize>,
    /// Only sets containing both vertices, given as `u,v`.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pair: Option<Vec<usize>>,
}

impl CountArgs {
    fn graph(&self) -> Result<Graph, CliError> {
        if let Some(text) = &self.graph6 {
            return parse_graph6(text).map_err(|e| CliError::Input(e.to_string()));
        }
        if let Some(path) = &self.file {
            return read_single_graph(path).map_err(|e| match e {
                crate::input::InputError::Io { .. } => CliError::Io(e.to_string()),
                _ => CliError::Input(e.to_string()),
            });
        }
        let tag = self.family.expect("clap enforces one source");
        Ok(self.params.spec(tag)?.construct()?)
    }

    fn query(&self) -> Result<AnchorQuery, CliError> {
        let mut q = match (&self.containing, &self.pair) {
            (Some(u), _) => AnchorQuery::containing(*u),
            (None, Some(pair)) => match pair[..] {
                [u, v] => AnchorQuery::containing_pair(u, v),
                _ => {
                    return Err(CliError::Usage(
                        "--pair takes exactly two vertices, as u,v".into(),
                    ))
                }
            },
            (None, None) => AnchorQuery::any(),
        };
        if let Some(k) = self.k {
            q = q.with_order(k);
        }
        Ok(q)
    }

    fn anchored(&self) -> bool {
        self.k.is_some() || self.containing.is_some() || self.pair.is_some()
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).args(["family", "bound"])))]
struct FormulaArgs {
    #[arg(long, value_parser = family_tag)]
    family: Option<FamilyTag>,
    #[arg(long, value_parser = bound_id)]
    bound: Option<BoundId>,
    #[command(flatten)]
    params: FamilyParams,
    #[arg(long)]
    k: Option<usize>,
    /// Number of components.
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// tree, unicyclic, connected, all, components_<r>, or components with --r.
    #[arg(long, value_parser = graph_class)]
    class: GraphClass,
    #[arg(long)]
    n: usize,
    /// Scan N_k instead of the total.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads; 0 means one per core.
    #[arg(long, env = "CIS_JOBS")]
    jobs: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = VerifyCaps::default().all)]
    all: usize,
    #[arg(long, default_value_t = VerifyCaps::default().connected)]
    connected: usize,
    #[arg(long, default_value_t = VerifyCaps::default().trees)]
    trees: usize,
    #[arg(long, default_value_t = VerifyCaps::default().rooted)]
    rooted: usize,
    #[arg(long, default_value_t = VerifyCaps::default().unicyclic)]
    unicyclic: usize,
    #[arg(long, default_value_t = VerifyCaps::default().components_order)]
    components_order: usize,
    #[arg(long, default_value_t = VerifyCaps::default().components_max_r)]
    components_r: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, env = "CIS_JOBS")]
    jobs: Option<usize>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(String),
    Io(String),
    Core(cis_core::Error),
    VerifyFailed(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        use cis_core::Error as E;
        match self {
            CliError::Usage(_) => "E_USAGE",
            CliError::Input(_) => "E_INPUT",
            CliError::Io(_) => "E_IO",
            CliError::VerifyFailed(_) => "E_VERIFY",
            CliError::Core(e) => match e {
                E::Graph6(_) | E::EdgeList(_) => "E_INPUT",
                E::CapExceeded { .. } | E::OrderOutOfRange { .. } => "E_CAP",
                E::NoClosedForm(_) => "E_NO_CLOSED_FORM",
                E::Uncharacterized(_) => "E_UNCHARACTERIZED",
                E::NotATree | E::Disconnected => "E_GRAPH_CLASS",
                _ => "E_RANGE",
            },
        }
    }

    fn exit_code(&self) -> i32 {
        match self.code() {
            "E_VERIFY" => 1,
            "E_USAGE" | "E_INPUT" | "E_IO" => 2,
            _ => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m)
            | CliError::Input(m)
            | CliError::Io(m)
            | CliError::VerifyFailed(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

impl From<cis_core::Error> for CliError {
    fn from(e: cis_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(
                err,
                "error[E_USAGE]: {}",
                first.trim_start_matches("error: ")
            );
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {}", e.code(), e.message());
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Io(e.to_string()))
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Io(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

fn decimal<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Construct(a) => {
            let g = a.params.spec(a.family)?.construct()?;
            emit(out, &format!("{}\n", emit_graph6(&g)))
        }
        Command::Count(a) => {
            let g = a.graph()?;
            let q = a.query()?;
            q.validate(&g)?;
            let profile = count_profile(&g);
            let mut doc = json!({
                "order": g.order(),
                "per_order": decimal(profile.per_order()),
                "total": profile.total().to_string(),
            });
            if a.anchored() {
                let count = count_query(&g, &q)?;
                let containing: Vec<usize> = match (a.containing, &a.pair) {
                    (Some(u), _) => vec![u],
                    (None, Some(p)) => p.clone(),
                    (None, None) => Vec::new(),
                };
                doc["anchored"] = json!({
                    "containing": containing,
                    "k": a.k,
                    "count": count.total().to_string(),
                });
            }
            emit(out, &to_json(&doc))
        }
        Command::Enumerate(a) => {
            let g = a.graph()?;
            let q = a.query()?;
            let mut text = String::new();
            for set in enumerate_cis(&g, &q)? {
                text.push_str(&set.to_string());
                text.push('\n');
            }
            emit(out, &text)
        }
        Command::Formula(a) => {
            let mut params = Map::new();
            let mut put = |name: &str, v: Option<usize>| {
                if let Some(v) = v {
                    params.insert(name.to_string(), Value::from(v));
                }
            };
            let doc = if let Some(tag) = a.family {
                let spec = a.params.spec(tag)?;
                for (name, v) in [
                    ("n", a.params.n),
                    ("p", a.params.p),
                    ("q", a.params.q),
                    ("l", a.params.l),
                ] {
                    put(name, v);
                }
                let value = closed_form_total(&spec)?;
                json!({ "family": spec.to_string(), "params": params, "value": value.to_string() })
            } else {
                let id = a.bound.expect("clap enforces family or bound");
                let n = a
                    .params
                    .n
                    .ok_or_else(|| CliError::Usage(format!("--bound {id} needs --n")))?;
                let spec = BoundSpec::from_parts(id, n, a.k, a.r)?;
                for (name, v) in [("n", Some(n)), ("k", a.k), ("r", a.r)] {
                    put(name, v);
                }
                let value = bound_value(&spec)?;
                json!({ "bound": id.to_string(), "params": params, "value": value.to_string() })
            };
            emit(out, &to_json(&doc))
        }
        Command::Scan(a) => {
            let class = match (a.class, a.r) {
                (GraphClass::Components(0), Some(r)) => GraphClass::Components(r),
                (GraphClass::Components(0), None) => {
                    return Err(CliError::Usage("--class components needs --r".into()))
                }
                (GraphClass::Components(r), Some(r2)) if r != r2 => {
                    return Err(CliError::Usage(format!(
                        "--class components_{r} conflicts with --r {r2}"
                    )))
                }
                (c, _) => c,
            };
            if class == GraphClass::Components(0) {
                return Err(
                    cis_core::Error::ParameterOutOfRange("r must be at least 1".into()).into(),
                );
            }
            let measure = a.k.map_or(Measure::Total, Measure::Order);
            let report = with_jobs(a.jobs, || extremal_scan(class, a.n, measure))??;
            match a.format {
                Format::Json => emit(out, &to_json(&report)),
                Format::Csv => emit(out, &scan_csv(&report)),
            }
        }
        Command::Verify(a) => {
            let caps = VerifyCaps {
                all: a.all,
                connected: a.connected,
                trees: a.trees,
                rooted: a.rooted,
                unicyclic: a.unicyclic,
                components_order: a.components_order,
                components_max_r: a.components_r,
            };
            if let Some((name, cap, limit)) = caps.over_limit().into_iter().next() {
                return Err(cis_core::Error::CapExceeded {
                    what: name,
                    order: cap,
                    cap: limit,
                }
                .into());
            }
            let report = with_jobs(a.jobs, || verify_theorems(&caps))?;
            match a.format {
                Format::Json => emit(out, &to_json(&report))?,
                Format::Csv => emit(out, &verification_csv(&report))?,
            }
            if report.all_passed {
                Ok(())
            } else {
                let bad: Vec<&str> = report.failures().map(|c| c.id).collect();
                Err(CliError::VerifyFailed(format!(
                    "claims not passing: {}",
                    bad.join(", ")
                )))
            }
        }
    }
}
