//! Library side of the `tcover` command-line tool. Every subcommand is a
//! function returning the text it prints, so tests can drive them without
//! spawning processes.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use tcover_core::{
    approx_total_cover, exact_total_cover, format_ratio, greedy_domination_cover, is_total_cover,
    lemma1_lower_bound, matched_vertices_cover, parse_cover, parse_graph, serialize_graph,
    uncovered_element, ExactError, Family, Graph, InstanceError, InstanceSpec, MatchingMode,
    ParseError, Ratio, SearchLimits,
};

/// Decimal places used for every printed ratio.
pub const RATIO_PLACES: u32 = 4;

pub const CSV_HEADER: [&str; 14] = [
    "instance",
    "n",
    "edges",
    "m",
    "k",
    "t",
    "alg_size",
    "lower_bound",
    "exact_size",
    "baseline_size",
    "greedy_size",
    "ratio_vs_lb",
    "ratio_vs_exact",
    "error",
];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("INVALID witness={0}")]
    InvalidCover(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    BadParameter(String),
    #[error("internal validation failure: {0}")]
    Internal(String),
    #[error("{0}")]
    TooLarge(ExactError),
    #[error("{0}")]
    BudgetExceeded(ExactError),
}

impl CliError {
    /// 0 ok, 1 invalid cover, 2 parse or parameter error, 3 internal
    /// validation failure, 4 too large, 5 budget exhausted.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidCover(_) => 1,
            CliError::Io { .. } | CliError::Parse { .. } | CliError::BadParameter(_) => 2,
            CliError::Internal(_) => 3,
            CliError::TooLarge(_) => 4,
            CliError::BudgetExceeded(_) => 5,
        }
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::TooLarge { .. } => CliError::TooLarge(e),
            ExactError::BudgetExceeded { .. } => CliError::BudgetExceeded(e),
        }
    }
}

impl From<InstanceError> for CliError {
    fn from(e: InstanceError) -> Self {
        CliError::BadParameter(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn ratio(r: &Ratio<u64>) -> String {
    format_ratio(r, RATIO_PLACES)
}

fn ensure_cover(g: &Graph, cover: &tcover_core::ElementSet, what: &str) -> Result<(), CliError> {
    match uncovered_element(g, cover) {
        None => Ok(()),
        Some(el) => Err(CliError::Internal(format!(
            "{what} leaves {} uncovered",
            el.describe(g)
        ))),
    }
}

/// Runs the approximation and reports `size m k t lb ratio`.
pub fn solve(graph: &Path, trace: bool, output: Option<&Path>) -> Result<String, CliError> {
    let g = load_graph(graph)?;
    let r = approx_total_cover(&g);
    ensure_cover(&g, &r.cover, "approximate cover")?;
    if r.size() != r.m + r.k + r.t {
        return Err(CliError::Internal(format!(
            "cover has {} elements, expected m+k+t = {}",
            r.size(),
            r.m + r.k + r.t
        )));
    }
    let mut out = format!(
        "size={} m={} k={} t={} lb={} ratio={}\n",
        r.size(),
        r.m,
        r.k,
        r.t,
        r.lower_bound,
        ratio(&r.certified_ratio)
    );
    if trace {
        for step in &r.trace {
            out.push_str(&step.to_line(&g));
            out.push('\n');
        }
    }
    if let Some(path) = output {
        write(path, &r.cover.to_cover_text(&g))?;
    }
    Ok(out)
}

/// Exhaustive minimum total cover; prints the size line and one optimum in
/// cover-file syntax.
pub fn exact(
    graph: &Path,
    limits: SearchLimits,
    start_at_lower_bound: bool,
) -> Result<String, CliError> {
    let g = load_graph(graph)?;
    let mut limits = limits;
    if start_at_lower_bound {
        let r = approx_total_cover(&g);
        limits.start_size = lemma1_lower_bound(r.m, r.k, r.t);
    }
    let r = exact_total_cover(&g, &limits)?;
    ensure_cover(&g, &r.optimum, "exact optimum")?;
    Ok(format!(
        "size={} candidates={} elapsed_ms={}\n{}",
        r.size,
        r.candidates_checked,
        r.elapsed.as_millis(),
        r.optimum.to_cover_text(&g)
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaselineMethod {
    MatchedVertices,
    GreedyDomination,
}

pub fn baseline(
    graph: &Path,
    method: BaselineMethod,
    mode: MatchingMode,
) -> Result<String, CliError> {
    let g = load_graph(graph)?;
    let (cover, label) = match method {
        BaselineMethod::MatchedVertices => {
            let label = match mode {
                MatchingMode::Maximal => "matched-vertices matching=maximal",
                MatchingMode::Maximum => "matched-vertices matching=maximum",
            };
            (matched_vertices_cover(&g, mode), label)
        }
        BaselineMethod::GreedyDomination => (greedy_domination_cover(&g), "greedy-domination"),
    };
    ensure_cover(&g, &cover, label)?;
    Ok(format!("method={label} size={} valid=true\n", cover.len()))
}

/// `VALID size=s` for a total cover; an `InvalidCover` error (exit 1)
/// naming the first uncovered element otherwise.
pub fn verify(graph: &Path, cover: &Path) -> Result<String, CliError> {
    let g = load_graph(graph)?;
    let set = parse_cover(&read(cover)?, &g).map_err(|source| CliError::Parse {
        path: cover.to_owned(),
        source,
    })?;
    match uncovered_element(&g, &set) {
        None => Ok(format!("VALID size={}\n", set.len())),
        Some(el) => Err(CliError::InvalidCover(el.describe(&g).to_string())),
    }
}

/// Builds an instance; returns the graph file text and a summary line.
pub fn generate(spec: &InstanceSpec) -> Result<(String, String), CliError> {
    let g = spec.build()?;
    let summary = format!("{spec} n={} edges={}\n", g.vertex_count(), g.edge_count());
    Ok((serialize_graph(&g), summary))
}

/// One row of the comparison table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompareRow {
    pub instance: String,
    pub n: Option<usize>,
    pub edges: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub t: Option<usize>,
    pub alg_size: Option<usize>,
    pub lower_bound: Option<usize>,
    pub exact_size: Option<usize>,
    pub baseline_size: Option<usize>,
    pub greedy_size: Option<usize>,
    pub ratio_vs_lb: Option<Ratio<u64>>,
    pub ratio_vs_exact: Option<Ratio<u64>>,
    pub error: Option<String>,
}

impl CompareRow {
    fn failed(instance: String, error: String) -> Self {
        CompareRow {
            instance,
            error: Some(error),
            ..Default::default()
        }
    }

    pub fn record(&self) -> Vec<String> {
        fn num(x: Option<usize>) -> String {
            x.map(|v| v.to_string()).unwrap_or_default()
        }
        fn rat(x: &Option<Ratio<u64>>) -> String {
            x.as_ref().map(ratio).unwrap_or_default()
        }
        vec![
            self.instance.clone(),
            num(self.n),
            num(self.edges),
            num(self.m),
            num(self.k),
            num(self.t),
            num(self.alg_size),
            num(self.lower_bound),
            num(self.exact_size),
            num(self.baseline_size),
            num(self.greedy_size),
            rat(&self.ratio_vs_lb),
            rat(&self.ratio_vs_exact),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

/// Evaluates one instance. The exact oracle runs only when `|V| + |E|` is at
/// most `exact_limit`.
pub fn compare_graph(instance: &str, g: &Graph, exact_limit: usize) -> CompareRow {
    let r = approx_total_cover(g);
    let baseline = matched_vertices_cover(g, MatchingMode::Maximum);
    let greedy = greedy_domination_cover(g);
    let mut row = CompareRow {
        instance: instance.to_owned(),
        n: Some(g.vertex_count()),
        edges: Some(g.edge_count()),
        m: Some(r.m),
        k: Some(r.k),
        t: Some(r.t),
        alg_size: Some(r.size()),
        lower_bound: Some(r.lower_bound),
        baseline_size: Some(baseline.len()),
        greedy_size: Some(greedy.len()),
        ratio_vs_lb: Some(r.certified_ratio),
        ..Default::default()
    };
    let valid = [&r.cover, &baseline, &greedy]
        .into_iter()
        .all(|c| is_total_cover(g, c));
    if !valid || r.size() != r.m + r.k + r.t || r.certified_ratio > Ratio::from_integer(2) {
        row.error = Some("internal: certificate check failed".to_owned());
        return row;
    }
    if g.element_count() <= exact_limit {
        let limits = SearchLimits::default().with_max_elements(exact_limit);
        match exact_total_cover(g, &limits) {
            Ok(ex) => {
                row.exact_size = Some(ex.size);
                row.ratio_vs_exact = Some(if ex.size == 0 {
                    Ratio::from_integer(1)
                } else {
                    Ratio::new(r.size() as u64, ex.size as u64)
                });
                if !(r.lower_bound <= ex.size && ex.size <= r.size() && r.size() <= 2 * ex.size) {
                    row.error = Some("internal: exact optimum outside certified bounds".to_owned());
                }
            }
            Err(e) => row.error = Some(e.to_string()),
        }
    }
    row
}

/// Expands directories (sorted by file name) and keeps files in the given
/// order.
pub fn collect_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut out = Vec::new();
    for path in inputs {
        if path.is_dir() {
            let entries = fs::read_dir(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let mut files: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(path.clone());
        }
    }
    Ok(out)
}

/// Comparison table over graph files, as CSV text. Instances run in
/// parallel; rows keep input order.
pub fn compare(inputs: &[PathBuf], exact_limit: usize) -> Result<String, CliError> {
    let files = collect_inputs(inputs)?;
    let rows: Vec<CompareRow> = files
        .par_iter()
        .map(|path| {
            let name = path
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            match load_graph(path) {
                Ok(g) => compare_graph(&name, &g, exact_limit),
                Err(e) => CompareRow::failed(name, e.to_string()),
            }
        })
        .collect();
    rows_to_csv(&rows)
}

pub fn rows_to_csv(rows: &[CompareRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let to_internal = |e: csv::Error| CliError::Internal(e.to_string());
    w.write_record(CSV_HEADER).map_err(to_internal)?;
    for row in rows {
        w.write_record(row.record()).map_err(to_internal)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

/// Parses the family name used by `tcover gen`.
pub fn family_from_args(
    name: &str,
    n: usize,
    p: Option<f64>,
    seed: u64,
) -> Result<Family, CliError> {
    Ok(match name {
        "figure1" => Family::Figure1 { n },
        "path" => Family::Path { n },
        "cycle" => Family::Cycle { n },
        "star" => Family::Star { n },
        "complete" => Family::Complete { n },
        "gnp" => Family::Gnp {
            n,
            p: p.ok_or_else(|| CliError::BadParameter("gnp needs --p".to_owned()))?,
            seed,
        },
        other => return Err(CliError::BadParameter(format!("unknown family '{other}'"))),
    })
}
