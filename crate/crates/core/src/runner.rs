//! End-to-end orchestration behind the `richmult` command: validate an
//! instance, run the selected method(s), and render the report.
//!
//! Exit codes: 0 success (including multiplicity 0 off the variety),
//! 2 malformed input or usage, 3 orbit budget exceeded, 4 the two methods
//! disagree.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use thiserror::Error;

use crate::attach::AttachedChains;
use crate::error::{CountError, IndexError};
use crate::index::{bruhat_leq, IndexTuple, Mode};
use crate::paths::{count_path_families, path_endpoints};
use crate::report::{anchor_key, MethodResults, MultiplicityReport, PathResult, StarSetResult, NOT_ON_VARIETY};
use crate::starsets::{count_max_bounded_star_sets, DEFAULT_ORBIT_BUDGET};
use crate::svg::{render_svg, SvgContent, SvgError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Paths,
    Starsets,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub d: u32,
    pub mode: Mode,
    pub n: Option<u32>,
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub method: Method,
    pub format: Format,
    pub list_families: bool,
    pub emit_svg: Option<PathBuf>,
    pub svg_content: SvgContent,
    pub orbit_budget: usize,
    /// Record wall-clock timings in the report. Off by default so that
    /// output is reproducible.
    pub timings: bool,
}

impl RunConfig {
    pub fn new(d: u32, alpha: &str, beta: &str, gamma: &str) -> Self {
        RunConfig {
            d,
            mode: Mode::Symplectic,
            n: None,
            alpha: alpha.to_string(),
            beta: beta.to_string(),
            gamma: gamma.to_string(),
            method: Method::Paths,
            format: Format::Text,
            list_families: false,
            emit_svg: None,
            svg_content: SvgContent::Chains,
            orbit_budget: DEFAULT_ORBIT_BUDGET,
            timings: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("invalid {name}: {source}")]
    Input { name: &'static str, source: IndexError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Svg(#[from] SvgError),
    #[error("could not write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Budget(CountError),
    #[error("internal error: {0}")]
    Internal(CountError),
    #[error("theorem violation: path families give {paths}, star sets give {starsets}")]
    TheoremViolation { paths: u64, starsets: u64 },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input { .. } | RunError::Usage(_) | RunError::Svg(_) | RunError::Io { .. } => 2,
            RunError::Budget(_) => 3,
            RunError::Internal(_) | RunError::TheoremViolation { .. } => 4,
        }
    }
}

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Validates the instance and computes the report.
pub fn run(cfg: &RunConfig) -> Result<MultiplicityReport, RunError> {
    let ambient = match cfg.mode {
        Mode::Symplectic => {
            if cfg.n.is_some() {
                return Err(RunError::Usage("--n only applies to ordinary mode".into()));
            }
            cfg.d.checked_mul(2).ok_or_else(|| RunError::Usage("d is too large".into()))?
        }
        Mode::Ordinary => cfg.n.ok_or_else(|| RunError::Usage("ordinary mode requires --n".into()))?,
    };
    let parse = |name: &'static str, text: &str| {
        IndexTuple::parse(text, cfg.d, cfg.mode, ambient).map_err(|source| RunError::Input { name, source })
    };
    let alpha = parse("alpha", &cfg.alpha)?;
    let beta = parse("beta", &cfg.beta)?;
    let gamma = parse("gamma", &cfg.gamma)?;

    let mut report = MultiplicityReport {
        d: cfg.d,
        mode: cfg.mode,
        n: (cfg.mode == Mode::Ordinary).then_some(ambient),
        alpha: alpha.entries().to_vec(),
        beta: beta.entries().to_vec(),
        gamma: gamma.entries().to_vec(),
        multiplicity: 0,
        reason: None,
        t_alpha: Vec::new(),
        w_gamma: Vec::new(),
        endpoints: BTreeMap::new(),
        results: MethodResults::default(),
        families: None,
        family_paths: None,
        timings_ms: BTreeMap::new(),
    };

    let on_variety = bruhat_leq(&alpha, &beta).expect("same shape") && bruhat_leq(&beta, &gamma).expect("same shape");
    if !on_variety {
        report.reason = Some(NOT_ON_VARIETY.to_string());
        return Ok(report);
    }

    let chains = AttachedChains::new(&alpha, &beta, &gamma).map_err(|e| RunError::Internal(e.into()))?;
    report.t_alpha = chains.t_alpha.cells().to_vec();
    report.w_gamma = chains.w_gamma.cells().to_vec();
    for a in chains.anchors() {
        let ends = path_endpoints(a, &chains.grid).map_err(|e| RunError::Internal(e.into()))?;
        report.endpoints.insert(anchor_key(a), ends);
    }

    if matches!(cfg.method, Method::Paths | Method::Both) {
        let start = Instant::now();
        let res = count_path_families(&chains, cfg.list_families).map_err(RunError::Internal)?;
        if cfg.timings {
            report.timings_ms.insert("paths".into(), ms(start));
        }
        report.results.paths = Some(PathResult { multiplicity: res.count });
        if let Some(fams) = res.families {
            report.families = Some(fams.iter().map(|f| f.union()).collect());
            report.family_paths = Some(fams.into_iter().map(|f| f.paths.into_iter().map(|p| p.cells).collect()).collect());
        }
    }
    if matches!(cfg.method, Method::Starsets | Method::Both) {
        let start = Instant::now();
        let want_sets = cfg.list_families && report.families.is_none();
        let res = count_max_bounded_star_sets(&chains, want_sets, cfg.orbit_budget).map_err(|e| match e {
            CountError::BudgetExceeded { .. } => RunError::Budget(e),
            other => RunError::Internal(other),
        })?;
        if cfg.timings {
            report.timings_ms.insert("starsets".into(), ms(start));
        }
        report.results.starsets = Some(StarSetResult { multiplicity: res.count, max_degree: res.max_degree });
        if let Some(sets) = res.sets {
            report.families = Some(sets.into_iter().map(|s| s.cells).collect());
        }
    }

    report.multiplicity = match (&report.results.paths, &report.results.starsets) {
        (Some(p), Some(s)) if p.multiplicity != s.multiplicity => {
            return Err(RunError::TheoremViolation { paths: p.multiplicity, starsets: s.multiplicity });
        }
        (Some(p), _) => p.multiplicity,
        (None, Some(s)) => s.multiplicity,
        (None, None) => unreachable!("at least one method runs"),
    };
    Ok(report)
}

/// Renders the report in the configured format.
pub fn render(report: &MultiplicityReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    }
}

/// Runs, writes the SVG if requested, prints the report and returns the
/// process exit code.
pub fn execute(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let outcome = run(cfg).and_then(|report| {
        if let Some(path) = &cfg.emit_svg {
            let svg = render_svg(&report, cfg.svg_content)?;
            std::fs::write(path, svg).map_err(|source| RunError::Io { path: path.clone(), source })?;
        }
        Ok(report)
    });
    match outcome {
        Ok(report) => {
            let _ = stdout.write_all(render(&report, cfg.format).as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
