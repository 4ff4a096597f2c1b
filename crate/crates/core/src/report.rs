//! The report produced by a run, with canonical JSON and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::grid::Cell;
use crate::index::Mode;
use crate::paths::Endpoints;

pub const NOT_ON_VARIETY: &str = "fixed point not on variety";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathResult {
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StarSetResult {
    pub multiplicity: u64,
    pub max_degree: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MethodResults {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<PathResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub starsets: Option<StarSetResult>,
}

/// Everything a run computed. Cell lists are sorted; map keys are ordered,
/// so serialization is canonical.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiplicityReport {
    pub d: u32,
    pub mode: Mode,
    /// Ambient dimension, ordinary mode only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub gamma: Vec<u32>,
    /// `mult_{e_β} X_α^γ`.
    pub multiplicity: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub t_alpha: Vec<Cell>,
    pub w_gamma: Vec<Cell>,
    /// Keyed by `"r,c"` of the anchor.
    pub endpoints: BTreeMap<String, Endpoints>,
    pub results: MethodResults,
    /// One sorted cell list per family (the family's union).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub families: Option<Vec<Vec<Cell>>>,
    /// Per family, the path of each anchor in sorted anchor order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_paths: Option<Vec<Vec<Vec<Cell>>>>,
    pub timings_ms: BTreeMap<String, f64>,
}

pub fn anchor_key(c: Cell) -> String {
    format!("{},{}", c.r, c.c)
}

impl MultiplicityReport {
    pub fn ambient(&self) -> u32 {
        match self.mode {
            Mode::Symplectic => self.d.saturating_mul(2),
            Mode::Ordinary => self.n.unwrap_or(self.d.saturating_mul(2)),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let tuple = |v: &[u32]| {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        };
        let cells = |v: &[Cell]| {
            let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        };
        match self.mode {
            Mode::Symplectic => writeln!(out, "symplectic Grassmannian, d = {}", self.d),
            Mode::Ordinary => writeln!(out, "ordinary Grassmannian, d = {}, n = {}", self.d, self.ambient()),
        }
        .unwrap();
        writeln!(out, "  alpha   = {}", tuple(&self.alpha)).unwrap();
        writeln!(out, "  beta    = {}", tuple(&self.beta)).unwrap();
        writeln!(out, "  gamma   = {}", tuple(&self.gamma)).unwrap();
        if let Some(reason) = &self.reason {
            writeln!(out, "  {reason}").unwrap();
        } else {
            writeln!(out, "  T_alpha = {}", cells(&self.t_alpha)).unwrap();
            writeln!(out, "  W_gamma = {}", cells(&self.w_gamma)).unwrap();
            if !self.endpoints.is_empty() {
                writeln!(out, "  endpoints:").unwrap();
                for (k, e) in &self.endpoints {
                    writeln!(out, "    ({k}): floor {}, ceil {}", e.floor, e.ceil).unwrap();
                }
            }
            if let Some(p) = &self.results.paths {
                writeln!(out, "  paths:    multiplicity {}", p.multiplicity).unwrap();
            }
            if let Some(s) = &self.results.starsets {
                writeln!(out, "  starsets: multiplicity {}, max degree {}", s.multiplicity, s.max_degree).unwrap();
            }
            if let Some(fams) = &self.families {
                writeln!(out, "  families:").unwrap();
                for (i, f) in fams.iter().enumerate() {
                    writeln!(out, "    {:>3}: {}", i + 1, cells(f)).unwrap();
                }
            }
        }
        for (k, v) in &self.timings_ms {
            writeln!(out, "  time {k}: {v:.3} ms").unwrap();
        }
        writeln!(out, "multiplicity = {}", self.multiplicity).unwrap();
        out
    }
}
