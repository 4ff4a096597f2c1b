//! Standalone SVG drawings of the grid, the attached chains and the path
//! families of a report.
//!
//! Each panel places row `i` (ascending row value, top to bottom) at
//! `y = 40·i` and column `j` at `x = 40·j`, translated by a fixed margin.
//! The dashed staircase separates negative cells (`r < c`, upper right)
//! from positive ones.

use std::fmt::Write as _;

use thiserror::Error;

use crate::grid::Cell;
use crate::report::MultiplicityReport;

const STEP: i64 = 40;
const MARGIN_X: i64 = 50;
const MARGIN_Y: i64 = 50;
const PANEL_GAP: i64 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SvgContent {
    Chains,
    Families,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SvgError {
    #[error("path families were requested but the report does not list them")]
    FamiliesMissing,
}

struct Layout {
    rows: Vec<u32>,
    cols: Vec<u32>,
}

impl Layout {
    fn new(report: &MultiplicityReport) -> Self {
        let cols = report.beta.clone();
        let rows = (1..=report.ambient()).filter(|v| !cols.contains(v)).collect();
        Layout { rows, cols }
    }

    fn xy(&self, cell: Cell) -> Option<(i64, i64)> {
        let i = self.rows.iter().position(|&r| r == cell.r)?;
        let j = self.cols.iter().position(|&c| c == cell.c)?;
        Some((STEP * j as i64, STEP * i as i64))
    }

    fn width(&self) -> i64 {
        STEP * (self.cols.len() as i64 - 1).max(0)
    }

    fn height(&self) -> i64 {
        STEP * (self.rows.len() as i64 - 1).max(0)
    }

    fn staircase(&self) -> Vec<(i64, i64)> {
        let mut pts: Vec<(i64, i64)> = Vec::new();
        for (i, &r) in self.rows.iter().enumerate() {
            let k = self.cols.iter().filter(|&&c| c < r).count() as i64;
            let x = STEP * k - STEP / 2;
            let y = STEP * i as i64;
            for p in [(x, y - STEP / 2), (x, y + STEP / 2)] {
                if pts.last() != Some(&p) {
                    pts.push(p);
                }
            }
        }
        pts
    }
}

fn points(pts: &[(i64, i64)]) -> String {
    let parts: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
    parts.join(" ")
}

fn panel_grid(out: &mut String, layout: &Layout) {
    for (j, c) in layout.cols.iter().enumerate() {
        writeln!(out, r#"    <text class="col-label" x="{}" y="-20" text-anchor="middle">{c}</text>"#, STEP * j as i64)
            .unwrap();
    }
    for (i, r) in layout.rows.iter().enumerate() {
        writeln!(out, r#"    <text class="row-label" x="-25" y="{}" text-anchor="end">{r}</text>"#, STEP * i as i64 + 4)
            .unwrap();
    }
    for &r in &layout.rows {
        for &c in &layout.cols {
            let (x, y) = layout.xy(Cell::new(r, c)).expect("grid cell");
            writeln!(out, r#"    <circle class="grid-dot" cx="{x}" cy="{y}" r="2"><title>({r},{c})</title></circle>"#)
                .unwrap();
        }
    }
    writeln!(
        out,
        r##"    <polyline class="staircase" points="{}" fill="none" stroke="#888888" stroke-width="1" stroke-dasharray="4 3"/>"##,
        points(&layout.staircase())
    )
    .unwrap();
}

fn open_panel(out: &mut String, index: i64, layout: &Layout, class: &str) {
    let ox = MARGIN_X + index * (layout.width() + STEP + PANEL_GAP);
    writeln!(out, r#"  <g class="{class}" transform="translate({ox},{MARGIN_Y})">"#).unwrap();
}

/// Renders the report. Output depends only on the report, so it is
/// reproducible byte for byte.
pub fn render_svg(report: &MultiplicityReport, which: SvgContent) -> Result<String, SvgError> {
    let fams = match which {
        SvgContent::Chains => None,
        SvgContent::Families | SvgContent::All => Some(report.family_paths.as_ref().ok_or(SvgError::FamiliesMissing)?),
    };
    let layout = Layout::new(report);
    let show_chains = which != SvgContent::Families;
    let panels = usize::from(show_chains) + fams.map_or(0, |f| f.len());
    let panels = panels.max(1) as i64;
    let width = 2 * MARGIN_X + panels * (layout.width() + STEP) + (panels - 1) * PANEL_GAP;
    let height = 2 * MARGIN_Y + layout.height();

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="yes"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"#
    )
    .unwrap();
    let mut index = 0;
    if show_chains || fams.is_none_or(|f| f.is_empty()) {
        open_panel(&mut out, index, &layout, "panel chains");
        panel_grid(&mut out, &layout);
        if show_chains {
            for (cells, color) in [(&report.t_alpha, "#1f5fbf"), (&report.w_gamma, "#bf1f1f")] {
                for &cell in cells.iter() {
                    let Some((x, y)) = layout.xy(cell) else { continue };
                    writeln!(
                        out,
                        r#"    <circle class="chain-marker" cx="{x}" cy="{y}" r="6" fill="{color}"><title>{cell}</title></circle>"#
                    )
                    .unwrap();
                }
            }
        }
        writeln!(out, "  </g>").unwrap();
        index += 1;
    }
    for (k, family) in fams.into_iter().flatten().enumerate() {
        open_panel(&mut out, index, &layout, "panel");
        panel_grid(&mut out, &layout);
        writeln!(out, r#"    <g class="family" id="family-{}">"#, k + 1).unwrap();
        for path in family {
            let mut pts: Vec<(i64, i64)> = path.iter().filter_map(|&c| layout.xy(c)).collect();
            if pts.len() == 1 {
                pts.push(pts[0]);
            }
            writeln!(
                out,
                r##"      <polyline class="path" points="{}" fill="none" stroke="#000000" stroke-width="3" stroke-linecap="round" stroke-linejoin="round"/>"##,
                points(&pts)
            )
            .unwrap();
        }
        writeln!(out, "    </g>").unwrap();
        writeln!(out, "  </g>").unwrap();
        index += 1;
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::Mode;
    use crate::report::MethodResults;
    use std::collections::BTreeMap;

    fn bare(beta: Vec<u32>) -> MultiplicityReport {
        MultiplicityReport {
            d: beta.len() as u32,
            mode: Mode::Symplectic,
            n: None,
            alpha: beta.clone(),
            beta: beta.clone(),
            gamma: beta,
            multiplicity: 1,
            reason: None,
            t_alpha: vec![],
            w_gamma: vec![],
            endpoints: BTreeMap::new(),
            results: MethodResults::default(),
            families: None,
            family_paths: None,
            timings_ms: BTreeMap::new(),
        }
    }

    #[test]
    fn empty_chains_draw_grid_only() {
        let svg = render_svg(&bare(vec![1, 3]), SvgContent::Chains).unwrap();
        assert_eq!(svg.matches(r#"class="grid-dot""#).count(), 4);
        assert_eq!(svg.matches(r#"class="staircase""#).count(), 1);
        assert_eq!(svg.matches("chain-marker").count(), 0);
        assert!(!svg.contains("href"));
    }

    #[test]
    fn families_required() {
        assert_eq!(render_svg(&bare(vec![1, 3]), SvgContent::Families), Err(SvgError::FamiliesMissing));
    }

    #[test]
    fn staircase_shape() {
        // rows (1,3,6,7,9), cols (2,4,5,8,10): positive counts per row 0,1,3,3,4
        let layout = Layout::new(&bare(vec![2, 4, 5, 8, 10]));
        assert_eq!(
            layout.staircase(),
            vec![
                (-20, -20), (-20, 20), (20, 20), (20, 60), (100, 60), (100, 100), (100, 140), (140, 140), (140, 180),
            ]
        );
    }
}
