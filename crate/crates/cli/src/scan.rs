//! Batch scan of the regular ray over a `(g, k, m, bundle)` grid, written as CSV.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use sasaki_core::exact::default_width;
use sasaki_core::{
    csc_ray_with_width, params_from_km, regular_ray_extremal, scalar_coefficients, Bundle, JoinParams,
    Rational, WeightVector,
};

use crate::commands::root_text;
use crate::CliError;

/// Column order of the CSV, fixed.
pub const COLUMNS: [&str; 11] = ["g", "k", "m", "bundle", "l", "w1", "w2", "verdict", "csc_root", "A", "B"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub g: u64,
    pub k: u64,
    pub m: u64,
    pub bundle: &'static str,
    pub l: u64,
    pub w1: u64,
    pub w2: u64,
    pub verdict: &'static str,
    pub csc_root: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
}

#[derive(Debug, Clone, Copy)]
pub struct Grid {
    pub g_min: u64,
    pub g_max: u64,
    pub k_min: u64,
    pub k_max: u64,
}

impl Grid {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.g_min == 0 {
            return Err(CliError::Usage("--g-min must be at least 1: the genus 0 case is not treated".into()));
        }
        if self.k_min == 0 {
            return Err(CliError::Usage("--k-min must be at least 1".into()));
        }
        if self.g_min > self.g_max || self.k_min > self.k_max {
            return Err(CliError::Usage("empty grid: need --g-min ≤ --g-max and --k-min ≤ --k-max".into()));
        }
        Ok(())
    }

    /// Cells in output order: g, then k, then m, trivial before non-trivial.
    pub fn cells(&self) -> Vec<(u64, u64, u64, Bundle)> {
        let mut cells = Vec::new();
        for g in self.g_min..=self.g_max {
            for k in self.k_min..=self.k_max {
                for m in 0..k {
                    for b in [Bundle::Trivial, Bundle::NonTrivial] {
                        cells.push((g, k, m, b));
                    }
                }
            }
        }
        cells
    }
}

fn row(g: u64, k: u64, m: u64, bundle: Bundle, width: &Rational) -> sasaki_core::Result<ScanRow> {
    let (l, w) = params_from_km(k, m, bundle)?;
    let params = JoinParams::new(g, l, w.v1, w.v2)?;
    let report = regular_ray_extremal(g, k, m, bundle)?;
    let root = csc_ray_with_width(&params, width)?.root;
    let (a, b) = if params.is_product_ray(WeightVector::REGULAR) {
        (String::new(), String::new())
    } else {
        let (a, b) = scalar_coefficients(&params, WeightVector::REGULAR)?;
        (a.to_string(), b.to_string())
    };
    Ok(ScanRow {
        g,
        k,
        m,
        bundle: bundle.as_str(),
        l,
        w1: params.w1,
        w2: params.w2,
        verdict: report.verdict.strength.as_str(),
        csc_root: root_text(&root),
        a,
        b,
    })
}

/// Computes every row on a pool of `jobs` threads (rayon's default when `None`).
/// Rows come back in grid order regardless of scheduling.
pub fn scan_rows(grid: &Grid, width: Option<&Rational>, jobs: Option<usize>) -> Result<Vec<ScanRow>, CliError> {
    grid.validate()?;
    if jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let width = width.cloned().unwrap_or_else(default_width);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| CliError::Io(e.to_string()))?;
    let cells = grid.cells();
    let rows = pool.install(|| {
        cells
            .par_iter()
            .map(|&(g, k, m, b)| row(g, k, m, b, &width))
            .collect::<sasaki_core::Result<Vec<_>>>()
    })?;
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .has_headers(false)
        .from_writer(out);
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(COLUMNS).map_err(io)?;
    for r in rows {
        w.serialize(r).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}
