use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use skewcount::{
    count_paths_dp, enumerate_disjoint_families, enumerate_paths, enumerate_tilings, gv_count, gv_endpoints, gv_matrix,
    kreweras_count, kreweras_matrix, region_from_shape, Count, Partition, SkewShape,
};

use crate::{json_line, print_line, CliError};

/// One line of `verify` output. A count is `null` when its enumeration
/// hit the cap.
#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub shape: String,
    pub counts: Counts,
    pub matrix_identity: bool,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<Timings>,
}

#[derive(Debug, Serialize)]
pub struct Counts {
    pub det: String,
    pub dp: String,
    #[serde(rename = "enum")]
    pub enumerated: Option<String>,
    pub tilings: Option<String>,
    pub gv_enum: Option<String>,
    pub gv_det: String,
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub det: f64,
    pub dp: f64,
    #[serde(rename = "enum")]
    pub enumerated: f64,
    pub tilings: f64,
    pub gv_enum: f64,
    pub gv_det: f64,
}

/// Every `λ/μ` with `λ ≠ ∅` inside a `rows x cols` box and `μ ⊊ λ`.
pub fn box_shapes(dims: &str) -> Option<Vec<SkewShape>> {
    let (a, b) = dims.split_once(['x', 'X'])?;
    let (rows, cols) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    let mut out = Vec::new();
    for lambda in Partition::all_in_box(rows, cols) {
        if lambda.is_empty() {
            continue;
        }
        for mu in lambda.subpartitions() {
            if mu != lambda {
                out.push(SkewShape::new(lambda.clone(), mu).expect("μ ⊂ λ"));
            }
        }
    }
    Some(out)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64() * 1e3)
}

pub fn report(shape: &SkewShape, cap: usize, timings: bool) -> VerifyReport {
    let (det, t_det) = timed(|| kreweras_count(shape));
    let (dp, t_dp) = timed(|| count_paths_dp(shape));
    let (enumerated, t_enum) = timed(|| enumerate_paths(shape, cap).ok().map(|v| Count::from(v.len())));
    let (tilings, t_til) =
        timed(|| enumerate_tilings(&region_from_shape(shape), cap).ok().map(|v| Count::from(v.len())));
    let config = gv_endpoints(shape);
    let (gv_enum, t_gv) = timed(|| enumerate_disjoint_families(&config, cap).ok().map(|v| Count::from(v.len())));
    let (gv_det, t_gvd) = timed(|| gv_count(&config));
    let matrix_identity = gv_matrix(&config) == kreweras_matrix(shape).matrix;

    let computed = [Some(&dp), enumerated.as_ref(), tilings.as_ref(), gv_enum.as_ref(), Some(&gv_det)];
    let agree = matrix_identity && computed.iter().flatten().all(|c| **c == det);
    let text = |c: &Count| c.to_string();
    VerifyReport {
        shape: shape.to_string(),
        counts: Counts {
            det: text(&det),
            dp: text(&dp),
            enumerated: enumerated.as_ref().map(text),
            tilings: tilings.as_ref().map(text),
            gv_enum: gv_enum.as_ref().map(text),
            gv_det: text(&gv_det),
        },
        matrix_identity,
        agree,
        elapsed_ms: timings.then_some(Timings {
            det: t_det,
            dp: t_dp,
            enumerated: t_enum,
            tilings: t_til,
            gv_enum: t_gv,
            gv_det: t_gvd,
        }),
    }
}

pub fn run(shapes: &[SkewShape], jobs: usize, cap: usize, timings: bool) -> Result<(), CliError> {
    let emit = |r: VerifyReport| {
        print_line(json_line(&r));
        r
    };
    let reports: Vec<VerifyReport> = if jobs == 1 {
        shapes.iter().map(|s| emit(report(s, cap, timings))).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
        pool.install(|| shapes.par_iter().map(|s| emit(report(s, cap, timings))).collect())
    };
    match reports.iter().find(|r| !r.agree) {
        Some(bad) => {
            eprintln!("counterexample: {}", json_line(bad));
            Err(CliError::Disagreement(bad.shape.clone()))
        }
        None => Ok(()),
    }
}
