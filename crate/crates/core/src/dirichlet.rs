//! Truncated Dirichlet sums over eigenvalue datasets.
//!
//! Everything here is a finite-X diagnostic. Sums over p ≤ X saturate near
//! log log X while log(1/(s−1)) keeps growing, so the natural operating point
//! is s = 1 + 1/log X.

// Guards are written `!(x > y)` on purpose so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, LARGE_EIGENVALUE_CUTOFF};
use crate::datasource::{Dataset, EigenvalueRecord};
use crate::error::{Error, Result};
use crate::repring::power_sum;

/// Fixed chunking keeps parallel sums bit-for-bit reproducible.
const CHUNK: usize = 4096;

pub const DEFAULT_EPS: f64 = 0.01;
pub const WITNESS_FRACTION: f64 = 0.01;
pub const MAX_WITNESSES: usize = 10;

fn projected(a: Complex64, phi: f64) -> f64 {
    (a * Complex64::from_polar(1.0, phi)).re
}

fn chunked_sum(records: &[EigenvalueRecord], f: impl Fn(&EigenvalueRecord) -> f64 + Sync) -> f64 {
    let partial: Vec<f64> = records.par_chunks(CHUNK).map(|c| c.iter().map(&f).sum()).collect();
    partial.iter().sum()
}

/// ℓ(s) = log(1/(s−1)).
pub fn ell(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::InvalidArgument(format!("s = {s} must exceed 1")));
    }
    Ok(-(s - 1.0).ln())
}

/// s = 1 + 1/log X.
pub fn operating_point(x: u64) -> f64 {
    1.0 + 1.0 / (x as f64).ln()
}

/// Σ_{p ≤ X} Re(a_p e^{iφ})^k / p^s.
pub fn truncated_sum(records: &[EigenvalueRecord], k: u32, s: f64, phi: f64) -> Result<f64> {
    ell(s)?;
    if records.is_empty() {
        return Err(Error::EmptyData);
    }
    let k = i32::try_from(k).map_err(|_| Error::InvalidArgument(format!("k = {k} is too large")))?;
    Ok(chunked_sum(records, |r| projected(r.a, phi).powi(k) * (r.p as f64).powf(-s)))
}

pub fn normalized_ratio(records: &[EigenvalueRecord], k: u32, s: f64, phi: f64) -> Result<f64> {
    Ok(truncated_sum(records, k, s, phi)? / ell(s)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Above,
    Below,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub threshold: f64,
    pub side: Side,
    pub phi: f64,
    pub natural_proportion: f64,
    /// Σ_{p∈S} p^{-s} / Σ_p p^{-s} at `s_used`.
    pub dirichlet_weighted: f64,
    pub count: usize,
    pub total: usize,
    pub s_used: f64,
    #[serde(rename = "X")]
    pub x: u64,
}

/// Proportion of primes with Re(a_p e^{iφ}) > c (above) or < −c (below).
pub fn density_profile(data: &Dataset, c: f64, side: Side, phi: f64) -> Result<DensityReport> {
    if !(c >= 0.0) {
        return Err(Error::InvalidArgument(format!("threshold c = {c} must be non-negative")));
    }
    if data.records.is_empty() {
        return Err(Error::EmptyData);
    }
    let hit = |r: &EigenvalueRecord| match side {
        Side::Above => projected(r.a, phi) > c,
        Side::Below => projected(r.a, phi) < -c,
    };
    let s = operating_point(data.header.x);
    let count = data.records.par_iter().filter(|r| hit(r)).count();
    let weight = |r: &EigenvalueRecord| (r.p as f64).powf(-s);
    let hit_weight = chunked_sum(&data.records, |r| if hit(r) { weight(r) } else { 0.0 });
    let all_weight = chunked_sum(&data.records, weight);
    Ok(DensityReport {
        threshold: c,
        side,
        phi,
        natural_proportion: count as f64 / data.records.len() as f64,
        dirichlet_weighted: hit_weight / all_weight,
        count,
        total: data.records.len(),
        s_used: s,
        x: data.header.x,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeFit {
    pub k: u32,
    pub slope: f64,
    pub intercept: f64,
    /// (s, ℓ(s), truncated sum) per grid point.
    pub points: Vec<(f64, f64, f64)>,
}

/// Least-squares fit of the truncated k-th moment sum against ℓ(s).
pub fn pole_order_fit(records: &[EigenvalueRecord], k: u32, s_grid: &[f64]) -> Result<ProbeFit> {
    if s_grid.len() < 3 {
        return Err(Error::InvalidArgument(format!("need at least 3 grid points, got {}", s_grid.len())));
    }
    let offsets: Vec<f64> = s_grid.iter().map(|s| s - 1.0).collect();
    if offsets.iter().any(|d| !(*d > 0.0)) {
        return Err(Error::InvalidArgument("every grid point must exceed 1".into()));
    }
    let (lo, hi) = offsets.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &d| (lo.min(d), hi.max(d)));
    if hi < 4.0 * lo {
        return Err(Error::InvalidArgument(format!("s − 1 spans only a factor {:.3}; need at least 4", hi / lo)));
    }
    let points = s_grid
        .iter()
        .map(|&s| Ok((s, ell(s)?, truncated_sum(records, k, s, 0.0)?)))
        .collect::<Result<Vec<_>>>()?;
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.2).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.1 - mean_x) * (p.2 - mean_y)).sum();
    let sxx: f64 = points.iter().map(|p| (p.1 - mean_x).powi(2)).sum();
    let slope = sxy / sxx;
    Ok(ProbeFit { k, slope, intercept: mean_y - slope * mean_x, points })
}

/// Empirical pole order: the slope from [`pole_order_fit`].
pub fn pole_order_probe(records: &[EigenvalueRecord], k: u32, s_grid: &[f64]) -> Result<f64> {
    Ok(pole_order_fit(records, k, s_grid)?.slope)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// a_p above the positive-side constant.
    T1Pos,
    /// a_p below minus the negative-side constant.
    T1Neg,
    /// Re(a_p e^{iφ}) on both sides of ±1/2.
    T2,
}

impl std::str::FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t1pos" => Ok(Theorem::T1Pos),
            "t1neg" => Ok(Theorem::T1Neg),
            "t2" => Ok(Theorem::T2),
            _ => Err(Error::Parse { input: s.into(), reason: "expected t1pos, t1neg or t2".into() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SideCount {
    pub side: Side,
    pub threshold: f64,
    pub count: usize,
    /// Most extreme qualifying primes as (p, Re(a_p e^{iφ})).
    pub witnesses: Vec<(u64, f64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub phi: f64,
    pub eps: f64,
    pub total: usize,
    pub required: usize,
    pub sides: Vec<SideCount>,
    pub passed: bool,
}

fn side_count(records: &[EigenvalueRecord], side: Side, threshold: f64, phi: f64) -> SideCount {
    let mut hits: Vec<(u64, f64)> = records
        .iter()
        .map(|r| (r.p, projected(r.a, phi)))
        .filter(|&(_, v)| match side {
            Side::Above => v > threshold,
            Side::Below => v < threshold,
        })
        .collect();
    let count = hits.len();
    hits.sort_by(|x, y| {
        let ord = x.1.total_cmp(&y.1);
        let ord = if side == Side::Above { ord.reverse() } else { ord };
        ord.then(x.0.cmp(&y.0))
    });
    hits.truncate(MAX_WITNESSES);
    SideCount { side, threshold, count, witnesses: hits }
}

/// Desk-scale proxy for "infinitely many places": at least 1% of the primes qualify.
pub fn verify_theorem(data: &Dataset, theorem: Theorem, phi: f64, eps: f64) -> Result<TheoremReport> {
    if !(eps > 0.0) {
        return Err(Error::InvalidArgument(format!("ε = {eps} must be positive")));
    }
    if matches!(theorem, Theorem::T1Pos | Theorem::T1Neg) && !data.header.self_dual {
        return Err(Error::WrongDuality { needed: "self-dual", found: "non-self-dual" });
    }
    let recs = &data.records;
    let sides = match theorem {
        Theorem::T1Pos => vec![side_count(recs, Side::Above, bounds::positive_side(2, 14)?.constant - eps, 0.0)],
        Theorem::T1Neg => vec![side_count(recs, Side::Below, -bounds::negative_side(5)?.constant + eps, 0.0)],
        Theorem::T2 => {
            let t = bounds::non_self_dual(phi)?.constant - eps;
            vec![side_count(recs, Side::Above, t, phi), side_count(recs, Side::Below, -t, phi)]
        }
    };
    let required = ((WITNESS_FRACTION * recs.len() as f64).floor() as usize).max(1);
    let passed = sides.iter().all(|s| s.count >= required);
    let phi = if theorem == Theorem::T2 { phi } else { 0.0 };
    Ok(TheoremReport { theorem, phi, eps, total: recs.len(), required, sides, passed })
}

/// Counts for the sets A = {a_p > 0}, A_b = A ∩ {a_p ≤ 2}, A_u = A ∩ {a_p > 2}.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PositivitySplit {
    pub positive: usize,
    pub bounded: usize,
    pub unbounded: usize,
    /// Records in A_u where some α^m + β^m (m ≤ 4) failed to be positive.
    pub positivity_failures: usize,
}

/// Splits real self-dual records by size and checks positivity of the power sums on A_u.
pub fn positivity_split(records: &[EigenvalueRecord]) -> PositivitySplit {
    let mut out = PositivitySplit::default();
    for r in records.iter().filter(|r| r.a.re > 0.0) {
        out.positive += 1;
        if r.a.re <= LARGE_EIGENVALUE_CUTOFF {
            out.bounded += 1;
            continue;
        }
        out.unbounded += 1;
        let ok = (1..=4).all(|m| power_sum(Complex64::new(r.a.re, 0.0), r.omega(), m).re > 0.0);
        if !ok {
            out.positivity_failures += 1;
        }
    }
    out
}
