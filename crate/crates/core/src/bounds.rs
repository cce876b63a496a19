//! Turns pole orders into explicit one-sided constants.
//!
//! Positive side: min over d ∈ [0, P₄] of max{(d⁵/P₈)^{1/12}, (P₄ − d)^{1/4}}, where
//! P₄ and P₈ are the pole orders of L(s, π^{×4}) and L(s, π^{×8}).
//!
//! The remaining constants come from a Hölder argument of the shape
//! `P − t^j δ_B ≤ t^j δ_B^{j/h} δ_A^{1/h}`, whose smallest admissible t over all
//! upper densities δ_A, δ_B ∈ (0, 1] is attained at δ_A = δ_B = 1.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

pub const BISECTION_TOL: f64 = 1e-12;
pub const BISECTION_MAX_ITER: usize = 200;
pub const DENSITY_GRID_STEP: f64 = 1e-2;

/// Cut-off c separating A_u = {a_p > c} from A_b: for real a_p > 2 and trivial ω
/// both Satake parameters are real and exceed 1, so every α^m + β^m is positive.
pub const LARGE_EIGENVALUE_CUTOFF: f64 = 2.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundResult {
    pub constant: f64,
    pub optimizer: Option<f64>,
    pub branch_values: (f64, f64),
    pub trace: Vec<String>,
}

/// Crossing of an increasing and a decreasing function on [lo, hi].
pub fn bisect_crossing(inc: impl Fn(f64) -> f64, dec: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let diff = |x: f64| inc(x) - dec(x);
    if diff(lo) > 0.0 || diff(hi) < 0.0 {
        return Err(Error::InvalidArgument(format!("branches do not cross on [{lo}, {hi}]")));
    }
    for _ in 0..BISECTION_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if diff(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < BISECTION_TOL {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn increasing_branch(d: f64, pole8: f64) -> f64 {
    (d.powi(5) / pole8).powf(1.0 / 12.0)
}

fn decreasing_branch(d: f64, pole4: f64) -> f64 {
    (pole4 - d).max(0.0).powf(0.25)
}

/// max of the two branches at a fixed d.
pub fn positive_side_at(pole4: u32, pole8: u32, d: f64) -> f64 {
    increasing_branch(d, pole8 as f64).max(decreasing_branch(d, pole4 as f64))
}

pub fn positive_side(pole4: u32, pole8: u32) -> Result<BoundResult> {
    if pole4 == 0 || pole8 == 0 {
        return Err(Error::InvalidArgument("pole orders must be positive".into()));
    }
    let (p4, p8) = (pole4 as f64, pole8 as f64);
    let d = bisect_crossing(|d| increasing_branch(d, p8), |d| decreasing_branch(d, p4), 0.0, p4)?;
    let branches = (increasing_branch(d, p8), decreasing_branch(d, p4));
    let trace = vec![
        format!("Σ_p |a_p|⁴/p^s ~ {pole4}·ℓ(s) and Σ_p |a_p|⁸/p^s ≤ {pole8}·ℓ(s) + o(ℓ(s))"),
        format!("d := limsup Σ_B |a_p|⁴/p^s / ℓ(s);  Hölder (8/5, 12/5) gives limsup Σ_A |a_p|³/p^s / ℓ(s) ≥ d^(5/4)/{pole8}^(1/4)"),
        format!("limsup Σ_A |a_p|⁴/p^s / ℓ(s) ≥ {pole4} − d"),
        format!("min over d ∈ [0, {pole4}] of max{{(d⁵/{pole8})^(1/12), ({pole4} − d)^(1/4)}}"),
        format!("branches cross at d* = {d:.12} (bisection, tol {BISECTION_TOL:e})"),
        format!("constant = {:.12}", branches.0),
    ];
    Ok(BoundResult { constant: branches.0, optimizer: Some(d), branch_values: branches, trace })
}

/// The Hölder inequality `pole − t^low δ_B ≤ t^low δ_B^{low/high} δ_A^{1/high}`.
#[derive(Clone, Copy, Debug)]
pub struct HolderScheme {
    pub low: u32,
    pub high: u32,
    pub pole: f64,
}

impl HolderScheme {
    /// Smallest t compatible with the inequality at the given upper densities.
    pub fn min_admissible_t(&self, delta_a: f64, delta_b: f64) -> f64 {
        let (j, h) = (self.low as f64, self.high as f64);
        let denom = delta_b + delta_b.powf(j / h) * delta_a.powf(1.0 / h);
        (self.pole / denom).powf(1.0 / j)
    }

    /// Closed form at δ_A = δ_B = 1.
    pub fn corner_threshold(&self) -> f64 {
        (self.pole / 2.0).powf(1.0 / self.low as f64)
    }

    /// Grid scan of (0, 1]²; returns (min t, δ_A, δ_B).
    pub fn worst_case_scan(&self, step: f64) -> (f64, f64, f64) {
        let n = (1.0 / step).round() as usize;
        let mut best = (f64::INFINITY, 0.0, 0.0);
        for i in 1..=n {
            for j in 1..=n {
                let (da, db) = (i as f64 / n as f64, j as f64 / n as f64);
                let t = self.min_admissible_t(da, db);
                if t < best.0 {
                    best = (t, da, db);
                }
            }
        }
        best
    }

    fn solve(&self, label: &str, mut trace: Vec<String>) -> Result<BoundResult> {
        let t = self.corner_threshold();
        let (scan_t, da, db) = self.worst_case_scan(DENSITY_GRID_STEP);
        if da != 1.0 || db != 1.0 || scan_t < t - 1e-12 {
            return Err(Error::Inconsistent(format!(
                "{label}: worst case found at ({da}, {db}) with t = {scan_t}, not at the corner"
            )));
        }
        let lhs = self.pole - t.powi(self.low as i32);
        let rhs = t.powi(self.low as i32);
        trace.push(format!(
            "worst case over a {step}-grid of (δ_A, δ_B) ∈ (0,1]² is the corner (1, 1)",
            step = DENSITY_GRID_STEP
        ));
        trace.push(format!("{} − t^{} ≤ t^{}  ⇒  t ≥ ({} / 2)^(1/{}) = {t:.12}", self.pole, self.low, self.low, self.pole, self.low));
        Ok(BoundResult { constant: t, optimizer: None, branch_values: (lhs, rhs), trace })
    }
}

/// Threshold for large negative eigenvalues from a lower bound on the sixth-moment pole.
pub fn negative_side(pole6_lower: u32) -> Result<BoundResult> {
    if pole6_lower == 0 {
        return Err(Error::InvalidArgument("pole6_lower must be positive".into()));
    }
    let scheme = HolderScheme { low: 6, high: 7, pole: pole6_lower as f64 };
    let trace = vec![
        "A = {a_p > 0}, B = {a_p ≤ 0}; assume |a_p| ≤ t on almost all of B".to_string(),
        format!("split A at c = {LARGE_EIGENVALUE_CUTOFF}: on A_u every α^m + β^m (m ≤ 4) is positive"),
        format!("Σ_m Σ_p (α^m+β^m)⁶/p^(ms) ≥ {pole6_lower}·ℓ(s); odd seventh moments are O(1)"),
        format!("Hölder (7/6, 7) on A: {pole6_lower} − t⁶δ(B) ≤ δ(B)^(6/7) t⁶ δ(A)^(1/7)"),
    ];
    scheme.solve("negative side", trace)
}

/// The positive side by the negative-side method without positivity: the weaker 1/√2.
pub fn positive_side_weak() -> BoundResult {
    let scheme = HolderScheme { low: 2, high: 3, pole: 1.0 };
    let trace = vec![
        "Σ_p a_p²/p^s ~ ℓ(s) (simple Rankin–Selberg pole); Σ_p a_p³/p^s = O(1)".to_string(),
        "assume a_p ≤ t on almost all of A = {a_p > 0}; Hölder (3/2, 3) on B".to_string(),
        "1 − t²δ(A) ≤ t²δ(A)^(2/3) δ(B)^(1/3)".to_string(),
    ];
    scheme.solve("weak positive side", trace).expect("corner is the worst case for the (2, 3) scheme")
}

/// Threshold for Re(a_p e^{iφ}) when π is not self-dual.
pub fn non_self_dual(phi: f64) -> Result<BoundResult> {
    if !(0.0..=PI).contains(&phi) {
        return Err(Error::InvalidArgument(format!("φ = {phi} is outside [0, π]")));
    }
    let scheme = HolderScheme { low: 2, high: 3, pole: 0.5 };
    let trace = vec![
        format!("φ = {phi}: A = {{Re(a_p e^(iφ)) > 0}}, B = {{Re(a_p e^(iφ)) ≤ 0}}"),
        "Σ_p Re(a_p e^(iφ))²/p^s = ½ℓ(s) + o(ℓ(s)); the cubic sum is o(ℓ(s))".to_string(),
        "½ − t²δ(B) ≤ (t³δ(B))^(2/3) δ(A)^(1/3)".to_string(),
    ];
    scheme.solve("non-self-dual", trace)
}

/// Literature constants from the geometric method, stored for comparison only.
pub fn reference_constants() -> BTreeMap<&'static str, f64> {
    BTreeMap::from([("serre", 2.0 * (2.0 * PI / 7.0).cos()), ("kim-shahidi", 2.0 * (2.0 * PI / 11.0).cos())])
}

pub fn lookup_reference(name: &str) -> Option<f64> {
    reference_constants().get(name).copied()
}
