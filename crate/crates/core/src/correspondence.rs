//! High-SNR agreement between the Gaussian and deterministic outer bounds.
//!
//! The deterministic parameters of a Gaussian channel are
//! `m = (floor(0.5 log2 SNR))^+`, `n = (floor(0.5 log2 INR))^+` and
//! `C = floor(C_G)`. Going the other way, `SNR = 2^(2m)`, `INR = 2^(2n)` and
//! `C_G = C` make all three quantities integral.
//!
//! A [`GapReport`] evaluates each Gaussian bound at the canonical Gaussian
//! channel of a deterministic one and records how far it is from the
//! deterministic value it approximates:
//!
//! * `alpha <= 1`: the cooperative bound (`R1, R2 ≈ m`, sum `≈ 2m - n + C`)
//!   and the weak secrecy bound (`R2 ≈ m`, sum `≈ 2m - n + C`);
//! * `1 < alpha < 2`: the general secrecy bound (`R1 ≈ m`, `R2 ≈ 2m - n`,
//!   sum `≈ m`).
//!
//! Bounds that depend on `rho` are compared at `rho = 0`. The receiver 2
//! bounds carry no `C_G` term, so their `rho = 0` value is the
//! non-cooperative bound for any `C`. The general sum bound depends on both
//! `rho` and `C_G`, so it is only compared when `C = 0`.

use serde::Serialize;

use crate::det_channel::{DetParams, RegimeKind};
use crate::gauss_regions::{secrecy_r2_objective, thm4_bounds, thm5_bounds, thm6_bounds, GaussParams};
use crate::{Error, Result};

/// Largest `m` or `n` for which `2^(2m)` is finite in double precision.
pub const MAX_LEVELS: u32 = 500;

/// Raw mapped levels. Unlike [`DetParams`] this admits `m = 0`, which is
/// what a channel with `SNR < 4` maps to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DetMapping {
    pub m: u32,
    pub n: u32,
    pub c: u32,
}

impl DetMapping {
    pub fn to_params(&self) -> Result<DetParams> {
        DetParams::new(self.m, self.n, self.c)
    }
}

/// `(floor(0.5 log2 x))^+`, exact at powers of four.
fn levels_of(x: f64) -> u32 {
    if x < 4.0 {
        return 0;
    }
    let mut k = (0.5 * x.log2()).floor().max(0.0) as i32;
    // correct a floor that landed one off because of rounding in log2
    while k > 0 && 2f64.powi(2 * k) > x {
        k -= 1;
    }
    while 2f64.powi(2 * (k + 1)) <= x {
        k += 1;
    }
    k as u32
}

pub fn det_params_from_gauss(g: &GaussParams) -> DetMapping {
    DetMapping {
        m: levels_of(g.snr()),
        n: levels_of(g.inr()),
        c: g.cg().floor() as u32,
    }
}

pub fn gauss_params_from_det(d: &DetParams) -> Result<GaussParams> {
    if d.m() > MAX_LEVELS || d.n() > MAX_LEVELS {
        return Err(Error::param(format!(
            "m and n must be <= {MAX_LEVELS} to map to finite SNR/INR, got {d}"
        )));
    }
    GaussParams::new(
        2f64.powi(2 * d.m() as i32),
        2f64.powi(2 * d.n() as i32),
        f64::from(d.c()),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Gap {
    /// e.g. `thm5_sum`
    pub bound: &'static str,
    /// Deterministic expression approximated, e.g. `2m-n+C`.
    pub target: &'static str,
    pub gaussian: f64,
    pub deterministic: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub det: DetParams,
    pub gauss: GaussParams,
    pub gaps: Vec<Gap>,
    pub max_gap: f64,
}

impl GapReport {
    pub fn gap(&self, bound: &str) -> Option<f64> {
        self.gaps.iter().find(|g| g.bound == bound).map(|g| g.gap)
    }
}

pub fn correspondence_report(d: &DetParams) -> Result<GapReport> {
    let g = gauss_params_from_det(d)?;
    let (m, n, c) = (f64::from(d.m()), f64::from(d.n()), f64::from(d.c()));
    let entry = |bound, target, gaussian: f64, deterministic: f64| Gap {
        bound,
        target,
        gaussian,
        deterministic,
        gap: (gaussian - deterministic).abs(),
    };

    let mut gaps = Vec::new();
    match d.regime().kind {
        RegimeKind::WeakModerate => {
            let t4 = thm4_bounds(&g);
            let t5 = thm5_bounds(&g)?;
            let t5_r2 = secrecy_r2_objective(&g, 0.0)?;
            gaps.push(entry("thm4_r1", "m", t4.r1, m));
            gaps.push(entry("thm4_r2", "m", t4.r2, m));
            gaps.push(entry("thm4_sum", "2m-n+C", t4.sum, 2.0 * m - n + c));
            gaps.push(entry("thm5_r2", "m", t5_r2, m));
            gaps.push(entry("thm5_sum", "2m-n+C", t5.sum, 2.0 * m - n + c));
        }
        RegimeKind::High => {
            let g0 = g.with_cg(0.0)?;
            let t6 = thm6_bounds(&g0)?;
            gaps.push(entry("thm6_r1", "m", t6.r1, m));
            gaps.push(entry("thm6_r2", "2m-n", t6.r2, 2.0 * m - n));
            if d.c() == 0 {
                gaps.push(entry("thm6_sum", "m", t6.sum, m));
            }
        }
        RegimeKind::VeryHigh => {
            return Err(Error::Unsupported(format!(
                "no Gaussian/deterministic comparison for alpha >= 2, got {d}"
            )))
        }
    }
    let max_gap = gaps.iter().map(|g| g.gap).fold(0.0, f64::max);
    Ok(GapReport {
        det: *d,
        gauss: g,
        gaps,
        max_gap,
    })
}
