//! Outer bounds for the Gaussian Z-IC.
//!
//! All logarithms are base 2 and every bound is in bits per channel use.
//! Three bounds are provided:
//!
//! * [`Theorem::Cooperative`] ignores the secrecy constraint and holds in
//!   every regime.
//! * [`Theorem::SecrecyWeak`] uses the secrecy constraint at receiver 1 and
//!   applies when `INR <= SNR`.
//! * [`Theorem::SecrecyGeneral`] uses the secrecy constraint together with
//!   receiver side information built for the high interference regime, and
//!   holds in every regime.
//!
//! The correlation coefficient `rho` between the transmit signals can only
//! be nonzero when the transmitters cooperate. With `C_G = 0` it is pinned
//! to zero; otherwise each `rho`-dependent bound is maximized over the full
//! interval `[-1, 1]` independently.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::region_geom::{intersect, Constraint, RateRegion};
use crate::{Error, Result};

mod rho;

pub use rho::{maximize_over_rho, RhoResult, DEFAULT_TOL, GRID_POINTS};

/// Linear-scale SNR, INR and the cooperation capacity in bits per use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussParams {
    snr: f64,
    inr: f64,
    cg: f64,
}

impl GaussParams {
    pub fn new(snr: f64, inr: f64, cg: f64) -> Result<Self> {
        for (name, v) in [("snr", snr), ("inr", inr), ("cg", cg)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::param(format!("{name} must be finite and >= 0, got {v}")));
            }
        }
        Ok(Self { snr, inr, cg })
    }

    /// From transmit power and channel gains: `SNR = h_d^2 P`, `INR = h_c^2 P`.
    pub fn from_power(power: f64, h_direct: f64, h_cross: f64, cg: f64) -> Result<Self> {
        if !power.is_finite() || power < 0.0 {
            return Err(Error::param(format!(
                "power must be finite and >= 0, got {power}"
            )));
        }
        Self::new(h_direct * h_direct * power, h_cross * h_cross * power, cg)
    }

    pub fn snr(&self) -> f64 {
        self.snr
    }

    pub fn inr(&self) -> f64 {
        self.inr
    }

    pub fn cg(&self) -> f64 {
        self.cg
    }

    pub fn with_cg(&self, cg: f64) -> Result<Self> {
        Self::new(self.snr, self.inr, cg)
    }

    /// `INR <= SNR`
    pub fn is_weak_moderate(&self) -> bool {
        self.inr <= self.snr
    }

    fn cross(&self) -> f64 {
        (self.snr * self.inr).sqrt()
    }
}

impl fmt::Display for GaussParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(SNR={}, INR={}, C_G={})", self.snr, self.inr, self.cg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    /// Cooperative bound without secrecy; numbered 4.
    Cooperative,
    /// Secrecy bound for weak/moderate interference; numbered 5.
    SecrecyWeak,
    /// Secrecy bound for all regimes; numbered 6.
    SecrecyGeneral,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [
        Theorem::Cooperative,
        Theorem::SecrecyWeak,
        Theorem::SecrecyGeneral,
    ];

    pub fn number(self) -> u8 {
        match self {
            Theorem::Cooperative => 4,
            Theorem::SecrecyWeak => 5,
            Theorem::SecrecyGeneral => 6,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Theorem::ALL.into_iter().find(|t| t.number() == n)
    }

    pub fn label(self) -> &'static str {
        match self {
            Theorem::Cooperative => "thm4",
            Theorem::SecrecyWeak => "thm5",
            Theorem::SecrecyGeneral => "thm6",
        }
    }
}

/// The three bound values of one theorem plus the maximizing `rho`, where
/// a maximization took place.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremBounds {
    pub theorem: Theorem,
    pub r1: f64,
    pub r2: f64,
    pub sum: f64,
    pub r2_rho: Option<RhoResult>,
    pub sum_rho: Option<RhoResult>,
}

impl TheoremBounds {
    pub fn region(&self) -> Result<RateRegion> {
        RateRegion::new(vec![
            Constraint::r1(self.r1),
            Constraint::r2(self.r2),
            Constraint::sum(self.sum),
        ])
    }

    /// `(name, value)` for r1, r2 and sum in that order.
    pub fn named(&self) -> [(&'static str, f64); 3] {
        [("r1", self.r1), ("r2", self.r2), ("sum", self.sum)]
    }
}

fn log2_checked(x: f64, what: &str) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x.log2())
    } else {
        Err(Error::Numeric(format!(
            "{what}: log argument {x} is not positive"
        )))
    }
}

/// `0.5 log2(1 + SNR)`, the single-user bound shared by all three theorems.
fn single_user(g: &GaussParams) -> f64 {
    0.5 * (1.0 + g.snr).log2()
}

/// Maximize `objective` over `rho`, or evaluate at `rho = 0` without
/// cooperation.
fn over_rho<F>(g: &GaussParams, objective: F) -> Result<RhoResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if g.cg == 0.0 {
        return Ok(RhoResult {
            rho: 0.0,
            value: objective(0.0)?,
        });
    }
    // surface the first evaluation error rather than a generic non-finite one
    for probe in [-1.0, 0.0, 1.0] {
        objective(probe)?;
    }
    maximize_over_rho(|r| objective(r).unwrap_or(f64::NAN), DEFAULT_TOL)
}

/// Receiver 2 rate bound under the secrecy constraint, at a given `rho`:
/// `0.5 log2(1 + SNR - (rho SNR + sqrt(SNR INR))^2 / (1 + SNR + INR + 2 rho sqrt(SNR INR)))`.
pub fn secrecy_r2_objective(g: &GaussParams, rho: f64) -> Result<f64> {
    let s = g.cross();
    // denominator >= 1 + (sqrt SNR - sqrt INR)^2 >= 1 on [-1, 1]
    let denom = 1.0 + g.snr + g.inr + 2.0 * rho * s;
    // (1 + SNR) denom - (rho SNR + s)^2, expanded
    let num = 1.0 + 2.0 * g.snr + g.snr * g.snr * (1.0 - rho * rho) + g.inr + 2.0 * rho * s;
    Ok(0.5 * log2_checked(num / denom, "receiver 2 secrecy bound")?)
}

/// Sum-rate objective of the general secrecy bound at a given `rho`,
/// without the additive `C_G`.
pub fn secrecy_sum_objective(g: &GaussParams, rho: f64) -> Result<f64> {
    let s = g.cross();
    // 1 + SNR + INR + 2 rho s - (rho SNR + s)^2 / (1 + SNR), expanded so the
    // SNR^2 terms cancel symbolically rather than in floating point
    let y1_given_y2 =
        (1.0 + 2.0 * g.snr + g.snr * g.snr * (1.0 - rho * rho) + g.inr + 2.0 * rho * s) / (1.0 + g.snr);
    let first = 0.5 * log2_checked(y1_given_y2, "sum bound, first term")?;
    let second = 0.5 * log2_checked(sigma_y2_given_s(g, rho)?, "sum bound, conditional covariance")?;
    Ok(first + second)
}

/// Conditional variance of receiver 2's output given the side-information
/// pair, `1 + SNR - Σ_ys Σ_ss^{-1} Σ_ys^T`, via the closed-form 2x2 inverse.
pub fn sigma_y2_given_s(g: &GaussParams, rho: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&rho) {
        return Err(Error::param(format!("rho must lie in [-1, 1], got {rho}")));
    }
    let s = g.cross();
    let (snr, inr) = (g.snr, g.inr);
    let one_minus = 1.0 - rho * rho;
    // Σss = [[1+SNR, SNR+rho s], [SNR+rho s, 1+SNR+INR+2 rho s]] and the
    // cross covariance [rho SNR, rho SNR + s]. Determinant and the numerator
    // (1+SNR) det - [a b] adj(Σss) [a b]^T are written out in expanded form.
    let det = 1.0 + 2.0 * snr + inr + 2.0 * rho * s + snr * inr * one_minus;
    if det.abs() < 1e-12 {
        return Err(Error::Singular(format!(
            "side-information covariance has determinant {det} at rho = {rho}"
        )));
    }
    let num = 1.0 + 3.0 * snr + 2.0 * snr * snr * one_minus + inr + snr * inr * one_minus + 2.0 * rho * s;
    Ok(num / det)
}

pub fn thm4_bounds(g: &GaussParams) -> TheoremBounds {
    let r = single_user(g);
    let sum = 0.5 * (1.0 + g.snr + g.inr + 2.0 * g.cross()).log2()
        + 0.5 * (1.0 + g.snr / (1.0 + g.inr)).log2()
        + g.cg;
    TheoremBounds {
        theorem: Theorem::Cooperative,
        r1: r,
        r2: r,
        sum,
        r2_rho: None,
        sum_rho: None,
    }
}

pub fn thm5_bounds(g: &GaussParams) -> Result<TheoremBounds> {
    if !g.is_weak_moderate() {
        return Err(Error::Regime(format!(
            "the weak/moderate secrecy bound needs INR <= SNR, got {g}"
        )));
    }
    let r2 = over_rho(g, |rho| secrecy_r2_objective(g, rho))?;
    let sum = (1.0 + g.snr).log2() - 0.5 * (1.0 + g.inr).log2() + g.cg;
    Ok(TheoremBounds {
        theorem: Theorem::SecrecyWeak,
        r1: single_user(g),
        r2: r2.value,
        sum,
        r2_rho: Some(r2),
        sum_rho: None,
    })
}

pub fn thm6_bounds(g: &GaussParams) -> Result<TheoremBounds> {
    let r2 = over_rho(g, |rho| secrecy_r2_objective(g, rho))?;
    let sum = over_rho(g, |rho| secrecy_sum_objective(g, rho))?;
    Ok(TheoremBounds {
        theorem: Theorem::SecrecyGeneral,
        r1: single_user(g),
        r2: r2.value,
        sum: sum.value + g.cg,
        r2_rho: Some(r2),
        sum_rho: Some(sum),
    })
}

pub fn theorem_bounds(theorem: Theorem, g: &GaussParams) -> Result<TheoremBounds> {
    match theorem {
        Theorem::Cooperative => Ok(thm4_bounds(g)),
        Theorem::SecrecyWeak => thm5_bounds(g),
        Theorem::SecrecyGeneral => thm6_bounds(g),
    }
}

pub fn thm4_region(g: &GaussParams) -> Result<RateRegion> {
    thm4_bounds(g).region()
}

pub fn thm5_region(g: &GaussParams) -> Result<RateRegion> {
    thm5_bounds(g)?.region()
}

pub fn thm6_region(g: &GaussParams) -> Result<RateRegion> {
    thm6_bounds(g)?.region()
}

/// Theorems that apply at `g`, in numbering order.
pub fn applicable_theorems(g: &GaussParams) -> Vec<Theorem> {
    Theorem::ALL
        .into_iter()
        .filter(|t| *t != Theorem::SecrecyWeak || g.is_weak_moderate())
        .collect()
}

/// Intersection of every applicable bound.
pub fn best_outer_region(g: &GaussParams) -> Result<RateRegion> {
    let mut region = thm4_region(g)?;
    region = intersect(&region, &thm6_region(g)?);
    if g.is_weak_moderate() {
        region = intersect(&region, &thm5_region(g)?);
    }
    Ok(region)
}
