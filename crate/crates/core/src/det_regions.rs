//! Outer bounds on the secrecy capacity region of the deterministic model.

use crate::det_channel::{DetParams, RegimeKind};
use crate::region_geom::{Constraint, RateRegion};

/// Outer-bound region for `p`, one constraint per bound of the regime.
///
/// * weak/moderate: `R1 <= m`, `R2 <= m`, `R1 + R2 <= 2m - n + C`
/// * high: `R1 <= m`, `R2 <= 2m - n`, `R1 + R2 <= m + C`
/// * very high: `R1 <= m`, `R2 <= 0`, for every `C`
///
/// Redundant constraints are kept so the output reads like the bound itself.
pub fn det_outer_region(p: &DetParams) -> RateRegion {
    let (m, n, c) = (f64::from(p.m()), f64::from(p.n()), f64::from(p.c()));
    let constraints = match p.regime().kind {
        RegimeKind::WeakModerate => vec![
            Constraint::r1(m),
            Constraint::r2(m),
            Constraint::sum(2.0 * m - n + c),
        ],
        RegimeKind::High => vec![
            Constraint::r1(m),
            Constraint::r2(2.0 * m - n),
            Constraint::sum(m + c),
        ],
        RegimeKind::VeryHigh => vec![Constraint::r1(m), Constraint::r2(0.0)],
    };
    RateRegion::new(constraints).expect("deterministic bounds are nonnegative and bounded")
}
