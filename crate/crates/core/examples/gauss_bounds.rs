//! Gaussian outer bounds at one operating point, with the best region.

use zic_secrecy::gauss_regions::{applicable_theorems, best_outer_region, theorem_bounds, GaussParams};
use zic_secrecy::region_geom::{area, vertices};

fn main() -> zic_secrecy::Result<()> {
    for (snr, inr, cg) in [(100.0, 25.0, 0.0), (100.0, 225.0, 1.0)] {
        let g = GaussParams::new(snr, inr, cg)?;
        println!("{g}");
        for t in applicable_theorems(&g) {
            let b = theorem_bounds(t, &g)?;
            println!(
                "  {}: R1 <= {:.4}, R2 <= {:.4}, R1 + R2 <= {:.4}",
                t.label(),
                b.r1,
                b.r2,
                b.sum
            );
        }
        let best = best_outer_region(&g)?;
        let corners: Vec<String> = vertices(&best)
            .iter()
            .map(|v| format!("({:.3}, {:.3})", v.r1, v.r2))
            .collect();
        println!("  best: area {:.4}, {}", area(&best), corners.join(" "));
    }
    Ok(())
}
