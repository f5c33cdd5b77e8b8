//! Sum-rate bounds against cooperation capacity, as CSV on stdout.
//!
//! ```text
//! cargo run --example sweep > sweep.csv
//! ```

use zic_secrecy::cli::emit::{sweep_csv, SweepRow};
use zic_secrecy::gauss_regions::{applicable_theorems, theorem_bounds, GaussParams};

fn main() -> zic_secrecy::Result<()> {
    let mut rows = Vec::new();
    for inr in [25.0, 225.0] {
        for k in 0..=12 {
            let g = GaussParams::new(100.0, inr, f64::from(k) * 0.25)?;
            for t in applicable_theorems(&g) {
                rows.extend(
                    SweepRow::rows(&g, &theorem_bounds(t, &g)?)
                        .into_iter()
                        .filter(|r| r.bound == "sum"),
                );
            }
        }
    }
    print!("{}", sweep_csv(&rows));
    Ok(())
}
