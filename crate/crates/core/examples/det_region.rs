//! Deterministic outer-bound region as cooperation grows.
//!
//! ```text
//! cargo run --example det_region -- 5 3
//! ```

use zic_secrecy::det_channel::DetParams;
use zic_secrecy::det_regions::det_outer_region;
use zic_secrecy::region_geom::{area, vertices};

fn main() -> zic_secrecy::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (5, 3),
    };

    for c in 0..=m {
        let p = DetParams::new(m, n, c)?;
        let region = det_outer_region(&p);
        let corners: Vec<String> = vertices(&region)
            .iter()
            .map(|v| format!("({}, {})", v.r1, v.r2))
            .collect();
        println!(
            "{p} {:?} area {:>5}  {}",
            p.regime().kind,
            area(&region),
            corners.join(" ")
        );
    }
    Ok(())
}
