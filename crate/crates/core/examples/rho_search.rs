//! The correlation search behind the secrecy bounds, checked against a
//! brute-force scan.

use zic_secrecy::gauss_regions::{maximize_over_rho, secrecy_r2_objective, GaussParams, DEFAULT_TOL};

fn main() -> zic_secrecy::Result<()> {
    let g = GaussParams::new(100.0, 225.0, 1.0)?;
    let f = |rho: f64| secrecy_r2_objective(&g, rho).unwrap();

    let found = maximize_over_rho(f, DEFAULT_TOL)?;
    println!(
        "grid + golden section: rho = {:.6}, R2 bound = {:.9}",
        found.rho, found.value
    );

    let (rho, value) = (0..=200_000)
        .map(|i| -1.0 + f64::from(i) * 1e-5)
        .map(|r| (r, f(r)))
        .fold(
            (0.0, f64::NEG_INFINITY),
            |best, p| if p.1 > best.1 { p } else { best },
        );
    println!("dense scan (1e-5):     rho = {rho:.6}, R2 bound = {value:.9}");

    for rho in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        println!("  f({rho:>4}) = {:.6}", f(rho));
    }
    Ok(())
}
