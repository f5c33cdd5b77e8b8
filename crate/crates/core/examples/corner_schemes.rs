//! Build both corner-point schemes and verify them by exhaustive
//! enumeration.

use zic_secrecy::det_channel::DetParams;
use zic_secrecy::det_schemes::{corner_scheme_a, corner_scheme_b, evaluate_scheme, scheme_to_text};

fn main() -> zic_secrecy::Result<()> {
    let p = DetParams::new(5, 3, 0)?;
    for scheme in [corner_scheme_a(&p)?, corner_scheme_b(&p)?] {
        print!("{}", scheme_to_text(&scheme));
        let r = evaluate_scheme(&scheme)?;
        println!(
            "-> rates ({}, {}), leakage {} bits, decodable {}/{}\n",
            r.r1, r.r2, r.leakage.value, r.decodable1, r.decodable2
        );
    }
    Ok(())
}
