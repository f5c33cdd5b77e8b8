//! Parse a scheme file and report rates, leakage and decodability.
//!
//! ```text
//! cargo run --example verify_scheme -- crates/core/examples/data/leaky_5_3.txt
//! ```

use std::path::PathBuf;

use zic_secrecy::det_schemes::{evaluate_scheme, parse_scheme};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let files: Vec<PathBuf> = match std::env::args().nth(1) {
        Some(f) => vec![f.into()],
        None => vec![data.join("jam_5_3.txt"), data.join("leaky_5_3.txt")],
    };
    for file in files {
        let scheme = parse_scheme(&std::fs::read_to_string(&file)?)?;
        let r = evaluate_scheme(&scheme)?;
        let exact = r
            .leakage
            .exact
            .map(|q| q.to_string())
            .unwrap_or_else(|| "irrational".into());
        println!(
            "{}: rates ({}, {}), I(W2; y1) = {exact} bits, {}",
            file.file_name().unwrap().to_string_lossy(),
            r.r1,
            r.r2,
            if r.secure { "secure" } else { "leaks" }
        );
    }
    Ok(())
}
