//! Outer bounds on the secrecy capacity region of the two-user Z interference
//! channel (Z-IC) with rate-limited cooperation from transmitter 2 to
//! transmitter 1.
//!
//! The crate covers both channel models:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`det_channel`] | Linear deterministic channel: bit-level signals, downshift, XOR superposition |
//! | [`det_regions`] | Outer-bound regions for the deterministic model in each interference regime |
//! | [`det_schemes`] | Corner-point schemes and exhaustive verification of rate, decodability and leakage |
//! | [`gauss_regions`] | Gaussian outer bounds, including the maximization over the correlation coefficient |
//! | [`region_geom`] | Half-plane rate regions: vertices, containment, intersection, area |
//! | [`correspondence`] | High-SNR agreement between the Gaussian and deterministic bounds |
//! | [`cli`] | Command-line front end and the JSON/CSV emitters |
//!
//! ```
//! use zic_secrecy::{det_channel::DetParams, det_regions::det_outer_region, region_geom};
//!
//! let p = DetParams::new(5, 3, 0).unwrap();
//! let region = det_outer_region(&p);
//! assert_eq!(region_geom::area(&region), 20.5);
//! ```

pub mod cli;
pub mod correspondence;
pub mod det_channel;
pub mod det_regions;
pub mod det_schemes;
mod error;
pub mod gauss_regions;
pub mod region_geom;

pub use error::{Error, Result};
