//! How close the Gaussian bounds get to the deterministic ones when the
//! channel is the canonical Gaussian image of a deterministic channel.

use zic_secrecy::correspondence::correspondence_report;
use zic_secrecy::det_channel::DetParams;

fn main() -> zic_secrecy::Result<()> {
    for (m, n, c) in [(10, 6, 2), (6, 9, 0), (3, 1, 0), (12, 4, 1), (24, 12, 1)] {
        let r = correspondence_report(&DetParams::new(m, n, c)?)?;
        println!(
            "{} -> SNR {:e}, INR {:e}: max gap {:.2e}",
            r.det,
            r.gauss.snr(),
            r.gauss.inr(),
            r.max_gap
        );
        for g in &r.gaps {
            println!(
                "  {:<9} {:>10.6} vs {:<6} = {:>3}   gap {:.2e}",
                g.bound, g.gaussian, g.target, g.deterministic, g.gap
            );
        }
    }
    Ok(())
}
