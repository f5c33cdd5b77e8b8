//! Push bit vectors through the deterministic channel and show what each
//! receiver sees.

use zic_secrecy::det_channel::{transmit, BitVec, DetParams};

fn main() -> zic_secrecy::Result<()> {
    for (m, n) in [(5, 3), (4, 5)] {
        let p = DetParams::new(m, n, 0)?;
        let x1 = BitVec::from_word(0b10010, m as usize);
        let x2 = BitVec::from_word(0b01101, p.q() as usize);
        let out = transmit(&x1, &x2, &p)?;
        println!("{p}, top level first");
        println!("  x1 = {x1}");
        println!("  x2 = {x2}");
        println!("  y1 = {}  (x1 plus the top of x2)", out.y1);
        println!("  y2 = {}", out.y2);
    }
    Ok(())
}
