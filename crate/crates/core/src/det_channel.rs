//! Linear deterministic Z interference channel.
//!
//! Signals are bit vectors whose levels are numbered from the bottom (level 1)
//! to the top. A link of strength `k` delivers the top `k` levels of its input
//! to the bottom `k` levels of the receiver, and signals meeting at a receiver
//! add modulo 2. Receiver 2 hears only transmitter 2, receiver 1 hears both.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Parameters of the deterministic model, in bit levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DetParams {
    m: u32,
    n: u32,
    c: u32,
}

impl DetParams {
    /// `m` direct-link levels, `n` cross-link levels, `c` bits of cooperation.
    pub fn new(m: u32, n: u32, c: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::param("m must be >= 1"));
        }
        Ok(Self { m, n, c })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    /// Number of levels of the common signal space, `max(m, n)`.
    pub fn q(&self) -> u32 {
        self.m.max(self.n)
    }

    /// Same channel with a different cooperation capacity.
    pub fn with_c(&self, c: u32) -> Self {
        Self { c, ..*self }
    }

    pub fn regime(&self) -> Regime {
        classify_regime(self)
    }
}

impl fmt::Display for DetParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={}, C={})", self.m, self.n, self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegimeKind {
    /// `alpha <= 1`
    WeakModerate,
    /// `1 < alpha < 2`
    High,
    /// `alpha >= 2`
    VeryHigh,
}

/// Interference regime together with the exact coupling ratio `n / m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Regime {
    pub kind: RegimeKind,
    pub alpha: Ratio<u32>,
}

pub fn classify_regime(p: &DetParams) -> Regime {
    let alpha = Ratio::new(p.n, p.m);
    let kind = if p.n <= p.m {
        RegimeKind::WeakModerate
    } else if p.n < 2 * p.m {
        RegimeKind::High
    } else {
        // alpha = 2 belongs here; the very high regime bound holds for alpha >= 2.
        RegimeKind::VeryHigh
    };
    Regime { kind, alpha }
}

/// Fixed-length binary vector, indexed by level starting at 1 from the bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    bits: Vec<bool>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    /// Build from levels listed bottom-up.
    pub fn from_levels(levels: &[bool]) -> Self {
        Self {
            bits: levels.to_vec(),
        }
    }

    /// Low `len` bits of `word`; bit 0 is level 1.
    pub fn from_word(word: u64, len: usize) -> Self {
        assert!(len <= 64, "word-backed vectors hold at most 64 levels");
        Self {
            bits: (0..len).map(|i| (word >> i) & 1 == 1).collect(),
        }
    }

    pub fn to_word(&self) -> u64 {
        assert!(self.bits.len() <= 64, "vector longer than 64 levels");
        self.bits
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at `level` (1-based, bottom-up).
    pub fn get(&self, level: usize) -> bool {
        assert!(
            (1..=self.bits.len()).contains(&level),
            "level {level} out of range 1..={}",
            self.bits.len()
        );
        self.bits[level - 1]
    }

    pub fn set(&mut self, level: usize, value: bool) {
        assert!(
            (1..=self.bits.len()).contains(&level),
            "level {level} out of range 1..={}",
            self.bits.len()
        );
        self.bits[level - 1] = value;
    }

    /// Levels bottom-up.
    pub fn levels(&self) -> &[bool] {
        &self.bits
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len(), other.len(), "xor of vectors of unequal length");
        BitVec {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        }
    }
}

impl fmt::Display for BitVec {
    /// Top level first, like a binary numeral.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in self.bits.iter().rev() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Channel outputs at both receivers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outputs {
    /// Receiver 1, `max(m, n)` levels.
    pub y1: BitVec,
    /// Receiver 2, `m` levels.
    pub y2: BitVec,
}

/// Pass `x1` (m levels) and `x2` (max(m, n) levels) through the channel.
pub fn transmit(x1: &BitVec, x2: &BitVec, p: &DetParams) -> Result<Outputs> {
    let (m, n, q) = (p.m as usize, p.n as usize, p.q() as usize);
    if x1.len() != m {
        return Err(Error::param(format!(
            "x1 has {} levels, expected m = {m}",
            x1.len()
        )));
    }
    if x2.len() != q {
        return Err(Error::param(format!(
            "x2 has {} levels, expected max(m, n) = {q}",
            x2.len()
        )));
    }

    let mut y1 = BitVec::zeros(q);
    let mut y2 = BitVec::zeros(m);
    if m >= n {
        for i in 1..=m {
            let interference = i <= n && x2.get(i + m - n);
            y1.set(i, x1.get(i) ^ interference);
            y2.set(i, x2.get(i));
        }
    } else {
        for i in 1..=n {
            let own = i <= m && x1.get(i);
            y1.set(i, own ^ x2.get(i));
        }
        for i in 1..=m {
            y2.set(i, x2.get(i + n - m));
        }
    }
    Ok(Outputs { y1, y2 })
}

/// Word-packed form of [`transmit`]: bit `i - 1` of each word is level `i`.
///
/// Used by the exhaustive scheme evaluator. Requires `max(m, n) <= 64`.
pub fn transmit_words(x1: u64, x2: u64, p: &DetParams) -> (u64, u64) {
    let (m, n) = (p.m, p.n);
    debug_assert!(p.q() <= 64);
    let mask = |k: u32| if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    let x1 = x1 & mask(m);
    let x2 = x2 & mask(p.q());
    if m >= n {
        let shift = m - n;
        let y1 = x1 ^ (x2 >> shift & mask(n));
        (y1, x2)
    } else {
        (x1 ^ x2, (x2 >> (n - m)) & mask(m))
    }
}
