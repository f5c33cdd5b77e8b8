//! Deterministic transmission schemes and their exact verification.
//!
//! A [`Scheme`] states, for every level of both transmitters, whether it
//! carries a message bit, a uniformly random jamming bit or nothing.
//! [`evaluate_scheme`] enumerates every message and jamming realization at
//! block length one and reports rates, decodability at the intended
//! receivers and the exact leakage `I(W2; y1)` at receiver 1.

use std::collections::HashMap;
use std::fmt;

use crate::det_channel::{transmit_words, DetParams, RegimeKind};
use crate::{Error, Result};

mod format;
pub mod info;

pub use format::{parse_scheme, scheme_to_text};
pub use info::{entropy, mutual_information, Bits, JointDist};

/// Largest number of independent uniform bits (both messages plus jamming)
/// that [`evaluate_scheme`] will enumerate.
pub const MAX_FREE_BITS: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Message {
    W1,
    W2,
}

impl Message {
    pub fn owner(self) -> Transmitter {
        match self {
            Message::W1 => Transmitter::Tx1,
            Message::W2 => Transmitter::Tx2,
        }
    }
}

impl fmt::Display for Message {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Message::W1 => "w1",
            Message::W2 => "w2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transmitter {
    Tx1,
    Tx2,
}

impl fmt::Display for Transmitter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Transmitter::Tx1 => "tx1",
            Transmitter::Tx2 => "tx2",
        })
    }
}

/// What a transmitter places on one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Assignment {
    /// Bit `bit` (1-based) of a message.
    Data { message: Message, bit: u32 },
    /// Fresh uniform random bit.
    Jam,
    #[default]
    Zero,
}

impl Assignment {
    pub fn data(message: Message, bit: u32) -> Self {
        Assignment::Data { message, bit }
    }
}

/// Level assignments for both transmitters, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scheme {
    params: DetParams,
    tx1: Vec<Assignment>,
    tx2: Vec<Assignment>,
}

impl Scheme {
    /// `tx1[i]` and `tx2[i]` describe level `i + 1`. `tx1` must have `m`
    /// entries and `tx2` must have `max(m, n)`.
    pub fn new(params: DetParams, tx1: Vec<Assignment>, tx2: Vec<Assignment>) -> Result<Self> {
        if tx1.len() != params.m() as usize {
            return Err(Error::param(format!(
                "tx1 has {} levels, expected {}",
                tx1.len(),
                params.m()
            )));
        }
        if tx2.len() != params.q() as usize {
            return Err(Error::param(format!(
                "tx2 has {} levels, expected {}",
                tx2.len(),
                params.q()
            )));
        }
        let scheme = Self { params, tx1, tx2 };
        for tx in [Transmitter::Tx1, Transmitter::Tx2] {
            for a in scheme.levels(tx) {
                if let Assignment::Data { message, .. } = a {
                    if message.owner() != tx {
                        return Err(Error::param(format!("{message} data placed on {tx}")));
                    }
                }
            }
        }
        for msg in [Message::W1, Message::W2] {
            let mut bits: Vec<u32> = scheme.data_bits(msg).collect();
            bits.sort_unstable();
            if bits.iter().zip(1..).any(|(&b, expected)| b != expected) {
                return Err(Error::param(format!(
                    "{msg} bit indices must be 1..=k without repeats, got {bits:?}"
                )));
            }
        }
        Ok(scheme)
    }

    /// Scheme with every level set to Zero.
    pub fn silent(params: DetParams) -> Self {
        Self {
            params,
            tx1: vec![Assignment::Zero; params.m() as usize],
            tx2: vec![Assignment::Zero; params.q() as usize],
        }
    }

    pub fn params(&self) -> &DetParams {
        &self.params
    }

    pub fn levels(&self, tx: Transmitter) -> &[Assignment] {
        match tx {
            Transmitter::Tx1 => &self.tx1,
            Transmitter::Tx2 => &self.tx2,
        }
    }

    /// Assignment at `level` (1-based).
    pub fn get(&self, tx: Transmitter, level: usize) -> Assignment {
        self.levels(tx)[level - 1]
    }

    /// Copy with one level replaced; the result is revalidated.
    pub fn replaced(&self, tx: Transmitter, level: usize, a: Assignment) -> Result<Scheme> {
        let mut tx1 = self.tx1.clone();
        let mut tx2 = self.tx2.clone();
        let target = match tx {
            Transmitter::Tx1 => &mut tx1,
            Transmitter::Tx2 => &mut tx2,
        };
        if level == 0 || level > target.len() {
            return Err(Error::param(format!(
                "level {level} out of range 1..={} for {tx}",
                target.len()
            )));
        }
        target[level - 1] = a;
        Scheme::new(self.params, tx1, tx2)
    }

    fn data_bits(&self, msg: Message) -> impl Iterator<Item = u32> + '_ {
        self.tx1.iter().chain(&self.tx2).filter_map(move |a| match a {
            Assignment::Data { message, bit } if *message == msg => Some(*bit),
            _ => None,
        })
    }

    /// Number of message bits carried, i.e. the rate in bits per use.
    pub fn rate(&self, msg: Message) -> u32 {
        self.data_bits(msg).count() as u32
    }

    pub fn jam_count(&self) -> u32 {
        self.tx1
            .iter()
            .chain(&self.tx2)
            .filter(|a| matches!(a, Assignment::Jam))
            .count() as u32
    }

    /// Levels of `tx` that carry jamming, bottom-up.
    pub fn jam_levels(&self, tx: Transmitter) -> Vec<usize> {
        self.levels(tx)
            .iter()
            .enumerate()
            .filter(|(_, a)| matches!(a, Assignment::Jam))
            .map(|(i, _)| i + 1)
            .collect()
    }
}

fn require_weak_moderate(p: &DetParams) -> Result<()> {
    if p.regime().kind != RegimeKind::WeakModerate {
        return Err(Error::Regime(format!("corner schemes need n <= m, got {p}")));
    }
    Ok(())
}

/// Corner point `(m, m - n)`: transmitter 1 sends data on every level,
/// transmitter 2 only on the bottom `m - n` levels, which never reach
/// receiver 1.
pub fn corner_scheme_a(p: &DetParams) -> Result<Scheme> {
    require_weak_moderate(p)?;
    let (m, n) = (p.m(), p.n());
    let tx1 = (1..=m).map(|i| Assignment::data(Message::W1, i)).collect();
    let tx2 = (1..=m)
        .map(|i| {
            if i <= m - n {
                Assignment::data(Message::W2, i)
            } else {
                Assignment::Zero
            }
        })
        .collect();
    Scheme::new(*p, tx1, tx2)
}

/// Corner point `(m - n, m)`: transmitter 2 sends data on every level and
/// transmitter 1 jams the `n` levels where that data arrives at receiver 1,
/// sending its own data above them.
pub fn corner_scheme_b(p: &DetParams) -> Result<Scheme> {
    require_weak_moderate(p)?;
    let (m, n) = (p.m(), p.n());
    let tx1 = (1..=m)
        .map(|i| {
            if i <= n {
                Assignment::Jam
            } else {
                Assignment::data(Message::W1, i - n)
            }
        })
        .collect();
    let tx2 = (1..=m).map(|i| Assignment::data(Message::W2, i)).collect();
    Scheme::new(*p, tx1, tx2)
}

/// Result of exhaustively evaluating a scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeReport {
    pub r1: u32,
    pub r2: u32,
    /// `I(W2; y1)` in bits.
    pub leakage: Bits,
    /// `H(W1 | y1) = 0`
    pub decodable1: bool,
    /// `H(W2 | y2) = 0`
    pub decodable2: bool,
    /// Leakage is exactly zero.
    pub secure: bool,
}

/// Per-level source of a transmitted bit within the enumeration counter.
#[derive(Clone, Copy)]
enum Source {
    Zero,
    Bit(u32),
}

fn sources(levels: &[Assignment], k1: u32, k2: u32, next_jam: &mut u32) -> Vec<Source> {
    levels
        .iter()
        .map(|a| match *a {
            Assignment::Zero => Source::Zero,
            Assignment::Data {
                message: Message::W1,
                bit,
            } => Source::Bit(bit - 1),
            Assignment::Data {
                message: Message::W2,
                bit,
            } => Source::Bit(k1 + bit - 1),
            Assignment::Jam => {
                let s = Source::Bit(k1 + k2 + *next_jam);
                *next_jam += 1;
                s
            }
        })
        .collect()
}

fn pack(sources: &[Source], counter: u64) -> u64 {
    sources.iter().enumerate().fold(0, |acc, (level, s)| match s {
        Source::Zero => acc,
        Source::Bit(b) => acc | (((counter >> b) & 1) << level),
    })
}

/// Enumerate all `2^(k1 + k2 + jam)` equally likely realizations.
pub fn evaluate_scheme(s: &Scheme) -> Result<SchemeReport> {
    let p = s.params();
    let (k1, k2, kj) = (s.rate(Message::W1), s.rate(Message::W2), s.jam_count());
    let free = k1 + k2 + kj;
    if free > MAX_FREE_BITS {
        return Err(Error::Resource(format!(
            "{free} free bits exceed the enumeration budget of {MAX_FREE_BITS}"
        )));
    }
    if p.q() > 64 {
        return Err(Error::Resource(format!(
            "{} levels exceed the 64-level word size",
            p.q()
        )));
    }

    let mut next_jam = 0;
    let src1 = sources(&s.tx1, k1, k2, &mut next_jam);
    let src2 = sources(&s.tx2, k1, k2, &mut next_jam);
    let mask = |k: u32| (1u64 << k) - 1;

    let mut w2_y1: HashMap<(u64, u64), u64> = HashMap::new();
    let mut w1_y1: HashMap<(u64, u64), u64> = HashMap::new();
    let mut w2_y2: HashMap<(u64, u64), u64> = HashMap::new();
    for counter in 0..(1u64 << free) {
        let x1 = pack(&src1, counter);
        let x2 = pack(&src2, counter);
        let (y1, y2) = transmit_words(x1, x2, p);
        let w1 = counter & mask(k1);
        let w2 = (counter >> k1) & mask(k2);
        *w2_y1.entry((w2, y1)).or_default() += 1;
        *w1_y1.entry((w1, y1)).or_default() += 1;
        *w2_y2.entry((w2, y2)).or_default() += 1;
    }

    let leakage = JointDist::from_counts(w2_y1)?.mutual_information();
    let decodable1 = JointDist::from_counts(w1_y1)?.x_determined_by_y();
    let decodable2 = JointDist::from_counts(w2_y2)?.x_determined_by_y();
    Ok(SchemeReport {
        r1: k1,
        r2: k2,
        secure: leakage.is_exact_zero(),
        leakage,
        decodable1,
        decodable2,
    })
}
