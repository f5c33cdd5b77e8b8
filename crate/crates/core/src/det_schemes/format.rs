//! Line-oriented scheme files.
//!
//! ```text
//! # corner point (2, 5) for m = 5, n = 3
//! m=5 n=3
//! tx1 1 jam
//! tx1 4 data w1 1
//! tx2 1 data w2 1
//! ```
//!
//! The header carries `m` and `n`; cooperation is not part of a scheme file
//! and parsed schemes have `C = 0`. Levels not listed are Zero. `#` starts a
//! comment anywhere on a line.

use std::fmt::Write as _;

use super::{Assignment, Message, Scheme, Transmitter};
use crate::det_channel::DetParams;
use crate::{Error, Result};

pub fn parse_scheme(text: &str) -> Result<Scheme> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `m=<int> n=<int>`"))?;
    let params = parse_header(header_line, header)?;

    let mut tx1: Vec<Option<(Assignment, usize)>> = vec![None; params.m() as usize];
    let mut tx2: Vec<Option<(Assignment, usize)>> = vec![None; params.q() as usize];

    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let tx = match tokens[0] {
            "tx1" => Transmitter::Tx1,
            "tx2" => Transmitter::Tx2,
            other => return Err(Error::parse(line, format!("unknown keyword `{other}`"))),
        };
        let slots = match tx {
            Transmitter::Tx1 => &mut tx1,
            Transmitter::Tx2 => &mut tx2,
        };
        let level_tok = tokens.get(1).ok_or_else(|| Error::parse(line, "missing level"))?;
        let level: usize = level_tok
            .parse()
            .map_err(|_| Error::parse(line, format!("invalid level `{level_tok}`")))?;
        if level == 0 || level > slots.len() {
            return Err(Error::parse(
                line,
                format!("level {level} out of range 1..={} for {tx}", slots.len()),
            ));
        }
        let assignment = match &tokens[2..] {
            ["jam"] => Assignment::Jam,
            ["zero"] => Assignment::Zero,
            ["data", msg, bit] => {
                let message = match *msg {
                    "w1" => Message::W1,
                    "w2" => Message::W2,
                    other => return Err(Error::parse(line, format!("unknown message `{other}`"))),
                };
                if message.owner() != tx {
                    return Err(Error::parse(
                        line,
                        format!("{message} data cannot be sent by {tx}"),
                    ));
                }
                let bit: u32 = bit
                    .parse()
                    .ok()
                    .filter(|&b| b >= 1)
                    .ok_or_else(|| Error::parse(line, format!("invalid bit index `{bit}`")))?;
                Assignment::Data { message, bit }
            }
            [] => return Err(Error::parse(line, "missing assignment")),
            [kw, ..] if !matches!(*kw, "jam" | "zero" | "data") => {
                return Err(Error::parse(line, format!("unknown keyword `{kw}`")))
            }
            _ => return Err(Error::parse(line, "malformed assignment")),
        };
        if let Some((_, first)) = slots[level - 1] {
            return Err(Error::parse(
                line,
                format!("duplicate {tx} level {level} (first given on line {first})"),
            ));
        }
        slots[level - 1] = Some((assignment, line));
    }

    for msg in [Message::W1, Message::W2] {
        check_indices(msg, &tx1, &tx2)?;
    }

    let strip = |v: Vec<Option<(Assignment, usize)>>| -> Vec<Assignment> {
        v.into_iter()
            .map(|s| s.map(|(a, _)| a).unwrap_or_default())
            .collect()
    };
    Scheme::new(params, strip(tx1), strip(tx2)).map_err(|e| Error::parse(header_line, e.to_string()))
}

fn parse_header(line: usize, header: &str) -> Result<DetParams> {
    let (mut m, mut n) = (None, None);
    for tok in header.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| Error::parse(line, format!("expected `key=value` in header, got `{tok}`")))?;
        let value: u32 = value
            .parse()
            .map_err(|_| Error::parse(line, format!("invalid integer `{value}` for {key}")))?;
        let slot = match key {
            "m" => &mut m,
            "n" => &mut n,
            other => return Err(Error::parse(line, format!("unknown keyword `{other}`"))),
        };
        if slot.replace(value).is_some() {
            return Err(Error::parse(line, format!("`{key}` given twice")));
        }
    }
    match (m, n) {
        (Some(m), Some(n)) => DetParams::new(m, n, 0).map_err(|e| Error::parse(line, e.to_string())),
        _ => Err(Error::parse(line, "header must be `m=<int> n=<int>`")),
    }
}

/// Data indices of `msg` must be exactly `1..=k`. Errors point at the line
/// of a repeated index, or at the line holding the largest index when some
/// smaller index is missing.
fn check_indices(
    msg: Message,
    tx1: &[Option<(Assignment, usize)>],
    tx2: &[Option<(Assignment, usize)>],
) -> Result<()> {
    let mut entries: Vec<(u32, usize)> = tx1
        .iter()
        .chain(tx2)
        .flatten()
        .filter_map(|(a, line)| match a {
            Assignment::Data { message, bit } if *message == msg => Some((*bit, *line)),
            _ => None,
        })
        .collect();
    entries.sort_unstable();
    for pair in entries.windows(2) {
        if pair[0].0 == pair[1].0 {
            let line = pair[0].1.max(pair[1].1);
            return Err(Error::parse(
                line,
                format!("{msg} bit {} assigned twice", pair[0].0),
            ));
        }
    }
    if let Some(&(max, line)) = entries.last() {
        if max as usize != entries.len() {
            return Err(Error::parse(
                line,
                format!(
                    "{msg} bit indices are not contiguous: {} bits but index {max}",
                    entries.len()
                ),
            ));
        }
    }
    Ok(())
}

/// Canonical text: header, then every non-Zero level of tx1 and tx2 in
/// level order.
pub fn scheme_to_text(s: &Scheme) -> String {
    let p = s.params();
    let mut out = format!("m={} n={}\n", p.m(), p.n());
    for tx in [Transmitter::Tx1, Transmitter::Tx2] {
        for (i, a) in s.levels(tx).iter().enumerate() {
            let level = i + 1;
            match a {
                Assignment::Zero => {}
                Assignment::Jam => writeln!(out, "{tx} {level} jam").unwrap(),
                Assignment::Data { message, bit } => {
                    writeln!(out, "{tx} {level} data {message} {bit}").unwrap()
                }
            }
        }
    }
    out
}
