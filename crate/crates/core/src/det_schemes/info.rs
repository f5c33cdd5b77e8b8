//! Exact information measures over finite joint distributions.
//!
//! Probabilities are held as integer weights over one common denominator,
//! so independence and determinism are decided without rounding. A quantity
//! is additionally available as an exact rational number of bits whenever
//! every logarithm it involves is the logarithm of a power of two, which is
//! always the case for uniform bits pushed through linear maps over GF(2).

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// An information quantity in bits.
#[derive(Debug, Clone, PartialEq)]
pub struct Bits {
    /// Exact value, when it is rational.
    pub exact: Option<BigRational>,
    /// Floating value; exactly `0.0` whenever `exact` is zero.
    pub value: f64,
}

impl Bits {
    pub fn zero() -> Self {
        Self {
            exact: Some(BigRational::zero()),
            value: 0.0,
        }
    }

    /// True only when zero is established symbolically.
    pub fn is_exact_zero(&self) -> bool {
        self.exact.as_ref().is_some_and(Zero::is_zero)
    }
}

/// Outcome label. Schemes use packed bit words as labels.
pub type Label = u64;

/// Finite joint distribution of `(X, Y)` with exact rational probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDist {
    /// Positive weights only; `p(x, y) = weight / denom`.
    cells: BTreeMap<(Label, Label), BigUint>,
    denom: BigUint,
}

impl JointDist {
    /// Build from rational cell probabilities. Zero cells are dropped; cells
    /// listed twice are summed. The probabilities must sum to exactly one.
    pub fn new<I>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((Label, Label), BigRational)>,
    {
        let mut merged: BTreeMap<(Label, Label), BigRational> = BTreeMap::new();
        for (key, p) in cells {
            if p < BigRational::zero() {
                return Err(Error::Validation(format!("negative probability {p} at {key:?}")));
            }
            *merged.entry(key).or_insert_with(BigRational::zero) += p;
        }
        let total: BigRational = merged.values().sum();
        if !total.is_one() {
            return Err(Error::Validation(format!("probabilities sum to {total}, not 1")));
        }
        let denom = merged
            .values()
            .filter(|p| !p.is_zero())
            .fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
        let cells = merged
            .into_iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, p)| {
                let w = p.numer() * (&denom / p.denom());
                (k, w.to_biguint().expect("weights are nonnegative"))
            })
            .collect();
        Ok(Self {
            cells,
            denom: denom.to_biguint().expect("denominator is positive"),
        })
    }

    /// Empirical distribution of equally likely enumerated outcomes.
    pub fn from_counts<I>(counts: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((Label, Label), u64)>,
    {
        let mut cells: BTreeMap<(Label, Label), BigUint> = BTreeMap::new();
        for (k, c) in counts {
            if c > 0 {
                *cells.entry(k).or_default() += BigUint::from(c);
            }
        }
        let denom: BigUint = cells.values().sum();
        if denom.is_zero() {
            return Err(Error::Validation("empty distribution".into()));
        }
        Ok(Self { cells, denom })
    }

    /// Table form: `table[x][y]` is `p(x, y)`, labels are the indices.
    pub fn from_table(table: &[Vec<BigRational>]) -> Result<Self> {
        Self::new(table.iter().enumerate().flat_map(|(x, row)| {
            row.iter()
                .enumerate()
                .map(move |(y, p)| ((x as Label, y as Label), p.clone()))
        }))
    }

    pub fn probability(&self, x: Label, y: Label) -> BigRational {
        self.cells
            .get(&(x, y))
            .map(|w| ratio(w, &self.denom))
            .unwrap_or_else(BigRational::zero)
    }

    /// Distribution of `(Y, X)`.
    pub fn swapped(&self) -> JointDist {
        JointDist {
            cells: self
                .cells
                .iter()
                .map(|(&(x, y), w)| ((y, x), w.clone()))
                .collect(),
            denom: self.denom.clone(),
        }
    }

    fn marginal_weights(&self, axis_x: bool) -> HashMap<Label, BigUint> {
        let mut out: HashMap<Label, BigUint> = HashMap::new();
        for (&(x, y), w) in &self.cells {
            *out.entry(if axis_x { x } else { y }).or_default() += w;
        }
        out
    }

    pub fn marginal_x(&self) -> BTreeMap<Label, BigRational> {
        self.marginal_weights(true)
            .into_iter()
            .map(|(k, w)| (k, ratio(&w, &self.denom)))
            .collect()
    }

    pub fn marginal_y(&self) -> BTreeMap<Label, BigRational> {
        self.marginal_weights(false)
            .into_iter()
            .map(|(k, w)| (k, ratio(&w, &self.denom)))
            .collect()
    }

    /// `p(x, y) = p(x) p(y)` on every cell of the product of the supports.
    ///
    /// Only positive cells are inspected: if they all factor, their product
    /// masses already sum to one, leaving no mass for a missing cell.
    pub fn is_independent(&self) -> bool {
        let px = self.marginal_weights(true);
        let py = self.marginal_weights(false);
        self.cells
            .iter()
            .all(|(&(x, y), w)| w * &self.denom == &px[&x] * &py[&y])
    }

    /// `I(X; Y)` in bits. Independence is detected before any floating
    /// point evaluation, so an independent table yields exact zero.
    pub fn mutual_information(&self) -> Bits {
        if self.is_independent() {
            return Bits::zero();
        }
        let px = self.marginal_weights(true);
        let py = self.marginal_weights(false);
        // sum p(x,y) log2[ p(x,y) / (p(x) p(y)) ] with ratio w*D / (wx*wy)
        let terms = self
            .cells
            .iter()
            .map(|(&(x, y), w)| (w.clone(), w * &self.denom, &px[&x] * &py[&y]));
        let bits = self.weighted_log_sum(terms);
        // KL divergence; clamp rounding below zero
        Bits {
            value: bits.value.max(0.0),
            ..bits
        }
    }

    /// `H(X | Y)` in bits; exact zero when every `y` determines `x`.
    pub fn conditional_entropy_x_given_y(&self) -> Bits {
        if self.x_determined_by_y() {
            return Bits::zero();
        }
        let py = self.marginal_weights(false);
        let terms = self
            .cells
            .iter()
            .map(|(&(_, y), w)| (w.clone(), py[&y].clone(), w.clone()));
        let bits = self.weighted_log_sum(terms);
        Bits {
            value: bits.value.max(0.0),
            ..bits
        }
    }

    /// Each `y` in the support occurs with exactly one `x`.
    pub fn x_determined_by_y(&self) -> bool {
        let mut seen: HashMap<Label, Label> = HashMap::new();
        self.cells.keys().all(|&(x, y)| *seen.entry(y).or_insert(x) == x)
    }

    pub fn entropy_x(&self) -> Bits {
        let probs: Vec<BigRational> = self.marginal_x().into_values().collect();
        entropy_unchecked(&probs)
    }

    /// `sum_k (w_k / D) * log2(num_k / den_k)`.
    fn weighted_log_sum<I>(&self, terms: I) -> Bits
    where
        I: Iterator<Item = (BigUint, BigUint, BigUint)>,
    {
        let mut exact = Some(BigInt::zero());
        let mut value = 0.0;
        for (w, num, den) in terms {
            let weight = ratio_f64(&w, &self.denom);
            value += weight * log2_ratio(&num, &den);
            if let Some(acc) = exact.as_mut() {
                match power_of_two_exponent(&num, &den) {
                    Some(k) => *acc += BigInt::from(w) * k,
                    None => exact = None,
                }
            }
        }
        match exact {
            Some(numer) => {
                let exact = BigRational::new(numer, BigInt::from(self.denom.clone()));
                Bits {
                    value: exact.to_f64().unwrap_or(value),
                    exact: Some(exact),
                }
            }
            None => Bits { exact: None, value },
        }
    }
}

/// Free-standing form of [`JointDist::mutual_information`].
pub fn mutual_information(j: &JointDist) -> Bits {
    j.mutual_information()
}

/// Shannon entropy in bits of a probability vector that sums to one.
pub fn entropy(dist: &[BigRational]) -> Result<Bits> {
    if dist.iter().any(|p| *p < BigRational::zero()) {
        return Err(Error::Validation("negative probability".into()));
    }
    let total: BigRational = dist.iter().sum();
    if !total.is_one() {
        return Err(Error::Validation(format!("probabilities sum to {total}, not 1")));
    }
    Ok(entropy_unchecked(dist))
}

fn entropy_unchecked(dist: &[BigRational]) -> Bits {
    let mut exact = Some(BigRational::zero());
    let mut value = 0.0;
    for p in dist.iter().filter(|p| !p.is_zero()) {
        if p.is_one() {
            return Bits::zero();
        }
        let num = p.numer().to_biguint().expect("positive");
        let den = p.denom().to_biguint().expect("positive");
        // -p log2 p = p log2(den / num)
        value += ratio_f64(&num, &den) * log2_ratio(&den, &num);
        if let Some(acc) = exact.as_mut() {
            match power_of_two_exponent(&den, &num) {
                Some(k) => *acc += p * BigRational::from_integer(BigInt::from(k)),
                None => exact = None,
            }
        }
    }
    match exact {
        Some(h) => Bits {
            value: h.to_f64().unwrap_or(value),
            exact: Some(h),
        },
        None => Bits { exact: None, value },
    }
}

fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

fn ratio_f64(num: &BigUint, den: &BigUint) -> f64 {
    (log2_big(num) - log2_big(den)).exp2()
}

fn log2_ratio(num: &BigUint, den: &BigUint) -> f64 {
    let g = num.gcd(den);
    log2_big(&(num / &g)) - log2_big(&(den / &g))
}

/// `log2(x)` for `x > 0` without overflowing through `f64`.
fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits").log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("fits");
    top.log2() + shift as f64
}

/// `k` such that `num / den = 2^k`, if any.
fn power_of_two_exponent(num: &BigUint, den: &BigUint) -> Option<i64> {
    let g = num.gcd(den);
    let (a, b) = (num / &g, den / &g);
    let pow2 = |v: &BigUint| -> Option<i64> {
        let tz = v.trailing_zeros()?;
        (v >> tz).is_one().then_some(tz as i64)
    };
    Some(pow2(&a)? - pow2(&b)?)
}
