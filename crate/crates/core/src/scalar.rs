//! Exact rationals with a p-adic valuation, and the log-scale norm lattice
//! `p^Q ∪ {0}` in which every Gauss norm of the crate is expressed.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient field: the rationals, viewed inside `Q_p`.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-3/4"` or `" 7 / 2 "` into an exact rational.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("not an exact rational: {text:?}"));
    match cleaned.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(n, d))
        }
        None => Ok(Scalar::from_integer(cleaned.parse().map_err(|_| bad())?)),
    }
}

/// `p^k` as an exact rational, for any sign of `k`.
pub fn prime_power(p: &Prime, k: i64) -> Scalar {
    let base = BigInt::from(p.get());
    let mag = num_traits::pow(base, k.unsigned_abs() as usize);
    if k >= 0 {
        Scalar::from_integer(mag)
    } else {
        Scalar::new(BigInt::one(), mag)
    }
}

/// A prime number, carried explicitly as run context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || (2..).take_while(|k: &u64| k * k <= p).any(|k| p.is_multiple_of(k)) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// The p-adic valuation; `Infinite` exactly for zero.
    pub fn valuation(self, x: &Scalar) -> Valuation {
        if x.is_zero() {
            return Valuation::Infinite;
        }
        let p = BigInt::from(self.0);
        Valuation::Finite(int_valuation(x.numer(), &p) - int_valuation(x.denom(), &p))
    }

    /// `|x|_p` as a point of the norm lattice.
    pub fn norm(self, x: &Scalar) -> LogNorm {
        match self.valuation(x) {
            Valuation::Infinite => LogNorm::Bottom,
            Valuation::Finite(v) => LogNorm::Finite(int(-v)),
        }
    }

    /// `|x|_p · r^degree` with `r = p^s`.
    pub fn scaled_norm(self, x: &Scalar, degree: u64, radius: &Radius) -> LogNorm {
        match self.valuation(x) {
            Valuation::Infinite => LogNorm::Bottom,
            Valuation::Finite(v) => LogNorm::Finite(int(-v) + radius.exponent() * Scalar::from_integer(degree.into())),
        }
    }
}

impl Default for Prime {
    fn default() -> Self {
        Prime(2)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, _) => Ordering::Greater,
            (_, Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// An element of `p^Q ∪ {0}`, stored by its exponent.
///
/// Products of norms are sums of exponents. `Bottom` is the norm of zero,
/// absorbing for products and the least element of the order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LogNorm {
    Bottom,
    Finite(Scalar),
}

impl LogNorm {
    pub fn one() -> Self {
        LogNorm::Finite(Scalar::zero())
    }

    pub fn exponent(&self) -> Option<&Scalar> {
        match self {
            LogNorm::Bottom => None,
            LogNorm::Finite(e) => Some(e),
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, LogNorm::Bottom)
    }

    /// Multiplies by `p^shift`.
    pub fn shift(&self, shift: &Scalar) -> LogNorm {
        match self {
            LogNorm::Bottom => LogNorm::Bottom,
            LogNorm::Finite(e) => LogNorm::Finite(e + shift),
        }
    }

    /// Exponent as a string, `-inf` for bottom.
    pub fn exponent_string(&self) -> String {
        match self {
            LogNorm::Bottom => "-inf".to_string(),
            LogNorm::Finite(e) => e.to_string(),
        }
    }
}

// Norms multiply by adding exponents.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &LogNorm {
    type Output = LogNorm;

    fn mul(self, rhs: &LogNorm) -> LogNorm {
        match (self, rhs) {
            (LogNorm::Finite(a), LogNorm::Finite(b)) => LogNorm::Finite(a + b),
            _ => LogNorm::Bottom,
        }
    }
}

impl Mul for LogNorm {
    type Output = LogNorm;

    fn mul(self, rhs: LogNorm) -> LogNorm {
        &self * &rhs
    }
}

impl fmt::Display for LogNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p^{}", self.exponent_string())
    }
}

/// Radius `r = p^s` with `s > 0` rational, so `r > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radius(Scalar);

impl Radius {
    pub fn new(s: Scalar) -> Result<Self> {
        if !s.is_positive() {
            return Err(Error::InvalidRadius(s.to_string()));
        }
        Ok(Radius(s))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Radius::new(parse_scalar(text)?)
    }

    pub fn exponent(&self) -> &Scalar {
        &self.0
    }

    /// Log-norm of `r^k`.
    pub fn power(&self, k: u64) -> LogNorm {
        LogNorm::Finite(&self.0 * Scalar::from_integer(k.into()))
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Running maximum over norms; starts at `Bottom`.
pub fn max_norm<I: IntoIterator<Item = LogNorm>>(norms: I) -> LogNorm {
    norms.into_iter().fold(LogNorm::Bottom, |acc, n| acc.max(n))
}
