//! Convergence of coefficient streams `Σ d_α X^α` against the family of
//! Gauss norms `||·||_r`, `r = p^s > 1`, for valuation laws quadratic in
//! the total degree, plus finite truncations of such streams.
//!
//! Only the `||·||_r` family is consulted. A `RadiiBelow` verdict means the
//! series converges for a bounded range of radii; it says nothing about
//! membership in the Arens–Michael envelope, which involves further
//! seminorms when `g` is not abelian.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::complex::monomials_up_to;
use crate::scalar::{prime_power, LogNorm, Prime, Radius, Scalar};
use crate::uenv::UElement;

/// Coefficients with `v_p(d_α) = ⌈a|α|² + b|α| + c⌉`, each `d_α` a signed
/// power of `p` (sign `+`, unit part 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientStream {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub dim: usize,
}

impl CoefficientStream {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, dim: usize) -> Self {
        CoefficientStream { a, b, c, dim }
    }

    /// The exact valuation law `v(n)`.
    pub fn law(&self, n: u64) -> Scalar {
        let n = Scalar::from_integer(BigInt::from(n));
        &self.a * &n * &n + &self.b * &n + &self.c
    }

    /// `⌈v(n)⌉`, the valuation actually carried by the coefficients.
    pub fn valuation(&self, n: u64) -> i64 {
        self.law(n).ceil().to_integer().to_i64().expect("valuation fits in i64")
    }

    pub fn coefficient(&self, p: Prime, n: u64) -> Scalar {
        prime_power(&p, self.valuation(n))
    }

    /// Log-norm of one degree-`n` term at radius `r`.
    pub fn term_norm(&self, n: u64, r: &Radius) -> LogNorm {
        LogNorm::Finite(
            Scalar::from_integer((-self.valuation(n)).into()) + r.exponent() * Scalar::from_integer(n.into()),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvergenceVerdict {
    /// Term norms tend to zero for every `s > 0`.
    AllRadii,
    /// Convergent exactly for `0 < s < bound`.
    RadiiBelow(Scalar),
    /// Convergent for no `s > 0`.
    Divergent,
}

impl ConvergenceVerdict {
    /// Whether the verdict predicts convergence at radius `p^s`.
    pub fn converges_at(&self, r: &Radius) -> bool {
        match self {
            ConvergenceVerdict::AllRadii => true,
            ConvergenceVerdict::RadiiBelow(bound) => r.exponent() < bound,
            ConvergenceVerdict::Divergent => false,
        }
    }

    /// Witness description for reports.
    pub fn witness(&self, stream: &CoefficientStream) -> String {
        match self {
            ConvergenceVerdict::AllRadii => {
                format!("term exponent s*N - v(N) has leading coefficient -{} < 0 in N^2", stream.a)
            }
            ConvergenceVerdict::RadiiBelow(bound) => {
                format!("term exponent (s - {bound})*N - {}: decays iff s < {bound}", stream.c)
            }
            ConvergenceVerdict::Divergent => {
                "term exponent s*N - v(N) is unbounded above for every s > 0 (all multi-indices of each degree)"
                    .to_string()
            }
        }
    }
}

impl fmt::Display for ConvergenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvergenceVerdict::AllRadii => write!(f, "AllRadii"),
            ConvergenceVerdict::RadiiBelow(b) => write!(f, "RadiiBelow({b})"),
            ConvergenceVerdict::Divergent => write!(f, "Divergent"),
        }
    }
}

/// Convergence means `v(n) - s·n → +∞`; for a quadratic law that is
/// `a > 0`, or `a = 0` and `s < b`.
pub fn classify(stream: &CoefficientStream) -> ConvergenceVerdict {
    if stream.dim == 0 {
        // only the constant term exists
        return ConvergenceVerdict::AllRadii;
    }
    if stream.a.is_positive() {
        ConvergenceVerdict::AllRadii
    } else if stream.a.is_zero() && stream.b.is_positive() {
        ConvergenceVerdict::RadiiBelow(stream.b.clone())
    } else {
        ConvergenceVerdict::Divergent
    }
}

/// All terms of degree `≤ max_degree`.
pub fn truncate(stream: &CoefficientStream, p: Prime, max_degree: u32) -> UElement {
    UElement::from_terms(
        stream.dim,
        monomials_up_to(stream.dim, max_degree).into_iter().map(|m| {
            let c = stream.coefficient(p, m.degree());
            (m, c)
        }),
    )
}

/// `(N, max_{|α|=N} |d_α| r^N)` for `N ≤ max_degree`.
pub fn tail_norm_profile(stream: &CoefficientStream, r: &Radius, max_degree: u64) -> Vec<(u64, LogNorm)> {
    (0..=max_degree)
        .map(|n| {
            let norm = if stream.dim == 0 && n > 0 { LogNorm::Bottom } else { stream.term_norm(n, r) };
            (n, norm)
        })
        .collect()
}

pub fn profile_csv(profile: &[(u64, LogNorm)]) -> String {
    let mut out = String::from("N,exponent\n");
    for (n, norm) in profile {
        out.push_str(&format!("{n},{}\n", norm.exponent_string()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::uenv::Monomial;

    fn stream(a: i64, b: i64, c: i64, dim: usize) -> CoefficientStream {
        CoefficientStream::new(int(a), int(b), int(c), dim)
    }

    #[test]
    fn canonical_verdicts() {
        assert_eq!(classify(&stream(1, 0, 0, 2)), ConvergenceVerdict::AllRadii);
        assert_eq!(classify(&stream(0, 2, 0, 2)), ConvergenceVerdict::RadiiBelow(int(2)));
        assert_eq!(classify(&stream(0, 0, 0, 2)), ConvergenceVerdict::Divergent);
        assert_eq!(classify(&stream(-1, 5, 0, 2)), ConvergenceVerdict::Divergent);
        assert_eq!(classify(&stream(0, -1, 0, 2)), ConvergenceVerdict::Divergent);
    }

    #[test]
    fn constant_shift_never_matters() {
        for c in [-3, 0, 7] {
            assert_eq!(classify(&stream(0, 2, c, 1)), ConvergenceVerdict::RadiiBelow(int(2)));
        }
    }

    #[test]
    fn truncation_examples() {
        let p = Prime::new(3).unwrap();
        let s = CoefficientStream::new(int(1), int(0), ratio(1, 2), 1);
        assert_eq!(truncate(&s, p, 0), UElement::constant(1, prime_power(&p, 1)));
        let t = truncate(&s, p, 2);
        assert_eq!(t.len(), 3);
        for (n, k) in [(0u32, 1i64), (1, 2), (2, 5)] {
            assert_eq!(t.coefficient(&Monomial::new(vec![n])), prime_power(&p, k));
        }
        assert_eq!(truncate(&stream(0, 0, 0, 3), p, 2).len(), 10);
    }

    #[test]
    fn profiles() {
        let r3 = Radius::parse("3").unwrap();
        let below = tail_norm_profile(&stream(0, 2, 0, 2), &r3, 5);
        assert!(below.windows(2).all(|w| w[0].1 < w[1].1));
        let all = tail_norm_profile(&stream(1, 0, 0, 2), &Radius::parse("1").unwrap(), 6);
        assert!(all[1..].windows(2).all(|w| w[0].1 > w[1].1));
        let flat = tail_norm_profile(&stream(0, 0, 0, 2), &Radius::parse("1/2").unwrap(), 4);
        assert_eq!(flat[4].1, LogNorm::Finite(int(2)));
        assert_eq!(profile_csv(&flat[..2]), "N,exponent\n0,0\n1,1/2\n");
    }
}
