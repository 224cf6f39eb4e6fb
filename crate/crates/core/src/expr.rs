//! Parser for elements written in PBW form, e.g. `3/4*x1^2*x3 - 1/2`.
//!
//! Generators inside one term must appear in non-decreasing index order;
//! products of arbitrary elements go through [`crate::uenv::UAlgebra::mul`].

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};
use crate::uenv::{Monomial, UElement};

pub fn parse_element(text: &str, dim: usize) -> Result<UElement> {
    let src: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if src.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut out = UElement::zero(dim);
    for (negative, term) in split_terms(&src)? {
        let (m, mut c) = parse_term(term, dim)?;
        if negative {
            c = -c;
        }
        out.add_term(m, c);
    }
    Ok(out)
}

fn split_terms(src: &str) -> Result<Vec<(bool, &str)>> {
    let mut terms = Vec::new();
    let mut negative = false;
    let mut start = 0;
    let bytes = src.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > 0 && bytes[i - 1] != b'^' {
            terms.push((negative, &src[start..i]));
            negative = b == b'-';
            start = i + 1;
        } else if i == 0 && (b == b'+' || b == b'-') {
            negative = b == b'-';
            start = 1;
        }
    }
    terms.push((negative, &src[start..]));
    if terms.iter().any(|(_, t)| t.is_empty()) {
        return Err(Error::Parse(format!("dangling sign in {src:?}")));
    }
    Ok(terms)
}

fn parse_term(term: &str, dim: usize) -> Result<(Monomial, Scalar)> {
    let mut coeff = Scalar::one();
    let mut exps = vec![0u32; dim];
    let mut last: Option<usize> = None;
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {term:?}")));
        }
        let Some(rest) = factor.strip_prefix('x') else {
            coeff *= parse_scalar(factor)?;
            continue;
        };
        let (idx, pow) = match rest.split_once('^') {
            Some((i, k)) => (i, k.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
            None => (rest, 1),
        };
        let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad generator {factor:?}")))?;
        if idx == 0 || idx > dim {
            return Err(Error::Parse(format!("generator x{idx} out of range 1..={dim}")));
        }
        let i = idx - 1;
        if last.is_some_and(|l| l > i) {
            return Err(Error::Parse(format!(
                "term {term:?} is not in PBW order; multiply out-of-order factors with `u mul`"
            )));
        }
        last = Some(i);
        exps[i] += pow;
    }
    if coeff.is_zero() {
        return Ok((Monomial::one(dim), coeff));
    }
    Ok((Monomial::new(exps), coeff))
}
