//! Arithmetic in `U(g)` in the PBW basis `x_1^{a_1}···x_d^{a_d}`.
//!
//! Products are rewritten into PBW form with `x_j x_i = x_i x_j + [x_j, x_i]`
//! for `j > i`. Right multiplication of a PBW monomial by one generator is
//! memoized per algebra; every other product is assembled from it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::scalar::{max_norm, LogNorm, Prime, Radius, Scalar};

/// Exponent vector of a PBW monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        let mut m = Monomial::one(dim);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Largest index with a positive exponent.
    pub fn last_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&a| a > 0)
    }

    pub fn first_index(&self) -> Option<usize> {
        self.0.iter().position(|&a| a > 0)
    }

    pub fn bumped(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    pub fn lowered(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] -= 1;
        m
    }

    /// Commutative product (exponent addition).
    pub fn commutative_mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The ordered word `1^{a_1} 2^{a_2} ...` of generator indices.
    pub fn word(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize)).collect()
    }

    pub fn render(&self) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

/// A finite linear combination of PBW monomials; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UElement {
    dim: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl UElement {
    pub fn zero(dim: usize) -> Self {
        UElement { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        UElement::constant(dim, Scalar::one())
    }

    pub fn constant(dim: usize, c: Scalar) -> Self {
        UElement::term(Monomial::one(dim), c)
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        UElement::term(Monomial::generator(dim, i), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut u = UElement::zero(m.dim());
        u.add_term(m, c);
        u
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(dim: usize, terms: I) -> Self {
        let mut u = UElement::zero(dim);
        for (m, c) in terms {
            assert_eq!(m.dim(), dim, "monomial of the wrong dimension");
            u.add_term(m, c);
        }
        u
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_dim(&self, other: &UElement) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn add(&self, other: &UElement) -> Result<UElement> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &UElement) -> Result<UElement> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> UElement {
        if c.is_zero() {
            return UElement::zero(self.dim);
        }
        UElement { dim: self.dim, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Constant term; the counit of the Hopf structure.
    pub fn counit(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.dim))
    }

    /// `sup_α |d_α| r^{|α|}`.
    pub fn gauss_norm(&self, p: Prime, r: &Radius) -> LogNorm {
        max_norm(self.terms().map(|(m, c)| p.scaled_norm(c, m.degree(), r)))
    }

    /// Terms attaining the Gauss norm at radius `r`.
    pub fn principal_part(&self, p: Prime, r: &Radius) -> Result<PrincipalPart> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let level = self.gauss_norm(p, r);
        let leading = UElement::from_terms(
            self.dim,
            self.terms().filter(|(m, c)| p.scaled_norm(c, m.degree(), r) == level).map(|(m, c)| (m.clone(), c.clone())),
        );
        Ok(PrincipalPart { level, leading })
    }

    /// Restriction to the terms whose scaled norm equals `level`.
    pub fn part_at_level(&self, p: Prime, r: &Radius, level: &LogNorm) -> UElement {
        UElement::from_terms(
            self.dim,
            self.terms()
                .filter(|(m, c)| &p.scaled_norm(c, m.degree(), r) == level)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Terms in graded-descending order, as used for rendering.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        terms
    }
}

impl fmt::Display for UElement {
    /// Renders as e.g. `3/4*x1^2*x3 - x2 + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.render())?;
            } else {
                write!(f, "{mag}*{}", m.render())?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalPart {
    pub level: LogNorm,
    pub leading: UElement,
}

/// Which adjacent inversion the word-rewriting oracle resolves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteOrder {
    LeftmostFirst,
    RightmostFirst,
}

pub type TermList = Arc<Vec<(Monomial, Scalar)>>;

/// `U(g)` for a fixed Lie algebra, with its multiplication cache.
pub struct UAlgebra {
    lie: LieAlgebra,
    memo: Mutex<HashMap<(Monomial, usize), TermList>>,
    doubled: OnceLock<Box<UAlgebra>>,
}

impl fmt::Debug for UAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UAlgebra").field("lie", &self.lie).finish_non_exhaustive()
    }
}

impl UAlgebra {
    pub fn new(lie: LieAlgebra) -> Self {
        UAlgebra { lie, memo: Mutex::new(HashMap::new()), doubled: OnceLock::new() }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn one(&self) -> UElement {
        UElement::one(self.dim())
    }

    pub fn generator(&self, i: usize) -> UElement {
        UElement::generator(self.dim(), i)
    }

    /// `U(g ⊕ g) ≅ U(g) ⊗ U(g)`: first copy `x_1..x_d`, second `x_{d+1}..x_{2d}`.
    pub fn doubled(&self) -> &UAlgebra {
        self.doubled.get_or_init(|| Box::new(UAlgebra::new(self.lie.direct_sum(&self.lie))))
    }

    /// `X^α · x_j` in PBW form.
    pub fn monomial_times_generator(&self, alpha: &Monomial, j: usize) -> TermList {
        let last = match alpha.last_index() {
            Some(m) if m > j => m,
            _ => return Arc::new(vec![(alpha.bumped(j), Scalar::one())]),
        };
        let key = (alpha.clone(), j);
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&key).cloned() {
            return hit;
        }
        // X^α x_j = X^β x_m x_j = (X^β x_j) x_m + X^β [x_m, x_j]
        let beta = alpha.lowered(last);
        let mut acc = UElement::zero(alpha.dim());
        for (gamma, c) in self.monomial_times_generator(&beta, j).iter() {
            for (delta, c2) in self.monomial_times_generator(gamma, last).iter() {
                acc.add_term(delta.clone(), c * c2);
            }
        }
        for (k, ck) in self.lie.bracket(last, j) {
            for (delta, c2) in self.monomial_times_generator(&beta, *k).iter() {
                acc.add_term(delta.clone(), ck * c2);
            }
        }
        let out: TermList = Arc::new(acc.terms.into_iter().collect());
        self.memo.lock().expect("memo poisoned").insert(key, out.clone());
        out
    }

    /// `u · x_j`.
    pub fn mul_generator(&self, u: &UElement, j: usize) -> UElement {
        let mut out = UElement::zero(u.dim);
        for (m, c) in u.terms() {
            for (n, c2) in self.monomial_times_generator(m, j).iter() {
                out.add_term(n.clone(), c * c2);
            }
        }
        out
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> UElement {
        let mut u = UElement::term(a.clone(), Scalar::one());
        for j in b.word() {
            u = self.mul_generator(&u, j);
        }
        u
    }

    /// Product in `U(g)`, normal ordered.
    pub fn mul(&self, u: &UElement, v: &UElement) -> Result<UElement> {
        for w in [u, v] {
            if w.dim != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: w.dim });
            }
        }
        let mut out = UElement::zero(self.dim());
        for (b, cb) in v.terms() {
            let word = b.word();
            let mut partial = u.clone();
            for &j in &word {
                partial = self.mul_generator(&partial, j);
            }
            for (m, c) in partial.terms {
                out.add_term(m, c * cb);
            }
        }
        Ok(out)
    }

    /// `x_i u - u x_i`.
    pub fn adjoint_action(&self, i: usize, u: &UElement) -> Result<UElement> {
        let x = self.generator(i);
        self.mul(&x, u)?.sub(&self.mul(u, &x)?)
    }

    /// Anti-automorphism with `S(x_i) = -x_i`.
    pub fn antipode(&self, u: &UElement) -> UElement {
        let mut out = UElement::zero(u.dim);
        for (m, c) in u.terms() {
            let mut reversed = self.one();
            for (i, &a) in m.exponents().iter().enumerate().rev() {
                for _ in 0..a {
                    reversed = self.mul_generator(&reversed, i);
                }
            }
            let sign = if m.degree() % 2 == 0 { c.clone() } else { -c.clone() };
            for (n, c2) in reversed.terms {
                out.add_term(n, c2 * &sign);
            }
        }
        out
    }

    /// Algebra morphism `U(g) → U(g ⊕ g)` with `Δ(x_i) = x_i ⊗ 1 + 1 ⊗ x_i`.
    pub fn comultiply(&self, u: &UElement) -> UElement {
        let d = self.dim();
        let big = self.doubled();
        let mut out = UElement::zero(2 * d);
        for (m, c) in u.terms() {
            let mut image = big.one();
            for i in m.word() {
                let a = big.mul_generator(&image, i);
                let b = big.mul_generator(&image, d + i);
                image = a.add(&b).expect("same dimension");
            }
            for (n, c2) in image.terms {
                out.add_term(n, c2 * c);
            }
        }
        out
    }

    /// Splits a `U(g ⊕ g)` monomial into its two tensor factors.
    pub fn split_doubled(&self, m: &Monomial) -> (Monomial, Monomial) {
        let d = self.dim();
        (Monomial::new(m.exponents()[..d].to_vec()), Monomial::new(m.exponents()[d..].to_vec()))
    }

    /// `((ε ⊗ id)(w), (id ⊗ ε)(w))` for an element `w` of `U(g ⊕ g)`.
    pub fn counit_projections(&self, w: &UElement) -> (UElement, UElement) {
        let d = self.dim();
        let mut counit_first = UElement::zero(d);
        let mut counit_second = UElement::zero(d);
        for (m, c) in w.terms() {
            let (a, b) = self.split_doubled(m);
            if a.is_one() {
                counit_first.add_term(b.clone(), c.clone());
            }
            if b.is_one() {
                counit_second.add_term(a, c.clone());
            }
        }
        (counit_first, counit_second)
    }

    /// `mul ∘ (S ⊗ id)` applied to an element of `U(g ⊕ g)`.
    pub fn antipode_then_multiply(&self, w: &UElement) -> UElement {
        let mut out = UElement::zero(self.dim());
        for (m, c) in w.terms() {
            let (a, b) = self.split_doubled(m);
            let sa = self.antipode(&UElement::term(a, c.clone()));
            let prod = self.mul(&sa, &UElement::term(b, Scalar::one())).expect("same dimension");
            out = out.add(&prod).expect("same dimension");
        }
        out
    }

    /// `mul ∘ (id ⊗ S)` applied to an element of `U(g ⊕ g)`.
    pub fn multiply_then_antipode(&self, w: &UElement) -> UElement {
        let mut out = UElement::zero(self.dim());
        for (m, c) in w.terms() {
            let (a, b) = self.split_doubled(m);
            let sb = self.antipode(&UElement::term(b, Scalar::one()));
            let prod = self.mul(&UElement::term(a, c.clone()), &sb).expect("same dimension");
            out = out.add(&prod).expect("same dimension");
        }
        out
    }

    /// Normal-orders an arbitrary word of generators by resolving adjacent
    /// inversions one at a time in the given order. Independent of the
    /// memoized multiplication; used to cross-check it.
    pub fn normal_order_word(&self, word: &[usize], order: RewriteOrder) -> UElement {
        let d = self.dim();
        let mut pending: BTreeMap<(usize, Vec<usize>), Scalar> = BTreeMap::new();
        pending.insert((word.len(), word.to_vec()), Scalar::one());
        let mut out = UElement::zero(d);
        while let Some(((_, w), c)) = pending.pop_last() {
            let mut inversions = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
            let pos = match order {
                RewriteOrder::LeftmostFirst => inversions.next(),
                RewriteOrder::RightmostFirst => inversions.next_back(),
            };
            let Some(i) = pos else {
                let mut exps = vec![0u32; d];
                for &g in &w {
                    exps[g] += 1;
                }
                out.add_term(Monomial::new(exps), c);
                continue;
            };
            let (a, b) = (w[i], w[i + 1]);
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            push_word(&mut pending, swapped, c.clone());
            for (k, ck) in self.lie.bracket(a, b) {
                let mut shorter = Vec::with_capacity(w.len() - 1);
                shorter.extend_from_slice(&w[..i]);
                shorter.push(*k);
                shorter.extend_from_slice(&w[i + 2..]);
                push_word(&mut pending, shorter, &c * ck);
            }
        }
        out
    }
}

fn push_word(pending: &mut BTreeMap<(usize, Vec<usize>), Scalar>, w: Vec<usize>, c: Scalar) {
    let key = (w.len(), w);
    let slot = pending.entry(key.clone()).or_insert_with(Scalar::zero);
    *slot += c;
    if slot.is_zero() {
        pending.remove(&key);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn elem(dim: usize, terms: &[(&[u32], i64)]) -> UElement {
        UElement::from_terms(dim, terms.iter().map(|(e, c)| (mono(e), int(*c))))
    }

    fn r(s: &str) -> Radius {
        Radius::parse(s).unwrap()
    }

    #[test]
    fn addition_and_scaling() {
        let x1 = UElement::generator(2, 0);
        let x2 = UElement::generator(2, 1);
        assert_eq!(x1.add(&UElement::zero(2)).unwrap(), x1);
        assert!(x1.add(&x1.scale(&int(-1))).unwrap().is_zero());
        let s = x1.add(&x2).unwrap().scale(&int(2));
        assert_eq!(s, elem(2, &[(&[1, 0], 2), (&[0, 1], 2)]));
        assert!(x1.add(&UElement::zero(3)).is_err());
    }

    #[test]
    fn heisenberg_products() {
        let u = UAlgebra::new(LieAlgebra::heisenberg());
        let (x, y) = (u.generator(0), u.generator(1));
        assert_eq!(u.mul(&x, &y).unwrap(), elem(3, &[(&[1, 1, 0], 1)]));
        assert_eq!(u.mul(&y, &x).unwrap(), elem(3, &[(&[1, 1, 0], 1), (&[0, 0, 1], -1)]));
        assert_eq!(u.mul(&y, &x).unwrap().to_string(), "x1*x2 - x3");
    }

    #[test]
    fn sl2_product() {
        let u = UAlgebra::new(LieAlgebra::sl2());
        let (e, h) = (u.generator(0), u.generator(1));
        assert_eq!(u.mul(&h, &e).unwrap(), elem(3, &[(&[1, 1, 0], 1), (&[1, 0, 0], 2)]));
        assert!(u.mul(&h, &UElement::one(2)).is_err());
    }

    #[test]
    fn gauss_norm_examples() {
        let p = Prime::new(2).unwrap();
        assert_eq!(elem(2, &[(&[2, 1], 1)]).gauss_norm(p, &r("1")), LogNorm::Finite(int(3)));
        assert_eq!(UElement::zero(3).gauss_norm(p, &r("1")), LogNorm::Bottom);
        let yx = elem(3, &[(&[1, 1, 0], 1), (&[0, 0, 1], -1)]);
        assert_eq!(yx.gauss_norm(p, &r("1")), LogNorm::Finite(int(2)));
    }

    #[test]
    fn principal_parts() {
        let p = Prime::new(2).unwrap();
        let yx = elem(3, &[(&[1, 1, 0], 1), (&[0, 0, 1], -1)]);
        let pp = yx.principal_part(p, &r("1")).unwrap();
        assert_eq!(pp.level, LogNorm::Finite(int(2)));
        assert_eq!(pp.leading, elem(3, &[(&[1, 1, 0], 1)]));

        let single = elem(3, &[(&[0, 2, 1], 5)]);
        assert_eq!(single.principal_part(p, &r("1/2")).unwrap().leading, single);

        // x1 + 2 x1^2 at p = 2, s = 1: term norms 0+1 and -1+2 tie at 1
        let tie = elem(1, &[(&[1], 1), (&[2], 2)]);
        let pp = tie.principal_part(p, &r("1")).unwrap();
        assert_eq!(pp.level, LogNorm::Finite(int(1)));
        assert_eq!(pp.leading, tie);

        assert_eq!(UElement::zero(1).principal_part(p, &r("1")), Err(Error::ZeroElement));
    }

    #[test]
    fn comultiplication_examples() {
        let u = UAlgebra::new(LieAlgebra::heisenberg());
        assert_eq!(u.comultiply(&u.generator(1)), elem(6, &[(&[0, 1, 0, 0, 0, 0], 1), (&[0, 0, 0, 0, 1, 0], 1)]));
        assert_eq!(u.comultiply(&u.one()), UElement::one(6));

        let a = UAlgebra::new(LieAlgebra::abelian(1));
        let sq = elem(1, &[(&[2], 1)]);
        assert_eq!(a.comultiply(&sq), elem(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
    }

    #[test]
    fn antipode_examples() {
        let h = UAlgebra::new(LieAlgebra::heisenberg());
        assert_eq!(h.antipode(&h.generator(2)), elem(3, &[(&[0, 0, 1], -1)]));
        let xy = elem(3, &[(&[1, 1, 0], 1)]);
        assert_eq!(h.antipode(&xy), elem(3, &[(&[1, 1, 0], 1), (&[0, 0, 1], -1)]));

        let a = UAlgebra::new(LieAlgebra::abelian(3));
        let m = elem(3, &[(&[2, 1, 0], 3), (&[0, 1, 1], 1)]);
        assert_eq!(a.antipode(&m), elem(3, &[(&[2, 1, 0], -3), (&[0, 1, 1], 1)]));
    }

    #[test]
    fn counit_examples() {
        assert_eq!(UElement::one(3).counit(), int(1));
        assert_eq!(UElement::generator(3, 1).counit(), int(0));
        let u = elem(3, &[(&[0, 0, 0], 3), (&[1, 1, 0], 1), (&[0, 0, 1], -1)]);
        assert_eq!(u.counit(), int(3));
    }

    #[test]
    fn adjoint_action_examples() {
        let h = UAlgebra::new(LieAlgebra::heisenberg());
        assert_eq!(h.adjoint_action(0, &h.generator(1)).unwrap(), h.generator(2));
        assert!(h.adjoint_action(1, &h.one()).unwrap().is_zero());
        let s = UAlgebra::new(LieAlgebra::sl2());
        assert_eq!(s.adjoint_action(1, &s.generator(0)).unwrap(), s.generator(0).scale(&int(2)));
    }

    #[test]
    fn word_rewriting_matches_memoized_product() {
        let s = UAlgebra::new(LieAlgebra::sl2());
        let word = [2, 2, 1, 0, 0, 1];
        let left = s.normal_order_word(&word, RewriteOrder::LeftmostFirst);
        let right = s.normal_order_word(&word, RewriteOrder::RightmostFirst);
        let direct = word.iter().fold(s.one(), |acc, &g| s.mul_generator(&acc, g));
        assert_eq!(left, right);
        assert_eq!(left, direct);
    }

    #[test]
    fn rendering() {
        let u = UElement::from_terms(
            3,
            vec![(mono(&[2, 0, 1]), ratio(3, 4)), (mono(&[0, 0, 0]), ratio(-1, 2)), (mono(&[0, 1, 0]), int(-1))],
        );
        assert_eq!(u.to_string(), "3/4*x1^2*x3 - x2 - 1/2");
        assert_eq!(UElement::zero(2).to_string(), "0");
        assert_eq!(UElement::constant(1, int(-3)).to_string(), "-3");
    }
}
