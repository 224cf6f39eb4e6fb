//! The standard complex `U(g) ⊗ Λ•g` with `∂ = ψ + φ`, the Koszul complex
//! `S(g) ⊗ Λ•g` with differential `φ`, their Gauss norms, and the
//! contracting homotopies `s̄`, `σ = f⁻¹ s̄ f` and `s`.
//!
//! A chain term is keyed by `(I, α)`: `I` a strictly increasing set of
//! exterior indices, `α` a PBW (or commutative) exponent vector.
//!
//! Sign conventions: `φ` and `ψ` follow the usual Chevalley–Eilenberg
//! formulas with 1-based positions `s < t` inside `I`. A wedge that gains an
//! index is re-sorted and picks up the parity of the insertion position. The
//! identification `S_{<n} ⊗ S_n ≅ S` appends the last variable's exterior
//! factor at the end of the wedge, and the tensor differential is
//! `φ(a)⊗b + (-1)^{deg a} a⊗φ(b)`; with it the product homotopy is
//! `s̄(λ⊗μ) = s̄(λ)⊗μ + ηε(λ)⊗s̄(μ)` with no extra sign.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{max_norm, LogNorm, Prime, Radius, Scalar};
use crate::uenv::{Monomial, UAlgebra, UElement};

/// Hard cap on the homotopy iteration.
pub const MAX_ITERATIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `U(g) ⊗ Λ•g`, noncommutative coefficients.
    Enveloping,
    /// `S(g) ⊗ Λ•g`, commutative coefficients.
    Symmetric,
}

/// Strictly increasing exterior index set, `x_{i_1} ∧ ... ∧ x_{i_q}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wedge(Vec<usize>);

impl Wedge {
    pub fn empty() -> Self {
        Wedge(Vec::new())
    }

    /// Sorts the indices, returning the sign of the sorting permutation,
    /// or `None` if an index repeats.
    pub fn from_indices(mut indices: Vec<usize>) -> Option<(Wedge, Scalar)> {
        let mut sign = Scalar::one();
        for i in 1..indices.len() {
            let mut j = i;
            while j > 0 && indices[j - 1] > indices[j] {
                indices.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Wedge(indices), sign))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    fn without_position(&self, s: usize) -> Wedge {
        let mut v = self.0.clone();
        v.remove(s);
        Wedge(v)
    }

    /// `x_k ∧ self` in canonical order with its sign; `None` if `k ∈ self`.
    pub fn insert_front(&self, k: usize) -> Option<(Wedge, bool)> {
        match self.0.binary_search(&k) {
            Ok(_) => None,
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, k);
                Some((Wedge(v), pos % 2 == 1))
            }
        }
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|i| format!("x{}", i + 1)).collect::<Vec<_>>().join("^")
    }
}

/// A graded element of `U(g) ⊗ Λ•g` or `S(g) ⊗ Λ•g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    side: Side,
    dim: usize,
    terms: BTreeMap<(Wedge, Monomial), Scalar>,
}

impl Chain {
    pub fn zero(side: Side, dim: usize) -> Self {
        Chain { side, dim, terms: BTreeMap::new() }
    }

    pub fn basis(side: Side, wedge: Wedge, alpha: Monomial) -> Self {
        Chain::term(side, wedge, alpha, Scalar::one())
    }

    pub fn term(side: Side, wedge: Wedge, alpha: Monomial, c: Scalar) -> Self {
        let mut ch = Chain::zero(side, alpha.dim());
        ch.add_term(wedge, alpha, c);
        ch
    }

    /// `η(c)`: the constant `c` in degree 0.
    pub fn unit(side: Side, dim: usize, c: Scalar) -> Self {
        Chain::term(side, Wedge::empty(), Monomial::one(dim), c)
    }

    /// `u ⊗ x_I`.
    pub fn from_element(side: Side, u: &UElement, wedge: &Wedge) -> Self {
        let mut ch = Chain::zero(side, u.dim());
        for (m, c) in u.terms() {
            ch.add_term(wedge.clone(), m.clone(), c.clone());
        }
        ch
    }

    pub fn side(&self) -> Side {
        self.side
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

    pub fn terms(&self) -> impl Iterator<Item = (&Wedge, &Monomial, &Scalar)> {
        self.terms.iter().map(|((w, m), c)| (w, m, c))
    }

    pub fn coefficient(&self, wedge: &Wedge, alpha: &Monomial) -> Scalar {
        self.terms.get(&(wedge.clone(), alpha.clone())).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, wedge: Wedge, alpha: Monomial, c: Scalar) {
        debug_assert_eq!(alpha.dim(), self.dim);
        if c.is_zero() {
            return;
        }
        let key = (wedge, alpha);
        let slot = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn same_shape(&self, other: &Chain) {
        assert_eq!(self.side, other.side, "chains on different sides");
        assert_eq!(self.dim, other.dim, "chains of different dimension");
    }

    pub fn add(&self, other: &Chain) -> Chain {
        self.same_shape(other);
        let mut out = self.clone();
        for (w, m, c) in other.terms() {
            out.add_term(w.clone(), m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Chain {
        let mut out = Chain::zero(self.side, self.dim);
        for (w, m, x) in self.terms() {
            out.add_term(w.clone(), m.clone(), x * c);
        }
        out
    }

    /// Largest `|α| + q` over the terms; the filtration weight the
    /// homotopy corrections strictly lower.
    pub fn weight(&self) -> Option<u64> {
        self.terms().map(|(w, m, _)| m.degree() + w.degree() as u64).max()
    }

    /// Homogeneous component of exterior degree `q`.
    pub fn component(&self, q: usize) -> Chain {
        let mut out = Chain::zero(self.side, self.dim);
        for (w, m, c) in self.terms().filter(|(w, _, _)| w.degree() == q) {
            out.add_term(w.clone(), m.clone(), c.clone());
        }
        out
    }

    /// Coefficient element `u_I` of `x_I`.
    pub fn coefficient_of(&self, wedge: &Wedge) -> UElement {
        UElement::from_terms(
            self.dim,
            self.terms().filter(|(w, _, _)| *w == wedge).map(|(_, m, c)| (m.clone(), c.clone())),
        )
    }

    /// `sup_q r^q sup_I ||u_I||_r`.
    pub fn chain_norm(&self, p: Prime, r: &Radius) -> LogNorm {
        max_norm(self.terms().map(|(w, m, c)| p.scaled_norm(c, m.degree() + w.degree() as u64, r)))
    }

    pub fn norm_profile(&self, p: Prime, r: &Radius) -> ChainNormProfile {
        let mut per_degree = vec![LogNorm::Bottom; self.dim + 1];
        for (w, m, c) in self.terms() {
            let n = p.scaled_norm(c, m.degree() + w.degree() as u64, r);
            let q = w.degree();
            if n > per_degree[q] {
                per_degree[q] = n;
            }
        }
        let total = max_norm(per_degree.iter().cloned());
        ChainNormProfile { per_degree, total }
    }

    /// `ε`: the constant term of a pure degree-0 chain.
    pub fn augmentation(&self) -> Result<Scalar> {
        if let Some((w, _, _)) = self.terms().find(|(w, _, _)| w.degree() > 0) {
            return Err(Error::NonZeroDegreeInput(w.degree()));
        }
        Ok(self.epsilon())
    }

    /// `ε` extended by zero to positive degrees.
    pub fn epsilon(&self) -> Scalar {
        self.coefficient(&Wedge::empty(), &Monomial::one(self.dim))
    }

    fn reflagged(&self, from: Side, to: Side) -> Result<Chain> {
        if self.side != from {
            return Err(Error::WrongSide);
        }
        Ok(Chain { side: to, dim: self.dim, terms: self.terms.clone() })
    }

    /// `f: U• → S•`, the identity on coefficient tables.
    pub fn pbw_iso(&self) -> Result<Chain> {
        self.reflagged(Side::Enveloping, Side::Symmetric)
    }

    pub fn pbw_iso_inv(&self) -> Result<Chain> {
        self.reflagged(Side::Symmetric, Side::Enveloping)
    }
}

impl fmt::Display for Chain {
    /// E.g. `x1*x2 ⊗ x1^x3 - 1/2 ⊗ 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut wedges: Vec<&Wedge> = self.terms.keys().map(|(w, _)| w).collect();
        wedges.dedup();
        wedges.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        for w in wedges {
            let u = self.coefficient_of(w);
            let body = u.to_string();
            let body = if u.len() > 1 { format!("({body})") } else { body };
            if first {
                write!(f, "{body} ⊗ {}", w.render())?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest} ⊗ {}", w.render())?;
            } else {
                write!(f, " + {body} ⊗ {}", w.render())?;
            }
        }
        Ok(())
    }
}

/// Per-degree and total chain norms at one radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainNormProfile {
    pub per_degree: Vec<LogNorm>,
    pub total: LogNorm,
}

/// The Koszul homotopy `s̄` on `S(g) ⊗ Λ•g`, built by splitting off the last
/// variable recursively.
pub fn koszul_homotopy(chain: &Chain) -> Result<Chain> {
    if chain.side != Side::Symmetric {
        return Err(Error::WrongSide);
    }
    let mut out = Chain::zero(Side::Symmetric, chain.dim);
    for (w, m, c) in chain.terms() {
        for (alpha, wedge, c2) in koszul_basis(m.exponents(), w.indices(), chain.dim) {
            out.add_term(Wedge(wedge), Monomial::new(alpha), c * c2);
        }
    }
    Ok(out)
}

/// `s̄` on the basis term `x^α ⊗ x_I` of the Koszul complex in the first
/// `n` variables (entries of `alpha` at positions `>= n` are zero there).
fn koszul_basis(alpha: &[u32], wedge: &[usize], n: usize) -> Vec<(Vec<u32>, Vec<usize>, Scalar)> {
    if n == 0 {
        return Vec::new();
    }
    let last = n - 1;
    let mu_power = alpha[last];
    let mu_in_wedge = wedge.last() == Some(&last);
    let mut lower_alpha = alpha.to_vec();
    lower_alpha[last] = 0;
    let lower_wedge = if mu_in_wedge { &wedge[..wedge.len() - 1] } else { wedge };

    // s̄_{<n}(λ) ⊗ μ
    let mut out: Vec<_> = koszul_basis(&lower_alpha, lower_wedge, last)
        .into_iter()
        .map(|(mut a, mut w, c)| {
            a[last] = mu_power;
            if mu_in_wedge {
                w.push(last);
            }
            (a, w, c)
        })
        .collect();

    // ηε(λ) ⊗ s̄_n(μ), where s̄_n(x^k) = x^{k-1} ⊗ x and s̄_n vanishes on 1
    // and in exterior degree 1
    let lambda_is_one = lower_wedge.is_empty() && lower_alpha.iter().all(|&a| a == 0);
    if lambda_is_one && !mu_in_wedge && mu_power >= 1 {
        let mut a = vec![0; alpha.len()];
        a[last] = mu_power - 1;
        out.push((a, vec![last], Scalar::one()));
    }
    out
}

/// `φ` on either side; on `Symmetric` the coefficient product is commutative.
pub fn phi_symmetric(chain: &Chain) -> Chain {
    assert_eq!(chain.side, Side::Symmetric);
    let mut out = Chain::zero(Side::Symmetric, chain.dim);
    for (w, m, c) in chain.terms() {
        for (s, &i) in w.indices().iter().enumerate() {
            let sign = if s % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(w.without_position(s), m.bumped(i), sign);
        }
    }
    out
}

/// One step of the homotopy iteration for `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub n: usize,
    /// `σ_(n)(λ)`.
    pub iterate: Chain,
    /// `(id - ηε - ∂σ_(n) - σ_(n)∂)(λ)`.
    pub defect: Chain,
}

impl TraceStep {
    pub fn defect_norm(&self, p: Prime, r: &Radius) -> LogNorm {
        self.defect.chain_norm(p, r)
    }
}

/// Chevalley–Eilenberg complex of a fixed algebra.
#[derive(Debug, Clone, Copy)]
pub struct StandardComplex<'a> {
    alg: &'a UAlgebra,
}

impl<'a> StandardComplex<'a> {
    pub fn new(alg: &'a UAlgebra) -> Self {
        StandardComplex { alg }
    }

    pub fn algebra(&self) -> &'a UAlgebra {
        self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `φ(u ⊗ x_{i_1}∧...∧x_{i_q}) = Σ_s (-1)^{s+1} u x_{i_s} ⊗ (…x̂_{i_s}…)`.
    pub fn phi(&self, chain: &Chain) -> Chain {
        if chain.side == Side::Symmetric {
            return phi_symmetric(chain);
        }
        let mut out = Chain::zero(Side::Enveloping, chain.dim);
        for (w, m, c) in chain.terms() {
            for (s, &i) in w.indices().iter().enumerate() {
                let sign = if s % 2 == 0 { c.clone() } else { -c.clone() };
                let rest = w.without_position(s);
                for (n, c2) in self.alg.monomial_times_generator(m, i).iter() {
                    out.add_term(rest.clone(), n.clone(), &sign * c2);
                }
            }
        }
        out
    }

    /// `ψ(u ⊗ x_{i_1}∧...∧x_{i_q}) = Σ_{s<t} (-1)^{s+t} u ⊗ [x_{i_s},x_{i_t}]∧(…)`;
    /// zero on the symmetric side.
    pub fn psi(&self, chain: &Chain) -> Chain {
        let mut out = Chain::zero(chain.side, chain.dim);
        if chain.side == Side::Symmetric {
            return out;
        }
        let lie = self.alg.lie();
        for (w, m, c) in chain.terms() {
            let idx = w.indices();
            for s in 0..idx.len() {
                for t in s + 1..idx.len() {
                    let bracket = lie.bracket(idx[s], idx[t]);
                    if bracket.is_empty() {
                        continue;
                    }
                    let mut rest = idx.to_vec();
                    rest.remove(t);
                    rest.remove(s);
                    let rest = Wedge(rest);
                    let positive = (s + t) % 2 == 0;
                    for (k, ck) in bracket {
                        let Some((wedge, odd)) = rest.insert_front(*k) else {
                            continue;
                        };
                        let mut coeff = c * ck;
                        if positive == odd {
                            coeff = -coeff;
                        }
                        out.add_term(wedge, m.clone(), coeff);
                    }
                }
            }
        }
        out
    }

    /// `∂ = ψ + φ`.
    pub fn differential(&self, chain: &Chain) -> Chain {
        self.psi(chain).add(&self.phi(chain))
    }

    /// `σ = f⁻¹ ∘ s̄ ∘ f`.
    pub fn sigma(&self, chain: &Chain) -> Result<Chain> {
        koszul_homotopy(&chain.pbw_iso()?)?.pbw_iso_inv()
    }

    /// `(id - ηε - ∂T - T∂)(λ)` given `T(λ)` and `T(∂λ)`.
    fn defect(&self, chain: &Chain, t_chain: &Chain, t_boundary: &Chain) -> Chain {
        let eta_eps = Chain::unit(chain.side, chain.dim, chain.epsilon());
        chain.sub(&eta_eps).sub(&self.differential(t_chain)).sub(t_boundary)
    }

    /// The iterates `σ_(0) = σ`, `σ_(n+1) = σ_(n) + σ ∘ (id - ηε - ∂σ_(n) - σ_(n)∂)`
    /// evaluated on `chain`, up to and including the first step whose
    /// defect vanishes.
    pub fn homotopy_iteration_trace(&self, chain: &Chain) -> Result<Vec<TraceStep>> {
        if chain.side != Side::Enveloping {
            return Err(Error::WrongSide);
        }
        let boundary = self.differential(chain);
        // T_n(λ) and T_n(∂λ); the latter only needs ∂λ since ∂∂λ = 0.
        let mut t_chain = self.sigma(chain)?;
        let mut t_boundary = self.sigma(&boundary)?;
        let mut trace = Vec::new();
        for n in 0..=MAX_ITERATIONS {
            let defect = self.defect(chain, &t_chain, &t_boundary);
            let done = defect.is_zero();
            trace.push(TraceStep { n, iterate: t_chain.clone(), defect: defect.clone() });
            if done {
                return Ok(trace);
            }
            let boundary_defect = self.defect(&boundary, &t_boundary, &Chain::zero(chain.side, chain.dim));
            t_chain = t_chain.add(&self.sigma(&defect)?);
            t_boundary = t_boundary.add(&self.sigma(&boundary_defect)?);
        }
        Err(Error::NonStationary(MAX_ITERATIONS))
    }

    /// The contracting homotopy `s`, the stationary value of the iteration.
    pub fn homotopy_s(&self, chain: &Chain) -> Result<Chain> {
        let trace = self.homotopy_iteration_trace(chain)?;
        Ok(trace.into_iter().last().expect("nonempty trace").iterate)
    }

    /// `s` as the perturbation series `σ Σ_k D^k` with
    /// `D = id - ηε - ∂σ - σ∂`, summed until `D^k(λ)` vanishes.
    pub fn homotopy_series(&self, chain: &Chain) -> Result<Chain> {
        if chain.side != Side::Enveloping {
            return Err(Error::WrongSide);
        }
        let mut acc = Chain::zero(chain.side, chain.dim);
        let mut power = chain.clone();
        for _ in 0..=MAX_ITERATIONS {
            if power.is_zero() {
                return Ok(acc);
            }
            let sp = self.sigma(&power)?;
            acc = acc.add(&sp);
            let sdp = self.sigma(&self.differential(&power))?;
            power = self.defect(&power, &sp, &sdp);
        }
        Err(Error::NonStationary(MAX_ITERATIONS))
    }

    /// `∂h + h∂ - (id - ηε)` applied to `chain`, for any degree-raising map `h`.
    pub fn contract_residual<F>(&self, chain: &Chain, h: F) -> Result<Chain>
    where
        F: Fn(&Chain) -> Result<Chain>,
    {
        let hd = h(&self.differential(chain))?;
        let dh = self.differential(&h(chain)?);
        let eta_eps = Chain::unit(chain.side, chain.dim, chain.epsilon());
        Ok(dh.add(&hd).sub(&chain.sub(&eta_eps)))
    }
}

/// Every basis term `1·x^α ⊗ x_I` with `|α| ≤ max_degree`, on the given side.
pub fn basis_chains(side: Side, dim: usize, max_degree: u32) -> Vec<Chain> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << dim) {
        let wedge = Wedge((0..dim).filter(|i| mask >> i & 1 == 1).collect());
        for alpha in monomials_up_to(dim, max_degree) {
            out.push(Chain::basis(side, wedge.clone(), alpha));
        }
    }
    out
}

/// All exponent vectors in `dim` variables of total degree `≤ max_degree`.
pub fn monomials_up_to(dim: usize, max_degree: u32) -> Vec<Monomial> {
    (0..=max_degree).flat_map(|k| monomials_of_degree(dim, k)).collect()
}

pub fn monomials_of_degree(dim: usize, degree: u32) -> Vec<Monomial> {
    fn go(dim: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == dim {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=left).rev() {
            prefix.push(a);
            go(dim, left - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if dim == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    go(dim, degree, &mut Vec::with_capacity(dim), &mut out);
    out
}
