//! Lie algebra cohomology and homology of finite-dimensional modules from
//! the Chevalley–Eilenberg (co)chain complexes, with exact ranks.
//!
//! `Ext_U(M, N)` is computed as `H*(g, Hom(M, N))` and `Tor^U(M, N)` as
//! `H_*(g, M ⊗ N)`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{GModule, LieAlgebra};
use crate::linalg::{echelon_basis, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cohomology,
    Homology,
}

/// Dimensions of (co)homology in degrees `0..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub kind: Kind,
    pub betti: Vec<usize>,
}

impl BettiTable {
    pub fn euler_characteristic(&self) -> i64 {
        self.betti.iter().enumerate().map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,betti\n");
        for (q, b) in self.betti.iter().enumerate() {
            out.push_str(&format!("{q},{b}\n"));
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.betti.iter().map(ToString::to_string).collect();
        write!(f, "{}", cells.join(","))
    }
}

/// Cohomology with a basis of cocycles in each degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyResult {
    pub table: BettiTable,
    /// Degree `q`: echelon basis of `ker d_q ⊂ Hom(Λ^q g, M)`.
    pub cocycles: Vec<Vec<Vec<Scalar>>>,
}

/// The `q`-subsets of `{0..d-1}` in lexicographic order.
pub fn subsets(d: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            go(i + 1, d, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if q <= d {
        go(0, d, q, &mut Vec::new(), &mut out);
    }
    out
}

fn subset_index(sets: &[Vec<usize>], s: &[usize]) -> usize {
    sets.binary_search_by(|x| x.as_slice().cmp(s)).expect("subset present")
}

/// Sorted insertion of `k` into `rest`, with the sign of moving it from
/// the front; `None` if `k` is already present.
fn wedge_front(rest: &[usize], k: usize) -> Option<(Vec<usize>, bool)> {
    match rest.binary_search(&k) {
        Ok(_) => None,
        Err(pos) => {
            let mut v = rest.to_vec();
            v.insert(pos, k);
            Some((v, pos % 2 == 1))
        }
    }
}

fn check_module(g: &LieAlgebra, m: &GModule) -> Result<()> {
    if m.generators() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: m.generators() });
    }
    Ok(())
}

/// `d_q: Hom(Λ^q g, M) → Hom(Λ^{q+1} g, M)`,
/// `(dc)(x_0,…,x_q) = Σ_s (-1)^s x_s·c(…x̂_s…) + Σ_{s<t} (-1)^{s+t} c([x_s,x_t],…x̂_s…x̂_t…)`.
///
/// Coordinates: basis vector `(I, e_j)` at `index(I)·m + j`, subsets in
/// lexicographic order.
pub fn cochain_differential(g: &LieAlgebra, module: &GModule, q: usize) -> Result<Matrix> {
    check_module(g, module)?;
    let (d, m) = (g.dim(), module.dim());
    let src = subsets(d, q);
    let tgt = subsets(d, q + 1);
    let mut out = Matrix::zeros(tgt.len() * m, src.len() * m);
    for (row_set, big) in tgt.iter().enumerate() {
        for s in 0..big.len() {
            let mut small = big.clone();
            let xs = small.remove(s);
            let col_set = subset_index(&src, &small);
            let rho = module.action(xs);
            for a in 0..m {
                for b in 0..m {
                    let v = &rho[(a, b)];
                    if v.is_zero() {
                        continue;
                    }
                    let cell = &mut out[(row_set * m + a, col_set * m + b)];
                    if s % 2 == 0 {
                        *cell += v;
                    } else {
                        *cell -= v;
                    }
                }
            }
        }
        for s in 0..big.len() {
            for t in s + 1..big.len() {
                let mut rest = big.clone();
                rest.remove(t);
                rest.remove(s);
                for (k, c) in g.bracket(big[s], big[t]) {
                    let Some((set, odd)) = wedge_front(&rest, *k) else {
                        continue;
                    };
                    let col_set = subset_index(&src, &set);
                    let negative = ((s + t) % 2 == 1) != odd;
                    for j in 0..m {
                        let cell = &mut out[(row_set * m + j, col_set * m + j)];
                        if negative {
                            *cell -= c;
                        } else {
                            *cell += c;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `∂_q: M ⊗ Λ^q g → M ⊗ Λ^{q-1} g` of `M ⊗_{U(g)} U(g) ⊗ Λ•g`, with `M`
/// a right module through `v·x = -x·v`:
/// `∂(v ⊗ x_1∧…∧x_q) = Σ_s (-1)^{s+1} v·x_s ⊗ (…x̂_s…) + Σ_{s<t} (-1)^{s+t} v ⊗ [x_s,x_t]∧(…)`.
///
/// `q = 0` gives the zero map to the zero space.
pub fn chain_differential(g: &LieAlgebra, module: &GModule, q: usize) -> Result<Matrix> {
    check_module(g, module)?;
    let (d, m) = (g.dim(), module.dim());
    let src = subsets(d, q);
    if q == 0 {
        return Ok(Matrix::zeros(0, src.len() * m));
    }
    let tgt = subsets(d, q - 1);
    let mut out = Matrix::zeros(tgt.len() * m, src.len() * m);
    for (col_set, big) in src.iter().enumerate() {
        for s in 0..big.len() {
            let mut small = big.clone();
            let xs = small.remove(s);
            let row_set = subset_index(&tgt, &small);
            let rho = module.action(xs);
            for a in 0..m {
                for b in 0..m {
                    let v = &rho[(a, b)];
                    if v.is_zero() {
                        continue;
                    }
                    // (-1)^s for 0-based s, times v·x_s = -ρ(x_s)v
                    let cell = &mut out[(row_set * m + a, col_set * m + b)];
                    if s % 2 == 0 {
                        *cell -= v;
                    } else {
                        *cell += v;
                    }
                }
            }
        }
        for s in 0..big.len() {
            for t in s + 1..big.len() {
                let mut rest = big.clone();
                rest.remove(t);
                rest.remove(s);
                for (k, c) in g.bracket(big[s], big[t]) {
                    let Some((set, odd)) = wedge_front(&rest, *k) else {
                        continue;
                    };
                    let row_set = subset_index(&tgt, &set);
                    let negative = ((s + t) % 2 == 1) != odd;
                    for j in 0..m {
                        let cell = &mut out[(row_set * m + j, col_set * m + j)];
                        if negative {
                            *cell -= c;
                        } else {
                            *cell += c;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn lie_cohomology(g: &LieAlgebra, module: &GModule) -> Result<CohomologyResult> {
    let d = g.dim();
    let diffs: Vec<Matrix> = (0..=d).map(|q| cochain_differential(g, module, q)).collect::<Result<_>>()?;
    let ranks: Vec<usize> = diffs.iter().map(Matrix::rank).collect();
    let mut betti = Vec::with_capacity(d + 1);
    let mut cocycles = Vec::with_capacity(d + 1);
    for q in 0..=d {
        let dim_q = diffs[q].cols();
        let incoming = if q == 0 { 0 } else { ranks[q - 1] };
        betti.push(dim_q - ranks[q] - incoming);
        cocycles.push(echelon_basis(&diffs[q].kernel(), dim_q));
    }
    Ok(CohomologyResult { table: BettiTable { kind: Kind::Cohomology, betti }, cocycles })
}

pub fn lie_homology(g: &LieAlgebra, module: &GModule) -> Result<BettiTable> {
    let d = g.dim();
    let diffs: Vec<Matrix> = (0..=d).map(|q| chain_differential(g, module, q)).collect::<Result<_>>()?;
    let ranks: Vec<usize> = diffs.iter().map(Matrix::rank).collect();
    let betti = (0..=d)
        .map(|q| {
            let dim_q = diffs[q].cols();
            let incoming = if q == d { 0 } else { ranks[q + 1] };
            dim_q - ranks[q] - incoming
        })
        .collect();
    Ok(BettiTable { kind: Kind::Homology, betti })
}

/// `Hom(M, N)` with `(x·f)(v) = x·f(v) - f(x·v)`.
pub fn hom_module(g: &LieAlgebra, source: &GModule, target: &GModule) -> Result<GModule> {
    check_module(g, source)?;
    check_module(g, target)?;
    Ok(source.hom_to(target))
}

/// `Ext_U(M, N) = H*(g, Hom(M, N))`.
pub fn ext(g: &LieAlgebra, source: &GModule, target: &GModule) -> Result<CohomologyResult> {
    lie_cohomology(g, &hom_module(g, source, target)?)
}

/// `Tor^U(M, N) = H_*(g, M ⊗ N)` with the diagonal action.
pub fn tor(g: &LieAlgebra, left: &GModule, right: &GModule) -> Result<BettiTable> {
    check_module(g, left)?;
    check_module(g, right)?;
    lie_homology(g, &left.tensor(right))
}
