//! Finite-dimensional Lie algebras given by structure constants in an
//! ordered basis, and their finite-dimensional modules.
//!
//! Indices are 0-based internally; error values and file formats use the
//! 1-based convention `x1..xd`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};

/// `(i, j, [(k, c)])` for `[x_i, x_j] = Σ c·x_k`, 0-based.
pub type Bracket = (usize, usize, Vec<(usize, Scalar)>);

/// A Lie algebra with basis `x_1..x_d` and `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
///
/// The declaration order of the basis is the PBW order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    constants: Vec<Scalar>,
    names: Vec<String>,
    sparse: Vec<Vec<(usize, Scalar)>>,
}

impl LieAlgebra {
    /// Builds an algebra from a dense `d×d×d` table without validating it.
    pub fn from_table(dim: usize, constants: Vec<Scalar>, names: Option<Vec<String>>) -> Result<Self> {
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, found: constants.len() });
        }
        let names = match names {
            Some(n) if n.len() == dim => n,
            Some(n) => return Err(Error::DimensionMismatch { expected: dim, found: n.len() }),
            None => default_names(dim),
        };
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &constants[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(LieAlgebra { dim, constants, names, sparse })
    }

    /// Builds an algebra from brackets `[x_i, x_j]` with `i < j` (0-based);
    /// the antisymmetric partners are filled in.
    pub fn from_brackets(dim: usize, brackets: &[Bracket]) -> Result<Self> {
        let mut table = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, coeffs) in brackets {
            let (i, j) = (*i, *j);
            if i >= j || j >= dim {
                return Err(Error::Parse(format!(
                    "bracket indices must satisfy 1 <= i < j <= {dim}, got ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            for (k, c) in coeffs {
                if *k >= dim {
                    return Err(Error::Parse(format!("bracket target x{} out of range", k + 1)));
                }
                table[(i * dim + j) * dim + k] += c;
                table[(j * dim + i) * dim + k] -= c;
            }
        }
        LieAlgebra::from_table(dim, table, None)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::from_brackets(dim, &[]).expect("abelian algebra")
    }

    /// `[x, y] = z`, all other brackets zero.
    pub fn heisenberg() -> Self {
        LieAlgebra::from_brackets(3, &[(0, 1, vec![(2, int(1))])]).expect("heisenberg").with_names(&["x", "y", "z"])
    }

    /// Basis `e, h, f` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        LieAlgebra::from_brackets(
            3,
            &[(0, 1, vec![(0, int(-2))]), (0, 2, vec![(1, int(1))]), (1, 2, vec![(2, int(-2))])],
        )
        .expect("sl2")
        .with_names(&["e", "h", "f"])
    }

    /// Two-dimensional nonabelian algebra, `[x1, x2] = x2`.
    pub fn borel2() -> Self {
        LieAlgebra::from_brackets(2, &[(0, 1, vec![(1, int(1))])]).expect("borel2")
    }

    fn with_names(mut self, names: &[&str]) -> Self {
        self.names = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn renamed(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: names.len() });
        }
        self.names = names;
        Ok(self)
    }

    /// Looks up `abelian(d)`, `heisenberg`, `sl2` or `borel2`.
    pub fn preset(name: &str) -> Result<Self> {
        let name = name.trim();
        match name {
            "heisenberg" => Ok(LieAlgebra::heisenberg()),
            "sl2" => Ok(LieAlgebra::sl2()),
            "borel2" => Ok(LieAlgebra::borel2()),
            _ => name
                .strip_prefix("abelian(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|d| d.trim().parse::<usize>().ok())
                .map(LieAlgebra::abelian)
                .ok_or_else(|| Error::UnknownPreset(name.to_string())),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero terms of `[x_i, x_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(Zero::is_zero)
    }

    /// Antisymmetry, Jacobi and integrality, in that order.
    pub fn validate(&self) -> Result<()> {
        self.validate_structure()?;
        self.validate_integrality()
    }

    /// Antisymmetry and Jacobi only; admits non-integral constants.
    pub fn validate_structure(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if *self.constant(i, j, k) != -self.constant(j, i, k) {
                        return Err(Error::AntisymmetryViolation { i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    if !self.jacobi_sum(i, j, k).iter().all(Zero::is_zero) {
                        return Err(Error::JacobiViolation { i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn validate_integrality(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.bracket(i, j) {
                    if !c.is_integer() {
                        return Err(Error::NonIntegralConstant { i: i + 1, j: j + 1, k: k + 1, value: c.to_string() });
                    }
                }
            }
        }
        Ok(())
    }

    /// Coordinates of `[x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]`.
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, inner) in self.bracket(b, c) {
                for (n, outer) in self.bracket(a, *m) {
                    out[*n] += inner * outer;
                }
            }
        }
        out
    }

    /// Block-diagonal sum; the basis of `self` comes first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (da, db) = (self.dim, other.dim);
        let d = da + db;
        let mut table = vec![Scalar::zero(); d * d * d];
        for (src, offset, n) in [(self, 0, da), (other, da, db)] {
            for i in 0..n {
                for j in 0..n {
                    for (k, c) in src.bracket(i, j) {
                        table[((i + offset) * d + j + offset) * d + k + offset] = c.clone();
                    }
                }
            }
        }
        let mut names = self.names.clone();
        names.extend(other.names.iter().map(|n| format!("{n}'")));
        LieAlgebra::from_table(d, table, Some(names)).expect("direct sum shape")
    }

    /// Matrix of `ad x_i` in the basis, columns indexed by the input.
    pub fn ad_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.bracket(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    pub fn adjoint_module(&self) -> GModule {
        GModule { dim: self.dim, action: (0..self.dim).map(|i| self.ad_matrix(i)).collect() }
    }

    pub fn trivial_module(&self) -> GModule {
        GModule::trivial(self.dim, 1)
    }
}

fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("x{i}")).collect()
}

/// A left module given by one matrix `ρ(x_i)` per basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModule {
    dim: usize,
    action: Vec<Matrix>,
}

impl GModule {
    pub fn new(dim: usize, action: Vec<Matrix>) -> Result<Self> {
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: m.rows().max(m.cols()) });
            }
        }
        Ok(GModule { dim, action })
    }

    /// The `m`-dimensional module on which every generator acts by zero.
    pub fn trivial(lie_dim: usize, m: usize) -> Self {
        GModule { dim: m, action: vec![Matrix::zeros(m, m); lie_dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn generators(&self) -> usize {
        self.action.len()
    }

    /// `ρ(Σ_k c_k x_k)`.
    pub fn act_by(&self, combination: &[(usize, Scalar)]) -> Matrix {
        combination.iter().fold(Matrix::zeros(self.dim, self.dim), |acc, (k, c)| &acc + &self.action[*k].scale(c))
    }

    /// Checks `ρ([x_i,x_j]) = ρ(x_i)ρ(x_j) - ρ(x_j)ρ(x_i)` for all `i < j`.
    pub fn validate(&self, lie: &LieAlgebra) -> Result<()> {
        if self.action.len() != lie.dim() {
            return Err(Error::DimensionMismatch { expected: lie.dim(), found: self.action.len() });
        }
        for i in 0..lie.dim() {
            for j in i + 1..lie.dim() {
                let lhs = self.act_by(lie.bracket(i, j));
                let rhs = &(&self.action[i] * &self.action[j]) - &(&self.action[j] * &self.action[i]);
                if lhs != rhs {
                    return Err(Error::BracketCompatibilityViolation { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(())
    }

    /// Every generator acting by the identity; only a module when `g` is abelian.
    pub fn identity_action(lie_dim: usize, m: usize) -> Self {
        GModule { dim: m, action: vec![Matrix::identity(m); lie_dim] }
    }

    /// `Hom(self, target)` with `(x·f)(v) = x·f(v) - f(x·v)`.
    ///
    /// A map `f` is stored as the vector of its matrix entries `f[a][b]`
    /// (row `a` of the target, column `b` of the source) at index `a·m + b`.
    pub fn hom_to(&self, target: &GModule) -> GModule {
        let (m, n) = (self.dim, target.dim);
        let action = self
            .action
            .iter()
            .zip(&target.action)
            .map(|(src, tgt)| {
                let mut out = Matrix::zeros(n * m, n * m);
                for a in 0..n {
                    for b in 0..m {
                        let col = a * m + b;
                        // x·E_{ab} = ρ_N(x) E_{ab} - E_{ab} ρ_M(x)
                        for a2 in 0..n {
                            let c = &tgt[(a2, a)];
                            if !c.is_zero() {
                                out[(a2 * m + b, col)] += c;
                            }
                        }
                        for b2 in 0..m {
                            let c = &src[(b, b2)];
                            if !c.is_zero() {
                                out[(a * m + b2, col)] -= c;
                            }
                        }
                    }
                }
                out
            })
            .collect();
        GModule { dim: n * m, action }
    }

    /// `self ⊗ other` with the diagonal action `x ⊗ 1 + 1 ⊗ x`; basis
    /// vector `e_a ⊗ f_b` sits at index `a·n + b`.
    pub fn tensor(&self, other: &GModule) -> GModule {
        let (m, n) = (self.dim, other.dim);
        let id_m = Matrix::identity(m);
        let id_n = Matrix::identity(n);
        let action =
            self.action.iter().zip(&other.action).map(|(a, b)| &kronecker(a, &id_n) + &kronecker(&id_m, b)).collect();
        GModule { dim: m * n, action }
    }
}

fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[(i * b.rows() + k, j * b.cols() + l)] = &a[(i, j)] * &b[(k, l)];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for name in ["abelian(0)", "abelian(2)", "abelian(4)", "heisenberg", "sl2", "borel2"] {
            LieAlgebra::preset(name).unwrap().validate().unwrap();
        }
        assert_eq!(LieAlgebra::preset("so3"), Err(Error::UnknownPreset("so3".into())));
        assert!(LieAlgebra::preset("abelian(x)").is_err());
    }

    #[test]
    fn preset_shapes() {
        let a = LieAlgebra::preset("abelian(2)").unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_abelian());
        let h = LieAlgebra::heisenberg();
        assert_eq!(h.constant(0, 1, 2), &int(1));
        assert_eq!(h.constant(1, 0, 2), &int(-1));
        let s = LieAlgebra::sl2();
        assert_eq!(s.bracket(1, 0), &[(0, int(2))]);
        assert_eq!(s.bracket(1, 2), &[(2, int(-2))]);
        assert_eq!(s.bracket(0, 2), &[(1, int(1))]);
    }

    #[test]
    fn jacobi_violation_is_located() {
        let bad = LieAlgebra::from_brackets(3, &[(0, 1, vec![(0, int(1))]), (1, 2, vec![(1, int(1))])]).unwrap();
        assert_eq!(bad.validate(), Err(Error::JacobiViolation { i: 1, j: 2, k: 3 }));
        assert_eq!(bad.jacobi_sum(0, 1, 2), vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn antisymmetry_and_integrality_are_checked() {
        let mut table = vec![Scalar::zero(); 8];
        table[1] = int(1); // c[0][0][1]
        let bad = LieAlgebra::from_table(2, table, None).unwrap();
        assert_eq!(bad.validate(), Err(Error::AntisymmetryViolation { i: 1, j: 1, k: 2 }));

        let frac = LieAlgebra::from_brackets(2, &[(0, 1, vec![(1, crate::scalar::ratio(1, 2))])]).unwrap();
        assert!(frac.validate_structure().is_ok());
        assert!(matches!(frac.validate(), Err(Error::NonIntegralConstant { i: 1, j: 2, k: 2, .. })));
    }

    #[test]
    fn direct_sums() {
        let a1 = LieAlgebra::abelian(1);
        assert_eq!(a1.direct_sum(&a1).constants, LieAlgebra::abelian(2).constants);

        let h = LieAlgebra::heisenberg().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(h.dim(), 4);
        let nonzero: Vec<_> =
            (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|&(i, j)| !h.bracket(i, j).is_empty()).collect();
        assert_eq!(nonzero, vec![(0, 1), (1, 0)]);

        let ss = LieAlgebra::sl2().direct_sum(&LieAlgebra::sl2());
        assert_eq!(ss.dim(), 6);
        ss.validate().unwrap();
        assert_eq!(ss.bracket(4, 3), &[(3, int(2))]);
    }

    #[test]
    fn direct_sum_is_associative() {
        let (a, b, c) = (LieAlgebra::heisenberg(), LieAlgebra::sl2(), LieAlgebra::borel2());
        let left = a.direct_sum(&b).direct_sum(&c);
        let right = a.direct_sum(&b.direct_sum(&c));
        assert_eq!(left.constants, right.constants);
    }

    #[test]
    fn module_validation() {
        for lie in [LieAlgebra::sl2(), LieAlgebra::heisenberg(), LieAlgebra::borel2(), LieAlgebra::abelian(3)] {
            lie.trivial_module().validate(&lie).unwrap();
            lie.adjoint_module().validate(&lie).unwrap();
        }
        let sl2 = LieAlgebra::sl2();
        // checked pairs run i < j, so (e,h) is reported; that is the (h,e) relation
        assert_eq!(
            GModule::identity_action(3, 2).validate(&sl2),
            Err(Error::BracketCompatibilityViolation { i: 1, j: 2 })
        );
    }

    #[test]
    fn hom_and_tensor_are_modules() {
        let sl2 = LieAlgebra::sl2();
        let ad = sl2.adjoint_module();
        let triv = sl2.trivial_module();
        ad.hom_to(&ad).validate(&sl2).unwrap();
        ad.tensor(&ad).validate(&sl2).unwrap();
        // Hom(trivial, M) = M
        assert_eq!(triv.hom_to(&ad), ad);
        // Hom(M, trivial) = negated transpose
        let dual = ad.hom_to(&triv);
        for i in 0..3 {
            assert_eq!(dual.action(i), &ad.action(i).transpose().scale(&int(-1)));
        }
    }
}
