use hek::cohomology::{chain_differential, cochain_differential, ext, lie_cohomology, lie_homology, tor};
use hek::lie::{GModule, LieAlgebra};
use hek::linalg::Matrix;
use hek::scalar::Scalar;

fn algebras() -> Vec<(String, LieAlgebra)> {
    let mut out: Vec<(String, LieAlgebra)> =
        ["abelian(1)", "abelian(2)", "abelian(3)", "abelian(4)", "heisenberg", "sl2", "borel2"]
            .iter()
            .map(|n| (n.to_string(), LieAlgebra::preset(n).unwrap()))
            .collect();
    out.push(("borel2+borel2".into(), LieAlgebra::borel2().direct_sum(&LieAlgebra::borel2())));
    out.push(("heisenberg+abelian(1)".into(), LieAlgebra::heisenberg().direct_sum(&LieAlgebra::abelian(1))));
    out
}

fn modules(g: &LieAlgebra) -> Vec<(&'static str, GModule)> {
    let ad = g.adjoint_module();
    vec![
        ("trivial", g.trivial_module()),
        ("adjoint", ad.clone()),
        ("trivial^2", GModule::trivial(g.dim(), 2)),
        ("hom(ad, ad)", ad.hom_to(&ad)),
    ]
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The bracket as a `d × C(d, 2)` matrix, columns `[x_i, x_j]` for `i < j`.
fn bracket_map(g: &LieAlgebra) -> Matrix {
    let d = g.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let mut m = Matrix::zeros(d, pairs.len());
    for (col, (i, j)) in pairs.iter().enumerate() {
        for (k, c) in g.bracket(*i, *j) {
            m[(*k, col)] = c.clone();
        }
    }
    m
}

#[test]
fn differentials_square_to_zero() {
    for (name, g) in algebras() {
        for (mname, m) in modules(&g) {
            m.validate(&g).unwrap();
            for q in 0..g.dim() {
                let a = cochain_differential(&g, &m, q).unwrap();
                let b = cochain_differential(&g, &m, q + 1).unwrap();
                assert!((&b * &a).is_zero(), "{name} {mname} cochain q = {q}");
                let c = chain_differential(&g, &m, q + 1).unwrap();
                let d = chain_differential(&g, &m, q).unwrap();
                assert!((&d * &c).is_zero(), "{name} {mname} chain q = {q}");
            }
        }
    }
}

#[test]
fn euler_characteristic_vanishes() {
    for (name, g) in algebras() {
        for (mname, m) in modules(&g) {
            assert_eq!(lie_cohomology(&g, &m).unwrap().table.euler_characteristic(), 0, "{name} {mname}");
            assert_eq!(lie_homology(&g, &m).unwrap().euler_characteristic(), 0, "{name} {mname}");
        }
    }
}

#[test]
fn low_degrees_of_trivial_cohomology() {
    for (name, g) in algebras() {
        let betti = lie_cohomology(&g, &g.trivial_module()).unwrap().table.betti;
        assert_eq!(betti[0], 1, "{name}");
        assert_eq!(betti[1], g.dim() - bracket_map(&g).rank(), "{name}");
    }
}

#[test]
fn trivial_tables_match_across_kinds() {
    for (name, g) in algebras() {
        let t = g.trivial_module();
        let co = lie_cohomology(&g, &t).unwrap().table.betti;
        assert_eq!(lie_homology(&g, &t).unwrap().betti, co, "{name}");
        assert_eq!(ext(&g, &t, &t).unwrap().table.betti, co, "{name}");
        assert_eq!(tor(&g, &t, &t).unwrap().betti, co, "{name}");
    }
}

#[test]
fn known_tables() {
    for d in 1..=4 {
        let g = LieAlgebra::abelian(d);
        let expected: Vec<usize> = (0..=d).map(|q| binomial(d, q)).collect();
        assert_eq!(lie_cohomology(&g, &g.trivial_module()).unwrap().table.betti, expected);
    }
    let sl2 = LieAlgebra::sl2();
    assert_eq!(lie_cohomology(&sl2, &sl2.trivial_module()).unwrap().table.betti, vec![1, 0, 0, 1]);
    assert_eq!(lie_homology(&sl2, &sl2.adjoint_module()).unwrap().betti, vec![0, 0, 0, 0]);
    let h = LieAlgebra::heisenberg();
    assert_eq!(lie_cohomology(&h, &h.trivial_module()).unwrap().table.betti, vec![1, 2, 2, 1]);
    let b = LieAlgebra::borel2();
    assert_eq!(lie_cohomology(&b, &b.trivial_module()).unwrap().table.betti, vec![1, 1, 0]);
}

#[test]
fn poincare_symmetry_for_unimodular_presets() {
    for name in ["abelian(3)", "heisenberg", "sl2"] {
        let g = LieAlgebra::preset(name).unwrap();
        let betti = lie_cohomology(&g, &g.trivial_module()).unwrap().table.betti;
        let mut reversed = betti.clone();
        reversed.reverse();
        assert_eq!(betti, reversed, "{name}");
    }
}

#[test]
fn ext_from_trivial_is_cohomology() {
    for (name, g) in algebras() {
        let ad = g.adjoint_module();
        let direct = lie_cohomology(&g, &ad).unwrap().table.betti;
        assert_eq!(ext(&g, &g.trivial_module(), &ad).unwrap().table.betti, direct, "{name}");
        let homology = lie_homology(&g, &ad).unwrap().betti;
        assert_eq!(tor(&g, &g.trivial_module(), &ad).unwrap().betti, homology, "{name}");
    }
}

#[test]
fn cocycles_are_killed_by_the_differential() {
    for (name, g) in algebras() {
        let res = lie_cohomology(&g, &g.adjoint_module()).unwrap();
        for (q, basis) in res.cocycles.iter().enumerate() {
            let dq = cochain_differential(&g, &g.adjoint_module(), q).unwrap();
            for v in basis {
                let image: Vec<Scalar> = dq.apply(v);
                assert!(image.iter().all(|x| *x == Scalar::from_integer(0.into())), "{name} q = {q}");
            }
        }
    }
}
