use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use hek::expr::parse_element;
use hek::lie::LieAlgebra;
use hek::linalg::Matrix;
use hek::scalar::{prime_power, LogNorm, Prime, Scalar, Valuation};
use hek::uenv::{Monomial, UElement};

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn scalar() -> impl Strategy<Value = Scalar> {
    (-10_000i64..10_000, 1i64..5_000).prop_map(|(n, d)| Scalar::new(BigInt::from(n), BigInt::from(d)))
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(PRIMES.to_vec()).prop_map(|p| Prime::new(p).unwrap())
}

/// `v_p` by repeated division, independent of the library's valuation.
fn naive_valuation(p: u64, x: &Scalar) -> i64 {
    let p = BigInt::from(p);
    let mut v = 0;
    let (mut n, mut d) = (x.numer().abs(), x.denom().abs());
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    while (&d % &p).is_zero() {
        d /= &p;
        v -= 1;
    }
    v
}

/// Real value of `p^exponent` compared through `p^(a/b) < p^(c/d)` ⇔ `ad < cb`.
fn real_less(a: &LogNorm, b: &LogNorm) -> bool {
    match (a, b) {
        (LogNorm::Bottom, LogNorm::Bottom) => false,
        (LogNorm::Bottom, _) => true,
        (_, LogNorm::Bottom) => false,
        (LogNorm::Finite(x), LogNorm::Finite(y)) => x.numer() * y.denom() < y.numer() * x.denom(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn valuation_matches_division(p in prime(), x in nonzero_scalar()) {
        prop_assert_eq!(p.valuation(&x), Valuation::Finite(naive_valuation(p.get(), &x)));
    }

    #[test]
    fn norm_is_multiplicative(p in prime(), x in nonzero_scalar(), y in nonzero_scalar()) {
        prop_assert_eq!(p.norm(&(&x * &y)), p.norm(&x) * p.norm(&y));
    }

    #[test]
    fn norm_is_ultrametric(p in prime(), x in scalar(), y in scalar()) {
        let (nx, ny, ns) = (p.norm(&x), p.norm(&y), p.norm(&(&x + &y)));
        let top = nx.clone().max(ny.clone());
        prop_assert!(ns <= top);
        if nx != ny {
            prop_assert_eq!(ns, top);
        }
    }

    #[test]
    fn lognorm_order_matches_real_values(a in prop::option::of(scalar()), b in prop::option::of(scalar())) {
        let a = a.map_or(LogNorm::Bottom, LogNorm::Finite);
        let b = b.map_or(LogNorm::Bottom, LogNorm::Finite);
        prop_assert_eq!(a < b, real_less(&a, &b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_agrees_with_rref(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..6)) {
        let m = Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|x| Scalar::from_integer(x.into())).collect()).collect()).unwrap();
        let (_, pivots) = m.rref();
        prop_assert_eq!(m.rank(), pivots.len());
        prop_assert_eq!(m.rank() + m.kernel().len(), m.cols());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn rendering_round_trips(terms in prop::collection::vec((prop::collection::vec(0u32..4, 3), scalar()), 0..6)) {
        let u = UElement::from_terms(3, terms.into_iter().map(|(e, c)| (Monomial::new(e), c)));
        prop_assert_eq!(parse_element(&u.to_string(), 3).unwrap(), u);
    }

    #[test]
    fn prime_powers_have_their_valuation(p in prime(), k in -20i64..20) {
        prop_assert_eq!(p.valuation(&prime_power(&p, k)), Valuation::Finite(k));
    }
}

const PRESETS: [&str; 4] = ["abelian(3)", "heisenberg", "sl2", "borel2"];

#[test]
fn presets_and_their_adjoint_modules_validate() {
    for name in PRESETS {
        let lie = LieAlgebra::preset(name).unwrap();
        lie.validate().unwrap();
        lie.adjoint_module().validate(&lie).unwrap();
    }
}

#[test]
fn direct_sum_is_associative() {
    let algebras: Vec<LieAlgebra> = PRESETS.iter().map(|n| LieAlgebra::preset(n).unwrap()).collect();
    for a in &algebras {
        for b in &algebras {
            for c in [&algebras[1], &algebras[3]] {
                let left = a.direct_sum(b).direct_sum(c);
                let right = a.direct_sum(&b.direct_sum(c));
                let d = left.dim();
                assert_eq!(d, right.dim());
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            assert_eq!(left.constant(i, j, k), right.constant(i, j, k));
                        }
                    }
                }
                left.validate().unwrap();
            }
        }
    }
}
