//! Seeded random elements and chains for the property suites.
//!
//! Coefficients are `p^k·m` with `k ∈ [-5, 5]` and `m ∈ [-9, 9]` a unit, so
//! sampled norms land both above and below 1.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Chain, Side, Wedge};
use crate::scalar::{int, prime_power, Prime, Scalar};
use crate::uenv::{Monomial, UElement};

pub const MAX_SUPPORT: usize = 6;

/// Independent generator for sample `k` of stream `stream`.
pub fn sample_rng(seed: u64, stream: &str, k: u64) -> ChaCha8Rng {
    // FNV-1a of the stream name, then a splitmix64 finalizer over the mix
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stream.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut z = seed ^ h.rotate_left(17) ^ k.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^= z >> 31;
    ChaCha8Rng::seed_from_u64(z)
}

pub fn random_scalar<R: Rng>(rng: &mut R, p: Prime) -> Scalar {
    let units: Vec<i64> = (-9..=9).filter(|m: &i64| *m != 0 && m.rem_euclid(p.get() as i64) != 0).collect();
    let m = *units.choose(rng).expect("some unit in [-9, 9]");
    let k = rng.gen_range(-5..=5);
    prime_power(&p, k) * int(m)
}

pub fn random_monomial<R: Rng>(rng: &mut R, dim: usize, max_degree: u32) -> Monomial {
    let mut exps = vec![0u32; dim];
    if dim == 0 {
        return Monomial::new(exps);
    }
    let degree = rng.gen_range(0..=max_degree);
    for _ in 0..degree {
        exps[rng.gen_range(0..dim)] += 1;
    }
    Monomial::new(exps)
}

/// A nonzero element with at most [`MAX_SUPPORT`] terms.
pub fn random_element<R: Rng>(rng: &mut R, dim: usize, p: Prime, max_degree: u32) -> UElement {
    loop {
        let n = rng.gen_range(1..=MAX_SUPPORT);
        let u = UElement::from_terms(
            dim,
            (0..n).map(|_| (random_monomial(rng, dim, max_degree), random_scalar(rng, p))).collect::<Vec<_>>(),
        );
        if !u.is_zero() {
            return u;
        }
    }
}

pub fn random_wedge<R: Rng>(rng: &mut R, dim: usize) -> Wedge {
    let idx: Vec<usize> = (0..dim).filter(|_| rng.gen_bool(0.5)).collect();
    Wedge::from_indices(idx).expect("distinct indices").0
}

/// A nonzero chain with at most [`MAX_SUPPORT`] terms, mixed degrees.
pub fn random_chain<R: Rng>(rng: &mut R, side: Side, dim: usize, p: Prime, max_degree: u32) -> Chain {
    loop {
        let n = rng.gen_range(1..=MAX_SUPPORT);
        let mut ch = Chain::zero(side, dim);
        for _ in 0..n {
            let w = random_wedge(rng, dim);
            let m = random_monomial(rng, dim, max_degree);
            ch.add_term(w, m, random_scalar(rng, p));
        }
        if !ch.is_zero() {
            return ch;
        }
    }
}
