#![allow(dead_code)]

use foliation_core::{Monomial, Poly, Rational, VectorField};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polynomial of total degree at most `deg` with integer
/// coefficients in `-3..=3`.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, deg: u32) -> Poly {
    Poly::from_terms(
        nvars,
        Monomial::all_up_to(nvars, deg)
            .into_iter()
            .map(|m| (m, Rational::from_integer(rng.gen_range(-3i64..=3).into()))),
    )
}

pub fn random_field(rng: &mut ChaCha8Rng, nvars: usize, deg: u32) -> VectorField<Rational> {
    VectorField::new((0..nvars).map(|_| random_poly(rng, nvars, deg)).collect()).unwrap()
}

pub fn int(nvars: usize, n: i64) -> Poly {
    Poly::constant(nvars, Rational::from_integer(n.into()))
}

pub fn q(nvars: usize, n: i64, d: i64) -> Poly {
    Poly::constant(nvars, Rational::new(n.into(), d.into()))
}
