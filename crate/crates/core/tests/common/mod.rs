//! Random generators shared by the integration tests.
#![allow(dead_code)]

use orthodiff_core::{GaussianRational, Poly, Rational};
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Small rational with numerator in `[-num, num]`, denominator in `[1, den]`.
pub fn rand_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn rand_nonzero_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    loop {
        let r = rand_rational(rng, num, den);
        if r != q(0, 1) {
            return r;
        }
    }
}

pub fn rand_positive_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(1..=num), rng.gen_range(1..=den))
}

pub fn rand_gaussian<R: Rng>(rng: &mut R, num: i64, den: i64) -> GaussianRational {
    GaussianRational::new(rand_rational(rng, num, den), rand_rational(rng, num, den))
}

pub fn rand_nonzero_gaussian<R: Rng>(rng: &mut R, num: i64, den: i64) -> GaussianRational {
    loop {
        let z = rand_gaussian(rng, num, den);
        if z != GaussianRational::from(0) {
            return z;
        }
    }
}

/// Degree-exactly-`deg` polynomial with small random rational coefficients.
pub fn rand_poly<R: Rng>(rng: &mut R, deg: usize) -> Poly<Rational> {
    let mut coeffs: Vec<Rational> = (0..deg).map(|_| rand_rational(rng, 9, 5)).collect();
    coeffs.push(rand_nonzero_rational(rng, 9, 5));
    Poly::new(coeffs)
}

/// Random roots (possibly repeated) drawn from a small rational grid.
pub fn rand_roots<R: Rng>(rng: &mut R, count: usize) -> Vec<Rational> {
    (0..count).map(|_| rand_rational(rng, 12, 4)).collect()
}
