//! Orthogonal polynomial systems from three-term recurrences.
//!
//! Monic systems follow `P_n = (x − c_n) P_{n−1} − λ_n P_{n−2}` for `n ≥ 1`
//! with `P_{−1} = 0`; general systems follow
//! `P_{n+1} = (A_n x + B_n) P_n − C_n P_{n−1}` for `n ≥ 0`.
//!
//! Recurrence tables are materialized: entry `n` of a table holds the value
//! for index `n`. Entries a recurrence never reads (`c_0`, `λ_0`, `λ_1`,
//! `C_0`) may be absent.

use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{gen_binom, inv_factorial, Field, Rational};
use crate::poly::Poly;

/// Table of recurrence coefficients indexed by `n`; `None` marks an absent
/// entry.
pub type Table<F> = Vec<Option<F>>;

/// Data for `P_n = (x − c_n) P_{n−1} − λ_n P_{n−2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicTtr<F> {
    pub p0: F,
    pub c: Table<F>,
    pub lam: Table<F>,
}

/// Data for `P_{n+1} = (A_n x + B_n) P_n − C_n P_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralTtr<F> {
    pub p0: F,
    pub a: Table<F>,
    pub b: Table<F>,
    pub c: Table<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TtrSpec<F> {
    Monic(MonicTtr<F>),
    General(GeneralTtr<F>),
}

fn entry<'a, F>(table: &'a Table<F>, name: &'static str, n: usize) -> Result<&'a F> {
    table
        .get(n)
        .and_then(Option::as_ref)
        .ok_or(Error::MissingEntry {
            table: name,
            index: n,
        })
}

impl<F: Field> MonicTtr<F> {
    /// Builds tables up to `n_max` from closures; `lam` is filled from `n = 2`.
    pub fn from_fn(p0: F, n_max: usize, c: impl Fn(usize) -> F, lam: impl Fn(usize) -> F) -> Self {
        MonicTtr {
            p0,
            c: (0..=n_max).map(|n| (n >= 1).then(|| c(n))).collect(),
            lam: (0..=n_max).map(|n| (n >= 2).then(|| lam(n))).collect(),
        }
    }

    /// `c_n = β`, `λ_n = α(n−1)`: the recurrence of `H_n^α(x − β)`.
    pub fn shifted_hermite(alpha: F, beta: F, n_max: usize) -> Self {
        MonicTtr::from_fn(
            F::one(),
            n_max,
            |_| beta.clone(),
            |n| alpha.clone() * F::from((n - 1) as i64),
        )
    }

    /// Recurrence of `Q_n(x + s)` when `Q_n` follows `self`: `c_n − s`.
    pub fn shifted(&self, s: &F) -> Self {
        MonicTtr {
            p0: self.p0.clone(),
            c: self
                .c
                .iter()
                .map(|c| c.as_ref().map(|c| c.clone() - s.clone()))
                .collect(),
            lam: self.lam.clone(),
        }
    }

    pub fn generate(&self, n_max: usize) -> Result<Vec<Poly<F>>> {
        if self.p0.is_zero() {
            return Err(Error::ZeroParameter("p0"));
        }
        let mut out: Vec<Poly<F>> = Vec::with_capacity(n_max + 1);
        out.push(Poly::constant(self.p0.clone()));
        for n in 1..=n_max {
            let c = entry(&self.c, "c", n)?;
            let mut next = &Poly::linear_root(c.clone()) * &out[n - 1];
            if n >= 2 {
                let lam = entry(&self.lam, "lam", n)?;
                if lam.is_zero() {
                    return Err(Error::InvalidSpec {
                        table: "lam",
                        index: n,
                    });
                }
                next = &next - &out[n - 2].scale(lam);
            }
            out.push(next);
        }
        Ok(out)
    }
}

impl<F: Field> GeneralTtr<F> {
    pub fn generate(&self, n_max: usize) -> Result<Vec<Poly<F>>> {
        if self.p0.is_zero() {
            return Err(Error::ZeroParameter("p0"));
        }
        let mut out: Vec<Poly<F>> = Vec::with_capacity(n_max + 1);
        out.push(Poly::constant(self.p0.clone()));
        for n in 0..n_max {
            let a = entry(&self.a, "A", n)?;
            if a.is_zero() {
                return Err(Error::InvalidSpec {
                    table: "A",
                    index: n,
                });
            }
            let b = entry(&self.b, "B", n)?;
            let factor = Poly::new(alloc::vec![b.clone(), a.clone()]);
            let mut next = &factor * &out[n];
            if n >= 1 {
                let c = entry(&self.c, "C", n)?;
                if c.is_zero() {
                    return Err(Error::InvalidSpec {
                        table: "C",
                        index: n,
                    });
                }
                next = &next - &out[n - 1].scale(c);
            }
            out.push(next);
        }
        Ok(out)
    }
}

impl<F: Field> TtrSpec<F> {
    /// `P_0..=P_N`.
    pub fn generate(&self, n_max: usize) -> Result<Vec<Poly<F>>> {
        match self {
            TtrSpec::Monic(m) => m.generate(n_max),
            TtrSpec::General(g) => g.generate(n_max),
        }
    }
}

/// Standard (physicists') Hermite polynomials `H_0..=H_N` from
/// `H_{n+1} = 2x H_n − 2n H_{n−1}`.
pub fn hermite_std_family(n_max: usize) -> Vec<Poly<Rational>> {
    let two_x = Poly::monomial(Rational::from(2), 1);
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Poly::one());
    for n in 0..n_max {
        let mut next = &two_x * &out[n];
        if n >= 1 {
            next = &next - &out[n - 1].scale(&Rational::from(2 * n as i64));
        }
        out.push(next);
    }
    out
}

pub fn hermite_std(n: usize) -> Poly<Rational> {
    hermite_std_family(n).pop().expect("family is nonempty")
}

/// Generalized Hermite `H_0^α..=H_N^α` from
/// `H_n^α = x H_{n−1}^α − α(n−1) H_{n−2}^α`.
pub fn hermite_gen_family<F: Field>(alpha: &F, n_max: usize) -> Vec<Poly<F>> {
    let x = Poly::x();
    let mut out: Vec<Poly<F>> = Vec::with_capacity(n_max + 1);
    out.push(Poly::one());
    for n in 1..=n_max {
        let mut next = &x * &out[n - 1];
        if n >= 2 {
            let lam = alpha.clone() * F::from((n - 1) as i64);
            next = &next - &out[n - 2].scale(&lam);
        }
        out.push(next);
    }
    out
}

pub fn hermite_gen<F: Field>(alpha: &F, n: usize) -> Poly<F> {
    hermite_gen_family(alpha, n)
        .pop()
        .expect("family is nonempty")
}

/// Generalized Laguerre `L_n^α = Σ_r (−1)^r/r! · C(n+α, n−r) x^r`.
pub fn laguerre(alpha: &Rational, n: usize) -> Poly<Rational> {
    let top = Rational::from(n as i64) + alpha.clone();
    let coeffs = (0..=n)
        .map(|r| {
            let sign = if r % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            sign * inv_factorial(r as u64) * gen_binom(&top, (n - r) as u64)
        })
        .collect();
    Poly::new(coeffs)
}

pub fn laguerre_family(alpha: &Rational, n_max: usize) -> Vec<Poly<Rational>> {
    (0..=n_max).map(|n| laguerre(alpha, n)).collect()
}

/// `R_n(x) = Q_n(x + s)` for every member.
pub fn shift_system<F: Field>(ps: &[Poly<F>], s: &F) -> Vec<Poly<F>> {
    ps.iter().map(|p| p.taylor_shift(s)).collect()
}

/// Which positive-definiteness condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdViolation {
    /// `c_n` is not real.
    NonRealC,
    /// `λ_n` is not a positive real.
    NonPositiveLambda,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdVerdict {
    /// `c_n` real and `λ_n > 0` for every checked `n ≤ N`.
    PositiveDefiniteUpTo(usize),
    Violation {
        index: usize,
        reason: PdViolation,
    },
}

impl PdVerdict {
    pub fn is_positive_definite(&self) -> bool {
        matches!(self, PdVerdict::PositiveDefiniteUpTo(_))
    }
}

/// Checks `c_n` real (`1 ≤ n ≤ N`) and `λ_n > 0` (`2 ≤ n ≤ N`). Only a finite
/// prefix is examined, so success means "positive-definite up to `N`".
pub fn pd_check<F: Field>(spec: &TtrSpec<F>, n_max: usize) -> Result<PdVerdict> {
    let TtrSpec::Monic(m) = spec else {
        return Err(Error::NotMonic);
    };
    for n in 1..=n_max {
        if entry(&m.c, "c", n)?.as_real().is_none() {
            return Ok(PdVerdict::Violation {
                index: n,
                reason: PdViolation::NonRealC,
            });
        }
        if n >= 2 {
            let lam = entry(&m.lam, "lam", n)?;
            if !lam.as_real().is_some_and(|l| l.is_positive()) {
                return Ok(PdVerdict::Violation {
                    index: n,
                    reason: PdViolation::NonPositiveLambda,
                });
            }
        }
    }
    Ok(PdVerdict::PositiveDefiniteUpTo(n_max))
}
