//! Deciding whether a constant-coefficient operator `φ(D)` induces an
//! orthogonal polynomial system.
//!
//! With `P_n = φ(D) x^n`, the following are equivalent for a sequence
//! `γ_0, γ_1, …` with `γ_0 ≠ 0`:
//!
//! 1. the `P_n` form an orthogonal system;
//! 2. `P_n = (x − b) P_{n−1} − a(n−1) P_{n−2}` with constant `b` and `a ≠ 0`;
//! 3. `γ_n = −b γ_{n−1} − a(n−1) γ_{n−2}` for `n ≥ 1` (`γ_{−1} = 0`), `a ≠ 0`;
//!
//! and then `φ(x) = γ_0 exp(−a x²/2 − b x)`. The recursion at `n = 1, 2`
//! forces `b = −γ_1/γ_0` and `a = (−b γ_1 − γ_2)/γ_0`; every later index
//! either confirms or refutes.
//!
//! A finite prefix cannot certify the infinite system, so an `ExpForm` verdict
//! means "consistent with the exponential form up to `N`".

use crate::diffop::{ExpOpParams, GammaSeq};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::Check;

/// Why a sequence does not induce an orthogonal system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotOpsReason {
    /// `γ_0 = 0`: `P_n` does not have degree `n`.
    ZeroGamma0,
    /// `a = 0`: the recurrence would have `λ_n = 0`.
    ZeroAlpha,
    /// The coefficient recursion fails at the witness index.
    Recursion,
}

impl NotOpsReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NotOpsReason::ZeroGamma0 => "gamma0_zero",
            NotOpsReason::ZeroAlpha => "alpha_zero",
            NotOpsReason::Recursion => "recursion",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyResult<F> {
    ExpForm(ExpOpParams<F>),
    NotOps { index: usize, reason: NotOpsReason },
}

impl<F> ClassifyResult<F> {
    pub fn is_exp_form(&self) -> bool {
        matches!(self, ClassifyResult::ExpForm(_))
    }
}

/// Minimum sequence length for classification.
pub const MIN_LEN: usize = 4;

/// `(a, b)` forced by `γ_0, γ_1, γ_2`, or the degeneracy that prevents it.
fn forced_params<F: Field>(g: &[F]) -> core::result::Result<(F, F), (usize, NotOpsReason)> {
    let gamma0_inv = g[0].inv().ok_or((0, NotOpsReason::ZeroGamma0))?;
    let b = -(g[1].clone() * gamma0_inv.clone());
    let a = (-(b.clone() * g[1].clone()) - g[2].clone()) * gamma0_inv;
    if a.is_zero() {
        return Err((2, NotOpsReason::ZeroAlpha));
    }
    Ok((a, b))
}

/// `−b γ_{n−1} − a(n−1) γ_{n−2}`, with `γ_{−1} = 0`.
fn recursion_rhs<F: Field>(g: &[F], a: &F, b: &F, n: usize) -> F {
    let first = -(b.clone() * g[n - 1].clone());
    if n >= 2 {
        first - a.clone() * F::from((n - 1) as i64) * g[n - 2].clone()
    } else {
        first
    }
}

fn check_recursion_range<F: Field>(
    g: &GammaSeq<F>,
    a: &F,
    b: &F,
    from: usize,
    n_max: usize,
) -> Result<Check> {
    let gs = g.gammas();
    if gs.len() <= n_max {
        return Err(Error::SequenceTooShort {
            needed: n_max + 1,
            got: gs.len(),
        });
    }
    Ok((from..=n_max)
        .find(|&n| gs[n] != recursion_rhs(gs, a, b, n))
        .map_or(Check::Holds, Check::FailsAt))
}

/// Recovers `(γ_0, α, β)` if `γ_1..=γ_N` follow the exponential-form
/// recursion; otherwise reports the first failing index.
pub fn classify_gamma<F: Field>(g: &GammaSeq<F>, n_max: usize) -> Result<ClassifyResult<F>> {
    let needed = MIN_LEN.max(n_max + 1);
    if g.len() < needed {
        return Err(Error::SequenceTooShort {
            needed,
            got: g.len(),
        });
    }
    let gs = g.gammas();
    let (a, b) = match forced_params(gs) {
        Ok(ab) => ab,
        Err((index, reason)) => return Ok(ClassifyResult::NotOps { index, reason }),
    };
    match check_recursion_range(g, &a, &b, 1, n_max)? {
        Check::Holds => Ok(ClassifyResult::ExpForm(ExpOpParams::new(
            gs[0].clone(),
            a,
            b,
        )?)),
        Check::FailsAt(index) => Ok(ClassifyResult::NotOps {
            index,
            reason: NotOpsReason::Recursion,
        }),
    }
}

/// The coefficient recursion equivalent to `φ'' + (ax + b) φ' + a φ = 0`,
/// checked for `2 ≤ n ≤ N`. It says nothing about `γ_1`.
pub fn check_ode_coeffs<F: Field>(g: &GammaSeq<F>, a: &F, b: &F, n_max: usize) -> Result<Check> {
    check_recursion_range(g, a, b, 2, n_max)
}

/// The same recursion for `1 ≤ n ≤ N`, which also pins `γ_1 = −b γ_0`.
pub fn check_recursion_from_one<F: Field>(
    g: &GammaSeq<F>,
    a: &F,
    b: &F,
    n_max: usize,
) -> Result<Check> {
    check_recursion_range(g, a, b, 1, n_max)
}

/// Checks the polynomial three-term recurrence
/// `P_n = (x − b) P_{n−1} − a(n−1) P_{n−2}` on the images
/// `P_n = φ(D) x^n`, `1 ≤ n ≤ N`, with `(a, b)` forced by `γ_0..γ_2`.
///
/// Degenerate sequences fail at the same index [`classify_gamma`] reports.
pub fn verify_ttr_equivalence<F: Field>(g: &GammaSeq<F>, n_max: usize) -> Result<Check> {
    let needed = 3.max(n_max + 1);
    if g.len() < needed {
        return Err(Error::SequenceTooShort {
            needed,
            got: g.len(),
        });
    }
    let (a, b) = match forced_params(g.gammas()) {
        Ok(ab) => ab,
        Err((index, _)) => return Ok(Check::FailsAt(index)),
    };
    let x_minus_b = Poly::linear_root(b);
    let mut prev2 = Poly::zero();
    let mut prev1 = g.apply_gamma(0)?;
    for n in 1..=n_max {
        let p_n = g.apply_gamma(n)?;
        let lam = a.clone() * F::from((n - 1) as i64);
        let rhs = &(&x_minus_b * &prev1) - &prev2.scale(&lam);
        if p_n != rhs {
            return Ok(Check::FailsAt(n));
        }
        prev2 = prev1;
        prev1 = p_n;
    }
    Ok(Check::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{factorial, GaussianRational, Rational};
    use alloc::vec::Vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn gseq(cs: &[i64]) -> GammaSeq<Rational> {
        GammaSeq::new(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn factorials(n: u64) -> GammaSeq<Rational> {
        GammaSeq::new((0..=n).map(|k| Rational::from(factorial(k))).collect())
    }

    #[test]
    fn classify_hermite() {
        let res = classify_gamma(&gseq(&[1, 0, -1, 0, 3, 0, -15]), 6).unwrap();
        let expected = ExpOpParams::new(q(1, 1), q(1, 1), q(0, 1)).unwrap();
        assert_eq!(res, ClassifyResult::ExpForm(expected));
    }

    #[test]
    fn classify_factorials_fails_at_three() {
        // b = −1, a = −1, then −b·γ₂ − a·2·γ₁ = 4 ≠ 6
        let res = classify_gamma(&factorials(8), 8).unwrap();
        assert_eq!(
            res,
            ClassifyResult::NotOps {
                index: 3,
                reason: NotOpsReason::Recursion
            }
        );
    }

    #[test]
    fn classify_degenerate_cases() {
        let res = classify_gamma(&gseq(&[0, 1, 2, 3]), 3).unwrap();
        assert_eq!(
            res,
            ClassifyResult::NotOps {
                index: 0,
                reason: NotOpsReason::ZeroGamma0
            }
        );
        // geometric γ_n = 2^n: a = 0
        let res = classify_gamma(&gseq(&[1, -2, 4, -8, 16]), 4).unwrap();
        assert_eq!(
            res,
            ClassifyResult::NotOps {
                index: 2,
                reason: NotOpsReason::ZeroAlpha
            }
        );
    }

    #[test]
    fn classify_length_errors() {
        assert_eq!(
            classify_gamma(&gseq(&[1, 0, -1]), 2),
            Err(Error::SequenceTooShort { needed: 4, got: 3 })
        );
        assert_eq!(
            classify_gamma(&gseq(&[1, 0, -1, 0]), 5),
            Err(Error::SequenceTooShort { needed: 6, got: 4 })
        );
    }

    #[test]
    fn classify_complex_parameters() {
        let params = ExpOpParams::new(
            GaussianRational::new(q(2, 1), q(-1, 3)),
            GaussianRational::i(),
            GaussianRational::new(q(1, 2), q(3, 1)),
        )
        .unwrap();
        let g = params.exp_gamma(12);
        assert_eq!(
            classify_gamma(&g, 12).unwrap(),
            ClassifyResult::ExpForm(params)
        );
    }

    #[test]
    fn ode_coeff_examples() {
        let herm = gseq(&[1, 0, -1, 0, 3, 0, -15]);
        assert_eq!(
            check_ode_coeffs(&herm, &q(1, 1), &q(0, 1), 6).unwrap(),
            Check::Holds
        );
        let fact = factorials(6);
        assert_eq!(
            check_ode_coeffs(&fact, &q(-1, 1), &q(-1, 1), 6).unwrap(),
            Check::FailsAt(3)
        );
        assert_eq!(
            check_ode_coeffs(&fact, &q(9, 1), &q(9, 1), 1).unwrap(),
            Check::Holds
        );
    }

    #[test]
    fn ode_range_ignores_first_coefficient() {
        // γ_1 = 5 is not −b·γ_0, but γ_n for n ≥ 2 follows the recursion.
        let (a, b) = (q(2, 1), q(1, 1));
        let mut gs: Vec<Rational> = alloc::vec![q(1, 1), q(5, 1)];
        for n in 2..=8usize {
            let next = -(b.clone() * gs[n - 1].clone())
                - a.clone() * Rational::from(n as i64 - 1) * gs[n - 2].clone();
            gs.push(next);
        }
        let g = GammaSeq::new(gs);
        assert_eq!(check_ode_coeffs(&g, &a, &b, 8).unwrap(), Check::Holds);
        assert_eq!(
            check_recursion_from_one(&g, &a, &b, 8).unwrap(),
            Check::FailsAt(1)
        );
    }

    #[test]
    fn ttr_equivalence_examples() {
        let herm = ExpOpParams::new(q(1, 1), q(1, 1), q(0, 1))
            .unwrap()
            .exp_gamma(15);
        assert_eq!(verify_ttr_equivalence(&herm, 15).unwrap(), Check::Holds);
        let g = ExpOpParams::new(q(3, 1), q(1, 2), q(-2, 3))
            .unwrap()
            .exp_gamma(12);
        assert_eq!(verify_ttr_equivalence(&g, 12).unwrap(), Check::Holds);
        let mut corrupted = g.clone().into_gammas();
        corrupted[5] = corrupted[5].clone() + q(1, 1);
        let corrupted = GammaSeq::new(corrupted);
        assert_eq!(
            verify_ttr_equivalence(&corrupted, 12).unwrap(),
            Check::FailsAt(5)
        );
        assert_eq!(
            classify_gamma(&corrupted, 12).unwrap(),
            ClassifyResult::NotOps {
                index: 5,
                reason: NotOpsReason::Recursion
            }
        );
    }
}
