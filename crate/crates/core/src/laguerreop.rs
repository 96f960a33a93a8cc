//! Closed-form differential operator for the standard Laguerre transform
//! `T[x^n] = L_n(x)`.
//!
//! The operator is `Σ_k p_k(x)/k! D^k` with
//! `p_n(x) = Σ_r C(n,r) a_r x^r` and `a_r = (−1)^r Σ_{l=0}^{r} C(r,l)/l!`.
//! The same `a_r` solve `a_r = (−1)^r/r! − Σ_{k<r} C(r,k) a_k` with `a_0 = 1`;
//! [`a_closed`] and [`a_recursive`] compute the two independently.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::diffop::DiffOp;
use crate::field::{binom, inv_factorial, Rational};
use crate::opsfam::laguerre;
use crate::poly::Poly;
use crate::Check;

fn sign(r: usize) -> Rational {
    if r.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `a_r = (−1)^r Σ_{l=0}^{r} C(r,l)/l!`.
pub fn a_closed(r: usize) -> Rational {
    let sum: Rational = (0..=r)
        .map(|l| binom(r as u64, l as i64) * inv_factorial(l as u64))
        .sum();
    sign(r) * sum
}

/// The coefficient table `a_0..=a_R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ACoeffs {
    a: Vec<Rational>,
}

impl ACoeffs {
    /// Table from the closed form.
    pub fn closed(r_max: usize) -> Self {
        ACoeffs {
            a: (0..=r_max).map(a_closed).collect(),
        }
    }

    /// Table from the recursion seeded with `a_0 = 1`.
    pub fn recursive(r_max: usize) -> Self {
        let mut a: Vec<Rational> = Vec::with_capacity(r_max + 1);
        a.push(Rational::one());
        for r in 1..=r_max {
            let lower: Rational = a
                .iter()
                .enumerate()
                .map(|(k, ak)| binom(r as u64, k as i64) * ak)
                .sum();
            a.push(sign(r) * inv_factorial(r as u64) - lower);
        }
        ACoeffs { a }
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.a
    }

    pub fn get(&self, r: usize) -> Option<&Rational> {
        self.a.get(r)
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

/// `a_r` from the recursion.
pub fn a_recursive(r: usize) -> Rational {
    ACoeffs::recursive(r).a.pop().expect("table is nonempty")
}

fn p_from_table(n: usize, a: &ACoeffs) -> Poly<Rational> {
    Poly::new(
        (0..=n)
            .map(|r| binom(n as u64, r as i64) * &a.a[r])
            .collect(),
    )
}

/// `p_n(x) = Σ_{r=0}^{n} C(n,r) a_r x^r`, using the closed-form `a_r`.
pub fn build_p(n: usize) -> Poly<Rational> {
    p_from_table(n, &ACoeffs::closed(n))
}

/// The operator `p_0..=p_N`.
pub fn laguerre_operator(n_max: usize) -> DiffOp<Rational> {
    let a = ACoeffs::closed(n_max);
    DiffOp::new((0..=n_max).map(|n| p_from_table(n, &a)).collect())
}

/// Evaluates `Σ_{k=0}^{r} Σ_{l=0}^{k} C(r,k) C(k,l) (−1)^k / l!` by direct
/// double summation.
pub fn double_sum(r: usize) -> Rational {
    let mut total = Rational::zero();
    for k in 0..=r {
        let outer = sign(k) * binom(r as u64, k as i64);
        for l in 0..=k {
            total += &outer * &binom(k as u64, l as i64) * inv_factorial(l as u64);
        }
    }
    total
}

/// Whether the double sum equals `(−1)^r / r!`.
pub fn identity_check(r: usize) -> bool {
    double_sum(r) == sign(r) * inv_factorial(r as u64)
}

/// Applies the closed-form operator to `x^n` and compares with `L_n` for
/// every `n ≤ N`.
pub fn verify_theorem(n_max: usize) -> Check {
    let op = laguerre_operator(n_max);
    let alpha = Rational::zero();
    (0..=n_max)
        .find(|&n| op.apply(&Poly::monomial(Rational::one(), n)) != laguerre(&alpha, n))
        .map_or(Check::Holds, Check::FailsAt)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn a_closed_examples() {
        assert_eq!(a_closed(0), q(1, 1));
        assert_eq!(a_closed(1), q(-2, 1));
        // 1 + 2 + 1/2
        assert_eq!(a_closed(2), q(7, 2));
        // −(1 + 3 + 3/2 + 1/6)
        assert_eq!(a_closed(3), q(-17, 3));
    }

    #[test]
    fn a_recursive_examples() {
        assert_eq!(a_recursive(0), q(1, 1));
        assert_eq!(a_recursive(1), q(-2, 1));
        assert_eq!(a_recursive(2), q(7, 2));
        assert_eq!(a_recursive(3), q(-17, 3));
    }

    #[test]
    fn a_alternates_in_sign() {
        for (r, a) in ACoeffs::closed(30).as_slice().iter().enumerate() {
            assert_eq!(a.signum(), if r % 2 == 0 { 1 } else { -1 }, "r={r}");
        }
    }

    #[test]
    fn build_p_examples() {
        assert_eq!(build_p(0), Poly::one());
        assert_eq!(build_p(1), Poly::new(alloc::vec![q(1, 1), q(-2, 1)]));
        assert_eq!(
            build_p(2),
            Poly::new(alloc::vec![q(1, 1), q(-4, 1), q(7, 2)])
        );
    }

    #[test]
    fn identity_examples() {
        assert!(identity_check(0));
        assert_eq!(double_sum(2), q(1, 2));
        assert!(identity_check(2));
        assert!(identity_check(30));
    }

    #[test]
    fn verify_theorem_small() {
        assert_eq!(verify_theorem(0), Check::Holds);
        assert_eq!(verify_theorem(2), Check::Holds);
        assert_eq!(verify_theorem(12), Check::Holds);
    }
}
