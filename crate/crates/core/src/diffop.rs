//! Linear polynomial transforms written as differential operators
//! `Σ_k p_k(x)/k! · D^k`.
//!
//! Every linear map on polynomials has a unique representation of this form,
//! and `p_n` depends only on the images of `1, x, …, x^n`. Operators are stored
//! truncated to finitely many `p_k`; acting on a polynomial of degree `d` only
//! reads `p_0..=p_d`, so truncation at the largest degree of interest loses
//! nothing.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{binom, inv_factorial, Field};
use crate::poly::Poly;

/// A finite differential operator; `pk[k]` is the polynomial `p_k(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp<F> {
    pk: Vec<Poly<F>>,
}

impl<F: Field> DiffOp<F> {
    pub fn new(pk: Vec<Poly<F>>) -> Self {
        DiffOp { pk }
    }

    /// The identity operator (`p_0 = 1`).
    pub fn identity() -> Self {
        DiffOp::new(alloc::vec![Poly::one()])
    }

    pub fn pk(&self) -> &[Poly<F>] {
        &self.pk
    }

    pub fn into_pk(self) -> Vec<Poly<F>> {
        self.pk
    }

    /// Number of stored coefficient polynomials.
    pub fn len(&self) -> usize {
        self.pk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pk.is_empty()
    }

    /// `Σ_k p_k · f^(k) / k!`. Missing `p_k` beyond the stored length are zero.
    pub fn apply(&self, f: &Poly<F>) -> Poly<F> {
        let Some(deg) = f.degree() else {
            return Poly::zero();
        };
        let mut out = Poly::zero();
        for (k, p) in self.pk.iter().enumerate().take(deg + 1) {
            if p.is_zero() {
                continue;
            }
            let term = f.derivative(k).scale(&F::from(inv_factorial(k as u64)));
            out = &out + &(p * &term);
        }
        out
    }

    /// Recovers `p_0..=p_N` from the images `T[x^n]`, `n = 0..=N`, via
    /// `p_n = T[x^n] − Σ_{k<n} p_k · C(n,k) x^(n−k)`.
    pub fn extract(images: &[Poly<F>]) -> Self {
        let mut pk: Vec<Poly<F>> = Vec::with_capacity(images.len());
        for (n, image) in images.iter().enumerate() {
            let mut p = image.clone();
            for (k, prev) in pk.iter().enumerate() {
                // D^k x^n / k! = C(n, k) x^(n−k)
                let c = F::from(binom(n as u64, k as i64));
                let shifted = Poly::monomial(c, n - k);
                p = &p - &(prev * &shifted);
            }
            pk.push(p);
        }
        DiffOp::new(pk)
    }
}

/// Coefficients `γ_k` of `φ(x) = Σ γ_k x^k / k!`, viewed as the
/// constant-coefficient operator `φ(D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSeq<F> {
    gammas: Vec<F>,
}

impl<F: Field> GammaSeq<F> {
    pub fn new(gammas: Vec<F>) -> Self {
        GammaSeq { gammas }
    }

    pub fn gammas(&self) -> &[F] {
        &self.gammas
    }

    pub fn into_gammas(self) -> Vec<F> {
        self.gammas
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<&F> {
        self.gammas.get(k)
    }

    /// `φ(D) x^n = Σ_{k=0}^{n} γ_{n−k} C(n,k) x^k`.
    pub fn apply_gamma(&self, n: usize) -> Result<Poly<F>> {
        if self.gammas.len() <= n {
            return Err(Error::SequenceTooShort {
                needed: n + 1,
                got: self.gammas.len(),
            });
        }
        let coeffs = (0..=n)
            .map(|k| self.gammas[n - k].clone() * F::from(binom(n as u64, k as i64)))
            .collect();
        Ok(Poly::new(coeffs))
    }

    /// The same operator with constant `p_k = γ_k`.
    pub fn to_diffop(&self) -> DiffOp<F> {
        DiffOp::new(self.gammas.iter().cloned().map(Poly::constant).collect())
    }
}

/// Parameters of `γ₀·exp(−α x²/2 − β x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpOpParams<F> {
    gamma0: F,
    alpha: F,
    beta: F,
}

impl<F: Field> ExpOpParams<F> {
    /// Fails when `gamma0` or `alpha` is zero.
    pub fn new(gamma0: F, alpha: F, beta: F) -> Result<Self> {
        if gamma0.is_zero() {
            return Err(Error::ZeroParameter("gamma0"));
        }
        if alpha.is_zero() {
            return Err(Error::ZeroParameter("alpha"));
        }
        Ok(ExpOpParams {
            gamma0,
            alpha,
            beta,
        })
    }

    pub fn gamma0(&self) -> &F {
        &self.gamma0
    }

    pub fn alpha(&self) -> &F {
        &self.alpha
    }

    pub fn beta(&self) -> &F {
        &self.beta
    }

    /// `γ_0..=γ_N` from `γ_n = −β γ_{n−1} − α (n−1) γ_{n−2}`, `γ_{−1} = 0`.
    pub fn exp_gamma(&self, n_max: usize) -> GammaSeq<F> {
        let mut gammas: Vec<F> = Vec::with_capacity(n_max + 1);
        gammas.push(self.gamma0.clone());
        for n in 1..=n_max {
            let prev = -self.beta.clone() * gammas[n - 1].clone();
            let term = if n >= 2 {
                self.alpha.clone() * F::from((n - 1) as i64) * gammas[n - 2].clone()
            } else {
                F::zero()
            };
            gammas.push(prev - term);
        }
        GammaSeq::new(gammas)
    }
}
