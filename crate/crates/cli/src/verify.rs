//! Self-check suites: each check reproduces one identity of the theory at a
//! chosen degree bound and reports pass or the first counterexample.
//!
//! Randomized checks draw from a ChaCha stream seeded by the caller, so a
//! report is a pure function of `(suite, n, seed)`.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use orthodiff_core::classify::{check_recursion_from_one, classify_gamma, verify_ttr_equivalence};
use orthodiff_core::laguerreop::{build_p, identity_check, verify_theorem, ACoeffs};
use orthodiff_core::opsfam::{
    hermite_gen, hermite_gen_family, laguerre_family, pd_check, PdVerdict, PdViolation,
};
use orthodiff_core::rootcheck::{count_real_roots, interlace, preservation_test};
use orthodiff_core::{
    binom, Check, ClassifyResult, DiffOp, ExpOpParams, Field, GammaSeq, GaussianRational, MonicTtr,
    NotOpsReason, Poly, Rational, TtrSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    MainTheorem,
    Laguerre,
    Roots,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::MainTheorem => "main-theorem",
            Suite::Laguerre => "laguerre",
            Suite::Roots => "roots",
        }
    }

    /// Smallest degree bound the suite accepts.
    pub fn min_n(self) -> usize {
        match self {
            Suite::All | Suite::MainTheorem => 3,
            Suite::Laguerre | Suite::Roots => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    /// Stable label naming the identity under test.
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub n: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn plain(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{status}  {:<30} {}", c.anchor, c.detail).unwrap();
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(
            out,
            "suite {} n={} seed={}: {} checks, {} failed",
            self.suite,
            self.n,
            self.seed,
            self.checks.len(),
            failed
        )
        .unwrap();
        out
    }
}

/// Runs `suite` at degree bound `n`. Callers enforce `n >= suite.min_n()`.
pub fn run(suite: Suite, n: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    if matches!(suite, Suite::All | Suite::MainTheorem) {
        checks.extend(main_theorem(n, &mut rng));
    }
    if matches!(suite, Suite::All | Suite::Laguerre) {
        checks.extend(laguerre(n));
    }
    if matches!(suite, Suite::All | Suite::Roots) {
        checks.extend(roots(n, &mut rng));
    }
    Report {
        suite: suite.as_str(),
        n,
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

fn check(anchor: &'static str, outcome: Result<String, String>) -> CheckReport {
    let passed = outcome.is_ok();
    CheckReport {
        anchor,
        passed,
        detail: outcome.unwrap_or_else(|e| e),
    }
}

fn rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    Rational::new(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

fn nonzero_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    loop {
        let r = rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

fn positive_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    nonzero_rational(rng, bound).abs()
}

fn gaussian(rng: &mut ChaCha8Rng, bound: i64) -> GaussianRational {
    GaussianRational::new(rational(rng, bound), rational(rng, bound))
}

fn nonzero_gaussian(rng: &mut ChaCha8Rng, bound: i64) -> GaussianRational {
    loop {
        let z = gaussian(rng, bound);
        if !z.is_zero() {
            return z;
        }
    }
}

fn recovers<F: Field>(params: ExpOpParams<F>, n: usize) -> Result<(), String> {
    let g = params.exp_gamma(n);
    let verdict = classify_gamma(&g, n).map_err(|e| e.to_string())?;
    if verdict != ClassifyResult::ExpForm(params.clone()) {
        return Err(format!(
            "parameters ({}, {}, {}) not recovered",
            params.gamma0(),
            params.alpha(),
            params.beta()
        ));
    }
    match verify_ttr_equivalence(&g, n).map_err(|e| e.to_string())? {
        Check::Holds => Ok(()),
        Check::FailsAt(k) => Err(format!("recurrence fails at n = {k}")),
    }
}

fn main_theorem(n: usize, rng: &mut ChaCha8Rng) -> Vec<CheckReport> {
    let mut out = Vec::new();

    out.push(check("exp-form-recovery", {
        let mut res = Ok(());
        for _ in 0..30 {
            let p = ExpOpParams::new(
                nonzero_rational(rng, 9),
                nonzero_rational(rng, 9),
                rational(rng, 9),
            )
            .expect("nonzero parameters");
            res = res.and_then(|_| recovers(p, n));
        }
        for _ in 0..10 {
            let p = ExpOpParams::new(
                nonzero_gaussian(rng, 5),
                nonzero_gaussian(rng, 5),
                gaussian(rng, 5),
            )
            .expect("nonzero parameters");
            res = res.and_then(|_| recovers(p, n));
        }
        res.map(|_| {
            format!("40 parameter triples (10 complex) recovered, recurrence holds to n = {n}")
        })
    }));

    out.push(check("non-exp-rejection", {
        let mut res = Ok(());
        for _ in 0..30 {
            let p = ExpOpParams::new(
                nonzero_rational(rng, 9),
                nonzero_rational(rng, 9),
                rational(rng, 9),
            )
            .expect("nonzero parameters");
            let j = rng.gen_range(3..=n);
            let mut gs = p.exp_gamma(n).into_gammas();
            gs[j] += nonzero_rational(rng, 9);
            let verdict = classify_gamma(&GammaSeq::new(gs), n).map_err(|e| e.to_string());
            let expected = ClassifyResult::NotOps {
                index: j,
                reason: NotOpsReason::Recursion,
            };
            res = res.and_then(|_| match verdict {
                Ok(v) if v == expected => Ok(()),
                _ => Err(format!("corruption at index {j} not reported")),
            });
        }
        let geometric = GammaSeq::new(
            (0..=n)
                .map(|k| Rational::from(2).powi(k as i32).unwrap())
                .collect(),
        );
        let mut zero_head = vec![Rational::zero(); n + 1];
        zero_head[1] = Rational::one();
        let degenerate = [
            (geometric, 2, NotOpsReason::ZeroAlpha),
            (GammaSeq::new(zero_head), 0, NotOpsReason::ZeroGamma0),
        ];
        for (g, index, reason) in degenerate {
            let verdict = classify_gamma(&g, n).map_err(|e| e.to_string());
            res = res.and_then(|_| match verdict {
                Ok(ClassifyResult::NotOps {
                    index: i,
                    reason: r,
                }) if i == index && r == reason => Ok(()),
                _ => Err(format!("degenerate sequence not rejected at index {index}")),
            });
        }
        res.map(|_| {
            "30 corrupted sequences and 2 degenerate sequences rejected at the right index"
                .to_owned()
        })
    }));

    out.push(check("condition-equivalence", {
        let mut res = Ok(());
        for trial in 0..30 {
            let g = if trial % 2 == 0 {
                GammaSeq::new((0..=n).map(|_| nonzero_rational(rng, 6)).collect())
            } else {
                ExpOpParams::new(
                    nonzero_rational(rng, 6),
                    nonzero_rational(rng, 6),
                    rational(rng, 6),
                )
                .expect("nonzero parameters")
                .exp_gamma(n)
            };
            res = res
                .and_then(|_| conditions_agree(&g, n).map_err(|e| format!("trial {trial}: {e}")));
        }
        res.map(|_| {
            "classification, recurrence and coefficient recursion agree on 30 sequences".to_owned()
        })
    }));

    out.push(check("shifted-hermite-identity", {
        let mut res = Ok(());
        for _ in 0..10 {
            let alpha = nonzero_rational(rng, 9);
            let beta = rational(rng, 9);
            let g = ExpOpParams::new(Rational::one(), alpha.clone(), beta.clone())
                .expect("nonzero parameters")
                .exp_gamma(n);
            let minus_beta = -beta.clone();
            if let Some(k) = (0..=n).find(|&k| {
                g.apply_gamma(k).ok() != Some(hermite_gen(&alpha, k).taylor_shift(&minus_beta))
            }) {
                res = Err(format!(
                    "alpha = {alpha}, beta = {beta}: mismatch at n = {k}"
                ));
                break;
            }
        }
        res.map(|_| format!("10 parameter pairs, n <= {n}"))
    }));

    out.push(check("positive-definite-hermite", {
        let mut res = Ok(());
        for _ in 0..10 {
            let alpha = positive_rational(rng, 9);
            let beta = rational(rng, 9);
            let pos = TtrSpec::Monic(MonicTtr::shifted_hermite(alpha.clone(), beta.clone(), n));
            let neg = TtrSpec::Monic(MonicTtr::shifted_hermite(-alpha.clone(), beta, n));
            let verdicts = (pd_check(&pos, n), pd_check(&neg, n));
            let expected_neg = PdVerdict::Violation {
                index: 2,
                reason: PdViolation::NonPositiveLambda,
            };
            if verdicts != (Ok(PdVerdict::PositiveDefiniteUpTo(n)), Ok(expected_neg)) {
                res = Err(format!(
                    "alpha = {alpha}: wrong positive-definiteness verdict"
                ));
                break;
            }
        }
        res.map(|_| format!("alpha > 0 positive-definite up to {n}, alpha < 0 rejected at n = 2"))
    }));

    out
}

fn conditions_agree(g: &GammaSeq<Rational>, n: usize) -> Result<(), String> {
    let verdict = classify_gamma(g, n).map_err(|e| e.to_string())?;
    let ttr = verify_ttr_equivalence(g, n).map_err(|e| e.to_string())?;
    let gs = g.gammas();
    let b = -(&gs[1] / &gs[0]);
    let a = (-(&b * &gs[1]) - gs[2].clone()) / gs[0].clone();
    let coeff = if a.is_zero() {
        Check::FailsAt(2)
    } else {
        check_recursion_from_one(g, &a, &b, n).map_err(|e| e.to_string())?
    };
    let from_verdict = match verdict {
        ClassifyResult::ExpForm(_) => Check::Holds,
        ClassifyResult::NotOps { index, .. } => Check::FailsAt(index),
    };
    if from_verdict == ttr && ttr == coeff {
        Ok(())
    } else {
        Err(format!(
            "verdicts differ: {from_verdict:?}, {ttr:?}, {coeff:?}"
        ))
    }
}

fn laguerre(n: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let zero = Rational::zero();

    out.push(check("laguerre-a-coefficients", {
        let (closed, recursive) = (ACoeffs::closed(n), ACoeffs::recursive(n));
        match (0..=n).find(|&r| closed.get(r) != recursive.get(r)) {
            None => Ok(format!("closed and recursive forms agree for r <= {n}")),
            Some(r) => Err(format!("forms differ at r = {r}")),
        }
    }));

    let extracted = DiffOp::extract(&laguerre_family(&zero, n));

    out.push(check("laguerre-operator-extraction", {
        match (0..=n).find(|&k| build_p(k) != extracted.pk()[k]) {
            None => Ok(format!("p_n matches the extracted operator for n <= {n}")),
            Some(k) => Err(format!("p_{k} differs from the extracted operator")),
        }
    }));

    out.push(check(
        "laguerre-operator-images",
        match verify_theorem(n) {
            Check::Holds => Ok(format!("operator maps x^n to L_n for n <= {n}")),
            Check::FailsAt(k) => Err(format!("image of x^{k} is not L_{k}")),
        },
    ));

    out.push(check("laguerre-double-sum", {
        match (0..=n).find(|&r| !identity_check(r)) {
            None => Ok(format!("double sum equals (-1)^r/r! for r <= {n}")),
            Some(r) => Err(format!("double sum wrong at r = {r}")),
        }
    }));

    out.push(check("laguerre-coefficient-scaling", {
        let pk = extracted.pk();
        let bad = (0..=n)
            .flat_map(|k| (0..=k).map(move |r| (k, r)))
            .find(|&(k, r)| pk[k].coeff(r) != binom(k as u64, r as i64) * pk[r].coeff(r));
        match bad {
            None => Ok(format!("q(n,r) = C(n,r) q(r,r) for r <= n <= {n}")),
            Some((k, r)) => Err(format!("scaling fails at n = {k}, r = {r}")),
        }
    }));

    out
}

/// Product of `deg` random rational linear factors.
fn random_real_rooted(rng: &mut ChaCha8Rng, deg: usize) -> Poly<Rational> {
    let roots: Vec<Rational> = (0..deg).map(|_| rational(rng, 8)).collect();
    Poly::from_roots(roots).scale(&nonzero_rational(rng, 5))
}

fn family_roots(name: &str, family: &[Poly<Rational>]) -> Result<(), String> {
    for (k, p) in family.iter().enumerate() {
        let report = count_real_roots(p).map_err(|e| e.to_string())?;
        if report.distinct_real_roots != k {
            return Err(format!(
                "{name}_{k} has {} distinct real roots",
                report.distinct_real_roots
            ));
        }
        if k >= 1 && !interlace(p, &family[k - 1]).map_err(|e| e.to_string())? {
            return Err(format!("{name}_{k} and {name}_{} do not interlace", k - 1));
        }
    }
    Ok(())
}

fn roots(n: usize, rng: &mut ChaCha8Rng) -> Vec<CheckReport> {
    let mut out = Vec::new();

    out.push(check("hermite-real-roots", {
        [Rational::one(), Rational::new(1, 2), Rational::from(3)]
            .iter()
            .try_for_each(|alpha| family_roots("H", &hermite_gen_family(alpha, n)))
            .map(|_| {
                format!(
                    "H_n^alpha, alpha in {{1, 1/2, 3}}: n simple real roots, interlacing, n <= {n}"
                )
            })
    }));

    out.push(check("laguerre-real-roots", {
        family_roots("L", &laguerre_family(&Rational::zero(), n))
            .map(|_| format!("L_n: n simple real roots, interlacing, n <= {n}"))
    }));

    out.push(check("real-root-preservation", {
        let mut res = Ok(());
        for _ in 0..20 {
            let deg = rng.gen_range(1..=n);
            let f = random_real_rooted(rng, deg);
            let params = ExpOpParams::new(
                nonzero_rational(rng, 6),
                positive_rational(rng, 6),
                rational(rng, 6),
            )
            .expect("nonzero parameters");
            match preservation_test(&params, &f) {
                Ok(true) => {}
                Ok(false) => {
                    res = Err(format!("image of {f} is not real-rooted"));
                    break;
                }
                Err(e) => {
                    res = Err(e.to_string());
                    break;
                }
            }
        }
        res.map(|_| format!("20 random real-rooted inputs of degree <= {n}"))
    }));

    out.push(check("sturm-root-count", {
        let mut res = Ok(());
        for _ in 0..30 {
            let deg = rng.gen_range(0..=n);
            let mut roots: Vec<Rational> = (0..deg).map(|_| rational(rng, 8)).collect();
            let mut f = Poly::from_roots(roots.clone());
            let complex_pairs = rng.gen_range(0..=2);
            for _ in 0..complex_pairs {
                let (c, d) = (rational(rng, 5), nonzero_rational(rng, 5));
                f = f * Poly::new(vec![&c * &c + &d * &d, -(c.clone() + c), Rational::one()]);
            }
            roots.sort();
            roots.dedup();
            match count_real_roots(&f) {
                Ok(r)
                    if r.distinct_real_roots == roots.len()
                        && r.all_roots_real == (complex_pairs == 0) => {}
                _ => {
                    res = Err(format!("wrong root count for {f}"));
                    break;
                }
            }
        }
        res.map(|_| format!("30 constructed polynomials of degree <= {}", n + 4))
    }));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::MainTheorem, Suite::Laguerre, Suite::Roots] {
            let report = run(suite, 6, 1);
            assert!(report.passed, "{}", report.plain());
        }
    }

    #[test]
    fn reports_are_reproducible() {
        assert_eq!(run(Suite::All, 5, 9), run(Suite::All, 5, 9));
    }
}
