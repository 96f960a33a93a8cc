//! Exact real-root counting and isolation with Sturm sequences.
//!
//! Counting is done on the squarefree part, so "all roots real" means every
//! complex root (with multiplicity) is real. Nonzero constants count as
//! real-rooted; the zero polynomial is rejected.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::diffop::ExpOpParams;
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::poly::Poly;

/// Real roots of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub all_roots_real: bool,
    /// One interval per distinct real root, in increasing order. `(lo, hi)`
    /// with `lo < hi` means the root lies in `(lo, hi]`; `lo == hi` means the
    /// root is exactly `lo`.
    pub isolating_intervals: Vec<(Rational, Rational)>,
}

/// `p / gcd(p, p')`, made monic.
pub fn squarefree(p: &Poly<Rational>) -> Result<Poly<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = primitive_gcd(p, &p.derivative(1))?;
    let (quot, _) = p.div_rem(&g)?;
    Ok(quot.monic())
}

/// Scales by a positive rational so the coefficients are coprime integers.
/// Signs at every point are unchanged.
fn primitive(p: &Poly<Rational>) -> Poly<Rational> {
    if p.is_zero() {
        return p.clone();
    }
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let gcd = p.coeffs().iter().fold(BigInt::zero(), |acc, c| {
        acc.gcd(&(c.numer() * (&lcm / c.denom())))
    });
    p.scale(&Rational::new(lcm, gcd.abs()))
}

/// Greatest common divisor up to a constant factor. Remainders are made
/// primitive at each step to keep coefficients small.
fn primitive_gcd(a: &Poly<Rational>, b: &Poly<Rational>) -> Result<Poly<Rational>> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = primitive(&r);
    }
    Ok(a)
}

/// Sign of `p(x)` for `p` with integer coefficients, by Horner's rule on
/// `den^deg · p(num/den)` so no fraction is ever reduced.
fn sign_at(p: &Poly<Rational>, x: &Rational) -> i32 {
    let (num, den) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    for c in p.coeffs().iter().rev() {
        debug_assert!(c.is_integer());
        acc = acc * num + c.numer() * &den_pow;
        den_pow *= den;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Sturm chain `s_0 = p`, `s_1 = p'`, `s_{i+1} = −rem(s_{i−1}, s_i)`, each
/// member normalized by a positive factor.
pub fn sturm_chain(p: &Poly<Rational>) -> Result<Vec<Poly<Rational>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = alloc::vec![primitive(p)];
    let d = primitive(&p.derivative(1));
    if d.is_zero() {
        return Ok(chain);
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (_, rem) = chain[n - 2].div_rem(&chain[n - 1])?;
        if rem.is_zero() {
            break;
        }
        chain.push(primitive(&-rem));
    }
    Ok(chain)
}

fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[Poly<Rational>], x: &Rational) -> usize {
    count_variations(chain.iter().map(|p| sign_at(p, x)))
}

fn variations_at_infinity(chain: &[Poly<Rational>], positive: bool) -> usize {
    count_variations(chain.iter().map(|p| {
        let lead = p.leading_coeff().map_or(0, Rational::signum);
        let odd = p.degree().unwrap_or(0) % 2 == 1;
        if !positive && odd {
            -lead
        } else {
            lead
        }
    }))
}

/// A power of two strictly greater than the absolute value of every root
/// (Cauchy bound `1 + max |a_i / a_n|`).
fn root_bound(p: &Poly<Rational>) -> Rational {
    let lead = p.leading_coeff().expect("nonzero polynomial").abs();
    let max_ratio = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / lead.clone())
        .max()
        .unwrap_or_else(Rational::zero);
    let cauchy = max_ratio + Rational::one();
    let mut bound = Rational::one();
    while bound <= cauchy {
        bound *= Rational::from(2);
    }
    bound
}

/// Squarefree polynomial together with its Sturm chain; counts roots in
/// half-open intervals `(lo, hi]`.
struct SturmIsolator {
    poly: Poly<Rational>,
    chain: Vec<Poly<Rational>>,
}

impl SturmIsolator {
    fn new(squarefree: Poly<Rational>) -> Result<Self> {
        let chain = sturm_chain(&squarefree)?;
        Ok(SturmIsolator {
            poly: squarefree,
            chain,
        })
    }

    fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        variations_at(&self.chain, lo) - variations_at(&self.chain, hi)
    }

    fn count_all(&self) -> usize {
        variations_at_infinity(&self.chain, false) - variations_at_infinity(&self.chain, true)
    }

    /// Collapses `(lo, hi]` to `[hi, hi]` when `hi` is the root.
    fn tighten(&self, lo: Rational, hi: Rational) -> (Rational, Rational) {
        if sign_at(&self.chain[0], &hi) == 0 {
            (hi.clone(), hi)
        } else {
            (lo, hi)
        }
    }

    /// Isolating intervals in increasing order by bisection from the
    /// root bound.
    fn isolate(&self) -> Vec<(Rational, Rational)> {
        let mut out = Vec::new();
        if self.poly.degree().unwrap_or(0) == 0 {
            return out;
        }
        let bound = root_bound(&self.poly);
        let mut stack = alloc::vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            match self.count_in(&lo, &hi) {
                0 => {}
                1 => out.push(self.tighten(lo, hi)),
                _ => {
                    let mid = lo.midpoint(&hi);
                    // Right half first so the left half is popped first.
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        out
    }

    /// Halves an isolating interval, keeping the half that holds the root.
    fn refine(&self, interval: &(Rational, Rational)) -> (Rational, Rational) {
        let (lo, hi) = interval;
        if lo == hi {
            return interval.clone();
        }
        let mid = lo.midpoint(hi);
        if self.count_in(lo, &mid) == 1 {
            self.tighten(lo.clone(), mid)
        } else {
            self.tighten(mid, hi.clone())
        }
    }
}

/// Distinct real roots of `p`, with isolating intervals.
pub fn count_real_roots(p: &Poly<Rational>) -> Result<RootReport> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let sf = squarefree(p)?;
    let sf_degree = sf.degree().unwrap_or(0);
    let iso = SturmIsolator::new(sf)?;
    let distinct = iso.count_all();
    let intervals = iso.isolate();
    debug_assert_eq!(intervals.len(), distinct);
    Ok(RootReport {
        degree,
        distinct_real_roots: distinct,
        all_roots_real: distinct == sf_degree,
        isolating_intervals: intervals,
    })
}

pub fn is_real_rooted(p: &Poly<Rational>) -> Result<bool> {
    Ok(count_real_roots(p)?.all_roots_real)
}

/// Real-rooted with no repeated roots.
fn check_distinct_real(p: &Poly<Rational>, name: &'static str) -> Result<SturmIsolator> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let sf = squarefree(p)?;
    if sf.degree() != Some(degree) {
        return Err(Error::RepeatedRoot(name));
    }
    let iso = SturmIsolator::new(sf)?;
    if iso.count_all() != degree {
        return Err(Error::NotRealRooted(name));
    }
    Ok(iso)
}

/// Strict interlacing: `deg p = deg q + 1` and exactly one root of `q` lies
/// strictly between each pair of consecutive roots of `p`. A shared root
/// yields `false`.
pub fn interlace(p: &Poly<Rational>, q: &Poly<Rational>) -> Result<bool> {
    let p_deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let q_deg = q.degree().ok_or(Error::ZeroPolynomial)?;
    if p_deg != q_deg + 1 {
        return Err(Error::DegreeMismatch {
            expected: q_deg + 1,
            got: p_deg,
        });
    }
    let p_iso = check_distinct_real(p, "p")?;
    let q_iso = check_distinct_real(q, "q")?;
    if p.gcd(q).degree() != Some(0) {
        return Ok(false);
    }

    // (interval, belongs to p)
    let mut roots: Vec<((Rational, Rational), bool)> = p_iso
        .isolate()
        .into_iter()
        .map(|i| (i, true))
        .chain(q_iso.isolate().into_iter().map(|i| (i, false)))
        .collect();
    // With no shared roots every pair can be separated by refinement; an
    // interval ordered before another satisfies `hi <= next.lo`.
    loop {
        roots.sort_by(|a, b| a.0 .0.cmp(&b.0 .0).then_with(|| a.0 .1.cmp(&b.0 .1)));
        let overlap =
            (0..roots.len().saturating_sub(1)).find(|&i| roots[i].0 .1 > roots[i + 1].0 .0);
        let Some(i) = overlap else { break };
        for j in [i, i + 1] {
            let (ref interval, from_p) = roots[j];
            let iso = if from_p { &p_iso } else { &q_iso };
            roots[j].0 = iso.refine(interval);
        }
    }
    let expected = (0..roots.len()).map(|i| i % 2 == 0);
    Ok(roots.iter().map(|r| r.1).eq(expected))
}

/// Applies `γ₀ exp(−α D²/2 − β D)` to a real-rooted `f` and reports whether
/// the image is real-rooted.
pub fn preservation_test(params: &ExpOpParams<Rational>, f: &Poly<Rational>) -> Result<bool> {
    if !params.alpha().is_positive() {
        return Err(Error::NotPositive("alpha"));
    }
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !is_real_rooted(f)? {
        return Err(Error::NotRealRooted("f"));
    }
    let image = params.exp_gamma(degree).to_diffop().apply(f);
    is_real_rooted(&image)
}
