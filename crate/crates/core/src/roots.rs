//! Real root isolation for univariate integer polynomials with Sturm
//! sequences and dyadic bisection.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::basis::squarefree_part;
use crate::error::{Error, Result};
use crate::Polynomial;

/// Default refinement width, `2^-30`.
pub const DEFAULT_WIDTH_LOG2: u32 = 30;

/// Closed interval `[lo, hi]` containing exactly one real root. When the
/// root is rational it is reported in `exact_root` and `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub exact_root: Option<BigRational>,
}

impl IsolatingInterval {
    fn exact(r: BigRational) -> Self {
        IsolatingInterval {
            lo: r.clone(),
            hi: r.clone(),
            exact_root: Some(r),
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)?;
        if let Some(r) = &self.exact_root {
            write!(f, " = {r}")?;
        }
        Ok(())
    }
}

/// Dense univariate polynomial over the rationals, lowest power first.
#[derive(Clone, Debug, PartialEq)]
struct Dense(Vec<BigRational>);

impl Dense {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    fn derivative(&self) -> Dense {
        Dense(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    fn rem(&self, d: &Dense) -> Dense {
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let lead = d.0.last().unwrap();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let q = &r[top] / lead;
            for (i, c) in d.0.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = &r[idx] - &q * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Dense(r)
    }
}

/// Sturm sequence of a squarefree polynomial.
struct Sturm {
    chain: Vec<Dense>,
}

impl Sturm {
    fn new(p: Dense) -> Self {
        let mut chain = vec![p.clone(), p.derivative().trim()];
        loop {
            let n = chain.len();
            if chain[n - 1].0.is_empty() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.0.is_empty() {
                break;
            }
            chain.push(Dense(r.0.into_iter().map(|c| -c).collect()));
        }
        Sturm { chain }
    }

    /// Sign variations at `x`, zeros skipped.
    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in the open interval `(a, b)`.
    fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let at_b = usize::from(self.chain[0].sign_at(b) == 0);
        self.variations(a) - self.variations(b) - at_b
    }
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(2.into())
}

/// Converts a polynomial with at most one variable into dense integer
/// coefficients.
fn dense_integer_coefficients(p: &Polynomial) -> Result<Vec<BigInt>> {
    let support = p.support();
    if support.len() > 1 {
        return Err(Error::NotUnivariate);
    }
    let Some(&var) = support.first() else {
        return Ok(vec![p.constant_value().unwrap()]);
    };
    let deg = p.degree_in(var) as usize;
    let mut out = vec![BigInt::zero(); deg + 1];
    for (m, c) in p.terms() {
        out[m.exponent(var) as usize] = c.clone();
    }
    Ok(out)
}

/// Isolating intervals for the distinct real roots of `p`, ascending,
/// refined to width at most `2^-30`.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<IsolatingInterval>> {
    isolate_real_roots_with(p, DEFAULT_WIDTH_LOG2)
}

/// As [`isolate_real_roots`], refined to width at most `2^-width_log2`.
pub fn isolate_real_roots_with(p: &Polynomial, width_log2: u32) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("isolate_real_roots"));
    }
    dense_integer_coefficients(p)?;
    let sqf = squarefree_part(p)?;
    let coeffs = dense_integer_coefficients(&sqf)?;
    if coeffs.len() < 2 {
        return Ok(Vec::new());
    }
    let lead = coeffs.last().unwrap().abs();
    let dense = Dense(coeffs.iter().cloned().map(BigRational::from_integer).collect());
    let sturm = Sturm::new(dense.clone());
    let max_width = BigRational::new(BigInt::one(), BigInt::one() << width_log2);

    // Every root is strictly inside (-bound, bound).
    let ratio = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| BigRational::new(c.abs(), lead.clone()))
        .max()
        .unwrap_or_else(BigRational::zero);
    let mut bound = BigRational::one();
    while bound <= ratio.clone() + BigRational::one() {
        bound *= BigRational::from_integer(2.into());
    }

    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        match sturm.count_open(&a, &b) {
            0 => {}
            1 => out.push(refine(&dense, &sturm, &lead, a, b, &max_width)),
            _ => {
                let m = half(&a, &b);
                if dense.sign_at(&m) == 0 {
                    out.push(IsolatingInterval::exact(m.clone()));
                }
                stack.push((a, m.clone()));
                stack.push((m, b));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Shrinks `(a, b)`, which holds exactly one root, until it is narrow
/// enough, has non-root endpoints, and any rational root has been found.
fn refine(
    p: &Dense,
    sturm: &Sturm,
    lead: &BigInt,
    mut a: BigRational,
    mut b: BigRational,
    max_width: &BigRational,
) -> IsolatingInterval {
    let lead_q = BigRational::from_integer(lead.clone());
    let mut rational_checked = false;
    loop {
        let width = &b - &a;
        // A rational root r of a primitive integer polynomial has
        // denominator dividing the leading coefficient, so lead * r is an
        // integer; once lead * width < 1 there is at most one candidate.
        if !rational_checked && &width * &lead_q < BigRational::one() {
            rational_checked = true;
            let lo = (&a * &lead_q).ceil().to_integer();
            let hi = (&b * &lead_q).floor().to_integer();
            let mut k = lo;
            while k <= hi {
                let r = BigRational::new(k.clone(), lead.clone());
                if a < r && r < b && p.sign_at(&r) == 0 {
                    return IsolatingInterval::exact(r);
                }
                k += 1;
            }
        }
        let ends_clear = p.sign_at(&a) != 0 && p.sign_at(&b) != 0;
        if rational_checked && ends_clear && &width <= max_width {
            return IsolatingInterval {
                lo: a,
                hi: b,
                exact_root: None,
            };
        }
        let m = half(&a, &b);
        if p.sign_at(&m) == 0 {
            return IsolatingInterval::exact(m);
        }
        if sturm.count_open(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
}

/// Number of distinct real roots, from the Sturm sequence at +-infinity.
pub fn count_real_roots(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("count_real_roots"));
    }
    let coeffs = dense_integer_coefficients(&squarefree_part(p)?)?;
    if coeffs.len() < 2 {
        return Ok(0);
    }
    let sturm = Sturm::new(Dense(coeffs.into_iter().map(BigRational::from_integer).collect()));
    let sign_var = |signs: Vec<i32>| signs.windows(2).filter(|w| w[0] != w[1]).count();
    let at_pos: Vec<i32> = sturm.chain.iter().map(lead_sign).collect();
    let at_neg: Vec<i32> = sturm
        .chain
        .iter()
        .map(|q| {
            if q.degree() % 2 == 0 {
                lead_sign(q)
            } else {
                -lead_sign(q)
            }
        })
        .collect();
    Ok(sign_var(at_neg) - sign_var(at_pos))
}

fn lead_sign(p: &Dense) -> i32 {
    if p.0.last().unwrap().is_positive() {
        1
    } else {
        -1
    }
}

/// Shorthand for the rational `num / den`.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests;
