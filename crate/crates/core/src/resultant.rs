//! Sylvester matrices, resultants and discriminants.
//!
//! The resultant is the determinant of the Sylvester matrix. Three routes
//! compute it: fraction-free Bareiss elimination of the matrix itself, the
//! subresultant pseudo-remainder sequence, and, for integer coefficients,
//! evaluation and interpolation modulo primes. [`resultant`] picks one by
//! ring and size; every route is public so they can be checked against
//! each other.
//!
//! Discriminants follow the signed convention
//! `Res(f, f', x) = Lc(f, x) * Dis(f, x)`, so for a quadratic
//! `Dis(a x^2 + b x + c) = -(b^2 - 4 a c)`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Poly, Variable};
use crate::prs::{next_h, Recursive};
use crate::scalar::Coefficient;

/// The `(m + n) x (m + n)` Sylvester matrix of `f` (degree `n`) and `g`
/// (degree `m`) in one variable: `m` shifted coefficient rows of `f`
/// followed by `n` shifted rows of `g`, highest power first.
#[derive(Clone, Debug)]
pub struct SylvesterMatrix<C> {
    rows: Vec<Vec<Poly<C>>>,
    deg_f: usize,
    deg_g: usize,
}

impl<C: Coefficient> PartialEq for SylvesterMatrix<C> {
    fn eq(&self, other: &Self) -> bool {
        self.deg_f == other.deg_f && self.deg_g == other.deg_g && self.rows == other.rows
    }
}

impl<C: Coefficient> SylvesterMatrix<C> {
    pub fn new(f: &Poly<C>, g: &Poly<C>, x: &Variable) -> Result<Self> {
        let (nf, ng) = resultant_degrees("sylvester_matrix", f, g, x)?;
        let zero = Poly::zero(f.order());
        let size = nf + ng;
        let mut fc = f.coefficients_in(x.index());
        let mut gc = g.coefficients_in(x.index());
        fc.reverse();
        gc.reverse();
        let mut rows = Vec::with_capacity(size);
        for shift in 0..ng {
            let mut row = vec![zero.clone(); size];
            row[shift..shift + nf + 1].clone_from_slice(&fc);
            rows.push(row);
        }
        for shift in 0..nf {
            let mut row = vec![zero.clone(); size];
            row[shift..shift + ng + 1].clone_from_slice(&gc);
            rows.push(row);
        }
        Ok(SylvesterMatrix {
            rows,
            deg_f: nf,
            deg_g: ng,
        })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Poly<C>>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> &Poly<C> {
        &self.rows[row][col]
    }

    /// Degree of the first polynomial (number of `g` rows).
    pub fn deg_f(&self) -> usize {
        self.deg_f
    }

    /// Degree of the second polynomial (number of `f` rows).
    pub fn deg_g(&self) -> usize {
        self.deg_g
    }

    pub fn determinant(&self) -> Result<Poly<C>> {
        bareiss_determinant(self.rows.clone())
    }
}

impl<C: Coefficient> fmt::Display for SylvesterMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn sylvester_matrix<C: Coefficient>(
    f: &Poly<C>,
    g: &Poly<C>,
    x: &Variable,
) -> Result<SylvesterMatrix<C>> {
    SylvesterMatrix::new(f, g, x)
}

fn resultant_degrees<C: Coefficient>(
    op: &'static str,
    f: &Poly<C>,
    g: &Poly<C>,
    x: &Variable,
) -> Result<(usize, usize)> {
    f.check_order(g)?;
    f.check_var(x)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial(op));
    }
    let nf = f.degree(x) as usize;
    let ng = g.degree(x) as usize;
    if nf + ng == 0 {
        return Err(Error::ConstantInVariable {
            op,
            var: x.name().to_string(),
        });
    }
    Ok((nf, ng))
}

/// Determinant of a square matrix over a polynomial ring by fraction-free
/// (Bareiss) elimination with row pivoting. Every division is exact; an
/// inexact one is reported as an internal error.
pub fn bareiss_determinant<C: Coefficient>(mut m: Vec<Vec<Poly<C>>>) -> Result<Poly<C>> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(n > 0, "empty matrix");
    let order = m[0][0].order().clone();
    let mut negate = false;
    let mut prev = Poly::one(&order);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Poly::zero(&order));
            };
            m.swap(k, p);
            negate = !negate;
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let num = &(&row[j] * pivot) - &(&row[k] * &pivot_row[j]);
                row[j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Internal("inexact Bareiss division".into()))?;
            }
            row[k] = Poly::zero(&order);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Resultant as the Bareiss determinant of the Sylvester matrix.
pub fn resultant_bareiss<C: Coefficient>(f: &Poly<C>, g: &Poly<C>, x: &Variable) -> Result<Poly<C>> {
    let (nf, ng) = resultant_degrees("resultant", f, g, x)?;
    if let Some(r) = degenerate_resultant(f, g, nf, ng) {
        return Ok(r);
    }
    SylvesterMatrix::new(f, g, x)?.determinant()
}

/// Resultant by the subresultant pseudo-remainder sequence.
pub fn resultant_prs<C: Coefficient>(f: &Poly<C>, g: &Poly<C>, x: &Variable) -> Result<Poly<C>> {
    let (nf, ng) = resultant_degrees("resultant", f, g, x)?;
    if let Some(r) = degenerate_resultant(f, g, nf, ng) {
        return Ok(r);
    }
    let order = f.order();
    let mut a = Recursive::new(f, x.index());
    let mut b = Recursive::new(g, x.index());
    let mut negate = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        negate = (nf * ng) % 2 == 1;
    }
    let mut sg = Poly::one(order);
    let mut sh = Poly::one(order);
    loop {
        let delta = a.degree() - b.degree();
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem(&b);
        if r.is_zero() {
            return Ok(Poly::zero(order));
        }
        a = b;
        b = r.div_exact(&(&sg * &sh.pow(delta as u32)))?;
        sg = a.lc().clone();
        sh = next_h(&sh, &sg, delta)?;
        if b.degree() == 0 {
            break;
        }
    }
    let da = a.degree() as u32;
    let res = b
        .lc()
        .pow(da)
        .div_exact(&sh.pow(da - 1))
        .ok_or_else(|| Error::Internal("inexact final subresultant division".into()))?;
    Ok(if negate { -res } else { res })
}

/// Smallest Sylvester matrix size routed to the ring-specific resultant.
const MODULAR_MIN_SIZE: usize = 3;

/// `Res(f, c) = c^deg f` and `Res(c, g) = c^deg g` for `c` constant in `x`.
fn degenerate_resultant<C: Coefficient>(f: &Poly<C>, g: &Poly<C>, nf: usize, ng: usize) -> Option<Poly<C>> {
    if ng == 0 {
        Some(g.pow(nf as u32))
    } else if nf == 0 {
        Some(f.pow(ng as u32))
    } else {
        None
    }
}

/// Resultant by evaluation, interpolation and Chinese remaindering.
pub fn resultant_modular(f: &Poly<BigInt>, g: &Poly<BigInt>, x: &Variable) -> Result<Poly<BigInt>> {
    let (nf, ng) = resultant_degrees("resultant", f, g, x)?;
    if let Some(r) = degenerate_resultant(f, g, nf, ng) {
        return Ok(r);
    }
    crate::modular::resultant(f, g, x.index())
        .ok_or_else(|| Error::Internal("ran out of primes for the modular resultant".into()))
}

/// Resultant of `f` and `g` with respect to `x`, a polynomial free of `x`.
pub fn resultant<C: Coefficient>(f: &Poly<C>, g: &Poly<C>, x: &Variable) -> Result<Poly<C>> {
    let (nf, ng) = resultant_degrees("resultant", f, g, x)?;
    if nf > 0 && ng > 0 && nf + ng >= MODULAR_MIN_SIZE {
        if let Some(r) = C::fast_resultant(f, g, x) {
            return Ok(r);
        }
    }
    if nf > 2 && ng > 2 {
        resultant_prs(f, g, x)
    } else {
        resultant_bareiss(f, g, x)
    }
}

/// Discriminant, computed as the exact quotient `Res(f, f', x) / Lc(f, x)`.
/// Linear `f` has discriminant 1.
pub fn discriminant<C: Coefficient>(f: &Poly<C>, x: &Variable) -> Result<Poly<C>> {
    f.check_var(x)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("discriminant"));
    }
    if f.degree(x) < 1 {
        return Err(Error::ConstantInVariable {
            op: "discriminant",
            var: x.name().to_string(),
        });
    }
    let df = f.derivative(x)?;
    let res = resultant(f, &df, x)?;
    let lc = f.leading_coefficient(x)?;
    res.div_exact(&lc)
        .ok_or_else(|| Error::Internal("resultant not divisible by leading coefficient".into()))
}

/// Sign `(-1)^(m n)` relating `Res(f, g)` and `Res(g, f)`.
pub fn swap_sign(deg_f: i64, deg_g: i64) -> i32 {
    if (deg_f * deg_g).abs() % 2 == 1 {
        -1
    } else {
        1
    }
}
