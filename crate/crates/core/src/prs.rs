//! Recursive view of a polynomial as univariate in one variable, with
//! coefficients that are polynomials in the others, plus the
//! pseudo-remainder and subresultant bookkeeping shared by the GCD and the
//! resultant.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Poly, VariableOrder};
use crate::scalar::Coefficient;

#[derive(Clone, Debug)]
pub(crate) struct Recursive<C> {
    order: Arc<VariableOrder>,
    var: usize,
    /// Lowest power first, no trailing zeros.
    coeffs: Vec<Poly<C>>,
}

impl<C: Coefficient> Recursive<C> {
    pub(crate) fn new(p: &Poly<C>, var: usize) -> Self {
        Recursive {
            order: Arc::clone(p.order()),
            var,
            coeffs: p.coefficients_in(var),
        }
    }

    pub(crate) fn to_poly(&self) -> Poly<C> {
        Poly::from_coefficients_in(&self.order, self.var, &self.coeffs)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Panics on zero.
    pub(crate) fn lc(&self) -> &Poly<C> {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Poly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub(crate) fn scale(&self, k: &Poly<C>) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = &*c * k;
        }
        out.trim();
        out
    }

    pub(crate) fn div_exact(&self, k: &Poly<C>) -> Result<Self> {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = c
                .div_exact(k)
                .ok_or_else(|| Error::Internal("inexact division in remainder sequence".into()))?;
        }
        Ok(out)
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`. Requires `deg a >= deg b >= 0`.
    pub(crate) fn prem(&self, b: &Self) -> Self {
        let db = b.degree();
        assert!(db >= 0 && self.degree() >= db, "prem degree precondition");
        let lb = b.lc();
        let mut r = self.clone();
        let mut e = self.degree() - db + 1;
        while !r.is_zero() && r.degree() >= db {
            let dr = r.degree();
            let lead = r.lc().clone();
            let shift = (dr - db) as usize;
            for c in &mut r.coeffs {
                *c = &*c * lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r.coeffs[i + shift] = &r.coeffs[i + shift] - &(&lead * bc);
            }
            debug_assert!(r.coeffs[dr as usize].is_zero());
            r.trim();
            e -= 1;
        }
        if e > 0 && !r.is_zero() {
            r = r.scale(&lb.pow(e as u32));
        }
        r
    }
}

/// Next value of the subresultant scaling factor: `g^delta / h^(delta - 1)`.
pub(crate) fn next_h<C: Coefficient>(h: &Poly<C>, g: &Poly<C>, delta: i64) -> Result<Poly<C>> {
    match delta {
        0 => Ok(h.clone()),
        1 => Ok(g.clone()),
        _ => g
            .pow(delta as u32)
            .div_exact(&h.pow(delta as u32 - 1))
            .ok_or_else(|| Error::Internal("inexact subresultant scaling".into())),
    }
}
