//! Sparse multivariate polynomials.

mod arith;
mod display;
mod integer;
mod monomial;
mod order;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Scalar};

#[cfg(test)]
pub(crate) use integer::prs_gcd as integer_prs_gcd;
pub(crate) use integer::{gcd as gcd_internal, gcd_cofactors};
pub use monomial::Monomial;
pub use order::{Variable, VariableOrder};

/// Sparse polynomial: a map from exponent vectors to nonzero coefficients.
///
/// Every polynomial carries its [`VariableOrder`]; arithmetic between
/// polynomials over different orders is an error (the checked methods) or a
/// panic (the operator impls).
#[derive(Clone, Debug)]
pub struct Poly<C> {
    order: Arc<VariableOrder>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.same_order(other) && self.terms == other.terms
    }
}

impl<C: Coefficient> Eq for Poly<C> {}

impl<C: Coefficient> std::hash::Hash for Poly<C> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn zero(order: &Arc<VariableOrder>) -> Self {
        Poly {
            order: Arc::clone(order),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: &Arc<VariableOrder>) -> Self {
        Self::constant(order, C::one())
    }

    pub fn constant(order: &Arc<VariableOrder>, c: C) -> Self {
        let mut p = Self::zero(order);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(order.arity()), c);
        }
        p
    }

    /// The polynomial `v`.
    pub fn var(order: &Arc<VariableOrder>, v: &Variable) -> Self {
        Self::term(order, Monomial::power(order.arity(), v.index(), 1), C::one())
    }

    pub fn term(order: &Arc<VariableOrder>, m: Monomial, c: C) -> Self {
        assert_eq!(m.arity(), order.arity(), "monomial arity mismatch");
        let mut p = Self::zero(order);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I>(order: &Arc<VariableOrder>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut p = Self::zero(order);
        for (m, c) in terms {
            assert_eq!(m.arity(), order.arity(), "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn order(&self) -> &Arc<VariableOrder> {
        &self.order
    }

    pub fn same_order(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.order, &other.order) || self.order == other.order
    }

    pub(crate) fn check_order(&self, other: &Self) -> Result<()> {
        if self.same_order(other) {
            Ok(())
        } else {
            Err(Error::OrderMismatch)
        }
    }

    pub(crate) fn check_var(&self, v: &Variable) -> Result<()> {
        if self.order.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVariable(v.name().to_string()))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial (`0` for the zero polynomial).
    pub fn constant_value(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Lexicographically greatest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.total_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Degree in `v`; `-1` for the zero polynomial.
    pub fn degree(&self, v: &Variable) -> i64 {
        self.degree_in(v.index())
    }

    pub(crate) fn degree_in(&self, index: usize) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.exponent(index)))
            .max()
            .unwrap_or(-1)
    }

    /// Indices of the variables that occur with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.order.arity())
            .filter(|&i| self.terms.keys().any(|m| m.exponent(i) > 0))
            .collect()
    }

    pub fn involves(&self, v: &Variable) -> bool {
        self.degree_in(v.index()) > 0
    }

    /// Coefficients of `self` as a polynomial in `index`, lowest power first.
    /// Each coefficient is free of that variable. Empty for zero.
    pub(crate) fn coefficients_in(&self, index: usize) -> Vec<Poly<C>> {
        let deg = self.degree_in(index);
        if deg < 0 {
            return Vec::new();
        }
        let mut out = vec![Poly::zero(&self.order); deg as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(index) as usize;
            out[e].terms.insert(m.with_exponent(index, 0), c.clone());
        }
        out
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub(crate) fn from_coefficients_in(
        order: &Arc<VariableOrder>,
        index: usize,
        coeffs: &[Poly<C>],
    ) -> Poly<C> {
        let mut p = Poly::zero(order);
        for (e, coeff) in coeffs.iter().enumerate() {
            for (m, c) in &coeff.terms {
                debug_assert_eq!(m.exponent(index), 0);
                p.terms.insert(m.with_exponent(index, e as u32), c.clone());
            }
        }
        p
    }

    /// Coefficient list in `v`, lowest power first.
    pub fn coefficients(&self, v: &Variable) -> Result<Vec<Poly<C>>> {
        self.check_var(v)?;
        Ok(self.coefficients_in(v.index()))
    }

    /// Coefficient of the highest power of `v`, as a polynomial in the
    /// remaining variables.
    pub fn leading_coefficient(&self, v: &Variable) -> Result<Poly<C>> {
        self.check_var(v)?;
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("leading_coefficient"));
        }
        Ok(self.leading_coefficient_in(v.index()))
    }

    pub(crate) fn leading_coefficient_in(&self, index: usize) -> Poly<C> {
        let deg = self.degree_in(index);
        let mut out = Poly::zero(&self.order);
        for (m, c) in &self.terms {
            if i64::from(m.exponent(index)) == deg {
                out.terms.insert(m.with_exponent(index, 0), c.clone());
            }
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: &Variable) -> Result<Poly<C>> {
        self.check_var(v)?;
        Ok(self.derivative_in(v.index()))
    }

    pub(crate) fn derivative_in(&self, index: usize) -> Poly<C> {
        let mut out = Poly::zero(&self.order);
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e > 0 {
                let k = C::from_integer(e.into());
                out.terms.insert(m.with_exponent(index, e - 1), c.clone() * k);
            }
        }
        out
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(&self.order);
        for (m, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                out.terms.insert(m.clone(), d);
            }
        }
        out
    }

    pub fn scale(&self, k: &C) -> Poly<C> {
        self.map_coefficients(|c| {
            let mut c = c.clone();
            c *= k;
            c
        })
    }

    /// Divides every coefficient by `k`; `None` if some division is inexact.
    pub fn div_coefficient(&self, k: &C) -> Option<Poly<C>> {
        let mut out = Poly::zero(&self.order);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.exact_div(k)?);
        }
        Some(out)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly<C>) -> Option<Poly<C>> {
        assert!(self.same_order(d), "order mismatch in div_exact");
        if d.is_zero() {
            return None;
        }
        if let Some(k) = d.constant_value() {
            return self.div_coefficient(&k);
        }
        let (dm, dc) = d.leading_term().unwrap();
        let mut quotient = BTreeMap::new();
        let mut rem = self.clone();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(dm)?;
            let qc = c.exact_div(dc)?;
            for (tm, tc) in &d.terms {
                let mut t = tc.clone();
                t *= &qc;
                rem.sub_term(tm.mul(&qm), &t);
            }
            debug_assert!(rem.leading_term().is_none_or(|(lm, _)| *lm < qm.mul(dm)));
            quotient.insert(qm, qc);
        }
        Some(Poly {
            order: Arc::clone(&self.order),
            terms: quotient,
        })
    }

    /// Flips the sign so that the leading coefficient is positive.
    pub fn sign_normalized(self) -> Poly<C> {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self,
        }
    }

    pub fn is_sign_normalized(&self) -> bool {
        self.leading_term().is_none_or(|(_, c)| c.is_positive())
    }

    /// Evaluates at an assignment covering every variable that occurs.
    pub fn evaluate<S: Scalar>(&self, assignment: &BTreeMap<Variable, S>) -> Result<S> {
        let mut values: Vec<Option<S>> = vec![None; self.order.arity()];
        for (v, s) in assignment {
            self.check_var(v)?;
            values[v.index()] = Some(s.clone());
        }
        for i in self.support() {
            if values[i].is_none() {
                return Err(Error::MissingAssignment(self.order.names()[i].clone()));
            }
        }
        let values: Vec<S> = values.into_iter().map(|v| v.unwrap_or_else(S::zero)).collect();
        Ok(self.eval_at(&values))
    }

    /// Evaluates at a point given positionally (one value per variable).
    pub fn eval_at<S: Scalar>(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.order.arity(), "point arity mismatch");
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t: S = c.to_scalar();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes constants for some variables; the result keeps the same
    /// order and is free of the substituted variables.
    pub fn specialize(&self, assignment: &BTreeMap<Variable, C>) -> Result<Poly<C>> {
        for v in assignment.keys() {
            self.check_var(v)?;
        }
        let mut out = Poly::zero(&self.order);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = m.clone();
            for (v, value) in assignment {
                let e = m.exponent(v.index());
                coeff = coeff * num_traits::pow(value.clone(), e as usize);
                mono = mono.with_exponent(v.index(), 0);
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }

    /// Re-expresses `self` over an order that extends its own.
    pub fn extend_order(&self, order: &Arc<VariableOrder>) -> Result<Poly<C>> {
        if !self.order.is_prefix_of(order) {
            return Err(Error::OrderMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.extended(order.arity()), c.clone()))
            .collect();
        Ok(Poly {
            order: Arc::clone(order),
            terms,
        })
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: &C) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(-c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() -= c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Canonical ordering used for factor sets: total degree first, then
    /// the terms compared from the leading one down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| {
            for ((ma, ca), (mb, cb)) in self.terms().zip(other.terms()) {
                let ord = ma.cmp(mb).then_with(|| ca.cmp(cb));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            self.num_terms().cmp(&other.num_terms())
        })
    }
}
