//! Operations specific to integer coefficients: contents, primitive parts
//! and multivariate GCD (multi-modular, with the subresultant remainder
//! sequence as reference and fallback).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Poly, Variable};
use crate::error::{Error, Result};
use crate::prs::{next_h, Recursive};

impl Poly<BigInt> {
    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the integer content and makes the leading coefficient
    /// positive. The zero polynomial is returned unchanged.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.integer_content();
        let p = if g.is_one() {
            self.clone()
        } else {
            self.div_coefficient(&g).expect("content divides")
        };
        p.sign_normalized()
    }

    pub fn is_normalized(&self) -> bool {
        self.is_zero() || (self.is_sign_normalized() && self.integer_content().is_one())
    }

    /// Content with respect to `v`: the gcd of the coefficients of `self`
    /// viewed as a polynomial in `v`, signed so that the primitive part is
    /// sign-normalized.
    pub fn content(&self, v: &Variable) -> Result<Self> {
        Ok(self.content_and_primitive_part(v)?.0)
    }

    pub fn primitive_part(&self, v: &Variable) -> Result<Self> {
        Ok(self.content_and_primitive_part(v)?.1)
    }

    /// `(content, primitive part)` with `self = content * primitive part`.
    pub fn content_and_primitive_part(&self, v: &Variable) -> Result<(Self, Self)> {
        self.check_var(v)?;
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("content"));
        }
        Ok(self.content_pp_in(v.index()))
    }

    pub(crate) fn content_pp_in(&self, index: usize) -> (Self, Self) {
        self.content_pp_with(index, gcd)
    }

    fn content_pp_with(&self, index: usize, gcd: GcdFn) -> (Self, Self) {
        let mut content = content_of(self.coefficients_in(index), gcd);
        let mut pp = self.div_exact(&content).expect("content divides");
        if !pp.is_sign_normalized() {
            content = -content;
            pp = -pp;
        }
        (content, pp)
    }

    /// Greatest common divisor over the integers, with positive leading
    /// coefficient. `gcd(f, 0)` is `f` up to sign.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(gcd(self, other))
    }
}

fn first_support(p: &Poly<BigInt>) -> Option<usize> {
    (0..p.order.arity()).find(|&i| p.terms.keys().any(|m| m.exponent(i) > 0))
}

type GcdFn = fn(&Poly<BigInt>, &Poly<BigInt>) -> Poly<BigInt>;

/// gcd of a list of polynomials, sign-normalized.
fn content_of(mut coeffs: Vec<Poly<BigInt>>, gcd: GcdFn) -> Poly<BigInt> {
    coeffs.retain(|c| !c.is_zero());
    coeffs.sort_by_key(Poly::num_terms);
    let mut iter = coeffs.into_iter();
    let Some(first) = iter.next() else {
        panic!("content of zero polynomial");
    };
    let mut acc = first.sign_normalized();
    for c in iter {
        if acc.is_one() {
            break;
        }
        acc = gcd(&acc, &c);
    }
    acc
}

pub(crate) fn gcd(f: &Poly<BigInt>, g: &Poly<BigInt>) -> Poly<BigInt> {
    if f.is_zero() {
        return g.clone().sign_normalized();
    }
    if g.is_zero() {
        return f.clone().sign_normalized();
    }
    gcd_cofactors(f, g).0
}

/// `(h, f / h, g / h)` for nonzero `f`, `g`, where `h` is their gcd.
pub(crate) fn gcd_cofactors(
    f: &Poly<BigInt>,
    g: &Poly<BigInt>,
) -> (Poly<BigInt>, Poly<BigInt>, Poly<BigInt>) {
    assert!(!f.is_zero() && !g.is_zero(), "gcd cofactors of zero");
    if f == g {
        let c = f.integer_content();
        let h = f
            .div_coefficient(&c)
            .expect("content divides")
            .sign_normalized()
            .scale(&c);
        let q = f.div_exact(&h).expect("associate");
        return (h, q.clone(), q);
    }
    if let Some(r) = crate::modular::gcd_cofactors(f, g) {
        return r;
    }
    let h = if f.is_constant() || g.is_constant() {
        Poly::constant(&f.order, f.integer_content().gcd(&g.integer_content()))
    } else {
        prs_gcd(f, g)
    };
    let fb = f.div_exact(&h).expect("gcd divides");
    let gb = g.div_exact(&h).expect("gcd divides");
    (h, fb, gb)
}

/// The recursive subresultant gcd; inputs nonzero and non-constant.
pub(crate) fn prs_gcd(f: &Poly<BigInt>, g: &Poly<BigInt>) -> Poly<BigInt> {
    let fv = first_support(f).unwrap();
    let gv = first_support(g).unwrap();
    let v = fv.min(gv);
    if f.degree_in(v) <= 0 {
        return prs_gcd_any(f, &content_of(g.coefficients_in(v), prs_gcd_any));
    }
    if g.degree_in(v) <= 0 {
        return prs_gcd_any(&content_of(f.coefficients_in(v), prs_gcd_any), g);
    }
    let (cf, pf) = f.content_pp_with(v, prs_gcd_any);
    let (cg, pg) = g.content_pp_with(v, prs_gcd_any);
    let d = prs_gcd_any(&cf, &cg);
    let h = primitive_gcd(&pf, &pg, v);
    (&d * &h).sign_normalized()
}

fn prs_gcd_any(f: &Poly<BigInt>, g: &Poly<BigInt>) -> Poly<BigInt> {
    if f.is_constant() || g.is_constant() {
        return Poly::constant(&f.order, f.integer_content().gcd(&g.integer_content()));
    }
    prs_gcd(f, g)
}

/// gcd of two polynomials that are primitive in `var` and of positive
/// degree in it, by the subresultant remainder sequence.
fn primitive_gcd(f: &Poly<BigInt>, g: &Poly<BigInt>, var: usize) -> Poly<BigInt> {
    let mut a = Recursive::new(f, var);
    let mut b = Recursive::new(g, var);
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    let order = f.order();
    let mut sg = Poly::one(order);
    let mut sh = Poly::one(order);
    loop {
        let delta = a.degree() - b.degree();
        let r = a.prem(&b);
        if r.is_zero() {
            break;
        }
        if r.degree() == 0 {
            return Poly::one(order);
        }
        a = b;
        b = r
            .div_exact(&(&sg * &sh.pow(delta as u32)))
            .expect("subresultant division is exact");
        sg = a.lc().clone();
        sh = next_h(&sh, &sg, delta).expect("subresultant scaling is exact");
    }
    b.to_poly().content_pp_with(var, prs_gcd_any).1
}
