//! Seeded random polynomials for the property suites.
//!
//! Polynomials are sparse (a handful of terms), with coefficients uniform in
//! `[-bound, bound]`. Tuples are post-processed to satisfy the hypotheses of
//! the resultant identities: each member squarefree with positive degree in
//! the eliminated variable, members pairwise coprime. A violating draw is
//! discarded and redrawn, so every tuple is reproducible from the seed.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::is_squarefree;
use crate::poly::{gcd_internal, Monomial, VariableOrder};
use crate::Polynomial;

/// Generator for the trial with index `trial` under `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial))
}

/// Shape of a random polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyShape {
    /// Upper bound on the total degree of every term.
    pub max_total_degree: u32,
    /// Upper bound on the degree in each single variable.
    pub max_var_degree: u32,
    pub min_terms: usize,
    pub max_terms: usize,
    pub coeff_bound: i64,
}

impl PolyShape {
    /// Default shape for `arity` variables, small enough that the identity
    /// suites stay fast while still producing nontrivial resultants.
    pub fn for_arity(arity: usize) -> Self {
        let (max_total_degree, max_terms) = match arity {
            0 | 1 => (6, 5),
            2 => (4, 4),
            _ => (3, 4),
        };
        PolyShape {
            max_total_degree,
            max_var_degree: 6,
            min_terms: 2,
            max_terms,
            coeff_bound: 50,
        }
    }
}

fn random_monomial<R: Rng>(rng: &mut R, arity: usize, shape: &PolyShape, force: Option<usize>) -> Monomial {
    let mut exps = vec![0u32; arity];
    let total = rng.gen_range(0..=shape.max_total_degree);
    let mut order: Vec<usize> = (0..arity).collect();
    order.shuffle(rng);
    let mut left = total;
    if let Some(i) = force {
        let e = rng.gen_range(1..=shape.max_var_degree.min(shape.max_total_degree).max(1));
        exps[i] = e;
        left = left.saturating_sub(e);
    }
    for &i in &order {
        if left == 0 {
            break;
        }
        let room = shape.max_var_degree - exps[i];
        let e = rng.gen_range(0..=left.min(room));
        exps[i] += e;
        left -= e;
    }
    Monomial::from_exponents(&exps)
}

fn random_coefficient<R: Rng>(rng: &mut R, bound: i64) -> BigInt {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c.into();
        }
    }
}

/// A random nonzero polynomial over `order`; when `involve` is set, the
/// result has positive degree in that variable.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    order: &Arc<VariableOrder>,
    shape: &PolyShape,
    involve: Option<usize>,
) -> Polynomial {
    loop {
        let nterms = rng.gen_range(shape.min_terms..=shape.max_terms);
        let terms = (0..nterms).map(|i| {
            let force = if i == 0 { involve } else { None };
            (
                random_monomial(rng, order.arity(), shape, force),
                random_coefficient(rng, shape.coeff_bound),
            )
        });
        let p = Polynomial::from_terms(order, terms.collect::<Vec<_>>());
        let ok = match involve {
            Some(i) => p.degree_in(i) > 0,
            None => !p.is_zero(),
        };
        if ok {
            return p;
        }
    }
}

/// `count` squarefree, pairwise coprime polynomials, each of positive degree
/// in variable `involve`.
pub fn random_coprime_tuple<R: Rng>(
    rng: &mut R,
    order: &Arc<VariableOrder>,
    shape: &PolyShape,
    count: usize,
    involve: usize,
) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(count);
    while out.len() < count {
        let p = random_poly(rng, order, shape, Some(involve));
        if !is_squarefree(&p) {
            continue;
        }
        if out.iter().any(|q| !gcd_internal(q, &p).is_constant()) {
            continue;
        }
        out.push(p);
    }
    out
}

/// The variable order `x`, `x,y` or `x,y,z` (then `x1..`) for `arity`.
pub fn standard_order(arity: usize) -> Arc<VariableOrder> {
    let names: Vec<String> = match arity {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        n => (1..=n).map(|i| format!("x{i}")).collect(),
    };
    Arc::new(VariableOrder::new(names).expect("valid names"))
}
