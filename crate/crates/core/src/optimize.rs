//! Successive resultant projection of a single polynomial: the triangular
//! system that contains the real critical points of `f = 0`, and the
//! univariate equation in an extra variable `T` whose real roots include
//! the global minimum of `f` whenever it exists.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::basis::{is_squarefree, squarefree_part};
use crate::error::{Error, Result};
use crate::poly::{Variable, VariableOrder};
use crate::resultant::resultant;
use crate::roots::{isolate_real_roots, IsolatingInterval};
use crate::Polynomial;

/// `g_0 = f`, `g_{j+1} = ResP(g_j, x_{j+1})`. `equations[j]` is free of
/// `eliminated[0..j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangularSystem {
    pub order: Arc<VariableOrder>,
    pub equations: Vec<Polynomial>,
    pub eliminated: Vec<Variable>,
}

impl TriangularSystem {
    /// True when every equation vanishes at `point` (one value per variable).
    pub fn vanishes_at(&self, point: &[BigRational]) -> bool {
        self.equations.iter().all(|g| g.eval_at(point).is_zero())
    }

    pub fn last(&self) -> &Polynomial {
        self.equations.last().expect("system has at least one equation")
    }
}

/// One successive-resultant step: the squarefree part of `Res(g, dg/dx, x)`,
/// or `g` itself when it does not involve `x`.
pub fn resp_step(g: &Polynomial, x: &Variable, level: usize) -> Result<Polynomial> {
    if !g.involves(x) {
        return Ok(g.clone());
    }
    let res = resultant(g, &g.derivative(x)?, x)?;
    if res.is_zero() {
        return Err(Error::ChainCollapsed {
            level,
            var: x.name().to_string(),
        });
    }
    squarefree_part(&res)
}

fn squarefree_input(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("resp_chain"));
    }
    if is_squarefree(f) {
        Ok(f.normalized())
    } else {
        log::warn!("input {f} is not squarefree; using its squarefree part");
        squarefree_part(f)
    }
}

/// Eliminates `x_1, ..., x_{n-1}` one after another, stopping early if a
/// member becomes constant.
pub fn resp_chain(f: &Polynomial, order: &Arc<VariableOrder>) -> Result<TriangularSystem> {
    if f.order() != order {
        return Err(Error::OrderMismatch);
    }
    let mut g = squarefree_input(f)?;
    let mut equations = vec![g.clone()];
    let mut eliminated = Vec::new();
    for j in 0..order.arity() - 1 {
        if g.is_constant() {
            break;
        }
        let x = order.var(j);
        g = resp_step(&g, &x, j + 1)?;
        equations.push(g.clone());
        eliminated.push(x);
    }
    Ok(TriangularSystem {
        order: Arc::clone(order),
        equations,
        eliminated,
    })
}

/// Applies the successive resultant projection to `f - T` over all of
/// `x_1, ..., x_n`. The result lives over `order` extended by `T` (named
/// `T`, or `T_`, ... if taken) and involves only `T`.
pub fn optimum_equation(f: &Polynomial, order: &Arc<VariableOrder>) -> Result<Polynomial> {
    if f.order() != order {
        return Err(Error::OrderMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("optimum_equation"));
    }
    let (ext, t) = order.with_fresh("T");
    let ext = Arc::new(ext);
    let shifted = &f.extend_order(&ext)? - &Polynomial::var(&ext, &t);
    let mut g = squarefree_input(&shifted)?;
    for j in 0..order.arity() {
        g = resp_step(&g, &ext.var(j), j + 1)?;
        if g.is_constant() {
            return Err(Error::NoInformation(format!(
                "elimination of {} left a constant",
                ext.var(j)
            )));
        }
    }
    Ok(g)
}

/// Real roots of [`optimum_equation`], ascending. These are candidates:
/// the global minimum, when it exists, is among them, but a candidate need
/// not be attained.
pub fn candidate_minima(f: &Polynomial, order: &Arc<VariableOrder>) -> Result<Vec<IsolatingInterval>> {
    isolate_real_roots(&optimum_equation(f, order)?)
}

/// Smallest value of `f` seen on a uniform grid over `[-radius, radius]^n`.
/// A numeric heuristic with no guarantee; useful only as a sanity check
/// against the exact candidates.
#[derive(Clone, Debug, PartialEq)]
pub struct SpotCheck {
    pub value: f64,
    pub point: Vec<f64>,
}

pub fn numeric_spot_check(f: &Polynomial, radius: f64, steps_per_axis: usize) -> SpotCheck {
    let n = f.order().arity();
    let steps = steps_per_axis.max(2);
    let coord = |i: usize| -radius + 2.0 * radius * i as f64 / (steps - 1) as f64;
    let mut index = vec![0usize; n];
    let mut best = SpotCheck {
        value: f64::INFINITY,
        point: vec![0.0; n],
    };
    loop {
        let point: Vec<f64> = index.iter().map(|&i| coord(i)).collect();
        let value: f64 = f.eval_at(&point);
        if value < best.value {
            best = SpotCheck { value, point };
        }
        let mut axis = 0;
        while axis < n {
            index[axis] += 1;
            if index[axis] < steps {
                break;
            }
            index[axis] = 0;
            axis += 1;
        }
        if axis == n {
            return best;
        }
    }
}
