//! Randomized identity suites run by `resproj selftest`.
//!
//! Each trial draws its inputs from [`trial_rng`]`(seed, trial)`, so trials
//! are independent and the outcome does not depend on how they are
//! scheduled across threads.

use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::basis::gcd_free_basis;
use crate::error::Result;
use crate::projection::equivalence_check;
use crate::random::{random_coprime_tuple, random_poly, standard_order, trial_rng, PolyShape};
use crate::resultant::{discriminant, resultant, resultant_bareiss, resultant_prs};
use crate::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// `Res(fg, (fg)') = Res(f, f') Res(g, g') Res(f, g) Res(g, f)`.
    ProductIdentity,
    /// `Res(f, f') = Lc(f) Dis(f)` with the resultant taken by both routes.
    LeadingDiscriminant,
    /// The `s`-fold product identity for `s = 2`.
    PairIdentity,
    /// The `s`-fold product identity for `s = 3`.
    TripleIdentity,
    /// Brown's projection and the successive resultant projection agree.
    Equivalence,
    /// Bareiss determinant and subresultant sequence agree.
    ResultantRoutes,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::ProductIdentity,
        Suite::LeadingDiscriminant,
        Suite::PairIdentity,
        Suite::TripleIdentity,
        Suite::Equivalence,
        Suite::ResultantRoutes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ProductIdentity => "product-identity",
            Suite::LeadingDiscriminant => "res-lc-dis",
            Suite::PairIdentity => "s-fold-2",
            Suite::TripleIdentity => "s-fold-3",
            Suite::Equivalence => "proj-equiv-resp",
            Suite::ResultantRoutes => "bareiss-vs-prs",
        }
    }

    /// Runs a single trial; `Ok(None)` on success, `Ok(Some(msg))` when the
    /// identity fails.
    pub fn run_trial(self, seed: u64, trial: u64) -> Result<Option<String>> {
        let mut rng = trial_rng(seed, trial);
        let arity = rng.gen_range(1..=3usize);
        match self {
            Suite::ProductIdentity => product_identity(&mut rng, arity),
            Suite::LeadingDiscriminant => leading_discriminant(&mut rng, arity),
            Suite::PairIdentity => s_fold_identity(&mut rng, arity, 2),
            Suite::TripleIdentity => s_fold_identity(&mut rng, arity, 3),
            Suite::Equivalence => equivalence(&mut rng),
            Suite::ResultantRoutes => resultant_routes(&mut rng, arity),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn product_identity<R: Rng>(rng: &mut R, arity: usize) -> Result<Option<String>> {
    let order = standard_order(arity);
    let x = order.var(0);
    let t = random_coprime_tuple(rng, &order, &PolyShape::for_arity(arity), 2, 0);
    let (f, g) = (&t[0], &t[1]);
    let fg = f * g;
    let lhs = resultant(&fg, &fg.derivative(&x)?, &x)?;
    let rhs = &(&resultant(f, &f.derivative(&x)?, &x)? * &resultant(g, &g.derivative(&x)?, &x)?)
        * &(&resultant(f, g, &x)? * &resultant(g, f, &x)?);
    Ok((lhs != rhs).then(|| format!("f = {f}, g = {g}")))
}

fn leading_discriminant<R: Rng>(rng: &mut R, arity: usize) -> Result<Option<String>> {
    let order = standard_order(arity);
    let x = order.var(0);
    let f = &random_coprime_tuple(rng, &order, &PolyShape::for_arity(arity), 1, 0)[0];
    let df = f.derivative(&x)?;
    let lc_dis = &f.leading_coefficient(&x)? * &discriminant(f, &x)?;
    let bareiss = resultant_bareiss(f, &df, &x)?;
    let prs = resultant_prs(f, &df, &x)?;
    Ok((lc_dis != bareiss || lc_dis != prs).then(|| format!("f = {f}")))
}

/// `Res(prod f_i, d(prod f_i)/dx) = prod Lc(f_i) * prod Dis(f_i) * prod_{i != j} Res(f_i, f_j)`.
pub fn s_fold_sides(fs: &[Polynomial], x: &crate::Variable) -> Result<(Polynomial, Polynomial)> {
    let order = fs[0].order();
    let product = Polynomial::product(order, fs);
    let lhs = resultant(&product, &product.derivative(x)?, x)?;
    let mut rhs = Polynomial::one(order);
    for (i, f) in fs.iter().enumerate() {
        rhs = &rhs * &f.leading_coefficient(x)?;
        if f.degree(x) >= 2 {
            rhs = &rhs * &discriminant(f, x)?;
        }
        for (j, g) in fs.iter().enumerate() {
            if i != j {
                rhs = &rhs * &resultant(f, g, x)?;
            }
        }
    }
    Ok((lhs, rhs))
}

fn s_fold_identity<R: Rng>(rng: &mut R, arity: usize, s: usize) -> Result<Option<String>> {
    let order = standard_order(arity);
    let x = order.var(0);
    let mut shape = PolyShape::for_arity(arity);
    if s > 2 {
        shape.max_total_degree = shape.max_total_degree.min(3);
    }
    let fs = random_coprime_tuple(rng, &order, &shape, s, 0);
    let (lhs, rhs) = s_fold_sides(&fs, &x)?;
    Ok((lhs != rhs).then(|| {
        let list: Vec<String> = fs.iter().map(ToString::to_string).collect();
        format!("f_i = [{}]", list.join(", "))
    }))
}

/// Random input for the equivalence suite: 2 or 3 variables, 1 to 3
/// polynomials, degree at most 3 in each variable.
pub fn equivalence_input<R: Rng>(rng: &mut R) -> (std::sync::Arc<crate::VariableOrder>, Vec<Polynomial>) {
    let arity = rng.gen_range(2..=3usize);
    let order = standard_order(arity);
    let count = rng.gen_range(1..=3usize);
    let shape = PolyShape {
        max_total_degree: 3,
        max_var_degree: 3,
        min_terms: 2,
        max_terms: 4,
        coeff_bound: 50,
    };
    let polys = (0..count)
        .map(|_| random_poly(rng, &order, &shape, Some(0)))
        .collect();
    (order, polys)
}

fn equivalence<R: Rng>(rng: &mut R) -> Result<Option<String>> {
    let (order, polys) = equivalence_input(rng);
    let report = equivalence_check(&polys, &order)?;
    let describe = || {
        let list: Vec<String> = polys.iter().map(ToString::to_string).collect();
        format!("input [{}] over {order}", list.join(", "))
    };
    if !report.equal {
        return Ok(Some(describe()));
    }
    for level in &report.levels {
        let b = gcd_free_basis(&order, &[level.brown_product()])?.product();
        let y = gcd_free_basis(&order, &[level.yang_product()])?.product();
        if b != y {
            return Ok(Some(format!("{}: level products differ", describe())));
        }
    }
    Ok(None)
}

fn resultant_routes<R: Rng>(rng: &mut R, arity: usize) -> Result<Option<String>> {
    let order = standard_order(arity);
    let x = order.var(0);
    let shape = PolyShape::for_arity(arity);
    let f = random_poly(rng, &order, &shape, Some(0));
    let g = random_poly(rng, &order, &shape, None);
    if f.degree(&x) + g.degree(&x) < 1 {
        return Ok(None);
    }
    let a = resultant_bareiss(&f, &g, &x)?;
    let b = resultant_prs(&f, &g, &x)?;
    Ok((a != b).then(|| format!("f = {f}, g = {g}")))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: u64,
    pub passed: u64,
    /// `(trial index, description)` of failing trials, first few only.
    pub failures: Vec<(u64, String)>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

const MAX_REPORTED_FAILURES: usize = 5;

/// Runs `trials` trials of `suite` in parallel. Errors raised by the
/// library inside a trial count as failures.
pub fn run_suite(suite: Suite, seed: u64, trials: u64) -> SuiteReport {
    let outcomes: Vec<(u64, Option<String>)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let outcome = match suite.run_trial(seed, t) {
                Ok(v) => v,
                Err(e) => Some(format!("error: {e}")),
            };
            (t, outcome)
        })
        .collect();
    let passed = outcomes.iter().filter(|(_, o)| o.is_none()).count() as u64;
    let failures = outcomes
        .into_iter()
        .filter_map(|(t, o)| o.map(|m| (t, m)))
        .take(MAX_REPORTED_FAILURES)
        .collect();
    SuiteReport {
        suite,
        trials,
        passed,
        failures,
    }
}
