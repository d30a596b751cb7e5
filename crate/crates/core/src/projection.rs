//! The two projection operators and the projection phase built on them.
//!
//! [`proj_brown`] collects leading coefficients, discriminants and pairwise
//! resultants of a factor set. [`resp_yang`] takes the squarefree part of
//! the single resultant `Res(P, dP/dx, x)` of the product `P` of the set.
//! The two produce the same squarefree product at every level;
//! [`equivalence_check`] runs both phases and verifies that.

use std::fmt;
use std::sync::Arc;

use crate::basis::{gcd_free_basis, squarefree_part, FactorSet};
use crate::error::{Error, Result};
use crate::poly::{Variable, VariableOrder};
use crate::resultant::{discriminant, resultant};
use crate::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    Brown,
    Yang,
}

impl Operator {
    pub fn name(self) -> &'static str {
        match self {
            Operator::Brown => "brown",
            Operator::Yang => "yang",
        }
    }

    pub fn apply(self, set: &FactorSet, x: &Variable) -> Result<FactorSet> {
        match self {
            Operator::Brown => proj_brown(set, x),
            Operator::Yang => resp_yang(set, x),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Leading coefficients (members of positive degree), discriminants
/// (degree at least 2), resultants of distinct pairs (both of positive
/// degree), and members free of `x` passed through, refined to a gcd-free
/// basis.
pub fn proj_brown(set: &FactorSet, x: &Variable) -> Result<FactorSet> {
    if !set.order().contains(x) {
        return Err(Error::UnknownVariable(x.name().to_string()));
    }
    let (active, idle) = set.split_by(x);
    let mut parts: Vec<Polynomial> = idle.into_iter().cloned().collect();
    for (i, f) in active.iter().enumerate() {
        parts.push(f.leading_coefficient(x)?);
        if f.degree(x) >= 2 {
            parts.push(discriminant(f, x)?);
        }
        for g in &active[i + 1..] {
            parts.push(resultant(f, g, x)?);
        }
    }
    if parts.iter().any(Polynomial::is_zero) {
        return Err(Error::Internal(
            "zero projection polynomial from a squarefree basis".into(),
        ));
    }
    gcd_free_basis(set.order(), &parts)
}

/// Squarefree part of `Res(P, dP/dx, x)` where `P` is the product of the
/// members involving `x`, together with the members free of `x`.
pub fn resp_yang(set: &FactorSet, x: &Variable) -> Result<FactorSet> {
    if !set.order().contains(x) {
        return Err(Error::UnknownVariable(x.name().to_string()));
    }
    let (active, idle) = set.split_by(x);
    if active.is_empty() {
        return Ok(set.clone());
    }
    let product = Polynomial::product(set.order(), active.iter().copied());
    let res = resultant(&product, &product.derivative(x)?, x)?;
    if res.is_zero() {
        return Err(Error::Internal(
            "Res(P, P') vanished for a squarefree product".into(),
        ));
    }
    let mut parts: Vec<Polynomial> = idle.into_iter().cloned().collect();
    parts.push(squarefree_part(&res)?);
    gcd_free_basis(set.order(), &parts)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Level {
    pub variable: Variable,
    pub factors: FactorSet,
}

/// The factor sets of one projection phase: the refined input, then one
/// level per eliminated variable `x_1, ..., x_{k-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionTrace {
    pub operator: Operator,
    pub order: Arc<VariableOrder>,
    pub base: FactorSet,
    pub levels: Vec<Level>,
}

impl ProjectionTrace {
    /// Union of the input level and every projection level.
    pub fn projection_factor_set(&self) -> Vec<Polynomial> {
        let mut all: Vec<Polynomial> = self.base.members().to_vec();
        for level in &self.levels {
            for m in &level.factors {
                if !all.contains(m) {
                    all.push(m.clone());
                }
            }
        }
        all
    }
}

pub fn projection_phase(
    input: &[Polynomial],
    order: &Arc<VariableOrder>,
    operator: Operator,
) -> Result<ProjectionTrace> {
    if order.arity() < 2 {
        return Err(Error::TooFewVariables {
            needed: 2,
            got: order.arity(),
        });
    }
    let base = gcd_free_basis(order, input)?;
    let mut levels = Vec::with_capacity(order.arity() - 1);
    let mut current = base.clone();
    for j in 0..order.arity() - 1 {
        let x = order.var(j);
        current = operator.apply(&current, &x)?;
        levels.push(Level {
            variable: x,
            factors: current.clone(),
        });
    }
    Ok(ProjectionTrace {
        operator,
        order: Arc::clone(order),
        base,
        levels,
    })
}

/// Comparison of the two operators at one level.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelComparison {
    pub variable: Variable,
    pub brown: FactorSet,
    pub yang: FactorSet,
    /// Members of the joint refinement that divide some Brown member.
    pub brown_refined: FactorSet,
    /// Members of the joint refinement that divide some successive resultant member.
    pub yang_refined: FactorSet,
}

impl LevelComparison {
    pub fn matches(&self) -> bool {
        self.brown_refined == self.yang_refined
    }

    pub fn brown_product(&self) -> Polynomial {
        self.brown.product().normalized()
    }

    pub fn yang_product(&self) -> Polynomial {
        self.yang.product().normalized()
    }

    pub fn only_brown(&self) -> Vec<&Polynomial> {
        self.brown_refined
            .iter()
            .filter(|m| !self.yang_refined.contains(m))
            .collect()
    }

    pub fn only_yang(&self) -> Vec<&Polynomial> {
        self.yang_refined
            .iter()
            .filter(|m| !self.brown_refined.contains(m))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceReport {
    pub equal: bool,
    pub brown: ProjectionTrace,
    pub yang: ProjectionTrace,
    pub levels: Vec<LevelComparison>,
}

impl EquivalenceReport {
    /// Levels whose refined factor sets differ.
    pub fn per_level_diffs(&self) -> Vec<&LevelComparison> {
        self.levels.iter().filter(|l| !l.matches()).collect()
    }
}

/// Splits both sets against each other and returns, for each side, the
/// pieces of the common refinement it contains.
pub fn joint_refinement(a: &FactorSet, b: &FactorSet) -> Result<(FactorSet, FactorSet)> {
    let joint = gcd_free_basis(a.order(), &a.union(b))?;
    let pick = |side: &FactorSet| -> Result<FactorSet> {
        let pieces: Vec<Polynomial> = joint
            .iter()
            .filter(|piece| side.iter().any(|m| m.div_exact(piece).is_some()))
            .cloned()
            .collect();
        gcd_free_basis(a.order(), &pieces)
    };
    Ok((pick(a)?, pick(b)?))
}

/// Runs both projection phases and compares them level by level after
/// refining each level's two sets jointly.
pub fn equivalence_check(input: &[Polynomial], order: &Arc<VariableOrder>) -> Result<EquivalenceReport> {
    let brown = projection_phase(input, order, Operator::Brown)?;
    let yang = projection_phase(input, order, Operator::Yang)?;
    let mut levels = Vec::with_capacity(brown.levels.len());
    for (b, y) in brown.levels.iter().zip(&yang.levels) {
        let (brown_refined, yang_refined) = joint_refinement(&b.factors, &y.factors)?;
        levels.push(LevelComparison {
            variable: b.variable.clone(),
            brown: b.factors.clone(),
            yang: y.factors.clone(),
            brown_refined,
            yang_refined,
        });
    }
    let equal = levels.iter().all(LevelComparison::matches);
    Ok(EquivalenceReport {
        equal,
        brown,
        yang,
        levels,
    })
}
