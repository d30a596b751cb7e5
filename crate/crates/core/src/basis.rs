//! Squarefree parts and gcd-free (pairwise coprime) squarefree bases.
//!
//! A [`FactorSet`] is the unit of exchange between projection levels. Its
//! members are refined only as far as gcd computations split them: two
//! coprime irreducible factors that never meet a common divisor stay
//! multiplied together.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{gcd_cofactors, Variable, VariableOrder};
use crate::Polynomial;

/// Product of the distinct irreducible factors of `f`, primitive and with
/// positive leading coefficient. Constants map to `1`.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_part"));
    }
    Ok(squarefree_rec(f).normalized())
}

fn squarefree_rec(f: &Polynomial) -> Polynomial {
    let Some(&v) = f.support().first() else {
        return Polynomial::one(f.order());
    };
    // Every factor of the primitive part involves `v`, so dividing by the
    // gcd with the derivative removes exactly the repeated ones. Factors
    // free of `v` sit in the content and are handled recursively.
    let (content, pp) = f.content_pp_in(v);
    let (_, reduced, _) = gcd_cofactors(&pp, &pp.derivative_in(v));
    &squarefree_rec(&content) * &reduced
}

/// True when no non-constant factor of `f` is repeated, i.e. `f` and all of
/// its partial derivatives have constant gcd.
pub fn is_squarefree(f: &Polynomial) -> bool {
    if f.is_zero() {
        return false;
    }
    let mut g = f.normalized();
    for v in f.support() {
        if g.is_constant() {
            break;
        }
        g = crate::poly::gcd_internal(&g, &f.derivative_in(v));
    }
    g.is_constant()
}

/// Normalized, pairwise coprime, squarefree, non-constant polynomials in
/// canonical order (total degree, then term order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorSet {
    order: Arc<VariableOrder>,
    members: Vec<Polynomial>,
}

impl FactorSet {
    pub fn empty(order: &Arc<VariableOrder>) -> Self {
        FactorSet {
            order: Arc::clone(order),
            members: Vec::new(),
        }
    }

    pub fn order(&self) -> &Arc<VariableOrder> {
        &self.order
    }

    pub fn members(&self) -> &[Polynomial] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Polynomial> {
        self.members.iter()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.members.contains(p)
    }

    /// Product of all members (1 for the empty set).
    pub fn product(&self) -> Polynomial {
        Polynomial::product(&self.order, &self.members)
    }

    /// Members that involve `v`, and those that do not.
    pub fn split_by(&self, v: &Variable) -> (Vec<&Polynomial>, Vec<&Polynomial>) {
        self.members.iter().partition(|m| m.involves(v))
    }

    /// Members of both sets, concatenated without refinement.
    pub fn union(&self, other: &FactorSet) -> Vec<Polynomial> {
        let mut all = self.members.clone();
        all.extend(other.members.iter().cloned());
        all
    }

    /// Checks every structural invariant; used by tests and the self-test.
    pub fn validate(&self) -> Result<()> {
        for (i, m) in self.members.iter().enumerate() {
            if m.is_constant() {
                return Err(Error::Internal(format!("constant member {m}")));
            }
            if !m.is_normalized() {
                return Err(Error::Internal(format!("member {m} is not normalized")));
            }
            if !is_squarefree(m) {
                return Err(Error::Internal(format!("member {m} is not squarefree")));
            }
            for n in &self.members[i + 1..] {
                if !crate::poly::gcd_internal(m, n).is_constant() {
                    return Err(Error::Internal(format!("members {m} and {n} share a factor")));
                }
            }
        }
        let mut sorted = self.members.clone();
        sorted.sort_by(|a, b| a.canonical_cmp(b));
        if sorted != self.members {
            return Err(Error::Internal("members are not in canonical order".into()));
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a FactorSet {
    type Item = &'a Polynomial;
    type IntoIter = std::slice::Iter<'a, Polynomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Display for FactorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// Refines `polys` into a pairwise coprime set of squarefree parts whose
/// product is the squarefree part of the product of the inputs. Constants
/// are dropped; the result is in canonical order.
pub fn gcd_free_basis(order: &Arc<VariableOrder>, polys: &[Polynomial]) -> Result<FactorSet> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in polys {
        if p.order() != order {
            return Err(Error::OrderMismatch);
        }
        if p.is_zero() {
            return Err(Error::ZeroPolynomial("gcd_free_basis"));
        }
        if p.is_constant() {
            continue;
        }
        let q = squarefree_part(p)?;
        insert_coprime(&mut basis, q);
    }
    basis.sort_by(|a, b| a.canonical_cmp(b));
    Ok(FactorSet {
        order: Arc::clone(order),
        members: basis,
    })
}

/// Inserts the squarefree `q` into the pairwise coprime squarefree `basis`,
/// splitting members against it.
fn insert_coprime(basis: &mut Vec<Polynomial>, mut q: Polynomial) {
    let mut settled = Vec::new();
    let mut i = 0;
    while i < basis.len() && !q.is_constant() {
        let (g, rest, q_rest) = gcd_cofactors(&basis[i], &q);
        if g.is_constant() {
            i += 1;
            continue;
        }
        basis.remove(i);
        let rest = rest.normalized();
        q = q_rest.normalized();
        // `rest` and `g` are coprime to each other, to every other member
        // and to what remains of `q`.
        if !rest.is_constant() {
            settled.push(rest);
        }
        settled.push(g.normalized());
    }
    basis.extend(settled);
    if !q.is_constant() {
        basis.push(q);
    }
}
