//! Exact resultants and two equivalent CAD projection operators.
//!
//! * [`poly`]: sparse multivariate polynomials, generic over the coefficient
//!   ring ([`Coefficient`]) and evaluable into any [`Scalar`].
//! * [`resultant`]: Sylvester matrices, resultants (Bareiss, subresultant
//!   and multi-modular routes) and discriminants.
//! * [`basis`]: squarefree parts and gcd-free bases ([`FactorSet`]).
//! * [`projection`]: Brown's operator, the successive resultant operator,
//!   the projection phase and the equivalence checker.
//! * [`optimize`]: triangular critical-point systems and the optimum
//!   equation in `T`, with exact real-root isolation from [`roots`].
//! * [`random`] and [`selftest`]: seeded generators and randomized identity
//!   suites.
//!
//! ```
//! use std::sync::Arc;
//! use resproj::{Polynomial, VariableOrder, resultant};
//!
//! let order = Arc::new(VariableOrder::parse_list("x,y").unwrap());
//! let f = Polynomial::parse("x^2 + y^2 - 1", &order).unwrap();
//! let g = Polynomial::parse("x - y", &order).unwrap();
//! let x = order.variable("x").unwrap();
//! let r = resultant(&f, &g, &x).unwrap();
//! assert_eq!(r.to_string(), "2*y^2 - 1");
//! ```

pub mod basis;
pub mod error;
mod modular;
pub mod optimize;
pub mod poly;
pub mod projection;
mod prs;
pub mod random;
pub mod resultant;
pub mod roots;
pub mod scalar;
pub mod selftest;

pub use basis::{gcd_free_basis, is_squarefree, squarefree_part, FactorSet};
pub use error::{Error, Result};
pub use optimize::{candidate_minima, optimum_equation, resp_chain, TriangularSystem};
pub use poly::{Monomial, Poly, Variable, VariableOrder};
pub use projection::{
    equivalence_check, proj_brown, projection_phase, resp_yang, EquivalenceReport, Operator, ProjectionTrace,
};
pub use resultant::{
    discriminant, resultant, resultant_bareiss, resultant_modular, resultant_prs, sylvester_matrix,
    SylvesterMatrix,
};
pub use roots::{isolate_real_roots, IsolatingInterval};
pub use scalar::{Coefficient, Scalar};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Polynomial with arbitrary-precision integer coefficients.
pub type Polynomial = Poly<BigInt>;

/// Polynomial with exact rational coefficients.
pub type RationalPolynomial = Poly<BigRational>;
