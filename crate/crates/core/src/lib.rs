//! Exact computer algebra for modules of polynomial vector fields that leave
//! an algebraic hypersurface `f = 0` invariant.
//!
//! All algorithms are generic over an exact [`Field`]; the aliases below fix
//! the field to arbitrary-precision rationals, which is what the CLI and the
//! bundled examples use.

pub mod error;
pub mod field;
pub mod gcd;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod nd;
pub mod oracle;
pub mod planar;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use field::{cofactor, Cofactor, VectorField};
pub use gcd::{gcd, gcd_all};
pub use groebner::{member_with_lift, quotient_dimension, GroebnerBasis, QuotientDimension};
pub use monomial::{Monomial, MonomialOrder};
pub use nd::{check_conditions, nd_basis, nd_decompose, NdBasisReport, ZeroCofactorFamily};
pub use oracle::{independence_certify, solve_truncated, span_certify, CertReport, TruncatedSolutionSpace};
pub use planar::{
    decompose, free_basis, is_tame, is_weakly_tame, jacobian_lift, quasi_decompose, quasi_weights, saito_det,
    trivial_generators, BasisKind, Decomposition, FreeBasis, ModuleBasis, Weights,
};
pub use poly::Polynomial;
pub use scalar::Field;

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Polynomials over [`Rational`].
pub type Poly = Polynomial<Rational>;
