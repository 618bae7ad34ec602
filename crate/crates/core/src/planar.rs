//! Plane curves `f(x, y) = 0`: trivial generators, weak tameness,
//! quasi-homogeneity, Jacobian lifts, free bases of the module of tangent
//! fields and exact decomposition over those bases.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{cofactor, require_nonconstant, Cofactor, VectorField};
use crate::gcd::{gcd, gcd_all};
use crate::groebner::{member_with_lift, quotient_dimension, QuotientDimension};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::scalar::Field;

fn require_plane<F: Field>(f: &Polynomial<F>) -> Result<()> {
    if f.nvars() != 2 {
        return Err(Error::WrongDimension { expected: "2", found: f.nvars() });
    }
    require_nonconstant(f)
}

/// `X0 = -f_y d/dx + f_x d/dy` and `X1 = f d/dx`, `X2 = f d/dy`, with
/// cofactors `0`, `f_x`, `f_y`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrivialGenerators<F: Field> {
    pub hamiltonian: VectorField<F>,
    pub x1: VectorField<F>,
    pub x2: VectorField<F>,
    pub cofactors: [Cofactor<F>; 3],
}

pub fn hamiltonian<F: Field>(f: &Polynomial<F>) -> Result<VectorField<F>> {
    require_plane(f)?;
    let fx = f.partial_derivative(0)?;
    let fy = f.partial_derivative(1)?;
    VectorField::new(vec![-fy, fx])
}

pub fn trivial_generators<F: Field>(f: &Polynomial<F>) -> Result<TrivialGenerators<F>> {
    require_plane(f)?;
    let fx = f.partial_derivative(0)?;
    let fy = f.partial_derivative(1)?;
    Ok(TrivialGenerators {
        hamiltonian: VectorField::new(vec![-fy.clone(), fx.clone()])?,
        x1: VectorField::along(2, 0, f.clone()),
        x2: VectorField::along(2, 1, f.clone()),
        cofactors: [Cofactor(Polynomial::zero(2)), Cofactor(fx), Cofactor(fy)],
    })
}

/// Quotient of the polynomial ring by the Jacobian ideal of `f`.
pub fn milnor_space<F: Field>(f: &Polynomial<F>) -> Result<QuotientDimension> {
    require_plane(f)?;
    jacobian_quotient(f)
}

fn jacobian_quotient<F: Field>(f: &Polynomial<F>) -> Result<QuotientDimension> {
    let grad = f.gradient();
    if grad.iter().all(Polynomial::is_zero) {
        return Ok(QuotientDimension::Infinite);
    }
    quotient_dimension(&grad, MonomialOrder::Grevlex)
}

/// Weakly tame: the Milnor space of `f` is finite dimensional. Returns the
/// verdict with the space it was decided from.
pub fn is_weakly_tame<F: Field>(f: &Polynomial<F>) -> Result<(bool, QuotientDimension)> {
    let q = milnor_space(f)?;
    Ok((q.is_finite(), q))
}

/// Weights with `f(t^l x, t^m y) = t^d f(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Weights {
    pub l: u64,
    pub m: u64,
    pub d: u64,
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Smallest weights `(l, m)` (by `l + m`, then lexicographically) making `f`
/// quasi-homogeneous of a positive degree, or `None`.
pub fn quasi_weights<F: Field>(f: &Polynomial<F>) -> Result<Option<Weights>> {
    require_plane(f)?;
    let support: Vec<(i64, i64)> =
        f.terms().map(|(m, _)| (m.exponents()[0] as i64, m.exponents()[1] as i64)).collect();
    let (a0, b0) = support[0];
    let diffs: Vec<(i64, i64)> = support[1..].iter().map(|&(a, b)| (a - a0, b - b0)).collect();

    let candidate = match diffs.first() {
        // a single monomial: (0, 1) precedes (1, 0) lexicographically
        None => {
            if b0 > 0 {
                (0, 1)
            } else {
                (1, 0)
            }
        }
        Some(&(da, db)) => {
            if diffs.iter().any(|&(a, b)| a * db - b * da != 0) {
                return Ok(None);
            }
            // orthogonal to the support direction
            let (mut l, mut m) = (db, -da);
            if l < 0 || m < 0 {
                l = -l;
                m = -m;
            }
            if l < 0 || m < 0 {
                return Ok(None);
            }
            let g = gcd_u64(l as u64, m as u64) as i64;
            (l / g, m / g)
        }
    };
    let (l, m) = candidate;
    let d = l * a0 + m * b0;
    if d < 1 {
        return Ok(None);
    }
    let w = Weights { l: l as u64, m: m as u64, d: d as u64 };
    debug_assert!(substitution_identity_holds(f, &w));
    Ok(Some(w))
}

/// Checks `f(t^l x, t^m y) = t^d f(x, y)` as an identity in `(x, y, t)`.
pub fn substitution_identity_holds<F: Field>(f: &Polynomial<F>, w: &Weights) -> bool {
    let g = f.embed(3);
    let t = Polynomial::<F>::var(3, 2);
    let sx = &Polynomial::var(3, 0) * &t.pow(w.l as u32);
    let sy = &Polynomial::var(3, 1) * &t.pow(w.m as u32);
    let lhs = g.substitute(0, &sx).and_then(|h| h.substitute(1, &sy));
    match lhs {
        Ok(lhs) => lhs == &t.pow(w.d as u32) * &g,
        Err(_) => false,
    }
}

/// Splits `f` into weighted-homogeneous pieces, highest weighted degree first.
pub fn quasi_decompose<F: Field>(f: &Polynomial<F>, l: u64, m: u64) -> Result<Vec<(u64, Polynomial<F>)>> {
    if f.nvars() != 2 {
        return Err(Error::WrongDimension { expected: "2", found: f.nvars() });
    }
    if l == 0 && m == 0 {
        return Err(Error::ZeroWeights);
    }
    let mut pieces: BTreeMap<u64, Vec<(Monomial, F)>> = BTreeMap::new();
    for (mono, c) in f.terms() {
        let deg = mono.weighted_degree(&[l, m]);
        pieces.entry(deg).or_default().push((mono.clone(), c.clone()));
    }
    Ok(pieces.into_iter().rev().map(|(d, ts)| (d, Polynomial::from_terms(2, ts))).collect())
}

/// Tame for the given weights: the top weighted-homogeneous piece has a
/// finite-dimensional Milnor space.
pub fn is_tame<F: Field>(f: &Polynomial<F>, l: u64, m: u64) -> Result<bool> {
    require_plane(f)?;
    let pieces = quasi_decompose(f, l, m)?;
    let top = &pieces[0].1;
    Ok(jacobian_quotient(top)?.is_finite())
}

/// `X* = P d/dx + Q d/dy` from the normal-form lift `f = P f_x + Q f_y`; it
/// has cofactor one. `None` when `f` is not in its Jacobian ideal.
pub fn jacobian_lift<F: Field>(f: &Polynomial<F>) -> Result<Option<VectorField<F>>> {
    require_plane(f)?;
    gradient_lift(f)
}

/// The same lift in any number of variables.
pub fn gradient_lift<F: Field>(f: &Polynomial<F>) -> Result<Option<VectorField<F>>> {
    require_nonconstant(f)?;
    let grad = f.gradient();
    match member_with_lift(f, &grad)? {
        Some(coeffs) => Ok(Some(VectorField::new(coeffs)?)),
        None => Ok(None),
    }
}

/// Membership of `f` in `<f_x1 / D, ..., f_xn / D>` where `D` is the gcd of
/// the partials. This is a necessary condition for a rank-one complement of
/// the cofactor-zero fields; it is not sufficient.
pub fn reduced_jacobian_lift<F: Field>(f: &Polynomial<F>) -> Result<Option<Vec<Polynomial<F>>>> {
    require_nonconstant(f)?;
    let grad = f.gradient();
    let d = gcd_all(&grad)?;
    let reduced: Vec<Polynomial<F>> =
        grad.iter().map(|g| g.exact_divide(&d).map(|q| q.expect("gcd divides"))).collect::<Result<_>>()?;
    member_with_lift(f, &reduced)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// `(X0, X*)`: weakly tame, coprime partials, `f` in its Jacobian ideal.
    Theorem1,
    /// `(X0 / D, X*)`: `f` in its Jacobian ideal, `D = gcd(f_x, f_y)`.
    Theorem3,
    /// `(X1, ..., X_{n-1}, X*)` in `n >= 3` variables.
    NDim,
}

impl BasisKind {
    pub fn name(&self) -> &'static str {
        match self {
            BasisKind::Theorem1 => "Theorem1",
            BasisKind::Theorem3 => "Theorem3",
            BasisKind::NDim => "NDim",
        }
    }
}

/// A generating set for the module of fields tangent to `f = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleBasis<F: Field> {
    pub kind: BasisKind,
    pub f: Polynomial<F>,
    pub fields: Vec<VectorField<F>>,
    pub cofactors: Vec<Cofactor<F>>,
    /// gcd of the partials (one for `Theorem1`)
    pub divisor: Polynomial<F>,
}

impl<F: Field> ModuleBasis<F> {
    pub fn recombine(&self, coeffs: &[Polynomial<F>]) -> VectorField<F> {
        VectorField::combination(coeffs, &self.fields)
    }

    /// Every field satisfies `X(f) = k f` with its stored cofactor.
    pub fn cofactors_hold(&self) -> bool {
        self.fields.iter().zip(&self.cofactors).all(|(x, k)| match x.apply(&self.f) {
            Ok(xf) => xf == k.value() * &self.f,
            Err(_) => false,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailureKind {
    NotInJacobianIdeal,
    /// `f` is in its Jacobian ideal with coprime partials but the Milnor
    /// space is infinite, so the weakly tame hypothesis is not met.
    NotWeaklyTame,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasisFailure<F: Field> {
    pub kind: FailureKind,
    pub weakly_tame: bool,
    pub milnor: QuotientDimension,
    pub divisor: Polynomial<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FreeBasis<F: Field> {
    Basis(ModuleBasis<F>),
    Failure(BasisFailure<F>),
}

/// Free basis of the module of tangent fields: `(X0, X*)` for weakly tame
/// `f` with coprime partials, `(X0 / D, X*)` when the partials share a
/// factor `D`. Both require `f` in its Jacobian ideal.
pub fn free_basis<F: Field>(f: &Polynomial<F>) -> Result<FreeBasis<F>> {
    require_plane(f)?;
    let fx = f.partial_derivative(0)?;
    let fy = f.partial_derivative(1)?;
    let d = gcd(&fx, &fy)?;
    let (weakly_tame, milnor) = is_weakly_tame(f)?;
    let fail = |kind| {
        Ok(FreeBasis::Failure(BasisFailure { kind, weakly_tame, milnor: milnor.clone(), divisor: d.clone() }))
    };
    let Some(x_star) = jacobian_lift(f)? else {
        return fail(FailureKind::NotInJacobianIdeal);
    };
    let x0 = VectorField::new(vec![-fy.clone(), fx.clone()])?;
    let one = Polynomial::one(2);
    let cofactors = vec![Cofactor(Polynomial::zero(2)), Cofactor(one.clone())];
    if d.is_constant() {
        if !weakly_tame {
            return fail(FailureKind::NotWeaklyTame);
        }
        return Ok(FreeBasis::Basis(ModuleBasis {
            kind: BasisKind::Theorem1,
            f: f.clone(),
            fields: vec![x0, x_star],
            cofactors,
            divisor: one,
        }));
    }
    let reduced = x0.exact_divide(&d)?.expect("gcd divides both partials");
    Ok(FreeBasis::Basis(ModuleBasis {
        kind: BasisKind::Theorem3,
        f: f.clone(),
        fields: vec![reduced, x_star],
        cofactors,
        divisor: d,
    }))
}

/// `P1 Q2 - P2 Q1` for `G_i = P_i d/dx + Q_i d/dy`.
pub fn saito_det<F: Field>(g1: &VectorField<F>, g2: &VectorField<F>) -> Result<Polynomial<F>> {
    if g1.nvars() != 2 || g2.nvars() != 2 {
        return Err(Error::WrongDimension { expected: "2", found: g1.nvars().max(g2.nvars()) });
    }
    let [p1, q1] = [g1.component(0), g1.component(1)];
    let [p2, q2] = [g2.component(0), g2.component(1)];
    Ok(&(p1 * q2) - &(p2 * q1))
}

/// Coefficients over a basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<F: Field> {
    pub coefficients: Vec<Polynomial<F>>,
}

/// Writes `x = R0 G1 + R* X*` over a planar basis. `R* ` is the cofactor of
/// `x`; `R0` comes from Cramer's rule over the fraction field and is
/// certified polynomial by exact division.
pub fn decompose<F: Field>(basis: &ModuleBasis<F>, x: &VectorField<F>) -> Result<Decomposition<F>> {
    if basis.kind == BasisKind::NDim || basis.fields.len() != 2 {
        return Err(Error::WrongDimension { expected: "2", found: basis.f.nvars() });
    }
    let f = &basis.f;
    let k = cofactor(f, x)?.ok_or(Error::NotInvariant)?.into_inner();
    let (g1, g2) = (&basis.fields[0], &basis.fields[1]);
    let det = saito_det(g1, g2)?;
    if det.is_zero() {
        return Err(Error::DegenerateBasis);
    }
    let (p, q) = (x.component(0), x.component(1));
    let (p1, q1) = (g1.component(0), g1.component(1));
    let (p2, q2) = (g2.component(0), g2.component(1));

    let star_num = &(p1 * q) - &(p * q1);
    if star_num != &k * &det {
        return Err(Error::NotInSpan);
    }
    let r0_num = &(p * q2) - &(p2 * q);
    let Some(r0) = r0_num.exact_divide(&det)? else {
        return Err(Error::NotInSpan);
    };

    // x - k X* = R0 G1, read off either component
    let rest = x.sub(&g2.times(&k));
    for (num, den) in [(rest.component(0), p1), (rest.component(1), q1)] {
        if den.is_zero() {
            if !num.is_zero() {
                return Err(Error::NotInSpan);
            }
            continue;
        }
        if num.exact_divide(den)?.as_ref() != Some(&r0) {
            return Err(Error::NotInSpan);
        }
    }
    let coefficients = vec![r0, k];
    if &basis.recombine(&coefficients) != x {
        return Err(Error::NotInSpan);
    }
    Ok(Decomposition { coefficients })
}
