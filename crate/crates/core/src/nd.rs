//! Hypersurfaces in `n >= 3` variables: a caller-supplied family of `n - 1`
//! cofactor-zero fields, the maximal minors of their coefficient matrix,
//! and Cramer decomposition over `(X_1, ..., X_{n-1}, X*)`.

use crate::error::{Error, Result};
use crate::field::{cofactor, require_nonconstant, Cofactor, VectorField};
use crate::gcd::gcd_all;
use crate::groebner::quotient_dimension;
use crate::linalg::poly_determinant;
use crate::monomial::MonomialOrder;
use crate::planar::{gradient_lift, BasisKind, Decomposition, ModuleBasis};
use crate::poly::Polynomial;
use crate::scalar::Field;

/// `n - 1` fields, each annihilating `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroCofactorFamily<F: Field> {
    f: Polynomial<F>,
    fields: Vec<VectorField<F>>,
}

impl<F: Field> ZeroCofactorFamily<F> {
    pub fn new(f: Polynomial<F>, fields: Vec<VectorField<F>>) -> Result<Self> {
        require_nonconstant(&f)?;
        let n = f.nvars();
        if fields.len() + 1 != n {
            return Err(Error::VariableCountMismatch { expected: n - 1, found: fields.len() });
        }
        for (index, x) in fields.iter().enumerate() {
            if x.nvars() != n {
                return Err(Error::VariableCountMismatch { expected: n, found: x.nvars() });
            }
            if !x.apply(&f)?.is_zero() {
                return Err(Error::InvalidFamily { index });
            }
        }
        Ok(ZeroCofactorFamily { f, fields })
    }

    pub fn f(&self) -> &Polynomial<F> {
        &self.f
    }

    pub fn fields(&self) -> &[VectorField<F>] {
        &self.fields
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    /// The `n x (n-1)` matrix whose column `j` holds the components of field `j`.
    pub fn matrix(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.nvars()).map(|row| self.fields.iter().map(|x| x.component(row).clone()).collect()).collect()
    }

    /// Determinants of the matrix with row `j` deleted, no extra sign.
    pub fn minors(&self) -> Vec<Polynomial<F>> {
        minors_of(&self.matrix(), self.nvars())
    }

    /// `f_{x_i} (-1)^j M_j = f_{x_j} (-1)^i M_i` for all `i, j`.
    pub fn gradient_parallel_to_minors(&self) -> bool {
        let grad = self.f.gradient();
        let signed: Vec<Polynomial<F>> =
            self.minors().into_iter().enumerate().map(|(j, m)| if j % 2 == 0 { m } else { -m }).collect();
        (0..grad.len()).all(|i| (0..grad.len()).all(|j| &grad[i] * &signed[j] == &grad[j] * &signed[i]))
    }
}

fn minors_of<F: Field>(m: &[Vec<Polynomial<F>>], nvars: usize) -> Vec<Polynomial<F>> {
    (0..m.len())
        .map(|skip| {
            let sub: Vec<Vec<Polynomial<F>>> =
                m.iter().enumerate().filter(|(r, _)| *r != skip).map(|(_, row)| row.clone()).collect();
            poly_determinant(&sub, nvars)
        })
        .collect()
}

/// Verdicts on the three hypotheses for `(X_1, ..., X_{n-1}, X*)` to be a
/// free basis.
#[derive(Clone, Debug, PartialEq)]
pub struct NdBasisReport<F: Field> {
    /// Generic rank `n - 1`: some minor is not identically zero.
    pub condition1: bool,
    /// The minors generate an ideal containing a pure power of every
    /// variable, so their common zero set is finite. Sufficient for the
    /// codimension requirement on the rank-drop locus, not necessary.
    pub rank_drop_locus_finite: bool,
    /// The minors have gcd one.
    pub condition2: bool,
    /// `f` lies in the ideal of its partials.
    pub condition3: bool,
    pub minors: Vec<Polynomial<F>>,
    /// Gradient lift `sum Q_m d/dx_m` with `f = sum Q_m f_{x_m}`.
    pub x_star: Option<VectorField<F>>,
}

impl<F: Field> NdBasisReport<F> {
    pub fn all_hold(&self) -> bool {
        self.condition1 && self.condition2 && self.condition3
    }
}

pub fn check_conditions<F: Field>(family: &ZeroCofactorFamily<F>) -> Result<NdBasisReport<F>> {
    let n = family.nvars();
    if n < 3 {
        return Err(Error::WrongDimension { expected: "at least 3", found: n });
    }
    let minors = family.minors();
    let nonzero: Vec<Polynomial<F>> = minors.iter().filter(|m| !m.is_zero()).cloned().collect();
    let condition1 = !nonzero.is_empty();
    let (condition2, rank_drop_locus_finite) = if condition1 {
        (gcd_all(&nonzero)?.is_constant(), quotient_dimension(&nonzero, MonomialOrder::Grevlex)?.is_finite())
    } else {
        (false, false)
    };
    let x_star = gradient_lift(family.f())?;
    Ok(NdBasisReport {
        condition1,
        rank_drop_locus_finite,
        condition2,
        condition3: x_star.is_some(),
        minors,
        x_star,
    })
}

/// The basis `(X_1, ..., X_{n-1}, X*)` with cofactors `(0, ..., 0, 1)`.
pub fn nd_basis<F: Field>(family: &ZeroCofactorFamily<F>, x_star: VectorField<F>) -> Result<ModuleBasis<F>> {
    let n = family.nvars();
    let f = family.f();
    if x_star.nvars() != n {
        return Err(Error::VariableCountMismatch { expected: n, found: x_star.nvars() });
    }
    if x_star.apply(f)? != *f {
        return Err(Error::NotInvariant);
    }
    let mut fields = family.fields().to_vec();
    fields.push(x_star);
    let mut cofactors = vec![Cofactor(Polynomial::zero(n)); n - 1];
    cofactors.push(Cofactor(Polynomial::one(n)));
    Ok(ModuleBasis {
        kind: BasisKind::NDim,
        f: f.clone(),
        fields,
        cofactors,
        divisor: gcd_all(&f.gradient())?,
    })
}

/// Determinant of the square matrix whose columns are the given fields.
pub fn full_determinant<F: Field>(fields: &[VectorField<F>]) -> Polynomial<F> {
    let n = fields[0].nvars();
    let m: Vec<Vec<Polynomial<F>>> =
        (0..n).map(|row| fields.iter().map(|x| x.component(row).clone()).collect()).collect();
    poly_determinant(&m, n)
}

/// Writes `x = sum_j R_j X_j + R* X*`. `R*` is the cofactor of `x`; each
/// `R_j` is computed by Cramer's rule on every row-deleted subsystem with a
/// nonzero minor, and all quotients must agree and be polynomial.
pub fn nd_decompose<F: Field>(
    family: &ZeroCofactorFamily<F>,
    x_star: &VectorField<F>,
    x: &VectorField<F>,
) -> Result<Decomposition<F>> {
    let n = family.nvars();
    let f = family.f();
    if x.nvars() != n || x_star.nvars() != n {
        return Err(Error::VariableCountMismatch { expected: n, found: x.nvars().min(x_star.nvars()) });
    }
    let k = cofactor(f, x)?.ok_or(Error::NotInvariant)?.into_inner();

    let mut all = family.fields().to_vec();
    all.push(x_star.clone());
    let delta = full_determinant(&all);
    if delta.is_zero() {
        return Err(Error::DegenerateBasis);
    }
    // Cramer numerator for R*
    let mut with_x = family.fields().to_vec();
    with_x.push(x.clone());
    if full_determinant(&with_x) != &k * &delta {
        return Err(Error::NotInSpan);
    }

    let rest = x.sub(&x_star.times(&k));
    let matrix = family.matrix();
    let minors = minors_of(&matrix, n);
    let rows: Vec<usize> = (0..n).filter(|&i| !minors[i].is_zero()).collect();
    if rows.is_empty() {
        return Err(Error::DegenerateBasis);
    }

    let mut coefficients = Vec::with_capacity(n);
    for j in 0..n - 1 {
        let mut replaced = matrix.clone();
        for (row, r) in replaced.iter_mut().enumerate() {
            r[j] = rest.component(row).clone();
        }
        let numerators = minors_of(&replaced, n);
        let first = rows[0];
        let Some(rj) = numerators[first].exact_divide(&minors[first])? else {
            return Err(Error::NotInSpan);
        };
        for &i in &rows[1..] {
            if numerators[i] != &rj * &minors[i] {
                return Err(Error::NotInSpan);
            }
        }
        coefficients.push(rj);
    }
    coefficients.push(k);
    if VectorField::combination(&coefficients, &all) != *x {
        return Err(Error::NotInSpan);
    }
    Ok(Decomposition { coefficients })
}
