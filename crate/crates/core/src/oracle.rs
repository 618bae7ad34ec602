//! Brute-force corroboration: all solutions `(P_1, ..., P_n, k)` of
//! `sum P_i f_{x_i} = k f` with bounded degrees, by exact linear algebra on
//! the unknown coefficients.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{require_nonconstant, Cofactor, VectorField};
use crate::linalg::echelon;
use crate::monomial::Monomial;
use crate::nd::{full_determinant, nd_decompose, ZeroCofactorFamily};
use crate::planar::{decompose, saito_det, BasisKind, ModuleBasis};
use crate::poly::Polynomial;
use crate::scalar::Field;

/// Basis of the solutions with `deg P_i <= N` and `deg k <= N - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSolutionSpace<F: Field> {
    pub f: Polynomial<F>,
    pub degree_bound: u32,
    pub basis: Vec<(VectorField<F>, Cofactor<F>)>,
}

impl<F: Field> TruncatedSolutionSpace<F> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Every element satisfies `X(f) = k f` exactly.
    pub fn is_sound(&self) -> bool {
        self.basis.iter().all(|(x, k)| x.apply(&self.f).is_ok_and(|xf| xf == k.value() * &self.f))
    }
}

struct System<F> {
    columns: Vec<(Option<usize>, Monomial)>,
    matrix: Vec<Vec<F>>,
}

// Unknowns: coefficients of P_0..P_{n-1} on monomials of degree <= N, then
// those of k on monomials of degree <= N - 1, each block in grevlex order.
fn assemble<F: Field>(f: &Polynomial<F>, bound: u32) -> System<F> {
    let n = f.nvars();
    let grad = f.gradient();
    let field_monos = Monomial::all_up_to(n, bound);
    let mut columns: Vec<(Option<usize>, Monomial)> = Vec::new();
    for i in 0..n {
        columns.extend(field_monos.iter().map(|m| (Some(i), m.clone())));
    }
    if bound >= 1 {
        columns.extend(Monomial::all_up_to(n, bound - 1).into_iter().map(|m| (None, m)));
    }

    let images: Vec<Polynomial<F>> = columns
        .iter()
        .map(|(comp, m)| match comp {
            Some(i) => grad[*i].mul_term(m, &F::one()),
            None => f.mul_term(m, &-F::one()),
        })
        .collect();
    let mut rows: BTreeMap<Monomial, Vec<F>> = BTreeMap::new();
    for (col, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            rows.entry(m.clone()).or_insert_with(|| vec![F::zero(); columns.len()])[col] = c.clone();
        }
    }
    System { columns, matrix: rows.into_values().collect() }
}

fn unpack<F: Field>(
    columns: &[(Option<usize>, Monomial)],
    v: &[F],
    n: usize,
) -> (VectorField<F>, Cofactor<F>) {
    let mut comps = vec![Polynomial::zero(n); n];
    let mut k = Polynomial::zero(n);
    for ((comp, m), c) in columns.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let t = Polynomial::term(m.clone(), c.clone());
        match comp {
            Some(i) => comps[*i] = &comps[*i] + &t,
            None => k = &k + &t,
        }
    }
    (VectorField::new(comps).expect("consistent arity"), Cofactor(k))
}

/// Exact basis of the degree-truncated solution space. A bound of zero
/// admits only constant fields with zero cofactor.
pub fn solve_truncated<F: Field>(f: &Polynomial<F>, degree_bound: u32) -> Result<TruncatedSolutionSpace<F>> {
    require_nonconstant(f)?;
    let sys = assemble(f, degree_bound);
    let ech = echelon(&sys.matrix, sys.columns.len());
    let basis = ech.nullspace().iter().map(|v| unpack(&sys.columns, v, f.nvars())).collect();
    Ok(TruncatedSolutionSpace { f: f.clone(), degree_bound, basis })
}

/// Rank of the same system after reversing the unknown ordering; used to
/// re-derive the dimension by an independent elimination.
pub fn truncated_dimension_permuted<F: Field>(f: &Polynomial<F>, degree_bound: u32) -> Result<usize> {
    require_nonconstant(f)?;
    let sys = assemble(f, degree_bound);
    let ncols = sys.columns.len();
    let permuted: Vec<Vec<F>> = sys.matrix.iter().map(|row| row.iter().rev().cloned().collect()).collect();
    Ok(ncols - echelon(&permuted, ncols).rank())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertEntry<F: Field> {
    pub index: usize,
    pub field: VectorField<F>,
    pub outcome: std::result::Result<Vec<Polynomial<F>>, Error>,
    /// `recombination - field`; zero on success.
    pub residual: Option<VectorField<F>>,
}

impl<F: Field> CertEntry<F> {
    pub fn ok(&self) -> bool {
        self.outcome.is_ok() && self.residual.as_ref().is_some_and(VectorField::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertReport<F: Field> {
    pub entries: Vec<CertEntry<F>>,
}

impl<F: Field> CertReport<F> {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(CertEntry::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertEntry<F>> {
        self.entries.iter().filter(|e| !e.ok())
    }
}

/// Decomposes `x` over any basis produced by this crate.
pub fn decompose_over<F: Field>(basis: &ModuleBasis<F>, x: &VectorField<F>) -> Result<Vec<Polynomial<F>>> {
    match basis.kind {
        BasisKind::Theorem1 | BasisKind::Theorem3 => Ok(decompose(basis, x)?.coefficients),
        BasisKind::NDim => {
            let n = basis.fields.len();
            let family = ZeroCofactorFamily::new(basis.f.clone(), basis.fields[..n - 1].to_vec())?;
            Ok(nd_decompose(&family, &basis.fields[n - 1], x)?.coefficients)
        }
    }
}

/// Decomposes every element of the truncated space over `basis`.
pub fn span_certify<F: Field>(
    basis: &ModuleBasis<F>,
    space: &TruncatedSolutionSpace<F>,
) -> Result<CertReport<F>> {
    if basis.f != space.f {
        return Err(Error::MismatchedPolynomial);
    }
    let entries = space
        .basis
        .iter()
        .enumerate()
        .map(|(index, (x, _))| {
            let outcome = decompose_over(basis, x);
            let residual = outcome.as_ref().ok().map(|c| basis.recombine(c).sub(x));
            CertEntry { index, field: x.clone(), outcome, residual }
        })
        .collect();
    Ok(CertReport { entries })
}

/// Nonzero Saito determinant (planar) or full determinant (n variables):
/// the generators are independent over the polynomial ring.
pub fn independence_certify<F: Field>(basis: &ModuleBasis<F>) -> bool {
    match basis.fields.len() {
        0 => false,
        2 if basis.fields[0].nvars() == 2 => {
            saito_det(&basis.fields[0], &basis.fields[1]).is_ok_and(|d| !d.is_zero())
        }
        k if k == basis.fields[0].nvars() => !full_determinant(&basis.fields).is_zero(),
        _ => false,
    }
}
