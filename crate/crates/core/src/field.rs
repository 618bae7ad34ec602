//! Polynomial vector fields and their cofactors along a hypersurface.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{default_names, Polynomial};
use crate::scalar::Field;

/// `sum_i P_i d/dx_i` with polynomial components in a common ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorField<F> {
    components: Vec<Polynomial<F>>,
}

impl<F: Field> VectorField<F> {
    pub fn new(components: Vec<Polynomial<F>>) -> Result<Self> {
        let n = components
            .first()
            .map(Polynomial::nvars)
            .ok_or(Error::WrongDimension { expected: "at least 1", found: 0 })?;
        if components.len() != n {
            return Err(Error::VariableCountMismatch { expected: n, found: components.len() });
        }
        for c in &components {
            if c.nvars() != n {
                return Err(Error::VariableCountMismatch { expected: n, found: c.nvars() });
            }
        }
        Ok(VectorField { components })
    }

    pub fn zero(nvars: usize) -> Self {
        VectorField { components: vec![Polynomial::zero(nvars); nvars] }
    }

    /// `p * d/dx_index`.
    pub fn along(nvars: usize, index: usize, p: Polynomial<F>) -> Self {
        let mut v = Self::zero(nvars);
        v.components[index] = p;
        v
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial<F> {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Applies the field as a derivation: `sum_i P_i * df/dx_i`.
    pub fn apply(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if f.nvars() != self.nvars() {
            return Err(Error::VariableCountMismatch { expected: self.nvars(), found: f.nvars() });
        }
        let mut acc = Polynomial::zero(f.nvars());
        for (i, p) in self.components.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            acc = &acc + &(p * &f.partial_derivative(i)?);
        }
        Ok(acc)
    }

    /// Multiplies every component by the polynomial `r`.
    pub fn times(&self, r: &Polynomial<F>) -> Self {
        VectorField { components: self.components.iter().map(|c| c * r).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars(), other.nvars(), "vector field arity");
        VectorField {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars(), other.nvars(), "vector field arity");
        VectorField {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect(),
        }
    }

    /// Divides every component exactly by `d`; `None` if some component is
    /// not divisible.
    pub fn exact_divide(&self, d: &Polynomial<F>) -> Result<Option<Self>> {
        let mut out = Vec::with_capacity(self.nvars());
        for c in &self.components {
            match c.exact_divide(d)? {
                Some(q) => out.push(q),
                None => return Ok(None),
            }
        }
        Ok(Some(VectorField { components: out }))
    }

    /// `sum_j coeffs[j] * fields[j]`.
    pub fn combination(coeffs: &[Polynomial<F>], fields: &[VectorField<F>]) -> Self {
        assert_eq!(coeffs.len(), fields.len());
        let n = fields.first().map_or_else(|| coeffs[0].nvars(), VectorField::nvars);
        coeffs.iter().zip(fields).fold(Self::zero(n), |acc, (c, x)| acc.add(&x.times(c)))
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        self.components.iter().map(|c| c.display_with(names)).collect::<Vec<_>>().join("; ")
    }
}

impl<F: Field> fmt::Display for VectorField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl<F: Field> fmt::Debug for VectorField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({})", self)
    }
}

/// The polynomial `k` in `X(f) = k f`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cofactor<F>(pub Polynomial<F>);

impl<F: Field> Cofactor<F> {
    pub fn value(&self) -> &Polynomial<F> {
        &self.0
    }

    pub fn into_inner(self) -> Polynomial<F> {
        self.0
    }
}

impl<F: Field> fmt::Debug for Cofactor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cofactor({})", self.0)
    }
}

pub(crate) fn require_nonconstant<F: Field>(f: &Polynomial<F>) -> Result<()> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(())
}

/// Cofactor of `x` along `f = 0`: the exact quotient `X(f) / f`, or `None`
/// when `f` does not divide `X(f)`.
pub fn cofactor<F: Field>(f: &Polynomial<F>, x: &VectorField<F>) -> Result<Option<Cofactor<F>>> {
    require_nonconstant(f)?;
    let xf = x.apply(f)?;
    Ok(xf.exact_divide(f)?.map(Cofactor))
}
