//! Multivariate gcd by recursion on the last occurring variable, with a
//! subresultant remainder sequence over the ring of the other variables.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Field;

/// Greatest common divisor, normalized integer-primitive with positive
/// graded-reverse-lexicographic leading coefficient. `gcd(a, 0)` is
/// `a` normalized.
pub fn gcd<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>> {
    if a.nvars() != b.nvars() {
        return Err(Error::VariableCountMismatch { expected: a.nvars(), found: b.nvars() });
    }
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::ZeroGcd),
        (true, false) => Ok(b.normalized()),
        (false, true) => Ok(a.normalized()),
        (false, false) => Ok(raw_gcd(a, b).normalized()),
    }
}

/// Gcd of a nonempty list; zeros are skipped.
pub fn gcd_all<F: Field>(polys: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    let mut acc: Option<Polynomial<F>> = None;
    for p in polys.iter().filter(|p| !p.is_zero()) {
        acc = Some(match acc {
            None => p.normalized(),
            Some(g) => gcd(&g, p)?,
        });
        if acc.as_ref().is_some_and(Polynomial::is_constant) {
            break;
        }
    }
    acc.ok_or(Error::ZeroGcd)
}

fn main_var<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Option<usize> {
    (0..a.nvars()).rev().find(|&v| a.degree_in(v).unwrap_or(0) > 0 || b.degree_in(v).unwrap_or(0) > 0)
}

// Both inputs nonzero; result correct up to a nonzero constant.
fn raw_gcd<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(n);
    }
    let v = main_var(a, b).expect("nonconstant input");
    let da = a.degree_in(v).unwrap_or(0);
    let db = b.degree_in(v).unwrap_or(0);
    if da == 0 {
        return raw_gcd(a, &content(b, v));
    }
    if db == 0 {
        return raw_gcd(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let pa = exact(a, &ca);
    let pb = exact(b, &cb);
    let g = raw_gcd(&ca, &cb);
    let h = if da >= db { subresultant(pa, pb, v) } else { subresultant(pb, pa, v) };
    &g * &h
}

fn exact<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
    a.exact_divide(b).expect("same arity").expect("divisor must divide exactly")
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content<F: Field>(p: &Polynomial<F>, v: usize) -> Polynomial<F> {
    let mut acc: Option<Polynomial<F>> = None;
    for c in p.coefficients_in(v).into_iter().filter(|c| !c.is_zero()) {
        let next = match acc {
            None => c,
            Some(g) => raw_gcd(&g, &c),
        };
        if next.is_constant() {
            return Polynomial::one(p.nvars());
        }
        acc = Some(next);
    }
    acc.unwrap_or_else(|| Polynomial::one(p.nvars()))
}

fn primitive_part<F: Field>(p: &Polynomial<F>, v: usize) -> Polynomial<F> {
    exact(p, &content(p, v))
}

fn lead_in<F: Field>(p: &Polynomial<F>, v: usize) -> Polynomial<F> {
    p.coefficients_in(v).pop().unwrap_or_else(|| Polynomial::zero(p.nvars()))
}

/// `lc(b)^(deg a - deg b + 1) * a mod b` in the variable `v`.
fn pseudo_remainder<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>, v: usize) -> Polynomial<F> {
    let n = a.nvars();
    let da = a.degree_in(v).unwrap_or(0);
    let db = b.degree_in(v).unwrap_or(0);
    let lb = lead_in(b, v);
    let mut r = a.clone();
    let mut steps = 0;
    while !r.is_zero() && r.degree_in(v).unwrap_or(0) >= db {
        let dr = r.degree_in(v).unwrap_or(0);
        let lr = lead_in(&r, v);
        let shift = Polynomial::var(n, v).pow(dr - db);
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
        steps += 1;
    }
    let missing = (da + 1).saturating_sub(db).saturating_sub(steps);
    &lb.pow(missing) * &r
}

// deg_v a >= deg_v b >= 1, both primitive in v. Returns the primitive gcd.
fn subresultant<F: Field>(mut a: Polynomial<F>, mut b: Polynomial<F>, v: usize) -> Polynomial<F> {
    let n = a.nvars();
    let mut g = Polynomial::one(n);
    let mut h = Polynomial::one(n);
    loop {
        let delta = a.degree_in(v).unwrap_or(0) - b.degree_in(v).unwrap_or(0);
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return primitive_part(&b, v);
        }
        if r.degree_in(v).unwrap_or(0) == 0 {
            return Polynomial::one(n);
        }
        a = b;
        b = exact(&r, &(&g * &h.pow(delta)));
        g = lead_in(&a, v);
        if delta > 0 {
            h = exact(&g.pow(delta), &h.pow(delta - 1));
        }
    }
}
