//! Buchberger's algorithm with lift tracking.
//!
//! Every polynomial produced during the computation carries its expression
//! in the original generators, so membership answers come with explicit
//! certificates `f = sum c_j g_j`.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::scalar::Field;

/// Reduced Gröbner basis plus the lift of every basis element.
#[derive(Clone, PartialEq)]
pub struct GroebnerBasis<F> {
    order: MonomialOrder,
    generators: Vec<Polynomial<F>>,
    basis: Vec<Polynomial<F>>,
    /// `basis[i] = sum_j lift[i][j] * generators[j]`
    lift: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> std::fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroebnerBasis").field("order", &self.order).field("basis", &self.basis).finish()
    }
}

/// Dimension of `K[x]/I` as a vector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite { value: usize, standard_monomials: Vec<Monomial> },
    Infinite,
}

impl QuotientDimension {
    pub fn is_finite(&self) -> bool {
        matches!(self, QuotientDimension::Finite { .. })
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            QuotientDimension::Finite { value, .. } => Some(*value),
            QuotientDimension::Infinite => None,
        }
    }
}

struct Tracked<F> {
    poly: Polynomial<F>,
    lift: Vec<Polynomial<F>>,
}

impl<F: Field> Tracked<F> {
    fn scale(&mut self, c: &F) {
        self.poly = self.poly.scale(c);
        for l in &mut self.lift {
            *l = l.scale(c);
        }
    }

    fn make_monic(&mut self, order: &MonomialOrder) {
        if let Some(lc) = self.poly.leading_coefficient(order) {
            let inv = F::one() / lc;
            self.scale(&inv);
        }
    }
}

/// Multivariate division: `f = sum quotients[i] * divisors[i] + remainder`,
/// where no term of the remainder is divisible by any divisor's leading
/// monomial. The first divisor (in list order) whose leading monomial
/// divides the current leading term is used.
pub fn divide<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    order: &MonomialOrder,
) -> (Vec<Polynomial<F>>, Polynomial<F>) {
    let n = f.nvars();
    let leads: Vec<Option<(Monomial, F)>> =
        divisors.iter().map(|d| d.leading_term(order).map(|(m, c)| (m.clone(), c.clone()))).collect();
    let mut quotients = vec![Polynomial::zero(n); divisors.len()];
    let mut remainder = Polynomial::zero(n);
    let mut p = f.clone();
    while let Some((m, c)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads.iter().enumerate().find_map(|(i, l)| {
            let (lm, lc) = l.as_ref()?;
            lm.quotient(&m).map(|q| (i, q, c.clone() / lc))
        });
        match hit {
            Some((i, qm, qc)) => {
                p = &p - &divisors[i].mul_term(&qm, &qc);
                quotients[i].add_term(qm, qc);
            }
            None => {
                p = &p - &Polynomial::term(m.clone(), c.clone());
                remainder.add_term(m, c);
            }
        }
    }
    (quotients, remainder)
}

fn s_polynomial<F: Field>(
    a: &Polynomial<F>,
    b: &Polynomial<F>,
    order: &MonomialOrder,
) -> (Polynomial<F>, (Monomial, F), (Monomial, F)) {
    let (ma, ca) = a.leading_term(order).expect("nonzero");
    let (mb, cb) = b.leading_term(order).expect("nonzero");
    let l = ma.lcm(mb);
    let ta = (ma.quotient(&l).unwrap(), F::one() / ca);
    let tb = (mb.quotient(&l).unwrap(), F::one() / cb);
    let s = &a.mul_term(&ta.0, &ta.1) - &b.mul_term(&tb.0, &tb.1);
    (s, ta, tb)
}

fn check_generators<F: Field>(generators: &[Polynomial<F>]) -> Result<usize> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let n = first.nvars();
    for g in generators {
        if g.nvars() != n {
            return Err(Error::VariableCountMismatch { expected: n, found: g.nvars() });
        }
    }
    if generators.iter().all(Polynomial::is_zero) {
        return Err(Error::EmptyGenerators);
    }
    Ok(n)
}

impl<F: Field> GroebnerBasis<F> {
    /// Reduced Gröbner basis of the ideal generated by `generators`.
    ///
    /// Pairs are processed by the normal strategy (smallest lcm first, ties by
    /// index) with the coprime and chain criteria. Output is deterministic.
    pub fn new(generators: &[Polynomial<F>], order: MonomialOrder) -> Result<Self> {
        let n = check_generators(generators)?;
        let m = generators.len();
        let unit = |j: usize| -> Vec<Polynomial<F>> {
            (0..m).map(|k| if k == j { Polynomial::one(n) } else { Polynomial::zero(n) }).collect()
        };

        let mut work: Vec<Tracked<F>> = Vec::new();
        for (j, g) in generators.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let mut t = Tracked { poly: g.clone(), lift: unit(j) };
            t.make_monic(&order);
            work.push(t);
        }

        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..work.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }

        while !pairs.is_empty() {
            let lcm_of = |&(i, j): &(usize, usize), w: &[Tracked<F>]| {
                let a = w[i].poly.leading_monomial(&order).unwrap();
                let b = w[j].poly.leading_monomial(&order).unwrap();
                a.lcm(b)
            };
            let pick = (0..pairs.len())
                .min_by(|&p, &q| {
                    order
                        .cmp(&lcm_of(&pairs[p], &work), &lcm_of(&pairs[q], &work))
                        .then_with(|| (pairs[p].1, pairs[p].0).cmp(&(pairs[q].1, pairs[q].0)))
                })
                .unwrap();
            let (i, j) = pairs.remove(pick);

            let lmi = work[i].poly.leading_monomial(&order).unwrap().clone();
            let lmj = work[j].poly.leading_monomial(&order).unwrap().clone();
            if lmi.coprime(&lmj) {
                continue;
            }
            let l = lmi.lcm(&lmj);
            let pending = |a: usize, b: usize| pairs.contains(&(a.min(b), a.max(b)));
            let chain = (0..work.len()).any(|k| {
                k != i
                    && k != j
                    && work[k].poly.leading_monomial(&order).unwrap().divides(&l)
                    && !pending(i, k)
                    && !pending(j, k)
            });
            if chain {
                continue;
            }

            let (s, (mi, ci), (mj, cj)) = s_polynomial(&work[i].poly, &work[j].poly, &order);
            let mut lift: Vec<Polynomial<F>> = work[i]
                .lift
                .iter()
                .zip(&work[j].lift)
                .map(|(a, b)| &a.mul_term(&mi, &ci) - &b.mul_term(&mj, &cj))
                .collect();
            let divisors: Vec<Polynomial<F>> = work.iter().map(|t| t.poly.clone()).collect();
            let (quots, rem) = divide(&s, &divisors, &order);
            if rem.is_zero() {
                continue;
            }
            for (q, t) in quots.iter().zip(&work) {
                if q.is_zero() {
                    continue;
                }
                for (l, tl) in lift.iter_mut().zip(&t.lift) {
                    *l = &*l - &(q * tl);
                }
            }
            let mut t = Tracked { poly: rem, lift };
            t.make_monic(&order);
            let new = work.len();
            work.push(t);
            for k in 0..new {
                pairs.push((k, new));
            }
        }

        Ok(Self::reduce(generators.to_vec(), work, order))
    }

    fn reduce(generators: Vec<Polynomial<F>>, work: Vec<Tracked<F>>, order: MonomialOrder) -> Self {
        // minimal basis: drop elements whose leading monomial is divisible by
        // another kept leading monomial (earlier wins on equality)
        let mut kept: Vec<Tracked<F>> = Vec::new();
        for (idx, t) in work.iter().enumerate() {
            let lm = t.poly.leading_monomial(&order).unwrap();
            let redundant = work.iter().enumerate().any(|(k, o)| {
                if k == idx {
                    return false;
                }
                let lo = o.poly.leading_monomial(&order).unwrap();
                lo.divides(lm) && (lo != lm || k < idx)
            });
            if !redundant {
                kept.push(Tracked { poly: t.poly.clone(), lift: t.lift.clone() });
            }
        }
        kept.sort_by(|a, b| {
            order.cmp(a.poly.leading_monomial(&order).unwrap(), b.poly.leading_monomial(&order).unwrap())
        });

        // tail-reduce each element by the others
        for idx in 0..kept.len() {
            let others: Vec<Polynomial<F>> = kept
                .iter()
                .enumerate()
                .map(|(k, t)| if k == idx { Polynomial::zero(t.poly.nvars()) } else { t.poly.clone() })
                .collect();
            let (quots, rem) = divide(&kept[idx].poly, &others, &order);
            let mut lift = kept[idx].lift.clone();
            for (k, q) in quots.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                for (l, tl) in lift.iter_mut().zip(&kept[k].lift) {
                    *l = &*l - &(q * tl);
                }
            }
            let mut t = Tracked { poly: rem, lift };
            t.make_monic(&order);
            kept[idx] = t;
        }

        let (basis, lift) = kept.into_iter().map(|t| (t.poly, t.lift)).unzip();
        GroebnerBasis { order, generators, basis, lift }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    /// Basis elements, ascending by leading monomial.
    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn lift_matrix(&self) -> &[Vec<Polynomial<F>>] {
        &self.lift
    }

    pub fn nvars(&self) -> usize {
        self.generators[0].nvars()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|b| b.leading_monomial(&self.order).unwrap().clone()).collect()
    }

    /// `f = sum quotients[i] * basis[i] + remainder`.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<(Polynomial<F>, Vec<Polynomial<F>>)> {
        if f.nvars() != self.nvars() {
            return Err(Error::VariableCountMismatch { expected: self.nvars(), found: f.nvars() });
        }
        let (q, r) = divide(f, &self.basis, &self.order);
        Ok((r, q))
    }

    /// Coefficients `c` with `f = sum c_j * generators[j]`, or `None` when
    /// `f` is not in the ideal.
    pub fn lift(&self, f: &Polynomial<F>) -> Result<Option<Vec<Polynomial<F>>>> {
        let (rem, quots) = self.normal_form(f)?;
        if !rem.is_zero() {
            return Ok(None);
        }
        let n = self.nvars();
        let mut coeffs = vec![Polynomial::zero(n); self.generators.len()];
        for (q, row) in quots.iter().zip(&self.lift) {
            if q.is_zero() {
                continue;
            }
            for (c, l) in coeffs.iter_mut().zip(row) {
                *c = &*c + &(q * l);
            }
        }
        Ok(Some(coeffs))
    }

    /// Staircase test on the leading monomials.
    pub fn quotient_dimension(&self) -> QuotientDimension {
        let n = self.nvars();
        let leads = self.leading_monomials();
        if leads.iter().any(Monomial::is_one) {
            return QuotientDimension::Finite { value: 0, standard_monomials: Vec::new() };
        }
        let mut bounds = vec![None::<u32>; n];
        for m in &leads {
            if let Some(v) = m.pure_power_var() {
                let e = m.exponents()[v];
                bounds[v] = Some(bounds[v].map_or(e, |b: u32| b.min(e)));
            }
        }
        if bounds.iter().any(Option::is_none) {
            return QuotientDimension::Infinite;
        }
        let bounds: Vec<u32> = bounds.into_iter().map(Option::unwrap).collect();
        let max_deg: u32 = bounds.iter().map(|b| b - 1).sum();
        let standard: Vec<Monomial> = Monomial::all_up_to(n, max_deg)
            .into_iter()
            .filter(|m| m.exponents().iter().zip(&bounds).all(|(e, b)| e < b))
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect();
        QuotientDimension::Finite { value: standard.len(), standard_monomials: standard }
    }

    /// Recomputes every S-polynomial of the returned basis and checks that it
    /// reduces to zero, without any pair criteria.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for j in 0..self.basis.len() {
            for i in 0..j {
                let (s, _, _) = s_polynomial(&self.basis[i], &self.basis[j], &self.order);
                let (_, r) = divide(&s, &self.basis, &self.order);
                if !r.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Monic leading coefficients and no term of any element divisible by
    /// another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.basis.iter().enumerate().all(|(i, b)| {
            b.leading_coefficient(&self.order).is_some_and(|c| c.is_one())
                && b.terms().all(|(m, _)| leads.iter().enumerate().all(|(k, l)| k == i || !l.divides(m)))
        })
    }

    /// Checks `basis[i] = sum_j lift[i][j] * generators[j]` exactly.
    pub fn lifts_are_exact(&self) -> bool {
        self.basis.iter().zip(&self.lift).all(|(b, row)| {
            let combo = row
                .iter()
                .zip(&self.generators)
                .fold(Polynomial::zero(self.nvars()), |acc, (c, g)| &acc + &(c * g));
            &combo == b
        })
    }
}

/// Membership of `f` in `<generators>` with an explicit lift, computed under
/// graded-reverse-lexicographic order.
pub fn member_with_lift<F: Field>(
    f: &Polynomial<F>,
    generators: &[Polynomial<F>],
) -> Result<Option<Vec<Polynomial<F>>>> {
    member_with_lift_in(f, generators, MonomialOrder::Grevlex)
}

pub fn member_with_lift_in<F: Field>(
    f: &Polynomial<F>,
    generators: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<Option<Vec<Polynomial<F>>>> {
    GroebnerBasis::new(generators, order)?.lift(f)
}

pub fn quotient_dimension<F: Field>(
    generators: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<QuotientDimension> {
    Ok(GroebnerBasis::new(generators, order)?.quotient_dimension())
}
