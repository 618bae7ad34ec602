//! Fraction-free elimination over an exact field and determinants of
//! polynomial matrices.

use crate::poly::Polynomial;
use crate::scalar::Field;

/// Row echelon form computed by Bareiss elimination. Rows are first scaled
/// to coprime integers so every intermediate entry stays integral.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub rows: Vec<Vec<F>>,
    /// `(row, column)` of each pivot, in order.
    pub pivots: Vec<(usize, usize)>,
    pub ncols: usize,
}

pub fn echelon<F: Field>(matrix: &[Vec<F>], ncols: usize) -> Echelon<F> {
    let mut a: Vec<Vec<F>> = matrix
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .map(|r| {
            let c = F::primitive_factor(r);
            r.iter().map(|v| v.clone() * &c).collect()
        })
        .collect();
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = F::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // first nonzero in column order
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in r + 1..nrows {
            let (top, rest) = a.split_at_mut(i);
            let pivot_row = &top[r];
            let row = &mut rest[0];
            let lead = row[c].clone();
            for (v, p) in row[c + 1..ncols].iter_mut().zip(&pivot_row[c + 1..ncols]) {
                *v = (piv.clone() * &*v - lead.clone() * p) / &prev;
            }
            row[c] = F::zero();
        }
        prev = piv;
        pivots.push((r, c));
        r += 1;
    }
    Echelon { rows: a, pivots, ncols }
}

impl<F: Field> Echelon<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right nullspace, one vector per free column (ascending),
    /// each scaled to coprime integers with a positive free entry.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let pivot_cols: Vec<usize> = self.pivots.iter().map(|&(_, c)| c).collect();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![F::zero(); self.ncols];
            v[fc] = F::one();
            for &(r, pc) in self.pivots.iter().rev() {
                let row = &self.rows[r];
                let mut s = F::zero();
                for j in pc + 1..self.ncols {
                    if !row[j].is_zero() && !v[j].is_zero() {
                        s = s + row[j].clone() * &v[j];
                    }
                }
                v[pc] = -s / &row[pc];
            }
            let c = F::primitive_factor(&v);
            out.push(v.into_iter().map(|x| x * &c).collect());
        }
        out
    }
}

/// Determinant of a square polynomial matrix by Bareiss elimination with
/// exact polynomial division.
pub fn poly_determinant<F: Field>(matrix: &[Vec<Polynomial<F>>], nvars: usize) -> Polynomial<F> {
    let n = matrix.len();
    if n == 0 {
        return Polynomial::one(nvars);
    }
    let mut a: Vec<Vec<Polynomial<F>>> = matrix.to_vec();
    let mut prev = Polynomial::one(nvars);
    let mut sign_flip = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Polynomial::zero(nvars);
            };
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_divide(&prev).expect("same arity").expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}
