//! Smith normal form and Hermite column reduction over `Z`.
//!
//! Both routines are deterministic: pivots are chosen by smallest absolute
//! value with ties broken at the lowest `(row, col)` position, which keeps
//! entry growth mild and makes every downstream canonical form reproducible.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::matrix::Matrix;

/// Invertible row/column transforms recorded next to the diagonal form:
/// `u * m * v = d`, with `u_inv` and `v_inv` the exact inverses.
pub struct SmithForm {
    pub u: Matrix,
    pub u_inv: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).filter(|&i| !self.d[(i, i)].is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Worker {
    d: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl Worker {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// `row[a] += q * row[b]`, with the inverse op applied to `u_inv`.
    fn row_axpy(&mut self, a: usize, b: usize, q: &BigInt) {
        self.d.row_axpy(a, b, q);
        self.u.row_axpy(a, b, q);
        self.u_inv.col_axpy(b, a, &-q);
    }

    /// `col[a] += q * col[b]`
    fn col_axpy(&mut self, a: usize, b: usize, q: &BigInt) {
        self.d.col_axpy(a, b, q);
        self.v.col_axpy(a, b, q);
        self.v_inv.row_axpy(b, a, &-q);
    }

    fn negate_row(&mut self, a: usize) {
        self.d.negate_row(a);
        self.u.negate_row(a);
        self.u_inv.negate_col(a);
    }
}

/// Diagonalize an integer matrix: returns `(u, d, v)` with `u * m * v = d`,
/// `u` and `v` unimodular and the nonnegative diagonal satisfying `d_i | d_{i+1}`.
/// Total on every shape, including empty ones.
pub fn smith_normal_form(m: &Matrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Worker {
        d: m.clone(),
        u: Matrix::identity(rows),
        u_inv: Matrix::identity(rows),
        v: Matrix::identity(cols),
        v_inv: Matrix::identity(cols),
    };

    let steps = rows.min(cols);
    for k in 0..steps {
        // Runs until the block is zero or the pivot divides everything below.
        while let Some((pi, pj)) = w.d.abs_min_entry(k, k) {
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);

            for i in k + 1..rows {
                if !w.d[(i, k)].is_zero() {
                    let q = -(&w.d[(i, k)] / &w.d[(k, k)]);
                    w.row_axpy(i, k, &q);
                }
            }
            for j in k + 1..cols {
                if !w.d[(k, j)].is_zero() {
                    let q = -(&w.d[(k, j)] / &w.d[(k, k)]);
                    w.col_axpy(j, k, &q);
                }
            }

            let col_clear = (k + 1..rows).all(|i| w.d[(i, k)].is_zero());
            let row_clear = (k + 1..cols).all(|j| w.d[(k, j)].is_zero());
            if !col_clear || !row_clear {
                continue; // residues are smaller than the pivot; repeat
            }

            // Divisibility pass: drag a non-divisible entry into the work row.
            let pivot = w.d[(k, k)].clone();
            let offender = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&w.d[(i, j)] % &pivot).is_zero());
            match offender {
                Some((i, _)) => {
                    let one = BigInt::from(1);
                    w.row_axpy(k, i, &one);
                }
                None => break,
            }
        }
        if w.d[(k, k)].is_negative() {
            w.negate_row(k);
        }
    }

    debug_assert_eq!(w.u.mul(m).mul(&w.v), w.d);
    debug_assert!(w.u.mul(&w.u_inv).is_identity());
    debug_assert!(w.v_inv.mul(&w.v).is_identity());
    SmithForm {
        u: w.u,
        u_inv: w.u_inv,
        d: w.d,
        v: w.v,
        v_inv: w.v_inv,
    }
}

/// Unique row-style Hermite normal form of the row lattice of `m`:
/// row echelon with positive pivots, entries above each pivot reduced into
/// `[0, pivot)`, zero rows dropped.
pub fn row_hermite(m: &Matrix) -> Matrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Reduce the column below r until a single nonzero survives.
        loop {
            let pivot = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by_key(|&i| (a[(i, c)].abs(), i));
            let Some(p) = pivot else {
                break;
            };
            a.swap_rows(r, p);
            let mut again = false;
            for i in r + 1..rows {
                if !a[(i, c)].is_zero() {
                    let q = -(&a[(i, c)] / &a[(r, c)]);
                    a.row_axpy(i, r, &q);
                    again = again || !a[(i, c)].is_zero();
                }
            }
            if !again {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        // Euclidean reduction of the entries above the pivot.
        let pivot = a[(r, c)].clone();
        for i in 0..r {
            let q = -num_integer::Integer::div_floor(&a[(i, c)], &pivot);
            a.row_axpy(i, r, &q);
        }
        r += 1;
    }
    a.row_block(0, r)
}

/// Canonical generating matrix for the column lattice of `m`: the column-style
/// Hermite normal form with zero columns dropped.
pub fn column_hermite(m: &Matrix) -> Matrix {
    row_hermite(&m.transpose()).transpose()
}
