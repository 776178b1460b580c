//! Linear solving over `Z` and `Z/m`.
//!
//! The modular cases are handled by one lifting trick throughout: a system
//! `A x = b (mod m)` becomes the integer system `[A | m*I] (x, t) = b`, so the
//! Smith normal form of an integer matrix is the only decomposition needed.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrix::Matrix;
use crate::ring::RingSpec;
use crate::snf::{column_hermite, smith_normal_form, SmithForm};

fn lift(a: &Matrix, ring: RingSpec) -> Matrix {
    if ring.is_integers() {
        a.clone()
    } else {
        let m = Matrix::identity(a.rows()).scale(&BigInt::from(ring.modulus()));
        Matrix::hstack(&[a, &m])
    }
}

/// One solution of `a * x = rhs` over `Z` for every column of `rhs`, or `None`
/// when some column has no solution. Free coordinates are pinned to zero
/// (the back-substitution representative), so the output is deterministic.
fn solve_integer(snf: &SmithForm, rhs: &Matrix) -> Option<Matrix> {
    let rows = snf.d.rows();
    let cols = snf.d.cols();
    let steps = rows.min(cols);
    let c = snf.u.mul(rhs);
    let mut y = Matrix::zero(cols, rhs.cols());
    for col in 0..rhs.cols() {
        for i in 0..rows {
            let di = if i < steps {
                snf.d[(i, i)].clone()
            } else {
                BigInt::zero()
            };
            let ci = &c[(i, col)];
            if di.is_zero() {
                if !ci.is_zero() {
                    return None;
                }
            } else {
                if !(ci % &di).is_zero() {
                    return None;
                }
                y[(i, col)] = ci / &di;
            }
        }
    }
    Some(snf.v.mul(&y))
}

/// Solve `a * x ≡ b (mod ring)`, exact equality over `Z`. `b` must be a column.
pub fn solve_modular(a: &Matrix, b: &Matrix, ring: RingSpec) -> Option<Matrix> {
    solve_matrix(a, b, ring)
}

/// Matrix right-hand-side version of [`solve_modular`]; the decomposition is
/// shared across columns. Over `Z/m` the result is reduced into `[0, m)`.
pub fn solve_matrix(a: &Matrix, rhs: &Matrix, ring: RingSpec) -> Option<Matrix> {
    assert_eq!(
        a.rows(),
        rhs.rows(),
        "solve: lhs has {} rows, rhs has {}",
        a.rows(),
        rhs.rows()
    );
    let lifted = lift(a, ring);
    let snf = smith_normal_form(&lifted);
    let full = solve_integer(&snf, rhs)?;
    let x = full.row_block(0, a.cols());
    Some(x.reduced_mod(ring.modulus()))
}

/// Canonical generating set for `{ x : a * x ≡ 0 (mod ring) }` as columns.
///
/// The generators are the Hermite basis of the solution lattice (which over
/// `Z/m` contains `m * e_i` for every coordinate), so downstream constructions
/// built from kernels are reproducible.
pub fn kernel_columns(a: &Matrix, ring: RingSpec) -> Matrix {
    let lifted = lift(a, ring);
    let snf = smith_normal_form(&lifted);
    let steps = lifted.rows().min(lifted.cols());
    let free: Vec<usize> = (0..lifted.cols())
        .filter(|&j| j >= steps || snf.d[(j, j)].is_zero())
        .collect();
    let basis = snf.v.select_columns(&free);
    column_hermite(&basis.row_block(0, a.cols()))
}

/// A simultaneous linear system in several unknown matrices over the ring.
///
/// Every equation has the shape `sum_j  L_j * X_{u_j} * R_j = rhs (mod m)`;
/// vectorization turns each term into `(R^T (x) L)` acting on `vec(X)`, so the
/// whole system is one call to [`solve_matrix`]. This is how section-finding,
/// fixed-end equivalence and lifting problems are all solved.
pub struct MatrixSystem {
    ring: RingSpec,
    shapes: Vec<(usize, usize)>,
    equations: Vec<Equation>,
}

struct Equation {
    terms: Vec<(usize, Matrix, Matrix)>,
    rhs: Matrix,
}

impl MatrixSystem {
    pub fn new(ring: RingSpec) -> Self {
        MatrixSystem {
            ring,
            shapes: Vec::new(),
            equations: Vec::new(),
        }
    }

    pub fn unknown(&mut self, rows: usize, cols: usize) -> usize {
        self.shapes.push((rows, cols));
        self.shapes.len() - 1
    }

    /// Adds `sum_j L_j * X_{u_j} * R_j = rhs`. Shapes are checked eagerly.
    pub fn equation(&mut self, terms: &[(usize, &Matrix, &Matrix)], rhs: &Matrix) {
        for &(u, l, r) in terms {
            let (xr, xc) = self.shapes[u];
            assert_eq!(l.cols(), xr, "left factor does not match unknown {u}");
            assert_eq!(r.rows(), xc, "right factor does not match unknown {u}");
            assert_eq!(l.rows(), rhs.rows());
            assert_eq!(r.cols(), rhs.cols());
        }
        self.equations.push(Equation {
            terms: terms
                .iter()
                .map(|&(u, l, r)| (u, l.clone(), r.clone()))
                .collect(),
            rhs: rhs.clone(),
        });
    }

    fn offsets(&self) -> (Vec<usize>, usize) {
        let mut offsets = Vec::with_capacity(self.shapes.len());
        let mut total = 0;
        for &(r, c) in &self.shapes {
            offsets.push(total);
            total += r * c;
        }
        (offsets, total)
    }

    fn assemble(&self) -> (Matrix, Matrix) {
        let (offsets, total) = self.offsets();
        let eq_rows: usize = self.equations.iter().map(|e| e.rhs.rows() * e.rhs.cols()).sum();
        let mut big = Matrix::zero(eq_rows, total);
        let mut rhs = Matrix::zero(eq_rows, 1);
        let mut row0 = 0;
        for eq in &self.equations {
            let block_rows = eq.rhs.rows() * eq.rhs.cols();
            for (u, l, r) in &eq.terms {
                let k = r.transpose().kronecker(l);
                for i in 0..block_rows {
                    for j in 0..k.cols() {
                        let add = k[(i, j)].clone();
                        big[(row0 + i, offsets[*u] + j)] += add;
                    }
                }
            }
            let v = eq.rhs.vec_columns();
            for i in 0..block_rows {
                rhs[(row0 + i, 0)] = v[(i, 0)].clone();
            }
            row0 += block_rows;
        }
        (big, rhs)
    }

    /// One solution per unknown, or `None` if the system is unsolvable.
    pub fn solve(&self) -> Option<Vec<Matrix>> {
        let (big, rhs) = self.assemble();
        let flat = solve_matrix(&big, &rhs, self.ring)?;
        Some(self.split(&flat))
    }

    /// Basis of the solution lattice of the homogeneous system, one block of
    /// rows per unknown; used for sampling random well-formed data.
    pub fn solution_lattice(&self) -> Matrix {
        assert!(
            self.equations.iter().all(|e| e.rhs.is_zero()),
            "solution_lattice needs a homogeneous system"
        );
        let (big, _) = self.assemble();
        kernel_columns(&big, self.ring)
    }

    pub fn split(&self, flat: &Matrix) -> Vec<Matrix> {
        let (offsets, total) = self.offsets();
        assert_eq!(flat.rows(), total);
        assert_eq!(flat.cols(), 1);
        self.shapes
            .iter()
            .zip(&offsets)
            .map(|(&(r, c), &off)| {
                let v = flat.row_block(off, off + r * c);
                Matrix::unvec_columns(r, c, &v).reduced_mod(self.ring.modulus())
            })
            .collect()
    }
}
