//! Dense exact linear algebra over the rationals: reduced row echelon form,
//! nullspace bases, and affine solves with free variables pinned to zero.
//! Internal to the crate; sized for the small systems moment graphs produce.

use crate::polyring::Rational;
use num::Zero;

pub(crate) struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    /// In-place reduced row echelon form. Returns the pivot columns in
    /// order; the rank is their count. Pivot selection is the first row
    /// with a nonzero entry, so the result is deterministic.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.at(row, col).recip();
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c) - &(self.at(row, c) * &factor);
                    *self.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }
}

/// Basis of the right nullspace, one vector per free column in ascending
/// column order. Each vector has a 1 in its free coordinate; together they
/// are the reduced echelon basis for the given coordinate order.
pub(crate) fn nullspace(mut m: Mat) -> Vec<Vec<Rational>> {
    let pivots = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rational::zero(); m.cols];
        v[free] = num::One::one();
        for (row, &pc) in pivots.iter().enumerate() {
            let coeff = m.at(row, free);
            if !coeff.is_zero() {
                v[pc] = -coeff.clone();
            }
        }
        basis.push(v);
    }
    basis
}

pub(crate) enum AffineSolution {
    /// The system `A x = b` has no solution.
    Infeasible,
    /// A particular solution with every free variable set to zero, plus the
    /// number of free variables (the dimension of the solution space).
    Solved { x: Vec<Rational>, free_count: usize },
}

/// Solve `A x = b` exactly. `b.len()` must equal `a.rows`.
pub(crate) fn solve_affine(a: Mat, b: &[Rational]) -> AffineSolution {
    assert_eq!(b.len(), a.rows);
    let cols = a.cols;
    let mut aug = Mat::zeros(a.rows, cols + 1);
    for r in 0..a.rows {
        for c in 0..cols {
            *aug.at_mut(r, c) = a.at(r, c).clone();
        }
        *aug.at_mut(r, cols) = b[r].clone();
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&cols) {
        return AffineSolution::Infeasible;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(row, cols).clone();
    }
    AffineSolution::Solved {
        x,
        free_count: cols - pivots.len(),
    }
}
