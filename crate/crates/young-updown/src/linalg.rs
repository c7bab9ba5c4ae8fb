//! Dense exact-rational matrices: just enough for stochastic matrices,
//! characteristic polynomials, and interpolation solves.

use crate::polynomial::Poly;
use crate::rational::{rat, Rat};
use num::Zero;

/// Row-major dense matrix over exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = rat(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_sum(&self, i: usize) -> Rat {
        self.row(i).iter().sum()
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.at(i, i)).sum()
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Characteristic polynomial `det(xI − M)` by the Faddeev–LeVerrier
    /// recursion, exactly.
    pub fn char_poly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = rat(1);
        if n == 0 {
            return Poly::from_coeffs(coeffs);
        }
        let mut m = self.clone();
        for k in 1..=n {
            let c = -m.trace() / rat(k as i64);
            coeffs[n - k] = c.clone();
            if k < n {
                for i in 0..n {
                    *m.at_mut(i, i) += &c;
                }
                m = self.mul(&m);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

/// Outcome of an exact linear solve of an overdetermined system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinSolve {
    /// Full column rank and a consistent right-hand side.
    Unique(Vec<Rat>),
    /// Columns are dependent on the given rows.
    RankDeficient { rank: usize },
    /// No solution exists.
    Inconsistent,
}

/// Solves `A·x = b` exactly by Gaussian elimination with column pivoting.
///
/// `A` may have more rows than columns; every row is used, so an
/// inconsistent overdetermined system is reported as such.
pub fn solve(a: &Mat, b: &[Rat]) -> LinSolve {
    assert_eq!(a.nrows(), b.len());
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m.at(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = m.at(p, j).clone();
                *m.at_mut(p, j) = m.at(r, j).clone();
                *m.at_mut(r, j) = tmp;
            }
            rhs.swap(p, r);
        }
        let inv = m.at(r, c).recip();
        for j in c..cols {
            let v = m.at(r, j) * &inv;
            *m.at_mut(r, j) = v;
        }
        rhs[r] = &rhs[r] * &inv;
        for i in 0..rows {
            if i != r && !m.at(i, c).is_zero() {
                let f = m.at(i, c).clone();
                for j in c..cols {
                    let v = m.at(i, j) - &f * m.at(r, j);
                    *m.at_mut(i, j) = v;
                }
                rhs[i] = &rhs[i] - &f * &rhs[r];
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    for i in r..rows {
        if !rhs[i].is_zero() {
            return LinSolve::Inconsistent;
        }
    }
    if pivot_cols.len() < cols {
        return LinSolve::RankDeficient {
            rank: pivot_cols.len(),
        };
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &c) in pivot_cols.iter().enumerate() {
        x[c] = rhs[row].clone();
    }
    LinSolve::Unique(x)
}

/// Rank of a matrix over the rationals.
pub fn rank(a: &Mat) -> usize {
    match solve(a, &vec![Rat::zero(); a.nrows()]) {
        LinSolve::Unique(_) => a.ncols(),
        LinSolve::RankDeficient { rank } => rank,
        LinSolve::Inconsistent => unreachable!("zero rhs is always consistent"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn char_poly_of_known_matrices() {
        // eigenvalues 1 and 3
        let a = m(&[&[2, 1], &[1, 2]]);
        let p = a.char_poly();
        assert_eq!(p.coeffs(), &[rat(3), rat(-4), rat(1)]);
        let (m1, rest) = p.root_multiplicity(&rat(1));
        assert_eq!(m1, 1);
        assert_eq!(rest.root_multiplicity(&rat(3)).0, 1);

        // nilpotent block: x^3
        let n = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(n.char_poly().coeffs(), &[rat(0), rat(0), rat(0), rat(1)]);

        // det via constant coefficient: det(xI − A) at x = 0 is ±det A
        let a = m(&[&[1, 2, 3], &[0, 4, 5], &[1, 0, 6]]);
        // cofactor expansion by hand: det = 1·24 − 2·(−5) + 3·(−4) = 22
        assert_eq!(a.char_poly().coeff(0), rat(-22));
    }

    #[test]
    fn solve_unique_and_verify() {
        let a = m(&[&[2, 1], &[1, -1], &[3, 0]]);
        let x = vec![ratio(1, 3), rat(4)];
        let b = a.mul_vec(&x);
        assert_eq!(solve(&a, &b), LinSolve::Unique(x));
    }

    #[test]
    fn solve_detects_rank_and_consistency() {
        let a = m(&[&[1, 2], &[2, 4], &[3, 6]]);
        assert_eq!(rank(&a), 1);
        assert_eq!(
            solve(&a, &[rat(1), rat(2), rat(3)]),
            LinSolve::RankDeficient { rank: 1 }
        );
        let b = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(solve(&b, &[rat(1), rat(1), rat(3)]), LinSolve::Inconsistent);
    }
}
