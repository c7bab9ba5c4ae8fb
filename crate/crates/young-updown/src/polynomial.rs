//! Univariate polynomials over exact rationals.
//!
//! Used for cross-multiplied rational-function identities and for
//! characteristic polynomials, where roots are checked by exact synthetic
//! division rather than numeric root finding.

use crate::rational::Rat;
use num::{One, Zero};
use std::ops::{Add, Mul, Sub};

/// Dense univariate polynomial, coefficients ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The monic polynomial with the given roots (with multiplicity).
    pub fn from_roots<'a, I: IntoIterator<Item = &'a Rat>>(roots: I) -> Self {
        let mut p = Poly::one();
        for r in roots {
            p = &p * &Poly::from_coeffs(vec![-r.clone(), Rat::one()]);
        }
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Divides by `(x − root)` exactly; `None` if the remainder is nonzero.
    pub fn div_by_linear(&self, root: &Rat) -> Option<Poly> {
        if self.is_zero() {
            return None;
        }
        let mut quotient = vec![Rat::zero(); self.coeffs.len() - 1];
        let mut carry = Rat::zero();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if k == 0 {
                return (c + &carry * root).is_zero().then(|| Poly::from_coeffs(quotient));
            }
            let q = c + &carry * root;
            quotient[k - 1] = q.clone();
            carry = q;
        }
        unreachable!()
    }

    /// Multiplicity of `root`, by repeated exact division.
    pub fn root_multiplicity(&self, root: &Rat) -> (usize, Poly) {
        let mut mult = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.div_by_linear(root) {
            mult += 1;
            cur = next;
        }
        (mult, cur)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn roots_expand_and_divide_back() {
        let roots = [rat(1), rat(1), ratio(-3, 2)];
        let p = Poly::from_roots(roots.iter());
        assert_eq!(p.degree(), Some(3));
        for r in &roots {
            assert!(p.eval(r).is_zero());
        }
        let (mult, rest) = p.root_multiplicity(&rat(1));
        assert_eq!(mult, 2);
        assert_eq!(rest.degree(), Some(1));
        assert!(p.div_by_linear(&rat(7)).is_none());
    }

    #[test]
    fn arithmetic_matches_evaluation() {
        let a = Poly::from_coeffs(vec![rat(1), rat(0), rat(2)]);
        let b = Poly::from_coeffs(vec![rat(-3), rat(5)]);
        let x = ratio(9, 4);
        assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        assert_eq!((&a - &b).eval(&x), a.eval(&x) - b.eval(&x));
    }
}
