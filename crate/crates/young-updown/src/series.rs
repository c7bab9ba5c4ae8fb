//! Truncated exact power series in one variable.
//!
//! Every series carries its truncation order explicitly; binary operations
//! insist the orders match, so requesting coefficient `m` of something built
//! at order `< m` is a panic, never a silent zero.

use crate::rational::Rat;
use num::{One, Zero};

/// Power series truncated after the coefficient of `v^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        Series { coeffs }
    }

    /// `1 − a·v` at the given order.
    pub fn linear_factor(a: &Rat, order: usize) -> Self {
        let mut s = Series::one(order);
        if order >= 1 {
            s.coeffs[1] = -a.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        let n = self.order();
        let mut out = Series::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inv(&self) -> Series {
        assert!(!self.coeffs[0].is_zero(), "series has no inverse");
        let n = self.order();
        let c0 = self.coeffs[0].recip();
        let mut out = Series::zero(n);
        out.coeffs[0] = c0.clone();
        for m in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=m {
                acc += &self.coeffs[k] * &out.coeffs[m - k];
            }
            out.coeffs[m] = -acc * &c0;
        }
        out
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Series {
        assert!(self.coeffs[0].is_one(), "log requires constant term 1");
        let n = self.order();
        let mut out = Series::zero(n);
        for m in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..m {
                acc += Rat::from_integer(k.into()) * &out.coeffs[k] * &self.coeffs[m - k];
            }
            out.coeffs[m] =
                &self.coeffs[m] - acc / Rat::from_integer(m.into());
        }
        out
    }

    /// Exponential of a series with constant term 0.
    pub fn exp(&self) -> Series {
        assert!(self.coeffs[0].is_zero(), "exp requires constant term 0");
        let n = self.order();
        let mut out = Series::one(n);
        for m in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=m {
                acc += Rat::from_integer(k.into()) * &self.coeffs[k] * &out.coeffs[m - k];
            }
            out.coeffs[m] = acc / Rat::from_integer(m.into());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn inverse_of_linear_factor_is_geometric() {
        let s = Series::linear_factor(&ratio(1, 2), 4).inv();
        assert_eq!(
            s.coeffs(),
            &[rat(1), ratio(1, 2), ratio(1, 4), ratio(1, 8), ratio(1, 16)]
        );
    }

    #[test]
    fn mul_by_inverse_is_one() {
        let s = Series::from_coeffs(vec![rat(1), rat(-3), ratio(7, 5), rat(0), rat(2)]);
        assert_eq!(s.mul(&s.inv()), Series::one(4));
    }

    proptest! {
        #[test]
        fn exp_log_round_trip(nums in proptest::collection::vec(-20i64..=20, 5)) {
            let mut coeffs: Vec<Rat> = nums.iter().map(|&n| ratio(n, 7)).collect();
            coeffs.insert(0, rat(1));
            let s = Series::from_coeffs(coeffs);
            prop_assert_eq!(s.log().exp(), s);
        }
    }
}
