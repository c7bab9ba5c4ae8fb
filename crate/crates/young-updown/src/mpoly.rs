//! Polynomials in countably many indexed generators over exact rationals.
//!
//! One representation serves three interpretations downstream: monomials in
//! the diagram generators `h_m` (parts ≥ 2), in the power sums `p_k`, and in
//! the moment coordinates `q_k`. A monomial is the multiset of generator
//! indices, stored sorted descending; the interpretations differ only in the
//! weight a generator contributes to the (filtration) degree, so
//! degree-aware methods take the weight as a function.

use crate::rational::Rat;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Multiset of generator indices, sorted descending.
pub type Monomial = Vec<u32>;

/// Canonicalizes a monomial (descending sort).
pub fn monomial(mut parts: Vec<u32>) -> Monomial {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Weighted degree of a monomial.
pub fn monomial_degree(m: &Monomial, weight: impl Fn(u32) -> u64) -> u64 {
    m.iter().map(|&k| weight(k)).sum()
}

/// Compares monomials by weighted degree, then reverse-lexicographically
/// (larger leading index first). Matches the canonical partition order.
pub fn cmp_graded(
    a: &Monomial,
    b: &Monomial,
    weight: impl Fn(u32) -> u64,
) -> std::cmp::Ordering {
    monomial_degree(a, &weight)
        .cmp(&monomial_degree(b, &weight))
        .then_with(|| b.cmp(a))
}

/// Sparse polynomial: monomial → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = MPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    /// The generator with index `k`.
    pub fn var(k: u32) -> Self {
        let mut p = MPoly::zero();
        p.add_term(vec![k], Rat::one());
        p
    }

    /// A single monomial with coefficient.
    pub fn term(parts: Vec<u32>, c: Rat) -> Self {
        let mut p = MPoly::zero();
        p.add_term(monomial(parts), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rat> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `c·m`, dropping the entry if the total cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.windows(2).all(|w| w[0] >= w[1]), "unsorted monomial");
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut m = ma.clone();
                m.extend_from_slice(mb);
                out.add_term(monomial(m), ca * cb);
            }
        }
        out
    }

    /// Multiplies by a single monomial.
    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            let mut key = ma.clone();
            key.extend_from_slice(m);
            out.add_term(monomial(key), ca * c);
        }
        out
    }

    /// Formal partial derivative with respect to generator `k`.
    pub fn derivative(&self, k: u32) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mult = m.iter().filter(|&&v| v == k).count();
            if mult == 0 {
                continue;
            }
            let mut reduced = m.clone();
            let pos = reduced.iter().position(|&v| v == k).unwrap();
            reduced.remove(pos);
            out.add_term(reduced, c * Rat::from_integer((mult as i64).into()));
        }
        out
    }

    /// Maximal weighted degree over monomials; `None` when zero.
    pub fn degree(&self, weight: impl Fn(u32) -> u64) -> Option<u64> {
        self.terms
            .keys()
            .map(|m| monomial_degree(m, &weight))
            .max()
    }

    /// The sub-polynomial of monomials with weighted degree exactly `d`.
    pub fn component(&self, d: u64, weight: impl Fn(u32) -> u64) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| monomial_degree(m, &weight) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether every monomial has the same weighted degree.
    pub fn is_homogeneous(&self, weight: impl Fn(u32) -> u64) -> bool {
        let mut degrees = self.terms.keys().map(|m| monomial_degree(m, &weight));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Substitutes exact values for the generators.
    pub fn eval(&self, value_of: &dyn Fn(u32) -> Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for &k in m {
                prod *= value_of(k);
            }
            acc += prod;
        }
        acc
    }

    /// Substitutes `f64` values for the generators.
    pub fn eval_f64(&self, value_of: &dyn Fn(u32) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter().map(|&k| value_of(k)).product::<f64>() * crate::rational::to_f64(c)
            })
            .sum()
    }

    /// Renders with the given generator letter, e.g. `2*h3^2*h2 - 1/2`.
    pub fn render(&self, letter: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut keys: Vec<_> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_graded(a, b, |k| k as u64).reverse().then(a.cmp(b)));
        let mut out = String::new();
        for (i, m) in keys.iter().enumerate() {
            let c = &self.terms[*m];
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || m.is_empty() {
                factors.push(mag.to_string());
            }
            let mut idx = 0;
            while idx < m.len() {
                let k = m[idx];
                let run = m[idx..].iter().take_while(|&&v| v == k).count();
                if run == 1 {
                    factors.push(format!("{letter}{k}"));
                } else {
                    factors.push(format!("{letter}{k}^{run}"));
                }
                idx += run;
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn arithmetic_and_cancellation() {
        let p = MPoly::var(2).mul(&MPoly::var(3)).scale(&rat(2));
        let q = MPoly::term(vec![3, 2], rat(-2));
        assert!(p.add(&q).is_zero());
        assert_eq!(p.coeff(&vec![3, 2]), rat(2));
    }

    #[test]
    fn derivative_of_power() {
        // d/dx2 (x2^3) = 3 x2^2
        let p = MPoly::term(vec![2, 2, 2], rat(1));
        assert_eq!(p.derivative(2), MPoly::term(vec![2, 2], rat(3)));
        assert!(p.derivative(5).is_zero());
    }

    #[test]
    fn degrees_and_components() {
        // weight k: q-style would be |k|+1; use plain k here
        let p = MPoly::term(vec![3, 2], rat(1)).add(&MPoly::term(vec![4], rat(2)));
        assert_eq!(p.degree(|k| k as u64), Some(5));
        assert_eq!(
            p.component(4, |k| k as u64),
            MPoly::term(vec![4], rat(2))
        );
        assert!(!p.is_homogeneous(|k| k as u64));
    }

    #[test]
    fn eval_substitutes_values() {
        let p = MPoly::term(vec![2, 1], rat(3)).add(&MPoly::constant(ratio(1, 2)));
        let v = p.eval(&|k| rat(k as i64 + 1));
        assert_eq!(v, rat(3) * rat(3) * rat(2) + ratio(1, 2));
    }

    #[test]
    fn render_is_readable() {
        let p = MPoly::term(vec![3, 2, 2], ratio(-1, 2))
            .add(&MPoly::var(2))
            .add(&MPoly::constant(rat(1)));
        assert_eq!(p.render("h"), "-1/2*h3*h2^2 + h2 + 1");
    }
}
