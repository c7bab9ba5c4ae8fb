//! The filtered algebra of regular functions on Young diagrams.
//!
//! A diagram `λ` with interlacing coordinates `(X; Y)` defines the rational
//! function `H(u) = u·∏(u−y_j)/∏(u−x_i)`; its expansion at `u = ∞` gathers
//! the generator values `h_m(λ)` (coefficients of `u^{-m}`), with `h_1 ≡ 0`.
//! Together with the shifted power sums `p*_m` and the corner power sums,
//! these generate one algebra, filtered by `deg h_m = m − 1`,
//! `deg p*_m = m`.
//!
//! Elements are [`ShiftedSymPoly`] values in the monomial basis over
//! `h_2, h_3, …`. The module evaluates them on diagrams, recovers them from
//! values by exact interpolation against that basis, and projects top
//! filtration components into the graded algebra of symmetric functions
//! ([`SymFunction`], power-sum basis, `deg p_k = k`), where the top symbol
//! of `h_{k+1}` is `θ·p_k`.

use crate::kerov::{kerov_coords, JackTheta};
use crate::mpoly::{cmp_graded, monomial_degree, MPoly, Monomial};
use crate::partition::{enumerate_level, Partition};
use crate::polynomial::Poly;
use crate::rational::{rat, Rat};
use crate::series::Series;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Element of the diagram-function algebra in the `h`-monomial basis.
///
/// Monomial parts are generator indices `≥ 2`; the filtration weight of
/// `h_m` is `m − 1` ([`h_weight`]).
pub type ShiftedSymPoly = MPoly;

/// Symmetric function in the power-sum basis; `deg p_k = k` ([`p_weight`]).
pub type SymFunction = MPoly;

/// Filtration weight of the generator `h_k`.
pub fn h_weight(k: u32) -> u64 {
    (k - 1) as u64
}

/// Graded weight of the power sum `p_k`.
pub fn p_weight(k: u32) -> u64 {
    k as u64
}

/// Filtration degree of a [`ShiftedSymPoly`] (0 for constants and 0).
pub fn h_degree(f: &ShiftedSymPoly) -> u64 {
    f.degree(h_weight).unwrap_or(0)
}

/// Shifted power sum `p*_m(λ) = Σ_i [(λ_i − θi)^m − (−θi)^m]`.
pub fn shifted_power_sum(m: u32, la: &Partition, theta: &JackTheta) -> Rat {
    let mut acc = Rat::zero();
    for (i, &row) in la.rows().iter().enumerate() {
        let shift = theta.value() * rat(i as i64 + 1);
        acc += pow_rat(&(rat(row as i64) - &shift), m) - pow_rat(&(-shift), m);
    }
    acc
}

/// Corner power sum `Σ x_i^m − Σ y_j^m` over the interlacing coordinates.
pub fn corner_power_sum(m: u32, la: &Partition, theta: &JackTheta) -> Rat {
    let c = kerov_coords(la, theta);
    let xs: Rat = c.xs().iter().map(|x| pow_rat(x, m)).sum();
    let ys: Rat = c.ys().iter().map(|y| pow_rat(y, m)).sum();
    xs - ys
}

fn pow_rat(x: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..m {
        acc *= x;
    }
    acc
}

/// The series `H(u; λ)` in the variable `v = u^{-1}`, to the given order.
pub fn h_series(la: &Partition, theta: &JackTheta, order: usize) -> Series {
    let c = kerov_coords(la, theta);
    let mut num = Series::one(order);
    for y in c.ys() {
        num = num.mul(&Series::linear_factor(y, order));
    }
    let mut den = Series::one(order);
    for x in c.xs() {
        den = den.mul(&Series::linear_factor(x, order));
    }
    num.mul(&den.inv())
}

/// Generator values `h_1(λ), …, h_K(λ)`; `h_1` is always 0.
pub fn h_values(la: &Partition, theta: &JackTheta, order: usize) -> Vec<Rat> {
    let s = h_series(la, theta, order);
    (1..=order).map(|m| s.coeff(m).clone()).collect()
}

/// Values `ẽ_1(λ), …, ẽ_K(λ)` from the reciprocal series `−1/H`;
/// `ẽ_1` is always 0.
pub fn e_values(la: &Partition, theta: &JackTheta, order: usize) -> Vec<Rat> {
    let s = h_series(la, theta, order).inv().neg();
    (1..=order).map(|m| s.coeff(m).clone()).collect()
}

/// Checks `H(u; λ) = Φ(u−θ; λ)/Φ(u; λ)` as an identity of rational
/// functions, by exact cross-multiplied polynomial equality, where
/// `Φ(u; λ) = ∏_i (u+θi)/(u−λ_i+θi)` over the nonzero rows.
pub fn h_phi_ratio_holds(la: &Partition, theta: &JackTheta) -> bool {
    let c = kerov_coords(la, theta);
    let t = theta.value();
    let ell = la.len();
    let phi_num: Vec<Rat> = (1..=ell).map(|i| -(t * rat(i as i64))).collect();
    let phi_den: Vec<Rat> = (1..=ell)
        .map(|i| rat(la.row(i - 1) as i64) - t * rat(i as i64))
        .collect();
    let shift = |roots: &[Rat]| -> Vec<Rat> { roots.iter().map(|r| r + t).collect() };

    // H·Φ(u) = Φ(u−θ) cross-multiplied:
    // u·∏(u−y)·∏(u+θi)·∏(u−θ−λ_i+θi) = ∏(u−x)·∏(u−θ+θi)·∏(u−λ_i+θi)
    let mut lhs_roots = vec![Rat::zero()];
    lhs_roots.extend_from_slice(c.ys());
    lhs_roots.extend(phi_num.clone());
    lhs_roots.extend(shift(&phi_den));
    let mut rhs_roots = c.xs().to_vec();
    rhs_roots.extend(shift(&phi_num));
    rhs_roots.extend(phi_den);
    Poly::from_roots(lhs_roots.iter()) == Poly::from_roots(rhs_roots.iter())
}

/// Evaluates a [`ShiftedSymPoly`] at a diagram by substituting the
/// generator values.
pub fn evaluate(f: &ShiftedSymPoly, la: &Partition, theta: &JackTheta) -> Rat {
    let order = f
        .terms()
        .keys()
        .flat_map(|m| m.iter().copied())
        .max()
        .unwrap_or(1) as usize;
    let values = h_values(la, theta, order);
    f.eval(&|k| values[k as usize - 1].clone())
}

/// The `h`-monomials of filtration degree at most `bound`, graded order.
pub fn basis_monomials(bound: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=bound {
        for mu in enumerate_level(d) {
            out.push(mu.rows().iter().map(|&r| r + 1).collect());
        }
    }
    out
}

/// Interpolation failures: not enough evaluation points, or values not
/// realized by any element within the degree bound.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InterpolationError {
    #[error("design system rank {rank} < {need}: not enough evaluation points")]
    RankDeficient { rank: usize, need: usize },
    #[error("no element of degree ≤ {bound} takes the given values")]
    Inconsistent { bound: u64 },
}

/// Recovers the unique element of filtration degree ≤ `bound` taking the
/// given values, verifying every provided value.
pub fn interpolate(
    values: &BTreeMap<Partition, Rat>,
    bound: u64,
    theta: &JackTheta,
) -> Result<ShiftedSymPoly, InterpolationError> {
    let basis = basis_monomials(bound);
    let max_index = basis
        .iter()
        .flat_map(|m| m.iter().copied())
        .max()
        .unwrap_or(1) as usize;
    let mut rows = Vec::with_capacity(values.len());
    let mut rhs = Vec::with_capacity(values.len());
    for (la, v) in values {
        let hv = h_values(la, theta, max_index);
        rows.push(
            basis
                .iter()
                .map(|m| {
                    m.iter()
                        .map(|&k| hv[k as usize - 1].clone())
                        .product::<Rat>()
                })
                .collect(),
        );
        rhs.push(v.clone());
    }
    let design = crate::linalg::Mat::from_rows(rows);
    let coeffs = match crate::linalg::solve(&design, &rhs) {
        crate::linalg::LinSolve::Unique(x) => x,
        crate::linalg::LinSolve::RankDeficient { rank } => {
            return Err(InterpolationError::RankDeficient {
                rank,
                need: basis.len(),
            })
        }
        crate::linalg::LinSolve::Inconsistent => {
            return Err(InterpolationError::Inconsistent { bound })
        }
    };
    let mut f = MPoly::zero();
    for (m, c) in basis.into_iter().zip(coeffs) {
        f.add_term(m, c);
    }
    for (la, v) in values {
        if &evaluate(&f, la, theta) != v {
            return Err(InterpolationError::Inconsistent { bound });
        }
    }
    Ok(f)
}

/// Interpolates a function given as a closure, using every diagram of every
/// level up to `max_level`. Feeding all levels (rather than stopping at the
/// first full-rank system) is what lets a non-regular input surface as
/// [`InterpolationError::Inconsistent`].
pub fn interpolate_levels(
    f: impl Fn(&Partition) -> Rat,
    bound: u64,
    theta: &JackTheta,
    max_level: u64,
) -> Result<ShiftedSymPoly, InterpolationError> {
    let mut values = BTreeMap::new();
    for n in 0..=max_level {
        for la in enumerate_level(n) {
            let v = f(&la);
            values.insert(la, v);
        }
    }
    interpolate(&values, bound, theta)
}

/// Image of the top filtration component in the graded algebra: each
/// monomial `h_ρ` of maximal degree maps to `∏ θ·p_{ρ_i − 1}`; lower terms
/// drop. Panics on the zero element.
pub fn top_term(f: &ShiftedSymPoly, theta: &JackTheta) -> SymFunction {
    assert!(!f.is_zero(), "the zero element has no top term");
    let d = h_degree(f);
    graded_image(&f.component(d, h_weight), theta)
}

/// The degree-`d` component of an element, pushed to the graded algebra.
/// Empty components give zero.
pub fn graded_component(f: &ShiftedSymPoly, d: u64, theta: &JackTheta) -> SymFunction {
    graded_image(&f.component(d, h_weight), theta)
}

fn graded_image(component: &ShiftedSymPoly, theta: &JackTheta) -> SymFunction {
    let mut out = MPoly::zero();
    for (m, c) in component.terms() {
        let parts: Vec<u32> = m.iter().map(|&k| k - 1).collect();
        out.add_term(parts, c * pow_rat(theta.value(), m.len() as u32));
    }
    out
}

/// Renders in the `c*h2^a*h3^b` text form.
pub fn format_shifted(f: &ShiftedSymPoly) -> String {
    f.render("h")
}

/// Parses the `c*h2^a*h3^b` text form produced by [`format_shifted`].
pub fn parse_shifted(s: &str) -> Result<ShiftedSymPoly, ParseShiftedError> {
    let mut out = MPoly::zero();
    let text = s.trim();
    if text.is_empty() {
        return Err(ParseShiftedError(s.to_owned()));
    }
    if text == "0" {
        return Ok(out);
    }
    // split into signed terms at top level
    let marked = text.replace(" - ", " + -");
    for raw in marked.split(" + ") {
        let mut term = raw.trim();
        let mut sign = Rat::one();
        while let Some(rest) = term.strip_prefix('-') {
            sign = -sign;
            term = rest.trim();
        }
        if term.is_empty() {
            return Err(ParseShiftedError(s.to_owned()));
        }
        let mut coeff = sign;
        let mut parts: Vec<u32> = Vec::new();
        for factor in term.split('*') {
            let factor = factor.trim();
            if let Some(rest) = factor.strip_prefix('h') {
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|_| err(s))?),
                    None => (rest, 1),
                };
                let k: u32 = idx.parse().map_err(|_| err(s))?;
                if k < 2 {
                    return Err(err(s));
                }
                parts.extend(std::iter::repeat(k).take(exp as usize));
            } else {
                coeff *= crate::rational::parse_rat(factor).map_err(|_| err(s))?;
            }
        }
        out.add_term(crate::mpoly::monomial(parts), coeff);
    }
    Ok(out)
}

fn err(s: &str) -> ParseShiftedError {
    ParseShiftedError(s.to_owned())
}

/// Failure to parse the text form of a [`ShiftedSymPoly`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a polynomial in h2, h3, …: {0:?}")]
pub struct ParseShiftedError(pub String);

/// Ordering key used when listing monomials: degree, then reverse-lex.
pub fn cmp_h_monomials(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    cmp_graded(a, b, h_weight)
}

/// Degree helper for [`SymFunction`] values.
pub fn p_degree(f: &SymFunction) -> u64 {
    f.degree(p_weight).unwrap_or(0)
}

/// Monomial degree in the `h`-filtration.
pub fn h_monomial_degree(m: &Monomial) -> u64 {
    monomial_degree(m, h_weight)
}
