//! Kerov interlacing coordinates and the one-box transition probabilities.
//!
//! A diagram's border path has inner corners (horizontal-to-vertical
//! switches) and outer corners (vertical-to-horizontal). At Jack parameter
//! `θ`, a corner at `(row, col) = (r, s)` contributes the coordinate
//! `s − θ·r`; inner corners give the `x` sequence, outer corners the `y`
//! sequence, and the two strictly interlace with `Σx − Σy = 0`.
//!
//! Partial-fraction expansions of the corner rational function yield the
//! residues `π↓` and `π↑`, which turn into the exact down and up transition
//! probabilities of the chain: the down side depends on `θ` only, the up
//! side also on the pair `(z, z')` through `z + z'` and `z·z'`.

use crate::partition::{Direction, Partition};
use crate::rational::{rat, Rat};
use num::{BigInt, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// The Jack parameter: a positive rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackTheta(Rat);

impl JackTheta {
    /// Panics unless `value > 0`.
    pub fn new(value: Rat) -> Self {
        assert!(value.is_positive(), "Jack parameter must be positive");
        JackTheta(value)
    }

    pub fn from_ints(num: i64, den: i64) -> Self {
        JackTheta::new(Rat::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    /// The reciprocal parameter, used by transposition duality.
    pub fn invert(&self) -> JackTheta {
        JackTheta(self.0.recip())
    }
}

/// Chain parameters `(θ, z+z', zz')` as exact rationals.
///
/// `z` and `z'` enter every formula symmetrically through
/// `(z+x)(z'+x) = zz' + (z+z')x + x²`, so only the two symmetric functions
/// are stored; this keeps complex-conjugate pairs inside rational
/// arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    theta: JackTheta,
    sum_zz: Rat,
    prod_zz: Rat,
}

/// Violation of the parameter constraint `zz' + θn ≠ 0` for all `n ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid parameters: zz' + θ·{0} = 0")]
pub struct ParamsError(pub u64);

/// Classification of a parameter pair per the positivity criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesClass {
    /// `z' = z̄` nonreal: discriminant `(z+z')² − 4zz' < 0`.
    Principal,
    /// Real roots, both strictly inside one open gap of the lattice `ℤ+θℤ`.
    Complementary,
    /// Everything else; up probabilities may vanish or go negative.
    DegenerateOrInvalid,
}

impl Params {
    pub fn new(theta: JackTheta, sum_zz: Rat, prod_zz: Rat) -> Result<Self, ParamsError> {
        // prod_zz + θn = 0 has a solution iff -prod_zz/θ is an integer ≥ 0
        let ratio = -&prod_zz / theta.value();
        if !ratio.is_negative() && ratio.is_integer() {
            let n = ratio.to_integer().to_u64().unwrap_or(u64::MAX);
            return Err(ParamsError(n));
        }
        Ok(Params {
            theta,
            sum_zz,
            prod_zz,
        })
    }

    pub fn from_ints(theta: (i64, i64), sum_zz: (i64, i64), prod_zz: (i64, i64)) -> Self {
        Params::new(
            JackTheta::from_ints(theta.0, theta.1),
            Rat::new(BigInt::from(sum_zz.0), BigInt::from(sum_zz.1)),
            Rat::new(BigInt::from(prod_zz.0), BigInt::from(prod_zz.1)),
        )
        .expect("invalid test parameters")
    }

    pub fn theta(&self) -> &JackTheta {
        &self.theta
    }

    pub fn sum_zz(&self) -> &Rat {
        &self.sum_zz
    }

    pub fn prod_zz(&self) -> &Rat {
        &self.prod_zz
    }

    /// `θ^{-1}·zz'`, the constant entering the spectral values and the time
    /// scale.
    pub fn prod_over_theta(&self) -> Rat {
        &self.prod_zz / self.theta.value()
    }

    /// Spectral value `σ_m = m(m − 1 + θ^{-1}zz')`.
    pub fn sigma(&self, m: u64) -> Rat {
        rat(m as i64) * (rat(m as i64 - 1) + self.prod_over_theta())
    }
}

/// Interlacing corner coordinates of a diagram at a fixed Jack parameter.
///
/// `corners` keeps the source `(row, col)` pairs in border order, inner and
/// outer alternating (inner first and last), so moves never have to invert
/// the coordinate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KerovCoords {
    xs: Vec<Rat>,
    ys: Vec<Rat>,
    corners: Vec<(u32, u32)>,
    source: Partition,
}

impl KerovCoords {
    pub fn xs(&self) -> &[Rat] {
        &self.xs
    }

    pub fn ys(&self) -> &[Rat] {
        &self.ys
    }

    /// Corner count parameter: `xs.len() == d`, `ys.len() == d − 1`.
    pub fn d(&self) -> usize {
        self.xs.len()
    }

    pub fn corners(&self) -> &[(u32, u32)] {
        &self.corners
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    /// Diagram with one box added at inner corner `i`.
    pub fn add_box(&self, i: usize) -> Partition {
        let (r, s) = self.corners[2 * i];
        let mut rows = self.source.rows().to_vec();
        if (r as usize) == rows.len() {
            rows.push(1);
        } else {
            rows[r as usize] = s + 1;
        }
        Partition::new(rows)
    }

    /// Diagram with the box at outer corner `j` removed.
    pub fn remove_box(&self, j: usize) -> Partition {
        let (r, s) = self.corners[2 * j + 1];
        let mut rows = self.source.rows().to_vec();
        rows[r as usize - 1] = s - 1;
        Partition::new(rows)
    }

    /// Residues of the expansion
    /// `∏(u−x_i)/∏(u−y_j) = u − Σ_j π↓_j/(u−y_j)`; all strictly positive,
    /// summing to [`KerovCoords::area`].
    pub fn pi_down(&self) -> Vec<Rat> {
        (0..self.ys.len())
            .map(|j| {
                let num: Rat = self.xs.iter().map(|x| &self.ys[j] - x).product();
                let den: Rat = (0..self.ys.len())
                    .filter(|&l| l != j)
                    .map(|l| &self.ys[j] - &self.ys[l])
                    .product();
                -num / den
            })
            .collect()
    }

    /// Residues of the reversed expansion
    /// `∏(u−y_j)/∏(u−x_i) = Σ_i π↑_i/(u−x_i)`; they sum to 1 with first
    /// moment 0 and second moment equal to the area.
    pub fn pi_up(&self) -> Vec<Rat> {
        (0..self.xs.len())
            .map(|i| {
                let num: Rat = self.ys.iter().map(|y| &self.xs[i] - y).product();
                let den: Rat = (0..self.xs.len())
                    .filter(|&l| l != i)
                    .map(|l| &self.xs[i] - &self.xs[l])
                    .product();
                num / den
            })
            .collect()
    }

    /// Area of the diagram in the coordinates where each box measures
    /// `θ × 1`: `Σ_{i≤j} (x_i−y_i)(y_j−x_{j+1}) = θ·|λ|`.
    pub fn area(&self) -> Rat {
        let mut total = Rat::zero();
        for i in 0..self.ys.len() {
            let left = &self.xs[i] - &self.ys[i];
            for j in i..self.ys.len() {
                total += &left * (&self.ys[j] - &self.xs[j + 1]);
            }
        }
        total
    }

    /// Checks the interlacing, trace, and corner-consistency invariants.
    pub fn validate(&self, theta: &JackTheta) -> bool {
        let d = self.d();
        if self.ys.len() + 1 != d || self.corners.len() != 2 * d - 1 {
            return false;
        }
        for i in 0..d - 1 {
            if self.xs[i] <= self.ys[i] || self.ys[i] <= self.xs[i + 1] {
                return false;
            }
        }
        let trace: Rat = self.xs.iter().sum::<Rat>() - self.ys.iter().sum::<Rat>();
        if !trace.is_zero() {
            return false;
        }
        self.corners.iter().enumerate().all(|(k, &(r, s))| {
            let coord = rat(s as i64) - theta.value() * rat(r as i64);
            if k % 2 == 0 {
                self.xs[k / 2] == coord
            } else {
                self.ys[k / 2] == coord
            }
        })
    }
}

/// Interlacing coordinates of `λ` at parameter `θ`.
pub fn kerov_coords(la: &Partition, theta: &JackTheta) -> KerovCoords {
    // distinct row lengths and the cumulative row counts where they end
    let mut runs: Vec<(u32, u32)> = Vec::new(); // (length, rows so far)
    for &r in la.rows() {
        match runs.last_mut() {
            Some((len, count)) if *len == r => *count += 1,
            _ => {
                let prev = runs.last().map_or(0, |&(_, c)| c);
                runs.push((r, prev + 1));
            }
        }
    }
    let mut corners = Vec::with_capacity(2 * runs.len() + 1);
    corners.push((0, la.row(0)));
    for (k, &(len, cum)) in runs.iter().enumerate() {
        corners.push((cum, len)); // outer corner closing this run
        let next_len = runs.get(k + 1).map_or(0, |&(l, _)| l);
        corners.push((cum, next_len)); // inner corner opening the next run
    }
    let coord = |&(r, s): &(u32, u32)| rat(s as i64) - theta.value() * rat(r as i64);
    let xs = corners.iter().step_by(2).map(coord).collect();
    let ys = corners.iter().skip(1).step_by(2).map(coord).collect();
    KerovCoords {
        xs,
        ys,
        corners,
        source: la.clone(),
    }
}

/// A downward move was requested from the empty diagram.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("the empty diagram has no downward move")]
pub struct EmptyDiagram;

/// Exact down transition probabilities `λ → λ∖□`, keyed by target.
///
/// Each removable box gets `π↓_j / Area`; the values are in `(0,1]` and sum
/// to 1 exactly. Depends on `θ` only.
pub fn down_probs(
    la: &Partition,
    theta: &JackTheta,
) -> Result<BTreeMap<Partition, Rat>, EmptyDiagram> {
    if la.is_empty() {
        return Err(EmptyDiagram);
    }
    let c = kerov_coords(la, theta);
    let area = c.area();
    let probs = c.pi_down();
    Ok(probs
        .into_iter()
        .enumerate()
        .map(|(j, p)| (c.remove_box(j), p / &area))
        .collect())
}

/// Exact up transition probabilities `λ → λ∪□`, keyed by target.
///
/// Box `i` gets `(zz' + (z+z')x_i + x_i²)/(zz' + θ|λ|) · π↑_i`. The values
/// sum to 1 exactly; strict positivity holds for principal or complementary
/// parameters but is not guaranteed in general.
pub fn up_probs(la: &Partition, params: &Params) -> BTreeMap<Partition, Rat> {
    let c = kerov_coords(la, params.theta());
    let denom = params.prod_zz() + params.theta().value() * rat(la.size() as i64);
    c.pi_up()
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let x = &c.xs()[i];
            let quad = params.prod_zz() + params.sum_zz() * x + x * x;
            (c.add_box(i), quad / &denom * p)
        })
        .collect()
}

/// Default level bound for the positivity scan corroborating the
/// complementary-series interval test.
pub const DEFAULT_POSITIVITY_SCAN_LEVELS: u64 = 8;

/// Tolerance for the floating-point lattice-gap test on irrational roots.
pub const LATTICE_GAP_TOLERANCE: f64 = 1e-12;

/// Classifies parameters as principal, complementary, or neither.
///
/// Principal is the exact discriminant test `(z+z')² − 4zz' < 0`. The
/// complementary test places both real roots strictly inside one open gap of
/// `ℤ + θℤ` (exact when the roots are rational, floating with
/// [`LATTICE_GAP_TOLERANCE`] otherwise) and is corroborated by an exhaustive
/// positivity scan of the up probabilities over all levels up to
/// [`DEFAULT_POSITIVITY_SCAN_LEVELS`].
pub fn classify_series(params: &Params) -> SeriesClass {
    classify_series_scanned(params, DEFAULT_POSITIVITY_SCAN_LEVELS)
}

/// [`classify_series`] with an explicit positivity-scan level bound.
pub fn classify_series_scanned(params: &Params, scan_levels: u64) -> SeriesClass {
    let disc = params.sum_zz() * params.sum_zz() - rat(4) * params.prod_zz();
    if disc.is_negative() {
        return SeriesClass::Principal;
    }
    // real roots; lattice ℤ + (a/b)ℤ with gcd(a,b)=1 is exactly (1/b)ℤ
    let b = params.theta().value().denom().clone();
    let in_same_gap = match exact_sqrt(&disc) {
        Some(root) => {
            let half = Rat::new(BigInt::from(1), BigInt::from(2));
            let z1 = (params.sum_zz() + &root) * &half;
            let z2 = (params.sum_zz() - &root) * &half;
            let u1 = z1 * Rat::from_integer(b.clone());
            let u2 = z2 * Rat::from_integer(b);
            !u1.is_integer() && !u2.is_integer() && u1.floor() == u2.floor()
        }
        None => {
            let s = crate::rational::to_f64(params.sum_zz());
            let d = crate::rational::to_f64(&disc).sqrt();
            let bf = b.to_f64().expect("lattice denominator out of range");
            let u1 = (s + d) / 2.0 * bf;
            let u2 = (s - d) / 2.0 * bf;
            let off_lattice =
                |u: f64| (u - u.round()).abs() > LATTICE_GAP_TOLERANCE;
            off_lattice(u1) && off_lattice(u2) && u1.floor() == u2.floor()
        }
    };
    if !in_same_gap {
        return SeriesClass::DegenerateOrInvalid;
    }
    for n in 0..=scan_levels {
        for la in crate::partition::enumerate_level(n) {
            if up_probs(&la, params).values().any(|p| !p.is_positive()) {
                return SeriesClass::DegenerateOrInvalid;
            }
        }
    }
    SeriesClass::Complementary
}

/// Exact square root of a nonnegative rational, when it is rational.
fn exact_sqrt(x: &Rat) -> Option<Rat> {
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}
