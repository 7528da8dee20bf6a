//! Numerical checks of the analytic identities around mock characters:
//! pretentious distance, the factorization of `L_a(s)`, and the products
//! attached to the paperfolding sequence.
//!
//! Sums run sequentially in index order with compensated (Neumaier)
//! accumulation, so results are bit-reproducible.

mod distance;
mod products;
mod series;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::arithfun::{ArithmeticFunction, UnitValue};

pub use distance::{
    nearby_character, nearby_character_bound, pretentious_distance_sq,
    random_completely_multiplicative, triangle_defect, DistanceResult,
};
pub use products::{
    general_product, general_product_residual, paperfolding_product_partial, GeneralProduct,
    GAMMA_QUARTER_PRODUCT,
};
pub use series::{dirichlet_series_partial, l_identity_residual, IdentityResidual, SeriesValue};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("cutoff y must be at least 2, got {0}")]
    CutoffBelowTwo(f64),
    #[error("Re(s) must exceed 1, got {0}")]
    AbscissaNotAboveOne(f64),
    #[error("{0} is not congruent to 3 mod 4")]
    NotThreeModFour(i64),
    #[error("truncation must be at least 1")]
    EmptyRange,
}

/// One point of a numeric trace, e.g. `(y, D^2)` or `(N, partial value)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub x: f64,
    pub value: f64,
}

/// The complex number `e(k/m)`, or `0`.
pub fn to_complex(u: UnitValue) -> Complex64 {
    match u.angle().map(|a| (a.num(), a.den())) {
        None => Complex64::new(0.0, 0.0),
        Some((0, 1)) => Complex64::new(1.0, 0.0),
        Some((1, 2)) => Complex64::new(-1.0, 0.0),
        Some((1, 4)) => Complex64::new(0.0, 1.0),
        Some((3, 4)) => Complex64::new(0.0, -1.0),
        Some((k, m)) => Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / m as f64),
    }
}

/// Compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// `#{1 <= n <= N : f(n) != 0} / N`.
pub fn nonzero_density(f: &ArithmeticFunction, n: u64) -> Result<f64, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::EmptyRange);
    }
    let count = (1..=n as i64).filter(|&k| !f.eval(k).is_zero()).count();
    Ok(count as f64 / n as f64)
}

/// `N -> partial product` at each requested truncation.
pub fn paperfolding_product_trace(ns: &[u64]) -> Vec<TracePoint> {
    ns.iter()
        .map(|&n| TracePoint {
            x: n as f64,
            value: paperfolding_product_partial(n),
        })
        .collect()
}

/// `y -> D(f, g; y)^2` at each requested cutoff.
pub fn distance_trace(
    f: &ArithmeticFunction,
    g: &ArithmeticFunction,
    ys: &[f64],
) -> Result<Vec<TracePoint>, AnalysisError> {
    ys.iter()
        .map(|&y| {
            pretentious_distance_sq(f, g, y).map(|d| TracePoint {
                x: y,
                value: d.squared_distance,
            })
        })
        .collect()
}
