use super::{AnalysisError, NeumaierSum};
use crate::arithfun::paperfolding_symbol;
use crate::kronecker::kronecker;

/// `Gamma(1/4)^2 / (8 sqrt(2 pi))`, the value of
/// `prod_{n >= 1} (2n / (2n + 1))^{v_{n+1}}` for the paperfolding sequence `v`.
/// Taken from a 30-digit evaluation of `Gamma(1/4)`; the tests rederive it
/// from the arithmetic-geometric mean and from Stirling's series.
pub const GAMMA_QUARTER_PRODUCT: f64 = 0.655_514_388_573_029_952_616_209_897_473;

/// `ln(2n / (2n + 1))`.
fn ln_ratio(n: u64) -> f64 {
    -(0.5 / n as f64).ln_1p()
}

/// `prod_{n=1}^{N} (2n / (2n + 1))^{v_{n+1}}`, accumulated in log space.
pub fn paperfolding_product_partial(n: u64) -> f64 {
    let mut log = NeumaierSum::default();
    for k in 1..=n {
        log.add(paperfolding_symbol(k as i64 + 1).to_i8() as f64 * ln_ratio(k));
    }
    log.value().exp()
}

/// Truncations at `N` of the two sides of
/// `prod_{n >= 1} ((n / (n+1)) ((2n+2) / (2n+1))^alpha)^{(a|n+1)}
///   = 2^{-alpha} prod_{n >= 1} (2n / (2n+1))^{(a|2n+1)}`
/// for `a = 3 mod 4` and `alpha = (a|2)`. For `alpha = 1` the right side is
/// `(1/2) prod (2n / (2n+1))^{alpha (a|2n+1)}`; for `alpha = -1` it is the
/// reciprocal of that expression.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralProduct {
    pub alpha: i8,
    pub lhs: f64,
    pub rhs: f64,
}

impl GeneralProduct {
    pub fn residual(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }
}

pub fn general_product(a: i64, n: u64) -> Result<GeneralProduct, AnalysisError> {
    if a.rem_euclid(4) != 3 {
        return Err(AnalysisError::NotThreeModFour(a));
    }
    let alpha = kronecker(a, 2).to_i8();
    let al = alpha as f64;
    let mut lhs = NeumaierSum::default();
    let mut rhs = NeumaierSum::default();
    rhs.add(-al * std::f64::consts::LN_2);
    for k in 1..=n {
        let i = k as i64;
        let x = k as f64;
        let left = kronecker(a, i + 1).to_i8() as f64;
        if left != 0.0 {
            // ln(n / (n+1)) + alpha ln((2n+2) / (2n+1))
            lhs.add(left * (-(1.0 / x).ln_1p() + al * (1.0 / (2.0 * x + 1.0)).ln_1p()));
        }
        let right = kronecker(a, 2 * i + 1).to_i8() as f64;
        if right != 0.0 {
            rhs.add(right * ln_ratio(k));
        }
    }
    Ok(GeneralProduct {
        alpha,
        lhs: lhs.value().exp(),
        rhs: rhs.value().exp(),
    })
}

/// `|LHS_N - RHS_N|` for [`general_product`].
pub fn general_product_residual(a: i64, n: u64) -> Result<f64, AnalysisError> {
    general_product(a, n).map(|g| g.residual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn agm(mut a: f64, mut b: f64) -> f64 {
        while (a - b).abs() > 1e-16 * a {
            (a, b) = ((a + b) / 2.0, (a * b).sqrt());
        }
        a
    }

    /// Stirling's series at `z + 20`, brought back by the recurrence.
    fn ln_gamma(z: f64) -> f64 {
        let shift = 20.0;
        let w = z + shift;
        let series = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + 1.0 / (12.0 * w)
            - 1.0 / (360.0 * w.powi(3))
            + 1.0 / (1260.0 * w.powi(5))
            - 1.0 / (1680.0 * w.powi(7));
        series - (0..20).map(|k| (z + k as f64).ln()).sum::<f64>()
    }

    #[test]
    fn constant_rederived() {
        // Gamma(1/4)^2 = (2 pi)^{3/2} / agm(1, sqrt 2).
        let via_agm = PI / (4.0 * agm(1.0, 2f64.sqrt()));
        assert!((via_agm - GAMMA_QUARTER_PRODUCT).abs() < 1e-14, "{via_agm}");
        let via_stirling = (2.0 * ln_gamma(0.25)).exp() / (8.0 * (2.0 * PI).sqrt());
        assert!(
            (via_stirling - GAMMA_QUARTER_PRODUCT).abs() < 1e-13,
            "{via_stirling}"
        );
        assert!((ln_gamma(0.5) - 0.5 * PI.ln()).abs() < 1e-14);
    }

    #[test]
    fn first_factor() {
        assert!((paperfolding_product_partial(1) - 2.0 / 3.0).abs() < 1e-16);
        assert_eq!(paperfolding_product_partial(0), 1.0);
    }

    #[test]
    fn product_converges() {
        let p = paperfolding_product_partial(100_000);
        assert!((p / GAMMA_QUARTER_PRODUCT - 1.0).abs() < 1e-3, "{p}");
    }

    #[test]
    fn general_residuals_shrink() {
        for a in [3i64, 7, -5] {
            let r: Vec<f64> = [1_000u64, 10_000, 100_000]
                .iter()
                .map(|&n| general_product_residual(a, n).unwrap())
                .collect();
            assert!(r[0] > r[1] && r[1] > r[2], "a={a}: {r:?}");
        }
        assert!(general_product_residual(7, 100_000).unwrap() < 1e-2);
        assert_eq!(general_product(3, 10).unwrap().alpha, -1);
        assert_eq!(
            general_product_residual(5, 10),
            Err(AnalysisError::NotThreeModFour(5))
        );
    }

    #[test]
    fn minus_one_matches_paperfolding() {
        let n = 100_000;
        let g = general_product(-1, n).unwrap();
        assert_eq!(g.alpha, 1);
        let pp = paperfolding_product_partial(n);
        assert!(
            (g.lhs - pp).abs() < 1e-4 && (g.rhs - pp).abs() < 1e-4,
            "{g:?} {pp}"
        );
    }
}
