use num_complex::Complex64;

use super::{to_complex, AnalysisError, ComplexSum};
use crate::arithfun::ArithmeticFunction;
use crate::kronecker::kronecker;

/// A truncated Dirichlet series `sum_{n <= N} f(n) n^{-s}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub s: Complex64,
    pub terms: u64,
    pub partial: Complex64,
    /// `N^{1 - Re s} / (Re s - 1)`, which bounds `sum_{n > N} n^{-Re s}` and
    /// hence the tail for any coefficients of modulus at most 1.
    pub tail_bound: f64,
}

fn check_abscissa(s: Complex64) -> Result<(), AnalysisError> {
    if s.re.is_nan() || s.re <= 1.0 {
        return Err(AnalysisError::AbscissaNotAboveOne(s.re));
    }
    Ok(())
}

fn tail_bound(s: Complex64, n: u64) -> f64 {
    (n as f64).powf(1.0 - s.re) / (s.re - 1.0)
}

fn power(n: u64, s: Complex64) -> Complex64 {
    let ln = (n as f64).ln();
    Complex64::from_polar((n as f64).powf(-s.re), -s.im * ln)
}

/// Terms are added in increasing `n`; `Re s <= 1` is rejected.
pub fn dirichlet_series_partial(
    f: &ArithmeticFunction,
    s: Complex64,
    n: u64,
) -> Result<SeriesValue, AnalysisError> {
    check_abscissa(s)?;
    if n == 0 {
        return Err(AnalysisError::EmptyRange);
    }
    let mut sum = ComplexSum::default();
    for k in 1..=n {
        let c = f.eval(k as i64);
        if !c.is_zero() {
            sum.add(to_complex(c) * power(k, s));
        }
    }
    Ok(SeriesValue {
        s,
        terms: n,
        partial: sum.value(),
        tail_bound: tail_bound(s, n),
    })
}

/// Both sides of `L_a(s) = (1 - (a|2) 2^{-s})^{-1} L(s, chi)` truncated at
/// `N`, where `chi` is `(a|.)` on odd arguments and `0` on even ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResidual {
    pub residual: f64,
    pub factor: Complex64,
    /// `T + |factor| T` with `T` the tail bound of either truncated series.
    pub bound: f64,
    pub mock_series: Complex64,
    pub character_series: Complex64,
}

pub fn l_identity_residual(
    a: i64,
    s: Complex64,
    n: u64,
) -> Result<IdentityResidual, AnalysisError> {
    if a.rem_euclid(4) != 3 {
        return Err(AnalysisError::NotThreeModFour(a));
    }
    let mock = dirichlet_series_partial(&ArithmeticFunction::kronecker(a), s, n)?;
    let chi = ArithmeticFunction::new(format!("odd part of kron:{a}"), move |k| {
        if k % 2 == 0 {
            crate::arithfun::UnitValue::Zero
        } else {
            kronecker(a, k).into()
        }
    });
    let character = dirichlet_series_partial(&chi, s, n)?;
    let at_two = kronecker(a, 2).to_i8() as f64;
    let factor = (Complex64::new(1.0, 0.0) - at_two * power(2, s)).inv();
    Ok(IdentityResidual {
        residual: (mock.partial - factor * character.partial).norm(),
        factor,
        bound: mock.tail_bound + factor.norm() * character.tail_bound,
        mock_series: mock.partial,
        character_series: character.partial,
    })
}
