use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{to_complex, AnalysisError, NeumaierSum};
use crate::arithfun::{ArithmeticFunction, DirichletCharacter, UnitValue};
use crate::primes::primes_up_to;

/// Above this many nonzero terms the exact sum is not attempted.
const EXACT_TERM_LIMIT: usize = 256;

/// `D(f, g; y)^2 = sum_{p <= y} (1 - Re f(p) conj g(p)) / p`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceResult {
    pub y: f64,
    pub squared_distance: f64,
    /// The primes with a nonzero term, and that term.
    pub terms: Vec<(u64, f64)>,
    exact: Option<BigRational>,
}

impl DistanceResult {
    pub fn distance(&self) -> f64 {
        self.squared_distance.sqrt()
    }

    /// The sum as an exact rational, available when every `f(p) conj g(p)`
    /// has rational real part (zero, or a root of unity of order 1, 2, 3, 4
    /// or 6) and there are few nonzero terms.
    pub fn exact(&self) -> Option<&BigRational> {
        self.exact.as_ref()
    }
}

/// `2 Re(z)` for `z` zero or a root of unity whose real part is rational.
fn doubled_rational_real_part(z: UnitValue) -> Option<i64> {
    let Some(angle) = z.angle() else {
        return Some(0);
    };
    match (angle.num(), angle.den()) {
        (0, 1) => Some(2),
        (1, 2) => Some(-2),
        (_, 3) => Some(-1),
        (_, 4) => Some(0),
        (_, 6) => Some(1),
        _ => None,
    }
}

pub fn pretentious_distance_sq(
    f: &ArithmeticFunction,
    g: &ArithmeticFunction,
    y: f64,
) -> Result<DistanceResult, AnalysisError> {
    if y.is_nan() || y < 2.0 {
        return Err(AnalysisError::CutoffBelowTwo(y));
    }
    let mut sum = NeumaierSum::default();
    let mut terms = Vec::new();
    let mut weights = Some(Vec::new());
    for p in primes_up_to(y.floor() as u64) {
        let z = f.eval(p as i64) * g.eval(p as i64).conj();
        let doubled = doubled_rational_real_part(z);
        if doubled == Some(2) {
            continue;
        }
        let term = match doubled {
            Some(w) => (2 - w) as f64 / (2 * p) as f64,
            None => (1.0 - to_complex(z).re) / p as f64,
        };
        sum.add(term);
        terms.push((p, term));
        weights = match (weights, doubled) {
            (Some(mut ws), Some(w)) if ws.len() < EXACT_TERM_LIMIT => {
                ws.push((p, w));
                Some(ws)
            }
            _ => None,
        };
    }
    let exact = weights.map(|ws| {
        ws.into_iter().fold(BigRational::zero(), |acc, (p, w)| {
            acc + BigRational::new(BigInt::from(2 - w), BigInt::from(2 * p))
        })
    });
    Ok(DistanceResult {
        y,
        squared_distance: sum.value(),
        terms,
        exact,
    })
}

/// `D(f1, f2; y) + D(g1, g2; y) - D(f1 g1, f2 g2; y)`, which the triangle
/// inequality makes nonnegative.
pub fn triangle_defect(
    f1: &ArithmeticFunction,
    f2: &ArithmeticFunction,
    g1: &ArithmeticFunction,
    g2: &ArithmeticFunction,
    y: f64,
) -> Result<f64, AnalysisError> {
    let left = pretentious_distance_sq(f1, f2, y)?.distance()
        + pretentious_distance_sq(g1, g2, y)?.distance();
    let right = pretentious_distance_sq(&f1.product(g1), &f2.product(g2), y)?.distance();
    Ok(left - right)
}

/// Completely multiplicative `f` with `f(p) = +-1` drawn by a seeded ChaCha8
/// stream for `p <= prime_bound` (in increasing order of `p`), `f(p) = 1`
/// for larger primes, `f(-1) = 1` and `f(0) = 0`.
pub fn random_completely_multiplicative(seed: u64, prime_bound: u64) -> ArithmeticFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let primes = primes_up_to(prime_bound);
    let signs: Vec<bool> = primes.iter().map(|_| rng.random_bool(0.5)).collect();
    let table: Arc<Vec<(u64, bool)>> = Arc::new(primes.into_iter().zip(signs).collect());
    ArithmeticFunction::new(format!("random:{seed}"), move |n| {
        if n == 0 {
            return UnitValue::Zero;
        }
        let mut m = n.unsigned_abs();
        let mut negative = false;
        for &(p, flip) in table.iter() {
            if p * p > m {
                break;
            }
            while m % p == 0 {
                m /= p;
                negative ^= flip;
            }
        }
        if m > 1 {
            if let Ok(i) = table.binary_search_by_key(&m, |&(p, _)| p) {
                negative ^= table[i].1;
            }
        }
        if negative {
            UnitValue::MINUS_ONE
        } else {
            UnitValue::ONE
        }
    })
}

/// A Dirichlet character close to `(a|.)`: `(a|.)` itself when `a` is not
/// 3 mod 4, and `chi_{-4} (-a|.)` otherwise. The two agree at every odd
/// prime not dividing `a`.
pub fn nearby_character(a: i64) -> ArithmeticFunction {
    if a.rem_euclid(4) == 3 {
        DirichletCharacter::chi_minus_4()
            .to_function()
            .product(&ArithmeticFunction::kronecker(-a))
    } else {
        ArithmeticFunction::kronecker(a)
    }
}

/// `1/2 + sum_{p | a} 1/p`, a bound for `D((a|.), nearby_character(a); y)^2`
/// uniform in `y`.
pub fn nearby_character_bound(a: i64) -> f64 {
    let mut m = a.unsigned_abs();
    let mut bound = 0.5;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            bound += 1.0 / p as f64;
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        bound += 1.0 / m as f64;
    }
    bound
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi4() -> ArithmeticFunction {
        DirichletCharacter::chi_minus_4().to_function()
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn paperfolding_against_chi4_is_one_half() {
        let k = ArithmeticFunction::kronecker(-1);
        for y in [2.0, 10.0, 1e3, 1e5] {
            let d = pretentious_distance_sq(&k, &chi4(), y).unwrap();
            assert_eq!(d.exact(), Some(&ratio(1, 2)), "y={y}");
            assert_eq!(d.terms, vec![(2, 0.5)]);
        }
    }

    #[test]
    fn self_distance_vanishes() {
        let pf = ArithmeticFunction::paperfolding();
        let d = pretentious_distance_sq(&pf, &pf, 1e4).unwrap();
        assert_eq!(d.squared_distance, 0.0);
        assert_eq!(d.exact(), Some(&BigRational::zero()));
    }

    #[test]
    fn kappa3_against_shifted_character() {
        let g = chi4().product(&ArithmeticFunction::kronecker(-3));
        for y in [3.0, 100.0, 1e5] {
            let d = pretentious_distance_sq(&ArithmeticFunction::kronecker(3), &g, y).unwrap();
            assert_eq!(d.exact(), Some(&ratio(5, 6)), "y={y}");
        }
    }

    #[test]
    fn irrational_weights_fall_back_to_floats() {
        let f = ArithmeticFunction::new("e(1/5)^n", |n| UnitValue::root(n, 5));
        let d = pretentious_distance_sq(&f, &ArithmeticFunction::one(), 10.0).unwrap();
        assert!(d.exact().is_none());
        let expected: f64 = [2u64, 3, 5, 7]
            .iter()
            .map(|&p| (1.0 - (std::f64::consts::TAU * p as f64 / 5.0).cos()) / p as f64)
            .sum();
        assert!((d.squared_distance - expected).abs() < 1e-15);
    }

    #[test]
    fn terms_bounded_and_monotone() {
        let f = random_completely_multiplicative(7, 1000);
        let g = ArithmeticFunction::kronecker(5);
        let mut last = 0.0;
        for y in [2.0, 50.0, 500.0, 1000.0] {
            let d = pretentious_distance_sq(&f, &g, y).unwrap();
            assert!(d
                .terms
                .iter()
                .all(|&(p, t)| (0.0..=2.0 / p as f64).contains(&t)));
            assert!(d.squared_distance >= last);
            last = d.squared_distance;
        }
    }

    #[test]
    fn cutoff_rejected() {
        let one = ArithmeticFunction::one();
        assert_eq!(
            pretentious_distance_sq(&one, &one, 1.5),
            Err(AnalysisError::CutoffBelowTwo(1.5))
        );
    }

    #[test]
    fn triangle_examples() {
        let one = ArithmeticFunction::one();
        assert_eq!(triangle_defect(&one, &one, &one, &one, 100.0), Ok(0.0));
        let (k1, k3) = (
            ArithmeticFunction::kronecker(-1),
            ArithmeticFunction::kronecker(-3),
        );
        let defect = triangle_defect(&k1, &chi4(), &k3, &k3, 1e3).unwrap();
        let expected = 0.5f64.sqrt() + (1.0f64 / 3.0).sqrt() - (5.0f64 / 6.0).sqrt();
        assert!((defect - expected).abs() < 1e-14, "{defect}");
    }

    #[test]
    fn random_functions_are_multiplicative() {
        let f = random_completely_multiplicative(42, 100);
        for m in 1..=60 {
            for n in 1..=60 {
                assert_eq!(f.eval(m * n), f.eval(m) * f.eval(n));
            }
        }
        let g = random_completely_multiplicative(42, 100);
        assert!((1..500).all(|n| f.eval(n) == g.eval(n)));
        assert_eq!(f.eval(0), UnitValue::Zero);
    }

    #[test]
    fn nearby_characters() {
        assert_eq!(nearby_character_bound(-9), 0.5 + 1.0 / 3.0);
        assert_eq!(nearby_character_bound(12), 0.5 + 0.5 + 1.0 / 3.0);
        let d = pretentious_distance_sq(
            &ArithmeticFunction::kronecker(-9),
            &nearby_character(-9),
            1e4,
        )
        .unwrap();
        assert_eq!(d.exact(), Some(&ratio(5, 6)));
    }
}
