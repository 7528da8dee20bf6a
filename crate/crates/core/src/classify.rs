//! Dirichlet character / mock character verdicts for completely
//! multiplicative functions, plus closed-form expectations for the
//! Kronecker family.
//!
//! A mock character of mockulus `q` is completely multiplicative, `q`-automatic
//! but not eventually periodic on `n >= 0`, and vanishes exactly at `0` and
//! at the integers sharing a factor with some fixed `d`. Every check here is
//! finite, so verdicts hold "at the parameters used"; they are recorded in
//! the verdict.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arithfun::{reduce_periodic_cm, ArithmeticFunction, CharacterError, UnitValue};
use crate::automata::{
    compute_kernel, detect_eventual_period, kernel_to_dfao, KernelParams, PeriodVerdict,
};
use crate::kronecker::{kronecker, SymbolValue};
use crate::primes::primes_up_to;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("{0} is not congruent to 3 mod 4")]
    NotThreeModFour(i64),
    #[error("a must be nonzero")]
    ZeroArgument,
}

/// Bounds for every sub-check of [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyParams {
    /// Complete multiplicativity is checked for all `mn <= mult_bound`.
    pub mult_bound: u64,
    /// Primes `p <= zero_prime_bound` with `f(p) = 0` make up `d`.
    pub zero_prime_bound: u64,
    /// The zero set is checked against `d` on `0..=zero_check_bound`.
    pub zero_check_bound: u64,
    /// Length of the prefix `f(0), f(1), ...` searched for a period.
    pub prefix_len: usize,
    pub max_preperiod: usize,
    pub max_period: usize,
    pub kernel: KernelParams,
}

impl Default for ClassifyParams {
    fn default() -> Self {
        ClassifyParams {
            mult_bound: 10_000,
            zero_prime_bound: 1_000,
            zero_check_bound: 10_000,
            prefix_len: 10_000,
            max_preperiod: 500,
            max_period: 2_000,
            kernel: KernelParams::default(),
        }
    }
}

impl ClassifyParams {
    /// Shrinks the bounds so that no check reads at or past `limit`.
    /// Returns `None` when the data is too short for any meaningful check.
    pub fn fit_to(mut self, limit: u64) -> Option<ClassifyParams> {
        if limit < 16 {
            return None;
        }
        let top = limit - 1;
        self.mult_bound = self.mult_bound.min(top);
        self.zero_check_bound = self.zero_check_bound.min(top);
        self.zero_prime_bound = self.zero_prime_bound.min(top);
        self.prefix_len = self.prefix_len.min(limit as usize);
        if self.prefix_len < self.max_preperiod + 3 * self.max_period {
            self.max_preperiod = self.max_preperiod.min(self.prefix_len / 4);
            self.max_period = (self.prefix_len - self.max_preperiod) / 3;
        }
        Some(self)
    }
}

/// Evidence that a function fails one of the defining conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `f(mn) != f(m) f(n)`.
    Multiplicativity { m: i64, n: i64 },
    /// `f(n) = 0` disagrees with `n = 0 or gcd(n, d) != 1`.
    ZeroSet { n: u64 },
    /// The detected period table is not multiplicative modulo its period.
    PeriodTable { a: u64, b: u64 },
    /// The recovered character disagrees with the function at `n`.
    CharacterMismatch { n: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MockClassification {
    DirichletCharacter {
        modulus: u64,
        period: usize,
        preperiod: usize,
        table: Vec<UnitValue>,
    },
    MockCharacter {
        mockulus: u64,
        d: u64,
        zero_primes: Vec<u64>,
        /// Sum of `1/p` over the primes found with `f(p) = 0`.
        zero_prime_reciprocal_sum: f64,
        kernel_size: usize,
        kernel_window: usize,
        warnings: Vec<String>,
        verified_at: ClassifyParams,
    },
    Inconsistent {
        witness: Witness,
    },
    Inconclusive {
        reason: String,
        verified_at: Option<ClassifyParams>,
    },
}

impl MockClassification {
    pub fn kind(&self) -> &'static str {
        match self {
            MockClassification::DirichletCharacter { .. } => "dirichlet_character",
            MockClassification::MockCharacter { .. } => "mock_character",
            MockClassification::Inconsistent { .. } => "inconsistent",
            MockClassification::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn is_character(&self) -> bool {
        matches!(self, MockClassification::DirichletCharacter { .. })
    }

    pub fn is_mock(&self) -> bool {
        matches!(self, MockClassification::MockCharacter { .. })
    }
}

/// Checks `f(mn) = f(m) f(n)` for `2 <= m <= n`, `mn <= bound`, in
/// increasing `m` then `n`; returns the first violation.
pub fn check_complete_multiplicativity(
    f: &ArithmeticFunction,
    bound: u64,
) -> Result<(), (i64, i64)> {
    let bound = bound as i64;
    let mut m = 2i64;
    while m * m <= bound {
        let fm = f.eval(m);
        for n in m..=bound / m {
            if f.eval(m * n) != fm * f.eval(n) {
                return Err((m, n));
            }
        }
        m += 1;
    }
    Ok(())
}

/// The primes at which a function vanishes, found below a bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSupport {
    pub primes: Vec<u64>,
}

impl ZeroSupport {
    /// The product of the zero primes, if it fits in a `u64`.
    pub fn divisor(&self) -> Option<u64> {
        self.primes
            .iter()
            .try_fold(1u64, |acc, &p| acc.checked_mul(p))
    }

    pub fn reciprocal_sum(&self) -> f64 {
        self.primes.iter().map(|&p| 1.0 / p as f64).sum()
    }

    fn shares_factor(&self, n: u64) -> bool {
        self.primes.iter().any(|&p| n.is_multiple_of(p))
    }
}

/// Collects the primes `p <= prime_bound` with `f(p) = 0`, then checks
/// `f(n) = 0 <=> (n = 0 or gcd(n, d) != 1)` for `0 <= n <= check_bound`,
/// except that `f(0)` is unconstrained when `d = 1`.
/// On failure returns the first offending `n`.
pub fn zero_support_divisor(
    f: &ArithmeticFunction,
    prime_bound: u64,
    check_bound: u64,
) -> Result<ZeroSupport, u64> {
    let support = ZeroSupport {
        primes: primes_up_to(prime_bound)
            .into_iter()
            .filter(|&p| f.eval(p as i64).is_zero())
            .collect(),
    };
    for n in 0..=check_bound {
        // With d = 1 the value at 0 is free: a character modulo 1 is 1
        // there, a mock character 0.
        if n == 0 && support.primes.is_empty() {
            continue;
        }
        let expected_zero = n == 0 || support.shares_factor(n);
        if f.eval(n as i64).is_zero() != expected_zero {
            return Err(n);
        }
    }
    Ok(support)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Runs the multiplicativity, zero-set, periodicity and kernel checks.
///
/// Verdict precedence: any witness gives `Inconsistent`; otherwise a detected
/// period gives `DirichletCharacter`; otherwise a closed `q`-kernel gives
/// `MockCharacter`; anything else is `Inconclusive`.
pub fn classify(f: &ArithmeticFunction, q: u64, params: ClassifyParams) -> MockClassification {
    let params = match f.domain_limit() {
        None => params,
        Some(limit) => match params.fit_to(limit) {
            Some(p) => p,
            None => {
                return MockClassification::Inconclusive {
                    reason: format!("only {limit} terms available"),
                    verified_at: None,
                }
            }
        },
    };

    if let Err((m, n)) = check_complete_multiplicativity(f, params.mult_bound) {
        return MockClassification::Inconsistent {
            witness: Witness::Multiplicativity { m, n },
        };
    }
    let support = match zero_support_divisor(f, params.zero_prime_bound, params.zero_check_bound) {
        Ok(s) => s,
        Err(n) => {
            return MockClassification::Inconsistent {
                witness: Witness::ZeroSet { n },
            }
        }
    };

    let prefix = f.values(0..params.prefix_len as i64);
    let verdict = match detect_eventual_period(&prefix, params.max_preperiod, params.max_period) {
        Ok(v) => v,
        Err(e) => {
            return MockClassification::Inconclusive {
                reason: e.to_string(),
                verified_at: Some(params),
            }
        }
    };

    if let PeriodVerdict::Periodic { preperiod, period } = verdict {
        return character_verdict(f, &prefix, preperiod, period);
    }

    let Some(d) = support.divisor() else {
        return MockClassification::Inconclusive {
            reason: "zero-prime product overflows u64".into(),
            verified_at: Some(params),
        };
    };
    let kernel = match compute_kernel(f, q, params.kernel) {
        Ok(k) => k,
        Err(e) => {
            return MockClassification::Inconclusive {
                reason: format!("no period detected and {e}"),
                verified_at: Some(params),
            }
        }
    };
    let replay_end = (params.prefix_len as u64).saturating_sub(1);
    let dfao = kernel_to_dfao(&kernel).expect("computed kernels are closed");
    if let Some(n) = dfao.first_mismatch(f, 0..=replay_end) {
        return MockClassification::Inconclusive {
            reason: format!("kernel automaton disagrees with the function at n = {n}"),
            verified_at: Some(params),
        };
    }

    let mut warnings = Vec::new();
    let q_primes = prime_factors(q);
    for &p in &q_primes {
        if !support.primes.contains(&p) && q_primes.len() > 1 {
            warnings.push(format!(
                "f({p}) != 0 for the prime {p} dividing {q}, so the mockulus should be a power of {p}"
            ));
        }
    }

    MockClassification::MockCharacter {
        mockulus: q,
        d,
        zero_prime_reciprocal_sum: support.reciprocal_sum(),
        zero_primes: support.primes,
        kernel_size: kernel.len(),
        kernel_window: kernel.window(),
        warnings,
        verified_at: params,
    }
}

fn character_verdict(
    f: &ArithmeticFunction,
    prefix: &[UnitValue],
    preperiod: usize,
    period: usize,
) -> MockClassification {
    let start = preperiod.max(1).div_ceil(period) * period;
    let table: Vec<UnitValue> = (0..period).map(|r| f.eval((start + r) as i64)).collect();
    let chi = match reduce_periodic_cm(period as u64, table) {
        Ok(chi) => chi,
        Err(CharacterError::NotCompletelyMultiplicative { a, b }) => {
            return MockClassification::Inconsistent {
                witness: Witness::PeriodTable { a, b },
            }
        }
        Err(e) => {
            return MockClassification::Inconclusive {
                reason: format!("periodic, but {e}"),
                verified_at: None,
            }
        }
    };
    if let Some(n) = (1..prefix.len()).find(|&n| chi.eval(n as i64) != prefix[n]) {
        return MockClassification::Inconsistent {
            witness: Witness::CharacterMismatch { n: n as u64 },
        };
    }
    MockClassification::DirichletCharacter {
        modulus: chi.modulus(),
        period,
        preperiod,
        table: chi.table().to_vec(),
    }
}

/// Expected verdict for `n -> (a|n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyVerdict {
    Character,
    Mock,
}

/// `(a|.)` is a Dirichlet character exactly when `a` is not 3 mod 4, and a
/// mock character of mockulus 2 otherwise.
pub fn kronecker_family_verdict(a: i64) -> Result<FamilyVerdict, ClassifyError> {
    if a == 0 {
        return Err(ClassifyError::ZeroArgument);
    }
    Ok(if a.rem_euclid(4) == 3 {
        FamilyVerdict::Mock
    } else {
        FamilyVerdict::Character
    })
}

/// The least period of `n -> (a|2n+1)` for `a = 3 mod 4`.
pub fn period_pattern(a: i64) -> Result<Vec<SymbolValue>, ClassifyError> {
    if a.rem_euclid(4) != 3 {
        return Err(ClassifyError::NotThreeModFour(a));
    }
    let bound = 2 * a.unsigned_abs() as usize;
    let values: Vec<SymbolValue> = (0..4 * bound as i64)
        .map(|n| kronecker(a, 2 * n + 1))
        .collect();
    let period = detect_eventual_period(&values, 0, bound)
        .ok()
        .and_then(|v| v.period())
        .expect("(a|2n+1) has period dividing 2|a|");
    Ok(values[..period].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithfun::paperfolding;

    fn pattern_string(a: i64) -> String {
        period_pattern(a)
            .unwrap()
            .iter()
            .map(|s| s.as_char())
            .collect()
    }

    #[test]
    fn multiplicativity_checks() {
        assert_eq!(
            check_complete_multiplicativity(&ArithmeticFunction::kronecker(3), 10_000),
            Ok(())
        );
        assert_eq!(
            check_complete_multiplicativity(&ArithmeticFunction::one(), 10_000),
            Ok(())
        );
        // Odd n = 3 mod 6 map to -1, other odd n to +1, even n to 0:
        // f(9) = -1 but f(3)^2 = +1.
        let bad = ArithmeticFunction::new("bad", |n| match n.rem_euclid(6) {
            3 => UnitValue::MINUS_ONE,
            1 | 5 => UnitValue::ONE,
            _ => UnitValue::Zero,
        });
        assert_eq!(check_complete_multiplicativity(&bad, 10_000), Err((3, 3)));
    }

    #[test]
    fn zero_supports() {
        let s = zero_support_divisor(&ArithmeticFunction::kronecker(3), 1000, 10_000).unwrap();
        assert_eq!(s.divisor(), Some(3));
        let s = zero_support_divisor(&ArithmeticFunction::new("pf", paperfolding), 1000, 10_000)
            .unwrap();
        assert_eq!(s.divisor(), Some(1));
        let unit_indicator = ArithmeticFunction::new("ind", |n| {
            if n.abs() == 1 {
                UnitValue::ONE
            } else {
                UnitValue::Zero
            }
        });
        assert_eq!(
            zero_support_divisor(&unit_indicator, 1000, 10_000),
            Err(1009)
        );
    }

    #[test]
    fn small_kronecker_verdicts() {
        let p = ClassifyParams::default();
        let v2 = classify(&ArithmeticFunction::kronecker(2), 2, p);
        assert!(
            matches!(
                v2,
                MockClassification::DirichletCharacter { modulus: 8, .. }
            ),
            "{v2:?}"
        );
        let v4 = classify(&ArithmeticFunction::kronecker(4), 2, p);
        assert!(
            matches!(v4, MockClassification::DirichletCharacter { period: 2, .. }),
            "{v4:?}"
        );
        let c = classify(&ArithmeticFunction::one(), 2, p);
        assert!(
            matches!(
                c,
                MockClassification::DirichletCharacter {
                    modulus: 1,
                    preperiod: 0,
                    ..
                }
            ),
            "{c:?}"
        );
        let v1 = classify(&ArithmeticFunction::kronecker(1), 2, p);
        assert!(
            matches!(
                v1,
                MockClassification::DirichletCharacter {
                    modulus: 1,
                    preperiod: 1,
                    ..
                }
            ),
            "{v1:?}"
        );
        let v3 = classify(&ArithmeticFunction::kronecker(3), 2, p);
        assert!(
            matches!(
                v3,
                MockClassification::MockCharacter {
                    mockulus: 2,
                    d: 3,
                    ..
                }
            ),
            "{v3:?}"
        );
        let pf = classify(&ArithmeticFunction::paperfolding(), 2, p);
        assert!(
            matches!(
                pf,
                MockClassification::MockCharacter {
                    mockulus: 2,
                    d: 1,
                    ..
                }
            ),
            "{pf:?}"
        );
    }

    #[test]
    fn base_change_keeps_d() {
        let p = ClassifyParams::default();
        for a in [3i64, -1, 7, -5] {
            let f = ArithmeticFunction::kronecker(a);
            let (
                MockClassification::MockCharacter { d: d2, .. },
                MockClassification::MockCharacter {
                    d: d4, mockulus, ..
                },
            ) = (classify(&f, 2, p), classify(&f, 4, p))
            else {
                panic!("a = {a} not mock in base 2 and 4");
            };
            assert_eq!((d2, mockulus), (d4, 4));
        }
    }

    #[test]
    fn base_three_is_inconclusive() {
        let v = classify(
            &ArithmeticFunction::kronecker(7),
            3,
            ClassifyParams::default(),
        );
        assert!(
            matches!(v, MockClassification::Inconclusive { .. }),
            "{v:?}"
        );
    }

    #[test]
    fn non_multiplicative_is_inconsistent() {
        let f = ArithmeticFunction::new("n mod 3", |n| match n.rem_euclid(3) {
            0 => UnitValue::Zero,
            1 => UnitValue::ONE,
            _ => UnitValue::I,
        });
        let v = classify(&f, 2, ClassifyParams::default());
        assert_eq!(
            v,
            MockClassification::Inconsistent {
                witness: Witness::Multiplicativity { m: 2, n: 2 }
            }
        );
    }

    #[test]
    fn family_verdicts() {
        for a in [2, 4, 5, -4, 1] {
            assert_eq!(kronecker_family_verdict(a), Ok(FamilyVerdict::Character));
        }
        for a in [3, 7, -1, -5, -9] {
            assert_eq!(kronecker_family_verdict(a), Ok(FamilyVerdict::Mock));
        }
        assert_eq!(
            kronecker_family_verdict(0),
            Err(ClassifyError::ZeroArgument)
        );
    }

    #[test]
    fn patterns() {
        assert_eq!(pattern_string(-1), "+-");
        assert_eq!(pattern_string(3), "+0--0+");
        assert_eq!(pattern_string(7), "++-0+----+0-++");
        assert_eq!(pattern_string(-5), "++0++--0--");
        assert_eq!(pattern_string(-9), "+0+-0-");
        assert_eq!(period_pattern(5), Err(ClassifyError::NotThreeModFour(5)));
    }

    #[test]
    fn verdict_json_shape() {
        let v = classify(
            &ArithmeticFunction::kronecker(3),
            2,
            ClassifyParams::default(),
        );
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["verdict"], "mock_character");
        assert_eq!(json["mockulus"], 2);
        assert_eq!(json["d"], 3);
        let back: MockClassification = serde_json::from_value(json).unwrap();
        assert_eq!(back, v);
    }
}
