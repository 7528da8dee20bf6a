use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::UnitValue;
use crate::kronecker::{kronecker, SymbolValue};

type EvalFn = dyn Fn(i64) -> UnitValue + Send + Sync;

/// A map `Z -> {0} u roots of unity`, cheap to clone and safe to share
/// across threads.
#[derive(Clone)]
pub struct ArithmeticFunction {
    eval: Arc<EvalFn>,
    label: String,
    domain_limit: Option<u64>,
}

impl ArithmeticFunction {
    pub fn new(
        label: impl Into<String>,
        f: impl Fn(i64) -> UnitValue + Send + Sync + 'static,
    ) -> Self {
        ArithmeticFunction {
            eval: Arc::new(f),
            label: label.into(),
            domain_limit: None,
        }
    }

    /// `n -> (a|n)`.
    pub fn kronecker(a: i64) -> Self {
        ArithmeticFunction::new(format!("kron:{a}"), move |n| kronecker(a, n).into())
    }

    pub fn paperfolding() -> Self {
        ArithmeticFunction::new("paperfold", paperfolding)
    }

    /// The constant function 1 (the trivial character of modulus 1).
    pub fn one() -> Self {
        ArithmeticFunction::new("const:1", |_| UnitValue::ONE)
    }

    /// A finitely supported sequence. Indices missing from `values` evaluate
    /// to zero; [`domain_limit`](Self::domain_limit) is the first positive
    /// index that is missing.
    pub fn from_values(label: impl Into<String>, values: BTreeMap<i64, UnitValue>) -> Self {
        let mut limit = 1u64;
        while values.contains_key(&(limit as i64)) {
            limit += 1;
        }
        let values = Arc::new(values);
        let mut f = ArithmeticFunction::new(label, move |n| {
            values.get(&n).copied().unwrap_or(UnitValue::Zero)
        });
        f.domain_limit = Some(limit);
        f
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Exclusive upper bound of the indices at which the function is known,
    /// for functions backed by finite data.
    pub fn domain_limit(&self) -> Option<u64> {
        self.domain_limit
    }

    #[inline]
    pub fn eval(&self, n: i64) -> UnitValue {
        (self.eval)(n)
    }

    pub fn values(&self, range: std::ops::Range<i64>) -> Vec<UnitValue> {
        range.map(|n| self.eval(n)).collect()
    }

    /// `n -> f(n) g(n)`.
    pub fn product(&self, other: &ArithmeticFunction) -> ArithmeticFunction {
        let (f, g) = (self.clone(), other.clone());
        let domain_limit = match (f.domain_limit, g.domain_limit) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut h = ArithmeticFunction::new(format!("{}*{}", f.label, g.label), move |n| {
            f.eval(n) * g.eval(n)
        });
        h.domain_limit = domain_limit;
        h
    }
}

impl fmt::Debug for ArithmeticFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArithmeticFunction")
            .field("label", &self.label)
            .field("domain_limit", &self.domain_limit)
            .finish_non_exhaustive()
    }
}

/// Pointwise product `fg`.
pub fn pointwise_product(f: &ArithmeticFunction, g: &ArithmeticFunction) -> ArithmeticFunction {
    f.product(g)
}

/// The regular paperfolding sequence extended to `Z`:
/// `v(2n) = v(n)`, `v(2n+1) = (-1)^n`, `v(0) = 0`, `v(-n) = -v(n)`.
pub fn paperfolding_symbol(n: i64) -> SymbolValue {
    if n == 0 {
        return SymbolValue::Zero;
    }
    let m = n.unsigned_abs() >> n.trailing_zeros();
    let v = if m % 4 == 1 {
        SymbolValue::Plus
    } else {
        SymbolValue::Minus
    };
    if n < 0 {
        -v
    } else {
        v
    }
}

pub fn paperfolding(n: i64) -> UnitValue {
    paperfolding_symbol(n).into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use SymbolValue::{Minus as M, Plus as P};

    /// Direct transcription of the recursion, as an oracle.
    fn paperfold_recursive(n: i64) -> i8 {
        if n == 0 {
            0
        } else if n < 0 {
            -paperfold_recursive(-n)
        } else if n % 2 == 0 {
            paperfold_recursive(n / 2)
        } else if ((n - 1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn crease_prefix() {
        let expected = [P, P, M, P, P, M, M, P, P, P, M, M, P, M, M];
        let got: Vec<_> = (1..=15).map(paperfolding_symbol).collect();
        assert_eq!(got, expected);
        assert_eq!(paperfolding(0), UnitValue::Zero);
        assert_eq!(paperfolding(-3), UnitValue::ONE);
        for k in 0..=20 {
            assert_eq!(paperfolding(1 << k), UnitValue::ONE);
        }
    }

    #[test]
    fn matches_recursion_and_kronecker() {
        for n in -100_000i64..=100_000 {
            let v = paperfolding_symbol(n);
            assert_eq!(v.to_i8(), paperfold_recursive(n), "n = {n}");
            assert_eq!(v, kronecker(-1, n), "n = {n}");
        }
    }

    #[test]
    fn products() {
        let k3 = ArithmeticFunction::kronecker(3);
        let prod = ArithmeticFunction::kronecker(-3).product(&ArithmeticFunction::kronecker(-1));
        for n in 1..=10_000 {
            assert_eq!(prod.eval(n), k3.eval(n));
        }
        let pf = ArithmeticFunction::paperfolding();
        let with_one = pointwise_product(&pf, &ArithmeticFunction::one());
        let sq = pointwise_product(&pf, &pf);
        for n in -200..=200 {
            assert_eq!(with_one.eval(n), pf.eval(n));
            let expected = if n == 0 {
                UnitValue::Zero
            } else {
                UnitValue::ONE
            };
            assert_eq!(sq.eval(n), expected);
        }
    }

    #[test]
    fn finite_values() {
        let mut m = BTreeMap::new();
        for n in 1..=10 {
            m.insert(n, UnitValue::ONE);
        }
        m.insert(12, UnitValue::MINUS_ONE);
        let f = ArithmeticFunction::from_values("file", m);
        assert_eq!(f.domain_limit(), Some(11));
        assert_eq!(f.eval(12), UnitValue::MINUS_ONE);
        assert_eq!(f.eval(11), UnitValue::Zero);
        let g = f.product(&ArithmeticFunction::one());
        assert_eq!(g.domain_limit(), Some(11));
    }
}
