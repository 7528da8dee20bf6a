//! The Kronecker symbol `(a|n)` on all of `Z x Z`.
//!
//! Two independent routes are provided. [`kronecker`] is the usual binary
//! algorithm (reciprocity plus the supplementary law at 2) and is total on
//! `i64`. [`kronecker_factored`] follows the definition literally: factor `n`
//! with `-1` counted as a prime and multiply the local symbols, evaluating
//! `(a|2)` as `(2|a)`. The factored route is bounded by the prime sieve.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::primes::PrimeSieve;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KroneckerError {
    #[error("argument must be nonzero")]
    Zero,
    #[error("expected an odd integer, got {0}")]
    EvenArgument(i64),
    #[error("{0} is not an odd positive prime")]
    NotOddPrime(i64),
    #[error("valuation base must be at least 2, got {0}")]
    BadBase(u64),
    #[error("|{n}| exceeds the factorization limit {limit}")]
    BeyondFactorLimit { n: i64, limit: u128 },
}

/// A value of the Kronecker symbol: exactly one of `-1`, `0`, `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum SymbolValue {
    Minus,
    Zero,
    Plus,
}

impl SymbolValue {
    pub fn to_i8(self) -> i8 {
        match self {
            SymbolValue::Minus => -1,
            SymbolValue::Zero => 0,
            SymbolValue::Plus => 1,
        }
    }

    pub fn from_sign(v: i64) -> Self {
        match v.signum() {
            -1 => SymbolValue::Minus,
            0 => SymbolValue::Zero,
            _ => SymbolValue::Plus,
        }
    }

    pub fn is_zero(self) -> bool {
        self == SymbolValue::Zero
    }

    /// Sign character used in pattern listings: `+`, `0`, `-`.
    pub fn as_char(self) -> char {
        match self {
            SymbolValue::Minus => '-',
            SymbolValue::Zero => '0',
            SymbolValue::Plus => '+',
        }
    }

    pub fn pow(self, e: u32) -> Self {
        match (self, e) {
            (_, 0) => SymbolValue::Plus,
            (SymbolValue::Minus, e) if e % 2 == 0 => SymbolValue::Plus,
            (v, _) => v,
        }
    }
}

impl From<SymbolValue> for i8 {
    fn from(v: SymbolValue) -> i8 {
        v.to_i8()
    }
}

impl TryFrom<i8> for SymbolValue {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            -1 => Ok(SymbolValue::Minus),
            0 => Ok(SymbolValue::Zero),
            1 => Ok(SymbolValue::Plus),
            other => Err(format!("{other} is not a symbol value")),
        }
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;

    fn mul(self, rhs: SymbolValue) -> SymbolValue {
        SymbolValue::from_sign((self.to_i8() * rhs.to_i8()) as i64)
    }
}

impl MulAssign for SymbolValue {
    fn mul_assign(&mut self, rhs: SymbolValue) {
        *self = *self * rhs;
    }
}

impl Neg for SymbolValue {
    type Output = SymbolValue;

    fn neg(self) -> SymbolValue {
        SymbolValue::from_sign(-(self.to_i8() as i64))
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i8())
    }
}

/// `n = sign * prod p^e`, with the sign playing the role of the prime `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    pub sign: i8,
    pub factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    /// Reassembles the integer.
    pub fn value(&self) -> i128 {
        let mut v: i128 = self.sign as i128;
        for &(p, e) in &self.factors {
            v *= (p as i128).pow(e);
        }
        v
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

/// `(a|n)` via the binary reciprocity algorithm.
///
/// Zero exactly when `a * n == 0` or `gcd(|a|, |n|) > 1`. In particular
/// `(a|0) = 0` for every `a`, including `a = +-1`.
pub fn kronecker(a: i64, n: i64) -> SymbolValue {
    if a == 0 || n == 0 {
        return SymbolValue::Zero;
    }
    let a = a as i128;
    let mut b = n as i128;
    if a % 2 == 0 && b % 2 == 0 {
        return SymbolValue::Zero;
    }
    let mut sign = 1i8;
    if b < 0 {
        b = -b;
        if a < 0 {
            sign = -sign;
        }
    }
    let twos = b.trailing_zeros();
    b >>= twos;
    if twos % 2 == 1 {
        let r = a.rem_euclid(8);
        if r == 3 || r == 5 {
            sign = -sign;
        }
    }
    // b is now odd and positive: Jacobi symbol (a|b).
    let mut b = b as u128;
    let mut a = a.rem_euclid(b as i128) as u128;
    while a != 0 {
        let z = a.trailing_zeros();
        a >>= z;
        if z % 2 == 1 && (b % 8 == 3 || b % 8 == 5) {
            sign = -sign;
        }
        if a % 4 == 3 && b % 4 == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
        a %= b;
    }
    if b == 1 {
        SymbolValue::from_sign(sign as i64)
    } else {
        SymbolValue::Zero
    }
}

/// `(a|2)` for odd `a` by the closed form `(-1)^((a^2 - 1)/8)`.
pub fn symbol_at_two(a: i64) -> Result<SymbolValue, KroneckerError> {
    if a % 2 == 0 {
        return Err(KroneckerError::EvenArgument(a));
    }
    let a = a as i128;
    let exponent = (a * a - 1) / 8;
    Ok(if exponent % 2 == 0 {
        SymbolValue::Plus
    } else {
        SymbolValue::Minus
    })
}

/// Legendre symbol by exhaustive search for a square root modulo `p`.
pub fn legendre_oracle(a: i64, p: i64) -> Result<SymbolValue, KroneckerError> {
    if p < 3 || p % 2 == 0 || !crate::primes::is_prime(p as u64) {
        return Err(KroneckerError::NotOddPrime(p));
    }
    let r = a.rem_euclid(p);
    if r == 0 {
        return Ok(SymbolValue::Zero);
    }
    let is_square = (1..p).any(|x| (x as i128 * x as i128 % p as i128) as i64 == r);
    Ok(if is_square {
        SymbolValue::Plus
    } else {
        SymbolValue::Minus
    })
}

/// Largest `t` with `p^t | n`; the sign of `n` is ignored.
pub fn valuation(n: i64, p: u64) -> Result<u32, KroneckerError> {
    if n == 0 {
        return Err(KroneckerError::Zero);
    }
    if p < 2 {
        return Err(KroneckerError::BadBase(p));
    }
    let mut m = n.unsigned_abs();
    let mut t = 0;
    while m.is_multiple_of(p) {
        m /= p;
        t += 1;
    }
    Ok(t)
}

/// Trial-division factorization against the global sieve.
pub fn factor(n: i64) -> Result<FactoredInteger, KroneckerError> {
    factor_with(PrimeSieve::global(), n)
}

pub fn factor_with(sieve: &PrimeSieve, n: i64) -> Result<FactoredInteger, KroneckerError> {
    if n == 0 {
        return Err(KroneckerError::Zero);
    }
    let limit = sieve.factor_limit();
    if n.unsigned_abs() as u128 > limit {
        return Err(KroneckerError::BeyondFactorLimit { n, limit });
    }
    let sign = if n < 0 { -1 } else { 1 };
    let mut m = n.unsigned_abs();
    let mut factors = Vec::new();
    for &p in sieve.primes() {
        if p * p > m {
            break;
        }
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(FactoredInteger { sign, factors })
}

/// `(a|p)` for an odd prime `p` coprime to `a`, by Euler's criterion.
fn euler_criterion(a: i64, p: u64) -> SymbolValue {
    let p128 = p as u128;
    let base = (a as i128).rem_euclid(p as i128) as u128;
    let mut result = 1u128;
    let mut b = base;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % p128;
        }
        b = b * b % p128;
        e >>= 1;
    }
    match result {
        0 => SymbolValue::Zero,
        1 => SymbolValue::Plus,
        _ => SymbolValue::Minus,
    }
}

/// `(a|n)` straight from the factored-product definition.
pub fn kronecker_factored(a: i64, n: i64) -> Result<SymbolValue, KroneckerError> {
    if a == 0 || n == 0 || a.unsigned_abs().gcd(&n.unsigned_abs()) > 1 {
        return Ok(SymbolValue::Zero);
    }
    let fact = factor(n)?;
    let mut value = SymbolValue::Plus;
    if fact.sign < 0 && a < 0 {
        value = -value;
    }
    for &(p, e) in &fact.factors {
        let local = if p == 2 {
            // (a|2) := (2|a), itself evaluated through the definition.
            kronecker_factored(2, a)?
        } else {
            euler_criterion(a, p)
        };
        value *= local.pow(e);
    }
    Ok(value)
}

/// Largest odd divisor of `n` (keeps the sign).
pub fn odd_part(n: i64) -> i64 {
    if n == 0 {
        return 0;
    }
    n >> n.trailing_zeros()
}
