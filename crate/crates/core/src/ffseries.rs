//! The field with four elements and power series over it, truncated at
//! `X^N`, used to check `G^4 + G + R = 0` for the coefficient series of
//! `(a|n)`, `a = 3 mod 4`.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automata::{detect_eventual_period, PeriodError, PeriodVerdict};
use crate::kronecker::{kronecker, SymbolValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfError {
    #[error("{0} is not congruent to 3 mod 4")]
    NotThreeModFour(i64),
    #[error("embedding is not injective: {0}")]
    NotInjective(String),
    #[error("{0} is not an element of F4")]
    BadElement(u8),
    #[error("malformed series dump: {0}")]
    BadDump(String),
}

/// `0, 1, w, w + 1` encoded as `0, 1, 2, 3`, with `w^2 = w + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct F4(u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const OMEGA: F4 = F4(2);
    pub const OMEGA_PLUS_ONE: F4 = F4(3);
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::OMEGA, F4::OMEGA_PLUS_ONE];

    pub fn new(bits: u8) -> Result<F4, FfError> {
        if bits < 4 {
            Ok(F4(bits))
        } else {
            Err(FfError::BadElement(bits))
        }
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> F4 {
        let mut base = self;
        let mut acc = F4::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<F4> {
        (self != F4::ZERO).then(|| self.pow(2))
    }
}

impl TryFrom<u8> for F4 {
    type Error = FfError;

    fn try_from(bits: u8) -> Result<F4, FfError> {
        F4::new(bits)
    }
}

impl From<F4> for u8 {
    fn from(x: F4) -> u8 {
        x.0
    }
}

impl Add for F4 {
    type Output = F4;

    // Characteristic 2: addition is xor of the bit pairs.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl Mul for F4 {
    type Output = F4;

    fn mul(self, rhs: F4) -> F4 {
        F4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "w", "w+1"][self.0 as usize])
    }
}

/// `sum_{n < N} c_n X^n`, all arithmetic taken modulo `X^N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct F4Series {
    coeffs: Vec<F4>,
}

impl F4Series {
    pub fn new(coeffs: Vec<F4>) -> F4Series {
        F4Series { coeffs }
    }

    pub fn zero(n: usize) -> F4Series {
        F4Series {
            coeffs: vec![F4::ZERO; n],
        }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == F4::ZERO)
    }

    /// Sum truncated at the shorter of the two lengths.
    pub fn add(&self, other: &F4Series) -> F4Series {
        F4Series::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&x, &y)| x + y)
                .collect(),
        )
    }

    /// Schoolbook product truncated at the shorter of the two lengths.
    pub fn mul(&self, other: &F4Series) -> F4Series {
        let n = self.truncation().min(other.truncation());
        let mut out = vec![F4::ZERO; n];
        for (i, &x) in self.coeffs[..n].iter().enumerate() {
            if x == F4::ZERO {
                continue;
            }
            for (j, &y) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] = out[i + j] + x * y;
            }
        }
        F4Series::new(out)
    }

    /// The fourth power: in characteristic 2 with `x^4 = x` on F4 this
    /// moves `c_n` to position `4n`.
    pub fn pow4(&self) -> F4Series {
        let n = self.truncation();
        let mut out = vec![F4::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate().take(n.div_ceil(4)) {
            out[4 * i] = c;
        }
        F4Series::new(out)
    }

    /// Two bits per coefficient, two coefficients per hex digit, the even
    /// index in the high bits; an odd final coefficient is padded with 0.
    /// The truncation is written first: `"<N>:<hex>"`.
    pub fn to_hex(&self) -> String {
        let digits: String = self
            .coeffs
            .chunks(2)
            .map(|pair| {
                let hi = pair[0].bits();
                let lo = pair.get(1).map_or(0, |c| c.bits());
                char::from_digit(((hi << 2) | lo) as u32, 16).expect("nibble")
            })
            .collect();
        format!("{}:{digits}", self.truncation())
    }

    pub fn from_hex(dump: &str) -> Result<F4Series, FfError> {
        let bad = || FfError::BadDump(dump.chars().take(40).collect());
        let (len, digits) = dump.trim().split_once(':').ok_or_else(bad)?;
        let len: usize = len.parse().map_err(|_| bad())?;
        if digits.len() != len.div_ceil(2) {
            return Err(bad());
        }
        let mut coeffs = Vec::with_capacity(len);
        for ch in digits.chars() {
            let v = ch.to_digit(16).ok_or_else(bad)? as u8;
            coeffs.push(F4(v >> 2));
            coeffs.push(F4(v & 3));
        }
        if coeffs.len() > len && coeffs.pop() != Some(F4::ZERO) {
            return Err(bad());
        }
        Ok(F4Series::new(coeffs))
    }
}

/// A map `{0, +1, -1} -> F4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolEmbedding {
    zero: F4,
    plus: F4,
    minus: F4,
}

impl SymbolEmbedding {
    pub fn new(zero: F4, plus: F4, minus: F4) -> Result<SymbolEmbedding, FfError> {
        if zero == plus || zero == minus || plus == minus {
            return Err(FfError::NotInjective(format!(
                "0->{zero}, +1->{plus}, -1->{minus}"
            )));
        }
        Ok(SymbolEmbedding { zero, plus, minus })
    }

    /// Any map, injective or not.
    pub fn unchecked(zero: F4, plus: F4, minus: F4) -> SymbolEmbedding {
        SymbolEmbedding { zero, plus, minus }
    }

    /// All 24 injective maps.
    pub fn all_injective() -> Vec<SymbolEmbedding> {
        let mut out = Vec::new();
        for zero in F4::ALL {
            for plus in F4::ALL {
                for minus in F4::ALL {
                    if let Ok(e) = SymbolEmbedding::new(zero, plus, minus) {
                        out.push(e);
                    }
                }
            }
        }
        out
    }

    pub fn is_injective(&self) -> bool {
        SymbolEmbedding::new(self.zero, self.plus, self.minus).is_ok()
    }

    pub fn apply(&self, s: SymbolValue) -> F4 {
        match s {
            SymbolValue::Zero => self.zero,
            SymbolValue::Plus => self.plus,
            SymbolValue::Minus => self.minus,
        }
    }
}

fn check_a(a: i64) -> Result<(), FfError> {
    if a.rem_euclid(4) == 3 {
        Ok(())
    } else {
        Err(FfError::NotThreeModFour(a))
    }
}

/// `G = sum_{n < N} emb((a|n)) X^n`.
pub fn build_g(a: i64, emb: SymbolEmbedding, n: usize) -> Result<F4Series, FfError> {
    check_a(a)?;
    Ok(F4Series::new(
        (0..n as i64).map(|k| emb.apply(kronecker(a, k))).collect(),
    ))
}

/// `R = sum_{n < N, 4 does not divide n} emb((a|n)) X^n`.
pub fn build_r(a: i64, emb: SymbolEmbedding, n: usize) -> Result<F4Series, FfError> {
    check_a(a)?;
    Ok(F4Series::new(
        (0..n as i64)
            .map(|k| {
                if k % 4 == 0 {
                    F4::ZERO
                } else {
                    emb.apply(kronecker(a, k))
                }
            })
            .collect(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum EquationCheck {
    Holds,
    FailsAt { index: usize },
}

/// Checks `G^4 + G + R = 0` modulo `X^N` coefficient by coefficient.
pub fn verify_functional_equation(
    a: i64,
    emb: SymbolEmbedding,
    n: usize,
) -> Result<EquationCheck, FfError> {
    let g = build_g(a, emb, n)?;
    let r = build_r(a, emb, n)?;
    let total = g.pow4().add(&g).add(&r);
    Ok(match total.coeffs().iter().position(|&c| c != F4::ZERO) {
        None => EquationCheck::Holds,
        Some(index) => EquationCheck::FailsAt { index },
    })
}

pub const WITNESS_MAX_PREPERIOD: usize = 256;
pub const WITNESS_MAX_PERIOD: usize = 1024;

/// Eventual period of the coefficient list, searched with preperiod at
/// most 256 and period at most 1024; needs `N >= 3328`.
pub fn coefficient_period_witness(series: &F4Series) -> Result<PeriodVerdict, PeriodError> {
    detect_eventual_period(series.coeffs(), WITNESS_MAX_PREPERIOD, WITNESS_MAX_PERIOD)
}
