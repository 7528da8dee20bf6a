use std::fmt;
use std::ops::{Mul, MulAssign};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::kronecker::SymbolValue;

/// Zero, or the root of unity `e^(2 pi i k/m)` stored as the reduced
/// fraction `k/m` with `0 <= k < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum UnitValue {
    Zero,
    Root(Angle),
}

/// Reduced fraction of a full turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle {
    num: u64,
    den: u64,
}

impl Angle {
    /// `k/m` reduced into `[0, 1)`. Panics on `m == 0`.
    pub fn new(k: i64, m: u64) -> Angle {
        assert!(m > 0, "angle denominator must be positive");
        let k = (k as i128).rem_euclid(m as i128) as u64;
        let g = k.gcd(&m);
        if k == 0 {
            Angle { num: 0, den: 1 }
        } else {
            Angle {
                num: k / g,
                den: m / g,
            }
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    fn add(self, other: Angle) -> Angle {
        let l = self.den.lcm(&other.den) as u128;
        let k = (self.num as u128 * (l / self.den as u128)
            + other.num as u128 * (l / other.den as u128))
            % l;
        Angle::new(k as i64, l as u64)
    }
}

impl UnitValue {
    pub const ONE: UnitValue = UnitValue::Root(Angle { num: 0, den: 1 });
    pub const MINUS_ONE: UnitValue = UnitValue::Root(Angle { num: 1, den: 2 });
    pub const I: UnitValue = UnitValue::Root(Angle { num: 1, den: 4 });

    /// `e^(2 pi i k/m)`.
    pub fn root(k: i64, m: u64) -> UnitValue {
        UnitValue::Root(Angle::new(k, m))
    }

    pub fn is_zero(self) -> bool {
        matches!(self, UnitValue::Zero)
    }

    pub fn angle(self) -> Option<Angle> {
        match self {
            UnitValue::Zero => None,
            UnitValue::Root(a) => Some(a),
        }
    }

    /// Multiplicative order of a root of unity; `None` for zero.
    pub fn order(self) -> Option<u64> {
        self.angle().map(Angle::den)
    }

    pub fn pow(self, e: u64) -> UnitValue {
        match self {
            UnitValue::Zero if e == 0 => UnitValue::ONE,
            UnitValue::Zero => UnitValue::Zero,
            UnitValue::Root(a) => {
                let k = (a.num as u128 * e as u128) % a.den as u128;
                UnitValue::root(k as i64, a.den)
            }
        }
    }

    pub fn conj(self) -> UnitValue {
        match self {
            UnitValue::Zero => UnitValue::Zero,
            UnitValue::Root(a) => UnitValue::root(-(a.num as i64), a.den),
        }
    }

    /// The symbol this value equals, if it lies in `{-1, 0, +1}`.
    pub fn to_symbol(self) -> Option<SymbolValue> {
        match self {
            UnitValue::Zero => Some(SymbolValue::Zero),
            v if v == UnitValue::ONE => Some(SymbolValue::Plus),
            v if v == UnitValue::MINUS_ONE => Some(SymbolValue::Minus),
            _ => None,
        }
    }
}

impl From<SymbolValue> for UnitValue {
    fn from(s: SymbolValue) -> UnitValue {
        match s {
            SymbolValue::Zero => UnitValue::Zero,
            SymbolValue::Plus => UnitValue::ONE,
            SymbolValue::Minus => UnitValue::MINUS_ONE,
        }
    }
}

impl Mul for UnitValue {
    type Output = UnitValue;

    fn mul(self, rhs: UnitValue) -> UnitValue {
        match (self, rhs) {
            (UnitValue::Root(a), UnitValue::Root(b)) => UnitValue::Root(a.add(b)),
            _ => UnitValue::Zero,
        }
    }
}

impl MulAssign for UnitValue {
    fn mul_assign(&mut self, rhs: UnitValue) {
        *self = *self * rhs;
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            UnitValue::Zero => f.write_str("0"),
            UnitValue::Root(Angle { num: 0, .. }) => f.write_str("1"),
            UnitValue::Root(Angle { num: 1, den: 2 }) => f.write_str("-1"),
            UnitValue::Root(Angle { num: 1, den: 4 }) => f.write_str("i"),
            UnitValue::Root(Angle { num: 3, den: 4 }) => f.write_str("-i"),
            UnitValue::Root(Angle { num, den }) => write!(f, "e({num}/{den})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse unit value from {0:?}")]
pub struct ParseUnitError(pub String);

impl FromStr for UnitValue {
    type Err = ParseUnitError;

    /// Accepts `0`, `1`, `+1`, `-1`, `i`, `-i` and `e(k/m)`.
    fn from_str(s: &str) -> Result<UnitValue, ParseUnitError> {
        let t = s.trim();
        let err = || ParseUnitError(s.to_string());
        match t {
            "0" => return Ok(UnitValue::Zero),
            "1" | "+1" => return Ok(UnitValue::ONE),
            "-1" => return Ok(UnitValue::MINUS_ONE),
            "i" => return Ok(UnitValue::I),
            "-i" => return Ok(UnitValue::root(3, 4)),
            _ => {}
        }
        let inner = t
            .strip_prefix("e(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let (k, m) = inner.split_once('/').ok_or_else(err)?;
        let k: i64 = k.trim().parse().map_err(|_| err())?;
        let m: u64 = m.trim().parse().map_err(|_| err())?;
        if m == 0 {
            return Err(err());
        }
        Ok(UnitValue::root(k, m))
    }
}

impl From<UnitValue> for String {
    fn from(v: UnitValue) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for UnitValue {
    type Error = ParseUnitError;

    fn try_from(s: String) -> Result<UnitValue, ParseUnitError> {
        s.parse()
    }
}
