use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{ArithmeticFunction, CharacterError, UnitValue};
use crate::kronecker::kronecker;

/// A Dirichlet character given by its values on `0..q`.
///
/// Construction validates complete multiplicativity on the table and the
/// zero set `chi(n) = 0 <=> gcd(n, q) != 1`; together these force `chi(1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DirichletCharacter {
    modulus: u64,
    table: Vec<UnitValue>,
}

impl DirichletCharacter {
    pub fn from_table(q: u64, table: Vec<UnitValue>) -> Result<Self, CharacterError> {
        if q == 0 {
            return Err(CharacterError::Malformed(
                "modulus must be at least 1".into(),
            ));
        }
        if table.len() as u64 != q {
            return Err(CharacterError::Malformed(format!(
                "table has {} entries, expected {q}",
                table.len()
            )));
        }
        if let Some((a, b)) = multiplicativity_violation(&table) {
            return Err(CharacterError::NotMultiplicative { a, b });
        }
        if let Some(n) = (0..q).find(|&n| table[n as usize].is_zero() != (n.gcd(&q) != 1)) {
            return Err(CharacterError::WrongZeroSet { n });
        }
        Ok(DirichletCharacter { modulus: q, table })
    }

    /// Builds the table from `f` on `0..q` and validates it.
    pub fn from_fn(q: u64, f: impl Fn(u64) -> UnitValue) -> Result<Self, CharacterError> {
        DirichletCharacter::from_table(q, (0..q).map(f).collect())
    }

    /// The principal character modulo `q`.
    pub fn principal(q: u64) -> Self {
        DirichletCharacter::from_fn(q, |n| {
            if n.gcd(&q) == 1 {
                UnitValue::ONE
            } else {
                UnitValue::Zero
            }
        })
        .expect("principal character is valid")
    }

    pub fn trivial() -> Self {
        DirichletCharacter::principal(1)
    }

    /// The nontrivial character modulo 4.
    pub fn chi_minus_4() -> Self {
        DirichletCharacter::from_table(
            4,
            vec![
                UnitValue::Zero,
                UnitValue::ONE,
                UnitValue::Zero,
                UnitValue::MINUS_ONE,
            ],
        )
        .expect("chi_-4 is valid")
    }

    /// `n -> (d|n)` as a character of minimal modulus. Requires
    /// `d != 0` and `d` not congruent to 3 mod 4.
    pub fn kronecker(d: i64) -> Result<Self, CharacterError> {
        if d == 0 || d.rem_euclid(4) == 3 {
            return Err(CharacterError::NotACharacter(format!("kron:{d}")));
        }
        let q = 4 * d.unsigned_abs();
        // Sample away from n = 0, where (1|0) = 0 breaks periodicity.
        let table = (0..q)
            .map(|r| kronecker(d, (r + q) as i64).into())
            .collect();
        super::reduce_periodic_cm(q, table)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn table(&self) -> &[UnitValue] {
        &self.table
    }

    pub fn eval(&self, n: i64) -> UnitValue {
        self.table[n.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn is_principal(&self) -> bool {
        self.table
            .iter()
            .all(|v| v.is_zero() || *v == UnitValue::ONE)
    }

    pub fn to_function(&self) -> ArithmeticFunction {
        let chi = self.clone();
        ArithmeticFunction::new(format!("char:mod{}", self.modulus), move |n| chi.eval(n))
    }

    /// Agreement as functions on `Z`, checked over one common period.
    pub fn same_function(&self, other: &DirichletCharacter) -> bool {
        let l = self.modulus.lcm(&other.modulus) as i64;
        (0..l).all(|n| self.eval(n) == other.eval(n))
    }
}

/// First `(a, b)` with `t[ab mod q] != t[a] t[b]`, scanning `a <= b`.
pub(crate) fn multiplicativity_violation(table: &[UnitValue]) -> Option<(u64, u64)> {
    let q = table.len();
    for a in 0..q {
        for b in a..q {
            if table[a * b % q] != table[a] * table[b] {
                return Some((a as u64, b as u64));
            }
        }
    }
    None
}
