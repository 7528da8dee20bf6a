//! Arithmetic functions with exact root-of-unity values, Dirichlet
//! characters, and the prime-power structure of nonvanishing mock characters.

mod character;
mod function;
mod structured;
mod unit;

pub use character::DirichletCharacter;
pub use function::{paperfolding, paperfolding_symbol, pointwise_product, ArithmeticFunction};
pub use structured::{build_structured, build_structured_signed, decompose_structured};
pub use unit::{Angle, ParseUnitError, UnitValue};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("malformed character table: {0}")]
    Malformed(String),
    #[error("table is not multiplicative: chi({a}*{b}) != chi({a}) chi({b})")]
    NotMultiplicative { a: u64, b: u64 },
    #[error("zero set disagrees with the modulus at n = {n}")]
    WrongZeroSet { n: u64 },
    #[error("periodic table is not completely multiplicative at ({a}, {b})")]
    NotCompletelyMultiplicative { a: u64, b: u64 },
    #[error("table vanishes identically away from n = 0")]
    AllZero,
    #[error("{0} is not a Dirichlet character")]
    NotACharacter(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {modulus} is not a power of {p}")]
    ModulusNotPrimePower { modulus: u64, p: u64 },
    #[error("xi must be a root of unity")]
    ZeroXi,
    #[error("f({p}) = 0, so f is not of prime-power structure at {p}")]
    VanishesAtPrime { p: u64 },
    #[error("no character modulo {p}^r, r <= {r_max}, matches the function")]
    NoCharacterFound { p: u64, r_max: u32 },
}

/// Recovers a Dirichlet character from one period of a purely periodic,
/// completely multiplicative function.
///
/// Repeatedly takes the largest divisor `d` of the current period with
/// `chi(d) != 0`; `chi(d) chi(kq/d + r) = chi(d) chi(r)` then shows `q/d` is a
/// period. Once `d = 1` the table is a character modulo `q`, and the result
/// is finally shrunk to the least period dividing `q`.
pub fn reduce_periodic_cm(
    q: u64,
    table: Vec<UnitValue>,
) -> Result<DirichletCharacter, CharacterError> {
    if q == 0 || table.len() as u64 != q {
        return Err(CharacterError::Malformed(format!(
            "period {q} with {} table entries",
            table.len()
        )));
    }
    if let Some((a, b)) = character::multiplicativity_violation(&table) {
        return Err(CharacterError::NotCompletelyMultiplicative { a, b });
    }
    if table[(1 % q) as usize].is_zero() {
        return Err(CharacterError::AllZero);
    }

    let mut q = q;
    let mut table = table;
    loop {
        let d = divisors(q)
            .into_iter()
            .rev()
            .find(|&d| !table[(d % q) as usize].is_zero())
            .expect("chi(1) != 0");
        if d == 1 {
            break;
        }
        q /= d;
        table.truncate(q as usize);
    }

    let period = divisors(q)
        .into_iter()
        .find(|&t| (0..q).all(|n| table[n as usize] == table[(n % t) as usize]))
        .unwrap_or(q);
    table.truncate(period as usize);
    DirichletCharacter::from_table(period, table)
}

/// Divisors of `n >= 1` in increasing order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
