//! Nonvanishing mock characters as `f(n) = xi^{v_p(n)} chi(n / p^{v_p(n)})`
//! with `chi` a character modulo a power of the prime `p`.

use super::{ArithmeticFunction, CharacterError, DirichletCharacter, UnitValue};
use crate::primes::is_prime;

fn prime_power_exponent(modulus: u64, p: u64) -> Option<u32> {
    let mut m = modulus;
    let mut r = 0;
    while m.is_multiple_of(p) {
        m /= p;
        r += 1;
    }
    (m == 1).then_some(r)
}

/// Builds `f` on `Z+` with `f(0) = 0` and `f(-n) = chi(-1) f(n)`.
pub fn build_structured(
    xi: UnitValue,
    p: u64,
    chi: &DirichletCharacter,
) -> Result<ArithmeticFunction, CharacterError> {
    build_structured_signed(xi, p, chi, chi.eval(-1))
}

/// As [`build_structured`], with the caller choosing `f(-1)`.
pub fn build_structured_signed(
    xi: UnitValue,
    p: u64,
    chi: &DirichletCharacter,
    at_minus_one: UnitValue,
) -> Result<ArithmeticFunction, CharacterError> {
    if !is_prime(p) {
        return Err(CharacterError::NotPrime(p));
    }
    if xi.is_zero() {
        return Err(CharacterError::ZeroXi);
    }
    if prime_power_exponent(chi.modulus(), p).is_none() {
        return Err(CharacterError::ModulusNotPrimePower {
            modulus: chi.modulus(),
            p,
        });
    }
    let chi = chi.clone();
    let label = format!("structured:p={p},xi={xi},mod{}", chi.modulus());
    Ok(ArithmeticFunction::new(label, move |n| {
        if n == 0 {
            return UnitValue::Zero;
        }
        let mut m = n.unsigned_abs();
        let mut v = 0u64;
        while m % p == 0 {
            m /= p;
            v += 1;
        }
        let positive = xi.pow(v) * chi.eval(m as i64);
        if n < 0 {
            at_minus_one * positive
        } else {
            positive
        }
    }))
}

/// Recovers `(xi, chi)` from a nonvanishing completely multiplicative `f`.
///
/// Tries `r = 1..=r_max` in turn, reading `chi` modulo `p^r` off `f` on the
/// residues coprime to `p` and accepting the first `r` for which `f` agrees
/// with `chi` on every `n <= 4 p^{r_max}` coprime to `p`.
pub fn decompose_structured(
    f: &ArithmeticFunction,
    p: u64,
    r_max: u32,
) -> Result<(UnitValue, DirichletCharacter), CharacterError> {
    if !is_prime(p) {
        return Err(CharacterError::NotPrime(p));
    }
    let xi = f.eval(p as i64);
    if xi.is_zero() {
        return Err(CharacterError::VanishesAtPrime { p });
    }
    let window = 4 * p.pow(r_max);
    for r in 1..=r_max {
        let modulus = p.pow(r);
        let table: Vec<UnitValue> = (0..modulus)
            .map(|t| {
                if t % p == 0 {
                    UnitValue::Zero
                } else {
                    f.eval(t as i64)
                }
            })
            .collect();
        let Ok(chi) = DirichletCharacter::from_table(modulus, table) else {
            continue;
        };
        let consistent = (1..=window)
            .filter(|n| n % p != 0)
            .all(|n| f.eval(n as i64) == chi.eval(n as i64));
        if consistent {
            return Ok((xi, chi));
        }
    }
    Err(CharacterError::NoCharacterFound { p, r_max })
}
