//! End-to-end acceptance checks, one line of output per criterion.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use mockchar::analysis::{
    general_product_residual, l_identity_residual, paperfolding_product_partial,
    pretentious_distance_sq, random_completely_multiplicative, triangle_defect,
    GAMMA_QUARTER_PRODUCT,
};
use mockchar::arithfun::{
    build_structured, decompose_structured, ArithmeticFunction, DirichletCharacter, UnitValue,
};
use mockchar::automata::{compute_kernel, detect_eventual_period, kernel_to_dfao, KernelParams};
use mockchar::classify::{classify, period_pattern, ClassifyParams, MockClassification};
use mockchar::ffseries::{
    build_g, build_r, coefficient_period_witness, verify_functional_equation, EquationCheck,
    SymbolEmbedding,
};
use mockchar::kronecker::{kronecker, legendre_oracle, odd_part, SymbolValue};
use mockchar::primes::primes_up_to;
use mockchar_cli::BFile;
use num_complex::Complex64;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn read_bfile(name: &str) -> BFile {
    BFile::parse(&std::fs::read_to_string(fixture(name)).expect("fixture present"))
        .expect("valid b-file")
}

fn kronecker_correctness() -> Check {
    let mut pairs = 0;
    for p in primes_up_to(199).into_iter().skip(1) {
        for a in -200..=200 {
            let oracle = legendre_oracle(a, p as i64).map_err(|e| e.to_string())?;
            ensure(kronecker(a, p as i64) == oracle, || {
                format!("({a}|{p}) disagrees with the oracle")
            })?;
            pairs += 1;
        }
    }
    let mut checked = 0;
    for m in (-150i64..=150).filter(|&m| m != 0) {
        for n in (-150i64..=150).filter(|&n| n != 0) {
            let sigma = if m < 0 && n < 0 { -1 } else { 1 };
            let e = (odd_part(m) - 1).div_euclid(2) * (odd_part(n) - 1).div_euclid(2);
            let sign = SymbolValue::from_sign(sigma * if e % 2 == 0 { 1 } else { -1 });
            ensure(kronecker(m, n) == sign * kronecker(n, m), || {
                format!("reciprocity fails at ({m}, {n})")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{pairs} Legendre pairs, {checked} reciprocity pairs"
    ))
}

/// v(0) = 0, v(2n) = v(n), v(2n+1) = (-1)^n, v(-n) = -v(n).
fn paperfolding_recursion(n: i64) -> i8 {
    if n == 0 {
        return 0;
    }
    if n < 0 {
        return -paperfolding_recursion(-n);
    }
    if n % 2 == 0 {
        paperfolding_recursion(n / 2)
    } else if (n / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn paperfolding_identity() -> Check {
    for n in -100_000..=100_000 {
        ensure(
            kronecker(-1, n).to_i8() == paperfolding_recursion(n),
            || format!("differs at n = {n}"),
        )?;
    }
    let b = read_bfile("b034947.txt");
    for &(n, v) in b.entries() {
        ensure(kronecker(-1, n).to_i8() as i64 == v, || {
            format!("A034947 differs at n = {n}")
        })?;
    }
    Ok(format!("|n| <= 100000 and {} b-file terms", b.len()))
}

fn periodicity_dichotomy() -> Check {
    let params = ClassifyParams::default();
    let (mut chars, mut mocks) = (0, 0);
    for a in (-50i64..=50).filter(|&a| a != 0) {
        let verdict = classify(&ArithmeticFunction::kronecker(a), 2, params);
        if a.rem_euclid(4) == 3 {
            ensure(verdict.is_mock(), || {
                format!("a = {a}: expected a mock character, got {verdict:?}")
            })?;
            let seq: Vec<SymbolValue> = (0..10_000).map(|n| kronecker(a, n)).collect();
            let found = detect_eventual_period(&seq, 500, 2000).map_err(|e| e.to_string())?;
            ensure(!found.is_periodic(), || {
                format!("a = {a}: period detected: {found:?}")
            })?;
            mocks += 1;
        } else {
            let MockClassification::DirichletCharacter { period, .. } = verdict else {
                return Err(format!(
                    "a = {a}: expected a Dirichlet character, got {verdict:?}"
                ));
            };
            ensure(
                (4 * a.unsigned_abs() as usize).is_multiple_of(period),
                || format!("a = {a}: period {period}"),
            )?;
            chars += 1;
        }
    }
    Ok(format!("{chars} characters, {mocks} mock characters"))
}

fn period_patterns() -> Check {
    let rows = [
        (-1, "+-"),
        (-5, "++0++--0--"),
        (-9, "+0+-0-"),
        (3, "+0--0+"),
        (7, "++-0+----+0-++"),
    ];
    for (a, expected) in rows {
        let got: String = period_pattern(a)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|s| s.as_char())
            .collect();
        ensure(got == expected, || format!("a = {a}: {got} != {expected}"))?;
    }
    for a in (-30i64..=30).filter(|a| a.rem_euclid(4) == 3) {
        let m = a.abs();
        for n in 0..=1000 {
            ensure(
                kronecker(a, 2 * (n + m) + 1) == -kronecker(a, 2 * n + 1),
                || format!("antiperiod fails at a = {a}, n = {n}"),
            )?;
        }
    }
    Ok("5 rows, antiperiodicity for |a| <= 30".into())
}

fn pretentious_distance() -> Check {
    let k = ArithmeticFunction::kronecker(-1);
    let chi = DirichletCharacter::chi_minus_4().to_function();
    let half = num_rational::BigRational::new(1.into(), 2.into());
    for y in [2.0, 10.0, 1e3, 1e5] {
        let d = pretentious_distance_sq(&k, &chi, y).map_err(|e| e.to_string())?;
        ensure(d.exact() == Some(&half), || {
            format!("y = {y}: {:?}", d.exact())
        })?;
    }
    let mut min_defect = f64::INFINITY;
    for i in 0..100u64 {
        let f: Vec<ArithmeticFunction> = (0..4)
            .map(|j| random_completely_multiplicative(4 * i + j, 10_000))
            .collect();
        let defect = triangle_defect(&f[0], &f[1], &f[2], &f[3], 1e4).map_err(|e| e.to_string())?;
        ensure(defect >= 0.0, || format!("seed block {i}: defect {defect}"))?;
        min_defect = min_defect.min(defect);
    }
    Ok(format!(
        "D^2 = 1/2 exactly; min defect over 100 draws {min_defect:.4}"
    ))
}

fn l_identity() -> Check {
    let mut worst: f64 = 0.0;
    for a in [3i64, 7, 11, 15, 19] {
        let r = l_identity_residual(a, Complex64::new(2.0, 0.0), 1_000_000)
            .map_err(|e| e.to_string())?;
        ensure(r.residual < r.bound, || {
            format!("a = {a}: residual {} >= bound {}", r.residual, r.bound)
        })?;
        worst = worst.max(r.residual);
    }
    Ok(format!("max residual {worst:.3e} below bound ~2e-6"))
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    while (a - b).abs() > 1e-16 * a {
        (a, b) = ((a + b) / 2.0, (a * b).sqrt());
    }
    a
}

fn gamma_product() -> Check {
    // Gamma(1/4)^2 = (2 pi)^{3/2} / agm(1, sqrt 2), so the target is pi / (4 agm(1, sqrt 2)).
    let target = std::f64::consts::PI / (4.0 * agm(1.0, 2f64.sqrt()));
    ensure((target - GAMMA_QUARTER_PRODUCT).abs() < 1e-14, || {
        format!("constant {GAMMA_QUARTER_PRODUCT} vs {target}")
    })?;
    let p = paperfolding_product_partial(1_000_000);
    let rel = (p / target - 1.0).abs();
    // Observed at N = 10^6: relative error 1.24e-6.
    ensure(rel < 1e-2, || format!("relative error {rel}"))?;
    for a in [3i64, 7] {
        let r: Vec<f64> = [1_000u64, 10_000, 100_000]
            .iter()
            .map(|&n| general_product_residual(a, n))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure(r[0] > r[1] && r[1] > r[2], || {
            format!("a = {a}: residuals {r:?}")
        })?;
    }
    Ok(format!("partial {p:.9}, relative error {rel:.2e}"))
}

fn f4_equation() -> Check {
    let n = 4096;
    let embeddings = SymbolEmbedding::all_injective();
    for a in [3i64, 7, 11, 15, 19] {
        for &e in &embeddings {
            let check = verify_functional_equation(a, e, n).map_err(|e| e.to_string())?;
            ensure(check == EquationCheck::Holds, || {
                format!("a = {a}, {e:?}: {check:?}")
            })?;
            let r = coefficient_period_witness(&build_r(a, e, n).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let g = coefficient_period_witness(&build_g(a, e, n).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(r.is_periodic(), || format!("a = {a}: R not periodic"))?;
            ensure(!g.is_periodic(), || format!("a = {a}: G periodic: {g:?}"))?;
        }
    }
    Ok(format!(
        "5 values of a x {} injective embeddings",
        embeddings.len()
    ))
}

fn dot_from_binary(source: &str) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_mockchar"))
        .args(["fsm", source])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        String::from_utf8_lossy(&out.stderr).into_owned()
    })?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn automata_soundness() -> Check {
    let mut sources = vec![ArithmeticFunction::paperfolding()];
    sources.extend(
        (-20i64..=20)
            .filter(|&a| a != 0 && a.rem_euclid(4) != 3)
            .map(ArithmeticFunction::kronecker),
    );
    for f in &sources {
        let kernel = compute_kernel(f, 2, KernelParams::default())
            .map_err(|e| format!("{}: {e}", f.label()))?;
        let dfao = kernel_to_dfao(&kernel).map_err(|e| e.to_string())?;
        ensure(dfao.first_mismatch(f, 0..=10_000).is_none(), || {
            format!("{} fails replay", f.label())
        })?;
        let again = kernel_to_dfao(
            &compute_kernel(f, 2, KernelParams::default()).map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        ensure(dfao.to_dot() == again.to_dot(), || {
            format!("{}: DOT differs between runs", f.label())
        })?;
    }
    let snapshot = std::fs::read_to_string(fixture("paperfold.dot")).map_err(|e| e.to_string())?;
    for _ in 0..2 {
        ensure(dot_from_binary("paperfold")? == snapshot, || {
            "paperfolding DOT differs from snapshot".into()
        })?;
    }
    Ok(format!("{} sources replayed on [0, 10^4]", sources.len()))
}

/// The smallest primitive root modulo `p^2`, which generates the units
/// modulo every power of the odd prime `p`.
fn primitive_root(p: u64) -> u64 {
    let q = p * p;
    let phi = p * (p - 1);
    (2..q)
        .find(|&g| {
            g % p != 0 && {
                let mut x = 1;
                (1..=phi).position(|_| {
                    x = x * g % q;
                    x == 1
                }) == Some(phi as usize - 1)
            }
        })
        .expect("odd prime powers have primitive roots")
}

/// All characters modulo `p^r`.
fn characters(p: u64, r: u32) -> Vec<DirichletCharacter> {
    let q = p.pow(r);
    if p == 2 {
        let mut out = vec![DirichletCharacter::principal(q)];
        if r >= 2 {
            out.push(DirichletCharacter::chi_minus_4());
        }
        if r >= 3 {
            out.push(DirichletCharacter::kronecker(8).expect("character"));
            out.push(DirichletCharacter::kronecker(-8).expect("character"));
        }
        return out;
    }
    let g = primitive_root(p);
    let phi = q / p * (p - 1);
    let mut log = vec![0u64; q as usize];
    let mut x = 1;
    for k in 0..phi {
        log[x as usize] = k;
        x = x * g % q;
    }
    (0..phi)
        .map(|j| {
            DirichletCharacter::from_fn(q, |n| {
                if n % p == 0 {
                    UnitValue::Zero
                } else {
                    UnitValue::root((j * log[n as usize]) as i64, phi)
                }
            })
            .expect("valid character")
        })
        .collect()
}

fn structure_round_trip() -> Check {
    let mut count = 0;
    for p in [2u64, 3, 5] {
        for r in 1..=3 {
            for chi in characters(p, r) {
                for xi in [UnitValue::ONE, UnitValue::MINUS_ONE, UnitValue::I] {
                    let f = build_structured(xi, p, &chi).map_err(|e| e.to_string())?;
                    let (xi2, chi2) =
                        decompose_structured(&f, p, 3).map_err(|e| format!("p = {p}: {e}"))?;
                    ensure(xi2 == xi, || format!("p = {p}: xi {xi2} != {xi}"))?;
                    let window = 4 * p.pow(3) as i64;
                    ensure(
                        (1..=window)
                            .filter(|n| n % p as i64 != 0)
                            .all(|n| chi2.eval(n) == chi.eval(n)),
                        || {
                            format!(
                                "p = {p}, modulus {}: character not recovered",
                                chi.modulus()
                            )
                        },
                    )?;
                    count += 1;
                }
            }
        }
    }
    let (xi, chi) = decompose_structured(&ArithmeticFunction::paperfolding(), 2, 3)
        .map_err(|e| e.to_string())?;
    ensure(
        xi == UnitValue::ONE && chi == DirichletCharacter::chi_minus_4(),
        || format!("paperfolding gave ({xi}, {chi:?})"),
    )?;
    Ok(format!(
        "{count} round trips; paperfolding = (1, 2, chi_-4)"
    ))
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "Kronecker symbol against the Legendre oracle and reciprocity",
            kronecker_correctness,
        ),
        (
            "(-1|n) equals the paperfolding sequence and A034947",
            paperfolding_identity,
        ),
        (
            "characters exactly for a not 3 mod 4, |a| <= 50",
            periodicity_dichotomy,
        ),
        ("period patterns and antiperiodicity", period_patterns),
        (
            "pretentious distance and triangle defect",
            pretentious_distance,
        ),
        ("L_a(s) factorization residuals", l_identity),
        ("Gamma product and generalized product", gamma_product),
        ("F4 functional equation and period witnesses", f4_equation),
        ("automaton replay and DOT stability", automata_soundness),
        ("structure theorem round trip", structure_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
