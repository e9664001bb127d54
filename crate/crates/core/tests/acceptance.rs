//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the report is always printed.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supernatural::algebra::{self, generates, normalize, shorter_word_exists, syntactic_length};
use supernatural::arith::{is_prime, Effort, Factorization, PrimalityVerdict};
use supernatural::classify::{classify, Classification};
use supernatural::cli::run;
use supernatural::conjecture::{
    exponential_certificate, infinitude_samples, polynomial_certificate, scan_family, smallest_composite_witness,
    CompositeWitness, ConjectureError, Provenance, ScanRow, SearchConfig, SearchOutcome,
};
use supernatural::expr::{evaluate, parse, EvalBudget, EvalError, NaturalExpr};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 Euler witness for 2^2^n+1", euler),
        ("2 six leading primes for 2^2^n+93", f46),
        ("3 scan of c = 1..2601", k_scan),
        ("4 polynomial certificates", polynomial_certificates),
        ("5 exponential certificates", exponential_certificates),
        ("6 classifier vs 20-point oracle", classifier_oracle),
        ("7 elevation laws and normalize", axioms),
        ("8 infinitude samples for 2^2^n+1", infinitude),
        ("9 syntactic length", length),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name} ({secs:.2}s): {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

/// Miller-Rabin with the first twelve primes as bases, written against
/// `BigUint::modpow` only.
fn oracle_probable_prime(x: &BigUint) -> bool {
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let one = BigUint::one();
    if *x < BigUint::from(2u8) {
        return false;
    }
    for b in BASES {
        if *x == BigUint::from(b) {
            return true;
        }
        if (x % b).is_zero() {
            return false;
        }
    }
    let x1 = x - &one;
    let s = x1.trailing_zeros().unwrap();
    let d = &x1 >> s;
    'bases: for b in BASES {
        let mut y = BigUint::from(b).modpow(&d, x);
        if y == one || y == x1 {
            continue;
        }
        for _ in 1..s {
            y = y.modpow(&BigUint::from(2u8), x);
            if y == x1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Product matches, listed primes pass the oracle, and the value is shown composite.
fn check_factorization(value: &BigUint, f: &Factorization) -> Result<(), String> {
    ensure(f.product() == *value, || format!("factorization {f} does not multiply to {value}"))?;
    for (p, _) in &f.primes {
        ensure(oracle_probable_prime(p), || format!("listed factor {p} of {value} is not prime"))?;
    }
    if let Some(c) = &f.unresolved {
        ensure(!oracle_probable_prime(c), || format!("unresolved cofactor {c} is prime"))?;
    }
    ensure(f.proves_composite(), || format!("{f} does not show {value} composite"))
}

fn witness_of(outcome: SearchOutcome) -> Result<CompositeWitness, String> {
    match outcome {
        SearchOutcome::Witness(w) => Ok(w),
        other => Err(format!("no witness: {other:?}")),
    }
}

fn euler() -> Outcome {
    let start = Instant::now();
    let out = run(["supernatural", "witness", "2^2^n+1", "--n-max", "6", "--format", "csv"]).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(5), "witness")?;
    let expected = "function,smallest_composite_n,value,factorization,primes_before\n\
                    2^2^n+1,5,4294967297,641^1*6700417^1,4\n";
    ensure(out == expected, || format!("got {out:?}"))?;
    let table = run(["supernatural", "witness", "2^2^n+1", "--n-max", "6"]).map_err(|e| e.to_string())?;
    ensure(table.contains("4294967297  641 × 6700417"), || format!("table: {table}"))?;
    Ok("n = 5, 4294967297 = 641 × 6700417".into())
}

fn f46() -> Outcome {
    let start = Instant::now();
    let expr = parse("2^2^n+93").unwrap();
    let w = witness_of(smallest_composite_witness(&expr, 8, &SearchConfig::default()).map_err(|e| e.to_string())?)?;
    within(start, Duration::from_secs(120), "witness")?;
    ensure(w.index == 7, || format!("witness at n = {}", w.index))?;
    let two = BigUint::from(2u8);
    for n in 1..=6u32 {
        let v = two.pow(1u32 << n) + 93u32;
        ensure(oracle_probable_prime(&v), || format!("oracle says f({n}) = {v} is composite"))?;
    }
    let expected = two.pow(128) + 93u32;
    ensure(w.value == expected, || format!("f(7) = {}", w.value))?;
    check_factorization(&w.value, &w.factorization)?;
    let smallest = w.factorization.smallest_prime().cloned().unwrap_or_default();
    ensure(smallest > BigUint::one() && smallest < w.value, || "no nontrivial factor".into())?;
    Ok(format!("primes_before = 6, f(7) = {}", w.factorization))
}

fn k_scan() -> Outcome {
    let start = Instant::now();
    let rows = scan_family(1, 2601, 7, &SearchConfig::with_effort(Effort::Quick), 0).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(3600), "scan")?;
    ensure(rows.len() == 1301, || format!("{} rows", rows.len()))?;
    let row = |c: u64| rows.iter().find(|r| r.function == format!("2^2^n+{c}")).cloned();

    let fermat = row(1).ok_or("no c = 1 row")?;
    ensure(
        fermat.smallest_composite_index == Some(5)
            && fermat.primes_before == 4
            && fermat.factorization.as_ref().map(Factorization::to_report_string).as_deref() == Some("641^1*6700417^1"),
        || format!("c = 1 row: {fermat:?}"),
    )?;
    let plus93 = row(93).ok_or("no c = 93 row")?;
    ensure(plus93.primes_before == 6 && plus93.smallest_composite_index == Some(7), || {
        format!("c = 93 row: {plus93:?}")
    })?;

    // every long run is confirmed by the oracle
    let long: Vec<&ScanRow> = rows.iter().filter(|r| r.primes_before >= 4).collect();
    for r in &long {
        let c: u64 = r.function.trim_start_matches("2^2^n+").parse().unwrap();
        for n in 1..=r.primes_before.min(7) {
            let v = BigUint::from(2u8).pow(1u32 << n) + c;
            ensure(oracle_probable_prime(&v), || format!("{}: oracle rejects n = {n}", r.function))?;
        }
        if let (Some(v), Some(f)) = (&r.composite_value, &r.factorization) {
            check_factorization(v, f)?;
        }
    }
    let six: Vec<&str> = rows.iter().filter(|r| r.primes_before >= 6).map(|r| r.function.as_str()).collect();
    let others: Vec<&str> = six.iter().copied().filter(|f| *f != "2^2^n+93").collect();
    ensure(!others.is_empty(), || "no second c with six leading primes".into())?;
    ensure(long.len() >= 10, || format!("only {} rows with primes_before >= 4", long.len()))?;
    Ok(format!(
        "c = 1 and c = 93 rows match; other c with >= 6 leading primes: {}; primes_before >= 4 for {} of 1301 c",
        others.join(", "),
        long.len()
    ))
}

fn polynomial_expr(coeffs: &[u64]) -> NaturalExpr {
    let mut terms = coeffs.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| {
        let power = match i {
            0 => None,
            1 => Some(NaturalExpr::Var),
            _ => Some(NaturalExpr::pow(NaturalExpr::Var, NaturalExpr::constant(i as u64))),
        };
        match (c, power) {
            (c, None) => NaturalExpr::constant(c),
            (1, Some(p)) => p,
            (c, Some(p)) => NaturalExpr::mul(NaturalExpr::constant(c), p),
        }
    });
    let first = terms.next().expect("nonzero polynomial");
    terms.fold(first, NaturalExpr::add)
}

fn horner(coeffs: &[u64], n: u64) -> BigUint {
    coeffs.iter().rev().fold(BigUint::zero(), |acc, &c| acc * n + c)
}

fn polynomial_certificates() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let config = SearchConfig::default();
    for case in 0..200 {
        let degree = rng.gen_range(1..=4usize);
        let mut coeffs: Vec<u64> = (0..=degree).map(|_| rng.gen_range(0..=9)).collect();
        coeffs[degree] = rng.gen_range(1..=9);
        let expr = polynomial_expr(&coeffs);
        let w = polynomial_certificate(&expr, &config).map_err(|e| format!("{expr}: {e}"))?;
        let Provenance::PolynomialCertificate { base_index: n0, prime: p } = &w.provenance else {
            return Err(format!("{expr}: provenance {}", w.provenance));
        };
        let step = p.to_u64().ok_or("prime too large")?;
        let (base, value) = (horner(&coeffs, *n0), horner(&coeffs, n0 + step));
        let fail = |what: &str| format!("case {case}, {expr}: {what}");
        ensure(w.index == n0 + step && w.value == value, || fail("index or value"))?;
        ensure(base.is_multiple_of(p), || fail("p does not divide f(n0)"))?;
        ensure(value.is_multiple_of(p), || fail("p does not divide f(n0+p)"))?;
        ensure(BigUint::one() < base && base < value, || fail("1 < f(n0) < f(n0+p) fails"))?;
        let verdict = is_prime(&value).map_err(|e| e.to_string())?;
        ensure(verdict == PrimalityVerdict::Composite, || fail("value not marked composite"))?;
        check_factorization(&value, &w.factorization)?;
    }
    Ok("200 of 200 sound".into())
}

fn exponential_certificates() -> Outcome {
    let config = SearchConfig::with_effort(Effort::Quick);
    let mut certified = 0;
    let mut direct = 0;
    for a in 2..=20u64 {
        for b in 0..=20u64 {
            let w = exponential_certificate(a, b, &config).map_err(|e| format!("({a}, {b}): {e}"))?;
            let value = BigUint::from(a).pow(u32::try_from(w.index).unwrap()) + b;
            ensure(w.value == value, || format!("({a}, {b}): value at n = {}", w.index))?;
            check_factorization(&value, &w.factorization).map_err(|e| format!("({a}, {b}): {e}"))?;
            match &w.provenance {
                Provenance::ExponentialCertificate { base_index, prime } => {
                    let base = BigUint::from(a).pow(u32::try_from(*base_index).unwrap()) + b;
                    ensure(base.is_multiple_of(prime) && value.is_multiple_of(prime) && base < value, || {
                        format!("({a}, {b}): divisibility")
                    })?;
                    certified += 1;
                }
                Provenance::Searched => direct += 1,
                other => return Err(format!("({a}, {b}): provenance {other}")),
            }
        }
    }
    Ok(format!("399 of 399 sound ({certified} by the little theorem, {direct} composite at n = 2)"))
}

const EXACT_BITS: u64 = 1 << 16;

/// Values below 2^EXACT_BITS are exact; anything larger is kept as
/// log2(log2(x)). Every `Huge` value exceeds every `Exact` one.
#[derive(Clone, Debug)]
enum Magnitude {
    Exact(BigUint),
    Huge(f64),
}

fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    (x >> shift).to_f64().unwrap().log2() + shift as f64
}

impl Magnitude {
    fn from_exact(x: BigUint) -> Self {
        if x.bits() > EXACT_BITS {
            Magnitude::Huge(log2_big(&x).log2())
        } else {
            Magnitude::Exact(x)
        }
    }

    /// log2(log2(x)); only used for x >= 2.
    fn loglog(&self) -> f64 {
        match self {
            Magnitude::Exact(x) => log2_big(x).log2(),
            Magnitude::Huge(ll) => *ll,
        }
    }

    /// log2(x), possibly infinite.
    fn log(&self) -> f64 {
        match self {
            Magnitude::Exact(x) => log2_big(x),
            Magnitude::Huge(ll) => ll.exp2(),
        }
    }

    fn cmp(&self, other: &Magnitude) -> Ordering {
        match (self, other) {
            (Magnitude::Exact(a), Magnitude::Exact(b)) => a.cmp(b),
            (Magnitude::Exact(_), Magnitude::Huge(_)) => Ordering::Less,
            (Magnitude::Huge(_), Magnitude::Exact(_)) => Ordering::Greater,
            (Magnitude::Huge(a), Magnitude::Huge(b)) => a.partial_cmp(b).unwrap(),
        }
    }
}

/// log2(2^a + 2^b) without overflow.
fn log_add(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp2().ln_1p() / std::f64::consts::LN_2
}

fn magnitude(e: &NaturalExpr, n: u64) -> Magnitude {
    use Magnitude::{Exact, Huge};
    match e {
        NaturalExpr::Var => Exact(BigUint::from(n)),
        NaturalExpr::Const(c) => Exact(c.value().clone()),
        NaturalExpr::Add(l, r) => match (magnitude(l, n), magnitude(r, n)) {
            (Exact(a), Exact(b)) => Magnitude::from_exact(a + b),
            (a, b) => {
                // the larger term is at least 2^65536; the sum changes log2 by at most 1
                let (la, lb) = (a.log(), b.log());
                if la.is_finite() && lb.is_finite() {
                    Huge(log_add(la, lb).log2())
                } else {
                    Huge(a.loglog().max(b.loglog()))
                }
            }
        },
        NaturalExpr::Mul(l, r) => match (magnitude(l, n), magnitude(r, n)) {
            (Exact(a), Exact(b)) => Magnitude::from_exact(a * b),
            (a, b) => {
                let one = |m: &Magnitude| matches!(m, Exact(x) if x.is_one());
                if one(&a) {
                    b
                } else if one(&b) {
                    a
                } else {
                    Huge(log_add(a.loglog(), b.loglog()))
                }
            }
        },
        NaturalExpr::Pow(l, r) => {
            let (base, exp) = (magnitude(l, n), magnitude(r, n));
            match (&base, &exp) {
                (Exact(a), _) if a.is_one() => Exact(BigUint::one()),
                (_, Exact(b)) if b.is_one() => base,
                (Exact(a), Exact(b)) if (a.bits() - 1).saturating_mul(b.to_u64().unwrap_or(u64::MAX)) < EXACT_BITS => {
                    Magnitude::from_exact(a.pow(b.to_u32().unwrap()))
                }
                _ => Huge(exp.log() + base.loglog()),
            }
        }
    }
}

#[derive(Debug)]
enum Verdict {
    Constant(Magnitude),
    Increasing,
    Neither,
}

impl PartialEq for Magnitude {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

fn oracle_verdict(e: &NaturalExpr) -> Verdict {
    let values: Vec<Magnitude> = (1..=20).map(|n| magnitude(e, n)).collect();
    let steps: Vec<Ordering> = values.windows(2).map(|w| w[1].cmp(&w[0])).collect();
    if steps.iter().all(|s| *s == Ordering::Equal) {
        Verdict::Constant(values[0].clone())
    } else if steps.iter().all(|s| *s == Ordering::Greater) {
        Verdict::Increasing
    } else {
        Verdict::Neither
    }
}

fn same_value(v: &BigUint, m: &Magnitude) -> bool {
    match (Magnitude::from_exact(v.clone()), m) {
        (Magnitude::Huge(a), Magnitude::Huge(b)) => (a - b).abs() <= 1e-9 * b.abs(),
        (exact, m) => exact == *m,
    }
}

fn classifier_oracle() -> Outcome {
    let corpus: Vec<NaturalExpr> = algebra::enumerate(3, &[1, 2, 3]).collect();
    let mut constants = 0;
    let mut unfoldable = 0;
    let mut estimated = 0;
    for e in &corpus {
        if (1..=20).any(|n| evaluate(e, n, EvalBudget::default()).is_err()) {
            estimated += 1;
        }
        let oracle = oracle_verdict(e);
        match (classify(e), &oracle) {
            (Ok(Classification::StrictlyIncreasing), Verdict::Increasing) => {}
            (Ok(Classification::Constant(v)), Verdict::Constant(m)) if same_value(&v, m) => {
                constants += 1;
            }
            (Err(EvalError::BudgetExceeded { .. }), Verdict::Constant(Magnitude::Huge(_))) => unfoldable += 1,
            (got, _) => return Err(format!("{e}: classify {got:?}, oracle {oracle:?}")),
        }
    }
    Ok(format!(
        "{} of {} agree ({constants} constant, {unfoldable} constant but too large to fold; \
         {estimated} compared partly by log-magnitude)",
        corpus.len(),
        corpus.len()
    ))
}

fn laws(a: &NaturalExpr, b: &NaturalExpr, c: &NaturalExpr) -> [(&'static str, NaturalExpr, NaturalExpr); 7] {
    use NaturalExpr as E;
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    [
        ("i", E::add(a.clone(), b.clone()), E::add(b.clone(), a.clone())),
        ("ii", E::add(E::add(a.clone(), b.clone()), c.clone()), E::add(a.clone(), E::add(b.clone(), c.clone()))),
        ("iii", E::mul(a.clone(), b.clone()), E::mul(b.clone(), a.clone())),
        ("iv", E::mul(E::mul(a.clone(), b.clone()), c.clone()), E::mul(a.clone(), E::mul(b.clone(), c.clone()))),
        (
            "v",
            E::mul(a.clone(), E::add(b.clone(), c.clone())),
            E::add(E::mul(a.clone(), b.clone()), E::mul(a.clone(), c.clone())),
        ),
        (
            "vi",
            E::mul(E::pow(a.clone(), b.clone()), E::pow(a.clone(), c.clone())),
            E::pow(a.clone(), E::add(b.clone(), c.clone())),
        ),
        ("vii", E::pow(E::pow(a.clone(), b.clone()), c.clone()), E::pow(a, E::mul(b, c))),
    ]
}

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> NaturalExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.4) { NaturalExpr::Var } else { NaturalExpr::constant(rng.gen_range(1..=5)) };
    }
    let (l, r) = (random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    match rng.gen_range(0..3) {
        0 => NaturalExpr::add(l, r),
        1 => NaturalExpr::mul(l, r),
        _ => NaturalExpr::pow(l, r),
    }
}

fn axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let budget = EvalBudget::default();
    for _ in 0..10_000 {
        let [a, b, c] = [0; 3].map(|_| rng.gen_range(1..=60u64));
        let [ea, eb, ec] = [a, b, c].map(NaturalExpr::constant);
        for (law, lhs, rhs) in laws(&ea, &eb, &ec) {
            let (l, r) = (evaluate(&lhs, 1, budget), evaluate(&rhs, 1, budget));
            ensure(l.is_ok() && l == r, || format!("law {law} fails for ({a}, {b}, {c})"))?;
        }
    }
    let mut evaluated = 0;
    let mut skipped = 0;
    for _ in 0..1000 {
        let e = random_expr(&mut rng, 3);
        let nf = normalize(&e);
        for n in 1..=8 {
            match evaluate(&e, n, budget) {
                Ok(v) => {
                    ensure(evaluate(&nf, n, budget).as_ref() == Ok(&v), || format!("{e} -> {nf} differs at n = {n}"))?;
                    evaluated += 1;
                }
                Err(_) => skipped += 1,
            }
        }
    }
    Ok(format!(
        "70000 law instances hold; normalize preserves all {evaluated} evaluable points ({skipped} over budget)"
    ))
}

fn infinitude() -> Outcome {
    let expr = parse("2^2^n+1").unwrap();
    let ws = infinitude_samples(&expr, 2, 64, &SearchConfig::default()).map_err(|e: ConjectureError| e.to_string())?;
    let idx: Vec<u64> = ws.iter().map(|w| w.index).collect();
    ensure(idx == [5, 6], || format!("indices {idx:?}"))?;
    let f64_plus_1 = (BigUint::one() << 64u32) + 1u32;
    let f = &ws[1].factorization;
    ensure(ws[1].value == f64_plus_1, || "value at n = 6".into())?;
    ensure(f.is_complete() && f.product() == f64_plus_1, || format!("{f} does not reconstruct 2^64+1"))?;
    for (p, _) in &f.primes {
        ensure(is_prime(p).map_err(|e| e.to_string())?.is_probably_prime(), || format!("{p} not prime"))?;
    }
    Ok(format!("n = 5 and n = 6; 2^64+1 = {f}"))
}

fn length() -> Outcome {
    for sym in ["n", "1", "2", "93"] {
        let r = syntactic_length(&parse(sym).unwrap()).map_err(|e| e.to_string())?;
        ensure(r.length == 0 && r.word.is_empty(), || format!("{sym}: length {}", r.length))?;
    }
    let fermat = parse("2^2^n+1").unwrap();
    let r = syntactic_length(&fermat).map_err(|e| e.to_string())?;
    ensure(r.length == 3, || format!("length {}", r.length))?;
    ensure(generates(&r.word, &fermat), || "witness word does not replay".into())?;
    ensure(!shorter_word_exists(&fermat, 3), || "a shorter word exists".into())?;
    Ok(format!("symbols 0; 2^2^n+1 is 3 via {}", r.word_string()))
}
