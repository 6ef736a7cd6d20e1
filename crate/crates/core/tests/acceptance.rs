//! Acceptance suite: one PASS/FAIL line per criterion, each under its time
//! budget. Runs as a plain binary so the lines always show up.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use macias_core::functions::is_trichotomous;
use macias_core::macias::{closure_product_check, is_dense, is_open, sigma};
use macias_core::numtheory::{primes_from, primes_in_progression};
use macias_core::oracle::{
    closure_suite, corpus, density_suite, openness_suite, residue_corpus, Level,
};
use macias_core::{ContinuityReason, ContinuityVerdict, ExpFunction, Polynomial, ResidueSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(s: &str) -> ResidueSet {
    s.parse().expect("literal residue set")
}

fn poly(s: &str) -> Polynomial {
    s.parse().expect("literal polynomial")
}

fn example_one() -> Outcome {
    let f = poly("x^2+x");
    let pre = f.preimage_sigma(7).map_err(|e| e.to_string())?;
    ensure(pre == set("7:{1,2,3,4,5}"), || format!("preimage {pre}"))?;
    let piece = set("7:{6}");
    ensure(is_dense(&piece).dense, || "7:{6} not reported dense".into())?;
    ensure(pre.intersect(&piece).unwrap().is_empty(), || {
        "piece meets preimage".into()
    })?;
    let open = is_open(&pre);
    ensure(!open.open, || "preimage reported open".into())?;
    Ok(format!(
        "preimage {pre}, 7:{{6}} dense, not open at class {}",
        open.failing_class.unwrap()
    ))
}

fn example_two() -> Outcome {
    let f = poly("x^2+4x+2");
    let pre = f.preimage_sigma(7).map_err(|e| e.to_string())?;
    ensure(pre == set("7:{0,3,4,5,6}"), || format!("preimage {pre}"))?;
    ensure(!is_open(&pre).open, || "preimage reported open".into())?;
    for p in [2, 3, 5] {
        let q = f.preimage_sigma(p).unwrap();
        ensure(is_trichotomous(&q, p).unwrap(), || {
            format!("p={p} gives {q}")
        })?;
    }
    let verdict = f.continuity(10_000).map_err(|e| e.to_string())?;
    ensure(verdict.witness_prime() == Some(7), || format!("{verdict}"))?;
    Ok(format!("preimage {pre}, witness 7"))
}

fn classification() -> Outcome {
    let polys = corpus::polynomials(4, 5);
    let primes: Vec<u64> = primes_from(2).take_while(|&p| p <= 100).collect();
    let mut monomials = 0;
    let mut max_witness = 0;
    for f in &polys {
        let verdict = f.continuity(1000).map_err(|e| e.to_string())?;
        let monomial = f.as_monomial().is_some();
        match &verdict {
            ContinuityVerdict::Continuous { .. } => {
                ensure(monomial, || format!("{f} continuous but not a monomial"))?;
                monomials += 1;
                // the preimages really are open
                for &p in &primes {
                    let pre = f.preimage_sigma(p).unwrap();
                    ensure(is_open(&pre).open, || format!("{f}: {pre} at {p}"))?;
                }
            }
            ContinuityVerdict::Discontinuous { witness_prime, .. } => {
                ensure(!monomial, || format!("monomial {f} discontinuous"))?;
                max_witness = max_witness.max(*witness_prime);
            }
            ContinuityVerdict::Inconclusive { .. } => {
                return Err(format!("{f}: no witness prime ≤ 1000"));
            }
        }
    }
    Ok(format!(
        "{} polynomials, {monomials} monomials continuous, largest least witness {max_witness}",
        polys.len()
    ))
}

fn sigma_identity() -> Outcome {
    let sigmas: Vec<ResidueSet> = (0..=100).map(|n| sigma(n.max(1)).unwrap()).collect();
    for n in 1..=100u64 {
        for m in 1..=100u64 {
            let lhs = sigma(n * m).unwrap();
            let rhs = sigmas[n as usize].intersect(&sigmas[m as usize]).unwrap();
            ensure(lhs == rhs, || format!("σ_{} ≠ σ_{n} ∩ σ_{m}", n * m))?;
        }
    }
    Ok("10000 pairs".into())
}

fn closure_laws() -> Outcome {
    let report = closure_suite(100, 1000);
    ensure(report.passed(), || format!("{:?}", report.disagreements))?;
    for n in 1..=30 {
        for m in 1..=30 {
            ensure(closure_product_check(n, m) == Ok(true), || {
                format!("({n}, {m})")
            })?;
        }
    }
    Ok(format!(
        "{} closures match, 900 products hold",
        report.checked
    ))
}

fn oracle_equivalence() -> Outcome {
    let sets = residue_corpus(Level::Full);
    let open = openness_suite(&sets);
    let dense = density_suite(&sets);
    ensure(open.passed(), || {
        format!("openness: {:?}", open.disagreements)
    })?;
    ensure(dense.passed(), || {
        format!("density: {:?}", dense.disagreements)
    })?;
    Ok(format!(
        "{} sets, 100% agreement on openness and density",
        sets.len()
    ))
}

fn exponentials() -> Outcome {
    let g = |s: &str| {
        s.parse::<ExpFunction>()
            .unwrap()
            .continuity(10_000)
            .unwrap()
    };
    let pure = g("2^x");
    ensure(
        pure == ContinuityVerdict::Continuous {
            reason: ContinuityReason::PureExponential { base: 2 },
        },
        || format!("2^x: {pure}"),
    )?;
    for (expr, pre) in [("2^x+3", "4:{0,2,3}"), ("3^x+1", "4:{0,1,3}")] {
        let v = g(expr);
        match &v {
            ContinuityVerdict::Discontinuous {
                witness_prime: 5,
                preimage,
                ..
            } if *preimage == set(pre) => {}
            _ => return Err(format!("{expr}: {v}")),
        }
    }
    Ok("2^x continuous; 2^x+3 and 3^x+1 fail at 5".into())
}

fn golomb_strictness() -> Outcome {
    let f = poly("x^2+x");
    ensure(f.is_golomb_continuous(), || "not Golomb-continuous".into())?;
    let v = f.continuity(10_000).unwrap();
    ensure(!v.is_continuous(), || format!("{v}"))?;
    Ok(format!("x^2+x: Golomb-continuous, {v}"))
}

fn schur() -> Outcome {
    let f = poly("x^2+4x+2");
    let counts: Vec<usize> = [10, 100, 1000]
        .iter()
        .map(|&n| f.prime_divisor_census(n).map(|ps| ps.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(counts[0] >= 8, || format!("{counts:?}"))?;
    ensure(counts[0] < counts[1] && counts[1] < counts[2], || {
        format!("{counts:?}")
    })?;
    Ok(format!(
        "distinct prime divisors at N = 10, 100, 1000: {counts:?}"
    ))
}

fn dirichlet() -> Outcome {
    let small = primes_in_progression(7, 6, 100).unwrap();
    ensure(small.len() >= 4 && small[0] == 13, || format!("{small:?}"))?;
    let large = primes_in_progression(7, 6, 10_000).unwrap();
    ensure(large.len() >= 10, || format!("{} primes", large.len()))?;
    Ok(format!("{small:?} below 100, {} below 10^4", large.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: 1,
            name: "x^2+x preimage at 7",
            budget: secs(1),
            run: example_one,
        },
        Criterion {
            id: 2,
            name: "x^2+4x+2 least witness",
            budget: secs(1),
            run: example_two,
        },
        Criterion {
            id: 3,
            name: "classification at desk scale",
            budget: secs(60),
            run: classification,
        },
        Criterion {
            id: 4,
            name: "σ-algebra identity",
            budget: secs(5),
            run: sigma_identity,
        },
        Criterion {
            id: 5,
            name: "closure laws",
            budget: secs(30),
            run: closure_laws,
        },
        Criterion {
            id: 6,
            name: "oracle equivalence",
            budget: secs(120),
            run: oracle_equivalence,
        },
        Criterion {
            id: 7,
            name: "exponential verdicts",
            budget: secs(1),
            run: exponentials,
        },
        Criterion {
            id: 8,
            name: "cross-topology strictness",
            budget: secs(1),
            run: golomb_strictness,
        },
        Criterion {
            id: 9,
            name: "Schur evidence",
            budget: secs(10),
            run: schur,
        },
        Criterion {
            id: 10,
            name: "Dirichlet sampler",
            budget: secs(1),
            run: dirichlet,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!(
                "{detail}; took {:.3}s over budget",
                elapsed.as_secs_f64()
            )),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!(
            "[{tag}] criterion {:>2}: {} ({:.3}s / {}s) {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
