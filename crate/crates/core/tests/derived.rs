//! Expected values computed here by naive scans that share no code with the
//! library, then compared against the library.

use macias_core::functions::is_trichotomous;
use macias_core::macias::{closure_finite, closure_singleton, is_open, sigma};
use macias_core::numtheory::primes_in_progression;
use macias_core::oracle::brute_is_open;
use macias_core::{ContinuityVerdict, ExpFunction, Polynomial, ResidueSet};

fn naive_is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn naive_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        naive_gcd(b, a % b)
    }
}

/// Members of `[1, hi]` selected by a predicate.
fn scan(hi: u64, keep: impl Fn(u64) -> bool) -> Vec<u64> {
    (1..=hi).filter(|&x| keep(x)).collect()
}

#[test]
fn progression_seven_six() {
    let expected: Vec<u64> = (0..=100)
        .map(|k| 7 * k + 6)
        .take_while(|&x| x <= 100)
        .filter(|&x| naive_is_prime(x))
        .collect();
    assert_eq!(expected, [13, 41, 83, 97]);
    assert_eq!(primes_in_progression(7, 6, 100).unwrap(), expected);
}

#[test]
fn sigma_twelve_is_sigma_six() {
    let expected = scan(120, |x| naive_gcd(12, x) == 1);
    let s = sigma(12).unwrap();
    assert_eq!(s.enumerate(1, 120), expected);
    assert_eq!(s.to_string(), "6:{1,5}");
}

#[test]
fn evens_are_not_open() {
    // 1 is odd and lies in every σ_k, so no σ_k fits inside the evens
    let evens: ResidueSet = "2:{0}".parse().unwrap();
    for k in 1..=200u64 {
        assert!(scan(k, |y| naive_gcd(k, y) == 1).iter().any(|y| y % 2 == 1));
    }
    assert!(!is_open(&evens).open);
    assert!(!brute_is_open(&evens, 40, 200, 100).unwrap().open);
}

#[test]
fn closures_by_definition() {
    // x ∈ cl{n} iff every k ≤ 200 coprime to x is coprime to n
    let cl = |n: u64, hi: u64| {
        scan(hi, |x| {
            (1..=200)
                .filter(|&k| naive_gcd(k, x) == 1)
                .all(|k| naive_gcd(k, n) == 1)
        })
    };
    assert_eq!(
        closure_singleton(12).unwrap().enumerate(1, 1000),
        cl(12, 1000)
    );
    assert_eq!(
        closure_singleton(7).unwrap().enumerate(1, 1000),
        cl(7, 1000)
    );
    assert_eq!(closure_singleton(12).unwrap().to_string(), "6:{0}");

    let mut union = cl(2, 300);
    union.extend(cl(3, 300));
    union.sort_unstable();
    union.dedup();
    let s = closure_finite(&[2, 3]).unwrap();
    assert_eq!(s.enumerate(1, 300), union);
    assert_eq!(s.to_string(), "6:{0,2,3,4}");
    assert_eq!(closure_finite(&[6]).unwrap().enumerate(1, 300), cl(6, 300));
}

/// `{x ∈ [1, p] : p ∤ f(x)}` by direct evaluation, as residues mod `p`.
fn naive_poly_preimage(coefficients: &[u64], p: u64) -> Vec<u64> {
    let eval = |x: u64| {
        coefficients
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * x as u128 + c as u128)
    };
    let mut kept: Vec<u64> = (1..=p)
        .filter(|&x| eval(x) % p as u128 != 0)
        .map(|x| x % p)
        .collect();
    kept.sort_unstable();
    kept
}

/// Least prime where the preimage is neither empty, all classes, nor the
/// nonzero classes.
fn naive_least_witness(coefficients: &[u64]) -> (u64, Vec<u64>) {
    (2u64..)
        .filter(|&p| naive_is_prime(p))
        .find_map(|p| {
            let kept = naive_poly_preimage(coefficients, p);
            let all: Vec<u64> = (0..p).collect();
            let units: Vec<u64> = (1..p).collect();
            (!kept.is_empty() && kept != all && kept != units).then_some((p, kept))
        })
        .unwrap()
}

#[test]
fn least_witness_for_x_squared_plus_x() {
    let (p, kept) = naive_least_witness(&[0, 1, 1]);
    assert_eq!((p, kept.as_slice()), (3, &[1][..]));
    assert_eq!(naive_poly_preimage(&[0, 1, 1], 2), Vec::<u64>::new());

    let f: Polynomial = "x^2+x".parse().unwrap();
    let verdict = f.continuity(10_000).unwrap();
    let expected_set = ResidueSet::new(p, kept).unwrap();
    assert_eq!(verdict.witness_prime(), Some(p));
    match verdict {
        ContinuityVerdict::Discontinuous { preimage, .. } => assert_eq!(preimage, expected_set),
        other => panic!("{other:?}"),
    }
}

#[test]
fn least_witness_for_example_two() {
    assert_eq!(naive_poly_preimage(&[2, 4, 1], 2), [1]);
    assert_eq!(naive_poly_preimage(&[2, 4, 1], 3), [0, 1, 2]);
    assert_eq!(naive_poly_preimage(&[2, 4, 1], 5), [0, 1, 2, 3, 4]);
    let (p, kept) = naive_least_witness(&[2, 4, 1]);
    assert_eq!((p, kept.as_slice()), (7, &[0, 3, 4, 5, 6][..]));

    let f: Polynomial = "x^2+4x+2".parse().unwrap();
    for q in [2, 3, 5] {
        assert!(is_trichotomous(&f.preimage_sigma(q).unwrap(), q).unwrap());
    }
    assert_eq!(f.continuity(10_000).unwrap().witness_prime(), Some(7));
}

/// `{x ∈ [1, hi] : p ∤ a^x + b}` by repeated multiplication.
fn naive_exp_members(a: u64, b: u64, p: u64, hi: u64) -> Vec<u64> {
    let mut power = 1u64;
    let mut out = Vec::new();
    for x in 1..=hi {
        power = power * a % p;
        if !(power + b).is_multiple_of(p) {
            out.push(x);
        }
    }
    out
}

#[test]
fn exponential_preimages_by_scan() {
    // 2^x mod 5 runs 2, 4, 3, 1
    let members = naive_exp_members(2, 3, 5, 40);
    let expected: ResidueSet = "4:{0,2,3}".parse().unwrap();
    assert_eq!(expected.enumerate(1, 40), members);
    let g: ExpFunction = "2^x+3".parse().unwrap();
    assert_eq!(g.preimage_sigma(5).unwrap(), expected);

    let members = naive_exp_members(3, 1, 5, 40);
    let expected: ResidueSet = "4:{0,1,3}".parse().unwrap();
    assert_eq!(expected.enumerate(1, 40), members);
    let g: ExpFunction = "3^x+1".parse().unwrap();
    assert_eq!(g.preimage_sigma(5).unwrap(), expected);

    // 3^x + 1 is always even; 3 | 3^x so mod 3 it is always 1
    assert!(naive_exp_members(3, 1, 2, 40).is_empty());
    assert_eq!(naive_exp_members(3, 1, 3, 40), (1..=40).collect::<Vec<_>>());
    assert_eq!(g.continuity(100).unwrap().witness_prime(), Some(5));
}

#[test]
fn census_of_example_two() {
    let values: Vec<u64> = (1..=10u64).map(|x| x * x + 4 * x + 2).collect();
    assert_eq!(values, [7, 14, 23, 34, 47, 62, 79, 98, 119, 142]);
    let mut primes: Vec<u64> = (2..=142)
        .filter(|&p| naive_is_prime(p) && values.iter().any(|v| v % p == 0))
        .collect();
    primes.sort_unstable();
    let f: Polynomial = "x^2+4x+2".parse().unwrap();
    assert_eq!(f.prime_divisor_census(10).unwrap(), primes);
    assert_eq!(primes.len(), 8);
}
