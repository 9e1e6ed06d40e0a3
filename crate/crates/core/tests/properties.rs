use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use catalan_core::arith::{is_prime_u64, primes_up_to};
use catalan_core::cassels::{gcd_quotient, quotient_expansion};
use catalan_core::criteria::{
    criteria_verdict, lemma_simp_lift, m095_relation_check, m2_check, m4_applies, search_double_wieferich,
    wieferich_pair_check,
};
use catalan_core::padic::{ord, rational_binomial};
use catalan_core::pell::{minimal_solution_by_search, nth_solution};
use catalan_core::ufd::{are_associate, bachet, factorize, gcd_elem, EuclideanDomain};
use catalan_core::{Error, GaussianInt, PadicOrder, Rational};

const SMALL_PRIMES: [u32; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

fn gaussian() -> impl Strategy<Value = GaussianInt> {
    (-500i64..=500, -500i64..=500).prop_map(|(a, b)| GaussianInt::new(a.into(), b.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gcd_quotient_divides_q(a in -200i64..=200, b in -200i64..=200, qi in 0usize..8) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assume!(a != b && a.gcd(&b).is_one());
        let q = SMALL_PRIMES[qi];
        let d = gcd_quotient(&a, &b, q).unwrap();
        prop_assert!(BigInt::from(q).is_multiple_of(&d));
    }

    #[test]
    fn quotient_expansion_is_exact(a in -60i64..=60, b in -60i64..=60, q in 2u32..=9) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assume!(a != b);
        prop_assert_eq!(quotient_expansion(&a, &b, q), (a.pow(q) - b.pow(q)) / (&a - &b));
    }

    #[test]
    fn gaussian_gcd_divides_both(z in gaussian(), w in gaussian()) {
        prop_assume!(!z.is_zero() || !w.is_zero());
        let g = gcd_elem(&z, &w);
        prop_assert!(z.divrem(&g).unwrap().1.is_zero());
        prop_assert!(w.divrem(&g).unwrap().1.is_zero());
        prop_assert_eq!(g.canonical_associate().0, g);
    }

    #[test]
    fn gaussian_bezout(z in gaussian(), w in gaussian()) {
        prop_assume!(!z.is_zero() && !w.is_zero());
        let g = gcd_elem(&z, &w);
        let (zq, wq) = (z.divrem(&g).unwrap().0, w.divrem(&g).unwrap().0);
        let (c, d) = bachet(&zq, &wq).unwrap();
        prop_assert!((c * zq + d * wq).is_one());
    }

    #[test]
    fn gaussian_factorization_is_multiplicative(z in gaussian(), w in gaussian()) {
        prop_assume!(!z.is_zero() && !w.is_zero());
        let (fz, fw) = (factorize(&z).unwrap(), factorize(&w).unwrap());
        let fzw = factorize(&(z.clone() * w.clone())).unwrap();
        for (p, e) in &fzw.factors {
            prop_assert_eq!(*e, fz.multiplicity(p) + fw.multiplicity(p));
        }
        prop_assert!(are_associate(&fzw.canonical_value(), &(z * w)));
    }

    #[test]
    fn integer_factorization_round_trips(n in -1_000_000_000_000i64..=1_000_000_000_000) {
        prop_assume!(n != 0);
        let n = BigInt::from(n);
        let f = factorize(&n).unwrap();
        prop_assert_eq!(f.reconstruct(), n);
        for p in f.factors.keys() {
            prop_assert!(is_prime_u64(u64::try_from(p).unwrap()));
        }
    }

    #[test]
    fn binomial_pascal_rule(num in -50i64..=50, den in 1i64..=12, k in 1u32..=15) {
        let alpha = Rational::new(num.into(), den.into());
        let lhs = rational_binomial(&(alpha.clone() + Rational::one()), k);
        let rhs = rational_binomial(&alpha, k) + rational_binomial(&alpha, k - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn order_of_inverse_negates(num in -10_000i64..=10_000, den in 1i64..=10_000, pi in 0usize..8) {
        prop_assume!(num != 0);
        let p = BigInt::from(SMALL_PRIMES[pi]);
        let a = Rational::new(num.into(), den.into());
        match (ord(&p, &a).unwrap(), ord(&p, &a.recip()).unwrap()) {
            (PadicOrder::Finite(x), PadicOrder::Finite(y)) => prop_assert_eq!(x, -y),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn lifting_lemma_matches_direct_congruence(qi in 1usize..8, k in 1i64..=2_000) {
        // x = 1 + kq satisfies the second hypothesis exactly when q | k
        let q = SMALL_PRIMES[qi] as u64;
        let x = BigInt::from(1 + k * q as i64);
        match lemma_simp_lift(q, &x) {
            Ok(lifted) => {
                prop_assert!(k % q as i64 == 0);
                prop_assert!(lifted);
            }
            Err(Error::Precondition(_)) => prop_assert!(k % q as i64 != 0),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }
}

#[test]
fn wieferich_search_is_symmetric_and_prefix_stable() {
    let limits = [100u64, 500, 1000, 2000, 5000];
    let runs: Vec<Vec<(u64, u64)>> = limits.iter().map(|&l| search_double_wieferich(l).unwrap()).collect();
    for (i, pairs) in runs.iter().enumerate() {
        for &(p, q) in pairs {
            assert!(p < q);
            assert!(wieferich_pair_check(p, q).unwrap());
            assert!(wieferich_pair_check(q, p).unwrap());
        }
        for later in &runs[i..] {
            let cut: Vec<_> = later.iter().copied().filter(|&(_, q)| q <= limits[i]).collect();
            assert_eq!(&cut, pairs);
        }
    }
    assert_eq!(runs[4], [(83, 4871)]);
}

#[test]
fn wieferich_search_ignores_thread_count() {
    let run = |n| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .unwrap()
            .install(|| search_double_wieferich(3000).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn lifting_step_on_m1_pairs() {
    // every M1 pair found, with M2 in the p ≡ 1 (mod q) direction, must lift
    for (p, q) in search_double_wieferich(5000).unwrap() {
        for (a, b) in [(p, q), (q, p)] {
            if a >= 7 && b >= 7 && m2_check(a, b).unwrap() && a % b == 1 {
                assert!(lemma_simp_lift(b, &BigInt::from(a)).unwrap());
            }
        }
    }
    // (83, 4871) is M1 but not M2, so the lift is never invoked on it
    assert!(!m2_check(83, 4871).unwrap());
    assert!(lemma_simp_lift(4871, &BigInt::from(83)).is_err());
    for q in [7u64, 11, 13, 4871] {
        let q2 = BigInt::from(q * q);
        for k in 1..5 {
            assert!(lemma_simp_lift(q, &(BigInt::one() + &q2 * k)).unwrap());
        }
    }
}

#[test]
fn m4_gate_marks_every_small_exponent() {
    let primes: Vec<u64> = primes_up_to(200).into_iter().filter(|&p| p > 2).collect();
    for &p in &primes {
        for &q in &primes {
            if p == q {
                continue;
            }
            let v = criteria_verdict(p, q).unwrap();
            assert_eq!(v.resolved_by_m4, m4_applies(p, q));
            assert_eq!(m4_applies(p, q), [3, 5].contains(&p) || [3, 5].contains(&q));
        }
    }
}

#[test]
fn relation_check_rejects_non_solutions() {
    let one = BigInt::one();
    assert!(m095_relation_check(5, 3, &BigInt::zero(), &one).is_err());
    assert!(m095_relation_check(5, 3, &one, &BigInt::zero()).is_err());
    assert!(m095_relation_check(5, 3, &BigInt::from(2), &BigInt::from(3)).is_err());
    assert!(m095_relation_check(3, 5, &one, &one).is_err());
}

#[test]
fn pell_fundamental_matches_search() {
    for d in 2u64..200 {
        let r = (d as f64).sqrt() as u64;
        if r * r == d {
            continue;
        }
        let Some((x, y)) = minimal_solution_by_search(d, 100_000) else { continue };
        let s = nth_solution(&BigInt::from(d), 1).unwrap();
        assert_eq!((s.x, s.y), (BigInt::from(x), BigInt::from(y)), "d = {d}");
    }
}
