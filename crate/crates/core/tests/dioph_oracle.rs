use majorder_core::dioph::{
    eval_rectangular_side, factorize_check_prodplus, solve_rectangular, solve_sequence_equation,
    Classification, DiophError, EquationId, SideValue,
};
use majorder_core::poset::{enumerate_sequences, majorizes, rectangle, CanonicalSeq};
use majorder_core::BigRat;
use num_bigint::{BigInt, BigUint};
use std::collections::{BTreeMap, BTreeSet};

// Everything below re-derives values from first principles; none of it
// calls the library's evaluators.

fn fact(n: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

// Prime exponent vector of n (n >= 1) by trial division.
fn prime_vec(mut n: u64) -> BTreeMap<u64, i64> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

type RadicalVec = BTreeMap<u64, BigRat>;

fn add_scaled(acc: &mut RadicalVec, v: &BTreeMap<u64, i64>, scale: &BigRat) {
    for (&p, &e) in v {
        let entry = acc.entry(p).or_insert_with(|| rat(0, 1));
        *entry += scale * rat(e, 1);
    }
}

fn prime_vec_of_factorial(n: u64) -> BTreeMap<u64, i64> {
    let mut acc = BTreeMap::new();
    for i in 2..=n {
        for (p, e) in prime_vec(i) {
            *acc.entry(p).or_insert(0) += e;
        }
    }
    acc
}

// Per-part exponent vectors of the three radical product maps, straight
// from their definitions.
fn radical_part_vec(eq: EquationId, x: u64) -> RadicalVec {
    let mut acc = RadicalVec::new();
    match eq {
        EquationId::FactSelfPowerProd => {
            add_scaled(&mut acc, &prime_vec_of_factorial(x), &rat(1, 1));
            add_scaled(&mut acc, &prime_vec(x), &rat(-(x as i64), 1));
        }
        EquationId::RatioRootProd => {
            if x == 1 {
                add_scaled(&mut acc, &prime_vec(3), &rat(1, 1));
                add_scaled(&mut acc, &prime_vec(2), &rat(-1, 1));
            } else {
                add_scaled(&mut acc, &prime_vec(x), &rat(1, 1));
                add_scaled(
                    &mut acc,
                    &prime_vec_of_factorial(x - 1),
                    &rat(-1, (x - 1) as i64),
                );
            }
        }
        EquationId::RatioRootPowerProd => {
            if x == 1 {
                add_scaled(&mut acc, &prime_vec(2), &rat(1, 1));
            } else {
                add_scaled(&mut acc, &prime_vec(x), &rat(x as i64 + 1, 1));
                add_scaled(
                    &mut acc,
                    &prime_vec_of_factorial(x - 1),
                    &rat(-1, (x - 1) as i64),
                );
            }
        }
        _ => panic!("not a radical product equation"),
    }
    acc
}

fn radical_side_vec(eq: EquationId, s: &CanonicalSeq) -> RadicalVec {
    let mut acc = RadicalVec::new();
    for &p in s.parts() {
        for (base, e) in radical_part_vec(eq, p) {
            let entry = acc.entry(base).or_insert_with(|| rat(0, 1));
            *entry += e;
        }
    }
    acc.retain(|_, e| *e != rat(0, 1));
    acc
}

fn nat_side(eq: EquationId, s: &CanonicalSeq) -> BigInt {
    let prod_f: BigUint = s.parts().iter().map(|&p| fact(p)).product();
    let prod_p: BigUint = s.parts().iter().map(|&p| BigUint::from(p)).product();
    match eq {
        EquationId::ProdPlus => BigInt::from(prod_f) + BigInt::from(prod_p),
        EquationId::ProdMinus => BigInt::from(prod_f) - BigInt::from(prod_p),
        _ => panic!("not a factorial product equation"),
    }
}

fn f64_radical_sum(eq: EquationId, s: &CanonicalSeq) -> f64 {
    let term = |x: u64| -> f64 {
        let f = |n: u64| -> f64 {
            let mut acc = 1.0;
            for i in 2..=n {
                acc *= i as f64;
            }
            acc
        };
        match eq {
            EquationId::SumF1 => f(x + 1).powf(1.0 / (x as f64 + 2.0)),
            EquationId::SumF2 => f(x + 2).powf(1.0 / (x as f64 + 2.0)),
            _ => panic!("not a radical sum equation"),
        }
    };
    s.parts().iter().map(|&p| term(p)).sum()
}

fn oracle_equal(eq: EquationId, a: &CanonicalSeq, b: &CanonicalSeq) -> bool {
    match eq {
        EquationId::ProdPlus | EquationId::ProdMinus => nat_side(eq, a) == nat_side(eq, b),
        EquationId::FactSelfPowerProd
        | EquationId::RatioRootProd
        | EquationId::RatioRootPowerProd => radical_side_vec(eq, a) == radical_side_vec(eq, b),
        EquationId::SumF1 | EquationId::SumF2 => {
            // No cheap exact test exists; distinct sides must separate by a
            // visible margin at this scale, so floating point is decisive.
            let gap = (f64_radical_sum(eq, a) - f64_radical_sum(eq, b)).abs();
            if a == b {
                true
            } else {
                assert!(gap > 1e-9, "{eq}: suspicious near-tie on {a} vs {b}");
                false
            }
        }
        _ => panic!("not sequence-shaped"),
    }
}

fn pair_key(r: &(CanonicalSeq, CanonicalSeq)) -> (Vec<u64>, Vec<u64>) {
    (r.0.parts().to_vec(), r.1.parts().to_vec())
}

#[test]
fn sequence_solvers_match_the_independent_oracle() {
    let bounds = [
        (EquationId::ProdPlus, 10u64),
        (EquationId::ProdMinus, 8),
        (EquationId::FactSelfPowerProd, 9),
        (EquationId::RatioRootProd, 9),
        (EquationId::RatioRootPowerProd, 9),
        (EquationId::SumF1, 8),
        (EquationId::SumF2, 8),
    ];
    for (eq, max_sum) in bounds {
        let solved = solve_sequence_equation(eq, max_sum)
            .unwrap_or_else(|e| panic!("{eq} at {max_sum}: {e}"));
        let solved_set: BTreeSet<_> = solved
            .iter()
            .map(|r| pair_key(&(r.a.clone(), r.b.clone())))
            .collect();
        assert_eq!(solved.len(), solved_set.len(), "{eq}: duplicate records");

        let seqs: Vec<CanonicalSeq> = enumerate_sequences(max_sum, None).collect();
        let mut oracle_set = BTreeSet::new();
        for a in &seqs {
            for b in &seqs {
                if majorizes(a, b) && oracle_equal(eq, a, b) {
                    oracle_set.insert(pair_key(&(a.clone(), b.clone())));
                }
            }
        }
        assert_eq!(solved_set, oracle_set, "{eq} at max_sum {max_sum}");

        for r in &solved {
            match r.classification {
                Classification::Trivial => assert_eq!(r.a, r.b),
                Classification::KnownExceptional => {
                    assert_eq!(eq, EquationId::ProdMinus);
                    assert!(r.a != r.b);
                    assert!(r
                        .a
                        .parts()
                        .iter()
                        .chain(r.b.parts())
                        .all(|&p| p == 1 || p == 2));
                    assert_eq!(nat_side(eq, &r.a), BigInt::from(0));
                    assert_eq!(nat_side(eq, &r.b), BigInt::from(0));
                }
                Classification::Unexpected => {
                    assert_eq!(eq, EquationId::RatioRootProd);
                    assert!(r.a.sum() > r.b.sum(), "collisions need total-sum slack");
                }
            }
        }
    }
}

#[test]
fn ratio_root_collisions_at_the_named_scale_are_exactly_the_paddings() {
    let solved = solve_sequence_equation(EquationId::RatioRootProd, 10).unwrap();
    let nontrivial: Vec<_> = solved
        .iter()
        .filter(|r| r.classification != Classification::Trivial)
        .collect();
    assert_eq!(nontrivial.len(), 12);
    for r in &nontrivial {
        // Every collision is the primitive (3,3) = (2,1,1) substitution
        // padded by a shared multiset: removing one 2 and two 1s from b
        // and two 3s from a must leave identical multisets.
        let mut a_parts = r.a.parts().to_vec();
        let mut b_parts = r.b.parts().to_vec();
        for needle in [3u64, 3] {
            let i = a_parts.iter().position(|&p| p == needle).unwrap_or_else(|| {
                panic!("collision {} vs {} does not contain the primitive", r.a, r.b)
            });
            a_parts.remove(i);
        }
        for needle in [2u64, 1, 1] {
            let i = b_parts.iter().position(|&p| p == needle).unwrap_or_else(|| {
                panic!("collision {} vs {} does not contain the primitive", r.a, r.b)
            });
            b_parts.remove(i);
        }
        assert_eq!(a_parts, b_parts, "shared padding of {} vs {}", r.a, r.b);
        assert_eq!(r.a.sum(), r.b.sum() + 2, "slack of the primitive is two");
        // Both sides really are the same number: 9/2 times the padding.
        assert_eq!(
            radical_side_vec(EquationId::RatioRootProd, &r.a),
            radical_side_vec(EquationId::RatioRootProd, &r.b)
        );
    }
}

#[test]
fn rectangular_solvers_match_direct_recomputation() {
    for eq in [
        EquationId::PowPlus,
        EquationId::PowMinus,
        EquationId::RectFactPow,
    ] {
        let n_max = 8;
        let solved = solve_rectangular(eq, n_max).unwrap();
        let solved_set: BTreeSet<(u64, u64)> = solved
            .iter()
            .map(|r| (r.a.parts()[0], r.b.parts()[0]))
            .collect();
        let mut oracle_set = BTreeSet::new();
        for k in 1..=n_max {
            for n in 1..=n_max {
                let equal = match eq {
                    EquationId::PowPlus => {
                        fact(k).pow(n as u32) + BigUint::from(k).pow(n as u32)
                            == fact(n).pow(k as u32) + BigUint::from(n).pow(k as u32)
                    }
                    EquationId::PowMinus => {
                        BigInt::from(fact(k).pow(n as u32)) - BigInt::from(BigUint::from(k).pow(n as u32))
                            == BigInt::from(fact(n).pow(k as u32))
                                - BigInt::from(BigUint::from(n).pow(k as u32))
                    }
                    EquationId::RectFactPow => {
                        fact(k).pow(n as u32) * BigUint::from(n).pow((n * k) as u32)
                            == fact(n).pow(k as u32) * BigUint::from(k).pow((n * k) as u32)
                    }
                    _ => unreachable!(),
                };
                if equal {
                    oracle_set.insert((k, n));
                }
            }
        }
        assert_eq!(solved_set, oracle_set, "{eq} grid vs oracle");

        // Mirror consistency of the grid.
        for &(k, n) in &solved_set {
            assert!(solved_set.contains(&(n, k)), "{eq}: ({k},{n}) without ({n},{k})");
        }
    }
}

#[test]
fn rectangular_radical_equations_have_diagonal_solutions_only() {
    for eq in [EquationId::RectRatioRoot, EquationId::RectRatioRootPower] {
        let solved = solve_rectangular(eq, 6).unwrap();
        for r in &solved {
            assert_eq!(r.classification, Classification::Trivial);
            assert_eq!(r.a, r.b, "{eq} admits an off-diagonal solution");
        }
        assert_eq!(solved.len(), 6, "{eq} must solve exactly on the diagonal");
    }
}

#[test]
fn self_power_products_on_rectangles_match_the_cross_multiplied_form() {
    // (k!/k^k)^n = (n!/n^n)^k exactly when (k!)^n n^(nk) = (n!)^k k^(nk);
    // checked as exact rationals against the rectangular evaluator.
    for k in 1..=6u64 {
        for n in 1..=6u64 {
            let lhs = BigRat::new(BigInt::from(fact(k)), BigInt::from(BigUint::from(k).pow(k as u32)))
                .pow(n as i32);
            let rhs = BigRat::new(BigInt::from(fact(n)), BigInt::from(BigUint::from(n).pow(n as u32)))
                .pow(k as i32);
            let seq_equal = radical_side_vec(
                EquationId::FactSelfPowerProd,
                &rectangle(k, n as usize),
            ) == radical_side_vec(EquationId::FactSelfPowerProd, &rectangle(n, k as usize));
            let rect_left = eval_rectangular_side(EquationId::RectFactPow, k, n);
            let rect_right = eval_rectangular_side(EquationId::RectFactPow, n, k);
            let rect_equal = match (rect_left, rect_right) {
                (SideValue::Nat(l), SideValue::Nat(r)) => l == r,
                _ => panic!("rectangular factorial sides must be exact naturals"),
            };
            assert_eq!(lhs == rhs, rect_equal, "cross-multiplication at ({k},{n})");
            assert_eq!(seq_equal, rect_equal, "sequence form at ({k},{n})");
            assert_eq!(rect_equal, k == n, "only the diagonal solves at ({k},{n})");
        }
    }
}

#[test]
fn coprimality_step_of_the_plus_product_argument_holds_at_desk_scale() {
    assert_eq!(
        factorize_check_prodplus(
            &majorder_core::poset::canonicalize(&[3, 1]).unwrap(),
            &majorder_core::poset::canonicalize(&[2, 2]).unwrap()
        ),
        Ok(true)
    );
    let seqs: Vec<CanonicalSeq> = enumerate_sequences(10, None).collect();
    let mut checked = 0u32;
    for a in &seqs {
        for b in &seqs {
            if !majorizes(a, b) || a == b {
                continue;
            }
            match factorize_check_prodplus(a, b) {
                Ok(true) => checked += 1,
                // A strict prefix never exposes a differing index.
                Err(DiophError::PreconditionUnmet) => {
                    assert!(a.parts() == &b.parts()[..a.len()], "{a} vs {b}");
                }
                Ok(false) => panic!("coprimality step failed on {a} vs {b}"),
                Err(e) => panic!("{a} vs {b}: {e}"),
            }
        }
    }
    assert!(checked > 500, "sweep should cover a real population, saw {checked}");
}
