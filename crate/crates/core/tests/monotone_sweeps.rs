use majorder_core::monotone::{
    diff_profile, ratio_profile, verify_product_inequality, verify_sum_inequality, BuiltinF,
    CertificateKind, InequalityOutcome, MonotoneError, PowerMap,
};
use majorder_core::poset::{comparable_pairs, CanonicalSeq};
use majorder_core::recur::RecurrenceSpec;

fn catalog_recurrence() -> BuiltinF {
    BuiltinF::Recurrence(RecurrenceSpec { a: 3, b: -1, a1: 3 })
}

#[test]
fn ratio_directions_across_the_catalog() {
    let expected = [
        (BuiltinF::Factorial, CertificateKind::RatioIncreasing),
        (BuiltinF::FactOverSelfPower, CertificateKind::RatioDecreasing),
        (BuiltinF::RatioRoot, CertificateKind::RatioDecreasing),
        (BuiltinF::RatioRootPower, CertificateKind::RatioIncreasing),
        (BuiltinF::F1, CertificateKind::RatioDecreasing),
        (BuiltinF::FibEvenIndex, CertificateKind::RatioIncreasing),
        (BuiltinF::FibOddIndex, CertificateKind::RatioDecreasing),
        (catalog_recurrence(), CertificateKind::RatioDecreasing),
    ];
    for (f, kind) in expected {
        let cert = ratio_profile(&f, 50).unwrap_or_else(|e| panic!("{f:?}: {e}"));
        assert_eq!(cert.kind, kind, "ratio direction of {f:?}");
        assert_eq!(cert.witness_checked, 50);
        let again = ratio_profile(&f, 50).unwrap();
        assert_eq!(cert, again, "certificates must be reproducible");
    }
    assert!(
        matches!(ratio_profile(&BuiltinF::F2, 50), Err(MonotoneError::F0NotOne)),
        "the shifted-factorial map starts at sqrt(2), not 1"
    );
}

#[test]
fn diff_directions_across_the_catalog() {
    let expected = [
        (BuiltinF::Factorial, CertificateKind::DiffIncreasing),
        (BuiltinF::RatioRootPower, CertificateKind::DiffIncreasing),
        (BuiltinF::F1, CertificateKind::DiffIncreasing),
        (BuiltinF::F2, CertificateKind::DiffDecreasing),
        (BuiltinF::FibEvenIndex, CertificateKind::DiffIncreasing),
        (BuiltinF::FibOddIndex, CertificateKind::DiffIncreasing),
        (catalog_recurrence(), CertificateKind::DiffIncreasing),
    ];
    for (f, kind) in expected {
        let cert = diff_profile(&f, 30, 128, 2048).unwrap_or_else(|e| panic!("{f:?}: {e}"));
        assert_eq!(cert.kind, kind, "difference direction of {f:?}");
        assert_eq!(cert.witness_checked, 30);
    }
    // f(1) - f(0) = 1/2 = f(2) - f(1) exactly, so the difference profile
    // ties at the very first comparison.
    assert!(
        matches!(
            diff_profile(&BuiltinF::RatioRoot, 30, 128, 2048),
            Err(MonotoneError::NotMonotone { x: 1 })
        ),
        "the ratio-root map has tied leading differences"
    );
    // Differences run 0, -1/2, -5/18, ...: the drop from f(1) to f(2)
    // undercuts the flat start, so the direction flips at the second
    // comparison and no certificate exists.
    assert!(
        matches!(
            diff_profile(&BuiltinF::FactOverSelfPower, 30, 128, 2048),
            Err(MonotoneError::NotMonotone { x: 2 })
        ),
        "the self-power quotient map has a non-monotone difference profile"
    );
}

#[test]
fn product_inequality_sweep_for_unit_start_maps() {
    let pairs: Vec<(CanonicalSeq, CanonicalSeq)> = comparable_pairs(12).collect();
    let clean = [
        BuiltinF::Factorial,
        BuiltinF::FactOverSelfPower,
        BuiltinF::RatioRootPower,
        BuiltinF::FibEvenIndex,
    ];
    for f in clean {
        let cert = ratio_profile(&f, 12).unwrap();
        for (a, b) in &pairs {
            let out = verify_product_inequality(&f, a, b, &cert)
                .unwrap_or_else(|e| panic!("{f:?} on {a} vs {b}: {e}"));
            if a == b {
                assert_eq!(out, InequalityOutcome::Equal);
            } else {
                let want = if cert.kind == CertificateKind::RatioIncreasing {
                    InequalityOutcome::StrictlyGreater
                } else {
                    InequalityOutcome::StrictlyLess
                };
                assert_eq!(out, want, "{f:?} on {a} vs {b}");
            }
        }
    }
}

#[test]
fn product_inequality_failures_need_total_sum_slack() {
    // These maps certify a strictly decreasing ratio but start above 1 at
    // x=1, so the claimed product inequality can flip; the flip needs the
    // dominated side to have a strictly smaller total.
    let pairs: Vec<(CanonicalSeq, CanonicalSeq)> = comparable_pairs(12).collect();
    let flipping = [
        BuiltinF::RatioRoot,
        BuiltinF::FibOddIndex,
        BuiltinF::F1,
        catalog_recurrence(),
    ];
    for f in flipping {
        let cert = ratio_profile(&f, 12).unwrap();
        let mut violations = 0u32;
        for (a, b) in &pairs {
            match verify_product_inequality(&f, a, b, &cert) {
                Ok(out) => {
                    if a == b {
                        assert_eq!(out, InequalityOutcome::Equal);
                    }
                }
                Err(MonotoneError::TheoremViolation { .. }) => {
                    violations += 1;
                    assert!(
                        a.sum() > b.sum(),
                        "{f:?}: violation without slack on {a} vs {b}"
                    );
                }
                Err(e) => panic!("{f:?} on {a} vs {b}: unexpected error {e}"),
            }
        }
        assert!(violations > 0, "{f:?} should flip somewhere in this range");
    }
}

#[test]
fn sum_inequality_sweep_resolves_strictly() {
    let pairs: Vec<(CanonicalSeq, CanonicalSeq)> = comparable_pairs(10).collect();

    let f1 = BuiltinF::F1;
    let cert1 = diff_profile(&f1, 12, 128, 2048).unwrap();
    for (a, b) in &pairs {
        let out = verify_sum_inequality(&f1, a, b, &cert1, 128, 2048)
            .unwrap_or_else(|e| panic!("f1 on {a} vs {b}: {e}"));
        if a == b {
            assert_eq!(out, InequalityOutcome::Equal);
        } else {
            assert_eq!(out, InequalityOutcome::StrictlyGreater, "f1 on {a} vs {b}");
        }
    }

    let f2 = BuiltinF::F2;
    let cert2 = diff_profile(&f2, 12, 128, 2048).unwrap();
    let mut violations = 0u32;
    for (a, b) in &pairs {
        match verify_sum_inequality(&f2, a, b, &cert2, 128, 2048) {
            Ok(out) => {
                if a == b {
                    assert_eq!(out, InequalityOutcome::Equal);
                } else {
                    assert_eq!(out, InequalityOutcome::StrictlyLess, "f2 on {a} vs {b}");
                }
            }
            Err(MonotoneError::TheoremViolation { .. }) => {
                violations += 1;
                assert!(a.sum() > b.sum(), "f2: violation without slack on {a} vs {b}");
            }
            Err(e) => panic!("f2 on {a} vs {b}: unexpected error {e}"),
        }
    }
    assert!(violations > 0, "f2 flips on slack pairs such as (2) over (1)");
}

#[test]
fn exponential_of_sum_map_gives_a_product_map_profile() {
    // The exponential of a map with strictly increasing differences has
    // strictly increasing consecutive ratios; checked at interval level
    // for the cube-root factorial map on [1,10].
    let f = BuiltinF::F1;
    let precision = 256;
    let values: Vec<_> = (0..=10u64)
        .map(|x| f.value(x).interval_eval(precision))
        .collect();
    let exp_ratios: Vec<_> = (1..=10usize)
        .map(|x| values[x].sub(&values[x - 1]).exp())
        .collect();
    for x in 1..exp_ratios.len() {
        assert!(
            exp_ratios[x].strictly_greater_than(&exp_ratios[x - 1]),
            "exp-ratio must increase at step {x}"
        );
    }
}
