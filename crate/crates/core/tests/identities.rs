use proptest::prelude::*;
use su2cp::hyper::identities::{
    balanced_relation_lowered, balanced_relation_shifted, krawtchouk_orthogonality, orthogonality_sum,
    reduction_to_balanced_3f2, symmetric_reflection,
};
use su2cp::hyper::{
    hyp2f1_terminating, hyp3f2_terminating, int, krawtchouk_symmetric, norm_h, ratio, weight_printed, weight_standard,
    RadicalValue,
};

#[test]
fn reflection_up_to_forty() {
    let report = symmetric_reflection(40);
    assert!(report.passed(), "{:?}", &report.failures[..report.failures.len().min(5)]);
    assert_eq!(report.checked, (0..=40usize).map(|n| (n + 1) * (n + 1)).sum::<usize>());
}

#[test]
fn reduction_example_point() {
    // x = 1, n = 0, j = 2: 2F1(-2,-2;-4;2) against 3F2(0,0,-1;1/2,-1;1) = 1
    let lhs = hyp2f1_terminating(-2, &int(-2), &int(-4), &int(2)).unwrap();
    assert_eq!(lhs, ratio(-1, 3));
    let rhs = hyp3f2_terminating(0, &int(0), &int(-1), &ratio(1, 2), &int(-1), &int(1)).unwrap();
    assert_eq!(rhs, int(1));
    assert_eq!(krawtchouk_symmetric(2, 2, 4).unwrap(), ratio(-1, 3));
}

#[test]
fn balanced_suites_medium() {
    for report in [reduction_to_balanced_3f2(8), balanced_relation_shifted(8), balanced_relation_lowered(8)] {
        assert!(report.passed(), "{}: {:?}", report.name, report.failures);
        assert!(report.checked > 0);
    }
}

#[test]
fn printed_weight_is_not_orthogonal_but_standard_is() {
    let half = ratio(1, 2);
    let printed = orthogonality_sum(weight_printed, 0, 1, &half, 2).unwrap();
    let standard = orthogonality_sum(weight_standard, 0, 1, &half, 2).unwrap();
    assert_ne!(printed, int(0));
    assert_eq!(standard, int(0));
    let report = krawtchouk_orthogonality(weight_printed, 4, &[ratio(1, 3)]);
    assert!(!report.passed());
    let report = krawtchouk_orthogonality(weight_standard, 12, &[ratio(1, 2), ratio(2, 5)]);
    assert!(report.passed(), "{:?}", report.failures);
}

proptest! {
    #[test]
    fn reflection_holds_for_random_points(size in 0u32..60, seed in 0u32..10_000) {
        let n = seed % (size + 1);
        let x = (seed / 7) % (size + 1);
        let lhs = krawtchouk_symmetric(n, x, size).unwrap();
        let rhs = krawtchouk_symmetric(n, size - x, size).unwrap();
        prop_assert_eq!(lhs, if n % 2 == 0 { rhs } else { -rhs });
    }

    #[test]
    fn norm_is_nonzero(size in 0u32..40, n in 0u32..40, num in 1i64..20) {
        prop_assume!(n <= size);
        let p = ratio(num, 21);
        prop_assert_ne!(norm_h(n, &p, size).unwrap(), int(0));
    }

    #[test]
    fn radical_sign_and_square_determine_value(a in 0i64..500, b in 1i64..500) {
        let x = RadicalValue::new(-1, ratio(a, b));
        let y = RadicalValue::new(-1, ratio(2 * a, 2 * b));
        prop_assert_eq!(x, y);
    }
}
