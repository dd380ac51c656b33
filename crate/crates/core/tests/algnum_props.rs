use ade_fusion::AlgReal;
use num::BigRational;
use proptest::prelude::*;

fn element(conductor: u32) -> impl Strategy<Value = AlgReal> {
    let degree = AlgReal::two_cos_pi_over(conductor).unwrap().lift(conductor).len().max(2);
    prop::collection::vec((-20i64..=20, 1i64..=6), 1..=degree.min(5)).prop_map(move |cs| {
        let coeffs = cs.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect();
        AlgReal::new(conductor, coeffs).unwrap()
    })
}

fn pair_in_field() -> impl Strategy<Value = (AlgReal, AlgReal, AlgReal)> {
    prop::sample::select(vec![5u32, 7, 8, 12, 15, 30]).prop_flat_map(|n| (element(n), element(n), element(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in pair_in_field()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, AlgReal::zero());
    }

    #[test]
    fn inverses((a, _, _) in pair_in_field()) {
        match a.inv() {
            Some(i) => prop_assert_eq!(&a * &i, AlgReal::one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn order_is_a_trichotomy_matching_floats((a, b, _) in pair_in_field()) {
        let lt = a < b;
        let eq = a == b;
        let gt = a > b;
        prop_assert_eq!(u8::from(lt) + u8::from(eq) + u8::from(gt), 1);
        let (x, y) = (a.to_f64(), b.to_f64());
        if (x - y).abs() > 1e-9 {
            prop_assert_eq!(lt, x < y);
        }
    }

    #[test]
    fn mixed_conductors_agree_with_floats(
        m in prop::sample::select(vec![3u32, 4, 5, 6, 8, 10, 12, 15]),
        n in prop::sample::select(vec![3u32, 4, 5, 6, 8, 10, 12, 15]),
    ) {
        let a = AlgReal::two_cos_pi_over(m).unwrap();
        let b = AlgReal::two_cos_pi_over(n).unwrap();
        let s = &a + &b;
        let expected = 2.0 * (std::f64::consts::PI / f64::from(m)).cos() + 2.0 * (std::f64::consts::PI / f64::from(n)).cos();
        prop_assert!((s.to_f64() - expected).abs() < 1e-12);
    }
}

#[test]
fn four_cos_sq_is_increasing_below_four() {
    let four = AlgReal::from_integer(4);
    let mut prev = AlgReal::four_cos_sq(3).unwrap();
    assert_eq!(prev, AlgReal::one());
    for n in 4..100 {
        let v = AlgReal::four_cos_sq(n).unwrap();
        assert!(v > prev, "n = {n}");
        assert!(v < four);
        prev = v;
    }
}

#[test]
fn golden_ratio_identities() {
    let phi = AlgReal::golden_ratio();
    assert_eq!(&phi * &phi, &phi + &AlgReal::one());
    assert_eq!(AlgReal::four_cos_sq(10).unwrap(), &phi + &AlgReal::from_integer(2));
    assert_eq!(AlgReal::four_cos_sq(10).unwrap().to_decimal(12), "3.618033988750");
}
