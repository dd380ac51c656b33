use std::collections::BTreeSet;

use super::*;

fn idx(r: &FusionRing, name: &str) -> usize {
    r.index_of(name).unwrap_or_else(|| panic!("{name} not in {}", r.name()))
}

/// `a·b` as a sorted multiset of names.
fn product_names(r: &FusionRing, a: &str, b: &str) -> Vec<String> {
    let mut out = Vec::new();
    for &(k, v) in r.product(idx(r, a), idx(r, b)) {
        for _ in 0..v {
            out.push(r.object(k).to_string());
        }
    }
    out.sort();
    out
}

fn names(list: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = list.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

#[test]
fn su2_level_one_is_z2() {
    let r = su2_ring(1).unwrap();
    assert_eq!(r.rank(), 2);
    assert_eq!(product_names(&r, "1", "1"), names(&["0"]));
    assert!(verify_axioms(&r).all_passed());
}

#[test]
fn su2_level_four_clebsch_gordan() {
    let r = su2_ring(4).unwrap();
    assert_eq!(product_names(&r, "2", "2"), names(&["0", "2", "4"]));
    assert_eq!(product_names(&r, "3", "3"), names(&["0", "2"]));
}

#[test]
fn su2_level_three_dimensions() {
    let r = su2_ring(3).unwrap();
    let phi = AlgReal::golden_ratio();
    assert_eq!(r.dims(), &[AlgReal::one(), phi.clone(), phi, AlgReal::one()]);
}

#[test]
fn su2_level_ten_passes_all_axioms() {
    let report = verify_axioms(&su2_ring(10).unwrap());
    assert!(report.all_passed(), "{report:?}");
}

#[test]
fn perturbed_constant_is_localized() {
    let r = su2_ring(4).unwrap();
    let mut constants = r.constants();
    let pos = constants.iter().position(|&(i, j, k, _)| (i, j, k) == (2, 2, 2)).unwrap();
    constants[pos].3 += 1;
    let bad = FusionRing::from_constants_unchecked(
        "bad",
        r.objects().to_vec(),
        0,
        r.duals().to_vec(),
        constants,
        r.dims().to_vec(),
    );
    let report = verify_axioms(&bad);
    let assoc = report.check(Axiom::Associativity);
    assert!(!assoc.passed);
    assert!(assoc.failures.iter().any(|f| f.contains('2')), "{assoc:?}");
    assert!(report.check(Axiom::Unit).passed);
}

#[test]
fn even_parts() {
    let fib = su2_even_part(3).unwrap();
    assert_eq!(fib.rank(), 2);
    assert_eq!(product_names(&fib, "2", "2"), names(&["0", "2"]));
    assert!(find_isomorphism(&fib, &fibonacci_ring()).is_some());

    let e4 = su2_even_part(4).unwrap();
    assert_eq!(product_names(&e4, "2", "2"), names(&["0", "2", "4"]));

    let z2 = su2_even_part(2).unwrap();
    assert!(find_isomorphism(&z2, &pointed_ring(2)).is_some());
}

#[test]
fn even_subring_rejects_open_subsets() {
    let r = su2_ring(4).unwrap();
    assert!(matches!(even_subring(&r, &[0, 1]), Err(Error::NotClosed(_))));
    assert!(matches!(even_subring(&r, &[2, 4]), Err(Error::NotClosed(_))));
}

#[test]
fn even_part_has_half_the_global_dimension() {
    for k in 1..=12 {
        let full = su2_ring(k).unwrap();
        let even = su2_even_part(k).unwrap();
        assert_eq!(&even.global_dim() * &AlgReal::from_integer(2), full.global_dim(), "level {k}");
    }
}

#[test]
fn pointed_rings() {
    assert_eq!(pointed_ring(1).rank(), 1);
    let z3 = pointed_ring(3);
    assert!(verify_axioms(&z3).all_passed());
    assert_eq!(z3.dual(1), 2);
}

#[test]
fn tensor_with_trivial_and_global_dimension() {
    let fib = fibonacci_ring();
    let t = tensor_ring(&fib, &pointed_ring(1));
    assert!(find_isomorphism(&t, &fib).is_some());
    let s = su2_ring(3).unwrap();
    let p = tensor_ring(&fib, &s);
    assert_eq!(p.global_dim(), &fib.global_dim() * &s.global_dim());
    assert!(verify_axioms(&p).all_passed());
}

#[test]
fn d4_even_part_is_z3() {
    let r = d2n_even_ring(2).unwrap();
    assert!(find_isomorphism(&r, &pointed_ring(3)).is_some());
}

#[test]
fn d6_even_part_matches_table() {
    let r = d2n_even_ring(3).unwrap();
    assert_eq!(r.objects(), &["0", "2", "4+", "4-"]);
    assert!(r.is_commutative());
    assert_eq!(product_names(&r, "2", "2"), names(&["0", "2", "4+", "4-"]));
    assert_eq!(product_names(&r, "2", "4+"), names(&["2", "4-"]));
    assert_eq!(product_names(&r, "2", "4-"), names(&["2", "4+"]));
    assert_eq!(product_names(&r, "4+", "4+"), names(&["0", "4+"]));
    assert_eq!(product_names(&r, "4-", "4-"), names(&["0", "4-"]));
    assert_eq!(product_names(&r, "4+", "4-"), names(&["2"]));
    assert_eq!(product_names(&r, "4-", "4+"), names(&["2"]));
    let phi = AlgReal::golden_ratio();
    assert_eq!(r.dims(), &[AlgReal::one(), &phi + &AlgReal::one(), phi.clone(), phi]);
    let fib = fibonacci_ring();
    assert!(find_isomorphism(&r, &tensor_ring(&fib, &fib)).is_some());
}

/// The variant with `2·4± = 2 + 4±` breaks Frobenius reciprocity and
/// associativity, so no completion can produce it.
#[test]
fn literal_d6_variant_is_not_a_fusion_ring() {
    let r = d2n_even_ring(3).unwrap();
    let (two, p, m) = (1, 2, 3);
    let constants: Vec<Constant> = r
        .constants()
        .into_iter()
        .map(|(i, j, k, v)| match (i, j, k) {
            (1, 2, 3) | (2, 1, 3) => (i, j, p, v),
            (1, 3, 2) | (3, 1, 2) => (i, j, m, v),
            _ => (i, j, k, v),
        })
        .collect();
    let variant = FusionRing::from_constants_unchecked(
        "variant",
        r.objects().to_vec(),
        0,
        r.duals().to_vec(),
        constants,
        r.dims().to_vec(),
    );
    assert_eq!(product_names(&variant, "2", "4+"), names(&["2", "4+"]));
    assert_eq!(variant.n(two, p, p), 1);
    let report = verify_axioms(&variant);
    assert!(!report.check(Axiom::Frobenius).passed);
    assert!(!report.check(Axiom::Associativity).passed);
}

#[test]
fn d2n_even_parts_are_unique_and_valid() {
    for n in 2..=8 {
        let rings = d2n_even_ring_candidates(n).unwrap();
        assert_eq!(rings.len(), 1, "n = {n}");
        assert!(verify_axioms(&rings[0]).all_passed(), "n = {n}");
        assert_eq!(rings[0].rank() as u32, n + 1);
    }
}

#[test]
fn inconsistent_partial_data_has_no_completion() {
    let fib = fibonacci_ring();
    let mut known = std::collections::HashMap::new();
    // σ·σ would need to contain σ twice, which the dimension equation forbids.
    known.insert((1, 1, 1), 2);
    let p = PartialFusionData {
        name: "dummy".into(),
        objects: fib.objects().to_vec(),
        unit: 0,
        dual: vec![0, 1],
        dims: fib.dims().to_vec(),
        known,
        unknown: BTreeSet::from([(1, 1, 0)]),
        linear: Vec::new(),
        commutative: true,
        swap_pairs: Vec::new(),
    };
    assert!(complete_by_associativity(&p).unwrap().is_empty());
}

#[test]
fn json_round_trip_validates() {
    let r = d2n_even_ring(3).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: FusionRing = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);

    let mut file = FusionRingFile::from(&r);
    file.constants[0][3] += 1;
    let broken = serde_json::to_string(&file).unwrap();
    assert!(serde_json::from_str::<FusionRing>(&broken).is_err());
}

#[test]
fn json_without_dims_computes_them() {
    let text = r#"{"name":"Fib","objects":["1","t"],"unit":0,"dual":[0,1],
        "constants":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1],[1,1,1,1]]}"#;
    let r: FusionRing = serde_json::from_str(text).unwrap();
    assert_eq!(r.dim(1), &AlgReal::golden_ratio());
}
