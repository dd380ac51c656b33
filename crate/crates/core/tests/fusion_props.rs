use ade_fusion::fusion::*;
use ade_fusion::AlgReal;
use proptest::prelude::*;

fn contragredient_holds(r: &FusionRing) -> bool {
    (0..r.rank())
        .all(|i| (0..r.rank()).all(|j| (0..r.rank()).all(|k| r.n(i, j, k) == r.n(r.dual(j), r.dual(i), r.dual(k)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn su2_rings_are_fusion_rings(k in 1u32..=16) {
        let r = su2_ring(k).unwrap();
        prop_assert!(verify_axioms(&r).all_passed());
        prop_assert!(contragredient_holds(&r));
        let even = su2_even_part(k).unwrap();
        prop_assert!(verify_axioms(&even).all_passed());
    }

    #[test]
    fn pf_dimensions_recover_quantum_integers(k in 1u32..=12) {
        let r = su2_ring(k).unwrap();
        let stripped = FusionRing::new(r.name(), r.objects().to_vec(), 0, r.duals().to_vec(), r.constants(), None).unwrap();
        prop_assert_eq!(stripped.dims(), r.dims());
    }

    #[test]
    fn relabelled_rings_are_isomorphic(k in 2u32..=8, seed in any::<u64>()) {
        let r = su2_ring(k).unwrap();
        let n = r.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (2..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = 1 + (s >> 33) as usize % i;
            perm.swap(i, j);
        }
        let constants = r.constants().into_iter().map(|(i, j, k, v)| (perm[i], perm[j], perm[k], v));
        let mut dual = vec![0; n];
        let mut dims = vec![AlgReal::zero(); n];
        for i in 0..n {
            dual[perm[i]] = perm[r.dual(i)];
            dims[perm[i]] = r.dim(i).clone();
        }
        let s = FusionRing::new("permuted", r.objects().to_vec(), perm[0], dual, constants, Some(dims)).unwrap();
        prop_assert!(find_isomorphism(&r, &s).is_some());
    }

    #[test]
    fn tensor_products_multiply_dimensions(a in 1u32..=5, b in 1u32..=5) {
        let (r, s) = (su2_ring(a).unwrap(), su2_ring(b).unwrap());
        let t = tensor_ring(&r, &s);
        prop_assert!(verify_axioms(&t).all_passed());
        prop_assert_eq!(t.global_dim(), &r.global_dim() * &s.global_dim());
    }
}

#[test]
fn d2n_even_parts_have_half_dimension_and_are_unique() {
    for n in 2..=12 {
        let rings = d2n_even_ring_candidates(n).unwrap();
        assert_eq!(rings.len(), 1, "n = {n}");
        let r = &rings[0];
        assert!(verify_axioms(r).all_passed());
        // The even spins of SU(2)_{4n-4} have half its global dimension; the
        // extension by an order-two current divides that by two again.
        let parent = su2_ring(4 * n - 4).unwrap();
        assert_eq!(&r.global_dim() * &AlgReal::from_integer(4), parent.global_dim(), "n = {n}");
    }
}

#[test]
fn ring_files_load_from_disk() {
    let dir = std::env::temp_dir().join(format!("ade-fusion-ring-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d6.json");
    let r = d2n_even_ring(3).unwrap();
    std::fs::write(&path, serde_json::to_string_pretty(&r).unwrap()).unwrap();
    assert_eq!(load_ring(&path).unwrap(), r);
    assert!(matches!(load_ring(&dir.join("absent.json")), Err(ade_fusion::Error::MissingData { .. })));
    std::fs::remove_dir_all(&dir).unwrap();
}
