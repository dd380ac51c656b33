use super::*;
use crate::fusion::{su2_even_part, su2_ring};

#[test]
fn product_double_of_fibonacci() {
    let fib = fusion::fibonacci_ring();
    let d = product_double(&fib);
    assert_eq!(d.rank(), 4);
    assert!(d.invariants().all_hold());
    let tt = d.index_of("(σ,σ)").unwrap();
    assert_eq!(d.edge_rows()[tt], vec![1, 1]);
}

fn a5() -> DoubleSystem {
    a_odd_double(2).unwrap()
}

#[test]
fn a5_double_shape() {
    let d = a5();
    assert_eq!(d.rank(), 8);
    let mut dims: Vec<i64> =
        d.ring().dims().iter().map(|x| x.to_rational().unwrap().to_integer().try_into().unwrap()).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 1, 2, 2, 2, 2, 3, 3]);
    assert_eq!(d.ring().global_dim(), AlgReal::from_integer(36));
    assert_eq!(d.base().global_dim(), AlgReal::from_integer(6));
    let minus = d.index_of("(2,2)_-").unwrap();
    let plus = d.index_of("(2,2)_+").unwrap();
    assert_eq!(d.edge_rows()[minus], vec![0, 1, 0]);
    assert_eq!(d.edge_rows()[plus], vec![1, 0, 1]);
}

#[test]
fn a3_double_is_pointed() {
    let d = a_odd_double(1).unwrap();
    assert_eq!(d.rank(), 4);
    assert!(d.ring().dims().iter().all(|x| *x == AlgReal::one()));
}

#[test]
fn a_odd_double_dimension_formula() {
    for n in 1..=6u32 {
        let d = a_odd_double(n).unwrap();
        let h = 2 * n + 2;
        let su2 = su2_ring(2 * n).unwrap();
        for (beta, label) in d.labels().iter().enumerate() {
            let expected = match label {
                DoubleLabel::Pair { j, k } => {
                    let (j, k): (usize, usize) = (j.parse().unwrap(), k.parse().unwrap());
                    su2.dim(j) * su2.dim(k)
                }
                DoubleLabel::Split { .. } => {
                    // 1 / (2 sin²(π/h)) = 2 / (4 − 4cos²(π/h))
                    let s = &AlgReal::from_integer(4) - &AlgReal::four_cos_sq(h).unwrap();
                    AlgReal::from_integer(2).checked_div(&s).unwrap()
                }
            };
            assert_eq!(d.ring().dim(beta), &expected, "n = {n}, {label}");
        }
        let pairs =
            (0..=2 * n).flat_map(|j| (0..=2 * n).map(move |k| (j, k))).filter(|(j, k)| (j + k) % 2 == 0).count();
        assert_eq!(d.rank(), (pairs - 1) / 2 + 2);
    }
}

#[test]
fn d6_product_double_edges() {
    let delta = fusion::d2n_even_ring(3).unwrap();
    let d = product_double(&delta);
    assert_eq!(d.rank(), 16);
    let pm = d.index_of("(4+,4-)").unwrap();
    assert_eq!(d.edges(pm, delta.index_of("2").unwrap()), 1);
    assert!(d.invariants().all_hold());
}

#[test]
fn fib_product_double_dims() {
    let d = product_double(&su2_even_part(3).unwrap());
    let phi = AlgReal::golden_ratio();
    let mut dims = d.ring().dims().to_vec();
    dims.sort();
    assert_eq!(dims, vec![AlgReal::one(), phi.clone(), phi.clone(), &phi * &phi]);
}

#[test]
fn bundled_e6_double() {
    let d = exceptional_double(Diagram::E(6), None).unwrap();
    for name in ["(2,0)", "(8,0)", "(1,1)", "(5,1)_1", "(5,1)_2"] {
        assert!(d.index_of(name).is_some(), "{name}");
    }
    let r = d.ring();
    let t = d.index_of("(2,0)").unwrap();
    let prod: Vec<&str> = r.product(t, t).iter().map(|&(k, _)| r.object(k)).collect();
    assert_eq!(prod, vec!["(0,0)", "(2,0)", "(4,0)"]);
    assert!(r.product(t, t).iter().all(|&(_, c)| c == 1));
}

#[test]
fn bundled_files_match_generator() {
    for (diagram, text) in [(Diagram::E(6), E6_DOUBLE_JSON), (Diagram::E(8), E8_DOUBLE_JSON)] {
        let d = exceptional::generate_exceptional_double(diagram).unwrap();
        assert_eq!(d.to_json(), text, "{diagram}");
    }
}

#[test]
fn loader_rejects_broken_restriction() {
    let mut file = parse_double(E6_DOUBLE_JSON).unwrap().to_file();
    let last = file.edges.len() - 1;
    file.edges[last][2] += 1;
    let text = serde_json::to_string(&file).unwrap();
    assert!(matches!(parse_double(&text), Err(Error::Double(_))));
}

#[test]
fn missing_data_file_is_reported() {
    let dir = std::env::temp_dir().join("ade-fusion-no-such-dir");
    assert!(matches!(exceptional_double(Diagram::E(8), Some(&dir)), Err(Error::MissingData { .. })));
}
