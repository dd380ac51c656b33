use ade_fusion::classify::*;
use ade_fusion::embed::braiding_count;
use ade_fusion::graph::{dynkin, graph_norm_sq, Diagram, GraphNorm};

fn corpus() -> Vec<Diagram> {
    let mut v: Vec<Diagram> = (2..=30).map(Diagram::A).collect();
    v.extend((2..=15).map(|n| Diagram::D(2 * n)));
    v.extend([Diagram::E(6), Diagram::E(8)]);
    v
}

#[test]
fn admissible_set_is_exactly_five() {
    let admissible: Vec<String> = corpus()
        .into_iter()
        .map(|d| section4_verdict(d).unwrap())
        .filter(|v| v.admissible)
        .map(|v| v.diagram)
        .collect();
    assert_eq!(admissible, ["A2", "A3", "A5", "D4", "D6"]);
}

#[test]
fn verdict_invariants() {
    let values = admissible_index_values(&ade_fusion::AlgReal::from_integer(4)).unwrap();
    for d in corpus() {
        let v = section4_verdict(d).unwrap();
        let GraphNorm::Exact(norm) = graph_norm_sq(&dynkin(d).unwrap()).unwrap() else { panic!() };
        assert_eq!(v.index, norm, "{d}");
        if v.admissible {
            assert!(v.realization.is_some());
            assert!(values.iter().any(|x| x.value == v.index), "{d}");
        } else {
            assert!(!v.reasons.is_empty());
            let table_says_no = theta_for_graph(d).map(|(k, t)| !kl_lookup(k, &t)).unwrap_or(false);
            let no_braiding = matches!(d, Diagram::E(_)) && braiding_count(d).unwrap() == 0;
            assert!(table_says_no || no_braiding, "{d}");
        }
    }
}

#[test]
fn odd_d_and_e7_do_not_occur() {
    for d in [Diagram::D(5), Diagram::D(7), Diagram::E(7)] {
        let v = section4_verdict(d).unwrap();
        assert!(!v.admissible);
        assert!(v.reasons[0].claim.contains("does not occur"));
    }
}

#[test]
fn verdict_json_has_reasons() {
    let v = serde_json::to_value(section4_verdict(Diagram::A(9)).unwrap()).unwrap();
    assert_eq!(v["admissible"], false);
    assert_eq!(v["reasons"].as_array().unwrap().len(), 2);
}
