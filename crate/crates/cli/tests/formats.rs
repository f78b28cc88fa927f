use num_bigint::BigInt;
use sandpile_cli::json::{big, config_json, graph_from_json, graph_to_json, matching_json, orbit_json};
use sandpile_cli::pgm::{read_pgm, write_pgm};
use sandpile_cli::ReportRow;
use sandpile_core::graph::{d_family, diamond_graph, grid_sandpile, p_graph, DKind};
use sandpile_core::symmetry::klein_action;
use sandpile_core::tilings::Matching;
use serde_json::json;

#[test]
fn graph_round_trip() {
    let graphs = [
        diamond_graph(),
        grid_sandpile(3, 4).unwrap(),
        d_family(DKind::Dprime, 2, 3).unwrap(),
        d_family(DKind::Ddoubleprime, 2, 2).unwrap(),
        p_graph(3).unwrap(),
    ];
    for g in graphs {
        let v = graph_to_json(&g);
        let text = serde_json::to_string(&v).unwrap();
        let back = graph_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, g);
    }
    let v = graph_to_json(&diamond_graph());
    assert_eq!(v["labels"], json!(["u", "v", "w"]));
    assert_eq!(v["sink_edges"], json!([["u", 1], ["v", 1]]));
}

#[test]
fn graph_json_errors() {
    assert!(graph_from_json(&json!({"labels": ["a"], "sink_edges": [], "edges": []})).is_err());
    assert!(graph_from_json(&json!({"labels": ["a"], "sink_edges": [["b", 1]], "edges": []})).is_err());
    assert!(graph_from_json(&json!({"labels": ["a"]})).is_err());
    let g = graph_from_json(&json!({"labels": ["a"], "sink_edges": [["a", 2]], "edges": [[null, "a", 2]]})).unwrap();
    assert!(g.is_undirected());
}

#[test]
fn config_and_orbit_shapes() {
    let g = grid_sandpile(2, 3).unwrap();
    let v = config_json(&g, &[1, 2, 3, 3, 2, 1]);
    assert_eq!(v["rows"], json!([[1, 2, 3], [3, 2, 1]]));
    assert_eq!(config_json(&diamond_graph(), &[2, 2, 0]), json!({"values": [2, 2, 0]}));
    let action = klein_action(2, 3).unwrap();
    let o = orbit_json(&g, &action, &[BigInt::from(4), BigInt::from(5)]);
    assert_eq!(o, json!([{"rep": [1, 1], "value": 4}, {"rep": [1, 2], "value": 5}]));
}

#[test]
fn matching_shape_and_big_numbers() {
    let m = Matching::from_pairs(vec![((1, 2), (1, 1), 1), ((2, 1), (2, 2), 3)]);
    assert_eq!(matching_json(&m), json!([[[1, 1], [1, 2]], [[2, 1], [2, 2]]]));
    let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
    assert_eq!(serde_json::to_string(&big(&huge)).unwrap(), "123456789012345678901234567890");
}

#[test]
fn pgm_round_trip() {
    let text = write_pgm(2, 3, &[0, 1, 2, 3, 2, 1]);
    assert_eq!(text, "P2\n3 2\n3\n0 1 2\n3 2 1\n");
    assert_eq!(read_pgm(&text).unwrap(), (2, 3, vec![0, 1, 2, 3, 2, 1]));
    assert!(read_pgm("P2\n3 2\n3\n0 1 2\n").is_err());
    assert!(read_pgm("P5\n1 1\n3\n0\n").is_err());
}

#[test]
fn report_rows() {
    let mut row = ReportRow::new(2, 2, "even_even");
    row.record("det", Ok::<_, String>(BigInt::from(36)));
    row.record("product", Ok::<_, String>(BigInt::from(36)));
    assert!(row.agree);
    row.record("chebyshev", Err::<BigInt, _>("rounding"));
    assert!(row.agree);
    assert_eq!(row.errors.len(), 1);
    row.check("odd", true);
    assert!(row.agree);
    row.record("tilings", Ok::<_, String>(BigInt::from(35)));
    assert!(!row.agree);
    let mut row = ReportRow::new(1, 1, "p_n");
    row.check("odd", false);
    assert!(!row.agree);
}
