use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use sandpile_core::engine::config_order;
use sandpile_core::formulas::lu_wu_count;
use sandpile_core::graph::{
    board_graph, d_family, diamond_graph, family_embedding, grid_sandpile, p_graph, BoardKind, DKind, EmbeddedEdge,
    End, Family, Label, PlanarEmbedding, Side,
};
use sandpile_core::linalg::det;
use sandpile_core::symmetry::{klein_action, symmetrized_laplacian};
use sandpile_core::tilings::{
    a_seq, count_matchings, embedded_spanning_trees, enumerate_matchings, enumerate_spanning_trees, pn_diagonal_config,
    pn_distance_config, pn_embed, spanning_tree_weight_sum, temperley_matching, temperley_matching_in,
};
use sandpile_core::{Error, Node, SandpileGraph};

fn klein_det(rows: usize, cols: usize) -> BigInt {
    let g = grid_sandpile(rows, cols).unwrap();
    det(&symmetrized_laplacian(&g, &klein_action(rows, cols).unwrap())).unwrap()
}

fn board_count(kind: BoardKind, rows: usize, cols: usize) -> BigInt {
    count_matchings(&board_graph(kind, rows, cols).unwrap()).unwrap().into()
}

fn laplacian_apply(g: &SandpileGraph, c: &[i64]) -> Vec<BigInt> {
    // Firing vectors are the rows of the row-convention Laplacian.
    let l = g.reduced_laplacian().transpose();
    let v: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
    l.mul_vec(&v).unwrap()
}

#[test]
fn matching_count_examples() {
    assert_eq!(board_count(BoardKind::Plain, 4, 4), BigInt::from(36));
    assert_eq!(board_count(BoardKind::MobiusWeighted, 5, 2), BigInt::from(41));
    assert_eq!(board_count(BoardKind::Mobius, 4, 4), BigInt::from(71));
    assert_eq!(board_count(BoardKind::Plain, 3, 3), BigInt::from(0));
    assert_eq!(board_count(BoardKind::Plain, 8, 8), BigInt::from(12_988_816));
    let weights: Vec<u64> = {
        let mut w: Vec<u64> = enumerate_matchings(&board_graph(BoardKind::MobiusWeighted, 5, 2).unwrap(), 100)
            .unwrap()
            .iter()
            .map(|m| u64::try_from(&m.weight).unwrap())
            .collect();
        w.sort_unstable();
        w
    };
    assert_eq!(weights, [2, 2, 3, 4, 6, 6, 6, 12]);
}

#[test]
fn matching_enumeration_examples() {
    let plain = enumerate_matchings(&board_graph(BoardKind::Plain, 2, 2).unwrap(), 100).unwrap();
    assert_eq!(plain.len(), 2);
    assert!(plain.iter().all(|m| m.weight == BigUint::from(1u8)));

    let b = board_graph(BoardKind::MobiusWeighted, 4, 4).unwrap();
    let ms = enumerate_matchings(&b, 100).unwrap();
    assert_eq!(ms.len(), 36);
    assert_eq!(ms.iter().map(|m| &m.weight).sum::<BigUint>(), BigUint::from(71u8));
    assert!(ms.iter().all(|m| m.is_perfect_in(&b)));

    let ms = enumerate_matchings(&board_graph(BoardKind::TwoWeighted, 2, 2).unwrap(), 100).unwrap();
    assert_eq!(ms.iter().map(|m| u64::try_from(&m.weight).unwrap()).collect::<Vec<_>>(), [2, 2]);

    let err = enumerate_matchings(&board_graph(BoardKind::Plain, 4, 4).unwrap(), 10).unwrap_err();
    assert!(matches!(err, Error::CapExceeded { .. }));
    assert!(count_matchings(&board_graph(BoardKind::Plain, 30, 30).unwrap()).is_err());
}

#[test]
fn enumeration_agrees_with_dp() {
    let kinds = [BoardKind::Plain, BoardKind::Mobius, BoardKind::MobiusWeighted, BoardKind::TwoWeighted];
    let mut boards = 0;
    for kind in kinds {
        for rows in 1..=28 {
            for cols in 1..=28 / rows {
                let Ok(b) = board_graph(kind, rows, cols) else { continue };
                let ms = enumerate_matchings(&b, 1_000_000).unwrap();
                let sum: BigUint = ms.iter().map(|m| &m.weight).sum();
                assert_eq!(sum, count_matchings(&b).unwrap(), "{kind:?} {rows}x{cols}");
                assert_eq!(ms.iter().collect::<BTreeSet<_>>().len(), ms.len());
                boards += 1;
            }
        }
    }
    assert!(boards > 100);
}

#[test]
fn even_even_chain() {
    for m in 1..=5 {
        for n in 1..=5 {
            assert_eq!(klein_det(2 * m, 2 * n), board_count(BoardKind::Plain, 2 * m, 2 * n), "{m}x{n}");
        }
    }
}

#[test]
fn even_odd_chain() {
    for m in 1..=4 {
        for n in 1..=4 {
            let want = klein_det(2 * m, 2 * n - 1);
            assert_eq!(lu_wu_count(m, n).unwrap(), want);
            assert_eq!(board_count(BoardKind::Mobius, 2 * m, 2 * n), want, "mobius {m}x{n}");
            assert_eq!(board_count(BoardKind::MobiusWeighted, 2 * m, 2 * n), want, "weighted {m}x{n}");
            if n == 1 {
                assert_eq!(board_count(BoardKind::MobiusWeighted, 2 * m - 1, 2), want);
            }
        }
    }
    assert_eq!(klein_det(4, 3), BigInt::from(71));
    assert_eq!(klein_det(6, 1), BigInt::from(41));
}

#[test]
fn odd_odd_chain() {
    for m in 1..=4 {
        for n in 1..=4 {
            assert_eq!(klein_det(2 * m - 1, 2 * n - 1), board_count(BoardKind::TwoWeighted, 2 * m, 2 * n));
        }
    }
    assert_eq!(klein_det(1, 1), BigInt::from(4));
}

#[test]
fn spanning_tree_examples() {
    let sum = |g: &SandpileGraph| spanning_tree_weight_sum(g).unwrap();
    assert_eq!(sum(&d_family(DKind::D, 1, 1).unwrap()), BigUint::from(2u8));
    assert_eq!(sum(&d_family(DKind::D, 2, 2).unwrap()), BigUint::from(36u8));
    assert_eq!(enumerate_spanning_trees(&diamond_graph()).unwrap().len(), 8);
    assert!(matches!(enumerate_spanning_trees(&grid_sandpile(4, 4).unwrap()), Err(Error::TooLarge(_))));
}

#[test]
fn matrix_tree_on_small_families() {
    let mut graphs = vec![diamond_graph()];
    for m in 1..=12 {
        for n in 1..=12 / m {
            graphs.push(grid_sandpile(m, n).unwrap());
            for kind in [DKind::D, DKind::Dprime, DKind::Ddoubleprime] {
                if let Ok(g) = d_family(kind, m, n) {
                    graphs.push(g);
                }
            }
        }
    }
    graphs.extend((1..=4).map(|n| p_graph(n).unwrap()));
    for g in &graphs {
        let d = det(&g.reduced_laplacian()).unwrap();
        assert_eq!(BigInt::from(spanning_tree_weight_sum(g).unwrap()), d);
    }
}

fn small_example() -> PlanarEmbedding {
    let v = |i| End::Vertex(i);
    let (mt, mb) = (Side::Face(0), Side::Face(1));
    let edge = |a, b, wa, wb, f: [Side; 2], pos| EmbeddedEdge { ends: [a, b], weights: [wa, wb], faces: f, pos };
    // v1 v2 v3 along the left, v5 v6 to their right, sink below.
    let edges = vec![
        edge(v(0), v(1), 1, 0, [Side::Outer, Side::Outer], (0, 3)),
        edge(v(1), v(2), 1, 2, [mt, Side::Outer], (0, 1)),
        edge(v(1), v(3), 5, 2, [mt, Side::Outer], (1, 2)),
        edge(v(3), v(4), 3, 3, [mt, Side::Outer], (2, 1)),
        edge(v(2), v(4), 1, 1, [mt, mb], (1, 0)),
        edge(v(2), End::Sink, 1, 2, [mb, Side::Outer], (0, -1)),
        edge(v(4), End::Sink, 2, 0, [mb, Side::Outer], (2, -1)),
    ];
    let labels = ["v1", "v2", "v3", "v5", "v6"].map(|s| Label::Named(s.into())).to_vec();
    PlanarEmbedding::new(labels, vec![(0, 4), (0, 2), (0, 0), (2, 2), (2, 0)], edges, vec![(1, 1), (1, -2)]).unwrap()
}

#[test]
fn temperley_small_example() {
    let emb = small_example();
    let trees = embedded_spanning_trees(&emb).unwrap();
    let g = emb.sandpile_graph().unwrap();
    assert_eq!(
        trees.iter().map(|t| &t.weight).sum::<BigUint>(),
        BigUint::try_from(det(&g.reduced_laplacian()).unwrap()).unwrap()
    );
    let want = [Node::Vertex(1), Node::Vertex(3), Node::Sink, Node::Vertex(4), Node::Sink];
    let tree = trees.iter().find(|t| t.parents == want).unwrap();
    assert_eq!(tree.weight, BigUint::from(30u8));
    let m = temperley_matching_in(&emb, tree).unwrap();
    assert_eq!(m.weight, BigUint::from(30u8));
    let h = emb.h_graph().unwrap();
    assert!(m.is_perfect_in(&h));
    let expect: BTreeSet<_> = [
        ((0, 3), (0, 4)),
        ((0, 2), (1, 2)),
        ((2, 1), (2, 2)),
        ((0, -1), (0, 0)),
        ((2, -1), (2, 0)),
        ((0, 1), (1, 1)),
        ((1, -2), (1, 0)),
    ]
    .into();
    assert_eq!(m.edges.iter().copied().collect::<BTreeSet<_>>(), expect);
}

fn check_bijection(family: Family) {
    let emb = family_embedding(family).unwrap();
    let h = emb.h_graph().unwrap();
    let trees = embedded_spanning_trees(&emb).unwrap();
    let mut image = BTreeSet::new();
    for t in &trees {
        let m = temperley_matching(family, t).unwrap();
        assert!(m.is_perfect_in(&h), "{family:?}");
        assert_eq!(m.weight, t.weight);
        image.insert(m);
    }
    assert_eq!(image.len(), trees.len(), "{family:?} not injective");
    let all = enumerate_matchings(&h, 1_000_000).unwrap();
    assert_eq!(all.len(), image.len(), "{family:?} not onto");
    let total: BigUint = image.iter().map(|m| &m.weight).sum();
    assert_eq!(total, count_matchings(&h).unwrap());
}

#[test]
fn temperley_bijection_on_families() {
    for m in 1..=6 {
        for n in 1..=6 / m {
            for kind in [DKind::D, DKind::Dprime, DKind::Ddoubleprime] {
                if family_embedding(Family::from_kind(kind, m, n)).is_ok() {
                    check_bijection(Family::from_kind(kind, m, n));
                }
            }
        }
    }
    for n in 1..=3 {
        check_bijection(Family::P(n));
    }
    let d22 = family_embedding(Family::D(2, 2)).unwrap();
    assert_eq!(embedded_spanning_trees(&d22).unwrap().len(), 36);
    let d11 = embedded_spanning_trees(&family_embedding(Family::D(1, 1)).unwrap()).unwrap();
    assert_eq!(d11.len(), 2);
}

#[test]
fn temperley_rejects_foreign_trees() {
    let emb = family_embedding(Family::D(2, 2)).unwrap();
    let mut tree = embedded_spanning_trees(&emb).unwrap().remove(0);
    assert!(temperley_matching(Family::D(1, 2), &tree).is_err());
    tree.edges = None;
    assert!(matches!(temperley_matching(Family::D(2, 2), &tree), Err(Error::NotSpanning)));
}

#[test]
fn a_sequence() {
    let want = [1u64, 3, 29, 901, 89893, 28793575];
    for (n, &a) in (1..).zip(&want) {
        assert_eq!(a_seq(n).unwrap(), BigInt::from(a));
    }
    for n in 1..=5 {
        let a = a_seq(n).unwrap();
        assert_eq!(&a % 2u8, BigInt::from(1));
        assert_eq!(board_count(BoardKind::Plain, 2 * n, 2 * n), (BigInt::from(1) << n) * &a * &a);
    }
}

#[test]
fn phi_layout() {
    let letters: Vec<char> = "abcdefghij".chars().collect();
    let grid = pn_embed(4, &letters).unwrap();
    let rows = ["jigddgij", "ihfccfhi", "gfebbefg", "dcbaabcd", "dcbaabcd", "gfebbefg", "ihfccfhi", "jigddgij"];
    let got: Vec<String> = grid.chunks(8).map(|r| r.iter().collect()).collect();
    assert_eq!(got, rows);
    assert!(pn_embed(4, &letters[..9]).is_err());
}

#[test]
fn phi_laplacian_compatibility() {
    for n in 1..=6 {
        let p = p_graph(n).unwrap();
        let grid = grid_sandpile(2 * n, 2 * n).unwrap();
        let size = n * (n + 1) / 2;
        for seed in 0..5i64 {
            let c: Vec<i64> = (0..size as i64).map(|k| (k * 7 + seed * 3) % 5 - 2).collect();
            let lhs = laplacian_apply(&grid, &pn_embed(n, &c).unwrap());
            let rhs = pn_embed(n, &laplacian_apply(&p, &c)).unwrap();
            for i in 0..2 * n {
                for j in 0..2 * n {
                    let k = i * 2 * n + j;
                    let factor = if i == j || i + j == 2 * n - 1 { 2 } else { 1 };
                    assert_eq!(lhs[k], &rhs[k] * factor, "n={n} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn special_configs_and_orders() {
    for n in 1..=6 {
        let p = p_graph(n).unwrap();
        let t: Vec<BigInt> = pn_diagonal_config(n).into_iter().map(BigInt::from).collect();
        assert_eq!(laplacian_apply(&p, &pn_distance_config(n)), t, "n={n}");

        let grid = grid_sandpile(2 * n, 2 * n).unwrap();
        let twos = |k: usize| vec![BigInt::from(2); k];
        let grid_order = config_order(&grid, &twos(4 * n * n)).unwrap();
        let p_order = config_order(&p, &twos(n * (n + 1) / 2)).unwrap();
        assert_eq!(grid_order, p_order);
        assert_eq!(a_seq(n).unwrap() % &grid_order, BigInt::from(0));
    }
    assert_eq!(pn_distance_config(4), [4, 3, 2, 1, 3, 2, 1, 2, 1, 1]);
}
