use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use sandpile_core::graph::grid_sandpile;
use sandpile_core::linalg::{denominator_lcm, det, solve_exact, RationalVector};
use sandpile_core::{Error, IntMatrix};

fn mat(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

#[test]
fn det_small_examples() {
    assert_eq!(det(&mat(&[&[2, -1], &[-2, 2]])).unwrap(), BigInt::from(2));
    for n in 0..6 {
        assert_eq!(det(&IntMatrix::identity(n)).unwrap(), BigInt::from(1));
    }
    assert_eq!(det(&mat(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
    assert_eq!(det(&mat(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::from(0));
}

#[test]
fn det_of_grid_laplacians() {
    let l = grid_sandpile(4, 4).unwrap().reduced_laplacian();
    assert_eq!(det(&l).unwrap(), BigInt::from(557_568_000u64));
    let l = grid_sandpile(2, 2).unwrap().reduced_laplacian();
    assert_eq!(det(&l).unwrap(), BigInt::from(192));
}

#[test]
fn det_rejects_rectangles() {
    let m = IntMatrix::zeros(2, 3);
    assert_eq!(det(&m), Err(Error::NotSquare { rows: 2, cols: 3 }));
}

#[test]
fn solve_examples() {
    let x = solve_exact(&mat(&[&[2, -1], &[-2, 2]]), &ints(&[2, 2])).unwrap();
    assert_eq!(x, RationalVector::from_integers(&ints(&[3, 4])));
    let b = ints(&[5, -7, 0, 11]);
    let x = solve_exact(&IntMatrix::identity(4), &b).unwrap();
    assert_eq!(x, RationalVector::from_integers(&b));
    let l = grid_sandpile(2, 3).unwrap().reduced_laplacian();
    let x = solve_exact(&l, &ints(&[2; 6])).unwrap();
    assert_eq!(denominator_lcm(&x), BigInt::from(7));
}

#[test]
fn solve_rejects_singular() {
    assert_eq!(solve_exact(&mat(&[&[1, 2], &[2, 4]]), &ints(&[1, 1])), Err(Error::Singular));
}

#[test]
fn lcm_examples() {
    assert_eq!(denominator_lcm(&RationalVector(vec![q(3, 1), q(4, 1)])), BigInt::from(1));
    assert_eq!(denominator_lcm(&RationalVector(vec![q(1, 2), q(1, 3)])), BigInt::from(6));
    assert_eq!(denominator_lcm(&RationalVector(vec![q(7, 7), q(5, 7)])), BigInt::from(7));
    assert_eq!(denominator_lcm(&RationalVector(vec![])), BigInt::from(1));
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-9i64..=9, n), n)
}

proptest! {
    #[test]
    fn det_matches_cofactor_expansion(m in square(5)) {
        let got = det(&IntMatrix::from_rows(&m).unwrap()).unwrap();
        prop_assert_eq!(got, BigInt::from(cofactor_det(&m)));
    }

    #[test]
    fn det_of_transpose_and_product(a in square(4), b in square(4)) {
        let (a, b) = (IntMatrix::from_rows(&a).unwrap(), IntMatrix::from_rows(&b).unwrap());
        prop_assert_eq!(det(&a).unwrap(), det(&a.transpose()).unwrap());
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(det(&ab).unwrap(), det(&a).unwrap() * det(&b).unwrap());
    }

    #[test]
    fn solve_has_zero_residual(m in square(5), b in prop::collection::vec(-20i64..=20, 5)) {
        let a = IntMatrix::from_rows(&m).unwrap();
        let b = ints(&b);
        match solve_exact(&a, &b) {
            Ok(x) => {
                prop_assert!(x.entries().iter().all(|r| r.denom() > &BigInt::from(0)));
                let k = denominator_lcm(&x);
                let kx: Vec<BigInt> = x.entries().iter().map(|r| r.numer() * (&k / r.denom())).collect();
                let lhs = a.mul_vec(&kx).unwrap();
                let rhs: Vec<BigInt> = b.iter().map(|v| v * &k).collect();
                prop_assert_eq!(lhs, rhs);
            }
            Err(e) => {
                prop_assert_eq!(e, Error::Singular);
                prop_assert_eq!(cofactor_det(&m), 0);
            }
        }
    }
}
