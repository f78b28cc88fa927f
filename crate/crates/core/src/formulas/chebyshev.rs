//! Chebyshev polynomials over any commutative ring with unity.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::dd::Dd;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Minimal ring interface for the recurrences.
pub trait ChebyshevRing: Clone {
    /// `k` times the unit of the ring `self` lives in.
    fn ring_int(&self, k: i64) -> Self;
    fn ring_add(&self, o: &Self) -> Self;
    fn ring_sub(&self, o: &Self) -> Self;
    fn ring_mul(&self, o: &Self) -> Self;
}

macro_rules! ops_ring {
    ($t:ty, $from:expr) => {
        impl ChebyshevRing for $t {
            fn ring_int(&self, k: i64) -> Self {
                $from(k)
            }
            fn ring_add(&self, o: &Self) -> Self {
                self.clone() + o.clone()
            }
            fn ring_sub(&self, o: &Self) -> Self {
                self.clone() - o.clone()
            }
            fn ring_mul(&self, o: &Self) -> Self {
                self.clone() * o.clone()
            }
        }
    };
}

ops_ring!(BigInt, BigInt::from);
ops_ring!(BigRational, |k: i64| BigRational::from_integer(k.into()));
ops_ring!(f64, |k: i64| k as f64);
ops_ring!(Dd, Dd::from);

impl ChebyshevRing for IntMatrix {
    fn ring_int(&self, k: i64) -> Self {
        IntMatrix::scalar(self.rows(), k)
    }
    fn ring_add(&self, o: &Self) -> Self {
        self.checked_add(o).expect("square matrices of one size")
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self.checked_sub(o).expect("square matrices of one size")
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self.checked_mul(o).expect("square matrices of one size")
    }
}

/// Integer polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn x() -> Poly {
        Poly::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval<R: ChebyshevRing>(&self, x: &R) -> R {
        let mut acc = x.ring_int(0);
        for c in self.0.iter().rev() {
            let k = i64::try_from(c).expect("coefficient fits in i64");
            acc = acc.ring_mul(x).ring_add(&x.ring_int(k));
        }
        acc
    }

    pub fn eval_dd(&self, x: Dd) -> Dd {
        self.0.iter().rev().fold(Dd::ZERO, |acc, c| acc * x + Dd::from_bigint(c))
    }

    /// Coefficients replaced by their absolute values.
    pub fn abs(&self) -> Poly {
        Poly(self.0.iter().map(Signed::abs).collect())
    }

    /// q with q(x^2) = self(x); None if an odd coefficient is nonzero.
    pub fn even_part(&self) -> Option<Poly> {
        if self.0.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(self.0.iter().step_by(2).cloned().collect()))
    }
}

impl ChebyshevRing for Poly {
    fn ring_int(&self, k: i64) -> Self {
        Poly::from_i64(&[k])
    }
    fn ring_add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).cloned().unwrap_or_default();
        Poly::new((0..n).map(|i| get(self, i) + get(o, i)).collect())
    }
    fn ring_sub(&self, o: &Self) -> Self {
        let neg = Poly(o.0.iter().map(|c| -c).collect());
        self.ring_add(&neg)
    }
    fn ring_mul(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return Poly::default();
        }
        let mut out = alloc::vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

fn three_term<R: ChebyshevRing>(j: usize, x: &R, p0: R, p1: R) -> R {
    if j == 0 {
        return p0;
    }
    let two_x = x.ring_add(x);
    let (mut a, mut b) = (p0, p1);
    for _ in 1..j {
        let c = two_x.ring_mul(&b).ring_sub(&a);
        a = b;
        b = c;
    }
    b
}

/// T_j(x), first kind.
pub fn chebyshev_t<R: ChebyshevRing>(j: usize, x: &R) -> R {
    three_term(j, x, x.ring_int(1), x.clone())
}

/// U_j(x), second kind, with U_{-1} = 0.
pub fn chebyshev_u<R: ChebyshevRing>(j: i64, x: &R) -> Result<R> {
    match j {
        -1 => Ok(x.ring_int(0)),
        j if j < -1 => Err(Error::InvalidArgument("U_j needs j >= -1".into())),
        j => Ok(three_term(j as usize, x, x.ring_int(1), x.ring_add(x))),
    }
}
