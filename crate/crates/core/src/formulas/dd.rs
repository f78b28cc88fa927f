//! Double-double floats: an unevaluated sum hi + lo with about 106
//! significant bits.

use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

// hi and lo of pi.
pub const PI: Dd = Dd { hi: core::f64::consts::PI, lo: 1.224_646_799_147_353_2e-16 };

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn split(a: f64) -> (f64, f64) {
    let t = 134_217_729.0 * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn from_i128(x: i128) -> Dd {
        let hi = x as f64;
        let rest = x - hi as i128;
        let (hi, lo) = quick_two_sum(hi, rest as f64);
        Dd { hi, lo }
    }

    pub fn from_bigint(x: &BigInt) -> Dd {
        let hi = x.to_f64().unwrap_or(f64::INFINITY);
        if !hi.is_finite() {
            return Dd::new(hi);
        }
        let rest = x - BigInt::from(hi as i128);
        Dd::new(hi) + Dd::new(rest.to_f64().unwrap_or(0.0))
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 { -self } else { self }
    }

    pub fn square(self) -> Dd {
        self * self
    }

    pub fn mul_f64(self, k: f64) -> Dd {
        self * Dd::new(k)
    }
}

impl From<i64> for Dd {
    fn from(x: i64) -> Dd {
        Dd::from_i128(i128::from(x))
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * o.lo + self.lo * o.hi));
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o.mul_f64(q1);
        let q2 = r.hi / o.hi;
        let r = r - o.mul_f64(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, o: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&o.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&o.lo),
            other => other,
        }
    }
}

// Taylor series for |x| <= pi/4.
fn sin_cos_small(x: Dd) -> (Dd, Dd) {
    let x2 = -x.square();
    let (mut s, mut c) = (x, Dd::ONE);
    let (mut ts, mut tc) = (x, Dd::ONE);
    let mut k = 1.0;
    while tc.hi.abs() > 1e-36 || ts.hi.abs() > 1e-36 {
        tc = tc * x2 / Dd::new(k * (k + 1.0));
        ts = ts * x2 / Dd::new((k + 1.0) * (k + 2.0));
        c = c + tc;
        s = s + ts;
        k += 2.0;
    }
    (s, c)
}

/// cos(p pi / q) for q > 0.
pub fn cos_pi(p: i64, q: i64) -> Dd {
    assert!(q > 0, "denominator must be positive");
    let mut p = p.rem_euclid(2 * q);
    if p > q {
        p = 2 * q - p;
    }
    if 2 * p > q {
        return -cos_pi(q - p, q);
    }
    if 4 * p > q {
        // cos(t) = sin(pi/2 - t)
        let theta = PI * Dd::from(q - 2 * p) / Dd::from(2 * q);
        return sin_cos_small(theta).0;
    }
    sin_cos_small(PI * Dd::from(p) / Dd::from(q)).1
}

/// sin(p pi / q) for q > 0.
pub fn sin_pi(p: i64, q: i64) -> Dd {
    cos_pi(q - 2 * p, 2 * q)
}
