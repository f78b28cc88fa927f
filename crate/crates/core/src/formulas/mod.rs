//! Closed-form counts of symmetric recurrents, and the identities
//! tying them to determinants.

mod block;
mod chebyshev;
pub mod dd;

pub use block::{
    a_matrix, a_prime_matrix, assemble_block_tridiag, b_matrix, b_prime_matrix, block_triple, block_tridiag_det,
};
pub use chebyshev::{chebyshev_t, chebyshev_u, ChebyshevRing, Poly};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use dd::{cos_pi, sin_pi, Dd};

/// Parities of the grid's row and column counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    EvenEven,
    EvenOdd,
    OddOdd,
}

impl Parity {
    pub const ALL: [Parity; 3] = [Parity::EvenEven, Parity::EvenOdd, Parity::OddOdd];

    /// Grid size whose Klein quotient has an m x n representative block.
    pub fn grid_dims(self, m: usize, n: usize) -> (usize, usize) {
        match self {
            Parity::EvenEven => (2 * m, 2 * n),
            Parity::EvenOdd => (2 * m, 2 * n - 1),
            Parity::OddOdd => (2 * m - 1, 2 * n - 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::EvenEven => "even_even",
            Parity::EvenOdd => "even_odd",
            Parity::OddOdd => "odd_odd",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    Product,
    Chebyshev,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigKind {
    Xi,
    Zeta,
    Mu,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrigParameter {
    pub kind: TrigKind,
    pub h: i64,
    pub d: i64,
    pub value: Dd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    T,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralRoot {
    pub kind: RootKind,
    pub h: i64,
    pub m: i64,
    pub value: Dd,
}

/// cos(h pi / (2d+1)).
pub fn xi(h: i64, d: i64) -> TrigParameter {
    TrigParameter { kind: TrigKind::Xi, h, d, value: cos_pi(h, 2 * d + 1) }
}

/// cos((2h-1) pi / (4d)).
pub fn zeta(h: i64, d: i64) -> TrigParameter {
    TrigParameter { kind: TrigKind::Zeta, h, d, value: cos_pi(2 * h - 1, 4 * d) }
}

/// sin((4h-1) pi / (4d)).
pub fn mu(h: i64, d: i64) -> TrigParameter {
    TrigParameter { kind: TrigKind::Mu, h, d, value: sin_pi(4 * h - 1, 4 * d) }
}

/// 2 cos((2h+1) pi / (2m+1)).
pub fn t_root(h: i64, m: i64) -> SpectralRoot {
    SpectralRoot { kind: RootKind::T, h, m, value: cos_pi(2 * h + 1, 2 * m + 1).mul_f64(2.0) }
}

/// cos((2h-1) pi / (2m)).
pub fn s_root(h: i64, m: i64) -> SpectralRoot {
    SpectralRoot { kind: RootKind::S, h, m, value: cos_pi(2 * h - 1, 2 * m) }
}

/// Evaluations past this magnitude no longer resolve integers.
const MAX_EXACT: f64 = 1.0e27;

/// Nearest integer to `v`, refusing values that are not close to one.
pub fn round_checked(v: Dd) -> Result<BigInt> {
    let raw = v.to_f64();
    if !raw.is_finite() || !(-MAX_EXACT..=MAX_EXACT).contains(&raw) {
        return Err(Error::PrecisionExhausted { raw });
    }
    let mut whole = v.hi as i128;
    let mut rem = (v - Dd::from_i128(whole)).to_f64();
    whole += rem as i128;
    rem = (v - Dd::from_i128(whole)).to_f64();
    let step: i128 = if rem >= 0.5 {
        1
    } else if rem <= -0.5 {
        -1
    } else {
        0
    };
    let residue = rem - step as f64;
    let residue = if residue < 0.0 { -residue } else { residue };
    let scale = if raw > 1.0 { raw } else if raw < -1.0 { -raw } else { 1.0 };
    if residue > 1e-6 * scale || residue > 0.25 {
        return Err(Error::Rounding { raw, residue });
    }
    Ok(BigInt::from(whole + step))
}

fn param_sq(kind: TrigKind, h: usize, d: usize) -> Dd {
    let (h, d) = (h as i64, d as i64);
    match kind {
        TrigKind::Xi => xi(h, d).value.square(),
        TrigKind::Zeta => zeta(h, d).value.square(),
        TrigKind::Mu => mu(h, d).value.square(),
    }
}

fn double_product(m: usize, n: usize, row: TrigKind, col: TrigKind) -> Dd {
    let mut acc = Dd::ONE;
    for h in 1..=m {
        let a = param_sq(row, h, m).mul_f64(4.0);
        for k in 1..=n {
            acc = acc * (a + param_sq(col, k, n).mul_f64(4.0));
        }
    }
    acc
}

fn check_mn(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    Ok(())
}

/// Floating evaluation of a closed form before rounding.
pub fn closed_form_raw(parity: Parity, m: usize, n: usize, form: Form) -> Result<Dd> {
    check_mn(m, n)?;
    Ok(match (parity, form) {
        (Parity::EvenEven, Form::Product) => double_product(m, n, TrigKind::Xi, TrigKind::Xi),
        (Parity::EvenOdd, Form::Product) => double_product(m, n, TrigKind::Xi, TrigKind::Zeta),
        (Parity::OddOdd, Form::Product) => double_product(m, n, TrigKind::Zeta, TrigKind::Zeta),
        (Parity::EvenEven, Form::Chebyshev) => {
            // (-1)^n U_{2n}(i x) = q(x^2) where q has the absolute values of
            // the even coefficients of U_{2n}; no sign cancellation.
            let u = chebyshev_u(2 * n as i64, &Poly::x())?;
            let q = u.even_part().expect("U_{2n} is even").abs();
            (1..=m).fold(Dd::ONE, |acc, h| acc * q.eval_dd(param_sq(TrigKind::Xi, h, m)))
        }
        (Parity::EvenOdd | Parity::OddOdd, Form::Chebyshev) => {
            let kind = if parity == Parity::EvenOdd { TrigKind::Xi } else { TrigKind::Zeta };
            (1..=m).fold(Dd::ONE, |acc, h| {
                let x = Dd::ONE + param_sq(kind, h, m).mul_f64(2.0);
                acc * chebyshev_t(n, &x).mul_f64(2.0)
            })
        }
    })
}

/// Symmetric-recurrent count from its trigonometric or Chebyshev form.
pub fn closed_form_count(parity: Parity, m: usize, n: usize, form: Form) -> Result<BigInt> {
    round_checked(closed_form_raw(parity, m, n, form)?)
}

/// Product over 4 xi^2 + 4 mu^2 counting tilings of the 2m x 2n
/// Mobius board.
pub fn lu_wu_count(m: usize, n: usize) -> Result<BigInt> {
    check_mn(m, n)?;
    round_checked(double_product(m, n, TrigKind::Xi, TrigKind::Mu))
}

/// chi_j = (4 - x) chi_{j-1} - chi_{j-2} with the parity's seeds.
pub fn characteristic_recurrence<R: ChebyshevRing>(parity: Parity, n: usize, x: &R) -> R {
    let (c0, c1) = match parity {
        Parity::EvenEven => (x.ring_int(1), x.ring_int(3).ring_sub(x)),
        Parity::EvenOdd | Parity::OddOdd => (x.ring_int(2), x.ring_int(4).ring_sub(x)),
    };
    if n == 0 {
        return c0;
    }
    let step = x.ring_int(4).ring_sub(x);
    let (mut a, mut b) = (c0, c1);
    for _ in 1..n {
        let c = step.ring_mul(&b).ring_sub(&a);
        a = b;
        b = c;
    }
    b
}
