//! The integral module `V(-ell)` over covering quantum sl2: divided-power
//! actions, the anti-linear involution, and the reflection operator `T` with
//! its inverse.  All scalars stay in `Z[q,q^-1]^pi`; divided powers are
//! applied through closed binomial formulas so no division ever happens.

use crate::scalar::{binom2, qp_binom, sgn, GPScalar};
use serde::{Deserialize, Serialize};

/// A vector in `V(-ell)`: coordinates over the basis `b_0, ..., b_ell`,
/// where `b_m` has weight `2m - ell`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VModVec {
    pub ell: u32,
    pub coords: Vec<GPScalar>,
}

impl VModVec {
    pub fn zero(ell: u32) -> Self {
        VModVec { ell, coords: vec![GPScalar::zero(); ell as usize + 1] }
    }

    pub fn basis(ell: u32, m: u32) -> Self {
        let mut v = VModVec::zero(ell);
        v.coords[m as usize] = GPScalar::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &VModVec) -> VModVec {
        assert_eq!(self.ell, other.ell);
        VModVec {
            ell: self.ell,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &GPScalar) -> VModVec {
        VModVec { ell: self.ell, coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// Apply bar to every coordinate (used by anti-linear maps).
    fn bar_coords(&self) -> VModVec {
        VModVec { ell: self.ell, coords: self.coords.iter().map(|a| a.bar()).collect() }
    }
}

/// The coefficient of `E^{(d)} b_m = binom(m+d, d) b_{m+d}`.
pub fn e_div_coeff(_ell: u32, d: u32, m: u32) -> GPScalar {
    qp_binom((m + d) as i64, d as i64)
}

/// The coefficient of `F^{(d)} b_{m+d} = pi^{binom(d,2)+md} binom(ell-m, d) b_m`.
pub fn f_div_coeff(ell: u32, d: u32, m: u32) -> GPScalar {
    qp_binom(ell as i64 - m as i64, d as i64).shift(0, binom2(d as i64) + (m * d) as i64)
}

/// Apply `E^{(d)}`.
pub fn act_e_div(v: &VModVec, d: u32) -> VModVec {
    let ell = v.ell;
    let mut out = VModVec::zero(ell);
    for m in 0..=ell {
        if v.coords[m as usize].is_zero() || m + d > ell {
            continue;
        }
        let c = &e_div_coeff(ell, d, m) * &v.coords[m as usize];
        out.coords[(m + d) as usize] = &out.coords[(m + d) as usize] + &c;
    }
    out
}

/// Apply `F^{(d)}`.
pub fn act_f_div(v: &VModVec, d: u32) -> VModVec {
    let ell = v.ell;
    let mut out = VModVec::zero(ell);
    for m in 0..=ell {
        if v.coords[m as usize].is_zero() || m < d {
            continue;
        }
        let c = &f_div_coeff(ell, d, m - d) * &v.coords[m as usize];
        out.coords[(m - d) as usize] = &out.coords[(m - d) as usize] + &c;
    }
    out
}

/// `E = E^{(1)}`, `F = F^{(1)}`.
pub fn act_e(v: &VModVec) -> VModVec {
    act_e_div(v, 1)
}

pub fn act_f(v: &VModVec) -> VModVec {
    act_f_div(v, 1)
}

/// The anti-linear involution `varpi(b_m) = pi^{m(ell-m)} b_{ell-m}`.
pub fn varpi(v: &VModVec) -> VModVec {
    let ell = v.ell;
    let barred = v.bar_coords();
    let mut out = VModVec::zero(ell);
    for m in 0..=ell {
        let c = barred.coords[m as usize].shift(0, (m * (ell - m)) as i64);
        out.coords[(ell - m) as usize] = &out.coords[(ell - m) as usize] + &c;
    }
    out
}

/// The reflection `T` (forward) on a weight vector: on `b_m` of weight
/// `2m - ell = -k`, apply `sum_d (-q)^d E^{(k+d)} F^{(d)}`.
pub fn t_forward(v: &VModVec) -> VModVec {
    let ell = v.ell;
    let mut out = VModVec::zero(ell);
    for m in 0..=ell {
        if v.coords[m as usize].is_zero() {
            continue;
        }
        let k = ell as i64 - 2 * m as i64; // b_m has weight -k
        let dmin = 0.max(-k) as u32;
        let mut acc = VModVec::zero(ell);
        for d in dmin..=m {
            let piece = act_e_div(
                &act_f_div(&VModVec::basis(ell, m), d),
                (k + d as i64) as u32,
            );
            let qd = GPScalar::monomial(d as i64, 0, sgn(d as i64));
            acc = acc.add(&piece.scale(&qd));
        }
        out = out.add(&acc.scale(&v.coords[m as usize]));
    }
    out
}

/// The inverse reflection: on a weight-`k` vector,
/// `sum_d (-q)^{-d} Fbar^{(k+d)} Ebar^{(d)}` with `Xbar^{(d)} = pi^{binom(d,2)} X^{(d)}`.
pub fn t_inverse(v: &VModVec) -> VModVec {
    let ell = v.ell;
    let mut out = VModVec::zero(ell);
    for m in 0..=ell {
        if v.coords[m as usize].is_zero() {
            continue;
        }
        let k = 2 * m as i64 - ell as i64; // b_m has weight k
        let dmin = 0.max(-k) as u32;
        let mut acc = VModVec::zero(ell);
        for d in dmin..=(ell - m) {
            let kd = (k + d as i64) as u32;
            let piece = act_f_div(&act_e_div(&VModVec::basis(ell, m), d), kd);
            let sign = binom2(d as i64) + binom2(kd as i64);
            let qd = GPScalar::monomial(-(d as i64), sign, sgn(d as i64));
            acc = acc.add(&piece.scale(&qd));
        }
        out = out.add(&acc.scale(&v.coords[m as usize]));
    }
    out
}

/// The closed coefficient of `T(b_n^ell) = (-1)^n pi^{binom(n,2)+nn'} q^{n+nn'} b_{n'}^ell`
/// with `n' = ell - n`.
pub fn t_coeff_closed(ell: u32, n: u32) -> GPScalar {
    let np = (ell - n) as i64;
    let n = n as i64;
    GPScalar::monomial(n + n * np, binom2(n) + n * np, sgn(n))
}
