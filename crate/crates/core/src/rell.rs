//! The base ring `R_ell`: the largest supercommutative quotient of OSym_ell,
//! modeled concretely as `Sym_m[c]` with `m = floor(ell/2)`, where `Sym_m` is
//! free commutative on generators `g_1, ..., g_m` (`g_r` even of degree `4r`,
//! the image of the dual elementary function `epsilon_{2r}`) and `c` is odd
//! of degree 2 with `c^2 = 0`.  For even `ell` there is the extra relation
//! `c g_m = 0`.

use crate::osym::{self, OSymElem};
use crate::scalar::sgn;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

type GMono = Vec<u16>; // exponents of g_1..g_m

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct REllElem {
    pub ell: u32,
    /// even polynomial part
    pub even: BTreeMap<GMono, i64>,
    /// coefficient of `c` (an even polynomial)
    pub odd: BTreeMap<GMono, i64>,
}

pub fn num_gens(ell: u32) -> usize {
    (ell / 2) as usize
}

impl REllElem {
    pub fn zero(ell: u32) -> Self {
        REllElem { ell, even: BTreeMap::new(), odd: BTreeMap::new() }
    }

    pub fn one(ell: u32) -> Self {
        let mut even = BTreeMap::new();
        even.insert(vec![0; num_gens(ell)], 1);
        REllElem { ell, even, odd: BTreeMap::new() }
    }

    pub fn constant(ell: u32, c: i64) -> Self {
        if c == 0 {
            REllElem::zero(ell)
        } else {
            let mut even = BTreeMap::new();
            even.insert(vec![0; num_gens(ell)], c);
            REllElem { ell, even, odd: BTreeMap::new() }
        }
    }

    /// The odd element `c` (the image of `o`).
    pub fn c_elem(ell: u32) -> Self {
        let mut odd = BTreeMap::new();
        odd.insert(vec![0; num_gens(ell)], 1);
        REllElem { ell, even: BTreeMap::new(), odd }.normalized()
    }

    /// The generator `g_r` (1-indexed), zero if `r > m`.
    pub fn g(ell: u32, r: usize) -> Self {
        let m = num_gens(ell);
        if r == 0 {
            return REllElem::one(ell);
        }
        if r > m {
            return REllElem::zero(ell);
        }
        let mut mono = vec![0u16; m];
        mono[r - 1] = 1;
        let mut even = BTreeMap::new();
        even.insert(mono, 1);
        REllElem { ell, even, odd: BTreeMap::new() }
    }

    fn normalized(mut self) -> Self {
        let m = num_gens(self.ell);
        self.even.retain(|_, c| *c != 0);
        // for even ell: c * g_m = 0 (for ell = 0 this kills c itself)
        if self.ell == 0 {
            self.odd.clear();
        } else if self.ell % 2 == 0 {
            self.odd.retain(|mono, _| mono[m - 1] == 0);
        }
        self.odd.retain(|_, c| *c != 0);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn add(&self, other: &REllElem) -> REllElem {
        assert_eq!(self.ell, other.ell);
        let mut out = self.clone();
        for (k, &c) in &other.even {
            *out.even.entry(k.clone()).or_insert(0) += c;
        }
        for (k, &c) in &other.odd {
            *out.odd.entry(k.clone()).or_insert(0) += c;
        }
        out.normalized()
    }

    pub fn scale(&self, c: i64) -> REllElem {
        if c == 0 {
            return REllElem::zero(self.ell);
        }
        REllElem {
            ell: self.ell,
            even: self.even.iter().map(|(k, &a)| (k.clone(), a * c)).collect(),
            odd: self.odd.iter().map(|(k, &a)| (k.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &REllElem) -> REllElem {
        assert_eq!(self.ell, other.ell);
        let mut out = REllElem::zero(self.ell);
        // (a + cb)(a' + cb') = aa' + c(ab' + ba')   [a, a', b, b' even]
        poly_mul_into(&self.even, &other.even, &mut out.even);
        poly_mul_into(&self.even, &other.odd, &mut out.odd);
        poly_mul_into(&self.odd, &other.even, &mut out.odd);
        out.normalized()
    }

    /// The constant coefficient (degree-0 part).
    pub fn counit(&self) -> i64 {
        let m = num_gens(self.ell);
        *self.even.get(&vec![0u16; m]).unwrap_or(&0)
    }

    /// Parity-homogeneous pieces `(even, odd)`.
    pub fn parity_split(&self) -> (REllElem, REllElem) {
        (
            REllElem { ell: self.ell, even: self.even.clone(), odd: BTreeMap::new() },
            REllElem { ell: self.ell, even: BTreeMap::new(), odd: self.odd.clone() },
        )
    }

    /// Split into homogeneous (degree, parity) components.
    pub fn components(&self) -> Vec<(i64, u8, REllElem)> {
        let mut map: BTreeMap<(i64, u8), REllElem> = BTreeMap::new();
        for (k, &c) in &self.even {
            let d = gdeg(k);
            let e = map.entry((d, 0)).or_insert_with(|| REllElem::zero(self.ell));
            *e.even.entry(k.clone()).or_insert(0) += c;
        }
        for (k, &c) in &self.odd {
            let d = gdeg(k) + 2;
            let e = map.entry((d, 1)).or_insert_with(|| REllElem::zero(self.ell));
            *e.odd.entry(k.clone()).or_insert(0) += c;
        }
        map.into_iter().map(|((d, p), v)| (d, p, v)).collect()
    }

    /// Reinterpret in `R_{ell_new}` (same generators, further truncation).
    pub fn retruncate(&self, ell_new: u32) -> REllElem {
        let m_new = num_gens(ell_new);
        let mut out = REllElem::zero(ell_new);
        for (k, &c) in &self.even {
            if k.iter().skip(m_new).any(|&e| e > 0) {
                continue;
            }
            let mut mono = k.clone();
            mono.truncate(m_new);
            mono.resize(m_new, 0);
            *out.even.entry(mono).or_insert(0) += c;
        }
        for (k, &c) in &self.odd {
            if k.iter().skip(m_new).any(|&e| e > 0) {
                continue;
            }
            let mut mono = k.clone();
            mono.truncate(m_new);
            mono.resize(m_new, 0);
            *out.odd.entry(mono).or_insert(0) += c;
        }
        out.normalized()
    }
}

fn gdeg(mono: &GMono) -> i64 {
    mono.iter().enumerate().map(|(i, &e)| 4 * (i as i64 + 1) * e as i64).sum()
}

/// Flatten into `((is_odd, g-monomial), coefficient)` terms.
pub fn rell_terms(r: &REllElem) -> Vec<((bool, GMono), i64)> {
    let mut out = Vec::new();
    for (k, &c) in &r.even {
        out.push(((false, k.clone()), c));
    }
    for (k, &c) in &r.odd {
        out.push(((true, k.clone()), c));
    }
    out
}

fn g_monomials_of_degree(m: usize, target: i64) -> Vec<GMono> {
    fn rec(m: usize, idx: usize, left: i64, cur: &mut GMono, out: &mut Vec<GMono>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if idx >= m {
            return;
        }
        let w = 4 * (idx as i64 + 1);
        let maxe = left / w;
        for e in 0..=maxe {
            cur[idx] = e as u16;
            rec(m, idx + 1, left - e * w, cur, out);
        }
        cur[idx] = 0;
    }
    if target < 0 || target % 4 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(m, 0, target, &mut vec![0u16; m], &mut out);
    out
}

/// All monomials of `R_ell` of the given degree, as elements.
pub fn monomial_basis(ell: u32, deg: i64) -> Vec<REllElem> {
    let m = num_gens(ell);
    let mut out = Vec::new();
    for mono in g_monomials_of_degree(m, deg) {
        let mut r = REllElem::zero(ell);
        r.even.insert(mono, 1);
        out.push(r.normalized());
    }
    for mono in g_monomials_of_degree(m, deg - 2) {
        let mut r = REllElem::zero(ell);
        r.odd.insert(mono, 1);
        let r = r.normalized();
        if !r.is_zero() {
            out.push(r);
        }
    }
    out
}

fn poly_mul_into(a: &BTreeMap<GMono, i64>, b: &BTreeMap<GMono, i64>, out: &mut BTreeMap<GMono, i64>) {
    for (ka, &ca) in a {
        for (kb, &cb) in b {
            let key: GMono = ka.iter().zip(kb).map(|(&x, &y)| x + y).collect();
            *out.entry(key).or_insert(0) += ca * cb;
        }
    }
}

/// The quotient map `OSym -> R_ell`: expand in the e-basis and map
/// `e_{2r} -> (-1)^r g_r`, `e_{2r+1} -> (-1)^r g_r c`.
pub fn rell_from_osym(x: &OSymElem, ell: u32) -> REllElem {
    let e = osym::to_e_coords(x);
    let mut out = REllElem::zero(ell);
    for (la, &c) in &e {
        let odd_parts = la.parts().iter().filter(|&&p| p % 2 == 1).count();
        if odd_parts >= 2 {
            continue; // c^2 = 0
        }
        let mut term = REllElem::constant(ell, c);
        for &p in la.parts() {
            let r = (p / 2) as usize;
            let factor = REllElem::g(ell, r).scale(sgn(r as i64));
            term = term.mul(&factor);
        }
        if odd_parts == 1 {
            term = term.mul(&REllElem::c_elem(ell));
        }
        out = out.add(&term);
    }
    out
}
