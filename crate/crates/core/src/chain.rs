//! Tensor chains of rank-one bimodules `U_m`, `V_m` with all coefficients
//! pushed to the right, plus the odd nil-Hecke actions transported through
//! the chain identifications.
//!
//! A chain element is a combination of pure tuples
//! `u(x^{a_1}) (x) ... (x) v(x^{b_d}) (x) (terminal)`, with every factor in
//! its free right basis.  Algebra elements arriving at a junction are
//! decomposed into e-letter words and a central part; letters are pushed one
//! factor to the right by the generating-series rules, overflowing powers are
//! reduced, and whatever reaches the right end hits the terminal: the counit
//! for chains specialized over the ground field, or multiplication into a
//! stored coefficient.

use crate::bimod;
use crate::oh::{self, OHElem};
use crate::opol::{Gen, OPolElem};
use crate::scalar::{binom2, hash_stat, sgn};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    U,
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub kind: FactorKind,
    pub m: u32,
}

impl Factor {
    /// Right-basis cap of the exponent stored at this factor.
    pub fn cap(&self, ell: u32) -> u32 {
        match self.kind {
            FactorKind::U => ell - self.m - 1,
            FactorKind::V => self.m,
        }
    }

    /// Algebra index of coefficients arriving from the left of this factor.
    pub fn left_algebra(&self) -> u32 {
        match self.kind {
            FactorKind::U => self.m + 1,
            FactorKind::V => self.m,
        }
    }

    /// Algebra index to the right of this factor.
    pub fn right_algebra(&self) -> u32 {
        match self.kind {
            FactorKind::U => self.m,
            FactorKind::V => self.m + 1,
        }
    }

    /// (degree, parity) of the basis vector `x^e` at this factor.
    pub fn grading(&self, e: u16) -> (i64, u8) {
        match self.kind {
            FactorKind::U => (2 * e as i64, (e % 2) as u8),
            FactorKind::V => (2 * e as i64 - 2 * self.m as i64, ((e as u32 + self.m) % 2) as u8),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpace {
    pub ell: u32,
    pub factors: Vec<Factor>,
}

impl ChainSpace {
    pub fn terminal_algebra(&self) -> u32 {
        self.factors
            .last()
            .map(|f| f.right_algebra())
            .unwrap_or(0)
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.cap(self.ell) as usize + 1).product()
    }

    /// All pure tuples within the right-basis caps, in a fixed order.
    pub fn tuples(&self) -> Vec<Vec<u16>> {
        let mut out = vec![Vec::new()];
        for f in &self.factors {
            let cap = f.cap(self.ell) as u16;
            let mut next = Vec::new();
            for t in &out {
                for e in 0..=cap {
                    let mut t2 = t.clone();
                    t2.push(e);
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }

    pub fn grading(&self, tuple: &[u16]) -> (i64, u8) {
        let mut d = 0i64;
        let mut p = 0i64;
        for (f, &e) in self.factors.iter().zip(tuple) {
            let (fd, fp) = f.grading(e);
            d += fd;
            p += fp as i64;
        }
        (d, (p % 2) as u8)
    }
}

/// What an algebra element does when it falls off the right end of a chain.
pub trait Terminal: Clone + PartialEq {
    fn zero(space: &ChainSpace) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, c: i64) -> Self;
    /// Apply an element of the terminal algebra from the left.
    fn apply(&self, a: &OHElem) -> Self;
}

/// Specialized chain: tensor with the ground field on the right.
impl Terminal for i64 {
    fn zero(_space: &ChainSpace) -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, c: i64) -> Self {
        self * c
    }
    fn apply(&self, a: &OHElem) -> Self {
        a.counit() * self
    }
}

/// Coefficient-carrying chain (free right module over the terminal algebra).
impl Terminal for OHElem {
    fn zero(space: &ChainSpace) -> Self {
        OHElem::zero(space.terminal_algebra(), space.ell)
    }
    fn is_zero(&self) -> bool {
        OHElem::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        OHElem::add(self, other)
    }
    fn scale(&self, c: i64) -> Self {
        OHElem::scale(self, c)
    }
    fn apply(&self, a: &OHElem) -> Self {
        a.mul(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainElem<T: Terminal> {
    pub space: ChainSpace,
    pub terms: BTreeMap<Vec<u16>, T>,
}

impl<T: Terminal> ChainElem<T> {
    pub fn zero(space: &ChainSpace) -> Self {
        ChainElem { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, tuple: Vec<u16>, v: T) {
        if v.is_zero() {
            return;
        }
        match self.terms.get_mut(&tuple) {
            Some(e) => {
                *e = e.add(&v);
                if e.is_zero() {
                    self.terms.remove(&tuple);
                }
            }
            None => {
                self.terms.insert(tuple, v);
            }
        }
    }

    pub fn add(&self, other: &ChainElem<T>) -> ChainElem<T> {
        let mut out = self.clone();
        for (t, v) in &other.terms {
            out.insert(t.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: i64) -> ChainElem<T> {
        let mut out = ChainElem::zero(&self.space);
        for (t, v) in &self.terms {
            out.insert(t.clone(), v.scale(c));
        }
        out
    }
}

/// Act with `a` (an element of the junction algebra left of factor `pos`) on
/// the suffix `tuple[pos..]` carrying terminal value `v`; returns suffix
/// combinations.
fn act_suffix<T: Terminal>(
    space: &ChainSpace,
    pos: usize,
    suffix: &[u16],
    v: &T,
    a: &OHElem,
) -> Vec<(Vec<u16>, T)> {
    if a.is_zero() || v.is_zero() {
        return Vec::new();
    }
    if pos == space.factors.len() {
        let applied = v.apply(a);
        if applied.is_zero() {
            return Vec::new();
        }
        return vec![(Vec::new(), applied)];
    }
    // parity of the suffix basis vector, for Koszul-crossing central elements
    let suffix_parity: i64 = space.factors[pos..]
        .iter()
        .zip(suffix)
        .map(|(f, &e)| f.grading(e).1 as i64)
        .sum();
    let term_alg = space.terminal_algebra();
    let mut out: Vec<(Vec<u16>, T)> = Vec::new();
    for (c, word, r) in oh::decompose(a) {
        // the central part crosses the whole suffix (signs for its odd piece)
        // and lands on the terminal
        let (re, ro) = r.parity_split();
        let mut v2 = T::zero(space);
        if !re.is_zero() {
            v2 = v2.add(&v.apply(&OHElem::one(term_alg, space.ell).mul_r(&re)));
        }
        if !ro.is_zero() {
            let crossed = v
                .apply(&OHElem::one(term_alg, space.ell).mul_r(&ro))
                .scale(sgn(suffix_parity));
            v2 = v2.add(&crossed);
        }
        let v2 = v2.scale(c);
        if v2.is_zero() {
            continue;
        }
        let mut cur: Vec<(Vec<u16>, T)> = vec![(suffix.to_vec(), v2)];
        for &q in word.iter().rev() {
            let mut next: Vec<(Vec<u16>, T)> = Vec::new();
            for (suf, val) in &cur {
                next.extend(apply_letter(space, pos, suf, val, q));
            }
            cur = next;
        }
        out.extend(cur);
    }
    merge(space, out)
}

fn merge<T: Terminal>(space: &ChainSpace, items: Vec<(Vec<u16>, T)>) -> Vec<(Vec<u16>, T)> {
    let _ = space;
    let mut map: BTreeMap<Vec<u16>, T> = BTreeMap::new();
    for (t, v) in items {
        if v.is_zero() {
            continue;
        }
        match map.get_mut(&t) {
            Some(e) => *e = e.add(&v),
            None => {
                map.insert(t, v);
            }
        }
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Apply the single letter `e_q` of the junction algebra left of `pos`.
fn apply_letter<T: Terminal>(
    space: &ChainSpace,
    pos: usize,
    suffix: &[u16],
    v: &T,
    q: u32,
) -> Vec<(Vec<u16>, T)> {
    let f = space.factors[pos];
    let ell = space.ell;
    let e0 = suffix[0];
    let rest = &suffix[1..];
    let mut out = Vec::new();
    match f.kind {
        FactorKind::U => {
            if q > f.m + 1 {
                return out; // e_q^{(m+1)} = 0
            }
            // e_q^{(m+1)} u(x^r) = pref [ u(x^r) e_q^{(m)} + sigma u(x^{r+1}) e_{q-1}^{(m)} ]
            let r = e0 as i64;
            let sigma = sgn(r + 1);
            let pref = sgn(f.m as i64 * (r + 1) + (r + 1) * (f.m as i64 - q as i64));
            let t1 = act_suffix(space, pos + 1, rest, v, &oh::e_bar(f.m, ell, q));
            for (suf, val) in t1 {
                out.extend(place(space, pos, e0, &suf, &val.scale(pref)));
            }
            if q >= 1 {
                let t2 = act_suffix(space, pos + 1, rest, v, &oh::e_bar(f.m, ell, q - 1));
                for (suf, val) in t2 {
                    out.extend(place(space, pos, e0 + 1, &suf, &val.scale(pref * sigma)));
                }
            }
        }
        FactorKind::V => {
            if q > f.m {
                return out; // e_q^{(m)} = 0
            }
            let sign = sgn(binom2(q as i64));
            let acted = bimod::eps_v_act(f.m, ell, q, e0 as u32);
            for (p, coeff) in acted.coeffs.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (suf, val) in act_suffix(space, pos + 1, rest, v, coeff) {
                    let mut t = vec![p as u16];
                    t.extend_from_slice(&suf);
                    out.push((t, val.scale(sign)));
                }
            }
        }
    }
    merge(space, out)
}

/// Prepend `x^expo` at factor `pos`, reducing an overflowing power into the
/// right basis (the reduction coefficients act on the rest of the chain).
fn place<T: Terminal>(
    space: &ChainSpace,
    pos: usize,
    expo: u16,
    rest: &[u16],
    v: &T,
) -> Vec<(Vec<u16>, T)> {
    let f = space.factors[pos];
    let ell = space.ell;
    if (expo as u32) <= f.cap(ell) {
        let mut t = vec![expo];
        t.extend_from_slice(rest);
        return vec![(t, v.clone())];
    }
    let mut out = Vec::new();
    match f.kind {
        FactorKind::U => {
            let red = bimod::u_right_reduce(f.m, ell, expo as u32);
            for (j, b) in red.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (suf, val) in act_suffix(space, pos + 1, rest, v, b) {
                    let mut t = vec![j as u16];
                    t.extend_from_slice(&suf);
                    out.push((t, val));
                }
            }
        }
        FactorKind::V => {
            let red = bimod::v_reduce(f.m, ell, expo as u32);
            for (j, b) in red.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (suf, val) in act_suffix(space, pos + 1, rest, v, b) {
                    let mut t = vec![j as u16];
                    t.extend_from_slice(&suf);
                    out.push((t, val));
                }
            }
        }
    }
    merge(space, out)
}

/// Insert a raw tuple of exponents (possibly overflowing), normalizing right
/// to left.
pub fn insert_tuple<T: Terminal>(
    space: &ChainSpace,
    exps: &[u16],
    v: T,
) -> ChainElem<T> {
    assert_eq!(exps.len(), space.factors.len());
    let mut cur: Vec<(Vec<u16>, T)> = vec![(Vec::new(), v)];
    for pos in (0..space.factors.len()).rev() {
        let mut next = Vec::new();
        for (suf, val) in &cur {
            next.extend(place(space, pos, exps[pos], suf, val));
        }
        cur = merge(space, next);
    }
    let mut out = ChainElem::zero(space);
    for (t, v) in cur {
        out.insert(t, v);
    }
    out
}

/// Act with `a` at junction `pos` on a whole chain element.
pub fn act_at<T: Terminal>(x: &ChainElem<T>, pos: usize, a: &OHElem) -> ChainElem<T> {
    let mut out = ChainElem::zero(&x.space);
    for (tuple, v) in &x.terms {
        let prefix = &tuple[..pos];
        for (suf, val) in act_suffix(&x.space, pos, &tuple[pos..], v, a) {
            let mut t = prefix.to_vec();
            t.extend_from_slice(&suf);
            out.insert(t, val);
        }
    }
    out
}

/// Contract the adjacent `U_m (x) V_m` pair at positions `(iu, iu+1)` via
/// `ev_m`, yielding an element of the shortened chain.
pub fn contract_middle<T: Terminal>(x: &ChainElem<T>, iu: usize) -> ChainElem<T> {
    let space = &x.space;
    let fu = space.factors[iu];
    let fv = space.factors[iu + 1];
    assert_eq!(fu.kind, FactorKind::U);
    assert_eq!(fv.kind, FactorKind::V);
    assert_eq!(fu.m, fv.m);
    let m = fu.m;
    let mut factors = space.factors.clone();
    factors.drain(iu..=iu + 1);
    let new_space = ChainSpace { ell: space.ell, factors };
    let mut out = ChainElem::zero(&new_space);
    for (tuple, v) in &x.terms {
        let r = tuple[iu] as i64;
        let s = tuple[iu + 1] as i64;
        let j = r + s - m as i64;
        if j < 0 {
            continue;
        }
        let eta = oh::eta_bar(m + 1, space.ell, j as u32);
        let prefix = &tuple[..iu];
        for (suf, val) in act_suffix(&new_space, iu, &tuple[iu + 2..], v, &eta) {
            let mut t = prefix.to_vec();
            t.extend_from_slice(&suf);
            out.insert(t, val);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// nil-Hecke actions transported through the chain identifications

/// A pure `U`-power chain `U_{n+d-1} (x) ... (x) U_n` with right coefficients
/// in `OH_n^ell`.
pub fn u_chain_space(n: u32, d: u32, ell: u32) -> ChainSpace {
    let factors = (0..d).rev().map(|i| Factor { kind: FactorKind::U, m: n + i }).collect();
    ChainSpace { ell, factors }
}

/// A pure `V`-power chain `V_n (x) ... (x) V_{n+d-1}` with right coefficients
/// in `OH_{n+d}^ell`.
pub fn v_chain_space(n: u32, d: u32, ell: u32) -> ChainSpace {
    let factors = (0..d).map(|i| Factor { kind: FactorKind::V, m: n + i }).collect();
    ChainSpace { ell, factors }
}

/// Transport a monomial through `b_{(1)^d}`: the chain tuple of
/// `u_{(1^d);n}(x_d^{k_d} ... x_1^{k_1})` is `(k_d, ..., k_1)` with sign
/// `(-1)^{sum (d-i) k_i}`.
fn u_transport_sign(kappa: &[u16]) -> i64 {
    let d = kappa.len() as i64;
    let mut s = 0i64;
    for (i, &k) in kappa.iter().enumerate() {
        s += (d - (i as i64 + 1)) * k as i64;
    }
    sgn(s)
}

/// Transport sign of `c_{(1)^d}` on `v_{n;(1^d)}(x_1^{k_1} ... x_d^{k_d})`:
/// `(-1)^{sum ((n+i)#(d-i)) k_i}`.
fn v_transport_sign(n: u32, kappa: &[u16]) -> i64 {
    let d = kappa.len() as i64;
    let mut s = 0i64;
    for (i, &k) in kappa.iter().enumerate() {
        let i1 = i as i64 + 1;
        s += hash_stat(n as i64 + i1, d - i1) * k as i64;
    }
    sgn(s)
}

/// Reorder sign for rewriting the canonical monomial `x_1^{k_1}...x_d^{k_d}`
/// in fully reversed variable order.
fn reorder_sign(kappa: &[u16]) -> i64 {
    let mut s = 0i64;
    for i in 0..kappa.len() {
        for j in i + 1..kappa.len() {
            s += kappa[i] as i64 * kappa[j] as i64;
        }
    }
    sgn(s)
}

/// The right nil-Hecke action `rho_{(1^d);n}(a)` on a `U`-power chain, for
/// `a` given as an operator word (one element, applied through the transport
/// `b_{(1)^d}`).
pub fn rho_apply(x: &ChainElem<OHElem>, _n: u32, word: &[Gen]) -> ChainElem<OHElem> {
    let d = x.space.factors.len();
    let par_a = word
        .iter()
        .map(|g| match g {
            Gen::X(_) | Gen::Tau(_) => 1usize,
        })
        .sum::<usize>() as i64;
    let mut out = ChainElem::zero(&x.space);
    for (tuple, c) in &x.terms {
        // tuple = (k_d, ..., k_1); the OPol monomial is x_d^{k_d}...x_1^{k_1}
        let kappa: Vec<u16> = tuple.iter().rev().cloned().collect(); // (k_1, ..., k_d)
        let tsign = u_transport_sign(&kappa);
        let rsign = reorder_sign(&kappa);
        let f = OPolElem::monomial(d, &kappa, tsign * rsign);
        let par_f = (kappa.iter().map(|&e| e as i64).sum::<i64>()) % 2;
        // u(f) . a = (-1)^{par a par f} (-1)^{(d-1) par a} u_{(1^d)}(f . a)
        let acted = f
            .apply_right_word(word)
            .scale(sgn(par_a * par_f + (d as i64 - 1) * par_a));
        for (kap2, &c2) in &acted.coeffs {
            let tsign2 = u_transport_sign(kap2);
            let rsign2 = reorder_sign(kap2);
            let exps: Vec<u16> = kap2.iter().rev().cloned().collect();
            let piece = insert_tuple(&x.space, &exps, c.scale(c2 * tsign2 * rsign2));
            out = out.add(&piece);
        }
    }
    out
}

/// The left nil-Hecke action `lambda_{n;(1^d)}(a)` on a `V`-power chain.
pub fn lambda_apply(x: &ChainElem<OHElem>, n: u32, word: &[Gen]) -> ChainElem<OHElem> {
    let d = x.space.factors.len();
    let par_a = word.len() as i64;
    let mut out = ChainElem::zero(&x.space);
    for (tuple, c) in &x.terms {
        // tuple = (k_1, ..., k_d) directly
        let kappa: Vec<u16> = tuple.clone();
        let tsign = v_transport_sign(n, &kappa);
        let f = OPolElem::monomial(d, &kappa, tsign);
        // a . v(f) = (-1)^{(n#(d-1)) par a} v_{(1^d)}(a . f)
        let acted = f
            .apply_word(word)
            .scale(sgn(hash_stat(n as i64, d as i64 - 1) * par_a));
        for (kap2, &c2) in &acted.coeffs {
            let tsign2 = v_transport_sign(n, kap2);
            let piece = insert_tuple(&x.space, kap2, c.scale(c2 * tsign2));
            out = out.add(&piece);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oh::OHElem;

    fn unit_uchain(n: u32, d: u32, ell: u32, exps: &[u16]) -> ChainElem<OHElem> {
        let space = u_chain_space(n, d, ell);
        let val = OHElem::one(space.terminal_algebra(), ell);
        insert_tuple(&space, exps, val)
    }

    fn unit_vchain(n: u32, d: u32, ell: u32, exps: &[u16]) -> ChainElem<OHElem> {
        let space = v_chain_space(n, d, ell);
        let val = OHElem::one(space.terminal_algebra(), ell);
        insert_tuple(&space, exps, val)
    }

    #[test]
    fn tau_squares_to_zero() {
        for ell in 2..=3u32 {
            for n in 0..=(ell - 2) {
                for a in 0..2u16 {
                    for b in 0..2u16 {
                        let ch = unit_uchain(n, 2, ell, &[a, b]);
                        let once = rho_apply(&ch, n, &[Gen::Tau(1)]);
                        let twice = rho_apply(&once, n, &[Gen::Tau(1)]);
                        assert!(twice.is_zero(), "rho tau^2 n={n} ell={ell} a={a} b={b}");
                        let ch = unit_vchain(n, 2, ell, &[a, b]);
                        let once = lambda_apply(&ch, n, &[Gen::Tau(1)]);
                        let twice = lambda_apply(&once, n, &[Gen::Tau(1)]);
                        assert!(twice.is_zero(), "lambda tau^2 n={n} ell={ell} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn xi_omega_idempotent_on_chains() {
        // (xi omega)_2 = x_1 tau_1 acts idempotently through rho,
        // (omega xi)_2 = tau_1 x_1 through lambda
        let e_right = [Gen::X(1), Gen::Tau(1)]; // f . (x1 tau1) applied left to right
        let e_left = [Gen::Tau(1), Gen::X(1)]; // (tau1 x1) . f, leftmost acts last
        for ell in 2..=3u32 {
            for n in 0..=(ell - 2) {
                for a in 0..2u16 {
                    for b in 0..2u16 {
                        let ch = unit_uchain(n, 2, ell, &[a, b]);
                        let once = rho_apply(&ch, n, &e_right);
                        let twice = rho_apply(&once, n, &e_right);
                        assert_eq!(once, twice, "rho idempotent n={n} ell={ell}");
                        let ch = unit_vchain(n, 2, ell, &[a, b]);
                        let once = lambda_apply(&ch, n, &e_left);
                        let twice = lambda_apply(&once, n, &e_left);
                        assert_eq!(once, twice, "lambda idempotent n={n} ell={ell}");
                    }
                }
            }
        }
    }

    #[test]
    fn dot_action_dual_route() {
        // rho_{(1^d);n}(x_i) = (-1)^{i-1} (local dot on the strand-i factor),
        // where strand i is the i-th factor from the right and the local dot
        // crosses the factors to its left
        for ell in 2..=3u32 {
            let d = 2u32;
            for n in 0..=(ell - d) {
                for i in 1..=d as usize {
                    for a in 0..2u16 {
                        for b in 0..2u16 {
                            let ch = unit_uchain(n, d, ell, &[a, b]);
                            let via_rho = rho_apply(&ch, n, &[Gen::X(i)]);
                            // local route
                            let space = u_chain_space(n, d, ell);
                            let mut local = ChainElem::zero(&space);
                            for (tuple, c) in &ch.terms {
                                let pos = d as usize - i; // factor position from left
                                let cross: i64 = tuple[..pos].iter().map(|&e| e as i64).sum();
                                let mut exps = tuple.clone();
                                let dot_sign = sgn(exps[pos] as i64);
                                exps[pos] += 1;
                                let piece = insert_tuple(
                                    &space,
                                    &exps,
                                    c.scale(dot_sign * sgn(cross) * sgn(i as i64 - 1)),
                                );
                                local = local.add(&piece);
                            }
                            assert_eq!(via_rho, local, "dot route n={n} ell={ell} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn overflow_insertion_matches_reductions() {
        // specialized single-factor chains: inserting an overflowing power
        // agrees with the right-basis reductions followed by the counit
        for ell in 2..=4u32 {
            for m in 0..ell {
                let vspace = ChainSpace { ell, factors: vec![Factor { kind: FactorKind::V, m }] };
                for nn in (m + 1)..=(m + 3) {
                    let ins = insert_tuple(&vspace, &[nn as u16], 1i64);
                    let red = bimod::v_reduce(m, ell, nn);
                    let mut expect = ChainElem::zero(&vspace);
                    for (j, c) in red.coeffs.iter().enumerate() {
                        expect.insert(vec![j as u16], c.counit());
                    }
                    assert_eq!(ins, expect, "v overflow m={m} ell={ell} N={nn}");
                }
                let uspace = ChainSpace { ell, factors: vec![Factor { kind: FactorKind::U, m }] };
                let cap = ell - m - 1;
                for nn in (cap + 1)..=(cap + 3) {
                    let ins = insert_tuple(&uspace, &[nn as u16], 1i64);
                    let red = bimod::u_right_reduce(m, ell, nn);
                    let mut expect = ChainElem::zero(&uspace);
                    for (j, c) in red.coeffs.iter().enumerate() {
                        expect.insert(vec![j as u16], c.counit());
                    }
                    assert_eq!(ins, expect, "u overflow m={m} ell={ell} N={nn}");
                }
            }
        }
    }

    #[test]
    fn contraction_matches_ev() {
        // the middle contraction on a specialized U_m (x) V_m chain equals
        // the counit of the bimodule-level ev
        for ell in 2..=3u32 {
            for m in 0..(ell - 1) {
                let space = ChainSpace {
                    ell,
                    factors: vec![
                        Factor { kind: FactorKind::U, m },
                        Factor { kind: FactorKind::V, m },
                    ],
                };
                for a in 0..=space.factors[0].cap(ell) as u16 {
                    for b in 0..=space.factors[1].cap(ell) as u16 {
                        let x = insert_tuple(&space, &[a, b], 1i64);
                        let contracted = contract_middle(&x, 0);
                        let total: i64 = contracted.terms.values().sum();
                        let via_bimod = bimod::ev(
                            &bimod::UElem::unit(m, ell, a as u32),
                            &bimod::VElem::unit(m, ell, b as u32),
                        )
                        .counit();
                        assert_eq!(total, via_bimod, "m={m} ell={ell} a={a} b={b}");
                    }
                }
            }
        }
    }
}
