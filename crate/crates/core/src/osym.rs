//! The ring OSym of odd symmetric functions.
//!
//! Elements are stored in normal form on the h-monomial basis `{h_la}`
//! indexed by partitions; `h_la` has degree `2|la|` and parity `|la| mod 2`.
//! The straightening rule rewrites any word in the letters `h_r` to the
//! basis, and since the elementary generators `e_r` satisfy the identical
//! relations, the same engine drives the e-monomial coordinates.  Schur
//! coordinates come from the odd Kostka matrix, which is unitriangular in
//! dominance order and therefore invertible over the integers degree by
//! degree.

use crate::partition::{kostka_signed, partitions_of, Partition};
use crate::scalar::{binom2, sgn, GPScalar};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, Mutex};

pub type Coeffs = BTreeMap<Partition, i64>;

/// An element of OSym in the h-monomial basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OSymElem {
    pub coeffs: Coeffs,
}

fn clean(map: &mut Coeffs) {
    map.retain(|_, c| *c != 0);
}

impl OSymElem {
    pub fn zero() -> Self {
        OSymElem::default()
    }

    pub fn one() -> Self {
        OSymElem::from_h(Partition::empty(), 1)
    }

    pub fn from_h(la: Partition, c: i64) -> Self {
        let mut coeffs = Coeffs::new();
        if c != 0 {
            coeffs.insert(la, c);
        }
        OSymElem { coeffs }
    }

    /// `h_r`, with `h_0 = 1`.
    pub fn h(r: u32) -> Self {
        if r == 0 {
            OSymElem::one()
        } else {
            OSymElem::from_h(Partition::new(vec![r]), 1)
        }
    }

    /// `o = e_1 = h_1`.
    pub fn o() -> Self {
        OSymElem::h(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &OSymElem) -> OSymElem {
        let mut coeffs = self.coeffs.clone();
        for (k, &c) in &other.coeffs {
            *coeffs.entry(k.clone()).or_insert(0) += c;
        }
        clean(&mut coeffs);
        OSymElem { coeffs }
    }

    pub fn sub(&self, other: &OSymElem) -> OSymElem {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> OSymElem {
        if c == 0 {
            return OSymElem::zero();
        }
        OSymElem {
            coeffs: self.coeffs.iter().map(|(k, &a)| (k.clone(), a * c)).collect(),
        }
    }

    /// Homogeneous component of degree `2d`.
    pub fn component(&self, d: u32) -> OSymElem {
        OSymElem {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.coeffs.keys().map(|k| k.size()).max().unwrap_or(0)
    }

    /// Parity-homogeneous pieces `(even part, odd part)`; parity of `h_la` is `|la| mod 2`.
    pub fn parity_split(&self) -> (OSymElem, OSymElem) {
        let mut ev = Coeffs::new();
        let mut od = Coeffs::new();
        for (k, &c) in &self.coeffs {
            if k.size() % 2 == 0 {
                ev.insert(k.clone(), c);
            } else {
                od.insert(k.clone(), c);
            }
        }
        (OSymElem { coeffs: ev }, OSymElem { coeffs: od })
    }

    pub fn mul(&self, other: &OSymElem) -> OSymElem {
        let mut out = Coeffs::new();
        for (la, &a) in &self.coeffs {
            for (mu, &b) in &other.coeffs {
                let mut word: Vec<u32> = la.parts().to_vec();
                word.extend_from_slice(mu.parts());
                for (nu, c) in straighten_word(&word) {
                    *out.entry(nu).or_insert(0) += a * b * c;
                }
            }
        }
        clean(&mut out);
        OSymElem { coeffs: out }
    }
}

/// Straighten a word in the generators (h- or e-letters behave identically)
/// into the partition basis.
pub fn straighten(word: &[u32], coeff: i64) -> OSymElem {
    let word: Vec<u32> = word.iter().copied().filter(|&r| r > 0).collect();
    let mut coeffs = Coeffs::new();
    for (la, c) in straighten_word(&word) {
        *coeffs.entry(la).or_insert(0) += coeff * c;
    }
    clean(&mut coeffs);
    OSymElem { coeffs }
}

static STRAIGHTEN_CACHE: LazyLock<Mutex<HashMap<Vec<u32>, Vec<(Partition, i64)>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn straighten_word(word: &[u32]) -> Vec<(Partition, i64)> {
    let word: Vec<u32> = word.iter().copied().filter(|&r| r > 0).collect();
    if let Some(pos) = word.windows(2).position(|w| w[0] < w[1]) {
        if let Some(hit) = STRAIGHTEN_CACHE.lock().unwrap().get(&word) {
            return hit.clone();
        }
        let r = word[pos];
        let s = word[pos + 1];
        let mut acc: HashMap<Partition, i64> = HashMap::new();
        for (c, pair) in two_letter_rule(r, s) {
            let mut next: Vec<u32> = word[..pos].to_vec();
            next.extend_from_slice(&pair);
            next.extend_from_slice(&word[pos + 2..]);
            for (la, c2) in straighten_word(&next) {
                *acc.entry(la).or_insert(0) += c * c2;
            }
        }
        let out: Vec<(Partition, i64)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        STRAIGHTEN_CACHE.lock().unwrap().insert(word, out.clone());
        out
    } else {
        vec![(Partition::new(word), 1)]
    }
}

/// Rewrite `h_r h_s` with `r < s` as a combination of words whose first letter
/// is at least as large as the second.
fn two_letter_rule(r: u32, s: u32) -> Vec<(i64, Vec<u32>)> {
    debug_assert!(0 < r && r < s);
    let mut out = Vec::new();
    if r % 2 == s % 2 {
        out.push((1, vec![s, r]));
    } else if r % 2 == 0 {
        out.push((1, vec![s, r]));
        for t in 1..=r {
            let c = 2 * sgn(binom2(t as i64));
            if t == r {
                out.push((c, vec![s + t]));
            } else {
                out.push((c, vec![s + t, r - t]));
            }
        }
    } else {
        out.push((-1, vec![s, r]));
        for t in 1..=r {
            let c = -2 * sgn(binom2(t as i64 + 1));
            if t == r {
                out.push((c, vec![s + t]));
            } else {
                out.push((c, vec![s + t, r - t]));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// basis conversions

static E_IN_H: LazyLock<Mutex<HashMap<u32, OSymElem>>> = LazyLock::new(|| Mutex::new(HashMap::new()));
static H_IN_E: LazyLock<Mutex<HashMap<u32, Coeffs>>> = LazyLock::new(|| Mutex::new(HashMap::new()));
static ELAM_IN_H: LazyLock<Mutex<HashMap<Partition, OSymElem>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static HLAM_IN_E: LazyLock<Mutex<HashMap<Partition, Coeffs>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `e_r` expanded in the h-basis, via the infinite Grassmannian relation.
pub fn e_elem(r: u32) -> OSymElem {
    if r == 0 {
        return OSymElem::one();
    }
    if let Some(hit) = E_IN_H.lock().unwrap().get(&r) {
        return hit.clone();
    }
    // e_r = (-1)^{r+1} sum_{s=0}^{r-1} (-1)^s e_s h_{r-s}
    let mut acc = OSymElem::zero();
    for s in 0..r {
        let t = e_elem(s).mul(&OSymElem::h(r - s)).scale(sgn(s as i64));
        acc = acc.add(&t);
    }
    let out = acc.scale(sgn(r as i64 + 1));
    E_IN_H.lock().unwrap().insert(r, out.clone());
    out
}

/// `h_r` in e-coordinates (map on the e-monomial basis).
fn h_in_e(r: u32) -> Coeffs {
    if r == 0 {
        let mut m = Coeffs::new();
        m.insert(Partition::empty(), 1);
        return m;
    }
    if let Some(hit) = H_IN_E.lock().unwrap().get(&r) {
        return hit.clone();
    }
    // h_r = -sum_{s=1}^{r} (-1)^s e_s h_{r-s}  (in e-coordinates)
    let mut acc = Coeffs::new();
    for s in 1..=r {
        let tail = h_in_e(r - s);
        for (mu, &c) in &tail {
            let mut word = vec![s];
            word.extend_from_slice(mu.parts());
            for (nu, c2) in straighten_word(&word) {
                *acc.entry(nu).or_insert(0) += -sgn(s as i64) * c * c2;
            }
        }
    }
    clean(&mut acc);
    H_IN_E.lock().unwrap().insert(r, acc.clone());
    acc
}

/// e-coordinates of an element given in the h-basis.
pub fn to_e_coords(x: &OSymElem) -> Coeffs {
    let mut out = Coeffs::new();
    for (la, &c) in &x.coeffs {
        let expansion = hlam_in_e(la);
        for (mu, &c2) in &expansion {
            *out.entry(mu.clone()).or_insert(0) += c * c2;
        }
    }
    clean(&mut out);
    out
}

fn hlam_in_e(la: &Partition) -> Coeffs {
    if let Some(hit) = HLAM_IN_E.lock().unwrap().get(la) {
        return hit.clone();
    }
    let mut acc = Coeffs::new();
    acc.insert(Partition::empty(), 1);
    for &p in la.parts() {
        let factor = h_in_e(p);
        let mut next = Coeffs::new();
        for (mu, &a) in &acc {
            for (nu, &b) in &factor {
                let mut word = mu.parts().to_vec();
                word.extend_from_slice(nu.parts());
                for (rho, c) in straighten_word(&word) {
                    *next.entry(rho).or_insert(0) += a * b * c;
                }
            }
        }
        clean(&mut next);
        acc = next;
    }
    HLAM_IN_E.lock().unwrap().insert(la.clone(), acc.clone());
    acc
}

/// Element with the given e-coordinates, converted to the h-basis.
pub fn from_e_coords(coeffs: &Coeffs) -> OSymElem {
    let mut out = OSymElem::zero();
    for (la, &c) in coeffs {
        out = out.add(&elam_in_h(la).scale(c));
    }
    out
}

fn elam_in_h(la: &Partition) -> OSymElem {
    if let Some(hit) = ELAM_IN_H.lock().unwrap().get(la) {
        return hit.clone();
    }
    let mut acc = OSymElem::one();
    for &p in la.parts() {
        acc = acc.mul(&e_elem(p));
    }
    ELAM_IN_H.lock().unwrap().insert(la.clone(), acc.clone());
    acc
}

// ---------------------------------------------------------------------------
// symmetries

/// The algebra involution `psi: h_r -> (-1)^r e_r`.
pub fn psi(x: &OSymElem) -> OSymElem {
    // psi(h_la) = (-1)^{|la|} e_la, so psi is a signed basis swap
    let mut e_coords = Coeffs::new();
    for (la, &c) in &x.coeffs {
        e_coords.insert(la.clone(), c * sgn(la.size() as i64));
    }
    from_e_coords(&e_coords)
}

/// The algebra involution `gamma: e_r -> (-1)^{binom(r,2)} e_r`.
pub fn gamma(x: &OSymElem) -> OSymElem {
    let e = to_e_coords(x);
    let mut out = Coeffs::new();
    for (la, &c) in &e {
        let s: i64 = la.parts().iter().map(|&p| binom2(p as i64)).sum();
        out.insert(la.clone(), c * sgn(s));
    }
    from_e_coords(&out)
}

/// The superalgebra anti-involution `*` fixing each `e_r` (reverses e-words
/// with the Koszul sign).
pub fn star(x: &OSymElem) -> OSymElem {
    let e = to_e_coords(x);
    let mut out = OSymElem::zero();
    for (la, &c) in &e {
        let mut rev = la.parts().to_vec();
        rev.reverse();
        let sign = sgn(la.stat_n());
        let restraightened = straighten(&rev, sign * c);
        out = out.add(&from_e_coords(&restraightened.coeffs));
    }
    out
}

/// `epsilon_r = gamma(e_r) = (-1)^{binom(r,2)} e_r`, the dual odd elementary function.
pub fn epsilon_elem(r: u32) -> OSymElem {
    e_elem(r).scale(sgn(binom2(r as i64)))
}

/// `eta_r = gamma(h_r)`, the dual odd complete function.
pub fn eta_elem(r: u32) -> OSymElem {
    gamma(&OSymElem::h(r))
}

/// The central elements `z_{2r} = sum_s e_{2s} h_{2r-2s}`.
pub fn z_elem(two_r: u32) -> OSymElem {
    assert!(two_r % 2 == 0);
    let r = two_r / 2;
    let mut acc = OSymElem::zero();
    for s in 0..=r {
        acc = acc.add(&e_elem(2 * s).mul(&OSymElem::h(2 * r - 2 * s)));
    }
    acc
}

// ---------------------------------------------------------------------------
// coproducts

/// An element of OSym (x) OSym in the h (x) h basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OSymTensor {
    pub coeffs: BTreeMap<(Partition, Partition), i64>,
}

impl OSymTensor {
    pub fn zero() -> Self {
        OSymTensor::default()
    }

    pub fn add_term(&mut self, a: Partition, b: Partition, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry((a, b)).or_insert(0);
        *e += c;
    }

    fn cleaned(mut self) -> Self {
        self.coeffs.retain(|_, c| *c != 0);
        self
    }

    /// Koszul product: `(a (x) b)(a' (x) b') = (-1)^{par(b) par(a')} aa' (x) bb'`.
    pub fn mul(&self, other: &OSymTensor) -> OSymTensor {
        let mut out = OSymTensor::zero();
        for (&(ref a1, ref b1), &c1) in &self.coeffs {
            for (&(ref a2, ref b2), &c2) in &other.coeffs {
                let sign = sgn(b1.size() as i64 * a2.size() as i64);
                let left = OSymElem::from_h(a1.clone(), 1).mul(&OSymElem::from_h(a2.clone(), 1));
                let right = OSymElem::from_h(b1.clone(), 1).mul(&OSymElem::from_h(b2.clone(), 1));
                for (la, &cl) in &left.coeffs {
                    for (mu, &cr) in &right.coeffs {
                        out.add_term(la.clone(), mu.clone(), sign * c1 * c2 * cl * cr);
                    }
                }
            }
        }
        out.cleaned()
    }

    /// Apply the symmetric braiding: `a (x) b -> (-1)^{par a par b} b (x) a`.
    pub fn swap(&self) -> OSymTensor {
        let mut out = OSymTensor::zero();
        for (&(ref a, ref b), &c) in &self.coeffs {
            out.add_term(b.clone(), a.clone(), c * sgn(a.size() as i64 * b.size() as i64));
        }
        out
    }
}

static DELTA_MINUS: LazyLock<Mutex<HashMap<Partition, OSymTensor>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `Delta^-` on the h-basis: `Delta^-(h_r) = sum h_s (x) h_{r-s}`, extended as
/// a superalgebra map.
pub fn coproduct_minus(x: &OSymElem) -> OSymTensor {
    let mut out = OSymTensor::zero();
    for (la, &c) in &x.coeffs {
        let t = delta_minus_hlam(la);
        for (&(ref a, ref b), &c2) in &t.coeffs {
            out.add_term(a.clone(), b.clone(), c * c2);
        }
    }
    out.cleaned()
}

fn delta_minus_hlam(la: &Partition) -> OSymTensor {
    if let Some(hit) = DELTA_MINUS.lock().unwrap().get(la) {
        return hit.clone();
    }
    let mut acc = OSymTensor::zero();
    acc.add_term(Partition::empty(), Partition::empty(), 1);
    for &r in la.parts() {
        let mut factor = OSymTensor::zero();
        for s in 0..=r {
            let a = if s == 0 { Partition::empty() } else { Partition::new(vec![s]) };
            let b = if r - s == 0 {
                Partition::empty()
            } else {
                Partition::new(vec![r - s])
            };
            factor.add_term(a, b, 1);
        }
        acc = acc.mul(&factor);
    }
    DELTA_MINUS.lock().unwrap().insert(la.clone(), acc.clone());
    acc
}

/// `Delta^+ = braiding . Delta^-`.
pub fn coproduct_plus(x: &OSymElem) -> OSymTensor {
    coproduct_minus(x).swap()
}

// ---------------------------------------------------------------------------
// bilinear forms

static PAIR_HH: LazyLock<Mutex<HashMap<(Partition, Partition), i64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `(h_la, h_mu)^-`, by peeling the first letter of the left argument against
/// the coproduct of the right, flipping by symmetry when the left argument is
/// a single letter.
fn pair_hh_minus(la: &Partition, mu: &Partition) -> i64 {
    if la.size() != mu.size() {
        return 0;
    }
    if la.is_empty() {
        return 1;
    }
    if la.ht() == 1 && mu.ht() > 1 {
        return pair_hh_minus(mu, la);
    }
    if mu.ht() == 1 {
        // (h_la, h_r): peel la against Delta^-(h_r)
        let key = (la.clone(), mu.clone());
        if let Some(&hit) = PAIR_HH.lock().unwrap().get(&key) {
            return hit;
        }
        let r = mu.part(0);
        let a = la.part(0);
        let rest = Partition::new(la.parts()[1..].to_vec());
        // (h_la, h_r)^- = (h_{la_1} (x) h_rest, sum h_s (x) h_{r-s}) = (h_rest, h_{r-a})
        let out = if a > r {
            0
        } else {
            let tail = if r == a {
                Partition::empty()
            } else {
                Partition::new(vec![r - a])
            };
            pair_hh_minus(&rest, &tail)
        };
        PAIR_HH.lock().unwrap().insert(key, out);
        return out;
    }
    let key = (la.clone(), mu.clone());
    if let Some(&hit) = PAIR_HH.lock().unwrap().get(&key) {
        return hit;
    }
    let a = la.part(0);
    let rest = Partition::new(la.parts()[1..].to_vec());
    let delta = delta_minus_hlam(mu);
    let mut total = 0i64;
    for (&(ref l, ref r), &c) in &delta.coeffs {
        if l.size() != a {
            continue;
        }
        let single = Partition::new(vec![a]);
        let left = pair_hh_minus(l, &single); // = (h_a, h_l) by symmetry
        if left == 0 {
            continue;
        }
        total += c * left * pair_hh_minus(&rest, r);
    }
    PAIR_HH.lock().unwrap().insert(key, total);
    total
}

static PAIR_EE: LazyLock<Mutex<HashMap<(Partition, Partition), i64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static DELTA_PLUS_E: LazyLock<Mutex<HashMap<Partition, OSymTensor>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `Delta^+(e_la)` in e (x) e coordinates (the tensor struct reused, with keys
/// read as e-monomials).
fn delta_plus_elam(la: &Partition) -> OSymTensor {
    if let Some(hit) = DELTA_PLUS_E.lock().unwrap().get(la) {
        return hit.clone();
    }
    let mut acc = OSymTensor::zero();
    acc.add_term(Partition::empty(), Partition::empty(), 1);
    for &r in la.parts() {
        let mut factor = OSymTensor::zero();
        for s in 0..=r {
            let a = if s == 0 { Partition::empty() } else { Partition::new(vec![s]) };
            let b = if r - s == 0 {
                Partition::empty()
            } else {
                Partition::new(vec![r - s])
            };
            factor.add_term(a, b, 1);
        }
        acc = acc.mul(&factor); // straightening is basis-agnostic
    }
    DELTA_PLUS_E.lock().unwrap().insert(la.clone(), acc.clone());
    acc
}

fn pair_ee_plus(la: &Partition, mu: &Partition) -> i64 {
    if la.size() != mu.size() {
        return 0;
    }
    if la.is_empty() {
        return 1;
    }
    if la.ht() == 1 && mu.ht() > 1 {
        return pair_ee_plus(mu, la);
    }
    if mu.ht() == 1 {
        let key = (la.clone(), mu.clone());
        if let Some(&hit) = PAIR_EE.lock().unwrap().get(&key) {
            return hit;
        }
        let r = mu.part(0);
        let a = la.part(0);
        let rest = Partition::new(la.parts()[1..].to_vec());
        let out = if a > r {
            0
        } else {
            let tail = if r == a {
                Partition::empty()
            } else {
                Partition::new(vec![r - a])
            };
            pair_ee_plus(&rest, &tail)
        };
        PAIR_EE.lock().unwrap().insert(key, out);
        return out;
    }
    let key = (la.clone(), mu.clone());
    if let Some(&hit) = PAIR_EE.lock().unwrap().get(&key) {
        return hit;
    }
    let a = la.part(0);
    let rest = Partition::new(la.parts()[1..].to_vec());
    let delta = delta_plus_elam(mu);
    let mut total = 0i64;
    for (&(ref l, ref r), &c) in &delta.coeffs {
        if l.size() != a {
            continue;
        }
        let single = Partition::new(vec![a]);
        let left = pair_ee_plus(l, &single);
        if left == 0 {
            continue;
        }
        total += c * left * pair_ee_plus(&rest, r);
    }
    PAIR_EE.lock().unwrap().insert(key, total);
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormSide {
    Minus,
    Plus,
}

/// The bilinear form `(x, y)^-` or `(x, y)^+`.
pub fn pair(x: &OSymElem, y: &OSymElem, side: FormSide) -> i64 {
    match side {
        FormSide::Minus => {
            let mut total = 0;
            for (la, &a) in &x.coeffs {
                for (mu, &b) in &y.coeffs {
                    total += a * b * pair_hh_minus(la, mu);
                }
            }
            total
        }
        FormSide::Plus => {
            let xe = to_e_coords(x);
            let ye = to_e_coords(y);
            let mut total = 0;
            for (la, &a) in &xe {
                for (mu, &b) in &ye {
                    total += a * b * pair_ee_plus(la, mu);
                }
            }
            total
        }
    }
}

// ---------------------------------------------------------------------------
// Schur basis

/// The odd Kostka number `K_{la,mu}`.
pub fn kostka(la: &Partition, mu: &Partition) -> i64 {
    kostka_signed(la, mu)
}

struct SchurTable {
    parts: Vec<Partition>, // sorted descending lex (dominance-compatible)
    k: Vec<Vec<i64>>,      // K[i][j] = K_{parts[i], parts[j]}
    inv: Vec<Vec<i64>>,    // s_la = sum_mu inv[mu][la] h_mu
}

static SCHUR_TABLES: LazyLock<Mutex<HashMap<u32, &'static SchurTable>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn schur_table(d: u32) -> &'static SchurTable {
    let mut guard = SCHUR_TABLES.lock().unwrap();
    if let Some(&t) = guard.get(&d) {
        return t;
    }
    let mut parts = partitions_of(d);
    parts.sort_by(|a, b| b.lex_cmp(a)); // descending lex
    let n = parts.len();
    // K[i][j] = K_{parts[i], parts[j]}; upper triangular with unit diagonal
    let mut k = vec![vec![0i64; n]; n];
    for j in 0..n {
        let col = crate::partition::kostka_column(&parts[j]);
        for i in 0..n {
            k[i][j] = col.get(&parts[i]).copied().unwrap_or(0);
        }
    }
    // invert the unitriangular matrix over Z: find M with K M = I
    let mut inv = vec![vec![0i64; n]; n];
    for col in 0..n {
        // solve K x = e_col by back substitution from the bottom
        let mut x = vec![0i64; n];
        for i in (0..n).rev() {
            let mut acc = if i == col { 1 } else { 0 };
            for j in i + 1..n {
                acc -= k[i][j] * x[j];
            }
            debug_assert_eq!(k[i][i], 1);
            x[i] = acc;
        }
        for i in 0..n {
            inv[i][col] = x[i];
        }
    }
    let table = Box::leak(Box::new(SchurTable { parts, k, inv }));
    guard.insert(d, table);
    table
}

/// Schur coordinates of `x`: the map `la -> coefficient of s_la`.
pub fn to_schur(x: &OSymElem) -> Coeffs {
    let mut out = Coeffs::new();
    let mut degrees: Vec<u32> = x.coeffs.keys().map(|k| k.size()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let table = schur_table(d);
        for (j, mu) in table.parts.iter().enumerate() {
            let c = *x.coeffs.get(mu).unwrap_or(&0);
            if c == 0 {
                continue;
            }
            // h_mu = sum_la K_{la,mu} s_la
            for (i, la) in table.parts.iter().enumerate() {
                let k = table.k[i][j];
                if k != 0 {
                    *out.entry(la.clone()).or_insert(0) += k * c;
                }
            }
        }
    }
    clean(&mut out);
    out
}

/// The element `sum c_la s_la` written in the h-basis.
pub fn from_schur(coeffs: &Coeffs) -> OSymElem {
    let mut out = Coeffs::new();
    for (la, &c) in coeffs {
        if c == 0 {
            continue;
        }
        let d = la.size();
        let table = schur_table(d);
        let col = table.parts.iter().position(|p| p == la).unwrap();
        for (i, mu) in table.parts.iter().enumerate() {
            let v = table.inv[i][col];
            if v != 0 {
                *out.entry(mu.clone()).or_insert(0) += v * c;
            }
        }
    }
    clean(&mut out);
    OSymElem { coeffs: out }
}

/// The odd Schur function `s_la` as an element in the h-basis.
pub fn schur_elem(la: &Partition) -> OSymElem {
    let mut m = Coeffs::new();
    m.insert(la.clone(), 1);
    from_schur(&m)
}

/// Odd Littlewood-Richardson coefficients: the expansion of `s_la s_mu` in
/// the Schur basis.
pub fn lr(la: &Partition, mu: &Partition) -> Coeffs {
    to_schur(&schur_elem(la).mul(&schur_elem(mu)))
}

// ---------------------------------------------------------------------------
// truncations OSym_n

/// Canonical lift of `pi_n(x)`: Schur coordinates with `ht > n` dropped.
pub fn truncate(x: &OSymElem, n: usize) -> OSymElem {
    let mut s = to_schur(x);
    s.retain(|la, _| la.ht() <= n);
    from_schur(&s)
}

/// Schur coordinates of `pi_n(x)` (keys all of height at most `n`).
pub fn truncate_schur(x: &OSymElem, n: usize) -> Coeffs {
    let mut s = to_schur(x);
    s.retain(|la, _| la.ht() <= n);
    s
}

/// e-coordinates of `pi_n(x)` (parts larger than `n` dropped).
pub fn truncate_e(x: &OSymElem, n: usize) -> Coeffs {
    let mut e = to_e_coords(x);
    e.retain(|la, _| la.part(0) as usize <= n);
    e
}

/// Graded superdimension of `OSym_n` through degree `2*dmax`: the generating
/// function `sum (pi q^2)^{|la|}` over `ht(la) <= n`.
pub fn osym_n_graded_dim(n: usize, dmax: u32) -> GPScalar {
    let mut out = GPScalar::zero();
    for d in 0..=dmax {
        let cnt = crate::partition::partitions_of_ht(d, n).len() as i64;
        out.add_term(2 * d as i64, d as i64, cnt);
    }
    out
}

/// Truncation through degree `2*dmax` of `prod_{r=1}^{n} 1/(1-(pi q^2)^r)`.
pub fn osym_n_graded_dim_product(n: usize, dmax: u32) -> GPScalar {
    // expand each factor as a truncated geometric series and multiply
    let mut acc: Vec<i64> = vec![0; dmax as usize + 1];
    acc[0] = 1;
    for r in 1..=n {
        let mut next = vec![0i64; dmax as usize + 1];
        for (d, &c) in acc.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut k = 0usize;
            while d + k * r <= dmax as usize {
                next[d + k * r] += c;
                k += 1;
            }
        }
        acc = next;
    }
    let mut out = GPScalar::zero();
    for (d, &c) in acc.iter().enumerate() {
        out.add_term(2 * d as i64, d as i64, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn straightening_examples() {
        // [2,1] is already decreasing
        assert_eq!(straighten(&[2, 1], 1), OSymElem::from_h(p(&[2, 1]), 1));
        // h_1 h_2 = 2 h_3 - h_{(2,1)}
        let x = straighten(&[1, 2], 1);
        let expect = OSymElem::h(3).scale(2).sub(&OSymElem::from_h(p(&[2, 1]), 1));
        assert_eq!(x, expect);
        // h_2 h_3 = h_{(3,2)} + 2 h_{(4,1)} - 2 h_{(5)}
        let x = straighten(&[2, 3], 1);
        let expect = OSymElem::from_h(p(&[3, 2]), 1)
            .add(&OSymElem::from_h(p(&[4, 1]), 2))
            .add(&OSymElem::h(5).scale(-2));
        assert_eq!(x, expect);
    }

    #[test]
    fn mul_basics() {
        let h1 = OSymElem::h(1);
        assert_eq!(h1.mul(&h1), OSymElem::from_h(p(&[1, 1]), 1));
        let h2 = OSymElem::h(2);
        assert_eq!(
            h1.mul(&h2),
            OSymElem::h(3).scale(2).sub(&OSymElem::from_h(p(&[2, 1]), 1))
        );
        // associativity on a few random-ish triples
        let a = straighten(&[3, 1], 1).add(&OSymElem::h(4).scale(-2));
        let b = straighten(&[2, 2], 1);
        let c = OSymElem::h(1).add(&OSymElem::h(3));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn e_elements() {
        assert_eq!(e_elem(0), OSymElem::one());
        assert_eq!(e_elem(1), OSymElem::h(1));
        // e_2 = h_1^2 - h_2
        assert_eq!(
            e_elem(2),
            OSymElem::from_h(p(&[1, 1]), 1).sub(&OSymElem::h(2))
        );
        // e_3 = h_1^3 - h_3
        assert_eq!(
            e_elem(3),
            OSymElem::from_h(p(&[1, 1, 1]), 1).sub(&OSymElem::h(3))
        );
    }

    #[test]
    fn grassmannian_relations() {
        for r in 1..=12u32 {
            let mut acc = OSymElem::zero();
            let mut acc2 = OSymElem::zero();
            for s in 0..=r {
                acc = acc.add(&e_elem(s).mul(&OSymElem::h(r - s)).scale(sgn(s as i64)));
                acc2 = acc2.add(&OSymElem::h(s).mul(&e_elem(r - s)).scale(sgn(s as i64)));
            }
            assert!(acc.is_zero(), "oddgrassmannian fails at r={r}");
            assert!(acc2.is_zero(), "oddgrassmannian2 fails at r={r}");
        }
    }

    #[test]
    fn basis_roundtrip() {
        for d in 0..=10u32 {
            for la in partitions_of(d) {
                let x = OSymElem::from_h(la, 1);
                assert_eq!(from_e_coords(&to_e_coords(&x)), x);
                assert_eq!(from_schur(&to_schur(&x)), x);
            }
        }
    }

    #[test]
    fn psi_involution_and_images() {
        for d in 0..=10u32 {
            for la in partitions_of(d) {
                let x = OSymElem::from_h(la, 1);
                assert_eq!(psi(&psi(&x)), x);
            }
        }
        for r in 0..=6u32 {
            assert_eq!(psi(&OSymElem::h(r)), e_elem(r).scale(sgn(r as i64)));
            assert_eq!(psi(&e_elem(r)), OSymElem::h(r).scale(sgn(r as i64)));
        }
    }

    #[test]
    fn gamma_star_properties() {
        // gamma(h_r) = (-1)^{binom(r,2)} h_r^*
        for r in 0..=6u32 {
            let lhs = gamma(&OSymElem::h(r));
            let rhs = star(&OSymElem::h(r)).scale(sgn(binom2(r as i64)));
            assert_eq!(lhs, rhs, "tigers r={r}");
        }
        assert_eq!(star(&OSymElem::one()), OSymElem::one());
        // gamma and * commute; both are involutions
        for d in 0..=7u32 {
            for la in partitions_of(d) {
                let x = OSymElem::from_h(la, 1);
                assert_eq!(gamma(&gamma(&x)), x);
                assert_eq!(star(&star(&x)), x);
                assert_eq!(gamma(&star(&x)), star(&gamma(&x)));
            }
        }
    }

    #[test]
    fn star_antihomomorphism() {
        let a = straighten(&[2, 1], 1);
        let b = straighten(&[3], 1).add(&straighten(&[1, 1], 1));
        // *(ab) = (-1)^{par a par b} b* a*, checked on parity-homogeneous pieces
        for (pa, xa) in [(0u32, a.parity_split().0), (1, a.parity_split().1)] {
            for (pb, xb) in [(0u32, b.parity_split().0), (1, b.parity_split().1)] {
                let lhs = star(&xa.mul(&xb));
                let rhs = star(&xb).mul(&star(&xa)).scale(sgn((pa * pb) as i64));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let d = coproduct_minus(&OSymElem::h(2));
        let mut expect = OSymTensor::zero();
        expect.add_term(p(&[2]), Partition::empty(), 1);
        expect.add_term(p(&[1]), p(&[1]), 1);
        expect.add_term(Partition::empty(), p(&[2]), 1);
        assert_eq!(d, expect);
        assert_eq!(
            coproduct_minus(&OSymElem::one()).coeffs.len(),
            1
        );
        // Delta^+(e_r) = sum e_s (x) e_{r-s}
        for r in 0..=6u32 {
            let lhs = coproduct_plus(&e_elem(r));
            let mut rhs = OSymTensor::zero();
            for s in 0..=r {
                let a = e_elem(s);
                let b = e_elem(r - s);
                for (la, &ca) in &a.coeffs {
                    for (mu, &cb) in &b.coeffs {
                        rhs.add_term(la.clone(), mu.clone(), ca * cb);
                    }
                }
            }
            rhs = rhs.cleaned();
            assert_eq!(lhs, rhs, "nhs r={r}");
        }
    }

    #[test]
    fn form_values() {
        // (h_{(1,1)}, e_2)^- = -1 ; (h_2, e_2)^- = 0
        assert_eq!(pair(&OSymElem::from_h(p(&[1, 1]), 1), &e_elem(2), FormSide::Minus), -1);
        assert_eq!(pair(&OSymElem::h(2), &e_elem(2), FormSide::Minus), 0);
        // (e_r, e_s)^- = (-1)^{binom(r,2)} delta_{rs}
        for r in 0..=6u32 {
            for s in 0..=6u32 {
                let v = pair(&e_elem(r), &e_elem(s), FormSide::Minus);
                let expect = if r == s { sgn(binom2(r as i64)) } else { 0 };
                assert_eq!(v, expect, "britain r={r} s={s}");
                let v = pair(&OSymElem::h(r), &OSymElem::h(s), FormSide::Plus);
                assert_eq!(v, expect, "britain+ r={r} s={s}");
            }
        }
        // (h_la, e_r)^- = (-1)^{binom(r,2)} delta_{la, (1^r)}
        for r in 1..=5u32 {
            for la in partitions_of(r) {
                let v = pair(&OSymElem::from_h(la.clone(), 1), &e_elem(r), FormSide::Minus);
                let expect = if la == Partition::new(vec![1; r as usize]) {
                    sgn(binom2(r as i64))
                } else {
                    0
                };
                assert_eq!(v, expect, "brew la={la}");
            }
        }
    }

    #[test]
    fn schur_basics() {
        for r in 0..=6u32 {
            assert_eq!(schur_elem(&p(&[r])), OSymElem::h(r));
            if r >= 1 {
                assert_eq!(schur_elem(&Partition::new(vec![1; r as usize])), e_elem(r));
            }
        }
        // h_{(1,1,1)} = s_{(3)} + s_{(1,1,1)}
        let s = to_schur(&OSymElem::from_h(p(&[1, 1, 1]), 1));
        let mut expect = Coeffs::new();
        expect.insert(p(&[3]), 1);
        expect.insert(p(&[1, 1, 1]), 1);
        assert_eq!(s, expect);
    }

    #[test]
    fn lr_examples() {
        // s_1 s_1 = s_2 + s_{11}
        let c = lr(&p(&[1]), &p(&[1]));
        let mut expect = Coeffs::new();
        expect.insert(p(&[2]), 1);
        expect.insert(p(&[1, 1]), 1);
        assert_eq!(c, expect);
        // la = empty: identity
        let c = lr(&Partition::empty(), &p(&[2, 1]));
        assert_eq!(c.len(), 1);
        assert_eq!(c[&p(&[2, 1])], 1);
    }

    #[test]
    fn truncation_basics() {
        // e_{n+1} -> 0 in OSym_n
        for n in 0..=4usize {
            assert!(truncate(&e_elem(n as u32 + 1), n).is_zero());
        }
        // s_{(1,1,1)} -> 0 in OSym_2
        assert!(truncate(&schur_elem(&p(&[1, 1, 1])), 2).is_zero());
        // graded dimension of OSym_2 through degree 10 (q-degree 20)
        assert_eq!(osym_n_graded_dim(2, 10), osym_n_graded_dim_product(2, 10));
        // e-coordinate truncation agrees with the Schur route
        for d in 0..=6u32 {
            for la in partitions_of(d) {
                let x = OSymElem::from_h(la, 1);
                for n in 0..=3usize {
                    let via_e = from_e_coords(&truncate_e(&x, n));
                    assert_eq!(truncate_schur(&via_e, n), truncate_schur(&x, n));
                }
            }
        }
    }
}
