//! Odd polynomials OPol_n, the signed S_n-action, odd Demazure operators and
//! the left/right odd nil-Hecke actions.
//!
//! Monomials are stored in the fixed order `x_1^{k_1} ... x_n^{k_n}`; each
//! `x_i` is odd of degree 2 and distinct variables anticommute.

use crate::perm::Perm;
use crate::scalar::sgn;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type Expo = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OPolElem {
    pub n: usize,
    pub coeffs: BTreeMap<Expo, i64>,
}

/// A generator of the odd nil-Hecke algebra acting on OPol_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    /// Left multiplication by `x_i` (1-indexed).
    X(usize),
    /// The odd Demazure operator `tau_j = del_j` (1-indexed).
    Tau(usize),
}

impl OPolElem {
    pub fn zero(n: usize) -> Self {
        OPolElem { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        OPolElem::monomial(n, &vec![0; n], 1)
    }

    pub fn monomial(n: usize, expo: &[u16], c: i64) -> Self {
        assert_eq!(expo.len(), n);
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(expo.to_vec(), c);
        }
        OPolElem { n, coeffs }
    }

    /// The variable `x_i` (1-indexed).
    pub fn x(n: usize, i: usize) -> Self {
        let mut e = vec![0u16; n];
        e[i - 1] = 1;
        OPolElem::monomial(n, &e, 1)
    }

    pub fn x_pow(n: usize, i: usize, k: u16) -> Self {
        let mut e = vec![0u16; n];
        e[i - 1] = k;
        OPolElem::monomial(n, &e, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &OPolElem) -> OPolElem {
        assert_eq!(self.n, other.n);
        let mut coeffs = self.coeffs.clone();
        for (k, &c) in &other.coeffs {
            let e = coeffs.entry(k.clone()).or_insert(0);
            *e += c;
        }
        coeffs.retain(|_, c| *c != 0);
        OPolElem { n: self.n, coeffs }
    }

    pub fn sub(&self, other: &OPolElem) -> OPolElem {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> OPolElem {
        if c == 0 {
            return OPolElem::zero(self.n);
        }
        OPolElem {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, &a)| (k.clone(), a * c)).collect(),
        }
    }

    /// Koszul reorder sign for concatenating monomials `x^k . x^m`: each
    /// right-letter `x_j` passes the left-letters `x_i` with `i > j`.
    fn merge_sign(left: &[u16], right: &[u16]) -> i64 {
        let mut inv = 0i64;
        for j in 0..right.len() {
            if right[j] == 0 {
                continue;
            }
            let mut above = 0i64;
            for i in j + 1..left.len() {
                above += left[i] as i64;
            }
            inv += right[j] as i64 * above;
        }
        sgn(inv)
    }

    pub fn mul(&self, other: &OPolElem) -> OPolElem {
        assert_eq!(self.n, other.n, "mismatched variable counts");
        let mut out = BTreeMap::new();
        for (ka, &a) in &self.coeffs {
            for (kb, &b) in &other.coeffs {
                let sign = OPolElem::merge_sign(ka, kb);
                let key: Expo = ka.iter().zip(kb).map(|(&x, &y)| x + y).collect();
                let e = out.entry(key).or_insert(0);
                *e += sign * a * b;
            }
        }
        out.retain(|_, c| *c != 0);
        OPolElem { n: self.n, coeffs: out }
    }

    /// Degree (in the 2Z-grading) of a homogeneous element; panics if mixed.
    pub fn degree(&self) -> Option<i64> {
        let mut degs: Vec<i64> = self
            .coeffs
            .keys()
            .map(|k| 2 * k.iter().map(|&e| e as i64).sum::<i64>())
            .collect();
        degs.sort_unstable();
        degs.dedup();
        match degs.len() {
            0 => None,
            1 => Some(degs[0]),
            _ => panic!("inhomogeneous element"),
        }
    }

    /// The signed action `^w x_i = (-1)^{l(w) + w(i) - i} x_{w(i)}` extended
    /// as a superalgebra automorphism.
    pub fn sn_act(&self, w: &Perm) -> OPolElem {
        assert_eq!(w.n(), self.n);
        let l = w.length() as i64;
        let mut out = OPolElem::zero(self.n);
        for (k, &c) in &self.coeffs {
            let mut acc = OPolElem::one(self.n);
            let mut sign = 1i64;
            for (i, &e) in k.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let target = w.apply(i); // 0-indexed
                let s = sgn(l + target as i64 - i as i64);
                sign *= if e % 2 == 1 { s } else { 1 };
                // x_{w(i)}^e with the per-letter sign s^e folded into `sign`
                acc = acc.mul(&OPolElem::x_pow(self.n, target + 1, e));
            }
            out = out.add(&acc.scale(sign * c));
        }
        out
    }

    fn s_j(&self, j: usize) -> OPolElem {
        self.sn_act(&Perm::transposition(self.n, j))
    }

    /// The odd Demazure operator `del_j`, via the twisted Leibniz rule,
    /// peeling the lowest-index variable of each monomial.
    pub fn demazure(&self, j: usize) -> OPolElem {
        assert!(1 <= j && j < self.n);
        let mut out = OPolElem::zero(self.n);
        for (k, &c) in &self.coeffs {
            out = out.add(&demazure_monomial(self.n, k, j).scale(c));
        }
        out
    }

    /// Apply an operator word (leftmost generator acts last).
    pub fn apply_word(&self, word: &[Gen]) -> OPolElem {
        let mut acc = self.clone();
        for g in word.iter().rev() {
            acc = match *g {
                Gen::X(i) => OPolElem::x(self.n, i).mul(&acc),
                Gen::Tau(j) => acc.demazure(j),
            };
        }
        acc
    }

    /// The right nil-Hecke action `f . tau_j`, via the twisted right Leibniz
    /// rule, peeling the highest-index variable of each monomial.
    pub fn right_tau(&self, j: usize) -> OPolElem {
        assert!(1 <= j && j < self.n);
        let mut out = OPolElem::zero(self.n);
        for (k, &c) in &self.coeffs {
            out = out.add(&right_tau_monomial(self.n, k, j).scale(c));
        }
        out
    }

    /// Apply a right operator word left to right: `f.(g1 g2) = (f.g1).g2`.
    pub fn apply_right_word(&self, word: &[Gen]) -> OPolElem {
        let mut acc = self.clone();
        for g in word {
            acc = match *g {
                Gen::X(i) => acc.mul(&OPolElem::x(self.n, i)),
                Gen::Tau(j) => acc.right_tau(j),
            };
        }
        acc
    }

    /// The variable-reversing algebra involution `gamma_n: x_i -> x_{n+1-i}`.
    pub fn gamma(&self) -> OPolElem {
        let mut out = OPolElem::zero(self.n);
        for (k, &c) in &self.coeffs {
            let mut acc = OPolElem::one(self.n);
            for (i, &e) in k.iter().enumerate() {
                if e > 0 {
                    acc = acc.mul(&OPolElem::x_pow(self.n, self.n - i, e));
                }
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// The superalgebra anti-involution `*` fixing each `x_i` (reverses
    /// monomials with the Koszul sign).
    pub fn star(&self) -> OPolElem {
        let mut out = OPolElem::zero(self.n);
        for (k, &c) in &self.coeffs {
            // reversing the word and reordering distinct variables back
            // leaves one -1 per same-variable letter pair
            let sign = sgn(k.iter().map(|&e| crate::scalar::binom2(e as i64)).sum());
            out = out.add(&OPolElem::monomial(self.n, k, sign * c));
        }
        out
    }
}

fn demazure_monomial(n: usize, k: &[u16], j: usize) -> OPolElem {
    let first = match k.iter().position(|&e| e > 0) {
        None => return OPolElem::zero(n),
        Some(i) => i,
    };
    let m = k[first];
    let i = first + 1; // 1-indexed variable
    let mut rest = k.to_vec();
    rest[first] = 0;
    let u_pow = del_power(n, i, m, j);
    let rest_elem = OPolElem::monomial(n, &rest, 1);
    // del(u v) = del(u) v + (s_j u) del(v)
    let mut out = u_pow.mul(&rest_elem);
    let su = OPolElem::x_pow(n, i, m).s_j(j);
    let dv = demazure_monomial(n, &rest, j);
    out = out.add(&su.mul(&dv));
    out
}

/// `del_j(x_i^m)` closed forms.
fn del_power(n: usize, i: usize, m: u16, j: usize) -> OPolElem {
    if m == 0 {
        return OPolElem::zero(n);
    }
    if i == j {
        // sum_{s=0}^{m-1} x_{j+1}^s x_j^{m-1-s}
        let mut out = OPolElem::zero(n);
        for s in 0..m {
            let t = OPolElem::x_pow(n, j + 1, s).mul(&OPolElem::x_pow(n, j, m - 1 - s));
            out = out.add(&t);
        }
        out
    } else if i == j + 1 {
        let mut out = OPolElem::zero(n);
        for s in 0..m {
            let t = OPolElem::x_pow(n, j, s).mul(&OPolElem::x_pow(n, j + 1, m - 1 - s));
            out = out.add(&t);
        }
        out.scale(-1)
    } else {
        OPolElem::zero(n)
    }
}

fn right_tau_monomial(n: usize, k: &[u16], j: usize) -> OPolElem {
    let last = match k.iter().rposition(|&e| e > 0) {
        None => return OPolElem::zero(n),
        Some(i) => i,
    };
    let m = k[last];
    let i = last + 1;
    let mut rest = k.to_vec();
    rest[last] = 0;
    let rest_elem = OPolElem::monomial(n, &rest, 1);
    // (h u).tau = h (u.tau) + (h.tau) (s_j u)
    let mut out = rest_elem.mul(&right_tau_power(n, i, m, j));
    let ht = right_tau_monomial(n, &rest, j);
    let su = OPolElem::x_pow(n, i, m).s_j(j);
    out = out.add(&ht.mul(&su));
    out
}

/// `x_i^m . tau_j` closed forms.
fn right_tau_power(n: usize, i: usize, m: u16, j: usize) -> OPolElem {
    if m == 0 {
        return OPolElem::zero(n);
    }
    if i == j {
        let mut out = OPolElem::zero(n);
        for s in 0..m {
            out = out.add(&OPolElem::x_pow(n, j, m - 1 - s).mul(&OPolElem::x_pow(n, j + 1, s)));
        }
        out
    } else if i == j + 1 {
        let mut out = OPolElem::zero(n);
        for s in 0..m {
            out = out.add(&OPolElem::x_pow(n, j + 1, m - 1 - s).mul(&OPolElem::x_pow(n, j, s)));
        }
        out.scale(-1)
    } else {
        OPolElem::zero(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn random_poly(rng: &mut Rng, n: usize, maxdeg: u16, terms: usize) -> OPolElem {
        let mut out = OPolElem::zero(n);
        for _ in 0..terms {
            let expo: Expo = (0..n).map(|_| rng.below(maxdeg as u64 + 1) as u16).collect();
            out = out.add(&OPolElem::monomial(n, &expo, rng.coeff()));
        }
        out
    }

    #[test]
    fn anticommuting_variables() {
        let n = 3;
        let x1 = OPolElem::x(n, 1);
        let x2 = OPolElem::x(n, 2);
        assert_eq!(x2.mul(&x1), x1.mul(&x2).scale(-1));
        // (x1 - x2)^2 = (x1 + x2)^2
        let a = x1.sub(&x2);
        let b = x1.add(&x2);
        assert_eq!(a.mul(&a), b.mul(&b));
        let f = random_poly(&mut Rng::new(7), n, 3, 5);
        assert_eq!(OPolElem::one(n).mul(&f), f);
    }

    #[test]
    fn sn_action() {
        let n = 3;
        let s1 = Perm::transposition(n, 1);
        assert_eq!(OPolElem::x(n, 1).sn_act(&s1), OPolElem::x(n, 2));
        assert_eq!(OPolElem::x(n, 2).sn_act(&s1), OPolElem::x(n, 1));
        assert_eq!(OPolElem::x(n, 3).sn_act(&s1), OPolElem::x(n, 3).scale(-1));
        // automorphism property on random inputs
        let mut rng = Rng::new(11);
        for w in Perm::all(3) {
            for _ in 0..4 {
                let f = random_poly(&mut rng, n, 2, 4);
                let g = random_poly(&mut rng, n, 2, 4);
                assert_eq!(f.mul(&g).sn_act(&w), f.sn_act(&w).mul(&g.sn_act(&w)));
            }
        }
        // composition: ^(vw) f = ^v(^w f)
        let mut rng = Rng::new(5);
        for v in Perm::all(3) {
            for w in Perm::all(3) {
                let f = random_poly(&mut rng, n, 2, 3);
                assert_eq!(f.sn_act(&w).sn_act(&v), f.sn_act(&v.compose(&w)));
            }
        }
    }

    #[test]
    fn demazure_examples() {
        let n = 2;
        // del_1(x_1^2) = x_1 + x_2 ... careful: rank22 gives sum x_2^s x_1^{1-s}
        let d = OPolElem::x_pow(n, 1, 2).demazure(1);
        assert_eq!(d, OPolElem::x(n, 1).add(&OPolElem::x(n, 2)));
        let d = OPolElem::x_pow(n, 2, 2).demazure(1);
        assert_eq!(d, OPolElem::x(n, 1).add(&OPolElem::x(n, 2)).scale(-1));
        // twisted Leibniz rule on random pairs
        let mut rng = Rng::new(3);
        for _ in 0..10 {
            let f = random_poly(&mut rng, 3, 2, 4);
            let g = random_poly(&mut rng, 3, 2, 4);
            for j in 1..3 {
                let lhs = f.mul(&g).demazure(j);
                let rhs = f.demazure(j).mul(&g).add(&f.s_j(j).mul(&g.demazure(j)));
                assert_eq!(lhs, rhs, "j={j}");
            }
        }
    }

    #[test]
    fn onh_relations_as_operators() {
        // ONH1-ONH6 acting on random polynomials, n <= 4
        let mut rng = Rng::new(2024);
        for n in 2..=4usize {
            for _ in 0..6 {
                let f = random_poly(&mut rng, n, 3, 5);
                // tau_j^2 = 0
                for j in 1..n {
                    assert!(f.demazure(j).demazure(j).is_zero());
                }
                // x_i tau_j = -tau_j x_i for i != j, j+1
                for j in 1..n {
                    for i in 1..=n {
                        if i == j || i == j + 1 {
                            continue;
                        }
                        let lhs = OPolElem::x(n, i).mul(&f.demazure(j));
                        let rhs = OPolElem::x(n, i).mul(&f).demazure(j).scale(-1);
                        assert_eq!(lhs, rhs);
                    }
                }
                // tau_i tau_j = -tau_j tau_i for |i-j| > 1
                for i in 1..n {
                    for j in 1..n {
                        if (i as i64 - j as i64).abs() > 1 {
                            let lhs = f.demazure(j).demazure(i);
                            let rhs = f.demazure(i).demazure(j).scale(-1);
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
                // braid: tau_j tau_{j+1} tau_j = -tau_{j+1} tau_j tau_{j+1}
                for j in 1..n.saturating_sub(1) {
                    let lhs = f.demazure(j).demazure(j + 1).demazure(j);
                    let rhs = f.demazure(j + 1).demazure(j).demazure(j + 1).scale(-1);
                    assert_eq!(lhs, rhs);
                }
                // x_i tau_i - tau_i x_{i+1} = 1 = tau_i x_i - x_{i+1} tau_i
                for i in 1..n {
                    let a = OPolElem::x(n, i)
                        .mul(&f.demazure(i))
                        .sub(&OPolElem::x(n, i + 1).mul(&f).demazure(i));
                    assert_eq!(a, f, "ONH6a");
                    let b = OPolElem::x(n, i)
                        .mul(&f)
                        .demazure(i)
                        .sub(&OPolElem::x(n, i + 1).mul(&f.demazure(i)));
                    assert_eq!(b, f, "ONH6b");
                }
            }
        }
    }

    #[test]
    fn right_action_examples() {
        let n = 2;
        assert_eq!(OPolElem::x(n, 1).right_tau(1), OPolElem::one(n));
        assert_eq!(OPolElem::x(n, 2).right_tau(1), OPolElem::one(n).scale(-1));
        // x_1^r . tau_1 = sum_q x_1^{r-q-1} x_2^q
        for r in 1..=4u16 {
            let lhs = OPolElem::x_pow(n, 1, r).right_tau(1);
            let mut rhs = OPolElem::zero(n);
            for q in 0..r {
                rhs = rhs.add(&OPolElem::x_pow(n, 1, r - q - 1).mul(&OPolElem::x_pow(n, 2, q)));
            }
            assert_eq!(lhs, rhs, "r={r}");
        }
        // right action commutes with left multiplication by symmetric
        // elements, and the left action with right multiplication by them
        let mut rng = Rng::new(17);
        for _ in 0..8 {
            let f = random_poly(&mut rng, 3, 2, 4);
            for j in 1..3 {
                for r in 1..=3u32 {
                    let e = crate::onh::pi_e(3, r);
                    let lhs = e.mul(&f).right_tau(j);
                    let rhs = e.mul(&f.right_tau(j));
                    assert_eq!(lhs, rhs, "right tau is OSym-left-linear r={r} j={j}");
                    let lhs = f.mul(&e).demazure(j);
                    let rhs = f.demazure(j).mul(&e);
                    assert_eq!(lhs, rhs, "left tau is OSym-right-linear r={r} j={j}");
                }
            }
        }
        // right tau squared is zero
        for _ in 0..5 {
            let f = random_poly(&mut rng, 3, 3, 4);
            for j in 1..3 {
                assert!(f.right_tau(j).right_tau(j).is_zero());
            }
        }
    }

    #[test]
    fn right_action_via_star() {
        // f.a = (-1)^{par a par f} (a* . f*)*  with a = tau_j, a* = -tau_j
        let mut rng = Rng::new(23);
        for _ in 0..10 {
            let f = random_poly(&mut rng, 3, 2, 3);
            for j in 1..3 {
                // check on parity-homogeneous pieces
                for par_f in 0..2u16 {
                    let piece = OPolElem {
                        n: 3,
                        coeffs: f
                            .coeffs
                            .iter()
                            .filter(|(k, _)| k.iter().map(|&e| e as i64).sum::<i64>() % 2 == par_f as i64)
                            .map(|(k, &c)| (k.clone(), c))
                            .collect(),
                    };
                    let lhs = piece.right_tau(j);
                    let inner = piece.star().demazure(j).scale(-1);
                    let rhs = inner.star().scale(crate::scalar::sgn(par_f as i64));
                    assert_eq!(lhs, rhs, "opolright j={j} par={par_f}");
                }
            }
        }
    }
}
