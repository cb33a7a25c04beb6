//! Odd Schubert polynomials, the omega/xi idempotents and the odd nil-Hecke
//! module structure of OPol_n over OSym_n.

use crate::opol::{Gen, OPolElem};
use crate::osym::{self, OSymElem};
use crate::partition::Partition;
use crate::perm::Perm;
use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, Mutex};

/// The fixed reduced word of the longest element used to normalize
/// `omega_n = tau_{n-1} ... tau_1 sig_1(omega_{n-1})`.
pub fn omega_word(n: usize) -> Vec<usize> {
    if n <= 1 {
        return Vec::new();
    }
    let mut word: Vec<usize> = (1..n).rev().collect();
    word.extend(omega_word(n - 1).into_iter().map(|j| j + 1));
    word
}

/// The staircase monomial `xi_n = x_{n-1} x_{n-2}^2 ... x_1^{n-1}`.
pub fn xi_elem(n: usize) -> OPolElem {
    let mut acc = OPolElem::one(n);
    for i in (1..n).rev() {
        acc = acc.mul(&OPolElem::x_pow(n, i, (n - i) as u16));
    }
    acc
}

fn tau_word_of(word: &[usize]) -> Vec<Gen> {
    word.iter().map(|&j| Gen::Tau(j)).collect()
}

/// Apply `omega_n` to a polynomial.
pub fn omega_apply(n: usize, f: &OPolElem) -> OPolElem {
    f.apply_word(&tau_word_of(&omega_word(n)))
}

/// The projector `(omega xi)_n` applied to `f`.
pub fn omega_xi_apply(n: usize, f: &OPolElem) -> OPolElem {
    omega_apply(n, &xi_elem(n).mul(f))
}

/// The projector `(xi omega)_n` applied to `f`.
pub fn xi_omega_apply(n: usize, f: &OPolElem) -> OPolElem {
    xi_elem(n).mul(&omega_apply(n, f))
}

static SCHUBERT: LazyLock<Mutex<HashMap<(usize, Perm), OPolElem>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The odd Schubert polynomial `p_w^{(n)} = tau_{w^{-1} w_n} . xi_n`, using
/// the lexicographically smallest reduced word of `w^{-1} w_n`, except that
/// the longest element itself keeps the fixed expression of [`omega_word`]
/// (this pins `p_1^{(n)} = 1`).
pub fn schubert(w: &Perm, n: usize) -> OPolElem {
    assert_eq!(w.n(), n);
    if let Some(hit) = SCHUBERT.lock().unwrap().get(&(n, w.clone())) {
        return hit.clone();
    }
    let u = w.inverse().compose(&Perm::longest(n));
    let word = if u == Perm::longest(n) {
        omega_word(n)
    } else {
        u.lex_min_reduced_word()
    };
    let out = xi_elem(n).apply_word(&tau_word_of(&word));
    SCHUBERT.lock().unwrap().insert((n, w.clone()), out.clone());
    out
}

/// Apply `tau_w` (canonical reduced word) to `f`.
pub fn tau_apply(w: &Perm, f: &OPolElem) -> OPolElem {
    f.apply_word(&tau_word_of(&w.lex_min_reduced_word()))
}

/// Whether `f` lies in `OSym_n` (all Demazure operators vanish).
pub fn is_osym(f: &OPolElem) -> bool {
    (1..f.n).all(|j| f.demazure(j).is_zero())
}

static PI_H: LazyLock<Mutex<HashMap<(usize, u32), OPolElem>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static PI_HLAM: LazyLock<Mutex<HashMap<(usize, Partition), OPolElem>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `h_r^{(n)} = sum_{n >= i_r >= ... >= i_1 >= 1} x_{i_r} ... x_{i_1}`.
pub fn pi_h(n: usize, r: u32) -> OPolElem {
    if r == 0 {
        return OPolElem::one(n);
    }
    if let Some(hit) = PI_H.lock().unwrap().get(&(n, r)) {
        return hit.clone();
    }
    // recursively: h_r^{(n)} = sum_{i} x_i * (h_{r-1} over indices <= i)
    fn rec(n: usize, r: u32, maxvar: usize) -> OPolElem {
        if r == 0 {
            return OPolElem::one(n);
        }
        let mut acc = OPolElem::zero(n);
        for i in 1..=maxvar {
            acc = acc.add(&OPolElem::x(n, i).mul(&rec(n, r - 1, i)));
        }
        acc
    }
    let out = rec(n, r, n);
    PI_H.lock().unwrap().insert((n, r), out.clone());
    out
}

/// `e_r^{(n)} = sum_{i_1 < ... < i_r} x_{i_1} ... x_{i_r}`.
pub fn pi_e(n: usize, r: u32) -> OPolElem {
    if r as usize > n {
        return OPolElem::zero(n);
    }
    fn rec(n: usize, r: u32, minvar: usize) -> OPolElem {
        if r == 0 {
            return OPolElem::one(n);
        }
        let mut acc = OPolElem::zero(n);
        for i in minvar..=n {
            acc = acc.add(&OPolElem::x(n, i).mul(&rec(n, r - 1, i + 1)));
        }
        acc
    }
    rec(n, r, 1)
}

/// `epsilon_r^{(n)} = sum_{n >= i_r > ... > i_1 >= 1} x_{i_r} ... x_{i_1}`.
pub fn pi_epsilon(n: usize, r: u32) -> OPolElem {
    pi_e(n, r).gamma()
}

/// `eta_r^{(n)} = sum_{i_1 <= ... <= i_r} x_{i_1} ... x_{i_r}`.
pub fn pi_eta(n: usize, r: u32) -> OPolElem {
    pi_h(n, r).gamma()
}

/// The projection `pi_n: OSym -> OSym_n` in polynomial form.
pub fn pi_n(x: &OSymElem, n: usize) -> OPolElem {
    let mut out = OPolElem::zero(n);
    for (la, &c) in &x.coeffs {
        out = out.add(&pi_hlam(n, la).scale(c));
    }
    out
}

fn pi_hlam(n: usize, la: &Partition) -> OPolElem {
    if let Some(hit) = PI_HLAM.lock().unwrap().get(&(n, la.clone())) {
        return hit.clone();
    }
    let mut acc = OPolElem::one(n);
    for &p in la.parts() {
        acc = acc.mul(&pi_h(n, p));
    }
    PI_HLAM.lock().unwrap().insert((n, la.clone()), acc.clone());
    acc
}

/// The odd Schur polynomial `s_la^{(n)} = (omega xi)_n . x^la`.
pub fn schur_poly(la: &Partition, n: usize) -> OPolElem {
    assert!(la.ht() <= n, "schur_poly requires ht(la) <= n");
    let mut expo = vec![0u16; n];
    for (i, &p) in la.parts().iter().enumerate() {
        expo[i] = p as u16;
    }
    omega_xi_apply(n, &OPolElem::monomial(n, &expo, 1))
}

/// The dual odd Schur polynomial `sigma_la^{(n)} = gamma_n(s_la^{(n)})`.
pub fn dual_schur_poly(la: &Partition, n: usize) -> OPolElem {
    schur_poly(la, n).gamma()
}

static TAU_SIGN: LazyLock<Mutex<HashMap<(usize, Perm), i64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The sign `tau_w . p_w^{(n)} = +-1`.
fn tau_schubert_sign(w: &Perm, n: usize) -> i64 {
    if let Some(&hit) = TAU_SIGN.lock().unwrap().get(&(n, w.clone())) {
        return hit;
    }
    let v = tau_apply(w, &schubert(w, n));
    assert_eq!(v.coeffs.len(), 1, "tau_w p_w must be a scalar");
    let c = *v.coeffs.get(&vec![0u16; n]).expect("tau_w p_w must be constant");
    assert!(c == 1 || c == -1);
    TAU_SIGN.lock().unwrap().insert((n, w.clone()), c);
    c
}

/// Convert an element of `OSym_n` (given as a polynomial killed by all
/// Demazure operators) to abstract Schur coordinates, by peeling leading
/// monomials against the triangular Schur polynomials.
pub fn opol_to_schur_coords(f: &OPolElem) -> BTreeMap<Partition, i64> {
    let n = f.n;
    let mut cur = f.clone();
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    while !cur.is_zero() {
        // lexicographically largest exponent vector is the leading monomial
        let (key, &c) = cur.coeffs.iter().next_back().unwrap();
        let parts: Vec<u32> = key.iter().map(|&e| e as u32).collect();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "leading monomial of a symmetric polynomial must be a partition"
        );
        let la = Partition::new(parts);
        cur = cur.sub(&schur_poly(&la, n).scale(c));
        *out.entry(la).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Convert an element of `OSym_n` in polynomial form to the canonical
/// abstract representative (Schur coordinates of height <= n).
pub fn opol_to_osym(f: &OPolElem) -> OSymElem {
    osym::from_schur(&opol_to_schur_coords(f))
}

/// Decompose `f` over the Schubert basis: the unique coefficients `b_w` in
/// `OSym_n` with `f = sum_w p_w^{(n)} b_w`, stripped from the top length down.
pub fn decompose_over_osym(f: &OPolElem) -> BTreeMap<Perm, OSymElem> {
    let n = f.n;
    let mut cur = f.clone();
    let mut out = BTreeMap::new();
    let mut perms = Perm::all(n);
    perms.sort_by_key(|w| std::cmp::Reverse(w.length()));
    for w in perms {
        if cur.is_zero() {
            break;
        }
        let beta = tau_apply(&w, &cur);
        if beta.is_zero() {
            continue;
        }
        assert!(is_osym(&beta), "stripped coefficient must be symmetric");
        let b = beta.scale(tau_schubert_sign(&w, n));
        cur = cur.sub(&schubert(&w, n).mul(&b));
        out.insert(w, opol_to_osym(&b));
    }
    assert!(cur.is_zero(), "Schubert decomposition must terminate");
    out.retain(|_, b| !b.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::scalar::sgn;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn normalization() {
        // omega_n . xi_n = 1 for n <= 5
        for n in 1..=5usize {
            let v = omega_apply(n, &xi_elem(n));
            assert_eq!(v, OPolElem::one(n), "n={n}");
        }
    }

    #[test]
    fn yes_i_need_it() {
        // tau_{n-1} ... tau_1 . x_1^{n+r-1} = h_r^{(n)} for n = 3, r <= 4
        let n = 3;
        for r in 1..=4u16 {
            let word: Vec<Gen> = (1..n).rev().map(Gen::Tau).collect();
            let v = OPolElem::x_pow(n, 1, (n as u16) + r - 1).apply_word(&word);
            assert_eq!(v, pi_h(n, r as u32), "r={r}");
        }
    }

    #[test]
    fn schubert_examples() {
        let n = 3;
        let id = Perm::identity(n);
        assert_eq!(schubert(&id, n), OPolElem::one(n));
        let s1 = Perm::transposition(n, 1);
        assert_eq!(schubert(&s1, n), OPolElem::x(n, 1).scale(-1));
        let s2 = Perm::transposition(n, 2);
        assert_eq!(schubert(&s2, n), OPolElem::x(n, 1).add(&OPolElem::x(n, 2)));
        let s2s1 = s2.compose(&s1);
        assert_eq!(schubert(&s2s1, n), OPolElem::x_pow(n, 1, 2));
        let s1s2 = s1.compose(&s2);
        assert_eq!(
            schubert(&s1s2, n),
            OPolElem::x(n, 2).mul(&OPolElem::x(n, 1)).scale(-1)
        );
        let w0 = Perm::longest(n);
        assert_eq!(
            schubert(&w0, n),
            OPolElem::x(n, 2).mul(&OPolElem::x_pow(n, 1, 2))
        );
        // degree/parity bookkeeping
        for w in Perm::all(3) {
            let pw = schubert(&w, n);
            assert_eq!(pw.degree(), Some(2 * w.length() as i64));
        }
    }

    #[test]
    fn demazure_kills_symmetric() {
        for n in 2..=4usize {
            for r in 1..=n as u32 {
                let e = pi_e(n, r);
                for j in 1..n {
                    assert!(e.demazure(j).is_zero(), "del_{j} e_{r}^{n}");
                }
            }
        }
    }

    #[test]
    fn projector_idempotent() {
        let mut rng = Rng::new(99);
        for n in 2..=3usize {
            for _ in 0..4 {
                let mut f = OPolElem::zero(n);
                for _ in 0..4 {
                    let expo: Vec<u16> = (0..n).map(|_| rng.below(3) as u16).collect();
                    f = f.add(&OPolElem::monomial(n, &expo, rng.coeff()));
                }
                let p1 = omega_xi_apply(n, &f);
                let p2 = omega_xi_apply(n, &p1);
                assert_eq!(p1, p2, "omega-xi idempotent n={n}");
                let q1 = xi_omega_apply(n, &f);
                let q2 = xi_omega_apply(n, &q1);
                assert_eq!(q1, q2, "xi-omega idempotent n={n}");
                assert!(is_osym(&p1), "image of (omega xi) is symmetric");
            }
        }
    }

    #[test]
    fn schur_poly_examples() {
        // s_{(r)}^{(2)} = h_r^{(2)}
        for r in 1..=3u32 {
            assert_eq!(schur_poly(&p(&[r]), 2), pi_h(2, r));
        }
        // s_{(1,1)}^{(2)} = x_1 x_2
        assert_eq!(
            schur_poly(&p(&[1, 1]), 2),
            OPolElem::x(2, 1).mul(&OPolElem::x(2, 2))
        );
        // leading term of s_la^{(3)} is x^la
        for la in crate::partition::partitions_in_box(3, 3) {
            if la.is_empty() {
                continue;
            }
            let sp = schur_poly(&la, 3);
            let (lead, &c) = sp.coeffs.iter().next_back().unwrap();
            let expect: Vec<u16> = (0..3).map(|i| la.part(i) as u16).collect();
            assert_eq!((lead.clone(), c), (expect, 1), "la={la}");
        }
    }

    #[test]
    fn schur_theorem_matches_pi_n() {
        // s_la^{(n)} = pi_n(s_la) for n <= 3 and small boxes (n = 4 in release suite)
        for n in 2..=3usize {
            for la in crate::partition::partitions_in_box(n, 3) {
                let lhs = schur_poly(&la, n);
                let rhs = pi_n(&osym::schur_elem(&la), n);
                assert_eq!(lhs, rhs, "la={la} n={n}");
            }
        }
    }

    #[test]
    fn epsilon_eta_match_abstract() {
        // pi_n of the abstract epsilon/eta equals the explicit polynomials
        for n in 1..=3usize {
            for r in 0..=4u32 {
                assert_eq!(pi_n(&osym::epsilon_elem(r), n), pi_epsilon(n, r));
                assert_eq!(pi_n(&osym::eta_elem(r), n), pi_eta(n, r));
            }
        }
    }

    #[test]
    fn decompose_roundtrip() {
        let n = 2;
        // f = x_1 solves a triangular 2x2 system over the Schubert basis;
        // with p_{s_1}^{(2)} = xi_2 = x_1 the top coefficient is 1
        let f = OPolElem::x(n, 1);
        let dec = decompose_over_osym(&f);
        let s1 = Perm::transposition(n, 1);
        assert_eq!(dec[&s1], OSymElem::one());
        // rebuild
        let mut rebuilt = OPolElem::zero(n);
        for (w, b) in &dec {
            rebuilt = rebuilt.add(&schubert(w, n).mul(&pi_n(b, n)));
        }
        assert_eq!(rebuilt, f);
        // random round trips
        let mut rng = Rng::new(31);
        for n in 2..=3usize {
            for _ in 0..4 {
                let mut f = OPolElem::zero(n);
                for _ in 0..5 {
                    let expo: Vec<u16> = (0..n).map(|_| rng.below(4) as u16).collect();
                    f = f.add(&OPolElem::monomial(n, &expo, rng.coeff()));
                }
                let dec = decompose_over_osym(&f);
                let mut rebuilt = OPolElem::zero(n);
                for (w, b) in &dec {
                    rebuilt = rebuilt.add(&schubert(w, n).mul(&pi_n(b, n)));
                }
                assert_eq!(rebuilt, f, "roundtrip n={n}");
            }
        }
        // basis vectors decompose to themselves
        for w in Perm::all(3) {
            let dec = decompose_over_osym(&schubert(&w, 3));
            assert_eq!(dec.len(), 1);
            assert_eq!(dec[&w], OSymElem::one());
        }
    }

    #[test]
    fn trulycrazy_polynomial_part() {
        // x_1^r . tau_1 reordered matches (-1)^{qr} x_2^q x_1^{r-q-1}
        let n = 2;
        for r in 1..=4u16 {
            let lhs = OPolElem::x_pow(n, 1, r).right_tau(1);
            let mut rhs = OPolElem::zero(n);
            for q in 0..r {
                rhs = rhs.add(
                    &OPolElem::x_pow(n, 2, q)
                        .mul(&OPolElem::x_pow(n, 1, r - q - 1))
                        .scale(sgn(q as i64 * r as i64)),
                );
            }
            assert_eq!(lhs, rhs, "r={r}");
        }
    }
}
