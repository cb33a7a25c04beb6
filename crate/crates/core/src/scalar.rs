//! Exact arithmetic in `Z[q,q^-1][pi]/(pi^2 - 1)` and the (q,pi)-quantities.
//!
//! A [`GPScalar`] is a finitely supported map from `(q-exponent, pi-exponent)`
//! to an integer coefficient, with the pi-exponent reduced mod 2 at insertion
//! time.  Evaluating `pi` at `+1` and `-1` gives two ordinary Laurent
//! polynomials; a scalar is zero iff both evaluations are.  That splitting is
//! also how exact division is performed: divide both specializations as
//! Laurent polynomials and recombine.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Element of `Z[q,q^-1][pi]/(pi^2-1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GPScalar {
    /// Map `(d, p) -> c` meaning `c * q^d * pi^p`. Zero coefficients are never stored.
    terms: BTreeMap<(i64, u8), i64>,
}

pub fn binom2(n: i64) -> i64 {
    // binomial(n, 2), valid for all n: binom(-r, 2) = binom(r+1, 2)
    n * (n - 1) / 2
}

/// `n # r = nr + binom(r, 2)`.
pub fn hash_stat(n: i64, r: i64) -> i64 {
    n * r + binom2(r)
}

/// `(-1)^k` for possibly negative `k`.
pub fn sgn(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl GPScalar {
    pub fn zero() -> Self {
        GPScalar::default()
    }

    pub fn one() -> Self {
        GPScalar::monomial(0, 0, 1)
    }

    pub fn q() -> Self {
        GPScalar::monomial(1, 0, 1)
    }

    pub fn pi() -> Self {
        GPScalar::monomial(0, 1, 1)
    }

    /// `c * q^d * pi^p` (pi-exponent reduced mod 2).
    pub fn monomial(d: i64, p: i64, c: i64) -> Self {
        let mut s = GPScalar::zero();
        s.add_term(d, p, c);
        s
    }

    /// `(pi^a q^b)^e` for integer e >= 0 handled by the caller via exponent arithmetic;
    /// here just `q^d pi^p`.
    pub fn qp_pow(d: i64, p: i64) -> Self {
        GPScalar::monomial(d, p, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: i64, p: i64, c: i64) {
        if c == 0 {
            return;
        }
        let key = (d, (p.rem_euclid(2)) as u8);
        let e = self.terms.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u8, i64)> + '_ {
        self.terms.iter().map(|(&(d, p), &c)| (d, p, c))
    }

    pub fn coeff(&self, d: i64, p: i64) -> i64 {
        *self.terms.get(&(d, (p.rem_euclid(2)) as u8)).unwrap_or(&0)
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return GPScalar::zero();
        }
        let mut out = GPScalar::zero();
        for (&(d, p), &a) in &self.terms {
            out.add_term(d, p as i64, a * c);
        }
        out
    }

    /// Multiply by `q^d pi^p`.
    pub fn shift(&self, d: i64, p: i64) -> Self {
        let mut out = GPScalar::zero();
        for (&(d0, p0), &a) in &self.terms {
            out.add_term(d0 + d, p0 as i64 + p, a);
        }
        out
    }

    /// Bar involution: `q -> q^-1`, `pi` fixed.
    pub fn bar(&self) -> Self {
        let mut out = GPScalar::zero();
        for (&(d, p), &a) in &self.terms {
            out.add_term(-d, p as i64, a);
        }
        out
    }

    /// Evaluate pi at `+1` or `-1`, giving a Laurent polynomial in q.
    pub fn eval_pi(&self, plus: bool) -> BTreeMap<i64, i64> {
        let mut out: BTreeMap<i64, i64> = BTreeMap::new();
        for (&(d, p), &a) in &self.terms {
            let c = if plus || p == 0 { a } else { -a };
            let e = out.entry(d).or_insert(0);
            *e += c;
            if *e == 0 {
                out.remove(&d);
            }
        }
        out
    }

    /// Reassemble from the two pi-specializations (must have integral halves).
    fn from_evals(plus: &BTreeMap<i64, i64>, minus: &BTreeMap<i64, i64>) -> Self {
        let mut out = GPScalar::zero();
        let mut keys: Vec<i64> = plus.keys().chain(minus.keys()).cloned().collect();
        keys.sort_unstable();
        keys.dedup();
        for d in keys {
            let a = *plus.get(&d).unwrap_or(&0);
            let b = *minus.get(&d).unwrap_or(&0);
            assert!((a + b) % 2 == 0 && (a - b) % 2 == 0, "non-integral CRT recombination");
            out.add_term(d, 0, (a + b) / 2);
            out.add_term(d, 1, (a - b) / 2);
        }
        out
    }

    /// Exact division, panicking if the quotient is not in the ring.
    pub fn exact_div(&self, den: &GPScalar) -> Self {
        assert!(!den.is_zero(), "division by zero");
        if self.is_zero() {
            return GPScalar::zero();
        }
        let qp = laurent_exact_div(&self.eval_pi(true), &den.eval_pi(true));
        let qm = laurent_exact_div(&self.eval_pi(false), &den.eval_pi(false));
        GPScalar::from_evals(&qp, &qm)
    }

    /// Evaluation at `q = 1, pi = 1` (total dimension count).
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Canonical text form: terms `c*q^d*pi^p` sorted by `(d, p)`.
    pub fn text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&(d, p), &c) in &self.terms {
            let mut factors: Vec<String> = Vec::new();
            if c != 1 || (d == 0 && p == 0) {
                factors.push(c.to_string());
            }
            if p == 1 {
                factors.push("pi".to_string());
            }
            if d != 0 {
                factors.push(if d == 1 { "q".to_string() } else { format!("q^{d}") });
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ").replace("+ -", "- ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(&(d, p), &c)| serde_json::json!({"d": d, "p": p, "c": c}))
                .collect(),
        )
    }
}

impl fmt::Display for GPScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

fn laurent_exact_div(num: &BTreeMap<i64, i64>, den: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    assert!(!den.is_empty(), "division by zero specialization");
    let mut rem = num.clone();
    let mut quot: BTreeMap<i64, i64> = BTreeMap::new();
    let (&dlow, &dc) = den.iter().next().unwrap();
    while !rem.is_empty() {
        let (&rlow, &rc) = rem.iter().next().unwrap();
        assert!(rc % dc == 0, "non-exact Laurent division");
        let c = rc / dc;
        let e = rlow - dlow;
        quot.insert(e, c);
        for (&d0, &c0) in den.iter() {
            let entry = rem.entry(d0 + e).or_insert(0);
            *entry -= c0 * c;
            if *entry == 0 {
                rem.remove(&(d0 + e));
            }
        }
    }
    quot
}

impl Add for &GPScalar {
    type Output = GPScalar;
    fn add(self, rhs: &GPScalar) -> GPScalar {
        let mut out = self.clone();
        for (&(d, p), &c) in &rhs.terms {
            out.add_term(d, p as i64, c);
        }
        out
    }
}

impl AddAssign<&GPScalar> for GPScalar {
    fn add_assign(&mut self, rhs: &GPScalar) {
        for (&(d, p), &c) in &rhs.terms {
            self.add_term(d, p as i64, c);
        }
    }
}

impl Sub for &GPScalar {
    type Output = GPScalar;
    fn sub(self, rhs: &GPScalar) -> GPScalar {
        let mut out = self.clone();
        for (&(d, p), &c) in &rhs.terms {
            out.add_term(d, p as i64, -c);
        }
        out
    }
}

impl Neg for &GPScalar {
    type Output = GPScalar;
    fn neg(self) -> GPScalar {
        self.scale(-1)
    }
}

impl Mul for &GPScalar {
    type Output = GPScalar;
    fn mul(self, rhs: &GPScalar) -> GPScalar {
        let mut out = GPScalar::zero();
        for (&(d1, p1), &c1) in &self.terms {
            for (&(d2, p2), &c2) in &rhs.terms {
                out.add_term(d1 + d2, (p1 + p2) as i64, c1 * c2);
            }
        }
        out
    }
}

/// A graded superdimension: a [`GPScalar`] whose coefficients must all be nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRank(pub GPScalar);

impl GradedRank {
    pub fn new(s: GPScalar) -> Self {
        assert!(
            s.terms().all(|(_, _, c)| c >= 0),
            "graded rank with negative coefficient: {s}"
        );
        GradedRank(s)
    }
}

impl fmt::Display for GradedRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The (q,pi)-integer `[n]`.
pub fn qp_int(n: i64) -> GPScalar {
    let mut out = GPScalar::zero();
    if n >= 0 {
        // q^{1-n} + pi q^{3-n} + ... + pi^{n-1} q^{n-1}
        for j in 0..n {
            out.add_term(1 - n + 2 * j, j, 1);
        }
    } else {
        // -pi^n (q^{n+1} + pi q^{n+3} + ... + pi^{-n-1} q^{-n-1})
        for j in 0..(-n) {
            out.add_term(n + 1 + 2 * j, n + j, -1);
        }
    }
    out
}

/// The (q,pi)-factorial `[n]!` for `n >= 0`.
pub fn qp_factorial(n: i64) -> GPScalar {
    assert!(n >= 0);
    let mut out = GPScalar::one();
    for j in 1..=n {
        out = &out * &qp_int(j);
    }
    out
}

/// The (q,pi)-binomial coefficient, defined for all `n` and zero for `r < 0`.
pub fn qp_binom(n: i64, r: i64) -> GPScalar {
    if r < 0 {
        return GPScalar::zero();
    }
    let mut num = GPScalar::one();
    for j in 0..r {
        num = &num * &qp_int(n - j);
    }
    num.exact_div(&qp_factorial(r))
}

/// The (q,pi)-trinomial coefficient; zero if `r < 0` or `s < 0`.
pub fn qp_trinom(n: i64, r: i64, s: i64) -> GPScalar {
    if r < 0 || s < 0 {
        return GPScalar::zero();
    }
    &qp_binom(n, r) * &qp_binom(n - r, s)
}

/// The (q,pi)-multinomial coefficient `[n]! / ([a_1]! ... [a_k]!)` for a
/// composition of `n >= 0`.
pub fn qp_multinom(n: i64, alpha: &[i64]) -> GPScalar {
    assert!(n >= 0 && alpha.iter().all(|&a| a >= 0) && alpha.iter().sum::<i64>() == n);
    let mut out = qp_factorial(n);
    for &a in alpha {
        out = out.exact_div(&qp_factorial(a));
    }
    out
}

/// `b_{m,n}(r)`: the lower-bound polynomial from the singular Rouquier complex
/// numerology.
pub fn b_poly(m: i64, n: i64, r: i64) -> GPScalar {
    assert!(r >= 0);
    let pref = hash_stat(n - r, r);
    let mut out = GPScalar::zero();
    for s in 0..r {
        let e2 = n - r + m * (r - s - 1); // exponent of (pi q^2)
        let e1 = (m - n + r - 1) * (n - r + s + 1) + (n - r) * s; // exponent of q
        let t = &qp_binom(m + s, n - r + s + 1) * &qp_binom(n - r + s, s);
        out += &t.shift(2 * e2 + e1, e2);
    }
    out.shift(-2 * pref, pref)
}

/// `c_{m,n}(r) = b_{m,n}(r) + b_{m,n}(r+1)`; computed by its own closed form.
pub fn c_poly(m: i64, n: i64, r: i64) -> GPScalar {
    assert!(r >= 0);
    let pref = hash_stat(n - r, r);
    let e1 = (m - n + r) * n + (n - r) * r;
    let t = &qp_binom(m + r, n) * &qp_binom(n, r);
    t.shift(e1 - 2 * pref, pref)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let pq = &GPScalar::pi() * &GPScalar::q();
        assert_eq!(&pq * &pq, GPScalar::monomial(2, 0, 1)); // (pi q)^2 = q^2
        let a = &GPScalar::one() + &pq;
        let b = &GPScalar::one() - &pq;
        assert_eq!(&a * &b, &GPScalar::one() - &GPScalar::monomial(2, 0, 1));
        assert_eq!(&qp_int(3) * &GPScalar::zero(), GPScalar::zero());
    }

    #[test]
    fn qp_integers() {
        assert_eq!(qp_int(0), GPScalar::zero());
        assert_eq!(qp_int(1), GPScalar::one());
        // [2] = q^-1 + pi q
        let two = &GPScalar::monomial(-1, 0, 1) + &GPScalar::monomial(1, 1, 1);
        assert_eq!(qp_int(2), two);
        // [-n] = -pi^n [n]
        for n in 0..7 {
            assert_eq!(qp_int(-n), qp_int(n).shift(0, n).scale(-1));
        }
    }

    #[test]
    fn bar_involution() {
        // bar([n]) = pi^{n-1} [n]
        for n in 1..7 {
            assert_eq!(qp_int(n).bar(), qp_int(n).shift(0, n - 1));
        }
        // bar(binom(n,r)) = pi^{(n-r)r} binom(n,r)
        for n in -4..6 {
            for r in 0..5 {
                assert_eq!(qp_binom(n, r).bar(), qp_binom(n, r).shift(0, (n - r) * r));
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(qp_binom(2, 1), qp_int(2));
        // binom(-1, 1) = -pi
        assert_eq!(qp_binom(-1, 1), GPScalar::monomial(0, 1, -1));
        // binom(-n, r) = (-1)^r pi^{nr + binom(r,2)} binom(n+r-1, r)
        for n in 0..6i64 {
            for r in 0..6i64 {
                let lhs = qp_binom(-n, r);
                let rhs = qp_binom(n + r - 1, r)
                    .shift(0, n * r + binom2(r))
                    .scale(sgn(r));
                assert_eq!(lhs, rhs, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn pascal_rules() {
        // both Pascal identities of the binomial recursion
        for n in -8..=8i64 {
            for r in 0..=8i64 {
                let b = qp_binom(n, r);
                let lhs1 = &qp_binom(n - 1, r).shift(-r, 0)
                    + &qp_binom(n - 1, r - 1).shift(n - r, n - r);
                let lhs2 = &qp_binom(n - 1, r).shift(r, r) + &qp_binom(n - 1, r - 1).shift(r - n, 0);
                assert_eq!(b, lhs1, "pascal1 n={n} r={r}");
                assert_eq!(b, lhs2, "pascal2 n={n} r={r}");
            }
        }
    }

    #[test]
    fn gaussian_box_formula() {
        // q^{(n-r)r} binom(n,r) = sum over partitions in an r x (n-r) box of (pi q^2)^{|la|}
        use crate::partition::partitions_in_box;
        for n in 0..=8i64 {
            for r in 0..=n {
                let lhs = qp_binom(n, r).shift((n - r) * r, 0);
                let mut rhs = GPScalar::zero();
                for la in partitions_in_box(r as usize, (n - r) as usize) {
                    let s = la.size() as i64;
                    rhs.add_term(2 * s, s, 1);
                }
                assert_eq!(lhs, rhs, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn bc_numerology() {
        // c = b(r) + b(r+1); spot values from direct substitution
        assert_eq!(c_poly(1, 1, 0), GPScalar::one());
        assert_eq!(b_poly(1, 1, 1), GPScalar::one());
        let c11 = &GPScalar::one() + &GPScalar::monomial(2, 1, 1);
        assert_eq!(c_poly(1, 1, 1), c11);
        for m in -5..=5 {
            for n in -5..=5 {
                for r in 0..=5 {
                    assert_eq!(
                        c_poly(m, n, r),
                        &b_poly(m, n, r) + &b_poly(m, n, r + 1),
                        "m={m} n={n} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &qp_factorial(6) * &qp_binom(7, 3);
        let b = qp_factorial(6);
        assert_eq!(a.exact_div(&b), qp_binom(7, 3));
    }
}
