//! Partitions, compositions, tableaux and the sign statistics attached to them.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A partition: weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must weakly decrease");
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn ht(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.ht() <= rows && self.part(0) <= cols
    }

    pub fn transpose(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut t = vec![0u32; cols];
        for &p in &self.0 {
            for c in t.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(t)
    }

    /// Dominance order; a partial order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut a = 0i64;
        let mut b = 0i64;
        for i in 0..self.ht().max(other.ht()) {
            a += self.part(i) as i64;
            b += other.part(i) as i64;
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        let n = self.ht().max(other.ht());
        for i in 0..n {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// `N = sum_{i<j} la_i la_j`.
    pub fn stat_n(&self) -> i64 {
        let s: i64 = self.size() as i64;
        let sq: i64 = self.0.iter().map(|&p| (p as i64) * (p as i64)).sum();
        (s * s - sq) / 2
    }

    /// `dN = sum_i (i-1) la_i`.
    pub fn stat_dn(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &p)| i as i64 * p as i64).sum()
    }

    /// `dE = sum_i binom(la_i, 2) = dN(transpose)`.
    pub fn stat_de(&self) -> i64 {
        self.0.iter().map(|&p| crate::scalar::binom2(p as i64)).sum()
    }

    /// `NE`: pairs of boxes (A, B) with B strictly above and strictly to the
    /// right of A, counted by brute box enumeration.
    pub fn stat_ne(&self) -> i64 {
        let boxes = self.boxes();
        let mut count = 0i64;
        for &(r1, c1) in &boxes {
            for &(r2, c2) in &boxes {
                if r2 < r1 && c2 > c1 {
                    count += 1;
                }
            }
        }
        count
    }

    /// `NEbar`: pairs with B weakly northeast of A. Equals `|la| + dN + dE + NE`.
    pub fn stat_nebar(&self) -> i64 {
        let boxes = self.boxes();
        let mut count = 0i64;
        for &(r1, c1) in &boxes {
            for &(r2, c2) in &boxes {
                if r2 <= r1 && c2 >= c1 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Boxes as (row, col), 0-indexed.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &p) in self.0.iter().enumerate() {
            for c in 0..p as usize {
                out.push((r, c));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.0.iter().map(|&p| p.into()).collect())
    }

    /// All the sign statistics in one record.
    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            n: self.stat_n(),
            ne: self.stat_ne(),
            nebar: self.stat_nebar(),
            dn: self.stat_dn(),
            de: self.stat_de(),
        }
    }
}

/// Record of the sign statistics of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStats {
    pub n: i64,
    pub ne: i64,
    pub nebar: i64,
    pub dn: i64,
    pub de: i64,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    // total order: by size, then lex; used only as a BTreeMap key order
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.lex_cmp(other))
    }
}

/// All partitions fitting in an `m x n` rectangle (ht <= m, first part <= n).
pub fn partitions_in_box(m: usize, n: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack = vec![(Vec::new(), n as u32)];
    while let Some((cur, maxpart)) = stack.pop() {
        if cur.len() == m {
            continue;
        }
        for p in 1..=maxpart {
            let mut next = cur.clone();
            next.push(p);
            out.push(Partition(next.clone()));
            stack.push((next, p));
        }
    }
    out.sort();
    out
}

/// All partitions of `d`.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    fn rec(d: u32, maxpart: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if d == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=maxpart.min(d)).rev() {
            cur.push(p);
            rec(d - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d.max(1), &mut Vec::new(), &mut out);
    if d == 0 {
        return vec![Partition::empty()];
    }
    out
}

/// All partitions of `d` with height at most `ht`.
pub fn partitions_of_ht(d: u32, ht: usize) -> Vec<Partition> {
    partitions_of(d).into_iter().filter(|l| l.ht() <= ht).collect()
}

/// A composition: a list of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `N(alpha) = sum_{i<j} a_i a_j`.
    pub fn stat_n(&self) -> i64 {
        let s: i64 = self.size() as i64;
        let sq: i64 = self.0.iter().map(|&p| (p as i64) * (p as i64)).sum();
        (s * s - sq) / 2
    }

    pub fn reversed(&self) -> Composition {
        let mut v = self.0.clone();
        v.reverse();
        Composition(v)
    }
}

/// A tableau of a given shape: one entry per box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Self {
        assert_eq!(shape.ht(), rows.len());
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), shape.part(i) as usize);
        }
        Tableau { shape, rows }
    }

    /// Weakly increasing rows, strictly increasing columns.
    pub fn is_semistandard(&self) -> bool {
        for row in &self.rows {
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                return false;
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r - 1][c] >= self.rows[r][c] {
                    return false;
                }
            }
        }
        true
    }

    /// `N(T)`: pairs of boxes (A, B) with B strictly north of A (any columns)
    /// and `T(B) >= T(A)`.
    pub fn stat_n(&self) -> i64 {
        let mut count = 0;
        for (ra, row_a) in self.rows.iter().enumerate() {
            for &ta in row_a {
                for row_b in self.rows.iter().take(ra) {
                    for &tb in row_b {
                        if tb >= ta {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    /// `(-1)^{N(T)}` for a semistandard tableau.
    pub fn sign(&self) -> i64 {
        assert!(self.is_semistandard(), "tableau_sign requires a semistandard tableau");
        crate::scalar::sgn(self.stat_n())
    }
}

/// All semistandard tableaux of the given shape and content.
pub fn semistandard_tableaux(shape: &Partition, content: &Partition) -> Vec<Tableau> {
    if shape.size() != content.size() {
        return Vec::new();
    }
    let nrows = shape.ht();
    let nvals = content.ht();
    let mut rows: Vec<Vec<u32>> = (0..nrows)
        .map(|i| vec![0u32; shape.part(i) as usize])
        .collect();
    let mut used = vec![0u32; nvals + 1];
    let mut out = Vec::new();
    // fill boxes row by row, left to right
    let boxes = shape.boxes();
    fn rec(
        idx: usize,
        boxes: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        used: &mut Vec<u32>,
        content: &Partition,
        nvals: usize,
        out: &mut Vec<Tableau>,
        shape: &Partition,
    ) {
        if idx == boxes.len() {
            out.push(Tableau::new(shape.clone(), rows.clone()));
            return;
        }
        let (r, c) = boxes[idx];
        let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let min_up = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        let lo = min_left.max(min_up);
        for v in lo..=(nvals as u32) {
            if used[v as usize] < content.part(v as usize - 1) {
                rows[r][c] = v;
                used[v as usize] += 1;
                rec(idx + 1, boxes, rows, used, content, nvals, out, shape);
                used[v as usize] -= 1;
                rows[r][c] = 0;
            }
        }
    }
    rec(0, &boxes, &mut rows, &mut used, content, nvals, &mut out, shape);
    out
}

/// The signed tableau count `K_{la,mu} = sum_T (-1)^{N(T)}` over semistandard
/// tableaux of shape `la` and content `mu`, by direct enumeration.
pub fn kostka_signed_tableaux(shape: &Partition, content: &Partition) -> i64 {
    if shape.size() != content.size() {
        return 0;
    }
    if !shape.dominates(content) {
        return 0;
    }
    semistandard_tableaux(shape, content).iter().map(|t| t.sign()).sum()
}

/// All partitions obtained from `sigma` by adding a horizontal strip of `r`
/// boxes (at most one per column), with first part bounded by `cap` if given.
pub fn horizontal_strip_additions(sigma: &Partition, r: u32, cap: Option<u32>) -> Vec<Partition> {
    // interlacing: tau_1 >= sigma_1 >= tau_2 >= sigma_2 >= ...
    let rows = sigma.ht() + 1;
    let mut out = Vec::new();
    fn rec(
        sigma: &Partition,
        i: usize,
        rows: usize,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
        cap: Option<u32>,
    ) {
        if i == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let lo = sigma.part(i);
        let hi_row = if i == 0 {
            cap.unwrap_or(sigma.part(0) + left)
        } else {
            sigma.part(i - 1).min(lo + left)
        };
        let hi = hi_row.min(lo + left).max(lo);
        for v in lo..=hi {
            cur.push(v);
            rec(sigma, i + 1, rows, left - (v - lo), cur, out, cap);
            cur.pop();
        }
    }
    rec(sigma, 0, rows, r, &mut Vec::new(), &mut out, cap);
    out
}

/// Sign increment when a horizontal strip is added to `sigma` giving `tau`:
/// the number of pairs (A, B) with B a strip box and A a box of `tau`
/// strictly below B's row.
fn strip_sign_increment(sigma: &Partition, tau: &Partition) -> i64 {
    let ht = tau.ht();
    // suffix box counts of tau
    let mut below = vec![0i64; ht + 1];
    for i in (0..ht).rev() {
        below[i] = below[i + 1] + tau.part(i) as i64;
    }
    let mut inc = 0i64;
    for i in 0..ht {
        let strip_here = tau.part(i) as i64 - sigma.part(i) as i64;
        inc += strip_here * below[i + 1];
    }
    inc
}

/// One column of the odd Kostka matrix: the map `la -> K_{la,mu}`, computed
/// by a signed dynamic program over horizontal-strip chains (cached).
pub fn kostka_column(content: &Partition) -> std::collections::BTreeMap<Partition, i64> {
    use std::collections::BTreeMap;
    use std::sync::{LazyLock, Mutex};
    static CACHE: LazyLock<Mutex<std::collections::HashMap<Partition, BTreeMap<Partition, i64>>>> =
        LazyLock::new(|| Mutex::new(std::collections::HashMap::new()));
    if let Some(hit) = CACHE.lock().unwrap().get(content) {
        return hit.clone();
    }
    let mut states: BTreeMap<Partition, i64> = BTreeMap::new();
    states.insert(Partition::empty(), 1);
    for &r in content.parts() {
        let mut next: BTreeMap<Partition, i64> = BTreeMap::new();
        for (sigma, &c) in &states {
            for tau in horizontal_strip_additions(sigma, r, None) {
                let sign = crate::scalar::sgn(strip_sign_increment(sigma, &tau));
                *next.entry(tau).or_insert(0) += c * sign;
            }
        }
        next.retain(|_, c| *c != 0);
        states = next;
    }
    CACHE.lock().unwrap().insert(content.clone(), states.clone());
    states
}

/// The signed tableau count `K_{la,mu}` (strip dynamic program).
pub fn kostka_signed(shape: &Partition, content: &Partition) -> i64 {
    if shape.size() != content.size() || !shape.dominates(content) {
        return 0;
    }
    *kostka_column(content).get(shape).unwrap_or(&0)
}

/// If `mu` is obtained from `la` by adding one box at the bottom of `r`
/// distinct columns, return the row Pieri sign
/// `(-1)^{NE(la) + NE(mu) + S(la,mu)}`; otherwise `None`.
pub fn pieri_sign(la: &Partition, mu: &Partition, r: u32) -> Option<i64> {
    if mu.size() != la.size() + r {
        return None;
    }
    // mu must contain la with a horizontal strip difference
    let lat = la.transpose();
    let mut_ = mu.transpose();
    let mut cols = Vec::new();
    for c in 0..mut_.ht().max(lat.ht()) {
        let diff = mut_.part(c) as i64 - lat.part(c) as i64;
        if diff == 1 {
            cols.push(c as i64 + 1); // 1-indexed column
        } else if diff != 0 {
            return None;
        }
    }
    if cols.len() != r as usize {
        return None;
    }
    // S(la, mu) = sum_j sum_{k=i_j+1}^{la_1} la^t_k
    let la1 = la.part(0) as i64;
    let mut s = 0i64;
    for &ij in &cols {
        for k in (ij + 1)..=la1 {
            s += lat.part(k as usize - 1) as i64;
        }
    }
    Some(crate::scalar::sgn(la.stat_ne() + mu.stat_ne() + s))
}

/// All ways of adding one box at the bottom of `r` distinct columns of `la`
/// (the same as adding a horizontal strip of size `r`).
pub fn pieri_additions(la: &Partition, r: u32) -> Vec<Partition> {
    horizontal_strip_additions(la, r, None)
}

/// All ways of removing one box from the bottom of `r` distinct columns of `mu`.
pub fn pieri_removals(mu: &Partition, r: u32) -> Vec<Partition> {
    if mu.size() < r {
        return Vec::new();
    }
    let mut out = Vec::new();
    for la in partitions_of(mu.size() - r) {
        if pieri_sign(&la, mu, r).is_some() {
            out.push(la);
        }
    }
    out
}

/// All partitions obtained from `la` by removing a horizontal strip (boxes at
/// the bottoms of distinct columns) of any size, necessarily including the
/// whole row `rows` so that the result has height below `rows`.
pub fn pieri_strip_removals(la: &Partition, rows: u32) -> Vec<Partition> {
    // interlacing: la_{i+1} <= ka_i <= la_i, with ka_i = 0 for i >= rows-1
    let depth = (rows as usize).saturating_sub(1).min(la.ht());
    if la.ht() > rows as usize {
        return Vec::new();
    }
    let mut out = vec![Vec::new()];
    for i in 0..depth {
        let lo = la.part(i + 1);
        let hi = la.part(i);
        let mut next = Vec::new();
        for cur in &out {
            for v in lo..=hi {
                let mut c2: Vec<u32> = cur.clone();
                c2.push(v);
                next.push(c2);
            }
        }
        out = next;
    }
    let mut res: Vec<Partition> = out.into_iter().map(Partition::new).collect();
    res.sort();
    res.dedup();
    res
}
