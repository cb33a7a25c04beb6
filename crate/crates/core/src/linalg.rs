//! Exact linear algebra over the integers / rationals, at desk scale.
//!
//! Ranks are computed by fraction-free elimination in `i128`; solving and
//! nullspaces use a small reduced-fraction type. All inputs are small integer
//! matrices coming from finite graded pieces, so no big-integer fallback is
//! needed (overflow panics rather than corrupting results).

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rat {
    pub num: i128,
    pub den: i128, // > 0
}

impl Rat {
    pub fn int(n: i128) -> Self {
        Rat { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        Rat::int(0)
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    fn reduce(mut self) -> Self {
        if self.num == 0 {
            return Rat { num: 0, den: 1 };
        }
        if self.den < 0 {
            self.num = -self.num;
            self.den = -self.den;
        }
        let g = gcd(self.num.unsigned_abs(), self.den.unsigned_abs()) as i128;
        Rat {
            num: self.num / g,
            den: self.den / g,
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        Rat {
            num: self.num.checked_mul(o.den).unwrap() + o.num.checked_mul(self.den).unwrap(),
            den: self.den.checked_mul(o.den).unwrap(),
        }
        .reduce()
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        self.add(&Rat { num: -o.num, den: o.den })
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        Rat {
            num: self.num.checked_mul(o.num).unwrap(),
            den: self.den.checked_mul(o.den).unwrap(),
        }
        .reduce()
    }

    pub fn div(&self, o: &Rat) -> Rat {
        assert!(o.num != 0);
        Rat {
            num: self.num.checked_mul(o.den).unwrap(),
            den: self.den.checked_mul(o.num).unwrap(),
        }
        .reduce()
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    if a == 0 {
        1
    } else {
        a
    }
}

/// Rank of an integer matrix (rows of equal length) over the rationals.
pub fn rank(mat: &[Vec<i64>]) -> usize {
    if mat.is_empty() || mat[0].is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<Rat>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| Rat::int(x as i128)).collect())
        .collect();
    rref(&mut m)
}

/// Reduced row echelon form in place; returns the rank.
pub fn rref(m: &mut Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut pivot_row = 0;
    for col in 0..cols {
        // find pivot
        let mut sel = None;
        for r in pivot_row..rows {
            if !m[r][col].is_zero() {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        m.swap(pivot_row, sel);
        let p = m[pivot_row][col];
        for c in col..cols {
            m[pivot_row][c] = m[pivot_row][c].div(&p);
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..cols {
                    let t = m[pivot_row][c].mul(&f);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    pivot_row
}

/// Solve `A x = b` for each column b of `rhs`, where the columns of `A` are
/// linearly independent. Returns the coefficient matrix (one column per rhs
/// column), or `None` if some system is inconsistent.
pub fn solve_exact(a_cols: &[Vec<i64>], rhs_cols: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    if a_cols.is_empty() {
        // every rhs must be zero
        for b in rhs_cols {
            if b.iter().any(|x| !x.is_zero()) {
                return None;
            }
        }
        return Some(vec![Vec::new(); rhs_cols.len()]);
    }
    let nrows = a_cols[0].len();
    let ncols = a_cols.len();
    let nrhs = rhs_cols.len();
    // build augmented matrix [A | rhs]
    let mut m: Vec<Vec<Rat>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<Rat> = (0..ncols).map(|c| Rat::int(a_cols[c][r] as i128)).collect();
            for b in rhs_cols {
                row.push(b[r]);
            }
            row
        })
        .collect();
    let rank_a = rref(&mut m);
    // locate pivot columns; they must be exactly 0..ncols
    let mut pivots = Vec::new();
    for row in m.iter().take(rank_a) {
        let col = row.iter().position(|x| !x.is_zero())?;
        pivots.push(col);
    }
    if pivots.len() != ncols || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None; // A-columns dependent, or inconsistency folded a pivot into rhs
    }
    // consistency: rows below rank must have zero rhs
    for row in m.iter().skip(rank_a) {
        if row.iter().skip(ncols).any(|x| !x.is_zero()) {
            return None;
        }
    }
    let mut out = vec![vec![Rat::zero(); ncols]; nrhs];
    for (r, &pc) in pivots.iter().enumerate() {
        for j in 0..nrhs {
            out[j][pc] = m[r][ncols + j];
        }
    }
    Some(out)
}

/// Dimension of the kernel of the linear map with the given rows (map applied
/// to column vectors of length `ncols`).
pub fn nullity(mat: &[Vec<i64>], ncols: usize) -> usize {
    ncols - rank(mat)
}

/// Dimension of the intersection of column spaces `A` and `B`:
/// `rank(A) + rank(B) - rank([A|B])`.
pub fn col_space_intersection_dim(a: &[Vec<i64>], b: &[Vec<i64>], nrows: usize) -> usize {
    let ra = rank(&transpose_cols(a, nrows));
    let rb = rank(&transpose_cols(b, nrows));
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    let rab = rank(&transpose_cols(&all, nrows));
    ra + rb - rab
}

/// A basis (as columns) of the intersection of the column spaces of `a` and `b`.
pub fn col_space_intersection(a: &[Vec<i64>], b: &[Vec<i64>], nrows: usize) -> Vec<Vec<Rat>> {
    // x = A y = B z  <=>  [A | -B] (y; z) = 0; intersection vectors are A y.
    let na = a.len();
    let nb = b.len();
    if na == 0 || nb == 0 {
        return Vec::new();
    }
    let mut m: Vec<Vec<Rat>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<Rat> = a.iter().map(|col| Rat::int(col[r] as i128)).collect();
            row.extend(b.iter().map(|col| Rat::int(-(col[r] as i128))));
            row
        })
        .collect();
    let nk = nullspace(&mut m, na + nb);
    let mut vecs: Vec<Vec<Rat>> = Vec::new();
    for k in nk {
        let mut v = vec![Rat::zero(); nrows];
        for (j, col) in a.iter().enumerate() {
            for r in 0..nrows {
                let t = Rat::int(col[r] as i128).mul(&k[j]);
                v[r] = v[r].add(&t);
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            vecs.push(v);
        }
    }
    // reduce to a basis
    let as_int_rows: Vec<Vec<Rat>> = vecs.clone();
    let mut m2 = as_int_rows;
    let r = rref(&mut m2);
    m2.truncate(r);
    m2
}

/// Nullspace basis of the rational matrix `m` with `ncols` columns.
pub fn nullspace(m: &mut Vec<Vec<Rat>>, ncols: usize) -> Vec<Vec<Rat>> {
    let rank = rref(m);
    let mut pivots = Vec::new();
    for row in m.iter().take(rank) {
        let col = row.iter().position(|x| !x.is_zero()).unwrap();
        pivots.push(col);
    }
    let is_pivot: Vec<bool> = (0..ncols).map(|c| pivots.contains(&c)).collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::int(1);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = Rat::zero().sub(&m[r][free]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_solve() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(&m), 2);
        let a_cols = vec![vec![1, 0], vec![1, 1]];
        let rhs = vec![vec![Rat::int(3), Rat::int(2)]];
        let sol = solve_exact(&a_cols, &rhs).unwrap();
        assert_eq!(sol[0], vec![Rat::int(1), Rat::int(2)]);
    }

    #[test]
    fn nullspace_dim() {
        let m = vec![vec![1, 1, 0], vec![0, 0, 1]];
        assert_eq!(nullity(&m, 3), 1);
    }
}

fn transpose_cols(cols: &[Vec<i64>], nrows: usize) -> Vec<Vec<i64>> {
    (0..nrows)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect()
}
