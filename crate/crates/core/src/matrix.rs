//! Dense integer matrices with the normal forms needed for finitely
//! generated abelian group computations: Smith normal form with unimodular
//! transforms, column-style Hermite normal form, determinants, and exact
//! integer linear solving.

use std::fmt;

/// Integer scalar used throughout. Inputs at desk scale stay far below the
/// i128 range even through fraction-free elimination.
pub type Int = i128;

fn gcd(a: Int, b: Int) -> Int {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Extended gcd: returns (g, s, t) with g = s*a + t*b and g >= 0.
pub fn extended_gcd(a: Int, b: Int) -> (Int, Int, Int) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1, 0);
    let (mut t0, mut t1) = (0, 1);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Row-major dense integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.concat() }
    }

    /// Builds a matrix whose columns are the given vectors in Z^ambient.
    pub fn from_cols(ambient: usize, cols: &[Vec<Int>]) -> Self {
        assert!(cols.iter().all(|col| col.len() == ambient), "column length mismatch");
        let mut m = Self::zeros(ambient, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }

    // row_a <- p*row_a + q*row_b; row_b <- r*row_a_old + s*row_b  (det ps-qr = ±1 kept by callers)
    fn row_transform(&mut self, a: usize, b: usize, p: Int, q: Int, r: Int, s: Int) {
        for j in 0..self.cols {
            let x = self[(a, j)];
            let y = self[(b, j)];
            self[(a, j)] = p * x + q * y;
            self[(b, j)] = r * x + s * y;
        }
    }

    fn col_transform(&mut self, a: usize, b: usize, p: Int, q: Int, r: Int, s: Int) {
        for i in 0..self.rows {
            let x = self[(i, a)];
            let y = self[(i, b)];
            self[(i, a)] = p * x + q * y;
            self[(i, b)] = r * x + s * y;
        }
    }

    /// Determinant by fraction-free Bareiss elimination. Panics unless square.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a = self.clone();
        let mut sign = 1;
        let mut prev = 1;
        for k in 0..n - 1 {
            if a[(k, k)] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[(i, k)] != 0) else {
                    return 0;
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[(i, j)] = (a[(k, k)] * a[(i, j)] - a[(i, k)] * a[(k, j)]) / prev;
                }
                a[(i, k)] = 0;
            }
            prev = a[(k, k)];
        }
        sign * a[(n - 1, n - 1)]
    }
}

/// Smith normal form: u * m * v = d with u, v unimodular and the diagonal
/// of d a nonnegative divisibility chain.
pub struct Snf {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl Snf {
    /// Nonzero diagonal entries d1 | d2 | ... .
    pub fn invariant_factors(&self) -> Vec<Int> {
        self.d.diagonal().into_iter().filter(|&d| d != 0).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Computes the Smith normal form of an arbitrary integer matrix.
/// Deterministic: pivot selection minimizes (|value|, row, col).
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let mut d = m.clone();
    let mut u = IntMat::identity(m.rows());
    let mut v = IntMat::identity(m.cols());
    let n = m.rows().min(m.cols());

    for t in 0..n {
        if !place_pivot(&mut d, &mut u, &mut v, t) {
            break;
        }
        // Clear row t and column t using gcd row/column operations.
        loop {
            let mut dirty = false;
            for i in t + 1..d.rows() {
                if d[(i, t)] != 0 {
                    eliminate_row_entry(&mut d, &mut u, t, i);
                    dirty = true;
                }
            }
            for j in t + 1..d.cols() {
                if d[(t, j)] != 0 {
                    eliminate_col_entry(&mut d, &mut v, t, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    // Enforce the divisibility chain d[t] | d[t+1].
    loop {
        let mut fixed = true;
        for t in 0..n.saturating_sub(1) {
            let (a, b) = (d[(t, t)], d[(t + 1, t + 1)]);
            if b != 0 && (a == 0 || b % a != 0) {
                // Fold d[t+1] into column t and re-reduce the 2x2 block.
                for i in 0..d.rows() {
                    let val = d[(i, t + 1)];
                    d[(i, t)] += val;
                }
                for i in 0..v.rows() {
                    let val = v[(i, t + 1)];
                    v[(i, t)] += val;
                }
                reduce_block(&mut d, &mut u, &mut v, t);
                fixed = false;
            }
        }
        if fixed {
            break;
        }
    }

    Snf { u, d, v }
}

fn place_pivot(d: &mut IntMat, u: &mut IntMat, v: &mut IntMat, t: usize) -> bool {
    let mut best: Option<(Int, usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let val = d[(i, j)].abs();
            if val != 0 && best.map_or(true, |(bv, bi, bj)| (val, i, j) < (bv, bi, bj)) {
                best = Some((val, i, j));
            }
        }
    }
    let Some((_, i, j)) = best else {
        return false;
    };
    d.swap_rows(t, i);
    u.swap_rows(t, i);
    d.swap_cols(t, j);
    v.swap_cols(t, j);
    true
}

fn eliminate_row_entry(d: &mut IntMat, u: &mut IntMat, t: usize, i: usize) {
    let (x, y) = (d[(t, t)], d[(i, t)]);
    if x != 0 && y % x == 0 {
        let q = y / x;
        d.row_transform(t, i, 1, 0, -q, 1);
        u.row_transform(t, i, 1, 0, -q, 1);
    } else {
        let (g, s, tt) = extended_gcd(x, y);
        let (a, b) = (x / g, y / g);
        // [s tt; -b a] has determinant s*a + tt*b = 1.
        d.row_transform(t, i, s, tt, -b, a);
        u.row_transform(t, i, s, tt, -b, a);
    }
}

fn eliminate_col_entry(d: &mut IntMat, v: &mut IntMat, t: usize, j: usize) {
    let (x, y) = (d[(t, t)], d[(t, j)]);
    if x != 0 && y % x == 0 {
        let q = y / x;
        d.col_transform(t, j, 1, 0, -q, 1);
        v.col_transform(t, j, 1, 0, -q, 1);
    } else {
        let (g, s, tt) = extended_gcd(x, y);
        let (a, b) = (x / g, y / g);
        d.col_transform(t, j, s, tt, -b, a);
        v.col_transform(t, j, s, tt, -b, a);
    }
}

fn reduce_block(d: &mut IntMat, u: &mut IntMat, v: &mut IntMat, t: usize) {
    loop {
        let mut dirty = false;
        for i in t + 1..d.rows() {
            if d[(i, t)] != 0 {
                eliminate_row_entry(d, u, t, i);
                dirty = true;
            }
        }
        for j in t + 1..d.cols() {
            if d[(t, j)] != 0 {
                eliminate_col_entry(d, v, t, j);
                dirty = true;
            }
        }
        if !dirty {
            break;
        }
    }
    if d[(t, t)] < 0 {
        d.negate_row(t);
        u.negate_row(t);
    }
    if d[(t + 1, t + 1)] < 0 {
        d.negate_row(t + 1);
        u.negate_row(t + 1);
    }
}

/// Column-style Hermite normal form of the lattice spanned by the columns.
///
/// The result has one column per pivot; pivot rows strictly increase, pivots
/// are positive, and every entry left of a pivot in its row lies in
/// [0, pivot). Equal column lattices produce identical matrices, so this is
/// a canonical form. Zero columns are dropped.
pub fn hermite_cols(m: &IntMat) -> IntMat {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivot_col = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for r in 0..rows {
        if pivot_col >= cols {
            break;
        }
        // gcd-fold all columns >= pivot_col with a nonzero entry in row r into pivot_col
        let mut any = false;
        for j in pivot_col..cols {
            if a[(r, j)] != 0 {
                if !any {
                    a.swap_cols(pivot_col, j);
                    any = true;
                } else {
                    let (x, y) = (a[(r, pivot_col)], a[(r, j)]);
                    let (g, s, t) = extended_gcd(x, y);
                    let (p, q) = (x / g, y / g);
                    // col_pivot <- s*col_pivot + t*col_j ; col_j <- -q*col_pivot_old + p*col_j
                    a.col_transform(pivot_col, j, s, t, -q, p);
                }
            }
        }
        if !any {
            continue;
        }
        if a[(r, pivot_col)] < 0 {
            a.negate_col(pivot_col);
        }
        pivots.push((r, pivot_col));
        // Reduce the entries of row r in earlier pivot columns into [0, pivot).
        let pv = a[(r, pivot_col)];
        for &(_, pc) in pivots.iter().take(pivots.len() - 1) {
            let q = a[(r, pc)].div_euclid(pv);
            if q != 0 {
                for i in 0..rows {
                    let sub = q * a[(i, pivot_col)];
                    a[(i, pc)] -= sub;
                }
            }
        }
        pivot_col += 1;
    }

    // Keep only pivot columns (the rest are zero).
    let kept: Vec<Vec<Int>> = (0..pivot_col).map(|j| a.col(j)).collect();
    IntMat::from_cols(rows, &kept)
}

/// Solves m * x = v over the integers. Returns None when no integer solution
/// exists. When the kernel is nontrivial an arbitrary but deterministic
/// solution is returned.
pub fn solve_integer(m: &IntMat, v: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(m.rows(), v.len(), "rhs length mismatch");
    let snf = smith_normal_form(m);
    // m = u^{-1} d v^{-1}, so m x = v  <=>  d (v^{-1} x) = u rhs.
    let mut rhs = vec![0; m.rows()];
    for i in 0..m.rows() {
        rhs[i] = (0..m.rows()).map(|k| snf.u[(i, k)] * v[k]).sum();
    }
    let mut y = vec![0; m.cols()];
    let n = m.rows().min(m.cols());
    for i in 0..m.rows() {
        let d = if i < n { snf.d[(i, i)] } else { 0 };
        if d == 0 {
            if rhs[i] != 0 {
                return None;
            }
        } else {
            if rhs[i] % d != 0 {
                return None;
            }
            y[i] = rhs[i] / d;
        }
    }
    let mut x = vec![0; m.cols()];
    for i in 0..m.cols() {
        x[i] = (0..m.cols()).map(|k| snf.v[(i, k)] * y[k]).sum();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMat) -> Snf {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d, "u*m*v != d for {m:?}");
        assert_eq!(snf.u.det().abs(), 1, "u not unimodular");
        assert_eq!(snf.v.det().abs(), 1, "v not unimodular");
        let diag = snf.d.diagonal();
        for w in diag.windows(2) {
            if w[1] != 0 {
                assert!(w[0] != 0 && w[1] % w[0] == 0, "divisibility chain broken: {diag:?}");
            }
        }
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert_eq!(snf.d[(i, j)], 0, "off-diagonal entry");
                }
            }
        }
        snf
    }

    #[test]
    fn snf_identity() {
        let m = IntMat::identity(2);
        let snf = check_snf(&m);
        assert_eq!(snf.d, IntMat::identity(2));
        assert_eq!(snf.u, IntMat::identity(2));
        assert_eq!(snf.v, IntMat::identity(2));
    }

    #[test]
    fn snf_2x2_example() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8, so diag(2, 4).
        let m = IntMat::from_rows(&[vec![2, 4], vec![6, 8]]);
        let snf = check_snf(&m);
        assert_eq!(snf.d.diagonal(), vec![2, 4]);
    }

    #[test]
    fn snf_zero() {
        let m = IntMat::zeros(3, 2);
        let snf = check_snf(&m);
        assert!(snf.d.is_zero());
    }

    #[test]
    fn snf_rectangular() {
        let m = IntMat::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let snf = check_snf(&m);
        assert_eq!(snf.invariant_factors().len(), snf.rank());
    }

    #[test]
    fn det_small() {
        let m = IntMat::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.det(), -2);
        let m = IntMat::from_rows(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]);
        assert_eq!(m.det(), 30);
        let m = IntMat::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.det(), -1);
        let m = IntMat::from_rows(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(m.det(), 0);
    }

    #[test]
    fn hermite_canonical_dedup() {
        // <(1,1), (2,0), (0,2)> and <(1,1), (0,2)> generate the same lattice.
        let a = IntMat::from_cols(2, &[vec![1, 1], vec![2, 0], vec![0, 2]]);
        let b = IntMat::from_cols(2, &[vec![1, 1], vec![0, 2]]);
        assert_eq!(hermite_cols(&a), hermite_cols(&b));
        let h = hermite_cols(&a);
        assert_eq!(h.cols(), 2);
        assert_eq!(h.det().abs(), 2);
    }

    #[test]
    fn hermite_drops_zero_columns() {
        let a = IntMat::from_cols(2, &[vec![0, 0], vec![3, 0]]);
        let h = hermite_cols(&a);
        assert_eq!(h.cols(), 1);
        assert_eq!(h.col(0), vec![3, 0]);
    }

    #[test]
    fn solve_basic() {
        let m = IntMat::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(solve_integer(&m, &[4, 9]), Some(vec![2, 3]));
        assert_eq!(solve_integer(&m, &[1, 0]), None);
        // Underdetermined: x + y = 5 has integer solutions.
        let m = IntMat::from_rows(&[vec![1, 1]]);
        let x = solve_integer(&m, &[5]).unwrap();
        assert_eq!(x[0] + x[1], 5);
    }

    #[test]
    fn extended_gcd_identity() {
        for a in -30..30_i128 {
            for b in -30..30_i128 {
                let (g, s, t) = extended_gcd(a, b);
                assert_eq!(g, s * a + t * b);
                assert_eq!(g, gcd(a, b));
                assert!(g >= 0);
            }
        }
    }
}
