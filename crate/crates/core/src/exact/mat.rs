//! Dense matrices over the rationals and the elimination kernel of the
//! whole crate: reduced row echelon form, kernels, solving, Kronecker
//! products.
//!
//! Elimination runs fraction-free in the forward pass (cross-multiplied
//! two-term updates with per-row content normalization) and divides only
//! in the exact back-substitution pass. The pivot in each column is the
//! candidate of smallest height, ties broken by lowest row index, so the
//! whole pass is deterministic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::Scalar;
use super::ExactError;

/// A dense `rows x cols` matrix of scalars, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Mat { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat { rows, cols, entries }
    }

    /// Integer rows, handy in tests and constructions.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in *row {
                entries.push(Scalar::from_int(v));
            }
        }
        Mat { rows: r, cols: c, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        Mat { rows: r, cols: c, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_antisymmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..=i {
                if (self.get(i, j) + self.get(j, i)).is_zero() == false {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "shape mismatch in apply");
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = Scalar::zero();
            for (a, b) in row.iter().zip(v.iter()) {
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            out[i] = acc;
        }
        out
    }

    /// trace(self * other) without forming the product.
    pub fn trace_of_product(&self, other: &Mat) -> Scalar {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        assert_eq!(self.rows, other.cols, "shape mismatch");
        let mut acc = Scalar::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(j, i);
                if !b.is_zero() {
                    acc += &(a * b);
                }
            }
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut acc = Scalar::zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        acc
    }

    /// Commutator `self*other - other*self`.
    pub fn commutator(&self, other: &Mat) -> Mat {
        self * other - other * self
    }

    /// Kronecker product with index convention `(i_a * rows_b + i_b)`.
    pub fn kron(&self, b: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * b.rows, self.cols * b.cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let s = self.get(ia, ja);
                if s.is_zero() {
                    continue;
                }
                for ib in 0..b.rows {
                    for jb in 0..b.cols {
                        let t = b.get(ib, jb);
                        if !t.is_zero() {
                            out.set(ia * b.rows + ib, ja * b.cols + jb, s * t);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn stack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "shape mismatch in stack");
        let mut entries = Vec::with_capacity((self.rows + other.rows) * self.cols);
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&other.entries);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn augment(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "shape mismatch in augment");
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Row-major flattening, used to treat matrices as vectors.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn from_vector(rows: usize, cols: usize, v: Vec<Scalar>) -> Mat {
        Mat::new(rows, cols, v)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Exact inverse of a square matrix, None if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let (r, pivots) = rref(&self.augment(&Mat::identity(n)));
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Diagonal entries, if the matrix is diagonal (and square).
    pub fn as_diagonal(&self) -> Option<Vec<Scalar>> {
        if !self.is_square() {
            return None;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j && !self.get(i, j).is_zero() {
                    return None;
                }
            }
        }
        Some((0..self.rows).map(|i| self.get(i, i).clone()).collect())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl Add for Mat {
    type Output = Mat;
    fn add(self, rhs: Mat) -> Mat {
        &self + &rhs
    }
}

impl Sub for Mat {
    type Output = Mat;
    fn sub(self, rhs: Mat) -> Mat {
        &self - &rhs
    }
}

impl Mul for Mat {
    type Output = Mat;
    fn mul(self, rhs: Mat) -> Mat {
        &self * &rhs
    }
}

/// Divides a row by the gcd of numerators times the lcm of denominators,
/// leaving a primitive integer row. Row scaling preserves the row space.
fn normalize_row(row: &mut [Scalar]) {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for s in row.iter() {
        if s.is_zero() {
            continue;
        }
        num_gcd = num_gcd.gcd(s.numerator());
        den_lcm = den_lcm.lcm(s.denominator());
    }
    if num_gcd.is_zero() {
        return;
    }
    let factor = Scalar::from_bigint(den_lcm) / Scalar::from_bigint(num_gcd);
    if factor.is_one() {
        return;
    }
    for s in row.iter_mut() {
        if !s.is_zero() {
            *s *= &factor;
        }
    }
}

/// Reduced row echelon form together with the (strictly increasing) list
/// of pivot columns. The result is the unique RREF of the input.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<Scalar>> = (0..rows).map(|i| m.row_vec(i)).collect();
    for row in a.iter_mut() {
        normalize_row(row);
    }
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Smallest-height nonzero candidate, lowest row index on ties.
        let mut best: Option<usize> = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            if row[c].is_zero() {
                continue;
            }
            match best {
                None => best = Some(i),
                Some(b) => {
                    if row[c].height() < a[b][c].height() {
                        best = Some(i);
                    }
                }
            }
        }
        let Some(p) = best else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            // Fraction-free two-term update, then content normalization.
            let head = a[r][c].clone();
            let coef = a[i][c].clone();
            for j in c..cols {
                let v = &(&a[i][j] * &head) - &(&a[r][j] * &coef);
                a[i][j] = v;
            }
            normalize_row(&mut a[i]);
        }
        pivots.push(c);
        r += 1;
    }
    // Exact back-substitution: unit pivots, clear above.
    for (i, &c) in pivots.iter().enumerate().rev() {
        let inv = a[i][c].recip();
        for j in c..cols {
            if !a[i][j].is_zero() {
                a[i][j] *= &inv;
            }
        }
        for k in 0..i {
            if a[k][c].is_zero() {
                continue;
            }
            let coef = a[k][c].clone();
            for j in c..cols {
                let v = &a[k][j] - &(&a[i][j] * &coef);
                a[k][j] = v;
            }
        }
    }
    (Mat::from_rows(a), pivots)
}

/// Basis rows of {v : m v = 0}, already in canonical (RREF) form.
pub fn kernel_rows(m: &Mat) -> Mat {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut rows = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, f);
        }
        rows.push(v);
    }
    if rows.is_empty() {
        return Mat::zero(0, cols);
    }
    // Standard kernel vectors need not be in RREF; re-reduce for canonicity.
    let (k, _) = rref(&Mat::from_rows(rows));
    let rank = k
        .entries()
        .chunks(cols)
        .filter(|row| row.iter().any(|s| !s.is_zero()))
        .count();
    Mat::from_fn(rank, cols, |i, j| k.get(i, j).clone())
}

/// Outcome of solving `a x = b`.
#[derive(Clone, Debug)]
pub enum Solution {
    /// A particular solution plus the kernel of `a`.
    Solvable { particular: Vec<Scalar>, kernel: Mat },
    /// Certificate of unsolvability: `y a = 0` but `y b != 0`.
    Unsolvable { certificate: Vec<Scalar> },
}

/// Solves `a x = b` exactly; on failure returns a certificate row.
pub fn solve(a: &Mat, b: &[Scalar]) -> Result<Solution, ExactError> {
    if b.len() != a.rows() {
        return Err(ExactError::ShapeMismatch {
            context: "solve: rhs length must equal row count",
        });
    }
    let bm = Mat::from_fn(a.rows(), 1, |i, _| b[i].clone());
    // Track row operations through an identity block to extract certificates.
    let tracked = a.augment(&bm).augment(&Mat::identity(a.rows()));
    let (r, pivots) = rref(&tracked);
    let n = a.cols();
    if let Some(row) = (0..a.rows()).find(|&i| {
        (0..n).all(|j| r.get(i, j).is_zero()) && !r.get(i, n).is_zero()
    }) {
        let mut y: Vec<Scalar> = (0..a.rows()).map(|j| r.get(row, n + 1 + j).clone()).collect();
        // Lead-positive normalization for a reproducible certificate.
        if let Some(lead) = y.iter().find(|s| !s.is_zero()) {
            let inv = lead.recip();
            for s in y.iter_mut() {
                *s *= &inv;
            }
        }
        return Ok(Solution::Unsolvable { certificate: y });
    }
    let mut particular = vec![Scalar::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        if p < n {
            particular[p] = r.get(i, n).clone();
        }
    }
    Ok(Solution::Solvable {
        particular,
        kernel: kernel_rows(a),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_fixed_point() {
        let i3 = Mat::identity(3);
        let (r, p) = rref(&i3);
        assert_eq!(r, i3);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let m = Mat::from_ints(&[&[2, 4], &[1, 2]]);
        let (r, p) = rref(&m);
        assert_eq!(r, Mat::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kron_identities() {
        assert_eq!(Mat::identity(2).kron(&Mat::identity(3)), Mat::identity(6));
        let b = Mat::from_ints(&[&[1, 2], &[3, 4]]);
        let two = Mat::from_ints(&[&[2]]);
        assert_eq!(two.kron(&b), b.scale(&Scalar::from_int(2)));
    }

    #[test]
    fn solve_identity_and_underdetermined() {
        let a = Mat::identity(2);
        match solve(&a, &[Scalar::from_int(5), Scalar::from_int(-3)]).unwrap() {
            Solution::Solvable { particular, kernel } => {
                assert_eq!(particular, vec![Scalar::from_int(5), Scalar::from_int(-3)]);
                assert_eq!(kernel.rows(), 0);
            }
            _ => panic!("identity systems are solvable"),
        }
        let a = Mat::from_ints(&[&[1, 1]]);
        match solve(&a, &[Scalar::from_int(2)]).unwrap() {
            Solution::Solvable { particular, kernel } => {
                assert_eq!(particular, vec![Scalar::from_int(2), Scalar::zero()]);
                assert_eq!(kernel, Mat::from_ints(&[&[1, -1]]));
            }
            _ => panic!("expected solvable"),
        }
    }

    #[test]
    fn solve_unsolvable_certificate() {
        let a = Mat::from_ints(&[&[1], &[1]]);
        match solve(&a, &[Scalar::zero(), Scalar::one()]).unwrap() {
            Solution::Unsolvable { certificate } => {
                assert_eq!(certificate, vec![Scalar::from_int(1), Scalar::from_int(-1)]);
            }
            _ => panic!("expected unsolvable"),
        }
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = kernel_rows(&Mat::zero(2, 3));
        assert_eq!(k, Mat::identity(3));
    }

    #[test]
    fn kernel_of_coordinate_projection() {
        let k = kernel_rows(&Mat::from_ints(&[&[1, 0, 0]]));
        assert_eq!(k, Mat::from_ints(&[&[0, 1, 0], &[0, 0, 1]]));
    }
}
