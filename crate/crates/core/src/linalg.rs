//! Dense integer matrices: determinant and Smith normal form.
//!
//! Everything is generic over [`IntScalar`], so the same code runs on `i64`
//! for quick checks and on `BigInt` where intermediate growth matters.

use std::fmt;
use std::ops::{Add, Neg};

use num_integer::Integer;
use num_traits::Signed;

/// Exact signed integer arithmetic usable for matrix algorithms.
pub trait IntScalar: Integer + Signed + Clone + fmt::Debug + fmt::Display {}

impl<T> IntScalar for T where T: Integer + Signed + Clone + fmt::Debug + fmt::Display {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Converts entries into another integer type (e.g. `i64` to `BigInt`).
    pub fn convert<U: IntScalar + From<T>>(&self) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().cloned().map(U::from).collect() }
    }

    /// Fraction-free (Bareiss) elimination. The empty matrix has
    /// determinant 1. Panics if the matrix is not square.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.row_vecs();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = num / prev.clone();
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Diagonal of the Smith normal form: nonnegative `d_1 | d_2 | ...`, one
    /// entry per `min(rows, cols)`, with zeros last. For a square relation
    /// matrix these are the cyclic factors of its cokernel, 0 meaning `Z`.
    pub fn smith_invariants(&self) -> Vec<T> {
        let (r, c) = (self.rows, self.cols);
        let mut a = self.row_vecs();
        let mut out = Vec::with_capacity(r.min(c));
        for t in 0..r.min(c) {
            loop {
                let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                    out.resize(r.min(c), T::zero());
                    return out;
                };
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                let p = a[t][t].clone();
                let mut clean = true;
                let pivot_row = a[t].clone();
                for row in a.iter_mut().take(r).skip(t + 1) {
                    let q = row[t].div_floor(&p);
                    if !q.is_zero() {
                        for (x, y) in row[t..c].iter_mut().zip(&pivot_row[t..c]) {
                            *x = x.clone() - q.clone() * y.clone();
                        }
                    }
                    clean &= row[t].is_zero();
                }
                for j in t + 1..c {
                    let q = a[t][j].div_floor(&p);
                    if !q.is_zero() {
                        for row in a.iter_mut().skip(t) {
                            let v = row[j].clone() - q.clone() * row[t].clone();
                            row[j] = v;
                        }
                    }
                    clean &= a[t][j].is_zero();
                }
                if !clean {
                    continue;
                }
                // pivot must divide the remaining block
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        let other = a[i].clone();
                        for (x, y) in a[t][t..c].iter_mut().zip(&other[t..c]) {
                            *x = x.clone() + y.clone();
                        }
                    }
                    None => break,
                }
            }
            out.push(a[t][t].abs());
        }
        out
    }
}

fn smallest_nonzero<T: IntScalar>(a: &[Vec<T>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            let m = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| m < *b) {
                best = Some((i, j, m));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

impl<T: IntScalar> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(x, y)| x.clone() + y.clone()).collect(),
        }
    }
}

impl<T: IntScalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x.clone()).collect() }
    }
}

impl<T: IntScalar> fmt::Display for Matrix<T> {
    /// One line per row, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
