//! Dense matrices over a prime field.

use std::fmt;

use crate::error::{Error, Result};
use crate::modp;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            writeln!(f, "  [{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, size: usize) -> Self {
        let mut m = Self::zeros(p, size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of equal length; entries are reduced mod p.
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend(r.iter().map(|&x| x % p));
        }
        Ok(Self { p, rows: rows.len(), cols, data })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn push_row(&mut self, row: &[u32]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Dimension(format!("row of length {} in a {}-column matrix", row.len(), self.cols)));
        }
        self.data.extend(row.iter().map(|&x| x % self.p));
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows || self.p != other.p {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = modp::add(out.data[idx], modp::mul(a, other.get(k, c), p), p);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: x^T M.
    pub fn left_mul_vec(&self, x: &[u32]) -> Result<Vec<u32>> {
        if x.len() != self.rows {
            return Err(Error::Dimension(format!("vector of length {} against {} rows", x.len(), self.rows)));
        }
        let p = self.p;
        let mut out = vec![0u32; self.cols];
        for (r, &a) in x.iter().enumerate() {
            if a % p == 0 {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(r)) {
                *o = modp::add(*o, modp::mul(a % p, m, p), p);
            }
        }
        Ok(out)
    }

    /// Matrix times column vector: M x.
    pub fn mul_vec(&self, x: &[u32]) -> Result<Vec<u32>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} against {} columns", x.len(), self.cols)));
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), x, self.p)).collect())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.p, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Gauss-Jordan elimination, choosing pivot columns in the given order.
    pub fn echelon_in_order(&self, column_order: &[usize]) -> Echelon {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for &c in column_order {
            if rank == m.rows {
                break;
            }
            let Some(pr) = (rank..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(rank, pr);
            let inv = modp::inv(m.get(rank, c), p).expect("nonzero pivot");
            m.scale_row(rank, inv);
            for r in 0..m.rows {
                if r != rank {
                    let f = m.get(r, c);
                    if f != 0 {
                        m.add_row_multiple(r, rank, modp::neg(f, p));
                    }
                }
            }
            pivots.push(c);
            rank += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn echelon(&self) -> Echelon {
        let order: Vec<usize> = (0..self.cols).collect();
        self.echelon_in_order(&order)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Self {
        let e = self.echelon();
        let mut out = Self::zeros(self.p, 0, self.cols);
        for r in 0..e.rank() {
            out.push_row(e.matrix.row(r)).expect("same width");
        }
        out
    }

    pub fn same_row_space(&self, other: &Self) -> bool {
        self.cols == other.cols && self.p == other.p && self.row_space_basis() == other.row_space_basis()
    }

    /// Basis (as rows) of the right kernel {x : M x = 0}.
    pub fn kernel(&self) -> Self {
        let p = self.p;
        let e = self.echelon();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &c in &e.pivots {
                v[c] = true;
            }
            v
        };
        let mut out = Self::zeros(p, 0, self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &pc) in e.pivots.iter().enumerate() {
                v[pc] = modp::neg(e.matrix.get(r, free), p);
            }
            out.push_row(&v).expect("same width");
        }
        out
    }

    /// Solves the square system M x = b; `None` when M is singular.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        if self.rows != self.cols || b.len() != self.rows {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.p, n, n + 1);
        for r in 0..n {
            for c in 0..n {
                aug.data[r * (n + 1) + c] = self.get(r, c);
            }
            aug.data[r * (n + 1) + n] = b[r] % self.p;
        }
        let order: Vec<usize> = (0..n).collect();
        let e = aug.echelon_in_order(&order);
        if e.rank() < n {
            return None;
        }
        Some((0..n).map(|r| e.matrix.get(r, n)).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, f: u32) {
        let p = self.p;
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = modp::mul(*x, f, p);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, f: u32) {
        let p = self.p;
        for c in 0..self.cols {
            let v = modp::mul(self.data[src * self.cols + c], f, p);
            let idx = dst * self.cols + c;
            self.data[idx] = modp::add(self.data[idx], v, p);
        }
    }
}

pub fn dot(a: &[u32], b: &[u32], p: u32) -> u32 {
    let mut acc = 0u64;
    for (&x, &y) in a.iter().zip(b) {
        acc = (acc + x as u64 * y as u64) % p as u64;
    }
    acc as u32
}

pub fn hamming_weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_annihilates() {
        let m = Matrix::from_rows(2, 7, &[
            vec![1, 1, 0, 1, 0, 0, 0],
            vec![0, 1, 1, 0, 1, 0, 0],
            vec![0, 0, 1, 1, 0, 1, 0],
            vec![0, 0, 0, 1, 1, 0, 1],
        ])
        .unwrap();
        let k = m.kernel();
        assert_eq!(k.rows(), 3);
        assert!(m.mul(&k.transpose()).unwrap().is_zero());
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn solve_mod_5() {
        let m = Matrix::from_rows(5, 2, &[vec![2, 1], vec![1, 4]]).unwrap();
        let x = m.solve(&[4, 0]).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![4, 0]);
        let singular = Matrix::from_rows(5, 2, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.solve(&[1, 1]).is_none());
    }

    #[test]
    fn row_space_is_canonical() {
        let a = Matrix::from_rows(3, 3, &[vec![1, 2, 0], vec![0, 1, 1]]).unwrap();
        let b = Matrix::from_rows(3, 3, &[vec![1, 0, 1], vec![1, 1, 2]]).unwrap();
        assert!(a.same_row_space(&b));
    }
}
