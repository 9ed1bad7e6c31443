//! Linear codes in generator-matrix form.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::modp;

/// A linear code given by a generator matrix of full row rank.
///
/// The rows are kept as supplied (no reduction), so a cyclic shift basis or
/// an evaluation basis survives intact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
}

/// Generator matrix of a code, rows forming a basis.
pub type GeneratorMatrix = LinearCode;

impl LinearCode {
    pub fn new(generator: Matrix) -> Result<Self> {
        let rank = generator.rank();
        if rank < generator.rows() {
            return Err(Error::RankDeficient { rank, rows: generator.rows() });
        }
        Ok(Self { generator })
    }

    /// Code spanned by arbitrary (possibly dependent) rows.
    pub fn from_spanning(rows: Matrix) -> Self {
        Self { generator: rows.row_space_basis() }
    }

    pub fn zero(q: u32, n: usize) -> Self {
        Self { generator: Matrix::zeros(q, 0, n) }
    }

    pub fn whole_space(q: u32, n: usize) -> Self {
        Self { generator: Matrix::identity(q, n) }
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn q(&self) -> u32 {
        self.generator.p()
    }

    /// The dual code, generated by the right kernel of G.
    pub fn dual(&self) -> Self {
        Self { generator: self.generator.kernel() }
    }

    pub fn parity_check(&self) -> Matrix {
        self.generator.kernel()
    }

    pub fn encode(&self, message: &[u32]) -> Result<Vec<u32>> {
        self.generator.left_mul_vec(message)
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        word.len() == self.n()
            && self.parity_check().mul_vec(word).map(|s| s.iter().all(|&x| x == 0)).unwrap_or(false)
    }

    pub fn same_code(&self, other: &Self) -> bool {
        self.generator.same_row_space(&other.generator)
    }

    pub fn is_subcode_of(&self, other: &Self) -> bool {
        if self.n() != other.n() || self.q() != other.q() {
            return false;
        }
        let h = other.parity_check();
        h.mul(&self.generator.transpose()).map(|m| m.is_zero()).unwrap_or(false)
    }

    /// Span of the component-wise products of the two codes' basis rows.
    pub fn star(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() || self.q() != other.q() {
            return Err(Error::Mismatch {
                q1: self.q(),
                n1: self.n() as u32,
                q2: other.q(),
                n2: other.n() as u32,
            });
        }
        let p = self.q();
        let mut span = Matrix::zeros(p, 0, self.n());
        for a in 0..self.k() {
            for b in 0..other.k() {
                let prod: Vec<u32> = self
                    .generator
                    .row(a)
                    .iter()
                    .zip(other.generator.row(b))
                    .map(|(&x, &y)| modp::mul(x, y, p))
                    .collect();
                span.push_row(&prod)?;
            }
            // keep the working set small
            if span.rows() > 4 * self.n() {
                span = span.row_space_basis();
            }
        }
        Ok(Self::from_spanning(span))
    }

    /// Deletes coordinate `coord`; the dimension drops when the code is not
    /// injective on the remaining coordinates.
    pub fn puncture(&self, coord: usize) -> Result<Self> {
        self.check_coord(coord)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&c| c != coord).collect();
        Ok(Self::from_spanning(self.generator.select_columns(&keep)))
    }

    /// Keeps the codewords vanishing at `coord` and deletes that coordinate.
    pub fn shorten(&self, coord: usize) -> Result<Self> {
        self.check_coord(coord)?;
        let mut order = vec![coord];
        order.extend((0..self.n()).filter(|&c| c != coord));
        let e = self.generator.echelon_in_order(&order);
        let skip = usize::from(e.pivots.first() == Some(&coord));
        let keep: Vec<usize> = (0..self.n()).filter(|&c| c != coord).collect();
        let mut out = Matrix::zeros(self.q(), 0, keep.len());
        for r in skip..e.rank() {
            let row: Vec<u32> = keep.iter().map(|&c| e.matrix.get(r, c)).collect();
            out.push_row(&row)?;
        }
        Ok(Self { generator: out })
    }

    /// Pivot columns of G under elimination in natural order.
    pub fn information_set(&self) -> Vec<usize> {
        self.generator.echelon().pivots
    }

    /// Whether the given coordinates contain an information set.
    pub fn covers_information_set(&self, coords: &[usize]) -> bool {
        self.generator.select_columns(coords).rank() == self.k()
    }

    /// All codewords, for tiny codes only.
    pub fn codewords(&self) -> Vec<Vec<u32>> {
        let q = self.q() as u64;
        let total = q.pow(self.k() as u32);
        (0..total)
            .map(|mut idx| {
                let msg: Vec<u32> = (0..self.k())
                    .map(|_| {
                        let d = (idx % q) as u32;
                        idx /= q;
                        d
                    })
                    .collect();
                self.encode(&msg).expect("message length matches")
            })
            .collect()
    }

    fn check_coord(&self, coord: usize) -> Result<()> {
        if coord >= self.n() {
            return Err(Error::Dimension(format!("coordinate {coord} out of range for length {}", self.n())));
        }
        Ok(())
    }
}

pub fn weight(word: &[u32]) -> usize {
    linalg::hamming_weight(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming() -> LinearCode {
        LinearCode::new(
            Matrix::from_rows(2, 7, &[
                vec![1, 1, 0, 1, 0, 0, 0],
                vec![0, 1, 1, 0, 1, 0, 0],
                vec![0, 0, 1, 1, 0, 1, 0],
                vec![0, 0, 0, 1, 1, 0, 1],
            ])
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn dual_of_hamming_is_simplex() {
        let h = hamming();
        let d = h.dual();
        assert_eq!(d.k(), 3);
        for w in d.codewords().iter().filter(|w| weight(w) > 0) {
            assert_eq!(weight(w), 4);
        }
        assert!(d.dual().same_code(&h));
    }

    #[test]
    fn rank_deficient_rejected() {
        let m = Matrix::from_rows(2, 3, &[vec![1, 1, 0], vec![1, 1, 0]]).unwrap();
        assert!(matches!(LinearCode::new(m), Err(Error::RankDeficient { rank: 1, rows: 2 })));
    }

    #[test]
    fn shorten_and_puncture() {
        let h = hamming();
        let s = h.shorten(0).unwrap();
        let p = h.puncture(0).unwrap();
        assert_eq!((s.n(), s.k()), (6, 3));
        assert_eq!((p.n(), p.k()), (6, 4));
        assert!(s.is_subcode_of(&p));
        for w in s.codewords() {
            let mut full = vec![0];
            full.extend(&w);
            assert!(h.contains(&full));
        }
    }

    #[test]
    fn star_with_all_ones_is_identity() {
        let h = hamming();
        let ones = LinearCode::new(Matrix::from_rows(2, 7, &[vec![1; 7]]).unwrap()).unwrap();
        assert!(h.star(&ones).unwrap().same_code(&h));
    }
}
