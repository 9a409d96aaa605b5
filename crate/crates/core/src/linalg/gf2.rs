//! Word-packed elimination for `q = 2`.
//!
//! Rows are stored as little-endian `u64` words, column `c` at bit `c % 64` of
//! word `c / 64`. Produces exactly the same canonical form as the dense path.

use super::Matrix;
use crate::field::PrimeField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedMatrix {
    cols: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl PackedMatrix {
    pub fn from_matrix(m: &Matrix) -> Self {
        assert_eq!(m.field().order(), 2, "packed path is binary only");
        let words = m.cols().div_ceil(64).max(1);
        let rows = m
            .row_iter()
            .map(|r| {
                let mut w = vec![0u64; words];
                for (c, &x) in r.iter().enumerate() {
                    if x & 1 == 1 {
                        w[c / 64] |= 1 << (c % 64);
                    }
                }
                w
            })
            .collect();
        Self {
            cols: m.cols(),
            words,
            rows,
        }
    }

    pub fn to_matrix(&self) -> Matrix {
        let rows = self
            .rows
            .iter()
            .map(|w| (0..self.cols).map(|c| ((w[c / 64] >> (c % 64)) & 1) as u32).collect())
            .collect();
        Matrix::from_reduced_rows(PrimeField::binary(), self.cols, rows)
    }

    #[inline]
    fn bit(row: &[u64], c: usize) -> bool {
        (row[c / 64] >> (c % 64)) & 1 == 1
    }

    pub fn rref(mut self) -> Self {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows.len() {
                break;
            }
            let Some(found) = (pivot_row..self.rows.len()).find(|&r| Self::bit(&self.rows[r], col))
            else {
                continue;
            };
            self.rows.swap(pivot_row, found);
            let pivot = self.rows[pivot_row].clone();
            let start = col / 64;
            for (r, row) in self.rows.iter_mut().enumerate() {
                if r != pivot_row && Self::bit(row, col) {
                    for (x, &p) in row[start..].iter_mut().zip(&pivot[start..]) {
                        *x ^= p;
                    }
                }
            }
            pivot_row += 1;
        }
        self.rows.truncate(pivot_row);
        debug_assert!(self.rows.iter().all(|r| r.len() == self.words));
        self
    }
}
