//! Dense exact linear algebra over prime fields.
//!
//! Subspaces are always represented by the row space of a [`Matrix`]; the
//! canonical representative is the reduced row echelon form with zero rows
//! dropped, so two matrices span the same space iff their `rref`s are equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

pub mod gf2;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// The `0 x cols` matrix, i.e. the zero subspace of `F^cols`.
    pub fn empty(field: PrimeField, cols: usize) -> Self {
        Self::zeros(field, 0, cols)
    }

    pub fn identity(field: PrimeField, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.data[i * size + i] = 1 % field.order();
        }
        m
    }

    /// Builds a matrix from signed rows, reducing every entry mod `q`.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    left: cols,
                    right: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from already-reduced rows.
    pub fn from_reduced_rows(field: PrimeField, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            debug_assert!(r.iter().all(|&x| x < field.order()));
            data.extend(r);
        }
        Self {
            field,
            rows: n_rows,
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.row_iter().map(<[u32]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Canonical reduced row echelon form with zero rows removed.
    pub fn rref(&self) -> Matrix {
        if self.field.order() == 2 {
            gf2::PackedMatrix::from_matrix(self).rref().to_matrix()
        } else {
            self.rref_dense()
        }
    }

    /// Reference elimination path, used for every modulus.
    ///
    /// Pivot is the first nonzero column scanning left to right; rows are
    /// processed in order.
    pub fn rref_dense(&self) -> Matrix {
        let f = self.field;
        let cols = self.cols;
        let mut rows: Vec<Vec<u32>> = self.to_rows();
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row == rows.len() {
                break;
            }
            let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(pivot_row, found);
            let inv = f.inv(rows[pivot_row][col]);
            for x in rows[pivot_row].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let pivot = rows[pivot_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == pivot_row || row[col] == 0 {
                    continue;
                }
                let factor = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot).skip(col) {
                    *x = f.sub(*x, f.mul(factor, p));
                }
            }
            pivot_row += 1;
        }
        rows.truncate(pivot_row);
        Matrix::from_reduced_rows(f, cols, rows)
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// Pivot columns of a matrix already in reduced row echelon form.
    pub fn pivots(&self) -> Vec<usize> {
        self.row_iter()
            .filter_map(|r| r.iter().position(|&x| x != 0))
            .collect()
    }

    /// Basis (in canonical form) of the right null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Matrix {
        let f = self.field;
        let r = self.rref();
        let pivots = r.pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Matrix::from_reduced_rows(f, self.cols, basis).rref()
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.order(),
                right: other.field.order(),
            });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        Ok(())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Canonical basis of the sum of the two row spaces.
    pub fn sum(&self, other: &Matrix) -> Result<Matrix> {
        Ok(self.stack(other)?.rref())
    }

    /// Canonical basis of the intersection of the two row spaces
    /// (Zassenhaus: reduce `[a | a ; b | 0]`, keep rows whose left half vanished).
    pub fn intersect(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let c = self.cols;
        let mut rows = Vec::with_capacity(self.rows + other.rows);
        for r in self.row_iter() {
            let mut v = r.to_vec();
            v.extend_from_slice(r);
            rows.push(v);
        }
        for r in other.row_iter() {
            let mut v = r.to_vec();
            v.extend(std::iter::repeat(0).take(c));
            rows.push(v);
        }
        let z = Matrix::from_reduced_rows(self.field, 2 * c, rows).rref();
        let inter: Vec<Vec<u32>> = z
            .row_iter()
            .filter(|r| r[..c].iter().all(|&x| x == 0))
            .map(|r| r[c..].to_vec())
            .collect();
        Ok(Matrix::from_reduced_rows(self.field, c, inter).rref())
    }

    /// Residual of `v` after elimination against `self`, which must be in
    /// reduced row echelon form. Zero iff `v` lies in the row space.
    pub fn reduce_vector(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = v.to_vec();
        for row in self.row_iter() {
            let Some(p) = row.iter().position(|&x| x != 0) else {
                continue;
            };
            let factor = out[p];
            if factor != 0 {
                for (x, &y) in out.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        out
    }

    /// Membership test; `self` must be in reduced row echelon form.
    pub fn row_space_contains(&self, v: &[u32]) -> bool {
        self.reduce_vector(v).iter().all(|&x| x == 0)
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let rows = self
            .row_iter()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect();
        Matrix::from_reduced_rows(self.field, cols.len(), rows)
    }

    /// Left product `coeffs^T * self`.
    pub fn combine(&self, coeffs: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (row, &c) in self.row_iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (x, &y) in out.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        out
    }

    /// Text form: header `q rows cols`, then one space-separated row per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.field.order(), self.rows, self.cols);
        for r in self.row_iter() {
            let line: Vec<String> = r.iter().map(u32::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Matrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `q rows cols`".into(),
        })?;
        let nums = parse_ints(hline, header)?;
        if nums.len() != 3 || nums.iter().any(|&x| x < 0) {
            return Err(Error::Parse {
                line: hline,
                message: "header must be `q rows cols`".into(),
            });
        }
        let field = PrimeField::new(nums[0] as u32).map_err(|e| Error::Parse {
            line: hline,
            message: e.to_string(),
        })?;
        let (rows, cols) = (nums[1] as usize, nums[2] as usize);
        let mut data = Vec::with_capacity(rows);
        for (line, l) in lines {
            let r = parse_ints(line, l)?;
            if r.len() != cols {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {cols} entries, found {}", r.len()),
                });
            }
            data.push(r);
        }
        if data.len() != rows {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: format!("expected {rows} rows, found {}", data.len()),
            });
        }
        Matrix::from_rows(field, cols, &data)
    }
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<i64>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<i64>().map_err(|_| Error::Parse {
                line,
                message: format!("not an integer: {t:?}"),
            })
        })
        .collect()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{}> {}x{}", self.field, self.rows, self.cols)?;
        for r in self.row_iter() {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}
