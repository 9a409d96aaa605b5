//! The symplectic space `V^n` over `F_q`, with `V = span{e, f}` and
//! `ω(e, f) = 1`.
//!
//! Vectors are stored interleaved as `(x_1, z_1, ..., x_n, z_n)`, where factor
//! `i` holds `x_i e + z_i f`. A factor therefore occupies the two adjacent
//! columns `2i, 2i + 1`, which makes restriction to a set of factors a plain
//! column selection.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;

/// `ω(u, v) = Σ_i x_i(u) z_i(v) − z_i(u) x_i(v)` on raw interleaved coordinates.
pub fn form_raw(field: PrimeField, u: &[u32], v: &[u32]) -> u32 {
    debug_assert_eq!(u.len(), v.len());
    let mut acc = 0u32;
    for (a, b) in u.chunks_exact(2).zip(v.chunks_exact(2)) {
        acc = field.add(acc, field.mul(a[0], b[1]));
        acc = field.sub(acc, field.mul(a[1], b[0]));
    }
    acc
}

/// Number of factors on which an interleaved vector is nonzero.
pub fn weight_raw(coords: &[u32]) -> usize {
    coords
        .chunks_exact(2)
        .filter(|p| p[0] != 0 || p[1] != 0)
        .count()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SympVector {
    field: PrimeField,
    coords: Vec<u32>,
}

impl SympVector {
    pub fn zero(field: PrimeField, n: usize) -> Self {
        Self {
            field,
            coords: vec![0; 2 * n],
        }
    }

    pub fn from_coords(field: PrimeField, coords: Vec<u32>) -> Result<Self> {
        if coords.len() % 2 != 0 {
            return Err(Error::Invalid(format!(
                "symplectic vector needs an even number of coordinates, got {}",
                coords.len()
            )));
        }
        Ok(Self {
            field,
            coords: coords.into_iter().map(|x| x % field.order()).collect(),
        })
    }

    /// Builds a vector from per-factor `(x_i, z_i)` pairs.
    pub fn from_pairs(field: PrimeField, pairs: &[(i64, i64)]) -> Self {
        let coords = pairs
            .iter()
            .flat_map(|&(x, z)| [field.reduce(x), field.reduce(z)])
            .collect();
        Self { field, coords }
    }

    /// `e` on factor `i` (0-based).
    pub fn e(field: PrimeField, n: usize, i: usize) -> Self {
        let mut v = Self::zero(field, n);
        v.coords[2 * i] = 1;
        v
    }

    /// `f` on factor `i` (0-based).
    pub fn f(field: PrimeField, n: usize, i: usize) -> Self {
        let mut v = Self::zero(field, n);
        v.coords[2 * i + 1] = 1;
        v
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.coords.len() / 2
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Component on factor `i` as `(x_i, z_i)`.
    pub fn component(&self, i: usize) -> (u32, u32) {
        (self.coords[2 * i], self.coords[2 * i + 1])
    }

    pub fn weight(&self) -> usize {
        weight_raw(&self.coords)
    }

    /// 0-based indices of the nonzero factors.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.component(i) != (0, 0))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    pub fn form(&self, other: &SympVector) -> Result<u32> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.order(),
                right: other.field.order(),
            });
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(form_raw(self.field, &self.coords, &other.coords))
    }

    pub fn add(&self, other: &SympVector) -> SympVector {
        let f = self.field;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        SympVector { field: f, coords }
    }

    pub fn scale(&self, c: u32) -> SympVector {
        let f = self.field;
        SympVector {
            field: f,
            coords: self.coords.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }
}

impl fmt::Debug for SympVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Factor-wise rendering such as `(e, e+f, 0, 2f)`.
impl fmt::Display for SympVector {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: u32, sym: &str| match c {
            0 => None,
            1 => Some(sym.to_string()),
            c => Some(format!("{c}{sym}")),
        };
        let parts: Vec<String> = (0..self.n())
            .map(|i| {
                let (x, z) = self.component(i);
                let t: Vec<String> = [term(x, "e"), term(z, "f")].into_iter().flatten().collect();
                if t.is_empty() {
                    "0".to_string()
                } else {
                    t.join("+")
                }
            })
            .collect();
        write!(out, "({})", parts.join(", "))
    }
}

/// An orthogonal splitting `W = rad(W) ⊕ K`, with `K` given by explicit
/// symplectic pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDecomposition {
    pub radical: Vec<SympVector>,
    pub pairs: Vec<(SympVector, SympVector)>,
}

impl SplitDecomposition {
    /// Checks the splitting invariants against the subspace it claims to split.
    pub fn is_valid_for(&self, w: &Subspace) -> bool {
        let f = w.field();
        let all: Vec<&SympVector> = self
            .radical
            .iter()
            .chain(self.pairs.iter().flat_map(|(a, b)| [a, b]))
            .collect();
        if 2 * self.pairs.len() + self.radical.len() != w.dim_f() {
            return false;
        }
        // Pairs are normalized, mutually orthogonal; radical vectors orthogonal to all.
        for (i, (u, v)) in self.pairs.iter().enumerate() {
            if form_raw(f, u.coords(), v.coords()) != 1 {
                return false;
            }
            for (j, (a, b)) in self.pairs.iter().enumerate() {
                if i != j
                    && [(u, a), (u, b), (v, a), (v, b)]
                        .iter()
                        .any(|(x, y)| form_raw(f, x.coords(), y.coords()) != 0)
                {
                    return false;
                }
            }
        }
        for r in &self.radical {
            if all.iter().any(|x| form_raw(f, r.coords(), x.coords()) != 0) {
                return false;
            }
        }
        match Subspace::from_vectors(f, w.n(), all.into_iter().cloned()) {
            Ok(span) => span == *w,
            Err(_) => false,
        }
    }
}

/// An `F_q`-linear subspace of `V^n`, held in canonical (rref) form.
pub struct Subspace {
    n: usize,
    basis: Matrix,
    sym_dim: OnceLock<usize>,
    split: OnceLock<SplitDecomposition>,
}

impl Clone for Subspace {
    fn clone(&self) -> Self {
        Self {
            n: self.n,
            basis: self.basis.clone(),
            sym_dim: self.sym_dim.clone(),
            split: self.split.clone(),
        }
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl std::hash::Hash for Subspace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.basis.hash(state);
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.vectors().iter().map(|v| v.to_string()).collect();
        write!(f, "span<{}>{{{}}}", self.field(), rows.join(", "))
    }
}

impl Subspace {
    /// Span of the rows of `m`, which must have `2n` columns.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if m.cols() % 2 != 0 {
            return Err(Error::Invalid(format!(
                "basis needs an even number of columns, got {}",
                m.cols()
            )));
        }
        Ok(Self::from_canonical(m.cols() / 2, m.rref()))
    }

    fn from_canonical(n: usize, basis: Matrix) -> Self {
        Self {
            n,
            basis,
            sym_dim: OnceLock::new(),
            split: OnceLock::new(),
        }
    }

    pub fn from_vectors<I>(field: PrimeField, n: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = SympVector>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            if v.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.order(),
                    right: v.field().order(),
                });
            }
            if v.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: v.n(),
                });
            }
            rows.push(v.coords);
        }
        Self::from_matrix(&Matrix::from_reduced_rows(field, 2 * n, rows))
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        Self::from_canonical(n, Matrix::empty(field, 2 * n))
    }

    pub fn full(field: PrimeField, n: usize) -> Self {
        Self::from_canonical(n, Matrix::identity(field, 2 * n))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    /// Canonical basis matrix (`dim_F x 2n`).
    #[inline]
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Dimension as an `F_q`-vector space.
    #[inline]
    pub fn dim_f(&self) -> usize {
        self.basis.rows()
    }

    pub fn vectors(&self) -> Vec<SympVector> {
        self.basis
            .row_iter()
            .map(|r| SympVector {
                field: self.field(),
                coords: r.to_vec(),
            })
            .collect()
    }

    /// Number of elements, `q^dim_F`.
    pub fn cardinality(&self) -> u128 {
        self.field().power_count(self.dim_f())
    }

    pub fn is_zero(&self) -> bool {
        self.dim_f() == 0
    }

    pub fn contains(&self, v: &SympVector) -> bool {
        v.n() == self.n && v.field() == self.field() && self.basis.row_space_contains(v.coords())
    }

    pub fn contains_raw(&self, coords: &[u32]) -> bool {
        self.basis.row_space_contains(coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.n == other.n && self.basis.row_iter().all(|r| other.contains_raw(r))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field().order(),
                right: other.field().order(),
            });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Self::from_canonical(self.n, self.basis.intersect(&other.basis)?))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Self::from_canonical(self.n, self.basis.sum(&other.basis)?))
    }

    /// `W^⊥ = { v : ω(v, w) = 0 for all w ∈ W }`.
    pub fn perp(&self) -> Subspace {
        let f = self.field();
        // ω(·, w) is the linear functional with coefficients (z_1, −x_1, ..., z_n, −x_n).
        let functionals: Vec<Vec<u32>> = self
            .basis
            .row_iter()
            .map(|w| {
                w.chunks_exact(2)
                    .flat_map(|p| [p[1], f.neg(p[0])])
                    .collect()
            })
            .collect();
        let m = Matrix::from_reduced_rows(f, 2 * self.n, functionals);
        Self::from_canonical(self.n, m.kernel())
    }

    /// Gram matrix `G_ij = ω(b_i, b_j)` of the canonical basis.
    pub fn gram(&self) -> Matrix {
        let f = self.field();
        let m = self.dim_f();
        let rows = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| form_raw(f, self.basis.row(i), self.basis.row(j)))
                    .collect()
            })
            .collect();
        Matrix::from_reduced_rows(f, m, rows)
    }

    pub fn is_isotropic(&self) -> bool {
        let f = self.field();
        let m = self.dim_f();
        (0..m).all(|i| (i + 1..m).all(|j| form_raw(f, self.basis.row(i), self.basis.row(j)) == 0))
    }

    /// `rad(W) = W ∩ W^⊥`, read off the orthogonal splitting.
    pub fn radical(&self) -> Subspace {
        let split = self.orthogonal_split();
        Subspace::from_vectors(self.field(), self.n, split.radical.iter().cloned())
            .expect("radical vectors live in the ambient space")
    }

    /// Symplectic dimension: number of pairs in any orthogonal splitting.
    pub fn sym_dim(&self) -> usize {
        *self.sym_dim.get_or_init(|| match self.split.get() {
            Some(s) => s.pairs.len(),
            // A skew form has even rank equal to twice the number of pairs.
            None => self.gram().rank() / 2,
        })
    }

    /// `irk(W) = dim(W) + dim_F(rad W)`.
    pub fn isorank(&self) -> usize {
        self.dim_f() - self.sym_dim()
    }

    pub fn is_stabilizer_subspace(&self) -> bool {
        self.isorank() == self.n
    }

    /// Same predicate via `W^⊥` being isotropic.
    pub fn perp_is_isotropic(&self) -> bool {
        self.perp().is_isotropic()
    }

    pub fn orthogonal_split(&self) -> &SplitDecomposition {
        self.split.get_or_init(|| self.compute_split())
    }

    /// Radical from the kernel of the Gram matrix, a complement chosen greedily
    /// from the canonical basis, then symplectic Gram–Schmidt on the complement.
    fn compute_split(&self) -> SplitDecomposition {
        let f = self.field();
        let cols = 2 * self.n;
        let coeffs = self.gram().kernel();
        let radical = coeffs
            .row_iter()
            .map(|c| self.basis.combine(c))
            .collect::<Vec<_>>();
        let radical = Matrix::from_reduced_rows(f, cols, radical).rref();

        let mut span = radical.clone();
        let mut work: Vec<Vec<u32>> = Vec::new();
        for row in self.basis.row_iter() {
            if !span.row_space_contains(row) {
                work.push(row.to_vec());
                span = span
                    .stack(&Matrix::from_reduced_rows(f, cols, vec![row.to_vec()]))
                    .expect("same width")
                    .rref();
            }
        }

        let mut pairs = Vec::new();
        while !work.is_empty() {
            let u = work.remove(0);
            let partner = work
                .iter()
                .position(|w| form_raw(f, &u, w) != 0)
                .expect("complement of the radical is nondegenerate");
            let w = work.remove(partner);
            let scale = f.inv(form_raw(f, &u, &w));
            let w: Vec<u32> = w.iter().map(|&x| f.mul(x, scale)).collect();
            for x in work.iter_mut() {
                // x ← x − ω(x, w) u + ω(x, u) w clears both pairings.
                let a = form_raw(f, x, &w);
                let b = form_raw(f, x, &u);
                for ((xi, &ui), &wi) in x.iter_mut().zip(&u).zip(&w) {
                    *xi = f.add(f.sub(*xi, f.mul(a, ui)), f.mul(b, wi));
                }
            }
            pairs.push((
                SympVector { field: f, coords: u },
                SympVector { field: f, coords: w },
            ));
        }

        SplitDecomposition {
            radical: radical
                .row_iter()
                .map(|r| SympVector {
                    field: f,
                    coords: r.to_vec(),
                })
                .collect(),
            pairs,
        }
    }

    /// Projection onto the listed factors (0-based, in order), as a subspace
    /// of `V^{|factors|}`.
    pub fn project(&self, factors: &[usize]) -> Subspace {
        let cols: Vec<usize> = factors.iter().flat_map(|&i| [2 * i, 2 * i + 1]).collect();
        Self::from_canonical(factors.len(), self.basis.select_columns(&cols).rref())
    }

    /// Maximum Hamming weight over all elements, by enumeration.
    pub fn max_weight(&self) -> usize {
        let mut best = 0;
        crate::codes::for_each_element(self, |c| best = best.max(weight_raw(c)));
        best
    }

    pub fn to_json(&self) -> SubspaceJson {
        SubspaceJson {
            q: self.field().order(),
            n: self.n,
            basis: self.basis.to_rows(),
        }
    }

    pub fn from_json(j: &SubspaceJson) -> Result<Self> {
        let field = PrimeField::new(j.q)?;
        let rows: Vec<Vec<i64>> = j
            .basis
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        let m = Matrix::from_rows(field, 2 * j.n, &rows)?;
        Subspace::from_matrix(&m)
    }
}

/// Wire form `{ "q": int, "n": int, "basis": [[int; 2n]] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub q: u32,
    pub n: usize,
    pub basis: Vec<Vec<u32>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::binary()
    }

    fn v2(pairs: &[(i64, i64)]) -> SympVector {
        SympVector::from_pairs(f2(), pairs)
    }

    const E: (i64, i64) = (1, 0);
    const F: (i64, i64) = (0, 1);
    const O: (i64, i64) = (0, 0);

    #[test]
    fn form_defining_values() {
        for q in [2, 3, 5, 7] {
            let f = PrimeField::new(q).unwrap();
            let e = SympVector::e(f, 1, 0);
            let ff = SympVector::f(f, 1, 0);
            assert_eq!(e.form(&ff).unwrap(), 1);
            assert_eq!(ff.form(&e).unwrap(), f.neg(1));
            assert_eq!(e.form(&e).unwrap(), 0);
        }
        assert_eq!(v2(&[E, E]).form(&v2(&[F, F])).unwrap(), 0);
        assert_eq!(v2(&[E, E]).form(&v2(&[F, O])).unwrap(), 1);
        assert!(v2(&[E]).form(&v2(&[E, E])).is_err());
    }

    fn repetition() -> Subspace {
        Subspace::from_vectors(f2(), 2, [v2(&[E, E]), v2(&[F, F]), v2(&[F, O])]).unwrap()
    }

    #[test]
    fn repetition_perp_radical_split() {
        let c = repetition();
        let ff = Subspace::from_vectors(f2(), 2, [v2(&[F, F])]).unwrap();
        assert_eq!(c.perp(), ff);
        assert_eq!(c.radical(), ff);
        let split = c.orthogonal_split();
        assert_eq!(split.pairs.len(), 1);
        assert_eq!(split.radical.len(), 1);
        assert!(split.is_valid_for(&c));
        assert_eq!((c.sym_dim(), c.isorank()), (1, 2));
        assert!(c.is_stabilizer_subspace());
        assert!(c.perp_is_isotropic());
    }

    #[test]
    fn bacon_shor_gauge_radical() {
        // r, s, t, u from the gauge generators XXII, ZIZI, IIXX, IZIZ.
        let r = v2(&[E, E, O, O]);
        let s = v2(&[F, O, F, O]);
        let t = v2(&[O, O, E, E]);
        let u = v2(&[O, F, O, F]);
        assert_eq!(r.form(&s).unwrap(), 1);
        assert_eq!(r.form(&u).unwrap(), 1);
        assert_eq!(t.form(&s).unwrap(), 1);
        assert_eq!(t.form(&u).unwrap(), 1);
        assert_eq!(r.form(&t).unwrap(), 0);
        assert_eq!(s.form(&u).unwrap(), 0);
        let w = Subspace::from_vectors(f2(), 4, [r.clone(), s.clone(), t.clone(), u.clone()]).unwrap();
        let rad = Subspace::from_vectors(f2(), 4, [r.add(&t), s.add(&u)]).unwrap();
        assert_eq!(w.radical(), rad);
        assert_eq!((w.sym_dim(), w.isorank()), (1, 3));
        let split = w.orthogonal_split();
        assert_eq!((split.pairs.len(), split.radical.len()), (1, 2));
        assert!(split.is_valid_for(&w));
        assert!(!w.is_stabilizer_subspace());
        assert!(!w.perp_is_isotropic());
    }

    #[test]
    fn full_and_zero_spaces() {
        for q in [2, 3, 5] {
            let f = PrimeField::new(q).unwrap();
            let v = Subspace::full(f, 3);
            assert_eq!((v.sym_dim(), v.isorank()), (3, 3));
            assert!(v.perp().is_zero());
            assert!(v.radical().is_zero());
            let z = Subspace::zero(f, 3);
            assert_eq!((z.sym_dim(), z.isorank()), (0, 0));
            assert!(z.orthogonal_split().pairs.is_empty());
            assert!(z.orthogonal_split().radical.is_empty());
            assert_eq!(z.perp(), v);
        }
    }

    #[test]
    fn maximal_isotropic_is_stabilizer() {
        let f = PrimeField::new(3).unwrap();
        let w = Subspace::from_vectors(f, 3, (0..3).map(|i| SympVector::f(f, 3, i))).unwrap();
        assert!(w.is_isotropic());
        assert!(w.is_stabilizer_subspace());
        assert_eq!(w.perp(), w);
    }

    #[test]
    fn display_uses_factor_letters() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(v2(&[E, (1, 1), O]).to_string(), "(e, e+f, 0)");
        assert_eq!(SympVector::from_pairs(f3, &[(2, 0), (0, -1)]).to_string(), "(2e, 2f)");
    }

    #[test]
    fn json_round_trip() {
        let c = repetition();
        let j = serde_json::to_string(&c.to_json()).unwrap();
        let back: SubspaceJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Subspace::from_json(&back).unwrap(), c);
    }

    #[test]
    fn dim_supermodularity_fails_for_non_orthogonal_pair() {
        const O: (i64, i64) = (0, 0);
        let w1 = Subspace::from_vectors(f2(), 2, [v2(&[E, O]), v2(&[F, O])]).unwrap();
        let w2 = Subspace::from_vectors(f2(), 2, [v2(&[E, E]), v2(&[F, O])]).unwrap();
        let sum = w1.sum(&w2).unwrap();
        let meet = w1.intersect(&w2).unwrap();
        // pairs from W1 and W2 share f1 and collapse to a single pair in the sum
        assert_eq!((w1.sym_dim(), w2.sym_dim()), (1, 1));
        assert_eq!((sum.sym_dim(), meet.sym_dim()), (1, 0));
        assert!(sum.sym_dim() + meet.sym_dim() < w1.sym_dim() + w2.sym_dim());
        assert!(sum.isorank() + meet.isorank() > w1.isorank() + w2.isorank());
    }
}
