//! Anticodes, puncturing and shortening.
//!
//! Every anticode of `V^n` is the free code `A_J = { v : v_j = 0 for j ∉ J }`
//! on some support `J`, so anticodes are stored as supports and realized as
//! subspaces on demand. Punctured and shortened spaces live in `V^{|J|}` with
//! the factors of `J` in increasing order.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;
use crate::report::{Check, Report};
use crate::symplectic::{Subspace, SympVector};

/// A set of factor indices (0-based) as a bitmask; `n ≤ 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Support(pub u64);

impl Support {
    pub fn from_indices(indices: &[usize]) -> Support {
        Support(indices.iter().fold(0u64, |m, &i| m | (1 << i)))
    }

    pub fn full(n: usize) -> Support {
        if n == 64 {
            Support(u64::MAX)
        } else {
            Support((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }

    pub fn complement(self, n: usize) -> Support {
        Support(!self.0 & Support::full(n).0)
    }

    pub fn is_subset_of(self, other: Support) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Support) -> Support {
        Support(self.0 | other.0)
    }

    pub fn intersection(self, other: Support) -> Support {
        Support(self.0 & other.0)
    }

    /// All supports of `{0..n}`, by increasing size and lexicographically
    /// (on sorted index lists) within each size.
    pub fn all_by_cardinality(n: usize) -> Vec<Support> {
        let mut out = Vec::with_capacity(1 << n);
        for size in 0..=n {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                out.push(Support::from_indices(&combo));
                // advance to the next combination in lexicographic order
                let mut i = size;
                while i > 0 && combo[i - 1] == n - size + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                combo[i - 1] += 1;
                for j in i..size {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
        out
    }

    /// Parses comma-separated 1-based indices such as `1,2,3,4`.
    pub fn parse_one_based(s: &str, n: usize) -> Result<Support> {
        let mut idx = Vec::new();
        for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: usize = t
                .parse()
                .map_err(|_| Error::Invalid(format!("support index {t:?} is not a positive integer")))?;
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            idx.push(i - 1);
        }
        Ok(Support::from_indices(&idx))
    }

    pub fn one_based(self) -> Vec<usize> {
        self.indices().into_iter().map(|i| i + 1).collect()
    }
}

impl fmt::Debug for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.one_based().iter().map(usize::to_string).collect::<Vec<_>>().join(","))
    }
}

/// The free code supported on `support` in `V^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Anticode {
    n: usize,
    support: Support,
}

impl Anticode {
    pub fn new(n: usize, indices: &[usize]) -> Result<Anticode> {
        if n > 64 {
            return Err(Error::TooManyFactors(n));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad + 1, n });
        }
        Ok(Anticode {
            n,
            support: Support::from_indices(indices),
        })
    }

    pub fn from_support(n: usize, support: Support) -> Result<Anticode> {
        if n > 64 {
            return Err(Error::TooManyFactors(n));
        }
        if !support.is_subset_of(Support::full(n)) {
            return Err(Error::IndexOutOfRange {
                index: 64 - support.0.leading_zeros() as usize,
                n,
            });
        }
        Ok(Anticode { n, support })
    }

    pub fn parse(n: usize, one_based: &str) -> Result<Anticode> {
        Anticode::from_support(n, Support::parse_one_based(one_based, n)?)
    }

    pub fn full(n: usize) -> Anticode {
        Anticode {
            n,
            support: Support::full(n),
        }
    }

    pub fn empty(n: usize) -> Anticode {
        Anticode {
            n,
            support: Support(0),
        }
    }

    /// Every anticode of `V^n`, smallest supports first.
    pub fn all(n: usize) -> impl Iterator<Item = Anticode> {
        Support::all_by_cardinality(n)
            .into_iter()
            .map(move |support| Anticode { n, support })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn support(&self) -> Support {
        self.support
    }

    /// `dim(A) = |J|`.
    #[inline]
    pub fn dim(&self) -> usize {
        self.support.len()
    }

    /// `A^⊥ = A_{J^c}`.
    pub fn complement(&self) -> Anticode {
        Anticode {
            n: self.n,
            support: self.support.complement(self.n),
        }
    }

    pub fn factors(&self) -> Vec<usize> {
        self.support.indices()
    }

    pub fn meet(&self, other: &Anticode) -> Anticode {
        Anticode {
            n: self.n,
            support: self.support.intersection(other.support),
        }
    }

    pub fn join(&self, other: &Anticode) -> Anticode {
        Anticode {
            n: self.n,
            support: self.support.union(other.support),
        }
    }

    /// The subspace `A_J ≤ V^n`.
    pub fn realize(&self, field: PrimeField) -> Subspace {
        let vectors = self
            .factors()
            .into_iter()
            .flat_map(|i| [SympVector::e(field, self.n, i), SympVector::f(field, self.n, i)]);
        Subspace::from_vectors(field, self.n, vectors).expect("unit vectors fit the ambient space")
    }

    fn check_ambient(&self, w: &Subspace) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: w.n(),
                right: self.n,
            });
        }
        Ok(())
    }
}

impl FromStr for Support {
    type Err = Error;
    /// Parses 1-based indices without an ambient bound (checked later).
    fn from_str(s: &str) -> Result<Support> {
        Support::parse_one_based(s, 64)
    }
}

/// `W ∩ A_J`, computed as `{ Σ c_i b_i : Σ c_i b_i vanishes off J }`.
pub fn intersect(w: &Subspace, a: &Anticode) -> Result<Subspace> {
    a.check_ambient(w)?;
    let off: Vec<usize> = a
        .support
        .complement(a.n)
        .indices()
        .into_iter()
        .flat_map(|i| [2 * i, 2 * i + 1])
        .collect();
    // coefficient vectors c with c^T B restricted to J^c equal to zero
    let restricted = w.basis().select_columns(&off);
    let m = w.dim_f();
    let transposed: Vec<Vec<u32>> = (0..restricted.cols())
        .map(|c| (0..m).map(|r| restricted.get(r, c)).collect())
        .collect();
    let coeffs = Matrix::from_reduced_rows(w.field(), m, transposed).kernel();
    let rows: Vec<Vec<u32>> = coeffs.row_iter().map(|c| w.basis().combine(c)).collect();
    Subspace::from_matrix(&Matrix::from_reduced_rows(w.field(), 2 * w.n(), rows))
}

/// `dim_F(W ∩ A_J) = dim_F(W) − rank(B|_{J^c})` without building the intersection.
pub fn intersection_dim_f(w: &Subspace, a: &Anticode) -> usize {
    let off: Vec<usize> = a
        .support
        .complement(a.n)
        .indices()
        .into_iter()
        .flat_map(|i| [2 * i, 2 * i + 1])
        .collect();
    w.dim_f() - w.basis().select_columns(&off).rank()
}

/// `Π_A W = π_J(W)`.
pub fn puncture(w: &Subspace, a: &Anticode) -> Result<Subspace> {
    a.check_ambient(w)?;
    Ok(w.project(&a.factors()))
}

/// `Σ_A W = π_J(W ∩ A)`.
pub fn shorten(w: &Subspace, a: &Anticode) -> Result<Subspace> {
    Ok(intersect(w, a)?.project(&a.factors()))
}

fn span_value(w: &Subspace) -> serde_json::Value {
    json!(w.basis().to_rows())
}

/// Both cleaning dualities, `Σ_A C^⊥ = (Π_A C)^⊥` and `Π_A C^⊥ = (Σ_A C)^⊥`,
/// plus `Σ_A C ≤ Π_A C`. When `distance` is given and `C` is a stabilizer code
/// with `|J| < d`, also checks `Π_A C = Π_A rad(C)`.
pub fn verify_cleaning(code: &Code, a: &Anticode, distance: Option<usize>) -> Result<Report> {
    let c = code.space();
    let dual = code.perp();
    let mut r = Report::default();

    let lhs = shorten(dual, a)?;
    let rhs = puncture(c, a)?.perp();
    r.push(Check::new(
        "cleaning: shorten(C^perp) = puncture(C)^perp",
        span_value(&lhs),
        span_value(&rhs),
        lhs == rhs,
    ));

    let lhs = puncture(dual, a)?;
    let rhs = shorten(c, a)?.perp();
    r.push(Check::new(
        "cleaning: puncture(C^perp) = shorten(C)^perp",
        span_value(&lhs),
        span_value(&rhs),
        lhs == rhs,
    ));

    let sh = shorten(c, a)?;
    let pu = puncture(c, a)?;
    r.push(Check::new(
        "shorten(C) <= puncture(C)",
        sh.dim_f(),
        pu.dim_f(),
        sh.is_subspace_of(&pu),
    ));

    match distance {
        Some(d) if code.is_stabilizer_code() && a.dim() < d => {
            let lhs = puncture(c, a)?;
            let rhs = puncture(code.radical(), a)?;
            r.push(Check::new(
                "cleaning: puncture(C) = puncture(rad C) below distance",
                span_value(&lhs),
                span_value(&rhs),
                lhs == rhs,
            ));
        }
        _ => r.skip("cleaning: puncture(C) = puncture(rad C) below distance"),
    }
    Ok(r)
}

/// `rad(C) = (rad(C) ∩ A) ⊕ (rad(C) ∩ A^⊥) ⊕ S′`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPrimeDecomposition {
    pub rad_in_a: Subspace,
    pub rad_in_aperp: Subspace,
    /// Basis of the chosen complement `S′`, in selection order.
    pub s_prime: Vec<SympVector>,
}

impl SPrimeDecomposition {
    pub fn s_prime_space(&self) -> Subspace {
        let f = self.rad_in_a.field();
        Subspace::from_vectors(f, self.rad_in_a.n(), self.s_prime.iter().cloned())
            .expect("complement vectors share the ambient space")
    }

    /// Direct sum equal to `radical`, pairwise orthogonal isotropic pieces,
    /// and `π_J` injective on `S′`.
    pub fn is_valid_for(&self, radical: &Subspace, a: &Anticode) -> bool {
        let s = self.s_prime_space();
        let parts = [&self.rad_in_a, &self.rad_in_aperp, &s];
        let total: usize = parts.iter().map(|p| p.dim_f()).sum();
        let Ok(sum) = self.rad_in_a.sum(&self.rad_in_aperp).and_then(|x| x.sum(&s)) else {
            return false;
        };
        let orthogonal = parts.iter().all(|p| {
            parts
                .iter()
                .all(|q| crate::codes::orthogonal(p, q))
        });
        total == radical.dim_f()
            && sum == *radical
            && s.dim_f() == self.s_prime.len()
            && orthogonal
            && s.project(&a.factors()).dim_f() == s.dim_f()
    }
}

/// Splits `rad(C)` along `A`, choosing `S′` greedily from the canonical radical
/// basis.
pub fn s_prime_decompose(code: &Code, a: &Anticode) -> Result<SPrimeDecomposition> {
    s_prime_decompose_with(code, a, &code.radical().vectors())
}

/// Same as [`s_prime_decompose`], but `S′` is built from the earliest vectors
/// of `preferred` (which must lie in `rad(C)`) that are not yet spanned.
pub fn s_prime_decompose_with(code: &Code, a: &Anticode, preferred: &[SympVector]) -> Result<SPrimeDecomposition> {
    let rad = code.radical();
    if let Some(bad) = preferred.iter().position(|v| !rad.contains(v)) {
        return Err(Error::Invalid(format!(
            "preferred vector {} is not in rad(C)",
            bad + 1
        )));
    }
    let rad_in_a = intersect(rad, a)?;
    let rad_in_aperp = intersect(rad, &a.complement())?;
    let mut span = rad_in_a.sum(&rad_in_aperp)?;
    let mut s_prime = Vec::new();
    for v in preferred.iter().chain(rad.vectors().iter()) {
        if span.dim_f() == rad.dim_f() {
            break;
        }
        if !span.contains(v) {
            span = span.sum(&Subspace::from_vectors(rad.field(), rad.n(), [v.clone()])?)?;
            s_prime.push(v.clone());
        }
    }
    Ok(SPrimeDecomposition {
        rad_in_a,
        rad_in_aperp,
        s_prime,
    })
}

/// The complementarity identities for `C` and `A`, using the canonical `S′`.
pub fn complementarity_check(code: &Code, a: &Anticode) -> Result<Report> {
    let dec = s_prime_decompose(code, a)?;
    complementarity_check_with(code, a, &dec)
}

pub fn complementarity_check_with(code: &Code, a: &Anticode, dec: &SPrimeDecomposition) -> Result<Report> {
    let ac = a.complement();
    let s = code.radical();
    let sp = dec.s_prime_space();
    let mut r = Report::default();

    r.push(Check::new(
        "S' decomposition is a valid orthogonal direct sum",
        dec.s_prime.len(),
        s.dim_f() - dec.rad_in_a.dim_f() - dec.rad_in_aperp.dim_f(),
        dec.is_valid_for(s, a),
    ));

    let pa = puncture(&sp, a)?;
    let pac = puncture(&sp, &ac)?;
    r.push(Check::eq("dim(puncture_A S') = dim(puncture_Ac S')", pa.sym_dim(), pac.sym_dim()));
    r.push(Check::eq("irk(puncture_A S') = irk(puncture_Ac S')", pa.isorank(), pac.isorank()));

    let ps = puncture(s, a)?;
    let psc = puncture(s, &ac)?;
    r.push(Check::eq("dim(puncture_A S) = dim(puncture_Ac S)", ps.sym_dim(), psc.sym_dim()));

    let ss = shorten(s, a)?;
    let ssc = shorten(s, &ac)?;
    let lhs = ps.isorank() as i64 - ss.isorank() as i64;
    let rhs = psc.isorank() as i64 - ssc.isorank() as i64;
    r.push(Check::eq("irk(puncture_A S) - irk(shorten_A S) symmetric", lhs, rhs));

    let stab = [
        "stabilizer: dim(A) - irk(shorten_A C) symmetric",
        "stabilizer: dim(A) - dim(shorten_A C) - irk(shorten_A S) symmetric",
        "stabilizer: irk(shorten_A C) - irk(shorten_A S) - dim(shorten_A C) symmetric",
    ];
    if code.is_stabilizer_code() {
        let sc = shorten(code.space(), a)?;
        let scc = shorten(code.space(), &ac)?;
        let (da, dac) = (a.dim() as i64, ac.dim() as i64);
        let (irk_c, irk_cc) = (sc.isorank() as i64, scc.isorank() as i64);
        let (dim_c, dim_cc) = (sc.sym_dim() as i64, scc.sym_dim() as i64);
        let (irk_s, irk_sc) = (ss.isorank() as i64, ssc.isorank() as i64);
        r.push(Check::eq(stab[0], da - irk_c, dac - irk_cc));
        r.push(Check::eq(stab[1], da - dim_c - irk_s, dac - dim_cc - irk_sc));
        r.push(Check::eq(stab[2], irk_c - irk_s - dim_c, irk_cc - irk_sc - dim_cc));
    } else {
        stab.iter().for_each(|s| r.skip(*s));
    }
    Ok(r)
}
