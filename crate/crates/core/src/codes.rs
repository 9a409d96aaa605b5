//! Symplectic codes, stabilizer and subsystem constructions, and Pauli import.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::symplectic::{form_raw, weight_raw, Subspace, SubspaceJson, SympVector};

pub mod fixtures;

/// Visits every element of the span of `rows` exactly once.
///
/// Depth-first over coefficient tuples; each step adds one row to a running
/// buffer, and `q` additions of the same row return it to its prior value.
pub fn for_each_combination<F: FnMut(&[u32])>(field: PrimeField, cols: usize, rows: &[Vec<u32>], mut visit: F) {
    fn rec<F: FnMut(&[u32])>(field: PrimeField, rows: &[Vec<u32>], buf: &mut [u32], visit: &mut F) {
        let Some((row, rest)) = rows.split_first() else {
            visit(buf);
            return;
        };
        for _ in 0..field.order() {
            rec(field, rest, buf, visit);
            for (b, &r) in buf.iter_mut().zip(row) {
                *b = field.add(*b, r);
            }
        }
    }
    let mut buf = vec![0u32; cols];
    rec(field, rows, &mut buf, &mut visit);
}

/// Visits every element of a subspace exactly once (no budget check).
pub fn for_each_element<F: FnMut(&[u32])>(w: &Subspace, visit: F) {
    for_each_combination(w.field(), 2 * w.n(), &w.basis().to_rows(), visit)
}

/// A single Pauli letter without phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Z,
    Y,
}

impl Pauli {
    /// `I → 0`, `X → e`, `Z → f`, `Y → e + f`.
    pub fn coords(self) -> (u32, u32) {
        match self {
            Pauli::I => (0, 0),
            Pauli::X => (1, 0),
            Pauli::Z => (0, 1),
            Pauli::Y => (1, 1),
        }
    }

    pub fn from_coords(x: u32, z: u32) -> Pauli {
        match (x & 1, z & 1) {
            (0, 0) => Pauli::I,
            (1, 0) => Pauli::X,
            (0, 1) => Pauli::Z,
            _ => Pauli::Y,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Z => 'Z',
            Pauli::Y => 'Y',
        }
    }
}

/// A phase-free Pauli string over qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliString(pub Vec<Pauli>);

impl PauliString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_vector(&self) -> SympVector {
        let pairs: Vec<(i64, i64)> = self
            .0
            .iter()
            .map(|p| {
                let (x, z) = p.coords();
                (x as i64, z as i64)
            })
            .collect();
        SympVector::from_pairs(PrimeField::binary(), &pairs)
    }

    pub fn from_vector(v: &SympVector) -> Result<PauliString> {
        if v.field().order() != 2 {
            return Err(Error::Invalid("Pauli strings exist only over F_2".into()));
        }
        Ok(PauliString(
            (0..v.n())
                .map(|i| {
                    let (x, z) = v.component(i);
                    Pauli::from_coords(x, z)
                })
                .collect(),
        ))
    }
}

impl FromStr for PauliString {
    type Err = String;

    /// Accepts an optional phase prefix (`+`, `-`, `i`, `+i`, `-i`), which is
    /// dropped, followed by letters `I X Y Z`. Whitespace is ignored.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = ["+i", "-i", "+", "-", "i"]
            .iter()
            .find_map(|p| compact.strip_prefix(p))
            .unwrap_or(&compact);
        body.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Z' => Ok(Pauli::Z),
                'Y' => Ok(Pauli::Y),
                other => Err(format!("invalid Pauli letter {other:?}")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(PauliString)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|p| write!(f, "{}", p.letter()))
    }
}

/// Parses a Pauli generator file: one generator per line, `#` comments.
pub fn parse_pauli_file(text: &str) -> Result<Vec<PauliString>> {
    let mut out: Vec<PauliString> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p: PauliString = line.parse().map_err(|message| Error::Parse { line: i + 1, message })?;
        if let Some(first) = out.first() {
            if first.len() != p.len() {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("generator has length {}, expected {}", p.len(), first.len()),
                });
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Span of the given generators in `V^n` over `F_2`.
pub fn from_pauli(generators: &[PauliString]) -> Result<Subspace> {
    let Some(first) = generators.first() else {
        return Err(Error::Invalid("empty generator list: length is unknown".into()));
    };
    let n = first.len();
    if let Some(bad) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::Invalid(format!(
            "inconsistent generator lengths: {} vs {n}",
            bad.len()
        )));
    }
    Subspace::from_vectors(PrimeField::binary(), n, generators.iter().map(PauliString::to_vector))
}

/// Re-emits a canonical Pauli generator list for a binary subspace.
pub fn to_pauli(w: &Subspace) -> Result<Vec<PauliString>> {
    w.vectors().iter().map(PauliString::from_vector).collect()
}

/// Fails with the first (1-based) pair of generators whose form is nonzero.
pub fn check_commuting(generators: &[SympVector]) -> Result<()> {
    for (i, a) in generators.iter().enumerate() {
        for (j, b) in generators.iter().enumerate().skip(i + 1) {
            let value = a.form(b)?;
            if value != 0 {
                return Err(Error::NonCommuting {
                    first: i + 1,
                    second: j + 1,
                    value,
                });
            }
        }
    }
    Ok(())
}

/// Parameters of a code. `d` is absent when `C = rad(C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub d: Option<usize>,
    pub maxwt: usize,
}

/// A symplectic code `C ≤ V^n`.
#[derive(Clone)]
pub struct Code {
    space: Subspace,
    radical: OnceLock<Subspace>,
    perp: OnceLock<Subspace>,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
    }
}

impl Eq for Code {}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({:?})", self.space)
    }
}

impl From<Subspace> for Code {
    fn from(space: Subspace) -> Self {
        Code::new(space)
    }
}

impl Code {
    pub fn new(space: Subspace) -> Self {
        Self {
            space,
            radical: OnceLock::new(),
            perp: OnceLock::new(),
        }
    }

    #[inline]
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.space.n()
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.space.field()
    }

    /// `k = dim(C)`, the number of symplectic pairs.
    pub fn k(&self) -> usize {
        self.space.sym_dim()
    }

    /// `s = irk(C)`.
    pub fn s(&self) -> usize {
        self.space.isorank()
    }

    pub fn radical(&self) -> &Subspace {
        self.radical.get_or_init(|| self.space.radical())
    }

    pub fn perp(&self) -> &Subspace {
        self.perp.get_or_init(|| self.space.perp())
    }

    /// `rad(C) = C^⊥`, equivalently `C^⊥ ≤ C`.
    pub fn is_stabilizer_code(&self) -> bool {
        self.space.is_stabilizer_subspace()
    }

    pub fn dual(&self) -> Code {
        Code::new(self.perp().clone())
    }

    /// Exact minimum weight over `C \ rad(C)`.
    ///
    /// Codewords are enumerated as `k + r` with `k` ranging over the nonzero
    /// elements of the symplectic part of the splitting and `r` over the
    /// radical; `k + r ∈ rad(C)` iff `k = 0`.
    pub fn min_distance(&self, budget: Budget) -> Result<Option<usize>> {
        budget.check(self.space.cardinality())?;
        let split = self.space.orthogonal_split();
        if split.pairs.is_empty() {
            return Ok(None);
        }
        let f = self.field();
        let cols = 2 * self.n();
        let symplectic_rows: Vec<Vec<u32>> = split
            .pairs
            .iter()
            .flat_map(|(u, w)| [u.coords().to_vec(), w.coords().to_vec()])
            .collect();
        let radical_rows: Vec<Vec<u32>> = split.radical.iter().map(|v| v.coords().to_vec()).collect();
        let mut best = usize::MAX;
        for_each_combination(f, cols, &symplectic_rows, |k| {
            if k.iter().all(|&x| x == 0) || best == 1 {
                return;
            }
            for_each_combination(f, cols, &radical_rows, |r| {
                let w = k
                    .chunks_exact(2)
                    .zip(r.chunks_exact(2))
                    .filter(|(a, b)| f.add(a[0], b[0]) != 0 || f.add(a[1], b[1]) != 0)
                    .count();
                best = best.min(w);
            });
        });
        Ok(Some(best))
    }

    pub fn max_weight(&self, budget: Budget) -> Result<usize> {
        budget.check(self.space.cardinality())?;
        let mut best = 0;
        for_each_element(&self.space, |c| best = best.max(weight_raw(c)));
        Ok(best)
    }

    pub fn params(&self, budget: Budget) -> Result<Params> {
        Ok(Params {
            n: self.n(),
            k: self.k(),
            s: self.s(),
            d: self.min_distance(budget)?,
            maxwt: self.max_weight(budget)?,
        })
    }

    pub fn to_json(&self, role: Role) -> CodeJson {
        CodeJson {
            space: self.space.to_json(),
            role,
        }
    }
}

/// Builds the stabilizer code `C = S^⊥` from an isotropic `S`.
pub fn stabilizer_code_from_isotropic(stabilizer: &Subspace) -> Result<Code> {
    check_commuting(&stabilizer.vectors())?;
    Ok(Code::new(stabilizer.perp()))
}

/// Stabilizer `rad(D)`, gauge `D`, normalizer `C = rad(D)^⊥`.
#[derive(Debug, Clone)]
pub struct SubsystemCode {
    pub gauge: Code,
    pub stabilizer: Subspace,
    pub normalizer: Code,
    pub logical_count: usize,
}

pub fn subsystem_from_gauge(gauge: Code) -> SubsystemCode {
    let stabilizer = gauge.radical().clone();
    let normalizer = Code::new(stabilizer.perp());
    let logical_count = normalizer.k() - gauge.k();
    SubsystemCode {
        gauge,
        stabilizer,
        normalizer,
        logical_count,
    }
}

/// How a subspace read from disk is meant to be interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Code,
    Stabilizer,
    Gauge,
}

impl FromStr for Role {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "code" => Ok(Role::Code),
            "stabilizer" => Ok(Role::Stabilizer),
            "gauge" => Ok(Role::Gauge),
            other => Err(format!("unknown role {other:?} (expected code|stabilizer|gauge)")),
        }
    }
}

/// Subspace JSON with an extra `"role"` field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    #[serde(flatten)]
    pub space: SubspaceJson,
    #[serde(default = "default_role")]
    pub role: Role,
}

fn default_role() -> Role {
    Role::Code
}

/// Whether every basis vector of `a` is orthogonal to every vector of `b`.
pub fn orthogonal(a: &Subspace, b: &Subspace) -> bool {
    let f = a.field();
    a.basis()
        .row_iter()
        .all(|u| b.basis().row_iter().all(|v| form_raw(f, u, v) == 0))
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn pauli_parsing() {
        let p: PauliString = "-i XZYI".parse().unwrap();
        assert_eq!(p.0, vec![Pauli::X, Pauli::Z, Pauli::Y, Pauli::I]);
        assert_eq!(p.to_string(), "XZYI");
        assert!("XQ".parse::<PauliString>().is_err());
        let v = p.to_vector();
        assert_eq!(v.coords(), &[1, 0, 0, 1, 1, 1, 0, 0]);
    }

    #[test]
    fn pauli_file_errors_carry_line_numbers() {
        let err = parse_pauli_file("# header\nXX\n\nXZI\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }));
        let err = parse_pauli_file("XX\nXA\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert_eq!(parse_pauli_file("ZZ # stabilizer\n").unwrap().len(), 1);
    }

    #[test]
    fn repetition_from_pauli() {
        let s = from_pauli(&[ "ZZ".parse().unwrap() ]).unwrap();
        let f = PrimeField::binary();
        let ff = Subspace::from_vectors(f, 2, [SympVector::from_pairs(f, &[(0, 1), (0, 1)])]).unwrap();
        assert_eq!(s, ff);
        assert!(from_pauli(&["II".parse().unwrap()]).unwrap().is_zero());
        assert!(from_pauli(&["II".parse().unwrap(), "I".parse().unwrap()]).is_err());
    }

    #[test]
    fn shor_stabilizer_shape() {
        let s = shor_stabilizer();
        assert_eq!(s.n(), 9);
        assert_eq!(s.dim_f(), 8);
        assert!(s.is_isotropic());
        let c = stabilizer_code_from_isotropic(&s).unwrap();
        assert_eq!((c.n(), c.k(), c.s()), (9, 1, 9));
        assert_eq!(c.space().dim_f(), 10);
        assert_eq!(c.radical(), &s);
    }

    #[test]
    fn repetition_params() {
        let c = repetition();
        let p = c.params(Budget::default()).unwrap();
        assert_eq!(p, Params { n: 2, k: 1, s: 2, d: Some(1), maxwt: 2 });
        assert_eq!(c.radical(), c.perp());
        assert!(c.is_stabilizer_code());
    }

    #[test]
    fn bacon_shor_subsystem() {
        let sub = subsystem_from_gauge(bacon_shor_gauge());
        let f = PrimeField::binary();
        let expected = Subspace::from_vectors(
            f,
            4,
            [
                SympVector::from_pairs(f, &[(1, 0); 4]),
                SympVector::from_pairs(f, &[(0, 1); 4]),
            ],
        )
        .unwrap();
        assert_eq!(sub.stabilizer, expected);
        assert_eq!(sub.normalizer.space().dim_f(), 6);
        assert_eq!(sub.logical_count, 1);
        assert_eq!(sub.normalizer, bacon_shor());
        // C^⊥ < D < C with C^⊥ = rad(D)
        assert!(sub.normalizer.perp().is_subspace_of(sub.gauge.space()));
        assert!(sub.gauge.space().is_subspace_of(sub.normalizer.space()));
        assert_eq!(sub.normalizer.perp(), &sub.stabilizer);
        assert!(sub.stabilizer.is_isotropic());
        let p = sub.normalizer.params(Budget::default()).unwrap();
        assert_eq!(p, Params { n: 4, k: 2, s: 4, d: Some(2), maxwt: 4 });
    }

    #[test]
    fn isotropic_gauge_is_degenerate_subsystem() {
        let d = Code::new(shor_stabilizer());
        let sub = subsystem_from_gauge(d.clone());
        assert_eq!(&sub.stabilizer, d.space());
        assert_eq!(d.k(), 0);
        assert_eq!(sub.logical_count, sub.normalizer.k());
    }

    #[test]
    fn shor_distance() {
        assert_eq!(shor().min_distance(Budget::default()).unwrap(), Some(3));
    }

    #[test]
    fn stabilizer_construction_edge_cases() {
        let f = PrimeField::new(3).unwrap();
        let c = stabilizer_code_from_isotropic(&Subspace::zero(f, 3)).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(c.space(), &Subspace::full(f, 3));

        let bad = Subspace::from_vectors(f, 1, [SympVector::e(f, 1, 0), SympVector::f(f, 1, 0)]).unwrap();
        assert!(matches!(
            stabilizer_code_from_isotropic(&bad),
            Err(Error::NonCommuting { first: 1, second: 2, .. })
        ));
    }

    #[test]
    fn isotropic_only_code_has_no_distance() {
        let c = Code::new(shor_stabilizer());
        assert_eq!(c.min_distance(Budget::default()).unwrap(), None);
        let z = Code::new(Subspace::zero(PrimeField::binary(), 3));
        let p = z.params(Budget::default()).unwrap();
        assert_eq!(p, Params { n: 3, k: 0, s: 0, d: None, maxwt: 0 });
    }

    #[test]
    fn budget_guard() {
        let err = shor().min_distance(Budget(1000)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { needed: 1024, budget: 1000 });
    }

    #[test]
    fn pauli_round_trip() {
        let s = shor_stabilizer();
        let again = from_pauli(&to_pauli(&s).unwrap()).unwrap();
        assert_eq!(again, s);
    }

    #[test]
    fn code_json_role() {
        let j = repetition().to_json(Role::Code);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"role\":\"code\""));
        let back: CodeJson = serde_json::from_str(r#"{"q":2,"n":1,"basis":[[0,1]]}"#).unwrap();
        assert_eq!(back.role, Role::Code);
    }
}
