//! Weight distributions, binomial moments, the transforms between them,
//! MacWilliams duality and the two weight enumerator polynomials.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::anticodes::{self, Anticode, Support};
use crate::budget::Budget;
use crate::codes::{self, Code};
use crate::error::Result;
use crate::report::{Check, Report};
use crate::symplectic::{weight_raw, Subspace};

/// `W_a` for `a = 0..n`: the number of codewords of weight exactly `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionTable {
    pub w: Vec<i128>,
}

/// `B_b` for `b = 0..n`: the sum of `|C ∩ A|` over anticodes of dimension `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentTable {
    pub b: Vec<i128>,
}

impl DistributionTable {
    pub fn n(&self) -> usize {
        self.w.len() - 1
    }

    pub fn total(&self) -> i128 {
        self.w.iter().sum()
    }
}

impl MomentTable {
    pub fn n(&self) -> usize {
        self.b.len() - 1
    }
}

/// Homogeneous polynomial `Σ c_a x^a y^(n−a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratorPoly {
    pub n: usize,
    pub coeffs: Vec<i128>,
}

pub fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

impl EnumeratorPoly {
    pub fn from_distribution(w: &DistributionTable) -> Self {
        Self {
            n: w.n(),
            coeffs: w.w.clone(),
        }
    }

    /// `Σ_b B_b x^b (y − x)^(n−b)`.
    pub fn from_moments(m: &MomentTable) -> Self {
        let n = m.n();
        let mut coeffs = vec![0i128; n + 1];
        for (b, &bb) in m.b.iter().enumerate() {
            for j in 0..=n - b {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                coeffs[b + j] += sign * bb * binomial(n - b, j);
            }
        }
        Self { n, coeffs }
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(a, &c)| c * x.pow(a as u32) * y.pow((self.n - a) as u32))
            .sum()
    }
}

fn monomial(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for EnumeratorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = format!("{}{}", monomial("x", a), monomial("y", self.n - a));
            let mag = c.unsigned_abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag == 1 {
                mono
            } else {
                format!("{mag}{mono}")
            };
            match (first, c < 0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Weight distribution of any subspace by enumerating its elements.
pub fn distribution_of(w: &Subspace, budget: Budget) -> Result<DistributionTable> {
    budget.check(w.cardinality())?;
    let mut t = vec![0i128; w.n() + 1];
    codes::for_each_element(w, |v| t[weight_raw(v)] += 1);
    Ok(DistributionTable { w: t })
}

pub fn weight_distribution(code: &Code, budget: Budget) -> Result<DistributionTable> {
    distribution_of(code.space(), budget)
}

/// Binomial moments of any subspace, from intersection ranks alone.
pub fn moments_of(w: &Subspace, budget: Budget) -> Result<MomentTable> {
    let n = w.n();
    budget.check(1u128 << n)?;
    let q = w.field();
    let mut t = vec![0i128; n + 1];
    for a in Anticode::all(n) {
        t[a.dim()] += q.power_count(anticodes::intersection_dim_f(w, &a)) as i128;
    }
    Ok(MomentTable { b: t })
}

pub fn binomial_moments(code: &Code, budget: Budget) -> Result<MomentTable> {
    moments_of(code.space(), budget)
}

/// `B_b = Σ_a C(n−a, b−a) W_a`.
pub fn moments_from_distribution(w: &DistributionTable) -> MomentTable {
    let n = w.n();
    let b = (0..=n)
        .map(|b| (0..=b).map(|a| binomial(n - a, b - a) * w.w[a]).sum())
        .collect();
    MomentTable { b }
}

/// `W_a = Σ_b (−1)^(a−b) C(n−b, a−b) B_b`.
pub fn distribution_from_moments(m: &MomentTable) -> DistributionTable {
    let n = m.n();
    let w = (0..=n)
        .map(|a| {
            (0..=a)
                .map(|b| {
                    let sign = if (a - b) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(n - b, a - b) * m.b[b]
                })
                .sum()
        })
        .collect();
    DistributionTable { w }
}

/// `(A, B)`: the enumerators of `rad(C)` and of `C`.
pub fn enumerator_polys(code: &Code, budget: Budget) -> Result<(EnumeratorPoly, EnumeratorPoly)> {
    let a = EnumeratorPoly::from_distribution(&distribution_of(code.radical(), budget)?);
    let b = EnumeratorPoly::from_distribution(&weight_distribution(code, budget)?);
    Ok((a, b))
}

/// Trailing `x`-degree of `B(x,1) − A(x,1)`.
pub fn distance_from_enumerators(a: &EnumeratorPoly, b: &EnumeratorPoly) -> Option<usize> {
    a.coeffs.iter().zip(&b.coeffs).position(|(x, y)| x != y)
}

/// Per-anticode and aggregated MacWilliams duality between `C` and `C^⊥`.
///
/// The per-anticode form is checked on exponents:
/// `dim_F(C^⊥ ∩ A) = 2·dim(A) − dim_F(C) + dim_F(C ∩ A^c)`.
pub fn macwilliams_check(code: &Code, budget: Budget) -> Result<Report> {
    let n = code.n();
    budget.check(1u128 << n)?;
    let q = code.field();
    let dim_c = code.space().dim_f() as i64;
    let mut r = Report::default();
    for a in Anticode::all(n) {
        let lhs = anticodes::intersection_dim_f(code.perp(), &a) as i64;
        let rhs = 2 * a.dim() as i64 - dim_c + anticodes::intersection_dim_f(code.space(), &a.complement()) as i64;
        r.push(Check::eq(
            format!("log_q B_A(C^perp) = 2dim(A) - dim_F(C) + log_q B_Ac(C) on {:?}", a.support()),
            lhs,
            rhs,
        ));
    }
    let bc = moments_of(code.space(), budget)?;
    let bp = moments_of(code.perp(), budget)?;
    let pow = |e: usize| q.power_count(e) as i128;
    let rad_zero = code.radical().is_zero();
    for b in 0..=n {
        let lhs = pow(dim_c as usize).checked_mul(bp.b[b]);
        let rhs = pow(2 * b).checked_mul(bc.b[n - b]);
        match (lhs, rhs) {
            (Some(l), Some(rr)) => r.push(Check::eq(
                format!("q^dim_F(C) B_{b}(C^perp) = q^(2b) B_{}(C)", n - b),
                json!(l),
                json!(rr),
            )),
            _ => r.skip(format!("q^dim_F(C) B_{b}(C^perp) = q^(2b) B_{}(C) (overflow)", n - b)),
        }
        if rad_zero {
            let k = code.k();
            // only meaningful when dim_F(C) = 2k
            let lhs = pow(2 * k).checked_mul(bp.b[b]);
            let rhs = pow(2 * b).checked_mul(bc.b[n - b]);
            if let (Some(l), Some(rr)) = (lhs, rhs) {
                r.push(Check::eq(format!("B_{b}(C^perp) = q^(2(b-k)) B_{}(C)", n - b), json!(l), json!(rr)));
            }
        }
    }
    if !rad_zero {
        r.skip("B_b(C^perp) = q^(2(b-k)) B_(n-b)(C)");
    }
    Ok(r)
}

/// Exact-support counts `W_J` for every support, by enumeration.
pub fn support_distribution(w: &Subspace, budget: Budget) -> Result<Vec<i128>> {
    budget.check(w.cardinality())?;
    let n = w.n();
    let mut t = vec![0i128; 1 << n];
    codes::for_each_element(w, |v| {
        let mut s = 0u64;
        for i in 0..n {
            if v[2 * i] != 0 || v[2 * i + 1] != 0 {
                s |= 1 << i;
            }
        }
        t[s as usize] += 1;
    });
    Ok(t)
}

/// The per-anticode Möbius pair `B_A = Σ_{A'≤A} W_A'` and its inverse.
pub fn mobius_check(code: &Code, budget: Budget) -> Result<Report> {
    let n = code.n();
    budget.check((1u128 << n) * (1u128 << n))?;
    let wj = support_distribution(code.space(), budget)?;
    let q = code.field();
    let mut r = Report::default();
    let all = Support::all_by_cardinality(n);
    for &a in &all {
        let ba = q.power_count(anticodes::intersection_dim_f(code.space(), &Anticode::from_support(n, a)?)) as i128;
        let mut sum = 0i128;
        let mut alt = 0i128;
        for &s in all.iter().filter(|s| s.is_subset_of(a)) {
            sum += wj[s.0 as usize];
            let bs = q.power_count(anticodes::intersection_dim_f(code.space(), &Anticode::from_support(n, s)?)) as i128;
            let sign = if (a.len() - s.len()) % 2 == 0 { 1 } else { -1 };
            alt += sign * bs;
        }
        r.push(Check::eq(format!("B_A = sum W_A' over A' <= A on {a:?}"), json!(ba), json!(sum)));
        r.push(Check::eq(
            format!("W_A = alternating sum of B_A' on {a:?}"),
            json!(wj[a.0 as usize]),
            json!(alt),
        ));
    }
    Ok(r)
}
