//! Anticode invariants of a code: `α_C`, `β_C`, generalized weights and
//! profiles, and the full battery of bounds relating them.
//!
//! All extrema range over the free anticodes `A_J`, which are all anticodes.

use serde::Serialize;
use serde_json::json;

use crate::anticodes::{self, Anticode, Support};
use crate::budget::Budget;
use crate::codes::Code;
use crate::error::Result;
use crate::report::{Check, Report};

/// `α_C(A) = dim(C ∩ A)`.
pub fn alpha(code: &Code, a: &Anticode) -> Result<usize> {
    Ok(anticodes::intersect(code.space(), a)?.sym_dim())
}

/// `β_C(A) = irk(C ∩ A) − irk(rad(C) ∩ A)`.
pub fn beta(code: &Code, a: &Anticode) -> Result<usize> {
    let in_code = anticodes::intersect(code.space(), a)?.isorank();
    let in_rad = anticodes::intersect(code.radical(), a)?.isorank();
    Ok(in_code - in_rad)
}

fn check_scan(code: &Code, budget: Budget) -> Result<()> {
    budget.check(1u128 << code.n())
}

/// `α` and `β` for every anticode, indexed by support bitmask.
#[derive(Debug, Clone)]
pub struct SupportTable {
    pub n: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl SupportTable {
    pub fn compute(code: &Code, budget: Budget) -> Result<SupportTable> {
        check_scan(code, budget)?;
        let n = code.n();
        let mut alpha_t = vec![0; 1 << n];
        let mut beta_t = vec![0; 1 << n];
        for a in Anticode::all(n) {
            let i = a.support().0 as usize;
            alpha_t[i] = alpha(code, &a)?;
            beta_t[i] = beta(code, &a)?;
        }
        Ok(SupportTable {
            n,
            alpha: alpha_t,
            beta: beta_t,
        })
    }

    #[inline]
    pub fn at(&self, s: Support) -> (usize, usize) {
        (self.alpha[s.0 as usize], self.beta[s.0 as usize])
    }
}

/// Profiles `θ_b, ϕ_b` (`b = 0..n`) and generalized weights `ϑ_a, φ_a, δ_a`
/// (`a = 1..k`, stored at index `a − 1`; `None` when no anticode qualifies).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantTable {
    pub n: usize,
    pub k: usize,
    pub theta: Vec<usize>,
    pub phi: Vec<usize>,
    pub vartheta: Vec<Option<usize>>,
    pub varphi: Vec<Option<usize>>,
    pub delta: Vec<Option<usize>>,
}

pub fn profiles(code: &Code, budget: Budget) -> Result<(Vec<usize>, Vec<usize>)> {
    check_scan(code, budget)?;
    let n = code.n();
    let mut theta = vec![0; n + 1];
    let mut phi = vec![0; n + 1];
    for a in Anticode::all(n) {
        let b = a.dim();
        theta[b] = theta[b].max(alpha(code, &a)?);
        phi[b] = phi[b].max(beta(code, &a)?);
    }
    Ok((theta, phi))
}

/// Generalized weights, scanning supports by increasing size and stopping
/// once every `a ≤ k` has been attained for all three quantities.
#[allow(clippy::type_complexity)]
pub fn generalized_weights(
    code: &Code,
    budget: Budget,
) -> Result<(Vec<Option<usize>>, Vec<Option<usize>>, Vec<Option<usize>>)> {
    check_scan(code, budget)?;
    let k = code.k();
    let mut vartheta = vec![None; k];
    let mut varphi = vec![None; k];
    let mut delta = vec![None; k];
    let done = |v: &[Option<usize>]| v.iter().all(Option::is_some);
    for a in Anticode::all(code.n()) {
        if done(&vartheta) && done(&varphi) && done(&delta) {
            break;
        }
        let (al, be) = (alpha(code, &a)?, beta(code, &a)?);
        for i in 1..=k {
            if al >= i {
                vartheta[i - 1].get_or_insert(a.dim());
            }
            if be >= i {
                varphi[i - 1].get_or_insert(a.dim());
            }
            if al + be >= 2 * i {
                delta[i - 1].get_or_insert(a.dim());
            }
        }
    }
    Ok((vartheta, varphi, delta))
}

pub fn invariant_table(code: &Code, budget: Budget) -> Result<InvariantTable> {
    let (theta, phi) = profiles(code, budget)?;
    let (vartheta, varphi, delta) = generalized_weights(code, budget)?;
    Ok(InvariantTable {
        n: code.n(),
        k: code.k(),
        theta,
        phi,
        vartheta,
        varphi,
        delta,
    })
}

impl InvariantTable {
    /// Same table derived from a precomputed support scan.
    pub fn from_support_table(k: usize, t: &SupportTable) -> InvariantTable {
        let n = t.n;
        let mut theta = vec![0; n + 1];
        let mut phi = vec![0; n + 1];
        let mut vartheta = vec![None; k];
        let mut varphi = vec![None; k];
        let mut delta = vec![None; k];
        for s in Support::all_by_cardinality(n) {
            let (al, be) = t.at(s);
            let b = s.len();
            theta[b] = theta[b].max(al);
            phi[b] = phi[b].max(be);
            for i in 1..=k {
                if al >= i {
                    vartheta[i - 1].get_or_insert(b);
                }
                if be >= i {
                    varphi[i - 1].get_or_insert(b);
                }
                if al + be >= 2 * i {
                    delta[i - 1].get_or_insert(b);
                }
            }
        }
        InvariantTable {
            n,
            k,
            theta,
            phi,
            vartheta,
            varphi,
            delta,
        }
    }

    /// Aligned plain-text rendering.
    pub fn to_ascii(&self) -> String {
        let show = |v: &Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        let mut s = String::new();
        s.push_str(&format!("{:>4} {:>6} {:>6}\n", "b", "theta", "phi"));
        for b in 0..=self.n {
            s.push_str(&format!("{:>4} {:>6} {:>6}\n", b, self.theta[b], self.phi[b]));
        }
        s.push('\n');
        s.push_str(&format!("{:>4} {:>9} {:>7} {:>6}\n", "a", "vartheta", "varphi", "delta"));
        for a in 1..=self.k {
            s.push_str(&format!(
                "{:>4} {:>9} {:>7} {:>6}\n",
                a,
                show(&self.vartheta[a - 1]),
                show(&self.varphi[a - 1]),
                show(&self.delta[a - 1])
            ));
        }
        s
    }
}

fn opt(v: Option<usize>) -> serde_json::Value {
    v.map_or(serde_json::Value::Null, |x| json!(x))
}

fn support_label(s: Support) -> String {
    format!("{s:?}")
}

/// Evaluates every inequality and identity relating `α`, `β`, the profiles,
/// the generalized weights, `n`, `k` and `d`. General statements are always
/// checked. Those that need `rad(C) = C^⊥` are checked only for stabilizer
/// codes and listed as skipped otherwise; random non-stabilizer codes
/// violate each of them.
pub fn verify_bounds(code: &Code, budget: Budget) -> Result<Report> {
    let n = code.n();
    let k = code.k();
    let table = SupportTable::compute(code, budget)?;
    let inv = InvariantTable::from_support_table(k, &table);
    let d = code.min_distance(budget)?;
    let maxwt = code.max_weight(budget)?;
    let stabilizer = code.is_stabilizer_code();
    let mut r = Report::default();

    r.push(Check::le("k <= maxwt", k, maxwt));
    r.push(Check::eq("dim_F(C) = k + s", code.space().dim_f(), k + code.s()));

    let perp = code.perp();
    for a in Anticode::all(n) {
        let s = a.support();
        let (al, be) = table.at(s);
        let label = support_label(s);
        r.push(Check::le(format!("alpha <= beta on {label}"), al, be));

        let ac = a.complement();
        let lhs = anticodes::intersection_dim_f(code.space(), &a) as i64;
        let rhs = code.space().dim_f() as i64 - 2 * ac.dim() as i64
            + anticodes::intersection_dim_f(perp, &ac) as i64;
        r.push(Check::eq(format!("rank duality dim_F(A cap C) on {label}"), lhs, rhs));

        if stabilizer {
            let (al_c, be_c) = table.at(ac.support());
            r.push(Check::eq(
                format!("beta(A) + alpha(A^c) = k on {label}"),
                be + al_c,
                k,
            ));
            r.push(Check::eq(
                format!("beta - alpha symmetric on {label}"),
                be as i64 - al as i64,
                be_c as i64 - al_c as i64,
            ));
            let c_ac = anticodes::intersect(code.space(), &ac)?;
            let rad_a = anticodes::intersect(code.radical(), &a)?;
            let lhs = ac.dim() as i64 - c_ac.sym_dim() as i64 - c_ac.isorank() as i64;
            let rhs = a.dim() as i64 - rad_a.isorank() as i64 - k as i64;
            r.push(Check::eq(format!("stabilizer rank duality on {label}"), lhs, rhs));
        }
        if let Some(d) = d {
            if a.dim() < d {
                r.push(Check::eq(
                    format!("alpha = beta = 0 below distance on {label}"),
                    json!([al, be]),
                    json!([0, 0]),
                ));
            }
        }
    }
    if !stabilizer {
        for id in [
            "beta(A) + alpha(A^c) = k",
            "beta - alpha symmetric",
            "stabilizer rank duality",
        ] {
            r.skip(id);
        }
    }

    for b in 0..=n {
        r.push(Check::le(format!("theta_b <= phi_b (b={b})"), inv.theta[b], inv.phi[b]));
    }
    for a in 1..=k {
        for b in 0..=n {
            let lhs = a <= inv.theta[b];
            let rhs = inv.vartheta[a - 1].is_some_and(|w| w <= b);
            r.push(Check::eq(format!("a <= theta_b iff vartheta_a <= b (a={a}, b={b})"), lhs, rhs));
            let lhs = a <= inv.phi[b];
            let rhs = inv.varphi[a - 1].is_some_and(|w| w <= b);
            r.push(Check::eq(format!("a <= phi_b iff varphi_a <= b (a={a}, b={b})"), lhs, rhs));
        }
        r.push(Check::new(
            format!("varphi_a >= a (a={a})"),
            opt(inv.varphi[a - 1]),
            a,
            inv.varphi[a - 1].is_some_and(|w| w >= a),
        ));
    }

    let (th, ph) = (&inv.theta, &inv.phi);
    for b in 1..n {
        r.push(Check::le(format!("theta_{{b+1}} <= theta_b + 2 (b={b})"), th[b + 1], th[b] + 2));
        r.push(Check::le(format!("phi_{{b+1}} <= phi_b + 2 (b={b})"), ph[b + 1], ph[b] + 2));
        if th[b + 1] == th[b] + 2 {
            r.push(Check::eq(format!("theta jump keeps phi flat (b={b})"), ph[b + 1], ph[b]));
        }
        if ph[b + 1] == ph[b] + 2 {
            r.push(Check::eq(format!("phi jump keeps theta flat (b={b})"), th[b + 1], th[b]));
        }
        r.push(Check::le(
            format!("theta+phi step is at most 2 (b={b})"),
            th[b + 1] + ph[b + 1],
            th[b] + ph[b] + 2,
        ));
    }

    let step = |name: &str, v: &[Option<usize>], gap: usize, r: &mut Report| {
        for a in 1..=k.saturating_sub(gap) {
            let (lo, hi) = (v[a - 1], v[a - 1 + gap]);
            r.push(Check::new(
                format!("{name}_a + 1 <= {name}_{{a+{gap}}} (a={a})"),
                opt(lo.map(|x| x + 1)),
                opt(hi),
                matches!((lo, hi), (Some(x), Some(y)) if x + 1 <= y),
            ));
        }
    };
    step("vartheta", &inv.vartheta, 2, &mut r);
    step("varphi", &inv.varphi, 2, &mut r);
    step("delta", &inv.delta, 1, &mut r);

    // β(A) ≥ 1 exactly when some codeword outside rad(C) lives on A
    if let Some(d) = d {
        r.push(Check::eq("varphi_1 = d", opt(inv.varphi.first().copied().flatten()), json!(d)));
    }
    match (stabilizer, d) {
        (true, Some(d)) => {
            r.push(Check::le("2(d-1) <= n-k", 2 * (d as i64 - 1), n as i64 - k as i64));
            for a in 1..=k {
                let bound = n as i64 - d as i64 - k as i64 + a as i64 + 1;
                r.push(Check::new(
                    format!("delta_a <= n-d-k+a+1 (a={a})"),
                    opt(inv.delta[a - 1]),
                    bound,
                    inv.delta[a - 1].is_some_and(|x| x as i64 <= bound),
                ));
                let bound = n as i64 - d as i64 - ((k - a) / 2) as i64 + 1;
                r.push(Check::new(
                    format!("varphi_a <= n-d-floor((k-a)/2)+1 (a={a})"),
                    opt(inv.varphi[a - 1]),
                    bound,
                    inv.varphi[a - 1].is_some_and(|x| x as i64 <= bound),
                ));
            }
        }
        _ => {
            for id in [
                "2(d-1) <= n-k",
                "delta_a <= n-d-k+a+1",
                "varphi_a <= n-d-floor((k-a)/2)+1",
            ] {
                r.skip(id);
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::fixtures::*;
    use crate::field::PrimeField;
    use crate::symplectic::Subspace;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn bacon_shor_profiles() {
        let c = bacon_shor();
        let (theta, phi) = profiles(&c, b()).unwrap();
        assert_eq!(theta, vec![0, 0, 0, 2, 2]);
        assert_eq!(phi, vec![0, 0, 2, 2, 2]);
        assert_eq!(alpha(&c, &Anticode::parse(4, "1,2,3").unwrap()).unwrap(), 2);
        assert_eq!(beta(&c, &Anticode::full(4)).unwrap(), 2);
    }

    #[test]
    fn repetition_invariants() {
        let c = repetition();
        let a1 = Anticode::parse(2, "1").unwrap();
        assert_eq!(alpha(&c, &a1).unwrap(), 0);
        assert_eq!(beta(&c, &a1).unwrap(), 1);
        let (theta, phi) = profiles(&c, b()).unwrap();
        // free anticodes only: θ_1 = 0
        assert_eq!(theta, vec![0, 0, 1]);
        assert_eq!(phi, vec![0, 1, 1]);
        let (vt, vp, de) = generalized_weights(&c, b()).unwrap();
        assert_eq!(vp, vec![Some(1)]);
        assert_eq!(vt, vec![Some(2)]);
        assert_eq!(de, vec![Some(2)]);
    }

    #[test]
    fn empty_anticode_is_zero() {
        for c in [repetition(), bacon_shor(), shor()] {
            let e = Anticode::empty(c.n());
            assert_eq!(alpha(&c, &e).unwrap(), 0);
            assert_eq!(beta(&c, &e).unwrap(), 0);
        }
    }

    #[test]
    fn zero_code_profiles() {
        let z = Code::new(Subspace::zero(PrimeField::new(3).unwrap(), 3));
        let t = invariant_table(&z, b()).unwrap();
        assert_eq!(t.theta, vec![0; 4]);
        assert_eq!(t.phi, vec![0; 4]);
        assert!(t.vartheta.is_empty());
    }

    #[test]
    fn shor_weights() {
        let t = invariant_table(&shor(), b()).unwrap();
        assert_eq!(t.varphi, vec![Some(3)]);
    }

    #[test]
    fn table_routes_agree() {
        for c in [repetition(), bacon_shor(), shor()] {
            let direct = invariant_table(&c, b()).unwrap();
            let via = InvariantTable::from_support_table(c.k(), &SupportTable::compute(&c, b()).unwrap());
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn fixture_bounds_pass() {
        for c in [repetition(), bacon_shor(), shor()] {
            let r = verify_bounds(&c, b()).unwrap();
            let bad: Vec<_> = r.failures().collect();
            assert!(bad.is_empty(), "{bad:?}");
        }
    }

    #[test]
    fn bacon_shor_step_pattern() {
        let r = verify_bounds(&bacon_shor(), b()).unwrap();
        let jump_phi = r.find("phi jump keeps theta flat (b=1)").next().unwrap();
        assert!(jump_phi.pass);
        let jump_theta = r.find("theta jump keeps phi flat (b=2)").next().unwrap();
        assert!(jump_theta.pass);
    }

    #[test]
    fn repetition_singleton() {
        let r = verify_bounds(&repetition(), b()).unwrap();
        let s = r.find("2(d-1) <= n-k").next().unwrap();
        assert_eq!((s.lhs.clone(), s.rhs.clone(), s.pass), (json!(0), json!(1), true));
    }

    #[test]
    fn non_stabilizer_skips_stabilizer_checks() {
        let r = verify_bounds(&bacon_shor_gauge(), b()).unwrap();
        assert!(r.skipped.iter().any(|s| s == "2(d-1) <= n-k"));
        assert!(r.find("varphi_1 = d").next().unwrap().pass);
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn scan_budget() {
        assert!(profiles(&shor(), Budget(100)).is_err());
    }
}
