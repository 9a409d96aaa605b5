//! Seeded verification suites over the fixtures and random codes.
//!
//! Every suite returns a [`Report`]; [`run`] aggregates suites into a
//! [`VerifyReport`] whose JSON form depends only on the seed and budget.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::anticodes::{self, Anticode};
use crate::budget::Budget;
use crate::codes::{self, fixtures, stabilizer_code_from_isotropic, subsystem_from_gauge, Code};
use crate::enumerators::{self, DistributionTable, EnumeratorPoly};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::invariants::{self, InvariantTable, SupportTable};
use crate::linalg::Matrix;
use crate::oracle;
use crate::report::{Check, Report};
use crate::symplectic::{Subspace, SympVector};

pub const IDENTITY_CODES: usize = 200;
pub const STABILIZER_CODES: usize = 100;
pub const TRANSFORM_TABLES: usize = 100;
pub const TRANSFORM_CODES: usize = 100;
pub const ORACLE_CODES: usize = 200;
pub const BOUND_CODES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Fixtures,
    Identities,
    Stabilizer,
    Transforms,
    Oracle,
    Bounds,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Fixtures,
        Suite::Identities,
        Suite::Stabilizer,
        Suite::Transforms,
        Suite::Oracle,
        Suite::Bounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fixtures => "fixtures",
            Suite::Identities => "identities",
            Suite::Stabilizer => "stabilizer",
            Suite::Transforms => "transforms",
            Suite::Oracle => "oracle",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

/// Uniformly random code: `r` random vectors with `r ∈ 0..=2n`.
pub fn random_code(rng: &mut impl Rng, q: u32, n: usize) -> Code {
    let f = PrimeField::new(q).expect("caller passes a prime");
    let r = rng.gen_range(0..=2 * n);
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|_| (0..2 * n).map(|_| rng.gen_range(0..q) as i64).collect())
        .collect();
    let m = Matrix::from_rows(f, 2 * n, &rows).expect("row length is 2n");
    Code::new(Subspace::from_matrix(&m).expect("2n columns"))
}

/// Random stabilizer code `S^⊥`, growing an isotropic `S` one random vector
/// of `S^⊥ \ S` at a time.
pub fn random_stabilizer_code(rng: &mut impl Rng, q: u32, n: usize) -> Code {
    let f = PrimeField::new(q).expect("caller passes a prime");
    let target = rng.gen_range(0..=n);
    let mut s = Subspace::zero(f, n);
    while s.dim_f() < target {
        let perp = s.perp();
        let coeffs: Vec<u32> = (0..perp.dim_f()).map(|_| rng.gen_range(0..q)).collect();
        let v = perp.basis().combine(&coeffs);
        if !s.contains_raw(&v) {
            let v = SympVector::from_coords(f, v).expect("2n coordinates");
            s = s
                .sum(&Subspace::from_vectors(f, n, [v]).expect("same ambient"))
                .expect("same ambient");
        }
    }
    stabilizer_code_from_isotropic(&s).expect("S is isotropic by construction")
}

/// Every subspace of `V^n` over `F_2`, by breadth-first closure from zero.
pub fn all_subspaces(n: usize) -> Vec<Subspace> {
    let f = PrimeField::binary();
    let dim = 2 * n;
    let vectors: Vec<SympVector> = (1u32..1 << dim)
        .map(|m| SympVector::from_coords(f, (0..dim).map(|i| (m >> i) & 1).collect()).expect("length 2n"))
        .collect();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([Subspace::zero(f, n)]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        if !seen.insert(w.clone()) {
            continue;
        }
        for v in vectors.iter().filter(|v| !w.contains(v)) {
            let bigger = w
                .sum(&Subspace::from_vectors(f, n, [v.clone()]).expect("same ambient"))
                .expect("same ambient");
            if !seen.contains(&bigger) {
                queue.push_back(bigger);
            }
        }
        out.push(w);
    }
    out
}

fn tag(label: &str, mut r: Report) -> Report {
    for c in &mut r.checks {
        c.identity = format!("[{label}] {}", c.identity);
    }
    r
}

fn shor_generators() -> Vec<SympVector> {
    codes::parse_pauli_file(fixtures::SHOR_STABILIZER)
        .expect("fixture parses")
        .iter()
        .map(|p| p.to_vector())
        .collect()
}

fn fixture_list() -> Vec<(&'static str, Code)> {
    vec![
        ("repetition", fixtures::repetition()),
        ("bacon-shor", fixtures::bacon_shor()),
        ("bacon-shor-gauge", fixtures::bacon_shor_gauge()),
        ("shor", fixtures::shor()),
    ]
}

/// Per-code checks shared by the fixture and identity suites.
fn code_identities(code: &Code, rng: &mut ChaCha8Rng, budget: Budget) -> Result<Report> {
    let n = code.n();
    let mut r = Report::default();
    let c = code.space();
    let perp = code.perp();

    r.push(Check::eq("sym_dim(C^perp) = n - irk(C)", perp.sym_dim(), n - c.isorank()));
    r.push(Check::eq("irk(C^perp) = n - sym_dim(C)", perp.isorank(), n - c.sym_dim()));

    // a random partner, and a random subspace of C^perp to form an orthogonal pair
    let other = random_code(rng, code.field().order(), n);
    let w2 = {
        let coeffs: Vec<Vec<u32>> = (0..rng.gen_range(0..=perp.dim_f()))
            .map(|_| (0..perp.dim_f()).map(|_| rng.gen_range(0..code.field().order())).collect())
            .collect();
        let rows: Vec<SympVector> = coeffs
            .iter()
            .map(|k| SympVector::from_coords(code.field(), perp.basis().combine(k)).expect("length 2n"))
            .collect();
        Subspace::from_vectors(code.field(), n, rows)?
    };
    for (w2, orth) in [(other.space(), false), (&w2, true)] {
        let sum = c.sum(w2)?;
        let meet = c.intersect(w2)?;
        let dim_l = sum.sym_dim() + meet.sym_dim();
        let dim_r = c.sym_dim() + w2.sym_dim();
        let irk_l = sum.isorank() + meet.isorank();
        let irk_r = c.isorank() + w2.isorank();
        r.push(Check::le("dim(W1) + dim(W2) <= dim(W1+W2) + dim(W1 cap W2)", dim_r, dim_l));
        r.push(Check::le("irk(W1+W2) + irk(W1 cap W2) <= irk(W1) + irk(W2)", irk_l, irk_r));
        if orth {
            r.push(Check::eq("dim modular for orthogonal pair", dim_l, dim_r));
            r.push(Check::eq("irk modular for orthogonal pair", irk_l, irk_r));
        }
    }

    let table = SupportTable::compute(code, budget)?;
    let d = if code.is_stabilizer_code() {
        code.min_distance(budget)?
    } else {
        None
    };
    let mut shuffled = code.radical().vectors();
    shuffled.shuffle(rng);
    for a in Anticode::all(n) {
        let (al, be) = table.at(a.support());
        r.push(Check::le("alpha <= beta", al, be));
        let lhs = anticodes::intersection_dim_f(c, &a) as i64;
        let rhs = c.dim_f() as i64 - 2 * (n - a.dim()) as i64
            + anticodes::intersection_dim_f(perp, &a.complement()) as i64;
        r.push(Check::eq("rank duality dim_F(A cap C)", lhs, rhs));
        r.extend(anticodes::verify_cleaning(code, &a, d)?);
        r.extend(anticodes::complementarity_check(code, &a)?);
        let dec = anticodes::s_prime_decompose_with(code, &a, &shuffled)?;
        r.extend(tag("shuffled S'", anticodes::complementarity_check_with(code, &a, &dec)?));
    }
    Ok(r)
}

fn fixtures_suite(budget: Budget) -> Result<Report> {
    let mut r = Report::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0);

    let expected = [
        ("repetition", (2, 1, 2, Some(1), 2)),
        ("bacon-shor", (4, 2, 4, Some(2), 4)),
        ("bacon-shor-gauge", (4, 1, 3, Some(2), 4)),
        ("shor", (9, 1, 9, Some(3), 9)),
    ];
    for ((name, code), (_, want)) in fixture_list().into_iter().zip(expected) {
        let p = code.params(budget)?;
        r.push(Check::eq(
            format!("[{name}] params (n, k, s, d, maxwt)"),
            json!([p.n, p.k, p.s, p.d, p.maxwt]),
            json!([want.0, want.1, want.2, want.3, want.4]),
        ));
        r.extend(tag(name, code_identities(&code, &mut rng, budget)?));
        r.extend(tag(name, invariants::verify_bounds(&code, budget)?));
        r.extend(tag(name, enumerators::macwilliams_check(&code, budget)?));
    }

    let rep = fixtures::repetition();
    let (ap, bp) = enumerators::enumerator_polys(&rep, budget)?;
    r.push(Check::eq("[repetition] B-poly", bp.to_string(), "y^2 + 2xy + 5x^2".to_string()));
    r.push(Check::eq("[repetition] A-poly (enumerated)", ap.to_string(), "y^2 + x^2".to_string()));
    r.push(Check::eq(
        "[repetition] B(C)",
        json!(enumerators::binomial_moments(&rep, budget)?.b),
        json!([1, 4, 8]),
    ));
    r.push(Check::eq(
        "[repetition] B(C^perp)",
        json!(enumerators::binomial_moments(&rep.dual(), budget)?.b),
        json!([1, 2, 2]),
    ));
    r.push(Check::eq(
        "[repetition] distance from enumerators",
        json!(enumerators::distance_from_enumerators(&ap, &bp)),
        json!(1),
    ));

    let gauge = fixtures::bacon_shor_gauge();
    let sub = subsystem_from_gauge(gauge);
    r.push(Check::eq("[bacon-shor] logical_count", sub.logical_count, 1));
    let t = invariants::invariant_table(&fixtures::bacon_shor(), budget)?;
    r.push(Check::eq("[bacon-shor] theta", json!(t.theta), json!([0, 0, 0, 2, 2])));
    r.push(Check::eq("[bacon-shor] phi", json!(t.phi), json!([0, 0, 2, 2, 2])));

    let shor = fixtures::shor();
    let t = invariants::invariant_table(&shor, budget)?;
    r.push(Check::eq("[shor] varphi_1", json!(t.varphi[0]), json!(3)));
    let a = Anticode::parse(9, "1,2,3,4")?;
    let gens = shor_generators();
    let dec = anticodes::s_prime_decompose_with(&shor, &a, &gens)?;
    let pick = |idx: &[usize]| Subspace::from_vectors(shor.field(), 9, idx.iter().map(|&i| gens[i - 1].clone()));
    r.push(Check::new("[shor] rad(C) cap A = span{s1, s2}", dec.rad_in_a.dim_f(), 2, dec.rad_in_a == pick(&[1, 2])?));
    r.push(Check::new(
        "[shor] rad(C) cap A^perp = span{s4, s5, s6}",
        dec.rad_in_aperp.dim_f(),
        3,
        dec.rad_in_aperp == pick(&[4, 5, 6])?,
    ));
    r.push(Check::new("[shor] S' = span{s3, s7, s8}", dec.s_prime.len(), 3, dec.s_prime_space() == pick(&[3, 7, 8])?));
    let sp = dec.s_prime_space();
    let pa = anticodes::puncture(&sp, &a)?;
    let pac = anticodes::puncture(&sp, &a.complement())?;
    r.push(Check::eq(
        "[shor] dim/irk of puncture_A S' and puncture_Ac S'",
        json!([pa.sym_dim(), pa.isorank(), pac.sym_dim(), pac.isorank()]),
        // one symplectic pair plus a one-dimensional radical on each side
        json!([1, 2, 1, 2]),
    ));
    Ok(r)
}

fn identities_suite(seed: u64, budget: Budget) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1d);
    let mut r = Report::default();
    for i in 0..IDENTITY_CODES {
        let q = [2, 3, 5][i % 3];
        let n = rng.gen_range(1..=4);
        let code = random_code(&mut rng, q, n);
        let label = format!("random q={q} n={n} #{i}");
        r.extend(tag(&label, code_identities(&code, &mut rng, budget)?));
        r.extend(tag(&label, enumerators::macwilliams_check(&code, budget)?));
    }
    for n in 1..=2 {
        for (i, w) in all_subspaces(n).into_iter().enumerate() {
            let code = Code::new(w);
            let label = format!("exhaustive n={n} #{i}");
            r.extend(tag(&label, code_identities(&code, &mut rng, budget)?));
            r.extend(tag(&label, enumerators::macwilliams_check(&code, budget)?));
        }
    }
    Ok(r)
}

fn stabilizer_suite(seed: u64, budget: Budget) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5b);
    let mut r = Report::default();
    for i in 0..STABILIZER_CODES {
        let n = 1 + i % 5;
        let code = random_stabilizer_code(&mut rng, 2, n);
        let label = format!("stabilizer n={n} #{i}");
        r.extend(tag(&label, invariants::verify_bounds(&code, budget)?));
        let d = code.min_distance(budget)?;
        for a in Anticode::all(n) {
            r.extend(tag(&label, anticodes::verify_cleaning(&code, &a, d)?));
        }
    }
    Ok(r)
}

fn transform_checks(code: &Code, budget: Budget) -> Result<Report> {
    let mut r = Report::default();
    let w = enumerators::weight_distribution(code, budget)?;
    let m = enumerators::binomial_moments(code, budget)?;
    r.push(Check::eq(
        "moments from distribution = rank moments",
        json!(enumerators::moments_from_distribution(&w).b),
        json!(m.b),
    ));
    r.push(Check::eq(
        "distribution from moments = enumerated distribution",
        json!(enumerators::distribution_from_moments(&m).w),
        json!(w.w),
    ));
    r.push(Check::eq(
        "B-poly direct = B-poly from moments",
        json!(EnumeratorPoly::from_distribution(&w).coeffs),
        json!(EnumeratorPoly::from_moments(&m).coeffs),
    ));
    if code.n() <= 4 {
        r.extend(enumerators::mobius_check(code, budget)?);
    }
    Ok(r)
}

fn transforms_suite(seed: u64, budget: Budget) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7a);
    let mut r = Report::default();
    for i in 0..TRANSFORM_TABLES {
        let n = rng.gen_range(0..=8);
        let w = DistributionTable {
            w: (0..=n).map(|_| rng.gen_range(0..10_000)).collect(),
        };
        let back = enumerators::distribution_from_moments(&enumerators::moments_from_distribution(&w));
        r.push(Check::eq(format!("[table #{i}] distribution round trip"), json!(back.w), json!(w.w)));
        let m = enumerators::moments_from_distribution(&w);
        let back = enumerators::moments_from_distribution(&enumerators::distribution_from_moments(&m));
        r.push(Check::eq(format!("[table #{i}] moments round trip"), json!(back.b), json!(m.b)));
    }
    for (name, code) in fixture_list() {
        r.extend(tag(name, transform_checks(&code, budget)?));
    }
    for i in 0..TRANSFORM_CODES {
        let q = [2, 3, 5][i % 3];
        let n = rng.gen_range(1..=4);
        let code = random_code(&mut rng, q, n);
        r.extend(tag(&format!("random q={q} n={n} #{i}"), transform_checks(&code, budget)?));
    }
    Ok(r)
}

fn oracle_checks(code: &Code, budget: Budget) -> Result<Report> {
    let mut r = Report::default();
    r.push(Check::eq(
        "min distance: fast = brute",
        json!(code.min_distance(budget)?),
        json!(oracle::brute_min_distance(code, budget)?),
    ));
    r.push(Check::eq(
        "distribution: fast = brute",
        json!(enumerators::weight_distribution(code, budget)?.w),
        json!(oracle::brute_distribution(code, budget)?),
    ));
    r.push(Check::eq(
        "moments: fast = brute",
        json!(enumerators::binomial_moments(code, budget)?.b),
        json!(oracle::brute_moments(code, budget)?),
    ));
    let fast = SupportTable::compute(code, budget)?;
    let fast: Vec<(usize, usize)> = fast.alpha.into_iter().zip(fast.beta).collect();
    r.push(Check::eq(
        "alpha/beta table: fast = brute",
        json!(fast),
        json!(oracle::brute_alpha_beta(code, budget)?),
    ));
    r.push(Check::eq(
        "codeword count",
        json!(oracle::enumerate(code, budget)?.len()),
        json!(code.space().cardinality()),
    ));
    Ok(r)
}

fn oracle_suite(seed: u64, budget: Budget) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0c);
    let mut r = Report::default();
    for (name, code) in fixture_list() {
        r.extend(tag(name, oracle_checks(&code, budget)?));
    }
    for i in 0..ORACLE_CODES {
        let q = [2, 3][i % 2];
        let n = rng.gen_range(1..=4);
        let code = random_code(&mut rng, q, n);
        r.extend(tag(&format!("random q={q} n={n} #{i}"), oracle_checks(&code, budget)?));
    }
    Ok(r)
}

fn bounds_suite(seed: u64, budget: Budget) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb0);
    let mut r = Report::default();
    for (name, code) in fixture_list() {
        r.extend(tag(name, invariants::verify_bounds(&code, budget)?));
        let direct = invariants::invariant_table(&code, budget)?;
        let via = InvariantTable::from_support_table(code.k(), &SupportTable::compute(&code, budget)?);
        r.push(Check::eq(format!("[{name}] invariant table routes agree"), direct == via, true));
    }
    for i in 0..BOUND_CODES {
        let q = [2, 3][i % 2];
        let n = rng.gen_range(1..=4);
        let code = random_code(&mut rng, q, n);
        r.extend(tag(&format!("random q={q} n={n} #{i}"), invariants::verify_bounds(&code, budget)?));
    }
    Ok(r)
}

pub fn run_suite(suite: Suite, seed: u64, budget: Budget) -> Result<Report> {
    match suite {
        Suite::Fixtures => fixtures_suite(budget),
        Suite::Identities => identities_suite(seed, budget),
        Suite::Stabilizer => stabilizer_suite(seed, budget),
        Suite::Transforms => transforms_suite(seed, budget),
        Suite::Oracle => oracle_suite(seed, budget),
        Suite::Bounds => bounds_suite(seed, budget),
        Suite::All => {
            let mut r = Report::default();
            for s in Suite::EACH {
                r.extend(run_suite(s, seed, budget)?);
            }
            Ok(r)
        }
    }
}

/// Pass and fail counts for one family of checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub checks: usize,
    pub failures: usize,
    pub families: BTreeMap<String, Tally>,
    pub skipped: Vec<String>,
    pub failed: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub budget: u64,
    pub suites: Vec<SuiteSummary>,
    pub total_checks: usize,
    pub total_failures: usize,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.total_failures == 0
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteSummary> {
        self.suites.iter().find(|s| s.suite == name)
    }
}

/// Strips instance tags, support labels and indices so that checks of the
/// same statement are counted together.
pub fn family(identity: &str) -> String {
    let mut s = identity;
    while let Some(rest) = s.strip_prefix('[') {
        match rest.find("] ") {
            Some(i) => s = &rest[i + 2..],
            None => break,
        }
    }
    let s = s.split(" on {").next().unwrap_or(s);
    let s = s.split(" (").next().unwrap_or(s);
    let mut out = String::with_capacity(s.len());
    // subscripts vary per instance, so `theta_2` and `theta_3` share a family
    let mut in_subscript = false;
    for ch in s.chars() {
        if in_subscript && ch.is_ascii_digit() {
            continue;
        }
        if ch.is_ascii_digit() && out.ends_with('_') {
            out.push('#');
            in_subscript = true;
            continue;
        }
        in_subscript = false;
        out.push(ch);
    }
    out
}

pub fn summarize(suite: &str, r: &Report) -> SuiteSummary {
    let mut families: BTreeMap<String, Tally> = BTreeMap::new();
    for c in &r.checks {
        let t = families.entry(family(&c.identity)).or_default();
        if c.pass {
            t.pass += 1;
        } else {
            t.fail += 1;
        }
    }
    let mut skipped: Vec<String> = r.skipped.iter().map(|s| family(s)).collect();
    skipped.sort();
    skipped.dedup();
    let failed: Vec<Check> = r.failures().cloned().collect();
    SuiteSummary {
        suite: suite.to_string(),
        checks: r.checks.len(),
        failures: failed.len(),
        families,
        skipped,
        failed,
    }
}

/// Runs one suite (or every suite for [`Suite::All`]) and summarizes each.
pub fn run(suite: Suite, seed: u64, budget: Budget) -> Result<VerifyReport> {
    let list: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let mut suites = Vec::new();
    for s in list {
        suites.push(summarize(s.name(), &run_suite(s, seed, budget)?));
    }
    Ok(VerifyReport {
        seed,
        budget: budget.0,
        total_checks: suites.iter().map(|s| s.checks).sum(),
        total_failures: suites.iter().map(|s| s.failures).sum(),
        suites,
    })
}
