use serde_json::{json, Value};

use qsymp::anticodes::{self, Anticode};
use qsymp::codes::{self, CodeJson, Role};
use qsymp::enumerators::{self, EnumeratorPoly};
use qsymp::invariants::{self, InvariantTable};
use qsymp::verify::{self, Suite};
use qsymp::{Budget, Code, Error, Report, Result, Subspace, SympVector};

use crate::input::{InputArgs, Loaded};
use crate::{Cli, Command, ExportFormat, Format, Outcome, Target};

/// What a command produced, in all three renderings.
struct Rendered {
    json: Value,
    table: String,
    csv: String,
    pass: bool,
}

impl Rendered {
    fn ok(json: Value, table: String, csv: String) -> Self {
        Self {
            json,
            table,
            csv,
            pass: true,
        }
    }
}

pub fn run(cli: &Cli, budget: Budget) -> Result<Outcome> {
    let out = match &cli.command {
        Command::Import(input) => import(&input.load()?, budget)?,
        Command::Analyze(input) => analyze(&input.load()?, budget)?,
        Command::Invariants(input) => invariants_cmd(&input.load()?, budget)?,
        Command::Enumerator(input) => enumerator(&input.load()?, budget)?,
        Command::Moments {
            input,
            check_macwilliams,
        } => moments(&input.load()?, *check_macwilliams, budget)?,
        Command::Puncture { input, support, of } => puncture(&input.load()?, support, *of)?,
        Command::Verify { input, suite, seed } => verify_cmd(input, suite, *seed, budget)?,
        Command::Export { input, to } => {
            // export writes the file format itself regardless of --format
            print!("{}", export(&input.load()?, *to)?);
            return Ok(Outcome::Pass);
        }
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json value")),
        Format::Table => print!("{}", out.table),
        Format::Csv => print!("{}", out.csv),
    }
    Ok(if out.pass { Outcome::Pass } else { Outcome::Fail })
}

fn role_name(r: Role) -> &'static str {
    match r {
        Role::Code => "code",
        Role::Stabilizer => "stabilizer",
        Role::Gauge => "gauge",
    }
}

fn params_json(l: &Loaded, budget: Budget) -> Result<Value> {
    let p = l.code.params(budget)?;
    let mut v = json!({
        "n": p.n,
        "k_sym": p.k,
        "s": p.s,
        "d": p.d,
        "maxwt": p.maxwt,
    });
    if let Some(sub) = &l.subsystem {
        v["logical_count"] = json!(sub.logical_count);
    }
    Ok(v)
}

fn identity(l: &Loaded) -> Value {
    json!({
        "source": l.source,
        "role": role_name(l.role),
        "q": l.code.field().order(),
        "n": l.code.n(),
    })
}

fn params_rows(params: &Value) -> Vec<(String, String)> {
    ["n", "k_sym", "s", "d", "maxwt", "logical_count"]
        .iter()
        .filter_map(|k| params.get(*k).map(|v| (k.to_string(), v.to_string())))
        .collect()
}

fn kv_table(rows: &[(String, String)]) -> String {
    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}

fn kv_csv(rows: &[(String, String)]) -> String {
    let mut s = String::from("field,value\n");
    for (k, v) in rows {
        s.push_str(&format!("{k},{v}\n"));
    }
    s
}

fn vectors(w: &Subspace) -> Vec<String> {
    w.vectors().iter().map(|v| v.to_string()).collect()
}

fn import(l: &Loaded, budget: Budget) -> Result<Rendered> {
    let params = params_json(l, budget)?;
    let rows = params_rows(&params);
    let json = json!({
        "identity": identity(l),
        "code": l.code.to_json(Role::Code),
        "params": params,
    });
    let mut table = kv_table(&rows);
    for v in vectors(l.code.space()) {
        table.push_str(&format!("  {v}\n"));
    }
    Ok(Rendered::ok(json, table, kv_csv(&rows)))
}

fn enumerator_data(code: &Code, budget: Budget) -> Result<(Value, EnumeratorPoly, EnumeratorPoly)> {
    let w = enumerators::weight_distribution(code, budget)?;
    let b = enumerators::binomial_moments(code, budget)?;
    let (ap, bp) = enumerators::enumerator_polys(code, budget)?;
    let v = json!({
        "W": w.w,
        "B": b.b,
        "A_poly": ap.coeffs,
        "B_poly": bp.coeffs,
    });
    Ok((v, ap, bp))
}

fn checks_json(r: &Report) -> Value {
    json!(r
        .checks
        .iter()
        .map(|c| json!({ "identity": c.identity, "pass": c.pass, "lhs": c.lhs, "rhs": c.rhs }))
        .collect::<Vec<_>>())
}

fn analyze(l: &Loaded, budget: Budget) -> Result<Rendered> {
    let params = params_json(l, budget)?;
    let inv = invariants::invariant_table(&l.code, budget)?;
    let (enums, ap, bp) = enumerator_data(&l.code, budget)?;
    let mut r = invariants::verify_bounds(&l.code, budget)?;
    r.extend(enumerators::macwilliams_check(&l.code, budget)?);
    let failures = r.failures().count();
    let json = json!({
        "identity": identity(l),
        "params": params,
        "invariants": inv,
        "enumerators": enums,
        "checks": checks_json(&r),
        "skipped": r.skipped,
        "failures": failures,
    });
    let rows = params_rows(&params);
    let mut table = kv_table(&rows);
    table.push('\n');
    table.push_str(&inv.to_ascii());
    table.push_str(&format!("\nA = {ap}\nB = {bp}\n"));
    table.push_str(&format!("\nchecks: {} run, {} failed, {} skipped\n", r.checks.len(), failures, r.skipped.len()));
    for c in r.failures() {
        table.push_str(&format!("  FAIL {}: {} vs {}\n", c.identity, c.lhs, c.rhs));
    }
    Ok(Rendered {
        json,
        table,
        csv: kv_csv(&rows),
        pass: failures == 0,
    })
}

fn show(v: &Option<usize>) -> String {
    v.map_or(String::new(), |x| x.to_string())
}

fn invariants_csv(t: &InvariantTable) -> String {
    let mut s = String::from("b,theta,phi\n");
    for b in 0..=t.n {
        s.push_str(&format!("{b},{},{}\n", t.theta[b], t.phi[b]));
    }
    s.push_str("\na,vartheta,varphi,delta\n");
    for a in 1..=t.k {
        s.push_str(&format!(
            "{a},{},{},{}\n",
            show(&t.vartheta[a - 1]),
            show(&t.varphi[a - 1]),
            show(&t.delta[a - 1])
        ));
    }
    s
}

fn invariants_cmd(l: &Loaded, budget: Budget) -> Result<Rendered> {
    let t = invariants::invariant_table(&l.code, budget)?;
    let json = json!({ "identity": identity(l), "invariants": t });
    Ok(Rendered::ok(json, t.to_ascii(), invariants_csv(&t)))
}

fn enumerator(l: &Loaded, budget: Budget) -> Result<Rendered> {
    let (json, ap, bp) = enumerator_data(&l.code, budget)?;
    let table = format!("A(x,y) = {ap}\nB(x,y) = {bp}\n");
    let mut csv = String::from("a,W,B,A_poly,B_poly\n");
    for a in 0..=l.code.n() {
        csv.push_str(&format!(
            "{a},{},{},{},{}\n",
            json["W"][a], json["B"][a], json["A_poly"][a], json["B_poly"][a]
        ));
    }
    Ok(Rendered::ok(json, table, csv))
}

fn moments(l: &Loaded, check: bool, budget: Budget) -> Result<Rendered> {
    let b = enumerators::binomial_moments(&l.code, budget)?;
    let bp = enumerators::binomial_moments(&l.code.dual(), budget)?;
    let mut json = json!({ "identity": identity(l), "B": b.b, "B_perp": bp.b });
    let mut table = String::from("   b            B       B_perp\n");
    let mut csv = String::from("b,B,B_perp\n");
    for i in 0..=l.code.n() {
        table.push_str(&format!("{i:>4} {:>12} {:>12}\n", b.b[i], bp.b[i]));
        csv.push_str(&format!("{i},{},{}\n", b.b[i], bp.b[i]));
    }
    let mut pass = true;
    if check {
        let r = enumerators::macwilliams_check(&l.code, budget)?;
        pass = r.all_pass();
        json["macwilliams"] = json!({
            "checks": checks_json(&r),
            "skipped": r.skipped,
            "failures": r.failures().count(),
        });
        table.push_str(&format!(
            "\nmacwilliams: {} checks, {} failed\n",
            r.checks.len(),
            r.failures().count()
        ));
    }
    Ok(Rendered { json, table, csv, pass })
}

fn side_json(w: &Subspace) -> Value {
    json!({
        "vectors": vectors(w),
        "dim_f": w.dim_f(),
        "dim": w.sym_dim(),
        "irk": w.isorank(),
        "radical": vectors(&w.radical()),
    })
}

fn preferred_radical(l: &Loaded) -> Vec<SympVector> {
    let rad = l.code.radical();
    l.generators.iter().filter(|v| v.n() == rad.n() && rad.contains(v)).cloned().collect()
}

fn puncture(l: &Loaded, support: &str, of: Target) -> Result<Rendered> {
    let n = l.code.n();
    let a = Anticode::parse(n, support)?;
    let ac = a.complement();
    let mut json = json!({
        "identity": identity(l),
        "support": a.support().one_based(),
        "complement": ac.support().one_based(),
    });
    let target = match of {
        Target::Code => {
            json["of"] = json!("code");
            l.code.space().clone()
        }
        Target::Radical => {
            json["of"] = json!("radical");
            l.code.radical().clone()
        }
        Target::SPrime => {
            json["of"] = json!("s-prime");
            let dec = anticodes::s_prime_decompose_with(&l.code, &a, &preferred_radical(l))?;
            json["decomposition"] = json!({
                "rad_in_A": vectors(&dec.rad_in_a),
                "rad_in_A_complement": vectors(&dec.rad_in_aperp),
                "s_prime": dec.s_prime.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            });
            dec.s_prime_space()
        }
    };
    let pa = anticodes::puncture(&target, &a)?;
    let pac = anticodes::puncture(&target, &ac)?;
    let sa = anticodes::shorten(&target, &a)?;
    let sac = anticodes::shorten(&target, &ac)?;
    json["puncture_A"] = side_json(&pa);
    json["puncture_A_complement"] = side_json(&pac);
    json["shorten_A"] = side_json(&sa);
    json["shorten_A_complement"] = side_json(&sac);

    let mut table = String::new();
    let mut csv = String::from("part,dim,irk,vector\n");
    for (name, w) in [
        ("puncture_A", &pa),
        ("puncture_A_complement", &pac),
        ("shorten_A", &sa),
        ("shorten_A_complement", &sac),
    ] {
        table.push_str(&format!("{name}: dim {} irk {}\n", w.sym_dim(), w.isorank()));
        for v in vectors(w) {
            table.push_str(&format!("  {v}\n"));
            csv.push_str(&format!("{name},{},{},\"{v}\"\n", w.sym_dim(), w.isorank()));
        }
    }
    Ok(Rendered::ok(json, table, csv))
}

/// Per-code checks run when `verify` is given an input code.
fn input_report(l: &Loaded, budget: Budget) -> Result<Report> {
    let mut r = invariants::verify_bounds(&l.code, budget)?;
    r.extend(enumerators::macwilliams_check(&l.code, budget)?);
    let d = if l.code.is_stabilizer_code() {
        l.code.min_distance(budget)?
    } else {
        None
    };
    let preferred = preferred_radical(l);
    for a in Anticode::all(l.code.n()) {
        r.extend(anticodes::verify_cleaning(&l.code, &a, d)?);
        let dec = anticodes::s_prime_decompose_with(&l.code, &a, &preferred)?;
        r.extend(anticodes::complementarity_check_with(&l.code, &a, &dec)?);
    }
    Ok(r)
}

fn verify_cmd(input: &InputArgs, suite: &str, seed: u64, budget: Budget) -> Result<Rendered> {
    let suite: Suite = suite.parse()?;
    let mut rep = verify::run(suite, seed, budget)?;
    if input.is_given() {
        let l = input.load()?;
        let s = verify::summarize(&format!("input {}", l.source), &input_report(&l, budget)?);
        rep.total_checks += s.checks;
        rep.total_failures += s.failures;
        rep.suites.push(s);
    }
    let mut table = format!("{:<28} {:>8} {:>8}\n", "suite", "checks", "failed");
    let mut csv = String::from("suite,family,pass,fail\n");
    for s in &rep.suites {
        table.push_str(&format!("{:<28} {:>8} {:>8}\n", s.suite, s.checks, s.failures));
        for (fam, t) in &s.families {
            csv.push_str(&format!("{},\"{}\",{},{}\n", s.suite, fam.replace('"', "\"\""), t.pass, t.fail));
        }
    }
    for s in &rep.suites {
        for c in &s.failed {
            table.push_str(&format!("FAIL [{}] {}: {} vs {}\n", s.suite, c.identity, c.lhs, c.rhs));
        }
    }
    let pass = rep.all_pass();
    let json = serde_json::to_value(&rep).map_err(|e| Error::Invalid(e.to_string()))?;
    Ok(Rendered { json, table, csv, pass })
}

fn export(l: &Loaded, to: ExportFormat) -> Result<String> {
    Ok(match to {
        ExportFormat::Json => {
            let j: CodeJson = l.code.to_json(Role::Code);
            serde_json::to_string_pretty(&j).map_err(|e| Error::Invalid(e.to_string()))? + "\n"
        }
        ExportFormat::Pauli => codes::to_pauli(l.code.space())?
            .iter()
            .map(|p| format!("{p}\n"))
            .collect(),
        ExportFormat::Matrix => l.code.space().basis().to_text(),
    })
}
