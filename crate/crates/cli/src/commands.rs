use std::fmt;
use std::path::Path;

use serde_json::{json, Map, Value};
use tspec_core::dynamics::{commutativity_obstruction, lefschetz_sign_check, TORUS_MODEL_NOTE};
use tspec_core::equivariant::{cp1_module, cp1_twist_map, lefschetz_crosscheck};
use tspec_core::formats::{parse_endo_file, parse_fixed_point_file, parse_int_matrix, parse_module_file};
use tspec_core::laurent::rat;
use tspec_core::localize::localized_graded_trace;
use tspec_core::roots::format_root;
use tspec_core::*;

use crate::report::Report;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input.
    Input(String),
    /// Well-formed input outside an operation's domain.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Domain(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::DimensionMismatch(_) | AlgebraError::InvalidInput(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl Fn(ParseError) -> CliError + '_ {
    move |e| CliError::Input(format!("{}: {e}", path.display()))
}

/// An integer matrix given inline (`1,1;1,0`) or as a file holding that text.
pub fn matrix_arg(arg: &str) -> CliResult<IntMatrix> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = read(path)?;
        let rows: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        return parse_int_matrix(&rows.join(";")).map_err(in_file(path));
    }
    parse_int_matrix(arg).map_err(|e| CliError::Input(format!("matrix '{arg}': column {}: {}", e.column, e.message)))
}

pub fn poly_arg(arg: &str) -> CliResult<LaurentPoly> {
    parse_poly(arg).map_err(|e| CliError::Input(format!("polynomial '{arg}': column {}: {}", e.column, e.message)))
}

fn roots_json(roots: &[num_complex::Complex64]) -> Value {
    roots.iter().map(|z| Value::String(format_root(*z))).collect()
}

/// Support as flat fields, so the text form reads `support: FULL (ℂ*)`.
fn support_fields(s: &Support) -> Vec<(String, Value)> {
    let kind = match s {
        Support::Full => "FULL",
        _ if s.is_empty() => "EMPTY",
        _ => "FINITE",
    };
    vec![
        ("support".into(), Value::String(s.to_string())),
        ("support_kind".into(), kind.into()),
        ("support_generator".into(), s.generator().map(|g| g.to_string()).into()),
        ("support_roots".into(), roots_json(&s.numeric_points().unwrap_or_default())),
    ]
}

fn set_support(report: &mut Report, s: &Support) {
    for (k, v) in support_fields(s) {
        report.set(&k, v);
    }
}

fn factors_json(inv: &InvariantFactors) -> Value {
    let mut m = Map::new();
    m.insert("module".into(), inv.to_string().into());
    m.insert("torsion".into(), inv.torsion().iter().map(|d| Value::String(d.to_string())).collect());
    m.insert("free_rank".into(), inv.free_rank().into());
    m.insert("annihilator".into(), annihilator(inv).to_string().into());
    m.extend(support_fields(&support(inv)));
    Value::Object(m)
}

pub fn classify_cmd(report: &mut Report, path: &Path) -> CliResult<()> {
    let m = parse_module_file(&read(path)?).map_err(in_file(path))?;
    let [f0, f1] = m.classify();
    report.set("degree0", factors_json(&f0));
    report.set("degree1", factors_json(&f1));
    set_support(report, &m.support());
    Ok(())
}

pub fn localize_cmd(report: &mut Report, path: &Path, at: &str) -> CliResult<()> {
    let m = parse_module_file(&read(path)?).map_err(in_file(path))?;
    let f = poly_arg(at)?;
    let [f0, f1] = m.classify();
    let (l0, l1) = (localize(&f0, &f)?, localize(&f1, &f)?);
    report.set("inverted", l0.inverted().to_string());
    report.set("degree0", factors_json(l0.factors()));
    report.set("degree1", factors_json(l1.factors()));
    set_support(report, &l0.support().union(&l1.support()));
    Ok(())
}

pub fn trace_cmd(report: &mut Report, module: &Path, endo: &Path, at: Option<&str>) -> CliResult<()> {
    let m = parse_module_file(&read(module)?).map_err(in_file(module))?;
    let spec = parse_endo_file(&read(endo)?).map_err(in_file(endo))?;
    let l = spec.to_map(&m);
    let trace = graded_trace(&m, &l)?;
    report.set("parity", l.parity.as_int());
    report.set("convention", "trace(K^0) - trace(K^1)");
    report.set("trace", trace.value.to_string());
    if trace.odd_degree {
        report.set("note", "odd degree: zero by definition");
    }
    if let Some(at) = at {
        let f = poly_arg(at)?;
        let localized = localized_graded_trace(&m, &l, &f, TraceConvention::EvenMinusOdd)?;
        let consistent = localized == RationalFunction::from_poly(trace.value.clone());
        report.set("inverted", f.canonical_associate()?.to_string());
        report.set("localized_trace", localized.to_string());
        report.set("localization_consistent", consistent);
    }
    Ok(())
}

/// The action given by `--k0`/`--k1`, or induced by a toral automorphism.
pub enum ActionSource {
    Blocks { k0: IntMatrix, k1: IntMatrix },
    Torus(IntMatrix),
}

fn resolve_action(report: &mut Report, source: ActionSource) -> CliResult<KTheoryAction> {
    match source {
        ActionSource::Blocks { k0, k1 } => Ok(KTheoryAction::new(k0, k1)?),
        ActionSource::Torus(t) => {
            let t = ToralAutomorphism::new(t)?;
            report.set("eigenvalues", roots_json(&t.eigenvalues()));
            let a = t.k_theory_action()?;
            report.set("k0", a.k0().to_string());
            report.set("k1", a.k1().to_string());
            report.warn(TORUS_MODEL_NOTE);
            Ok(a)
        }
    }
}

fn obstruction_json(s: &Support, tolerance: f64) -> CliResult<Value> {
    let o = commutativity_obstruction(s, tolerance)?;
    Ok(json!({ "obstructed": o.obstructed, "witnesses": roots_json(&o.witnesses) }))
}

pub fn tspec_cmd(report: &mut Report, source: ActionSource, tolerance: f64) -> CliResult<()> {
    let a = resolve_action(report, source)?;
    let s = tspec_of_crossed_product(&a)?;
    set_support(report, &s);
    report.set("obstruction", obstruction_json(&s, tolerance)?);
    report.set("char_function", char_function(&a)?.display_var("t").to_string());
    Ok(())
}

pub fn ck_cmd(report: &mut Report, a: &IntMatrix, tolerance: f64) -> CliResult<()> {
    let s = ck_spectrum(a)?;
    set_support(report, &s);
    report.set("obstruction", obstruction_json(&s, tolerance)?);
    Ok(())
}

pub fn zeta_cmd(report: &mut Report, source: ActionSource, order: usize) -> CliResult<()> {
    let a = resolve_action(report, source)?;
    let z = zeta_identity_check(&a, order)?;
    report.set("order", order);
    report.set("char_function", z.char_function.display_var("t").to_string());
    report.set("char_series", z.char_series.to_string());
    report.set("exp_series", z.exp_series.to_string());
    report.set("agree", z.agree);
    Ok(())
}

pub fn periodic_cmd(report: &mut Report, t: IntMatrix, max_n: u32, tolerance: f64) -> CliResult<()> {
    let t = ToralAutomorphism::new(t)?;
    report.set("hyperbolic", t.is_hyperbolic(tolerance));
    let rows: Vec<Value> = periodic_table(&t, max_n)?
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "count": r.count.to_string(),
                "oracle": if r.agrees() { "OK" } else { "MISMATCH" },
            })
        })
        .collect();
    report.set("periodic_points", rows);
    if t.matrix().is_symmetric() {
        let mut signs = Vec::new();
        for n in 1..=max_n {
            let s = lefschetz_sign_check(&t, n)?;
            signs.push(json!({
                "n": n,
                "graded_trace": s.graded_trace.to_string(),
                "expanding": s.expanding,
                "sign": if s.holds { "OK" } else { "MISMATCH" },
            }));
        }
        report.set("lefschetz", signs);
    }
    Ok(())
}

fn value_at_one(p: &LaurentPoly) -> CliResult<String> {
    Ok(p.evaluate(&rat(1))?.to_string())
}

pub fn cp1_cmd(report: &mut Report, k: u32) -> CliResult<()> {
    let trace = cp1_twisted_trace(k)?;
    let check = lefschetz_crosscheck(&FixedPointData::cp1(k as i64), &cp1_module(), &cp1_twist_map(k))?;
    report.set("k", k);
    report.set("trace", trace.to_string());
    report.set("euler_number", check.euler_number.to_string());
    report.set("value_at_1", value_at_one(&trace)?);
    report.set("lefschetz_crosscheck", if check.holds { "OK" } else { "FAILED" });
    Ok(())
}

pub fn euler_cmd(report: &mut Report, path: &Path, module: Option<&Path>, endo: Option<&Path>) -> CliResult<()> {
    let fp = parse_fixed_point_file(&read(path)?).map_err(in_file(path))?;
    let e = euler_number(&fp);
    report.set("components", fp.components.len());
    report.set("euler_number", e.to_string());
    report.set("value_at_1", value_at_one(&e)?);
    match (module, endo) {
        (Some(mp), Some(ep)) => {
            let m = parse_module_file(&read(mp)?).map_err(in_file(mp))?;
            let l = parse_endo_file(&read(ep)?).map_err(in_file(ep))?.to_map(&m);
            let check = lefschetz_crosscheck(&fp, &m, &l)?;
            report.set("graded_trace", check.graded_trace.to_string());
            report.set("lefschetz_crosscheck", if check.holds { "OK" } else { "FAILED" });
        }
        (None, None) => {}
        _ => return Err(CliError::Input("--module and --endo must be given together".into())),
    }
    Ok(())
}
