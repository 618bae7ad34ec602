//! Job execution and report rendering.

use std::fmt;
use std::str::FromStr;

use foliation_core::oracle::truncated_dimension_permuted;
use foliation_core::planar::{FailureKind, TrivialGenerators};
use foliation_core::{
    check_conditions, cofactor, decompose, free_basis, independence_certify, is_tame, is_weakly_tame,
    jacobian_lift, nd_basis, nd_decompose, quasi_weights, saito_det, solve_truncated, span_certify,
    trivial_generators, Error, FreeBasis, ModuleBasis, Poly, QuotientDimension, Rational, VectorField,
    ZeroCofactorFamily,
};
use serde_json::{json, Map, Value};

use crate::corpus::{Corpus, Entry};
use crate::parse::{parse_field, parse_polynomial, print_field, print_polynomial, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Cofactor,
    TrivialGens,
    WeaklyTame,
    Weights,
    Tame,
    JacobianLift,
    FreeBasis,
    SaitoDet,
    Decompose,
    NdCheck,
    NdDecompose,
    Oracle,
    Certify,
}

impl Command {
    pub const ALL: [Command; 13] = [
        Command::Cofactor,
        Command::TrivialGens,
        Command::WeaklyTame,
        Command::Weights,
        Command::Tame,
        Command::JacobianLift,
        Command::FreeBasis,
        Command::SaitoDet,
        Command::Decompose,
        Command::NdCheck,
        Command::NdDecompose,
        Command::Oracle,
        Command::Certify,
    ];

    /// Whether the command applies to hypersurfaces in `nvars` variables.
    pub fn applies_to(&self, nvars: usize) -> bool {
        match self {
            Command::Cofactor | Command::FreeBasis | Command::Oracle | Command::Certify => true,
            Command::NdCheck | Command::NdDecompose => nvars >= 3,
            _ => nvars == 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Cofactor => "cofactor",
            Command::TrivialGens => "trivial-gens",
            Command::WeaklyTame => "weakly-tame",
            Command::Weights => "weights",
            Command::Tame => "tame",
            Command::JacobianLift => "jacobian-lift",
            Command::FreeBasis => "free-basis",
            Command::SaitoDet => "saito-det",
            Command::Decompose => "decompose",
            Command::NdCheck => "nd-check",
            Command::NdDecompose => "nd-decompose",
            Command::Oracle => "oracle",
            Command::Certify => "certify",
        }
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown command '{s}'"))
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub f: String,
    pub vars: Vec<String>,
    /// Vector fields, semicolon-separated components in variable order.
    pub fields: Vec<String>,
    pub degree: Option<u32>,
    pub weights: Option<(u64, u64)>,
    pub machine: bool,
}

impl JobSpec {
    pub fn new(command: Command, f: &str, vars: &[&str]) -> Self {
        JobSpec {
            command,
            f: f.to_string(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            fields: Vec::new(),
            degree: None,
            weights: None,
            machine: false,
        }
    }

    pub fn with_fields(mut self, fields: &[&str]) -> Self {
        self.fields = fields.iter().map(|s| s.to_string()).collect();
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Negative = 1,
    Usage = 2,
}

/// Result of one job: a status plus ordered key/value pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub status: String,
    pub exit: ExitCode,
    pub fields: Vec<(String, Value)>,
}

impl Report {
    fn ok() -> Self {
        Report { status: "ok".into(), exit: ExitCode::Success, fields: Vec::new() }
    }

    fn negative(status: &str) -> Self {
        Report { status: status.into(), exit: ExitCode::Negative, fields: Vec::new() }
    }

    fn usage(message: String) -> Self {
        Report {
            status: "error".into(),
            exit: ExitCode::Usage,
            fields: vec![("message".into(), json!(message))],
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.fields.push((key.to_string(), value));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self, job: &JobSpec) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(job.command.name()));
        m.insert("f".into(), json!(job.f));
        m.insert("vars".into(), json!(job.vars));
        m.insert("status".into(), json!(self.status));
        for (k, v) in &self.fields {
            m.insert(k.clone(), v.clone());
        }
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("status: {}\n", self.status);
        for (k, v) in &self.fields {
            render_text(&mut s, k, v, 0);
        }
        s
    }
}

fn render_text(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, item) in items.iter().enumerate() {
                render_text(out, &format!("[{i}]"), item, indent + 1);
            }
        }
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, item) in map {
                render_text(out, k, item, indent + 1);
            }
        }
        Value::String(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
        other => out.push_str(&format!("{pad}{key}: {other}\n")),
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(&'static str, ParseError),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type NdParts = (ZeroCofactorFamily<Rational>, VectorField<Rational>);

struct Ctx<'a> {
    job: &'a JobSpec,
    f: Poly,
}

impl Ctx<'_> {
    fn p(&self, p: &Poly) -> Value {
        json!(print_polynomial(p, &self.job.vars))
    }

    fn v(&self, x: &VectorField<Rational>) -> Value {
        json!(print_field(x, &self.job.vars))
    }

    fn fields(&self) -> Result<Vec<VectorField<Rational>>, Failure> {
        self.job
            .fields
            .iter()
            .map(|t| parse_field(t, &self.job.vars).map_err(|e| Failure::Parse("--field", e)))
            .collect()
    }

    fn one_field(&self) -> Result<VectorField<Rational>, Failure> {
        let mut fs = self.fields()?;
        if fs.len() != 1 {
            return Err(Failure::Usage(format!(
                "{} takes exactly one --field, got {}",
                self.job.command,
                fs.len()
            )));
        }
        Ok(fs.remove(0))
    }

    fn plane(&self) -> Result<(), Failure> {
        if self.job.vars.len() != 2 {
            return Err(Failure::Usage(format!("{} needs exactly two variables", self.job.command)));
        }
        Ok(())
    }

    fn basis_report(&self, r: Report, b: &ModuleBasis<Rational>) -> Report {
        let r = r
            .with("kind", json!(b.kind.name()))
            .with("generators", Value::Array(b.fields.iter().map(|x| self.v(x)).collect()))
            .with("cofactors", Value::Array(b.cofactors.iter().map(|k| self.p(k.value())).collect()))
            .with("divisor", self.p(&b.divisor));
        if b.fields.len() == 2 && b.f.nvars() == 2 {
            let det = saito_det(&b.fields[0], &b.fields[1]).expect("planar basis");
            r.with("saito_det", self.p(&det))
        } else {
            r.with("determinant", self.p(&foliation_core::nd::full_determinant(&b.fields)))
        }
    }

    fn milnor(&self, q: &QuotientDimension) -> Value {
        match q {
            QuotientDimension::Finite { value, .. } => json!(value),
            QuotientDimension::Infinite => json!("infinite"),
        }
    }

    /// Planar free basis, or the report to return when there is none.
    fn planar_basis(&self) -> Result<Result<ModuleBasis<Rational>, Report>, Failure> {
        match free_basis(&self.f)? {
            FreeBasis::Basis(b) => Ok(Ok(b)),
            FreeBasis::Failure(fail) => {
                let status = match fail.kind {
                    FailureKind::NotInJacobianIdeal => "NotInJacobianIdeal",
                    FailureKind::NotWeaklyTame => "NotWeaklyTame",
                };
                Ok(Err(Report::negative(status)
                    .with("weakly_tame", json!(fail.weakly_tame))
                    .with("dimension", self.milnor(&fail.milnor))
                    .with("divisor", self.p(&fail.divisor))))
            }
        }
    }

    fn family(&self, fields: Vec<VectorField<Rational>>) -> Result<ZeroCofactorFamily<Rational>, Failure> {
        Ok(ZeroCofactorFamily::new(self.f.clone(), fields)?)
    }

    fn nd_parts(&self, fields: Vec<VectorField<Rational>>) -> Result<Result<NdParts, Report>, Failure> {
        let family = self.family(fields)?;
        let rep = check_conditions(&family)?;
        match rep.x_star {
            Some(xs) => Ok(Ok((family, xs))),
            None => Ok(Err(Report::negative("NotMember"))),
        }
    }
}

fn execute(job: &JobSpec) -> Result<Report, Failure> {
    check_vars(&job.vars)?;
    let f = parse_polynomial(&job.f, &job.vars).map_err(|e| Failure::Parse("polynomial", e))?;
    let cx = Ctx { job, f };
    let f = &cx.f;
    let n = job.vars.len();
    let report = match job.command {
        Command::Cofactor => {
            let x = cx.one_field()?;
            match cofactor(f, &x)? {
                Some(k) => Report::ok().with("cofactor", cx.p(k.value())),
                None => Report::negative("NotInvariant"),
            }
        }
        Command::TrivialGens => {
            cx.plane()?;
            let TrivialGenerators { hamiltonian, x1, x2, cofactors } = trivial_generators(f)?;
            Report::ok()
                .with("generators", json!([cx.v(&hamiltonian), cx.v(&x1), cx.v(&x2)]))
                .with("cofactors", Value::Array(cofactors.iter().map(|k| cx.p(k.value())).collect()))
        }
        Command::WeaklyTame => {
            cx.plane()?;
            let (tame, q) = is_weakly_tame(f)?;
            let mut r = Report::ok().with("weakly_tame", json!(tame)).with("dimension", cx.milnor(&q));
            if let QuotientDimension::Finite { standard_monomials, .. } = &q {
                let ms = standard_monomials
                    .iter()
                    .map(|m| cx.p(&Poly::term(m.clone(), Rational::from_integer(1.into()))))
                    .collect();
                r = r.with("standard_monomials", Value::Array(ms));
            }
            r
        }
        Command::Weights => {
            cx.plane()?;
            match quasi_weights(f)? {
                Some(w) => Report::ok().with("weights", json!({"l": w.l, "m": w.m, "d": w.d})),
                None => Report::negative("NotQuasiHomogeneous"),
            }
        }
        Command::Tame => {
            cx.plane()?;
            let (l, m) = match job.weights {
                Some(w) => w,
                None => match quasi_weights(f)? {
                    Some(w) => (w.l, w.m),
                    None => return Err(Failure::Usage("tame needs --weights l,m".into())),
                },
            };
            let pieces = foliation_core::quasi_decompose(f, l, m)?;
            Report::ok()
                .with("tame", json!(is_tame(f, l, m)?))
                .with("weights", json!({"l": l, "m": m}))
                .with("top_piece", cx.p(&pieces[0].1))
                .with("top_degree", json!(pieces[0].0))
        }
        Command::JacobianLift => {
            cx.plane()?;
            match jacobian_lift(f)? {
                Some(x) => Report::ok().with("x_star", cx.v(&x)).with("cofactor", json!("1")),
                None => Report::negative("NotMember"),
            }
        }
        Command::FreeBasis if n >= 3 => match cx.nd_parts(cx.fields()?)? {
            Ok((family, xs)) => cx.basis_report(Report::ok(), &nd_basis(&family, xs)?),
            Err(r) => r,
        },
        Command::FreeBasis => {
            cx.plane()?;
            match cx.planar_basis()? {
                Ok(b) => cx.basis_report(Report::ok(), &b),
                Err(r) => r,
            }
        }
        Command::SaitoDet => {
            cx.plane()?;
            let fs = cx.fields()?;
            match fs.len() {
                2 => Report::ok().with("saito_det", cx.p(&saito_det(&fs[0], &fs[1])?)),
                0 => match cx.planar_basis()? {
                    Ok(b) => Report::ok()
                        .with("kind", json!(b.kind.name()))
                        .with("saito_det", cx.p(&saito_det(&b.fields[0], &b.fields[1])?)),
                    Err(r) => r,
                },
                k => return Err(Failure::Usage(format!("saito-det takes zero or two --field, got {k}"))),
            }
        }
        Command::Decompose => {
            cx.plane()?;
            let x = cx.one_field()?;
            match cx.planar_basis()? {
                Ok(b) => {
                    let d = decompose(&b, &x)?;
                    cx.basis_report(Report::ok(), &b)
                        .with("decomposition", Value::Array(d.coefficients.iter().map(|c| cx.p(c)).collect()))
                }
                Err(r) => r,
            }
        }
        Command::NdCheck => {
            if n < 3 {
                return Err(Failure::Usage("nd-check needs at least three variables".into()));
            }
            let family = cx.family(cx.fields()?)?;
            let rep = check_conditions(&family)?;
            let mut r = Report::ok()
                .with("minors", Value::Array(rep.minors.iter().map(|m| cx.p(m)).collect()))
                .with(
                    "conditions",
                    json!({
                        "condition1": rep.condition1,
                        "condition2": rep.condition2,
                        "condition3": rep.condition3,
                        "rank_drop_locus_finite": rep.rank_drop_locus_finite,
                    }),
                )
                .with("gradient_parallel", json!(family.gradient_parallel_to_minors()));
            if let Some(xs) = &rep.x_star {
                r = r.with("x_star", cx.v(xs));
                if rep.all_hold() {
                    let b = nd_basis(&family, xs.clone())?;
                    r = cx.basis_report(r, &b);
                }
            }
            r
        }
        Command::NdDecompose => {
            if n < 3 {
                return Err(Failure::Usage("nd-decompose needs at least three variables".into()));
            }
            let mut fs = cx.fields()?;
            if fs.len() != n {
                return Err(Failure::Usage(format!(
                    "nd-decompose takes {} family fields followed by the target field",
                    n - 1
                )));
            }
            let target = fs.pop().expect("nonempty");
            match cx.nd_parts(fs)? {
                Ok((family, xs)) => {
                    let d = nd_decompose(&family, &xs, &target)?;
                    Report::ok()
                        .with("x_star", cx.v(&xs))
                        .with("decomposition", Value::Array(d.coefficients.iter().map(|c| cx.p(c)).collect()))
                }
                Err(r) => r,
            }
        }
        Command::Oracle => {
            let degree = job.degree.ok_or_else(|| Failure::Usage("oracle needs --degree N".into()))?;
            let space = solve_truncated(f, degree)?;
            let basis: Vec<Value> = space
                .basis
                .iter()
                .map(|(x, k)| json!({"field": cx.v(x), "cofactor": cx.p(k.value())}))
                .collect();
            Report::ok()
                .with("degree", json!(degree))
                .with("dimension", json!(space.dimension()))
                .with("dimension_recheck", json!(truncated_dimension_permuted(f, degree)?))
                .with("basis", Value::Array(basis))
        }
        Command::Certify => {
            let degree = job.degree.ok_or_else(|| Failure::Usage("certify needs --degree N".into()))?;
            let basis = if n == 2 {
                match cx.planar_basis()? {
                    Ok(b) => b,
                    Err(r) => return Ok(r),
                }
            } else {
                match cx.nd_parts(cx.fields()?)? {
                    Ok((family, xs)) => nd_basis(&family, xs)?,
                    Err(r) => return Ok(r),
                }
            };
            let space = solve_truncated(f, degree)?;
            let cert = span_certify(&basis, &space)?;
            let failures: Vec<Value> = cert
                .failures()
                .map(|e| {
                    let reason = match &e.outcome {
                        Err(err) => err.to_string(),
                        Ok(_) => "nonzero residual".to_string(),
                    };
                    json!({"index": e.index, "field": cx.v(&e.field), "reason": reason})
                })
                .collect();
            let certified = cert.entries.len() - failures.len();
            let r = if failures.is_empty() { Report::ok() } else { Report::negative("NotInSpan") };
            cx.basis_report(r, &basis)
                .with("degree", json!(degree))
                .with("dimension", json!(space.dimension()))
                .with("certified", json!(certified))
                .with("independent", json!(independence_certify(&basis)))
                .with("failures", Value::Array(failures))
        }
    };
    Ok(report)
}

fn check_vars(vars: &[String]) -> Result<(), Failure> {
    if vars.is_empty() {
        return Err(Failure::Usage("--vars must name at least one variable".into()));
    }
    for (i, v) in vars.iter().enumerate() {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Failure::Usage(format!("invalid variable name '{v}'")));
        }
        if vars[..i].contains(v) {
            return Err(Failure::Usage(format!("duplicate variable '{v}'")));
        }
    }
    Ok(())
}

/// Runs one job. Mathematical negatives exit 1, misuse exits 2.
pub fn run(job: &JobSpec) -> Report {
    match execute(job) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => Report::usage(m),
        Err(Failure::Parse(what, e)) => Report::usage(format!("parse error in {what} {e}"))
            .with("offset", json!(e.offset))
            .with("expected", json!(e.expected)),
        Err(Failure::Core(e)) if e.is_negative_answer() => {
            let status = match e {
                Error::NotInvariant => "NotInvariant",
                _ => "NotInSpan",
            };
            Report::negative(status)
        }
        Err(Failure::Core(e)) => Report::usage(e.to_string()),
    }
}

/// Renders a single job's report.
pub fn render(job: &JobSpec, report: &Report) -> String {
    if job.machine {
        let mut s = serde_json::to_string_pretty(&report.to_json(job)).expect("json");
        s.push('\n');
        s
    } else {
        report.to_text()
    }
}

/// Runs `command` over every corpus entry; the exit code is the worst one.
pub fn run_corpus(command: Command, corpus: &Corpus, template: &JobSpec) -> (ExitCode, String) {
    let mut worst = ExitCode::Success;
    let mut results = Vec::new();
    let mut text = String::new();
    for entry in &corpus.entry {
        let job = entry_job(command, entry, template);
        let report = if command.applies_to(entry.vars.len()) {
            run(&job)
        } else {
            Report { status: "skipped".into(), exit: ExitCode::Success, fields: Vec::new() }
        };
        worst = worst.max_code(report.exit);
        if job.machine {
            let mut v = report.to_json(&job);
            v.as_object_mut().expect("object").insert("name".into(), json!(entry.name));
            results.push(v);
        } else {
            text.push_str(&format!("== {} ({})\n", entry.name, entry.f));
            text.push_str(&report.to_text());
        }
    }
    if template.machine {
        let doc = json!({"command": command.name(), "results": results});
        let mut s = serde_json::to_string_pretty(&doc).expect("json");
        s.push('\n');
        (worst, s)
    } else {
        (worst, text)
    }
}

fn entry_job(command: Command, entry: &Entry, template: &JobSpec) -> JobSpec {
    let mut fields = entry.fields.clone();
    fields.extend(template.fields.iter().cloned());
    JobSpec {
        command,
        f: entry.f.clone(),
        vars: entry.vars.clone(),
        fields,
        degree: template.degree,
        weights: template.weights,
        machine: template.machine,
    }
}

impl ExitCode {
    fn max_code(self, other: ExitCode) -> ExitCode {
        if (other as i32) > (self as i32) {
            other
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn command_names_round_trip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
        }
        assert!("frobnicate".parse::<Command>().is_err());
    }

    #[test]
    fn duplicate_vars_are_usage_errors() {
        let job = JobSpec::new(Command::Weights, "x", &["x", "x"]);
        assert_eq!(run(&job).exit, ExitCode::Usage);
    }

    #[test]
    fn text_rendering_nests() {
        let r = Report::ok().with("a", json!(["p", "q"])).with("b", json!({"c": 1}));
        assert_eq!(r.to_text(), "status: ok\na:\n  [0]: p\n  [1]: q\nb:\n  c: 1\n");
    }
}
