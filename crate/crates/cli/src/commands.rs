use std::path::Path;

use serde_json::json;
use srtriple::beltrami::{
    classify_interval, ds_ads_transform, ds_ads_transform_f64, embed, sigma, LorentzMatrix, MetricKind, Signature,
};
use srtriple::catalog::{
    basis24, format_combination, generator, lorentz, signed_field, structure_table, translations, translations_minus,
    translations_plus, AlgebraName, Basis, GeneratorId,
};
use srtriple::exact::rational::to_f64;
use srtriple::exact::{int, parse_rational, sqrt_exact, RatMatrix, Rational};
use srtriple::fields::Point;
use srtriple::lft::ProjectiveMatrix;
use srtriple::metric::killing_check;
use srtriple::verify::{run_suite, SuiteName};
use srtriple::Error;

use crate::output::{bracket_rows, combination_json, csv, floats, generator_names, json, line, Output};
use crate::{Cli, Command, Format, Mode};

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn io(e: impl std::fmt::Display) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidGenerator(_) => 2,
            _ => 3,
        };
        Self { code, message: e.to_string() }
    }
}

type Res = Result<Output, CliError>;

/// λ and, when it is rational, the radius l = λ^(-1/2).
struct Curvature {
    lam: Rational,
    l: Option<Rational>,
}

impl Curvature {
    fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        if let Some(lam) = &cli.lambda {
            let l = if lam > &int(0) { sqrt_exact(&lam.recip()) } else { None };
            return Ok(Self { lam: lam.clone(), l });
        }
        let l = cli.l.clone().unwrap_or_else(|| int(1));
        if l == int(0) {
            return Err(CliError::usage("--l must be nonzero"));
        }
        Ok(Self { lam: (&l * &l).recip(), l: Some(l) })
    }

    fn radius(&self) -> Result<&Rational, CliError> {
        self.l.as_ref().ok_or_else(|| {
            Error::NotPerfectSquare(format!("the radius l² = 1/λ = {}", self.lam.recip()))
                .into()
        })
    }
}

pub fn run(cli: &Cli) -> Res {
    let curv = Curvature::from_cli(cli)?;
    match &cli.command {
        Command::Basis => basis(cli.format),
        Command::Bracket { a, b } => bracket(cli.format, a, b),
        Command::Table { algebra } => table(cli.format, algebra),
        Command::Verify { suite } => verify(cli, &curv, suite),
        Command::Transform { kind, a, point } => transform(cli, &curv, kind, a, point),
        Command::Classify { kind, a, x } => classify(cli.format, &curv, kind, a, x),
        Command::Embed { kind, x } => embed_cmd(cli, &curv, kind, x),
        Command::Act { point } => act(cli, &curv, point),
        Command::Killing { kind, generators } => killing(cli, &curv, kind, generators),
    }
}

fn point(s: &str) -> Result<Point, CliError> {
    Ok(s.parse::<Point>()?)
}

fn kind(s: &str) -> Result<MetricKind, CliError> {
    Ok(s.parse::<MetricKind>()?)
}

fn curved(s: &str) -> Result<Signature, CliError> {
    kind(s)?
        .signature()
        .ok_or_else(|| CliError::usage(format!("'{s}' has no curvature; expected ds or ads")))
}

fn read_matrix(path: Option<&Path>, size: usize) -> Result<Option<RatMatrix>, CliError> {
    let Some(path) = path else { return Ok(None) };
    let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let rows: Vec<Vec<String>> =
        serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(CliError::usage(format!("{}: expected a {size}×{size} matrix", path.display())));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<srtriple::Result<Vec<_>>>())
        .collect::<srtriple::Result<Vec<_>>>()?;
    Ok(Some(RatMatrix::from_rows(rows)?))
}

fn basis(format: Format) -> Res {
    let ids = basis24();
    let fields = ids.iter().map(|&g| generator(g)).collect::<srtriple::Result<Vec<_>>>()?;
    let text = match format {
        Format::Text => ids.iter().zip(&fields).map(|(g, f)| line(format!("{g} = {f}"))).collect(),
        Format::Json => json(&json!(ids
            .iter()
            .zip(&fields)
            .map(|(g, f)| json!({
                "gen": g,
                "components": f.components().iter().map(ToString::to_string).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>())),
        Format::Csv => csv(
            &["gen", "d0", "d1", "d2", "d3"],
            ids.iter().zip(&fields).map(|(g, f)| {
                std::iter::once(g.to_string()).chain(f.components().iter().map(ToString::to_string)).collect::<Vec<_>>()
            }),
        )?,
    };
    Ok(Output::ok(text))
}

fn bracket(format: Format, a: &str, b: &str) -> Res {
    let (x, y) = (GeneratorId::parse_signed(a)?, GeneratorId::parse_signed(b)?);
    let f = signed_field(x)?.bracket(&signed_field(y)?);
    let c = Basis::standard().decompose(&f).map_err(Error::from)?;
    let text = match format {
        Format::Text => line(format_combination(&c)),
        Format::Json => json(&json!({ "a": a, "b": b, "result": combination_json(&c) })),
        Format::Csv => csv(&["a", "b", "gen", "coeff"], bracket_rows(a, b, &c))?,
    };
    Ok(Output::ok(text))
}

fn table(format: Format, algebra: &str) -> Res {
    let t = structure_table(algebra.parse::<AlgebraName>()?)?;
    let text = match format {
        Format::Text => {
            let mut out = line(format!("basis: {}", generator_names(t.basis()).join(" ")));
            for (a, b, c) in t.entries() {
                out.push_str(&line(format!("[{a}, {b}] = {}", format_combination(&c))));
            }
            out
        }
        Format::Json => json(&serde_json::to_value(&t).expect("table serializes")),
        Format::Csv => csv(
            &["a", "b", "gen", "coeff"],
            t.entries().flat_map(|(a, b, c)| bracket_rows(&a.to_string(), &b.to_string(), &c)),
        )?,
    };
    Ok(Output::ok(text))
}

fn verify(cli: &Cli, curv: &Curvature, suite: &str) -> Res {
    let name = suite.parse::<SuiteName>()?;
    let report = run_suite(name, cli.seed, cli.samples, &curv.lam);
    let text = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => line(report.to_json()),
        Format::Csv => csv(
            &["suite", "check", "status", "anchor", "witness"],
            report.checks.iter().map(|c| {
                vec![
                    report.suite.to_string(),
                    c.name.clone(),
                    if c.passed() { "pass".into() } else { "fail".into() },
                    c.anchor.clone(),
                    c.witness.clone().unwrap_or_default(),
                ]
            }),
        )?,
    };
    Ok(Output { text, passed: report.passed() })
}

fn transform(cli: &Cli, curv: &Curvature, kind: &str, a: &str, x: &str) -> Res {
    let s = curved(kind)?;
    let (a, x) = (point(a)?, point(x)?);
    let l = match read_matrix(cli.matrix_file.as_deref(), 4)? {
        Some(m) => LorentzMatrix::new(m)?,
        None => LorentzMatrix::identity(),
    };
    if cli.mode == Mode::Float {
        let y = ds_ads_transform_f64(s, &a, &l, &x, &curv.lam)?;
        let text = match cli.format {
            Format::Text => line(floats(&y)),
            Format::Json => json(&json!({ "point": y, "precision": "f64" })),
            Format::Csv => csv(&["x0", "x1", "x2", "x3", "precision"], [y.iter().map(ToString::to_string).chain(["f64".to_string()]).collect::<Vec<_>>()])?,
        };
        return Ok(Output::ok(text));
    }
    let y = ds_ads_transform(s, &a, &l, &x, &curv.lam)?;
    point_output(cli.format, &y)
}

fn point_output(format: Format, y: &Point) -> Res {
    let text = match format {
        Format::Text => line(y),
        Format::Json => json(&json!({ "point": y })),
        Format::Csv => csv(&["x0", "x1", "x2", "x3"], [y.0.iter().map(ToString::to_string).collect::<Vec<_>>()])?,
    };
    Ok(Output::ok(text))
}

fn classify(format: Format, curv: &Curvature, kind_name: &str, a: &str, x: &str) -> Res {
    let k = kind(kind_name)?;
    let r = classify_interval(k, &point(a)?, &point(x)?, &curv.lam)?;
    let text = match format {
        Format::Text => line(r.as_str()),
        Format::Json => json(&json!({ "kind": k, "interval": r })),
        Format::Csv => csv(&["kind", "interval"], [vec![k.as_str(), r.as_str()]])?,
    };
    Ok(Output::ok(text))
}

fn embed_cmd(cli: &Cli, curv: &Curvature, kind: &str, x: &str) -> Res {
    let s = curved(kind)?;
    let x = point(x)?;
    let l = curv.radius()?;
    if cli.mode == Mode::Float {
        let sig = sigma(s, &x, &x, &curv.lam);
        if sig <= int(0) {
            return Err(Error::OutOfDomain(format!("σ(x) = {sig} is not positive")).into());
        }
        let root = to_f64(&sig).sqrt();
        let xi: Vec<f64> = x.0.iter().chain([l]).map(|c| to_f64(c) / root).collect();
        let text = match cli.format {
            Format::Text => line(floats(&xi)),
            Format::Json => json(&json!({ "xi": xi, "precision": "f64" })),
            Format::Csv => csv(&["xi0", "xi1", "xi2", "xi3", "xi4", "precision"], [xi.iter().map(ToString::to_string).chain(["f64".to_string()]).collect::<Vec<_>>()])?,
        };
        return Ok(Output::ok(text));
    }
    let xi = embed(s, &x, l)?;
    let text = match cli.format {
        Format::Text => line(&xi),
        Format::Json => json(&serde_json::to_value(&xi).expect("embedding serializes")),
        Format::Csv => csv(&["xi0", "xi1", "xi2", "xi3", "xi4"], [xi.xi.iter().map(ToString::to_string).collect::<Vec<_>>()])?,
    };
    Ok(Output::ok(text))
}

fn act(cli: &Cli, curv: &Curvature, p: &str) -> Res {
    let m = read_matrix(cli.matrix_file.as_deref(), 5)?.ok_or_else(|| CliError::usage("act needs --matrix-file"))?;
    let t = ProjectiveMatrix::new(m)?;
    let y = t.act(&point(p)?, curv.radius()?)?;
    point_output(cli.format, &y)
}

fn killing(cli: &Cli, curv: &Curvature, kind_name: &str, names: &[String]) -> Res {
    let k = kind(kind_name)?;
    let gens: Vec<GeneratorId> = if names.is_empty() {
        let translations = match k {
            MetricKind::Mink => translations(),
            MetricKind::DS => translations_plus(),
            MetricKind::AdS => translations_minus(),
        };
        translations.into_iter().chain(lorentz()).collect()
    } else {
        names.iter().map(|n| GeneratorId::parse_signed(n).map(|s| s.id)).collect::<srtriple::Result<_>>()?
    };
    let reports = killing_check(&gens, k, cli.samples, cli.seed, &curv.lam)?;
    let passed = reports.iter().all(|r| r.zero);
    let text = match cli.format {
        Format::Text => reports
            .iter()
            .map(|r| match &r.first_failure {
                None => line(format!("{} Killing on {}, {} points", r.generator, r.kind, r.samples)),
                Some(f) => line(format!("{} not Killing on {}: nonzero at ({})", r.generator, r.kind, f.point)),
            })
            .collect(),
        Format::Json => json(&serde_json::to_value(&reports).expect("reports serialize")),
        Format::Csv => csv(
            &["kind", "generator", "samples", "zero"],
            reports.iter().map(|r| vec![r.kind.to_string(), r.generator.to_string(), r.samples.to_string(), r.zero.to_string()]),
        )?,
    };
    Ok(Output { text, passed })
}
