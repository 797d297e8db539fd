use std::fmt::Write as _;
use std::path::Path;

use num_traits::{Signed, ToPrimitive, Zero};
use partlab_core::asymptotics::{almkvist_polynomial_part, netto_leading, sigma_table};
use partlab_core::bounds::{
    bo_threshold, classify, ek_constant, f_constant, four_parts_envelope, leading_term_envelope,
    logconcavity_threshold, stable_part_envelope, three_term_envelope, BoundEnvelope,
};
use partlab_core::quasipoly::{cnt_quasipolynomial, fit_quasipolynomial};
use partlab_core::scanner::{scan_bo, scan_logconcavity, Violation};
use partlab_core::{ExactRational, PartSystem};
use serde_json::{json, Value};

use crate::args::{Command, Format, Kind, QpMethod};
use crate::{cache, render, CliError};

fn system(parts: &[i64]) -> Result<PartSystem, CliError> {
    Ok(PartSystem::new(parts)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(out: Option<&Path>, value: &Value) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    emit(out, &text)
}

fn or_error<T>(r: partlab_core::Result<T>, f: impl FnOnce(T) -> Value) -> Value {
    match r {
        Ok(v) => f(v),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Eval { common, n, cache } => {
            let s = system(&common.parts)?;
            let table = cache::table(&s, n as usize, cache.as_deref())
                .map_err(|e| CliError::Io(e.to_string()))?;
            emit(
                common.out.as_deref(),
                &format!("{}\n", table.value(n as usize)),
            )
        }
        Command::DeltaCsv {
            common,
            n_max,
            approx,
            cache,
        } => {
            if n_max < 2 {
                return Err(CliError::Usage("--n-max must be at least 2".into()));
            }
            let s = system(&common.parts)?;
            let table = cache::table(&s, n_max as usize + 1, cache.as_deref())
                .map_err(|e| CliError::Io(e.to_string()))?;
            let mut text = String::from(if approx {
                "n,p,delta,sign,delta_approx\n"
            } else {
                "n,p,delta,sign\n"
            });
            for n in 2..=n_max as usize {
                let d = table.delta(n).expect("table covers n + 1");
                let sign = if d.is_zero() {
                    0
                } else if d.is_negative() {
                    -1
                } else {
                    1
                };
                write!(text, "{n},{},{d},{sign}", table.value(n)).unwrap();
                if approx {
                    write!(text, ",{:e}", d.to_f64().unwrap_or(f64::NAN)).unwrap();
                }
                text.push('\n');
            }
            emit(common.out.as_deref(), &text)
        }
        Command::Qp {
            common,
            method,
            format,
        } => {
            let s = system(&common.parts)?;
            let qp = match method {
                QpMethod::Fit => fit_quasipolynomial(&s)?,
                QpMethod::Cnt => cnt_quasipolynomial(&s)?,
            };
            let k = s.k();
            match format {
                Format::Csv => {
                    let mut text = String::from("residue,degree,coefficient\n");
                    for (r, p) in qp.polys().iter().enumerate() {
                        for d in 0..k {
                            writeln!(text, "{r},{d},{}", p.coeff(d)).unwrap();
                        }
                    }
                    emit(common.out.as_deref(), &text)
                }
                Format::Json => {
                    let stable = qp.stable_coefficients();
                    let polys: Vec<Value> = qp
                        .polys()
                        .iter()
                        .enumerate()
                        .map(|(r, p)| json!({"residue": r.to_string(), "coefficients": render::coefficients(p, k)}))
                        .collect();
                    emit_json(
                        common.out.as_deref(),
                        &json!({
                            "parts": render::parts(&s),
                            "period": qp.period().to_string(),
                            "polys": polys,
                            "stable": {
                                "lowest_degree": stable.lowest_degree.to_string(),
                                "coefficients": render::coefficients(&stable.common, k),
                            },
                        }),
                    )
                }
            }
        }
        Command::Sigma { common, max } => {
            let s = system(&common.parts)?;
            let table = sigma_table(&s, max.unwrap_or(s.k()));
            let parts: Vec<Value> = (1..=s.k())
                .filter_map(|j| {
                    almkvist_polynomial_part(&s, j)
                        .ok()
                        .map(|p| json!({"j": j.to_string(), "coefficients": render::coefficients(&p, s.k())}))
                })
                .collect();
            emit_json(
                common.out.as_deref(),
                &json!({
                    "parts": render::parts(&s),
                    "sigma": table.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "leading": or_error(netto_leading(&s), |c| json!(c.to_string())),
                    "polynomial_parts": parts,
                }),
            )
        }
        Command::Bounds { common, kind, j } => {
            let s = system(&common.parts)?;
            let build = |k: Kind| -> partlab_core::Result<BoundEnvelope> {
                match k {
                    Kind::LeadingTerm => leading_term_envelope(&s),
                    Kind::FourParts => four_parts_envelope(&s),
                    Kind::ThreeTerm => three_term_envelope(&s),
                    Kind::StablePart => stable_part_envelope(&s, j),
                }
            };
            let envelopes: Vec<Value> = match kind {
                Some(k) => vec![render::envelope(&build(k)?)],
                None => [
                    Kind::LeadingTerm,
                    Kind::FourParts,
                    Kind::ThreeTerm,
                    Kind::StablePart,
                ]
                .into_iter()
                .map(|k| match build(k) {
                    Ok(e) => render::envelope(&e),
                    Err(e) => json!({ "kind": kind_name(k), "error": e.to_string() }),
                })
                .collect(),
            };
            emit_json(
                common.out.as_deref(),
                &json!({
                    "parts": render::parts(&s),
                    "envelopes": envelopes,
                    "E_k": or_error(ek_constant(&s), |c| json!(c.to_string())),
                    "F": or_error(f_constant(&s), |c| json!(c.to_string())),
                }),
            )
        }
        Command::Thresholds { common } => {
            let s = system(&common.parts)?;
            let bo = bo_threshold(&s);
            let lc = logconcavity_threshold(&s);
            if let (Err(e), Err(_)) = (&bo, &lc) {
                return Err(CliError::Core(e.clone()));
            }
            emit_json(
                common.out.as_deref(),
                &json!({
                    "parts": render::parts(&s),
                    "bo": or_error(bo, |t| render::threshold(&t)),
                    "logconcave": or_error(lc, |t| json!({
                        "plain": render::threshold(&t.plain),
                        "strengthened": t.strengthened.as_ref().map(render::threshold),
                    })),
                }),
            )
        }
        Command::Classify { common } => {
            let s = system(&common.parts)?;
            emit_json(
                common.out.as_deref(),
                &render::classification(&classify(&s)),
            )
        }
        Command::ScanBo {
            common,
            max,
            from,
            format,
            assert,
        } => {
            let s = system(&common.parts)?;
            let report = scan_bo(&s, max)?;
            let shown: Vec<&Violation> = report
                .violations
                .iter()
                .filter(|v| v.position() >= from)
                .collect();
            match format {
                Format::Json => emit_json(common.out.as_deref(), &render::report(&report, &shown))?,
                Format::Csv => {
                    let mut text = String::from("a,b,lhs,rhs\n");
                    for v in &shown {
                        if let Violation::Bo { a, b, lhs, rhs } = v {
                            writeln!(text, "{a},{b},{lhs},{rhs}").unwrap();
                        }
                    }
                    emit(common.out.as_deref(), &text)?;
                }
            }
            if assert && !shown.is_empty() {
                return Err(CliError::Assertion(format!("{} violations", shown.len())));
            }
            Ok(())
        }
        Command::ScanLogc {
            common,
            lo,
            hi,
            u,
            e,
            format,
            assert,
            assert_start,
        } => {
            let s = system(&common.parts)?;
            let strengthen = match (u, e) {
                (None, None) => None,
                (u, e) => {
                    let u: ExactRational = match u {
                        Some(text) => text.parse().map_err(|_| {
                            CliError::Usage(format!("--u: not a rational number: {text}"))
                        })?,
                        None => ExactRational::from_integer(1.into()),
                    };
                    Some((u, e.unwrap_or(1)))
                }
            };
            let report = scan_logconcavity(&s, lo, hi, strengthen)?;
            let shown: Vec<&Violation> = report.violations.iter().collect();
            match format {
                Format::Json => emit_json(common.out.as_deref(), &render::report(&report, &shown))?,
                Format::Csv => {
                    let mut text = String::from("n,lhs,rhs\n");
                    for v in &shown {
                        if let Violation::LogConcave { n, lhs, rhs } = v {
                            writeln!(text, "{n},{lhs},{rhs}").unwrap();
                        }
                    }
                    emit(common.out.as_deref(), &text)?;
                }
            }
            if assert && !shown.is_empty() {
                return Err(CliError::Assertion(format!("{} violations", shown.len())));
            }
            if let Some(start) = assert_start {
                if let Some(last) = shown
                    .iter()
                    .map(|v| v.position())
                    .filter(|&n| n >= start)
                    .max()
                {
                    return Err(CliError::Assertion(format!(
                        "violation at n = {last} >= {start}"
                    )));
                }
            }
            Ok(())
        }
    }
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::LeadingTerm => "leading-term",
        Kind::FourParts => "four-parts",
        Kind::ThreeTerm => "three-term",
        Kind::StablePart => "stable-part",
    }
}
