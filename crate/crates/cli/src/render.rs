//! JSON shapes. Every number is a decimal string, rationals are "num/den".

use partlab_core::bounds::{BoundEnvelope, Classification, Threshold, Witness};
use partlab_core::scanner::{ScanReport, Violation};
use partlab_core::{PartSystem, RationalPolynomial};
use serde_json::{json, Value};

pub fn parts(system: &PartSystem) -> Value {
    system.parts().iter().map(|a| a.to_string()).collect()
}

pub fn coefficients(poly: &RationalPolynomial, len: usize) -> Value {
    (0..len).map(|i| poly.coeff(i).to_string()).collect()
}

pub fn envelope(env: &BoundEnvelope) -> Value {
    let len = env.system.k();
    json!({
        "kind": env.kind.name(),
        "main": coefficients(&env.main, len),
        "err_coeff": env.err_coeff.to_string(),
        "err_degree": env.err_degree.to_string(),
        "valid_from": env.valid_from.to_string(),
    })
}

pub fn threshold(t: &Threshold) -> Value {
    json!({
        "criterion": t.criterion.name(),
        "bound": t.bound.to_string(),
        "strict": t.strict,
        "value": t.value.to_string(),
        "condition": t.condition,
        "hypotheses_hold": t.hypotheses_hold,
        "alternatives": t.alternatives.iter().map(threshold).collect::<Vec<_>>(),
    })
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::SinglePart => json!({"type": "single_part", "text": w.to_string()}),
        Witness::CommonDivisor(d) => {
            json!({"type": "common_divisor", "divisor": d.to_string(), "text": w.to_string()})
        }
        Witness::TooFewParts(k) => {
            json!({"type": "too_few_parts", "k": k.to_string(), "text": w.to_string()})
        }
        Witness::NonCoprimeMultisubset { values, gcd, .. } => json!({
            "type": "non_coprime_multisubset",
            "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "gcd": gcd.to_string(),
            "text": w.to_string(),
        }),
    }
}

pub fn classification(c: &Classification) -> Value {
    let mut v = json!({
        "parts": parts(&c.system),
        "bo": c.bo_holds_eventually,
        "logconcave": c.logconcave_eventually,
        "bo_witness": c.bo_witness.as_ref().map(witness),
        "logconcave_witness": c.logconcave_witness.as_ref().map(witness),
    });
    if let Some(Witness::CommonDivisor(d)) = &c.bo_witness {
        v["witness_divisor"] = json!(d.to_string());
    }
    v
}

pub fn violation(v: &Violation) -> Value {
    match v {
        Violation::Bo { a, b, lhs, rhs } => json!({
            "a": a.to_string(), "b": b.to_string(), "lhs": lhs.to_string(), "rhs": rhs.to_string(),
        }),
        Violation::LogConcave { n, lhs, rhs } => json!({
            "n": n.to_string(), "lhs": lhs.to_string(), "rhs": rhs.to_string(),
        }),
        Violation::Envelope {
            n,
            value,
            lower,
            upper,
        } => json!({
            "n": n.to_string(), "value": value.to_string(),
            "lower": lower.to_string(), "upper": upper.to_string(),
        }),
        Violation::QuasiPolynomial { n, expected, got } => json!({
            "n": n.to_string(), "expected": expected.to_string(),
            "got": got.as_ref().map(|g| g.to_string()),
        }),
    }
}

pub fn report(r: &ScanReport, violations: &[&Violation]) -> Value {
    json!({
        "parts": parts(&r.system),
        "property": r.property.to_string(),
        "range": [r.lo.to_string(), r.hi.to_string()],
        "violation_count": violations.len().to_string(),
        "violations": violations.iter().map(|v| violation(v)).collect::<Vec<_>>(),
        "minimal_start": r.minimal_start.map(|n| n.to_string()),
        "horizon_bounded": true,
    })
}
