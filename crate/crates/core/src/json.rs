//! JSON encodings shared by the library and the command-line tool.
//!
//! Scalars: floats as `[re, im]` (a bare JSON number is read as a real
//! float), exact values as strings such as `"-3/2+1/4i"`.

use serde_json::{json, Map, Value};

use crate::algebra::{BinaryForm, Scalar, SymmetricTensor2, Transform2};
use crate::classify::ClassificationReport;
use crate::error::{Error, Result};
use crate::pde::{PdePrincipal, PdeReport};
use crate::roots::{PatternKind, ProjectivePoint, RootPattern};
use crate::spectra::{Count, EigenpairClass, Eigenpairs, SpectralSignature};

const ENTRY_NAMES: [&str; 5] = ["a", "b", "c", "d", "e"];

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Float(z) => json!([z.re, z.im]),
        Scalar::Exact(g) => Value::String(g.to_string()),
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Scalar::parse(s),
        Value::Number(n) => Scalar::real(n.as_f64().ok_or_else(|| bad("number out of range"))?),
        Value::Array(parts) => match parts.as_slice() {
            [re, im] => {
                let re = re.as_f64().ok_or_else(|| bad("complex parts must be numbers"))?;
                let im = im.as_f64().ok_or_else(|| bad("complex parts must be numbers"))?;
                Scalar::float(re, im)
            }
            _ => Err(bad("complex float must be [re, im]")),
        },
        _ => Err(bad(format!("expected a scalar, found {v}"))),
    }
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(format!("{what} must be a JSON object")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    field(obj, key)?
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| bad(format!("`{key}` must be a non-negative integer")))
}

fn scalar_array(v: &Value, what: &str) -> Result<Vec<Scalar>> {
    v.as_array().ok_or_else(|| bad(format!("`{what}` must be an array")))?.iter().map(scalar_from_json).collect()
}

fn scalars_to_json(s: &[Scalar]) -> Value {
    Value::Array(s.iter().map(scalar_to_json).collect())
}

pub fn form_to_json(f: &BinaryForm) -> Value {
    json!({ "degree": f.degree(), "coeffs": scalars_to_json(f.coeffs()) })
}

pub fn form_from_json(v: &Value) -> Result<BinaryForm> {
    let obj = object(v, "form")?;
    let degree = usize_field(obj, "degree")?;
    let coeffs = scalar_array(field(obj, "coeffs")?, "coeffs")?;
    if coeffs.len() != degree + 1 {
        return Err(Error::CoefficientCount { expected: degree + 1, got: coeffs.len() });
    }
    BinaryForm::supported(coeffs)
}

pub fn tensor_to_json(t: &SymmetricTensor2) -> Value {
    let entries: Map<String, Value> =
        ENTRY_NAMES.iter().zip(t.entries()).map(|(k, s)| (k.to_string(), scalar_to_json(s))).collect();
    json!({ "order": t.order(), "entries": entries })
}

pub fn tensor_full_to_json(t: &SymmetricTensor2) -> Value {
    json!({ "order": t.order(), "full": scalars_to_json(&t.full()) })
}

pub fn tensor_from_json(v: &Value) -> Result<SymmetricTensor2> {
    let obj = object(v, "tensor")?;
    let order = usize_field(obj, "order")?;
    if order != 3 && order != 4 {
        return Err(Error::UnsupportedDegree(order));
    }
    match (obj.get("entries"), obj.get("full")) {
        (Some(entries), None) => {
            let map = object(entries, "entries")?;
            let names = &ENTRY_NAMES[..=order];
            if let Some(extra) = map.keys().find(|k| !names.contains(&k.as_str())) {
                return Err(bad(format!("unexpected tensor entry `{extra}`")));
            }
            let values = names.iter().map(|k| scalar_from_json(field(map, k)?)).collect::<Result<_>>()?;
            SymmetricTensor2::new(values)
        }
        (None, Some(full)) => SymmetricTensor2::from_full(order, scalar_array(full, "full")?),
        _ => Err(bad("tensor needs exactly one of `entries` or `full`")),
    }
}

pub fn transform_to_json(p: &Transform2) -> Value {
    let row = |r: usize| json!([scalar_to_json(p.get(r, 0)), scalar_to_json(p.get(r, 1))]);
    json!({ "p": [row(0), row(1)] })
}

pub fn transform_from_json(v: &Value) -> Result<Transform2> {
    let obj = object(v, "transform")?;
    let rows = field(obj, "p")?.as_array().ok_or_else(|| bad("`p` must be a 2×2 array"))?;
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        entries.extend(scalar_array(row, "p")?);
    }
    if rows.len() != 2 || entries.len() != 4 {
        return Err(bad("`p` must be a 2×2 array"));
    }
    let mut it = entries.into_iter();
    let mut next = || it.next().expect("four entries");
    Transform2::new(next(), next(), next(), next())
}

pub fn point_to_json(p: &ProjectivePoint) -> Value {
    json!([scalar_to_json(p.x()), scalar_to_json(p.y())])
}

pub fn eigenpair_to_json(e: &EigenpairClass) -> Value {
    json!({
        "lambda": scalar_to_json(&e.lambda),
        "direction": point_to_json(&e.direction),
        "multiplicity": e.multiplicity,
        "zero": e.is_zero,
    })
}

pub fn eigenpairs_to_json(pairs: &Eigenpairs) -> Value {
    match pairs {
        Eigenpairs::Finite(list) => {
            json!({ "infinite": false, "classes": list.iter().map(eigenpair_to_json).collect::<Vec<_>>() })
        }
        Eigenpairs::Infinite { degenerate } => json!({ "infinite": true, "degenerate": degenerate }),
    }
}

fn count_to_json(c: Count) -> Value {
    match c {
        Count::Finite(n) => json!(n),
        Count::Infinite => json!("inf"),
    }
}

pub fn signature_to_json(s: &SpectralSignature) -> Value {
    json!({ "classes": count_to_json(s.classes), "zeros": count_to_json(s.zeros), "degenerate": s.degenerate })
}

pub fn pattern_to_json(p: &RootPattern) -> Value {
    let entries: Vec<Value> = p
        .entries
        .iter()
        .map(|e| {
            let kind = match e.kind {
                PatternKind::Real => "real",
                PatternKind::Pair => "pair",
            };
            json!({ "multiplicity": e.multiplicity, "kind": kind })
        })
        .collect();
    Value::Array(entries)
}

fn optional_scalar(s: Option<&Scalar>) -> Value {
    s.map_or(Value::Null, scalar_to_json)
}

pub fn report_to_json(r: &ClassificationReport) -> Value {
    json!({
        "complexType": r.complex_type.type_id,
        "realType": r.real_type.as_ref().map(|t| t.type_id),
        "signature": signature_to_json(&r.signature),
        "rootPattern": r.root_pattern.as_ref().map_or(Value::Null, pattern_to_json),
        "mu": optional_scalar(r.mu()),
        "method": r.method.name(),
    })
}

pub fn pde_to_json(p: &PdePrincipal) -> Value {
    json!({ "order": p.order(), "coeffs": scalars_to_json(p.coeffs()), "lower": p.has_lower_order() })
}

pub fn pde_from_json(v: &Value) -> Result<PdePrincipal> {
    let obj = object(v, "PDE principal part")?;
    let order = usize_field(obj, "order")?;
    let coeffs = scalar_array(field(obj, "coeffs")?, "coeffs")?;
    let lower = match obj.get("lower") {
        None => false,
        Some(b) => b.as_bool().ok_or_else(|| bad("`lower` must be a boolean"))?,
    };
    PdePrincipal::new(order, coeffs, lower)
}

pub fn pde_report_to_json(r: &PdeReport) -> Value {
    json!({
        "realType": r.real_type.type_id,
        "canonicalText": r.canonical_text,
        "mu": optional_scalar(r.mu.as_ref()),
    })
}

/// A classifiable input decoded from JSON.
#[derive(Clone, Debug, PartialEq)]
pub enum JsonInput {
    Form(BinaryForm),
    Tensor(SymmetricTensor2),
    Pde(PdePrincipal),
}

/// Decodes a form (`degree`), tensor (`entries`/`full`) or PDE principal
/// part (`order` with `coeffs`).
pub fn parse_input(text: &str) -> Result<JsonInput> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let obj = object(&v, "input")?;
    if obj.contains_key("degree") {
        form_from_json(&v).map(JsonInput::Form)
    } else if obj.contains_key("entries") || obj.contains_key("full") {
        tensor_from_json(&v).map(JsonInput::Tensor)
    } else if obj.contains_key("coeffs") {
        pde_from_json(&v).map(JsonInput::Pde)
    } else {
        Err(bad("expected a form, tensor or PDE object"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::tolerance::Tolerances;

    #[test]
    fn scalar_encodings() {
        assert_eq!(scalar_to_json(&Scalar::ratio(-3, 2)), json!("-3/2"));
        assert_eq!(scalar_to_json(&Scalar::float(0.5, -1.0).unwrap()), json!([0.5, -1.0]));
        let g = Scalar::parse("1/2+3/4i").unwrap();
        assert_eq!(scalar_from_json(&scalar_to_json(&g)).unwrap(), g);
        assert_eq!(scalar_from_json(&json!(2.5)).unwrap(), Scalar::real(2.5).unwrap());
        assert!(scalar_from_json(&json!([1.0])).is_err());
        assert!(scalar_from_json(&json!(true)).is_err());
    }

    #[test]
    fn tensor_both_encodings() {
        let t = SymmetricTensor2::from_ints(&[1, 2, 4, 8]).unwrap();
        assert_eq!(tensor_from_json(&tensor_to_json(&t)).unwrap(), t);
        assert_eq!(tensor_from_json(&tensor_full_to_json(&t)).unwrap(), t);
        let v = json!({"order": 3, "full": ["1", "2", "3", "4", "2", "4", "4", "8"]});
        assert_eq!(tensor_from_json(&v), Err(Error::AsymmetricTensor));
        let v = json!({"order": 3, "entries": {"a": 1, "b": 2, "c": 3}});
        assert!(matches!(tensor_from_json(&v), Err(Error::Json(_))));
    }

    #[test]
    fn form_transform_and_pde_round_trip() {
        let f = BinaryForm::from_ints(&[1, 0, -3, 0]);
        assert_eq!(form_from_json(&form_to_json(&f)).unwrap(), f);
        let bad_degree = json!({"degree": 4, "coeffs": ["1", "0", "0", "0"]});
        assert!(matches!(form_from_json(&bad_degree), Err(Error::CoefficientCount { .. })));
        let p = Transform2::from_ints(1, 1, 0, 1).unwrap();
        assert_eq!(transform_from_json(&transform_to_json(&p)).unwrap(), p);
        let pde = PdePrincipal::new(
            4,
            vec![Scalar::int(1), Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()],
            true,
        )
        .unwrap();
        assert_eq!(pde_from_json(&pde_to_json(&pde)).unwrap(), pde);
    }

    #[test]
    fn report_shape() {
        let t = SymmetricTensor2::from_ints(&[1, 2, 4, 8]).unwrap();
        let r = crate::classify::classify_tensor(&t, &Tolerances::default()).unwrap();
        let v = report_to_json(&r);
        assert_eq!(v["complexType"], json!(2));
        assert_eq!(v["realType"], json!(2));
        assert_eq!(v["signature"], json!({"classes": 2, "zeros": 1, "degenerate": false}));
        assert_eq!(v["rootPattern"], json!([{"multiplicity": 3, "kind": "real"}]));
        assert_eq!(v["mu"], Value::Null);
        assert_eq!(v["method"], json!("spectral"));
        let r = classify(&BinaryForm::from_ints(&[1, 0, 2, 0, 1]), &Tolerances::default()).unwrap();
        let v = report_to_json(&r);
        assert_eq!(v["signature"]["classes"], json!("inf"));
        assert_eq!(v["method"], json!("root-fallback"));
    }

    #[test]
    fn input_detection() {
        assert!(matches!(parse_input(r#"{"degree":3,"coeffs":["1","0","0","0"]}"#), Ok(JsonInput::Form(_))));
        assert!(matches!(parse_input(r#"{"order":3,"entries":{"a":1,"b":2,"c":4,"d":8}}"#), Ok(JsonInput::Tensor(_))));
        assert!(matches!(parse_input(r#"{"order":3,"coeffs":["1","0","0","0"]}"#), Ok(JsonInput::Pde(_))));
        assert!(matches!(parse_input("{not json"), Err(Error::Json(_))));
        assert!(matches!(parse_input("[1,2]"), Err(Error::Json(_))));
    }
}
