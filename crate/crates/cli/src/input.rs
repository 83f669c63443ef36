//! Reading and decoding command-line inputs.

use std::fs;
use std::io::Read;
use std::path::Path;

use binform::algebra::tensor_to_form;
use binform::json::{self, JsonInput};
use binform::pde::{parse_pde, pde_to_form, PdePrincipal};
use binform::{BinaryForm, Error, Result, Scalar, SymmetricTensor2, Transform2};

use crate::Mode;

/// A decoded input, kept in the shape the user supplied it.
#[derive(Clone, Debug)]
pub enum Input {
    Form(BinaryForm),
    Tensor(SymmetricTensor2),
    Pde(PdePrincipal),
}

impl Input {
    pub fn form(&self) -> BinaryForm {
        match self {
            Input::Form(f) => f.clone(),
            Input::Tensor(t) => tensor_to_form(t),
            Input::Pde(p) => pde_to_form(p),
        }
    }

    fn convert(self, f: impl Fn(&Scalar) -> Scalar) -> Result<Self> {
        Ok(match self {
            Input::Form(g) => Input::Form(BinaryForm::new(g.coeffs().iter().map(&f).collect())?),
            Input::Tensor(t) => Input::Tensor(SymmetricTensor2::new(t.entries().iter().map(&f).collect())?),
            Input::Pde(p) => {
                Input::Pde(PdePrincipal::new(p.order(), p.coeffs().iter().map(&f).collect(), p.has_lower_order())?)
            }
        })
    }

    pub fn in_mode(self, mode: Mode) -> Result<Self> {
        match mode {
            Mode::Float => self.convert(Scalar::to_float),
            Mode::Exact => self.convert(Scalar::to_exact),
        }
    }
}

/// The argument itself, the contents of the file it names, or stdin for `-`.
pub fn read_source(arg: &str) -> std::result::Result<String, String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
        return Ok(s);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return fs::read_to_string(path).map_err(|e| format!("reading {arg}: {e}"));
    }
    Ok(arg.to_string())
}

fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>> {
    text.split(',').map(|s| Scalar::parse(s.trim())).collect()
}

fn parse_inline_form(degree: usize, list: &str) -> Result<BinaryForm> {
    let coeffs = parse_scalar_list(list)?;
    if coeffs.len() != degree + 1 {
        return Err(Error::CoefficientCount { expected: degree + 1, got: coeffs.len() });
    }
    BinaryForm::supported(coeffs)
}

/// Auto-detects JSON (leading `{`), inline forms (`cubic:…`, `quartic:…`)
/// and PDE text.
pub fn parse_input(text: &str) -> Result<Input> {
    let t = text.trim();
    if t.starts_with('{') {
        return Ok(match json::parse_input(t)? {
            JsonInput::Form(f) => Input::Form(f),
            JsonInput::Tensor(s) => Input::Tensor(s),
            JsonInput::Pde(p) => Input::Pde(p),
        });
    }
    if let Some(rest) = t.strip_prefix("cubic:") {
        return parse_inline_form(3, rest).map(Input::Form);
    }
    if let Some(rest) = t.strip_prefix("quartic:") {
        return parse_inline_form(4, rest).map(Input::Form);
    }
    parse_pde(t).map(Input::Pde)
}

/// `p11,p12;p21,p22` or the JSON transform encoding.
pub fn parse_transform(text: &str) -> Result<Transform2> {
    let t = text.trim();
    if t.starts_with('{') {
        let v = serde_json::from_str(t).map_err(|e| Error::Json(e.to_string()))?;
        return json::transform_from_json(&v);
    }
    let rows: Vec<&str> = t.split(';').collect();
    let entries: Vec<Scalar> = match rows.as_slice() {
        [r1, r2] => {
            let mut e = parse_scalar_list(r1)?;
            e.extend(parse_scalar_list(r2)?);
            e
        }
        _ => parse_scalar_list(t)?,
    };
    let [p11, p12, p21, p22]: [Scalar; 4] =
        entries.try_into().map_err(|_| Error::InvalidScalar(format!("{t} (expected four matrix entries)")))?;
    Transform2::new(p11, p12, p21, p22)
}

pub fn transform_in_mode(p: Transform2, mode: Mode) -> Result<Transform2> {
    let e = |r, c| {
        let s: &Scalar = p.get(r, c);
        match mode {
            Mode::Float => s.to_float(),
            Mode::Exact => s.to_exact(),
        }
    };
    Transform2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_input_kinds() {
        assert!(matches!(parse_input("cubic:1,0,-3,0"), Ok(Input::Form(_))));
        assert!(matches!(parse_input("quartic: 1, 0, 0, 0, -1/2"), Ok(Input::Form(_))));
        assert!(matches!(parse_input(r#" {"order":3,"entries":{"a":1,"b":2,"c":4,"d":8}}"#), Ok(Input::Tensor(_))));
        assert!(matches!(parse_input("U_xxxx + U_yyyy = Phi"), Ok(Input::Pde(_))));
        assert!(matches!(parse_input("cubic:1,0,0"), Err(Error::CoefficientCount { .. })));
        assert!(matches!(parse_input("{oops"), Err(Error::Json(_))));
    }

    #[test]
    fn transform_text() {
        assert_eq!(parse_transform("1,1;0,1").unwrap(), Transform2::from_ints(1, 1, 0, 1).unwrap());
        assert_eq!(
            parse_transform(r#"{"p":[["1","1"],["0","1"]]}"#).unwrap(),
            Transform2::from_ints(1, 1, 0, 1).unwrap()
        );
        assert!(matches!(parse_transform("1,2;2,4"), Err(Error::SingularTransform(_))));
        assert!(parse_transform("1,2,3").is_err());
    }
}
