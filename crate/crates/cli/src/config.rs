//! JSON job configuration.

use std::path::Path;

use ellzeta::exact::{LinearForm, RatPoint};
use ellzeta::numfield::{NFElement, NumberField};
use ellzeta::shintani::RayClassInput;
use rug::{Complex, Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A rational written as a JSON integer or as a string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatValue {
    Int(i64),
    Str(String),
}

impl RatValue {
    pub fn parse(&self) -> Result<Rational, CliError> {
        match self {
            RatValue::Int(k) => Ok(Rational::from(*k)),
            RatValue::Str(s) => s
                .trim()
                .parse::<Rational>()
                .map_err(|_| CliError::Validation(format!("'{s}' is not a rational number (expected p/q)"))),
        }
    }
}

/// A complex number as `[re, im]` decimal strings.
pub type ComplexValue = [String; 2];

pub fn parse_complex(c: &ComplexValue, prec: u32) -> Result<Complex, CliError> {
    let part = |s: &str| -> Result<Float, CliError> {
        let p = Float::parse(s.trim()).map_err(|_| CliError::Validation(format!("'{s}' is not a decimal number")))?;
        Ok(Float::with_val(prec, p))
    };
    Ok(Complex::with_val(prec, (part(&c[0])?, part(&c[1])?)))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub r_values: Vec<String>,
}

/// Arguments of `G_r(z, τ)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrConfig {
    pub z: ComplexValue,
    pub taus: Vec<ComplexValue>,
}

/// Arguments of `G_{r,a}(v)(w, x)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometricConfig {
    pub forms: Vec<Vec<i64>>,
    pub v: Vec<RatValue>,
    pub w: ComplexValue,
    pub x: Vec<ComplexValue>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    /// Ascending integer coefficients of a monic minimal polynomial.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<Vec<i64>>,
    /// Rows are power-basis coordinates of the lattice basis elements.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice_basis: Option<Vec<Vec<RatValue>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<Vec<Vec<RatValue>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_sign_bits: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec_digits: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gr: Option<GrConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometric: Option<GeometricConfig>,
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Validation(format!("invalid config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// The ray class data; `max_sign_bits` overrides the config value.
    pub fn ray_class_input(&self, max_sign_bits: Option<u32>) -> Result<RayClassInput, CliError> {
        let minpoly = self.minpoly.as_ref().ok_or_else(|| CliError::Validation("config has no 'minpoly'".into()))?;
        let field = NumberField::new(minpoly.iter().map(|&c| Integer::from(c)).collect())?;
        let n = field.degree();
        let elements = |name: &str, rows: &Option<Vec<Vec<RatValue>>>| -> Result<Vec<NFElement>, CliError> {
            let rows = rows.as_ref().ok_or_else(|| CliError::Validation(format!("config has no '{name}'")))?;
            rows.iter()
                .enumerate()
                .map(|(k, r)| {
                    if r.len() > n {
                        return Err(CliError::Validation(format!(
                            "{name}[{k}] has {} coordinates but the field has degree {n}",
                            r.len()
                        )));
                    }
                    let mut c: Vec<Rational> = r.iter().map(RatValue::parse).collect::<Result<_, _>>()?;
                    c.resize(n, Rational::new());
                    Ok(NFElement::new(c))
                })
                .collect()
        };
        let basis = elements("lattice_basis", &self.lattice_basis)?;
        let units = elements("units", &self.units)?;
        let bits = max_sign_bits.or(self.max_sign_bits).unwrap_or(ellzeta::numfield::DEFAULT_MAX_SIGN_BITS);
        let label = self.label.clone().unwrap_or_else(|| "unnamed".into());
        Ok(RayClassInput::with_max_sign_bits(field, basis, units, label, bits)?)
    }
}

impl GeometricConfig {
    pub fn parse(&self, prec: u32) -> Result<(Vec<LinearForm>, RatPoint, Complex, Vec<Complex>), CliError> {
        let forms = self.forms.iter().map(|f| LinearForm::from_i64(f)).collect();
        let v = RatPoint::new(self.v.iter().map(RatValue::parse).collect::<Result<_, _>>()?);
        let w = parse_complex(&self.w, prec)?;
        let x = self.x.iter().map(|c| parse_complex(c, prec)).collect::<Result<_, _>>()?;
        Ok((forms, v, w, x))
    }
}

/// Bits needed for `digits` significant decimal digits.
pub fn digits_to_bits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32
}
