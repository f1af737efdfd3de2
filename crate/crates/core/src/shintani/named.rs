//! Bundled ray class data used by the CLI and the tests.

use super::input::RayClassInput;
use crate::error::{Error, Result};
use crate::numfield::{NFElement, NumberField};

pub const NAMES: [&str; 3] = ["quad_sqrt19_f13", "cubic1_f5", "cubic2_f1mz"];

fn el(c: &[i64], n: usize) -> NFElement {
    let mut v = c.to_vec();
    v.resize(n, 0);
    NFElement::from_i64(&v)
}

fn build(minpoly: &[i64], basis: &[&[i64]], units: &[&[i64]], label: &str) -> Result<RayClassInput> {
    let k = NumberField::from_i64(minpoly)?;
    let n = k.degree();
    let basis = basis.iter().map(|c| el(c, n)).collect();
    let units = units.iter().map(|c| el(c, n)).collect();
    RayClassInput::new(k, basis, units, label)
}

/// `Q(√19)`, `f = (13)`, `b = (1)`, `ε = 170 + 39√19`.
pub fn quad_sqrt19_f13() -> Result<RayClassInput> {
    build(&[-19, 0, 1], &[&[13], &[65, 13]], &[&[170, 39]], "quad_sqrt19_f13")
}

/// `z³ - z² - 4z - 1`, `f = (5)`, `b = (1)`.
pub fn cubic1_f5() -> Result<RayClassInput> {
    build(&[-1, -4, -1, 1], &[&[5], &[10, 5], &[0, -5, 5]], &[&[6, 25, 15], &[56, 20, -15]], "cubic1_f5")
}

/// `z³ - z² - 6z + 3`, `f = (1 - z)`, `b = (1)`.
pub fn cubic2_f1mz() -> Result<RayClassInput> {
    build(&[3, -6, -1, 1], &[&[3], &[5, 1], &[2, 0, 1]], &[&[28, 1, -4], &[22, 3, -3]], "cubic2_f1mz")
}

/// Looks up bundled data by name; `cubic1`, `cubic2` and `quadratic` are
/// accepted as short names.
pub fn named_input(name: &str) -> Result<RayClassInput> {
    match name {
        "quad_sqrt19_f13" | "quadratic" => quad_sqrt19_f13(),
        "cubic1_f5" | "cubic1" => cubic1_f5(),
        "cubic2_f1mz" | "cubic2" => cubic2_f1mz(),
        _ => Err(Error::InvalidInput(format!("unknown field data '{name}'"))),
    }
}
