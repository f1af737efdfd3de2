//! Validated input for partial zeta values: a totally real field, a lattice
//! `L = f·b^{-1}` with a totally positive basis, and fundamental totally
//! positive units congruent to 1 mod `f`.

use rug::Rational;

use crate::error::{Error, Result};
use crate::exact::linalg::{inverse, mat_vec, rank_rat, transpose, RatMatrix};
use crate::exact::RatPoint;
use crate::numfield::{real_embeddings, NFElement, NumberField, DEFAULT_MAX_SIGN_BITS};

#[derive(Clone, Debug)]
pub struct RayClassInput {
    pub field: NumberField,
    pub lattice_basis: Vec<NFElement>,
    pub units: Vec<NFElement>,
    pub label: String,
    pub max_sign_bits: u32,
    /// Power-basis coordinates to lattice coordinates.
    to_lattice: RatMatrix,
}

fn totally_positive(field: &NumberField, x: &NFElement, bits: u32) -> Result<bool> {
    for mut s in real_embeddings(field) {
        if s.sign_of(x, bits)? <= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

impl RayClassInput {
    pub fn new(field: NumberField, lattice_basis: Vec<NFElement>, units: Vec<NFElement>, label: impl Into<String>) -> Result<Self> {
        Self::with_max_sign_bits(field, lattice_basis, units, label, DEFAULT_MAX_SIGN_BITS)
    }

    pub fn with_max_sign_bits(
        field: NumberField,
        lattice_basis: Vec<NFElement>,
        units: Vec<NFElement>,
        label: impl Into<String>,
        max_sign_bits: u32,
    ) -> Result<Self> {
        let n = field.degree();
        if real_embeddings(&field).len() != n {
            return Err(Error::InvalidInput("the field is not totally real".into()));
        }
        if lattice_basis.len() != n {
            return Err(Error::Dimension { expected: n, got: lattice_basis.len() });
        }
        if units.len() + 1 != n {
            return Err(Error::Dimension { expected: n - 1, got: units.len() });
        }
        let padded = |x: &NFElement| -> Result<Vec<Rational>> { Ok(field.element(x.coeffs.clone())?.coeffs) };
        let cols: Vec<Vec<Rational>> = lattice_basis.iter().map(padded).collect::<Result<_>>()?;
        if rank_rat(&cols) != n {
            return Err(Error::NotABasis);
        }
        // Columns are the basis elements in power coordinates.
        let to_lattice = inverse(&transpose(&cols))?;
        for (k, e) in lattice_basis.iter().enumerate() {
            if !totally_positive(&field, e, max_sign_bits)? {
                return Err(Error::InvalidInput(format!(
                    "lattice basis element {} ({}) is not totally positive; multiply the basis by a totally positive element or pick another basis",
                    k + 1,
                    e
                )));
            }
        }
        let input = Self {
            field,
            lattice_basis,
            units,
            label: label.into(),
            max_sign_bits,
            to_lattice,
        };
        for (k, u) in input.units.iter().enumerate() {
            if input.field.norm(u) != 1 {
                return Err(Error::InvalidInput(format!("unit {} has norm {}", k + 1, input.field.norm(u))));
            }
            if !totally_positive(&input.field, u, max_sign_bits)? {
                return Err(Error::NotTotallyPositive);
            }
            for e in &input.lattice_basis {
                if !input.in_lattice(&input.field.mul(u, e)) {
                    return Err(Error::InvalidInput(format!("unit {} does not preserve the lattice", k + 1)));
                }
            }
            let one = input.field.rational(&Rational::from(1));
            if !input.in_lattice(&input.field.sub(u, &one)) {
                return Err(Error::InvalidInput(format!("unit {} is not congruent to 1 modulo the lattice", k + 1)));
            }
        }
        Ok(input)
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// Coordinates of `x` in the lattice basis.
    pub fn lattice_coords(&self, x: &NFElement) -> Vec<Rational> {
        let padded = self.field.element(x.coeffs.clone()).map(|e| e.coeffs).unwrap_or_default();
        mat_vec(&self.to_lattice, &padded)
    }

    pub fn from_lattice_coords(&self, c: &[Rational]) -> NFElement {
        c.iter().zip(&self.lattice_basis).fold(self.field.rational(&Rational::new()), |acc, (ci, e)| {
            self.field.add(&acc, &self.field.scale(e, ci))
        })
    }

    pub fn in_lattice(&self, x: &NFElement) -> bool {
        self.lattice_coords(x).iter().all(|c| *c.denom() == 1)
    }

    /// `1_F` reduced to `[0, 1)^n` in lattice coordinates; modulus `(1)`
    /// (where `1_F ∈ L`) is refused.
    pub fn one_point(&self) -> Result<RatPoint> {
        let one = self.field.rational(&Rational::from(1));
        let v = RatPoint::new(self.lattice_coords(&one)).reduce();
        if v.coords.iter().all(|c| *c == 0) {
            return Err(Error::UnsupportedModulus);
        }
        Ok(v)
    }
}
