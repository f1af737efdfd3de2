//! The two-dimensional κ computation and the counterclockwise test δ_SV.

use rug::Integer;

use crate::error::{Error, Result};
use crate::exact::{standard_relation, LinearForm};

fn det2(a: &[Integer; 2], b: &[Integer; 2]) -> i32 {
    (Integer::from(&a[0] * &b[1]) - Integer::from(&a[1] * &b[0])).cmp0() as i32
}

fn general_position(l: &[[Integer; 2]; 3]) -> Result<()> {
    for i in 0..3 {
        if l[i][0] == 0 && l[i][1] == 0 {
            return Err(Error::NotGeneralPosition);
        }
        for j in i + 1..3 {
            if det2(&l[i], &l[j]) == 0 {
                return Err(Error::NotGeneralPosition);
            }
        }
    }
    Ok(())
}

/// Signs `(ε12, ε13, ε23)` with `ε_ij = sign det(l_i, l_j)`.
pub fn kappa_signs(l: &[[Integer; 2]; 3]) -> Result<(i32, i32, i32)> {
    general_position(l)?;
    Ok((det2(&l[0], &l[1]), det2(&l[0], &l[2]), det2(&l[1], &l[2])))
}

/// `κ = (1 - ε12 - ε23 + ε13)/2 + ε12·q(k⁻(a_1, a_2, a_3))` with
/// `a_i = ⟨·, l_i⟩`, `q(0) = 1` and `q(k) = 0` otherwise.
pub fn kappa_sv(l: &[[Integer; 2]; 3]) -> Result<i32> {
    let (e12, e13, e23) = kappa_signs(l)?;
    let forms: Vec<LinearForm> = l.iter().map(|v| LinearForm::new(v.to_vec())).collect();
    let rel = standard_relation(&forms)?;
    let q = i32::from(rel.k_minus == 0);
    Ok((1 - e12 - e23 + e13) / 2 + e12 * q)
}

/// 0 if `l_2` lies on the counterclockwise arc from `l_1` to `l_3`, else 1.
pub fn delta_sv(l: &[[Integer; 2]; 3]) -> Result<i32> {
    let (e12, e13, e23) = kappa_signs(l)?;
    let on_arc = if e13 > 0 { e12 > 0 && e23 > 0 } else { e12 > 0 || e23 > 0 };
    Ok(if on_arc { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(v: [[i64; 2]; 3]) -> [[Integer; 2]; 3] {
        v.map(|p| p.map(Integer::from))
    }

    #[test]
    fn counterclockwise_arc() {
        // l2 at 45 degrees between l1 = e1 and l3 = e2.
        assert_eq!(delta_sv(&l([[1, 0], [1, 1], [0, 1]])).unwrap(), 0);
        assert_eq!(delta_sv(&l([[1, 0], [-1, -1], [0, 1]])).unwrap(), 1);
        assert_eq!(delta_sv(&l([[1, 0], [2, 0], [0, 1]])), Err(Error::NotGeneralPosition));
    }
}
