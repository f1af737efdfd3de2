use ellzeta::exact::{primitive_of_rational, LinearForm, RatPoint};
use ellzeta::numfield::NFElement;
use ellzeta::shintani::*;
use ellzeta::Error;
use rug::Rational;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

/// `a ∘ u⁻¹` in lattice coordinates, made primitive.
fn translate_form(input: &RayClassInput, a: &LinearForm, u: &NFElement) -> LinearForm {
    let k = &input.field;
    let ui = k.inv(u).unwrap();
    let coeffs: Vec<Rational> = input
        .lattice_basis
        .iter()
        .map(|e| {
            let c = input.lattice_coords(&k.mul(&ui, e));
            c.iter().zip(&a.coords).map(|(x, y)| Rational::from(x * y)).sum()
        })
        .collect();
    LinearForm::new(primitive_of_rational(&coeffs).unwrap().1)
}

#[test]
fn cubic1_signed_domain_table() {
    let input = cubic1_f5().unwrap();
    let d = signed_domain(&input).unwrap();
    let labels: Vec<&str> = d.blocks.iter().map(|b| b.label.as_str()).collect();
    assert_eq!(labels, ["Id", "(12)"]);
    let mus: Vec<Vec<i32>> = d.blocks.iter().map(|b| b.mu.clone()).collect();
    assert_eq!(mus, vec![vec![-1, 1, -1], vec![1, -1, 1]]);
    assert_eq!(d.blocks[0].j_set, [1, 3]);
    assert_eq!(d.blocks[1].j_set, [2]);
    assert_eq!(d.blocks.iter().map(|b| b.w).collect::<Vec<_>>(), [1, 1]);
    assert_eq!(d.blocks.iter().map(|b| b.nu).collect::<Vec<_>>(), [-1, 1]);
    let sevenths = |v: [i64; 3]| v.iter().map(|x| Rational::from((*x, 7))).collect::<Vec<_>>();
    assert_eq!(d.blocks[0].b_forms, [sevenths([35, 22, 114]), sevenths([0, -10, 29]), sevenths([0, 3, -8])]);
    let ninety_sevenths = |v: [i64; 3]| v.iter().map(|x| Rational::from((*x, 97))).collect::<Vec<_>>();
    assert_eq!(
        d.blocks[1].b_forms,
        [ninety_sevenths([485, 302, 1588]), ninety_sevenths([0, 10, -29]), ninety_sevenths([0, 3, 1])]
    );
    assert_eq!(d.blocks[0].a_forms[0], LinearForm::from_i64(&[-35, -22, -114]));
    assert_eq!(d.blocks[0].lambdas, [q("7"), q("7"), q("7")]);
    assert_eq!(d.blocks[1].lambdas, [q("97"), q("97"), q("97")]);
}

#[test]
fn cubic1_zeta_value() {
    let input = cubic1_f5().unwrap();
    let r = zeta_at_zero_report(&input).unwrap();
    let k = &input.field;
    assert_eq!(r.blocks[0].r_value, q("4489/60"));
    assert_eq!(r.blocks[1].r_value, q("-4453/60"));
    assert_eq!(r.blocks[0].element, k.element(vec![q("-1424/120"), q("-4525/120"), q("1975/120")]).unwrap());
    assert_eq!(r.blocks[1].element, k.element(vec![q("1448/120"), q("4525/120"), q("-1975/120")]).unwrap());
    assert_eq!(r.value, q("1/5"));
}

#[test]
fn cubic2_zeta_value() {
    let input = cubic2_f1mz().unwrap();
    let r = zeta_at_zero_report(&input).unwrap();
    let k = &input.field;
    assert_eq!(r.blocks.iter().map(|b| b.nu).collect::<Vec<_>>(), [1, -1]);
    let forms = |i: usize| r.domain.blocks[i].a_forms.clone();
    assert_eq!(
        forms(0),
        [LinearForm::from_i64(&[108, 280, 349]), LinearForm::from_i64(&[0, 25, 13]), LinearForm::from_i64(&[0, 4, 1])]
    );
    assert_eq!(
        forms(1),
        [LinearForm::from_i64(&[-432, -395, -1019]), LinearForm::from_i64(&[0, 25, 13]), LinearForm::from_i64(&[0, 1, 1])]
    );
    assert_eq!(r.blocks[0].element, k.element(vec![q("-7/6"), q("0"), q("1/2")]).unwrap());
    assert_eq!(r.blocks[1].element, k.element(vec![q("11/6"), q("0"), q("-1/2")]).unwrap());
    assert_eq!(r.blocks[0].r_value, q("3"));
    assert_eq!(r.blocks[1].r_value, q("-1"));
    assert_eq!(r.value, q("2/3"));
}

#[test]
fn quadratic_routes_agree() {
    let input = quad_sqrt19_f13().unwrap();
    let r = quadratic_shintani_report(&input).unwrap();
    assert_eq!(r.a1, LinearForm::from_i64(&[13, 122]));
    assert_eq!(r.a_minus1, LinearForm::from_i64(&[13, 8]));
    assert_eq!((r.content1.clone(), r.content_minus1.clone()), (q("338"), q("338")));
    assert_eq!(r.element, input.field.rational(&q("33/104")));
    assert_eq!(r.value, q("33/52"));
    assert_eq!(zeta_at_zero(&input).unwrap(), q("33/52"));
}

#[test]
fn quadratic_route_rejects_higher_degree() {
    let input = cubic1_f5().unwrap();
    assert!(matches!(quadratic_shintani(&input), Err(Error::InvalidInput(_))));
}

#[test]
fn cone_zeta_in_quadratic_field() {
    let input = quad_sqrt19_f13().unwrap();
    let v = input.one_point().unwrap();
    let forms = [LinearForm::from_i64(&[13, 122]), LinearForm::from_i64(&[13, 8])];
    // frozen; the ε-translate of the cone must give the same value
    let z = zeta_cone_at_zero(&forms, &input, &v).unwrap();
    assert_eq!(z, q("27/52"));
    let eps = &input.units[0];
    let moved: Vec<LinearForm> = forms.iter().map(|a| translate_form(&input, a, eps)).collect();
    assert_eq!(zeta_cone_at_zero(&moved, &input, &v).unwrap(), z);
    let e = zeta_cone_element(&input, &forms, &v).unwrap();
    assert_eq!(input.field.trace(&e) / 2u32, z);
}

#[test]
fn cone_zeta_unit_invariance_cubic() {
    let input = cubic1_f5().unwrap();
    let v = input.one_point().unwrap();
    // The closed cone spanned by 1, ε₁, ε₂ lies in F⁺.
    let k = &input.field;
    let gens = [k.rational(&q("1")), input.units[0].clone(), input.units[1].clone()];
    let cols: Vec<Vec<Rational>> = gens.iter().map(|g| input.lattice_coords(g)).collect();
    let n = 3;
    let inv = ellzeta::exact::linalg::inverse(&ellzeta::exact::linalg::transpose(&cols)).unwrap();
    let forms: Vec<LinearForm> = (0..n).map(|i| LinearForm::new(primitive_of_rational(&inv[i]).unwrap().1)).collect();
    let z = zeta_cone_at_zero(&forms, &input, &v).unwrap();
    for u in &input.units {
        let moved: Vec<LinearForm> = forms.iter().map(|a| translate_form(&input, a, u)).collect();
        assert_eq!(zeta_cone_at_zero(&moved, &input, &v).unwrap(), z);
    }
}

#[test]
fn cone_zeta_rejects_cones_leaving_positive_orthant() {
    let input = quad_sqrt19_f13().unwrap();
    let v = input.one_point().unwrap();
    let forms = [LinearForm::from_i64(&[13, 122]), LinearForm::from_i64(&[-13, -8])];
    assert_eq!(zeta_cone_at_zero(&forms, &input, &v), Err(Error::NotTotallyPositive));
    let zero = RatPoint::zero(2);
    let good = [LinearForm::from_i64(&[13, 122]), LinearForm::from_i64(&[13, 8])];
    assert_eq!(zeta_cone_at_zero(&good, &input, &zero), Err(Error::UnsupportedModulus));
    let dep = [LinearForm::from_i64(&[1, 2]), LinearForm::from_i64(&[2, 4])];
    assert_eq!(zeta_cone_at_zero(&dep, &input, &v), Err(Error::Dependent));
}

#[test]
fn zeta_invariant_under_basis_change() {
    for input in [cubic1_f5().unwrap(), cubic2_f1mz().unwrap()] {
        let k = &input.field;
        let b = &input.lattice_basis;
        // e₂ ↦ e₂ + e₁ and e₃ ↦ e₃ + 2e₁ + e₂ keep the basis totally positive.
        let new_basis = vec![b[0].clone(), k.add(&b[1], &b[0]), k.add(&k.add(&b[2], &k.scale(&b[0], &q("2"))), &b[1])];
        let moved = RayClassInput::new(k.clone(), new_basis, input.units.clone(), "moved");
        let moved = match moved {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        };
        assert_eq!(zeta_at_zero(&moved).unwrap(), zeta_at_zero(&input).unwrap());
    }
}

#[test]
fn zeta_invariant_under_unit_system_change() {
    for input in [cubic1_f5().unwrap(), cubic2_f1mz().unwrap()] {
        let k = &input.field;
        let units = vec![k.mul(&input.units[0], &input.units[1]), input.units[1].clone()];
        let other = RayClassInput::new(k.clone(), input.lattice_basis.clone(), units, "other").unwrap();
        assert_eq!(zeta_at_zero(&other).unwrap(), zeta_at_zero(&input).unwrap());
        let swapped = vec![input.units[1].clone(), input.units[0].clone()];
        let other = RayClassInput::new(k.clone(), input.lattice_basis.clone(), swapped, "swapped").unwrap();
        assert_eq!(zeta_at_zero(&other).unwrap(), zeta_at_zero(&input).unwrap());
    }
}

#[test]
fn sampling_identity_and_mutation() {
    for input in [quad_sqrt19_f13().unwrap(), cubic1_f5().unwrap(), cubic2_f1mz().unwrap()] {
        let d = signed_domain(&input).unwrap();
        let report = verify_signed_domain_sampling(&input, &d, 100, 7).unwrap();
        assert!(report.all_pass(), "{}: {:?}", input.label, report.sums);
        let flipped = d.with_flipped_weight(0);
        let report = verify_signed_domain_sampling(&input, &flipped, 100, 7).unwrap();
        assert!(!report.all_pass(), "{}", input.label);
    }
}

#[test]
fn modulus_one_is_refused() {
    let input = cubic1_f5().unwrap();
    let k = &input.field;
    // O_F itself with the basis 1, z + 2, z² - z (scaled back from the (5) basis).
    let basis: Vec<NFElement> = input.lattice_basis.iter().map(|e| k.scale(e, &q("1/5"))).collect();
    let units = input.units.clone();
    let whole = RayClassInput::new(k.clone(), basis, units, "unit ideal").unwrap();
    assert_eq!(zeta_at_zero(&whole), Err(Error::UnsupportedModulus));
}

#[test]
fn invalid_inputs_are_rejected() {
    let input = cubic1_f5().unwrap();
    let k = &input.field;
    // z is not a unit of norm 1.
    let bad = RayClassInput::new(k.clone(), input.lattice_basis.clone(), vec![k.gen(), input.units[1].clone()], "bad");
    assert!(bad.is_err());
    let bad = RayClassInput::new(k.clone(), input.lattice_basis.clone(), vec![input.units[0].clone()], "short");
    assert!(matches!(bad, Err(Error::Dimension { .. })));
    // ε₁ is ≡ 1 mod 5 but not mod 25.
    let basis25: Vec<NFElement> = input.lattice_basis.iter().map(|e| k.scale(e, &q("5"))).collect();
    let bad = RayClassInput::new(k.clone(), basis25, input.units.clone(), "f=25");
    assert!(matches!(bad, Err(Error::InvalidInput(_))));
}
