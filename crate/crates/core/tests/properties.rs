use ellzeta::bernoulli::{enum_parallelepiped, geometric_bernoulli, h0, h0_series_oracle, ValueAssignment};
use ellzeta::cones::dual_cone;
use ellzeta::exact::{det_forms, positive_dual_family, standard_relation, LinearForm, RatPoint, Unimodular};
use ellzeta::gamma::complex::log2_abs;
use ellzeta::gamma::{check_modular, g_r, residual_log2, GrArgs};
use ellzeta::numfield::{real_embeddings, NFElement, NumberField};
use ellzeta::scalar::Rationals;
use ellzeta::verify::brute_force_parallelepiped;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rug::{Complex, Integer, Rational};

fn form(c: &[i64]) -> LinearForm {
    LinearForm::from_i64(c)
}

fn rat((p, q): (i64, i64)) -> Rational {
    Rational::from((p, q))
}

fn small_form(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
}

fn independent_forms(n: usize, max_det: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(small_form(n), n).prop_filter("independent, small index", move |fs| {
        let forms: Vec<LinearForm> = fs.iter().map(|f| form(f)).collect();
        let d = det_forms(&forms).unwrap();
        d != 0 && d.abs() <= max_det
    })
}

fn fraction() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..=20, 1i64..=9)
}

fn nonzero_fraction() -> impl Strategy<Value = (i64, i64)> {
    fraction().prop_filter("nonzero", |(p, _)| *p != 0)
}

fn point(n: usize) -> impl Strategy<Value = RatPoint> {
    prop::collection::vec((0i64..6, 1i64..=6), n).prop_map(|c| RatPoint::new(c.into_iter().map(|(p, q)| Rational::from((p, q))).collect()))
}

fn apply_functional(g: &Unimodular, x: &[Rational]) -> Vec<Rational> {
    let c = g.functional_matrix();
    let n = x.len();
    (0..n).map(|k| (0..n).fold(Rational::new(), |acc, i| acc + Rational::from(&c[i][k] * &x[i]))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn pairing_is_sl_n_equivariant(n in 2usize..5, seed in any::<u64>(), a in small_form(4), v in prop::collection::vec(-5i64..=5, 4)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Unimodular::random(n, 10, &mut rng);
        let a = form(&a[..n]);
        let v = ellzeta::exact::LatticeVector::from_i64(&v[..n]);
        prop_assert_eq!(g.act_form(&a).pair(&g.act_vector(&v)), a.pair(&v));
    }

    #[test]
    fn positive_dual_family_is_dual(fs in independent_forms(3, 50)) {
        let forms: Vec<LinearForm> = fs.iter().map(|f| form(f)).collect();
        let d = positive_dual_family(&forms).unwrap();
        for (j, a) in forms.iter().enumerate() {
            for (k, alpha) in d.alphas.iter().enumerate() {
                let p = a.pair(alpha);
                if j == k { prop_assert!(p > 0); } else { prop_assert_eq!(p, 0); }
            }
        }
        let primitive = d.alphas.iter().all(|a| a.coords.iter().fold(Integer::new(), |g, c| g.gcd(c)) == 1);
        prop_assert!(primitive);
    }

    #[test]
    fn standard_relation_ignores_common_rescaling(fs in prop::collection::vec(small_form(2), 3), k in 1i64..6) {
        let forms: Vec<LinearForm> = fs.iter().map(|f| form(f)).collect();
        let scaled: Vec<LinearForm> = forms.iter().map(|a| a.scale(&Integer::from(k))).collect();
        match (standard_relation(&forms), standard_relation(&scaled)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn det_is_alternating_and_multilinear(fs in prop::collection::vec(small_form(3), 3), extra in small_form(3), k in -4i64..=4) {
        let forms: Vec<LinearForm> = fs.iter().map(|f| form(f)).collect();
        let d = det_forms(&forms).unwrap();
        let mut swapped = forms.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(det_forms(&swapped).unwrap(), -d.clone());
        let b = form(&extra);
        let mut combo = forms.clone();
        combo[1] = forms[1].scale(&Integer::from(k)).add(&b);
        let mut with_b = forms.clone();
        with_b[1] = b;
        prop_assert_eq!(det_forms(&combo).unwrap(), d * k + det_forms(&with_b).unwrap());
    }

    #[test]
    fn cone_and_opposite_cover_once(a in small_form(3), p in prop::collection::vec(fraction(), 3)) {
        let a = form(&a);
        let p = RatPoint::new(p.into_iter().map(rat).collect());
        let lhs = dual_cone(std::slice::from_ref(&a)).unwrap().evaluate(&p) + dual_cone(&[a.neg()]).unwrap().evaluate(&p);
        let rhs = Rational::from(1) + dual_cone(&[a.clone(), a.neg()]).unwrap().evaluate(&p);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn redundant_form_can_be_dropped(a in small_form(3), b in small_form(3), l in (1i64..4, 1i64..4), p in prop::collection::vec(fraction(), 3)) {
        // a_3 = λ_1 a_1 + λ_2 a_2 with λ ≥ 0 is implied by a_1, a_2 ≥ 0.
        let a = form(&a);
        let b = form(&b);
        let c = a.scale(&Integer::from(l.0)).add(&b.scale(&Integer::from(l.1)));
        prop_assume!(!c.is_zero());
        let p = RatPoint::new(p.into_iter().map(rat).collect());
        let three = dual_cone(&[a.clone(), b.clone(), c]).unwrap().evaluate(&p);
        let two = dual_cone(&[a, b]).unwrap().evaluate(&p);
        prop_assert_eq!(three, two);
    }

    #[test]
    fn positive_relation_cuts_out_the_origin(fs in independent_forms(2, 20), l in (1i64..4, 1i64..4), p in prop::collection::vec(fraction(), 2)) {
        let a = form(&fs[0]);
        let b = form(&fs[1]);
        // a + b + c = 0 up to positive scaling, with a, b spanning.
        let c = a.scale(&Integer::from(l.0)).add(&b.scale(&Integer::from(l.1))).neg();
        let p = RatPoint::new(p.into_iter().map(rat).collect());
        let at_zero = p.coords.iter().all(|x| *x == 0);
        let v = dual_cone(&[a, b, c]).unwrap().evaluate(&p);
        prop_assert_eq!(v, Rational::from(u32::from(at_zero)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn geometric_bernoulli_is_homogeneous_of_degree_zero(
        fs in independent_forms(3, 12),
        v in point(3),
        w in fraction(),
        x in prop::collection::vec(nonzero_fraction(), 3),
        lambda in nonzero_fraction(),
    ) {
        let forms: Vec<LinearForm> = fs.iter().map(|f| form(f)).collect();
        let x: Vec<Rational> = x.into_iter().map(rat).collect();
        let a = ValueAssignment::new(rat(w), x.clone());
        let lam = rat(lambda);
        let b = ValueAssignment::new(Rational::from(&a.w * &lam), x.iter().map(|c| Rational::from(c * &lam)).collect());
        match (geometric_bernoulli(&Rationals, &forms, &v, &a), geometric_bernoulli(&Rationals, &forms, &v, &b)) {
            (Ok(p), Ok(q)) => prop_assert_eq!(p, q),
            (Err(e), Err(f)) => prop_assert_eq!(e, f),
            (p, q) => prop_assert!(false, "{:?} vs {:?}", p, q),
        }
    }

    #[test]
    fn geometric_bernoulli_is_sl_n_equivariant(
        fs in independent_forms(3, 12),
        v in point(3),
        w in fraction(),
        x in prop::collection::vec(nonzero_fraction(), 3),
        seed in any::<u64>(),
    ) {
        let forms: Vec<LinearForm> = fs.iter().map(|f| form(f)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Unimodular::random(3, 8, &mut rng);
        let x: Vec<Rational> = x.into_iter().map(rat).collect();
        let a = ValueAssignment::new(rat(w), x.clone());
        let ga = ValueAssignment::new(rat(w), apply_functional(&g, &x));
        let gforms: Vec<LinearForm> = forms.iter().map(|f| g.act_form(f)).collect();
        let lhs = geometric_bernoulli(&Rationals, &gforms, &g.act_point(&v), &ga);
        let rhs = geometric_bernoulli(&Rationals, &forms, &v, &a);
        match (lhs, rhs) {
            (Ok(p), Ok(q)) => prop_assert_eq!(p, q),
            (Err(e), Err(f)) => prop_assert_eq!(e, f),
            (p, q) => prop_assert!(false, "{:?} vs {:?}", p, q),
        }
    }

    #[test]
    fn h0_matches_series(fs in independent_forms(2, 6), v in point(2), w in fraction(), x in prop::collection::vec(nonzero_fraction(), 2)) {
        let forms: Vec<LinearForm> = fs.iter().map(|f| form(f)).collect();
        let a = ValueAssignment::new(rat(w), x.into_iter().map(rat).collect());
        if let Ok(exact) = h0(&Rationals, &forms, &v, &a) {
            prop_assert_eq!(exact, h0_series_oracle(&Rationals, &forms, &v, &a).unwrap());
        }
    }

    #[test]
    fn parallelepiped_size_is_the_index(fs in independent_forms(3, 20), v in point(3), u in point(3)) {
        let forms: Vec<LinearForm> = fs.iter().map(|f| form(f)).collect();
        let dual = positive_dual_family(&forms).unwrap();
        let cols: Vec<Vec<Integer>> = (0..3).map(|i| dual.alphas.iter().map(|a| a.coords[i].clone()).collect()).collect();
        let index = ellzeta::exact::linalg::det_int(&cols).abs();
        let set = enum_parallelepiped(&forms, &v).unwrap();
        prop_assert_eq!(Integer::from(set.points.len()), index.clone());
        prop_assert_eq!(&set.index, &index);
        prop_assert_eq!(enum_parallelepiped(&forms, &u).unwrap().points.len(), set.points.len());
        let mut brute = brute_force_parallelepiped(&forms, &v).unwrap();
        let mut got = set.points.clone();
        let key = |p: &RatPoint| p.coords.iter().map(|c| (c.numer().clone(), c.denom().clone())).collect::<Vec<_>>();
        brute.sort_by_key(key);
        got.sort_by_key(key);
        prop_assert_eq!(brute, got);
    }
}

fn cubic() -> NumberField {
    NumberField::from_i64(&[-1, -4, -1, 1]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn trace_is_linear_and_sums_embeddings(a in prop::collection::vec(fraction(), 3), b in prop::collection::vec(fraction(), 3), c in nonzero_fraction()) {
        let k = cubic();
        let x = NFElement::new(a.into_iter().map(rat).collect());
        let y = NFElement::new(b.into_iter().map(rat).collect());
        let c = rat(c);
        prop_assert_eq!(k.trace(&k.add(&k.scale(&x, &c), &y)), c * k.trace(&x) + k.trace(&y));
        let prec = 96;
        let sum = real_embeddings(&k).into_iter().fold(Complex::new(prec), |acc, mut e| acc + e.embed(&x, prec));
        let diff = Complex::with_val(prec, sum - Complex::with_val(prec, k.trace(&x)));
        prop_assert!(log2_abs(&diff) < 4.0 - f64::from(prec) + 8.0, "{}", log2_abs(&diff));
    }

    #[test]
    fn signs_are_nonzero_and_survive_totally_positive_factors(a in prop::collection::vec(fraction(), 3), t in 1i64..6) {
        let k = cubic();
        let x = NFElement::new(a.into_iter().map(rat).collect());
        prop_assume!(!x.is_zero());
        // z^2 + t is totally positive.
        let pos = k.add(&k.mul(&k.gen(), &k.gen()), &k.rational(&Rational::from(t)));
        let y = k.mul(&x, &pos);
        for (mut e, mut f) in real_embeddings(&k).into_iter().zip(real_embeddings(&k)) {
            let s = e.sign_of(&x, 4096).unwrap();
            prop_assert!(s != 0);
            prop_assert_eq!(f.sign_of(&y, 4096).unwrap(), s);
        }
    }

    #[test]
    fn embedding_intervals_shrink_monotonically(bits in 8u32..64) {
        for mut e in real_embeddings(&cubic()) {
            e.refine_to(bits);
            let (lo, hi) = (e.interval().0.clone(), e.interval().1.clone());
            e.refine_to(bits * 2);
            let (lo2, hi2) = e.interval();
            prop_assert!(*lo2 >= lo && *hi2 <= hi);
        }
    }
}

fn cx(re: f64, im: f64, prec: u32) -> Complex {
    Complex::with_val(prec, (re, im))
}

fn rel_diff(a: &Complex, b: &Complex) -> f64 {
    let prec = a.prec().0;
    log2_abs(&Complex::with_val(prec, a - b)) - log2_abs(b)
}

fn gr_args() -> impl Strategy<Value = (f64, f64, Vec<(f64, f64)>)> {
    (-0.5f64..0.5, -0.3f64..0.3, prop::collection::vec((-0.5f64..0.5, 0.6f64..1.2), 1..=3))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn g_r_is_one_periodic((zr, zi, taus) in gr_args(), j in 0usize..3) {
        let prec = 96;
        let base: Vec<Complex> = taus.iter().map(|&(a, b)| cx(a, b, prec)).collect();
        let g = g_r(&GrArgs::new(cx(zr, zi, prec), base.clone()), prec).unwrap();
        prop_assume!(!g.near_zero);
        let shifted_z = g_r(&GrArgs::new(cx(zr, zi, prec) + 1, base.clone()), prec).unwrap();
        prop_assert!(rel_diff(&shifted_z.value, &g.value) < -80.0);
        let mut moved = base.clone();
        let j = j % moved.len();
        moved[j] += 1;
        let shifted_tau = g_r(&GrArgs::new(cx(zr, zi, prec), moved), prec).unwrap();
        prop_assert!(rel_diff(&shifted_tau.value, &g.value) < -80.0);
    }

    #[test]
    fn g_r_reflection((zr, zi, taus) in gr_args()) {
        let prec = 96;
        let t: Vec<Complex> = taus.iter().map(|&(a, b)| cx(a, b, prec)).collect();
        let r = t.len() - 1;
        let z = cx(zr, zi, prec);
        let sum = t.iter().fold(Complex::new(prec), |acc, x| acc + x);
        let lhs = g_r(&GrArgs::new(Complex::with_val(prec, &z + &sum), t.clone()), prec).unwrap();
        let rhs = g_r(&GrArgs::new(Complex::with_val(prec, -&z), t), prec).unwrap();
        prop_assume!(!lhs.near_zero && !rhs.near_zero);
        let want = if r.is_multiple_of(2) { rhs.value } else { Complex::with_val(prec, rhs.value.recip_ref()) };
        prop_assert!(rel_diff(&lhs.value, &want) < -80.0);
    }

    #[test]
    fn doubling_precision_stays_within_the_bound((zr, zi, taus) in gr_args()) {
        let t: Vec<Complex> = taus.iter().map(|&(a, b)| cx(a, b, 256)).collect();
        let args = GrArgs::new(cx(zr, zi, 256), t);
        let lo = g_r(&args, 80).unwrap();
        let hi = g_r(&args, 160).unwrap();
        prop_assume!(!lo.near_zero);
        let hi80 = Complex::with_val(160, &hi.value);
        let lo160 = Complex::with_val(160, &lo.value);
        prop_assert!(rel_diff(&lo160, &hi80) <= lo.rel_err_log2 + 1.0, "{} vs bound {}", rel_diff(&lo160, &hi80), lo.rel_err_log2);
    }
}

#[test]
fn modular_residual_tracks_precision() {
    let forms = [form(&[1, 0]), form(&[0, 1])];
    let v = RatPoint::from_fracs(&[(1, 3), (0, 1)]);
    let mut last = 0.0;
    for prec in [64u32, 128, 256] {
        let x = [cx(0.31, 0.9, prec), cx(-0.2, 0.15, prec)];
        let w = cx(0.11, 0.07, prec);
        let r = residual_log2(check_modular(&forms, &v, &w, &x, prec).unwrap());
        assert!(r < -f64::from(prec) / 2.0, "prec {prec}: residual 2^{r}");
        if prec > 64 {
            assert!(r < last - f64::from(prec) / 4.0, "residual did not shrink: 2^{r} after 2^{last}");
        }
        last = r;
    }
}
