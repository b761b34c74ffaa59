use proptest::prelude::*;

use swverify::archmult::MatrixRecipe;
use swverify::compalg::{Albert, Flavor, Fp, OctAlgebra, Scalar};
use swverify::eiscalc::{gk_cfunction, order_report, FactorArg, FactorKind, ZetaProduct};
use swverify::exactnum::{int, parse_rational, rat, AffineForm, Poly, RatFunc, Rational};
use swverify::rootsys::{RootSystem, WeylElem, WeylWord};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..13).prop_map(|(n, d)| rat(n, d))
}

fn affine() -> impl Strategy<Value = AffineForm> {
    (rational(), rational()).prop_map(|(a, b)| AffineForm::new(a, b))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..5).prop_map(Poly::new)
}

/// Products of plain zeta factors `zeta(s + c)`, whose orders are all known exactly.
fn zeta_product() -> impl Strategy<Value = ZetaProduct> {
    prop::collection::vec((-6i64..6, -2i32..3), 0..6).prop_map(|fs| {
        let mut p = ZetaProduct::one();
        for (c, e) in fs {
            p.push(FactorKind::Zeta, FactorArg::plain(AffineForm::new(int(1), int(c))), e);
        }
        p
    })
}

fn element_of(rs: &RootSystem, letters: &[usize]) -> WeylElem {
    let w = letters.iter().map(|&i| 1 + i % rs.rank()).collect();
    rs.elem(&WeylWord(w)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trips(x in rational()) {
        prop_assert_eq!(parse_rational(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn affine_text_round_trips(a in affine()) {
        prop_assert_eq!(AffineForm::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn affine_evaluation_is_linear(a in affine(), b in affine(), s in rational()) {
        prop_assert_eq!((&a + &b).eval(&s), a.eval(&s) + b.eval(&s));
        prop_assert_eq!((&a - &a).eval(&s), int(0));
    }

    #[test]
    fn poly_ring_laws(p in poly(), q in poly(), r in poly(), x in rational()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn division_with_remainder(p in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        let (q, r) = p.div_rem(&d);
        prop_assert_eq!(&(&q * &d) + &r, p);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn order_is_additive_for_rational_functions(p in poly(), q in poly(), x in rational()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let f = RatFunc::from_poly(p.clone());
        let g = RatFunc::from_poly(q.clone()).recip().unwrap();
        let fg = &f * &g;
        prop_assert_eq!(fg.order_at(&x).unwrap(), f.order_at(&x).unwrap() + g.order_at(&x).unwrap());
    }

    #[test]
    fn zeta_product_text_round_trips(p in zeta_product()) {
        prop_assert_eq!(ZetaProduct::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn zeta_product_group_laws(p in zeta_product(), q in zeta_product()) {
        prop_assert!(p.mul(&p.inv()).is_one());
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).div(&q), p);
    }

    #[test]
    fn zeta_orders_add(p in zeta_product(), q in zeta_product(), s0 in -8i64..8) {
        let s0 = int(s0);
        let (a, b) = (order_report(&p, &s0).unwrap().total, order_report(&q, &s0).unwrap().total);
        let ab = order_report(&p.mul(&q), &s0).unwrap().total;
        prop_assert_eq!(ab, a.add(&b));
        prop_assert!(ab.exact_value().is_some());
    }

    #[test]
    fn theta_expansion_preserves_order(c in -8i64..8, e in -2i32..3, s0 in 0i64..20) {
        let arg = FactorArg::plain(AffineForm::new(int(1), int(c)));
        let p = ZetaProduct::single(FactorKind::ZetaTheta, arg, e);
        let s0 = int(s0);
        prop_assert_eq!(order_report(&p, &s0).unwrap().total, order_report(&p.expand_theta(), &s0).unwrap().total);
    }

    #[test]
    fn weyl_length_counts_inversions(letters in prop::collection::vec(0usize..8, 0..14)) {
        for t in ["D4", "E6"] {
            let rs = RootSystem::cartan(t).unwrap();
            let w = element_of(&rs, &letters);
            prop_assert_eq!(rs.length(&w), rs.inversions(&w).count());
            prop_assert_eq!(rs.length(&w), rs.length(&w.inverse()));
            prop_assert_eq!(w.mul(&w.inverse()), rs.identity());
            let word = rs.canonical_word(&w);
            prop_assert!(rs.is_reduced(&word).unwrap());
            prop_assert_eq!(rs.elem(&word).unwrap(), w);
        }
    }

    #[test]
    fn gk_cfunction_factors_along_reduced_products(a in prop::collection::vec(0usize..5, 0..8), b in prop::collection::vec(0usize..5, 0..8)) {
        let rs = RootSystem::cartan("D5").unwrap();
        let (w1, w2) = (element_of(&rs, &a), element_of(&rs, &b));
        let w = w1.mul(&w2);
        prop_assume!(rs.length(&w) == rs.length(&w1) + rs.length(&w2));
        let lambda: Vec<AffineForm> = (0..5).map(|k| AffineForm::new(int(k + 1), rat(1 - 2 * k, 3))).collect();
        let whole = gk_cfunction(&rs, &lambda, &w).product;
        let inner = gk_cfunction(&rs, &lambda, &w2).product;
        let outer = gk_cfunction(&rs, &w2.apply_affine(&lambda), &w1).product;
        prop_assert_eq!(whole, outer.mul(&inner));
    }

    #[test]
    fn recipe_inverse_pairs_cancel(c in -9i64..9, k in 1u32..4, s0 in 20i64..40) {
        let core = format!("d(s+{c})^{k} A1 d(s-1) e3");
        let padded = format!("A1 A1^-1 d(s+{c})^{k} A1^-1 A1 A1 d(s-1) e3");
        let (x, y) = (MatrixRecipe::parse(&core).unwrap().evaluate().unwrap(), MatrixRecipe::parse(&padded).unwrap().evaluate().unwrap());
        prop_assert_eq!(x.eval_at(&int(s0)).unwrap(), y.eval_at(&int(s0)).unwrap());
    }

    #[test]
    fn recipe_powers_concatenate(c in -9i64..9, j in 1u32..3, k in 1u32..3, s0 in 20i64..40) {
        let joined = MatrixRecipe::parse(&format!("d(s+{c})^{} A1 e3", j + k)).unwrap().evaluate().unwrap();
        let split = MatrixRecipe::parse(&format!("d(s+{c})^{j} d(s+{c})^{k} A1 e3")).unwrap().evaluate().unwrap();
        prop_assert_eq!(joined.eval_at(&int(s0)).unwrap(), split.eval_at(&int(s0)).unwrap());
    }

    #[test]
    fn octonion_norm_is_multiplicative(x in prop::array::uniform8(-4i64..5), y in prop::array::uniform8(-4i64..5)) {
        for flavor in [Flavor::Definite, Flavor::Split] {
            let oct = OctAlgebra::<Rational>::new(flavor);
            let (a, b) = (oct.from_ints(x), oct.from_ints(y));
            prop_assert_eq!(oct.norm(&oct.mul(&a, &b)), oct.norm(&a) * oct.norm(&b));
            prop_assert_eq!(oct.mul(&a, &oct.conj(&a)), oct.scalar(oct.norm(&a)));
        }
    }

    #[test]
    fn octonion_alternative_laws_mod_p(x in prop::array::uniform8(0i64..7), y in prop::array::uniform8(0i64..7)) {
        let oct = OctAlgebra::<Fp<7>>::new(Flavor::Split);
        let (a, b) = (oct.from_ints(x), oct.from_ints(y));
        prop_assert_eq!(oct.mul(&oct.mul(&a, &a), &b), oct.mul(&a, &oct.mul(&a, &b)));
        prop_assert_eq!(oct.mul(&oct.mul(&b, &a), &a), oct.mul(&b, &oct.mul(&a, &a)));
    }

    #[test]
    fn albert_sharp_identities(c in prop::array::uniform3(-3i64..4), x in prop::array::uniform3(prop::array::uniform8(-2i64..3))) {
        let alg = Albert::<Rational>::new(Flavor::Split);
        let oct = OctAlgebra::<Rational>::new(Flavor::Split);
        let a = alg.element(c.map(int), x.map(|v| oct.from_ints(v)));
        let s = alg.sharp(&a);
        prop_assert_eq!(&s, &alg.sharp_by_matrices(&a));
        prop_assert_eq!(alg.sharp(&s), alg.scale(&alg.norm(&a), &a));
        prop_assert_eq!(alg.pairing(&a, &s), int(3) * alg.norm(&a));
    }

    #[test]
    fn albert_rank_is_invariant_under_scaling(c in prop::array::uniform3(-3i64..4), x in prop::array::uniform3(prop::array::uniform8(-2i64..3)), k in prop::sample::select(vec![-3i64, -1, 2, 5])) {
        let alg = Albert::<Rational>::new(Flavor::Definite);
        let oct = OctAlgebra::<Rational>::new(Flavor::Definite);
        let a = alg.element(c.map(int), x.map(|v| oct.from_ints(v)));
        prop_assert_eq!(alg.rank(&alg.scale(&int(k), &a)), alg.rank(&a));
        prop_assert_eq!(alg.norm(&alg.scale(&int(k), &a)), int(k * k * k) * alg.norm(&a));
    }

    #[test]
    fn prime_field_inverse(n in 1i64..23) {
        let x = Fp::<23>::from_i64(n);
        prop_assert_eq!(x * x.inv().unwrap(), Fp::<23>::one());
    }
}
