use foliation_core::linalg::poly_determinant;
use foliation_core::{
    cofactor, gcd, member_with_lift, trivial_generators, GroebnerBasis, Monomial, MonomialOrder, Poly,
    Rational, VectorField,
};
use proptest::prelude::*;

fn poly(nvars: usize, maxdeg: u32) -> impl Strategy<Value = Poly> {
    let monos = Monomial::all_up_to(nvars, maxdeg);
    let len = monos.len();
    prop::collection::vec((0..len, -4i64..=4, 1i64..=3), 0..5).prop_map(move |terms| {
        Poly::from_terms(
            nvars,
            terms.into_iter().map(|(i, n, d)| (monos[i].clone(), Rational::new(n.into(), d.into()))),
        )
    })
}

fn nonconstant(nvars: usize, maxdeg: u32) -> impl Strategy<Value = Poly> {
    poly(nvars, maxdeg).prop_filter("nonconstant", |p| !p.is_constant())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(3, 3), b in poly(3, 3), c in poly(3, 3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(3), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(2, 3), b in poly(2, 3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), Some(a));
    }

    #[test]
    fn gcd_divides_and_scales(a in poly(2, 2), b in poly(2, 2), c in nonconstant(2, 2)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = gcd(&a, &b).unwrap();
        prop_assert!(a.exact_divide(&g).unwrap().is_some());
        prop_assert!(b.exact_divide(&g).unwrap().is_some());
        // gcd(ac, bc) = gcd(a, b) * normalized(c)
        let gc = gcd(&(&a * &c), &(&b * &c)).unwrap();
        prop_assert_eq!(gc, (&g * &c).normalized());
    }

    #[test]
    fn leibniz_rule(a in poly(2, 3), b in poly(2, 3), x in prop::collection::vec(poly(2, 2), 2)) {
        let x = VectorField::new(x).unwrap();
        let lhs = x.apply(&(&a * &b)).unwrap();
        let rhs = &(&x.apply(&a).unwrap() * &b) + &(&a * &x.apply(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_is_consistent(
        g in prop::collection::vec(nonconstant(2, 2), 1..3),
        coeffs in prop::collection::vec(poly(2, 2), 3),
        stray in poly(2, 3),
    ) {
        let member = g.iter().zip(&coeffs).fold(Poly::zero(2), |acc, (gi, ci)| &acc + &(gi * ci));
        let lift = member_with_lift(&member, &g).unwrap().expect("combination is a member");
        let back = lift.iter().zip(&g).fold(Poly::zero(2), |acc, (c, gi)| &acc + &(c * gi));
        prop_assert_eq!(back, member);

        let grevlex = GroebnerBasis::new(&g, MonomialOrder::Grevlex).unwrap();
        let lex = GroebnerBasis::new(&g, MonomialOrder::Lex).unwrap();
        prop_assert!(grevlex.satisfies_buchberger_criterion());
        prop_assert!(lex.satisfies_buchberger_criterion());
        prop_assert_eq!(grevlex.lift(&stray).unwrap().is_some(), lex.lift(&stray).unwrap().is_some());
    }

    #[test]
    fn cofactors_form_an_ideal(f in nonconstant(2, 3), a in poly(2, 2), b in poly(2, 2)) {
        let t = trivial_generators(&f).unwrap();
        let x = t.x1.times(&a).add(&t.x2.times(&b)).add(&t.hamiltonian);
        let k = cofactor(&f, &x).unwrap().expect("invariant");
        let expect = &(&a * &f.partial_derivative(0).unwrap()) + &(&b * &f.partial_derivative(1).unwrap());
        prop_assert_eq!(k.value(), &expect);
    }

    #[test]
    fn determinant_alternates(rows in prop::collection::vec(prop::collection::vec(poly(2, 1), 3), 3)) {
        let det = poly_determinant(&rows, 2);
        let mut swapped = rows.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(poly_determinant(&swapped, 2), -det.clone());
        let mut repeated = rows.clone();
        repeated[1] = repeated[0].clone();
        prop_assert!(poly_determinant(&repeated, 2).is_zero());
    }
}
