use ambient_dirac::algebra::rewrite::{normalize_word, word_product, Strategy as Rewrite};
use ambient_dirac::clifford::{AmbientOps, PolySpinor, Signature};
use ambient_dirac::rng::seeded;
use ambient_dirac::solvers::{defect_is_cleared, even_extend, odd_extend};
use ambient_dirac::weighted::{random_filtered, y_inverse};
use ambient_dirac::{AlgebraElement, Gen, Monomial, Scalar, SymScalar};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

fn gen() -> impl Strategy<Value = Gen> {
    prop_oneof![Just(Gen::X), Just(Gen::Y), Just(Gen::H)]
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -6i64..6, 1i64..4), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(AlgebraElement::zero(), |acc, (a, b, c, n, d)| {
                &acc + &AlgebraElement::monomial(Monomial::new(a, b, c), q(n, d))
            })
    })
}

/// Element of pure parity: every monomial has `x`-degree plus `y`-degree
/// congruent to `odd`.
fn homogeneous(odd: bool) -> impl Strategy<Value = AlgebraElement> {
    element().prop_map(move |a| {
        let mut out = AlgebraElement::zero();
        for (m, c) in a.terms() {
            let shift = u32::from(((m.x + m.y) % 2 == 1) != odd);
            out = &out + &AlgebraElement::monomial(Monomial::new(m.x + shift, m.y, m.h), c.clone());
        }
        out
    })
}

fn graded_triple() -> impl Strategy<Value = (bool, bool, bool, AlgebraElement, AlgebraElement, AlgebraElement)>
{
    (any::<bool>(), any::<bool>(), any::<bool>()).prop_flat_map(|(a, b, c)| {
        (
            Just(a),
            Just(b),
            Just(c),
            homogeneous(a),
            homogeneous(b),
            homogeneous(c),
        )
    })
}

fn sign(odd_a: bool, odd_b: bool) -> Scalar {
    if odd_a && odd_b {
        q(-1, 1)
    } else {
        q(1, 1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn product_distributes(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.multiply(&(&b + &c)), &a.multiply(&b) + &a.multiply(&c));
    }

    #[test]
    fn super_jacobi((pa, pb, _, a, b, c) in graded_triple()) {
        let br = |u: &AlgebraElement, v: &AlgebraElement| u.super_commutator(v).unwrap();
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        let lhs = br(&a, &br(&b, &c));
        let rhs = &br(&br(&a, &b), &c) + &br(&b, &br(&a, &c)).scale(&sign(pa, pb));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_reverses_products(a in element(), b in element()) {
        prop_assert_eq!(a.multiply(&b).transpose(), b.transpose().multiply(&a.transpose()));
        prop_assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn rewriting_is_confluent(word in prop::collection::vec(gen(), 0..7), seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let direct = word_product(&word);
        for strategy in [Rewrite::Leftmost, Rewrite::Rightmost, Rewrite::Random] {
            prop_assert_eq!(normalize_word(&word, strategy, &mut rng), direct.clone());
        }
    }

    #[test]
    fn h_shifts_past_y_powers(p in 0u32..6, coeffs in prop::collection::vec((-5i64..5, 1i64..3), 1..4)) {
        let coeffs: Vec<Scalar> = coeffs.into_iter().map(|(n, d)| q(n, d)).collect();
        let yp = AlgebraElement::y().pow(p);
        let lhs = AlgebraElement::poly_in_h(&coeffs, &q(0, 1)).multiply(&yp);
        let rhs = yp.multiply(&AlgebraElement::poly_in_h(&coeffs, &q(-(p as i64), 1)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flat_model_is_a_representation(word in prop::collection::vec(gen(), 0..4), seed in any::<u64>()) {
        let sig = Signature { r: 2, s: 1 };
        let ops = AmbientOps::new(sig).unwrap();
        let mut rng = seeded(seed);
        let psi = PolySpinor::random(&mut rng, sig.dim(), sig.spinor_dim(), 2, 3);
        let direct = ops.apply_word(&word, &psi).unwrap();
        let via_normal_form = ops.eval_element(&word_product(&word), &psi).unwrap();
        prop_assert_eq!(direct, via_normal_form);
    }

    #[test]
    fn y_inverse_round_trip(p in 1usize..4, width in 1usize..4, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let mut next = 1;
        let w = SymScalar::w();
        let psi = random_filtered(&mut rng, &w, p..p + width, Some(p + width), 2, &mut next);
        prop_assert_eq!(y_inverse(&psi.act_y(), p, p + width).unwrap(), psi);
    }

    #[test]
    fn solvers_clear_defect_at_regular_weights(num in -20i64..20, den in 1i64..5) {
        let w = SymScalar::from_ratio(num, den);
        let even = even_extend(&w, 6);
        prop_assert!(even.obstruction.is_none() && defect_is_cleared(&even));
        let odd = odd_extend(&w, 5);
        prop_assert!(odd.obstruction.is_none() && defect_is_cleared(&odd));
        prop_assert_eq!(even_extend(&w, 6), even);
    }
}
