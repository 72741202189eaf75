use arborium::algebra::{series_pow_symbolic, MultiPoly};
use arborium::arbor::random_arbor;
use arborium::cli::PolyJson;
use arborium::invariants::{k_poly, laplace, truncate_tn, zeta_poly};
use arborium::oracle::build_poset;
use arborium::{parse_arbor, Arbor, Monomial, Poly, Poly64, Rat, Rat64, Var};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

/// Polynomials in u, X, Y with small exponents.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), small_rat()), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|((a, b, c), k)| {
            (
                Monomial::from_pairs(&[(Var::U, a), (Var::X, b), (Var::Y, c)]),
                k,
            )
        }))
    })
}

/// Polynomials in E and V in which every monomial has a V.
fn ev_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((1u32..5, 0u32..8), small_rat()), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(
            terms
                .into_iter()
                .map(|((a, b), k)| (Monomial::from_pairs(&[(Var::V, a), (Var::E, b)]), k)),
        )
    })
}

fn arbor(max: usize) -> impl Strategy<Value = Arbor> {
    (1..=max, any::<u64>())
        .prop_map(|(n, seed)| random_arbor(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_undoes_multiplication(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn truncation_is_linear_and_idempotent(p in ev_poly(), q in ev_poly(), c in small_rat(), n in 1u32..7) {
        let tp = truncate_tn(&p, n).unwrap();
        let tq = truncate_tn(&q, n).unwrap();
        let combo = &p + &q.scale(&c);
        prop_assert_eq!(truncate_tn(&combo, n).unwrap(), &tp + &tq.scale(&c));
        prop_assert_eq!(truncate_tn(&tp, n).unwrap(), tp);
    }

    #[test]
    fn serialization_round_trips(t in arbor(9)) {
        let text = t.serialize();
        let back = parse_arbor(&text).unwrap();
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn constraints_are_laminar(t in arbor(9)) {
        let cs = t.constraints();
        prop_assert_eq!(cs.len(), t.vertex_count());
        for a in &cs {
            prop_assert_eq!(a.bound as usize, a.support.len());
            for b in &cs {
                let nested = a.support.is_subset(&b.support) || b.support.is_subset(&a.support);
                prop_assert!(nested || a.support.is_disjoint(&b.support));
            }
        }
    }

    #[test]
    fn invariants_ignore_child_order(t in arbor(7)) {
        let flipped = t.reorder_children(|cs| (0..cs.len()).rev().collect());
        prop_assert_eq!(zeta_poly::<Rat>(&t), zeta_poly::<Rat>(&flipped));
        prop_assert_eq!(k_poly::<Rat>(&t), k_poly::<Rat>(&flipped));
        prop_assert_eq!(laplace::<Rat>(&t).unwrap(), laplace::<Rat>(&flipped).unwrap());
    }

    #[test]
    fn symbolic_power_matches_integer_power(a in -3i64..4, b in -3i64..4, u in 0u32..5) {
        let order = 6;
        let s = MultiPoly::var(Var::S);
        let num: Poly = &MultiPoly::one() + &s.scale(&rat(a, 1));
        let den: Poly = &MultiPoly::one() - &s.scale(&rat(b, 1));
        let symbolic = series_pow_symbolic(&num, &den, order).unwrap();
        let at_u = symbolic.eval_at(Var::U, &rat(u as i64, 1));
        // (1 + a s)^u · (1 − b s)^{−u}, with the inverse as a geometric series
        let mut geometric = Poly::zero();
        for k in 0..=order as u32 {
            geometric = &geometric + &MultiPoly::term(Monomial::var(Var::S, k), rat(b.pow(k), 1));
        }
        let product = &num.pow(u) * &geometric.pow(u);
        for k in 0..=order {
            prop_assert_eq!(at_u.coeff(k), &product.coeff_of(Var::S, k as u32));
        }
    }

    #[test]
    fn json_round_trips(p in poly()) {
        let json = serde_json::to_string(&PolyJson::from_poly(&p)).unwrap();
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_poly::<Rat>().unwrap(), p);
    }

    #[test]
    fn fixed_width_rationals_agree(t in arbor(5)) {
        let wide: Poly = zeta_poly(&t);
        let narrow: Poly64 = zeta_poly(&t);
        prop_assert_eq!(narrow.to_string(), wide.to_string());
        let k64: Poly64 = k_poly(&t);
        prop_assert_eq!(k64.eval(&[(Var::X, Rat64::from_integer(1)), (Var::Y, Rat64::from_integer(1))]),
            Rat64::from_integer(build_poset(&t).len() as i64));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn mobius_satisfies_its_defining_identity(t in arbor(4)) {
        let p = build_poset(&t);
        prop_assert!(p.mobius().satisfies_defining_identity(&p));
    }
}
