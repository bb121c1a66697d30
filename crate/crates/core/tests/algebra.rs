//! Algebraic laws and round-trips on random expressions reaching into the
//! epsilon levels.

use largeness::{parse_ordinal, render, Ordinal, Style};
use proptest::prelude::*;

fn base() -> impl Strategy<Value = String> {
    prop_oneof![Just("w".to_string()), (0u32..3).prop_map(|k| format!("e{k}"))]
}

fn expr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![(0u64..5).prop_map(|n| n.to_string()), base()];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) + ({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) * ({b})")),
            (base(), inner).prop_map(|(b, e)| format!("{b}^({e})")),
        ]
    })
}

fn ordinal() -> impl Strategy<Value = Ordinal> {
    expr().prop_map(|s| parse_ordinal(&s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn natural_sum_laws(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.natural_sum(&b), b.natural_sum(&a));
        prop_assert_eq!(a.natural_sum(&b).natural_sum(&c), a.natural_sum(&b.natural_sum(&c)));
        prop_assert_eq!(a.natural_sum(&Ordinal::ZERO), a.clone());
        if b < c {
            prop_assert!(a.natural_sum(&b) < a.natural_sum(&c));
        }
        // The natural sum dominates the ordinary sum in either order.
        prop_assert!(a.add(&b) <= a.natural_sum(&b));
        prop_assert!(b.add(&a) <= a.natural_sum(&b));
    }

    #[test]
    fn ordinary_arithmetic_laws(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a <= a.add(&b));
        if b < c {
            prop_assert!(a.add(&b) < a.add(&c));
        }
    }

    #[test]
    fn render_round_trips(a in ordinal()) {
        for style in [Style::Ascii, Style::Unicode] {
            let text = render(&a, style);
            prop_assert_eq!(parse_ordinal(&text).unwrap(), a.clone(), "{}", text);
        }
        let once = render(&a, Style::Ascii);
        prop_assert_eq!(render(&parse_ordinal(&once).unwrap(), Style::Ascii), once);
    }

    #[test]
    fn omega_view_round_trips(a in ordinal()) {
        let view = a.omega_view();
        prop_assert!(view.windows(2).all(|w| w[0].exp > w[1].exp));
        prop_assert!(view.iter().all(|t| t.coef > 0));
        prop_assert_eq!(Ordinal::from_omega_view(&view), a);
    }

    #[test]
    fn pseudonorm_bounds_the_parts(a in ordinal()) {
        if let Ok(terms) = a.to_base(a.base_level()) {
            for t in terms {
                prop_assert!(t.exp.psn() <= a.psn() && t.coef.psn() <= a.psn());
            }
        }
    }
}

#[test]
fn epsilons_are_fixpoints() {
    for m in 0..3 {
        let e = Ordinal::eps(m);
        assert_eq!(Ordinal::omega_pow(&e), e);
        assert_eq!(Ordinal::eps_pow(m - 1, &e), e);
        assert!(Ordinal::tower(4, m - 1).unwrap() < e);
    }
}
