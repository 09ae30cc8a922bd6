//! Exact sparse multivariate polynomials over `ℚ`.
//!
//! All certificates live over the rationals: every system built here has
//! rational data, so the degree-bounded linear system has a rational solution
//! whenever it has a complex one.

mod cyclotomic;
mod monomial;
pub mod parse;
mod polynomial;
mod var;

pub use cyclotomic::{cyclotomic_polynomial, eval_cyclotomic, CyclotomicValue};
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use var::{Family, VarId};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Reduces every exponent modulo `d`.
pub fn normal_form_mod_unity(p: &Polynomial, d: u32) -> Polynomial {
    p.normal_form_mod_unity(d)
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (
            -5i64..=5,
            1i64..=3,
            proptest::collection::vec((1u32..=3, 0u32..=4), 0..3),
        );
        proptest::collection::vec(term, 0..5).prop_map(|ts| {
            Polynomial::from_terms(ts.into_iter().map(|(n, d, es)| {
                (
                    Monomial::from_pairs(es.into_iter().map(|(v, e)| (VarId::x(v), e))),
                    rat(n, d),
                )
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn normal_form_is_idempotent_homomorphism(a in arb_poly(), b in arb_poly(), d in 1u32..5) {
            let na = a.normal_form_mod_unity(d);
            prop_assert_eq!(na.normal_form_mod_unity(d), na.clone());
            let lhs = (&a * &b).normal_form_mod_unity(d);
            let rhs = (&na * &b.normal_form_mod_unity(d)).normal_form_mod_unity(d);
            prop_assert_eq!(lhs, rhs);
            for (m, _) in na.terms() {
                prop_assert!(m.iter().all(|(_, e)| e < d));
            }
        }

        #[test]
        fn cyclotomic_eval_respects_normal_form(a in arb_poly(), k in 1u32..7, c in proptest::collection::vec(0u32..6, 3)) {
            let asg: BTreeMap<VarId, u32> =
                (1..=3).map(|i| (VarId::x(i), c[i as usize - 1] % k)).collect();
            let direct = eval_cyclotomic(&a, k, &asg).unwrap();
            let reduced = eval_cyclotomic(&a.normal_form_mod_unity(k), k, &asg).unwrap();
            prop_assert_eq!(direct, reduced);
        }

        #[test]
        fn canonical_text_round_trips(a in arb_poly()) {
            let s = a.to_string();
            let back: Polynomial = s.parse().unwrap();
            prop_assert_eq!(back.to_string(), s);
            prop_assert_eq!(back, a);
        }
    }
}
