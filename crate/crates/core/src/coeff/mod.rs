//! Exact scalars: Laurent polynomials in `q` over a generic coefficient ring,
//! and dense univariate polynomials used for the commutative degree-zero
//! block.

mod laurent;
mod poly;

pub use laurent::{EvalError, LaurentPoly};
pub use poly::DensePoly;

use crate::{QPoly, Rational};

/// Shorthand for the integer `n` as an exact rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `c q^e` with an integer coefficient.
pub fn qmono(c: i64, e: i64) -> QPoly {
    QPoly::monomial(rat(c), e)
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((-20i64..=20, -9i64..=9, 1i64..=5), 0..6).prop_map(|ts| {
            QPoly::from_terms(
                ts.into_iter()
                    .map(|(e, n, d)| (e, Rational::new(n.into(), d.into()))),
            )
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
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), q0 in 0.3f64..0.95) {
            let lhs = (&a * &b).eval(q0).unwrap();
            let rhs = a.eval(q0).unwrap() * b.eval(q0).unwrap();
            // Cancellation can make the product small compared to its terms,
            // so scale the tolerance by the absolute-value evaluation.
            let mag = |p: &QPoly| -> f64 {
                p.terms().map(|(e, c)| {
                    use num_traits::{Signed, ToPrimitive};
                    c.abs().to_f64().unwrap() * q0.powi(e as i32)
                }).sum()
            };
            let scale = mag(&a) * mag(&b) + 1e-300;
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale, "{} vs {}", lhs, rhs);
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            let back: QPoly = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
