//! Exact symbolic computation for quantum real weighted projective planes.
//!
//! The crate ships the presented algebras `O(Σ_q³)`, its fixed-point
//! subalgebras `O(Σ_q³(l,±))` and the coinvariant algebras `O(RP_q²(l;±))`
//! as confluent rewrite systems over `ℚ[q, q⁻¹]`, together with the circle
//! coactions (as gradings), strong connections, line-bundle projectors and
//! truncated operator representations used to cross-check them numerically.
//!
//! Scalars are generic where the arithmetic is: [`coeff::LaurentPoly`] is
//! parameterised by its coefficient ring and [`reps::TruncatedRep`] by its
//! real field. The aliases below fix the concrete choices used everywhere
//! else.

pub mod assocmod;
pub mod coeff;
pub mod error;
pub mod grading;
pub mod linalg;
pub mod ncalg;
pub mod principal;
pub mod report;
pub mod reps;
pub mod suite;
pub mod text;

pub use error::{Error, Result};

/// Exact rationals with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Laurent polynomials in `q` with rational coefficients.
pub type QPoly = coeff::LaurentPoly<Rational>;

/// Polynomials in the coinvariant generator `a` with `QPoly` coefficients.
pub type APoly = coeff::DensePoly<QPoly>;

/// Truncated representation in double precision.
pub type Rep = reps::TruncatedRep<f64>;

pub use ncalg::{Element, Presentation, Word};

/// Which of the two families: `O(RP_q²(l;−))` over `O(Σ_q³(l,−))`, or
/// `O(RP_q²(l;+))` over `O(Σ_q³(l,+))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Neg,
    Pos,
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "neg" | "-" | "minus" => Ok(Sign::Neg),
            "pos" | "+" | "plus" => Ok(Sign::Pos),
            _ => Err(Error::InvalidArgument(format!("unknown case `{s}`, expected neg or pos"))),
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Neg => "neg",
            Sign::Pos => "pos",
        })
    }
}
