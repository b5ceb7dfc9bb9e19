use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{Float, FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::text::{self, ParseError, Syntax};
use crate::Rational;

/// Laurent polynomial in the deformation parameter `q`.
///
/// Stored as a sparse exponent map; zero coefficients are never stored, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i64, R>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("cannot evaluate a Laurent polynomial with negative exponents at q = 0")]
    ZeroWithNegativeExponent,
}

impl<R> Default for LaurentPoly<R> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<R: Num + Clone> LaurentPoly<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: R, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(R::one(), e)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> R {
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, e))` when the polynomial is the single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(&R, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: i64, c: R) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(R::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^k` (k may be negative; k = 0 collapses to the
    /// value at q = 1).
    pub fn dilate(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by the monomial `c q^e`.
    pub fn div_monomial(&self, c: &R, e: i64) -> Self {
        assert!(!c.is_zero(), "division by zero monomial");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k - e, v.clone() / c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at a nonzero scalar of the coefficient ring.
    pub fn eval_exact(&self, q0: &R) -> R {
        assert!(!q0.is_zero() || self.min_exp().unwrap_or(0) >= 0);
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut p = R::one();
            let base = if *e >= 0 {
                q0.clone()
            } else {
                R::one() / q0.clone()
            };
            for _ in 0..e.unsigned_abs() {
                p = p * base.clone();
            }
            acc = acc + c.clone() * p;
        }
        acc
    }
}

impl<R: Num + Clone + ToPrimitive> LaurentPoly<R> {
    /// Floating-point evaluation at `q = q0`.
    pub fn eval<F: Float>(&self, q0: F) -> Result<F, EvalError> {
        if q0.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(EvalError::ZeroWithNegativeExponent);
        }
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let c = F::from(c.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan);
            acc = acc + c * q0.powi(*e as i32);
        }
        Ok(acc)
    }
}

impl<R: Num + Clone> Zero for LaurentPoly<R> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Num + Clone> One for LaurentPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Num + Clone + FromPrimitive> From<i64> for LaurentPoly<R> {
    fn from(v: i64) -> Self {
        Self::constant(R::from_i64(v).expect("integer coefficient"))
    }
}

impl<'a, R: Num + Clone> Add<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: &'a LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<R: Num + Clone> Add for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<'a, R: Num + Clone> AddAssign<&'a LaurentPoly<R>> for LaurentPoly<R> {
    fn add_assign(&mut self, rhs: &'a LaurentPoly<R>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a, R: Num + Clone> SubAssign<&'a LaurentPoly<R>> for LaurentPoly<R> {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly<R>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, R::zero() - c.clone());
        }
    }
}

impl<'a, R: Num + Clone> Sub<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: &'a LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<R: Num + Clone> Sub for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<R: Num + Clone> Neg for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .into_iter()
                .map(|(e, c)| (e, R::zero() - c))
                .collect(),
        }
    }
}

impl<R: Num + Clone> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        -(self.clone())
    }
}

impl<'a, R: Num + Clone> Mul<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: &'a LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Num + Clone> Mul for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<R: Signed + Clone + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if *e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl<R: Signed + Clone + fmt::Display> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl LaurentPoly<Rational> {
    /// Converts a parsed syntax tree that mentions no identifier besides `q`.
    pub(crate) fn from_syntax(s: &Syntax) -> Result<Self, ParseError> {
        Ok(match s {
            Syntax::Number(r) => Self::constant(r.clone()),
            Syntax::Ident { name, starred, pos } => {
                // q is real, so q* = q.
                let _ = starred;
                if name == "q" {
                    Self::q_pow(1)
                } else {
                    return Err(ParseError::new(*pos, format!("unknown symbol `{name}`")));
                }
            }
            Syntax::Sum(ts) => {
                let mut acc = Self::zero();
                for t in ts {
                    acc += &Self::from_syntax(t)?;
                }
                acc
            }
            Syntax::Product(fs) => {
                let mut acc = Self::one();
                for t in fs {
                    acc = &acc * &Self::from_syntax(t)?;
                }
                acc
            }
            Syntax::Neg(t) => -Self::from_syntax(t)?,
            Syntax::Pow(b, e, pos) => {
                let base = Self::from_syntax(b)?;
                if *e >= 0 {
                    base.pow(*e as u32)
                } else if let Some((c, k)) = base.as_monomial() {
                    let inv = Self::monomial(Rational::one() / c.clone(), -k);
                    inv.pow(e.unsigned_abs() as u32)
                } else {
                    return Err(ParseError::new(
                        *pos,
                        "negative powers are only defined for monomials",
                    ));
                }
            }
        })
    }
}

impl FromStr for LaurentPoly<Rational> {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::from_syntax(&text::parse(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("q + q^-1") + &p("-q"), p("q^-1"));
        assert_eq!(&QPoly::zero() + &p("q^3 - 2"), p("q^3 - 2"));
        assert!((&p("1 - q^-2") + &p("q^-2 - 1")).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert!((&p("q^2") * &p("q^-2")).is_one());
        assert_eq!(&p("1 + q") * &p("1 - q"), p("1 - q^2"));
        assert_eq!(&p("q^-1") * &p("q + q^3"), p("1 + q^2"));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("q^2").eval(0.5f64).unwrap(), 0.25);
        assert_eq!(p("q^-1").eval(0.5f64).unwrap(), 2.0);
        assert_eq!(p("1 - q^-2").eval(0.5f64).unwrap(), -3.0);
        assert_eq!(
            p("q^-1").eval(0.0f64),
            Err(EvalError::ZeroWithNegativeExponent)
        );
        assert_eq!(p("1 + q").eval(0.0f64).unwrap(), 1.0);
        assert_eq!(p("q^-2").eval(0.5f32).unwrap(), 4.0f32);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let s = "3/2*q^-2 - 1 + q^4";
        assert_eq!(p(s).to_string(), s);
        assert_eq!(p("-q").to_string(), "-q");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p("(1 + q)^2").to_string(), "1 + 2*q + q^2");
        assert_eq!(p("(2*q)^-1").to_string(), "1/2*q^-1");
    }

    #[test]
    fn parse_rejects_foreign_symbols() {
        let e = "1 + z0".parse::<QPoly>().unwrap_err();
        assert_eq!(e.pos, 4);
        assert!("(1+q)^-1".parse::<QPoly>().is_err());
    }

    #[test]
    fn float_coefficients_work_too() {
        let a = LaurentPoly::<f64>::from_terms([(1, 2.0), (-1, 0.5)]);
        let b = LaurentPoly::<f64>::monomial(4.0, 1);
        let prod = &a * &b;
        assert_eq!(prod.coeff(2), 8.0);
        assert_eq!(prod.coeff(0), 2.0);
        assert_eq!(a.eval(2.0f64).unwrap(), 4.25);
    }

    #[test]
    fn exact_evaluation_and_dilation() {
        let x = p("q^-2 + 3*q");
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(x.eval_exact(&half), Rational::from_integer(4.into()) + Rational::new(3.into(), 2.into()));
        assert_eq!(x.dilate(-1), p("q^2 + 3*q^-1"));
        assert_eq!(x.dilate(0), p("4"));
    }
}
