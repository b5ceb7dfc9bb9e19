use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, One, Zero};

/// Dense univariate polynomial with coefficients in a commutative ring `R`.
///
/// Used for polynomials in the single coinvariant generator `a` (Chern
/// polynomials, the commutative degree-zero block) with `R = QPoly`, and for
/// q-specialised arithmetic with `R = Rational`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePoly<R> {
    coeffs: Vec<R>,
}

impl<R: Clone + Zero + PartialEq> DensePoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn map<S: Clone + Zero + PartialEq>(&self, f: impl Fn(&R) -> S) -> DensePoly<S> {
        DensePoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Clone + Zero + One + PartialEq> DensePoly<R> {
    /// The variable itself.
    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R> DensePoly<R>
where
    R: Clone + Zero + One + PartialEq,
    for<'a> &'a R: Mul<&'a R, Output = R> + Add<&'a R, Output = R>,
{
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(λ x)`, i.e. the i-th coefficient multiplied by `λ^i`.
    pub fn rescale(&self, lambda: &R) -> Self {
        let mut pw = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw = &pw * lambda;
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|v| v * c).collect())
    }
}

impl<'a, R> Add<&'a DensePoly<R>> for &'a DensePoly<R>
where
    R: Clone + Zero + PartialEq,
    for<'b> &'b R: Add<&'b R, Output = R>,
{
    type Output = DensePoly<R>;
    fn add(self, rhs: &'a DensePoly<R>) -> DensePoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = R::zero();
        DensePoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl<'a, R> Sub<&'a DensePoly<R>> for &'a DensePoly<R>
where
    R: Clone + Zero + PartialEq,
    for<'b> &'b R: Sub<&'b R, Output = R>,
{
    type Output = DensePoly<R>;
    fn sub(self, rhs: &'a DensePoly<R>) -> DensePoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = R::zero();
        DensePoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl<'a, R> Mul<&'a DensePoly<R>> for &'a DensePoly<R>
where
    R: Clone + Zero + PartialEq,
    for<'b> &'b R: Mul<&'b R, Output = R> + Add<&'b R, Output = R>,
{
    type Output = DensePoly<R>;
    fn mul(self, rhs: &'a DensePoly<R>) -> DensePoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        DensePoly::new(out)
    }
}

impl<R> Neg for &DensePoly<R>
where
    R: Clone + Zero + PartialEq,
    for<'b> &'b R: Neg<Output = R>,
{
    type Output = DensePoly<R>;
    fn neg(self) -> DensePoly<R> {
        DensePoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<R: Num + Clone> DensePoly<R> {
    /// Division with remainder; `R` must be a field.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![R::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].clone() - c.clone() * dj.clone();
                }
            }
            quot[k] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; `R` must be a field.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.coeffs.last().cloned() {
            None => a,
            Some(lead) => Self::new(a.coeffs.into_iter().map(|c| c / lead.clone()).collect()),
        }
    }
}

impl<R: Clone + Zero + One + PartialEq + fmt::Display> fmt::Display for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = text.trim_start_matches('-').contains([' ', '+', '-']);
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            let body = if compound { format!("({body})") } else { body };
            let power = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            let term = match (body.as_str(), i) {
                (_, 0) => body.clone(),
                ("1", _) => power,
                _ => format!("{body} {power}"),
            };
            if out.is_empty() {
                out.push_str(if neg { "-" } else { "" });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn gcd_over_rationals() {
        // (a-1)(a-2) and (a-1)(a+3)
        let p = DensePoly::new(vec![r(2), r(-3), r(1)]);
        let q = DensePoly::new(vec![r(-3), r(2), r(1)]);
        assert_eq!(p.gcd(&q), DensePoly::new(vec![r(-1), r(1)]));
        let coprime = DensePoly::new(vec![r(1), r(1)]);
        assert_eq!(p.gcd(&coprime), DensePoly::one());
    }

    #[test]
    fn rescale_and_eval() {
        let p = DensePoly::new(vec![r(1), r(2), r(3)]);
        assert_eq!(p.eval(&r(2)), r(17));
        assert_eq!(p.rescale(&r(2)).eval(&r(1)), r(17));
        let prod = &p * &DensePoly::x();
        assert_eq!(prod.degree(), Some(3));
    }
}
