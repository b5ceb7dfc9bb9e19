use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Signed;

use super::expr::{add_term, Expr};
use super::rewrite::{reduce_terms, Strategy};
use super::{Letter, Presentation, Word};
use crate::error::{Error, Result};
use crate::text::ParseError;
use crate::QPoly;

/// Element of a presented algebra, always in normal form.
#[derive(Clone)]
pub struct Element {
    pres: Arc<Presentation>,
    terms: BTreeMap<Word, QPoly>,
}

impl Element {
    pub fn zero(pres: &Arc<Presentation>) -> Self {
        Self {
            pres: pres.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(pres: &Arc<Presentation>) -> Self {
        Self::monomial(pres, Word::one(), QPoly::one())
    }

    pub fn scalar(pres: &Arc<Presentation>, c: QPoly) -> Self {
        Self::monomial(pres, Word::one(), c)
    }

    /// `c·w`, reduced if `w` is not normal.
    pub fn monomial(pres: &Arc<Presentation>, w: Word, c: QPoly) -> Self {
        Self::from_terms(pres, [(w, c)])
    }

    pub fn letter(pres: &Arc<Presentation>, l: Letter) -> Self {
        Self::monomial(pres, Word::letter(l), QPoly::one())
    }

    pub fn central(pres: &Arc<Presentation>, t: i64) -> Self {
        assert!(pres.has_central() || t == 0, "{} has no central unitary", pres.id());
        Self::monomial(pres, Word::central_power(t), QPoly::one())
    }

    /// Reduces an arbitrary linear combination of words.
    pub fn from_terms(pres: &Arc<Presentation>, terms: impl IntoIterator<Item = (Word, QPoly)>) -> Self {
        Self::from_terms_with(pres, terms, Strategy::Leftmost)
    }

    pub fn from_terms_with(
        pres: &Arc<Presentation>,
        terms: impl IntoIterator<Item = (Word, QPoly)>,
        strategy: Strategy,
    ) -> Self {
        Self {
            pres: pres.clone(),
            terms: reduce_terms(pres, terms, strategy),
        }
    }

    pub fn parse(pres: &Arc<Presentation>, s: &str) -> std::result::Result<Self, ParseError> {
        let e = pres.parse_expr(s)?;
        Ok(Self::eval(pres, &e))
    }

    /// Evaluates a raw expression, rewriting after every product.
    pub fn eval(pres: &Arc<Presentation>, e: &Expr) -> Self {
        Self::eval_with(pres, e, Strategy::Leftmost)
    }

    pub fn eval_with(pres: &Arc<Presentation>, e: &Expr, strategy: Strategy) -> Self {
        let one = Self::one(pres);
        let letter = |l: Letter| Self::letter(pres, l);
        let central = |t: i64| Self::central(pres, t);
        match strategy {
            Strategy::Leftmost => e.evaluate(&one, &letter, &central),
            Strategy::Random(seed) => eval_random(pres, e, seed, &mut 0),
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> &BTreeMap<Word, QPoly> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, QPoly> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> QPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Word::one()).is_some_and(|c| c.is_one())
    }

    pub fn zero_like(&self) -> Self {
        Self::zero(&self.pres)
    }

    pub fn one_like(&self) -> Self {
        Self::one(&self.pres)
    }

    pub fn scale(&self, c: &QPoly) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        Self {
            pres: self.pres.clone(),
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.pres.id() == other.pres.id() {
            Ok(())
        } else {
            Err(Error::PresentationMismatch {
                left: self.pres.id().to_string(),
                right: other.pres.id().to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, w.clone(), c);
        }
        Ok(Self {
            pres: self.pres.clone(),
            terms,
        })
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.mul_with(other, Strategy::Leftmost))
    }

    pub fn mul_with(&self, other: &Element, strategy: Strategy) -> Element {
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                raw.push((wa.concat(wb), ca * cb));
            }
        }
        Self::from_terms_with(&self.pres, raw, strategy)
    }

    /// The involution: reverses words, stars letters, inverts the central power.
    pub fn star(&self) -> Element {
        let raw = self.terms.iter().map(|(w, c)| (star_word(&self.pres, w), c.clone()));
        Self::from_terms(&self.pres, raw)
    }

    /// Sub-sum of the terms whose word satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Word) -> bool) -> Element {
        Self {
            pres: self.pres.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_expr(&self) -> Expr {
        Expr::Sum(
            self.terms
                .iter()
                .map(|(w, c)| {
                    let mut f = vec![Expr::Scalar(c.clone())];
                    f.extend(w.letters.iter().map(|l| Expr::Letter(*l)));
                    if w.central != 0 {
                        f.push(Expr::Central(w.central));
                    }
                    Expr::Product(f)
                })
                .collect(),
        )
    }
}

/// Star of a single word, not reduced.
pub(crate) fn star_word(pres: &Presentation, w: &Word) -> Word {
    let mut letters = Vec::with_capacity(w.letters.len());
    let mut central = -w.central;
    for &l in w.letters.iter().rev() {
        let info = &pres.letters()[l as usize];
        letters.push(info.star);
        central += info.star_central;
    }
    Word::new(letters, central)
}

fn next_seed(seed: u64, counter: &mut u64) -> u64 {
    *counter += 1;
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(*counter)
}

fn eval_random(pres: &Arc<Presentation>, e: &Expr, seed: u64, counter: &mut u64) -> Element {
    match e {
        Expr::Product(fs) => {
            let mut acc = Element::one(pres);
            for f in fs {
                let p = eval_random(pres, f, seed, counter);
                acc = acc.mul_with(&p, Strategy::Random(next_seed(seed, counter)));
            }
            acc
        }
        Expr::Pow(b, n) => {
            let base = eval_random(pres, b, seed, counter);
            let mut acc = Element::one(pres);
            for _ in 0..*n {
                acc = acc.mul_with(&base, Strategy::Random(next_seed(seed, counter)));
            }
            acc
        }
        Expr::Sum(ts) => {
            let mut acc = Element::zero(pres);
            for t in ts {
                acc = &acc + &eval_random(pres, t, seed, counter);
            }
            acc
        }
        Expr::Neg(t) => -&eval_random(pres, t, seed, counter),
        Expr::Scalar(c) => Element::scalar(pres, c.clone()),
        Expr::Letter(l) => Element::letter(pres, *l),
        Expr::Central(t) => Element::central(pres, *t),
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.pres.id() == other.pres.id() && self.terms == other.terms
    }
}

impl Eq for Element {}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        self + &(-rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            pres: self.pres.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, rhs: &'a Element) -> Element {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let word = if w.is_one() {
                None
            } else {
                Some(self.pres.word_to_string(w))
            };
            let (neg, body) = coeff_text(c, word.is_some());
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (body, word) {
                (Some(b), Some(w)) => write!(f, "{b} {w}")?,
                (Some(b), None) => f.write_str(&b)?,
                (None, Some(w)) => f.write_str(&w)?,
                (None, None) => f.write_str("1")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({self})", self.pres.id())
    }
}

/// Splits a coefficient into a sign and the text printed before the word;
/// `None` stands for a unit coefficient.
fn coeff_text(c: &QPoly, has_word: bool) -> (bool, Option<String>) {
    if let Some((v, e)) = c.as_monomial() {
        let neg = v.is_negative();
        let m = QPoly::monomial(v.abs(), e);
        if m.is_one() && has_word {
            return (neg, None);
        }
        return (neg, Some(m.to_string()));
    }
    (false, Some(format!("({c})")))
}
