use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;


use crate::grading::{decompose, DegreeTable};
use crate::ncalg::{Element, Presentation, Word};
use crate::QPoly;

/// Element of `A ⊗ A`, stored as `Σ w ⊗ R_w` over distinct normal words `w`.
#[derive(Clone)]
pub struct TensorAA {
    pres: Arc<Presentation>,
    terms: BTreeMap<Word, Element>,
}

impl TensorAA {
    pub fn zero(p: &Arc<Presentation>) -> Self {
        Self {
            pres: p.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ 1`.
    pub fn one(p: &Arc<Presentation>) -> Self {
        Self::pair(&Element::one(p), &Element::one(p))
    }

    /// `a ⊗ b`.
    pub fn pair(a: &Element, b: &Element) -> Self {
        let mut t = Self::zero(a.presentation());
        for (w, c) in a.terms() {
            t.add_word(w.clone(), &b.scale(c));
        }
        t
    }

    fn add_word(&mut self, w: Word, r: &Element) {
        if r.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(|| r.zero_like());
        *slot = &*slot + r;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The pairs `(w, R_w)` with `w` a normal word.
    pub fn terms(&self) -> &BTreeMap<Word, Element> {
        &self.terms
    }

    /// Pairs as elements: left factors are the monomials `w`.
    pub fn pairs(&self) -> Vec<(Element, Element)> {
        self.terms
            .iter()
            .map(|(w, r)| (Element::monomial(&self.pres, w.clone(), QPoly::one()), r.clone()))
            .collect()
    }

    pub fn add(&self, other: &TensorAA) -> TensorAA {
        let mut out = self.clone();
        for (w, r) in &other.terms {
            out.add_word(w.clone(), r);
        }
        out
    }

    pub fn sub(&self, other: &TensorAA) -> TensorAA {
        self.add(&other.scale(&-QPoly::one()))
    }

    pub fn scale(&self, c: &QPoly) -> TensorAA {
        let mut out = Self::zero(&self.pres);
        for (w, r) in &self.terms {
            out.add_word(w.clone(), &r.scale(c));
        }
        out
    }

    /// `x · t`, acting on left factors.
    pub fn mul_left(&self, x: &Element) -> TensorAA {
        let mut out = Self::zero(&self.pres);
        for (w, r) in &self.terms {
            let xw = x * &Element::monomial(&self.pres, w.clone(), QPoly::one());
            for (w2, c) in xw.terms() {
                out.add_word(w2.clone(), &r.scale(c));
            }
        }
        out
    }

    /// `t · y`, acting on right factors.
    pub fn mul_right(&self, y: &Element) -> TensorAA {
        let mut out = Self::zero(&self.pres);
        for (w, r) in &self.terms {
            out.add_word(w.clone(), &(r * y));
        }
        out
    }

    /// Multiplication map `a ⊗ b ↦ ab`.
    pub fn mu(&self) -> Element {
        let mut acc = Element::zero(&self.pres);
        for (w, r) in &self.terms {
            acc = &acc + &(&Element::monomial(&self.pres, w.clone(), QPoly::one()) * r);
        }
        acc
    }

    /// `Σ ω² ω¹`, the multiplication map after the flip.
    pub fn flipped_mu(&self) -> Element {
        let mut acc = Element::zero(&self.pres);
        for (w, r) in &self.terms {
            acc = &acc + &(r * &Element::monomial(&self.pres, w.clone(), QPoly::one()));
        }
        acc
    }

    /// Lifted canonical map `a ⊗ a' ↦ a ϱ(a')` for the grading `t`.
    pub fn lifted_can(&self, t: &DegreeTable) -> TensorAH {
        let mut out = TensorAH::zero(&self.pres);
        for (w, r) in &self.terms {
            let left = Element::monomial(&self.pres, w.clone(), QPoly::one());
            for (d, part) in decompose(r, t) {
                out.add(d, &(&left * &part));
            }
        }
        out
    }

    /// Applies an algebra map to both legs.
    pub fn map(&self, f: &crate::ncalg::Morphism) -> TensorAA {
        let mut out = TensorAA::zero(f.target());
        for (w, r) in &self.terms {
            out = out.add(&TensorAA::pair(&f.apply_word(w), &f.apply(r)));
        }
        out
    }
}

impl fmt::Display for TensorAA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, r)) in self.terms.iter().enumerate() {
            let (left, right) = if r.len() == 1 {
                let (v, c) = r.terms().iter().next().unwrap();
                (
                    Element::monomial(&self.pres, w.clone(), c.clone()),
                    Element::monomial(&self.pres, v.clone(), QPoly::one()),
                )
            } else {
                (Element::monomial(&self.pres, w.clone(), QPoly::one()), r.clone())
            };
            let ls = left.to_string();
            let (neg, ls) = match ls.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, ls),
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if r.len() == 1 {
                write!(f, "{ls} ⊗ {right}")?;
            } else {
                write!(f, "{ls} ⊗ ({right})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorAA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorAA[{}]({self})", self.pres.id())
    }
}

/// Element of `A ⊗ ℂ[u, u⁻¹]` as a map from the power of `u` to `A`.
#[derive(Clone)]
pub struct TensorAH {
    pres: Arc<Presentation>,
    terms: BTreeMap<i64, Element>,
}

impl TensorAH {
    pub fn zero(p: &Arc<Presentation>) -> Self {
        Self {
            pres: p.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `a ⊗ uⁿ`.
    pub fn single(a: &Element, n: i64) -> Self {
        let mut t = Self::zero(a.presentation());
        t.add(n, a);
        t
    }

    pub fn add(&mut self, n: i64, a: &Element) {
        if a.is_zero() {
            return;
        }
        let slot = self.terms.entry(n).or_insert_with(|| a.zero_like());
        *slot = &*slot + a;
        if slot.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, Element> {
        &self.terms
    }

    /// Whether this is exactly `1 ⊗ uⁿ`.
    pub fn is_one_at(&self, n: i64) -> bool {
        self.terms.len() == 1 && self.terms.get(&n).is_some_and(Element::is_one)
    }
}

impl fmt::Display for TensorAH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(n, a)| format!("({a}) ⊗ u^{n}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for TensorAH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorAH[{}]({self})", self.pres.id())
    }
}

impl PartialEq for TensorAA {
    fn eq(&self, other: &Self) -> bool {
        self.pres.id() == other.pres.id() && self.terms == other.terms
    }
}

impl Eq for TensorAA {}

impl PartialEq for TensorAH {
    fn eq(&self, other: &Self) -> bool {
        self.pres.id() == other.pres.id() && self.terms == other.terms
    }
}

impl Eq for TensorAH {}
