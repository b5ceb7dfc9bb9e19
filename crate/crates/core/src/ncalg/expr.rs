use std::collections::BTreeMap;


use super::{Element, Letter, Word};
use crate::QPoly;

/// Raw expression tree over a presentation's alphabet, before reduction.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Scalar(QPoly),
    Letter(Letter),
    /// Power of the central unitary (negative powers allowed).
    Central(i64),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn one() -> Self {
        Expr::Scalar(QPoly::one())
    }

    /// Evaluates the tree with the given images of letters and central
    /// powers; `one` supplies the unit of the target algebra.
    pub fn evaluate(
        &self,
        one: &Element,
        letter: &dyn Fn(Letter) -> Element,
        central: &dyn Fn(i64) -> Element,
    ) -> Element {
        match self {
            Expr::Scalar(c) => one.scale(c),
            Expr::Letter(l) => letter(*l),
            Expr::Central(t) => central(*t),
            Expr::Sum(ts) => {
                let mut acc = one.zero_like();
                for t in ts {
                    acc = &acc + &t.evaluate(one, letter, central);
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = one.clone();
                for f in fs {
                    acc = &acc * &f.evaluate(one, letter, central);
                }
                acc
            }
            Expr::Neg(t) => -&t.evaluate(one, letter, central),
            Expr::Pow(b, e) => b.evaluate(one, letter, central).pow(*e),
        }
    }

    /// Expands in the free algebra (no rewriting), merging equal words.
    pub fn expand_free(&self) -> BTreeMap<Word, QPoly> {
        match self {
            Expr::Scalar(c) => single(Word::one(), c.clone()),
            Expr::Letter(l) => single(Word::letter(*l), QPoly::one()),
            Expr::Central(t) => single(Word::central_power(*t), QPoly::one()),
            Expr::Sum(ts) => {
                let mut acc = BTreeMap::new();
                for t in ts {
                    merge_into(&mut acc, t.expand_free());
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = single(Word::one(), QPoly::one());
                for f in fs {
                    acc = free_product(&acc, &f.expand_free());
                }
                acc
            }
            Expr::Neg(t) => t
                .expand_free()
                .into_iter()
                .map(|(w, c)| (w, -c))
                .collect(),
            Expr::Pow(b, e) => {
                let base = b.expand_free();
                let mut acc = single(Word::one(), QPoly::one());
                for _ in 0..*e {
                    acc = free_product(&acc, &base);
                }
                acc
            }
        }
    }

    /// Number of nodes, used to bound random test expressions.
    pub fn size(&self) -> usize {
        match self {
            Expr::Scalar(_) | Expr::Letter(_) | Expr::Central(_) => 1,
            Expr::Sum(v) | Expr::Product(v) => 1 + v.iter().map(Expr::size).sum::<usize>(),
            Expr::Neg(t) | Expr::Pow(t, _) => 1 + t.size(),
        }
    }
}

fn single(w: Word, c: QPoly) -> BTreeMap<Word, QPoly> {
    let mut m = BTreeMap::new();
    if !c.is_zero() {
        m.insert(w, c);
    }
    m
}

pub(crate) fn merge_into(acc: &mut BTreeMap<Word, QPoly>, other: BTreeMap<Word, QPoly>) {
    for (w, c) in other {
        add_term(acc, w, &c);
    }
}

pub(crate) fn add_term(acc: &mut BTreeMap<Word, QPoly>, w: Word, c: &QPoly) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn free_product(a: &BTreeMap<Word, QPoly>, b: &BTreeMap<Word, QPoly>) -> BTreeMap<Word, QPoly> {
    let mut out = BTreeMap::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            add_term(&mut out, wa.concat(wb), &(ca * cb));
        }
    }
    out
}
