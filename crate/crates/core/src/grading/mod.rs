//! Circle and cyclic coactions encoded as degree tables.

mod table;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

pub use table::{omega, phi, phi_cyclic, rho, zero_table, zl, DegreeTable};

use crate::error::{invalid, Error, Result};
use crate::linalg::{ColumnSpace, SparseVec};
use crate::ncalg::morphism::{coinv_minus, coinv_plus};
use crate::ncalg::{algebras, AlgebraKind, Element, Presentation, Word};
use crate::report::Report;
use crate::{QPoly, Rational};

/// Result of [`degree_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "degree", rename_all = "lowercase")]
pub enum Degree {
    Zero,
    Homogeneous(i64),
    Inhomogeneous,
}

impl Degree {
    pub fn value(self) -> Option<i64> {
        match self {
            Degree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Degree::Zero => f.write_str("zero element"),
            Degree::Homogeneous(d) => write!(f, "{d}"),
            Degree::Inhomogeneous => f.write_str("inhomogeneous"),
        }
    }
}

pub fn degree_of(e: &Element, t: &DegreeTable) -> Degree {
    let mut it = e.terms().keys().map(|w| t.word_degree(w));
    let Some(d) = it.next() else {
        return Degree::Zero;
    };
    if it.all(|x| x == d) {
        Degree::Homogeneous(d)
    } else {
        Degree::Inhomogeneous
    }
}

pub fn homogeneous_part(e: &Element, t: &DegreeTable, n: i64) -> Element {
    let n = t.normalize(n);
    e.filter(|w| t.word_degree(w) == n)
}

/// All homogeneous parts, keyed by degree.
pub fn decompose(e: &Element, t: &DegreeTable) -> BTreeMap<i64, Element> {
    let mut out: BTreeMap<i64, Element> = BTreeMap::new();
    for w in e.terms().keys() {
        let d = t.word_degree(w);
        out.entry(d).or_insert_with(|| homogeneous_part(e, t, d));
    }
    out
}

/// Normal words of degree `n` with letter exponents and |central exponent|
/// at most `bound`.
pub fn graded_basis(p: &Presentation, t: &DegreeTable, n: i64, bound: u32) -> Vec<Word> {
    let n = t.normalize(n);
    p.pattern_words(bound)
        .into_iter()
        .filter(|w| t.word_degree(w) == n)
        .collect()
}

pub fn coinvariants_basis(p: &Presentation, t: &DegreeTable, bound: u32) -> Vec<Word> {
    graded_basis(p, t, 0, bound)
}

/// Resolves a table name for a presentation: registered tables first, then
/// `rho:k,l`, `zl:l`, `Phi:l`, `phi`, `Omega` and `zero`.
pub fn table_by_name(p: &Presentation, name: &str) -> Result<DegreeTable> {
    if let Some(t) = p.table(name) {
        return Ok(t.clone());
    }
    let ints = |s: &str| -> Result<Vec<i64>> {
        s.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| invalid(format!("bad table `{name}`"))))
            .collect()
    };
    let sigma_only = |t: DegreeTable| {
        if p.kind() == AlgebraKind::Sigma {
            Ok(t)
        } else {
            Err(invalid(format!("table `{name}` is defined on Sigma only")))
        }
    };
    match name.split_once(':') {
        Some(("rho", rest)) => match ints(rest)?.as_slice() {
            [k, l] => sigma_only(rho(*k, *l)),
            _ => Err(invalid("rho takes two weights, e.g. rho:1,2")),
        },
        Some(("zl", rest)) => match ints(rest)?.as_slice() {
            [l] if *l > 0 => sigma_only(zl(*l)),
            _ => Err(invalid("zl takes a positive modulus, e.g. zl:2")),
        },
        Some(("Phi", rest)) => match ints(rest)?.as_slice() {
            [l] if *l > 0 => sigma_only(phi_cyclic(*l)),
            _ => Err(invalid("Phi takes a positive weight, e.g. Phi:3")),
        },
        None if name == "zero" => Ok(zero_table(p.letters().len())),
        None if name == "phi" && p.kind() == AlgebraKind::SigmaMinus => Ok(phi()),
        None if name == "Omega" && p.kind() == AlgebraKind::SigmaPlus => Ok(omega()),
        _ => Err(invalid(format!("unknown table `{name}` for {}", p.id()))),
    }
}

/// Rewrites a coinvariant element of `O(Σ_q³(l,∓))` in the generators of
/// `O(RP_q²(l;∓))`. The result is checked by mapping it back.
pub fn express_in_coinvariants(e: &Element, t: &DegreeTable) -> Result<Element> {
    let p = e.presentation();
    let l = p.l();
    let (coinv, target) = match p.kind() {
        AlgebraKind::SigmaMinus => (coinv_minus(l), algebras::rp_minus(l)),
        AlgebraKind::SigmaPlus => (coinv_plus(l), algebras::rp_plus(l)),
        _ => return Err(invalid(format!("{} has no coinvariant presentation", p.id()))),
    };
    match degree_of(e, t) {
        Degree::Zero => return Ok(Element::zero(&target)),
        Degree::Homogeneous(0) => {}
        Degree::Homogeneous(d) => {
            return Err(Error::WrongDegree {
                table: t.name.clone(),
                expected: 0,
                found: d,
            })
        }
        Degree::Inhomogeneous => return Err(Error::Inhomogeneous { table: t.name.clone() }),
    }
    let mut out = Element::zero(&target);
    for (w, c) in e.terms() {
        let m = preimage_word(p, &target, w)?;
        let img = coinv.apply_word(&m);
        let lambda = match (img.len(), img.terms().iter().next()) {
            (1, Some((iw, ic))) if iw == w && ic.as_monomial().is_some() => ic.clone(),
            _ => {
                return Err(Error::NotExpressible(format!(
                    "{} maps to {img}",
                    p.word_to_string(w)
                )))
            }
        };
        let (lc, le) = lambda.as_monomial().unwrap();
        out = &out + &Element::monomial(&target, m, c.div_monomial(lc, le));
    }
    if coinv.apply(&out) != *e {
        return Err(Error::Verification(format!("round trip of {e} failed")));
    }
    Ok(out)
}

/// Monomial in the coinvariant generators whose image is a multiple of `w`.
fn preimage_word(p: &Presentation, target: &Arc<Presentation>, w: &Word) -> Result<Word> {
    let runs = w.runs();
    let (starred, r, s) = match runs.as_slice() {
        [] => (false, 0, 0),
        [(2, s)] => (false, 0, *s),
        [(0, r)] => (false, *r, 0),
        [(1, r)] => (true, *r, 0),
        [(0, r), (2, s)] => (false, *r, *s),
        [(1, r), (2, s)] => (true, *r, *s),
        _ => return Err(Error::NotExpressible(p.word_to_string(w))),
    };
    let not_expr = || Error::NotExpressible(p.word_to_string(w));
    let letter = |n: &str| target.letter_by_name(n).expect("coinvariant letter");
    let mut letters = Vec::new();
    match p.kind() {
        AlgebraKind::SigmaMinus => {
            if (r + s) % 2 != 0 {
                return Err(not_expr());
            }
            let eps = r % 2;
            let (i, j) = ((r - eps) / 2, (s - eps) / 2);
            let (c, b) = if starred { ("c-*", "b*") } else { ("c-", "b") };
            letters.extend(std::iter::repeat_n(letter(c), i as usize));
            letters.extend(std::iter::repeat_n(letter(b), eps as usize));
            letters.extend(std::iter::repeat_n(letter("a"), j as usize));
        }
        _ => {
            let c = if starred { "c+*" } else { "c+" };
            letters.extend(std::iter::repeat_n(letter(c), r as usize));
            letters.extend(std::iter::repeat_n(letter("a"), s as usize));
        }
    }
    Ok(Word::new(letters, 0))
}

/// Evidence that a circle grading is strong: for `|i|, |j| ≤ range`, every
/// basis word of degree `i + j` (exponents at most `target_bound`) is an
/// exact `ℚ[q, q⁻¹]`-combination of products `u·v` of basis words of
/// degrees `i` and `j` (exponents at most `factor_bound`), with coefficients
/// drawn from the monomials `q^e`, `|e| ≤ window`.
pub fn strongness_probe(
    p: &Arc<Presentation>,
    t: &DegreeTable,
    range: i64,
    target_bound: u32,
    factor_bound: u32,
    window: i64,
) -> Report {
    let mut r = Report::new(format!("strongness {} on {}", t.name, p.id()));
    let bx = p.table("bideg-x").cloned();
    let by = p.table("bideg-y").cloned();
    let bideg = |w: &Word| -> (i64, i64) {
        (
            bx.as_ref().map_or(0, |t| t.word_degree(w)),
            by.as_ref().map_or(0, |t| t.word_degree(w)),
        )
    };
    let mut bases: BTreeMap<i64, Vec<Word>> = BTreeMap::new();
    for d in -2 * range..=2 * range {
        let bound = if d.abs() <= range { factor_bound } else { target_bound };
        bases.insert(d, graded_basis(p, t, d, bound));
    }
    for i in -range..=range {
        for j in -range..=range {
            let mut bad = None;
            let mut count = 0;
            let targets: Vec<Word> = graded_basis(p, t, i + j, target_bound);
            for w in &targets {
                let bw = bideg(w);
                let mut space: ColumnSpace<(Word, i64)> = ColumnSpace::new();
                for u in &bases[&i] {
                    let bu = bideg(u);
                    for v in bases[&j].iter().filter(|v| {
                        let bv = bideg(v);
                        (bu.0 + bv.0, bu.1 + bv.1) == bw
                    }) {
                        let prod = Element::monomial(p, u.concat(v), QPoly::one());
                        for e in -window..=window {
                            space.insert(element_vector(&prod, e));
                        }
                    }
                }
                let target: SparseVec<(Word, i64)> =
                    [((w.clone(), 0), Rational::one())].into_iter().collect();
                if space.contains(&target) {
                    count += 1;
                } else if bad.is_none() {
                    bad = Some(p.word_to_string(w));
                }
            }
            let ok = bad.is_none();
            r.check(
                format!("A_{i} A_{j}"),
                ok,
                match bad {
                    None => format!("{count} words of degree {} spanned", i + j),
                    Some(w) => format!("{w} not spanned"),
                },
            );
        }
    }
    r
}

/// Coefficient vector of `q^shift · e`, indexed by (word, q-exponent).
pub(crate) fn element_vector(e: &Element, shift: i64) -> SparseVec<(Word, i64)> {
    let mut v = SparseVec::new();
    for (w, c) in e.terms() {
        for (k, x) in c.terms() {
            v.insert((w.clone(), k + shift), x.clone());
        }
    }
    v
}
