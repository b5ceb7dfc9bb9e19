use std::collections::BTreeSet;

use num_traits::One;
use serde::Serialize;

use super::expr::Expr;
use super::{Letter, Word};
use crate::grading::DegreeTable;
use crate::text::{self, ParseError, Syntax};
use crate::{QPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AlgebraKind {
    Sigma,
    SigmaMinus,
    SigmaPlus,
    RpMinus,
    RpPlus,
}

#[derive(Clone, Debug)]
pub struct LetterInfo {
    pub name: String,
    pub star: Letter,
    /// Power of the central unitary picked up by the star: `g* = star · central^k`.
    pub star_central: i64,
}

/// Oriented rule `lhs[0] lhs[1] → Σ c·w`; right-hand words need not be normal.
#[derive(Clone, Debug)]
pub struct Rule {
    pub label: String,
    pub lhs: [Letter; 2],
    pub rhs: Vec<(Word, QPoly)>,
}

/// Defining relation as written, kept separately from the oriented rules.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub text: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

/// Spanning set of normal words: each family is an ordered list of letters,
/// each with an optional maximal exponent; the central power is free.
#[derive(Clone, Debug, Default)]
pub struct NormalPattern {
    pub families: Vec<Vec<(Letter, Option<u32>)>>,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    id: String,
    kind: AlgebraKind,
    l: u32,
    letters: Vec<LetterInfo>,
    central: Option<String>,
    aliases: Vec<(String, Letter)>,
    rules: Vec<Rule>,
    rule_at: Vec<Option<usize>>,
    relations: Vec<Relation>,
    pattern: NormalPattern,
    tables: Vec<DegreeTable>,
}

impl Presentation {
    pub(crate) fn new(
        id: impl Into<String>,
        kind: AlgebraKind,
        l: u32,
        letters: Vec<LetterInfo>,
        central: Option<&str>,
    ) -> Self {
        let n = letters.len();
        Self {
            id: id.into(),
            kind,
            l,
            letters,
            central: central.map(str::to_string),
            aliases: Vec::new(),
            rules: Vec::new(),
            rule_at: vec![None; n * n],
            relations: Vec::new(),
            pattern: NormalPattern::default(),
            tables: Vec::new(),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn letters(&self) -> &[LetterInfo] {
        &self.letters
    }

    pub fn letter_name(&self, l: Letter) -> &str {
        &self.letters[l as usize].name
    }

    pub fn central_name(&self) -> Option<&str> {
        self.central.as_deref()
    }

    pub fn has_central(&self) -> bool {
        self.central.is_some()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn pattern(&self) -> &NormalPattern {
        &self.pattern
    }

    pub fn tables(&self) -> &[DegreeTable] {
        &self.tables
    }

    pub fn table(&self, name: &str) -> Option<&DegreeTable> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn letter_by_name(&self, name: &str) -> Option<Letter> {
        self.letters
            .iter()
            .position(|li| li.name == name)
            .map(|i| i as Letter)
            .or_else(|| {
                self.aliases
                    .iter()
                    .find(|(a, _)| a == name)
                    .map(|(_, l)| *l)
            })
    }

    pub(crate) fn add_alias(&mut self, name: &str, l: Letter) {
        self.aliases.push((name.to_string(), l));
    }

    pub(crate) fn set_pattern(&mut self, p: NormalPattern) {
        self.pattern = p;
    }

    pub(crate) fn add_table(&mut self, t: DegreeTable) {
        self.tables.push(t);
    }

    /// Adds an oriented rule given in the text grammar.
    pub(crate) fn add_rule(&mut self, label: &str, lhs: &str, rhs: &str) {
        let lhs_expr = self.parse_expr(lhs).expect("rule lhs parses");
        let lw = lhs_expr.expand_free();
        assert_eq!(lw.len(), 1, "rule lhs must be a single word");
        let (w, c) = lw.into_iter().next().unwrap();
        assert!(c.is_one() && w.letters.len() == 2 && w.central == 0, "rule lhs `{lhs}`");
        let rhs_terms: Vec<(Word, QPoly)> = self
            .parse_expr(rhs)
            .expect("rule rhs parses")
            .expand_free()
            .into_iter()
            .collect();
        self.push_rule(Rule {
            label: label.to_string(),
            lhs: [w.letters[0], w.letters[1]],
            rhs: rhs_terms,
        });
    }

    fn push_rule(&mut self, rule: Rule) {
        let n = self.letters.len();
        let slot = rule.lhs[0] as usize * n + rule.lhs[1] as usize;
        assert!(self.rule_at[slot].is_none(), "duplicate rule {}", rule.label);
        self.rule_at[slot] = Some(self.rules.len());
        self.rules.push(rule);
    }

    pub(crate) fn add_relation(&mut self, label: &str, lhs: &str, rhs: &str) {
        let rel = Relation {
            label: label.to_string(),
            text: format!("{lhs} = {rhs}"),
            lhs: self.parse_expr(lhs).expect("relation lhs parses"),
            rhs: self.parse_expr(rhs).expect("relation rhs parses"),
        };
        self.relations.push(rel);
    }

    /// A copy with the rule for `lhs` removed, under a new id.
    pub fn without_rule(&self, lhs: [Letter; 2]) -> Presentation {
        let mut out = Presentation {
            id: format!(
                "{}[without {} {}]",
                self.id,
                self.letter_name(lhs[0]),
                self.letter_name(lhs[1])
            ),
            rules: Vec::new(),
            rule_at: vec![None; self.letters.len() * self.letters.len()],
            ..self.clone()
        };
        for r in &self.rules {
            if r.lhs != lhs {
                out.push_rule(r.clone());
            }
        }
        out
    }

    pub(crate) fn rule_for(&self, a: Letter, b: Letter) -> Option<&Rule> {
        let n = self.letters.len();
        self.rule_at[a as usize * n + b as usize].map(|i| &self.rules[i])
    }

    /// A word is normal when no adjacent pair is a rule left-hand side.
    pub fn is_normal(&self, w: &Word) -> bool {
        w.letters
            .windows(2)
            .all(|p| self.rule_for(p[0], p[1]).is_none())
    }

    /// Indices of the pattern families the word fits.
    pub fn matching_families(&self, w: &Word) -> Vec<usize> {
        let runs = w.runs();
        let mut out = Vec::new();
        'fam: for (fi, fam) in self.pattern.families.iter().enumerate() {
            let mut slot = 0;
            for &(l, n) in &runs {
                while slot < fam.len() && fam[slot].0 != l {
                    slot += 1;
                }
                if slot == fam.len() {
                    continue 'fam;
                }
                if fam[slot].1.is_some_and(|m| n > m) {
                    continue 'fam;
                }
                slot += 1;
            }
            out.push(fi);
        }
        out
    }

    /// All pattern words with letter exponents and |central exponent| at most `bound`.
    pub fn pattern_words(&self, bound: u32) -> Vec<Word> {
        let mut set = BTreeSet::new();
        let tmax = if self.has_central() { bound as i64 } else { 0 };
        for fam in &self.pattern.families {
            let caps: Vec<u32> = fam
                .iter()
                .map(|(_, m)| m.map_or(bound, |m| m.min(bound)))
                .collect();
            let mut exps = vec![0u32; fam.len()];
            'odometer: loop {
                let runs: Vec<(Letter, u32)> =
                    fam.iter().zip(&exps).map(|((l, _), e)| (*l, *e)).collect();
                for t in -tmax..=tmax {
                    set.insert(Word::from_runs(&runs, t));
                }
                for i in 0..exps.len() {
                    if exps[i] < caps[i] {
                        exps[i] += 1;
                        continue 'odometer;
                    }
                    exps[i] = 0;
                }
                break;
            }
        }
        set.into_iter().collect()
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        let mut parts: Vec<String> = w
            .runs()
            .into_iter()
            .map(|(l, n)| {
                let name = self.letter_name(l);
                if n == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{n}")
                }
            })
            .collect();
        if w.central != 0 {
            let c = self.central.as_deref().unwrap_or("?");
            parts.push(if w.central == 1 {
                c.to_string()
            } else {
                format!("{c}^{}", w.central)
            });
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Exponent tuple of a word: per-letter run exponents in the order of
    /// its family, with the central exponent last.
    pub fn word_exponents(&self, w: &Word) -> Vec<(String, i64)> {
        let mut out: Vec<(String, i64)> = w
            .runs()
            .into_iter()
            .map(|(l, n)| (self.letter_name(l).to_string(), n as i64))
            .collect();
        if let Some(c) = &self.central {
            out.push((c.clone(), w.central));
        }
        out
    }

    /// Parses text in the shared grammar into an expression over this alphabet.
    pub fn parse_expr(&self, s: &str) -> Result<Expr, ParseError> {
        self.resolve(&text::parse(s)?)
    }

    fn resolve(&self, s: &Syntax) -> Result<Expr, ParseError> {
        Ok(match s {
            Syntax::Number(r) => Expr::Scalar(QPoly::constant(r.clone())),
            Syntax::Ident { name, starred, pos } => {
                if name == "q" {
                    Expr::Scalar(QPoly::q_pow(1))
                } else if Some(name.as_str()) == self.central.as_deref() {
                    Expr::Central(if *starred { -1 } else { 1 })
                } else if let Some(l) = self.letter_by_name(name) {
                    if *starred {
                        let info = &self.letters[l as usize];
                        if info.star_central == 0 {
                            Expr::Letter(info.star)
                        } else {
                            Expr::Product(vec![
                                Expr::Letter(info.star),
                                Expr::Central(info.star_central),
                            ])
                        }
                    } else {
                        Expr::Letter(l)
                    }
                } else if name == "u" {
                    return Err(ParseError::new(
                        *pos,
                        "`u` generates the circle Hopf algebra, not this algebra",
                    ));
                } else {
                    return Err(ParseError::new(
                        *pos,
                        format!("unknown generator `{name}` in {}", self.id),
                    ));
                }
            }
            Syntax::Sum(ts) => Expr::Sum(ts.iter().map(|t| self.resolve(t)).collect::<Result<_, _>>()?),
            Syntax::Product(fs) => {
                Expr::Product(fs.iter().map(|t| self.resolve(t)).collect::<Result<_, _>>()?)
            }
            Syntax::Neg(t) => Expr::Neg(Box::new(self.resolve(t)?)),
            Syntax::Pow(b, e, pos) => {
                let base = self.resolve(b)?;
                if *e >= 0 {
                    Expr::Pow(Box::new(base), *e as u32)
                } else {
                    match base {
                        Expr::Central(k) => Expr::Central(k * e),
                        Expr::Scalar(c) if c.as_monomial().is_some() => {
                            let (v, k) = c.as_monomial().unwrap();
                            let inv = QPoly::monomial(Rational::one() / v.clone(), -k);
                            Expr::Scalar(inv.pow(e.unsigned_abs() as u32))
                        }
                        _ => {
                            return Err(ParseError::new(
                                *pos,
                                "negative powers are only allowed on central unitaries and q",
                            ))
                        }
                    }
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::algebras;

    #[test]
    fn pattern_words_cover_both_families() {
        let s = algebras::sigma();
        let ws = s.pattern_words(1);
        // r,s in {0,1}, t in {-1,0,1}, two families sharing the r = 0 words
        assert_eq!(ws.len(), (2 * 2 * 3) + (2 * 3));
        for w in &ws {
            assert!(s.is_normal(w));
            assert!(!s.matching_families(w).is_empty());
        }
    }

    #[test]
    fn parse_errors_name_the_generator() {
        let s = algebras::sigma();
        let e = s.parse_expr("z0 w1").unwrap_err();
        assert_eq!(e.pos, 3);
        assert!(e.message.contains("w1"));
        assert!(s.parse_expr("z0^-1").is_err());
        assert!(s.parse_expr("xi^-2 q^-3").is_ok());
    }
}
