use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{star_word, Element, Expr, Presentation, Strategy, Word};
use crate::grading::DegreeTable;
use crate::report::Report;
use crate::QPoly;

/// Random expression tree with nesting depth at most `depth` and powers at
/// most 4, kept small enough to reduce quickly.
pub fn random_expr(p: &Presentation, rng: &mut impl Rng, depth: u32) -> Expr {
    let n = p.letters().len();
    let leaf = |rng: &mut dyn rand::RngCore| -> Expr {
        match rng.gen_range(0..10) {
            0 if p.has_central() => Expr::Central(rng.gen_range(-2..=2)),
            1 => Expr::Scalar(QPoly::monomial(
                crate::coeff::rat(rng.gen_range(-3..=3i64).max(1)),
                rng.gen_range(-3..=3),
            )),
            _ => Expr::Letter(rng.gen_range(0..n) as u8),
        }
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..6) {
        0 => leaf(rng),
        1 => Expr::Sum((0..2).map(|_| random_expr(p, rng, depth - 1)).collect()),
        2 => Expr::Neg(Box::new(random_expr(p, rng, depth - 1))),
        3 => {
            let base = if rng.gen_bool(0.7) {
                leaf(rng)
            } else {
                Expr::Product(vec![leaf(rng), leaf(rng)])
            };
            Expr::Pow(Box::new(base), rng.gen_range(0..=4))
        }
        _ => {
            let k = rng.gen_range(2..=3);
            Expr::Product((0..k).map(|_| random_expr(p, rng, depth.min(2) - 1)).collect())
        }
    }
}

/// Probes a presentation: rule homogeneity for every registered and extra
/// degree table, agreement of reduction orders on random expressions, star
/// closure of the rules and containment of normal words in the pattern.
pub fn check_presentation(
    p: &Arc<Presentation>,
    extra_tables: &[DegreeTable],
    trials: usize,
    seed: u64,
) -> Report {
    let mut r = Report::new(format!("presentation {}", p.id()));
    let tables: Vec<&DegreeTable> = p.tables().iter().chain(extra_tables).collect();

    for t in &tables {
        let mut bad = None;
        for rule in p.rules() {
            let d = t.word_degree(&Word::new(rule.lhs.to_vec(), 0));
            if let Some((w, _)) = rule.rhs.iter().find(|(w, _)| t.word_degree(w) != d) {
                bad = Some(format!(
                    "rule {}: rhs word {} has degree {}, lhs {d}",
                    rule.label,
                    p.word_to_string(w),
                    t.word_degree(w)
                ));
                break;
            }
        }
        for (i, info) in p.letters().iter().enumerate() {
            let d = t.letter_degree(i as u8);
            let ds = t.normalize(t.letter_degree(info.star) + info.star_central * t.central);
            if bad.is_none() && ds != t.normalize(-d) {
                bad = Some(format!("deg({}*) = {ds}, expected {}", info.name, t.normalize(-d)));
            }
        }
        let ok = bad.is_none();
        r.check(
            format!("homogeneous {}", t.name),
            ok,
            bad.unwrap_or_else(|| format!("{} rules", p.rules().len())),
        );
    }

    let mut star_bad = None;
    for rule in p.rules() {
        let lhs = Element::from_terms(p, [(star_word(p, &Word::new(rule.lhs.to_vec(), 0)), QPoly::one())]);
        let rhs = Element::from_terms(p, rule.rhs.iter().map(|(w, c)| (star_word(p, w), c.clone())));
        let diff = &lhs - &rhs;
        if !diff.is_zero() {
            star_bad = Some(format!("rule {}: star residual {diff}", rule.label));
            break;
        }
    }
    r.check(
        "star closure",
        star_bad.is_none(),
        star_bad.unwrap_or_else(|| "all starred rules reduce to 0".into()),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut conf_bad = None;
    let mut pattern_bad = None;
    for trial in 0..trials {
        let e = random_expr(p, &mut rng, 6);
        let a = Element::eval(p, &e);
        let b = Element::eval_with(p, &e, Strategy::Random(rng.gen()));
        let c = Element::from_terms_with(p, e.expand_free(), Strategy::Random(rng.gen()));
        if conf_bad.is_none() && (a != b || a != c) {
            conf_bad = Some(format!(
                "trial {trial}: {} reduces to {a}, {b} and {c}",
                expr_text(p, &e)
            ));
        }
        if pattern_bad.is_none() {
            if let Some(w) = a.terms().keys().find(|w| p.matching_families(w).is_empty()) {
                pattern_bad = Some(format!("trial {trial}: word {} fits no family", p.word_to_string(w)));
            }
        }
        if conf_bad.is_some() && pattern_bad.is_some() {
            break;
        }
    }
    r.check(
        "confluence",
        conf_bad.is_none(),
        conf_bad.unwrap_or_else(|| format!("{trials} probes agree")),
    );
    r.check(
        "normal pattern",
        pattern_bad.is_none(),
        pattern_bad.unwrap_or_else(|| "all normal words fit a family".into()),
    );
    r
}

/// Text of a raw expression, reparsable in the presentation's grammar.
pub fn expr_text(p: &Presentation, e: &Expr) -> String {
    match e {
        Expr::Scalar(c) => format!("({c})"),
        Expr::Letter(l) => p.letter_name(*l).to_string(),
        Expr::Central(t) => format!("{}^{t}", p.central_name().unwrap_or("?")),
        Expr::Sum(ts) if ts.is_empty() => "0".into(),
        Expr::Sum(ts) => format!(
            "({})",
            ts.iter().map(|t| expr_text(p, t)).collect::<Vec<_>>().join(" + ")
        ),
        Expr::Product(fs) if fs.is_empty() => "1".into(),
        Expr::Product(fs) => format!(
            "({})",
            fs.iter().map(|t| expr_text(p, t)).collect::<Vec<_>>().join(" ")
        ),
        Expr::Neg(t) => format!("(-{})", expr_text(p, t)),
        Expr::Pow(b, n) => format!("{}^{n}", expr_text(p, b)),
    }
}
