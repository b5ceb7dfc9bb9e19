//! The five presented algebras, parameterised by the weight `l`.

use std::sync::Arc;

use super::presentation::{AlgebraKind, LetterInfo, NormalPattern, Presentation};
use crate::grading::{self, DegreeTable};

fn info(name: &str, star: u8, star_central: i64) -> LetterInfo {
    LetterInfo {
        name: name.to_string(),
        star,
        star_central,
    }
}

/// `∏_{p ∈ range} (1 − q^{sign·2p} g)` in the text grammar.
pub(crate) fn prod_text(range: std::ops::RangeInclusive<i64>, sign: i64, g: &str) -> String {
    let mut out = String::new();
    for p in range {
        let e = sign * 2 * p;
        if e == 0 {
            out.push_str(&format!("(1 - {g})"));
        } else {
            out.push_str(&format!("(1 - q^{e} {g})"));
        }
    }
    if out.is_empty() {
        "1".to_string()
    } else {
        out
    }
}

fn bidegree(letters_x: Vec<i64>, letters_y: Vec<i64>, central_y: i64) -> [DegreeTable; 2] {
    [
        DegreeTable::new("bideg-x", 0, letters_x, 0),
        DegreeTable::new("bideg-y", 0, letters_y, central_y),
    ]
}

/// `O(Σ_q³)`: letters `z0, z0*, z1`, central unitary `xi`.
pub fn sigma() -> Arc<Presentation> {
    let mut p = Presentation::new(
        "Sigma",
        AlgebraKind::Sigma,
        0,
        vec![info("z0", 1, 0), info("z0*", 0, 0), info("z1", 2, 1)],
        Some("xi"),
    );
    p.add_rule("z0 z0*", "z0 z0*", "1 - z1^2 xi");
    p.add_rule("z0* z0", "z0* z0", "1 - q^-2 z1^2 xi");
    p.add_rule("z1 z0", "z1 z0", "q^-1 z0 z1");
    p.add_rule("z1 z0*", "z1 z0*", "q z0* z1");
    p.add_relation("z0 z1", "z0 z1", "q z1 z0");
    p.add_relation("z0 z1*", "z0 z1*", "q z1* z0");
    p.add_relation("z0 z0*", "z0 z0*", "z0* z0 + (q^-2 - 1) z1^2 xi");
    p.add_relation("sphere", "z0 z0* + z1^2 xi", "1");
    p.add_relation("z1*", "z1*", "z1 xi");
    p.add_relation("xi unitary", "xi xi*", "1");
    p.set_pattern(NormalPattern {
        families: vec![vec![(0, None), (2, None)], vec![(1, None), (2, None)]],
    });
    for t in bidegree(vec![1, -1, 0], vec![0, 0, 1], -2) {
        p.add_table(t);
    }
    p.add_table(grading::rho(1, 1));
    Arc::new(p)
}

/// `O(Σ_q³(l,−))`: letters `x, x*, y`, central unitary `z`.
pub fn sigma_minus(l: u32) -> Arc<Presentation> {
    assert!(l >= 1);
    let li = l as i64;
    let mut p = Presentation::new(
        format!("Sigma({l},-)"),
        AlgebraKind::SigmaMinus,
        l,
        vec![info("x", 1, 0), info("x*", 0, 0), info("y", 2, 1)],
        Some("z"),
    );
    let pp = prod_text(0..=li - 1, 1, "y^2 z");
    let pm = prod_text(1..=li, -1, "y^2 z");
    p.add_rule("x x*", "x x*", &pp);
    p.add_rule("x* x", "x* x", &pm);
    p.add_rule("y x", "y x", &format!("q^{} x y", -li));
    p.add_rule("y x*", "y x*", &format!("q^{li} x* y"));
    p.add_relation("y*", "y*", "y z");
    p.add_relation("x y", "x y", &format!("q^{li} y x"));
    p.add_relation("x x*", "x x*", &pp);
    p.add_relation("x* x", "x* x", &pm);
    p.add_relation("z unitary", "z z*", "1");
    p.set_pattern(NormalPattern {
        families: vec![vec![(0, None), (2, None)], vec![(1, None), (2, None)]],
    });
    p.add_table(grading::phi());
    for t in bidegree(vec![1, -1, 0], vec![0, 0, 1], -2) {
        p.add_table(t);
    }
    Arc::new(p)
}

/// `O(Σ_q³(l,+))`: letters `x', x'*, y'`, central unitary `z'`.
pub fn sigma_plus(l: u32) -> Arc<Presentation> {
    assert!(l >= 1);
    let li = l as i64;
    let mut p = Presentation::new(
        format!("Sigma({l},+)"),
        AlgebraKind::SigmaPlus,
        l,
        vec![info("x'", 1, 0), info("x'*", 0, 0), info("y'", 2, 2)],
        Some("z'"),
    );
    let pp = prod_text(0..=li - 1, 1, "y' z'");
    let pm = prod_text(1..=li, -1, "y' z'");
    p.add_rule("x' x'*", "x' x'*", &pp);
    p.add_rule("x'* x'", "x'* x'", &pm);
    p.add_rule("y' x'", "y' x'", &format!("q^{} x' y'", -2 * li));
    p.add_rule("y' x'*", "y' x'*", &format!("q^{} x'* y'", 2 * li));
    p.add_relation("x' y'", "x' y'", &format!("q^{} y' x'", 2 * li));
    p.add_relation("x' y'*", "x' y'*", &format!("q^{} y'* x'", 2 * li));
    p.add_relation("y' y'*", "y' y'*", "y'* y'");
    p.add_relation("y'*", "y'*", "y' z'^2");
    p.add_relation("x' x'*", "x' x'*", &pp);
    p.add_relation("x'* x'", "x'* x'", &pm);
    p.add_relation("z' unitary", "z' z'*", "1");
    p.set_pattern(NormalPattern {
        families: vec![vec![(0, None), (2, None)], vec![(1, None), (2, None)]],
    });
    p.add_table(grading::omega());
    for t in bidegree(vec![1, -1, 0], vec![0, 0, 1], -1) {
        p.add_table(t);
    }
    Arc::new(p)
}

/// `O(RP_q²(l;−))`: letters `a, b, b*, c-, c-*`.
pub fn rp_minus(l: u32) -> Arc<Presentation> {
    assert!(l >= 1);
    let li = l as i64;
    let mut p = Presentation::new(
        format!("RP({l},-)"),
        AlgebraKind::RpMinus,
        l,
        vec![
            info("a", 0, 0),
            info("b", 2, 0),
            info("b*", 1, 0),
            info("c-", 4, 0),
            info("c-*", 3, 0),
        ],
        None,
    );
    p.add_alias("c", 3);
    let pp = prod_text(0..=li - 1, 1, "a");
    let pm = prod_text(1..=li, -1, "a");
    let cc = prod_text(0..=2 * li - 1, 1, "a");
    let cs = prod_text(1..=2 * li, -1, "a");
    let rules: Vec<(&str, String)> = vec![
        ("a b", format!("q^{} b a", -2 * li)),
        ("a b*", format!("q^{} b* a", 2 * li)),
        ("a c-", format!("q^{} c- a", -4 * li)),
        ("a c-*", format!("q^{} c-* a", 4 * li)),
        ("b c-", format!("q^{} c- b", -2 * li)),
        ("b* c-*", format!("q^{} c-* b*", 2 * li)),
        ("b b", format!("q^{} c- a", -li)),
        ("b* b*", format!("q^{} c-* a", 3 * li)),
        ("b b*", format!("q^{} a {pp}", 2 * li)),
        ("b* b", format!("a {pm}")),
        ("b* c-", format!("q^{} {pm} b", -li)),
        ("c- b*", format!("q^{li} b {pp}")),
        ("b c-*", format!("q^{li} {pp} b*")),
        ("c-* b", format!("q^{} b* {pm}", -li)),
        ("c- c-*", cc.clone()),
        ("c-* c-", cs.clone()),
    ];
    for (lhs, rhs) in &rules {
        p.add_rule(lhs, lhs, rhs);
    }
    p.add_relation("a self-adjoint", "a", "a*");
    p.add_relation("a b", "a b", &format!("q^{} b a", -2 * li));
    p.add_relation("a c-", "a c-", &format!("q^{} c- a", -4 * li));
    p.add_relation("b^2", "b^2", &format!("q^{} a c-", 3 * li));
    p.add_relation("b c-", "b c-", &format!("q^{} c- b", -2 * li));
    p.add_relation("b b*", "b b*", &format!("q^{} a {pp}", 2 * li));
    p.add_relation("b* b", "b* b", &format!("a {pm}"));
    p.add_relation("b* c-", "b* c-", &format!("q^{} {pm} b", -li));
    p.add_relation("c- b*", "c- b*", &format!("q^{li} b {pp}"));
    p.add_relation("c- c-*", "c- c-*", &cc);
    p.add_relation("c-* c-", "c-* c-", &cs);
    p.set_pattern(NormalPattern {
        families: vec![
            vec![(3, None), (1, Some(1)), (0, None)],
            vec![(4, None), (2, Some(1)), (0, None)],
        ],
    });
    for t in bidegree(
        vec![0, li, -li, 2 * li, -2 * li],
        vec![0, -1, 1, -2, 2],
        0,
    ) {
        p.add_table(t);
    }
    Arc::new(p)
}

/// `O(RP_q²(l;+))`: letters `a, c+, c+*`.
pub fn rp_plus(l: u32) -> Arc<Presentation> {
    assert!(l >= 1);
    let li = l as i64;
    let mut p = Presentation::new(
        format!("RP({l},+)"),
        AlgebraKind::RpPlus,
        l,
        vec![info("a", 0, 0), info("c+", 2, 0), info("c+*", 1, 0)],
        None,
    );
    p.add_alias("c", 1);
    let pp = prod_text(0..=li - 1, 1, "a");
    let pm = prod_text(1..=li, -1, "a");
    p.add_rule("a c+", "a c+", &format!("q^{} c+ a", -2 * li));
    p.add_rule("a c+*", "a c+*", &format!("q^{} c+* a", 2 * li));
    p.add_rule("c+ c+*", "c+ c+*", &pp);
    p.add_rule("c+* c+", "c+* c+", &pm);
    p.add_relation("a self-adjoint", "a", "a*");
    p.add_relation("a c+", "a c+", &format!("q^{} c+ a", -2 * li));
    p.add_relation("c+ c+*", "c+ c+*", &pp);
    p.add_relation("c+* c+", "c+* c+", &pm);
    p.set_pattern(NormalPattern {
        families: vec![vec![(1, None), (0, None)], vec![(2, None), (0, None)]],
    });
    for t in bidegree(vec![0, li, -li], vec![0, -2, 2], 0) {
        p.add_table(t);
    }
    Arc::new(p)
}

/// Looks an algebra up by the names used on the command line:
/// `sigma`, `sigma-`, `sigma+`, `rp-`, `rp+`.
pub fn by_name(name: &str, l: u32) -> Option<Arc<Presentation>> {
    Some(match name {
        "sigma" => sigma(),
        "sigma-" | "neg" => sigma_minus(l),
        "sigma+" | "pos" => sigma_plus(l),
        "rp-" => rp_minus(l),
        "rp+" => rp_plus(l),
        _ => return None,
    })
}
