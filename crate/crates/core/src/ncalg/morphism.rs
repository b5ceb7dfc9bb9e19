use std::sync::Arc;

use super::expr::Expr;
use super::{algebras, Element, Presentation, Word};
use crate::error::{invalid, Result};
use crate::report::Report;

/// Algebra map given by the images of all letters (starred ones included)
/// and, when the source has one, of the central unitary and its inverse.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub name: String,
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: Vec<Element>,
    central: Option<(Element, Element)>,
}

impl Morphism {
    pub fn new(
        name: impl Into<String>,
        source: &Arc<Presentation>,
        target: &Arc<Presentation>,
        images: &[(&str, String)],
        central: Option<(String, String)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Element>> = vec![None; source.letters().len()];
        for (name, text) in images {
            let l = source
                .letters()
                .iter()
                .position(|li| li.name == *name)
                .ok_or_else(|| invalid(format!("no letter `{name}` in {}", source.id())))?;
            slots[l] = Some(Element::parse(target, text)?);
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                e.ok_or_else(|| invalid(format!("missing image of `{}`", source.letter_name(i as u8))))
            })
            .collect::<Result<Vec<_>>>()?;
        let central = match (source.has_central(), central) {
            (true, Some((c, ci))) => Some((Element::parse(target, &c)?, Element::parse(target, &ci)?)),
            (false, None) => None,
            (true, None) => return Err(invalid("missing image of the central unitary")),
            (false, Some(_)) => return Err(invalid("source has no central unitary")),
        };
        Ok(Self {
            name: name.into(),
            source: source.clone(),
            target: target.clone(),
            images,
            central,
        })
    }

    pub fn identity(p: &Arc<Presentation>) -> Self {
        let images = (0..p.letters().len())
            .map(|l| Element::letter(p, l as u8))
            .collect();
        let central = p
            .has_central()
            .then(|| (Element::central(p, 1), Element::central(p, -1)));
        Self {
            name: format!("id[{}]", p.id()),
            source: p.clone(),
            target: p.clone(),
            images,
            central,
        }
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn image_of_letter(&self, l: u8) -> &Element {
        &self.images[l as usize]
    }

    pub fn central_image(&self) -> Option<&(Element, Element)> {
        self.central.as_ref()
    }

    fn central_power(&self, t: i64) -> Element {
        match &self.central {
            None => Element::one(&self.target),
            Some((c, ci)) => {
                if t >= 0 {
                    c.pow(t as u32)
                } else {
                    ci.pow(t.unsigned_abs() as u32)
                }
            }
        }
    }

    pub fn apply_word(&self, w: &Word) -> Element {
        let mut acc = Element::one(&self.target);
        for &l in &w.letters {
            acc = &acc * &self.images[l as usize];
        }
        if w.central != 0 {
            acc = &acc * &self.central_power(w.central);
        }
        acc
    }

    pub fn apply(&self, e: &Element) -> Element {
        assert_eq!(e.presentation().id(), self.source.id(), "morphism source mismatch");
        let mut acc = Element::zero(&self.target);
        for (w, c) in e.terms() {
            acc = &acc + &self.apply_word(w).scale(c);
        }
        acc
    }

    pub fn apply_expr(&self, e: &Expr) -> Element {
        let one = Element::one(&self.target);
        let letter = |l: u8| self.images[l as usize].clone();
        let central = |t: i64| self.central_power(t);
        e.evaluate(&one, &letter, &central)
    }
}

/// Verifies that a morphism respects every rule and defining relation of its
/// source, commutes with the star, and sends the central unitary to a central
/// unitary.
pub fn check_morphism(m: &Morphism) -> Report {
    let mut r = Report::new(format!("morphism {}", m.name));
    let src = m.source();
    for rule in src.rules() {
        let lhs = m.apply_word(&Word::new(rule.lhs.to_vec(), 0));
        let mut rhs = Element::zero(m.target());
        for (w, c) in &rule.rhs {
            rhs = &rhs + &m.apply_word(w).scale(c);
        }
        let diff = &lhs - &rhs;
        r.check(
            format!("rule {}", rule.label),
            diff.is_zero(),
            if diff.is_zero() {
                "0".to_string()
            } else {
                format!("lhs = {lhs}; rhs = {rhs}")
            },
        );
    }
    for rel in src.relations() {
        let lhs = m.apply_expr(&rel.lhs);
        let rhs = m.apply_expr(&rel.rhs);
        let ok = lhs == rhs;
        r.check(
            format!("relation {}", rel.text),
            ok,
            if ok {
                "0".to_string()
            } else {
                format!("lhs = {lhs}; rhs = {rhs}")
            },
        );
    }
    for (i, info) in src.letters().iter().enumerate() {
        let img = m.image_of_letter(i as u8);
        let mut expected = m.image_of_letter(info.star).clone();
        if info.star_central != 0 {
            expected = &expected * &m.central_power(info.star_central);
        }
        let got = img.star();
        let ok = got == expected;
        r.check(
            format!("star {}", info.name),
            ok,
            if ok {
                format!("{got}")
            } else {
                format!("image* = {got}; image of star = {expected}")
            },
        );
    }
    if let Some((c, ci)) = m.central_image() {
        let unit = (c * ci).is_one() && (ci * c).is_one() && &c.star() == ci;
        r.check("central unitary", unit, format!("{c}"));
        for (i, img) in m.images.iter().enumerate() {
            let comm = &(c * img) - &(img * c);
            r.check(
                format!("central commutes with {}", src.letter_name(i as u8)),
                comm.is_zero(),
                format!("{comm}"),
            );
        }
    }
    r
}

/// `O(RP_q²(l;−)) → O(Σ_q³)`.
pub fn embed_minus(l: u32) -> Morphism {
    Morphism::new(
        format!("embed-({l})"),
        &algebras::rp_minus(l),
        &algebras::sigma(),
        &[
            ("a", "z1^2 xi".into()),
            ("b", format!("z0^{l} z1 xi")),
            ("b*", format!("z1 z0*^{l}")),
            ("c-", format!("z0^{} xi", 2 * l)),
            ("c-*", format!("xi^-1 z0*^{}", 2 * l)),
        ],
        None,
    )
    .expect("static morphism")
}

/// `O(RP_q²(l;+)) → O(Σ_q³)`.
pub fn embed_plus(l: u32) -> Morphism {
    Morphism::new(
        format!("embed+({l})"),
        &algebras::rp_plus(l),
        &algebras::sigma(),
        &[
            ("a", "z1^2 xi".into()),
            ("c+", format!("z0^{l} xi")),
            ("c+*", format!("xi^-1 z0*^{l}")),
        ],
        None,
    )
    .expect("static morphism")
}

/// Inclusion of the `ℤ_l`-invariants `O(Σ_q³(l,−)) → O(Σ_q³)`.
pub fn fix_minus(l: u32) -> Morphism {
    Morphism::new(
        format!("fix-({l})"),
        &algebras::sigma_minus(l),
        &algebras::sigma(),
        &[
            ("x", format!("z0^{l}")),
            ("x*", format!("z0*^{l}")),
            ("y", "z1".into()),
        ],
        Some(("xi".into(), "xi^-1".into())),
    )
    .expect("static morphism")
}

/// Inclusion of the `ℤ_{2l}`-invariants `O(Σ_q³(l,+)) → O(Σ_q³)`.
pub fn fix_plus(l: u32) -> Morphism {
    Morphism::new(
        format!("fix+({l})"),
        &algebras::sigma_plus(l),
        &algebras::sigma(),
        &[
            ("x'", format!("z0^{l}")),
            ("x'*", format!("z0*^{l}")),
            ("y'", "z1^2".into()),
        ],
        Some(("xi".into(), "xi^-1".into())),
    )
    .expect("static morphism")
}

/// Coinvariant inclusion `O(RP_q²(l;−)) → O(Σ_q³(l,−))`.
pub fn coinv_minus(l: u32) -> Morphism {
    Morphism::new(
        format!("coinv-({l})"),
        &algebras::rp_minus(l),
        &algebras::sigma_minus(l),
        &[
            ("a", "y^2 z".into()),
            ("b", "x y z".into()),
            ("b*", "y x*".into()),
            ("c-", "x^2 z".into()),
            ("c-*", "z^-1 x*^2".into()),
        ],
        None,
    )
    .expect("static morphism")
}

/// Coinvariant inclusion `O(RP_q²(l;+)) → O(Σ_q³(l,+))`.
pub fn coinv_plus(l: u32) -> Morphism {
    Morphism::new(
        format!("coinv+({l})"),
        &algebras::rp_plus(l),
        &algebras::sigma_plus(l),
        &[
            ("a", "y' z'".into()),
            ("c+", "x' z'".into()),
            ("c+*", "z'^-1 x'*".into()),
        ],
        None,
    )
    .expect("static morphism")
}

/// Looks a morphism up by its command-line name.
pub fn by_name(name: &str, l: u32) -> Option<Morphism> {
    Some(match name {
        "embed-" => embed_minus(l),
        "embed+" => embed_plus(l),
        "fix-" => fix_minus(l),
        "fix+" => fix_plus(l),
        "coinv-" => coinv_minus(l),
        "coinv+" => coinv_plus(l),
        "id-sigma" => Morphism::identity(&algebras::sigma()),
        _ => return None,
    })
}

pub const MORPHISM_NAMES: [&str; 7] = ["embed-", "embed+", "fix-", "fix+", "coinv-", "coinv+", "id-sigma"];
