//! Bounded evidence that `O(Σ_q³(l,−))` has no unit of `φ`-degree 1.
//!
//! The algebra is bigraded by the `x`- and `y`-degrees, and each bigraded
//! piece `A_(α,β)` is `m_(α,β) · ℚ[q, q⁻¹][a]` for a single monomial
//! generator `m`. For a candidate `u` inside one piece `A_d`, the
//! `(0,0)`-part of `u·v` only sees `v`'s piece `A_{−d}` and lies in
//! `g(a)·ℚ[q, q⁻¹][a]` with `g = m_d m_{−d}`; a nonconstant `g` rules out
//! `uv = 1`. For a candidate meeting two pieces `d_hi > d_lo`
//! (lexicographic), `uv = 1` forces `d_hi + e_max = 0 = d_lo + e_min` for
//! the extreme pieces of `v`, provided the generators `m_{d_hi}` and
//! `m_{d_lo}` are left regular; that is impossible since `e_max ≥ e_min`.

use std::collections::BTreeMap;
use std::sync::Arc;


use crate::error::{invalid, Result};
use crate::grading::{self, graded_basis};
use crate::ncalg::{algebras, Element, Presentation, Word};
use crate::report::Report;
use crate::QPoly;

type Bideg = (i64, i64);

fn bideg(p: &Presentation, w: &Word) -> Bideg {
    (
        p.table("bideg-x").unwrap().word_degree(w),
        p.table("bideg-y").unwrap().word_degree(w),
    )
}

/// Generator `m_(α,β)` of the bigraded piece: `x^α y^s z^t` (or `x*^{−α}…`)
/// with the least admissible `t`.
pub fn piece_generator(alpha: i64, beta: i64) -> Word {
    let t0 = num_integer::Integer::div_ceil(&-beta, &2);
    let s0 = beta + 2 * t0;
    let mut runs = Vec::new();
    if alpha > 0 {
        runs.push((0u8, alpha as u32));
    } else if alpha < 0 {
        runs.push((1u8, (-alpha) as u32));
    }
    if s0 > 0 {
        runs.push((2u8, s0 as u32));
    }
    Word::from_runs(&runs, t0)
}

/// Reads a `(0,0)` element as coefficients of powers of `a = y² z`.
fn a_poly(e: &Element) -> Option<BTreeMap<i64, QPoly>> {
    e.terms()
        .iter()
        .map(|(w, c)| {
            let t = w.central;
            (w.letters.iter().all(|&l| l == 2) && w.letters.len() as i64 == 2 * t)
                .then(|| (t, c.clone()))
        })
        .collect()
}

pub fn noncleft_unit_probe(l: u32, support: usize, bound: u32) -> Result<Report> {
    if !(1..=2).contains(&support) {
        return Err(invalid("support size must be 1 or 2"));
    }
    let p: Arc<Presentation> = algebras::sigma_minus(l);
    let phi = grading::phi();
    let mut r = Report::new(format!(
        "unit probe {} support<={support} bound={bound}",
        p.id()
    ));
    let b = bound as i64;

    let mut units_ok = true;
    for n in -b..=b {
        let zn = Element::central(&p, n);
        let zi = Element::central(&p, -n);
        units_ok &= (&zn * &zi).is_one() && zn.star() == zi;
    }
    r.check("z^n units", units_ok, format!("z^n z^-n = 1 and (z^n)* = z^-n for |n| <= {bound}"));

    let xx = Element::parse(&p, "x x*")?;
    r.check("x x* != 1", !xx.is_one(), format!("x x* = {xx}"));

    let words = graded_basis(&p, &phi, 1, bound);
    let mut classes: BTreeMap<Bideg, Vec<Word>> = BTreeMap::new();
    for w in &words {
        classes.entry(bideg(&p, w)).or_default().push(w.clone());
    }

    // every word of a piece is its generator times a power of a
    let mut shape_bad = None;
    for (d, ws) in &classes {
        let m = piece_generator(d.0, d.1);
        for w in ws {
            let k = w.central - m.central;
            let expect = Word::from_runs(
                &m.runs()
                    .into_iter()
                    .filter(|(l, _)| *l != 2)
                    .chain(std::iter::once((2u8, (m.count(2) as i64 + 2 * k) as u32)))
                    .filter(|(_, n)| *n > 0)
                    .collect::<Vec<_>>(),
                m.central + k,
            );
            if k < 0 || expect != *w {
                shape_bad.get_or_insert_with(|| p.word_to_string(w));
            }
        }
    }
    r.check(
        "pieces are cyclic over Q[a]",
        shape_bad.is_none(),
        shape_bad.map_or_else(
            || format!("{} degree-1 words in {} pieces", words.len(), classes.len()),
            |w| format!("{w} is not generator times a power of a"),
        ),
    );

    // single-piece certificates
    let mut single_bad = None;
    for d in classes.keys() {
        let m = Element::monomial(&p, piece_generator(d.0, d.1), QPoly::one());
        let mm = Element::monomial(&p, piece_generator(-d.0, -d.1), QPoly::one());
        let g = &m * &mm;
        let ok = a_poly(&g).is_some_and(|c| !c.is_empty() && c.keys().any(|t| *t > 0));
        if !ok && single_bad.is_none() {
            single_bad = Some(format!("piece {d:?}: m m' = {g}"));
        }
    }
    r.check(
        "single-piece obstruction",
        single_bad.is_none(),
        single_bad.unwrap_or_else(|| {
            format!("m_d m_-d is a nonconstant polynomial in a for all {} pieces", classes.len())
        }),
    );

    // regularity of the generators against all pieces in range
    let mut reg_bad = None;
    let mut reg_count = 0;
    if support >= 2 && classes.len() >= 2 {
        let range = b + 1;
        for d in classes.keys() {
            let m = Element::monomial(&p, piece_generator(d.0, d.1), QPoly::one());
            for ea in -range..=range {
                for eb in -range..=range {
                    let me = Element::monomial(&p, piece_generator(ea, eb), QPoly::one());
                    reg_count += 1;
                    if (&m * &me).is_zero() && reg_bad.is_none() {
                        reg_bad = Some(format!("m{d:?} m({ea},{eb}) = 0"));
                    }
                }
            }
        }
    }
    r.check(
        "left regularity",
        reg_bad.is_none(),
        reg_bad.unwrap_or_else(|| format!("{reg_count} generator products are nonzero")),
    );

    let n = words.len();
    let candidates = if support >= 2 { n + n * (n - 1) / 2 } else { n };
    let mixed: usize = if support >= 2 {
        let sizes: Vec<usize> = classes.values().map(Vec::len).collect();
        let total: usize = sizes.iter().sum();
        (total * total - sizes.iter().map(|s| s * s).sum::<usize>()) / 2
    } else {
        0
    };
    let verdict = r.passed;
    r.log(format!(
        "l={l}: {candidates} candidate supports ({mixed} meeting two pieces), coefficients arbitrary"
    ));
    r.check(
        "verdict",
        verdict,
        if verdict {
            "no degree-1 unit found at this bound".to_string()
        } else {
            "certificate incomplete".to_string()
        },
    );
    Ok(r)
}
