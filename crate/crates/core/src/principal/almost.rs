use super::strong::{cleft_omega, ConnectionForm, StrongConnection};
use crate::error::{invalid, Result};
use crate::grading::{self, degree_of, Degree};
use crate::ncalg::morphism::{fix_minus, fix_plus};
use crate::ncalg::Element;
use crate::report::Report;

/// Evidence that `ρ_{k,l}` on `O(Σ_q³)` is almost free, for `k = 1` (via
/// `O(Σ_q³(l,−))`) or `k = 2`, `l` odd (via `O(Σ_q³(l,+))`).
pub fn almost_free_evidence(k: i64, l: u32) -> Result<Report> {
    let li = l as i64;
    let (iota, table, mult, conn): (_, _, i64, Box<dyn ConnectionForm>) = match k {
        1 => (fix_minus(l), grading::phi(), li, Box::new(StrongConnection::new(l))),
        2 if l % 2 == 1 => (fix_plus(l), grading::omega(), 2 * li, Box::new(cleft_omega(l)?)),
        _ => {
            return Err(invalid(format!(
                "almost-freeness is shown for k = 1, or k = 2 with odd l; got ({k},{l})"
            )))
        }
    };
    let rho = grading::rho(k, li);
    let src = iota.source().clone();
    let mut r = Report::new(format!("almost free rho({k},{l})"));

    let mut gens: Vec<(String, Element)> = (0..src.letters().len())
        .map(|i| (src.letter_name(i as u8).to_string(), Element::letter(&src, i as u8)))
        .collect();
    gens.push((src.central_name().unwrap().to_string(), Element::central(&src, 1)));
    for (name, g) in &gens {
        let d = degree_of(g, &table);
        let img = iota.apply(g);
        let di = degree_of(&img, &rho);
        let ok = match (d, di) {
            (Degree::Homogeneous(a), Degree::Homogeneous(b)) => b == mult * a,
            _ => false,
        };
        r.check(
            format!("square {name}"),
            ok,
            format!("{name} has degree {d}, its image {img} has rho-degree {di}"),
        );
    }

    for m in -3..=3i64 {
        let w = conn.omega(m).map(&iota);
        let img = w.lifted_can(&rho);
        r.check(
            format!("image m={m}"),
            img.is_one_at(m * mult),
            format!("lifted can of iota(omega(u^{m})) = {img}"),
        );
    }

    let gens: Vec<String> = (1..mult).map(|j| format!("[1 ⊗ u^{j}]")).collect();
    r.log(format!(
        "cokernel generated modulo u^{mult} by {}",
        gens.join(", ")
    ));
    r.check(
        "cokernel generators",
        gens.len() as i64 == mult - 1,
        gens.join(", "),
    );
    Ok(r)
}

/// Indices `j` of the cokernel generators `[1 ⊗ u^j]`.
pub fn cokernel_generators(k: i64, l: u32) -> Vec<i64> {
    let mult = k * l as i64;
    (1..mult).collect()
}
