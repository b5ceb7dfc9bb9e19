//! Line-bundle projectors `E[n]` and their traces.

use std::sync::Arc;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::grading::{self, degree_of, express_in_coinvariants, graded_basis, Degree};
use crate::ncalg::{algebras, AlgebraKind, Element, Presentation, Word};
use crate::principal::{ConnectionForm, StrongConnection, TensorAA};
use crate::report::Report;
use crate::{APoly, QPoly, Rational, Sign};

/// `E[n]_{ij} = ω(uⁿ)⁽²⁾ᵢ ω(uⁿ)⁽¹⁾ⱼ` over `O(Σ_q³(l,−))`.
#[derive(Clone, Debug)]
pub struct ProjectorMatrix {
    pub l: u32,
    pub n: i64,
    pub left: Vec<Element>,
    pub right: Vec<Element>,
    pub entries: Vec<Vec<Element>>,
}

/// Plain serialisable form of a projector, entries in the `a, b, c-` grammar.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixJson {
    pub l: u32,
    pub n: i64,
    pub size: usize,
    pub entries: Vec<Vec<String>>,
}

impl ProjectorMatrix {
    /// Builds the matrix from the pairs of a tensor, without verification.
    pub fn from_tensor(l: u32, n: i64, omega: &TensorAA) -> Self {
        let (left, right): (Vec<_>, Vec<_>) = omega.pairs().into_iter().unzip();
        Self::from_pairs(l, n, left, right)
    }

    pub fn from_pairs(l: u32, n: i64, left: Vec<Element>, right: Vec<Element>) -> Self {
        let entries = right
            .iter()
            .map(|ri| left.iter().map(|lj| ri * lj).collect())
            .collect();
        Self {
            l,
            n,
            left,
            right,
            entries,
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        self.left[0].presentation()
    }

    pub fn mul(&self, other: &ProjectorMatrix) -> Vec<Vec<Element>> {
        let k = self.size();
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let mut acc = self.entries[i][0].zero_like();
                        for m in 0..k {
                            acc = &acc + &(&self.entries[i][m] * &other.entries[m][j]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    /// Copy with the `i`-th pair rescaled by `λ ⊗ λ⁻¹`.
    pub fn rescaled(&self, i: usize, lambda: i64) -> Self {
        let mut left = self.left.clone();
        let mut right = self.right.clone();
        left[i] = left[i].scale(&QPoly::q_pow(lambda));
        right[i] = right[i].scale(&QPoly::q_pow(-lambda));
        Self::from_pairs(self.l, self.n, left, right)
    }

    /// `Tr(E^k)` for `k = 1..=kmax`.
    pub fn power_traces(&self, kmax: usize) -> Vec<Element> {
        let mut out = Vec::new();
        let mut pow = self.clone();
        for _ in 0..kmax {
            out.push(pow.trace());
            let entries = pow.mul(self);
            pow = Self { entries, ..self.clone() };
        }
        out
    }

    pub fn trace(&self) -> Element {
        let mut acc = Element::zero(self.presentation());
        for i in 0..self.size() {
            acc = &acc + &self.entries[i][i];
        }
        acc
    }

    /// Idempotency, degree-zero entries and expressibility of every entry.
    pub fn verify(&self) -> Report {
        let mut r = Report::new(format!("projector l={} n={}", self.l, self.n));
        let sq = self.mul(self);
        let mut bad = None;
        for (i, (sq_row, row)) in sq.iter().zip(&self.entries).enumerate() {
            for (j, (x, y)) in sq_row.iter().zip(row).enumerate() {
                let d = x - y;
                if !d.is_zero() && bad.is_none() {
                    bad = Some(format!("(E^2 - E)[{i}][{j}] = {d}"));
                }
            }
        }
        r.check(
            "idempotent",
            bad.is_none(),
            bad.unwrap_or_else(|| format!("{0}x{0}", self.size())),
        );
        let phi = grading::phi();
        let mut deg_bad = None;
        let mut expr_bad = None;
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let d = degree_of(e, &phi);
                if !matches!(d, Degree::Zero | Degree::Homogeneous(0)) && deg_bad.is_none() {
                    deg_bad = Some(format!("E[{i}][{j}] has degree {d}"));
                }
                if let Err(err) = express_in_coinvariants(e, &phi) {
                    expr_bad.get_or_insert(format!("E[{i}][{j}]: {err}"));
                }
            }
        }
        r.check("degree zero", deg_bad.is_none(), deg_bad.unwrap_or_else(|| "all entries".into()));
        r.check(
            "coinvariant entries",
            expr_bad.is_none(),
            expr_bad.unwrap_or_else(|| "all entries expressible in a, b, c-".into()),
        );
        r
    }

    /// Entries rewritten in the generators of `O(RP_q²(l;−))`.
    pub fn expressed(&self) -> Result<Vec<Vec<Element>>> {
        let phi = grading::phi();
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| express_in_coinvariants(e, &phi)).collect())
            .collect()
    }

    pub fn to_json(&self) -> Result<MatrixJson> {
        let entries = self
            .expressed()?
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect();
        Ok(MatrixJson {
            l: self.l,
            n: self.n,
            size: self.size(),
            entries,
        })
    }

    pub fn latex(&self) -> Result<String> {
        let rows: Vec<String> = self
            .expressed()?
            .iter()
            .map(|row| row.iter().map(element_latex).collect::<Vec<_>>().join(" & "))
            .collect();
        Ok(format!(
            "E[{}] = \\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}",
            self.n,
            rows.join(" \\\\\n")
        ))
    }
}

/// The projector for the strong connection of `O(Σ_q³(l,−))`, verified.
pub fn projector(l: u32, n: i64) -> Result<ProjectorMatrix> {
    let conn = StrongConnection::new(l);
    projector_for(&conn, n)
}

pub fn projector_for(conn: &StrongConnection, n: i64) -> Result<ProjectorMatrix> {
    let e = ProjectorMatrix::from_tensor(conn.l(), n, &conn.omega(n));
    let rep = e.verify();
    match rep.first_failure() {
        None => Ok(e),
        Some(c) => Err(Error::Verification(format!("{}: {}", c.id, c.detail))),
    }
}

/// `∏_{p ∈ range} (1 − q^{2p} a)` as a polynomial in `a`.
pub fn a_product(range: std::ops::RangeInclusive<i64>) -> APoly {
    let mut acc = APoly::one();
    for p in range {
        acc = &acc * &APoly::new(vec![QPoly::one(), -QPoly::q_pow(2 * p)]);
    }
    acc
}

/// `c_n` from the two-sided recursion with `c_0 = 1`.
pub fn chern_rec(l: u32, n: i64) -> APoly {
    let li = l as i64;
    let plus = a_product(0..=li - 1);
    let minus = a_product(-li..=-1);
    let one = APoly::one();
    let mut c = APoly::one();
    for _ in 0..n.unsigned_abs() {
        c = if n > 0 {
            &(&c.rescale(&QPoly::q_pow(2 * li)) * &plus) + &(&c * &(&one - &minus))
        } else {
            &(&c.rescale(&QPoly::q_pow(-2 * li)) * &minus) + &(&c * &(&one - &plus))
        };
    }
    c
}

/// Reads an element of `O(RP_q²(l;±))` that involves `a` only.
pub fn a_polynomial(e: &Element) -> Result<APoly> {
    let p = e.presentation();
    if !matches!(p.kind(), AlgebraKind::RpMinus | AlgebraKind::RpPlus) {
        return Err(invalid(format!("{} is not a coinvariant algebra", p.id())));
    }
    let a = p.letter_by_name("a").unwrap();
    let mut coeffs: Vec<QPoly> = Vec::new();
    for (w, c) in e.terms() {
        if w.letters.iter().any(|&x| x != a) {
            return Err(Error::NotExpressible(format!("{e} is not a polynomial in a")));
        }
        let k = w.letters.len();
        if coeffs.len() <= k {
            coeffs.resize(k + 1, QPoly::zero());
        }
        coeffs[k] = c.clone();
    }
    Ok(APoly::new(coeffs))
}

/// Trace of the reference `E[1]` matrix for `l = 2`.
pub fn e1_trace() -> APoly {
    let p = algebras::rp_minus(2);
    let e = Element::parse(&p, "(1 - a)(1 - q^2 a) + q^-2 (1 + q^-2) a - q^-6 a^2")
        .expect("static element");
    a_polynomial(&e).expect("polynomial in a")
}

/// Compares `Tr E[n]`, rewritten in the coinvariants, with `chern_rec`.
pub fn trace_check(l: u32, n: i64) -> Result<Report> {
    let e = projector(l, n)?;
    let mut r = Report::new(format!("trace l={l} n={n}"));
    let tr = express_in_coinvariants(&e.trace(), &grading::phi())?;
    let poly = a_polynomial(&tr);
    r.check(
        "polynomial in a",
        poly.is_ok(),
        match &poly {
            Ok(p) => p.to_string(),
            Err(err) => err.to_string(),
        },
    );
    let rec = chern_rec(l, n);
    if let Ok(p) = &poly {
        r.check(
            "trace = chern_rec",
            *p == rec,
            if *p == rec {
                rec.to_string()
            } else {
                format!("trace {p}; recursion {rec}")
            },
        );
        if l == 2 && n == 1 {
            let e1 = e1_trace();
            r.check("trace = reference E[1] trace", *p == e1, e1.to_string());
        }
    }
    Ok(r)
}

/// Bounded basis of `Γ[n]`, the degree-`n` part of the total algebra.
///
/// In the positive case each element `e` is also checked to factor as
/// `z'*ⁿ · B` with `B` coinvariant.
pub fn gamma_basis(l: u32, sign: Sign, n: i64, bound: u32) -> Result<(Vec<Element>, Report)> {
    let (p, t) = match sign {
        Sign::Neg => (algebras::sigma_minus(l), grading::phi()),
        Sign::Pos => {
            if l.is_multiple_of(2) {
                return Err(invalid(format!("the positive case needs odd l, got {l}")));
            }
            (algebras::sigma_plus(l), grading::omega())
        }
    };
    let words: Vec<Word> = graded_basis(&p, &t, n, bound);
    let elems: Vec<Element> = words
        .iter()
        .map(|w| Element::monomial(&p, w.clone(), QPoly::one()))
        .collect();
    let mut r = Report::new(format!("gamma {} n={n} bound={bound}", p.id()));
    r.check("basis", true, format!("{} words", elems.len()));
    if sign == Sign::Pos {
        let zn = Element::central(&p, n);
        let zsn = Element::central(&p, -n);
        let mut bad = None;
        for e in &elems {
            let b = &zn * e;
            let ok = express_in_coinvariants(&b, &t).is_ok() && &zsn * &b == *e;
            if !ok && bad.is_none() {
                bad = Some(format!("{e} does not factor"));
            }
        }
        r.check(
            "free",
            bad.is_none(),
            bad.unwrap_or_else(|| format!("every element is z'*^{n} times a coinvariant")),
        );
    } else if n == 0 {
        let bad = elems.iter().find(|e| express_in_coinvariants(e, &t).is_err());
        r.check(
            "coinvariants",
            bad.is_none(),
            bad.map_or_else(|| "all expressible in a, b, c-".into(), |e| format!("{e}")),
        );
    }
    Ok((elems, r))
}

fn rational_latex(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn qpoly_latex(c: &QPoly) -> String {
    let mut out = String::new();
    for (i, (e, x)) in c.terms().enumerate() {
        let neg = x.is_negative();
        let ax = x.abs();
        if i > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let qpart = match e {
            0 => String::new(),
            1 => "q".into(),
            _ => format!("q^{{{e}}}"),
        };
        if ax.is_one() && e != 0 {
            out.push_str(&qpart);
        } else {
            out.push_str(&rational_latex(&ax));
            out.push_str(&qpart);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn letter_latex(name: &str) -> String {
    let (base, star) = match name.strip_suffix('*') {
        Some(b) => (b, true),
        None => (name, false),
    };
    let base = match base {
        "c-" => "c_-".to_string(),
        "c+" => "c_+".to_string(),
        b => b.to_string(),
    };
    if star {
        format!("{base}^*")
    } else {
        base
    }
}

pub fn element_latex(e: &Element) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let p = e.presentation();
    let mut out = String::new();
    for (i, (w, c)) in e.terms().iter().enumerate() {
        let mut word: Vec<String> = w
            .runs()
            .into_iter()
            .map(|(l, n)| {
                let s = letter_latex(p.letter_name(l));
                match (n, s.contains('*')) {
                    (1, _) => s,
                    (_, true) => format!("({s})^{{{n}}}"),
                    _ => format!("{s}^{{{n}}}"),
                }
            })
            .collect();
        if w.central != 0 {
            word.push(format!("{}^{{{}}}", p.central_name().unwrap_or("?"), w.central));
        }
        let word = word.join(" ");
        let (neg, body) = match c.as_monomial() {
            Some((x, _)) if x.is_negative() => (true, qpoly_latex(&-c.clone())),
            Some(_) => (false, qpoly_latex(c)),
            None => (false, format!("({})", qpoly_latex(c))),
        };
        if i > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        match (body.as_str(), word.is_empty()) {
            ("1", false) => out.push_str(&word),
            (_, true) => out.push_str(&body),
            _ => out.push_str(&format!("{body} {word}")),
        }
    }
    out
}
