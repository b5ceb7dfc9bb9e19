use std::collections::HashMap;
use std::sync::{Arc, Mutex};


use super::qbinom::qbinom;
use super::tensor::TensorAA;
use crate::error::{invalid, Result};
use crate::grading::{self, degree_of, Degree, DegreeTable};
use crate::ncalg::{algebras, Element, Presentation};
use crate::report::Report;
use crate::QPoly;

/// A candidate strong connection form `ω: ℂ[u, u⁻¹] → A ⊗ A`.
pub trait ConnectionForm: Send + Sync {
    fn name(&self) -> String;
    fn presentation(&self) -> &Arc<Presentation>;
    /// The circle grading the form is meant to be colinear for.
    fn table(&self) -> &DegreeTable;
    fn omega(&self, n: i64) -> TensorAA;
}

/// The recursively defined form on `O(Σ_q³(l,−))`.
pub struct StrongConnection {
    pres: Arc<Presentation>,
    table: DegreeTable,
    x: Element,
    xs: Element,
    y: Element,
    yz: Element,
    /// `Σ_m (−1)^m q^{−m(m+1)} binom(l,m)_{q⁻²} y^{2m−1} z^m`.
    up: Element,
    /// `Σ_m (−1)^m q^{m(m−1)} binom(l,m)_{q²} y^{2m−1} z^{m−1}`.
    down: Element,
    sign: i64,
    memo: Mutex<HashMap<i64, TensorAA>>,
}

impl StrongConnection {
    pub fn new(l: u32) -> Self {
        Self::build(l, 1)
    }

    /// Negative control: the q-binomial sums enter with the wrong sign.
    pub fn with_flipped_sum(l: u32) -> Self {
        Self::build(l, -1)
    }

    fn build(l: u32, sign: i64) -> Self {
        let pres = algebras::sigma_minus(l);
        let el = |s: &str| Element::parse(&pres, s).expect("static element");
        let mut up = Element::zero(&pres);
        let mut down = Element::zero(&pres);
        for m in 1..=l as i64 {
            let sgn = if m % 2 == 0 { 1 } else { -1 };
            let cu = qbinom(l, m as u32, -2).unwrap().shift(-m * (m + 1)).scale(&crate::coeff::rat(sgn));
            let cd = qbinom(l, m as u32, 2).unwrap().shift(m * (m - 1)).scale(&crate::coeff::rat(sgn));
            up = &up + &el(&format!("y^{} z^{m}", 2 * m - 1)).scale(&cu);
            down = &down + &el(&format!("y^{} z^{}", 2 * m - 1, m - 1)).scale(&cd);
        }
        Self {
            table: grading::phi(),
            x: el("x"),
            xs: el("x*"),
            y: el("y"),
            yz: el("y z"),
            up,
            down,
            sign,
            pres,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn l(&self) -> u32 {
        self.pres.l()
    }

    fn step(&self, prev: &TensorAA, n: i64) -> TensorAA {
        let s = QPoly::from(self.sign);
        if n > 0 {
            let a = prev.mul_left(&self.xs).mul_right(&self.x);
            let b = prev.mul_left(&self.up).mul_right(&self.y);
            a.sub(&b.scale(&s))
        } else {
            let a = prev.mul_left(&self.x).mul_right(&self.xs);
            let b = prev.mul_left(&self.down).mul_right(&self.yz);
            a.sub(&b.scale(&s))
        }
    }
}

impl ConnectionForm for StrongConnection {
    fn name(&self) -> String {
        if self.sign == 1 {
            format!("omega[{}]", self.pres.id())
        } else {
            format!("omega-flipped[{}]", self.pres.id())
        }
    }

    fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    fn table(&self) -> &DegreeTable {
        &self.table
    }

    fn omega(&self, n: i64) -> TensorAA {
        if n == 0 {
            return TensorAA::one(&self.pres);
        }
        if let Some(t) = self.memo.lock().unwrap().get(&n) {
            return t.clone();
        }
        let prev = self.omega(n - n.signum());
        let t = self.step(&prev, n);
        self.memo.lock().unwrap().entry(n).or_insert(t).clone()
    }
}

/// `ω(uⁿ) = z'ⁿ ⊗ z'⁻ⁿ` on `O(Σ_q³(l,+))`, induced by the cleaving map
/// `j(u) = z'*`.
pub struct CleftConnection {
    pres: Arc<Presentation>,
    table: DegreeTable,
}

pub fn cleft_omega(l: u32) -> Result<CleftConnection> {
    if l.is_multiple_of(2) {
        return Err(invalid(format!("the positive case needs odd l, got {l}")));
    }
    Ok(CleftConnection {
        pres: algebras::sigma_plus(l),
        table: grading::omega(),
    })
}

impl ConnectionForm for CleftConnection {
    fn name(&self) -> String {
        format!("omega-cleft[{}]", self.pres.id())
    }

    fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    fn table(&self) -> &DegreeTable {
        &self.table
    }

    fn omega(&self, n: i64) -> TensorAA {
        TensorAA::pair(&Element::central(&self.pres, n), &Element::central(&self.pres, -n))
    }
}

/// Checks the four axioms for `|n| ≤ n_max`:
/// normalisation, `μ∘ω = η∘ε`, and colinearity of both legs, which for a
/// grading means every right factor of `ω(uⁿ)` has degree `n` and every
/// left factor degree `−n`.
pub fn verify_strong_connection(conn: &dyn ConnectionForm, n_max: i64) -> Report {
    let mut r = Report::new(format!("strong connection {}", conn.name()));
    let p = conn.presentation();
    let t = conn.table();
    let w0 = conn.omega(0);
    r.check("strong1", w0 == TensorAA::one(p), format!("omega(1) = {w0}"));
    for n in -n_max..=n_max {
        let w = conn.omega(n);
        let mu = w.mu();
        let residual = &mu - &Element::one(p);
        r.check(
            format!("strong2 n={n}"),
            residual.is_zero(),
            if residual.is_zero() {
                format!("{} pairs, mu = 1", w.len())
            } else {
                format!("residual {residual}")
            },
        );
        let bad_right = w
            .terms()
            .values()
            .map(|rf| degree_of(rf, t))
            .find(|d| *d != Degree::Homogeneous(t.normalize(n)));
        r.check(
            format!("strong3 n={n}"),
            bad_right.is_none(),
            match bad_right {
                None => format!("right factors of degree {n}"),
                Some(d) => format!("right factor of degree {d}"),
            },
        );
        let bad_left = w
            .terms()
            .keys()
            .map(|lw| t.word_degree(lw))
            .find(|d| *d != t.normalize(-n));
        r.check(
            format!("strong4 n={n}"),
            bad_left.is_none(),
            match bad_left {
                None => format!("left factors of degree {}", -n),
                Some(d) => format!("left factor of degree {d}"),
            },
        );
    }
    r
}

/// `lifted_can(ω(uⁿ)) = 1 ⊗ uⁿ` for `|n| ≤ n_max`.
pub fn can_inverse_check(conn: &dyn ConnectionForm, n_max: i64) -> Report {
    let mut r = Report::new(format!("canonical map inverse {}", conn.name()));
    for n in -n_max..=n_max {
        let img = conn.omega(n).lifted_can(conn.table());
        r.check(format!("can n={n}"), img.is_one_at(n), img.to_string());
    }
    r
}

/// `Σ_{m=1}^{l} (−1)^m q^{−m(m+1)} binom(l,m)_{q⁻²} y^{2m} z^m = x*x − 1`.
pub fn identity_lemma(l: u32) -> Report {
    let mut r = Report::new(format!("q-binomial identity l={l}"));
    let p = algebras::sigma_minus(l);
    let mut lhs = Element::zero(&p);
    for m in 1..=l as i64 {
        let sgn = if m % 2 == 0 { 1 } else { -1 };
        let c = qbinom(l, m as u32, -2)
            .unwrap()
            .shift(-m * (m + 1))
            .scale(&crate::coeff::rat(sgn));
        let w = Element::parse(&p, &format!("y^{} z^{m}", 2 * m)).unwrap();
        lhs = &lhs + &w.scale(&c);
    }
    let rhs = &Element::parse(&p, "x* x").unwrap() - &Element::one(&p);
    let diff = &lhs - &rhs;
    r.check(
        format!("identity l={l}"),
        diff.is_zero(),
        if diff.is_zero() {
            format!("{lhs}")
        } else {
            format!("residual {diff}")
        },
    );
    r
}

/// Checks that `j(uⁿ) = j(u)ⁿ` (with `j(u⁻¹) = j(u)*`) is a unital,
/// multiplicative, convolution-invertible and colinear map for `|n| ≤ n_max`.
pub fn verify_cleaving_map(l: u32, candidate: &str, n_max: i64) -> Result<Report> {
    if l.is_multiple_of(2) {
        return Err(invalid(format!("the positive case needs odd l, got {l}")));
    }
    let p = algebras::sigma_plus(l);
    let t = grading::omega();
    let ju = Element::parse(&p, candidate)?;
    let jinv = ju.star();
    let j = |n: i64| -> Element {
        if n >= 0 {
            ju.pow(n as u32)
        } else {
            jinv.pow(n.unsigned_abs() as u32)
        }
    };
    let mut r = Report::new(format!("cleaving map j(u) = {candidate} on {}", p.id()));
    r.check("unital", j(0).is_one(), "j(1) = 1");
    let uu = &ju * &jinv;
    let uu2 = &jinv * &ju;
    r.check(
        "invertible",
        uu.is_one() && uu2.is_one(),
        format!("j(u) j(u)* = {uu}; j(u)* j(u) = {uu2}"),
    );
    for n in -n_max..=n_max {
        let d = degree_of(&j(n), &t);
        r.check(
            format!("colinear n={n}"),
            d == Degree::Homogeneous(n),
            format!("degree of j(u^{n}) is {d}"),
        );
    }
    let mut mult_bad = None;
    let mut conv_bad = None;
    for m in -3..=3i64 {
        for n in -3..=3i64 {
            if mult_bad.is_none() && &j(m) * &j(n) != j(m + n) {
                mult_bad = Some(format!("j(u^{m}) j(u^{n}) != j(u^{})", m + n));
            }
        }
        if conv_bad.is_none() && !(&j(-m) * &j(m)).is_one() {
            conv_bad = Some(format!("j^-1(u^{m}) j(u^{m}) != 1"));
        }
    }
    r.check(
        "multiplicative",
        mult_bad.is_none(),
        mult_bad.unwrap_or_else(|| "on |m|, |n| <= 3".into()),
    );
    r.check(
        "convolution inverse",
        conv_bad.is_none(),
        conv_bad.unwrap_or_else(|| "j^-1 = j o S".into()),
    );
    Ok(r)
}
