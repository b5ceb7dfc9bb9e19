//! Truncated `*`-representations of `O(RP_q²(l;±))` on `ℓ²(ℕ)`.
//!
//! The infinite-dimensional series `π_r` act by weighted down-shifts on the
//! basis `e_0, …, e_{D−1}`; the phase family `π_θ` is one-dimensional.
//! Relations are compared on the leading block that the truncation cannot
//! reach.

use std::sync::Arc;

use nalgebra::{DMatrix, RealField};
use num_complex::Complex;
use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::assocmod::chern_rec;
use crate::error::{invalid, Result};
use crate::ncalg::{algebras, check::random_expr, Element, Expr, Presentation};
use crate::report::Report;
use crate::{APoly, QPoly, Sign};

/// Which irreducible family a representation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum RepLabel {
    /// `π_r` on `ℓ²(ℕ)`, `1 ≤ r ≤ l`.
    Series(u32),
    /// `π_θ`, one-dimensional, `θ ∈ [0, 1)`.
    Phase(f64),
}

impl std::fmt::Display for RepLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepLabel::Series(r) => write!(f, "r={r}"),
            RepLabel::Phase(t) => write!(f, "theta={t}"),
        }
    }
}

pub type CMatrix<T> = DMatrix<Complex<T>>;

#[derive(Clone, Debug)]
pub struct TruncatedRep<T: RealField + Copy> {
    pres: Arc<Presentation>,
    sign: Sign,
    l: u32,
    label: RepLabel,
    q: T,
    letters: Vec<CMatrix<T>>,
}

fn real<T: RealField + Float + Copy>(x: f64) -> T {
    <T as num_traits::NumCast>::from(x).expect("f64 fits the scalar type")
}

fn c<T: RealField + Copy>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

impl<T: RealField + Float + Copy> TruncatedRep<T> {
    pub fn build(sign: Sign, l: u32, label: RepLabel, dim: usize, q0: T) -> Result<Self> {
        if !(q0 > T::zero() && q0 < T::one()) {
            return Err(invalid("q must lie in (0, 1)"));
        }
        let pres = match sign {
            Sign::Neg => algebras::rp_minus(l),
            Sign::Pos => algebras::rp_plus(l),
        };
        let letters = match label {
            RepLabel::Phase(theta) => {
                if !(0.0..1.0).contains(&theta) {
                    return Err(invalid(format!("theta must lie in [0, 1), got {theta}")));
                }
                let angle: T = real(2.0 * std::f64::consts::PI * theta);
                let phase = Complex::new(Float::cos(angle), Float::sin(angle));
                let zero = CMatrix::<T>::zeros(1, 1);
                let ph = CMatrix::from_element(1, 1, phase);
                let phc = CMatrix::from_element(1, 1, phase.conj());
                match sign {
                    Sign::Neg => vec![zero.clone(), zero.clone(), zero, ph, phc],
                    Sign::Pos => vec![zero, ph, phc],
                }
            }
            RepLabel::Series(r) => {
                if r < 1 || r > l {
                    return Err(invalid(format!("label r must lie in 1..={l}, got {r}")));
                }
                if dim < 4 {
                    return Err(invalid(format!("cutoff must be at least 4, got {dim}")));
                }
                let (li, ri) = (l as i64, r as i64);
                let qp = |e: i64| Float::powi(q0, e as i32);
                // ∏_{m=1}^{count} (1 − q^{2(ln+r−m)})^{1/2}
                let weight = |n: i64, count: i64| {
                    let mut w = T::one();
                    for m in 1..=count {
                        let f = T::one() - qp(2 * (li * n + ri - m));
                        w *= Float::sqrt(Float::max(f, T::zero()));
                    }
                    w
                };
                let a = CMatrix::from_fn(dim, dim, |i, j| {
                    if i == j {
                        c(qp(2 * (li * i as i64 + ri)))
                    } else {
                        Complex::new(T::zero(), T::zero())
                    }
                });
                let shift = |s: usize, w: &dyn Fn(i64) -> T| {
                    CMatrix::from_fn(dim, dim, |i, j| {
                        if j >= s && i == j - s {
                            c(w(j as i64))
                        } else {
                            Complex::new(T::zero(), T::zero())
                        }
                    })
                };
                match sign {
                    Sign::Neg => {
                        let b = shift(1, &|n| qp(li * n + ri) * weight(n, li));
                        let cm = shift(2, &|n| weight(n, 2 * li));
                        let (bs, cs) = (b.adjoint(), cm.adjoint());
                        vec![a, b, bs, cm, cs]
                    }
                    Sign::Pos => {
                        let cp = shift(1, &|n| weight(n, li));
                        let cs = cp.adjoint();
                        vec![a, cp, cs]
                    }
                }
            }
        };
        Ok(Self {
            pres,
            sign,
            l,
            label,
            q: q0,
            letters,
        })
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn label(&self) -> RepLabel {
        self.label
    }

    pub fn q(&self) -> T {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.letters[0].nrows()
    }

    /// Largest down-shift among the generators.
    pub fn max_shift(&self) -> usize {
        match (self.label, self.sign) {
            (RepLabel::Phase(_), _) => 0,
            (_, Sign::Neg) => 2,
            (_, Sign::Pos) => 1,
        }
    }

    /// Size of the leading block untouched by truncation.
    pub fn safe_len(&self) -> usize {
        self.dim() - self.max_shift()
    }

    pub fn generator(&self, name: &str) -> Option<&CMatrix<T>> {
        self.pres
            .letter_by_name(name)
            .map(|l| &self.letters[l as usize])
    }

    fn identity(&self) -> CMatrix<T> {
        CMatrix::identity(self.dim(), self.dim())
    }

    pub fn eval_scalar(&self, c: &QPoly) -> T {
        c.eval(self.q).expect("q is nonzero")
    }

    pub fn eval_element(&self, e: &Element) -> Result<CMatrix<T>> {
        if e.presentation().id() != self.pres.id() {
            return Err(invalid(format!(
                "element of {} cannot be evaluated in a representation of {}",
                e.presentation().id(),
                self.pres.id()
            )));
        }
        let mut acc = CMatrix::zeros(self.dim(), self.dim());
        for (w, coef) in e.terms() {
            let mut m = self.identity();
            for &l in &w.letters {
                m = &m * &self.letters[l as usize];
            }
            acc += m * c(self.eval_scalar(coef));
        }
        Ok(acc)
    }

    /// Evaluates a raw expression without rewriting it first.
    pub fn eval_expr(&self, e: &Expr) -> CMatrix<T> {
        if let Some(d) = self.diag_expr(e) {
            return CMatrix::from_diagonal(&nalgebra::DVector::from_vec(d));
        }
        match e {
            Expr::Scalar(s) => self.identity() * c(self.eval_scalar(s)),
            Expr::Letter(l) => self.letters[*l as usize].clone(),
            Expr::Central(_) => panic!("quotient algebras have no central unitary"),
            Expr::Sum(ts) => ts
                .iter()
                .fold(CMatrix::zeros(self.dim(), self.dim()), |acc, t| {
                    acc + self.eval_expr(t)
                }),
            Expr::Product(fs) => fs
                .iter()
                .fold(self.identity(), |acc, f| acc * self.eval_expr(f)),
            Expr::Neg(t) => -self.eval_expr(t),
            Expr::Pow(b, n) => {
                let base = self.eval_expr(b);
                (0..*n).fold(self.identity(), |acc, _| acc * &base)
            }
        }
    }

    /// `q`-exponent of the eigenvalue of `a` on `e_n`.
    fn a_exponent(&self, n: usize) -> Option<i64> {
        match self.label {
            RepLabel::Series(r) => Some(2 * (self.l as i64 * n as i64 + r as i64)),
            RepLabel::Phase(_) => None,
        }
    }

    /// `(scalar, power of a)` when `e` is a product of scalars and `a`.
    fn a_monomial(&self, e: &Expr) -> Option<(QPoly, u32)> {
        match e {
            Expr::Scalar(s) => Some((s.clone(), 0)),
            Expr::Letter(0) => Some((QPoly::one(), 1)),
            Expr::Pow(b, k) => {
                let (s, j) = self.a_monomial(b)?;
                Some((s.pow(*k), j * k))
            }
            Expr::Product(fs) => fs.iter().try_fold((QPoly::one(), 0), |(s, j), f| {
                let (t, i) = self.a_monomial(f)?;
                Some((&s * &t, j + i))
            }),
            _ => None,
        }
    }

    /// Diagonal of an expression in `a` alone. Scalar powers of `q` are
    /// combined with the eigenvalue exponent before evaluation, so factors
    /// such as `1 − q^{−2p} a` vanish exactly where they should.
    fn diag_expr(&self, e: &Expr) -> Option<Vec<Complex<T>>> {
        self.a_exponent(0)?;
        let dim = self.dim();
        if let Some((s, j)) = self.a_monomial(e) {
            return Some(
                (0..dim)
                    .map(|n| {
                        let shift = j as i64 * self.a_exponent(n).unwrap_or(0);
                        c(self.eval_scalar(&s.shift(shift)))
                    })
                    .collect(),
            );
        }
        match e {
            Expr::Sum(ts) => ts.iter().try_fold(vec![c(T::zero()); dim], |acc, t| {
                let d = self.diag_expr(t)?;
                Some(acc.iter().zip(d).map(|(x, y)| *x + y).collect())
            }),
            Expr::Product(fs) => fs.iter().try_fold(vec![c(T::one()); dim], |acc, f| {
                let d = self.diag_expr(f)?;
                Some(acc.iter().zip(d).map(|(x, y)| *x * y).collect())
            }),
            Expr::Neg(t) => Some(self.diag_expr(t)?.into_iter().map(|x| -x).collect()),
            Expr::Pow(b, k) => Some(
                self.diag_expr(b)?
                    .into_iter()
                    .map(|x| (0..*k).fold(c(T::one()), |acc, _| acc * x))
                    .collect(),
            ),
            _ => None,
        }
    }

    pub fn eval_apoly(&self, p: &APoly) -> CMatrix<T> {
        let a = &self.letters[0];
        let mut acc = CMatrix::zeros(self.dim(), self.dim());
        for coef in p.coeffs().iter().rev() {
            acc = acc * a + self.identity() * c(self.eval_scalar(coef));
        }
        acc
    }
}

/// Operator norm of the leading `len × len` block.
pub fn block_norm<T: RealField + Copy>(m: &CMatrix<T>, len: usize) -> T {
    let len = len.min(m.nrows());
    if len == 0 {
        return T::zero();
    }
    let block = m.view((0, 0), (len, len)).into_owned();
    block
        .singular_values()
        .iter()
        .copied()
        .fold(T::zero(), |a, b| if b > a { b } else { a })
}

fn to_f64<T: Float>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Per-relation residuals on the leading `block` indices.
pub fn relation_residuals<T: RealField + Float + Copy>(
    rep: &TruncatedRep<T>,
    block: usize,
) -> Vec<(String, T)> {
    rep.pres
        .relations()
        .iter()
        .map(|rel| {
            let d = rep.eval_expr(&rel.lhs) - rep.eval_expr(&rel.rhs);
            (rel.label.clone(), block_norm(&d, block))
        })
        .collect()
}

pub const RESIDUAL_TOL: f64 = 1e-10;
pub const SPECTRUM_TOL: f64 = 1e-12;

/// Every defining relation on the safe block, for one representation.
pub fn relation_check<T: RealField + Float + Copy>(rep: &TruncatedRep<T>, include_boundary: bool) -> Report {
    let block = if include_boundary { rep.dim() } else { rep.safe_len() };
    let mut r = Report::new(format!("{} {} dim={}", rep.pres.id(), rep.label, rep.dim()));
    for (label, res) in relation_residuals(rep, block) {
        let res = to_f64(res);
        r.check(
            format!("{} relation {label}", rep.label),
            res < RESIDUAL_TOL,
            format!("residual {res:.3e}"),
        );
    }
    r
}

/// Hermitian `π(a)` with spectrum `{q^{2(ln+r)}}`.
pub fn spectrum_check<T: RealField + Float + Copy>(rep: &TruncatedRep<T>) -> Report {
    let mut r = Report::new(format!("spectrum {}", rep.label));
    let RepLabel::Series(rr) = rep.label else {
        let a = &rep.letters[0];
        r.check(format!("{} spectrum", rep.label), a[(0, 0)].norm() == T::zero(), "a = 0");
        return r;
    };
    let a = rep.letters[0].clone();
    let herm = block_norm(&(&a - a.adjoint()), rep.dim());
    r.check(
        format!("r={rr} a hermitian"),
        to_f64(herm) < RESIDUAL_TOL,
        format!("{:.3e}", to_f64(herm)),
    );
    let mut got: Vec<f64> = nalgebra::SymmetricEigen::new(a)
        .eigenvalues
        .iter()
        .map(|&x| to_f64(x))
        .collect();
    got.sort_by(|x, y| y.total_cmp(x));
    let (l, q) = (rep.l as i32, to_f64(rep.q));
    let mut worst = 0.0f64;
    for (n, g) in got.iter().enumerate() {
        let want = q.powi(2 * (l * n as i32 + rr as i32));
        worst = worst.max((g - want).abs() / want);
    }
    r.check(
        format!("r={rr} spectrum of a"),
        worst < SPECTRUM_TOL,
        format!("max relative error {worst:.3e}"),
    );
    r
}

/// `Σ |c_w(q)| ‖π(w)‖`, the size of the terms summed by `eval_element`.
pub fn term_scale<T: RealField + Float + Copy>(rep: &TruncatedRep<T>, e: &Element) -> f64 {
    e.terms()
        .iter()
        .map(|(w, coef)| {
            let word = Element::monomial(rep.presentation(), w.clone(), QPoly::one());
            let m = rep.eval_element(&word).expect("same presentation");
            to_f64(Float::abs(rep.eval_scalar(coef))) * to_f64(block_norm(&m, rep.dim()))
        })
        .sum()
}

/// `π(e*) = π(e)†` on random normal-form elements, relative to the size of
/// the terms being summed.
pub fn star_check<T: RealField + Float + Copy>(rep: &TruncatedRep<T>, samples: usize, seed: u64) -> Report {
    let mut r = Report::new(format!("star {}", rep.label));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let e = Element::eval(&rep.pres, &random_expr(&rep.pres, &mut rng, 3));
        let es = e.star();
        let lhs = rep.eval_element(&es).expect("same presentation");
        let rhs = rep.eval_element(&e).expect("same presentation").adjoint();
        let scale = 1.0 + term_scale(rep, &e).max(term_scale(rep, &es));
        worst = worst.max(to_f64(block_norm(&(lhs - rhs), rep.safe_len())) / scale);
    }
    r.check(
        format!("{} star", rep.label),
        worst < RESIDUAL_TOL,
        format!("{samples} samples, max residual relative to term size {worst:.3e}"),
    );
    r
}

/// `c_n(λ)` evaluated by running the recursion on scalars.
pub fn chern_scalar(l: u32, n: i64, q: f64, lambda: f64) -> f64 {
    let li = l as i32;
    let plus = |x: f64| (0..li).map(|p| 1.0 - q.powi(2 * p) * x).product::<f64>();
    let minus = |x: f64| (1..=li).map(|p| 1.0 - q.powi(-2 * p) * x).product::<f64>();
    match n.signum() {
        0 => 1.0,
        1 => {
            chern_scalar(l, n - 1, q, q.powi(2 * li) * lambda) * plus(lambda)
                + chern_scalar(l, n - 1, q, lambda) * (1.0 - minus(lambda))
        }
        _ => {
            chern_scalar(l, n + 1, q, q.powi(-2 * li) * lambda) * minus(lambda)
                + chern_scalar(l, n + 1, q, lambda) * (1.0 - plus(lambda))
        }
    }
}

/// `π(c_n(a))` is diagonal and matches [`chern_scalar`] on the eigenvalues of `a`.
pub fn chern_numeric_check<T: RealField + Float + Copy>(rep: &TruncatedRep<T>, n: i64) -> Report {
    let mut r = Report::new(format!("chern {} n={n}", rep.label));
    let poly = chern_rec(rep.l, n);
    let m = rep.eval_apoly(&poly);
    let q = to_f64(rep.q);
    let mut off = 0.0f64;
    let mut worst = 0.0f64;
    for i in 0..rep.dim() {
        for j in 0..rep.dim() {
            if i != j {
                off = off.max(to_f64(m[(i, j)].norm()));
            }
        }
        let lambda = to_f64(rep.letters[0][(i, i)].re);
        let want = chern_scalar(rep.l, n, q, lambda);
        // Rounding grows with the size of the expanded coefficients.
        let scale: f64 = poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.eval(q).unwrap_or(f64::NAN).abs() * lambda.abs().powi(k as i32))
            .sum::<f64>()
            .max(1.0);
        worst = worst.max((to_f64(m[(i, i)].re) - want).abs() / scale);
    }
    r.check(
        format!("{} chern n={n}", rep.label),
        off == 0.0 && worst < RESIDUAL_TOL,
        format!("off-diagonal {off:.1e}, max scaled error {worst:.3e}"),
    );
    r
}

pub const PHASES: [f64; 3] = [0.0, 0.25, 0.7];

/// Relations, spectra, star compatibility and Chern polynomials across every
/// series label and a few phases.
pub fn residual_suite<T: RealField + Float + Copy>(sign: Sign, l: u32, dim: usize, q0: T, seed: u64) -> Result<Report> {
    let mut r = Report::new(format!("reps {sign} l={l} dim={dim} q={}", to_f64(q0)));
    let mut max_res = 0.0f64;
    let labels = (1..=l)
        .map(RepLabel::Series)
        .chain(PHASES.iter().map(|&t| RepLabel::Phase(t)));
    for label in labels {
        let rep = TruncatedRep::build(sign, l, label, dim, q0)?;
        for (_, res) in relation_residuals(&rep, rep.safe_len()) {
            max_res = max_res.max(to_f64(res));
        }
        r.absorb("", relation_check(&rep, false));
        r.absorb("", spectrum_check(&rep));
        r.absorb("", star_check(&rep, 8, seed));
        for n in -2..=2 {
            r.absorb("", chern_numeric_check(&rep, n));
        }
    }
    r.log(format!("{}: max relation residual {max_res:.3e}", r.name));
    Ok(r)
}
