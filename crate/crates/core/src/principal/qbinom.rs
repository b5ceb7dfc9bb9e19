use crate::coeff::rat;
use crate::error::{invalid, Result};
use crate::QPoly;

/// Coefficients of `∏_{i=1}^{l} (1 + s^{i−1} t)` in `t`, with `s = q^{s_exp}`.
pub fn binom_product(l: u32, s_exp: i64) -> Vec<QPoly> {
    let mut coeffs = vec![QPoly::one()];
    for i in 1..=l as i64 {
        let f = QPoly::q_pow(s_exp * (i - 1));
        let mut next = vec![QPoly::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k] += c;
            next[k + 1] += &(c * &f);
        }
        coeffs = next;
    }
    coeffs
}

/// The q-binomial `binom(l, m)_s` with `s = q^{s_exp}`: the coefficient of
/// `t^m` in the product above divided by `s^{m(m−1)/2}`.
pub fn qbinom(l: u32, m: u32, s_exp: i64) -> Result<QPoly> {
    if m > l {
        return Err(invalid(format!("qbinom needs 0 <= m <= l, got m = {m}, l = {l}")));
    }
    let c = &binom_product(l, s_exp)[m as usize];
    let e = s_exp * (m as i64) * (m as i64 - 1) / 2;
    Ok(c.div_monomial(&rat(1), e))
}
