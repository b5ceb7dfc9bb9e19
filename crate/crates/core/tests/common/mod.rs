//! Oracles shared by the integration tests.
#![allow(dead_code)]

use qrpw_core::ncalg::Word;
use qrpw_core::QPoly;

/// `∏_{p ∈ range} (1 − q^{sign 2p} t)` as coefficients in `t`.
pub fn binomial_product(range: std::ops::RangeInclusive<i64>, sign: i64) -> Vec<QPoly> {
    let mut acc = vec![QPoly::one()];
    for p in range {
        let mut next = vec![QPoly::zero(); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j] = &next[j] + c;
            next[j + 1] = &next[j + 1] - &c.shift(sign * 2 * p);
        }
        acc = next;
    }
    acc
}

/// Closed forms for `z0^m z0*^n` and `z0*^n z0^m`, moved to normal order by
/// hand: `z1² z0*^k = q^{2k} z0*^k z1²` and `z1² z0^k = q^{-2k} z0^k z1²`.
pub fn power_product_closed_form(m: u32, n: u32, z0_first: bool) -> Vec<(Word, QPoly)> {
    let (m, n) = (m as i64, n as i64);
    let (z0, z0s, z1) = (0u8, 1u8, 2u8);
    let word = |letter: u8, k: i64, j: i64| {
        let mut runs = Vec::new();
        if k > 0 {
            runs.push((letter, k as u32));
        }
        if j > 0 {
            runs.push((z1, 2 * j as u32));
        }
        Word::from_runs(&runs, j)
    };
    let mut out = Vec::new();
    if z0_first {
        let poly = binomial_product(0..=m.min(n) - 1, 1);
        for (j, c) in poly.iter().enumerate() {
            let j = j as i64;
            if m >= n {
                out.push((word(z0, m - n, j), c.clone()));
            } else {
                out.push((word(z0s, n - m, j), c.shift(2 * j * (n - m))));
            }
        }
    } else {
        let poly = binomial_product(1..=m.min(n), -1);
        for (j, c) in poly.iter().enumerate() {
            let j = j as i64;
            if n >= m {
                out.push((word(z0s, n - m, j), c.clone()));
            } else {
                out.push((word(z0, m - n, j), c.shift(-2 * j * (m - n))));
            }
        }
    }
    out
}
