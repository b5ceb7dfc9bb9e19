use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::expr::add_term;
use super::{Presentation, Word};
use crate::QPoly;

/// Order in which redexes are rewritten.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    /// Uniformly random redex, seeded.
    Random(u64),
}

/// Rewrites a linear combination of arbitrary words to normal form.
///
/// Intermediate words are pooled so that equal words are merged before
/// being rewritten further.
pub fn reduce_terms(
    pres: &Presentation,
    input: impl IntoIterator<Item = (Word, QPoly)>,
    strategy: Strategy,
) -> BTreeMap<Word, QPoly> {
    let mut pending: BTreeMap<Word, QPoly> = BTreeMap::new();
    for (w, c) in input {
        add_term(&mut pending, w, &c);
    }
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::Leftmost => None,
    };
    let mut out: BTreeMap<Word, QPoly> = BTreeMap::new();
    let mut redexes = Vec::new();
    while let Some((w, c)) = pending.pop_last() {
        redexes.clear();
        for (i, p) in w.letters.windows(2).enumerate() {
            if pres.rule_for(p[0], p[1]).is_some() {
                redexes.push(i);
                if rng.is_none() {
                    break;
                }
            }
        }
        if redexes.is_empty() {
            add_term(&mut out, w, &c);
            continue;
        }
        let i = match rng.as_mut() {
            Some(r) => redexes[r.gen_range(0..redexes.len())],
            None => redexes[0],
        };
        let rule = pres
            .rule_for(w.letters[i], w.letters[i + 1])
            .expect("redex has a rule");
        for (rw, rc) in &rule.rhs {
            let mut letters = Vec::with_capacity(w.letters.len() + rw.letters.len());
            letters.extend_from_slice(&w.letters[..i]);
            letters.extend_from_slice(&rw.letters);
            letters.extend_from_slice(&w.letters[i + 2..]);
            let nw = Word::new(letters, w.central + rw.central);
            let nc = &c * rc;
            if !nc.is_zero() {
                add_term(&mut pending, nw, &nc);
            }
        }
    }
    out
}
