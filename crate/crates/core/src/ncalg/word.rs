use serde::Serialize;

/// Index of a non-central generator in its presentation's alphabet.
pub type Letter = u8;

/// A monomial: a sequence of letters times a power of the central unitary.
///
/// The central generator (`xi`, `z` or `z'`) commutes with everything and
/// is stored as a single signed exponent; its star is its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Word {
    pub letters: Vec<Letter>,
    pub central: i64,
}

impl Word {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(letters: Vec<Letter>, central: i64) -> Self {
        Self { letters, central }
    }

    pub fn letter(l: Letter) -> Self {
        Self {
            letters: vec![l],
            central: 0,
        }
    }

    pub fn central_power(t: i64) -> Self {
        Self {
            letters: Vec::new(),
            central: t,
        }
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty() && self.central == 0
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            central: self.central + other.central,
        }
    }

    /// Run-length encoding of the letter sequence.
    pub fn runs(&self) -> Vec<(Letter, u32)> {
        let mut out: Vec<(Letter, u32)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((p, n)) if *p == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    pub fn from_runs(runs: &[(Letter, u32)], central: i64) -> Word {
        let mut letters = Vec::new();
        for &(l, n) in runs {
            letters.extend(std::iter::repeat_n(l, n as usize));
        }
        Word { letters, central }
    }

    pub fn count(&self, l: Letter) -> usize {
        self.letters.iter().filter(|&&x| x == l).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_round_trip() {
        let w = Word::new(vec![0, 0, 2, 1, 1, 1], -3);
        assert_eq!(w.runs(), vec![(0, 2), (2, 1), (1, 3)]);
        assert_eq!(Word::from_runs(&w.runs(), -3), w);
        assert_eq!(w.count(1), 3);
    }

    #[test]
    fn concat_adds_central() {
        let a = Word::new(vec![0], 2);
        let b = Word::new(vec![1], -5);
        assert_eq!(a.concat(&b), Word::new(vec![0, 1], -3));
    }
}
