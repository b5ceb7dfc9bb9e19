use serde::Serialize;

use crate::ncalg::{Letter, Word};

/// Integer or cyclic grading given by generator degrees.
///
/// Coactions of the circle Hopf algebra (`modulus = 0`) and of a cyclic
/// group algebra `ℂℤ_m` (`modulus = m`) are both encoded this way: a
/// homogeneous element of degree `n` is coacted to `a ⊗ uⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeTable {
    pub name: String,
    pub modulus: i64,
    /// Degree of each letter, indexed like the presentation's alphabet.
    pub letters: Vec<i64>,
    /// Degree of the central unitary.
    pub central: i64,
}

impl DegreeTable {
    pub fn new(name: impl Into<String>, modulus: i64, letters: Vec<i64>, central: i64) -> Self {
        Self {
            name: name.into(),
            modulus,
            letters,
            central,
        }
    }

    pub fn normalize(&self, d: i64) -> i64 {
        if self.modulus > 0 {
            d.rem_euclid(self.modulus)
        } else {
            d
        }
    }

    pub fn letter_degree(&self, l: Letter) -> i64 {
        self.letters[l as usize]
    }

    pub fn word_degree(&self, w: &Word) -> i64 {
        let d: i64 = w.letters.iter().map(|&l| self.letters[l as usize]).sum::<i64>()
            + w.central * self.central;
        self.normalize(d)
    }

    pub fn is_zero_table(&self) -> bool {
        self.letters.iter().all(|&d| self.normalize(d) == 0) && self.normalize(self.central) == 0
    }
}

/// `ρ_{k,l}` on `O(Σ_q³)`: `z0 ↦ k`, `z1 ↦ l`, `xi ↦ −2l`.
pub fn rho(k: i64, l: i64) -> DegreeTable {
    DegreeTable::new(format!("rho:{k},{l}"), 0, vec![k, -k, l], -2 * l)
}

/// The `ℤ_l` grading of `O(Σ_q³)` whose invariants are `O(Σ_q³(l,−))`.
pub fn zl(l: i64) -> DegreeTable {
    DegreeTable::new(format!("zl:{l}"), l, vec![1, -1, 0], 0)
}

/// The `ℤ_{2l}` grading of `O(Σ_q³)` whose invariants are `O(Σ_q³(l,+))`.
pub fn phi_cyclic(l: i64) -> DegreeTable {
    DegreeTable::new(format!("Phi:{l}"), 2 * l, vec![2, -2, l], 0)
}

/// Circle grading of `O(Σ_q³(l,−))`: `x, y ↦ 1`, `z ↦ −2`.
pub fn phi() -> DegreeTable {
    DegreeTable::new("phi", 0, vec![1, -1, 1], -2)
}

/// Circle grading of `O(Σ_q³(l,+))`: `x', y' ↦ 1`, `z' ↦ −1`.
pub fn omega() -> DegreeTable {
    DegreeTable::new("Omega", 0, vec![1, -1, 1], -1)
}

pub fn zero_table(n_letters: usize) -> DegreeTable {
    DegreeTable::new("zero", 0, vec![0; n_letters], 0)
}
