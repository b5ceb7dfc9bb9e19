//! Canonical maps, strong connections and principality checks.

mod almost;
mod hg;
mod qbinom;
mod strong;
mod tensor;
mod units;

pub use almost::{almost_free_evidence, cokernel_generators};
pub use hg::{hg_preimage_search, hg_search_at_q, CaseLog, HgOutcome, HgSearch};
pub use qbinom::{binom_product, qbinom};
pub use strong::{
    can_inverse_check, cleft_omega, identity_lemma, verify_cleaving_map, verify_strong_connection,
    CleftConnection, ConnectionForm, StrongConnection,
};
pub use tensor::{TensorAA, TensorAH};
pub use units::{noncleft_unit_probe, piece_generator};
