//! Presented noncommutative *-algebras over `ℚ[q, q⁻¹]`.

pub mod algebras;
pub mod check;
mod element;
mod expr;
pub mod morphism;
mod presentation;
mod rewrite;
mod word;

pub use check::{check_presentation, random_expr};
pub use element::Element;
pub(crate) use element::star_word;
pub use expr::Expr;
pub use morphism::{check_morphism, Morphism};
pub use presentation::{AlgebraKind, LetterInfo, NormalPattern, Presentation, Relation, Rule};
pub use rewrite::{reduce_terms, Strategy};
pub use word::{Letter, Word};
