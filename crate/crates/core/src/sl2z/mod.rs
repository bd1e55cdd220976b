//! Exact SL(2,Z) algebra: matrices, `RL`-words, conjugacy normal forms and
//! periodic points of toral automorphisms.

mod conjugacy;
mod factor;
mod matrix;
mod periodic;
mod word;

pub use conjugacy::{classify_conjugacy, ConjClass, Sign};
pub use factor::{rl_factorize, Factorization};
pub use matrix::{mat_pow, IntMatrix2};
pub use periodic::{fixed_point_lattice, periodic_point_count, smith_2x2, Smith2};
pub(crate) use periodic::FixedPointGroup;
pub use word::{
    class_normal_form, conjugacy_equal, cyclic_normal_form, word_to_matrix, ConjugacyGroup, Letter,
    RLWord,
};
