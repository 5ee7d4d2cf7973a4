//! Type `A_n` root system and Weyl group combinatorics.
//!
//! Weyl group elements act as permutations of `1..=n+1`; reducedness is
//! inversion counting. `R(w0)` is the braid-move closure of a seed word.

mod quiver;
mod root;
mod word;

pub use quiver::{adapted_quiver, adapted_word, commutation_class, is_adapted, EdgeDir, Quiver};
pub use root::{cartan_pairing, Root};
pub use word::{
    apply_braid_move, braid_path, chevalley_dual, num_positive_roots, reduced_words_w0,
    reduced_words_w0_capped, roots_of_word, BraidMove, Word, DEFAULT_RANK_CAP,
};
