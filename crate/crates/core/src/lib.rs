//! Perfect shuffles as oriented permutations.
//!
//! * [`deck`]: oriented cards, decks, permutations and the stay-stack
//!   correspondence between oriented `2n` decks and face-down `4n` decks.
//! * [`shuffle`]: faro, flip, horseshoe, milk and Monge shuffles, words over
//!   them, periods and binary routing of the top card.
//! * [`group`]: exact orders of the groups the in/out shuffles generate,
//!   with a brute-force enumeration oracle and the closed-form case tables.
//! * [`elmsley`]: every shortest in/out word moving a card between two
//!   positions.
//! * [`power2`]: special orderings of `2^k` decks and the end-card
//!   predictor.
//!
//! Enumeration-heavy paths use rayon when the `parallel` feature (on by
//! default) is enabled; results are identical either way.

pub mod deck;
pub mod elmsley;
pub mod error;
pub mod group;
pub mod power2;
pub mod shuffle;

pub use deck::{
    apply_oriented, contract_staystack, expand_staystack, identity_deck, Deck, OrientedCard,
    OrientedPermutation, Permutation,
};
pub use error::{Error, Result};
pub use shuffle::{apply_word, element_order, Family, Move, ShuffleKind, ShuffleWord, Side};
