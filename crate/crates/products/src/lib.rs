//! The two products on polylogarithm symbols: the shuffle of iterated-integral
//! words and the quasi-shuffle ("stuffle") of power-series indices.

mod generalized;
mod shuffle;
mod stuffle;

use thiserror::Error;

pub use generalized::{delannoy, enumerate_generalized_shuffles, GeneralizedShuffle, Slot};
pub use shuffle::{shuffle_lincomb_words, shuffle_product_li, shuffle_product_li_lincomb, shuffle_words, shuffle_words_raw};
pub use stuffle::{stuffle_lincomb, stuffle_merge_free, stuffle_power, stuffle_product};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
}

fn check_level(a: u32, b: u32) -> Result<(), ProductError> {
    if a == b {
        Ok(())
    } else {
        Err(ProductError::LevelMismatch(a, b))
    }
}
