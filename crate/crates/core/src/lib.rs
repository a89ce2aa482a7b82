//! Hide binary secrets in the colors of a cover text's characters.
//!
//! - [`permcode`]: permutation rank and unrank over `n` symbols.
//! - [`radixcode`]: bit strings to base-`B` digit strings and back.
//! - [`lzw`]: three LZW variants and a size comparison.
//! - [`doc`]: colored documents and their markup and HTML forms.
//! - [`stego`]: palettes, embedding, extraction and capacity figures.
//! - [`cli`]: the `colorstego` command line.

pub mod cli;
pub mod doc;
pub mod error;
pub mod lzw;
pub mod permcode;
pub mod radixcode;
pub mod stego;

pub use error::{Error, Result};
