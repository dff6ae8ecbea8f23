//! Generation, counting and validation of monomino-domino coverings under
//! the tatami restriction: no four tiles meet at a point.
//!
//! - [`ksum`]: subsets of `{1..n}` with a given sum, in constant amortised
//!   time.
//! - [`square`]: `n x n` coverings with `n` monominoes, indexed by their
//!   count of vertical (or horizontal) dominoes.
//! - [`strip`]: coverings of the infinite strip as feature sequences.
//! - [`grid`]: concrete coverings, validation and rendering.
//! - [`oracle`]: brute-force enumeration for cross-checking.
//! - [`bench`]: operation counting for the generators.

pub mod bench;
pub mod error;
pub mod grid;
pub mod ksum;
pub mod oracle;
pub mod square;
pub mod strip;

pub use error::{Error, Result};
pub use grid::{Covering, TatamiReport, Tile, TileKind};
pub use ksum::{count_ksum, gen_ksum, init_c4, C4State, SubsetView};
pub use square::{count_vd, gen_vh, render_square, Side, VhElement, VhView};
pub use strip::{
    count_strip, feature_alphabet, gen_strip, Bond, Feature, FeatureKind, StripCovering,
};
