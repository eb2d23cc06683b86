//! Sidon sequences over finite abelian groups, doubly periodic distinct
//! difference configurations in `Z^2`, and the folding maps between them.
//!
//! ```
//! use sidonfold::ddc::{construct_welch, unfold_to_sidon, Anchor};
//! use sidonfold::folding::Direction;
//!
//! let welch = construct_welch(7, 3)?;
//! let s = unfold_to_sidon(&welch, Direction::new(1, 1)?, Anchor::LowerLeft)?;
//! assert_eq!(s.residues(), Some(vec![0, 8, 10, 11, 33, 37]));
//! assert!(s.is_sidon());
//! # Ok::<(), sidonfold::Error>(())
//! ```

pub mod arith;
pub mod cli;
pub mod ddc;
pub mod error;
pub mod finite_field;
pub mod folding;
pub mod group;
pub mod lattice;
mod search;
pub mod sidon;

pub use error::{Error, Result};
