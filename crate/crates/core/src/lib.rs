//! Exact computation and verification of dually weighted Stirling-type numbers.

pub mod cli;
pub mod combinat;
pub mod error;
pub mod genfunc;
pub mod matrices;
pub mod oracles;
pub mod report;
pub mod ring;
pub mod stirling;
pub mod symfunc;
pub mod tableaux;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use ring::{Monomial, RingValue, Var};
pub use stirling::{Kind, StirlingTable};
pub use weights::{WeightPair, WeightSpec};
