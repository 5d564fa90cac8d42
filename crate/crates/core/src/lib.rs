pub mod asymptotics;
pub mod bounds;
pub mod clique;
pub mod config;
pub mod constant_weight;
pub mod constructions;
pub mod error;
pub mod levenshtein;
pub mod oracle;
pub mod selfcheck;

pub use config::Limits;
pub use error::{Error, Result};
