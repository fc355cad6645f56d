pub mod channels;
pub mod coherence;
pub mod error;
pub mod random;
pub mod reductions;
pub mod smallmat;
pub mod states;
pub mod tolerances;

pub use error::{Error, Result};
