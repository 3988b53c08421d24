//! Reducibility laboratory for omega-regular sets and finite-range function
//! automata: Wadge, Lipschitz, pair and level-pair reduction games with
//! extracted finite-memory witnesses, the canonical difference-hierarchy
//! catalog, and the symbolic derivative pipeline that classifies functions
//! by rank and sided type. The two pipelines decide the same relation and
//! the selfcheck suite certifies that on every build.

pub mod automata;
pub mod bourgain;
pub mod error;
pub mod funcatalog;
pub mod games;
pub mod rational;
pub mod realfun;
pub mod sampling;
pub mod selfcheck;
pub mod wadge;

pub use error::{Error, Result};
pub use rational::Rat;
