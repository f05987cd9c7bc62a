//! Constants, worked examples and numerical experiments on the maximal ratio.

pub mod constants;
pub mod examples;
pub mod holder;
pub mod report;
pub mod search;

pub use constants::{besicovitch, constants, hadwiger_strict, lerner, BoundConstants};
pub use examples::{example_discrete_atoms, example_one_atom, reproduce_discrete, reproduce_one_atom};
pub use holder::{holder_experiment, HolderRow};
pub use search::{search_min_ratio, SearchConfig, SearchResult};
