//! Exact evaluation of the uncentered and one-sided maximal functions.

pub mod arrangement;
pub mod evaluate;
pub mod levelset;
pub mod oracle;
pub mod profile;

pub use evaluate::{
    evaluate_on_mesh, maximal_at, maximal_value, one_sided_minus_at, one_sided_plus_at, restricted_sup, BallShape,
    EvaluatedMaximal, MaximalKind, MaximalValue,
};
pub use levelset::{auto_window, function_level_set, maximal_level_set, superlevel_set, LevelKind};
pub use oracle::{grid_oracle_at, GridOracle};
