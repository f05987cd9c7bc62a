//! Disjoint ball coverings of superlevel sets and their verification.

pub mod family;
pub mod selection;
pub mod solve;
pub mod sunrise;
pub mod unimodal;
pub mod verify;

pub use family::{family_from_json, family_to_json, CoveringFamily, Side};
pub use selection::{covering_selection, superlevel_components};
pub use solve::{solve_average_equation, Boundary, Direction};
pub use sunrise::{sunrise_check, SunriseReport};
pub use unimodal::{is_unimodal, unimodal_covering};
pub use verify::{overlap_count, verify_covering, VerificationReport};
