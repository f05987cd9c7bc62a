//! Exact intervals, measures and step functions.

pub mod interval;
pub mod intervalset;
pub mod json;
pub mod ops;
pub mod radon;
pub mod rational;
pub mod step;

pub use interval::{ExtReal, Interval};
pub use ops::{average, candidate_points, integral_of, measure_of, support_of};
pub use radon::{Atom, Measure};
pub use rational::{ExtendedNonneg, Rational};
pub use step::StepFunction;
