pub mod covering;
pub mod error;
pub mod lab;
pub mod maximal;
pub mod measure;
pub mod norms;

pub use error::{LabError, Result};
