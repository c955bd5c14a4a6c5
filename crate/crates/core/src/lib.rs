pub mod error;
pub mod spectral;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub mod first_order;
pub mod oracle;
pub mod potential;
pub mod transition;
pub mod second_order;
pub mod analysis;
pub mod fixture;
pub mod jsa;
pub mod scenario;
