pub mod chevalley;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod linkage;
pub mod notation;
pub mod omega;
pub mod parabolic;
pub mod rational;
pub mod report;
pub mod roots;

pub use error::{Error, Result};
pub use rational::Q;
pub use roots::{Family, RootSystem, Weight};
