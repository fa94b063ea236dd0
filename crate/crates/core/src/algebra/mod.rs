//! Exact scalar, polynomial, rational-function and power-series
//! arithmetic. Everything downstream is built on this layer.

pub mod cyclotomic;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod series;

pub use cyclotomic::{euler_phi, parse_cyclotomic, parse_rational, Cyclotomic};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use series::{MultiSeries, PowerSeries};
