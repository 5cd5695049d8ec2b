//! Fibers, Graver bases and Markov bases of toric lattices of monomial
//! curves and their higher Lawrence liftings.

pub mod budget;
pub mod configuration;
pub mod error;
pub mod fibers;
pub mod generators;
pub mod graver;
pub mod intcore;
pub mod io;
pub mod lawrence;
pub mod markov;
pub mod paperlab;

pub use budget::Budget;
pub use configuration::{ConfigKind, Configuration, LatticeBasis};
pub use error::{Error, Result};
pub use intcore::{IntMat, IntVec, Move};
