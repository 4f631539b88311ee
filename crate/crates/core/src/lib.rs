//! Exact integer arithmetic for the Farey graph and its paths, and for
//! the SL2-tilings and friezes they classify.
//!
//! The vertex set is the extended rationals: reduced fractions a/b
//! together with inf = 1/0. Two vertices are joined when
//! |ad - bc| = 1; paths in this graph carry integer lifts whose
//! consecutive determinants are +1, and the resulting machinery -
//! itineraries, window transforms, tail limits - gives exact,
//! tolerance-free answers about tilings, friezes, triangulated
//! polygons and duals.
//!
//! Everything here works with arbitrary-precision integers; no
//! floating point enters any decision. The only floats in the crate
//! are in [`render`], for drawing.

pub mod apeirogon;
pub mod circular;
pub mod error;
pub mod frieze;
pub mod io;
pub mod limits;
pub mod matrix;
pub mod path;
pub mod polygon;
pub mod rational;
pub mod render;
pub mod tiling;
pub mod words;

pub use error::{Error, Result};
pub use matrix::Mat2;
pub use path::{FareyPath, ItinerarySpec, Lift};
pub use rational::ExtRational;
pub use tiling::{PathPair, TilingWindow};
