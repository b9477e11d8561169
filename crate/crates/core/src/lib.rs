//! Exact computation of Ext-algebras between exponential functors through
//! bar constructions of weighted dg-algebras.

pub mod algebra;
pub mod bar;
pub mod homology;
pub mod koszul;
pub mod laws;
pub mod predict;
pub mod bidegree;
pub mod error;
pub mod extract;
pub mod ring;
pub mod words;

pub use bidegree::Bidegree;
pub use error::{Error, Result};
pub use ring::{Prime, Ring};
