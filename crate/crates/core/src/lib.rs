//! Distance spectra, distance energy and the distance spectral gap of simple
//! graphs, together with subdivision/central join constructions, closed-form
//! join spectra, equienergetic family generators and a battery of
//! eigenvalue, gap and energy inequalities checked against brute force.
//!
//! ```
//! use dspectra::{graph::Graph, spectra};
//!
//! let k4 = Graph::complete(4).unwrap();
//! assert!((spectra::d_energy(&k4).unwrap() - 6.0).abs() < 1e-9);
//! assert_eq!(spectra::s_d(&k4).unwrap(), 12);
//! ```

pub mod bounds;
pub mod closed_forms;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod ops;
pub mod serde_util;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{DistMatrix, Graph, IncidenceMatrix, StandardGraph};
pub use linalg::{CharPolyExact, SquareMatrix};
pub use spectra::{QuotientMatrix, Spectrum};
