//! File formats (Burmeister `.cxt`, fuzzy CSV, versioned JSON, Graphviz DOT)
//! and the `galois-factor` command line over [`galois_factor_core`].

pub mod cli;
pub mod cxt;
pub mod document;
pub mod error;
pub mod frame_spec;
pub mod fuzzy_csv;
pub mod grades;
pub mod render;
pub mod report;

pub use cli::{run, Outcome};
pub use document::{ContextDocument, SCHEMA};
pub use error::{CliError, Result};
