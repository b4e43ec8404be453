//! Batch pipeline over the reflexive-polytope kernel: vertex-file parsing,
//! per-polytope records, classification and table emission. The `polymirror`
//! binary is a thin wrapper over this library.

pub mod batch;
pub mod error;
pub mod parse;
pub mod report;
pub mod table;

pub use batch::{
    batch_compute, classify, compute_record, BatchEntry, BatchOptions, PolytopeRecord,
};
pub use error::{CliError, Result};
pub use parse::{parse_vertex_file, write_vertex_block};
pub use table::{emit_table, TableFormat, TableKind};
