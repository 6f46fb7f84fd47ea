//! Published tables: recomputation, rendering and verification against the
//! embedded reference values.

pub mod bounds;
pub mod catalog;
pub mod expected;
pub mod partition;
pub mod tables;
pub mod verify;

pub use bounds::lower_bounds;
pub use catalog::Catalog;
pub use expected::ExpectedDataset;
pub use partition::{partition_by_ones, PartitionRow};
pub use tables::{build_table, emit_table, emit_tables, EmitOptions, Format, Table, TableKind};
pub use verify::{verify_all, Check, Scope, VerifyReport};
