//! Exact combinatorics of t-core partitions and their images in sums of
//! squares and binary quadratic forms.
//!
//! The crate provides:
//!
//! - partitions, hook lengths, conjugation, and t-core predicates, with a
//!   brute-force enumeration oracle for small n ([`partition`]);
//! - structure numbers and the compact abacus of a t-core ([`abacus`]);
//! - lattice codings with a direct enumerator of t-cores by size
//!   ([`ncoding`]);
//! - the affine and doubled maps onto constrained sums-of-squares solution
//!   sets, the constrained representation enumerator, and canonical forms
//!   of solution vectors under reordering and sign changes ([`squares`]);
//! - family classifications of self-conjugate 4- and 6-cores with their
//!   two- and three-square representations, and cross-family counting
//!   checks ([`families`]);
//! - binary quadratic form reduction, class counting, and the
//!   three-squares-to-forms correspondence ([`forms`]);
//! - the explicit two-to-one map from 4-cores of 7n+2 onto self-conjugate
//!   7-cores of 8n+1 ([`map47`]);
//! - verification sweeps emitting machine-readable records ([`verify`],
//!   [`report`]).
//!
//! Everything is exact integer arithmetic; all claims are checked by
//! exhaustive enumeration at desk scale. With the default `parallel`
//! feature the enumerator and the sweeps fan out over rayon; disabling it
//! gives a fully sequential build with identical output.

pub mod abacus;
pub mod error;
pub mod families;
pub mod forms;
pub mod map47;
pub mod ncoding;
pub(crate) mod parallel;
pub mod partition;
pub mod report;
pub mod squares;
pub mod verify;

pub use abacus::{abacus_from_partition, normalize_abacus, partition_from_abacus, Abacus};
pub use error::{Error, Result};
pub use ncoding::{
    enumerate_sc_t_cores_lattice, enumerate_t_cores_lattice, ncoding_from_partition,
    size_from_ncoding, NCoding,
};
pub use partition::{enumerate_partitions, Partition, ORACLE_CAP};
pub use report::ReportRecord;
