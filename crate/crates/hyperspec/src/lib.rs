//! Verification harness for the extremal orderings of unicyclic and
//! bicyclic uniform hypergraphs.
//!
//! [`verify`] ranks the named-family candidate pool for one `(k, m)` and
//! checks the ordering claims against it; [`oracle`] cross-checks the
//! structural facts by exhaustive enumeration; [`script`] applies edge-move
//! scripts.

pub mod oracle;
pub mod report;
pub mod script;
pub mod verify;

pub use report::{to_csv, ClaimCheck, ClaimStatus, Method, OrderingReport, RankedEntry};
pub use verify::{verify_bicyclic, verify_unicyclic, ORDER_TOL};
