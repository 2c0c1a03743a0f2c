//! Spectral radii of k-uniform hypergraphs through their adjacency tensors.
//!
//! The crate is organised around a handful of value types:
//!
//! - [`UniformHypergraph`]: a simple k-uniform hypergraph whose vertex set is
//!   the union of its edges.
//! - [`Multigraph`]: a loopless multigraph, the source of power hypergraphs.
//! - [`IntPolynomial`]: exact integer polynomials for characteristic
//!   polynomials and their largest roots.
//! - [`WeightedIncidenceMatrix`]: weights on vertex/edge incidences used as
//!   α-normal and α-subnormal certificates.
//!
//! Radii of arbitrary connected hypergraphs come from [`tensor::spectral_radius`],
//! a shifted power iteration that returns a certified bracket.

pub mod certificate;
pub mod error;
pub mod families;
pub mod hypergraph;
pub mod moves;
pub mod multigraph;
pub mod poly;
pub mod tensor;

pub use certificate::{
    build_certificate, check, check_consistency, Bound, CertificateTag, NormalityCertificate,
    Verdict, WeightedIncidenceMatrix,
};
pub use error::{Error, Result};
pub use families::{FamilySpec, FamilyTag, Generated};
pub use hypergraph::{CanonicalForm, StructureReport, UniformHypergraph, Violation};
pub use moves::{EdgeMove, Moved};
pub use multigraph::{ClosedForm, Multigraph};
pub use poly::IntPolynomial;
pub use tensor::SpectralEstimate;
