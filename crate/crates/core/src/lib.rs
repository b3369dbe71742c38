//! Tournaments, Hamilton cycles and random vertex subsets.
//!
//! A tournament is stored as a dense bit matrix ([`Tournament`]). On top of it:
//!
//! * [`hamilton`]: strong components, Hamilton cycles with checkable
//!   certificates, a Held–Karp oracle.
//! * [`generators`]: regular, transitive, random and extremal families.
//! * [`sampling`]: the probability that a p-random vertex subset spans a
//!   Hamiltonian tournament, estimated or computed exactly.
//! * [`structure`]: partition diagnostics for tournaments close to a
//!   directed cut.

pub mod bitset;
pub mod error;
pub mod format;
pub mod generators;
pub mod hamilton;
pub mod sampling;
pub mod structure;
pub mod tournament;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use format::{format_certificate, parse_certificate, parse_trn1, write_trn1};
pub use generators::ExtremalSpec;
pub use hamilton::{
    brute_force_hamiltonian, check_cycle, hamilton_cycle, is_hamiltonian, scc,
    HamiltonCertificate, SccDecomposition,
};
pub use sampling::{
    estimate_hamiltonian_probability, exact_hamiltonian_probability, theoretical_bound,
    BoundSpec, EstimateReport, SamplePlan,
};
pub use structure::{GoodnessReport, Partition};
pub use tournament::{
    induced, semidegrees, validate, SemidegreeProfile, Tournament, VertexSubset, MAX_ORDER,
};
