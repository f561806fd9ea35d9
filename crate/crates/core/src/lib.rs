//! Exact-arithmetic toolkit for complementary sequences.
//!
//! * [`laurent`]: Laurent polynomials over `Z` in one and two variables with
//!   the variable-inverting involution.
//! * [`seq`]: sequences, NPAF, Hall and `psi` polynomials, interleaving,
//!   complementarity and base-sequence certification.
//! * [`matrix`]: integer matrices, outer products, `psi_A(x, y)` and
//!   row concatenation.
//! * [`yang`]: Yang multiplication `BS(n+1,n) x BS(m+1,m) -> BS(m',m')`.
//! * [`search`]: exhaustive search for small base sequences.
//! * [`hadamard`]: T-sequences and Goethals-Seidel Hadamard matrices.
//! * [`sample`]: seeded random inputs for identity checks.
//! * [`cli`]: the `yangmul` command-line front end.

pub mod cli;
pub mod hadamard;
pub mod laurent;
pub mod matrix;
pub mod sample;
pub mod search;
pub mod seq;
pub mod textio;
pub mod yang;

pub use laurent::{Laurent, LaurentError, LaurentPoly1, LaurentPoly2};
pub use matrix::IntMat;
pub use seq::{bs_verify, BaseSeqQuad, CertError, CorrelationProfile, Seq};
pub use yang::{yang_compose, YangQuadMat};
