//! Self-dual cyclic and negacyclic codes of length p^s over the chain ring
//! F_{p^m} + uF_{p^m} (u² = 0), p odd.
//!
//! The reciprocal map b(x) ↦ x^{-1} b(x^{-1}) on F_{p^m}[x]/((x−1)^l) is the
//! F_p-matrix G_l in the (x−1)-adic basis, where G_{p^λ} is a Kronecker power
//! of G_p. Its fixed points have an explicit basis (columns of G_l + I_l),
//! which turns into an explicit list of every self-dual code.
//!
//! Modules, bottom up:
//!
//! * [`fieldcore`]: F_p and F_{p^m} arithmetic.
//! * [`binomial`]: binomials mod p (Lucas) and entries of G_{p^λ}.
//! * [`gmatrix`]: matrices over F_p, G_{p^λ}, G_l, ranks, Υ columns.
//! * [`omega`]: the reciprocal map and its fixed-point sets, with brute-force oracles.
//! * [`chainring`]: R = F_{p^m} + uF_{p^m}, ideals of R[x]/(x^N ∓ 1), self-duality checks.
//! * [`enumerator`]: case classification, code construction, streaming, counting.
//! * [`export`]: JSON and CSV formats.

pub mod binomial;
pub mod chainring;
pub mod enumerator;
pub mod error;
pub mod export;
pub mod fieldcore;
pub mod gmatrix;
pub mod omega;

pub use chainring::{ChainRing, RElem, RIdealGens, RVector, RingSign};
pub use enumerator::{
    build_code, classify_cases, count_self_dual, enumerate_codes, to_negacyclic, CaseDescriptor, CaseTag, CodeSpec,
    CodeStream,
};
pub use error::{Error, Result};
pub use fieldcore::{find_irreducible, FieldSpec, FqElem};
pub use gmatrix::{MatrixFp, UpsilonVec};
pub use omega::{SBasis, XPoly};
