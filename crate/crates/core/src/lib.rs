//! Exact solution sets of `α·sin x + β·cos x = γ` and the cyclic
//! quadrilaterals built from a right triangle `α² + β² = γ²`.
//!
//! * [`exactnum`]: big rationals, surds, Pythagorean triple parameters.
//! * [`trigsolve`]: classification and enumeration of the solution set.
//! * [`geometry`]: the exact quadrilateral ΓBΓ₂Γ₁.
//! * [`family`]: the parametric family with integral diameter and its Heron
//!   members.
//! * [`verify`]: coordinate-level oracles and reports.

pub mod exactnum;
pub mod family;
pub mod geometry;
pub mod trigsolve;
pub mod verify;

pub use exactnum::{rational, NumberError, PythTriple, Rational, Surd};
pub use family::{F1Member, F1Params, FamilyError, Generator, GeneratorForm};
pub use geometry::{construct_quad, GeometryError, Point2, QuadConstruction, Vertex};
pub use trigsolve::{classify, EquationCoeffs, Family, SolutionSet, SolveError};
pub use verify::{CheckStatus, VerificationReport};
