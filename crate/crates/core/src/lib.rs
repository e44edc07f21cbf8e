//! Subresultants of `(x - alpha)^m` and `(x - beta)^n` over `Q` and `Z/pZ`
//! in a number of field operations linear in the degrees, with a
//! determinant-based oracle to check them against.

pub mod cli;
pub mod combinat;
pub mod error;
pub mod fastsubres;
pub mod field;
pub mod jacobi;
pub mod poly;
pub mod psres;
pub mod wire;

pub use error::{Error, Result};
pub use fastsubres::{
    bernstein_to_monomial, classify, cofactors, leading_coefficient_sd, sres_bernstein, sres_fast,
    Basis, CharCase, CofactorPair, SubresResult,
};
pub use field::{Field, FieldDescriptor, FieldValue, OpCounter};
pub use poly::{psres_oracle, sres_oracle, DensePoly, Degree, ProblemSpec};
pub use psres::{psres_all, psres_schedule, psres_single, PsresSchedule};
