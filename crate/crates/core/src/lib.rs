//! Exact computation of Brauer–Wall classes of Clifford superalgebras over
//! the reals and prime fields, and of the classification data of irreducible
//! representations for a catalog of quasi-reductive supergroups.

pub mod binomial;
pub mod brauer_wall;
pub mod classify;
pub mod clifford;
pub mod error;
pub mod fields;
pub mod oracle;
pub mod quadratic_forms;
pub mod scalar;
pub mod supergroups;

pub use brauer_wall::{real_table, BwClass, Sign};
pub use classify::{classify, split_route_class, ClassificationReport, Determined, Verdict};
pub use clifford::{semisimple_wall_class, wall_class};
pub use error::{Error, Result};
pub use fields::{brauer_mul, hilbert_symbol, BrauerClass, Field, SquareClass};
pub use quadratic_forms::{diagonalize_gram, DiagonalQuadraticForm};
pub use supergroups::{
    epsdelta_galois, galois_twist_chain, odd_reflection_step, AssumptionVerdict, EpsDeltaSequence, Family,
    GroupSpec, PairingForm, TwistResult, Weight, XflatVerdict,
};
