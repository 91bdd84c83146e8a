//! Auslander-Reiten theory for bound quiver algebras over prime fields.

pub mod algebra;
pub mod artheory;
pub mod decompose;
pub mod error;
pub mod field;
pub mod functorq;
pub mod gorenstein;
pub mod homological;
pub mod io;
pub mod matrix;
pub mod morphcat;
pub mod module;
pub mod poly;
pub mod stabfun;
pub mod suites;

pub use algebra::{build_algebra, t2, Algebra, AlgebraSpec, Arrow, Provenance, Quiver, Relation};
pub use error::{Error, Result};
pub use field::FElem;
pub use matrix::{FMatrix, Rref};
pub use module::{hom_basis, FDModule, HomSpace, ModuleMap};
pub use artheory::{ARArrow, ARNode, ARQuiver, Budget, IndecUniverse, NodeFlags, TauLink};
pub use functorq::FunctorQuivers;
pub use gorenstein::{GprjReport, Verdict};
pub use homological::{ExtGroup, Ses};
pub use morphcat::{MorphObj, MorphSes, SxQuivers};
pub use stabfun::AddXContext;
