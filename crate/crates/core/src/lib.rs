//! Exact computations with 2-roots of simply laced Y-shaped and path Weyl
//! groups: the canonical basis of the codimension-one submodule of the
//! symmetric square, sign-coherent expansions, orbits, highest 2-roots,
//! invariant forms and kernels of the orbit representations.
//!
//! All arithmetic is exact. Linear algebra is generic over [`Scalar`] and
//! [`Field`]; the aliases below fix the types used by the engine.

pub mod action;
pub mod basis;
pub mod diagram;
pub mod error;
pub mod forms;
pub mod group;
pub mod linalg;
pub mod numbering;
pub mod orbits;
pub mod roots;
pub mod scalar;
pub mod symsq;

pub use action::{ActionCase, BasisAction};
pub use basis::{BasisElement, CanonicalBasis, Sign};
pub use diagram::{CartanMatrix, Diagram, DiagramKind, FiniteType, HGraph, Restriction, TypeClass};
pub use error::{Error, Result};
pub use linalg::{Echelon, Matrix};
pub use numbering::{EpsSign, EpsilonRoot, Label, Numbering};
pub use orbits::{Orbit, OrbitTable, RootPair};
pub use roots::{ElementaryKind, ElementaryRoot, Root};
pub use scalar::{Field, Fp, Halve, Scalar};
pub use symsq::{components, SymSquare, TwoRoot};

pub type Rational = num_rational::BigRational;
pub type QMatrix = Matrix<Rational>;
pub type ZMatrix = Matrix<i64>;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
