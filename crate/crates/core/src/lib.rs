//! Exact algebra for Whitehead torsion over cyclic groups and the
//! C₂-homology computations built around it.

pub mod abgroup;
pub mod cyclotomic;
pub mod error;
pub mod falg;
pub mod group_ring;
pub mod kapp;
pub mod lens;
pub mod matrix;
pub mod report;
pub mod simplicial;
pub mod torsion;

pub use abgroup::{FgAbGroup, InvolutiveAbelianGroup, Subgroup};
pub use cyclotomic::CyclotomicElement;
pub use error::{Error, Result};
pub use falg::{FAlgElement, FAlgGroup, MooreComplex, TorsionFunctor};
pub use group_ring::{GroupRingElement, OrientationCharacter, WhiteheadClass};
pub use lens::{LensSpace, RTorsion};
pub use matrix::{IntMatrix, SmithForm};
pub use report::{ReportDocument, Stage, StageStatus};
pub use simplicial::{Face, SubComplex};
pub use torsion::{HCobordismSymbol, ValueGroup};
