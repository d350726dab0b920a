//! Torsion functors on Δᵖ and the simplicial group F^alg_•(A).

mod constraints;
mod extension;
mod functor;
mod group;
mod moore;

pub use constraints::{unit_flat, ConstraintSystem, SolutionLattice};
pub use extension::{Extender, LinearForm};
pub use functor::{proper_faces, FunctorEval, ModuleCtx, RawFunctor, TorsionFunctor};
pub use group::{falg_group, falg_system, FAlgElement, FAlgGroup, MAX_FALG_DEGREE};
pub use moore::{moore_homotopy, psi_of, MooreComplex};
