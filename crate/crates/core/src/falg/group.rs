//! The simplicial abelian group F^alg_•(A): p-simplices are torsion functors on
//! Δ^{p+1} vanishing on ⟨1,…,p+1⟩ and satisfying every face-horn duality.

use num_bigint::BigInt;
use serde_json::json;

use super::constraints::{ConstraintSystem, SolutionLattice};
use super::functor::TorsionFunctor;
use crate::abgroup::{FgAbGroup, InvolutiveAbelianGroup};
use crate::error::{Error, Result};
use crate::simplicial::Face;

/// Largest simplicial degree for which F^alg_p is built directly.
pub const MAX_FALG_DEGREE: usize = 3;

/// A p-simplex of F^alg_•(A).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FAlgElement {
    functor: TorsionFunctor,
}

impl FAlgElement {
    /// Checks the vanishing condition and all face-horn dualities.
    pub fn new(functor: TorsionFunctor) -> Result<Self> {
        if functor.ambient() == 0 {
            return Err(Error::Dimension("F^alg needs ambient dimension at least 1".into()));
        }
        let x = Self { functor };
        if !x.vanishes_on_back_face() {
            return Err(Error::Hypothesis("τ(L, K) ≠ 0 for some K ⊆ L ⊆ <1…p+1>".into()));
        }
        if !x.functor.satisfies_all_dualities()? {
            return Err(Error::Hypothesis("face-horn duality fails".into()));
        }
        Ok(x)
    }

    pub(crate) fn new_unchecked(functor: TorsionFunctor) -> Self {
        Self { functor }
    }

    fn vanishes_on_back_face(&self) -> bool {
        let p = self.functor.ambient();
        let back = Face::top(p).boundary(0).expect("ambient ≥ 1");
        let ctx = super::functor::ModuleCtx::new(self.functor.target());
        let base = self.functor.face_value(back);
        crate::simplicial::all_faces(p)
            .filter(|f| back.contains(*f))
            .all(|f| ctx.eq(self.functor.face_value(f), base))
    }

    /// Simplicial degree `p` (the functor lives on Δ^{p+1}).
    pub fn degree(&self) -> usize {
        self.functor.ambient() - 1
    }

    pub fn functor(&self) -> &TorsionFunctor {
        &self.functor
    }

    pub fn target(&self) -> &InvolutiveAbelianGroup {
        self.functor.target()
    }

    /// `δᵢ = ∂^{Fun}_{i+1}`.
    pub fn face(&self, i: usize) -> Result<Self> {
        let p = self.degree();
        if p == 0 || i > p {
            return Err(Error::IndexOutOfRange { index: i, max: p });
        }
        Ok(Self::new_unchecked(self.functor.face_map(i + 1)?))
    }

    /// `sᵢ = s^□_{i+1}`.
    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        let p = self.degree();
        if i > p {
            return Err(Error::IndexOutOfRange { index: i, max: p });
        }
        Ok(Self::new_unchecked(self.functor.box_degeneracy(i + 1)?))
    }

    /// `ψ(τ) = τ(Δ^{p+1}, ⟨0⟩)`.
    pub fn psi(&self) -> Vec<BigInt> {
        self.functor.face_value(Face::vertex(0)).to_vec()
    }

    /// Equality as elements of the group (values compared modulo relations).
    pub fn same_element(&self, other: &Self) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let ctx = super::functor::ModuleCtx::new(self.target());
        self.functor
            .face_values()
            .iter()
            .all(|(f, v)| ctx.eq(v, other.functor.face_value(*f)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::new_unchecked(self.functor.add(&other.functor)?))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.functor.to_json();
        v["p"] = json!(self.degree());
        v
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let mut v = v.clone();
        let p = v["p"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing degree p".into()))?;
        v["p"] = json!(p + 1);
        Self::new(TorsionFunctor::from_json(&v)?)
    }
}

/// F^alg_p(A) as a solved constraint system.
#[derive(Clone, Debug)]
pub struct FAlgGroup {
    degree: usize,
    solution: SolutionLattice,
}

impl FAlgGroup {
    pub fn new(a: &InvolutiveAbelianGroup, p: usize) -> Result<Self> {
        if p > MAX_FALG_DEGREE {
            return Err(Error::CapExceeded {
                what: "simplicial degree",
                value: p,
                max: MAX_FALG_DEGREE,
            });
        }
        Ok(Self {
            degree: p,
            solution: falg_system(a, p)?.solve()?,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn solution(&self) -> &SolutionLattice {
        &self.solution
    }

    /// The target in canonical coordinates; elements are expressed in it.
    pub fn target(&self) -> &InvolutiveAbelianGroup {
        self.solution.target()
    }

    pub fn group(&self) -> FgAbGroup {
        self.solution.group()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.solution.order()
    }

    pub fn elements(&self) -> Result<Vec<FAlgElement>> {
        Ok(self
            .solution
            .elements()?
            .into_iter()
            .map(FAlgElement::new_unchecked)
            .collect())
    }

    pub fn generators(&self) -> Result<Vec<FAlgElement>> {
        Ok(self
            .solution
            .generators()?
            .into_iter()
            .map(FAlgElement::new_unchecked)
            .collect())
    }

    pub fn contains(&self, x: &FAlgElement) -> bool {
        x.degree() == self.degree && self.solution.contains(x.functor())
    }
}

/// Constraints cutting out F^alg_p(A) inside the face values on Δ^{p+1}.
pub fn falg_system(a: &InvolutiveAbelianGroup, p: usize) -> Result<ConstraintSystem> {
    let mut sys = ConstraintSystem::new(p + 1, a)?;
    sys.add_vanishing_on_back_face()?;
    sys.add_all_dualities(true)?;
    Ok(sys)
}

/// F^alg_p(A) as an abstract group.
pub fn falg_group(a: &InvolutiveAbelianGroup, p: usize) -> Result<FAlgGroup> {
    FAlgGroup::new(a, p)
}
