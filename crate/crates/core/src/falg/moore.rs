//! Normalized Moore complex of F^alg_•(A) and its homotopy groups.

use num_bigint::BigInt;

use super::constraints::{ConstraintSystem, SolutionLattice};
use super::functor::TorsionFunctor;
use super::group::{falg_system, MAX_FALG_DEGREE};
use crate::abgroup::{FgAbGroup, InvolutiveAbelianGroup};
use crate::error::{Error, Result};
use crate::matrix::{cokernel, IntMatrix, Subquotient};
use crate::simplicial::Face;

/// `N_n = ⋂_{i≥1} ker δᵢ ⊆ F^alg_n(A)`.
fn normalized_system(a: &InvolutiveAbelianGroup, n: usize, cycles: bool) -> Result<ConstraintSystem> {
    let mut sys = falg_system(a, n)?;
    for j in 2..=n + 1 {
        sys.add_face_kernel(j)?;
    }
    if cycles && n >= 1 {
        sys.add_face_kernel(1)?;
    }
    Ok(sys)
}

/// The Moore complex truncated at degree `top + 1`.
#[derive(Clone, Debug)]
pub struct MooreComplex {
    module: InvolutiveAbelianGroup,
    chains: Vec<SolutionLattice>,
    cycles: Vec<SolutionLattice>,
}

impl MooreComplex {
    /// Builds `N_0, …, N_{top+1}` and `Z_0, …, Z_top`.
    pub fn new(a: &InvolutiveAbelianGroup, top: usize) -> Result<Self> {
        if top > MAX_FALG_DEGREE {
            return Err(Error::CapExceeded {
                what: "homotopy degree",
                value: top,
                max: MAX_FALG_DEGREE,
            });
        }
        let chains = (0..=top + 1)
            .map(|n| normalized_system(a, n, false)?.solve())
            .collect::<Result<Vec<_>>>()?;
        let cycles = (0..=top)
            .map(|n| normalized_system(a, n, true)?.solve())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            module: a.clone(),
            chains,
            cycles,
        })
    }

    pub fn top(&self) -> usize {
        self.cycles.len() - 1
    }

    pub fn module(&self) -> &InvolutiveAbelianGroup {
        &self.module
    }

    /// The target in canonical coordinates, shared by every degree.
    pub fn target(&self) -> &InvolutiveAbelianGroup {
        self.chains[0].target()
    }

    pub fn chains(&self, n: usize) -> &SolutionLattice {
        &self.chains[n]
    }

    pub fn cycles(&self, n: usize) -> &SolutionLattice {
        &self.cycles[n]
    }

    fn rank(&self) -> usize {
        self.target().generators()
    }

    /// `δ₀` on flat face-value vectors, degree `n+1 → n`.
    pub fn differential(&self, n: usize, x: &[BigInt]) -> Result<Vec<BigInt>> {
        let tf = TorsionFunctor::from_flat(n + 2, self.target(), x)?;
        Ok(tf.face_map(1)?.to_flat())
    }

    /// Matrix of `δ₀` with respect to flat coordinates, degree `n+1 → n`.
    pub fn differential_matrix(&self, n: usize) -> Result<IntMatrix> {
        let k = self.rank();
        let dim = ((1usize << (n + 3)) - 2) * k;
        let cols = (0..dim)
            .map(|i| {
                let mut e = vec![BigInt::from(0); dim];
                e[i] = BigInt::from(1);
                self.differential(n, &e)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix::from_columns(((1usize << (n + 2)) - 2) * k, &cols))
    }

    /// `δ₀(N_{n+1})` together with the relations of `N_n`.
    fn boundaries(&self, n: usize) -> Result<IntMatrix> {
        let images = self.chains[n + 1]
            .numerator()
            .columns()
            .iter()
            .map(|c| self.differential(n, c))
            .collect::<Result<Vec<_>>>()?;
        let rel = self.chains[n].relations();
        IntMatrix::from_columns(rel.rows(), &images).hstack(rel)
    }

    /// `π_n = Z_n / δ₀(N_{n+1})`.
    pub fn homotopy(&self, n: usize) -> Result<Subquotient> {
        if n > self.top() {
            return Err(Error::IndexOutOfRange { index: n, max: self.top() });
        }
        Subquotient::new(self.cycles[n].numerator(), &self.boundaries(n)?)
    }

    pub fn homotopy_group(&self, n: usize) -> Result<FgAbGroup> {
        Ok(self.homotopy(n)?.invariant_factors())
    }

    /// `ψ(x) = τ(Δ^{n+1}, ⟨0⟩)`, read off the flat vector.
    pub fn psi(&self, x: &[BigInt]) -> Vec<BigInt> {
        x[..self.rank()].to_vec()
    }

    /// `ψ(δ₀x) = (1 − (−1)ⁿ t)ψ(x)` for every `x ∈ N_{n+1}`.
    pub fn psi_is_chain_map(&self, n: usize) -> Result<bool> {
        let tgt = self.target();
        let s = BigInt::from(super::functor::sign(n + 1));
        for c in self.chains[n + 1].numerator().columns() {
            let px = self.psi(&c);
            let lhs = self.psi(&self.differential(n, &c)?);
            let tx = tgt.apply_involution(&px);
            let rhs: Vec<BigInt> = px.iter().zip(&tx).map(|(a, b)| a + &s * b).collect();
            let diff: Vec<BigInt> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            if !tgt.is_zero_element(&diff) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `ψ: N_n → A` is onto and `N_n ≅ A`, hence bijective.
    pub fn psi_is_bijective(&self, n: usize) -> Result<bool> {
        let tgt = self.target();
        let k = self.rank();
        let images: Vec<Vec<BigInt>> = self.chains[n]
            .numerator()
            .columns()
            .iter()
            .map(|c| self.psi(c))
            .collect();
        let span = IntMatrix::from_columns(k, &images).hstack(tgt.relations())?;
        let onto = cokernel(&span).is_trivial();
        Ok(onto && self.chains[n].group() == tgt.underlying_group())
    }

    /// `δ₀ ∘ δ₀ = 0` on `N_{n+2}`.
    pub fn differential_squares_to_zero(&self, n: usize) -> Result<bool> {
        if n + 2 >= self.chains.len() {
            return Err(Error::IndexOutOfRange { index: n + 2, max: self.chains.len() - 1 });
        }
        for c in self.chains[n + 2].numerator().columns() {
            let dd = self.differential(n, &self.differential(n + 1, &c)?)?;
            if self.chains[n].quotient().is_zero_class(&dd) != Some(true) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `π_n F^alg(A)` from the Moore complex.
pub fn moore_homotopy(a: &InvolutiveAbelianGroup, n: usize) -> Result<FgAbGroup> {
    MooreComplex::new(a, n)?.homotopy_group(n)
}

/// Value of `ψ` on a simplex given by face values.
pub fn psi_of(tf: &TorsionFunctor) -> Vec<BigInt> {
    tf.face_value(Face::vertex(0)).to_vec()
}
