//! Torsion functors on contractible subcomplexes of Δᵖ, stored by their face
//! values `f(σ) = τ(Δᵖ, σ)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::extension::{Extender, LinearForm};
use crate::abgroup::InvolutiveAbelianGroup;
use crate::error::{Error, Result};
use crate::matrix::Solver;
use crate::simplicial::{all_faces, enumerate_contractible_subcomplexes, Face, SubComplex, MAX_AMBIENT};

/// A module together with a cached membership test for its relation lattice.
#[derive(Clone, Debug)]
pub struct ModuleCtx {
    module: InvolutiveAbelianGroup,
    solver: Solver,
}

impl ModuleCtx {
    pub fn new(module: &InvolutiveAbelianGroup) -> Self {
        Self {
            module: module.clone(),
            solver: Solver::new(module.relations()),
        }
    }

    pub fn module(&self) -> &InvolutiveAbelianGroup {
        &self.module
    }

    pub fn rank(&self) -> usize {
        self.module.generators()
    }

    pub fn is_zero(&self, x: &[BigInt]) -> bool {
        x.iter().all(Zero::is_zero) || self.solver.solve(x).is_some()
    }

    pub fn eq(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let d: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero(&d)
    }

    pub fn act(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.module.apply_involution(x)
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.rank()]
    }
}

pub(crate) fn add(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub(crate) fn sub(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub(crate) fn neg(x: &[BigInt]) -> Vec<BigInt> {
    x.iter().map(|a| -a).collect()
}

pub(crate) fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// An element of Fun^□(SubComp_p, A), stored by face values with the top face at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionFunctor {
    p: usize,
    target: InvolutiveAbelianGroup,
    values: Vec<Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
struct FunctorJson {
    p: usize,
    target: InvolutiveAbelianGroup,
    face_values: BTreeMap<String, Vec<String>>,
}

impl TorsionFunctor {
    /// `ι_!` of face data. Missing faces default to 0; the top face must be 0.
    pub fn new(p: usize, target: &InvolutiveAbelianGroup, face_values: &BTreeMap<Face, Vec<BigInt>>) -> Result<Self> {
        if p > MAX_AMBIENT {
            return Err(Error::CapExceeded {
                what: "ambient dimension",
                value: p,
                max: MAX_AMBIENT,
            });
        }
        let g = target.generators();
        let mut values = vec![vec![BigInt::zero(); g]; 1 << (p + 1)];
        for (f, v) in face_values {
            if f.max_vertex() > p {
                return Err(Error::InvalidSubComplex(format!("face {f} not in Δ^{p}")));
            }
            if v.len() != g {
                return Err(Error::CoefficientLength { expected: g, got: v.len() });
            }
            values[f.mask() as usize] = v.clone();
        }
        let ctx = ModuleCtx::new(target);
        if !ctx.is_zero(&values[Face::top(p).mask() as usize]) {
            return Err(Error::Hypothesis("value on the top face must be 0".into()));
        }
        values[Face::top(p).mask() as usize] = vec![BigInt::zero(); g];
        Ok(Self {
            p,
            target: target.clone(),
            values,
        })
    }

    pub fn zero(p: usize, target: &InvolutiveAbelianGroup) -> Self {
        Self::new(p, target, &BTreeMap::new()).expect("zero data is valid")
    }

    /// Builds from a flat vector laid out as `[f(face 1) | f(face 2) | …]` over
    /// the proper faces in mask order.
    pub fn from_flat(p: usize, target: &InvolutiveAbelianGroup, flat: &[BigInt]) -> Result<Self> {
        let g = target.generators();
        let faces: Vec<Face> = proper_faces(p).collect();
        if flat.len() != faces.len() * g {
            return Err(Error::CoefficientLength {
                expected: faces.len() * g,
                got: flat.len(),
            });
        }
        let map = faces
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, flat[i * g..(i + 1) * g].to_vec()))
            .collect();
        Self::new(p, target, &map)
    }

    pub fn to_flat(&self) -> Vec<BigInt> {
        proper_faces(self.p)
            .flat_map(|f| self.values[f.mask() as usize].clone())
            .collect()
    }

    pub fn ambient(&self) -> usize {
        self.p
    }

    pub fn target(&self) -> &InvolutiveAbelianGroup {
        &self.target
    }

    pub fn face_value(&self, f: Face) -> &[BigInt] {
        &self.values[f.mask() as usize]
    }

    pub fn face_values(&self) -> BTreeMap<Face, Vec<BigInt>> {
        all_faces(self.p).map(|f| (f, self.face_value(f).to_vec())).collect()
    }

    pub fn evaluator(&self) -> FunctorEval<'_> {
        FunctorEval {
            tf: self,
            ext: Extender::new(self.p),
            ctx: ModuleCtx::new(&self.target),
        }
    }

    /// Evaluates a linear form in the face values.
    pub fn apply_form(&self, form: &LinearForm) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.target.generators()];
        for (m, &c) in form.iter().enumerate() {
            if c == 0 || m == 0 {
                continue;
            }
            for (o, v) in out.iter_mut().zip(&self.values[m]) {
                *o += v * c;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::AmbientMismatch(self.p, other.p));
        }
        Ok(Self {
            p: self.p,
            target: self.target.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| add(a, b)).collect(),
        })
    }

    /// `∂ⱼ^{Fun}`: restriction along the coface `dʲ: Δ^{p−1} → Δᵖ`.
    pub fn face_map(&self, j: usize) -> Result<Self> {
        if self.p == 0 || j > self.p {
            return Err(Error::IndexOutOfRange { index: j, max: self.p });
        }
        let base = self.face_value(Face::top(self.p).boundary(j).expect("p ≥ 1")).to_vec();
        let map = all_faces(self.p - 1)
            .map(|f| (f, sub(self.face_value(f.coface(j)), &base)))
            .collect();
        Self::new(self.p - 1, &self.target, &map)
    }

    /// `s^□_j = ι_! ∘ Fun(sʲ, A) ∘ ι*`: pull face values back along the codegeneracy.
    pub fn box_degeneracy(&self, j: usize) -> Result<Self> {
        if j > self.p {
            return Err(Error::IndexOutOfRange { index: j, max: self.p });
        }
        let map = all_faces(self.p + 1)
            .map(|f| (f, self.face_value(f.codegeneracy(j)).to_vec()))
            .collect();
        Self::new(self.p + 1, &self.target, &map)
    }

    /// Values on every contractible subcomplex (`p ≤ 3`).
    pub fn to_raw(&self) -> Result<RawFunctor> {
        let mut ev = self.evaluator();
        let mut values = BTreeMap::new();
        for k in enumerate_contractible_subcomplexes(self.p)? {
            values.insert(k, ev.phi(&k)?);
        }
        Ok(RawFunctor {
            p: self.p,
            target: self.target.clone(),
            values,
        })
    }

    pub fn check_square(&self) -> Result<bool> {
        self.to_raw()?.check_square()
    }

    pub fn face_horn_duality(&self, sigma: Face) -> Result<bool> {
        self.evaluator().face_horn_duality(sigma)
    }

    pub fn satisfies_all_dualities(&self) -> Result<bool> {
        let mut ev = self.evaluator();
        for sigma in all_faces(self.p).filter(|f| f.dim() >= 1) {
            if !ev.face_horn_duality(sigma)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Given duality for every proper face and the 0-th face-horn of the top
    /// face, reports whether duality holds for the whole top face.
    pub fn duality_criterion(&self) -> Result<bool> {
        let mut ev = self.evaluator();
        let top = Face::top(self.p);
        if self.p == 0 {
            return Ok(true);
        }
        for sigma in all_faces(self.p).filter(|f| f.dim() >= 1 && *f != top) {
            if !ev.face_horn_duality(sigma)? {
                return Err(Error::Hypothesis(format!("duality fails for proper face <{sigma}>")));
            }
        }
        if !ev.face_horn_instance(top, 0)? {
            return Err(Error::Hypothesis("0-th face-horn duality fails for the top face".into()));
        }
        for i in 1..=self.p {
            if !ev.face_horn_instance(top, i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let face_values = all_faces(self.p)
            .map(|f| (f.to_string(), self.face_value(f).iter().map(ToString::to_string).collect()))
            .collect();
        serde_json::to_value(FunctorJson {
            p: self.p,
            target: self.target.clone(),
            face_values,
        })
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: FunctorJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut map = BTreeMap::new();
        for (name, vals) in &raw.face_values {
            let f = Face::parse(name)?;
            let v = vals
                .iter()
                .map(|s| s.parse::<BigInt>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            map.insert(f, v);
        }
        Self::new(raw.p, &raw.target, &map)
    }
}

/// Proper faces of Δᵖ in mask order.
pub fn proper_faces(p: usize) -> impl Iterator<Item = Face> {
    let top = Face::top(p);
    all_faces(p).filter(move |&f| f != top)
}

/// Memoized evaluation of a functor on arbitrary contractible subcomplexes.
pub struct FunctorEval<'a> {
    tf: &'a TorsionFunctor,
    ext: Extender,
    ctx: ModuleCtx,
}

impl FunctorEval<'_> {
    /// `φ(K) = τ(Δᵖ, K)`.
    pub fn phi(&mut self, k: &SubComplex) -> Result<Vec<BigInt>> {
        let form = self.ext.form(k)?;
        Ok(self.tf.apply_form(&form))
    }

    /// `τ(L, K)` for `K ⊆ L`.
    pub fn tau(&mut self, l: &SubComplex, k: &SubComplex) -> Result<Vec<BigInt>> {
        if !k.is_subcomplex_of(l)? {
            return Err(Error::InvalidSubComplex(format!("{k} is not contained in {l}")));
        }
        Ok(sub(&self.phi(k)?, &self.phi(l)?))
    }

    /// `x = (−1)^s · t·y` in the target module.
    fn dual_eq(&self, x: &[BigInt], s: usize, y: &[BigInt]) -> bool {
        let ty = self.ctx.act(y);
        let rhs = if s.is_multiple_of(2) { ty } else { neg(&ty) };
        self.ctx.eq(x, &rhs)
    }

    pub fn face_horn_instance(&mut self, sigma: Face, i: usize) -> Result<bool> {
        let p = self.tf.p;
        let s = sigma.dim();
        let cell = SubComplex::face(p, sigma)?;
        let lhs = self.tau(&cell, &SubComplex::face_boundary(p, sigma, i)?)?;
        let rhs = self.tau(&cell, &SubComplex::face_horn(p, sigma, i)?)?;
        Ok(self.dual_eq(&lhs, s, &rhs))
    }

    /// `τ(σ, ∂ᵢσ) = (−1)^{dim σ} τ*(σ, Λᵢσ)` for every `i`.
    pub fn face_horn_duality(&mut self, sigma: Face) -> Result<bool> {
        if sigma.dim() == 0 {
            return Ok(true);
        }
        for i in 0..=sigma.dim() {
            if !self.face_horn_instance(sigma, i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `τ(σ, ∂_I σ) = (−1)^{dim σ} τ*(σ, ∂_J σ)` with `J` the complement of `I`.
    pub fn generalized_duality(&mut self, sigma: Face, idx: &[usize]) -> Result<bool> {
        let p = self.tf.p;
        let s = sigma.dim();
        let comp: Vec<usize> = (0..=s).filter(|i| !idx.contains(i)).collect();
        if idx.is_empty() || comp.is_empty() {
            return Err(Error::Hypothesis("index set must be proper and nonempty".into()));
        }
        let cell = SubComplex::face(p, sigma)?;
        let lhs = self.tau(&cell, &SubComplex::face_union(p, sigma, idx)?)?;
        let rhs = self.tau(&cell, &SubComplex::face_union(p, sigma, &comp)?)?;
        Ok(self.dual_eq(&lhs, s, &rhs))
    }

    /// `τ(K, Q) = (−1)^k τ*(K, ∂K ∖ int Q)` for `K` a union of `k`-faces and
    /// `Q ⊆ ∂K` a union of `(k−1)`-faces.
    pub fn generalized_duality_pure(&mut self, k: &SubComplex, q: &SubComplex) -> Result<bool> {
        let p = self.tf.p;
        let kmax = k.maximal_faces();
        let dim = kmax[0].dim();
        if dim == 0 || kmax.iter().any(|f| f.dim() != dim) {
            return Err(Error::Hypothesis("K must be a union of faces of one positive dimension".into()));
        }
        let boundary_cells: Vec<Face> = k
            .faces()
            .into_iter()
            .filter(|f| f.dim() + 1 == dim && kmax.iter().filter(|m| m.contains(*f)).count() == 1)
            .collect();
        let qmax = q.maximal_faces();
        if qmax.iter().any(|f| f.dim() + 1 != dim || !boundary_cells.contains(f)) {
            return Err(Error::Hypothesis("Q must be a union of boundary faces of K".into()));
        }
        let rest: Vec<Face> = boundary_cells.iter().copied().filter(|f| !qmax.contains(f)).collect();
        if rest.is_empty() {
            return Err(Error::Hypothesis("Q must be a proper part of the boundary".into()));
        }
        let complement = SubComplex::generated_by(p, &rest)?;
        let lhs = self.tau(k, q)?;
        let rhs = self.tau(k, &complement)?;
        Ok(self.dual_eq(&lhs, dim, &rhs))
    }
}

/// An arbitrary functor on contractible subcomplexes of Δᵖ (`p ≤ 3`), stored as
/// the table `K ↦ τ(Δᵖ, K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFunctor {
    p: usize,
    target: InvolutiveAbelianGroup,
    values: BTreeMap<SubComplex, Vec<BigInt>>,
}

impl RawFunctor {
    pub fn ambient(&self) -> usize {
        self.p
    }

    pub fn value(&self, k: &SubComplex) -> Option<&[BigInt]> {
        self.values.get(k).map(Vec::as_slice)
    }

    /// `Fun(sʲ, A)`: the table `K ↦ τ(sʲK)` on Δ^{p+1}.
    pub fn pullback_degeneracy(tf: &TorsionFunctor, j: usize) -> Result<Self> {
        if j > tf.p {
            return Err(Error::IndexOutOfRange { index: j, max: tf.p });
        }
        let mut ev = tf.evaluator();
        let mut values = BTreeMap::new();
        for k in enumerate_contractible_subcomplexes(tf.p + 1)? {
            let image = k.codegeneracy_image(j)?;
            values.insert(k, ev.phi(&image)?);
        }
        Ok(Self {
            p: tf.p + 1,
            target: tf.target.clone(),
            values,
        })
    }

    /// Pushout squares that violate `τ(K₁, K₀₁) = τ(K, K₀)`.
    pub fn square_violations(&self) -> Result<Vec<(SubComplex, SubComplex)>> {
        let ctx = ModuleCtx::new(&self.target);
        let mut collapser = crate::simplicial::Collapser::default();
        let keys: Vec<&SubComplex> = self.values.keys().collect();
        let mut bad = Vec::new();
        for (a, k0) in keys.iter().enumerate() {
            for k1 in &keys[a + 1..] {
                let Ok(k01) = k0.intersection(k1) else { continue };
                if !collapser.is_contractible(&k01) {
                    continue;
                }
                let k = k0.union(k1)?;
                let v = |x: &SubComplex| self.values.get(x).cloned().ok_or(Error::NotContractible);
                // τ(K₁,K₀₁) − τ(K,K₀) = φ(K₀₁) − φ(K₁) − φ(K₀) + φ(K)
                let lhs = add(&v(&k01)?, &v(&k)?);
                let rhs = add(&v(k0)?, &v(k1)?);
                if !ctx.eq(&lhs, &rhs) {
                    bad.push((**k0, **k1));
                }
            }
        }
        Ok(bad)
    }

    pub fn check_square(&self) -> Result<bool> {
        Ok(self.square_violations()?.is_empty())
    }

    /// `ι*`: restriction to faces.
    pub fn restrict_to_faces(&self) -> Result<TorsionFunctor> {
        let mut map = BTreeMap::new();
        for f in all_faces(self.p) {
            let k = SubComplex::face(self.p, f)?;
            map.insert(f, self.values.get(&k).cloned().ok_or(Error::NotContractible)?);
        }
        TorsionFunctor::new(self.p, &self.target, &map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u64) -> InvolutiveAbelianGroup {
        InvolutiveAbelianGroup::cyclic(m, 1)
    }

    fn val(x: i64) -> Vec<BigInt> {
        vec![BigInt::from(x)]
    }

    fn tf(p: usize, a: &InvolutiveAbelianGroup, vals: &[(&str, i64)]) -> TorsionFunctor {
        let map = vals.iter().map(|(f, v)| (Face::parse(f).unwrap(), val(*v))).collect();
        TorsionFunctor::new(p, a, &map).unwrap()
    }

    #[test]
    fn zero_functor_is_zero_everywhere() {
        let t = TorsionFunctor::zero(2, &z(0));
        let raw = t.to_raw().unwrap();
        for k in enumerate_contractible_subcomplexes(2).unwrap() {
            assert!(raw.value(&k).unwrap().iter().all(Zero::is_zero));
        }
        assert!(t.check_square().unwrap());
        assert!(t.satisfies_all_dualities().unwrap());
    }

    #[test]
    fn horn_value_by_inclusion_exclusion() {
        let (a, b, c) = (5, 7, 11);
        let t = tf(2, &z(0), &[("02", a), ("01", b), ("0", c)]);
        let v = t.evaluator().phi(&SubComplex::horn(2, 0).unwrap()).unwrap();
        assert_eq!(v, val(a + b - c));
    }

    #[test]
    fn nonzero_top_rejected() {
        let map = [(Face::top(1), val(1))].into_iter().collect();
        assert!(TorsionFunctor::new(1, &z(0), &map).is_err());
    }

    #[test]
    fn undefined_on_disconnected() {
        let t = tf(1, &z(0), &[("0", 3)]);
        let k = SubComplex::parse_faces(1, &["0", "1"]).unwrap();
        assert_eq!(t.evaluator().phi(&k), Err(Error::NotContractible));
    }

    #[test]
    fn raw_degeneracy_breaks_the_square() {
        let t = tf(1, &z(0), &[("0", 1), ("1", 1)]);
        assert!(t.check_square().unwrap());
        let raw = RawFunctor::pullback_degeneracy(&t, 1).unwrap();
        assert!(!raw.check_square().unwrap());
        let boxed = t.box_degeneracy(1).unwrap();
        assert!(boxed.check_square().unwrap());
    }

    #[test]
    fn json_round_trip() {
        let t = tf(2, &z(4), &[("0", 1), ("12", 3)]);
        let back = TorsionFunctor::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }
}
