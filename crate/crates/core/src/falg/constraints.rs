//! Linear constraint systems over face values with coefficients in Z[C₂],
//! solved exactly as lattices.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::extension::{Extender, LinearForm};
use super::functor::{proper_faces, sign, TorsionFunctor};
use crate::abgroup::{CanonicalModule, FgAbGroup, InvolutiveAbelianGroup};
use crate::error::{Error, Result};
use crate::matrix::{kernel_basis, span_basis, IntMatrix, Subquotient};
use crate::simplicial::{all_faces, Face, SubComplex, MAX_AMBIENT};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Constraint `Σ_σ (id_σ + inv_σ · t) f(σ) = 0` in the target module.
#[derive(Clone, Debug)]
struct Constraint {
    id: LinearForm,
    inv: LinearForm,
}

/// Face-value unknowns on Δᵖ (top face fixed at 0) with accumulated constraints.
pub struct ConstraintSystem {
    p: usize,
    canon: CanonicalModule,
    target: InvolutiveAbelianGroup,
    ext: Extender,
    equalities: Vec<(Face, Face)>,
    general: Vec<Constraint>,
}

impl ConstraintSystem {
    /// Unknowns live in the canonical (Smith) coordinates of `module`.
    pub fn new(p: usize, module: &InvolutiveAbelianGroup) -> Result<Self> {
        if p > MAX_AMBIENT - 1 {
            return Err(Error::CapExceeded {
                what: "constraint ambient dimension",
                value: p,
                max: MAX_AMBIENT - 1,
            });
        }
        let canon = module.canonical();
        let target = canon.as_module();
        Ok(Self {
            p,
            canon,
            target,
            ext: Extender::new(p),
            equalities: Vec::new(),
            general: Vec::new(),
        })
    }

    pub fn target(&self) -> &InvolutiveAbelianGroup {
        &self.target
    }

    fn unit(&self, f: Face) -> LinearForm {
        let mut v = vec![0; 1 << (self.p + 1)];
        v[f.mask() as usize] = 1;
        v
    }

    /// `τ(σ, ∂ᵢσ) − (−1)^{dim σ} t·τ(σ, Λᵢσ) = 0`.
    pub fn add_duality(&mut self, sigma: Face, i: usize) -> Result<()> {
        let s = sigma.dim();
        let boundary = SubComplex::face_boundary(self.p, sigma, i)?;
        let horn = SubComplex::face_horn(self.p, sigma, i)?;
        let e = self.unit(sigma);
        let mut id = self.ext.form(&boundary)?;
        let mut inv = self.ext.form(&horn)?;
        let sg = -sign(s);
        for m in 0..id.len() {
            id[m] -= e[m];
            inv[m] = sg * (inv[m] - e[m]);
        }
        self.general.push(Constraint { id, inv });
        Ok(())
    }

    /// Face-horn duality for every face of positive dimension, optionally skipping the top face.
    pub fn add_all_dualities(&mut self, include_top: bool) -> Result<()> {
        let top = Face::top(self.p);
        for sigma in all_faces(self.p).filter(|f| f.dim() >= 1) {
            if sigma == top && !include_top {
                continue;
            }
            for i in 0..=sigma.dim() {
                self.add_duality(sigma, i)?;
            }
        }
        Ok(())
    }

    /// `τ(L, K) = 0` whenever `K ⊆ L ⊆ ⟨1,…,p⟩`.
    pub fn add_vanishing_on_back_face(&mut self) -> Result<()> {
        if self.p == 0 {
            return Ok(());
        }
        let back = Face::top(self.p).boundary(0).expect("p ≥ 1");
        for f in all_faces(self.p) {
            if back.contains(f) && f != back {
                self.equalities.push((f, back));
            }
        }
        Ok(())
    }

    /// `∂ⱼ^{Fun} τ = 0`: every face of `∂ⱼΔᵖ` carries the value of `∂ⱼΔᵖ`.
    pub fn add_face_kernel(&mut self, j: usize) -> Result<()> {
        if self.p == 0 || j > self.p {
            return Err(Error::IndexOutOfRange { index: j, max: self.p });
        }
        let base = Face::top(self.p).boundary(j).expect("p ≥ 1");
        for f in all_faces(self.p - 1) {
            let g = f.coface(j);
            if g != base {
                self.equalities.push((g, base));
            }
        }
        Ok(())
    }

    pub fn solve(&self) -> Result<SolutionLattice> {
        let p = self.p;
        let k = self.canon.rank();
        let top = Face::top(p).mask() as usize;
        let faces: Vec<Face> = proper_faces(p).collect();
        let nfaces = faces.len();
        let mut uf = UnionFind::new(top + 1);
        for &(a, b) in &self.equalities {
            uf.union(a.mask() as usize, b.mask() as usize);
        }
        let zero_root = uf.find(top);
        let mut class_of = vec![None; top + 1];
        let mut classes = 0usize;
        let mut root_index = vec![usize::MAX; top + 1];
        for f in &faces {
            let r = uf.find(f.mask() as usize);
            if r == zero_root {
                continue;
            }
            if root_index[r] == usize::MAX {
                root_index[r] = classes;
                classes += 1;
            }
            class_of[f.mask() as usize] = Some(root_index[r]);
        }

        let t = self.target.involution();
        let orders = &self.canon.orders;
        let nvars = classes * k;
        let mut rows: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
        for c in &self.general {
            let mut a = vec![0i64; classes];
            let mut b = vec![0i64; classes];
            for m in 1..=top {
                if let Some(ci) = class_of[m] {
                    a[ci] += c.id[m];
                    b[ci] += c.inv[m];
                }
            }
            for r in 0..k {
                let mut row = vec![BigInt::zero(); nvars];
                for ci in 0..classes {
                    if a[ci] != 0 {
                        row[ci * k + r] += a[ci];
                    }
                    if b[ci] != 0 {
                        for col in 0..k {
                            let tv = &t[(r, col)];
                            if !tv.is_zero() {
                                row[ci * k + col] += tv * b[ci];
                            }
                        }
                    }
                }
                let d = orders[r].clone();
                if !d.is_zero() {
                    for v in &mut row {
                        *v = num_integer::Integer::mod_floor(v, &d);
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.insert((row, d));
                }
            }
        }

        let reduced_basis = if rows.is_empty() {
            IntMatrix::identity(nvars)
        } else {
            let moduli: Vec<usize> = rows
                .iter()
                .enumerate()
                .filter(|(_, (_, d))| !d.is_zero())
                .map(|(i, _)| i)
                .collect();
            let mut m = IntMatrix::zeros(rows.len(), nvars + moduli.len());
            for (i, (row, _)) in rows.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    m[(i, j)] = v.clone();
                }
            }
            let row_list: Vec<&(Vec<BigInt>, BigInt)> = rows.iter().collect();
            for (c, &i) in moduli.iter().enumerate() {
                m[(i, nvars + c)] = -row_list[i].1.clone();
            }
            kernel_basis(&m).top_rows(nvars)
        };

        let dim = nfaces * k;
        let mut lifted = IntMatrix::zeros(dim, reduced_basis.cols());
        for (fi, f) in faces.iter().enumerate() {
            if let Some(ci) = class_of[f.mask() as usize] {
                for r in 0..k {
                    for col in 0..reduced_basis.cols() {
                        lifted[(fi * k + r, col)] = reduced_basis[(ci * k + r, col)].clone();
                    }
                }
            }
        }
        let relations = face_relations(nfaces, &self.canon);
        let numerator = span_basis(&lifted.hstack(&relations)?);
        let quotient = Subquotient::new(&numerator, &relations)?;
        Ok(SolutionLattice {
            p,
            target: self.target.clone(),
            canon: self.canon.clone(),
            numerator,
            relations,
            quotient,
        })
    }
}

/// Relation lattice of the module of face-value vectors, one block per proper face.
fn face_relations(nfaces: usize, canon: &CanonicalModule) -> IntMatrix {
    let k = canon.rank();
    let rels = canon.relation_columns();
    let mut m = IntMatrix::zeros(nfaces * k, nfaces * rels.len());
    for fi in 0..nfaces {
        for (c, (r, d)) in rels.iter().enumerate() {
            m[(fi * k + r, fi * rels.len() + c)] = d.clone();
        }
    }
    m
}

/// Solutions of a constraint system: a lattice of flat face-value vectors
/// modulo the relations of the target.
#[derive(Clone, Debug)]
pub struct SolutionLattice {
    p: usize,
    target: InvolutiveAbelianGroup,
    canon: CanonicalModule,
    numerator: IntMatrix,
    relations: IntMatrix,
    quotient: Subquotient,
}

impl SolutionLattice {
    pub fn ambient(&self) -> usize {
        self.p
    }

    /// The target module in canonical coordinates.
    pub fn target(&self) -> &InvolutiveAbelianGroup {
        &self.target
    }

    pub fn canonical(&self) -> &CanonicalModule {
        &self.canon
    }

    pub fn numerator(&self) -> &IntMatrix {
        &self.numerator
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn quotient(&self) -> &Subquotient {
        &self.quotient
    }

    pub fn group(&self) -> FgAbGroup {
        self.quotient.invariant_factors()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.quotient.order()
    }

    pub fn contains_flat(&self, x: &[BigInt]) -> bool {
        self.quotient.coordinates(x).is_some()
    }

    pub fn contains(&self, tf: &TorsionFunctor) -> bool {
        tf.ambient() == self.p && self.contains_flat(&tf.to_flat())
    }

    /// Canonical representative of a flat vector: every coordinate reduced mod its order.
    pub fn reduce_flat(&self, x: &mut [BigInt]) {
        let k = self.canon.rank();
        if k == 0 {
            return;
        }
        for chunk in x.chunks_mut(k) {
            self.canon.reduce(chunk);
        }
    }

    pub fn functor(&self, flat: &[BigInt]) -> Result<TorsionFunctor> {
        let mut x = flat.to_vec();
        self.reduce_flat(&mut x);
        TorsionFunctor::from_flat(self.p, &self.target, &x)
    }

    /// Every element of a finite solution group, as functors.
    pub fn elements(&self) -> Result<Vec<TorsionFunctor>> {
        self.quotient
            .enumerate_coordinates()?
            .iter()
            .map(|c| self.functor(&self.quotient.element(c)))
            .collect()
    }

    /// Cyclic generators of the solution group, as functors.
    pub fn generators(&self) -> Result<Vec<TorsionFunctor>> {
        self.quotient.generators().iter().map(|g| self.functor(g)).collect()
    }

    /// Basis of the numerator lattice, as functors (not reduced to generators of the quotient).
    pub fn lattice_functors(&self) -> Result<Vec<TorsionFunctor>> {
        self.numerator.columns().iter().map(|c| self.functor(c)).collect()
    }
}

/// Flat vector with a single 1 at coordinate `coord` of `face`.
pub fn unit_flat(p: usize, k: usize, face: Face, coord: usize) -> Vec<BigInt> {
    let faces: Vec<Face> = proper_faces(p).collect();
    let mut v = vec![BigInt::zero(); faces.len() * k];
    let idx = faces.iter().position(|&f| f == face).expect("proper face");
    v[idx * k + coord] = BigInt::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fun_square_at_p1_is_free_on_two_vertices() {
        let a = InvolutiveAbelianGroup::cyclic(0, 1);
        let sys = ConstraintSystem::new(1, &a).unwrap();
        assert_eq!(sys.solve().unwrap().group(), FgAbGroup::free(2));
    }

    #[test]
    fn falg0_of_z2() {
        let a = InvolutiveAbelianGroup::cyclic(2, 1);
        let mut sys = ConstraintSystem::new(1, &a).unwrap();
        sys.add_vanishing_on_back_face().unwrap();
        sys.add_all_dualities(true).unwrap();
        assert_eq!(sys.solve().unwrap().order(), Some(BigInt::from(2)));
    }
}
