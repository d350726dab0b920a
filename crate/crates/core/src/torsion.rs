//! Symbolic h-cobordism calculus: a cobordism is recorded as its dimension,
//! its torsion measured from the incoming end, and the identification of
//! fundamental groups it induces.
//!
//! Formulas are written additively against [`ValueGroup`]. [`WhValues`] is the
//! multiplicative adapter for Wh(Cₙ): sums become products of unit
//! representatives, negation becomes inversion and the involution is
//! coefficient reversal.

use std::fmt::Debug;

use num_bigint::BigInt;
use serde_json::json;

use crate::abgroup::{homology_c2_subquotient, InvolutiveAbelianGroup};
use crate::error::{Error, Result};
use crate::group_ring::{mod_inverse, GroupRingElement, OrientationCharacter, WhiteheadClass};
use crate::matrix::{IntMatrix, Solver};

/// An abelian group with involution in which torsions take values, together
/// with the automorphisms that identifications of fundamental groups induce.
pub trait ValueGroup {
    type Value: Clone + Debug;
    type Twist: Clone + Debug;

    fn zero(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: &Self::Value) -> Result<Self::Value>;
    fn conj(&self, a: &Self::Value) -> Result<Self::Value>;
    fn value_eq(&self, a: &Self::Value, b: &Self::Value) -> Result<bool>;

    fn act(&self, h: &Self::Twist, a: &Self::Value) -> Result<Self::Value>;
    fn twist_identity(&self) -> Self::Twist;
    /// `then ∘ first`.
    fn twist_compose(&self, first: &Self::Twist, then: &Self::Twist) -> Result<Self::Twist>;
    fn twist_inverse(&self, h: &Self::Twist) -> Result<Self::Twist>;
    fn twist_eq(&self, a: &Self::Twist, b: &Self::Twist) -> bool;

    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value> {
        self.add(a, &self.neg(b)?)
    }

    fn signed(&self, sign: i64, a: &Self::Value) -> Result<Self::Value> {
        if sign >= 0 {
            Ok(a.clone())
        } else {
            self.neg(a)
        }
    }
}

/// Wh(Cₙ) written multiplicatively; twists are the Galois labels `t ↦ tⁱ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WhValues {
    order: usize,
    character: OrientationCharacter,
}

impl WhValues {
    pub fn new(order: usize, character: OrientationCharacter) -> Result<Self> {
        OrientationCharacter::new(character.sign_of_generator(), order)?;
        Ok(Self { order, character })
    }

    pub fn trivial(order: usize) -> Self {
        Self {
            order,
            character: OrientationCharacter::TRIVIAL,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn check(&self, a: &WhiteheadClass) -> Result<()> {
        if a.order() != self.order {
            return Err(Error::OrderMismatch(a.order(), self.order));
        }
        Ok(())
    }

    fn label(&self, i: i64) -> Result<i64> {
        let n = self.order as i64;
        mod_inverse(i, n).ok_or(Error::NotCoprime(i, self.order))?;
        Ok(i.rem_euclid(n))
    }
}

impl ValueGroup for WhValues {
    type Value = WhiteheadClass;
    type Twist = i64;

    fn zero(&self) -> WhiteheadClass {
        WhiteheadClass::identity(self.order)
    }

    fn add(&self, a: &WhiteheadClass, b: &WhiteheadClass) -> Result<WhiteheadClass> {
        self.check(a)?;
        self.check(b)?;
        a.compose(b)
    }

    fn neg(&self, a: &WhiteheadClass) -> Result<WhiteheadClass> {
        self.check(a)?;
        Ok(a.inverse())
    }

    fn conj(&self, a: &WhiteheadClass) -> Result<WhiteheadClass> {
        self.check(a)?;
        Ok(a.involution(self.character))
    }

    fn value_eq(&self, a: &WhiteheadClass, b: &WhiteheadClass) -> Result<bool> {
        a.class_equal(b)
    }

    fn act(&self, h: &i64, a: &WhiteheadClass) -> Result<WhiteheadClass> {
        self.check(a)?;
        a.galois_twist(*h)
    }

    fn twist_identity(&self) -> i64 {
        1 % self.order as i64
    }

    fn twist_compose(&self, first: &i64, then: &i64) -> Result<i64> {
        self.label(self.label(*first)? * self.label(*then)?)
    }

    fn twist_inverse(&self, h: &i64) -> Result<i64> {
        mod_inverse(*h, self.order as i64).ok_or(Error::NotCoprime(*h, self.order))
    }

    fn twist_eq(&self, a: &i64, b: &i64) -> bool {
        let n = self.order as i64;
        a.rem_euclid(n) == b.rem_euclid(n)
    }
}

/// A finitely generated module with involution; twists are automorphisms
/// commuting with the involution, given as matrices on the generators.
#[derive(Clone, Debug)]
pub struct ModuleValues {
    module: InvolutiveAbelianGroup,
}

impl ModuleValues {
    pub fn new(module: InvolutiveAbelianGroup) -> Self {
        Self { module }
    }

    pub fn module(&self) -> &InvolutiveAbelianGroup {
        &self.module
    }

    /// Checks that `h` preserves relations, commutes with the involution and
    /// is invertible modulo relations.
    pub fn automorphism(&self, h: IntMatrix) -> Result<IntMatrix> {
        let g = self.module.generators();
        if h.rows() != g || h.cols() != g {
            return Err(Error::Dimension("automorphism must be square on generators".into()));
        }
        let rel = self.module.relations();
        let in_rel = Solver::new(rel);
        let hr = h.mul(rel)?;
        if hr.columns().iter().any(|c| in_rel.solve(c).is_none()) {
            return Err(Error::InvalidModule("automorphism does not preserve relations".into()));
        }
        let t = self.module.involution();
        let comm = h.mul(t)?.sub(&t.mul(&h)?)?;
        if comm.columns().iter().any(|c| !self.module.is_zero_element(c)) {
            return Err(Error::InvalidModule("automorphism does not commute with the involution".into()));
        }
        self.inverse_matrix(&h)?;
        Ok(h)
    }

    fn inverse_matrix(&self, h: &IntMatrix) -> Result<IntMatrix> {
        let g = self.module.generators();
        let solver = Solver::new(&h.hstack(self.module.relations())?);
        let cols = (0..g)
            .map(|i| {
                let mut e = vec![BigInt::from(0); g];
                e[i] = BigInt::from(1);
                solver
                    .solve(&e)
                    .map(|x| x[..g].to_vec())
                    .ok_or_else(|| Error::InvalidModule("twist is not surjective".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix::from_columns(g, &cols))
    }
}

impl ValueGroup for ModuleValues {
    type Value = Vec<BigInt>;
    type Twist = IntMatrix;

    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::from(0); self.module.generators()]
    }

    fn add(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Result<Vec<BigInt>> {
        if a.len() != b.len() || a.len() != self.module.generators() {
            return Err(Error::CoefficientLength {
                expected: self.module.generators(),
                got: a.len().max(b.len()),
            });
        }
        Ok(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &Vec<BigInt>) -> Result<Vec<BigInt>> {
        Ok(a.iter().map(|x| -x).collect())
    }

    fn conj(&self, a: &Vec<BigInt>) -> Result<Vec<BigInt>> {
        Ok(self.module.apply_involution(a))
    }

    fn value_eq(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Result<bool> {
        Ok(self.module.is_zero_element(&self.sub(a, b)?))
    }

    fn act(&self, h: &IntMatrix, a: &Vec<BigInt>) -> Result<Vec<BigInt>> {
        h.mul_vec(a)
    }

    fn twist_identity(&self) -> IntMatrix {
        IntMatrix::identity(self.module.generators())
    }

    fn twist_compose(&self, first: &IntMatrix, then: &IntMatrix) -> Result<IntMatrix> {
        then.mul(first)
    }

    fn twist_inverse(&self, h: &IntMatrix) -> Result<IntMatrix> {
        self.inverse_matrix(h)
    }

    fn twist_eq(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        a.sub(b)
            .map(|d| d.columns().iter().all(|c| self.module.is_zero_element(c)))
            .unwrap_or(false)
    }
}

/// An h-cobordism `W` from `M` to `M′`: parity data `d`, `τ(W, M)` and `h^W`.
#[derive(Clone, Debug)]
pub struct HCobordismSymbol<V: ValueGroup> {
    pub d: i64,
    pub torsion: V::Value,
    pub twist: V::Twist,
}

impl<V: ValueGroup> HCobordismSymbol<V> {
    pub fn new(d: i64, torsion: V::Value, twist: V::Twist) -> Self {
        Self { d, torsion, twist }
    }

    /// `M × I`.
    pub fn trivial(g: &V, d: i64) -> Self {
        Self::new(d, g.zero(), g.twist_identity())
    }

    /// Mapping cylinder of a diffeomorphism inducing `h`.
    pub fn mapping_cylinder(g: &V, d: i64, h: V::Twist) -> Self {
        Self::new(d, g.zero(), h)
    }

    pub fn same_as(&self, g: &V, other: &Self) -> Result<bool> {
        Ok(self.d == other.d && g.twist_eq(&self.twist, &other.twist) && g.value_eq(&self.torsion, &other.torsion)?)
    }
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `W′ ∘ W` (first `w`, then `w2`): `τ = τ(W) + (h^W)⁻¹τ(W′)`.
pub fn compose<V: ValueGroup>(g: &V, w: &HCobordismSymbol<V>, w2: &HCobordismSymbol<V>) -> Result<HCobordismSymbol<V>> {
    if w.d != w2.d {
        return Err(Error::Dimension(format!("cannot compose dimensions {} and {}", w.d, w2.d)));
    }
    let back = g.act(&g.twist_inverse(&w.twist)?, &w2.torsion)?;
    Ok(HCobordismSymbol::new(
        w.d,
        g.add(&w.torsion, &back)?,
        g.twist_compose(&w.twist, &w2.twist)?,
    ))
}

/// `W̄` from `M′`: `τ(W, M′) = (−1)^d h_* τ̄(W, M)`.
pub fn reverse<V: ValueGroup>(g: &V, w: &HCobordismSymbol<V>) -> Result<HCobordismSymbol<V>> {
    let t = g.act(&w.twist, &g.conj(&w.torsion)?)?;
    Ok(HCobordismSymbol::new(w.d, g.signed(sign(w.d), &t)?, g.twist_inverse(&w.twist)?))
}

/// `D(W) = W̄ ∘ W`, with torsion `τ + (−1)^d τ̄`.
pub fn double<V: ValueGroup>(g: &V, w: &HCobordismSymbol<V>) -> Result<HCobordismSymbol<V>> {
    compose(g, w, &reverse(g, w)?)
}

/// `V_φ = W ∘ M_{φ⁻¹} ∘ W̄`, measured from `M′`.
pub fn inertial_twist<V: ValueGroup>(g: &V, w: &HCobordismSymbol<V>, phi: &V::Twist) -> Result<HCobordismSymbol<V>> {
    let cyl = HCobordismSymbol::mapping_cylinder(g, w.d, g.twist_inverse(phi)?);
    compose(g, &compose(g, &reverse(g, w)?, &cyl)?, w)
}

/// `h τ(V, L) + (−1)^{n−1}(h τ + (−1)^{d+n−1} h τ̄)` for a cycle of degree `n ≥ 2`.
pub fn basepoint_change_torsion<V: ValueGroup>(
    g: &V,
    tau_w: &V::Value,
    h: &V::Twist,
    tau_v: &V::Value,
    n: usize,
    d: i64,
) -> Result<V::Value> {
    if n < 2 {
        return Err(Error::CycleDegree(n));
    }
    let n = n as i64;
    let ht = g.act(h, tau_w)?;
    let htbar = g.act(h, &g.conj(tau_w)?)?;
    let inner = g.add(&ht, &g.signed(sign(d + n - 1), &htbar)?)?;
    g.add(&g.act(h, tau_v)?, &g.signed(sign(n - 1), &inner)?)
}

/// Module whose `C₂`-homology in degree `n − 1` receives the basepoint-change
/// class: the involution is twisted by `(−1)^{d−1}`.
pub fn basepoint_module(a: &InvolutiveAbelianGroup, d: i64) -> InvolutiveAbelianGroup {
    a.action_for_dimension(d)
}

/// Whether `x` and `y` define the same class in `H_{n−1}(C₂; A)` with the
/// involution twisted for dimension `d`. Errors if either is not a cycle.
pub fn same_homology_class(a: &InvolutiveAbelianGroup, d: i64, n: usize, x: &[BigInt], y: &[BigInt]) -> Result<bool> {
    if n < 2 {
        return Err(Error::CycleDegree(n));
    }
    let m = basepoint_module(a, d);
    let sq = homology_c2_subquotient(&m, n - 1);
    let diff: Vec<BigInt> = x.iter().zip(y).map(|(p, q)| p - q).collect();
    sq.is_zero_class(&diff)
        .ok_or_else(|| Error::NotInSubgroup("difference is not a cycle".into()))
}

impl HCobordismSymbol<WhValues> {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "d": self.d,
            "torsion": self.torsion.representative(),
            "twist": self.twist,
        })
    }

    pub fn from_json(g: &WhValues, v: &serde_json::Value) -> Result<Self> {
        let d = v["d"].as_i64().ok_or_else(|| Error::Parse("missing integer d".into()))?;
        let twist = v["twist"].as_i64().ok_or_else(|| Error::Parse("missing integer twist".into()))?;
        let rep: GroupRingElement =
            serde_json::from_value(v["torsion"].clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if rep.order() != g.order() {
            return Err(Error::OrderMismatch(rep.order(), g.order()));
        }
        g.twist_inverse(&twist)?;
        Ok(Self::new(d, WhiteheadClass::new(rep)?, twist.rem_euclid(g.order() as i64)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_ring::special_unit_c7;

    fn u7() -> WhiteheadClass {
        WhiteheadClass::new(special_unit_c7()).unwrap()
    }

    #[test]
    fn trivial_cylinder_is_neutral() {
        let g = WhValues::trivial(7);
        let w = HCobordismSymbol::new(11, u7(), 3);
        let c = compose(&g, &w, &HCobordismSymbol::trivial(&g, 11)).unwrap();
        assert!(c.same_as(&g, &w).unwrap());
    }

    #[test]
    fn numeric_composition_by_substitution() {
        let g = WhValues::trivial(7);
        let w = HCobordismSymbol::new(11, u7(), 2);
        let c = compose(&g, &w, &w).unwrap();
        let expect = special_unit_c7().try_mul(&special_unit_c7().galois_twist(4).unwrap()).unwrap();
        assert!(c.torsion.class_equal(&WhiteheadClass::new(expect).unwrap()).unwrap());
        assert_eq!(c.twist, 4);
    }

    #[test]
    fn reverse_in_odd_dimension_inverts() {
        let g = WhValues::trivial(7);
        let w = HCobordismSymbol::new(11, u7(), 3);
        let r = reverse(&g, &w).unwrap();
        let expect = u7().galois_twist(3).unwrap().inverse();
        assert!(r.torsion.class_equal(&expect).unwrap());
        assert_eq!(r.twist, 5);
    }

    #[test]
    fn odd_double_is_trivial() {
        let g = WhValues::trivial(7);
        let w = HCobordismSymbol::new(11, u7(), 2);
        assert!(double(&g, &w).unwrap().torsion.is_trivial());
    }

    #[test]
    fn inertial_twists_of_the_unit() {
        let g = WhValues::trivial(7);
        let w = HCobordismSymbol::new(11, u7(), 1);
        assert!(inertial_twist(&g, &w, &1).unwrap().torsion.is_trivial());
        assert!(inertial_twist(&g, &w, &6).unwrap().torsion.is_trivial());
        assert!(!inertial_twist(&g, &w, &2).unwrap().torsion.is_trivial());
    }

    #[test]
    fn basepoint_change_without_correction() {
        let a = InvolutiveAbelianGroup::free(2, 1);
        let g = ModuleValues::new(a);
        let h = g.twist_identity();
        let tv = vec![BigInt::from(3), BigInt::from(-1)];
        let out = basepoint_change_torsion(&g, &g.zero(), &h, &tv, 2, 11).unwrap();
        assert_eq!(out, tv);
        assert_eq!(
            basepoint_change_torsion(&g, &g.zero(), &h, &tv, 1, 11),
            Err(Error::CycleDegree(1))
        );
    }

    #[test]
    fn json_round_trip() {
        let g = WhValues::trivial(7);
        let w = HCobordismSymbol::new(11, u7(), 3);
        let back = HCobordismSymbol::from_json(&g, &w.to_json()).unwrap();
        assert!(back.same_as(&g, &w).unwrap());
    }
}
