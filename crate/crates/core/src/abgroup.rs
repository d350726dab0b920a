//! Finitely generated abelian groups, modules over Z[C₂] given by a
//! presentation plus an involution matrix, and their C₂-homology.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{cokernel, smith_normal_form, solution_lattice, IntMatrix, Solver, Subquotient};

/// Invariant factor decomposition `Z/d₁ ⊕ ⋯ ⊕ Z/d_k ⊕ Z^f` with `d₁ | d₂ | ⋯`,
/// free summands recorded as trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FgAbGroup {
    factors: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Trusts that `factors` is already a divisibility chain without units.
    pub(crate) fn from_normalized(factors: Vec<BigInt>) -> Self {
        debug_assert!(factors.iter().all(|d| !d.is_one() && !d.is_negative()));
        Self { factors }
    }

    /// Normalizes any list of cyclic orders (0 = Z).
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        cokernel(&IntMatrix::diagonal(orders))
    }

    pub fn from_i64(orders: &[i64]) -> Self {
        Self::from_cyclic_orders(&orders.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>())
    }

    pub fn free(rank: usize) -> Self {
        Self::from_normalized(vec![BigInt::zero(); rank])
    }

    pub fn cyclic(m: u64) -> Self {
        Self::from_i64(&[m as i64])
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn is_finite(&self) -> bool {
        self.rank() == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.factors.iter().product())
    }

    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut all = self.factors.clone();
        all.extend(other.factors.iter().cloned());
        Self::from_cyclic_orders(&all)
    }

    /// Every element is killed by `m`.
    pub fn has_exponent_dividing(&self, m: &BigInt) -> bool {
        self.factors.iter().all(|d| !d.is_zero() && m.is_multiple_of(d))
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") })
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

#[derive(Serialize, Deserialize)]
struct FgAbGroupJson {
    invariant_factors: Vec<u64>,
}

impl Serialize for FgAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let invariant_factors = self
            .factors
            .iter()
            .map(|d| d.to_u64().ok_or_else(|| S::Error::custom("invariant factor exceeds u64")))
            .collect::<std::result::Result<_, _>>()?;
        FgAbGroupJson { invariant_factors }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FgAbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FgAbGroupJson::deserialize(d)?;
        Ok(Self::from_cyclic_orders(
            &raw.invariant_factors.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(),
        ))
    }
}

/// A Z[C₂]-module: `Z^g / (column span of relations)` with `t` acting by `involution`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvolutiveAbelianGroup {
    generators: usize,
    relations: IntMatrix,
    involution: IntMatrix,
}

impl InvolutiveAbelianGroup {
    /// Validates that the involution preserves the relation lattice and squares
    /// to the identity modulo it.
    pub fn new(generators: usize, relations: IntMatrix, involution: IntMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::InvalidModule(format!(
                "relations have {} rows for {generators} generators",
                relations.rows()
            )));
        }
        if involution.rows() != generators || involution.cols() != generators {
            return Err(Error::InvalidModule(format!(
                "involution is {}x{}, expected {generators}x{generators}",
                involution.rows(),
                involution.cols()
            )));
        }
        let m = Self {
            generators,
            relations,
            involution,
        };
        let solver = Solver::new(&m.relations);
        let in_span = |v: &[BigInt]| v.iter().all(Zero::is_zero) || solver.solve(v).is_some();
        let tr = m.involution.mul(&m.relations)?;
        if !tr.columns().iter().all(|c| in_span(c)) {
            return Err(Error::InvalidModule("involution does not preserve the relations".into()));
        }
        let sq = m.involution.mul(&m.involution)?.sub(&IntMatrix::identity(generators))?;
        if !sq.columns().iter().all(|c| in_span(c)) {
            return Err(Error::InvalidModule("involution does not square to the identity".into()));
        }
        Ok(m)
    }

    pub fn zero() -> Self {
        Self {
            generators: 0,
            relations: IntMatrix::zeros(0, 0),
            involution: IntMatrix::zeros(0, 0),
        }
    }

    /// `Z/m` (or `Z` when `m = 0`) with `t` acting by `sign`.
    pub fn cyclic(m: u64, sign: i8) -> Self {
        let relations = if m == 0 {
            IntMatrix::zeros(1, 0)
        } else {
            IntMatrix::from_rows_i64(&[vec![m as i64]])
        };
        Self {
            generators: 1,
            relations,
            involution: IntMatrix::from_rows_i64(&[vec![sign as i64]]),
        }
    }

    /// `⊕ Z/mᵢ` with `t = sign · id`.
    pub fn diagonal(orders: &[u64], sign: i8) -> Self {
        orders
            .iter()
            .map(|&m| Self::cyclic(m, sign))
            .fold(Self::zero(), |acc, x| acc.direct_sum(&x))
    }

    pub fn free(rank: usize, sign: i8) -> Self {
        Self::diagonal(&vec![0; rank], sign)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let g = self.generators + other.generators;
        let r = self.relations.cols() + other.relations.cols();
        let mut rel = IntMatrix::zeros(g, r);
        let mut inv = IntMatrix::zeros(g, g);
        for i in 0..self.generators {
            for j in 0..self.relations.cols() {
                rel[(i, j)] = self.relations[(i, j)].clone();
            }
            for j in 0..self.generators {
                inv[(i, j)] = self.involution[(i, j)].clone();
            }
        }
        for i in 0..other.generators {
            for j in 0..other.relations.cols() {
                rel[(self.generators + i, self.relations.cols() + j)] = other.relations[(i, j)].clone();
            }
            for j in 0..other.generators {
                inv[(self.generators + i, self.generators + j)] = other.involution[(i, j)].clone();
            }
        }
        Self {
            generators: g,
            relations: rel,
            involution: inv,
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn involution(&self) -> &IntMatrix {
        &self.involution
    }

    /// Same group with the involution multiplied by `(−1)^{d−1}`, the action
    /// used for Whitehead groups of `d`-manifolds.
    pub fn action_for_dimension(&self, d: i64) -> Self {
        if d.rem_euclid(2) == 1 {
            self.clone()
        } else {
            Self {
                involution: self.involution.scale(&BigInt::from(-1)),
                ..self.clone()
            }
        }
    }

    pub fn underlying_group(&self) -> FgAbGroup {
        cokernel(&self.relations)
    }

    pub fn is_finite(&self) -> bool {
        self.underlying_group().is_finite()
    }

    /// Whether `x` is zero in the module.
    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        x.iter().all(Zero::is_zero) || Solver::new(&self.relations).solve(x).is_some()
    }

    pub fn apply_involution(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.involution.mul_vec(x).expect("vector length matches generators")
    }

    /// Diagonal presentation `⊕ Z/dᵢ` in Smith coordinates, trivial summands dropped.
    pub fn canonical(&self) -> CanonicalModule {
        let g = self.generators;
        let snf = smith_normal_form(&self.relations);
        let mut kept = Vec::new();
        let mut orders = Vec::new();
        for i in 0..g {
            let d = snf.diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if !d.is_one() {
                kept.push(i);
                orders.push(d);
            }
        }
        let k = kept.len();
        let mut to_canonical = IntMatrix::zeros(k, g);
        let mut from_canonical = IntMatrix::zeros(g, k);
        let li = snf.left_inverse();
        for (a, &i) in kept.iter().enumerate() {
            for j in 0..g {
                to_canonical[(a, j)] = snf.left[(i, j)].clone();
                from_canonical[(j, a)] = li[(j, i)].clone();
            }
        }
        let t = to_canonical
            .mul(&self.involution)
            .and_then(|m| m.mul(&from_canonical))
            .expect("square dimensions");
        let mut involution = IntMatrix::zeros(k, k);
        for a in 0..k {
            for b in 0..k {
                let v = &t[(a, b)];
                involution[(a, b)] = if orders[a].is_zero() { v.clone() } else { v.mod_floor(&orders[a]) };
            }
        }
        CanonicalModule {
            orders,
            involution,
            to_canonical,
            from_canonical,
        }
    }
}

impl FromStr for InvolutiveAbelianGroup {
    type Err = Error;

    /// Shorthand such as `z2-trivial`, `z4-sign`, `z2xz2-trivial`, `z-trivial`
    /// (`z` alone is the infinite cyclic group), or a JSON presentation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        if s == "0" || s == "zero" {
            return Ok(Self::zero());
        }
        let (groups, action) = s
            .rsplit_once('-')
            .ok_or_else(|| Error::Parse(format!("expected <group>-<action>, got {s:?}")))?;
        let sign = match action {
            "trivial" | "plus" => 1,
            "sign" | "minus" => -1,
            other => return Err(Error::Parse(format!("unknown action {other:?}"))),
        };
        let orders = groups
            .split('x')
            .map(|part| {
                let digits = part
                    .strip_prefix('z')
                    .ok_or_else(|| Error::Parse(format!("summand {part:?} must start with z")))?;
                if digits.is_empty() {
                    Ok(0)
                } else {
                    digits
                        .parse::<u64>()
                        .map_err(|e| Error::Parse(format!("{part:?}: {e}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::diagonal(&orders, sign))
    }
}

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    generators: usize,
    relations: Vec<Vec<i64>>,
    involution: Vec<Vec<i64>>,
}

impl Serialize for InvolutiveAbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let small = |v: &BigInt| v.to_i64().ok_or_else(|| S::Error::custom("entry exceeds i64"));
        let relations = self
            .relations
            .columns()
            .iter()
            .map(|c| c.iter().map(small).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<_, _>>()?;
        let involution = self
            .involution
            .to_rows()
            .iter()
            .map(|r| r.iter().map(small).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<_, _>>()?;
        ModuleJson {
            generators: self.generators,
            relations,
            involution,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for InvolutiveAbelianGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ModuleJson::deserialize(d)?;
        let g = raw.generators;
        let cols: Vec<Vec<BigInt>> = raw
            .relations
            .iter()
            .map(|r| {
                if r.len() != g {
                    return Err(D::Error::custom(format!("relator of length {} for {g} generators", r.len())));
                }
                Ok(r.iter().map(|&x| BigInt::from(x)).collect())
            })
            .collect::<std::result::Result<_, _>>()?;
        let relations = IntMatrix::from_columns(g, &cols);
        if raw.involution.len() != g || raw.involution.iter().any(|r| r.len() != g) {
            return Err(D::Error::custom("involution must be a g x g matrix"));
        }
        let involution = IntMatrix::from_rows_i64(&raw.involution);
        let involution = if g == 0 { IntMatrix::zeros(0, 0) } else { involution };
        InvolutiveAbelianGroup::new(g, relations, involution).map_err(D::Error::custom)
    }
}

/// A module rewritten as `⊕ Z/dᵢ` (`dᵢ = 0` for free summands).
#[derive(Clone, Debug)]
pub struct CanonicalModule {
    pub orders: Vec<BigInt>,
    pub involution: IntMatrix,
    /// Rows map original generator coordinates to canonical coordinates.
    pub to_canonical: IntMatrix,
    /// Columns are the canonical generators in original coordinates.
    pub from_canonical: IntMatrix,
}

impl CanonicalModule {
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Relation matrix: diagonal on the finite summands.
    pub fn relation_columns(&self) -> Vec<(usize, BigInt)> {
        self.orders
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(i, d)| (i, d.clone()))
            .collect()
    }

    pub fn reduce(&self, x: &mut [BigInt]) {
        for (v, d) in x.iter_mut().zip(&self.orders) {
            if !d.is_zero() {
                *v = v.mod_floor(d);
            }
        }
    }

    pub fn as_module(&self) -> InvolutiveAbelianGroup {
        let k = self.rank();
        let rels: Vec<Vec<BigInt>> = self
            .relation_columns()
            .into_iter()
            .map(|(i, d)| {
                let mut c = vec![BigInt::zero(); k];
                c[i] = d;
                c
            })
            .collect();
        InvolutiveAbelianGroup {
            generators: k,
            relations: IntMatrix::from_columns(k, &rels),
            involution: self.involution.clone(),
        }
    }

    /// All elements of a finite module, lexicographic in canonical coordinates.
    pub fn elements(&self) -> Result<Vec<Vec<BigInt>>> {
        let mut out = vec![Vec::new()];
        for d in &self.orders {
            if d.is_zero() {
                return Err(Error::InfiniteModule);
            }
            let mut next = Vec::with_capacity(out.len() * d.to_usize().unwrap_or(1));
            for prefix in &out {
                let mut v = BigInt::zero();
                while &v < d {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    next.push(p);
                    v += 1;
                }
            }
            out = next;
        }
        Ok(out)
    }
}

fn signed_identity_plus(t: &IntMatrix, eps: i64) -> IntMatrix {
    let n = t.rows();
    IntMatrix::identity(n)
        .add(&t.scale(&BigInt::from(eps)))
        .expect("square")
}

/// `ker(k_map) / (im(i_map) + relations)` as a subquotient of the generator lattice.
fn ker_mod_im(a: &InvolutiveAbelianGroup, k_map: &IntMatrix, i_map: &IntMatrix) -> Subquotient {
    let numerator = solution_lattice(k_map, &a.relations).expect("dimensions agree");
    let denominator = i_map.hstack(&a.relations).expect("dimensions agree");
    Subquotient::new(&numerator, &denominator).expect("image lies in kernel for a valid module")
}

/// `H₀ = A/(1−t)A`, and for `n ≥ 1`, `Hₙ = ker(1 − εt)/im(1 + εt)` with `ε = (−1)^{n+1}`.
pub fn homology_c2_subquotient(a: &InvolutiveAbelianGroup, n: usize) -> Subquotient {
    let g = a.generators;
    let t = &a.involution;
    if n == 0 {
        let denominator = signed_identity_plus(t, -1).hstack(&a.relations).expect("dimensions agree");
        return Subquotient::new(&IntMatrix::identity(g), &denominator).expect("identity numerator");
    }
    let eps = if n % 2 == 1 { 1 } else { -1 };
    ker_mod_im(a, &signed_identity_plus(t, -eps), &signed_identity_plus(t, eps))
}

pub fn homology_c2(a: &InvolutiveAbelianGroup, n: usize) -> FgAbGroup {
    homology_c2_subquotient(a, n).invariant_factors()
}

/// `H⁰ = A^{C₂}`; odd `m`: `ker(1+t)/im(1−t)`; even `m ≥ 2`: `ker(1−t)/im(1+t)`.
pub fn cohomology_c2(a: &InvolutiveAbelianGroup, m: usize) -> FgAbGroup {
    let t = &a.involution;
    let plus = signed_identity_plus(t, 1);
    let minus = signed_identity_plus(t, -1);
    let g = a.generators;
    let sq = match m {
        0 => ker_mod_im(a, &minus, &IntMatrix::zeros(g, 0)),
        m if m % 2 == 1 => ker_mod_im(a, &plus, &minus),
        _ => ker_mod_im(a, &minus, &plus),
    };
    sq.invariant_factors()
}

/// Tate homology: `Ĥₙ = Hₙ` for `n ≥ 1`, the norm-twisted subquotients at
/// `n = 0, −1`, and `H^{−n−1}` for `n ≤ −2`.
pub fn tate_homology_c2(a: &InvolutiveAbelianGroup, n: i64) -> FgAbGroup {
    let t = &a.involution;
    match n {
        n if n >= 1 => homology_c2(a, n as usize),
        0 => ker_mod_im(a, &signed_identity_plus(t, 1), &signed_identity_plus(t, -1)).invariant_factors(),
        -1 => ker_mod_im(a, &signed_identity_plus(t, -1), &signed_identity_plus(t, 1)).invariant_factors(),
        n => cohomology_c2(a, (-n - 1) as usize),
    }
}

/// A subgroup of a module, given by generators in the module's coordinates.
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: InvolutiveAbelianGroup,
    generators: IntMatrix,
    solver: Solver,
}

impl Subgroup {
    pub fn new(ambient: &InvolutiveAbelianGroup, generators: IntMatrix) -> Result<Self> {
        if generators.rows() != ambient.generators {
            return Err(Error::Dimension("subgroup generators in the wrong space".into()));
        }
        let span = generators.hstack(&ambient.relations)?;
        Ok(Self {
            ambient: ambient.clone(),
            generators,
            solver: Solver::new(&span),
        })
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        x.iter().all(Zero::is_zero) || self.solver.solve(x).is_some()
    }

    /// The quotient of the ambient module by this subgroup.
    pub fn quotient(&self) -> FgAbGroup {
        cokernel(&self.generators.hstack(&self.ambient.relations).expect("same rows"))
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.columns().iter().all(|c| self.ambient.is_zero_element(c))
    }

    /// The subgroup itself as an abstract group.
    pub fn as_group(&self) -> FgAbGroup {
        let whole = self.ambient.relations.hstack(&self.generators).expect("same rows");
        let sq = Subquotient::new(
            &crate::matrix::span_basis(&whole),
            &self.ambient.relations,
        )
        .expect("relations lie in the span");
        sq.invariant_factors()
    }
}

/// `D = {σ + (−1)^d σ̄}`, where the stored involution of `a` is the bar map.
pub fn double_subgroup(a: &InvolutiveAbelianGroup, d: i64) -> Subgroup {
    let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
    Subgroup::new(a, signed_identity_plus(&a.involution, sign)).expect("square involution")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[i64]) -> FgAbGroup {
        FgAbGroup::from_i64(orders)
    }

    #[test]
    fn normalization() {
        assert_eq!(g(&[6, 9]).factors(), &[BigInt::from(3), BigInt::from(18)]);
        assert_eq!(g(&[1, 0, 2]).factors(), &[BigInt::from(2), BigInt::zero()]);
        assert!(g(&[1]).is_trivial());
        assert_eq!(g(&[2, 2]).to_string(), "Z/2 ⊕ Z/2");
    }

    #[test]
    fn z_trivial() {
        let a = InvolutiveAbelianGroup::cyclic(0, 1);
        assert_eq!(homology_c2(&a, 0), g(&[0]));
        assert_eq!(homology_c2(&a, 1), g(&[2]));
        assert_eq!(homology_c2(&a, 2), g(&[]));
        assert_eq!(homology_c2(&a, 3), g(&[2]));
    }

    #[test]
    fn z_sign() {
        let a = InvolutiveAbelianGroup::cyclic(0, -1);
        assert_eq!(homology_c2(&a, 0), g(&[2]));
        assert_eq!(homology_c2(&a, 1), g(&[]));
        assert_eq!(homology_c2(&a, 2), g(&[2]));
    }

    #[test]
    fn z_squared_trivial() {
        let a = InvolutiveAbelianGroup::free(2, 1);
        assert_eq!(homology_c2(&a, 1), g(&[2, 2]));
    }

    #[test]
    fn swap_module_is_free() {
        // Z[C₂] itself: homology vanishes in positive degrees
        let a = InvolutiveAbelianGroup::new(
            2,
            IntMatrix::zeros(2, 0),
            IntMatrix::from_rows_i64(&[vec![0, 1], vec![1, 0]]),
        )
        .unwrap();
        assert_eq!(homology_c2(&a, 0), g(&[0]));
        for n in 1..5 {
            assert!(homology_c2(&a, n).is_trivial());
        }
    }

    #[test]
    fn tate_examples() {
        let z = InvolutiveAbelianGroup::cyclic(0, 1);
        assert!(tate_homology_c2(&z, 0).is_trivial());
        assert_eq!(tate_homology_c2(&z, -1), g(&[2]));
        assert!(tate_homology_c2(&z, -2).is_trivial());
        assert_eq!(tate_homology_c2(&z, -3), g(&[2]));
        let z2 = InvolutiveAbelianGroup::cyclic(2, 1);
        for n in -4..5 {
            assert_eq!(tate_homology_c2(&z2, n), g(&[2]), "n = {n}");
        }
        for n in -4..5 {
            assert!(tate_homology_c2(&InvolutiveAbelianGroup::zero(), n).is_trivial());
        }
    }

    #[test]
    fn doubles() {
        let a = InvolutiveAbelianGroup::free(2, 1);
        assert!(double_subgroup(&a, 11).is_trivial());
        let even = double_subgroup(&a, 10);
        assert_eq!(even.quotient(), g(&[2, 2]));
        assert_eq!(even.as_group(), g(&[0, 0]));
        assert!(double_subgroup(&InvolutiveAbelianGroup::zero(), 3).is_trivial());
    }

    #[test]
    fn double_quotient_matches_h0() {
        let a = InvolutiveAbelianGroup::diagonal(&[0, 4], -1);
        for d in 0..4 {
            assert_eq!(double_subgroup(&a, d).quotient(), homology_c2(&a.action_for_dimension(d), 0));
        }
    }

    #[test]
    fn rejects_bad_involution() {
        let r = InvolutiveAbelianGroup::new(
            1,
            IntMatrix::from_rows_i64(&[vec![5]]),
            IntMatrix::from_rows_i64(&[vec![2]]),
        );
        assert!(r.is_err());
        // 2 squares to 4 = -1 mod 5, so it is an automorphism but not an involution
        let ok = InvolutiveAbelianGroup::new(
            1,
            IntMatrix::from_rows_i64(&[vec![5]]),
            IntMatrix::from_rows_i64(&[vec![4]]),
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn shorthand_and_json() {
        let a: InvolutiveAbelianGroup = "z2xz2-trivial".parse().unwrap();
        assert_eq!(a.underlying_group(), g(&[2, 2]));
        let z: InvolutiveAbelianGroup = "z-sign".parse().unwrap();
        assert_eq!(z.underlying_group(), g(&[0]));
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"{"generators":2,"relations":[[2,0],[0,2]],"involution":[[1,0],[0,1]]}"#);
        let back: InvolutiveAbelianGroup = js.parse().unwrap();
        assert_eq!(back, a);
        assert!("q3-trivial".parse::<InvolutiveAbelianGroup>().is_err());
    }

    #[test]
    fn canonical_form_of_z6() {
        // Z/6 presented on two generators as Z/2 ⊕ Z/3
        let a = InvolutiveAbelianGroup::diagonal(&[2, 3], -1);
        let c = a.canonical();
        assert_eq!(c.orders, vec![BigInt::from(6)]);
        assert_eq!(c.involution[(0, 0)], BigInt::from(5));
        assert_eq!(c.elements().unwrap().len(), 6);
    }
}
