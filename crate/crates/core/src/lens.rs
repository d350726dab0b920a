//! Lens spaces `L^{2n−1}_p(r₁:…:rₙ)`, their Reidemeister torsion, simple
//! self-equivalences and the inertia set of the h-cobordism built from a unit.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::abgroup::{homology_c2, InvolutiveAbelianGroup};
use crate::cyclotomic::{is_prime, CyclotomicElement};
use crate::error::{Error, Result};
use crate::group_ring::{special_unit_c5, special_unit_c7, GroupRingElement, WhiteheadClass};
use crate::report::{ReportDocument, Stage, StageStatus};
use crate::torsion::{double, HCobordismSymbol, WhValues};

/// Largest `k` accepted by the Theorem A pipeline.
pub const MAX_K: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensSpace {
    p: u64,
    weights: Vec<i64>,
}

impl LensSpace {
    pub fn new(p: u64, weights: Vec<i64>) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if weights.is_empty() {
            return Err(Error::Dimension("a lens space needs at least one weight".into()));
        }
        if let Some(&w) = weights.iter().find(|w| w.rem_euclid(p as i64) == 0) {
            return Err(Error::NotCoprime(w, p as usize));
        }
        let weights = weights.iter().map(|w| w.rem_euclid(p as i64)).collect();
        Ok(Self { p, weights })
    }

    /// `L^{2n−1}_p` with each of `1, …, p−1` repeated `k` times.
    pub fn balanced(p: u64, k: u64) -> Result<Self> {
        let weights = (0..k).flat_map(|_| 1..p as i64).collect();
        Self::new(p, weights)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// `n`, where the dimension is `2n − 1`.
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn dim(&self) -> usize {
        2 * self.n() - 1
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(ToString::to_string).collect();
        write!(f, "L^{}_{}({})", self.dim(), self.p, w.join(":"))
    }
}

/// Reidemeister torsion in `Q(ζₚ)`, meaningful up to `±ζᵏ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTorsion {
    pub value: CyclotomicElement,
}

/// `Δ(L) = ∏ⱼ (ζ^{rⱼ} − 1)`.
pub fn reidemeister_torsion(l: &LensSpace) -> RTorsion {
    let p = l.p as usize;
    let one = CyclotomicElement::one(p);
    let value = l.weights.iter().fold(one.clone(), |acc, &r| {
        &acc * &(&CyclotomicElement::zeta_power(p, r) - &one)
    });
    RTorsion { value }
}

/// `x = ±ζᵏ y` for some `k`.
pub fn rt_equivalent(x: &RTorsion, y: &RTorsion) -> Result<bool> {
    x.value.equivalent_up_to_roots(&y.value)
}

/// Residues `i` with `iⁿ ≡ ±1 (mod p)`, split by the sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutoImage {
    pub preserving: Vec<i64>,
    pub reversing: Vec<i64>,
}

impl AutoImage {
    pub fn contains(&self, i: i64) -> bool {
        self.preserving.contains(&i) || self.reversing.contains(&i)
    }

    pub fn all(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.preserving.iter().chain(&self.reversing).copied().collect();
        v.sort_unstable();
        v
    }
}

fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    let (mut acc, mut b, mut e) = (1u128, b as u128 % m as u128, e);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    acc as u64
}

/// Degrees of homotopy self-equivalences `fᵢ` (`i ↦` induced map on `π₁`).
pub fn homotopy_auto_image(l: &LensSpace) -> AutoImage {
    let mut img = AutoImage {
        preserving: Vec::new(),
        reversing: Vec::new(),
    };
    for i in 1..l.p {
        match pow_mod(i, l.n() as u64, l.p) {
            1 => img.preserving.push(i as i64),
            r if r == l.p - 1 => img.reversing.push(i as i64),
            _ => {}
        }
    }
    img
}

/// Whether the self-equivalence `fᵢ` is simple: `ζ ↦ ζⁱ` fixes `Δ(L)` up to `±ζᵏ`.
pub fn is_simple_auto(l: &LensSpace, i: i64) -> Result<bool> {
    let i = i.rem_euclid(l.p as i64);
    if !homotopy_auto_image(l).contains(i) {
        return Err(Error::NotRealizable(i as u64));
    }
    let delta = reidemeister_torsion(l);
    let twisted = RTorsion {
        value: delta.value.galois(i)?,
    };
    rt_equivalent(&twisted, &delta)
}

/// Distinct classes `φᵢ(u)·u⁻¹` over the simple self-equivalences `i`.
#[derive(Clone, Debug)]
pub struct InertiaSet {
    /// Each class with the smallest `i` producing it.
    pub classes: Vec<(i64, WhiteheadClass)>,
    /// For every simple `i`, the index of its class.
    pub assignment: Vec<(i64, usize)>,
}

impl InertiaSet {
    pub fn cardinality(&self) -> usize {
        self.classes.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "cardinality": self.cardinality(),
            "classes": self.classes.iter().map(|(i, c)| json!({
                "i": i,
                "representative": c.representative().to_string(),
            })).collect::<Vec<_>>(),
            "assignment": self.assignment.iter().map(|(i, c)| json!([i, c])).collect::<Vec<_>>(),
        })
    }
}

pub fn inertia_set(l: &LensSpace, u: &GroupRingElement) -> Result<InertiaSet> {
    if u.order() != l.p as usize {
        return Err(Error::OrderMismatch(u.order(), l.p as usize));
    }
    let u = WhiteheadClass::new(u.clone())?;
    let mut classes: Vec<(i64, WhiteheadClass)> = Vec::new();
    let mut assignment = Vec::new();
    for i in homotopy_auto_image(l).all() {
        if !is_simple_auto(l, i)? {
            continue;
        }
        let c = u.galois_twist(i)?.compose(&u.inverse())?;
        let mut idx = None;
        for (j, (_, d)) in classes.iter().enumerate() {
            if c.class_equal(d)? {
                idx = Some(j);
                break;
            }
        }
        let idx = idx.unwrap_or_else(|| {
            classes.push((i, c));
            classes.len() - 1
        });
        assignment.push((i, idx));
    }
    Ok(InertiaSet { classes, assignment })
}

/// The unit of Z[Cₚ] used for the inertia computation at `p ∈ {5, 7}`.
pub fn default_unit(p: u64) -> Result<GroupRingElement> {
    match p {
        7 => Ok(special_unit_c7()),
        5 => Ok(special_unit_c5()),
        _ => Err(Error::Hypothesis(format!("no built-in unit for p = {p}"))),
    }
}

/// Full pipeline for the balanced `L^{12k−1}_7` and the built-in unit.
pub fn theorem_a_report(k: u64) -> Result<ReportDocument> {
    theorem_a_report_with_unit(k, &special_unit_c7())
}

/// The pipeline with an arbitrary unit; halts at the first failed stage.
pub fn theorem_a_report_with_unit(k: u64, u: &GroupRingElement) -> Result<ReportDocument> {
    if k == 0 {
        return Err(Error::Hypothesis("k must be positive".into()));
    }
    if k > MAX_K {
        return Err(Error::CapExceeded {
            what: "k",
            value: k as usize,
            max: MAX_K as usize,
        });
    }
    let p = 7u64;
    let l = LensSpace::balanced(p, k)?;
    let d = (12 * k - 1) as i64;
    let mut r = ReportDocument::new(
        "lens report-theorem-a",
        json!({"k": k, "p": p, "d": d, "unit": u.to_string()}),
    );
    r.assume(
        "Wh(C₇) ≅ Z² (SK₁(Z[C₇]) = 0)",
        "rank (p−3)/2 by Bass; SK₁(Z[Cₚ]) = 0 by Bass–Milnor–Serre",
    );
    r.assume("I(L) = 0 for lens spaces", "Milnor, Whitehead torsion, Cor. 12.12");
    r.assume(
        "π₀Diff(L) → π₀sAut(L) is surjective",
        "Hsiang–Jahren",
    );
    r.assume("Γ(L) is finite", "surgery exact sequence for L, taken as input");

    let inv = u.invert_unit();
    let unit_ok = inv.as_ref().map(|v| (u * v).is_one()).unwrap_or(false);
    let witness = match &inv {
        Ok(v) => json!({"u": u.to_string(), "u^-1": v.to_string()}),
        Err(e) => json!({"u": u.to_string(), "error": e.to_string()}),
    };
    if !r.push(Stage::check("u is a unit", unit_ok, witness)) {
        return Ok(r);
    }

    let img = homotopy_auto_image(&l);
    let full = img.all().len() == (p - 1) as usize && img.reversing.is_empty();
    if !r.push(Stage::check(
        "Im γ = (Z/7)^×, orientation-preserving",
        full,
        json!({"preserving": img.preserving, "reversing": img.reversing}),
    )) {
        return Ok(r);
    }

    let mut simple = Vec::new();
    for i in img.all() {
        if is_simple_auto(&l, i)? {
            simple.push(i);
        }
    }
    if !r.push(Stage::check(
        "every fᵢ is simple",
        simple.len() == (p - 1) as usize,
        json!({"simple": simple}),
    )) {
        return Ok(r);
    }

    let uc = WhiteheadClass::new(u.clone())?;
    let phi = |i: i64| uc.galois_twist(i);
    let fixed = phi(6)?.class_equal(&uc)?;
    if !r.push(Stage::check(
        "φ₆u ∼ u",
        fixed,
        json!({"φ₆u": phi(6)?.representative().to_string()}),
    )) {
        return Ok(r);
    }

    let cands = [uc.clone(), phi(2)?, phi(3)?];
    let mut distinct = true;
    for a in 0..3 {
        for b in a + 1..3 {
            distinct &= !cands[a].class_equal(&cands[b])?;
        }
    }
    let inertia = inertia_set(&l, u)?;
    let n_classes = inertia.cardinality();
    if !r.push(Stage::check(
        "u, φ₂u, φ₃u pairwise distinct",
        distinct,
        json!({"N": n_classes}),
    )) {
        return Ok(r);
    }

    let g = WhValues::trivial(p as usize);
    let mut doubles_trivial = true;
    for (_, c) in &inertia.classes {
        let w = HCobordismSymbol::new(d, c.clone(), 1);
        doubles_trivial &= double(&g, &w)?.torsion.is_trivial();
    }
    doubles_trivial &= double(&g, &HCobordismSymbol::new(d, uc.clone(), 1))?.torsion.is_trivial();
    if !r.push(Stage::check(
        "D(M) = 0",
        doubles_trivial,
        json!(format!("d = {d} odd, trivial involution on Wh(C₇)")),
    )) {
        return Ok(r);
    }

    if !r.push(Stage::check("|I(M)/D(M)| = 3", n_classes == 3, inertia.to_json())) {
        return Ok(r);
    }

    let h1 = homology_c2(&InvolutiveAbelianGroup::free(2, 1), 1);
    let h1_ok = h1.to_string() == "Z/2 ⊕ Z/2";
    let stage = Stage::new(
        "H₁(C₂; Wh(C₇)) = Z/2 ⊕ Z/2",
        if h1_ok { StageStatus::Derived } else { StageStatus::Failed },
        json!(h1.to_string()),
    )
    .with_citation("computed for Z² with trivial involution; Wh(C₇) ≅ Z² is assumed");
    if !r.push(stage) {
        return Ok(r);
    }

    r.push(
        Stage::new("factor N", StageStatus::Derived, json!({"N": n_classes}))
            .with_citation("|π₁ B D̃iff(L)| = N·|π₁ B D̃iff(M)|, resting on the assumptions listed"),
    );
    r.notes.push(
        "|I(M)| = 3 is computed directly here; an earlier literature claim to the contrary is not relied upon"
            .into(),
    );
    Ok(r)
}
