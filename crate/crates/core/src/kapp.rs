//! Small K-theory checks: `Tor^{Z[Cₚ]}_*(Z, Z[ζₚ])`, the 3-divisibility of
//! `|K₃(Z/p)|` and localization of finite abelian groups at a prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::abgroup::FgAbGroup;
use crate::cyclotomic::is_prime;
use crate::error::{Error, Result};
use crate::matrix::{kernel_basis, IntMatrix, Subquotient};

/// Multiplication by `ζ` on `Z[ζₚ] = Z^{p−1}` in the basis `1, ζ, …, ζ^{p−2}`.
fn zeta_matrix(p: usize) -> IntMatrix {
    let k = p - 1;
    let mut m = IntMatrix::zeros(k, k);
    for j in 0..k - 1 {
        m[(j + 1, j)] = BigInt::one();
    }
    for i in 0..k {
        m[(i, k - 1)] = -BigInt::one();
    }
    m
}

/// Differential `d_i` of the periodic resolution tensored with `Z[ζₚ]`:
/// `ζ − 1` in odd degrees, the norm element in even positive degrees.
fn resolution_differential(p: usize, i: u64) -> IntMatrix {
    let k = p - 1;
    let z = zeta_matrix(p);
    if i % 2 == 1 {
        z.sub(&IntMatrix::identity(k)).expect("square")
    } else {
        let mut acc = IntMatrix::identity(k);
        let mut pow = IntMatrix::identity(k);
        for _ in 1..p {
            pow = pow.mul(&z).expect("square");
            acc = acc.add(&pow).expect("square");
        }
        acc
    }
}

/// `Tor^{Z[Cₚ]}_i(Z, Z[ζₚ])` from the 2-periodic resolution of Z.
pub fn tor_pi_r(p: u64, i: u64) -> Result<FgAbGroup> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = p as usize;
    let k = p - 1;
    let cycles = if i == 0 {
        IntMatrix::identity(k)
    } else {
        kernel_basis(&resolution_differential(p, i))
    };
    let boundaries = resolution_differential(p, i + 1);
    Ok(Subquotient::new(&cycles, &boundaries)?.invariant_factors())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K3Divisibility {
    pub p: u64,
    /// `p² − 1 = |K₃(Z/p)|`.
    pub order: u64,
    pub valuation_3: u32,
    pub divisible_by_3: bool,
    /// `K₃(Z/p)_{(3)} → …` is injective exactly when `p ≠ 3`.
    pub injective: bool,
}

pub fn k3_divisibility(p: u64) -> Result<K3Divisibility> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = p * p - 1;
    let valuation_3 = valuation(order, 3);
    Ok(K3Divisibility {
        p,
        order,
        valuation_3,
        divisible_by_3: valuation_3 > 0,
        injective: p != 3,
    })
}

fn valuation(mut n: u64, l: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(l) {
        n /= l;
        v += 1;
    }
    v
}

fn split(d: &BigInt, l: &BigInt) -> (BigInt, BigInt) {
    let mut part = BigInt::one();
    let mut rest = d.clone();
    while !rest.is_zero() && rest.is_multiple_of(l) {
        rest /= l;
        part *= l;
    }
    (part, rest)
}

fn check_local(g: &FgAbGroup, l: u64) -> Result<BigInt> {
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if !g.is_finite() {
        return Err(Error::FreeFactor);
    }
    Ok(BigInt::from(l))
}

/// The `ℓ`-primary part of a finite abelian group.
pub fn localize(g: &FgAbGroup, l: u64) -> Result<FgAbGroup> {
    let lb = check_local(g, l)?;
    let parts: Vec<BigInt> = g.factors().iter().map(|d| split(d, &lb).0).collect();
    Ok(FgAbGroup::from_cyclic_orders(&parts))
}

/// The prime-to-`ℓ` part of a finite abelian group.
pub fn localize_away(g: &FgAbGroup, l: u64) -> Result<FgAbGroup> {
    let lb = check_local(g, l)?;
    let parts: Vec<BigInt> = g.factors().iter().map(|d| split(d, &lb).1).collect();
    Ok(FgAbGroup::from_cyclic_orders(&parts))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteratureFact {
    pub id: String,
    pub statement: String,
    pub invariant_factors: Vec<u64>,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactTable {
    pub version: u32,
    pub facts: Vec<LiteratureFact>,
}

const FACTS: &str = include_str!("../assets/literature_facts.json");

pub fn literature_facts() -> FactTable {
    serde_json::from_str(FACTS).expect("bundled facts parse")
}
