//! Exact arithmetic in Q(ζₚ) on the power basis 1, ζ, …, ζ^{p−2}.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group_ring::GroupRingElement;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    p: usize,
    coeffs: Vec<BigRational>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl CyclotomicElement {
    pub fn new(p: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if coeffs.len() != p - 1 {
            return Err(Error::CoefficientLength {
                expected: p - 1,
                got: coeffs.len(),
            });
        }
        Ok(Self { p, coeffs })
    }

    pub fn from_i64(p: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(p, coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(p: usize) -> Self {
        Self {
            p,
            coeffs: vec![BigRational::zero(); p - 1],
        }
    }

    pub fn one(p: usize) -> Self {
        Self::zeta_power(p, 0)
    }

    /// `ζ^k` reduced to the power basis.
    pub fn zeta_power(p: usize, k: i64) -> Self {
        let mut full = vec![BigRational::zero(); p];
        full[k.rem_euclid(p as i64) as usize] = BigRational::one();
        Self::reduce(p, full)
    }

    /// Reduces a coefficient vector of Q[t]/(tᵖ − 1) modulo the cyclotomic polynomial.
    fn reduce(p: usize, mut full: Vec<BigRational>) -> Self {
        let top = full.pop().expect("length p");
        if !top.is_zero() {
            for c in &mut full {
                *c -= &top;
            }
        }
        Self { p, coeffs: full }
    }

    pub fn prime(&self) -> usize {
        self.p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::OrderMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = self.p;
        let mut full = vec![BigRational::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[(i + j) % p] += a * b;
                }
            }
        }
        Ok(Self::reduce(p, full))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            p: self.p,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            p: self.p,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Field automorphism `ζ ↦ ζⁱ`.
    pub fn galois(&self, i: i64) -> Result<Self> {
        let p = self.p as i64;
        if i.rem_euclid(p) == 0 {
            return Err(Error::NotCoprime(i, self.p));
        }
        let mut full = vec![BigRational::zero(); self.p];
        for (k, c) in self.coeffs.iter().enumerate() {
            full[((k as i64) * i).rem_euclid(p) as usize] += c;
        }
        Ok(Self::reduce(self.p, full))
    }

    /// Product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let mut acc = Self::one(self.p);
        for i in 1..self.p as i64 {
            acc = acc.try_mul(&self.galois(i).expect("i coprime to p")).expect("same p");
        }
        debug_assert!(acc.coeffs[1..].iter().all(Zero::is_zero));
        acc.coeffs[0].clone()
    }

    /// Whether `self` and `other` differ by a factor `±ζᵏ`.
    pub fn equivalent_up_to_roots(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        for k in 0..self.p as i64 {
            let shifted = other.try_mul(&Self::zeta_power(self.p, k))?;
            if shifted == *self || -&shifted == *self {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Image of `x` under `t ↦ ζₚ`.
pub fn cyclotomic_project(x: &GroupRingElement, p: usize) -> Result<CyclotomicElement> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if x.order() != p {
        return Err(Error::OrderMismatch(x.order(), p));
    }
    let full = x
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    Ok(CyclotomicElement::reduce(p, full))
}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: Self) -> CyclotomicElement {
        self.try_add(rhs).expect("primes differ")
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: Self) -> CyclotomicElement {
        self.try_sub(rhs).expect("primes differ")
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: Self) -> CyclotomicElement {
        self.try_mul(rhs).expect("primes differ")
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})[{self}]", self.p)
    }
}

/// Integer coefficients when every coordinate is integral.
pub fn integral_coeffs(x: &CyclotomicElement) -> Option<Vec<BigInt>> {
    x.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}
