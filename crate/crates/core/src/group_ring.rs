//! The integral group ring Z[Cₙ] of a cyclic group, its orientation-twisted
//! involution, Galois twists `t ↦ tⁱ`, unit inversion and Whitehead classes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, Solver};

/// Element `Σ c_k t^k` of Z[Cₙ].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl GroupRingElement {
    pub fn new(order: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if order == 0 {
            return Err(Error::CoefficientLength { expected: 1, got: 0 });
        }
        if coeffs.len() != order {
            return Err(Error::CoefficientLength {
                expected: order,
                got: coeffs.len(),
            });
        }
        Ok(Self { order, coeffs })
    }

    pub fn from_i64(order: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(order, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![BigInt::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigInt::one())
    }

    /// `c · t^k`, with `k` reduced mod the order.
    pub fn monomial(order: usize, k: i64, c: BigInt) -> Self {
        let mut x = Self::zero(order);
        x.coeffs[k.rem_euclid(order as i64) as usize] = c;
        x
    }

    /// The trivial unit `±t^k`.
    pub fn trivial_unit(order: usize, negative: bool, k: i64) -> Self {
        let c = if negative { -BigInt::one() } else { BigInt::one() };
        Self::monomial(order, k, c)
    }

    /// The norm element `1 + t + ⋯ + t^{n−1}`.
    pub fn norm_element(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![BigInt::one(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k % self.order]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `Some((negative, k))` when `self = ±t^k`.
    pub fn as_trivial_unit(&self) -> Option<(bool, usize)> {
        let mut found = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || !c.magnitude().is_one() {
                return None;
            }
            found = Some((c.is_negative(), k));
        }
        found
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[(i + j) % n] += a * b;
                }
            }
        }
        Ok(Self { order: n, coeffs: out })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `ā = Σ w(g) a_g g⁻¹`.
    pub fn involution(&self, w: OrientationCharacter) -> Self {
        let n = self.order;
        let coeffs = (0..n)
            .map(|k| {
                let c = self.coeffs[(n - k) % n].clone();
                if w.value_on_power(k) < 0 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Self { order: n, coeffs }
    }

    /// Ring automorphism induced by `t ↦ tⁱ`.
    pub fn galois_twist(&self, i: i64) -> Result<Self> {
        let n = self.order;
        if i.gcd(&(n as i64)) != 1 {
            return Err(Error::NotCoprime(i, n));
        }
        let i = i.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(k * i) % n] += c;
        }
        Ok(Self { order: n, coeffs })
    }

    /// Multiplication-by-`self` as an n×n circulant matrix acting on coefficient vectors.
    pub fn circulant(&self) -> IntMatrix {
        let n = self.order;
        let mut m = IntMatrix::zeros(n, n);
        for k in 0..n {
            for j in 0..n {
                m[(k, j)] = self.coeffs[(k + n - j) % n].clone();
            }
        }
        m
    }

    /// Solves `self · y = 1` exactly; `NotAUnit` if there is no integral solution.
    pub fn invert_unit(&self) -> Result<Self> {
        let aug = self.augmentation();
        if !aug.magnitude().is_one() {
            return Err(Error::NotAUnit);
        }
        let n = self.order;
        let solver = Solver::new(&self.circulant());
        let mut e0 = vec![BigInt::zero(); n];
        e0[0] = BigInt::one();
        let y = solver.solve(&e0).ok_or(Error::NotAUnit)?;
        Ok(Self { order: n, coeffs: y })
    }

    pub fn is_unit(&self) -> bool {
        self.invert_unit().is_ok()
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: Self) -> GroupRingElement {
        self.try_add(rhs).expect("group orders differ")
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: Self) -> GroupRingElement {
        self.try_sub(rhs).expect("group orders differ")
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: Self) -> GroupRingElement {
        self.try_mul(rhs).expect("group orders differ")
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[C{}]({self})", self.order)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRingJson {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for GroupRingElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupRingJson {
            order: self.order,
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupRingElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = GroupRingJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| D::Error::custom(format!("{s:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        GroupRingElement::new(raw.order, coeffs).map_err(D::Error::custom)
    }
}

/// Homomorphism `w: Cₙ → {±1}`, determined by `w(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientationCharacter {
    sign_of_generator: i8,
}

impl OrientationCharacter {
    pub const TRIVIAL: Self = Self { sign_of_generator: 1 };

    pub fn new(sign: i8, order: usize) -> Result<Self> {
        match sign {
            1 => Ok(Self::TRIVIAL),
            -1 if order.is_multiple_of(2) => Ok(Self { sign_of_generator: -1 }),
            _ => Err(Error::BadCharacter { sign, order }),
        }
    }

    pub fn sign_of_generator(self) -> i8 {
        self.sign_of_generator
    }

    pub fn is_trivial(self) -> bool {
        self.sign_of_generator == 1
    }

    pub fn value_on_power(self, k: usize) -> i8 {
        if self.sign_of_generator < 0 && k % 2 == 1 {
            -1
        } else {
            1
        }
    }
}

impl Default for OrientationCharacter {
    fn default() -> Self {
        Self::TRIVIAL
    }
}

/// A class in Wh(Cₙ) represented by a unit of Z[Cₙ] together with its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WhiteheadClass {
    representative: GroupRingElement,
    inverse: GroupRingElement,
}

impl WhiteheadClass {
    pub fn new(representative: GroupRingElement) -> Result<Self> {
        let inverse = representative.invert_unit()?;
        Ok(Self {
            representative,
            inverse,
        })
    }

    pub fn identity(order: usize) -> Self {
        Self {
            representative: GroupRingElement::one(order),
            inverse: GroupRingElement::one(order),
        }
    }

    pub fn order(&self) -> usize {
        self.representative.order()
    }

    pub fn representative(&self) -> &GroupRingElement {
        &self.representative
    }

    pub fn inverse_representative(&self) -> &GroupRingElement {
        &self.inverse
    }

    /// Group law of Wh written multiplicatively.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            representative: self.representative.try_mul(&other.representative)?,
            inverse: self.inverse.try_mul(&other.inverse)?,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            representative: self.inverse.clone(),
            inverse: self.representative.clone(),
        }
    }

    pub fn involution(&self, w: OrientationCharacter) -> Self {
        Self {
            representative: self.representative.involution(w),
            inverse: self.inverse.involution(w),
        }
    }

    pub fn galois_twist(&self, i: i64) -> Result<Self> {
        Ok(Self {
            representative: self.representative.galois_twist(i)?,
            inverse: self.inverse.galois_twist(i)?,
        })
    }

    /// `x · y⁻¹` is a trivial unit `±t^k`.
    pub fn class_equal(&self, other: &Self) -> Result<bool> {
        let q = self.representative.try_mul(&other.inverse)?;
        Ok(q.as_trivial_unit().is_some())
    }

    pub fn is_trivial(&self) -> bool {
        self.representative.as_trivial_unit().is_some()
    }
}

/// Class equality in Wh(Cₙ), with the wrong order reported as an error.
pub fn wh_class_equal(x: &WhiteheadClass, y: &WhiteheadClass) -> Result<bool> {
    x.class_equal(y)
}

/// Unit `2 + 2t − t³ − t⁴ − t⁵` of Z[C₇].
pub fn special_unit_c7() -> GroupRingElement {
    GroupRingElement::from_i64(7, &[2, 2, 0, -1, -1, -1, 0]).expect("seven coefficients")
}

/// Unit `1 − t − t⁴` of Z[C₅].
pub fn special_unit_c5() -> GroupRingElement {
    GroupRingElement::from_i64(5, &[1, -1, 0, 0, -1]).expect("five coefficients")
}

/// Inverse of `i` modulo `n`, if it exists.
pub fn mod_inverse(i: i64, n: i64) -> Option<i64> {
    let e = i.rem_euclid(n).extended_gcd(&n);
    (e.gcd == 1).then(|| e.x.rem_euclid(n))
}
