//! Faces and subcomplexes of the standard simplex Δᵖ (p ≤ 6), encoded as
//! bitmasks, with a collapsibility test for contractibility.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ambient dimension: 7 vertices, so every face mask is below 128.
pub const MAX_AMBIENT: usize = 6;

/// Largest ambient dimension for exhaustive enumeration of subcomplexes.
pub const MAX_ENUMERATION: usize = 3;

/// Nonempty set of vertices of Δᵖ.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(u8);

impl Face {
    pub fn new(mask: u8) -> Result<Self> {
        if mask == 0 || mask >= 1 << (MAX_AMBIENT + 1) {
            return Err(Error::InvalidSubComplex(format!("bad face mask {mask}")));
        }
        Ok(Self(mask))
    }

    pub fn from_vertices(vs: &[usize]) -> Result<Self> {
        let mut m = 0u8;
        for &v in vs {
            if v > MAX_AMBIENT {
                return Err(Error::IndexOutOfRange { index: v, max: MAX_AMBIENT });
            }
            m |= 1 << v;
        }
        Self::new(m)
    }

    pub fn vertex(v: usize) -> Self {
        Self(1 << v)
    }

    /// The top face of Δᵖ.
    pub fn top(p: usize) -> Self {
        Self(((1u16 << (p + 1)) - 1) as u8)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn dim(self) -> usize {
        self.0.count_ones() as usize - 1
    }

    pub fn vertices(self) -> Vec<usize> {
        (0..8).filter(|&v| self.0 & (1 << v) != 0).collect()
    }

    pub fn max_vertex(self) -> usize {
        7 - self.0.leading_zeros() as usize
    }

    pub fn contains(self, other: Face) -> bool {
        self.0 & other.0 == other.0
    }

    /// `∂ᵢσ`: drop the `i`-th vertex in increasing order. `None` for a vertex.
    pub fn boundary(self, i: usize) -> Option<Face> {
        let vs = self.vertices();
        if vs.len() < 2 || i >= vs.len() {
            return None;
        }
        Some(Face(self.0 & !(1 << vs[i])))
    }

    /// Image under the coface map `dʲ: Δ^{p−1} → Δᵖ` skipping vertex `j`.
    pub fn coface(self, j: usize) -> Face {
        let mut m = 0u8;
        for v in self.vertices() {
            m |= 1 << if v < j { v } else { v + 1 };
        }
        Face(m)
    }

    /// Image under the codegeneracy `sʲ: Δ^{p+1} → Δᵖ` identifying `j` and `j+1`.
    pub fn codegeneracy(self, j: usize) -> Face {
        let mut m = 0u8;
        for v in self.vertices() {
            m |= 1 << if v <= j { v } else { v - 1 };
        }
        Face(m)
    }

    pub fn parse(s: &str) -> Result<Face> {
        let vs = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad vertex {c:?} in face {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Face::from_vertices(&vs)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.vertices() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

/// All faces of Δᵖ in increasing mask order.
pub fn all_faces(p: usize) -> impl Iterator<Item = Face> {
    (1u16..(1 << (p + 1))).map(|m| Face(m as u8))
}

/// Downward-closed nonempty set of faces of Δᵖ; bit `m` of `bits` is the face with mask `m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubComplex {
    p: usize,
    bits: u128,
}

fn closure_bits(mut bits: u128) -> u128 {
    let mut out = 0u128;
    while bits != 0 {
        let m = bits.trailing_zeros() as u8;
        bits &= bits - 1;
        // all nonempty submasks of m
        let mut s = m;
        while s != 0 {
            out |= 1u128 << s;
            s = (s - 1) & m;
        }
    }
    out
}

impl SubComplex {
    fn check_p(p: usize) -> Result<()> {
        if p > MAX_AMBIENT {
            return Err(Error::CapExceeded {
                what: "ambient dimension",
                value: p,
                max: MAX_AMBIENT,
            });
        }
        Ok(())
    }

    fn from_bits_unchecked(p: usize, bits: u128) -> Self {
        Self { p, bits }
    }

    pub fn from_faces(p: usize, faces: &[Face]) -> Result<Self> {
        Self::check_p(p)?;
        let mut bits = 0u128;
        for f in faces {
            if f.max_vertex() > p {
                return Err(Error::InvalidSubComplex(format!("face {f} not in Δ^{p}")));
            }
            bits |= 1u128 << f.0;
        }
        if bits == 0 {
            return Err(Error::InvalidSubComplex("empty".into()));
        }
        if closure_bits(bits) != bits {
            return Err(Error::InvalidSubComplex("not downward closed".into()));
        }
        Ok(Self { p, bits })
    }

    /// Smallest subcomplex containing the given faces.
    pub fn generated_by(p: usize, faces: &[Face]) -> Result<Self> {
        Self::check_p(p)?;
        let mut bits = 0u128;
        for f in faces {
            if f.max_vertex() > p {
                return Err(Error::InvalidSubComplex(format!("face {f} not in Δ^{p}")));
            }
            bits |= 1u128 << f.0;
        }
        if bits == 0 {
            return Err(Error::InvalidSubComplex("empty".into()));
        }
        Ok(Self {
            p,
            bits: closure_bits(bits),
        })
    }

    pub fn face(p: usize, f: Face) -> Result<Self> {
        Self::generated_by(p, &[f])
    }

    pub fn full(p: usize) -> Result<Self> {
        Self::face(p, Face::top(p))
    }

    /// `∂ᵢΔᵖ`.
    pub fn boundary_face(p: usize, i: usize) -> Result<Self> {
        if i > p {
            return Err(Error::IndexOutOfRange { index: i, max: p });
        }
        if p == 0 {
            return Err(Error::InvalidSubComplex("Δ^0 has no proper faces".into()));
        }
        Self::face(p, Face::top(p).boundary(i).expect("p ≥ 1"))
    }

    /// `Λᵢᵖ = ⋃_{j≠i} ∂ⱼΔᵖ`.
    pub fn horn(p: usize, i: usize) -> Result<Self> {
        Self::face_horn(p, Face::top(p), i)
    }

    /// `∂Δᵖ`.
    pub fn boundary(p: usize) -> Result<Self> {
        Self::check_p(p)?;
        if p == 0 {
            return Err(Error::InvalidSubComplex("Δ^0 has empty boundary".into()));
        }
        Ok(Self {
            p,
            bits: Self::full(p)?.bits & !(1u128 << Face::top(p).0),
        })
    }

    /// `∂ᵢσ` as a subcomplex of Δᵖ.
    pub fn face_boundary(p: usize, sigma: Face, i: usize) -> Result<Self> {
        let d = sigma.dim();
        if i > d {
            return Err(Error::IndexOutOfRange { index: i, max: d });
        }
        let f = sigma
            .boundary(i)
            .ok_or_else(|| Error::InvalidSubComplex("a vertex has no faces".into()))?;
        Self::face(p, f)
    }

    /// `Λᵢ(σ)`: union of the codimension-one faces of σ other than the `i`-th.
    pub fn face_horn(p: usize, sigma: Face, i: usize) -> Result<Self> {
        let d = sigma.dim();
        if i > d {
            return Err(Error::IndexOutOfRange { index: i, max: d });
        }
        if d == 0 {
            return Err(Error::InvalidSubComplex("a vertex has no horns".into()));
        }
        let faces: Vec<Face> = (0..=d).filter(|&j| j != i).filter_map(|j| sigma.boundary(j)).collect();
        Self::generated_by(p, &faces)
    }

    /// `∂_I σ = ⋃_{i∈I} ∂ᵢσ`; `I` must be nonempty.
    pub fn face_union(p: usize, sigma: Face, idx: &[usize]) -> Result<Self> {
        let d = sigma.dim();
        let mut faces = Vec::new();
        for &i in idx {
            if i > d {
                return Err(Error::IndexOutOfRange { index: i, max: d });
            }
            faces.push(
                sigma
                    .boundary(i)
                    .ok_or_else(|| Error::InvalidSubComplex("a vertex has no faces".into()))?,
            );
        }
        Self::generated_by(p, &faces)
    }

    pub fn ambient(&self) -> usize {
        self.p
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn contains(&self, f: Face) -> bool {
        self.bits & (1u128 << f.0) != 0
    }

    pub fn faces(&self) -> Vec<Face> {
        let mut out = Vec::with_capacity(self.bits.count_ones() as usize);
        let mut b = self.bits;
        while b != 0 {
            out.push(Face(b.trailing_zeros() as u8));
            b &= b - 1;
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Faces not strictly contained in another face of the complex.
    pub fn maximal_faces(&self) -> Vec<Face> {
        let faces = self.faces();
        faces
            .iter()
            .copied()
            .filter(|&f| !faces.iter().any(|&g| g != f && g.contains(f)))
            .collect()
    }

    pub fn is_face(&self) -> bool {
        self.maximal_faces().len() == 1
    }

    pub fn dim(&self) -> usize {
        self.faces().iter().map(|f| f.dim()).max().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces()
            .iter()
            .map(|f| if f.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::AmbientMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            p: self.p,
            bits: self.bits | other.bits,
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let bits = self.bits & other.bits;
        if bits == 0 {
            return Err(Error::EmptyIntersection);
        }
        Ok(Self { p: self.p, bits })
    }

    pub fn is_subcomplex_of(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// Image under the coface map `dʲ: Δ^{p} → Δ^{p+1}`.
    pub fn coface_image(&self, j: usize) -> Result<Self> {
        if j > self.p + 1 {
            return Err(Error::IndexOutOfRange { index: j, max: self.p + 1 });
        }
        let faces: Vec<Face> = self.faces().iter().map(|f| f.coface(j)).collect();
        Self::from_faces(self.p + 1, &faces)
    }

    /// Image under the codegeneracy `sʲ: Δ^{p} → Δ^{p−1}`.
    pub fn codegeneracy_image(&self, j: usize) -> Result<Self> {
        if self.p == 0 || j >= self.p {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: self.p.saturating_sub(1),
            });
        }
        let faces: Vec<Face> = self.faces().iter().map(|f| f.codegeneracy(j)).collect();
        Self::generated_by(self.p - 1, &faces)
    }

    pub fn is_connected(&self) -> bool {
        let faces = self.faces();
        let verts: u8 = faces.iter().fold(0, |m, f| m | f.0);
        let mut seen = 1u8 << verts.trailing_zeros();
        loop {
            let mut next = seen;
            for f in faces.iter().filter(|f| f.dim() == 1) {
                if f.0 & seen != 0 {
                    next |= f.0;
                }
            }
            if next == seen {
                return seen == verts;
            }
            seen = next;
        }
    }

    pub fn is_contractible(&self) -> bool {
        Collapser::default().is_collapsible(self.bits)
    }

    pub fn parse_faces(p: usize, faces: &[&str]) -> Result<Self> {
        let fs = faces.iter().map(|s| Face::parse(s)).collect::<Result<Vec<_>>>()?;
        Self::from_faces(p, &fs)
    }
}

impl PartialOrd for SubComplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: ambient dimension, then lexicographic on the sorted mask lists.
impl Ord for SubComplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.p.cmp(&other.p).then_with(|| self.faces().cmp(&other.faces()))
    }
}

impl fmt::Debug for SubComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.maximal_faces().iter().map(ToString::to_string).collect();
        write!(f, "K{}[{}]", self.p, names.join(","))
    }
}

impl fmt::Display for SubComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.maximal_faces().iter().map(|m| format!("<{m}>")).collect();
        f.write_str(&names.join(" ∪ "))
    }
}

#[derive(Serialize, Deserialize)]
struct SubComplexJson {
    p: usize,
    faces: Vec<String>,
}

impl Serialize for SubComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubComplexJson {
            p: self.p,
            faces: self.faces().iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SubComplexJson::deserialize(d)?;
        let faces: Vec<&str> = raw.faces.iter().map(String::as_str).collect();
        SubComplex::parse_faces(raw.p, &faces).map_err(D::Error::custom)
    }
}

/// Collapsibility search with backtracking, memoized on the face bitset.
#[derive(Default)]
pub struct Collapser {
    memo: HashMap<u128, bool>,
}

impl Collapser {
    pub fn is_contractible(&mut self, k: &SubComplex) -> bool {
        self.is_collapsible(k.bits)
    }

    fn is_collapsible(&mut self, bits: u128) -> bool {
        if bits.count_ones() == 1 {
            return true;
        }
        if let Some(&v) = self.memo.get(&bits) {
            return v;
        }
        let k = SubComplex::from_bits_unchecked(0, bits);
        let ok = k.euler_characteristic() == 1 && k.is_connected() && self.search(bits);
        self.memo.insert(bits, ok);
        ok
    }

    fn search(&mut self, bits: u128) -> bool {
        let faces = SubComplex::from_bits_unchecked(0, bits).faces();
        for &sigma in &faces {
            let mut cofaces = faces.iter().filter(|&&g| g != sigma && g.contains(sigma));
            let (Some(&tau), None) = (cofaces.next(), cofaces.next()) else {
                continue;
            };
            if tau.dim() != sigma.dim() + 1 {
                continue;
            }
            let rest = bits & !(1u128 << sigma.0) & !(1u128 << tau.0);
            if self.is_collapsible(rest) {
                return true;
            }
        }
        false
    }
}

/// Every contractible subcomplex of Δᵖ in canonical order (exhaustive, `p ≤ 3`).
pub fn enumerate_contractible_subcomplexes(p: usize) -> Result<Vec<SubComplex>> {
    Ok(enumerate_subcomplexes(p)?
        .into_iter()
        .filter(|k| k.is_contractible())
        .collect())
}

/// Every nonempty subcomplex of Δᵖ in canonical order (`p ≤ 3`).
pub fn enumerate_subcomplexes(p: usize) -> Result<Vec<SubComplex>> {
    if p > MAX_ENUMERATION {
        return Err(Error::CapExceeded {
            what: "enumeration dimension",
            value: p,
            max: MAX_ENUMERATION,
        });
    }
    let faces: Vec<Face> = all_faces(p).collect();
    let n = faces.len();
    let mut out = Vec::new();
    for subset in 1u32..(1 << n) {
        let mut bits = 0u128;
        for (i, f) in faces.iter().enumerate() {
            if subset & (1 << i) != 0 {
                bits |= 1u128 << f.0;
            }
        }
        if closure_bits(bits) == bits {
            out.push(SubComplex { p, bits });
        }
    }
    out.sort();
    Ok(out)
}
