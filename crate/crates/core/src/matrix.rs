//! Dense integer matrices with exact arithmetic, Smith normal form, and the
//! lattice routines (kernels, spans, integer solving, subquotients) that every
//! homology computation in the crate is built on.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::abgroup::FgAbGroup;
use crate::error::{Error, Result};

/// Row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged input.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols, data })
    }

    /// Builds a `rows × columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, d) in entries.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    fn combine(&self, other: &IntMatrix, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "hstack of {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(out)
    }

    /// Keeps the columns listed in `idx`, in that order.
    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Keeps the first `n` rows.
    pub fn top_rows(&self, n: usize) -> IntMatrix {
        IntMatrix {
            rows: n,
            cols: self.cols,
            data: self.data[..n * self.cols].to_vec(),
        }
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let v = s * k;
                self.data[dst * self.cols + j] += v;
            }
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let v = s * k;
                self.data[i * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
    }
}

/// Result of [`smith_normal_form`]: `left · m · right` is the diagonal matrix
/// whose nonzero entries are `diag`, in divisibility order.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    left_inv: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Inverse of `left`; its columns map cyclic coordinates back to the
    /// original row space.
    pub fn left_inverse(&self) -> &IntMatrix {
        &self.left_inv
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots on the nonzero entry of minimal absolute value in the remaining
/// block, ties broken in row-major order, so transforms are reproducible.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut work = Snf::new(m.clone(), true, true);
    work.run();
    work.finish()
}

struct Snf {
    a: IntMatrix,
    left: Option<(IntMatrix, IntMatrix)>,
    right: Option<IntMatrix>,
    rank: usize,
}

impl Snf {
    fn new(a: IntMatrix, track_left: bool, track_right: bool) -> Self {
        let (r, c) = (a.rows, a.cols);
        Self {
            a,
            left: track_left.then(|| (IntMatrix::identity(r), IntMatrix::identity(r))),
            right: track_right.then(|| IntMatrix::identity(c)),
            rank: 0,
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_rows(i, j);
        if let Some((l, li)) = &mut self.left {
            l.swap_rows(i, j);
            li.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_cols(i, j);
        if let Some(r) = &mut self.right {
            r.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        if let Some((l, li)) = &mut self.left {
            l.add_row_multiple(dst, src, k);
            li.add_col_multiple(src, dst, &-k);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        if let Some(r) = &mut self.right {
            r.add_col_multiple(dst, src, k);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some((l, li)) = &mut self.left {
            l.negate_row(i);
            for r in 0..li.rows {
                let v = std::mem::take(&mut li[(r, i)]);
                li[(r, i)] = -v;
            }
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.a[(bi, bj)].magnitude() <= v.magnitude() => {}
                    _ => {
                        if v.magnitude().is_one() {
                            return Some((i, j));
                        }
                        best = Some((i, j));
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let (rows, cols) = (self.a.rows, self.a.cols);
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.min_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                    self.add_row(i, t, &-q);
                    if !self.a[(i, t)].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..cols {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                    self.add_col(j, t, &-q);
                    if !self.a[(t, j)].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    let (pi, pj) = self.min_entry(t).expect("nonzero remainder present");
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                let pivot = self.a[(t, t)].clone();
                let bad = (t + 1..rows).find(|&i| {
                    (t + 1..cols).any(|j| !self.a[(i, j)].is_multiple_of(&pivot))
                });
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        self.rank = t;
    }

    fn finish(self) -> SmithForm {
        let diag = (0..self.rank).map(|i| self.a[(i, i)].clone()).collect();
        let (left, left_inv) = self
            .left
            .unwrap_or_else(|| (IntMatrix::zeros(0, 0), IntMatrix::zeros(0, 0)));
        SmithForm {
            diag,
            left,
            right: self.right.unwrap_or_else(|| IntMatrix::zeros(0, 0)),
            left_inv,
        }
    }
}

/// Basis (as columns) of the integer kernel `{x : m x = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let mut work = Snf::new(m.clone(), false, true);
    work.run();
    let rank = work.rank;
    let right = work.right.expect("right transform tracked");
    let idx: Vec<usize> = (rank..m.cols).collect();
    right.select_columns(&idx)
}

/// Basis (as columns) of the lattice spanned by the columns of `m`.
pub fn span_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let li = snf.left_inverse();
    let cols: Vec<Vec<BigInt>> = snf
        .diag
        .iter()
        .enumerate()
        .map(|(j, d)| (0..m.rows).map(|i| &li[(i, j)] * d).collect())
        .collect();
    IntMatrix::from_columns(m.rows, &cols)
}

/// Cokernel `Z^rows / (column span)` as a finitely generated abelian group.
pub fn cokernel(m: &IntMatrix) -> FgAbGroup {
    let mut work = Snf::new(m.clone(), false, false);
    work.run();
    let rank = work.rank;
    let mut factors: Vec<BigInt> = (0..rank)
        .map(|i| work.a[(i, i)].clone())
        .filter(|d| !d.is_one())
        .collect();
    factors.extend(std::iter::repeat_n(BigInt::zero(), m.rows - rank));
    FgAbGroup::from_normalized(factors)
}

/// A matrix with a precomputed Smith form, for repeated exact solves of `m x = b`.
#[derive(Clone, Debug)]
pub struct Solver {
    rows: usize,
    cols: usize,
    snf: SmithForm,
}

impl Solver {
    pub fn new(m: &IntMatrix) -> Self {
        Self {
            rows: m.rows,
            cols: m.cols,
            snf: smith_normal_form(m),
        }
    }

    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    /// One integer solution of `m x = b`, or `None` when none exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let y = self.snf.left.mul_vec(b).expect("dimensions checked");
        let rank = self.snf.rank();
        if y[rank..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut z = vec![BigInt::zero(); self.cols];
        for i in 0..rank {
            let (q, r) = y[i].div_rem(&self.snf.diag[i]);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        }
        Some(self.snf.right.mul_vec(&z).expect("dimensions checked"))
    }
}

/// Basis of the lattice `{x : c x ∈ span(rel)}`.
///
/// `rel` is replaced by a basis of its span first so that the projection of
/// the kernel of `[c | -rel]` onto the `x` coordinates is itself a basis.
pub fn solution_lattice(c: &IntMatrix, rel: &IntMatrix) -> Result<IntMatrix> {
    if c.rows != rel.rows {
        return Err(Error::Dimension(format!(
            "constraint rows {} vs relation rows {}",
            c.rows, rel.rows
        )));
    }
    let rel = if rel.cols == 0 { rel.clone() } else { span_basis(rel) };
    let stacked = c.hstack(&rel.scale(&BigInt::from(-1)))?;
    let ker = kernel_basis(&stacked);
    Ok(ker.top_rows(c.cols))
}

/// The group `numerator / (denominator ∩ ...)` where the columns of
/// `numerator` are a lattice basis and the columns of `denominator` lie in
/// that lattice. Exposes cyclic generators and coordinates.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: usize,
    numerator: IntMatrix,
    solver: Solver,
    /// Per cyclic coordinate: order (0 for free), trivial (1) coordinates dropped.
    orders: Vec<BigInt>,
    /// Ambient-space generator for each kept coordinate.
    generators: Vec<Vec<BigInt>>,
    /// Rows of the left transform for each kept coordinate.
    to_cyclic: Vec<Vec<BigInt>>,
}

impl Subquotient {
    pub fn new(numerator: &IntMatrix, denominator: &IntMatrix) -> Result<Self> {
        let ambient = numerator.rows;
        if denominator.rows != ambient {
            return Err(Error::Dimension("subquotient ambient mismatch".into()));
        }
        let k = numerator.cols;
        let solver = Solver::new(numerator);
        if solver.rank() != k {
            return Err(Error::Dimension("numerator columns are not independent".into()));
        }
        let coords: Vec<Vec<BigInt>> = denominator
            .columns()
            .iter()
            .map(|col| {
                solver
                    .solve(col)
                    .ok_or_else(|| Error::NotInSubgroup("denominator outside numerator".into()))
            })
            .collect::<Result<_>>()?;
        let cmat = IntMatrix::from_columns(k, &coords);
        let snf = smith_normal_form(&cmat);
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        let mut to_cyclic = Vec::new();
        for i in 0..k {
            let d = snf.diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if d.is_one() {
                continue;
            }
            let gen_coords = snf.left_inverse().column(i);
            generators.push(numerator.mul_vec(&gen_coords)?);
            to_cyclic.push(snf.left.row(i).to_vec());
            orders.push(d);
        }
        Ok(Self {
            ambient,
            numerator: numerator.clone(),
            solver,
            orders,
            generators,
            to_cyclic,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn numerator(&self) -> &IntMatrix {
        &self.numerator
    }

    pub fn invariant_factors(&self) -> FgAbGroup {
        FgAbGroup::from_normalized(self.orders.clone())
    }

    /// Orders of the cyclic coordinates (0 = free), matching [`Self::generators`].
    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|d| !d.is_zero())
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.orders.iter().product())
    }

    /// Cyclic coordinates of an element of the numerator lattice, reduced
    /// modulo each order. `None` if `x` is outside the numerator.
    pub fn coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = self.solver.solve(x)?;
        Some(
            self.to_cyclic
                .iter()
                .zip(&self.orders)
                .map(|(row, d)| {
                    let v: BigInt = row.iter().zip(&c).map(|(a, b)| a * b).sum();
                    if d.is_zero() {
                        v
                    } else {
                        v.mod_floor(d)
                    }
                })
                .collect(),
        )
    }

    /// Whether `x` represents the zero class.
    pub fn is_zero_class(&self, x: &[BigInt]) -> Option<bool> {
        self.coordinates(x).map(|c| c.iter().all(Zero::is_zero))
    }

    /// Ambient representative of the element with the given cyclic coordinates.
    pub fn element(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.ambient];
        for (c, g) in coords.iter().zip(&self.generators) {
            if c.is_zero() {
                continue;
            }
            for (o, gi) in out.iter_mut().zip(g) {
                *o += c * gi;
            }
        }
        out
    }

    /// All cyclic-coordinate tuples of a finite subquotient, in lexicographic order.
    pub fn enumerate_coordinates(&self) -> Result<Vec<Vec<BigInt>>> {
        if !self.is_finite() {
            return Err(Error::InfiniteModule);
        }
        let mut out = vec![Vec::new()];
        for d in &self.orders {
            let mut next = Vec::new();
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

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_identity() {
        let s = smith_normal_form(&IntMatrix::identity(2));
        assert_eq!(s.diag, ints(&[1, 1]));
    }

    #[test]
    fn snf_two_by_two() {
        let a = m(&[&[2, 4], &[6, 8]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.diag, ints(&[2, 4]));
        let d = s.left.mul(&a).unwrap().mul(&s.right).unwrap();
        assert_eq!(d, m(&[&[2, 0], &[0, 4]]));
        assert_eq!(s.left.mul(s.left_inverse()).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn snf_zero_matrix() {
        let s = smith_normal_form(&IntMatrix::zeros(3, 2));
        assert!(s.diag.is_empty());
    }

    #[test]
    fn snf_empty_matrix() {
        let s = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert!(s.diag.is_empty());
        assert_eq!(s.right, IntMatrix::identity(3));
    }

    #[test]
    fn determinant_bareiss() {
        assert_eq!(m(&[&[2, 4], &[6, 8]]).determinant().unwrap(), BigInt::from(-8));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant().unwrap(), BigInt::zero());
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn solve_detects_divisibility() {
        let s = Solver::new(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.solve(&ints(&[4, 9])), Some(ints(&[2, 3])));
        assert_eq!(s.solve(&ints(&[1, 0])), None);
    }

    #[test]
    fn cokernel_z_mod_two_plus_free() {
        let g = cokernel(&m(&[&[2], &[0]]));
        assert_eq!(g.factors(), &ints(&[2, 0])[..]);
    }

    #[test]
    fn subquotient_of_z_by_2z() {
        let sq = Subquotient::new(&IntMatrix::identity(1), &m(&[&[2]])).unwrap();
        assert_eq!(sq.orders(), &ints(&[2])[..]);
        assert_eq!(sq.coordinates(&ints(&[5])), Some(ints(&[1])));
        assert_eq!(sq.enumerate_coordinates().unwrap().len(), 2);
    }

    #[test]
    fn solution_lattice_mod_two() {
        // {x in Z : x ≡ 0 mod 2}
        let lat = solution_lattice(&m(&[&[1]]), &m(&[&[2]])).unwrap();
        assert_eq!(lat.cols(), 1);
        assert_eq!(lat[(0, 0)].magnitude(), &BigInt::from(2).magnitude().clone());
    }
}
