//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use whtors::matrix::{kernel_basis, IntMatrix, Subquotient};
use whtors::simplicial::{Face, SubComplex};

/// Reduced integral homology vanishes and the complex is nonempty.
pub fn acyclic(k: &SubComplex) -> bool {
    let faces = k.faces();
    if faces.is_empty() {
        return false;
    }
    let top = faces.iter().map(|f| f.dim()).max().unwrap();
    let by_dim: Vec<Vec<Face>> = (0..=top + 1)
        .map(|d| faces.iter().copied().filter(|f| f.dim() == d).collect())
        .collect();
    // ∂_d : C_d → C_{d−1}, with C_{−1} = Z.
    let boundary = |d: usize| -> IntMatrix {
        let cols = &by_dim[d];
        if d == 0 {
            let mut m = IntMatrix::zeros(1, cols.len());
            for j in 0..cols.len() {
                m[(0, j)] = BigInt::one();
            }
            return m;
        }
        let rows = &by_dim[d - 1];
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (j, f) in cols.iter().enumerate() {
            for i in 0..=f.dim() {
                let g = f.boundary(i).unwrap();
                let r = rows.iter().position(|x| *x == g).unwrap();
                m[(r, j)] = BigInt::from(if i % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    };
    for d in 0..=top {
        let cycles = kernel_basis(&boundary(d));
        let bounds = if by_dim[d + 1].is_empty() {
            IntMatrix::zeros(by_dim[d].len(), 0)
        } else {
            boundary(d + 1)
        };
        if cycles.cols() == 0 {
            continue;
        }
        if !Subquotient::new(&cycles, &bounds).unwrap().invariant_factors().is_trivial() {
            return false;
        }
    }
    true
}

/// Contractible by the homology oracle: nonempty, connected, acyclic.
pub fn contractible_by_homology(k: &SubComplex) -> bool {
    acyclic(k) && k.is_connected()
}

/// Determinant by fraction-field Gaussian elimination.
pub fn det_rational(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if piv != c {
            m.swap(piv, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// `Res(f, g)` via the Sylvester matrix; coefficients are listed from degree 0 up.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    det_rational(&rows)
}
