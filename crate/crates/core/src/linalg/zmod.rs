use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::util::{gcd, xgcd};
use crate::{Error, Result};

/// Dense matrix with entries in `Z/m`, `m ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixModM {
    rows: usize,
    cols: usize,
    modulus: u64,
    data: Vec<u64>,
}

impl MatrixModM {
    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Invalid(format!("modulus must be at least 2, got {modulus}")));
        }
        Ok(MatrixModM { rows, cols, modulus, data: vec![0; rows * cols] })
    }

    pub fn from_rows(rows: &[Vec<u64>], cols: usize, modulus: u64) -> Result<Self> {
        let mut out = Self::zeros(rows.len(), cols, modulus)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Invalid(format!("row {i} has length {}, expected {cols}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.modulus;
    }

    /// Adds `v` to entry `(i, j)`.
    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: u64) {
        let m = self.modulus;
        let e = &mut self.data[i * self.cols + j];
        *e = (*e + v % m) % m;
    }

    pub fn mul_vec(&self, x: &[u64]) -> Vec<u64> {
        let m = self.modulus as u128;
        (0..self.rows)
            .map(|i| {
                let s: u128 = (0..self.cols)
                    .map(|j| self.get(i, j) as u128 * (x[j] as u128 % m))
                    .sum();
                (s % m) as u64
            })
            .collect()
    }
}

/// Solution set of `A·x = b` over `Z/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModSolution {
    pub particular: Vec<u64>,
    /// Generators of `{x : A·x = 0}` as a `Z/m`-module.
    pub kernel: Vec<Vec<u64>>,
}

/// Howell form of the row module spanned by `rows` over `Z/m`.
///
/// The result is in echelon form, pivots divide `m`, entries above a pivot
/// are reduced below it, and for every `k` the rows vanishing on the first
/// `k` columns span all vectors of the module vanishing there.
pub fn howell_form(rows: &[Vec<u64>], cols: usize, modulus: u64) -> Vec<Vec<u64>> {
    let m = modulus as i128;
    let mut work: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128 % m).collect())
        .collect();
    let mut pivot = 0usize;
    for col in 0..cols {
        if pivot >= work.len() {
            break;
        }
        let Some(first) = (pivot..work.len()).find(|&r| work[r][col] != 0) else {
            continue;
        };
        work.swap(pivot, first);
        for r in pivot + 1..work.len() {
            let b = work[r][col];
            if b == 0 {
                continue;
            }
            let a = work[pivot][col];
            let (g, s, t) = xgcd(a, b);
            let (ag, bg) = (a / g, b / g);
            // [s t; -b/g a/g] has determinant 1, so the row module is unchanged.
            for c in col..cols {
                let (p, q) = (work[pivot][c], work[r][c]);
                work[pivot][c] = (s * p + t * q).rem_euclid(m);
                work[r][c] = (ag * q - bg * p).rem_euclid(m);
            }
        }
        let a = work[pivot][col];
        if a == 0 {
            continue;
        }
        let u = unit_normalizer(a as u64, modulus) as i128;
        for c in col..cols {
            work[pivot][c] = (work[pivot][c] * u).rem_euclid(m);
        }
        let g = work[pivot][col];
        for r in 0..pivot {
            let q = work[r][col] / g;
            if q != 0 {
                for c in col..cols {
                    work[r][c] = (work[r][c] - q * work[pivot][c]).rem_euclid(m);
                }
            }
        }
        let ann = m / g;
        if ann != m {
            let extra: Vec<i128> = work[pivot].iter().map(|&x| (x * ann).rem_euclid(m)).collect();
            if extra.iter().any(|&x| x != 0) {
                work.push(extra);
            }
        }
        pivot += 1;
    }
    work.truncate(pivot);
    work.into_iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| r.into_iter().map(|x| x as u64).collect())
        .collect()
}

/// A unit `u` of `Z/m` with `u·a ≡ gcd(a, m)`.
fn unit_normalizer(a: u64, m: u64) -> u64 {
    let g = gcd(a, m);
    let mg = m / g;
    if mg == 1 {
        return 1;
    }
    let (_, s, _) = xgcd((a / g % mg) as i128, mg as i128);
    let base = s.rem_euclid(mg as i128) as u64;
    let mut u = base;
    while gcd(u, m) != 1 {
        u += mg;
    }
    u % m
}

/// Reduces `v` against the rows of a Howell basis whose pivot lies before
/// column `limit`; returns the remainder and the coefficients used.
fn reduce(basis: &[Vec<u64>], v: &[u64], modulus: u64, limit: usize) -> (Vec<u64>, Vec<u64>) {
    let m = modulus as i128;
    let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    let mut coeffs = vec![0u64; basis.len()];
    for (i, row) in basis.iter().enumerate() {
        let col = row.iter().position(|&x| x != 0).unwrap();
        if col >= limit {
            break;
        }
        let g = row[col] as i128;
        let q = v[col] / g;
        if q != 0 {
            coeffs[i] = q as u64;
            for c in col..v.len() {
                v[c] = (v[c] - q * row[c] as i128).rem_euclid(m);
            }
        }
    }
    (v.into_iter().map(|x| x as u64).collect(), coeffs)
}

/// Solves `A·x = b` over `Z/m`: one particular solution plus generators of
/// the kernel, or `None` when `b` is outside the column span.
pub fn solve_mod_m(a: &MatrixModM, b: &[u64]) -> Result<Option<ModSolution>> {
    if b.len() != a.rows {
        return Err(Error::Invalid(format!(
            "right-hand side has length {}, expected {}",
            b.len(),
            a.rows
        )));
    }
    let m = a.modulus;
    let (r, n) = (a.rows, a.cols);
    // Rows of [Aᵀ | I]: the row module is {(yᵀAᵀ, yᵀ)}.
    let aug: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            let mut row = Vec::with_capacity(r + n);
            row.extend((0..r).map(|i| a.get(i, j)));
            row.extend((0..n).map(|k| u64::from(k == j)));
            row
        })
        .collect();
    let h = howell_form(&aug, r + n, m);
    let kernel: Vec<Vec<u64>> = h
        .iter()
        .filter(|row| row[..r].iter().all(|&x| x == 0))
        .map(|row| row[r..].to_vec())
        .collect();
    let mut target = Vec::with_capacity(r + n);
    target.extend(b.iter().map(|&x| x % m));
    target.extend(core::iter::repeat(0).take(n));
    let (rem, _) = reduce(&h, &target, m, r);
    if rem[..r].iter().any(|&x| x != 0) {
        return Ok(None);
    }
    let particular = rem[r..].iter().map(|&x| (m - x) % m).collect();
    Ok(Some(ModSolution { particular, kernel }))
}
