use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Result};

pub type C64 = Complex64;

const MAX_SWEEPS: usize = 100;

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix { rows, cols, data: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<C64>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<C64>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    pub fn adjoint(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x -= y;
        }
        out
    }

    pub fn scale(&self, c: C64) -> CMatrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x *= c;
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }
}

impl core::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

/// One eigenvalue cluster: the mean eigenvalue and an orthonormal basis of
/// the corresponding invariant subspace.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenCluster {
    pub value: f64,
    pub basis: Vec<Vec<C64>>,
}

/// Eigendecomposition of a Hermitian matrix with clusters separated by at
/// least `1e-6`; see [`eigensplit_hermitian_with_gap`].
pub fn eigensplit_hermitian(a: &CMatrix, tol: f64) -> Result<Vec<EigenCluster>> {
    eigensplit_hermitian_with_gap(a, tol, 1e-6)
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.
///
/// Eigenvalues within `10·tol·max(1, ‖A‖)` of their neighbour are merged.
/// A gap larger than that but smaller than `cluster_gap` is ambiguous and
/// reported as an error, so callers can retry with another seed or tolerance.
/// Clusters come in increasing order of eigenvalue.
pub fn eigensplit_hermitian_with_gap(a: &CMatrix, tol: f64, cluster_gap: f64) -> Result<Vec<EigenCluster>> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Numerical("eigensplit needs a square matrix".into()));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let scale = a.norm_inf().max(1.0);
    let skew = a.sub(&a.adjoint()).norm_inf();
    if skew > tol * scale {
        return Err(Error::Numerical(format!("matrix is not Hermitian (deviation {skew:e})")));
    }
    let (values, vectors) = jacobi(a);
    let merge = 10.0 * tol * scale;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut clusters: Vec<(Vec<f64>, Vec<Vec<C64>>)> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for &i in &order {
        let v = values[i];
        let gap = v - last;
        if clusters.is_empty() || gap > merge {
            if !clusters.is_empty() && gap < cluster_gap {
                return Err(Error::Numerical(format!(
                    "ambiguous eigenvalue gap {gap:e}; retry with another seed or tolerance"
                )));
            }
            clusters.push((Vec::new(), Vec::new()));
        }
        let c = clusters.last_mut().unwrap();
        c.0.push(v);
        c.1.push(vectors.column(i));
        last = v;
    }
    let out: Vec<EigenCluster> = clusters
        .into_iter()
        .map(|(vals, basis)| EigenCluster {
            value: vals.iter().sum::<f64>() / vals.len() as f64,
            basis,
        })
        .collect();
    let residual = reconstruct(&out, n).sub(a).max_abs();
    if residual > 100.0 * tol * scale {
        return Err(Error::Numerical(format!("eigen reconstruction residual {residual:e}")));
    }
    Ok(out)
}

/// `Σ λ·P_λ` over the clusters.
pub(crate) fn reconstruct(clusters: &[EigenCluster], n: usize) -> CMatrix {
    let mut out = CMatrix::zeros(n, n);
    for c in clusters {
        for v in &c.basis {
            for i in 0..n {
                for j in 0..n {
                    out[(i, j)] += v[i] * v[j].conj() * c.value;
                }
            }
        }
    }
    out
}

/// Returns eigenvalues and a unitary whose columns are eigenvectors.
fn jacobi(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = a.rows();
    let mut m = a.clone();
    for i in 0..n {
        m[(i, i)] = C64::new(m[(i, i)].re, 0.0);
    }
    let mut v = CMatrix::identity(n);
    let total: f64 = m.data.iter().map(|x| x.norm_sqr()).sum::<f64>().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)].norm_sqr())
            .sum();
        if off <= 1e-30 * total {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let r = apq.norm();
                if r <= 1e-300 {
                    continue;
                }
                let phase = apq / r;
                let (app, aqq) = (m[(p, p)].re, m[(q, q)].re);
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                // U = D·J with D = diag(1, e^{-iφ}) on (p, q) and J the real rotation.
                let upp = C64::new(c, 0.0);
                let upq = C64::new(s, 0.0);
                let uqp = -phase.conj() * s;
                let uqq = phase.conj() * c;
                for k in 0..n {
                    let (akp, akq) = (m[(k, p)], m[(k, q)]);
                    m[(k, p)] = akp * upp + akq * uqp;
                    m[(k, q)] = akp * upq + akq * uqq;
                }
                for k in 0..n {
                    let (apk, aqk) = (m[(p, k)], m[(q, k)]);
                    m[(p, k)] = upp.conj() * apk + uqp.conj() * aqk;
                    m[(q, k)] = upq.conj() * apk + uqq.conj() * aqk;
                }
                m[(p, q)] = C64::new(0.0, 0.0);
                m[(q, p)] = C64::new(0.0, 0.0);
                m[(p, p)] = C64::new(m[(p, p)].re, 0.0);
                m[(q, q)] = C64::new(m[(q, q)].re, 0.0);
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = vkp * upp + vkq * uqp;
                    v[(k, q)] = vkp * upq + vkq * uqq;
                }
            }
        }
    }
    ((0..n).map(|i| m[(i, i)].re).collect(), v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn random_hermitian(n: usize, seed: u64) -> CMatrix {
        let mut rng = crate::util::rng(seed);
        let mut a = CMatrix::zeros(n, n);
        for i in 0..n {
            a[(i, i)] = C64::new(rng.gen_range(-1.0..1.0), 0.0);
            for j in i + 1..n {
                let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                a[(i, j)] = z;
                a[(j, i)] = z.conj();
            }
        }
        a
    }

    #[test]
    fn identity_is_one_cluster() {
        let c = eigensplit_hermitian(&CMatrix::identity(4), 1e-9).unwrap();
        assert_eq!(c.len(), 1);
        assert!((c[0].value - 1.0).abs() < 1e-12);
        assert_eq!(c[0].basis.len(), 4);
    }

    #[test]
    fn diagonal_two_clusters() {
        let mut a = CMatrix::zeros(2, 2);
        a[(0, 0)] = C64::new(1.0, 0.0);
        a[(1, 1)] = C64::new(2.0, 0.0);
        let c = eigensplit_hermitian(&a, 1e-9).unwrap();
        assert_eq!(c.len(), 2);
        assert!((c[0].value - 1.0).abs() < 1e-12 && (c[1].value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn random_hermitian_reconstructs() {
        for seed in 0..5 {
            let a = random_hermitian(6, seed);
            let c = eigensplit_hermitian(&a, 1e-9).unwrap();
            assert!(reconstruct(&c, 6).sub(&a).max_abs() < 1e-7);
            let basis: Vec<Vec<C64>> = c.iter().flat_map(|x| x.basis.clone()).collect();
            let u = CMatrix::from_columns(6, &basis);
            assert!(u.adjoint().mul(&u).sub(&CMatrix::identity(6)).max_abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut a = CMatrix::zeros(2, 2);
        a[(0, 1)] = C64::new(1.0, 0.0);
        assert!(matches!(eigensplit_hermitian(&a, 1e-9), Err(Error::Numerical(_))));
    }

    #[test]
    fn ambiguous_gap_is_reported() {
        let mut a = CMatrix::zeros(2, 2);
        a[(1, 1)] = C64::new(1e-7, 0.0);
        assert!(matches!(eigensplit_hermitian(&a, 1e-9), Err(Error::Numerical(_))));
    }
}
