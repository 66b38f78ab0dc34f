use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::Rng;

use super::{
    multiplication_defect, xi_regular_class_count, IrrepRecord, RepMatrices, ScalarMode,
    TwistedAlgebra, TwistedAlgebraReport,
};
use crate::linalg::{eigensplit_hermitian_with_gap, CMatrix, C64};
use crate::{Error, Options, Result};

const SPLIT_ATTEMPTS: usize = 16;
const CHARACTER_TOL: f64 = 1e-6;

/// `exp(2πi·k/m)`.
pub(crate) fn root_of_unity(m: u64, k: u64) -> C64 {
    let angle = 2.0 * core::f64::consts::PI * ((k % m) as f64) / (m as f64);
    C64::new(libm::cos(angle), libm::sin(angle))
}

/// All irreducible `ξ`-representations over `C`, up to equivalence.
///
/// The regular representation is split recursively along the eigenspaces
/// of random Hermitian elements of its commutant. Irreps are sorted by
/// dimension, then by character (larger real parts first), so for trivial
/// `ξ` the trivial representation comes first.
pub fn irreps_char0(alg: &TwistedAlgebra, opts: &Options) -> Result<TwistedAlgebraReport> {
    let ScalarMode::Complex { tol } = alg.mode() else {
        return Err(Error::Invalid("irreps_char0 needs complex mode".into()));
    };
    let l = alg.group();
    let xi = alg.cocycle();
    let n = l.order();
    let m = xi.modulus();
    let regular: Vec<CMatrix> = (0..n)
        .map(|x| {
            let mut mat = CMatrix::zeros(n, n);
            for y in 0..n {
                mat[(l.mul(x, y), y)] = root_of_unity(m, xi.get2(x, y));
            }
            mat
        })
        .collect();
    let mut rng = crate::util::rng(opts.seed);
    let mut found: Vec<Vec<CMatrix>> = Vec::new();
    let mut stack = vec![CMatrix::identity(n)];
    while let Some(q) = stack.pop() {
        let qa = q.adjoint();
        let rho: Vec<CMatrix> = regular.iter().map(|r| qa.mul(r).mul(&q)).collect();
        let norm: f64 = rho.iter().map(|r| r.trace().norm_sqr()).sum();
        let ratio = norm / n as f64;
        if (ratio - 1.0).abs() < 1e-6 {
            found.push(rho);
            continue;
        }
        if ratio < 1.0 - 1e-6 {
            return Err(Error::Numerical(format!("character norm {ratio} below one")));
        }
        let k = q.cols();
        let mut split = None;
        for _ in 0..SPLIT_ATTEMPTS {
            let x = random_hermitian(k, &mut rng);
            let mut a = CMatrix::zeros(k, k);
            for r in &rho {
                a = a.add(&r.mul(&x).mul(&r.adjoint()));
            }
            let a = a.scale(C64::new(1.0 / n as f64, 0.0));
            // Symmetrize away rounding.
            let a = a.add(&a.adjoint()).scale(C64::new(0.5, 0.0));
            let clusters = eigensplit_hermitian_with_gap(&a, tol, opts.cluster_gap)?;
            if clusters.len() > 1 {
                split = Some(clusters);
                break;
            }
        }
        let clusters = split.ok_or(Error::NoProgress { attempts: SPLIT_ATTEMPTS })?;
        for c in clusters.into_iter().rev() {
            let sub = CMatrix::from_columns(k, &c.basis);
            stack.push(q.mul(&sub));
        }
    }
    let mut irreps: Vec<(Vec<C64>, Vec<CMatrix>)> = Vec::new();
    for rho in found {
        let chi: Vec<C64> = rho.iter().map(CMatrix::trace).collect();
        if !irreps.iter().any(|(c, _)| same_character(c, &chi)) {
            irreps.push((chi, rho));
        }
    }
    irreps.sort_by(|a, b| compare(&a.1, &a.0, &b.1, &b.0));
    let regular_class_count = xi_regular_class_count(l, xi)?;
    let dims: Vec<usize> = irreps.iter().map(|(_, r)| r[0].rows()).collect();
    let sum_sq: usize = dims.iter().map(|d| d * d).sum();
    if sum_sq != n {
        return Err(Error::Consistency(format!(
            "irrep dimensions {dims:?} have square sum {sum_sq}, expected {n}"
        )));
    }
    if dims.len() != regular_class_count {
        return Err(Error::Consistency(format!(
            "found {} irreps but {regular_class_count} regular classes",
            dims.len()
        )));
    }
    let records: Vec<IrrepRecord> = irreps
        .into_iter()
        .enumerate()
        .map(|(index, (_, rho))| IrrepRecord {
            index,
            dimension: rho[0].rows(),
            matrices: RepMatrices::Complex(rho),
        })
        .collect();
    for r in &records {
        let defect = multiplication_defect(l, xi, r);
        if defect > 1e-6 {
            return Err(Error::Numerical(format!(
                "irrep {} violates the multiplication law by {defect:e}",
                r.index
            )));
        }
    }
    Ok(TwistedAlgebraReport {
        projective_cover_dims: dims,
        irreps: records,
        regular_class_count,
        field: None,
    })
}

fn random_hermitian(k: usize, rng: &mut impl Rng) -> CMatrix {
    let mut x = CMatrix::zeros(k, k);
    for i in 0..k {
        x[(i, i)] = C64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in i + 1..k {
            let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            x[(i, j)] = z;
            x[(j, i)] = z.conj();
        }
    }
    x
}

fn same_character(a: &[C64], b: &[C64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() <= CHARACTER_TOL)
}

fn compare(ra: &[CMatrix], ca: &[C64], rb: &[CMatrix], cb: &[C64]) -> Ordering {
    ra[0].rows().cmp(&rb[0].rows()).then_with(|| {
        for (x, y) in ca.iter().zip(cb) {
            if (x.re - y.re).abs() > CHARACTER_TOL {
                return y.re.total_cmp(&x.re);
            }
            if (x.im - y.im).abs() > CHARACTER_TOL {
                return y.im.total_cmp(&x.im);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::commutator_pairing;
    use super::*;
    use crate::cochain::Cochain;
    use crate::group::{preset_group, FiniteGroup, Preset};
    use alloc::boxed::Box;

    fn report(g: &FiniteGroup, xi: Cochain) -> TwistedAlgebraReport {
        let alg = TwistedAlgebra::new(g.clone(), xi, ScalarMode::Complex { tol: 1e-9 }).unwrap();
        irreps_char0(&alg, &Options::default()).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = preset_group(&Preset::Cyclic(1), 1).unwrap();
        assert_eq!(report(&g, Cochain::zero(2, 1, 1)).dimensions(), vec![1]);
    }

    #[test]
    fn s3_untwisted() {
        let g = preset_group(&Preset::Symmetric(3), 6).unwrap();
        let r = report(&g, Cochain::zero(2, 6, 1));
        assert_eq!(r.dimensions(), vec![1, 1, 2]);
        let chi = r.irreps[0].character().unwrap();
        assert!(chi.iter().all(|c| (c - C64::new(1.0, 0.0)).norm() < 1e-9));
    }

    #[test]
    fn klein_nondegenerate() {
        let p = Preset::DirectProduct(Box::new(Preset::Cyclic(2)), Box::new(Preset::Cyclic(2)));
        let g = preset_group(&p, 4).unwrap();
        let r = report(&g, commutator_pairing(&g));
        assert_eq!(r.dimensions(), vec![2]);
        assert_eq!(r.regular_class_count, 1);
    }

    #[test]
    fn larger_groups() {
        let q8 = preset_group(&Preset::Quaternion8, 8).unwrap();
        assert_eq!(report(&q8, Cochain::zero(2, 8, 1)).dimensions(), vec![1, 1, 1, 1, 2]);
        let s4 = preset_group(&Preset::Symmetric(4), 24).unwrap();
        assert_eq!(report(&s4, Cochain::zero(2, 24, 1)).dimensions(), vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn deterministic_for_a_seed() {
        let g = preset_group(&Preset::Dihedral(4), 8).unwrap();
        let a = report(&g, Cochain::zero(2, 8, 1));
        let b = report(&g, Cochain::zero(2, 8, 1));
        assert_eq!(a, b);
    }
}
