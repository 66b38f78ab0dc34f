//! Twisted group algebras `k_ξ[L]` (basis `u_x`, `u_x·u_y = ζ^{ξ(x,y)}·u_{xy}`)
//! and their irreducible representations, over `C` and over finite fields.

mod char0;
mod modular;

use alloc::format;
use alloc::vec::Vec;

use crate::cochain::{is_cocycle, Cochain};
use crate::group::{conjugacy_data, FiniteGroup, Isomorphism};
use crate::linalg::{CMatrix, MatrixFq, C64};
use crate::{Error, Options, Result};

pub use char0::irreps_char0;
pub use modular::{hom_dimension, modular_report};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ScalarMode {
    Complex { tol: f64 },
    /// Characteristic `p`; `e = None` picks the smallest field holding the
    /// roots of unity the cocycle needs.
    FiniteField { p: u64, e: Option<u32> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwistedAlgebra {
    group: FiniteGroup,
    cocycle: Cochain,
    mode: ScalarMode,
}

impl TwistedAlgebra {
    /// Checks that `cocycle` is a normalized 2-cocycle on `group`.
    pub fn new(group: FiniteGroup, cocycle: Cochain, mode: ScalarMode) -> Result<Self> {
        if cocycle.degree() != 2 {
            return Err(Error::InvalidCochain("twisting cocycle must have degree 2".into()));
        }
        let cert = is_cocycle(&group, &cocycle)?;
        if let Some(witness) = cert.witness {
            return Err(Error::NotCocycle { witness });
        }
        if let ScalarMode::Complex { tol } = mode {
            if !(tol > 0.0) {
                return Err(Error::Invalid("tolerance must be positive".into()));
            }
        }
        Ok(TwistedAlgebra { group, cocycle, mode })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn cocycle(&self) -> &Cochain {
        &self.cocycle
    }

    pub fn mode(&self) -> ScalarMode {
        self.mode
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RepMatrices {
    Complex(Vec<CMatrix>),
    Modular(Vec<MatrixFq>),
}

impl RepMatrices {
    pub fn len(&self) -> usize {
        match self {
            RepMatrices::Complex(m) => m.len(),
            RepMatrices::Modular(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IrrepRecord {
    pub index: usize,
    pub dimension: usize,
    /// `ρ(x)` for every element `x` of the group, in index order.
    pub matrices: RepMatrices,
}

impl IrrepRecord {
    /// Traces of `ρ(x)`; `None` in positive characteristic.
    pub fn character(&self) -> Option<Vec<C64>> {
        match &self.matrices {
            RepMatrices::Complex(ms) => Some(ms.iter().map(CMatrix::trace).collect()),
            RepMatrices::Modular(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwistedAlgebraReport {
    pub irreps: Vec<IrrepRecord>,
    pub regular_class_count: usize,
    /// Dimension of the projective cover of each irrep (equal to the
    /// dimension in the semisimple case).
    pub projective_cover_dims: Vec<usize>,
    /// `(p, e)` of the field used in positive characteristic.
    pub field: Option<(u64, u32)>,
}

impl TwistedAlgebraReport {
    pub fn dimensions(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.dimension).collect()
    }
}

/// Whether `x` is `ξ`-regular: `ξ(x,y) = ξ(y,x)` for all `y` commuting with `x`.
pub fn is_xi_regular(l: &FiniteGroup, xi: &Cochain, x: usize) -> bool {
    (0..l.order())
        .filter(|&y| l.commute(x, y))
        .all(|y| xi.get2(x, y) == xi.get2(y, x))
}

/// Number of conjugacy classes of `ξ`-regular elements; class invariance of
/// regularity is checked along the way.
pub fn xi_regular_class_count(l: &FiniteGroup, xi: &Cochain) -> Result<usize> {
    xi.check_group(l)?;
    let mut count = 0;
    for class in conjugacy_data(l) {
        let reg = is_xi_regular(l, xi, class.rep);
        if class.elements.iter().any(|&x| is_xi_regular(l, xi, x) != reg) {
            return Err(Error::Consistency(format!(
                "xi-regularity is not constant on the class of element {}",
                class.rep
            )));
        }
        count += usize::from(reg);
    }
    Ok(count)
}

/// Whether `k_ξ[L]` is a simple algebra, i.e. only the identity class is
/// `ξ`-regular.
pub fn is_nondegenerate(l: &FiniteGroup, xi: &Cochain) -> Result<bool> {
    let nondeg = xi_regular_class_count(l, xi)? == 1;
    if nondeg {
        let n = l.order();
        let r = libm::round(libm::sqrt(n as f64)) as usize;
        if r * r != n {
            return Err(Error::Consistency(format!(
                "nondegenerate cocycle on a group of non-square order {n}"
            )));
        }
    }
    Ok(nondeg)
}

/// `ρ'(x') = ρ(iso⁻¹(x'))` on the target group, with the cocycle moved along.
pub fn transport_irrep(
    v: &IrrepRecord,
    xi: &Cochain,
    src: &FiniteGroup,
    dst: &FiniteGroup,
    iso: &Isomorphism,
) -> Result<(IrrepRecord, Cochain)> {
    if iso.order() != src.order() || src.order() != dst.order() || v.matrices.len() != src.order() {
        return Err(Error::Invalid("isomorphism does not match the representation".into()));
    }
    // Re-verify that the map is multiplicative.
    Isomorphism::new(src, dst, (0..src.order()).map(|x| iso.apply(x)).collect())?;
    let back: Vec<usize> = (0..dst.order()).map(|y| iso.apply_inverse(y)).collect();
    let matrices = match &v.matrices {
        RepMatrices::Complex(ms) => RepMatrices::Complex(back.iter().map(|&x| ms[x].clone()).collect()),
        RepMatrices::Modular(ms) => RepMatrices::Modular(back.iter().map(|&x| ms[x].clone()).collect()),
    };
    let cocycle = Cochain::from_fn(dst, 2, xi.modulus(), |t| xi.get2(back[t[0]], back[t[1]]) as i64)?;
    Ok((IrrepRecord { index: v.index, dimension: v.dimension, matrices }, cocycle))
}

/// The contragredient of an irrep.
#[derive(Clone, Debug, PartialEq)]
pub struct DualIrrep {
    /// `σ(x) = ρ(x⁻¹)ᵀ`.
    pub contragredient: IrrepRecord,
    /// The cocycle `σ` satisfies: `(x, y) ↦ ξ(y⁻¹, x⁻¹)`.
    pub cocycle: Cochain,
    /// `μ(x) = −ξ(x, x⁻¹)`, so that `ζ^{μ(x)}·σ(x) = ρ(x)^{-T}`.
    pub witness: Cochain,
    /// `ρ(x)^{-T}`, a representation for `−ξ`.
    pub normalized: IrrepRecord,
}

pub fn dual_irrep(l: &FiniteGroup, v: &IrrepRecord, xi: &Cochain) -> Result<DualIrrep> {
    xi.check_group(l)?;
    let n = l.order();
    if v.matrices.len() != n {
        return Err(Error::Invalid("representation does not match the group".into()));
    }
    let inv: Vec<usize> = (0..n).map(|x| l.inv(x)).collect();
    let cocycle = Cochain::from_fn(l, 2, xi.modulus(), |t| xi.get2(inv[t[1]], inv[t[0]]) as i64)?;
    let witness = Cochain::from_fn(l, 1, xi.modulus(), |t| -(xi.get2(t[0], inv[t[0]]) as i64))?;
    let contragredient = IrrepRecord {
        index: v.index,
        dimension: v.dimension,
        matrices: match &v.matrices {
            RepMatrices::Complex(ms) => RepMatrices::Complex((0..n).map(|x| ms[inv[x]].transpose()).collect()),
            RepMatrices::Modular(ms) => RepMatrices::Modular((0..n).map(|x| ms[inv[x]].transpose()).collect()),
        },
    };
    let normalized = rescale_irrep(&contragredient, &witness)?;
    if multiplication_defect(l, &xi.neg(), &normalized) > 1e-6 {
        return Err(Error::Consistency("inverse transpose does not represent the inverse cocycle".into()));
    }
    Ok(DualIrrep { contragredient, cocycle, witness, normalized })
}

/// `σ(x) = ζ^{ν(x)}·ρ(f(x))` for an isomorphism `f: src → dst` and a
/// 1-cochain `ν` on `src`.
pub fn pullback_irrep(v: &IrrepRecord, src: &FiniteGroup, dst: &FiniteGroup, f: &Isomorphism, nu: &Cochain) -> Result<IrrepRecord> {
    if f.order() != src.order() || src.order() != dst.order() || v.matrices.len() != dst.order() {
        return Err(Error::Invalid("isomorphism does not match the representation".into()));
    }
    nu.check_group(src)?;
    let matrices = match &v.matrices {
        RepMatrices::Complex(ms) => RepMatrices::Complex((0..src.order()).map(|x| ms[f.apply(x)].clone()).collect()),
        RepMatrices::Modular(ms) => RepMatrices::Modular((0..src.order()).map(|x| ms[f.apply(x)].clone()).collect()),
    };
    rescale_irrep(&IrrepRecord { index: v.index, dimension: v.dimension, matrices }, nu)
}

/// Maximum deviation from `ρ(x)ρ(y) = ζ^{ξ(x,y)}ρ(xy)` over all pairs
/// (complex mode), or `0.0`/`1.0` for exact agreement/failure (modular mode).
pub fn multiplication_defect(l: &FiniteGroup, xi: &Cochain, v: &IrrepRecord) -> f64 {
    let n = l.order();
    match &v.matrices {
        RepMatrices::Complex(ms) => {
            let mut worst: f64 = 0.0;
            for x in 0..n {
                for y in 0..n {
                    let lhs = ms[x].mul(&ms[y]);
                    let rhs = ms[l.mul(x, y)].scale(char0::root_of_unity(xi.modulus(), xi.get2(x, y)));
                    worst = worst.max(lhs.sub(&rhs).max_abs());
                }
            }
            worst
        }
        RepMatrices::Modular(ms) => {
            let field = ms[0].field();
            let Ok(zeta) = field.root_of_unity(xi.modulus()) else {
                return 1.0;
            };
            for x in 0..n {
                for y in 0..n {
                    let lhs = ms[x].mul(&ms[y]);
                    let rhs = ms[l.mul(x, y)].scale(field.pow(zeta, xi.get2(x, y)));
                    if lhs != rhs {
                        return 1.0;
                    }
                }
            }
            0.0
        }
    }
}

/// Irreps and projective covers of `alg`, with the engine of its scalar mode.
pub fn analyze(alg: &TwistedAlgebra, opts: &Options) -> Result<TwistedAlgebraReport> {
    match alg.mode() {
        ScalarMode::Complex { .. } => irreps_char0(alg, opts),
        ScalarMode::FiniteField { .. } => modular_report(alg, opts),
    }
}

/// `x ↦ ζ^{μ(x)}·ρ(x)`, which turns a `ξ`-representation into a
/// `(ξ + dμ)`-representation.
pub fn rescale_irrep(v: &IrrepRecord, mu: &Cochain) -> Result<IrrepRecord> {
    let m = mu.modulus();
    let matrices = match &v.matrices {
        RepMatrices::Complex(ms) => RepMatrices::Complex(
            ms.iter().enumerate().map(|(x, r)| r.scale(char0::root_of_unity(m, mu.get1(x)))).collect(),
        ),
        RepMatrices::Modular(ms) => {
            let field = ms[0].field().clone();
            let zeta = field.root_of_unity(m).map_err(|_| {
                Error::FieldCap(format!("F_{} has no primitive {m}-th root of unity", field.size()))
            })?;
            RepMatrices::Modular(
                ms.iter().enumerate().map(|(x, r)| r.scale(field.pow(zeta, mu.get1(x)))).collect(),
            )
        }
    };
    Ok(IrrepRecord { index: v.index, dimension: v.dimension, matrices })
}

/// Index of the irrep in `candidates` equivalent to `v` (same cocycle).
pub fn find_equivalent(l: &FiniteGroup, v: &IrrepRecord, candidates: &[IrrepRecord], tol: f64) -> Option<usize> {
    match &v.matrices {
        RepMatrices::Complex(_) => {
            let chi = v.character()?;
            candidates.iter().position(|c| {
                c.dimension == v.dimension
                    && c.character().is_some_and(|d| {
                        d.iter().zip(&chi).all(|(a, b)| (a - b).norm() <= tol)
                    })
            })
        }
        RepMatrices::Modular(_) => candidates
            .iter()
            .position(|c| c.dimension == v.dimension && hom_dimension(l, v, c) > 0),
    }
}
