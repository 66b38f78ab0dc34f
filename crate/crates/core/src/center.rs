//! The center `Z(G, ω)`, i.e. representations of the twisted Drinfeld double.
//!
//! Blocks are indexed by conjugacy classes `C`; the block of `C ∋ g` is
//! `Rep(G_C, ω_g)` with `G_C` the centralizer of `g` and `ω_g` the cocycle
//! of [`crate::cochain::omega_g`].

use alloc::format;
use alloc::vec::Vec;

use crate::category::{category_simples, scalar_mode, validate_category, SimpleObjectDescriptor};
use crate::cochain::{cohomologous, omega_g, require_cocycle, restrict, xi_g, Cochain};
use crate::group::{conjugacy_data, conjugating_element, direct_product, ConjugacyClass, FiniteGroup, Isomorphism, Subgroup};
use crate::projrep::{
    analyze, dual_irrep, find_equivalent, multiplication_defect, pullback_irrep, rescale_irrep, TwistedAlgebra,
    TwistedAlgebraReport,
};
use crate::util::{map_blocks, sub_seed};
use crate::{Error, Options, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSpec {
    group: FiniteGroup,
    omega: Cochain,
}

impl CenterSpec {
    pub fn new(g: &FiniteGroup, omega: &Cochain) -> Result<Self> {
        require_cocycle(g, omega)?;
        Ok(CenterSpec { group: g.clone(), omega: omega.clone() })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CenterBlock {
    pub class: ConjugacyClass,
    /// `ω_g` restricted to the centralizer (local indices).
    pub cocycle: Cochain,
    pub report: TwistedAlgebraReport,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CenterClassification {
    pub blocks: Vec<CenterBlock>,
    pub simples: Vec<SimpleObjectDescriptor>,
    pub characteristic: u64,
}

impl CenterClassification {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn fpdims(&self) -> Vec<usize> {
        self.simples.iter().map(|s| s.fpdim).collect()
    }

    pub fn pcover_fpdims(&self) -> Vec<usize> {
        self.simples.iter().map(|s| s.pcover_fpdim).collect()
    }

    pub fn find(&self, block: usize, irrep_index: usize) -> Option<usize> {
        self.simples.iter().position(|s| s.block == block && s.irrep_index == irrep_index)
    }
}

fn classify(spec: &CenterSpec, characteristic: u64, opts: &Options) -> Result<CenterClassification> {
    let g = &spec.group;
    let classes = conjugacy_data(g);
    let mode = scalar_mode(characteristic, opts);
    let results = map_blocks(&classes, |i, c| -> Result<(Cochain, TwistedAlgebraReport)> {
        let local = Options { seed: sub_seed(opts.seed, i as u64), ..*opts };
        let full = omega_g(g, &spec.omega, c.rep)?;
        let cocycle = restrict(g, &full, &c.centralizer)?;
        let alg = TwistedAlgebra::new(c.centralizer.to_group(g)?, cocycle.clone(), mode)?;
        Ok((cocycle, analyze(&alg, &local)?))
    });
    let mut blocks = Vec::with_capacity(classes.len());
    let mut simples = Vec::new();
    for (i, (class, res)) in classes.into_iter().zip(results).enumerate() {
        let (cocycle, report) = res?;
        if i == 0 && !cocycle.is_zero() {
            return Err(Error::Consistency("the cocycle of the unit class is not trivial".into()));
        }
        let c = class.size();
        let l = class.centralizer.order();
        if c * l != g.order() {
            return Err(Error::Consistency(format!("class of {} violates |C|·|G_C| = |G|", class.rep)));
        }
        let mut cartan = 0;
        for (j, v) in report.irreps.iter().enumerate() {
            let pdim = report.projective_cover_dims[j];
            cartan += pdim * v.dimension;
            simples.push(SimpleObjectDescriptor {
                block: i,
                rep: class.rep,
                stabilizer_order: l,
                irrep_index: j,
                dimension: v.dimension,
                fpdim: c * v.dimension,
                pcover_fpdim: c * pdim,
            });
        }
        if cartan != l {
            return Err(Error::Consistency(format!(
                "class of {}: sum of dim P * dim S is {cartan}, expected {l}",
                class.rep
            )));
        }
        blocks.push(CenterBlock { class, cocycle, report });
    }
    Ok(CenterClassification { blocks, simples, characteristic })
}

/// One block per conjugacy class, with the complex irreps of `(G_C, ω_g)`.
pub fn center_blocks(spec: &CenterSpec, opts: &Options) -> Result<Vec<CenterBlock>> {
    Ok(classify(spec, 0, opts)?.blocks)
}

/// Simples of `Z(G, ω)` with FP dimension `|C|·dim V`. Fails with a
/// consistency error unless the squares add up to `|G|²`.
pub fn center_simples(spec: &CenterSpec, opts: &Options) -> Result<CenterClassification> {
    let cls = classify(spec, 0, opts)?;
    let n = spec.group.order();
    let sum: usize = cls.simples.iter().map(|s| s.fpdim * s.fpdim).sum();
    if sum != n * n {
        return Err(Error::Consistency(format!("FP dimensions square-sum to {sum}, expected {}", n * n)));
    }
    Ok(cls)
}

/// Simples and projective covers of `Z(G, ω)` in characteristic `p`, with
/// `FPdim P = |C|·dim P_{(G_C, ω_g)}(V)`.
pub fn center_projectives(spec: &CenterSpec, p: u64, opts: &Options) -> Result<CenterClassification> {
    if p == 0 {
        return center_simples(spec, opts);
    }
    classify(spec, p, opts)
}

/// Structure constant of the double's multiplication,
/// `θ_a(x, y) = ω(a, x, y) + ω(x, y, (xy)⁻¹a(xy)) − ω(x, x⁻¹ax, y)`.
/// On the centralizer of `a` it agrees with `ω_a`.
fn theta(g: &FiniteGroup, omega: &Cochain, a: usize, x: usize, y: usize) -> i64 {
    let xy = g.mul(x, y);
    let (ax, axy) = (g.conj(g.inv(x), a), g.conj(g.inv(xy), a));
    omega.get3(a, x, y) as i64 + omega.get3(x, y, axy) as i64 - omega.get3(x, ax, y) as i64
}

/// Structure constant of the comultiplication,
/// `γ_x(a, b) = ω(a, b, x) + ω(x, x⁻¹ax, x⁻¹bx) − ω(a, x, x⁻¹bx)`.
fn gamma(g: &FiniteGroup, omega: &Cochain, x: usize, a: usize, b: usize) -> i64 {
    let xi = g.inv(x);
    let (ax, bx) = (g.conj(xi, a), g.conj(xi, b));
    omega.get3(a, b, x) as i64 + omega.get3(x, ax, bx) as i64 - omega.get3(a, x, bx) as i64
}

/// The dual of the simple over `g` with representation `ρ` of `G_g` lives
/// over `g⁻¹` and is `x ↦ ζ^{−γ_x(g⁻¹, g)}·ρ(x)^{-T}`: with this scalar the
/// pairing with `ρ` is invariant under the coproduct. Moving a candidate
/// from the class representative `g₁` to `g⁻¹ = y·g₁·y⁻¹` multiplies by
/// `ζ^{θ(c, y) − θ(y, y⁻¹cy)}`.
fn center_dual_once(spec: &CenterSpec, cls: &CenterClassification, i: usize) -> Result<usize> {
    let (g, omega) = (&spec.group, &spec.omega);
    let s = cls.simples.get(i).ok_or(Error::IndexOutOfRange { index: i, order: cls.simples.len() })?;
    let b0 = &cls.blocks[s.block];
    let g0 = b0.class.rep;
    let ginv = g.inv(g0);
    let j = cls
        .blocks
        .iter()
        .position(|b| b.class.contains(ginv))
        .ok_or_else(|| Error::Consistency("inverse class missing".into()))?;
    let b1 = &cls.blocks[j];
    let y = conjugating_element(g, b1.class.rep, ginv)
        .ok_or_else(|| Error::Consistency("inverse class has no conjugating element".into()))?;
    let c0 = &b0.class.centralizer;
    let (l0, l1) = (c0.to_group(g)?, b1.class.centralizer.to_group(g)?);
    let el = c0.elements();
    let m = omega.modulus();

    let dual = dual_irrep(&l0, &b0.report.irreps[s.irrep_index], &b0.cocycle)?;
    let shift = Cochain::from_fn(&l0, 1, m, |t| -gamma(g, omega, el[t[0]], ginv, g0))?;
    let rho_star = rescale_irrep(&dual.normalized, &shift)?;
    // Both sides must represent θ_{g⁻¹} on the common centralizer.
    let target = Cochain::from_fn(&l0, 2, m, |t| theta(g, omega, ginv, el[t[0]], el[t[1]]))?;
    if multiplication_defect(&l0, &target, &rho_star) > 1e-6 {
        return Err(Error::Consistency("dual representation has the wrong cocycle".into()));
    }
    let yinv = g.inv(y);
    let map: Vec<usize> = el
        .iter()
        .map(|&c| b1.class.centralizer.position(g.conj(yinv, c)))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Consistency("conjugation does not match the centralizers".into()))?;
    let f = Isomorphism::new(&l0, &l1, map)?;
    let nu = Cochain::from_fn(&l0, 1, m, |t| {
        let c = el[t[0]];
        theta(g, omega, ginv, c, y) - theta(g, omega, ginv, y, g.conj(yinv, c))
    })?;
    let moved = b1
        .report
        .irreps
        .iter()
        .map(|v| pullback_irrep(v, &l0, &l1, &f, &nu))
        .collect::<Result<Vec<_>>>()?;
    if let Some(v) = moved.first() {
        if multiplication_defect(&l0, &target, v) > 1e-6 {
            return Err(Error::Consistency("moved representation has the wrong cocycle".into()));
        }
    }
    let idx = find_equivalent(&l0, &rho_star, &moved, 1e-6)
        .ok_or_else(|| Error::Consistency("dual simple not found among the block irreps".into()))?;
    cls.find(j, idx).ok_or_else(|| Error::Consistency("dual simple missing".into()))
}

/// Index of the dual of simple `i`, over the class of `g⁻¹`.
pub fn center_dual(spec: &CenterSpec, cls: &CenterClassification, i: usize) -> Result<usize> {
    let j = center_dual_once(spec, cls, i)?;
    if center_dual_once(spec, cls, j)? != i {
        return Err(Error::Consistency(format!("duality is not an involution at simple {i}")));
    }
    if cls.simples[i].fpdim != cls.simples[j].fpdim {
        return Err(Error::Consistency(format!("duality changes the FP dimension of simple {i}")));
    }
    Ok(j)
}

/// Per-class comparison between the two routes to the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckRow {
    pub class_rep: usize,
    pub center_fpdims: Vec<usize>,
    pub double_fpdims: Vec<usize>,
    /// Whether `ω_g` and the block cocycle of `Z_{(g,1)}` are cohomologous
    /// (`None` when the solver could not decide).
    pub cocycles_cohomologous: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub center_blocks: usize,
    pub double_blocks: usize,
    pub rows: Vec<CrossCheckRow>,
    /// First class whose data disagree.
    pub mismatch: Option<usize>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.center_blocks == self.double_blocks
    }
}

/// `G×G` with `ω̃((a₁,a₂),(b₁,b₂),(c₁,c₂)) = ω(a₁,b₁,c₁) − ω(a₂,b₂,c₂)` and
/// the diagonal subgroup.
pub fn double_data(g: &FiniteGroup, omega: &Cochain) -> Result<(FiniteGroup, Cochain, Subgroup)> {
    let gg = direct_product(g, g)?;
    let n = g.order();
    let wt = Cochain::from_fn(&gg, 3, omega.modulus(), |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        omega.get3(a / n, b / n, c / n) as i64 - omega.get3(a % n, b % n, c % n) as i64
    })?;
    let diag = Subgroup::from_elements(&gg, (0..n).map(|a| a * n + a).collect())?;
    Ok((gg, wt, diag))
}

/// Computes the center a second time as `C(G×G, ω̃, Δ(G), 1)` and compares
/// blocks (matched through `C ↦ Z_{(g,1)}`), simple counts and FP dimensions
/// with [`center_simples`].
pub fn cross_check_via_double(spec: &CenterSpec, opts: &Options) -> Result<CrossCheckReport> {
    let g = &spec.group;
    let n = g.order();
    let center = center_simples(spec, opts)?;
    let (gg, wt, diag) = double_data(g, &spec.omega)?;
    let psi = Cochain::zero(2, n, 1);
    let dspec = validate_category(&gg, &wt, &diag, &psi)?;
    let double = category_simples(&dspec, opts)?;

    let classes: Vec<&ConjugacyClass> = center.blocks.iter().map(|b| &b.class).collect();
    let mut block_of_class = alloc::vec![None; classes.len()];
    for (bi, b) in double.blocks.iter().enumerate() {
        let (x1, x2) = (b.coset.rep / n, b.coset.rep % n);
        let c = g.mul(x1, g.inv(x2));
        let ci = classes
            .iter()
            .position(|cl| cl.contains(c))
            .ok_or_else(|| Error::Consistency("double coset without a class".into()))?;
        if block_of_class[ci].replace(bi).is_some() {
            return Err(Error::Consistency(format!("two double cosets map to the class of {}", classes[ci].rep)));
        }
    }
    let mut rows = Vec::with_capacity(classes.len());
    let mut mismatch = None;
    for (ci, class) in classes.iter().enumerate() {
        let sorted = |mut v: Vec<usize>| {
            v.sort_unstable();
            v
        };
        let center_fpdims = sorted(center.simples.iter().filter(|s| s.block == ci).map(|s| s.fpdim).collect());
        let double_fpdims = match block_of_class[ci] {
            Some(bi) => sorted(double.simples.iter().filter(|s| s.block == bi).map(|s| s.fpdim).collect()),
            None => Vec::new(),
        };
        if center_fpdims != double_fpdims && mismatch.is_none() {
            mismatch = Some(class.rep);
        }
        let cocycles_cohomologous = compare_cocycles(g, &spec.omega, &gg, &wt, &diag, class).ok();
        rows.push(CrossCheckRow { class_rep: class.rep, center_fpdims, double_fpdims, cocycles_cohomologous });
    }
    Ok(CrossCheckReport { center_blocks: classes.len(), double_blocks: double.blocks.len(), rows, mismatch })
}

/// Whether `ω_g` on `G_g` is cohomologous to the inverse of `ξ_{(g,1)}`,
/// moved to `G_g` along `(a, a) ↦ a`.
fn compare_cocycles(
    g: &FiniteGroup,
    omega: &Cochain,
    gg: &FiniteGroup,
    wt: &Cochain,
    diag: &Subgroup,
    class: &ConjugacyClass,
) -> Result<bool> {
    let n = g.order();
    let psi = Cochain::zero(2, n, 1);
    let x = class.rep * n + g.identity();
    let xg = xi_g(gg, &psi, &psi, wt, x, diag, diag)?;
    let cent = &class.centralizer;
    let cg = cent.to_group(g)?;
    let el = xg.stabilizer.elements();
    let mut to_local = alloc::vec![usize::MAX; n];
    for (i, &e) in el.iter().enumerate() {
        let a = e / n;
        let pos = cent.position(a).ok_or_else(|| Error::Consistency("stabilizer outside the centralizer".into()))?;
        to_local[pos] = i;
    }
    let inv_xi = xg.cochain.neg();
    let moved = Cochain::from_fn(&cg, 2, inv_xi.modulus(), |t| inv_xi.get2(to_local[t[0]], to_local[t[1]]) as i64)?;
    let og = restrict(g, &omega_g(g, omega, class.rep)?, cent)?;
    Ok(cohomologous(&cg, &og, &moved)?.is_some())
}
