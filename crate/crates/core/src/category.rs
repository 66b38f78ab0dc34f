//! The group-theoretical categories `C(G, ω, H, ψ)` and their module
//! categories `M((H, ψ), (K, η))`.
//!
//! Simples of `M((H, ψ), (K, η))` are pairs `(Z, V)` with `Z` an `(H, K)`
//! double coset with representative `g` and `V` an irreducible
//! representation of the twisted group algebra of `L^g = H ∩ gKg⁻¹` with
//! cocycle `ξ_g⁻¹`. The category itself is the case `(K, η) = (H, ψ)`.

use alloc::format;
use alloc::vec::Vec;

use crate::cochain::{check_dpsi, cohomologous, psi_g, require_cocycle, restrict, solve_d2_equals, xi_g, Cochain, D2Solution};
use crate::group::{
    double_coset_witness, double_cosets, enumerate_subgroups, product_is_whole, DoubleCoset, FiniteGroup, Isomorphism,
    Subgroup,
};
use crate::projrep::{
    analyze, dual_irrep, find_equivalent, is_nondegenerate, multiplication_defect, pullback_irrep,
    xi_regular_class_count, IrrepRecord, RepMatrices, ScalarMode, TwistedAlgebra, TwistedAlgebraReport,
};
use crate::util::{lcm, map_blocks, sub_seed};
use crate::{Error, Options, Result};

/// A validated quadruple `(G, ω, H, ψ)` with `dψ = ω|_H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategorySpec {
    group: FiniteGroup,
    omega: Cochain,
    h: Subgroup,
    psi: Cochain,
}

impl CategorySpec {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    /// `ψ` on `H`, in local indices.
    pub fn psi(&self) -> &Cochain {
        &self.psi
    }
}

/// Checks that `ω` is a 3-cocycle on `G` and that `dψ = ω|_H`.
///
/// A failure of the second condition is reported as
/// [`Error::Incompatible`] with a triple of `G`-indices where it fails.
pub fn validate_category(g: &FiniteGroup, omega: &Cochain, h: &Subgroup, psi: &Cochain) -> Result<CategorySpec> {
    require_cocycle(g, omega)?;
    h.check_parent(g)?;
    check_dpsi(g, omega, h, psi)?;
    Ok(CategorySpec { group: g.clone(), omega: omega.clone(), h: h.clone(), psi: psi.clone() })
}

/// A module category `M((H, ψ), (K, η))` over `C(G, ω, H, ψ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCatSpec {
    base: CategorySpec,
    k: Subgroup,
    eta: Cochain,
}

impl ModuleCatSpec {
    pub fn new(base: &CategorySpec, k: &Subgroup, eta: &Cochain) -> Result<Self> {
        k.check_parent(&base.group)?;
        check_dpsi(&base.group, &base.omega, k, eta)?;
        Ok(ModuleCatSpec { base: base.clone(), k: k.clone(), eta: eta.clone() })
    }

    /// The regular module category, `(K, η) = (H, ψ)`.
    pub fn regular(base: &CategorySpec) -> Self {
        ModuleCatSpec { base: base.clone(), k: base.h.clone(), eta: base.psi.clone() }
    }

    pub fn base(&self) -> &CategorySpec {
        &self.base
    }

    pub fn k(&self) -> &Subgroup {
        &self.k
    }

    pub fn eta(&self) -> &Cochain {
        &self.eta
    }
}

/// One double coset together with its twisted algebra data.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub coset: DoubleCoset,
    /// `ξ_g` on `L^g` (local indices of `coset.stabilizer`). The simples of
    /// the block are representations for the inverse cocycle `−ξ_g`.
    pub xi: Cochain,
    pub report: TwistedAlgebraReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleObjectDescriptor {
    /// Index of the block (double coset or conjugacy class).
    pub block: usize,
    /// Representative of the block.
    pub rep: usize,
    /// Order of the stabilizer subgroup the irreps live on.
    pub stabilizer_order: usize,
    /// Index into the block's report.
    pub irrep_index: usize,
    pub dimension: usize,
    pub fpdim: usize,
    /// FP dimension of the projective cover; equals `fpdim` in
    /// characteristic zero.
    pub pcover_fpdim: usize,
}

/// Simples of a module category (or of a category), grouped by block.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub blocks: Vec<Block>,
    pub simples: Vec<SimpleObjectDescriptor>,
    /// `0` for the complex engine, `p` for the modular one.
    pub characteristic: u64,
}

impl Classification {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn fpdims(&self) -> Vec<usize> {
        self.simples.iter().map(|s| s.fpdim).collect()
    }

    pub fn pcover_fpdims(&self) -> Vec<usize> {
        self.simples.iter().map(|s| s.pcover_fpdim).collect()
    }

    /// Index of the simple in `block` with the given irrep index.
    pub fn find(&self, block: usize, irrep_index: usize) -> Option<usize> {
        self.simples.iter().position(|s| s.block == block && s.irrep_index == irrep_index)
    }
}

pub(crate) fn scalar_mode(characteristic: u64, opts: &Options) -> ScalarMode {
    if characteristic == 0 {
        ScalarMode::Complex { tol: opts.tol }
    } else {
        ScalarMode::FiniteField { p: characteristic, e: None }
    }
}

fn block_data(spec: &ModuleCatSpec, x: usize, mode: ScalarMode, opts: &Options) -> Result<(Subgroup, Cochain, TwistedAlgebraReport)> {
    let b = &spec.base;
    let xg = xi_g(&b.group, &b.psi, &spec.eta, &b.omega, x, &b.h, &spec.k)?;
    let lg = xg.stabilizer.to_group(&b.group)?;
    let alg = TwistedAlgebra::new(lg, xg.cochain.neg(), mode)?;
    let report = analyze(&alg, opts)?;
    Ok((xg.stabilizer, xg.cochain, report))
}

/// The block report computed at an arbitrary element `x` of a double coset
/// instead of its canonical representative.
pub fn block_report_at(spec: &ModuleCatSpec, x: usize, characteristic: u64, opts: &Options) -> Result<TwistedAlgebraReport> {
    spec.base.group.check_index(x)?;
    Ok(block_data(spec, x, scalar_mode(characteristic, opts), opts)?.2)
}

fn classify(spec: &ModuleCatSpec, characteristic: u64, opts: &Options) -> Result<Classification> {
    let b = &spec.base;
    let g = &b.group;
    let cosets = double_cosets(g, &b.h, &spec.k)?;
    let mode = scalar_mode(characteristic, opts);
    let results = map_blocks(&cosets, |i, z| {
        let local = Options { seed: sub_seed(opts.seed, i as u64), ..*opts };
        block_data(spec, z.rep, mode, &local)
    });
    let (hk, nk) = (b.h.order(), spec.k.order());
    let mut total = 0;
    let mut blocks = Vec::with_capacity(cosets.len());
    let mut simples = Vec::new();
    for (i, (z, res)) in cosets.into_iter().zip(results).enumerate() {
        let (_, xi, report) = res?;
        let l = z.stabilizer.order();
        if hk * nk % l != 0 || hk * nk / l != z.size() {
            return Err(Error::Consistency(format!(
                "double coset of {} has size {}, expected |H||K|/|L| = {hk}*{nk}/{l}",
                z.rep,
                z.size()
            )));
        }
        total += z.size();
        let mut cartan = 0;
        for (j, v) in report.irreps.iter().enumerate() {
            let pdim = report.projective_cover_dims[j];
            cartan += pdim * v.dimension;
            simples.push(SimpleObjectDescriptor {
                block: i,
                rep: z.rep,
                stabilizer_order: l,
                irrep_index: j,
                dimension: v.dimension,
                fpdim: exact_div(nk * v.dimension, l)?,
                pcover_fpdim: exact_div(nk * pdim, l)?,
            });
        }
        if cartan != l {
            return Err(Error::Consistency(format!(
                "block of {}: sum of dim P * dim S is {cartan}, expected {l}",
                z.rep
            )));
        }
        blocks.push(Block { coset: z, xi, report });
    }
    if total != g.order() {
        return Err(Error::Consistency(format!("double cosets cover {total} of {} elements", g.order())));
    }
    Ok(Classification { blocks, simples, characteristic })
}

fn exact_div(a: usize, b: usize) -> Result<usize> {
    if a % b != 0 {
        return Err(Error::Consistency(format!("FP dimension {a}/{b} is not an integer")));
    }
    Ok(a / b)
}

/// Simples of `M((H, ψ), (K, η))` over `C`, grouped by double coset.
///
/// The FP dimension of `(Z, V)` is `|K|·dim V / |L^g|`.
pub fn module_cat_simples(spec: &ModuleCatSpec, opts: &Options) -> Result<Classification> {
    classify(spec, 0, opts)
}

/// Rank of `M((H, ψ), (K, η))`: the number of `ξ_g⁻¹`-regular classes of
/// `L^g`, summed over double cosets. No representations are constructed.
pub fn module_cat_rank(spec: &ModuleCatSpec) -> Result<usize> {
    let b = &spec.base;
    let mut rank = 0;
    for z in double_cosets(&b.group, &b.h, &spec.k)? {
        let xg = xi_g(&b.group, &b.psi, &spec.eta, &b.omega, z.rep, &b.h, &spec.k)?;
        rank += xi_regular_class_count(&xg.stabilizer.to_group(&b.group)?, &xg.cochain.neg())?;
    }
    Ok(rank)
}

/// Simples of `C(G, ω, H, ψ)` over `C`, with FP dimensions `|H|·dim V / |L^g|`.
/// Fails with a consistency error unless the squares of the FP dimensions
/// add up to `|G|`.
pub fn category_simples(spec: &CategorySpec, opts: &Options) -> Result<Classification> {
    let cls = classify(&ModuleCatSpec::regular(spec), 0, opts)?;
    let sum: usize = cls.simples.iter().map(|s| s.fpdim * s.fpdim).sum();
    if sum != spec.group.order() {
        return Err(Error::Consistency(format!(
            "FP dimensions square-sum to {sum}, expected {}",
            spec.group.order()
        )));
    }
    Ok(cls)
}

/// Simples and projective covers of `C(G, ω, H, ψ)` in characteristic `p`
/// (`p = 0` gives the semisimple answer).
pub fn projective_cover_data(spec: &CategorySpec, p: u64, opts: &Options) -> Result<Classification> {
    if p == 0 {
        return category_simples(spec, opts);
    }
    let cls = classify(&ModuleCatSpec::regular(spec), p, opts)?;
    let sum: usize = cls.simples.iter().map(|s| s.fpdim * s.pcover_fpdim).sum();
    if sum != spec.group.order() {
        return Err(Error::Consistency(format!(
            "sum of FPdim(S) * FPdim(P(S)) is {sum}, expected {}",
            spec.group.order()
        )));
    }
    Ok(cls)
}

/// Phase bookkeeping in the free bimodule `A·(δ_x)·A` over `A = k_ψ[H]`
/// (product `δ_a·δ_b = ζ^{−ψ(a,b)}δ_{ab}`) in `G`-graded spaces with
/// associator `ζ^{ω}`. Basis vectors `a·(v·b)` are written `(a, b)`; every
/// action is monomial, so only exponents mod `m` are tracked.
struct FreeBimodule<'a> {
    g: &'a FiniteGroup,
    omega: &'a Cochain,
    h: &'a Subgroup,
    psi: &'a Cochain,
    m: i64,
}

impl<'a> FreeBimodule<'a> {
    fn new(spec: &'a CategorySpec) -> Self {
        let m = lcm(spec.omega.modulus(), spec.psi.modulus()) as i64;
        FreeBimodule { g: &spec.group, omega: &spec.omega, h: &spec.h, psi: &spec.psi, m }
    }

    fn w(&self, a: usize, b: usize, c: usize) -> i64 {
        self.omega.get3(a, b, c) as i64 * (self.m / self.omega.modulus() as i64)
    }

    fn p(&self, a: usize, b: usize) -> i64 {
        let (i, j) = (self.h.position(a).expect("in H"), self.h.position(b).expect("in H"));
        self.psi.get2(i, j) as i64 * (self.m / self.psi.modulus() as i64)
    }

    fn left(&self, x: usize, c: usize, (a, b): (usize, usize)) -> (i64, (usize, usize)) {
        let g = self.g;
        (-self.p(c, a) - self.w(c, a, g.mul(x, b)), (g.mul(c, a), b))
    }

    fn right(&self, x: usize, (a, b): (usize, usize), d: usize) -> (i64, (usize, usize)) {
        let g = self.g;
        (self.w(a, g.mul(x, b), d) + self.w(x, b, d) - self.p(b, d), (a, g.mul(b, d)))
    }

    /// `m ↦ (c·m)·d` on a basis vector.
    fn both(&self, x: usize, c: usize, d: usize, v: (usize, usize)) -> (i64, (usize, usize)) {
        let (p1, v) = self.left(x, c, v);
        let (p2, v) = self.right(x, v, d);
        (p1 + p2, v)
    }

    /// On the grade-`y` part, `m ↦ ζ^{ν}(l·m)·(y⁻¹l⁻¹y)` is a representation
    /// of `L^y` for exactly `−ξ_y`.
    fn nu(&self, y: usize, l: usize) -> i64 {
        let g = self.g;
        let c = g.conj(g.inv(y), l);
        let k = g.inv(c);
        self.p(c, k) - self.w(l, y, k) - self.w(y, k, c) - self.w(k, c, k) - self.w(l, g.mul(y, k), c)
    }
}

/// The dual of simple `V` (a representation for `−ξ_{g0}` on `L0`) written
/// over the block with representative `g1 = h·g0⁻¹·k0`, as a representation
/// of `L1 = L^{g1}` for `−ξ_{g1}`.
///
/// A map `A → M ⊗_A N` pairs the grade-`g0` fiber of `M` with the
/// grade-`g0⁻¹` fiber of `N`, which forces `N` to carry `ρ(l)ᵀ` at
/// `l' = g0⁻¹l⁻¹g0` up to an explicit phase. The fiber is then moved to `g1`
/// along `m ↦ (h·m)·k0`.
#[allow(clippy::too_many_arguments)]
fn transported_dual(
    spec: &CategorySpec,
    (l0, xi0, v): (&Subgroup, &Cochain, &IrrepRecord),
    (l1, xi1): (&Subgroup, &Cochain),
    g0: usize,
    g1: usize,
    h: usize,
    k0: usize,
) -> Result<IrrepRecord> {
    let g = &spec.group;
    let fb = FreeBimodule::new(spec);
    let (lg0, lg1) = (l0.to_group(g)?, l1.to_group(g)?);
    let gi = g.inv(g0);
    let t = g.mul(g0, g.inv(h));
    let map: Vec<usize> = l1
        .elements()
        .iter()
        .map(|&x| l0.position(g.conj(t, x)))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Consistency("conjugation does not match the stabilizers".into()))?;
    let iso = Isomorphism::new(&lg1, &lg0, map)?;
    let e = g.identity();
    let bad = core::cell::Cell::new(false);
    let phase = Cochain::from_fn(&lg1, 1, fb.m as u64, |a| {
        let l1e = l1.elements()[a[0]];
        let lp = g.conj(g.inv(h), l1e);
        let l = g.conj(g0, g.inv(lp));
        let lpi = g.inv(lp);
        // Pairing at (g0, g0⁻¹).
        let phi = -fb.w(l, g0, gi) - fb.w(g.mul(l, g0), lp, lpi) + fb.p(lp, lpi) + fb.w(g0, lpi, gi);
        let big_phi = fb.w(g0, gi, l) - phi + fb.p(lpi, lp) + fb.w(lpi, lp, g.mul(gi, l)) - fb.w(lp, gi, l);
        // Moving from g0⁻¹ to g1 in the free bimodule on a grade-g0⁻¹ vector.
        let k_lp = g.conj(g0, lpi);
        let k1 = g.conj(g.inv(g1), g.inv(l1e));
        let (a1, u) = fb.both(gi, lp, k_lp, (e, e));
        let (a2, u) = fb.both(gi, h, k0, u);
        let (b1, w) = fb.both(gi, h, k0, (e, e));
        let (b2, w) = fb.both(gi, l1e, k1, w);
        if u != w {
            bad.set(true);
        }
        let tau = b1 + b2 - a1 - a2;
        fb.nu(g1, l1e) + tau - big_phi - fb.nu(g0, l)
    })?;
    if bad.get() {
        return Err(Error::Consistency("fiber transport does not close up".into()));
    }
    let dual = dual_irrep(&lg0, v, &xi0.neg())?;
    let w = pullback_irrep(&dual.contragredient, &lg1, &lg0, &iso, &phase)?;
    let defect = multiplication_defect(&lg1, &xi1.neg(), &w);
    if defect > 1e-6 {
        return Err(Error::Consistency(format!("dual representation has multiplication defect {defect:e}")));
    }
    Ok(w)
}

fn dual_once(spec: &CategorySpec, cls: &Classification, i: usize) -> Result<usize> {
    let g = &spec.group;
    let s = cls.simples.get(i).ok_or(Error::IndexOutOfRange { index: i, order: cls.simples.len() })?;
    let b0 = &cls.blocks[s.block];
    let g0 = b0.coset.rep;
    let ginv = g.inv(g0);
    let j = cls
        .blocks
        .iter()
        .position(|b| b.coset.contains(ginv))
        .ok_or_else(|| Error::Consistency("inverse double coset missing".into()))?;
    let b1 = &cls.blocks[j];
    // h⁻¹·g1·k = g0⁻¹, so g1 = h·g0⁻¹·k⁻¹.
    let (h, k) = double_coset_witness(g, &spec.h, &spec.h, b1.coset.rep, ginv)
        .ok_or_else(|| Error::Consistency("no double coset witness".into()))?;
    let irrep = &b0.report.irreps[s.irrep_index];
    let w = transported_dual(
        spec,
        (&b0.coset.stabilizer, &b0.xi, irrep),
        (&b1.coset.stabilizer, &b1.xi),
        g0,
        b1.coset.rep,
        h,
        g.inv(k),
    )?;
    let lg1 = b1.coset.stabilizer.to_group(g)?;
    let idx = find_equivalent(&lg1, &w, &b1.report.irreps, 1e-6)
        .ok_or_else(|| Error::Consistency("dual simple not found among the block irreps".into()))?;
    cls.find(j, idx).ok_or_else(|| Error::Consistency("dual simple missing".into()))
}

/// Index of the dual of simple `i`: it lives over the inverse double coset,
/// with the contragredient representation moved there by conjugation.
/// Duality is checked to be an involution preserving FP dimensions.
pub fn simple_dual(spec: &CategorySpec, cls: &Classification, i: usize) -> Result<usize> {
    let j = dual_once(spec, cls, i)?;
    if dual_once(spec, cls, j)? != i {
        return Err(Error::Consistency(format!("duality is not an involution at simple {i}")));
    }
    if cls.simples[i].fpdim != cls.simples[j].fpdim {
        return Err(Error::Consistency(format!("duality changes the FP dimension of simple {i}")));
    }
    Ok(j)
}

/// A witness that `(H, ψ)` and `(H', ψ')` define equivalent module categories:
/// `H' = g⁻¹Hg` and `ψ_g − ψ' = dμ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEquivalence {
    pub g: usize,
    pub witness: Cochain,
}

/// Whether `(H, ψ)` and `(H', ψ')` are equivalent pairs for `(G, ω)`.
pub fn pair_equivalent(
    g: &FiniteGroup,
    omega: &Cochain,
    first: (&Subgroup, &Cochain),
    second: (&Subgroup, &Cochain),
) -> Result<Option<PairEquivalence>> {
    let (h, psi) = first;
    let (h2, psi2) = second;
    check_dpsi(g, omega, h, psi)?;
    check_dpsi(g, omega, h2, psi2)?;
    if h.order() != h2.order() {
        return Ok(None);
    }
    let hg2 = h2.to_group(g)?;
    for x in 0..g.order() {
        if h.conjugate(g, g.inv(x)).elements() != h2.elements() {
            continue;
        }
        let (_, px) = psi_g(g, psi, omega, x, h)?;
        if let Some(witness) = cohomologous(&hg2, &px, psi2)? {
            return Ok(Some(PairEquivalence { g: x, witness }));
        }
    }
    Ok(None)
}

/// A pair `(H, ψ)` with `dψ = ω|_H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePair {
    pub h: Subgroup,
    pub psi: Cochain,
}

/// Solves `dψ = ω|_H`, enlarging the modulus if needed. A solution exists
/// over `C^×` if and only if one exists with values in `μ_{m·|H|}`.
fn solve_psi(hg: &FiniteGroup, target: &Cochain, m: u64) -> Result<Option<D2Solution>> {
    let n = hg.order() as u64;
    let mut tried = Vec::new();
    for cand in [m, 2 * m, m * n] {
        if tried.contains(&cand) {
            continue;
        }
        tried.push(cand);
        if let Some(sol) = solve_d2_equals(hg, target, cand)? {
            return Ok(Some(sol));
        }
    }
    Ok(None)
}

/// Representatives of the equivalence classes of pairs `(H, ψ)`, i.e. of the
/// indecomposable module categories over `Coh(G, ω)`.
pub fn enumerate_module_categories(g: &FiniteGroup, omega: &Cochain, opts: &Options) -> Result<Vec<ModulePair>> {
    require_cocycle(g, omega)?;
    let m = lcm(omega.modulus(), g.order() as u64);
    let mut out: Vec<ModulePair> = Vec::new();
    for h in enumerate_subgroups(g, opts.max_enumeration_order)? {
        let hg = h.to_group(g)?;
        let target = restrict(g, omega, &h)?;
        let Some(sol) = solve_psi(&hg, &target, m)? else {
            continue;
        };
        for t in &sol.h2_transversal {
            let psi = sol.particular.add(t)?;
            let mut known = false;
            for p in &out {
                if pair_equivalent(g, omega, (&p.h, &p.psi), (&h, &psi))?.is_some() {
                    known = true;
                    break;
                }
            }
            if !known {
                out.push(ModulePair { h: h.clone(), psi });
            }
        }
    }
    Ok(out)
}

/// Classes of fiber functors on `C(G, ω, H, ψ)`: pairs `(K, η)` with
/// `HK = G` and `ξ_e⁻¹` nondegenerate on `H ∩ K`. Each is re-checked to give
/// a module category of rank one.
pub fn fiber_functors(spec: &CategorySpec, opts: &Options) -> Result<Vec<ModulePair>> {
    let g = &spec.group;
    let mut out = Vec::new();
    for pair in enumerate_module_categories(g, &spec.omega, opts)? {
        if !product_is_whole(g, &spec.h, &pair.h)? {
            continue;
        }
        let xe = xi_g(g, &spec.psi, &pair.psi, &spec.omega, g.identity(), &spec.h, &pair.h)?;
        if !is_nondegenerate(&xe.stabilizer.to_group(g)?, &xe.cochain.neg())? {
            continue;
        }
        let rank = module_cat_simples(&ModuleCatSpec::new(spec, &pair.h, &pair.psi)?, opts)?.rank();
        if rank != 1 {
            return Err(Error::Consistency(format!("fiber functor candidate has rank {rank}")));
        }
        out.push(pair);
    }
    Ok(out)
}

/// Outcome of comparing the projective cover of the unit with that of its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularityReport {
    pub characteristic: u64,
    pub unit: usize,
    pub dual_of_unit: usize,
    pub unit_pcover_fpdim: usize,
    pub dual_pcover_fpdim: usize,
    pub consistent: bool,
}

pub(crate) fn is_trivial_irrep(v: &IrrepRecord) -> bool {
    if v.dimension != 1 {
        return false;
    }
    match &v.matrices {
        RepMatrices::Complex(ms) => ms.iter().all(|m| (m[(0, 0)].re - 1.0).abs() < 1e-6 && m[(0, 0)].im.abs() < 1e-6),
        RepMatrices::Modular(ms) => ms.iter().all(|m| m.get(0, 0) == 1),
    }
}

/// Compares the projective cover of the unit object with that of its dual.
/// Equality is necessary for unimodularity.
pub fn unimodularity_probe(spec: &CategorySpec, p: u64, opts: &Options) -> Result<UnimodularityReport> {
    let cls = projective_cover_data(spec, p, opts)?;
    let e = spec.group.identity();
    let unit = cls
        .simples
        .iter()
        .position(|s| {
            let b = &cls.blocks[s.block];
            b.coset.contains(e) && is_trivial_irrep(&b.report.irreps[s.irrep_index])
        })
        .ok_or_else(|| Error::Consistency("no unit object".into()))?;
    let dual_of_unit = simple_dual(spec, &cls, unit)?;
    let (a, b) = (cls.simples[unit].pcover_fpdim, cls.simples[dual_of_unit].pcover_fpdim);
    Ok(UnimodularityReport {
        characteristic: p,
        unit,
        dual_of_unit,
        unit_pcover_fpdim: a,
        dual_pcover_fpdim: b,
        consistent: a == b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::preset_omega_cyclic;
    use crate::group::{preset_group, subgroup_closure, Preset};
    use alloc::boxed::Box;
    use alloc::vec;

    fn grp(p: Preset) -> FiniteGroup {
        preset_group(&p, 1000).unwrap()
    }

    fn klein() -> FiniteGroup {
        grp(Preset::DirectProduct(Box::new(Preset::Cyclic(2)), Box::new(Preset::Cyclic(2))))
    }

    fn trivial_spec(g: &FiniteGroup, h: Subgroup) -> CategorySpec {
        let psi = Cochain::zero(2, h.order(), 1);
        validate_category(g, &Cochain::zero(3, g.order(), 1), &h, &psi).unwrap()
    }

    fn sorted(mut v: Vec<usize>) -> Vec<usize> {
        v.sort_unstable();
        v
    }

    #[test]
    fn incompatible_psi_is_rejected() {
        let g = grp(Preset::Cyclic(2));
        let omega = preset_omega_cyclic(2, 1).unwrap();
        let h = Subgroup::whole(&g);
        let err = validate_category(&g, &omega, &h, &Cochain::zero(2, 2, 1)).unwrap_err();
        assert!(matches!(err, Error::Incompatible { .. }));
    }

    #[test]
    fn coh_and_rep() {
        let g = grp(Preset::Symmetric(3));
        let coh = category_simples(&trivial_spec(&g, Subgroup::trivial(&g)), &Options::default()).unwrap();
        assert_eq!(coh.fpdims(), vec![1; 6]);
        let rep = category_simples(&trivial_spec(&g, Subgroup::whole(&g)), &Options::default()).unwrap();
        assert_eq!(rep.fpdims(), vec![1, 1, 2]);
    }

    #[test]
    fn s3_with_transposition() {
        let g = grp(Preset::Symmetric(3));
        let h = subgroup_closure(&g, &[g.find_label("(12)").unwrap()]).unwrap();
        let spec = trivial_spec(&g, h);
        let cls = category_simples(&spec, &Options::default()).unwrap();
        assert_eq!(sorted(cls.fpdims()), vec![1, 1, 2]);
        let counts: Vec<usize> = cls.blocks.iter().map(|b| b.report.irreps.len()).collect();
        let sizes: Vec<usize> = cls.blocks.iter().map(|b| b.coset.size()).collect();
        assert_eq!(counts, vec![2, 1]);
        assert_eq!(sizes, vec![2, 4]);
        for i in 0..cls.rank() {
            let j = simple_dual(&spec, &cls, i).unwrap();
            assert_eq!(cls.simples[i].fpdim, cls.simples[j].fpdim);
        }
        let two = cls.simples.iter().position(|s| s.fpdim == 2).unwrap();
        assert_eq!(simple_dual(&spec, &cls, two).unwrap(), two);
    }

    #[test]
    fn duals_in_coh_invert_elements() {
        let g = grp(Preset::Cyclic(4));
        let spec = trivial_spec(&g, Subgroup::trivial(&g));
        let cls = category_simples(&spec, &Options::default()).unwrap();
        for i in 0..4 {
            let j = simple_dual(&spec, &cls, i).unwrap();
            assert_eq!(cls.simples[j].rep, g.inv(cls.simples[i].rep));
        }
    }

    #[test]
    fn rep_s3_projectives_in_char_3() {
        let g = grp(Preset::Symmetric(3));
        let spec = trivial_spec(&g, Subgroup::whole(&g));
        let cls = projective_cover_data(&spec, 3, &Options::default()).unwrap();
        assert_eq!(cls.fpdims(), vec![1, 1]);
        assert_eq!(cls.pcover_fpdims(), vec![3, 3]);
        let probe = unimodularity_probe(&spec, 3, &Options::default()).unwrap();
        assert!(probe.consistent);
        assert_eq!(probe.unit_pcover_fpdim, 3);
    }

    #[test]
    fn coprime_characteristic_gives_fusion_data() {
        let g = grp(Preset::Symmetric(3));
        let h = subgroup_closure(&g, &[g.find_label("(12)").unwrap()]).unwrap();
        let spec = trivial_spec(&g, h);
        let cls = projective_cover_data(&spec, 5, &Options::default()).unwrap();
        assert_eq!(cls.fpdims(), cls.pcover_fpdims());
    }

    #[test]
    fn module_categories_of_small_groups() {
        let opts = Options::default();
        let z2 = grp(Preset::Cyclic(2));
        assert_eq!(enumerate_module_categories(&z2, &Cochain::zero(3, 2, 1), &opts).unwrap().len(), 2);
        let v = klein();
        assert_eq!(enumerate_module_categories(&v, &Cochain::zero(3, 4, 1), &opts).unwrap().len(), 6);
        let one = grp(Preset::Cyclic(1));
        assert_eq!(enumerate_module_categories(&one, &Cochain::zero(3, 1, 1), &opts).unwrap().len(), 1);
        // Only the trivial subgroup carries a module category for the
        // nontrivial class on Z2.
        let w = preset_omega_cyclic(2, 1).unwrap();
        let pairs = enumerate_module_categories(&z2, &w, &opts).unwrap();
        assert_eq!(pairs.len(), 1);
        assert!(pairs[0].h.is_trivial());
    }

    #[test]
    fn pair_equivalence_cases() {
        let g = klein();
        let omega = Cochain::zero(3, 4, 1);
        let whole = Subgroup::whole(&g);
        let zero = Cochain::zero(2, 4, 1);
        let eq = pair_equivalent(&g, &omega, (&whole, &zero), (&whole, &zero)).unwrap().unwrap();
        assert_eq!(eq.g, g.identity());
        let pairing = crate::projrep::tests::commutator_pairing(&g);
        assert!(pair_equivalent(&g, &omega, (&whole, &zero), (&whole, &pairing)).unwrap().is_none());
    }

    #[test]
    fn conjugate_pairs_are_equivalent() {
        let g = grp(Preset::Symmetric(3));
        let omega = Cochain::zero(3, 6, 1);
        let h = subgroup_closure(&g, &[g.find_label("(12)").unwrap()]).unwrap();
        let psi = Cochain::zero(2, 2, 1);
        for x in 0..6 {
            let (h2, psi2) = psi_g(&g, &psi, &omega, x, &h).unwrap();
            assert!(pair_equivalent(&g, &omega, (&h, &psi), (&h2, &psi2)).unwrap().is_some());
        }
    }

    #[test]
    fn fiber_functor_counts() {
        let opts = Options::default();
        let s3 = grp(Preset::Symmetric(3));
        let rep = trivial_spec(&s3, Subgroup::whole(&s3));
        let ff = fiber_functors(&rep, &opts).unwrap();
        assert_eq!(ff.len(), 1);
        assert!(ff[0].h.is_trivial());
        let v = klein();
        let coh = trivial_spec(&v, Subgroup::trivial(&v));
        let ff = fiber_functors(&coh, &opts).unwrap();
        assert_eq!(ff.len(), 2);
        assert!(ff.iter().all(|p| p.h.is_whole()));
    }

    #[test]
    fn representative_independence() {
        let g = grp(Preset::Dihedral(4));
        let h = subgroup_closure(&g, &[g.find_label("s").unwrap()]).unwrap();
        let k = subgroup_closure(&g, &[g.find_label("rs").unwrap()]).unwrap();
        let base = trivial_spec(&g, h.clone());
        let spec = ModuleCatSpec::new(&base, &k, &Cochain::zero(2, 2, 1)).unwrap();
        let cls = module_cat_simples(&spec, &Options::default()).unwrap();
        for b in &cls.blocks {
            for &x in &b.coset.elements {
                let r = block_report_at(&spec, x, 0, &Options::default()).unwrap();
                assert_eq!(r.dimensions(), b.report.dimensions());
            }
        }
    }

    #[test]
    fn normal_subgroup_blocks() {
        let g = grp(Preset::Symmetric(3));
        let h = subgroup_closure(&g, &[g.find_label("(123)").unwrap()]).unwrap();
        let cls = category_simples(&trivial_spec(&g, h.clone()), &Options::default()).unwrap();
        assert_eq!(cls.blocks.len(), 2);
        assert!(cls.blocks.iter().all(|b| b.coset.stabilizer == h && b.coset.size() == 3));
        assert_eq!(module_cat_rank(&ModuleCatSpec::regular(&trivial_spec(&g, h))).unwrap(), cls.rank());
    }
}
