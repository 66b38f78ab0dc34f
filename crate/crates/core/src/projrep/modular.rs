use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{xi_regular_class_count, IrrepRecord, RepMatrices, ScalarMode, TwistedAlgebra, TwistedAlgebraReport};
use crate::cochain::Cochain;
use crate::group::{subgroup_closure, FiniteGroup};
use crate::linalg::{nullspace_fq, FiniteField, MatrixFq};
use crate::{Error, Options, Result};

/// Largest algebra dimension handled in positive characteristic.
pub const MODULAR_ORDER_BOUND: usize = 64;
const CHOP_ATTEMPTS: usize = 64;
const LIFT_ITERATIONS: usize = 64;

/// Simple modules and projective covers of `k_ξ[L]` over a finite field.
///
/// The regular module is chopped into composition factors (random algebra
/// elements, kernel spinning, Norton's irreducibility test), factors are
/// identified through Hom spaces, and projective covers `A·e` come from
/// primitive idempotents lifted from the semisimple quotient. If some simple
/// is not absolutely irreducible the computation is repeated over a field
/// that is guaranteed to split the algebra.
pub fn modular_report(alg: &TwistedAlgebra, opts: &Options) -> Result<TwistedAlgebraReport> {
    let ScalarMode::FiniteField { p, e } = alg.mode() else {
        return Err(Error::Invalid("modular_report needs finite-field mode".into()));
    };
    let l = alg.group();
    if l.order() > MODULAR_ORDER_BOUND {
        return Err(Error::OrderTooLarge { order: l.order(), bound: MODULAR_ORDER_BOUND });
    }
    let xi = alg.cocycle().reduced();
    let m = xi.modulus();
    if m % p == 0 {
        return Err(Error::Invalid(format!(
            "the cocycle needs roots of unity of order {m}, which characteristic {p} lacks"
        )));
    }
    let field = match e {
        Some(e) => {
            let f = FiniteField::new(p, e)?;
            if (f.size() - 1) % m != 0 {
                return Err(Error::Invalid(format!("F_{} has no primitive {m}-th root of unity", f.size())));
            }
            f
        }
        None => FiniteField::for_roots_of_unity(p, m)?,
    };
    if let Some(report) = attempt(l, &xi, Arc::new(field), opts.seed)? {
        return Ok(report);
    }
    let mut exponent = l.exponent() as u64;
    while exponent % p == 0 {
        exponent /= p;
    }
    let split = FiniteField::for_roots_of_unity(p, m * exponent)?;
    attempt(l, &xi, Arc::new(split), opts.seed)?.ok_or(Error::NoProgress { attempts: CHOP_ATTEMPTS })
}

fn attempt(l: &FiniteGroup, xi: &Cochain, field: Arc<FiniteField>, seed: u64) -> Result<Option<TwistedAlgebraReport>> {
    let n = l.order();
    let f = &*field;
    let zeta = f.root_of_unity(xi.modulus())?;
    let coef = |x: usize, y: usize| f.pow(zeta, xi.get2(x, y));
    let regular: Vec<MatrixFq> = (0..n)
        .map(|x| {
            let mut mat = MatrixFq::zeros(&field, n, n);
            for y in 0..n {
                mat.set(l.mul(x, y), y, coef(x, y));
            }
            mat
        })
        .collect();
    let gens = generating_set(l);
    let mut rng = crate::util::rng(seed);
    let Some(factors) = chop(regular, &gens, &field, &mut rng)? else {
        return Ok(None);
    };

    let mut simples: Vec<Vec<MatrixFq>> = Vec::new();
    for fac in factors {
        let dup = simples
            .iter()
            .any(|s| s[0].rows() == fac[0].rows() && hom_dim_raw(&gens, &fac, s) > 0);
        if !dup {
            simples.push(fac);
        }
    }
    for s in &simples {
        let d = s[0].rows();
        let rows: Vec<Vec<u32>> = s.iter().map(|mat| mat.to_rows().concat()).collect();
        if MatrixFq::from_rows(&field, &rows)?.rank() != d * d {
            return Ok(None);
        }
    }
    let key = |s: &Vec<MatrixFq>| {
        let traces: Vec<u32> = s.iter().map(|mat| trace(f, mat)).collect();
        let trivial = traces.iter().all(|&t| t == 1);
        (s[0].rows(), !trivial, traces)
    };
    simples.sort_by_cached_key(key);

    // Φ: A → ⊕ End(S_i), column x = (ρ_i(u_x))_i.
    let total: usize = simples.iter().map(|s| s[0].rows().pow(2)).sum();
    let mut phi = MatrixFq::zeros(&field, total, n);
    for x in 0..n {
        let mut r = 0;
        for s in &simples {
            let d = s[0].rows();
            for i in 0..d {
                for j in 0..d {
                    phi.set(r, x, s[x].get(i, j));
                    r += 1;
                }
            }
        }
    }
    if phi.rank() != total {
        return Err(Error::Consistency(format!(
            "semisimple quotient has dimension {} instead of {total}",
            phi.rank()
        )));
    }
    let algebra = Algebra { l, field: &field, coef: &coef };
    let mut pdims = Vec::with_capacity(simples.len());
    let mut offset = 0;
    for s in &simples {
        let d = s[0].rows();
        let mut target = vec![0u32; total];
        target[offset] = 1;
        offset += d * d;
        let a = phi
            .solve(&target)
            .ok_or_else(|| Error::Consistency("matrix unit outside the image of the algebra".into()))?;
        let e = algebra.lift_idempotent(a)?;
        pdims.push(algebra.right_multiplication(&e).rank());
    }
    let check: usize = pdims.iter().zip(&simples).map(|(p, s)| p * s[0].rows()).sum();
    if check != n {
        return Err(Error::Consistency(format!(
            "sum of dim P * dim S is {check}, expected {n}"
        )));
    }
    let irreps = simples
        .into_iter()
        .enumerate()
        .map(|(index, mats)| IrrepRecord { index, dimension: mats[0].rows(), matrices: RepMatrices::Modular(mats) })
        .collect();
    Ok(Some(TwistedAlgebraReport {
        irreps,
        regular_class_count: xi_regular_class_count(l, xi)?,
        projective_cover_dims: pdims,
        field: Some((f.characteristic(), f.degree())),
    }))
}

struct Algebra<'a, F: Fn(usize, usize) -> u32> {
    l: &'a FiniteGroup,
    field: &'a Arc<FiniteField>,
    coef: &'a F,
}

impl<F: Fn(usize, usize) -> u32> Algebra<'_, F> {
    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; a.len()];
        for (x, &ax) in a.iter().enumerate() {
            if ax == 0 {
                continue;
            }
            for (y, &by) in b.iter().enumerate() {
                if by != 0 {
                    let xy = self.l.mul(x, y);
                    out[xy] = f.add(out[xy], f.mul(f.mul(ax, by), (self.coef)(x, y)));
                }
            }
        }
        out
    }

    /// Iterates `e ↦ 3e² − 2e³` until `e² = e`.
    fn lift_idempotent(&self, mut e: Vec<u32>) -> Result<Vec<u32>> {
        let f = self.field;
        let (three, two) = (f.from_int(3), f.from_int(2));
        for _ in 0..LIFT_ITERATIONS {
            let e2 = self.mul(&e, &e);
            if e2 == e {
                return Ok(e);
            }
            let e3 = self.mul(&e2, &e);
            e = e2.iter().zip(&e3).map(|(&a, &b)| f.sub(f.mul(three, a), f.mul(two, b))).collect();
        }
        Err(Error::Consistency("idempotent lifting did not converge".into()))
    }

    /// Matrix of `a ↦ a·e`.
    fn right_multiplication(&self, e: &[u32]) -> MatrixFq {
        let n = e.len();
        let mut m = MatrixFq::zeros(self.field, n, n);
        for y in 0..n {
            let mut u = vec![0u32; n];
            u[y] = 1;
            let col = self.mul(&u, e);
            for (z, &v) in col.iter().enumerate() {
                m.set(z, y, v);
            }
        }
        m
    }
}

fn trace(f: &FiniteField, m: &MatrixFq) -> u32 {
    (0..m.rows()).fold(0, |acc, i| f.add(acc, m.get(i, i)))
}

/// A small generating set, chosen greedily in index order.
pub(crate) fn generating_set(l: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closure = subgroup_closure(l, &[]).expect("empty generating set");
    for x in 0..l.order() {
        if !closure.contains(x) {
            gens.push(x);
            closure = subgroup_closure(l, &gens).expect("indices in range");
        }
    }
    gens
}

/// Incrementally maintained echelon basis.
struct Spanner<'a> {
    field: &'a FiniteField,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl<'a> Spanner<'a> {
    fn new(field: &'a FiniteField) -> Self {
        Spanner { field, rows: Vec::new(), pivots: Vec::new() }
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
        v
    }

    fn try_add(&mut self, v: &[u32]) -> bool {
        let f = self.field;
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[p]).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

}

/// Smallest subspace containing `v` and stable under `gens`.
fn spin(field: &FiniteField, v: &[u32], gens: &[&MatrixFq]) -> Vec<Vec<u32>> {
    let mut span = Spanner::new(field);
    let mut queue = vec![v.to_vec()];
    span.try_add(v);
    while let Some(w) = queue.pop() {
        for g in gens {
            let gw = g.mul_vec(&w);
            if span.try_add(&gw) {
                queue.push(gw);
            }
        }
    }
    span.rows
}

type Module = Vec<MatrixFq>;

/// Composition factors of `regular`, or `None` if some module could not be
/// chopped; that happens when the field is too small to split it.
fn chop(regular: Module, gens: &[usize], field: &Arc<FiniteField>, rng: &mut ChaCha8Rng) -> Result<Option<Vec<Module>>> {
    let mut factors = Vec::new();
    let mut work = vec![regular];
    while let Some(m) = work.pop() {
        match find_submodule(&m, gens, field, rng)? {
            Chop::NoEigenvalues => return Ok(None),
            Chop::Irreducible => factors.push(m),
            Chop::Submodule(sub) => {
                let (s, q) = split(&m, &sub, field);
                work.push(q);
                work.push(s);
            }
        }
    }
    Ok(Some(factors))
}

enum Chop {
    Irreducible,
    Submodule(Vec<Vec<u32>>),
    /// No random element had a simple eigenvalue in the field.
    NoEigenvalues,
}

fn find_submodule(m: &Module, gens: &[usize], field: &Arc<FiniteField>, rng: &mut ChaCha8Rng) -> Result<Chop> {
    let f = &**field;
    let d = m[0].rows();
    if d == 1 {
        return Ok(Chop::Irreducible);
    }
    let gen_mats: Vec<&MatrixFq> = gens.iter().map(|&x| &m[x]).collect();
    let transposed: Vec<MatrixFq> = gen_mats.iter().map(|g| g.transpose()).collect();
    let transposed: Vec<&MatrixFq> = transposed.iter().collect();
    let q = f.size() as u32;
    for _ in 0..CHOP_ATTEMPTS {
        let mut theta = MatrixFq::zeros(field, d, d);
        for mat in m {
            theta.axpy(rng.gen_range(0..q), mat);
        }
        let cp = theta.charpoly();
        let roots: Vec<u32> = f.elements().filter(|&x| crate::linalg::poly_eval(f, &cp, x) == 0).collect();
        for lambda in roots {
            let shifted = theta.sub(&MatrixFq::identity(field, d).scale(lambda));
            let kernel = nullspace_fq(&shifted);
            for v in &kernel {
                let s = spin(f, v, &gen_mats);
                if s.len() < d {
                    return Ok(Chop::Submodule(s));
                }
            }
            if kernel.len() == 1 {
                let w = &nullspace_fq(&shifted.transpose())[0];
                let t = spin(f, w, &transposed);
                if t.len() < d {
                    let annihilator = MatrixFq::from_rows(field, &t)?;
                    return Ok(Chop::Submodule(nullspace_fq(&annihilator)));
                }
                return Ok(Chop::Irreducible);
            }
        }
    }
    Ok(Chop::NoEigenvalues)
}

/// Actions on a submodule and on the quotient by it.
fn split(m: &Module, sub: &[Vec<u32>], field: &Arc<FiniteField>) -> (Module, Module) {
    let f = &**field;
    let d = m[0].rows();
    let k = sub.len();
    let mut span = Spanner::new(f);
    let mut basis: Vec<Vec<u32>> = Vec::with_capacity(d);
    for v in sub {
        span.try_add(v);
        basis.push(v.clone());
    }
    for i in 0..d {
        let mut e = vec![0u32; d];
        e[i] = 1;
        if span.try_add(&e) {
            basis.push(e);
        }
    }
    let b = MatrixFq::from_columns(field, d, &basis);
    let binv = b.inverse().expect("completed basis is invertible");
    let mut subs = Vec::with_capacity(m.len());
    let mut quots = Vec::with_capacity(m.len());
    for mat in m {
        let c = binv.mul(mat).mul(&b);
        let mut s = MatrixFq::zeros(field, k, k);
        let mut q = MatrixFq::zeros(field, d - k, d - k);
        for i in 0..d {
            for j in 0..d {
                let v = c.get(i, j);
                match (i < k, j < k) {
                    (true, true) => s.set(i, j, v),
                    (false, false) => q.set(i - k, j - k, v),
                    (false, true) => debug_assert_eq!(v, 0, "submodule is not invariant"),
                    _ => {}
                }
            }
        }
        subs.push(s);
        quots.push(q);
    }
    (subs, quots)
}

fn hom_dim_raw(gens: &[usize], a: &[MatrixFq], b: &[MatrixFq]) -> usize {
    let field = a[0].field().clone();
    let f = &*field;
    let (da, db) = (a[0].rows(), b[0].rows());
    // X is db×da; X·ρ_a(x) − ρ_b(x)·X = 0.
    let mut eqs = MatrixFq::zeros(&field, gens.len() * db * da, db * da);
    let var = |i: usize, j: usize| i * da + j;
    let mut row = 0;
    for &x in gens {
        let (ra, rb) = (&a[x], &b[x]);
        for i in 0..db {
            for j in 0..da {
                for k in 0..da {
                    let v = ra.get(k, j);
                    if v != 0 {
                        let c = var(i, k);
                        eqs.set(row, c, f.add(eqs.get(row, c), v));
                    }
                }
                for k in 0..db {
                    let v = rb.get(i, k);
                    if v != 0 {
                        let c = var(k, j);
                        eqs.set(row, c, f.sub(eqs.get(row, c), v));
                    }
                }
                row += 1;
            }
        }
    }
    db * da - eqs.rank()
}

/// `dim Hom(V, W)` for two representations with the same cocycle: exact in
/// positive characteristic, through the character inner product over `C`.
pub fn hom_dimension(l: &FiniteGroup, v: &IrrepRecord, w: &IrrepRecord) -> usize {
    match (&v.matrices, &w.matrices) {
        (RepMatrices::Modular(a), RepMatrices::Modular(b)) => hom_dim_raw(&generating_set(l), a, b),
        _ => match (v.character(), w.character()) {
            (Some(a), Some(b)) => {
                let s: num_complex::Complex64 = a.iter().zip(&b).map(|(x, y)| x * y.conj()).sum();
                libm::round(s.re / l.order() as f64).max(0.0) as usize
            }
            _ => 0,
        },
    }
}
