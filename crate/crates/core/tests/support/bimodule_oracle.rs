//! Duals in C(G, ω, H, ψ) computed directly as bimodules.
//!
//! The category is modelled as bimodules over the twisted group algebra
//! A = k[H] (product δ_a·δ_b = ζ^{−ψ(a,b)} δ_{ab}) inside G-graded vector
//! spaces with associator ζ^{ω(x,y,z)}. The block simples are cut out of the
//! free bimodule A ⊗ δ_g ⊗ A by isotypic projectors on the grade-g fiber, and
//! M* ≅ N is detected by Hom(A, M ⊗_A N) ≠ 0, with the balanced tensor
//! product built as an explicit quotient. Only the library's group tables,
//! cochains and irrep characters are read.

#![allow(dead_code)]

use gtcat_core::cochain::Cochain;
use gtcat_core::group::{FiniteGroup, Subgroup};
use num_complex::Complex64 as C64;

const TOL: f64 = 1e-8;

/// Dense column-major complex matrix.
#[derive(Clone, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<C64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    fn at(&self, r: usize, c: usize) -> C64 {
        self.data[c * self.rows + r]
    }

    fn set(&mut self, r: usize, c: usize, v: C64) {
        self.data[c * self.rows + r] = v;
    }

    fn col(&self, c: usize) -> &[C64] {
        &self.data[c * self.rows..(c + 1) * self.rows]
    }

    fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows);
        let mut out = Mat::zeros(self.rows, o.cols);
        for j in 0..o.cols {
            for k in 0..self.cols {
                let b = o.at(k, j);
                if b.norm() == 0.0 {
                    continue;
                }
                for i in 0..self.rows {
                    out.data[j * self.rows + i] += self.at(i, k) * b;
                }
            }
        }
        out
    }

    fn adjoint(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).conj());
            }
        }
        out
    }

    fn apply(&self, v: &[C64]) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); self.rows];
        for (k, &x) in v.iter().enumerate() {
            if x.norm() == 0.0 {
                continue;
            }
            for i in 0..self.rows {
                out[i] += self.at(i, k) * x;
            }
        }
        out
    }

    fn dist(&self, o: &Mat) -> f64 {
        self.data.iter().zip(&o.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Orthonormal basis of the span of `vs` (modified Gram-Schmidt, two passes).
pub fn orthonormal(vs: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let mut basis: Vec<Vec<C64>> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        let n0 = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if n0 < TOL {
            continue;
        }
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &w);
                for (x, y) in w.iter_mut().zip(b) {
                    *x -= c * y;
                }
            }
        }
        let n = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-7 * n0.max(1.0) {
            for x in w.iter_mut() {
                *x /= n;
            }
            basis.push(w);
        }
    }
    basis
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<C64>]) -> usize {
    orthonormal(rows).len()
}

pub struct Model<'a> {
    pub g: &'a FiniteGroup,
    pub omega: &'a Cochain,
    pub h: &'a Subgroup,
    pub psi: &'a Cochain,
    pub m: i64,
}

/// A bimodule with a homogeneous basis; `left[i]`/`right[i]` act by the
/// `i`-th element of `H`.
pub struct Bimodule {
    pub grade: Vec<usize>,
    pub left: Vec<Mat>,
    pub right: Vec<Mat>,
}

impl Bimodule {
    pub fn dim(&self) -> usize {
        self.grade.len()
    }
}

impl<'a> Model<'a> {
    pub fn new(g: &'a FiniteGroup, omega: &'a Cochain, h: &'a Subgroup, psi: &'a Cochain) -> Self {
        let m = omega.modulus() as i64 * psi.modulus() as i64;
        Model { g, omega, h, psi, m }
    }

    pub fn w(&self, a: usize, b: usize, c: usize) -> i64 {
        self.omega.get3(a, b, c) as i64 * (self.m / self.omega.modulus() as i64)
    }

    pub fn p(&self, a: usize, b: usize) -> i64 {
        let (i, j) = (self.h.position(a).unwrap(), self.h.position(b).unwrap());
        self.psi.get2(i, j) as i64 * (self.m / self.psi.modulus() as i64)
    }

    pub fn zeta(&self, e: i64) -> C64 {
        let t = 2.0 * std::f64::consts::PI * e.rem_euclid(self.m) as f64 / self.m as f64;
        C64::new(t.cos(), t.sin())
    }

    /// Checks the bimodule axioms on every basis vector.
    pub fn check(&self, b: &Bimodule) {
        let he = self.h.elements();
        let n = he.len();
        let g = self.g;
        for i in 0..b.dim() {
            let mut e = vec![C64::new(0.0, 0.0); b.dim()];
            e[i] = C64::new(1.0, 0.0);
            let x = b.grade[i];
            for ci in 0..n {
                for di in 0..n {
                    let (c, d) = (he[ci], he[di]);
                    let cd = self.h.position(g.mul(c, d)).unwrap();
                    let close = |u: &[C64], v: &[C64]| u.iter().zip(v).all(|(a, b)| (a - b).norm() < 1e-7);
                    let lhs = b.left[ci].apply(&b.left[di].apply(&e));
                    let rhs: Vec<C64> = b.left[cd].apply(&e).iter().map(|v| v * self.zeta(-self.p(c, d) - self.w(c, d, x))).collect();
                    assert!(close(&lhs, &rhs), "left action is not associative");
                    let lhs = b.right[di].apply(&b.right[ci].apply(&e));
                    let rhs: Vec<C64> = b.right[cd].apply(&e).iter().map(|v| v * self.zeta(self.w(x, c, d) - self.p(c, d))).collect();
                    assert!(close(&lhs, &rhs), "right action is not associative");
                    let lhs = b.right[di].apply(&b.left[ci].apply(&e));
                    let rhs: Vec<C64> = b.left[ci].apply(&b.right[di].apply(&e)).iter().map(|v| v * self.zeta(self.w(c, x, d))).collect();
                    assert!(close(&lhs, &rhs), "actions do not commute");
                }
            }
        }
    }

    /// A ⊗ δ_g ⊗ A with basis `a·(v·b)`, index `ia·|H| + ib`.
    pub fn free(&self, gg: usize) -> Bimodule {
        let g = self.g;
        let he = self.h.elements();
        let n = he.len();
        let dim = n * n;
        let grade: Vec<usize> = (0..dim).map(|i| g.mul(g.mul(he[i / n], gg), he[i % n])).collect();
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for &c in he {
            let mut lm = Mat::zeros(dim, dim);
            let mut rm = Mat::zeros(dim, dim);
            for ia in 0..n {
                for ib in 0..n {
                    let (a, b) = (he[ia], he[ib]);
                    let src = ia * n + ib;
                    let ca = self.h.position(g.mul(c, a)).unwrap();
                    lm.set(ca * n + ib, src, self.zeta(-self.p(c, a) - self.w(c, a, g.mul(gg, b))));
                    let bc = self.h.position(g.mul(b, c)).unwrap();
                    let ph = self.w(a, g.mul(gg, b), c) + self.w(gg, b, c) - self.p(b, c);
                    rm.set(ia * n + bc, src, self.zeta(ph));
                }
            }
            left.push(lm);
            right.push(rm);
        }
        let f = Bimodule { grade, left, right };
        self.check(&f);
        f
    }

    /// The phase turning `m ↦ (l·m)·(g⁻¹l⁻¹g)` on the grade-`g` fiber into a
    /// projective representation for `−ξ_g`.
    fn nu(&self, gg: usize, l: usize) -> i64 {
        let g = self.g;
        let c = g.conj(g.inv(gg), l);
        let k = g.inv(c);
        self.p(c, k) - self.w(l, gg, k) - self.w(gg, k, c) - self.w(k, c, k) - self.w(l, g.mul(gg, k), c)
    }

    /// The fiber action of `L^g` on the grade-`g` part of `f`, as matrices on
    /// the whole space (zero off the fiber). Asserts that its cocycle is
    /// exactly `−ξ_g` (`xi` in local indices of `stab`).
    pub fn fiber(&self, f: &Bimodule, gg: usize, stab: &Subgroup, xi: &Cochain) -> Vec<Mat> {
        let g = self.g;
        let dim = f.dim();
        let mut proj = Mat::zeros(dim, dim);
        for i in 0..dim {
            if f.grade[i] == gg {
                proj.set(i, i, C64::new(1.0, 0.0));
            }
        }
        let pi: Vec<Mat> = stab
            .elements()
            .iter()
            .map(|&l| {
                let k = g.conj(g.inv(gg), g.inv(l));
                let (li, ki) = (self.h.position(l).unwrap(), self.h.position(k).unwrap());
                let mut a = f.right[ki].mul(&f.left[li]).mul(&proj);
                let z = self.zeta(self.nu(gg, l));
                a.data.iter_mut().for_each(|x| *x *= z);
                a
            })
            .collect();
        let xm = self.m / xi.modulus() as i64;
        for (i, &l1) in stab.elements().iter().enumerate() {
            for (j, &l2) in stab.elements().iter().enumerate() {
                let k = stab.position(g.mul(l1, l2)).unwrap();
                let mut want = pi[k].clone();
                let z = self.zeta(-(xi.get2(i, j) as i64) * xm);
                want.data.iter_mut().for_each(|x| *x *= z);
                assert!(pi[i].mul(&pi[j]).dist(&want) < 1e-7, "fiber cocycle differs from -xi_g");
            }
        }
        pi
    }

    /// The sub-bimodule of `f` generated by the image of `p` (a projector on
    /// the fiber), with the restricted actions.
    pub fn generated(&self, f: &Bimodule, p: &Mat) -> Bimodule {
        let dim = f.dim();
        let seeds: Vec<Vec<C64>> = (0..dim).map(|j| p.col(j).to_vec()).collect();
        let mut by_grade: std::collections::BTreeMap<usize, Vec<Vec<C64>>> = Default::default();
        for s in &seeds {
            for l in &f.left {
                for r in &f.right {
                    let v = r.apply(&l.apply(s));
                    // Split into homogeneous components.
                    let mut parts: std::collections::BTreeMap<usize, Vec<C64>> = Default::default();
                    for (i, x) in v.iter().enumerate() {
                        if x.norm() > TOL {
                            parts.entry(f.grade[i]).or_insert_with(|| vec![C64::new(0.0, 0.0); dim])[i] = *x;
                        }
                    }
                    for (gr, part) in parts {
                        by_grade.entry(gr).or_default().push(part);
                    }
                }
            }
        }
        let mut cols = Vec::new();
        let mut grade = Vec::new();
        for (gr, vs) in by_grade {
            for b in orthonormal(&vs) {
                cols.push(b);
                grade.push(gr);
            }
        }
        let n = cols.len();
        let mut q = Mat::zeros(dim, n);
        for (j, c) in cols.iter().enumerate() {
            for i in 0..dim {
                q.set(i, j, c[i]);
            }
        }
        let qa = q.adjoint();
        let restrict = |a: &Mat| qa.mul(&a.mul(&q));
        let b = Bimodule { grade, left: f.left.iter().map(restrict).collect(), right: f.right.iter().map(restrict).collect() };
        self.check(&b);
        b
    }

    /// `dim Hom(A, M ⊗_A N)`.
    pub fn hom_from_unit(&self, m: &Bimodule, n: &Bimodule) -> usize {
        let g = self.g;
        let he = self.h.elements();
        let (p, q) = (m.dim(), n.dim());
        let e = g.identity();
        // Basis of the product restricted to one grade.
        let index = |target: usize| -> Vec<(usize, usize)> {
            let mut v = Vec::new();
            for i in 0..p {
                for j in 0..q {
                    if g.mul(m.grade[i], n.grade[j]) == target {
                        v.push((i, j));
                    }
                }
            }
            v
        };
        // Position of the pair (i, j) inside its own grade.
        let mut slot = vec![0usize; p * q];
        {
            let mut count: std::collections::HashMap<usize, usize> = Default::default();
            for i in 0..p {
                for j in 0..q {
                    let c = count.entry(g.mul(m.grade[i], n.grade[j])).or_insert(0);
                    slot[i * q + j] = *c;
                    *c += 1;
                }
            }
        }
        let pos = |_: &[(usize, usize)], i: usize, j: usize| Some(slot[i * q + j]);
        // Relations (m·a)⊗n − ζ^{ω(x,a,y)} m⊗(a·n) of a given grade.
        let relations = |target: usize, idx: &[(usize, usize)]| -> Vec<Vec<C64>> {
            let mut out = Vec::new();
            for (ai, &a) in he.iter().enumerate() {
                for i in 0..p {
                    for j in 0..q {
                        let (x, y) = (m.grade[i], n.grade[j]);
                        if g.mul(g.mul(x, a), y) != target {
                            continue;
                        }
                        let mut v = vec![C64::new(0.0, 0.0); idx.len()];
                        let ph = self.zeta(self.w(x, a, y));
                        for k in 0..p {
                            let c = m.right[ai].at(k, i);
                            if c.norm() > TOL {
                                v[pos(idx, k, j).unwrap()] += c;
                            }
                        }
                        for k in 0..q {
                            let c = n.left[ai].at(k, j);
                            if c.norm() > TOL {
                                v[pos(idx, i, k).unwrap()] -= ph * c;
                            }
                        }
                        out.push(v);
                    }
                }
            }
            out
        };
        let ie = index(e);
        if ie.is_empty() {
            return 0;
        }
        let re = relations(e, &ie);
        // Conditions c·x − x·c ∈ R_c, written as rows acting on x.
        let mut conditions: Vec<Vec<C64>> = Vec::new();
        for (ci, &c) in he.iter().enumerate() {
            let ic = index(c);
            let rc = orthonormal(&relations(c, &ic));
            // Column t of the operator is (c·e_t − e_t·c) for the t-th basis pair.
            let cols: Vec<Vec<C64>> = ie
                .iter()
                .map(|&(i, j)| {
                    let (x, y) = (m.grade[i], n.grade[j]);
                    let mut v = vec![C64::new(0.0, 0.0); ic.len()];
                    let lp = self.zeta(-self.w(c, x, y));
                    for k in 0..p {
                        let a = m.left[ci].at(k, i);
                        if a.norm() > TOL {
                            v[pos(&ic, k, j).unwrap()] += lp * a;
                        }
                    }
                    let rp = self.zeta(self.w(x, y, c));
                    for k in 0..q {
                        let a = n.right[ci].at(k, j);
                        if a.norm() > TOL {
                            v[pos(&ic, i, k).unwrap()] -= rp * a;
                        }
                    }
                    // Remove the component along R_c.
                    for b in &rc {
                        let s = dot(b, &v);
                        for (t, bb) in v.iter_mut().zip(b) {
                            *t -= s * bb;
                        }
                    }
                    v
                })
                .collect();
            for r in 0..ic.len() {
                conditions.push(cols.iter().map(|col| col[r]).collect());
            }
        }
        let kernel = ie.len() - rank(&conditions);
        kernel - rank(&re)
    }
}

/// All linear characters of the abstract group `l`, as value tables.
pub fn linear_characters(l: &FiniteGroup) -> Vec<Vec<C64>> {
    let n = l.order();
    let e = l.exponent();
    // Greedy generating set.
    let mut gens = Vec::new();
    let mut span = vec![l.identity()];
    while span.len() < n {
        let x = (0..n).find(|x| !span.contains(x)).unwrap();
        gens.push(x);
        let mut all = vec![l.identity()];
        let mut i = 0;
        while i < all.len() {
            for &s in &gens {
                let y = l.mul(all[i], s);
                if !all.contains(&y) {
                    all.push(y);
                }
            }
            i += 1;
        }
        span = all;
    }
    let mut out = Vec::new();
    let total = e.pow(gens.len() as u32);
    'assign: for code in 0..total {
        let mut exps = Vec::new();
        let mut c = code;
        for _ in &gens {
            exps.push(c % e);
            c /= e;
        }
        let mut val: Vec<Option<usize>> = vec![None; n];
        val[l.identity()] = Some(0);
        let mut queue = vec![l.identity()];
        while let Some(x) = queue.pop() {
            for (s, &k) in gens.iter().zip(&exps) {
                let y = l.mul(x, *s);
                let v = (val[x].unwrap() + k) % e;
                match val[y] {
                    None => {
                        val[y] = Some(v);
                        queue.push(y);
                    }
                    Some(w) if w != v => continue 'assign,
                    _ => {}
                }
            }
        }
        // Consistency on all products.
        let val: Vec<usize> = val.into_iter().map(Option::unwrap).collect();
        if (0..n).all(|a| (0..n).all(|b| val[l.mul(a, b)] == (val[a] + val[b]) % e)) {
            out.push(
                val.iter()
                    .map(|&v| {
                        let t = 2.0 * std::f64::consts::PI * v as f64 / e as f64;
                        C64::new(t.cos(), t.sin())
                    })
                    .collect(),
            );
        }
    }
    out
}
