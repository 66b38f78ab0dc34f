use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest field size the modular engine will construct.
pub const FIELD_SIZE_CAP: u64 = 1 << 16;

/// The finite field `F_q`, `q = p^e`, built as `F_p[x]/(f)` with `f` the
/// lowest monic irreducible polynomial of degree `e` (coefficients read as
/// base-`p` digits, constant term least significant).
///
/// Elements are encoded as integers `0..q` whose base-`p` digits are the
/// polynomial coefficients; multiplication goes through log/exp tables.
#[derive(Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    poly: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl FiniteField {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::Invalid("field degree must be positive".into()));
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= FIELD_SIZE_CAP)
            .ok_or_else(|| Error::FieldCap(format!("{p}^{e} exceeds the cap {FIELD_SIZE_CAP}")))?;
        let (p32, q32) = (p as u32, q as u32);
        let poly = lowest_irreducible(p32, e);
        let mut field = FiniteField { p: p32, e, q: q32, poly, exp: Vec::new(), log: Vec::new() };
        let gen = (1..q32)
            .find(|&g| field.slow_order(g) == q32 - 1)
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; (q32 - 1) as usize];
        let mut log = vec![0u32; q32 as usize];
        let mut x = 1u32;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = x;
            log[x as usize] = k as u32;
            x = field.slow_mul(x, gen);
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    /// The smallest field of characteristic `p` containing a primitive
    /// `m`-th root of unity.
    pub fn for_roots_of_unity(p: u64, m: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if m == 0 || m % p == 0 {
            return Err(Error::Invalid(format!(
                "no primitive {m}-th roots of unity in characteristic {p}"
            )));
        }
        let mut e = 1u32;
        let mut pe = p % m;
        loop {
            if pe == 1 % m {
                return Self::new(p, e);
            }
            e += 1;
            match p.checked_pow(e) {
                Some(q) if q <= FIELD_SIZE_CAP => {}
                _ => {
                    return Err(Error::FieldCap(format!(
                        "roots of unity of order {m} need a field beyond {FIELD_SIZE_CAP} elements"
                    )))
                }
            }
            pe = pe * p % m;
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn size(&self) -> u64 {
        self.q as u64
    }

    /// Coefficients of the defining polynomial, constant term first, monic.
    pub fn modulus_poly(&self) -> &[u32] {
        &self.poly
    }

    /// Base-`p` coefficients of an element, constant term first.
    pub fn coefficients(&self, x: u32) -> Vec<u32> {
        let mut x = x;
        (0..self.e)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn from_coefficients(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        0
    }

    #[inline]
    pub fn one(&self) -> u32 {
        1
    }

    /// Image of an integer under `Z → F_p ⊂ F_q`.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.e == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            let d = (self.p - a % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[k as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let k = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
        Some(self.exp[k as usize])
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let e = (self.log[a as usize] as u64 * (k % (self.q as u64 - 1))) % (self.q as u64 - 1);
        self.exp[e as usize]
    }

    /// A fixed primitive `m`-th root of unity, `g^((q-1)/m)` for the
    /// table generator `g`.
    pub fn root_of_unity(&self, m: u64) -> Result<u32> {
        let qm1 = self.q as u64 - 1;
        if m == 0 || qm1 % m != 0 {
            return Err(Error::Invalid(format!("F_{} has no primitive {m}-th root of unity", self.q)));
        }
        Ok(self.exp[((qm1 / m) % qm1) as usize])
    }

    /// All field elements, in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.coefficients(a), self.coefficients(b));
        let e = self.e as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * e];
        for i in 0..e {
            for j in 0..e {
                prod[i + j] = (prod[i + j] + ca[i] as u64 * cb[j] as u64) % p;
            }
        }
        for k in (e..2 * e).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..e {
                    let sub = c * self.poly[i] as u64 % p;
                    prod[k - e + i] = (prod[k - e + i] + p - sub) % p;
                }
                prod[k] = 0;
            }
        }
        let c: Vec<u32> = prod[..e].iter().map(|&x| x as u32).collect();
        self.from_coefficients(&c)
    }

    fn slow_order(&self, g: u32) -> u32 {
        let mut k = 1;
        let mut x = g;
        while x != 1 {
            x = self.slow_mul(x, g);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }
}

/// Lowest monic irreducible polynomial of degree `e` over `F_p`, found by
/// trial division.
fn lowest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let lower = (p as u64).pow(e);
    for code in 0..lower {
        let mut c = code;
        let mut poly: Vec<u32> = (0..e)
            .map(|_| {
                let d = (c % p as u64) as u32;
                c /= p as u64;
                d
            })
            .collect();
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut c = code;
            let mut g: Vec<u32> = (0..d)
                .map(|_| {
                    let x = (c % p as u64) as u32;
                    c /= p as u64;
                    x
                })
                .collect();
            g.push(1);
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r: Vec<u64> = f.iter().map(|&x| x as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    for k in (dg..r.len()).rev() {
        let c = r[k] % p;
        if c != 0 {
            for i in 0..=dg {
                r[k - dg + i] = (r[k - dg + i] + p * p - c * g[i] as u64 % p) % p;
            }
        }
    }
    r[..dg].iter().all(|&x| x % p == 0)
}

/// Dense matrix over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFq {
    field: Arc<FiniteField>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl MatrixFq {
    pub fn zeros(field: &Arc<FiniteField>, rows: usize, cols: usize) -> Self {
        MatrixFq { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Arc<FiniteField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Arc<FiniteField>, rows: &[Vec<u32>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::Invalid("ragged matrix".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v as u64 >= field.size() {
                    return Err(Error::Invalid(format!("{v} is not an element of F_{}", field.size())));
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Arc<FiniteField>, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m.set(i, j, c[i]);
            }
        }
        m
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &MatrixFq) -> MatrixFq {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = &*self.field;
        let mut out = MatrixFq::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = f.add(out.get(i, j), f.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        let f = &*self.field;
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(0, |acc, j| f.add(acc, f.mul(self.get(i, j), v[j])))
            })
            .collect()
    }

    pub fn transpose(&self) -> MatrixFq {
        let mut out = MatrixFq::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &MatrixFq) -> MatrixFq {
        let f = &*self.field;
        let mut out = self.clone();
        for (x, &y) in out.data.iter_mut().zip(&other.data) {
            *x = f.add(*x, y);
        }
        out
    }

    pub fn sub(&self, other: &MatrixFq) -> MatrixFq {
        let f = &*self.field;
        let mut out = self.clone();
        for (x, &y) in out.data.iter_mut().zip(&other.data) {
            *x = f.sub(*x, y);
        }
        out
    }

    pub fn scale(&self, c: u32) -> MatrixFq {
        let f = &*self.field;
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = f.mul(*x, c);
        }
        out
    }

    /// Adds `c·other` in place.
    pub fn axpy(&mut self, c: u32, other: &MatrixFq) {
        if c == 0 {
            return;
        }
        let f = self.field.clone();
        for (x, &y) in self.data.iter_mut().zip(&other.data) {
            if y != 0 {
                *x = f.add(*x, f.mul(c, y));
            }
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (MatrixFq, Vec<usize>) {
        let f = &*self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let t = m.get(r, j);
                    m.set(r, j, m.get(pr, j));
                    m.set(pr, j, t);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..m.cols {
                m.set(r, j, f.mul(m.get(r, j), inv));
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i != r && factor != 0 {
                    for j in c..m.cols {
                        let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Some `x` with `A·x = b`, if one exists.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        let mut aug = MatrixFq::zeros(&self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = r.get(i, self.cols);
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<MatrixFq> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = MatrixFq::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = MatrixFq::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j));
            }
        }
        Some(out)
    }

    /// Characteristic polynomial `det(x·I − A)`, constant term first, via
    /// reduction to Hessenberg form.
    pub fn charpoly(&self) -> Vec<u32> {
        assert_eq!(self.rows, self.cols, "charpoly needs a square matrix");
        let f = &*self.field;
        let n = self.rows;
        let mut h = self.clone();
        // Similarity reduction to upper Hessenberg form.
        for c in 0..n.saturating_sub(2) {
            let Some(pr) = (c + 1..n).find(|&i| h.get(i, c) != 0) else {
                continue;
            };
            if pr != c + 1 {
                for j in 0..n {
                    let t = h.get(c + 1, j);
                    h.set(c + 1, j, h.get(pr, j));
                    h.set(pr, j, t);
                }
                for i in 0..n {
                    let t = h.get(i, c + 1);
                    h.set(i, c + 1, h.get(i, pr));
                    h.set(i, pr, t);
                }
            }
            let inv = f.inv(h.get(c + 1, c)).unwrap();
            for i in c + 2..n {
                let factor = f.mul(h.get(i, c), inv);
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = f.sub(h.get(i, j), f.mul(factor, h.get(c + 1, j)));
                    h.set(i, j, v);
                }
                for k in 0..n {
                    let v = f.add(h.get(k, c + 1), f.mul(factor, h.get(k, i)));
                    h.set(k, c + 1, v);
                }
            }
        }
        // p_k = charpoly of the leading k×k block.
        let mut polys: Vec<Vec<u32>> = vec![vec![1]];
        for k in 1..=n {
            let hk = h.get(k - 1, k - 1);
            let mut next = poly_shift(&polys[k - 1]);
            let scaled = poly_scale(f, &polys[k - 1], hk);
            next = poly_sub(f, &next, &scaled);
            let mut prod = 1u32;
            for i in (1..k).rev() {
                prod = f.mul(prod, h.get(i, i - 1));
                let coef = f.mul(prod, h.get(i - 1, k - 1));
                let term = poly_scale(f, &polys[i - 1], coef);
                next = poly_sub(f, &next, &term);
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

fn poly_shift(p: &[u32]) -> Vec<u32> {
    let mut out = vec![0];
    out.extend_from_slice(p);
    out
}

fn poly_scale(f: &FiniteField, p: &[u32], c: u32) -> Vec<u32> {
    p.iter().map(|&x| f.mul(x, c)).collect()
}

fn poly_sub(f: &FiniteField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect()
}

/// Evaluates a polynomial (constant term first).
pub(crate) fn poly_eval(f: &FiniteField, p: &[u32], x: u32) -> u32 {
    p.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Basis of the right kernel `{v : A·v = 0}`.
pub fn nullspace_fq(a: &MatrixFq) -> Vec<Vec<u32>> {
    let f = a.field();
    let (r, pivots) = a.rref();
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u32; a.cols()];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, e: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, e).unwrap())
    }

    #[test]
    fn field_axioms_small() {
        for (p, e) in [(2, 1), (2, 3), (3, 2), (5, 1), (7, 2)] {
            let f = FiniteField::new(p, e).unwrap();
            let q = f.size() as u32;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                    assert_eq!(f.add(a, b), f.add(b, a));
                }
            }
        }
    }

    #[test]
    fn lowest_polynomials() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus_poly(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus_poly(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus_poly(), &[1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_field() {
        let f = FiniteField::for_roots_of_unity(2, 3).unwrap();
        assert_eq!(f.size(), 4);
        let z = f.root_of_unity(3).unwrap();
        assert_ne!(z, 1);
        assert_eq!(f.pow(z, 3), 1);
        assert!(FiniteField::for_roots_of_unity(3, 6).is_err());
        assert!(matches!(FiniteField::new(2, 17), Err(Error::FieldCap(_))));
    }

    #[test]
    fn nullspace_examples() {
        let f3 = field(3, 1);
        let id = MatrixFq::identity(&f3, 3);
        assert!(nullspace_fq(&id).is_empty());
        let f2 = field(2, 1);
        assert_eq!(nullspace_fq(&MatrixFq::zeros(&f2, 2, 2)).len(), 2);
        let a = MatrixFq::from_rows(&f3, &[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(a.rank(), 1);
        let k = nullspace_fq(&a);
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|&x| x == 0));
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        use rand::Rng;
        let f = field(5, 1);
        let mut rng = crate::util::rng(3);
        for n in 1..6 {
            let rows: Vec<Vec<u32>> =
                (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..5)).collect()).collect();
            let a = MatrixFq::from_rows(&f, &rows).unwrap();
            let cp = a.charpoly();
            assert_eq!(cp.len(), n + 1);
            assert_eq!(cp[n], 1);
            for x in 0..5u32 {
                let mut m = MatrixFq::identity(&f, n).scale(x).sub(&a);
                let det = det_by_elimination(&mut m);
                assert_eq!(poly_eval(&f, &cp, x), det);
            }
        }
    }

    fn det_by_elimination(m: &mut MatrixFq) -> u32 {
        let f = m.field().clone();
        let n = m.rows();
        let mut det = 1;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if pr != c {
                for j in 0..n {
                    let t = m.get(c, j);
                    m.set(c, j, m.get(pr, j));
                    m.set(pr, j, t);
                }
                det = f.neg(det);
            }
            det = f.mul(det, m.get(c, c));
            let inv = f.inv(m.get(c, c)).unwrap();
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                for j in c..n {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    #[test]
    fn solve_and_inverse() {
        let f = field(7, 1);
        let a = MatrixFq::from_rows(&f, &[vec![2, 1], vec![1, 3]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), MatrixFq::identity(&f, 2));
        let x = a.solve(&[3, 5]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![3, 5]);
        let singular = MatrixFq::from_rows(&f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[1, 0]).is_none());
    }
}
