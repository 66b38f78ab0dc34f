//! Brute-force structure of the group algebra F_p[S3].
//!
//! Everything is found by exhaustive enumeration over the p^6 elements of the
//! algebra: the Jacobson radical as {a : 1 - ba is a unit for every b}, the
//! idempotents, the primitive ones among them, and the isomorphism classes of
//! the indecomposable projectives Ae. Nothing here touches the library.

#![allow(dead_code)]

const N: usize = 6;

type Elt = [u32; N];

pub struct Oracle {
    p: u32,
    table: [[usize; N]; N],
    one: Elt,
    elements: Vec<Elt>,
}

/// Dimensions of the simple modules and of their projective covers, sorted by
/// simple dimension, then by cover dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockData {
    pub radical_dim: usize,
    pub simples: Vec<(usize, usize)>,
}

fn s3_table() -> [[usize; N]; N] {
    let perms: [[usize; 3]; N] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let mut t = [[0; N]; N];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            let c = [a[b[0]], a[b[1]], a[b[2]]];
            t[i][j] = perms.iter().position(|x| *x == c).unwrap();
        }
    }
    t
}

impl Oracle {
    pub fn s3(p: u32) -> Self {
        let total = (p as usize).pow(N as u32);
        let elements = (0..total)
            .map(|mut k| {
                let mut e = [0; N];
                for c in e.iter_mut() {
                    *c = (k % p as usize) as u32;
                    k /= p as usize;
                }
                e
            })
            .collect();
        let mut one = [0; N];
        one[0] = 1;
        Oracle { p, table: s3_table(), one, elements }
    }

    fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        let mut c = [0; N];
        for i in 0..N {
            if a[i] == 0 {
                continue;
            }
            for j in 0..N {
                let k = self.table[i][j];
                c[k] = (c[k] + a[i] * b[j]) % self.p;
            }
        }
        c
    }

    fn sub(&self, a: &Elt, b: &Elt) -> Elt {
        let mut c = [0; N];
        for i in 0..N {
            c[i] = (a[i] + self.p - b[i]) % self.p;
        }
        c
    }

    fn is_unit(&self, a: &Elt) -> bool {
        self.elements.iter().any(|b| self.mul(a, b) == self.one)
    }

    /// Rank of a set of vectors over F_p.
    fn rank(&self, vs: &[Elt]) -> usize {
        let mut rows: Vec<Elt> = vs.to_vec();
        let mut r = 0;
        for col in 0..N {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
            rows.swap(r, piv);
            let inv = (1..self.p).find(|x| x * rows[r][col] % self.p == 1).unwrap();
            for c in 0..N {
                rows[r][c] = rows[r][c] * inv % self.p;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for c in 0..N {
                        rows[i][c] = (rows[i][c] + self.p * self.p - f * rows[r][c] % self.p) % self.p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    pub fn radical(&self) -> Vec<Elt> {
        // a lies in J iff 1 - ba is invertible for all b. Units are checked
        // through a precomputed set.
        let units: std::collections::HashSet<Elt> = self.elements.iter().filter(|a| self.is_unit(a)).copied().collect();
        self.elements
            .iter()
            .filter(|a| self.elements.iter().all(|b| units.contains(&self.sub(&self.one, &self.mul(b, a)))))
            .copied()
            .collect()
    }

    fn basis_products(&self, left: &Elt, right: &Elt) -> Vec<Elt> {
        // Spanning set of left·A·right.
        (0..N)
            .map(|i| {
                let mut x = [0; N];
                x[i] = 1;
                self.mul(&self.mul(left, &x), right)
            })
            .collect()
    }

    pub fn analyze(&self) -> BlockData {
        let j = self.radical();
        let zero = [0; N];
        let idempotents: Vec<Elt> = self.elements.iter().filter(|e| **e != zero && self.mul(e, e) == **e).copied().collect();
        let primitive: Vec<Elt> = idempotents
            .iter()
            .filter(|e| {
                !idempotents.iter().any(|f| f != *e && self.mul(e, f) == *f && self.mul(f, e) == *f)
            })
            .copied()
            .collect();
        let ae_dim = |e: &Elt| self.rank(&(0..N).map(|i| {
            let mut x = [0; N];
            x[i] = 1;
            self.mul(&x, e)
        }).collect::<Vec<_>>());
        let je_dim = |e: &Elt| self.rank(&j.iter().map(|x| self.mul(x, e)).collect::<Vec<_>>());
        // Ae and Af are isomorphic iff eAf is not contained in eJf.
        let iso = |e: &Elt, f: &Elt| {
            let eaf = self.rank(&self.basis_products(e, f));
            let ejf = self.rank(&j.iter().map(|x| self.mul(&self.mul(e, x), f)).collect::<Vec<_>>());
            eaf > ejf
        };
        let mut classes: Vec<Elt> = Vec::new();
        for e in &primitive {
            if !classes.iter().any(|c| iso(c, e)) {
                classes.push(*e);
            }
        }
        let mut simples: Vec<(usize, usize)> = classes.iter().map(|e| (ae_dim(e) - je_dim(e), ae_dim(e))).collect();
        simples.sort();
        BlockData { radical_dim: self.rank(&j), simples }
    }
}
