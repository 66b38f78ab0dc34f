//! Normalized cochains with values in `μ_m`, stored as exponents in `Z/m`
//! (additive notation: the value `v` stands for `ζ_m^v`).
//!
//! A cochain is attached to an abstract group by its order; cochains on a
//! subgroup use the local indexing of [`Subgroup::to_group`]. Tables are flat,
//! in lexicographic order of argument tuples.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::group::{direct_product, verify_homomorphism, FiniteGroup, Subgroup};
use crate::linalg::{solve_mod_m, MatrixModM};
use crate::util::lcm;
use crate::{Error, Result};

/// Largest group order for which `dψ = target` is solved as a linear system.
pub const SOLVE_ORDER_BOUND: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    modulus: u64,
    order: usize,
    values: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCertificate {
    pub degree: usize,
    pub is_cocycle: bool,
    /// First tuple (lexicographically) where the coboundary is nonzero.
    pub witness: Option<Vec<usize>>,
}

impl Cochain {
    pub fn zero(degree: usize, order: usize, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Cochain { degree, modulus, order, values: vec![0; order.pow(degree as u32)] }
    }

    /// Validates length, range and normalization.
    pub fn from_values(g: &FiniteGroup, degree: usize, modulus: u64, values: Vec<u64>) -> Result<Self> {
        if !(1..=4).contains(&degree) {
            return Err(Error::InvalidCochain(format!("unsupported degree {degree}")));
        }
        if modulus == 0 {
            return Err(Error::InvalidCochain("modulus must be positive".into()));
        }
        let n = g.order();
        if values.len() != n.pow(degree as u32) {
            return Err(Error::InvalidCochain(format!(
                "expected {} values for degree {degree} on a group of order {n}, got {}",
                n.pow(degree as u32),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v >= modulus) {
            return Err(Error::InvalidCochain(format!("value {v} not reduced mod {modulus}")));
        }
        let c = Cochain { degree, modulus, order: n, values };
        if let Some(t) = c.normalization_violation(g.identity()) {
            return Err(Error::InvalidCochain(format!("not normalized at {t:?}")));
        }
        Ok(c)
    }

    /// Tabulates `f` over all tuples; `f` may return any integer, reduced mod `m`.
    pub fn from_fn(
        g: &FiniteGroup,
        degree: usize,
        modulus: u64,
        f: impl Fn(&[usize]) -> i64,
    ) -> Result<Self> {
        let n = g.order();
        let mut values = Vec::with_capacity(n.pow(degree as u32));
        let mut t = vec![0usize; degree];
        for idx in 0..n.pow(degree as u32) {
            decode(idx, n, &mut t);
            values.push(f(&t).rem_euclid(modulus as i64) as u64);
        }
        Self::from_values(g, degree, modulus, values)
    }

    /// A uniformly random normalized cochain.
    pub fn random(g: &FiniteGroup, degree: usize, modulus: u64, seed: u64) -> Self {
        use rand::Rng;
        let mut rng = crate::util::rng(seed);
        let (n, e) = (g.order(), g.identity());
        let mut t = vec![0usize; degree];
        let values = (0..n.pow(degree as u32))
            .map(|idx| {
                decode(idx, n, &mut t);
                if t.contains(&e) {
                    0
                } else {
                    rng.gen_range(0..modulus)
                }
            })
            .collect();
        Cochain { degree, modulus, order: n, values }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn get(&self, args: &[usize]) -> u64 {
        debug_assert_eq!(args.len(), self.degree);
        self.values[encode(args, self.order)]
    }

    #[inline]
    pub fn get1(&self, a: usize) -> u64 {
        self.values[a]
    }

    #[inline]
    pub fn get2(&self, a: usize, b: usize) -> u64 {
        self.values[a * self.order + b]
    }

    #[inline]
    pub fn get3(&self, a: usize, b: usize, c: usize) -> u64 {
        self.values[(a * self.order + b) * self.order + c]
    }

    pub fn check_group(&self, g: &FiniteGroup) -> Result<()> {
        if self.order == g.order() {
            Ok(())
        } else {
            Err(Error::InvalidCochain(format!(
                "cochain lives on a group of order {}, not {}",
                self.order,
                g.order()
            )))
        }
    }

    fn normalization_violation(&self, e: usize) -> Option<Vec<usize>> {
        let mut t = vec![0usize; self.degree];
        for (idx, &v) in self.values.iter().enumerate() {
            if v != 0 {
                decode(idx, self.order, &mut t);
                if t.contains(&e) {
                    return Some(t);
                }
            }
        }
        None
    }

    /// The same cochain written over `Z/m'` with `m | m'`.
    pub fn lift(&self, new_modulus: u64) -> Result<Cochain> {
        if new_modulus == 0 || new_modulus % self.modulus != 0 {
            return Err(Error::InvalidCochain(format!(
                "cannot lift modulus {} to {new_modulus}",
                self.modulus
            )));
        }
        let k = new_modulus / self.modulus;
        Ok(Cochain {
            degree: self.degree,
            modulus: new_modulus,
            order: self.order,
            values: self.values.iter().map(|&v| v * k).collect(),
        })
    }

    /// Smallest modulus over which the same roots of unity are expressible.
    pub fn reduced(&self) -> Cochain {
        let g = self.values.iter().fold(self.modulus, |acc, &v| crate::util::gcd(acc, v));
        Cochain {
            degree: self.degree,
            modulus: self.modulus / g,
            order: self.order,
            values: self.values.iter().map(|&v| v / g).collect(),
        }
    }

    fn compatible(&self, other: &Cochain) -> Result<u64> {
        if self.degree != other.degree || self.order != other.order {
            return Err(Error::InvalidCochain("cochains of different shapes".into()));
        }
        Ok(lcm(self.modulus, other.modulus))
    }

    /// Pointwise product of the underlying `μ`-valued functions.
    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        let m = self.compatible(other)?;
        let (a, b) = (self.lift(m)?, other.lift(m)?);
        Ok(Cochain {
            values: a.values.iter().zip(&b.values).map(|(x, y)| (x + y) % m).collect(),
            ..a
        })
    }

    /// Pointwise inverse.
    pub fn neg(&self) -> Cochain {
        let m = self.modulus;
        Cochain { values: self.values.iter().map(|&v| (m - v) % m).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.neg())
    }

    /// Pointwise `k`-th power.
    pub fn scale(&self, k: u64) -> Cochain {
        let m = self.modulus;
        Cochain { values: self.values.iter().map(|&v| v * (k % m) % m).collect(), ..self.clone() }
    }

    /// Equality of the underlying functions, independent of the modulus used.
    pub fn same_function(&self, other: &Cochain) -> bool {
        match self.compatible(other) {
            Ok(m) => self.lift(m).ok() == other.lift(m).ok(),
            Err(_) => false,
        }
    }
}

#[inline]
fn decode(mut idx: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
}

#[inline]
fn encode(args: &[usize], n: usize) -> usize {
    args.iter().fold(0, |acc, &a| acc * n + a)
}

/// `dφ` for `φ` of degree 1, 2 or 3.
pub fn coboundary(g: &FiniteGroup, phi: &Cochain) -> Result<Cochain> {
    phi.check_group(g)?;
    let m = phi.modulus as i64;
    let n = g.order();
    let values: Vec<u64> = match phi.degree {
        1 => {
            let mut v = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    v.push(d1(g, phi, x, y).rem_euclid(m) as u64);
                }
            }
            v
        }
        2 => {
            let mut v = Vec::with_capacity(n * n * n);
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        v.push(d2(g, phi, a, b, c).rem_euclid(m) as u64);
                    }
                }
            }
            v
        }
        3 => {
            let mut v = Vec::with_capacity(n.pow(4));
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            v.push(d3(g, phi, a, b, c, d).rem_euclid(m) as u64);
                        }
                    }
                }
            }
            v
        }
        d => return Err(Error::InvalidCochain(format!("coboundary of degree {d} not supported"))),
    };
    Cochain::from_values(g, phi.degree + 1, phi.modulus, values)
}

#[inline]
fn d1(g: &FiniteGroup, f: &Cochain, x: usize, y: usize) -> i64 {
    f.get1(y) as i64 - f.get1(g.mul(x, y)) as i64 + f.get1(x) as i64
}

#[inline]
fn d2(g: &FiniteGroup, f: &Cochain, a: usize, b: usize, c: usize) -> i64 {
    f.get2(b, c) as i64 - f.get2(g.mul(a, b), c) as i64 + f.get2(a, g.mul(b, c)) as i64
        - f.get2(a, b) as i64
}

#[inline]
fn d3(g: &FiniteGroup, f: &Cochain, a: usize, b: usize, c: usize, d: usize) -> i64 {
    f.get3(b, c, d) as i64 - f.get3(g.mul(a, b), c, d) as i64 + f.get3(a, g.mul(b, c), d) as i64
        - f.get3(a, b, g.mul(c, d)) as i64
        + f.get3(a, b, c) as i64
}

/// Checks `dφ = 0`, reporting the first failing tuple.
pub fn is_cocycle(g: &FiniteGroup, phi: &Cochain) -> Result<CocycleCertificate> {
    phi.check_group(g)?;
    let m = phi.modulus as i64;
    let n = g.order();
    let witness = match phi.degree {
        1 => (0..n * n)
            .map(|i| (i / n, i % n))
            .find(|&(x, y)| d1(g, phi, x, y).rem_euclid(m) != 0)
            .map(|(x, y)| vec![x, y]),
        2 => (0..n.pow(3))
            .map(|i| (i / (n * n), i / n % n, i % n))
            .find(|&(a, b, c)| d2(g, phi, a, b, c).rem_euclid(m) != 0)
            .map(|(a, b, c)| vec![a, b, c]),
        3 => {
            let mut found = None;
            'outer: for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            if d3(g, phi, a, b, c, d).rem_euclid(m) != 0 {
                                found = Some(vec![a, b, c, d]);
                                break 'outer;
                            }
                        }
                    }
                }
            }
            found
        }
        d => return Err(Error::InvalidCochain(format!("cocycle check of degree {d} not supported"))),
    };
    Ok(CocycleCertificate { degree: phi.degree, is_cocycle: witness.is_none(), witness })
}

/// Requires `φ` to be a cocycle, turning a failure into an error with witness.
pub fn require_cocycle(g: &FiniteGroup, phi: &Cochain) -> Result<()> {
    let cert = is_cocycle(g, phi)?;
    match cert.witness {
        None => Ok(()),
        Some(witness) => Err(Error::NotCocycle { witness }),
    }
}

/// The standard 3-cocycle on `Z/n` (element `i` = residue `i`), with values
/// in `μ_{n²}`: exponent `q·a·n·⌊(b + c)/n⌋` at `(a, b, c)`.
pub fn preset_omega_cyclic(n: usize, q: usize) -> Result<Cochain> {
    if n == 0 || q >= n {
        return Err(Error::Invalid(format!("preset omega needs n >= 1 and 0 <= q < n, got n = {n}, q = {q}")));
    }
    let g = crate::group::preset_group(&crate::group::Preset::Cyclic(n), usize::MAX)?;
    let m = (n * n) as u64;
    let omega = Cochain::from_fn(&g, 3, m, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let carry = (b + c) / n;
        (q * a * n * carry) as i64
    })?;
    if !is_cocycle(&g, &omega)?.is_cocycle {
        return Err(Error::Consistency(format!("preset omega ({n}, {q}) failed the cocycle check")));
    }
    Ok(omega)
}

/// `f*φ` along a homomorphism `f: src → tgt` given by its value table.
pub fn pullback(src: &FiniteGroup, tgt: &FiniteGroup, map: &[usize], phi: &Cochain) -> Result<Cochain> {
    phi.check_group(tgt)?;
    verify_homomorphism(src, tgt, map)?;
    Cochain::from_fn(src, phi.degree, phi.modulus, |t| {
        let img: Vec<usize> = t.iter().map(|&x| map[x]).collect();
        phi.get(&img) as i64
    })
}

/// Restriction to a subgroup, in the subgroup's local indices.
pub fn restrict(g: &FiniteGroup, phi: &Cochain, s: &Subgroup) -> Result<Cochain> {
    phi.check_group(g)?;
    s.check_parent(g)?;
    let sg = s.to_group(g)?;
    let el = s.elements();
    Cochain::from_fn(&sg, phi.degree, phi.modulus, |t| {
        let img: Vec<usize> = t.iter().map(|&x| el[x]).collect();
        phi.get(&img) as i64
    })
}

/// `φ^h(x₁, …, x_n) = φ(h·x₁·h⁻¹, …, h·x_n·h⁻¹)`.
///
/// With this convention `(φ^a)^b = φ^{ab}`, a right action.
pub fn conj_twist(g: &FiniteGroup, phi: &Cochain, h: usize) -> Result<Cochain> {
    phi.check_group(g)?;
    g.check_index(h)?;
    Cochain::from_fn(g, phi.degree, phi.modulus, |t| {
        let img: Vec<usize> = t.iter().map(|&x| g.conj(h, x)).collect();
        phi.get(&img) as i64
    })
}

#[inline]
fn omega_g_value(g: &FiniteGroup, omega: &Cochain, x: usize, a: usize, b: usize) -> i64 {
    let (ca, cb) = (g.conj(x, a), g.conj(x, b));
    omega.get3(x, a, b) as i64 + omega.get3(ca, cb, x) as i64 - omega.get3(ca, x, b) as i64
}

/// `ω_x(a, b) = ω(x, a, b) + ω(xax⁻¹, xbx⁻¹, x) − ω(xax⁻¹, x, b)` on all of `G`.
///
/// Its restriction to the centralizer of `x` is verified to be a 2-cocycle.
pub fn omega_g(g: &FiniteGroup, omega: &Cochain, x: usize) -> Result<Cochain> {
    omega.check_group(g)?;
    g.check_index(x)?;
    if omega.degree != 3 {
        return Err(Error::InvalidCochain("omega must have degree 3".into()));
    }
    let out = Cochain::from_fn(g, 2, omega.modulus, |t| omega_g_value(g, omega, x, t[0], t[1]))?;
    let c = g.centralizer(x);
    let restricted = restrict(g, &out, &c)?;
    let cert = is_cocycle(&c.to_group(g)?, &restricted)?;
    if let Some(w) = cert.witness {
        let w: Vec<usize> = w.into_iter().map(|i| c.elements()[i]).collect();
        return Err(Error::Consistency(format!(
            "omega_g for g = {x} is not a cocycle on the centralizer at {w:?}"
        )));
    }
    Ok(out)
}

/// Checks `dψ = ω|_H` with `ψ` in local indices of `H`.
pub fn check_dpsi(g: &FiniteGroup, omega: &Cochain, h: &Subgroup, psi: &Cochain) -> Result<()> {
    let hg = h.to_group(g)?;
    psi.check_group(&hg)?;
    if psi.degree != 2 || omega.degree != 3 {
        return Err(Error::InvalidCochain("expected a 2-cochain and a 3-cochain".into()));
    }
    let target = restrict(g, omega, h)?;
    let m = lcm(psi.modulus, omega.modulus) as i64;
    let (kp, ko) = (m / psi.modulus as i64, m / omega.modulus as i64);
    let n = hg.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = d2(&hg, psi, a, b, c) * kp;
                let rhs = target.get3(a, b, c) as i64 * ko;
                if (lhs - rhs).rem_euclid(m) != 0 {
                    let el = h.elements();
                    return Err(Error::Incompatible { witness: vec![el[a], el[b], el[c]] });
                }
            }
        }
    }
    Ok(())
}

/// `ψ_x = (ψ^x · ω_x)` restricted to `x⁻¹Hx`, in the local indices of that
/// subgroup. Satisfies `d ψ_x = ω|_{x⁻¹Hx}` (verified).
pub fn psi_g(
    g: &FiniteGroup,
    psi: &Cochain,
    omega: &Cochain,
    x: usize,
    h: &Subgroup,
) -> Result<(Subgroup, Cochain)> {
    check_dpsi(g, omega, h, psi)?;
    let target = h.conjugate(g, g.inv(x));
    let tg = target.to_group(g)?;
    let m = lcm(psi.modulus, omega.modulus);
    let (kp, ko) = ((m / psi.modulus) as i64, (m / omega.modulus) as i64);
    let el = target.elements();
    let out = Cochain::from_fn(&tg, 2, m, |t| {
        let (a, b) = (el[t[0]], el[t[1]]);
        let ha = h.position(g.conj(x, a)).expect("conjugate lies in H");
        let hb = h.position(g.conj(x, b)).expect("conjugate lies in H");
        psi.get2(ha, hb) as i64 * kp + omega_g_value(g, omega, x, a, b) * ko
    })?;
    if let Err(e) = check_dpsi(g, omega, &target, &out) {
        return Err(Error::Consistency(format!("psi_g fails d psi_g = omega: {e}")));
    }
    Ok((target, out))
}

/// `W_x((h₁,k₁),(h₂,k₂)) = ω(h₁,h₂,x) + ω(x,k₁,k₂) − ω(h₁,x,k₂)` as a
/// 2-cochain on the direct product `H × K` (pair `(i, j)` of local indices
/// has index `i·|K| + j`). Returns the product group along with it.
pub fn big_w_g(
    g: &FiniteGroup,
    omega: &Cochain,
    x: usize,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<(FiniteGroup, Cochain)> {
    omega.check_group(g)?;
    g.check_index(x)?;
    let prod = direct_product(&h.to_group(g)?, &k.to_group(g)?)?;
    let nk = k.order();
    let (he, ke) = (h.elements(), k.elements());
    let w = Cochain::from_fn(&prod, 2, omega.modulus, |t| {
        let (h1, k1) = (he[t[0] / nk], ke[t[0] % nk]);
        let (h2, k2) = (he[t[1] / nk], ke[t[1] % nk]);
        omega.get3(h1, h2, x) as i64 + omega.get3(x, k1, k2) as i64 - omega.get3(h1, x, k2) as i64
    })?;
    Ok((prod, w))
}

/// The block cocycle on `L^x = H ∩ xKx⁻¹` (local indices):
/// `ξ_x(l₁,l₂) = ψ(l₁,l₂) − η(x⁻¹l₁x, x⁻¹l₂x) + ω(l₁,l₂,x) + ω(x,x⁻¹l₁x,x⁻¹l₂x) − ω(l₁,x,x⁻¹l₂x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiG {
    pub stabilizer: Subgroup,
    pub cochain: Cochain,
}

pub fn xi_g(
    g: &FiniteGroup,
    psi: &Cochain,
    eta: &Cochain,
    omega: &Cochain,
    x: usize,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<XiG> {
    check_dpsi(g, omega, h, psi)?;
    check_dpsi(g, omega, k, eta)?;
    g.check_index(x)?;
    let l = h.intersection(g, &k.conjugate(g, x));
    let lg = l.to_group(g)?;
    let m = lcm(lcm(psi.modulus, eta.modulus), omega.modulus);
    let (kp, ke, ko) = (
        (m / psi.modulus) as i64,
        (m / eta.modulus) as i64,
        (m / omega.modulus) as i64,
    );
    let xi = g.inv(x);
    let el = l.elements();
    let cochain = Cochain::from_fn(&lg, 2, m, |t| {
        let (l1, l2) = (el[t[0]], el[t[1]]);
        let (c1, c2) = (g.conj(xi, l1), g.conj(xi, l2));
        let hp = psi.get2(h.position(l1).unwrap(), h.position(l2).unwrap()) as i64;
        let kq = eta.get2(k.position(c1).unwrap(), k.position(c2).unwrap()) as i64;
        let w = omega.get3(l1, l2, x) as i64 + omega.get3(x, c1, c2) as i64
            - omega.get3(l1, x, c2) as i64;
        hp * kp - kq * ke + w * ko
    })?;
    let cert = is_cocycle(&lg, &cochain)?;
    if let Some(w) = cert.witness {
        let w: Vec<usize> = w.into_iter().map(|i| el[i]).collect();
        return Err(Error::Consistency(format!("xi_g for g = {x} is not a cocycle at {w:?}")));
    }
    Ok(XiG { stabilizer: l, cochain })
}

/// All `ψ` with `dψ = target` over `Z/M`, `M = lcm(m, modulus of target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D2Solution {
    pub modulus: u64,
    pub particular: Cochain,
    /// Generators of the 2-cocycles `Z²(S, μ_M)`.
    pub generators: Vec<Cochain>,
    /// One cocycle per class of the image of `Z²(S, μ_M)` in `H²(S, C^×)`,
    /// starting with the zero cochain.
    pub h2_transversal: Vec<Cochain>,
}

fn non_identity(s: &FiniteGroup) -> (Vec<usize>, Vec<Option<usize>>) {
    let list: Vec<usize> = (0..s.order()).filter(|&x| x != s.identity()).collect();
    let mut pos = vec![None; s.order()];
    for (i, &x) in list.iter().enumerate() {
        pos[x] = Some(i);
    }
    (list, pos)
}

/// Solves `dψ = target` for normalized 2-cochains on the abstract group `s`.
/// Returns `None` when no solution exists at the working modulus.
pub fn solve_d2_equals(s: &FiniteGroup, target: &Cochain, m: u64) -> Result<Option<D2Solution>> {
    target.check_group(s)?;
    if target.degree != 3 {
        return Err(Error::InvalidCochain("target must have degree 3".into()));
    }
    if s.order() > SOLVE_ORDER_BOUND {
        return Err(Error::OrderTooLarge { order: s.order(), bound: SOLVE_ORDER_BOUND });
    }
    if m == 0 {
        return Err(Error::Invalid("modulus must be positive".into()));
    }
    let big_m = lcm(m, target.modulus);
    let target = target.lift(big_m)?;
    let n = s.order();
    if big_m == 1 || n == 1 {
        let zero = Cochain::zero(2, n, big_m);
        return Ok(Some(D2Solution {
            modulus: big_m,
            particular: zero.clone(),
            generators: Vec::new(),
            h2_transversal: vec![zero],
        }));
    }
    let (list, pos) = non_identity(s);
    let u = list.len();
    let var = |a: usize, b: usize| -> Option<usize> { Some(pos[a]? * u + pos[b]?) };
    let mut a_mat = MatrixModM::zeros(u * u * u, u * u, big_m)?;
    let mut rhs = Vec::with_capacity(u * u * u);
    let mut row = 0;
    for &a in &list {
        for &b in &list {
            for &c in &list {
                // ψ(b,c) − ψ(ab,c) + ψ(a,bc) − ψ(a,b)
                let terms = [
                    (var(b, c), 1),
                    (var(s.mul(a, b), c), big_m - 1),
                    (var(a, s.mul(b, c)), 1),
                    (var(a, b), big_m - 1),
                ];
                for (v, coef) in terms {
                    if let Some(v) = v {
                        a_mat.add_to(row, v, coef);
                    }
                }
                rhs.push(target.get3(a, b, c));
                row += 1;
            }
        }
    }
    let Some(sol) = solve_mod_m(&a_mat, &rhs)? else {
        return Ok(None);
    };
    let to_cochain = |x: &[u64]| -> Result<Cochain> {
        let mut values = vec![0u64; n * n];
        for (i, &a) in list.iter().enumerate() {
            for (j, &b) in list.iter().enumerate() {
                values[a * n + b] = x[i * u + j];
            }
        }
        Cochain::from_values(s, 2, big_m, values)
    };
    let particular = to_cochain(&sol.particular)?;
    let generators: Vec<Cochain> = sol.kernel.iter().map(|k| to_cochain(k)).collect::<Result<_>>()?;
    let h2_transversal = h2_transversal(s, &generators, big_m)?;
    Ok(Some(D2Solution { modulus: big_m, particular, generators, h2_transversal }))
}

/// Breadth-first search over the span of `generators`, keeping one
/// representative per cohomology class.
fn h2_transversal(s: &FiniteGroup, generators: &[Cochain], m: u64) -> Result<Vec<Cochain>> {
    let zero = Cochain::zero(2, s.order(), m);
    let mut useful = Vec::new();
    for gen in generators {
        if cohomologous(s, gen, &zero)?.is_none() {
            useful.push(gen.clone());
        }
    }
    let mut reps = vec![zero];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for gen in &useful {
            let cand = reps[i].add(gen)?;
            let mut known = false;
            for r in &reps {
                if cohomologous(s, &cand, r)?.is_some() {
                    known = true;
                    break;
                }
            }
            if !known {
                reps.push(cand);
                queue.push_back(reps.len() - 1);
            }
        }
    }
    Ok(reps)
}

/// Solves `dμ = target` for a normalized 1-cochain `μ` over `Z/m`.
fn solve_d1_equals(s: &FiniteGroup, target: &Cochain, m: u64) -> Result<Option<Cochain>> {
    let n = s.order();
    let target = target.lift(m)?;
    if m == 1 || n == 1 {
        return Ok(if target.is_zero() { Some(Cochain::zero(1, n, m)) } else { None });
    }
    let (list, pos) = non_identity(s);
    let u = list.len();
    let mut a_mat = MatrixModM::zeros(u * u, u, m)?;
    let mut rhs = Vec::with_capacity(u * u);
    let mut row = 0;
    for &x in &list {
        for &y in &list {
            // μ(y) − μ(xy) + μ(x)
            a_mat.add_to(row, pos[y].unwrap(), 1);
            if let Some(p) = pos[s.mul(x, y)] {
                a_mat.add_to(row, p, m - 1);
            }
            a_mat.add_to(row, pos[x].unwrap(), 1);
            rhs.push(target.get2(x, y));
            row += 1;
        }
    }
    let Some(sol) = solve_mod_m(&a_mat, &rhs)? else {
        return Ok(None);
    };
    let mut values = vec![0u64; n];
    for (i, &x) in list.iter().enumerate() {
        values[x] = sol.particular[i];
    }
    Ok(Some(Cochain::from_values(s, 1, m, values)?))
}

/// A 1-cochain `μ` with `dμ = φ₁ − φ₂` as `C^×`-valued functions, or `None`.
///
/// The witness is first sought at the common modulus `M`; failing that at
/// `M·|S|`, which suffices because `|S|` kills `H²(S, C^×)`.
pub fn cohomologous(s: &FiniteGroup, phi1: &Cochain, phi2: &Cochain) -> Result<Option<Cochain>> {
    phi1.check_group(s)?;
    phi2.check_group(s)?;
    if phi1.degree != 2 || phi2.degree != 2 {
        return Err(Error::InvalidCochain("cohomologous compares 2-cochains".into()));
    }
    let diff = phi1.sub(phi2)?;
    if !is_cocycle(s, &diff)?.is_cocycle {
        return Err(Error::Invalid("cochains have different coboundaries".into()));
    }
    let m = diff.modulus;
    if let Some(mu) = solve_d1_equals(s, &diff, m)? {
        return Ok(Some(mu));
    }
    solve_d1_equals(s, &diff, m * s.order() as u64)
}
