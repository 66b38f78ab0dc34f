//! Finite groups as Cayley tables, with subgroup, coset, double-coset,
//! conjugacy and centralizer machinery.
//!
//! Elements are plain indices `0..order`. Subgroups are sorted index sets
//! tied to their parent through a table fingerprint, so mixing subgroups of
//! different groups is caught instead of silently producing garbage.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Default cap on the order of groups built from presets.
pub const DEFAULT_ORDER_BOUND: usize = 10_000;
/// Default cap on the order of groups whose subgroups get enumerated.
pub const DEFAULT_ENUMERATION_BOUND: usize = 48;

/// Associativity is verified exhaustively up to this order (cubic cost).
const ASSOCIATIVITY_CHECK_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    fingerprint: u64,
}

impl FiniteGroup {
    /// Builds a group from labels and a full Cayley table
    /// (`table[i][j]` is the index of `g_i·g_j`), checking every group axiom.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGroup(format!(
                "table must be {n}x{n} to match {n} labels"
            )));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        Self::from_flat(labels, flat, true)
    }

    fn from_flat(labels: Vec<String>, flat: Vec<usize>, check_assoc: bool) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroup("a group has at least one element".into()));
        }
        if n > u32::MAX as usize {
            return Err(Error::InvalidGroup("order too large for table mode".into()));
        }
        {
            let distinct: BTreeSet<&str> = labels.iter().map(String::as_str).collect();
            if distinct.len() != n {
                return Err(Error::InvalidGroup("element labels must be distinct".into()));
            }
        }
        if let Some(&bad) = flat.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidGroup(format!("table entry {bad} out of range")));
        }
        // Latin square.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = flat[i * n + j];
                if seen[v] {
                    return Err(Error::InvalidGroup(format!("row {i} repeats element {v}")));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let v = flat[i * n + j];
                if seen[v] {
                    return Err(Error::InvalidGroup(format!("column {j} repeats element {v}")));
                }
                seen[v] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| flat[e * n + j] == j && flat[j * n + e] == j))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let inverse: Vec<usize> = (0..n)
            .map(|i| (0..n).find(|&j| flat[i * n + j] == identity).unwrap())
            .collect();
        for i in 0..n {
            if flat[inverse[i] * n + i] != identity {
                return Err(Error::InvalidGroup(format!("element {i} has no two-sided inverse")));
            }
        }
        if check_assoc || n <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = flat[a * n + b];
                    for c in 0..n {
                        if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        let table: Vec<u32> = flat.into_iter().map(|x| x as u32).collect();
        let fingerprint = fingerprint(&table);
        Ok(FiniteGroup { labels, table, identity, inverse, fingerprint })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `g·x·g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Rows of the Cayley table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n)
            .map(|i| (0..n).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub(crate) fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, order: self.order() })
        }
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order())
            .map(|x| self.element_order(x) as u64)
            .fold(1, crate::util::lcm) as usize
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn centralizer(&self, g: usize) -> Subgroup {
        let elements = (0..self.order()).filter(|&x| self.commute(g, x)).collect();
        Subgroup::new_unchecked(self, elements)
    }
}

fn fingerprint(table: &[u32]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &x in table {
        for byte in x.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h ^ (table.len() as u64)
}

/// Preset families of groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `Z/n`; element `i` is the residue `i`.
    Cyclic(usize),
    /// Dihedral group of order `2n`; element `j·n + i` is `r^i s^j`.
    Dihedral(usize),
    /// Symmetric group on `n` points; permutations in lexicographic order,
    /// composed right to left, labelled in cycle notation.
    Symmetric(usize),
    Quaternion8,
    DirectProduct(Box<Preset>, Box<Preset>),
}

impl Preset {
    pub fn order(&self) -> Option<usize> {
        match self {
            Preset::Cyclic(n) => Some(*n),
            Preset::Dihedral(n) => n.checked_mul(2),
            Preset::Symmetric(n) => (1..=*n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
            Preset::Quaternion8 => Some(8),
            Preset::DirectProduct(a, b) => a.order()?.checked_mul(b.order()?),
        }
    }
}

/// Builds a preset group, refusing anything larger than `bound`.
pub fn preset_group(preset: &Preset, bound: usize) -> Result<FiniteGroup> {
    let order = preset
        .order()
        .ok_or_else(|| Error::Invalid("preset order overflows".into()))?;
    if order > bound {
        return Err(Error::OrderTooLarge { order, bound });
    }
    match preset {
        Preset::Cyclic(n) => {
            if *n == 0 {
                return Err(Error::Invalid("cyclic group needs n >= 1".into()));
            }
            cyclic(*n)
        }
        Preset::Dihedral(n) => {
            if *n == 0 {
                return Err(Error::Invalid("dihedral group needs n >= 1".into()));
            }
            dihedral(*n)
        }
        Preset::Symmetric(n) => {
            if *n == 0 || *n > 9 {
                return Err(Error::Invalid("symmetric group needs 1 <= n <= 9".into()));
            }
            symmetric(*n)
        }
        Preset::Quaternion8 => quaternion8(),
        Preset::DirectProduct(a, b) => {
            let ga = preset_group(a, bound)?;
            let gb = preset_group(b, bound)?;
            direct_product(&ga, &gb)
        }
    }
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let labels = (0..n).map(|i| i.to_string()).collect();
    let flat = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    FiniteGroup::from_flat(labels, flat, false)
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    let label = |i: usize, j: usize| -> String {
        let r = match i {
            0 => String::new(),
            1 => "r".into(),
            _ => format!("r^{i}"),
        };
        match (r.is_empty(), j) {
            (true, 0) => "1".into(),
            (false, 0) => r,
            (_, _) => format!("{r}s"),
        }
    };
    let mut labels = Vec::with_capacity(2 * n);
    for j in 0..2 {
        for i in 0..n {
            labels.push(label(i, j));
        }
    }
    let idx = |i: usize, j: usize| j * n + i;
    let mut flat = vec![0; 4 * n * n];
    for a in 0..2 * n {
        let (i1, j1) = (a % n, a / n);
        for b in 0..2 * n {
            let (i2, j2) = (b % n, b / n);
            let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
            flat[a * 2 * n + b] = idx(i, j1 ^ j2);
        }
    }
    FiniteGroup::from_flat(labels, flat, false)
}

fn quaternion8() -> Result<FiniteGroup> {
    // (sign, unit) with unit 0..4 = 1, i, j, k.
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let names = ["1", "i", "j", "k"];
    let mut labels = Vec::new();
    for u in 0..4 {
        labels.push(names[u].to_string());
        labels.push(format!("-{}", names[u]));
    }
    let index = |neg: bool, u: usize| 2 * u + neg as usize;
    let mut flat = vec![0; 64];
    for a in 0..8 {
        for b in 0..8 {
            let (na, ua) = (a % 2 == 1, a / 2);
            let (nb, ub) = (b % 2 == 1, b / 2);
            let (nu, u) = UNIT[ua][ub];
            flat[a * 8 + b] = index(na ^ nb ^ nu, u);
        }
    }
    FiniteGroup::from_flat(labels, flat, false)
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    let perms = permutations(n);
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    let order = perms.len();
    let mut flat = vec![0; order * order];
    let mut composed = vec![0u8; n];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            for i in 0..n {
                composed[i] = pa[pb[i] as usize];
            }
            flat[a * order + b] = lehmer_rank(&composed);
        }
    }
    FiniteGroup::from_flat(labels, flat, false)
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

fn lehmer_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn cycle_notation(p: &[u8]) -> String {
    let mut out = String::new();
    let mut done = vec![false; p.len()];
    for start in 0..p.len() {
        if done[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !done[i] {
            done[i] = true;
            out.push(char::from(b'1' + i as u8));
            i = p[i] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// `A × B`; the pair `(a, b)` has index `a·|B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut labels = Vec::with_capacity(n);
    for x in 0..na {
        for y in 0..nb {
            labels.push(format!("({},{})", a.label(x), b.label(y)));
        }
    }
    let mut flat = vec![0; n * n];
    for u in 0..n {
        let (x1, y1) = (u / nb, u % nb);
        for v in 0..n {
            let (x2, y2) = (v / nb, v % nb);
            flat[u * n + v] = a.mul(x1, x2) * nb + b.mul(y1, y2);
        }
    }
    FiniteGroup::from_flat(labels, flat, false)
}

/// A subgroup, stored as the sorted set of its element indices in the parent.
///
/// The position of an element in [`Subgroup::elements`] is its index in the
/// abstract group returned by [`Subgroup::to_group`]; cochains on a subgroup
/// use those local indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
    parent_order: usize,
    parent_fingerprint: u64,
}

impl Subgroup {
    fn new_unchecked(g: &FiniteGroup, mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup {
            elements,
            parent_order: g.order(),
            parent_fingerprint: g.fingerprint(),
        }
    }

    /// Validates that `elements` is closed under products and inverses.
    pub fn from_elements(g: &FiniteGroup, elements: Vec<usize>) -> Result<Self> {
        for &x in &elements {
            g.check_index(x)?;
        }
        let s = Self::new_unchecked(g, elements);
        if !s.contains(g.identity()) {
            return Err(Error::Invalid("subgroup must contain the identity".into()));
        }
        for &a in &s.elements {
            if !s.contains(g.inv(a)) {
                return Err(Error::Invalid(format!("not closed under inverses at {a}")));
            }
            for &b in &s.elements {
                if !s.contains(g.mul(a, b)) {
                    return Err(Error::Invalid(format!(
                        "not closed under products at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::new_unchecked(g, (0..g.order()).collect())
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::new_unchecked(g, vec![g.identity()])
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Local index of `x` in this subgroup.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent_order
    }

    pub fn check_parent(&self, g: &FiniteGroup) -> Result<()> {
        if self.parent_order == g.order() && self.parent_fingerprint == g.fingerprint() {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// The subgroup as an abstract group on local indices, labels inherited.
    pub fn to_group(&self, g: &FiniteGroup) -> Result<FiniteGroup> {
        self.check_parent(g)?;
        let n = self.order();
        let labels = self.elements.iter().map(|&x| g.label(x).to_string()).collect();
        let mut flat = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                flat.push(self.position(g.mul(a, b)).expect("subgroup is closed"));
            }
        }
        FiniteGroup::from_flat(labels, flat, false)
    }

    /// `g·S·g⁻¹`.
    pub fn conjugate(&self, grp: &FiniteGroup, g: usize) -> Subgroup {
        Self::new_unchecked(grp, self.elements.iter().map(|&x| grp.conj(g, x)).collect())
    }

    pub fn intersection(&self, grp: &FiniteGroup, other: &Subgroup) -> Subgroup {
        Self::new_unchecked(
            grp,
            self.elements.iter().copied().filter(|&x| other.contains(x)).collect(),
        )
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self, grp: &FiniteGroup) -> bool {
        (0..grp.order()).all(|g| self.elements.iter().all(|&x| self.contains(grp.conj(g, x))))
    }

    fn sort_key(&self) -> (usize, &[usize]) {
        (self.order(), &self.elements)
    }
}

/// Smallest subgroup containing `gens`, elements sorted by index.
pub fn subgroup_closure(g: &FiniteGroup, gens: &[usize]) -> Result<Subgroup> {
    for &x in gens {
        g.check_index(x)?;
    }
    let n = g.order();
    let mut member = vec![false; n];
    let mut list = vec![g.identity()];
    member[g.identity()] = true;
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                list.push(y);
            }
        }
        i += 1;
    }
    Ok(Subgroup::new_unchecked(g, list))
}

/// Every subgroup exactly once, sorted by `(order, element set)`.
pub fn enumerate_subgroups(g: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    if g.order() > bound {
        return Err(Error::EnumerationTooLarge { order: g.order(), bound });
    }
    let mut cyclic: Vec<(usize, Subgroup)> = Vec::new();
    let mut seen_cyclic: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..g.order() {
        let c = subgroup_closure(g, &[x])?;
        if seen_cyclic.insert(c.elements.clone()) {
            cyclic.push((x, c));
        }
    }
    // Each subgroup is tracked with a generating set so joins stay cheap.
    let mut all: BTreeSet<Vec<usize>> = seen_cyclic.clone();
    let mut found: Vec<(Vec<usize>, Subgroup)> =
        cyclic.iter().map(|(x, c)| (vec![*x], c.clone())).collect();
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &fi in &frontier {
            for (x, c) in &cyclic {
                let (gens, s) = &found[fi];
                if c.is_subset_of(s) {
                    continue;
                }
                let mut new_gens = gens.clone();
                new_gens.push(*x);
                let t = subgroup_closure(g, &new_gens)?;
                if all.insert(t.elements.clone()) {
                    found.push((new_gens, t));
                    next.push(found.len() - 1);
                }
            }
        }
        frontier = next;
    }
    let mut subgroups: Vec<Subgroup> = found.into_iter().map(|(_, s)| s).collect();
    subgroups.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(subgroups)
}

/// An orbit `H·g·K` of `(g, h, k) ↦ h⁻¹·g·k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    /// Minimal element index in the coset.
    pub rep: usize,
    pub elements: Vec<usize>,
    /// `L^g = H ∩ g·K·g⁻¹` for `g = rep`.
    pub stabilizer: Subgroup,
}

impl DoubleCoset {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Partition of `G` into `(H, K)`-double cosets, ordered by representative.
pub fn double_cosets(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<Vec<DoubleCoset>> {
    h.check_parent(g)?;
    k.check_parent(g)?;
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for rep in 0..n {
        if assigned[rep] {
            continue;
        }
        let mut elements = Vec::new();
        for &hh in h.elements() {
            let left = g.mul(g.inv(hh), rep);
            for &kk in k.elements() {
                let x = g.mul(left, kk);
                if !assigned[x] {
                    assigned[x] = true;
                    elements.push(x);
                }
            }
        }
        elements.sort_unstable();
        let stabilizer = h.intersection(g, &k.conjugate(g, rep));
        out.push(DoubleCoset { rep, elements, stabilizer });
    }
    Ok(out)
}

/// Finds `h ∈ H`, `k ∈ K` with `h⁻¹·x·k = y`, if `x` and `y` share a double coset.
pub fn double_coset_witness(
    g: &FiniteGroup,
    h: &Subgroup,
    k: &Subgroup,
    x: usize,
    y: usize,
) -> Option<(usize, usize)> {
    for &hh in h.elements() {
        let left = g.mul(g.inv(hh), x);
        // need left·k = y, i.e. k = left⁻¹·y
        let kk = g.mul(g.inv(left), y);
        if k.contains(kk) {
            return Some((hh, kk));
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Minimal element index in the class.
    pub rep: usize,
    pub elements: Vec<usize>,
    pub centralizer: Subgroup,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Conjugacy classes with centralizers; the identity class comes first, the
/// rest are ordered by representative.
pub fn conjugacy_data(g: &FiniteGroup) -> Vec<ConjugacyClass> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    let order = core::iter::once(g.identity()).chain((0..n).filter(|&x| x != g.identity()));
    for x in order {
        if assigned[x] {
            continue;
        }
        let mut elements: Vec<usize> = (0..n).map(|t| g.conj(t, x)).collect();
        elements.sort_unstable();
        elements.dedup();
        for &y in &elements {
            assigned[y] = true;
        }
        let rep = elements[0];
        classes.push(ConjugacyClass { rep, elements, centralizer: g.centralizer(rep) });
    }
    classes
}

/// Finds `t` with `t·x·t⁻¹ = y`.
pub fn conjugating_element(g: &FiniteGroup, x: usize, y: usize) -> Option<usize> {
    (0..g.order()).find(|&t| g.conj(t, x) == y)
}

/// Whether `{h·k}` covers the whole group.
pub fn product_is_whole(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<bool> {
    h.check_parent(g)?;
    k.check_parent(g)?;
    let mut hit = vec![false; g.order()];
    for &a in h.elements() {
        for &b in k.elements() {
            hit[g.mul(a, b)] = true;
        }
    }
    Ok(hit.into_iter().all(|x| x))
}

/// Checks that `map` is a group homomorphism `src → dst`.
pub fn verify_homomorphism(src: &FiniteGroup, dst: &FiniteGroup, map: &[usize]) -> Result<()> {
    if map.len() != src.order() {
        return Err(Error::Invalid("map length must equal the source order".into()));
    }
    for &y in map {
        dst.check_index(y)?;
    }
    for a in 0..src.order() {
        for b in 0..src.order() {
            if map[src.mul(a, b)] != dst.mul(map[a], map[b]) {
                return Err(Error::Invalid(format!("not a homomorphism at ({a}, {b})")));
            }
        }
    }
    Ok(())
}

/// A verified isomorphism between two abstract groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    forward: Vec<usize>,
    backward: Vec<usize>,
}

impl Isomorphism {
    pub fn new(src: &FiniteGroup, dst: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if src.order() != dst.order() {
            return Err(Error::Invalid("isomorphic groups have equal orders".into()));
        }
        verify_homomorphism(src, dst, &map)?;
        let mut backward = vec![usize::MAX; dst.order()];
        for (x, &y) in map.iter().enumerate() {
            if backward[y] != usize::MAX {
                return Err(Error::Invalid("map is not injective".into()));
            }
            backward[y] = x;
        }
        Ok(Isomorphism { forward: map, backward })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        let map: Vec<usize> = (0..g.order()).collect();
        Isomorphism { forward: map.clone(), backward: map }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.forward[x]
    }

    pub fn apply_inverse(&self, y: usize) -> usize {
        self.backward[y]
    }

    pub fn inverse(&self) -> Isomorphism {
        Isomorphism { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    pub fn order(&self) -> usize {
        self.forward.len()
    }
}

/// The isomorphism `S → g⁻¹·S·g` (local indices on both sides) given by
/// `x ↦ g⁻¹·x·g`.
pub fn conjugation_isomorphism(
    grp: &FiniteGroup,
    s: &Subgroup,
    g: usize,
) -> Result<(Subgroup, Isomorphism)> {
    s.check_parent(grp)?;
    let target = s.conjugate(grp, grp.inv(g));
    let map = s
        .elements()
        .iter()
        .map(|&x| target.position(grp.conj(grp.inv(g), x)).expect("conjugate subgroup"))
        .collect();
    let iso = Isomorphism::new(&s.to_group(grp)?, &target.to_group(grp)?, map)?;
    Ok((target, iso))
}

/// Human-readable rendering of a subgroup, e.g. `{(), (12)}`.
pub fn describe_subgroup(g: &FiniteGroup, s: &Subgroup) -> String {
    let parts: Vec<&str> = s.elements().iter().map(|&x| g.label(x)).collect();
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        preset_group(&Preset::Symmetric(3), DEFAULT_ORDER_BOUND).unwrap()
    }

    #[test]
    fn presets_have_expected_orders() {
        let cases = [
            (Preset::Cyclic(1), 1),
            (Preset::Cyclic(7), 7),
            (Preset::Dihedral(4), 8),
            (Preset::Symmetric(4), 24),
            (Preset::Quaternion8, 8),
            (
                Preset::DirectProduct(Box::new(Preset::Cyclic(2)), Box::new(Preset::Symmetric(3))),
                12,
            ),
        ];
        for (p, n) in cases {
            assert_eq!(preset_group(&p, DEFAULT_ORDER_BOUND).unwrap().order(), n);
        }
    }

    #[test]
    fn order_bound_is_enforced() {
        let err = preset_group(&Preset::Symmetric(5), 100).unwrap_err();
        assert_eq!(err, Error::OrderTooLarge { order: 120, bound: 100 });
    }

    #[test]
    fn symmetric_labels_are_cycle_words() {
        let g = s3();
        assert_eq!(g.label(g.identity()), "()");
        assert!(g.find_label("(12)").is_some());
        assert!(g.find_label("(123)").is_some());
        assert!(g.find_label("(132)").is_some());
        let a = g.find_label("(12)").unwrap();
        let b = g.find_label("(23)").unwrap();
        // right to left: (12)(23) sends 1 -> 2 -> 3 -> 1
        assert_eq!(g.label(g.mul(a, b)), "(123)");
    }

    #[test]
    fn quaternion_relations() {
        let g = preset_group(&Preset::Quaternion8, 8).unwrap();
        let i = g.find_label("i").unwrap();
        let j = g.find_label("j").unwrap();
        let k = g.find_label("k").unwrap();
        let m1 = g.find_label("-1").unwrap();
        assert_eq!(g.mul(i, j), k);
        assert_eq!(g.mul(i, i), m1);
        assert_eq!(g.mul(j, i), g.find_label("-k").unwrap());
        assert!(!g.is_abelian());
    }

    #[test]
    fn dihedral_relations() {
        let g = preset_group(&Preset::Dihedral(4), 8).unwrap();
        let r = g.find_label("r").unwrap();
        let s = g.find_label("s").unwrap();
        assert_eq!(g.element_order(r), 4);
        assert_eq!(g.element_order(s), 2);
        assert_eq!(g.mul(g.mul(s, r), s), g.inv(r));
    }

    #[test]
    fn rejects_non_groups() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::from_table(labels.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(labels, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // A loop of order 5 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|i| i.to_string()).collect();
        let err = FiniteGroup::from_table(labels, t).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup(msg) if msg.contains("associativity")));
    }

    #[test]
    fn closure_examples() {
        let g = s3();
        assert_eq!(subgroup_closure(&g, &[]).unwrap().order(), 1);
        let t = g.find_label("(12)").unwrap();
        let c = g.find_label("(123)").unwrap();
        assert_eq!(subgroup_closure(&g, &[t]).unwrap().order(), 2);
        assert_eq!(subgroup_closure(&g, &[t, c]).unwrap().order(), 6);
    }

    #[test]
    fn subgroup_counts() {
        let z4 = preset_group(&Preset::Cyclic(4), 4).unwrap();
        let subs = enumerate_subgroups(&z4, 48).unwrap();
        assert_eq!(subs.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 2, 4]);
        let orders: Vec<usize> = enumerate_subgroups(&s3(), 48).unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        let triv = preset_group(&Preset::Cyclic(1), 1).unwrap();
        assert_eq!(enumerate_subgroups(&triv, 48).unwrap().len(), 1);
        let s4 = preset_group(&Preset::Symmetric(4), 24).unwrap();
        assert_eq!(enumerate_subgroups(&s4, 48).unwrap().len(), 30);
        assert!(matches!(
            enumerate_subgroups(&s4, 10),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn double_cosets_of_transposition_subgroup() {
        let g = s3();
        let t = g.find_label("(12)").unwrap();
        let h = subgroup_closure(&g, &[t]).unwrap();
        let dcs = double_cosets(&g, &h, &h).unwrap();
        let mut sizes: Vec<usize> = dcs.iter().map(DoubleCoset::size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
        let unit = dcs.iter().find(|d| d.contains(g.identity())).unwrap();
        assert_eq!(unit.stabilizer, h);
        let other = dcs.iter().find(|d| !d.contains(g.identity())).unwrap();
        assert!(other.stabilizer.is_trivial());
    }

    #[test]
    fn double_cosets_degenerate_cases() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        let dcs = double_cosets(&g, &whole, &whole).unwrap();
        assert_eq!(dcs.len(), 1);
        assert_eq!(dcs[0].stabilizer, whole);
        let triv = Subgroup::trivial(&g);
        assert_eq!(double_cosets(&g, &triv, &triv).unwrap().len(), 6);
    }

    #[test]
    fn mismatched_parent_is_rejected() {
        let g = s3();
        let z6 = preset_group(&Preset::Cyclic(6), 6).unwrap();
        let h = Subgroup::whole(&z6);
        assert_eq!(double_cosets(&g, &h, &h).unwrap_err(), Error::ParentMismatch);
    }

    #[test]
    fn conjugacy_examples() {
        let g = s3();
        let classes = conjugacy_data(&g);
        assert_eq!(classes.iter().map(|c| c.size()).collect::<Vec<_>>(), vec![1, 3, 2]);
        assert_eq!(
            classes.iter().map(|c| c.centralizer.order()).collect::<Vec<_>>(),
            vec![6, 2, 3]
        );
        let q8 = preset_group(&Preset::Quaternion8, 8).unwrap();
        let sizes: Vec<usize> = conjugacy_data(&q8).iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        let z5 = preset_group(&Preset::Cyclic(5), 5).unwrap();
        assert!(conjugacy_data(&z5).iter().all(|c| c.size() == 1 && c.centralizer.order() == 5));
    }

    #[test]
    fn product_examples() {
        let g = s3();
        let t = subgroup_closure(&g, &[g.find_label("(12)").unwrap()]).unwrap();
        let c = subgroup_closure(&g, &[g.find_label("(123)").unwrap()]).unwrap();
        assert!(product_is_whole(&g, &t, &c).unwrap());
        assert!(!product_is_whole(&g, &t, &t).unwrap());
        assert!(product_is_whole(&g, &Subgroup::whole(&g), &t).unwrap());
    }

    #[test]
    fn klein_four_is_elementary_abelian() {
        let p = Preset::DirectProduct(Box::new(Preset::Cyclic(2)), Box::new(Preset::Cyclic(2)));
        let g = preset_group(&p, 4).unwrap();
        assert_eq!(g.order(), 4);
        assert!((0..4).filter(|&x| x != g.identity()).all(|x| g.element_order(x) == 2));
    }
}
