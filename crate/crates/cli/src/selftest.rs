//! Built-in invariant suites behind `gtcat selftest`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use gtcat_core::category::{
    category_simples, enumerate_module_categories, fiber_functors, module_cat_rank, module_cat_simples,
    projective_cover_data, simple_dual, validate_category, ModuleCatSpec,
};
use gtcat_core::center::{center_simples, cross_check_via_double, CenterSpec};
use gtcat_core::cochain::{coboundary, is_cocycle, preset_omega_cyclic, xi_g, Cochain};
use gtcat_core::group::{double_cosets, enumerate_subgroups, preset_group, FiniteGroup, Preset, Subgroup};
use gtcat_core::Options;

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub struct Report {
    pub full: bool,
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mode": if self.full { "full" } else { "quick" },
            "passed": self.passed(),
            "suites": self.suites.iter().map(|s| json!({ "name": s.name, "passed": s.passed, "detail": s.detail })).collect::<Vec<_>>(),
        })
    }
}

type Check = Result<String, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn grp(p: Preset) -> FiniteGroup {
    preset_group(&p, 10_000).expect("preset within bound")
}

fn c2xc2() -> Preset {
    Preset::DirectProduct(Box::new(Preset::Cyclic(2)), Box::new(Preset::Cyclic(2)))
}

fn groups(full: bool) -> Vec<(&'static str, FiniteGroup)> {
    let mut v = vec![
        ("Z4", grp(Preset::Cyclic(4))),
        ("Z2xZ2", grp(c2xc2())),
        ("S3", grp(Preset::Symmetric(3))),
    ];
    if full {
        v.push(("D4", grp(Preset::Dihedral(4))));
        v.push(("Q8", grp(Preset::Quaternion8)));
        v.push(("Z6", grp(Preset::Cyclic(6))));
    }
    v
}

fn d_squared(opts: &Options, full: bool) -> Check {
    let samples = if full { 200 } else { 20 };
    let mut count = 0;
    for (name, g) in groups(full) {
        for degree in 1..=2 {
            for m in [2u64, 4, 12] {
                for s in 0..samples {
                    let seed = opts.seed ^ ((degree as u64) << 40) ^ (m << 32) ^ s;
                    let c = Cochain::random(&g, degree, m, seed);
                    let dc = coboundary(&g, &c).map_err(err)?;
                    if !is_cocycle(&g, &dc).map_err(err)?.is_cocycle {
                        return Err(format!("d(d c) != 0 on {name}, degree {degree}, modulus {m}"));
                    }
                    count += 1;
                }
            }
        }
    }
    let top = if full { 12 } else { 6 };
    for n in 1..=top {
        for q in 0..n {
            let w = preset_omega_cyclic(n, q).map_err(err)?;
            let g = grp(Preset::Cyclic(n));
            if !is_cocycle(&g, &w).map_err(err)?.is_cocycle {
                return Err(format!("preset omega ({n}, {q}) is not a cocycle"));
            }
        }
    }
    Ok(format!("{count} random cochains, preset cocycles up to n = {top}"))
}

fn subgroups(g: &FiniteGroup, opts: &Options) -> Result<Vec<Subgroup>, String> {
    enumerate_subgroups(g, opts.max_enumeration_order).map_err(err)
}

fn trivial_psi(h: &Subgroup) -> Cochain {
    Cochain::zero(2, h.order(), 1)
}

fn xi_cocycles(opts: &Options, full: bool) -> Check {
    let mut count = 0;
    for (name, g) in groups(full) {
        let omega = Cochain::zero(3, g.order(), 1);
        let subs = subgroups(&g, opts)?;
        for h in &subs {
            for k in &subs {
                for z in double_cosets(&g, h, k).map_err(err)? {
                    let xg = xi_g(&g, &trivial_psi(h), &trivial_psi(k), &omega, z.rep, h, k).map_err(err)?;
                    if xg.stabilizer.order() * z.size() != h.order() * k.order() {
                        return Err(format!("double coset size on {name} at {}", g.label(z.rep)));
                    }
                    count += 1;
                }
            }
        }
    }
    for n in [2usize, 3, 4] {
        let g = grp(Preset::Cyclic(n));
        for q in 0..n {
            let omega = preset_omega_cyclic(n, q).map_err(err)?;
            let pairs = enumerate_module_categories(&g, &omega, opts).map_err(err)?;
            for a in &pairs {
                for b in &pairs {
                    for z in double_cosets(&g, &a.h, &b.h).map_err(err)? {
                        xi_g(&g, &a.psi, &b.psi, &omega, z.rep, &a.h, &b.h).map_err(err)?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} block cocycles checked"))
}

fn fpdim_sums(opts: &Options, full: bool) -> Check {
    let mut count = 0;
    for (name, g) in groups(full) {
        let omega = Cochain::zero(3, g.order(), 1);
        for h in subgroups(&g, opts)? {
            let spec = validate_category(&g, &omega, &h, &trivial_psi(&h)).map_err(err)?;
            let cls = category_simples(&spec, opts).map_err(err)?;
            let s: usize = cls.fpdims().iter().map(|d| d * d).sum();
            if s != g.order() {
                return Err(format!("sum of squared fpdims {s} != {} on {name}", g.order()));
            }
            let reg = module_cat_rank(&ModuleCatSpec::regular(&spec)).map_err(err)?;
            if reg != cls.rank() {
                return Err(format!("rank {} disagrees with regular class count {reg} on {name}", cls.rank()));
            }
            for i in 0..cls.rank() {
                let j = simple_dual(&spec, &cls, i).map_err(err)?;
                if simple_dual(&spec, &cls, j).map_err(err)? != i {
                    return Err(format!("duality is not an involution on {name}"));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} categories"))
}

fn centers(opts: &Options, full: bool) -> Check {
    let mut lines = Vec::new();
    let mut cases: Vec<(String, FiniteGroup, Cochain)> = groups(full)
        .into_iter()
        .map(|(n, g)| {
            let w = Cochain::zero(3, g.order(), 1);
            (n.to_string(), g, w)
        })
        .collect();
    for (n, q) in [(2usize, 1usize), (3, 1), (4, 2)] {
        cases.push((format!("Z{n} twisted by {q}"), grp(Preset::Cyclic(n)), preset_omega_cyclic(n, q).map_err(err)?));
    }
    for (name, g, w) in cases {
        let spec = CenterSpec::new(&g, &w).map_err(err)?;
        let cls = center_simples(&spec, opts).map_err(err)?;
        let s: usize = cls.fpdims().iter().map(|d| d * d).sum();
        if s != g.order() * g.order() {
            return Err(format!("center of {name}: sum of squares {s}"));
        }
        let cc = cross_check_via_double(&spec, opts).map_err(err)?;
        if !cc.passed() {
            return Err(format!("center of {name} disagrees with the double construction"));
        }
        lines.push(format!("{name}: rank {}", cls.rank()));
    }
    Ok(lines.join("; "))
}

fn modular(opts: &Options, full: bool) -> Check {
    let mut lines = Vec::new();
    let mut cases = vec![("S3", grp(Preset::Symmetric(3)), 2u64), ("S3", grp(Preset::Symmetric(3)), 3)];
    if full {
        cases.push(("Z2xZ2", grp(c2xc2()), 2));
        cases.push(("D4", grp(Preset::Dihedral(4)), 2));
    }
    for (name, g, p) in cases {
        let omega = Cochain::zero(3, g.order(), 1);
        for h in subgroups(&g, opts)? {
            let spec = validate_category(&g, &omega, &h, &trivial_psi(&h)).map_err(err)?;
            let cls = projective_cover_data(&spec, p, opts).map_err(err)?;
            let s: usize = cls.fpdims().iter().zip(cls.pcover_fpdims()).map(|(a, b)| a * b).sum();
            if s != g.order() {
                return Err(format!("{name} in char {p}: sum fpdim * pcover = {s}"));
            }
        }
        lines.push(format!("{name} char {p}"));
    }
    Ok(lines.join("; "))
}

fn module_categories(opts: &Options, full: bool) -> Check {
    let mut expect: BTreeMap<&str, (FiniteGroup, Cochain, usize)> = BTreeMap::new();
    expect.insert("Z2", (grp(Preset::Cyclic(2)), Cochain::zero(3, 2, 1), 2));
    expect.insert("Z2 twisted", (grp(Preset::Cyclic(2)), preset_omega_cyclic(2, 1).map_err(err)?, 1));
    expect.insert("Z2xZ2", (grp(c2xc2()), Cochain::zero(3, 4, 1), 6));
    if full {
        expect.insert("S3", (grp(Preset::Symmetric(3)), Cochain::zero(3, 6, 1), 4));
    }
    for (name, (g, w, n)) in &expect {
        let m = enumerate_module_categories(g, w, opts).map_err(err)?;
        if m.len() != *n {
            return Err(format!("{name}: {} module categories, expected {n}", m.len()));
        }
        for p in &m {
            let spec = validate_category(g, w, &p.h, &p.psi).map_err(err)?;
            let cls = module_cat_simples(&ModuleCatSpec::regular(&spec), opts).map_err(err)?;
            if cls.rank() == 0 {
                return Err(format!("{name}: empty module category"));
            }
        }
    }
    let s3 = grp(Preset::Symmetric(3));
    let rep = validate_category(&s3, &Cochain::zero(3, 6, 1), &Subgroup::whole(&s3), &Cochain::zero(2, 6, 1)).map_err(err)?;
    let k = grp(c2xc2());
    let coh = validate_category(&k, &Cochain::zero(3, 4, 1), &Subgroup::trivial(&k), &Cochain::zero(2, 1, 1)).map_err(err)?;
    let (a, b) = (fiber_functors(&rep, opts).map_err(err)?.len(), fiber_functors(&coh, opts).map_err(err)?.len());
    if (a, b) != (1, 2) {
        return Err(format!("fiber functors: Rep(S3) {a}, Coh(Z2xZ2) {b}"));
    }
    Ok(format!("{} enumerations, fiber functor counts 1 and 2", expect.len()))
}

/// Runs every suite. `full` widens the groups and sample counts.
pub fn run(opts: &Options, full: bool) -> Report {
    let suites: [(&'static str, fn(&Options, bool) -> Check); 6] = [
        ("coboundary", d_squared),
        ("block-cocycles", xi_cocycles),
        ("fpdims-and-duals", fpdim_sums),
        ("center", centers),
        ("projective-covers", modular),
        ("module-categories", module_categories),
    ];
    let suites = suites
        .iter()
        .map(|(name, f)| {
            let (passed, detail) = match f(opts, full) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            SuiteResult { name, passed, detail }
        })
        .collect();
    Report { full, suites }
}
