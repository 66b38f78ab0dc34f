#[path = "support/bimodule_oracle.rs"]
mod bimodule_oracle;

use bimodule_oracle::{linear_characters, Bimodule, Mat, Model};
use gtcat_core::category::{category_simples, enumerate_module_categories, simple_dual, validate_category};
use gtcat_core::cochain::{coboundary, preset_omega_cyclic, pullback, Cochain};
use gtcat_core::group::{preset_group, FiniteGroup, Preset, Subgroup};
use gtcat_core::Options;
use num_complex::Complex64 as C64;

fn grp(p: Preset) -> FiniteGroup {
    preset_group(&p, 1000).unwrap()
}

fn scramble(g: &FiniteGroup, c: &Cochain, seed: u64) -> Cochain {
    let b = Cochain::random(g, c.degree() - 1, c.modulus(), seed);
    c.add(&coboundary(g, &b).unwrap()).unwrap()
}

/// A surjection onto Z/2 found by brute force.
fn sign_map(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    (1u32..1 << n)
        .map(|mask| (0..n).map(|i| ((mask >> i) & 1) as usize).collect::<Vec<_>>())
        .find(|f| f[g.identity()] == 0 && (0..n).all(|a| (0..n).all(|b| f[g.mul(a, b)] == (f[a] + f[b]) % 2)))
        .unwrap()
}

fn fixtures() -> Vec<(String, FiniteGroup, Cochain, Subgroup, Cochain)> {
    let opts = Options::default();
    let z2 = grp(Preset::Cyclic(2));
    let w2 = preset_omega_cyclic(2, 1).unwrap();
    let mut gw: Vec<(String, FiniteGroup, Cochain)> = Vec::new();
    for (n, q) in [(2usize, 1usize), (4, 1), (4, 2), (6, 3)] {
        let g = grp(Preset::Cyclic(n));
        let w = scramble(&g, &preset_omega_cyclic(n, q).unwrap(), 5);
        gw.push((format!("Z{n} q{q}"), g, w));
    }
    for (name, p) in [("S3", Preset::Symmetric(3)), ("D4", Preset::Dihedral(4)), ("Q8", Preset::Quaternion8)] {
        let g = grp(p);
        let w = Cochain::zero(3, g.order(), 1);
        gw.push((name.to_string(), g.clone(), w));
        let w = scramble(&g, &pullback(&g, &z2, &sign_map(&g), &w2).unwrap(), 7);
        gw.push((format!("{name} twisted"), g, w));
    }
    let mut out = Vec::new();
    for (name, g, w) in gw {
        for pair in enumerate_module_categories(&g, &w, &opts).unwrap() {
            let hg = pair.h.to_group(&g).unwrap();
            let psi = scramble(&hg, &pair.psi, 3);
            out.push((format!("{name}, |H| = {}", pair.h.order()), g.clone(), w.clone(), pair.h.clone(), psi));
        }
    }
    out
}

#[test]
fn duals_agree_with_bimodules() {
    let opts = Options::default();
    let mut checked = 0;
    for (name, g, w, h, psi) in fixtures() {
        let spec = validate_category(&g, &w, &h, &psi).unwrap();
        let cls = category_simples(&spec, &opts).unwrap();
        let model = Model::new(&g, &w, &h, &psi);
        let mut objects: Vec<Option<Bimodule>> = (0..cls.rank()).map(|_| None).collect();
        let mut chars: Vec<Vec<C64>> = vec![Vec::new(); cls.rank()];
        for (bi, b) in cls.blocks.iter().enumerate() {
            let gg = b.coset.rep;
            let f = model.free(gg);
            let pi = model.fiber(&f, gg, &b.coset.stabilizer, &b.xi);
            let nl = pi.len();
            for (j, v) in b.report.irreps.iter().enumerate() {
                let chi = v.character().unwrap();
                let mut p = Mat::zeros(f.dim(), f.dim());
                for (l, a) in pi.iter().enumerate() {
                    let s = chi[l].conj() * (v.dimension as f64 / nl as f64);
                    for (x, y) in p.data.iter_mut().zip(&a.data) {
                        *x += s * y;
                    }
                }
                let i = cls.find(bi, j).unwrap();
                objects[i] = Some(model.generated(&f, &p));
                chars[i] = chi;
            }
        }
        let objects: Vec<Bimodule> = objects.into_iter().map(Option::unwrap).collect();
        // True duals.
        let mut dual = vec![usize::MAX; cls.rank()];
        for i in 0..cls.rank() {
            let gi = g.inv(cls.blocks[cls.simples[i].block].coset.rep);
            let hits: Vec<usize> = (0..cls.rank())
                .filter(|&j| cls.blocks[cls.simples[j].block].coset.contains(gi))
                .filter(|&j| model.hom_from_unit(&objects[i], &objects[j]) > 0)
                .collect();
            assert_eq!(hits.len(), 1, "{name}: simple {i} has duals {hits:?}");
            dual[i] = hits[0];
        }
        for i in 0..cls.rank() {
            assert_eq!(dual[dual[i]], i, "{name}: oracle duality is not an involution");
        }
        // Relabelling a block by a character χ of its stabilizer.
        let twist = |i: usize, chi: &[C64]| -> usize {
            let b = cls.simples[i].block;
            let want: Vec<C64> = chars[i].iter().zip(chi).map(|(a, c)| a * c).collect();
            (0..cls.rank())
                .find(|&j| cls.simples[j].block == b && chars[j].iter().zip(&want).all(|(a, c)| (a - c).norm() < 1e-6))
                .unwrap()
        };
        let lib: Vec<usize> = (0..cls.rank()).map(|i| simple_dual(&spec, &cls, i).unwrap()).collect();
        // With the same fiber normalization on both sides the labels agree
        // outright; the character check below is the convention-free part.
        assert_eq!(lib, dual, "{name}");
        for (bi, b) in cls.blocks.iter().enumerate() {
            let members: Vec<usize> = (0..cls.rank()).filter(|&i| cls.simples[i].block == bi).collect();
            let target = cls.simples[dual[members[0]]].block;
            let lchars = linear_characters(&cls.blocks[target].coset.stabilizer.to_group(&g).unwrap());
            let ok = if target == bi {
                lchars.iter().any(|chi| {
                    let inv: Vec<C64> = chi.iter().map(|c| c.conj()).collect();
                    members.iter().all(|&i| lib[i] == twist(dual[twist(i, chi)], &inv))
                })
            } else {
                lchars.iter().any(|chi| members.iter().all(|&i| lib[i] == twist(dual[i], chi)))
            };
            assert!(ok, "{name}: block of {} has duals {:?}, bimodules give {:?}", g.label(b.coset.rep),
                members.iter().map(|&i| lib[i]).collect::<Vec<_>>(), members.iter().map(|&i| dual[i]).collect::<Vec<_>>());
        }
        checked += 1;
    }
    println!("{checked} categories");
}
