#[path = "support/radical_oracle.rs"]
mod radical_oracle;

use gtcat_core::category::{projective_cover_data, validate_category};
use gtcat_core::cochain::Cochain;
use gtcat_core::group::{preset_group, Preset, Subgroup};
use gtcat_core::projrep::{analyze, ScalarMode, TwistedAlgebra};
use gtcat_core::Options;

use radical_oracle::Oracle;

fn library_pairs(p: u64) -> Vec<(usize, usize)> {
    let g = preset_group(&Preset::Symmetric(3), 100).unwrap();
    let alg = TwistedAlgebra::new(g, Cochain::zero(2, 6, 1), ScalarMode::FiniteField { p, e: None }).unwrap();
    let r = analyze(&alg, &Options::default()).unwrap();
    let mut v: Vec<(usize, usize)> = r.dimensions().into_iter().zip(r.projective_cover_dims).collect();
    v.sort();
    v
}

#[test]
fn s3_char_3_matches_brute_force() {
    let o = Oracle::s3(3).analyze();
    assert_eq!(o.simples, vec![(1, 3), (1, 3)]);
    assert_eq!(o.radical_dim, 4);
    assert_eq!(library_pairs(3), o.simples);
}

#[test]
fn s3_char_2_matches_brute_force() {
    let o = Oracle::s3(2).analyze();
    assert_eq!(o.simples, vec![(1, 2), (2, 2)]);
    assert_eq!(o.radical_dim, 1);
    assert_eq!(library_pairs(2), o.simples);
}

#[test]
fn cartan_sum_over_simples() {
    for p in [2u32, 3] {
        let o = Oracle::s3(p).analyze();
        // Each projective P(S) occurs dim S times in the regular module.
        assert_eq!(o.simples.iter().map(|(s, pc)| s * pc).sum::<usize>(), 6);
    }
}

#[test]
fn rep_s3_projective_covers_through_the_category_layer() {
    let g = preset_group(&Preset::Symmetric(3), 100).unwrap();
    let spec = validate_category(&g, &Cochain::zero(3, 6, 1), &Subgroup::whole(&g), &Cochain::zero(2, 6, 1)).unwrap();
    for p in [2u64, 3] {
        let cls = projective_cover_data(&spec, p, &Options::default()).unwrap();
        let mut got: Vec<(usize, usize)> = cls.fpdims().into_iter().zip(cls.pcover_fpdims()).collect();
        got.sort();
        assert_eq!(got, Oracle::s3(p as u32).analyze().simples);
    }
}
