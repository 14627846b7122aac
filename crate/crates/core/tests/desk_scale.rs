use cliquefactor::absorbers::{build_absorbing_set, build_s_absorber, full_pipeline, is_s_t_absorber, AbsorberRoute, Certificate};
use cliquefactor::constructions::{gnp, two_cliques};
use cliquefactor::oracles::{has_kr_factor, max_fractional_tiling, max_kr_tiling};
use cliquefactor::rational::{ratio, BigRational};
use cliquefactor::tiling::{augment_to_target, fracmat_iterate, FracmatOptions, FracmatStop};
use cliquefactor::{AbsorberParams, AugmentParams, Graph, Guards, Seed, VertexSet};

#[test]
fn augmentation_tracks_the_exact_optimum() {
    let gd = Guards::default();
    for s in 0..5 {
        let g = gnp(24, ratio(9, 10), Seed(s)).unwrap();
        let exact = max_kr_tiling(&g, 4, &gd).unwrap().covered();
        let run = augment_to_target(&g, 4, &AugmentParams::with_defaults(4).unwrap(), ratio(1, 1)).unwrap();
        assert!(run.tiling.covered() + 4 >= exact, "seed {s}");
    }
}

#[test]
fn two_cliques_stay_within_the_oracle_bound() {
    let g = two_cliques(12).unwrap();
    let run = augment_to_target(&g, 3, &AugmentParams::with_defaults(3).unwrap(), ratio(1, 1)).unwrap();
    assert!(run.tiling.count_of_size(3) * 3 <= 9);
}

#[test]
fn fracmat_reaches_a_perfect_fractional_tiling() {
    // K_4 ∪ K_3 with r = 3: no triangle factor, but a perfect fractional one.
    let g = Graph::complete(4).disjoint_union(&Graph::complete(3));
    let p = AugmentParams::new(3, ratio(1, 10), ratio(1, 10), None, ratio(1, 10)).unwrap();
    let rep = fracmat_iterate(&g, 3, &p, &FracmatOptions::default()).unwrap();
    let lp = max_fractional_tiling(&g, 3, &Guards::default()).unwrap();
    assert_eq!(lp.total_weight(), BigRational::from_integer(7.into()));
    assert_eq!(rep.fractional.total_weight(), lp.total_weight());
    assert_eq!(rep.rounds, 1);
    assert_eq!(rep.stop, FracmatStop::TargetReached);
}

#[test]
fn absorbers_in_dense_random_graph() {
    let gd = Guards::default();
    let r = 4;
    let p = AbsorberParams::new(r, 6 * r + 1, ratio(1, 2), ratio(1, 10)).unwrap();
    let g = gnp(120, ratio(9, 10), Seed(0)).unwrap();
    let s = VertexSet::from_sorted(vec![3, 30, 60, 90]);
    let forbidden = VertexSet::range(100, 110);
    let a = build_s_absorber(&g, &s, &p, &forbidden, &gd).unwrap().expect("frozen seed 0 admits an absorber");
    assert!(is_s_t_absorber(&g, &s, &a.body, &p, &gd).unwrap());
    assert!(a.body.is_disjoint(&forbidden) && a.body.is_disjoint(&s));
    let AbsorberRoute::Diamond { paths, .. } = &a.route else { panic!("expected the diamond route") };
    let mut seen = VertexSet::default();
    for path in paths {
        path.validate(&g, r - 1).unwrap();
        let inner = path.vertices().difference(&s);
        assert!(inner.is_disjoint(&seen) && inner.is_disjoint(&forbidden));
        seen = seen.union(&inner);
    }
}

#[test]
fn absorbing_set_is_certified() {
    let g = gnp(40, ratio(95, 100), Seed(0)).unwrap();
    let p = AbsorberParams::new(4, 4, ratio(1, 2), ratio(1, 10)).unwrap();
    let a = build_absorbing_set(&g, &p, Seed(0), &Guards::default()).unwrap();
    assert_eq!(a.set.len(), 16);
    assert_eq!(a.certificate, Certificate::Certified);
}

#[test]
fn pipeline_factors_dense_random_graph() {
    let g = gnp(48, ratio(9, 10), Seed(0)).unwrap();
    let p = AbsorberParams::new(4, 4, ratio(1, 3), ratio(1, 10)).unwrap();
    let rep = full_pipeline(&g, &p, &AugmentParams::with_defaults(4).unwrap(), Seed(0), &Guards::default()).unwrap();
    assert!(rep.perfect);
    rep.tiling.validate(&g).unwrap();
    assert_eq!(rep.tiling.covered(), 48);
    assert!(has_kr_factor(&g, 4, &Guards::default()).unwrap().exists());
}
