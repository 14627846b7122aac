//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Tolerances and runtime limits are fixed below.

mod common;

use std::time::{Duration, Instant};

use cliquefactor::absorbers::{build_absorbing_set, build_s_absorber, full_pipeline, is_s_t_absorber, is_xi_absorbing, AbsorberRoute, Certificate};
use cliquefactor::constructions::{bollobas_erdos, bottleneck_extremal, gnp, hs_extremal, two_cliques, SphereParams};
use cliquefactor::graph::GraphBuilder;
use cliquefactor::oracles::{enumerate_kr, has_kr_factor, independence_number, max_cover_tiling, max_fractional_tiling, max_kr_tiling};
use cliquefactor::rational::{ratio, BigRational, Rational};
use cliquefactor::reduced::{validate_multi_embedding, MultiEmbedding, UpsilonTable};
use cliquefactor::tiling::{augment_to_target, flatten_in_blowup, greedy_tiling, tiling_to_fractional, AugmentParams};
use cliquefactor::{AbsorberParams, Graph, Guards, Seed, Tiling, VertexSet};
use common::*;
use rand::seq::index::sample;
use rand::Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn big(n: usize) -> BigRational {
    BigRational::from_integer(n.into())
}

fn no_factor(g: &Graph, r: usize) -> bool {
    !has_kr_factor(g, r, &Guards::default()).unwrap().exists()
}

fn extremal_tightness() -> Outcome {
    let gd = Guards::default();
    for n in [8, 12, 16] {
        let g = hs_extremal(n, 4).unwrap();
        ensure!(g.min_degree().unwrap() == 3 * n / 4 - 1, "hs_extremal({n}, 4) has δ = {}", g.min_degree().unwrap());
        ensure!(independence_number(&g, &gd).unwrap() == n / 4 + 1, "hs_extremal({n}, 4) has the wrong α");
        ensure!(no_factor(&g, 4), "hs_extremal({n}, 4) has a K_4-factor");
    }
    for n in [12, 16, 20] {
        let g = two_cliques(n).unwrap();
        ensure!(independence_number(&g, &gd).unwrap() == 2, "two_cliques({n}) has α ≠ 2");
        ensure!(g.min_degree().unwrap() == n / 2 - 2, "two_cliques({n}) has δ ≠ n/2 − 2");
        ensure!(no_factor(&g, 2), "two_cliques({n}) has a perfect matching");
        ensure!(no_factor(&g, 3), "two_cliques({n}) has a triangle factor");
    }
    let g = bottleneck_extremal(16, 4, &Graph::cycle(9).unwrap()).unwrap();
    ensure!(no_factor(&g, 4), "bottleneck_extremal(16, 4, C_9) has a K_4-factor");
    Ok("hs n ∈ {8,12,16}, two_cliques n ∈ {12,16,20}, bottleneck(16,4,C_9)".into())
}

fn oracle_cross_validation() -> Outcome {
    let gd = Guards::default();
    let ps = [ratio(2, 5), ratio(3, 5), ratio(4, 5)];
    for i in 0..200u64 {
        let n = 10 + (i % 9) as usize;
        let p = ps[((i / 9) % 3) as usize];
        let r = 2 + (i % 3) as usize;
        let g = gnp(n, p, Seed(1000 + i)).unwrap();
        let alpha = independence_number(&g, &gd).unwrap();
        ensure!(alpha == brute_alpha(&g), "instance {i}: α = {alpha}, enumeration says {}", brute_alpha(&g));
        let t = max_kr_tiling(&g, r, &gd).unwrap();
        t.validate(&g).map_err(|e| e.to_string())?;
        let want = brute_max_tiling_cover(&g, r);
        ensure!(t.covered() == want, "instance {i}: tiling covers {}, enumeration says {want}", t.covered());
    }
    Ok("200 instances, n ∈ 10..=18, r ∈ {2,3,4}".into())
}

fn lp_dominance() -> Outcome {
    let gd = Guards::default();
    let c5 = max_fractional_tiling(&Graph::cycle(5).unwrap(), 2, &gd).unwrap();
    ensure!(c5.total_weight() == big(5), "C_5, r = 2 gives {}", c5.total_weight());
    let k7 = max_fractional_tiling(&Graph::complete(7), 3, &gd).unwrap();
    ensure!(k7.total_weight() == big(7), "K_7, r = 3 gives {}", k7.total_weight());
    let mut suite: Vec<(Graph, usize)> = vec![
        (Graph::cycle(5).unwrap(), 2),
        (Graph::complete(7), 3),
        (hs_extremal(8, 4).unwrap(), 4),
        (two_cliques(12).unwrap(), 3),
        (bottleneck_extremal(16, 4, &Graph::cycle(9).unwrap()).unwrap(), 4),
    ];
    for s in 0..10 {
        suite.push((gnp(10, ratio(3, 5), Seed(s)).unwrap(), 3));
    }
    for (idx, (g, r)) in suite.iter().enumerate() {
        let lp = max_fractional_tiling(g, *r, &gd).unwrap();
        lp.validate(g).map_err(|e| e.to_string())?;
        let t = max_kr_tiling(g, *r, &gd).unwrap();
        ensure!(lp.total_weight() >= big(t.covered()), "suite {idx}: LP {} below integral {}", lp.total_weight(), t.covered());
    }
    Ok(format!("C_5 = 5, K_7 = 7 exactly; dominance on {} instances", suite.len()))
}

fn augmentation_engine() -> Outcome {
    let gd = Guards::default();
    let p = AugmentParams::with_defaults(4).unwrap();
    let mut worst = 0usize;
    let mut swaps = 0;
    for s in 0..50 {
        let g = gnp(24, ratio(17, 20), Seed(2000 + s)).unwrap();
        let exact = max_kr_tiling(&g, 4, &gd).unwrap().covered();
        let run = augment_to_target(&g, 4, &p, ratio(1, 1)).unwrap();
        run.tiling.validate(&g).map_err(|e| e.to_string())?;
        ensure!(run.tiling.covered() + 4 >= exact, "seed {s}: {} covered, optimum {exact}", run.tiling.covered());
        worst = worst.max(exact.saturating_sub(run.tiling.covered()));
        for t in &run.traces {
            t.validate(&g).map_err(|e| format!("seed {s}: {e}"))?;
        }
        swaps += run.traces.len();
        ensure!(run.history.windows(2).all(|w| w[0] <= w[1]), "seed {s}: coverage decreased");
    }
    Ok(format!("50 seeds, worst shortfall {worst} (limit 4), {swaps} swap traces checked"))
}

fn upsilon_suite() -> Outcome {
    let mut instances = 0;
    let mut seed = 0u64;
    for r in [4usize, 5, 6, 8] {
        let mut accepted = 0;
        while accepted < 260 {
            seed += 1;
            let k = Seed(seed).rng().random_range(3..=10);
            let Some(rm) = dense_multigraph(k, r, Seed(seed)) else { continue };
            accepted += 1;
            let table = UpsilonTable::new(&rm, r + 1).unwrap();
            for v in 0..k {
                let brute = brute_upsilon(&rm, r + 1, v);
                ensure!((0..k).all(|u| table.upsilon(v).contains(u) == brute[u]), "seed {seed}: Υ disagrees with enumeration");
                for u in rm.double_neighbors(v).iter() {
                    ensure!(table.upsilon(v).contains(u), "seed {seed}, r = {r}: double neighbour {u} of {v} outside Υ");
                }
                ensure!(2 * table.upsilon2(v).count() >= k, "seed {seed}, r = {r}: |Υ²({v})| < k/2");
                let nb = rm.neighbors(v);
                if r * nb.count() >= (r - 1) * k {
                    ensure!(nb.is_subset(table.upsilon(v)), "seed {seed}, r = {r}: N({v}) ⊄ Υ({v})");
                }
            }
        }
        instances += accepted;
    }
    Ok(format!("{instances} multigraphs, zero violations"))
}

fn validator_equivalence() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=5usize {
        let patterns = if n <= 4 { all_graphs(n) } else { graph_classes(n) };
        for k in 1..=4usize {
            let hosts = all_multigraphs(k, k == 4);
            for h in &patterns {
                for rm in &hosts {
                    let mut assign = vec![0usize; n];
                    loop {
                        let me = MultiEmbedding::new(h.clone(), assign.clone()).unwrap();
                        let got = validate_multi_embedding(&me, rm).unwrap().conditions();
                        let want = brute_conditions(h, rm, &assign);
                        ensure!(got == want, "H = {:?}, R = {:?}, f = {assign:?}: validator {got:?}, reference {want:?}", h.edges(), rm.edges());
                        checked += 1;
                        let Some(pos) = (0..n).find(|&i| assign[i] + 1 < k) else { break };
                        assign[pos] += 1;
                        assign[..pos].iter_mut().for_each(|a| *a = 0);
                    }
                }
            }
        }
    }
    Ok(format!("{checked} (H, R, f) triples agree"))
}

fn sphere_generator() -> Outcome {
    let p = SphereParams::with_defaults(6, 30, ratio(1, 8));
    for s in 0..100 {
        let sg = bollobas_erdos(&p, Seed(s)).unwrap();
        ensure!(sg.graph.induced(sg.first.as_slice()).is_triangle_free(), "seed {s}: first half has a triangle");
        ensure!(sg.graph.induced(sg.second.as_slice()).is_triangle_free(), "seed {s}: second half has a triangle");
        ensure!(enumerate_kr(&sg.graph, 4).is_empty(), "seed {s}: contains a K_4");
    }
    let sg = bollobas_erdos(&p, Seed(0)).unwrap();
    let d = sg.graph.pair_density(&sg.first, &sg.second).unwrap().value();
    ensure!(d >= ratio(1, 2) - p.zeta, "frozen seed 0: cross density {d} < 3/8");
    Ok(format!("100 seeds K_4-free, frozen cross density {d} ≥ 3/8"))
}

fn blow_up_identities() -> Outcome {
    let gd = Guards::default();
    let mut suite: Vec<(Graph, Tiling)> = Vec::new();
    let k4 = Graph::complete(4);
    suite.push((k4.clone(), Tiling::new(&k4, 3, vec![VertexSet::range(0, 4)]).unwrap()));
    suite.push((k4.clone(), Tiling::new(&k4, 4, vec![VertexSet::range(0, 4)]).unwrap()));
    suite.push((k4.clone(), Tiling::empty(3)));
    let tc = two_cliques(12).unwrap();
    suite.push((tc.clone(), max_cover_tiling(&tc, 3, &[3, 4], &gd).unwrap()));
    for s in 0..12 {
        let r = 3 + (s % 2) as usize;
        let g = gnp(12 + (s % 5) as usize, ratio(7, 10), Seed(3000 + s)).unwrap();
        suite.push((g.clone(), greedy_tiling(&g, r)));
        let run = augment_to_target(&g, r, &AugmentParams::with_defaults(r).unwrap(), ratio(1, 1)).unwrap();
        suite.push((g, run.tiling));
    }
    for (idx, (g, t)) in suite.iter().enumerate() {
        let r = t.r();
        let (b, flat) = flatten_in_blowup(g, t, r).map_err(|e| e.to_string())?;
        flat.validate(&b.graph).map_err(|e| e.to_string())?;
        ensure!(flat.is_pure() && flat.covered() == r * t.covered(), "suite {idx}: flattened cover {} ≠ r·{}", flat.covered(), t.covered());
        let f = tiling_to_fractional(g, &flat, r, &b.cluster_of).map_err(|e| e.to_string())?;
        let lambda = BigRational::new(flat.covered().into(), b.graph.n().into());
        ensure!(f.total_weight() == lambda * big(g.n()), "suite {idx}: weight {} ≠ λ|G|", f.total_weight());
    }
    Ok(format!("{} tilings, both identities exact", suite.len()))
}

/// Core `K_r` on `0..r`, `S` on `r..2r`, and a diamond path from core
/// vertex `i` to `r + i` with `gems[i]` gems; extra random edges on top.
fn synthetic_absorber(r: usize, gems: &[usize], noise: Rational, seed: Seed) -> (Graph, VertexSet, VertexSet, usize) {
    let internal: usize = gems.iter().map(|&l| (l - 1) + l * (r - 1)).sum();
    let n = 2 * r + internal;
    let mut b = GraphBuilder::new(n);
    for u in 0..r {
        for v in u + 1..r {
            b.add_edge(u, v).unwrap();
        }
    }
    let mut next = 2 * r;
    for (i, &l) in gems.iter().enumerate() {
        let mut spine = vec![i];
        spine.extend(next..next + l - 1);
        next += l - 1;
        spine.push(r + i);
        for j in 0..l {
            let gem: Vec<usize> = (next..next + r - 1).collect();
            next += r - 1;
            for (x, &a) in gem.iter().enumerate() {
                for &c in &gem[x + 1..] {
                    b.add_edge(a, c).unwrap();
                }
                b.add_edge(a, spine[j]).unwrap();
                b.add_edge(a, spine[j + 1]).unwrap();
            }
        }
    }
    let mut rng = seed.rng();
    let q = *noise.numer() as f64 / *noise.denom() as f64;
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < q {
                let _ = b.add_edge(u, v);
            }
        }
    }
    let s = VertexSet::range(r, 2 * r);
    let body = VertexSet::from_sorted((0..r).chain(2 * r..n).collect());
    (b.build(), s, body, gems.iter().sum())
}

fn absorber_contract() -> Outcome {
    let gd = Guards::default();
    let r = 4;
    let p = AbsorberParams::new(r, 6 * r + 1, ratio(1, 2), ratio(1, 10)).unwrap();
    let g = gnp(120, ratio(9, 10), Seed(0)).unwrap();
    for s in 0..4u64 {
        let set = VertexSet::from_iter_dedup(sample(&mut Seed(s).rng(), 120, r).into_iter()).unwrap();
        let a = build_s_absorber(&g, &set, &p, &VertexSet::default(), &gd).unwrap();
        let a = a.ok_or_else(|| format!("no absorber for S = {set}"))?;
        ensure!(is_s_t_absorber(&g, &set, &a.body, &p, &gd).unwrap(), "absorber for S = {set} fails the check");
        if let AbsorberRoute::Diamond { paths, .. } = &a.route {
            let mut seen = VertexSet::default();
            for path in paths {
                path.validate(&g, r - 1).map_err(|e| e.to_string())?;
                let inner = path.vertices().difference(&set);
                ensure!(inner.is_disjoint(&seen), "diamond paths overlap");
                seen = seen.union(&inner);
            }
        }
    }
    let mut synthetic = 0;
    for s in 0..12u64 {
        let r = 3 + (s % 2) as usize;
        let mut rng = Seed(4000 + s).rng();
        let gems: Vec<usize> = (0..r).map(|_| rng.random_range(1..=3)).collect();
        let (h, set, body, t) = synthetic_absorber(r, &gems, ratio(1, 5), Seed(s));
        let q = AbsorberParams::new(r, t, ratio(1, 2), ratio(1, 10)).unwrap();
        ensure!(is_s_t_absorber(&h, &set, &body, &q, &gd).unwrap(), "synthetic configuration {s} ({gems:?}) is not absorbing");
        synthetic += 1;
    }
    let g40 = gnp(40, ratio(19, 20), Seed(0)).unwrap();
    let q = AbsorberParams::new(4, 4, ratio(1, 2), ratio(1, 10)).unwrap();
    let a = build_absorbing_set(&g40, &q, Seed(0), &gd).unwrap();
    ensure!(a.certificate == Certificate::Certified, "G(40, 0.95) absorbing set is {}", a.certificate.as_str());
    ensure!(is_xi_absorbing(&g40, &a.set, &q, &gd).unwrap(), "G(40, 0.95) absorbing set is not ξ-absorbing");
    Ok(format!("4 absorbers on G(120, 0.9), {synthetic} synthetic configurations, |A| = {} certified", a.set.len()))
}

fn end_to_end() -> Outcome {
    let gd = Guards::default();
    let g = gnp(48, ratio(9, 10), Seed(0)).unwrap();
    let p = AbsorberParams::new(4, 4, ratio(1, 3), ratio(1, 10)).unwrap();
    let ap = AugmentParams::with_defaults(4).unwrap();
    let rep = full_pipeline(&g, &p, &ap, Seed(0), &gd).unwrap();
    ensure!(rep.perfect, "G(48, 0.9): no perfect factor ({:?})", rep.failed_stage());
    let check = Tiling::new(&g, 4, rep.tiling.cliques().to_vec()).map_err(|e| e.to_string())?;
    ensure!(check.is_pure() && check.covered() == 48, "G(48, 0.9): tiling does not span");
    ensure!(has_kr_factor(&g, 4, &gd).unwrap().exists(), "oracle disagrees on G(48, 0.9)");
    let hs = hs_extremal(8, 4).unwrap();
    let q = AbsorberParams::new(4, 1, ratio(0, 1), ratio(1, 10)).unwrap();
    let rep = full_pipeline(&hs, &q, &ap, Seed(0), &gd).unwrap();
    ensure!(!rep.perfect, "hs_extremal(8, 4) reported a factor");
    ensure!(no_factor(&hs, 4), "oracle finds a factor of hs_extremal(8, 4)");
    Ok(format!("G(48, 0.9) factored; hs_extremal(8, 4) fails at stage {}", rep.failed_stage().map_or("-", |s| s.as_str())))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("extremal tightness", extremal_tightness, 10),
        ("oracle cross-validation", oracle_cross_validation, 60),
        ("LP dominance and exactness", lp_dominance, 5),
        ("augmentation engine", augmentation_engine, 120),
        ("K_r-neighbourhood structure", upsilon_suite, 60),
        ("multi-embedding validator equivalence", validator_equivalence, 30),
        ("sphere generator", sphere_generator, 30),
        ("blow-up identities", blow_up_identities, 10),
        ("absorber contract", absorber_contract, 120),
        ("end-to-end pipeline", end_to_end, 60),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > Duration::from_secs(*limit) => Err(format!("took {took:.2?}, limit {limit} s")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
