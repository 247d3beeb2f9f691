//! Acceptance gate. Every criterion is checked exactly (no tolerances) and
//! reports one PASS/FAIL line; the process exits non-zero on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use catprod_core::generators::{complete, complete_multipartite, paw, random_cograph, rook};
use catprod_core::graph::is_induced_cycle;
use catprod_core::oracle::{brute_profile, enumerate_split_partitions, ALPHA_CAP};
use catprod_core::*;
use common::{all_graphs, cograph_pair, connected_random_graph, splitgraph_pair};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cotree(g: &Graph) -> Cotree {
    build_cotree(g).expect("cograph")
}

fn oracle_alpha(g: &Graph) -> usize {
    brute_alpha(g).expect("within oracle cap").value
}

fn oracle_a_star(g: &Graph) -> CapacityValue {
    a_star(brute_a(g).expect("within oracle cap").value)
}

fn rook_identity() -> Outcome {
    for m in 2..=8 {
        for n in 2..=8 {
            let (km, kn) = (complete(m), complete(n));
            let r = alpha_product_cographs(&cotree(&km), &cotree(&kn));
            ensure(r.value == m.max(n), || format!("α(K{m}×K{n}) = {}", r.value))?;
            ensure(r.verify(&km, &kn) == Some(true), || format!("bad certificate K{m}×K{n}"))?;
            ensure(
                categorical_product(&km, &kn) == complement(&rook(m, n)),
                || format!("K{m}×K{n} differs from complement of R({m},{n})"),
            )?;
        }
    }
    Ok("49 pairs".into())
}

fn complete_multipartite_formula() -> Outcome {
    let mut rng = SplitMix64::new(0xc0ffee);
    let mut checked_by_oracle = 0;
    for _ in 0..50 {
        let mut parts = || (0..1 + rng.below(4)).map(|_| 1 + rng.below(4)).collect::<Vec<_>>();
        let (pg, ph) = (parts(), parts());
        let (g, h) = (complete_multipartite(&pg), complete_multipartite(&ph));
        let (ag, ah) = (*pg.iter().max().unwrap(), *ph.iter().max().unwrap());
        let expected = (ag * h.n()).max(ah * g.n());
        let r = alpha_product_cographs(&cotree(&g), &cotree(&h));
        ensure(r.value == expected, || format!("{pg:?} × {ph:?}: {} vs {expected}", r.value))?;
        ensure(r.verify(&g, &h) == Some(true), || format!("bad certificate {pg:?} × {ph:?}"))?;
        if g.n() * h.n() <= 30 {
            let brute = oracle_alpha(&categorical_product(&g, &h));
            ensure(brute == expected, || format!("{pg:?} × {ph:?}: oracle {brute}"))?;
            checked_by_oracle += 1;
        }
    }
    Ok(format!("50 pairs, {checked_by_oracle} oracle-checked"))
}

fn cograph_oracle() -> Outcome {
    let mut rng = SplitMix64::new(3);
    for trial in 0..200 {
        let (g, h) = cograph_pair(&mut rng, 30);
        let r = alpha_product_cographs(&cotree(&g), &cotree(&h));
        let brute = oracle_alpha(&categorical_product(&g, &h));
        ensure(r.value == brute, || format!("trial {trial}: {} vs oracle {brute}", r.value))?;
        ensure(r.verify(&g, &h) == Some(true), || format!("trial {trial}: bad certificate"))?;
    }
    Ok("200 pairs".into())
}

fn splitgraph_oracle() -> Outcome {
    let mut rng = SplitMix64::new(4);
    let mut partitions = 0;
    for trial in 0..200 {
        let (g, h) = splitgraph_pair(&mut rng, 30);
        let (pg, ph) = (split_partition(&g).unwrap(), split_partition(&h).unwrap());
        let r = alpha_product_splitgraphs(&g, &pg, &h, &ph).unwrap();
        let brute = oracle_alpha(&categorical_product(&g, &h));
        ensure(r.value == brute, || format!("trial {trial}: {} vs oracle {brute}", r.value))?;
        ensure(r.verify(&g, &h) == Some(true), || format!("trial {trial}: bad certificate"))?;
        if g.n() <= 10 && h.n() <= 10 {
            for qg in enumerate_split_partitions(&g).unwrap() {
                for qh in enumerate_split_partitions(&h).unwrap() {
                    let v = alpha_product_splitgraphs(&g, &qg, &h, &qh).unwrap().value;
                    ensure(v == brute, || format!("trial {trial}: partition-dependent value {v}"))?;
                    partitions += 1;
                }
            }
        }
    }
    Ok(format!("200 pairs, {partitions} partition pairs"))
}

fn profile_oracle() -> Outcome {
    let mut rng = SplitMix64::new(5);
    for trial in 0..100 {
        let g = random_cograph(1 + rng.below(15), &mut rng);
        let p = neighborhood_profile(&cotree(&g));
        let brute = brute_profile(&g).unwrap();
        ensure(p.table == brute, || format!("trial {trial}: {:?} vs {brute:?}", p.table))?;
        let (a, b) = (a_ratio(&p).value, brute_a(&g).unwrap().value);
        ensure(a == b, || format!("trial {trial}: a = {a} vs oracle {b}"))?;
    }
    Ok("100 cographs".into())
}

fn square_capacity() -> Outcome {
    let mut rng = SplitMix64::new(6);
    for trial in 0..30 {
        let g = random_cograph(1 + rng.below(5), &mut rng);
        let square = oracle_a_star(&categorical_product(&g, &g));
        let single = tensor_capacity_cograph(&cotree(&g));
        ensure(square == single, || format!("trial {trial}: a*(G²) = {square}, a*(G) = {single}"))?;
        ensure(oracle_a_star(&g) == single, || format!("trial {trial}: oracle a*(G) differs"))?;
    }
    Ok("30 cographs".into())
}

fn fractional_matching() -> Outcome {
    let mut graphs: Vec<Graph> = (1..=5).flat_map(all_graphs).collect();
    let exhaustive = graphs.len();
    let mut rng = SplitMix64::new(7);
    graphs.extend((0..600).map(|_| {
        let n = 1 + rng.below(8);
        connected_random_graph(&mut rng, n)
    }));
    let mut cographs = 0;
    for g in &graphs {
        let fpm = has_fractional_perfect_matching(g);
        let small_a = brute_a(g).unwrap().value <= Ratio::HALF;
        ensure(fpm == small_a, || format!("{g:?}: fpm {fpm}, a ≤ 1/2 {small_a}"))?;
        if let Ok(t) = build_cotree(g) {
            let one = tensor_capacity_cograph(&t) == CapacityValue::One;
            ensure(
                (capacity_trichotomy(g) == Trichotomy::One) == one,
                || format!("{g:?}: trichotomy disagrees with cotree capacity"),
            )?;
            cographs += 1;
        }
    }
    Ok(format!("{exhaustive} exhaustive + 600 sampled, {cographs} cographs"))
}

fn union_and_product_capacity() -> Outcome {
    let mut rng = SplitMix64::new(8);
    for trial in 0..30 {
        let (g, h) = cograph_pair(&mut rng, 16);
        let union = tensor_capacity_cograph(&cotree(&disjoint_union(&g, &h)));
        let max = tensor_capacity_cograph(&cotree(&g)).max(tensor_capacity_cograph(&cotree(&h)));
        let product = oracle_a_star(&categorical_product(&g, &h));
        ensure(union == max && max == product, || {
            format!("trial {trial}: union {union}, max {max}, product {product}")
        })?;
    }
    Ok("30 pairs".into())
}

fn power_monotonicity() -> Outcome {
    let mut count = 0;
    for g in (1..=3).flat_map(all_graphs) {
        let i1 = independence_ratio(&g).unwrap();
        let i2 = independence_ratio(&graph_power(&g, 2).unwrap()).unwrap();
        let i3 = independence_ratio(&graph_power(&g, 3).unwrap()).unwrap();
        ensure(i1 <= i2 && i2 <= i3, || format!("{g:?}: {i1}, {i2}, {i3}"))?;
        count += 1;
    }
    Ok(format!("{count} graphs"))
}

fn paw_fact() -> Outcome {
    let p = categorical_product(&paw(), &complete(3));
    let c = find_induced_cycle5(&p).ok_or("no induced C5")?;
    ensure(is_induced_cycle(&p, &c), || format!("{c:?} is not an induced cycle"))?;
    Ok(format!("C5 at {c:?}"))
}

fn product_connectivity() -> Outcome {
    let mut rng = SplitMix64::new(11);
    for trial in 0..100 {
        // K1 has no edges, so its products are edgeless; factors need n >= 2
        let mut factor = || {
            let n = 2 + rng.below(5);
            connected_random_graph(&mut rng, n)
        };
        let (g, h) = (factor(), factor());
        let both_bipartite = is_bipartite(&g) && is_bipartite(&h);
        let comps = connected_components(&categorical_product(&g, &h)).len();
        let expected = if both_bipartite { 2 } else { 1 };
        ensure(comps == expected, || format!("trial {trial}: {comps} components"))?;
    }
    Ok("100 pairs".into())
}

fn partitions_of(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=max.min(n))
        .rev()
        .flat_map(|first| {
            partitions_of(n - first, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn multipartite_capacity() -> Outcome {
    let mut count = 0;
    for n in 1..=8 {
        for parts in partitions_of(n, n) {
            let g = complete_multipartite(&parts);
            let alpha = parts[0];
            let t = cotree(&g);
            let expected = if 2 * alpha <= n {
                CapacityValue::Ratio(Ratio::from_usize(alpha, n))
            } else {
                CapacityValue::One
            };
            let cap = tensor_capacity_cograph(&t);
            ensure(cap == expected, || format!("{parts:?}: {cap} vs {expected}"))?;
            if 2 * alpha <= n {
                let i1 = Ratio::from_usize(alpha, n);
                let sq = alpha_product_cographs(&t, &t).value;
                ensure(Ratio::from_usize(sq, n * n) == i1, || format!("{parts:?}: α(G²) = {sq}"))?;
                if n * n <= ALPHA_CAP {
                    let i2 = independence_ratio(&graph_power(&g, 2).unwrap()).unwrap();
                    ensure(i2 == i1, || format!("{parts:?}: oracle i(G²) = {i2}"))?;
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} part multisets"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("rook identity", rook_identity),
        ("complete multipartite α", complete_multipartite_formula),
        ("cograph oracle equivalence", cograph_oracle),
        ("splitgraph oracle equivalence", splitgraph_oracle),
        ("profile / a(G) oracle", profile_oracle),
        ("a*(G²) = a*(G)", square_capacity),
        ("fractional matching / trichotomy", fractional_matching),
        ("capacity of unions and products", union_and_product_capacity),
        ("i(G) ≤ i(G²) ≤ i(G³)", power_monotonicity),
        ("paw × K3 induced C5", paw_fact),
        ("product connectivity", product_connectivity),
        ("complete multipartite capacity", multipartite_capacity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
