//! The acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use graphtoric::blocks::block_decomposition;
use graphtoric::circuits::{circuit_binomial, enumerate_circuit_subgraphs, max_circuit_degree, max_circuit_degree_cactus};
use graphtoric::fixtures;
use graphtoric::graver::{circuits_bruteforce, graver_completion, graver_completion_from, kernel_lattice_basis};
use graphtoric::grn::{build_grn, grn_graver_degree, separation_report, verify_primitive_by_lattice, GrnParams, ReportOptions};
use graphtoric::lattice::{circuit_index, IntMatrix};
use graphtoric::primitivity::{graver_from_graph, grn_primitive_binomial, is_primitive_subgraph};
use graphtoric::toric::{incidence_configuration, Binomial, SignedVector, ToricConfiguration};
use graphtoric::Limits;
use num_traits::{One, ToPrimitive};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: graphtoric::Error) -> String {
    e.to_string()
}

fn family() -> Vec<GrnParams> {
    [3, 5].into_iter().flat_map(|n| (1..=6).map(move |r| GrnParams::new(n, r).unwrap())).collect()
}

fn graver_degree_formula() -> Outcome {
    let mut n3 = Vec::new();
    for p in family() {
        let got = grn_primitive_binomial(p.n(), p.r()).map_err(err)?.degree() as u64;
        let n = p.n() as u64;
        let formula = (n + n * n * ((n - 1).pow(p.r() as u32) - 1) / (n - 2)) / 2;
        ensure(got == formula, || format!("n={} r={}: walk degree {got}, formula {formula}", p.n(), p.r()))?;
        if p.n() == 3 {
            n3.push(got);
        }
    }
    ensure(n3 == [6, 15, 33, 69, 141, 285], || format!("n=3 degrees {n3:?}"))?;
    Ok(format!("n=3 degrees {n3:?}; n=5 r=1..6 match"))
}

fn primitivity() -> Outcome {
    for p in family() {
        let v = is_primitive_subgraph(&build_grn(p)).map_err(err)?;
        ensure(v.primitive, || format!("n={} r={}: {}", p.n(), p.r(), v.reason))?;
    }
    let g = build_grn(GrnParams::new(3, 1).unwrap());
    let b = grn_primitive_binomial(3, 1).map_err(err)?;
    let a = incidence_configuration(&g);
    let limits = Limits::default();
    let route = match graver_completion(&a, &limits) {
        Ok(set) => {
            ensure(set.contains(b.vector()), || "G_1^3 binomial missing from the completion set".into())?;
            format!("completion set of {} elements", set.len())
        }
        Err(graphtoric::Error::CapExceeded { .. }) => {
            verify_primitive_by_lattice(&g, &b, &limits).map_err(err)?;
            "exhaustive search below the walk".into()
        }
        Err(e) => return Err(err(e)),
    };
    Ok(format!("12 graphs primitive; G_1^3 binomial minimal via {route}"))
}

fn circuit_bound() -> Outcome {
    let mut ts = Vec::new();
    for r in 1..=6 {
        let g = build_grn(GrnParams::new(3, r).unwrap());
        let t = max_circuit_degree_cactus(&g).map_err(err)?;
        let bound = 3 + (2 * r as i64 - 1) * 2;
        ensure(t == bound, || format!("r={r}: cactus {t}, bound {bound}"))?;
        if r <= 2 {
            let full = max_circuit_degree(&g, &Limits::default()).map_err(err)?;
            ensure(full == t, || format!("r={r}: enumeration {full}, cactus {t}"))?;
        }
        ts.push(t);
    }
    Ok(format!("t = {ts:?}; enumeration agrees for r=1,2"))
}

fn index_theorem() -> Outcome {
    let limits = Limits::default();
    let mut total = 0;
    for (name, g) in fixtures::corpus() {
        let a = incidence_configuration(&g);
        for c in enumerate_circuit_subgraphs(&g, &limits).map_err(err)? {
            let b = circuit_binomial(&c, &g).map_err(err)?;
            let idx = circuit_index(&b, &a).map_err(err)?;
            ensure(idx.is_one(), || format!("{name}: circuit {b} has index {idx}"))?;
            total += 1;
        }
    }
    let a = ToricConfiguration::from_columns(&[vec![2, 0], vec![1, 1], vec![0, 2], vec![1, 0]]).unwrap();
    let c = Binomial::from_entries(vec![1, -2, 1, 0]).unwrap();
    let oracle = common::coset_index(&a, &c.support(), 5);
    ensure(oracle == 2, || format!("coset count gives {oracle}"))?;
    let idx = circuit_index(&c, &a).map_err(err)?;
    ensure(idx.to_u64() == Some(2), || format!("library index {idx}"))?;
    Ok(format!("{total} graph circuits of index 1; non-graph circuit index 2 confirmed by coset count"))
}

fn characterization_oracles() -> Outcome {
    let limits = Limits::default();
    let mut checked = Vec::new();
    for (name, g) in fixtures::corpus() {
        if g.edge_count() > 14 {
            continue;
        }
        let a = incidence_configuration(&g);
        let from_graph: BTreeSet<Binomial> = enumerate_circuit_subgraphs(&g, &limits)
            .map_err(err)?
            .iter()
            .map(|c| circuit_binomial(c, &g))
            .collect::<graphtoric::Result<_>>()
            .map_err(err)?;
        let brute = circuits_bruteforce(&a, &limits).map_err(err)?;
        ensure(from_graph == brute, || format!("{name}: {} circuits vs {} minimal-support vectors", from_graph.len(), brute.len()))?;
        let graph_side = graver_from_graph(&g, &limits).map_err(err)?;
        let lattice_side = graver_completion(&a, &limits).map_err(err)?;
        ensure(graph_side == lattice_side, || {
            format!("{name}: graph engine {} elements, completion {}", graph_side.len(), lattice_side.len())
        })?;
        checked.push(format!("{name}({}/{})", brute.len(), lattice_side.len()));
    }
    Ok(format!("circuits/Graver sizes: {}", checked.join(" ")))
}

fn block_distance() -> Outcome {
    for p in family() {
        let tree = block_decomposition(&build_grn(p)).map_err(err)?.block_tree();
        let d = tree.max_block_distance();
        ensure(d == 2 * p.r() - 1, || format!("n={} r={}: distance {d}", p.n(), p.r()))?;
    }
    Ok("max block distance 2r-1 for n=3,5 and r=1..6".into())
}

fn separation() -> Outcome {
    let report = separation_report(3, 8, ReportOptions::default(), &Limits::default()).map_err(err)?;
    ensure(report.ratio_strictly_increasing(), || "graver/t not strictly increasing".into())?;
    let last = report.rows.last().unwrap();
    let formula = grn_graver_degree(GrnParams::new(3, 8).unwrap()).map_err(err)?;
    ensure(last.r == 8 && last.graver_degree == 1149 && formula == 1149, || format!("r=8 degree {}", last.graver_degree))?;
    ensure(last.t == 33 && last.t * last.t == 1089, || format!("r=8 t {}", last.t))?;
    ensure(last.graver_degree > last.t * last.t, || "degree does not exceed t^2".into())?;
    let ratios: Vec<String> = report.rows.iter().map(|r| r.graver_over_t().decimal()).collect();
    Ok(format!("graver/t = {}; r=8: 1149 > 33^2 = 1089", ratios.join(", ")))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let rows = rng.gen_range(1..=5);
    let cols = rng.gen_range(1..=7);
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-5..=5)).collect()).collect();
    IntMatrix::from_i64(&data)
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let m = random_matrix(&mut rng);
        common::check_hnf(&m).map_err(|e| format!("matrix {i} HNF: {e}\n{m}"))?;
        common::check_snf(&m).map_err(|e| format!("matrix {i} SNF: {e}\n{m}"))?;
    }

    let configs: Vec<(&str, ToricConfiguration)> = vec![
        ("twisted cubic", ToricConfiguration::from_columns(&[vec![1, 0], vec![1, 1], vec![1, 2], vec![1, 3]]).unwrap()),
        ("index-2", ToricConfiguration::from_columns(&[vec![2, 0], vec![1, 1], vec![0, 2], vec![1, 0]]).unwrap()),
        ("K4", incidence_configuration(&fixtures::k4())),
        ("K33", incidence_configuration(&fixtures::k33())),
        ("G1_3", incidence_configuration(&fixtures::g1_3())),
    ];
    let limits = Limits::default();
    for (name, a) in &configs {
        let k = kernel_lattice_basis(a);
        let base: Vec<SignedVector> = (0..k.cols())
            .map(|j| SignedVector(k.column(j).iter().map(|x| x.to_i64().unwrap()).collect()))
            .collect();
        let reference = graver_completion_from(a, base.clone(), &limits).map_err(err)?;
        for s in 0..20 {
            let mut gens = base.clone();
            gens.shuffle(&mut rng);
            for g in gens.iter_mut() {
                if rng.gen_bool(0.5) {
                    *g = g.neg();
                }
            }
            let again = graver_completion_from(a, gens, &limits).map_err(err)?;
            ensure(again == reference, || format!("{name}: shuffle {s} changed the Graver set"))?;
        }
    }
    Ok("200 random matrices satisfy HNF/SNF invariants; 20 shuffles x 5 configurations agree".into())
}

struct Criterion {
    number: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { number: 1, title: "Graver degree formula", budget: Duration::from_secs(10), run: graver_degree_formula },
        Criterion { number: 2, title: "primitivity of G_r^n", budget: Duration::from_secs(300), run: primitivity },
        Criterion { number: 3, title: "circuit bound and sharpness", budget: Duration::from_secs(60), run: circuit_bound },
        Criterion { number: 4, title: "circuit index", budget: Duration::from_secs(60), run: index_theorem },
        Criterion { number: 5, title: "characterization oracles", budget: Duration::from_secs(600), run: characterization_oracles },
        Criterion { number: 6, title: "block distance", budget: Duration::from_secs(30), run: block_distance },
        Criterion { number: 7, title: "separation report", budget: Duration::from_secs(60), run: separation },
        Criterion { number: 8, title: "property suites", budget: Duration::from_secs(120), run: property_suites },
    ];
    // keep panic messages out of the report lines
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.run))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > c.budget {
                Err(format!("took {elapsed:.2?}, budget {:?}", c.budget))
            } else {
                Ok(detail)
            }
        });
        match result {
            Ok(detail) => println!("PASS {} {}: {detail} [{elapsed:.2?}]", c.number, c.title),
            Err(why) => {
                failures += 1;
                println!("FAIL {} {}: {why} [{elapsed:.2?}]", c.number, c.title);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

