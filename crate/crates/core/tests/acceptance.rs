//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test -p spined --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use spined::category::{check_sc1, check_sc2, check_sfunctor_laws, SFunctor};
use spined::chordal::{is_chordal, is_chordal_bruteforce};
use spined::graph::exists_monomorphism;
use spined::graph::families::{complete, cycle, grid, path, petersen, random_gnp, random_tree, star};
use spined::graph::sample::{all_labeled_graphs, random_extended_span, random_mono_pair, random_span};
use spined::hypergraph::{all_hypergraphs, hyper_spine, primal_graph};
use spined::triangulation::{delta_generic, hypergraph_delta, CliqueNumber, CompletionCandidates, Triangulation};
use spined::{delta_graph, treewidth_oracle, GraphMonoCategory, Hypergraph, HypergraphMonoCategory, SimpleGraph};

const SEED_RANDOM_GRAPHS: u64 = 0x5EED_0001;
const SEED_SF2: u64 = 0x5EED_0002;
const SEED_MONO: u64 = 0x5EED_0003;
const SEED_SC2: u64 = 0x5EED_0004;
const SEED_CHORDAL: u64 = 0x5EED_0005;
const SEED_GENERIC: u64 = 0x5EED_0006;
const SEED_HYPER: u64 = 0x5EED_0007;

const RANDOM_GRAPHS: usize = 500;
const RANDOM_VERTICES: std::ops::RangeInclusive<usize> = 4..=10;
const ORACLE_TIME_LIMIT: Duration = Duration::from_secs(300);
const SF1_BOUND: usize = 6;
const SF2_DIAGRAMS: usize = 200;
const SF2_MAX_APEX: usize = 10;
const MONO_PAIRS: usize = 200;
const MONO_MAX_VERTICES: usize = 10;
const SC1_MAX_VERTICES: usize = 5;
const SC2_DIAGRAMS: usize = 100;
const SC2_MAX_APEX: usize = 5;
const SC2_ENUMERATION_BOUND: usize = 100_000;
const CHORDAL_SAMPLE: usize = 1000;
const CHORDAL_SAMPLE_MAX_VERTICES: usize = 7;
const CHORDAL_EXHAUSTIVE_MAX_VERTICES: usize = 5;
const GENERIC_SAMPLE: usize = 200;
const GENERIC_MAX_VERTICES: usize = 6;
const HYPER_INSTANCES: usize = 100;
const HYPER_MAX_VERTICES: usize = 10;
const HYPER_SC1_MAX_VERTICES: usize = 4;
const HYPER_PRIMAL_MAX_VERTICES: usize = 8;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn named_families() -> Vec<(String, SimpleGraph)> {
    let mut out = Vec::new();
    for n in 1..=10 {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 3..=10 {
        out.push((format!("C{n}"), cycle(n).unwrap()));
    }
    for n in 1..=8 {
        out.push((format!("K{n}"), complete(n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_RANDOM_GRAPHS ^ 0xFF);
    for n in 2..=10 {
        out.push((format!("tree{n}"), random_tree(n, &mut rng)));
    }
    out.push(("star6".into(), star(6)));
    out.push(("grid3x3".into(), grid(3, 3)));
    out.push(("petersen".into(), petersen()));
    out
}

/// Criterion 1's population: random graphs followed by the named families.
fn oracle_population() -> Vec<(String, SimpleGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_RANDOM_GRAPHS);
    let mut out: Vec<(String, SimpleGraph)> = (0..RANDOM_GRAPHS)
        .map(|i| {
            let n = rng.gen_range(RANDOM_VERTICES);
            let p = rng.gen_range(0.15..0.85);
            (format!("random#{i}"), random_gnp(n, p, &mut rng))
        })
        .collect();
    out.extend(named_families());
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let population = oracle_population();
    let mismatches: Vec<String> = population
        .par_iter()
        .filter_map(|(name, g)| {
            let delta = delta_graph(g).value;
            let tw = treewidth_oracle(g).map(|w| w.value);
            match tw {
                Ok(tw) if delta == tw + 1 => None,
                Ok(tw) => Some(format!("{name}: Δ = {delta}, treewidth = {tw}")),
                Err(e) => Some(format!("{name}: {e}")),
            }
        })
        .collect();
    let elapsed = start.elapsed();
    if !mismatches.is_empty() {
        return Err(format!("{} mismatches, first: {}", mismatches.len(), mismatches[0]));
    }
    if elapsed > ORACLE_TIME_LIMIT {
        return Err(format!("took {elapsed:?}, limit {ORACLE_TIME_LIMIT:?}"));
    }
    Ok(format!(
        "{} graphs, Δ = tw + 1 on all, {:.1}s",
        population.len(),
        elapsed.as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_SF2);
    let spans: Vec<_> = (0..SF2_DIAGRAMS).map(|_| random_span(&mut rng, SF2_MAX_APEX)).collect();
    let report = check_sfunctor_laws(&GraphMonoCategory, &Triangulation, &[], &spans, SF1_BOUND);
    if !report.passed() {
        let f = &report.failures[0];
        return Err(format!(
            "{} failures, first: {} ({})",
            report.failures.len(),
            f.case,
            f.detail
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED_MONO);
    for i in 0..MONO_PAIRS {
        let (g, h) = random_mono_pair(&mut rng, MONO_MAX_VERTICES);
        if !exists_monomorphism(&g, &h) {
            return Err(format!("mono pair #{i} has no monomorphism"));
        }
        let (a, b) = (delta_graph(&g).value, delta_graph(&h).value);
        if a > b {
            return Err(format!("mono pair #{i}: Δ(G) = {a} > Δ(H) = {b}"));
        }
    }
    Ok(format!(
        "SF1 for n <= {SF1_BOUND}, SF2 on {SF2_DIAGRAMS} clique sums, monotone on {MONO_PAIRS} mono pairs"
    ))
}

fn criterion_3() -> Outcome {
    let population = oracle_population();
    let mut chordal = 0;
    for (name, g) in &population {
        let omega = CliqueNumber.value(&GraphMonoCategory, g);
        let delta = delta_graph(g).value;
        if omega > delta {
            return Err(format!("{name}: ω = {omega} > Δ = {delta}"));
        }
        if is_chordal(g) {
            chordal += 1;
            if omega != delta {
                return Err(format!("{name} is chordal but ω = {omega} != Δ = {delta}"));
            }
        }
    }
    if chordal == 0 {
        return Err("population contains no chordal graph".into());
    }
    Ok(format!(
        "ω <= Δ on {} graphs, equality on {chordal} chordal ones",
        population.len()
    ))
}

fn criterion_4() -> Outcome {
    let graphs: Vec<SimpleGraph> = (0..=SC1_MAX_VERTICES).flat_map(all_labeled_graphs).collect();
    let sc1 = check_sc1(&GraphMonoCategory, &graphs, SC1_MAX_VERTICES);
    if !sc1.passed() {
        return Err(format!(
            "SC1: {} failures, first: {}",
            sc1.failures.len(),
            sc1.failures[0].case
        ));
    }
    if let Some((case, n)) = sc1
        .witnesses
        .iter()
        .zip(&graphs)
        .find_map(|((c, n), g)| (*n != g.vertex_count()).then(|| (c.clone(), *n)))
    {
        return Err(format!(
            "SC1: {case} witnessed at spine index {n}, not its vertex count"
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED_SC2);
    let diagrams: Vec<_> = (0..SC2_DIAGRAMS)
        .map(|_| random_extended_span(&mut rng, SC2_MAX_APEX))
        .collect();
    let sc2 = check_sc2(&GraphMonoCategory, &diagrams, SC2_ENUMERATION_BOUND);
    if !sc2.passed() {
        let f = &sc2.failures[0];
        return Err(format!(
            "SC2: {} failures, first: {} ({})",
            sc2.failures.len(),
            f.case,
            f.detail
        ));
    }
    Ok(format!(
        "SC1 on all {} labeled graphs with <= {SC1_MAX_VERTICES} vertices, SC2 on {SC2_DIAGRAMS} diagrams",
        graphs.len()
    ))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_CHORDAL);
    let sample: Vec<SimpleGraph> = (0..CHORDAL_SAMPLE)
        .map(|_| {
            let n = rng.gen_range(0..=CHORDAL_SAMPLE_MAX_VERTICES);
            let p = rng.gen_range(0.2..0.9);
            random_gnp(n, p, &mut rng)
        })
        .collect();
    let exhaustive: Vec<SimpleGraph> = (0..=CHORDAL_EXHAUSTIVE_MAX_VERTICES)
        .flat_map(all_labeled_graphs)
        .collect();
    let mut chordal = 0;
    for g in sample.iter().chain(&exhaustive) {
        let fast = is_chordal(g);
        let slow = is_chordal_bruteforce(g).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("{g:?}: MCS says {fast}, cycle scan says {slow}"));
        }
        chordal += usize::from(fast);
    }
    Ok(format!(
        "agree on {} sampled and {} enumerated graphs ({chordal} chordal)",
        sample.len(),
        exhaustive.len()
    ))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_GENERIC);
    let sample: Vec<SimpleGraph> = (0..GENERIC_SAMPLE)
        .map(|_| {
            let n = rng.gen_range(0..=GENERIC_MAX_VERTICES);
            let p = rng.gen_range(0.1..0.9);
            random_gnp(n, p, &mut rng)
        })
        .collect();
    let mismatch = sample.par_iter().find_map_first(|g| {
        let generic = delta_generic(&GraphMonoCategory, g, &CliqueNumber, &CompletionCandidates, None);
        let direct = delta_graph(g).value;
        (generic != Ok(direct)).then(|| format!("{g:?}: generic {generic:?}, direct {direct}"))
    });
    match mismatch {
        Some(m) => Err(m),
        None => Ok(format!(
            "{GENERIC_SAMPLE} graphs with <= {GENERIC_MAX_VERTICES} vertices"
        )),
    }
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_HYPER);
    for i in 0..HYPER_INSTANCES {
        let n = rng.gen_range(0..=HYPER_MAX_VERTICES);
        let p = rng.gen_range(0.1..0.9);
        let g = random_gnp(n, p, &mut rng);
        let h = Hypergraph::from_graph(&g);
        if primal_graph(&h) != g {
            return Err(format!("instance #{i}: primal graph of the encoding differs"));
        }
        let (a, b) = (hypergraph_delta(&h), delta_graph(&g));
        if a != b {
            return Err(format!("instance #{i}: hypergraph Δ = {a:?}, graph Δ = {b:?}"));
        }
    }

    let population: Vec<Hypergraph> = (0..=HYPER_SC1_MAX_VERTICES).flat_map(all_hypergraphs).collect();
    let sc1 = check_sc1(&HypergraphMonoCategory, &population, HYPER_SC1_MAX_VERTICES);
    if !sc1.passed() {
        return Err(format!(
            "hypergraph SC1: {} failures, first: {}",
            sc1.failures.len(),
            sc1.failures[0].case
        ));
    }
    for n in 0..=HYPER_PRIMAL_MAX_VERTICES {
        if primal_graph(&hyper_spine(n)) != complete(n) {
            return Err(format!("primal graph of the spine at n = {n} is not K_{n}"));
        }
    }
    Ok(format!(
        "{HYPER_INSTANCES} encoded graphs, SC1 on {} hypergraphs, primal spine = K_n for n <= {HYPER_PRIMAL_MAX_VERTICES}",
        population.len()
    ))
}

fn criterion_8() -> Outcome {
    let cases = common::golden_cases();
    for case in &cases {
        common::verify_golden(case)?;
    }
    Ok(format!("{} golden reports stable across two runs", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 Δ = treewidth + 1 on random and named graphs", criterion_1),
        ("2 Δ satisfies SF1, SF2 and monotonicity", criterion_2),
        ("3 ω <= Δ, equality on chordal graphs", criterion_3),
        ("4 graph category satisfies SC1 and SC2", criterion_4),
        ("5 MCS chordality matches the cycle scan", criterion_5),
        ("6 generic Δ search matches Δ", criterion_6),
        ("7 hypergraph Δ and hypergraph spine", criterion_7),
        ("8 CLI reports are byte-stable", criterion_8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.2}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{secs:.2}s]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
