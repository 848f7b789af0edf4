//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test -p tourfvs-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use tourfvs_core::bounds::{self, check_score_cap, score_cap_campaign, BETA};
use tourfvs_core::enumerate::{count_direct, count_minimal_fvs, delay_profile, enumerate_maximal_acyclic, min_fvs};
use tourfvs_core::generators::{pq, repeated_sum, st6, st7, u_family};
use tourfvs_core::oracle::{brute_force_maximal_acyclic, brute_force_min_fvs_size};
use tourfvs_core::{enumerate_minimal_fvs, ScoreSequence, VertexSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table1() -> Outcome {
    let expected = [1u64, 1, 3, 3, 7, 12, 21];
    let mut seven = Duration::ZERO;
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let r = bounds::exact_max_count(n).map_err(|e| e.to_string())?;
        if n == 7 {
            seven = start.elapsed();
        }
        ensure(r.max_count == want, || format!("M({n}) = {}, expected {want}", r.max_count))?;
        ensure(r.scanned == 1 << (n * (n - 1) / 2), || format!("n={n}: scanned {}", r.scanned))?;
    }
    ensure(seven < Duration::from_secs(600), || format!("n=7 scan took {seven:?}"))?;
    let st8 = count_minimal_fvs(&pq(&st6()));
    let st9 = count_minimal_fvs(&pq(&st7()));
    ensure(st8 == 25u32.into(), || format!("f(pq(ST_6)) = {st8}"))?;
    ensure(st9 == 43u32.into(), || format!("f(pq(ST_7)) = {st9}"))?;
    Ok(format!("M(1..7) = {expected:?}, n=7 scan {:.1}s, f(pq(ST_6))=25, f(pq(ST_7))=43", seven.as_secs_f64()))
}

fn lower_family() -> Outcome {
    for k in 1..=6u32 {
        let t = repeated_sum(&st7(), k as usize);
        let got = count_minimal_fvs(&t);
        ensure(got == BigUint::from(21u32).pow(k), || format!("k={k}: {got}"))?;
    }
    let start = Instant::now();
    let direct = count_direct(&repeated_sum(&st7(), 2));
    let took = start.elapsed();
    ensure(direct == 441, || format!("direct count on 14 vertices: {direct}"))?;
    ensure(took < Duration::from_secs(60), || format!("direct count took {took:?}"))?;
    Ok(format!("21^k for k=1..6, direct k=2 count 441 in {:.2}s", took.as_secs_f64()))
}

fn mstar() -> Outcome {
    for n in 3..=6 {
        let m = bounds::exact_min_count_strong(n).map_err(|e| e.to_string())?;
        ensure(m == 3, || format!("m*({n}) = {m}"))?;
    }
    for n in 3..=40usize {
        let t = u_family(n).map_err(|e| e.to_string())?;
        let got: BTreeSet<Vec<usize>> = enumerate_minimal_fvs(&t).map(|s| s.labels()).collect();
        let want: BTreeSet<Vec<usize>> = if n == 3 {
            [vec![1], vec![2], vec![3]].into()
        } else {
            [vec![n - 1, n], vec![1], (2..=n - 2).collect()].into()
        };
        ensure(got == want, || format!("u_family({n}): {got:?}"))?;
        ensure(count_minimal_fvs(&t) == 3u32.into(), || format!("f(u_family({n})) != 3"))?;
        ensure(t.is_strong(), || format!("u_family({n}) not strong"))?;
    }
    Ok("m*(3..6) = 3 exhaustively; u_family(3..40) has exactly its three minimal FVSs".into())
}

fn enumerator_vs_oracle() -> Outcome {
    let gens = common::generator_instances(12);
    let randoms = common::random_instances(1000, 12);
    for inst in gens.iter().chain(&randoms) {
        let listed: Vec<VertexSet> = enumerate_maximal_acyclic(&inst.t).collect();
        let unique: BTreeSet<VertexSet> = listed.iter().cloned().collect();
        ensure(unique.len() == listed.len(), || format!("{}: duplicate outputs", inst.name))?;
        let oracle = brute_force_maximal_acyclic(&inst.t).map_err(|e| e.to_string())?;
        ensure(unique == oracle, || format!("{}: {} sets vs oracle {}", inst.name, unique.len(), oracle.len()))?;
    }
    Ok(format!("{} generator and {} random tournaments (n <= 12) match the oracle", gens.len(), randoms.len()))
}

fn delay_and_space() -> Outcome {
    let corpus = common::corpus(16);
    let mut worst_delay = 0.0f64;
    let mut worst_space = 0.0f64;
    for inst in &corpus {
        let n = inst.t.n();
        let p = delay_profile(&inst.t);
        let delay = p.stats.max_edges_between_outputs;
        let space = p.stats.peak_resident_labels;
        let space_cap = (n + 1) * (n / 2 + 2);
        ensure(delay <= 2 * n as u64, || format!("{}: {delay} edges between outputs", inst.name))?;
        ensure(space <= space_cap, || format!("{}: {space} resident labels > {space_cap}", inst.name))?;
        worst_delay = worst_delay.max(delay as f64 / (2 * n) as f64);
        worst_space = worst_space.max(space as f64 / space_cap as f64);
    }
    Ok(format!(
        "{} instances (n <= 16); worst delay/2n = {worst_delay:.2}, worst space/bound = {worst_space:.2}",
        corpus.len()
    ))
}

fn upper_bound_machinery() -> Outcome {
    for n in 11..=13 {
        let r = bounds::verify_sigma_maximizes(n, BETA).map_err(|e| e.to_string())?;
        ensure(r.pass(), || format!("n={n}: maximizes={} unique={} argmax={:?}", r.maximizes, r.unique, r.argmax))?;
    }
    for n in 11..=200 {
        let ratio = bounds::upper_bound_envelope(n, BETA).map_err(|e| e.to_string())? / BETA.powi(n as i32);
        ensure(ratio <= 1.0, || format!("envelope/beta^n = {ratio} at n={n}"))?;
    }
    let mut drawn = 0;
    for n in 8..=16 {
        let r = score_cap_campaign(n, 100_000, 1_000 * n as u64).map_err(|e| e.to_string())?;
        ensure(r.strong_samples >= 100_000, || format!("n={n}: {} samples", r.strong_samples))?;
        ensure(r.violations.is_empty(), || format!("n={n}: violations {:?}", r.violations))?;
        drawn += r.drawn;
    }
    let st8 = pq(&st6());
    ensure((0..=2).all(|k| check_score_cap(&st8, k) == Ok(true)), || "ST_8 breaks the cap".into())?;
    Ok(format!("sigma unique maximiser for n=11..13, envelope <= beta^n for n=11..200, 900000 strong samples ({drawn} drawn) without violation"))
}

fn structural_identities() -> Outcome {
    let corpus = common::corpus(16);
    for inst in &corpus {
        let direct = count_direct(&inst.t);
        ensure(count_direct(&inst.t.reverse()) == direct, || format!("{}: reversal changes f", inst.name))?;
        ensure(count_minimal_fvs(&inst.t) == direct.into(), || format!("{}: factorized != direct", inst.name))?;
    }
    let mut sequences = 0;
    for n in 1..=9 {
        for s in ScoreSequence::enumerate(n, false, 0..=n - 1) {
            let t = s.realize().map_err(|e| format!("{s}: {e}"))?;
            ensure(t.score_sequence() == s, || format!("{s} realized as {}", t.score_sequence()))?;
            sequences += 1;
        }
    }
    Ok(format!("{} corpus instances; {sequences} score sequences (n <= 9) realized", corpus.len()))
}

fn min_fvs_solver() -> Outcome {
    let corpus = common::corpus(12);
    for inst in &corpus {
        let fvs = min_fvs(&inst.t);
        let want = brute_force_min_fvs_size(&inst.t).map_err(|e| e.to_string())?;
        ensure(fvs.len() == want, || format!("{}: size {} vs {want}", inst.name, fvs.len()))?;
        ensure(inst.t.is_acyclic_subset(&fvs.complement()), || format!("{}: remainder cyclic", inst.name))?;
    }
    let st7_size = min_fvs(&st7()).len();
    ensure(st7_size == 4, || format!("|min_fvs(ST_7)| = {st7_size}"))?;
    Ok(format!("{} instances (n <= 12) match the brute-force minimum; |min_fvs(ST_7)| = 4", corpus.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("table1", table1),
        ("lower-bound-family", lower_family),
        ("mstar", mstar),
        ("enumerator-vs-oracle", enumerator_vs_oracle),
        ("delay-and-space", delay_and_space),
        ("upper-bound-machinery", upper_bound_machinery),
        ("structural-identities", structural_identities),
        ("min-fvs", min_fvs_solver),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(format!("panicked: {}", panic_message(&e))));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg} [{secs:.1}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

fn panic_message(e: &Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| e.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "unknown panic".into())
}
