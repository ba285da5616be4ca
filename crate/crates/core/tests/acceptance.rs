//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Criterion 6 asks for the Radon spectrum to equal `{0, ..., floor((d+2)/2)}`
//! on every random configuration. That fails for `d >= 3` (a point inside the
//! simplex of the others admits more negatives), so it is listed in
//! `KNOWN_RED`: it still runs and prints FAIL, but does not fail the process.
//! Any other FAIL, or criterion 6 unexpectedly passing, exits nonzero.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Mutex;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use tverberg_pm::colored::{
    colored_tverberg_pm, exhaustive_colorful, verify_colorful, ColoredAlternative, ColoredOutcome,
};
use tverberg_pm::exact::{rank, solve_linear, LinearSolution, RMat, RVec, Rat};
use tverberg_pm::instances::{
    example1, example2, random_color_classes, random_config, random_subset, separated_subset,
};
use tverberg_pm::minnorm::min_norm_point;
use tverberg_pm::sarkaria::{tverberg_pm, Alternative, PivotStep, Recovery};
use tverberg_pm::search::{proper_partitions, radon_spectrum, search_exact_k, search_prescribed};
use tverberg_pm::tverberg::{
    certificate_violations, intersect_affine_hulls, Intersection, Partition, PointConfig,
};

const KNOWN_RED: &[usize] = &[6];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Pivot traces collected by criteria 2 and 3 for criterion 11.
static TRACES: Mutex<Vec<Vec<PivotStep>>> = Mutex::new(Vec::new());

fn record_trace(t: &[PivotStep]) {
    TRACES.lock().unwrap().push(t.to_vec());
}

fn complement(m: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| !m.contains(i)).collect()
}

/// `(d, r)` for seed `s`, cycling through `d <= 3`, `r <= 4`.
fn shape(s: u64) -> (usize, usize) {
    let d = 1 + (s % 3) as usize;
    let r = 2 + ((s / 3) % 3) as usize;
    (d, r)
}

fn criterion_1() -> Outcome {
    let shapes = [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)];
    let failures: Vec<String> = shapes
        .par_iter()
        .flat_map(|&(d, r)| (0..100u64).into_par_iter().map(move |s| (d, r, s)))
        .filter_map(|(d, r, s)| {
            let config = random_config(d, r, s).unwrap();
            for k in 0..r {
                let out = search_exact_k(&config, k).unwrap();
                let Some(found) = out.found else {
                    return Some(format!("d={d} r={r} seed={s} k={k}: not found"));
                };
                let v = certificate_violations(&config, &found.partition, &found.certificate);
                if !v.is_empty()
                    || found.certificate.negatives.len() != k
                    || !found.partition.is_proper(d)
                {
                    return Some(format!("d={d} r={r} seed={s} k={k}: bad certificate {v:?}"));
                }
            }
            None
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!("500 configs, every k in 0..r-1; failures: {failures:?}"),
    )
}

fn criterion_2() -> Outcome {
    let failures: Vec<String> = (0..100u64)
        .into_par_iter()
        .filter_map(|s| {
            let (d, r) = shape(s);
            let config = random_config(d, r, 1000 + s).unwrap();
            let k = (s as usize / 9) % r;
            let m = separated_subset(&config, k, s).unwrap();
            let sol = tverberg_pm(&config, &m).unwrap();
            record_trace(&sol.trace);
            let Recovery::Certificate {
                partition,
                certificate,
                alternative,
            } = sol.recovery
            else {
                return Some(format!("seed {s}: no certificate"));
            };
            if alternative != Alternative::InM || certificate.negatives != m {
                return Some(format!(
                    "seed {s}: {alternative:?} negatives {:?} vs m {m:?}",
                    certificate.negatives
                ));
            }
            match intersect_affine_hulls(&config, &partition).unwrap() {
                Intersection::Point {
                    certificate: direct,
                    ..
                } if direct.z == certificate.z && direct.alpha == certificate.alpha => None,
                other => Some(format!("seed {s}: direct solve disagrees: {other:?}")),
            }
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!("100 runs, |M| <= r-1; failures: {failures:?}"),
    )
}

fn criterion_3() -> Outcome {
    let mut failures: Vec<String> = (0..100u64)
        .into_par_iter()
        .filter_map(|s| {
            let (d, r) = shape(s);
            let config = random_config(d, r, 2000 + s).unwrap();
            let n = config.n();
            let k = r + (s as usize / 9) % (n - r);
            let m = separated_subset(&config, k, s).unwrap();
            let sol = tverberg_pm(&config, &m).unwrap();
            record_trace(&sol.trace);
            let Recovery::Certificate {
                certificate,
                alternative,
                ..
            } = sol.recovery
            else {
                return Some(format!("seed {s}: no certificate"));
            };
            let expected = match alternative {
                Alternative::InM => m.clone(),
                Alternative::Complement => complement(&m, n),
            };
            (certificate.negatives != expected)
                .then(|| format!("seed {s}: negatives {:?}, m {m:?}", certificate.negatives))
        })
        .collect();
    let eps = Rat::new(1.into(), 100.into());
    for seed in 0..3 {
        let (config, m) = example2(2, 3, &eps, seed).unwrap();
        let sol = tverberg_pm(&config, &m).unwrap();
        record_trace(&sol.trace);
        match sol.recovery {
            Recovery::Certificate {
                alternative: Alternative::Complement,
                ..
            } => {}
            other => failures.push(format!("example 2 seed {seed}: {other:?}")),
        }
        if search_prescribed(&config, &m).unwrap().found.is_some() {
            failures.push(format!(
                "example 2 seed {seed}: search found an M-negative partition"
            ));
        }
        if search_prescribed(&config, &complement(&m, config.n()))
            .unwrap()
            .found
            .is_none()
        {
            failures.push(format!(
                "example 2 seed {seed}: no complement-negative partition"
            ));
        }
    }
    outcome(
        failures.is_empty(),
        format!("100 runs with |M| >= r, plus example 2 x3; failures: {failures:?}"),
    )
}

/// Independent count: all set partitions by insertion, filtered by size.
fn naive_proper_count(n: usize, r: usize, d: usize) -> usize {
    let mut acc: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for sizes in &acc {
            for b in 0..sizes.len() {
                let mut q = sizes.clone();
                q[b] += 1;
                next.push(q);
            }
            let mut q = sizes.clone();
            q.push(1);
            next.push(q);
        }
        acc = next;
    }
    acc.iter()
        .filter(|s| s.len() == r && s.iter().all(|&x| x <= d + 1))
        .count()
}

fn criterion_4() -> Outcome {
    let eps = Rat::new(1.into(), 100.into());
    let oracle = naive_proper_count(7, 3, 2);
    let enumerated = proper_partitions(7, 3, 2).count();
    let mut failures = Vec::new();
    if oracle != 175 || enumerated != 175 {
        failures.push(format!("counts: oracle {oracle}, enumerated {enumerated}"));
    }
    for seed in 0..3 {
        let (config, m) = example1(2, 3, &eps, seed).unwrap();
        let out = search_prescribed(&config, &m).unwrap();
        if out.found.is_some() || out.partitions_scanned != 175 {
            failures.push(format!(
                "seed {seed}: found={} scanned={}",
                out.found.is_some(),
                out.partitions_scanned
            ));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "175 partitions scanned x3, none with negatives = {{center}}; failures: {failures:?}"
        ),
    )
}

fn random_partition(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Partition {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut parts = vec![Vec::new(); r];
    for (pos, &i) in order.iter().enumerate() {
        let j = if pos < r { pos } else { rng.gen_range(0..r) };
        parts[j].push(i);
    }
    Partition::new(parts, n).unwrap()
}

fn criterion_5() -> Outcome {
    let full: Vec<String> = (0..100u64)
        .into_par_iter()
        .filter_map(|s| {
            let (d, r) = shape(s);
            let config = random_config(d, r, 3000 + s).unwrap();
            let all: Vec<Partition> = proper_partitions(config.n(), r, d).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let p = &all[rng.gen_range(0..all.len())];
            match intersect_affine_hulls(&config, p).unwrap() {
                Intersection::Point {
                    det: Some(det),
                    certificate,
                } if !det.is_zero() => {
                    let v = certificate_violations(&config, p, &certificate);
                    (!v.is_empty()).then(|| format!("seed {s}: {v:?}"))
                }
                other => Some(format!("full seed {s}: {other:?}")),
            }
        })
        .collect();
    let deficient: Vec<String> = (0..100u64)
        .into_par_iter()
        .filter_map(|s| {
            let (d, r) = shape(s);
            let base = random_config(d, r, 4000 + s).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let n = rng.gen_range(r..=(r - 1) * (d + 1));
            let config = PointConfig::new(d, r, base.points()[..n].to_vec()).unwrap();
            let p = random_partition(n, r, &mut rng);
            match intersect_affine_hulls(&config, &p).unwrap() {
                Intersection::Empty => None,
                other => Some(format!("deficient seed {s}: {other:?}")),
            }
        })
        .collect();
    let square = PointConfig::new(
        2,
        2,
        vec![
            RVec::from_ints(&[0, 0]),
            RVec::from_ints(&[1, 0]),
            RVec::from_ints(&[0, 1]),
            RVec::from_ints(&[1, 1]),
        ],
    )
    .unwrap();
    let mut square_fail = Vec::new();
    for parts in [vec![vec![0, 1], vec![2, 3]], vec![vec![0, 2], vec![1, 3]]] {
        let p = Partition::new(parts, 4).unwrap();
        match intersect_affine_hulls(&square, &p).unwrap() {
            Intersection::Empty | Intersection::Degenerate => {}
            other => square_fail.push(format!("{:?}: {other:?}", p.parts())),
        }
    }
    for p in proper_partitions(4, 2, 2) {
        if let Intersection::Point { certificate, .. } =
            intersect_affine_hulls(&square, &p).unwrap()
        {
            let v = certificate_violations(&square, &p, &certificate);
            if !v.is_empty() {
                square_fail.push(format!("{:?} mis-certified: {v:?}", p.parts()));
            }
        }
    }
    let pass = full.is_empty() && deficient.is_empty() && square_fail.is_empty();
    outcome(
        pass,
        format!("100 full -> Point, 100 deficient -> Empty, square edges -> Empty; failures: {full:?} {deficient:?} {square_fail:?}"),
    )
}

fn criterion_6() -> Outcome {
    let mut report = Vec::new();
    let mut pass = true;
    for d in 1..=5usize {
        let expected: BTreeSet<usize> = (0..=(d + 2) / 2).collect();
        let spectra: Vec<BTreeSet<usize>> = (0..50u64)
            .into_par_iter()
            .map(|s| {
                radon_spectrum(&random_config(d, 2, 5000 + s).unwrap())
                    .unwrap()
                    .achievable
            })
            .collect();
        let mismatched = spectra.iter().filter(|a| **a != expected).count();
        let contained = spectra.iter().all(|a| a.is_superset(&expected));
        let max_k = spectra
            .iter()
            .flat_map(|a| a.iter().copied())
            .max()
            .unwrap_or(0);
        pass &= mismatched == 0;
        report.push(format!(
            "d={d}: {}/50 equal {{0..{}}}, all contain it: {contained}, max k seen {max_k}",
            50 - mismatched,
            (d + 2) / 2
        ));
    }
    outcome(pass, report.join("; "))
}

fn criterion_7() -> Outcome {
    let failures: Vec<String> = (2..=4usize)
        .into_par_iter()
        .flat_map(|r| (0..50u64).into_par_iter().map(move |s| (r, s)))
        .filter_map(|(r, s)| {
            let config = random_config(1, r, 6000 + s).unwrap();
            let hit = search_exact_k(&config, r - 1).unwrap().found.is_some();
            let over = search_exact_k(&config, r).unwrap();
            (!hit || over.found.is_some())
                .then(|| format!("r={r} seed={s}: k=r-1 {hit}, k=r {}", over.found.is_some()))
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!("150 line configs; failures: {failures:?}"),
    )
}

fn criterion_8() -> Outcome {
    let failures: Vec<String> = [(2usize, 2usize), (2, 4), (4, 2)]
        .par_iter()
        .flat_map(|&(d, r)| (0..50u64).into_par_iter().map(move |s| (d, r, s)))
        .filter_map(|(d, r, s)| {
            let config = random_config(d, r, 7000 + s).unwrap();
            let k = config.n() / 2;
            let m = separated_subset(&config, k, s).unwrap();
            let sol = tverberg_pm(&config, &m).unwrap();
            match sol.recovery {
                Recovery::Certificate {
                    certificate,
                    partition,
                    ..
                } if certificate.negatives.len() == k
                    && certificate_violations(&config, &partition, &certificate).is_empty() =>
                {
                    None
                }
                other => Some(format!("d={d} r={r} seed={s}: {other:?}")),
            }
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!("150 runs with k = n/2; failures: {failures:?}"),
    )
}

fn signs_match(coefficients: &[Rat], m: &[usize], alt: ColoredAlternative) -> bool {
    coefficients.iter().enumerate().all(|(i, a)| {
        let positive = m.contains(&i) == (alt == ColoredAlternative::MPositive);
        if positive {
            a.is_positive()
        } else {
            a.is_negative()
        }
    })
}

fn criterion_9() -> Outcome {
    let failures: Vec<String> = [(1usize, 2usize), (2, 2), (1, 3)]
        .par_iter()
        .flat_map(|&(d, r)| (0..50u64).into_par_iter().map(move |s| (d, r, s)))
        .filter_map(|(d, r, s)| {
            let cc = random_color_classes(d, r, 8000 + s).unwrap();
            let m = random_subset(cc.n(), s);
            let sol = colored_tverberg_pm(&cc, &m).unwrap();
            let ColoredOutcome::Colored {
                partition,
                alternative,
            } = sol.outcome
            else {
                return Some(format!("d={d} r={r} seed={s}: degenerate"));
            };
            let check = verify_colorful(&cc, &partition);
            if !check.valid || !signs_match(&partition.coefficients, &m, alternative) {
                return Some(format!(
                    "d={d} r={r} seed={s}: {:?} {:?}",
                    check.violations, partition.coefficients
                ));
            }
            if r == 2 {
                let all = exhaustive_colorful(&cc).unwrap();
                let matching = all.iter().any(|cp| {
                    signs_match(&cp.coefficients, &m, ColoredAlternative::MPositive)
                        || signs_match(&cp.coefficients, &m, ColoredAlternative::MNegative)
                });
                if !all.contains(&partition.canonical()) || !matching {
                    return Some(format!("d={d} r={r} seed={s}: enumeration disagrees"));
                }
            }
            None
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!("150 colour-class runs; failures: {failures:?}"),
    )
}

fn criterion_10() -> Outcome {
    let count = |k: usize| {
        (0..500u64)
            .into_par_iter()
            .filter(|&s| {
                search_exact_k(&random_config(2, 3, 9000 + s).unwrap(), k)
                    .unwrap()
                    .found
                    .is_some()
            })
            .count()
    };
    let (k3, k4) = (count(3), count(4));
    outcome(
        k3 == 500,
        format!("k=3 found {k3}/500; k=4 found {k4}/500 (non-binding)"),
    )
}

/// Brute force minimum-norm point: project the origin onto the affine hull of
/// each affinely independent subset and keep projections inside the hull.
fn min_norm_oracle(points: &[RVec]) -> RVec {
    let mut best: Option<RVec> = None;
    for mask in 1u32..(1 << points.len()) {
        let set: Vec<&RVec> = (0..points.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &points[i])
            .collect();
        let k = set.len();
        let lifted: Vec<RVec> = set.iter().map(|p| p.extended(Rat::one())).collect();
        if rank(&RMat::from_columns(&lifted).unwrap()) < k {
            continue;
        }
        // Minimize |sum mu_i p_i|^2 subject to sum mu_i = 1.
        let mut m = RMat::zeros(k + 1, k + 1);
        for a in 0..k {
            for b in 0..k {
                m[(a, b)] = set[a].dot(set[b]);
            }
            m[(a, k)] = Rat::one();
            m[(k, a)] = Rat::one();
        }
        let mut rhs = RVec::zeros(k + 1);
        rhs[k] = Rat::one();
        let LinearSolution::Unique { solution, .. } = solve_linear(&m, &rhs).unwrap() else {
            continue;
        };
        if solution.iter().take(k).any(Signed::is_negative) {
            continue;
        }
        let mut y = RVec::zeros(points[0].dim());
        for (c, p) in solution.iter().zip(&set) {
            y.add_scaled(c, p);
        }
        if best.as_ref().is_none_or(|b| y.norm_sq() < b.norm_sq()) {
            best = Some(y);
        }
    }
    best.unwrap()
}

fn criterion_11() -> Outcome {
    let traces = TRACES.lock().unwrap();
    let bad_traces = traces
        .iter()
        .filter(|t| {
            !t.windows(2).all(|w| w[1].norm_sq < w[0].norm_sq)
                || !t.last().unwrap().norm_sq.is_zero()
        })
        .count();
    let pivots: usize = traces.iter().map(|t| t.len() - 1).sum();
    let mismatches = (0..200u64)
        .into_par_iter()
        .filter(|&s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let dim = rng.gen_range(1..=4);
            let count = rng.gen_range(1..=6);
            let points: Vec<RVec> = (0..count)
                .map(|_| {
                    (0..dim)
                        .map(|_| {
                            Rat::new(
                                rng.gen_range(-20i64..=20).into(),
                                rng.gen_range(1i64..=4).into(),
                            )
                        })
                        .collect()
                })
                .collect();
            min_norm_point(&points).point != min_norm_oracle(&points)
        })
        .count();
    outcome(
        traces.len() >= 203 && bad_traces == 0 && mismatches == 0,
        format!(
            "{} traces, {pivots} pivots, {bad_traces} non-decreasing; min-norm oracle mismatches {mismatches}/200",
            traces.len()
        ),
    )
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut results: Vec<(usize, Outcome)> = Vec::new();
    let mut run = |i: usize, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let o = f();
        println!(
            "criterion {i:>2}: {} ({:.1}s) {}",
            if o.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            o.detail
        );
        results.push((i, o));
    };
    run(1, &criterion_1);
    run(2, &criterion_2);
    run(3, &criterion_3);
    run(4, &criterion_4);
    run(5, &criterion_5);
    run(6, &criterion_6);
    run(7, &criterion_7);
    run(8, &criterion_8);
    run(9, &criterion_9);
    run(10, &criterion_10);
    run(11, &criterion_11);

    let unexpected: Vec<usize> = results
        .iter()
        .filter(|(i, o)| o.pass == KNOWN_RED.contains(i))
        .map(|(i, _)| *i)
        .collect();
    let passed = results.iter().filter(|(_, o)| o.pass).count();
    println!(
        "acceptance: {passed}/{} PASS, known red {KNOWN_RED:?}, {:.1}s",
        results.len(),
        started.elapsed().as_secs_f64()
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected result for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
