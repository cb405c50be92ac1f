//! A seeded, deterministic property suite over random and generated sets.
//!
//! The same [`VerifyConfig`] always produces byte-identical output from
//! [`VerifySummary::render`].

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{divisors, prime_power, FieldContext};
use crate::bounds::{ahc_verdict, lg_verdict, mhc_verdict};
use crate::constructions::{interleave, ConstructionSpec, InterleaveMap};
use crate::correlation::{full_report, hamming_correlation, verify_sum_identities_with, CorrelationReport};
use crate::cyclotomy::CyclotomicScheme;
use crate::sequence::{FhsSet, Provenance};

const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random cases per randomized property.
    pub cases: usize,
    /// Largest field order in the cyclotomic-number sweep.
    pub cyclotomic_max_q: u64,
    /// Largest random set: `(N, M, L)`.
    pub max_shape: (usize, u32, usize),
    /// Corrupts one correlation value before checking, to exercise the failure path.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            cases: 1000,
            cyclotomic_max_q: 4096,
            max_shape: (64, 16, 8),
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// The first few failing cases, described by their parameters.
    pub counterexamples: Vec<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub seed: u64,
    pub outcomes: Vec<PropertyOutcome>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "seed {}", self.seed);
        for o in &self.outcomes {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{:<24} {status}  {} cases, {} failures", o.name, o.cases, o.failures);
            for c in &o.counterexamples {
                let _ = writeln!(s, "    counterexample: {c}");
            }
        }
        let _ = writeln!(s, "{}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}

/// A set with every shape parameter drawn uniformly from `1..=max`.
pub fn random_set<R: Rng + ?Sized>(rng: &mut R, max_shape: (usize, u32, usize)) -> FhsSet {
    let n = rng.gen_range(1..=max_shape.0);
    let m = rng.gen_range(1..=max_shape.1);
    let l = rng.gen_range(1..=max_shape.2);
    let rows = (0..l)
        .map(|_| (0..n).map(|_| rng.gen_range(0..m)).collect())
        .collect();
    FhsSet::from_rows(rows, m, Provenance::new("random"))
        .expect("random shape is within limits")
}

/// A perfectly balanced set (each symbol `N / M` times per sequence), which
/// always has optimal AHC.
pub fn random_balanced_set<R: Rng + ?Sized>(rng: &mut R, max_shape: (usize, u32, usize)) -> FhsSet {
    let m = rng.gen_range(1..=max_shape.1.min(max_shape.0 as u32));
    let reps = rng.gen_range(1..=max_shape.0 / m as usize);
    let l = rng.gen_range(2..=max_shape.2.max(2));
    let rows = (0..l)
        .map(|_| {
            let mut row: Vec<u32> = (0..m).flat_map(|a| std::iter::repeat_n(a, reps)).collect();
            row.shuffle(rng);
            row
        })
        .collect();
    FhsSet::from_rows(rows, m, Provenance::new("random_balanced"))
        .expect("random shape is within limits")
}

fn describe(set: &FhsSet) -> String {
    let (n, m, l) = set.shape();
    let rows: Vec<String> = set
        .sequences()
        .iter()
        .map(|x| format!("{:?}", x.symbols()))
        .collect();
    format!("N={n} M={m} L={l} rows={}", rows.join(" "))
}

fn engine_disagreement(set: &FhsSet, report: &CorrelationReport) -> Option<String> {
    let seqs = set.sequences();
    for (i, x) in seqs.iter().enumerate() {
        for (j, y) in seqs.iter().enumerate() {
            for tau in 0..set.seq_len() {
                let direct = hamming_correlation(x, y, tau).expect("same length");
                let fast = report.value(i, j, tau);
                if direct != fast {
                    return Some(format!("H_({i},{j})({tau}): engine {fast}, direct {direct}"));
                }
            }
        }
    }
    None
}

fn record(outcome: &mut PropertyOutcome, failure: Option<String>) {
    outcome.cases += 1;
    if let Some(msg) = failure {
        outcome.failures += 1;
        if outcome.counterexamples.len() < MAX_COUNTEREXAMPLES {
            outcome.counterexamples.push(msg);
        }
    }
}

fn outcome(name: &'static str) -> PropertyOutcome {
    PropertyOutcome {
        name,
        cases: 0,
        failures: 0,
        counterexamples: Vec::new(),
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Sum identities and engine-versus-definition agreement on random sets.
fn check_identities(cfg: &VerifyConfig) -> PropertyOutcome {
    let mut rng = rng_for(cfg.seed, 1);
    let sets: Vec<FhsSet> = (0..cfg.cases).map(|_| random_set(&mut rng, cfg.max_shape)).collect();
    let results: Vec<Option<String>> = sets
        .par_iter()
        .enumerate()
        .map(|(case, set)| {
            let mut report = full_report(set);
            if cfg.inject_fault && case == 0 {
                let old = report.value(0, 0, 0);
                report.corrupt_for_testing(0, 0, 0, old + 1);
            }
            let problem = if !verify_sum_identities_with(set, &report) {
                Some("sum identities fail".to_string())
            } else {
                engine_disagreement(set, &report)
            };
            problem.map(|p| format!("case {case}: {p}; {}", describe(set)))
        })
        .collect();
    let mut out = outcome("sum_identities");
    results.into_iter().for_each(|r| record(&mut out, r));
    out
}

/// Every prime power `q <= max_q` and every `M >= 2` dividing `q - 1`.
fn check_cyclotomic_sums(cfg: &VerifyConfig) -> PropertyOutcome {
    let qs: Vec<u64> = (3..=cfg.cyclotomic_max_q).filter(|&q| prime_power(q).is_some()).collect();
    let results: Vec<Vec<Option<String>>> = qs
        .par_iter()
        .map(|&q| {
            let field = FieldContext::of_order(q).expect("prime power within limits");
            divisors(q - 1)
                .into_iter()
                .filter(|&m| m >= 2)
                .map(|m| {
                    let scheme = CyclotomicScheme::new(field.clone(), m as u32).expect("m divides q - 1");
                    let bad: Vec<usize> = scheme
                        .verify_lemma11()
                        .iter()
                        .enumerate()
                        .filter(|(_, ok)| !**ok)
                        .map(|(j, _)| j)
                        .collect();
                    (!bad.is_empty()).then(|| format!("q={q} M={m} fails at j={bad:?}"))
                })
                .collect()
        })
        .collect();
    let mut out = outcome("cyclotomic_sums");
    results.into_iter().flatten().for_each(|r| record(&mut out, r));
    out
}

/// Random bijective rearrangements preserve `S_a + S_c` and the AHC verdict.
fn check_interleaving(cfg: &VerifyConfig) -> PropertyOutcome {
    let mut rng = rng_for(cfg.seed, 2);
    let mut out = outcome("interleave_preservation");
    for case in 0..cfg.cases {
        let set = if case % 2 == 0 {
            random_balanced_set(&mut rng, cfg.max_shape)
        } else {
            random_set(&mut rng, cfg.max_shape)
        };
        let (n, _, l) = set.shape();
        let total = n * l;
        let lens: Vec<usize> = (1..=total.min(crate::sequence::MAX_LEN))
            .filter(|d| total % d == 0 && total / d <= crate::sequence::MAX_SET_SIZE)
            .collect();
        let target_len = *lens.choose(&mut rng).expect("N L itself qualifies");
        let map = InterleaveMap::random(n, l, target_len, &mut rng).expect("target length divides N L");
        let out_set = interleave(&set, &map).expect("map matches the set");
        let (a, b) = (full_report(&set), full_report(&out_set));
        let (va, vb) = (ahc_verdict(&a).verdict, ahc_verdict(&b).verdict);
        let failure = if a.s_a() + a.s_c() != b.s_a() + b.s_c() {
            Some(format!(
                "case {case}: S_a + S_c {} became {}; target length {target_len}; {}",
                a.s_a() + a.s_c(),
                b.s_a() + b.s_c(),
                describe(&set)
            ))
        } else if (n >= 2 && l >= 2 && out_set.seq_len() >= 2 && out_set.len() >= 2) && va != vb {
            Some(format!("case {case}: AHC verdict {va} became {vb}; target length {target_len}; {}", describe(&set)))
        } else {
            None
        };
        record(&mut out, failure);
    }
    out
}

fn bound_violation(set: &FhsSet, report: &CorrelationReport) -> Option<String> {
    let l = set.len();
    let mut verdicts: Vec<_> = (0..l).map(|i| lg_verdict(report, i)).collect();
    verdicts.push(mhc_verdict(report));
    verdicts.push(ahc_verdict(report));
    verdicts
        .iter()
        .find(|v| v.witness.violates_bound())
        .map(|v| format!("{:?} bound violated by {:?}", v.bound, v.witness))
}

/// The attained statistics never beat the lower bounds, on random sets and on
/// a fixed roster of generated sets.
fn check_bounds(cfg: &VerifyConfig) -> PropertyOutcome {
    let mut rng = rng_for(cfg.seed, 3);
    let mut out = outcome("bound_soundness");
    for case in 0..cfg.cases {
        let set = random_set(&mut rng, cfg.max_shape);
        let report = full_report(&set);
        record(
            &mut out,
            bound_violation(&set, &report).map(|v| format!("case {case}: {v}; {}", describe(&set))),
        );
    }
    for spec in generated_roster() {
        let set = spec.generate().expect("roster parameters are valid");
        let report = full_report(&set);
        record(&mut out, bound_violation(&set, &report).map(|v| format!("{spec:?}: {v}")));
    }
    out
}

/// Small instances of every family.
pub fn generated_roster() -> Vec<ConstructionSpec> {
    use ConstructionSpec::*;
    vec![
        Kumar { p: 3 },
        Kumar { p: 5 },
        Kumar { p: 7 },
        Nhz { k: 2, n: 5, d: 2 },
        Nhz { k: 3, n: 7, d: 2 },
        Nhz { k: 2, n: 9, d: 3 },
        P2p { p: 3 },
        P2p { p: 5 },
        CyclotomicA { p: 13, m: 4 },
        CyclotomicA { p: 31, m: 6 },
        CyclotomicB { q: 9, m: 4 },
        CyclotomicB { q: 16, m: 5 },
        CyclotomicB { q: 27, m: 13 },
        Multiplicative { n: 15 },
        Theorem17 { n: 35, k: 2 },
        Theorem17 { n: 21, k: 2 },
        Corollary16 { p: 13, m: 4 },
    ]
}

pub fn run(cfg: &VerifyConfig) -> VerifySummary {
    VerifySummary {
        seed: cfg.seed,
        outcomes: vec![
            check_identities(cfg),
            check_cyclotomic_sums(cfg),
            check_interleaving(cfg),
            check_bounds(cfg),
        ],
    }
}
