//! The `verify` harness: executable checks of the desk-checkable claims.
//!
//! Each suite prints one `PASS`/`FAIL` line per assertion. A failing
//! instance is serialized after its line (as a `freqlab-signal v1` file or an
//! interval list) so it can be replayed with `eval` or `covering`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use freqlab::covering::{covers, greedy_disjoint, pairwise_disjoint, triple};
use freqlab::examples::{composite_jump, spike_pair, squares_log, squares_power, stretched_log};
use freqlab::levelsets::{census_k, census_s, LevelParams, Theta};
use freqlab::maximal::{
    analyze, average, bilinear_analyze, bilinear_average, half_mass_radius, radius_bound,
    ExtremalSet,
};
use freqlab::rational::format_compact;
use freqlab::text::{write_intervals, write_signal};
use freqlab::{IntegerInterval, Rational, Signal};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::random;
use crate::{CmdResult, Failure};

const MAX_LISTED_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Variational,
    Covering,
    Invariance,
    Fundamental,
    Examples,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Oracle,
        Suite::Variational,
        Suite::Covering,
        Suite::Invariance,
        Suite::Fundamental,
        Suite::Examples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Variational => "variational",
            Suite::Covering => "covering",
            Suite::Invariance => "invariance",
            Suite::Fundamental => "fundamental",
            Suite::Examples => "examples",
        }
    }

    /// Trial count when `--trials` is not given; fixed suites ignore it.
    pub fn default_trials(self) -> u64 {
        match self {
            Suite::Oracle => 1000,
            Suite::Covering => 10_000,
            Suite::Invariance => 500,
            Suite::Variational | Suite::Fundamental | Suite::Examples => 0,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Outcome of one assertion over a batch of instances.
#[derive(Clone, Debug, Default)]
pub struct Assertion {
    pub label: String,
    pub instances: u64,
    /// Description and replay text for each failing instance.
    pub failures: Vec<(String, String)>,
}

impl Assertion {
    fn new(label: impl Into<String>) -> Self {
        Self { label: label.into(), ..Default::default() }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> (String, String)) {
        self.instances += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub assertions: Vec<Assertion>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(Assertion::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for a in &self.assertions {
            let status = if a.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {}: {} ({} instances, {} failures)",
                self.suite.name(),
                a.label,
                a.instances,
                a.failures.len()
            );
            for (what, replay) in a.failures.iter().take(MAX_LISTED_FAILURES) {
                let _ = writeln!(out, "  instance: {what}");
                for line in replay.lines() {
                    let _ = writeln!(out, "  | {line}");
                }
            }
        }
        out
    }
}

/// Runs `suites` in order; any failed assertion turns the result into
/// [`Failure::Assertion`] carrying the full report.
pub fn run(suites: &[Suite], trials: Option<u64>, seed: u64) -> CmdResult<String> {
    let mut out = String::new();
    let mut ok = true;
    for &suite in suites {
        let report = run_suite(suite, trials.unwrap_or(suite.default_trials()), seed);
        ok &= report.passed();
        out.push_str(&report.render());
    }
    if ok {
        Ok(out)
    } else {
        Err(Failure::Assertion(out))
    }
}

pub fn run_suite(suite: Suite, trials: u64, seed: u64) -> SuiteReport {
    let assertions = match suite {
        Suite::Oracle => oracle_suite(trials, seed),
        Suite::Variational => variational_suite(),
        Suite::Covering => covering_suite(trials, seed),
        Suite::Invariance => invariance_suite(trials, seed),
        Suite::Fundamental => fundamental_suite(),
        Suite::Examples => examples_suite(),
    };
    SuiteReport { suite, assertions }
}

fn replay_signal(f: &Signal, note: &str) -> String {
    write_signal(f, &[("replay".to_string(), note.to_string())])
}

/// Reference `(M, E, F)` at `n` from every radius in `0..=bound`, growing the
/// window one radius at a time from point lookups. Shares nothing with the
/// candidate-radius search beyond the input signal.
pub struct BruteForce {
    scaled: HashMap<BigInt, BigInt>,
    denom: BigInt,
}

impl BruteForce {
    pub fn new(f: &Signal) -> Self {
        let denom = f.values().iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let scaled = f
            .entries()
            .map(|(i, v)| (i.clone(), v.numer() * (&denom / v.denom())))
            .collect();
        Self { scaled, denom }
    }

    fn at(&self, k: &BigInt) -> BigInt {
        self.scaled.get(k).cloned().unwrap_or_default()
    }

    pub fn analyze(&self, n: &BigInt, bound: u64) -> (Rational, Vec<u64>) {
        let mut sum = self.at(n);
        let mut best = (sum.clone(), BigInt::one());
        let mut radii = vec![0u64];
        for r in 1..=bound {
            let rb = BigInt::from(r);
            sum += self.at(&(n - &rb)) + self.at(&(n + &rb));
            let width = BigInt::from(2 * r + 1);
            match (&sum * &best.1).cmp(&(&best.0 * &width)) {
                std::cmp::Ordering::Greater => {
                    best = (sum.clone(), width);
                    radii = vec![r];
                }
                std::cmp::Ordering::Equal => radii.push(r),
                std::cmp::Ordering::Less => {}
            }
        }
        (Rational::new(best.0, best.1 * &self.denom), radii)
    }

    /// Bilinear reference against `other`; `self` plays `f`, `other` plays `g`.
    pub fn analyze_bilinear(&self, other: &BruteForce, n: &BigInt, bound: u64) -> (Rational, Vec<u64>) {
        let mut sum = self.at(n) * other.at(n);
        let mut best = (sum.clone(), BigInt::one());
        let mut radii = vec![0u64];
        for r in 1..=bound {
            let rb = BigInt::from(r);
            let (lo, hi) = (n - &rb, n + &rb);
            sum += self.at(&lo) * other.at(&hi) + self.at(&hi) * other.at(&lo);
            let width = BigInt::from(2 * r + 1);
            match (&sum * &best.1).cmp(&(&best.0 * &width)) {
                std::cmp::Ordering::Greater => {
                    best = (sum.clone(), width);
                    radii = vec![r];
                }
                std::cmp::Ordering::Equal => radii.push(r),
                std::cmp::Ordering::Less => {}
            }
        }
        (Rational::new(best.0, best.1 * &self.denom * &other.denom), radii)
    }
}

pub fn radii_u64(set: &ExtremalSet) -> Option<Vec<u64>> {
    match set {
        ExtremalSet::All => None,
        ExtremalSet::Radii(rs) => rs.iter().map(|r| r.to_u64()).collect(),
    }
}

/// Candidate-radius `analyze` agrees exactly with brute force at every
/// `n ∈ [-120, 120]` for `trials` random signals.
pub fn oracle_suite(trials: u64, seed: u64) -> Vec<Assertion> {
    let mut rng = random::rng(seed);
    let signals: Vec<Signal> = (0..trials).map(|_| random::sparse_signal(&mut rng, 30, 100)).collect();
    let mismatches: Vec<Vec<(i64, String)>> = signals
        .par_iter()
        .map(|f| {
            let oracle = BruteForce::new(f);
            let mut bad = Vec::new();
            for n in -120i64..=120 {
                let nb = BigInt::from(n);
                let bound = radius_bound(f, &nb).expect("non-zero").to_u64().expect("small");
                let (m, e) = oracle.analyze(&nb, bound);
                let res = analyze(f, &nb);
                let agree = res.maximal_value == m
                    && radii_u64(&res.extremal_radii).as_ref() == Some(&e)
                    && res.frequency == BigUint::from(e[0]);
                if !agree {
                    bad.push((n, format!("candidate M={} F={} vs brute force M={} F={}",
                        format_compact(&res.maximal_value), res.frequency, format_compact(&m), e[0])));
                }
            }
            bad
        })
        .collect();

    let mut a = Assertion::new("analyze == brute force on n in [-120,120]");
    for (i, (f, bad)) in signals.iter().zip(&mismatches).enumerate() {
        a.instances += 241 - 1;
        a.record(bad.is_empty(), || {
            let (n, what) = &bad[0];
            (format!("signal #{i} n={n}: {what}"), replay_signal(f, &format!("n={n}")))
        });
    }
    vec![a]
}

/// The spike-pair jump and its composite, unbounded version.
pub fn variational_suite() -> Vec<Assertion> {
    let mut out = Vec::new();
    for c in [100u64, 101, 150, 1000] {
        let f = spike_pair(c).expect("admissible C");
        let ci = BigInt::from(c);
        let zero = BigInt::zero();
        let one = BigInt::one();
        let at0 = analyze(&f, &zero);
        let at1 = analyze(&f, &one);
        let a3c = average(&f, &zero, &BigUint::from(3 * c));
        let expected_a3c = Rational::new(&ci * 4 + 1, &ci * 6 + 1);
        let f1 = BigInt::from(at1.frequency.clone());
        let f0 = BigInt::from(at0.frequency.clone());
        let checks = [
            ("F f_C(0) = 0", at0.frequency.is_zero(), format!("F={}", at0.frequency)),
            ("M f_C(0) = 1", at0.maximal_value.is_one(), format!("M={}", format_compact(&at0.maximal_value))),
            ("A_3C f_C(0) = (4C+1)/(6C+1)", a3c == expected_a3c, format!("A={}", format_compact(&a3c))),
            ("F f_C(1) = 3C+1", f1 == &ci * 3 + 1, format!("F={}", at1.frequency)),
            ("F f_C(1) - F f_C(0) = 3C+1", &f1 - &f0 == &ci * 3 + 1, format!("jump={}", &f1 - &f0)),
            ("F f_C(1) - F f_C(0) > C", &f1 - &f0 > ci, format!("jump={}", &f1 - &f0)),
        ];
        for (label, ok, got) in checks {
            let mut a = Assertion::new(format!("C={c}: {label}"));
            a.record(ok, || (got, replay_signal(&f, &format!("spike_pair C={c}"))));
            out.push(a);
        }
    }

    let (c_min, c_max) = (100u64, 105u64);
    let f = composite_jump(c_min, c_max).expect("admissible range");
    for c in c_min..=c_max {
        let center = BigInt::one() << (2 * c);
        let at_center = analyze(&f, &center);
        let next = analyze(&f, &(&center + 1));
        let mut a = Assertion::new(format!("composite C={c}: F f(4^C) = 0"));
        a.record(at_center.frequency.is_zero(), || {
            (format!("F={}", at_center.frequency), format!("composite_jump {c_min}..{c_max}"))
        });
        out.push(a);
        let mut a = Assertion::new(format!("composite C={c}: F f(4^C + 1) = 3C+1"));
        a.record(next.frequency == BigUint::from(3 * c + 1), || {
            (format!("F={}", next.frequency), format!("composite_jump {c_min}..{c_max}"))
        });
        out.push(a);
    }
    out
}

/// Greedy selection is disjoint, meets the one-third bound, and its triples
/// cover every input, on `trials` random collections.
pub fn covering_suite(trials: u64, seed: u64) -> Vec<Assertion> {
    let mut rng = random::rng(seed);
    let mut disjoint = Assertion::new("chosen intervals pairwise disjoint");
    let mut third = Assertion::new("3 * sum(chosen lengths) >= |union|");
    let mut cover = Assertion::new("union of tripled chosen covers union of inputs");
    let mut deterministic = Assertion::new("identical input gives identical selection");
    for trial in 0..trials {
        let ivs = random::interval_collection(&mut rng, 50, 1_000_000);
        let sel = greedy_disjoint(&ivs).expect("non-empty");
        let chosen: Vec<&IntegerInterval> = sel.chosen.iter().map(|&i| &ivs[i]).collect();
        let tripled: Vec<IntegerInterval> = chosen.iter().map(|c| triple(c)).collect();
        let describe = || (format!("collection #{trial}"), write_intervals(&ivs));
        disjoint.record(pairwise_disjoint(&chosen), describe);
        third.record(sel.meets_third_bound(), describe);
        cover.record(covers(&tripled, &ivs), describe);
        deterministic.record(greedy_disjoint(&ivs).as_ref() == Ok(&sel), describe);
    }
    vec![disjoint, third, cover, deterministic]
}

/// Translation, scaling, reflection and bilinear symmetry on random signals.
pub fn invariance_suite(trials: u64, seed: u64) -> Vec<Assertion> {
    let mut rng = random::rng(seed);
    let mut translation = Assertion::new("F(tau_k f)(n+k) = F f(n), M unchanged");
    let mut scaling = Assertion::new("(E, F) invariant under c*f, M scales by c");
    let mut reflection = Assertion::new("F(f(-.))(-n) = F f(n)");
    let mut symmetry = Assertion::new("B_r(f,g)(n) = B_r(g,f)(n)");
    for trial in 0..trials {
        use rand::Rng;
        let f = random::sparse_signal(&mut rng, 30, 100);
        let g = random::sparse_signal(&mut rng, 30, 100);
        let shift = BigInt::from(rng.gen_range(-10_000i64..=10_000));
        let c = random::positive_rational(&mut rng);
        let shifted = f.translate(&shift);
        let scaled = f.scale(&c).expect("positive");
        let reflected = f.reflect();
        let describe = |n: i64| {
            let f = &f;
            move || (format!("signal #{trial} n={n}"), replay_signal(f, &format!("n={n}")))
        };
        for n in (-120i64..=120).step_by(3) {
            let nb = BigInt::from(n);
            let base = analyze(&f, &nb);
            translation.record(analyze(&shifted, &(&nb + &shift)) == base, describe(n));
            let s = analyze(&scaled, &nb);
            scaling.record(
                s.extremal_radii == base.extremal_radii
                    && s.frequency == base.frequency
                    && s.maximal_value == &base.maximal_value * &c,
                describe(n),
            );
            reflection.record(analyze(&reflected, &-&nb) == base, describe(n));
            let r = BigUint::from(rng.gen_range(0u64..=240));
            symmetry.record(
                bilinear_average(&f, &g, &nb, &r) == bilinear_average(&g, &f, &nb, &r),
                describe(n),
            );
        }
    }
    vec![translation, scaling, reflection, symmetry]
}

/// The signals the fundamental-inequality suite runs on.
pub fn desk_scale_examples() -> Vec<(String, Signal)> {
    let q = |p: i64, d: i64| Rational::new(p.into(), d.into());
    vec![
        ("squares_power eps=1/4 cutoff=2000".into(), squares_power(&q(1, 4), 2000, 128).unwrap().signal),
        ("squares_power eps=1 cutoff=100".into(), squares_power(&q(1, 1), 100, 128).unwrap().signal),
        ("squares_log eps=1/2 cutoff=500".into(), squares_log(&q(1, 2), 500, 128).unwrap().signal),
        ("stretched_log eps=1 cutoff=5000".into(), stretched_log(&q(1, 1), 5000, 128).unwrap().signal),
        ("spike_pair C=100".into(), spike_pair(100).unwrap()),
        ("spike_pair C=1000".into(), spike_pair(1000).unwrap()),
        ("composite_jump 100..105".into(), composite_jump(100, 105).unwrap()),
    ]
}

/// `M f(n) ≥ ‖f‖₁/(8|n|+2)` and the matching window bound at `F f(n)`, for
/// `|n|` in `[h, h + 500]` with `h` the half-mass radius.
pub fn fundamental_suite() -> Vec<Assertion> {
    desk_scale_examples()
        .into_iter()
        .map(|(name, f)| {
            let mut a = Assertion::new(format!("{name}: M f(n) >= |f|_1/(8|n|+2) for h <= |n| <= h+500"));
            for (abs_n, n, ok) in fundamental_violations(&f, 500) {
                a.record(ok, || (format!("n={n} (|n|={abs_n})"), replay_signal(&f, &format!("n={n}"))));
            }
            a
        })
        .collect()
}

/// `(|n|, n, holds)` for both signs of every `|n| ∈ [h, h + span]`.
pub fn fundamental_violations(f: &Signal, span: u64) -> Vec<(BigInt, BigInt, bool)> {
    let h = BigInt::from(half_mass_radius(f).expect("non-zero"));
    let points: Vec<BigInt> = (0..=span)
        .flat_map(|d| {
            let abs_n = &h + BigInt::from(d);
            if abs_n.is_zero() {
                vec![abs_n]
            } else {
                vec![-abs_n.clone(), abs_n]
            }
        })
        .collect();
    points
        .into_par_iter()
        .map(|n| {
            let abs_n = n.abs();
            let res = analyze(f, &n);
            let denom = Rational::from_integer(&abs_n * 8 + 2);
            let lower = f.l1_norm() / &denom;
            let freq = BigInt::from(res.frequency.clone());
            let window = IntegerInterval::new(&n - &freq, &n + &freq).expect("ordered");
            let width = Rational::from_integer(&freq * 2 + 1);
            let ok = res.maximal_value >= lower && f.window_sum(&window) >= width * lower;
            (abs_n, n, ok)
        })
        .collect()
}

/// Pointwise claims for the stretched-log family (unilinear and bilinear
/// `F = 0` at every support point with `m ∈ [2500, 5000]`) and the δ level sets.
pub fn examples_suite() -> Vec<Assertion> {
    let mut out = Vec::new();
    let checks = stretched_log_pointwise(5000, 2500, 25);
    let mut uni = Assertion::new("stretched_log eps=1: F f(n) = 0 at n = ceil(m ln^2 m), m in [2500,5000]");
    let mut bi = Assertion::new("stretched_log eps=1: F(f,f)(n) = 0 at the same points");
    let mut oracle = Assertion::new("stretched_log eps=1: brute force agrees on every 25th point");
    for c in &checks {
        uni.record(c.frequency_zero, || (format!("m={} n={}", c.m, c.n), String::new()));
        bi.record(c.bilinear_zero, || (format!("m={} n={}", c.m, c.n), String::new()));
        if let Some(agree) = c.oracle_agrees {
            oracle.record(agree, || (format!("m={} n={}", c.m, c.n), String::new()));
        }
    }
    out.extend([uni, bi, oracle]);
    out.extend(delta_levelset_assertions());
    out
}

#[derive(Clone, Debug)]
pub struct PointwiseCheck {
    pub m: u64,
    pub n: BigInt,
    pub frequency_zero: bool,
    pub bilinear_zero: bool,
    /// Set on the sub-sampled points only.
    pub oracle_agrees: Option<bool>,
}

/// Runs `analyze` and `bilinear_analyze` at every support point of
/// `stretched_log(1, cutoff)` with `m ≥ m_from`, and brute force on every
/// `stride`-th one.
pub fn stretched_log_pointwise(cutoff: u64, m_from: u64, stride: u64) -> Vec<PointwiseCheck> {
    let f = stretched_log(&Rational::one(), cutoff, 128).expect("valid parameters").signal;
    let oracle = BruteForce::new(&f);
    // Support position i corresponds to m = i + 10.
    let points: Vec<(u64, BigInt)> = f
        .indices()
        .iter()
        .enumerate()
        .map(|(i, n)| (i as u64 + 10, n.clone()))
        .filter(|(m, _)| *m >= m_from)
        .collect();
    points
        .into_par_iter()
        .map(|(m, n)| {
            let uni = analyze(&f, &n);
            let bil = bilinear_analyze(&f, &f, &n);
            let oracle_agrees = (m - m_from).is_multiple_of(stride).then(|| {
                let bound = radius_bound(&f, &n).expect("non-zero").to_u64().expect("fits");
                let (mu, eu) = oracle.analyze(&n, bound);
                let (mb, eb) = oracle.analyze_bilinear(&oracle, &n, bound);
                mu == uni.maximal_value
                    && radii_u64(&uni.extremal_radii).as_ref() == Some(&eu)
                    && mb == bil.maximal_value
                    && radii_u64(&bil.extremal_radii).as_ref() == Some(&eb)
            });
            PointwiseCheck {
                m,
                frequency_zero: uni.frequency.is_zero() && !uni.zero_signal,
                bilinear_zero: bil.frequency.is_zero() && !bil.degenerate,
                n,
                oracle_agrees,
            }
        })
        .collect()
}

fn delta_levelset_assertions() -> Vec<Assertion> {
    let params = LevelParams::new(Rational::from_integer(2.into()), Rational::one(), Theta::Linear)
        .expect("valid");
    let delta = Signal::from_pairs([(BigInt::zero(), Rational::one())]).expect("valid");
    let mut out = Vec::new();
    for n_max in [10u64, 100, 1000] {
        let k = census_k(&delta, &params, n_max).expect("fits");
        let s = census_s(&delta, &params, n_max).expect("fits");
        let mut a = Assertion::new(format!("delta_0: |K_2,{n_max}| = 1 and S_2 within [-{n_max},{n_max}] = {{0}}"));
        a.record(k.len() == 1 && s == vec![BigInt::zero()], || {
            (format!("|K|={} S={:?}", k.len(), s), replay_signal(&delta, "delta_0"))
        });
        out.push(a);
    }
    out
}
