use std::fmt::Write as _;
use std::path::Path;

use freqlab::covering::greedy_disjoint;
use freqlab::examples::GeneratorSpec;
use freqlab::levelsets::{census_curves, DensityOf, LevelParams, Theta};
use freqlab::maximal::{analyze, bilinear_analyze, frequency_profile, ExtremalSet};
use freqlab::rational::{self, format_compact};
use freqlab::text::{read_intervals, read_signal, write_signal};
use freqlab::{IntegerInterval, Rational, Signal};
use num_bigint::BigInt;

use crate::{CmdResult, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelMode {
    K,
    S,
    ThetaZero,
}

impl std::str::FromStr for LevelMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "K" | "k" => Ok(LevelMode::K),
            "S" | "s" => Ok(LevelMode::S),
            "theta-zero" | "theta_zero" => Ok(LevelMode::ThetaZero),
            _ => Err(format!("unknown mode `{s}` (expected K, S or theta-zero)")),
        }
    }
}

fn read_file(path: &Path) -> CmdResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

pub fn load_signal(path: &Path) -> CmdResult<Signal> {
    let text = read_file(path)?;
    read_signal(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn load_intervals(path: &Path) -> CmdResult<Vec<IntegerInterval>> {
    let text = read_file(path)?;
    read_intervals(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn parse_rational(name: &str, text: &str) -> CmdResult<Rational> {
    rational::parse(text).map_err(|e| Failure::Usage(format!("--{name}: {e}")))
}

pub fn parse_grid(text: &str) -> CmdResult<Vec<u64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Failure::Usage(format!("--N-grid: invalid entry `{part}`")))
        })
        .collect()
}

fn format_extremal(set: &ExtremalSet) -> String {
    match set {
        ExtremalSet::All => "all".to_string(),
        ExtremalSet::Radii(radii) => {
            let list: Vec<String> = radii.iter().map(ToString::to_string).collect();
            format!("{{{}}}", list.join(","))
        }
    }
}

/// `M=<fraction> F=<radius> E={...}`, with `E=all zero-signal` for the zero signal.
pub fn eval(f: &Signal, n: &BigInt) -> String {
    let res = analyze(f, n);
    let mut line = format!(
        "M={} F={} E={}",
        format_compact(&res.maximal_value),
        res.frequency,
        format_extremal(&res.extremal_radii)
    );
    if res.zero_signal {
        line.push_str(" zero-signal");
    }
    line.push('\n');
    line
}

/// `B=<fraction> F=<radius> E={...}`, with `E=all degenerate` when `B = 0`.
pub fn eval_bilinear(f: &Signal, g: &Signal, n: &BigInt) -> String {
    let res = bilinear_analyze(f, g, n);
    let mut line = format!(
        "B={} F={} E={}",
        format_compact(&res.maximal_value),
        res.frequency,
        format_extremal(&res.extremal_radii)
    );
    if res.degenerate {
        line.push_str(" degenerate");
    }
    line.push('\n');
    line
}

/// CSV with header `n,M,F`.
pub fn profile(f: &Signal, from: &BigInt, to: &BigInt) -> CmdResult<String> {
    if from > to {
        return Err(Failure::Usage(format!("--from {from} exceeds --to {to}")));
    }
    let range = IntegerInterval::new(from.clone(), to.clone())?;
    let rows = frequency_profile(f, &range)?;
    let mut out = String::from("n,M,F\n");
    for row in rows {
        let _ = writeln!(out, "{},{},{}", row.n, format_compact(&row.maximal_value), row.frequency);
    }
    Ok(out)
}

/// CSV with header `N,count_K,count_S,density_num,density_den,log_density`.
pub fn levelset(
    f: &Signal,
    mode: LevelMode,
    c: Rational,
    epsilon: Rational,
    grid: &[u64],
) -> CmdResult<String> {
    let theta = match mode {
        LevelMode::ThetaZero => Theta::Zero,
        LevelMode::K | LevelMode::S => Theta::Linear,
    };
    let density_of = match mode {
        LevelMode::S => DensityOf::S,
        LevelMode::K | LevelMode::ThetaZero => DensityOf::K,
    };
    let params = LevelParams::new(c, epsilon, theta)?;
    let census = census_curves(f, &params, grid, density_of)?;
    let mut out = String::from("N,count_K,count_S,density_num,density_den,log_density\n");
    for i in 0..census.n_grid.len() {
        let density = &census.density[i];
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            census.n_grid[i],
            census.counts_k[i],
            census.counts_s[i],
            density.numer(),
            density.denom(),
            census.log_density[i]
        );
    }
    Ok(out)
}

/// Selection report; an unmet one-third bound is an assertion failure.
pub fn covering(intervals: &[IntegerInterval]) -> CmdResult<String> {
    let sel = greedy_disjoint(intervals)?;
    let mut out = String::new();
    let chosen: Vec<String> = sel.chosen.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "chosen={}", chosen.join(","));
    for &i in &sel.chosen {
        let _ = writeln!(out, "interval {i} {}", intervals[i]);
    }
    let _ = writeln!(out, "chosen_length_sum={}", sel.chosen_length_sum);
    let _ = writeln!(out, "union_size={}", sel.union_size);
    let ratio = Rational::new(sel.chosen_length_sum.clone(), sel.union_size.clone());
    let ok = sel.meets_third_bound();
    let _ = writeln!(out, "ratio={} third_bound={}", format_compact(&ratio), if ok { "ok" } else { "violated" });
    if !ok {
        return Err(Failure::Assertion(format!("covering bound violated\n{out}")));
    }
    Ok(out)
}

/// A `freqlab-signal v1` file with the generator parameters as metadata.
pub fn gen(spec: &GeneratorSpec) -> CmdResult<String> {
    let generated = spec.generate()?;
    let mut meta = spec.metadata();
    if generated.approximate {
        meta.push(("approximation".into(), format!("dyadic_floor_{}_bits", spec.precision_bits)));
    }
    Ok(write_signal(&generated.signal, &meta))
}
