//! `cyclemix`: exact decomposition tables, symmetric-group character
//! tables, and mixing analysis for the one-n-cycle-then-random-transpositions
//! shuffle, as CSV or JSON.
//!
//! Library-level parallelism (the simulator) is controlled by the
//! `RAYON_NUM_THREADS` environment variable and defaults to all available
//! cores; results do not depend on the thread count.

mod render;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclemix::characters::character_table;
use cyclemix::error::Error;
use cyclemix::exactmath::Ratio;
use cyclemix::mixing::{
    asymptotic_bounds, chain_distribution, finite_lower_bound, fixed_point_free_mass,
    moment_via_decomposition, poisson_moment, reference_measure, spectral_upper_bound,
    total_variation, ChainSpec,
};
use cyclemix::partitions::partitions_of;
use cyclemix::simulate::run_chain;
use cyclemix::tensor::{decompose, Method, Rep};

use report::{float_value, rational_value, Report};

#[derive(Parser)]
#[command(
    name = "cyclemix",
    version,
    about = "Exact tensor-power decompositions, character tables, and mixing analysis for the n-cycle-then-transpositions shuffle",
    after_help = "Simulation thread count: RAYON_NUM_THREADS (default: all available cores; results never depend on it)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write the report to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Largest n for which exact chain laws and total variation are computed
    #[arg(long, global = true, default_value_t = 14, value_name = "N")]
    exact_ceiling: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    Defining,
    Standard,
}

impl From<RepArg> for Rep {
    fn from(value: RepArg) -> Rep {
        match value {
            RepArg::Defining => Rep::Defining,
            RepArg::Standard => Rep::Standard,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a tensor power of the defining or standard representation
    Decompose {
        /// Symmetric group degree
        #[arg(long)]
        n: usize,
        /// Tensor power
        #[arg(long)]
        r: usize,
        /// Representation to raise to the power
        #[arg(long, value_enum)]
        rep: RepArg,
    },
    /// Emit the full exact character table of S_n
    Chartab {
        #[arg(long)]
        n: usize,
    },
    /// Exact law of the chain after one n-cycle and k transpositions,
    /// with total variation and bounds
    Chain {
        #[arg(long)]
        n: usize,
        /// Number of transposition steps after the initial n-cycle
        #[arg(long)]
        k: usize,
    },
    /// Bounds table across deck sizes at k = round(c * n)
    Bounds {
        /// Transposition steps per card
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long)]
        nmin: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
    },
    /// Exact fixed-point moments of the chain against Poisson moments
    Moments {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Largest moment order
        #[arg(long)]
        rmax: usize,
    },
    /// Seeded Monte Carlo simulation of the chain
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let report = match cli.command {
        Command::Decompose { n, r, rep } => decompose_report(n, r, rep.into())?,
        Command::Chartab { n } => chartab_report(n)?,
        Command::Chain { n, k } => chain_report(n, k, cli.exact_ceiling)?,
        Command::Bounds { c, nmin, nmax, step } => {
            bounds_report(c, nmin, nmax, step, cli.exact_ceiling)?
        }
        Command::Moments { n, k, rmax } => moments_report(n, k, rmax, cli.exact_ceiling)?,
        Command::Simulate { n, k, trials, seed } => {
            simulate_report(n, k, trials, seed, cli.exact_ceiling)?
        }
    };

    for warning in &report.warnings {
        eprintln!("warning: {warning}");
    }
    let text = match cli.format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| Error::BadParameter {
            reason: format!("cannot write {}: {e}", path.display()),
        })?,
        None => print!("{text}"),
    }
    Ok(())
}

fn decompose_report(n: usize, r: usize, rep: Rep) -> Result<Report, Error> {
    let table = decompose(n, r, rep)?;
    let mut report = Report::new(
        "decompose",
        &["lambda", "multiplicity", "method", "dim", "mult_times_dim"],
    );
    report.parameter("n", json!(n));
    report.parameter("r", json!(r));
    report.parameter("rep", json!(rep.to_string()));

    let mut oracle_entries = 0usize;
    for entry in table.entries() {
        let product = entry.multiplicity.clone() * &entry.dimension;
        if entry.method == Method::Oracle {
            oracle_entries += 1;
        }
        report.csv_rows.push(vec![
            entry.label.to_string(),
            entry.multiplicity.to_string(),
            entry.method.to_string(),
            entry.dimension.to_string(),
            product.to_string(),
        ]);
        report.json_rows.push(json!({
            "lambda": entry.label.to_string(),
            "multiplicity": entry.multiplicity.to_string(),
            "method": entry.method.to_string(),
            "dim": entry.dimension.to_string(),
            "mult_times_dim": product.to_string(),
        }));
    }
    let total = table.dimension_sum();
    report.summary("dimension_sum", total.to_string(), json!(total.to_string()));
    if oracle_entries > 0 {
        report.warn(format!(
            "closed form out of range for {oracle_entries} entries; character oracle used there"
        ));
    }
    Ok(report)
}

fn chartab_report(n: usize) -> Result<Report, Error> {
    let table = character_table(n)?;
    let mut report = Report::new("chartab", &["lambda", "gamma", "chi", "class_size", "dim"]);
    report.parameter("n", json!(n));
    let labels = table.labels();
    for (row, lambda) in labels.iter().enumerate() {
        for (col, gamma) in labels.iter().enumerate() {
            let chi = table.value_at(row, col);
            report.csv_rows.push(vec![
                lambda.to_string(),
                gamma.to_string(),
                chi.to_string(),
                table.class_size_at(col).to_string(),
                table.dimension_at(row).to_string(),
            ]);
            report.json_rows.push(json!({
                "lambda": lambda.to_string(),
                "gamma": gamma.to_string(),
                "chi": chi.to_string(),
                "class_size": table.class_size_at(col).to_string(),
                "dim": table.dimension_at(row).to_string(),
            }));
        }
    }
    Ok(report)
}

fn require_exact(n: usize, ceiling: usize) -> Result<(), Error> {
    if n > ceiling {
        return Err(Error::BadParameter {
            reason: format!(
                "n = {n} is past the exact ceiling {ceiling} (raise --exact-ceiling or use `simulate`)"
            ),
        });
    }
    Ok(())
}

fn chain_report(n: usize, k: usize, ceiling: usize) -> Result<Report, Error> {
    require_exact(n, ceiling)?;
    let spec = ChainSpec::new(n, k)?;
    let law = chain_distribution(spec)?;
    let reference = reference_measure(n, spec.parity())?;
    let tv = total_variation(&law, &reference)?;
    let lower = finite_lower_bound(spec)?;
    let upper = spectral_upper_bound(spec)?;

    let mut report = Report::new("chain", &["gamma", "mass_num", "mass_den", "fixed_points"]);
    report.parameter("n", json!(n));
    report.parameter("k", json!(k));
    for (class, mass) in law.iter() {
        report.csv_rows.push(vec![
            class.to_string(),
            mass.numer().to_string(),
            mass.denom().to_string(),
            class.fixed_points().to_string(),
        ]);
        report.json_rows.push(json!({
            "gamma": class.to_string(),
            "mass": rational_value(mass),
            "fixed_points": class.fixed_points(),
        }));
    }
    report.summary(
        "parity",
        spec.parity().to_string(),
        json!(spec.parity().to_string()),
    );
    report.summary_rational("tv_exact", &tv);
    report.summary_rational("lower_bound", &lower);
    report.summary(
        "ds_bound",
        render::decimal12_f64(upper),
        float_value(upper),
    );
    report.summary_rational("derangement_mass", &fixed_point_free_mass(&law));
    Ok(report)
}

fn bounds_report(
    c: f64,
    nmin: usize,
    nmax: usize,
    step: usize,
    ceiling: usize,
) -> Result<Report, Error> {
    if step == 0 {
        return Err(Error::BadParameter {
            reason: "step must be at least 1".into(),
        });
    }
    if nmin < 3 || nmin > nmax {
        return Err(Error::BadParameter {
            reason: format!("need 3 <= nmin <= nmax, got nmin = {nmin}, nmax = {nmax}"),
        });
    }
    let (asymptotic_lower, asymptotic_upper) = asymptotic_bounds(c)?;

    let mut report = Report::new(
        "bounds",
        &[
            "n",
            "k",
            "tv_exact",
            "lower_bound",
            "ds_bound",
            "asymptotic_lower",
            "asymptotic_upper",
        ],
    );
    report.parameter("c", json!(c));
    report.parameter("nmin", json!(nmin));
    report.parameter("nmax", json!(nmax));
    report.parameter("step", json!(step));

    let mut skipped_exact = false;
    let mut n = nmin;
    while n <= nmax {
        let k = (c * n as f64).round() as usize;
        let spec = ChainSpec::new(n, k)?;
        let ds = spectral_upper_bound(spec)?;
        let exact: Option<(Ratio, Ratio)> = if n <= ceiling {
            let law = chain_distribution(spec)?;
            let reference = reference_measure(n, spec.parity())?;
            Some((
                total_variation(&law, &reference)?,
                finite_lower_bound(spec)?,
            ))
        } else {
            skipped_exact = true;
            None
        };
        let (tv_csv, lower_csv, tv_json, lower_json) = match &exact {
            Some((tv, lower)) => (
                render::decimal12(tv),
                render::decimal12(lower),
                rational_value(tv),
                rational_value(lower),
            ),
            None => (String::new(), String::new(), Value::Null, Value::Null),
        };
        report.csv_rows.push(vec![
            n.to_string(),
            k.to_string(),
            tv_csv,
            lower_csv,
            render::decimal12_f64(ds),
            render::decimal12_f64(asymptotic_lower),
            render::decimal12_f64(asymptotic_upper),
        ]);
        report.json_rows.push(json!({
            "n": n,
            "k": k,
            "tv_exact": tv_json,
            "lower_bound": lower_json,
            "ds_bound": float_value(ds),
            "asymptotic_lower": float_value(asymptotic_lower),
            "asymptotic_upper": float_value(asymptotic_upper),
        }));
        n += step;
    }
    if skipped_exact {
        report.warn(format!(
            "exact tv and lower bound omitted past the exact ceiling {ceiling}"
        ));
    }
    report.warn(
        "asymptotic_lower/asymptotic_upper are limit values; finite-n rows approach them only in trend",
    );
    Ok(report)
}

fn moments_report(n: usize, k: usize, rmax: usize, ceiling: usize) -> Result<Report, Error> {
    if rmax < 1 {
        return Err(Error::BadParameter {
            reason: "rmax must be at least 1".into(),
        });
    }
    require_exact(n, ceiling)?;
    let spec = ChainSpec::new(n, k)?;
    let nu = 1.0 - (-2.0 * k as f64 / n as f64).exp();

    let mut report = Report::new("moments", &["r", "moment_num", "moment_den", "poisson_moment"]);
    report.parameter("n", json!(n));
    report.parameter("k", json!(k));
    report.parameter("rmax", json!(rmax));
    report.summary("poisson_rate", render::decimal12_f64(nu), float_value(nu));

    for r in 1..=rmax {
        let moment = moment_via_decomposition(spec, r)?;
        let poisson = poisson_moment(nu, r);
        report.csv_rows.push(vec![
            r.to_string(),
            moment.numer().to_string(),
            moment.denom().to_string(),
            render::decimal12_f64(poisson),
        ]);
        report.json_rows.push(json!({
            "r": r,
            "moment": rational_value(&moment),
            "poisson_moment": float_value(poisson),
        }));
    }
    Ok(report)
}

fn simulate_report(
    n: usize,
    k: usize,
    trials: u64,
    seed: u64,
    ceiling: usize,
) -> Result<Report, Error> {
    let spec = ChainSpec::new(n, k)?;
    let outcome = run_chain(spec, trials, seed)?;
    let exact = if n <= ceiling {
        chain_distribution(spec).ok()
    } else {
        None
    };

    let mut report = Report::new("simulate", &["gamma", "count", "frequency", "exact_mass"]);
    report.parameter("n", json!(n));
    report.parameter("k", json!(k));
    report.parameter("trials", json!(trials));
    report.parameter("seed", json!(seed));

    for class in partitions_of(n) {
        let count = outcome.class_counts.get(&class).copied().unwrap_or(0);
        if count == 0 && class.parity() != spec.parity() {
            continue; // classes off the chain's coset can never be hit
        }
        let frequency = Ratio::new(
            cyclemix::exactmath::int(count as i64),
            cyclemix::exactmath::int(trials as i64),
        );
        let exact_mass = exact.as_ref().and_then(|law| law.mass(&class));
        report.csv_rows.push(vec![
            class.to_string(),
            count.to_string(),
            render::decimal12(&frequency),
            exact_mass.map(render::decimal12).unwrap_or_default(),
        ]);
        report.json_rows.push(json!({
            "gamma": class.to_string(),
            "count": count,
            "frequency": rational_value(&frequency),
            "exact_mass": exact_mass.map(rational_value).unwrap_or(Value::Null),
        }));
    }
    if exact.is_none() {
        report.warn("exact masses unavailable at this n; column left empty".to_string());
    }
    for (r, moment) in outcome.empirical_moments.iter().enumerate() {
        report.summary(
            &format!("empirical_moment_{}", r + 1),
            render::decimal12_f64(*moment),
            float_value(*moment),
        );
    }
    Ok(report)
}
