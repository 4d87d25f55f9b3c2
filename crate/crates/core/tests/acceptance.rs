//! Acceptance suite: one test per release criterion, each printing a single
//! PASS/FAIL line (visible with `cargo test --test acceptance -- --nocapture`).
//! Exact quantities are compared with `==`; the only tolerances are the ones
//! stated in the criteria themselves.

mod common;

use num_traits::{ToPrimitive, Zero};

use cyclemix::characters::{character_table, mn_character, normalized_transposition_char};
use cyclemix::exactmath::{factorial, int, nat, Int, Natural, Ratio};
use cyclemix::mixing::{
    asymptotic_bounds, chain_distribution, finite_lower_bound, moment_via_decomposition,
    poisson_moment, reference_measure, spectral_bound_rhs, total_variation, ChainSpec,
};
use cyclemix::partitions::{partitions_of, Partition};
use cyclemix::simulate::run_chain;
use cyclemix::tensor::{
    closed_form_valid, defining_multiplicity, oracle_multiplicity, standard_multiplicity, Rep,
};

fn report(name: &str, outcome: Result<(), String>) {
    match outcome {
        Ok(()) => println!("acceptance {name}: PASS"),
        Err(message) => {
            println!("acceptance {name}: FAIL ({message})");
            panic!("acceptance {name} failed: {message}");
        }
    }
}

fn closed_form_sweep(rep: Rep) -> Result<(), String> {
    for n in 3..=8 {
        for lambda in partitions_of(n) {
            let max_r = n - lambda.part(1);
            for r in 1..=max_r {
                debug_assert!(closed_form_valid(&lambda, r));
                let closed = match rep {
                    Rep::Defining => defining_multiplicity(&lambda, r),
                    Rep::Standard => standard_multiplicity(&lambda, r),
                }
                .map_err(|e| e.to_string())?;
                let oracle = oracle_multiplicity(&lambda, r, rep).map_err(|e| e.to_string())?;
                if closed != oracle {
                    return Err(format!(
                        "{rep} multiplicity mismatch at n={n} lambda={lambda} r={r}: closed {closed} vs oracle {oracle}"
                    ));
                }
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_01_defining_closed_form_equals_oracle() {
    report("01 defining closed form vs character oracle", closed_form_sweep(Rep::Defining));
}

#[test]
fn criterion_02_standard_closed_form_equals_oracle() {
    report("02 standard closed form vs character oracle", closed_form_sweep(Rep::Standard));
}

#[test]
fn criterion_03_dimension_sums() {
    let check = || -> Result<(), String> {
        for n in 3..=8usize {
            for r in 1..=6usize {
                for rep in [Rep::Defining, Rep::Standard] {
                    let total: Natural = partitions_of(n)
                        .map(|lambda| {
                            oracle_multiplicity(&lambda, r, rep).map(|m| m * lambda.dimension())
                        })
                        .sum::<Result<Natural, _>>()
                        .map_err(|e| e.to_string())?;
                    let base = match rep {
                        Rep::Defining => n as u64,
                        Rep::Standard => n as u64 - 1,
                    };
                    let expected = nat(base).pow(r as u32);
                    if total != expected {
                        return Err(format!(
                            "oracle-backed {rep} table at n={n} r={r} sums to {total}, want {expected}"
                        ));
                    }
                }
            }
        }
        Ok(())
    };
    report("03 dimension sums over oracle-backed tables", check());
}

#[test]
fn criterion_04_character_engine() {
    let check = || -> Result<(), String> {
        // row orthogonality
        for n in 2..=8usize {
            let table = character_table(n).map_err(|e| e.to_string())?;
            let order = Int::from(factorial(n));
            let labels = table.labels();
            for (i, lambda) in labels.iter().enumerate() {
                for (j, mu) in labels.iter().enumerate() {
                    let mut inner = Int::zero();
                    for (col, _) in labels.iter().enumerate() {
                        inner += Int::from(table.class_size_at(col).clone())
                            * table.value_at(i, col)
                            * table.value_at(j, col);
                    }
                    let expected = if i == j { order.clone() } else { Int::zero() };
                    if inner != expected {
                        return Err(format!(
                            "orthogonality fails at n={n} for rows {lambda}, {mu}: got {inner}"
                        ));
                    }
                }
            }
        }

        // conjugation sign rule
        for n in 2..=8usize {
            let table = character_table(n).map_err(|e| e.to_string())?;
            for lambda in table.labels() {
                let conj = lambda.conjugate();
                for gamma in table.labels() {
                    let lhs = table.value(&conj, gamma).map_err(|e| e.to_string())?;
                    let rhs = table.value(lambda, gamma).map_err(|e| e.to_string())?
                        * int(gamma.sign() as i64);
                    if lhs != &rhs {
                        return Err(format!(
                            "sign rule fails at n={n} lambda={lambda} gamma={gamma}"
                        ));
                    }
                }
            }
        }

        // Frobenius closed form against the rim-hook recursion
        for n in 2..=10usize {
            let transposition = Partition::transposition_type(n).map_err(|e| e.to_string())?;
            for lambda in partitions_of(n) {
                let normalized =
                    normalized_transposition_char(&lambda).map_err(|e| e.to_string())?;
                let recursed =
                    mn_character(&lambda, &transposition).map_err(|e| e.to_string())?;
                let scaled = normalized * Ratio::from(Int::from(lambda.dimension()));
                if scaled != Ratio::from(recursed.clone()) {
                    return Err(format!(
                        "Frobenius form disagrees with recursion at n={n} lambda={lambda}"
                    ));
                }
            }
        }

        // hook values (n - 1 - 2j) / (n - 1)
        for n in 3..=10usize {
            for j in 1..=(n - 1) / 2 {
                let hook = Partition::hook(n, j).map_err(|e| e.to_string())?;
                let got = normalized_transposition_char(&hook).map_err(|e| e.to_string())?;
                let want = Ratio::new(int(n as i64 - 1 - 2 * j as i64), int(n as i64 - 1));
                if got != want {
                    return Err(format!("hook value mismatch at n={n} j={j}: {got} vs {want}"));
                }
            }
        }
        Ok(())
    };
    report(
        "04 character engine (orthogonality, sign rule, transposition forms)",
        check(),
    );
}

#[test]
fn criterion_05_chain_law_matches_group_algebra_convolution() {
    let check = || -> Result<(), String> {
        for n in 3..=7usize {
            for k in 0..=8usize {
                let spec = ChainSpec::new(n, k).unwrap();
                let law = chain_distribution(spec).map_err(|e| e.to_string())?;
                for (class, expected) in common::convolution_class_masses(n, k) {
                    let got = law.mass(&class).expect("all classes present");
                    if got != &expected {
                        return Err(format!(
                            "law mismatch at n={n} k={k} class={class}: {got} vs {expected}"
                        ));
                    }
                }
            }
        }
        Ok(())
    };
    report("05 chain law vs n!-element convolution", check());
}

#[test]
fn criterion_06_sandwich_inequality() {
    let check = || -> Result<(), String> {
        let four = Ratio::from(int(4));
        for n in 4..=10usize {
            for k in 1..=12usize {
                let spec = ChainSpec::new(n, k).unwrap();
                let chain = chain_distribution(spec).map_err(|e| e.to_string())?;
                let reference =
                    reference_measure(n, spec.parity()).map_err(|e| e.to_string())?;
                let tv = total_variation(&chain, &reference).map_err(|e| e.to_string())?;
                let lower = finite_lower_bound(spec).map_err(|e| e.to_string())?;
                if lower > tv {
                    return Err(format!(
                        "lower bound exceeds tv at n={n} k={k}: {lower} > {tv}"
                    ));
                }
                // upper bound compared on the squared scale, exactly
                let rhs = spectral_bound_rhs(spec).map_err(|e| e.to_string())?;
                if &four * &tv * &tv > rhs {
                    return Err(format!(
                        "4 tv^2 exceeds the spectral rhs at n={n} k={k}: tv = {tv}, rhs = {rhs}"
                    ));
                }
            }
        }
        Ok(())
    };
    report("06 sandwich: derangement lower <= tv <= spectral upper", check());
}

#[test]
fn criterion_07_spectral_bound_trend() {
    let check = || -> Result<(), String> {
        let sizes = [8usize, 12, 16, 20];
        for c in [0.5f64, 1.0] {
            let limit = (-4.0 * c).exp() / (1.0 - (-4.0 * c).exp());
            let mut values = Vec::new();
            for &n in &sizes {
                let k = (c * n as f64).round() as usize;
                let rhs = spectral_bound_rhs(ChainSpec::new(n, k).unwrap())
                    .map_err(|e| e.to_string())?;
                values.push(rhs.to_f64().unwrap());
            }
            // monotone approach from below: each step closes the gap
            for window in values.windows(2) {
                if window[1] <= window[0] {
                    return Err(format!("sequence not increasing at c={c}: {values:?}"));
                }
            }
            let mut previous_gap = f64::INFINITY;
            for &v in &values {
                let gap = (limit - v).abs();
                if v >= limit || gap >= previous_gap {
                    return Err(format!(
                        "values must approach the geometric-series limit {limit} from below at c={c}: {values:?}"
                    ));
                }
                previous_gap = gap;
            }
            // trend stabilization at the largest table size: the relative
            // step between the last two entries is under 15%
            let last = values[values.len() - 1];
            let step = (last - values[values.len() - 2]) / last;
            if step >= 0.15 {
                return Err(format!(
                    "final relative step {step:.4} at c={c} is not under 15%: {values:?}"
                ));
            }
        }
        Ok(())
    };
    report("07 spectral bound squared trends to the geometric sum", check());
}

#[test]
fn criterion_08_poisson_moment_trend() {
    let check = || -> Result<(), String> {
        let nu = 1.0 - (-2.0f64).exp();
        for r in 1..=3usize {
            let target = poisson_moment(nu, r);
            let mut previous = f64::INFINITY;
            for n in [6usize, 8, 10, 12] {
                let spec = ChainSpec::new(n, n).unwrap();
                let exact = moment_via_decomposition(spec, r)
                    .map_err(|e| e.to_string())?
                    .to_f64()
                    .unwrap();
                let gap = (exact - target).abs();
                if gap >= previous {
                    return Err(format!(
                        "moment gap must strictly shrink: r={r} n={n} gap={gap} previous={previous}"
                    ));
                }
                previous = gap;
            }
        }
        Ok(())
    };
    report("08 fixed-point moments trend to Poisson(1 - e^-2)", check());
}

#[test]
fn criterion_09_asymptotic_bound_values() {
    let check = || -> Result<(), String> {
        let (lower, upper) = asymptotic_bounds(0.5).map_err(|e| e.to_string())?;
        // independent evaluation of the closed forms e^{-2c}/e and
        // e^{-2c} / (2 sqrt(1 - e^{-4c})) at c = 1/2
        let expected_lower = (-1.0f64).exp() / std::f64::consts::E;
        let expected_upper = (-1.0f64).exp() / (2.0 * (1.0 - (-2.0f64).exp()).sqrt());
        let six_figures = |got: f64, want: f64, name: &str| -> Result<(), String> {
            let relative = ((got - want) / want).abs();
            if relative >= 5e-7 {
                return Err(format!("{name} {got} differs from {want} beyond 6 significant figures"));
            }
            Ok(())
        };
        six_figures(lower, expected_lower, "lower bound")?;
        six_figures(upper, expected_upper, "upper bound")?;
        // the values round to these 6-significant-figure literals
        let rounds_to = |got: f64, literal: f64, name: &str| -> Result<(), String> {
            let half_ulp = 0.5 * 10f64.powi(literal.abs().log10().floor() as i32 - 5);
            if (got - literal).abs() > half_ulp {
                return Err(format!("{name} {got} does not round to {literal}"));
            }
            Ok(())
        };
        rounds_to(lower, 0.135335, "lower bound literal")?;
        rounds_to(upper, 0.197812, "upper bound literal")?;
        Ok(())
    };
    report("09 asymptotic bound values at c = 1/2", check());
}

#[test]
fn criterion_10_monte_carlo_consistency() {
    let check = || -> Result<(), String> {
        let spec = ChainSpec::new(6, 6).unwrap();
        let trials = 100_000u64;
        let exact = chain_distribution(spec).map_err(|e| e.to_string())?;
        let floor = Ratio::new(int(1), int(1000));

        for seed in [1u64, 2, 3] {
            let report_a = run_chain(spec, trials, seed).map_err(|e| e.to_string())?;
            let report_b = run_chain(spec, trials, seed).map_err(|e| e.to_string())?;
            if report_a != report_b {
                return Err(format!("repeated runs differ at seed {seed}"));
            }
            // same work forced through a single-thread pool must be identical
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(1)
                .build()
                .map_err(|e| e.to_string())?;
            let report_serial = pool
                .install(|| run_chain(spec, trials, seed))
                .map_err(|e| e.to_string())?;
            if report_a != report_serial {
                return Err(format!("thread count changed the report at seed {seed}"));
            }

            for (class, mass) in exact.iter() {
                if mass < &floor {
                    continue;
                }
                let p = mass.to_f64().unwrap();
                let standard_error = (p * (1.0 - p) / trials as f64).sqrt();
                let deviation = (report_a.frequency(class) - p).abs();
                if deviation > 5.0 * standard_error {
                    return Err(format!(
                        "seed {seed} class {class}: frequency off by {deviation:.2e} (> 5 se = {:.2e})",
                        5.0 * standard_error
                    ));
                }
            }
        }
        Ok(())
    };
    report("10 Monte Carlo matches the exact law and is reproducible", check());
}
