//! Seeded Monte Carlo simulation of the shuffle chain, for statistical
//! cross-checks of the exact law and for deck sizes past the exact ceiling.
//!
//! Reproducibility contract: reports are a pure function of
//! `(spec, trials, seed)`, independent of thread count and scheduling.
//! The generator is ChaCha8 (rand_chacha 0.3) keyed by the 64-bit seed,
//! with the trajectory index as the per-trajectory stream, so trajectory i
//! draws the same numbers no matter which worker runs it.
//!
//! One trajectory samples the n-cycle as a uniform arrangement of `2..=n`
//! appended to card 1 and read as a cycle (exactly uniform over the (n-1)!
//! n-cycles, no rejection), then applies k uniform unordered transpositions.
//! The transposition steps are not lazy: the identity is never an increment.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::mixing::{ChainSpec, ClassDistribution};
use crate::partitions::Partition;

/// Number of leading moments of the fixed-point count recorded in a report.
pub const REPORTED_MOMENTS: usize = 4;

/// Outcome of a batch of independent chain trajectories.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationReport {
    pub spec: ChainSpec,
    pub trials: u64,
    pub seed: u64,
    /// Final cycle type counts; keys are exactly the observed classes.
    pub class_counts: BTreeMap<Partition, u64>,
    /// Trajectory counts keyed by final fixed-point count.
    pub fixed_point_histogram: BTreeMap<usize, u64>,
    /// Empirical moments of the fixed-point count, orders 1..=REPORTED_MOMENTS.
    pub empirical_moments: Vec<f64>,
}

impl SimulationReport {
    /// Observed frequency of a class.
    pub fn frequency(&self, class: &Partition) -> f64 {
        *self.class_counts.get(class).unwrap_or(&0) as f64 / self.trials as f64
    }
}

/// Final permutation (as the image array `x -> sigma(x)` on `0..n`) of one
/// trajectory. Pure in `(spec, seed, trajectory)`; this is the map
/// [`run_chain`] tallies, exposed so samplers can be audited directly.
pub fn trajectory_permutation(spec: ChainSpec, seed: u64, trajectory: u64) -> Vec<usize> {
    let n = spec.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trajectory);

    // uniform cyclic arrangement: card 0 first, cards 1..n shuffled behind it
    let mut order: Vec<usize> = (0..n).collect();
    for i in (2..n).rev() {
        let j = rng.gen_range(1..=i);
        order.swap(i, j);
    }
    // image[x] = successor of x along the cycle
    let mut image = vec![0usize; n];
    let mut position = vec![0usize; n];
    for i in 0..n {
        image[order[i]] = order[(i + 1) % n];
    }
    for (slot, &v) in image.iter().enumerate() {
        position[v] = slot;
    }

    for _ in 0..spec.transpositions() {
        // uniform unordered pair {a, b}, a != b, applied on the left:
        // swap the slots whose images are a and b
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let slot_a = position[a];
        let slot_b = position[b];
        image.swap(slot_a, slot_b);
        position[a] = slot_b;
        position[b] = slot_a;
    }
    image
}

/// Cycle type of a permutation given as an image array, parts sorted
/// descending.
pub fn cycle_type(image: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; image.len()];
    let mut cycle_lengths = Vec::new();
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = image[x];
            len += 1;
        }
        cycle_lengths.push(len);
    }
    cycle_lengths.sort_unstable_by(|a, b| b.cmp(a));
    cycle_lengths
}

/// Runs `trials` independent trajectories of the chain and tallies final
/// cycle types. Deterministic in `(spec, trials, seed)`; trajectories run
/// in parallel and are merged commutatively.
pub fn run_chain(spec: ChainSpec, trials: u64, seed: u64) -> Result<SimulationReport, Error> {
    if trials == 0 {
        return Err(Error::BadParameter {
            reason: "at least one trial is required".into(),
        });
    }
    let class_counts: BTreeMap<Partition, u64> = (0..trials)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<Vec<usize>, u64>, trajectory| {
            let image = trajectory_permutation(spec, seed, trajectory);
            *acc.entry(cycle_type(&image)).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut left, right| {
            for (key, count) in right {
                *left.entry(key).or_insert(0) += count;
            }
            left
        })
        .into_iter()
        .map(|(parts, count)| {
            let class = Partition::new(parts).expect("cycle lengths are sorted and positive");
            (class, count)
        })
        .collect();

    let mut fixed_point_histogram: BTreeMap<usize, u64> = BTreeMap::new();
    for (class, count) in &class_counts {
        *fixed_point_histogram.entry(class.fixed_points()).or_insert(0) += count;
    }

    let empirical_moments = (1..=REPORTED_MOMENTS)
        .map(|r| {
            fixed_point_histogram
                .iter()
                .map(|(&fix, &count)| count as f64 * (fix as f64).powi(r as i32))
                .sum::<f64>()
                / trials as f64
        })
        .collect();

    Ok(SimulationReport {
        spec,
        trials,
        seed,
        class_counts,
        fixed_point_histogram,
        empirical_moments,
    })
}

/// Total variation distance between the empirical class frequencies and an
/// exact distribution over the same group and coset.
pub fn empirical_tv(report: &SimulationReport, exact: &ClassDistribution) -> Result<f64, Error> {
    if report.spec.n() != exact.n() {
        return Err(Error::SizeMismatch {
            lhs: report.spec.n(),
            rhs: exact.n(),
        });
    }
    if report.spec.parity() != exact.parity() {
        return Err(Error::ParityMismatch);
    }
    let mut sum = 0.0;
    for (class, mass) in exact.iter() {
        let exact_mass = mass.to_f64().expect("probability fits f64");
        sum += (report.frequency(class) - exact_mass).abs();
    }
    Ok(sum / 2.0)
}
