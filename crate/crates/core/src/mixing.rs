//! Exact law and mixing analysis of the shuffle that applies one uniform
//! n-cycle and then k uniform random transpositions.
//!
//! Every increment measure is constant on conjugacy classes, so its Fourier
//! transform at each irreducible representation is a scalar and composing
//! steps multiplies scalars. Inverting the transform gives the chain's law
//! on classes as an exact rational vector; total variation against the
//! parity-matched uniform coset, the spectral upper bounds, the derangement
//! lower bound, and all fixed-point moments are then exact arithmetic
//! end to end. Floating point appears in exactly two places: the closed-form
//! asymptotic bounds and the final square root of a spectral bound.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::characters::{
    character_column, character_table, ncycle_character, normalized_transposition_char,
};
use crate::error::Error;
use crate::exactmath::{factorial, int, stirling2, Int, Ratio};
use crate::partitions::{partitions_of, Parity, Partition};
use crate::tensor::{closed_form_valid, defining_multiplicity, oracle_multiplicity, Rep};

/// Largest n accepted by the closed-form spectral bounds (they enumerate all
/// partitions of n but never build a character table).
pub const MAX_SPECTRAL_N: usize = 40;

/// The chain: one uniform n-cycle followed by `k` uniform transpositions
/// (so `k + 1` steps in total). The transposition steps are not lazy; there
/// is no holding probability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainSpec {
    n: usize,
    k: usize,
}

impl ChainSpec {
    pub fn new(n: usize, k: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::BadParameter {
                reason: format!("the chain needs a deck of at least 3 cards, got n = {n}"),
            });
        }
        Ok(ChainSpec { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn transpositions(&self) -> usize {
        self.k
    }

    /// Coset the chain lives on after all steps: the n-cycle contributes
    /// n - 1 transpositions' worth of sign, the rest contribute one each.
    pub fn parity(&self) -> Parity {
        Parity::of_count(self.n - 1 + self.k)
    }
}

/// An exact probability measure on the conjugacy classes of S_n, supported
/// on a single coset of the alternating group. Classes are kept in the
/// order of [`partitions_of`]`(n)`, zero-mass classes included.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassDistribution {
    n: usize,
    parity: Parity,
    classes: Vec<Partition>,
    masses: Vec<Ratio>,
}

impl ClassDistribution {
    fn new_checked(n: usize, parity: Parity, masses: Vec<Ratio>) -> Result<Self, Error> {
        let classes: Vec<Partition> = partitions_of(n).collect();
        debug_assert_eq!(classes.len(), masses.len());
        let mut total = Ratio::zero();
        for (class, mass) in classes.iter().zip(&masses) {
            if mass.is_negative() {
                return Err(Error::NegativeMass {
                    class: class.to_string(),
                });
            }
            if class.parity() != parity && !mass.is_zero() {
                return Err(Error::MassOnWrongCoset {
                    class: class.to_string(),
                });
            }
            total += mass;
        }
        if !total.is_one() {
            return Err(Error::MassSumNotOne {
                total: total.to_string(),
            });
        }
        Ok(ClassDistribution {
            n,
            parity,
            classes,
            masses,
        })
    }

    /// Builds a distribution from explicit class masses; classes not listed
    /// get mass zero. Masses must be nonnegative, sum to one, and sit on
    /// the stated coset.
    pub fn from_masses<'a>(
        n: usize,
        parity: Parity,
        masses: impl IntoIterator<Item = (&'a Partition, Ratio)>,
    ) -> Result<Self, Error> {
        let classes: Vec<Partition> = partitions_of(n).collect();
        let mut dense = vec![Ratio::zero(); classes.len()];
        for (class, mass) in masses {
            let slot = classes.iter().position(|c| c == class).ok_or_else(|| {
                Error::WeightMismatch {
                    context: "class distribution",
                    expected: n,
                    found: class.weight(),
                }
            })?;
            dense[slot] += mass;
        }
        Self::new_checked(n, parity, dense)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Ratio)> {
        self.classes.iter().zip(self.masses.iter())
    }

    pub fn mass(&self, class: &Partition) -> Option<&Ratio> {
        self.classes
            .iter()
            .position(|c| c == class)
            .map(|i| &self.masses[i])
    }
}

fn ratio_pow(base: &Ratio, k: usize) -> Ratio {
    if k == 0 {
        return Ratio::one();
    }
    let k = u32::try_from(k).expect("exponent fits u32");
    Ratio::new(base.numer().pow(k), base.denom().pow(k))
}

/// Parity of the coset holding the chain after one n-cycle and k
/// transpositions.
pub fn chain_parity(n: usize, k: usize) -> Parity {
    Parity::of_count(n - 1 + k)
}

/// Exact law of the chain on conjugacy classes, by Fourier inversion:
/// the transform at the irrep `lambda` is the scalar
/// `(chi_lambda(n-cycle) / dim) * (chi_lambda(transposition) / dim)^k`,
/// and the mass of a class is recovered as
/// `|C| / n! * sum_lambda dim * scalar * chi_lambda(class)`.
pub fn chain_distribution(spec: ChainSpec) -> Result<ClassDistribution, Error> {
    let n = spec.n();
    let k = spec.transpositions();
    let table = character_table(n)?;
    let labels = table.labels();
    let ncycle_col = table
        .index_of(&Partition::single_row(n))
        .expect("the n-cycle class is always present");
    let transposition_col = table
        .index_of(&Partition::transposition_type(n)?)
        .expect("the transposition class is always present");

    // dim * Fourier scalar, one per irrep; zero off hooks
    let mut factors: Vec<Ratio> = Vec::with_capacity(labels.len());
    for row in 0..labels.len() {
        let at_ncycle = table.value_at(row, ncycle_col);
        if at_ncycle.is_zero() {
            factors.push(Ratio::zero());
            continue;
        }
        let at_transposition = table.value_at(row, transposition_col);
        let dim = Int::from(table.dimension_at(row).clone());
        let numer = at_ncycle * at_transposition.pow(k as u32);
        factors.push(Ratio::new(numer, dim.pow(k as u32)));
    }

    let order = Int::from(factorial(n));
    let masses: Vec<Ratio> = labels
        .iter()
        .enumerate()
        .map(|(col, gamma)| {
            let mut element_mass = Ratio::zero();
            for (row, factor) in factors.iter().enumerate() {
                if factor.is_zero() {
                    continue;
                }
                element_mass += factor * Ratio::from(table.value_at(row, col).clone());
            }
            element_mass * Ratio::new(Int::from(gamma.class_size()), order.clone())
        })
        .collect();

    ClassDistribution::new_checked(n, spec.parity(), masses)
}

/// Uniform measure on one coset of the alternating group, expressed on
/// classes: mass `2 |C| / n!` on classes of the requested parity.
pub fn reference_measure(n: usize, parity: Parity) -> Result<ClassDistribution, Error> {
    if n < 3 {
        return Err(Error::BadParameter {
            reason: format!("coset reference measure needs n >= 3, got {n}"),
        });
    }
    let order = Int::from(factorial(n));
    let masses = partitions_of(n)
        .map(|gamma| {
            if gamma.parity() == parity {
                Ratio::new(int(2) * Int::from(gamma.class_size()), order.clone())
            } else {
                Ratio::zero()
            }
        })
        .collect();
    ClassDistribution::new_checked(n, parity, masses)
}

/// Exact total variation distance `(1/2) sum_gamma |p(gamma) - q(gamma)|`.
/// Both measures must live on the same group and the same coset.
pub fn total_variation(p: &ClassDistribution, q: &ClassDistribution) -> Result<Ratio, Error> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch {
            lhs: p.n(),
            rhs: q.n(),
        });
    }
    if p.parity() != q.parity() {
        return Err(Error::ParityMismatch);
    }
    let mut sum = Ratio::zero();
    for ((class_p, mass_p), (class_q, mass_q)) in p.iter().zip(q.iter()) {
        debug_assert_eq!(class_p, class_q);
        sum += (mass_p - mass_q).abs();
    }
    Ok(sum / Ratio::from(int(2)))
}

/// Exact right-hand side of the spectral bound on `4 * TV^2` for this chain:
/// `(1/2) sum d^2 (chi_tau / d)^{2k} (chi_ncycle / d)^2` over irreps other
/// than the trivial and sign ones.
///
/// The n-cycle character kills every non-hook term, so the sum is also
/// evaluated hook-only through the closed-form normalized characters
/// `(n - 1 - 2j) / (n - 1)`; the two routes must agree exactly or an
/// internal error is raised.
pub fn spectral_bound_rhs(spec: ChainSpec) -> Result<Ratio, Error> {
    let n = spec.n();
    let k = spec.transpositions();
    if n > MAX_SPECTRAL_N {
        return Err(Error::Ceiling {
            n,
            max: MAX_SPECTRAL_N,
        });
    }

    let labels: Vec<Partition> = partitions_of(n).collect();
    let ncycle_col = character_column(&Partition::single_row(n))?;
    let transposition_col = character_column(&Partition::transposition_type(n)?)?;

    let trivial = Partition::single_row(n);
    let sign = Partition::single_column(n);
    let two_k = u32::try_from(2 * k).expect("exponent fits u32");

    let mut full = Ratio::zero();
    for (i, lambda) in labels.iter().enumerate() {
        if *lambda == trivial || *lambda == sign {
            continue;
        }
        let at_ncycle = &ncycle_col[i];
        if at_ncycle.is_zero() {
            continue; // contributes exactly zero either way
        }
        let dim = Int::from(lambda.dimension());
        let numer = transposition_col[i].pow(two_k) * at_ncycle * at_ncycle;
        full += Ratio::new(numer, dim.pow(two_k));
    }

    let mut hooks_only = Ratio::zero();
    for lambda in &labels {
        if let Some(j) = lambda.proper_hook_height() {
            let base = Ratio::new(
                int(n as i64 - 1 - 2 * j as i64),
                int(n as i64 - 1),
            );
            hooks_only += ratio_pow(&base, 2 * k);
        }
    }

    if full != hooks_only {
        return Err(Error::HookSumMismatch);
    }
    Ok(full / Ratio::from(int(2)))
}

/// Spectral upper bound on the total variation distance itself:
/// `sqrt(rhs / 4)` with [`spectral_bound_rhs`] evaluated exactly and the
/// square root taken only at this reporting boundary.
pub fn spectral_upper_bound(spec: ChainSpec) -> Result<f64, Error> {
    let rhs = spectral_bound_rhs(spec)?;
    Ok((rhs.to_f64().expect("bound fits f64") / 4.0).sqrt())
}

/// Classic spectral bound for the lazy random-transposition walk started at
/// the identity, on TV scale: `sqrt(rhs / 4)` where
/// `rhs = sum d^2 (1/n + (n-1) chi(tau) / (n d))^{2k}` over nontrivial
/// irreps. Exact inside, square root at the boundary.
pub fn lazy_transposition_bound(n: usize, k: usize) -> Result<f64, Error> {
    if n < 3 {
        return Err(Error::BadParameter {
            reason: format!("the transposition walk bound needs n >= 3, got {n}"),
        });
    }
    if n > MAX_SPECTRAL_N {
        return Err(Error::Ceiling {
            n,
            max: MAX_SPECTRAL_N,
        });
    }
    let n_int = int(n as i64);
    let mut rhs = Ratio::zero();
    for lambda in partitions_of(n) {
        if lambda == Partition::single_row(n) {
            continue;
        }
        let normalized = normalized_transposition_char(&lambda)?;
        let eigenvalue = (Ratio::one() + Ratio::from(n_int.clone() - 1) * normalized)
            / Ratio::from(n_int.clone());
        let dim = Ratio::from(Int::from(lambda.dimension()));
        rhs += &dim * &dim * ratio_pow(&eigenvalue, 2 * k);
    }
    Ok((rhs.to_f64().expect("bound fits f64") / 4.0).sqrt())
}

/// Closed-form asymptotic sandwich for the chain run with `k = c n`
/// transpositions: lower `e^{-2c} / e`, upper `e^{-2c} / (2 sqrt(1 - e^{-4c}))`.
pub fn asymptotic_bounds(c: f64) -> Result<(f64, f64), Error> {
    if !c.is_finite() || c <= 0.0 {
        return Err(Error::BadParameter {
            reason: format!("asymptotic bounds need c > 0, got {c}"),
        });
    }
    let lower = (-2.0 * c).exp() / std::f64::consts::E;
    let upper = (-2.0 * c).exp() / (2.0 * (1.0 - (-4.0 * c).exp()).sqrt());
    Ok((lower, upper))
}

/// Total mass the distribution puts on fixed-point-free classes.
pub fn fixed_point_free_mass(d: &ClassDistribution) -> Ratio {
    let mut sum = Ratio::zero();
    for (class, mass) in d.iter() {
        if class.fixed_points() == 0 {
            sum += mass;
        }
    }
    sum
}

/// Exact lower bound on the total variation distance: the derangement-set
/// gap `|mu(A) - U(A)|` with `A` the fixed-point-free permutations.
pub fn finite_lower_bound(spec: ChainSpec) -> Result<Ratio, Error> {
    let chain = chain_distribution(spec)?;
    let reference = reference_measure(spec.n(), spec.parity())?;
    Ok((fixed_point_free_mass(&chain) - fixed_point_free_mass(&reference)).abs())
}

/// Exact r-th moment of the fixed-point count under the chain's law, summed
/// through the tensor decomposition: `sum_lambda a_{lambda,r} * tr(mu_hat)`,
/// where only hook shapes survive the n-cycle transform. Closed-form
/// multiplicities are used on their proven range and the character oracle
/// beyond it.
pub fn moment_via_decomposition(spec: ChainSpec, r: usize) -> Result<Ratio, Error> {
    if r == 0 {
        return Err(Error::BadParameter {
            reason: "moment order must be at least 1".into(),
        });
    }
    let n = spec.n();
    let k = spec.transpositions();
    let mut total = Ratio::zero();
    for lambda in partitions_of(n) {
        let at_ncycle = ncycle_character(&lambda);
        if at_ncycle == 0 {
            continue;
        }
        let multiplicity = if closed_form_valid(&lambda, r) {
            defining_multiplicity(&lambda, r)?
        } else {
            oracle_multiplicity(&lambda, r, Rep::Defining)?
        };
        if multiplicity.is_zero() {
            continue;
        }
        let scalar = ratio_pow(&normalized_transposition_char(&lambda)?, k);
        let coeff = Int::from(multiplicity) * int(at_ncycle as i64);
        total += Ratio::from(coeff) * scalar;
    }
    Ok(total)
}

/// Oracle for the moments: direct class summation
/// `sum_gamma mass(gamma) * fixed_points(gamma)^r` against the exact law.
pub fn moment_direct(spec: ChainSpec, r: usize) -> Result<Ratio, Error> {
    let chain = chain_distribution(spec)?;
    let mut total = Ratio::zero();
    for (class, mass) in chain.iter() {
        let fix = int(class.fixed_points() as i64).pow(r as u32);
        total += mass * Ratio::from(fix);
    }
    Ok(total)
}

/// r-th moment of a Poisson(nu) variable, `sum_{i=1}^{r} S(r, i) nu^i`
/// (the zeroth moment is 1).
pub fn poisson_moment(nu: f64, r: usize) -> f64 {
    debug_assert!(nu >= 0.0);
    if r == 0 {
        return 1.0;
    }
    (1..=r)
        .map(|i| stirling2(r, i).to_f64().expect("small Stirling number") * nu.powi(i as i32))
        .sum()
}
