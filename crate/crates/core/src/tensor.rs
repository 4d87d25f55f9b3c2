//! Multiplicities of irreducible representations inside tensor powers of the
//! defining (permutation) representation and of the standard representation
//! of S_n.
//!
//! Two independent routes are kept side by side on purpose:
//!
//! * closed forms built from binomials and Stirling numbers, valid for
//!   `1 <= r <= n - lambda_2`;
//! * a character inner-product oracle, `(1/n!) sum_gamma |C_gamma| *
//!   phi(gamma)^r * chi^lambda(gamma)`, where `phi` counts fixed points
//!   (defining) or fixed points minus one (standard).
//!
//! Outside its proven validity range the closed form is never used silently:
//! [`decompose`] switches to the oracle and records which route priced each
//! entry. [`extrapolation_divergences`] reports where the extrapolated closed
//! form would have been wrong.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::exactmath::{binomial, factorial, int, stirling2, Int, Natural};
use crate::characters::character_table;
use crate::partitions::{partitions_of, Partition};

/// Which representation is being raised to a tensor power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rep {
    /// The n-dimensional permutation representation.
    Defining,
    /// Its (n-1)-dimensional irreducible complement of the trivial one.
    Standard,
}

impl Rep {
    /// Character value of this representation at a class, as a function of
    /// the class's fixed-point count.
    fn character(self, gamma: &Partition) -> Int {
        match self {
            Rep::Defining => int(gamma.fixed_points() as i64),
            Rep::Standard => int(gamma.fixed_points() as i64 - 1),
        }
    }

    /// Dimension of the representation inside S_n.
    fn dimension(self, n: usize) -> u64 {
        match self {
            Rep::Defining => n as u64,
            Rep::Standard => n as u64 - 1,
        }
    }
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rep::Defining => write!(f, "defining"),
            Rep::Standard => write!(f, "standard"),
        }
    }
}

impl FromStr for Rep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "defining" => Ok(Rep::Defining),
            "standard" => Ok(Rep::Standard),
            other => Err(Error::BadParameter {
                reason: format!("unknown representation `{other}` (want defining|standard)"),
            }),
        }
    }
}

/// How an entry of a [`DecompositionTable`] was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::ClosedForm => write!(f, "closed_form"),
            Method::Oracle => write!(f, "oracle"),
        }
    }
}

/// One row of a decomposition table.
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub label: Partition,
    pub multiplicity: Natural,
    pub method: Method,
    pub dimension: Natural,
}

/// Full decomposition of a tensor power into irreducibles, one entry per
/// partition of n (zero multiplicities included so dimension-sum checks and
/// table diffs line up row for row).
#[derive(Debug, Clone)]
pub struct DecompositionTable {
    n: usize,
    r: usize,
    rep: Rep,
    entries: Vec<TableEntry>,
}

impl DecompositionTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn power(&self) -> usize {
        self.r
    }

    pub fn rep(&self) -> Rep {
        self.rep
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    /// `sum_lambda multiplicity * dim`, which must equal `dim(rep)^r`.
    pub fn dimension_sum(&self) -> Natural {
        self.entries
            .iter()
            .map(|e| e.multiplicity.clone() * &e.dimension)
            .sum()
    }
}

/// Whether the closed forms are proven for this shape and power:
/// `1 <= r <= n - lambda_2` (the second part is 0 for one-row shapes).
pub fn closed_form_valid(lambda: &Partition, r: usize) -> bool {
    r >= 1 && r + lambda.part(1) <= lambda.weight()
}

fn check_range(lambda: &Partition, r: usize) -> Result<(), Error> {
    let n = lambda.weight();
    if n == 0 {
        return Err(Error::BadParameter {
            reason: "multiplicities need a nonempty shape".into(),
        });
    }
    if !closed_form_valid(lambda, r) {
        return Err(Error::ValidityRange {
            r,
            max_r: n - lambda.part(1),
        });
    }
    Ok(())
}

/// `sum_{i=depth}^{r} C(i, depth) * S(r, i)` -- the inner sum shared by both
/// closed forms; `depth` is the weight of the truncated shape.
fn stirling_binomial_sum(depth: usize, r: usize) -> Natural {
    (depth..=r)
        .map(|i| binomial(i as u64, depth as u64) * stirling2(r, i))
        .sum()
}

/// Multiplicity of the irreducible labeled `lambda` in the r-th tensor power
/// of the defining representation, by the closed form
/// `f^{trunc} * sum_i C(i, |trunc|) S(r, i)`.
///
/// Errors with [`Error::ValidityRange`] when `r > n - lambda_2`; use
/// [`oracle_multiplicity`] there.
pub fn defining_multiplicity(lambda: &Partition, r: usize) -> Result<Natural, Error> {
    check_range(lambda, r)?;
    let trunc = lambda.truncated();
    Ok(trunc.dimension() * stirling_binomial_sum(trunc.weight(), r))
}

/// Multiplicity of `lambda` in the r-th tensor power of the standard
/// representation: the alternating binomial transform of the defining-power
/// sums. Evaluated in signed exact arithmetic; a negative outcome is
/// impossible mathematically and reported as an internal error.
pub fn standard_multiplicity(lambda: &Partition, r: usize) -> Result<Natural, Error> {
    check_range(lambda, r)?;
    let trunc = lambda.truncated();
    let depth = trunc.weight();
    let mut signed_sum = Int::zero();
    for s in depth..=r {
        let term = Int::from(binomial(r as u64, s as u64) * stirling_binomial_sum(depth, s));
        if (r - s).is_multiple_of(2) {
            signed_sum += term;
        } else {
            signed_sum -= term;
        }
    }
    if signed_sum.is_negative() {
        return Err(Error::NegativeMultiplicity {
            context: "alternating sum for a standard tensor power",
        });
    }
    Ok(trunc.dimension() * signed_sum.magnitude())
}

/// Independent verification route: multiplicity as the character inner
/// product `(1/n!) sum_gamma |C_gamma| phi(gamma)^r chi^lambda(gamma)`.
///
/// The division by n! must be exact and the result nonnegative; anything
/// else signals a character-table bug and is reported as such.
pub fn oracle_multiplicity(lambda: &Partition, r: usize, rep: Rep) -> Result<Natural, Error> {
    let n = lambda.weight();
    let table = character_table(n)?;
    let row = table.index_of(lambda).ok_or(Error::WeightMismatch {
        context: "oracle multiplicity",
        expected: n,
        found: lambda.weight(),
    })?;
    let mut sum = Int::zero();
    for (col, gamma) in table.labels().iter().enumerate() {
        let phi = rep.character(gamma);
        sum += Int::from(gamma.class_size()) * phi.pow(r as u32) * table.value_at(row, col);
    }
    let order = Int::from(factorial(n));
    let (quot, rem) = num_integer::Integer::div_rem(&sum, &order);
    if !rem.is_zero() {
        return Err(Error::InexactDivision {
            context: "character inner product over n!",
        });
    }
    if quot.is_negative() {
        return Err(Error::NegativeMultiplicity {
            context: "character inner product",
        });
    }
    Ok(quot.magnitude().clone())
}

/// Decomposition of the full r-th tensor power: closed form wherever it is
/// proven, oracle elsewhere, with the route recorded per entry. The table's
/// dimension sum is verified against `dim(rep)^r` before it is returned.
pub fn decompose(n: usize, r: usize, rep: Rep) -> Result<DecompositionTable, Error> {
    if n < 3 || r < 1 {
        return Err(Error::BadParameter {
            reason: format!("decomposition wants n >= 3 and r >= 1, got n = {n}, r = {r}"),
        });
    }
    let mut entries = Vec::new();
    for lambda in partitions_of(n) {
        let (multiplicity, method) = if closed_form_valid(&lambda, r) {
            let m = match rep {
                Rep::Defining => defining_multiplicity(&lambda, r)?,
                Rep::Standard => standard_multiplicity(&lambda, r)?,
            };
            (m, Method::ClosedForm)
        } else {
            (oracle_multiplicity(&lambda, r, rep)?, Method::Oracle)
        };
        let dimension = lambda.dimension();
        entries.push(TableEntry {
            label: lambda,
            multiplicity,
            method,
            dimension,
        });
    }
    let table = DecompositionTable { n, r, rep, entries };
    let expected = crate::exactmath::nat(rep.dimension(n)).pow(r as u32);
    let got = table.dimension_sum();
    if got != expected {
        return Err(Error::DimensionSumMismatch {
            expected: expected.to_string(),
            got: got.to_string(),
        });
    }
    Ok(table)
}

/// A disagreement between the extrapolated closed form and the oracle.
#[derive(Debug, Clone)]
pub struct Divergence {
    pub label: Partition,
    pub r: usize,
    pub rep: Rep,
    pub closed_form: Natural,
    pub oracle: Natural,
}

/// Diagnostic sweep: evaluates the closed forms *outside* their proven range
/// `r <= n - lambda_2` (up to `r_max`) and reports every (shape, power) where
/// extrapolation disagrees with the oracle. Standard-representation closed
/// forms that go negative when extrapolated are reported with the signed sum
/// clamped out, i.e. they always diverge.
pub fn extrapolation_divergences(n: usize, r_max: usize) -> Result<Vec<Divergence>, Error> {
    let mut out = Vec::new();
    for lambda in partitions_of(n) {
        let max_valid = n - lambda.part(1);
        for r in (max_valid + 1)..=r_max {
            for rep in [Rep::Defining, Rep::Standard] {
                let trunc = lambda.truncated();
                let depth = trunc.weight();
                let extrapolated = match rep {
                    Rep::Defining => Some(trunc.dimension() * stirling_binomial_sum(depth, r)),
                    Rep::Standard => {
                        let mut signed = Int::zero();
                        for s in depth..=r {
                            let term = Int::from(
                                binomial(r as u64, s as u64) * stirling_binomial_sum(depth, s),
                            );
                            if (r - s) % 2 == 0 {
                                signed += term;
                            } else {
                                signed -= term;
                            }
                        }
                        if signed.is_negative() {
                            None
                        } else {
                            Some(trunc.dimension() * signed.magnitude())
                        }
                    }
                };
                let oracle = oracle_multiplicity(&lambda, r, rep)?;
                if extrapolated.as_ref() != Some(&oracle) {
                    out.push(Divergence {
                        label: lambda.clone(),
                        r,
                        rep,
                        closed_form: extrapolated.unwrap_or_default(),
                        oracle,
                    });
                }
            }
        }
    }
    Ok(out)
}
