//! Arbitrary-precision arithmetic substrate and the combinatorial number
//! sequences the closed-form multiplicities are built from.
//!
//! Everything here is exact: [`Natural`] and [`Int`] are arbitrary-precision
//! integers, [`Ratio`] is a rational kept in lowest terms with a positive
//! denominator. Floating point never enters; conversion to `f64` is left to
//! reporting code.
//!
//! Stirling numbers of the second kind are memoized in a growable triangular
//! table behind a single lock, since the decomposition formulas evaluate many
//! nearby entries. The conventions are `S(0,0) = 1`, `S(r,0) = 0` for
//! `r >= 1`, and `S(r,i) = 0` for `i > r`, so empty truncated shapes reduce
//! the multiplicity sum to a plain Bell sum.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative integer.
pub type Natural = BigUint;

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Exact rational number (lowest terms, positive denominator).
pub type Ratio = num_rational::BigRational;

/// Shorthand for a small `Natural`.
pub fn nat(v: u64) -> Natural {
    Natural::from(v)
}

/// Shorthand for a small `Int`.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Exact rational from small integers. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Ratio {
    Ratio::new(Int::from(num), Int::from(den))
}

/// Exact rational from a nonnegative pair. Panics if `den == 0`.
pub fn ratio_nat(num: Natural, den: Natural) -> Ratio {
    Ratio::new(num.into(), den.into())
}

/// n! as an exact integer.
pub fn factorial(n: usize) -> Natural {
    let mut acc = Natural::one();
    for i in 2..=n {
        acc *= nat(i as u64);
    }
    acc
}

/// Binomial coefficient C(n, k), with C(n, k) = 0 when k > n.
pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 1..=k {
        acc *= nat(n - k + i);
        acc /= nat(i); // always exact: C(n-k+i, i) is an integer
    }
    acc
}

static STIRLING_ROWS: Mutex<Vec<Vec<Natural>>> = Mutex::new(Vec::new());

/// Stirling number of the second kind S(r, i): the number of ways to
/// partition an r-element set into i nonempty blocks.
pub fn stirling2(r: usize, i: usize) -> Natural {
    if i > r {
        return Natural::zero();
    }
    let mut rows = STIRLING_ROWS.lock().unwrap();
    while rows.len() <= r {
        let t = rows.len();
        let row: Vec<Natural> = if t == 0 {
            vec![Natural::one()]
        } else {
            let prev = &rows[t - 1];
            (0..=t)
                .map(|j| {
                    // S(t, j) = j * S(t-1, j) + S(t-1, j-1)
                    let mut v = Natural::zero();
                    if j < t {
                        v += prev[j].clone() * nat(j as u64);
                    }
                    if j >= 1 && j - 1 < t {
                        v += prev[j - 1].clone();
                    }
                    v
                })
                .collect()
        };
        rows.push(row);
    }
    rows[r][i].clone()
}

/// Bell number B_t: the number of set partitions of a t-element set,
/// with B_0 = 1.
pub fn bell(t: usize) -> Natural {
    if t == 0 {
        return Natural::one();
    }
    (1..=t).map(|q| stirling2(t, q)).sum()
}
