//! Exact irreducible character values for the symmetric group.
//!
//! The general evaluation is the Murnaghan-Nakayama rule: recurse over
//! removable rim hooks whose length is the cycle type's current part, with
//! sign `(-1)^height`. Shapes are carried as beta-sets packed into `u128`
//! bitmasks (first-column hook lengths), which makes rim hook removal a
//! two-bit edit and the hook height a popcount.
//!
//! Two closed forms bypass the recursion entirely: the Frobenius formula for
//! the normalized character at a transposition, and the hook classification
//! for the character at an n-cycle (zero off hooks, `(-1)^height` on them).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exactmath::{int, Int, Natural, Ratio};
use crate::partitions::{partitions_of, Partition};

/// Largest n for which a full character table may be built. Past this the
/// table has hundreds of thousands of entries and hours of build time; the
/// hook-only spectral sums and the simulator remain available.
pub const MAX_TABLE_N: usize = 20;

/// Largest weight representable in the `u128` beta-set encoding used by the
/// rim-hook walk (largest first-column hook length is `2n - 1`).
pub const MAX_SHAPE_N: usize = 64;

/// Beta-set of `shape` padded to `slots` rows: bit `shape[i] + slots - 1 - i`
/// is set for each row i (missing rows contribute bits 0..).
fn beta_mask(shape: &Partition, slots: usize) -> u128 {
    let mut mask = 0u128;
    for i in 0..slots {
        mask |= 1u128 << (shape.part(i) + slots - 1 - i);
    }
    mask
}

/// Inverse of [`beta_mask`]: reads parts off the set bits.
#[cfg(test)]
fn mask_to_parts(mask: u128, slots: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut rank = 0usize; // index among set bits, ascending
    for b in 0..128 {
        if mask >> b & 1 == 1 {
            let part = b - rank;
            if part > 0 {
                parts.push(part);
            }
            rank += 1;
        }
    }
    debug_assert_eq!(rank, slots);
    parts.reverse();
    parts
}

/// Set bits of `mask` strictly between positions `lo` and `hi`.
fn bits_between(mask: u128, lo: usize, hi: usize) -> u32 {
    if hi - lo <= 1 {
        return 0;
    }
    let window = ((1u128 << hi) - 1) & !((1u128 << (lo + 1)) - 1);
    (mask & window).count_ones()
}

/// Exact character of the irreducible representation labeled `lambda` at the
/// conjugacy class with cycle type `gamma`, by the Murnaghan-Nakayama rule.
///
/// Parts of `gamma` are consumed largest-first; partial evaluations are
/// memoized on (remaining shape, remaining cycle-type suffix).
pub fn mn_character(lambda: &Partition, gamma: &Partition) -> Result<Int, Error> {
    let n = lambda.weight();
    if gamma.weight() != n {
        return Err(Error::WeightMismatch {
            context: "character evaluation",
            expected: n,
            found: gamma.weight(),
        });
    }
    if n > MAX_SHAPE_N {
        return Err(Error::Ceiling { n, max: MAX_SHAPE_N });
    }
    if n == 0 {
        return Ok(Int::one());
    }
    let slots = lambda.rows();
    let mut memo: HashMap<(u128, usize), Int> = HashMap::new();
    Ok(mn_recurse(beta_mask(lambda, slots), gamma.parts(), 0, &mut memo))
}

fn mn_recurse(
    mask: u128,
    parts: &[usize],
    depth: usize,
    memo: &mut HashMap<(u128, usize), Int>,
) -> Int {
    if depth == parts.len() {
        // weights stay matched along the recursion, so the shape is empty here
        return Int::one();
    }
    if let Some(v) = memo.get(&(mask, depth)) {
        return v.clone();
    }
    let m = parts[depth];
    let mut total = Int::zero();
    for b in m..128 {
        if mask >> b & 1 == 1 && mask >> (b - m) & 1 == 0 {
            let next = mask ^ (1u128 << b) ^ (1u128 << (b - m));
            let sub = mn_recurse(next, parts, depth + 1, memo);
            if bits_between(mask, b - m, b).is_multiple_of(2) {
                total += sub;
            } else {
                total -= sub;
            }
        }
    }
    memo.insert((mask, depth), total.clone());
    total
}

/// Characters of every irreducible representation of S_n at the single class
/// `gamma`, in the order of [`partitions_of`]`(n)`.
///
/// Computed bottom-up: starting from the empty shape, rim hooks of each part
/// length are grown in reverse consumption order, accumulating signs. One
/// sweep prices the whole column, which is what the Fourier inversion and
/// the spectral sums want.
pub fn character_column(gamma: &Partition) -> Result<Vec<Int>, Error> {
    let n = gamma.weight();
    if n > MAX_SHAPE_N {
        return Err(Error::Ceiling { n, max: MAX_SHAPE_N });
    }
    let slots = n.max(1);
    let empty = beta_mask(&Partition::empty(), slots);
    let mut level: HashMap<u128, Int> = HashMap::from([(empty, Int::one())]);
    for &m in gamma.parts().iter().rev() {
        let mut next: HashMap<u128, Int> = HashMap::with_capacity(level.len() * 2);
        for (mask, coeff) in &level {
            for b in 0..(128 - m) {
                if mask >> b & 1 == 1 && mask >> (b + m) & 1 == 0 {
                    let grown = mask ^ (1u128 << b) ^ (1u128 << (b + m));
                    let entry = next.entry(grown).or_insert_with(Int::zero);
                    if bits_between(*mask, b, b + m).is_multiple_of(2) {
                        *entry += coeff;
                    } else {
                        *entry -= coeff;
                    }
                }
            }
        }
        level = next;
    }
    Ok(partitions_of(n)
        .map(|shape| {
            level
                .get(&beta_mask(&shape, slots))
                .cloned()
                .unwrap_or_else(Int::zero)
        })
        .collect())
}

/// Complete exact character table of S_n: all values, dimensions, and class
/// sizes, with rows and columns in the order of [`partitions_of`]`(n)`.
pub struct CharacterTable {
    n: usize,
    labels: Vec<Partition>,
    index: HashMap<Partition, usize>,
    dims: Vec<Natural>,
    class_sizes: Vec<Natural>,
    /// values[row][col] = character of irrep `labels[row]` at class `labels[col]`
    values: Vec<Vec<Int>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row/column labels in enumeration order.
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn dimension_at(&self, row: usize) -> &Natural {
        &self.dims[row]
    }

    pub fn class_size_at(&self, col: usize) -> &Natural {
        &self.class_sizes[col]
    }

    pub fn value_at(&self, row: usize, col: usize) -> &Int {
        &self.values[row][col]
    }

    /// Character of irrep `lambda` at class `gamma`.
    pub fn value(&self, lambda: &Partition, gamma: &Partition) -> Result<&Int, Error> {
        let row = self.index_of(lambda).ok_or(Error::WeightMismatch {
            context: "character table row",
            expected: self.n,
            found: lambda.weight(),
        })?;
        let col = self.index_of(gamma).ok_or(Error::WeightMismatch {
            context: "character table column",
            expected: self.n,
            found: gamma.weight(),
        })?;
        Ok(&self.values[row][col])
    }
}

static TABLE_CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();

/// Builds (or fetches from the process-wide cache) the character table of
/// S_n. Errors above [`MAX_TABLE_N`].
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>, Error> {
    if n == 0 || n > MAX_TABLE_N {
        return Err(Error::Ceiling { n, max: MAX_TABLE_N });
    }
    let cache = TABLE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(build_table(n)?);
    cache.lock().unwrap().insert(n, Arc::clone(&table));
    Ok(table)
}

fn build_table(n: usize) -> Result<CharacterTable, Error> {
    let labels: Vec<Partition> = partitions_of(n).collect();
    let index: HashMap<Partition, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let dims: Vec<Natural> = labels.iter().map(|p| p.dimension()).collect();
    let class_sizes: Vec<Natural> = labels.iter().map(|p| p.class_size()).collect();

    let mut values = vec![Vec::new(); labels.len()];
    for (col, gamma) in labels.iter().enumerate() {
        let column = character_column(gamma)?;
        for (row, v) in column.into_iter().enumerate() {
            values[row].resize(labels.len(), Int::zero());
            values[row][col] = v;
        }
    }

    // the identity column must reproduce the hook length formula
    let id_col = labels.len() - 1; // (1^n) is last in reverse-lex order
    debug_assert_eq!(labels[id_col], Partition::single_column(n));
    for (row, dim) in dims.iter().enumerate() {
        let got = &values[row][id_col];
        if got.is_negative() || got.magnitude() != dim {
            return Err(Error::Internal {
                context: "character table identity column vs hook length formula",
            });
        }
    }

    Ok(CharacterTable {
        n,
        labels,
        index,
        dims,
        class_sizes,
        values,
    })
}

/// Normalized character at a transposition, by the Frobenius closed form:
/// `sum_i (lambda_i^2 - (2i - 1) lambda_i) / (n (n - 1))`. Exact; no
/// recursion. Requires weight >= 2.
pub fn normalized_transposition_char(lambda: &Partition) -> Result<Ratio, Error> {
    let n = lambda.weight();
    if n < 2 {
        return Err(Error::BadParameter {
            reason: format!("normalized transposition character needs weight >= 2, got {n}"),
        });
    }
    let mut numer = Int::zero();
    for (i, &p) in lambda.parts().iter().enumerate() {
        let p = int(p as i64);
        let row_coeff = int((2 * i + 1) as i64); // 2i - 1 with 1-based i
        numer += &p * &p - row_coeff * &p;
    }
    Ok(Ratio::new(numer, int((n * (n - 1)) as i64)))
}

/// Character at the class of a full n-cycle: zero unless the shape is a
/// hook, in which case it is `+1` for an odd number of rows and `-1` for an
/// even number (rim hooks of size n only fit diagrams that are themselves
/// rim hooks).
pub fn ncycle_character(lambda: &Partition) -> i32 {
    match lambda.hook_height() {
        Some(j) if j % 2 == 0 => 1,
        Some(_) => -1,
        None => 0,
    }
}
