//! Integer partitions, the shared index set for irreducible representations
//! and conjugacy classes of the symmetric group.
//!
//! A [`Partition`] is an immutable weakly decreasing sequence of positive
//! parts. The empty partition is a first-class value (it is what truncating
//! a one-row shape leaves behind). Enumeration is reverse-lexicographic
//! starting from the one-row shape, so the trivial representation always
//! sits at index 0.
//!
//! The textual syntax is `[4,1,1]`, with exponent shorthand `[4,1^2]`
//! accepted on input.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::Error;
use crate::exactmath::{factorial, nat, Natural};

/// Coset label: even permutations (the alternating group) or odd ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Parity of an integer count of transpositions.
    pub fn of_count(count: usize) -> Parity {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A partition of a nonnegative integer: weakly decreasing positive parts.
///
/// Doubles as an irreducible-representation label and as a cycle type.
/// Structural equality, hashing, and ordering are on the part vector, so
/// partitions work directly as map keys.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with every part >= 1.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                reason: format!("parts must be weakly decreasing, got {parts:?}"),
            });
        }
        Ok(Partition { parts })
    }

    /// The empty partition (weight 0).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty when `n == 0`.
    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn single_column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n - j, 1^j)`; requires `j < n`.
    pub fn hook(n: usize, j: usize) -> Result<Self, Error> {
        if j >= n {
            return Err(Error::InvalidPartition {
                reason: format!("hook arm of a partition of {n} cannot be {j} rows below the first"),
            });
        }
        let mut parts = vec![n - j];
        parts.extend(std::iter::repeat_n(1, j));
        Partition::new(parts)
    }

    /// The cycle type of a single transposition in S_n: `(2, 1^{n-2})`.
    pub fn transposition_type(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidPartition {
                reason: format!("no transpositions in a symmetric group on {n} points"),
            });
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows of the Young diagram.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram. Involutive.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Drops the first part: `(4,2,1)` becomes `(2,1)`, `(n)` becomes `()`.
    pub fn truncated(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// `Some(j)` when the shape is the hook `(m, 1^j)` with `m >= 1`
    /// (this includes the one-row shape with `j = 0` and the one-column
    /// shape with `j = rows - 1`); `None` for non-hooks and the empty shape.
    pub fn hook_height(&self) -> Option<usize> {
        if self.parts.is_empty() {
            return None;
        }
        if self.parts[1..].iter().all(|&p| p == 1) {
            Some(self.parts.len() - 1)
        } else {
            None
        }
    }

    /// Hook height for hooks that are neither the one-row nor the
    /// one-column shape, i.e. `(n - j, 1^j)` with `j >= 1` and `n - j >= 2`.
    pub fn proper_hook_height(&self) -> Option<usize> {
        match self.hook_height() {
            Some(j) if j >= 1 && self.parts[0] >= 2 => Some(j),
            _ => None,
        }
    }

    pub fn is_proper_hook(&self) -> bool {
        self.proper_hook_height().is_some()
    }

    /// Number of parts equal to 1; as a cycle type, the number of fixed
    /// points of any permutation in the class.
    pub fn fixed_points(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// Sign of any permutation with this cycle type: `(-1)^(n - rows)`.
    pub fn sign(&self) -> i32 {
        if (self.weight() - self.rows()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn parity(&self) -> Parity {
        if self.sign() == 1 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Number of standard Young tableaux of this shape, i.e. the dimension
    /// of the corresponding irreducible representation, by the hook length
    /// formula. The empty shape has dimension 1.
    pub fn dimension(&self) -> Natural {
        let n = self.weight();
        let conj = self.conjugate();
        let mut hook_product = Natural::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j) + (conj.parts[j] - i) - 1;
                hook_product *= nat(hook as u64);
            }
        }
        let numerator = factorial(n);
        debug_assert!((numerator.clone() % &hook_product) == nat(0));
        numerator / hook_product
    }

    /// Number of permutations in S_n with this cycle type:
    /// `n! / prod_m (m^{c_m} * c_m!)` with `c_m` the multiplicity of part m.
    pub fn class_size(&self) -> Natural {
        let n = self.weight();
        let mut centralizer = Natural::one();
        let mut m = 0usize;
        let mut run = 0usize;
        for &p in self.parts.iter().chain(std::iter::once(&0)) {
            if p == m {
                run += 1;
            } else {
                if m > 0 {
                    centralizer *= nat(m as u64).pow(run as u32) * factorial(run);
                }
                m = p;
                run = 1;
            }
        }
        let numerator = factorial(n);
        debug_assert!((numerator.clone() % &centralizer) == nat(0));
        numerator / centralizer
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[4,1,1]`, `4,1,1`, exponent shorthand `[4,1^2]`, and the
    /// empty forms `[]` / `` for the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in inner.split(',') {
            let token = token.trim();
            let (base, count) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base.parse().map_err(|_| Error::ParsePartition {
                input: s.into(),
                reason: format!("`{token}` is not a positive integer part"),
            })?;
            let count: usize = count.parse().map_err(|_| Error::ParsePartition {
                input: s.into(),
                reason: format!("`{token}` has a malformed exponent"),
            })?;
            if count == 0 {
                return Err(Error::ParsePartition {
                    input: s.into(),
                    reason: format!("`{token}` repeats a part zero times"),
                });
            }
            parts.extend(std::iter::repeat_n(base, count));
        }
        Partition::new(parts).map_err(|e| Error::ParsePartition {
            input: s.into(),
            reason: e.to_string(),
        })
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and
/// `(1^n)` last. For `n = 0` yields just the empty partition.
pub fn partitions_of(n: usize) -> PartitionIter {
    PartitionIter {
        current: if n == 0 { Vec::new() } else { vec![n] },
        fresh: true,
        done: false,
    }
}

/// Iterator over the partitions of a fixed integer; see [`partitions_of`].
pub struct PartitionIter {
    current: Vec<usize>,
    fresh: bool,
    done: bool,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(Partition {
                parts: self.current.clone(),
            });
        }
        // Decrement the rightmost part larger than 1, then refill the freed
        // weight greedily with chunks no larger than the decremented part.
        let Some(pivot) = self.current.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return None;
        };
        let new_part = self.current[pivot] - 1;
        let mut remainder = self.current.len() - pivot; // the shaved unit plus the trailing 1s
        self.current.truncate(pivot);
        self.current.push(new_part);
        while remainder > 0 {
            let chunk = remainder.min(new_part);
            self.current.push(chunk);
            remainder -= chunk;
        }
        Some(Partition {
            parts: self.current.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::nat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_part_vectors() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn enumeration_order_and_counts() {
        let got: Vec<Partition> = partitions_of(4).collect();
        let want = [
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(got, want);

        assert_eq!(partitions_of(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(partitions_of(1).collect::<Vec<_>>(), vec![p(&[1])]);
        assert_eq!(partitions_of(5).count(), 7);
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[6]).conjugate(), Partition::single_column(6));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dimensions_by_hook_lengths() {
        assert_eq!(p(&[7]).dimension(), nat(1));
        assert_eq!(p(&[2, 1]).dimension(), nat(2));
        assert_eq!(p(&[2, 2]).dimension(), nat(2));
        assert_eq!(Partition::empty().dimension(), nat(1));
        // classic: the standard representation of S_n has dimension n - 1
        for n in 2..=9 {
            assert_eq!(Partition::hook(n, 1).unwrap().dimension(), nat(n as u64 - 1));
        }
    }

    #[test]
    fn truncation() {
        assert_eq!(p(&[4, 2, 1]).truncated(), p(&[2, 1]));
        assert_eq!(p(&[5]).truncated(), Partition::empty());
        assert_eq!(p(&[3, 3]).truncated(), p(&[3]));
    }

    #[test]
    fn hook_classification() {
        assert_eq!(p(&[4, 1, 1]).proper_hook_height(), Some(2));
        assert!(p(&[4, 1, 1]).is_proper_hook());
        assert!(!p(&[6]).is_proper_hook());
        assert!(!p(&[3, 2]).is_proper_hook());
        assert!(!Partition::single_column(5).is_proper_hook());

        assert_eq!(p(&[6]).hook_height(), Some(0));
        assert_eq!(Partition::single_column(5).hook_height(), Some(4));
        assert_eq!(p(&[3, 2]).hook_height(), None);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(Partition::single_column(6).class_size(), nat(1));
        assert_eq!(p(&[2, 1]).class_size(), nat(3));
        for n in 2..=8 {
            assert_eq!(Partition::single_row(n).class_size(), factorial(n - 1));
        }
    }

    #[test]
    fn fixed_points_and_sign() {
        assert_eq!(Partition::single_column(7).fixed_points(), 7);
        assert_eq!(p(&[5]).fixed_points(), 0);
        assert_eq!(p(&[2, 1, 1]).fixed_points(), 2);
        assert_eq!(p(&[2, 1, 1]).sign(), -1);
        assert_eq!(p(&[3, 1]).sign(), 1);
        assert_eq!(p(&[2, 2]).parity(), Parity::Even);
    }

    #[test]
    fn parsing_both_syntaxes() {
        assert_eq!("[4,1,1]".parse::<Partition>().unwrap(), p(&[4, 1, 1]));
        assert_eq!("[4,1^2]".parse::<Partition>().unwrap(), p(&[4, 1, 1]));
        assert_eq!("4,1,1".parse::<Partition>().unwrap(), p(&[4, 1, 1]));
        assert_eq!("[2^3,1]".parse::<Partition>().unwrap(), p(&[2, 2, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert!("[2^0]".parse::<Partition>().is_err());
    }

    #[test]
    fn display_roundtrip() {
        for n in 0..=8 {
            for q in partitions_of(n) {
                let shown = q.to_string();
                assert_eq!(shown.parse::<Partition>().unwrap(), q);
            }
        }
    }
}
