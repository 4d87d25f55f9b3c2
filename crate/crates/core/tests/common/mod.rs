//! Brute-force oracles over explicitly enumerated symmetric groups, kept
//! deliberately independent of the library's computation paths: permutations
//! are arrays, measures are integer count vectors, convolution is literal
//! summation over group elements.

use std::collections::HashMap;

use cyclemix::exactmath::{Int, Natural, Ratio};
use cyclemix::partitions::Partition;

/// All n! permutations of `0..n` as image arrays, by Heap's algorithm.
pub fn enumerate_group(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut work: Vec<usize> = (0..n).collect();
    heap_recurse(n, &mut work, &mut out);
    out
}

fn heap_recurse(k: usize, work: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(work.clone());
        return;
    }
    for i in 0..k {
        heap_recurse(k - 1, work, out);
        if k.is_multiple_of(2) {
            work.swap(i, k - 1);
        } else {
            work.swap(0, k - 1);
        }
    }
}

/// Composition `(f . g)(x) = f(g(x))`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// Cycle type as a partition (parts descending).
pub fn cycle_type_of(perm: &[usize]) -> Partition {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lengths).expect("cycle lengths form a partition")
}

/// Exact law of the chain after one uniform n-cycle and `k` uniform
/// transpositions, computed by direct group-algebra convolution over all n!
/// permutations. Returns per-class masses as exact rationals with the common
/// denominator `(n-1)! * T^k`, `T = n(n-1)/2`.
pub fn convolution_class_masses(n: usize, k: usize) -> Vec<(Partition, Ratio)> {
    let group = enumerate_group(n);
    let index: HashMap<&[usize], usize> = group
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();

    let transpositions: Vec<Vec<usize>> = {
        let mut ts = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                let mut t: Vec<usize> = (0..n).collect();
                t.swap(a, b);
                ts.push(t);
            }
        }
        ts
    };

    // index maps sigma -> tau . sigma, one per transposition
    let step_maps: Vec<Vec<usize>> = transpositions
        .iter()
        .map(|t| {
            group
                .iter()
                .map(|sigma| index[compose(t, sigma).as_slice()])
                .collect()
        })
        .collect();

    // start: uniform over the (n-1)! full cycles, as unit counts
    let mut counts: Vec<u64> = group
        .iter()
        .map(|p| u64::from(cycle_type_of(p).rows() == 1))
        .collect();

    for _ in 0..k {
        let mut next = vec![0u64; counts.len()];
        for map in &step_maps {
            for (target, &source) in map.iter().enumerate() {
                next[target] += counts[source];
            }
        }
        counts = next;
    }

    let mut denominator = Natural::from(1u32);
    for i in 2..n {
        denominator *= Natural::from(i as u64);
    }
    let pair_count = Natural::from((n * (n - 1) / 2) as u64);
    for _ in 0..k {
        denominator *= &pair_count;
    }

    let mut by_class: HashMap<Partition, u64> = HashMap::new();
    for (i, perm) in group.iter().enumerate() {
        if counts[i] > 0 {
            *by_class.entry(cycle_type_of(perm)).or_insert(0) += counts[i];
        }
    }

    cyclemix::partitions::partitions_of(n)
        .map(|class| {
            let count = by_class.get(&class).copied().unwrap_or(0);
            let mass = Ratio::new(Int::from(count), Int::from(denominator.clone()));
            (class, mass)
        })
        .collect()
}
