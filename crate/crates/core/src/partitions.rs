//! Integer partitions of `n` and the per-partition quantities that drive the
//! saturated-coefficient closed form.
//!
//! For a partition with parts `λ_i` of multiplicity `m_i`:
//! - `part_count` (k) = Σ m_i,
//! - `set_partition_count` (X) = n! / Π[(λ_i!)^{m_i} m_i!], the number of set
//!   partitions of n labeled items with this block-size shape,
//! - `equal_pairs` (Ā) = Σ m_i λ_i(λ_i-1)/2, the item pairs sharing a block,
//! - `unequal_pairs` (A) = n(n-1)/2 - Ā,
//! - `configurations` (E) = X · p(p-1)...(p-k+1), a polynomial in `p`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::poly::PPolynomial;

/// A partition of a positive integer, stored as `(value, multiplicity)` runs
/// with strictly decreasing distinct values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerPartition {
    runs: Vec<(u32, u32)>,
    weight: u32,
}

impl IntegerPartition {
    /// Build from an explicit list of parts, e.g. `[4, 1, 1]`. Order does not
    /// matter; parts must be positive and the list non-empty.
    pub fn from_parts(parts: &[u32]) -> Self {
        assert!(!parts.is_empty(), "a partition needs at least one part");
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut runs: Vec<(u32, u32)> = Vec::new();
        for &part in &sorted {
            match runs.last_mut() {
                Some((value, mult)) if *value == part => *mult += 1,
                _ => runs.push((part, 1)),
            }
        }
        let weight = sorted.iter().sum();
        IntegerPartition { runs, weight }
    }

    /// `(value, multiplicity)` runs, values strictly decreasing.
    pub fn runs(&self) -> &[(u32, u32)] {
        &self.runs
    }

    /// The parts written out, largest first: `[4, 1, 1]`.
    pub fn parts(&self) -> Vec<u32> {
        self.runs
            .iter()
            .flat_map(|&(value, mult)| std::iter::repeat_n(value, mult as usize))
            .collect()
    }

    /// The partitioned integer n = Σ m_i λ_i.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of parts k = Σ m_i.
    pub fn part_count(&self) -> u32 {
        self.runs.iter().map(|&(_, m)| m).sum()
    }

    /// Number of distinct part values.
    pub fn distinct_count(&self) -> usize {
        self.runs.len()
    }

    pub fn stats(&self) -> PartitionStats {
        partition_stats(self)
    }
}

/// `[4,1,1]` — bracketed parts, largest first.
impl std::fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.parts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

/// The derived quantities of one partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionStats {
    pub partition: IntegerPartition,
    /// k: number of parts, i.e. number of blocks / distinct index values.
    pub part_count: u32,
    /// X: set partitions of n labeled items with this block-size shape.
    pub set_partition_count: BigInt,
    /// Ā: item pairs that land in the same block.
    pub equal_pairs: u64,
    /// A: item pairs in different blocks; the sign in the saturated sum
    /// is (-1)^A.
    pub unequal_pairs: u64,
    /// E = X · p(p-1)...(p-k+1), the number of index assignments with this
    /// coincidence shape, as a polynomial in `p`.
    pub configurations: PPolynomial,
}

impl PartitionStats {
    /// JSON rendering mirroring the per-partition table columns:
    /// `{"partition": [...], "k": ..., "A": ..., "E": "<polynomial>"}`.
    pub fn to_json(&self) -> Value {
        json!({
            "partition": self.partition.parts(),
            "k": self.part_count,
            "A": self.unequal_pairs,
            "E": self.configurations.to_string(),
        })
    }
}

pub(crate) fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

/// Integer falling factorial `p (p-1) ... (p-k+1)`; zero when `k > p`.
pub fn falling_factorial_int(p: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(p as i64 - i as i64);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// All partitions of `n` in reverse-lexicographic order:
/// `[n]` first, `[1,1,...,1]` last.
pub fn generate_partitions(n: u32) -> Vec<IntegerPartition> {
    assert!(n >= 1, "partitions are generated for n >= 1");
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    return out;

    fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        if remaining == 0 {
            out.push(IntegerPartition::from_parts(current));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            descend(remaining - part, part, current, out);
            current.pop();
        }
    }
}

/// Compute k, X, Ā, A and E for one partition. The multinomial division for
/// X is exact; this is checked.
pub fn partition_stats(partition: &IntegerPartition) -> PartitionStats {
    let n = partition.weight();
    let k = partition.part_count();
    let mut denominator = BigInt::one();
    let mut equal_pairs = 0u64;
    for &(value, mult) in partition.runs() {
        denominator *= factorial(value).pow(mult);
        denominator *= factorial(mult);
        equal_pairs += mult as u64 * (value as u64 * (value as u64 - 1) / 2);
    }
    let numerator = factorial(n);
    debug_assert!(
        (&numerator % &denominator).is_zero(),
        "multinomial division must be exact"
    );
    let set_partition_count = numerator / denominator;
    let total_pairs = n as u64 * (n as u64 - 1) / 2;
    let unequal_pairs = total_pairs - equal_pairs;
    let configurations =
        PPolynomial::falling_factorial(k as usize).scaled(&set_partition_count);
    PartitionStats {
        partition: partition.clone(),
        part_count: k,
        set_partition_count,
        equal_pairs,
        unequal_pairs,
        configurations,
    }
}

/// Exact check of the counting identity
/// `Σ_s X^(s) · p(p-1)...(p-k^(s)+1) = p^n` over all partitions of `n`.
pub fn verify_pn_identity(n: u32, p: u32) -> bool {
    let total: BigInt = generate_partitions(n)
        .iter()
        .map(|partition| {
            let stats = partition_stats(partition);
            stats.set_partition_count * falling_factorial_int(p, stats.part_count)
        })
        .sum();
    total == BigInt::from(p).pow(n)
}
