//! Coefficient polynomials of contraction terms.
//!
//! A term whose crossing graph has edges E carries the coefficient
//!
//! ```text
//! C(p) = Σ over α in {1..p}^n of Π over {i,j} in E of (2 δ_{α_i α_j} - 1)
//! ```
//!
//! Three routes compute it:
//! - [`coefficient_bruteforce`] runs the p^n sum literally and is the
//!   independent oracle for everything else;
//! - [`coefficient_polynomial`] groups assignments by their coincidence
//!   pattern (a set partition of the vertices): a partition with B blocks is
//!   hit by `p(p-1)...(p-B+1)` assignments, all with the same sign, namely
//!   (-1) per edge joining different blocks — a Bell(n)-term exact sum;
//! - [`coefficient_saturated`] collapses the set-partition sum over a
//!   complete graph to integer partitions of n, since there the sign depends
//!   only on the block-size shape.
//!
//! Parafermi crossings carry `(1 - 2δ)` factors instead, a global `(-1)^m`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::diagrams::CrossingGraph;
use crate::error::{Error, Result};
use crate::partitions::{generate_partitions, partition_stats};
use crate::poly::PPolynomial;
use crate::Limits;

/// An assignment of the vertices 1..n to blocks, canonical restricted-growth
/// form: block labels are 0..B-1 in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    block_of: Vec<usize>,
}

impl SetPartition {
    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.block_of.iter().max().map_or(0, |&b| b + 1)
    }

    /// Whether 0-based items `i` and `j` share a block.
    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.block_of[i] == self.block_of[j]
    }
}

/// All set partitions of `n` items as restricted-growth strings in
/// lexicographic order; Bell(n) of them.
pub fn set_partitions(n: usize) -> SetPartitionIter {
    SetPartitionIter {
        rgs: vec![0; n],
        fresh: true,
    }
}

pub struct SetPartitionIter {
    rgs: Vec<usize>,
    fresh: bool,
}

impl Iterator for SetPartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.fresh {
            self.fresh = false;
            return Some(SetPartition {
                block_of: self.rgs.clone(),
            });
        }
        // Rightmost position that can still grow: rgs[i] may rise to at most
        // max(rgs[..i]) + 1.
        let n = self.rgs.len();
        let mut prefix_max = vec![0usize; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.rgs[i - 1]);
        }
        for i in (1..n).rev() {
            if self.rgs[i] <= prefix_max[i] {
                self.rgs[i] += 1;
                for tail in &mut self.rgs[i + 1..] {
                    *tail = 0;
                }
                return Some(SetPartition {
                    block_of: self.rgs.clone(),
                });
            }
        }
        None
    }
}

fn edges_zero_based(g: &CrossingGraph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|&(i, j)| (i - 1, j - 1)).collect()
}

/// The literal `p^n` sum; the independent oracle. Refuses to run past the
/// elementary-product budget rather than subsample.
pub fn coefficient_bruteforce(g: &CrossingGraph, p: u32, limits: &Limits) -> Result<BigInt> {
    bruteforce_sum(g, p, limits, false)
}

/// Oracle for the parafermi variant: each crossing contributes
/// `(1 - 2 δ_{α_i α_j})` instead of `(2 δ_{α_i α_j} - 1)`.
pub fn parafermi_bruteforce(g: &CrossingGraph, p: u32, limits: &Limits) -> Result<BigInt> {
    bruteforce_sum(g, p, limits, true)
}

fn bruteforce_sum(g: &CrossingGraph, p: u32, limits: &Limits, flip: bool) -> Result<BigInt> {
    let n = g.n();
    let tuples = (p as u128).pow(n as u32);
    let cost = tuples * g.edge_count().max(1) as u128;
    if cost > limits.oracle_budget {
        return Err(Error::BudgetExceeded {
            cost,
            budget: limits.oracle_budget,
        });
    }
    if p == 0 {
        return Ok(BigInt::ZERO);
    }
    let edges = edges_zero_based(g);
    let mut alpha = vec![0u32; n];
    let mut sum: i64 = 0;
    loop {
        // Parabose edges contribute -1 when the indices differ; parafermi
        // edges contribute -1 when they coincide.
        let mut negative = false;
        for &(i, j) in &edges {
            if (alpha[i] == alpha[j]) == flip {
                negative = !negative;
            }
        }
        sum += if negative { -1 } else { 1 };
        let mut k = 0;
        while k < n {
            alpha[k] += 1;
            if alpha[k] < p {
                break;
            }
            alpha[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    Ok(BigInt::from(sum))
}

/// Exact coefficient polynomial of a crossing graph via set-partition
/// summation. Agrees with [`coefficient_bruteforce`] at every `p`.
pub fn coefficient_polynomial(g: &CrossingGraph, limits: &Limits) -> Result<PPolynomial> {
    let n = g.n();
    if n > limits.max_set_partition_n {
        return Err(Error::CapExceeded {
            what: "set-partition",
            n,
            cap: limits.max_set_partition_n,
            raise: "Limits::max_set_partition_n",
        });
    }
    let edges = edges_zero_based(g);
    // Sign tally per block count; |tally| <= Bell(10) fits easily in i64.
    let mut tally = vec![0i64; n + 1];
    for partition in set_partitions(n) {
        let mut negative = false;
        for &(i, j) in &edges {
            if !partition.same_block(i, j) {
                negative = !negative;
            }
        }
        tally[partition.block_count()] += if negative { -1 } else { 1 };
    }
    let mut poly = PPolynomial::zero();
    for (blocks, &count) in tally.iter().enumerate() {
        if count != 0 {
            poly = &poly
                + &PPolynomial::falling_factorial(blocks).scaled(&BigInt::from(count));
        }
    }
    Ok(poly)
}

/// Closed form of the coefficient of the maximally saturated (complete)
/// crossing graph: `Σ_s (-1)^{A^(s)} E^(s)` over the partitions of `n`.
pub fn coefficient_saturated(n: u32) -> PPolynomial {
    let mut poly = PPolynomial::zero();
    for partition in generate_partitions(n) {
        let stats = partition_stats(&partition);
        let signed = if stats.unequal_pairs % 2 == 1 {
            -&stats.configurations
        } else {
            stats.configurations
        };
        poly = &poly + &signed;
    }
    poly
}

/// Parafermi coefficient: `(-1)^m` times the parabose one, `m` = crossings.
pub fn parafermi_coefficient(g: &CrossingGraph, limits: &Limits) -> Result<PPolynomial> {
    let parabose = coefficient_polynomial(g, limits)?;
    Ok(if g.edge_count() % 2 == 1 {
        -&parabose
    } else {
        parabose
    })
}

/// Memo for coefficient polynomials keyed by the canonical form of the
/// crossing graph, so isomorphic graphs are computed once. Purely an
/// optimization; results are identical with or without it.
#[derive(Debug, Default)]
pub struct CoefficientCache {
    map: HashMap<(usize, Vec<(usize, usize)>), PPolynomial>,
}

impl CoefficientCache {
    pub fn new() -> Self {
        CoefficientCache::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn coefficient_polynomial(
        &mut self,
        g: &CrossingGraph,
        limits: &Limits,
    ) -> Result<PPolynomial> {
        let canonical = g.canonical_form();
        let key = (canonical.n(), canonical.edges().to_vec());
        if let Some(hit) = self.map.get(&key) {
            return Ok(hit.clone());
        }
        let poly = coefficient_polynomial(&canonical, limits)?;
        self.map.insert(key, poly.clone());
        Ok(poly)
    }
}
