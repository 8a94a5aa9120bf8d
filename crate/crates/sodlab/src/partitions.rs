//! Partitions of `n`, the dominance order, and the conjugacy-class
//! combinatorics of the symmetric group: class representatives, centralizers,
//! and the grading weights of the quotient charts attached to each partition.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("n must be a positive integer")]
    InvalidN,
    #[error("parts must be positive and non-increasing")]
    InvalidParts,
    #[error("partitions compare only at equal n: {0} vs {1}")]
    MismatchedSum(u32, u32),
    #[error("exhaustive enumeration supports n <= {max}, got {got}")]
    UnsupportedSize { max: usize, got: usize },
    #[error("images must be a bijection on 0..n")]
    InvalidPermutation,
}

/// A partition of `n`: a non-increasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.is_empty()
            || parts.contains(&0)
            || parts.windows(2).any(|w| w[0] < w[1])
        {
            return Err(PartitionError::InvalidParts);
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Multiplicities `r_i` of each distinct part size `i`.
    pub fn exponential_form(&self) -> ExponentialForm {
        let mut multiplicities = BTreeMap::new();
        for &p in &self.parts {
            *multiplicities.entry(p).or_insert(0u32) += 1;
        }
        ExponentialForm { multiplicities }
    }

    /// Prefix sums padded with `n` out to length `len`.
    fn prefix_sums(&self, len: usize) -> Vec<u32> {
        let mut sums = Vec::with_capacity(len);
        let mut acc = 0;
        for i in 0..len {
            acc += self.parts.get(i).copied().unwrap_or(0);
            sums.push(acc);
        }
        sums
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

/// The exponential form of a partition: part size -> multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentialForm {
    multiplicities: BTreeMap<u32, u32>,
}

impl ExponentialForm {
    /// Multiplicity of the part `i` (zero when absent).
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.multiplicities.get(&i).copied().unwrap_or(0)
    }

    /// Distinct part sizes in ascending order with their multiplicities.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.multiplicities.iter().map(|(&i, &r)| (i, r))
    }

    /// Number of distinct part sizes.
    pub fn distinct_parts(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn reconstruct(&self) -> Partition {
        let mut parts = Vec::new();
        for (&i, &r) in self.multiplicities.iter().rev() {
            parts.extend(std::iter::repeat(i).take(r as usize));
        }
        Partition::new(parts).expect("exponential form reconstructs a valid partition")
    }
}

/// All partitions of `n`, each exactly once, in descending lexicographic order.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>, PartitionError> {
    if n == 0 {
        return Err(PartitionError::InvalidN);
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, n, &mut stack, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    let top = max_part.min(remaining);
    for part in (1..=top).rev() {
        stack.push(part);
        fill(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// Verdict of a dominance comparison of `mu` against `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Equal,
    /// `mu` is strictly dominated by `lambda`.
    Leq,
    /// `mu` strictly dominates `lambda`.
    Geq,
    Incomparable,
}

/// Compares `mu` against `lambda` in the dominance order: `lambda >= mu` iff
/// every prefix sum of `lambda` is at least the corresponding one of `mu`.
pub fn dominance(mu: &Partition, lambda: &Partition) -> Result<Dominance, PartitionError> {
    if mu.n() != lambda.n() {
        return Err(PartitionError::MismatchedSum(mu.n(), lambda.n()));
    }
    let len = mu.len().max(lambda.len());
    let a = mu.prefix_sums(len);
    let b = lambda.prefix_sums(len);
    let le = a.iter().zip(&b).all(|(x, y)| x <= y);
    let ge = a.iter().zip(&b).all(|(x, y)| x >= y);
    Ok(match (le, ge) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Leq,
        (false, true) => Dominance::Geq,
        (false, false) => Dominance::Incomparable,
    })
}

/// A total order on partitions of `n` refining the dominance order:
/// ascending by prefix-sum vector, ties broken lexicographically on parts.
///
/// `(1)^n` comes first and `(n)` last; any pair `mu` dominated by `lambda`
/// has `mu` earlier.
pub fn sod_order(n: u32) -> Result<Vec<Partition>, PartitionError> {
    let mut all = enumerate_partitions(n)?;
    let len = n as usize;
    all.sort_by(|a, b| {
        a.prefix_sums(len)
            .cmp(&b.prefix_sums(len))
            .then_with(|| a.parts.cmp(&b.parts))
    });
    Ok(all)
}

/// Grading weights of the quotient chart attached to `lambda`: the
/// concatenation over distinct part sizes `i` (ascending) of `(1, ..., r_i)`.
pub fn ambient_weights(lambda: &Partition) -> Vec<u32> {
    let mut weights = Vec::with_capacity(lambda.len());
    for (_, r) in lambda.exponential_form().entries() {
        weights.extend(1..=r);
    }
    weights
}

pub fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// Order of the centralizer of a permutation of cycle type `lambda`:
/// `prod_i i^{r_i} * r_i!`.
pub fn centralizer_order(lambda: &Partition) -> u64 {
    lambda
        .exponential_form()
        .entries()
        .map(|(i, r)| (i as u64).pow(r) * factorial(r))
        .product()
}

/// Size of the conjugacy class of cycle type `lambda` in `S_n`.
pub fn class_size(lambda: &Partition) -> u64 {
    factorial(lambda.n()) / centralizer_order(lambda)
}

/// A permutation of `{0, ..., n-1}` in image (one-line) notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PartitionError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PartitionError::InvalidPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "permutation sizes must match");
        Permutation {
            images: (0..self.n()).map(|x| self.images[other.images[x]]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Cycle lengths sorted non-increasing.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
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
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths).expect("cycle lengths form a partition")
    }

    /// One-line images, 1-based, as used in serialized reports.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.one_line().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The conjugacy-class representative of cycle type `lambda`: consecutive
/// cycles `(1...l_1)(l_1+1...l_1+l_2)...`.
pub fn class_representative(lambda: &Partition) -> Permutation {
    let n = lambda.n() as usize;
    let mut images: Vec<usize> = (0..n).collect();
    let mut offset = 0;
    for &part in lambda.parts() {
        let part = part as usize;
        for k in 0..part {
            images[offset + k] = offset + (k + 1) % part;
        }
        offset += part;
    }
    Permutation { images }
}

const MAX_EXHAUSTIVE_N: usize = 8;

/// All of `S_n` in a deterministic order (lexicographic on images).
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>, PartitionError> {
    if n == 0 || n > MAX_EXHAUSTIVE_N {
        return Err(PartitionError::UnsupportedSize { max: MAX_EXHAUSTIVE_N, got: n });
    }
    let mut out = Vec::with_capacity(factorial(n as u32) as usize);
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    build_perms(n, &mut images, &mut used, &mut out);
    Ok(out)
}

fn build_perms(
    n: usize,
    images: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    if images.len() == n {
        out.push(Permutation { images: images.clone() });
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            images.push(v);
            build_perms(n, images, used, out);
            images.pop();
            used[v] = false;
        }
    }
}

/// All permutations commuting with `g`, by exhaustive enumeration.
pub fn centralizer_elements(g: &Permutation) -> Result<Vec<Permutation>, PartitionError> {
    Ok(all_permutations(g.n())?
        .into_iter()
        .filter(|h| h.commutes_with(g))
        .collect())
}
