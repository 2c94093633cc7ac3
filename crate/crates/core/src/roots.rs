//! Positive roots of type `A_l` as intervals of simple-root indices, root
//! ideals (upper sets of the root poset) and their statistics.
//!
//! `α_{i,j} = α_i + … + α_j` is stored as the closed interval `[i, j]`; in
//! the `ε` basis it is `ε_i - ε_{j+1}`. The root order is interval
//! containment, so an ideal is a set of intervals closed under taking
//! superintervals. In the staircase display `α_{i,j}` sits in cell
//! `(i, l + 1 - j)`, which makes row `i` of an ideal a prefix of length
//! `λ_i` and gives the bijection `σ` with staircase partitions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::insertion::{d_map, dotted_line, Entry};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, LPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveRoot {
    start: usize,
    end: usize,
}

impl PositiveRoot {
    pub fn new(start: usize, end: usize, l: usize) -> Result<Self> {
        if start == 0 || start > end || end > l {
            return Err(Error::InvalidRoot { start, end, rank: l });
        }
        Ok(PositiveRoot { start, end })
    }

    pub(crate) fn new_unchecked(start: usize, end: usize) -> Self {
        debug_assert!(1 <= start && start <= end);
        PositiveRoot { start, end }
    }

    pub fn simple(i: usize) -> Self {
        PositiveRoot::new_unchecked(i, i)
    }

    /// `θ = α_{1,l}`.
    pub fn highest(l: usize) -> Self {
        PositiveRoot::new_unchecked(1, l)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    /// `(a, b)` with the root equal to `ε_a - ε_b`.
    pub fn eps(&self) -> (usize, usize) {
        (self.start, self.end + 1)
    }

    pub fn from_eps((a, b): (usize, usize)) -> Option<Self> {
        (a >= 1 && a < b).then(|| PositiveRoot::new_unchecked(a, b - 1))
    }

    /// Root order: `self ≤ other` iff `self`'s interval lies inside `other`'s.
    pub fn le(&self, other: &PositiveRoot) -> bool {
        other.start <= self.start && self.end <= other.end
    }

    pub fn comparable(&self, other: &PositiveRoot) -> bool {
        self.le(other) || other.le(self)
    }

    /// Staircase cell `(row, column)`.
    pub fn cell(&self, l: usize) -> (usize, usize) {
        (self.start, l + 1 - self.end)
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.start, self.end)
    }
}

/// Sum of two roots `ε_a - ε_b` and `ε_c - ε_d`, if it is a root.
pub fn root_sum(x: (usize, usize), y: (usize, usize)) -> Option<(usize, usize)> {
    let ((a, b), (c, d)) = (x, y);
    if b == c && a != d {
        Some((a, d))
    } else if d == a && c != b {
        Some((c, b))
    } else {
        None
    }
}

/// All positive roots of rank `l`, ordered by `(start, end)`.
pub fn positive_roots(l: usize) -> Vec<PositiveRoot> {
    (1..=l)
        .flat_map(|i| (i..=l).map(move |j| PositiveRoot::new_unchecked(i, j)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Antichain {
    roots: BTreeSet<PositiveRoot>,
}

impl Antichain {
    pub fn new(roots: impl IntoIterator<Item = PositiveRoot>) -> Result<Self> {
        let roots: BTreeSet<PositiveRoot> = roots.into_iter().collect();
        for (idx, a) in roots.iter().enumerate() {
            if let Some(b) = roots.iter().skip(idx + 1).find(|b| a.comparable(b)) {
                return Err(Error::NotAnAntichain { first: *a, second: *b });
            }
        }
        Ok(Antichain { roots })
    }

    /// Parses `"1-3,2-5,5-7"`; a bare `"i"` stands for `α_{i,i}` and an
    /// empty string for the empty antichain.
    pub fn parse(l: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Antichain::default());
        }
        let number = |tok: &str, whole: &str| {
            tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                token: whole.to_string(),
                reason: e.to_string(),
            })
        };
        let roots = text
            .split(',')
            .map(|tok| {
                let (start, end) = match tok.split_once('-') {
                    Some((s, e)) => (number(s, tok)?, number(e, tok)?),
                    None => {
                        let v = number(tok, tok)?;
                        (v, v)
                    }
                };
                PositiveRoot::new(start, end, l).map_err(|e| Error::Parse {
                    token: tok.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Antichain::new(roots)
    }

    pub fn roots(&self) -> &BTreeSet<PositiveRoot> {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn starts(&self) -> BTreeSet<usize> {
        self.roots.iter().map(|r| r.start).collect()
    }

    pub fn ends(&self) -> BTreeSet<usize> {
        self.roots.iter().map(|r| r.end).collect()
    }

    /// `(L, U)`: `L` holds the roots whose start is also the end of some
    /// member (a simple root `α_{i,i}` qualifies through itself).
    pub fn lu_split(&self) -> (BTreeSet<PositiveRoot>, BTreeSet<PositiveRoot>) {
        let ends = self.ends();
        self.roots.iter().partition(|r| ends.contains(&r.start))
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Subset `I` of the simple roots, by index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleSubset {
    l: usize,
    indices: BTreeSet<usize>,
}

impl SimpleSubset {
    pub fn new(l: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > l) {
            return Err(Error::InvalidSimpleRoot { index: bad, rank: l });
        }
        Ok(SimpleSubset { l, indices })
    }

    pub fn empty(l: usize) -> Self {
        SimpleSubset { l, indices: BTreeSet::new() }
    }

    pub fn full(l: usize) -> Self {
        SimpleSubset { l, indices: (1..=l).collect() }
    }

    /// All `2^l` subsets, ordered by bitmask.
    pub fn all(l: usize) -> impl Iterator<Item = SimpleSubset> {
        (0u64..1 << l).map(move |mask| SimpleSubset {
            l,
            indices: (1..=l).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn is_subset(&self, other: &SimpleSubset) -> bool {
        self.indices.is_subset(&other.indices)
    }

    /// Whether `ε_a - ε_b` (either sign) lies in `Δ_I`.
    pub fn spans(&self, (a, b): (usize, usize)) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        lo != hi && (lo..hi).all(|i| self.indices.contains(&i))
    }
}

/// An upper set of the root poset of rank `l` (an ad-nilpotent ideal of
/// the Borel subalgebra).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct RootIdeal {
    l: usize,
    roots: BTreeSet<PositiveRoot>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    l: usize,
    antichain: Vec<[usize; 2]>,
}

impl TryFrom<IdealJson> for RootIdeal {
    type Error = Error;

    fn try_from(value: IdealJson) -> Result<Self> {
        let roots = value
            .antichain
            .iter()
            .map(|&[i, j]| PositiveRoot::new(i, j, value.l))
            .collect::<Result<Vec<_>>>()?;
        Ok(RootIdeal::from_antichain(&Antichain::new(roots)?, value.l))
    }
}

impl From<RootIdeal> for IdealJson {
    fn from(ideal: RootIdeal) -> Self {
        IdealJson {
            l: ideal.l,
            antichain: ideal.phi_min().roots.iter().map(|r| [r.start, r.end]).collect(),
        }
    }
}

impl RootIdeal {
    pub fn empty(l: usize) -> Self {
        RootIdeal { l, roots: BTreeSet::new() }
    }

    /// `Δ^+`.
    pub fn full(l: usize) -> Self {
        RootIdeal {
            l,
            roots: positive_roots(l).into_iter().collect(),
        }
    }

    /// Validates upward closure.
    pub fn from_roots(l: usize, roots: impl IntoIterator<Item = PositiveRoot>) -> Result<Self> {
        let roots: BTreeSet<PositiveRoot> = roots.into_iter().collect();
        if let Some(bad) = roots.iter().find(|r| r.end > l) {
            return Err(Error::InvalidRoot { start: bad.start, end: bad.end, rank: l });
        }
        for r in &roots {
            // covering relations suffice: extend by one on either side
            let ups = [
                (r.start > 1).then(|| PositiveRoot::new_unchecked(r.start - 1, r.end)),
                (r.end < l).then(|| PositiveRoot::new_unchecked(r.start, r.end + 1)),
            ];
            if let Some(missing) = ups.into_iter().flatten().find(|u| !roots.contains(u)) {
                return Err(Error::NotUpwardClosed { present: *r, missing });
            }
        }
        Ok(RootIdeal { l, roots })
    }

    /// Every root lying above some member of `antichain`.
    pub fn from_antichain(antichain: &Antichain, l: usize) -> Self {
        let roots = antichain
            .roots
            .iter()
            .flat_map(|r| {
                (1..=r.start).flat_map(move |i| (r.end..=l).map(move |j| PositiveRoot::new_unchecked(i, j)))
            })
            .collect();
        RootIdeal { l, roots }
    }

    /// `σ⁻¹`: row `i` holds `[i, j]` for `j ≥ l + 1 - λ_i`.
    pub fn from_partition(lambda: &LPartition) -> Self {
        let l = lambda.rank();
        let roots = (1..=l)
            .flat_map(|i| ((l + 1 - lambda.part(i))..=l).map(move |j| PositiveRoot::new_unchecked(i, j)))
            .collect();
        RootIdeal { l, roots }
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn roots(&self) -> &BTreeSet<PositiveRoot> {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: &PositiveRoot) -> bool {
        self.roots.contains(root)
    }

    /// Members with no proper subinterval in the ideal.
    pub fn phi_min(&self) -> Antichain {
        let roots = self
            .roots
            .iter()
            .filter(|r| {
                let below = [
                    (r.start < r.end).then(|| PositiveRoot::new_unchecked(r.start + 1, r.end)),
                    (r.start < r.end).then(|| PositiveRoot::new_unchecked(r.start, r.end - 1)),
                ];
                below.into_iter().flatten().all(|b| !self.roots.contains(&b))
            })
            .copied()
            .collect();
        Antichain { roots }
    }

    /// `σ`: `λ_i = #{j : [i, j] ∈ Φ}`.
    pub fn sigma(&self) -> LPartition {
        let mut parts = vec![0; self.l];
        for r in &self.roots {
            parts[r.start - 1] += 1;
        }
        LPartition::new(self.l, parts).expect("row lengths of an upper set form a staircase partition")
    }

    /// Raw membership test for `ℱ_I`: `Φ ∩ Δ_I = ∅`, and `α + β ∈ Φ` whenever
    /// `α ∈ Φ`, `β ∈ Δ^+ ∪ Δ_I` and `α + β` is a positive root.
    pub fn is_in_f_i(&self, subset: &SimpleSubset) -> bool {
        let n = self.l + 1;
        if self.roots.iter().any(|r| subset.spans(r.eps())) {
            return false;
        }
        let partners: Vec<(usize, usize)> = (1..=n)
            .flat_map(|a| (1..=n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && (a < b || subset.spans((a, b))))
            .collect();
        self.roots.iter().all(|alpha| {
            partners.iter().all(|&beta| match root_sum(alpha.eps(), beta) {
                Some(sum) => match PositiveRoot::from_eps(sum) {
                    Some(root) => self.roots.contains(&root),
                    None => true,
                },
                None => true,
            })
        })
    }

    /// `I_Φ`: simple indices that neither start nor end a minimal root.
    pub fn i_max(&self) -> SimpleSubset {
        let min = self.phi_min();
        let (starts, ends) = (min.starts(), min.ends());
        SimpleSubset {
            l: self.l,
            indices: (1..=self.l).filter(|i| !starts.contains(i) && !ends.contains(i)).collect(),
        }
    }

    /// Sends each minimal root `α_{i,j}` to the ledger entry `(p, s)` where
    /// `i_{p-1} < λ_i ≤ i_p` and `s = i - (l - i_{p+1} + 2)`.
    pub fn psi_map(&self) -> BTreeMap<PositiveRoot, Entry> {
        let lambda = self.sigma();
        let profile = dotted_line(&lambda);
        self.phi_min()
            .roots
            .iter()
            .map(|root| {
                let i = root.start;
                let p = profile
                    .band_of(lambda.part(i))
                    .expect("a minimal root sits in a nonempty row");
                (*root, (p, i - profile.anchor(p)))
            })
            .collect()
    }

    /// `σ⁻¹ ∘ P⁻¹ ∘ D ∘ σ`.
    pub fn dual(&self) -> RootIdeal {
        let path = d_map(&self.sigma());
        let lambda = LPartition::p_inverse(&path, self.l).expect("D preserves the half-length");
        RootIdeal::from_partition(&lambda)
    }
}

/// All root ideals of rank `l`, in the order of [`enumerate_partitions`].
pub fn enumerate_ideals(l: usize) -> Result<Vec<RootIdeal>> {
    Ok(enumerate_partitions(l)?
        .iter()
        .map(RootIdeal::from_partition)
        .collect())
}
