//! Peak-insertion bijection from staircase partitions to Dyck paths.
//!
//! A partition `λ` is cut by the anti-diagonal `x + y = l + 1` into a chain
//! of values `0 < i_1 < … < i_k ≤ l` (the dotted line). Between the extremal
//! partitions `λ^m ⊆ λ ⊆ λ^M` determined by that chain, the boundary of `λ`
//! inside each rectangle is a word `l^{a_0} d l^{a_1} d … d l^{a_h}`. Starting
//! from `(ud)^{l+1-i_k}`, row `j = k, …, 1` inserts `a_{j,t}` peaks on the
//! `(t+1)`-th highest peak of the current path.
//!
//! The ledger of nonzero entries `𝒜`, split into entries that land on a
//! non-`u`-peak (`𝓛`) and the rest (`𝒰`), predicts the number of `udu`
//! factors of the result as `l - 2#𝒰 - #𝓛`.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use serde::Serialize;

use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, LPartition};

/// Largest rank for which [`d_inverse`] builds its lookup table.
pub const D_INVERSE_MAX_RANK: usize = 12;

/// Dotted-line data of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DottedLine {
    l: usize,
    chain: Vec<usize>,
}

impl DottedLine {
    pub fn rank(&self) -> usize {
        self.l
    }

    /// `k = n(λ)`.
    pub fn k(&self) -> usize {
        self.chain.len()
    }

    /// `i_1 < … < i_k`.
    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    /// `i_j` with `i_j = 0` for `j ≤ 0` and `i_j = l + 1` for `j > k`.
    pub fn i(&self, j: isize) -> usize {
        if j <= 0 {
            0
        } else if j as usize > self.k() {
            self.l + 1
        } else {
            self.chain[j as usize - 1]
        }
    }

    /// Row of the distinguished cell `(l - i_{j+1} + 2, i_j)`.
    pub fn anchor(&self, j: usize) -> usize {
        self.l + 2 - self.i(j as isize + 1)
    }

    /// Index `p` with `i_{p-1} < v ≤ i_p`, for `1 ≤ v ≤ i_k`.
    pub fn band_of(&self, v: usize) -> Option<usize> {
        if v == 0 {
            return None;
        }
        self.chain.iter().position(|&i| v <= i).map(|p| p + 1)
    }

    /// Outer extremal partition `λ^M`.
    pub fn lambda_max(&self) -> LPartition {
        let k = self.k() as isize;
        let mut parts = Vec::with_capacity(self.l);
        for j in (1..=k).rev() {
            let width = self.i(j + 1) - self.i(j);
            parts.extend(std::iter::repeat_n(self.i(j), width));
        }
        parts.resize(self.l, 0);
        LPartition::new(self.l, parts).expect("outer dotted-line partition is valid")
    }

    /// Inner extremal partition `λ^m`.
    pub fn lambda_min(&self) -> LPartition {
        let k = self.k() as isize;
        let mut parts = Vec::with_capacity(self.l);
        if k > 0 {
            parts.push(self.i(k));
            for j in (1..k).rev() {
                let width = self.i(j + 2) - self.i(j + 1);
                parts.extend(std::iter::repeat_n(self.i(j), width));
            }
        }
        parts.resize(self.l, 0);
        LPartition::new(self.l, parts).expect("inner dotted-line partition is valid")
    }
}

/// Follows the dotted line: `i_k = λ_1`, then `i_{j-1} = λ_{l - i_j + 2}`
/// until a zero is read.
pub fn dotted_line(lambda: &LPartition) -> DottedLine {
    let l = lambda.rank();
    let mut chain = Vec::new();
    let mut v = lambda.part(1);
    while v > 0 {
        chain.push(v);
        v = lambda.part(l + 2 - v);
    }
    chain.reverse();
    DottedLine { l, chain }
}

pub fn lambda_extremes(profile: &DottedLine) -> (LPartition, LPartition) {
    (profile.lambda_max(), profile.lambda_min())
}

/// The insertion table `a_{j,t}` for `j = 1..=k+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionWords {
    profile: DottedLine,
    rows: Vec<Vec<usize>>,
}

impl InsertionWords {
    pub fn profile(&self) -> &DottedLine {
        &self.profile
    }

    /// Row `j` (1-based, up to `k + 1`), entries `a_{j,0..=h_j}`.
    pub fn row(&self, j: usize) -> &[usize] {
        &self.rows[j - 1]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `h_j`, the number of `d` letters in the word of row `j`.
    pub fn h(&self, j: usize) -> usize {
        self.rows[j - 1].len() - 1
    }

    pub fn a(&self, j: usize, t: usize) -> usize {
        self.rows[j - 1][t]
    }
}

pub fn insertion_words(lambda: &LPartition) -> InsertionWords {
    let profile = dotted_line(lambda);
    let l = lambda.rank();
    let k = profile.k();
    let mut rows = Vec::with_capacity(k + 1);
    for j in 1..=k {
        let anchor = profile.anchor(j);
        let h = if j >= 2 {
            profile.i(j as isize + 1) - profile.i(j as isize) - 1
        } else {
            (1..).take_while(|t| lambda.part(anchor + t) > 0).count()
        };
        let floor = profile.i(j as isize - 1);
        let row: Vec<usize> = (0..=h)
            .map(|t| {
                let here = lambda.part(anchor + t);
                let below = if t == h { floor } else { lambda.part(anchor + t + 1) };
                here - below
            })
            .collect();
        rows.push(row);
    }
    rows.push(vec![l + 1 - profile.i(k as isize)]);
    InsertionWords { profile, rows }
}

/// Every intermediate path `D_{k+1}, D_k, …, D_1`; the last one is `D(λ)`.
pub fn d_map_steps(lambda: &LPartition) -> Vec<DyckPath> {
    let words = insertion_words(lambda);
    let k = words.profile.k();
    let mut path = DyckPath::zigzag(words.row(k + 1)[0]);
    let mut out = Vec::with_capacity(k + 1);
    out.push(path.clone());
    for j in (1..=k).rev() {
        path = path
            .insert_on_highest(words.row(j))
            .expect("insertion word fits the highest peaks of the previous path");
        out.push(path.clone());
    }
    out
}

/// The peak-insertion image `D(λ)`, a Dyck path of half-length `l + 1`.
pub fn d_map(lambda: &LPartition) -> DyckPath {
    d_map_steps(lambda).pop().expect("at least the starting path")
}

/// Exhaustive lookup table inverting [`d_map`] at a fixed rank.
#[derive(Debug)]
pub struct DInverseTable {
    l: usize,
    map: HashMap<DyckPath, LPartition>,
}

impl DInverseTable {
    pub fn build(l: usize) -> Result<Self> {
        if l > D_INVERSE_MAX_RANK {
            return Err(Error::RankOutOfBounds {
                rank: l,
                max: D_INVERSE_MAX_RANK,
            });
        }
        let map = enumerate_partitions(l)?
            .into_iter()
            .map(|lambda| (d_map(&lambda), lambda))
            .collect();
        Ok(DInverseTable { l, map })
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn lookup(&self, path: &DyckPath) -> Result<&LPartition> {
        if path.half_length() != self.l + 1 {
            return Err(Error::HalfLengthMismatch {
                expected: self.l + 1,
                found: path.half_length(),
            });
        }
        Ok(self
            .map
            .get(path)
            .expect("d_map is onto the Dyck paths of half-length l + 1"))
    }
}

static D_INVERSE_TABLES: [OnceLock<DInverseTable>; D_INVERSE_MAX_RANK + 1] =
    [const { OnceLock::new() }; D_INVERSE_MAX_RANK + 1];

/// Preimage of `path` under [`d_map`], via a table built once per rank.
pub fn d_inverse(path: &DyckPath, l: usize) -> Result<LPartition> {
    if l > D_INVERSE_MAX_RANK {
        return Err(Error::RankOutOfBounds {
            rank: l,
            max: D_INVERSE_MAX_RANK,
        });
    }
    if path.half_length() != l + 1 {
        return Err(Error::HalfLengthMismatch {
            expected: l + 1,
            found: path.half_length(),
        });
    }
    if l == 0 {
        return Err(Error::InvalidPartition {
            l,
            parts: vec![],
            reason: "rank must be positive".into(),
        });
    }
    let table = D_INVERSE_TABLES[l]
        .get_or_init(|| DInverseTable::build(l).expect("rank checked above"));
    table.lookup(path).cloned()
}

/// How the non-`u`-peak entries are selected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LedgerMode {
    /// Keep only entries that actually receive an insertion (`a ≠ 0`).
    #[default]
    Standard,
    /// Keep zero entries of the word as well. Wrong on purpose; used to
    /// check that the verification harness notices.
    KeepZeroEntries,
}

pub type Entry = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UduLedger {
    l: usize,
    nonzero: BTreeSet<Entry>,
    lower: BTreeSet<Entry>,
    upper: BTreeSet<Entry>,
    running: Vec<i64>,
}

impl UduLedger {
    /// `𝒜`: pairs `(j, t)`, `j ≤ k`, with `a_{j,t} ≠ 0`.
    pub fn nonzero(&self) -> &BTreeSet<Entry> {
        &self.nonzero
    }

    /// `𝓛`: entries inserted on a highest peak that is not a `u`-peak.
    pub fn lower(&self) -> &BTreeSet<Entry> {
        &self.lower
    }

    /// `𝒰 = 𝒜 \ 𝓛`.
    pub fn upper(&self) -> &BTreeSet<Entry> {
        &self.upper
    }

    /// `u_1, …, u_{k+1}`: `u`-peak counts of the intermediate paths.
    pub fn running(&self) -> &[i64] {
        &self.running
    }

    /// `l - 2#𝒰 - #𝓛`.
    pub fn predicted_udu(&self) -> i64 {
        self.l as i64 - 2 * self.upper.len() as i64 - self.lower.len() as i64
    }
}

pub fn udu_ledger(lambda: &LPartition) -> UduLedger {
    udu_ledger_with(lambda, LedgerMode::Standard)
}

pub fn udu_ledger_with(lambda: &LPartition, mode: LedgerMode) -> UduLedger {
    let words = insertion_words(lambda);
    let l = lambda.rank();
    let k = words.profile.k();

    let mut nonzero = BTreeSet::new();
    for j in 1..=k {
        for (t, &a) in words.row(j).iter().enumerate() {
            if a != 0 {
                nonzero.insert((j, t));
            }
        }
    }

    // the (t+1)-th highest peak of D_{p+1} ends a group of inserted peaks
    // exactly when t + 1 is a partial sum of row p + 1
    let mut lower = BTreeSet::new();
    for p in 1..=k {
        let mut acc = 0;
        for &a in words.row(p + 1) {
            acc += a;
            if acc == 0 {
                continue;
            }
            let entry = (p, acc - 1);
            let keep = match mode {
                LedgerMode::Standard => nonzero.contains(&entry),
                LedgerMode::KeepZeroEntries => acc - 1 <= words.h(p),
            };
            if keep {
                lower.insert(entry);
            }
        }
    }
    let upper: BTreeSet<Entry> = nonzero.difference(&lower).copied().collect();

    let mut running = vec![0i64; k + 1];
    running[k] = l as i64 - lambda.part(1) as i64;
    for j in (1..=k).rev() {
        let a = |e: &Entry| words.a(e.0, e.1) as i64;
        let gain: i64 = upper.iter().filter(|e| e.0 == j).map(|e| a(e) - 2).sum::<i64>()
            + lower.iter().filter(|e| e.0 == j).map(|e| a(e) - 1).sum::<i64>();
        running[j - 1] = running[j] + gain;
    }

    UduLedger {
        l,
        nonzero,
        lower,
        upper,
        running,
    }
}

/// `l + 1 - #𝒜`, the number of peaks of `D(λ)`.
pub fn predicted_peaks(lambda: &LPartition) -> usize {
    lambda.rank() + 1 - udu_ledger(lambda).nonzero.len()
}

/// One line `D<j> <path>` per intermediate path, `j = k+1` down to `1`.
pub fn steps_text(lambda: &LPartition) -> String {
    let steps = d_map_steps(lambda);
    let top = steps.len();
    steps
        .iter()
        .enumerate()
        .map(|(n, path)| format!("D{} {path}\n", top - n))
        .collect()
}

/// Debug/golden dump `{"l","k","i","a","h"}` of a partition's construction data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileDump {
    pub l: usize,
    pub k: usize,
    pub i: Vec<usize>,
    pub a: Vec<Vec<usize>>,
    pub h: Vec<usize>,
}

impl ProfileDump {
    pub fn new(lambda: &LPartition) -> Self {
        let words = insertion_words(lambda);
        let profile = words.profile();
        ProfileDump {
            l: profile.rank(),
            k: profile.k(),
            i: profile.chain().to_vec(),
            a: words.rows().to_vec(),
            h: (1..=profile.k() + 1).map(|j| words.h(j)).collect(),
        }
    }
}
