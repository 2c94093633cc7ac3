//! Partitions fitting inside the staircase `(l, l-1, ..., 1)` and the
//! boundary-reading bijection with Dyck paths of half-length `l + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};

/// Largest rank accepted by [`enumerate_partitions`].
pub const MAX_RANK: usize = 16;

/// A weakly decreasing sequence `λ_1 ≥ … ≥ λ_l ≥ 0` with `λ_i ≤ l + 1 - i`.
///
/// Trailing zeros are kept, so `parts().len() == l` always.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionJson", into = "PartitionJson")]
pub struct LPartition {
    parts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    l: usize,
    parts: Vec<usize>,
}

impl TryFrom<PartitionJson> for LPartition {
    type Error = Error;

    fn try_from(value: PartitionJson) -> Result<Self> {
        LPartition::new(value.l, value.parts)
    }
}

impl From<LPartition> for PartitionJson {
    fn from(lambda: LPartition) -> Self {
        PartitionJson {
            l: lambda.rank(),
            parts: lambda.parts,
        }
    }
}

impl LPartition {
    pub fn new(l: usize, parts: Vec<usize>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidPartition {
            l,
            parts: parts.clone(),
            reason,
        };
        if l == 0 {
            return Err(invalid("rank must be positive".into()));
        }
        if parts.len() != l {
            return Err(invalid(format!("expected {l} parts, got {}", parts.len())));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(invalid(format!("part {} is smaller than part {}", i + 1, i + 2)));
        }
        if let Some(i) = parts.iter().enumerate().position(|(i, &v)| v > l - i) {
            return Err(invalid(format!(
                "part {} exceeds the staircase bound {}",
                i + 1,
                l - i
            )));
        }
        Ok(LPartition { parts })
    }

    pub fn zero(l: usize) -> Self {
        LPartition { parts: vec![0; l] }
    }

    /// The full staircase `(l, l-1, …, 1)`.
    pub fn staircase(l: usize) -> Self {
        LPartition {
            parts: (1..=l).rev().collect(),
        }
    }

    /// Parses `"5,3,1,1,1,0,0"`; the number of parts must equal `l`.
    pub fn parse(l: usize, text: &str) -> Result<Self> {
        let parts = text
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                    token: tok.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LPartition::new(l, parts)
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "partition rows are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Componentwise containment of Ferrers diagrams.
    pub fn contains(&self, other: &LPartition) -> bool {
        self.parts.len() == other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b)
    }

    /// Number of south-east corners: rows `i` with `λ_i > λ_{i+1}`.
    pub fn corners(&self) -> usize {
        (1..=self.rank())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .count()
    }

    /// Boundary word `Π_{i=l..0} u d^{λ_i - λ_{i+1}}` with `λ_0 = l + 1`.
    pub fn p_map(&self) -> DyckPath {
        let l = self.rank();
        let at = |i: usize| if i == 0 { l + 1 } else { self.part(i) };
        let mut steps = Vec::with_capacity(2 * l + 2);
        for i in (0..=l).rev() {
            steps.push(Step::U);
            steps.extend(std::iter::repeat_n(Step::D, at(i) - at(i + 1)));
        }
        DyckPath::from_steps(steps).expect("boundary word of a staircase partition is a Dyck path")
    }

    /// Inverse of [`LPartition::p_map`].
    pub fn p_inverse(path: &DyckPath, l: usize) -> Result<Self> {
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
        // run lengths of d after each u, in path order: c_l, c_{l-1}, …, c_0
        let mut runs: Vec<usize> = Vec::with_capacity(l + 1);
        for step in path.steps() {
            match step {
                Step::U => runs.push(0),
                Step::D => *runs.last_mut().expect("Dyck path starts with u") += 1,
            }
        }
        let mut parts = vec![0; l];
        let mut acc = 0;
        // runs[0] = c_l, runs[l - i] = c_i
        for i in (1..=l).rev() {
            acc += runs[l - i];
            parts[i - 1] = acc;
        }
        LPartition::new(l, parts)
    }
}

impl fmt::Display for LPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

/// All `l`-partitions, lexicographically descending by part sequence.
pub fn enumerate_partitions(l: usize) -> Result<Vec<LPartition>> {
    if l > MAX_RANK {
        return Err(Error::RankOutOfBounds { rank: l, max: MAX_RANK });
    }
    if l == 0 {
        return Err(Error::InvalidPartition {
            l,
            parts: vec![],
            reason: "rank must be positive".into(),
        });
    }
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(l);
    fill(l, l + 1, &mut parts, &mut out);
    Ok(out)
}

fn fill(l: usize, ceiling: usize, parts: &mut Vec<usize>, out: &mut Vec<LPartition>) {
    let row = parts.len();
    if row == l {
        out.push(LPartition { parts: parts.clone() });
        return;
    }
    let top = ceiling.min(l - row);
    for v in (0..=top).rev() {
        parts.push(v);
        fill(l, v, parts, out);
        parts.pop();
    }
}
