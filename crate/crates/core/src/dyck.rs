//! Dyck paths over the alphabet `{u, d}` and their peak statistics.
//!
//! A path is stored as a vector of [`Step`]s. The canonical text form is the
//! lowercase word (`"uuddud"`); parsing also accepts uppercase letters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest half-length accepted by [`enumerate_dyck`].
pub const MAX_HALF_LENGTH: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'u',
            Step::D => 'd',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "DyckJson", into = "DyckJson")]
pub struct DyckPath {
    steps: Vec<Step>,
}

#[derive(Serialize, Deserialize)]
struct DyckJson {
    n: usize,
    word: String,
}

impl TryFrom<DyckJson> for DyckPath {
    type Error = Error;

    fn try_from(value: DyckJson) -> Result<Self> {
        let path: DyckPath = value.word.parse()?;
        if path.half_length() != value.n {
            return Err(Error::HalfLengthMismatch {
                expected: value.n,
                found: path.half_length(),
            });
        }
        Ok(path)
    }
}

impl From<DyckPath> for DyckJson {
    fn from(path: DyckPath) -> Self {
        DyckJson {
            n: path.half_length(),
            word: path.to_string(),
        }
    }
}

impl DyckPath {
    /// Validates a step sequence. Positions in errors are 1-based.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0usize;
        let mut ups = 0usize;
        for (idx, step) in steps.iter().enumerate() {
            match step {
                Step::U => {
                    height += 1;
                    ups += 1;
                }
                Step::D => {
                    if height == 0 {
                        return Err(Error::NegativePrefix { position: idx + 1 });
                    }
                    height -= 1;
                }
            }
        }
        if height != 0 {
            return Err(Error::Unbalanced {
                position: steps.len(),
                ups,
                downs: steps.len() - ups,
            });
        }
        Ok(DyckPath { steps })
    }

    /// The empty path of half-length zero.
    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// `(ud)^n`
    pub fn zigzag(n: usize) -> Self {
        DyckPath {
            steps: [Step::U, Step::D].repeat(n),
        }
    }

    /// `u^n d^n`
    pub fn pyramid(n: usize) -> Self {
        let mut steps = vec![Step::U; n];
        steps.resize(2 * n, Step::D);
        DyckPath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn half_length(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Start indices of every `ud` factor, left to right.
    pub fn peak_positions(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w == &[Step::U, Step::D])
            .map(|(idx, _)| idx)
            .collect()
    }

    pub fn count_peaks(&self) -> usize {
        self.peak_positions().len()
    }

    /// Number of `udu` factors, overlapping occurrences included.
    pub fn count_udu(&self) -> usize {
        self.steps
            .windows(3)
            .filter(|w| w == &[Step::U, Step::D, Step::U])
            .count()
    }

    /// Peaks immediately followed by an up step.
    pub fn count_u_peaks(&self) -> usize {
        self.peak_positions()
            .into_iter()
            .filter(|&idx| self.steps.get(idx + 2) == Some(&Step::U))
            .count()
    }

    pub fn max_height(&self) -> usize {
        let mut height = 0usize;
        let mut best = 0usize;
        for step in &self.steps {
            match step {
                Step::U => {
                    height += 1;
                    best = best.max(height);
                }
                Step::D => height -= 1,
            }
        }
        best
    }

    /// Start indices of the peaks reaching the maximal height, left to right.
    pub fn highest_peak_positions(&self) -> Vec<usize> {
        let top = self.max_height();
        let mut height = 0usize;
        let mut out = Vec::new();
        for (idx, step) in self.steps.iter().enumerate() {
            match step {
                Step::U => {
                    height += 1;
                    // reaching the maximum means the next step is necessarily D
                    if height == top {
                        out.push(idx);
                    }
                }
                Step::D => height -= 1,
            }
        }
        out
    }

    /// Replaces the `q`-th (1-based) highest peak `ud` by `u(ud)^m d`.
    pub fn insert_peaks(&self, q: usize, m: usize) -> Result<DyckPath> {
        if m == 0 {
            return Err(Error::ZeroInsertion);
        }
        let available = self.highest_peak_positions().len();
        if q == 0 || q > available {
            return Err(Error::PeakOutOfRange {
                requested: q,
                available,
            });
        }
        let mut counts = vec![0; q];
        counts[q - 1] = m;
        self.insert_on_highest(&counts)
    }

    /// Inserts `counts[t]` peaks on the `(t+1)`-th highest peak of `self`,
    /// all positions taken from `self` before any insertion happens.
    /// Zero entries leave their peak untouched.
    pub fn insert_on_highest(&self, counts: &[usize]) -> Result<DyckPath> {
        let targets = self.highest_peak_positions();
        if counts.len() > targets.len() {
            return Err(Error::PeakOutOfRange {
                requested: counts.len(),
                available: targets.len(),
            });
        }
        let extra: usize = counts.iter().sum();
        let mut steps = Vec::with_capacity(self.steps.len() + 2 * extra);
        let mut cursor = 0;
        for (&pos, &m) in targets.iter().zip(counts) {
            if m == 0 {
                continue;
            }
            steps.extend_from_slice(&self.steps[cursor..pos]);
            steps.push(Step::U);
            for _ in 0..m {
                steps.push(Step::U);
                steps.push(Step::D);
            }
            steps.push(Step::D);
            cursor = pos + 2;
        }
        steps.extend_from_slice(&self.steps[cursor..]);
        Ok(DyckPath { steps })
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: String = self.steps.iter().map(|s| s.as_char()).collect();
        f.write_str(&word)
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let steps = text
            .chars()
            .enumerate()
            .map(|(idx, ch)| match ch {
                'u' | 'U' => Ok(Step::U),
                'd' | 'D' => Ok(Step::D),
                other => Err(Error::IllegalChar {
                    position: idx + 1,
                    found: other,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::from_steps(steps)
    }
}

/// Lazy enumeration of all Dyck paths of a given half-length in
/// lexicographic order with `u < d`.
#[derive(Debug, Clone)]
pub struct DyckIter {
    current: Option<Vec<Step>>,
}

impl DyckIter {
    pub fn new(n: usize) -> Self {
        DyckIter {
            current: Some(DyckPath::pyramid(n).steps),
        }
    }
}

impl Iterator for DyckIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let steps = self.current.take()?;
        let out = DyckPath {
            steps: steps.clone(),
        };
        self.current = successor(steps);
        Some(out)
    }
}

/// Next word in lexicographic order: flip the rightmost `u` that can become
/// `d` without going negative, then refill with `u^a d^b`.
fn successor(mut steps: Vec<Step>) -> Option<Vec<Step>> {
    let n = steps.len() / 2;
    let mut heights = Vec::with_capacity(steps.len());
    let mut ups_before = Vec::with_capacity(steps.len());
    let (mut h, mut ups) = (0usize, 0usize);
    for step in &steps {
        heights.push(h);
        ups_before.push(ups);
        match step {
            Step::U => {
                h += 1;
                ups += 1;
            }
            Step::D => h -= 1,
        }
    }
    let pivot = (0..steps.len())
        .rev()
        .find(|&i| steps[i] == Step::U && heights[i] >= 1)?;
    steps[pivot] = Step::D;
    let remaining_ups = n - ups_before[pivot];
    for (offset, slot) in steps[pivot + 1..].iter_mut().enumerate() {
        *slot = if offset < remaining_ups { Step::U } else { Step::D };
    }
    Some(steps)
}

/// All Dyck paths of half-length `n`, lexicographic with `u < d`.
pub fn enumerate_dyck(n: usize) -> Result<Vec<DyckPath>> {
    if n > MAX_HALF_LENGTH {
        return Err(Error::RankOutOfBounds {
            rank: n,
            max: MAX_HALF_LENGTH,
        });
    }
    Ok(DyckIter::new(n).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    // independent oracle: filter all 2^(2n) words
    fn brute_force(n: usize) -> Vec<String> {
        let len = 2 * n;
        let mut out = Vec::new();
        for mask in 0u32..(1 << len) {
            // bit set = d; iterate masks so that u < d in lexicographic order
            let word: String = (0..len)
                .map(|i| if mask >> (len - 1 - i) & 1 == 1 { 'd' } else { 'u' })
                .collect();
            let mut h = 0i32;
            let ok = word.chars().all(|c| {
                h += if c == 'u' { 1 } else { -1 };
                h >= 0
            }) && h == 0;
            if ok {
                out.push(word);
            }
        }
        out
    }

    #[test]
    fn parse_accepts_valid_words() {
        assert_eq!(p("ud").half_length(), 1);
        // u^3 d u^3 d^2 u d^2 u d^3
        let boundary = p("uuuduuudduddu ddd".replace(' ', "").as_str());
        assert_eq!(boundary.half_length(), 8);
        assert_eq!(p("UudD").to_string(), "uudd");
    }

    #[test]
    fn parse_errors_name_positions() {
        assert_eq!("udd".parse::<DyckPath>(), Err(Error::NegativePrefix { position: 3 }));
        assert_eq!(
            "uxd".parse::<DyckPath>(),
            Err(Error::IllegalChar { position: 2, found: 'x' })
        );
        assert_eq!(
            "uud".parse::<DyckPath>(),
            Err(Error::Unbalanced { position: 3, ups: 2, downs: 1 })
        );
        assert_eq!("".parse::<DyckPath>(), Err(Error::EmptyWord));
        // numeric step codes are not an input format
        assert!("3344".parse::<DyckPath>().is_err());
    }

    #[test]
    fn peak_counts() {
        assert_eq!(DyckPath::zigzag(4).count_peaks(), 4);
        assert_eq!(p("uuddudud").count_peaks(), 3);
        assert_eq!(DyckPath::pyramid(6).count_peaks(), 1);
    }

    #[test]
    fn udu_counts() {
        let d_lambda = p("uuduudddu ududdud".replace(' ', "").as_str());
        assert_eq!(d_lambda.count_udu(), 2);
        assert_eq!(d_lambda.count_u_peaks(), 2);
        for l in 1..6 {
            assert_eq!(DyckPath::zigzag(l + 1).count_udu(), l);
        }
        assert_eq!(p("uudd").count_udu(), 0);
        assert_eq!(DyckPath::zigzag(3).count_u_peaks(), 2);
        assert_eq!(DyckPath::pyramid(3).count_u_peaks(), 0);
    }

    #[test]
    fn insertion_examples() {
        let d3 = DyckPath::zigzag(3);
        assert_eq!(d3.insert_peaks(1, 2).unwrap().to_string(), "uududdudud");
        assert_eq!(p("ud").insert_peaks(1, 1).unwrap().to_string(), "uudd");
        let d2 = p("uududduududdud");
        assert_eq!(
            d2.insert_peaks(2, 1).unwrap().to_string(),
            "uuduudddu ududdud".replace(' ', "")
        );
        assert_eq!(
            d3.insert_peaks(4, 1),
            Err(Error::PeakOutOfRange { requested: 4, available: 3 })
        );
        assert_eq!(d3.insert_peaks(1, 0), Err(Error::ZeroInsertion));
    }

    #[test]
    fn batch_insertion_uses_original_peaks() {
        let d3 = DyckPath::zigzag(3);
        assert_eq!(
            d3.insert_on_highest(&[2, 2, 0]).unwrap().to_string(),
            "uududduududdud"
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=6 {
            let ours: Vec<String> = enumerate_dyck(n).unwrap().iter().map(|d| d.to_string()).collect();
            assert_eq!(ours, brute_force(n), "n = {n}");
        }
        assert_eq!(enumerate_dyck(1).unwrap(), vec![p("ud")]);
        assert_eq!(enumerate_dyck(3).unwrap().len(), 5);
        assert_eq!(enumerate_dyck(8).unwrap().len(), 1430);
        assert!(enumerate_dyck(MAX_HALF_LENGTH + 1).is_err());
    }

    #[test]
    fn json_form() {
        let json = serde_json::to_string(&p("uudd")).unwrap();
        assert_eq!(json, r#"{"n":2,"word":"uudd"}"#);
        let back: DyckPath = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p("uudd"));
        assert!(serde_json::from_str::<DyckPath>(r#"{"n":3,"word":"uudd"}"#).is_err());
    }

    fn arb_dyck() -> impl Strategy<Value = DyckPath> {
        (1usize..=9).prop_flat_map(|n| {
            let all = enumerate_dyck(n).unwrap();
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn peak_statistics_are_consistent(path in arb_dyck()) {
            let peaks = path.count_peaks();
            prop_assert_eq!(path.count_udu(), path.count_u_peaks());
            prop_assert!(peaks >= 1 && peaks <= path.half_length());
            prop_assert!(path.count_udu() < peaks);
        }

        #[test]
        fn insertion_round_trips(path in arb_dyck(), m in 1usize..4, pick in 0usize..16) {
            let q = 1 + pick % path.highest_peak_positions().len();
            let grown = path.insert_peaks(q, m).unwrap();
            prop_assert_eq!(grown.len(), path.len() + 2 * m);
            prop_assert_eq!(grown.max_height(), path.max_height() + 1);
            let reparsed: DyckPath = grown.to_string().parse().unwrap();
            prop_assert_eq!(reparsed, grown);
        }
    }
}
