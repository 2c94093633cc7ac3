//! Closed-form counts and brute-force census tables.

use std::fmt;

use crate::insertion::d_map;
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::partition::enumerate_partitions;
use crate::roots::enumerate_ideals;

/// Largest rank accepted by [`census`].
pub const MAX_CENSUS_RANK: usize = 10;

fn overflow(what: String) -> Error {
    Error::Overflow(what)
}

/// Exact binomial coefficient, `0` when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| overflow(format!("C({n},{k})")))?
            / (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| overflow(format!("C({n},{k})")))
}

/// `C_k = C(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> Result<u64> {
    let mut c: u128 = 1;
    for n in 0..k {
        // C_{n+1} = C_n · 2(2n+1) / (n+2)
        c = c
            .checked_mul(2 * (2 * n as u128 + 1))
            .ok_or_else(|| overflow(format!("Catalan({k})")))?
            / (n as u128 + 2);
        if c > u64::MAX as u128 {
            return Err(overflow(format!("Catalan({k})")));
        }
    }
    Ok(c as u64)
}

/// Number of root ideals of rank `l` with `#I_Φ = r`:
/// `C(l, r) · Σ_{k=0}^{⌊(l-r)/2⌋} C(l-r, 2k) · C_k`.
pub fn n_r_l(l: u64, r: u64) -> Result<u64> {
    if r > l {
        return Err(Error::OutOfRange {
            what: "r",
            detail: format!("{r} > l = {l}"),
        });
    }
    let m = l - r;
    let mut sum: u64 = 0;
    for k in 0..=m / 2 {
        let term = binomial(m, 2 * k)?
            .checked_mul(catalan(k)?)
            .ok_or_else(|| overflow(format!("N_{r}^{l}")))?;
        sum = sum.checked_add(term).ok_or_else(|| overflow(format!("N_{r}^{l}")))?;
    }
    binomial(l, r)?
        .checked_mul(sum)
        .ok_or_else(|| overflow(format!("N_{r}^{l}")))
}

/// `N(n, k) = C(n, k) · C(n, k-1) / n`.
pub fn narayana(n: u64, k: u64) -> Result<u64> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "Narayana index",
            detail: format!("k = {k} outside 1..={n}"),
        });
    }
    let product = (binomial(n, k)? as u128) * (binomial(n, k - 1)? as u128);
    u64::try_from(product / n as u128).map_err(|_| overflow(format!("N({n},{k})")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusSource {
    Formula,
    /// `udu` count of `D(λ)` over all staircase partitions.
    UduCensus,
    /// `#I_Φ` over all root ideals.
    IdealCensus,
}

impl CensusSource {
    pub fn tag(self) -> &'static str {
        match self {
            CensusSource::Formula => "formula",
            CensusSource::UduCensus => "udu-census",
            CensusSource::IdealCensus => "ideal-census",
        }
    }
}

impl fmt::Display for CensusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Histogram `counts[r]`, `r = 0..=l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub l: usize,
    pub counts: Vec<u64>,
    pub source: CensusSource,
}

impl CensusTable {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Rows `l,r,count,source` without the header.
    pub fn csv_rows(&self) -> impl Iterator<Item = String> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(move |(r, c)| format!("{},{},{},{}", self.l, r, c, self.source))
    }
}

pub const CSV_HEADER: &str = "l,r,count,source";

pub fn formula_table(l: usize) -> Result<CensusTable> {
    let counts = (0..=l as u64)
        .map(|r| n_r_l(l as u64, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusTable {
        l,
        counts,
        source: CensusSource::Formula,
    })
}

/// Brute-force histogram of one of the two equidistributed statistics.
pub fn census(l: usize, source: CensusSource, exec: Exec) -> Result<CensusTable> {
    if l > MAX_CENSUS_RANK {
        return Err(Error::RankOutOfBounds {
            rank: l,
            max: MAX_CENSUS_RANK,
        });
    }
    let values: Vec<usize> = match source {
        CensusSource::Formula => return formula_table(l),
        CensusSource::UduCensus => {
            exec::map(exec, &enumerate_partitions(l)?, |lambda| d_map(lambda).count_udu())
        }
        CensusSource::IdealCensus => {
            exec::map(exec, &enumerate_ideals(l)?, |ideal| ideal.i_max().len())
        }
    };
    let mut counts = vec![0u64; l + 1];
    for v in values {
        counts[v] += 1;
    }
    Ok(CensusTable { l, counts, source })
}

/// `counts[p]` = number of root ideals with `#Φ_min = p`.
pub fn antichain_size_census(l: usize, exec: Exec) -> Result<Vec<u64>> {
    let sizes = exec::map(exec, &enumerate_ideals(l)?, |ideal| ideal.phi_min().len());
    let mut counts = vec![0u64; l + 1];
    for s in sizes {
        counts[s] += 1;
    }
    Ok(counts)
}
