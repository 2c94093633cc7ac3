//! Ground truth for ideal membership: realise a root ideal and the
//! parabolic subalgebra `p_I` with matrix units of `gl_{l+1}` and check
//! closure under brackets symbolically.
//!
//! `[E_ab, E_cd] = δ_bc E_ad - δ_da E_cb`. Elements are sparse integer
//! combinations of matrix units; nothing here uses floating point.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::roots::{RootIdeal, SimpleSubset};

/// Largest rank accepted by [`is_lie_ideal`] (matrices up to 7×7).
pub const MAX_LIE_RANK: usize = 6;

pub type Unit = (usize, usize);

/// Sparse integer combination of matrix units.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Combination {
    terms: BTreeMap<Unit, i64>,
}

impl Combination {
    pub fn unit(u: Unit) -> Self {
        Combination {
            terms: BTreeMap::from([(u, 1)]),
        }
    }

    /// Torus generator `E_aa - E_{a+1,a+1}`.
    pub fn coroot(a: usize) -> Self {
        Combination {
            terms: BTreeMap::from([((a, a), 1), ((a + 1, a + 1), -1)]),
        }
    }

    fn add(&mut self, u: Unit, coeff: i64) {
        let slot = self.terms.entry(u).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&u);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Unit, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn bracket(&self, other: &Combination) -> Combination {
        let mut out = Combination::default();
        for (&(a, b), &x) in &self.terms {
            for (&(c, d), &y) in &other.terms {
                if b == c {
                    out.add((a, d), x * y);
                }
                if d == a {
                    out.add((c, b), -x * y);
                }
            }
        }
        out
    }
}

/// Matrix units spanning a subspace of `gl_{l+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixUnitSet {
    l: usize,
    units: BTreeSet<Unit>,
    include_diagonal: bool,
}

impl MatrixUnitSet {
    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn units(&self) -> &BTreeSet<Unit> {
        &self.units
    }

    pub fn include_diagonal(&self) -> bool {
        self.include_diagonal
    }

    pub fn is_strictly_upper(&self) -> bool {
        !self.include_diagonal && self.units.iter().all(|&(a, b)| a < b)
    }

    /// Whether every unit of `combo` is one of ours (diagonal units only
    /// when the torus is included).
    pub fn spans(&self, combo: &Combination) -> bool {
        combo
            .terms
            .keys()
            .all(|&(a, b)| if a == b { self.include_diagonal } else { self.units.contains(&(a, b)) })
    }
}

/// `α_{i,j} ↦ E_{i,j+1}`.
pub fn ideal_units(ideal: &RootIdeal) -> MatrixUnitSet {
    MatrixUnitSet {
        l: ideal.rank(),
        units: ideal.roots().iter().map(|r| r.eps()).collect(),
        include_diagonal: false,
    }
}

/// Off-diagonal units of `p_I`: all `(a, b)` with `a < b`, plus the
/// negative root units of `Δ_I`. The torus is implied.
pub fn parabolic_units(subset: &SimpleSubset) -> MatrixUnitSet {
    let n = subset.rank() + 1;
    let units = (1..=n)
        .flat_map(|a| (1..=n).map(move |b| (a, b)))
        .filter(|&(a, b)| a < b || (a > b && subset.spans((a, b))))
        .collect();
    MatrixUnitSet {
        l: subset.rank(),
        units,
        include_diagonal: true,
    }
}

/// Checks that the span of [`ideal_units`] is an ideal of `p_I` by
/// bracketing every basis element of `p_I` against every ideal unit.
pub fn is_lie_ideal(ideal: &RootIdeal, subset: &SimpleSubset) -> Result<bool> {
    let l = ideal.rank();
    if l > MAX_LIE_RANK {
        return Err(Error::RankOutOfBounds { rank: l, max: MAX_LIE_RANK });
    }
    if subset.rank() != l {
        return Err(Error::OutOfRange {
            what: "simple subset rank",
            detail: format!("{} for an ideal of rank {l}", subset.rank()),
        });
    }
    // Φ ⊆ Δ^+ \ Δ_I
    if ideal.roots().iter().any(|r| subset.spans(r.eps())) {
        return Ok(false);
    }
    let target = ideal_units(ideal);
    let parabolic = parabolic_units(subset);
    let basis: Vec<Combination> = parabolic
        .units
        .iter()
        .map(|&u| Combination::unit(u))
        .chain((1..=l).map(Combination::coroot))
        .collect();
    for &y in target.units() {
        let y = Combination::unit(y);
        for x in &basis {
            if !target.spans(&x.bracket(&y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
