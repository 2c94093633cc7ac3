//! Exhaustive verification suites over every object up to a rank bound.
//!
//! Each suite walks all partitions, paths or ideals of rank `1..=bound` and
//! stops at the first counterexample, which is reported as JSON.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use serde_json::json;

use crate::insertion::{d_map, insertion_words, udu_ledger_with, LedgerMode};
use crate::convert::{self, Repr};
use crate::counting::{antichain_size_census, catalan, census, formula_table, narayana, CensusSource};
use crate::dyck::{enumerate_dyck, DyckPath};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::lie::is_lie_ideal;
use crate::partition::{enumerate_partitions, LPartition};
use crate::roots::{enumerate_ideals, RootIdeal, SimpleSubset};

pub const MAX_VERIFY_RANK: usize = 10;
pub const MAX_VERIFY_LIE_RANK: usize = 5;
const MAX_CHASE_RANK: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_l: usize,
    pub lie_max_l: usize,
    pub exec: Exec,
    pub ledger_mode: LedgerMode,
}

impl VerifyConfig {
    pub fn new(max_l: usize, lie_max_l: usize) -> Self {
        VerifyConfig {
            max_l,
            lie_max_l,
            exec: Exec::default(),
            ledger_mode: LedgerMode::Standard,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
    /// `(l, number of root ideals)` for every rank swept.
    pub ideals_per_rank: Vec<(usize, usize)>,
    /// Observations that are reported but never asserted.
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn first_failure(&self) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| !s.passed())
    }
}

type Outcome = Result<(usize, Option<String>)>;

/// Runs `check` on every item at every rank, stopping at the first failure.
fn sweep<T, F>(exec: Exec, ranks: impl IntoIterator<Item = usize>, items: impl Fn(usize) -> Result<Vec<T>>, check: F) -> Outcome
where
    T: Sync,
    F: Fn(usize, &T) -> Option<serde_json::Value> + Sync + Send,
{
    let mut checked = 0;
    for l in ranks {
        let all = items(l)?;
        if let Some(bad) = exec::first_failure(exec, &all, |item| check(l, item)) {
            return Ok((checked, Some(bad.to_string())));
        }
        checked += all.len();
    }
    Ok((checked, None))
}

fn ideal_json(ideal: &RootIdeal) -> serde_json::Value {
    serde_json::to_value(ideal).expect("ideal serializes")
}

fn partition_json(lambda: &LPartition) -> serde_json::Value {
    serde_json::to_value(lambda).expect("partition serializes")
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.max_l == 0 || config.max_l > MAX_VERIFY_RANK {
        return Err(Error::OutOfRange {
            what: "max-l",
            detail: format!("{} outside 1..={MAX_VERIFY_RANK}", config.max_l),
        });
    }
    if config.lie_max_l > MAX_VERIFY_LIE_RANK {
        return Err(Error::OutOfRange {
            what: "lie-max-l",
            detail: format!("{} outside 0..={MAX_VERIFY_LIE_RANK}", config.lie_max_l),
        });
    }
    let exec = config.exec;
    let mode = config.ledger_mode;
    let ranks = 1..=config.max_l;
    let mut report = VerifyReport::default();

    let mut record = |name: &'static str, suite: &dyn Fn() -> Outcome| -> Result<()> {
        let start = Instant::now();
        let (checked, counterexample) = suite()?;
        report.suites.push(SuiteReport {
            name,
            checked,
            counterexample,
            elapsed: start.elapsed(),
        });
        Ok(())
    };

    record("dyck-statistics", &|| {
        sweep(exec, ranks.clone(), |l| enumerate_dyck(l + 1), |_, path: &DyckPath| {
            let peaks = path.count_peaks();
            let ok = path.count_udu() == path.count_u_peaks()
                && (1..=path.half_length()).contains(&peaks)
                && path.count_udu() < peaks;
            (!ok).then(|| json!({ "path": path, "udu": path.count_udu(), "u_peaks": path.count_u_peaks(), "peaks": peaks }))
        })
    })?;

    record("enumeration-counts", &|| {
        let mut checked = 0;
        for l in ranks.clone() {
            let expected = catalan(l as u64 + 1)? as usize;
            let counts = [
                enumerate_dyck(l + 1)?.len(),
                enumerate_partitions(l)?.len(),
                enumerate_ideals(l)?.len(),
            ];
            if counts.iter().any(|&c| c != expected) {
                let bad = json!({ "l": l, "catalan": expected, "dyck": counts[0], "partitions": counts[1], "ideals": counts[2] });
                return Ok((checked, Some(bad.to_string())));
            }
            checked += 3 * expected;
        }
        Ok((checked, None))
    })?;

    record("boundary-bijection", &|| {
        let mut checked = 0;
        for l in ranks.clone() {
            let all = enumerate_partitions(l)?;
            let images: Vec<DyckPath> = exec::map(exec, &all, LPartition::p_map);
            let distinct: HashSet<&DyckPath> = images.iter().collect();
            if distinct.len() != all.len() {
                return Ok((checked, Some(json!({ "l": l, "distinct_images": distinct.len(), "partitions": all.len() }).to_string())));
            }
            let bad = exec::first_failure(exec, &all, |lambda| {
                let path = lambda.p_map();
                let back = LPartition::p_inverse(&path, l).ok();
                let ok = back.as_ref() == Some(lambda) && path.count_peaks() == lambda.corners() + 1;
                (!ok).then(|| json!({ "partition": partition_json(lambda), "path": path }))
            });
            if let Some(bad) = bad {
                return Ok((checked, Some(bad.to_string())));
            }
            checked += all.len();
        }
        Ok((checked, None))
    })?;

    record("insertion-bijection", &|| {
        let mut checked = 0;
        for l in ranks.clone() {
            let all = enumerate_partitions(l)?;
            let images: Vec<DyckPath> = exec::map(exec, &all, d_map);
            let distinct: HashSet<&DyckPath> = images.iter().collect();
            let wrong_length = images.iter().position(|p| p.half_length() != l + 1);
            if distinct.len() != all.len() || wrong_length.is_some() {
                let bad = json!({ "l": l, "distinct_images": distinct.len(), "partitions": all.len(), "wrong_length_at": wrong_length });
                return Ok((checked, Some(bad.to_string())));
            }
            checked += all.len();
        }
        Ok((checked, None))
    })?;

    record("insertion-words", &|| {
        sweep(exec, ranks.clone(), enumerate_partitions, |l, lambda| {
            let words = insertion_words(lambda);
            let prof = words.profile();
            let k = prof.k();
            let (max, min) = (prof.lambda_max(), prof.lambda_min());
            let mut ok = max.contains(lambda) && lambda.contains(&min);
            ok &= words.row(k + 1) == [l + 1 - prof.i(k as isize)];
            let mut total = 0;
            for j in 1..=k {
                let ji = j as isize;
                let sum: usize = words.row(j).iter().sum();
                ok &= sum == prof.i(ji) - prof.i(ji - 1);
                ok &= if j >= 2 {
                    words.h(j) == prof.i(ji + 1) - prof.i(ji) - 1
                } else {
                    words.h(j) < prof.i(ji + 1) - prof.i(ji)
                };
                total += sum;
            }
            ok &= total == lambda.part(1);
            (!ok).then(|| json!({ "partition": partition_json(lambda), "chain": prof.chain(), "a": words.rows() }))
        })
    })?;

    record("udu-prediction", &|| {
        sweep(exec, ranks.clone(), enumerate_partitions, |_, lambda| {
            let ledger = udu_ledger_with(lambda, mode);
            let actual = d_map(lambda).count_udu() as i64;
            let ok = ledger.predicted_udu() == actual && ledger.running()[0] == actual;
            (!ok).then(|| {
                json!({
                    "partition": partition_json(lambda),
                    "predicted": ledger.predicted_udu(),
                    "actual": actual,
                    "lower": ledger.lower(),
                    "upper": ledger.upper(),
                })
            })
        })
    })?;

    record("peak-prediction", &|| {
        sweep(exec, ranks.clone(), enumerate_partitions, |l, lambda| {
            let nonzero = udu_ledger_with(lambda, mode).nonzero().len();
            let peaks = d_map(lambda).count_peaks();
            let ok = peaks == l + 1 - nonzero && nonzero == lambda.corners();
            (!ok).then(|| json!({ "partition": partition_json(lambda), "nonzero": nonzero, "peaks": peaks }))
        })
    })?;

    record("antichain-structure", &|| {
        sweep(exec, ranks.clone(), enumerate_ideals, |l, ideal| {
            let min = ideal.phi_min();
            let (lower, upper) = min.lu_split();
            let touched = min.starts().union(&min.ends()).count();
            let ok = min.starts().len() == min.len()
                && min.ends().len() == min.len()
                && touched == 2 * min.len() - lower.len()
                && ideal.i_max().len() == l - 2 * upper.len() - lower.len()
                && RootIdeal::from_antichain(&min, l) == *ideal
                && RootIdeal::from_partition(&ideal.sigma()) == *ideal;
            (!ok).then(|| ideal_json(ideal))
        })
    })?;

    record("udu-equals-imax", &|| {
        sweep(exec, ranks.clone(), enumerate_ideals, |_, ideal| {
            let udu = d_map(&ideal.sigma()).count_udu();
            let imax = ideal.i_max().len();
            (udu != imax).then(|| json!({ "ideal": ideal_json(ideal), "udu": udu, "imax": imax }))
        })
    })?;

    record("minimal-roots-vs-peaks", &|| {
        sweep(exec, ranks.clone(), enumerate_ideals, |l, ideal| {
            let lambda = ideal.sigma();
            let size = ideal.phi_min().len();
            let inserted_peaks = d_map(&lambda).count_peaks();
            let boundary_peaks = lambda.p_map().count_peaks();
            let ok = l + 1 - inserted_peaks == size && boundary_peaks - 1 == size;
            (!ok).then(|| json!({ "ideal": ideal_json(ideal), "minimal": size, "inserted_peaks": inserted_peaks, "boundary_peaks": boundary_peaks }))
        })
    })?;

    record("psi-bijection", &|| {
        sweep(exec, ranks.clone(), enumerate_ideals, |_, ideal| {
            let psi = ideal.psi_map();
            let ledger = udu_ledger_with(&ideal.sigma(), mode);
            let image: BTreeSet<_> = psi.values().copied().collect();
            let (lower, upper) = ideal.phi_min().lu_split();
            let lower_image: BTreeSet<_> = lower.iter().map(|r| psi[r]).collect();
            let upper_image: BTreeSet<_> = upper.iter().map(|r| psi[r]).collect();
            let ok = image.len() == psi.len()
                && &image == ledger.nonzero()
                && &lower_image == ledger.lower()
                && &upper_image == ledger.upper();
            (!ok).then(|| json!({ "ideal": ideal_json(ideal), "psi": psi.iter().map(|(r, e)| (r.to_string(), e)).collect::<Vec<_>>() }))
        })
    })?;

    record("duality", &|| {
        let mut checked = 0;
        for l in ranks.clone() {
            let all = enumerate_ideals(l)?;
            let duals = exec::map(exec, &all, RootIdeal::dual);
            let distinct: HashSet<&RootIdeal> = duals.iter().collect();
            if distinct.len() != all.len() {
                return Ok((checked, Some(json!({ "l": l, "distinct_duals": distinct.len(), "ideals": all.len() }).to_string())));
            }
            let bad = all.iter().zip(&duals).find(|(a, b)| a.phi_min().len() + b.phi_min().len() != l);
            if let Some((a, b)) = bad {
                return Ok((checked, Some(json!({ "ideal": ideal_json(a), "dual": ideal_json(b) }).to_string())));
            }
            checked += all.len();
        }
        Ok((checked, None))
    })?;

    record("census", &|| {
        let mut checked = 0;
        for l in ranks.clone() {
            let formula = formula_table(l)?;
            let udu = census(l, CensusSource::UduCensus, exec)?;
            let imax = census(l, CensusSource::IdealCensus, exec)?;
            let sizes = antichain_size_census(l, exec)?;
            let narayana_row = (0..=l)
                .map(|p| narayana(l as u64 + 1, p as u64 + 1))
                .collect::<Result<Vec<_>>>()?;
            let symmetric = (0..=l).all(|p| sizes[p] == sizes[l - p]);
            if udu.counts != formula.counts || imax.counts != formula.counts || sizes != narayana_row || !symmetric {
                let bad = json!({ "l": l, "formula": formula.counts, "udu": udu.counts, "imax": imax.counts, "antichain_sizes": sizes, "narayana": narayana_row });
                return Ok((checked, Some(bad.to_string())));
            }
            checked += 2 * formula.total() as usize;
        }
        Ok((checked, None))
    })?;

    record("conversion-chase", &|| {
        let chase_ranks = 1..=config.max_l.min(MAX_CHASE_RANK);
        sweep(exec, chase_ranks, enumerate_partitions, |_, lambda| {
            for from in Repr::ALL {
                let value = convert::from_partition(lambda, from);
                for to in Repr::ALL {
                    let direct = convert::convert(from, to, lambda.rank(), &value.text());
                    let hub = convert::from_partition(lambda, to);
                    if direct.as_ref().ok() != Some(&hub) {
                        return Some(json!({ "partition": partition_json(lambda), "from": from.name(), "to": to.name() }));
                    }
                }
            }
            None
        })
    })?;

    let lie_ranks = 1..=config.lie_max_l;

    record("parabolic-membership", &|| {
        sweep(exec, lie_ranks.clone(), enumerate_ideals, |l, ideal| {
            let imax = ideal.i_max();
            SimpleSubset::all(l)
                .find(|subset| ideal.is_in_f_i(subset) != subset.is_subset(&imax))
                .map(|subset| json!({ "ideal": ideal_json(ideal), "subset": subset.indices() }))
        })
    })?;

    record("lie-oracle", &|| {
        let mut checked = 0;
        for l in lie_ranks.clone() {
            let all = enumerate_ideals(l)?;
            let bad = exec::first_failure(exec, &all, |ideal| {
                SimpleSubset::all(l).find_map(|subset| match is_lie_ideal(ideal, &subset) {
                    Ok(lie) if lie == ideal.is_in_f_i(&subset) => None,
                    other => Some(json!({ "ideal": ideal_json(ideal), "subset": subset.indices(), "lie": other.ok() })),
                })
            });
            if let Some(bad) = bad {
                return Ok((checked, Some(bad.to_string())));
            }
            checked += all.len() << l;
        }
        Ok((checked, None))
    })?;

    for l in ranks.clone() {
        let all = enumerate_ideals(l)?;
        report.ideals_per_rank.push((l, all.len()));
        let fixed = exec::map(exec, &all, |ideal| ideal.dual().dual() == *ideal)
            .into_iter()
            .filter(|&same| same)
            .count();
        report.notes.push(format!(
            "l={l}: dual∘dual is the identity on {fixed} of {} ideals",
            all.len()
        ));
    }

    Ok(report)
}

/// Human-readable report lines, one per suite.
pub fn render(report: &VerifyReport) -> Vec<String> {
    let mut lines: Vec<String> = report
        .suites
        .iter()
        .map(|s| {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            format!("{status} {:<24} {:>8} checked", s.name, s.checked)
        })
        .collect();
    for (l, n) in &report.ideals_per_rank {
        lines.push(format!("l={l}: {n} ideals checked"));
    }
    for note in &report.notes {
        lines.push(format!("note: {note}"));
    }
    if let Some(bad) = report.first_failure() {
        lines.push(format!(
            "counterexample ({}): {}",
            bad.name,
            bad.counterexample.as_deref().unwrap_or_default()
        ));
    }
    lines
}
