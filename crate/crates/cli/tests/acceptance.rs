//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs as a plain binary (`harness = false`) so that each criterion reports
//! its own line and wall-clock time. Exits non-zero if any criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::fs;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dyckideal::insertion::{dotted_line, lambda_extremes, steps_text, udu_ledger, ProfileDump};
use dyckideal::lie::is_lie_ideal;
use dyckideal::{catalan, d_map, enumerate_dyck, enumerate_ideals, enumerate_partitions, DyckPath, LPartition, SimpleSubset};

type Outcome = Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Option<Duration>,
    check: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> Result<(String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_dyckideal"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run dyckideal: {e}"))?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || {
        format!("dyckideal {args:?} exited with {}: {}", out.status, String::from_utf8_lossy(&out.stderr))
    })?;
    let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok((stdout, elapsed))
}

fn golden(name: &str) -> Result<String, String> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden").join(name);
    fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))
}

fn expected_ideals(max_l: usize) -> u64 {
    (1..=max_l as u64).map(|l| catalan(l + 1).unwrap()).sum()
}

fn census_table() -> Outcome {
    let expected: [&[u64]; 5] = [&[1, 1], &[2, 2, 1], &[4, 6, 3, 1], &[9, 16, 12, 4, 1], &[21, 45, 40, 20, 5, 1]];
    let (csv, elapsed) = cli(&["stats", "--max-l", "5"])?;
    let mut lines = csv.lines();
    ensure(lines.next() == Some("l,r,count,source"), || "missing CSV header".into())?;
    let mut tables = vec![vec![Vec::new(); 3]; 5];
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        let [l, r, count, source] = fields[..] else {
            return Err(format!("malformed row {line:?}"));
        };
        let l: usize = l.parse().map_err(|_| format!("bad l in {line:?}"))?;
        let slot = ["formula", "udu-census", "ideal-census"]
            .iter()
            .position(|s| *s == source)
            .ok_or_else(|| format!("unknown source in {line:?}"))?;
        let row = &mut tables[l - 1][slot];
        ensure(r.parse() == Ok(row.len()), || format!("row out of order: {line:?}"))?;
        row.push(count.parse::<u64>().map_err(|_| format!("bad count in {line:?}"))?);
    }
    for (l, sources) in tables.iter().enumerate() {
        for row in sources {
            ensure(row.as_slice() == expected[l], || format!("l={}: {row:?} != {:?}", l + 1, expected[l]))?;
        }
    }
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("3 sources x 5 rows, cli {elapsed:.2?}"))
}

fn udu_equals_imax() -> Outcome {
    let mut checked = 0u64;
    for l in 1..=8 {
        for ideal in enumerate_ideals(l).map_err(|e| e.to_string())? {
            let udu = d_map(&ideal.sigma()).count_udu();
            let imax = ideal.i_max().len();
            ensure(udu == imax, || format!("{} at l={l}: udu {udu}, #I {imax}", ideal.phi_min()))?;
            checked += 1;
        }
    }
    ensure(checked == expected_ideals(8), || format!("only {checked} ideals"))?;
    Ok(format!("{checked} ideals, 0 mismatches"))
}

fn udu_prediction() -> Outcome {
    let mut checked = 0;
    let mut at_ten = 0;
    for l in 1..=10 {
        for lambda in enumerate_partitions(l).map_err(|e| e.to_string())? {
            let predicted = udu_ledger(&lambda).predicted_udu();
            let actual = d_map(&lambda).count_udu() as i64;
            ensure(predicted == actual, || format!("{lambda} (l={l}): predicted {predicted}, actual {actual}"))?;
            checked += 1;
            at_ten += usize::from(l == 10);
        }
    }
    ensure(at_ten == 58786, || format!("{at_ten} partitions at l=10"))?;
    Ok(format!("{checked} partitions ({at_ten} at l=10)"))
}

fn minimal_roots_vs_peaks() -> Outcome {
    let mut checked = 0;
    for l in 1..=8 {
        for ideal in enumerate_ideals(l).map_err(|e| e.to_string())? {
            let lambda = ideal.sigma();
            let size = ideal.phi_min().len();
            let inserted = l + 1 - d_map(&lambda).count_peaks();
            let boundary = lambda.p_map().count_peaks() - 1;
            ensure(inserted == size && boundary == size, || {
                format!("{} at l={l}: #min {size}, inserted {inserted}, boundary {boundary}", ideal.phi_min())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} ideals"))
}

fn duality() -> Outcome {
    let mut checked = 0;
    for l in 1..=8 {
        let ideals = enumerate_ideals(l).map_err(|e| e.to_string())?;
        let mut seen = HashSet::new();
        for ideal in &ideals {
            let dual = ideal.dual();
            ensure(ideal.phi_min().len() + dual.phi_min().len() == l, || {
                format!("{} at l={l} maps to {}", ideal.phi_min(), dual.phi_min())
            })?;
            ensure(seen.insert(dual.clone()), || format!("duplicate dual {} at l={l}", dual.phi_min()))?;
        }
        checked += ideals.len();
    }
    let (out, _) = cli(&["dual", "--l", "3", "--antichain", "1-3"])?;
    ensure(out == "1-1,2-2\n", || format!("cli printed {out:?}"))?;
    Ok(format!("{checked} ideals injective, cli example byte-exact"))
}

fn bijectivity() -> Outcome {
    for l in 1..=10 {
        let paths: HashSet<DyckPath> = enumerate_dyck(l + 1).map_err(|e| e.to_string())?.into_iter().collect();
        let partitions = enumerate_partitions(l).map_err(|e| e.to_string())?;
        let catalan = catalan(l as u64 + 1).unwrap() as usize;
        ensure(paths.len() == catalan, || format!("{} paths at l={l}", paths.len()))?;
        for (name, map) in [("d_map", d_map as fn(&LPartition) -> DyckPath), ("p_map", LPartition::p_map)] {
            let image: HashSet<DyckPath> = partitions.iter().map(map).collect();
            ensure(image.len() == catalan, || format!("{name} has {} distinct images at l={l}", image.len()))?;
            ensure(image == paths, || format!("{name} misses paths at l={l}"))?;
        }
    }
    Ok("l=1..10, images equal all paths".into())
}

fn psi_bijection() -> Outcome {
    let mut checked = 0;
    for l in 1..=8 {
        for ideal in enumerate_ideals(l).map_err(|e| e.to_string())? {
            let psi = ideal.psi_map();
            let ledger = udu_ledger(&ideal.sigma());
            let (lower, upper) = ideal.phi_min().lu_split();
            let image: BTreeSet<_> = psi.values().copied().collect();
            let lower_image: BTreeSet<_> = lower.iter().map(|r| psi[r]).collect();
            let upper_image: BTreeSet<_> = upper.iter().map(|r| psi[r]).collect();
            ensure(
                image.len() == psi.len()
                    && &image == ledger.nonzero()
                    && &lower_image == ledger.lower()
                    && &upper_image == ledger.upper(),
                || format!("{} at l={l}", ideal.phi_min()),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} ideals"))
}

fn lie_oracle() -> Outcome {
    let mut pairs_at_five = 0;
    let mut total = 0;
    for l in 1..=5 {
        for ideal in enumerate_ideals(l).map_err(|e| e.to_string())? {
            for subset in SimpleSubset::all(l) {
                let lie = is_lie_ideal(&ideal, &subset).map_err(|e| e.to_string())?;
                ensure(lie == ideal.is_in_f_i(&subset), || {
                    format!("{} with I={:?} at l={l}: matrix units say {lie}", ideal.phi_min(), subset.indices())
                })?;
                total += 1;
                pairs_at_five += usize::from(l == 5);
            }
        }
    }
    ensure(pairs_at_five == 4224, || format!("{pairs_at_five} pairs at l=5"))?;
    Ok(format!("{total} pairs ({pairs_at_five} at l=5)"))
}

fn worked_fixtures() -> Outcome {
    let thirteen = LPartition::new(13, vec![10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1, 0]).map_err(|e| e.to_string())?;
    let dump = serde_json::to_string(&ProfileDump::new(&thirteen)).map_err(|e| e.to_string())? + "\n";
    ensure(dump == golden("l13_profile.json")?, || format!("profile {dump:?}"))?;
    let (max, min) = lambda_extremes(&dotted_line(&thirteen));
    let extremes = format!("lambda_max {max}\nlambda_min {min}\n");
    ensure(extremes == golden("l13_extremes.txt")?, || format!("extremes {extremes:?}"))?;
    let seven = LPartition::parse(7, "5,3,1,1,1,0,0").map_err(|e| e.to_string())?;
    let steps = steps_text(&seven);
    ensure(steps == golden("l7_steps.txt")?, || format!("steps {steps:?}"))?;
    Ok("3 golden files byte-exact".into())
}

const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, name: "census table for l <= 5", limit: Some(Duration::from_secs(1)), check: census_table },
    Criterion { id: 2, name: "udu of D(sigma) equals #I_max, l <= 8", limit: Some(Duration::from_secs(10)), check: udu_equals_imax },
    Criterion { id: 3, name: "ledger predicts udu, l <= 10", limit: Some(Duration::from_secs(60)), check: udu_prediction },
    Criterion { id: 4, name: "minimal roots vs peaks, l <= 8", limit: None, check: minimal_roots_vs_peaks },
    Criterion { id: 5, name: "duality, l <= 8, plus cli example", limit: None, check: duality },
    Criterion { id: 6, name: "D and P are bijections, l <= 10", limit: None, check: bijectivity },
    Criterion { id: 7, name: "Psi bijection respects L/U, l <= 8", limit: None, check: psi_bijection },
    Criterion { id: 8, name: "matrix-unit oracle equivalence, l <= 5", limit: Some(Duration::from_secs(30)), check: lie_oracle },
    Criterion { id: 9, name: "worked fixtures (golden files)", limit: None, check: worked_fixtures },
];

fn main() -> ExitCode {
    let mut failures = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.check)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (other, _) => other,
        };
        match outcome {
            Ok(detail) => println!("PASS [{}] {}: {detail} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failures += 1;
                println!("FAIL [{}] {}: {why} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
