//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use charrig::oracle::orbit_dimension;
use charrig::rigidity::reconstruct::valid_splits;
use charrig::rigidity::{
    eq3_consistency, extract_structure_constants, multiplicity_via_eq1, perturb_family,
    perturbation_sites, reconstruct_family, reconstruct_family_with, verify_theorem, LrOracle,
    SiteStratum, SplitRule,
};
use charrig::weight::{dominants_within, neg_w0, saturated_dominants};
use charrig::{
    orbit_sum, weyl_dim, CharElement, CharacterFamily, CharacterTable, Coeff, DominantWeight, Rank,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn rank(l: usize) -> Rank {
    Rank::new(l).unwrap()
}

fn dw(l: usize, c: &[i64]) -> DominantWeight {
    DominantWeight::from_fundamental(rank(l), c).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn nonzero(row: &BTreeMap<DominantWeight, Coeff>) -> BTreeMap<DominantWeight, Coeff> {
    row.iter()
        .filter(|(_, c)| **c != Coeff::from(0))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect()
}

fn dimensions() -> Verdict {
    let mut count = 0;
    let mut check = |chars: &CharacterTable, la: &DominantWeight| -> Result<(), String> {
        count += 1;
        let lhs = orbit_dimension(&chars.character(la));
        ensure(lhs == weyl_dim(la), || {
            format!("{la}: Σ m·|W μ| = {lhs}, weyl_dim = {}", weyl_dim(la))
        })
    };
    for (l, bound) in [(2, 12), (3, 10)] {
        let chars = CharacterTable::new(rank(l));
        for la in dominants_within(rank(l), bound) {
            check(&chars, &la)?;
        }
    }
    let chars = CharacterTable::new(rank(4));
    let mut pool = dominants_within(rank(4), 24);
    pool.shuffle(&mut ChaCha8Rng::seed_from_u64(4));
    for la in pool.iter().take(25) {
        check(&chars, la)?;
    }
    Ok(format!("{count} weights"))
}

fn worked_multiplicities() -> Verdict {
    let chars = CharacterTable::new(rank(2));
    for (la, expected) in [
        (&[1, 1][..], vec![(&[1, 1][..], 1), (&[0, 0][..], 2)]),
        (&[2, 0], vec![(&[2, 0], 1), (&[0, 1], 1)]),
        (&[2, 1], vec![(&[2, 1], 1), (&[0, 2], 1), (&[1, 0], 2)]),
    ] {
        let want: BTreeMap<DominantWeight, Coeff> = expected
            .iter()
            .map(|(mu, m)| (dw(2, mu), Coeff::from(*m)))
            .collect();
        let got = chars.character(&dw(2, la));
        ensure(got.terms() == &want, || {
            format!("{la:?}: got {:?}", got.terms())
        })?;
    }
    Ok("(1,1), (2,0), (2,1)".into())
}

fn lr_identities() -> Verdict {
    let mut triples = 0;
    for (l, bound) in [(2, 10), (3, 8)] {
        let chars = CharacterTable::new(rank(l));
        let weights = dominants_within(rank(l), bound);
        for mu in &weights {
            for other in &weights {
                if mu.level() + other.level() > bound {
                    continue;
                }
                let row = nonzero(&chars.tensor_decompose(mu, other).unwrap());
                let swapped = nonzero(&chars.tensor_decompose(other, mu).unwrap());
                ensure(row == swapped, || {
                    format!("symmetry fails for {mu} x {other}")
                })?;
                let sum: Coeff = row.iter().map(|(la, c)| c * weyl_dim(la)).sum();
                ensure(sum == weyl_dim(mu) * weyl_dim(other), || {
                    format!("dimension fails for {mu} x {other}")
                })?;
                // c_{μ,λ}^ν = c_{ν,-w0 λ}^μ with λ = other
                for nu in saturated_dominants(&mu.add(other).unwrap()) {
                    triples += 1;
                    let lhs = row.get(&nu).cloned().unwrap_or_default();
                    let rhs = chars
                        .tensor_decompose(&nu, &neg_w0(other))
                        .unwrap()
                        .get(mu)
                        .cloned()
                        .unwrap_or_default();
                    ensure(lhs == rhs, || {
                        format!("duality fails at ({mu}, {other}, {nu}): {lhs} vs {rhs}")
                    })?;
                }
            }
        }
    }
    Ok(format!("{triples} triples"))
}

fn round_trip() -> Verdict {
    let mut rows = 0;
    for (l, bound) in [(2, 12), (3, 10)] {
        let chars = CharacterTable::new(rank(l));
        let expected = CharacterFamily::weyl(&chars, bound);
        let fam = reconstruct_family(&LrOracle::new(&chars), rank(l), bound)
            .map_err(|e| e.to_string())?;
        ensure(fam == expected, || {
            format!("A_{l}: {} members differ", fam.diff(&expected).len())
        })?;
        let weights: Vec<_> = expected.members().keys().cloned().collect();
        for mu in &weights {
            for nu in &weights {
                if mu.level() + nu.level() > bound {
                    continue;
                }
                rows += 1;
                let got =
                    extract_structure_constants(&expected, mu, nu).map_err(|e| e.to_string())?;
                let want = nonzero(&chars.tensor_decompose(mu, nu).unwrap());
                ensure(got == want, || {
                    format!("A_{l}: extraction differs at {mu} x {nu}")
                })?;
            }
        }
    }
    Ok(format!("families equal, {rows} rows extracted"))
}

fn base_cases() -> Verdict {
    let mut families = 0;
    for (l, bound) in [(1, 6), (2, 12), (3, 10), (4, 12)] {
        let chars = CharacterTable::new(rank(l));
        let lr = LrOracle::new(&chars);
        for split in [SplitRule::FirstFundamental, SplitRule::Seeded(3)] {
            let fam =
                reconstruct_family_with(&lr, rank(l), bound, split).map_err(|e| e.to_string())?;
            families += 1;
            ensure(
                fam.member(&DominantWeight::zero(rank(l))) == Some(&CharElement::one(rank(l))),
                || format!("A_{l}: f_0 is not e(0)"),
            )?;
            for i in 1..=l {
                let w = DominantWeight::fundamental_weight(rank(l), i);
                if w.level() <= bound {
                    ensure(fam.member(&w) == Some(&orbit_sum(&w)), || {
                        format!("A_{l}: f_{{ω_{i}}} is not h(ω_{i})")
                    })?;
                }
            }
        }
    }
    Ok(format!("{families} families"))
}

fn falsifier() -> Verdict {
    let chars = CharacterTable::new(rank(2));
    let fam = CharacterFamily::weyl(&chars, 10);
    let sites = perturbation_sites(&fam);
    let special = (dw(2, &[1, 1]), dw(2, &[0, 0]));
    let jobs: Vec<_> = sites
        .iter()
        .flat_map(|s| [-3, -2, -1, 1, 2, 3].map(move |d| (s, d)))
        .collect();
    let threads = std::thread::available_parallelism()
        .map_or(4, |n| n.get())
        .min(16);
    let failures: Vec<String> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .chunks(jobs.len().div_ceil(threads))
            .map(|chunk| {
                let (chars, fam, special) = (&chars, &fam, &special);
                scope.spawn(move || {
                    let mut bad = Vec::new();
                    for ((la, mu), delta) in chunk {
                        let p = perturb_family(fam, (la, mu), *delta).unwrap();
                        let report = verify_theorem(&p, chars).unwrap();
                        let stratum = SiteStratum::of(la, mu).unwrap();
                        if report.passed() {
                            bad.push(format!("false pass at ({la},{mu}) δ={delta}"));
                        } else if stratum == SiteStratum::Restricted && report.condition1_passed() {
                            bad.push(format!("condition 1 missed ({la},{mu}) δ={delta}"));
                        } else if (la, mu) == (&special.0, &special.1) && report.condition2_passed()
                        {
                            bad.push(format!("condition 2 missed ({la},{mu}) δ={delta}"));
                        }
                    }
                    bad
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });
    ensure(sites.contains(&special), || {
        "site (1,1)->(0,0) missing".into()
    })?;
    ensure(failures.is_empty(), || failures.join("; "))?;
    let full = sites
        .iter()
        .filter(|(l, m)| SiteStratum::of(l, m).unwrap() == SiteStratum::Full)
        .count();
    Ok(format!(
        "{} perturbations over {} sites ({} with full support), 0 false passes",
        jobs.len(),
        sites.len(),
        full
    ))
}

fn eq_consistency() -> Verdict {
    let mut probes = 0;
    let mut pool = Vec::new();
    for (l, bound) in [(2, 12), (3, 10)] {
        let chars = CharacterTable::new(rank(l));
        let fam = reconstruct_family(&LrOracle::new(&chars), rank(l), bound)
            .map_err(|e| e.to_string())?;
        for la in fam.members().keys() {
            for (mu, nu) in valid_splits(la) {
                let row = extract_structure_constants(&fam, &mu, &nu).map_err(|e| e.to_string())?;
                for t in saturated_dominants(la) {
                    probes += 1;
                    let v = multiplicity_via_eq1(fam.members(), &mu, &nu, &t, &row)
                        .map_err(|e| e.to_string())?;
                    ensure(v == fam.n(la, &t), || {
                        format!("A_{l}: multiplicity formula gives {v} at ({la},{t}) via {mu}+{nu}")
                    })?;
                    pool.push((l, mu.clone(), nu.clone(), t));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let fams: BTreeMap<usize, CharacterFamily> = [(2, 12), (3, 10)]
        .into_iter()
        .map(|(l, b)| (l, CharacterFamily::weyl(&CharacterTable::new(rank(l)), b)))
        .collect();
    for (l, mu, nu, t) in pool.choose_multiple(&mut rng, 50) {
        let ok = eq3_consistency(&fams[l], mu, nu, t).map_err(|e| e.to_string())?;
        ensure(ok, || format!("consistency fails at A_{l} ({mu},{nu},{t})"))?;
    }
    Ok(format!(
        "{probes} multiplicity probes, 50 consistency sites"
    ))
}

fn split_independence() -> Verdict {
    let chars = CharacterTable::new(rank(2));
    let lr = LrOracle::new(&chars);
    let default = reconstruct_family(&lr, rank(2), 10).map_err(|e| e.to_string())?;
    for seed in 0..8 {
        let other = reconstruct_family_with(&lr, rank(2), 10, SplitRule::Seeded(seed))
            .map_err(|e| e.to_string())?;
        ensure(other == default, || {
            format!("seed {seed} gives a different family")
        })?;
    }
    Ok("8 seeds".into())
}

fn cli_determinism() -> Verdict {
    let cache = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = |cached: bool| -> Result<(Vec<u8>, Vec<u8>), String> {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_charrig"));
        cmd.args([
            "reconstruct",
            "--rank",
            "2",
            "--bound",
            "12",
            "--oracle",
            "lr",
        ]);
        if cached {
            cmd.env("CHARRIG_CACHE", cache.path());
        } else {
            cmd.env_remove("CHARRIG_CACHE");
        }
        let out = cmd.output().map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || {
            format!("exit {:?}", out.status.code())
        })?;
        Ok((out.stdout, out.stderr))
    };
    let plain = run(false)?;
    let cold = run(true)?;
    let cached = std::fs::read_dir(cache.path())
        .map_err(|e| e.to_string())?
        .count();
    ensure(cached > 0, || "cold run left the cache empty".into())?;
    let warm = run(true)?;
    ensure(plain == cold && cold == warm, || {
        "output differs between runs".into()
    })?;
    let report: serde_json::Value = serde_json::from_slice(&warm.1).map_err(|e| e.to_string())?;
    ensure(
        report["diff"].as_array().is_some_and(|d| d.is_empty()),
        || "diff is not empty".into(),
    )?;
    Ok(format!(
        "3 runs identical, {} bytes, {cached} cache files",
        warm.0.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("dimension cross-check", dimensions),
        ("worked multiplicities", worked_multiplicities),
        ("LR symmetry, duality, dimension", lr_identities),
        ("reconstruction round trip", round_trip),
        ("base cases", base_cases),
        ("single-site perturbations are caught", falsifier),
        (
            "multiplicity / structure-constant consistency",
            eq_consistency,
        ),
        ("split-choice independence", split_independence),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
