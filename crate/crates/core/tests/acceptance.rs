//! Acceptance suite: one PASS/FAIL line per criterion, each checked against
//! its time budget. Exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bck_core::construct::{predict_extend_top, predict_union_two};
use bck_core::family::level_len;
use bck_core::{
    canonical_form, cd_set, degree_census, enumerate, enumerate_with, extend_top, family, find_maximal_subalgebra,
    is_isomorphic, m_chain, standard_algebras, synthesize, two, union, validate, validate_rows, CommutingReport,
    ConstructionExpr, EnumerationConfig, Ratio,
};

use common::{naive_classes, naive_pair_count};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const INSTANT: Duration = Duration::from_secs(1);

fn degrees(reports: &[CommutingReport]) -> Vec<String> {
    reports.iter().map(|r| format!("{}/{}", r.pair_count, r.order * r.order)).collect()
}

fn golden_tables() -> Outcome {
    let s = standard_algebras();
    let flat = |a: &bck_core::BckAlgebra| a.table().as_flat().to_vec();
    ensure!(flat(&s.two) == [0, 0, 1, 0], "2 = {:?}", s.two.table());
    ensure!(flat(&s.pi) == [0, 0, 0, 1, 0, 0, 2, 2, 0], "PI = {:?}", s.pi.table());
    ensure!(flat(&s.tc) == [0, 0, 0, 1, 0, 0, 2, 1, 0], "TC = {:?}", s.tc.table());
    let got = [s.two.commuting_degree().degree, s.pi.commuting_degree().degree, s.tc.commuting_degree().degree];
    ensure!(got == [Ratio::ONE, Ratio::new(7, 9).unwrap(), Ratio::ONE], "degrees {got:?}");
    Ok("2, PI, TC exact; cd = 1, 7/9, 1".into())
}

fn level_matches(n: usize, expected: &[(&str, u64)]) -> Outcome {
    let level = family(n).map_err(|e| e.to_string())?;
    let got: Vec<(String, u64)> = level.entries.iter().map(|e| (e.expr.to_unicode(), e.report.pair_count)).collect();
    let want: Vec<(String, u64)> = expected.iter().map(|&(s, k)| (s.to_string(), k)).collect();
    ensure!(got == want, "got {got:?}");
    for e in &level.entries {
        ensure!(e.expr == e.expr.to_unicode().parse::<ConstructionExpr>().unwrap(), "round trip {}", e.expr);
    }
    Ok(got.iter().map(|(s, k)| format!("{s}:{k}/{}", n * n)).collect::<Vec<_>>().join(", "))
}

fn family_four() -> Outcome {
    level_matches(4, &[("PI⊕⊤", 10), ("TC⊕⊤", 12), ("PI⊔2", 14)])
}

fn family_five() -> Outcome {
    level_matches(
        5,
        &[
            ("(PI⊕⊤)⊕⊤", 13),
            ("(TC⊕⊤)⊕⊤", 15),
            ("(PI⊔2)⊕⊤", 17),
            ("(PI⊕⊤)⊔2", 19),
            ("(TC⊕⊤)⊔2", 21),
            ("(PI⊔2)⊔2", 23),
        ],
    )
}

fn transfer_laws() -> Outcome {
    let mut checked = 0;
    for n in 2..=5 {
        for a in enumerate(n).map_err(|e| e.to_string())? {
            let k = naive_pair_count(&a);
            let ext = extend_top(&a);
            let uni = union(&[a.clone(), two()]).unwrap();
            let (ke, ku) = (naive_pair_count(&ext), naive_pair_count(&uni));
            ensure!(ke == k + 3, "extend_top: {k} -> {ke} for {:?}", a.table());
            ensure!(ku == k + 2 * n as u64 + 1, "union with 2: {k} -> {ku} for {:?}", a.table());
            let r = a.commuting_degree();
            ensure!(predict_extend_top(&r).pair_count == ke, "predicted extend_top differs");
            ensure!(predict_union_two(&r).pair_count == ku, "predicted union differs");
            checked += 1;
        }
    }
    Ok(format!("{checked} algebras of orders 2..5"))
}

fn coverage() -> Outcome {
    for n in 3..=12 {
        let level = family(n).map_err(|e| e.to_string())?;
        let expected = cd_set(n).map_err(|e| e.to_string())?;
        ensure!(level.entries.len() == (n - 2) * (n - 1) / 2, "order {n}: {} entries", level.entries.len());
        ensure!(level.entries.len() == level_len(n), "order {n}: level_len disagrees");
        let got: Vec<_> = level.entries.iter().map(|e| e.report).collect();
        ensure!(got == expected, "order {n}: {:?} != {:?}", degrees(&got), degrees(&expected));
        for e in &level.entries {
            ensure!(validate(e.algebra.table().clone()).is_ok(), "order {n}: {} fails validation", e.expr);
        }
    }
    Ok("n = 3..12".into())
}

fn synthesizer() -> Outcome {
    let mut count = 0;
    for q in 2..=12u64 {
        for p in (1..q).filter(|&p| num_integer::gcd(p, q) == 1) {
            let s = synthesize(p, q).map_err(|e| e.to_string())?;
            let n = s.algebra.order() as u64;
            let k = naive_pair_count(&s.algebra);
            ensure!(Ratio::new(k, n * n).unwrap() == Ratio::new(p, q).unwrap(), "{p}/{q}: brute force {k}/{}", n * n);
            let placement = s.plan.placement.expect("non-commutative target");
            if p >= 2 {
                ensure!(n == 2 * q && !placement.escalated, "{p}/{q}: order {n}");
            } else {
                ensure!(placement.escalated && n > 2 * q, "{p}/{q}: no escalation (order {n})");
            }
            count += 1;
        }
    }
    let half = synthesize(1, 2).map_err(|e| e.to_string())?;
    let pl = half.plan.placement.unwrap();
    ensure!((pl.order, pl.k) == (8, 16), "1/2: order {}, k {}", pl.order, pl.k);
    Ok(format!("{count} reduced targets; 1/2 -> order 8, k = 16"))
}

fn worked_example() -> Outcome {
    let s = synthesize(2, 5).map_err(|e| e.to_string())?;
    let pl = s.plan.placement.unwrap();
    ensure!((pl.order, pl.k) == (10, 30), "order {}, k {}", pl.order, pl.k);
    let expected: ConstructionExpr = "((((((PI⊔2)+T)+2)+T)+T)+T)+T".parse().map_err(|e| format!("{e}"))?;
    ensure!(s.plan.expr == expected, "expression {}", s.plan.expr);
    let trace: Vec<u64> = s.plan.expr.degree_trace().iter().map(|r| r.pair_count).collect();
    ensure!(trace == [7, 14, 17, 28, 31, 34, 37, 40], "trace {trace:?}");
    let trace: Vec<String> = trace.iter().map(ToString::to_string).collect();
    Ok(format!("order 10, k = 30, {}, trace {}", s.plan.expr.to_unicode(), trace.join("→")))
}

fn headline() -> Outcome {
    let config = EnumerationConfig::default();
    let single = enumerate_with(6, &config.clone().with_workers(1)).map_err(|e| e.to_string())?;
    let parallel = enumerate_with(6, &config.with_workers(4)).map_err(|e| e.to_string())?;
    ensure!(single == parallel, "worker count changed the output");
    let non_commutative = single.iter().filter(|a| !a.is_commutative()).count();
    ensure!(non_commutative == 747, "{non_commutative} non-commutative classes");
    Ok(format!("{} classes, 747 non-commutative; identical with 1 and 4 workers", single.len()))
}

fn unique_minimum() -> Outcome {
    for n in 3..=6 {
        let census = degree_census(n).map_err(|e| e.to_string())?;
        let minimum = Ratio::new(3 * n as u64 - 2, (n * n) as u64).unwrap();
        ensure!(census.get(minimum) == 1, "order {n}: {} classes at the minimum", census.get(minimum));
        let report = bck_core::verify_unique_minimum(n).map_err(|e| e.to_string())?;
        let chain = m_chain(n).unwrap();
        ensure!(report.witness.verify(&report.representative, &chain), "order {n}: witness does not verify");
        ensure!(is_isomorphic(&report.representative, &chain).is_some(), "order {n}: not isomorphic to the chain");
    }
    Ok("n = 3..6, witnesses verified".into())
}

fn maximum_multiplicities() -> Outcome {
    let four = degree_census(4).map_err(|e| e.to_string())?.get(Ratio::new(14, 16).unwrap());
    let five = degree_census(5).map_err(|e| e.to_string())?.get(Ratio::new(23, 25).unwrap());
    ensure!(four == 3 && five == 8, "census(4)[14/16] = {four} (want 3), census(5)[23/25] = {five} (want 8)");
    Ok("3 and 8".into())
}

fn subalgebras() -> Outcome {
    for n in 2..=6 {
        for a in enumerate(n).map_err(|e| e.to_string())? {
            let elements = find_maximal_subalgebra(&a).map_err(|e| format!("order {n}: {e}"))?;
            ensure!(elements.len() == n - 1, "order {n}: subalgebra of size {}", elements.len());
            let sub = a.subalgebra(&elements).ok_or_else(|| format!("order {n}: {elements:?} not closed"))?;
            ensure!(validate(sub.table().clone()).is_ok(), "order {n}: subalgebra fails validation");
        }
    }
    Ok("n = 2..6".into())
}

fn oracle_cross_check() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let oracle = naive_classes(n);
        let fast = enumerate(n).map_err(|e| e.to_string())?;
        ensure!(oracle.len() == fast.len(), "order {n}: naive {} vs backtracking {}", oracle.len(), fast.len());
        let oracle_forms: BTreeSet<_> = oracle
            .iter()
            .map(|t| canonical_form(&validate_rows(&t.chunks(n).collect::<Vec<_>>()).unwrap()))
            .collect();
        let fast_forms: BTreeSet<_> = fast.iter().map(canonical_form).collect();
        ensure!(oracle_forms == fast_forms, "order {n}: class sets differ");
        counts.push(fast.len().to_string());
    }
    Ok(format!("class counts {} for n = 1..4", counts.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "golden tables", INSTANT, golden_tables),
        (2, "order-4 family level", INSTANT, family_four),
        (3, "order-5 family level", INSTANT, family_five),
        (4, "extension and union transfer laws", Duration::from_secs(30), transfer_laws),
        (5, "family covers every achievable degree", Duration::from_secs(10), coverage),
        (6, "synthesizer exactness", Duration::from_secs(60), synthesizer),
        (7, "worked example 2/5", INSTANT, worked_example),
        (8, "order-6 enumeration headline", Duration::from_secs(600), headline),
        (9, "unique minimum", Duration::from_secs(600), unique_minimum),
        (10, "maximum-degree multiplicities", Duration::from_secs(30), maximum_multiplicities),
        (11, "maximal subalgebras", Duration::from_secs(600), subalgebras),
        (12, "naive enumerator cross-check", Duration::from_secs(60), oracle_cross_check),
    ];
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > budget => ("FAIL", format!("over budget {budget:?}")),
            Ok(detail) => ("PASS", detail),
            Err(reason) => ("FAIL", reason),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{id:>2}] {name} ({:.2?} / budget {budget:?}): {detail}", elapsed);
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
