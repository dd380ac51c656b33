//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criterion 7 asks for a verbatim match with a published D6 fusion table
//! whose `2·4± = 2+4±` line is not a fusion ring. The check still runs and
//! prints FAIL; it is listed in `KNOWN_FAILURES` so the run as a whole only
//! fails on an unexpected result, including criterion 7 starting to pass.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ade_fusion::classify::{
    admissible_index_values, index_ceiling, kl_lookup, lr_partial_index, section4_verdict, theta_for_graph,
};
use ade_fusion::double::exceptional_double;
use ade_fusion::embed::double_for;
use ade_fusion::fusion::{self, FusionRing};
use ade_fusion::graph::{self, Diagram};
use ade_fusion::AlgReal;

const KNOWN_FAILURES: &[(u32, &str)] =
    &[(7, "2·4± = 2+4± breaks Frobenius reciprocity and associativity; the unique completion has 2·4± = 2+4∓")];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("{what} took {t:.2?}, limit {limit:?}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ade-fusion"))
        .args(["table1", "--format", "tsv"])
        .env_remove(ade_fusion_cli::DATA_ENV)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success(), format!("table1 exited with {}: {stdout}", out.status))?;
    ensure(
        stdout == "A2\tA5\totherA\tD4\tD6\totherD\tE6\tE8\n1\t3\t2\t3\t4\t2\t0\t0\n",
        format!("table1 printed {stdout:?}"),
    )?;
    ensure(elapsed < Duration::from_secs(60), format!("table1 took {elapsed:.2?}"))?;
    for d in [Diagram::E(6), Diagram::E(8)] {
        let inv = exceptional_double(d, None).map_err(|e| e.to_string())?.invariants();
        ensure(inv.all_hold(), format!("bundled {d} double: {:?}", inv.failures))?;
    }
    Ok(format!("braiding counts 1 3 2 3 4 2 0 0 in {elapsed:.1?}; bundled E6/E8 doubles pass their invariants"))
}

fn criterion_2() -> Outcome {
    let values = admissible_index_values(&index_ceiling()).map_err(|e| e.to_string())?;
    let sqrt = |m| AlgReal::sqrt(m).unwrap();
    let int = AlgReal::from_integer;
    let golden = &(&int(5) + &sqrt(5)) * &AlgReal::from_ratio(1, 2);
    let expected = [int(1), int(2), int(3), golden.clone(), int(4), &int(3) + &sqrt(3)];
    let got: Vec<AlgReal> = values.iter().map(|v| v.value.clone()).collect();
    ensure(got == expected, format!("values {got:?}"))?;
    ensure(golden.to_decimal(12) == "3.618033988750", golden.to_decimal(12))?;
    ensure(expected[5].to_decimal(12) == "4.732050807569", expected[5].to_decimal(12))?;
    let out = Command::new(env!("CARGO_BIN_EXE_ade-fusion"))
        .args(["index-values", "--max", "4.8"])
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    let rows: Vec<&str> = stdout.lines().collect();
    ensure(out.status.success() && rows.len() == 6, format!("index-values printed {stdout:?}"))?;
    ensure(rows[3] == "4cos^2(pi/10) ≈ 3.618033988750", rows[3])?;
    ensure(rows[5] == "3+sqrt(3) ≈ 4.732050807569", rows[5])?;
    Ok("{1, 2, 3, (5+√5)/2, 4, 3+√3} exactly; 3.618033988750 and 4.732050807569".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let corpus: Vec<Diagram> =
        (2..=30).map(Diagram::A).chain((4..=30).map(Diagram::D)).chain((6..=8).map(Diagram::E)).collect();
    let mut passing = Vec::new();
    for &d in &corpus {
        let g = graph::dynkin(d).map_err(|e| e.to_string())?;
        if graph::pendant_criterion(&g).ok {
            passing.push(d.to_string());
        }
    }
    within(start, Duration::from_secs(1), "pendant screen")?;
    ensure(passing == ["A2", "A3", "A5", "D4", "D6"], format!("passing: {passing:?}"))?;
    Ok(format!("{} diagrams screened; pendant criterion passes exactly A2 A3 A5 D4 D6", corpus.len()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let corpus = graph::haagerup_corpus();
    for g in &corpus {
        let v = graph::screen(g);
        let pendant = graph::pendant_criterion(g);
        let interior_failure = !pendant.ok && !pendant.violations.is_empty();
        ensure(v.corollary_excluded || interior_failure, format!("{} survives", g.name()))?;
    }
    for depth in 5..=50 {
        let g = graph::a_infinity(depth).map_err(|e| e.to_string())?;
        let pendant = graph::pendant_criterion(&g);
        let v = graph::screen(&g);
        ensure(v.corollary_excluded || !pendant.violations.is_empty(), format!("Ainf at depth {depth} survives"))?;
    }
    within(start, Duration::from_secs(1), "Haagerup screen")?;
    Ok(format!("{} candidates and Ainf(5..50) excluded", corpus.len()))
}

fn criterion_5() -> Outcome {
    let diagrams: Vec<Diagram> = (2..=25).map(Diagram::A).chain((2..=12).map(|n| Diagram::D(2 * n))).collect();
    for &d in &diagrams {
        let (_, double) = double_for(d, None).map_err(|e| e.to_string())?;
        let inv = double.invariants();
        ensure(inv.all_hold(), format!("{d}: {:?}", inv.failures))?;
    }
    let (base, double) = double_for(Diagram::A(5), None).map_err(|e| e.to_string())?;
    let (gd, base_gd) = (double.ring().global_dim(), base.global_dim());
    ensure(gd == AlgReal::from_integer(36) && base_gd == AlgReal::from_integer(6), format!("A5: {gd} and {base_gd}"))?;
    Ok(format!("{} doubles (A2..A25, D4..D24) satisfy all three identities; A5: 36 = 6²", diagrams.len()))
}

fn criterion_6() -> Outcome {
    let v = lr_partial_index(3, &[0, 2]).map_err(|e| e.to_string())?;
    let target = AlgReal::four_cos_sq(10).map_err(|e| e.to_string())?;
    ensure(v == target, format!("{v} ≠ {target}"))?;
    Ok(format!("d_0² + d_2² in SU(2)_3 = 4cos²(π/10) = {v}"))
}

fn product(r: &FusionRing, a: &str, b: &str) -> Vec<String> {
    let (i, j) = (r.index_of(a).unwrap(), r.index_of(b).unwrap());
    let mut out = Vec::new();
    for &(k, n) in r.product(i, j) {
        for _ in 0..n {
            out.push(r.object(k).to_string());
        }
    }
    out.sort();
    out
}

fn criterion_7() -> Outcome {
    let rings = fusion::d2n_even_ring_candidates(3).map_err(|e| e.to_string())?;
    ensure(rings.len() == 1, format!("{} completions", rings.len()))?;
    let r = &rings[0];
    let displayed: [(&str, &str, &[&str]); 7] = [
        ("2", "2", &["0", "2", "4+", "4-"]),
        ("2", "4+", &["2", "4+"]),
        ("2", "4-", &["2", "4-"]),
        ("4+", "4+", &["0", "4+"]),
        ("4-", "4-", &["0", "4-"]),
        ("4+", "4-", &["2"]),
        ("4-", "4+", &["2"]),
    ];
    let mismatches: Vec<String> = displayed
        .iter()
        .filter(|(a, b, want)| product(r, a, b) != *want)
        .map(|(a, b, want)| format!("{a}·{b} = {} but displayed {}", product(r, a, b).join("+"), want.join("+")))
        .collect();
    ensure(mismatches.is_empty(), format!("unique completion; {}", mismatches.join("; ")))?;
    Ok("unique completion equals the displayed table".into())
}

fn criterion_8() -> Outcome {
    let admissible = [Diagram::A(2), Diagram::A(3), Diagram::A(5), Diagram::D(4), Diagram::D(6)];
    let excluded: Vec<Diagram> = (2..=30)
        .map(Diagram::A)
        .chain((2..=15).map(|n| Diagram::D(2 * n)))
        .filter(|d| !admissible.contains(d))
        .collect();
    for &d in &excluded {
        let v = section4_verdict(d).map_err(|e| e.to_string())?;
        ensure(!v.admissible, format!("{d} is admissible"))?;
        let (k, theta) = theta_for_graph(d).map_err(|e| e.to_string())?;
        ensure(!kl_lookup(k, &theta), format!("{d}: θ is listed at level {k}"))?;
        ensure(
            v.reasons.iter().any(|r| r.claim.contains("not a local extension")),
            format!("{d}: no extension-table reason in {:?}", v.reasons),
        )?;
    }
    let notes = [
        "orbifold (G,H) = ({e},{e})",
        "orbifold (G,H) = (S_2,{e})",
        "orbifold (G,H) = (S_3,S_2)",
        "orbifold (G,H) = (Z/3,{e})",
        "coset SU(2)_3 ⊗ Vir_{7/10} ⊂ SU(2)_2 ⊗ SU(2)_1",
    ];
    for (d, note) in admissible.iter().zip(notes) {
        let v = section4_verdict(*d).map_err(|e| e.to_string())?;
        ensure(v.admissible && v.realization.as_deref() == Some(note), format!("{d}: {:?}", v.realization))?;
    }
    Ok(format!("{} A/D diagrams excluded by the extension table; 5 admissible with realizations", excluded.len()))
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome; 8] =
        [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8];
    let (mut passed, mut known, mut unexpected) = (0, 0, 0);
    for (i, f) in criteria.iter().enumerate() {
        let n = i as u32 + 1;
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let expected_failure = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        match (outcome, expected_failure) {
            (Ok(detail), None) => {
                passed += 1;
                println!("PASS criterion {n}: {detail}");
            }
            (Ok(detail), Some(_)) => {
                unexpected += 1;
                println!("PASS criterion {n}: {detail} (listed as a known failure; update KNOWN_FAILURES)");
            }
            (Err(detail), Some((_, why))) => {
                known += 1;
                println!("FAIL criterion {n}: {detail} [known: {why}]");
            }
            (Err(detail), None) => {
                unexpected += 1;
                println!("FAIL criterion {n}: {detail}");
            }
        }
    }
    println!("acceptance: {passed} passed, {known} known failure(s), {unexpected} unexpected");
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
