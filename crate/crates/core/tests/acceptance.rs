//! Acceptance run: one PASS/FAIL line per criterion. Built with
//! `harness = false` so the lines always reach the terminal.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nonrep::colorings::{color, color_biclique, color_rook};
use nonrep::verifier::{
    check_edge_pair_types, check_lazy_walk_rigidity, check_zero_alternation, exact_pi,
    find_repetitive_path, find_repetitive_path_with, validate_witness, PiOutcome, SearchOptions,
};
use nonrep::words::{abcd, find_palindrome, find_square, generate_thue, generate_thue_star};
use nonrep::{
    ColoredGraph, ConstructionKind, ConstructionSpec, Graph, SearchBudget, Status, VerifyReport,
};

mod common;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn lattice(kind: ConstructionKind, region: &str) -> ColoredGraph {
    color(&ConstructionSpec::lattice(kind, region.parse().unwrap())).unwrap()
}

fn search(cg: &ColoredGraph, k_max: usize, prune: bool) -> VerifyReport {
    let budget = SearchBudget::new(k_max).deterministic(true);
    find_repetitive_path_with(cg, budget, SearchOptions { prune }).unwrap()
}

/// Pass with the search run to completion.
fn expect_pass(name: &str, cg: &ColoredGraph, k_max: usize, prune: bool) -> Result<u64, String> {
    let r = search(cg, k_max, prune);
    match r.status {
        Status::Pass => Ok(r.nodes_visited),
        Status::Witness => {
            let w = r.witness.as_ref().unwrap();
            let valid = validate_witness(cg, w).is_ok();
            Err(format!(
                "{name}: witness k={} colors {:?} (validates: {valid})",
                w.k, r.witness_colors
            ))
        }
        Status::BudgetExhausted => Err(format!("{name}: budget exhausted")),
    }
}

fn criterion_1() -> Outcome {
    let t = generate_thue(10_000);
    ensure(find_square(&t).is_none(), "square in T")?;
    let s = generate_thue_star(3_000, abcd()).unwrap();
    ensure(find_square(&s).is_none(), "square in T*")?;
    ensure(find_palindrome(&s, 2).is_none(), "palindrome in T*")?;
    ensure(
        t.symbols() == common::thue(10_000).as_slice(),
        "T differs from the Thue–Morse oracle",
    )?;
    ensure(
        s.symbols() == common::thue_star(3_000).as_slice(),
        "T* differs from the oracle",
    )?;
    Ok("T[..10^4] square-free; T*[..3000] square- and palindrome-free".into())
}

fn criterion_2() -> Outcome {
    let w = generate_thue_star(100, abcd()).unwrap();
    let found = check_lazy_walk_rigidity(&w, 6).unwrap();
    ensure(found.is_empty(), format!("{} counterexamples", found.len()))?;
    Ok("T* window 100, k_max 6: 0 counterexamples".into())
}

fn criterion_3() -> Outcome {
    let cg = lattice(ConstructionKind::Strong16, "0:9,0:9");
    let found = check_lazy_walk_rigidity(&cg, 4).unwrap();
    ensure(found.is_empty(), format!("{} counterexamples", found.len()))?;
    Ok("strong16 [0..9]^2, k_max 4: 0 counterexamples".into())
}

fn criterion_4() -> Outcome {
    let cg = lattice(ConstructionKind::BadProduct, "0:15,0:15");
    let r = search(&cg, 6, true);
    ensure(
        r.status == Status::Witness,
        format!("status {:?}", r.status),
    )?;
    let w = r.witness.unwrap();
    validate_witness(&cg, &w).map_err(|e| e.to_string())?;
    Ok(format!(
        "bad-product 16x16 strong, k_max 6: witness k={} {:?}, validated",
        w.k, r.witness_colors
    ))
}

fn criterion_5() -> Outcome {
    let cg = lattice(ConstructionKind::Grid12Base, "0:7,0:7");
    let r = search(&cg, 2, true);
    ensure(
        r.status == Status::Witness,
        format!("status {:?}", r.status),
    )?;
    let w = r.witness.as_ref().unwrap();
    validate_witness(&cg, w).map_err(|e| e.to_string())?;
    ensure(w.k == 2, format!("k = {}", w.k))?;
    let c = &r.witness_colors;
    let even = |l: &str| ["a", "b", "c", "d"].contains(&l);
    let odd = |l: &str| ["x", "y", "z", "w"].contains(&l);
    ensure(c[0] == c[2] && c[1] == c[3], "not alternating")?;
    ensure(
        (even(&c[0]) && odd(&c[1])) || (odd(&c[0]) && even(&c[1])),
        "types do not alternate",
    )?;
    Ok(format!(
        "grid12-base 8x8, k_max 2: witness {c:?} at {:?}",
        r.witness_payloads
    ))
}

fn criterion_6() -> Outcome {
    let cg = lattice(ConstructionKind::Grid12, "0:11,0:11");
    ensure(
        cg.palette().len() == 12,
        format!("palette {}", cg.palette().len()),
    )?;
    let pruned = expect_pass("pruned", &cg, 7, true)?;
    let full = expect_pass("full", &cg, 7, false)?;
    Ok(format!(
        "grid12 12x12, k_max 7, palette 12: pass ({pruned} nodes pruned, {full} nodes full enumeration)"
    ))
}

fn criterion_7() -> Outcome {
    let two = lattice(ConstructionKind::Tensor { n: 2 }, "0:13,0:13");
    ensure(
        two.palette().len() <= 12,
        format!("n=2 palette {}", two.palette().len()),
    )?;
    let n2 = expect_pass("n=2", &two, 7, true)?;
    let three = lattice(ConstructionKind::Tensor { n: 3 }, "0:5,0:5,0:5");
    ensure(
        three.palette().len() <= 32,
        format!("n=3 palette {}", three.palette().len()),
    )?;
    let n3 = expect_pass("n=3", &three, 4, true)?;
    Ok(format!(
        "tensor n=2 [0..13]^2 palette {} k_max 7 pass ({n2} nodes); n=3 [0..5]^3 palette {} k_max 4 pass ({n3} nodes)",
        two.palette().len(),
        three.palette().len()
    ))
}

fn criterion_8() -> Outcome {
    let cg = lattice(ConstructionKind::Cart3d28, "0:5,0:5,0:5");
    ensure(
        cg.palette().len() <= 28,
        format!("palette {}", cg.palette().len()),
    )?;
    let base = expect_pass("[0..5]^3 k_max 4", &cg, 4, true)?;
    let big = lattice(ConstructionKind::Cart3d28, "0:6,0:6,0:6");
    let stretch = expect_pass("[0..6]^3 k_max 5", &big, 5, true)?;
    Ok(format!(
        "cart3d28 palette {}: [0..5]^3 k_max 4 pass ({base} nodes); stretch [0..6]^3 k_max 5 pass ({stretch} nodes)",
        cg.palette().len()
    ))
}

fn criterion_9() -> Outcome {
    let r4 = color_rook(4).unwrap();
    let r8 = color_rook(8).unwrap();
    ensure(
        r4.palette().len() == 8,
        format!("n=4 palette {}", r4.palette().len()),
    )?;
    ensure(
        r8.palette().len() == 32,
        format!("n=8 palette {}", r8.palette().len()),
    )?;
    ensure(
        check_edge_pair_types(&r4).unwrap().is_empty(),
        "n=4 edge-pair violations",
    )?;
    ensure(
        check_edge_pair_types(&r8).unwrap().is_empty(),
        "n=8 edge-pair violations",
    )?;
    let full = expect_pass("n=4 full", &r4, 5, false)?;
    let n8 = expect_pass("n=8", &r8, 4, true)?;
    Ok(format!(
        "rook palettes 8/32, edge pairs consistent; n=4 k_max 5 pass ({full} nodes full enumeration); n=8 k_max 4 pass ({n8} nodes)"
    ))
}

fn criterion_10() -> Outcome {
    let cg = color_biclique(4).unwrap();
    ensure(
        cg.palette().len() == 25,
        format!("palette {}", cg.palette().len()),
    )?;
    ensure(check_zero_alternation(&cg), "color 0 does not alternate")?;
    ensure(cg.graph().vertex_count() == 64, "not 64 vertices")?;
    let nodes = expect_pass("biclique", &cg, 4, true)?;
    Ok(format!(
        "biclique n=4 palette 25, zero alternates, k_max 4 pass ({nodes} nodes)"
    ))
}

fn pi_value(g: &Graph, cap: usize) -> Option<usize> {
    match exact_pi(g, cap) {
        PiOutcome::Exact { value, .. } => Some(value),
        PiOutcome::Exceeds { .. } => None,
    }
}

fn criterion_11() -> Outcome {
    for n in 4..=10 {
        let v = pi_value(&Graph::path(n).unwrap(), 4);
        ensure(v == Some(3), format!("pi(P{n}) = {v:?}"))?;
    }
    let p2 = pi_value(&Graph::path(2).unwrap(), 4);
    ensure(p2 == Some(2), format!("pi(P2) = {p2:?}"))?;
    let c4 = pi_value(&Graph::cycle(4).unwrap(), 4);
    ensure(c4 == Some(3), format!("pi(C4) = {c4:?}"))?;
    Ok("pi(P4..P10) = 3, pi(P2) = 2, pi(C4) = 3".into())
}

fn criterion_12() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut witnesses = 0;
    for case in 0..200 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.15..0.7);
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let c = rng.gen_range(1..=4u32);
        let colors: Vec<u32> = (0..n).map(|_| rng.gen_range(0..c)).collect();
        let cg = ColoredGraph::from_ids(g, colors).unwrap();
        let k_max = rng.gen_range(1..=3);
        let expect = common::naive_witness(cg.graph(), cg.colors(), k_max);
        let report = |p: usize| {
            let b = SearchBudget::new(k_max)
                .with_parallelism(p)
                .deterministic(true);
            find_repetitive_path(&cg, b).unwrap()
        };
        let (one, four) = (report(1), report(4));
        ensure(
            one.witness.is_some() == expect.is_some(),
            format!("case {case}: engine {:?}, oracle {expect:?}", one.witness),
        )?;
        ensure(
            one.to_json_string() == four.to_json_string(),
            format!("case {case}: reports differ across parallelism"),
        )?;
        witnesses += expect.is_some() as usize;
    }
    Ok(format!("200 random graphs agree with the oracle ({witnesses} with witnesses); reports byte-stable for parallelism 1 and 4"))
}

fn main() -> ExitCode {
    let minutes = Duration::from_secs(600);
    let criteria: [(fn() -> Outcome, Duration); 12] = [
        (criterion_1, Duration::from_secs(10)),
        (criterion_2, Duration::from_secs(60)),
        (criterion_3, Duration::from_secs(60)),
        (criterion_4, Duration::from_secs(60)),
        (criterion_5, Duration::from_secs(1)),
        (criterion_6, minutes),
        (criterion_7, minutes),
        (criterion_8, minutes),
        (criterion_9, minutes),
        (criterion_10, minutes),
        (criterion_11, Duration::from_secs(60)),
        (criterion_12, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (run, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let took = t.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *limit => Err(format!("{msg}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {:>2}: PASS  {msg} [{took:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {msg} [{took:.2?}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
