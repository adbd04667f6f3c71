//! Acceptance suite: one test per shipping criterion, each emitting a
//! single pass/fail line (visible with `--nocapture`). A criterion fails
//! honestly: every violated check is listed before the test panics.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};

use glaisher_core::{
    classic_glaisher_count, count, enumerate, forward_map, gf_d_direct, gf_d_simplified, gf_o,
    inverse_map, proof_chain_check, ClassParams, EnumSpec, Partition,
};

fn conclude(criterion: u32, label: &str, failures: Vec<String>, elapsed: Duration) {
    if failures.is_empty() {
        println!(
            "criterion {criterion} PASS: {label} ({} ms)",
            elapsed.as_millis()
        );
    } else {
        println!(
            "criterion {criterion} FAIL: {label} ({} ms)",
            elapsed.as_millis()
        );
        for f in failures.iter().take(8) {
            println!("  - {f}");
        }
        if failures.len() > 8 {
            println!("  - ... and {} more", failures.len() - 8);
        }
        panic!("criterion {criterion} failed {} check(s)", failures.len());
    }
}

fn partition(pairs: &[(u64, u64)]) -> Partition {
    Partition::from_pairs(pairs.iter().copied()).unwrap()
}

fn params(s: u64, n_limit: u64) -> ClassParams {
    ClassParams::new(s, n_limit).unwrap()
}

fn glaisher(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_glaisher"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_1_both_classes_of_weight_10_have_the_same_seven_members() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let p = params(2, 3);

    let o_count = count(&EnumSpec::class_o(10, p));
    let d_count = count(&EnumSpec::class_d(10, p));
    if o_count != BigUint::from(7u32) {
        failures.push(format!("O-class count is {o_count}, want 7"));
    }
    if d_count != BigUint::from(7u32) {
        failures.push(format!("D-class count is {d_count}, want 7"));
    }

    let listed: BTreeSet<Partition> = [
        partition(&[(5, 2)]),
        partition(&[(5, 1), (3, 1), (1, 2)]),
        partition(&[(5, 1), (1, 5)]),
        partition(&[(3, 3), (1, 1)]),
        partition(&[(3, 2), (1, 4)]),
        partition(&[(3, 1), (1, 7)]),
        partition(&[(1, 10)]),
    ]
    .into_iter()
    .collect();
    let o_found: BTreeSet<Partition> = enumerate(&EnumSpec::class_o(10, p)).into_iter().collect();
    if o_found != listed {
        failures.push(format!(
            "O-class members differ from the listed seven: {o_found:?}"
        ));
    }

    let d_found = enumerate(&EnumSpec::class_d(10, p));
    if d_found.len() != 7 {
        failures.push(format!("D-class has {} members, want 7", d_found.len()));
    }
    for member in &d_found {
        if member.weight() != 10 {
            failures.push(format!(
                "D-class member {member} has weight {}",
                member.weight()
            ));
        }
        if !member.is_in_d(&p) {
            failures.push(format!(
                "enumerated member {member} fails the class predicate"
            ));
        }
    }
    for expected in [
        partition(&[(6, 1), (3, 1), (1, 1)]),
        partition(&[(5, 2)]),
        partition(&[(5, 1), (4, 1), (1, 1)]),
        partition(&[(5, 1), (3, 1), (2, 1)]),
        partition(&[(4, 2), (2, 1)]),
        partition(&[(4, 1), (3, 1), (2, 1), (1, 1)]),
    ] {
        if !d_found.contains(&expected) {
            failures.push(format!("D-class is missing {expected}"));
        }
    }

    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        failures.push(format!("took {elapsed:?}, budget is 1 s"));
    }
    conclude(
        1,
        "both classes of weight 10 at (s=2, N=3) have the same seven members",
        failures,
        elapsed,
    );
}

#[test]
fn criterion_2_rewrite_of_the_177_example_keeps_weight_177() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let p = params(3, 4);
    let source = partition(&[(11, 6), (7, 5), (5, 7), (4, 5), (2, 2), (1, 17)]);
    let expected_image = partition(&[
        (12, 1),
        (11, 6),
        (9, 1),
        (7, 5),
        (5, 7),
        (4, 2),
        (3, 2),
        (2, 2),
        (1, 2),
    ]);

    match forward_map(&source, &p) {
        Err(e) => failures.push(format!("forward map failed: {e}")),
        Ok((image, trace)) => {
            if image != expected_image {
                failures.push(format!("image is {image}, want {expected_image}"));
            }
            if image.weight() != 177 {
                failures.push(format!("image weight is {}, want 177", image.weight()));
            }
            match inverse_map(&image, &p) {
                Err(e) => failures.push(format!("inverse map failed: {e}")),
                Ok(back) if back != source => {
                    failures.push(format!("inverse returned {back}, want {source}"));
                }
                Ok(_) => {}
            }

            let alphas: Vec<(u64, u32)> = trace
                .rewrites
                .iter()
                .map(|r| (r.base_part, r.alpha))
                .collect();
            let expected_alphas = [(11, 0), (7, 0), (5, 0), (4, 1), (2, 1), (1, 2)];
            if alphas != expected_alphas {
                failures.push(format!(
                    "alpha column is {alphas:?}, want {expected_alphas:?}"
                ));
            }
            for (base, want_beta, want_digits) in
                [(4u64, 1u64, vec![2u64]), (1, 1, vec![2, 2]), (5, 7, vec![])]
            {
                match trace.rewrites.iter().find(|r| r.base_part == base) {
                    None => failures.push(format!("no rewrite recorded for base part {base}")),
                    Some(r) => {
                        if r.beta != want_beta || r.digits != want_digits {
                            failures.push(format!(
                                "split of f={} for base part {base}: beta={} digits={:?}, \
                                 want beta={want_beta} digits={want_digits:?}",
                                r.f, r.beta, r.digits
                            ));
                        }
                    }
                }
            }
        }
    }

    let elapsed = start.elapsed();
    conclude(
        2,
        "the weight-177 rewrite keeps weight 177 and roundtrips",
        failures,
        elapsed,
    );
}

#[test]
fn criterion_3_sweep_counts_series_and_roundtrips_agree() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let bound = 40usize;
    for s in 1..=5u64 {
        for n_limit in 1..=5u64 {
            let p = params(s, n_limit);
            let o_series = gf_o(&p, bound);
            let d_direct = gf_d_direct(&p, bound);
            let d_simplified = gf_d_simplified(&p, bound);
            for n in 0..=40u64 {
                let cell = format!("s={s} N={n_limit} n={n}");
                let o_count = count(&EnumSpec::class_o(n, p));
                let d_count = count(&EnumSpec::class_d(n, p));
                if o_count != d_count {
                    failures.push(format!("{cell}: counts O={o_count} D={d_count}"));
                }
                let o_big = BigInt::from(o_count.clone());
                let d_big = BigInt::from(d_count.clone());
                if o_series.coeff(n as usize) != Some(&o_big) {
                    failures.push(format!("{cell}: O series coefficient mismatch"));
                }
                if d_direct.coeff(n as usize) != Some(&d_big) {
                    failures.push(format!("{cell}: direct D series coefficient mismatch"));
                }
                if d_simplified.coeff(n as usize) != Some(&d_big) {
                    failures.push(format!("{cell}: simplified D series coefficient mismatch"));
                }

                let sources = enumerate(&EnumSpec::class_o(n, p));
                let targets = enumerate(&EnumSpec::class_d(n, p));
                let mut images = BTreeSet::new();
                for lambda in &sources {
                    match forward_map(lambda, &p) {
                        Err(e) => failures.push(format!("{cell}: forward of {lambda} failed: {e}")),
                        Ok((image, _)) => {
                            if image.weight() != lambda.weight() {
                                failures.push(format!("{cell}: weight changed for {lambda}"));
                            }
                            if inverse_map(&image, &p).as_ref() != Ok(lambda) {
                                failures.push(format!("{cell}: roundtrip failed for {lambda}"));
                            }
                            images.insert(image);
                        }
                    }
                }
                if images.len() != sources.len() {
                    failures.push(format!("{cell}: forward map is not injective"));
                }
                let target_set: BTreeSet<Partition> = targets.iter().cloned().collect();
                if images != target_set {
                    failures.push(format!(
                        "{cell}: image set differs from the enumerated class"
                    ));
                }
                for mu in &targets {
                    let back = inverse_map(mu, &p)
                        .ok()
                        .and_then(|pre| forward_map(&pre, &p).ok())
                        .map(|(image, _)| image);
                    if back.as_ref() != Some(mu) {
                        failures.push(format!("{cell}: reverse roundtrip failed for {mu}"));
                    }
                }
            }
        }
    }

    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}, budget is 60 s"));
    }
    conclude(
        3,
        "sweep s<=5, N<=5, n<=40: equal counts, matching series, bijective roundtrips",
        failures,
        elapsed,
    );
}

#[test]
fn criterion_4_product_form_chain_agrees_to_degree_300() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (s, n_limit) in [(2u64, 10u64), (3, 7), (5, 4)] {
        let check = proof_chain_check(&params(s, n_limit), 300);
        if let Some(m) = check.first_mismatch {
            failures.push(format!(
                "s={s} N={n_limit}: form {} differs at degree {}: expected {}, found {}",
                m.form, m.degree, m.reference, m.found
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        failures.push(format!("took {elapsed:?}, budget is 5 s"));
    }
    conclude(
        4,
        "all four product forms agree to degree 300 at (2,10), (3,7), (5,4)",
        failures,
        elapsed,
    );
}

#[test]
fn criterion_5_specializations_match_their_simpler_statements() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // s = 2: membership in the bounded-repetition class must coincide with
    // "parts <= 2N and parts <= N pairwise distinct"
    for n in 0..=30u64 {
        let everything = enumerate(&EnumSpec::unrestricted(n, n.max(1)).unwrap());
        for n_limit in 1..=6u64 {
            let p = params(2, n_limit);
            for lambda in &everything {
                let direct = lambda
                    .iter()
                    .all(|(part, mult)| part <= 2 * n_limit && (part > n_limit || mult == 1));
                if lambda.is_in_d(&p) != direct {
                    failures.push(format!(
                        "s=2 N={n_limit}: {lambda} direct={direct} predicate={}",
                        lambda.is_in_d(&p)
                    ));
                }
            }
        }
    }

    // weights at most N never touch the part bound, so the bounded count
    // must equal the unbounded one
    for s in 1..=5u64 {
        for n_limit in 1..=20u64 {
            let p = params(s, n_limit);
            for n in 0..=n_limit {
                let bounded = count(&EnumSpec::class_o(n, p));
                let unbounded = classic_glaisher_count(n, s);
                if bounded != unbounded {
                    failures.push(format!(
                        "s={s} N={n_limit} n={n}: bounded={bounded} unbounded={unbounded}"
                    ));
                }
            }
        }
    }

    let elapsed = start.elapsed();
    conclude(
        5,
        "s=2 membership and large-limit counts reduce to their simpler forms",
        failures,
        elapsed,
    );
}

#[test]
fn criterion_6_domain_errors_are_named_and_nothing_panics() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // CLI domain errors must name the offending part and exit 2
    let divisible = glaisher(&["map", "--s", "2", "--N", "3", "--partition", "6 1"]);
    let err = String::from_utf8_lossy(&divisible.stderr).to_string();
    if divisible.status.code() != Some(2) || !err.contains("part 6") {
        failures.push(format!(
            "divisible-part map: code={:?} stderr={err:?}",
            divisible.status.code()
        ));
    }
    let oversized = glaisher(&["map", "--s", "2", "--N", "3", "--partition", "7"]);
    let err = String::from_utf8_lossy(&oversized.stderr).to_string();
    if oversized.status.code() != Some(2) || !err.contains("part 7") {
        failures.push(format!(
            "oversized-part map: code={:?} stderr={err:?}",
            oversized.status.code()
        ));
    }

    // series with s = 1 must be the constant-1 series in every form
    for form in ["O", "D", "D-simplified"] {
        let dump = glaisher(&[
            "series", "--s", "1", "--N", "5", "--bound", "8", "--form", form,
        ]);
        let body = String::from_utf8_lossy(&dump.stdout).to_string();
        let mut lines = body.lines();
        let header = lines.next().unwrap_or("");
        if !dump.status.success() || header != format!("# s=1 N=5 form={form} bound=8") {
            failures.push(format!("s=1 series header for form {form}: {header:?}"));
        }
        for (degree, line) in lines.enumerate() {
            let want = if degree == 0 {
                "0\t1".to_string()
            } else {
                format!("{degree}\t0")
            };
            if line != want {
                failures.push(format!("s=1 series form {form} degree {degree}: {line:?}"));
            }
        }
    }

    // grammar-valid extremes must produce clean errors or clean output
    for (args, want_code) in [
        (
            vec![
                "map",
                "--s",
                "2",
                "--N",
                "3",
                "--partition",
                "99999999999999999999",
            ],
            2,
        ),
        (
            vec![
                "map",
                "--s",
                "2",
                "--N",
                "3",
                "--partition",
                "1^18446744073709551615",
            ],
            0,
        ),
        (
            vec![
                "unmap",
                "--s",
                "2",
                "--N",
                "3",
                "--partition",
                "6^18446744073709551615",
            ],
            2,
        ),
        (vec!["map", "--s", "5", "--N", "5", "--partition", ""], 0),
    ] {
        let out = glaisher(&args);
        if out.status.code() != Some(want_code) {
            failures.push(format!(
                "{args:?}: exit {:?}, want {want_code}",
                out.status.code()
            ));
        }
    }

    // every partition with parts in range maps without panicking, and the
    // maps succeed exactly on class members
    for s in 1..=5u64 {
        for n_limit in 1..=5u64 {
            let p = params(s, n_limit);
            for n in 0..=18u64 {
                for lambda in enumerate(&EnumSpec::unrestricted(n, p.part_limit()).unwrap()) {
                    let forward_ok = forward_map(&lambda, &p).is_ok();
                    if forward_ok != lambda.is_in_o(&p) {
                        failures.push(format!(
                            "s={s} N={n_limit}: forward acceptance of {lambda} disagrees with membership"
                        ));
                    }
                    let inverse_ok = inverse_map(&lambda, &p).is_ok();
                    if inverse_ok != lambda.is_in_d(&p) {
                        failures.push(format!(
                            "s={s} N={n_limit}: inverse acceptance of {lambda} disagrees with membership"
                        ));
                    }
                }
            }
        }
    }

    let elapsed = start.elapsed();
    conclude(
        6,
        "domain errors name the violating part; extremes and sweeps never panic",
        failures,
        elapsed,
    );
}
