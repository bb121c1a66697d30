//! The acceptance suite: one line per criterion, `PASS` or `FAIL` with the
//! reason. Runs without the test harness so the lines always show:
//! `cargo test -p largeness-cli --test acceptance`.
//!
//! Criterion 10 contains one part that cannot run at this scale (the KS
//! descent from `tow_2(e0)` needs at least 4^256 limit steps); it is printed
//! as FAIL, and the test asserts that exact infeasibility report rather than
//! a pass.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use largeness::estimation::{greatest_below, inflate, inflate_psn_bound};
use largeness::hardy::{hardy_accelerated, hardy_value, Carrier, Outcome};
use largeness::oracle::{enumerate, nmk_formula, verify, Verdict, VerifyReport, MAX_BITS};
use largeness::{parse_ordinal, render, Ordinal, Style};

/// Wall-clock limits per criterion, pinned here. Debug builds are slower
/// than the targets, so each limit carries a factor of 5 over the target.
const SLOWDOWN: u32 = 5;
const LIMITS_SECS: [u64; 11] = [1, 1, 1, 60, 10, 10, 60, 120, 60, 120, 60];

fn p(s: &str) -> Ordinal {
    parse_ordinal(s).unwrap()
}

fn run(id: &str, params: &[(&str, &str)]) -> VerifyReport {
    let map: BTreeMap<String, String> = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    verify(id, &map, None).unwrap_or_else(|e| panic!("{id}: {e}"))
}

type Checked = Result<String, String>;

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: &VerifyReport) -> Result<(), String> {
    match &r.verdict {
        Verdict::Pass => Ok(()),
        v => Err(format!("{}: {v:?}", r.lemma_id)),
    }
}

fn counting() -> Checked {
    let u = enumerate(&Ordinal::eps(0), 2).map_err(|e| e.to_string())?;
    need(u.len() == 27, || format!("|psn<=2 below e0| = {}", u.len()))?;
    need(BigUint::from(u.len()) == nmk_formula(2, 1, 0).unwrap(), || "formula (2,1,0) differs".into())?;
    let one = enumerate(&Ordinal::eps(0), 1).unwrap();
    need(one == vec![p("0"), p("1")], || format!("psn<=1 below e0: {one:?}"))?;
    let e1 = enumerate(&Ordinal::eps(1), 1).unwrap();
    need(e1.len() == 2 && nmk_formula(1, 1, 1).unwrap() == BigUint::from(2u32), || "e1 count".into())?;
    Ok("27 = N(2,1,0); 2 = N(1,1,0); 2 = N(1,1,1)".into())
}

fn hardy_values() -> Checked {
    // Closed forms: h_{w*k}(x) = 2^k x and h_{w^2}(x) = 2^x x.
    let w_k = |k: u32, x: u64| (1u64 << k) * x;
    let w2 = |x: u64| (1u64 << x) * x;
    let cases = [("w", 3, w_k(1, 3)), ("w^2", 2, w2(2)), ("w^2*2", 2, w2(w2(2)))];
    for (a, x, want) in cases {
        let got = hardy_value(&p(a), x, Carrier::Successor, 10_000_000).unwrap();
        need(got == Outcome::Value(want), || format!("h_{a}({x}) = {got:?}, expected {want}"))?;
    }
    need(cases.map(|c| c.2) == [6, 8, 2048], || "closed forms disagree with the stated values".into())?;
    Ok("h_w(3)=6, h_w^2(2)=8, h_w^2*2(2)=2048".into())
}

fn hardy_tower() -> Checked {
    let alpha = p("w^2*2");
    for x in 1..=6u64 {
        // Exact: by stepping where feasible (and then the two evaluators must
        // agree), by the accelerated evaluator beyond.
        let fast = hardy_accelerated(&alpha, x, MAX_BITS).unwrap().ok_or("value beyond bit cap")?;
        if let Outcome::Value(v) = hardy_value(&alpha, x, Carrier::Successor, 1_000_000).unwrap() {
            need(BigUint::from(v) == fast, || format!("evaluators disagree at {x}"))?;
        }
        need(fast >= BigUint::from(x + 1), || format!("h_w^2*2({x}) = {fast} < {}", x + 1))?;
    }
    let budget = 1_000_000;
    match hardy_value(&p("w^2*4"), 2, Carrier::Successor, budget).unwrap() {
        Outcome::BudgetExceeded(s) => need(2 + s >= 27, || format!("only {s} successor steps certified"))?,
        Outcome::Value(v) => need(v >= 27, || format!("h_w^2*4(2) = {v}"))?,
        Outcome::Undefined => return Err("undefined".into()),
    }
    passed(&run("hardy-tower", &[]))?;
    Ok("h_w^2*2(x) >= x+1 on 1..6; h_w^2*4(2) >= 27 certified by a budget overrun".into())
}

fn fundamental() -> Checked {
    let below = run("fund-below", &[("bound", "w^3+1"), ("psn_cap", "3"), ("n", "2..4")]);
    passed(&below)?;
    let reach = run("fund-reach", &[("bound", "w^3+1"), ("psn_cap", "3"), ("n", "2,3"), ("budget", "1000000")]);
    passed(&reach)?;
    Ok(format!("fund-below {} instances, fund-reach {} instances", below.instances, reach.instances))
}

fn greatest() -> Checked {
    let r = run("go-max", &[("bound", "e0"), ("psn_cap", "2"), ("extra", "e0,e0^2,e0*2,w^3"), ("a", "1,2")]);
    passed(&r)?;
    let go = greatest_below(2, &p("w^3")).unwrap();
    need(go == p("w^2*2 + w*2 + 2"), || format!("GO(2, w^3) = {go}"))?;
    Ok(format!("go-max {} instances; GO(2, w^3) = {go}", r.instances))
}

fn inflation() -> Checked {
    passed(&run("psn-F", &[("bound", "e0"), ("psn_cap", "2"), ("extra", "e0,e0*2+w,e0^2*2,e0^e0")]))?;
    need(inflate(&p("w^2")) == p("w^2+w+1"), || "F(w^2)".into())?;
    need(inflate(&p("e0")) == p("e0*2+1"), || "F(e0)".into())?;
    let bound = inflate_psn_bound(2, -1, MAX_BITS).unwrap();
    need(bound == Some(BigUint::from(54u32)), || format!("bound for a=2, m=-1 is {bound:?}"))?;
    for a in enumerate(&Ordinal::eps(0), 2).unwrap() {
        need(inflate(&a).psn() <= 54, || format!("psn(F({a})) = {}", inflate(&a).psn()))?;
    }
    Ok("explicit = recursive; F(w^2)=w^2+w+1; F(e0)=e0*2+1; psn(F) <= 54".into())
}

fn natural_sum() -> Checked {
    let u = enumerate(&Ordinal::eps(0), 2).unwrap();
    for a in &u {
        for b in &u {
            need(a.natural_sum(b) == b.natural_sum(a), || format!("{a} # {b} not commutative"))?;
            for c in &u {
                need(a.natural_sum(b).natural_sum(c) == a.natural_sum(&b.natural_sum(c)), || {
                    format!("({a} # {b}) # {c} not associative")
                })?;
                if b < c {
                    need(a.natural_sum(b) < a.natural_sum(c), || format!("{a} # _ not monotone at {b} < {c}"))?;
                }
            }
        }
    }
    let r = run("natsum-split", &[("ordinals", "1,2,3,w,w+1,w*2"), ("min", "2,3,4")]);
    passed(&r)?;
    Ok(format!("algebra on 27^3 triples; {} splits", r.instances))
}

fn estimation() -> Checked {
    let r = run(
        "estimation",
        &[
            ("range", "2..9"),
            ("max_size", "3"),
            ("alphas", "w,w*2"),
            ("samples", "10000"),
            ("sizes", "4,5"),
            ("random_alphas", "w^2,w^2*2"),
        ],
    );
    passed(&r)?;
    need(r.instances >= 10_000, || format!("only {} instances", r.instances))?;
    Ok(format!("{} instances", r.instances))
}

fn ketonen_solovay() -> Checked {
    let r = run("ks-psn", &[("bound", "w*3+1"), ("psn_cap", "2"), ("range", "2..9")]);
    passed(&r)?;
    Ok(format!("{} instances (psn bound and exact-largeness consistency)", r.instances))
}

/// The parts that run are asserted; the infeasible one is reported as the
/// criterion's failure.
fn partitions() -> Checked {
    let l3 = run("l3-cases", &[("samples", "1000"), ("m", "0")]);
    passed(&l3)?;
    let lk = run("lk-hom", &[("k", "4,5")]);
    passed(&lk)?;
    let small = run("rk-mech", &[("m", "-1"), ("k", "3"), ("lo", "4"), ("hi", "12")]);
    passed(&small)?;
    let rk = run("rk-mech", &[("m", "0"), ("k", "3"), ("lo", "4"), ("hi", "12"), ("budget", "1000000")]);
    match &rk.verdict {
        Verdict::Skipped { reason } if reason.contains("4^256") && reason.contains("1000000") => Err(format!(
            "mechanics at m=0 not run: {reason} (l3-cases, lk-hom and the base-omega analogue with {} homogeneous sets pass)",
            small.instances
        )),
        Verdict::Pass => Ok(format!("rk-mech {} instances", rk.instances)),
        other => panic!("unexpected rk-mech verdict {other:?}"),
    }
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_largeness"))
}

fn cli() -> Checked {
    let mut universe = enumerate(&Ordinal::eps(0), 2).unwrap();
    universe.extend(enumerate(&p("w^3+1"), 3).unwrap());
    universe.extend(["e0", "e0^2", "e0*2", "e0*2+w", "e0^2*2", "e0^e0", "e1*3 + e0^(e0+1) + 5"].map(p));
    for a in &universe {
        for style in [Style::Ascii, Style::Unicode] {
            let text = render(a, style);
            let back = parse_ordinal(&text).map_err(|e| format!("{text}: {e}"))?;
            need(back == *a, || format!("{text} parses to {back}"))?;
        }
    }

    let code = |args: &[&str]| binary().args(args).output().unwrap().status.code();
    need(code(&["verify", "count-nmk"]) == Some(0), || "Pass should exit 0".into())?;
    need(code(&["verify", "count-nmk", "expect=26"]) == Some(1), || "Fail should exit 1".into())?;
    need(code(&["verify", "count-nmk", "a=3"]) == Some(3), || "Skipped should exit 3".into())?;
    need(code(&["verify", "no-such-lemma"]) == Some(2), || "unknown lemma should exit 2".into())?;

    let out = binary().args(["ks", "w*2", "--set", "2,3,4,5,6,7,8"]).output().unwrap();
    let got = String::from_utf8(out.stdout).unwrap();
    need(got == include_str!("golden/ks_w2.jsonl"), || format!("golden mismatch:\n{got}"))?;
    // The golden trace, stepped by hand.
    let by_hand = ["w + 2", "w + 1", "4", "3", "2", "1", "0"];
    for (line, (x, want)) in got.lines().zip((2u64..).zip(by_hand)) {
        let rec: serde_json::Value = serde_json::from_str(line).unwrap();
        need(rec["position"] == x && rec["ordinal"] == want, || format!("record {line}"))?;
    }
    Ok(format!("{} round-trips; exit codes 0/1/3/2; golden ks trace", universe.len()))
}

fn main() {
    type Criterion = (&'static str, fn() -> Checked);
    let criteria: [Criterion; 11] = [
        ("counting", counting),
        ("hardy values", hardy_values),
        ("hardy tower bound", hardy_tower),
        ("fundamental sequences", fundamental),
        ("greatest ordinal below", greatest),
        ("inflation F", inflation),
        ("natural sum and splitting", natural_sum),
        ("estimation", estimation),
        ("ketonen-solovay", ketonen_solovay),
        ("partitions", partitions),
        ("cli", cli),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let limit = Duration::from_secs(LIMITS_SECS[i]) * SLOWDOWN;
        let result = match result {
            Ok(msg) if took > limit => Err(format!("{msg}; took {took:.1?}, limit {limit:?}")),
            r => r,
        };
        match &result {
            Ok(msg) => println!("criterion {n:>2} PASS  {name}: {msg} [{took:.2?}]"),
            Err(msg) => println!("criterion {n:>2} FAIL  {name}: {msg} [{took:.2?}]"),
        }
        // Criterion 10 is expected to fail only through the infeasible part.
        let expected_failure = n == 10 && matches!(&result, Err(m) if m.contains("mechanics at m=0 not run"));
        if result.is_err() && !expected_failure {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria failed: {unexpected:?}");
        std::process::exit(1);
    }
}
