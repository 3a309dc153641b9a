//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p affix-cli --test acceptance -- --nocapture` to see them.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use affix_cli::formats::{parse_code, render_compositions};
use affix_core::approx::BudgetParams;
use affix_core::counting::{Constraint, PartialWord};
use affix_core::oracles::{count_candidates, enumerate_words, exists_code, min_cost_fix_free, Mode, OracleBudget};
use affix_core::{
    approx_optimal, available_count_fixfree, build_code_for_budget, build_fix_free_traced, build_prefix_free,
    check_prefix_feasibility, codeword_cost, is_distinct_code, is_fix_free, is_prefix_free,
    is_uniquely_decodable, merge_patterns, pattern_count, prefix_extension_count, sandwich_count,
    suffix_extension_count, total_cost, word_count, BigCount, BuildOutcome, Code, Codeword,
    Composition, CompositionMultiset, CostModel, FixFreeOutcome, Rational,
};

fn report(id: u32, name: &str, limit: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:?}, limit {limit:?}")),
        other => other,
    };
    match &outcome {
        Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} ({elapsed:.2?})"),
        Err(why) => println!("criterion {id:>2} FAIL  {name}: {why}"),
    }
    if let Err(why) = outcome {
        panic!("criterion {id} failed: {why}");
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn budget() -> OracleBudget {
    OracleBudget::default()
}

fn words_of(code: &Code) -> Vec<String> {
    code.words().iter().map(|w| w.to_string()).collect()
}

/// Every binary multiset with 1..=max_words codewords whose lengths sum to at
/// most `max_total`, each listed once.
fn binary_multisets(max_words: usize, max_total: usize) -> Vec<CompositionMultiset> {
    let comps: Vec<(usize, usize)> = (1..=max_total)
        .flat_map(|len| (0..=len).map(move |ones| (len - ones, ones)))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((picked, total)) = stack.pop() {
        if !picked.is_empty() {
            let pairs: Vec<_> = picked.iter().map(|&i| comps[i]).collect();
            out.push(CompositionMultiset::binary(&pairs).unwrap());
        }
        if picked.len() == max_words {
            continue;
        }
        let start = picked.last().copied().unwrap_or(0);
        for (i, &(z, o)) in comps.iter().enumerate().skip(start) {
            if total + z + o <= max_total {
                let mut next = picked.clone();
                next.push(i);
                stack.push((next, total + z + o));
            }
        }
    }
    out
}

fn ternary_multisets(max_words: usize, max_total: usize) -> Vec<CompositionMultiset> {
    let mut comps = Vec::new();
    for len in 1..=max_total {
        for a in 0..=len {
            for b in 0..=len - a {
                comps.push(vec![a, b, len - a - b]);
            }
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((picked, total)) = stack.pop() {
        if !picked.is_empty() {
            let list = picked.iter().map(|&i| Composition::new(comps[i].clone()));
            out.push(CompositionMultiset::new(3, list).unwrap());
        }
        if picked.len() == max_words {
            continue;
        }
        let start = picked.last().copied().unwrap_or(0);
        for (i, c) in comps.iter().enumerate().skip(start) {
            let len: usize = c.iter().sum();
            if total + len <= max_total {
                let mut next = picked.clone();
                next.push(i);
                stack.push((next, total + len));
            }
        }
    }
    out
}

#[test]
fn criterion_01_worked_prefix_example() {
    report(1, "prefix feasibility and construction example", Duration::from_secs(1), || {
        let delta = CompositionMultiset::binary(&[(2, 0), (1, 1), (3, 1)]).unwrap();
        let delta2 = CompositionMultiset::binary(&[(2, 0), (1, 1), (1, 1), (3, 1)]).unwrap();

        let v = check_prefix_feasibility(&delta);
        check(v.is_feasible(), || "Δ reported infeasible".into())?;
        for (comp, lhs, rhs) in [((2, 0), 1u32, 1u32), ((1, 1), 2, 1), ((3, 1), 4, 4)] {
            let c = Composition::binary(comp.0, comp.1);
            let row = v.rows.iter().find(|r| r.composition == c).ok_or("missing row")?;
            check(row.lhs == BigCount::from(lhs) && row.rhs == BigCount::from(rhs), || {
                format!("row {c}: {} >= {}, expected {lhs} >= {rhs}", row.lhs, row.rhs)
            })?;
        }

        let v2 = check_prefix_feasibility(&delta2);
        let w = v2.witness().ok_or("Δ′ reported feasible")?;
        check(
            w.composition == Composition::binary(3, 1) && w.lhs == BigCount::from(4u8) && w.rhs == BigCount::from(5u8),
            || format!("witness {} with {} < {}", w.composition, w.lhs, w.rhs),
        )?;

        let built = build_prefix_free(&delta).unwrap();
        let code = built.code().ok_or("Δ build failed")?;
        check(words_of(code) == ["00", "01", "1000"], || format!("built {:?}", words_of(code)))?;
        let failed = build_prefix_free(&delta2).unwrap();
        check(matches!(failed, BuildOutcome::Infeasible { .. }), || format!("Δ′ built {failed:?}"))?;
        Ok("Δ feasible (1≥1, 2≥1, 4≥4) → {00, 01, 1000}; Δ′ infeasible at (3,1) with 4 < 5".into())
    });
}

#[test]
fn criterion_02_code_class_examples() {
    report(2, "code class examples", Duration::from_secs(1), || {
        let cases: [(&[&str], [bool; 3]); 4] = [
            (&["00", "10", "11"], [true, true, true]),
            (&["00", "10", "11", "011"], [true, false, true]),
            (&["00", "10", "11", "110", "100"], [false, false, true]),
            (&["0", "001", "100", "110"], [false, false, false]),
        ];
        for (i, (words, expected)) in cases.iter().enumerate() {
            let code = Code::from_digit_strs(2, words).unwrap();
            let got = [is_prefix_free(&code), is_fix_free(&code), is_uniquely_decodable(&code)];
            check(got == *expected, || format!("S{}: got {got:?}, expected {expected:?}", i + 1))?;
        }
        Ok("S1..S4 classified (pf, ff, ud) exactly".into())
    });
}

#[test]
fn criterion_03_letter_cost_example() {
    report(3, "composition cost example", Duration::from_secs(1), || {
        let comp = Composition::new(vec![7, 2, 1, 1, 0, 3]);
        let costs = CostModel::new([1, 3, 3, 2, 10, 1].iter().map(|&c| q(c, 1)).collect()).unwrap();
        let cost = codeword_cost(&comp, &costs).unwrap();
        check(cost == q(21, 1), || format!("cost {cost}"))?;
        Ok("(7,2,1,1,0,3)·(1,3,3,2,10,1) = 21".into())
    });
}

/// Word set of one target as bitmasks over its enumerated words.
struct TargetWords {
    comp: Composition,
    words: Vec<Codeword>,
}

impl TargetWords {
    fn mask(&self, f: impl Fn(&Codeword) -> bool) -> Vec<u64> {
        let mut m = vec![0u64; self.words.len().div_ceil(64)];
        for (i, w) in self.words.iter().enumerate() {
            if f(w) {
                m[i / 64] |= 1 << (i % 64);
            }
        }
        m
    }
}

fn popcount_and(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as u64).sum()
}

fn popcount(a: &[u64]) -> u64 {
    a.iter().map(|x| x.count_ones() as u64).sum()
}

#[test]
fn criterion_04_counting_matches_enumeration() {
    report(4, "counting ≡ enumeration", Duration::from_secs(120), || {
        let mut constraint_words = Vec::new();
        for len in 1..=5usize {
            for bits in 0u32..(1 << len) {
                let w: Vec<u32> = (0..len).rev().map(|i| (bits >> i) & 1).collect();
                constraint_words.push(Codeword::new(w).unwrap());
            }
        }
        let mut checks = 0u64;
        for len in 1..=10usize {
            for ones in 0..=len {
                let comp = Composition::binary(len - ones, ones);
                let target = TargetWords { words: enumerate_words(&comp, &budget()).unwrap(), comp };
                let n = |v: u64| BigCount::from(v);

                check(word_count(&target.comp) == n(target.words.len() as u64), || {
                    format!("word_count {}", target.comp)
                })?;
                checks += 1;

                let fitting: Vec<&Codeword> = constraint_words.iter().filter(|w| w.len() <= len).collect();
                let pre: Vec<Vec<u64>> = fitting.iter().map(|w| target.mask(|c| w.is_prefix_of(c))).collect();
                let suf: Vec<Vec<u64>> = fitting.iter().map(|w| target.mask(|c| w.is_suffix_of(c))).collect();

                for (i, w) in fitting.iter().enumerate() {
                    let wc = w.composition(2);
                    let expect_pre = n(popcount(&pre[i]));
                    let expect_suf = n(popcount(&suf[i]));
                    check(prefix_extension_count(&wc, &target.comp) == expect_pre, || format!("prefix {w} in {}", target.comp))?;
                    check(suffix_extension_count(&wc, &target.comp) == expect_suf, || format!("suffix {w} in {}", target.comp))?;
                    let p = Constraint::Partial(PartialWord::with_prefix(len, w.symbols()).unwrap());
                    let s = Constraint::Partial(PartialWord::with_suffix(len, w.symbols()).unwrap());
                    check(pattern_count(&p, &target.comp).unwrap() == expect_pre, || format!("pattern prefix {w}"))?;
                    check(pattern_count(&s, &target.comp).unwrap() == expect_suf, || format!("pattern suffix {w}"))?;
                    checks += 4;
                }

                for (i, a) in fitting.iter().enumerate() {
                    let pa = PartialWord::with_prefix(len, a.symbols()).unwrap();
                    for (j, b) in fitting.iter().enumerate() {
                        let expected = n(popcount_and(&pre[i], &suf[j]));
                        let sb = PartialWord::with_suffix(len, b.symbols()).unwrap();
                        let merged = merge_patterns(&pa, &sb).unwrap();
                        check(pattern_count(&merged, &target.comp).unwrap() == expected, || {
                            format!("pattern {a}…{b} in {}", target.comp)
                        })?;
                        checks += 1;
                        if a.len() + b.len() <= len {
                            let got = sandwich_count(&a.composition(2), &b.composition(2), &target.comp).unwrap();
                            check(got == expected, || format!("sandwich {a}…{b} in {}", target.comp))?;
                            checks += 1;
                        }
                    }
                }
            }
        }
        Ok(format!("{checks} exact checks"))
    });
}

#[test]
fn criterion_05_prefix_builder_completeness() {
    report(5, "prefix builder ⟺ brute-force existence", Duration::from_secs(300), || {
        let family = binary_multisets(4, 12);
        let mut successes = 0;
        for ms in &family {
            let exists = exists_code(ms, Mode::PrefixFree, &budget()).unwrap();
            let outcome = build_prefix_free(ms).unwrap();
            check(outcome.code().is_some() == exists, || format!("{ms:?}: builder {outcome:?}, oracle {exists}"))?;
            if let Some(code) = outcome.code() {
                successes += 1;
                check(is_prefix_free(code), || format!("{ms:?}: output not prefix-free"))?;
                check(&CompositionMultiset::of_code(code).unwrap() == ms, || format!("{ms:?}: compositions differ"))?;
            }
        }
        Ok(format!("{} multisets, {successes} constructible", family.len()))
    });
}

#[test]
fn criterion_06_fixfree_builder_on_distinct_multisets() {
    report(6, "fix-free builder on distinct multisets", Duration::from_secs(300), || {
        let family: Vec<_> = binary_multisets(4, 12)
            .into_iter()
            .filter(|ms| is_distinct_code(&ms.lengths()))
            .collect();
        let (mut successes, mut steps_checked) = (0, 0);
        for ms in &family {
            let (outcome, steps) = build_fix_free_traced(ms).unwrap();
            let mut chosen: Vec<Codeword> = Vec::new();
            let mut comps: Vec<Composition> = Vec::new();
            for step in &steps {
                let oracle = count_candidates(&step.composition, &chosen, Mode::FixFree, &budget()).unwrap();
                let counted = available_count_fixfree(&step.composition, &comps).unwrap();
                check(counted == oracle && step.available == oracle, || {
                    format!("{ms:?}: step {} count {counted} vs oracle {oracle}", chosen.len() + 1)
                })?;
                steps_checked += 1;
                if let Some(w) = &step.word {
                    chosen.push(w.clone());
                    comps.push(step.composition.clone());
                }
            }
            let exists = exists_code(ms, Mode::FixFree, &budget()).unwrap();
            check(outcome.code().is_some() == exists, || format!("{ms:?}: builder {outcome:?}, oracle {exists}"))?;
            match &outcome {
                FixFreeOutcome::Success(code) => {
                    successes += 1;
                    check(is_fix_free(code), || format!("{ms:?}: output not fix-free"))?;
                    check(&CompositionMultiset::of_code(code).unwrap() == ms, || format!("{ms:?}: compositions differ"))?;
                }
                FixFreeOutcome::Infeasible { .. } => {}
                FixFreeOutcome::NotApplicable { .. } => return Err(format!("{ms:?}: NotApplicable on a distinct multiset")),
            }
        }
        Ok(format!("{} distinct multisets, {successes} constructible, {steps_checked} step counts", family.len()))
    });
}

#[test]
fn criterion_07_budgeted_construction_guarantees() {
    report(7, "budgeted construction guarantees", Duration::from_secs(300), || {
        let mut probes = 0;
        for n in 2..=4usize {
            for m in [q(1, 1), q(2, 1), q(3, 1), q(5, 2)] {
                let opt = min_cost_fix_free(n, &m, n, &budget()).unwrap().ok_or("oracle found no code")?;
                let ratio = q(5, 1) + q(1, n as i64 - 1);
                let top = q(n as i64, 1) * (q(n as i64 - 1, 1) + &m);
                let mut x = q(0, 1);
                let mut succeeded = false;
                while x <= top {
                    probes += 1;
                    let p = BudgetParams::new(n, m.clone(), x.clone()).unwrap();
                    let built = build_code_for_budget(&p);
                    check(built.is_ok() || !succeeded, || format!("n={n} m={m}: success not monotone at x={x}"))?;
                    if let Ok(code) = &built {
                        succeeded = true;
                        check(code.len() == n, || format!("n={n} m={m} x={x}: {} words", code.len()))?;
                        for w in code.words() {
                            let ones = w.symbols().iter().filter(|&&s| s == 1).count();
                            check(w.len() == p.length_bound() + 1 && ones <= p.ones_bound() + 1, || {
                                format!("n={n} m={m} x={x}: word {w} breaks length/ones caps")
                            })?;
                        }
                        check(is_fix_free(code), || format!("n={n} m={m} x={x}: not fix-free"))?;
                    }
                    if opt <= x {
                        let code = built.map_err(|e| format!("n={n} m={m} x={x}: failed although OPT={opt}: {e}"))?;
                        let cost = total_cost(&code, &m).unwrap();
                        check(cost <= &ratio * &x, || format!("n={n} m={m} x={x}: cost {cost} > {ratio}·x"))?;
                    }
                    x += q(1, 4);
                }
            }
        }
        Ok(format!("{probes} budgets checked"))
    });
}

#[test]
fn criterion_08_approximation_ratio() {
    report(8, "end-to-end approximation ratio", Duration::from_secs(120), || {
        let eps = q(1, 4);
        let mut lines = Vec::new();
        for n in 2..=3usize {
            for m in [q(1, 1), q(2, 1), q(3, 1)] {
                let r = approx_optimal(n, &m, &eps).unwrap();
                let opt = min_cost_fix_free(n, &m, n, &budget()).unwrap().ok_or("oracle found no code")?;
                let cost = total_cost(&r.code, &m).unwrap();
                let bound = (q(5, 1) + q(1, n as i64 - 1) + &eps) * &opt;
                check(is_fix_free(&r.code) && r.code.len() == n, || format!("n={n} m={m}: invalid code"))?;
                check(cost <= bound, || format!("n={n} m={m}: cost {cost} > bound {bound}"))?;
                lines.push(format!("n={n} m={m}: {cost} vs OPT {opt}"));
            }
        }
        Ok(lines.join("; "))
    });
}

#[test]
fn criterion_09_ternary_feasibility() {
    report(9, "ternary feasibility ⟺ brute-force existence", Duration::from_secs(300), || {
        let family = ternary_multisets(3, 8);
        let mut feasible = 0;
        for ms in &family {
            let verdict = check_prefix_feasibility(ms).is_feasible();
            let exists = exists_code(ms, Mode::PrefixFree, &budget()).unwrap();
            check(verdict == exists, || format!("{ms:?}: verdict {verdict}, oracle {exists}"))?;
            feasible += verdict as usize;
        }
        Ok(format!("{} multisets, {feasible} feasible", family.len()))
    });
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_affix")).args(args).output().expect("spawn affix");
    (out.status.code().unwrap_or(-1), out.stdout, out.stderr)
}

fn round_trip(dir: &Path, name: &str, subcommand: &str, ms: &CompositionMultiset, property: &str) -> Result<(), String> {
    let input = dir.join(format!("{name}.txt"));
    std::fs::write(&input, render_compositions(ms)).unwrap();
    let input = input.to_str().unwrap();

    let mut runs = Vec::new();
    for _ in 0..2 {
        let start = Instant::now();
        runs.push(run_cli(&[subcommand, input]));
        check(start.elapsed() < Duration::from_secs(1), || format!("{name}: run took {:?}", start.elapsed()))?;
    }
    let (first, second) = (&runs[0], &runs[1]);
    check(first == second, || format!("{name}: output differs between runs"))?;
    check(first.0 == 0, || format!("{name}: exit {} ({})", first.0, String::from_utf8_lossy(&first.2)))?;

    let output = dir.join(format!("{name}.code"));
    std::fs::write(&output, &first.1).unwrap();
    let (status, stdout, _) = run_cli(&["verify", "--property", property, output.to_str().unwrap()]);
    check(status == 0 && stdout == b"TRUE\n", || format!("{name}: verify --property {property} said {}", String::from_utf8_lossy(&stdout)))?;

    let code = parse_code(std::str::from_utf8(&first.1).unwrap(), Some(2)).map_err(|e| e.to_string())?;
    let back = CompositionMultiset::of_code(&code).unwrap();
    check(render_compositions(&back) == render_compositions(ms), || format!("{name}: compositions changed"))
}

#[test]
fn criterion_10_cli_round_trip() {
    report(10, "CLI round trip", Duration::from_secs(30), || {
        let dir = tempfile::tempdir().unwrap();
        let prefix_cases = [
            vec![(2, 0), (1, 1), (3, 1)],
            vec![(1, 1), (2, 0), (2, 1), (1, 3), (3, 2), (4, 4), (6, 2), (0, 9)],
            vec![(1, 0), (0, 2), (1, 2), (2, 2), (5, 5)],
        ];
        let fixfree_cases = [
            vec![(1, 0), (0, 2)],
            vec![(2, 0), (0, 2), (2, 2), (2, 2), (2, 2), (4, 4), (4, 4), (5, 3)],
            vec![(1, 1), (1, 1), (0, 4), (4, 0)],
        ];
        for (i, pairs) in prefix_cases.iter().enumerate() {
            let ms = CompositionMultiset::binary(pairs).unwrap();
            round_trip(dir.path(), &format!("prefix{i}"), "build-prefix", &ms, "prefix")?;
        }
        for (i, pairs) in fixfree_cases.iter().enumerate() {
            let ms = CompositionMultiset::binary(pairs).unwrap();
            round_trip(dir.path(), &format!("fixfree{i}"), "build-fixfree", &ms, "fixfree")?;
        }
        Ok(format!("{} build-prefix and {} build-fixfree cases", prefix_cases.len(), fixfree_cases.len()))
    });
}
