//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use sepset_core::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn set(indices: &[usize]) -> VarSet {
    indices.iter().copied().collect()
}

fn c1_exact_totals() -> Outcome {
    let start = Instant::now();
    let bu = fixture("bu");
    let t1 = cp3_total(&term(&bu, T1), &bu, 3).map_err(|e| e.to_string())?.total;
    let t2 = cp3_total(&term(&bu, T2), &bu, 3).map_err(|e| e.to_string())?.total;
    let elapsed = start.elapsed();
    check(t1 == 13, format!("Cp3(t1) = {t1}, expected 13"))?;
    check(t2 == 11, format!("Cp3(t2) = {t2}, expected 11"))?;
    check(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("Cp3(t1)=13, Cp3(t2)=11 in {elapsed:?}"))
}

fn c2_t2_per_set() -> Outcome {
    let bu = fixture("bu");
    let report = cp3_total(&term(&bu, T2), &bu, 3).map_err(|e| e.to_string())?;
    let mut values: Vec<u64> = report.per_set.iter().map(|s| s.count).collect();
    values.sort_unstable();
    check(values == vec![0, 1, 2, 2, 2, 2, 2], format!("multiset {values:?}"))?;
    for i in 1..=3 {
        check(report.get(set(&[i])) == Some(2), format!("singleton x{i} not 2"))?;
    }
    check(report.get(set(&[1, 2, 3])) == Some(1), "full set not 1")?;
    // Fixed by the brute-force oracle.
    check(report.get(set(&[1, 2])) == Some(0), "{x1,x2} not 0")?;
    check(report.get(set(&[1, 3])) == Some(2), "{x1,x3} not 2")?;
    check(report.get(set(&[2, 3])) == Some(2), "{x2,x3} not 2")?;
    let oracle = brute_force_cp3(bu.induced_operation(&term(&bu, T2), 3).unwrap().values(), 2, 3);
    for (vars, count) in oracle {
        check(
            report.get(vars.iter().copied().collect()) == Some(count),
            format!("oracle disagrees on {vars:?}"),
        )?;
    }
    Ok("multiset {2,2,2,2,2,0,1}; zero at {x1,x2}".into())
}

fn c3_census() -> Outcome {
    let start = Instant::now();
    let census = algebra_n_complexity(&fixture("bu"), 3, DEFAULT_MAX_CLONE_SIZE)
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let histogram: Vec<(u64, u64)> = census
        .histogram
        .iter()
        .map(|b| (b.complexity, b.count))
        .collect();
    let expected = vec![
        (19, 2),
        (16, 16),
        (13, 40),
        (12, 72),
        (11, 24),
        (10, 6),
        (9, 48),
        (8, 24),
        (7, 16),
        (4, 6),
        (0, 2),
    ];
    check(census.clone_size == 256, format!("clone size {}", census.clone_size))?;
    check(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    check(
        census.total == 2762 && histogram == expected,
        format!(
            "clone size 256 ok; total {} (expected 2762), histogram {:?}",
            census.total, histogram
        ),
    )?;
    Ok(format!("clone 256, total 2762 in {elapsed:?}"))
}

fn c4_syntactic() -> Outcome {
    let bu = fixture("bu");
    let (t1, t2) = (term(&bu, T1), term(&bu, T2));
    let got = (cp1(&t1), cp1(&t2), cp2(&t1), cp2(&t2));
    check(got == (3, 4, 2, 4), format!("{got:?}"))?;
    Ok("Cp1 = 3, 4; Cp2 = 2, 4".into())
}

fn c5_lemma35() -> Outcome {
    let bu = fixture("bu");
    let level = clone_level(&bu, 3, DEFAULT_MAX_CLONE_SIZE).map_err(|e| e.to_string())?;
    check(level.len() == 256, format!("clone size {}", level.len()))?;
    let mut checks = 0;
    let mut mismatches = 0;
    for (index, member) in level.members().iter().enumerate() {
        let witness = level.witness(index);
        let essential = essential_vars(member);
        for i in 1..=3 {
            checks += 1;
            if ess_via_lemma35(&witness, &bu, 3, i).unwrap() != essential.contains(i) {
                mismatches += 1;
            }
        }
    }
    let z3 = fixture("z3");
    let mut rng = StdRng::seed_from_u64(0x35);
    for _ in 0..200 {
        let t = random_term(&mut rng, &z3, 3, 4, 0.0);
        let essential = ess(&t, &z3, 3).unwrap();
        for i in 1..=3 {
            checks += 1;
            if ess_via_lemma35(&t, &z3, 3, i).unwrap() != essential.contains(i) {
                mismatches += 1;
            }
        }
    }
    check(mismatches == 0, format!("{mismatches} mismatches in {checks} checks"))?;
    Ok(format!("{checks} checks, 0 mismatches"))
}

fn c6_invariance() -> Outcome {
    const N: usize = 100;
    let mut rng = StdRng::seed_from_u64(0x46);
    let bu = fixture("bu");
    let z3 = fixture("z3");
    let chain = fixture("chain3");
    let pool = [bu.clone(), z3.clone(), chain.clone()];
    let mut violations: BTreeMap<&str, usize> = BTreeMap::new();
    let mut first: BTreeMap<&str, String> = BTreeMap::new();
    let mut record = |name: &'static str, ok: bool, detail: String| {
        let v = violations.entry(name).or_default();
        if !ok {
            *v += 1;
            first.entry(name).or_insert(detail);
        }
    };

    // Identities give equal per-set reports.
    let level = clone_level(&bu, 3, DEFAULT_MAX_CLONE_SIZE).unwrap();
    for _ in 0..N {
        let t = random_term(&mut rng, &bu, 3, 5, 0.0);
        let table = bu.induced_operation(&t, 3).unwrap();
        let other = level.witness(level.position(&table).unwrap());
        let ok = satisfies_identity(&bu, &t, &other, 3).unwrap()
            && cp3_total(&t, &bu, 3).unwrap() == cp3_total(&other, &bu, 3).unwrap();
        record("identity", ok, format!("{t} vs {other}"));
    }

    // Variable renaming.
    for _ in 0..N {
        let alg = pool.choose(&mut rng).unwrap();
        let t = random_term(&mut rng, alg, 3, 4, 0.0);
        let sigma = random_permutation(&mut rng, 3);
        let before = cp3_total(&t, alg, 3).unwrap();
        let after = cp3_total(&t.rename_variables(&sigma).unwrap(), alg, 3).unwrap();
        let ok = before
            .per_set
            .iter()
            .all(|sc| after.get(sc.vars.permute(&sigma)) == Some(sc.count));
        record("renaming", ok, format!("{t} under {sigma:?}"));
    }

    // Constant maps injective on the value set.
    let mut tried = 0;
    while tried < N {
        let alg = pool.choose(&mut rng).unwrap();
        let k = alg.carrier() as u32;
        let p = random_term(&mut rng, alg, 3, 4, 0.3);
        if p.is_pure_term() {
            continue;
        }
        let g: Vec<u32> = (0..k).map(|_| rng.gen_range(0..k)).collect();
        let values = value_set(&p, alg, 3).unwrap();
        let image: std::collections::BTreeSet<u32> = values.iter().map(|&v| g[v as usize]).collect();
        if image.len() != values.len() {
            continue;
        }
        tried += 1;
        let q = p.map_constants(|c| g[c as usize]);
        let ok = cp3_total(&p, alg, 3).unwrap() == cp3_total(&q, alg, 3).unwrap();
        record("constant-map", ok, format!("g={g:?} over {}: {p} vs {q}", alg.name()));
    }

    // Carrier permutations.
    for _ in 0..N {
        let alg = pool.choose(&mut rng).unwrap();
        let mut pi: Vec<u32> = (0..alg.carrier() as u32).collect();
        pi.shuffle(&mut rng);
        let copy = alg.transport(&pi).unwrap();
        let t = random_term(&mut rng, alg, 3, 4, 0.0);
        let ok = cp3_total(&t, alg, 3).unwrap() == cp3_total(&t, &copy, 3).unwrap();
        record("transport", ok, format!("{t} under {pi:?}"));
    }

    // Subalgebras: Ess can only shrink.
    let subsets: [&[u32]; 6] = [&[0, 1], &[1, 2], &[0, 2], &[0], &[1], &[2]];
    for _ in 0..N {
        let t = random_term(&mut rng, &chain, 3, 4, 0.0);
        let subset = subsets.choose(&mut rng).unwrap();
        let sub = chain.subalgebra(subset).unwrap();
        let ok = ess(&t, &sub, 3).unwrap().is_subset(ess(&t, &chain, 3).unwrap());
        record("subalgebra", ok, format!("{t} on {subset:?}"));
    }

    // Direct powers: Ess is unchanged.
    let squares: Vec<FiniteAlgebra> = pool.iter().map(|a| a.direct_power(2).unwrap()).collect();
    for _ in 0..N {
        let which = rng.gen_range(0..pool.len());
        let m = rng.gen_range(1..=2);
        let power = if m == 1 { &pool[which] } else { &squares[which] };
        let t = random_term(&mut rng, &pool[which], 3, 4, 0.0);
        let ok = ess(&t, &pool[which], 3).unwrap() == ess(&t, power, 3).unwrap();
        record("power", ok, format!("{t} with m={m}"));
    }

    let summary: Vec<String> = violations
        .iter()
        .map(|(name, v)| format!("{name}: {v}/{N}"))
        .collect();
    let summary = summary.join(", ");
    if violations.values().all(|&v| v == 0) {
        Ok(format!("violations {summary}"))
    } else {
        let examples: Vec<String> = first.iter().map(|(n, d)| format!("{n}: {d}")).collect();
        Err(format!("violations {summary}; first: {}", examples.join("; ")))
    }
}

fn c7_separability() -> Outcome {
    let br = fixture("br");
    let bu = fixture("bu");
    check(
        is_separable(&term(&br, T1), &br, 3, set(&[1, 2])).unwrap(),
        "{x1,x2} not separable in t1 over BR",
    )?;
    check(
        !is_separable(&term(&bu, T2), &bu, 3, set(&[1, 2])).unwrap(),
        "{x1,x2} separable in t2 over BU",
    )?;
    let terms = all_terms(&bu, 3, 4);
    let mut pairs = 0;
    for t in &terms {
        let table = bu.induced_operation(t, 3).unwrap();
        let essential = table.essential_vars();
        let report = cp3_of_table(&table);
        for sc in &report.per_set {
            pairs += 1;
            if sc.vars.is_subset(essential) {
                let sep = is_separable_table(&table, sc.vars).unwrap();
                check(sep == (sc.count >= 1), format!("{t} at {}", sc.vars))?;
            } else {
                check(sc.count == 0, format!("{t} counts non-essential {}", sc.vars))?;
            }
        }
    }
    Ok(format!("{} terms, {pairs} (t, M) pairs", terms.len()))
}

fn c8_semilattice() -> Outcome {
    let sl = fixture("sl");
    let mut rng = StdRng::seed_from_u64(0x58);
    for _ in 0..100 {
        let t = random_term(&mut rng, &sl, 4, 5, 0.0);
        let vars: VarSet = t.variables().into_iter().collect();
        check(ess(&t, &sl, 4).unwrap() == vars, format!("Ess({t}) != var"))?;
    }
    let level = clone_level(&sl, 2, DEFAULT_MAX_CLONE_SIZE).map_err(|e| e.to_string())?;
    check(level.len() == 3, format!("clone_level(SL, 2) has {}", level.len()))?;
    Ok("100 terms; |clone_2(SL)| = 3".into())
}

fn c9_oracle() -> Outcome {
    let compare = |table: &FunctionTable| -> Result<(), String> {
        let report = cp3_of_table(table);
        let oracle = brute_force_cp3(table.values(), table.carrier(), table.arity());
        check(oracle.len() == report.per_set.len(), "set count")?;
        for (vars, count) in oracle {
            let got = report.get(vars.iter().copied().collect());
            check(got == Some(count), format!("{:?} at {vars:?}: {got:?} vs {count}", table.values()))?;
        }
        Ok(())
    };
    let mut tables = 0;
    for code in 0u32..256 {
        let values = (0..8).map(|i| (code >> (7 - i)) & 1).collect();
        compare(&FunctionTable::new(3, 2, values).unwrap())?;
        tables += 1;
    }
    for code in 0u32..16 {
        let values = (0..4).map(|i| (code >> (3 - i)) & 1).collect();
        compare(&FunctionTable::new(2, 2, values).unwrap())?;
        tables += 1;
    }
    let mut rng = StdRng::seed_from_u64(0x59);
    for _ in 0..100 {
        let values = (0..9).map(|_| rng.gen_range(0..3)).collect();
        compare(&FunctionTable::new(2, 3, values).unwrap())?;
        tables += 1;
    }
    Ok(format!("{tables} tables agree"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("C1 exact Cp3 totals of t1, t2", c1_exact_totals),
        ("C2 per-set counts of t2", c2_t2_per_set),
        ("C3 3-complexity census of the primal algebra", c3_census),
        ("C4 syntactic measures", c4_syntactic),
        ("C5 Ess via identity refutation", c5_lemma35),
        ("C6 invariance suites", c6_invariance),
        ("C7 separability", c7_separability),
        ("C8 semilattice fixtures", c8_semilattice),
        ("C9 brute-force oracle equivalence", c9_oracle),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
