//! Acceptance criteria: one PASS/FAIL line per criterion; exits nonzero if any fails.
//!
//! Every check is exact; the only pinned numbers are the time budgets below.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use jordan_schemes::closure::{
    is_proper, jordan_closure, subspace_closure_oracle, wl_closure, ClosureKind, SeedPartition,
};
use jordan_schemes::construct::{
    build_cyclotomic_base, build_wfdf, thin_cyclic_scheme, CoverSpec, SwitchedScheme, WfdfSpec,
};
use jordan_schemes::verify::{
    check_base_table, check_fusion_p3, check_switched_table, find_algebraic_isomorphism,
    generated_assoc_dimension, hoffman_coclique_bound, is_coherent_configuration,
    is_jordan_configuration, jordan_associative, nonregular_bipartition, pairwise_commute,
    srg_check,
};
use jordan_schemes::{CountMatrix, Rainbow};

const BUDGET_1: Duration = Duration::from_millis(1);
const BUDGET_2: Duration = Duration::from_secs(10);
const BUDGET_3: Duration = Duration::from_secs(300);
const BUDGET_4: Duration = Duration::from_secs(30);
const BUDGET_5: Duration = Duration::from_secs(5);
const BUDGET_6: Duration = Duration::from_secs(600);
const BUDGET_7: Duration = Duration::from_secs(10);
const BUDGET_8: Duration = Duration::from_secs(120);
const BUDGET_9: Duration = Duration::from_secs(60);
const BUDGET_10: Duration = Duration::from_secs(1);

/// Random specs sampled for criterion 3.
const RANDOM_WFDF_SPECS: u64 = 20;
/// Random seeds for criterion 8, and the largest order used.
const CLOSURE_SEEDS: u64 = 100;
const CLOSURE_MAX_ORDER: usize = 12;
/// Exhaustive enumeration bounds for criterion 6.
const ENUM_MAX_ORDER: usize = 6;
const ENUM_MAX_RANK: usize = 4;

type Check = Result<String, String>;

/// Id, name, check and time budget.
type Criterion = (u32, &'static str, fn() -> Check, Duration);

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn four_point_example() -> Rainbow {
    Rainbow::from_colors(&[
        vec![0, 1, 2, 2],
        vec![1, 0, 2, 2],
        vec![3, 3, 0, 1],
        vec![3, 3, 1, 0],
    ])
    .unwrap()
}

fn criterion_1() -> Check {
    let x = four_point_example();
    let report = x.structure_report();
    ensure(is_jordan_configuration(&x).holds(), "not a Jordan configuration")?;
    ensure(!is_coherent_configuration(&x).holds(), "unexpectedly coherent")?;
    ensure(report.homogeneous, "not homogeneous")?;
    ensure(!report.regular, "unexpectedly regular")?;
    let (p0, p1) = nonregular_bipartition(&x)
        .map_err(|e| e.to_string())?
        .ok_or("no bipartition returned")?;
    ensure(p0.len() == 2 && p1.len() == 2, format!("halves {p0:?} / {p1:?}"))?;
    Ok(format!("JC, not CC, halves {p0:?} {p1:?}"))
}

fn criterion_2() -> Check {
    let w = build_wfdf(&WfdfSpec::canonical(2)).map_err(|e| e.to_string())?;
    let x = &w.rainbow;
    ensure(x.order() == 45 && x.rank() == 5, format!("order {} rank {}", x.order(), x.rank()))?;
    let mut valencies: Vec<usize> = x
        .structure_report()
        .valencies
        .iter()
        .map(|v| v.unwrap_or(0))
        .collect();
    valencies.sort_unstable();
    ensure(valencies == [1, 8, 12, 12, 12], format!("valencies {valencies:?}"))?;
    for &ra in &w.r {
        let p = srg_check(&x.relation(ra))
            .map_err(|e| e.to_string())?
            .ok_or(format!("color {ra} is not strongly regular"))?;
        ensure(
            (p.v, p.k, p.lambda, p.mu) == (45, 12, 3, 3),
            format!("color {ra}: {p:?}"),
        )?;
        let bound = hoffman_coclique_bound(&p).map_err(|e| e.to_string())?;
        for block in &w.blocks {
            let coclique = block.iter().all(|&a| block.iter().all(|&b| x.color(a, b) != ra));
            ensure(coclique && block.len() == 9, "block is not a 9-coclique")?;
            ensure(
                bound.compare(block.len() as u64) == std::cmp::Ordering::Equal,
                "block size differs from the Hoffman bound",
            )?;
        }
    }
    ensure(is_jordan_configuration(x).holds(), "not a Jordan configuration")?;
    ensure(check_fusion_p3(x).map_err(|e| e.to_string())?, "fusion check fails")?;
    Ok("order 45, valencies (1,8,12,12,12), 3 x SRG(45,12,3,3), Hoffman-tight blocks".into())
}

fn criterion_3() -> Check {
    for seed in 0..RANDOM_WFDF_SPECS {
        let w = build_wfdf(&WfdfSpec::random(2, seed)).map_err(|e| e.to_string())?;
        let r = is_proper(&w.rainbow).map_err(|e| e.to_string())?;
        ensure(r.proper, format!("seed {seed} is improper"))?;
    }
    Ok(format!("{RANDOM_WFDF_SPECS} random d=2 specs, all proper"))
}

fn switched(q: usize, m: usize) -> Result<SwitchedScheme, String> {
    let base = build_cyclotomic_base(CoverSpec { q, m }).map_err(|e| e.to_string())?;
    let table = check_base_table(&base.rainbow, &base.labels, m, q).map_err(|e| e.to_string())?;
    ensure(table, format!("base ({q},{m}) fails its table"))?;
    base.switch(0).map_err(|e| e.to_string())
}

fn criterion_4() -> Check {
    let mut notes = Vec::new();
    for (q, order) in [(4usize, 15usize), (16, 51)] {
        let sw = switched(q, 3)?;
        let x = &sw.rainbow;
        ensure(
            x.order() == order && x.rank() == 5,
            format!("q={q}: order {} rank {}", x.order(), x.rank()),
        )?;
        let tensor = is_jordan_configuration(x)
            .into_tensor()
            .ok_or(format!("q={q}: not a Jordan configuration"))?;
        let table = check_switched_table(x, &sw.labels, 3, q).map_err(|e| e.to_string())?;
        ensure(table, format!("q={q}: switched table fails"))?;
        let doubled = tensor.get(sw.labels.d[1], sw.labels.t[0], sw.labels.t[1]);
        ensure(doubled == q as i64, format!("q={q}: 2p^D1_(T0,T1) = {doubled}"))?;
        let proper = is_proper(x).map_err(|e| e.to_string())?.proper;
        ensure(proper, format!("q={q}: improper"))?;
        notes.push(format!("order {order}: 2p^D1_(T0,T1) = {doubled}"));
    }
    Ok(notes.join("; "))
}

fn criterion_5() -> Check {
    let sw = switched(4, 3)?;
    let r = is_proper(&sw.rainbow).map_err(|e| e.to_string())?;
    ensure(r.symmetrized_wl_rank > 5, format!("sym(WL) rank {}", r.symmetrized_wl_rank))?;
    let w = r.witness_color.ok_or("no split color")?;
    ensure(sw.labels.d.contains(&w), format!("witness color {w} is not a D-class"))?;
    let split_d = r.split_colors.iter().filter(|c| sw.labels.d.contains(c)).count();
    Ok(format!(
        "sym(WL) rank {}, witness D-class color {w}, {split_d} D-classes split",
        r.symmetrized_wl_rank
    ))
}

/// All symmetric homogeneous rainbows with at most `max_colors` off-diagonal colors on
/// `n` points, as restricted-growth strings over unordered pairs.
fn for_each_symmetric_homogeneous(n: usize, max_colors: usize, mut f: impl FnMut(Rainbow)) {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    if pairs.is_empty() {
        f(Rainbow::trivial(n));
        return;
    }
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(a, b)) in pairs.iter().enumerate() {
        index[a][b] = k;
        index[b][a] = k;
    }
    let mut rgs = vec![0usize; pairs.len()];
    loop {
        f(Rainbow::from_fn(n, |a, b| if a == b { 0 } else { 1 + rgs[index[a][b]] }).unwrap());
        // next restricted-growth string with values below max_colors
        let mut k = pairs.len() - 1;
        loop {
            let prefix_max = rgs[..k].iter().copied().max().map_or(0, |m| m + 1);
            if k > 0 && rgs[k] < prefix_max.min(max_colors - 1) {
                rgs[k] += 1;
                for slot in &mut rgs[k + 1..] {
                    *slot = 0;
                }
                break;
            }
            if k == 0 {
                return;
            }
            k -= 1;
        }
    }
}

/// Symmetric Jordan configurations found by the exhaustive search (shared with criterion 9).
fn enumerate_small_jordan() -> Result<(usize, Vec<Rainbow>), String> {
    let mut total = 0usize;
    let mut jordan = Vec::new();
    let mut bad = None;
    for n in 1..=ENUM_MAX_ORDER {
        for_each_symmetric_homogeneous(n, ENUM_MAX_RANK - 1, |x| {
            total += 1;
            if x.rank() > ENUM_MAX_RANK || !is_jordan_configuration(&x).holds() {
                return;
            }
            if !is_coherent_configuration(&x).holds() && bad.is_none() {
                bad = Some(x.color_rows());
            }
            jordan.push(x);
        });
    }
    match bad {
        Some(rows) => Err(format!("proper example found: {rows:?}")),
        None => Ok((total, jordan)),
    }
}

fn criterion_6() -> Check {
    let (total, jordan) = enumerate_small_jordan()?;
    ensure(total > 2_000_000, format!("only {total} rainbows enumerated"))?;
    Ok(format!(
        "{total} rainbows (n <= {ENUM_MAX_ORDER}, rank <= {ENUM_MAX_RANK}); {} Jordan, all coherent",
        jordan.len()
    ))
}

fn criterion_7() -> Check {
    let j15 = switched(4, 3)?.rainbow;
    let w45 = build_wfdf(&WfdfSpec::canonical(2)).map_err(|e| e.to_string())?;
    for (name, x) in [("J15", &j15), ("WFDF d=2", &w45.rainbow)] {
        let dim = generated_assoc_dimension(&x.basis_matrices()).map_err(|e| e.to_string())?;
        ensure(dim == 6, format!("{name}: dimension {dim}"))?;
        let dense: Vec<common::Dense> = (0..x.rank()).map(|c| common::indicator(x, &[c])).collect();
        let oracle = common::assoc_dimension_mod_p(&dense);
        ensure(oracle == 6, format!("{name}: mod-p oracle gives {oracle}"))?;
    }
    // commutative association schemes: the algebra is the span of the basis
    let fused = {
        let group: Vec<usize> = (0..5)
            .map(|c| match c {
                0 => 0,
                _ if c == w45.s => 1,
                _ if c == w45.r[0] => 2,
                _ => 3,
            })
            .collect();
        w45.rainbow.fuse(&group).map_err(|e| e.to_string())?
    };
    let schemes = [
        thin_cyclic_scheme(5).symmetrize(),
        thin_cyclic_scheme(5),
        thin_cyclic_scheme(8),
        thin_cyclic_scheme(9).symmetrize(),
        fused,
    ];
    for x in &schemes {
        ensure(is_coherent_configuration(x).holds(), "fixture is not coherent")?;
        let dim = generated_assoc_dimension(&x.basis_matrices()).map_err(|e| e.to_string())?;
        ensure(dim == x.rank(), format!("rank {} but dimension {dim}", x.rank()))?;
    }
    Ok(format!("J15 -> 6, WFDF -> 6, {} commutative schemes -> rank", schemes.len()))
}

fn random_seed(index: u64) -> (SeedPartition, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(index);
    let n = rng.gen_range(2..=CLOSURE_MAX_ORDER);
    let values = rng.gen_range(2..=4i64);
    let symmetric = index.is_multiple_of(2);
    let mut cells = vec![0i64; n * n];
    for a in 0..n {
        for b in 0..n {
            cells[a * n + b] = if symmetric && b < a {
                cells[b * n + a]
            } else {
                rng.gen_range(0..values)
            };
        }
    }
    let m = CountMatrix::from_fn(n, |a, b| cells[a * n + b]);
    (SeedPartition::from_matrices(n, &[m]).unwrap(), symmetric)
}

fn criterion_8() -> Check {
    let mut max_rank = 0;
    for i in 0..CLOSURE_SEEDS {
        let (seed, symmetric) = random_seed(i);
        let wl = wl_closure(&seed).map_err(|e| e.to_string())?.result;
        let jc = jordan_closure(&seed).map_err(|e| e.to_string())?.result;
        let wl_oracle = subspace_closure_oracle(&seed, ClosureKind::Wl).map_err(|e| e.to_string())?;
        let jc_oracle =
            subspace_closure_oracle(&seed, ClosureKind::Jordan).map_err(|e| e.to_string())?;
        ensure(wl == wl_oracle, format!("seed {i}: WL disagrees with oracle"))?;
        ensure(jc == jc_oracle, format!("seed {i}: Jordan disagrees with oracle"))?;
        let finer = if symmetric { wl.symmetrize() } else { wl.clone() };
        ensure(finer.refines(&jc), format!("seed {i}: Jordan result is not a fusion"))?;
        max_rank = max_rank.max(wl.rank());
    }
    Ok(format!(
        "{CLOSURE_SEEDS} seeds (n <= {CLOSURE_MAX_ORDER}), max WL rank {max_rank}, all agree"
    ))
}

fn criterion_9() -> Check {
    let mut bases: Vec<Rainbow> = Vec::new();
    bases.push(build_wfdf(&WfdfSpec::canonical(2)).map_err(|e| e.to_string())?.rainbow);
    for seed in 0..RANDOM_WFDF_SPECS {
        bases.push(build_wfdf(&WfdfSpec::random(2, seed)).map_err(|e| e.to_string())?.rainbow);
    }
    bases.push(switched(4, 3)?.rainbow);
    bases.push(switched(16, 3)?.rainbow);
    let (_, small) = enumerate_small_jordan()?;
    bases.extend(small);
    let mut associative = 0;
    for x in &bases {
        let basis = x.basis_matrices();
        if jordan_associative(&basis).map_err(|e| e.to_string())? {
            associative += 1;
            ensure(
                pairwise_commute(&basis).map_err(|e| e.to_string())?,
                format!("associative but non-commuting: {:?}", x.color_rows()),
            )?;
        }
    }
    Ok(format!("{} bases, {associative} Jordan-associative, all commutative", bases.len()))
}

fn criterion_10() -> Check {
    let w = build_wfdf(&WfdfSpec::canonical(1)).map_err(|e| e.to_string())?;
    let x = &w.rainbow;
    ensure(x.order() == 6 && x.rank() == 5, format!("order {} rank {}", x.order(), x.rank()))?;
    ensure(!is_proper(x).map_err(|e| e.to_string())?.proper, "d=1 scheme is proper")?;
    let t = is_jordan_configuration(x).into_tensor().ok_or("not Jordan")?;
    let s3 = common::thin_s3().symmetrize();
    let u = is_jordan_configuration(&s3).into_tensor().ok_or("sym S3 not Jordan")?;
    let map = find_algebraic_isomorphism(&t, &u).ok_or("tensors differ")?;
    ensure(t.relabel(&map) == u, "relabelled tensor differs")?;
    Ok(format!("order 6, rank 5, improper, tensor = sym(S3) under {map:?}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "four-point Jordan configuration", criterion_1, BUDGET_1),
        (2, "WFDF d=2 structure", criterion_2, BUDGET_2),
        (3, "WFDF properness on random specs", criterion_3, BUDGET_3),
        (4, "switching family", criterion_4, BUDGET_4),
        (5, "properness mechanism of J15", criterion_5, BUDGET_5),
        (6, "no proper scheme of rank <= 4", criterion_6, BUDGET_6),
        (7, "generated algebra dimension", criterion_7, BUDGET_7),
        (8, "closure cross-validation", criterion_8, BUDGET_8),
        (9, "Jordan-associative implies commutative", criterion_9, BUDGET_9),
        (10, "d=1 degenerate case", criterion_10, BUDGET_10),
    ];
    let mut failed = Vec::new();
    for (id, name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if elapsed > budget => Err(format!("over budget ({budget:?})")),
            Ok(detail) => Ok(detail.clone()),
            Err(e) => Err(e.clone()),
        };
        match &verdict {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} [{elapsed:.2?}]"),
            Err(reason) => {
                println!("criterion {id:>2} FAIL  {name}: {reason} [{elapsed:.2?}]");
                failed.push(id);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
