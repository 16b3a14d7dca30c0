//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use adjoint_powers::character_oracle::compare_with_formula;
use adjoint_powers::derangements::{derangement_incl_excl, derangement_recurrence};
use adjoint_powers::multiplicity::{checksum_sum_of_squares, full_table};
use adjoint_powers::partitions::{enumerate_partitions, enumerate_standard_tableaux, factorial};
use adjoint_powers::symmetric_group::{parse_cycles, young_symmetrizer, GroupAlgebraElement};
use adjoint_powers::tensor_model::{
    all_maximal_vector_reports, contraction_operator, e_operator, image_of_e_is_kernel_intersection,
    maximal_vector_tally, projector_p,
};
use adjoint_powers::walled_brauer::{
    b_idempotent, compose_diagrams, enumerate_diagrams, has_forbidden_pair, sandwich_basis_rank, Vertex, WalledDiagram,
};
use adjoint_powers::{Partition, StandardTableau};
use adjoint_powers_cli::{cmd_derangements, cmd_table, Status, TableFormat};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn criterion_1() -> Outcome {
    let result = cmd_derangements(8);
    ensure(result.status == Status::Ok, || "derangement methods disagree".into())?;
    let got: Vec<String> = result.payload["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["inclusion_exclusion"].as_str().unwrap().to_string())
        .collect();
    let expected = ["0", "1", "2", "9", "44", "265", "1854", "14833"];
    ensure(got == expected, || format!("D_1..D_8 = {got:?}"))?;
    for k in 0..=64 {
        ensure(derangement_incl_excl(k) == derangement_recurrence(k), || format!("methods differ at k = {k}"))?;
    }
    Ok("D_1..D_8 = 0,1,2,9,44,265,1854,14833; methods agree for k ≤ 64".into())
}

fn criterion_2() -> Outcome {
    // The k = 4 table as printed, by blocks r = 4, 3, 2, 1, 0.
    let printed: [(usize, &[&[u64]]); 5] = [
        (4, &[&[1, 3, 2, 3, 1], &[3, 9, 6, 9, 3], &[2, 6, 4, 6, 2], &[3, 9, 6, 9, 6], &[1, 3, 2, 3, 1]]),
        (3, &[&[12, 24, 12], &[24, 48, 24], &[12, 24, 12]]),
        (2, &[&[42, 42], &[42, 42]]),
        (1, &[&[44]]),
        (0, &[&[9]]),
    ];
    let table = full_table(4);
    let odd_cell = (p("2,1,1"), p("1,1,1,1"));
    let mut compared = 0;
    for (r, rows) in printed {
        let shapes = enumerate_partitions(r);
        for (i, l) in shapes.iter().enumerate() {
            for (j, m) in shapes.iter().enumerate() {
                let got = table.get(l, m).cloned().unwrap_or_default();
                if (l.clone(), m.clone()) == odd_cell {
                    ensure(got == BigUint::from(3u32), || format!("({l};{m}) = {got}, expected 3"))?;
                    continue;
                }
                ensure(got == BigUint::from(rows[i][j]), || format!("({l};{m}) = {got}, printed {}", rows[i][j]))?;
                compared += 1;
            }
        }
    }
    let checksum = checksum_sum_of_squares(4);
    ensure(checksum == BigUint::from(14833u32), || format!("checksum {checksum}"))?;
    ensure(cmd_table(4, TableFormat::Json).status == Status::Ok, || "table command reports mismatch".into())?;
    Ok(format!("{compared} printed cells match, (2,1,1;1,1,1,1) = 3, checksum 14833"))
}

fn criterion_3() -> Outcome {
    for k in 1..=6 {
        let sum = checksum_sum_of_squares(k);
        let d = derangement_recurrence(2 * k);
        ensure(sum == d, || format!("k = {k}: {sum} ≠ {d}"))?;
    }
    Ok("Σ m² = D_{2k} for k = 1..6".into())
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    for (n, k) in [(2, 1), (3, 1), (4, 2), (6, 3)] {
        let started = Instant::now();
        let report = compare_with_formula(n, k).map_err(|e| e.to_string())?;
        let elapsed = started.elapsed();
        ensure(report.mismatch_count() == 0, || format!("(n,k) = ({n},{k}): {} mismatches", report.mismatch_count()))?;
        ensure(report.dimension_identity_holds(), || {
            format!("(n,k) = ({n},{k}): Σ m dim = {} ≠ {}", report.dimension_sum, report.expected_dimension)
        })?;
        if (n, k) == (6, 3) {
            ensure(elapsed < Duration::from_secs(120), || format!("(6,3) took {elapsed:?}"))?;
        }
        notes.push(format!("({n},{k})"));
    }
    Ok(format!("zero mismatches and Σ m·dim = (n²-1)^k at {}", notes.join(" ")))
}

fn diagram(k: usize, edges: &[(&str, &str)]) -> WalledDiagram {
    let edges: Vec<(Vertex, Vertex)> =
        edges.iter().map(|(a, b)| (Vertex::parse(a).unwrap(), Vertex::parse(b).unwrap())).collect();
    WalledDiagram::from_edges(k, &edges).unwrap()
}

fn criterion_5() -> Outcome {
    for k in 1..=4 {
        let all = enumerate_diagrams(k);
        ensure(BigUint::from(all.len()) == factorial(2 * k), || format!("k = {k}: {} diagrams", all.len()))?;
        let free = all.iter().filter(|d| !has_forbidden_pair(d)).count();
        ensure(BigUint::from(free) == derangement_recurrence(2 * k), || {
            format!("k = {k}: {free} without forbidden pairs")
        })?;
    }
    for n in [4, 5, 6] {
        let rank = sandwich_basis_rank(2, n).map_err(|e| e.to_string())?;
        ensure(rank == 9, || format!("sandwich rank {rank} at n = {n}"))?;
    }
    for k in 1..=3 {
        let b = b_idempotent(k, 7).map_err(|e| e.to_string())?;
        ensure(b.multiply(&b).map_err(|e| e.to_string())? == b, || format!("b² ≠ b at k = {k}"))?;
    }
    // Worked composition of two k = 5 diagrams.
    let d1 = diagram(
        5,
        &[
            ("T1", "B3"),
            ("T2", "B1"),
            ("T3", "T6"),
            ("T4", "T8"),
            ("B2", "B6"),
            ("B5", "B7"),
            ("T5", "B4"),
            ("T7", "B10"),
            ("T9", "B9"),
            ("T10", "B8"),
        ],
    );
    let d2 = diagram(
        5,
        &[
            ("T1", "T7"),
            ("T2", "T6"),
            ("T3", "B1"),
            ("T4", "B5"),
            ("T5", "B3"),
            ("B2", "B9"),
            ("B4", "B6"),
            ("T10", "B10"),
            ("T9", "B8"),
            ("T8", "B7"),
        ],
    );
    let product = diagram(
        5,
        &[
            ("T1", "B1"),
            ("T2", "B3"),
            ("T3", "T6"),
            ("T4", "T8"),
            ("B2", "B9"),
            ("B4", "B6"),
            ("T5", "B5"),
            ("T7", "B10"),
            ("T9", "B8"),
            ("T10", "B7"),
        ],
    );
    let (loops, got) = compose_diagrams(&d1, &d2).map_err(|e| e.to_string())?;
    ensure(loops == 1 && got == product, || format!("worked product gave {got} with {loops} loops"))?;
    Ok("counts (2k)! and D_{2k} for k ≤ 4, sandwich rank 9 at n = 4,5,6, b² = b for k ≤ 3, worked product with factor n¹".into())
}

fn criterion_6() -> Outcome {
    for (n, k) in [(2, 1), (3, 2), (4, 2)] {
        let err = |e: adjoint_powers::Error| e.to_string();
        let nq = BigRational::from_integer(BigInt::from(n));
        for i in 1..=k {
            for j in 1..=k {
                let c = contraction_operator(n, k, i, j).map_err(err)?.materialize();
                ensure(c.compose(&c).map_err(err)?.agrees_with(&c.scale(&nq)), || {
                    format!("c_{{{i},{j}}}² ≠ n c at (n,k) = ({n},{k})")
                })?;
            }
        }
        let ps: Vec<_> = (1..=k).map(|j| projector_p(n, k, j).unwrap().materialize()).collect();
        for (i, a) in ps.iter().enumerate() {
            ensure(a.compose(a).map_err(err)?.agrees_with(a), || format!("p_{}² ≠ p at ({n},{k})", i + 1))?;
            for b in &ps {
                ensure(a.compose(b).map_err(err)?.agrees_with(&b.compose(a).map_err(err)?), || {
                    format!("projectors do not commute at ({n},{k})")
                })?;
            }
        }
        let e = e_operator(n, k).map_err(err)?;
        ensure(e.compose(&e).map_err(err)?.agrees_with(&e), || format!("e² ≠ e at ({n},{k})"))?;
        let rank = e.rank();
        ensure(rank == (n * n - 1).pow(k as u32), || format!("rank e = {rank} at ({n},{k})"))?;
        ensure(image_of_e_is_kernel_intersection(n, k).map_err(err)?, || {
            format!("image of e ≠ ∩ ker p_j at ({n},{k})")
        })?;
    }
    Ok("c², p², commutation, e² = e, rank e = (n²-1)^k and image e = ∩ ker p_j at (2,1) (3,2) (4,2)".into())
}

fn criterion_7() -> Outcome {
    let (n, k) = (4, 2);
    let reports = all_maximal_vector_reports(n, k).map_err(|e| e.to_string())?;
    let (mut passed, mut vanished) = (0, 0);
    for (pattern, report) in &reports {
        if pattern.has_diagonal_pair() {
            ensure(!report.nonzero, || format!("diagonal pattern {pattern:?} did not vanish"))?;
            vanished += 1;
        } else {
            ensure(report.passes(n), || format!("not a maximal vector: {report:?}"))?;
            passed += 1;
        }
    }
    let tally = maximal_vector_tally(n, k).map_err(|e| e.to_string())?;
    let table = full_table(k);
    for entry in table.entries() {
        let got = tally.get(&(entry.lambda.clone(), entry.mu.clone())).copied().unwrap_or(0);
        ensure(BigUint::from(got) == entry.multiplicity, || {
            format!("({};{}): {got} maximal vectors, multiplicity {}", entry.lambda, entry.mu, entry.multiplicity)
        })?;
    }
    Ok(format!("{passed} maximal vectors, {vanished} vanishing diagonal cases, tallies equal the k = 2 table"))
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for r in 0..=4 {
        let entries: Vec<usize> = (1..=r).collect();
        for shape in enumerate_partitions(r) {
            let c = BigRational::new(BigInt::from(factorial(r)), BigInt::from(shape.num_standard_tableaux()));
            for t in enumerate_standard_tableaux(&shape, &entries).unwrap() {
                let y = young_symmetrizer(&t, r.max(1)).map_err(|e| e.to_string())?;
                ensure(y.mul(&y) == y.scale(&c), || format!("y_T² ≠ (r!/f) y_T for {t}"))?;
                count += 1;
            }
        }
    }
    let t = StandardTableau::from_rows(vec![vec![1, 5], vec![4]]).unwrap();
    let id = GroupAlgebraElement::identity(5);
    let expected = id
        .add(&GroupAlgebraElement::from_permutation(parse_cycles(5, "(1 5)").unwrap()))
        .mul(&id.sub(&GroupAlgebraElement::from_permutation(parse_cycles(5, "(1 4)").unwrap())));
    ensure(young_symmetrizer(&t, 5).unwrap() == expected, || "y_T for [1,5|4] differs".into())?;
    Ok(format!("{count} tableaux with r ≤ 4; y_T for [1,5|4] = (id + (1 5))(id - (1 4))"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 derangement table", criterion_1, 1),
        ("2 k=4 multiplicity table", criterion_2, 1),
        ("3 checksum identity", criterion_3, 10),
        ("4 oracle equivalence", criterion_4, 120),
        ("5 walled Brauer", criterion_5, 60),
        ("6 tensor-model identities", criterion_6, 30),
        ("7 maximal vectors", criterion_7, 30),
        ("8 Young symmetrizers", criterion_8, 5),
    ];
    let mut failures = 0;
    for (name, check, budget) in criteria {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(budget) => {
                Err(format!("{detail}, but took {elapsed:.2?} (budget {budget} s)"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
