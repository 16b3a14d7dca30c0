//! Commands behind the `adjoint-powers` binary.
//!
//! Every command returns a [`CommandResult`] whose JSON payload depends only
//! on its arguments. Big integers are rendered as decimal strings. Timing is
//! kept out of the payload so repeated runs are byte-identical.

use std::fmt;
use std::time::{Duration, Instant};

use adjoint_powers::character_oracle::{compare_with_formula, decompose, pair_to_weight, weyl_dimension};
use adjoint_powers::derangements::{derangement_incl_excl, derangement_recurrence};
use adjoint_powers::multiplicity::{full_table, multiplicity, multiplicity_hook_form};
use adjoint_powers::partitions::{enumerate_partitions, enumerate_standard_tableaux, factorial};
use adjoint_powers::symmetric_group::{parse_cycles, young_symmetrizer, GroupAlgebraElement};
use adjoint_powers::tensor_model::{
    all_maximal_vector_reports, check_size, contraction_operator, e_operator, image_of_e_is_kernel_intersection,
    projector_p,
};
use adjoint_powers::walled_brauer::{
    b_idempotent, compose_diagrams, contraction_diagram, enumerate_diagrams, has_forbidden_pair, sandwich_basis_rank,
    DiagramAlgebraElement,
};
use adjoint_powers::{Error, Partition, StandardTableau};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Error => 2,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    /// Set when the command was asked for CSV; printed instead of the JSON.
    pub csv: Option<String>,
    pub elapsed: Duration,
}

impl CommandResult {
    fn new(status: Status, payload: Value, started: Instant) -> Self {
        CommandResult { status, payload, csv: None, elapsed: started.elapsed() }
    }

    fn error(err: Error, started: Instant) -> Self {
        Self::new(Status::Error, json!({"status": "error", "error": err.to_string()}), started)
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    /// What goes to stdout.
    pub fn render(&self) -> String {
        match &self.csv {
            Some(csv) => csv.clone(),
            None => {
                let mut s = serde_json::to_string_pretty(&self.payload).expect("payload serializes");
                s.push('\n');
                s
            }
        }
    }
}

fn ok_or_mismatch(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Mismatch
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
}

/// D_1..D_max by both methods; `max_k = 0` gives the single row D_0.
pub fn cmd_derangements(max_k: usize) -> CommandResult {
    let started = Instant::now();
    let range = if max_k == 0 { 0..=0 } else { 1..=max_k };
    let mut all_agree = true;
    let rows: Vec<Value> = range
        .map(|k| {
            let a = derangement_incl_excl(k);
            let b = derangement_recurrence(k);
            all_agree &= a == b;
            json!({"k": k, "inclusion_exclusion": a.to_string(), "recurrence": b.to_string(), "agree": a == b})
        })
        .collect();
    let status = ok_or_mismatch(all_agree);
    CommandResult::new(status, json!({"status": status.to_string(), "max_k": max_k, "rows": rows}), started)
}

/// Full multiplicity table with the Σ m² = D_{2k} checksum.
pub fn cmd_table(k: usize, format: TableFormat) -> CommandResult {
    let started = Instant::now();
    let table = full_table(k);
    let checksum = table.sum_of_squares();
    let expected = derangement_recurrence(2 * k);
    let status = ok_or_mismatch(checksum == expected);
    let payload = json!({
        "status": status.to_string(),
        "k": k,
        "entries": table.to_json(),
        "checksum": checksum.to_string(),
        "expected_checksum": expected.to_string(),
    });
    let mut result = CommandResult::new(status, payload, started);
    if format == TableFormat::Csv {
        result.csv = Some(table.to_csv());
    }
    result
}

/// Single multiplicity by both closed forms.
pub fn cmd_multiplicity(k: usize, lambda: &Partition, mu: &Partition) -> CommandResult {
    let started = Instant::now();
    let (a, b) = match (multiplicity(k, lambda, mu), multiplicity_hook_form(k, lambda, mu)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return CommandResult::error(e, started),
    };
    let status = ok_or_mismatch(a == b);
    let payload = json!({
        "status": status.to_string(),
        "k": k,
        "lambda": lambda.to_string(),
        "mu": mu.to_string(),
        "multiplicity": a.to_string(),
        "hook_form": b.to_string(),
    });
    CommandResult::new(status, payload, started)
}

/// Character decomposition of sl_n^{⊗k}, optionally against the closed form.
/// Differences only count as a mismatch when n ≥ 2k.
pub fn cmd_oracle(n: usize, k: usize, compare: bool) -> CommandResult {
    let started = Instant::now();
    let run = || -> adjoint_powers::Result<CommandResult> {
        let mut decomposition = Vec::new();
        let mut dimension_sum = BigUint::default();
        for (pair, m) in decompose(n, k)? {
            let dim = weyl_dimension(&pair_to_weight(&pair, n)?, n)?;
            dimension_sum += &m * &dim;
            decomposition.push(json!({
                "lambda": pair.lambda.to_string(),
                "mu": pair.mu.to_string(),
                "multiplicity": m.to_string(),
                "dimension": dim.to_string(),
            }));
        }
        let expected = BigUint::from(n * n - 1).pow(k as u32);
        let mut ok = dimension_sum == expected;
        let mut payload = json!({
            "n": n,
            "k": k,
            "decomposition": decomposition,
            "dimension_sum": dimension_sum.to_string(),
            "expected_dimension": expected.to_string(),
        });
        if compare {
            let report = compare_with_formula(n, k)?;
            let mismatches = report.mismatch_count();
            payload["comparison"] = serde_json::to_value(&report.rows).expect("rows serialize");
            payload["mismatches"] = json!(mismatches);
            payload["stable_range"] = json!(report.stable);
            if report.stable {
                ok &= mismatches == 0;
            } else if mismatches > 0 {
                payload["warning"] =
                    json!(format!("n < 2k: {mismatches} pairs differ from the closed form, which assumes n ≥ 2k"));
            }
        }
        let status = ok_or_mismatch(ok);
        payload["status"] = json!(status.to_string());
        Ok(CommandResult::new(status, payload, started))
    };
    run().unwrap_or_else(|e| CommandResult::error(e, started))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Partitions,
    Brauer,
    Young,
    Tensor,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Partitions => "partitions",
            Suite::Brauer => "brauer",
            Suite::Young => "young",
            Suite::Tensor => "tensor",
            Suite::All => "all",
        }
    }
}

struct Checks(Vec<Value>);

impl Checks {
    fn push(&mut self, suite: &str, name: impl Into<String>, ok: bool, detail: Value) {
        self.0.push(json!({"suite": suite, "check": name.into(), "ok": ok, "detail": detail}));
    }

    fn all_ok(&self) -> bool {
        self.0.iter().all(|c| c["ok"] == json!(true))
    }
}

/// Runs the invariant checks of one module at the given parameters.
pub fn cmd_verify(suite: Suite, n: Option<usize>, k: Option<usize>) -> CommandResult {
    let started = Instant::now();
    let mut checks = Checks(Vec::new());
    let suites = match suite {
        Suite::All => vec![Suite::Partitions, Suite::Brauer, Suite::Young, Suite::Tensor],
        s => vec![s],
    };
    for s in suites {
        let outcome = match s {
            Suite::Partitions => verify_partitions(&mut checks, k.unwrap_or(6)),
            Suite::Brauer => verify_brauer(&mut checks, n.unwrap_or(4), k.unwrap_or(2)),
            Suite::Young => verify_young(&mut checks, k.unwrap_or(4)),
            Suite::Tensor => verify_tensor(&mut checks, n.unwrap_or(4), k.unwrap_or(2)),
            Suite::All => unreachable!(),
        };
        if let Err(e) = outcome {
            return CommandResult::error(e, started);
        }
    }
    let status = ok_or_mismatch(checks.all_ok());
    let payload = json!({
        "status": status.to_string(),
        "suite": suite.name(),
        "n": n,
        "k": k,
        "checks": checks.0,
    });
    CommandResult::new(status, payload, started)
}

fn too_large(what: &str, limit: usize, got: usize) -> Error {
    Error::TooLarge(format!("{what} is limited to k ≤ {limit} (got {got})"))
}

fn verify_partitions(checks: &mut Checks, k: usize) -> adjoint_powers::Result<()> {
    const S: &str = "partitions";
    if k > 8 {
        return Err(too_large("the partitions suite", 8, k));
    }
    for r in 0..=k {
        let shapes = enumerate_partitions(r);
        let entries: Vec<usize> = (1..=r).collect();
        let mut hooks_ok = true;
        let mut counts_ok = true;
        let mut squares = BigUint::default();
        for p in &shapes {
            let f = p.num_standard_tableaux();
            hooks_ok &= &f * p.hook_product() == factorial(r);
            counts_ok &= BigUint::from(enumerate_standard_tableaux(p, &entries)?.len()) == f;
            squares += &f * &f;
        }
        checks.push(S, format!("f * h = r! for r = {r}"), hooks_ok, json!(shapes.len()));
        checks.push(S, format!("tableau enumeration counts for r = {r}"), counts_ok, json!(null));
        checks.push(S, format!("sum of f^2 = r! for r = {r}"), squares == factorial(r), json!(squares.to_string()));
    }
    for kk in 1..=k {
        let sum = full_table(kk).sum_of_squares();
        let d = derangement_recurrence(2 * kk);
        checks.push(S, format!("sum of m^2 = D_{} for k = {kk}", 2 * kk), sum == d, json!(sum.to_string()));
        let mut agree = true;
        for r in 0..=kk {
            let shapes = enumerate_partitions(r);
            for l in &shapes {
                for m in &shapes {
                    agree &= multiplicity(kk, l, m)? == multiplicity_hook_form(kk, l, m)?;
                    agree &= multiplicity(kk, l, m)? == multiplicity(kk, m, l)?;
                }
            }
        }
        checks.push(S, format!("closed forms agree and are symmetric for k = {kk}"), agree, json!(null));
    }
    Ok(())
}

fn verify_brauer(checks: &mut Checks, n: usize, k: usize) -> adjoint_powers::Result<()> {
    const S: &str = "brauer";
    if k == 0 || k > 4 {
        return Err(too_large("the brauer suite", 4, k));
    }
    let n64 = n as u64;
    let all = enumerate_diagrams(k);
    let free = all.iter().filter(|d| !has_forbidden_pair(d)).count();
    checks.push(S, "diagram count = (2k)!", BigUint::from(all.len()) == factorial(2 * k), json!(all.len()));
    checks.push(
        S,
        "no-forbidden-pair count = D_{2k}",
        BigUint::from(free) == derangement_recurrence(2 * k),
        json!(free),
    );

    let b = b_idempotent(k, n64)?;
    if k <= 3 {
        checks.push(S, "b^2 = b", b.multiply(&b)? == b, json!(b.terms().len()));
        let rank = sandwich_basis_rank(k, n64)?;
        let expected = derangement_recurrence(2 * k);
        let detail = json!({"rank": rank, "expected": expected.to_string()});
        if n >= 2 * k {
            checks.push(S, "sandwich basis rank = D_{2k}", BigUint::from(rank) == expected, detail);
        } else {
            checks.push(S, "sandwich basis rank (n < 2k, informational)", true, detail);
        }
    }

    let mut commute = true;
    let mut killed = true;
    for i in 1..=k {
        let ci = DiagramAlgebraElement::from_diagram(contraction_diagram(k, i)?, n64);
        killed &= b.multiply(&ci)?.is_zero() && ci.multiply(&b)?.is_zero();
        for j in 1..=k {
            let cj = DiagramAlgebraElement::from_diagram(contraction_diagram(k, j)?, n64);
            commute &= ci.multiply(&cj)? == cj.multiply(&ci)?;
        }
    }
    checks.push(S, "contractions commute", commute, json!(null));
    checks.push(S, "b c_j = 0 = c_j b", killed, json!(null));

    // Associativity on a deterministic spread of triples.
    let step = (all.len() / 7).max(1);
    let sample: Vec<_> = all.iter().step_by(step).take(8).collect();
    let mut assoc = true;
    for x in &sample {
        for y in &sample {
            for z in &sample {
                let (l1, xy) = compose_diagrams(x, y)?;
                let (l2, left) = compose_diagrams(&xy, z)?;
                let (r1, yz) = compose_diagrams(y, z)?;
                let (r2, right) = compose_diagrams(x, &yz)?;
                assoc &= l1 + l2 == r1 + r2 && left == right;
            }
        }
    }
    checks.push(S, "composition is associative (sampled)", assoc, json!(sample.len().pow(3)));
    Ok(())
}

fn verify_young(checks: &mut Checks, k: usize) -> adjoint_powers::Result<()> {
    const S: &str = "young";
    if k > 6 {
        return Err(too_large("the young suite", 6, k));
    }
    let mut total = 0;
    let mut ok = true;
    for r in 0..=k {
        let entries: Vec<usize> = (1..=r).collect();
        for shape in enumerate_partitions(r) {
            let c = BigRational::new(BigInt::from(factorial(r)), BigInt::from(shape.num_standard_tableaux()));
            for t in enumerate_standard_tableaux(&shape, &entries)? {
                let y = young_symmetrizer(&t, r.max(1))?;
                ok &= y.mul(&y) == y.scale(&c);
                total += 1;
            }
        }
    }
    checks.push(S, format!("y_T^2 = (r!/f) y_T for all tableaux with r ≤ {k}"), ok, json!(total));

    let t = StandardTableau::from_rows(vec![vec![1, 5], vec![4]])?;
    let id = GroupAlgebraElement::identity(5);
    let expected = id
        .add(&GroupAlgebraElement::from_permutation(parse_cycles(5, "(1 5)")?))
        .mul(&id.sub(&GroupAlgebraElement::from_permutation(parse_cycles(5, "(1 4)")?)));
    checks.push(
        S,
        "y_T for T = [1,5|4] is (id + (1 5))(id - (1 4))",
        young_symmetrizer(&t, 5)? == expected,
        json!(null),
    );
    Ok(())
}

fn verify_tensor(checks: &mut Checks, n: usize, k: usize) -> adjoint_powers::Result<()> {
    const S: &str = "tensor";
    check_size(n, k)?;
    let nq = BigRational::from_integer(BigInt::from(n));
    let mut ok = true;
    for i in 1..=k {
        for j in 1..=k {
            let c = contraction_operator(n, k, i, j)?.materialize();
            ok &= c.compose(&c)?.agrees_with(&c.scale(&nq));
        }
    }
    checks.push(S, "c_ij^2 = n c_ij", ok, json!(null));
    let ps = (1..=k).map(|j| projector_p(n, k, j).map(|p| p.materialize())).collect::<Result<Vec<_>, _>>()?;
    let idem = ps.iter().all(|p| p.compose(p).map(|q| q.agrees_with(p)).unwrap_or(false));
    checks.push(S, "p_j^2 = p_j", idem, json!(null));
    let mut commute = true;
    for a in &ps {
        for b in &ps {
            commute &= a.compose(b)?.agrees_with(&b.compose(a)?);
        }
    }
    checks.push(S, "p_i p_j = p_j p_i", commute, json!(null));
    let e = e_operator(n, k)?;
    checks.push(S, "e^2 = e", e.compose(&e)?.agrees_with(&e), json!(null));
    let rank = e.rank();
    let expected = (n * n - 1).pow(k as u32);
    checks.push(S, "rank e = (n^2 - 1)^k", rank == expected, json!({"rank": rank, "expected": expected}));
    checks.push(S, "image of e = intersection of ker p_j", image_of_e_is_kernel_intersection(n, k)?, json!(null));

    if n >= 2 * k {
        let mut passes = std::collections::BTreeMap::<(Partition, Partition), usize>::new();
        let mut vanish_ok = true;
        let mut pass_ok = true;
        let mut total = 0;
        for (pattern, report) in all_maximal_vector_reports(n, k)? {
            total += 1;
            if pattern.has_diagonal_pair() {
                vanish_ok &= !report.nonzero;
            } else {
                pass_ok &= report.passes(n);
                *passes.entry((report.lambda.clone(), report.mu.clone())).or_default() += 1;
            }
        }
        checks.push(S, "maximal vectors for patterns with s_i ≠ t_i", pass_ok, json!(total));
        checks.push(S, "vanishing for patterns with some s_i = t_i", vanish_ok, json!(null));
        let mut tallies = Vec::new();
        let mut tally_ok = true;
        for r in 0..=k {
            for l in enumerate_partitions(r) {
                for m in enumerate_partitions(r) {
                    let got = passes.get(&(l.clone(), m.clone())).copied().unwrap_or(0);
                    let want = multiplicity(k, &l, &m)?;
                    tally_ok &= BigUint::from(got) == want;
                    tallies.push(json!({
                        "lambda": l.to_string(), "mu": m.to_string(),
                        "maximal_vectors": got.to_string(), "multiplicity": want.to_string(),
                    }));
                }
            }
        }
        checks.push(S, "maximal-vector tallies = multiplicity table", tally_ok, json!(tallies));
    }
    Ok(())
}
