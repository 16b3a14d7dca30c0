//! Brute-force decomposition of sl_n^{⊗k} from characters.
//!
//! Weights are gl_n weights written as integer n-tuples in the ε basis.
//! The character of sl_n^{⊗k} is the k-fold convolution of the adjoint
//! weights. Irreducible characters come from Freudenthal's recursion, run on
//! dominant weights only and expanded over the Weyl group when the full
//! multiset is wanted.
//!
//! [`decompose`] peels off irreducibles greedily, always taking the
//! lexicographically greatest dominant weight left. This is sound because
//! every weight of L(κ) other than κ is κ minus a nonzero sum of positive
//! roots ε_i - ε_j (i < j), and subtracting such a root lowers the tuple
//! lexicographically.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multiplicity::full_table;
use crate::partitions::Partition;

pub type Weight = Vec<i64>;

/// Upper bound on the number of weights held during convolution.
pub const MAX_STORED_WEIGHTS: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HighestWeightPair {
    pub lambda: Partition,
    pub mu: Partition,
}

impl HighestWeightPair {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        HighestWeightPair { lambda, mu }
    }
}

/// (λ_1, …, λ_p, 0, …, 0, -μ_q, …, -μ_1).
pub fn pair_to_weight(pair: &HighestWeightPair, n: usize) -> Result<Weight> {
    let (p, q) = (pair.lambda.len(), pair.mu.len());
    if p + q > n {
        return Err(Error::Precondition(format!(
            "pair ({}; {}) needs {} rows but n = {n}",
            pair.lambda,
            pair.mu,
            p + q
        )));
    }
    let mut w = vec![0i64; n];
    for (i, &part) in pair.lambda.parts().iter().enumerate() {
        w[i] = part as i64;
    }
    for (i, &part) in pair.mu.parts().iter().enumerate() {
        w[n - 1 - i] = -(part as i64);
    }
    Ok(w)
}

/// Inverse of [`pair_to_weight`] on dominant weights.
pub fn weight_to_pair(w: &[i64]) -> Result<HighestWeightPair> {
    if !is_dominant(w) {
        return Err(Error::NotDominant(format!("{w:?}")));
    }
    let lambda = w.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
    let mu = w.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as usize).collect();
    Ok(HighestWeightPair::new(Partition::new(lambda)?, Partition::new(mu)?))
}

pub fn is_dominant(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1])
}

fn dominant_representative(w: &[i64]) -> Weight {
    let mut d = w.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Weight multiset with positive big-integer counts; zero counts are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    n: usize,
    terms: BTreeMap<Weight, BigUint>,
}

impl WeightMultiset {
    pub fn new(n: usize) -> Self {
        WeightMultiset { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigUint> {
        &self.terms
    }

    pub fn get(&self, w: &[i64]) -> BigUint {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, w: Weight, c: BigUint) {
        if !c.is_zero() {
            *self.terms.entry(w).or_default() += c;
        }
    }

    pub fn mass(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn dominant_part(&self) -> WeightMultiset {
        WeightMultiset {
            n: self.n,
            terms: self.terms.iter().filter(|(w, _)| is_dominant(w)).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Pretty form used in tests and reports.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms.iter().map(|(w, c)| serde_json::json!({"weight": w, "count": c.to_string()})).collect(),
        )
    }
}

/// Roots ε_i - ε_j (i ≠ j) once each, and 0 with multiplicity n - 1.
pub fn adjoint_weights(n: usize) -> Result<WeightMultiset> {
    if n < 2 {
        return Err(Error::Precondition(format!("sl_n needs n ≥ 2 (got {n})")));
    }
    let mut out = WeightMultiset::new(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut w = vec![0; n];
                w[i] = 1;
                w[j] = -1;
                out.add(w, BigUint::one());
            }
        }
    }
    out.add(vec![0; n], BigUint::from(n - 1));
    Ok(out)
}

fn convolve(a: &WeightMultiset, b: &WeightMultiset) -> Result<WeightMultiset> {
    let mut out = WeightMultiset::new(a.n);
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let w = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            out.add(w, ca * cb);
        }
        if out.len() > MAX_STORED_WEIGHTS {
            return Err(Error::TooLarge(format!("more than {MAX_STORED_WEIGHTS} weights; try smaller n or k")));
        }
    }
    Ok(out)
}

/// k-fold convolution; k = 0 gives the trivial character.
pub fn convolve_power(w: &WeightMultiset, k: usize) -> Result<WeightMultiset> {
    let mut acc = WeightMultiset::new(w.n);
    acc.add(vec![0; w.n], BigUint::one());
    for _ in 0..k {
        acc = convolve(&acc, w)?;
    }
    Ok(acc)
}

fn check_weight(hw: &[i64], n: usize) -> Result<()> {
    if hw.len() != n {
        return Err(Error::ParameterMismatch(format!("weight {hw:?} has length {} but n = {n}", hw.len())));
    }
    if !is_dominant(hw) {
        return Err(Error::NotDominant(format!("{hw:?} is not weakly decreasing")));
    }
    Ok(())
}

/// Dominant ν with the same coordinate sum as κ and ν ≤ κ in dominance
/// order. These are exactly the dominant weights of L(κ).
fn dominant_weights_below(kappa: &[i64]) -> Vec<Weight> {
    fn go(kappa: &[i64], prefix: &[i64], cur: &mut Vec<i64>, sum: i64, out: &mut Vec<Weight>) {
        let n = kappa.len();
        let i = cur.len();
        if i == n - 1 {
            let last = prefix[n - 1] - sum;
            if last <= cur[i - 1] && last >= kappa[n - 1] {
                cur.push(last);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let hi = if i == 0 { kappa[0] } else { cur[i - 1] };
        let mut x = hi.min(prefix[i] - sum);
        // The other coordinates are ≤ x, so x cannot drop below their average.
        while x >= kappa[n - 1] {
            let remaining = prefix[n - 1] - sum - x;
            if remaining > x * (n - i - 1) as i64 {
                break;
            }
            cur.push(x);
            go(kappa, prefix, cur, sum + x, out);
            cur.pop();
            x -= 1;
        }
    }
    let n = kappa.len();
    if n == 1 {
        return vec![kappa.to_vec()];
    }
    let prefix: Vec<i64> = kappa
        .iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect();
    let mut out = Vec::new();
    go(kappa, &prefix, &mut Vec::new(), 0, &mut out);
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Multiplicities of the dominant weights of L(κ), by Freudenthal:
/// m(μ) (|κ+ρ|² - |μ+ρ|²) = 2 Σ_{α>0} Σ_{j≥1} m(μ+jα) ⟨μ+jα, α⟩.
pub fn dominant_character(kappa: &[i64], n: usize) -> Result<WeightMultiset> {
    check_weight(kappa, n)?;
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let shifted = |w: &[i64]| -> i64 {
        let s: Vec<i64> = w.iter().zip(&rho).map(|(x, r)| x + r).collect();
        dot(&s, &s)
    };
    let top = shifted(kappa);
    let mut candidates = dominant_weights_below(kappa);
    candidates.sort_unstable_by(|a, b| b.cmp(a));
    let mut mult: BTreeMap<Weight, BigInt> = candidates.iter().map(|w| (w.clone(), BigInt::zero())).collect();
    let mut out = WeightMultiset::new(n);
    for mu in &candidates {
        let m = if mu.as_slice() == kappa {
            BigInt::one()
        } else {
            let mut num = BigInt::zero();
            for a in 0..n {
                for b in (a + 1)..n {
                    let mut w = mu.clone();
                    loop {
                        w[a] += 1;
                        w[b] -= 1;
                        let Some(m) = mult.get(&dominant_representative(&w)) else {
                            break;
                        };
                        num += m * (w[a] - w[b]);
                    }
                }
            }
            num *= 2;
            let den = BigInt::from(top - shifted(mu));
            if !den.is_positive() {
                return Err(Error::Internal(format!("Freudenthal denominator {den} at {mu:?}")));
            }
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() || q.is_negative() {
                return Err(Error::Internal(format!("Freudenthal gives {num}/{den} at {mu:?}")));
            }
            q
        };
        mult.insert(mu.clone(), m.clone());
        out.add(mu.clone(), m.to_biguint().unwrap_or_default());
    }
    Ok(out)
}

/// Distinct permutations of `w`.
fn orbit(w: &[i64]) -> Vec<Weight> {
    let mut cur = w.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) {
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Full weight multiset of L(hw).
pub fn freudenthal_multiplicities(hw: &[i64], n: usize) -> Result<WeightMultiset> {
    let dom = dominant_character(hw, n)?;
    let mut out = WeightMultiset::new(n);
    for (w, c) in dom.terms() {
        for v in orbit(w) {
            out.add(v, c.clone());
        }
    }
    Ok(out)
}

/// Π_{a<b} (hw_a - hw_b + b - a) / (b - a).
pub fn weyl_dimension(hw: &[i64], n: usize) -> Result<BigUint> {
    check_weight(hw, n)?;
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for a in 0..n {
        for b in (a + 1)..n {
            num *= (hw[a] - hw[b] + (b - a) as i64) as u64;
            den *= (b - a) as u64;
        }
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("Weyl dimension not integral for {hw:?}")));
    }
    Ok(q)
}

/// Multiplicity of every L(λ, μ) in sl_n^{⊗k}.
pub fn decompose(n: usize, k: usize) -> Result<BTreeMap<HighestWeightPair, BigUint>> {
    let adjoint = adjoint_weights(n)?;
    let mut remaining = convolve_power(&adjoint, k)?.dominant_part();
    let mut out = BTreeMap::new();
    while let Some((kappa, c)) = remaining.terms.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) {
        let chunk = dominant_character(&kappa, n)?;
        if chunk.get(&kappa) != BigUint::one() {
            return Err(Error::Internal(format!("highest weight {kappa:?} missing from its own character")));
        }
        let before = remaining.mass();
        for (w, m) in chunk.terms() {
            let take = &c * m;
            let slot =
                remaining.terms.get_mut(w).filter(|have| **have >= take).ok_or_else(|| {
                    Error::Internal(format!("negative coefficient at {w:?} while removing L({kappa:?})"))
                })?;
            *slot -= take;
            if slot.is_zero() {
                remaining.terms.remove(w);
            }
        }
        if remaining.mass() + &c * chunk.mass() != before {
            return Err(Error::Internal(format!("mass not conserved removing L({kappa:?})")));
        }
        out.insert(weight_to_pair(&kappa)?, c);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub oracle: BigUint,
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub formula: BigUint,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub n: usize,
    pub k: usize,
    /// Whether n ≥ 2k, where the closed form is expected to hold.
    pub stable: bool,
    pub rows: Vec<ComparisonRow>,
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub dimension_sum: BigUint,
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub expected_dimension: BigUint,
}

impl ComparisonReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &ComparisonRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    pub fn mismatch_count(&self) -> usize {
        self.mismatches().count()
    }

    pub fn dimension_identity_holds(&self) -> bool {
        self.dimension_sum == self.expected_dimension
    }
}

/// Oracle multiplicities next to the closed form, one row per pair with
/// |λ| = |μ| ≤ k, in table order. Mismatches below n = 2k are reported
/// without judgement.
pub fn compare_with_formula(n: usize, k: usize) -> Result<ComparisonReport> {
    let oracle = decompose(n, k)?;
    let mut dimension_sum = BigUint::zero();
    for (pair, m) in &oracle {
        dimension_sum += m * weyl_dimension(&pair_to_weight(pair, n)?, n)?;
    }
    let table = full_table(k);
    let mut rows = Vec::new();
    for entry in table.entries() {
        let pair = HighestWeightPair::new(entry.lambda.clone(), entry.mu.clone());
        let o = oracle.get(&pair).cloned().unwrap_or_default();
        rows.push(ComparisonRow {
            lambda: entry.lambda.clone(),
            mu: entry.mu.clone(),
            matches: o == entry.multiplicity,
            oracle: o,
            formula: entry.multiplicity.clone(),
        });
    }
    for (pair, m) in &oracle {
        if table.get(&pair.lambda, &pair.mu).is_none() {
            rows.push(ComparisonRow {
                lambda: pair.lambda.clone(),
                mu: pair.mu.clone(),
                oracle: m.clone(),
                formula: BigUint::zero(),
                matches: m.is_zero(),
            });
        }
    }
    let expected_dimension = BigUint::from(n * n - 1).pow(k.to_u32().unwrap_or(u32::MAX));
    Ok(ComparisonReport { n, k, stable: n >= 2 * k, rows, dimension_sum, expected_dimension })
}
