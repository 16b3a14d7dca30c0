//! Closed-form multiplicities m^k_{λ,μ} of L(λ,μ) in sl_n^{⊗k}.
//!
//! The formulas are n-free but only describe sl_n^{⊗k} when n ≥ 2k. Below
//! that range use [`crate::character_oracle`].
//!
//! One cell of the commonly reproduced k = 4 table, row (2,1,1) and column
//! (1,1,1,1), is printed there as 6. The closed form gives 3, and only 3 is
//! consistent with the sum-of-squares identity Σ m² = D_8 = 14833.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::derangements::derangement_recurrence;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn check_sizes(lambda: &Partition, mu: &Partition) -> Result<usize> {
    let (a, b) = (lambda.size(), mu.size());
    if a != b {
        return Err(Error::SizeMismatch { lambda: a, mu: b });
    }
    Ok(a)
}

/// Number of contraction patterns (s, t) with |s| = |t| = k - r and no
/// s_i = t_i, by inclusion-exclusion.
fn pattern_count(k: usize, r: usize) -> BigUint {
    let mut sum = BigInt::zero();
    for j in 0..=(k - r) {
        let term = BigInt::from(binomial(k, j) * binomial(k - j, r).pow(2) * factorial(k - r - j));
        if j.is_even() {
            sum += term;
        } else {
            sum -= term;
        }
    }
    debug_assert!(!sum.is_negative());
    sum.to_biguint().unwrap_or_default()
}

/// m^k_{λ,μ} = f^λ f^μ Σ_{j=0}^{k-r} (-1)^j C(k,j) C(k-j,r)² (k-r-j)!.
///
/// Pairs with r > k do not occur and give 0.
pub fn multiplicity(k: usize, lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    let r = check_sizes(lambda, mu)?;
    if r > k {
        return Ok(BigUint::zero());
    }
    Ok(lambda.num_standard_tableaux() * mu.num_standard_tableaux() * pattern_count(k, r))
}

/// Same quantity through hook products:
/// (1/(h(λ)h(μ))) Σ_j (-1)^j k!(k-j)!/(j!(k-r-j)!).
pub fn multiplicity_hook_form(k: usize, lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    let r = check_sizes(lambda, mu)?;
    if r > k {
        return Ok(BigUint::zero());
    }
    let kf = factorial(k);
    let mut sum = BigInt::zero();
    for j in 0..=(k - r) {
        let num = &kf * factorial(k - j);
        let den = factorial(j) * factorial(k - r - j);
        let (q, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::Internal(format!("non-integral hook-form term at j = {j}")));
        }
        if j.is_even() {
            sum += BigInt::from(q);
        } else {
            sum -= BigInt::from(q);
        }
    }
    let hooks = BigInt::from(lambda.hook_product() * mu.hook_product());
    let (q, rem) = sum.div_rem(&hooks);
    if !rem.is_zero() || q.is_negative() {
        return Err(Error::Internal(format!("hook-form sum {sum} not divisible by {hooks}")));
    }
    Ok(q.to_biguint().unwrap_or_default())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub r: usize,
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub multiplicity: BigUint,
}

/// Every pair (λ, μ) with |λ| = |μ| ≤ k, ordered by r ascending and then by
/// partition order on λ and μ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    k: usize,
    entries: Vec<MultiplicityEntry>,
}

impl MultiplicityTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[MultiplicityEntry] {
        &self.entries
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&BigUint> {
        self.entries.iter().find(|e| &e.lambda == lambda && &e.mu == mu).map(|e| &e.multiplicity)
    }

    pub fn sum_of_squares(&self) -> BigUint {
        self.entries.iter().map(|e| &e.multiplicity * &e.multiplicity).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.entries).expect("table entries serialize")
    }

    /// One block per r: header row of μ labels, then one row per λ.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..=self.k {
            let shapes = enumerate_partitions(r);
            if r > 0 {
                out.push('\n');
            }
            out.push_str(&format!("r={r}\n"));
            out.push_str("lambda\\mu");
            for mu in &shapes {
                out.push(',');
                out.push_str(&csv_field(&mu.to_string()));
            }
            out.push('\n');
            for lambda in &shapes {
                out.push_str(&csv_field(&lambda.to_string()));
                for mu in &shapes {
                    out.push(',');
                    let m = self.get(lambda, mu).cloned().unwrap_or_default();
                    out.push_str(&m.to_string());
                }
                out.push('\n');
            }
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.is_empty() {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

pub fn full_table(k: usize) -> MultiplicityTable {
    let mut entries = Vec::new();
    for r in 0..=k {
        let shapes = enumerate_partitions(r);
        let pc = pattern_count(k, r);
        for lambda in &shapes {
            for mu in &shapes {
                let multiplicity = lambda.num_standard_tableaux() * mu.num_standard_tableaux() * &pc;
                entries.push(MultiplicityEntry { lambda: lambda.clone(), mu: mu.clone(), r, multiplicity });
            }
        }
    }
    MultiplicityTable { k, entries }
}

/// Σ (m^k_{λ,μ})² over the full table; equals D_{2k}.
pub fn checksum_sum_of_squares(k: usize) -> BigUint {
    full_table(k).sum_of_squares()
}

/// Dimension of the invariants, m^k_{∅,∅}; equals D_k.
pub fn invariants_dimension(k: usize) -> BigUint {
    multiplicity(k, &Partition::empty(), &Partition::empty()).expect("sizes agree")
}

/// Multiplicity of the adjoint module itself, m^k_{□,□}; equals D_{k+1}.
pub fn adjoint_multiplicity(k: usize) -> BigUint {
    let boxed = Partition::new(vec![1]).expect("valid");
    multiplicity(k, &boxed, &boxed).expect("sizes agree")
}

/// Checks k(D_k + D_{k-1}) = D_{k+1} = m^k_{□,□} for k ≥ 1.
pub fn adjoint_recurrence_holds(k: usize) -> bool {
    if k == 0 {
        return adjoint_multiplicity(0).is_zero();
    }
    let via_recurrence = (derangement_recurrence(k) + derangement_recurrence(k - 1)) * k;
    via_recurrence == derangement_recurrence(k + 1) && via_recurrence == adjoint_multiplicity(k)
}
