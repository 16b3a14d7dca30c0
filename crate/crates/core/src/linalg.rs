//! Exact rank of sparse rational vectors.
//!
//! Rows are cleared to primitive integer vectors and reduced fraction-free:
//! `row <- lead(pivot) * row - lead(row) * pivot`, then divided by content.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type IntRow<K> = BTreeMap<K, BigInt>;

fn primitive<K: Ord + Clone>(row: &BTreeMap<K, BigRational>) -> IntRow<K> {
    let lcm = row.values().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut out: IntRow<K> = row
        .iter()
        .filter(|(_, q)| !q.is_zero())
        .map(|(key, q)| (key.clone(), q.numer() * (&lcm / q.denom())))
        .collect();
    normalize(&mut out);
    out
}

fn normalize<K>(row: &mut IntRow<K>) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.values_mut() {
        *v /= &g;
    }
}

/// Incremental row-echelon basis keyed by leading coordinate.
#[derive(Debug, Clone)]
pub struct EchelonBasis<K: Ord + Clone> {
    pivots: BTreeMap<K, IntRow<K>>,
}

impl<K: Ord + Clone> Default for EchelonBasis<K> {
    fn default() -> Self {
        EchelonBasis { pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> EchelonBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the basis; returns true if it was independent.
    pub fn insert(&mut self, row: &BTreeMap<K, BigRational>) -> bool {
        let mut row = primitive(row);
        loop {
            let Some((lead_key, lead)) = row.iter().next().map(|(k, v)| (k.clone(), v.clone())) else {
                return false;
            };
            let Some(pivot) = self.pivots.get(&lead_key) else {
                if lead.is_negative() {
                    for v in row.values_mut() {
                        *v = -&*v;
                    }
                }
                self.pivots.insert(lead_key, row);
                return true;
            };
            let pivot_lead = &pivot[&lead_key];
            let mut next: IntRow<K> = BTreeMap::new();
            for (key, v) in &row {
                next.insert(key.clone(), v * pivot_lead);
            }
            for (key, v) in pivot {
                let entry = next.entry(key.clone()).or_insert_with(BigInt::zero);
                *entry -= v * &lead;
            }
            next.retain(|_, v| !v.is_zero());
            normalize(&mut next);
            row = next;
        }
    }
}

pub fn rank<'a, K: Ord + Clone + 'a>(rows: impl IntoIterator<Item = &'a BTreeMap<K, BigRational>>) -> usize {
    let mut basis = EchelonBasis::new();
    for row in rows {
        basis.insert(row);
    }
    basis.rank()
}
