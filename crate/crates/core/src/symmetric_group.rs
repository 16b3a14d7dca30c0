//! The group algebra of S_k over the rationals and Young symmetrizers.
//!
//! Permutations act on positions 1..=k. Products compose right to left:
//! `(σ * τ)(i) = σ(τ(i))`. A tableau whose entries are a subset of 1..=k
//! embeds its row and column groups by fixing the complement pointwise.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::StandardTableau;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    /// From 0-based images: `images[i]` is where `i` goes.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v >= images.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation(images))
    }

    /// From 1-based cycles, e.g. `[[1, 5], [2, 3]]`.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut touched = vec![false; k];
        for cycle in cycles {
            for (idx, &point) in cycle.iter().enumerate() {
                if point == 0 || point > k {
                    return Err(Error::EntryOutOfRange { entry: point, k });
                }
                if std::mem::replace(&mut touched[point - 1], true) {
                    return Err(Error::InvalidPermutation(format!("point {point} repeated in cycles")));
                }
                let next = cycle[(idx + 1) % cycle.len()];
                if next == 0 || next > k {
                    return Err(Error::EntryOutOfRange { entry: next, k });
                }
                images[point - 1] = next - 1;
            }
        }
        Permutation::from_images(images)
    }

    pub fn transposition(k: usize, a: usize, b: usize) -> Result<Self> {
        Permutation::from_cycles(k, &[vec![a, b]])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// 0-based image.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &v)| i == v).count()
    }

    /// 1-based cycles of length at least 2, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All permutations of degree `k` in lexicographic order of images.
    pub fn all(k: usize) -> Vec<Permutation> {
        arrangements(&(0..k).collect::<Vec<_>>()).into_iter().map(Permutation).collect()
    }
}

/// All orderings of `items`, lexicographic in input order.
fn arrangements(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in arrangements(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "permutation degree mismatch");
        Permutation(rhs.0.iter().map(|&i| self.0[i]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Parses cycle notation of a given degree, e.g. `"(1 5)(2 3)"` or `"()"`.
pub fn parse_cycles(k: usize, s: &str) -> Result<Permutation> {
    let s = s.trim();
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
        let close = open.find(')').ok_or_else(|| Error::Parse(format!("unbalanced cycle in {s:?}")))?;
        let body = &open[..close];
        let cycle = body
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("bad point {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    Permutation::from_cycles(k, &cycles)
}

/// Parses cycle notation inferring the degree from the largest point.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let k = s.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()).max().unwrap_or(0);
        parse_cycles(k, s)
    }
}

/// Element of Q[S_k]; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    k: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(k: usize) -> Self {
        GroupAlgebraElement { k, terms: BTreeMap::new() }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_permutation(Permutation::identity(k))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        Self::from_terms(p.degree(), [(p, BigRational::one())])
    }

    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = (Permutation, BigRational)>) -> Self {
        let mut out = Self::zero(k);
        for (p, c) in terms {
            assert_eq!(p.degree(), k, "permutation degree mismatch");
            out.add_term(p, c);
        }
        out
    }

    fn add_term(&mut self, p: Permutation, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Permutation) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.k, self.terms.iter().map(|(p, v)| (p.clone(), v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "group algebra degree mismatch");
        let mut out = Self::zero(self.k);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p * q, a * b);
            }
        }
        out
    }
}

fn check_entries(t: &StandardTableau, k: usize) -> Result<()> {
    match t.entries().into_iter().find(|&e| e == 0 || e > k) {
        Some(entry) => Err(Error::EntryOutOfRange { entry, k }),
        None => Ok(()),
    }
}

/// All permutations of S_k preserving each block setwise and fixing every
/// point outside the blocks.
fn block_group(k: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(k)];
    for block in blocks {
        let mut next = Vec::new();
        for base in &group {
            for arrangement in arrangements(block) {
                let mut images = base.0.clone();
                for (&from, &to) in block.iter().zip(&arrangement) {
                    images[from - 1] = to - 1;
                }
                next.push(Permutation(images));
            }
        }
        group = next;
    }
    group
}

pub fn row_group(t: &StandardTableau, k: usize) -> Result<Vec<Permutation>> {
    check_entries(t, k)?;
    Ok(block_group(k, t.rows()))
}

pub fn column_group(t: &StandardTableau, k: usize) -> Result<Vec<Permutation>> {
    check_entries(t, k)?;
    Ok(block_group(k, &t.columns()))
}

/// y_T = (Σ_{ρ ∈ R_T} ρ)(Σ_{γ ∈ C_T} sgn(γ) γ) in Q[S_k].
pub fn young_symmetrizer(t: &StandardTableau, k: usize) -> Result<GroupAlgebraElement> {
    let rows = GroupAlgebraElement::from_terms(k, row_group(t, k)?.into_iter().map(|p| (p, BigRational::one())));
    let cols = GroupAlgebraElement::from_terms(
        k,
        column_group(t, k)?.into_iter().map(|p| {
            let s = BigRational::from_integer(p.sign().into());
            (p, s)
        }),
    );
    Ok(rows.mul(&cols))
}

/// The scalar m with y_T² = m·y_T, computed from the product itself.
pub fn essential_idempotent_constant(t: &StandardTableau, k: usize) -> Result<BigRational> {
    let y = young_symmetrizer(t, k)?;
    let square = y.mul(&y);
    // R_T ∩ C_T is trivial, so the identity appears in y_T with coefficient 1.
    let id = Permutation::identity(k);
    let m = square.coefficient(&id) / y.coefficient(&id);
    if square != y.scale(&m) {
        return Err(Error::Internal(format!("y_T² is not a multiple of y_T for tableau {t}")));
    }
    Ok(m)
}
