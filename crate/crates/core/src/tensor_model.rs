//! An explicit model of M = V^{⊗k} ⊗ (V*)^{⊗k} for V = Q^n.
//!
//! Vectors are sparse over the simple-tensor basis
//! `v_{i_1} ⊗ ⋯ ⊗ v_{i_k} ⊗ v*_{j_1} ⊗ ⋯ ⊗ v*_{j_k}`, and operators are rules
//! giving the image of each basis tensor, extended linearly. Nothing is ever
//! stored as a dense matrix; ranks are computed from the images of basis
//! tensors.
//!
//! gl_n acts on V by left multiplication and on V* by minus right
//! multiplication, so `E_{a,b} v_c = δ_{c,b} v_a` and
//! `E_{a,b} v*_c = -δ_{c,a} v*_b`.
//!
//! Indices in [`SimpleTensorIndex`] are 0-based (`v_1` is index 0). All
//! public slot and vector numbers are 1-based.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::character_oracle::{pair_to_weight, HighestWeightPair};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::partitions::{enumerate_partitions, enumerate_standard_tableaux, Partition, StandardTableau};
use crate::symmetric_group::{young_symmetrizer, GroupAlgebraElement, Permutation};
use crate::walled_brauer::{Row, Vertex, WalledDiagram};

/// Largest dimension n^{2k} the explicit model accepts.
pub const MAX_DIMENSION: u64 = 1_000_000;

pub fn check_size(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::Precondition(format!("need n ≥ 1 and k ≥ 1 (got n = {n}, k = {k})")));
    }
    let dim = (n as u64).checked_pow(2 * k as u32);
    match dim {
        Some(d) if d <= MAX_DIMENSION => Ok(()),
        _ => Err(Error::TooLarge(format!(
            "n^(2k) = {n}^{} exceeds {MAX_DIMENSION}; use the character oracle for large cases",
            2 * k
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleTensorIndex {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl SimpleTensorIndex {
    /// From 1-based vector numbers.
    pub fn new(n: usize, left: &[usize], right: &[usize]) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::ParameterMismatch("left and right tuples differ in length".into()));
        }
        if let Some(&bad) = left.iter().chain(right).find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange(format!("vector index {bad} not in 1..={n}")));
        }
        Ok(SimpleTensorIndex {
            left: left.iter().map(|i| i - 1).collect(),
            right: right.iter().map(|i| i - 1).collect(),
        })
    }

    pub fn k(&self) -> usize {
        self.left.len()
    }

    /// gl_n weight: Σ ε_{left} - Σ ε_{right}.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut w = vec![0i64; n];
        for &i in &self.left {
            w[i] += 1;
        }
        for &j in &self.right {
            w[j] -= 1;
        }
        w
    }
}

impl fmt::Display for SimpleTensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.left.iter().map(|i| format!("v{}", i + 1)).collect();
        let r: Vec<String> = self.right.iter().map(|i| format!("v{}*", i + 1)).collect();
        write!(f, "{}", l.into_iter().chain(r).collect::<Vec<_>>().join("⊗"))
    }
}

/// All n^{2k} basis tensors in lexicographic order.
pub fn basis(n: usize, k: usize) -> Result<Vec<SimpleTensorIndex>> {
    check_size(n, k)?;
    let total = n.pow(2 * k as u32);
    Ok((0..total)
        .map(|mut code| {
            let mut digits = vec![0; 2 * k];
            for d in digits.iter_mut().rev() {
                *d = code % n;
                code /= n;
            }
            SimpleTensorIndex { left: digits[..k].to_vec(), right: digits[k..].to_vec() }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    n: usize,
    k: usize,
    terms: BTreeMap<SimpleTensorIndex, BigRational>,
}

impl TensorVector {
    pub fn zero(n: usize, k: usize) -> Self {
        TensorVector { n, k, terms: BTreeMap::new() }
    }

    pub fn basis_vector(n: usize, idx: SimpleTensorIndex) -> Self {
        let mut v = Self::zero(n, idx.k());
        v.add_term(idx, BigRational::one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<SimpleTensorIndex, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, idx: &SimpleTensorIndex) -> BigRational {
        self.terms.get(idx).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: SimpleTensorIndex, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
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

    pub fn add_scaled(&mut self, other: &TensorVector, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        for (idx, v) in &other.terms {
            self.add_term(idx.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.n, self.k);
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one());
        out
    }
}

/// The common weight of a vector's terms, read off the diagonal action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightReading {
    Weight(Vec<i64>),
    NotHomogeneous,
    Zero,
}

pub fn weight_of(v: &TensorVector) -> WeightReading {
    let mut weights = v.terms.keys().map(|idx| idx.weight(v.n));
    let Some(first) = weights.next() else {
        return WeightReading::Zero;
    };
    if weights.all(|w| w == first) {
        WeightReading::Weight(first)
    } else {
        WeightReading::NotHomogeneous
    }
}

type Rule = dyn Fn(&SimpleTensorIndex) -> TensorVector + Send + Sync;

/// A linear operator on M given by its action on basis tensors.
#[derive(Clone)]
pub struct TensorOperator {
    n: usize,
    k: usize,
    rule: Arc<Rule>,
}

impl fmt::Debug for TensorOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorOperator(n = {}, k = {})", self.n, self.k)
    }
}

impl TensorOperator {
    pub fn from_rule(
        n: usize,
        k: usize,
        rule: impl Fn(&SimpleTensorIndex) -> TensorVector + Send + Sync + 'static,
    ) -> Result<Self> {
        check_size(n, k)?;
        Ok(TensorOperator { n, k, rule: Arc::new(rule) })
    }

    pub fn identity(n: usize, k: usize) -> Result<Self> {
        Self::from_rule(n, k, move |idx| TensorVector::basis_vector(n, idx.clone()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn apply_basis(&self, idx: &SimpleTensorIndex) -> TensorVector {
        (self.rule)(idx)
    }

    pub fn apply(&self, v: &TensorVector) -> TensorVector {
        let mut out = TensorVector::zero(self.n, self.k);
        for (idx, c) in &v.terms {
            out.add_scaled(&(self.rule)(idx), c);
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::ParameterMismatch(format!(
                "operators on (n, k) = ({}, {}) and ({}, {})",
                self.n, self.k, other.n, other.k
            )));
        }
        Ok(())
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let (a, b) = (self.clone(), rhs.clone());
        Self::from_rule(self.n, self.k, move |idx| a.apply(&b.apply_basis(idx)))
    }

    pub fn linear_combination(&self, a: &BigRational, other: &Self, b: &BigRational) -> Result<Self> {
        self.check(other)?;
        let (x, y, a, b) = (self.clone(), other.clone(), a.clone(), b.clone());
        Self::from_rule(self.n, self.k, move |idx| {
            let mut out = x.apply_basis(idx).scale(&a);
            out.add_scaled(&y.apply_basis(idx), &b);
            out
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.linear_combination(&BigRational::one(), other, &BigRational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.linear_combination(&BigRational::one(), other, &-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let (x, c) = (self.clone(), c.clone());
        TensorOperator { n: self.n, k: self.k, rule: Arc::new(move |idx| x.apply_basis(idx).scale(&c)) }
    }

    /// Tabulates the images of all basis tensors so later applications are
    /// lookups.
    pub fn materialize(&self) -> Self {
        let table: HashMap<SimpleTensorIndex, TensorVector> = basis(self.n, self.k)
            .expect("size checked at construction")
            .into_iter()
            .map(|idx| {
                let img = self.apply_basis(&idx);
                (idx, img)
            })
            .collect();
        let table = Arc::new(table);
        TensorOperator { n: self.n, k: self.k, rule: Arc::new(move |idx| table[idx].clone()) }
    }

    /// Images of every basis tensor, in basis order.
    pub fn images(&self) -> Vec<TensorVector> {
        basis(self.n, self.k).expect("size checked at construction").iter().map(|idx| self.apply_basis(idx)).collect()
    }

    /// Exact rank from the images of all basis tensors.
    pub fn rank(&self) -> usize {
        let mut echelon = EchelonBasis::new();
        for img in self.images() {
            echelon.insert(img.terms());
        }
        echelon.rank()
    }

    /// True if both operators agree on every basis tensor.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.n == other.n
            && self.k == other.k
            && basis(self.n, self.k)
                .expect("size checked at construction")
                .iter()
                .all(|idx| self.apply_basis(idx) == other.apply_basis(idx))
    }

    pub fn is_zero(&self) -> bool {
        basis(self.n, self.k).expect("size checked at construction").iter().all(|idx| self.apply_basis(idx).is_zero())
    }
}

fn check_slot(k: usize, slot: usize, what: &str) -> Result<()> {
    if slot == 0 || slot > k {
        return Err(Error::IndexOutOfRange(format!("{what} slot {slot} not in 1..={k}")));
    }
    Ok(())
}

/// c_{i,j}: contracts V-slot i against V*-slot j and inserts Σ_ℓ v_ℓ ⊗ v*_ℓ
/// in those slots.
pub fn contraction_operator(n: usize, k: usize, i: usize, j: usize) -> Result<TensorOperator> {
    check_slot(k, i, "left")?;
    check_slot(k, j, "right")?;
    let (i, j) = (i - 1, j - 1);
    TensorOperator::from_rule(n, k, move |idx| {
        let mut out = TensorVector::zero(n, k);
        if idx.left[i] == idx.right[j] {
            for l in 0..n {
                let mut img = idx.clone();
                img.left[i] = l;
                img.right[j] = l;
                out.add_term(img, BigRational::one());
            }
        }
        out
    })
}

/// p_j = (1/n) c_{j,j}.
pub fn projector_p(n: usize, k: usize, j: usize) -> Result<TensorOperator> {
    let inv_n = BigRational::new(BigInt::one(), BigInt::from(n));
    Ok(contraction_operator(n, k, j, j)?.scale(&inv_n))
}

/// e = (id - p_1)(id - p_2) ⋯ (id - p_k), tabulated.
pub fn e_operator(n: usize, k: usize) -> Result<TensorOperator> {
    let id = TensorOperator::identity(n, k)?;
    let mut e = id.clone();
    for j in 1..=k {
        e = e.compose(&id.sub(&projector_p(n, k, j)?)?)?;
    }
    Ok(e.materialize())
}

/// Place permutations: the factor in V-slot i moves to slot σ(i), and the
/// factor in V*-slot i moves to slot τ(i).
pub fn place_permutation_operator(
    n: usize,
    k: usize,
    sigma_left: &Permutation,
    sigma_right: &Permutation,
) -> Result<TensorOperator> {
    if sigma_left.degree() != k || sigma_right.degree() != k {
        return Err(Error::ParameterMismatch(format!("place permutations must have degree {k}")));
    }
    let (l, r) = (sigma_left.clone(), sigma_right.clone());
    TensorOperator::from_rule(n, k, move |idx| {
        let mut img = idx.clone();
        for s in 0..k {
            img.left[l.apply(s)] = idx.left[s];
            img.right[r.apply(s)] = idx.right[s];
        }
        TensorVector::basis_vector(n, img)
    })
}

/// Image of a group algebra element acting by place permutations on the V
/// factors (`on_left`) or the V* factors.
pub fn group_algebra_operator(n: usize, k: usize, x: &GroupAlgebraElement, on_left: bool) -> Result<TensorOperator> {
    if x.degree() != k {
        return Err(Error::ParameterMismatch(format!("group algebra element of degree {} on k = {k}", x.degree())));
    }
    let id = Permutation::identity(k);
    let mut parts = Vec::new();
    for (p, c) in x.terms() {
        let op =
            if on_left { place_permutation_operator(n, k, p, &id)? } else { place_permutation_operator(n, k, &id, p)? };
        parts.push((op, c.clone()));
    }
    TensorOperator::from_rule(n, k, move |idx| {
        let mut out = TensorVector::zero(n, k);
        for (op, c) in &parts {
            out.add_scaled(&op.apply_basis(idx), c);
        }
        out
    })
}

/// φ(d). Bottom vertices carry the input indices and top vertices the output
/// indices (positions 1..k are V-slots, k+1..2k are V*-slots); every edge
/// forces equal indices at its ends. So vertical edges move factors, bottom
/// horizontal edges evaluate the trace pairing, and top horizontal edges
/// insert Σ_ℓ v_ℓ ⊗ v*_ℓ. This agrees with composing place permutations and
/// contractions, and φ(d1)φ(d2) = n^{loops} φ(d1 d2).
pub fn diagram_to_operator(d: &WalledDiagram, n: usize) -> Result<TensorOperator> {
    let k = d.k();
    let d = d.clone();
    let edges = d.edges();
    TensorOperator::from_rule(n, k, move |idx| {
        let label = |pos: usize| if pos <= k { idx.left[pos - 1] } else { idx.right[pos - k - 1] };
        let mut out = TensorVector::zero(n, k);
        let mut fixed = vec![usize::MAX; 2 * k];
        let mut free = Vec::new();
        for &(a, b) in &edges {
            match (a.row, b.row) {
                (Row::Bottom, Row::Bottom) => {
                    if label(a.pos) != label(b.pos) {
                        return out;
                    }
                }
                (Row::Top, Row::Top) => free.push((a.pos, b.pos)),
                _ => {
                    let (top, bottom): (Vertex, Vertex) = if a.row == Row::Top { (a, b) } else { (b, a) };
                    fixed[top.pos - 1] = label(bottom.pos);
                }
            }
        }
        let combos = n.pow(free.len() as u32);
        for mut code in 0..combos {
            let mut labels = fixed.clone();
            for &(a, b) in &free {
                let l = code % n;
                code /= n;
                labels[a - 1] = l;
                labels[b - 1] = l;
            }
            out.add_term(
                SimpleTensorIndex { left: labels[..k].to_vec(), right: labels[k..].to_vec() },
                BigRational::one(),
            );
        }
        out
    })
}

/// Action of the elementary matrix E_{a,b} (1-based) as a derivation.
pub fn lie_action(n: usize, k: usize, a: usize, b: usize) -> Result<TensorOperator> {
    if a == 0 || a > n || b == 0 || b > n {
        return Err(Error::IndexOutOfRange(format!("E_{{{a},{b}}} not in gl_{n}")));
    }
    let (a, b) = (a - 1, b - 1);
    TensorOperator::from_rule(n, k, move |idx| {
        let mut out = TensorVector::zero(n, k);
        for s in 0..k {
            if idx.left[s] == b {
                let mut img = idx.clone();
                img.left[s] = a;
                out.add_term(img, BigRational::one());
            }
            if idx.right[s] == a {
                let mut img = idx.clone();
                img.right[s] = b;
                out.add_term(img, -BigRational::one());
            }
        }
        out
    })
}

/// Paired subsets (s, t) of 1..=k defining c_{s,t} = Π c_{s_i,t_i}. `s` is
/// strictly increasing; `t` is kept in pairing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ContractionPattern {
    s: Vec<usize>,
    t: Vec<usize>,
}

impl ContractionPattern {
    pub fn new(k: usize, s: Vec<usize>, t: Vec<usize>) -> Result<Self> {
        if s.len() != t.len() {
            return Err(Error::InvalidPattern(format!("|s| = {} but |t| = {}", s.len(), t.len())));
        }
        if s.len() > k {
            return Err(Error::InvalidPattern(format!("pattern of length {} exceeds k = {k}", s.len())));
        }
        if let Some(&bad) = s.iter().chain(&t).find(|&&x| x == 0 || x > k) {
            return Err(Error::InvalidPattern(format!("entry {bad} not in 1..={k}")));
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPattern(format!("s = {s:?} must be strictly increasing")));
        }
        let mut sorted_t = t.clone();
        sorted_t.sort_unstable();
        if sorted_t.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPattern(format!("t = {t:?} has repeated entries")));
        }
        Ok(ContractionPattern { s, t })
    }

    pub fn empty() -> Self {
        ContractionPattern { s: Vec::new(), t: Vec::new() }
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// True if some pair has s_i = t_i, i.e. c_{s,t} contains a c_{j,j}.
    pub fn has_diagonal_pair(&self) -> bool {
        self.s.iter().zip(&self.t).any(|(a, b)| a == b)
    }

    pub fn s_complement(&self, k: usize) -> Vec<usize> {
        (1..=k).filter(|x| !self.s.contains(x)).collect()
    }

    pub fn t_complement(&self, k: usize) -> Vec<usize> {
        (1..=k).filter(|x| !self.t.contains(x)).collect()
    }

    /// All patterns of length m: s increasing, t any arrangement.
    pub fn enumerate(k: usize, m: usize) -> Vec<ContractionPattern> {
        let mut out = Vec::new();
        for s in subsets(k, m) {
            for t in arrangements(k, m) {
                out.push(ContractionPattern { s: s.clone(), t });
            }
        }
        out
    }
}

fn subsets(k: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..=k {
            cur.push(x);
            go(x + 1, k, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k, m, &mut Vec::new(), &mut out);
    out
}

fn arrangements(k: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in 1..=k {
            if !cur.contains(&x) {
                cur.push(x);
                go(k, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(k, m, &mut Vec::new(), &mut out);
    out
}

/// c_{s,t} = c_{s_1,t_1} ⋯ c_{s_m,t_m}.
pub fn pattern_operator(n: usize, k: usize, pattern: &ContractionPattern) -> Result<TensorOperator> {
    let mut op = TensorOperator::identity(n, k)?;
    for (&a, &b) in pattern.s.iter().zip(&pattern.t) {
        op = op.compose(&contraction_operator(n, k, a, b)?)?;
    }
    Ok(op)
}

fn check_tableaux(
    k: usize,
    t: &StandardTableau,
    tstar: &StandardTableau,
    pattern: &ContractionPattern,
) -> Result<usize> {
    let r = t.shape().size();
    if tstar.shape().size() != r {
        return Err(Error::SizeMismatch { lambda: r, mu: tstar.shape().size() });
    }
    if pattern.len() + r != k {
        return Err(Error::Precondition(format!("pattern length {} + r = {r} must equal k = {k}", pattern.len())));
    }
    if t.entries() != pattern.s_complement(k) {
        return Err(Error::Precondition(format!("entries of T {t} must be the complement of s = {:?}", pattern.s)));
    }
    if tstar.entries() != pattern.t_complement(k) {
        return Err(Error::Precondition(format!(
            "entries of T* {tstar} must be the complement of t = {:?}",
            pattern.t
        )));
    }
    Ok(r)
}

/// The simple tensor x' attached to (T, T*, s, t): slot s_i holds v_{r+i},
/// slot t_i of V* holds v*_{r+i}, a V-slot in row j of T holds v_j, and a
/// V*-slot in row j of T* holds v*_{n-j+1}.
pub fn build_x_prime(
    n: usize,
    k: usize,
    t: &StandardTableau,
    tstar: &StandardTableau,
    pattern: &ContractionPattern,
) -> Result<TensorVector> {
    check_size(n, k)?;
    if n < 2 * k {
        return Err(Error::Precondition(format!("x' needs n ≥ 2k (n = {n}, k = {k})")));
    }
    let r = check_tableaux(k, t, tstar, pattern)?;
    let mut left = vec![0; k];
    let mut right = vec![0; k];
    for (i, (&a, &b)) in pattern.s.iter().zip(&pattern.t).enumerate() {
        left[a - 1] = r + i + 1;
        right[b - 1] = r + i + 1;
    }
    for p in pattern.s_complement(k) {
        left[p - 1] = t.row_of(p).expect("entry checked") + 1;
    }
    for p in pattern.t_complement(k) {
        right[p - 1] = n - tstar.row_of(p).expect("entry checked");
    }
    Ok(TensorVector::basis_vector(n, SimpleTensorIndex::new(n, &left, &right)?))
}

/// y = y_T y_{T*} c_{s,t}: y_T on the V factors, y_{T*} on the V* factors.
pub fn apply_y(
    n: usize,
    k: usize,
    t: &StandardTableau,
    tstar: &StandardTableau,
    pattern: &ContractionPattern,
) -> Result<TensorOperator> {
    check_tableaux(k, t, tstar, pattern)?;
    let yl = group_algebra_operator(n, k, &young_symmetrizer(t, k)?, true)?;
    let yr = group_algebra_operator(n, k, &young_symmetrizer(tstar, k)?, false)?;
    yl.compose(&yr)?.compose(&pattern_operator(n, k, pattern)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalVectorReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    #[serde(rename = "T")]
    pub tableau: Vec<Vec<usize>>,
    #[serde(rename = "Tstar")]
    pub tableau_star: Vec<Vec<usize>>,
    pub nonzero: bool,
    pub weight: Option<Vec<i64>>,
    pub maximal: bool,
}

impl MaximalVectorReport {
    /// Nonzero, of weight (λ, μ), and killed by every E_{a,a+1}.
    pub fn passes(&self, n: usize) -> bool {
        let expected = HighestWeightPair::new(self.lambda.clone(), self.mu.clone());
        let expected = pair_to_weight(&expected, n).ok();
        self.nonzero && self.maximal && self.weight == expected
    }
}

/// Computes w = e·y·x' and reports whether it is a nonzero maximal vector.
/// Patterns with some s_i = t_i are accepted and report `nonzero = false`
/// whenever w vanishes.
pub fn verify_maximal_vector(
    n: usize,
    k: usize,
    t: &StandardTableau,
    tstar: &StandardTableau,
    pattern: &ContractionPattern,
    e: &TensorOperator,
) -> Result<MaximalVectorReport> {
    let x = build_x_prime(n, k, t, tstar, pattern)?;
    let y = apply_y(n, k, t, tstar, pattern)?;
    let w = e.apply(&y.apply(&x));
    let nonzero = !w.is_zero();
    let weight = match weight_of(&w) {
        WeightReading::Weight(wt) => Some(wt),
        WeightReading::NotHomogeneous => {
            return Err(Error::Internal(format!("e·y·x' is not a weight vector for T = {t}, T* = {tstar}")))
        }
        WeightReading::Zero => None,
    };
    let mut maximal = nonzero;
    if nonzero {
        for a in 1..n {
            if !lie_action(n, k, a, a + 1)?.apply(&w).is_zero() {
                maximal = false;
                break;
            }
        }
    }
    Ok(MaximalVectorReport {
        lambda: t.shape().clone(),
        mu: tstar.shape().clone(),
        s: pattern.s.clone(),
        t: pattern.t.clone(),
        tableau: t.rows().to_vec(),
        tableau_star: tstar.rows().to_vec(),
        nonzero,
        weight,
        maximal,
    })
}

/// Runs [`verify_maximal_vector`] over every (T, T*, s, t) for r = 0..=k,
/// including patterns with diagonal pairs.
pub fn all_maximal_vector_reports(n: usize, k: usize) -> Result<Vec<(ContractionPattern, MaximalVectorReport)>> {
    let e = e_operator(n, k)?;
    let mut out = Vec::new();
    for r in 0..=k {
        let shapes = enumerate_partitions(r);
        for pattern in ContractionPattern::enumerate(k, k - r) {
            let sc = pattern.s_complement(k);
            let tc = pattern.t_complement(k);
            for lambda in &shapes {
                for t in enumerate_standard_tableaux(lambda, &sc)? {
                    for mu in &shapes {
                        for tstar in enumerate_standard_tableaux(mu, &tc)? {
                            let report = verify_maximal_vector(n, k, &t, &tstar, &pattern, &e)?;
                            out.push((pattern.clone(), report));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Counts of passing maximal vectors per (λ, μ).
pub fn maximal_vector_tally(n: usize, k: usize) -> Result<BTreeMap<(Partition, Partition), usize>> {
    let mut tally = BTreeMap::new();
    for (_, report) in all_maximal_vector_reports(n, k)? {
        if report.passes(n) {
            *tally.entry((report.lambda.clone(), report.mu.clone())).or_insert(0) += 1;
        }
    }
    Ok(tally)
}

/// Checks the subspace identity image(e) = ∩_j ker(p_j): every p_j kills the
/// image of e, and dim ∩ ker p_j equals rank e.
pub fn image_of_e_is_kernel_intersection(n: usize, k: usize) -> Result<bool> {
    let e = e_operator(n, k)?;
    let projectors = (1..=k).map(|j| projector_p(n, k, j).map(|p| p.materialize())).collect::<Result<Vec<_>>>()?;
    let images = e.images();
    for p in &projectors {
        if images.iter().any(|v| !p.apply(v).is_zero()) {
            return Ok(false);
        }
    }
    // Rank of x ↦ (p_1 x, ..., p_k x).
    let mut echelon = EchelonBasis::new();
    for idx in basis(n, k)? {
        let mut row: BTreeMap<(usize, SimpleTensorIndex), BigRational> = BTreeMap::new();
        for (j, p) in projectors.iter().enumerate() {
            for (key, c) in p.apply_basis(&idx).terms {
                row.insert((j, key), c);
            }
        }
        echelon.insert(&row);
    }
    let total = n.pow(2 * k as u32);
    let kernel_dim = total - echelon.rank();
    Ok(kernel_dim == e.rank())
}
