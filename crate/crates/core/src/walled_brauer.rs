//! The walled Brauer algebra B_{k,k}(n).
//!
//! A diagram is a perfect matching on two rows of 2k vertices, `T1..T2k` on
//! top and `B1..B2k` on the bottom, with a wall after position k in each row.
//! Horizontal edges must cross the wall and vertical edges must not.
//!
//! Vertices are numbered `T1..T2k = 0..2k` and `B1..B2k = 2k..4k`, and a
//! diagram is stored as its involution on those numbers, which makes
//! structural equality and hashing canonical.
//!
//! The product `d1 · d2` stacks `d1` above `d2` and multiplies by `n` for each
//! closed loop left in the middle row.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::symmetric_group::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    Top,
    Bottom,
}

/// A vertex: row and 1-based position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub row: Row,
    pub pos: usize,
}

impl Vertex {
    pub fn top(pos: usize) -> Self {
        Vertex { row: Row::Top, pos }
    }

    pub fn bottom(pos: usize) -> Self {
        Vertex { row: Row::Bottom, pos }
    }

    fn index(self, k: usize) -> usize {
        match self.row {
            Row::Top => self.pos - 1,
            Row::Bottom => 2 * k + self.pos - 1,
        }
    }

    fn from_index(k: usize, i: usize) -> Self {
        if i < 2 * k {
            Vertex::top(i + 1)
        } else {
            Vertex::bottom(i - 2 * k + 1)
        }
    }

    pub fn parse(label: &str) -> Result<Self> {
        let (row, rest) = match label.chars().next() {
            Some('T') => (Row::Top, &label[1..]),
            Some('B') => (Row::Bottom, &label[1..]),
            _ => return Err(Error::InvalidDiagram(format!("bad vertex label {label:?}"))),
        };
        let pos = rest.parse::<usize>().map_err(|_| Error::InvalidDiagram(format!("bad vertex label {label:?}")))?;
        Ok(Vertex { row, pos })
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.row {
            Row::Top => 'T',
            Row::Bottom => 'B',
        };
        write!(f, "{r}{}", self.pos)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalledDiagram {
    k: usize,
    partner: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    k: usize,
    edges: Vec<[String; 2]>,
}

impl WalledDiagram {
    /// Builds a diagram from its edges, checking the matching and the wall.
    pub fn from_edges(k: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidDiagram("k must be positive".into()));
        }
        let mut partner = vec![usize::MAX; 4 * k];
        for &(a, b) in edges {
            let edge = format!("{{{a},{b}}}");
            for v in [a, b] {
                if v.pos == 0 || v.pos > 2 * k {
                    return Err(Error::InvalidDiagram(format!("edge {edge}: vertex {v} out of range for k = {k}")));
                }
            }
            let left = |v: Vertex| v.pos <= k;
            if a.row == b.row && left(a) == left(b) {
                return Err(Error::InvalidDiagram(format!("horizontal edge {edge} does not cross the wall")));
            }
            if a.row != b.row && left(a) != left(b) {
                return Err(Error::InvalidDiagram(format!("vertical edge {edge} crosses the wall")));
            }
            let (ia, ib) = (a.index(k), b.index(k));
            for (i, v) in [(ia, a), (ib, b)] {
                if partner[i] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!("edge {edge}: vertex {v} used twice")));
                }
                partner[i] = if i == ia { ib } else { ia };
            }
            if ia == ib {
                return Err(Error::InvalidDiagram(format!("edge {edge} is a loop")));
            }
        }
        if let Some(i) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidDiagram(format!("vertex {} has no edge", Vertex::from_index(k, i))));
        }
        Ok(WalledDiagram { k, partner })
    }

    pub fn identity(k: usize) -> Self {
        let edges: Vec<_> = (1..=2 * k).map(|p| (Vertex::top(p), Vertex::bottom(p))).collect();
        Self::from_edges(k, &edges).expect("identity is a valid diagram")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partner_of(&self, v: Vertex) -> Vertex {
        Vertex::from_index(self.k, self.partner[v.index(self.k)])
    }

    /// Edges as sorted vertex pairs, in sorted order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..4 * self.k)
            .filter(|&i| i < self.partner[i])
            .map(|i| (Vertex::from_index(self.k, i), Vertex::from_index(self.k, self.partner[i])))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.k)
    }

    /// True if no edge stays within a row.
    pub fn is_vertical(&self) -> bool {
        (0..2 * self.k).all(|i| self.partner[i] >= 2 * self.k)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges = self.edges().into_iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect();
        serde_json::to_value(DiagramJson { k: self.k, edges }).expect("diagram serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: DiagramJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(format!("diagram JSON: {e}")))?;
        let edges =
            raw.edges.iter().map(|[a, b]| Ok((Vertex::parse(a)?, Vertex::parse(b)?))).collect::<Result<Vec<_>>>()?;
        Self::from_edges(raw.k, &edges)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("diagram JSON: {e}")))?;
        Self::from_json(&value)
    }
}

impl fmt::Display for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Stacks `d1` above `d2`; returns the number of closed middle loops and the
/// resulting diagram.
pub fn compose_diagrams(d1: &WalledDiagram, d2: &WalledDiagram) -> Result<(usize, WalledDiagram)> {
    if d1.k != d2.k {
        return Err(Error::ParameterMismatch(format!("diagram k = {} vs k = {}", d1.k, d2.k)));
    }
    let k = d1.k;
    let w = 2 * k;
    let mut middle_seen = vec![false; w];
    let mut partner = vec![usize::MAX; 2 * w];

    // Follow a path entering the middle row at `m`, arriving from d1 (`from_top`)
    // or from d2. Returns the outer endpoint as a result index.
    let walk = |mut m: usize, mut from_top: bool, seen: &mut Vec<bool>| -> usize {
        loop {
            seen[m] = true;
            if from_top {
                let q = d2.partner[m];
                if q >= w {
                    return q;
                }
                m = q;
                from_top = false;
            } else {
                let q = d1.partner[w + m];
                if q < w {
                    return q;
                }
                m = q - w;
                from_top = true;
            }
        }
    };

    for t in 0..w {
        if partner[t] != usize::MAX {
            continue;
        }
        let q = d1.partner[t];
        let end = if q < w { q } else { walk(q - w, true, &mut middle_seen) };
        partner[t] = end;
        partner[end] = t;
    }
    for b in w..2 * w {
        if partner[b] != usize::MAX {
            continue;
        }
        let q = d2.partner[b];
        let end = if q >= w { q } else { walk(q, false, &mut middle_seen) };
        partner[b] = end;
        partner[end] = b;
    }

    let mut cycles = 0;
    for start in 0..w {
        if middle_seen[start] {
            continue;
        }
        cycles += 1;
        let mut m = start;
        loop {
            middle_seen[m] = true;
            // Inside a closed loop both diagrams keep the path in the middle row.
            let via_d2 = d2.partner[m];
            let next = d1.partner[w + via_d2] - w;
            middle_seen[via_d2] = true;
            if next == start {
                break;
            }
            m = next;
        }
    }

    Ok((cycles, WalledDiagram { k, partner }))
}

/// The diagram of the contraction c_{j,j}: edges {Tj, T(k+j)} and
/// {Bj, B(k+j)}, all other vertices joined vertically.
pub fn contraction_diagram(k: usize, j: usize) -> Result<WalledDiagram> {
    if j == 0 || j > k {
        return Err(Error::IndexOutOfRange(format!("contraction index {j} not in 1..={k}")));
    }
    let mut edges = vec![(Vertex::top(j), Vertex::top(k + j)), (Vertex::bottom(j), Vertex::bottom(k + j))];
    edges.extend((1..=2 * k).filter(|&p| p != j && p != k + j).map(|p| (Vertex::top(p), Vertex::bottom(p))));
    WalledDiagram::from_edges(k, &edges)
}

/// Diagram of the contraction product c_{s_1,t_1} ⋯ c_{s_m,t_m}, with s and t
/// listed positionally (1-based, t given as a position on the V* side).
pub fn contraction_pattern_diagram(k: usize, s: &[usize], t: &[usize]) -> Result<WalledDiagram> {
    if s.len() != t.len() {
        return Err(Error::InvalidPattern(format!("|s| = {} but |t| = {}", s.len(), t.len())));
    }
    let mut edges = Vec::new();
    for (&a, &b) in s.iter().zip(t) {
        edges.push((Vertex::top(a), Vertex::top(k + b)));
        edges.push((Vertex::bottom(a), Vertex::bottom(k + b)));
    }
    for p in (1..=k).filter(|p| !s.contains(p)) {
        edges.push((Vertex::top(p), Vertex::bottom(p)));
    }
    for p in (1..=k).filter(|p| !t.contains(p)) {
        edges.push((Vertex::top(k + p), Vertex::bottom(k + p)));
    }
    WalledDiagram::from_edges(k, &edges)
}

/// Diagram of the place permutation (σ, τ): V-slot i goes to σ(i), V*-slot i
/// goes to τ(i). Edges join `T(σ(i))` with `Bi`.
pub fn permutation_diagram(left: &Permutation, right: &Permutation) -> Result<WalledDiagram> {
    let k = left.degree();
    if right.degree() != k {
        return Err(Error::ParameterMismatch("permutation degrees differ".into()));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((Vertex::top(left.apply(i) + 1), Vertex::bottom(i + 1)));
        edges.push((Vertex::top(k + right.apply(i) + 1), Vertex::bottom(k + i + 1)));
    }
    WalledDiagram::from_edges(k, &edges)
}

/// True if some row has an edge joining position i to position k+i.
pub fn has_forbidden_pair(d: &WalledDiagram) -> bool {
    let k = d.k;
    (1..=k).any(|i| {
        d.partner_of(Vertex::top(i)) == Vertex::top(k + i) || d.partner_of(Vertex::bottom(i)) == Vertex::bottom(k + i)
    })
}

/// The two flips: swap the rightmost k vertices of the two rows, then swap
/// mirror positions i and k+i in the top row. Every edge then joins the rows,
/// giving a permutation (top position ↦ bottom position). The diagram has no
/// forbidden pair exactly when this permutation has no fixed point.
pub fn flip_to_permutation(d: &WalledDiagram) -> Permutation {
    let k = d.k;
    // Final (row, 0-based position) of each original vertex.
    let place = |v: Vertex| -> (Row, usize) {
        let p = v.pos - 1;
        match (v.row, p < k) {
            (Row::Top, true) => (Row::Top, p + k),
            (Row::Top, false) => (Row::Bottom, p),
            (Row::Bottom, true) => (Row::Bottom, p),
            (Row::Bottom, false) => (Row::Top, p - k),
        }
    };
    let mut images = vec![0; 2 * k];
    for (a, b) in d.edges() {
        let (pa, pb) = (place(a), place(b));
        let (top, bottom) = if pa.0 == Row::Top { (pa.1, pb.1) } else { (pb.1, pa.1) };
        images[top] = bottom;
    }
    Permutation::from_images(images).expect("flips of a walled diagram give a bijection")
}

/// Inverse of [`flip_to_permutation`].
pub fn permutation_to_diagram(sigma: &Permutation) -> Result<WalledDiagram> {
    let w = sigma.degree();
    if w == 0 || !w.is_multiple_of(2) {
        return Err(Error::InvalidPermutation(format!("degree {w} is not 2k with k ≥ 1")));
    }
    let k = w / 2;
    let top_origin = |a: usize| if a >= k { Vertex::top(a - k + 1) } else { Vertex::bottom(k + a + 1) };
    let bottom_origin = |b: usize| if b < k { Vertex::bottom(b + 1) } else { Vertex::top(b + 1) };
    let edges: Vec<_> = (0..w).map(|a| (top_origin(a), bottom_origin(sigma.apply(a)))).collect();
    WalledDiagram::from_edges(k, &edges)
}

/// All (2k)! diagrams, in the lexicographic order of their flip permutations.
pub fn enumerate_diagrams(k: usize) -> Vec<WalledDiagram> {
    Permutation::all(2 * k)
        .iter()
        .map(|p| permutation_to_diagram(p).expect("every permutation un-flips to a diagram"))
        .collect()
}

/// Formal Q-linear combination of diagrams in B_{k,k}(n) for a fixed integer n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAlgebraElement {
    k: usize,
    n: u64,
    terms: BTreeMap<WalledDiagram, BigRational>,
}

impl DiagramAlgebraElement {
    pub fn zero(k: usize, n: u64) -> Self {
        DiagramAlgebraElement { k, n, terms: BTreeMap::new() }
    }

    pub fn identity(k: usize, n: u64) -> Self {
        Self::from_diagram(WalledDiagram::identity(k), n)
    }

    pub fn from_diagram(d: WalledDiagram, n: u64) -> Self {
        let mut out = Self::zero(d.k, n);
        out.add_term(d, BigRational::one());
        out
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<WalledDiagram, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, d: &WalledDiagram) -> BigRational {
        self.terms.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: WalledDiagram, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
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

    fn check(&self, other: &Self) -> Result<()> {
        if self.k != other.k || self.n != other.n {
            return Err(Error::ParameterMismatch(format!(
                "B_{{{0},{0}}}({1}) vs B_{{{2},{2}}}({3})",
                self.k, self.n, other.k, other.n
            )));
        }
        Ok(())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.k, self.n);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, v) in &other.terms {
            out.add_term(d.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Bilinear product; each pair of diagrams contributes n^{loops}.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = BigInt::from(self.n);
        let mut out = Self::zero(self.k, self.n);
        for (d1, a) in &self.terms {
            for (d2, b) in &other.terms {
                let (loops, d) = compose_diagrams(d1, d2)?;
                let scalar = BigRational::from_integer(num_traits::pow(n.clone(), loops));
                out.add_term(d, a * b * scalar);
            }
        }
        Ok(out)
    }

    /// Coordinates in the diagram basis.
    pub fn coordinates(&self) -> &BTreeMap<WalledDiagram, BigRational> {
        &self.terms
    }
}

/// c_j = (1/n) · contraction_diagram(k, j).
pub fn scaled_contraction(k: usize, n: u64, j: usize) -> Result<DiagramAlgebraElement> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    Ok(DiagramAlgebraElement::from_diagram(contraction_diagram(k, j)?, n)
        .scale(&BigRational::new(BigInt::one(), BigInt::from(n))))
}

/// b = Π_{j=1}^{k} (1 - c_j), expanded in the diagram basis.
pub fn b_idempotent(k: usize, n: u64) -> Result<DiagramAlgebraElement> {
    let one = DiagramAlgebraElement::identity(k, n);
    let mut b = one.clone();
    for j in 1..=k {
        let factor = one.sub(&scaled_contraction(k, n, j)?)?;
        b = b.multiply(&factor)?;
    }
    Ok(b)
}

/// The elements b·d·b for every diagram d without a forbidden pair, in
/// enumeration order.
pub fn sandwich_basis(k: usize, n: u64) -> Result<Vec<DiagramAlgebraElement>> {
    let b = b_idempotent(k, n)?;
    enumerate_diagrams(k)
        .into_iter()
        .filter(|d| !has_forbidden_pair(d))
        .map(|d| b.multiply(&DiagramAlgebraElement::from_diagram(d, n))?.multiply(&b))
        .collect()
}

/// Exact rank of {b·d·b : d without forbidden pair}.
pub fn sandwich_basis_rank(k: usize, n: u64) -> Result<usize> {
    let mut basis = EchelonBasis::new();
    for element in sandwich_basis(k, n)? {
        basis.insert(element.coordinates());
    }
    Ok(basis.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn diagram(k: usize, edges: &[(&str, &str)]) -> WalledDiagram {
        let edges: Vec<_> = edges.iter().map(|(a, b)| (Vertex::parse(a).unwrap(), Vertex::parse(b).unwrap())).collect();
        WalledDiagram::from_edges(k, &edges).unwrap()
    }

    fn h() -> WalledDiagram {
        diagram(1, &[("T1", "T2"), ("B1", "B2")])
    }

    #[test]
    fn identity_is_neutral() {
        for d in enumerate_diagrams(2) {
            let id = WalledDiagram::identity(2);
            assert_eq!(compose_diagrams(&id, &d).unwrap(), (0, d.clone()));
            assert_eq!(compose_diagrams(&d, &id).unwrap(), (0, d.clone()));
        }
    }

    #[test]
    fn horizontal_squares_to_one_loop() {
        assert_eq!(compose_diagrams(&h(), &h()).unwrap(), (1, h()));
    }

    #[test]
    fn k_mismatch() {
        assert!(compose_diagrams(&h(), &WalledDiagram::identity(2)).is_err());
    }

    #[test]
    fn wall_validation() {
        let err =
            WalledDiagram::from_edges(1, &[(Vertex::top(1), Vertex::bottom(2)), (Vertex::top(2), Vertex::bottom(1))])
                .unwrap_err();
        assert_eq!(err, Error::InvalidDiagram("vertical edge {T1,B2} crosses the wall".into()));
        let err = WalledDiagram::from_edges(
            2,
            &[
                (Vertex::top(1), Vertex::top(2)),
                (Vertex::top(3), Vertex::top(4)),
                (Vertex::bottom(1), Vertex::bottom(3)),
                (Vertex::bottom(2), Vertex::bottom(4)),
            ],
        )
        .unwrap_err();
        assert_eq!(err, Error::InvalidDiagram("horizontal edge {T1,T2} does not cross the wall".into()));
        assert!(WalledDiagram::from_edges(1, &[(Vertex::top(1), Vertex::bottom(1))]).is_err());
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let d = contraction_diagram(2, 1).unwrap();
        let json = d.to_json();
        assert_eq!(
            json,
            serde_json::json!({"k": 2, "edges": [["T1", "T3"], ["T2", "B2"], ["T4", "B4"], ["B1", "B3"]]})
        );
        assert_eq!(WalledDiagram::from_json(&json).unwrap(), d);
        let bad = r#"{"k": 1, "edges": [["T1","B2"],["T2","B1"]]}"#;
        let err = WalledDiagram::from_json_str(bad).unwrap_err();
        assert!(err.to_string().contains("{T1,B2}"), "{err}");
        assert!(WalledDiagram::from_json_str(r#"{"k": 1, "edges": [["X1","B1"]]}"#).is_err());
    }

    #[test]
    fn contraction_diagrams() {
        assert_eq!(contraction_diagram(1, 1).unwrap(), h());
        let c = contraction_diagram(2, 1).unwrap();
        assert_eq!(c, diagram(2, &[("T1", "T3"), ("B1", "B3"), ("T2", "B2"), ("T4", "B4")]));
        assert!(contraction_diagram(2, 3).is_err());
        assert_eq!(contraction_pattern_diagram(2, &[1], &[1]).unwrap(), c);
    }

    #[test]
    fn worked_product_with_one_loop() {
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
        assert_eq!(compose_diagrams(&d1, &d2).unwrap(), (1, product));
    }

    #[test]
    fn linear_identity() {
        let d = contraction_diagram(2, 2).unwrap();
        let x = DiagramAlgebraElement::from_diagram(d, 3).scale(&q(5, 7));
        let id = DiagramAlgebraElement::identity(2, 3);
        assert_eq!(id.multiply(&x).unwrap(), x);
    }

    #[test]
    fn parameter_mismatch() {
        let a = DiagramAlgebraElement::identity(2, 3);
        let b = DiagramAlgebraElement::identity(2, 4);
        assert!(a.multiply(&b).is_err());
    }

    #[test]
    fn scaled_contractions_are_idempotent() {
        for k in 1..=3 {
            for j in 1..=k {
                let c = scaled_contraction(k, 4, j).unwrap();
                assert_eq!(c.multiply(&c).unwrap(), c);
            }
        }
    }

    #[test]
    fn b_expansions() {
        let b1 = b_idempotent(1, 4).unwrap();
        let expected = DiagramAlgebraElement::identity(1, 4)
            .sub(&DiagramAlgebraElement::from_diagram(h(), 4).scale(&q(1, 4)))
            .unwrap();
        assert_eq!(b1, expected);
        assert_eq!(b1.multiply(&b1).unwrap(), b1);

        let b2 = b_idempotent(2, 5).unwrap();
        let mut coeffs: Vec<BigRational> = b2.terms().values().cloned().collect();
        coeffs.sort();
        assert_eq!(coeffs, vec![q(-1, 5), q(-1, 5), q(1, 25), q(1, 1)]);
        for k in 1..=3 {
            let b = b_idempotent(k, 2 * k as u64).unwrap();
            assert_eq!(b.multiply(&b).unwrap(), b, "k = {k}");
        }
    }

    #[test]
    fn forbidden_pairs() {
        assert!(!has_forbidden_pair(&WalledDiagram::identity(3)));
        for k in 1..=3 {
            for j in 1..=k {
                assert!(has_forbidden_pair(&contraction_diagram(k, j).unwrap()));
            }
        }
        let subtle = diagram(2, &[("T1", "T4"), ("T2", "T3"), ("B1", "B4"), ("B2", "B3")]);
        assert!(!has_forbidden_pair(&subtle));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_diagrams(1).len(), 2);
        let all = enumerate_diagrams(2);
        assert_eq!(all.len(), 24);
        let distinct: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 24);
        assert_eq!(all.iter().filter(|d| !has_forbidden_pair(d)).count(), 9);
    }

    #[test]
    fn flips() {
        // The identity has no forbidden pair, so it flips to a derangement.
        assert_eq!(flip_to_permutation(&WalledDiagram::identity(1)).to_string(), "(1 2)");
        assert_eq!(flip_to_permutation(&h()), Permutation::identity(2));
        for d in enumerate_diagrams(2) {
            let sigma = flip_to_permutation(&d);
            assert_eq!(sigma.fixed_points() == 0, !has_forbidden_pair(&d), "{d}");
            assert_eq!(permutation_to_diagram(&sigma).unwrap(), d);
        }
    }

    #[test]
    fn sandwich_ranks() {
        assert_eq!(sandwich_basis_rank(1, 4).unwrap(), 1);
        assert_eq!(sandwich_basis_rank(2, 4).unwrap(), 9);
        assert_eq!(sandwich_basis_rank(2, 5).unwrap(), 9);
    }
}
