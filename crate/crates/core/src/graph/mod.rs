//! Simple undirected graphs on dense vertex indices, vertex sets and exact
//! pair densities.

mod bitset;
pub mod io;

pub use bitset::{BitSet, Ones};

use crate::error::{input, Error, Result};
use crate::rational::Rational;

/// Undirected simple graph on vertices `0..n` stored as bit rows.
///
/// Values are immutable once built; use [`GraphBuilder`] to assemble one.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Mutable staging area for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    rows: Vec<BitSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            rows: (0..n).map(|_| BitSet::new(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Adds `{u, v}`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.rows.len();
        if u >= n || v >= n {
            return input(format!("edge ({u}, {v}) out of range for n = {n}"));
        }
        if u == v {
            return input(format!("self-loop at vertex {u}"));
        }
        let fresh = !self.rows[u].contains(v);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(fresh)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    pub fn build(self) -> Graph {
        Graph { rows: self.rows }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v).expect("in range");
            }
        }
        b.build()
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return input("a cycle needs at least 3 vertices");
        }
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            b.add_edge(u, (u + 1) % n)?;
        }
        Ok(b.build())
    }

    /// Star with centre 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.add_edge(0, v).expect("in range");
        }
        b.build()
    }

    /// Builds from an edge list, rejecting self-loops, out-of-range indices
    /// and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            if !b.add_edge(u, v)? {
                return input(format!("duplicate edge ({u}, {v})"));
            }
        }
        Ok(b.build())
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let mut b = GraphBuilder::new(n1 + other.n());
        for (u, v) in self.edges() {
            b.add_edge(u, v).expect("in range");
        }
        for (u, v) in other.edges() {
            b.add_edge(u + n1, v + n1).expect("in range");
        }
        b.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn all_vertices(&self) -> BitSet {
        BitSet::full(self.n())
    }

    /// `|N(v) ∩ s|`.
    pub fn degree_into(&self, v: usize, s: &VertexSet) -> Result<usize> {
        self.check_vertex(v)?;
        s.check_within(self.n())?;
        Ok(s.iter().filter(|&u| self.has_edge(v, u)).count())
    }

    /// `|N(v) ∩ s|` for a bitset `s` over the same vertex range.
    #[inline]
    pub fn degree_into_bits(&self, v: usize, s: &BitSet) -> usize {
        self.rows[v].intersection_count(s)
    }

    /// Number of edges with one end in `x` and the other in `y`.
    pub fn cross_edges(&self, x: &[usize], y: &BitSet) -> usize {
        x.iter().map(|&v| self.rows[v].intersection_count(y)).sum()
    }

    /// Exact density `deg(X, Y) / (|X||Y|)` of a pair of disjoint nonempty sets.
    pub fn pair_density(&self, x: &VertexSet, y: &VertexSet) -> Result<Density> {
        x.check_within(self.n())?;
        y.check_within(self.n())?;
        if x.is_empty() || y.is_empty() {
            return input("pair density needs nonempty sets");
        }
        let yb = y.to_bits(self.n());
        if x.iter().any(|v| yb.contains(v)) {
            return input("pair density needs disjoint sets");
        }
        let e = self.cross_edges(x.as_slice(), &yb);
        Ok(Density::from_counts(e, x.len() * y.len()))
    }

    /// Minimum degree; errors on the graph with no vertices.
    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n())
            .map(|v| self.degree(v))
            .min()
            .ok_or_else(|| Error::Input("minimum degree of the empty graph".into()))
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut b = GraphBuilder::new(k);
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    b.add_edge(i, j).expect("in range");
                }
            }
        }
        b.build()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v).expect("in range");
                }
            }
        }
        b.build()
    }

    /// Applies a permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return input("permutation length must equal n");
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return input("not a permutation");
            }
        }
        let mut b = GraphBuilder::new(n);
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v])?;
        }
        Ok(b.build())
    }

    /// `true` when `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.n() && vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v))
        })
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .into_iter()
            .all(|(u, v)| self.rows[u].is_disjoint(&self.rows[v]))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return input(format!("vertex {v} out of range for n = {}", self.n()));
        }
        Ok(())
    }
}

/// A duplicate-free, sorted set of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts the members and rejects duplicates or indices `>= n`.
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let set = VertexSet::from_iter_dedup(members)?;
        set.check_within(n)?;
        Ok(set)
    }

    /// Sorts the members and rejects duplicates, without a range check.
    pub fn from_iter_dedup(members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return input("vertex set has duplicate members");
        }
        Ok(VertexSet(v))
    }

    /// Caller guarantees the members are sorted and distinct.
    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn from_bits(bits: &BitSet) -> Self {
        VertexSet(bits.to_vec())
    }

    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet((lo..hi).collect())
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&max) if max >= n => input(format!("vertex {max} out of range for n = {n}")),
            _ => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn to_bits(&self, n: usize) -> BitSet {
        BitSet::from_iter(n, self.iter())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v: Vec<usize> = self.iter().chain(other.iter()).collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Exact edge density in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Density(Rational);

impl Density {
    pub fn from_counts(edges: usize, pairs: usize) -> Self {
        assert!(pairs > 0 && edges <= pairs, "density needs 0 <= edges <= pairs, pairs > 0");
        Density(Rational::new(edges as i64, pairs as i64))
    }

    pub fn value(&self) -> Rational {
        self.0
    }
}
