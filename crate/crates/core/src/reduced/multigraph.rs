use std::fmt::Write as _;

use super::Partition;
use crate::error::{input, Error, Result};
use crate::graph::{BitSet, Graph};
use crate::rational::{format_ratio, Rational};

/// Thresholds `ε < β` of the reduced multigraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularityParams {
    pub eps: Rational,
    pub beta: Rational,
}

impl RegularityParams {
    pub fn new(eps: Rational, beta: Rational) -> Result<Self> {
        let zero = Rational::from_integer(0);
        if !(zero < eps && eps < beta && beta < Rational::new(1, 2)) {
            return input("regularity parameters need 0 < eps < beta < 1/2");
        }
        Ok(RegularityParams { eps, beta })
    }
}

/// Densities behind a reduced multigraph built from a partitioned graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSource {
    pub partition: Partition,
    pub params: RegularityParams,
    /// Row-major `k × k` pair densities; the diagonal is zero.
    pub densities: Vec<Rational>,
}

/// Cluster multigraph with multiplicities in `{0, 1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedMultigraph {
    k: usize,
    mult: Vec<u8>,
    source: Option<ReducedSource>,
}

impl ReducedMultigraph {
    pub fn new(k: usize) -> Self {
        ReducedMultigraph { k, mult: vec![0; k * k], source: None }
    }

    /// Builds from a full symmetric matrix with zero diagonal.
    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self> {
        let k = rows.len();
        let mut r = ReducedMultigraph::new(k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return input(format!("row {i} has {} entries, expected {k}", row.len()));
            }
            for (j, &m) in row.iter().enumerate() {
                if m > 2 {
                    return input(format!("multiplicity {m} at ({i}, {j}) exceeds 2"));
                }
                if i == j && m != 0 {
                    return input(format!("nonzero diagonal entry at cluster {i}"));
                }
                if rows[j][i] != m {
                    return input(format!("matrix not symmetric at ({i}, {j})"));
                }
                r.mult[i * k + j] = m;
            }
        }
        Ok(r)
    }

    pub fn from_edges(k: usize, edges: &[(usize, usize, u8)]) -> Result<Self> {
        let mut r = ReducedMultigraph::new(k);
        for &(i, j, m) in edges {
            r.set(i, j, m)?;
        }
        Ok(r)
    }

    pub fn set(&mut self, i: usize, j: usize, m: u8) -> Result<()> {
        if i >= self.k || j >= self.k {
            return input(format!("cluster pair ({i}, {j}) out of range for k = {}", self.k));
        }
        if i == j {
            return input(format!("loop at cluster {i}"));
        }
        if m > 2 {
            return input(format!("multiplicity {m} exceeds 2"));
        }
        self.mult[i * self.k + j] = m;
        self.mult[j * self.k + i] = m;
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn mult(&self, i: usize, j: usize) -> u8 {
        self.mult[i * self.k + j]
    }

    /// Degree counting multiplicity.
    pub fn degree(&self, i: usize) -> usize {
        self.mult[i * self.k..(i + 1) * self.k].iter().map(|&m| m as usize).sum()
    }

    /// Clusters joined to `i` by at least one edge.
    pub fn neighbors(&self, i: usize) -> BitSet {
        BitSet::from_iter(self.k, (0..self.k).filter(|&j| self.mult(i, j) >= 1))
    }

    pub fn double_neighbors(&self, i: usize) -> BitSet {
        BitSet::from_iter(self.k, (0..self.k).filter(|&j| self.mult(i, j) == 2))
    }

    /// Pairs `i < j` with positive multiplicity.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for i in 0..self.k {
            for j in i + 1..self.k {
                let m = self.mult(i, j);
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    pub fn source(&self) -> Option<&ReducedSource> {
        self.source.as_ref()
    }

    /// Density of the pair `(i, j)` when built from a graph.
    pub fn density(&self, i: usize, j: usize) -> Option<Rational> {
        self.source.as_ref().map(|s| s.densities[i * self.k + j])
    }

    /// `k i j mult` text format: a `k <k>` line then one line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "k {}", self.k).unwrap();
        for (i, j, m) in self.edges() {
            writeln!(out, "{i} {j} {m}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut r: Option<ReducedMultigraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: String| Error::Parse { line: lineno, msg };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match (&mut r, toks.as_slice()) {
                (None, ["k", k]) => {
                    let k = k.parse().map_err(|_| bad("bad cluster count".into()))?;
                    r = Some(ReducedMultigraph::new(k));
                }
                (None, _) => return Err(bad("expected header 'k <count>'".into())),
                (Some(rm), [i, j, m]) => {
                    let parse = |t: &str| t.parse::<usize>().map_err(|_| bad(format!("bad number '{t}'")));
                    let (i, j, m) = (parse(i)?, parse(j)?, parse(m)?);
                    if m > 2 {
                        return Err(bad(format!("multiplicity {m} exceeds 2")));
                    }
                    if i < rm.k && j < rm.k && rm.mult(i, j) != 0 {
                        return Err(bad(format!("pair ({i}, {j}) listed twice")));
                    }
                    rm.set(i, j, m as u8).map_err(|e| bad(e.to_string()))?;
                }
                (Some(_), _) => return Err(bad("expected 'i j mult'".into())),
            }
        }
        r.ok_or_else(|| Error::Parse { line: 0, msg: "missing header 'k <count>'".into() })
    }

    /// Full multiplicity matrix as CSV (no header).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.k {
            let row: Vec<String> = (0..self.k).map(|j| self.mult(i, j).to_string()).collect();
            writeln!(out, "{}", row.join(",")).unwrap();
        }
        out
    }

    /// Pair densities as CSV with `p/q` entries, when available.
    pub fn densities_csv(&self) -> Option<String> {
        let s = self.source.as_ref()?;
        let mut out = String::new();
        for i in 0..self.k {
            let row: Vec<String> = (0..self.k).map(|j| format_ratio(&s.densities[i * self.k + j])).collect();
            writeln!(out, "{}", row.join(",")).unwrap();
        }
        Some(out)
    }
}

/// Reduced multigraph of a partition: two edges where the density is at
/// least `1/2 + β`, one where it is at least `β`, none otherwise.
pub fn build_reduced(g: &Graph, p: &Partition, rp: &RegularityParams) -> Result<ReducedMultigraph> {
    if p.n() != g.n() {
        return input(format!("partition covers {} vertices but the graph has {}", p.n(), g.n()));
    }
    p.validate()?;
    let k = p.k();
    let half = Rational::new(1, 2);
    let mut r = ReducedMultigraph::new(k);
    let mut densities = vec![Rational::from_integer(0); k * k];
    for i in 0..k {
        for j in i + 1..k {
            let d = g.pair_density(p.cluster(i), p.cluster(j))?.value();
            densities[i * k + j] = d;
            densities[j * k + i] = d;
            let m = if d >= half + rp.beta {
                2
            } else if d >= rp.beta {
                1
            } else {
                0
            };
            r.set(i, j, m)?;
        }
    }
    r.source = Some(ReducedSource { partition: p.clone(), params: *rp, densities });
    Ok(r)
}

/// Minimum multiplicity-weighted degree (0 for the empty multigraph).
pub fn reduced_min_degree(r: &ReducedMultigraph) -> usize {
    (0..r.k()).map(|i| r.degree(i)).min().unwrap_or(0)
}
