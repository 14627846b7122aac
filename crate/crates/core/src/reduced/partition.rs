use std::fmt::Write as _;

use rand::seq::SliceRandom;

use crate::constructions::Seed;
use crate::error::{input, Error, Result};
use crate::graph::{BitSet, VertexSet};

/// `V_0 ∪ V_1 ∪ … ∪ V_k` with an exceptional part `V_0` and equal-size
/// clusters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    exceptional: VertexSet,
    clusters: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, exceptional: VertexSet, clusters: Vec<VertexSet>) -> Result<Self> {
        let p = Partition { n, exceptional, clusters };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BitSet::new(self.n);
        for part in std::iter::once(&self.exceptional).chain(&self.clusters) {
            part.check_within(self.n)?;
            for v in part.iter() {
                if seen.contains(v) {
                    return input(format!("vertex {v} lies in two parts"));
                }
                seen.insert(v);
            }
        }
        if seen.count() != self.n {
            return input("partition does not cover every vertex");
        }
        if let Some(first) = self.clusters.first() {
            if first.is_empty() {
                return input("clusters must be nonempty");
            }
            if self.clusters.iter().any(|c| c.len() != first.len()) {
                return input("clusters have unequal sizes");
            }
        }
        Ok(())
    }

    /// Shuffles the vertices and cuts them into `k` clusters of size
    /// `⌊n/k⌋`; the remainder becomes `V_0`.
    pub fn random_equipartition(n: usize, k: usize, seed: Seed) -> Result<Self> {
        if k == 0 || k > n {
            return input(format!("cannot split {n} vertices into {k} nonempty clusters"));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut seed.rng());
        let m = n / k;
        let clusters = order[..k * m]
            .chunks(m)
            .map(|c| VertexSet::from_iter_dedup(c.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        let exceptional = VertexSet::from_iter_dedup(order[k * m..].iter().copied())?;
        Partition::new(n, exceptional, clusters)
    }

    /// Consecutive blocks `0..m`, `m..2m`, …; convenient for constructed
    /// instances whose clusters are laid out in order.
    pub fn blocks(n: usize, k: usize, m: usize) -> Result<Self> {
        if k * m > n {
            return input("blocks exceed the vertex count");
        }
        let clusters = (0..k).map(|i| VertexSet::range(i * m, (i + 1) * m)).collect();
        Partition::new(n, VertexSet::range(k * m, n), clusters)
    }

    /// Splits every cluster into `parts` equal pieces. Leftover vertices of
    /// each cluster move to the exceptional part. Cluster `i` becomes
    /// clusters `i*parts .. (i+1)*parts`.
    pub fn refine(&self, parts: usize) -> Result<Self> {
        let m = self.cluster_size();
        if parts == 0 || parts > m {
            return input(format!("cannot split clusters of size {m} into {parts} parts"));
        }
        let piece = m / parts;
        let mut clusters = Vec::with_capacity(self.clusters.len() * parts);
        let mut extra: Vec<usize> = self.exceptional.iter().collect();
        for c in &self.clusters {
            let s = c.as_slice();
            for p in 0..parts {
                clusters.push(VertexSet::from_sorted(s[p * piece..(p + 1) * piece].to_vec()));
            }
            extra.extend_from_slice(&s[parts * piece..]);
        }
        Partition::new(self.n, VertexSet::from_iter_dedup(extra)?, clusters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.clusters.len()
    }

    /// Common cluster size `m` (0 without clusters).
    pub fn cluster_size(&self) -> usize {
        self.clusters.first().map_or(0, |c| c.len())
    }

    pub fn exceptional(&self) -> &VertexSet {
        &self.exceptional
    }

    pub fn clusters(&self) -> &[VertexSet] {
        &self.clusters
    }

    pub fn cluster(&self, i: usize) -> &VertexSet {
        &self.clusters[i]
    }

    pub fn cluster_of(&self, v: usize) -> Option<usize> {
        self.clusters.iter().position(|c| c.contains(v))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.n).unwrap();
        writeln!(out, "exceptional: {}", self.exceptional).unwrap();
        for c in &self.clusters {
            writeln!(out, "cluster: {c}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut exceptional = None;
        let mut clusters = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::Parse { line: lineno, msg: msg.to_string() };
            let members = |rest: &str| -> Result<VertexSet> {
                let vs = rest
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| bad("bad vertex index")))
                    .collect::<Result<Vec<_>>>()?;
                VertexSet::from_iter_dedup(vs).map_err(|_| bad("repeated vertex"))
            };
            if let Some(rest) = line.strip_prefix("n ") {
                n = Some(rest.trim().parse::<usize>().map_err(|_| bad("bad vertex count"))?);
            } else if let Some(rest) = line.strip_prefix("exceptional:") {
                exceptional = Some(members(rest)?);
            } else if let Some(rest) = line.strip_prefix("cluster:") {
                clusters.push(members(rest)?);
            } else {
                return Err(bad("expected 'n', 'exceptional:' or 'cluster:'"));
            }
        }
        let exceptional = exceptional.unwrap_or_else(|| VertexSet::from_sorted(Vec::new()));
        let n = match n {
            Some(n) => n,
            None => exceptional.len() + clusters.iter().map(|c| c.len()).sum::<usize>(),
        };
        Partition::new(n, exceptional, clusters)
    }
}
