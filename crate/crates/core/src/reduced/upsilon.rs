use std::ops::ControlFlow;

use super::embedding::for_each_kr_shape;
use super::ReducedMultigraph;
use crate::error::{input, Result};
use crate::graph::BitSet;

/// `Υ_r(v)` and `Υ²_r(v)` for every cluster of one reduced multigraph.
///
/// `Υ_r(v)` holds the clusters `w` for which some `K_r` multi-embedding
/// loads both `v` and `w`; `Υ²_r(v)` is the union of `Υ_r(u)` over
/// `u ∈ Υ_r(v)`. One pass over all embedding shapes fills both tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpsilonTable {
    r: usize,
    first: Vec<BitSet>,
    second: Vec<BitSet>,
}

impl UpsilonTable {
    pub fn new(rm: &ReducedMultigraph, r: usize) -> Result<Self> {
        if r < 2 {
            return input("clique size must be at least 2");
        }
        let k = rm.k();
        let mut first = vec![BitSet::new(k); k];
        let _ = for_each_kr_shape(rm, r, &[], &mut |c, _| {
            let bits = BitSet::from_iter(k, c.iter().copied());
            for &u in c {
                first[u].union_with(&bits);
            }
            ControlFlow::Continue(())
        });
        let second = (0..k)
            .map(|v| {
                let mut acc = BitSet::new(k);
                for u in first[v].iter() {
                    acc.union_with(&first[u]);
                }
                acc
            })
            .collect();
        Ok(UpsilonTable { r, first, second })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn upsilon(&self, v: usize) -> &BitSet {
        &self.first[v]
    }

    pub fn upsilon2(&self, v: usize) -> &BitSet {
        &self.second[v]
    }
}

/// `Υ_r(v)` of a single cluster.
pub fn upsilon(rm: &ReducedMultigraph, r: usize, v: usize) -> Result<BitSet> {
    Ok(UpsilonTable::new(rm, r)?.upsilon(v).clone())
}

pub fn upsilon2(rm: &ReducedMultigraph, r: usize, v: usize) -> Result<BitSet> {
    Ok(UpsilonTable::new(rm, r)?.upsilon2(v).clone())
}
