//! Test-side reference implementations, written independently of the
//! library: subset enumeration, a tiling DP over vertex masks, a direct
//! reading of the multi-embedding conditions and a `K_r`-neighbourhood
//! enumerator.
#![allow(dead_code)]

use cliquefactor::constructions::Seed;
use cliquefactor::{Graph, ReducedMultigraph};
use rand::Rng;

pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | (1 << u))).collect()
}

/// Largest independent set by trying every subset.
pub fn brute_alpha(g: &Graph) -> usize {
    let adj = adjacency_masks(g);
    let n = g.n();
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if (0..n).all(|v| mask & (1 << v) == 0 || adj[v] & mask == 0) {
            best = size;
        }
    }
    best
}

/// Maximum number of vertices covered by disjoint `r`-cliques: `best[mask]`
/// either drops the lowest vertex of `mask` or covers it by an `r`-clique
/// inside `mask`.
pub fn brute_max_tiling_cover(g: &Graph, r: usize) -> usize {
    let n = g.n();
    let adj = adjacency_masks(g);
    let mut cliques_at: Vec<Vec<u32>> = vec![Vec::new(); n];
    fn grow(adj: &[u32], r: usize, clique: u32, cand: u32, out: &mut Vec<u32>) {
        if clique.count_ones() as usize == r {
            out.push(clique);
            return;
        }
        let mut c = cand;
        while c != 0 {
            let u = c.trailing_zeros();
            c &= c - 1;
            grow(adj, r, clique | (1 << u), c & adj[u as usize], out);
        }
    }
    for v in 0..n {
        let higher = adj[v] & !((1u32 << (v + 1)) - 1);
        grow(&adj, r, 1 << v, higher, &mut cliques_at[v]);
    }
    let full = 1usize << n;
    let mut best = vec![0u16; full];
    for mask in 1..full {
        let m = mask as u32;
        let v = m.trailing_zeros() as usize;
        let mut b = best[mask & (mask - 1)];
        for &c in &cliques_at[v] {
            if c & m == c {
                b = b.max(best[(m & !c) as usize] + r as u16);
            }
        }
        best[mask] = b;
    }
    best[full - 1] as usize
}

/// Violated conditions (ascending) of the multi-embedding definition for
/// `assign: V(H) → V(R)`.
pub fn brute_conditions(h: &Graph, rm: &ReducedMultigraph, assign: &[usize]) -> Vec<u8> {
    let n = h.n();
    let k = rm.k();
    let fiber = |i: usize| -> Vec<usize> { (0..n).filter(|&a| assign[a] == i).collect() };
    let mut bad = [false; 5];
    for i in 0..k {
        let f = fiber(i);
        let mut edges = 0;
        for x in 0..f.len() {
            for y in x + 1..f.len() {
                if h.has_edge(f[x], f[y]) {
                    edges += 1;
                }
            }
        }
        let shape_ok = match f.len() {
            0 | 1 => true,
            2 => edges == 1,
            3 => edges == 2,
            _ => false,
        };
        if !shape_ok {
            bad[1] = true;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if h.has_edge(u, v) && assign[u] != assign[v] && rm.mult(assign[u], assign[v]) == 0 {
                bad[2] = true;
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let (fi, fj) = (fiber(i), fiber(j));
            let connected = fi.iter().any(|&a| fj.iter().any(|&b| h.has_edge(a, b)));
            if fi.len() >= 2 && fj.len() >= 2 && connected && rm.mult(i, j) != 2 {
                bad[3] = true;
            }
            let joint = fj.iter().filter(|&&b| fi.iter().any(|&a| h.has_edge(a, b))).count();
            if joint > 2 {
                bad[4] = true;
            }
        }
    }
    (1..=4).filter(|&c| bad[c as usize]).collect()
}

/// `Υ_r(v)`: the union of all cluster sets `C ∋ v` that carry a `K_r`
/// multi-embedding, i.e. `C` spans a clique of `R` and contains a
/// double-edge clique `D` with `|C| + |D| = r`.
pub fn brute_upsilon(rm: &ReducedMultigraph, r: usize, v: usize) -> Vec<bool> {
    let k = rm.k();
    let mut out = vec![false; k];
    for mask in 0u32..(1 << k) {
        if mask & (1 << v) == 0 {
            continue;
        }
        let c: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
        if c.len() > r || !pairs(&c).all(|(a, b)| rm.mult(a, b) >= 1) {
            continue;
        }
        let need = r - c.len();
        if need > c.len() {
            continue;
        }
        let feasible = (0u32..(1 << c.len())).any(|sub| {
            let d: Vec<usize> = (0..c.len()).filter(|&x| sub & (1 << x) != 0).map(|x| c[x]).collect();
            d.len() == need && pairs(&d).all(|(a, b)| rm.mult(a, b) == 2)
        });
        if feasible {
            for &i in &c {
                out[i] = true;
            }
        }
    }
    out
}

fn pairs(c: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..c.len()).flat_map(move |x| (x + 1..c.len()).map(move |y| (c[x], c[y])))
}

/// Random multigraph on `k` clusters whose multiplicity degrees all exceed
/// `(1 − 2/r)·2k`; `None` if rejection sampling gives up.
pub fn dense_multigraph(k: usize, r: usize, seed: Seed) -> Option<ReducedMultigraph> {
    let mut rng = seed.rng();
    // deg > (1 − 2/r)·2k  ⟺  r·deg > 2k(r − 2)
    let ok = |rm: &ReducedMultigraph| (0..k).all(|i| r * rm.degree(i) > 2 * k * (r - 2));
    for _ in 0..200 {
        let p2: f64 = rng.random_range(0.5..1.0);
        let p1: f64 = rng.random_range(0.0..(1.0 - p2));
        let mut rm = ReducedMultigraph::new(k);
        for i in 0..k {
            for j in i + 1..k {
                let x: f64 = rng.random();
                let m = if x < p2 { 2 } else if x < p2 + p1 { 1 } else { 0 };
                rm.set(i, j, m).unwrap();
            }
        }
        if ok(&rm) {
            return Some(rm);
        }
    }
    None
}

/// All graphs on `n` labelled vertices, as edge masks over the pairs in
/// lexicographic order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..(1 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// One representative per isomorphism class, the lexicographically least
/// edge mask over all relabellings.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let code = |g: &Graph, p: &[usize]| -> u32 {
        let mut m = 0u32;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(p[u], p[v]) {
                    m |= 1 << bit;
                }
                bit += 1;
            }
        }
        m
    };
    let mut seen = std::collections::BTreeMap::new();
    for g in all_graphs(n) {
        let canon = perms.iter().map(|p| code(&g, p)).min().unwrap();
        seen.entry(canon).or_insert(g);
    }
    seen.into_values().collect()
}

/// Every multiplicity matrix on `k` clusters, or one per isomorphism
/// class when `classes` is set.
pub fn all_multigraphs(k: usize, classes: bool) -> Vec<ReducedMultigraph> {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    let build = |mut code: usize| {
        let mut rm = ReducedMultigraph::new(k);
        for &(u, v) in &pairs {
            rm.set(u, v, (code % 3) as u8).unwrap();
            code /= 3;
        }
        rm
    };
    let all: Vec<ReducedMultigraph> = (0..total).map(build).collect();
    if !classes {
        return all;
    }
    let perms = permutations(k);
    let key = |rm: &ReducedMultigraph, p: &[usize]| -> Vec<u8> { pairs.iter().map(|&(u, v)| rm.mult(p[u], p[v])).collect() };
    let mut seen = std::collections::BTreeMap::new();
    for rm in all {
        let canon = perms.iter().map(|p| key(&rm, p)).min().unwrap();
        seen.entry(canon).or_insert(rm);
    }
    seen.into_values().collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
