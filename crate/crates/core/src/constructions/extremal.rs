use crate::error::{input, Result};
use crate::graph::{Graph, GraphBuilder};

/// Independent set of size `n/r + 1` on vertices `0..n/r+1`; every other
/// vertex is joined to everything. `δ = (1 - 1/r)n - 1`, no `K_r`-factor.
pub fn hs_extremal(n: usize, r: usize) -> Result<Graph> {
    if r < 2 || n % r != 0 || n < 2 * r {
        return input(format!("hs_extremal needs r >= 2, r | n and n >= 2r (n = {n}, r = {r})"));
    }
    let ind = n / r + 1;
    let mut b = GraphBuilder::new(n);
    for u in ind..n {
        for v in 0..n {
            if v != u {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// `K_{n/2+1} ∪ K_{n/2-1}`, the larger clique on the low indices.
pub fn two_cliques(n: usize) -> Result<Graph> {
    if n % 4 != 0 || n == 0 {
        return input(format!("two_cliques needs 4 | n, n > 0 (n = {n})"));
    }
    Ok(Graph::complete(n / 2 + 1).disjoint_union(&Graph::complete(n / 2 - 1)))
}

/// `tf` (triangle-free, `2n/r + 1` vertices) plus `(1 - 2/r)n - 1` universal
/// vertices. Every `K_r` meets `tf` in at most two vertices, so `n/r`
/// disjoint copies cannot cover it.
pub fn bottleneck_extremal(n: usize, r: usize, tf: &Graph) -> Result<Graph> {
    if r < 4 || n % r != 0 {
        return input(format!("bottleneck_extremal needs r >= 4 and r | n (n = {n}, r = {r})"));
    }
    let want = 2 * n / r + 1;
    if tf.n() != want {
        return input(format!("triangle-free part must have {want} vertices, got {}", tf.n()));
    }
    if !tf.is_triangle_free() {
        return input("supplied graph contains a triangle");
    }
    let mut b = GraphBuilder::new(n);
    for (u, v) in tf.edges() {
        b.add_edge(u, v)?;
    }
    for u in want..n {
        for v in 0..n {
            if v != u && !b.has_edge(u, v) {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{enumerate_kr, has_kr_factor, independence_number, Guards};

    #[test]
    fn hs_examples() {
        let gd = Guards::default();
        for (n, r, delta, alpha) in [(8, 4, 5, 3), (6, 3, 3, 3), (4, 2, 1, 3)] {
            let g = hs_extremal(n, r).unwrap();
            assert_eq!(g.min_degree().unwrap(), delta, "({n},{r})");
            assert_eq!(independence_number(&g, &gd).unwrap(), alpha);
            assert!(!has_kr_factor(&g, r, &gd).unwrap().exists());
        }
        assert!(hs_extremal(9, 4).is_err());
    }

    #[test]
    fn two_cliques_examples() {
        let gd = Guards::default();
        let g = two_cliques(12).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(g.min_degree().unwrap(), 4);
        assert_eq!(independence_number(&g, &gd).unwrap(), 2);
        assert!(!has_kr_factor(&g, 3, &gd).unwrap().exists());
        assert!(!has_kr_factor(&g, 2, &gd).unwrap().exists());
        assert!(two_cliques(10).is_err());
    }

    #[test]
    fn bottleneck_examples() {
        let gd = Guards::default();
        let c9 = Graph::cycle(9).unwrap();
        let g = bottleneck_extremal(16, 4, &c9).unwrap();
        assert_eq!(g.n(), 16);
        assert!(g.min_degree().unwrap() >= 8);
        assert!(g.min_degree().unwrap() > 16 / 2 - 1);
        assert!(!has_kr_factor(&g, 4, &gd).unwrap().exists());
        for k in enumerate_kr(&g, 4) {
            assert!(k.iter().filter(|&v| v < 9).count() <= 2);
        }
        assert_eq!(
            independence_number(&g, &gd).unwrap(),
            independence_number(&c9, &gd).unwrap().max(1)
        );
        let g5 = bottleneck_extremal(20, 5, &c9).unwrap();
        assert!(!has_kr_factor(&g5, 5, &gd).unwrap().exists());
        assert!(bottleneck_extremal(16, 4, &Graph::cycle(8).unwrap()).is_err());
        let mut with_triangle = Graph::cycle(9).unwrap().edges();
        with_triangle.push((0, 2));
        let bad = Graph::from_edges(9, &with_triangle).unwrap();
        assert!(bottleneck_extremal(16, 4, &bad).is_err());
    }
}
