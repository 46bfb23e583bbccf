//! Orientability via a maximal tree and the parity of minus signatures on
//! fundamental circuits, plus normalization of orientable GOS's to all-plus form.

use std::collections::VecDeque;

use thiserror::Error;

use crate::gos::{Gos, Sign, VertexId};
use crate::util::DisjointSets;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientabilityError {
    #[error("surface is not orientable")]
    NotOrientable,
    #[error("edge {0} is not in the complement of the tree")]
    NotAComplementEdge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A maximal tree of a GOS, rooted at `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub root: VertexId,
    /// Tree edge indices in discovery order.
    pub tree: Vec<usize>,
    /// Edges not in the tree, ascending.
    pub complement: Vec<usize>,
    /// For each vertex, the tree edge to its parent (None at the root).
    parent_edge: Vec<Option<usize>>,
    depth: Vec<usize>,
}

impl SpanningTree {
    pub fn contains(&self, edge: usize) -> bool {
        self.complement.binary_search(&edge).is_err()
    }

    fn parent(&self, g: &Gos, v: VertexId) -> Option<(VertexId, usize)> {
        self.parent_edge[v.index()].map(|e| {
            let (a, b) = g.edge_endpoints(e);
            (if a == v { b } else { a }, e)
        })
    }

    /// Builds the rooted tree from an arbitrary set of `V - 1` tree edges.
    fn from_edges(g: &Gos, root: VertexId, in_tree: &[bool]) -> SpanningTree {
        let n = g.vertex_count();
        let mut parent_edge = vec![None; n];
        let mut depth = vec![0; n];
        let mut visited = vec![false; n];
        let mut tree = Vec::with_capacity(n.saturating_sub(1));
        let mut queue = VecDeque::from([root]);
        visited[root.index()] = true;
        while let Some(v) = queue.pop_front() {
            for s in g.stubs(v) {
                let e = g.edge_index_of(s);
                if !in_tree[e] {
                    continue;
                }
                let u = g.vertex_of(g.partner(s));
                if !visited[u.index()] {
                    visited[u.index()] = true;
                    parent_edge[u.index()] = Some(e);
                    depth[u.index()] = depth[v.index()] + 1;
                    tree.push(e);
                    queue.push_back(u);
                }
            }
        }
        let complement = (0..g.edge_count()).filter(|&e| !in_tree[e]).collect();
        SpanningTree {
            root,
            tree,
            complement,
            parent_edge,
            depth,
        }
    }
}

/// Breadth-first maximal tree from vertex 1, scanning stubs in increasing label order.
pub fn spanning_tree(g: &Gos) -> SpanningTree {
    let mut in_tree = vec![false; g.edge_count()];
    let mut visited = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([VertexId(0)]);
    visited[0] = true;
    while let Some(v) = queue.pop_front() {
        for s in g.stubs(v) {
            let u = g.vertex_of(g.partner(s));
            if !visited[u.index()] {
                visited[u.index()] = true;
                in_tree[g.edge_index_of(s)] = true;
                queue.push_back(u);
            }
        }
    }
    SpanningTree::from_edges(g, VertexId(0), &in_tree)
}

/// Kruskal-style maximal tree taking edges greedily in `order`.
pub fn spanning_tree_from_order(g: &Gos, order: &[usize], root: VertexId) -> SpanningTree {
    let mut dsu = DisjointSets::new(g.vertex_count());
    let mut in_tree = vec![false; g.edge_count()];
    for &e in order {
        let (a, b) = g.edge_endpoints(e);
        if dsu.union(a.index(), b.index()) {
            in_tree[e] = true;
        }
    }
    SpanningTree::from_edges(g, root, &in_tree)
}

/// Parity of the minus signatures on the circuit closed by complement edge `edge`.
pub fn cycle_parity(g: &Gos, t: &SpanningTree, edge: usize) -> Result<Parity, OrientabilityError> {
    if t.contains(edge) {
        return Err(OrientabilityError::NotAComplementEdge(edge));
    }
    let (mut a, mut b) = g.edge_endpoints(edge);
    let mut minus = g.edge(edge).sign.is_minus() as usize;
    while a != b {
        let (lower, other) = if t.depth[a.index()] >= t.depth[b.index()] { (a, b) } else { (b, a) };
        let (up, e) = t.parent(g, lower).expect("non-root vertex has a parent");
        minus += g.edge(e).sign.is_minus() as usize;
        a = up;
        b = other;
    }
    Ok(if minus % 2 == 0 { Parity::Even } else { Parity::Odd })
}

/// Propagates a ±1 colouring down the tree so that each tree edge's sign is the
/// product of its endpoint colours.
fn tree_colouring(g: &Gos, t: &SpanningTree) -> Vec<Sign> {
    let mut colour = vec![Sign::Plus; g.vertex_count()];
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|v| t.depth[v.index()]);
    for v in order {
        if let Some((p, e)) = t.parent(g, v) {
            colour[v.index()] = colour[p.index()].times(g.edge(e).sign);
        }
    }
    colour
}

/// True iff every fundamental circuit of `t` carries an even number of minus edges.
pub fn is_orientable_with(g: &Gos, t: &SpanningTree) -> bool {
    let colour = tree_colouring(g, t);
    t.complement.iter().all(|&e| {
        let (a, b) = g.edge_endpoints(e);
        colour[a.index()].times(colour[b.index()]) == g.edge(e).sign
    })
}

pub fn is_orientable(g: &Gos) -> bool {
    is_orientable_with(g, &spanning_tree(g))
}

/// Turns vertices upside down until every edge is `+`.
///
/// Walking the default tree from its root, a vertex is flipped when the tree
/// path to it carries an odd number of minus edges. Returns the normalized GOS
/// and the flipped vertices in ascending order.
pub fn normalize_all_plus(g: &Gos) -> Result<(Gos, Vec<VertexId>), OrientabilityError> {
    let t = spanning_tree(g);
    if !is_orientable_with(g, &t) {
        return Err(OrientabilityError::NotOrientable);
    }
    let colour = tree_colouring(g, &t);
    let flips: Vec<VertexId> = g.vertices().filter(|v| colour[v.index()].is_minus()).collect();
    let out = g.flip_vertices(&flips);
    debug_assert!(out.is_all_plus());
    Ok((out, flips))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gos::GosData;
    use crate::random::{random_gos, RandomGos};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gos(vertices: &[&[u32]], edges: &[(u32, u32, Sign)]) -> Gos {
        Gos::from_data(&GosData {
            vertices: vertices.iter().map(|v| v.to_vec()).collect(),
            edges: edges.to_vec(),
        })
        .unwrap()
    }

    fn theta(signs: [Sign; 3]) -> Gos {
        gos(
            &[&[1, 2, 3], &[4, 5, 6]],
            &[(1, 4, signs[0]), (2, 5, signs[1]), (3, 6, signs[2])],
        )
    }

    #[test]
    fn loop_tree_is_empty() {
        let g = gos(&[&[1, 2]], &[(1, 2, Sign::Minus)]);
        let t = spanning_tree(&g);
        assert!(t.tree.is_empty());
        assert_eq!(t.complement, vec![0]);
        assert_eq!(cycle_parity(&g, &t, 0), Ok(Parity::Odd));
        assert!(!is_orientable(&g));
        assert_eq!(normalize_all_plus(&g), Err(OrientabilityError::NotOrientable));

        let plus = gos(&[&[1, 2]], &[(1, 2, Sign::Plus)]);
        assert_eq!(cycle_parity(&plus, &spanning_tree(&plus), 0), Ok(Parity::Even));
    }

    #[test]
    fn theta_tree_and_parity() {
        let g = theta([Sign::Plus, Sign::Plus, Sign::Minus]);
        let t = spanning_tree(&g);
        assert_eq!(t.tree, vec![0]);
        assert_eq!(t.complement, vec![1, 2]);
        assert_eq!(cycle_parity(&g, &t, 1), Ok(Parity::Even));
        assert_eq!(cycle_parity(&g, &t, 2), Ok(Parity::Odd));
        assert_eq!(cycle_parity(&g, &t, 0), Err(OrientabilityError::NotAComplementEdge(0)));
        assert!(!is_orientable(&g));
    }

    #[test]
    fn normalize_flips_minus_tree_edges() {
        let g = theta([Sign::Minus, Sign::Minus, Sign::Minus]);
        let (n, flips) = normalize_all_plus(&g).unwrap();
        assert_eq!(flips, vec![VertexId(1)]);
        assert!(n.is_all_plus());
        assert_eq!(g.flip_vertices(&flips), n);

        let plus = theta([Sign::Plus; 3]);
        assert_eq!(normalize_all_plus(&plus).unwrap(), (plus.clone(), vec![]));
    }

    fn any_gos(seed: u64) -> Gos {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_gos(&mut rng, &RandomGos { min_valency: 2, ..RandomGos::default() })
    }

    proptest! {
        #[test]
        fn independent_of_tree_choice(seed in any::<u64>()) {
            let g = any_gos(seed);
            let expected = is_orientable(&g);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
            for _ in 0..10 {
                let mut order: Vec<usize> = (0..g.edge_count()).collect();
                order.shuffle(&mut rng);
                let root = VertexId(rng.gen_range(0..g.vertex_count()) as u32);
                let t = spanning_tree_from_order(&g, &order, root);
                prop_assert_eq!(t.tree.len(), g.vertex_count() - 1);
                prop_assert_eq!(t.complement.len() as i64, g.rank());
                prop_assert_eq!(is_orientable_with(&g, &t), expected);
                let by_circuits = t.complement.iter()
                    .all(|&e| cycle_parity(&g, &t, e) == Ok(Parity::Even));
                prop_assert_eq!(by_circuits, expected);
            }
        }

        #[test]
        fn invariant_under_flips(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
            let g = any_gos(seed);
            let v = VertexId(pick.index(g.vertex_count()) as u32);
            prop_assert_eq!(is_orientable(&g.flip_vertex(v)), is_orientable(&g));
            prop_assert!(is_orientable(&g.with_signs(&vec![Sign::Plus; g.edge_count()])));
        }

        #[test]
        fn normalization_yields_all_plus(seed in any::<u64>()) {
            let g = any_gos(seed);
            match normalize_all_plus(&g) {
                Ok((n, flips)) => {
                    prop_assert!(n.is_all_plus());
                    prop_assert!(is_orientable(&n));
                    prop_assert_eq!(g.flip_vertices(&flips), n);
                }
                Err(e) => {
                    prop_assert_eq!(e, OrientabilityError::NotOrientable);
                    prop_assert!(!is_orientable(&g));
                }
            }
        }
    }

    use rand::Rng;
}
