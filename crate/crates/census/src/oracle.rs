//! Exhaustive oracles: counts by visiting every subset, and small graphs
//! up to isomorphism.

use std::collections::BTreeSet;

use cyclespace::hyper::Hypergraph2;
use cyclespace::{BitVector, CellComplex, Graph, ProductGraph};

/// Visits all `2^k` subsets of `k` generators in Gray-code order, XORing
/// one generator per step, and counts the states where the running sum is
/// zero.
fn gray_zero_count(generators: &[BitVector], width: usize) -> u64 {
    assert!(generators.len() < 40, "too many generators to enumerate");
    let mut acc = BitVector::zeros(width);
    let mut zeros = 1;
    for step in 1u64..(1 << generators.len()) {
        acc.xor_with(&generators[step.trailing_zeros() as usize]);
        if acc.is_zero() {
            zeros += 1;
        }
    }
    zeros
}

/// Number of edge subsets meeting every vertex evenly.
pub fn brute_force_one_cycles(g: &Graph) -> u64 {
    let gens: Vec<BitVector> = g
        .edges()
        .iter()
        .map(|&(u, v)| BitVector::from_indices(g.vertex_count(), [u, v]))
        .collect();
    gray_zero_count(&gens, g.vertex_count())
}

/// Number of cell subsets whose boundary sum vanishes.
pub fn brute_force_two_cycles(cc: &CellComplex) -> u64 {
    let ambient: ProductGraph = cc.ambient();
    let gens: Vec<BitVector> = (0..cc.cell_count())
        .map(|i| {
            BitVector::from_indices(
                ambient.edge_count(),
                cc.cell_boundary_edges(&ambient, i).expect("cell of the complex"),
            )
        })
        .collect();
    gray_zero_count(&gens, ambient.edge_count())
}

/// Number of face subsets covering every vertex pair evenly.
pub fn brute_force_hyper_two_cycles(h: &Hypergraph2) -> u64 {
    let n = h.vertex_count();
    let gens: Vec<BitVector> = h
        .faces()
        .iter()
        .map(|&[a, b, c]| BitVector::from_indices(n * n, [a * n + b, a * n + c, b * n + c]))
        .collect();
    gray_zero_count(&gens, n * n)
}

type Key = Vec<(usize, Vec<(u8, u8)>)>;

fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..k as u8).collect();
    fn heap(m: usize, p: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if m <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..m {
            heap(m - 1, p, out);
            let j = if m.is_multiple_of(2) { i } else { 0 };
            p.swap(j, m - 1);
        }
    }
    heap(k, &mut p, &mut out);
    out
}

/// Isomorphism class key: the sorted list of canonical component keys,
/// each the lexicographically least relabelled edge list.
fn canonical_key(g: &Graph, perms: &[Vec<Vec<u8>>]) -> Key {
    let comps = g.components();
    let mut key = Vec::new();
    for c in 0..comps.count {
        let verts: Vec<usize> = (0..g.vertex_count()).filter(|&v| comps.label[v] == c).collect();
        let local = |v: usize| verts.iter().position(|&w| w == v).expect("same component");
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|&&(u, _)| comps.label[u] == c)
            .map(|&(u, v)| (local(u), local(v)))
            .collect();
        let best = perms[verts.len()]
            .iter()
            .map(|p| {
                let mut e: Vec<(u8, u8)> = edges
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (p[u], p[v]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .expect("at least one permutation");
        key.push((verts.len(), best));
    }
    key.sort();
    key
}

/// Every graph without isolated vertices having at most `max_vertices`
/// vertices and `max_edges` edges, one per isomorphism class, grown edge
/// by edge. Components may have at most 8 vertices.
pub fn graphs_up_to_isomorphism(max_vertices: usize, max_edges: usize) -> Vec<Graph> {
    let perms: Vec<Vec<Vec<u8>>> = (0..=max_vertices.min(8)).map(permutations).collect();
    let mut level = vec![Graph::empty(0)];
    let mut out = Vec::new();
    for _ in 0..max_edges {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            let v = g.vertex_count();
            for j in 1..v + 2 {
                for i in 0..j {
                    // a new vertex is only ever the next unused label
                    if (i == v) != (j == v + 1) {
                        continue;
                    }
                    let size = (j + 1).max(v);
                    if size > max_vertices {
                        continue;
                    }
                    let mut edges = g.edges().to_vec();
                    if edges.contains(&(i, j)) {
                        continue;
                    }
                    edges.push((i, j));
                    let h = Graph::new(size, edges).expect("simple edge");
                    if largest_component(&h) > 8 {
                        continue;
                    }
                    if seen.insert(canonical_key(&h, &perms)) {
                        next.push(h);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

fn largest_component(g: &Graph) -> usize {
    let comps = g.components();
    (0..comps.count)
        .map(|c| comps.label.iter().filter(|&&l| l == c).count())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_known_graphs() {
        assert_eq!(brute_force_one_cycles(&Graph::complete(4).unwrap()), 8);
        assert_eq!(brute_force_one_cycles(&Graph::path(5).unwrap()), 1);
        assert_eq!(brute_force_two_cycles(&CellComplex::full(&Graph::complete(3).unwrap())), 2);
        assert_eq!(brute_force_hyper_two_cycles(&Hypergraph2::complete(4).unwrap()), 2);
    }

    #[test]
    fn isomorphism_class_counts() {
        // graphs without isolated vertices on at most 4 vertices, by edge count
        let gs = graphs_up_to_isomorphism(4, 6);
        let mut by_edges = [0usize; 7];
        for g in &gs {
            by_edges[g.edge_count()] += 1;
        }
        assert_eq!(by_edges, [0, 1, 2, 3, 2, 1, 1]);
        // all graphs on 5 vertices: 34, of which those without isolated
        // vertices on at most 5 vertices add up with the 4-vertex ones
        let five = graphs_up_to_isomorphism(5, 10);
        assert_eq!(five.len() + 1, 34);
    }
}
