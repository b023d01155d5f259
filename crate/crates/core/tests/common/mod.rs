#![allow(dead_code)]

use cyclespace::{BitVector, Graph};
use proptest::prelude::*;

/// The graph on `v` vertices whose edges are the set bits of `bits` over
/// the pairs `(a, b)`, `a < b`, in lexicographic order.
pub fn graph_from_bits(v: usize, bits: u64) -> Graph {
    let pairs = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b)));
    let edges: Vec<_> = pairs.enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, p)| p).collect();
    Graph::new(v, edges).expect("simple edges")
}

pub fn arb_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices, any::<u64>()).prop_map(|(v, bits)| graph_from_bits(v, bits))
}

pub fn arb_connected(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (2..=max_vertices, any::<u64>(), prop::collection::vec(any::<usize>(), 16)).prop_map(|(v, bits, parents)| {
        let mut edges: Vec<(usize, usize)> = (1..v).map(|i| (parents[i % 16] % i, i)).collect();
        let extra = graph_from_bits(v, bits);
        for &e in extra.edges() {
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        Graph::new(v, edges).expect("simple edges")
    })
}

pub fn arb_bits(len: usize) -> impl Strategy<Value = BitVector> {
    prop::collection::vec(any::<bool>(), len).prop_map(|b| BitVector::from_bools(&b))
}
