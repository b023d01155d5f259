//! JSON census reports. Keys are emitted in sorted order, so reports are
//! byte-stable for a given input.

use cyclespace::cellular::{symmetric_two_cycles, two_cycle_kernel};
use cyclespace::cycles::CycleSpace;
use cyclespace::homology::{h1_mod_boundaries, symmetric_h1, BoundarySpace};
use cyclespace::hyper::Hypergraph2;
use cyclespace::{CellComplex, Graph, PowerOfTwo, ProductGraph};
use serde_json::{json, Map, Value};

/// `{"exponent": k, "value": "2^k"}`, plus `"decimal"` when `k <= 64`.
pub fn count_json(exponent: usize) -> Value {
    let p = PowerOfTwo::new(exponent);
    let mut m = Map::new();
    m.insert("exponent".into(), json!(exponent));
    m.insert("value".into(), json!(p.to_string()));
    if exponent <= 64 {
        m.insert("decimal".into(), json!(p.decimal()));
    }
    Value::Object(m)
}

fn dims_and_counts(dims: &[(&str, usize)]) -> (Value, Value) {
    let mut d = Map::new();
    let mut c = Map::new();
    for &(k, v) in dims {
        d.insert(k.into(), json!(v));
        c.insert(k.into(), count_json(v));
    }
    (Value::Object(d), Value::Object(c))
}

fn subject(spec: &str, g: &Graph) -> Value {
    json!({
        "spec": spec,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "components": g.components().count,
    })
}

pub fn graph_report(spec: &str, g: &Graph) -> Value {
    let (dimensions, counts) = dims_and_counts(&[("cycles", CycleSpace::new(g).dimension())]);
    json!({
        "kind": "graph",
        "subject": subject(spec, g),
        "dimensions": dimensions,
        "counts": counts,
    })
}

pub fn square_report(spec: &str, g: &Graph, deleted: bool) -> Value {
    let amb = if deleted {
        ProductGraph::deleted_square(g)
    } else {
        ProductGraph::square(g)
    };
    let space = BoundarySpace::new(&amb);
    let h = h1_mod_boundaries(&space);
    let sym = symmetric_h1(&space).expect("squares carry the swap");
    let (dimensions, counts) = dims_and_counts(&[
        ("cycles", h.cycle_dimension),
        ("mod_boundaries", h.dimension()),
        ("symmetric_cycles", sym.symmetric_cycles),
        ("symmetric_mod_symmetrized_boundaries", sym.quotient),
    ]);
    json!({
        "kind": if deleted { "deleted-square" } else { "square" },
        "subject": subject(spec, g),
        "product": {
            "vertices": amb.vertex_count(),
            "edges": amb.edge_count(),
            "components": amb.graph().components().count,
        },
        "boundaries": {
            "generators": space.cells().len(),
            "rank": space.rank(),
            "dependencies": space.dependencies().row_count(),
            "symmetrized_rank": sym.symmetrized_boundary_rank,
            "symmetric_part_rank": sym.symmetric_boundaries,
        },
        "dimensions": dimensions,
        "counts": counts,
    })
}

pub fn cells_report(spec: &str, g: &Graph, deleted: bool) -> Value {
    let cc = if deleted {
        CellComplex::deleted(g)
    } else {
        CellComplex::full(g)
    };
    let kernel = two_cycle_kernel(&cc).row_count();
    let sym = symmetric_two_cycles(&cc);
    let (dimensions, counts) = dims_and_counts(&[
        ("two_cycles", kernel),
        ("symmetric_two_cycles", sym.symmetric),
        ("symmetrized_tori", sym.symmetrized_tori),
    ]);
    json!({
        "kind": if deleted { "deleted-cells" } else { "cells" },
        "subject": subject(spec, g),
        "cells": cc.cell_count(),
        "first_betti": CycleSpace::new(g).dimension(),
        "dimensions": dimensions,
        "counts": counts,
    })
}

pub fn hypergraph_report(source: &str, h: &Hypergraph2) -> Value {
    let p = h.betti_profile();
    let (dimensions, counts) = dims_and_counts(&[("two_cycles", p.b2), ("one_cycles_mod_faces", p.b1)]);
    json!({
        "kind": "hypergraph",
        "subject": {
            "source": source,
            "vertices": p.vertices,
            "edges": p.edges,
            "faces": p.faces,
        },
        "betti": { "b0": p.b0, "b1": p.b1, "b2": p.b2 },
        "euler_characteristic": p.vertices as i64 - p.edges as i64 + p.faces as i64,
        "euler_identity_holds": p.euler_holds(),
        "dimensions": dimensions,
        "counts": counts,
    })
}
