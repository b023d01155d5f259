mod common;

use common::{arb_bits, arb_connected, arb_graph};
use cyclespace::cycles::{is_one_cycle, CycleSpace};
use cyclespace::{BitVector, Graph, NamedCycle, ProductGraph};
use proptest::prelude::*;

proptest! {
    #[test]
    fn deleted_square_sizes(g in arb_graph(7)) {
        let d = ProductGraph::deleted_square(&g);
        let v = g.vertex_count();
        prop_assert_eq!(d.vertex_count(), v * (v - 1));
        prop_assert_eq!(d.edge_count(), 2 * g.edge_count() * (v.max(2) - 2));
        let s = ProductGraph::square(&g);
        prop_assert_eq!(s.vertex_count(), v * v);
        prop_assert_eq!(s.edge_count(), 2 * g.edge_count() * v);
    }

    #[test]
    fn projections_are_additive(g in arb_connected(5), a in arb_bits(40), b in arb_bits(40)) {
        let sq = ProductGraph::square(&g);
        let space = CycleSpace::new(sq.graph());
        let d = space.dimension();
        let pick = |bits: &BitVector| space.recombine(&BitVector::from_indices(d, (0..d).filter(|&i| bits.get(i % 40)))).unwrap();
        let (x, y) = (pick(&a), pick(&b));
        let (xx, xy) = sq.projections(&x).unwrap();
        let (yx, yy) = sq.projections(&y).unwrap();
        let (sx, sy) = sq.projections(&(&x + &y)).unwrap();
        prop_assert_eq!(sx, &xx + &yx);
        prop_assert_eq!(sy, &xy + &yy);
        prop_assert!(is_one_cycle(g_ref(&sq), &xx));
    }

    #[test]
    fn swap_is_an_involutive_automorphism(g in arb_graph(6), deleted in any::<bool>()) {
        let sq = if deleted { ProductGraph::deleted_square(&g) } else { ProductGraph::square(&g) };
        let perm = sq.swap_permutation().unwrap().to_vec();
        let h = sq.graph();
        for e in 0..h.edge_count() {
            prop_assert_eq!(perm[perm[e]], e);
            let (u, v) = h.edge(e);
            let (su, sv) = (sq.swap_vertex(u).unwrap(), sq.swap_vertex(v).unwrap());
            prop_assert_eq!(h.edge_index(su, sv), Some(perm[e]));
        }
    }
}

fn g_ref(sq: &ProductGraph) -> &Graph {
    sq.left()
}

#[test]
fn named_cycles_are_cycles() {
    for n in 3..=5 {
        let g = Graph::complete(n).unwrap();
        let sq = ProductGraph::square(&g);
        let cyc: Vec<usize> = (0..n).collect();
        let kinds = [
            NamedCycle::Left { vertex: 0, cycle: cyc.clone() },
            NamedCycle::Right { cycle: cyc.clone(), vertex: n - 1 },
            NamedCycle::Diagonal(cyc.clone()),
            NamedCycle::OffDiagonal(cyc.clone()),
            NamedCycle::Antidiagonal(cyc.clone()),
            NamedCycle::Boundary { sigma: 0, tau: g.edge_count() - 1 },
        ];
        for kind in &kinds {
            let c = sq.named_cycle(kind).unwrap();
            assert!(is_one_cycle(sq.graph(), &c), "{kind:?} on K_{n}");
        }
    }
    let t = Graph::triod();
    let sq = ProductGraph::square(&t);
    let c = sq.named_cycle(&NamedCycle::Triodic { center: 3, leaves: [0, 1, 2] }).unwrap();
    assert!(is_one_cycle(sq.graph(), &c));
}

#[test]
fn deleted_square_sizes_of_named_graphs() {
    let k33 = ProductGraph::deleted_square(&Graph::complete_bipartite(3, 3).unwrap());
    assert_eq!((k33.vertex_count(), k33.edge_count()), (30, 72));
    let k5 = ProductGraph::deleted_square(&Graph::complete(5).unwrap());
    assert_eq!((k5.vertex_count(), k5.edge_count()), (20, 60));
}
