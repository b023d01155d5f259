mod common;

use common::{arb_bits, arb_connected, arb_graph};
use cyclespace::cellular::{
    boundary_sum, is_cellular_2cycle, is_cellular_2cycle_by_parity, torus, two_cycle_kernel,
};
use cyclespace::cycles::CycleSpace;
use cyclespace::{BitVector, CellComplex, Graph};
use proptest::prelude::*;

fn combine(rows: &[BitVector], width: usize, bits: &BitVector) -> BitVector {
    let mut out = BitVector::zeros(width);
    for (i, r) in rows.iter().enumerate() {
        if bits.get(i % bits.len()) {
            out += r;
        }
    }
    out
}

fn arb_tree(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (2..=max_vertices, prop::collection::vec(any::<usize>(), 16)).prop_map(|(v, parents)| {
        Graph::new(v, (1..v).map(|i| (parents[i % 16] % i, i)).collect::<Vec<_>>()).expect("tree edges")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sums_of_two_cycles_are_two_cycles(g in arb_connected(5), deleted in any::<bool>(), bits in arb_bits(64)) {
        let cc = if deleted { CellComplex::deleted(&g) } else { CellComplex::full(&g) };
        let ker = two_cycle_kernel(&cc);
        let c = combine(ker.rows(), cc.cell_count(), &bits);
        prop_assert!(is_cellular_2cycle(&cc, &c));
        prop_assert!(boundary_sum(&cc, &cc.ambient(), &c).unwrap().is_zero());
    }

    #[test]
    fn section_test_matches_parity_test(g in arb_graph(5), deleted in any::<bool>(), bits in arb_bits(100)) {
        let cc = if deleted { CellComplex::deleted(&g) } else { CellComplex::full(&g) };
        let c = BitVector::from_indices(cc.cell_count(), (0..cc.cell_count()).filter(|&i| bits.get(i % 100)));
        prop_assert_eq!(is_cellular_2cycle(&cc, &c), is_cellular_2cycle_by_parity(&cc, &c));
        let zero_boundary = boundary_sum(&cc, &cc.ambient(), &c).unwrap().is_zero();
        prop_assert_eq!(is_cellular_2cycle(&cc, &c), zero_boundary);
    }

    #[test]
    fn trees_carry_no_two_cycles(t in arb_tree(7)) {
        prop_assert_eq!(two_cycle_kernel(&CellComplex::full(&t)).row_count(), 0);
        prop_assert_eq!(two_cycle_kernel(&CellComplex::deleted(&t)).row_count(), 0);
    }

    #[test]
    fn tori_of_cycles_are_two_cycles(g in arb_connected(6), a in arb_bits(16), b in arb_bits(16)) {
        let space = CycleSpace::new(&g);
        let d = space.dimension();
        let pick = |bits: &BitVector| space.recombine(&BitVector::from_indices(d, (0..d).filter(|&i| bits.get(i % 16)))).unwrap();
        let cc = CellComplex::full(&g);
        let t = torus(&cc, &pick(&a), &pick(&b)).unwrap();
        prop_assert!(is_cellular_2cycle(&cc, &t));
    }
}
