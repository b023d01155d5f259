use cyclespace::{BitMatrix, BitVector};
use proptest::prelude::*;

fn arb_matrix() -> impl Strategy<Value = BitMatrix> {
    (1usize..=12, 0usize..=10).prop_flat_map(|(cols, rows)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), cols), rows).prop_map(move |rs| {
            BitMatrix::from_rows(cols, rs.iter().map(|r| BitVector::from_bools(r)).collect()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn kernel_is_annihilated_and_complements_rank(m in arb_matrix()) {
        let k = m.kernel_basis();
        for row in k.rows() {
            prop_assert!(m.mul_vec(row).unwrap().is_zero());
        }
        prop_assert_eq!(m.rank() + k.row_count(), m.col_count());
        prop_assert_eq!(k.rank(), k.row_count());
    }

    #[test]
    fn left_kernel_combines_to_zero(m in arb_matrix()) {
        let l = m.left_kernel();
        for row in l.rows() {
            prop_assert!(m.combine(row).unwrap().is_zero());
        }
        prop_assert_eq!(m.rank() + l.row_count(), m.row_count());
    }

    #[test]
    fn span_solutions_recombine(m in arb_matrix(), coeff_bits in any::<u16>(), noise in any::<u16>()) {
        let rows = m.row_count();
        let coeffs = BitVector::from_indices(rows, (0..rows).filter(|i| coeff_bits >> i & 1 == 1));
        let target = m.combine(&coeffs).unwrap();
        let c = m.solve_in_span(&target).unwrap().expect("a combination of rows is in the span");
        prop_assert_eq!(m.combine(&c).unwrap(), target);
        let other = BitVector::from_indices(m.col_count(), (0..m.col_count()).filter(|i| noise >> i & 1 == 1));
        if let Some(c) = m.solve_in_span(&other).unwrap() {
            prop_assert_eq!(m.combine(&c).unwrap(), other);
        }
    }

    #[test]
    fn rank_survives_row_operations(m in arb_matrix(), i in any::<usize>(), j in any::<usize>()) {
        let rank = m.rank();
        let mut rows = m.rows().to_vec();
        if rows.len() >= 2 {
            let (i, j) = (i % rows.len(), j % rows.len());
            rows.swap(i, j);
            prop_assert_eq!(BitMatrix::from_rows(m.col_count(), rows.clone()).unwrap().rank(), rank);
            if i != j {
                let add = rows[j].clone();
                rows[i].xor_with(&add);
                prop_assert_eq!(BitMatrix::from_rows(m.col_count(), rows).unwrap().rank(), rank);
            }
        }
    }
}
