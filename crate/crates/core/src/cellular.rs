//! Cellular 2-cycles in `K²` and `K^□`: the section test, boundary sums,
//! tori and the torus basis, spans of vertex-disjoint tori, symmetric
//! 2-cycles and symmetrized tori.

use crate::cycles::{is_one_cycle, CycleSpace};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, EchelonBasis};
use crate::graph::{EdgeSet, Graph, Involution};
use crate::product::{CellComplex, CellSet, ProductGraph, TildeCorrespondence};

/// Every row section `C_{σ,·}` and column section `C_{·,σ}` is a 1-cycle.
pub fn is_cellular_2cycle(cc: &CellComplex, c: &CellSet) -> bool {
    let k = cc.base();
    c.len() == cc.cell_count()
        && (0..k.edge_count()).all(|s| {
            is_one_cycle(k, &cc.row_section(c, s).expect("checked length"))
                && is_one_cycle(k, &cc.column_section(c, s).expect("checked length"))
        })
}

/// For every vertex `a` and edge `β`, an even number of edges `α ∋ a` with
/// `(α, β) ∈ C`, and likewise with `(β, α) ∈ C`.
pub fn is_cellular_2cycle_by_parity(cc: &CellComplex, c: &CellSet) -> bool {
    if c.len() != cc.cell_count() {
        return false;
    }
    let k = cc.base();
    let (v, e) = (k.vertex_count(), k.edge_count());
    let mut first = vec![false; v * e];
    let mut second = vec![false; v * e];
    for i in c.ones_iter() {
        let (alpha, beta) = cc.cell(i);
        let (p, q) = k.edge(alpha);
        first[p * e + beta] ^= true;
        first[q * e + beta] ^= true;
        let (p, q) = k.edge(beta);
        second[p * e + alpha] ^= true;
        second[q * e + alpha] ^= true;
    }
    !first.iter().chain(&second).any(|&odd| odd)
}

/// `Σ σ□τ` over the cells of `c`, in the complex's ambient graph.
pub fn boundary_sum(cc: &CellComplex, ambient: &ProductGraph, c: &CellSet) -> Result<EdgeSet> {
    if c.len() != cc.cell_count() {
        return Err(Error::DimensionMismatch {
            expected: cc.cell_count(),
            found: c.len(),
        });
    }
    let mut out = ambient.empty_edge_set();
    for i in c.ones_iter() {
        for e in cc.cell_boundary_edges(ambient, i)? {
            out.flip(e);
        }
    }
    Ok(out)
}

/// `{(σ, τ) : σ ∈ c1, τ ∈ c2}`.
pub fn torus(cc: &CellComplex, c1: &EdgeSet, c2: &EdgeSet) -> Result<CellSet> {
    let k = cc.base();
    for c in [c1, c2] {
        if c.len() != k.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: k.edge_count(),
                found: c.len(),
            });
        }
        if !is_one_cycle(k, c) {
            return Err(Error::NotACycle);
        }
    }
    let mut out = cc.empty_set();
    for s in c1.ones_iter() {
        for t in c2.ones_iter() {
            out.set(cc.cell_index(s, t).ok_or(Error::CellNotInComplex(s, t))?, true);
        }
    }
    Ok(out)
}

/// All 2-cycles of a complex, as the kernel of its boundary map.
pub fn two_cycle_kernel(cc: &CellComplex) -> BitMatrix {
    let ambient = cc.ambient();
    cc.boundary_matrix(&ambient)
        .expect("ambient is the complex's own square")
        .left_kernel()
}

/// The 2-cycles of `K²` with the basis `φ̂σ × φ̂τ` over ordered pairs of
/// non-tree edges; row `j * q + k` belongs to `(σ_j, σ_k)`.
#[derive(Clone, Debug)]
pub struct TwoCycleSpace {
    complex: CellComplex,
    non_tree: Vec<usize>,
    fundamental: Vec<EdgeSet>,
    basis: BitMatrix,
}

impl TwoCycleSpace {
    pub fn new(k: &Graph) -> Self {
        let complex = CellComplex::full(k);
        let cycles = CycleSpace::new(k);
        let non_tree = cycles.non_tree_edges().to_vec();
        let fundamental = cycles.basis().rows().to_vec();
        let mut basis = BitMatrix::new(complex.cell_count());
        for a in &fundamental {
            for b in &fundamental {
                basis.push(torus(&complex, a, b).expect("fundamental cycles")).expect("same length");
            }
        }
        Self {
            complex,
            non_tree,
            fundamental,
            basis,
        }
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn non_tree_edges(&self) -> &[usize] {
        &self.non_tree
    }

    /// `q = E - V + N`.
    pub fn first_betti(&self) -> usize {
        self.non_tree.len()
    }

    /// `q²`.
    pub fn dimension(&self) -> usize {
        self.basis.row_count()
    }

    /// Coefficients over the basis: the coefficient of `φ̂σ × φ̂τ` is whether
    /// `(σ, τ)` lies in `c`. Accepts cell sets of the full square or of the
    /// deleted product of the same graph.
    pub fn decompose(&self, source: &CellComplex, c: &CellSet) -> Result<BitVector> {
        if source.base() != self.complex.base() {
            return Err(Error::InvalidParameter("cell set of a different graph".into()));
        }
        let full = source.embed_into_full(c)?;
        let q = self.first_betti();
        let mut coeffs = BitVector::zeros(q * q);
        for (j, &s) in self.non_tree.iter().enumerate() {
            for (k, &t) in self.non_tree.iter().enumerate() {
                let idx = self.complex.cell_index(s, t).expect("full square");
                coeffs.set(j * q + k, full.get(idx));
            }
        }
        if self.basis.combine(&coeffs)? != full {
            return Err(Error::NotATwoCycle);
        }
        Ok(coeffs)
    }

    /// The torus terms `(σ, τ)` named by a coefficient vector.
    pub fn terms(&self, coeffs: &BitVector) -> Vec<(usize, usize)> {
        let q = self.first_betti();
        coeffs
            .ones_iter()
            .map(|i| (self.non_tree[i / q], self.non_tree[i % q]))
            .collect()
    }

    /// `φ̂σ × φ̂τ + φ̂τ × φ̂σ` for `σ < τ`: a basis of the symmetrized tori.
    pub fn symmetrized_tori(&self) -> BitMatrix {
        let q = self.first_betti();
        let mut m = BitMatrix::new(self.complex.cell_count());
        for j in 0..q {
            for k in j + 1..q {
                let row = self.basis.row(j * q + k) + self.basis.row(k * q + j);
                m.push(row).expect("same length");
            }
        }
        m
    }

    /// Splits a symmetric 2-cycle into symmetrized tori over pairs
    /// `{σ, τ}` of distinct non-tree edges with `(σ, τ) ∈ c`.
    pub fn decompose_symmetric(&self, source: &CellComplex, c: &CellSet) -> Result<Vec<(usize, usize)>> {
        let coeffs = self.decompose(source, c)?;
        let full = source.embed_into_full(c)?;
        if self.complex.swap(&full)? != full {
            return Err(Error::InvalidParameter("cell set is not symmetric".into()));
        }
        let q = self.first_betti();
        if (0..q).any(|j| coeffs.get(j * q + j)) {
            return Err(Error::InvalidParameter("a diagonal torus term has no symmetric partner".into()));
        }
        let pairs: Vec<(usize, usize)> = self
            .terms(&coeffs)
            .into_iter()
            .filter(|&(s, t)| s < t)
            .collect();
        let mut sum = self.complex.empty_set();
        for &(s, t) in &pairs {
            let j = self.non_tree.iter().position(|&e| e == s).expect("non-tree");
            let k = self.non_tree.iter().position(|&e| e == t).expect("non-tree");
            sum += &(self.basis.row(j * q + k) + self.basis.row(k * q + j));
        }
        debug_assert_eq!(sum, full);
        Ok(pairs)
    }

    /// The products `C_i × C_j` for a list of 1-cycles of `K`.
    pub fn products_of(&self, cycles: &[EdgeSet]) -> Result<BitMatrix> {
        let mut m = BitMatrix::new(self.complex.cell_count());
        for a in cycles {
            for b in cycles {
                m.push(torus(&self.complex, a, b)?)?;
            }
        }
        Ok(m)
    }

    pub fn fundamental_cycles(&self) -> &[EdgeSet] {
        &self.fundamental
    }
}

/// The tori `Q × R` over ordered pairs of vertex-disjoint simple cycles, as
/// cell sets of `K²`. Fails if `K` has more than `cap` simple cycles.
pub fn vertex_disjoint_torus_span(k: &Graph, cap: usize) -> Result<BitMatrix> {
    let cc = CellComplex::full(k);
    let cycles: Vec<(EdgeSet, Vec<bool>)> = k
        .simple_cycles(cap)?
        .into_iter()
        .map(|c| {
            let set = k.simple_cycle(&c).expect("enumerated cycle");
            let support = k.vertex_support(&set);
            (set, support)
        })
        .collect();
    let mut rows = Vec::new();
    for (q, qs) in &cycles {
        for (r, rs) in &cycles {
            if qs.iter().zip(rs).all(|(a, b)| !(a & b)) {
                rows.push(torus(&cc, q, r)?);
            }
        }
    }
    BitMatrix::from_rows(cc.cell_count(), rows)
}

/// Two copies of `K_5` joined by one edge.
pub fn bridged_complete_pair() -> Graph {
    let k5 = Graph::complete(5).expect("n >= 1");
    k5.disjoint_union(&k5).with_edge(0, 5).expect("new edge")
}

/// How far the span of vertex-disjoint tori falls short of all 2-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSpanGap {
    pub two_cycle_dimension: usize,
    pub span_rank: usize,
    pub gap: usize,
}

impl TorusSpanGap {
    /// One extra 2-cycle raises the span by at most one dimension.
    pub fn single_generator_insufficient(&self) -> bool {
        self.gap >= 2
    }
}

pub fn torus_span_gap(k: &Graph, cap: usize) -> Result<TorusSpanGap> {
    let two_cycle_dimension = TwoCycleSpace::new(k).dimension();
    let span_rank = vertex_disjoint_torus_span(k, cap)?.rank();
    Ok(TorusSpanGap {
        two_cycle_dimension,
        span_rank,
        gap: two_cycle_dimension - span_rank,
    })
}

/// Symmetric 2-cycles of a complex against the symmetrized tori.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricTwoCycles {
    pub two_cycles: usize,
    pub symmetric: usize,
    /// Rank of the symmetrized tori (all of `K²`'s, intersected with the
    /// complex for a deleted product).
    pub symmetrized_tori: usize,
}

/// Symmetric 2-cycles of `cc`, i.e. the fixed subspace of the swap on its
/// 2-cycle kernel, as cell sets of `cc`.
pub fn symmetric_two_cycle_basis(cc: &CellComplex) -> BitMatrix {
    let perm = cc.swap_permutation();
    let n = cc.cell_count();
    two_cycle_kernel(cc).fixed_subspace(|c| c.permuted(&perm, n))
}

pub fn symmetric_two_cycles(cc: &CellComplex) -> SymmetricTwoCycles {
    let kernel = two_cycle_kernel(cc);
    let symmetric = symmetric_two_cycle_basis(cc);
    let space = TwoCycleSpace::new(cc.base());
    let sym_tori = space.symmetrized_tori();
    let symmetrized_tori = if cc.is_deleted() {
        // symmetrized tori lying inside the deleted product
        let embedded = BitMatrix::from_rows(
            space.complex().cell_count(),
            symmetric
                .rows()
                .iter()
                .map(|r| cc.embed_into_full(r).expect("same complex"))
                .collect(),
        )
        .expect("same length");
        let inside = sym_tori.stacked(&embedded).expect("same length").rank();
        sym_tori.rank() + embedded.rank() - inside
    } else {
        sym_tori.rank()
    };
    SymmetricTwoCycles {
        two_cycles: kernel.row_count(),
        symmetric: symmetric.row_count(),
        symmetrized_tori,
    }
}

/// Generators for the symmetric 2-cycles of the deleted product of
/// `K_{n,n}` and the verdict on whether they span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteSymmetricGenerators {
    pub n: usize,
    pub torus_generators: usize,
    pub subgraph_generators: usize,
    pub generator_rank: usize,
    pub symmetric_dimension: usize,
    /// Generators minus rank.
    pub redundancy: usize,
    pub spans: bool,
    /// The matching statement for `t²`-symmetric 2-cycles of `K~_n²`.
    pub tilde_generator_rank: usize,
    pub tilde_symmetric_dimension: usize,
    pub tilde_spans: bool,
    /// `f` maps the swap-symmetric 2-cycles onto the `t²`-symmetric ones.
    pub transport_ok: bool,
}

fn four_cycles_of_bipartite(n: usize, k: &Graph) -> Vec<(EdgeSet, Vec<bool>)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                for d in c + 1..n {
                    let set = k.simple_cycle(&[a, n + c, b, n + d]).expect("4-cycle of K_{n,n}");
                    let support = k.vertex_support(&set);
                    out.push((set, support));
                }
            }
        }
    }
    out
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

pub fn bipartite_symmetric_generators(n: usize) -> Result<BipartiteSymmetricGenerators> {
    if !(3..=5).contains(&n) {
        return Err(Error::InvalidParameter("n must be 3, 4 or 5".into()));
    }
    let k = Graph::complete_bipartite(n, n)?;
    let cc = CellComplex::deleted(&k);
    let mut gens = BitMatrix::new(cc.cell_count());
    let quads = four_cycles_of_bipartite(n, &k);
    let mut torus_generators = 0;
    for (i, (q, qs)) in quads.iter().enumerate() {
        for (r, rs) in &quads[i + 1..] {
            if qs.iter().zip(rs).all(|(a, b)| !(a & b)) {
                gens.push(&torus(&cc, q, r)? + &torus(&cc, r, q)?)?;
                torus_generators += 1;
            }
        }
    }
    let mut subgraph_generators = 0;
    for left in triples(n) {
        for right in triples(n) {
            let mut c = cc.empty_set();
            for i in 0..cc.cell_count() {
                let (s, t) = cc.cell(i);
                let inside = |e: usize| {
                    let (u, v) = k.edge(e);
                    left.contains(&u) && right.contains(&(v - n))
                };
                if inside(s) && inside(t) {
                    c.set(i, true);
                }
            }
            gens.push(c)?;
            subgraph_generators += 1;
        }
    }
    let symmetric = symmetric_two_cycle_basis(&cc);
    let generator_rank = gens.rank();
    let sym_basis = EchelonBasis::from_matrix(&symmetric);
    let spans = gens.rows().iter().all(|g| sym_basis.contains(g))
        && generator_rank == symmetric.row_count();

    // t²-side: Q × R + tQ × tR over a cycle basis, and K~_3² per triple
    let f = TildeCorrespondence::new(n)?;
    let target = f.target();
    let tg = target.base();
    let t = Involution::part_swap(tg, n)?;
    let t2 = f.t_squared();
    let basis = CycleSpace::new(tg).basis().rows().to_vec();
    let mut tilde_gens = BitMatrix::new(target.cell_count());
    for a in &basis {
        for b in &basis {
            tilde_gens.push(&torus(target, a, b)? + &torus(target, &t.apply(a), &t.apply(b))?)?;
        }
    }
    for [p, q, r] in triples(n) {
        let hex = tg.simple_cycle(&[p, n + q, r, n + p, q, n + r])?;
        tilde_gens.push(torus(target, &hex, &hex)?)?;
    }
    let tilde_symmetric = two_cycle_kernel(target).fixed_subspace(|c| c.permuted(&t2, target.cell_count()));
    let tilde_generator_rank = tilde_gens.rank();
    let tilde_basis = EchelonBasis::from_matrix(&tilde_symmetric);
    let tilde_spans = tilde_gens.rows().iter().all(|g| tilde_basis.contains(g))
        && tilde_generator_rank == tilde_symmetric.row_count();

    let mut moved = BitMatrix::new(target.cell_count());
    for row in symmetric.rows() {
        moved.push(f.apply(row)?)?;
    }
    let transport_ok = moved.rank() == tilde_symmetric.row_count()
        && moved.rows().iter().all(|m| tilde_basis.contains(m));

    let total = torus_generators + subgraph_generators;
    Ok(BipartiteSymmetricGenerators {
        n,
        torus_generators,
        subgraph_generators,
        generator_rank,
        symmetric_dimension: symmetric.row_count(),
        redundancy: total - generator_rank,
        spans,
        tilde_generator_rank,
        tilde_symmetric_dimension: tilde_symmetric.row_count(),
        tilde_spans,
        transport_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn kmn(m: usize, n: usize) -> Graph {
        Graph::complete_bipartite(m, n).unwrap()
    }

    #[test]
    fn full_square_dimensions() {
        for (g, expect) in [(k(3), 1), (kmn(2, 2), 1), (kmn(2, 3), 4), (k(4), 9)] {
            let space = TwoCycleSpace::new(&g);
            assert_eq!(space.dimension(), expect);
            assert_eq!(space.basis().rank(), expect);
            assert_eq!(two_cycle_kernel(space.complex()).row_count(), expect);
        }
        let tree = Graph::tree(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(TwoCycleSpace::new(&tree).dimension(), 0);
        assert_eq!(two_cycle_kernel(&CellComplex::full(&tree)).row_count(), 0);
    }

    #[test]
    fn disconnected_dimension() {
        let g = k(3).disjoint_union(&k(4));
        let space = TwoCycleSpace::new(&g);
        assert_eq!(space.dimension(), 16);
        assert_eq!(two_cycle_kernel(space.complex()).row_count(), 16);
    }

    #[test]
    fn single_cell_is_not_a_cycle() {
        let cc = CellComplex::full(&k(3));
        let c = CellSet::unit(9, 4);
        assert!(!is_cellular_2cycle(&cc, &c));
        assert!(!is_cellular_2cycle_by_parity(&cc, &c));
        let amb = cc.ambient();
        assert_eq!(boundary_sum(&cc, &amb, &c).unwrap().count_ones(), 4);
        assert!(is_cellular_2cycle(&cc, &cc.all_cells()));
    }

    #[test]
    fn deleted_products_that_are_cycles() {
        for g in [kmn(3, 3), k(5)] {
            let cc = CellComplex::deleted(&g);
            let all = cc.all_cells();
            assert!(is_cellular_2cycle(&cc, &all));
            assert!(is_cellular_2cycle_by_parity(&cc, &all));
            assert!(boundary_sum(&cc, &cc.ambient(), &all).unwrap().is_zero());
            assert_eq!(two_cycle_kernel(&cc).row_count(), 1);
        }
    }

    #[test]
    fn cycles_and_wheels_have_no_deleted_cycles() {
        for n in 3..=8 {
            assert_eq!(two_cycle_kernel(&CellComplex::deleted(&Graph::cycle(n).unwrap())).row_count(), 0);
        }
        for n in 3..=7 {
            assert_eq!(two_cycle_kernel(&CellComplex::deleted(&Graph::wheel(n).unwrap())).row_count(), 0);
        }
    }

    #[test]
    fn proper_subcycle_in_k6() {
        let g = k(6);
        let cc = CellComplex::deleted(&g);
        let c = torus(&cc, &g.simple_cycle(&[0, 1, 2]).unwrap(), &g.simple_cycle(&[3, 4, 5]).unwrap())
            .unwrap();
        assert_eq!(c.count_ones(), 9);
        assert!(is_cellular_2cycle(&cc, &c));
        assert_ne!(c, cc.all_cells());
        let span = vertex_disjoint_torus_span(&g, 1000).unwrap();
        let full = CellComplex::full(&g);
        assert!(span.solve_in_span(&cc.embed_into_full(&c).unwrap()).unwrap().is_some());
        assert!(torus(&full, &g.empty_edge_set(), &g.all_edges()).is_err());
    }

    #[test]
    fn torus_decompositions() {
        for g in [kmn(3, 3), k(5)] {
            let space = TwoCycleSpace::new(&g);
            let cc = CellComplex::deleted(&g);
            let coeffs = space.decompose(&cc, &cc.all_cells()).unwrap();
            let back = space.basis().combine(&coeffs).unwrap();
            assert_eq!(back, cc.embed_into_full(&cc.all_cells()).unwrap());
            assert_eq!(coeffs.len(), space.first_betti().pow(2));
        }
        let space = TwoCycleSpace::new(&k(4));
        for i in 0..space.dimension() {
            let c = space.basis().row(i).clone();
            assert_eq!(space.decompose(space.complex(), &c).unwrap(), BitVector::unit(9, i));
        }
        let bad = CellSet::unit(36, 0);
        assert_eq!(space.decompose(space.complex(), &bad), Err(Error::NotATwoCycle));
    }

    #[test]
    fn kunneth_with_two_bases() {
        let g = k(4);
        let space = TwoCycleSpace::new(&g);
        let triangles: Vec<EdgeSet> = [[0, 1, 2], [0, 1, 3], [0, 2, 3]]
            .iter()
            .map(|t| g.simple_cycle(t).unwrap())
            .collect();
        for basis in [space.fundamental_cycles().to_vec(), triangles] {
            let m = space.products_of(&basis).unwrap();
            assert_eq!(m.rank(), 9);
            assert!(m.rows().iter().all(|r| is_cellular_2cycle(space.complex(), r)));
        }
    }

    #[test]
    fn vertex_disjoint_spans() {
        let cc = CellComplex::deleted(&k(5));
        let span = vertex_disjoint_torus_span(&k(5), 1000).unwrap();
        assert_eq!(span.row_count(), 0);
        assert!(!cc.all_cells().is_zero());
        let tree = Graph::tree(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(vertex_disjoint_torus_span(&tree, 10).unwrap().row_count(), 0);
        assert_eq!(vertex_disjoint_torus_span(&k(5), 5), Err(Error::EnumerationCap(5)));
    }

    #[test]
    fn bridged_gap() {
        let g = bridged_complete_pair();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 21));
        let gap = torus_span_gap(&g, 1000).unwrap();
        assert_eq!(gap.two_cycle_dimension, 144);
        assert_eq!(gap.span_rank, 72);
        assert!(gap.single_generator_insufficient());
    }

    #[test]
    fn symmetric_counts() {
        let s = symmetric_two_cycles(&CellComplex::full(&k(3)));
        assert_eq!((s.two_cycles, s.symmetric, s.symmetrized_tori), (1, 1, 0));
        let s = symmetric_two_cycles(&CellComplex::full(&k(4)));
        assert_eq!((s.symmetric, s.symmetrized_tori), (6, 3));
        for g in [k(4), k(5), kmn(3, 3)] {
            let cc = CellComplex::deleted(&g);
            let s = symmetric_two_cycles(&cc);
            assert_eq!(s.symmetric, s.symmetrized_tori);
            let space = TwoCycleSpace::new(&g);
            for row in symmetric_two_cycle_basis(&cc).rows() {
                assert!(space.decompose_symmetric(&cc, row).is_ok());
            }
        }
        let full = CellComplex::full(&k(3));
        let space = TwoCycleSpace::new(&k(3));
        assert!(space.decompose_symmetric(&full, &full.all_cells()).is_err());
    }

    #[test]
    fn bipartite_generators() {
        let r = bipartite_symmetric_generators(3).unwrap();
        assert_eq!((r.torus_generators, r.subgraph_generators), (0, 1));
        assert!(r.spans && r.tilde_spans && r.transport_ok);
        let r = bipartite_symmetric_generators(4).unwrap();
        assert_eq!(r.subgraph_generators, 16);
        assert_eq!(r.torus_generators, 18);
        assert!(r.transport_ok);
        assert!(bipartite_symmetric_generators(6).is_err());
    }
}
