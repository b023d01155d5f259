//! 1-cycles of squares and deleted squares modulo boundaries `σ□τ`:
//! homology dimensions with a canonical transversal, boundary-sum
//! certificates, the Künneth reduction, and symmetric 1-cycles modulo
//! symmetrized boundaries.

use crate::cycles::{is_one_cycle, CycleSpace};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, EchelonBasis, SpanSolver};
use crate::graph::{EdgeSet, Graph};
use crate::product::ProductGraph;

/// The span of the boundaries `σ□τ` that exist in a product graph. In a
/// deleted square these are the boundaries of vertex-disjoint edge pairs.
#[derive(Clone, Debug)]
pub struct BoundarySpace<'p> {
    ambient: &'p ProductGraph,
    cells: Vec<(usize, usize)>,
    generators: BitMatrix,
    solver: SpanSolver,
}

impl<'p> BoundarySpace<'p> {
    pub fn new(ambient: &'p ProductGraph) -> Self {
        let mut cells = Vec::new();
        let mut rows = Vec::new();
        for s in 0..ambient.left().edge_count() {
            for t in 0..ambient.right().edge_count() {
                if let Ok(b) = ambient.boundary(s, t) {
                    cells.push((s, t));
                    rows.push(b);
                }
            }
        }
        let generators =
            BitMatrix::from_rows(ambient.edge_count(), rows).expect("rows are edge sets of ambient");
        let solver = SpanSolver::new(&generators);
        Self {
            ambient,
            cells,
            generators,
            solver,
        }
    }

    pub fn ambient(&self) -> &'p ProductGraph {
        self.ambient
    }

    /// `(σ, τ)` for each generator row.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn generators(&self) -> &BitMatrix {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.solver.rank()
    }

    /// Sets of generators with zero sum, as a basis over generator indices.
    pub fn dependencies(&self) -> BitMatrix {
        self.generators.left_kernel()
    }

    fn require_cycle(&self, c: &EdgeSet) -> Result<()> {
        if c.len() != self.ambient.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient.edge_count(),
                found: c.len(),
            });
        }
        if !is_one_cycle(self.ambient.graph(), c) {
            return Err(Error::NotACycle);
        }
        Ok(())
    }

    /// Cells whose boundaries sum to `c`, if any.
    pub fn is_sum_of_boundaries(&self, c: &EdgeSet) -> Result<Option<Vec<(usize, usize)>>> {
        self.require_cycle(c)?;
        Ok(self
            .solver
            .solve(c)?
            .map(|coeffs| coeffs.ones_iter().map(|i| self.cells[i]).collect()))
    }

    /// `c + c'` lies in the boundary span.
    pub fn homologous(&self, c: &EdgeSet, other: &EdgeSet) -> Result<bool> {
        self.require_cycle(c)?;
        self.require_cycle(other)?;
        self.solver.contains(&(c + other))
    }

    /// Sum of the boundaries of the listed cells.
    pub fn sum_cells(&self, cells: &[(usize, usize)]) -> Result<EdgeSet> {
        let mut total = self.ambient.empty_edge_set();
        for &(s, t) in cells {
            total += &self.ambient.boundary(s, t)?;
        }
        Ok(total)
    }
}

/// `H₁` of the ambient graph modulo boundaries.
#[derive(Clone, Debug)]
pub struct HomologyQuotient {
    pub cycle_dimension: usize,
    pub boundary_rank: usize,
    /// Fundamental cycles of the ambient graph that extend the boundary
    /// span to the whole cycle space, in basis order.
    pub transversal: BitMatrix,
}

impl HomologyQuotient {
    pub fn dimension(&self) -> usize {
        self.transversal.row_count()
    }
}

pub fn h1_mod_boundaries(space: &BoundarySpace<'_>) -> HomologyQuotient {
    let cycles = CycleSpace::new(space.ambient().graph());
    let mut echelon = EchelonBasis::from_matrix(space.generators());
    let mut transversal = BitMatrix::new(space.ambient().edge_count());
    for row in cycles.basis().rows() {
        if echelon.insert(row.clone()) {
            transversal.push(row.clone()).expect("same length");
        }
    }
    debug_assert_eq!(echelon.rank(), cycles.dimension());
    HomologyQuotient {
        cycle_dimension: cycles.dimension(),
        boundary_rank: space.rank(),
        transversal,
    }
}

/// `C_1 × a + a × C_2` together with the boundary cells completing it to `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethReduction {
    pub c1: EdgeSet,
    pub c2: EdgeSet,
    pub certificate: Vec<(usize, usize)>,
}

fn require_full_connected_square(space: &BoundarySpace<'_>) -> Result<()> {
    let amb = space.ambient();
    if !amb.is_square() || amb.is_deleted() {
        return Err(Error::InvalidParameter("Künneth reduction needs a full square".into()));
    }
    if !amb.left().is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// `c ~ C_x × a + a × C_y`, with a certificate.
pub fn kunneth_reduce(space: &BoundarySpace<'_>, c: &EdgeSet, a: usize) -> Result<KunnethReduction> {
    require_full_connected_square(space)?;
    space.require_cycle(c)?;
    let amb = space.ambient();
    let (cx, cy) = amb.projections(c)?;
    let rest = &(c + &amb.times_vertex(&cx, a)?) + &amb.vertex_times(a, &cy)?;
    let certificate = space
        .is_sum_of_boundaries(&rest)?
        .ok_or_else(|| Error::InvalidParameter("reduction has no boundary certificate".into()))?;
    Ok(KunnethReduction {
        c1: cx,
        c2: cy,
        certificate,
    })
}

/// The classes of `B_i × a` and `a × B_j` over a cycle basis `B` of `K` are
/// independent modulo boundaries, so the pair in a reduction is unique.
pub fn kunneth_pairs_independent(space: &BoundarySpace<'_>, a: usize) -> Result<bool> {
    require_full_connected_square(space)?;
    let amb = space.ambient();
    let base = CycleSpace::new(amb.left());
    let mut echelon = EchelonBasis::from_matrix(space.generators());
    let start = echelon.rank();
    for b in base.basis().rows() {
        echelon.insert(amb.times_vertex(b, a)?);
        echelon.insert(amb.vertex_times(a, b)?);
    }
    Ok(echelon.rank() == start + 2 * base.dimension())
}

/// Symmetric 1-cycles of a square and their quotient by symmetrized
/// boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricH1 {
    pub symmetric_cycles: usize,
    pub symmetrized_boundary_rank: usize,
    /// Dimension of the symmetric part of the boundary span.
    pub symmetric_boundaries: usize,
    pub quotient: usize,
}

/// Orbit sums of boundaries under the factor swap: `σ□τ + τ□σ` for
/// `σ < τ`, and `σ□σ` alone, which the swap fixes.
pub fn symmetrized_boundaries(space: &BoundarySpace<'_>) -> Result<BitMatrix> {
    let amb = space.ambient();
    amb.swap_permutation()?;
    let mut m = BitMatrix::new(amb.edge_count());
    for (row, &(s, t)) in space.generators().rows().iter().zip(space.cells()) {
        if s == t {
            m.push(row.clone())?;
        } else if s < t {
            m.push(row + &amb.swap(row)?)?;
        }
    }
    Ok(m)
}

pub fn symmetric_cycle_basis(ambient: &ProductGraph) -> Result<BitMatrix> {
    let perm = ambient.swap_permutation()?;
    let n = ambient.edge_count();
    Ok(CycleSpace::new(ambient.graph())
        .basis()
        .fixed_subspace(|c| c.permuted(perm, n)))
}

pub fn symmetric_h1(space: &BoundarySpace<'_>) -> Result<SymmetricH1> {
    let amb = space.ambient();
    let perm = amb.swap_permutation()?;
    let n = amb.edge_count();
    let symmetric = symmetric_cycle_basis(amb)?;
    let symmetrized = symmetrized_boundaries(space)?;
    let rank = symmetrized.rank();
    let boundary_basis = EchelonBasis::from_matrix(space.generators()).into_matrix();
    let symmetric_boundaries = boundary_basis.fixed_subspace(|c| c.permuted(perm, n)).row_count();
    Ok(SymmetricH1 {
        symmetric_cycles: symmetric.row_count(),
        symmetrized_boundary_rank: rank,
        symmetric_boundaries,
        quotient: symmetric.row_count() - rank,
    })
}

/// `C ↦ C × a + a × C` sends a cycle basis of `K` to an independent set
/// modulo symmetrized boundaries, of size equal to the symmetric quotient,
/// and each image projects back to `C` on both sides.
pub fn symmetric_correspondence_holds(space: &BoundarySpace<'_>, a: usize) -> Result<bool> {
    require_full_connected_square(space)?;
    let amb = space.ambient();
    let h = symmetric_h1(space)?;
    let base = CycleSpace::new(amb.left());
    let mut echelon = EchelonBasis::from_matrix(&symmetrized_boundaries(space)?);
    let start = echelon.rank();
    for c in base.basis().rows() {
        let s = &amb.times_vertex(c, a)? + &amb.vertex_times(a, c)?;
        let (cx, cy) = amb.projections(&s)?;
        if &cx != c || &cy != c || amb.swap(&s)? != s {
            return Ok(false);
        }
        echelon.insert(s);
    }
    Ok(echelon.rank() - start == base.dimension() && h.quotient == base.dimension())
}

/// Coefficients expressing `target` over the rows of `generators`, if any.
pub fn span_membership(generators: &BitMatrix, target: &BitVector) -> Result<Option<BitVector>> {
    generators.solve_in_span(target)
}

/// Coefficients over `generators` and then the boundary generators, if
/// `target` lies in their joint span.
pub fn span_membership_mod_boundaries(
    space: &BoundarySpace<'_>,
    generators: &BitMatrix,
    target: &EdgeSet,
) -> Result<Option<BitVector>> {
    generators.stacked(space.generators())?.solve_in_span(target)
}

fn dedup_rows(rows: Vec<EdgeSet>, cols: usize) -> BitMatrix {
    let mut rows = rows;
    rows.sort();
    rows.dedup();
    BitMatrix::from_rows(cols, rows).expect("same length")
}

/// Off-diagonal cycles over every simple cycle of `K` in both directions.
pub fn off_diagonal_family(ambient: &ProductGraph, cap: usize) -> Result<BitMatrix> {
    let mut rows = Vec::new();
    for c in ambient.left().simple_cycles(cap)? {
        let mut rev = c.clone();
        rev[1..].reverse();
        for cyc in [c, rev] {
            if let Ok(e) = ambient.off_diagonal(&cyc) {
                rows.push(e);
            }
        }
    }
    Ok(dedup_rows(rows, ambient.edge_count()))
}

/// Triodic cycles over every `K_{3,1}` subgraph and every leaf order.
pub fn triodic_family(ambient: &ProductGraph) -> Result<BitMatrix> {
    let k = ambient.left();
    let mut rows = Vec::new();
    for c in 0..k.vertex_count() {
        let nb: Vec<usize> = k.neighbors(c).iter().map(|&(w, _)| w).collect();
        for &x in &nb {
            for &y in &nb {
                for &z in &nb {
                    if x != y && y != z && x != z {
                        if let Ok(e) = ambient.triodic(c, [x, y, z]) {
                            rows.push(e);
                        }
                    }
                }
            }
        }
    }
    Ok(dedup_rows(rows, ambient.edge_count()))
}

/// Symmetrized cycles `C × a + a × C` over simple cycles `C` and vertices
/// `a` for which both halves exist.
pub fn symmetrized_family(ambient: &ProductGraph, cap: usize) -> Result<BitMatrix> {
    let k: &Graph = ambient.left();
    let mut rows = Vec::new();
    for c in k.simple_cycles(cap)? {
        let set = k.simple_cycle(&c)?;
        for a in 0..k.vertex_count() {
            if let (Ok(x), Ok(y)) = (ambient.times_vertex(&set, a), ambient.vertex_times(a, &set)) {
                rows.push(&x + &y);
            }
        }
    }
    Ok(dedup_rows(rows, ambient.edge_count()))
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
    fn squares_mod_boundaries() {
        for (g, expect) in [(k(3), 2), (kmn(2, 2), 2), (kmn(2, 3), 4), (k(4), 6)] {
            let sq = ProductGraph::square(&g);
            let h = h1_mod_boundaries(&BoundarySpace::new(&sq));
            assert_eq!(h.dimension(), expect);
            assert_eq!(h.dimension(), h.cycle_dimension - h.boundary_rank);
        }
    }

    #[test]
    fn deleted_squares_mod_boundaries() {
        let cases = [
            (k(3), 1, 1, 0),
            (kmn(2, 2), 5, 1, 0),
            (kmn(2, 3), 17, 5, 0),
            (k(4), 13, 7, 0),
            (kmn(3, 3), 43, 8, 1),
            (k(5), 41, 12, 1),
        ];
        for (g, cyc, h1, deps) in cases {
            let del = ProductGraph::deleted_square(&g);
            let space = BoundarySpace::new(&del);
            let h = h1_mod_boundaries(&space);
            assert_eq!(h.cycle_dimension, cyc);
            assert_eq!(h.dimension(), h1);
            let d = space.dependencies();
            assert_eq!(d.row_count(), deps);
            if deps == 1 {
                assert_eq!(d.row(0), &BitVector::ones(space.cells().len()));
            }
        }
    }

    #[test]
    fn triodic_certificates() {
        let g = Graph::triod();
        let sq = ProductGraph::square(&g);
        let space = BoundarySpace::new(&sq);
        let c = sq.triodic(3, [0, 1, 2]).unwrap();
        let cert = space.is_sum_of_boundaries(&c).unwrap().unwrap();
        assert_eq!(space.sum_cells(&cert).unwrap(), c);
        let del = ProductGraph::deleted_square(&g);
        let dspace = BoundarySpace::new(&del);
        let dc = del.triodic(3, [0, 1, 2]).unwrap();
        assert_eq!(dspace.is_sum_of_boundaries(&dc).unwrap(), None);
    }

    #[test]
    fn tree_squares_are_boundaries() {
        let t = Graph::tree(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let sq = ProductGraph::square(&t);
        let space = BoundarySpace::new(&sq);
        assert_eq!(h1_mod_boundaries(&space).dimension(), 0);
        for row in CycleSpace::new(sq.graph()).basis().rows() {
            assert!(space.is_sum_of_boundaries(row).unwrap().is_some());
        }
    }

    #[test]
    fn named_homologies() {
        let sq = ProductGraph::square(&k(3));
        let space = BoundarySpace::new(&sq);
        let diag = sq.diagonal(&[0, 1, 2]).unwrap();
        let off = sq.off_diagonal(&[0, 1, 2]).unwrap();
        let anti = sq.antidiagonal(&[0, 1, 2]).unwrap();
        assert!(space.homologous(&off, &diag).unwrap());
        assert!(space.homologous(&anti, &diag).unwrap());
        assert!(space.homologous(&sq.swap(&diag).unwrap(), &diag).unwrap());
        assert!(space.is_sum_of_boundaries(&diag).unwrap().is_none());

        let sq4 = ProductGraph::square(&k(4));
        let space4 = BoundarySpace::new(&sq4);
        let left = sq4.left_cycle(0, &[1, 2, 3]).unwrap();
        assert!(!space4.homologous(&left, &sq4.empty_edge_set()).unwrap());
        assert_eq!(
            space4.is_sum_of_boundaries(&EdgeSet::unit(sq4.edge_count(), 0)),
            Err(Error::NotACycle)
        );
    }

    #[test]
    fn kunneth_examples() {
        let g = k(3);
        let sq = ProductGraph::square(&g);
        let space = BoundarySpace::new(&sq);
        let diag = sq.diagonal(&[0, 1, 2]).unwrap();
        let r = kunneth_reduce(&space, &diag, 0).unwrap();
        assert_eq!((r.c1.clone(), r.c2.clone()), (g.all_edges(), g.all_edges()));
        let b = sq.boundary(0, 1).unwrap();
        let r = kunneth_reduce(&space, &b, 2).unwrap();
        assert!(r.c1.is_zero() && r.c2.is_zero());
        assert!(kunneth_pairs_independent(&space, 0).unwrap());
        let del = ProductGraph::deleted_square(&k(4));
        assert!(kunneth_reduce(&BoundarySpace::new(&del), &del.empty_edge_set(), 0).is_err());
        let two = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap());
        let sq2 = ProductGraph::square(&two);
        assert_eq!(
            kunneth_reduce(&BoundarySpace::new(&sq2), &sq2.empty_edge_set(), 0),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn symmetric_quotients() {
        for g in [k(3), k(4), kmn(2, 3)] {
            let sq = ProductGraph::square(&g);
            let space = BoundarySpace::new(&sq);
            let q = CycleSpace::new(&g).dimension();
            let h = symmetric_h1(&space).unwrap();
            assert_eq!(h.quotient, q);
            assert_eq!(h.symmetric_boundaries, h.symmetrized_boundary_rank);
            assert!(symmetric_correspondence_holds(&space, 0).unwrap());
        }
    }

    #[test]
    fn generator_families() {
        let sq = ProductGraph::square(&k(4));
        let off = off_diagonal_family(&sq, 1000).unwrap();
        let tri = triodic_family(&sq).unwrap();
        let sym = symmetrized_family(&sq, 1000).unwrap();
        for m in [&off, &tri, &sym] {
            assert!(m.row_count() > 0);
            for r in m.rows() {
                assert!(is_one_cycle(sq.graph(), r));
            }
        }
        let space = BoundarySpace::new(&sq);
        let target = &sq.times_vertex(&k(4).simple_cycle(&[0, 1, 2]).unwrap(), 3).unwrap()
            + &sq.vertex_times(3, &k(4).simple_cycle(&[0, 1, 2]).unwrap()).unwrap();
        assert!(span_membership(&sym, &target).unwrap().is_some());
        assert!(span_membership_mod_boundaries(&space, &sym, &target).unwrap().is_some());
    }
}
