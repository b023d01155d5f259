//! Product graphs `K□L`, squares and deleted squares, the cell products
//! `K²` and `K^□`, named cycles, projections, the factor swap, and the cell
//! correspondence between the deleted product of `K_{n,n}` and the square
//! of `K~_n`.
//!
//! Product-graph vertices are ordered pairs `(a, b)`. Edges are labelled
//! `(a, bc)` (second coordinate moves) or `(bc, a)` (first coordinate
//! moves). Cells are ordered edge pairs `(σ, τ)`, keyed row-major by
//! `σ * E + τ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::{EdgeSet, Graph, Involution};

/// Label of a product-graph edge in terms of the factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductEdge {
    /// `(a, bc)`: left vertex `a`, right edge `bc`.
    VertexEdge(usize, usize),
    /// `(bc, a)`: left edge `bc`, right vertex `a`.
    EdgeVertex(usize, usize),
}

#[derive(Clone, Debug)]
pub struct ProductGraph {
    left: Graph,
    right: Graph,
    deleted: bool,
    square: bool,
    pair_index: Vec<Option<usize>>,
    pairs: Vec<(usize, usize)>,
    graph: Graph,
    labels: Vec<ProductEdge>,
    swap_edges: Option<Vec<usize>>,
}

impl ProductGraph {
    /// `K□L` on all ordered pairs.
    pub fn product(left: &Graph, right: &Graph) -> Self {
        Self::build(left, right, false)
    }

    /// `K□K`.
    pub fn square(k: &Graph) -> Self {
        Self::build(k, k, false)
    }

    /// `K□K` restricted to pairs of distinct vertices.
    pub fn deleted_square(k: &Graph) -> Self {
        Self::build(k, k, true)
    }

    fn build(left: &Graph, right: &Graph, deleted: bool) -> Self {
        let (vl, vr) = (left.vertex_count(), right.vertex_count());
        let mut pair_index = vec![None; vl * vr];
        let mut pairs = Vec::new();
        for a in 0..vl {
            for b in 0..vr {
                if !(deleted && a == b) {
                    pair_index[a * vr + b] = Some(pairs.len());
                    pairs.push((a, b));
                }
            }
        }
        let at = |a: usize, b: usize| pair_index[a * vr + b];
        let mut raw = Vec::new();
        for a in 0..vl {
            for (e, &(b, c)) in right.edges().iter().enumerate() {
                if let (Some(x), Some(y)) = (at(a, b), at(a, c)) {
                    raw.push((x, y, ProductEdge::VertexEdge(a, e)));
                }
            }
        }
        for (e, &(b, c)) in left.edges().iter().enumerate() {
            for a in 0..vr {
                if let (Some(x), Some(y)) = (at(b, a), at(c, a)) {
                    raw.push((x, y, ProductEdge::EdgeVertex(e, a)));
                }
            }
        }
        let graph = Graph::new(pairs.len(), raw.iter().map(|&(x, y, _)| (x, y)))
            .expect("product of simple graphs is simple");
        let mut labels = vec![ProductEdge::VertexEdge(0, 0); graph.edge_count()];
        for &(x, y, l) in &raw {
            labels[graph.edge_index(x, y).expect("just inserted")] = l;
        }
        let square = left == right;
        let vertex_labels = pairs
            .iter()
            .map(|&(a, b)| format!("({},{})", left.label(a), right.label(b)))
            .collect();
        let graph = graph.with_labels(vertex_labels).expect("one label per pair");
        let mut out = Self {
            left: left.clone(),
            right: right.clone(),
            deleted,
            square,
            pair_index,
            pairs,
            graph,
            labels,
            swap_edges: None,
        };
        if square {
            let perm = (0..out.graph.edge_count())
                .map(|e| {
                    let swapped = match out.labels[e] {
                        ProductEdge::VertexEdge(a, f) => ProductEdge::EdgeVertex(f, a),
                        ProductEdge::EdgeVertex(f, a) => ProductEdge::VertexEdge(a, f),
                    };
                    out.edge_of(swapped).expect("swap preserves the vertex filter")
                })
                .collect();
            out.swap_edges = Some(perm);
        }
        out
    }

    /// The product as a plain graph on pair indices.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    pub fn is_deleted(&self) -> bool {
        self.deleted
    }

    pub fn is_square(&self) -> bool {
        self.square
    }

    pub fn vertex_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn vertex(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.left.vertex_count() || b >= self.right.vertex_count() {
            return None;
        }
        self.pair_index[a * self.right.vertex_count() + b]
    }

    pub fn pair(&self, v: usize) -> (usize, usize) {
        self.pairs[v]
    }

    pub fn edge_label(&self, e: usize) -> ProductEdge {
        self.labels[e]
    }

    pub fn edge_of(&self, label: ProductEdge) -> Option<usize> {
        let (x, y) = match label {
            ProductEdge::VertexEdge(a, f) => {
                let &(b, c) = self.right.edges().get(f)?;
                (self.vertex(a, b)?, self.vertex(a, c)?)
            }
            ProductEdge::EdgeVertex(f, a) => {
                let &(b, c) = self.left.edges().get(f)?;
                (self.vertex(b, a)?, self.vertex(c, a)?)
            }
        };
        self.graph.edge_index(x, y)
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        self.graph.empty_edge_set()
    }

    pub fn describe_edge(&self, e: usize) -> String {
        match self.labels[e] {
            ProductEdge::VertexEdge(a, f) => {
                format!("({},{})", self.left.label(a), self.right.edge_label(f))
            }
            ProductEdge::EdgeVertex(f, a) => {
                format!("({},{})", self.left.edge_label(f), self.right.label(a))
            }
        }
    }

    fn walk(&self, pairs: &[(usize, usize)]) -> Result<EdgeSet> {
        let vs = pairs
            .iter()
            .map(|&(a, b)| {
                self.vertex(a, b).ok_or_else(|| {
                    Error::InvalidParameter(format!("pair ({a},{b}) is not a vertex of the product"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        self.graph.closed_walk(&vs)
    }

    /// `ab□uv = (a,u)(b,u)(b,v)(a,v)` for `σ = ab` in the left factor and
    /// `τ = uv` in the right factor.
    pub fn boundary(&self, sigma: usize, tau: usize) -> Result<EdgeSet> {
        let (a, b) = *self.left.edges().get(sigma).ok_or(Error::CellNotInComplex(sigma, tau))?;
        let (u, v) = *self.right.edges().get(tau).ok_or(Error::CellNotInComplex(sigma, tau))?;
        self.walk(&[(a, u), (b, u), (b, v), (a, v)])
            .map_err(|_| Error::CellNotInComplex(sigma, tau))
    }

    /// `a × C`: the edges `(a, σ)` for `σ` in a 1-cycle `c` of the right factor.
    pub fn vertex_times(&self, a: usize, c: &EdgeSet) -> Result<EdgeSet> {
        self.check_right(c)?;
        let mut out = self.empty_edge_set();
        for f in c.ones_iter() {
            let e = self.edge_of(ProductEdge::VertexEdge(a, f)).ok_or_else(|| {
                Error::InvalidParameter(format!("edge ({a}, {f}) missing from the product"))
            })?;
            out.set(e, true);
        }
        Ok(out)
    }

    /// `C × a`: the edges `(σ, a)` for `σ` in a 1-cycle `c` of the left factor.
    pub fn times_vertex(&self, c: &EdgeSet, a: usize) -> Result<EdgeSet> {
        self.check_left(c)?;
        let mut out = self.empty_edge_set();
        for f in c.ones_iter() {
            let e = self.edge_of(ProductEdge::EdgeVertex(f, a)).ok_or_else(|| {
                Error::InvalidParameter(format!("edge ({f}, {a}) missing from the product"))
            })?;
            out.set(e, true);
        }
        Ok(out)
    }

    fn check_left(&self, c: &EdgeSet) -> Result<()> {
        if c.len() != self.left.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: self.left.edge_count(),
                found: c.len(),
            });
        }
        Ok(())
    }

    fn check_right(&self, c: &EdgeSet) -> Result<()> {
        if c.len() != self.right.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: self.right.edge_count(),
                found: c.len(),
            });
        }
        Ok(())
    }

    fn require_square(&self) -> Result<()> {
        if self.square {
            Ok(())
        } else {
            Err(Error::InvalidParameter("operation needs a square".into()))
        }
    }

    fn simple_in_left(&self, cycle: &[usize]) -> Result<()> {
        self.left.simple_cycle(cycle).map(|_| ())
    }

    /// `diag C = (v1,v1)(v1,v2)(v2,v2) ... (vk,vk)(vk,v1)`.
    pub fn diagonal(&self, cycle: &[usize]) -> Result<EdgeSet> {
        self.require_square()?;
        self.simple_in_left(cycle)?;
        let k = cycle.len();
        let walk: Vec<_> = (0..k)
            .flat_map(|i| [(cycle[i], cycle[i]), (cycle[i], cycle[(i + 1) % k])])
            .collect();
        self.walk(&walk)
    }

    /// `(v1,v2)(v1,v3)(v2,v3) ... (vk,v1)(vk,v2)`.
    pub fn off_diagonal(&self, cycle: &[usize]) -> Result<EdgeSet> {
        self.require_square()?;
        self.simple_in_left(cycle)?;
        let k = cycle.len();
        let walk: Vec<_> = (0..k)
            .flat_map(|i| [(cycle[i], cycle[(i + 1) % k]), (cycle[i], cycle[(i + 2) % k])])
            .collect();
        self.walk(&walk)
    }

    /// `(v1,v1)(v2,v1)(v2,vk) ... (vk,v2)(v1,v2)`: the first coordinate steps
    /// forward, then the second steps backward.
    pub fn antidiagonal(&self, cycle: &[usize]) -> Result<EdgeSet> {
        self.require_square()?;
        self.simple_in_left(cycle)?;
        let k = cycle.len();
        let walk: Vec<_> = (0..k)
            .flat_map(|m| {
                let second = cycle[(k - m) % k];
                [(cycle[m], second), (cycle[(m + 1) % k], second)]
            })
            .collect();
        self.walk(&walk)
    }

    /// `a × C` for a simple cycle `C` given by its vertices.
    pub fn left_cycle(&self, a: usize, cycle: &[usize]) -> Result<EdgeSet> {
        let c = self.right.simple_cycle(cycle)?;
        self.vertex_times(a, &c)
    }

    /// `C × a` for a simple cycle `C` given by its vertices.
    pub fn right_cycle(&self, cycle: &[usize], a: usize) -> Result<EdgeSet> {
        let c = self.left.simple_cycle(cycle)?;
        self.times_vertex(&c, a)
    }

    /// The cycle of a `K_{3,1}` subgraph with centre `c` and leaves
    /// `x, y, z`: the written half `(x,z)(x,c)(x,y)(c,y)(z,y)(z,c)` followed
    /// by its factor swap. The result is checked to be a 12-cycle.
    pub fn triodic(&self, center: usize, leaves: [usize; 3]) -> Result<EdgeSet> {
        self.require_square()?;
        let [x, y, z] = leaves;
        if [x, y, z].contains(&center) || x == y || y == z || x == z {
            return Err(Error::InvalidParameter("triod vertices must be distinct".into()));
        }
        for l in leaves {
            if self.left.edge_index(center, l).is_none() {
                return Err(Error::NotAnEdge(center, l));
            }
        }
        let half = [(x, z), (x, center), (x, y), (center, y), (z, y), (z, center)];
        let mut walk = half.to_vec();
        walk.extend(half.iter().map(|&(p, q)| (q, p)));
        let mut seen = walk.clone();
        seen.sort_unstable();
        seen.dedup();
        let c = self.walk(&walk)?;
        if seen.len() != 12 || c.count_ones() != 12 {
            return Err(Error::NotASimpleCycle("triodic walk does not close up".into()));
        }
        Ok(c)
    }

    pub fn named_cycle(&self, kind: &NamedCycle) -> Result<EdgeSet> {
        match kind {
            NamedCycle::Boundary { sigma, tau } => self.boundary(*sigma, *tau),
            NamedCycle::Left { vertex, cycle } => self.left_cycle(*vertex, cycle),
            NamedCycle::Right { cycle, vertex } => self.right_cycle(cycle, *vertex),
            NamedCycle::Diagonal(c) => self.diagonal(c),
            NamedCycle::OffDiagonal(c) => self.off_diagonal(c),
            NamedCycle::Antidiagonal(c) => self.antidiagonal(c),
            NamedCycle::Triodic { center, leaves } => self.triodic(*center, *leaves),
        }
    }

    /// `(C_x, C_y)`: left edges `σ` with an odd number of `(σ, a)` in `c`,
    /// and right edges `σ` with an odd number of `(a, σ)` in `c`.
    pub fn projections(&self, c: &EdgeSet) -> Result<(EdgeSet, EdgeSet)> {
        if c.len() != self.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: self.edge_count(),
                found: c.len(),
            });
        }
        let mut cx = self.left.empty_edge_set();
        let mut cy = self.right.empty_edge_set();
        for e in c.ones_iter() {
            match self.labels[e] {
                ProductEdge::VertexEdge(_, f) => cy.flip(f),
                ProductEdge::EdgeVertex(f, _) => cx.flip(f),
            }
        }
        Ok((cx, cy))
    }

    /// `(a, b) -> (b, a)` on vertex indices.
    pub fn swap_vertex(&self, v: usize) -> Result<usize> {
        self.require_square()?;
        let (a, b) = self.pairs[v];
        Ok(self.vertex(b, a).expect("vertex filter is symmetric"))
    }

    pub fn swap_edge(&self, e: usize) -> Result<usize> {
        self.require_square()?;
        Ok(self.swap_edges.as_ref().expect("square")[e])
    }

    pub fn swap_permutation(&self) -> Result<&[usize]> {
        self.require_square()?;
        Ok(self.swap_edges.as_deref().expect("square"))
    }

    pub fn swap(&self, c: &EdgeSet) -> Result<EdgeSet> {
        let perm = self.swap_permutation()?;
        Ok(c.permuted(perm, self.edge_count()))
    }

    /// The factor swap as a graph involution of the product.
    pub fn swap_involution(&self) -> Result<Involution<'_>> {
        self.require_square()?;
        let image = (0..self.vertex_count())
            .map(|v| self.swap_vertex(v))
            .collect::<Result<Vec<_>>>()?;
        Involution::new(&self.graph, image)
    }
}

/// Named 1-cycles of a product graph. Vertices and edges are indices of the
/// factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedCycle {
    Boundary { sigma: usize, tau: usize },
    Left { vertex: usize, cycle: Vec<usize> },
    Right { cycle: Vec<usize>, vertex: usize },
    Diagonal(Vec<usize>),
    OffDiagonal(Vec<usize>),
    Antidiagonal(Vec<usize>),
    Triodic { center: usize, leaves: [usize; 3] },
}

/// A set of cells over the indices of a [`CellComplex`].
pub type CellSet = BitVector;

/// `K²` (all ordered edge pairs) or `K^□` (ordered pairs of vertex-disjoint
/// edges).
#[derive(Clone)]
pub struct CellComplex {
    base: Graph,
    deleted: bool,
    cells: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
}

impl fmt::Debug for CellComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CellComplex")
            .field("base", &self.base)
            .field("deleted", &self.deleted)
            .field("cells", &self.cells.len())
            .finish()
    }
}

impl CellComplex {
    pub fn full(k: &Graph) -> Self {
        Self::build(k, false)
    }

    pub fn deleted(k: &Graph) -> Self {
        Self::build(k, true)
    }

    fn build(k: &Graph, deleted: bool) -> Self {
        let e = k.edge_count();
        let mut index = vec![None; e * e];
        let mut cells = Vec::new();
        for s in 0..e {
            for t in 0..e {
                if !(deleted && k.edges_share_vertex(s, t)) {
                    index[s * e + t] = Some(cells.len());
                    cells.push((s, t));
                }
            }
        }
        Self {
            base: k.clone(),
            deleted,
            cells,
            index,
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn is_deleted(&self) -> bool {
        self.deleted
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> (usize, usize) {
        self.cells[i]
    }

    pub fn cell_index(&self, sigma: usize, tau: usize) -> Option<usize> {
        let e = self.base.edge_count();
        if sigma >= e || tau >= e {
            return None;
        }
        self.index[sigma * e + tau]
    }

    pub fn empty_set(&self) -> CellSet {
        CellSet::zeros(self.cell_count())
    }

    pub fn all_cells(&self) -> CellSet {
        CellSet::ones(self.cell_count())
    }

    pub fn describe_cell(&self, i: usize) -> String {
        let (s, t) = self.cells[i];
        format!("({},{})", self.base.edge_label(s), self.base.edge_label(t))
    }

    fn check(&self, c: &CellSet) -> Result<()> {
        if c.len() != self.cell_count() {
            return Err(Error::DimensionMismatch {
                expected: self.cell_count(),
                found: c.len(),
            });
        }
        Ok(())
    }

    /// `C_{σ,·} = {τ : (σ, τ) ∈ C}`.
    pub fn row_section(&self, c: &CellSet, sigma: usize) -> Result<EdgeSet> {
        self.check(c)?;
        let mut out = self.base.empty_edge_set();
        for t in 0..self.base.edge_count() {
            if let Some(i) = self.cell_index(sigma, t) {
                out.set(t, c.get(i));
            }
        }
        Ok(out)
    }

    /// `C_{·,τ} = {σ : (σ, τ) ∈ C}`.
    pub fn column_section(&self, c: &CellSet, tau: usize) -> Result<EdgeSet> {
        self.check(c)?;
        let mut out = self.base.empty_edge_set();
        for s in 0..self.base.edge_count() {
            if let Some(i) = self.cell_index(s, tau) {
                out.set(s, c.get(i));
            }
        }
        Ok(out)
    }

    /// `(σ, τ) -> (τ, σ)`; both complexes are closed under it.
    pub fn swap_cell(&self, i: usize) -> usize {
        let (s, t) = self.cells[i];
        self.cell_index(t, s).expect("complex is swap-closed")
    }

    pub fn swap_permutation(&self) -> Vec<usize> {
        (0..self.cell_count()).map(|i| self.swap_cell(i)).collect()
    }

    pub fn swap(&self, c: &CellSet) -> Result<CellSet> {
        self.check(c)?;
        Ok(c.permuted(&self.swap_permutation(), self.cell_count()))
    }

    /// Re-indexes a cell set into the full square `K²`.
    pub fn embed_into_full(&self, c: &CellSet) -> Result<CellSet> {
        self.check(c)?;
        let e = self.base.edge_count();
        let perm: Vec<usize> = self.cells.iter().map(|&(s, t)| s * e + t).collect();
        Ok(c.permuted(&perm, e * e))
    }

    /// Inverse of [`embed_into_full`](Self::embed_into_full); fails on
    /// cells outside this complex.
    pub fn restrict_from_full(&self, c: &CellSet) -> Result<CellSet> {
        let e = self.base.edge_count();
        if c.len() != e * e {
            return Err(Error::DimensionMismatch {
                expected: e * e,
                found: c.len(),
            });
        }
        let mut out = self.empty_set();
        for k in c.ones_iter() {
            let i = self.index[k].ok_or(Error::CellNotInComplex(k / e, k % e))?;
            out.set(i, true);
        }
        Ok(out)
    }

    /// Same first coordinate and second coordinates sharing a vertex, or
    /// the other way round.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let (s, t) = self.cells[i];
        let (g, d) = self.cells[j];
        (s == g && t != d && self.base.edges_share_vertex(t, d))
            || (t == d && s != g && self.base.edges_share_vertex(s, g))
    }

    /// The square (or deleted square) graph in which the cell boundaries of
    /// this complex live.
    pub fn ambient(&self) -> ProductGraph {
        if self.deleted {
            ProductGraph::deleted_square(&self.base)
        } else {
            ProductGraph::square(&self.base)
        }
    }

    /// For `σ = ab`, `τ = uv`: the edges `(a,τ)`, `(b,τ)`, `(σ,u)`, `(σ,v)`.
    pub fn cell_boundary_edges(&self, ambient: &ProductGraph, i: usize) -> Result<[usize; 4]> {
        if ambient.left() != &self.base || !ambient.is_square() {
            return Err(Error::InvalidParameter("ambient is not a square of the base".into()));
        }
        let (s, t) = self.cells[i];
        let (a, b) = self.base.edge(s);
        let (u, v) = self.base.edge(t);
        let get = |l| ambient.edge_of(l).ok_or(Error::CellNotInComplex(s, t));
        Ok([
            get(ProductEdge::VertexEdge(a, t))?,
            get(ProductEdge::VertexEdge(b, t))?,
            get(ProductEdge::EdgeVertex(s, u))?,
            get(ProductEdge::EdgeVertex(s, v))?,
        ])
    }

    /// Rows are the boundaries `σ□τ` of the cells, as edge sets of `ambient`.
    pub fn boundary_matrix(&self, ambient: &ProductGraph) -> Result<BitMatrix> {
        let rows = (0..self.cell_count())
            .map(|i| {
                self.cell_boundary_edges(ambient, i)
                    .map(|es| EdgeSet::from_indices(ambient.edge_count(), es))
            })
            .collect::<Result<Vec<_>>>()?;
        BitMatrix::from_rows(ambient.edge_count(), rows)
    }
}

/// The bijection `f(σ1σ2', τ1τ2') = (σ1τ1', σ2τ2')` from the deleted product
/// of `K_{n,n}` onto the square of `K~_n`.
#[derive(Clone, Debug)]
pub struct TildeCorrespondence {
    n: usize,
    source: CellComplex,
    target: CellComplex,
    map: Vec<usize>,
}

impl TildeCorrespondence {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("correspondence needs n >= 3".into()));
        }
        let source = CellComplex::deleted(&Graph::complete_bipartite(n, n)?);
        let target = CellComplex::full(&Graph::tilde_complete(n)?);
        let sg = source.base();
        let tg = target.base();
        let map = source
            .cells()
            .iter()
            .map(|&(s, t)| {
                let (s1, s2) = sg.edge(s);
                let (t1, t2) = sg.edge(t);
                let (s2, t2) = (s2 - n, t2 - n);
                let a = tg.edge_index(s1, n + t1).expect("s1 != t1 for disjoint edges");
                let b = tg.edge_index(s2, n + t2).expect("s2 != t2 for disjoint edges");
                target.cell_index(a, b).expect("full square")
            })
            .collect();
        Ok(Self {
            n,
            source,
            target,
            map,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> &CellComplex {
        &self.source
    }

    pub fn target(&self) -> &CellComplex {
        &self.target
    }

    pub fn apply_cell(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn apply(&self, c: &CellSet) -> Result<CellSet> {
        self.source.check(c)?;
        Ok(c.permuted(&self.map, self.target.cell_count()))
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.cell_count() != self.target.cell_count() {
            return false;
        }
        let mut hit = vec![false; self.target.cell_count()];
        self.map.iter().all(|&j| !std::mem::replace(&mut hit[j], true))
    }

    /// Exhaustive check over all cell pairs.
    pub fn preserves_adjacency(&self) -> bool {
        let m = self.source.cell_count();
        (0..m).all(|i| {
            (0..m).all(|j| self.source.adjacent(i, j) == self.target.adjacent(self.map[i], self.map[j]))
        })
    }

    /// `t²(x, y) = (tx, ty)` on cells of the target.
    pub fn t_squared(&self) -> Vec<usize> {
        let tg = self.target.base();
        let t = Involution::part_swap(tg, self.n).expect("K~_n has 2n vertices");
        self.target
            .cells()
            .iter()
            .map(|&(a, b)| self.target.cell_index(t.edge(a), t.edge(b)).expect("full square"))
            .collect()
    }

    /// `f ∘ swap = t² ∘ f` on every cell.
    pub fn intertwines_swap(&self) -> bool {
        let t2 = self.t_squared();
        (0..self.source.cell_count())
            .all(|i| self.map[self.source.swap_cell(i)] == t2[self.map[i]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn square_of_path_is_grid() {
        let sq = ProductGraph::square(&Graph::path(3).unwrap());
        assert_eq!(sq.vertex_count(), 9);
        assert_eq!(sq.edge_count(), 12);
        let mut degrees: Vec<_> = (0..9).map(|v| sq.graph().degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![2, 2, 2, 2, 3, 3, 3, 3, 4]);
    }

    #[test]
    fn deleted_square_sizes() {
        let d3 = ProductGraph::deleted_square(&k(3));
        assert_eq!((d3.vertex_count(), d3.edge_count()), (6, 6));
        assert!(d3.graph().is_connected());
        assert!((0..6).all(|v| d3.graph().degree(v) == 2));
        let d4 = ProductGraph::deleted_square(&k(4));
        assert_eq!((d4.vertex_count(), d4.edge_count()), (12, 24));
        assert!((0..12).all(|v| d4.graph().degree(v) == 4));
        let d5 = ProductGraph::deleted_square(&k(5));
        assert_eq!((d5.vertex_count(), d5.edge_count()), (20, 60));
        let d33 = ProductGraph::deleted_square(&Graph::complete_bipartite(3, 3).unwrap());
        assert_eq!((d33.vertex_count(), d33.edge_count()), (30, 72));
    }

    #[test]
    fn boundary_formula() {
        let sq = ProductGraph::square(&k(4));
        let g = sq.left();
        let (s, t) = (g.edge_index(0, 1).unwrap(), g.edge_index(2, 3).unwrap());
        let b = sq.boundary(s, t).unwrap();
        let walk: Vec<_> = [(0, 2), (1, 2), (1, 3), (0, 3)]
            .iter()
            .map(|&(a, b)| sq.vertex(a, b).unwrap())
            .collect();
        assert_eq!(b, sq.graph().simple_cycle(&walk).unwrap());
        let cc = CellComplex::full(g);
        let i = cc.cell_index(s, t).unwrap();
        let edges = cc.cell_boundary_edges(&sq, i).unwrap();
        assert_eq!(EdgeSet::from_indices(sq.edge_count(), edges), b);
        let mut names: Vec<_> = edges.iter().map(|&e| sq.describe_edge(e)).collect();
        names.sort();
        assert_eq!(names, vec!["(1,3-4)", "(1-2,3)", "(1-2,4)", "(2,3-4)"]);
    }

    #[test]
    fn named_cycles_of_triangle_square() {
        let sq = ProductGraph::square(&k(3));
        let diag = sq.diagonal(&[0, 1, 2]).unwrap();
        assert_eq!(diag.count_ones(), 6);
        let p = |a, b| sq.vertex(a, b).unwrap();
        let expect = sq
            .graph()
            .simple_cycle(&[p(0, 0), p(0, 1), p(1, 1), p(1, 2), p(2, 2), p(2, 0)])
            .unwrap();
        assert_eq!(diag, expect);
        let off = sq.off_diagonal(&[0, 1, 2]).unwrap();
        let expect = sq
            .graph()
            .simple_cycle(&[p(0, 1), p(0, 2), p(1, 2), p(1, 0), p(2, 0), p(2, 1)])
            .unwrap();
        assert_eq!(off, expect);
        let anti = sq.antidiagonal(&[0, 1, 2]).unwrap();
        let expect = sq
            .graph()
            .simple_cycle(&[p(0, 0), p(1, 0), p(1, 2), p(2, 2), p(2, 1), p(0, 1)])
            .unwrap();
        assert_eq!(anti, expect);
        for c in [&diag, &off, &anti] {
            assert!(sq.graph().odd_vertices(c).is_empty());
        }
        let (cx, cy) = sq.projections(&diag).unwrap();
        assert_eq!(cx, k(3).all_edges());
        assert_eq!(cy, k(3).all_edges());
        // the swap moves diag; only its projections are preserved
        let swapped = sq.swap(&diag).unwrap();
        assert_ne!(swapped, diag);
        assert_eq!(sq.projections(&swapped).unwrap(), sq.projections(&diag).unwrap());
    }

    #[test]
    fn left_and_right_cycles() {
        let g = k(4);
        let sq = ProductGraph::square(&g);
        let c = g.simple_cycle(&[1, 2, 3]).unwrap();
        let left = sq.left_cycle(0, &[1, 2, 3]).unwrap();
        assert_eq!(sq.projections(&left).unwrap(), (g.empty_edge_set(), c.clone()));
        let right = sq.right_cycle(&[1, 2, 3], 0).unwrap();
        assert_eq!(sq.swap(&left).unwrap(), right);
        assert!(sq.left_cycle(0, &[1, 2]).is_err());
        assert!(ProductGraph::product(&g, &k(3)).diagonal(&[0, 1, 2]).is_err());
    }

    #[test]
    fn boundaries_project_to_zero() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        let sq = ProductGraph::square(&g);
        for s in 0..g.edge_count() {
            for t in 0..g.edge_count() {
                let b = sq.boundary(s, t).unwrap();
                let (cx, cy) = sq.projections(&b).unwrap();
                assert!(cx.is_zero() && cy.is_zero());
            }
        }
    }

    #[test]
    fn triodic_cycle() {
        let g = Graph::triod();
        let sq = ProductGraph::square(&g);
        let c = sq.triodic(3, [0, 1, 2]).unwrap();
        assert_eq!(c.count_ones(), 12);
        assert_eq!(sq.swap(&c).unwrap(), c);
        let mut sum = sq.empty_edge_set();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let s = g.edge_index(i, 3).unwrap();
                    let t = g.edge_index(j, 3).unwrap();
                    sum += &sq.boundary(s, t).unwrap();
                }
            }
        }
        assert_eq!(sum, c);
        let del = ProductGraph::deleted_square(&g);
        assert_eq!(del.triodic(3, [0, 1, 2]).unwrap().count_ones(), 12);
        assert!(sq.triodic(0, [1, 2, 3]).is_err());
    }

    #[test]
    fn swap_is_an_automorphism() {
        for g in [k(4), Graph::complete_bipartite(2, 3).unwrap()] {
            for sq in [ProductGraph::square(&g), ProductGraph::deleted_square(&g)] {
                let inv = sq.swap_involution().unwrap();
                for e in 0..sq.edge_count() {
                    assert_eq!(inv.edge(inv.edge(e)), e);
                }
            }
        }
    }

    #[test]
    fn cell_complex_sizes() {
        assert_eq!(CellComplex::full(&k(3)).cell_count(), 9);
        for g in [Graph::complete(2).unwrap(), k(3), Graph::triod(), Graph::complete_bipartite(4, 1).unwrap()] {
            assert_eq!(CellComplex::deleted(&g).cell_count(), 0);
        }
        assert_eq!(CellComplex::deleted(&k(5)).cell_count(), 30);
        assert_eq!(CellComplex::deleted(&k(4)).cell_count(), 6);
        assert_eq!(CellComplex::deleted(&Graph::complete_bipartite(3, 3).unwrap()).cell_count(), 36);
    }

    #[test]
    fn sections_and_embedding() {
        let g = k(4);
        let cc = CellComplex::deleted(&g);
        let all = cc.all_cells();
        let s = g.edge_index(0, 1).unwrap();
        let t = g.edge_index(2, 3).unwrap();
        assert_eq!(cc.row_section(&all, s).unwrap(), EdgeSet::unit(6, t));
        let full = CellComplex::full(&g);
        let emb = cc.embed_into_full(&all).unwrap();
        assert_eq!(emb.count_ones(), 6);
        assert_eq!(cc.restrict_from_full(&emb).unwrap(), all);
        assert!(cc.restrict_from_full(&full.all_cells()).is_err());
        assert_eq!(cc.swap(&all).unwrap(), all);
    }

    #[test]
    fn edge_cell_incidence() {
        // every square edge lies in the cells with the matching edge coordinate
        let g = k(4);
        let sq = ProductGraph::square(&g);
        let cc = CellComplex::full(&g);
        let mut count = vec![0usize; sq.edge_count()];
        for i in 0..cc.cell_count() {
            for e in cc.cell_boundary_edges(&sq, i).unwrap() {
                count[e] += 1;
            }
        }
        // (a, τ) lies in (σ, τ) for the 3 edges σ at a
        assert!(count.iter().all(|&c| c == 3));
    }

    #[test]
    fn tilde_correspondence() {
        let f = TildeCorrespondence::new(3).unwrap();
        assert_eq!(f.source().cell_count(), 36);
        assert_eq!(f.target().cell_count(), 36);
        assert!(f.is_bijective());
        assert!(f.preserves_adjacency());
        assert!(f.intertwines_swap());
        let f4 = TildeCorrespondence::new(4).unwrap();
        let src = f4.source();
        let sg = src.base();
        // f(12', 34') = (13', 24')
        let i = src
            .cell_index(sg.edge_index(0, 5).unwrap(), sg.edge_index(2, 7).unwrap())
            .unwrap();
        let tg = f4.target().base();
        let j = f4
            .target()
            .cell_index(tg.edge_index(0, 6).unwrap(), tg.edge_index(1, 7).unwrap())
            .unwrap();
        assert_eq!(f4.apply_cell(i), j);
        assert!(f4.is_bijective());
        assert!(TildeCorrespondence::new(2).is_err());
    }
}
