//! 1-cycles of a graph: membership, the fundamental basis, decompositions
//! into simple / chordless / triangle / square cycles, symmetric cycles
//! under an involution, integer cycles and sign assignments up to vertex
//! flips.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::count::PowerOfTwo;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::{EdgeSet, Graph, Involution, SpanningForest};

fn check_len(g: &Graph, c: &EdgeSet) -> Result<()> {
    if c.len() != g.edge_count() {
        return Err(Error::DimensionMismatch {
            expected: g.edge_count(),
            found: c.len(),
        });
    }
    Ok(())
}

fn require_cycle(g: &Graph, c: &EdgeSet) -> Result<()> {
    check_len(g, c)?;
    if is_one_cycle(g, c) {
        Ok(())
    } else {
        Err(Error::NotACycle)
    }
}

/// Every vertex lies in an even number of edges of `c`.
pub fn is_one_cycle(g: &Graph, c: &EdgeSet) -> bool {
    c.len() == g.edge_count() && g.odd_vertices(c).is_empty()
}

/// The cycle space with its fundamental basis: one cycle per non-tree edge
/// of the greedy spanning forest.
#[derive(Clone, Debug)]
pub struct CycleSpace<'g> {
    forest: SpanningForest<'g>,
    non_tree: Vec<usize>,
    basis: BitMatrix,
}

impl<'g> CycleSpace<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let forest = g.spanning_forest();
        let non_tree = forest.non_tree_edges();
        let rows = non_tree
            .iter()
            .map(|&e| forest.fundamental_cycle(e).expect("non-tree edge"))
            .collect();
        let basis = BitMatrix::from_rows(g.edge_count(), rows).expect("edge-length rows");
        Self {
            forest,
            non_tree,
            basis,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.forest.graph()
    }

    pub fn forest(&self) -> &SpanningForest<'g> {
        &self.forest
    }

    /// Non-tree edges, in the order of the basis rows.
    pub fn non_tree_edges(&self) -> &[usize] {
        &self.non_tree
    }

    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    /// `E - V + N`.
    pub fn dimension(&self) -> usize {
        self.non_tree.len()
    }

    pub fn count(&self) -> PowerOfTwo {
        PowerOfTwo::new(self.dimension())
    }

    /// Coefficients of `c` over the fundamental basis: the coefficient of the
    /// cycle of a non-tree edge is whether that edge lies in `c`.
    pub fn coordinates(&self, c: &EdgeSet) -> Result<BitVector> {
        require_cycle(self.graph(), c)?;
        let coords = BitVector::from_bools(
            &self.non_tree.iter().map(|&e| c.get(e)).collect::<Vec<_>>(),
        );
        debug_assert_eq!(&self.basis.combine(&coords).unwrap(), c);
        Ok(coords)
    }

    pub fn recombine(&self, coords: &BitVector) -> Result<EdgeSet> {
        self.basis.combine(coords)
    }
}

/// Splits a 1-cycle into edge-disjoint simple cycles by walk extraction:
/// follow unused edges until a vertex repeats, cut off that loop, repeat.
/// Each cycle is returned as a vertex sequence.
pub fn decompose_simple(g: &Graph, c: &EdgeSet) -> Result<Vec<Vec<usize>>> {
    require_cycle(g, c)?;
    let mut unused = c.clone();
    let mut out = Vec::new();
    let mut position = vec![usize::MAX; g.vertex_count()];
    while let Some(first) = unused.first_one() {
        let start = g.edge(first).0;
        let mut path = vec![start];
        position[start] = 0;
        loop {
            let v = *path.last().expect("path is never empty");
            let Some(&(w, e)) = g.neighbors(v).iter().find(|&&(_, e)| unused.get(e)) else {
                debug_assert_eq!(path.len(), 1);
                position[v] = usize::MAX;
                break;
            };
            unused.set(e, false);
            if position[w] != usize::MAX {
                let cut = position[w];
                let cycle: Vec<usize> = path.drain(cut + 1..).collect();
                for &x in &cycle {
                    position[x] = usize::MAX;
                }
                let mut cyc = vec![w];
                cyc.extend(cycle);
                out.push(cyc);
            } else {
                position[w] = path.len();
                path.push(w);
            }
        }
    }
    Ok(out)
}

/// First chord (lowest edge index) of a simple cycle given by vertices.
fn lowest_chord(g: &Graph, cycle: &[usize]) -> Option<(usize, usize, usize)> {
    let k = cycle.len();
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            if let Some(e) = g.edge_index(cycle[i], cycle[j]) {
                if best.is_none_or(|(b, _, _)| e < b) {
                    best = Some((e, i, j));
                }
            }
        }
    }
    best
}

/// Writes a 1-cycle as a sum of chordless simple cycles, splitting each
/// simple cycle along its lowest-indexed chord until none remain.
pub fn decompose_chordless(g: &Graph, c: &EdgeSet) -> Result<Vec<Vec<usize>>> {
    let mut stack = decompose_simple(g, c)?;
    let mut out = Vec::new();
    while let Some(cycle) = stack.pop() {
        match lowest_chord(g, &cycle) {
            None => out.push(cycle),
            Some((_, i, j)) => {
                let first: Vec<usize> = cycle[i..=j].to_vec();
                let mut second: Vec<usize> = cycle[j..].to_vec();
                second.extend_from_slice(&cycle[..=i]);
                stack.push(second);
                stack.push(first);
            }
        }
    }
    out.reverse();
    Ok(out)
}

/// `true` when no edge of `g` joins two non-consecutive vertices.
pub fn is_chordless(g: &Graph, cycle: &[usize]) -> bool {
    lowest_chord(g, cycle).is_none()
}

/// Mod-2 sum of a list of closed walks.
pub fn sum_of_walks(g: &Graph, walks: &[Vec<usize>]) -> Result<EdgeSet> {
    let mut total = g.empty_edge_set();
    for w in walks {
        total += &g.closed_walk(w)?;
    }
    Ok(total)
}

fn require_complete(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() != n * (n - 1) / 2 {
        return Err(Error::InvalidParameter("graph is not complete".into()));
    }
    Ok(n)
}

/// For a 1-cycle of `K_n`: the triangles `{i, j, n}` over its edges `ij`
/// avoiding the last vertex. Their sum is the cycle.
pub fn decompose_triangles_complete(g: &Graph, c: &EdgeSet) -> Result<Vec<[usize; 3]>> {
    let n = require_complete(g)?;
    require_cycle(g, c)?;
    let top = n - 1;
    Ok(c.ones_iter()
        .map(|e| g.edge(e))
        .filter(|&(i, j)| i != top && j != top)
        .map(|(i, j)| [i, j, top])
        .collect())
}

/// For a 1-cycle of `K_{n,n}` (vertices `[n]` then `[n]'`): the 4-cycles
/// `a b' n n'` over its edges `ab'` with `a, b < n`. Their sum is the cycle.
pub fn decompose_squares_bipartite(g: &Graph, c: &EdgeSet) -> Result<Vec<[usize; 4]>> {
    let total = g.vertex_count();
    if !total.is_multiple_of(2) || g.edge_count() != (total / 2) * (total / 2) || total == 0 {
        return Err(Error::InvalidParameter("graph is not K_{n,n}".into()));
    }
    let n = total / 2;
    if g.edges().iter().any(|&(u, v)| u >= n || v < n) {
        return Err(Error::InvalidParameter("graph is not K_{n,n}".into()));
    }
    require_cycle(g, c)?;
    let (top, top_p) = (n - 1, 2 * n - 1);
    Ok(c.ones_iter()
        .map(|e| g.edge(e))
        .filter(|&(a, b)| a != top && b != top_p)
        .map(|(a, b)| [a, b, top, top_p])
        .collect())
}

/// Index helpers for `K~_n`: vertex `i` of `[n]` and `j'` of `[n]'`, 1-based.
fn tilde_vertex(i: usize) -> usize {
    i - 1
}

fn tilde_prime(n: usize, j: usize) -> usize {
    n + j - 1
}

/// One cycle of [`tilde_base`], labelled by its indexing edge `ij'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeBaseElement {
    pub i: usize,
    pub j: usize,
    pub edge: usize,
    pub cycle: EdgeSet,
}

/// The cycles `12'31'ij'` of `K~_n` (as mod-2 sums of closed walks) for edges
/// `ij'` with `i, j > 1` and `(i, j) != (3, 2)`; they form a base.
pub fn tilde_base(n: usize) -> Result<(Graph, Vec<TildeBaseElement>)> {
    if n < 3 {
        return Err(Error::InvalidParameter("tilde base needs n >= 3".into()));
    }
    let g = Graph::tilde_complete(n)?;
    let mut out = Vec::new();
    for i in 2..=n {
        for j in 2..=n {
            if i == j || (i, j) == (3, 2) {
                continue;
            }
            let walk = [
                tilde_vertex(1),
                tilde_prime(n, 2),
                tilde_vertex(3),
                tilde_prime(n, 1),
                tilde_vertex(i),
                tilde_prime(n, j),
            ];
            let cycle = g.closed_walk(&walk)?;
            let edge = g
                .edge_index(tilde_vertex(i), tilde_prime(n, j))
                .expect("ij' is an edge for i != j");
            out.push(TildeBaseElement { i, j, edge, cycle });
        }
    }
    Ok((g, out))
}

/// The fixed subspace `{C : tC = C}` of the cycle space.
#[derive(Clone, Debug)]
pub struct SymmetricCycles {
    pub basis: BitMatrix,
}

impl SymmetricCycles {
    pub fn dimension(&self) -> usize {
        self.basis.row_count()
    }
}

pub fn symmetric_cycle_space(space: &CycleSpace<'_>, t: &Involution<'_>) -> Result<SymmetricCycles> {
    if space.graph() != t.graph() {
        return Err(Error::InvalidParameter("involution acts on a different graph".into()));
    }
    Ok(SymmetricCycles {
        basis: space.basis().fixed_subspace(|c| t.apply(c)),
    })
}

/// A base of the cycle space of `K~_n`: the `t`-fixed hexagon `K~_3`, plus
/// pairs `(B, tB)`.
#[derive(Clone, Debug)]
pub struct TildeSymmetricBase {
    pub fixed: EdgeSet,
    pub pairs: Vec<(EdgeSet, EdgeSet)>,
}

impl TildeSymmetricBase {
    pub fn len(&self) -> usize {
        1 + 2 * self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_matrix(&self) -> BitMatrix {
        let mut rows = vec![self.fixed.clone()];
        for (a, b) in &self.pairs {
            rows.push(a.clone());
            rows.push(b.clone());
        }
        BitMatrix::from_rows(self.fixed.len(), rows).expect("equal lengths")
    }
}

/// Pairs `C_{ij'}` with `C_{23'} + C_{ji'}` for `i > j > 1`,
/// `(i, j) != (3, 2)`; the second member equals `t C_{ij'}`.
pub fn tilde_symmetric_base(n: usize) -> Result<(Graph, TildeSymmetricBase)> {
    let (g, base) = tilde_base(n)?;
    let find = |i: usize, j: usize| {
        base.iter()
            .find(|b| b.i == i && b.j == j)
            .map(|b| b.cycle.clone())
            .expect("indexing edge present")
    };
    let fixed = find(2, 3);
    let t = Involution::part_swap(&g, n)?;
    let mut pairs = Vec::new();
    for i in 3..=n {
        for j in 2..i {
            if (i, j) == (3, 2) {
                continue;
            }
            let c = find(i, j);
            let partner = &fixed + &find(j, i);
            if t.apply(&c) != partner {
                return Err(Error::InvalidParameter(format!(
                    "t C_({i},{j}') differs from C_(2,3') + C_({j},{i}')"
                )));
            }
            pairs.push((c, partner));
        }
    }
    Ok((g, TildeSymmetricBase { fixed, pairs }))
}

/// Splits a chordless 6-cycle `m1 m2' m3 m1' m2 m3'` of `K~_n` (n >= 4)
/// into three 4-cycles through a vertex `a'` outside `{m1, m2, m3}'`.
pub fn split_tilde_hexagon(n: usize, hexagon: &[usize]) -> Result<[Vec<usize>; 3]> {
    if n < 4 || hexagon.len() != 6 {
        return Err(Error::InvalidParameter("need a 6-cycle in K~_n with n >= 4".into()));
    }
    // rotate so the cycle starts in the unprimed part
    let start = hexagon.iter().position(|&v| v < n).ok_or(Error::NotACycle)?;
    let h: Vec<usize> = (0..6).map(|k| hexagon[(start + k) % 6]).collect();
    let (m1, m2, m3) = (h[0], h[4], h[2]);
    let ok = h[1] == m2 + n && h[3] == m1 + n && h[5] == m3 + n;
    if !ok {
        return Err(Error::NotASimpleCycle("not a chordless hexagon of K~_n".into()));
    }
    let a = (0..n)
        .find(|&a| a != m1 && a != m2 && a != m3)
        .expect("n >= 4 leaves a free index");
    let ap = a + n;
    Ok([
        vec![m1, m2 + n, m3, ap],
        vec![m2, m3 + n, m1, ap],
        vec![m3, m1 + n, m2, ap],
    ])
}

/// Chordless decomposition of a 1-cycle of `K~_n` with every hexagon
/// replaced by three 4-cycles; the result uses only 4-cycles when `n >= 4`.
pub fn decompose_tilde_squares(n: usize, g: &Graph, c: &EdgeSet) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for cycle in decompose_chordless(g, c)? {
        if cycle.len() == 6 {
            out.extend(split_tilde_hexagon(n, &cycle)?);
        } else {
            out.push(cycle);
        }
    }
    Ok(out)
}

/// An orientation: `head[e]` is the endpoint edge `e` points to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph<'g> {
    graph: &'g Graph,
    head: Vec<usize>,
}

impl<'g> OrientedGraph<'g> {
    pub fn new(graph: &'g Graph, head: Vec<usize>) -> Result<Self> {
        if head.len() != graph.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: graph.edge_count(),
                found: head.len(),
            });
        }
        for (e, &h) in head.iter().enumerate() {
            let (u, v) = graph.edge(e);
            if h != u && h != v {
                return Err(Error::InvalidParameter(format!("head {h} is not an end of edge {e}")));
            }
        }
        Ok(Self { graph, head })
    }

    /// Every edge `(u, v)`, `u < v`, points to `v`.
    pub fn ascending(graph: &'g Graph) -> Self {
        let head = graph.edges().iter().map(|&(_, v)| v).collect();
        Self { graph, head }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn head(&self, e: usize) -> usize {
        self.head[e]
    }

    pub fn tail(&self, e: usize) -> usize {
        let (u, v) = self.graph.edge(e);
        if self.head[e] == u {
            v
        } else {
            u
        }
    }

    pub fn flipped(&self, e: usize) -> Self {
        let mut head = self.head.clone();
        head[e] = self.tail(e);
        Self {
            graph: self.graph,
            head,
        }
    }
}

/// Integer weights on oriented edges.
pub type IntegerChain = Vec<BigInt>;

/// Kirchhoff rule: incoming weight equals outgoing weight at every vertex.
pub fn is_integer_cycle(og: &OrientedGraph<'_>, z: &[BigInt]) -> bool {
    if z.len() != og.graph().edge_count() {
        return false;
    }
    let mut balance = vec![BigInt::zero(); og.graph().vertex_count()];
    for (e, w) in z.iter().enumerate() {
        balance[og.head(e)] += w;
        balance[og.tail(e)] -= w;
    }
    balance.iter().all(Zero::is_zero)
}

/// The integer 1-cycle agreeing with `cotree` on non-tree edges:
/// `Σ cotree(σ) · Z(σ)`, where `Z(σ)` puts `±1` on the fundamental cycle of
/// `σ` according to whether each edge runs with or against `σ`.
pub fn integer_extend(
    og: &OrientedGraph<'_>,
    forest: &SpanningForest<'_>,
    cotree: &[(usize, BigInt)],
) -> Result<IntegerChain> {
    let g = og.graph();
    if forest.graph() != g {
        return Err(Error::InvalidParameter("forest belongs to a different graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut z = vec![BigInt::zero(); g.edge_count()];
    for (sigma, weight) in cotree {
        if forest.is_tree_edge(*sigma) {
            return Err(Error::TreeEdge(*sigma));
        }
        // walk the cycle starting along sigma, tail -> head, then back
        // through the tree from head to tail
        let (tail, head) = (og.tail(*sigma), og.head(*sigma));
        let mut walk = vec![tail];
        walk.extend(forest.tree_path(head, tail).expect("same component"));
        walk.pop();
        for k in 0..walk.len() {
            let (a, b) = (walk[k], walk[(k + 1) % walk.len()]);
            let e = g.edge_index(a, b).expect("consecutive cycle vertices are adjacent");
            if og.head(e) == b {
                z[e] += weight;
            } else {
                z[e] -= weight;
            }
        }
    }
    Ok(z)
}

/// Transfers an integer chain between orientations by negating the weight
/// on every edge whose orientation differs.
pub fn reorientation_iso(
    from: &OrientedGraph<'_>,
    to: &OrientedGraph<'_>,
    z: &[BigInt],
) -> Result<IntegerChain> {
    if from.graph() != to.graph() {
        return Err(Error::InvalidParameter("orientations of different graphs".into()));
    }
    if z.len() != from.graph().edge_count() {
        return Err(Error::DimensionMismatch {
            expected: from.graph().edge_count(),
            found: z.len(),
        });
    }
    Ok(z.iter()
        .enumerate()
        .map(|(e, w)| if from.head(e) == to.head(e) { w.clone() } else { -w })
        .collect())
}

/// A `±` label per edge; stored as `true` for minus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignAssignment {
    pub minus: BitVector,
}

impl SignAssignment {
    pub fn all_plus(g: &Graph) -> Self {
        Self {
            minus: BitVector::zeros(g.edge_count()),
        }
    }

    /// Inverts the sign of every edge at `v`.
    pub fn flip_vertex(&mut self, g: &Graph, v: usize) {
        for &(_, e) in g.neighbors(v) {
            self.minus.flip(e);
        }
    }
}

/// Canonical representative of the orbit of `s` under vertex flips: all
/// tree edges plus. Sweeps from the root (vertex 0) outwards, flipping a
/// vertex whenever the edge to its parent is minus.
pub fn sign_canonical_form(
    g: &Graph,
    forest: &SpanningForest<'_>,
    s: &SignAssignment,
) -> Result<SignAssignment> {
    if forest.graph() != g {
        return Err(Error::InvalidParameter("forest belongs to a different graph".into()));
    }
    check_len(g, &s.minus)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut out = s.clone();
    for &v in forest.bfs_order() {
        if let Some((_, e)) = forest.parent(v) {
            if out.minus.get(e) {
                out.flip_vertex(g, v);
            }
        }
    }
    Ok(out)
}
