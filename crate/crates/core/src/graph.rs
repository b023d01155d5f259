//! Finite simple graphs with canonical edge indexing, spanning forests,
//! fundamental cycles and edge-preserving involutions.
//!
//! Edges are stored as `(u, v)` with `u < v` and indexed in lexicographic
//! order; every basis and decomposition in the crate is derived from this
//! ordering, so outputs are reproducible.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// A subset of the edges of a graph, as a vector over edge indices.
pub type EdgeSet = BitVector;

#[derive(Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    adjacency: Vec<Vec<(usize, usize)>>,
    labels: Vec<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, normalising each pair to `(min, max)` and sorting.
    /// Loops, duplicates and out-of-range vertices are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let index = list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in list.iter().enumerate() {
            adjacency[u].push((v, i));
            adjacency[v].push((u, i));
        }
        Ok(Self {
            vertex_count,
            edges: list,
            index,
            adjacency,
            labels: (0..vertex_count).map(|v| v.to_string()).collect(),
        })
    }

    /// Replaces the display labels of the vertices.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::DimensionMismatch {
                expected: self.vertex_count,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::new(vertex_count, []).expect("no edges")
    }

    /// `K_n` on vertices labelled `1..=n`.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
        }
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::new(n, edges)?.with_labels(one_based(n))
    }

    /// `K_{m,n}`: part `[m]` is `0..m`, part `[n]'` is `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter(
                "complete bipartite graph needs both parts nonempty".into(),
            ));
        }
        let edges = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j)));
        Self::new(m + n, edges)?.with_labels(bipartite_labels(m, n))
    }

    /// The cycle `1 2 ... n`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("cycle graph needs n >= 3".into()));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_labels(one_based(n))
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("path needs n >= 1".into()));
        }
        Self::new(n, (1..n).map(|i| (i - 1, i)))?.with_labels(one_based(n))
    }

    /// Hub `0`, rim `1..=n`, edges `{n,1}`, `{0,j}` and `{j,j+1}`.
    pub fn wheel(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("wheel needs n >= 3".into()));
        }
        let mut edges: Vec<_> = (1..=n).map(|j| (0, j)).collect();
        edges.extend((1..n).map(|j| (j, j + 1)));
        edges.push((n, 1));
        Self::new(n + 1, edges)
    }

    /// `K_{3,1}`: leaves `1, 2, 3` and centre `1'` (index 3).
    pub fn triod() -> Self {
        Self::complete_bipartite(3, 1).expect("valid parameters")
    }

    /// `K_{n,n}` minus the matching `jj'`.
    pub fn tilde_complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("tilde complete graph needs n >= 2".into()));
        }
        let edges = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)));
        Self::new(2 * n, edges)?.with_labels(bipartite_labels(n, n))
    }

    /// A tree given by its edge list; rejects anything that is not connected
    /// and acyclic.
    pub fn tree<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let g = Self::new(vertex_count, edges)?;
        if vertex_count == 0 || g.edge_count() + 1 != vertex_count || g.components().count != 1 {
            return Err(Error::InvalidParameter("edge list is not a tree".into()));
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        let labels = self
            .labels
            .iter()
            .cloned()
            .chain(other.labels.iter().map(|l| format!("{l}*")))
            .collect();
        Graph::new(shift + other.vertex_count, edges)
            .expect("union of simple graphs is simple")
            .with_labels(labels)
            .expect("label count matches")
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let g = Graph::new(self.vertex_count, self.edges.iter().copied().chain([(u, v)]))?;
        g.with_labels(self.labels.clone())
    }

    /// Parses the edge-list text format: a `V <count>` header, then one
    /// `u v` pair per line (0-based). `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut vertex_count = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match vertex_count {
                None => {
                    if fields.len() != 2 || fields[0] != "V" {
                        return Err(err("expected header `V <count>`".into()));
                    }
                    let n = fields[1]
                        .parse::<usize>()
                        .map_err(|e| err(format!("bad vertex count: {e}")))?;
                    vertex_count = Some(n);
                }
                Some(_) => {
                    if fields.len() != 2 {
                        return Err(err(format!("expected `u v`, got `{line}`")));
                    }
                    let parse = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|e| err(format!("bad vertex `{s}`: {e}")))
                    };
                    edges.push((parse(fields[0])?, parse(fields[1])?));
                }
            }
        }
        let n = vertex_count.ok_or(Error::Parse {
            line: 0,
            message: "missing `V <count>` header".into(),
        })?;
        Graph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("V {}\n", self.vertex_count);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// `(neighbour, edge index)` pairs in increasing edge-index order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_label(&self, e: usize) -> String {
        let (u, v) = self.edges[e];
        format!("{}-{}", self.labels[u], self.labels[v])
    }

    pub fn edges_share_vertex(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::zeros(self.edge_count())
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::ones(self.edge_count())
    }

    /// Vertices meeting at least one edge of `c`.
    pub fn vertex_support(&self, c: &EdgeSet) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count];
        for e in c.ones_iter() {
            let (u, v) = self.edges[e];
            seen[u] = true;
            seen[v] = true;
        }
        seen
    }

    /// Mod-2 degree of every vertex in the edge set.
    pub fn odd_vertices(&self, c: &EdgeSet) -> Vec<usize> {
        let mut parity = vec![false; self.vertex_count];
        for e in c.ones_iter() {
            let (u, v) = self.edges[e];
            parity[u] ^= true;
            parity[v] ^= true;
        }
        (0..self.vertex_count).filter(|&v| parity[v]).collect()
    }

    /// Vertex-edge incidence matrix: one row per vertex over edge columns.
    pub fn incidence_matrix(&self) -> BitMatrix {
        let mut rows = vec![BitVector::zeros(self.edge_count()); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            rows[u].set(e, true);
            rows[v].set(e, true);
        }
        BitMatrix::from_rows(self.edge_count(), rows).expect("rows sized to edge count")
    }

    pub fn components(&self) -> Components {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        for start in 0..self.vertex_count {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adjacency[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        Components { count, label }
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.components().count == 1
    }

    /// Greedy maximal forest in edge-index order.
    pub fn spanning_forest(&self) -> SpanningForest<'_> {
        SpanningForest::new(self)
    }

    /// Edge set of a closed walk `w_0 w_1 ... w_{k-1} w_0`, summed mod 2.
    pub fn closed_walk(&self, walk: &[usize]) -> Result<EdgeSet> {
        let mut c = self.empty_edge_set();
        if walk.is_empty() {
            return Ok(c);
        }
        for i in 0..walk.len() {
            let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
            let e = self.edge_index(a, b).ok_or(Error::NotAnEdge(a, b))?;
            c.flip(e);
        }
        Ok(c)
    }

    /// Edge set of the simple cycle through the given vertices in order.
    pub fn simple_cycle(&self, vertices: &[usize]) -> Result<EdgeSet> {
        if vertices.len() < 3 {
            return Err(Error::NotASimpleCycle("fewer than 3 vertices".into()));
        }
        let mut seen = vec![false; self.vertex_count];
        for &v in vertices {
            if v >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: self.vertex_count,
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotASimpleCycle(format!("vertex {v} repeats")));
            }
        }
        self.closed_walk(vertices)
    }

    /// Orders the edges of a simple cycle into its vertex sequence, starting
    /// from the lowest vertex and continuing towards its lower neighbour.
    pub fn cycle_vertices(&self, c: &EdgeSet) -> Result<Vec<usize>> {
        let edges = c.support();
        if edges.len() < 3 {
            return Err(Error::NotASimpleCycle("fewer than 3 edges".into()));
        }
        let mut nbrs: HashMap<usize, Vec<usize>> = HashMap::new();
        for &e in &edges {
            let (u, v) = self.edges[e];
            nbrs.entry(u).or_default().push(v);
            nbrs.entry(v).or_default().push(u);
        }
        if nbrs.values().any(|n| n.len() != 2) {
            return Err(Error::NotASimpleCycle("a vertex does not have degree 2".into()));
        }
        let start = *nbrs.keys().min().expect("nonempty");
        let first = *nbrs[&start].iter().min().expect("degree 2");
        let mut order = vec![start];
        let (mut prev, mut cur) = (start, first);
        while cur != start {
            order.push(cur);
            let n = &nbrs[&cur];
            let next = if n[0] == prev { n[1] } else { n[0] };
            prev = cur;
            cur = next;
        }
        if order.len() != edges.len() {
            return Err(Error::NotASimpleCycle("edge set is not connected".into()));
        }
        Ok(order)
    }

    /// All simple cycles, each listed once as a vertex sequence starting at
    /// its smallest vertex, with the second vertex smaller than the last.
    pub fn simple_cycles(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut on_path = vec![false; self.vertex_count];
        for start in 0..self.vertex_count {
            let mut path = vec![start];
            on_path[start] = true;
            self.extend_cycles(start, &mut path, &mut on_path, &mut out, cap)?;
            on_path[start] = false;
        }
        Ok(out)
    }

    fn extend_cycles(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        let last = *path.last().expect("path starts nonempty");
        for &(w, _) in &self.adjacency[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                if out.len() == cap {
                    return Err(Error::EnumerationCap(cap));
                }
                out.push(path.clone());
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                self.extend_cycles(start, path, on_path, out, cap)?;
                path.pop();
                on_path[w] = false;
            }
        }
        Ok(())
    }
}

fn one_based(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn bipartite_labels(m: usize, n: usize) -> Vec<String> {
    (1..=m)
        .map(|i| i.to_string())
        .chain((1..=n).map(|j| format!("{j}'")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub label: Vec<usize>,
}

/// A maximal forest chosen greedily in edge-index order, rooted at the
/// smallest vertex of each component.
#[derive(Clone, Debug)]
pub struct SpanningForest<'g> {
    graph: &'g Graph,
    in_tree: Vec<bool>,
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
    order: Vec<usize>,
    components: Components,
}

impl<'g> SpanningForest<'g> {
    fn new(graph: &'g Graph) -> Self {
        let n = graph.vertex_count();
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut [usize], mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        let mut in_tree = vec![false; graph.edge_count()];
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
            if ru != rv {
                dsu[ru.max(rv)] = ru.min(rv);
                in_tree[e] = true;
            }
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for root in 0..n {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &(w, e) in graph.neighbors(v) {
                    if in_tree[e] && !visited[w] {
                        visited[w] = true;
                        parent[w] = Some((v, e));
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        Self {
            graph,
            in_tree,
            parent,
            depth,
            order,
            components: graph.components(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.in_tree[e]
    }

    pub fn tree_edges(&self) -> Vec<usize> {
        (0..self.in_tree.len()).filter(|&e| self.in_tree[e]).collect()
    }

    pub fn tree_edge_set(&self) -> EdgeSet {
        EdgeSet::from_bools(&self.in_tree)
    }

    pub fn non_tree_edges(&self) -> Vec<usize> {
        (0..self.in_tree.len()).filter(|&e| !self.in_tree[e]).collect()
    }

    pub fn component_count(&self) -> usize {
        self.components.count
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.components.label[v]
    }

    /// Parent vertex and connecting tree edge; `None` at roots.
    pub fn parent(&self, v: usize) -> Option<(usize, usize)> {
        self.parent[v]
    }

    /// Vertices in breadth-first order from the roots.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    /// The unique tree path from `u` to `v` as a vertex sequence.
    pub fn tree_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        if self.component_of(u) != self.component_of(v) {
            return None;
        }
        let (mut a, mut b) = (u, v);
        let mut head = vec![a];
        let mut tail = vec![b];
        while a != b {
            if self.depth[a] >= self.depth[b] {
                a = self.parent[a].expect("non-root").0;
                head.push(a);
            } else {
                b = self.parent[b].expect("non-root").0;
                tail.push(b);
            }
        }
        tail.pop();
        head.extend(tail.into_iter().rev());
        Some(head)
    }

    /// Vertex sequence of the fundamental cycle of a non-tree edge `uv`,
    /// starting `v, ..., u` along the tree so that the closing step is the
    /// edge itself traversed `u -> v`.
    pub fn fundamental_cycle_vertices(&self, e: usize) -> Result<Vec<usize>> {
        if self.in_tree[e] {
            return Err(Error::TreeEdge(e));
        }
        let (u, v) = self.graph.edge(e);
        Ok(self.tree_path(v, u).expect("ends of an edge share a component"))
    }

    /// The non-tree edge together with the tree path joining its ends.
    pub fn fundamental_cycle(&self, e: usize) -> Result<EdgeSet> {
        let walk = self.fundamental_cycle_vertices(e)?;
        self.graph.closed_walk(&walk)
    }
}

/// A vertex permutation of order at most two that maps edges to edges.
#[derive(Clone, Debug)]
pub struct Involution<'g> {
    graph: &'g Graph,
    image: Vec<usize>,
    edge_image: Vec<usize>,
}

impl<'g> Involution<'g> {
    pub fn new(graph: &'g Graph, image: Vec<usize>) -> Result<Self> {
        let n = graph.vertex_count();
        if image.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: image.len(),
            });
        }
        for v in 0..n {
            if image[v] >= n || image[image[v]] != v {
                return Err(Error::NotAnInvolution(format!("vertex {v} is not swapped back")));
            }
        }
        let edge_image = graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                graph
                    .edge_index(image[u], image[v])
                    .ok_or_else(|| Error::NotAnInvolution(format!("edge {u}-{v} has no image")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            graph,
            image,
            edge_image,
        })
    }

    pub fn identity(graph: &'g Graph) -> Self {
        Self::new(graph, (0..graph.vertex_count()).collect()).expect("identity is an involution")
    }

    /// `j <-> j'` on a graph whose vertices are `[n]` followed by `[n]'`.
    pub fn part_swap(graph: &'g Graph, n: usize) -> Result<Self> {
        if graph.vertex_count() != 2 * n {
            return Err(Error::InvalidParameter(format!(
                "part swap needs 2*{n} vertices, graph has {}",
                graph.vertex_count()
            )));
        }
        Self::new(graph, (0..2 * n).map(|v| (v + n) % (2 * n)).collect())
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn vertex(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn edge(&self, e: usize) -> usize {
        self.edge_image[e]
    }

    pub fn edge_permutation(&self) -> &[usize] {
        &self.edge_image
    }

    pub fn apply(&self, c: &EdgeSet) -> EdgeSet {
        c.permuted(&self.edge_image, self.graph.edge_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tilde_three_is_a_hexagon() {
        let g = Graph::tilde_complete(3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        // 1 2' 3 1' 2 3'
        let hex = g.simple_cycle(&[0, 4, 2, 3, 1, 5]).unwrap();
        assert_eq!(hex, g.all_edges());
    }

    #[test]
    fn standard_sizes() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        let w4 = Graph::wheel(4).unwrap();
        assert_eq!((w4.vertex_count(), w4.edge_count()), (5, 8));
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(k33.label(3), "1'");
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::wheel(2).is_err());
        assert!(Graph::complete(0).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
        assert!(Graph::tree(4, [(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn component_counts() {
        assert_eq!(Graph::path(4).unwrap().components().count, 1);
        let two = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap());
        let comps = two.components();
        assert_eq!(comps.count, 2);
        assert_eq!(comps.label[0], comps.label[2]);
        assert_ne!(comps.label[0], comps.label[3]);
        assert_eq!(Graph::empty(5).components().count, 5);
    }

    #[test]
    fn greedy_forest() {
        let tree = Graph::tree(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(tree.spanning_forest().tree_edges().len(), 3);

        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.spanning_forest().tree_edges().len(), 2);

        let k4 = Graph::complete(4).unwrap();
        let f = k4.spanning_forest();
        let tree: Vec<_> = f.tree_edges().iter().map(|&e| k4.edge(e)).collect();
        assert_eq!(tree, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn fundamental_cycles() {
        let k4 = Graph::complete(4).unwrap();
        let f = k4.spanning_forest();
        let e23 = k4.edge_index(1, 2).unwrap();
        let c = f.fundamental_cycle(e23).unwrap();
        let expect = EdgeSet::from_indices(
            6,
            [e23, k4.edge_index(0, 1).unwrap(), k4.edge_index(0, 2).unwrap()],
        );
        assert_eq!(c, expect);
        assert_eq!(f.fundamental_cycle(0), Err(Error::TreeEdge(0)));

        let c5 = Graph::cycle(5).unwrap();
        let f5 = c5.spanning_forest();
        let e = f5.non_tree_edges()[0];
        assert_eq!(f5.fundamental_cycle(e).unwrap(), c5.all_edges());

        let hex = Graph::tilde_complete(3).unwrap();
        let fh = hex.spanning_forest();
        assert_eq!(fh.non_tree_edges().len(), 1);
        assert_eq!(fh.fundamental_cycle(fh.non_tree_edges()[0]).unwrap(), hex.all_edges());
    }

    #[test]
    fn part_swap_on_tilde() {
        let g = Graph::tilde_complete(3).unwrap();
        let t = Involution::part_swap(&g, 3).unwrap();
        assert_eq!(t.apply(&g.all_edges()), g.all_edges());
        let id = Involution::identity(&g);
        let c = EdgeSet::from_indices(6, [0, 3]);
        assert_eq!(id.apply(&c), c);
    }

    #[test]
    fn part_swap_moves_named_cycle() {
        // t(1 2' 3 1' i j') = 1' 2 3' 1 i' j, here with i = 4, j = 2 in K~_4
        let n = 4;
        let g = Graph::tilde_complete(n).unwrap();
        let t = Involution::part_swap(&g, n).unwrap();
        let p = |j: usize| n + j - 1;
        let u = |i: usize| i - 1;
        let c = g.closed_walk(&[u(1), p(2), u(3), p(1), u(4), p(2)]).unwrap();
        let tc = g.closed_walk(&[p(1), u(2), p(3), u(1), p(4), u(2)]).unwrap();
        assert_eq!(t.apply(&c), tc);
    }

    #[test]
    fn involution_validation() {
        let p3 = Graph::path(3).unwrap();
        assert!(Involution::new(&p3, vec![1, 2, 0]).is_err());
        // swapping the ends of a path is fine; swapping an end with the middle is not
        assert!(Involution::new(&p3, vec![2, 1, 0]).is_ok());
        assert!(Involution::new(&p3, vec![1, 0, 2]).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# triangle\nV 3\n0 1\n1 2 # closing\n2 0\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::cycle(3).unwrap());
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(matches!(
            Graph::parse_edge_list("0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("V 2\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(Graph::parse_edge_list("").is_err());
        assert_eq!(Graph::parse_edge_list("V 2\n").unwrap().edge_count(), 0);
    }

    #[test]
    fn simple_cycle_counts() {
        assert_eq!(Graph::complete(4).unwrap().simple_cycles(100).unwrap().len(), 7);
        assert_eq!(Graph::complete(5).unwrap().simple_cycles(100).unwrap().len(), 37);
        assert_eq!(Graph::complete_bipartite(3, 3).unwrap().simple_cycles(100).unwrap().len(), 15);
        assert_eq!(
            Graph::complete(5).unwrap().simple_cycles(10),
            Err(Error::EnumerationCap(10))
        );
        assert!(Graph::path(5).unwrap().simple_cycles(10).unwrap().is_empty());
    }

    #[test]
    fn cycle_vertex_order() {
        let k5 = Graph::complete(5).unwrap();
        let c = k5.simple_cycle(&[3, 1, 4, 2]).unwrap();
        assert_eq!(k5.cycle_vertices(&c).unwrap(), vec![1, 3, 2, 4]);
        let two = &k5.simple_cycle(&[0, 1, 2]).unwrap() + &k5.simple_cycle(&[0, 3, 4]).unwrap();
        assert!(k5.cycle_vertices(&two).is_err());
    }
}
