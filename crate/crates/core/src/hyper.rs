//! Simplicial cycles on `[n]` and in 3-uniform hypergraphs, tetrahedron and
//! relation decompositions, rook cycles on `[n]^ℓ` with parallelepipeds,
//! and Betti numbers of hypergraphs.
//!
//! Subsets of `[n]` are `u64` bit masks (so `n <= 64`); vertex `i` is bit
//! `i`, and the distinguished vertex of every avoid-`n` reduction is the
//! last one, `n - 1`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::Graph;

pub fn mask(elements: &[usize]) -> u64 {
    elements.iter().fold(0, |m, &e| m | 1 << e)
}

pub fn elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// The facets of a simplex: the subsets missing exactly one element.
pub fn facets(simplex: u64) -> Vec<u64> {
    elements(simplex).into_iter().map(|i| simplex & !(1 << i)).collect()
}

/// Mod-2 sum of a family of subsets.
pub fn formal_sum<I: IntoIterator<Item = u64>>(sets: I) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for s in sets {
        if !out.remove(&s) {
            out.insert(s);
        }
    }
    out
}

/// Mod-2 sum of the facets of a family of simplices.
pub fn boundary_sum<I: IntoIterator<Item = u64>>(simplices: I) -> BTreeSet<u64> {
    formal_sum(simplices.into_iter().flat_map(facets))
}

fn check_members(n: usize, size: usize, c: &[u64]) -> bool {
    n <= 64
        && c.iter()
            .all(|&m| m.count_ones() as usize == size && (n == 64 || m >> n == 0))
}

/// `c` consists of distinct `(d+1)`-subsets of `[n]` and every `d`-subset
/// lies in an even number of them.
pub fn is_d_cycle(n: usize, d: usize, c: &[u64]) -> bool {
    check_members(n, d + 1, c)
        && formal_sum(c.iter().copied()).len() == c.len()
        && boundary_sum(c.iter().copied()).is_empty()
}

/// Writes a `d`-cycle on `[n]` as the sum of boundaries of the simplices
/// `s ∪ {n}` over its members `s` avoiding the last vertex.
pub fn d_cycle_decompose(n: usize, d: usize, c: &[u64]) -> Result<Vec<u64>> {
    if n == 0 || !is_d_cycle(n, d, c) {
        return Err(Error::NotASimplicialCycle(d));
    }
    let top = 1u64 << (n - 1);
    let out: Vec<u64> = c.iter().filter(|&&s| s & top == 0).map(|&s| s | top).collect();
    if boundary_sum(out.iter().copied()) != formal_sum(c.iter().copied()) {
        return Err(Error::NotASimplicialCycle(d));
    }
    Ok(out)
}

/// Tetrahedra whose sum is the 2-cycle `c` of `[n]`.
pub fn decompose_tetrahedra(n: usize, c: &[u64]) -> Result<Vec<u64>> {
    d_cycle_decompose(n, 2, c)
}

/// 5-subsets whose pentachoron relations sum to the relation `r` on
/// tetrahedra (a family of 4-subsets covering every 3-subset evenly).
pub fn decompose_relation(n: usize, r: &[u64]) -> Result<Vec<u64>> {
    d_cycle_decompose(n, 3, r)
}

/// All `k`-subsets of `[n]` in increasing mask order.
pub fn subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n || n > 63 {
        return out;
    }
    if k == 0 {
        return vec![0];
    }
    let mut m: u64 = (1 << k) - 1;
    let limit = 1u64 << n;
    while m < limit {
        out.push(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

/// Dimension of the 2-cycle space of `[n]` by kernel rank, next to the
/// closed form `C(n-1, 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoCycleCount {
    pub kernel_dimension: usize,
    pub closed_form: usize,
}

pub fn count_2cycles(n: usize) -> Result<TwoCycleCount> {
    if !(3..=40).contains(&n) {
        return Err(Error::InvalidParameter("n must be between 3 and 40".into()));
    }
    let faces = subsets(n, 3);
    let pairs = subsets(n, 2);
    let pair_index: HashMap<u64, usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let rows = faces
        .iter()
        .map(|&f| BitVector::from_indices(pairs.len(), facets(f).into_iter().map(|p| pair_index[&p])))
        .collect();
    let m = BitMatrix::from_rows(pairs.len(), rows)?;
    let closed_form = (n - 1) * (n - 2) * (n - 3) / 6;
    Ok(TwoCycleCount {
        kernel_dimension: m.left_kernel().row_count(),
        closed_form,
    })
}

/// A 3-uniform hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph2 {
    vertex_count: usize,
    faces: Vec<[usize; 3]>,
}

impl Hypergraph2 {
    /// Faces are sorted and must be distinct 3-subsets of the vertex range.
    pub fn new<I: IntoIterator<Item = [usize; 3]>>(vertex_count: usize, faces: I) -> Result<Self> {
        let mut list = Vec::new();
        for mut f in faces {
            f.sort_unstable();
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange { vertex: v, vertex_count });
            }
            if f[0] == f[1] || f[1] == f[2] {
                return Err(Error::InvalidParameter(format!("face {f:?} repeats a vertex")));
            }
            list.push(f);
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate face".into()));
        }
        Ok(Self {
            vertex_count,
            faces: list,
        })
    }

    /// All 3-subsets of `[n]`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(
            n,
            subsets(n, 3).into_iter().map(|m| {
                let e = elements(m);
                [e[0], e[1], e[2]]
            }),
        )
    }

    /// The 7-vertex torus: faces `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
    pub fn seven_vertex_torus() -> Self {
        let faces = (0..7).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]]);
        Self::new(7, faces).expect("distinct faces")
    }

    /// Format: a `V <count>` header, then one `a b c` face per line,
    /// 0-based; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertex_count = None;
        let mut faces = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: i + 1, message };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if vertex_count.is_none() {
                if tokens.len() != 2 || tokens[0] != "V" {
                    return Err(parse_err("expected `V <count>` header".into()));
                }
                vertex_count = Some(
                    tokens[1]
                        .parse::<usize>()
                        .map_err(|e| parse_err(format!("bad vertex count: {e}")))?,
                );
                continue;
            }
            if tokens.len() != 3 {
                return Err(parse_err("expected three vertices".into()));
            }
            let mut f = [0usize; 3];
            for (slot, t) in f.iter_mut().zip(&tokens) {
                *slot = t.parse().map_err(|e| parse_err(format!("bad vertex `{t}`: {e}")))?;
            }
            faces.push(f);
        }
        let vertex_count = vertex_count.ok_or(Error::Parse {
            line: 0,
            message: "missing `V <count>` header".into(),
        })?;
        Self::new(vertex_count, faces)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("V {}\n", self.vertex_count);
        for [a, b, c] in &self.faces {
            out.push_str(&format!("{a} {b} {c}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// The 2-subsets of faces, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let set: BTreeSet<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|&[a, b, c]| [(a, b), (a, c), (b, c)])
            .collect();
        set.into_iter().collect()
    }

    pub fn skeleton(&self) -> Graph {
        Graph::new(self.vertex_count, self.edges()).expect("edges of faces are simple")
    }

    pub fn is_connected(&self) -> bool {
        self.skeleton().is_connected()
    }

    /// Rows are faces, columns are skeleton edges.
    pub fn face_boundary_matrix(&self) -> BitMatrix {
        let g = self.skeleton();
        let rows = self
            .faces
            .iter()
            .map(|&[a, b, c]| {
                BitVector::from_indices(
                    g.edge_count(),
                    [(a, b), (a, c), (b, c)].map(|(u, v)| g.edge_index(u, v).expect("face edge")),
                )
            })
            .collect();
        BitMatrix::from_rows(g.edge_count(), rows).expect("edge-length rows")
    }

    /// Every vertex pair lies in an even number of the chosen faces.
    pub fn is_2cycle(&self, c: &BitVector) -> bool {
        c.len() == self.face_count()
            && self
                .face_boundary_matrix()
                .transpose()
                .mul_vec(c)
                .map(|b| b.is_zero())
                .unwrap_or(false)
    }

    pub fn two_cycle_basis(&self) -> BitMatrix {
        self.face_boundary_matrix().left_kernel()
    }

    pub fn betti_profile(&self) -> BettiProfile {
        let g = self.skeleton();
        let b0 = g.components().count;
        let rank = self.face_boundary_matrix().rank();
        let cycle_dim = g.edge_count() + b0 - g.vertex_count();
        BettiProfile {
            b0,
            b1: cycle_dim - rank,
            b2: self.face_count() - rank,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            faces: self.face_count(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BettiProfile {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl BettiProfile {
    /// `b0 - b1 + b2 = V - E + F`.
    pub fn euler_holds(&self) -> bool {
        self.b0 as i64 - self.b1 as i64 + self.b2 as i64
            == self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

/// Two connected hypergraphs with equal vertex, edge and face counts but
/// different 2-cycle counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub first: Hypergraph2,
    pub second: Hypergraph2,
    pub first_profile: BettiProfile,
    pub second_profile: BettiProfile,
}

impl WitnessPair {
    pub fn is_valid(&self) -> bool {
        let (p, q) = (self.first.betti_profile(), self.second.betti_profile());
        self.first != self.second
            && self.first.is_connected()
            && self.second.is_connected()
            && p == self.first_profile
            && q == self.second_profile
            && (p.vertices, p.edges, p.faces) == (q.vertices, q.edges, q.faces)
            && p.b2 != q.b2
    }
}

/// Searches vertex counts `4..=max_vertices`, and for each, face counts in
/// increasing order, over all face subsets of the complete hypergraph.
/// Candidates are grouped by `(V, E, F)`; the first group holding two
/// different 2-cycle dimensions yields the witness.
pub fn find_betti_witness_pair(max_vertices: usize) -> Option<WitnessPair> {
    for v in 4..=max_vertices.min(6) {
        let universe: Vec<[usize; 3]> = subsets(v, 3)
            .into_iter()
            .map(|m| {
                let e = elements(m);
                [e[0], e[1], e[2]]
            })
            .collect();
        for f in 1..=universe.len() {
            let mut seen: BTreeMap<usize, (usize, Hypergraph2)> = BTreeMap::new();
            for choice in subsets(universe.len(), f) {
                let h = Hypergraph2::new(v, elements(choice).into_iter().map(|i| universe[i]))
                    .expect("distinct faces");
                if !h.is_connected() {
                    continue;
                }
                let p = h.betti_profile();
                match seen.get(&p.edges) {
                    None => {
                        seen.insert(p.edges, (p.b2, h));
                    }
                    Some((b2, other)) if *b2 != p.b2 => {
                        let first_profile = other.betti_profile();
                        return Some(WitnessPair {
                            first: other.clone(),
                            second: h,
                            first_profile,
                            second_profile: p,
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    None
}

/// The grid `[n]^ℓ`, indexed in mixed radix with the first coordinate most
/// significant. Coordinates are 0-based; the distinguished value is `n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RookGrid {
    n: usize,
    l: usize,
}

/// Two values per coordinate, `P_1 × ... × P_ℓ`.
pub type Parallelepiped = Vec<[usize; 2]>;

impl RookGrid {
    pub fn new(n: usize, l: usize) -> Result<Self> {
        if n < 2 || l == 0 || (n as f64).powi(l as i32) > 1e7 {
            return Err(Error::InvalidParameter("grid needs n >= 2, l >= 1 and at most 10^7 cells".into()));
        }
        Ok(Self { n, l })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.l
    }

    pub fn cell_count(&self) -> usize {
        self.n.pow(self.l as u32)
    }

    pub fn coords(&self, mut i: usize) -> Vec<usize> {
        let mut out = vec![0; self.l];
        for slot in out.iter_mut().rev() {
            *slot = i % self.n;
            i /= self.n;
        }
        out
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        coords.iter().fold(0, |acc, &c| acc * self.n + c)
    }

    pub fn empty_set(&self) -> BitVector {
        BitVector::zeros(self.cell_count())
    }

    /// Every axis-parallel line meets `s` evenly.
    pub fn is_rook_cycle(&self, s: &BitVector) -> bool {
        if s.len() != self.cell_count() {
            return false;
        }
        let mut odd: HashMap<(usize, usize), bool> = HashMap::new();
        for i in s.ones_iter() {
            let c = self.coords(i);
            for axis in 0..self.l {
                let mut key = c.clone();
                key[axis] = 0;
                *odd.entry((axis, self.index(&key))).or_default() ^= true;
            }
        }
        odd.values().all(|&o| !o)
    }

    fn valid_sides(&self, p: &[[usize; 2]]) -> Result<()> {
        if p.len() != self.l || p.iter().any(|s| s[0] == s[1] || s[0] >= self.n || s[1] >= self.n) {
            return Err(Error::InvalidParameter(format!("{p:?} is not a parallelepiped")));
        }
        Ok(())
    }

    pub fn parallelepiped(&self, p: &[[usize; 2]]) -> Result<BitVector> {
        self.valid_sides(p)?;
        let mut out = self.empty_set();
        for bits in 0..(1usize << self.l) {
            let c: Vec<usize> = (0..self.l).map(|j| p[j][bits >> j & 1]).collect();
            out.set(self.index(&c), true);
        }
        Ok(out)
    }

    /// `P(a) = {top, a_1} × ... × {top, a_ℓ}` for `a` with entries below `top`.
    pub fn corner_parallelepiped(&self, a: &[usize]) -> Result<BitVector> {
        let top = self.n - 1;
        let sides: Vec<[usize; 2]> = a.iter().map(|&x| [x, top]).collect();
        self.parallelepiped(&sides)
    }

    /// The cells of `s` in `[n-1]^ℓ`; the `P(a)` over them sum to `s`.
    pub fn decompose_parallelepipeds(&self, s: &BitVector) -> Result<Vec<Vec<usize>>> {
        if !self.is_rook_cycle(s) {
            return Err(Error::NotARookCycle);
        }
        let top = self.n - 1;
        let corners: Vec<Vec<usize>> = s
            .ones_iter()
            .map(|i| self.coords(i))
            .filter(|c| c.iter().all(|&x| x < top))
            .collect();
        let mut sum = self.empty_set();
        for a in &corners {
            sum += &self.corner_parallelepiped(a)?;
        }
        if &sum != s {
            return Err(Error::NotARookCycle);
        }
        Ok(corners)
    }

    /// Dimension of the rook-cycle space by kernel rank.
    pub fn rook_cycle_kernel_dimension(&self) -> usize {
        let mut line_index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut rows = Vec::new();
        let mut keys = Vec::new();
        for i in 0..self.cell_count() {
            let c = self.coords(i);
            let mut cell_lines = Vec::new();
            for axis in 0..self.l {
                let mut key = c.clone();
                key[axis] = 0;
                let k = (axis, self.index(&key));
                let next = line_index.len();
                cell_lines.push(*line_index.entry(k).or_insert(next));
            }
            keys.push(cell_lines);
        }
        for lines in keys {
            rows.push(BitVector::from_indices(line_index.len(), lines));
        }
        BitMatrix::from_rows(line_index.len(), rows).expect("line-length rows").left_kernel().row_count()
    }

    /// `(n-1)^ℓ`.
    pub fn rook_cycle_closed_form(&self) -> usize {
        (self.n - 1).pow(self.l as u32)
    }

    fn canonical(&self, p: &[[usize; 2]]) -> Parallelepiped {
        p.iter().map(|&[a, b]| [a.min(b), a.max(b)]).collect()
    }

    /// Cell-set sum of a formal sum of parallelepipeds.
    pub fn cells_of(&self, family: &[Parallelepiped]) -> Result<BitVector> {
        let mut out = self.empty_set();
        for p in family {
            out += &self.parallelepiped(p)?;
        }
        Ok(out)
    }

    /// Reduces a zero-sum family of parallelepipeds to the empty family by
    /// base relations: a parallelepiped whose side `{a, b}` on some axis
    /// avoids `top` is traded for the two with sides `{a, top}`, `{b, top}`.
    /// Returns the relations used; their formal sum is the input.
    pub fn decompose_parallelepiped_relation(&self, family: &[Parallelepiped]) -> Result<Vec<BaseRelation>> {
        for p in family {
            self.valid_sides(p)?;
        }
        if !self.cells_of(family)?.is_zero() {
            return Err(Error::NotARelation);
        }
        let top = self.n - 1;
        let mut current: BTreeSet<Parallelepiped> = BTreeSet::new();
        for p in family {
            let c = self.canonical(p);
            if !current.remove(&c) {
                current.insert(c);
            }
        }
        let mut used = Vec::new();
        loop {
            let next = current.iter().find_map(|p| {
                p.iter()
                    .position(|s| s[1] != top)
                    .map(|axis| (p.clone(), axis))
            });
            let Some((p, axis)) = next else { break };
            let [a, b] = p[axis];
            let rel = BaseRelation {
                axis,
                rest: p.iter().enumerate().filter(|&(j, _)| j != axis).map(|(_, &s)| s).collect(),
                values: [a, b, top],
            };
            for q in rel.members() {
                let q = self.canonical(&q);
                if !current.remove(&q) {
                    current.insert(q);
                }
            }
            used.push(rel);
        }
        if !current.is_empty() {
            return Err(Error::NotARelation);
        }
        Ok(used)
    }
}

/// `P × {a,b} + P × {b,c} + P × {c,a} = 0` with the varying side placed on
/// coordinate `axis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseRelation {
    pub axis: usize,
    pub rest: Vec<[usize; 2]>,
    pub values: [usize; 3],
}

impl BaseRelation {
    pub fn members(&self) -> [Parallelepiped; 3] {
        let [a, b, c] = self.values;
        [[a, b], [b, c], [c, a]].map(|side| {
            let mut p = self.rest.clone();
            p.insert(self.axis, side);
            p
        })
    }
}

/// Edge `ab'` of `K_{n,n}` (vertices `[n]` then `[n]'`) to cell `(a, b)`.
pub fn bipartite_cycle_to_rook(n: usize, g: &Graph, c: &BitVector) -> Result<BitVector> {
    if g.vertex_count() != 2 * n || g.edge_count() != n * n || c.len() != g.edge_count() {
        return Err(Error::InvalidParameter("expected K_{n,n} and one of its edge sets".into()));
    }
    let grid = RookGrid::new(n, 2)?;
    let mut out = grid.empty_set();
    for e in c.ones_iter() {
        let (a, b) = g.edge(e);
        out.set(grid.index(&[a, b - n]), true);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedra_and_cycles() {
        let t = facets(mask(&[0, 1, 2, 3]));
        assert_eq!(t.len(), 4);
        assert!(is_d_cycle(4, 2, &t));
        assert!(!is_d_cycle(4, 2, &[mask(&[0, 1, 2])]));
        assert!(is_d_cycle(4, 2, &[]));
        let torus = Hypergraph2::seven_vertex_torus();
        assert_eq!(torus.face_count(), 14);
        let all = BitVector::ones(14);
        assert!(torus.is_2cycle(&all));
    }

    #[test]
    fn tetrahedron_decomposition() {
        let t = facets(mask(&[0, 1, 2, 3]));
        let mut out = decompose_tetrahedra(5, &t).unwrap();
        out.sort();
        let mut expect: Vec<u64> = [[0, 1, 2, 4], [0, 1, 3, 4], [0, 2, 3, 4], [1, 2, 3, 4]]
            .iter()
            .map(|s| mask(s))
            .collect();
        expect.sort();
        assert_eq!(out, expect);
        assert!(decompose_tetrahedra(5, &[]).unwrap().is_empty());
        let through_top = facets(mask(&[0, 1, 2, 4]));
        assert_eq!(decompose_tetrahedra(5, &through_top).unwrap(), vec![mask(&[0, 1, 2, 4])]);
        assert!(decompose_tetrahedra(5, &[mask(&[0, 1, 2])]).is_err());
    }

    #[test]
    fn relation_decomposition() {
        let r = facets(mask(&[0, 1, 2, 3, 4]));
        assert_eq!(decompose_relation(5, &r).unwrap(), vec![mask(&[0, 1, 2, 3, 4])]);
        assert!(decompose_relation(5, &[]).unwrap().is_empty());
        let t = facets(mask(&[0, 1, 2, 3]));
        assert_eq!(decompose_relation(5, &t[..1]), Err(Error::NotASimplicialCycle(3)));
    }

    #[test]
    fn pentachoron_identity() {
        for a in subsets(6, 5) {
            let tetrahedra = facets(a);
            assert!(boundary_sum(tetrahedra).is_empty());
        }
    }

    #[test]
    fn first_dimension_matches_triangles() {
        let c = vec![mask(&[0, 1]), mask(&[1, 2]), mask(&[0, 2])];
        assert_eq!(d_cycle_decompose(4, 1, &c).unwrap().len(), 3);
        let tri = d_cycle_decompose(3, 1, &c).unwrap();
        assert_eq!(tri, vec![mask(&[0, 1, 2])]);
    }

    #[test]
    fn two_cycle_counts() {
        for n in 3..=7 {
            let c = count_2cycles(n).unwrap();
            assert_eq!(c.kernel_dimension, c.closed_form);
        }
        assert_eq!(count_2cycles(4).unwrap().closed_form, 1);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(5, 3).len(), 10);
        assert_eq!(subsets(4, 0), vec![0]);
        assert!(subsets(3, 4).is_empty());
    }

    #[test]
    fn betti_examples() {
        let p = Hypergraph2::seven_vertex_torus().betti_profile();
        assert_eq!((p.b0, p.b1, p.b2), (1, 2, 1));
        assert_eq!((p.vertices, p.edges, p.faces), (7, 21, 14));
        assert!(p.euler_holds());
        let single = Hypergraph2::new(3, [[0, 1, 2]]).unwrap().betti_profile();
        assert_eq!((single.b0, single.b1, single.b2), (1, 0, 0));
        let tet = Hypergraph2::complete(4).unwrap().betti_profile();
        assert_eq!((tet.b0, tet.b1, tet.b2), (1, 0, 1));
        let isolated = Hypergraph2::new(5, [[0, 1, 2]]).unwrap().betti_profile();
        assert_eq!(isolated.b0, 3);
        assert!(isolated.euler_holds());
    }

    #[test]
    fn hypergraph_text_round_trip() {
        let h = Hypergraph2::seven_vertex_torus();
        assert_eq!(Hypergraph2::parse(&h.to_text()).unwrap(), h);
        assert!(matches!(Hypergraph2::parse("V 3\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(Hypergraph2::new(3, [[0, 1, 1]]).is_err());
        assert!(Hypergraph2::new(3, [[0, 1, 2], [2, 1, 0]]).is_err());
    }

    #[test]
    fn witness_search() {
        let w = find_betti_witness_pair(6).expect("a witness exists on at most 6 vertices");
        assert!(w.is_valid());
        assert!(find_betti_witness_pair(3).is_none());
    }

    #[test]
    fn rook_basics() {
        let g = RookGrid::new(3, 2).unwrap();
        let p = g.parallelepiped(&[[0, 1], [0, 1]]).unwrap();
        assert!(g.is_rook_cycle(&p));
        assert!(!g.is_rook_cycle(&BitVector::unit(9, 0)));
        assert!(g.is_rook_cycle(&g.empty_set()));
        let pa = g.corner_parallelepiped(&[0, 0]).unwrap();
        assert_eq!(g.decompose_parallelepipeds(&pa).unwrap(), vec![vec![0, 0]]);
        let g2 = RookGrid::new(2, 2).unwrap();
        let full = BitVector::ones(4);
        assert_eq!(g2.decompose_parallelepipeds(&full).unwrap(), vec![vec![0, 0]]);
        assert_eq!(g.decompose_parallelepipeds(&BitVector::unit(9, 0)), Err(Error::NotARookCycle));
    }

    #[test]
    fn rook_dimensions() {
        for (n, l) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let g = RookGrid::new(n, l).unwrap();
            assert_eq!(g.rook_cycle_kernel_dimension(), g.rook_cycle_closed_form());
        }
    }

    #[test]
    fn base_relation_reduction() {
        let g = RookGrid::new(3, 2).unwrap();
        let rel = BaseRelation {
            axis: 1,
            rest: vec![[0, 2]],
            values: [0, 1, 2],
        };
        let family = rel.members().to_vec();
        assert!(g.cells_of(&family).unwrap().is_zero());
        let used = g.decompose_parallelepiped_relation(&family).unwrap();
        assert_eq!(used.len(), 1);
        assert!(g.decompose_parallelepiped_relation(&[]).unwrap().is_empty());
        assert_eq!(
            g.decompose_parallelepiped_relation(&[vec![[0, 1], [0, 1]]]),
            Err(Error::NotARelation)
        );
    }

    #[test]
    fn bipartite_dictionary() {
        let n = 3;
        let k = Graph::complete_bipartite(n, n).unwrap();
        let grid = RookGrid::new(n, 2).unwrap();
        let sq = k.simple_cycle(&[0, 3, 1, 4]).unwrap();
        let r = bipartite_cycle_to_rook(n, &k, &sq).unwrap();
        assert_eq!(r, grid.parallelepiped(&[[0, 1], [0, 1]]).unwrap());
    }
}
