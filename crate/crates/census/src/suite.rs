//! The verification suite: fourteen criteria, each a list of exact
//! expected-versus-computed items.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Display;
use std::thread;

use cyclespace::cellular::{
    bipartite_symmetric_generators, bridged_complete_pair, is_cellular_2cycle, is_cellular_2cycle_by_parity,
    symmetric_two_cycle_basis, symmetric_two_cycles, torus_span_gap, two_cycle_kernel, vertex_disjoint_torus_span,
    TwoCycleSpace,
};
use cyclespace::cycles::{
    integer_extend, is_integer_cycle, reorientation_iso, sign_canonical_form, symmetric_cycle_space, CycleSpace,
    IntegerChain, OrientedGraph, SignAssignment,
};
use cyclespace::homology::{
    h1_mod_boundaries, kunneth_pairs_independent, kunneth_reduce, span_membership_mod_boundaries,
    symmetric_correspondence_holds, symmetric_cycle_basis, BoundarySpace,
};
use cyclespace::hyper::{
    bipartite_cycle_to_rook, boundary_sum, count_2cycles, decompose_relation, decompose_tetrahedra, elements, facets,
    find_betti_witness_pair, formal_sum, is_d_cycle, subsets, Hypergraph2, RookGrid,
};
use cyclespace::{BitMatrix, BitVector, CellComplex, EdgeSet, Graph, Involution, ProductGraph, TildeCorrespondence};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::oracle::{brute_force_hyper_two_cycles, brute_force_one_cycles, brute_force_two_cycles, graphs_up_to_isomorphism};
use crate::CliError;

/// Seed for the randomized checks and cap on simple-cycle enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub seed: u64,
    pub max_cycles: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            seed: 20240617,
            max_cycles: 200_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: usize,
    pub name: &'static str,
    pub citation: &'static str,
    pub items: Vec<Item>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| !i.passed)
    }

    /// `PASS  3 deleted-squares (14/14)`.
    pub fn summary_line(&self) -> String {
        let ok = self.items.iter().filter(|i| i.passed).count();
        format!(
            "{} {:>2} {} ({}/{})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            ok,
            self.items.len()
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "citation": self.citation,
            "passed": self.passed(),
            "items": self.items.iter().map(|i| json!({
                "label": i.label,
                "expected": i.expected,
                "computed": i.computed,
                "passed": i.passed,
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Default)]
struct Recorder {
    items: Vec<Item>,
}

impl Recorder {
    fn eq<T: PartialEq + Display>(&mut self, label: impl Into<String>, expected: T, computed: T) {
        self.items.push(Item {
            label: label.into(),
            expected: expected.to_string(),
            passed: expected == computed,
            computed: computed.to_string(),
        });
    }

    fn holds(&mut self, label: impl Into<String>, ok: bool) {
        self.eq(label, true, ok);
    }

    /// A value recorded for the report, with nothing to compare against.
    fn note(&mut self, label: impl Into<String>, value: impl Display) {
        let v = value.to_string();
        self.items.push(Item {
            label: label.into(),
            expected: "reported".into(),
            computed: v,
            passed: true,
        });
    }

    /// One item over a family: the count of members checked, or the first
    /// failing member.
    fn all<I: IntoIterator<Item = (String, bool)>>(&mut self, label: impl Into<String>, family: I) {
        let mut n = 0;
        let mut first_bad = None;
        for (what, ok) in family {
            n += 1;
            if !ok && first_bad.is_none() {
                first_bad = Some(what);
            }
        }
        let computed = match first_bad {
            None => format!("{n} of {n} hold"),
            Some(w) => format!("fails at {w}"),
        };
        self.items.push(Item {
            label: label.into(),
            expected: format!("{n} of {n} hold"),
            passed: computed == format!("{n} of {n} hold"),
            computed,
        });
    }
}

type Runner = fn(&mut Recorder, &Settings) -> cyclespace::Result<()>;

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub citation: &'static str,
    run: Runner,
}

impl Criterion {
    pub fn run(&self, settings: &Settings) -> Check {
        let mut rec = Recorder::default();
        if let Err(e) = (self.run)(&mut rec, settings) {
            rec.items.push(Item {
                label: "run to completion".into(),
                expected: "no error".into(),
                computed: e.to_string(),
                passed: false,
            });
        }
        Check {
            id: self.id,
            name: self.name,
            citation: self.citation,
            items: rec.items,
        }
    }
}

pub const CRITERIA: [Criterion; 14] = [
    Criterion {
        id: 1,
        name: "one-cycles",
        citation: "1-cycle counts: 2^((n-1)(n-2)/2) for K_n, 2^((n-1)^2) for K_{n,n}, 1 for trees, 2^(E-V+1) for connected graphs",
        run: one_cycles,
    },
    Criterion {
        id: 2,
        name: "square-homology",
        citation: "1-cycles of K^{□2} up to boundaries: K_3 2^2, K_{2,2} 2^2, K_{2,3} 2^4, K_4 2^6",
        run: square_homology,
    },
    Criterion {
        id: 3,
        name: "deleted-squares",
        citation: "deleted squares of K_3, K_{2,2}, K_{2,3}, K_4, K_{3,3}, K_5: 1-cycles 2^1, 2^5, 2^17, 2^13, 2^43, 2^41; up to boundaries 2^1, 2^1, 2^5, 2^7, 2^8, 2^12",
        run: deleted_squares,
    },
    Criterion {
        id: 4,
        name: "boundary-sums",
        citation: "triodic cycle is a boundary sum in the square of the triod and not in its deleted square; left and diagonal cycles are not; diagonal, off-diagonal, antidiagonal and symmetrized identities",
        run: boundary_sums,
    },
    Criterion {
        id: 5,
        name: "kunneth-h1",
        citation: "C ~ C_x × a + a × C_y with a unique pair, for connected K",
        run: kunneth_h1,
    },
    Criterion {
        id: 6,
        name: "cellular-counts",
        citation: "cellular 2-cycles of K²: K_3 2^1, K_{2,2} 2^1, K_{2,3} 2^4, K_4 2^9; in general 2^((E-V+N)^2)",
        run: cellular_counts,
    },
    Criterion {
        id: 7,
        name: "deleted-cells",
        citation: "K^□ is empty for K_2, K_3, K_{n,1}; no nonempty 2-cycle for cycles and wheels; K_{3,3}^□ and K_5^□ are 2-cycles; K_5^□ is not a sum of vertex-disjoint tori",
        run: deleted_cells,
    },
    Criterion {
        id: 8,
        name: "bipartite-deleted",
        citation: "2-cycles of K_{n,n}^□: 2^((n^2-3n+1)^2); the cell map f(σ1σ2', τ1τ2') = (σ1τ1', σ2τ2') onto K~_n² respects adjacency; K~_3 square: 2^37 1-cycles, four classes up to boundaries",
        run: bipartite_deleted,
    },
    Criterion {
        id: 9,
        name: "kunneth-h2",
        citation: "products C_i × C_j of a 1-cycle basis form a basis of the cellular 2-cycles of K²",
        run: kunneth_h2,
    },
    Criterion {
        id: 10,
        name: "symmetry",
        citation: "t-symmetric 1-cycles of K~_n match 1-cycles of K_n; C ↦ C × a + a × C is a bijection up to symmetrized boundaries; symmetric counts depend on V and E only; K_3² is no sum of symmetrized tori; deleted symmetric 2-cycles are sums of symmetrized tori; K_{n,n}^□ generator span",
        run: symmetry,
    },
    Criterion {
        id: 11,
        name: "torus-span",
        citation: "two K_5 joined by an edge: vertex-disjoint tori miss at least two independent 2-cycles",
        run: torus_span,
    },
    Criterion {
        id: 12,
        name: "hypergraphs",
        citation: "tetrahedron and pentachoron identities; decompositions by coning to the last vertex; 2^C(n-1,3) 2-cycles on [n]; 2^((n-1)^l) rook cycles; b0 - b1 + b2 = V - E + F; equal V, E, F with different 2-cycle counts",
        run: hypergraphs,
    },
    Criterion {
        id: 13,
        name: "integer-and-signs",
        citation: "2^(E-V+1) sign classes under vertex flips; integer 1-cycles are determined by non-tree edges; reorientation is additive and involutive",
        run: integer_and_signs,
    },
    Criterion {
        id: 14,
        name: "oracles",
        citation: "basis-derived counts equal exhaustive subset counts: graphs with E <= 12, complexes with at most 16 cells",
        run: oracles,
    },
];

/// Runs `all`, a criterion name, or a criterion number. Criteria run on
/// separate threads; results come back in declaration order.
pub fn run_suite(selection: &str, settings: &Settings) -> Result<Vec<Check>, CliError> {
    let chosen: Vec<&Criterion> = if selection == "all" {
        CRITERIA.iter().collect()
    } else {
        let pick: Vec<&Criterion> = CRITERIA
            .iter()
            .filter(|c| c.name == selection || c.id.to_string() == selection)
            .collect();
        if pick.is_empty() {
            let names: Vec<&str> = CRITERIA.iter().map(|c| c.name).collect();
            return Err(CliError::Usage(format!(
                "unknown suite `{selection}`; expected `all` or one of {}",
                names.join(", ")
            )));
        }
        pick
    };
    Ok(thread::scope(|s| {
        let handles: Vec<_> = chosen.iter().map(|c| s.spawn(move || c.run(settings))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread panicked"))
            .collect()
    }))
}

fn k(n: usize) -> Graph {
    Graph::complete(n).expect("n >= 1")
}

fn kmn(m: usize, n: usize) -> Graph {
    Graph::complete_bipartite(m, n).expect("m, n >= 1")
}

fn dim(g: &Graph) -> usize {
    CycleSpace::new(g).dimension()
}

/// A random tree on `v` vertices plus `extra` random non-tree edges where
/// room allows.
fn random_connected(rng: &mut ChaCha8Rng, v: usize, extra: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..v).map(|i| (rng.gen_range(0..i), i)).collect();
    let mut missing: Vec<(usize, usize)> = (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .filter(|e| !edges.contains(e))
        .collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra));
    Graph::new(v, edges).expect("simple edges")
}

fn connected_corpus() -> Vec<Graph> {
    graphs_up_to_isomorphism(6, 12)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

fn one_cycles(r: &mut Recorder, settings: &Settings) -> cyclespace::Result<()> {
    for n in 3..=7 {
        r.eq(format!("K_{n} cycle exponent"), (n - 1) * (n - 2) / 2, dim(&k(n)));
    }
    for n in 2..=5 {
        r.eq(format!("K_{{{n},{n}}} cycle exponent"), (n - 1) * (n - 1), dim(&kmn(n, n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let mut trees: Vec<(String, Graph)> = (2..=8).map(|n| (format!("P_{n}"), Graph::path(n).expect("n >= 1"))).collect();
    trees.extend((1..=6).map(|n| (format!("K_{{{n},1}}"), kmn(n, 1))));
    trees.extend((0..20).map(|i| {
        let v = rng.gen_range(2..=12);
        (format!("random tree #{i} on {v} vertices"), random_connected(&mut rng, v, 0))
    }));
    r.all(
        "trees have exactly one 1-cycle (basis and exhaustive count)",
        trees
            .iter()
            .map(|(name, t)| (name.clone(), dim(t) == 0 && brute_force_one_cycles(t) == 1)),
    );
    let corpus = connected_corpus();
    r.note("connected graphs on at most 6 vertices with E <= 12", corpus.len());
    r.all(
        "connected corpus: exponent E-V+1, exhaustive count 2^(E-V+1)",
        corpus.iter().map(|g| {
            let q = g.edge_count() + 1 - g.vertex_count();
            (g.to_edge_list(), dim(g) == q && brute_force_one_cycles(g) == 1 << q)
        }),
    );
    let named = [k(5), kmn(3, 3), kmn(3, 4), Graph::wheel(5)?, Graph::cycle(12)?, Graph::tilde_complete(3)?];
    r.all(
        "named connected graphs with E <= 12",
        named.iter().map(|g| {
            let q = g.edge_count() + 1 - g.vertex_count();
            (g.to_edge_list(), dim(g) == q && brute_force_one_cycles(g) == 1 << q)
        }),
    );
    Ok(())
}

fn square_homology(r: &mut Recorder, _settings: &Settings) -> cyclespace::Result<()> {
    for (name, g, expected) in [("K_3", k(3), 2), ("K_{2,2}", kmn(2, 2), 2), ("K_{2,3}", kmn(2, 3), 4), ("K_4", k(4), 6)] {
        let sq = ProductGraph::square(&g);
        let h = h1_mod_boundaries(&BoundarySpace::new(&sq));
        r.eq(format!("{name} square: exponent up to boundaries"), expected, h.dimension());
    }
    Ok(())
}

fn deleted_squares(r: &mut Recorder, _settings: &Settings) -> cyclespace::Result<()> {
    let table = [
        ("K_3", k(3), 1, 1, 0),
        ("K_{2,2}", kmn(2, 2), 5, 1, 0),
        ("K_{2,3}", kmn(2, 3), 17, 5, 0),
        ("K_4", k(4), 13, 7, 0),
        ("K_{3,3}", kmn(3, 3), 43, 8, 1),
        ("K_5", k(5), 41, 12, 1),
    ];
    for (name, g, cycles, classes, deps) in table {
        let del = ProductGraph::deleted_square(&g);
        let space = BoundarySpace::new(&del);
        let h = h1_mod_boundaries(&space);
        r.eq(format!("{name} deleted square: cycle exponent"), cycles, h.cycle_dimension);
        r.eq(format!("{name} deleted square: exponent up to boundaries"), classes, h.dimension());
        let d = space.dependencies();
        r.eq(format!("{name} deleted square: boundary dependencies"), deps, d.row_count());
        if deps == 1 && d.row_count() == 1 {
            r.holds(
                format!("{name} deleted square: the dependency is the sum of all boundaries"),
                d.row(0) == &BitVector::ones(space.cells().len()),
            );
        }
    }
    Ok(())
}

fn boundary_sums(r: &mut Recorder, settings: &Settings) -> cyclespace::Result<()> {
    let triod = Graph::triod();
    let sq = ProductGraph::square(&triod);
    let space = BoundarySpace::new(&sq);
    let tri = sq.triodic(3, [0, 1, 2])?;
    let legs: Vec<usize> = (0..3).map(|i| triod.edge_index(i, 3).expect("leg")).collect();
    let cert: Vec<(usize, usize)> = (0..3)
        .flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| (legs[i], legs[j]))
        .collect();
    r.holds("triod square: triodic cycle = Σ_{i≠j} (i-c) □ (j-c)", space.sum_cells(&cert)? == tri);
    let found = space.is_sum_of_boundaries(&tri)?;
    r.holds(
        "triod square: solver certificate re-sums to the triodic cycle",
        match &found {
            Some(c) => space.sum_cells(c)? == tri,
            None => false,
        },
    );
    let del = ProductGraph::deleted_square(&triod);
    let dspace = BoundarySpace::new(&del);
    r.holds(
        "triod deleted square: triodic cycle is not a boundary sum",
        dspace.is_sum_of_boundaries(&del.triodic(3, [0, 1, 2])?)?.is_none(),
    );

    let named = [
        ("K_3", k(3), vec![0, 1, 2], vec![0, 1, 2]),
        ("K_4", k(4), vec![1, 2, 3], vec![0, 1, 2, 3]),
    ];
    for (name, g, left, diag) in named {
        let sq = ProductGraph::square(&g);
        let space = BoundarySpace::new(&sq);
        r.holds(
            format!("{name} square: left cycle is not a boundary sum"),
            space.is_sum_of_boundaries(&sq.left_cycle(0, &left)?)?.is_none(),
        );
        r.holds(
            format!("{name} square: diagonal cycle is not a boundary sum"),
            space.is_sum_of_boundaries(&sq.diagonal(&diag)?)?.is_none(),
        );
    }

    // identities in the square of K_3 with vertices 1, 2, 3
    let g = k(3);
    let sq = ProductGraph::square(&g);
    let space = BoundarySpace::new(&sq);
    let e = |a: usize, b: usize| g.edge_index(a - 1, b - 1).expect("edge of K_3");
    let (e12, e23, e31) = (e(1, 2), e(2, 3), e(3, 1));
    let all = g.all_edges();
    let base = &sq.vertex_times(0, &all)? + &sq.times_vertex(&all, 0)?;
    let tri = [0, 1, 2];
    for (label, cycle, cells) in [
        ("diag(123) = 1×K_3 + K_3×1 + 12□23 + 12□31 + 23□31", sq.diagonal(&tri)?, vec![(e12, e23), (e12, e31), (e23, e31)]),
        ("off(123) = 1×K_3 + K_3×1 + 12□31 + 31□12", sq.off_diagonal(&tri)?, vec![(e12, e31), (e31, e12)]),
        (
            "anti(123) = 1×K_3 + K_3×1 + 23□31 + 31□23 + 31□31",
            sq.antidiagonal(&tri)?,
            vec![(e23, e31), (e31, e23), (e31, e31)],
        ),
    ] {
        r.holds(label, &base + &space.sum_cells(&cells)? == cycle);
    }
    for n in 3..=6 {
        let g = k(n);
        let sq = ProductGraph::square(&g);
        let space = BoundarySpace::new(&sq);
        let cyc: Vec<usize> = (0..n).collect();
        let c = g.simple_cycle(&cyc)?;
        let step = |i: usize| g.edge_index(i, (i + 1) % n).expect("cycle edge");
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| (step(i), step(j))).collect();
        let lhs = &sq.vertex_times(0, &c)? + &sq.times_vertex(&c, 0)?;
        r.holds(
            format!("K_{n} square: 1×C + C×1 = diag C + Σ_{{i<j}} i(i+1) □ j(j+1)"),
            lhs == &sq.diagonal(&cyc)? + &space.sum_cells(&cells)?,
        );
    }

    let g = k(4);
    let sq = ProductGraph::square(&g);
    let space = BoundarySpace::new(&sq);
    let mut diagonals = BitMatrix::new(sq.edge_count());
    for c in g.simple_cycles(settings.max_cycles)? {
        let mut rev = c.clone();
        rev[1..].reverse();
        diagonals.push(sq.diagonal(&c)?)?;
        diagonals.push(sq.diagonal(&rev)?)?;
    }
    let left = sq.left_cycle(0, &[1, 2, 3])?;
    r.holds(
        "K_4 square: 1×234 is not a sum of diagonal cycles and boundaries",
        span_membership_mod_boundaries(&space, &diagonals, &left)?.is_none(),
    );
    Ok(())
}

fn kunneth_h1(r: &mut Recorder, settings: &Settings) -> cyclespace::Result<()> {
    let g = k(3);
    let sq = ProductGraph::square(&g);
    let space = BoundarySpace::new(&sq);
    let basis = CycleSpace::new(sq.graph());
    let d = basis.dimension();
    let mut bad = None;
    for a in 0..3 {
        for mask in 0u64..(1 << d) {
            let coords = BitVector::from_indices(d, (0..d).filter(|&i| mask >> i & 1 == 1));
            let c = basis.recombine(&coords)?;
            let red = kunneth_reduce(&space, &c, a)?;
            let rest = &(&c + &sq.times_vertex(&red.c1, a)?) + &sq.vertex_times(a, &red.c2)?;
            if space.sum_cells(&red.certificate)? != rest {
                bad.get_or_insert(format!("vertex {a}, cycle {mask}"));
            }
        }
    }
    r.eq(
        "K_3 square: all 2^10 cycles reduce to (C_x, C_y) with a certificate, at every vertex",
        "none failing".to_string(),
        bad.unwrap_or_else(|| "none failing".into()),
    );
    let k3 = g.all_edges();
    let zero = g.empty_edge_set();
    for a in 0..3 {
        let reps: Vec<EdgeSet> = [(&zero, &zero), (&zero, &k3), (&k3, &zero), (&k3, &k3)]
            .iter()
            .map(|(c1, c2)| Ok(&sq.times_vertex(c1, a)? + &sq.vertex_times(a, c2)?))
            .collect::<cyclespace::Result<_>>()?;
        let mut distinct = true;
        for i in 0..4 {
            for j in i + 1..4 {
                distinct &= !space.homologous(&reps[i], &reps[j])?;
            }
        }
        r.holds(format!("K_3 square: the four pairs (C_1, C_2) give distinct classes at vertex {a}"), distinct);
    }

    let g = k(4);
    let sq = ProductGraph::square(&g);
    let space = BoundarySpace::new(&sq);
    let cs = CycleSpace::new(sq.graph());
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let mut samples: Vec<EdgeSet> = cs.basis().rows().to_vec();
    for _ in 0..64 {
        let coords = BitVector::from_indices(cs.dimension(), (0..cs.dimension()).filter(|_| rng.gen_bool(0.5)));
        samples.push(cs.recombine(&coords)?);
    }
    let mut ok = true;
    for c in &samples {
        for a in 0..4 {
            let red = kunneth_reduce(&space, c, a)?;
            let rest = &(c + &sq.times_vertex(&red.c1, a)?) + &sq.vertex_times(a, &red.c2)?;
            ok &= space.sum_cells(&red.certificate)? == rest;
        }
    }
    r.holds("K_4 square: basis and 64 random cycles reduce with certificates at every vertex", ok);
    for (name, g) in [("K_3", k(3)), ("K_4", k(4))] {
        let sq = ProductGraph::square(&g);
        let space = BoundarySpace::new(&sq);
        let unique = (0..g.vertex_count()).map(|a| kunneth_pairs_independent(&space, a)).collect::<cyclespace::Result<Vec<_>>>()?;
        r.holds(format!("{name} square: the pair is unique (independence of B_i × a, a × B_j)"), unique.iter().all(|&u| u));
    }
    Ok(())
}

fn cellular_counts(r: &mut Recorder, _settings: &Settings) -> cyclespace::Result<()> {
    for (name, g, expected) in [("K_3", k(3), 1), ("K_{2,2}", kmn(2, 2), 1), ("K_{2,3}", kmn(2, 3), 4), ("K_4", k(4), 9)] {
        r.eq(format!("{name}²: 2-cycle exponent"), expected, two_cycle_kernel(&CellComplex::full(&g)).row_count());
    }
    for (name, g) in [
        ("K_3 ⊔ K_4", k(3).disjoint_union(&k(4))),
        ("K_{2,3} ⊔ C_5 ⊔ P_3", kmn(2, 3).disjoint_union(&Graph::cycle(5)?).disjoint_union(&Graph::path(3)?)),
    ] {
        let q = g.edge_count() + g.components().count - g.vertex_count();
        r.eq(format!("{name}²: exponent (E-V+N)^2"), q * q, two_cycle_kernel(&CellComplex::full(&g)).row_count());
        r.eq(format!("{name}²: tori basis size"), q * q, TwoCycleSpace::new(&g).dimension());
    }
    Ok(())
}

fn deleted_cells(r: &mut Recorder, settings: &Settings) -> cyclespace::Result<()> {
    let mut empty = vec![("K_2", k(2)), ("K_3", k(3))];
    empty.extend((1..=5).map(|n| (["K_{1,1}", "K_{2,1}", "K_{3,1}", "K_{4,1}", "K_{5,1}"][n - 1], kmn(n, 1))));
    for (name, g) in empty {
        r.eq(format!("{name}^□: cell count"), 0, CellComplex::deleted(&g).cell_count());
    }
    for n in 4..=8 {
        let cc = CellComplex::deleted(&Graph::cycle(n)?);
        r.eq(format!("C_{n}^□: 2-cycle exponent"), 0, two_cycle_kernel(&cc).row_count());
    }
    for n in 3..=7 {
        let cc = CellComplex::deleted(&Graph::wheel(n)?);
        r.eq(format!("W_{n}^□: 2-cycle exponent"), 0, two_cycle_kernel(&cc).row_count());
    }
    for (name, g) in [("K_{3,3}", kmn(3, 3)), ("K_5", k(5))] {
        let cc = CellComplex::deleted(&g);
        let all = cc.all_cells();
        r.holds(
            format!("{name}^□ is a cellular 2-cycle (sections and parity)"),
            is_cellular_2cycle(&cc, &all) && is_cellular_2cycle_by_parity(&cc, &all),
        );
    }
    let g = k(5);
    let cc = CellComplex::deleted(&g);
    let span = vertex_disjoint_torus_span(&g, settings.max_cycles)?;
    let full = cc.embed_into_full(&cc.all_cells())?;
    r.holds("K_5^□ lies outside the span of vertex-disjoint tori", span.solve_in_span(&full)?.is_none());
    Ok(())
}

fn bipartite_deleted(r: &mut Recorder, _settings: &Settings) -> cyclespace::Result<()> {
    for n in 3..=4 {
        let cc = CellComplex::deleted(&kmn(n, n));
        let q = n * n + 1 - 3 * n;
        r.eq(format!("K_{{{n},{n}}}^□: 2-cycle exponent"), q * q, two_cycle_kernel(&cc).row_count());
    }
    let f = TildeCorrespondence::new(3)?;
    r.holds("n = 3: f is a bijection of cells", f.is_bijective());
    r.holds("n = 3: f respects adjacency", f.preserves_adjacency());
    r.holds("n = 3: f ∘ swap = t² ∘ f", f.intertwines_swap());
    let source = two_cycle_kernel(f.source());
    let target = two_cycle_kernel(f.target());
    let moved: Vec<BitVector> = source.rows().iter().map(|c| f.apply(c)).collect::<cyclespace::Result<_>>()?;
    r.holds(
        "n = 3: f carries every 2-cycle of K_{3,3}^□ to a 2-cycle of K~_3²",
        moved.iter().all(|m| is_cellular_2cycle(f.target(), m)),
    );
    r.eq(
        "n = 3: 2-cycle exponents of K_{3,3}^□ and K~_3² agree",
        target.row_count(),
        BitMatrix::from_rows(f.target().cell_count(), moved)?.rank(),
    );

    // the K~_3 values match its full square; the deleted square is reported
    let c6 = Graph::tilde_complete(3)?;
    let sq = ProductGraph::square(&c6);
    let h = h1_mod_boundaries(&BoundarySpace::new(&sq));
    r.eq("K~_3 square: cycle exponent", 37, h.cycle_dimension);
    r.eq("K~_3 square: classes up to boundaries", 4usize, 1 << h.dimension());
    let del = ProductGraph::deleted_square(&c6);
    let hd = h1_mod_boundaries(&BoundarySpace::new(&del));
    r.note("K~_3 deleted square: cycle exponent (differs from 37)", hd.cycle_dimension);
    r.note("K~_3 deleted square: exponent up to boundaries", hd.dimension());
    Ok(())
}

fn kunneth_h2(r: &mut Recorder, _settings: &Settings) -> cyclespace::Result<()> {
    let g = k(4);
    let space = TwoCycleSpace::new(&g);
    let q = space.first_betti();
    let fundamental = space.fundamental_cycles().to_vec();
    let mixed: Vec<EdgeSet> = [vec![0, 1, 2], vec![1, 2, 3], vec![0, 1, 2, 3]]
        .iter()
        .map(|c| g.simple_cycle(c))
        .collect::<cyclespace::Result<_>>()?;
    r.eq(
        "K_4: triangles 123, 234 and the square 1234 form a cycle basis",
        q,
        BitMatrix::from_rows(g.edge_count(), mixed.clone())?.rank(),
    );
    r.holds("K_4: the two bases differ", fundamental.iter().any(|c| !mixed.contains(c)));
    let kernel = two_cycle_kernel(space.complex());
    let kernel_basis = cyclespace::EchelonBasis::from_matrix(&kernel);
    r.eq("K_4²: 2-cycle exponent q²", q * q, kernel.row_count());
    for (name, basis) in [("fundamental cycles", fundamental), ("two triangles and a square", mixed)] {
        let products = space.products_of(&basis)?;
        r.eq(format!("K_4²: rank of products over {name}"), q * q, products.rank());
        r.holds(
            format!("K_4²: products over {name} are 2-cycles"),
            products.rows().iter().all(|p| kernel_basis.contains(p)),
        );
    }
    Ok(())
}

fn symmetry(r: &mut Recorder, _settings: &Settings) -> cyclespace::Result<()> {
    for n in 3..=5 {
        let g = Graph::tilde_complete(n)?;
        let t = Involution::part_swap(&g, n)?;
        let sym = symmetric_cycle_space(&CycleSpace::new(&g), &t)?;
        r.eq(format!("K~_{n}: t-symmetric exponent equals K_{n} cycle exponent"), dim(&k(n)), sym.dimension());
    }
    for (name, g) in [("K_3", k(3)), ("K_4", k(4))] {
        let sq = ProductGraph::square(&g);
        let space = BoundarySpace::new(&sq);
        r.holds(
            format!("{name} square: C ↦ C × a + a × C is a bijection up to symmetrized boundaries"),
            symmetric_correspondence_holds(&space, 0)?,
        );
    }
    let tri_tail = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])?;
    let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])?;
    let pairs = [
        ("P_5 / K_{4,1}", Graph::path(5)?, kmn(4, 1)),
        ("C_5 / triangle with a tail", Graph::cycle(5)?, tri_tail),
        ("K_{2,3} / bowtie", kmn(2, 3), bowtie),
    ];
    for (name, a, b) in pairs {
        let sa = symmetric_cycle_basis(&ProductGraph::square(&a))?.row_count();
        let sb = symmetric_cycle_basis(&ProductGraph::square(&b))?.row_count();
        r.eq(format!("{name}: symmetric 1-cycle exponents of the squares"), sa, sb);
        let ta = symmetric_two_cycles(&CellComplex::full(&a)).symmetric;
        let tb = symmetric_two_cycles(&CellComplex::full(&b)).symmetric;
        r.eq(format!("{name}: symmetric 2-cycle exponents of the cell squares"), ta, tb);
    }
    let cc = CellComplex::full(&k(3));
    let all = cc.all_cells();
    r.holds("K_3² is a symmetric 2-cycle", is_cellular_2cycle(&cc, &all) && cc.swap(&all)? == all);
    r.eq("K_3²: rank of symmetrized tori", 0, symmetric_two_cycles(&cc).symmetrized_tori);
    for (name, g) in [("K_4", k(4)), ("K_5", k(5)), ("K_{3,3}", kmn(3, 3))] {
        let cc = CellComplex::deleted(&g);
        let space = TwoCycleSpace::new(&g);
        let sym = symmetric_two_cycle_basis(&cc);
        r.note(format!("{name}^□: symmetric 2-cycle exponent"), sym.row_count());
        let mut ok = true;
        for c in sym.rows() {
            let pairs = space.decompose_symmetric(&cc, c)?;
            let mut sum = space.complex().empty_set();
            for &(s, t) in &pairs {
                let a = space.fundamental_cycles();
                let j = space.non_tree_edges().iter().position(|&e| e == s).expect("non-tree edge");
                let l = space.non_tree_edges().iter().position(|&e| e == t).expect("non-tree edge");
                sum += &cyclespace::cellular::torus(space.complex(), &a[j], &a[l])?;
                sum += &cyclespace::cellular::torus(space.complex(), &a[l], &a[j])?;
            }
            ok &= s_ne_t(&pairs) && sum == cc.embed_into_full(c)?;
        }
        r.holds(format!("{name}^□: symmetric 2-cycles are sums of symmetrized tori"), ok);
    }
    for n in 3..=4 {
        let b = bipartite_symmetric_generators(n)?;
        r.holds(format!("K_{{{n},{n}}}^□: 4-cycle tori and K_{{3,3}}^□ copies span the symmetric 2-cycles"), b.spans);
        r.eq(format!("K_{{{n},{n}}}^□: generator rank equals symmetric exponent"), b.symmetric_dimension, b.generator_rank);
        r.note(format!("K_{{{n},{n}}}^□: generators"), b.torus_generators + b.subgraph_generators);
        r.note(format!("K_{{{n},{n}}}^□: redundant generators"), b.redundancy);
        r.holds(format!("K~_{n}²: t²-symmetrized tori and K~_3² copies span the t²-symmetric 2-cycles"), b.tilde_spans);
        r.holds(format!("n = {n}: f carries symmetric 2-cycles onto t²-symmetric ones"), b.transport_ok);
    }
    Ok(())
}

fn s_ne_t(pairs: &[(usize, usize)]) -> bool {
    pairs.iter().all(|&(s, t)| s != t)
}

fn torus_span(r: &mut Recorder, settings: &Settings) -> cyclespace::Result<()> {
    let gap = torus_span_gap(&bridged_complete_pair(), settings.max_cycles)?;
    r.note("2-cycle exponent", gap.two_cycle_dimension);
    r.note("rank of vertex-disjoint tori", gap.span_rank);
    r.holds("codimension of the span is at least 2", gap.gap >= 2);
    Ok(())
}

fn hypergraphs(r: &mut Recorder, settings: &Settings) -> cyclespace::Result<()> {
    r.all(
        "tetrahedra T_A are 2-cycles for all 4-subsets A of [6]",
        subsets(6, 4).into_iter().map(|a| (format!("{:?}", elements(a)), is_d_cycle(6, 2, &facets(a)))),
    );
    r.all(
        "Σ_{j∈A} T_{A-j} = 0 for all 5-subsets A of [6]",
        subsets(6, 5).into_iter().map(|a| {
            let tetrahedra: Vec<u64> = facets(a);
            let faces = boundary_sum(tetrahedra.iter().copied());
            (format!("{:?}", elements(a)), faces.is_empty())
        }),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let mut cases = Vec::new();
    for i in 0..50 {
        let n = rng.gen_range(5..=8);
        let pool = subsets(n, 4);
        let picks: Vec<u64> = (0..rng.gen_range(1..=6)).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
        let c: Vec<u64> = boundary_sum(picks).into_iter().collect();
        let ok = decompose_tetrahedra(n, &c).map(|t| boundary_sum(t) == formal_sum(c.iter().copied())).unwrap_or(false);
        cases.push((format!("2-cycle #{i} on [{n}]"), ok));
    }
    for i in 0..50 {
        let n = rng.gen_range(6..=8);
        let pool = subsets(n, 5);
        let picks: Vec<u64> = (0..rng.gen_range(1..=5)).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
        let rel: Vec<u64> = boundary_sum(picks).into_iter().collect();
        let ok = decompose_relation(n, &rel).map(|p| boundary_sum(p) == formal_sum(rel.iter().copied())).unwrap_or(false);
        cases.push((format!("relation #{i} on [{n}]"), ok));
    }
    r.all("100 random instances: tetrahedra and relation decompositions re-sum exactly", cases);
    for n in 4..=7 {
        let c = count_2cycles(n)?;
        r.eq(format!("[{n}]: 2-cycle exponent C(n-1,3) against the kernel rank"), c.closed_form, c.kernel_dimension);
    }
    for (n, l) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let g = RookGrid::new(n, l)?;
        r.eq(format!("[{n}]^{l}: rook-cycle exponent (n-1)^l"), g.rook_cycle_closed_form(), g.rook_cycle_kernel_dimension());
    }
    for n in 3..=4 {
        let g = kmn(n, n);
        let grid = RookGrid::new(n, 2)?;
        let images: Vec<BitVector> = CycleSpace::new(&g)
            .basis()
            .rows()
            .iter()
            .map(|c| bipartite_cycle_to_rook(n, &g, c))
            .collect::<cyclespace::Result<_>>()?;
        r.holds(format!("K_{{{n},{n}}}: 1-cycles go to rook cycles of [{n}]²"), images.iter().all(|s| grid.is_rook_cycle(s)));
        r.eq(
            format!("K_{{{n},{n}}}: the dictionary is injective on 1-cycles"),
            grid.rook_cycle_kernel_dimension(),
            BitMatrix::from_rows(grid.cell_count(), images)?.rank(),
        );
        let mut squares_ok = true;
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in 0..n {
                    for d in c + 1..n {
                        let sq = g.simple_cycle(&[a, n + c, b, n + d])?;
                        squares_ok &= bipartite_cycle_to_rook(n, &g, &sq)? == grid.parallelepiped(&[[a, b], [c, d]])?;
                        count += 1;
                    }
                }
            }
        }
        r.holds(format!("K_{{{n},{n}}}: each of the {count} 4-cycles maps to its parallelogram"), squares_ok);
    }
    let torus = Hypergraph2::seven_vertex_torus();
    let p = torus.betti_profile();
    r.eq("7-vertex torus: (b0, b1, b2)", "(1, 2, 1)".to_string(), format!("({}, {}, {})", p.b0, p.b1, p.b2));
    r.eq("7-vertex torus: V - E + F", 0i64, p.vertices as i64 - p.edges as i64 + p.faces as i64);
    r.holds("7-vertex torus: b0 - b1 + b2 = V - E + F", p.euler_holds());
    let mut euler = Vec::new();
    for i in 0..100 {
        let v = rng.gen_range(4..=8);
        let pool = subsets(v, 3);
        let f = rng.gen_range(1..=pool.len().min(14));
        let mut chosen: Vec<u64> = pool.clone();
        chosen.shuffle(&mut rng);
        let faces = chosen[..f].iter().map(|&m| {
            let e = elements(m);
            [e[0], e[1], e[2]]
        });
        let h = Hypergraph2::new(v, faces)?;
        let p = h.betti_profile();
        let brute = brute_force_hyper_two_cycles(&h) == 1 << p.b2;
        euler.push((format!("random hypergraph #{i}"), p.euler_holds() && brute));
    }
    r.all("100 random hypergraphs: Euler identity, and 2^b2 by exhaustive count", euler);
    match find_betti_witness_pair(6) {
        Some(w) => {
            r.holds("witness pair: connected, equal V, E, F, different b2", w.is_valid());
            r.note(
                "witness pair",
                format!(
                    "V={} E={} F={}: b2 {} vs {}",
                    w.first_profile.vertices, w.first_profile.edges, w.first_profile.faces, w.first_profile.b2, w.second_profile.b2
                ),
            );
        }
        None => r.note("witness pair", "none found on at most 6 vertices"),
    }
    Ok(())
}

fn integer_and_signs(r: &mut Recorder, settings: &Settings) -> cyclespace::Result<()> {
    let corpus: Vec<Graph> = connected_corpus().into_iter().filter(|g| g.edge_count() <= 10).collect();
    let mut family = Vec::new();
    for g in &corpus {
        family.push((g.to_edge_list(), sign_classes_match(g)?));
    }
    r.all("connected graphs on at most 6 vertices with E <= 10: 2^(E-V+1) sign classes", family);

    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let mut extension = Vec::new();
    let mut reorient = Vec::new();
    for i in 0..50 {
        let v = rng.gen_range(3..=8);
        let extra = rng.gen_range(1..=v);
        let g = random_connected(&mut rng, v, extra);
        let forest = g.spanning_forest();
        let og = OrientedGraph::new(&g, g.edges().iter().map(|&(a, b)| if rng.gen_bool(0.5) { a } else { b }).collect())?;
        let cotree: Vec<(usize, BigInt)> = forest.non_tree_edges().into_iter().map(|e| (e, BigInt::from(rng.gen_range(-9i64..=9)))).collect();
        let z = integer_extend(&og, &forest, &cotree)?;
        let agrees = cotree.iter().all(|(e, w)| &z[*e] == w);
        // an integer cycle built from random closed walks is recovered from its
        // non-tree values alone
        let w = random_integer_cycle(&mut rng, &og, settings.max_cycles)?;
        let w_cotree: Vec<(usize, BigInt)> = forest.non_tree_edges().into_iter().map(|e| (e, w[e].clone())).collect();
        let unique = integer_extend(&og, &forest, &w_cotree)? == w;
        extension.push((format!("graph #{i}"), is_integer_cycle(&og, &z) && agrees && is_integer_cycle(&og, &w) && unique));

        let other = OrientedGraph::new(&g, g.edges().iter().map(|&(a, b)| if rng.gen_bool(0.5) { a } else { b }).collect())?;
        let sum: IntegerChain = z.iter().zip(&w).map(|(a, b)| a + b).collect();
        let mz = reorientation_iso(&og, &other, &z)?;
        let mw = reorientation_iso(&og, &other, &w)?;
        let msum = reorientation_iso(&og, &other, &sum)?;
        let additive = msum.iter().zip(mz.iter().zip(&mw)).all(|(s, (a, b))| s == &(a + b));
        let back = reorientation_iso(&other, &og, &mz)? == z;
        reorient.push((format!("graph #{i}"), additive && back && is_integer_cycle(&other, &mz)));
    }
    r.all("50 random connected graphs: extension obeys Kirchhoff and is unique", extension);
    r.all("50 random connected graphs: reorientation is additive and involutive", reorient);
    Ok(())
}

fn random_integer_cycle(rng: &mut ChaCha8Rng, og: &OrientedGraph<'_>, cap: usize) -> cyclespace::Result<IntegerChain> {
    let g = og.graph();
    let cycles = g.simple_cycles(cap)?;
    let mut z = vec![BigInt::from(0); g.edge_count()];
    for _ in 0..4 {
        if cycles.is_empty() {
            break;
        }
        let c = &cycles[rng.gen_range(0..cycles.len())];
        let weight = BigInt::from(rng.gen_range(-5i64..=5));
        for i in 0..c.len() {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            let e = g.edge_index(a, b).expect("consecutive cycle vertices");
            if og.head(e) == b {
                z[e] += &weight;
            } else {
                z[e] -= &weight;
            }
        }
    }
    Ok(z)
}

/// Orbits of all sign assignments under vertex flips, found by search;
/// their number must be `2^(E-V+1)` and the canonical form must be constant
/// on orbits and distinct between them.
fn sign_classes_match(g: &Graph) -> cyclespace::Result<bool> {
    let e = g.edge_count();
    let flips: Vec<u64> = (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &(_, edge)| m | 1 << edge))
        .collect();
    let forest = g.spanning_forest();
    let mut orbit = vec![usize::MAX; 1 << e];
    let mut canon_of_orbit: Vec<BitVector> = Vec::new();
    for start in 0..(1usize << e) {
        if orbit[start] != usize::MAX {
            continue;
        }
        let id = canon_of_orbit.len();
        let mut queue = VecDeque::from([start]);
        orbit[start] = id;
        let mut canon: Option<BitVector> = None;
        while let Some(s) = queue.pop_front() {
            let sign = SignAssignment {
                minus: BitVector::from_indices(e, (0..e).filter(|&i| s >> i & 1 == 1)),
            };
            let c = sign_canonical_form(g, &forest, &sign)?.minus;
            match &canon {
                None => canon = Some(c),
                Some(prev) if prev != &c => return Ok(false),
                Some(_) => {}
            }
            for &f in &flips {
                let t = s ^ f as usize;
                if orbit[t] == usize::MAX {
                    orbit[t] = id;
                    queue.push_back(t);
                }
            }
        }
        canon_of_orbit.push(canon.expect("orbit is nonempty"));
    }
    let distinct: HashSet<&BitVector> = canon_of_orbit.iter().collect();
    let q = e + 1 - g.vertex_count();
    Ok(distinct.len() == canon_of_orbit.len() && canon_of_orbit.len() == 1 << q)
}

fn oracles(r: &mut Recorder, settings: &Settings) -> cyclespace::Result<()> {
    let corpus = graphs_up_to_isomorphism(6, 12);
    r.note("graphs on at most 6 vertices with E <= 12, up to isomorphism", corpus.len());
    r.all(
        "graph corpus: 2^(E-V+N) equals the exhaustive 1-cycle count",
        corpus.iter().map(|g| (g.to_edge_list(), brute_force_one_cycles(g) == 1 << dim(g))),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let random: Vec<Graph> = (0..200)
        .map(|_| {
            let v = rng.gen_range(7..=12);
            let e = rng.gen_range(0..=12);
            let pool: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
            let edges: Vec<(usize, usize)> = pool.choose_multiple(&mut rng, e).copied().collect();
            Graph::new(v, edges).expect("simple edges")
        })
        .collect();
    r.all(
        "200 random graphs on 7 to 12 vertices with E <= 12",
        random.iter().map(|g| (g.to_edge_list(), brute_force_one_cycles(g) == 1 << dim(g))),
    );

    let mut complexes: Vec<(String, CellComplex)> = Vec::new();
    let mut seen: HashMap<String, ()> = HashMap::new();
    let small = graphs_up_to_isomorphism(8, 4);
    for g in corpus.iter().chain(&small) {
        for cc in [CellComplex::full(g), CellComplex::deleted(g)] {
            if cc.cell_count() == 0 || cc.cell_count() > 16 {
                continue;
            }
            let name = format!("{}{}", if cc.is_deleted() { "deleted " } else { "full " }, g.to_edge_list().replace('\n', " "));
            if seen.insert(name.clone(), ()).is_none() {
                complexes.push((name, cc));
            }
        }
    }
    r.note("complexes with 1 to 16 cells", complexes.len());
    r.all(
        "complexes with at most 16 cells: 2^kernel equals the exhaustive 2-cycle count",
        complexes
            .iter()
            .map(|(name, cc)| (name.clone(), brute_force_two_cycles(cc) == 1 << two_cycle_kernel(cc).row_count())),
    );
    Ok(())
}
