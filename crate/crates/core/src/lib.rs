//! Cycle spaces of graphs, their squares and deleted squares, cellular
//! 2-cycles, and simplicial 2-cycles of 3-uniform hypergraphs, all over
//! GF(2).

pub mod cellular;
pub mod count;
pub mod cycles;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod homology;
pub mod hyper;
pub mod product;

pub use count::PowerOfTwo;
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector, EchelonBasis, SpanSolver};
pub use graph::{EdgeSet, Graph, Involution, SpanningForest};
pub use product::{CellComplex, CellSet, NamedCycle, ProductEdge, ProductGraph, TildeCorrespondence};
