//! `decompose <kind> ...`: split an input cycle into basic pieces and
//! report the pieces as JSON.

use cyclespace::cycles::{decompose_chordless, decompose_simple, decompose_squares_bipartite, decompose_triangles_complete};
use cyclespace::hyper::{decompose_relation, decompose_tetrahedra, elements, mask, RookGrid};
use cyclespace::{BitVector, EdgeSet, Graph};
use serde_json::{json, Value};

use crate::spec::parse_spec;
use crate::CliError;

pub const KINDS: [&str; 7] = ["simple", "chordless", "triangles", "squares", "tetrahedra", "relation", "rook"];

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn numbers(token: &str, sep: char) -> Result<Vec<usize>, CliError> {
    token
        .split(sep)
        .map(|t| t.trim().parse::<usize>().map_err(|_| usage(format!("bad number in `{token}`"))))
        .collect()
}

fn one_number(token: Option<&String>, what: &str) -> Result<usize, CliError> {
    let t = token.ok_or_else(|| usage(format!("missing {what}")))?;
    t.parse().map_err(|_| usage(format!("bad {what} `{t}`")))
}

/// Edges written `u-v` with 0-based vertices.
fn edge_set(g: &Graph, tokens: &[String]) -> Result<EdgeSet, CliError> {
    let mut c = g.empty_edge_set();
    for t in tokens {
        let uv = numbers(t, '-')?;
        if uv.len() != 2 {
            return Err(usage(format!("edge `{t}` is not `u-v`")));
        }
        let e = g
            .edge_index(uv[0], uv[1])
            .ok_or_else(|| usage(format!("`{t}` is not an edge")))?;
        c.flip(e);
    }
    Ok(c)
}

fn subsets(tokens: &[String], size: usize) -> Result<Vec<u64>, CliError> {
    tokens
        .iter()
        .map(|t| {
            let v = numbers(t, ',')?;
            if v.len() != size || v.iter().any(|&x| x >= 64) {
                return Err(usage(format!("`{t}` is not a {size}-subset")));
            }
            Ok(mask(&v))
        })
        .collect()
}

fn walks_json(walks: &[Vec<usize>]) -> Value {
    json!(walks)
}

/// Runs one decomposition; `args` follows the kind.
pub fn run_decompose(kind: &str, args: &[String]) -> Result<Value, CliError> {
    let parts = match kind {
        "simple" | "chordless" => {
            let g = parse_spec(args.first().ok_or_else(|| usage("missing graph spec"))?)?;
            let c = edge_set(&g, &args[1..])?;
            let walks = if kind == "simple" {
                decompose_simple(&g, &c)?
            } else {
                decompose_chordless(&g, &c)?
            };
            walks_json(&walks)
        }
        "triangles" => {
            let n = one_number(args.first(), "vertex count")?;
            let g = Graph::complete(n)?;
            json!(decompose_triangles_complete(&g, &edge_set(&g, &args[1..])?)?)
        }
        "squares" => {
            let n = one_number(args.first(), "part size")?;
            let g = Graph::complete_bipartite(n, n)?;
            json!(decompose_squares_bipartite(&g, &edge_set(&g, &args[1..])?)?)
        }
        "tetrahedra" | "relation" => {
            let n = one_number(args.first(), "vertex count")?;
            let size = if kind == "tetrahedra" { 3 } else { 4 };
            let c = subsets(&args[1..], size)?;
            let out = if kind == "tetrahedra" {
                decompose_tetrahedra(n, &c)?
            } else {
                decompose_relation(n, &c)?
            };
            json!(out.into_iter().map(elements).collect::<Vec<_>>())
        }
        "rook" => {
            let n = one_number(args.first(), "side")?;
            let l = one_number(args.get(1), "dimension")?;
            let grid = RookGrid::new(n, l)?;
            let mut s = BitVector::zeros(grid.cell_count());
            for t in &args[2..] {
                let c = numbers(t, ',')?;
                if c.len() != l || c.iter().any(|&x| x >= n) {
                    return Err(usage(format!("`{t}` is not a cell of [{n}]^{l}")));
                }
                s.flip(grid.index(&c));
            }
            json!(grid.decompose_parallelepipeds(&s)?)
        }
        other => {
            return Err(usage(format!("unknown decomposition `{other}`; expected one of {}", KINDS.join(", "))));
        }
    };
    Ok(json!({ "kind": kind, "input": args, "parts": parts }))
}
