//! Graph specifications on the command line.

use std::fs;

use cyclespace::hyper::Hypergraph2;
use cyclespace::Graph;

use crate::CliError;

/// Parses `K<n>`, `K<m>,<n>`, `C<n>`, `P<n>`, `W<n>`, `Ktilde<n>`, `triod`,
/// or `@<path>` naming an edge-list file.
pub fn parse_spec(text: &str) -> Result<Graph, CliError> {
    let text = text.trim();
    let usage = || CliError::Usage(format!("unknown graph spec `{text}`"));
    if let Some(path) = text.strip_prefix('@') {
        let body = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?;
        return Ok(Graph::parse_edge_list(&body)?);
    }
    if text == "triod" {
        return Ok(Graph::triod());
    }
    let number = |s: &str| s.parse::<usize>().map_err(|_| usage());
    let graph = if let Some(rest) = text.strip_prefix("Ktilde") {
        Graph::tilde_complete(number(rest)?)
    } else if let Some(rest) = text.strip_prefix('K') {
        match rest.split_once(',') {
            Some((m, n)) => Graph::complete_bipartite(number(m)?, number(n)?),
            None => Graph::complete(number(rest)?),
        }
    } else if let Some(rest) = text.strip_prefix('C') {
        Graph::cycle(number(rest)?)
    } else if let Some(rest) = text.strip_prefix('P') {
        Graph::path(number(rest)?)
    } else if let Some(rest) = text.strip_prefix('W') {
        Graph::wheel(number(rest)?)
    } else {
        return Err(usage());
    };
    graph.map_err(|e| CliError::Usage(format!("graph spec `{text}`: {e}")))
}

pub fn read_hypergraph(path: &str) -> Result<Hypergraph2, CliError> {
    let body = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?;
    Ok(Hypergraph2::parse(&body)?)
}
