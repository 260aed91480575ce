//! Edge-list text format: a header line `n c`, then one `u v colour` line per
//! edge in edge-id order.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use super::{ColouredGraph, Edge, GraphError};

pub fn write_edge_list<W: Write>(g: &ColouredGraph, mut out: W) -> Result<(), GraphError> {
    writeln!(out, "{} {}", g.n(), g.colours())?;
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.colour)?;
    }
    Ok(())
}

/// Reads the edge-list format. A file containing a loop or a repeated pair
/// is loaded as a multigraph.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<ColouredGraph, GraphError> {
    let mut lines = input.lines().enumerate().filter_map(|(i, line)| match line {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(Ok((i + 1, l))),
        Err(e) => Some(Err(GraphError::from(e))),
    });
    let (line_no, header) = lines
        .next()
        .ok_or(GraphError::Parse { line: 1, reason: "missing `n c` header".into() })??;
    let head = parse_fields::<2>(line_no, &header)?;
    let (n, c) = (head[0] as usize, u32_field(line_no, head[1])?);

    let mut edges = Vec::new();
    let mut pairs = HashSet::new();
    let mut multigraph = false;
    for item in lines {
        let (line_no, line) = item?;
        let f = parse_fields::<3>(line_no, &line)?;
        let e = Edge::new(u32_field(line_no, f[0])?, u32_field(line_no, f[1])?, u32_field(line_no, f[2])?);
        multigraph |= e.is_loop() || !pairs.insert(e.key());
        edges.push(e);
    }
    if multigraph {
        ColouredGraph::multigraph(n, c, edges)
    } else {
        ColouredGraph::new(n, c, edges)
    }
}

fn parse_fields<const K: usize>(line: usize, text: &str) -> Result<[u64; K], GraphError> {
    let mut out = [0u64; K];
    let mut it = text.split_whitespace();
    for slot in out.iter_mut() {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line,
            reason: format!("expected {K} fields"),
        })?;
        *slot = tok
            .parse()
            .map_err(|e| GraphError::Parse { line, reason: format!("{tok:?}: {e}") })?;
    }
    if it.next().is_some() {
        return Err(GraphError::Parse { line, reason: format!("expected {K} fields") });
    }
    Ok(out)
}

fn u32_field(line: usize, x: u64) -> Result<u32, GraphError> {
    u32::try_from(x).map_err(|_| GraphError::Parse { line, reason: format!("{x} exceeds u32") })
}
