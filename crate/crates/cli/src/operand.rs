use dspectra::graph::from_graph6;
use dspectra::ops::{cycle_union, PartitionMin3};
use dspectra::{Graph, StandardGraph};

use crate::report::CliError;

/// Parses `gen:<kind>:<params>`, `g6:<graph6>` or a bare graph6 string.
pub fn parse_operand(s: &str) -> Result<Graph, CliError> {
    let s = s.trim();
    if let Some(spec) = s.strip_prefix("gen:") {
        parse_generator(spec)
    } else if let Some(g6) = s.strip_prefix("g6:") {
        from_graph6(g6).map_err(CliError::parse)
    } else {
        from_graph6(s).map_err(CliError::parse)
    }
}

/// `<kind>:<params>`, optionally prefixed with `gen:`.
pub fn parse_generator(spec: &str) -> Result<Graph, CliError> {
    let spec = spec.strip_prefix("gen:").unwrap_or(spec);
    if let Some(parts) = spec.strip_prefix("cycles:") {
        let p = parse_partition(parts)?;
        return cycle_union(&p).map_err(CliError::precondition);
    }
    let kind: StandardGraph = spec.parse().map_err(CliError::parse)?;
    kind.build().map_err(CliError::precondition)
}

pub fn parse_partition(s: &str) -> Result<PartitionMin3, CliError> {
    let parts = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Parse(format!("bad part {p:?} in partition {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    PartitionMin3::new(parts).map_err(CliError::precondition)
}

/// Splits on commas that start a new `gen:`/`g6:` operand, so
/// `gen:cycle:6,gen:cycles:3,3` yields two operands.
pub fn split_operands(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, _) in s.match_indices(',') {
        let rest = &s[i + 1..];
        if rest.starts_with("gen:") || rest.starts_with("g6:") {
            out.push(&s[start..i]);
            start = i + 1;
        }
    }
    out.push(&s[start..]);
    out.into_iter().filter(|p| !p.is_empty()).collect()
}
