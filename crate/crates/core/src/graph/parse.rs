use crate::error::ParseError;

use super::Graph;

fn parse_pair(line_no: usize, fields: &[&str]) -> Result<(usize, usize), ParseError> {
    if fields.len() != 2 {
        return Err(ParseError::Malformed {
            line: line_no,
            reason: format!("expected 2 fields, found {}", fields.len()),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| ParseError::Malformed {
            line: line_no,
            reason: format!("{s:?} is not a non-negative integer"),
        })
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

/// Reads the edge-list text format.
///
/// The first non-comment line is the header `n m`, followed by exactly `m`
/// lines `u v` with `0 <= u, v < n`. Lines whose first non-blank character is
/// `#` are comments; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or(ParseError::MissingHeader { line: text.lines().count().max(1) })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = parse_pair(header_line, &fields)?;

    let mut g = Graph::empty(n);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (u, v) = parse_pair(line_no, &fields)?;
        if g.edge_count() == m {
            return Err(ParseError::EdgeCount {
                line: line_no,
                expected: m,
                found: m + 1,
            });
        }
        for id in [u, v] {
            if id >= n {
                return Err(ParseError::IdOutOfRange { line: line_no, id, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line: line_no, node: u });
        }
        if g.has_edge(u, v) {
            return Err(ParseError::DuplicateEdge { line: line_no, u, v });
        }
        g.add_edge(u, v).expect("edge validated above");
        last_line = line_no;
    }
    if g.edge_count() != m {
        return Err(ParseError::EdgeCount {
            line: last_line,
            expected: m,
            found: g.edge_count(),
        });
    }
    Ok(g)
}
