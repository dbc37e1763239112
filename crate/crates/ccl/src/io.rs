//! Edge-list text format.
//!
//! The first non-comment line holds the vertex count `n`; every further
//! line holds one edge `u v` with 0-based endpoints. Blank lines and lines
//! starting with `#` are ignored.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use ccl_core::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{origin}:{line}: {message}")]
    Line {
        origin: String,
        line: usize,
        message: String,
    },
    #[error("{origin}: missing vertex count line")]
    MissingHeader { origin: String },
    #[error("{origin}: {source}")]
    Io {
        origin: String,
        #[source]
        source: std::io::Error,
    },
}

pub fn parse_edge_list(text: &str, origin: &str) -> Result<Graph, ParseError> {
    let fail = |line: usize, message: String| ParseError::Line {
        origin: origin.to_string(),
        line,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| ParseError::MissingHeader {
        origin: origin.to_string(),
    })?;
    let n: usize = header
        .parse()
        .map_err(|_| fail(hline, format!("expected a vertex count, found {header:?}")))?;
    let mut g = Graph::empty(n).map_err(|e| fail(hline, e.to_string()))?;
    let mut seen = HashSet::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(fail(no, format!("expected two vertices, found {line:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| fail(no, format!("not a vertex index: {s:?}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u >= n || v >= n {
            return Err(fail(
                no,
                format!("vertex {} out of range for n = {n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(fail(no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(fail(no, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| fail(no, e.to_string()))?;
    }
    Ok(g)
}

pub fn read_edge_list(path: &Path) -> Result<Graph, ParseError> {
    let origin = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| ParseError::Io {
        origin: origin.clone(),
        source,
    })?;
    parse_edge_list(&text, &origin)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").expect("writing to a String");
    }
    s
}
