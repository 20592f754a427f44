//! Text formats.
//!
//! Graph: a header line `graph <n>` followed by one `u v` edge per line.
//! Tournament: `tournament <n>` followed either by one `u v` arc per line
//! (all `C(n,2)` pairs) or by the line `matrix` and `n` rows of `n`
//! characters from `{0,1}`, where row `v`, column `u` is `1` iff `v -> u`.
//! Indices are 0-based; fields are whitespace separated. Blank lines are
//! skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::Kind;
use crate::tournament::Tournament;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Graph(Graph),
    Tournament(Tournament),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Graph(_) => Kind::Graph,
            Object::Tournament(_) => Kind::Tournament,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Object::Graph(g) => g.order(),
            Object::Tournament(t) => t.order(),
        }
    }
}

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_pair(line: usize, s: &str, n: usize) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return parse_err(line, format!("expected `u v`, got `{s}`"));
    };
    let parse = |x: &str| {
        x.parse::<usize>()
            .map_err(|_| Error::Parse {
                line,
                msg: format!("`{x}` is not a vertex index"),
            })
    };
    let (u, v) = (parse(a)?, parse(b)?);
    if u >= n || v >= n {
        return parse_err(line, format!("pair ({u},{v}) out of range 0..{n}"));
    }
    if u == v {
        return parse_err(line, format!("self-pair ({u},{u})"));
    }
    Ok((u, v))
}

/// Parses either format, dispatching on the header.
pub fn parse_object(text: &str) -> Result<Object> {
    let Some((line, header)) = lines(text).next() else {
        return parse_err(1, "empty input");
    };
    match header.split_whitespace().next() {
        Some("graph") => parse_graph(text).map(Object::Graph),
        Some("tournament") => parse_tournament(text).map(Object::Tournament),
        _ => parse_err(line, format!("unknown header `{header}`")),
    }
}

fn parse_header(line: usize, header: &str, keyword: &str) -> Result<usize> {
    let mut it = header.split_whitespace();
    if it.next() != Some(keyword) {
        return parse_err(line, format!("expected header `{keyword} <n>`"));
    }
    match (it.next().map(str::parse::<usize>), it.next()) {
        (Some(Ok(n)), None) => Ok(n),
        _ => parse_err(line, format!("expected header `{keyword} <n>`, got `{header}`")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut it = lines(text);
    let Some((hline, header)) = it.next() else {
        return parse_err(1, "empty input");
    };
    let n = parse_header(hline, header, "graph")?;
    let mut edges = Vec::new();
    for (line, s) in it {
        edges.push(parse_pair(line, s, n)?);
    }
    Graph::from_edges(n, &edges)
}

pub fn parse_tournament(text: &str) -> Result<Tournament> {
    let mut it = lines(text).peekable();
    let Some((hline, header)) = it.next() else {
        return parse_err(1, "empty input");
    };
    let n = parse_header(hline, header, "tournament")?;
    if matches!(it.peek(), Some((_, "matrix"))) {
        let (mline, _) = it.next().unwrap();
        let mut arcs = Vec::new();
        let mut rows = 0;
        for (line, s) in it {
            if rows == n {
                return parse_err(line, "extra row after matrix");
            }
            let bytes = s.as_bytes();
            if bytes.len() != n {
                return parse_err(line, format!("row has {} characters, expected {n}", bytes.len()));
            }
            for (u, &c) in bytes.iter().enumerate() {
                match c {
                    b'1' if u == rows => return parse_err(line, format!("self-arc at {u}")),
                    b'1' => arcs.push((rows, u)),
                    b'0' => {}
                    _ => return parse_err(line, format!("invalid character `{}`", c as char)),
                }
            }
            rows += 1;
        }
        if rows != n {
            return parse_err(mline, format!("matrix has {rows} rows, expected {n}"));
        }
        return Tournament::from_arcs(n, &arcs).map_err(|e| Error::Parse {
            line: mline,
            msg: e.to_string(),
        });
    }
    let mut arcs = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (line, s) in it {
        let (u, v) = parse_pair(line, s, n)?;
        if let Some(prev) = seen.insert((u.min(v), u.max(v)), line) {
            return parse_err(line, format!("pair ({u},{v}) already given on line {prev}"));
        }
        arcs.push((u, v));
    }
    Tournament::from_arcs(n, &arcs).map_err(|e| Error::Parse {
        line: hline,
        msg: e.to_string(),
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Arc-list form if `matrix` is false, otherwise the matrix form.
pub fn write_tournament(t: &Tournament, matrix: bool) -> String {
    let n = t.order();
    let mut s = format!("tournament {n}\n");
    if matrix {
        s.push_str("matrix\n");
        for v in 0..n {
            s.extend((0..n).map(|u| if t.beats(v, u) { '1' } else { '0' }));
            s.push('\n');
        }
    } else {
        for (u, v) in t.arcs() {
            s.push_str(&format!("{u} {v}\n"));
        }
    }
    s
}

pub fn write_object(obj: &Object) -> String {
    match obj {
        Object::Graph(g) => write_graph(g),
        Object::Tournament(t) => write_tournament(t, false),
    }
}
