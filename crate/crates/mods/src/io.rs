//! Plain-text instance files and instance loading.
//!
//! A digraph file starts with `digraph <n> <m>` followed by `m` lines
//! `<u> <v>`, one arc `u -> v` per line. A graph file is the same with a
//! `graph` header and unordered pairs. Blank lines and lines starting with
//! `#` are ignored anywhere. Labels are 0-based.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::family::{FamilySpec, Instance, FAMILY_NAMES};
use crate::graph::Graph;

pub fn parse_instance_text(text: &str) -> Result<Instance> {
    let (header_line, header, rest) = split_header(text)?;
    match header.0.as_str() {
        "digraph" => {
            let arcs = parse_pairs(rest, header.1, header.2, header_line)?;
            Ok(Instance::Digraph(Digraph::new(header.1, arcs)?))
        }
        "graph" => {
            let edges = parse_pairs(rest, header.1, header.2, header_line)?;
            Ok(Instance::Graph(Graph::new(header.1, edges)?))
        }
        other => Err(Error::Parse {
            line: header_line,
            msg: format!("expected `digraph` or `graph`, found `{}`", other),
        }),
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    parse_instance_text(text)?.into_digraph()
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_instance_text(text)?.into_graph()
}

pub fn format_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {}", d.order(), d.arc_count()).unwrap();
    for &(u, v) in d.arcs() {
        writeln!(out, "{} {}", u, v).unwrap();
    }
    out
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {}", g.order(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", u, v).unwrap();
    }
    out
}

/// Loads an instance from a family spec string (when the prefix before `:`
/// names a known family) or otherwise from a file path.
pub fn load_instance(source: &str) -> Result<Instance> {
    if let Some((name, _)) = source.split_once(':') {
        if FAMILY_NAMES.contains(&name) {
            return FamilySpec::from_str(source)?.build();
        }
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::Io {
        path: source.to_string(),
        source: e,
    })?;
    parse_instance_text(&text)
}

type Header = (String, usize, usize);
type NumberedLines<'a> = Vec<(usize, &'a str)>;

/// Lines paired with their 1-based numbers, comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn split_header(text: &str) -> Result<(usize, Header, NumberedLines<'_>)> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty instance file".to_string(),
    })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 {
        return Err(Error::Parse {
            line: line_no,
            msg: "header must be `digraph <n> <m>` or `graph <n> <m>`".to_string(),
        });
    }
    let n = parse_num(toks[1], line_no)?;
    let m = parse_num(toks[2], line_no)?;
    Ok((line_no, (toks[0].to_string(), n, m), lines.collect()))
}

fn parse_pairs(
    lines: NumberedLines<'_>,
    n: usize,
    m: usize,
    header_line: usize,
) -> Result<Vec<(usize, usize)>> {
    let mut pairs = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `<u> <v>`, found `{}`", line),
            });
        }
        let u = parse_num(toks[0], line_no)?;
        let v = parse_num(toks[1], line_no)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex out of range for order {}", n),
            });
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header declares {} pairs but {} follow", m, pairs.len()),
        });
    }
    Ok(pairs)
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found `{}`", tok),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_round_trip() {
        let text = "digraph 4 3\n0 1\n1 2\n2 3\n";
        let d = parse_digraph(text).unwrap();
        assert_eq!(d.arcs(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(format_digraph(&d), text);
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let text = "# a path\n\ngraph 3 2\n0 1\n# middle\n1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_digraph("digraph 3 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_digraph("digraph 3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_digraph("digraph 2 1\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_instance_text("network 2 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn load_family_or_file() {
        let inst = load_instance("dipath:4").unwrap();
        assert_eq!(inst.kind(), "digraph");
        let inst = load_instance("star:5").unwrap();
        assert_eq!(inst.kind(), "graph");
        let dir = std::env::temp_dir().join("mods-io-test");
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("p3.digraph");
        std::fs::write(&file, "digraph 3 2\n0 1\n1 2\n").unwrap();
        let inst = load_instance(file.to_str().unwrap()).unwrap();
        assert_eq!(inst.order(), 3);
        assert!(load_instance("no/such/file").is_err());
    }
}
