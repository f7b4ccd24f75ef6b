//! Text (`.h3`) and JSON serialization.
//!
//! ```text
//! # comments are allowed anywhere
//! h3 <n> <m>
//! a b c        (m lines, 0-based, ascending within and across lines)
//! ```

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    H3,
    Json,
}

impl Format {
    /// Guess from a file extension; anything but `.json` is `.h3`.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::H3,
        }
    }
}

pub fn to_h3(g: &Hypergraph3) -> String {
    let mut s = String::with_capacity(16 + 12 * g.edge_count());
    writeln!(s, "h3 {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in g.edges() {
        writeln!(s, "{e}").unwrap();
    }
    s
}

pub fn parse_h3(text: &str) -> Result<Hypergraph3> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Triple> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.split('\n').enumerate() {
        let lineno = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        last_line = lineno;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some((n, m)) = header else {
            if fields.len() != 3 || fields[0] != "h3" {
                return Err(Error::parse(lineno, "expected header `h3 <n> <m>`"));
            }
            let n = parse_num(fields[1], lineno)?;
            let m = parse_num(fields[2], lineno)?;
            header = Some((n, m));
            continue;
        };
        if fields.len() != 3 {
            return Err(Error::parse(lineno, "expected three vertex ids"));
        }
        let v = [
            parse_num(fields[0], lineno)?,
            parse_num(fields[1], lineno)?,
            parse_num(fields[2], lineno)?,
        ];
        if !(v[0] < v[1] && v[1] < v[2]) {
            return Err(Error::parse(lineno, "vertex ids must be strictly ascending"));
        }
        if v[2] >= n {
            return Err(Error::parse(lineno, format!("vertex {} out of range for n = {n}", v[2])));
        }
        let e = Triple::of(v[0], v[1], v[2]);
        if let Some(prev) = edges.last() {
            if *prev == e {
                return Err(Error::parse(lineno, format!("duplicate edge {e}")));
            }
            if *prev > e {
                return Err(Error::parse(lineno, "edges must be in ascending lexicographic order"));
            }
        }
        if edges.len() == m {
            return Err(Error::parse(lineno, format!("more than the declared {m} edges")));
        }
        edges.push(e);
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(last_line.max(1), "missing header `h3 <n> <m>`"));
    };
    if edges.len() != m {
        return Err(Error::parse(
            last_line.max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Hypergraph3::from_sorted_unchecked(n, edges))
}

fn parse_num(s: &str, line: usize) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::parse(line, format!("not a non-negative integer: {s:?}")))
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 3]>,
}

pub fn to_json(g: &Hypergraph3) -> String {
    let j = JsonGraph {
        n: g.vertex_count(),
        edges: g.edges().iter().map(|e| e.vertices()).collect(),
    };
    let mut s = serde_json::to_string(&j).expect("plain data serializes");
    s.push('\n');
    s
}

/// JSON errors carry the serde line; ordering violations report the
/// offending edge index as the "line".
pub fn parse_json(text: &str) -> Result<Hypergraph3> {
    let j: JsonGraph = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let mut edges = Vec::with_capacity(j.edges.len());
    for (i, v) in j.edges.iter().enumerate() {
        let at = i + 1;
        if !(v[0] < v[1] && v[1] < v[2]) {
            return Err(Error::parse(at, "vertex ids must be strictly ascending"));
        }
        if v[2] >= j.n {
            return Err(Error::parse(at, format!("vertex {} out of range for n = {}", v[2], j.n)));
        }
        let e = Triple::of(v[0], v[1], v[2]);
        if let Some(prev) = edges.last() {
            if *prev >= e {
                return Err(Error::parse(at, "edges must be strictly ascending"));
            }
        }
        edges.push(e);
    }
    Ok(Hypergraph3::from_sorted_unchecked(j.n, edges))
}

pub fn render(g: &Hypergraph3, format: Format) -> String {
    match format {
        Format::H3 => to_h3(g),
        Format::Json => to_json(g),
    }
}

pub fn parse(text: &str, format: Format) -> Result<Hypergraph3> {
    match format {
        Format::H3 => parse_h3(text),
        Format::Json => parse_json(text),
    }
}

pub fn read_file(path: &Path) -> Result<Hypergraph3> {
    let text = std::fs::read_to_string(path)?;
    parse(&text, Format::from_path(path))
}

/// Writes via a sibling temp file and rename, so readers never observe a
/// partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{name}.tmp{}", std::process::id()));
    let result = (|| {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
        std::fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
    Ok(result?)
}

pub fn write_file(path: &Path, g: &Hypergraph3, format: Format) -> Result<()> {
    write_atomic(path, render(g, format).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h3_round_trip() {
        let g = Hypergraph3::from_triples(6, &[[0, 1, 2], [0, 3, 4], [2, 4, 5]]);
        let text = to_h3(&g);
        assert_eq!(text, "h3 6 3\n0 1 2\n0 3 4\n2 4 5\n");
        assert_eq!(parse_h3(&text).unwrap(), g);
        let commented = "# lead\nh3 6 3\n0 1 2\n# mid\n0 3 4\n2 4 5\n";
        assert_eq!(parse_h3(commented).unwrap(), g);
    }

    #[test]
    fn h3_errors_carry_line_numbers() {
        let cases = [
            ("h3 4 1\n0 2 1\n", 2),
            ("h3 4 2\n0 1 2\n0 1 2\n", 3),
            ("h3 4 2\n1 2 3\n0 1 2\n", 3),
            ("h3 3 1\n0 1 3\n", 2),
            ("# c\nhx 3 1\n", 2),
            ("h3 5 2\n0 1 2\n", 2),
            ("h3 5 1\n0 1 x\n", 2),
        ];
        for (text, line) in cases {
            match parse_h3(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = Hypergraph3::from_triples(4, &[[0, 1, 2], [1, 2, 3]]);
        let text = to_json(&g);
        assert_eq!(text, "{\"n\":4,\"edges\":[[0,1,2],[1,2,3]]}\n");
        assert_eq!(parse_json(&text).unwrap(), g);
        assert!(parse_json("{\"n\":4,\"edges\":[[1,2,3],[0,1,2]]}").is_err());
        assert!(parse_json("{\"n\":3,\"edges\":[[0,1,3]]}").is_err());
    }
}
