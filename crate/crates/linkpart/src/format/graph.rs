use std::fmt::Write;

use linkpart_core::{Certificate, CertificateKind, Graph};

use super::{content_lines, parse_num, FormatError};

/// `p <n> <m>` followed by one `e <u> <v>` line per edge, 0-indexed.
pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| FormatError::new(1, "missing `p <n> <m>` header"))?;
    if header.len() != 3 || header[0] != "p" {
        return Err(FormatError::new(hline, "expected `p <n> <m>`"));
    }
    let n = parse_num(hline, header[1], "vertex count")?;
    let m = parse_num(hline, header[2], "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, toks) in lines {
        if toks.len() != 3 || toks[0] != "e" {
            return Err(FormatError::new(line, "expected `e <u> <v>`"));
        }
        let u = parse_num(line, toks[1], "vertex")?;
        let v = parse_num(line, toks[2], "vertex")?;
        if u >= n || v >= n {
            return Err(FormatError::new(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(FormatError::new(line, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(FormatError::new(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::new(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges).map_err(|e| FormatError::new(0, e.to_string()))
}

/// Inverse of [`Certificate::to_line`].
pub fn parse_certificate(line: &str) -> Result<Certificate, FormatError> {
    let (head, rest) = line.trim().split_once(':').ok_or_else(|| FormatError::new(1, "expected `path:` or `cycle:`"))?;
    let kind = match head {
        "path" => CertificateKind::Path,
        "cycle" => CertificateKind::Cycle,
        other => return Err(FormatError::new(1, format!("unknown certificate kind `{other}`"))),
    };
    let vertices = rest.split_whitespace().map(|t| parse_num(1, t, "vertex")).collect::<Result<_, _>>()?;
    Ok(Certificate { kind, vertices })
}
