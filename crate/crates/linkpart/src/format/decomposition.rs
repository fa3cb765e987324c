use std::fmt::Write;

use linkpart_core::TreeDecomposition;

use super::{content_lines, parse_num, FormatError};

/// `s td <bags> <width+1> <n>`, then `b <i> <v...>` per bag and `<i> <j>` per tree edge; all 0-indexed.
pub fn write_decomposition(td: &TreeDecomposition, n: usize) -> String {
    let mut s = format!("s td {} {} {}\n", td.len(), td.width() + 1, n);
    for (i, bag) in td.bags().iter().enumerate() {
        let _ = write!(s, "b {i}");
        for v in bag {
            let _ = write!(s, " {v}");
        }
        s.push('\n');
    }
    for (a, b) in td.tree_edges() {
        let _ = writeln!(s, "{a} {b}");
    }
    s
}

/// Returns the decomposition and the declared vertex count.
pub fn parse_decomposition(text: &str) -> Result<(TreeDecomposition, usize), FormatError> {
    let mut lines = content_lines(text);
    let (hline, h) = lines.next().ok_or_else(|| FormatError::new(1, "missing `s td` header"))?;
    if h.len() != 5 || h[0] != "s" || h[1] != "td" {
        return Err(FormatError::new(hline, "expected `s td <bags> <width+1> <n>`"));
    }
    let count = parse_num(hline, h[2], "bag count")?;
    let n = parse_num(hline, h[4], "vertex count")?;
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; count];
    let mut edges = Vec::new();
    for (line, toks) in lines {
        if toks[0] == "b" {
            let i = parse_num(line, toks.get(1).copied().unwrap_or(""), "bag index")?;
            if i >= count || bags[i].is_some() {
                return Err(FormatError::new(line, format!("bag {i} out of range or repeated")));
            }
            let bag = toks[2..].iter().map(|t| parse_num(line, t, "vertex")).collect::<Result<Vec<_>, _>>()?;
            if let Some(&v) = bag.iter().find(|&&v| v >= n) {
                return Err(FormatError::new(line, format!("vertex {v} out of range 0..{n}")));
            }
            bags[i] = Some(bag);
        } else {
            if toks.len() != 2 {
                return Err(FormatError::new(line, "expected `<i> <j>` tree edge"));
            }
            let (a, b) = (parse_num(line, toks[0], "bag index")?, parse_num(line, toks[1], "bag index")?);
            if a >= count || b >= count {
                return Err(FormatError::new(line, "tree edge endpoint out of range"));
            }
            edges.push((a, b));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| FormatError::new(hline, format!("bag {i} missing"))))
        .collect::<Result<Vec<_>, _>>()?;
    let td = TreeDecomposition::new(bags, edges).map_err(|e| FormatError::new(0, e.to_string()))?;
    if td.width() + 1 != parse_num(hline, h[3], "bag size")? {
        return Err(FormatError::new(hline, "declared bag size does not match the bags"));
    }
    Ok((td, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkpart_core::graph::families::grid;
    use linkpart_core::treewidth::heuristic_decomposition;

    #[test]
    fn round_trip() {
        let g = grid(4, 4);
        let td = heuristic_decomposition(&g);
        let text = write_decomposition(&td, g.n());
        let (back, n) = parse_decomposition(&text).unwrap();
        assert_eq!(n, 16);
        assert_eq!(back, td);
        assert!(back.validate(&g));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_decomposition("s td 1 2 2\nb 0 0 5\n").unwrap_err().line, 2);
        assert_eq!(parse_decomposition("s td 2 2 2\nb 0 0 1\n").unwrap_err().line, 1);
        assert_eq!(parse_decomposition("s td 1 3 2\nb 0 0 1\n").unwrap_err().line, 1);
        assert_eq!(parse_decomposition("s td 2 1 2\nb 0 0\nb 1 1\n0 2\n").unwrap_err().line, 4);
    }
}
