//! Whitespace-separated `u v` pairs, one per line. `#` starts a comment; an
//! optional `n=<k>` line fixes the vertex count (otherwise 1 + largest
//! vertex seen).

use crate::graph::Graph;

use super::ParseError;

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut pairs = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let err = |message: String| ParseError::Line { line, message };
        if let Some(rest) = body.strip_prefix("n=") {
            let n = rest.trim().parse().map_err(|_| err(format!("bad vertex count {rest:?}")))?;
            declared = Some(n);
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected two vertices, found {}", fields.len())));
        }
        let parse = |f: &str| f.parse::<usize>().map_err(|_| err(format!("bad vertex {f:?}")));
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        pairs.push((line, u, v));
    }
    let n = declared.unwrap_or_else(|| pairs.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0));
    for &(line, u, v) in &pairs {
        if u >= n || v >= n {
            return Err(ParseError::Line { line, message: format!("vertex {} exceeds n={n}", u.max(v)) });
        }
        if u == v {
            return Err(ParseError::Line { line, message: format!("loop at vertex {u}") });
        }
    }
    let edges: Vec<(usize, usize)> = pairs.iter().map(|&(_, u, v)| (u, v)).collect();
    Graph::new(n, &edges).map_err(|e| ParseError::Line { line: last_line, message: e.to_string() })
}

/// `n=<k>` followed by one edge per line.
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(parse_edgelist("0 1\n1 2").unwrap(), p3);
        assert_eq!(parse_edgelist("0 1\n# comment\n\n1 2").unwrap(), p3);
        assert_eq!(parse_edgelist("1 0 # trailing\n2 1\n").unwrap(), p3);
    }

    #[test]
    fn errors_carry_line() {
        assert_eq!(
            parse_edgelist("0 x").unwrap_err(),
            ParseError::Line { line: 1, message: "bad vertex \"x\"".into() }
        );
        assert!(matches!(parse_edgelist("0 1\n\n3 3"), Err(ParseError::Line { line: 3, .. })));
        assert!(matches!(parse_edgelist("n=2\n0 5"), Err(ParseError::Line { line: 2, .. })));
        assert!(matches!(parse_edgelist("0 1 2"), Err(ParseError::Line { line: 1, .. })));
    }

    #[test]
    fn header_and_round_trip() {
        let g = parse_edgelist("n=4\n0 1").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
        assert_eq!(parse_edgelist("").unwrap().n(), 0);
    }
}
