//! Named graph families.

use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: &'static str, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    Circulant,
    Hypercube,
    Petersen,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::CompleteBipartite,
        Family::Cycle,
        Family::Path,
        Family::Circulant,
        Family::Hypercube,
        Family::Petersen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Circulant => "circulant",
            Family::Hypercube => "hypercube",
            Family::Petersen => "petersen",
        }
    }

    pub fn usage(self) -> &'static str {
        match self {
            Family::Complete => "complete <n>",
            Family::CompleteBipartite => "complete_bipartite <a> <b>",
            Family::Cycle => "cycle <n>  (n ≥ 3)",
            Family::Path => "path <n>",
            Family::Circulant => "circulant <n> <s1> [s2 ...]",
            Family::Hypercube => "hypercube <d>",
            Family::Petersen => "petersen",
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }
}

pub fn complete(n: usize) -> Graph {
    crate::colorer::complete_graph(n)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut e = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in a..a + b {
            e.push((i, j));
        }
    }
    Graph::new(a + b, &e).expect("simple")
}

/// Panics for `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need three vertices");
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &e).expect("simple")
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &e).expect("simple")
}

/// `i ~ i ± s (mod n)` for each `s` in the connection set; `0 < s < n`.
pub fn circulant(n: usize, connections: &[usize]) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for &s in connections {
            assert!(s > 0 && s < n, "connection {s} out of range for n={n}");
            e.push((i, (i + s) % n));
        }
    }
    Graph::new(n, &e).expect("simple")
}

pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let mut e = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                e.push((v, w));
            }
        }
    }
    Graph::new(n, &e).expect("simple")
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((5 + i, 5 + (i + 2) % 5));
        e.push((i, i + 5));
    }
    Graph::new(10, &e).expect("simple")
}

/// Builds a family member from numeric parameters.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph, FamilyError> {
    let bad = |reason: &str| FamilyError::BadParams { family: family.name(), reason: reason.to_string() };
    let want = |k: usize| if params.len() == k { Ok(()) } else { Err(bad(&format!("expected {k} parameter(s)"))) };
    match family {
        Family::Complete => {
            want(1)?;
            Ok(complete(params[0]))
        }
        Family::CompleteBipartite => {
            want(2)?;
            Ok(complete_bipartite(params[0], params[1]))
        }
        Family::Cycle => {
            want(1)?;
            if params[0] < 3 {
                return Err(bad("a cycle needs n ≥ 3"));
            }
            Ok(cycle(params[0]))
        }
        Family::Path => {
            want(1)?;
            Ok(path(params[0]))
        }
        Family::Circulant => {
            let Some((&n, conn)) = params.split_first() else {
                return Err(bad("expected n and a connection set"));
            };
            if conn.is_empty() || conn.iter().any(|&s| s == 0 || s >= n) {
                return Err(bad("connections must lie in 1..n"));
            }
            Ok(circulant(n, conn))
        }
        Family::Hypercube => {
            want(1)?;
            if params[0] > 20 {
                return Err(bad("dimension at most 20"));
            }
            Ok(hypercube(params[0]))
        }
        Family::Petersen => {
            want(0)?;
            Ok(petersen())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(generate(Family::Complete, &[5]).unwrap().edge_count(), 10);
        let k24 = generate(Family::CompleteBipartite, &[2, 4]).unwrap();
        assert_eq!((k24.n(), k24.edge_count(), k24.degree(0), k24.degree(2)), (6, 8, 4, 2));
        let c8 = generate(Family::Circulant, &[8, 1, 2]).unwrap();
        assert!((0..8).all(|v| c8.degree(v) == 4));
        assert_eq!(c8.edge_count(), 16);
        let q3 = hypercube(3);
        assert!((0..8).all(|v| q3.degree(v) == 3));
        let p = petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(path(1).edge_count(), 0);
    }

    #[test]
    fn circulant_with_half_step() {
        // s = n/2 gives a perfect matching, counted once
        let g = circulant(6, &[1, 3]);
        assert!((0..6).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn bad_params() {
        assert!(generate(Family::Cycle, &[2]).is_err());
        assert!(generate(Family::Complete, &[]).is_err());
        assert!(generate(Family::Circulant, &[5, 5]).is_err());
        assert!(generate(Family::Petersen, &[1]).is_err());
        assert_eq!("wheel".parse::<Family>(), Err(FamilyError::Unknown("wheel".into())));
        assert_eq!("hypercube".parse::<Family>(), Ok(Family::Hypercube));
    }
}
