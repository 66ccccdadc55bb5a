//! Backtracking search for mutually orthogonal ADE / Kodaira-fiber
//! configurations inside a curve graph.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fiber::Kodaira;
use crate::graph::CurveGraph;

/// A Dynkin diagram (`A3`, `D4`, `E6`) or the dual graph of a Kodaira
/// fiber (`IV*`, `I3`, `I1*`) with its multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    A(usize),
    D(usize),
    E(usize),
    Fiber(Kodaira),
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("unknown shape `{s}`"));
        let num = |r: &str| r.parse::<usize>().map_err(|_| bad());
        if let Some(r) = t.strip_prefix('A') {
            return Ok(Shape::A(num(r)?));
        }
        if let Some(r) = t.strip_prefix('D') {
            return Ok(Shape::D(num(r)?));
        }
        if let Some(r) = t.strip_prefix('E') {
            return Ok(Shape::E(num(r)?));
        }
        Ok(Shape::Fiber(t.parse()?))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::A(n) => write!(f, "A{n}"),
            Shape::D(n) => write!(f, "D{n}"),
            Shape::E(n) => write!(f, "E{n}"),
            Shape::Fiber(k) => write!(f, "{k}"),
        }
    }
}

/// Pattern graph: vertex multiplicities and weighted edges.
#[derive(Debug, Clone)]
pub struct Pattern {
    pub mult: Vec<i64>,
    pub edges: Vec<(usize, usize, i64)>,
}

fn path(n: usize) -> Vec<(usize, usize, i64)> {
    (1..n).map(|i| (i - 1, i, 1)).collect()
}

impl Shape {
    pub fn pattern(self) -> Result<Pattern> {
        let unsupported = || Error::Precondition(format!("shape {self} has no simple dual graph"));
        Ok(match self {
            Shape::A(n) if n >= 1 => Pattern { mult: vec![1; n], edges: path(n) },
            Shape::D(n) if n >= 4 => {
                let mut edges = path(n - 1);
                edges.push((n - 3, n - 1, 1));
                Pattern { mult: vec![1; n], edges }
            }
            Shape::E(n) if (6..=8).contains(&n) => {
                let mut edges = vec![(0, 2, 1), (1, 3, 1)];
                edges.extend((2..n - 1).map(|i| (i, i + 1, 1)));
                Pattern { mult: vec![1; n], edges }
            }
            Shape::Fiber(k) => match k {
                Kodaira::I(2) => Pattern { mult: vec![1, 1], edges: vec![(0, 1, 2)] },
                Kodaira::I(n) if n >= 3 => {
                    let n = n as usize;
                    let mut edges = path(n);
                    edges.push((n - 1, 0, 1));
                    Pattern { mult: vec![1; n], edges }
                }
                Kodaira::IStar(n) => {
                    // leaves 0,1 on chain start, chain 2..=n+2, leaves n+3, n+4
                    let n = n as usize;
                    let mut edges = vec![(0, 2, 1), (1, 2, 1)];
                    edges.extend((2..n + 2).map(|i| (i, i + 1, 1)));
                    edges.push((n + 2, n + 3, 1));
                    edges.push((n + 2, n + 4, 1));
                    let mut mult = vec![1, 1];
                    mult.extend(std::iter::repeat_n(2, n + 1));
                    mult.extend([1, 1]);
                    Pattern { mult, edges }
                }
                Kodaira::IVStar => Pattern {
                    // center 0, arms 0-1-2, 0-3-4, 0-5-6
                    mult: vec![3, 2, 1, 2, 1, 2, 1],
                    edges: vec![(0, 1, 1), (1, 2, 1), (0, 3, 1), (3, 4, 1), (0, 5, 1), (5, 6, 1)],
                },
                Kodaira::IIIStar => Pattern {
                    // chain 0..6 with 7 attached to the middle
                    mult: vec![1, 2, 3, 4, 3, 2, 1, 2],
                    edges: {
                        let mut e = path(7);
                        e.push((3, 7, 1));
                        e
                    },
                },
                Kodaira::IIStar => Pattern {
                    // chain 0..7 with 8 attached to vertex 5
                    mult: vec![1, 2, 3, 4, 5, 6, 4, 2, 3],
                    edges: {
                        let mut e = path(8);
                        e.push((5, 8, 1));
                        e
                    },
                },
                _ => return Err(unsupported()),
            },
            _ => return Err(unsupported()),
        })
    }
}

/// Placement of one shape: `(graph vertex, multiplicity)` per pattern vertex.
pub type Placement = Vec<(usize, i64)>;

/// Find vertex-disjoint, mutually orthogonal copies of the shapes, each an
/// induced subgraph with exactly the pattern's edge multiplicities.
/// Candidates are tried lowest index first; `None` if impossible.
pub fn find_ade_config(g: &CurveGraph, shapes: &[Shape]) -> Result<Option<Vec<Placement>>> {
    let patterns = shapes.iter().map(|s| s.pattern()).collect::<Result<Vec<_>>>()?;
    // flatten: (shape index, pattern vertex), ordered so each vertex after
    // the first of its shape has an already-placed neighbour
    let mut order = Vec::new();
    for (si, p) in patterns.iter().enumerate() {
        let n = p.mult.len();
        let mut placed = vec![false; n];
        placed[0] = true;
        order.push((si, 0usize));
        while order.iter().filter(|(s, _)| *s == si).count() < n {
            let next = (0..n)
                .find(|&v| {
                    !placed[v] && p.edges.iter().any(|&(a, b, _)| (a == v && placed[b]) || (b == v && placed[a]))
                })
                .ok_or_else(|| Error::Precondition("disconnected pattern".into()))?;
            placed[next] = true;
            order.push((si, next));
        }
    }
    let adj: Vec<Vec<Vec<i64>>> = patterns
        .iter()
        .map(|p| {
            let n = p.mult.len();
            let mut m = vec![vec![0i64; n]; n];
            for &(a, b, w) in &p.edges {
                m[a][b] = w;
                m[b][a] = w;
            }
            m
        })
        .collect();
    let mut assign: Vec<Vec<Option<usize>>> = patterns.iter().map(|p| vec![None; p.mult.len()]).collect();
    let mut used = vec![false; g.len()];
    if search(g, &adj, &order, 0, &mut assign, &mut used) {
        Ok(Some(
            assign
                .iter()
                .zip(&patterns)
                .map(|(a, p)| a.iter().zip(&p.mult).map(|(v, &m)| (v.unwrap_or(usize::MAX), m)).collect())
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

fn search(
    g: &CurveGraph,
    adj: &[Vec<Vec<i64>>],
    order: &[(usize, usize)],
    k: usize,
    assign: &mut Vec<Vec<Option<usize>>>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(&(si, pv)) = order.get(k) else {
        return true;
    };
    for v in 0..g.len() {
        if used[v] || !compatible(g, adj, assign, si, pv, v) {
            continue;
        }
        assign[si][pv] = Some(v);
        used[v] = true;
        if search(g, adj, order, k + 1, assign, used) {
            return true;
        }
        assign[si][pv] = None;
        used[v] = false;
    }
    false
}

fn compatible(
    g: &CurveGraph,
    adj: &[Vec<Vec<i64>>],
    assign: &[Vec<Option<usize>>],
    si: usize,
    pv: usize,
    v: usize,
) -> bool {
    for (sj, a) in assign.iter().enumerate() {
        for (pw, w) in a.iter().enumerate() {
            let Some(w) = *w else { continue };
            let want = if sj == si { adj[si][pv][pw] } else { 0 };
            if g.mult(v, w) != want {
                return false;
            }
        }
    }
    true
}
