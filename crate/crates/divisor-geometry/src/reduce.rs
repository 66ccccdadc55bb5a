//! Reduction of a divisor on a curve tree to a single component by
//! reflections: leaf elimination, path walking, and the complement step
//! for non-reduced divisors.

use crate::class::{apply_word, ReflectionWord};
use crate::error::{Error, Result};
use crate::graph::CurveGraph;

#[derive(Debug, Clone)]
pub struct Reduction {
    pub word: ReflectionWord,
    /// The same word as vertex indices.
    pub vertices: Vec<usize>,
    /// True when the complement step was used: the word then maps D to
    /// target + fiber instead of target.
    pub fiber_shift: bool,
}

/// Word mapping the effective divisor `d` (coefficients per vertex) to
/// the class of `target`. Leaves of the support are removed lowest index
/// first; the survivor is walked to `target`. A non-reduced `d` is
/// replaced by `fiber − d` first, where `fiber` are the fiber
/// multiplicities; the word then ends with s_target and lands on
/// target + fiber.
pub fn tree_reduce(g: &CurveGraph, d: &[i64], target: usize, fiber: Option<&[i64]>) -> Result<Reduction> {
    let n = g.len();
    if d.len() != n {
        return Err(Error::Precondition(format!("divisor has {} coefficients, graph has {n} vertices", d.len())));
    }
    if target >= n {
        return Err(Error::Precondition(format!("target {target} out of range")));
    }
    if d.iter().any(|&c| c < 0) {
        return Err(Error::Precondition("divisor is not effective".into()));
    }
    let reduced = d.iter().all(|&c| c <= 1);
    let (work, fiber_shift) = if reduced {
        (d.to_vec(), false)
    } else {
        let f = fiber.ok_or(Error::NonReduced)?;
        if f.len() != n {
            return Err(Error::Precondition("fiber multiplicities length".into()));
        }
        let comp: Vec<i64> = f.iter().zip(d).map(|(a, b)| a - b).collect();
        if comp.iter().any(|&c| !(0..=1).contains(&c)) {
            return Err(Error::NonReduced);
        }
        (comp, true)
    };
    let mut support: Vec<usize> = (0..n).filter(|&v| work[v] == 1).collect();
    if support.is_empty() {
        return Err(Error::Precondition("divisor is zero".into()));
    }
    check_tree(g, &support)?;
    let mut vertices = Vec::new();
    while support.len() > 1 {
        let leaf = *support
            .iter()
            .find(|&&v| support.iter().filter(|&&u| g.mult(u, v) > 0).count() == 1)
            .ok_or_else(|| Error::NotTree("no leaf".into()))?;
        vertices.push(leaf);
        support.retain(|&v| v != leaf);
    }
    let path = tree_path(g, support[0], target)?;
    for w in path.windows(2) {
        vertices.push(w[1]);
        vertices.push(w[0]);
    }
    if fiber_shift {
        vertices.push(target);
    }
    let word = ReflectionWord::new(vertices.iter().map(|&v| g.class_of(v)).collect())?;
    // post-hoc check of the claimed image
    let start = g.class_of_divisor(d)?;
    let mut expect = g.class_of(target);
    if fiber_shift {
        expect = expect.add(&g.class_of_divisor(fiber.unwrap_or(&[]))?)?;
    }
    if apply_word(&word, &start)? != expect {
        return Err(Error::Precondition("reduction word does not reach the target class".into()));
    }
    Ok(Reduction { word, vertices, fiber_shift })
}

/// The support must induce a tree with simple edges.
fn check_tree(g: &CurveGraph, support: &[usize]) -> Result<()> {
    let mut edges = 0;
    for (i, &a) in support.iter().enumerate() {
        for &b in &support[i + 1..] {
            match g.mult(a, b) {
                0 => {}
                1 => edges += 1,
                m => return Err(Error::NotTree(format!("`{}`-`{}` has multiplicity {m}", g.name(a), g.name(b)))),
            }
        }
    }
    if edges + 1 != support.len() || !connected(g, support) {
        return Err(Error::NotTree("support is not a connected acyclic graph".into()));
    }
    Ok(())
}

fn connected(g: &CurveGraph, set: &[usize]) -> bool {
    let mut seen = vec![set[0]];
    let mut stack = vec![set[0]];
    while let Some(v) = stack.pop() {
        for &u in set {
            if g.mult(u, v) > 0 && !seen.contains(&u) {
                seen.push(u);
                stack.push(u);
            }
        }
    }
    seen.len() == set.len()
}

/// Shortest path along simple edges (BFS, lowest index first).
fn tree_path(g: &CurveGraph, from: usize, to: usize) -> Result<Vec<usize>> {
    let n = g.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([from]);
    prev[from] = from;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for u in g.neighbors(v) {
            if g.mult(u, v) == 1 && prev[u] == usize::MAX {
                prev[u] = v;
                queue.push_back(u);
            }
        }
    }
    if prev[to] == usize::MAX {
        return Err(Error::NotTree(format!("`{}` is not reachable from `{}`", g.name(to), g.name(from))));
    }
    let mut path = vec![to];
    while *path.last().unwrap_or(&from) != from {
        let v = path[path.len() - 1];
        path.push(prev[v]);
    }
    path.reverse();
    Ok(path)
}
