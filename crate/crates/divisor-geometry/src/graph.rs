//! Dual graphs of (−2)-curves and their JSON format.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use lattice_core::GramLattice;
use serde::{Deserialize, Serialize};

use crate::class::{intersect, Ambient, DivisorClass};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct CurveGraph {
    names: Vec<String>,
    /// Symmetric intersection multiplicities; 0 = disjoint.
    adj: Vec<Vec<i64>>,
    classes: Option<Vec<DivisorClass>>,
    local: Arc<GramLattice>,
}

impl CurveGraph {
    pub fn new(names: Vec<String>, edges: &[(usize, usize, i64)]) -> Result<Self> {
        let n = names.len();
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(Error::Graph(format!("duplicate vertex `{name}`")));
            }
        }
        let mut adj = vec![vec![0i64; n]; n];
        for &(a, b, m) in edges {
            if a >= n || b >= n {
                return Err(Error::Graph(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Graph(format!("self-loop at `{}`", names[a])));
            }
            if m < 1 {
                return Err(Error::Graph(format!("edge multiplicity {m} must be positive")));
            }
            if adj[a][b] != 0 {
                return Err(Error::Graph(format!("duplicate edge `{}`-`{}`", names[a], names[b])));
            }
            adj[a][b] = m;
            adj[b][a] = m;
        }
        let gram: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { -2 } else { adj[i][j] }).collect()).collect();
        let local = Arc::new(GramLattice::new_degenerate_ok(gram)?);
        Ok(CurveGraph { names, adj, classes: None, local })
    }

    /// Attach global classes; they must be (−2)-classes realising the edges.
    pub fn with_classes(mut self, classes: Vec<DivisorClass>) -> Result<Self> {
        if classes.len() != self.len() {
            return Err(Error::Graph("one class per vertex required".into()));
        }
        for (i, c) in classes.iter().enumerate() {
            if c.square() != -2 {
                return Err(Error::Graph(format!("class of `{}` has square {}", self.names[i], c.square())));
            }
            for j in 0..i {
                let m = intersect(c, &classes[j])?;
                if m != self.adj[i][j] {
                    return Err(Error::Graph(format!(
                        "`{}`·`{}` = {m} but the edge multiplicity is {}",
                        self.names[i], self.names[j], self.adj[i][j]
                    )));
                }
            }
        }
        self.classes = Some(classes);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mult(&self, a: usize, b: usize) -> i64 {
        self.adj[a][b]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().enumerate().filter(|(_, &m)| m > 0).map(|(j, _)| j)
    }

    pub fn has_classes(&self) -> bool {
        self.classes.is_some()
    }

    /// Intersection lattice of the vertices (possibly degenerate).
    pub fn local_lattice(&self) -> &Arc<GramLattice> {
        &self.local
    }

    /// Class of a vertex: the attached global class, or the unit vector of
    /// the local intersection lattice.
    pub fn class_of(&self, v: usize) -> DivisorClass {
        match &self.classes {
            Some(c) => c[v].clone(),
            None => DivisorClass::unit(Ambient::Local(self.local.clone()), v),
        }
    }

    /// Class of Σ dᵥ·v.
    pub fn class_of_divisor(&self, d: &[i64]) -> Result<DivisorClass> {
        let terms: Vec<(i64, DivisorClass)> = d.iter().enumerate().map(|(v, &k)| (k, self.class_of(v))).collect();
        let refs: Vec<(i64, &DivisorClass)> = terms.iter().map(|(k, c)| (*k, c)).collect();
        DivisorClass::sum(&refs)
    }

    pub fn to_file(&self) -> CurveGraphFile {
        let mut edges = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.adj[i][j] > 0 {
                    edges.push((self.names[i].clone(), self.names[j].clone(), self.adj[i][j]));
                }
            }
        }
        let (ambient, classes) = match &self.classes {
            Some(cs) => {
                let amb = match cs.first().map(|c| c.ambient()) {
                    Some(Ambient::Cover) => Some("cover".to_string()),
                    _ => Some("enriques".to_string()),
                };
                let map = self.names.iter().cloned().zip(cs.iter().map(|c| c.coords().to_vec())).collect();
                (amb, Some(map))
            }
            None => (None, None),
        };
        CurveGraphFile { vertices: self.names.clone(), edges, ambient, classes }
    }
}

/// On-disk form: vertex names, `(name, name, multiplicity)` edges and an
/// optional class per vertex (coordinates in U+E₈ or U(2)+E₈(2)).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveGraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<BTreeMap<String, Vec<i64>>>,
}

impl CurveGraphFile {
    pub fn into_graph(self) -> Result<CurveGraph> {
        let index: HashMap<&str, usize> = self.vertices.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let lookup = |n: &str| index.get(n).copied().ok_or_else(|| Error::Graph(format!("unknown vertex `{n}`")));
        let edges = self.edges.iter().map(|(a, b, m)| Ok((lookup(a)?, lookup(b)?, *m))).collect::<Result<Vec<_>>>()?;
        let g = CurveGraph::new(self.vertices.clone(), &edges)?;
        match self.classes {
            None => Ok(g),
            Some(map) => {
                let ambient = match self.ambient.as_deref() {
                    None | Some("enriques") => Ambient::Enriques,
                    Some("cover") => Ambient::Cover,
                    Some(other) => return Err(Error::Parse(format!("unknown ambient `{other}`"))),
                };
                let classes = self
                    .vertices
                    .iter()
                    .map(|n| {
                        let c = map.get(n).ok_or_else(|| Error::Graph(format!("no class for `{n}`")))?;
                        DivisorClass::new(ambient.clone(), c.clone())
                    })
                    .collect::<Result<Vec<_>>>()?;
                g.with_classes(classes)
            }
        }
    }
}

pub fn parse_graph(text: &str) -> Result<CurveGraph> {
    let f: CurveGraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    f.into_graph()
}

pub fn graph_to_json(g: &CurveGraph) -> String {
    serde_json::to_string_pretty(&g.to_file()).expect("graph serialises")
}
