//! Undirected simple graphs with dense vertex ids.

use crate::bitset::VertexSet;
use crate::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored as one open-neighborhood set per vertex; the relation
/// is kept symmetric and irreflexive by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
            labels: None,
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|s| s.card()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].card()
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = self.adj[v].clone();
        s.insert(v);
        Ok(s)
    }

    /// Infallible N[v] for internal use with known-good ids.
    pub(crate) fn nbh_closed(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn true_twins(&self, u: usize, v: usize) -> bool {
        self.nbh_closed(u) == self.nbh_closed(v)
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n {
            return Err(Error::invalid("label count must equal vertex count"));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff no edge joins two members of `s`.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint_from(s))
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            comps.push(comp);
        }
        comps
    }

    /// True iff every component induces a complete graph.
    pub fn is_cluster_graph(&self) -> bool {
        self.connected_components().iter().all(|comp| {
            comp.iter().all(|v| {
                // inside a clique component, N[v] covers the whole component
                let nb = self.nbh_closed(v);
                comp.is_subset_of(&nb)
            })
        })
    }

    /// Twin-cover test: G − m is a cluster graph and inside every remaining
    /// clique all closed neighborhoods (in G) coincide.
    pub fn is_twin_cover(&self, m: &VertexSet) -> bool {
        let (h, map) = self.induced_subgraph(&m.complement());
        if !h.is_cluster_graph() {
            return false;
        }
        for comp in h.connected_components() {
            let mut verts = comp.iter().map(|v| map[v]);
            if let Some(first) = verts.next() {
                let nf = self.nbh_closed(first);
                if !verts.all(|v| self.nbh_closed(v) == nf) {
                    return false;
                }
            }
        }
        true
    }

    /// Subgraph induced by `keep`; returns the new graph and the map from new
    /// ids to original ids (new ids follow the original order).
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().collect();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let mut g = Graph::new(map.len());
        for (new_u, &old_u) in map.iter().enumerate() {
            for old_v in self.adj[old_u].iter() {
                if old_v > old_u && keep.contains(old_v) {
                    g.add_edge(new_u, back[old_v]).unwrap();
                }
            }
        }
        (g, map)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Some fixed graphs used across the test suites.
pub mod small {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u).unwrap();
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        if n > 2 {
            g.add_edge(n - 1, 0).unwrap();
        }
        g
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n)
    }

    /// Star K_{1,leaves} with the center as vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v).unwrap();
        }
        g
    }
}
