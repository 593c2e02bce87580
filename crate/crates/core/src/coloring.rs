//! Colorings and the validators for both domination variants.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::{Error, Result};

/// A total vertex coloring with colors normalized to `0..num_colors` in order
/// of first appearance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// Builds a coloring from raw color ids (any usize values); colors are
    /// renamed to consecutive ids by first appearance.
    pub fn from_raw(raw: &[usize]) -> Coloring {
        let mut rename: Vec<(usize, usize)> = Vec::new();
        let mut colors = Vec::with_capacity(raw.len());
        for &c in raw {
            let id = match rename.iter().find(|&&(orig, _)| orig == c) {
                Some(&(_, id)) => id,
                None => {
                    let id = rename.len();
                    rename.push((c, id));
                    id
                }
            };
            colors.push(id);
        }
        Coloring {
            colors,
            num_colors: rename.len(),
        }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// |χ|: the number of distinct colors used.
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    /// Color classes indexed by color id; every class is nonempty.
    pub fn classes(&self, n: usize) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::empty(n); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].insert(v);
        }
        classes
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges()
            .iter()
            .all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Evidence that a coloring satisfies one of the two domination variants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DominatorWitness {
    /// DomCol: for each vertex v, a color c with ∅ ≠ χ⁻¹(c) ⊆ N[v].
    DomCol { delta: Vec<usize> },
    /// CD: for each used color c, a vertex whose closed neighborhood
    /// contains the whole class.
    Cd { dominator: Vec<usize> },
}

/// Checks that `c` is a proper coloring in which every vertex dominates some
/// nonempty color class. Ties are broken toward the smallest color id.
///
/// Absence of a witness is the negative answer; out-of-shape input is an
/// error.
pub fn validate_domcol(g: &Graph, c: &Coloring) -> Result<Option<DominatorWitness>> {
    if c.n() != g.n() {
        return Err(Error::invalid("coloring size does not match graph"));
    }
    if !c.is_proper(g) {
        return Ok(None);
    }
    let classes = c.classes(g.n());
    let mut delta = Vec::with_capacity(g.n());
    for v in g.vertices() {
        let nb = g.nbh_closed(v);
        match classes.iter().position(|cl| cl.is_subset_of(&nb)) {
            Some(color) => delta.push(color),
            None => return Ok(None),
        }
    }
    Ok(Some(DominatorWitness::DomCol { delta }))
}

/// Checks that `c` is a proper coloring in which every used class lies inside
/// some closed neighborhood. Ties broken toward the smallest vertex id.
pub fn validate_cdcol(g: &Graph, c: &Coloring) -> Result<Option<DominatorWitness>> {
    if c.n() != g.n() {
        return Err(Error::invalid("coloring size does not match graph"));
    }
    if !c.is_proper(g) {
        return Ok(None);
    }
    let classes = c.classes(g.n());
    let mut dominator = Vec::with_capacity(classes.len());
    for class in &classes {
        match g.vertices().find(|&v| class.is_subset_of(&g.nbh_closed(v))) {
            Some(v) => dominator.push(v),
            None => return Ok(None),
        }
    }
    Ok(Some(DominatorWitness::Cd { dominator }))
}
