//! Elements of `V ∪ E` and sets of them.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};

/// A vertex or an edge of a graph. Vertices order before edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl Element {
    pub fn is_vertex(&self) -> bool {
        matches!(self, Element::Vertex(_))
    }

    /// Position of the element in the flat `V ∪ E` numbering, where edge
    /// `e` sits at `n + e`.
    pub fn flat_index(&self, n: usize) -> usize {
        match *self {
            Element::Vertex(v) => v.0,
            Element::Edge(e) => n + e.0,
        }
    }

    /// Inverse of [`Element::flat_index`].
    pub fn from_flat_index(i: usize, n: usize) -> Element {
        if i < n {
            Element::Vertex(VertexId(i))
        } else {
            Element::Edge(EdgeId(i - n))
        }
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        match *self {
            Element::Vertex(v) => g.contains_vertex(v),
            Element::Edge(e) => g.contains_edge(e),
        }
    }

    /// Human-readable, 1-indexed rendering such as `vertex 3` or `edge (2,3)`.
    pub fn describe<'a>(&self, g: &'a Graph) -> Describe<'a> {
        Describe { el: *self, g }
    }

    /// Cover-file rendering: `v <id>` or `e <u> <v>`, 1-indexed.
    pub fn to_cover_line(&self, g: &Graph) -> String {
        match *self {
            Element::Vertex(v) => format!("v {}", v.0 + 1),
            Element::Edge(e) => {
                let edge = g.edge(e);
                format!("e {} {}", edge.u.0 + 1, edge.v.0 + 1)
            }
        }
    }
}

impl From<VertexId> for Element {
    fn from(v: VertexId) -> Self {
        Element::Vertex(v)
    }
}

impl From<EdgeId> for Element {
    fn from(e: EdgeId) -> Self {
        Element::Edge(e)
    }
}

pub struct Describe<'a> {
    el: Element,
    g: &'a Graph,
}

impl fmt::Display for Describe<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.el {
            Element::Vertex(v) => write!(f, "vertex {}", v.0 + 1),
            Element::Edge(e) => {
                let edge = self.g.edge(e);
                write!(f, "edge ({},{})", edge.u.0 + 1, edge.v.0 + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("element {0:?} does not belong to the graph")]
pub struct InvalidElement(pub Element);

/// A duplicate-free set of elements of one graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ElementSet {
    members: BTreeSet<Element>,
}

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set, checking every element against `g`.
    pub fn from_elements<I>(g: &Graph, elements: I) -> Result<Self, InvalidElement>
    where
        I: IntoIterator<Item = Element>,
    {
        let mut set = Self::new();
        for el in elements {
            set.insert(g, el)?;
        }
        Ok(set)
    }

    /// Every vertex and every edge of `g`.
    pub fn all(g: &Graph) -> Self {
        let members = g
            .vertices()
            .map(Element::Vertex)
            .chain(g.edges().iter().map(|e| Element::Edge(e.id)))
            .collect();
        ElementSet { members }
    }

    /// Inserts `el`; returns whether it was new.
    pub fn insert(&mut self, g: &Graph, el: Element) -> Result<bool, InvalidElement> {
        if !el.is_valid_for(g) {
            return Err(InvalidElement(el));
        }
        Ok(self.members.insert(el))
    }

    pub fn contains(&self, el: Element) -> bool {
        self.members.contains(&el)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Elements in ascending order (vertices first).
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.members.iter().filter(|e| e.is_vertex()).count()
    }

    /// Membership flags indexed by vertex id and by edge id.
    pub fn membership(&self, g: &Graph) -> (Vec<bool>, Vec<bool>) {
        let mut vertices = vec![false; g.vertex_count()];
        let mut edges = vec![false; g.edge_count()];
        for el in &self.members {
            match *el {
                Element::Vertex(v) => vertices[v.0] = true,
                Element::Edge(e) => edges[e.0] = true,
            }
        }
        (vertices, edges)
    }

    /// Cover-file text, one element per line.
    pub fn to_cover_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for el in &self.members {
            out.push_str(&el.to_cover_line(g));
            out.push('\n');
        }
        out
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Element;
    type IntoIter = std::collections::btree_set::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
