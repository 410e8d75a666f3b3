//! Total graphs and the total-cover predicate.

use crate::element::{Element, ElementSet};
use crate::graph::{Graph, VertexId};

/// The total graph `T(G)` together with its bijection to the elements of `G`.
///
/// Vertex `v` of `G` keeps id `v`; edge `e` becomes vertex `n + e`.
#[derive(Clone, Debug)]
pub struct TotalGraph {
    pub graph: Graph,
    base_vertices: usize,
}

impl TotalGraph {
    pub fn element_of(&self, tv: VertexId) -> Element {
        Element::from_flat_index(tv.0, self.base_vertices)
    }

    pub fn vertex_of(&self, el: Element) -> VertexId {
        VertexId(el.flat_index(self.base_vertices))
    }
}

/// Builds `T(G)`: elements are adjacent when they are adjacent or incident
/// in `G`.
///
/// Edge order of the result: vertex–vertex pairs in `G`'s edge order, then
/// for each edge its two vertex–edge pairs, then for each vertex the pairs of
/// its incident edges.
pub fn total_graph(g: &Graph) -> TotalGraph {
    let n = g.vertex_count();
    let mut pairs = g.edge_pairs();
    for e in g.edges() {
        pairs.push((e.u.0, n + e.id.0));
        pairs.push((e.v.0, n + e.id.0));
    }
    for v in g.vertices() {
        let inc = g.incident_edges(v);
        for (i, a) in inc.iter().enumerate() {
            for b in &inc[i + 1..] {
                pairs.push((n + a.0, n + b.0));
            }
        }
    }
    let graph = Graph::new(n + g.edge_count(), &pairs)
        .expect("two edges of a simple graph share at most one endpoint");
    TotalGraph {
        graph,
        base_vertices: n,
    }
}

/// First element of `V ∪ E` left uncovered by the membership flags, scanning
/// vertices by id and then edges by id.
pub(crate) fn first_uncovered(g: &Graph, in_v: &[bool], in_e: &[bool]) -> Option<Element> {
    // touched[x]: some edge of the set is incident to x
    let mut touched = vec![false; g.vertex_count()];
    for e in g.edges() {
        if in_e[e.id.0] {
            touched[e.u.0] = true;
            touched[e.v.0] = true;
        }
    }
    for x in g.vertices() {
        if in_v[x.0] || touched[x.0] {
            continue;
        }
        if !g.neighbors(x).iter().any(|y| in_v[y.0]) {
            return Some(Element::Vertex(x));
        }
    }
    for e in g.edges() {
        if in_e[e.id.0] {
            continue;
        }
        let covered = in_v[e.u.0] || in_v[e.v.0] || touched[e.u.0] || touched[e.v.0];
        if !covered {
            return Some(Element::Edge(e.id));
        }
    }
    None
}

/// Returns the lowest uncovered element (vertices before edges), or `None`
/// when `d` is a total cover of `g`.
pub fn uncovered_element(g: &Graph, d: &ElementSet) -> Option<Element> {
    let (in_v, in_e) = d.membership(g);
    first_uncovered(g, &in_v, &in_e)
}

/// Whether every element outside `d` is adjacent or incident to a member of `d`.
pub fn is_total_cover(g: &Graph, d: &ElementSet) -> bool {
    uncovered_element(g, d).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;

    #[test]
    fn total_graph_of_k2_is_k3() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let t = total_graph(&g);
        assert_eq!(t.graph.vertex_count(), 3);
        assert_eq!(t.graph.edge_count(), 3);
        assert_eq!(t.element_of(VertexId(2)), Element::Edge(EdgeId(0)));
        assert_eq!(t.vertex_of(Element::Edge(EdgeId(0))), VertexId(2));
    }

    #[test]
    fn total_graph_of_isolated_vertex() {
        let t = total_graph(&Graph::empty(1));
        assert_eq!(t.graph.vertex_count(), 1);
        assert_eq!(t.graph.edge_count(), 0);
    }

    #[test]
    fn total_graph_of_p3() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let t = total_graph(&g);
        assert_eq!(t.graph.vertex_count(), 5);
        // middle vertex: both path neighbors and both edges
        assert_eq!(t.graph.degree(VertexId(1)), 4);
        // |E| + 2|E| + sum C(deg, 2) = 2 + 4 + 1
        assert_eq!(t.graph.edge_count(), 7);
    }

    #[test]
    fn cover_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let d = ElementSet::from_elements(&k2, [Element::Edge(EdgeId(0))]).unwrap();
        assert!(is_total_cover(&k2, &d));

        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = ElementSet::from_elements(&k3, [Element::Vertex(VertexId(0))]).unwrap();
        assert_eq!(uncovered_element(&k3, &d), Some(Element::Edge(EdgeId(1))));
        assert_eq!(
            uncovered_element(&k3, &d)
                .unwrap()
                .describe(&k3)
                .to_string(),
            "edge (2,3)"
        );

        assert!(is_total_cover(&k3, &ElementSet::all(&k3)));
        assert!(!is_total_cover(&k3, &ElementSet::new()));
        assert!(is_total_cover(&Graph::empty(0), &ElementSet::new()));
    }

    #[test]
    fn witness_prefers_vertices() {
        // vertex 3 is isolated and edge (0,1) is uncovered: vertex wins
        let g = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        let d = ElementSet::from_elements(&g, [Element::Vertex(VertexId(2))]).unwrap();
        assert_eq!(
            uncovered_element(&g, &d),
            Some(Element::Vertex(VertexId(0)))
        );
    }
}
