//! The matching-based 2-approximation for minimum total cover, its
//! certificate, and two baselines.
//!
//! Given a maximum matching `M` with `m` edges, `k` bad vertices (free
//! vertices adjacent to both ends of a matching edge) and `t` isolated
//! vertices, [`approx_total_cover`] returns a total cover with exactly
//! `m + k + t` elements while every total cover has at least
//! `ceil((m + k) / 2) + t` elements.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::element::{Element, ElementSet};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::matching::{greedy_maximal_matching, maximum_matching, Matching};
use crate::total::{is_total_cover, total_graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("matching edge {0} does not belong to the graph or overlaps another")]
    InvalidMatching(EdgeId),
    #[error("matching spans {matching} vertices but the graph has {graph}")]
    WrongGraph { matching: usize, graph: usize },
    /// A structural guarantee of maximum matchings failed, so the supplied
    /// matching admits an augmenting path.
    #[error("matching is not maximum: {0}")]
    NotMaximum(String),
}

/// Bad vertices in ascending order, each paired with the lowest-id matching
/// edge whose two endpoints it is adjacent to.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BadVertexAssignment {
    pairs: Vec<(VertexId, EdgeId)>,
}

impl BadVertexAssignment {
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(VertexId, EdgeId)] {
        &self.pairs
    }
}

/// Finds the bad vertices of `m` and assigns each a matching edge.
///
/// With a maximum matching no two bad vertices see the same matching edge
/// (they would close an augmenting path through it); a collision is
/// reported as [`CoverError::NotMaximum`].
pub fn bad_vertex_assignment(g: &Graph, m: &Matching) -> Result<BadVertexAssignment, CoverError> {
    check_matching(g, m)?;
    let mut owner: Vec<Option<VertexId>> = vec![None; g.edge_count()];
    let mut pairs = Vec::new();
    for w in g.vertices().filter(|&w| !m.is_matched(w)) {
        let best = g
            .neighbors(w)
            .iter()
            .filter_map(|&x| {
                let y = m.partner(x)?;
                g.are_adjacent(w, y)
                    .then(|| g.find_edge(x, y).expect("matched pair is an edge"))
            })
            .min();
        if let Some(e) = best {
            if let Some(prev) = owner[e.0] {
                return Err(CoverError::NotMaximum(format!(
                    "bad vertices {prev} and {w} share matching edge {e}"
                )));
            }
            owner[e.0] = Some(w);
            pairs.push((w, e));
        }
    }
    Ok(BadVertexAssignment { pairs })
}

fn check_matching(g: &Graph, m: &Matching) -> Result<(), CoverError> {
    if m.vertex_count() != g.vertex_count() {
        return Err(CoverError::WrongGraph {
            matching: m.vertex_count(),
            graph: g.vertex_count(),
        });
    }
    let mut seen = vec![false; g.vertex_count()];
    for &id in m.edges() {
        if !g.contains_edge(id) {
            return Err(CoverError::InvalidMatching(id));
        }
        let e = g.edge(id);
        if seen[e.u.0] || seen[e.v.0] || m.partner(e.u) != Some(e.v) {
            return Err(CoverError::InvalidMatching(id));
        }
        seen[e.u.0] = true;
        seen[e.v.0] = true;
    }
    if m.unmatched_vertices().count() + 2 * m.size() != g.vertex_count() {
        return Err(CoverError::WrongGraph {
            matching: m.vertex_count(),
            graph: g.vertex_count(),
        });
    }
    Ok(())
}

/// `ceil((m + k) / 2) + t`, a lower bound on the minimum total cover.
pub fn lemma1_lower_bound(m: usize, k: usize, t: usize) -> usize {
    (m + k).div_ceil(2) + t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepReason {
    Isolated,
    BadVertex,
    BadEdge,
    Endpoint,
    MatchingEdge,
}

impl StepReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            StepReason::Isolated => "isolated",
            StepReason::BadVertex => "bad-vertex",
            StepReason::BadEdge => "bad-edge",
            StepReason::Endpoint => "endpoint",
            StepReason::MatchingEdge => "matching-edge",
        }
    }
}

impl fmt::Display for StepReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One addition to the cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub step: u8,
    pub reason: StepReason,
    pub element: Element,
}

impl StepRecord {
    /// `<step> <reason> <element>`, the element in cover-file syntax.
    pub fn to_line(&self, g: &Graph) -> String {
        format!(
            "{} {} {}",
            self.step,
            self.reason,
            self.element.to_cover_line(g)
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxResult {
    pub cover: ElementSet,
    pub m: usize,
    pub k: usize,
    pub t: usize,
    pub lower_bound: usize,
    pub certified_ratio: Ratio<u64>,
    pub trace: Vec<StepRecord>,
}

impl ApproxResult {
    pub fn size(&self) -> usize {
        self.cover.len()
    }
}

/// Runs the approximation with the blossom maximum matching.
pub fn approx_total_cover(g: &Graph) -> ApproxResult {
    let m = maximum_matching(g);
    approx_total_cover_with_matching(g, &m).expect("blossom returns a maximum matching")
}

/// Runs the approximation on a caller-supplied matching, which must be
/// maximum. Violations that the algorithm can observe are reported as
/// errors.
pub fn approx_total_cover_with_matching(
    g: &Graph,
    matching: &Matching,
) -> Result<ApproxResult, CoverError> {
    let assignment = bad_vertex_assignment(g, matching)?;
    let mut cover = ElementSet::new();
    let mut trace = Vec::new();
    let mut add = |cover: &mut ElementSet, step, reason, element| {
        let fresh = cover.insert(g, element).expect("element of g");
        debug_assert!(fresh, "{element:?} added twice");
        trace.push(StepRecord {
            step,
            reason,
            element,
        });
    };

    // step 1
    let isolated = g.isolated_vertices();
    for &v in &isolated {
        add(&mut cover, 1, StepReason::Isolated, Element::Vertex(v));
    }

    // step 2
    let mut removed = vec![false; g.vertex_count()];
    let mut consumed = vec![false; g.edge_count()];
    for &(w, e) in assignment.pairs() {
        add(&mut cover, 2, StepReason::BadVertex, Element::Vertex(w));
        add(&mut cover, 2, StepReason::BadEdge, Element::Edge(e));
        let edge = g.edge(e);
        removed[w.0] = true;
        removed[edge.u.0] = true;
        removed[edge.v.0] = true;
        consumed[e.0] = true;
    }

    // step 3: only free vertices of the working graph need a covered flag,
    // since edges added here have matched endpoints
    let is_free = |z: VertexId| !matching.is_matched(z) && !removed[z.0];
    let mut covered = vec![false; g.vertex_count()];
    for &e in matching.edges() {
        if consumed[e.0] {
            continue;
        }
        let edge = *g.edge(e);
        let free_u: Vec<VertexId> = g
            .neighbors(edge.u)
            .iter()
            .copied()
            .filter(|&z| is_free(z))
            .collect();
        let free_v: Vec<VertexId> = g
            .neighbors(edge.v)
            .iter()
            .copied()
            .filter(|&z| is_free(z))
            .collect();
        if let Some(z) = free_u.iter().find(|z| free_v.contains(z)) {
            return Err(CoverError::NotMaximum(format!(
                "free vertex {z} is adjacent to both ends of matching edge {e} after step 2"
            )));
        }
        if !free_u.is_empty() && !free_v.is_empty() {
            return Err(CoverError::NotMaximum(format!(
                "augmenting path {}-{}-{}-{}",
                free_u[0], edge.u, edge.v, free_v[0]
            )));
        }
        let pick = if free_u.iter().any(|z| !covered[z.0]) {
            Some((edge.u, free_u))
        } else if free_v.iter().any(|z| !covered[z.0]) {
            Some((edge.v, free_v))
        } else {
            None
        };
        match pick {
            Some((endpoint, neighbors)) => {
                add(
                    &mut cover,
                    3,
                    StepReason::Endpoint,
                    Element::Vertex(endpoint),
                );
                for z in neighbors {
                    covered[z.0] = true;
                }
            }
            None => add(&mut cover, 3, StepReason::MatchingEdge, Element::Edge(e)),
        }
    }

    let (m, k, t) = (matching.size(), assignment.k(), isolated.len());
    assert_eq!(cover.len(), m + k + t, "cover size law");
    let lower_bound = lemma1_lower_bound(m, k, t);
    assert!(cover.len() <= 2 * lower_bound, "factor-2 certificate");
    debug_assert!(is_total_cover(g, &cover));
    let certified_ratio = if lower_bound == 0 {
        Ratio::from_integer(1)
    } else {
        Ratio::new(cover.len() as u64, lower_bound as u64)
    };
    Ok(ApproxResult {
        cover,
        m,
        k,
        t,
        lower_bound,
        certified_ratio,
        trace,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatchingMode {
    Maximal,
    #[default]
    Maximum,
}

/// Endpoints of a matching plus all isolated vertices.
pub fn matched_vertices_cover(g: &Graph, mode: MatchingMode) -> ElementSet {
    let matching = match mode {
        MatchingMode::Maximal => greedy_maximal_matching(g),
        MatchingMode::Maximum => maximum_matching(g),
    };
    let elements = matching
        .edges()
        .iter()
        .flat_map(|&e| g.edge(e).endpoints())
        .chain(g.isolated_vertices())
        .map(Element::Vertex);
    ElementSet::from_elements(g, elements).expect("vertices of g")
}

/// Greedy dominating set of `T(G)` mapped back to elements of `G`: each
/// round takes the element whose closed neighborhood holds the most
/// undominated elements, lowest id first on ties.
pub fn greedy_domination_cover(g: &Graph) -> ElementSet {
    let tg = total_graph(g);
    let t = &tg.graph;
    let mut dominated = vec![false; t.vertex_count()];
    let mut left = t.vertex_count();
    let mut chosen = ElementSet::new();
    while left > 0 {
        let gain = |x: VertexId| {
            usize::from(!dominated[x.0]) + t.neighbors(x).iter().filter(|y| !dominated[y.0]).count()
        };
        let best = t
            .vertices()
            .map(|x| (gain(x), x))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .expect("undominated vertices remain")
            .1;
        for x in std::iter::once(best).chain(t.neighbors(best).iter().copied()) {
            if !dominated[x.0] {
                dominated[x.0] = true;
                left -= 1;
            }
        }
        chosen.insert(g, tg.element_of(best)).expect("element of g");
    }
    chosen
}

/// Decimal rendering of a non-negative ratio, rounded half up.
pub fn format_ratio(r: &Ratio<u64>, places: u32) -> String {
    let scale = 10u128.pow(places);
    let (num, den) = (*r.numer() as u128, *r.denom() as u128);
    let scaled = (2 * num * scale + den) / (2 * den);
    let (int, frac) = (scaled / scale, scaled % scale);
    if places == 0 {
        int.to_string()
    } else {
        format!("{int}.{frac:0width$}", width = places as usize)
    }
}
