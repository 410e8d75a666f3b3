//! Total covers of simple undirected graphs.
//!
//! A total cover is a set of vertices and edges such that every element
//! outside the set is adjacent or incident to a member. This crate provides
//! a matching-based 2-approximation for the minimum total cover together
//! with its certificate, exhaustive oracles, two baseline heuristics and
//! instance generators.

pub mod cover;
pub mod element;
pub mod exact;
pub mod graph;
pub mod instances;
pub mod io;
pub mod matching;
pub mod total;

pub use cover::{
    approx_total_cover, approx_total_cover_with_matching, bad_vertex_assignment, format_ratio,
    greedy_domination_cover, lemma1_lower_bound, matched_vertices_cover, ApproxResult,
    BadVertexAssignment, CoverError, MatchingMode, StepReason, StepRecord,
};
pub use element::{Element, ElementSet, InvalidElement};
pub use exact::{
    cross_check_alpha2, exact_dominating_set, exact_total_cover, Alpha2Report, ExactError,
    ExactResult, SearchLimits,
};
pub use graph::{Edge, EdgeId, Graph, GraphError, VertexId};
pub use instances::{Family, InstanceError, InstanceSpec};
pub use io::{parse_cover, parse_graph, serialize_graph, ParseError};
pub use matching::{
    brute_force_maximum_matching, greedy_maximal_matching, maximum_matching, verify_matching,
    Matching, MatchingError, VerifyMode,
};
pub use num_rational::Ratio;
pub use total::{is_total_cover, total_graph, uncovered_element, TotalGraph};
