//! Exhaustive oracles for the minimum total cover and the minimum
//! dominating set.
//!
//! Both search by increasing cardinality and enumerate subsets of each
//! size in lexicographic order, so the first hit is a minimum and the
//! returned set is deterministic. The dominating-set oracle works on
//! closed-neighborhood bitmasks and does not touch the total-cover check.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::element::{Element, ElementSet};
use crate::graph::{Graph, VertexId};
use crate::total::{first_uncovered, total_graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_elements: usize,
    pub max_candidates: u64,
    pub start_size: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_elements: 32,
            max_candidates: 100_000_000,
            start_size: 0,
        }
    }
}

impl SearchLimits {
    pub fn with_max_elements(mut self, max_elements: usize) -> Self {
        self.max_elements = max_elements;
        self
    }

    pub fn with_start_size(mut self, start_size: usize) -> Self {
        self.start_size = start_size;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("{size} elements exceed the exhaustive-search limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("candidate budget of {budget} exhausted while trying sets of size {reached}")]
    BudgetExceeded { budget: u64, reached: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactResult {
    pub optimum: ElementSet,
    pub size: usize,
    pub candidates_checked: u64,
    pub elapsed: Duration,
}

/// Lexicographic walk over the `s`-subsets of `0..universe`, held in place.
struct Combinations {
    idx: Vec<usize>,
    universe: usize,
    first: bool,
}

impl Combinations {
    fn new(universe: usize, s: usize) -> Option<Self> {
        (s <= universe).then(|| Combinations {
            idx: (0..s).collect(),
            universe,
            first: true,
        })
    }

    fn advance(&mut self) -> Option<&[usize]> {
        if self.first {
            self.first = false;
            return Some(&self.idx);
        }
        let s = self.idx.len();
        let mut i = s;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.universe - s + i {
                self.idx[i] += 1;
                for j in i + 1..s {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        None
    }
}

/// Shared driver: smallest `s >= start` with an accepted `s`-subset.
fn staged_search<F>(
    universe: usize,
    limits: &SearchLimits,
    mut accept: F,
) -> Result<(Vec<usize>, u64), ExactError>
where
    F: FnMut(&[usize]) -> bool,
{
    let mut checked = 0u64;
    for s in limits.start_size..=universe {
        let Some(mut combos) = Combinations::new(universe, s) else {
            break;
        };
        while let Some(subset) = combos.advance() {
            if checked == limits.max_candidates {
                return Err(ExactError::BudgetExceeded {
                    budget: limits.max_candidates,
                    reached: s,
                });
            }
            checked += 1;
            if accept(subset) {
                return Ok((subset.to_vec(), checked));
            }
        }
    }
    // the full set always qualifies, so this is reached only when
    // start_size overshoots the universe
    Ok(((0..universe).collect(), checked))
}

/// Minimum total cover by exhaustive search over `V ∪ E`.
pub fn exact_total_cover(g: &Graph, limits: &SearchLimits) -> Result<ExactResult, ExactError> {
    let started = Instant::now();
    let n = g.vertex_count();
    let universe = g.element_count();
    if universe > limits.max_elements {
        return Err(ExactError::TooLarge {
            size: universe,
            limit: limits.max_elements,
        });
    }
    let mut in_v = vec![false; n];
    let mut in_e = vec![false; g.edge_count()];
    let (best, checked) = staged_search(universe, limits, |subset| {
        for &i in subset {
            if i < n {
                in_v[i] = true;
            } else {
                in_e[i - n] = true;
            }
        }
        let ok = first_uncovered(g, &in_v, &in_e).is_none();
        for &i in subset {
            if i < n {
                in_v[i] = false;
            } else {
                in_e[i - n] = false;
            }
        }
        ok
    })?;
    let optimum =
        ElementSet::from_elements(g, best.iter().map(|&i| Element::from_flat_index(i, n)))
            .expect("indices within V ∪ E");
    Ok(ExactResult {
        size: optimum.len(),
        optimum,
        candidates_checked: checked,
        elapsed: started.elapsed(),
    })
}

/// Minimum dominating set by exhaustive search over vertex subsets. The
/// optimum is reported as a set of vertex elements of `g`.
pub fn exact_dominating_set(g: &Graph, limits: &SearchLimits) -> Result<ExactResult, ExactError> {
    let started = Instant::now();
    let n = g.vertex_count();
    let limit = limits.max_elements.min(128);
    if n > limit {
        return Err(ExactError::TooLarge { size: n, limit });
    }
    let closed: Vec<u128> = g
        .vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u128 << v.0, |acc, w| acc | 1u128 << w.0)
        })
        .collect();
    let full = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let (best, checked) = staged_search(n, limits, |subset| {
        subset.iter().fold(0u128, |acc, &i| acc | closed[i]) == full
    })?;
    let optimum = ElementSet::from_elements(g, best.iter().map(|&i| Element::Vertex(VertexId(i))))
        .expect("vertices of g");
    Ok(ExactResult {
        size: optimum.len(),
        optimum,
        candidates_checked: checked,
        elapsed: started.elapsed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alpha2Report {
    pub alpha2: usize,
    pub gamma_t: usize,
    pub agree: bool,
}

/// Compares the total covering number of `g` with the domination number of
/// its total graph, each computed by its own oracle.
pub fn cross_check_alpha2(g: &Graph, limits: &SearchLimits) -> Result<Alpha2Report, ExactError> {
    let alpha2 = exact_total_cover(g, limits)?.size;
    let gamma_t = exact_dominating_set(&total_graph(g).graph, limits)?.size;
    Ok(Alpha2Report {
        alpha2,
        gamma_t,
        agree: alpha2 == gamma_t,
    })
}
