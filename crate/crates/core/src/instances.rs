//! Deterministic instance generators.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

/// Largest `n` accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InstanceError {
    #[error("figure1 needs an even n >= 2, got {0}")]
    OddParameter(usize),
    #[error("{family}: {message}")]
    ParameterOutOfRange {
        family: &'static str,
        message: String,
    },
}

fn out_of_range(family: &'static str, message: impl Into<String>) -> InstanceError {
    InstanceError::ParameterOutOfRange {
        family,
        message: message.into(),
    }
}

fn build(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::new(n, pairs).expect("generator emits a simple graph")
}

/// The hard family for the matched-vertices heuristic.
///
/// Apex `0`, upper row `v_i = i` and lower row `u_i = n + i` for `i = 1..=n`.
/// Edges come in three blocks: spokes `(0, v_i)`, rails `(v_i, u_i)`, then
/// rungs `(u_{2j-1}, u_{2j})`. That gives `2n + 1` vertices and
/// `2n + n/2` edges; a maximum matching has `n` edges while the apex plus
/// all rungs is a total cover with `n/2 + 1` elements.
pub fn figure1(n: usize) -> Result<Graph, InstanceError> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(InstanceError::OddParameter(n));
    }
    let mut pairs = Vec::with_capacity(2 * n + n / 2);
    pairs.extend((1..=n).map(|i| (0, i)));
    pairs.extend((1..=n).map(|i| (i, n + i)));
    pairs.extend((1..=n / 2).map(|j| (n + 2 * j - 1, n + 2 * j)));
    Ok(build(2 * n + 1, &pairs))
}

/// Edge ids of the rungs `u_{2j-1} u_{2j}` of [`figure1`].
pub fn figure1_rungs(n: usize) -> std::ops::Range<usize> {
    2 * n..2 * n + n / 2
}

pub fn path(n: usize) -> Result<Graph, InstanceError> {
    if n < 1 {
        return Err(out_of_range("path", "n must be at least 1"));
    }
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &pairs))
}

pub fn cycle(n: usize) -> Result<Graph, InstanceError> {
    if n < 3 {
        return Err(out_of_range("cycle", "n must be at least 3"));
    }
    let mut pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    pairs.push((0, n - 1));
    Ok(build(n, &pairs))
}

/// Star on `n` vertices: center `0` joined to `1..n`, i.e. `K_{1,n-1}`.
pub fn star(n: usize) -> Result<Graph, InstanceError> {
    if n < 1 {
        return Err(out_of_range("star", "n must be at least 1"));
    }
    let pairs: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(build(n, &pairs))
}

pub fn complete(n: usize) -> Result<Graph, InstanceError> {
    if n < 1 {
        return Err(out_of_range("complete", "n must be at least 1"));
    }
    let pairs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(build(n, &pairs))
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes to `5..10`, inner
/// pentagram.
pub fn petersen() -> Graph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        pairs.push((i, i + 5));
    }
    for i in 0..5 {
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &pairs)
}

/// Erdős–Rényi `G(n, p)`.
///
/// The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64(seed)`.
/// Pairs `(i, j)` with `i < j` are visited in lexicographic order and each is
/// kept when the next `f64` drawn from `[0, 1)` is below `p`, so the same
/// `(n, p, seed)` always yields the same edge list.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, InstanceError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(out_of_range("gnp", format!("p = {p} is not a probability")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                pairs.push((i, j));
            }
        }
    }
    Ok(build(n, &pairs))
}

/// Appends `t` isolated vertices.
pub fn add_isolated(g: &Graph, t: usize) -> Graph {
    if t == 0 {
        return g.clone();
    }
    build(g.vertex_count() + t, &g.edge_pairs())
}

/// All `2^C(n,2)` labeled graphs on `n <= 6` vertices. Graph number `mask`
/// contains pair number `b` (pairs in lexicographic order) iff bit `b` of
/// `mask` is set.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, InstanceError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(out_of_range(
            "enumerate",
            format!("n = {n} exceeds {MAX_ENUMERATION_ORDER}"),
        ));
    }
    let all: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let count = 1u64 << all.len();
    Ok((0..count).map(move |mask| {
        let pairs: Vec<_> = all
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        build(n, &pairs)
    }))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    Figure1 { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Complete { n: usize },
    Gnp { n: usize, p: f64, seed: u64 },
}

/// A named generator invocation, optionally padded with isolated vertices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InstanceSpec {
    pub family: Family,
    pub isolated: usize,
}

impl InstanceSpec {
    pub fn new(family: Family) -> Self {
        InstanceSpec {
            family,
            isolated: 0,
        }
    }

    pub fn with_isolated(mut self, t: usize) -> Self {
        self.isolated = t;
        self
    }

    pub fn build(&self) -> Result<Graph, InstanceError> {
        let g = match self.family {
            Family::Figure1 { n } => figure1(n)?,
            Family::Path { n } => path(n)?,
            Family::Cycle { n } => cycle(n)?,
            Family::Star { n } => star(n)?,
            Family::Complete { n } => complete(n)?,
            Family::Gnp { n, p, seed } => gnp(n, p, seed)?,
        };
        Ok(add_isolated(&g, self.isolated))
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Figure1 { n } => write!(f, "figure1-{n}")?,
            Family::Path { n } => write!(f, "path-{n}")?,
            Family::Cycle { n } => write!(f, "cycle-{n}")?,
            Family::Star { n } => write!(f, "star-{n}")?,
            Family::Complete { n } => write!(f, "complete-{n}")?,
            Family::Gnp { n, p, seed } => write!(f, "gnp-{n}-{p}-{seed}")?,
        }
        if self.isolated > 0 {
            write!(f, "+{}", self.isolated)?;
        }
        Ok(())
    }
}
