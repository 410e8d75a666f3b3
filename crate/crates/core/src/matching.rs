//! Maximal and maximum matchings.
//!
//! [`maximum_matching`] is Edmonds' blossom algorithm: augmenting paths are
//! grown by breadth-first search from each free vertex, and odd cycles met
//! along the way are contracted onto their base. The search is seeded with
//! the greedy maximal matching and visits roots and neighbors in ascending
//! order, so the returned edge set is reproducible.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};

/// Edge limit of [`brute_force_maximum_matching`].
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 24;

/// Node-expansion budget of the exhaustive augmenting-path check in
/// [`verify_matching`].
pub const AUGMENTING_SEARCH_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge {0} is not in the graph or shares an endpoint with another matching edge")]
    NotAMatching(EdgeId),
    #[error("{what} exceeds the exhaustive-search limit ({size} > {limit})")]
    TooLarge {
        what: &'static str,
        size: u64,
        limit: u64,
    },
}

/// A set of pairwise disjoint edges of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<EdgeId>,
    mate: Vec<Option<VertexId>>,
}

impl Matching {
    pub fn empty(g: &Graph) -> Self {
        Matching {
            edges: Vec::new(),
            mate: vec![None; g.vertex_count()],
        }
    }

    pub fn from_edges<I>(g: &Graph, edges: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut m = Self::empty(g);
        for id in edges {
            if !g.contains_edge(id) {
                return Err(MatchingError::NotAMatching(id));
            }
            let e = g.edge(id);
            if m.mate[e.u.0].is_some() || m.mate[e.v.0].is_some() {
                return Err(MatchingError::NotAMatching(id));
            }
            m.mate[e.u.0] = Some(e.v);
            m.mate[e.v.0] = Some(e.u);
            m.edges.push(id);
        }
        m.edges.sort_unstable();
        Ok(m)
    }

    fn from_mates(g: &Graph, mate: &[usize]) -> Self {
        let edges = g
            .edges()
            .iter()
            .filter(|e| mate[e.u.0] == e.v.0)
            .map(|e| e.id)
            .collect();
        let mate = mate
            .iter()
            .map(|&x| (x != NONE).then_some(VertexId(x)))
            .collect();
        Matching { edges, mate }
    }

    /// Number of vertices of the graph the matching was built for.
    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    /// Number of edges, `m`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Matching edge ids, ascending.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.edges.binary_search(&id).is_ok()
    }

    pub fn partner(&self, v: VertexId) -> Option<VertexId> {
        self.mate[v.0]
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mate[v.0].is_some()
    }

    pub fn unmatched_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.mate
            .iter()
            .enumerate()
            .filter(|(_, m)| m.is_none())
            .map(|(i, _)| VertexId(i))
    }
}

const NONE: usize = usize::MAX;

/// Scans edges by ascending id and keeps each one whose endpoints are free.
pub fn greedy_maximal_matching(g: &Graph) -> Matching {
    let mut taken = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    for e in g.edges() {
        if !taken[e.u.0] && !taken[e.v.0] {
            taken[e.u.0] = true;
            taken[e.v.0] = true;
            chosen.push(e.id);
        }
    }
    Matching::from_edges(g, chosen).expect("greedy picks disjoint edges")
}

struct BlossomSearch<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> BlossomSearch<'g> {
    fn new(g: &'g Graph, initial: &Matching) -> Self {
        let n = g.vertex_count();
        let mate = (0..n)
            .map(|v| initial.partner(VertexId(v)).map_or(NONE, |w| w.0))
            .collect();
        BlossomSearch {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Lowest common ancestor of the blossom bases of `a` and `b` in the
    /// alternating tree.
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let w = self.mate[v];
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[w]] = true;
            self.parent[v] = child;
            child = w;
            v = self.parent[w];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// closes an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(VertexId(v)) {
                let to = to.0;
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract onto its base
                    let cur = self.lca(v, to);
                    self.blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..self.mate.len() {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Matching {
        for root in 0..self.mate.len() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        Matching::from_mates(self.g, &self.mate)
    }
}

/// A maximum-cardinality matching of a general graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let seed = greedy_maximal_matching(g);
    BlossomSearch::new(g, &seed).run()
}

/// Exhaustive maximum matching for graphs with at most
/// [`BRUTE_FORCE_EDGE_LIMIT`] edges. Among maximum matchings the first one
/// found when preferring lower edge ids is returned.
pub fn brute_force_maximum_matching(g: &Graph) -> Result<Matching, MatchingError> {
    if g.edge_count() > BRUTE_FORCE_EDGE_LIMIT {
        return Err(MatchingError::TooLarge {
            what: "edge count",
            size: g.edge_count() as u64,
            limit: BRUTE_FORCE_EDGE_LIMIT as u64,
        });
    }

    struct State<'a> {
        g: &'a Graph,
        used: Vec<bool>,
        current: Vec<EdgeId>,
        best: Vec<EdgeId>,
    }

    fn branch(st: &mut State<'_>, next: usize) {
        let remaining = st.g.edge_count() - next;
        let free = st.used.iter().filter(|u| !**u).count();
        if st.current.len() + remaining.min(free / 2) <= st.best.len() {
            return;
        }
        if next == st.g.edge_count() {
            st.best = st.current.clone();
            return;
        }
        let e = st.g.edges()[next];
        if !st.used[e.u.0] && !st.used[e.v.0] {
            st.used[e.u.0] = true;
            st.used[e.v.0] = true;
            st.current.push(e.id);
            branch(st, next + 1);
            st.current.pop();
            st.used[e.u.0] = false;
            st.used[e.v.0] = false;
        }
        branch(st, next + 1);
    }

    let mut st = State {
        g,
        used: vec![false; g.vertex_count()],
        current: Vec::new(),
        best: Vec::new(),
    };
    branch(&mut st, 0);
    Ok(Matching::from_edges(g, st.best).expect("search keeps edges disjoint"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Valid,
    Maximal,
    Maximum,
}

/// Checks `m` against `g` at the requested strength.
///
/// `Maximum` is decided by Berge's criterion: a depth-first enumeration of
/// simple alternating paths from every free vertex, sharing no code with the
/// blossom search. It is exponential in the worst case and gives up with
/// `TooLarge` after [`AUGMENTING_SEARCH_BUDGET`] expansions.
pub fn verify_matching(g: &Graph, m: &Matching, mode: VerifyMode) -> Result<bool, MatchingError> {
    let n = g.vertex_count();
    let mut mate = vec![NONE; n];
    for &id in m.edges() {
        if !g.contains_edge(id) {
            return Ok(false);
        }
        let e = g.edge(id);
        if mate[e.u.0] != NONE || mate[e.v.0] != NONE {
            return Ok(false);
        }
        mate[e.u.0] = e.v.0;
        mate[e.v.0] = e.u.0;
    }
    if mode == VerifyMode::Valid {
        return Ok(true);
    }
    if g.edges()
        .iter()
        .any(|e| mate[e.u.0] == NONE && mate[e.v.0] == NONE)
    {
        return Ok(false);
    }
    if mode == VerifyMode::Maximal {
        return Ok(true);
    }

    struct Dfs<'a> {
        g: &'a Graph,
        mate: &'a [usize],
        on_path: Vec<bool>,
        steps: u64,
    }

    impl Dfs<'_> {
        // `at` is reached by a matched edge (or is the root); try every
        // unmatched edge out of it.
        fn extend(&mut self, at: usize) -> Result<bool, MatchingError> {
            for &x in self.g.neighbors(VertexId(at)) {
                let x = x.0;
                if self.on_path[x] || self.mate[at] == x {
                    continue;
                }
                self.steps += 1;
                if self.steps > AUGMENTING_SEARCH_BUDGET {
                    return Err(MatchingError::TooLarge {
                        what: "augmenting-path search",
                        size: self.steps,
                        limit: AUGMENTING_SEARCH_BUDGET,
                    });
                }
                let y = self.mate[x];
                if y == NONE {
                    return Ok(true);
                }
                if self.on_path[y] {
                    continue;
                }
                self.on_path[x] = true;
                self.on_path[y] = true;
                let found = self.extend(y)?;
                self.on_path[x] = false;
                self.on_path[y] = false;
                if found {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }

    let mut dfs = Dfs {
        g,
        mate: &mate,
        on_path: vec![false; n],
        steps: 0,
    };
    for (root, &partner) in mate.iter().enumerate() {
        if partner != NONE {
            continue;
        }
        dfs.on_path[root] = true;
        let found = dfs.extend(root)?;
        dfs.on_path[root] = false;
        if found {
            return Ok(false);
        }
    }
    Ok(true)
}
