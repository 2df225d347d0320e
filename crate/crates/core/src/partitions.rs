//! Set partitions, their intersection graphs and the exact tree solver.
//!
//! For `λ ⊨ {0, ..., n}` and `μ ⊨ {1, ..., n}` the intersection graph has the
//! blocks of both partitions as vertices and one edge per element `e ≥ 1`,
//! joining `λ(e)` to `μ(e)`. The system
//!
//! ```text
//! x_{λ(e)} + y_{μ(e)} = w_e   (1 ≤ e ≤ n),     x_{λ(0)} = 0
//! ```
//!
//! has a unique solution exactly when that graph is a tree, and the solution
//! is an alternating sum of weights along the path to `λ(0)`.

use std::collections::VecDeque;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{Rational, RationalVector};
use crate::{Error, Result, Subset};

/// A partition of `ground` into nonempty blocks, ordered by their minima.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    ground: Subset,
    blocks: Vec<Subset>,
}

impl SetPartition {
    pub fn new(ground: Subset, blocks: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let mut blocks: Vec<Subset> = blocks.into_iter().collect();
        let mut seen = Subset::EMPTY;
        for &b in &blocks {
            if b.is_empty() || !b.intersection(seen).is_empty() {
                return Err(Error::InvalidPartition(ground));
            }
            seen = seen.union(b);
        }
        if seen != ground {
            return Err(Error::InvalidPartition(ground));
        }
        blocks.sort_by_key(|b| b.first());
        Ok(SetPartition { ground, blocks })
    }

    /// Compact notation with one digit per element and `|` between blocks,
    /// e.g. `"7|5|24|013689"`.
    pub fn from_digit_blocks(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let mut b = Subset::EMPTY;
            for c in part.trim().chars() {
                let d = c
                    .to_digit(10)
                    .ok_or(Error::InvalidPartition(Subset::EMPTY))?;
                b.insert(d as usize);
            }
            blocks.push(b);
        }
        let ground = blocks.iter().fold(Subset::EMPTY, |acc, b| acc.union(*b));
        SetPartition::new(ground, blocks)
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_index(&self, e: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(e))
    }

    pub fn block_of(&self, e: usize) -> Option<Subset> {
        self.block_index(e).map(|i| self.blocks[i])
    }

    /// Whether `x` is constant on every block.
    pub fn is_block_constant(&self, x: &RationalVector) -> bool {
        self.blocks.iter().all(|b| {
            let mut vals = b.iter().filter_map(|e| x.get(e));
            match vals.next() {
                Some(first) => vals.all(|v| v == first),
                None => true,
            }
        })
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            let items: Vec<String> = b.iter().map(|e| e.to_string()).collect();
            let sep = if b.last().unwrap_or(0) >= 10 { "," } else { "" };
            write!(f, "{}", items.join(sep))?;
        }
        Ok(())
    }
}

/// A vertex of an intersection graph: a block of `λ` or a block of `μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Left(usize),
    Right(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub label: usize,
    pub left: usize,
    pub right: usize,
}

/// Alternating sequence `e_1, e_2, ...` read as `w_{e_1} - w_{e_2} + ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedPath {
    pub edges: Vec<usize>,
}

impl SignedPath {
    pub fn new(edges: Vec<usize>) -> Self {
        SignedPath { edges }
    }

    pub fn evaluate(&self, w: &RationalVector) -> Rational {
        self.edges
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, &e)| {
                if k % 2 == 0 {
                    acc + &w[e]
                } else {
                    acc - &w[e]
                }
            })
    }
}

impl fmt::Display for SignedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "0");
        }
        for (k, e) in self.edges.iter().enumerate() {
            match k {
                0 => write!(f, "w{e}")?,
                _ if k % 2 == 1 => write!(f, " - w{e}")?,
                _ => write!(f, " + w{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphKind {
    HasCycle,
    Disconnected,
    Tree,
}

/// Both structural flags; a cycle takes priority in [`Classification::kind`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub has_cycle: bool,
    pub connected: bool,
}

impl Classification {
    pub fn kind(self) -> GraphKind {
        if self.has_cycle {
            GraphKind::HasCycle
        } else if !self.connected {
            GraphKind::Disconnected
        } else {
            GraphKind::Tree
        }
    }
}

/// The bipartite multigraph `Γ_{λ,μ}` with `λ(0)` marked.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    left: Vec<Subset>,
    right: Vec<Subset>,
    edges: Vec<Edge>,
    marked: usize,
}

/// BFS spanning forest: parent pointer (vertex, edge label) and depth per vertex.
struct Forest {
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
    component: Vec<usize>,
    non_tree_edges: Vec<Edge>,
    components: usize,
}

impl IntersectionGraph {
    pub fn left_blocks(&self) -> &[Subset] {
        &self.left
    }

    pub fn right_blocks(&self) -> &[Subset] {
        &self.right
    }

    /// Edges in increasing label order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn marked(&self) -> Vertex {
        Vertex::Left(self.marked)
    }

    pub fn num_vertices(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn edge(&self, label: usize) -> Option<&Edge> {
        self.edges.iter().find(|e| e.label == label)
    }

    fn id(&self, v: Vertex) -> usize {
        match v {
            Vertex::Left(i) => i,
            Vertex::Right(j) => self.left.len() + j,
        }
    }

    /// Adjacency as `(neighbor id, edge label)` lists.
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        for e in &self.edges {
            let (a, b) = (e.left, self.left.len() + e.right);
            adj[a].push((b, e.label));
            adj[b].push((a, e.label));
        }
        adj
    }

    /// BFS from the marked vertex first, then from each unvisited vertex in
    /// id order.
    fn forest(&self) -> Forest {
        let nv = self.num_vertices();
        let adj = self.adjacency();
        let mut parent = vec![None; nv];
        let mut depth = vec![0; nv];
        let mut component = vec![usize::MAX; nv];
        let mut tree_edge = vec![false; self.edges.len()];
        let mut components = 0;
        let roots = std::iter::once(self.marked).chain(0..nv);
        for root in roots {
            if component[root] != usize::MAX {
                continue;
            }
            component[root] = components;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(v, label) in &adj[u] {
                    if component[v] == usize::MAX {
                        component[v] = components;
                        parent[v] = Some((u, label));
                        depth[v] = depth[u] + 1;
                        let k = self.edges.iter().position(|e| e.label == label).unwrap();
                        tree_edge[k] = true;
                        queue.push_back(v);
                    }
                }
            }
            components += 1;
        }
        let non_tree_edges = self
            .edges
            .iter()
            .zip(&tree_edge)
            .filter(|(_, &t)| !t)
            .map(|(e, _)| *e)
            .collect();
        Forest {
            parent,
            depth,
            component,
            non_tree_edges,
            components,
        }
    }

    pub fn classify(&self) -> Classification {
        let f = self.forest();
        Classification {
            has_cycle: !f.non_tree_edges.is_empty(),
            connected: f.components <= 1,
        }
    }

    /// Edge labels from `v` up to the root of its BFS tree.
    fn path_to_root(&self, forest: &Forest, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = v;
        while let Some((p, label)) = forest.parent[cur] {
            out.push(label);
            cur = p;
        }
        out
    }

    /// The fundamental cycle of a non-tree edge, as edge labels in cyclic order
    /// starting with that edge.
    fn fundamental_cycle(&self, forest: &Forest, e: &Edge) -> Vec<usize> {
        let (mut u, mut v) = (e.left, self.left.len() + e.right);
        let mut from_u = Vec::new();
        let mut from_v = Vec::new();
        while forest.depth[u] > forest.depth[v] {
            let (p, l) = forest.parent[u].unwrap();
            from_u.push(l);
            u = p;
        }
        while forest.depth[v] > forest.depth[u] {
            let (p, l) = forest.parent[v].unwrap();
            from_v.push(l);
            v = p;
        }
        while u != v {
            let (pu, lu) = forest.parent[u].unwrap();
            let (pv, lv) = forest.parent[v].unwrap();
            from_u.push(lu);
            from_v.push(lv);
            u = pu;
            v = pv;
        }
        // left endpoint --e--> right endpoint --(up to lca)--> --(down)--> left endpoint
        let mut cycle = vec![e.label];
        cycle.extend(from_v);
        cycle.extend(from_u.into_iter().rev());
        cycle
    }
}

fn check_grounds(lambda: &SetPartition, mu: &SetPartition) -> Result<usize> {
    let n = mu.ground().last().unwrap_or(0);
    let ok = lambda.ground() == Subset::range_inclusive(0, n)
        && mu.ground() == Subset::range_inclusive(1, n);
    if ok {
        Ok(n)
    } else {
        Err(Error::GroundMismatch {
            left: lambda.ground(),
            right: mu.ground(),
        })
    }
}

/// Builds `Γ_{λ,μ}` for `λ ⊨ {0..n}` and `μ ⊨ {1..n}`.
pub fn intersection_graph(lambda: &SetPartition, mu: &SetPartition) -> Result<IntersectionGraph> {
    let n = check_grounds(lambda, mu)?;
    let edges = (1..=n)
        .map(|e| Edge {
            label: e,
            left: lambda.block_index(e).unwrap(),
            right: mu.block_index(e).unwrap(),
        })
        .collect();
    Ok(IntersectionGraph {
        left: lambda.blocks().to_vec(),
        right: mu.blocks().to_vec(),
        edges,
        marked: lambda.block_index(0).unwrap(),
    })
}

pub fn classify(graph: &IntersectionGraph) -> Classification {
    graph.classify()
}

/// The unique `(x, y)` for an arboreal pair, with the signed path behind every
/// block value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSolution {
    /// On `{0, ..., n}`, `x_0 = 0`.
    pub x: RationalVector,
    /// On `{1, ..., n}`.
    pub y: RationalVector,
    /// One path per block of `λ`, in block order.
    pub x_paths: Vec<SignedPath>,
    /// One path per block of `μ`, in block order.
    pub y_paths: Vec<SignedPath>,
}

/// A particular solution on an acyclic graph. Components not containing
/// `λ(0)` have their first left-or-right vertex pinned to zero; each such
/// component contributes a free direction `x + r e_A`, `y - r e_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestSolution {
    pub x: RationalVector,
    pub y: RationalVector,
    /// Edge sets `A` of the components not containing `λ(0)`.
    pub free_components: Vec<Subset>,
}

fn block_values(
    graph: &IntersectionGraph,
    forest: &Forest,
    w: &RationalVector,
) -> Vec<Rational> {
    let nv = graph.num_vertices();
    let mut order: Vec<usize> = (0..nv).collect();
    order.sort_by_key(|&v| forest.depth[v]);
    let mut value = vec![Rational::zero(); nv];
    for v in order {
        if let Some((p, label)) = forest.parent[v] {
            value[v] = &w[label] - &value[p];
        }
    }
    value
}

fn spread(
    graph: &IntersectionGraph,
    lambda: &SetPartition,
    mu: &SetPartition,
    value: &[Rational],
    n: usize,
) -> (RationalVector, RationalVector) {
    let mut x = RationalVector::zeros(0, n + 1);
    let mut y = RationalVector::zeros(1, n);
    for (i, b) in lambda.blocks().iter().enumerate() {
        for e in b.iter() {
            x.set(e, value[graph.id(Vertex::Left(i))].clone());
        }
    }
    for (j, b) in mu.blocks().iter().enumerate() {
        for e in b.iter() {
            y.set(e, value[graph.id(Vertex::Right(j))].clone());
        }
    }
    (x, y)
}

pub fn solve_forest(
    lambda: &SetPartition,
    mu: &SetPartition,
    w: &RationalVector,
) -> Result<ForestSolution> {
    let graph = intersection_graph(lambda, mu)?;
    let n = graph.edges.len();
    w.check_indices(1, n)?;
    let forest = graph.forest();
    if !forest.non_tree_edges.is_empty() {
        return Err(Error::NotAForest);
    }
    let value = block_values(&graph, &forest, w);
    let (x, y) = spread(&graph, lambda, mu, &value, n);
    let marked_component = forest.component[graph.marked];
    let mut free: Vec<Subset> = vec![Subset::EMPTY; forest.components];
    for e in &graph.edges {
        let c = forest.component[e.left];
        free[c].insert(e.label);
    }
    let free_components = free
        .into_iter()
        .enumerate()
        .filter(|&(c, a)| c != marked_component && !a.is_empty())
        .map(|(_, a)| a)
        .collect();
    Ok(ForestSolution {
        x,
        y,
        free_components,
    })
}

/// Solves `x + y = w`, `x_{λ(0)} = 0` with `x` constant on blocks of `λ` and
/// `y` constant on blocks of `μ`, for an arboreal pair.
pub fn solve_tree(
    lambda: &SetPartition,
    mu: &SetPartition,
    w: &RationalVector,
) -> Result<TreeSolution> {
    let graph = intersection_graph(lambda, mu)?;
    let n = graph.edges.len();
    w.check_indices(1, n)?;
    let forest = graph.forest();
    if !forest.non_tree_edges.is_empty() || forest.components != 1 {
        return Err(Error::NotATree);
    }
    let value = block_values(&graph, &forest, w);
    let (x, y) = spread(&graph, lambda, mu, &value, n);
    let x_paths = (0..graph.left.len())
        .map(|i| SignedPath::new(graph.path_to_root(&forest, graph.id(Vertex::Left(i)))))
        .collect();
    let y_paths = (0..graph.right.len())
        .map(|j| SignedPath::new(graph.path_to_root(&forest, graph.id(Vertex::Right(j)))))
        .collect();
    Ok(TreeSolution {
        x,
        y,
        x_paths,
        y_paths,
    })
}

/// For a graph with a cycle: a fundamental cycle whose alternating weight sum
/// is nonzero, certifying that the system has no solution for this `w`.
/// `None` means every cycle sum vanishes and `w` is degenerate for the pair.
pub fn generic_infeasibility_witness(
    lambda: &SetPartition,
    mu: &SetPartition,
    w: &RationalVector,
) -> Result<Option<SignedPath>> {
    let graph = intersection_graph(lambda, mu)?;
    w.check_indices(1, graph.edges.len())?;
    let forest = graph.forest();
    if forest.non_tree_edges.is_empty() {
        return Err(Error::NotCyclic);
    }
    for e in &forest.non_tree_edges {
        let cycle = SignedPath::new(graph.fundamental_cycle(&forest, e));
        if !cycle.evaluate(w).is_zero() {
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

/// `w_{i+1} > 3 w_i > 0` for consecutive coordinates.
pub fn is_rapidly_increasing(w: &RationalVector) -> bool {
    let vals = w.values();
    let three = Rational::from_integer(3.into());
    match vals.first() {
        None => true,
        Some(first) => {
            first.is_positive() && vals.windows(2).all(|p| p[1] > &three * &p[0])
        }
    }
}

/// The index `i` with `|v - w_i| ≤ w_{first} + ... + w_{i-1}`, if any.
/// Unique when `w` is rapidly increasing.
pub fn near_index(w: &RationalVector, v: &Rational) -> Option<usize> {
    let mut below = Rational::zero();
    for (i, wi) in w.iter() {
        if (v - wi).abs() <= below {
            return Some(i);
        }
        below += wi;
    }
    None
}
