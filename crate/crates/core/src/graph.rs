//! Labeled graphs and digraphs with degree bookkeeping.
//!
//! Vertices are dense ids in `0..vertex_count`. Edge lists are kept sorted so
//! equality, hashing and serialization are canonical. Both types are plain
//! values: edits go through [`Graph::apply_edit`] / [`Digraph::apply_edit`],
//! which return a new graph and leave the input untouched.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Which loops and parallel edges an undirected graph tolerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplicity {
    pub allow_parallel: bool,
    pub allow_loops: bool,
}

impl Simplicity {
    pub const SIMPLE: Simplicity = Simplicity { allow_parallel: false, allow_loops: false };
    pub const MULTI: Simplicity = Simplicity { allow_parallel: true, allow_loops: true };

    pub fn is_simple(self) -> bool {
        !self.allow_parallel && !self.allow_loops
    }

    /// The weaker of the two restrictions.
    pub fn union(self, other: Simplicity) -> Simplicity {
        Simplicity {
            allow_parallel: self.allow_parallel || other.allow_parallel,
            allow_loops: self.allow_loops || other.allow_loops,
        }
    }
}

/// The degree notion an irregularity value is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeMode {
    Undirected,
    In,
    Out,
}

impl DegreeMode {
    pub fn name(self) -> &'static str {
        match self {
            DegreeMode::Undirected => "undirected",
            DegreeMode::In => "in",
            DegreeMode::Out => "out",
        }
    }
}

impl fmt::Display for DegreeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A unit change of one vertex degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeStep {
    Increment,
    Decrement,
}

/// Sorted degree values with multiplicities.
///
/// Every irregularity value in this crate is a function of this multiset
/// alone, so it is the common currency between graphs, the fast and naive
/// evaluators and the partition counters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreeMultiset {
    entries: Vec<(usize, usize)>,
}

impl DegreeMultiset {
    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut all: Vec<usize> = degrees.into_iter().collect();
        all.sort_unstable();
        let mut entries: Vec<(usize, usize)> = Vec::new();
        for d in all {
            match entries.last_mut() {
                Some((value, count)) if *value == d => *count += 1,
                _ => entries.push((d, 1)),
            }
        }
        DegreeMultiset { entries }
    }

    /// Builds a multiset from `(degree, multiplicity)` pairs, which must be
    /// strictly increasing in degree with positive multiplicities.
    pub fn from_entries(entries: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(d, k)) in entries.iter().enumerate() {
            if k == 0 {
                return Err(Error::Precondition(format!("degree {d} has multiplicity 0")));
            }
            if i > 0 && entries[i - 1].0 >= d {
                return Err(Error::Precondition(
                    "degree values must be strictly increasing".to_string(),
                ));
            }
        }
        Ok(DegreeMultiset { entries })
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn vertex_count(&self) -> usize {
        self.entries.iter().map(|&(_, k)| k).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when at most one distinct degree value occurs.
    pub fn is_regular(&self) -> bool {
        self.entries.len() <= 1
    }

    pub fn multiplicity(&self, degree: usize) -> usize {
        match self.entries.binary_search_by_key(&degree, |&(d, _)| d) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    pub fn contains(&self, degree: usize) -> bool {
        self.multiplicity(degree) > 0
    }

    /// Number of vertices with degree `<= degree`.
    pub fn count_le(&self, degree: usize) -> usize {
        let end = self.entries.partition_point(|&(d, _)| d <= degree);
        self.entries[..end].iter().map(|&(_, k)| k).sum()
    }

    /// Number of vertices with degree `< degree`.
    pub fn count_lt(&self, degree: usize) -> usize {
        let end = self.entries.partition_point(|&(d, _)| d < degree);
        self.entries[..end].iter().map(|&(_, k)| k).sum()
    }

    pub fn count_gt(&self, degree: usize) -> usize {
        self.vertex_count() - self.count_le(degree)
    }

    pub fn count_ge(&self, degree: usize) -> usize {
        self.vertex_count() - self.count_lt(degree)
    }

    /// Expanded ascending degree sequence.
    pub fn expanded(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .flat_map(|&(d, k)| std::iter::repeat_n(d, k))
    }

    /// The multiset after one vertex of degree `degree` takes `step`.
    pub fn with_step(&self, degree: usize, step: DegreeStep) -> Result<Self> {
        if !self.contains(degree) {
            return Err(Error::DegreeAbsent(degree));
        }
        let target = match step {
            DegreeStep::Increment => degree + 1,
            DegreeStep::Decrement => degree
                .checked_sub(1)
                .ok_or_else(|| Error::Precondition("cannot decrement degree 0".to_string()))?,
        };
        let mut entries = self.entries.clone();
        let i = entries.binary_search_by_key(&degree, |&(d, _)| d).unwrap_or_else(|_| unreachable!());
        entries[i].1 -= 1;
        match entries.binary_search_by_key(&target, |&(d, _)| d) {
            Ok(j) => entries[j].1 += 1,
            Err(j) => entries.insert(j, (target, 1)),
        }
        entries.retain(|&(_, k)| k > 0);
        Ok(DegreeMultiset { entries })
    }
}

/// A single graph edit. Undirected edits apply to [`Graph`], arc edits to
/// [`Digraph`]; `AddEdge`/`RemoveEdge` on a digraph add or remove the arc
/// `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditOp {
    AddEdge { u: Vertex, v: Vertex },
    RemoveEdge { u: Vertex, v: Vertex },
    /// Edge `{keep, from}` becomes `{keep, to}`.
    RetargetEdgeEnd { keep: Vertex, from: Vertex, to: Vertex },
    ReverseArc { tail: Vertex, head: Vertex },
    /// Arc `(tail, head)` becomes `(new_tail, head)`.
    RetargetArcTail { tail: Vertex, head: Vertex, new_tail: Vertex },
    /// Arc `(tail, head)` becomes `(tail, new_head)`.
    RetargetArcHead { tail: Vertex, head: Vertex, new_head: Vertex },
    /// Detach the hanging tree rooted at `root` from `u` and hang it from
    /// the pendant vertex `v`.
    MoveBranch { u: Vertex, root: Vertex, v: Vertex },
}

impl EditOp {
    /// The edit that undoes `self` on the graph `self` produced.
    pub fn inverse(&self) -> EditOp {
        match *self {
            EditOp::AddEdge { u, v } => EditOp::RemoveEdge { u, v },
            EditOp::RemoveEdge { u, v } => EditOp::AddEdge { u, v },
            EditOp::RetargetEdgeEnd { keep, from, to } => {
                EditOp::RetargetEdgeEnd { keep, from: to, to: from }
            }
            EditOp::ReverseArc { tail, head } => EditOp::ReverseArc { tail: head, head: tail },
            EditOp::RetargetArcTail { tail, head, new_tail } => {
                EditOp::RetargetArcTail { tail: new_tail, head, new_tail: tail }
            }
            EditOp::RetargetArcHead { tail, head, new_head } => {
                EditOp::RetargetArcHead { tail, head: new_head, new_head: head }
            }
            EditOp::MoveBranch { u, root, v } => EditOp::RetargetEdgeEnd { keep: root, from: v, to: u },
        }
    }

    pub fn is_arc_edit(&self) -> bool {
        matches!(
            self,
            EditOp::ReverseArc { .. } | EditOp::RetargetArcTail { .. } | EditOp::RetargetArcHead { .. }
        )
    }

    fn undirected_only(&self) -> bool {
        matches!(self, EditOp::RetargetEdgeEnd { .. } | EditOp::MoveBranch { .. })
    }
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EditOp::AddEdge { u, v } => write!(f, "add_edge({u} {v})"),
            EditOp::RemoveEdge { u, v } => write!(f, "remove_edge({u} {v})"),
            EditOp::RetargetEdgeEnd { keep, from, to } => {
                write!(f, "retarget_edge({from} {keep} -> {to} {keep})")
            }
            EditOp::ReverseArc { tail, head } => write!(f, "reverse_arc({tail} {head})"),
            EditOp::RetargetArcTail { tail, head, new_tail } => {
                write!(f, "retarget_tail({tail} {head} -> {new_tail} {head})")
            }
            EditOp::RetargetArcHead { tail, head, new_head } => {
                write!(f, "retarget_head({tail} {head} -> {tail} {new_head})")
            }
            EditOp::MoveBranch { u, root, v } => write!(f, "move_branch(root {root} from {u} to {v})"),
        }
    }
}

fn normalize(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Undirected (multi)graph on dense vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    /// Normalized `(min, max)` pairs, sorted; parallel edges repeat.
    edges: Vec<(Vertex, Vertex)>,
    degrees: Vec<usize>,
    simplicity: Simplicity,
}

/// The two sides of a graph split at a cut edge `u1 v1`.
///
/// `master` holds `u1`, `slave` holds `v1`. The `*_ids` vectors map local
/// vertex ids back to ids in the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSplit {
    pub master: Graph,
    pub master_ids: Vec<Vertex>,
    pub u1: Vertex,
    pub slave: Graph,
    pub slave_ids: Vec<Vertex>,
    pub v1: Vertex,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Self::with_simplicity(vertex_count, Simplicity::SIMPLE)
    }

    pub fn with_simplicity(vertex_count: usize, simplicity: Simplicity) -> Self {
        Graph { vertex_count, edges: Vec::new(), degrees: vec![0; vertex_count], simplicity }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_edges_with(vertex_count, Simplicity::SIMPLE, edges)
    }

    pub fn from_edges_with<I>(vertex_count: usize, simplicity: Simplicity, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::with_simplicity(vertex_count, simplicity);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Same graph with loops and parallel edges permitted from now on.
    pub fn relaxed(&self) -> Graph {
        Graph { simplicity: Simplicity::MULTI, ..self.clone() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees[v]
    }

    pub fn simplicity(&self) -> Simplicity {
        self.simplicity
    }

    pub fn degree_multiset(&self) -> DegreeMultiset {
        DegreeMultiset::from_degrees(self.degrees.iter().copied())
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count })
        }
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        let key = normalize(u, v);
        let lo = self.edges.partition_point(|e| *e < key);
        let hi = self.edges.partition_point(|e| *e <= key);
        hi - lo
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v && !self.simplicity.allow_loops {
            return Err(Error::LoopNotAllowed(u));
        }
        if !self.simplicity.allow_parallel && self.contains_edge(u, v) {
            return Err(Error::ParallelEdge(u, v));
        }
        let key = normalize(u, v);
        let at = self.edges.partition_point(|e| *e <= key);
        self.edges.insert(at, key);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        Ok(())
    }

    /// Removes one copy of `{u, v}`.
    pub fn delete_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let key = normalize(u, v);
        let at = self.edges.partition_point(|e| *e < key);
        if self.edges.get(at) != Some(&key) {
            return Err(Error::EdgeAbsent(u, v));
        }
        self.edges.remove(at);
        self.degrees[u] -= 1;
        self.degrees[v] -= 1;
        Ok(())
    }

    /// Neighbor lists; a loop lists its vertex once, parallel edges repeat.
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            if a != b {
                adj[b].push(a);
            }
        }
        adj
    }

    /// Component label of every vertex, labels dense in order of first
    /// appearance, plus the number of components.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        self.components_skipping(None)
    }

    fn components_skipping(&self, skip: Option<usize>) -> (usize, Vec<usize>) {
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); self.vertex_count];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().0
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    fn edge_index(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let key = normalize(u, v);
        let at = self.edges.partition_point(|e| *e < key);
        if self.edges.get(at) == Some(&key) {
            Ok(at)
        } else {
            Err(Error::EdgeAbsent(u, v))
        }
    }

    /// Component labels of `g - {u, v}` (one copy removed).
    fn labels_without(&self, u: Vertex, v: Vertex) -> Result<(usize, Vec<usize>)> {
        let idx = self.edge_index(u, v)?;
        Ok(self.components_skipping(Some(idx)))
    }

    pub fn is_cut_edge(&self, u: Vertex, v: Vertex) -> Result<bool> {
        let (_, labels) = self.labels_without(u, v)?;
        Ok(labels[u] != labels[v])
    }

    /// Vertices on `u1`'s side once the cut edge `u1 v1` is removed.
    pub fn master_side(&self, u1: Vertex, v1: Vertex) -> Result<Vec<bool>> {
        let (_, labels) = self.labels_without(u1, v1)?;
        if labels[u1] == labels[v1] {
            return Err(Error::NotCutEdge(u1, v1));
        }
        Ok(labels.iter().map(|&l| l == labels[u1]).collect())
    }

    /// Splits at the cut edge `u1 v1` into the two components of `g - u1v1`.
    /// Other components of `g` (if any) are not part of either side.
    pub fn split_at_cut_edge(&self, u1: Vertex, v1: Vertex) -> Result<CutSplit> {
        let (_, labels) = self.labels_without(u1, v1)?;
        if labels[u1] == labels[v1] {
            return Err(Error::NotCutEdge(u1, v1));
        }
        let (master, master_ids) = self.induced_by_label(&labels, labels[u1], Some((u1, v1)));
        let (slave, slave_ids) = self.induced_by_label(&labels, labels[v1], Some((u1, v1)));
        let local = |ids: &[Vertex], x: Vertex| ids.iter().position(|&y| y == x).unwrap_or_else(|| unreachable!());
        Ok(CutSplit {
            u1: local(&master_ids, u1),
            v1: local(&slave_ids, v1),
            master,
            master_ids,
            slave,
            slave_ids,
        })
    }

    fn induced_by_label(
        &self,
        labels: &[usize],
        label: usize,
        skip: Option<(Vertex, Vertex)>,
    ) -> (Graph, Vec<Vertex>) {
        let ids: Vec<Vertex> = (0..self.vertex_count).filter(|&x| labels[x] == label).collect();
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &x) in ids.iter().enumerate() {
            local[x] = i;
        }
        let mut g = Graph::with_simplicity(ids.len(), self.simplicity);
        let mut skipped = false;
        for &(a, b) in &self.edges {
            if !skipped && Some((a, b)) == skip.map(|(x, y)| normalize(x, y)) {
                skipped = true;
                continue;
            }
            if labels[a] == label && labels[b] == label {
                g.insert_edge(local[a], local[b]).unwrap_or_else(|_| unreachable!());
            }
        }
        (g, ids)
    }

    /// Validates `op` against this graph and returns the unit degree changes
    /// it causes, in application order.
    pub fn check_edit(&self, op: &EditOp) -> Result<Vec<(Vertex, DegreeStep)>> {
        use DegreeStep::{Decrement, Increment};
        match *op {
            EditOp::AddEdge { u, v } => {
                self.check_vertex(u)?;
                self.check_vertex(v)?;
                if u == v && !self.simplicity.allow_loops {
                    return Err(Error::LoopNotAllowed(u));
                }
                if !self.simplicity.allow_parallel && self.contains_edge(u, v) {
                    return Err(Error::ParallelEdge(u, v));
                }
                Ok(vec![(u, Increment), (v, Increment)])
            }
            EditOp::RemoveEdge { u, v } => {
                self.edge_index(u, v)?;
                Ok(vec![(u, Decrement), (v, Decrement)])
            }
            EditOp::RetargetEdgeEnd { keep, from, to } => {
                self.edge_index(keep, from)?;
                self.check_vertex(to)?;
                if to == from {
                    return Err(Error::Precondition("retarget to the same endpoint".to_string()));
                }
                if to == keep && !self.simplicity.allow_loops {
                    return Err(Error::LoopNotAllowed(keep));
                }
                if !self.simplicity.allow_parallel && self.contains_edge(keep, to) {
                    return Err(Error::ParallelEdge(keep, to));
                }
                Ok(vec![(from, Decrement), (to, Increment)])
            }
            EditOp::MoveBranch { u, root, v } => {
                self.check_branch_move(u, root, v)?;
                Ok(vec![(u, Decrement), (v, Increment)])
            }
            EditOp::ReverseArc { .. } | EditOp::RetargetArcTail { .. } | EditOp::RetargetArcHead { .. } => {
                Err(Error::KindMismatch { op: op.to_string(), kind: "undirected" })
            }
        }
    }

    fn check_branch_move(&self, u: Vertex, root: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(v)?;
        let (_, labels) = self.labels_without(u, root)?;
        if self.degree(u) < 3 {
            return Err(Error::Precondition(format!("branch source {u} has degree {} < 3", self.degree(u))));
        }
        if self.degree(v) != 1 {
            return Err(Error::Precondition(format!("branch target {v} is not pendant")));
        }
        if v == u {
            return Err(Error::Precondition("branch source and target coincide".to_string()));
        }
        let side = labels[root];
        if labels[u] == side {
            return Err(Error::Precondition(format!("edge {{{u}, {root}}} does not hang a branch")));
        }
        if labels[v] == side {
            return Err(Error::Precondition(format!("pendant {v} lies inside the branch")));
        }
        let branch_vertices = labels.iter().filter(|&&l| l == side).count();
        let mut branch_edges = 0;
        for &(a, b) in &self.edges {
            if labels[a] == side && labels[b] == side {
                if a == b {
                    return Err(Error::Precondition("branch contains a loop".to_string()));
                }
                branch_edges += 1;
            }
        }
        if branch_edges + 1 != branch_vertices {
            return Err(Error::Precondition("branch is not a tree".to_string()));
        }
        Ok(())
    }

    /// Returns the graph after `op`; `self` is unchanged.
    pub fn apply_edit(&self, op: &EditOp) -> Result<Graph> {
        self.check_edit(op)?;
        let mut g = self.clone();
        match *op {
            EditOp::AddEdge { u, v } => g.insert_edge(u, v)?,
            EditOp::RemoveEdge { u, v } => g.delete_edge(u, v)?,
            EditOp::RetargetEdgeEnd { keep, from, to } => {
                g.delete_edge(keep, from)?;
                g.insert_edge(keep, to)?;
            }
            EditOp::MoveBranch { u, root, v } => {
                g.delete_edge(u, root)?;
                g.insert_edge(v, root)?;
            }
            _ => unreachable!("arc edits rejected by check_edit"),
        }
        Ok(g)
    }
}

/// Unit in- and out-degree changes caused by one arc edit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArcDegreeChanges {
    pub in_changes: Vec<(Vertex, DegreeStep)>,
    pub out_changes: Vec<(Vertex, DegreeStep)>,
}

/// Simple digraph: no self-arcs, no duplicate arcs. Antiparallel pairs are
/// allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(Vertex, Vertex)>,
    in_degrees: Vec<usize>,
    out_degrees: Vec<usize>,
}

impl Digraph {
    pub fn new(vertex_count: usize) -> Self {
        Digraph {
            vertex_count,
            arcs: Vec::new(),
            in_degrees: vec![0; vertex_count],
            out_degrees: vec![0; vertex_count],
        }
    }

    pub fn from_arcs<I>(vertex_count: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Digraph::new(vertex_count);
        for (a, b) in arcs {
            d.insert_arc(a, b)?;
        }
        Ok(d)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_degrees[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_degrees[v]
    }

    pub fn in_degrees(&self) -> &[usize] {
        &self.in_degrees
    }

    pub fn out_degrees(&self) -> &[usize] {
        &self.out_degrees
    }

    pub fn degree_of(&self, v: Vertex, mode: DegreeMode) -> Result<usize> {
        self.check_vertex(v)?;
        match mode {
            DegreeMode::In => Ok(self.in_degrees[v]),
            DegreeMode::Out => Ok(self.out_degrees[v]),
            DegreeMode::Undirected => Err(Error::ModeMismatch { mode: mode.name(), kind: "directed" }),
        }
    }

    pub fn degree_multiset(&self, mode: DegreeMode) -> Result<DegreeMultiset> {
        match mode {
            DegreeMode::In => Ok(DegreeMultiset::from_degrees(self.in_degrees.iter().copied())),
            DegreeMode::Out => Ok(DegreeMultiset::from_degrees(self.out_degrees.iter().copied())),
            DegreeMode::Undirected => Err(Error::ModeMismatch { mode: mode.name(), kind: "directed" }),
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count })
        }
    }

    pub fn contains_arc(&self, tail: Vertex, head: Vertex) -> bool {
        self.arcs.binary_search(&(tail, head)).is_ok()
    }

    pub fn insert_arc(&mut self, tail: Vertex, head: Vertex) -> Result<()> {
        self.check_vertex(tail)?;
        self.check_vertex(head)?;
        if tail == head {
            return Err(Error::LoopNotAllowed(tail));
        }
        match self.arcs.binary_search(&(tail, head)) {
            Ok(_) => Err(Error::DuplicateArc(tail, head)),
            Err(at) => {
                self.arcs.insert(at, (tail, head));
                self.out_degrees[tail] += 1;
                self.in_degrees[head] += 1;
                Ok(())
            }
        }
    }

    pub fn delete_arc(&mut self, tail: Vertex, head: Vertex) -> Result<()> {
        self.check_vertex(tail)?;
        self.check_vertex(head)?;
        match self.arcs.binary_search(&(tail, head)) {
            Ok(at) => {
                self.arcs.remove(at);
                self.out_degrees[tail] -= 1;
                self.in_degrees[head] -= 1;
                Ok(())
            }
            Err(_) => Err(Error::ArcAbsent(tail, head)),
        }
    }

    /// Every arc reversed.
    pub fn reversed(&self) -> Digraph {
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(a, b)| (b, a)).collect();
        arcs.sort_unstable();
        Digraph {
            vertex_count: self.vertex_count,
            arcs,
            in_degrees: self.out_degrees.clone(),
            out_degrees: self.in_degrees.clone(),
        }
    }

    /// Kahn's algorithm.
    pub fn has_directed_cycle(&self) -> bool {
        let mut indeg = self.in_degrees.clone();
        let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.arcs {
            out[a].push(b);
        }
        let mut stack: Vec<Vertex> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(x) = stack.pop() {
            seen += 1;
            for &y in &out[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    stack.push(y);
                }
            }
        }
        seen != self.vertex_count
    }

    fn require_arc(&self, tail: Vertex, head: Vertex) -> Result<()> {
        self.check_vertex(tail)?;
        self.check_vertex(head)?;
        if self.contains_arc(tail, head) {
            Ok(())
        } else {
            Err(Error::ArcAbsent(tail, head))
        }
    }

    fn require_new_arc(&self, tail: Vertex, head: Vertex) -> Result<()> {
        self.check_vertex(tail)?;
        self.check_vertex(head)?;
        if tail == head {
            return Err(Error::LoopNotAllowed(tail));
        }
        if self.contains_arc(tail, head) {
            return Err(Error::DuplicateArc(tail, head));
        }
        Ok(())
    }

    pub fn check_edit(&self, op: &EditOp) -> Result<ArcDegreeChanges> {
        use DegreeStep::{Decrement, Increment};
        if op.undirected_only() {
            return Err(Error::KindMismatch { op: op.to_string(), kind: "directed" });
        }
        let changes = match *op {
            EditOp::AddEdge { u, v } => {
                self.require_new_arc(u, v)?;
                ArcDegreeChanges { in_changes: vec![(v, Increment)], out_changes: vec![(u, Increment)] }
            }
            EditOp::RemoveEdge { u, v } => {
                self.require_arc(u, v)?;
                ArcDegreeChanges { in_changes: vec![(v, Decrement)], out_changes: vec![(u, Decrement)] }
            }
            EditOp::ReverseArc { tail, head } => {
                self.require_arc(tail, head)?;
                if self.contains_arc(head, tail) {
                    return Err(Error::DuplicateArc(head, tail));
                }
                ArcDegreeChanges {
                    in_changes: vec![(head, Decrement), (tail, Increment)],
                    out_changes: vec![(tail, Decrement), (head, Increment)],
                }
            }
            EditOp::RetargetArcTail { tail, head, new_tail } => {
                self.require_arc(tail, head)?;
                if new_tail == tail {
                    return Err(Error::Precondition("retarget to the same tail".to_string()));
                }
                self.require_new_arc(new_tail, head)?;
                ArcDegreeChanges { in_changes: vec![], out_changes: vec![(tail, Decrement), (new_tail, Increment)] }
            }
            EditOp::RetargetArcHead { tail, head, new_head } => {
                self.require_arc(tail, head)?;
                if new_head == head {
                    return Err(Error::Precondition("retarget to the same head".to_string()));
                }
                self.require_new_arc(tail, new_head)?;
                ArcDegreeChanges { in_changes: vec![(head, Decrement), (new_head, Increment)], out_changes: vec![] }
            }
            EditOp::RetargetEdgeEnd { .. } | EditOp::MoveBranch { .. } => unreachable!(),
        };
        Ok(changes)
    }

    pub fn apply_edit(&self, op: &EditOp) -> Result<Digraph> {
        self.check_edit(op)?;
        let mut d = self.clone();
        match *op {
            EditOp::AddEdge { u, v } => d.insert_arc(u, v)?,
            EditOp::RemoveEdge { u, v } => d.delete_arc(u, v)?,
            EditOp::ReverseArc { tail, head } => {
                d.delete_arc(tail, head)?;
                d.insert_arc(head, tail)?;
            }
            EditOp::RetargetArcTail { tail, head, new_tail } => {
                d.delete_arc(tail, head)?;
                d.insert_arc(new_tail, head)?;
            }
            EditOp::RetargetArcHead { tail, head, new_head } => {
                d.delete_arc(tail, head)?;
                d.insert_arc(tail, new_head)?;
            }
            _ => unreachable!("undirected edits rejected by check_edit"),
        }
        Ok(d)
    }
}

/// Either kind of graph, as read from an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(Graph),
    Directed(Digraph),
}

impl AnyGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.vertex_count(),
            AnyGraph::Directed(d) => d.vertex_count(),
        }
    }

    pub fn degree_multiset(&self, mode: DegreeMode) -> Result<DegreeMultiset> {
        match (self, mode) {
            (AnyGraph::Undirected(g), DegreeMode::Undirected) => Ok(g.degree_multiset()),
            (AnyGraph::Undirected(_), _) => Err(Error::ModeMismatch { mode: mode.name(), kind: "undirected" }),
            (AnyGraph::Directed(d), _) => d.degree_multiset(mode),
        }
    }
}

impl From<Graph> for AnyGraph {
    fn from(g: Graph) -> Self {
        AnyGraph::Undirected(g)
    }
}

impl From<Digraph> for AnyGraph {
    fn from(d: Digraph) -> Self {
        AnyGraph::Directed(d)
    }
}
