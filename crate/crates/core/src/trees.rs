//! Spanning trees of colour graphs, spanning arborescences of directed
//! duals, and the magic number computed several ways.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hypertrees::{enumerate_hypertrees, HypergraphKind};
use crate::linalg::determinant;
use crate::plane_graph::{Colour, EdgeId, RotationGraph, VertexId};
use crate::trinity::{DirectedDual, Trinity};
use crate::union_find::{RollbackUnionFind, UnionFind};

/// A spanning tree as a set of edge ids of its host graph, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree {
    pub edges: Vec<EdgeId>,
}

impl SpanningTree {
    /// Checks that `edges` spans `g` without cycles.
    pub fn new(g: &RotationGraph, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort();
        edges.dedup();
        if edges.len() + 1 != g.num_vertices() {
            return Err(Error::NotSpanning);
        }
        let mut uf = UnionFind::new(g.num_vertices());
        for &e in &edges {
            let (a, b) = g.ends(e);
            if !uf.union(a.0, b.0) {
                return Err(Error::NotSpanning);
            }
        }
        Ok(SpanningTree { edges })
    }

    pub fn degrees(&self, g: &RotationGraph) -> Vec<usize> {
        let mut deg = vec![0; g.num_vertices()];
        for &e in &self.edges {
            let (a, b) = g.ends(e);
            deg[a.0] += 1;
            deg[b.0] += 1;
        }
        deg
    }

    /// Degrees at the vertices of one colour class, keyed by vertex id.
    pub fn degree_record(&self, g: &RotationGraph, class: Colour) -> BTreeMap<String, usize> {
        let deg = self.degrees(g);
        g.vertices()
            .iter()
            .enumerate()
            .filter(|(_, v)| v.colour == Some(class))
            .map(|(i, v)| (v.name.clone(), deg[i]))
            .collect()
    }

    pub fn edge_names(&self, g: &RotationGraph) -> Vec<String> {
        let mut names: Vec<String> = self.edges.iter().map(|&e| g.edge(e).name.clone()).collect();
        names.sort();
        names
    }
}

/// Non-loop edges in canonical (edge id string) order.
fn canonical_edges(g: &RotationGraph) -> Vec<EdgeId> {
    let mut edges: Vec<EdgeId> = (0..g.num_edges()).map(EdgeId).filter(|&e| !g.is_loop(e)).collect();
    edges.sort_by(|a, b| g.edge(*a).name.cmp(&g.edge(*b).name));
    edges
}

/// Number of spanning trees by the matrix-tree theorem. Loops are ignored.
pub fn kirchhoff_count(g: &RotationGraph) -> BigInt {
    let n = g.num_vertices();
    let mut lap = vec![vec![BigInt::zero(); n]; n];
    for e in 0..g.num_edges() {
        let (a, b) = g.ends(EdgeId(e));
        if a == b {
            continue;
        }
        lap[a.0][a.0] += 1;
        lap[b.0][b.0] += 1;
        lap[a.0][b.0] -= 1;
        lap[b.0][a.0] -= 1;
    }
    let minor: Vec<Vec<BigInt>> = lap.into_iter().skip(1).map(|row| row.into_iter().skip(1).collect()).collect();
    determinant(minor)
}

pub(crate) fn check_cap(what: &str, needed: &BigInt, cap: u64) -> Result<()> {
    if needed > &BigInt::from(cap) {
        return Err(Error::CapExceeded { what: what.to_string(), needed: needed.to_string(), cap });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Stage {
    Enter,
    Included,
    Excluded,
}

#[derive(Debug)]
struct Frame {
    pos: usize,
    stage: Stage,
    took: bool,
}

/// Include/exclude search over edges in canonical order. An edge is only
/// excluded when the remaining edges can still connect the graph, so every
/// leaf of the search is a spanning tree.
pub struct SpanningTrees<'g> {
    graph: &'g RotationGraph,
    order: Vec<EdgeId>,
    ends: Vec<(usize, usize)>,
    uf: RollbackUnionFind,
    chosen: Vec<EdgeId>,
    stack: Vec<Frame>,
}

impl<'g> SpanningTrees<'g> {
    fn new(graph: &'g RotationGraph) -> Self {
        let order = canonical_edges(graph);
        let ends = order
            .iter()
            .map(|&e| {
                let (a, b) = graph.ends(e);
                (a.0, b.0)
            })
            .collect();
        SpanningTrees {
            graph,
            order,
            ends,
            uf: RollbackUnionFind::new(graph.num_vertices()),
            chosen: Vec::new(),
            stack: vec![Frame { pos: 0, stage: Stage::Enter, took: false }],
        }
    }

    fn can_finish_without(&self, pos: usize) -> bool {
        let n = self.graph.num_vertices();
        let mut uf = UnionFind::new(n);
        let mut parts = n;
        for &e in &self.chosen {
            let (a, b) = self.graph.ends(e);
            if uf.union(a.0, b.0) {
                parts -= 1;
            }
        }
        for &(a, b) in &self.ends[pos + 1..] {
            if uf.union(a, b) {
                parts -= 1;
            }
        }
        parts == 1
    }
}

impl Iterator for SpanningTrees<'_> {
    type Item = SpanningTree;

    fn next(&mut self) -> Option<SpanningTree> {
        let target = self.graph.num_vertices() - 1;
        loop {
            let top = self.stack.len().checked_sub(1)?;
            let Frame { pos, stage, took } = self.stack[top];
            match stage {
                Stage::Enter => {
                    if self.chosen.len() == target {
                        self.stack.pop();
                        let mut edges = self.chosen.clone();
                        edges.sort();
                        return Some(SpanningTree { edges });
                    }
                    if pos == self.order.len() {
                        self.stack.pop();
                        continue;
                    }
                    let (a, b) = self.ends[pos];
                    let took = self.uf.union(a, b);
                    if took {
                        self.chosen.push(self.order[pos]);
                    }
                    self.stack[top] = Frame { pos, stage: Stage::Included, took };
                    if took {
                        self.stack.push(Frame { pos: pos + 1, stage: Stage::Enter, took: false });
                    }
                }
                Stage::Included => {
                    if took {
                        self.chosen.pop();
                        self.uf.rollback();
                    }
                    self.stack[top].stage = Stage::Excluded;
                    if self.can_finish_without(pos) {
                        self.stack.push(Frame { pos: pos + 1, stage: Stage::Enter, took: false });
                    }
                }
                Stage::Excluded => {
                    self.stack.pop();
                }
            }
        }
    }
}

/// Streams every spanning tree once, after checking the Kirchhoff count
/// against `cap`.
pub fn spanning_trees(g: &RotationGraph, cap: u64) -> Result<SpanningTrees<'_>> {
    check_cap("spanning trees", &kirchhoff_count(g), cap)?;
    Ok(SpanningTrees::new(g))
}

pub fn enumerate_spanning_trees(g: &RotationGraph, cap: u64) -> Result<Vec<SpanningTree>> {
    Ok(spanning_trees(g, cap)?.collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arborescence {
    pub root: usize,
    /// Indices into the dual's arc list, sorted.
    pub arcs: Vec<usize>,
}

fn root_index(dual: &DirectedDual, root: &str) -> Result<usize> {
    dual.vertex_index(root).ok_or_else(|| Error::UnknownRoot(root.to_string()))
}

/// Directed matrix-tree theorem: the minor of `D_in - A` at the root.
pub fn count_arborescences(dual: &DirectedDual, root: &str) -> Result<BigInt> {
    let r = root_index(dual, root)?;
    let k = dual.vertices.len();
    let mut lap = vec![vec![BigInt::zero(); k]; k];
    for a in &dual.arcs {
        if a.tail == a.head {
            continue;
        }
        lap[a.head][a.head] += 1;
        lap[a.tail][a.head] -= 1;
    }
    let minor: Vec<Vec<BigInt>> = lap
        .into_iter()
        .enumerate()
        .filter(|(i, _)| *i != r)
        .map(|(_, row)| row.into_iter().enumerate().filter(|(j, _)| *j != r).map(|(_, x)| x).collect())
        .collect();
    Ok(determinant(minor))
}

/// Chooses one incoming arc per non-root vertex, rejecting cycles as soon
/// as they close.
pub fn enumerate_arborescences(dual: &DirectedDual, root: &str, cap: u64) -> Result<Vec<Arborescence>> {
    let r = root_index(dual, root)?;
    check_cap("arborescences", &count_arborescences(dual, root)?, cap)?;
    let k = dual.vertices.len();
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, a) in dual.arcs.iter().enumerate() {
        if a.tail != a.head {
            incoming[a.head].push(i);
        }
    }
    let order: Vec<usize> = (0..k).filter(|&v| v != r).collect();
    let mut parent: Vec<Option<usize>> = vec![None; k];
    let mut chosen = Vec::with_capacity(k);
    let mut out = Vec::new();

    fn closes_cycle(dual: &DirectedDual, parent: &[Option<usize>], v: usize, arc: usize) -> bool {
        let mut x = dual.arcs[arc].tail;
        loop {
            if x == v {
                return true;
            }
            match parent[x] {
                Some(a) => x = dual.arcs[a].tail,
                None => return false,
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        dual: &DirectedDual,
        r: usize,
        order: &[usize],
        incoming: &[Vec<usize>],
        at: usize,
        parent: &mut Vec<Option<usize>>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Arborescence>,
    ) {
        if at == order.len() {
            let mut arcs = chosen.clone();
            arcs.sort();
            out.push(Arborescence { root: r, arcs });
            return;
        }
        let v = order[at];
        for &arc in &incoming[v] {
            if closes_cycle(dual, parent, v, arc) {
                continue;
            }
            parent[v] = Some(arc);
            chosen.push(arc);
            go(dual, r, order, incoming, at + 1, parent, chosen, out);
            chosen.pop();
            parent[v] = None;
        }
    }

    go(dual, r, &order, &incoming, 0, &mut parent, &mut chosen, &mut out);
    Ok(out)
}

fn as_decimal<S: Serializer>(v: &BTreeMap<Colour, BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(v.iter().map(|(c, x)| (c.name(), x.to_string())))
}

fn as_optional_decimal<S: Serializer>(v: &BTreeMap<Colour, Option<BigInt>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(v.iter().map(|(c, x)| (c.name(), x.as_ref().map(|x| x.to_string()))))
}

fn by_kind<S: Serializer>(v: &BTreeMap<HypergraphKind, Option<u64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(v.iter().map(|(k, x)| (k.name(), x)))
}

/// Determinant counts for all three duals, enumeration counts when under
/// the cap, and the six hypertree counts. Slots left `None` were skipped.
#[derive(Clone, Debug, Serialize)]
pub struct MagicReport {
    #[serde(serialize_with = "as_decimal")]
    pub det: BTreeMap<Colour, BigInt>,
    #[serde(rename = "enum", serialize_with = "as_optional_decimal")]
    pub enumerated: BTreeMap<Colour, Option<BigInt>>,
    #[serde(serialize_with = "by_kind")]
    pub hypertrees: BTreeMap<HypergraphKind, Option<u64>>,
    pub agree: bool,
}

impl MagicReport {
    /// The common value when every populated slot agrees.
    pub fn magic(&self) -> Option<BigInt> {
        self.agree.then(|| self.det[&Colour::Violet].clone())
    }

    /// Number of populated slots out of twelve.
    pub fn populated(&self) -> usize {
        3 + self.enumerated.values().filter(|x| x.is_some()).count()
            + self.hypertrees.values().filter(|x| x.is_some()).count()
    }
}

pub fn magic_number(trinity: &Trinity, cap: u64) -> MagicReport {
    let mut det = BTreeMap::new();
    let mut enumerated = BTreeMap::new();
    for c in Colour::ALL {
        let dual = trinity.directed_dual(c);
        let root = dual.vertices[0].clone();
        det.insert(c, count_arborescences(&dual, &root).expect("root is a vertex"));
        let listed = enumerate_arborescences(&dual, &root, cap).ok().map(|l| BigInt::from(l.len()));
        enumerated.insert(c, listed);
    }
    let mut hypertrees = BTreeMap::new();
    for kind in HypergraphKind::ALL {
        let h = trinity.hypergraph(kind);
        hypertrees.insert(kind, enumerate_hypertrees(&h, cap).ok().map(|set| set.len() as u64));
    }
    let first = det[&Colour::Violet].clone();
    let agree = det.values().all(|x| *x == first)
        && enumerated.values().flatten().all(|x| *x == first)
        && hypertrees.values().flatten().all(|x| first.to_u64() == Some(*x));
    MagicReport { det, enumerated, hypertrees, agree }
}

/// Breadth-first search through trees with the same degree record at
/// `class`, one edge swapped per step. Returns `T = T_0, ..., T_k = T'`.
pub fn tree_exchange_path(
    g: &RotationGraph,
    from: &SpanningTree,
    to: &SpanningTree,
    class: Colour,
    cap: u64,
) -> Result<Vec<SpanningTree>> {
    let from = SpanningTree::new(g, from.edges.clone())?;
    let to = SpanningTree::new(g, to.edges.clone())?;
    if g.vertices().iter().all(|v| v.colour != Some(class)) {
        return Err(Error::WrongClass(class.to_string()));
    }
    if from.degree_record(g, class) != to.degree_record(g, class) {
        return Err(Error::SameHypertreeRequired);
    }
    let class_end = |e: EdgeId| -> VertexId {
        let (a, b) = g.ends(e);
        if g.colour(a) == Some(class) {
            a
        } else {
            b
        }
    };
    let non_loops = canonical_edges(g);
    let mut parent: HashMap<SpanningTree, Option<SpanningTree>> = HashMap::new();
    parent.insert(from.clone(), None);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(t) = queue.pop_front() {
        if t == to {
            let mut path = vec![t.clone()];
            let mut at = t;
            while let Some(Some(p)) = parent.get(&at) {
                path.push(p.clone());
                at = p.clone();
            }
            path.reverse();
            return Ok(path);
        }
        for (i, &out) in t.edges.iter().enumerate() {
            let mut rest = t.edges.clone();
            rest.remove(i);
            let mut uf = UnionFind::new(g.num_vertices());
            for &e in &rest {
                let (a, b) = g.ends(e);
                uf.union(a.0, b.0);
            }
            for &add in &non_loops {
                if add == out || t.edges.binary_search(&add).is_ok() || class_end(add) != class_end(out) {
                    continue;
                }
                let (a, b) = g.ends(add);
                if uf.find(a.0) == uf.find(b.0) {
                    continue;
                }
                let mut edges = rest.clone();
                edges.push(add);
                edges.sort();
                let next = SpanningTree { edges };
                if parent.contains_key(&next) {
                    continue;
                }
                if parent.len() as u64 >= cap {
                    return Err(Error::CapExceeded {
                        what: "exchange search".to_string(),
                        needed: format!("more than {cap}"),
                        cap,
                    });
                }
                parent.insert(next.clone(), Some(t.clone()));
                queue.push_back(next);
            }
        }
    }
    Err(Error::NoPath)
}
