//! The six hypergraphs of a trinity and their hypertrees.
//!
//! `XY` names the hypergraph whose vertices are class `X` and whose
//! hyperedges are class `Y`; its bipartite graph is the colour graph of the
//! third colour.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plane_graph::{Colour, EdgeId, RotationGraph, VertexId};
use crate::trees::{spanning_trees, SpanningTree};
use crate::trinity::Trinity;
use crate::union_find::RollbackUnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HypergraphKind {
    VE,
    EV,
    VR,
    RV,
    ER,
    RE,
}

impl HypergraphKind {
    pub const ALL: [HypergraphKind; 6] = [
        HypergraphKind::VE,
        HypergraphKind::EV,
        HypergraphKind::VR,
        HypergraphKind::RV,
        HypergraphKind::ER,
        HypergraphKind::RE,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HypergraphKind::VE => "VE",
            HypergraphKind::EV => "EV",
            HypergraphKind::VR => "VR",
            HypergraphKind::RV => "RV",
            HypergraphKind::ER => "ER",
            HypergraphKind::RE => "RE",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn vertex_class(self) -> Colour {
        Colour::parse(&self.name()[..1]).unwrap()
    }

    pub fn hyperedge_class(self) -> Colour {
        Colour::parse(&self.name()[1..]).unwrap()
    }

    /// Colour of the graph `Bip` of this hypergraph.
    pub fn bip_colour(self) -> Colour {
        let (a, b) = (self.vertex_class(), self.hyperedge_class());
        Colour::ALL.into_iter().find(|&c| c != a && c != b).unwrap()
    }

    /// Same hyperedges, vertices replaced by the third class.
    pub fn planar_dual(self) -> Self {
        let target = (self.bip_colour(), self.hyperedge_class());
        Self::ALL.into_iter().find(|k| (k.vertex_class(), k.hyperedge_class()) == target).unwrap()
    }

    /// Vertices and hyperedges swapped.
    pub fn transpose(self) -> Self {
        let target = (self.hyperedge_class(), self.vertex_class());
        Self::ALL.into_iter().find(|k| (k.vertex_class(), k.hyperedge_class()) == target).unwrap()
    }
}

impl fmt::Display for HypergraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct Hypergraph {
    pub kind: HypergraphKind,
    pub bip: RotationGraph,
    /// Sorted.
    pub vertices: Vec<String>,
    /// Sorted; this is the index order of hypertree vectors.
    pub hyperedges: Vec<String>,
    /// Neighbours of each hyperedge in `bip`, with multiplicity.
    pub members: Vec<Vec<String>>,
}

impl Trinity {
    pub fn hypergraph(&self, kind: HypergraphKind) -> Hypergraph {
        let bip = self.colour_graph(kind.bip_colour());
        let hyperedges = self.class(kind.hyperedge_class());
        let members = hyperedges
            .iter()
            .map(|y| {
                let v = bip.vertex_id(y).expect("hyperedge is a vertex of Bip");
                let mut m: Vec<String> =
                    bip.vertex(v).rotation.iter().map(|&d| bip.vertex(bip.head(d)).name.clone()).collect();
                m.sort();
                m
            })
            .collect();
        Hypergraph { kind, vertices: self.class(kind.vertex_class()), hyperedges, members, bip }
    }
}

/// `f(y) = deg_T(y) - 1` at every hyperedge node `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypertree {
    pub values: BTreeMap<String, usize>,
    pub witness: SpanningTree,
}

pub fn hypertree_of(bip: &RotationGraph, tree: &SpanningTree, hyperedge_class: Colour) -> Result<Hypertree> {
    if bip.vertices().iter().all(|v| v.colour != Some(hyperedge_class)) {
        return Err(Error::WrongClass(hyperedge_class.to_string()));
    }
    let values = tree
        .degree_record(bip, hyperedge_class)
        .into_iter()
        .map(|(k, d)| (k, d.checked_sub(1).expect("spanning tree touches every vertex")))
        .collect();
    Ok(Hypertree { values, witness: tree.clone() })
}

/// Distinct hypertree vectors, each with the first witness found.
#[derive(Clone, Debug)]
pub struct HypertreeSet {
    pub kind: Option<HypergraphKind>,
    pub hyperedges: Vec<String>,
    pub trees: BTreeMap<Vec<usize>, SpanningTree>,
}

impl HypertreeSet {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.trees.keys()
    }

    pub fn contains(&self, v: &[usize]) -> bool {
        self.trees.contains_key(v)
    }

    pub fn to_report(&self) -> HypertreeSetReport {
        HypertreeSetReport {
            hypergraph: self.kind.map(|k| k.name().to_string()).unwrap_or_default(),
            hyperedges: self.hyperedges.clone(),
            vectors: self.trees.keys().cloned().collect(),
            count: self.trees.len(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HypertreeSetReport {
    pub hypergraph: String,
    pub hyperedges: Vec<String>,
    pub vectors: Vec<Vec<usize>>,
    pub count: usize,
}

fn hyperedge_nodes(h: &Hypergraph) -> Vec<VertexId> {
    h.hyperedges.iter().map(|y| h.bip.vertex_id(y).unwrap()).collect()
}

pub fn enumerate_hypertrees(h: &Hypergraph, cap: u64) -> Result<HypertreeSet> {
    let nodes = hyperedge_nodes(h);
    let mut trees = BTreeMap::new();
    for t in spanning_trees(&h.bip, cap)? {
        let deg = t.degrees(&h.bip);
        let f: Vec<usize> = nodes.iter().map(|v| deg[v.0] - 1).collect();
        trees.entry(f).or_insert(t);
    }
    Ok(HypertreeSet { kind: Some(h.kind), hyperedges: h.hyperedges.clone(), trees })
}

/// The vector `c` with `B1 = c - B2`, if any.
pub fn translate_offset(b1: &HypertreeSet, b2: &HypertreeSet) -> Result<Option<Vec<i64>>> {
    if b1.hyperedges != b2.hyperedges {
        return Err(Error::IndexMismatch);
    }
    if b1.len() != b2.len() || b1.is_empty() {
        return Ok(None);
    }
    let k = b1.hyperedges.len();
    let min1: Vec<i64> = (0..k).map(|i| b1.vectors().map(|v| v[i] as i64).min().unwrap()).collect();
    let max2: Vec<i64> = (0..k).map(|i| b2.vectors().map(|v| v[i] as i64).max().unwrap()).collect();
    let c: Vec<i64> = min1.iter().zip(&max2).map(|(a, b)| a + b).collect();
    let ok = b2.vectors().all(|v| {
        let image: Option<Vec<usize>> = (0..k).map(|i| usize::try_from(c[i] - v[i] as i64).ok()).collect();
        image.is_some_and(|w| b1.contains(&w))
    });
    Ok(ok.then_some(c))
}

/// Searches for a spanning tree of `Bip` realizing `f`, independently of the
/// enumeration: edges are taken in canonical order under degree bounds.
pub fn realize(h: &Hypergraph, f: &[usize]) -> Option<SpanningTree> {
    let g = &h.bip;
    let nodes = hyperedge_nodes(h);
    let mut target = vec![usize::MAX; g.num_vertices()];
    for (i, v) in nodes.iter().enumerate() {
        target[v.0] = f[i] + 1;
    }
    let mut order: Vec<EdgeId> = (0..g.num_edges()).map(EdgeId).filter(|&e| !g.is_loop(e)).collect();
    order.sort_by(|a, b| g.edge(*a).name.cmp(&g.edge(*b).name));
    let hub: Vec<usize> = order
        .iter()
        .map(|&e| {
            let (a, b) = g.ends(e);
            if target[a.0] != usize::MAX {
                a.0
            } else {
                b.0
            }
        })
        .collect();
    let mut remaining = vec![0usize; g.num_vertices()];
    for &x in &hub {
        remaining[x] += 1;
    }

    struct Search<'a> {
        g: &'a RotationGraph,
        order: &'a [EdgeId],
        hub: &'a [usize],
        target: &'a [usize],
        deg: Vec<usize>,
        remaining: Vec<usize>,
        uf: RollbackUnionFind,
        chosen: Vec<EdgeId>,
    }

    impl Search<'_> {
        fn go(&mut self, pos: usize) -> bool {
            if self.chosen.len() + 1 == self.g.num_vertices() {
                return self.hub.iter().all(|&x| self.deg[x] == self.target[x]);
            }
            if pos == self.order.len() {
                return false;
            }
            let x = self.hub[pos];
            self.remaining[x] -= 1;
            let (a, b) = self.g.ends(self.order[pos]);
            if self.deg[x] < self.target[x] && self.uf.union(a.0, b.0) {
                self.deg[x] += 1;
                self.chosen.push(self.order[pos]);
                if self.go(pos + 1) {
                    return true;
                }
                self.chosen.pop();
                self.deg[x] -= 1;
                self.uf.rollback();
            }
            if self.deg[x] + self.remaining[x] >= self.target[x] && self.go(pos + 1) {
                return true;
            }
            self.remaining[x] += 1;
            false
        }
    }

    let mut s = Search {
        g,
        order: &order,
        hub: &hub,
        target: &target,
        deg: vec![0; g.num_vertices()],
        remaining,
        uf: RollbackUnionFind::new(g.num_vertices()),
        chosen: Vec::new(),
    };
    s.go(0).then(|| SpanningTree::new(g, s.chosen).expect("search builds a spanning tree"))
}
