//! Universes in the sense of formal knot theory: states, trails,
//! transpositions, the clock graph, and the link to tight configurations of
//! the checkerboard dual.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dividing::{ChordDiagram, Configuration, ConfigurationReport, DiscSystem};
use crate::error::{schema, Error, Result};
use crate::plane_graph::{Colour, DartId, FaceId, GraphDocument, RotationGraph, VertexId};
use crate::transitions::build_configuration_graph;
use crate::trees::{check_cap, magic_number};
use crate::trinity::build_trinity;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseDocument {
    #[serde(flatten)]
    pub graph: GraphDocument,
    pub stars: [String; 2],
}

#[derive(Clone, Debug)]
pub struct Universe {
    graph: RotationGraph,
    stars: [FaceId; 2],
}

pub fn parse_universe(text: &str) -> Result<Universe> {
    let doc: UniverseDocument = serde_json::from_str(text)?;
    Universe::from_document(&doc)
}

impl Universe {
    pub fn from_document(doc: &UniverseDocument) -> Result<Self> {
        let graph = RotationGraph::from_document(&doc.graph)?;
        if let Some(v) = graph.vertices().iter().find(|v| v.rotation.len() != 4) {
            return Err(Error::NotFourRegular(v.name.clone()));
        }
        let face = |name: &str| graph.face_id(name).ok_or_else(|| schema(format!("unknown star face {name}")));
        let stars = [face(&doc.stars[0])?, face(&doc.stars[1])?];
        let adjacent = stars[0] != stars[1]
            && graph.edges().iter().any(|e| {
                let pair = [graph.face_of(e.darts[0]), graph.face_of(e.darts[1])];
                pair == stars || pair == [stars[1], stars[0]]
            });
        if !adjacent {
            return Err(Error::StarsNotAdjacent);
        }
        if graph.num_vertices() + 2 != graph.num_faces() {
            return Err(Error::CountMismatch { vertices: graph.num_vertices(), regions: graph.num_faces() - 2 });
        }
        Ok(Universe { graph, stars })
    }

    pub fn to_document(&self) -> UniverseDocument {
        UniverseDocument { graph: self.graph.to_document(), stars: self.stars.map(|f| self.graph.face(f).name.clone()) }
    }

    pub fn graph(&self) -> &RotationGraph {
        &self.graph
    }

    pub fn stars(&self) -> [FaceId; 2] {
        self.stars
    }

    pub fn is_starred(&self, f: FaceId) -> bool {
        self.stars.contains(&f)
    }

    pub fn unstarred_faces(&self) -> usize {
        self.graph.num_faces() - 2
    }

    /// The face holding quadrant `q` of `v`, between rotation darts `q` and
    /// `q + 1`.
    pub fn quadrant_face(&self, v: VertexId, q: usize) -> FaceId {
        self.graph.face_of(self.graph.vertex(v).rotation[q % 4])
    }

    /// The planar dual with its checkerboard colouring; the first starred
    /// region becomes a violet vertex.
    pub fn dual_graph(&self) -> RotationGraph {
        let dual = self.graph.planar_dual();
        let report = dual.validate_bipartite_plane();
        let first = dual.vertex_id(&self.graph.face(self.stars[0]).name).expect("faces become dual vertices");
        let flip = report.colours[first.0] != Colour::Violet;
        dual.with_colours(|v| {
            let c = report.colours[v.0];
            Some(if flip { if c == Colour::Violet { Colour::Emerald } else { Colour::Violet } } else { c })
        })
    }
}

/// A quadrant per vertex, indexed like the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniverseState {
    pub markers: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateDocument {
    pub markers: BTreeMap<String, u8>,
}

impl UniverseState {
    pub fn document(&self, u: &Universe) -> StateDocument {
        StateDocument {
            markers: u.graph.vertices().iter().zip(&self.markers).map(|(v, &q)| (v.name.clone(), q)).collect(),
        }
    }

    pub fn from_document(u: &Universe, doc: &StateDocument) -> Result<Self> {
        let mut markers = vec![0u8; u.graph.num_vertices()];
        if doc.markers.len() != markers.len() {
            return Err(schema("a state needs one marker per vertex"));
        }
        for (name, &q) in &doc.markers {
            let v = u.graph.vertex_id(name).ok_or_else(|| schema(format!("unknown vertex {name}")))?;
            if q > 3 {
                return Err(schema(format!("quadrant {q} out of range")));
            }
            markers[v.0] = q;
        }
        Ok(UniverseState { markers })
    }

    pub fn is_valid(&self, u: &Universe) -> bool {
        let mut seen = BTreeSet::new();
        self.markers.len() == u.graph.num_vertices()
            && self.markers.iter().enumerate().all(|(v, &q)| {
                let f = u.quadrant_face(VertexId(v), q as usize);
                !u.is_starred(f) && seen.insert(f)
            })
    }

    /// The splitting at each vertex: marker `q` joins rotation darts
    /// `q+1, q+2` and `q+3, q`, which depends only on `q mod 2`.
    pub fn splitting(&self) -> Vec<u8> {
        self.markers.iter().map(|q| q % 2).collect()
    }
}

struct Search<'u> {
    u: &'u Universe,
    cap: u64,
    count: &'u AtomicU64,
    over: &'u AtomicBool,
}

impl Search<'_> {
    fn run(&self, v: usize, used: &mut [bool], current: &mut Vec<u8>, out: &mut Vec<UniverseState>) {
        if self.over.load(Ordering::Relaxed) {
            return;
        }
        if v == self.u.graph.num_vertices() {
            if self.count.fetch_add(1, Ordering::Relaxed) + 1 > self.cap {
                self.over.store(true, Ordering::Relaxed);
                return;
            }
            out.push(UniverseState { markers: current.clone() });
            return;
        }
        for q in 0..4u8 {
            let f = self.u.quadrant_face(VertexId(v), q as usize);
            if self.u.is_starred(f) || used[f.0] {
                continue;
            }
            used[f.0] = true;
            current.push(q);
            self.run(v + 1, used, current, out);
            current.pop();
            used[f.0] = false;
        }
    }
}

/// All states, sorted, sharded by the marker at the first vertex.
pub fn enumerate_states(u: &Universe, cap: u64) -> Result<Vec<UniverseState>> {
    let count = AtomicU64::new(0);
    let over = AtomicBool::new(false);
    let search = Search { u, cap, count: &count, over: &over };
    let shards: Vec<Vec<UniverseState>> = (0..4u8)
        .into_par_iter()
        .map(|q| {
            let mut out = Vec::new();
            let f = u.quadrant_face(VertexId(0), q as usize);
            if u.is_starred(f) {
                return out;
            }
            let mut used = vec![false; u.graph.num_faces()];
            used[f.0] = true;
            search.run(1, &mut used, &mut vec![q], &mut out);
            out
        })
        .collect();
    if over.load(Ordering::Relaxed) {
        return Err(Error::CapExceeded { what: "states".into(), needed: format!("more than {cap}"), cap });
    }
    let mut states: Vec<UniverseState> = shards.into_iter().flatten().collect();
    states.sort();
    Ok(states)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trail {
    pub splitting: Vec<u8>,
    /// Darts in traversal order, each leaving its tail.
    pub darts: Vec<DartId>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrailDocument {
    pub splitting: BTreeMap<String, u8>,
    pub darts: Vec<String>,
}

impl Trail {
    pub fn document(&self, u: &Universe) -> TrailDocument {
        let g = &u.graph;
        TrailDocument {
            splitting: g.vertices().iter().zip(&self.splitting).map(|(v, &s)| (v.name.clone(), s)).collect(),
            darts: self.darts.iter().map(|&d| g.dart(d).name.clone()).collect(),
        }
    }
}

/// For every dart, the dart it is joined to at its tail.
fn joins(g: &RotationGraph, splitting: &[u8]) -> Vec<DartId> {
    let mut out = vec![DartId(0); g.num_darts()];
    for (v, vertex) in g.vertices().iter().enumerate() {
        let r = &vertex.rotation;
        let k = splitting[v] as usize;
        for (a, b) in [(k + 1, k + 2), (k + 3, k)] {
            out[r[a % 4].0] = r[b % 4];
            out[r[b % 4].0] = r[a % 4];
        }
    }
    out
}

/// The closed curves of a splitting, each as outgoing darts.
pub fn splitting_loops(g: &RotationGraph, splitting: &[u8]) -> Vec<Vec<DartId>> {
    let join = joins(g, splitting);
    let mut seen = vec![false; g.num_darts()];
    let mut loops = Vec::new();
    for start in 0..g.num_darts() {
        if seen[start] {
            continue;
        }
        let mut curve = Vec::new();
        let mut d = DartId(start);
        while !seen[d.0] {
            seen[d.0] = true;
            let arrive = g.twin(d);
            seen[arrive.0] = true;
            curve.push(d);
            d = join[arrive.0];
        }
        loops.push(curve);
    }
    loops
}

pub fn state_to_trail(u: &Universe, s: &UniverseState) -> Result<Trail> {
    let splitting = s.splitting();
    let mut loops = splitting_loops(&u.graph, &splitting);
    if loops.len() != 1 {
        return Err(Error::NotSingleLoop(loops.len()));
    }
    Ok(Trail { splitting, darts: loops.remove(0) })
}

/// Every splitting with a single loop, by exhaustion over `2^V` cases.
pub fn splitting_oracle(u: &Universe, cap: u64) -> Result<Vec<Vec<u8>>> {
    let n = u.graph.num_vertices();
    check_cap("splittings", &(BigInt::from(1) << n), cap)?;
    let mut out: Vec<Vec<u8>> = (0..1u64 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let s: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
            (splitting_loops(&u.graph, &s).len() == 1).then_some(s)
        })
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Clockwise,
    Counterclockwise,
}

impl Direction {
    pub fn reverse(self) -> Self {
        match self {
            Direction::Clockwise => Direction::Counterclockwise,
            Direction::Counterclockwise => Direction::Clockwise,
        }
    }
}

/// Swaps of two markers between two regions `R1`, `R2` that both vertices
/// touch in adjacent quadrants. Both markers must turn the same way; that
/// common turn is the direction.
pub fn transpositions(u: &Universe, s: &UniverseState) -> Vec<(UniverseState, Direction)> {
    let n = u.graph.num_vertices();
    let face = |v: usize, q: usize| u.quadrant_face(VertexId(v), q);
    let mut out = BTreeSet::new();
    for v in 0..n {
        let qv = s.markers[v] as usize;
        let r1 = face(v, qv);
        for (step_v, nv) in [(1, (qv + 1) % 4), (3, (qv + 3) % 4)] {
            let r2 = face(v, nv);
            if r2 == r1 || u.is_starred(r2) {
                continue;
            }
            for w in 0..n {
                let qw = s.markers[w] as usize;
                if w == v || face(w, qw) != r2 {
                    continue;
                }
                for (step_w, nw) in [(1, (qw + 1) % 4), (3, (qw + 3) % 4)] {
                    if face(w, nw) != r1 || step_w != step_v {
                        continue;
                    }
                    let mut next = s.clone();
                    next.markers[v] = nv as u8;
                    next.markers[w] = nw as u8;
                    let dir = if step_v == 1 { Direction::Counterclockwise } else { Direction::Clockwise };
                    out.insert((next, dir));
                }
            }
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClockReport {
    pub states: usize,
    pub arcs: usize,
    pub weakly_connected: bool,
    pub acyclic: bool,
    pub unique_source: bool,
    pub unique_sink: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<bool>,
}

impl ClockReport {
    pub fn pass(&self) -> bool {
        self.weakly_connected && self.acyclic && self.unique_source && self.unique_sink && self.lattice != Some(false)
    }
}

#[derive(Clone, Debug)]
pub struct ClockGraph {
    pub states: Vec<UniverseState>,
    /// Clockwise transpositions as index pairs, sorted.
    pub arcs: Vec<(usize, usize)>,
    pub report: ClockReport,
}

/// States joined by clockwise transpositions. The meet/join check runs when
/// `lattice_limit` admits the state count.
pub fn clock_graph(u: &Universe, cap: u64, lattice_limit: usize) -> Result<ClockGraph> {
    let states = enumerate_states(u, cap)?;
    let index: HashMap<&UniverseState, usize> = states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut arcs: Vec<(usize, usize)> = states
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, s)| {
            transpositions(u, s)
                .into_iter()
                .filter(|(_, d)| *d == Direction::Clockwise)
                .map(|(t, _)| (i, index[&t]))
                .collect::<Vec<_>>()
        })
        .collect();
    arcs.sort();
    arcs.dedup();
    let n = states.len();
    let mut uf = crate::union_find::UnionFind::new(n);
    let mut out_adj = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in &arcs {
        uf.union(a, b);
        out_adj[a].push(b);
        indeg[b] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut remaining = indeg.clone();
    let mut queue: Vec<usize> = (0..n).filter(|&i| remaining[i] == 0).collect();
    while let Some(a) = queue.pop() {
        order.push(a);
        for &b in &out_adj[a] {
            remaining[b] -= 1;
            if remaining[b] == 0 {
                queue.push(b);
            }
        }
    }
    let acyclic = order.len() == n;
    let lattice = (acyclic && n <= lattice_limit).then(|| is_lattice(n, &out_adj, &order));
    let report = ClockReport {
        states: n,
        arcs: arcs.len(),
        weakly_connected: n > 0 && uf.count_sets() == 1,
        acyclic,
        unique_source: indeg.iter().filter(|&&d| d == 0).count() == 1,
        unique_sink: out_adj.iter().filter(|a| a.is_empty()).count() == 1,
        lattice,
    };
    Ok(ClockGraph { states, arcs, report })
}

/// Checks that the reachability order of a DAG has all pairwise meets and
/// joins. `order` is a topological order.
fn is_lattice(n: usize, out_adj: &[Vec<usize>], order: &[usize]) -> bool {
    // below[a][b]: a reaches b
    let mut below = vec![vec![false; n]; n];
    for &a in order.iter().rev() {
        below[a][a] = true;
        for &b in &out_adj[a] {
            let row = below[b].clone();
            for (x, r) in below[a].iter_mut().zip(row) {
                *x |= r;
            }
        }
    }
    let bound = |a: usize, b: usize, up: bool| -> bool {
        let common: Vec<usize> = (0..n).filter(|&c| if up { below[a][c] && below[b][c] } else { below[c][a] && below[c][b] }).collect();
        common.iter().any(|&c| common.iter().all(|&d| if up { below[c][d] } else { below[d][c] }))
    };
    (0..n).all(|a| (a + 1..n).all(|b| bound(a, b, true) && bound(a, b, false)))
}

#[derive(Clone, Debug, Serialize)]
pub struct CorrespondencePair {
    pub state: StateDocument,
    pub configuration: ConfigurationReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceReport {
    pub states: usize,
    pub tight_configurations: usize,
    pub components: usize,
    #[serde(serialize_with = "optional_decimal")]
    pub magic: Option<BigInt>,
    pub bijection_ok: bool,
    pub pairs: Vec<CorrespondencePair>,
}

fn optional_decimal<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl CorrespondenceReport {
    pub fn pass(&self) -> bool {
        self.bijection_ok
            && self.states == self.tight_configurations
            && self.states == self.components
            && self.magic == Some(BigInt::from(self.states))
    }
}

/// The configuration of the dual graph given by the splittings of a state:
/// the disc around each crossing gets the two strands of its splitting.
pub fn state_configuration(u: &Universe, system: &DiscSystem, dual: &RotationGraph, s: &UniverseState) -> Result<Configuration> {
    let g = &u.graph;
    let mut diagrams: Vec<Option<ChordDiagram>> = vec![None; system.discs().len()];
    for (v, vertex) in g.vertices().iter().enumerate() {
        let mut disc = None;
        let mut point = [0usize; 4];
        for (k, &d) in vertex.rotation.iter().enumerate() {
            let name = &g.dart(g.twin(d)).name;
            let dual_dart = dual.dart_id(name).ok_or_else(|| Error::MappingFailure(format!("dart {name} missing from the dual")))?;
            let found = system
                .discs()
                .iter()
                .enumerate()
                .find_map(|(fi, disc)| disc.darts.iter().position(|&x| x == dual_dart).map(|i| (fi, i)))
                .ok_or_else(|| Error::MappingFailure(format!("dart {name} on no disc")))?;
            if disc.is_some_and(|f| f != found.0) {
                return Err(Error::MappingFailure(format!("crossing {} spans several faces", vertex.name)));
            }
            disc = Some(found.0);
            point[k] = found.1;
        }
        let fi = disc.expect("four darts");
        let q = s.markers[v] as usize;
        let pairs = [(point[(q + 1) % 4], point[(q + 2) % 4]), (point[(q + 3) % 4], point[q % 4])];
        let d = ChordDiagram::from_pairs(4, &pairs).map_err(|e| Error::MappingFailure(e.to_string()))?;
        if diagrams[fi].replace(d).is_some() {
            return Err(Error::MappingFailure(format!("face {} used twice", system.discs()[fi].name)));
        }
    }
    let diagrams = diagrams.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| Error::MappingFailure("a face has no crossing".into()))?;
    Ok(Configuration { diagrams })
}

pub fn states_vs_configurations(u: &Universe, cap: u64) -> Result<CorrespondenceReport> {
    let states = enumerate_states(u, cap)?;
    let dual = u.dual_graph();
    let trinity = build_trinity(&dual)?;
    let system = DiscSystem::new(&trinity);
    if system.discs().iter().any(|d| d.n() != 2) {
        return Err(Error::MappingFailure("a face of the dual is not a square".into()));
    }
    let graph = build_configuration_graph(&system, cap)?;
    let magic = magic_number(&trinity, cap).magic();
    let mut hit = vec![false; graph.vertices.len()];
    let mut pairs = Vec::with_capacity(states.len());
    let mut injective = true;
    for s in &states {
        let cfg = state_configuration(u, &system, &dual, s)?;
        let v = graph
            .index_of(&cfg)
            .ok_or_else(|| Error::MappingFailure(format!("state {:?} gives a configuration that is not tight", s.markers)))?;
        injective &= !std::mem::replace(&mut hit[v], true);
        pairs.push(CorrespondencePair { state: s.document(u), configuration: system.report(&cfg) });
    }
    Ok(CorrespondenceReport {
        states: states.len(),
        tight_configurations: graph.vertices.len(),
        components: graph.components,
        magic,
        bijection_ok: injective && hit.iter().all(|&h| h),
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const CAP: u64 = 1_000_000;

    /// Every marker assignment, filtered by the definition.
    fn brute_states(u: &Universe) -> Vec<UniverseState> {
        let n = u.graph().num_vertices();
        let mut out = Vec::new();
        for code in 0..4usize.pow(n as u32) {
            let markers = (0..n).map(|i| ((code >> (2 * i)) & 3) as u8).collect();
            let s = UniverseState { markers };
            if s.is_valid(u) {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn universe_shapes() {
        for (u, v, f) in [(corpus::curl(), 1, 3), (corpus::hopf(), 2, 4), (corpus::figure_eight(), 4, 6)] {
            assert_eq!(u.graph().num_vertices(), v);
            assert_eq!(u.graph().num_faces(), f);
            assert_eq!(u.unstarred_faces(), v);
        }
    }

    #[test]
    fn document_round_trip() {
        let u = corpus::figure_eight();
        let text = serde_json::to_string(&u.to_document()).unwrap();
        assert!(text.contains("\"stars\""));
        let back = parse_universe(&text).unwrap();
        assert_eq!(back.to_document(), u.to_document());
    }

    #[test]
    fn invalid_universes() {
        let c4 = corpus::four_cycle().to_document();
        let doc = UniverseDocument { graph: c4, stars: ["x".into(), "y".into()] };
        assert!(matches!(Universe::from_document(&doc), Err(Error::NotFourRegular(_))));

        let u = corpus::hopf();
        let mut doc = u.to_document();
        let g = u.graph();
        let shares = |a: FaceId, b: FaceId| {
            g.edges().iter().any(|e| {
                let p = [g.face_of(e.darts[0]), g.face_of(e.darts[1])];
                p == [a, b] || p == [b, a]
            })
        };
        // The two lunes meet only at crossings.
        let mut nonadjacent = None;
        for a in 0..g.num_faces() {
            for b in a + 1..g.num_faces() {
                if !shares(FaceId(a), FaceId(b)) {
                    nonadjacent = Some([g.faces()[a].name.clone(), g.faces()[b].name.clone()]);
                }
            }
        }
        doc.stars = nonadjacent.unwrap();
        assert!(matches!(Universe::from_document(&doc), Err(Error::StarsNotAdjacent)));
        doc.stars = [g.faces()[0].name.clone(), g.faces()[0].name.clone()];
        assert!(matches!(Universe::from_document(&doc), Err(Error::StarsNotAdjacent)));
    }

    #[test]
    fn state_counts_match_brute_force() {
        for (name, u) in corpus::builtin_universes() {
            let states = enumerate_states(&u, CAP).unwrap();
            assert_eq!(states, brute_states(&u), "{name}");
        }
        assert_eq!(enumerate_states(&corpus::curl(), CAP).unwrap().len(), 1);
        assert_eq!(enumerate_states(&corpus::hopf(), CAP).unwrap().len(), 2);
        assert_eq!(enumerate_states(&corpus::figure_eight(), CAP).unwrap().len(), 5);
    }

    #[test]
    fn curl_state_is_forced() {
        let u = corpus::curl();
        let states = enumerate_states(&u, CAP).unwrap();
        let f = u.quadrant_face(VertexId(0), states[0].markers[0] as usize);
        assert!(!u.is_starred(f));
        let trail = state_to_trail(&u, &states[0]).unwrap();
        assert_eq!(trail.darts.len(), 2);
        assert!(transpositions(&u, &states[0]).is_empty());
    }

    #[test]
    fn trails_biject_with_single_loop_splittings() {
        for (name, u) in corpus::builtin_universes() {
            let states = enumerate_states(&u, CAP).unwrap();
            let mut trails: Vec<Vec<u8>> = states.iter().map(|s| state_to_trail(&u, s).unwrap().splitting).collect();
            trails.sort();
            let before = trails.len();
            trails.dedup();
            assert_eq!(trails.len(), before, "{name}");
            assert_eq!(trails, splitting_oracle(&u, CAP).unwrap(), "{name}");
            for s in &states {
                let t = state_to_trail(&u, s).unwrap();
                assert_eq!(t.darts.len(), u.graph().num_edges(), "{name}");
            }
        }
    }

    #[test]
    fn wrong_splitting_is_not_a_loop() {
        let u = corpus::curl();
        let s = enumerate_states(&u, CAP).unwrap().remove(0);
        let other = UniverseState { markers: vec![(s.markers[0] + 1) % 4] };
        assert!(matches!(state_to_trail(&u, &other), Err(Error::NotSingleLoop(2))));
    }

    #[test]
    fn hopf_transpositions() {
        let u = corpus::hopf();
        let states = enumerate_states(&u, CAP).unwrap();
        let moves: Vec<_> = states.iter().map(|s| transpositions(&u, s)).collect();
        assert_eq!(moves[0].len(), 1);
        assert_eq!(moves[1].len(), 1);
        assert_eq!(moves[0][0].0, states[1]);
        assert_eq!(moves[1][0].0, states[0]);
        assert_eq!(moves[0][0].1, moves[1][0].1.reverse());
        // Frozen direction labels.
        assert_eq!(states[0].markers, vec![2, 3]);
        assert_eq!(states[1].markers, vec![3, 0]);
        assert_eq!(moves[0][0].1, Direction::Counterclockwise);
    }

    #[test]
    fn transpositions_are_symmetric_and_valid() {
        for (name, u) in corpus::builtin_universes() {
            for s in enumerate_states(&u, CAP).unwrap() {
                for (t, dir) in transpositions(&u, &s) {
                    assert!(t.is_valid(&u), "{name}");
                    assert!(transpositions(&u, &t).contains(&(s.clone(), dir.reverse())), "{name}");
                }
            }
        }
    }

    #[test]
    fn clock_graphs() {
        let curl = clock_graph(&corpus::curl(), CAP, 64).unwrap();
        assert_eq!((curl.report.states, curl.report.arcs), (1, 0));
        let hopf = clock_graph(&corpus::hopf(), CAP, 64).unwrap();
        assert_eq!((hopf.report.states, hopf.report.arcs), (2, 1));
        for (name, u) in corpus::builtin_universes() {
            let c = clock_graph(&u, CAP, 64).unwrap();
            assert!(c.report.pass(), "{name}: {:?}", c.report);
            assert_eq!(c.report.lattice, Some(true));
        }
    }

    #[test]
    fn lattice_check_rejects_a_crown() {
        // Two minima below two maxima has no joins.
        let adj = vec![vec![2, 3], vec![2, 3], vec![], vec![]];
        assert!(!is_lattice(4, &adj, &[0, 1, 2, 3]));
        let chain = vec![vec![1], vec![2], vec![]];
        assert!(is_lattice(3, &chain, &[0, 1, 2]));
    }

    #[test]
    fn dual_graph_shapes() {
        let hopf = corpus::hopf().dual_graph();
        assert!(hopf.is_isomorphic(&corpus::four_cycle(), false));
        let curl = corpus::curl().dual_graph();
        assert!(curl.is_isomorphic(&RotationGraph::from_document(&crate::corpus::path(2)).unwrap(), false));
        let fig8 = corpus::figure_eight().dual_graph();
        assert_eq!((fig8.num_vertices(), fig8.num_edges(), fig8.num_faces()), (6, 8, 4));
        for (name, u) in corpus::builtin_universes() {
            let d = u.dual_graph();
            assert!(d.validate_bipartite_plane().pass(), "{name}");
            assert!(d.faces().iter().all(|f| f.boundary.len() == 4), "{name}");
            let star = d.vertex_id(&u.graph().face(u.stars()[0]).name).unwrap();
            assert_eq!(d.colour(star), Some(Colour::Violet));
        }
    }

    #[test]
    fn states_match_tight_configurations() {
        for (name, u) in corpus::builtin_universes() {
            let r = states_vs_configurations(&u, CAP).unwrap();
            assert!(r.pass(), "{name}: {} {} {:?}", r.states, r.tight_configurations, r.magic);
        }
        let r = states_vs_configurations(&corpus::hopf(), CAP).unwrap();
        assert_eq!((r.states, r.tight_configurations, r.magic), (2, 2, Some(BigInt::from(2))));
    }

    #[test]
    fn state_document_round_trip() {
        let u = corpus::figure_eight();
        for s in enumerate_states(&u, CAP).unwrap() {
            let doc = s.document(&u);
            let text = serde_json::to_string(&doc).unwrap();
            let back: StateDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(UniverseState::from_document(&u, &back).unwrap(), s);
        }
    }
}
