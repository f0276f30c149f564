//! Plane multigraphs encoded as rotation systems.
//!
//! Every vertex lists its darts in counterclockwise order. Faces are traced
//! with the face on the left: from a dart `u -> w` the walk continues with
//! the rotation predecessor of its twin at `w`. A face is named `f:<dart>`
//! after the smallest dart id on its boundary, and its boundary list starts
//! at that dart.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{schema, Error, Result};
use crate::union_find::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Violet,
    Emerald,
    Red,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::Violet, Colour::Emerald, Colour::Red];

    pub fn name(self) -> &'static str {
        match self {
            Colour::Violet => "violet",
            Colour::Emerald => "emerald",
            Colour::Red => "red",
        }
    }

    pub fn letter(self) -> char {
        match self {
            Colour::Violet => 'V',
            Colour::Emerald => 'E',
            Colour::Red => 'R',
        }
    }

    /// The next colour in the cyclic order violet, emerald, red.
    pub fn next(self) -> Colour {
        match self {
            Colour::Violet => Colour::Emerald,
            Colour::Emerald => Colour::Red,
            Colour::Red => Colour::Violet,
        }
    }

    pub fn prev(self) -> Colour {
        self.next().next()
    }

    pub fn parse(s: &str) -> Option<Colour> {
        match s {
            "violet" | "V" => Some(Colour::Violet),
            "emerald" | "E" => Some(Colour::Emerald),
            "red" | "R" => Some(Colour::Red),
            _ => None,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

macro_rules! index_type {
    ($name:ident) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub usize);

        impl $name {
            pub fn index(self) -> usize {
                self.0
            }
        }
    };
}

index_type!(VertexId);
index_type!(EdgeId);
index_type!(DartId);
index_type!(FaceId);

#[derive(Clone, Debug)]
pub struct Vertex {
    pub name: String,
    pub colour: Option<Colour>,
    pub rotation: Vec<DartId>,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub name: String,
    pub darts: [DartId; 2],
}

#[derive(Clone, Debug)]
pub struct Dart {
    pub name: String,
    pub vertex: VertexId,
    pub edge: EdgeId,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub name: String,
    pub boundary: Vec<DartId>,
}

impl Face {
    /// Half the boundary length.
    pub fn half_len(&self) -> usize {
        self.boundary.len() / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: String,
    #[serde(default)]
    pub colour: Option<Colour>,
    pub rotation: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub id: String,
    pub darts: [String; 2],
}

impl GraphDocument {
    /// Shorthand for fixtures: `(id, colour, rotation)` and `(id, dart, dart)`.
    pub fn from_parts(vertices: &[(&str, Option<Colour>, &[&str])], edges: &[(&str, &str, &str)]) -> Self {
        GraphDocument {
            vertices: vertices
                .iter()
                .map(|(id, colour, rot)| VertexEntry {
                    id: id.to_string(),
                    colour: *colour,
                    rotation: rot.iter().map(|s| s.to_string()).collect(),
                })
                .collect(),
            edges: edges
                .iter()
                .map(|(id, a, b)| EdgeEntry { id: id.to_string(), darts: [a.to_string(), b.to_string()] })
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RotationGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    darts: Vec<Dart>,
    faces: Vec<Face>,
    dart_pos: Vec<usize>,
    dart_face: Vec<FaceId>,
    vertex_names: HashMap<String, VertexId>,
    edge_names: HashMap<String, EdgeId>,
    dart_names: HashMap<String, DartId>,
    face_names: HashMap<String, FaceId>,
}

pub fn parse_graph(text: &str) -> Result<RotationGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    RotationGraph::from_document(&doc)
}

impl RotationGraph {
    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let mut vertex_names = HashMap::new();
        let mut dart_names = HashMap::new();
        let mut vertices = Vec::with_capacity(doc.vertices.len());
        let mut darts: Vec<Dart> = Vec::new();
        for (vi, entry) in doc.vertices.iter().enumerate() {
            if vertex_names.insert(entry.id.clone(), VertexId(vi)).is_some() {
                return Err(schema(format!("duplicate vertex id {}", entry.id)));
            }
            let mut rotation = Vec::with_capacity(entry.rotation.len());
            for name in &entry.rotation {
                let d = DartId(darts.len());
                if dart_names.insert(name.clone(), d).is_some() {
                    return Err(schema(format!("dart {name} appears in more than one rotation slot")));
                }
                darts.push(Dart { name: name.clone(), vertex: VertexId(vi), edge: EdgeId(usize::MAX) });
                rotation.push(d);
            }
            vertices.push(Vertex { name: entry.id.clone(), colour: entry.colour, rotation });
        }

        let mut edge_names = HashMap::new();
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (ei, entry) in doc.edges.iter().enumerate() {
            if edge_names.insert(entry.id.clone(), EdgeId(ei)).is_some() {
                return Err(schema(format!("duplicate edge id {}", entry.id)));
            }
            if entry.darts[0] == entry.darts[1] {
                return Err(schema(format!("edge {} uses dart {} twice", entry.id, entry.darts[0])));
            }
            let mut pair = [DartId(0); 2];
            for (k, name) in entry.darts.iter().enumerate() {
                let d = *dart_names
                    .get(name)
                    .ok_or_else(|| schema(format!("edge {} refers to unknown dart {name}", entry.id)))?;
                if darts[d.0].edge.0 != usize::MAX {
                    return Err(schema(format!("dart {name} belongs to two edges")));
                }
                darts[d.0].edge = EdgeId(ei);
                pair[k] = d;
            }
            edges.push(Edge { name: entry.id.clone(), darts: pair });
        }
        if let Some(d) = darts.iter().find(|d| d.edge.0 == usize::MAX) {
            return Err(schema(format!("dart {} belongs to no edge", d.name)));
        }
        if edges.is_empty() {
            return Err(schema("graph has no edges"));
        }

        let mut uf = UnionFind::new(vertices.len());
        for e in &edges {
            uf.union(darts[e.darts[0].0].vertex.0, darts[e.darts[1].0].vertex.0);
        }
        if uf.count_sets() != 1 {
            return Err(Error::NotConnected);
        }

        let mut dart_pos = vec![0; darts.len()];
        for v in &vertices {
            for (i, d) in v.rotation.iter().enumerate() {
                dart_pos[d.0] = i;
            }
        }

        let mut g = RotationGraph {
            vertices,
            edges,
            darts,
            faces: Vec::new(),
            dart_pos,
            dart_face: Vec::new(),
            vertex_names,
            edge_names,
            dart_names,
            face_names: HashMap::new(),
        };
        g.trace_faces();
        let chi = g.vertices.len() as i64 - g.edges.len() as i64 + g.faces.len() as i64;
        if chi != 2 {
            return Err(Error::NotPlanarConsistent(chi));
        }
        Ok(g)
    }

    fn trace_faces(&mut self) {
        let n = self.darts.len();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = DartId(start);
            while !seen[d.0] {
                seen[d.0] = true;
                cycle.push(d);
                d = self.face_next(d);
            }
            let (min_at, _) = cycle
                .iter()
                .enumerate()
                .min_by(|a, b| self.darts[a.1 .0].name.cmp(&self.darts[b.1 .0].name))
                .unwrap();
            cycle.rotate_left(min_at);
            let name = format!("f:{}", self.darts[cycle[0].0].name);
            faces.push(Face { name, boundary: cycle });
        }
        faces.sort_by(|a, b| a.name.cmp(&b.name));
        let mut dart_face = vec![FaceId(0); n];
        let mut face_names = HashMap::new();
        for (fi, f) in faces.iter().enumerate() {
            for d in &f.boundary {
                dart_face[d.0] = FaceId(fi);
            }
            face_names.insert(f.name.clone(), FaceId(fi));
        }
        self.faces = faces;
        self.dart_face = dart_face;
        self.face_names = face_names;
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexEntry {
                    id: v.name.clone(),
                    colour: v.colour,
                    rotation: v.rotation.iter().map(|d| self.darts[d.0].name.clone()).collect(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeEntry {
                    id: e.name.clone(),
                    darts: [self.darts[e.darts[0].0].name.clone(), self.darts[e.darts[1].0].name.clone()],
                })
                .collect(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_darts(&self) -> usize {
        self.darts.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn dart(&self, d: DartId) -> &Dart {
        &self.darts[d.0]
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.0]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.get(name).copied()
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edge_names.get(name).copied()
    }

    pub fn dart_id(&self, name: &str) -> Option<DartId> {
        self.dart_names.get(name).copied()
    }

    pub fn face_id(&self, name: &str) -> Option<FaceId> {
        self.face_names.get(name).copied()
    }

    pub fn colour(&self, v: VertexId) -> Option<Colour> {
        self.vertices[v.0].colour
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v.0].rotation.len()
    }

    pub fn twin(&self, d: DartId) -> DartId {
        let e = &self.edges[self.darts[d.0].edge.0];
        if e.darts[0] == d {
            e.darts[1]
        } else {
            e.darts[0]
        }
    }

    pub fn tail(&self, d: DartId) -> VertexId {
        self.darts[d.0].vertex
    }

    pub fn head(&self, d: DartId) -> VertexId {
        self.darts[self.twin(d).0].vertex
    }

    /// Endpoints of an edge, in the order of its dart pair.
    pub fn ends(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [a, b] = self.edges[e.0].darts;
        (self.darts[a.0].vertex, self.darts[b.0].vertex)
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.ends(e);
        a == b
    }

    /// Position of `d` in the rotation of its vertex.
    pub fn rotation_index(&self, d: DartId) -> usize {
        self.dart_pos[d.0]
    }

    /// Next dart counterclockwise around the tail of `d`.
    pub fn rot_succ(&self, d: DartId) -> DartId {
        let rot = &self.vertices[self.darts[d.0].vertex.0].rotation;
        rot[(self.dart_pos[d.0] + 1) % rot.len()]
    }

    pub fn rot_pred(&self, d: DartId) -> DartId {
        let rot = &self.vertices[self.darts[d.0].vertex.0].rotation;
        rot[(self.dart_pos[d.0] + rot.len() - 1) % rot.len()]
    }

    /// The dart after `d` on the face to the left of `d`.
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_pred(self.twin(d))
    }

    /// The face on the left of `d`. This face also contains the corner at
    /// the tail of `d` between `d` and `rot_succ(d)`.
    pub fn face_of(&self, d: DartId) -> FaceId {
        self.dart_face[d.0]
    }

    pub fn with_colours(&self, colour: impl Fn(VertexId) -> Option<Colour>) -> RotationGraph {
        let mut g = self.clone();
        for (i, v) in g.vertices.iter_mut().enumerate() {
            v.colour = colour(VertexId(i));
        }
        g
    }

    /// The subgraph on the kept edges, dropping vertices left without darts.
    pub fn subgraph(&self, keep: impl Fn(EdgeId) -> bool) -> Result<RotationGraph> {
        let mut doc = self.to_document();
        let kept: Vec<bool> = (0..self.edges.len()).map(|e| keep(EdgeId(e))).collect();
        doc.edges = doc.edges.into_iter().enumerate().filter(|(i, _)| kept[*i]).map(|(_, e)| e).collect();
        for (vi, v) in doc.vertices.iter_mut().enumerate() {
            v.rotation = self.vertices[vi]
                .rotation
                .iter()
                .filter(|d| kept[self.darts[d.0].edge.0])
                .map(|d| self.darts[d.0].name.clone())
                .collect();
        }
        doc.vertices.retain(|v| !v.rotation.is_empty());
        RotationGraph::from_document(&doc)
    }

    /// One vertex per face named by the face id; dual darts and edges keep
    /// the primal ids. The rotation at a face vertex follows its boundary.
    pub fn planar_dual(&self) -> RotationGraph {
        let doc = GraphDocument {
            vertices: self
                .faces
                .iter()
                .map(|f| VertexEntry {
                    id: f.name.clone(),
                    colour: None,
                    rotation: f.boundary.iter().map(|d| self.darts[d.0].name.clone()).collect(),
                })
                .collect(),
            edges: self.to_document().edges,
        };
        RotationGraph::from_document(&doc).expect("dual of a valid plane graph is valid")
    }

    pub fn validate_bipartite_plane(&self) -> BipartiteReport {
        let mut problems = Vec::new();
        let loops: Vec<&str> = (0..self.edges.len())
            .filter(|&e| self.is_loop(EdgeId(e)))
            .map(|e| self.edges[e].name.as_str())
            .collect();
        if !loops.is_empty() {
            problems.push(format!("loop edges: {}", loops.join(", ")));
        }

        let given: Vec<Option<Colour>> = self.vertices.iter().map(|v| v.colour).collect();
        let source;
        let mut colours = vec![None; self.vertices.len()];
        if given.iter().all(Option::is_some) {
            source = ColouringSource::Given;
            for (i, c) in given.iter().enumerate() {
                match c {
                    Some(c @ (Colour::Violet | Colour::Emerald)) => colours[i] = Some(*c),
                    Some(c) => problems.push(format!("vertex {} has colour {c}", self.vertices[i].name)),
                    None => unreachable!(),
                }
            }
            for e in &self.edges {
                let (a, b) = (self.darts[e.darts[0].0].vertex, self.darts[e.darts[1].0].vertex);
                if a != b && colours[a.0].is_some() && colours[a.0] == colours[b.0] {
                    problems.push(format!("edge {} joins two {} vertices", e.name, colours[a.0].unwrap()));
                }
            }
        } else if given.iter().all(Option::is_none) {
            source = ColouringSource::Computed;
            if let Err(cycle) = self.two_colour(&mut colours) {
                problems.push(format!("odd cycle: {}", cycle.join(" - ")));
            }
        } else {
            source = ColouringSource::Computed;
            problems.push("only some vertices are coloured".to_string());
        }

        let proper = problems.iter().all(|p| p.starts_with("loop"));
        let class_sizes = proper.then(|| {
            let v = colours.iter().filter(|c| **c == Some(Colour::Violet)).count();
            (v, colours.len() - v)
        });
        BipartiteReport {
            connected: true,
            loop_free: loops.is_empty(),
            colouring: source,
            proper_colouring: proper,
            class_sizes,
            colours: if problems.is_empty() { colours.into_iter().map(Option::unwrap).collect() } else { Vec::new() },
            problems,
        }
    }

    fn two_colour(&self, colours: &mut [Option<Colour>]) -> std::result::Result<(), Vec<String>> {
        let n = self.vertices.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        colours[0] = Some(Colour::Violet);
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &d in &self.vertices[u].rotation {
                let w = self.head(d).0;
                match colours[w] {
                    None => {
                        colours[w] = Some(if colours[u] == Some(Colour::Violet) { Colour::Emerald } else { Colour::Violet });
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(c) if Some(c) == colours[u] && w != u => {
                        let (mut a, mut b) = (u, w);
                        let (mut left, mut right) = (vec![a], vec![b]);
                        while a != b {
                            if depth[a] >= depth[b] {
                                a = parent[a];
                                left.push(a);
                            } else {
                                b = parent[b];
                                right.push(b);
                            }
                        }
                        right.pop();
                        left.extend(right.into_iter().rev());
                        return Err(left.into_iter().map(|i| self.vertices[i].name.clone()).collect());
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// A copy with violet/emerald colours, given or computed.
    pub fn bipartite_colouring(&self) -> Result<RotationGraph> {
        let report = self.validate_bipartite_plane();
        if !report.pass() {
            return Err(Error::NotBipartite(report.problems.join("; ")));
        }
        Ok(self.with_colours(|v| Some(report.colours[v.0])))
    }

    /// Lexicographically smallest BFS dart labelling over all start darts.
    /// Two connected maps are orientation-preservingly isomorphic (with
    /// colours, when `colours` is set) iff their codes are equal.
    pub fn canonical_code(&self, colours: bool) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for start in 0..self.darts.len() {
            let code = self.code_from(DartId(start), colours);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap_or_default()
    }

    fn code_from(&self, start: DartId, colours: bool) -> Vec<usize> {
        let n = self.darts.len();
        let mut label = vec![usize::MAX; n];
        let mut order = vec![start];
        label[start.0] = 0;
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for nb in [self.twin(d), self.rot_succ(d)] {
                if label[nb.0] == usize::MAX {
                    label[nb.0] = order.len();
                    order.push(nb);
                }
            }
            i += 1;
        }
        let mut code = Vec::with_capacity(3 * n);
        for d in order {
            code.push(label[self.twin(d).0]);
            code.push(label[self.rot_succ(d).0]);
            if colours {
                code.push(match self.colour(self.tail(d)) {
                    None => 0,
                    Some(Colour::Violet) => 1,
                    Some(Colour::Emerald) => 2,
                    Some(Colour::Red) => 3,
                });
            }
        }
        code
    }

    pub fn is_isomorphic(&self, other: &RotationGraph, colours: bool) -> bool {
        self.num_vertices() == other.num_vertices()
            && self.num_edges() == other.num_edges()
            && self.canonical_code(colours) == other.canonical_code(colours)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ColouringSource {
    Given,
    Computed,
}

#[derive(Clone, Debug, Serialize)]
pub struct BipartiteReport {
    pub connected: bool,
    pub loop_free: bool,
    pub colouring: ColouringSource,
    pub proper_colouring: bool,
    /// Sizes of the violet and emerald classes.
    pub class_sizes: Option<(usize, usize)>,
    #[serde(skip)]
    pub colours: Vec<Colour>,
    pub problems: Vec<String>,
}

impl BipartiteReport {
    pub fn pass(&self) -> bool {
        self.connected && self.loop_free && self.proper_colouring
    }
}
