//! The trinity of a plane bipartite graph `G`: violet and emerald vertices
//! from `G`, one red vertex per face, and the triangulation they span.
//!
//! Triangles are in bijection with the darts of `G`. The dart `x -> y` with
//! face `r` on its left gives the triangle `(x, y, r)`; it is white when `x`
//! is violet and black when `x` is emerald. The corner edge of a dart `d`
//! joins `tail(d)` to the face on the left of `d`, and is named `c:<d>`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::plane_graph::{Colour, DartId, EdgeEntry, FaceId, GraphDocument, RotationGraph, VertexEntry, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shade {
    Black,
    White,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub violet: String,
    pub emerald: String,
    pub red: String,
    pub shade: Shade,
}

#[derive(Clone, Debug)]
pub struct Trinity {
    base: RotationGraph,
    triangulation: RotationGraph,
    edge_colours: Vec<Colour>,
    red_names: Vec<String>,
    triangles: Vec<Triangle>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualArc {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// Directed planar dual of one colour graph, arcs running from the black
/// triangle to the white one.
#[derive(Clone, Debug)]
pub struct DirectedDual {
    pub colour: Colour,
    /// Sorted by id.
    pub vertices: Vec<String>,
    /// Sorted by id.
    pub arcs: Vec<DualArc>,
}

impl DirectedDual {
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for a in &self.arcs {
            deg[a.head] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for a in &self.arcs {
            deg[a.tail] += 1;
        }
        deg
    }

    pub fn is_balanced(&self) -> bool {
        self.in_degrees() == self.out_degrees()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    #[serde(rename = "V")]
    pub violet: usize,
    #[serde(rename = "E")]
    pub emerald: usize,
    #[serde(rename = "R")]
    pub red: usize,
    pub n: usize,
    pub n_r: BTreeMap<String, usize>,
    pub euler_ok: bool,
}

fn corner_edge(d: &str) -> String {
    format!("c:{d}")
}

pub fn build_trinity(graph: &RotationGraph) -> Result<Trinity> {
    let base = graph.bipartite_colouring()?;

    let mut taken: std::collections::HashSet<String> = base.vertices().iter().map(|v| v.name.clone()).collect();
    let red_names: Vec<String> = base
        .faces()
        .iter()
        .map(|f| {
            let mut name = f.name.clone();
            while taken.contains(&name) {
                name.push('\'');
            }
            taken.insert(name.clone());
            name
        })
        .collect();

    let dart_name = |d: DartId| base.dart(d).name.as_str();
    let mut vertices: Vec<VertexEntry> = base
        .vertices()
        .iter()
        .map(|v| VertexEntry {
            id: v.name.clone(),
            colour: v.colour,
            rotation: v
                .rotation
                .iter()
                .flat_map(|&d| [dart_name(d).to_string(), format!("{}/g", corner_edge(dart_name(d)))])
                .collect(),
        })
        .collect();
    for (fi, f) in base.faces().iter().enumerate() {
        vertices.push(VertexEntry {
            id: red_names[fi].clone(),
            colour: Some(Colour::Red),
            rotation: f.boundary.iter().map(|&d| format!("{}/r", corner_edge(dart_name(d)))).collect(),
        });
    }
    let mut edges = base.to_document().edges;
    let mut edge_colours = vec![Colour::Red; edges.len()];
    for (di, d) in base.darts().iter().enumerate() {
        let c = corner_edge(&d.name);
        edges.push(EdgeEntry { id: c.clone(), darts: [format!("{c}/g"), format!("{c}/r")] });
        edge_colours.push(match base.colour(base.tail(DartId(di))) {
            Some(Colour::Emerald) => Colour::Violet,
            _ => Colour::Emerald,
        });
    }
    let triangulation = RotationGraph::from_document(&GraphDocument { vertices, edges })?;

    let triangles = (0..base.num_darts())
        .map(|di| {
            let d = DartId(di);
            let (x, y) = (base.tail(d), base.head(d));
            let red = red_names[base.face_of(d).0].clone();
            let name = |v: VertexId| base.vertex(v).name.clone();
            if base.colour(x) == Some(Colour::Violet) {
                Triangle { violet: name(x), emerald: name(y), red, shade: Shade::White }
            } else {
                Triangle { violet: name(y), emerald: name(x), red, shade: Shade::Black }
            }
        })
        .collect();

    Ok(Trinity { base, triangulation, edge_colours, red_names, triangles })
}

impl Trinity {
    /// `G` itself, with colours.
    pub fn base(&self) -> &RotationGraph {
        &self.base
    }

    pub fn triangulation(&self) -> &RotationGraph {
        &self.triangulation
    }

    /// One triangle per dart of `G`, in dart order.
    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn n(&self) -> usize {
        self.base.num_edges()
    }

    pub fn red_name(&self, f: FaceId) -> &str {
        &self.red_names[f.0]
    }

    pub fn red_names(&self) -> &[String] {
        &self.red_names
    }

    /// Ids of one vertex class, sorted.
    pub fn class(&self, colour: Colour) -> Vec<String> {
        let mut names: Vec<String> = match colour {
            Colour::Red => self.red_names.clone(),
            c => self.base.vertices().iter().filter(|v| v.colour == Some(c)).map(|v| v.name.clone()).collect(),
        };
        names.sort();
        names
    }

    /// Colour of a triangulation edge.
    pub fn edge_colour(&self, e: crate::plane_graph::EdgeId) -> Colour {
        self.edge_colours[e.0]
    }

    pub fn census(&self) -> Census {
        let n_r: BTreeMap<String, usize> =
            self.base.faces().iter().enumerate().map(|(i, f)| (self.red_names[i].clone(), f.half_len())).collect();
        let violet = self.class(Colour::Violet).len();
        let emerald = self.class(Colour::Emerald).len();
        let red = self.red_names.len();
        let n = self.n();
        let euler_ok = violet + emerald + red == n + 2 && n_r.values().sum::<usize>() == n;
        Census { violet, emerald, red, n, n_r, euler_ok }
    }

    /// `G_V`, `G_E` or `G_R` as a sub-map of the triangulation.
    pub fn colour_graph(&self, colour: Colour) -> RotationGraph {
        self.triangulation
            .subgraph(|e| self.edge_colours[e.0] == colour)
            .expect("colour graphs of a trinity are connected")
    }

    pub fn directed_dual(&self, colour: Colour) -> DirectedDual {
        let g = &self.base;
        let vertices = self.class(colour);
        let index = |name: &str| vertices.binary_search_by(|v| v.as_str().cmp(name)).unwrap();
        let vname = |v: VertexId| g.vertex(v).name.as_str();
        let mut arcs = Vec::with_capacity(self.n());
        match colour {
            Colour::Red => {
                for e in g.edges() {
                    let [a, b] = e.darts;
                    let (from_e, from_v) = if g.colour(g.tail(a)) == Some(Colour::Emerald) { (a, b) } else { (b, a) };
                    arcs.push(DualArc {
                        id: e.name.clone(),
                        tail: index(&self.red_names[g.face_of(from_e).0]),
                        head: index(&self.red_names[g.face_of(from_v).0]),
                    });
                }
            }
            c => {
                // Corners at the vertices of the other G colour.
                let at = if c == Colour::Violet { Colour::Emerald } else { Colour::Violet };
                for di in 0..g.num_darts() {
                    let d = DartId(di);
                    if g.colour(g.tail(d)) != Some(at) {
                        continue;
                    }
                    let (here, next) = (index(vname(g.head(d))), index(vname(g.head(g.rot_succ(d)))));
                    let (tail, head) = if c == Colour::Violet { (here, next) } else { (next, here) };
                    arcs.push(DualArc { id: corner_edge(&g.dart(d).name), tail, head });
                }
            }
        }
        arcs.sort_by(|a, b| a.id.cmp(&b.id));
        DirectedDual { colour, vertices, arcs }
    }
}
