//! Built-in graphs and universes, plus the generated families.
//!
//! Family embeddings are straight-line drawings; rotations come from sorting
//! incident edges by angle.

use crate::error::{schema, Error, Result};
use crate::fkt::{Universe, UniverseDocument};
use crate::plane_graph::{Colour, GraphDocument, RotationGraph, VertexEntry};

pub const FAMILIES: [&str; 5] = ["path", "even_cycle", "theta", "grid", "ladder"];

struct Drawing {
    vertices: Vec<(String, Colour, (f64, f64))>,
    edges: Vec<(String, usize, usize)>,
}

impl Drawing {
    fn new() -> Self {
        Drawing { vertices: Vec::new(), edges: Vec::new() }
    }

    /// Vertices take a `v` or `e` prefix by colour.
    fn vertex(&mut self, label: &str, colour: Colour, at: (f64, f64)) -> usize {
        let prefix = if colour == Colour::Violet { "v" } else { "e" };
        self.vertices.push((format!("{prefix}{label}"), colour, at));
        self.vertices.len() - 1
    }

    fn edge(&mut self, name: String, a: usize, b: usize) {
        self.edges.push((name, a, b));
    }

    fn document(&self) -> GraphDocument {
        let mut incident: Vec<Vec<(f64, String)>> = vec![Vec::new(); self.vertices.len()];
        for (name, a, b) in &self.edges {
            for (from, to, tag) in [(*a, *b, 'a'), (*b, *a, 'b')] {
                let (p, q) = (self.vertices[from].2, self.vertices[to].2);
                let angle = (q.1 - p.1).atan2(q.0 - p.0);
                incident[from].push((angle, format!("{name}{tag}")));
            }
        }
        GraphDocument {
            vertices: self
                .vertices
                .iter()
                .zip(incident)
                .map(|((name, colour, _), mut darts)| {
                    darts.sort_by(|x, y| x.0.total_cmp(&y.0));
                    VertexEntry {
                        id: name.clone(),
                        colour: Some(*colour),
                        rotation: darts.into_iter().map(|(_, d)| d).collect(),
                    }
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|(name, _, _)| crate::plane_graph::EdgeEntry {
                    id: name.clone(),
                    darts: [format!("{name}a"), format!("{name}b")],
                })
                .collect(),
        }
    }
}

fn parity(i: usize) -> Colour {
    if i.is_multiple_of(2) {
        Colour::Violet
    } else {
        Colour::Emerald
    }
}

pub fn path(k: usize) -> GraphDocument {
    let mut d = Drawing::new();
    for i in 0..=k {
        d.vertex(&i.to_string(), parity(i), (i as f64, 0.0));
    }
    for i in 0..k {
        d.edge(format!("s{i}"), i, i + 1);
    }
    d.document()
}

/// Cycle with `2k` edges.
pub fn even_cycle(k: usize) -> GraphDocument {
    let mut d = Drawing::new();
    let m = 2 * k;
    for i in 0..m {
        let t = std::f64::consts::TAU * i as f64 / m as f64;
        d.vertex(&i.to_string(), parity(i), (t.cos(), t.sin()));
    }
    for i in 0..m {
        d.edge(format!("s{i}"), i, (i + 1) % m);
    }
    d.document()
}

/// Two violet poles joined by `k` paths of length two.
pub fn theta(k: usize) -> GraphDocument {
    let mut d = Drawing::new();
    let west = d.vertex("w", Colour::Violet, (-1.0, 0.0));
    let east = d.vertex("o", Colour::Violet, (1.0, 0.0));
    for i in 0..k {
        let m = d.vertex(&i.to_string(), Colour::Emerald, (0.0, i as f64 - (k as f64 - 1.0) / 2.0));
        d.edge(format!("l{i}"), west, m);
        d.edge(format!("r{i}"), m, east);
    }
    d.document()
}

fn lattice(rows: usize, cols: usize) -> GraphDocument {
    let mut d = Drawing::new();
    let at = |i: usize, j: usize| i * cols + j;
    for i in 0..rows {
        for j in 0..cols {
            d.vertex(&format!("{i}_{j}"), parity(i + j), (j as f64, i as f64));
        }
    }
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                d.edge(format!("h{i}_{j}"), at(i, j), at(i, j + 1));
            }
            if i + 1 < rows {
                d.edge(format!("u{i}_{j}"), at(i, j), at(i + 1, j));
            }
        }
    }
    d.document()
}

pub fn grid(k: usize) -> GraphDocument {
    lattice(k, k)
}

/// `k` rungs.
pub fn ladder(k: usize) -> GraphDocument {
    lattice(2, k)
}

/// One instance of a family. `cap` bounds the edge count.
pub fn generate_corpus(family: &str, size: usize, cap: u64) -> Result<Vec<GraphDocument>> {
    let (min, edges) = match family {
        "path" => (1, size),
        "even_cycle" => (2, 2 * size),
        "theta" => (1, 2 * size),
        "grid" => (2, 2 * size * size.saturating_sub(1)),
        "ladder" => (2, (3 * size).saturating_sub(2)),
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    if size < min {
        return Err(schema(format!("{family} needs size at least {min}")));
    }
    if edges as u64 > cap {
        return Err(Error::CapExceeded { what: format!("{family} {size}"), needed: edges.to_string(), cap });
    }
    let doc = match family {
        "path" => path(size),
        "even_cycle" => even_cycle(size),
        "theta" => theta(size),
        "grid" => grid(size),
        _ => ladder(size),
    };
    Ok(vec![doc])
}

fn build(doc: GraphDocument) -> RotationGraph {
    RotationGraph::from_document(&doc).expect("built-in fixture is valid")
}

pub fn single_edge() -> RotationGraph {
    build(path(1))
}

pub fn four_cycle() -> RotationGraph {
    build(even_cycle(2))
}

/// Cycle of length 8: both faces are octagons.
pub fn octagon() -> RotationGraph {
    build(even_cycle(4))
}

/// The 11-edge graph with five violet and four emerald vertices. Edge `k`
/// has darts `kv` at its violet end and `ke` at its emerald end.
pub fn running_example() -> RotationGraph {
    let ends: [(&str, &str); 11] = [
        ("v1", "e1"),
        ("v1", "e2"),
        ("v2", "e2"),
        ("v2", "e3"),
        ("v4", "e0"),
        ("v4", "e1"),
        ("v0", "e3"),
        ("v0", "e1"),
        ("v3", "e3"),
        ("v3", "e0"),
        ("v0", "e0"),
    ];
    let rotations: [(&str, &[usize]); 9] = [
        ("v0", &[11, 7, 8]),
        ("v1", &[1, 2]),
        ("v2", &[3, 4]),
        ("v3", &[10, 9]),
        ("v4", &[5, 6]),
        ("e0", &[11, 5, 10]),
        ("e1", &[6, 8, 1]),
        ("e2", &[2, 3]),
        ("e3", &[4, 7, 9]),
    ];
    let doc = GraphDocument {
        vertices: rotations
            .iter()
            .map(|(name, rot)| {
                let violet = name.starts_with('v');
                let side = if violet { 'v' } else { 'e' };
                for &k in rot.iter() {
                    let end = if violet { ends[k - 1].0 } else { ends[k - 1].1 };
                    assert_eq!(end, *name);
                }
                VertexEntry {
                    id: name.to_string(),
                    colour: Some(if violet { Colour::Violet } else { Colour::Emerald }),
                    rotation: rot.iter().map(|k| format!("{k}{side}")).collect(),
                }
            })
            .collect(),
        edges: (1..=11)
            .map(|k| crate::plane_graph::EdgeEntry { id: k.to_string(), darts: [format!("{k}v"), format!("{k}e")] })
            .collect(),
    };
    build(doc)
}

/// Corpus graphs with at most 12 edges, named.
pub fn builtin_graphs() -> Vec<(String, RotationGraph)> {
    let mut out = vec![
        ("single_edge".to_string(), single_edge()),
        ("four_cycle".to_string(), four_cycle()),
        ("running_example".to_string(), running_example()),
        ("octagon".to_string(), octagon()),
    ];
    for (family, size) in [
        ("path", 3),
        ("path", 6),
        ("even_cycle", 3),
        ("even_cycle", 6),
        ("theta", 3),
        ("theta", 5),
        ("ladder", 3),
        ("ladder", 4),
        ("grid", 3),
    ] {
        let doc = generate_corpus(family, size, u64::MAX).unwrap().remove(0);
        out.push((format!("{family}_{size}"), build(doc)));
    }
    for (name, u) in builtin_universes() {
        out.push((format!("{name}_dual"), u.dual_graph()));
    }
    out
}

fn universe(doc: GraphDocument, star_edge: &str) -> Universe {
    let g = build(doc.clone());
    let e = g.edge_id(star_edge).expect("star edge exists");
    let [a, b] = g.edge(e).darts;
    let stars = [g.face(g.face_of(a)).name.clone(), g.face(g.face_of(b)).name.clone()];
    Universe::from_document(&UniverseDocument { graph: doc, stars }).expect("built-in universe is valid")
}

/// One crossing with two loops. Loop `A` leaves at 135 degrees and returns
/// at 225; loop `B` leaves at 315 and returns at 45. Stars on both sides of
/// `A`.
pub fn curl() -> Universe {
    let doc = GraphDocument::from_parts(&[("x", None, &["B1", "A0", "A1", "B0"])], &[("A", "A0", "A1"), ("B", "B0", "B1")]);
    universe(doc, "A")
}

/// Two crossings `t` (top) and `u` (bottom) joined by four edges. Stars on
/// both sides of `c1L`.
pub fn hopf() -> Universe {
    let doc = GraphDocument::from_parts(
        &[("t", None, &["c2Rt", "c1Lt", "c2Lt", "c1Rt"]), ("u", None, &["c1Ru", "c2Lu", "c1Lu", "c2Ru"])],
        &[("c1L", "c1Lt", "c1Lu"), ("c1R", "c1Rt", "c1Ru"), ("c2L", "c2Lt", "c2Lu"), ("c2R", "c2Rt", "c2Ru")],
    );
    universe(doc, "c1L")
}

/// Four crossings `b`, `r`, `l`, `m` and eight segments. Stars on both sides
/// of `s1`.
pub fn figure_eight() -> Universe {
    let segments = [
        ("s1", "b", "r"),
        ("s2", "r", "l"),
        ("s3", "l", "b"),
        ("s4", "b", "m"),
        ("s5", "m", "l"),
        ("s6", "l", "r"),
        ("s7", "r", "m"),
        ("s8", "m", "b"),
    ];
    let rotations = [
        ("b", ["s4", "s8", "s3", "s1"]),
        ("r", ["s6", "s2", "s7", "s1"]),
        ("l", ["s2", "s6", "s3", "s5"]),
        ("m", ["s7", "s5", "s8", "s4"]),
    ];
    let doc = GraphDocument {
        vertices: rotations
            .iter()
            .map(|(v, rot)| VertexEntry {
                id: v.to_string(),
                colour: None,
                rotation: rot.iter().map(|s| format!("{s}{v}")).collect(),
            })
            .collect(),
        edges: segments
            .iter()
            .map(|(s, a, b)| crate::plane_graph::EdgeEntry { id: s.to_string(), darts: [format!("{s}{a}"), format!("{s}{b}")] })
            .collect(),
    };
    universe(doc, "s1")
}

pub fn builtin_universes() -> Vec<(String, Universe)> {
    vec![("curl".to_string(), curl()), ("hopf".to_string(), hopf()), ("figure_eight".to_string(), figure_eight())]
}
