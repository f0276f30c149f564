//! Bypass moves, the configuration graph of tight configurations and its
//! classification by hypertrees.
//!
//! Two tight configurations are adjacent when they differ on exactly one
//! disc. Bypass moves are only used to walk towards tree-hugging
//! configurations and to cross-check the components.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::dividing::{is_non_crossing, ChordDiagram, Configuration, ConfigurationReport, DiscSystem, TreeHugging};
use crate::error::{Error, Result};
use crate::hypertrees::HypertreeSet;
use crate::trees::{check_cap, SpanningTree};
use crate::union_find::UnionFind;

/// The three pairwise-parallel matchings of six cyclic points. Shifting
/// every index by one maps each pattern to the next.
const LINEAR: [[(usize, usize); 3]; 3] = [[(0, 5), (1, 4), (2, 3)], [(0, 1), (2, 5), (3, 4)], [(0, 3), (1, 2), (4, 5)]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rotation {
    Forward,
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BypassMove {
    /// The six endpoints, increasing.
    pub points: [usize; 6],
    pub before: [(usize, usize); 3],
    pub after: [(usize, usize); 3],
    pub direction: Rotation,
    pub result: ChordDiagram,
}

fn pattern_of(points: &[usize; 6], d: &ChordDiagram) -> [(usize, usize); 3] {
    let local = |p: usize| points.iter().position(|&q| q == p).unwrap();
    let mut out = [(0, 0); 3];
    let mut k = 0;
    for (a, &p) in points.iter().enumerate() {
        let b = local(d.partner(p));
        if a < b {
            out[k] = (a, b);
            k += 1;
        }
    }
    out
}

fn normalise(mut pattern: [(usize, usize); 3]) -> [(usize, usize); 3] {
    for p in &mut pattern {
        if p.0 > p.1 {
            *p = (p.1, p.0);
        }
    }
    pattern.sort();
    pattern
}

/// Every re-matching of three chords by one hexagon click, kept when the
/// whole diagram stays non-crossing.
pub fn bypass_move_details(d: &ChordDiagram) -> Vec<BypassMove> {
    let chords = d.pairs();
    let mut out = Vec::new();
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            for k in j + 1..chords.len() {
                let mut points = [
                    chords[i].0, chords[i].1, chords[j].0, chords[j].1, chords[k].0, chords[k].1,
                ];
                points.sort();
                let before = normalise(pattern_of(&points, d));
                let Some(at) = LINEAR.iter().position(|p| normalise(*p) == before) else {
                    continue;
                };
                for (direction, step) in [(Rotation::Forward, 1), (Rotation::Backward, 2)] {
                    let after = normalise(LINEAR[(at + step) % 3]);
                    let mut partner = d.partners().to_vec();
                    for &(a, b) in &after {
                        partner[points[a]] = points[b];
                        partner[points[b]] = points[a];
                    }
                    if is_non_crossing(&partner) {
                        let result = ChordDiagram::from_partner(partner);
                        out.push(BypassMove { points, before, after, direction, result });
                    }
                }
            }
        }
    }
    out
}

pub fn bypass_moves(d: &ChordDiagram) -> Vec<ChordDiagram> {
    let set: BTreeSet<ChordDiagram> = bypass_move_details(d).into_iter().map(|m| m.result).collect();
    set.into_iter().collect()
}

/// Tight configurations as index vectors into the per-disc diagram lists,
/// in lexicographic order, with their components.
#[derive(Clone, Debug)]
pub struct ConfigurationGraph {
    pub options: Vec<Vec<ChordDiagram>>,
    pub vertices: Vec<Vec<u32>>,
    pub component: Vec<usize>,
    pub components: usize,
    pub edge_count: u64,
    pub total: u64,
}

impl ConfigurationGraph {
    pub fn configuration(&self, v: usize) -> Configuration {
        Configuration {
            diagrams: self.vertices[v].iter().enumerate().map(|(fi, &k)| self.options[fi][k as usize].clone()).collect(),
        }
    }

    pub fn index_of(&self, cfg: &Configuration) -> Option<usize> {
        let key: Option<Vec<u32>> = cfg
            .diagrams
            .iter()
            .enumerate()
            .map(|(fi, d)| self.options.get(fi)?.binary_search(d).ok().map(|k| k as u32))
            .collect();
        self.vertices.binary_search(&key?).ok()
    }

    /// Vertex groups that agree off disc `fi`.
    fn groups(&self, fi: usize) -> Vec<Vec<usize>> {
        let mut by_key: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
        for (v, idx) in self.vertices.iter().enumerate() {
            let mut key = idx.clone();
            key.remove(fi);
            by_key.entry(key).or_default().push(v);
        }
        let mut groups: Vec<Vec<usize>> = by_key.into_values().filter(|g| g.len() > 1).collect();
        groups.sort();
        groups
    }

    /// All edges, materialised. Meant for small graphs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for fi in 0..self.options.len() {
            for group in self.groups(fi) {
                for (i, &a) in group.iter().enumerate() {
                    for &b in &group[i + 1..] {
                        out.push((a, b));
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn component_members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.components];
        for (v, &c) in self.component.iter().enumerate() {
            members[c].push(v);
        }
        members
    }
}

pub fn build_configuration_graph(system: &DiscSystem, cap: u64) -> Result<ConfigurationGraph> {
    let total_big = system.configuration_count();
    check_cap("configurations", &total_big, cap)?;
    let total: u64 = total_big.try_into().expect("under cap");
    let options: Vec<Vec<ChordDiagram>> = system
        .discs()
        .iter()
        .map(|d| crate::dividing::enumerate_chord_diagrams(d.n(), cap))
        .collect::<Result<_>>()?;
    let radix: Vec<u64> = options.iter().map(|o| o.len() as u64).collect();
    let decode = |mut x: u64| -> Vec<u32> {
        let mut idx = vec![0u32; radix.len()];
        for fi in (0..radix.len()).rev() {
            idx[fi] = (x % radix[fi]) as u32;
            x /= radix[fi];
        }
        idx
    };
    let vertices: Vec<Vec<u32>> = (0..total)
        .into_par_iter()
        .filter_map(|x| {
            let idx = decode(x);
            (system.loops_with(|fi| &options[fi][idx[fi] as usize]) == 1).then_some(idx)
        })
        .collect();

    let mut graph = ConfigurationGraph { options, vertices, component: Vec::new(), components: 0, edge_count: 0, total };
    let mut uf = UnionFind::new(graph.vertices.len());
    for fi in 0..graph.options.len() {
        for group in graph.groups(fi) {
            let s = group.len() as u64;
            graph.edge_count += s * (s - 1) / 2;
            for w in group.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    let mut ids: HashMap<usize, usize> = HashMap::new();
    graph.component = (0..graph.vertices.len())
        .map(|v| {
            let root = uf.find(v);
            let next = ids.len();
            *ids.entry(root).or_insert(next)
        })
        .collect();
    graph.components = ids.len();
    Ok(graph)
}

#[derive(Clone, Debug)]
pub struct ComponentLabel {
    pub id: usize,
    pub size: usize,
    pub euler: Vec<i64>,
    /// Indexed like the discs.
    pub hypertree: Vec<usize>,
    pub representative: Configuration,
    pub witness: SpanningTree,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub components: Vec<ComponentLabel>,
    pub bijection_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub id: usize,
    pub size: usize,
    pub euler: BTreeMap<String, i64>,
    pub hypertree: BTreeMap<String, usize>,
    pub tree_hugging_rep: ConfigurationReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub components: Vec<ComponentReport>,
    pub bijection_ok: bool,
}

impl Classification {
    pub fn report(&self, system: &DiscSystem) -> ClassificationReport {
        let names: Vec<String> = system.discs().iter().map(|d| d.name.clone()).collect();
        ClassificationReport {
            components: self
                .components
                .iter()
                .map(|c| ComponentReport {
                    id: c.id,
                    size: c.size,
                    euler: names.iter().cloned().zip(c.euler.iter().copied()).collect(),
                    hypertree: names.iter().cloned().zip(c.hypertree.iter().copied()).collect(),
                    tree_hugging_rep: system.report(&c.representative),
                })
                .collect(),
            bijection_ok: self.bijection_ok,
        }
    }
}

/// Labels each component by its Euler vector, the hypertree
/// `f(r) = (e_r + n_r - 1) / 2`, and a tree-hugging member, then compares
/// the labels with `expected`, the hypertrees of `(E, R)`.
pub fn classify_components(graph: &ConfigurationGraph, system: &DiscSystem, expected: &HypertreeSet) -> Result<Classification> {
    let discs = system.discs();
    let position: Vec<usize> = discs
        .iter()
        .map(|d| expected.hyperedges.iter().position(|h| *h == d.name).ok_or(Error::IndexMismatch))
        .collect::<Result<_>>()?;
    let mut components = Vec::with_capacity(graph.components);
    for (id, members) in graph.component_members().into_iter().enumerate() {
        let euler = system.euler_vector(&graph.configuration(members[0]));
        let mut rep = None;
        for &v in &members {
            let cfg = graph.configuration(v);
            if system.euler_vector(&cfg) != euler {
                return Err(Error::EulerNotConstant(id));
            }
            if rep.is_none() {
                if let TreeHugging::Hugging(w) = system.is_tree_hugging(&cfg)? {
                    rep = Some((cfg, w));
                }
            }
        }
        let (representative, witness) = rep.ok_or(Error::NotTreeHuggingReachable(id))?;
        let hypertree = discs
            .iter()
            .zip(&euler)
            .map(|(d, &e)| {
                let twice = e + d.n() as i64 - 1;
                if twice < 0 || twice % 2 != 0 {
                    return Err(Error::NotBijective(format!("Euler class {e} on {} gives no hypertree value", d.name)));
                }
                Ok((twice / 2) as usize)
            })
            .collect::<Result<Vec<usize>>>()?;
        components.push(ComponentLabel { id, size: members.len(), euler, hypertree, representative, witness });
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut distinct = true;
    for c in &components {
        let mut v = vec![0; c.hypertree.len()];
        for (i, &x) in c.hypertree.iter().enumerate() {
            v[position[i]] = x;
        }
        distinct &= found.insert(v);
    }
    let expected_set: BTreeSet<Vec<usize>> = expected.vectors().cloned().collect();
    Ok(Classification { components, bijection_ok: distinct && found == expected_set })
}

/// From a tight configuration, applies bypass moves disc by disc, each one
/// keeping tightness and raising the largest negative valence on that disc,
/// until every disc has at most one negative region of valence above one.
pub fn valence_concentration_path(system: &DiscSystem, cfg: &Configuration) -> Result<Vec<Configuration>> {
    system.check(cfg)?;
    if !system.is_tight(cfg).tight {
        return Err(Error::NotTight);
    }
    let mut path = vec![cfg.clone()];
    let mut current = cfg.clone();
    for (fi, disc) in system.discs().iter().enumerate() {
        loop {
            let regions = system.signed_regions(fi, &current.diagrams[fi])?;
            if regions.negative().filter(|r| r.valence() > 1).count() <= 1 {
                break;
            }
            let top = regions.max_negative_valence();
            let step = bypass_moves(&current.diagrams[fi]).into_iter().find_map(|d| {
                let mut next = current.clone();
                next.diagrams[fi] = d;
                let raises = system.signed_regions(fi, &next.diagrams[fi]).ok()?.max_negative_valence() > top;
                (raises && system.is_tight(&next).tight).then_some(next)
            });
            match step {
                Some(next) => {
                    path.push(next.clone());
                    current = next;
                }
                None => return Err(Error::Stuck(disc.name.clone())),
            }
        }
    }
    match system.is_tree_hugging(&current) {
        Ok(TreeHugging::Hugging(_)) => Ok(path),
        _ => Err(Error::Stuck("final configuration".to_string())),
    }
}
