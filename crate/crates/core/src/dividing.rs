//! Dividing sets on the face discs, as non-crossing chord diagrams.
//!
//! The `2 n_r` boundary points of face `r` are its boundary darts in trace
//! order, starting at the smallest dart id. Arc `i` runs from point `i` to
//! point `i + 1` and sits at the head of dart `i`. Discs carry the
//! orientation of the projection plane, so violet arcs are positive and
//! emerald arcs negative. Point `d` of one face is glued to point
//! `twin(d)` of the face across the edge.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{schema, Error, Result};
use crate::plane_graph::{Colour, DartId, EdgeId, RotationGraph};
use crate::trees::{check_cap, SpanningTree};
use crate::trinity::Trinity;
use crate::union_find::RollbackUnionFind;

/// A non-crossing perfect matching of `2n` points on a circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    partner: Vec<usize>,
}

impl ChordDiagram {
    pub fn from_pairs(points: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; points];
        for &(a, b) in pairs {
            if a >= points || b >= points || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(schema(format!("bad chord ({a}, {b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(schema("matching is not perfect"));
        }
        if !is_non_crossing(&partner) {
            return Err(schema("chords cross"));
        }
        Ok(ChordDiagram { partner })
    }

    pub(crate) fn from_partner(partner: Vec<usize>) -> Self {
        debug_assert!(is_non_crossing(&partner));
        ChordDiagram { partner }
    }

    pub fn chords(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Chords as `(low, high)`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&i| i < self.partner[i]).map(|i| (i, self.partner[i])).collect()
    }
}

pub(crate) fn is_non_crossing(partner: &[usize]) -> bool {
    let mut open = Vec::new();
    for (i, &p) in partner.iter().enumerate() {
        if p > i {
            open.push(i);
        } else if open.pop() != Some(p) {
            return false;
        }
    }
    open.is_empty()
}

pub fn catalan(n: usize) -> BigInt {
    let mut c = BigInt::from(1);
    for k in 0..n {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

/// All `Catalan(n)` diagrams, sorted by partner vector.
pub fn enumerate_chord_diagrams(n: usize, cap: u64) -> Result<Vec<ChordDiagram>> {
    check_cap("chord diagrams", &catalan(n), cap)?;
    fn fill(partner: &mut [usize], lo: usize, hi: usize, out: &mut Vec<Vec<usize>>, rest: &mut Vec<(usize, usize)>) {
        // Matches points lo..hi, then continues with pending intervals.
        if lo >= hi {
            match rest.pop() {
                Some((a, b)) => {
                    fill(partner, a, b, out, rest);
                    rest.push((a, b));
                }
                None => out.push(partner.to_vec()),
            }
            return;
        }
        let mut j = lo + 1;
        while j < hi {
            partner[lo] = j;
            partner[j] = lo;
            rest.push((j + 1, hi));
            fill(partner, lo + 1, j, out, rest);
            rest.pop();
            j += 2;
        }
    }
    let mut out = Vec::new();
    fill(&mut vec![0; 2 * n], 0, 2 * n, &mut out, &mut Vec::new());
    out.sort();
    Ok(out.into_iter().map(ChordDiagram::from_partner).collect())
}

/// One chord diagram per disc, in disc order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub diagrams: Vec<ChordDiagram>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disc {
    pub name: String,
    pub darts: Vec<DartId>,
    /// Sign of each boundary arc under the current orientation.
    pub positive: Vec<bool>,
}

impl Disc {
    pub fn n(&self) -> usize {
        self.darts.len() / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub positive: bool,
    /// Boundary arcs in the region, sorted.
    pub arcs: Vec<usize>,
}

impl Region {
    pub fn valence(&self) -> usize {
        self.arcs.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedRegions {
    pub regions: Vec<Region>,
}

impl SignedRegions {
    pub fn euler(&self) -> i64 {
        self.regions.iter().map(|r| if r.positive { 1 } else { -1 }).sum()
    }

    pub fn negative(&self) -> impl Iterator<Item = &Region> {
        self.regions.iter().filter(|r| !r.positive)
    }

    pub fn max_negative_valence(&self) -> usize {
        self.negative().map(Region::valence).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Tightness {
    pub tight: bool,
    pub loops: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeHugging {
    Hugging(SpanningTree),
    NotHugging,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceMatching {
    pub matching: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigurationReport {
    pub faces: BTreeMap<String, FaceMatching>,
    pub tight: bool,
    pub euler: BTreeMap<String, i64>,
}

/// The face discs of a trinity with their gluing, plus the link from
/// emerald arcs to the edges of `G_V`.
#[derive(Clone, Debug)]
pub struct DiscSystem {
    discs: Vec<Disc>,
    offsets: Vec<usize>,
    disc_of: Vec<usize>,
    glue: Vec<usize>,
    violet_graph: RotationGraph,
    corner_arc: Vec<(usize, usize)>,
    arc_corner: HashMap<(usize, usize), EdgeId>,
    violet_count: usize,
    emerald_count: usize,
}

impl DiscSystem {
    pub fn new(t: &Trinity) -> Self {
        let g = t.base();
        let mut point_of = vec![(0, 0); g.num_darts()];
        let discs: Vec<Disc> = g
            .faces()
            .iter()
            .enumerate()
            .map(|(fi, f)| {
                for (i, &d) in f.boundary.iter().enumerate() {
                    point_of[d.0] = (fi, i);
                }
                Disc {
                    name: t.red_names()[fi].clone(),
                    darts: f.boundary.clone(),
                    positive: f.boundary.iter().map(|&d| g.colour(g.head(d)) == Some(Colour::Violet)).collect(),
                }
            })
            .collect();
        let mut offsets = Vec::with_capacity(discs.len());
        let mut total = 0;
        for d in &discs {
            offsets.push(total);
            total += d.darts.len();
        }
        let mut glue = vec![0; total];
        let disc_of: Vec<usize> = discs.iter().enumerate().flat_map(|(i, d)| std::iter::repeat_n(i, d.darts.len())).collect();
        for d in 0..g.num_darts() {
            let (fi, i) = point_of[d];
            let (fj, j) = point_of[g.twin(DartId(d)).0];
            glue[offsets[fi] + i] = offsets[fj] + j;
        }

        let violet_graph = t.colour_graph(Colour::Violet);
        let mut corner_arc = vec![(0, 0); violet_graph.num_edges()];
        let mut arc_corner = HashMap::new();
        for (ei, e) in violet_graph.edges().iter().enumerate() {
            let dart = e.name.strip_prefix("c:").and_then(|d| g.dart_id(d)).expect("violet edges are corners");
            let (fi, i) = point_of[dart.0];
            let arc = (i + discs[fi].darts.len() - 1) % discs[fi].darts.len();
            debug_assert!(!discs[fi].positive[arc]);
            corner_arc[ei] = (fi, arc);
            arc_corner.insert((fi, arc), EdgeId(ei));
        }
        DiscSystem {
            discs,
            offsets,
            disc_of,
            glue,
            violet_graph,
            corner_arc,
            arc_corner,
            violet_count: t.class(Colour::Violet).len(),
            emerald_count: t.class(Colour::Emerald).len(),
        }
    }

    /// Same discs with the opposite orientation: every arc sign flips.
    pub fn reversed(mut self) -> Self {
        for d in &mut self.discs {
            for p in &mut d.positive {
                *p = !*p;
            }
        }
        self
    }

    pub fn discs(&self) -> &[Disc] {
        &self.discs
    }

    pub fn disc_index(&self, name: &str) -> Option<usize> {
        self.discs.iter().position(|d| d.name == name)
    }

    pub fn violet_graph(&self) -> &RotationGraph {
        &self.violet_graph
    }

    /// `|E| - |V|`, the sum of the Euler classes of any tight configuration.
    pub fn euler_total(&self) -> i64 {
        self.emerald_count as i64 - self.violet_count as i64
    }

    pub fn check(&self, cfg: &Configuration) -> Result<()> {
        if cfg.diagrams.len() != self.discs.len() {
            return Err(schema(format!("configuration has {} discs, expected {}", cfg.diagrams.len(), self.discs.len())));
        }
        for (d, disc) in cfg.diagrams.iter().zip(&self.discs) {
            if d.chords() != disc.n() {
                return Err(Error::SizeMismatch { expected: disc.n(), found: d.chords() });
            }
        }
        Ok(())
    }

    /// Closed curves after gluing every chord endpoint across its edge.
    pub fn loops(&self, cfg: &Configuration) -> usize {
        self.loops_with(|fi| &cfg.diagrams[fi])
    }

    pub(crate) fn loops_with<'a>(&self, diagram: impl Fn(usize) -> &'a ChordDiagram) -> usize {
        let total = self.glue.len();
        let mut seen = vec![false; total];
        let chord = |p: usize| {
            let fi = self.disc_of[p];
            self.offsets[fi] + diagram(fi).partner(p - self.offsets[fi])
        };
        let mut loops = 0;
        for start in 0..total {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                let q = chord(p);
                seen[q] = true;
                p = self.glue[q];
            }
        }
        loops
    }

    pub fn is_tight(&self, cfg: &Configuration) -> Tightness {
        let loops = self.loops(cfg);
        Tightness { tight: loops == 1, loops }
    }

    pub fn signed_regions(&self, disc: usize, d: &ChordDiagram) -> Result<SignedRegions> {
        let info = &self.discs[disc];
        if d.chords() != info.n() {
            return Err(Error::SizeMismatch { expected: info.n(), found: d.chords() });
        }
        let m = d.points();
        let mut seen = vec![false; m];
        let mut regions = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut arcs = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                arcs.push(a);
                a = d.partner((a + 1) % m);
            }
            arcs.sort();
            let positive = info.positive[arcs[0]];
            debug_assert!(arcs.iter().all(|&x| info.positive[x] == positive));
            regions.push(Region { positive, arcs });
        }
        Ok(SignedRegions { regions })
    }

    pub fn disc_euler(&self, disc: usize, d: &ChordDiagram) -> Result<i64> {
        Ok(self.signed_regions(disc, d)?.euler())
    }

    pub fn euler_vector(&self, cfg: &Configuration) -> Vec<i64> {
        cfg.diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| self.disc_euler(i, d).expect("configuration sizes checked"))
            .collect()
    }

    /// Boundary of a neighbourhood of `tree` inside each disc: the emerald
    /// arcs joined to the face by the tree share one negative region, every
    /// other emerald arc is cut off by its own chord.
    pub fn tree_hugging(&self, tree: &SpanningTree) -> Result<Configuration> {
        let tree = SpanningTree::new(&self.violet_graph, tree.edges.clone())?;
        let mut central: Vec<Vec<usize>> = vec![Vec::new(); self.discs.len()];
        for e in &tree.edges {
            let (fi, arc) = self.corner_arc[e.0];
            central[fi].push(arc);
        }
        let diagrams = self
            .discs
            .iter()
            .zip(central.iter_mut())
            .map(|(disc, arcs)| {
                arcs.sort();
                let m = disc.darts.len();
                let mut partner = vec![usize::MAX; m];
                for a in 0..m {
                    if !disc.positive[a] && arcs.binary_search(&a).is_err() {
                        partner[a] = (a + 1) % m;
                        partner[(a + 1) % m] = a;
                    }
                }
                for (j, &a) in arcs.iter().enumerate() {
                    let next = arcs[(j + 1) % arcs.len()];
                    partner[(a + 1) % m] = next;
                    partner[next] = (a + 1) % m;
                }
                ChordDiagram::from_partner(partner)
            })
            .collect();
        Ok(Configuration { diagrams })
    }

    /// On a tight configuration: at most one negative region of valence
    /// above one per disc. When that holds the central regions are read back
    /// as edges of `G_V`; discs with only valence-one regions contribute one
    /// corner each, chosen so the edges form a spanning tree.
    pub fn is_tree_hugging(&self, cfg: &Configuration) -> Result<TreeHugging> {
        self.check(cfg)?;
        if !self.is_tight(cfg).tight {
            return Err(Error::NotTight);
        }
        let mut options: Vec<Vec<Vec<EdgeId>>> = Vec::with_capacity(self.discs.len());
        for (fi, d) in cfg.diagrams.iter().enumerate() {
            let regions = self.signed_regions(fi, d)?;
            let big: Vec<&Region> = regions.negative().filter(|r| r.valence() > 1).collect();
            let corners = |arcs: &[usize]| arcs.iter().map(|&a| self.arc_corner[&(fi, a)]).collect::<Vec<_>>();
            match big.len() {
                0 => options.push(regions.negative().map(|r| corners(&r.arcs)).collect()),
                1 => options.push(vec![corners(&big[0].arcs)]),
                _ => return Ok(TreeHugging::NotHugging),
            }
        }

        fn pick(
            g: &RotationGraph,
            options: &[Vec<Vec<EdgeId>>],
            at: usize,
            uf: &mut RollbackUnionFind,
            chosen: &mut Vec<EdgeId>,
        ) -> bool {
            if at == options.len() {
                return chosen.len() + 1 == g.num_vertices();
            }
            for option in &options[at] {
                let mut joined = 0;
                let mut ok = true;
                for &e in option {
                    let (a, b) = g.ends(e);
                    if uf.union(a.0, b.0) {
                        joined += 1;
                    } else {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    chosen.extend(option);
                    if pick(g, options, at + 1, uf, chosen) {
                        return true;
                    }
                    chosen.truncate(chosen.len() - option.len());
                }
                for _ in 0..joined {
                    uf.rollback();
                }
            }
            false
        }

        let g = &self.violet_graph;
        let mut uf = RollbackUnionFind::new(g.num_vertices());
        let mut chosen = Vec::new();
        if !pick(g, &options, 0, &mut uf, &mut chosen) {
            return Err(Error::NotSpanning);
        }
        Ok(TreeHugging::Hugging(SpanningTree::new(g, chosen)?))
    }

    pub fn report(&self, cfg: &Configuration) -> ConfigurationReport {
        let euler = self.euler_vector(cfg);
        ConfigurationReport {
            faces: self
                .discs
                .iter()
                .zip(&cfg.diagrams)
                .map(|(disc, d)| {
                    let matching = d.pairs().into_iter().map(|(a, b)| [a, b]).collect();
                    (disc.name.clone(), FaceMatching { matching })
                })
                .collect(),
            tight: self.is_tight(cfg).tight,
            euler: self.discs.iter().zip(euler).map(|(d, e)| (d.name.clone(), e)).collect(),
        }
    }

    /// `Π Catalan(n_r)`.
    pub fn configuration_count(&self) -> BigInt {
        self.discs.iter().map(|d| catalan(d.n())).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::hypertrees::hypertree_of;
    use crate::trees::enumerate_spanning_trees;
    use crate::trinity::build_trinity;

    fn system(g: &RotationGraph) -> DiscSystem {
        DiscSystem::new(&build_trinity(g).unwrap())
    }

    fn all_configurations(s: &DiscSystem) -> Vec<Configuration> {
        let per: Vec<Vec<ChordDiagram>> = s.discs().iter().map(|d| enumerate_chord_diagrams(d.n(), 1 << 20).unwrap()).collect();
        let mut out = vec![Configuration { diagrams: vec![] }];
        for options in per {
            out = out
                .into_iter()
                .flat_map(|c| {
                    options.iter().map(move |d| {
                        let mut c = c.clone();
                        c.diagrams.push(d.clone());
                        c
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn catalan_counts() {
        for (n, c) in [(1, 1), (2, 2), (3, 5), (4, 14), (6, 132)] {
            assert_eq!(enumerate_chord_diagrams(n, 1000).unwrap().len(), c);
            assert_eq!(catalan(n), BigInt::from(c));
        }
        assert!(matches!(enumerate_chord_diagrams(8, 100), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn diagrams_are_distinct_and_non_crossing() {
        let all = enumerate_chord_diagrams(5, 1000).unwrap();
        let mut sorted = all.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        assert!(all.iter().all(|d| is_non_crossing(d.partners())));
    }

    #[test]
    fn rejects_crossing_pairs() {
        assert!(ChordDiagram::from_pairs(4, &[(0, 2), (1, 3)]).is_err());
        assert!(ChordDiagram::from_pairs(4, &[(0, 1)]).is_err());
        assert!(ChordDiagram::from_pairs(4, &[(0, 3), (1, 2)]).is_ok());
    }

    #[test]
    fn single_edge_is_tight_with_euler_zero() {
        let s = system(&corpus::single_edge());
        let d = ChordDiagram::from_pairs(2, &[(0, 1)]).unwrap();
        let cfg = Configuration { diagrams: vec![d.clone()] };
        assert_eq!(s.is_tight(&cfg), Tightness { tight: true, loops: 1 });
        let regions = s.signed_regions(0, &d).unwrap();
        assert_eq!(regions.regions.len(), 2);
        assert!(regions.regions.iter().all(|r| r.valence() == 1));
        assert_eq!(s.disc_euler(0, &d).unwrap(), 0);
    }

    #[test]
    fn four_cycle_has_two_tight_configurations() {
        let s = system(&corpus::four_cycle());
        let all = all_configurations(&s);
        assert_eq!(all.len(), 4);
        let tight: Vec<&Configuration> = all.iter().filter(|c| s.is_tight(c).tight).collect();
        assert_eq!(tight.len(), 2);
        let mut eulers: Vec<Vec<i64>> = tight.iter().map(|c| s.euler_vector(c)).collect();
        eulers.sort();
        assert_eq!(eulers, vec![vec![-1, 1], vec![1, -1]]);
    }

    #[test]
    fn four_point_regions() {
        // A diagram cutting off both emerald arcs: two negative regions of
        // valence one and a positive region of valence two.
        let s = system(&corpus::four_cycle());
        let disc = &s.discs()[0];
        let e = (0..4).find(|&a| !disc.positive[a]).unwrap();
        let d = ChordDiagram::from_pairs(4, &[(e, (e + 1) % 4), ((e + 2) % 4, (e + 3) % 4)]).unwrap();
        let r = s.signed_regions(0, &d).unwrap();
        let mut neg: Vec<usize> = r.negative().map(Region::valence).collect();
        neg.sort();
        assert_eq!(neg, vec![1, 1]);
        let pos: Vec<usize> = r.regions.iter().filter(|x| x.positive).map(Region::valence).collect();
        assert_eq!(pos, vec![2]);
        assert_eq!(r.euler(), -1);
        let wrong = ChordDiagram::from_pairs(2, &[(0, 1)]).unwrap();
        assert!(matches!(s.signed_regions(0, &wrong), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn region_counts_and_valence_sums() {
        let s = system(&corpus::running_example());
        for (i, disc) in s.discs().iter().enumerate() {
            for d in enumerate_chord_diagrams(disc.n(), 1000).unwrap() {
                let r = s.signed_regions(i, &d).unwrap();
                assert_eq!(r.regions.len(), disc.n() + 1);
                let plus: usize = r.regions.iter().filter(|x| x.positive).map(Region::valence).sum();
                let minus: usize = r.negative().map(Region::valence).sum();
                assert_eq!((plus, minus), (disc.n(), disc.n()));
                assert!(r.euler().unsigned_abs() as usize <= disc.n().saturating_sub(1));
            }
        }
    }

    #[test]
    fn reversed_orientation_negates_euler() {
        let s = system(&corpus::running_example());
        let flipped = s.clone().reversed();
        for (i, disc) in s.discs().iter().enumerate() {
            for d in enumerate_chord_diagrams(disc.n(), 1000).unwrap() {
                assert_eq!(flipped.disc_euler(i, &d).unwrap(), -s.disc_euler(i, &d).unwrap());
            }
        }
    }

    #[test]
    fn tree_hugging_is_tight_and_round_trips() {
        for (name, g) in corpus::builtin_graphs() {
            let t = build_trinity(&g).unwrap();
            let s = DiscSystem::new(&t);
            let gv = s.violet_graph().clone();
            for tree in enumerate_spanning_trees(&gv, 1_000_000).unwrap() {
                let cfg = s.tree_hugging(&tree).unwrap();
                assert!(s.is_tight(&cfg).tight, "{name}");
                let f = hypertree_of(&gv, &tree, Colour::Red).unwrap();
                let euler = s.euler_vector(&cfg);
                for (i, disc) in s.discs().iter().enumerate() {
                    let expected = 2 * f.values[&disc.name] as i64 - disc.n() as i64 + 1;
                    assert_eq!(euler[i], expected, "{name}");
                }
                assert_eq!(euler.iter().sum::<i64>(), s.euler_total(), "{name}");
                match s.is_tree_hugging(&cfg).unwrap() {
                    TreeHugging::Hugging(w) => {
                        let back = hypertree_of(&gv, &w, Colour::Red).unwrap();
                        assert_eq!(back.values, f.values, "{name}");
                        assert_eq!(s.tree_hugging(&w).unwrap(), cfg, "{name}");
                    }
                    TreeHugging::NotHugging => panic!("{name}: tree-hugging configuration rejected"),
                }
            }
        }
    }

    #[test]
    fn four_cycle_tight_configurations_are_tree_hugging() {
        let s = system(&corpus::four_cycle());
        for c in all_configurations(&s) {
            match s.is_tree_hugging(&c) {
                Ok(h) => assert!(matches!(h, TreeHugging::Hugging(_))),
                Err(e) => assert!(matches!(e, Error::NotTight)),
            }
        }
    }

    #[test]
    fn octagon_has_a_tight_non_hugging_configuration() {
        let s = system(&corpus::octagon());
        let found = all_configurations(&s).into_iter().find(|c| {
            s.is_tight(c).tight
                && s.signed_regions(0, &c.diagrams[0]).unwrap().negative().filter(|r| r.valence() == 2).count() == 2
        });
        let c = found.expect("two valence-two negative regions on a tight octagon configuration");
        assert_eq!(s.is_tree_hugging(&c).unwrap(), TreeHugging::NotHugging);
    }

    #[test]
    fn tree_hugging_rejects_non_trees() {
        let s = system(&corpus::four_cycle());
        let not_tree = SpanningTree { edges: vec![EdgeId(0)] };
        assert!(matches!(s.tree_hugging(&not_tree), Err(Error::NotSpanning)));
    }

    #[test]
    fn report_shape() {
        let s = system(&corpus::single_edge());
        let cfg = Configuration { diagrams: vec![ChordDiagram::from_pairs(2, &[(0, 1)]).unwrap()] };
        let json = serde_json::to_value(s.report(&cfg)).unwrap();
        let face = s.discs()[0].name.clone();
        assert_eq!(json["faces"][&face]["matching"], serde_json::json!([[0, 1]]));
        assert_eq!(json["tight"], true);
        assert_eq!(json["euler"][&face], 0);
    }

    proptest::proptest! {
        #[test]
        fn enumerated_diagrams_parse_back(n in 1usize..6, pick in 0usize..1000) {
            let all = enumerate_chord_diagrams(n, 1000).unwrap();
            let d = &all[pick % all.len()];
            let again = ChordDiagram::from_pairs(2 * n, &d.pairs()).unwrap();
            proptest::prop_assert_eq!(&again, d);
        }
    }
}
