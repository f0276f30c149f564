//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the verdict lines always reach the output.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use trinity_core::dividing::{enumerate_chord_diagrams, DiscSystem, TreeHugging};
use trinity_core::fkt::{clock_graph, enumerate_states, splitting_oracle, state_to_trail, states_vs_configurations};
use trinity_core::hypertrees::{enumerate_hypertrees, HypergraphKind};
use trinity_core::transitions::{build_configuration_graph, bypass_move_details, classify_components, valence_concentration_path};
use trinity_core::trees::{count_arborescences, enumerate_arborescences, magic_number};
use trinity_core::{build_trinity, corpus, Colour, RotationGraph, VerificationSuite, DEFAULT_CAP};

/// Magic number of the eleven-edge running example, frozen from the
/// arborescence enumeration.
const RUNNING_EXAMPLE_MAGIC: u64 = 11;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_corpus() -> Vec<(String, RotationGraph)> {
    corpus::builtin_graphs().into_iter().filter(|(_, g)| g.num_edges() <= 12).collect()
}

fn component_counts() -> Check {
    let graphs = small_corpus();
    for (name, g) in &graphs {
        let t = build_trinity(g).map_err(|e| e.to_string())?;
        let magic = magic_number(&t, DEFAULT_CAP).magic().ok_or(format!("{name}: magic report disagrees"))?;
        let system = DiscSystem::new(&t);
        let cg = build_configuration_graph(&system, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let er = enumerate_hypertrees(&t.hypergraph(HypergraphKind::ER), DEFAULT_CAP).map_err(|e| e.to_string())?;
        let vr = enumerate_hypertrees(&t.hypergraph(HypergraphKind::VR), DEFAULT_CAP).map_err(|e| e.to_string())?;
        let counts = [BigInt::from(cg.components), BigInt::from(er.len()), BigInt::from(vr.len())];
        ensure(counts.iter().all(|c| *c == magic), || format!("{name}: {counts:?} vs {magic}"))?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn six_hypergraphs() -> Check {
    let graphs = corpus::builtin_graphs();
    for (name, g) in &graphs {
        let t = build_trinity(g).map_err(|e| e.to_string())?;
        let r = magic_number(&t, DEFAULT_CAP);
        ensure(r.populated() == 12, || format!("{name}: only {} slots populated", r.populated()))?;
        ensure(r.agree, || format!("{name}: slots disagree"))?;
    }
    Ok(format!("{} graphs, 12 slots each", graphs.len()))
}

fn euler_formula() -> Check {
    let mut components = 0;
    for (name, g) in small_corpus() {
        let t = build_trinity(&g).map_err(|e| e.to_string())?;
        let system = DiscSystem::new(&t);
        let cg = build_configuration_graph(&system, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let er = enumerate_hypertrees(&t.hypergraph(HypergraphKind::ER), DEFAULT_CAP).map_err(|e| e.to_string())?;
        let c = classify_components(&cg, &system, &er).map_err(|e| format!("{name}: {e}"))?;
        ensure(c.bijection_ok, || format!("{name}: components do not match hypertrees"))?;
        let class = |c| (0..g.num_vertices()).filter(|&v| g.colour(trinity_core::VertexId(v)) == Some(c)).count() as i64;
        let total = class(Colour::Emerald) - class(Colour::Violet);
        for comp in &c.components {
            for (v, cfg_index) in (0..cg.vertices.len()).filter(|&v| cg.component[v] == comp.id).enumerate() {
                let euler = system.euler_vector(&cg.configuration(cfg_index));
                ensure(euler == comp.euler, || format!("{name}: member {v} of component {} differs", comp.id))?;
            }
            let expected: Vec<i64> =
                comp.hypertree.iter().zip(system.discs()).map(|(&f, d)| 2 * f as i64 - d.n() as i64 + 1).collect();
            ensure(comp.euler == expected, || format!("{name}: Euler {:?} vs {expected:?}", comp.euler))?;
            ensure(comp.euler.iter().sum::<i64>() == total, || format!("{name}: sum is not |E| - |V|"))?;
            components += 1;
        }
    }
    Ok(format!("{components} components"))
}

fn four_cycle() -> Check {
    let g = corpus::four_cycle();
    let t = build_trinity(&g).map_err(|e| e.to_string())?;
    let magic = magic_number(&t, DEFAULT_CAP).magic();
    ensure(magic == Some(BigInt::from(2)), || format!("magic {magic:?}"))?;
    let er = enumerate_hypertrees(&t.hypergraph(HypergraphKind::ER), DEFAULT_CAP).map_err(|e| e.to_string())?;
    let vectors: BTreeSet<Vec<usize>> = er.vectors().cloned().collect();
    ensure(vectors == BTreeSet::from([vec![1, 0], vec![0, 1]]), || format!("hypertrees {vectors:?}"))?;
    let system = DiscSystem::new(&t);
    let cg = build_configuration_graph(&system, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure((cg.total, cg.vertices.len(), cg.components) == (4, 2, 2), || {
        format!("total {}, tight {}, components {}", cg.total, cg.vertices.len(), cg.components)
    })?;
    let eulers: BTreeSet<Vec<i64>> = (0..cg.vertices.len()).map(|v| system.euler_vector(&cg.configuration(v))).collect();
    ensure(eulers == BTreeSet::from([vec![1, -1], vec![-1, 1]]), || format!("Euler vectors {eulers:?}"))?;
    Ok("magic 2, 4 configurations, 2 tight, 2 components".into())
}

fn single_edge() -> Check {
    let g = corpus::single_edge();
    let t = build_trinity(&g).map_err(|e| e.to_string())?;
    let r = magic_number(&t, DEFAULT_CAP);
    ensure(r.agree && r.magic() == Some(BigInt::from(1)) && r.populated() == 12, || "magic report".into())?;
    let system = DiscSystem::new(&t);
    let cg = build_configuration_graph(&system, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure((cg.total, cg.vertices.len(), cg.components) == (1, 1, 1), || "configuration counts".into())?;
    let euler = system.euler_vector(&cg.configuration(0));
    ensure(euler == vec![0], || format!("Euler {euler:?}"))?;
    Ok("all counts 1, Euler (0)".into())
}

fn running_example() -> Check {
    let g = corpus::running_example();
    ensure(g.num_edges() == 11, || "not the eleven-edge graph".into())?;
    let t = build_trinity(&g).map_err(|e| e.to_string())?;
    let dual = t.directed_dual(Colour::Red);
    let listed = enumerate_arborescences(&dual, &dual.vertices[0], DEFAULT_CAP).map_err(|e| e.to_string())?.len() as u64;
    ensure(listed == RUNNING_EXAMPLE_MAGIC, || format!("enumeration gives {listed}"))?;
    let report = VerificationSuite::new(DEFAULT_CAP).run_graph(&g).map_err(|e| e.to_string())?;
    ensure(report.pass && report.stages.iter().all(|s| s.pass == Some(true)), || report.summary())?;
    let components = &report.stage("configurations").ok_or("no configuration stage")?.detail["components"];
    ensure(*components == RUNNING_EXAMPLE_MAGIC, || format!("components {components}"))?;
    Ok(format!("magic {RUNNING_EXAMPLE_MAGIC}, {} stages pass", report.stages.len()))
}

fn universe_states() -> Check {
    let mut out = Vec::new();
    for (name, u) in corpus::builtin_universes() {
        let r = states_vs_configurations(&u, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.pass(), || format!("{name}: {} states, {} tight, magic {:?}", r.states, r.tight_configurations, r.magic))?;
        let states = enumerate_states(&u, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let mut trails = states
            .iter()
            .map(|s| state_to_trail(&u, s).map(|t| t.splitting))
            .collect::<trinity_core::Result<Vec<_>>>()
            .map_err(|e| format!("{name}: {e}"))?;
        trails.sort();
        let oracle = splitting_oracle(&u, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure(trails == oracle, || format!("{name}: trails differ from single-loop splittings"))?;
        out.push(format!("{name} {}", r.states));
    }
    ensure(out == ["curl 1", "hopf 2", "figure_eight 5"], || format!("{out:?}"))?;
    Ok(out.join(", "))
}

fn clock_structure() -> Check {
    let universes = corpus::builtin_universes();
    for (name, u) in &universes {
        let c = clock_graph(u, DEFAULT_CAP, 256).map_err(|e| e.to_string())?;
        let r = &c.report;
        ensure(r.acyclic && r.weakly_connected && r.unique_source && r.unique_sink, || format!("{name}: {r:?}"))?;
    }
    Ok(format!("{} universes", universes.len()))
}

fn tree_hugging_reachability() -> Check {
    let mut starts = 0;
    let mut large_face = false;
    for (name, g) in small_corpus() {
        let t = build_trinity(&g).map_err(|e| e.to_string())?;
        let system = DiscSystem::new(&t);
        large_face |= system.discs().iter().any(|d| d.n() >= 4);
        let cg = build_configuration_graph(&system, DEFAULT_CAP).map_err(|e| e.to_string())?;
        for v in 0..cg.vertices.len() {
            let path = valence_concentration_path(&system, &cg.configuration(v)).map_err(|e| format!("{name}: {e}"))?;
            let end = path.last().expect("path holds its start");
            let hugging = system.is_tree_hugging(end).map_err(|e| e.to_string())?;
            ensure(matches!(hugging, TreeHugging::Hugging(_)), || format!("{name}: path ends off tree-hugging"))?;
            starts += 1;
        }
    }
    ensure(large_face, || "no corpus face with four or more chords".into())?;
    Ok(format!("{starts} tight starts"))
}

fn bypass_soundness() -> Check {
    let mut moves = 0;
    let mut within = 0;
    for (name, g) in corpus::builtin_graphs() {
        let t = build_trinity(&g).map_err(|e| e.to_string())?;
        let system = DiscSystem::new(&t);
        for (fi, disc) in system.discs().iter().enumerate() {
            if disc.n() > 4 {
                continue;
            }
            for d in enumerate_chord_diagrams(disc.n(), DEFAULT_CAP).map_err(|e| e.to_string())? {
                let e = system.disc_euler(fi, &d).map_err(|e| e.to_string())?;
                for m in bypass_move_details(&d) {
                    let after = system.disc_euler(fi, &m.result).map_err(|e| e.to_string())?;
                    ensure(after == e, || format!("{name}: Euler changes on {}", disc.name))?;
                    moves += 1;
                }
            }
        }
        let Ok(cg) = build_configuration_graph(&system, DEFAULT_CAP) else { continue };
        for v in 0..cg.vertices.len() {
            let cfg = cg.configuration(v);
            for (fi, disc) in system.discs().iter().enumerate() {
                if disc.n() > 4 {
                    continue;
                }
                for m in bypass_move_details(&cfg.diagrams[fi]) {
                    let mut next = cfg.clone();
                    next.diagrams[fi] = m.result;
                    if let Some(w) = cg.index_of(&next) {
                        ensure(cg.component[v] == cg.component[w], || format!("{name}: move leaves component"))?;
                        within += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{moves} disc moves, {within} tight-to-tight moves"))
}

fn oracle_equivalence() -> Check {
    let mut instances = 0;
    for (name, g) in corpus::builtin_graphs() {
        let t = build_trinity(&g).map_err(|e| e.to_string())?;
        for c in Colour::ALL {
            let dual = t.directed_dual(c);
            for root in &dual.vertices {
                let det = count_arborescences(&dual, root).map_err(|e| e.to_string())?;
                if det > BigInt::from(100_000) {
                    continue;
                }
                let listed = enumerate_arborescences(&dual, root, 100_000).map_err(|e| e.to_string())?.len();
                ensure(det == BigInt::from(listed), || format!("{name} {c} root {root}: det {det}, listed {listed}"))?;
                instances += 1;
            }
        }
    }
    Ok(format!("{instances} rooted instances"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("component count equals hypertree counts and magic number", component_counts),
        ("all twelve magic report slots agree", six_hypergraphs),
        ("Euler vectors follow hypertrees and sum to |E| - |V|", euler_formula),
        ("four-cycle pinned instance", four_cycle),
        ("single-edge pinned instance", single_edge),
        ("running example golden value", running_example),
        ("universe states match tight configurations", universe_states),
        ("clock graph structure", clock_structure),
        ("valence concentration reaches tree-hugging", tree_hugging_reachability),
        ("bypass moves keep Euler class and component", bypass_soundness),
        ("determinant equals enumeration", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS ({secs:.2}s) {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL ({secs:.2}s) {title}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
