//! Randomized sweeps above the acceptance-suite sizes: every structural
//! relation is re-checked on larger seeded instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ribbon_core::decomp::{self, enumerate_plane_subsets, find_plane_biseparation};
use ribbon_core::link::{diagram_of, same_link_diagram_set};
use ribbon_core::oracle::{
    brute_force_plane_subsets, random_connected, random_one_sum, random_plane_connected,
    random_rotation_system, with_random_signs,
};
use ribbon_core::{EdgeSubset, IsoMode};

#[test]
fn stress_enumeration_large() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
    for i in 0..400 {
        let e = rng.gen_range(7..=9);
        let v = rng.gen_range(1..=4);
        let g = random_rotation_system(&mut rng, v, e);
        let fast = enumerate_plane_subsets(&g);
        let brute = brute_force_plane_subsets(&g).unwrap();
        assert_eq!(fast, brute, "disagreement at iteration {i}");
        assert_eq!(!fast.is_empty(), find_plane_biseparation(&g).is_some());
    }
    println!("stress enumeration: 400 graphs at 7-9 edges agree");
}

#[test]
fn stress_pipeline_large() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFACE);
    for _ in 0..150 {
        let e = rng.gen_range(6..=8);
        let g = random_plane_connected(&mut rng, (e + 1).min(5), e);
        let gs = with_random_signs(&mut rng, &g);
        let d = diagram_of(&gs).unwrap();
        let (c1, c2) = d.checkerboard().unwrap();
        let t1 = d.tait(&c1);
        let t2 = d.tait(&c2);
        assert!(diagram_of(&t1).unwrap().equivalent(&d));
        assert!(diagram_of(&t2).unwrap().equivalent(&d));
        assert!(t2.isomorphic(&t1.geometric_dual(), IsoMode::Chiral));
        assert!(diagram_of(&t1.geometric_dual()).unwrap().equivalent(&d));
        // One random state against the partial dual of the Tait graph.
        let all = d.all_state_graphs().unwrap();
        let (state, graph) = &all[rng.gen_range(0..all.len())];
        let ts = d.tait_state_with(&c1, Default::default());
        let mut a = t1.empty_subset();
        for c in state.difference(&ts) {
            a.insert(ribbon_core::EdgeId::new(c));
        }
        assert!(graph.isomorphic(&t1.partial_dual(&a), IsoMode::Chiral));
    }
    println!("stress pipeline: 150 diagrams at 6-8 crossings coherent");
}

#[test]
fn stress_composition_achiral() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0DE);
    for _ in 0..500 {
        let e = rng.gen_range(1..=9);
        let v = rng.gen_range(1..=4.min(2 * e));
        let unsigned = random_rotation_system(&mut rng, v, e);
        let g = with_random_signs(&mut rng, &unsigned);
        let mask = g.full_subset().bits();
        let a = EdgeSubset::from_bits(rng.gen::<u64>() & mask, e);
        let b = EdgeSubset::from_bits(rng.gen::<u64>() & mask, e);
        let lhs = g.partial_dual(&a).partial_dual(&b);
        let rhs = g.partial_dual(&a.symmetric_difference(&b));
        assert!(lhs.isomorphic(&rhs, IsoMode::Achiral));
        assert!(g
            .partial_dual(&a)
            .partial_dual(&a)
            .isomorphic(&g, IsoMode::Chiral));
    }
    println!("stress composition: 500 triples pass");
}

#[test]
fn stress_join_summand_moves() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD00D);
    let mut moves = 0;
    for _ in 0..200 {
        let e1 = rng.gen_range(1..=3);
        let e2 = rng.gen_range(1..=3);
        let p = random_plane_connected(&mut rng, e1 + 1, e1);
        let q = random_plane_connected(&mut rng, e2 + 1, e2);
        let g = random_one_sum(&mut rng, &p, &q, true).graph;
        for comp in g.split_components() {
            let f = decomp::prime_factorization(&comp).unwrap();
            for prime in &f.summands {
                if prime.is_empty() || prime.is_full() {
                    continue;
                }
                let k = decomp::lift_subset(prime, &comp, &g);
                if let Ok(moved) = decomp::dual_of_join_summand(&g, &k) {
                    assert!(moved.is_plane(), "join-summand dual left the plane");
                    let back =
                        decomp::dual_of_join_summand(&moved, &decomp::lift_subset(&k, &g, &moved))
                            .unwrap();
                    assert!(back.isomorphic(&g, IsoMode::Chiral));
                    assert!(decomp::sim_equivalent(&g, &moved).unwrap());
                    moves += 1;
                }
            }
        }
    }
    assert!(moves > 100);
    println!("stress moves: {moves} join-summand duals verified");
}

#[test]
fn stress_flips_bigger() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xF1195);
    let mut flips = 0;
    for _ in 0..40 {
        let e1 = rng.gen_range(2..=4);
        let e2 = rng.gen_range(2..=4);
        let p = random_plane_connected(&mut rng, e1, e1);
        let q = random_plane_connected(&mut rng, e2, e2);
        let joined = random_one_sum(&mut rng, &p, &q, true).graph;
        let d = diagram_of(&with_random_signs(&mut rng, &joined)).unwrap();
        for (s1, s2) in d.two_edge_cuts() {
            let f = d.summand_flip(&s1, &s2).unwrap();
            assert!(same_link_diagram_set(&d, &f).unwrap());
            assert!(f.summand_flip(&s1, &s2).unwrap().equivalent(&d));
            flips += 1;
        }
    }
    println!("stress flips: {flips} flips at 4-8 crossings verified");
}

#[test]
fn stress_one_sums_with_riffles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ff);
    for _ in 0..300 {
        let ep = rng.gen_range(1..=4);
        let eq = rng.gen_range(1..=4);
        let vp = rng.gen_range(1..=ep + 1).min(2 * ep);
        let p = random_connected(&mut rng, vp, ep);
        let q = random_plane_connected(&mut rng, eq + 1, eq);
        let inst = random_one_sum(&mut rng, &p, &q, false);
        assert_eq!(inst.graph.partial_dual(&inst.q_edges).genus(), p.genus());
    }
    println!("stress one-sums: 300 riffled sums collapse genus correctly");
}

/// States related by switching a splice subset are partial duals of one
/// another over that subset, as ribbon graphs up to homeomorphism.
#[test]
fn stress_pairwise_state_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9A19);
    let mut total = 0;
    for _ in 0..40 {
        let e = rng.gen_range(2..=5);
        let g = random_plane_connected(&mut rng, (e + 1).min(4), e);
        let d = diagram_of(&with_random_signs(&mut rng, &g)).unwrap();
        let all = d.all_state_graphs().unwrap();
        for _ in 0..6 {
            let i = rng.gen_range(0..all.len());
            let j = rng.gen_range(0..all.len());
            let (si, gi) = &all[i];
            let (sj, gj) = &all[j];
            let mut delta = gi.empty_subset();
            for c in si.difference(sj) {
                delta.insert(ribbon_core::EdgeId::new(c));
            }
            assert!(gi.isomorphic(&gj.partial_dual(&delta), IsoMode::Achiral));
            total += 1;
        }
    }
    println!("stress pairwise states: {total} pairs verified");
}

/// The dart-bijection search and canonical codes agree on every pair of
/// enumerated classes within the exhaustive bounds, in both modes.
#[test]
fn stress_iso_agrees_with_codes_all_pairs() {
    let mut classes = Vec::new();
    for e in 1..=4 {
        for v in 1..=4.min(2 * e) {
            classes.extend(ribbon_core::oracle::enumerate_ribbon_graphs(v, e, false).unwrap());
        }
    }
    let mut pairs = 0;
    for (i, g) in classes.iter().enumerate() {
        for h in classes.iter().skip(i) {
            for mode in [IsoMode::Chiral, IsoMode::Achiral] {
                let codes = g.canonical_code(mode) == h.canonical_code(mode);
                let search = ribbon_core::oracle::brute_force_iso(g, h, mode).unwrap();
                assert_eq!(codes, search);
                pairs += 1;
            }
        }
    }
    println!("stress iso/codes: {pairs} comparisons agree");
}

/// Two darts at a vertex share a block exactly when a path between their
/// edges avoids the vertex, checked against a search over the underlying
/// graph with edge midpoints as nodes.
#[test]
fn stress_blocks_match_path_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB10C);
    let mut graphs = Vec::new();
    for e in 1..=3 {
        for v in 1..=3.min(2 * e) {
            graphs.extend(ribbon_core::oracle::enumerate_ribbon_graphs(v, e, false).unwrap());
        }
    }
    for _ in 0..60 {
        let e = rng.gen_range(2..=6);
        let v = rng.gen_range(1..=4.min(2 * e));
        graphs.push(random_rotation_system(&mut rng, v, e));
    }
    let mut checked = 0;
    for g in &graphs {
        let nv = g.vertex_count();
        let ne = g.edge_count();
        for v in g.vertices() {
            // Midpoint graph minus v: vertices then edge midpoints.
            let mut uf: Vec<usize> = (0..nv + ne).collect();
            fn find(uf: &mut Vec<usize>, x: usize) -> usize {
                if uf[x] != x {
                    uf[x] = find(uf, uf[x]);
                }
                uf[x]
            }
            for id in g.edges() {
                let (d0, d1) = g.darts_of(id);
                for d in [d0, d1] {
                    let w = g.vertex_of(d);
                    if w != v {
                        let (a, b) = (find(&mut uf, w.index()), find(&mut uf, nv + id.index()));
                        uf[a.max(b)] = a.min(b);
                    }
                }
            }
            let blocks = ribbon_core::decomp::vertex_blocks(g, v).blocks;
            for (i, bi) in blocks.iter().enumerate() {
                for (j, bj) in blocks.iter().enumerate() {
                    let ei = g.edge_of(bi[0]).index();
                    let ej = g.edge_of(bj[0]).index();
                    let connected = find(&mut uf, nv + ei) == find(&mut uf, nv + ej);
                    assert_eq!(
                        connected,
                        i == j,
                        "block structure disagrees with path search"
                    );
                }
            }
            checked += 1;
        }
    }
    println!("stress blocks: {checked} vertex partitions agree with path search");
}

/// Every state graph presents its source diagram.
#[test]
fn stress_state_graphs_present_their_diagram() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x90E5);
    let mut checked = 0;
    for _ in 0..25 {
        let e = rng.gen_range(1..=4);
        let g = random_plane_connected(&mut rng, (e + 1).min(3), e);
        let d = diagram_of(&with_random_signs(&mut rng, &g)).unwrap();
        let code = d.canonical_code(IsoMode::Chiral);
        let all = d.all_state_graphs().unwrap();
        let (_, graph) = &all[rng.gen_range(0..all.len())];
        let presented = ribbon_core::link::diagrams_of(graph).unwrap();
        assert!(
            presented
                .iter()
                .any(|x| x.canonical_code(IsoMode::Chiral) == code),
            "a state graph failed to present its source diagram"
        );
        checked += 1;
    }
    println!("stress membership: {checked} state graphs present their diagram");
}
