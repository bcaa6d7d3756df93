//! Brute-force reference implementations and instance generators. Nothing
//! here shares a computation path with the structural algorithms it checks:
//! plane subsets fall out of exhaustive partial duals, isomorphism out of a
//! dart-bijection search, and minimum genus out of sweeping every rotation
//! system of an abstract graph.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::canon::IsoMode;
use crate::decomp;
use crate::map::{auto_labels, Dart, RibbonGraph, Sign, VertexId};
use crate::subset::EdgeSubset;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("instance exceeds brute-force bounds: {0}")]
    Bounds(String),
}

/// Exactly the subsets whose partial dual is plane, by trying all of them.
pub fn brute_force_plane_subsets(g: &RibbonGraph) -> Result<Vec<EdgeSubset>, OracleError> {
    if g.edge_count() > 20 {
        return Err(OracleError::Bounds(format!("{} edges", g.edge_count())));
    }
    Ok(EdgeSubset::all(g.edge_count())
        .filter(|a| g.partial_dual(a).is_plane())
        .collect())
}

fn for_each_partition(darts: usize, blocks: usize, f: &mut impl FnMut(&[Vec<usize>])) {
    fn rec(
        d: usize,
        darts: usize,
        blocks: usize,
        acc: &mut Vec<Vec<usize>>,
        f: &mut impl FnMut(&[Vec<usize>]),
    ) {
        if d == darts {
            if acc.len() == blocks {
                f(acc);
            }
            return;
        }
        // Blocks are created in order of their least dart, so each
        // partition appears once.
        for b in 0..acc.len() {
            acc[b].push(d);
            rec(d + 1, darts, blocks, acc, f);
            acc[b].pop();
        }
        if acc.len() < blocks {
            acc.push(vec![d]);
            rec(d + 1, darts, blocks, acc, f);
            acc.pop();
        }
    }
    rec(0, darts, blocks, &mut Vec::new(), f);
}

fn for_each_cyclic_orders(blocks: &[Vec<usize>], f: &mut impl FnMut(&[Vec<usize>])) {
    fn rec(
        i: usize,
        blocks: &[Vec<usize>],
        acc: &mut Vec<Vec<usize>>,
        f: &mut impl FnMut(&[Vec<usize>]),
    ) {
        if i == blocks.len() {
            f(acc);
            return;
        }
        // Fix the least dart first; permuting the rest enumerates each
        // cyclic order once.
        let mut rest: Vec<usize> = blocks[i][1..].to_vec();
        permute(&mut rest, 0, &mut |perm| {
            let mut cycle = Vec::with_capacity(blocks[i].len());
            cycle.push(blocks[i][0]);
            cycle.extend_from_slice(perm);
            acc.push(cycle);
            rec(i + 1, blocks, acc, f);
            acc.pop();
        });
    }
    fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, f);
            items.swap(k, i);
        }
    }
    rec(0, blocks, &mut Vec::new(), f);
}

/// Every rotation system with exactly the given vertex and edge counts and
/// no isolated vertices, deduplicated up to achiral isomorphism and sorted
/// by canonical code.
pub fn enumerate_ribbon_graphs(
    vertices: usize,
    edges: usize,
    connected: bool,
) -> Result<Vec<RibbonGraph>, OracleError> {
    if vertices > 4 || edges > 5 {
        return Err(OracleError::Bounds(format!(
            "{vertices} vertices, {edges} edges"
        )));
    }
    if edges == 0 || vertices == 0 || vertices > 2 * edges {
        return Ok(Vec::new());
    }
    let labels = auto_labels(edges);
    let mut classes = BTreeMap::new();
    for_each_partition(2 * edges, vertices, &mut |blocks| {
        for_each_cyclic_orders(blocks, &mut |cycles| {
            let g = RibbonGraph::from_rotation_cycles(
                edges,
                cycles,
                labels.clone(),
                vec![None; edges],
                0,
            )
            .expect("enumerated cycles form a rotation system");
            if connected && !g.is_connected() {
                return;
            }
            classes
                .entry(g.canonical_code(IsoMode::Achiral))
                .or_insert(g);
        });
    });
    Ok(classes.into_values().collect())
}

/// Runs `f` on every rotation system of the abstract multigraph given by
/// its edge endpoint list.
pub fn for_each_rotation_system(
    n_vertices: usize,
    edges: &[(usize, usize)],
    f: &mut impl FnMut(&RibbonGraph) -> bool,
) -> Result<(), OracleError> {
    if n_vertices > 6 || edges.len() > 10 {
        return Err(OracleError::Bounds(format!(
            "{n_vertices} vertices, {} edges",
            edges.len()
        )));
    }
    let mut darts_at: Vec<Vec<usize>> = vec![Vec::new(); n_vertices];
    for (i, &(u, v)) in edges.iter().enumerate() {
        assert!(u < n_vertices && v < n_vertices);
        darts_at[u].push(2 * i);
        darts_at[v].push(2 * i + 1);
    }
    if darts_at.iter().any(|d| d.is_empty()) {
        return Err(OracleError::Bounds(
            "isolated vertex in abstract graph".into(),
        ));
    }
    let work: f64 = darts_at
        .iter()
        .map(|d| (1..d.len()).map(|k| k as f64).product::<f64>())
        .product();
    if work > 1e7 {
        return Err(OracleError::Bounds(format!("{work:.0} rotation systems")));
    }
    let labels = auto_labels(edges.len());
    let keep_going = &mut true;
    for_each_cyclic_orders(&darts_at, &mut |cycles| {
        if !*keep_going {
            return;
        }
        let g = RibbonGraph::from_rotation_cycles(
            edges.len(),
            cycles,
            labels.clone(),
            vec![None; edges.len()],
            0,
        )
        .expect("rotation choice is valid");
        if !f(&g) {
            *keep_going = false;
        }
    });
    Ok(())
}

/// Minimum genus over all rotation systems of an abstract multigraph.
pub fn min_genus_abstract(
    n_vertices: usize,
    edges: &[(usize, usize)],
) -> Result<usize, OracleError> {
    let mut best = usize::MAX;
    for_each_rotation_system(n_vertices, edges, &mut |g| {
        best = best.min(g.genus());
        best > 0
    })?;
    Ok(best)
}

/// Isomorphism by dart-bijection search: grows the unique candidate map
/// from each choice of root image and orientation, then checks pairing,
/// rotation, and signs.
pub fn brute_force_iso(
    g: &RibbonGraph,
    h: &RibbonGraph,
    mode: IsoMode,
) -> Result<bool, OracleError> {
    if g.dart_count() > 12 || h.dart_count() > 12 {
        return Err(OracleError::Bounds("more than 12 darts".into()));
    }
    if g.dart_count() != h.dart_count() || g.isolated_vertex_count() != h.isolated_vertex_count() {
        return Ok(false);
    }
    let reversals: &[bool] = match mode {
        IsoMode::Chiral => &[false],
        IsoMode::Achiral => &[false, true],
    };
    Ok(reversals.iter().any(|&rev| iso_oriented(g, h, rev)))
}

fn iso_oriented(g: &RibbonGraph, h: &RibbonGraph, rev: bool) -> bool {
    let g_comps: Vec<Vec<Dart>> = dart_components(g);
    let h_comps: Vec<Vec<Dart>> = dart_components(h);
    if g_comps.len() != h_comps.len() {
        return false;
    }
    fn assign(
        i: usize,
        g: &RibbonGraph,
        h: &RibbonGraph,
        rev: bool,
        g_comps: &[Vec<Dart>],
        h_comps: &[Vec<Dart>],
        used: &mut Vec<bool>,
    ) -> bool {
        if i == g_comps.len() {
            return true;
        }
        for j in 0..h_comps.len() {
            if used[j] || g_comps[i].len() != h_comps[j].len() {
                continue;
            }
            for &root_h in &h_comps[j] {
                if component_iso(g, h, rev, g_comps[i][0], root_h) {
                    used[j] = true;
                    if assign(i + 1, g, h, rev, g_comps, h_comps, used) {
                        return true;
                    }
                    used[j] = false;
                }
            }
        }
        false
    }
    let mut used = vec![false; h_comps.len()];
    assign(0, g, h, rev, &g_comps, &h_comps, &mut used)
}

fn component_iso(g: &RibbonGraph, h: &RibbonGraph, rev: bool, root_g: Dart, root_h: Dart) -> bool {
    let mut m = vec![u32::MAX; g.dart_count()];
    m[root_g.index()] = root_h.index() as u32;
    let mut queue = vec![root_g];
    while let Some(a) = queue.pop() {
        let b = Dart::new(m[a.index()] as usize);
        let pairs = [
            (
                g.next_at_vertex(a),
                if rev {
                    h.prev_at_vertex(b)
                } else {
                    h.next_at_vertex(b)
                },
            ),
            (g.partner(a), h.partner(b)),
        ];
        for (na, nb) in pairs {
            if m[na.index()] == u32::MAX {
                m[na.index()] = nb.index() as u32;
                queue.push(na);
            } else if m[na.index()] != nb.index() as u32 {
                return false;
            }
        }
    }
    for d in 0..g.dart_count() {
        if m[d] == u32::MAX {
            continue;
        }
        let e_g = g.edge_of(Dart::new(d));
        let e_h = h.edge_of(Dart::new(m[d] as usize));
        if g.sign(e_g) != h.sign(e_h) {
            return false;
        }
    }
    true
}

fn dart_components(g: &RibbonGraph) -> Vec<Vec<Dart>> {
    g.components()
        .into_iter()
        .filter(|c| !c.edges.is_empty())
        .map(|c| {
            let mut darts = Vec::new();
            for &v in &c.vertices {
                darts.extend(g.vertex_cycle(v));
            }
            darts.sort();
            darts
        })
        .collect()
}

/// A random rotation system with exactly the requested counts, every
/// vertex carrying at least one dart.
pub fn random_rotation_system(rng: &mut impl Rng, vertices: usize, edges: usize) -> RibbonGraph {
    assert!(edges >= 1 && vertices >= 1 && vertices <= 2 * edges);
    loop {
        let assign: Vec<usize> = (0..2 * edges).map(|_| rng.gen_range(0..vertices)).collect();
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); vertices];
        for (d, &v) in assign.iter().enumerate() {
            blocks[v].push(d);
        }
        if blocks.iter().any(|b| b.is_empty()) {
            continue;
        }
        for b in &mut blocks {
            b.shuffle(rng);
        }
        return RibbonGraph::from_rotation_cycles(
            edges,
            &blocks,
            auto_labels(edges),
            vec![None; edges],
            0,
        )
        .expect("random rotation system is valid");
    }
}

pub fn random_connected(rng: &mut impl Rng, vertices: usize, edges: usize) -> RibbonGraph {
    assert!(vertices <= edges + 1, "too many vertices to connect");
    loop {
        let g = random_rotation_system(rng, vertices, edges);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_plane_connected(
    rng: &mut impl Rng,
    max_vertices: usize,
    edges: usize,
) -> RibbonGraph {
    loop {
        let vertices = rng.gen_range(1..=max_vertices.min(edges + 1));
        let g = random_connected(rng, vertices, edges);
        if g.is_plane() {
            return g;
        }
    }
}

pub fn with_random_signs(rng: &mut impl Rng, g: &RibbonGraph) -> RibbonGraph {
    let signs = g
        .edges()
        .map(|e| {
            (
                g.label(e).to_string(),
                if rng.gen::<bool>() {
                    Sign::Plus
                } else {
                    Sign::Minus
                },
            )
        })
        .collect();
    g.with_signs(&signs)
        .expect("labels come from the same graph")
}

/// A generated 1-sum, with the sides remembered as edge subsets of the
/// combined graph (the first summand's edges come first in label order).
pub struct OneSumInstance {
    pub graph: RibbonGraph,
    pub p_edges: EdgeSubset,
    pub q_edges: EdgeSubset,
    pub anchor: VertexId,
}

/// Glues `p` and `q` at a random vertex of each. A join inserts `q`'s whole
/// rotation into one gap of `p`'s; otherwise the two rotations are riffled
/// uniformly at random.
pub fn random_one_sum(
    rng: &mut impl Rng,
    p: &RibbonGraph,
    q: &RibbonGraph,
    join: bool,
) -> OneSumInstance {
    assert!(p.edge_count() >= 1 && q.edge_count() >= 1);
    assert!(p.isolated_vertex_count() == 0 && q.isolated_vertex_count() == 0);
    let (e_p, e_q) = (p.edge_count(), q.edge_count());
    let shift = |d: Dart| d.index() + 2 * e_p;
    let anchor_p = VertexId::new(rng.gen_range(0..p.vertex_count()));
    let anchor_q = VertexId::new(rng.gen_range(0..q.vertex_count()));

    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for v in p.vertices().filter(|&v| v != anchor_p) {
        cycles.push(p.vertex_cycle(v).iter().map(|d| d.index()).collect());
    }
    for v in q.vertices().filter(|&v| v != anchor_q) {
        cycles.push(q.vertex_cycle(v).iter().map(|&d| shift(d)).collect());
    }
    let rotate = |mut c: Vec<usize>, rng: &mut dyn rand::RngCore| {
        let k = rng.gen_range(0..c.len() as u32) as usize;
        c.rotate_left(k);
        c
    };
    let cp = rotate(
        p.vertex_cycle(anchor_p).iter().map(|d| d.index()).collect(),
        rng,
    );
    let cq = rotate(
        q.vertex_cycle(anchor_q).iter().map(|&d| shift(d)).collect(),
        rng,
    );
    let merged = if join {
        let mut m = cp;
        m.extend(cq);
        m
    } else {
        let mut m = Vec::with_capacity(cp.len() + cq.len());
        let (mut i, mut j) = (0, 0);
        while i < cp.len() || j < cq.len() {
            let remaining_p = cp.len() - i;
            let remaining_q = cq.len() - j;
            if rng.gen_range(0..remaining_p + remaining_q) < remaining_p {
                m.push(cp[i]);
                i += 1;
            } else {
                m.push(cq[j]);
                j += 1;
            }
        }
        m
    };
    let first_merged = merged[0];
    cycles.push(merged);

    let edges = e_p + e_q;
    let graph =
        RibbonGraph::from_rotation_cycles(edges, &cycles, auto_labels(edges), vec![None; edges], 0)
            .expect("1-sum assembly is a rotation system");
    let p_edges = EdgeSubset::from_bits((1u64 << e_p) - 1, edges);
    OneSumInstance {
        anchor: graph.vertex_of(Dart::new(first_merged)),
        p_edges,
        q_edges: p_edges.complement(),
        graph,
    }
}

/// Deterministic instance source: exhaustive classes inside the bounds and
/// seeded samples beyond them.
#[derive(Clone, Debug)]
pub struct InstanceStream {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub connected: bool,
    pub signed: bool,
    pub seed: u64,
}

impl InstanceStream {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// All classes with `1..=max_edges` edges and compatible vertex counts.
    pub fn exhaustive(&self) -> Result<Vec<RibbonGraph>, OracleError> {
        let mut out = Vec::new();
        for edges in 1..=self.max_edges {
            for vertices in 1..=self.max_vertices.min(2 * edges) {
                for g in enumerate_ribbon_graphs(vertices, edges, self.connected)? {
                    if self.signed {
                        out.extend(all_sign_assignments(&g));
                    } else {
                        out.push(g);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Seeded random instances at one size.
    pub fn sample(&self, vertices: usize, edges: usize, count: usize) -> Vec<RibbonGraph> {
        let mut rng = self.rng();
        (0..count)
            .map(|_| {
                let g = if self.connected {
                    random_connected(&mut rng, vertices, edges)
                } else {
                    random_rotation_system(&mut rng, vertices, edges)
                };
                if self.signed {
                    with_random_signs(&mut rng, &g)
                } else {
                    g
                }
            })
            .collect()
    }
}

fn all_sign_assignments(g: &RibbonGraph) -> Vec<RibbonGraph> {
    let e = g.edge_count();
    (0u64..1 << e)
        .map(|mask| {
            let signs = g
                .edges()
                .map(|id| {
                    (
                        g.label(id).to_string(),
                        if mask >> id.index() & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        },
                    )
                })
                .collect();
            g.with_signs(&signs).expect("labels match")
        })
        .collect()
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckRecord {
    pub name: String,
    pub instances: usize,
    pub passed: bool,
}

/// Reproducibility record of an oracle agreement run.
#[derive(Serialize, Clone, Debug)]
pub struct Manifest {
    pub max_edges: usize,
    pub seed: u64,
    pub class_counts: BTreeMap<String, usize>,
    pub checks: Vec<CheckRecord>,
    pub all_passed: bool,
}

/// Runs the exhaustive agreement suite: structural plane-subset
/// enumeration against brute force, biseparation existence against plane
/// partial duals, and canonical codes against the isomorphism search.
pub fn verify_all(max_edges: usize, seed: u64) -> Result<Manifest, OracleError> {
    if max_edges > 5 {
        return Err(OracleError::Bounds(format!("max_edges {max_edges} > 5")));
    }
    let stream = InstanceStream {
        max_vertices: 4,
        max_edges,
        connected: false,
        signed: false,
        seed,
    };
    let mut class_counts = BTreeMap::new();
    let mut checks = Vec::new();

    let instances = stream.exhaustive()?;
    for g in &instances {
        *class_counts
            .entry(format!("v{}e{}", g.vertex_count(), g.edge_count()))
            .or_insert(0) += 1;
    }

    let mut enumeration_ok = true;
    let mut existence_ok = true;
    for g in &instances {
        let brute = brute_force_plane_subsets(g)?;
        let fast = decomp::enumerate_plane_subsets(g);
        enumeration_ok &= brute == fast;
        existence_ok &= !brute.is_empty() == decomp::find_plane_biseparation(g).is_some();
    }
    checks.push(CheckRecord {
        name: "plane-subset enumeration agrees with brute force".into(),
        instances: instances.len(),
        passed: enumeration_ok,
    });
    checks.push(CheckRecord {
        name: "biseparation existence agrees with plane partial duals".into(),
        instances: instances.len(),
        passed: existence_ok,
    });

    let mut iso_ok = true;
    let mut iso_pairs = 0;
    let small: Vec<&RibbonGraph> = instances.iter().filter(|g| g.dart_count() <= 6).collect();
    for (i, g) in small.iter().enumerate() {
        for h in small.iter().skip(i) {
            for mode in [IsoMode::Chiral, IsoMode::Achiral] {
                let codes_equal = g.canonical_code(mode) == h.canonical_code(mode);
                iso_ok &= brute_force_iso(g, h, mode)? == codes_equal;
                iso_pairs += 1;
            }
        }
    }
    let mut rng = stream.rng();
    for g in instances.iter().filter(|g| g.dart_count() <= 12) {
        let h = with_random_signs(&mut rng, g);
        for mode in [IsoMode::Chiral, IsoMode::Achiral] {
            let codes_equal = g.canonical_code(mode) == h.canonical_code(mode);
            iso_ok &= brute_force_iso(g, &h, mode)? == codes_equal;
            let mirrored = h.mirrored();
            let codes_equal = h.canonical_code(mode) == mirrored.canonical_code(mode);
            iso_ok &= brute_force_iso(&h, &mirrored, mode)? == codes_equal;
            iso_pairs += 2;
        }
    }
    checks.push(CheckRecord {
        name: "canonical codes agree with dart-bijection search".into(),
        instances: iso_pairs,
        passed: iso_ok,
    });

    let all_passed = checks.iter().all(|c| c.passed);
    Ok(Manifest {
        max_edges,
        seed,
        class_counts,
        checks,
        all_passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrows::{tests::circle, ArrowPresentation};

    fn graph(circles: &[&[&str]]) -> RibbonGraph {
        RibbonGraph::from_arrows(&ArrowPresentation {
            circles: circles.iter().map(|c| circle(c)).collect(),
            signs: BTreeMap::new(),
        })
        .unwrap()
    }

    #[test]
    fn brute_plane_subsets_on_bouquets() {
        let b2 = graph(&[&["a", "b", "a", "b"]]);
        let subs = brute_force_plane_subsets(&b2).unwrap();
        let labels: Vec<Vec<&str>> = subs.iter().map(|s| b2.subset_labels(s)).collect();
        assert_eq!(labels, vec![vec!["a"], vec!["b"]]);

        let b3 = graph(&[&["a", "b", "c", "a", "b", "c"]]);
        assert!(brute_force_plane_subsets(&b3).unwrap().is_empty());

        let n2 = graph(&[&["a", "a", "b", "b"]]);
        assert_eq!(brute_force_plane_subsets(&n2).unwrap().len(), 4);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ribbon_graphs(1, 1, false).unwrap().len(), 1);
        assert_eq!(enumerate_ribbon_graphs(1, 2, false).unwrap().len(), 2);
        assert_eq!(enumerate_ribbon_graphs(2, 1, false).unwrap().len(), 1);
    }

    #[test]
    fn min_genus_of_classics() {
        // Triangle.
        assert_eq!(min_genus_abstract(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(), 0);
        // Complete graph on five vertices.
        let mut k5 = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                k5.push((u, v));
            }
        }
        assert_eq!(min_genus_abstract(5, &k5).unwrap(), 1);
        // Complete bipartite 3 x 3.
        let mut k33 = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                k33.push((u, v));
            }
        }
        assert_eq!(min_genus_abstract(6, &k33).unwrap(), 1);
    }

    #[test]
    fn iso_search_basics() {
        let b2 = graph(&[&["a", "b", "a", "b"]]);
        let relabeled = graph(&[&["x", "y", "x", "y"]]);
        assert!(brute_force_iso(&b2, &relabeled, IsoMode::Chiral).unwrap());
        let n2 = graph(&[&["a", "a", "b", "b"]]);
        assert!(!brute_force_iso(&b2, &n2, IsoMode::Chiral).unwrap());
        assert!(!brute_force_iso(&b2, &n2, IsoMode::Achiral).unwrap());
    }

    #[test]
    fn iso_agrees_with_codes_exhaustively() {
        let mut all = Vec::new();
        for e in 1..=2 {
            for v in 1..=2 * e {
                all.extend(enumerate_ribbon_graphs(v, e, false).unwrap());
            }
        }
        for g in &all {
            for h in &all {
                for mode in [IsoMode::Chiral, IsoMode::Achiral] {
                    assert_eq!(
                        brute_force_iso(g, h, mode).unwrap(),
                        g.canonical_code(mode) == h.canonical_code(mode)
                    );
                }
            }
        }
    }

    #[test]
    fn one_sum_generator_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = random_connected(&mut rng, 2, 3);
        let q = random_connected(&mut rng, 1, 2);
        let inst = random_one_sum(&mut rng, &p, &q, false);
        assert_eq!(inst.graph.edge_count(), 5);
        assert_eq!(
            inst.graph.vertex_count(),
            p.vertex_count() + q.vertex_count() - 1
        );
        assert!(inst.graph.is_connected());
        let v = crate::decomp::is_one_sum(&inst.graph, &inst.p_edges, &inst.q_edges).unwrap();
        assert_eq!(v, Some(inst.anchor));
    }

    #[test]
    fn join_generator_is_arc_separated() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let p = random_plane_connected(&mut rng, 2, 2);
            let q = random_plane_connected(&mut rng, 2, 2);
            let inst = random_one_sum(&mut rng, &p, &q, true);
            let splits = crate::decomp::join_split(&inst.graph, inst.anchor);
            assert!(
                splits
                    .iter()
                    .any(|(l, r)| *l == inst.p_edges || *r == inst.p_edges),
                "join generator output admits the generating split"
            );
        }
    }

    #[test]
    fn manifest_passes_at_small_bounds() {
        let m = verify_all(2, 99).unwrap();
        assert!(m.all_passed);
        assert!(!m.class_counts.is_empty());
    }

    /// A graph with a plane partial dual has a planar underlying graph:
    /// some rotation system of its abstract graph embeds in the sphere.
    #[test]
    fn plane_partial_duals_have_planar_skeletons() {
        for e in 1..=4 {
            for v in 1..=4.min(2 * e) {
                for g in enumerate_ribbon_graphs(v, e, true).unwrap() {
                    if crate::decomp::find_plane_biseparation(&g).is_none() {
                        continue;
                    }
                    let edges: Vec<(usize, usize)> = g
                        .edges()
                        .map(|id| {
                            let (d0, d1) = g.darts_of(id);
                            (g.vertex_of(d0).index(), g.vertex_of(d1).index())
                        })
                        .collect();
                    assert_eq!(
                        min_genus_abstract(g.vertex_count(), &edges).unwrap(),
                        0,
                        "skeleton of a graph with a plane partial dual must be planar"
                    );
                }
            }
        }
    }
}
