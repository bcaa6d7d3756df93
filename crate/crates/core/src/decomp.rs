//! Decompositions of ribbon graphs: 1-sums, joins, prime factorizations,
//! and plane-biseparations.
//!
//! A 1-sum writes `G = P (+) Q` with `P` and `Q` non-trivial (at least one
//! edge) and meeting in a single vertex. A join is a 1-sum where one side's
//! darts occupy a single contiguous arc of the rotation at the shared
//! vertex. A subset `A` defines a plane-biseparation when the subgraphs
//! induced by `A` and its complement are both plane and their components
//! assemble to `G` by 1-sums, each at a distinct vertex, each pairing the
//! two sides. Existence of such an `A` is exactly the condition for `G^A`
//! to be plane, which drives everything in this module.

use thiserror::Error;

use crate::canon::IsoMode;
use crate::map::{Dart, EdgeId, RibbonGraph, UnionFind, VertexId};
use crate::subset::EdgeSubset;

#[derive(Debug, Error)]
pub enum DecompError {
    #[error("edge sets do not partition the edge set")]
    NotAPartition,
    #[error("a summand must contain at least one edge")]
    TrivialSummand,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not prime")]
    NotPrime,
    #[error("edge set is not a join-summand")]
    NotAJoinSummand,
    #[error("graph is not plane")]
    NotPlane,
}

/// Partition of the darts at one vertex: two darts share a block exactly
/// when a path between their edges avoids the vertex.
#[derive(Clone, Debug)]
pub struct BlockPartition {
    pub vertex: VertexId,
    /// Blocks ordered by least dart; darts within a block in rotation order.
    pub blocks: Vec<Vec<Dart>>,
}

/// Blocks at a vertex together with the pairs that interlace in the cyclic
/// rotation order.
#[derive(Clone, Debug)]
pub struct InterlacementGraph {
    pub vertex: VertexId,
    pub block_count: usize,
    /// Interlacing block pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl InterlacementGraph {
    pub fn interlaces(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges.contains(&key)
    }
}

/// One join recorded during prime factorization.
#[derive(Clone, Debug)]
pub struct JoinSite {
    pub anchor: VertexId,
    pub left: EdgeSubset,
    pub right: EdgeSubset,
}

/// The unique factorization of a connected ribbon graph into prime
/// join-summands, as edge subsets of the host graph.
#[derive(Clone, Debug)]
pub struct PrimeFactorization {
    /// Prime summands ordered by least edge. The edgeless graph factors as
    /// the single degenerate summand with no edges.
    pub summands: Vec<EdgeSubset>,
    pub joins: Vec<JoinSite>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SideTag {
    P,
    Q,
}

#[derive(Clone, Debug)]
pub struct SummandStep {
    pub edges: EdgeSubset,
    pub side: SideTag,
    /// Vertex where this summand 1-sums onto the part already assembled;
    /// absent for the first summand of each component.
    pub anchor: Option<VertexId>,
}

/// Witness that a subset defines a plane-biseparation: the components of
/// both sides and an explicit 1-sum assembly order. Trivial biseparations
/// (`A` empty or everything, both sides plane) carry an empty sequence and
/// have length 1 by convention.
#[derive(Clone, Debug)]
pub struct BiseparationCertificate {
    pub subset: EdgeSubset,
    pub p_components: Vec<EdgeSubset>,
    pub q_components: Vec<EdgeSubset>,
    pub sequence: Vec<SummandStep>,
}

impl BiseparationCertificate {
    pub fn length(&self) -> usize {
        self.sequence.len().max(1)
    }
}

/// Blocks at `v`: darts grouped by connectivity in the graph with `v` cut
/// open. The two darts of a loop at `v` always share a block.
pub fn vertex_blocks(g: &RibbonGraph, v: VertexId) -> BlockPartition {
    let full = g.full_subset();
    BlockPartition {
        vertex: v,
        blocks: blocks_within(g, &full, v),
    }
}

fn blocks_within(g: &RibbonGraph, sub: &EdgeSubset, v: VertexId) -> Vec<Vec<Dart>> {
    let mut uf = UnionFind::new(g.dart_count());
    for w in g.vertices() {
        if w == v {
            continue;
        }
        let cycle: Vec<Dart> = g
            .vertex_cycle(w)
            .into_iter()
            .filter(|d| sub.contains(g.edge_of(*d)))
            .collect();
        for pair in cycle.windows(2) {
            uf.union(pair[0].index(), pair[1].index());
        }
    }
    for e in sub.iter() {
        let (d0, d1) = g.darts_of(e);
        uf.union(d0.index(), d1.index());
    }
    let at_v: Vec<Dart> = g
        .vertex_cycle(v)
        .into_iter()
        .filter(|d| sub.contains(g.edge_of(*d)))
        .collect();
    let mut roots: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<Dart>> = Vec::new();
    for &d in &at_v {
        let r = uf.find(d.index());
        match roots.iter().position(|&x| x == r) {
            Some(i) => blocks[i].push(d),
            None => {
                roots.push(r);
                blocks.push(vec![d]);
            }
        }
    }
    // Order blocks by least dart, keep member order as in the rotation.
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&i| blocks[i].iter().min().copied());
    order.into_iter().map(|i| blocks[i].clone()).collect()
}

/// Interlacement of the blocks at `v` with respect to the rotation cycle.
pub fn interlacement(g: &RibbonGraph, v: VertexId) -> InterlacementGraph {
    let blocks = vertex_blocks(g, v).blocks;
    let cycle = g.vertex_cycle(v);
    let block_of: Vec<usize> = cycle
        .iter()
        .map(|d| blocks.iter().position(|b| b.contains(d)).unwrap())
        .collect();
    let mut edges = Vec::new();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if interlaced(&block_of, i, j) {
                edges.push((i, j));
            }
        }
    }
    InterlacementGraph {
        vertex: v,
        block_count: blocks.len(),
        edges,
    }
}

/// Two position classes interlace when their restriction to the cyclic
/// sequence has more than two maximal runs.
fn interlaced(block_of: &[usize], i: usize, j: usize) -> bool {
    let restricted: Vec<bool> = block_of
        .iter()
        .filter(|&&b| b == i || b == j)
        .map(|&b| b == i)
        .collect();
    if restricted.is_empty() {
        return false;
    }
    let mut runs = 0;
    let k = restricted.len();
    for p in 0..k {
        if restricted[p] != restricted[(p + 1) % k] {
            runs += 1;
        }
    }
    runs > 2
}

/// Decides whether `G = P (+) Q` for the given edge partition, returning
/// the shared vertex. Errors when the sets fail to partition the edges or
/// a side has no edge.
pub fn is_one_sum(
    g: &RibbonGraph,
    p_edges: &EdgeSubset,
    q_edges: &EdgeSubset,
) -> Result<Option<VertexId>, DecompError> {
    if !p_edges.is_disjoint(q_edges) || p_edges.union(q_edges) != g.full_subset() {
        return Err(DecompError::NotAPartition);
    }
    if p_edges.is_empty() || q_edges.is_empty() {
        return Err(DecompError::TrivialSummand);
    }
    if g.isolated_vertex_count() > 0 {
        return Ok(None);
    }
    let mut in_p = vec![false; g.vertex_count()];
    let mut in_q = vec![false; g.vertex_count()];
    for e in p_edges.iter() {
        let (d0, d1) = g.darts_of(e);
        in_p[g.vertex_of(d0).index()] = true;
        in_p[g.vertex_of(d1).index()] = true;
    }
    for e in q_edges.iter() {
        let (d0, d1) = g.darts_of(e);
        in_q[g.vertex_of(d0).index()] = true;
        in_q[g.vertex_of(d1).index()] = true;
    }
    let shared: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| in_p[v] && in_q[v])
        .collect();
    match shared.as_slice() {
        [v] => Ok(Some(VertexId::new(*v))),
        _ => Ok(None),
    }
}

/// All ways to write the subgraph induced by `sub` as a join at `v`:
/// partitions of the blocks at `v` into two arcs of the restricted rotation.
/// Each unordered split appears once, the side holding the least edge first.
fn splits_within(g: &RibbonGraph, sub: &EdgeSubset, v: VertexId) -> Vec<(EdgeSubset, EdgeSubset)> {
    let blocks = blocks_within(g, sub, v);
    if blocks.len() < 2 {
        return Vec::new();
    }
    // Edge set hanging off each block: edges whose darts connect to the
    // block's class. Recompute the classes via the block members.
    let mut uf = UnionFind::new(g.dart_count());
    for w in g.vertices() {
        if w == v {
            continue;
        }
        let cycle: Vec<Dart> = g
            .vertex_cycle(w)
            .into_iter()
            .filter(|d| sub.contains(g.edge_of(*d)))
            .collect();
        for pair in cycle.windows(2) {
            uf.union(pair[0].index(), pair[1].index());
        }
    }
    for e in sub.iter() {
        let (d0, d1) = g.darts_of(e);
        uf.union(d0.index(), d1.index());
    }
    let mut block_edges: Vec<EdgeSubset> = vec![EdgeSubset::empty(g.edge_count()); blocks.len()];
    let block_root: Vec<usize> = blocks.iter().map(|b| uf.find(b[0].index())).collect();
    let mut uf2 = uf;
    for e in sub.iter() {
        let r = uf2.find(g.darts_of(e).0.index());
        match block_root.iter().position(|&x| x == r) {
            Some(i) => block_edges[i].insert(e),
            // An edge in a piece not attached to `v`: the induced subgraph
            // is disconnected and admits no join at `v`.
            None => return Vec::new(),
        }
    }

    let cycle: Vec<Dart> = g
        .vertex_cycle(v)
        .into_iter()
        .filter(|d| sub.contains(g.edge_of(*d)))
        .collect();
    if cycle.is_empty() {
        return Vec::new();
    }
    let block_of: Vec<usize> = cycle
        .iter()
        .map(|d| blocks.iter().position(|b| b.contains(d)).unwrap())
        .collect();
    let k = cycle.len();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..=k {
            if j - i == k {
                continue;
            }
            let arc_blocks: std::collections::BTreeSet<usize> =
                (i..j).map(|p| block_of[p]).collect();
            let rest_blocks: std::collections::BTreeSet<usize> =
                (j..k + i).map(|p| block_of[p % k]).collect();
            if !arc_blocks.is_disjoint(&rest_blocks) {
                continue;
            }
            let mut side = EdgeSubset::empty(g.edge_count());
            for &b in &arc_blocks {
                side = side.union(&block_edges[b]);
            }
            let other = sub.difference(&side);
            let key = side.min(other);
            if seen.insert(key) {
                let first = sub.iter().next().unwrap();
                if side.contains(first) {
                    out.push((side, other));
                } else {
                    out.push((other, side));
                }
            }
        }
    }
    out.sort();
    out
}

/// All arc-separated splits `G = P v Q` at `v`. Empty when none exist, and
/// in particular when `G` has pieces not attached through `v`.
pub fn join_split(g: &RibbonGraph, v: VertexId) -> Vec<(EdgeSubset, EdgeSubset)> {
    splits_within(g, &g.full_subset(), v)
}

/// A connected ribbon graph is prime when it is not a join. The edgeless
/// one-vertex graph counts as (degenerate) prime.
pub fn is_prime(g: &RibbonGraph) -> Result<bool, DecompError> {
    if !g.is_connected() {
        return Err(DecompError::Disconnected);
    }
    Ok(g.vertices()
        .all(|v| splits_within(g, &g.full_subset(), v).is_empty()))
}

/// Factors a connected ribbon graph into prime join-summands. The result
/// is independent of the split order up to reordering, which the summand
/// sort normalizes away.
pub fn prime_factorization(g: &RibbonGraph) -> Result<PrimeFactorization, DecompError> {
    if !g.is_connected() {
        return Err(DecompError::Disconnected);
    }
    if g.edge_count() == 0 {
        return Ok(PrimeFactorization {
            summands: vec![g.empty_subset()],
            joins: Vec::new(),
        });
    }
    let mut summands = Vec::new();
    let mut joins = Vec::new();
    let mut stack = vec![g.full_subset()];
    while let Some(sub) = stack.pop() {
        let split = g.vertices().find_map(|v| {
            let mut s = splits_within(g, &sub, v);
            if s.is_empty() {
                None
            } else {
                Some((v, s.remove(0)))
            }
        });
        match split {
            Some((v, (left, right))) => {
                joins.push(JoinSite {
                    anchor: v,
                    left,
                    right,
                });
                stack.push(left);
                stack.push(right);
            }
            None => summands.push(sub),
        }
    }
    summands.sort();
    Ok(PrimeFactorization { summands, joins })
}

/// For a connected prime graph: the at most two subsets that can define a
/// plane-biseparation. Seeds the least edge into side `A`, propagates
/// same-block and interlacement constraints over every vertex, then checks
/// the result against the definition; an inconsistency or a failed check
/// yields the empty list.
pub fn biseparation_candidates_prime(g: &RibbonGraph) -> Result<Vec<EdgeSubset>, DecompError> {
    if !is_prime(g)? {
        return Err(DecompError::NotPrime);
    }
    if g.edge_count() == 0 {
        return Ok(vec![g.empty_subset()]);
    }
    let e = g.edge_count();
    let mut constraints: Vec<Vec<(EdgeId, bool)>> = vec![Vec::new(); e];
    let add = |a: EdgeId, b: EdgeId, opposite: bool, cs: &mut Vec<Vec<(EdgeId, bool)>>| {
        cs[a.index()].push((b, opposite));
        cs[b.index()].push((a, opposite));
    };
    for v in g.vertices() {
        let blocks = vertex_blocks(g, v).blocks;
        let mut reps: Vec<EdgeId> = Vec::with_capacity(blocks.len());
        for block in &blocks {
            let edges: Vec<EdgeId> = {
                let mut es: Vec<EdgeId> = block.iter().map(|&d| g.edge_of(d)).collect();
                es.sort();
                es.dedup();
                es
            };
            for pair in edges.windows(2) {
                add(pair[0], pair[1], false, &mut constraints);
            }
            reps.push(edges[0]);
        }
        let inter = interlacement(g, v);
        for &(i, j) in &inter.edges {
            add(reps[i], reps[j], true, &mut constraints);
        }
    }
    let mut side: Vec<Option<bool>> = vec![None; e];
    side[0] = Some(true);
    let mut queue = vec![EdgeId::new(0)];
    while let Some(x) = queue.pop() {
        let sx = side[x.index()].unwrap();
        for &(y, opposite) in &constraints[x.index()] {
            let want = sx ^ opposite;
            match side[y.index()] {
                None => {
                    side[y.index()] = Some(want);
                    queue.push(y);
                }
                Some(s) if s != want => return Ok(Vec::new()),
                _ => {}
            }
        }
    }
    debug_assert!(
        side.iter().all(|s| s.is_some()),
        "constraint propagation reaches every edge of a connected prime graph"
    );
    let mut a = g.empty_subset();
    for (i, s) in side.iter().enumerate() {
        if s.unwrap_or(false) {
            a.insert(EdgeId::new(i));
        }
    }
    if verify_plane_biseparation(g, &a).is_none() {
        return Ok(Vec::new());
    }
    let ac = a.complement();
    Ok(vec![a.min(ac), a.max(ac)])
}

/// Checks the definition directly: both induced sides plane, and the
/// component incidence structure a tree assembling `G` by 1-sums at
/// distinct vertices, each pairing a `P` and a `Q` component. Disconnected
/// graphs are checked component by component; certificates concatenate.
pub fn verify_plane_biseparation(
    g: &RibbonGraph,
    a: &EdgeSubset,
) -> Option<BiseparationCertificate> {
    let comps = g.components();
    let mut cert = BiseparationCertificate {
        subset: *a,
        p_components: Vec::new(),
        q_components: Vec::new(),
        sequence: Vec::new(),
    };
    for comp in &comps {
        let mut comp_edges = g.empty_subset();
        for &e in &comp.edges {
            comp_edges.insert(e);
        }
        let part = verify_component(g, &comp_edges, &a.intersection(&comp_edges))?;
        cert.p_components.extend(part.p_components);
        cert.q_components.extend(part.q_components);
        cert.sequence.extend(part.sequence);
    }
    Some(cert)
}

fn verify_component(
    g: &RibbonGraph,
    comp_edges: &EdgeSubset,
    a: &EdgeSubset,
) -> Option<BiseparationCertificate> {
    let q = comp_edges.difference(a);
    if !g.induced(a).is_plane() || !g.induced(&q).is_plane() {
        return None;
    }
    if a.is_empty() || q.is_empty() {
        // Trivial biseparation: one side holds the whole component.
        let (p_components, q_components) = if a.is_empty() {
            (Vec::new(), if q.is_empty() { Vec::new() } else { vec![q] })
        } else {
            (vec![*a], Vec::new())
        };
        return Some(BiseparationCertificate {
            subset: *a,
            p_components,
            q_components,
            sequence: Vec::new(),
        });
    }

    let p_comps = side_components(g, a);
    let q_comps = side_components(g, &q);

    // Vertex incidences between components of the two sides. Any vertex in
    // three or more components, or shared within one side, kills the
    // decomposition; two shared vertices between one pair shows up as a
    // cycle below.
    struct Incidence {
        p: usize,
        q: usize,
        anchor: VertexId,
    }
    let mut incidences: Vec<Incidence> = Vec::new();
    for v in g.vertices() {
        let mut holders: Vec<(SideTag, usize)> = Vec::new();
        for (i, pc) in p_comps.iter().enumerate() {
            if touches(g, pc, v) {
                holders.push((SideTag::P, i));
            }
        }
        for (i, qc) in q_comps.iter().enumerate() {
            if touches(g, qc, v) {
                holders.push((SideTag::Q, i));
            }
        }
        match holders.as_slice() {
            [] | [_] => {}
            [(SideTag::P, p), (SideTag::Q, q)] | [(SideTag::Q, q), (SideTag::P, p)] => {
                incidences.push(Incidence {
                    p: *p,
                    q: *q,
                    anchor: v,
                });
            }
            _ => return None,
        }
    }

    // The incidence structure must be a spanning tree of the components.
    let n = p_comps.len() + q_comps.len();
    if incidences.len() != n - 1 {
        return None;
    }
    let mut uf = UnionFind::new(n);
    for inc in &incidences {
        uf.union(inc.p, p_comps.len() + inc.q);
    }
    let root0 = uf.find(0);
    if (1..n).any(|i| uf.find(i) != root0) {
        return None;
    }

    // Depth-first assembly order starting from the component that holds the
    // least edge of this piece.
    let node_edges = |i: usize| -> EdgeSubset {
        if i < p_comps.len() {
            p_comps[i]
        } else {
            q_comps[i - p_comps.len()]
        }
    };
    let first_edge = comp_edges.iter().next().unwrap();
    let start = (0..n)
        .find(|&i| node_edges(i).contains(first_edge))
        .unwrap();
    let mut sequence = Vec::new();
    let mut visited = vec![false; n];
    let mut stack = vec![(start, None::<VertexId>)];
    while let Some((node, anchor)) = stack.pop() {
        if visited[node] {
            continue;
        }
        visited[node] = true;
        sequence.push(SummandStep {
            edges: node_edges(node),
            side: if node < p_comps.len() {
                SideTag::P
            } else {
                SideTag::Q
            },
            anchor,
        });
        for inc in &incidences {
            let (a_node, b_node) = (inc.p, p_comps.len() + inc.q);
            if a_node == node && !visited[b_node] {
                stack.push((b_node, Some(inc.anchor)));
            } else if b_node == node && !visited[a_node] {
                stack.push((a_node, Some(inc.anchor)));
            }
        }
    }
    debug_assert!(visited.iter().all(|&v| v));

    Some(BiseparationCertificate {
        subset: *a,
        p_components: p_comps,
        q_components: q_comps,
        sequence,
    })
}

/// Components of the ribbon subgraph induced by `sub`, as edge subsets of
/// the host.
fn side_components(g: &RibbonGraph, sub: &EdgeSubset) -> Vec<EdgeSubset> {
    let mut uf = UnionFind::new(g.dart_count());
    for v in g.vertices() {
        let cycle: Vec<Dart> = g
            .vertex_cycle(v)
            .into_iter()
            .filter(|d| sub.contains(g.edge_of(*d)))
            .collect();
        for pair in cycle.windows(2) {
            uf.union(pair[0].index(), pair[1].index());
        }
    }
    for e in sub.iter() {
        let (d0, d1) = g.darts_of(e);
        uf.union(d0.index(), d1.index());
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut comps: Vec<EdgeSubset> = Vec::new();
    for e in sub.iter() {
        let r = uf.find(g.darts_of(e).0.index());
        match roots.iter().position(|&x| x == r) {
            Some(i) => comps[i].insert(e),
            None => {
                roots.push(r);
                let mut c = EdgeSubset::empty(g.edge_count());
                c.insert(e);
                comps.push(c);
            }
        }
    }
    comps
}

fn touches(g: &RibbonGraph, sub: &EdgeSubset, v: VertexId) -> bool {
    sub.iter().any(|e| {
        let (d0, d1) = g.darts_of(e);
        g.vertex_of(d0) == v || g.vertex_of(d1) == v
    })
}

/// Maps a subset of `from` onto the same labels in `to`.
pub fn lift_subset(sub: &EdgeSubset, from: &RibbonGraph, to: &RibbonGraph) -> EdgeSubset {
    let mut out = to.empty_subset();
    for e in sub.iter() {
        let t = to
            .edge_by_label(from.label(e))
            .expect("lifting a subset between graphs sharing labels");
        out.insert(t);
    }
    out
}

/// Per-prime candidate subsets for every component, lifted into the host
/// graph. `None` when some prime admits no plane-biseparation.
fn prime_choices(g: &RibbonGraph) -> Option<Vec<Vec<EdgeSubset>>> {
    let mut choices = Vec::new();
    for comp in g.split_components() {
        let primes = prime_factorization(&comp).expect("split components are connected");
        for prime in &primes.summands {
            let prime_graph = if prime.is_empty() {
                comp.clone()
            } else {
                comp.induced(prime)
            };
            let cands = biseparation_candidates_prime(&prime_graph)
                .expect("prime summands are connected and prime");
            if cands.is_empty() {
                return None;
            }
            choices.push(
                cands
                    .into_iter()
                    .map(|c| lift_subset(&c, &prime_graph, g))
                    .collect(),
            );
        }
    }
    Some(choices)
}

/// Finds a subset defining a plane-biseparation together with its
/// certificate, or proves there is none. The result is present exactly when
/// some partial dual of `G` is plane.
pub fn find_plane_biseparation(g: &RibbonGraph) -> Option<(EdgeSubset, BiseparationCertificate)> {
    if g.is_plane() {
        let empty = g.empty_subset();
        return verify_plane_biseparation(g, &empty).map(|c| (empty, c));
    }
    let choices = prime_choices(g)?;
    let mut a = g.empty_subset();
    for pair in &choices {
        a = a.union(&pair[0]);
    }
    verify_plane_biseparation(g, &a).map(|c| (a, c))
}

/// The exact set of subsets whose partial dual is plane: one choice of
/// candidate per prime summand of every component, combined freely.
pub fn enumerate_plane_subsets(g: &RibbonGraph) -> Vec<EdgeSubset> {
    let Some(choices) = prime_choices(g) else {
        return Vec::new();
    };
    let mut acc = vec![g.empty_subset()];
    for pair in &choices {
        let mut next = Vec::with_capacity(acc.len() * pair.len());
        for base in &acc {
            for c in pair {
                next.push(base.union(c));
            }
        }
        next.sort();
        next.dedup();
        acc = next;
    }
    acc.sort();
    acc.dedup();
    acc
}

/// Replaces `A` by its symmetric difference with a prime join-summand.
pub fn toggle(
    g: &RibbonGraph,
    a: &EdgeSubset,
    summand: &EdgeSubset,
) -> Result<EdgeSubset, DecompError> {
    let mut primes = Vec::new();
    for comp in g.split_components() {
        let f = prime_factorization(&comp).expect("split components are connected");
        for p in &f.summands {
            primes.push(lift_subset(p, &comp, g));
        }
    }
    if !primes.contains(summand) {
        return Err(DecompError::NotAJoinSummand);
    }
    Ok(a.symmetric_difference(summand))
}

/// True exactly when `G` is a join of plane graphs and `A` is a union of
/// join-summand edge sets; for plane `G` this coincides with `A` defining a
/// plane-biseparation.
pub fn verify_plane_join_biseparation(g: &RibbonGraph, a: &EdgeSubset) -> bool {
    for comp in g.split_components() {
        let a_c = lift_subset(&a.intersection(&comp_edges_in(g, &comp)), g, &comp);
        let primes = prime_factorization(&comp).expect("split components are connected");
        for prime in &primes.summands {
            if !prime.is_empty() && !comp.induced(prime).is_plane() {
                return false;
            }
            let i = a_c.intersection(prime);
            if !i.is_empty() && i != *prime {
                return false;
            }
        }
    }
    true
}

fn comp_edges_in(g: &RibbonGraph, comp: &RibbonGraph) -> EdgeSubset {
    let mut sub = g.empty_subset();
    for e in comp.edges() {
        sub.insert(
            g.edge_by_label(comp.label(e))
                .expect("component labels come from the host"),
        );
    }
    sub
}

/// Dual of a join-summand: for `G = H1 v H2` returns `H1 v H2*`, realized
/// as the partial dual over the summand's edges.
pub fn dual_of_join_summand(
    g: &RibbonGraph,
    summand: &EdgeSubset,
) -> Result<RibbonGraph, DecompError> {
    if summand.is_empty() {
        return Err(DecompError::TrivialSummand);
    }
    // The summand must live in one component and split it as a join there.
    let comp = g
        .split_components()
        .into_iter()
        .find(|c| {
            summand
                .iter()
                .all(|e| c.edge_by_label(g.label(e)).is_some())
        })
        .ok_or(DecompError::NotAJoinSummand)?;
    let k = lift_subset(summand, g, &comp);
    let rest = k.complement();
    if rest.is_empty() {
        return Err(DecompError::NotAJoinSummand);
    }
    let v = is_one_sum(&comp, &k, &rest)
        .map_err(|_| DecompError::NotAJoinSummand)?
        .ok_or(DecompError::NotAJoinSummand)?;
    let splits = splits_within(&comp, &comp.full_subset(), v);
    if !splits.iter().any(|(l, r)| l == &k || r == &k) {
        return Err(DecompError::NotAJoinSummand);
    }
    Ok(g.partial_dual(summand))
}

/// The equivalence generated by dual-of-a-join-summand moves on plane
/// graphs: holds exactly when `H` is a partial dual of `G` (achiral
/// comparison, signs included when present).
pub fn sim_equivalent(g: &RibbonGraph, h: &RibbonGraph) -> Result<bool, DecompError> {
    if !g.is_plane() || !h.is_plane() {
        return Err(DecompError::NotPlane);
    }
    if g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let h_code = h.canonical_code(IsoMode::Achiral);
    Ok(enumerate_plane_subsets(g)
        .iter()
        .any(|a| g.partial_dual(a).canonical_code(IsoMode::Achiral) == h_code))
}
