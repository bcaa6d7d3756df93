//! Orientable ribbon graphs as rotation systems on darts.
//!
//! A graph with `e` edges owns `2e` darts; edge `i` owns darts `2i` and
//! `2i + 1`, so the edge pairing is the fixed-point-free involution
//! `d <-> d ^ 1`. The rotation permutation stores, for every dart, the next
//! dart counter-clockwise around its vertex. Vertices are the rotation
//! cycles plus a count of isolated (dart-free) vertices. Every value is
//! immutable after construction; all operations return fresh graphs.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arrows::{Arrow, ArrowPresentation, Direction};
use crate::canon::{self, CanonicalCode, IsoMode};
use crate::subset::EdgeSubset;

#[derive(Debug, Error)]
pub enum MapError {
    #[error("label `{0}` appears {1} times, expected exactly 2")]
    BadLabelCount(String, usize),
    #[error("arrow presentation describes a non-orientable gluing")]
    NonOrientable,
    #[error("unknown edge label `{0}`")]
    UnknownLabel(String),
    #[error("invalid edge label `{0}`")]
    BadLabel(String),
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
}

/// One end of an edge. Dart `2i` and `2i + 1` are the two ends of edge `i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dart(u32);

impl Dart {
    pub fn new(i: usize) -> Self {
        Dart(i as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An edge, identified by its rank in the sorted label order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(u32);

impl EdgeId {
    pub fn new(i: usize) -> Self {
        EdgeId(i as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A vertex. Rotation-cycle vertices come first (ordered by least dart),
/// isolated vertices follow.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(i: usize) -> Self {
        VertexId(i as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> String {
        format!("v{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// Which kind of boundary arc a walk step runs along.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WalkSide {
    /// Past the attachment arc of a dart whose edge is absent from the
    /// spanning subgraph.
    Vertex,
    /// Along one side of an edge ribbon present in the spanning subgraph,
    /// from this dart's end to its partner's end.
    Edge,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundaryStep {
    pub dart: Dart,
    pub side: WalkSide,
}

/// One boundary component of a spanning ribbon subgraph, as the cyclic
/// sequence of arcs it runs along. Isolated vertices contribute walks with
/// no steps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryWalk {
    pub steps: Vec<BoundaryStep>,
}

impl BoundaryWalk {
    pub fn min_dart(&self) -> Option<Dart> {
        self.steps.iter().map(|s| s.dart).min()
    }
}

/// A connected component, as vertex and edge id lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug)]
pub struct RibbonGraph {
    /// Next dart counter-clockwise around the vertex.
    rotation: Vec<Dart>,
    rotation_inv: Vec<Dart>,
    vertex_of_dart: Vec<VertexId>,
    /// Least dart of each rotation cycle, ascending.
    vertex_roots: Vec<Dart>,
    /// Edge labels, strictly ascending; `EdgeId` is the rank in this list.
    labels: Vec<String>,
    signs: Vec<Option<Sign>>,
    isolated: usize,
}

/// Labels `a`, `b`, ... for generated graphs; falls back to a zero-padded
/// scheme that still sorts in construction order when there are more than
/// 26 edges.
pub fn auto_labels(edge_count: usize) -> Vec<String> {
    if edge_count <= 26 {
        (0..edge_count)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (0..edge_count).map(|i| format!("e{i:03}")).collect()
    }
}

pub fn valid_label(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RibbonGraph {
    /// Builds a graph from explicit rotation cycles over darts `0..2e`
    /// (edge `i` owns darts `2i` and `2i + 1`). Labels must be strictly
    /// ascending so that edge ids agree with sorted label order.
    pub fn from_rotation_cycles(
        edge_count: usize,
        cycles: &[Vec<usize>],
        labels: Vec<String>,
        signs: Vec<Option<Sign>>,
        isolated: usize,
    ) -> Result<Self, MapError> {
        let dart_count = 2 * edge_count;
        if edge_count > 64 {
            return Err(MapError::InvalidRotation(format!(
                "{edge_count} edges exceed the 64-edge subset word"
            )));
        }
        if labels.len() != edge_count || signs.len() != edge_count {
            return Err(MapError::InvalidRotation(
                "label/sign count mismatch".into(),
            ));
        }
        for w in labels.windows(2) {
            if w[0] >= w[1] {
                return Err(MapError::InvalidRotation(format!(
                    "labels not strictly ascending: `{}` then `{}`",
                    w[0], w[1]
                )));
            }
        }
        for l in &labels {
            if !valid_label(l) {
                return Err(MapError::BadLabel(l.clone()));
            }
        }
        let mut seen = vec![false; dart_count];
        for cycle in cycles {
            if cycle.is_empty() {
                return Err(MapError::InvalidRotation("empty rotation cycle".into()));
            }
            for &d in cycle {
                if d >= dart_count || seen[d] {
                    return Err(MapError::InvalidRotation(format!(
                        "dart {d} missing, repeated, or out of range"
                    )));
                }
                seen[d] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(MapError::InvalidRotation("not all darts placed".into()));
        }

        let mut order: Vec<usize> = (0..cycles.len()).collect();
        order.sort_by_key(|&c| cycles[c].iter().min().copied());

        let mut rotation = vec![Dart(0); dart_count];
        let mut rotation_inv = vec![Dart(0); dart_count];
        let mut vertex_of_dart = vec![VertexId(0); dart_count];
        let mut vertex_roots = Vec::with_capacity(cycles.len());
        for (v, &c) in order.iter().enumerate() {
            let cycle = &cycles[c];
            vertex_roots.push(Dart::new(*cycle.iter().min().unwrap()));
            for (i, &d) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                rotation[d] = Dart::new(next);
                rotation_inv[next] = Dart::new(d);
                vertex_of_dart[d] = VertexId::new(v);
            }
        }

        Ok(RibbonGraph {
            rotation,
            rotation_inv,
            vertex_of_dart,
            vertex_roots,
            labels,
            signs,
            isolated,
        })
    }

    /// The graph with no darts and `isolated` bare vertices.
    pub fn edgeless(isolated: usize) -> Self {
        RibbonGraph {
            rotation: Vec::new(),
            rotation_inv: Vec::new(),
            vertex_of_dart: Vec::new(),
            vertex_roots: Vec::new(),
            labels: Vec::new(),
            signs: Vec::new(),
            isolated,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn dart_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_roots.len() + self.isolated
    }

    pub fn isolated_vertex_count(&self) -> usize {
        self.isolated
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.dart_count()).map(Dart::new)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edge_count()).map(EdgeId::new)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId::new)
    }

    pub fn next_at_vertex(&self, d: Dart) -> Dart {
        self.rotation[d.index()]
    }

    pub fn prev_at_vertex(&self, d: Dart) -> Dart {
        self.rotation_inv[d.index()]
    }

    pub fn partner(&self, d: Dart) -> Dart {
        Dart(d.0 ^ 1)
    }

    pub fn edge_of(&self, d: Dart) -> EdgeId {
        EdgeId(d.0 / 2)
    }

    pub fn darts_of(&self, e: EdgeId) -> (Dart, Dart) {
        (Dart(e.0 * 2), Dart(e.0 * 2 + 1))
    }

    pub fn vertex_of(&self, d: Dart) -> VertexId {
        self.vertex_of_dart[d.index()]
    }

    pub fn label(&self, e: EdgeId) -> &str {
        &self.labels[e.index()]
    }

    pub fn sign(&self, e: EdgeId) -> Option<Sign> {
        self.signs[e.index()]
    }

    pub fn signs(&self) -> &[Option<Sign>] {
        &self.signs
    }

    pub fn fully_signed(&self) -> bool {
        self.signs.iter().all(|s| s.is_some())
    }

    pub fn edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
            .map(EdgeId::new)
    }

    /// The rotation cycle at a vertex, starting from its least dart.
    /// Isolated vertices yield an empty cycle.
    pub fn vertex_cycle(&self, v: VertexId) -> Vec<Dart> {
        if v.index() >= self.vertex_roots.len() {
            return Vec::new();
        }
        let root = self.vertex_roots[v.index()];
        let mut cycle = vec![root];
        let mut d = self.next_at_vertex(root);
        while d != root {
            cycle.push(d);
            d = self.next_at_vertex(d);
        }
        cycle
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertex_cycle(v).len()
    }

    pub fn empty_subset(&self) -> EdgeSubset {
        EdgeSubset::empty(self.edge_count())
    }

    pub fn full_subset(&self) -> EdgeSubset {
        EdgeSubset::full(self.edge_count())
    }

    pub fn subset_of<I, S>(&self, labels: I) -> Result<EdgeSubset, MapError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut sub = self.empty_subset();
        for l in labels {
            let l = l.as_ref();
            let e = self
                .edge_by_label(l)
                .ok_or_else(|| MapError::UnknownLabel(l.to_string()))?;
            sub.insert(e);
        }
        Ok(sub)
    }

    pub fn subset_labels(&self, sub: &EdgeSubset) -> Vec<&str> {
        self.check_subset(sub);
        sub.iter().map(|e| self.label(e)).collect()
    }

    fn check_subset(&self, sub: &EdgeSubset) {
        assert_eq!(
            sub.universe(),
            self.edge_count(),
            "subset from a different host graph"
        );
    }

    /// Replaces the sign assignment wholesale; labels absent from the map
    /// become unsigned.
    pub fn with_signs(&self, signs: &BTreeMap<String, Sign>) -> Result<Self, MapError> {
        let mut out = self.clone();
        out.signs = vec![None; self.edge_count()];
        for (l, s) in signs {
            let e = self
                .edge_by_label(l)
                .ok_or_else(|| MapError::UnknownLabel(l.clone()))?;
            out.signs[e.index()] = Some(*s);
        }
        Ok(out)
    }

    pub fn unsigned(&self) -> Self {
        let mut out = self.clone();
        out.signs = vec![None; self.edge_count()];
        out
    }

    /// The same surface with the opposite orientation: every rotation cycle
    /// reversed.
    pub fn mirrored(&self) -> Self {
        let cycles: Vec<Vec<usize>> = (0..self.vertex_roots.len())
            .map(|v| {
                let mut c: Vec<usize> = self
                    .vertex_cycle(VertexId::new(v))
                    .iter()
                    .map(|d| d.index())
                    .collect();
                c.reverse();
                c
            })
            .collect();
        RibbonGraph::from_rotation_cycles(
            self.edge_count(),
            &cycles,
            self.labels.clone(),
            self.signs.clone(),
            self.isolated,
        )
        .expect("reversing rotation cycles keeps the system valid")
    }

    /// Boundary components of the spanning ribbon subgraph `(V, A)`, traced
    /// inside the full graph. Walks are keyed by their least dart and listed
    /// in that order; isolated vertices contribute trailing empty walks.
    pub fn boundary_walks(&self, a: &EdgeSubset) -> Vec<BoundaryWalk> {
        self.check_subset(a);
        // Arrival permutation: after running past dart p, the walk next
        // arrives at sigma(alpha(p)) when p's edge is in the subgraph
        // (crossing the ribbon), else at sigma(p).
        let next = |p: Dart| {
            if a.contains(self.edge_of(p)) {
                self.next_at_vertex(self.partner(p))
            } else {
                self.next_at_vertex(p)
            }
        };
        let mut walks = Vec::new();
        let mut seen = vec![false; self.dart_count()];
        for start in self.darts() {
            if seen[start.index()] {
                continue;
            }
            let mut steps = Vec::new();
            let mut p = start;
            loop {
                seen[p.index()] = true;
                let side = if a.contains(self.edge_of(p)) {
                    WalkSide::Edge
                } else {
                    WalkSide::Vertex
                };
                steps.push(BoundaryStep { dart: p, side });
                p = next(p);
                if p == start {
                    break;
                }
            }
            walks.push(BoundaryWalk { steps });
        }
        for _ in 0..self.isolated {
            walks.push(BoundaryWalk { steps: Vec::new() });
        }
        walks
    }

    /// Per-component genus, components ordered as in [`Self::components`],
    /// followed by the total.
    pub fn genus_per_component(&self) -> Vec<usize> {
        let comps = self.components();
        let comp_of_dart: Vec<usize> = {
            let mut m = vec![usize::MAX; self.dart_count()];
            for (ci, c) in comps.iter().enumerate() {
                for &v in &c.vertices {
                    for d in self.vertex_cycle(v) {
                        m[d.index()] = ci;
                    }
                }
            }
            m
        };
        let mut faces = vec![0usize; comps.len()];
        for w in self.boundary_walks(&self.full_subset()) {
            if let Some(d) = w.min_dart() {
                faces[comp_of_dart[d.index()]] += 1;
            }
        }
        comps
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                if c.edges.is_empty() {
                    return 0;
                }
                let v = c.vertices.len();
                let e = c.edges.len();
                let f = faces[ci];
                let chi = 2 + e - v - f;
                debug_assert!(chi % 2 == 0, "odd Euler defect on an orientable component");
                chi / 2
            })
            .collect()
    }

    pub fn genus(&self) -> usize {
        self.genus_per_component().iter().sum()
    }

    pub fn is_plane(&self) -> bool {
        self.genus() == 0
    }

    /// Connected components, ordered by least dart; isolated vertices come
    /// last, one component each.
    pub fn components(&self) -> Vec<Component> {
        let n = self.dart_count();
        let mut uf = UnionFind::new(n);
        for d in 0..n {
            uf.union(d, self.rotation[d].index());
            uf.union(d, d ^ 1);
        }
        let mut by_root: BTreeMap<usize, Component> = BTreeMap::new();
        for v in 0..self.vertex_roots.len() {
            let root = uf.find(self.vertex_roots[v].index());
            by_root.entry(root).or_insert_with(|| Component {
                vertices: Vec::new(),
                edges: Vec::new(),
            });
        }
        for (v, r) in self.vertex_roots.iter().enumerate() {
            by_root
                .get_mut(&uf.find(r.index()))
                .unwrap()
                .vertices
                .push(VertexId::new(v));
        }
        for e in 0..self.edge_count() {
            by_root
                .get_mut(&uf.find(2 * e))
                .unwrap()
                .edges
                .push(EdgeId::new(e));
        }
        let mut comps: Vec<Component> = by_root.into_values().collect();
        for i in 0..self.isolated {
            comps.push(Component {
                vertices: vec![VertexId::new(self.vertex_roots.len() + i)],
                edges: Vec::new(),
            });
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// One standalone graph per component, in [`Self::components`] order.
    /// Edge labels carry over unchanged.
    pub fn split_components(&self) -> Vec<RibbonGraph> {
        self.components()
            .into_iter()
            .map(|c| {
                if c.edges.is_empty() {
                    RibbonGraph::edgeless(1)
                } else {
                    let mut sub = self.empty_subset();
                    for e in c.edges {
                        sub.insert(e);
                    }
                    self.induced(&sub)
                }
            })
            .collect()
    }

    /// The ribbon subgraph induced by `A`: the edges of `A` plus their
    /// incident vertices, with the inherited rotation. Vertices with no
    /// incident `A`-edge (including isolated ones) are dropped.
    pub fn induced(&self, a: &EdgeSubset) -> RibbonGraph {
        self.check_subset(a);
        let kept: Vec<EdgeId> = a.iter().collect();
        let mut new_dart = vec![usize::MAX; self.dart_count()];
        let mut labels = Vec::with_capacity(kept.len());
        let mut signs = Vec::with_capacity(kept.len());
        for (j, &e) in kept.iter().enumerate() {
            let (d0, d1) = self.darts_of(e);
            new_dart[d0.index()] = 2 * j;
            new_dart[d1.index()] = 2 * j + 1;
            labels.push(self.label(e).to_string());
            signs.push(self.sign(e));
        }
        let mut cycles = Vec::new();
        for v in 0..self.vertex_roots.len() {
            let cycle: Vec<usize> = self
                .vertex_cycle(VertexId::new(v))
                .into_iter()
                .filter(|d| new_dart[d.index()] != usize::MAX)
                .map(|d| new_dart[d.index()])
                .collect();
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        RibbonGraph::from_rotation_cycles(kept.len(), &cycles, labels, signs, 0)
            .expect("induced subgraph inherits a valid rotation system")
    }

    /// The partial dual with respect to `A`: the boundary walks of `(V, A)`
    /// marked with one labelled arrow per arc become the new vertices. In
    /// permutation form the walk sends `d` to `alpha(sigma(d))` when the
    /// next dart's edge lies in `A` and to `sigma(d)` otherwise; darts and
    /// the edge pairing stay fixed. A component keeping some edge outside
    /// `A` inherits its orientation from the surviving vertex arcs; a
    /// component dualized wholesale is capped from the far side, which
    /// reverses every one of its walks. Signs flip exactly on `A`.
    pub fn partial_dual(&self, a: &EdgeSubset) -> RibbonGraph {
        self.check_subset(a);
        let comps = self.components();
        let mut comp_anchored = vec![false; comps.len()];
        let mut comp_of_edge = vec![usize::MAX; self.edge_count()];
        for (i, comp) in comps.iter().enumerate() {
            for &e in &comp.edges {
                comp_of_edge[e.index()] = i;
                comp_anchored[i] |= !a.contains(e);
            }
        }
        let tau = |d: Dart| {
            let s = self.next_at_vertex(d);
            if a.contains(self.edge_of(s)) {
                self.partner(s)
            } else {
                s
            }
        };
        let mut cycles = Vec::new();
        let mut seen = vec![false; self.dart_count()];
        for start in self.darts() {
            if seen[start.index()] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                seen[d.index()] = true;
                cycle.push(d.index());
                d = tau(d);
                if d == start {
                    break;
                }
            }
            if !comp_anchored[comp_of_edge[self.edge_of(start).index()]] {
                cycle.reverse();
            }
            cycles.push(cycle);
        }
        let signs = self
            .edges()
            .map(|e| {
                let s = self.sign(e);
                if a.contains(e) {
                    s.map(Sign::flipped)
                } else {
                    s
                }
            })
            .collect();
        RibbonGraph::from_rotation_cycles(
            self.edge_count(),
            &cycles,
            self.labels.clone(),
            signs,
            self.isolated,
        )
        .expect("partial duality permutes the same darts")
    }

    /// The geometric dual: the partial dual over the whole edge set.
    pub fn geometric_dual(&self) -> RibbonGraph {
        self.partial_dual(&self.full_subset())
    }

    /// Reassembles a ribbon graph from marked circles. Fails when a label
    /// does not appear exactly twice or the gluing the directions describe
    /// is non-orientable.
    pub fn from_arrows(ap: &ArrowPresentation) -> Result<Self, MapError> {
        // occurrences[label] = [(circle, position, direction); 2]
        let mut occurrences: BTreeMap<&str, Vec<(usize, usize, Direction)>> = BTreeMap::new();
        for (c, circle) in ap.circles.iter().enumerate() {
            for (p, arrow) in circle.iter().enumerate() {
                if !valid_label(&arrow.label) {
                    return Err(MapError::BadLabel(arrow.label.clone()));
                }
                occurrences
                    .entry(&arrow.label)
                    .or_default()
                    .push((c, p, arrow.direction));
            }
        }
        for (l, occ) in &occurrences {
            if occ.len() != 2 {
                return Err(MapError::BadLabelCount(l.to_string(), occ.len()));
            }
        }

        // Pick a traversal direction for every circle so that, after the
        // implied label reversals, both arrows of each label agree with
        // their circles' directions. Failure means the gluing is twisted.
        let mut flip: Vec<Option<bool>> = vec![None; ap.circles.len()];
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); ap.circles.len()];
        for occ in occurrences.values() {
            let (c1, _, d1) = occ[0];
            let (c2, _, d2) = occ[1];
            if c1 == c2 {
                if d1 != d2 {
                    return Err(MapError::NonOrientable);
                }
            } else {
                let opposite = d1 != d2;
                adj[c1].push((c2, opposite));
                adj[c2].push((c1, opposite));
            }
        }
        for start in 0..ap.circles.len() {
            if flip[start].is_some() {
                continue;
            }
            flip[start] = Some(false);
            let mut queue = vec![start];
            while let Some(c) = queue.pop() {
                let fc = flip[c].unwrap();
                for &(n, opposite) in &adj[c] {
                    let want = fc ^ opposite;
                    match flip[n] {
                        None => {
                            flip[n] = Some(want);
                            queue.push(n);
                        }
                        Some(f) if f != want => return Err(MapError::NonOrientable),
                        _ => {}
                    }
                }
            }
        }

        let normalized: Vec<Vec<&str>> = ap
            .circles
            .iter()
            .enumerate()
            .map(|(c, circle)| {
                let mut labels: Vec<&str> = circle.iter().map(|a| a.label.as_str()).collect();
                if flip[c] == Some(true) {
                    labels.reverse();
                }
                labels
            })
            .collect();

        let labels: Vec<String> = occurrences.keys().map(|l| l.to_string()).collect();
        let edge_id: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut next_dart: BTreeMap<&str, usize> = BTreeMap::new();
        let mut cycles = Vec::new();
        let mut isolated = 0usize;
        for circle in &normalized {
            if circle.is_empty() {
                isolated += 1;
                continue;
            }
            let cycle: Vec<usize> = circle
                .iter()
                .map(|l| {
                    let slot = next_dart.entry(l).or_insert(0);
                    let d = 2 * edge_id[l] + *slot;
                    *slot += 1;
                    d
                })
                .collect();
            cycles.push(cycle);
        }

        let mut signs = vec![None; labels.len()];
        for (l, s) in &ap.signs {
            let &e = edge_id
                .get(l.as_str())
                .ok_or_else(|| MapError::UnknownLabel(l.clone()))?;
            signs[e] = Some(*s);
        }
        RibbonGraph::from_rotation_cycles(labels.len(), &cycles, labels, signs, isolated)
    }

    /// Reads the graph back off as marked circles: one circle per vertex in
    /// rotation order, every arrow forward.
    pub fn to_arrows(&self) -> ArrowPresentation {
        let mut circles = Vec::new();
        for v in 0..self.vertex_roots.len() {
            circles.push(
                self.vertex_cycle(VertexId::new(v))
                    .into_iter()
                    .map(|d| Arrow {
                        label: self.label(self.edge_of(d)).to_string(),
                        direction: Direction::Forward,
                    })
                    .collect(),
            );
        }
        for _ in 0..self.isolated {
            circles.push(Vec::new());
        }
        let mut signs = BTreeMap::new();
        for e in self.edges() {
            if let Some(s) = self.sign(e) {
                signs.insert(self.label(e).to_string(), s);
            }
        }
        ArrowPresentation { circles, signs }
    }

    /// Canonical form code: equal codes iff the graphs are isomorphic in the
    /// requested mode (achiral also admits orientation reversal), signs
    /// included, labels ignored.
    pub fn canonical_code(&self, mode: IsoMode) -> CanonicalCode {
        let sigma: Vec<u32> = self.rotation.iter().map(|d| d.0).collect();
        let sigma_inv: Vec<u32> = self.rotation_inv.iter().map(|d| d.0).collect();
        let alpha: Vec<u32> = (0..self.dart_count() as u32).map(|d| d ^ 1).collect();
        let tag: Vec<u32> = (0..self.dart_count())
            .map(|d| match self.signs[d / 2] {
                None => 0,
                Some(Sign::Plus) => 1,
                Some(Sign::Minus) => 2,
            })
            .collect();
        canon::map_code(&sigma, &sigma_inv, &alpha, &tag, self.isolated, mode)
    }

    pub fn isomorphic(&self, other: &RibbonGraph, mode: IsoMode) -> bool {
        self.canonical_code(mode) == other.canonical_code(mode)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrows::tests::circle;

    /// Single loop bounding a disc: one circle `(a a)`.
    pub fn loop_graph() -> RibbonGraph {
        RibbonGraph::from_arrows(&ArrowPresentation {
            circles: vec![circle(&["a", "a"])],
            signs: BTreeMap::new(),
        })
        .unwrap()
    }

    /// Interlaced two-loop bouquet `(a b a b)`, genus one.
    pub fn bouquet_interlaced() -> RibbonGraph {
        RibbonGraph::from_arrows(&ArrowPresentation {
            circles: vec![circle(&["a", "b", "a", "b"])],
            signs: BTreeMap::new(),
        })
        .unwrap()
    }

    /// Nested two-loop bouquet `(a a b b)`, plane.
    pub fn bouquet_nested() -> RibbonGraph {
        RibbonGraph::from_arrows(&ArrowPresentation {
            circles: vec![circle(&["a", "a", "b", "b"])],
            signs: BTreeMap::new(),
        })
        .unwrap()
    }

    /// Triple interlaced bouquet `(a b c a b c)`.
    pub fn bouquet_triple() -> RibbonGraph {
        RibbonGraph::from_arrows(&ArrowPresentation {
            circles: vec![circle(&["a", "b", "c", "a", "b", "c"])],
            signs: BTreeMap::new(),
        })
        .unwrap()
    }

    #[test]
    fn loop_from_arrows() {
        let g = loop_graph();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.genus(), 0);
    }

    #[test]
    fn interlaced_bouquet_has_genus_one() {
        let g = bouquet_interlaced();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.genus(), 1);
    }

    #[test]
    fn nested_bouquet_is_plane() {
        let g = bouquet_nested();
        assert_eq!(g.genus(), 0);
        assert_eq!(g.boundary_walks(&g.full_subset()).len(), 3);
    }

    #[test]
    fn single_occurrence_label_is_rejected() {
        let err = RibbonGraph::from_arrows(&ArrowPresentation {
            circles: vec![circle(&["a"])],
            signs: BTreeMap::new(),
        })
        .unwrap_err();
        assert!(matches!(err, MapError::BadLabelCount(l, 1) if l == "a"));
    }

    #[test]
    fn twisted_gluing_is_rejected() {
        // Both arrows of `a` on one circle with opposite written directions.
        let ap = ArrowPresentation {
            circles: vec![vec![
                Arrow {
                    label: "a".into(),
                    direction: Direction::Forward,
                },
                Arrow {
                    label: "a".into(),
                    direction: Direction::Backward,
                },
            ]],
            signs: BTreeMap::new(),
        };
        assert!(matches!(
            RibbonGraph::from_arrows(&ap),
            Err(MapError::NonOrientable)
        ));
    }

    #[test]
    fn cross_circle_direction_mismatch_is_normalized() {
        // One forward and one backward arrow on different circles is the
        // same bridge as forward/forward: the second circle flips.
        let ap = ArrowPresentation {
            circles: vec![
                vec![Arrow {
                    label: "a".into(),
                    direction: Direction::Forward,
                }],
                vec![Arrow {
                    label: "a".into(),
                    direction: Direction::Backward,
                }],
            ],
            signs: BTreeMap::new(),
        };
        let g = RibbonGraph::from_arrows(&ap).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.genus(), 0);
    }

    #[test]
    fn boundary_walk_counts() {
        let l = loop_graph();
        assert_eq!(l.boundary_walks(&l.empty_subset()).len(), 1);
        let b2 = bouquet_interlaced();
        assert_eq!(b2.boundary_walks(&b2.full_subset()).len(), 1);
        let a = b2.subset_of(["a"]).unwrap();
        assert_eq!(b2.boundary_walks(&a).len(), 2);
    }

    #[test]
    fn walks_are_keyed_by_least_dart() {
        let b2 = bouquet_interlaced();
        let walks = b2.boundary_walks(&b2.subset_of(["a"]).unwrap());
        let keys: Vec<_> = walks.iter().map(|w| w.min_dart().unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn geometric_dual_of_loop_is_bridge() {
        let d = loop_graph().geometric_dual();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.edge_count(), 1);
        assert_eq!(d.genus(), 0);
    }

    #[test]
    fn geometric_dual_preserves_genus_and_involutes() {
        for g in [
            loop_graph(),
            bouquet_interlaced(),
            bouquet_nested(),
            bouquet_triple(),
        ] {
            let d = g.geometric_dual();
            assert_eq!(d.genus(), g.genus());
            assert_eq!(
                d.vertex_count(),
                g.boundary_walks(&g.full_subset()).len(),
                "dual vertices are boundary components"
            );
            assert!(d.geometric_dual().isomorphic(&g, IsoMode::Chiral));
        }
    }

    #[test]
    fn dual_flips_signs() {
        let g = loop_graph()
            .with_signs(&[("a".to_string(), Sign::Plus)].into())
            .unwrap();
        let d = g.geometric_dual();
        assert_eq!(d.sign(EdgeId::new(0)), Some(Sign::Minus));
    }

    #[test]
    fn partial_dual_of_empty_set_is_identity() {
        for g in [
            loop_graph(),
            bouquet_interlaced(),
            bouquet_nested(),
            bouquet_triple(),
        ] {
            assert!(g
                .partial_dual(&g.empty_subset())
                .isomorphic(&g, IsoMode::Chiral));
        }
    }

    #[test]
    fn partial_dual_of_interlaced_bouquet_at_one_edge() {
        let b2 = bouquet_interlaced();
        let g = b2.partial_dual(&b2.subset_of(["a"]).unwrap());
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.genus(), 0);
    }

    #[test]
    fn partial_dual_flips_signs_exactly_on_the_subset() {
        let b2 = bouquet_interlaced()
            .with_signs(&[("a".to_string(), Sign::Plus), ("b".to_string(), Sign::Plus)].into())
            .unwrap();
        let a = b2.subset_of(["a"]).unwrap();
        let g = b2.partial_dual(&a);
        assert_eq!(g.sign(g.edge_by_label("a").unwrap()), Some(Sign::Minus));
        assert_eq!(g.sign(g.edge_by_label("b").unwrap()), Some(Sign::Plus));
    }

    #[test]
    fn induced_subgraphs() {
        let b2 = bouquet_interlaced();
        let l = b2.induced(&b2.subset_of(["a"]).unwrap());
        assert!(l.isomorphic(&loop_graph(), IsoMode::Chiral));
        let n2 = bouquet_nested();
        let l2 = n2.induced(&n2.subset_of(["a"]).unwrap());
        assert!(l2.isomorphic(&loop_graph(), IsoMode::Chiral));
        // Inducing on everything drops only isolated vertices.
        let mut g = bouquet_nested();
        g.isolated = 2;
        let f = g.full_subset();
        assert_eq!(g.induced(&f).vertex_count(), 1);
    }

    #[test]
    fn components_and_split() {
        let two_loops = RibbonGraph::from_arrows(&ArrowPresentation {
            circles: vec![circle(&["a", "a"]), circle(&["b", "b"])],
            signs: BTreeMap::new(),
        })
        .unwrap();
        assert_eq!(two_loops.components().len(), 2);
        assert_eq!(bouquet_interlaced().components().len(), 1);
        assert_eq!(RibbonGraph::edgeless(0).components().len(), 0);
        let parts = two_loops.split_components();
        assert!(parts
            .iter()
            .all(|p| p.isomorphic(&loop_graph(), IsoMode::Chiral)));
    }

    #[test]
    fn arrows_round_trip() {
        for g in [
            loop_graph(),
            bouquet_interlaced(),
            bouquet_nested(),
            bouquet_triple(),
        ] {
            let back = RibbonGraph::from_arrows(&g.to_arrows()).unwrap();
            assert!(back.isomorphic(&g, IsoMode::Chiral));
        }
    }

    #[test]
    fn presentation_round_trip() {
        // The opposite composition is the identity on presentation keys.
        let ap = ArrowPresentation {
            circles: vec![
                circle(&["a", "b"]),
                circle(&["b", "c"]),
                circle(&["c", "a"]),
            ],
            signs: BTreeMap::new(),
        };
        let back = RibbonGraph::from_arrows(&ap).unwrap().to_arrows();
        assert_eq!(ap.canonical_key().unwrap(), back.canonical_key().unwrap());
    }

    #[test]
    fn components_map_to_circles() {
        let two_part = RibbonGraph::from_arrows(&ArrowPresentation {
            circles: vec![
                circle(&["a", "a"]),
                circle(&["b", "c"]),
                circle(&["c", "b"]),
            ],
            signs: BTreeMap::new(),
        })
        .unwrap();
        assert_eq!(two_part.components().len(), 2);
        assert_eq!(two_part.to_arrows().circles.len(), 3);
    }

    #[test]
    fn oversized_graphs_are_rejected() {
        let labels = (0..65).map(|i| format!("e{i:03}")).collect::<Vec<_>>();
        let cycles: Vec<Vec<usize>> = (0..65).map(|i| vec![2 * i, 2 * i + 1]).collect();
        let err =
            RibbonGraph::from_rotation_cycles(65, &cycles, labels, vec![None; 65], 0).unwrap_err();
        assert!(matches!(err, MapError::InvalidRotation(_)));
    }

    #[test]
    fn codes_are_relabeling_invariant() {
        let b2 = bouquet_interlaced();
        let relabeled = RibbonGraph::from_arrows(&ArrowPresentation {
            circles: vec![circle(&["x", "y", "x", "y"])],
            signs: BTreeMap::new(),
        })
        .unwrap();
        assert_eq!(
            b2.canonical_code(IsoMode::Chiral),
            relabeled.canonical_code(IsoMode::Chiral)
        );
    }

    #[test]
    fn interlaced_bouquet_is_amphichiral() {
        let b2 = bouquet_interlaced();
        assert_eq!(
            b2.canonical_code(IsoMode::Chiral),
            b2.mirrored().canonical_code(IsoMode::Chiral)
        );
    }

    #[test]
    fn codes_separate_disjoint_unions() {
        let join = |g: &RibbonGraph, h: &RibbonGraph| {
            let mut circles = g.to_arrows().circles;
            for c in h.to_arrows().circles {
                circles.push(
                    c.into_iter()
                        .map(|a| Arrow {
                            label: format!("z_{}", a.label),
                            direction: a.direction,
                        })
                        .collect(),
                );
            }
            RibbonGraph::from_arrows(&ArrowPresentation {
                circles,
                signs: BTreeMap::new(),
            })
            .unwrap()
        };
        let l = loop_graph();
        let a = join(&l, &bouquet_interlaced());
        let b = join(&l, &bouquet_nested());
        assert_ne!(
            a.canonical_code(IsoMode::Achiral),
            b.canonical_code(IsoMode::Achiral)
        );
    }

    #[test]
    fn signed_codes_distinguish_signs() {
        let plus = loop_graph()
            .with_signs(&[("a".to_string(), Sign::Plus)].into())
            .unwrap();
        let minus = loop_graph()
            .with_signs(&[("a".to_string(), Sign::Minus)].into())
            .unwrap();
        assert_ne!(
            plus.canonical_code(IsoMode::Chiral),
            minus.canonical_code(IsoMode::Chiral)
        );
        assert_ne!(
            plus.canonical_code(IsoMode::Chiral),
            loop_graph().canonical_code(IsoMode::Chiral)
        );
    }
}
