//! Link diagrams as 4-valent genus-zero maps with over/under data, and the
//! constructions tying them to ribbon graphs: checkerboard colourings, Tait
//! graphs, state ribbon graphs, diagram reconstruction from signed plane
//! graphs, summand flips, and the shared-graph equivalence of diagrams.
//!
//! Diagram darts are crossing ends, `4 * crossing + slot` with slots listed
//! counter-clockwise. The corner after slot `s` is the sector between ends
//! `s` and `s + 1`; faces are traced over corners. Crossingless circle
//! components are carried as a bare count.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canon::{self, CanonicalCode, IsoMode};
use crate::decomp;
use crate::map::{RibbonGraph, Sign, UnionFind};

/// Crossing budget for state enumeration and related 2^n sweeps.
pub const MAX_STATE_CROSSINGS: usize = 20;

#[derive(Debug, Error)]
pub enum LinkError {
    #[error("PD parse error: {0}")]
    Pd(String),
    #[error("strand label `{0}` appears {1} times, expected exactly 2")]
    BadStrandCount(String, usize),
    #[error("diagram map is not planar (genus {0})")]
    NotPlanar(usize),
    #[error("faces admit no checkerboard colouring")]
    NotCheckerboard,
    #[error("every edge must carry a sign")]
    MissingSigns,
    #[error("graph is not plane")]
    NotPlane,
    #[error("unknown strand `{0}`")]
    UnknownStrand(String),
    #[error("cut does not separate the diagram into two sides")]
    InvalidCut,
    #[error("too many crossings: {0} (limit {1})")]
    TooLarge(usize, usize),
    #[error(transparent)]
    Map(#[from] crate::map::MapError),
}

/// Which opposite pair of the counter-clockwise end list forms the
/// over-strand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OverPair {
    /// Ends 1 and 3 of the listing (slots 0 and 2).
    Slots02,
    /// Ends 2 and 4 of the listing (slots 1 and 3).
    Slots13,
}

impl OverPair {
    fn over_slot(self) -> usize {
        match self {
            OverPair::Slots02 => 0,
            OverPair::Slots13 => 1,
        }
    }

    fn toggled(self) -> OverPair {
        match self {
            OverPair::Slots02 => OverPair::Slots13,
            OverPair::Slots13 => OverPair::Slots02,
        }
    }
}

/// Sign conventions are fixed up to one global reflection the source
/// figures leave open; `Flipped` is the diagnostic switch selecting the
/// other reading everywhere at once.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Convention {
    #[default]
    Standard,
    Flipped,
}

impl Convention {
    fn apply(self, s: Sign) -> Sign {
        match self {
            Convention::Standard => s,
            Convention::Flipped => s.flipped(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpliceKind {
    A,
    B,
}

/// A state assigns one splicing to every crossing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct State(pub Vec<SpliceKind>);

impl State {
    pub fn all_a(n: usize) -> State {
        State(vec![SpliceKind::A; n])
    }

    pub fn all_b(n: usize) -> State {
        State(vec![SpliceKind::B; n])
    }

    /// Crossings where the two states choose different splicings.
    pub fn difference(&self, other: &State) -> Vec<usize> {
        assert_eq!(self.0.len(), other.0.len());
        (0..self.0.len())
            .filter(|&i| self.0[i] != other.0[i])
            .collect()
    }
}

/// A checkerboard colouring: blackness per face.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    black: Vec<bool>,
}

impl Coloring {
    pub fn is_black(&self, face: usize) -> bool {
        self.black[face]
    }

    pub fn complemented(&self) -> Coloring {
        Coloring {
            black: self.black.iter().map(|b| !b).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinkDiagram {
    /// Strand involution on crossing ends.
    pairing: Vec<u32>,
    over: Vec<OverPair>,
    strand_of: Vec<u32>,
    strand_labels: Vec<String>,
    unknots: usize,
    /// Corner orbits, ordered by least corner dart.
    faces: Vec<Vec<u32>>,
    face_of: Vec<u32>,
}

fn ccw_next(d: u32) -> u32 {
    d & !3 | (d + 1) & 3
}

fn ccw_prev(d: u32) -> u32 {
    d & !3 | (d + 3) & 3
}

impl LinkDiagram {
    /// Builds a diagram from per-crossing end labels (counter-clockwise)
    /// and over designations, pairing ends that share a label. Rejects
    /// label multiplicities other than two and maps of positive genus.
    pub fn from_crossings(
        crossings: &[([String; 4], OverPair)],
        unknots: usize,
    ) -> Result<Self, LinkError> {
        let n = crossings.len();
        let mut occurrences: BTreeMap<&str, Vec<u32>> = BTreeMap::new();
        for (c, (ends, _)) in crossings.iter().enumerate() {
            for (s, label) in ends.iter().enumerate() {
                if label.is_empty()
                    || !label
                        .chars()
                        .all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
                {
                    return Err(LinkError::Pd(format!("bad strand label `{label}`")));
                }
                occurrences
                    .entry(label)
                    .or_default()
                    .push((4 * c + s) as u32);
            }
        }
        for (l, occ) in &occurrences {
            if occ.len() != 2 {
                return Err(LinkError::BadStrandCount(l.to_string(), occ.len()));
            }
        }
        let strand_labels: Vec<String> = occurrences.keys().map(|l| l.to_string()).collect();
        let mut pairing = vec![0u32; 4 * n];
        let mut strand_of = vec![0u32; 4 * n];
        for (i, l) in strand_labels.iter().enumerate() {
            let occ = &occurrences[l.as_str()];
            pairing[occ[0] as usize] = occ[1];
            pairing[occ[1] as usize] = occ[0];
            strand_of[occ[0] as usize] = i as u32;
            strand_of[occ[1] as usize] = i as u32;
        }
        let over: Vec<OverPair> = crossings.iter().map(|(_, o)| *o).collect();

        // Face trace over corners; then the per-component genus check.
        let mut faces = Vec::new();
        let mut face_of = vec![u32::MAX; 4 * n];
        for start in 0..4 * n as u32 {
            if face_of[start as usize] != u32::MAX {
                continue;
            }
            let id = faces.len() as u32;
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                face_of[d as usize] = id;
                orbit.push(d);
                d = pairing[ccw_next(d) as usize];
                if d == start {
                    break;
                }
            }
            faces.push(orbit);
        }
        let diagram = LinkDiagram {
            pairing,
            over,
            strand_of,
            strand_labels,
            unknots,
            faces,
            face_of,
        };
        let genus = diagram.genus();
        if genus > 0 {
            return Err(LinkError::NotPlanar(genus));
        }
        Ok(diagram)
    }

    /// Parses PD text: tokens `X(i,j,k,l)` (or `X[i,j,k,l]`) listing the
    /// four strand labels counter-clockwise from the incoming under-strand,
    /// so the over-strand occupies the second and fourth positions.
    pub fn parse_pd(text: &str) -> Result<Self, LinkError> {
        let mut crossings = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let start = match rest.find(['X', 'x']) {
                Some(i) => i,
                None => {
                    if rest
                        .chars()
                        .all(|c| c.is_whitespace() || c == ',' || c == ';')
                    {
                        break;
                    }
                    return Err(LinkError::Pd(format!("unexpected input near `{rest}`")));
                }
            };
            if rest[..start]
                .chars()
                .any(|c| !c.is_whitespace() && c != ',' && c != ';')
            {
                return Err(LinkError::Pd(format!("unexpected input near `{rest}`")));
            }
            rest = &rest[start + 1..];
            let (open, close) = match rest.chars().next() {
                Some('(') => ('(', ')'),
                Some('[') => ('[', ']'),
                _ => return Err(LinkError::Pd("expected `(` or `[` after X".into())),
            };
            rest = &rest[open.len_utf8()..];
            let end = rest
                .find(close)
                .ok_or_else(|| LinkError::Pd(format!("missing `{close}`")))?;
            let inner = &rest[..end];
            rest = rest[end + 1..].trim_start();
            let labels: Vec<&str> = inner.split(',').map(str::trim).collect();
            if labels.len() != 4 || labels.iter().any(|l| l.is_empty()) {
                return Err(LinkError::Pd(format!("expected four labels in `{inner}`")));
            }
            let ends: [String; 4] = [
                labels[0].to_string(),
                labels[1].to_string(),
                labels[2].to_string(),
                labels[3].to_string(),
            ];
            crossings.push((ends, OverPair::Slots13));
        }
        if crossings.is_empty() {
            return Err(LinkError::Pd("no crossings found".into()));
        }
        Self::from_crossings(&crossings, 0)
    }

    pub fn crossing_count(&self) -> usize {
        self.over.len()
    }

    pub fn strand_count(&self) -> usize {
        self.strand_labels.len()
    }

    pub fn unknot_count(&self) -> usize {
        self.unknots
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn over_pair(&self, crossing: usize) -> OverPair {
        self.over[crossing]
    }

    pub fn strand_label(&self, strand: usize) -> &str {
        &self.strand_labels[strand]
    }

    pub fn end_labels(&self, crossing: usize) -> [&str; 4] {
        let mut out = [""; 4];
        for s in 0..4 {
            out[s] = &self.strand_labels[self.strand_of[4 * crossing + s] as usize];
        }
        out
    }

    /// Genus of the underlying 4-valent map, summed over components.
    pub fn genus(&self) -> usize {
        let n = self.crossing_count();
        if n == 0 {
            return 0;
        }
        let mut uf = UnionFind::new(4 * n);
        for d in 0..4 * n as u32 {
            uf.union(d as usize, ccw_next(d) as usize);
            uf.union(d as usize, self.pairing[d as usize] as usize);
        }
        let mut comp_crossings: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comp_faces: BTreeMap<usize, usize> = BTreeMap::new();
        for c in 0..n {
            *comp_crossings.entry(uf.find(4 * c)).or_insert(0) += 1;
        }
        for f in &self.faces {
            *comp_faces.entry(uf.find(f[0] as usize)).or_insert(0) += 1;
        }
        comp_crossings
            .iter()
            .map(|(root, v)| {
                let f = comp_faces.get(root).copied().unwrap_or(0);
                (2 + v - f) / 2
            })
            .sum()
    }

    /// The two canonical checkerboard colourings: in the first, the face
    /// holding each component's least corner is black; the second is the
    /// pointwise complement.
    pub fn checkerboard(&self) -> Result<(Coloring, Coloring), LinkError> {
        let mut color: Vec<Option<bool>> = vec![None; self.faces.len()];
        // Face adjacency across strands.
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.faces.len()];
        for d in 0..self.pairing.len() as u32 {
            let partner = self.pairing[d as usize];
            if d < partner {
                let f1 = self.face_of[ccw_prev(d) as usize] as usize;
                let f2 = self.face_of[ccw_prev(partner) as usize] as usize;
                adj[f1].push(f2);
                adj[f2].push(f1);
            }
        }
        for anchor in 0..self.faces.len() {
            if color[anchor].is_some() {
                continue;
            }
            color[anchor] = Some(true);
            let mut queue = vec![anchor];
            while let Some(f) = queue.pop() {
                let cf = color[f].unwrap();
                for &n in &adj[f] {
                    match color[n] {
                        None => {
                            color[n] = Some(!cf);
                            queue.push(n);
                        }
                        Some(c) if c == cf => return Err(LinkError::NotCheckerboard),
                        _ => {}
                    }
                }
            }
        }
        let first = Coloring {
            black: color.into_iter().map(|c| c.unwrap()).collect(),
        };
        let second = first.complemented();
        Ok((first, second))
    }

    fn crossing_labels(&self) -> Vec<String> {
        let width = self.crossing_count().to_string().len().max(2);
        (0..self.crossing_count())
            .map(|c| format!("x{c:0width$}"))
            .collect()
    }

    /// Tait sign of a crossing: positive when the corners swept by turning
    /// the over-strand a quarter turn counter-clockwise are black.
    pub fn tait_sign_with(&self, coloring: &Coloring, crossing: usize, conv: Convention) -> Sign {
        let o = self.over[crossing].over_slot();
        let corner = (4 * crossing + o) as u32;
        let base = if coloring.is_black(self.face_of[corner as usize] as usize) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        conv.apply(base)
    }

    /// The Tait graph of a colouring: one vertex per black face, one signed
    /// edge per crossing, rotation inherited from the face traces.
    pub fn tait_with(&self, coloring: &Coloring, conv: Convention) -> RibbonGraph {
        let n = self.crossing_count();
        let labels = self.crossing_labels();
        // Tait dart per black corner: 2c for the lesser black slot, 2c+1
        // for the opposite one.
        let mut tait_dart = vec![usize::MAX; 4 * n];
        for c in 0..n {
            let black: Vec<usize> = (0..4)
                .filter(|&s| coloring.is_black(self.face_of[4 * c + s] as usize))
                .collect();
            debug_assert_eq!(
                black,
                vec![black[0], black[0] + 2],
                "black corners are opposite"
            );
            tait_dart[4 * c + black[0]] = 2 * c;
            tait_dart[4 * c + black[1]] = 2 * c + 1;
        }
        let mut cycles = Vec::new();
        for (f, orbit) in self.faces.iter().enumerate() {
            if !coloring.is_black(f) {
                continue;
            }
            // Face traces keep their face on the right; a vertex placed in
            // the face rotates counter-clockwise, so read orbits backwards.
            cycles.push(
                orbit
                    .iter()
                    .rev()
                    .map(|&d| tait_dart[d as usize])
                    .collect::<Vec<_>>(),
            );
        }
        let signs: Vec<Option<Sign>> = (0..n)
            .map(|c| Some(self.tait_sign_with(coloring, c, conv)))
            .collect();
        let g = RibbonGraph::from_rotation_cycles(n, &cycles, labels, signs, self.unknots)
            .expect("face traces form a rotation system");
        debug_assert!(g.is_plane());
        g
    }

    pub fn tait(&self, coloring: &Coloring) -> RibbonGraph {
        self.tait_with(coloring, Convention::Standard)
    }

    /// The state matching a colouring: the splicing whose arcs follow the
    /// black faces, which is the B-splicing exactly at positive crossings.
    pub fn tait_state_with(&self, coloring: &Coloring, conv: Convention) -> State {
        State(
            (0..self.crossing_count())
                .map(|c| match self.tait_sign_with(coloring, c, conv) {
                    Sign::Plus => SpliceKind::B,
                    Sign::Minus => SpliceKind::A,
                })
                .collect(),
        )
    }

    /// Splice partner of a crossing end under the given splicing. The
    /// reflected convention renames the two splicings along with the
    /// crossing signs, so the sign-matching state keeps hugging the same
    /// faces.
    fn splice_partner(&self, d: u32, kind: SpliceKind, conv: Convention) -> u32 {
        let c = (d >> 2) as usize;
        let s = d & 3;
        let o = self.over[c].over_slot() as u32;
        // B-splice arcs hug the corners after the over slots.
        let base = match (kind, conv) {
            (SpliceKind::B, Convention::Standard) | (SpliceKind::A, Convention::Flipped) => o,
            (SpliceKind::A, Convention::Standard) | (SpliceKind::B, Convention::Flipped) => o + 1,
        };
        let partner = if (s + 4 - base) % 2 == 0 {
            (s + 1) & 3
        } else {
            (s + 3) & 3
        };
        d & !3 | partner
    }

    /// The signed ribbon graph of a state: the circles of the spliced
    /// diagram become vertices with the rotation read off along each
    /// circle, and the crossings become edges. A circle is oriented so
    /// that the arcs cupping black corners run clockwise around their
    /// crossings (keeping the black region on the left); circles cupping
    /// only white corners anchor on white instead. B-splices give sign
    /// `+`, A-splices `-`.
    pub fn state_graph_with(&self, state: &State, conv: Convention) -> RibbonGraph {
        let n = self.crossing_count();
        assert_eq!(state.0.len(), n);
        let labels = self.crossing_labels();
        let (black, _) = self
            .checkerboard()
            .expect("diagram maps are checkerboard colourable");
        let arc_partner = |y: u32| self.splice_partner(y, state.0[(y >> 2) as usize], conv);
        // The corner an arc cups: the sector right after the slot whose
        // counter-clockwise successor is the arc's other end.
        let cupped_corner = |y: u32| {
            let p = arc_partner(y);
            if ccw_next(y) == p {
                y
            } else {
                p
            }
        };
        let cups_black = |y: u32| black.is_black(self.face_of[cupped_corner(y) as usize] as usize);
        // An arc runs clockwise when entered at its counter-clockwise-later
        // end.
        let runs_cw = |y: u32| arc_partner(y) == ccw_prev(y);

        // Trace one direction of each circle, recording arc entry ends.
        let mut visited = vec![false; 4 * n];
        let mut circles: Vec<Vec<u32>> = Vec::new();
        let mut circle_of_crossing: Vec<Vec<usize>> = vec![Vec::new(); n];
        for seed in 0..4 * n as u32 {
            if visited[seed as usize] {
                continue;
            }
            let mut entries = Vec::new();
            let mut x = seed;
            loop {
                visited[x as usize] = true;
                let y = self.pairing[x as usize];
                entries.push(y);
                circle_of_crossing[(y >> 2) as usize].push(circles.len());
                x = arc_partner(y);
                if x == seed {
                    break;
                }
            }
            // The reverse traversal of the same circle is consumed too.
            let rev_seed = self.pairing[seed as usize];
            let mut x = rev_seed;
            loop {
                debug_assert!(!visited[x as usize], "a circle never meets its own reverse");
                visited[x as usize] = true;
                x = arc_partner(self.pairing[x as usize]);
                if x == rev_seed {
                    break;
                }
            }
            circles.push(entries);
        }

        // The two arcs of a crossing run with equal handedness around it,
        // which ties the orientations of the circles within a component;
        // each component then flips as a whole so that its least
        // black-cupping arc (or failing black, its least arc) runs
        // clockwise, keeping the anchoring region on the left.
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); circles.len()];
        {
            let mut arcs_at: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
            for (ci, entries) in circles.iter().enumerate() {
                for &y in entries {
                    arcs_at[(y >> 2) as usize].push((ci, runs_cw(y)));
                }
            }
            for arcs in &arcs_at {
                let [(c1, h1), (c2, h2)] = arcs.as_slice() else {
                    unreachable!("every crossing carries two splice arcs")
                };
                adj[*c1].push((*c2, h1 != h2));
                adj[*c2].push((*c1, h1 != h2));
            }
        }
        let mut flip: Vec<Option<bool>> = vec![None; circles.len()];
        for root in 0..circles.len() {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut queue = vec![root];
            let mut members = vec![root];
            while let Some(ci) = queue.pop() {
                let fi = flip[ci].unwrap();
                for &(cj, opposite) in &adj[ci] {
                    let want = fi ^ opposite;
                    match flip[cj] {
                        None => {
                            flip[cj] = Some(want);
                            queue.push(cj);
                            members.push(cj);
                        }
                        Some(f) => {
                            debug_assert_eq!(f, want, "spliced circles glue orientably")
                        }
                    }
                }
            }
            // Anchor the component.
            let mut anchor: Option<(u32, bool)> = None;
            let mut fallback: Option<(u32, bool)> = None;
            for &ci in &members {
                for &y in &circles[ci] {
                    let final_cw = runs_cw(y) ^ flip[ci].unwrap();
                    if cups_black(y) {
                        if anchor.map_or(true, |(b, _)| y < b) {
                            anchor = Some((y, final_cw));
                        }
                    } else if fallback.map_or(true, |(b, _)| y < b) {
                        fallback = Some((y, final_cw));
                    }
                }
            }
            let (_, final_cw) = anchor.or(fallback).expect("component has arcs");
            if !final_cw {
                for &ci in &members {
                    flip[ci] = Some(!flip[ci].unwrap());
                }
            }
        }
        let mut raw_circles: Vec<Vec<u32>> = circles
            .iter()
            .enumerate()
            .map(|(ci, entries)| {
                if flip[ci] == Some(true) {
                    entries.iter().rev().map(|&y| arc_partner(y)).collect()
                } else {
                    entries.clone()
                }
            })
            .collect();
        raw_circles.sort_by_key(|c| c.iter().min().copied());
        let mut occurrence = vec![0usize; n];
        let mut cycles = Vec::new();
        for entries in &raw_circles {
            let cycle: Vec<usize> = entries
                .iter()
                .map(|&y| {
                    let c = (y >> 2) as usize;
                    let dart = 2 * c + occurrence[c];
                    occurrence[c] += 1;
                    dart
                })
                .collect();
            cycles.push(cycle);
        }
        debug_assert!(occurrence.iter().all(|&o| o == 2));
        // The sign depends only on the splice name; the convention already
        // entered through which arcs that name selects.
        let signs = (0..n)
            .map(|c| {
                Some(match state.0[c] {
                    SpliceKind::B => Sign::Plus,
                    SpliceKind::A => Sign::Minus,
                })
            })
            .collect();
        RibbonGraph::from_rotation_cycles(n, &cycles, labels, signs, self.unknots)
            .expect("spliced circles form a rotation system")
    }

    pub fn state_graph(&self, state: &State) -> RibbonGraph {
        self.state_graph_with(state, Convention::Standard)
    }

    /// All `2^n` state graphs, states ordered as binary counters with bit
    /// `c` set meaning a B-splice at crossing `c`.
    pub fn all_state_graphs_with(
        &self,
        conv: Convention,
    ) -> Result<Vec<(State, RibbonGraph)>, LinkError> {
        let n = self.crossing_count();
        if n > MAX_STATE_CROSSINGS {
            return Err(LinkError::TooLarge(n, MAX_STATE_CROSSINGS));
        }
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u32..1 << n {
            let state = State(
                (0..n)
                    .map(|c| {
                        if mask >> c & 1 == 1 {
                            SpliceKind::B
                        } else {
                            SpliceKind::A
                        }
                    })
                    .collect(),
            );
            let g = self.state_graph_with(&state, conv);
            out.push((state, g));
        }
        Ok(out)
    }

    pub fn all_state_graphs(&self) -> Result<Vec<(State, RibbonGraph)>, LinkError> {
        self.all_state_graphs_with(Convention::Standard)
    }

    /// Canonical code of the diagram: the underlying map code augmented
    /// with per-end over-strand bits and the count of crossingless circles.
    /// Chiral mode matches isotopy of the oriented sphere.
    pub fn canonical_code(&self, mode: IsoMode) -> CanonicalCode {
        let n = self.pairing.len() as u32;
        let sigma: Vec<u32> = (0..n).map(ccw_next).collect();
        let sigma_inv: Vec<u32> = (0..n).map(ccw_prev).collect();
        let tag: Vec<u32> = (0..n)
            .map(|d| {
                let on_over = match self.over[(d >> 2) as usize] {
                    OverPair::Slots02 => d & 1 == 0,
                    OverPair::Slots13 => d & 1 == 1,
                };
                on_over as u32
            })
            .collect();
        canon::map_code(&sigma, &sigma_inv, &self.pairing, &tag, self.unknots, mode)
    }

    pub fn equivalent(&self, other: &LinkDiagram) -> bool {
        self.canonical_code(IsoMode::Chiral) == other.canonical_code(IsoMode::Chiral)
    }

    /// Strand pairs whose removal separates their component into two sides,
    /// each pair listed once in label order.
    pub fn two_edge_cuts(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for s1 in 0..self.strand_count() {
            for s2 in s1 + 1..self.strand_count() {
                if self.cut_sides(s1, s2).is_some() {
                    out.push((
                        self.strand_labels[s1].clone(),
                        self.strand_labels[s2].clone(),
                    ));
                }
            }
        }
        out
    }

    /// The two dart sides of a separating strand pair, or `None` when the
    /// pair does not cut.
    fn cut_sides(&self, s1: usize, s2: usize) -> Option<(Vec<u32>, Vec<u32>)> {
        let n4 = self.pairing.len();
        let mut uf = UnionFind::new(n4);
        for d in 0..n4 as u32 {
            uf.union(d as usize, ccw_next(d) as usize);
            let strand = self.strand_of[d as usize] as usize;
            if strand != s1 && strand != s2 {
                uf.union(d as usize, self.pairing[d as usize] as usize);
            }
        }
        let e1: Vec<u32> = (0..n4 as u32)
            .filter(|&d| self.strand_of[d as usize] == s1 as u32)
            .collect();
        let e2: Vec<u32> = (0..n4 as u32)
            .filter(|&d| self.strand_of[d as usize] == s2 as u32)
            .collect();
        let (x1, y1) = (e1[0], e1[1]);
        let (x2, y2) = (e2[0], e2[1]);
        let (rx1, ry1) = (uf.find(x1 as usize), uf.find(y1 as usize));
        let (rx2, ry2) = (uf.find(x2 as usize), uf.find(y2 as usize));
        if rx1 == ry1 || rx2 == ry2 {
            return None;
        }
        if !((rx2 == rx1 && ry2 == ry1) || (rx2 == ry1 && ry2 == rx1)) {
            return None;
        }
        let side_a: Vec<u32> = (0..n4 as u32)
            .filter(|&d| uf.find(d as usize) == rx1)
            .collect();
        let side_b: Vec<u32> = (0..n4 as u32)
            .filter(|&d| uf.find(d as usize) == ry1)
            .collect();
        Some((side_a, side_b))
    }

    /// Cuts a disc whose boundary meets the diagram in one point on each of
    /// the two strands and reglues it with reversed orientation. The side
    /// not holding the least dart of the cut component flips: its crossings
    /// reverse their end order and, since the physical over-arc trades
    /// places with the under-arc in the listing, their over pair toggles.
    /// Strand connections are untouched. Cutting one strand twice flips a
    /// crossingless disc, so equal strands return the diagram unchanged.
    pub fn summand_flip(&self, s1: &str, s2: &str) -> Result<LinkDiagram, LinkError> {
        let i1 = self
            .strand_labels
            .iter()
            .position(|l| l == s1)
            .ok_or_else(|| LinkError::UnknownStrand(s1.to_string()))?;
        let i2 = self
            .strand_labels
            .iter()
            .position(|l| l == s2)
            .ok_or_else(|| LinkError::UnknownStrand(s2.to_string()))?;
        if i1 == i2 {
            return Ok(self.clone());
        }
        let (side_a, side_b) = self.cut_sides(i1, i2).ok_or(LinkError::InvalidCut)?;
        let min_a = side_a.iter().min().unwrap();
        let min_b = side_b.iter().min().unwrap();
        let flipped: &[u32] = if min_a < min_b { &side_b } else { &side_a };
        let mut flip_crossing = vec![false; self.crossing_count()];
        for &d in flipped {
            flip_crossing[(d >> 2) as usize] = true;
        }
        let crossings: Vec<([String; 4], OverPair)> = (0..self.crossing_count())
            .map(|c| {
                let ends = self.end_labels(c);
                let reorder = |s: usize| if flip_crossing[c] { (4 - s) & 3 } else { s };
                let mut new_ends = [String::new(), String::new(), String::new(), String::new()];
                for (s, label) in ends.iter().enumerate() {
                    new_ends[reorder(s)] = label.to_string();
                }
                let over = if flip_crossing[c] {
                    self.over[c].toggled()
                } else {
                    self.over[c]
                };
                (new_ends, over)
            })
            .collect();
        LinkDiagram::from_crossings(&crossings, self.unknots)
    }
}

/// The link diagram associated with a signed plane ribbon graph: one
/// crossing per edge, strands following the vertex boundaries, over-strand
/// chosen from the edge sign. Isolated vertices become crossingless
/// circles.
pub fn diagram_of_with(g: &RibbonGraph, conv: Convention) -> Result<LinkDiagram, LinkError> {
    if !g.fully_signed() {
        return Err(LinkError::MissingSigns);
    }
    if !g.is_plane() {
        return Err(LinkError::NotPlane);
    }
    let width = (2 * g.edge_count()).to_string().len().max(2);
    let strand_name = |d: crate::map::Dart| format!("s{:0width$}", d.index());
    // Crossing of edge e, slots counter-clockwise: the boundary-exit port
    // of dart 2e, its entry port, then the same for dart 2e+1.
    let out_port = |d: crate::map::Dart| -> (usize, usize) {
        (g.edge_of(d).index(), if d.index() % 2 == 0 { 0 } else { 2 })
    };
    let in_port = |d: crate::map::Dart| -> (usize, usize) {
        (g.edge_of(d).index(), if d.index() % 2 == 0 { 1 } else { 3 })
    };
    let mut ends: Vec<[String; 4]> = (0..g.edge_count())
        .map(|_| [String::new(), String::new(), String::new(), String::new()])
        .collect();
    for d in g.darts() {
        let name = strand_name(d);
        let (c1, s1) = out_port(d);
        let (c2, s2) = in_port(g.next_at_vertex(d));
        ends[c1][s1] = name.clone();
        ends[c2][s2] = name;
    }
    let crossings: Vec<([String; 4], OverPair)> = (0..g.edge_count())
        .map(|e| {
            let sign = conv.apply(g.sign(crate::map::EdgeId::new(e)).unwrap());
            let over = match sign {
                Sign::Plus => OverPair::Slots02,
                Sign::Minus => OverPair::Slots13,
            };
            (ends[e].clone(), over)
        })
        .collect();
    LinkDiagram::from_crossings(&crossings, g.isolated_vertex_count())
}

pub fn diagram_of(g: &RibbonGraph) -> Result<LinkDiagram, LinkError> {
    diagram_of_with(g, Convention::Standard)
}

/// All link diagrams presented by a signed ribbon graph: one per plane
/// partial dual, deduplicated by chiral diagram code and sorted by it.
/// Empty exactly when no partial dual is plane.
pub fn diagrams_of_with(g: &RibbonGraph, conv: Convention) -> Result<Vec<LinkDiagram>, LinkError> {
    if !g.fully_signed() {
        return Err(LinkError::MissingSigns);
    }
    let mut out: Vec<(CanonicalCode, LinkDiagram)> = Vec::new();
    for a in decomp::enumerate_plane_subsets(g) {
        let d = diagram_of_with(&g.partial_dual(&a), conv)?;
        let code = d.canonical_code(IsoMode::Chiral);
        if !out.iter().any(|(c, _)| *c == code) {
            out.push((code, d));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, d)| d).collect())
}

pub fn diagrams_of(g: &RibbonGraph) -> Result<Vec<LinkDiagram>, LinkError> {
    diagrams_of_with(g, Convention::Standard)
}

/// Whether two diagrams present the same set of signed ribbon graphs:
/// holds exactly when a Tait graph of one is a plane partial dual of a
/// Tait graph of the other. Ribbon graphs are compared as signed surfaces
/// up to homeomorphism, the equivalence under which the presented set is
/// defined.
pub fn same_link_diagram_set_with(
    d1: &LinkDiagram,
    d2: &LinkDiagram,
    conv: Convention,
) -> Result<bool, LinkError> {
    if d1.crossing_count() != d2.crossing_count() || d1.unknot_count() != d2.unknot_count() {
        return Ok(false);
    }
    let t1 = d1.tait_with(&d1.checkerboard()?.0, conv);
    let t2 = d2.tait_with(&d2.checkerboard()?.0, conv);
    let t2_code = t2.canonical_code(IsoMode::Chiral);
    Ok(decomp::enumerate_plane_subsets(&t1)
        .iter()
        .any(|a| t1.partial_dual(a).canonical_code(IsoMode::Chiral) == t2_code))
}

pub fn same_link_diagram_set(d1: &LinkDiagram, d2: &LinkDiagram) -> Result<bool, LinkError> {
    same_link_diagram_set_with(d1, d2, Convention::Standard)
}

/// PD code of the standard trefoil diagram, used throughout the tests.
pub const TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

/// PD code of the one-crossing unknot diagram (a curl).
pub const CURL_PD: &str = "X(1,1,2,2)";
