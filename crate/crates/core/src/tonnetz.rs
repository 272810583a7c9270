//! The Tonnetz and the chicken-wire torus, both as quotient graphs on the
//! torus, and the dual-graph relation between them.
//!
//! Tonnetz vertices are the 12 pitch classes; its 24 triangular faces are the
//! consonant triads. Chicken-wire vertices are the 24 triads, joined by `P`,
//! `L` and `R` edges. Two Tonnetz faces share an edge exactly when the triads
//! share two tones, and the interval of that shared edge says which of
//! `P` (fifth), `L` (minor third) or `R` (major third) exchanges them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::neoriemann::PlrOp;
use crate::pitchspace::PitchClass;
use crate::triads::{all_triads, ConsonantTriad, TRIAD_COUNT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EdgeLabel {
    #[serde(rename = "fifth")]
    Fifth,
    #[serde(rename = "majorThird")]
    MajorThird,
    #[serde(rename = "minorThird")]
    MinorThird,
    P,
    L,
    R,
}

impl EdgeLabel {
    pub const fn as_str(self) -> &'static str {
        match self {
            EdgeLabel::Fifth => "fifth",
            EdgeLabel::MajorThird => "majorThird",
            EdgeLabel::MinorThird => "minorThird",
            EdgeLabel::P => "P",
            EdgeLabel::L => "L",
            EdgeLabel::R => "R",
        }
    }

    pub const fn from_op(op: PlrOp) -> Self {
        match op {
            PlrOp::P => EdgeLabel::P,
            PlrOp::L => EdgeLabel::L,
            PlrOp::R => EdgeLabel::R,
        }
    }

    pub const fn op(self) -> Option<PlrOp> {
        match self {
            EdgeLabel::P => Some(PlrOp::P),
            EdgeLabel::L => Some(PlrOp::L),
            EdgeLabel::R => Some(PlrOp::R),
            _ => None,
        }
    }

    /// Interval class of a Tonnetz edge, if `a` and `b` are joined by one.
    pub fn for_interval(a: PitchClass, b: PitchClass) -> Option<Self> {
        match a.interval_to(b) {
            5 | 7 => Some(EdgeLabel::Fifth),
            4 | 8 => Some(EdgeLabel::MajorThird),
            3 | 9 => Some(EdgeLabel::MinorThird),
            _ => None,
        }
    }

    /// Label of the dual edge crossing a Tonnetz edge of this type.
    pub const fn dual(self) -> Option<Self> {
        match self {
            EdgeLabel::Fifth => Some(EdgeLabel::P),
            EdgeLabel::MinorThird => Some(EdgeLabel::L),
            EdgeLabel::MajorThird => Some(EdgeLabel::R),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub label: EdgeLabel,
}

impl Edge {
    pub fn new(a: usize, b: usize, label: EdgeLabel) -> Self {
        Edge {
            a: a.min(b),
            b: a.max(b),
            label,
        }
    }

    fn sort_key(&self) -> (usize, usize, &'static str) {
        (self.a, self.b, self.label.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub vertices: [usize; 3],
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range ({count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {a}--{b}")]
    DuplicateEdge { a: usize, b: usize },
    #[error("face {face} uses {a}--{b}, which is not an edge")]
    FaceEdgeMissing { face: usize, a: usize, b: usize },
    #[error("adjacency mismatch at {a}--{b}: expected {expected}, found {found}")]
    Mismatch {
        a: usize,
        b: usize,
        expected: String,
        found: String,
    },
    #[error("edge {a}--{b} labelled {label} does not match the operation it names")]
    LabelDisagrees {
        a: usize,
        b: usize,
        label: EdgeLabel,
    },
    #[error("walk is stuck at vertex {vertex}: no {label} edge")]
    NoEdge { vertex: usize, label: EdgeLabel },
}

/// An undirected graph with labelled edges and, optionally, triangular faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    name: String,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    faces: Option<Vec<Face>>,
    labels_by_pair: BTreeMap<(usize, usize), EdgeLabel>,
}

impl LabeledGraph {
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        edges: impl IntoIterator<Item = Edge>,
        faces: Option<Vec<Face>>,
    ) -> Result<Self, GraphError> {
        let count = vertices.len();
        let mut labels_by_pair = BTreeMap::new();
        let mut list = Vec::new();
        for e in edges {
            for v in [e.a, e.b] {
                if v >= count {
                    return Err(GraphError::VertexOutOfRange { vertex: v, count });
                }
            }
            if e.a == e.b {
                return Err(GraphError::SelfLoop(e.a));
            }
            if labels_by_pair.insert((e.a, e.b), e.label).is_some() {
                return Err(GraphError::DuplicateEdge { a: e.a, b: e.b });
            }
            list.push(e);
        }
        list.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
        if let Some(faces) = &faces {
            for (k, face) in faces.iter().enumerate() {
                let [x, y, z] = face.vertices;
                for (a, b) in [(x, y), (y, z), (x, z)] {
                    if !labels_by_pair.contains_key(&(a.min(b), a.max(b))) {
                        return Err(GraphError::FaceEdgeMissing { face: k, a, b });
                    }
                }
            }
        }
        Ok(LabeledGraph {
            name: name.into(),
            vertices,
            edges: list,
            faces,
            labels_by_pair,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    /// Sorted by `(min endpoint, max endpoint, label)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> Option<&[Face]> {
        self.faces.as_deref()
    }

    pub fn edge_label(&self, a: usize, b: usize) -> Option<EdgeLabel> {
        self.labels_by_pair.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, EdgeLabel)> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.a == v {
                Some((e.b, e.label))
            } else if e.b == v {
                Some((e.a, e.label))
            } else {
                None
            }
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn neighbor_by_label(&self, v: usize, label: EdgeLabel) -> Option<usize> {
        self.neighbors(v).find(|&(_, l)| l == label).map(|(w, _)| w)
    }
}

pub fn build_tonnetz() -> LabeledGraph {
    let vertices = PitchClass::all().map(|p| p.to_string()).collect();
    let edges = PitchClass::all().flat_map(|x| {
        [
            (7, EdgeLabel::Fifth),
            (4, EdgeLabel::MajorThird),
            (3, EdgeLabel::MinorThird),
        ]
        .map(|(step, label)| Edge::new(x.value() as usize, x.add(step).value() as usize, label))
    });
    let faces = all_triads()
        .map(|t| {
            let mut vs = t.tones().map(|p| p.value() as usize);
            vs.sort_unstable();
            Face {
                vertices: vs,
                label: t.to_string(),
            }
        })
        .collect();
    LabeledGraph::new("tonnetz", vertices, edges, Some(faces)).expect("well-formed Tonnetz")
}

pub fn build_chickenwire() -> LabeledGraph {
    let vertices = all_triads().map(|t| t.to_string()).collect();
    let edges: BTreeSet<(usize, usize, EdgeLabel)> = all_triads()
        .flat_map(|y| {
            PlrOp::ALL.map(|op| {
                let (a, b) = (y.index(), op.apply(y).index());
                (a.min(b), a.max(b), EdgeLabel::from_op(op))
            })
        })
        .collect();
    LabeledGraph::new(
        "chickenwire",
        vertices,
        edges.into_iter().map(|(a, b, l)| Edge::new(a, b, l)),
        None,
    )
    .expect("well-formed chicken-wire graph")
}

/// Checks that `map` (a vertex of `a` ↦ a vertex of `b`) carries the labelled
/// edges of `a` exactly onto those of `b`.
pub fn check_isomorphism(
    a: &LabeledGraph,
    b: &LabeledGraph,
    map: &[usize],
) -> Result<(), GraphError> {
    let describe =
        |l: Option<EdgeLabel>| l.map_or_else(|| "no edge".to_string(), |l| l.to_string());
    if a.vertex_count() != b.vertex_count() || map.len() != a.vertex_count() {
        return Err(GraphError::Mismatch {
            a: 0,
            b: 0,
            expected: format!("{} vertices", b.vertex_count()),
            found: format!("{} vertices", a.vertex_count()),
        });
    }
    for e in a.edges() {
        let (x, y) = (map[e.a], map[e.b]);
        let found = b.edge_label(x, y);
        if found != Some(e.label) {
            return Err(GraphError::Mismatch {
                a: e.a,
                b: e.b,
                expected: e.label.to_string(),
                found: describe(found),
            });
        }
    }
    if a.edges().len() != b.edges().len() {
        let inverse: BTreeMap<usize, usize> =
            map.iter().enumerate().map(|(i, &j)| (j, i)).collect();
        let extra = b
            .edges()
            .iter()
            .find(|e| a.edge_label(inverse[&e.a], inverse[&e.b]).is_none())
            .expect("edge counts differ");
        return Err(GraphError::Mismatch {
            a: inverse[&extra.a],
            b: inverse[&extra.b],
            expected: "no edge".into(),
            found: extra.label.to_string(),
        });
    }
    Ok(())
}

/// Every label-preserving isomorphism `a → b`, by backtracking over the
/// vertices of `a` in breadth-first order.
pub fn find_isomorphisms(a: &LabeledGraph, b: &LabeledGraph) -> Vec<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edges().len() != b.edges().len() {
        return Vec::new();
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for (w, _) in a.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    extend_isomorphism(a, b, &order, 0, &mut map, &mut used, &mut out);
    out
}

fn extend_isomorphism(
    a: &LabeledGraph,
    b: &LabeledGraph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if depth == order.len() {
        out.push(map.clone());
        return;
    }
    let v = order[depth];
    for w in 0..b.vertex_count() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.edge_label(u, v) == b.edge_label(map[u], w));
        if consistent {
            map[v] = w;
            used[w] = true;
            extend_isomorphism(a, b, order, depth + 1, map, used, out);
            used[w] = false;
            map[v] = usize::MAX;
        }
    }
}

/// The dual of the Tonnetz: one vertex per face, joined when two faces share
/// an edge, labelled by the dual of the shared edge's interval. The result is
/// checked against the functional definition of `P`, `L`, `R` and against
/// [`build_chickenwire`].
pub fn dual_of_tonnetz() -> Result<LabeledGraph, GraphError> {
    let tonnetz = build_tonnetz();
    let faces = tonnetz.faces().expect("Tonnetz has faces");
    let mut edges = Vec::new();
    for (i, fi) in faces.iter().enumerate() {
        for (j, fj) in faces.iter().enumerate().skip(i + 1) {
            let shared: Vec<usize> = fi
                .vertices
                .iter()
                .copied()
                .filter(|v| fj.vertices.contains(v))
                .collect();
            if let [x, y] = shared[..] {
                let interval = tonnetz
                    .edge_label(x, y)
                    .expect("faces share a Tonnetz edge");
                edges.push(Edge::new(i, j, interval.dual().expect("interval label")));
            }
        }
    }
    let vertices = faces.iter().map(|f| f.label.clone()).collect();
    let dual = LabeledGraph::new("tonnetz-dual", vertices, edges, None)?;

    for e in dual.edges() {
        let op = e.label.op().expect("dual edges carry P, L or R");
        let y = ConsonantTriad::from_index(e.a);
        if op.apply(y).index() != e.b {
            return Err(GraphError::LabelDisagrees {
                a: e.a,
                b: e.b,
                label: e.label,
            });
        }
    }
    // face k is triad k, so the face↔triad correspondence is the identity
    let identity: Vec<usize> = (0..TRIAD_COUNT).collect();
    check_isomorphism(&dual, &build_chickenwire(), &identity)?;
    Ok(dual)
}

/// The closed walk from C alternating `R` and `L` edges: 25 vertices.
pub fn beethoven_path(graph: &LabeledGraph) -> Result<Vec<usize>, GraphError> {
    let start = ConsonantTriad::C_MAJOR.index();
    let mut path = vec![start];
    let mut current = start;
    for step in 0..TRIAD_COUNT {
        let label = if step % 2 == 0 {
            EdgeLabel::R
        } else {
            EdgeLabel::L
        };
        current = graph
            .neighbor_by_label(current, label)
            .ok_or(GraphError::NoEdge {
                vertex: current,
                label,
            })?;
        path.push(current);
    }
    Ok(path)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz output; vertices in index order, edges in [`LabeledGraph::edges`]
/// order.
pub fn export_dot(g: &LabeledGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", dot_escape(g.name())).unwrap();
    for (id, label) in g.vertex_labels().iter().enumerate() {
        writeln!(out, "  {id} [label=\"{}\"];", dot_escape(label)).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  {} -- {} [label=\"{}\"];", e.a, e.b, e.label).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonVertex<'a> {
    id: usize,
    label: &'a str,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    vertices: Vec<JsonVertex<'a>>,
    edges: &'a [Edge],
    faces: &'a [Face],
}

pub fn export_json(g: &LabeledGraph) -> String {
    let doc = JsonGraph {
        vertices: g
            .vertex_labels()
            .iter()
            .enumerate()
            .map(|(id, label)| JsonVertex { id, label })
            .collect(),
        edges: g.edges(),
        faces: g.faces().unwrap_or(&[]),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triads::{parse_name, Parity};

    fn idx(name: &str) -> usize {
        parse_name(name).unwrap().index()
    }

    // Triangles in the Tonnetz whose three edges have three different
    // interval types. (The augmented triads {x, x+4, x+8} are also 3-cycles,
    // but all of their edges are major thirds.)
    fn triangle_oracle(g: &LabeledGraph) -> BTreeSet<[usize; 3]> {
        let n = g.vertex_count();
        let mut out = BTreeSet::new();
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let labels = [g.edge_label(x, y), g.edge_label(y, z), g.edge_label(x, z)];
                    if labels.iter().all(Option::is_some) {
                        let distinct: BTreeSet<_> = labels.iter().flatten().collect();
                        if distinct.len() == 3 {
                            out.insert([x, y, z]);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn tonnetz_counts() {
        let t = build_tonnetz();
        assert_eq!(t.vertex_count(), 12);
        assert_eq!(t.edges().len(), 36);
        let faces = t.faces().unwrap();
        assert_eq!(faces.len(), 24);
        let face_sets: BTreeSet<[usize; 3]> = faces.iter().map(|f| f.vertices).collect();
        assert_eq!(face_sets, triangle_oracle(&t));
    }

    #[test]
    fn tonnetz_is_a_torus_triangulation() {
        let t = build_tonnetz();
        let faces = t.faces().unwrap();
        for v in 0..12 {
            assert_eq!(t.degree(v), 6);
            assert_eq!(faces.iter().filter(|f| f.vertices.contains(&v)).count(), 6);
        }
        for e in t.edges() {
            let incident = faces
                .iter()
                .filter(|f| f.vertices.contains(&e.a) && f.vertices.contains(&e.b))
                .count();
            assert_eq!(incident, 2);
        }
        // V - E + F = 0 on the torus
        assert_eq!(12 + 24, 36);
    }

    #[test]
    fn tonnetz_faces_are_triads() {
        let t = build_tonnetz();
        let c = t
            .faces()
            .unwrap()
            .iter()
            .find(|f| f.vertices == [0, 4, 7])
            .unwrap();
        assert_eq!(c.label, "C");
        let at_zero: BTreeSet<&str> = t
            .faces()
            .unwrap()
            .iter()
            .filter(|f| f.vertices.contains(&0))
            .map(|f| f.label.as_str())
            .collect();
        let expected: BTreeSet<&str> = ["a", "C", "c", "G#", "f", "F"].into();
        assert_eq!(at_zero, expected);
        assert_eq!(idx("Ab"), idx("G#"));
    }

    #[test]
    fn chickenwire_structure() {
        let g = build_chickenwire();
        assert_eq!(g.vertex_count(), 24);
        assert_eq!(g.edges().len(), 36);
        for v in 0..24 {
            assert_eq!(g.degree(v), 3);
            let labels: BTreeSet<_> = g.neighbors(v).map(|(_, l)| l).collect();
            assert_eq!(labels.len(), 3, "one edge of each label at {v}");
        }
        for e in g.edges() {
            let pa = ConsonantTriad::from_index(e.a).parity();
            let pb = ConsonantTriad::from_index(e.b).parity();
            assert_ne!(pa, pb);
        }
        assert_eq!(g.edge_label(idx("C"), idx("c")), Some(EdgeLabel::P));
        assert_eq!(g.edge_label(idx("C"), idx("e")), Some(EdgeLabel::L));
        assert_eq!(g.edge_label(idx("C"), idx("a")), Some(EdgeLabel::R));
        let _ = Parity::Major;
    }

    #[test]
    fn dual_matches_chickenwire() {
        let dual = dual_of_tonnetz().unwrap();
        assert_eq!(dual.vertex_count(), 24);
        assert_eq!(dual.edge_label(idx("C"), idx("c")), Some(EdgeLabel::P));
        assert_eq!(dual.edges(), build_chickenwire().edges());
    }

    #[test]
    fn chickenwire_automorphisms_are_the_ti_group() {
        let g = build_chickenwire();
        let autos = find_isomorphisms(&g, &g);
        assert_eq!(autos.len(), 24);
        for map in &autos {
            check_isomorphism(&g, &g, map).unwrap();
        }
    }

    #[test]
    fn isomorphism_failure_names_adjacency() {
        let g = build_chickenwire();
        let mut swap: Vec<usize> = (0..24).collect();
        swap.swap(0, 1);
        let err = check_isomorphism(&g, &g, &swap).unwrap_err();
        assert!(matches!(err, GraphError::Mismatch { a: 0, .. }), "{err}");
    }

    #[test]
    fn graph_validation() {
        let v = vec!["x".to_string(), "y".to_string()];
        assert_eq!(
            LabeledGraph::new("g", v.clone(), [Edge::new(0, 0, EdgeLabel::P)], None),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            LabeledGraph::new(
                "g",
                v.clone(),
                [Edge::new(0, 1, EdgeLabel::P), Edge::new(1, 0, EdgeLabel::L)],
                None
            ),
            Err(GraphError::DuplicateEdge { a: 0, b: 1 })
        );
        let face = Face {
            vertices: [0, 1, 1],
            label: "f".into(),
        };
        assert!(matches!(
            LabeledGraph::new("g", v, [], Some(vec![face])),
            Err(GraphError::FaceEdgeMissing { .. })
        ));
    }

    #[test]
    fn beethoven_walk() {
        let g = build_chickenwire();
        let path = beethoven_path(&g).unwrap();
        assert_eq!(path.len(), 25);
        let names: Vec<String> = path[..4]
            .iter()
            .map(|&i| g.vertex_labels()[i].clone())
            .collect();
        assert_eq!(names, ["C", "a", "F", "d"]);
        assert_eq!(path[0], path[24]);
        let distinct: BTreeSet<_> = path[..24].iter().collect();
        assert_eq!(distinct.len(), 24);
        for (k, w) in path.windows(2).enumerate() {
            let want = if k % 2 == 0 {
                EdgeLabel::R
            } else {
                EdgeLabel::L
            };
            assert_eq!(g.edge_label(w[0], w[1]), Some(want));
        }
        let tonnetz = build_tonnetz();
        assert!(matches!(
            beethoven_path(&tonnetz),
            Err(GraphError::NoEdge { .. })
        ));
    }

    #[test]
    fn exports_are_deterministic() {
        let g = build_chickenwire();
        assert_eq!(export_dot(&g), export_dot(&build_chickenwire()));
        assert!(export_dot(&g).contains("  0 -- 19 [label=\"P\"];\n"));
        let t = build_tonnetz();
        assert_eq!(export_json(&t), export_json(&build_tonnetz()));
        let doc: serde_json::Value = serde_json::from_str(&export_json(&t)).unwrap();
        assert_eq!(doc["faces"].as_array().unwrap().len(), 24);
        assert_eq!(doc["edges"].as_array().unwrap().len(), 36);
        assert_eq!(
            doc["edges"][0],
            serde_json::json!({"a": 0, "b": 3, "label": "minorThird"})
        );
    }
}
