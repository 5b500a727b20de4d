//! Straight-line plane drawings: format, validation, faces, automatic
//! barycentric layouts and cut-vertex splitting.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::Value;

use super::ConstructError;
use crate::geometry::{
    coords, on_segment, parse_value, point_of, segments_intersect, Coord, FormatError, Point,
};
use crate::graph::{is_connected, planar_faces, EdgeSet, Graph};
use crate::scalar::Scalar;

/// Vertex positions plus straight edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlaneDrawing {
    pub vertices: BTreeMap<String, Point>,
    pub edges: EdgeSet,
}

impl PlaneDrawing {
    pub fn new(vertices: BTreeMap<String, Point>, edges: EdgeSet) -> Self {
        PlaneDrawing { vertices, edges }
    }

    /// The drawn graph, vertices in name order.
    pub fn graph(&self) -> Graph {
        let names: Vec<&String> = self.vertices.keys().collect();
        let mut g = Graph::from_edges::<&String>(&names, &[]).expect("drawing names are identifiers");
        for (a, b) in &self.edges {
            g.add_edge(a, b).expect("drawing edges join drawn vertices");
        }
        g
    }
}

pub fn parse_drawing(text: &str) -> Result<PlaneDrawing, FormatError> {
    let root = parse_value(text)?;
    let verts = root
        .get("vertices")
        .and_then(Value::as_object)
        .ok_or_else(|| FormatError::schema("$", "expected object with `vertices` map"))?;
    let mut vertices = BTreeMap::new();
    for (name, v) in verts {
        if !crate::geometry::is_identifier(name) {
            return Err(FormatError::schema(&format!("vertices.{name}"), "vertex name is not an identifier"));
        }
        vertices.insert(name.clone(), point_of(v, &format!("vertices.{name}"))?);
    }
    let edges = root
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::schema("$", "expected `edges` array"))?;
    let mut out = EdgeSet::new();
    for (k, e) in edges.iter().enumerate() {
        let path = format!("edges[{k}]");
        let pair = e
            .as_array()
            .filter(|a| a.len() == 2)
            .and_then(|a| Some((a[0].as_str()?, a[1].as_str()?)))
            .ok_or_else(|| FormatError::schema(&path, "expected [name, name]"))?;
        for v in [pair.0, pair.1] {
            if !vertices.contains_key(v) {
                return Err(FormatError::schema(&path, format!("unknown vertex `{v}`")));
            }
        }
        if pair.0 == pair.1 {
            return Err(FormatError::schema(&path, "self-loop"));
        }
        if !out.insert(crate::visibility::edge_key(pair.0, pair.1)) {
            return Err(FormatError::schema(&path, "duplicate edge"));
        }
    }
    Ok(PlaneDrawing { vertices, edges: out })
}

pub fn drawing_to_json(d: &PlaneDrawing) -> String {
    let verts: BTreeMap<&str, [Coord; 2]> = d.vertices.iter().map(|(k, p)| (k.as_str(), coords(p))).collect();
    let edges: Vec<[&str; 2]> = d.edges.iter().map(|(a, b)| [a.as_str(), b.as_str()]).collect();
    let mut text = serde_json::to_string_pretty(&serde_json::json!({ "vertices": verts, "edges": edges }))
        .expect("drawing serializes");
    text.push('\n');
    text
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrawingViolation {
    MissingVertex(String),
    ExtraVertex(String),
    EdgeMismatch { only_graph: EdgeSet, only_drawing: EdgeSet },
    SharedPosition(String, String),
    VertexOnEdge { vertex: String, edge: (String, String) },
    Crossing((String, String), (String, String)),
    Disconnected,
    NonTriangularFace(Vec<String>),
    OuterNotSimple(Vec<String>),
    OuterNotConvex(Vec<String>),
}

impl fmt::Display for DrawingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DrawingViolation::*;
        match self {
            MissingVertex(v) => write!(f, "vertex `{v}` has no position"),
            ExtraVertex(v) => write!(f, "drawing has vertex `{v}` not in the graph"),
            EdgeMismatch { only_graph, only_drawing } => {
                write!(f, "edge sets differ: only in graph {only_graph:?}, only in drawing {only_drawing:?}")
            }
            SharedPosition(a, b) => write!(f, "vertices `{a}` and `{b}` share a position"),
            VertexOnEdge { vertex, edge } => write!(f, "vertex `{vertex}` lies on edge {}-{}", edge.0, edge.1),
            Crossing(e1, e2) => write!(f, "edges {}-{} and {}-{} cross", e1.0, e1.1, e2.0, e2.1),
            Disconnected => write!(f, "graph is disconnected"),
            NonTriangularFace(c) => write!(f, "internal face of size {}: {}", c.len(), c.join(" ")),
            OuterNotSimple(c) => write!(f, "outer boundary is not a simple cycle: {}", c.join(" ")),
            OuterNotConvex(c) => write!(f, "outer boundary is not convex: {}", c.join(" ")),
        }
    }
}

/// Validation result plus the faces found (each a boundary walk with the face
/// on its left; `outer` indexes the unbounded one).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DrawingReport {
    pub violations: Vec<DrawingViolation>,
    pub faces: Vec<Vec<String>>,
    pub outer: Option<usize>,
}

impl DrawingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Directed edges `(a, b)` of the outer face walk.
    pub fn outer_darts(&self) -> BTreeSet<(String, String)> {
        let Some(o) = self.outer else { return BTreeSet::new() };
        let f = &self.faces[o];
        (0..f.len()).map(|i| (f[i].clone(), f[(i + 1) % f.len()].clone())).collect()
    }
}

impl fmt::Display for DrawingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Angular order of direction vectors starting at the positive x-axis.
fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    let half = |p: &Point| u8::from(!(p.y.is_positive() || (p.y.is_zero() && p.x.is_positive())));
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&a.cross(b).signum()))
}

/// Faces of a plane straight-line drawing of a connected graph, traced with
/// each face on the left of its darts.
fn trace_faces(g: &Graph, pos: &[Point]) -> Vec<Vec<usize>> {
    let n = g.n();
    let rot: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().copied().collect();
            nb.sort_by(|&a, &b| angle_cmp(&pos[a].sub(&pos[v]), &pos[b].sub(&pos[v])));
            nb
        })
        .collect();
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (u, v) in g.edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]) {
        if used.contains(&(u, v)) {
            continue;
        }
        let mut face = Vec::new();
        let (mut a, mut b) = (u, v);
        while used.insert((a, b)) {
            face.push(a);
            let r = &rot[b];
            let k = r.iter().position(|&x| x == a).expect("symmetric adjacency");
            let c = r[(k + r.len() - 1) % r.len()];
            a = b;
            b = c;
        }
        faces.push(face);
    }
    faces
}

fn signed_area2(pts: &[&Point]) -> Scalar {
    let k = pts.len();
    (0..k).fold(Scalar::zero(), |acc, i| acc + pts[i].cross(pts[(i + 1) % k]))
}

/// Straight-line planarity, connectivity, triangular internal faces and a
/// simple convex outer boundary.
pub fn validate_drawing(g: &Graph, d: &PlaneDrawing) -> DrawingReport {
    let mut report = DrawingReport::default();
    let v = &mut report.violations;
    for name in g.names() {
        if !d.vertices.contains_key(name) {
            v.push(DrawingViolation::MissingVertex(name.clone()));
        }
    }
    for name in d.vertices.keys() {
        if g.index_of(name).is_none() {
            v.push(DrawingViolation::ExtraVertex(name.clone()));
        }
    }
    if !v.is_empty() {
        return report;
    }
    let ge = g.edge_set();
    if ge != d.edges {
        v.push(DrawingViolation::EdgeMismatch {
            only_graph: ge.difference(&d.edges).cloned().collect(),
            only_drawing: d.edges.difference(&ge).cloned().collect(),
        });
        return report;
    }
    let pos: Vec<Point> = g.names().iter().map(|n| d.vertices[n].clone()).collect();
    let name = |i: usize| g.name(i).to_string();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            if pos[i] == pos[j] {
                v.push(DrawingViolation::SharedPosition(name(i), name(j)));
            }
        }
    }
    let edges = g.edges();
    for &(a, b) in &edges {
        for k in 0..g.n() {
            if k != a && k != b && on_segment(&pos[k], &pos[a], &pos[b]) {
                v.push(DrawingViolation::VertexOnEdge { vertex: name(k), edge: g.key(a, b) });
            }
        }
    }
    for (x, &(a, b)) in edges.iter().enumerate() {
        for &(c, e) in &edges[x + 1..] {
            if a == c || a == e || b == c || b == e {
                continue;
            }
            if segments_intersect(&pos[a], &pos[b], &pos[c], &pos[e]) {
                v.push(DrawingViolation::Crossing(g.key(a, b), g.key(c, e)));
            }
        }
    }
    if !is_connected(g) {
        v.push(DrawingViolation::Disconnected);
    }
    if !v.is_empty() || g.m() == 0 {
        return report;
    }
    let faces = trace_faces(g, &pos);
    let mut outer = None;
    for (k, f) in faces.iter().enumerate() {
        let pts: Vec<&Point> = f.iter().map(|&i| &pos[i]).collect();
        if !signed_area2(&pts).is_positive() {
            outer = Some(k);
        }
    }
    let outer = outer.expect("a connected plane drawing has an outer face");
    for (k, f) in faces.iter().enumerate() {
        let names: Vec<String> = f.iter().map(|&i| name(i)).collect();
        if k == outer {
            let distinct: BTreeSet<usize> = f.iter().copied().collect();
            if distinct.len() != f.len() || f.len() < 3 {
                v.push(DrawingViolation::OuterNotSimple(names));
            } else {
                // the outer walk runs clockwise; every turn must be a right turn or straight
                let k = f.len();
                let reflex = (0..k).any(|i| {
                    crate::geometry::orient(&pos[f[i]], &pos[f[(i + 1) % k]], &pos[f[(i + 2) % k]])
                        == crate::geometry::Orientation::Ccw
                });
                if reflex {
                    v.push(DrawingViolation::OuterNotConvex(names));
                }
            }
        } else if f.len() != 3 {
            v.push(DrawingViolation::NonTriangularFace(names));
        }
    }
    report.faces = faces.iter().map(|f| f.iter().map(|&i| name(i)).collect()).collect();
    report.outer = Some(outer);
    report
}

/// Replaces every cut vertex by one copy per incident block, chaining the
/// copies with virtual edges. Copies are named `{v}_{k}` (extra underscores
/// on collision); blocks are ordered by their sorted edge names.
pub fn split_cut_vertices(g: &Graph) -> Result<(Graph, EdgeSet), ConstructError> {
    if !is_connected(g) {
        return Err(ConstructError::DisconnectedInput);
    }
    let mut blocks: Vec<EdgeSet> = crate::graph::planar_blocks(g)
        .into_iter()
        .map(|b| b.into_iter().map(|(i, j)| g.key(i, j)).collect())
        .collect();
    blocks.sort();
    let mut member: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (k, b) in blocks.iter().enumerate() {
        let vs: BTreeSet<&str> = b.iter().flat_map(|(x, y)| [x.as_str(), y.as_str()]).collect();
        for v in vs {
            member.entry(v).or_default().push(k);
        }
    }
    let mut taken: BTreeSet<String> = g.names().iter().cloned().collect();
    let mut copy: BTreeMap<(&str, usize), String> = BTreeMap::new();
    let mut out = Graph::new();
    let mut virt = EdgeSet::new();
    for v in g.names() {
        let bs = member.get(v.as_str()).cloned().unwrap_or_default();
        if bs.len() < 2 {
            out.add_vertex(v).expect("fresh name");
            continue;
        }
        let mut prev: Option<String> = None;
        for (k, &b) in bs.iter().enumerate() {
            let mut sep = "_".to_string();
            let fresh = loop {
                let c = format!("{v}{sep}{}", k + 1);
                if !taken.contains(&c) {
                    break c;
                }
                sep.push('_');
            };
            taken.insert(fresh.clone());
            out.add_vertex(&fresh).expect("fresh name");
            if let Some(p) = prev {
                out.add_edge(&p, &fresh).expect("copies exist");
                virt.insert(crate::visibility::edge_key(&p, &fresh));
            }
            copy.insert((v.as_str(), b), fresh.clone());
            prev = Some(fresh);
        }
    }
    for (k, b) in blocks.iter().enumerate() {
        for (x, y) in b {
            let map = |s: &String| copy.get(&(s.as_str(), k)).cloned().unwrap_or_else(|| s.clone());
            out.add_edge(&map(x), &map(y)).expect("endpoints exist");
        }
    }
    Ok((out, virt))
}

/// Barycentric layout of a 2-connected planar graph whose embedding has all
/// faces but the largest one triangular: that face goes on a circle, every
/// other vertex at the average of its neighbors. `None` when the graph does
/// not fit this shape.
pub fn tutte_drawing(g: &Graph) -> Option<PlaneDrawing> {
    if g.n() < 3 || !is_connected(g) {
        return None;
    }
    let blocks = planar_faces(g)?;
    if blocks.len() != 1 || crate::graph::planar_blocks(g).len() != 1 {
        return None;
    }
    let faces = &blocks[0];
    let outer = (0..faces.len()).max_by_key(|&k| (faces[k].len(), std::cmp::Reverse(k)))?;
    if faces.iter().enumerate().any(|(k, f)| k != outer && f.len() != 3) {
        return None;
    }
    let ring: Vec<usize> = faces[outer].iter().map(|n| g.index_of(n).expect("face names")).collect();
    let l = ring.len();
    let mut pos: Vec<Option<Point>> = vec![None; g.n()];
    let mut last_t: Option<Scalar> = None;
    let step = Scalar::ratio(1, 64);
    for (k, &v) in ring.iter().enumerate() {
        let theta = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / l as f64;
        let approx = ((theta / 2.0).tan() * 64.0).round() as i64;
        let mut t = Scalar::ratio(approx, 64);
        if let Some(prev) = &last_t {
            if t <= *prev {
                t = prev + &step;
            }
        }
        let t2 = &t * &t;
        let den = Scalar::one() + &t2;
        pos[v] = Some(Point::new((Scalar::one() - &t2) / &den, (&t + &t) / den));
        last_t = Some(t);
    }
    let inner: Vec<usize> = (0..g.n()).filter(|&v| pos[v].is_none()).collect();
    let col: BTreeMap<usize, usize> = inner.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let m = inner.len();
    // rows: [A | bx | by]
    let mut rows: Vec<Vec<Scalar>> = inner
        .iter()
        .map(|&v| {
            let mut row = vec![Scalar::zero(); m + 2];
            row[col[&v]] = Scalar::from_int(g.degree(v) as i64);
            for &w in g.neighbors(v) {
                match &pos[w] {
                    Some(p) => {
                        row[m] = &row[m] + &p.x;
                        row[m + 1] = &row[m + 1] + &p.y;
                    }
                    None => row[col[&w]] = &row[col[&w]] - &Scalar::one(),
                }
            }
            row
        })
        .collect();
    for c in 0..m {
        let piv = (c..m).find(|&r| !rows[r][c].is_zero())?;
        rows.swap(c, piv);
        let inv = rows[c][c].recip();
        for x in rows[c].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[c].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    for (k, &v) in inner.iter().enumerate() {
        pos[v] = Some(Point::new(rows[k][m].clone(), rows[k][m + 1].clone()));
    }
    let vertices = (0..g.n()).map(|v| (g.name(v).to_string(), pos[v].clone().expect("placed"))).collect();
    Some(PlaneDrawing { vertices, edges: g.edge_set() })
}
