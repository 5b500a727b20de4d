//! Sightlines and visibility graphs.

mod kernel;
mod ring;

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;
use serde_json::Value;

use crate::exec::{map_slice, Exec};
use crate::geometry::{
    coords, parse_value, point_of, segment_hits_piece, validate_scene, BBox, Coord, FormatError, Piece, Point, Scene,
    ValidationReport,
};
use crate::scalar::Scalar;

/// A sightline between two regions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub region_a: String,
    pub region_b: String,
    pub a: Point,
    pub b: Point,
}

impl Witness {
    /// Same witness read from the other side.
    pub fn reversed(&self) -> Witness {
        Witness { region_a: self.region_b.clone(), region_b: self.region_a.clone(), a: self.b.clone(), b: self.a.clone() }
    }
}

/// Visibility graph of a scene. Edges are keyed by name pairs with the smaller
/// name first; the stored witness runs from the first to the second.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VisGraph {
    pub vertices: Vec<String>,
    pub witnesses: BTreeMap<(String, String), Witness>,
}

impl VisGraph {
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.witnesses.keys().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn edge_count(&self) -> usize {
        self.witnesses.len()
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.witnesses.contains_key(&edge_key(a, b))
    }

    pub fn witness(&self, a: &str, b: &str) -> Option<&Witness> {
        self.witnesses.get(&edge_key(a, b))
    }

    /// Edge set as sorted name pairs.
    pub fn edge_set(&self) -> Vec<(String, String)> {
        self.witnesses.keys().cloned().collect()
    }
}

pub(crate) fn edge_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VisibilityError {
    #[error("unknown region `{0}`")]
    UnknownRegion(String),
    #[error("point {point} is not in region `{region}`")]
    EndpointNotInRegion { region: String, point: Point },
    #[error("a region cannot be paired with itself (`{0}`)")]
    SameRegion(String),
    #[error("invalid scene:\n{0}")]
    InvalidScene(ValidationReport),
    #[error("internal error: witness for `{0}`-`{1}` failed re-verification")]
    WitnessRejected(String, String),
}

fn region_index(s: &Scene, name: &str) -> Result<usize, VisibilityError> {
    s.index_of(name).ok_or_else(|| VisibilityError::UnknownRegion(name.to_string()))
}

fn pair_indices(s: &Scene, a: &str, b: &str) -> Result<(usize, usize), VisibilityError> {
    let (i, j) = (region_index(s, a)?, region_index(s, b)?);
    if i == j {
        return Err(VisibilityError::SameRegion(a.to_string()));
    }
    Ok((i, j))
}

fn free_of_others(s: &Scene, i: usize, j: usize, a: &Point, b: &Point) -> bool {
    let seg = BBox::of_points([a, b].into_iter());
    s.regions.iter().enumerate().filter(|&(k, _)| k != i && k != j).all(|(_, r)| {
        r.pieces.iter().all(|pc| !pc.bbox().overlaps(&seg) || !segment_hits_piece(a, b, pc))
    })
}

/// Whether the closed segment `ab` meets no region other than `A` and `B`.
/// The endpoints must lie in their regions.
pub fn segment_is_sightline(s: &Scene, a_name: &str, b_name: &str, a: &Point, b: &Point) -> Result<bool, VisibilityError> {
    let (i, j) = pair_indices(s, a_name, b_name)?;
    for (k, p, name) in [(i, a, a_name), (j, b, b_name)] {
        if !s.regions[k].contains_point(p) {
            return Err(VisibilityError::EndpointNotInRegion { region: name.to_string(), point: p.clone() });
        }
    }
    Ok(free_of_others(s, i, j, a, b))
}

/// A sightline between `A` and `B` if one exists, oriented from `A`. The scene
/// is assumed valid.
pub fn sightline_exists(s: &Scene, a_name: &str, b_name: &str) -> Result<Option<Witness>, VisibilityError> {
    let (i, j) = pair_indices(s, a_name, b_name)?;
    Ok(kernel::one_pair(s, i, j).map(|(a, b)| Witness {
        region_a: a_name.to_string(),
        region_b: b_name.to_string(),
        a,
        b,
    }))
}

/// Full visibility graph; every witness is re-verified before returning.
pub fn compute_visibility_graph(s: &Scene) -> Result<VisGraph, VisibilityError> {
    compute_visibility_graph_with(s, Exec::default())
}

pub fn compute_visibility_graph_with(s: &Scene, exec: Exec) -> Result<VisGraph, VisibilityError> {
    let report = validate_scene(s);
    if !report.is_valid() {
        return Err(VisibilityError::InvalidScene(report));
    }
    let pairs = kernel::all_pairs(s, exec);
    let mut g = VisGraph { vertices: s.names(), witnesses: BTreeMap::new() };
    for ((i, j), (pi, pj)) in pairs {
        let (ni, nj) = (&s.regions[i].name, &s.regions[j].name);
        let w = Witness { region_a: ni.clone(), region_b: nj.clone(), a: pi, b: pj };
        let w = if ni <= nj { w } else { w.reversed() };
        if !segment_is_sightline(s, &w.region_a, &w.region_b, &w.a, &w.b)? {
            return Err(VisibilityError::WitnessRejected(w.region_a, w.region_b));
        }
        g.witnesses.insert((w.region_a.clone(), w.region_b.clone()), w);
    }
    Ok(g)
}

/// Vertices and edge midpoints of a region, deduplicated in first-seen order.
fn probe_points(pieces: &[Piece]) -> (Vec<Point>, Vec<Point>) {
    let mut verts: Vec<Point> = Vec::new();
    let mut mids: Vec<Point> = Vec::new();
    for pc in pieces {
        for v in pc.vertex_vec() {
            if !verts.contains(&v) {
                verts.push(v);
            }
        }
        for (a, b) in pc.edges() {
            let m = a.midpoint(b);
            if !mids.contains(&m) {
                mids.push(m);
            }
        }
    }
    (verts, mids)
}

fn random_point<R: Rng>(rng: &mut R, pieces: &[Piece]) -> Point {
    let pc = &pieces[rng.gen_range(0..pieces.len())];
    let vs = pc.vertex_vec();
    let weights: Vec<i64> = loop {
        let w: Vec<i64> = vs.iter().map(|_| rng.gen_range(0..=16)).collect();
        if w.iter().any(|&x| x > 0) {
            break w;
        }
    };
    let total = Scalar::from_int(weights.iter().sum());
    let (mut x, mut y) = (Scalar::zero(), Scalar::zero());
    for (v, w) in vs.iter().zip(&weights) {
        let w = Scalar::from_int(*w);
        x = x + &v.x * &w;
        y = y + &v.y * &w;
    }
    Point::new(x / &total, y / total)
}

/// Sound lower bound on the edge set: for every region pair, tries up to
/// `budget` segments (vertex pairs, then edge midpoints, then seeded random
/// convex combinations) and keeps the first free one.
pub fn sampling_oracle_edges(s: &Scene, budget: usize, seed: u64) -> Result<BTreeMap<(String, String), Witness>, VisibilityError> {
    sampling_oracle_edges_with(s, budget, seed, Exec::default())
}

pub fn sampling_oracle_edges_with(
    s: &Scene,
    budget: usize,
    seed: u64,
    exec: Exec,
) -> Result<BTreeMap<(String, String), Witness>, VisibilityError> {
    let report = validate_scene(s);
    if !report.is_valid() {
        return Err(VisibilityError::InvalidScene(report));
    }
    let budget = budget.max(1);
    let probes: Vec<_> = s.regions.iter().map(|r| probe_points(&r.pieces)).collect();
    let n = s.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let found = map_slice(exec, &pairs, |&(i, j)| {
        let ((vi, mi), (vj, mj)) = (&probes[i], &probes[j]);
        let free = |a: &Point, b: &Point| free_of_others(s, i, j, a, b).then(|| (a.clone(), b.clone()));
        let deterministic = vi
            .iter()
            .flat_map(|a| vj.iter().map(move |b| (a, b)))
            .chain(mi.iter().flat_map(|a| vj.iter().chain(mj).map(move |b| (a, b))))
            .chain(vi.iter().flat_map(|a| mj.iter().map(move |b| (a, b))));
        let mut tried = 0usize;
        for (a, b) in deterministic.take(budget) {
            tried += 1;
            if let Some(w) = free(a, b) {
                return Some(w);
            }
        }
        let mut rng = crate::rng::stream(seed, (i * n + j) as u64);
        for _ in tried..budget {
            let a = random_point(&mut rng, &s.regions[i].pieces);
            let b = random_point(&mut rng, &s.regions[j].pieces);
            if let Some(w) = free(&a, &b) {
                return Some(w);
            }
        }
        None
    });
    let mut out = BTreeMap::new();
    for (&(i, j), hit) in pairs.iter().zip(found) {
        if let Some((a, b)) = hit {
            let w = Witness { region_a: s.regions[i].name.clone(), region_b: s.regions[j].name.clone(), a, b };
            let w = if w.region_a <= w.region_b { w } else { w.reversed() };
            out.insert((w.region_a.clone(), w.region_b.clone()), w);
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct SidecarEdge<'a> {
    a: &'a str,
    b: &'a str,
    pa: [Coord; 2],
    pb: [Coord; 2],
}

#[derive(Serialize)]
struct Sidecar<'a> {
    edges: Vec<SidecarEdge<'a>>,
}

/// Witness sidecar JSON: `{"edges":[{"a","b","pa","pb"}]}`.
pub fn witnesses_to_json(g: &VisGraph) -> String {
    let side = Sidecar {
        edges: g
            .witnesses
            .values()
            .map(|w| SidecarEdge { a: &w.region_a, b: &w.region_b, pa: coords(&w.a), pb: coords(&w.b) })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&side).expect("sidecar serializes");
    text.push('\n');
    text
}

pub fn parse_witnesses(text: &str) -> Result<Vec<Witness>, FormatError> {
    let root = parse_value(text)?;
    let edges = root
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::schema("$", "expected object with `edges` array"))?;
    edges
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let path = format!("edges[{k}]");
            let name = |key: &str| -> Result<String, FormatError> {
                e.get(key)
                    .and_then(Value::as_str)
                    .map(str::to_string)
                    .ok_or_else(|| FormatError::schema(&format!("{path}.{key}"), "expected string"))
            };
            let point = |key: &str| -> Result<Point, FormatError> {
                let v = e.get(key).ok_or_else(|| FormatError::schema(&path, format!("missing field `{key}`")))?;
                point_of(v, &format!("{path}.{key}"))
            };
            Ok(Witness { region_a: name("a")?, region_b: name("b")?, a: point("pa")?, b: point("pb")? })
        })
        .collect()
}
