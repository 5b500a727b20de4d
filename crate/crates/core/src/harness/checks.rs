use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::exec::Exec;
use crate::geometry::{apply_affine, piece_centroid, segment_hits_piece, segments_intersect, AffineMap, Scene};
use crate::graph::{
    bridge_or_triangle_violations, edge_in_triangle, is_connected, planar_or_k4, simplicial_vertices, Graph,
};
use crate::scalar::Scalar;
use crate::visibility::{compute_visibility_graph_with, sampling_oracle_edges_with, segment_is_sightline, VisGraph};

/// The executable invariants, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    BridgeOrTriangle,
    Connected,
    PlanarOrK4,
    CrossingWitnessesK4,
    SimplicialDeletion,
    OracleSubset,
    WitnessValid,
    AffineInvariance,
    ObstructedEdgeTriangle,
}

impl Invariant {
    pub const ALL: [Invariant; 9] = [
        Invariant::BridgeOrTriangle,
        Invariant::Connected,
        Invariant::PlanarOrK4,
        Invariant::CrossingWitnessesK4,
        Invariant::SimplicialDeletion,
        Invariant::OracleSubset,
        Invariant::WitnessValid,
        Invariant::AffineInvariance,
        Invariant::ObstructedEdgeTriangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::BridgeOrTriangle => "bridge-or-triangle",
            Invariant::Connected => "connected",
            Invariant::PlanarOrK4 => "planar-or-k4",
            Invariant::CrossingWitnessesK4 => "crossing-witnesses-k4",
            Invariant::SimplicialDeletion => "simplicial-deletion",
            Invariant::OracleSubset => "oracle-subset",
            Invariant::WitnessValid => "witness-valid",
            Invariant::AffineInvariance => "affine-invariance",
            Invariant::ObstructedEdgeTriangle => "obstructed-edge-triangle",
        }
    }

    /// Only meaningful when every region is a single convex piece.
    pub fn convex_only(self) -> bool {
        matches!(self, Invariant::PlanarOrK4 | Invariant::CrossingWitnessesK4 | Invariant::ObstructedEdgeTriangle)
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub invariant: Invariant,
    pub detail: String,
}

/// Outcome of every invariant on one scene.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SceneCheck {
    /// Invariants that were evaluated (convex-only ones are skipped otherwise).
    pub checked: Vec<Invariant>,
    pub failures: Vec<Failure>,
    /// Simplicial vertices whose deletion was compared.
    pub simplicial: usize,
    /// Crossing witness pairs over four distinct regions.
    pub crossings: usize,
    pub edges: usize,
}

impl SceneCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, invariant: Invariant, detail: impl Into<String>) {
        self.failures.push(Failure { invariant, detail: detail.into() });
    }
}

fn small_ratio<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

/// A random invertible map with small rational entries.
pub(crate) fn random_affine<R: Rng>(rng: &mut R) -> AffineMap {
    loop {
        let m = [[small_ratio(rng), small_ratio(rng)], [small_ratio(rng), small_ratio(rng)]];
        let t = [small_ratio(rng), small_ratio(rng)];
        if let Ok(map) = AffineMap::new(m, t) {
            return map;
        }
    }
}

fn pair_list(set: &BTreeSet<(String, String)>) -> String {
    set.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ")
}

fn common_k4(g: &Graph, a: usize, b: usize) -> bool {
    let common: Vec<usize> = g.neighbors(a).intersection(g.neighbors(b)).copied().collect();
    g.adjacent(a, b) && common.iter().enumerate().any(|(k, &x)| common[k + 1..].iter().any(|&y| g.adjacent(x, y)))
}

fn crossing_witnesses(vis: &VisGraph, g: &Graph, out: &mut SceneCheck) {
    let ws: Vec<_> = vis.witnesses.values().collect();
    for (k, p) in ws.iter().enumerate() {
        for q in &ws[k + 1..] {
            let names = [&p.region_a, &p.region_b, &q.region_a, &q.region_b];
            let distinct: BTreeSet<_> = names.iter().collect();
            if distinct.len() < 4 || !segments_intersect(&p.a, &p.b, &q.a, &q.b) {
                continue;
            }
            out.crossings += 1;
            let idx = |n: &str| g.index_of(n).expect("witness names are vertices");
            let ok_p = common_k4(g, idx(&p.region_a), idx(&p.region_b));
            let ok_q = common_k4(g, idx(&q.region_a), idx(&q.region_b));
            if !(ok_p && ok_q) {
                out.fail(
                    Invariant::CrossingWitnessesK4,
                    format!(
                        "witnesses {}-{} and {}-{} cross but an endpoint pair lies in no common K4",
                        p.region_a, p.region_b, q.region_a, q.region_b
                    ),
                );
            }
        }
    }
}

/// Segments between the centroids of two adjacent convex regions that pass
/// through a third region force the edge into a triangle.
fn obstructed_edges(s: &Scene, g: &Graph, out: &mut SceneCheck) {
    let centers: Vec<_> = s.regions.iter().map(|r| piece_centroid(&r.pieces[0])).collect();
    for (i, j) in g.edges() {
        let (ri, rj) = (s.index_of(g.name(i)).unwrap(), s.index_of(g.name(j)).unwrap());
        let blocked = s.regions.iter().enumerate().any(|(k, r)| {
            k != ri && k != rj && r.pieces.iter().any(|pc| segment_hits_piece(&centers[ri], &centers[rj], pc))
        });
        if blocked && !edge_in_triangle(g, i, j) {
            out.fail(
                Invariant::ObstructedEdgeTriangle,
                format!("edge {}-{} is obstructed between centroids yet in no triangle", g.name(i), g.name(j)),
            );
        }
    }
}

/// Runs every invariant on a valid scene. `seed` fixes the oracle samples and
/// the affine map, so a failure replays exactly.
pub fn check_scene(s: &Scene, oracle_budget: usize, seed: u64, exec: Exec) -> SceneCheck {
    let mut out = SceneCheck::default();
    let vis = match compute_visibility_graph_with(s, exec) {
        Ok(v) => v,
        Err(e) => {
            out.checked.push(Invariant::WitnessValid);
            out.fail(Invariant::WitnessValid, format!("visibility computation failed: {e}"));
            return out;
        }
    };
    let g = Graph::from(&vis);
    out.edges = g.m();
    let convex = s.convex_only();
    out.checked = Invariant::ALL.iter().copied().filter(|i| convex || !i.convex_only()).collect();

    let bad = bridge_or_triangle_violations(&g);
    if !bad.is_empty() {
        out.fail(Invariant::BridgeOrTriangle, format!("edges neither bridge nor in a triangle: {}", pair_list(&bad)));
    }
    if !is_connected(&g) {
        out.fail(Invariant::Connected, "visibility graph is disconnected");
    }
    if convex {
        if !planar_or_k4(&g) {
            out.fail(Invariant::PlanarOrK4, "visibility graph is nonplanar and K4-free");
        }
        crossing_witnesses(&vis, &g, &mut out);
        obstructed_edges(s, &g, &mut out);
    }

    for v in simplicial_vertices(&g) {
        out.simplicial += 1;
        let expected = g.without_vertex(&v).edge_set();
        match compute_visibility_graph_with(&s.without(&v), exec) {
            Ok(h) => {
                let actual: BTreeSet<_> = h.witnesses.keys().cloned().collect();
                if actual != expected {
                    let diff = crate::graph::EdgeDiff::between(&expected, &actual);
                    out.fail(Invariant::SimplicialDeletion, format!("deleting simplicial {v}: {}", diff.to_string().replace('\n', "; ")));
                }
            }
            Err(e) => out.fail(Invariant::SimplicialDeletion, format!("deleting simplicial {v}: {e}")),
        }
    }

    match sampling_oracle_edges_with(s, oracle_budget, seed, exec) {
        Ok(found) => {
            let extra: BTreeSet<_> = found.keys().filter(|k| !vis.witnesses.contains_key(*k)).cloned().collect();
            if !extra.is_empty() {
                out.fail(Invariant::OracleSubset, format!("sampled sightlines missing from exact graph: {}", pair_list(&extra)));
            }
        }
        Err(e) => out.fail(Invariant::OracleSubset, format!("oracle failed: {e}")),
    }

    for w in vis.witnesses.values() {
        if !matches!(segment_is_sightline(s, &w.region_a, &w.region_b, &w.a, &w.b), Ok(true)) {
            out.fail(Invariant::WitnessValid, format!("stored witness {}-{} is not a sightline", w.region_a, w.region_b));
        }
    }

    let map = random_affine(&mut crate::rng::stream(seed, u64::MAX));
    match compute_visibility_graph_with(&apply_affine(s, &map), exec) {
        Ok(h) if h.witnesses.keys().eq(vis.witnesses.keys()) => {}
        Ok(h) => {
            let diff = crate::graph::EdgeDiff::between(&g.edge_set(), &h.witnesses.keys().cloned().collect());
            out.fail(Invariant::AffineInvariance, format!("edge set changed: {}", diff.to_string().replace('\n', "; ")));
        }
        Err(e) => out.fail(Invariant::AffineInvariance, format!("mapped scene rejected: {e}")),
    }
    out
}
