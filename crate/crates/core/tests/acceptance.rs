//! Acceptance run: one PASS/FAIL line per criterion. Every property is
//! re-derived here with the brute-force references in `common`, independent
//! of the library's own checks.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use common::{trees, Dense};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use visgraph::construct::{construct_k11n, construct_tree, construct_triangulated, ConstructionParams, PlaneDrawing};
use visgraph::geometry::{pt, Piece, Point, Region, Scene};
use visgraph::graph::{
    bridges, classify_compact, contains_k4, edge_in_triangle, families, is_planar, EdgeSet, Graph, Verdict,
};
use visgraph::harness::{fuzz, random_scene, FuzzConfig};
use visgraph::visibility::{compute_visibility_graph, sampling_oracle_edges, segment_is_sightline, VisGraph};
use visgraph::Scalar;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, summary: String) -> Outcome {
    if problems.is_empty() {
        Outcome { pass: true, detail: summary }
    } else {
        let shown: Vec<_> = problems.iter().take(5).cloned().collect();
        Outcome { pass: false, detail: format!("{summary}; {} problems, e.g. {}", problems.len(), shown.join(" | ")) }
    }
}

fn key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

fn edges_of(vis: &VisGraph) -> EdgeSet {
    vis.witnesses.keys().cloned().collect()
}

// ---- exact segment predicates, written against the public point type only

fn cross(o: &Point, a: &Point, b: &Point) -> i32 {
    let v = &(&a.x - &o.x) * &(&b.y - &o.y) - &(&a.y - &o.y) * &(&b.x - &o.x);
    v.signum()
}

fn within(a: &Point, b: &Point, p: &Point) -> bool {
    let between = |u: &Scalar, v: &Scalar, w: &Scalar| (u <= w && w <= v) || (v <= w && w <= u);
    between(&a.x, &b.x, &p.x) && between(&a.y, &b.y, &p.y)
}

fn closed_segments_meet(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> bool {
    let (o1, o2, o3, o4) = (cross(p1, p2, q1), cross(p1, p2, q2), cross(q1, q2, p1), cross(q1, q2, p2));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within(p1, p2, q1))
        || (o2 == 0 && within(p1, p2, q2))
        || (o3 == 0 && within(q1, q2, p1))
        || (o4 == 0 && within(q1, q2, p2))
}

// ---- per-scene checks shared by the fuzz criteria

#[derive(Default)]
struct FuzzTally {
    scenes: usize,
    c1: Vec<String>,
    c2: Vec<String>,
    c3: Vec<String>,
    crossings: usize,
    c4: Vec<String>,
    simplicial: usize,
    c6: Vec<String>,
}

fn common_k4(d: &Dense, a: usize, b: usize) -> bool {
    let n = d.n();
    d.adj[a][b]
        && (0..n).any(|c| (c + 1..n).any(|e| [c, e].iter().all(|&x| d.adj[a][x] && d.adj[b][x]) && d.adj[c][e]))
}

fn check_fuzz_scene(tag: &str, s: &Scene, convex: bool, seed: u64, t: &mut FuzzTally) {
    t.scenes += 1;
    let vis = match compute_visibility_graph(s) {
        Ok(v) => v,
        Err(e) => {
            t.c6.push(format!("{tag}: {e}"));
            return;
        }
    };
    let g = Graph::from(&vis);
    let d = Dense::of(&g);
    let idx = |name: &str| d.names.iter().position(|x| x == name).unwrap();

    let br = d.bridges();
    for (i, j) in d.edges() {
        if !br.contains(&d.key(i, j)) && !d.in_triangle(i, j) {
            t.c1.push(format!("{tag}: edge {}-{} neither bridge nor in triangle", d.names[i], d.names[j]));
        }
    }
    if !d.connected() {
        t.c1.push(format!("{tag}: disconnected"));
    }

    if convex {
        if !s.regions.iter().all(|r| r.pieces.len() == 1) {
            t.c2.push(format!("{tag}: convex run produced a multi-piece region"));
        }
        if !d.k4() && !d.planar() {
            t.c2.push(format!("{tag}: nonplanar without K4"));
        }
        let ws: Vec<_> = vis.witnesses.values().collect();
        for (k, p) in ws.iter().enumerate() {
            for q in &ws[k + 1..] {
                let names: BTreeSet<_> = [&p.region_a, &p.region_b, &q.region_a, &q.region_b].into_iter().collect();
                if names.len() == 4 && closed_segments_meet(&p.a, &p.b, &q.a, &q.b) {
                    t.crossings += 1;
                    if !common_k4(&d, idx(&p.region_a), idx(&p.region_b)) || !common_k4(&d, idx(&q.region_a), idx(&q.region_b)) {
                        t.c3.push(format!("{tag}: {}-{} x {}-{}", p.region_a, p.region_b, q.region_a, q.region_b));
                    }
                }
            }
        }
    }

    for v in 0..d.n() {
        if !d.simplicial(v) {
            continue;
        }
        t.simplicial += 1;
        let name = &d.names[v];
        let expected: EdgeSet = g.edge_set().into_iter().filter(|(a, b)| a != name && b != name).collect();
        match compute_visibility_graph(&s.without(name)) {
            Ok(h) if edges_of(&h) == expected => {}
            Ok(_) => t.c4.push(format!("{tag}: deleting {name} changes other edges")),
            Err(e) => t.c4.push(format!("{tag}: deleting {name}: {e}")),
        }
    }

    match sampling_oracle_edges(s, 200, seed) {
        Ok(found) => {
            for (k, w) in found {
                if !vis.witnesses.contains_key(&k) {
                    t.c6.push(format!("{tag}: oracle found {}-{} missing from exact graph", k.0, k.1));
                }
                if !free_segment(s, &w.region_a, &w.region_b, &w.a, &w.b) {
                    t.c6.push(format!("{tag}: oracle witness {}-{} is blocked", k.0, k.1));
                }
            }
        }
        Err(e) => t.c6.push(format!("{tag}: oracle error {e}")),
    }
    for w in vis.witnesses.values() {
        let lib = matches!(segment_is_sightline(s, &w.region_a, &w.region_b, &w.a, &w.b), Ok(true));
        if !lib || !free_segment(s, &w.region_a, &w.region_b, &w.a, &w.b) {
            t.c6.push(format!("{tag}: witness {}-{} rejected", w.region_a, w.region_b));
        }
    }
}

fn point_in_piece(p: &Point, pc: &Piece) -> bool {
    match pc {
        Piece::Point(q) => p == q,
        Piece::Segment(a, b) => cross(a, b, p) == 0 && within(a, b, p),
        Piece::Polygon(vs) => (0..vs.len()).all(|k| cross(&vs[k], &vs[(k + 1) % vs.len()], p) >= 0),
    }
}

fn segment_meets_piece(a: &Point, b: &Point, pc: &Piece) -> bool {
    match pc {
        Piece::Point(q) => cross(a, b, q) == 0 && within(a, b, q),
        Piece::Segment(c, d) => closed_segments_meet(a, b, c, d),
        Piece::Polygon(vs) => {
            point_in_piece(a, pc)
                || point_in_piece(b, pc)
                || (0..vs.len()).any(|k| closed_segments_meet(a, b, &vs[k], &vs[(k + 1) % vs.len()]))
        }
    }
}

/// Endpoints lie in their regions and the closed segment avoids every other region.
fn free_segment(s: &Scene, ra: &str, rb: &str, a: &Point, b: &Point) -> bool {
    let region = |n: &str| s.regions.iter().find(|r| r.name == n).unwrap();
    region(ra).pieces.iter().any(|pc| point_in_piece(a, pc))
        && region(rb).pieces.iter().any(|pc| point_in_piece(b, pc))
        && s.regions
            .iter()
            .filter(|r| r.name != ra && r.name != rb)
            .all(|r| r.pieces.iter().all(|pc| !segment_meets_piece(a, b, pc)))
}

fn run_fuzz(tally: &mut FuzzTally, config: &FuzzConfig, label: &str) -> Vec<String> {
    let mut problems = Vec::new();
    for it in 0..config.iterations {
        match random_scene(config, it) {
            Ok(s) => check_fuzz_scene(&format!("{label}#{it}"), &s, config.convex_only, it as u64, tally),
            Err(e) => problems.push(format!("{label}#{it}: {e}")),
        }
    }
    let report = fuzz(config).expect("fuzz runs");
    if report.failures() > 0 {
        problems.push(format!("{label}: library fuzz report has {} failures", report.failures()));
    }
    problems
}

// ---- constructions

fn roundtrip(g: &Graph, s: &Scene) -> Result<(), String> {
    let names: BTreeSet<&str> = s.regions.iter().map(|r| r.name.as_str()).collect();
    let want: BTreeSet<&str> = g.names().iter().map(String::as_str).collect();
    if names != want {
        return Err(format!("names differ: {names:?} vs {want:?}"));
    }
    let got = edges_of(&compute_visibility_graph(s).map_err(|e| e.to_string())?);
    if got != g.edge_set() {
        return Err(format!("edges differ: got {got:?}"));
    }
    Ok(())
}

fn drawing(pts: &[(&str, Point)], edges: &[(&str, &str)]) -> PlaneDrawing {
    PlaneDrawing {
        vertices: pts.iter().map(|(n, p)| (n.to_string(), p.clone())).collect(),
        edges: edges.iter().map(|(a, b)| key(a, b)).collect(),
    }
}

fn tri_key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Random internal triangulation of a big triangle: stacked insertions at
/// rational interior points followed by random legal flips.
fn random_triangulation(rng: &mut ChaCha8Rng, n: usize) -> PlaneDrawing {
    let mut pos = vec![pt(0, 0), pt(120, 0), pt(0, 120)];
    let mut tris: Vec<[usize; 3]> = vec![[0, 1, 2]];
    while pos.len() < n {
        let t = tris.swap_remove(rng.gen_range(0..tris.len()));
        let w: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=6)).collect();
        let total = Scalar::from_int(w.iter().sum());
        let mut x = Scalar::zero();
        let mut y = Scalar::zero();
        for k in 0..3 {
            x = &x + &(&pos[t[k]].x * &Scalar::from_int(w[k]));
            y = &y + &(&pos[t[k]].y * &Scalar::from_int(w[k]));
        }
        let p = pos.len();
        pos.push(Point::new(&x / &total, &y / &total));
        tris.extend([[t[0], t[1], p], [t[1], t[2], p], [t[2], t[0], p]]);
    }
    for _ in 0..3 * n {
        let mut shared: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (k, t) in tris.iter().enumerate() {
            for e in 0..3 {
                shared.entry(tri_key(t[e], t[(e + 1) % 3])).or_default().push(k);
            }
        }
        let internal: Vec<_> = shared.iter().filter(|(_, ts)| ts.len() == 2).map(|(e, ts)| (*e, ts.clone())).collect();
        let ((a, b), ts) = &internal[rng.gen_range(0..internal.len())];
        let apex = |t: &[usize; 3]| *t.iter().find(|&&v| v != *a && v != *b).unwrap();
        let (c, d) = (apex(&tris[ts[0]]), apex(&tris[ts[1]]));
        let convex = cross(&pos[*a], &pos[*b], &pos[c]) * cross(&pos[*a], &pos[*b], &pos[d]) < 0
            && cross(&pos[c], &pos[d], &pos[*a]) * cross(&pos[c], &pos[d], &pos[*b]) < 0;
        if convex && !shared.contains_key(&tri_key(c, d)) {
            tris[ts[0]] = [*a, c, d];
            tris[ts[1]] = [*b, c, d];
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut edges = EdgeSet::new();
    for t in &tris {
        for e in 0..3 {
            edges.insert(key(&names[t[e]], &names[t[(e + 1) % 3]]));
        }
    }
    PlaneDrawing { vertices: names.into_iter().zip(pos).collect(), edges }
}

fn criterion5() -> Outcome {
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tree_sizes = BTreeSet::new();
    for k in 0..500 {
        let n = rng.gen_range(1..=9);
        let t = families::random_tree(&mut rng, n);
        tree_sizes.insert(n);
        match construct_tree(&t) {
            Ok(s) => {
                if let Err(e) = roundtrip(&t, &s) {
                    problems.push(format!("tree sample {k}: {e}"));
                }
            }
            Err(e) => problems.push(format!("tree sample {k}: {e}")),
        }
    }

    let mut corpus = vec![
        ("K3".to_string(), drawing(&[("a", pt(0, 0)), ("b", pt(4, 0)), ("c", pt(0, 4))], &[("a", "b"), ("b", "c"), ("a", "c")])),
        (
            "K4".to_string(),
            drawing(
                &[("a", pt(0, 0)), ("b", pt(6, 0)), ("c", pt(0, 6)), ("d", pt(2, 2))],
                &[("a", "b"), ("b", "c"), ("a", "c"), ("a", "d"), ("b", "d"), ("c", "d")],
            ),
        ),
        (
            "octahedron".to_string(),
            drawing(
                &[("a", pt(0, 0)), ("b", pt(12, 0)), ("c", pt(6, 12)), ("x", pt(6, 2)), ("y", pt(8, 6)), ("z", pt(4, 6))],
                &[
                    ("a", "b"), ("b", "c"), ("c", "a"), ("x", "y"), ("y", "z"), ("z", "x"),
                    ("a", "x"), ("a", "z"), ("b", "x"), ("b", "y"), ("c", "y"), ("c", "z"),
                ],
            ),
        ),
    ];
    let mut trng = ChaCha8Rng::seed_from_u64(55);
    for k in 0..10 {
        let n = trng.gen_range(4..=10);
        corpus.push((format!("random triangulation {k} (n={n})"), random_triangulation(&mut trng, n)));
    }
    for (name, d) in &corpus {
        let g = d.graph();
        match construct_triangulated(&g, d, &ConstructionParams::default()) {
            Ok(s) => {
                if let Err(e) = roundtrip(&g, &s) {
                    problems.push(format!("{name}: {e}"));
                }
            }
            Err(e) => problems.push(format!("{name}: {e}")),
        }
    }

    for n in 0..=15 {
        let mut names = vec!["u".to_string(), "v".to_string()];
        names.extend((0..n).map(|i| format!("w{i}")));
        let mut edges = vec![("u".to_string(), "v".to_string())];
        for i in 0..n {
            edges.push(("u".to_string(), format!("w{i}")));
            edges.push(("v".to_string(), format!("w{i}")));
        }
        let target = Graph::from_edges(&names, &edges).unwrap();
        match construct_k11n(n) {
            Ok(s) => {
                if let Err(e) = roundtrip(&target, &s) {
                    problems.push(format!("K1,1,{n}: {e}"));
                }
            }
            Err(e) => problems.push(format!("K1,1,{n}: {e}")),
        }
    }
    outcome(problems, format!("500 trees (sizes {tree_sizes:?}), {} triangulated drawings, K1,1,n for n=0..15", corpus.len()))
}

// ---- affine invariance

fn map_point(m: &[[Scalar; 2]; 2], t: &[Scalar; 2], p: &Point) -> Point {
    Point::new(&(&(&m[0][0] * &p.x) + &(&m[0][1] * &p.y)) + &t[0], &(&(&m[1][0] * &p.x) + &(&m[1][1] * &p.y)) + &t[1])
}

fn criterion7() -> Outcome {
    let mut problems = Vec::new();
    let config = FuzzConfig { seed: 77, ..FuzzConfig::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut small = || Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5));
    for it in 0..100 {
        let s = random_scene(&config, it).expect("scene");
        let (m, t) = loop {
            let m = [[small(), small()], [small(), small()]];
            let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
            if !det.is_zero() {
                break (m, [small(), small()]);
            }
        };
        let flip = (&(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])).is_negative();
        let mapped = Scene::new(
            s.regions
                .iter()
                .map(|r| {
                    let pieces = r
                        .pieces
                        .iter()
                        .map(|pc| match pc {
                            Piece::Point(p) => Piece::Point(map_point(&m, &t, p)),
                            Piece::Segment(a, b) => Piece::Segment(map_point(&m, &t, a), map_point(&m, &t, b)),
                            Piece::Polygon(vs) => {
                                let mut out: Vec<Point> = vs.iter().map(|p| map_point(&m, &t, p)).collect();
                                if flip {
                                    out.reverse();
                                }
                                Piece::Polygon(out)
                            }
                        })
                        .collect();
                    Region::new(r.name.clone(), pieces)
                })
                .collect(),
        );
        let before = edges_of(&compute_visibility_graph(&s).unwrap());
        match compute_visibility_graph(&mapped) {
            Ok(h) if edges_of(&h) == before => {}
            Ok(_) => problems.push(format!("scene {it}: edge set changed")),
            Err(e) => problems.push(format!("scene {it}: {e}")),
        }
    }
    outcome(problems, "100 scenes under random invertible rational maps".into())
}

// ---- classifier fixtures and brute-force agreement

fn criterion8() -> Outcome {
    let mut problems = Vec::new();
    let mut expect = |label: String, g: &Graph, want: Verdict| {
        let got = classify_compact(g).verdict;
        if got != want {
            problems.push(format!("{label}: expected {want}, got {got}"));
        }
    };
    for n in 4..=10 {
        expect(format!("C{n}"), &families::cycle(n), Verdict::RefutedCompact);
    }
    expect("C4 with ears".into(), &families::c4_with_ears(), Verdict::RefutedCompact);
    let mut count = 0;
    for n in 1..=8 {
        for t in trees(n) {
            count += 1;
            expect(format!("tree {count} on {n} vertices"), &t, Verdict::ConstructibleCompact);
        }
    }
    expect("K4".into(), &families::complete(4), Verdict::ConstructibleCompact);
    let two = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
    expect("two disjoint edges".into(), &two, Verdict::RefutedCompact);
    outcome(problems, format!("C4..C10, C4 with ears, {count} unlabelled trees on <=8 vertices, K4, 2K2"))
}

fn criterion9() -> Outcome {
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut planar = 0;
    for k in 0..2000 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.15..0.9);
        let g = common::random_graph(&mut rng, n, p);
        let d = Dense::of(&g);
        if bridges(&g) != d.bridges() {
            problems.push(format!("graph {k}: bridges"));
        }
        for (i, j) in d.edges() {
            let (gi, gj) = (g.index_of(&d.names[i]).unwrap(), g.index_of(&d.names[j]).unwrap());
            if edge_in_triangle(&g, gi, gj) != d.in_triangle(i, j) {
                problems.push(format!("graph {k}: triangle membership of {}-{}", d.names[i], d.names[j]));
            }
        }
        if contains_k4(&g).is_some() != d.k4() {
            problems.push(format!("graph {k}: K4"));
        }
        let brute = d.planar();
        planar += usize::from(brute);
        if is_planar(&g) != brute {
            problems.push(format!("graph {k}: planarity"));
        }
    }
    outcome(problems, format!("2000 random graphs on <=7 vertices ({planar} planar)"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();

    let mut mixed = FuzzTally::default();
    let mixed_cfg = FuzzConfig { iterations: 1000, seed: 42, ..FuzzConfig::default() };
    let gen_mixed = run_fuzz(&mut mixed, &mixed_cfg, "mixed");
    let mut convex = FuzzTally::default();
    let convex_cfg = FuzzConfig { iterations: 500, convex_only: true, seed: 43, ..FuzzConfig::default() };
    let gen_convex = run_fuzz(&mut convex, &convex_cfg, "convex");

    let mut c1 = gen_mixed.clone();
    c1.extend(mixed.c1.iter().cloned());
    c1.extend(convex.c1.iter().cloned());
    results.push((1, "edges are bridges or in triangles; graphs connected", outcome(c1, format!("{} mixed scenes", mixed.scenes))));
    let mut c2 = gen_convex;
    c2.extend(convex.c2.iter().cloned());
    results.push((2, "convex scenes give planar or K4-containing graphs", outcome(c2, format!("{} convex scenes", convex.scenes))));
    results.push((
        3,
        "crossing witnesses on four regions lie in K4s",
        outcome(convex.c3.clone(), format!("{} crossing witness pairs", convex.crossings)),
    ));
    let total_simplicial = mixed.simplicial + convex.simplicial;
    let mut c4: Vec<String> = mixed.c4.iter().chain(&convex.c4).cloned().collect();
    if total_simplicial < 200 {
        c4.push(format!("only {total_simplicial} simplicial occurrences"));
    }
    results.push((4, "deleting a simplicial region deletes only its vertex", outcome(c4, format!("{total_simplicial} simplicial occurrences"))));
    results.push((5, "constructions round-trip exactly", criterion5()));
    let c6: Vec<String> = mixed.c6.iter().chain(&convex.c6).cloned().collect();
    results.push((6, "sampled edges are a subset; witnesses are sightlines", outcome(c6, format!("{} scenes", mixed.scenes + convex.scenes))));
    results.push((7, "edge sets survive affine maps", criterion7()));
    results.push((8, "classifier fixtures", criterion8()));
    results.push((9, "graph algorithms match brute force", criterion9()));

    let mut failed = 0;
    for (n, name, o) in &results {
        println!("criterion {n} {}: {name} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed in {:.1?}", results.len() - failed, results.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
