use std::fmt;

use super::algo::{bridge_or_triangle_violations, is_connected, is_tree, k11n_parts, reduction_chain};
use super::Graph;
use crate::construct::{
    construct_k11n, construct_tree, construct_triangulated, tutte_drawing, verify_roundtrip, ConstructionParams,
    PlaneDrawing,
};
use crate::geometry::{Region, Scene};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    RefutedCompact,
    ConstructibleCompact,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::RefutedCompact => "refuted",
            Verdict::ConstructibleCompact => "constructible",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Verdict plus a human-readable trace, one step per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub evidence: Vec<String>,
    /// Verified realizing scene when constructible.
    pub scene: Option<Scene>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict: {}", self.verdict)?;
        for line in &self.evidence {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

fn pairs(set: &super::EdgeSet) -> String {
    set.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(", ")
}

pub fn classify_compact(g: &Graph) -> Classification {
    classify_compact_with(g, None)
}

/// Refutes via connectivity and the bridge-or-triangle condition on every
/// graph of the simplicial reduction; otherwise tries the constructions
/// (tree, `K_{1,1,n}`, the given drawing, an automatic barycentric drawing).
pub fn classify_compact_with(g: &Graph, drawing: Option<&PlaneDrawing>) -> Classification {
    let mut evidence = Vec::new();
    let done = |verdict, evidence, scene| Classification { verdict, evidence, scene };
    if g.n() == 0 {
        evidence.push("empty graph: realized by the empty scene".to_string());
        return done(Verdict::ConstructibleCompact, evidence, Some(Scene::default()));
    }
    if !is_connected(g) {
        evidence.push("graph is disconnected; nonempty compact visibility graphs are connected".to_string());
        return done(Verdict::RefutedCompact, evidence, None);
    }
    let mut removed = Vec::new();
    for (step, h) in reduction_chain(g) {
        if let Some(v) = step {
            removed.push(v);
        }
        let bad = bridge_or_triangle_violations(&h);
        if !bad.is_empty() {
            if !removed.is_empty() {
                evidence.push(format!("removed simplicial vertices in order: {}", removed.join(" ")));
            }
            evidence.push(format!("edges that are neither bridges nor in a triangle: {}", pairs(&bad)));
            return done(Verdict::RefutedCompact, evidence, None);
        }
    }
    evidence.push(format!(
        "necessary conditions hold on every reduction step ({} simplicial removals)",
        removed.len()
    ));
    let params = ConstructionParams::default();
    if is_tree(g) {
        match construct_tree(g) {
            Ok(s) => {
                evidence.push("tree: nested-cup construction, round trip verified".to_string());
                return done(Verdict::ConstructibleCompact, evidence, Some(s));
            }
            Err(e) => evidence.push(format!("tree construction failed: {e}")),
        }
    }
    if let Some(parts) = k11n_parts(g) {
        let n = parts.leaves.len();
        let renamed = construct_k11n(n).ok().map(|s| {
            let name = |old: &str| -> String {
                match old {
                    "u" => parts.hubs[0].clone(),
                    "v" => parts.hubs[1].clone(),
                    w => parts.leaves[w[1..].parse::<usize>().expect("leaf index")].clone(),
                }
            };
            Scene::new(s.regions.iter().map(|r| Region::new(name(&r.name), r.pieces.clone())).collect())
        });
        match renamed.map(|s| (verify_roundtrip(g, &s), s)) {
            Some((Ok(diff), s)) if diff.is_empty() => {
                evidence.push(format!("K_{{1,1,{n}}}: comb construction, round trip verified"));
                return done(Verdict::ConstructibleCompact, evidence, Some(s));
            }
            _ => evidence.push("K_{1,1,n} comb construction failed verification".to_string()),
        }
    }
    if let Some(d) = drawing {
        match construct_triangulated(g, d, &params) {
            Ok(s) => {
                evidence.push("given drawing: hook construction, round trip verified".to_string());
                return done(Verdict::ConstructibleCompact, evidence, Some(s));
            }
            Err(e) => evidence.push(format!("given drawing not usable: {e}")),
        }
    }
    if let Some(d) = tutte_drawing(g) {
        match construct_triangulated(g, &d, &params) {
            Ok(s) => {
                evidence.push("barycentric drawing: hook construction, round trip verified".to_string());
                return done(Verdict::ConstructibleCompact, evidence, Some(s));
            }
            Err(e) => evidence.push(format!("barycentric drawing not usable: {e}")),
        }
    }
    evidence.push("no construction applies".to_string());
    done(Verdict::Unknown, evidence, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn fixtures() {
        for n in 4..=10 {
            assert_eq!(classify_compact(&cycle(n)).verdict, Verdict::RefutedCompact, "C{n}");
        }
        let c = classify_compact(&c4_with_ears());
        assert_eq!(c.verdict, Verdict::RefutedCompact);
        assert!(c.to_string().contains("removed simplicial vertices in order: w"), "{c}");
        assert_eq!(classify_compact(&path(5)).verdict, Verdict::ConstructibleCompact);
        assert_eq!(classify_compact(&complete(4)).verdict, Verdict::ConstructibleCompact);
        let mut two = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        assert_eq!(classify_compact(&two).verdict, Verdict::RefutedCompact);
        two.add_edge("b", "c").unwrap();
        assert_eq!(classify_compact(&two).verdict, Verdict::ConstructibleCompact);
        assert_eq!(classify_compact(&Graph::new()).verdict, Verdict::ConstructibleCompact);
    }

    #[test]
    fn relabelled_k11n() {
        let g = Graph::from_edges(
            &["p", "q", "r", "s", "t"],
            &[("r", "t"), ("r", "p"), ("t", "p"), ("r", "q"), ("t", "q"), ("r", "s"), ("t", "s")],
        )
        .unwrap();
        let c = classify_compact(&g);
        assert_eq!(c.verdict, Verdict::ConstructibleCompact, "{c}");
        assert!(c.to_string().contains("K_{1,1,3}"));
    }

    #[test]
    fn nonplanar_without_k4_is_unknown_or_refuted() {
        // K3,3 is triangle-free, so its edges violate the bridge-or-triangle condition
        assert_eq!(classify_compact(&complete_bipartite(3, 3)).verdict, Verdict::RefutedCompact);
        // K5 passes all conditions; its embedding-free shape has no drawing
        assert_eq!(classify_compact(&complete(5)).verdict, Verdict::Unknown);
    }
}
