use std::collections::BTreeMap;
use std::fmt;

use super::piece::{pieces_intersect, BBox, Piece, PieceError};
use super::point::Point;

/// One vertex of the visibility graph: a connected union of pieces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Region {
    pub name: String,
    pub pieces: Vec<Piece>,
}

impl Region {
    pub fn new(name: impl Into<String>, pieces: Vec<Piece>) -> Self {
        Region { name: name.into(), pieces }
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.pieces.iter().any(|pc| pc.contains_point(p))
    }

    pub fn bbox(&self) -> BBox {
        let mut it = self.pieces.iter().map(Piece::bbox);
        let first = it.next().expect("empty region");
        it.fold(first, |acc, b| acc.union(&b))
    }

    /// Distinct piece vertices in first-seen order.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out: Vec<Point> = Vec::new();
        for pc in &self.pieces {
            for v in pc.vertex_vec() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn is_convex_piece(&self) -> bool {
        self.pieces.len() == 1
    }
}

/// A set of named regions; see [`validate_scene`] for the invariants.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Scene {
    pub regions: Vec<Region>,
}

impl Scene {
    pub fn new(regions: Vec<Region>) -> Self {
        Scene { regions }
    }

    /// Every region is a single point, segment or polygon.
    pub fn convex_only(&self) -> bool {
        self.regions.iter().all(Region::is_convex_piece)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.regions.iter().position(|r| r.name == name)
    }

    pub fn region(&self, name: &str) -> Option<&Region> {
        self.regions.iter().find(|r| r.name == name)
    }

    pub fn names(&self) -> Vec<String> {
        self.regions.iter().map(|r| r.name.clone()).collect()
    }

    pub fn without(&self, name: &str) -> Scene {
        Scene { regions: self.regions.iter().filter(|r| r.name != name).cloned().collect() }
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    InvalidName { region: String },
    DuplicateName { region: String },
    EmptyRegion { region: String },
    MalformedPiece { region: String, piece: usize, error: PieceError },
    DisconnectedRegion { region: String, components: usize },
    Overlap { a: String, b: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidName { region } => write!(f, "region name `{region}` is not an ASCII identifier"),
            Violation::DuplicateName { region } => write!(f, "duplicate region name `{region}`"),
            Violation::EmptyRegion { region } => write!(f, "region `{region}` has no pieces"),
            Violation::MalformedPiece { region, piece, error } => {
                write!(f, "region `{region}` piece {piece}: {error}")
            }
            Violation::DisconnectedRegion { region, components } => {
                write!(f, "region `{region}` is disconnected ({components} components)")
            }
            Violation::Overlap { a, b } => write!(f, "regions `{a}` and `{b}` intersect"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
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

pub fn is_identifier(s: &str) -> bool {
    let mut bytes = s.bytes();
    match bytes.next() {
        Some(b) if b.is_ascii_alphabetic() || b == b'_' => {}
        _ => return false,
    }
    bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn piece_components(pieces: &[Piece]) -> usize {
    let n = pieces.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if find(&mut parent, i) != find(&mut parent, j) && pieces_intersect(&pieces[i], &pieces[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

fn regions_intersect(a: &Region, b: &Region) -> bool {
    if !a.bbox().overlaps(&b.bbox()) {
        return false;
    }
    a.pieces.iter().any(|p| b.pieces.iter().any(|q| pieces_intersect(p, q)))
}

/// Lists every violated scene invariant; empty report iff the scene is valid.
pub fn validate_scene(s: &Scene) -> ValidationReport {
    let mut violations = Vec::new();
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &s.regions {
        if !is_identifier(&r.name) {
            violations.push(Violation::InvalidName { region: r.name.clone() });
        }
        *seen.entry(&r.name).or_default() += 1;
    }
    for (name, count) in &seen {
        if *count > 1 {
            violations.push(Violation::DuplicateName { region: name.to_string() });
        }
    }
    let mut well_formed = vec![true; s.regions.len()];
    for (ri, r) in s.regions.iter().enumerate() {
        if r.pieces.is_empty() {
            violations.push(Violation::EmptyRegion { region: r.name.clone() });
            well_formed[ri] = false;
            continue;
        }
        for (i, pc) in r.pieces.iter().enumerate() {
            if let Err(error) = pc.check() {
                violations.push(Violation::MalformedPiece { region: r.name.clone(), piece: i, error });
                well_formed[ri] = false;
            }
        }
        if well_formed[ri] {
            let components = piece_components(&r.pieces);
            if components > 1 {
                violations.push(Violation::DisconnectedRegion { region: r.name.clone(), components });
            }
        }
    }
    for i in 0..s.regions.len() {
        for j in i + 1..s.regions.len() {
            if well_formed[i] && well_formed[j] && regions_intersect(&s.regions[i], &s.regions[j]) {
                violations.push(Violation::Overlap {
                    a: s.regions[i].name.clone(),
                    b: s.regions[j].name.clone(),
                });
            }
        }
    }
    ValidationReport { violations }
}
