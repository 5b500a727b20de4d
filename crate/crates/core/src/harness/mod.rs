//! Randomized scenes and invariant fuzzing.
//!
//! Every invariant checked here is a proven property of compact visibility
//! graphs, so a failure always points at a bug in this library.

mod checks;
mod gen;

pub use checks::{check_scene, Failure, Invariant, SceneCheck};
pub use gen::random_scene;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use crate::exec::{map_range, Exec};
use crate::geometry::scene_to_json;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzConfig {
    pub iterations: usize,
    pub regions_min: usize,
    pub regions_max: usize,
    /// Relative weights of point, segment and polygon pieces.
    pub piece_mix: [u32; 3],
    pub convex_only: bool,
    /// Coordinates are integers in `[-coord_range, coord_range]`.
    pub coord_range: i64,
    pub seed: u64,
    pub oracle_budget: usize,
    pub exec: Exec,
    /// Where counterexamples go; kept in memory only when unset.
    pub out_dir: Option<PathBuf>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            iterations: 1000,
            regions_min: 3,
            regions_max: 10,
            piece_mix: [1, 1, 1],
            convex_only: false,
            coord_range: 50,
            seed: 42,
            oracle_budget: 200,
            exec: Exec::default(),
            out_dir: None,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: &str| Err(HarnessError::InvalidConfig(m.to_string()));
        if self.iterations == 0 {
            return bad("iterations must be at least 1");
        }
        if self.regions_min == 0 || self.regions_min > self.regions_max {
            return bad("need 1 <= regions_min <= regions_max");
        }
        if self.piece_mix.iter().all(|&w| w == 0) {
            return bad("piece weights must not all be zero");
        }
        if self.coord_range < 1 || self.coord_range > 1 << 40 {
            return bad("coordinate range must be in 1..=2^40");
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("invalid fuzz configuration: {0}")]
    InvalidConfig(String),
    #[error("iteration {iteration}: no valid scene after {attempts} attempts")]
    GenerationExhausted { iteration: usize, attempts: usize },
    #[error("writing counterexample: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub iteration: usize,
    pub invariant: Invariant,
    pub detail: String,
    /// Seed that replays the oracle samples and affine map for this scene.
    pub check_seed: u64,
    pub scene_json: String,
    pub file: Option<PathBuf>,
}

impl Counterexample {
    pub fn file_name(&self) -> String {
        format!("iter{:05}_{}.json", self.iteration, self.invariant)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FuzzReport {
    pub iterations: usize,
    pub scenes: usize,
    pub skipped: usize,
    pub simplicial: usize,
    pub crossings: usize,
    pub tallies: BTreeMap<Invariant, Tally>,
    pub counterexamples: Vec<Counterexample>,
}

impl FuzzReport {
    pub fn failures(&self) -> usize {
        self.tallies.values().map(|t| t.fail).sum()
    }

    pub fn tally(&self, i: Invariant) -> Tally {
        self.tallies.get(&i).copied().unwrap_or_default()
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "iterations: {}", self.iterations)?;
        writeln!(f, "scenes: {} (skipped {})", self.scenes, self.skipped)?;
        writeln!(f, "simplicial deletions: {}", self.simplicial)?;
        writeln!(f, "crossing witness pairs: {}", self.crossings)?;
        for (i, t) in &self.tallies {
            writeln!(f, "{i}: {} pass, {} fail", t.pass, t.fail)?;
        }
        for c in &self.counterexamples {
            writeln!(f, "counterexample {} ({}): {}", c.file_name(), c.invariant, c.detail)?;
        }
        if self.failures() > 0 {
            writeln!(f, "note: these invariants are theorems; any violation is a bug in this implementation")?;
        }
        Ok(())
    }
}

/// Per-iteration check seed, recorded in the manifest for replay.
pub fn check_seed(seed: u64, iteration: usize) -> u64 {
    crate::rng::mix(seed ^ crate::rng::mix(!(iteration as u64)))
}

/// Generates `iterations` scenes and checks every invariant on each.
/// Generation failures are counted as skipped; counterexamples are written
/// to `out_dir` (scene JSON plus a `manifest.txt` line) when it is set.
pub fn fuzz(c: &FuzzConfig) -> Result<FuzzReport, HarnessError> {
    c.validate()?;
    let exec = c.exec;
    // iterations run in parallel, so each scene check stays sequential
    let inner = Exec::Sequential;
    let results = map_range(exec, c.iterations, |it| {
        let s = random_scene(c, it).ok()?;
        let seed = check_seed(c.seed, it);
        Some((scene_to_json(&s), seed, check_scene(&s, c.oracle_budget, seed, inner)))
    });
    let mut report = FuzzReport { iterations: c.iterations, ..FuzzReport::default() };
    for i in Invariant::ALL {
        report.tallies.insert(i, Tally::default());
    }
    for (it, r) in results.into_iter().enumerate() {
        let Some((json, seed, check)) = r else {
            report.skipped += 1;
            continue;
        };
        report.scenes += 1;
        report.simplicial += check.simplicial;
        report.crossings += check.crossings;
        for &i in &check.checked {
            let t = report.tallies.get_mut(&i).expect("all invariants tallied");
            if check.failures.iter().any(|f| f.invariant == i) {
                t.fail += 1;
            } else {
                t.pass += 1;
            }
        }
        let mut seen = Vec::new();
        for f in check.failures {
            if seen.contains(&f.invariant) {
                continue;
            }
            seen.push(f.invariant);
            report.counterexamples.push(Counterexample {
                iteration: it,
                invariant: f.invariant,
                detail: f.detail,
                check_seed: seed,
                scene_json: json.clone(),
                file: None,
            });
        }
    }
    if let Some(dir) = &c.out_dir {
        persist(dir, &mut report.counterexamples)?;
    }
    Ok(report)
}

fn persist(dir: &std::path::Path, cs: &mut [Counterexample]) -> Result<(), HarnessError> {
    std::fs::create_dir_all(dir)?;
    let mut manifest = String::new();
    for c in cs.iter_mut() {
        let path = dir.join(c.file_name());
        std::fs::write(&path, &c.scene_json)?;
        manifest.push_str(&format!("{} {} seed={} {}\n", c.file_name(), c.invariant, c.check_seed, c.detail));
        c.file = Some(path);
    }
    std::fs::write(dir.join("manifest.txt"), manifest)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(FuzzConfig::default().validate().is_ok());
        for bad in [
            FuzzConfig { iterations: 0, ..FuzzConfig::default() },
            FuzzConfig { regions_min: 5, regions_max: 4, ..FuzzConfig::default() },
            FuzzConfig { piece_mix: [0, 0, 0], ..FuzzConfig::default() },
            FuzzConfig { coord_range: 0, ..FuzzConfig::default() },
        ] {
            assert!(matches!(bad.validate(), Err(HarnessError::InvalidConfig(_))));
        }
    }

    #[test]
    fn small_run_is_clean_and_reproducible() {
        let c = FuzzConfig { iterations: 12, seed: 5, ..FuzzConfig::default() };
        let a = fuzz(&c).unwrap();
        assert_eq!(a.failures(), 0, "{a}");
        assert_eq!(a.scenes + a.skipped, 12);
        let b = fuzz(&FuzzConfig { exec: Exec::Sequential, ..c }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_collinear_run() {
        let c = FuzzConfig {
            iterations: 30,
            coord_range: 3,
            regions_max: 6,
            piece_mix: [3, 1, 0],
            seed: 9,
            ..FuzzConfig::default()
        };
        let r = fuzz(&c).unwrap();
        assert_eq!(r.failures(), 0, "{r}");
        assert!(r.scenes > 20);
    }

    #[test]
    fn counterexamples_are_persisted() {
        let dir = tempfile::tempdir().unwrap();
        let mut cs = vec![Counterexample {
            iteration: 3,
            invariant: Invariant::Connected,
            detail: "synthetic".into(),
            check_seed: 1,
            scene_json: "{\"regions\":[]}".into(),
            file: None,
        }];
        persist(dir.path(), &mut cs).unwrap();
        assert_eq!(std::fs::read_to_string(dir.path().join("iter00003_connected.json")).unwrap(), "{\"regions\":[]}");
        let manifest = std::fs::read_to_string(dir.path().join("manifest.txt")).unwrap();
        assert_eq!(manifest, "iter00003_connected.json connected seed=1 synthetic\n");
    }
}
