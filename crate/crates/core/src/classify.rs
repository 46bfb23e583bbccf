//! Homeomorphism type of the surface from rank, boundary count and orientability.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::boundary::boundary_count;
use crate::builder::{build, BuildError};
use crate::gos::Gos;
use crate::orientability::is_orientable;

/// A compact surface with boundary: `genus` is `g` when orientable, the
/// non-orientable genus `h >= 1` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SurfaceClass {
    pub orientable: bool,
    pub genus: u32,
    pub boundary: u32,
}

impl SurfaceClass {
    pub const DISC: SurfaceClass = SurfaceClass::orientable(0, 1);
    pub const ANNULUS: SurfaceClass = SurfaceClass::orientable(0, 2);
    pub const MOBIUS: SurfaceClass = SurfaceClass::non_orientable(1, 1);

    pub const fn orientable(genus: u32, boundary: u32) -> SurfaceClass {
        SurfaceClass { orientable: true, genus, boundary }
    }

    pub const fn non_orientable(genus: u32, boundary: u32) -> SurfaceClass {
        SurfaceClass { orientable: false, genus, boundary }
    }

    /// Euler characteristic of the surface with boundary.
    pub fn euler_characteristic(&self) -> i64 {
        let b = self.boundary as i64;
        let g = self.genus as i64;
        if self.orientable {
            2 - 2 * g - b
        } else {
            2 - g - b
        }
    }

    /// Short name, e.g. `O2` for orientable genus 2, `N1` for non-orientable genus 1.
    pub fn tag(&self) -> String {
        format!("{}{}", if self.orientable { 'O' } else { 'N' }, self.genus)
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orientable {
            write!(f, "orientable, genus {}, {} boundary", self.genus, self.boundary)
        } else {
            write!(f, "non-orientable, genus {}, {} boundary", self.genus, self.boundary)
        }
    }
}

/// Homology of the closed surface obtained by capping every boundary circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub h0: u32,
    pub h1_rank: u32,
    pub h1_torsion: bool,
    pub h2: u32,
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h1 = match (self.h1_rank, self.h1_torsion) {
            (0, false) => "0".to_string(),
            (0, true) => "Z2".to_string(),
            (1, t) => format!("Z{}", if t { " + Z2" } else { "" }),
            (r, t) => format!("Z^{r}{}", if t { " + Z2" } else { "" }),
        };
        write!(f, "H0 = Z^{}, H1 = {h1}, H2 = Z^{}", self.h0, self.h2)
    }
}

pub fn homology(s: &SurfaceClass) -> HomologyProfile {
    if s.orientable {
        HomologyProfile { h0: 1, h1_rank: 2 * s.genus, h1_torsion: false, h2: 1 }
    } else {
        HomologyProfile { h0: 1, h1_rank: s.genus - 1, h1_torsion: true, h2: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("boundary game and builder disagree: game b={game_b} orientable={tree_orientable}, builder b={builder_b} orientable={builder_orientable}")]
    Disagreement {
        game_b: usize,
        tree_orientable: bool,
        builder_b: usize,
        builder_orientable: bool,
    },
    #[error("orientable surface with odd r - b + 1 = {0}")]
    OddGenus(i64),
    #[error(transparent)]
    Builder(#[from] BuildError),
}

fn class_from(r: i64, b: usize, orientable: bool) -> Result<SurfaceClass, ClassifyError> {
    let excess = r - b as i64 + 1;
    if orientable {
        if excess < 0 || excess % 2 != 0 {
            return Err(ClassifyError::OddGenus(excess));
        }
        Ok(SurfaceClass::orientable((excess / 2) as u32, b as u32))
    } else {
        Ok(SurfaceClass::non_orientable(excess as u32, b as u32))
    }
}

/// Classification from the boundary game and the tree test alone.
pub fn classify_fast(g: &Gos) -> SurfaceClass {
    class_from(g.rank(), boundary_count(g), is_orientable(g)).expect("valid GOS has a consistent class")
}

/// Classifies `g`; when every valency is at least 3 the incremental builder
/// runs as well and must agree.
pub fn classify(g: &Gos) -> Result<SurfaceClass, ClassifyError> {
    let b = boundary_count(g);
    let orientable = is_orientable(g);
    if g.min_valency() >= 3 {
        let state = build(g, None)?;
        if state.boundary() != b || state.orientable() != orientable {
            return Err(ClassifyError::Disagreement {
                game_b: b,
                tree_orientable: orientable,
                builder_b: state.boundary(),
                builder_orientable: state.orientable(),
            });
        }
    }
    class_from(g.rank(), b, orientable)
}

/// `(E - V - b)` odd forces a non-orientable surface.
pub fn parity_check(s: &SurfaceClass, g: &Gos) -> bool {
    let d = g.edge_count() as i64 - g.vertex_count() as i64 - s.boundary as i64;
    d.rem_euclid(2) == 0 || !s.orientable
}

/// `V - E + b = 2 - 2g` (orientable) or `2 - h` (non-orientable).
pub fn euler_check(s: &SurfaceClass, g: &Gos) -> bool {
    let lhs = g.vertex_count() as i64 - g.edge_count() as i64 + s.boundary as i64;
    let rhs = if s.orientable { 2 - 2 * s.genus as i64 } else { 2 - s.genus as i64 };
    lhs == rhs
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub class: Option<SurfaceClass>,
    pub checks: Vec<Check>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for CrossValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Runs every applicable method and invariant check; failures become report entries.
pub fn cross_validate(g: &Gos) -> CrossValidation {
    let mut checks = Vec::new();
    let b = boundary_count(g);
    let orientable = is_orientable(g);
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    match class_from(g.rank(), b, orientable) {
        Ok(_) => push("genus", true, format!("r={} b={b}", g.rank())),
        Err(e) => push("genus", false, e.to_string()),
    }
    let class = class_from(g.rank(), b, orientable).ok();

    if g.min_valency() >= 3 {
        match build(g, None) {
            Ok(s) => {
                push("builder boundary", s.boundary() == b, format!("builder {} game {b}", s.boundary()));
                push(
                    "builder orientability",
                    s.orientable() == orientable,
                    format!("builder {} tree {orientable}", s.orientable()),
                );
            }
            Err(e) => push("builder", false, e.to_string()),
        }
    }
    if let Some(s) = &class {
        push("parity", parity_check(s, g), format!("E-V-b = {}", g.edge_count() as i64 - g.vertex_count() as i64 - b as i64));
        push("euler", euler_check(s, g), format!("V-E+b = {}", g.vertex_count() as i64 - g.edge_count() as i64 + b as i64));
    }
    if g.is_all_plus() {
        let c = g.sigma().then(&g.tau()).cycle_count();
        push("sigma-tau", c == b, format!("cycles {c} game {b}"));
    }
    CrossValidation { class, checks }
}

/// Machine-readable classification record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub orientable: bool,
    pub genus: u32,
    pub boundary: u32,
    pub r: i64,
    #[serde(rename = "V")]
    pub v: usize,
    #[serde(rename = "E")]
    pub e: usize,
    pub homology: HomologyProfile,
}

impl ClassReport {
    pub fn new(g: &Gos, s: &SurfaceClass) -> ClassReport {
        ClassReport {
            orientable: s.orientable,
            genus: s.genus,
            boundary: s.boundary,
            r: g.rank(),
            v: g.vertex_count(),
            e: g.edge_count(),
            homology: homology(s),
        }
    }
}
