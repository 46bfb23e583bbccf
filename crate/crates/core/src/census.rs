//! Exhaustive enumeration of GOS structures on a fixed skeleton.
//!
//! A skeleton is the bare graph: valencies and a pairing of stubs, with no
//! cyclic order and no signatures. Every vertex of valency `w` has `(w - 1)!`
//! cyclic orders (its first stub held in place) and every edge two signatures.
//! Each structure is classified and tallied by surface class.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::{classify_fast, euler_check, parity_check, SurfaceClass};
use crate::gos::{Gos, GosErrors, Sign, Stub, VertexId};
use crate::util::DisjointSets;

pub const DEFAULT_BUDGET: u64 = 1 << 28;

/// Largest vertex count for which [`flip_orbit_key`] scans every flip subset.
pub const FLIP_KEY_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("enumeration needs {count} structures, over the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u64 },
    #[error("edge {edge} does not exist (skeleton has {edges} edges)")]
    NoSuchEdge { edge: usize, edges: usize },
    #[error("invalid skeleton: {0}")]
    InvalidSkeleton(#[from] GosErrors),
    #[error("{count} structures violate the parity or Euler relation")]
    InvariantViolation { count: u64 },
}

/// Underlying graph: stubs `0..2E` dealt to vertices in contiguous blocks, paired into edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Skeleton {
    valencies: Vec<usize>,
    pairs: Vec<(Stub, Stub)>,
}

impl Skeleton {
    /// Checks connectivity, the valency floor and the pairing.
    pub fn new(valencies: Vec<usize>, pairs: Vec<(Stub, Stub)>) -> Result<Skeleton, CensusError> {
        let edges: Vec<_> = pairs.iter().map(|&(a, b)| (a, b, Sign::Plus)).collect();
        Gos::from_canonical(&valencies, &edges)?;
        Ok(Skeleton { valencies, pairs })
    }

    /// Skeleton of `g`; edge `i` of the skeleton is edge `i` of `g`.
    pub fn of(g: &Gos) -> Skeleton {
        Skeleton {
            valencies: g.valencies(),
            pairs: g.edges().iter().map(|e| (e.a, e.b)).collect(),
        }
    }

    /// From a multigraph on `n` vertices given as vertex pairs (loops allowed).
    pub fn from_multigraph(n: usize, edges: &[(usize, usize)]) -> Result<Skeleton, CensusError> {
        let mut valencies = vec![0; n];
        for &(a, b) in edges {
            valencies[a] += 1;
            valencies[b] += 1;
        }
        let mut next: Vec<u32> = valencies
            .iter()
            .scan(0u32, |acc, &w| {
                let start = *acc;
                *acc += w as u32;
                Some(start)
            })
            .collect();
        let mut take = |v: usize| {
            let s = Stub(next[v]);
            next[v] += 1;
            s
        };
        let pairs = edges.iter().map(|&(a, b)| (take(a), take(b))).collect();
        Skeleton::new(valencies, pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.valencies.len()
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn valencies(&self) -> &[usize] {
        &self.valencies
    }

    pub fn rank(&self) -> i64 {
        1 - self.vertex_count() as i64 + self.edge_count() as i64
    }

    pub fn is_trivalent(&self) -> bool {
        self.valencies.iter().all(|&w| w == 3)
    }

    /// Number of distinct orientation assignments, `Π (w - 1)!`.
    pub fn orientation_count(&self) -> u128 {
        self.valencies.iter().map(|&w| factorial(w - 1)).product()
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusOptions {
    /// Unfixed edges are `+` instead of ranging over both signs.
    pub all_plus: bool,
    /// Edge index (0-based) to a fixed signature.
    pub fixed: BTreeMap<usize, Sign>,
    pub orientable_only: bool,
    /// Count vertex-flip orbits instead of raw structures.
    pub quotient_flips: bool,
    pub budget: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            all_plus: false,
            fixed: BTreeMap::new(),
            orientable_only: false,
            quotient_flips: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Decodes indices into structures on a skeleton.
struct Space<'a> {
    sk: &'a Skeleton,
    /// Signature of each edge, `None` if free.
    signs: Vec<Option<Sign>>,
    free: Vec<usize>,
    radices: Vec<u64>,
    total: u64,
}

impl<'a> Space<'a> {
    fn new(sk: &'a Skeleton, opts: &CensusOptions) -> Result<Space<'a>, CensusError> {
        let e = sk.edge_count();
        if let Some(&edge) = opts.fixed.keys().find(|&&i| i >= e) {
            return Err(CensusError::NoSuchEdge { edge, edges: e });
        }
        let signs: Vec<Option<Sign>> = (0..e)
            .map(|i| opts.fixed.get(&i).copied().or(opts.all_plus.then_some(Sign::Plus)))
            .collect();
        let free: Vec<usize> = (0..e).filter(|&i| signs[i].is_none()).collect();
        let count = sk.orientation_count() << free.len();
        if count > opts.budget as u128 {
            return Err(CensusError::BudgetExceeded { count, budget: opts.budget });
        }
        let radices = sk.valencies.iter().map(|&w| factorial(w - 1) as u64).collect();
        Ok(Space { sk, signs, free, radices, total: count as u64 })
    }

    /// New canonical label of every old stub under orientation `index`.
    fn relabel(&self, mut index: u64) -> Vec<u32> {
        let mut out = vec![0u32; 2 * self.sk.edge_count()];
        let mut base = 0usize;
        for (v, &w) in self.sk.valencies.iter().enumerate() {
            let digit = index % self.radices[v];
            index /= self.radices[v];
            let order = nth_order(w, digit);
            for (k, &slot) in order.iter().enumerate() {
                out[base + slot] = (base + k) as u32;
            }
            base += w;
        }
        out
    }

    fn gos(&self, relabel: &[u32], sign_index: u64) -> Gos {
        let mut bit = 0;
        let edges: Vec<(Stub, Stub, Sign)> = self
            .sk
            .pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                let sign = self.signs[i].unwrap_or_else(|| {
                    let s = Sign::from_bool_minus(sign_index >> bit & 1 == 1);
                    bit += 1;
                    s
                });
                (Stub(relabel[a.index()]), Stub(relabel[b.index()]), sign)
            })
            .collect();
        Gos::from_canonical_unchecked(&self.sk.valencies, &edges)
    }

    fn sign_count(&self) -> u64 {
        1 << self.free.len()
    }
}

/// The `digit`-th cyclic order of a `w`-slot vertex: slot 0 first, then the
/// remaining slots permuted in lexicographic order.
fn nth_order(w: usize, mut digit: u64) -> Vec<usize> {
    let mut rest: Vec<usize> = (1..w).collect();
    let mut order = vec![0];
    for k in (0..rest.len()).rev() {
        let f = factorial(k) as u64;
        let i = (digit / f) as usize;
        digit %= f;
        order.push(rest.remove(i));
    }
    order
}

/// Raw number of structures `opts` would enumerate, before filtering.
pub fn raw_count(sk: &Skeleton, opts: &CensusOptions) -> u128 {
    let free = (0..sk.edge_count())
        .filter(|i| !opts.fixed.contains_key(i) && !opts.all_plus)
        .count();
    sk.orientation_count() << free
}

/// Every structure allowed by `opts`, orientations outermost. `quotient_flips` is ignored.
pub fn enumerate<'a>(
    sk: &'a Skeleton,
    opts: &CensusOptions,
) -> Result<impl Iterator<Item = Gos> + 'a, CensusError> {
    let space = Space::new(sk, opts)?;
    let orientable_only = opts.orientable_only;
    let signs = space.sign_count();
    Ok((0..space.total)
        .map(move |i| space.gos(&space.relabel(i / signs), i % signs))
        .filter(move |g| !orientable_only || crate::orientability::is_orientable(g)))
}

/// Canonical key of the vertex-flip orbit of `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlipKey {
    pub key: Vec<u32>,
    /// False when `g` had too many vertices and the key is just its own encoding.
    pub exact: bool,
}

/// Least encoding over all `2^V` flip subsets (Gray-code walk), for `V <= 20`.
pub fn flip_orbit_key(g: &Gos) -> FlipKey {
    let n = g.vertex_count();
    if n > FLIP_KEY_MAX_VERTICES {
        return FlipKey { key: g.encoding(), exact: false };
    }
    let mut current = g.clone();
    let mut best = g.encoding();
    for i in 1u64..(1 << n) {
        current = current.flip_vertex(VertexId(i.trailing_zeros()));
        let enc = current.encoding();
        if enc < best {
            best = enc;
        }
    }
    FlipKey { key: best, exact: true }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub counts: BTreeMap<SurfaceClass, u64>,
    /// Structures examined before quotienting and filtering.
    pub raw: u64,
    pub options: CensusOptions,
    /// False if flip quotienting fell back to identity keys.
    pub exact_quotient: bool,
}

impl CensusTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn classes(&self) -> BTreeSet<SurfaceClass> {
        self.counts.keys().copied().collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,genus,boundary,count\n");
        for (c, n) in &self.counts {
            let class = if c.orientable { "orientable" } else { "non-orientable" };
            out.push_str(&format!("{class},{},{},{n}\n", c.genus, c.boundary));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<_> = self
            .counts
            .iter()
            .map(|(c, n)| {
                serde_json::json!({
                    "orientable": c.orientable,
                    "genus": c.genus,
                    "boundary": c.boundary,
                    "count": n,
                })
            })
            .collect();
        serde_json::json!({
            "classes": rows,
            "raw": self.raw,
            "total": self.total(),
            "exact_quotient": self.exact_quotient,
            "options": self.options,
        })
    }
}

impl fmt::Display for CensusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, n) in &self.counts {
            writeln!(f, "{n:>10}  {c}")?;
        }
        write!(f, "{:>10}  total ({} raw)", self.total(), self.raw)
    }
}

#[derive(Default)]
struct Shard {
    counts: HashMap<SurfaceClass, u64>,
    orbits: HashMap<Vec<u32>, SurfaceClass>,
    exact: bool,
    violations: u64,
    cache: Option<(u64, Vec<u32>)>,
}

impl Shard {
    fn merge(mut self, other: Shard) -> Shard {
        for (c, n) in other.counts {
            *self.counts.entry(c).or_default() += n;
        }
        self.orbits.extend(other.orbits);
        self.exact &= other.exact;
        self.violations += other.violations;
        self
    }
}

/// Classifies every enumerated structure and tallies by class. Shards run in parallel.
pub fn census(sk: &Skeleton, opts: &CensusOptions) -> Result<CensusTable, CensusError> {
    let space = Space::new(sk, opts)?;
    let signs = space.sign_count();
    let shard = (0..space.total)
        .into_par_iter()
        .fold(
            || Shard { exact: true, ..Shard::default() },
            |mut acc, i| {
                let (o, s) = (i / signs, i % signs);
                let relabel = match acc.cache.take() {
                    Some((cached, r)) if cached == o => r,
                    _ => space.relabel(o),
                };
                let g = space.gos(&relabel, s);
                acc.cache = Some((o, relabel));
                let class = classify_fast(&g);
                if !parity_check(&class, &g) || !euler_check(&class, &g) {
                    acc.violations += 1;
                }
                if opts.orientable_only && !class.orientable {
                    return acc;
                }
                if opts.quotient_flips {
                    let key = flip_orbit_key(&g);
                    acc.exact &= key.exact;
                    acc.orbits.insert(key.key, class);
                } else {
                    *acc.counts.entry(class).or_default() += 1;
                }
                acc
            },
        )
        .reduce(|| Shard { exact: true, ..Shard::default() }, Shard::merge);
    if shard.violations > 0 {
        return Err(CensusError::InvariantViolation { count: shard.violations });
    }
    let mut counts: BTreeMap<SurfaceClass, u64> = shard.counts.into_iter().collect();
    for class in shard.orbits.into_values() {
        *counts.entry(class).or_default() += 1;
    }
    Ok(CensusTable {
        counts,
        raw: space.total,
        options: opts.clone(),
        exact_quotient: shard.exact,
    })
}

/// Limits for [`achievability_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AchievabilityBound {
    pub max_vertices: usize,
    /// Skeletons with more edges are skipped unless trivalent.
    pub max_edges: usize,
    pub budget: u64,
}

impl Default for AchievabilityBound {
    fn default() -> Self {
        AchievabilityBound { max_vertices: 4, max_edges: 5, budget: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonSummary {
    pub edges: Vec<(usize, usize)>,
    pub vertices: usize,
    pub rank: i64,
    pub trivalent: bool,
    pub structures: u64,
    pub orientable_genera: BTreeSet<u32>,
    pub non_orientable_genera: BTreeSet<u32>,
    pub classes: BTreeSet<SurfaceClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AchievabilityReport {
    pub bound: AchievabilityBound,
    pub skeletons: Vec<SkeletonSummary>,
    pub structures: u64,
    /// Some skeleton produced the disc (orientable, genus 0, one boundary circle).
    pub disc_found: bool,
    /// Some trivalent skeleton produced an annulus or a Möbius band.
    pub trivalent_annulus_or_mobius: bool,
    /// Every skeleton's largest non-orientable genus is at most its rank.
    pub non_orientable_genus_within_rank: bool,
    pub classes: BTreeSet<SurfaceClass>,
    pub trivalent_classes: BTreeSet<SurfaceClass>,
}

impl fmt::Display for AchievabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "skeletons: {} (V <= {}, E <= {} or trivalent), structures: {}",
            self.skeletons.len(),
            self.bound.max_vertices,
            self.bound.max_edges,
            self.structures
        )?;
        writeln!(f, "disc found: {}", self.disc_found)?;
        writeln!(f, "annulus or Möbius on a trivalent skeleton: {}", self.trivalent_annulus_or_mobius)?;
        writeln!(f, "non-orientable genus within rank: {}", self.non_orientable_genus_within_rank)?;
        writeln!(f, "classes: {}", self.classes.iter().map(|c| format!("{}b{}", c.tag(), c.boundary)).join(" "))?;
        write!(
            f,
            "trivalent classes: {}",
            self.trivalent_classes.iter().map(|c| format!("{}b{}", c.tag(), c.boundary)).join(" ")
        )
    }
}

/// Connected multigraphs (loops allowed, valency >= 2) on exactly `n` vertices
/// with exactly `e` edges, one per isomorphism class.
pub fn skeletons(n: usize, e: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut seen = BTreeSet::new();
    for multiset in pairs.iter().copied().combinations_with_replacement(e) {
        let mut deg = vec![0; n];
        let mut dsu = DisjointSets::new(n);
        for &(a, b) in &multiset {
            deg[a] += 1;
            deg[b] += 1;
            dsu.union(a, b);
        }
        if deg.iter().any(|&d| d < 2) || dsu.count() != 1 {
            continue;
        }
        let canonical = (0..n)
            .permutations(n)
            .map(|p| {
                let mut m: Vec<(usize, usize)> = multiset
                    .iter()
                    .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                    .collect();
                m.sort();
                m
            })
            .min()
            .unwrap();
        seen.insert(canonical);
    }
    seen.into_iter().collect()
}

/// Runs a full census on every skeleton within `bound` and reports which classes occur.
pub fn achievability_report(bound: AchievabilityBound) -> Result<AchievabilityReport, CensusError> {
    let mut graphs = Vec::new();
    for n in 1..=bound.max_vertices {
        let max_e = bound.max_edges.max(if n % 2 == 0 { 3 * n / 2 } else { 0 });
        for e in n.max(1)..=max_e {
            for edges in skeletons(n, e) {
                let sk = Skeleton::from_multigraph(n, &edges)?;
                if e <= bound.max_edges || sk.is_trivalent() {
                    graphs.push((n, edges, sk));
                }
            }
        }
    }
    let total: u128 = graphs.iter().map(|(_, _, sk)| raw_count(sk, &CensusOptions::default())).sum();
    if total > bound.budget as u128 {
        return Err(CensusError::BudgetExceeded { count: total, budget: bound.budget });
    }
    let opts = CensusOptions { budget: u64::MAX, ..CensusOptions::default() };
    let mut report = AchievabilityReport {
        bound,
        skeletons: Vec::new(),
        structures: 0,
        disc_found: false,
        trivalent_annulus_or_mobius: false,
        non_orientable_genus_within_rank: true,
        classes: BTreeSet::new(),
        trivalent_classes: BTreeSet::new(),
    };
    for (n, edges, sk) in graphs {
        let table = census(&sk, &opts)?;
        let classes = table.classes();
        let trivalent = sk.is_trivalent();
        report.structures += table.raw;
        report.disc_found |= classes.contains(&SurfaceClass::DISC);
        if trivalent {
            report.trivalent_annulus_or_mobius |=
                classes.contains(&SurfaceClass::ANNULUS) || classes.contains(&SurfaceClass::MOBIUS);
            report.trivalent_classes.extend(&classes);
        }
        let non_orientable_genera: BTreeSet<u32> =
            classes.iter().filter(|c| !c.orientable).map(|c| c.genus).collect();
        if non_orientable_genera.iter().any(|&h| h as i64 > sk.rank()) {
            report.non_orientable_genus_within_rank = false;
        }
        report.classes.extend(&classes);
        report.skeletons.push(SkeletonSummary {
            edges,
            vertices: n,
            rank: sk.rank(),
            trivalent,
            structures: table.raw,
            orientable_genera: classes.iter().filter(|c| c.orientable).map(|c| c.genus).collect(),
            non_orientable_genera,
            classes,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{petersen, single_loop, theta};

    #[test]
    fn orders_are_distinct_and_fix_slot_zero() {
        let orders: BTreeSet<Vec<usize>> = (0..24).map(|d| nth_order(5, d)).collect();
        assert_eq!(orders.len(), 24);
        assert!(orders.iter().all(|o| o[0] == 0));
    }

    #[test]
    fn theta_counts() {
        let sk = Skeleton::of(&theta(true, [Sign::Plus; 3]));
        let plus = CensusOptions { all_plus: true, ..CensusOptions::default() };
        assert_eq!(raw_count(&sk, &plus), 4);
        assert_eq!(enumerate(&sk, &plus).unwrap().count(), 4);
        let table = census(&sk, &CensusOptions::default()).unwrap();
        assert_eq!(table.raw, 32);
        assert_eq!(table.total(), 32);
        assert!(table.classes().contains(&SurfaceClass::orientable(0, 3)));
        assert!(table.classes().contains(&SurfaceClass::orientable(1, 1)));
    }

    #[test]
    fn loop_skeleton_gives_annulus_and_mobius() {
        let table = census(&Skeleton::of(&single_loop(Sign::Plus)), &CensusOptions::default()).unwrap();
        assert_eq!(
            table.classes(),
            BTreeSet::from([SurfaceClass::ANNULUS, SurfaceClass::MOBIUS])
        );
        assert_eq!(table.to_csv(), "class,genus,boundary,count\nnon-orientable,1,1,1\norientable,0,2,1\n");
    }

    #[test]
    fn budget_is_enforced() {
        let sk = Skeleton::of(&petersen(0, 0));
        let opts = CensusOptions { budget: 1 << 20, ..CensusOptions::default() };
        assert_eq!(
            census(&sk, &opts).unwrap_err(),
            CensusError::BudgetExceeded { count: 1 << 25, budget: 1 << 20 }
        );
        let bad = CensusOptions { fixed: BTreeMap::from([(15, Sign::Minus)]), ..CensusOptions::default() };
        assert_eq!(census(&sk, &bad).unwrap_err(), CensusError::NoSuchEdge { edge: 15, edges: 15 });
    }

    #[test]
    fn flip_keys() {
        let g = theta(false, [Sign::Plus, Sign::Minus, Sign::Plus]);
        let key = flip_orbit_key(&g);
        assert!(key.exact);
        assert_eq!(flip_orbit_key(&g.flip_vertex(VertexId(1))), key);
        assert_ne!(flip_orbit_key(&single_loop(Sign::Plus)), flip_orbit_key(&single_loop(Sign::Minus)));
    }

    #[test]
    fn quotient_never_exceeds_raw() {
        let sk = Skeleton::of(&theta(true, [Sign::Plus; 3]));
        let raw = census(&sk, &CensusOptions::default()).unwrap();
        let q = census(&sk, &CensusOptions { quotient_flips: true, ..CensusOptions::default() }).unwrap();
        assert!(q.exact_quotient);
        assert!(q.total() < raw.total());
        assert_eq!(q.classes(), raw.classes());
        let o = census(&sk, &CensusOptions { orientable_only: true, ..CensusOptions::default() }).unwrap();
        assert!(o.classes().iter().all(|c| c.orientable));
    }

    #[test]
    fn skeleton_enumeration() {
        // one vertex, one loop; two vertices with two edges: the digon only
        assert_eq!(skeletons(1, 1), vec![vec![(0, 0)]]);
        assert_eq!(skeletons(2, 2), vec![vec![(0, 1), (0, 1)]]);
        // trivalent on two vertices: theta and dumbbell
        let tri: Vec<_> = skeletons(2, 3)
            .into_iter()
            .filter(|s| Skeleton::from_multigraph(2, s).unwrap().is_trivalent())
            .collect();
        assert_eq!(tri.len(), 2);
    }

    #[test]
    fn small_achievability() {
        let report = achievability_report(AchievabilityBound { max_vertices: 2, max_edges: 3, budget: 1 << 20 }).unwrap();
        assert!(!report.disc_found);
        assert!(!report.trivalent_annulus_or_mobius);
        assert!(report.non_orientable_genus_within_rank);
        assert!(report.classes.contains(&SurfaceClass::ANNULUS));
    }
}
