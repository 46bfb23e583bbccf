//! Graphs with orientation and signature.
//!
//! A [`Gos`] is always held in canonical stub labeling: the stubs of vertex
//! `v` form the contiguous block following those of `v - 1`, and the cyclic
//! order at each vertex is increasing label order. Stubs and vertices are
//! 0-based internally and displayed 1-based.
//!
//! User-facing input arrives as [`GosData`], which may use arbitrary labels;
//! [`GosData::canonicalize`] maps it onto the canonical form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Permutation;

/// Edge signature: `Plus` is a straight join, `Minus` a join with a half twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_bool_minus(minus: bool) -> Sign {
        if minus {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A stub (half-edge) label, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Stub(pub u32);

impl Stub {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The 1-based label used in files and printed output.
    pub fn label(self) -> u32 {
        self.0 + 1
    }
}

impl fmt::Display for Stub {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A vertex index, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 + 1)
    }
}

/// An edge of a canonical [`Gos`]; `a < b` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: Stub,
    pub b: Stub,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GosError {
    #[error("graph has no vertices")]
    NoVertices,
    #[error("underlying graph is disconnected ({components} components)")]
    DisconnectedGraph { components: usize },
    #[error("vertex {vertex} has valency {valency}; at least 2 is required")]
    BadValency { vertex: usize, valency: usize },
    #[error("stub label {label} is missing from the contiguous range 1..={max}")]
    LabelGap { label: u32, max: u32 },
    #[error("stubs of vertex {vertex} are not the next contiguous block in increasing order")]
    NonCanonicalBlock { vertex: usize },
    #[error("tau fixed point: edge joins stub {stub} to itself")]
    TauFixedPoint { stub: u32 },
    #[error("pairing is not an involution at stub {stub}")]
    TauNotInvolution { stub: u32 },
    #[error("stub {stub} is used more than once")]
    StubReused { stub: u32 },
    #[error("stub {stub} is not joined by any edge")]
    UnpairedStub { stub: u32 },
    #[error("edge refers to stub {stub}, which belongs to no vertex")]
    UnknownStub { stub: u32 },
    #[error("no signature given for edge ({a} {b})")]
    MissingSignature { a: u32, b: u32 },
}

/// Errors collected by validation; never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GosErrors(pub Vec<GosError>);

impl fmt::Display for GosErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for GosErrors {}

impl From<GosError> for GosErrors {
    fn from(e: GosError) -> Self {
        GosErrors(vec![e])
    }
}

impl GosErrors {
    pub fn contains(&self, pred: impl Fn(&GosError) -> bool) -> bool {
        self.0.iter().any(pred)
    }
}

/// Uncanonicalized GOS description with user labels (1-based, arbitrary).
///
/// `vertices[i]` lists the stubs of vertex `i + 1` in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GosData {
    pub vertices: Vec<Vec<u32>>,
    pub edges: Vec<(u32, u32, Sign)>,
}

/// Map from user stub labels to canonical stubs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabelMap {
    pub to_canonical: BTreeMap<u32, Stub>,
}

impl LabelMap {
    pub fn is_identity(&self) -> bool {
        self.to_canonical.iter().all(|(&user, s)| user == s.label())
    }
}

/// The permutation coding `(σ, τ, ε)` of a GOS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTriple {
    pub sigma: Permutation,
    pub tau: Permutation,
    /// Signature per transposition of `tau`, keyed by `(min, max)` 0-based stubs.
    pub eps: BTreeMap<(usize, usize), Sign>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gos {
    offsets: Vec<u32>,
    edges: Vec<Edge>,
    partner: Vec<u32>,
    edge_of: Vec<u32>,
    vertex_of: Vec<u32>,
}

impl Gos {
    /// Assembles a GOS from canonical parts. Edges may be given in any order and
    /// orientation; they are normalized to `a < b` and sorted by `a`.
    ///
    /// Performs full validation.
    pub fn from_canonical(valencies: &[usize], edges: &[(Stub, Stub, Sign)]) -> Result<Gos, GosErrors> {
        let mut data = GosData::default();
        let mut next = 1u32;
        for &w in valencies {
            data.vertices.push((next..next + w as u32).collect());
            next += w as u32;
        }
        data.edges = edges.iter().map(|&(a, b, s)| (a.label(), b.label(), s)).collect();
        Gos::from_data(&data)
    }

    /// Like [`Gos::from_canonical`] without validation; the caller guarantees a
    /// perfect stub matching, valencies of at least 2 and connectivity.
    pub(crate) fn from_canonical_unchecked(valencies: &[usize], edges: &[(Stub, Stub, Sign)]) -> Gos {
        let mut data = GosData::default();
        let mut next = 1u32;
        for &w in valencies {
            data.vertices.push((next..next + w as u32).collect());
            next += w as u32;
        }
        data.edges = edges.iter().map(|&(a, b, s)| (a.label(), b.label(), s)).collect();
        Self::assemble(&data)
    }

    /// Strictly validates `data` (which must already use canonical labels) and builds the GOS.
    pub fn from_data(data: &GosData) -> Result<Gos, GosErrors> {
        validate(data)?;
        Ok(Self::assemble(data))
    }

    /// Builds without validation; `data` must be canonical and valid.
    fn assemble(data: &GosData) -> Gos {
        let mut offsets = vec![0u32];
        for v in &data.vertices {
            offsets.push(offsets.last().unwrap() + v.len() as u32);
        }
        let n = *offsets.last().unwrap() as usize;
        let mut vertex_of = vec![0u32; n];
        for v in 0..data.vertices.len() {
            for s in offsets[v]..offsets[v + 1] {
                vertex_of[s as usize] = v as u32;
            }
        }
        let mut edges: Vec<Edge> = data
            .edges
            .iter()
            .map(|&(x, y, sign)| {
                let (a, b) = if x < y { (x, y) } else { (y, x) };
                Edge {
                    a: Stub(a - 1),
                    b: Stub(b - 1),
                    sign,
                }
            })
            .collect();
        edges.sort();
        let mut partner = vec![0u32; n];
        let mut edge_of = vec![0u32; n];
        for (i, e) in edges.iter().enumerate() {
            partner[e.a.index()] = e.b.0;
            partner[e.b.index()] = e.a.0;
            edge_of[e.a.index()] = i as u32;
            edge_of[e.b.index()] = i as u32;
        }
        Gos {
            offsets,
            edges,
            partner,
            edge_of,
            vertex_of,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn stub_count(&self) -> usize {
        self.partner.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count() as u32).map(VertexId)
    }

    pub fn valency(&self, v: VertexId) -> usize {
        (self.offsets[v.index() + 1] - self.offsets[v.index()]) as usize
    }

    pub fn valencies(&self) -> Vec<usize> {
        self.vertices().map(|v| self.valency(v)).collect()
    }

    pub fn min_valency(&self) -> usize {
        self.vertices().map(|v| self.valency(v)).min().unwrap_or(0)
    }

    /// Stubs of `v` in cyclic order.
    pub fn stubs(&self, v: VertexId) -> impl Iterator<Item = Stub> {
        (self.offsets[v.index()]..self.offsets[v.index() + 1]).map(Stub)
    }

    pub fn stub_range(&self, v: VertexId) -> Range<usize> {
        self.offsets[v.index()] as usize..self.offsets[v.index() + 1] as usize
    }

    #[inline]
    pub fn vertex_of(&self, s: Stub) -> VertexId {
        VertexId(self.vertex_of[s.index()])
    }

    /// Position of `s` within its vertex's cyclic order.
    #[inline]
    pub fn slot_of(&self, s: Stub) -> usize {
        (s.0 - self.offsets[self.vertex_of[s.index()] as usize]) as usize
    }

    #[inline]
    pub fn stub_at(&self, v: VertexId, slot: usize) -> Stub {
        Stub(self.offsets[v.index()] + slot as u32)
    }

    #[inline]
    pub fn partner(&self, s: Stub) -> Stub {
        Stub(self.partner[s.index()])
    }

    #[inline]
    pub fn edge_index_of(&self, s: Stub) -> usize {
        self.edge_of[s.index()] as usize
    }

    #[inline]
    pub fn sign_at(&self, s: Stub) -> Sign {
        self.edges[self.edge_index_of(s)].sign
    }

    /// Cyclic successor of `s` at its vertex (the action of σ).
    pub fn next_stub(&self, s: Stub) -> Stub {
        let v = self.vertex_of(s);
        let w = self.valency(v);
        self.stub_at(v, (self.slot_of(s) + 1) % w)
    }

    /// Cyclic predecessor of `s` at its vertex.
    pub fn prev_stub(&self, s: Stub) -> Stub {
        let v = self.vertex_of(s);
        let w = self.valency(v);
        self.stub_at(v, (self.slot_of(s) + w - 1) % w)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn edge_endpoints(&self, i: usize) -> (VertexId, VertexId) {
        let e = self.edges[i];
        (self.vertex_of(e.a), self.vertex_of(e.b))
    }

    pub fn is_loop(&self, i: usize) -> bool {
        let (u, v) = self.edge_endpoints(i);
        u == v
    }

    pub fn minus_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_minus()).count()
    }

    pub fn is_all_plus(&self) -> bool {
        self.minus_edge_count() == 0
    }

    /// Cycle rank `1 - V + E`.
    pub fn rank(&self) -> i64 {
        1 - self.vertex_count() as i64 + self.edge_count() as i64
    }

    pub fn sigma(&self) -> Permutation {
        let map = (0..self.stub_count())
            .map(|s| self.next_stub(Stub(s as u32)).index())
            .collect();
        Permutation::from_images(map).expect("sigma is a permutation")
    }

    pub fn tau(&self) -> Permutation {
        Permutation::from_images(self.partner.iter().map(|&p| p as usize).collect())
            .expect("tau is a permutation")
    }

    pub fn to_triple(&self) -> PermutationTriple {
        PermutationTriple {
            sigma: self.sigma(),
            tau: self.tau(),
            eps: self
                .edges
                .iter()
                .map(|e| ((e.a.index(), e.b.index()), e.sign))
                .collect(),
        }
    }

    pub fn from_triple(t: &PermutationTriple) -> Result<Gos, GosErrors> {
        let n = t.sigma.len();
        let mut errors = Vec::new();
        let mut valencies = Vec::new();
        let mut expected = 0usize;
        for cycle in t.sigma.cycles() {
            let contiguous = cycle[0] == expected && cycle.iter().enumerate().all(|(i, &x)| x == expected + i);
            if !contiguous {
                errors.push(GosError::NonCanonicalBlock {
                    vertex: valencies.len() + 1,
                });
            }
            expected += cycle.len();
            valencies.push(cycle.len());
        }
        if t.tau.len() != n {
            errors.push(GosError::LabelGap {
                label: t.tau.len().min(n) as u32 + 1,
                max: n as u32,
            });
        }
        if !errors.is_empty() {
            return Err(GosErrors(errors));
        }
        let mut edges = Vec::new();
        for x in 0..n {
            let y = t.tau.apply(x);
            if y == x {
                errors.push(GosError::TauFixedPoint { stub: x as u32 + 1 });
            } else if t.tau.apply(y) != x {
                errors.push(GosError::TauNotInvolution { stub: x as u32 + 1 });
            } else if x < y {
                match t.eps.get(&(x, y)) {
                    Some(&sign) => edges.push((Stub(x as u32), Stub(y as u32), sign)),
                    None => errors.push(GosError::MissingSignature {
                        a: x as u32 + 1,
                        b: y as u32 + 1,
                    }),
                }
            }
        }
        if !errors.is_empty() {
            return Err(GosErrors(errors));
        }
        Gos::from_canonical(&valencies, &edges)
    }

    pub fn to_data(&self) -> GosData {
        GosData {
            vertices: self
                .vertices()
                .map(|v| self.stubs(v).map(Stub::label).collect())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| (e.a.label(), e.b.label(), e.sign))
                .collect(),
        }
    }

    /// Turns `v` upside down: reverses its cyclic order and negates the signature of
    /// every non-loop edge at `v`. Loops at `v` keep their signature.
    ///
    /// The reversed order is relabeled back into increasing form by mapping slot `j`
    /// to slot `-j mod w`, so the first stub of `v` keeps its label.
    pub fn flip_vertex(&self, v: VertexId) -> Gos {
        let range = self.stub_range(v);
        let w = range.len();
        let base = range.start;
        let relabel = |s: Stub| -> Stub {
            if range.contains(&s.index()) {
                let j = s.index() - base;
                Stub((base + (w - j) % w) as u32)
            } else {
                s
            }
        };
        let edges: Vec<(Stub, Stub, Sign)> = self
            .edges
            .iter()
            .map(|e| {
                let at_a = self.vertex_of(e.a) == v;
                let at_b = self.vertex_of(e.b) == v;
                let sign = if at_a != at_b { e.sign.negate() } else { e.sign };
                (relabel(e.a), relabel(e.b), sign)
            })
            .collect();
        self.with_edges(&edges)
    }

    /// Same vertex structure, new (valid) edge set. Skips connectivity re-checks.
    pub(crate) fn with_edges(&self, edges: &[(Stub, Stub, Sign)]) -> Gos {
        let mut e: Vec<Edge> = edges
            .iter()
            .map(|&(x, y, sign)| {
                let (a, b) = if x < y { (x, y) } else { (y, x) };
                Edge { a, b, sign }
            })
            .collect();
        e.sort();
        let mut g = self.clone();
        for (i, edge) in e.iter().enumerate() {
            g.partner[edge.a.index()] = edge.b.0;
            g.partner[edge.b.index()] = edge.a.0;
            g.edge_of[edge.a.index()] = i as u32;
            g.edge_of[edge.b.index()] = i as u32;
        }
        g.edges = e;
        g
    }

    /// Same underlying structure with signatures replaced edge by edge.
    pub fn with_signs(&self, signs: &[Sign]) -> Gos {
        assert_eq!(signs.len(), self.edge_count());
        let mut g = self.clone();
        for (e, &s) in g.edges.iter_mut().zip(signs) {
            e.sign = s;
        }
        g
    }

    /// Applies [`Gos::flip_vertex`] at each vertex of `set`.
    pub fn flip_vertices(&self, set: &[VertexId]) -> Gos {
        set.iter().fold(self.clone(), |g, &v| g.flip_vertex(v))
    }

    /// Compact encoding used for ordering and flip-orbit keys.
    pub fn encoding(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.offsets.len() + 3 * self.edges.len());
        out.extend_from_slice(&self.offsets);
        for e in &self.edges {
            out.push(e.a.0);
            out.push(e.b.0);
            out.push(e.sign.is_minus() as u32);
        }
        out
    }
}

impl fmt::Display for Gos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::to_gos_text(&self.to_data()))
    }
}

/// Checks label-level well-formedness shared by strict and relaxed ingestion.
fn check_labels(data: &GosData, errors: &mut Vec<GosError>) {
    let mut at_vertex: HashMap<u32, usize> = HashMap::new();
    for (v, stubs) in data.vertices.iter().enumerate() {
        for &s in stubs {
            if at_vertex.insert(s, v).is_some() {
                errors.push(GosError::StubReused { stub: s });
            }
        }
    }
    let mut in_edge: HashMap<u32, usize> = HashMap::new();
    for (i, &(x, y, _)) in data.edges.iter().enumerate() {
        if x == y {
            errors.push(GosError::TauFixedPoint { stub: x });
        }
        let ends: &[u32] = if x == y { &[x] } else { &[x, y] };
        for &s in ends {
            if in_edge.insert(s, i).is_some() {
                errors.push(GosError::StubReused { stub: s });
            }
            if !at_vertex.contains_key(&s) {
                errors.push(GosError::UnknownStub { stub: s });
            }
        }
    }
    let mut unpaired: Vec<u32> = at_vertex
        .keys()
        .filter(|s| !in_edge.contains_key(s))
        .copied()
        .collect();
    unpaired.sort();
    errors.extend(unpaired.into_iter().map(|stub| GosError::UnpairedStub { stub }));
}

/// Valency floor and connectivity of a label-clean description.
fn check_structure(data: &GosData, errors: &mut Vec<GosError>) {
    if data.vertices.is_empty() {
        errors.push(GosError::NoVertices);
        return;
    }
    for (v, stubs) in data.vertices.iter().enumerate() {
        if stubs.len() < 2 {
            errors.push(GosError::BadValency {
                vertex: v + 1,
                valency: stubs.len(),
            });
        }
    }
    let owner: HashMap<u32, usize> = data
        .vertices
        .iter()
        .enumerate()
        .flat_map(|(v, stubs)| stubs.iter().map(move |&s| (s, v)))
        .collect();
    let mut dsu = crate::util::DisjointSets::new(data.vertices.len());
    for &(x, y, _) in &data.edges {
        if let (Some(&u), Some(&v)) = (owner.get(&x), owner.get(&y)) {
            dsu.union(u, v);
        }
    }
    let components = dsu.count();
    if components > 1 {
        errors.push(GosError::DisconnectedGraph { components });
    }
}

/// Validates a description against the canonical-labeling conventions.
///
/// Succeeds iff labels are exactly `1..=2E`, each vertex holds the next
/// contiguous block in increasing order, the edges pair every stub with a
/// different stub exactly once, every valency is at least 2 and the underlying
/// graph is connected.
pub fn validate(data: &GosData) -> Result<(), GosErrors> {
    let mut errors = Vec::new();
    check_labels(data, &mut errors);
    if errors.is_empty() {
        let n: u32 = data.vertices.iter().map(|v| v.len() as u32).sum();
        let present: std::collections::HashSet<u32> =
            data.vertices.iter().flatten().copied().collect();
        if let Some(label) = (1..=n).find(|l| !present.contains(l)) {
            errors.push(GosError::LabelGap { label, max: n });
        }
        let mut next = 1u32;
        for (v, stubs) in data.vertices.iter().enumerate() {
            if stubs.iter().enumerate().any(|(i, &s)| s != next + i as u32) {
                errors.push(GosError::NonCanonicalBlock { vertex: v + 1 });
            }
            next += stubs.len() as u32;
        }
    }
    check_structure(data, &mut errors);
    if errors.is_empty() {
        Ok(())
    } else {
        Err(GosErrors(errors))
    }
}

impl GosData {
    /// Relabels stubs in order of appearance (vertex by vertex, in cyclic order)
    /// and builds the canonical GOS.
    pub fn canonicalize(&self) -> Result<(Gos, LabelMap), GosErrors> {
        let mut errors = Vec::new();
        check_labels(self, &mut errors);
        check_structure(self, &mut errors);
        if !errors.is_empty() {
            return Err(GosErrors(errors));
        }
        let mut map = LabelMap::default();
        let mut next = 0u32;
        for stubs in &self.vertices {
            for &s in stubs {
                map.to_canonical.insert(s, Stub(next));
                next += 1;
            }
        }
        let canonical = GosData {
            vertices: self
                .vertices
                .iter()
                .map(|stubs| stubs.iter().map(|s| map.to_canonical[s].label()).collect())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(x, y, sign)| (map.to_canonical[&x].label(), map.to_canonical[&y].label(), sign))
                .collect(),
        };
        Ok((Gos::assemble(&canonical), map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_gos, RandomGos};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn data(vertices: &[&[u32]], edges: &[(u32, u32, Sign)]) -> GosData {
        GosData {
            vertices: vertices.iter().map(|v| v.to_vec()).collect(),
            edges: edges.to_vec(),
        }
    }

    fn theta() -> Gos {
        let t = PermutationTriple {
            sigma: Permutation::parse_cycles(6, "(1 2 3)(4 5 6)").unwrap(),
            tau: Permutation::parse_cycles(6, "(1 4)(2 5)(3 6)").unwrap(),
            eps: [((0, 3), Sign::Plus), ((1, 4), Sign::Plus), ((2, 5), Sign::Plus)]
                .into_iter()
                .collect(),
        };
        Gos::from_triple(&t).unwrap()
    }

    #[test]
    fn smallest_gos_is_valid() {
        assert!(validate(&data(&[&[1, 2]], &[(1, 2, Sign::Plus)])).is_ok());
    }

    #[test]
    fn valency_one_is_rejected() {
        let err = validate(&data(&[&[1], &[2]], &[(1, 2, Sign::Plus)])).unwrap_err();
        assert!(err.contains(|e| matches!(e, GosError::BadValency { vertex: 1, valency: 1 })));
        assert!(err.contains(|e| matches!(e, GosError::BadValency { vertex: 2, valency: 1 })));
    }

    #[test]
    fn tau_fixed_point_is_rejected() {
        let d = data(&[&[1, 2, 3, 4]], &[(1, 2, Sign::Plus), (3, 3, Sign::Plus)]);
        let err = validate(&d).unwrap_err();
        assert!(err.contains(|e| matches!(e, GosError::TauFixedPoint { stub: 3 })));
    }

    #[test]
    fn other_label_errors_name_the_stub() {
        let reused = data(&[&[1, 2, 3, 4]], &[(1, 2, Sign::Plus), (2, 3, Sign::Plus)]);
        let err = validate(&reused).unwrap_err();
        assert!(err.contains(|e| matches!(e, GosError::StubReused { stub: 2 })));
        assert!(err.contains(|e| matches!(e, GosError::UnpairedStub { stub: 4 })));

        let gap = data(&[&[1, 2], &[4, 5]], &[(1, 4, Sign::Plus), (2, 5, Sign::Plus)]);
        let err = validate(&gap).unwrap_err();
        assert!(err.contains(|e| matches!(e, GosError::LabelGap { label: 3, .. })));

        let order = data(&[&[2, 1]], &[(1, 2, Sign::Plus)]);
        let err = validate(&order).unwrap_err();
        assert!(err.contains(|e| matches!(e, GosError::NonCanonicalBlock { vertex: 1 })));
    }

    #[test]
    fn disconnected_is_rejected() {
        let d = data(&[&[1, 2], &[3, 4]], &[(1, 2, Sign::Plus), (3, 4, Sign::Plus)]);
        let err = validate(&d).unwrap_err();
        assert_eq!(err.0, vec![GosError::DisconnectedGraph { components: 2 }]);
    }

    #[test]
    fn canonicalize_maps_arbitrary_labels() {
        let d = data(&[&[10, 30, 20], &[7, 8, 9]], &[(10, 7, Sign::Plus), (30, 9, Sign::Minus), (20, 8, Sign::Plus)]);
        assert!(validate(&d).is_err());
        let (g, map) = d.canonicalize().unwrap();
        assert_eq!(map.to_canonical[&30], Stub(1));
        assert_eq!(map.to_canonical[&7], Stub(3));
        assert!(!map.is_identity());
        assert_eq!(g.to_triple().tau.to_string(), "(1 4)(2 6)(3 5)");
        assert_eq!(g.sign_at(Stub(1)), Sign::Minus);
    }

    #[test]
    fn triple_of_single_loop() {
        let g = Gos::from_data(&data(&[&[1, 2]], &[(1, 2, Sign::Plus)])).unwrap();
        let t = g.to_triple();
        assert_eq!(t.sigma.to_string(), "(1 2)");
        assert_eq!(t.tau.to_string(), "(1 2)");
        assert_eq!(Gos::from_triple(&t).unwrap(), g);
        assert_eq!(g.rank(), 1);
    }

    #[test]
    fn triple_of_theta_and_digon() {
        let g = theta();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.to_triple().sigma.to_string(), "(1 2 3)(4 5 6)");
        assert_eq!(g.rank(), 2);

        // Two valency-2 vertices joined by two edges.
        let digon = Gos::from_data(&data(&[&[1, 2], &[3, 4]], &[(1, 3, Sign::Minus), (2, 4, Sign::Minus)])).unwrap();
        let t = digon.to_triple();
        assert_eq!(t.sigma.to_string(), "(1 2)(3 4)");
        assert_eq!(t.tau.to_string(), "(1 3)(2 4)");
        assert_eq!(t.eps.len(), 2);
    }

    #[test]
    fn from_triple_rejects_non_contiguous_sigma() {
        let t = PermutationTriple {
            sigma: Permutation::parse_cycles(4, "(1 3)(2 4)").unwrap(),
            tau: Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap(),
            eps: [((0, 1), Sign::Plus), ((2, 3), Sign::Plus)].into_iter().collect(),
        };
        let err = Gos::from_triple(&t).unwrap_err();
        assert!(err.contains(|e| matches!(e, GosError::NonCanonicalBlock { .. })));
    }

    #[test]
    fn from_triple_rejects_bad_tau() {
        let t = PermutationTriple {
            sigma: Permutation::parse_cycles(4, "(1 2 3 4)").unwrap(),
            tau: Permutation::parse_cycles(4, "(1 2)").unwrap(),
            eps: [((0, 1), Sign::Plus)].into_iter().collect(),
        };
        let err = Gos::from_triple(&t).unwrap_err();
        assert!(err.contains(|e| matches!(e, GosError::TauFixedPoint { stub: 3 })));
    }

    #[test]
    fn flip_negates_incident_non_loop_edges() {
        let g = theta();
        let f = g.flip_vertex(VertexId(0));
        assert!(f.edges().iter().all(|e| e.sign == Sign::Minus));
        // slot j -> -j: stubs 2 and 3 swap labels at vertex 1
        assert_eq!(f.to_triple().tau.to_string(), "(1 4)(2 6)(3 5)");
        assert_eq!(f.flip_vertex(VertexId(0)), g);
    }

    #[test]
    fn flip_keeps_loop_signs() {
        // a + loop on stubs 1,3 and a - edge to vertex 2
        let d = data(
            &[&[1, 2, 3, 4], &[5, 6]],
            &[(1, 3, Sign::Plus), (2, 5, Sign::Minus), (4, 6, Sign::Plus)],
        );
        let g = Gos::from_data(&d).unwrap();
        let f = g.flip_vertex(VertexId(0));
        let loop_edge = f.edges().iter().find(|e| f.vertex_of(e.b) == VertexId(0)).unwrap();
        assert_eq!(loop_edge.sign, Sign::Plus);
        // slots 0,2 map to 0,2 for w=4: the loop keeps its stubs
        assert_eq!((loop_edge.a, loop_edge.b), (Stub(0), Stub(2)));
        assert_eq!(f.minus_edge_count(), 1);
        assert_eq!(f.sign_at(Stub(4)), Sign::Plus);

        let single = Gos::from_data(&data(&[&[1, 2]], &[(1, 2, Sign::Plus)])).unwrap();
        assert_eq!(single.flip_vertex(VertexId(0)), single);
    }

    proptest! {
        #[test]
        fn triple_round_trip(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_gos(&mut rng, &RandomGos { min_valency: 2, ..RandomGos::default() });
            let t = g.to_triple();
            prop_assert!(t.tau.is_involution());
            prop_assert_eq!(t.tau.fixed_points().count(), 0);
            let st = t.sigma.then(&t.tau);
            prop_assert_eq!(st.len(), g.stub_count());
            prop_assert_eq!(Gos::from_triple(&t).unwrap(), g.clone());
            prop_assert_eq!(Gos::from_data(&g.to_data()).unwrap(), g);
        }

        #[test]
        fn flip_is_an_involution(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_gos(&mut rng, &RandomGos { min_valency: 2, ..RandomGos::default() });
            let v = VertexId(pick.index(g.vertex_count()) as u32);
            let f = g.flip_vertex(v);
            prop_assert!(validate(&f.to_data()).is_ok());
            prop_assert_eq!(f.valencies().iter().sum::<usize>(), 2 * f.edge_count());
            prop_assert_eq!(f.rank(), g.rank());
            prop_assert_eq!(f.flip_vertex(v), g);
        }
    }
}
