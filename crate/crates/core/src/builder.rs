//! Incremental construction of the surface, one propagator strip at a time.
//!
//! The state after attaching `i` edges is a permutation `ρ` of the stub labels
//! whose disjoint cycles are the boundary circles of the partial surface. The
//! element `j` stands for the boundary arc of the fat vertex running from stub
//! `j` to its cyclic successor, and `ρ` sends each arc to the next one met
//! along its boundary circle. Initially `ρ = σ`: `V` discs, `b = V`.
//!
//! Attaching edge `(p, q)` with signature `ε` looks at the cycles `C₁ ∋ p` and
//! `C₂ ∋ q` and at whether each cycle runs through the unattached stub in the
//! vertex's own direction (`p' → p`, forward) or against it (`p → p'`,
//! backward), where `p'` is the cyclic predecessor of `p` at its vertex.
//!
//! * `C₁ ≠ C₂` (case I): the circles merge, `b` drops by one.
//! * `C₁ = C₂` (case II): the circle splits (`b + 1`) or is rerouted (`b`
//!   unchanged, surface becomes non-orientable).
//!
//! The listed sub-cases take `p` forward. A backward `p` with forward `q` is
//! handled by exchanging the roles of `p` and `q`; when both are backward the
//! roles of each stub and its predecessor are exchanged (`p ↔ p'`, `q ↔ q'`).
//! In every variant the strip is compatible with the circles' directions, the
//! "(a)" sub-cases, exactly when `ε · d(p) · d(q) = +1`.
//!
//! Orientability is tracked per path component. Each vertex also carries a
//! flag saying whether its disc orientation is reversed relative to its
//! component's orientation; in orientable components that flag fixes the
//! direction of every cycle through the vertex and is checked against `ρ`.

use std::fmt;

use thiserror::Error;

use crate::gos::{Gos, Sign, Stub, VertexId};
use crate::orientability::spanning_tree;
use crate::perm::{write_cycle, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("vertex {vertex} has valency {valency}; the incremental builder needs at least 3")]
    ValencyTooLow { vertex: usize, valency: usize },
    #[error("edge {0} is already attached")]
    EdgeAlreadyAttached(usize),
    #[error("edge order must list every edge exactly once")]
    BadOrder,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

fn inconsistency(msg: impl Into<String>) -> BuildError {
    BuildError::InternalInconsistency(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    fn value(self) -> i32 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    I1a,
    I1b,
    I2a,
    I2b,
    II1a,
    II1b,
    II2a,
    II2b,
    /// II-2(a) with `p = q'`.
    II2aPrime,
    /// II-2(b) with `p = q'`.
    II2bPrime,
}

impl CaseLabel {
    pub fn is_case_one(self) -> bool {
        matches!(self, CaseLabel::I1a | CaseLabel::I1b | CaseLabel::I2a | CaseLabel::I2b)
    }

    /// True for the sub-cases where the strip agrees with the circles' directions.
    pub fn is_compatible(self) -> bool {
        matches!(
            self,
            CaseLabel::I1a | CaseLabel::I2a | CaseLabel::II1a | CaseLabel::II2a | CaseLabel::II2aPrime
        )
    }

    /// Change in the number of boundary circles.
    pub fn boundary_delta(self) -> i64 {
        match self {
            CaseLabel::I1a | CaseLabel::I1b | CaseLabel::I2a | CaseLabel::I2b => -1,
            CaseLabel::II1a | CaseLabel::II2a | CaseLabel::II2aPrime => 1,
            CaseLabel::II1b | CaseLabel::II2b | CaseLabel::II2bPrime => 0,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::I1a => "I-1(a)",
            CaseLabel::I1b => "I-1(b)",
            CaseLabel::I2a => "I-2(a)",
            CaseLabel::I2b => "I-2(b)",
            CaseLabel::II1a => "II-1(a)",
            CaseLabel::II1b => "II-1(b)",
            CaseLabel::II2a => "II-2(a)",
            CaseLabel::II2b => "II-2(b)",
            CaseLabel::II2aPrime => "II-2(a)′",
            CaseLabel::II2bPrime => "II-2(b)′",
        };
        f.write_str(s)
    }
}

/// How the stubs of the current edge were matched onto the sub-case pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Roles {
    Direct,
    /// `p` and `q` exchanged.
    Swapped,
    /// Each stub exchanged with its predecessor.
    Mirrored,
}

impl fmt::Display for Roles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Roles::Direct => Ok(()),
            Roles::Swapped => f.write_str(" [p↔q]"),
            Roles::Mirrored => f.write_str(" [p↔p′, q↔q′]"),
        }
    }
}

/// Record of one attachment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub edge: usize,
    pub p: Stub,
    pub q: Stub,
    pub sign: Sign,
    pub case: CaseLabel,
    pub roles: Roles,
    pub boundary: usize,
    pub orientable: bool,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "edge ({} {}) {}: {}{}  b={} {}",
            self.p,
            self.q,
            self.sign,
            self.case,
            self.roles,
            self.boundary,
            if self.orientable { "orientable" } else { "non-orientable" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildState {
    rho: Vec<usize>,
    inv: Vec<usize>,
    b: usize,
    component: Vec<usize>,
    component_orientable: Vec<bool>,
    reversed: Vec<bool>,
    attached: Vec<bool>,
    edges_done: usize,
}

impl BuildState {
    /// `V` disjoint discs: `ρ = σ`, `b = V`. Requires every valency to be at least 3.
    pub fn initial(g: &Gos) -> Result<BuildState, BuildError> {
        if let Some(v) = g.vertices().find(|&v| g.valency(v) < 3) {
            return Err(BuildError::ValencyTooLow {
                vertex: v.index() + 1,
                valency: g.valency(v),
            });
        }
        let sigma = g.sigma();
        let inv = sigma.inverse().images().to_vec();
        let n = g.vertex_count();
        Ok(BuildState {
            rho: sigma.images().to_vec(),
            inv,
            b: n,
            component: (0..n).collect(),
            component_orientable: vec![true; n],
            reversed: vec![false; n],
            attached: vec![false; g.edge_count()],
            edges_done: 0,
        })
    }

    pub fn rho(&self) -> Permutation {
        Permutation::from_images(self.rho.clone()).expect("rho stays a permutation")
    }

    pub fn boundary(&self) -> usize {
        self.b
    }

    pub fn edges_done(&self) -> usize {
        self.edges_done
    }

    /// Orientable iff every path component is.
    pub fn orientable(&self) -> bool {
        self.component
            .iter()
            .all(|&c| self.component_orientable[c])
    }

    /// Path components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut groups: std::collections::BTreeMap<usize, Vec<VertexId>> = Default::default();
        for (v, &c) in self.component.iter().enumerate() {
            groups.entry(c).or_default().push(VertexId(v as u32));
        }
        let mut out: Vec<Vec<VertexId>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_attached(&self, edge: usize) -> bool {
        self.attached[edge]
    }

    fn link(&mut self, a: usize, b: usize) {
        self.rho[a] = b;
        self.inv[b] = a;
    }

    /// `ρ ← ρ · (x y)`.
    fn post_transpose(&mut self, x: usize, y: usize) {
        let (zx, zy) = (self.inv[x], self.inv[y]);
        self.link(zx, y);
        self.link(zy, x);
    }

    fn cycle_through(&self, x: usize) -> Vec<usize> {
        let mut cycle = vec![x];
        let mut y = self.rho[x];
        while y != x {
            cycle.push(y);
            y = self.rho[y];
        }
        cycle
    }

    fn invert_cycle(&mut self, cycle: &[usize]) {
        let m = cycle.len();
        for j in 0..m {
            self.link(cycle[(j + 1) % m], cycle[j]);
        }
    }

    fn install_cycle(&mut self, cycle: &[usize]) {
        let m = cycle.len();
        for j in 0..m {
            self.link(cycle[j], cycle[(j + 1) % m]);
        }
    }

    fn walk_forward(&self, from: usize, to: usize) -> Vec<usize> {
        let mut seg = vec![from];
        let mut x = from;
        while x != to {
            x = self.rho[x];
            seg.push(x);
            if x == from {
                break;
            }
        }
        seg
    }

    fn walk_backward(&self, from: usize, to: usize) -> Vec<usize> {
        let mut seg = vec![from];
        let mut x = from;
        while x != to {
            x = self.inv[x];
            seg.push(x);
            if x == from {
                break;
            }
        }
        seg
    }

    /// Reverses the orientation of path component `comp`: inverts every boundary
    /// cycle in it and toggles its vertices' orientation flags.
    fn reverse_component(&mut self, g: &Gos, comp: usize) {
        let mut done = vec![false; self.rho.len()];
        for v in 0..self.component.len() {
            if self.component[v] != comp {
                continue;
            }
            self.reversed[v] = !self.reversed[v];
            for s in g.stub_range(VertexId(v as u32)) {
                if done[s] {
                    continue;
                }
                let cycle = self.cycle_through(s);
                for &x in &cycle {
                    done[x] = true;
                }
                self.invert_cycle(&cycle);
            }
        }
    }

    fn merge_components(&mut self, keep: usize, absorb: usize, orientable: bool) {
        for c in self.component.iter_mut() {
            if *c == absorb {
                *c = keep;
            }
        }
        self.component_orientable[keep] = orientable;
    }

    /// Direction in which the boundary passes the unattached stub `s`.
    fn direction(&self, g: &Gos, s: Stub) -> Result<Direction, BuildError> {
        let prev = g.prev_stub(s).index();
        let x = s.index();
        let forward = self.rho[prev] == x;
        let backward = self.rho[x] == prev;
        let v = g.vertex_of(s).index();
        if self.component_orientable[self.component[v]] {
            let expected = if self.reversed[v] {
                Direction::Backward
            } else {
                Direction::Forward
            };
            let agrees = match expected {
                Direction::Forward => forward,
                Direction::Backward => backward,
            };
            if !agrees {
                return Err(inconsistency(format!(
                    "boundary at stub {s} disagrees with the orientation of vertex {}",
                    v + 1
                )));
            }
            Ok(expected)
        } else if forward {
            Ok(Direction::Forward)
        } else if backward {
            Ok(Direction::Backward)
        } else {
            Err(inconsistency(format!("stub {s} is not adjacent to its predecessor in rho")))
        }
    }

    /// Attaches edge `edge` of `g`, updating `ρ`, `b`, components and orientability.
    pub fn attach_edge(&mut self, g: &Gos, edge: usize) -> Result<Step, BuildError> {
        if self.attached[edge] {
            return Err(BuildError::EdgeAlreadyAttached(edge));
        }
        let e = g.edge(edge);
        let (p, q, eps) = (e.a, e.b, e.sign);
        let (pp, qp) = (g.prev_stub(p).index(), g.prev_stub(q).index());
        let (pi, qi) = (p.index(), q.index());
        let dp = self.direction(g, p)?;
        let dq = self.direction(g, q)?;
        let compatible = eps.value() * dp.value() * dq.value() == 1;

        let c1 = self.cycle_through(pi);
        let same_cycle = c1.contains(&qi);
        let comp_p = self.component[g.vertex_of(p).index()];
        let comp_q = self.component[g.vertex_of(q).index()];
        let before = self.b;

        use Direction::{Backward as B, Forward as F};
        let (case, roles);
        if !same_cycle {
            // Case I. `target` is the stub whose cycle gets reversed in the (b) variants.
            let (label, r, a_pair, b_pair, target) = match (dp, dq) {
                (F, F) => (if compatible { CaseLabel::I1a } else { CaseLabel::I1b }, Roles::Direct, (pi, qi), (pi, qp), qi),
                (F, B) => (if compatible { CaseLabel::I2a } else { CaseLabel::I2b }, Roles::Direct, (pi, qp), (pi, qi), qi),
                (B, F) => (if compatible { CaseLabel::I2a } else { CaseLabel::I2b }, Roles::Swapped, (qi, pp), (qi, pi), pi),
                (B, B) => (if compatible { CaseLabel::I1a } else { CaseLabel::I1b }, Roles::Mirrored, (pp, qp), (pp, qi), qi),
            };
            case = label;
            roles = r;
            let target_comp = self.component[g.vertex_of(Stub(target as u32)).index()];
            let orientable;
            if compatible {
                self.post_transpose(a_pair.0, a_pair.1);
                orientable = self.component_orientable[comp_p] && self.component_orientable[comp_q];
            } else if comp_p != comp_q {
                self.reverse_component(g, target_comp);
                self.post_transpose(b_pair.0, b_pair.1);
                orientable = self.component_orientable[comp_p] && self.component_orientable[comp_q];
            } else {
                let cycle = self.cycle_through(target);
                self.invert_cycle(&cycle);
                self.post_transpose(b_pair.0, b_pair.1);
                orientable = false;
            }
            if comp_p != comp_q {
                self.merge_components(comp_p.min(comp_q), comp_p.max(comp_q), orientable);
            } else {
                self.component_orientable[comp_p] = orientable;
            }
            self.b -= 1;
        } else {
            // Case II: one circle, so one component.
            let (label_a, label_b, r, a_pair, seg) = match (dp, dq) {
                (F, B) => (CaseLabel::II1a, CaseLabel::II1b, Roles::Direct, (pi, qp), (pi, qi, pp, qp)),
                (F, F) if pi == qp => (CaseLabel::II2aPrime, CaseLabel::II2bPrime, Roles::Direct, (pi, qi), (pi, qp, pp, qi)),
                (F, F) => (CaseLabel::II2a, CaseLabel::II2b, Roles::Direct, (pi, qi), (pi, qp, pp, qi)),
                (B, F) => (CaseLabel::II1a, CaseLabel::II1b, Roles::Swapped, (qi, pp), (qi, pi, qp, pp)),
                (B, B) if pp == qi => (CaseLabel::II2aPrime, CaseLabel::II2bPrime, Roles::Mirrored, (pp, qp), (pp, qi, pi, qp)),
                (B, B) => (CaseLabel::II2a, CaseLabel::II2b, Roles::Mirrored, (pp, qp), (pp, qi, pi, qp)),
            };
            roles = r;
            if compatible {
                case = label_a;
                self.post_transpose(a_pair.0, a_pair.1);
                self.b += 1;
            } else {
                case = label_b;
                // C⁻¹ · (start … end, rev(rstart … rend))
                let (start, end, rstart, rend) = seg;
                let mut cycle = self.walk_forward(start, end);
                let tail = self.walk_backward(rstart, rend);
                if *cycle.last().unwrap() != end || *tail.last().unwrap() != rend {
                    return Err(inconsistency(format!(
                        "stubs of edge ({p} {q}) are not in the expected cyclic order"
                    )));
                }
                cycle.extend(tail);
                if cycle.len() != c1.len() {
                    return Err(inconsistency(format!(
                        "rerouted circle for edge ({p} {q}) has {} arcs, expected {}",
                        cycle.len(),
                        c1.len()
                    )));
                }
                self.install_cycle(&cycle);
                self.component_orientable[comp_p] = false;
            }
        }
        if self.b as i64 - before as i64 != case.boundary_delta() {
            return Err(inconsistency(format!("boundary count moved from {before} to {}", self.b)));
        }
        self.attached[edge] = true;
        self.edges_done += 1;
        Ok(Step {
            edge,
            p,
            q,
            sign: eps,
            case,
            roles,
            boundary: self.b,
            orientable: self.orientable(),
        })
    }
}

/// One step of a traced build together with `ρ` after the step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedStep {
    pub step: Step,
    pub rho: Permutation,
}

impl fmt::Display for TracedStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  rho=", self.step)?;
        for cycle in self.rho.cycles() {
            write_cycle(f, &cycle)?;
        }
        Ok(())
    }
}

/// Tree edges first (breadth-first discovery order), then the rest ascending.
pub fn default_order(g: &Gos) -> Vec<usize> {
    let t = spanning_tree(g);
    t.tree.iter().chain(t.complement.iter()).copied().collect()
}

fn check_order(g: &Gos, order: &[usize]) -> Result<(), BuildError> {
    let mut seen = vec![false; g.edge_count()];
    if order.len() != g.edge_count() {
        return Err(BuildError::BadOrder);
    }
    for &e in order {
        if e >= seen.len() || std::mem::replace(&mut seen[e], true) {
            return Err(BuildError::BadOrder);
        }
    }
    Ok(())
}

fn run(g: &Gos, order: Option<&[usize]>, mut on_step: impl FnMut(&BuildState, Step) -> Result<(), BuildError>) -> Result<BuildState, BuildError> {
    let mut state = BuildState::initial(g)?;
    let default;
    let tree_first = order.is_none();
    let order = match order {
        Some(o) => {
            check_order(g, o)?;
            o
        }
        None => {
            default = default_order(g);
            &default[..]
        }
    };
    let tree_len = g.vertex_count() - 1;
    for (i, &e) in order.iter().enumerate() {
        let step = state.attach_edge(g, e)?;
        if tree_first && i < tree_len && !step.case.is_case_one() {
            return Err(inconsistency(format!("tree edge {} closed a circuit", e + 1)));
        }
        on_step(&state, step)?;
        if tree_first && i + 1 == tree_len && (state.b != 1 || state.components().len() != 1 || !state.orientable()) {
            return Err(inconsistency("attaching a maximal tree did not give a disc"));
        }
    }
    if state.rho().cycle_count() != state.b {
        return Err(inconsistency("final rho does not have b cycles"));
    }
    Ok(state)
}

/// Attaches every edge of `g`, by default tree edges first.
pub fn build(g: &Gos, order: Option<&[usize]>) -> Result<BuildState, BuildError> {
    run(g, order, |_, _| Ok(()))
}

/// Like [`build`], recording every step and `ρ` after it. Also checks after
/// every step that `ρ` has exactly `b` cycles.
pub fn build_traced(g: &Gos, order: Option<&[usize]>) -> Result<(BuildState, Vec<TracedStep>), BuildError> {
    let mut trace = Vec::with_capacity(g.edge_count());
    let state = run(g, order, |state, step| {
        let rho = state.rho();
        if rho.cycle_count() != state.b {
            return Err(inconsistency(format!(
                "after edge {} rho has {} cycles but b = {}",
                step.edge + 1,
                rho.cycle_count(),
                state.b
            )));
        }
        trace.push(TracedStep { step, rho });
        Ok(())
    })?;
    Ok((state, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::boundary_count;
    use crate::gos::GosData;
    use crate::orientability::is_orientable;
    use crate::random::{random_gos, RandomGos};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gos(vertices: &[&[u32]], edges: &[(u32, u32, Sign)]) -> Gos {
        Gos::from_data(&GosData {
            vertices: vertices.iter().map(|v| v.to_vec()).collect(),
            edges: edges.to_vec(),
        })
        .unwrap()
    }

    fn theta_crossed() -> Gos {
        gos(
            &[&[1, 2, 3], &[4, 5, 6]],
            &[(1, 4, Sign::Plus), (2, 5, Sign::Plus), (3, 6, Sign::Plus)],
        )
    }

    #[test]
    fn first_edge_is_case_i1a() {
        let g = theta_crossed();
        let mut s = BuildState::initial(&g).unwrap();
        let step = s.attach_edge(&g, 0).unwrap();
        assert_eq!(step.case, CaseLabel::I1a);
        assert_eq!(step.roles, Roles::Direct);
        assert_eq!(s.boundary(), 1);
        // σ·(1 4) = (1 2 3)(4 5 6)·(1 4)
        let expected = g.sigma().then(&Permutation::parse_cycles(6, "(1 4)").unwrap());
        assert_eq!(s.rho(), expected);
        assert_eq!(s.attach_edge(&g, 0), Err(BuildError::EdgeAlreadyAttached(0)));
    }

    #[test]
    fn crossed_theta_has_one_boundary() {
        let g = theta_crossed();
        let (s, trace) = build_traced(&g, None).unwrap();
        assert_eq!(s.boundary(), 1);
        assert!(s.orientable());
        let cycles = s.rho().cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 6);
        assert_eq!(trace.len(), 3);
        assert!(trace[0].step.case.is_case_one());
    }

    #[test]
    fn bouquet_of_two_loops_matches_game() {
        let g = gos(&[&[1, 2, 3, 4]], &[(1, 3, Sign::Plus), (2, 4, Sign::Plus)]);
        let s = build(&g, None).unwrap();
        assert_eq!(s.boundary(), boundary_count(&g));
        assert_eq!(s.orientable(), is_orientable(&g));
        assert_eq!(s.boundary(), 1);
    }

    #[test]
    fn rejects_valency_two() {
        let g = gos(&[&[1, 2]], &[(1, 2, Sign::Plus)]);
        assert_eq!(
            BuildState::initial(&g),
            Err(BuildError::ValencyTooLow { vertex: 1, valency: 2 })
        );
    }

    #[test]
    fn rejects_bad_order() {
        let g = theta_crossed();
        assert_eq!(build(&g, Some(&[0, 1])), Err(BuildError::BadOrder));
        assert_eq!(build(&g, Some(&[0, 1, 1])), Err(BuildError::BadOrder));
    }

    #[test]
    fn degenerate_case_uses_primed_rule() {
        // Loops on adjacent stubs: p = 2, q = 3 has q' = p.
        let g = gos(
            &[&[1, 2, 3], &[4, 5, 6, 7, 8]],
            &[(1, 4, Sign::Plus), (2, 3, Sign::Plus), (5, 6, Sign::Minus), (7, 8, Sign::Plus)],
        );
        let (s, trace) = build_traced(&g, None).unwrap();
        let cases: Vec<CaseLabel> = trace.iter().map(|t| t.step.case).collect();
        assert!(cases.contains(&CaseLabel::II2aPrime), "{cases:?}");
        assert!(cases.contains(&CaseLabel::II2bPrime), "{cases:?}");
        assert_eq!(s.boundary(), boundary_count(&g));
        assert!(!s.orientable());
    }

    fn trivalent(seed: u64, all_plus: bool) -> Gos {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_gos(&mut rng, &RandomGos { all_plus, ..RandomGos::default() })
    }

    proptest! {
        #[test]
        fn agrees_with_game_and_tree(seed in any::<u64>()) {
            let g = trivalent(seed, false);
            let (s, trace) = build_traced(&g, None).unwrap();
            prop_assert_eq!(s.boundary(), boundary_count(&g));
            prop_assert_eq!(s.orientable(), is_orientable(&g));
            let mut b = g.vertex_count() as i64;
            for t in &trace {
                b += t.step.case.boundary_delta();
                prop_assert_eq!(t.step.boundary as i64, b);
                prop_assert_eq!(t.rho.cycle_count() as i64, b);
            }
        }

        #[test]
        fn independent_of_edge_order(seed in any::<u64>()) {
            let g = trivalent(seed, false);
            let reference = build(&g, None).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(17));
            for _ in 0..5 {
                let mut order: Vec<usize> = (0..g.edge_count()).collect();
                order.shuffle(&mut rng);
                let (s, _) = build_traced(&g, Some(&order)).unwrap();
                prop_assert_eq!(s.boundary(), reference.boundary());
                prop_assert_eq!(s.orientable(), reference.orientable());
            }
        }

        #[test]
        fn all_plus_reduces_to_sigma_tau(seed in any::<u64>()) {
            let g = trivalent(seed, true);
            let s = build(&g, None).unwrap();
            let st = g.sigma().then(&g.tau());
            let normal = |c: &Vec<usize>| -> Vec<usize> {
                let mut c = c.clone();
                c.sort();
                c
            };
            let mut ours: Vec<Vec<usize>> = s.rho().cycles().iter().map(normal).collect();
            let mut theirs: Vec<Vec<usize>> = st.cycles().iter().map(normal).collect();
            ours.sort();
            theirs.sort();
            prop_assert_eq!(ours, theirs);
            // each cycle is a στ cycle or its reverse
            for c in s.rho().cycles() {
                let fwd = c.windows(2).all(|w| st.apply(w[0]) == w[1]);
                let bwd = c.windows(2).all(|w| st.apply(w[1]) == w[0]);
                prop_assert!(fwd || bwd);
            }
        }
    }
}
