//! Boundary components by following the boundary with counters.
//!
//! Each stub has two sides, giving `4E` counters `(i, k, δ)`: vertex `i`,
//! slot `k` in its cyclic order, side `δ = +1` (left) or `-1` (right). Two
//! involutions act on them:
//!
//! * vertex move: `(i, k, δ) → (i, k + δ, -δ)`
//! * edge move: `(i, k, δ) → (j, m, -εδ)` where stub `(i, k)` is joined to
//!   `(j, m)` by an edge of signature `ε`.
//!
//! Orbits of the alternating walk are the boundary circles of the surface.

use std::fmt;

use crate::gos::{Gos, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `δ = +1`
    Left,
    /// `δ = -1`
    Right,
}

impl Side {
    pub fn delta(self) -> i32 {
        match self {
            Side::Left => 1,
            Side::Right => -1,
        }
    }

    pub fn from_delta(d: i32) -> Side {
        if d > 0 {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Counter {
    pub vertex: VertexId,
    pub slot: usize,
    pub side: Side,
}

impl Counter {
    pub fn new(vertex: VertexId, slot: usize, side: Side) -> Self {
        Counter { vertex, slot, side }
    }
}

impl fmt::Display for Counter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = if self.side == Side::Left { "+1" } else { "-1" };
        write!(f, "({}, {}, {})", self.vertex, self.slot, d)
    }
}

pub fn vertex_move(g: &Gos, c: Counter) -> Counter {
    let w = g.valency(c.vertex) as i64;
    let slot = (c.slot as i64 + c.side.delta() as i64).rem_euclid(w) as usize;
    Counter::new(c.vertex, slot, c.side.opposite())
}

pub fn edge_move(g: &Gos, c: Counter) -> Counter {
    let s = g.stub_at(c.vertex, c.slot);
    let t = g.partner(s);
    let delta = -g.sign_at(s).value() * c.side.delta();
    Counter::new(g.vertex_of(t), g.slot_of(t), Side::from_delta(delta))
}

/// Dense index of a counter: `2 * stub + (side == Right)`.
fn counter_index(g: &Gos, c: Counter) -> usize {
    2 * g.stub_at(c.vertex, c.slot).index() + (c.side == Side::Right) as usize
}

fn counter_at(g: &Gos, idx: usize) -> Counter {
    let s = crate::gos::Stub((idx / 2) as u32);
    let side = if idx % 2 == 0 { Side::Left } else { Side::Right };
    Counter::new(g.vertex_of(s), g.slot_of(s), side)
}

/// Partitions all `4E` counters into piles.
///
/// Piles are discovered in counter-index order (stub label, then left before
/// right); each pile is listed starting at its first counter, alternating an
/// edge move then a vertex move until the walk closes.
pub fn boundary_components(g: &Gos) -> Vec<Vec<Counter>> {
    let n = 2 * g.stub_count();
    let mut seen = vec![false; n];
    let mut piles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let first = counter_at(g, start);
        let mut pile = Vec::new();
        let mut c = first;
        loop {
            seen[counter_index(g, c)] = true;
            pile.push(c);
            let d = edge_move(g, c);
            seen[counter_index(g, d)] = true;
            pile.push(d);
            c = vertex_move(g, d);
            if c == first {
                break;
            }
        }
        piles.push(pile);
    }
    piles
}

/// Number of boundary circles, `b >= 1`.
pub fn boundary_count(g: &Gos) -> usize {
    let n = 2 * g.stub_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut idx = start;
        loop {
            seen[idx] = true;
            let d = edge_move_index(g, idx);
            seen[d] = true;
            idx = vertex_move_index(g, d);
            if idx == start {
                break;
            }
        }
    }
    count
}

#[inline]
fn edge_move_index(g: &Gos, idx: usize) -> usize {
    let s = crate::gos::Stub((idx / 2) as u32);
    let t = g.partner(s);
    let left = idx % 2 == 0;
    // Plus flips the side, minus keeps it.
    let out_left = if g.sign_at(s).is_minus() { left } else { !left };
    2 * t.index() + (!out_left) as usize
}

#[inline]
fn vertex_move_index(g: &Gos, idx: usize) -> usize {
    let s = crate::gos::Stub((idx / 2) as u32);
    if idx % 2 == 0 {
        2 * g.next_stub(s).index() + 1
    } else {
        2 * g.prev_stub(s).index()
    }
}
