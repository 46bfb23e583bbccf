//! Random valid GOS generation for randomized checks and the `random:` family.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gos::{Gos, Sign, Stub};
use crate::util::DisjointSets;

#[derive(Debug, Clone)]
pub struct RandomGos {
    /// Upper bound on the number of edges (inclusive).
    pub max_edges: usize,
    pub min_valency: usize,
    pub all_plus: bool,
}

impl Default for RandomGos {
    fn default() -> Self {
        RandomGos {
            max_edges: 12,
            min_valency: 3,
            all_plus: false,
        }
    }
}

/// Draws a connected GOS with `E <= max_edges` and every valency at least
/// `min_valency`: valencies are dealt at random, stubs are paired by a uniform
/// perfect matching, and disconnected draws are rejected.
pub fn random_gos<R: Rng + ?Sized>(rng: &mut R, opts: &RandomGos) -> Gos {
    let floor = opts.min_valency.max(2);
    let min_edges = floor.div_ceil(2).max(1);
    assert!(opts.max_edges >= min_edges, "max_edges too small for the valency floor");
    loop {
        let e = rng.gen_range(min_edges..=opts.max_edges);
        let max_v = (2 * e) / floor;
        let v = rng.gen_range(1..=max_v);
        let mut valencies = vec![floor; v];
        for _ in 0..(2 * e - floor * v) {
            valencies[rng.gen_range(0..v)] += 1;
        }
        let mut stubs: Vec<u32> = (0..2 * e as u32).collect();
        stubs.shuffle(rng);

        let mut owner = Vec::with_capacity(2 * e);
        for (i, &w) in valencies.iter().enumerate() {
            owner.extend(std::iter::repeat(i).take(w));
        }
        let mut dsu = DisjointSets::new(v);
        let edges: Vec<(Stub, Stub, Sign)> = stubs
            .chunks(2)
            .map(|pair| {
                dsu.union(owner[pair[0] as usize], owner[pair[1] as usize]);
                let sign = if opts.all_plus {
                    Sign::Plus
                } else {
                    Sign::from_bool_minus(rng.gen())
                };
                (Stub(pair[0]), Stub(pair[1]), sign)
            })
            .collect();
        if dsu.count() != 1 {
            continue;
        }
        return Gos::from_canonical(&valencies, &edges).expect("random construction is valid");
    }
}
