//! Built-in GOS families addressed by `name:params` specs.
//!
//! | spec | graph |
//! |------|-------|
//! | `loop:+`, `loop:-` | one vertex with one loop |
//! | `theta:planar`, `theta:crossed`, optional `:<signs>` like `:++-` | two trivalent vertices, three edges |
//! | `ladder:k` | two rows of `k` vertices, `+` rails, `-` rungs, planar orientation |
//! | `petersen[:<orient>[:<signs>]]` | Petersen graph; bit masks, `signs` may be `spokes-minus` |
//! | `complete:n` | `K_n` drawn in convex position, all `+` |
//! | `random:<seed>[:<max_edges>[:<min_valency>]]` | connected random GOS |

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::gos::{Gos, GosErrors, Sign, Stub};
use crate::random::{random_gos, RandomGos};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter for `{family}`: {message}")]
    BadParameter { family: String, message: String },
    #[error("family member is not a valid GOS")]
    Invalid(#[from] GosErrors),
}

fn bad(family: &str, message: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter {
        family: family.to_string(),
        message: message.into(),
    }
}

/// Orientations read off a straight-line drawing: each vertex lists its edge
/// ends anticlockwise by angle. A vertex marked in `reversed` gets the
/// clockwise order instead (same first stub). Loops are not supported.
pub fn planar_gos(
    positions: &[(f64, f64)],
    edges: &[(usize, usize, Sign)],
    reversed: &[bool],
) -> Result<Gos, GosErrors> {
    let n = positions.len();
    let mut ends: Vec<Vec<(f64, usize, bool)>> = vec![Vec::new(); n];
    for (i, &(a, b, _)) in edges.iter().enumerate() {
        let angle = |from: usize, to: usize| {
            let (x0, y0) = positions[from];
            let (x1, y1) = positions[to];
            (y1 - y0).atan2(x1 - x0).rem_euclid(2.0 * PI)
        };
        ends[a].push((angle(a, b), i, false));
        ends[b].push((angle(b, a), i, true));
    }
    let mut stub_of = vec![[Stub(0); 2]; edges.len()];
    let mut valencies = Vec::with_capacity(n);
    let mut next = 0u32;
    for (v, list) in ends.iter_mut().enumerate() {
        list.sort_by(|x, y| x.0.total_cmp(&y.0));
        if reversed.get(v).copied().unwrap_or(false) && list.len() > 1 {
            list[1..].reverse();
        }
        for &(_, e, second) in list.iter() {
            stub_of[e][second as usize] = Stub(next);
            next += 1;
        }
        valencies.push(list.len());
    }
    let canonical: Vec<(Stub, Stub, Sign)> = edges
        .iter()
        .enumerate()
        .map(|(i, &(_, _, s))| (stub_of[i][0], stub_of[i][1], s))
        .collect();
    Gos::from_canonical(&valencies, &canonical)
}

pub fn single_loop(sign: Sign) -> Gos {
    Gos::from_canonical(&[2], &[(Stub(0), Stub(1), sign)]).expect("loop is valid")
}

/// Theta graph with stubs 1 2 3 | 4 5 6; planar pairs 1-4, 2-6, 3-5, crossed 1-4, 2-5, 3-6.
pub fn theta(planar: bool, signs: [Sign; 3]) -> Gos {
    let pairs = if planar { [(0, 3), (1, 5), (2, 4)] } else { [(0, 3), (1, 4), (2, 5)] };
    let edges: Vec<_> = pairs
        .iter()
        .zip(signs)
        .map(|(&(a, b), s)| (Stub(a), Stub(b), s))
        .collect();
    Gos::from_canonical(&[3, 3], &edges).expect("theta is valid")
}

/// Vertices `t_1..t_k` then `b_1..b_k`; edges: top rail, bottom rail (both `+`), then rungs (`-`).
pub fn ladder(k: usize) -> Result<Gos, FamilyError> {
    if k < 1 {
        return Err(bad("ladder", "k must be at least 1"));
    }
    let mut positions: Vec<(f64, f64)> = (0..k).map(|j| (j as f64, 1.0)).collect();
    positions.extend((0..k).map(|j| (j as f64, 0.0)));
    let mut edges = Vec::new();
    for row in [0, k] {
        for j in 0..k - 1 {
            edges.push((row + j, row + j + 1, Sign::Plus));
        }
    }
    for j in 0..k {
        edges.push((j, k + j, Sign::Minus));
    }
    Ok(planar_gos(&positions, &edges, &[])?)
}

/// Construction indices of the five spokes, as used by the `signs` mask of [`petersen`].
pub const PETERSEN_SPOKES: [usize; 5] = [5, 6, 7, 8, 9];

/// Indices in `g`'s own edge order of the edges joining an outer vertex to an inner one.
pub fn petersen_spoke_edges(g: &Gos) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.edge_endpoints(e);
            (a.index() < 5) != (b.index() < 5)
        })
        .collect()
}

/// Outer vertices 0..5 on a radius-2 circle, inner 5..10 on radius 1.
/// Edges are constructed as outer cycle (0..5), spokes (5..10), inner
/// pentagram (10..15); bit `e` of `signs` makes construction edge `e` minus.
/// Bit `v` of `orient` reverses vertex `v`. The resulting GOS lists its edges
/// by smallest stub, which is a different order.
pub fn petersen(orient: u32, signs: u32) -> Gos {
    let mut positions = Vec::with_capacity(10);
    for radius in [2.0, 1.0] {
        for i in 0..5 {
            let a = (90.0 + 72.0 * i as f64).to_radians();
            positions.push((radius * a.cos(), radius * a.sin()));
        }
    }
    let mut pairs = Vec::with_capacity(15);
    pairs.extend((0..5).map(|i| (i, (i + 1) % 5)));
    pairs.extend((0..5).map(|i| (i, i + 5)));
    pairs.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| (a, b, Sign::from_bool_minus(signs >> e & 1 == 1)))
        .collect();
    let reversed: Vec<bool> = (0..10).map(|v| orient >> v & 1 == 1).collect();
    planar_gos(&positions, &edges, &reversed).expect("petersen is valid")
}

pub fn complete(n: usize) -> Result<Gos, FamilyError> {
    if n < 3 {
        return Err(bad("complete", "n must be at least 3"));
    }
    let positions: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / n as f64;
            (a.cos(), a.sin())
        })
        .collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b, Sign::Plus));
        }
    }
    Ok(planar_gos(&positions, &edges, &[])?)
}

fn parse_num<T: std::str::FromStr>(family: &str, s: &str) -> Result<T, FamilyError> {
    s.parse().map_err(|_| bad(family, format!("`{s}` is not a number")))
}

fn parse_mask(family: &str, s: &str) -> Result<u32, FamilyError> {
    let parsed = if let Some(hex) = s.strip_prefix("0x") {
        u32::from_str_radix(hex, 16)
    } else if let Some(bin) = s.strip_prefix("0b") {
        u32::from_str_radix(bin, 2)
    } else {
        s.parse()
    };
    parsed.map_err(|_| bad(family, format!("`{s}` is not a bit mask")))
}

fn parse_signs<const N: usize>(family: &str, s: &str) -> Result<[Sign; N], FamilyError> {
    let signs: Vec<Sign> = s
        .chars()
        .map(|c| Sign::from_symbol(c).ok_or_else(|| bad(family, format!("bad sign `{c}`"))))
        .collect::<Result<_, _>>()?;
    signs
        .try_into()
        .map_err(|_| bad(family, format!("expected {N} signs, got `{s}`")))
}

/// True if `spec` names a built-in family rather than a file.
pub fn is_family_spec(spec: &str) -> bool {
    let name = spec.split(':').next().unwrap_or("");
    matches!(name, "loop" | "theta" | "ladder" | "petersen" | "complete" | "random")
}

pub fn generate_family(spec: &str) -> Result<Gos, FamilyError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let name = parts[0];
    let args = &parts[1..];
    let arity = |max: usize| {
        if args.len() > max {
            Err(bad(name, format!("too many parameters in `{spec}`")))
        } else {
            Ok(())
        }
    };
    match name {
        "loop" => {
            arity(1)?;
            let sign = match args.first().copied().unwrap_or("+") {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                other => return Err(bad(name, format!("expected + or -, got `{other}`"))),
            };
            Ok(single_loop(sign))
        }
        "theta" => {
            arity(2)?;
            let planar = match args.first().copied().unwrap_or("planar") {
                "planar" => true,
                "crossed" => false,
                other => return Err(bad(name, format!("expected planar or crossed, got `{other}`"))),
            };
            let signs = match args.get(1) {
                Some(s) => parse_signs::<3>(name, s)?,
                None => [Sign::Plus; 3],
            };
            Ok(theta(planar, signs))
        }
        "ladder" => {
            arity(1)?;
            let k = args.first().ok_or_else(|| bad(name, "missing k"))?;
            ladder(parse_num(name, k)?)
        }
        "petersen" => {
            arity(2)?;
            let orient = args.first().map(|s| parse_mask(name, s)).transpose()?.unwrap_or(0);
            let signs = match args.get(1).copied() {
                None => 0,
                Some("spokes-minus") => PETERSEN_SPOKES.iter().map(|e| 1 << e).sum(),
                Some(s) => parse_mask(name, s)?,
            };
            if orient >= 1 << 10 || signs >= 1 << 15 {
                return Err(bad(name, "mask has bits beyond the graph"));
            }
            Ok(petersen(orient, signs))
        }
        "complete" => {
            arity(1)?;
            let n = args.first().ok_or_else(|| bad(name, "missing n"))?;
            complete(parse_num(name, n)?)
        }
        "random" => {
            arity(3)?;
            let seed: u64 = parse_num(name, args.first().ok_or_else(|| bad(name, "missing seed"))?)?;
            let mut opts = RandomGos::default();
            if let Some(e) = args.get(1) {
                opts.max_edges = parse_num(name, e)?;
            }
            if let Some(w) = args.get(2) {
                opts.min_valency = parse_num(name, w)?;
            }
            if opts.max_edges < opts.min_valency.max(2).div_ceil(2).max(1) || opts.max_edges > 10_000 {
                return Err(bad(name, "max_edges out of range for the valency floor"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(random_gos(&mut rng, &opts))
        }
        other => Err(FamilyError::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gos::GosError;

    #[test]
    fn ladder_sizes() {
        for (k, v, e) in [(2, 4, 4), (5, 10, 13)] {
            let g = ladder(k).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (v, e));
            assert_eq!(g.rank(), k as i64 - 1);
            assert_eq!(g.minus_edge_count(), k);
        }
    }

    #[test]
    fn ladder_one_has_valency_one_ends() {
        let err = generate_family("ladder:1").unwrap_err();
        match err {
            FamilyError::Invalid(errs) => {
                assert!(errs.contains(|e| matches!(e, GosError::BadValency { valency: 1, .. })))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(generate_family("ladder:0"), Err(FamilyError::BadParameter { .. })));
    }

    #[test]
    fn petersen_skeleton() {
        let g = generate_family("petersen").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.rank()), (10, 15, 6));
        assert!(g.is_all_plus());
        assert_eq!(g.valencies(), vec![3; 10]);
        let s = generate_family("petersen:0:spokes-minus").unwrap();
        assert_eq!(s.minus_edge_count(), 5);
        let spokes = petersen_spoke_edges(&s);
        assert_eq!(spokes.len(), 5);
        for e in spokes {
            assert!(s.edge(e).sign.is_minus());
        }
    }

    #[test]
    fn theta_specs() {
        assert_eq!(generate_family("theta:planar").unwrap(), theta(true, [Sign::Plus; 3]));
        let g = generate_family("theta:crossed:+-+").unwrap();
        assert_eq!(g.minus_edge_count(), 1);
        assert!(generate_family("theta:planar:++").is_err());
    }

    #[test]
    fn complete_graphs() {
        let k4 = complete(4).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        assert!(complete(2).is_err());
    }

    #[test]
    fn unknown_and_random() {
        assert_eq!(generate_family("moebius"), Err(FamilyError::UnknownFamily("moebius".into())));
        assert_eq!(generate_family("random:7"), generate_family("random:7"));
        assert!(generate_family("random:7:8:3").unwrap().min_valency() >= 3);
        assert!(is_family_spec("ladder:3"));
        assert!(!is_family_spec("theta.gos"));
    }
}
