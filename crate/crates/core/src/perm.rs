//! Permutations of `0..n`, composed left to right.
//!
//! `a.then(&b)` is the permutation `x ↦ (x a) b`, i.e. apply `a` first. This
//! matches the `pπ` notation used for stub permutations throughout the crate.
//! Labels are stored 0-based and printed 1-based in cycle notation.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image {image} is out of range for a permutation of {len} points")]
    OutOfRange { image: usize, len: usize },
    #[error("point {0} appears more than once")]
    Repeated(usize),
    #[error("malformed cycle notation: {0}")]
    Syntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    pub fn from_images(map: Vec<usize>) -> Result<Self, PermError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n {
                return Err(PermError::OutOfRange { image: x, len: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PermError::Repeated(x));
            }
        }
        Ok(Permutation { map })
    }

    /// Builds a permutation of `0..n` from disjoint cycles. Points not listed are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self, PermError> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(PermError::OutOfRange { image: x, len: n });
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(PermError::Repeated(x));
                }
                map[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { map })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; commas are allowed as separators.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, PermError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Syntax(rest.to_string()))?;
            let close = open
                .find(')')
                .ok_or_else(|| PermError::Syntax(rest.to_string()))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(PermError::Syntax(t.to_string())),
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { map: inv }
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation {
            map: self.map.iter().map(|&y| other.map[y]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.map.iter().enumerate().filter(|(x, &y)| *x == y).map(|(x, _)| x)
    }

    pub fn is_involution(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &y)| self.map[y] == x)
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that point.
    /// Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.map.len()];
        let mut out = Vec::new();
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.map[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.map.len()];
        let mut count = 0;
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.map[x];
            }
        }
        count
    }

    /// The cycle through `x`, listed in order starting at `x`.
    pub fn cycle_of(&self, x: usize) -> Vec<usize> {
        let mut cycle = vec![x];
        let mut y = self.map[x];
        while y != x {
            cycle.push(y);
            y = self.map[y];
        }
        cycle
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation, fixed points omitted; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            any = true;
            write_cycle(f, &cycle)?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Writes one cycle of 0-based points in 1-based notation.
pub fn write_cycle(f: &mut impl fmt::Write, cycle: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in cycle.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{}", x + 1)?;
    }
    write!(f, ")")
}
