//! Permutations of `{1, …, n}`.
//!
//! Products compose left to right: `a.then(&b)` applies `a` first. This
//! matches the reading order of braid words and factorizations.

use std::fmt;

use crate::error::{Error, Result};

/// One-line form, stored 0-based: `image[i]` is the image of `i + 1`, minus one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            image: (0..degree as u16).collect(),
        }
    }

    /// From a 1-based one-line form.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x - 1] = true;
            image.push((x - 1) as u16);
        }
        Ok(Permutation { image })
    }

    /// The transposition of the 1-based points `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(degree);
        p.image.swap(a - 1, b - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1] as usize + 1
    }

    /// 1-based one-line form.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            image: self.image.iter().map(|&x| other.image[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x as usize] = i as u16;
        }
        Permutation { image }
    }

    /// `b⁻¹ · self · b`.
    pub fn conjugate(&self, by: &Permutation) -> Permutation {
        by.inverse().then(self).then(by)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.image[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, in decreasing order. This is
    /// the conjugacy class in the symmetric group.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lengths.iter().sum();
        lengths.extend(std::iter::repeat_n(1, self.degree() - moved));
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// `+1` for even, `-1` for odd permutations.
    pub fn sign(&self) -> i64 {
        let odd = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Parses cycle notation such as `(1 3)(2 4)` or `(1,2,3)`; `e` or `()`
    /// is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let t = text.trim();
        let mut p = Permutation::identity(degree);
        if t.is_empty() || t == "e" {
            return Ok(p);
        }
        let mut rest = t;
        while !rest.is_empty() {
            let column = t.len() - rest.len() + 1;
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(rest, column, "expected `(` to open a cycle"))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::parse(rest, column, "unterminated cycle"))?;
            let body = &open[..close];
            let points: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .ok()
                        .filter(|&x| x >= 1 && x <= degree)
                        .ok_or_else(|| Error::parse(s, column, format!("point must lie in 1..={degree}")))
                })
                .collect::<Result<_>>()?;
            let mut distinct = points.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != points.len() {
                return Err(Error::parse(body, column, "repeated point in cycle"));
            }
            let mut cycle = Permutation::identity(degree);
            for (k, &x) in points.iter().enumerate() {
                let y = points[(k + 1) % points.len()];
                cycle.image[x - 1] = (y - 1) as u16;
            }
            p = p.then(&cycle);
            rest = open[close + 1..].trim_start();
        }
        Ok(p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}
