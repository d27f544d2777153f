use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freegroup::GroupPresentation;

const MAX_DEGREE: usize = 6;

/// `S_k` as a multiplication table over indices; element 0 is the identity.
struct Table {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    /// One representative per conjugacy class with the class size.
    classes: Vec<(u16, u64)>,
}

fn all_perms(k: usize) -> Vec<Vec<u8>> {
    fn go(k: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                go(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn cycle_type(p: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut t = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len > 0 {
            t.push(len);
        }
    }
    t.sort_unstable();
    t
}

impl Table {
    fn new(k: usize) -> Self {
        let perms = all_perms(k);
        let index: HashMap<Vec<u8>, u16> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u16)).collect();
        let order = perms.len();
        let mut mul = vec![0u16; order * order];
        let mut inv = vec![0u16; order];
        for (i, a) in perms.iter().enumerate() {
            let mut ai = vec![0u8; k];
            for (x, &y) in a.iter().enumerate() {
                ai[y as usize] = x as u8;
            }
            inv[i] = index[&ai];
            for (j, b) in perms.iter().enumerate() {
                // left to right: apply a, then b
                let ab: Vec<u8> = a.iter().map(|&x| b[x as usize]).collect();
                mul[i * order + j] = index[&ab];
            }
        }
        let mut by_type: Vec<(Vec<usize>, u16, u64)> = Vec::new();
        for (i, p) in perms.iter().enumerate() {
            let t = cycle_type(p);
            match by_type.iter_mut().find(|(ty, _, _)| *ty == t) {
                Some(entry) => entry.2 += 1,
                None => by_type.push((t, i as u16, 1)),
            }
        }
        Table {
            order,
            mul,
            inv,
            classes: by_type.into_iter().map(|(_, r, n)| (r, n)).collect(),
        }
    }
}

/// Relator as (generator index, inverse) pairs, checked once its largest
/// generator is assigned.
type Rel = Vec<(usize, bool)>;

fn holds(t: &Table, rel: &Rel, images: &[u16]) -> bool {
    let mut acc = 0u16;
    for &(g, inv) in rel {
        let x = if inv { t.inv[images[g] as usize] } else { images[g] };
        acc = t.mul[acc as usize * t.order + x as usize];
    }
    acc == 0
}

fn count_from(t: &Table, checks: &[Vec<Rel>], images: &mut Vec<u16>, n: usize) -> u64 {
    let level = images.len();
    if level == n {
        return 1;
    }
    let mut total = 0;
    for x in 0..t.order as u16 {
        images.push(x);
        if checks[level].iter().all(|r| holds(t, r, images)) {
            total += count_from(t, checks, images, n);
        }
        images.pop();
    }
    total
}

/// `|Hom(G, S_k)|` for `1 <= k <= 6`, by exhaustive assignment of generator
/// images. The first generator ranges over class representatives only,
/// weighted by class size.
pub fn count_homs(p: &GroupPresentation, k: usize) -> Result<u64> {
    if k == 0 || k > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(k));
    }
    let n = p.generators();
    if n == 0 {
        return Ok(1);
    }
    let t = Table::new(k);
    let mut checks: Vec<Vec<Rel>> = vec![Vec::new(); n];
    for r in p.relators() {
        if r.is_identity() {
            continue;
        }
        let rel: Rel = r
            .letters()
            .iter()
            .map(|l| (l.generator as usize - 1, l.inverse))
            .collect();
        let top = rel.iter().map(|(g, _)| *g).max().expect("nonempty relator");
        checks[top].push(rel);
    }
    // split the work over (first image, second image) pairs
    let seeds: Vec<(u16, u64, Option<u16>)> = t
        .classes
        .iter()
        .flat_map(|&(rep, size)| {
            let seconds: Vec<Option<u16>> = if n >= 2 {
                (0..t.order as u16).map(Some).collect()
            } else {
                vec![None]
            };
            seconds.into_iter().map(move |s| (rep, size, s))
        })
        .collect();
    let total = seeds
        .par_iter()
        .map(|&(rep, size, second)| {
            let mut images = vec![rep];
            if !checks[0].iter().all(|r| holds(&t, r, &images)) {
                return 0;
            }
            if let Some(s) = second {
                images.push(s);
                if !checks[1].iter().all(|r| holds(&t, r, &images)) {
                    return 0;
                }
            }
            size * count_from(&t, &checks, &mut images, n)
        })
        .sum();
    Ok(total)
}
