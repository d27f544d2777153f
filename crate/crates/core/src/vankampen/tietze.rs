use std::collections::BTreeSet;

use crate::freegroup::{FreeWord, GroupPresentation, Letter};

/// Canonical representative of a relator up to cyclic rotation and inversion.
fn canonical(w: &FreeWord) -> FreeWord {
    let c = w.cyclically_reduced();
    let mut best = c.letters().to_vec();
    for base in [c.clone(), c.invert()] {
        let l = base.letters();
        for s in 0..l.len() {
            let rot: Vec<Letter> = l[s..].iter().chain(&l[..s]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    FreeWord::reduce(best)
}

fn normalize(relators: impl IntoIterator<Item = FreeWord>) -> Vec<FreeWord> {
    let set: BTreeSet<(usize, FreeWord)> = relators
        .into_iter()
        .map(|r| canonical(&r))
        .filter(|r| !r.is_identity())
        .map(|r| (r.len(), r))
        .collect();
    set.into_iter().map(|(_, r)| r).collect()
}

/// Generator occurring exactly once in `r`, preferring the highest index.
fn solvable(r: &FreeWord) -> Option<u32> {
    let mut counts = std::collections::BTreeMap::new();
    for l in r.letters() {
        *counts.entry(l.generator).or_insert(0usize) += 1;
    }
    counts.into_iter().rev().find(|&(_, c)| c == 1).map(|(g, _)| g)
}

/// Solves `r = 1` for generator `x`, giving the word `x` equals.
fn solve(r: &FreeWord, x: u32) -> FreeWord {
    let l = r.letters();
    let at = l.iter().position(|t| t.generator == x).expect("x occurs in r");
    // r rotated to x^ε u, so x^ε = u⁻¹
    let rest = FreeWord::reduce(l[at + 1..].iter().chain(&l[..at]).copied());
    if l[at].inverse {
        rest
    } else {
        rest.invert()
    }
}

/// Simplifies a presentation by sound Tietze moves: free and cyclic
/// reduction, removal of trivial and duplicate relators, and elimination of
/// a generator that occurs once in some relator. At most `effort`
/// eliminations are made, and none that more than doubles the total length.
pub fn tietze_simplify(p: &GroupPresentation, effort: usize) -> GroupPresentation {
    let mut n = p.generators();
    let mut relators = normalize(p.relators().iter().cloned());
    for _ in 0..effort {
        let old_len: usize = relators.iter().map(FreeWord::len).sum();
        let mut done = false;
        for (i, r) in relators.iter().enumerate() {
            let Some(x) = solvable(r) else { continue };
            let shift: Vec<FreeWord> = (1..=n as u32)
                .map(|g| FreeWord::generator(if g > x { g - 1 } else { g }))
                .collect();
            // x never occurs in its own value, so shifting is safe
            let value = solve(r, x)
                .apply_endomorphism(&shift)
                .expect("images for every generator");
            let mut images = shift;
            images[x as usize - 1] = value;
            let rewritten: Vec<FreeWord> = relators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, s)| s.apply_endomorphism(&images).expect("images for every generator"))
                .collect();
            let new_len: usize = rewritten.iter().map(FreeWord::len).sum();
            if new_len > 2 * old_len {
                continue;
            }
            relators = normalize(rewritten);
            n -= 1;
            done = true;
            break;
        }
        if !done {
            break;
        }
    }
    GroupPresentation::new(n, relators).expect("generators renumbered consistently")
}
