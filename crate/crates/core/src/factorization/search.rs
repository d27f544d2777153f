use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::invariants::{invariants, InvariantMode};
use super::{Direction, Factorization, GroupContext, Move};

/// Which moves the search may use, and how many nodes it may expand.
#[derive(Debug, Clone)]
pub struct SearchOptions<E> {
    /// Maximum number of node expansions over both search directions.
    pub budget: usize,
    pub allow_conjugation: bool,
    /// Conjugators for simultaneous conjugation; each is used together with
    /// its inverse. `None` means the context's generators.
    pub conjugators: Option<Vec<E>>,
    /// Cyclic rotation of the tuple. Off unless asked for.
    pub allow_rotation: bool,
}

impl<E> SearchOptions<E> {
    pub fn new(budget: usize) -> Self {
        SearchOptions {
            budget,
            allow_conjugation: false,
            conjugators: None,
            allow_rotation: false,
        }
    }

    pub fn with_conjugation(mut self, conjugators: Option<Vec<E>>) -> Self {
        self.allow_conjugation = true;
        self.conjugators = conjugators;
        self
    }

    pub fn with_rotation(mut self) -> Self {
        self.allow_rotation = true;
        self
    }
}

#[derive(Debug, Clone)]
pub struct Certificate<E> {
    /// Applying these to the first factorization, in order, yields the second.
    pub moves: Vec<Move<E>>,
    pub explored: usize,
}

/// An invariant preserved by every move in force on which the inputs differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub invariant: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone)]
pub enum Verdict<E> {
    Equivalent(Certificate<E>),
    Inequivalent(Witness),
    Unknown { explored: usize },
}

impl<E> Verdict<E> {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Equivalent(_) => "equivalent",
            Verdict::Inequivalent(_) => "inequivalent",
            Verdict::Unknown { .. } => "unknown",
        }
    }
}

/// Factorizations reachable from a start, in discovery order.
#[derive(Debug, Clone)]
pub struct Orbit<C: GroupContext> {
    pub members: Vec<Factorization<C>>,
    /// True iff the frontier emptied before the budget ran out.
    pub exhausted: bool,
    pub explored: usize,
}

impl<C: GroupContext> Orbit<C> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn move_list<C: GroupContext>(ctx: &C, n: usize, options: &SearchOptions<C::Element>) -> Vec<Move<C::Element>> {
    let mut moves = Vec::new();
    for index in 1..n {
        for direction in [Direction::Forward, Direction::Inverse] {
            moves.push(Move::Hurwitz { index, direction });
        }
    }
    if options.allow_conjugation {
        let conjugators = options.conjugators.clone().unwrap_or_else(|| ctx.generators());
        for c in conjugators {
            let inv = ctx.invert(&c);
            moves.push(Move::Conjugate { by: c });
            moves.push(Move::Conjugate { by: inv });
        }
    }
    if options.allow_rotation && n > 1 {
        moves.push(Move::Rotate {
            direction: Direction::Forward,
        });
        moves.push(Move::Rotate {
            direction: Direction::Inverse,
        });
    }
    moves
}

type Keys<C> = Vec<<C as GroupContext>::Key>;

struct Side<C: GroupContext> {
    /// key -> (parent key, move from parent); roots have no parent.
    visited: HashMap<Keys<C>, Option<(Keys<C>, usize)>>,
    frontier: Vec<(Keys<C>, Factorization<C>)>,
}

impl<C: GroupContext> Side<C> {
    fn new(root: Factorization<C>) -> Self {
        let key = root.keys();
        let mut visited = HashMap::new();
        visited.insert(key.clone(), None);
        Side {
            visited,
            frontier: vec![(key, root)],
        }
    }

    /// Move indices leading from the root to `key`.
    fn path_to(&self, key: &Keys<C>) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = key;
        while let Some(Some((parent, mv))) = self.visited.get(cur) {
            path.push(*mv);
            cur = parent;
        }
        path.reverse();
        path
    }
}

type Children<C> = Vec<(Keys<C>, Factorization<C>, usize)>;

/// Expands `nodes` in parallel; the result keeps frontier and move order.
fn expand<C: GroupContext>(nodes: &[(Keys<C>, Factorization<C>)], moves: &[Move<C::Element>]) -> Vec<Children<C>> {
    nodes
        .par_iter()
        .map(|(_, f)| {
            moves
                .iter()
                .enumerate()
                .filter_map(|(i, mv)| f.apply(mv).ok().map(|g| (g.keys(), g, i)))
                .collect()
        })
        .collect()
}

/// Runs one level of breadth-first expansion on `side`, returning a key
/// seen by `other` if one is reached.
fn step<C: GroupContext>(
    side: &mut Side<C>,
    other: Option<&Side<C>>,
    moves: &[Move<C::Element>],
    remaining: usize,
    explored: &mut usize,
) -> Option<Keys<C>> {
    let take = side.frontier.len().min(remaining);
    let current: Vec<_> = side.frontier.drain(..take).collect();
    let rest = std::mem::take(&mut side.frontier);
    *explored += current.len();
    let mut next = Vec::new();
    let mut meet = None;
    for ((parent, _), children) in current.iter().zip(expand(&current, moves)) {
        for (key, g, mv) in children {
            if side.visited.contains_key(&key) {
                continue;
            }
            side.visited.insert(key.clone(), Some((parent.clone(), mv)));
            if meet.is_none() && other.is_some_and(|o| o.visited.contains_key(&key)) {
                meet = Some(key.clone());
            }
            next.push((key, g));
        }
    }
    // nodes left unexpanded by the budget stay ahead of the new level
    side.frontier = rest;
    side.frontier.extend(next);
    meet
}

fn precheck<C: GroupContext>(
    f1: &Factorization<C>,
    f2: &Factorization<C>,
    options: &SearchOptions<C::Element>,
) -> Result<Option<Witness>> {
    let ctx = f1.context();
    let id = ctx.identity();
    let mut modes = vec![InvariantMode::Length];
    if !options.allow_conjugation && !options.allow_rotation && ctx.exact_keys() {
        modes.push(InvariantMode::ProductKey);
    }
    if ctx.class_label(&id).is_some() {
        modes.push(InvariantMode::QuotientClasses);
    }
    if ctx.abelian_label(&id).is_some() {
        modes.push(InvariantMode::AbelianImage);
    }
    let a = invariants(f1, &modes)?;
    let b = invariants(f2, &modes)?;
    for ((name, x), (_, y)) in a.entries.iter().zip(&b.entries) {
        if x != y {
            return Ok(Some(Witness {
                invariant: name.clone(),
                left: x.to_string(),
                right: y.to_string(),
            }));
        }
    }
    Ok(None)
}

/// Decides, within a node budget, whether `f1` can be carried to `f2` by the
/// moves allowed in `options`.
///
/// Preserved invariants are compared first. The search itself runs
/// breadth-first from both ends, always expanding the smaller frontier.
/// An emptied frontier proves inequivalence only for contexts with exact keys.
pub fn hurwitz_equivalent<C: GroupContext>(
    f1: &Factorization<C>,
    f2: &Factorization<C>,
    options: &SearchOptions<C::Element>,
) -> Result<Verdict<C::Element>> {
    if options.budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if f1.context() != f2.context() {
        return Err(Error::ContextMismatch);
    }
    if let Some(w) = precheck(f1, f2, options)? {
        return Ok(Verdict::Inequivalent(w));
    }
    let ctx = f1.context();
    let moves = move_list(ctx, f1.len(), options);
    let mut fwd = Side::new(f1.clone());
    let mut bwd = Side::new(f2.clone());
    let mut explored = 0;

    let root2 = f2.keys();
    if fwd.visited.contains_key(&root2) {
        return Ok(Verdict::Equivalent(Certificate {
            moves: Vec::new(),
            explored,
        }));
    }

    let meet = loop {
        if fwd.frontier.is_empty() || bwd.frontier.is_empty() {
            if ctx.exact_keys() {
                let size = |s: &Side<C>| s.visited.len();
                return Ok(Verdict::Inequivalent(Witness {
                    invariant: "orbit-exhaustion".into(),
                    left: format!("orbit of size {}", size(&fwd)),
                    right: format!("orbit of size {}", size(&bwd)),
                }));
            }
            return Ok(Verdict::Unknown { explored });
        }
        let remaining = options.budget - explored;
        if remaining == 0 {
            return Ok(Verdict::Unknown { explored });
        }
        let found = if fwd.frontier.len() <= bwd.frontier.len() {
            step(&mut fwd, Some(&bwd), &moves, remaining, &mut explored)
        } else {
            step(&mut bwd, Some(&fwd), &moves, remaining, &mut explored)
        };
        if let Some(key) = found {
            break key;
        }
    };

    let mut certificate: Vec<Move<C::Element>> = fwd.path_to(&meet).into_iter().map(|i| moves[i].clone()).collect();
    let back = bwd.path_to(&meet);
    for i in back.into_iter().rev() {
        certificate.push(f1.inverse_move(&moves[i]));
    }
    Ok(Verdict::Equivalent(Certificate {
        moves: certificate,
        explored,
    }))
}

/// Breadth-first enumeration of everything reachable from `f`.
pub fn orbit_enumerate<C: GroupContext>(f: &Factorization<C>, options: &SearchOptions<C::Element>) -> Result<Orbit<C>> {
    if options.budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let moves = move_list(f.context(), f.len(), options);
    let mut side = Side::new(f.clone());
    let mut members = vec![f.clone()];
    let mut explored = 0;
    while !side.frontier.is_empty() && explored < options.budget {
        let before = side.frontier.len();
        let remaining = options.budget - explored;
        let expanded = before.min(remaining);
        step(&mut side, None, &moves, remaining, &mut explored);
        members.extend(side.frontier[before - expanded..].iter().map(|(_, g)| g.clone()));
    }
    Ok(Orbit {
        members,
        exhausted: side.frontier.is_empty(),
        explored,
    })
}
