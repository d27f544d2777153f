//! Factorizations `g_1 ∘ g_2 ∘ ⋯ ∘ g_n` of group elements and the moves
//! acting on them.
//!
//! The forward Hurwitz move at position `i` replaces `(g_i, g_{i+1})` by
//! `(g_{i+1}, g_{i+1}⁻¹ g_i g_{i+1})`; the inverse move replaces it by
//! `(g_i g_{i+1} g_i⁻¹, g_i)`. Both preserve the product. Simultaneous
//! conjugation by `b` sends every factor `g` to `b⁻¹ g b`.

mod contexts;
mod cuspidal;
mod invariants;
mod search;

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

pub use contexts::{BraidGroup, FreeGroup, McgGroup, SymmetricGroup};
pub use cuspidal::{CuspidalFactor, CuspidalFactorSpec, CuspidalFactorization};
pub use invariants::{invariants, InvariantMode, InvariantRecord, InvariantValue};
pub use search::{hurwitz_equivalent, orbit_enumerate, Certificate, Orbit, SearchOptions, Verdict, Witness};

/// A group in which factorizations live.
///
/// `key` must be a canonical encoding: equal keys imply equal elements. When
/// [`exact_keys`](GroupContext::exact_keys) is true the converse also holds,
/// and only then may the search conclude inequivalence from an exhausted orbit.
pub trait GroupContext: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Element: Clone + fmt::Debug + Send + Sync;
    type Key: Clone + Eq + Hash + Ord + fmt::Debug + fmt::Display + Send + Sync;

    /// Descriptor used in files, e.g. `symmetric:3`.
    fn descriptor(&self) -> String;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn invert(&self, a: &Self::Element) -> Self::Element;
    fn key(&self, a: &Self::Element) -> Self::Key;

    fn equal(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.key(a) == self.key(b)
    }

    /// `b⁻¹ a b`.
    fn conjugate(&self, a: &Self::Element, by: &Self::Element) -> Self::Element {
        self.multiply(&self.multiply(&self.invert(by), a), by)
    }

    /// Whether distinct keys are guaranteed to be distinct elements.
    fn exact_keys(&self) -> bool {
        true
    }

    /// Default conjugator set for searches with simultaneous conjugation.
    fn generators(&self) -> Vec<Self::Element>;

    fn format(&self, a: &Self::Element) -> String;
    fn parse(&self, text: &str) -> Result<Self::Element>;

    /// Label of the conjugacy class of the image in a computable quotient.
    fn class_label(&self, _a: &Self::Element) -> Option<String> {
        None
    }

    /// Image in an abelian quotient.
    fn abelian_label(&self, _a: &Self::Element) -> Option<String> {
        None
    }

    /// The element as a braid word, for braid-group contexts.
    fn braid_word(&self, _a: &Self::Element) -> Option<BraidWord> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        }
    }
}

/// A single elementary move on factorizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move<E> {
    /// Hurwitz move at the 1-based position `index` (acting on `index, index + 1`).
    Hurwitz { index: usize, direction: Direction },
    /// Simultaneous conjugation of every factor by `by`.
    Conjugate { by: E },
    /// Cyclic rotation: forward moves the first factor to the end.
    Rotate { direction: Direction },
}

impl<E> Move<E> {
    pub fn map<F, T>(&self, f: F) -> Move<T>
    where
        F: FnOnce(&E) -> T,
    {
        match self {
            Move::Hurwitz { index, direction } => Move::Hurwitz {
                index: *index,
                direction: *direction,
            },
            Move::Conjugate { by } => Move::Conjugate { by: f(by) },
            Move::Rotate { direction } => Move::Rotate { direction: *direction },
        }
    }
}

/// Ordered tuple of elements of a group context, with its product.
#[derive(Debug, Clone)]
pub struct Factorization<C: GroupContext> {
    context: C,
    factors: Vec<C::Element>,
    product: C::Element,
}

impl<C: GroupContext> Factorization<C> {
    pub fn new(context: C, factors: Vec<C::Element>) -> Self {
        let product = factors
            .iter()
            .fold(context.identity(), |acc, g| context.multiply(&acc, g));
        Factorization {
            context,
            factors,
            product,
        }
    }

    /// Parses each factor with the context's word syntax.
    pub fn parse<S: AsRef<str>>(context: C, factors: &[S]) -> Result<Self> {
        let elems = factors
            .iter()
            .map(|s| context.parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Factorization::new(context, elems))
    }

    pub fn context(&self) -> &C {
        &self.context
    }

    pub fn factors(&self) -> &[C::Element] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Left-to-right product `g_1 g_2 ⋯ g_n`; the identity when empty.
    pub fn product(&self) -> &C::Element {
        &self.product
    }

    pub fn keys(&self) -> Vec<C::Key> {
        self.factors.iter().map(|g| self.context.key(g)).collect()
    }

    /// Exact equality of factor tuples (through canonical keys).
    pub fn same_factors(&self, other: &Self) -> bool {
        self.context == other.context && self.keys() == other.keys()
    }

    pub fn formatted_factors(&self) -> Vec<String> {
        self.factors.iter().map(|g| self.context.format(g)).collect()
    }

    pub fn hurwitz_move(&self, index: usize, direction: Direction) -> Result<Self> {
        let n = self.factors.len();
        if index == 0 || index >= n {
            return Err(Error::IndexOutOfRange {
                index,
                max: n.saturating_sub(1),
            });
        }
        let mut factors = self.factors.clone();
        let (a, b) = (&self.factors[index - 1], &self.factors[index]);
        let (x, y) = hurwitz_pair(&self.context, a, b, direction);
        factors[index - 1] = x;
        factors[index] = y;
        Ok(Factorization {
            context: self.context.clone(),
            factors,
            product: self.product.clone(),
        })
    }

    /// Every factor `g` becomes `b⁻¹ g b`; the product becomes `b⁻¹ (∏ g) b`.
    pub fn simultaneous_conjugate(&self, by: &C::Element) -> Self {
        let ctx = &self.context;
        Factorization {
            context: ctx.clone(),
            factors: self.factors.iter().map(|g| ctx.conjugate(g, by)).collect(),
            product: ctx.conjugate(&self.product, by),
        }
    }

    /// `τ_1 ∘ ⋯ ∘ τ_m ∘ (τ'_1)_ψ ∘ ⋯ ∘ (τ'_r)_ψ`, a factorization of `φ (φ')_ψ`.
    pub fn compose_conjugated(&self, other: &Self, psi: &C::Element) -> Result<Self> {
        if self.context != other.context {
            return Err(Error::ContextMismatch);
        }
        let conj = other.simultaneous_conjugate(psi);
        let mut factors = self.factors.clone();
        factors.extend(conj.factors);
        Ok(Factorization {
            context: self.context.clone(),
            product: self.context.multiply(&self.product, &conj.product),
            factors,
        })
    }

    /// Cyclic rotation of the tuple. Forward sends `(g_1, …, g_n)` to
    /// `(g_2, …, g_n, g_1)`, a factorization of `g_1⁻¹ (∏ g) g_1`.
    pub fn rotate(&self, direction: Direction) -> Self {
        let mut factors = self.factors.clone();
        if factors.is_empty() {
            return self.clone();
        }
        let by = match direction {
            Direction::Forward => {
                factors.rotate_left(1);
                self.factors[0].clone()
            }
            Direction::Inverse => {
                factors.rotate_right(1);
                self.context.invert(&self.factors[self.factors.len() - 1])
            }
        };
        Factorization {
            context: self.context.clone(),
            product: self.context.conjugate(&self.product, &by),
            factors,
        }
    }

    pub fn apply(&self, mv: &Move<C::Element>) -> Result<Self> {
        match mv {
            Move::Hurwitz { index, direction } => self.hurwitz_move(*index, *direction),
            Move::Conjugate { by } => Ok(self.simultaneous_conjugate(by)),
            Move::Rotate { direction } => Ok(self.rotate(*direction)),
        }
    }

    pub fn replay(&self, moves: &[Move<C::Element>]) -> Result<Self> {
        moves.iter().try_fold(self.clone(), |f, mv| f.apply(mv))
    }

    /// The inverse of `mv`.
    pub fn inverse_move(&self, mv: &Move<C::Element>) -> Move<C::Element> {
        match mv {
            Move::Hurwitz { index, direction } => Move::Hurwitz {
                index: *index,
                direction: direction.flip(),
            },
            Move::Conjugate { by } => Move::Conjugate {
                by: self.context.invert(by),
            },
            Move::Rotate { direction } => Move::Rotate {
                direction: direction.flip(),
            },
        }
    }
}

pub(crate) fn hurwitz_pair<C: GroupContext>(
    ctx: &C,
    a: &C::Element,
    b: &C::Element,
    direction: Direction,
) -> (C::Element, C::Element) {
    match direction {
        Direction::Forward => (b.clone(), ctx.conjugate(a, b)),
        Direction::Inverse => (ctx.conjugate(b, &ctx.invert(a)), a.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::full_twist;
    use crate::perm::Permutation;
    use proptest::prelude::*;

    fn s3(factors: &[&str]) -> Factorization<SymmetricGroup> {
        Factorization::parse(SymmetricGroup::new(3), factors).unwrap()
    }

    #[test]
    fn products() {
        let empty = s3(&[]);
        assert!(empty.product().is_identity());
        assert!(s3(&["(1 2)", "(1 2)"]).product().is_identity());
        let b2 = Factorization::parse(BraidGroup::new(2), &["s1", "s1"]).unwrap();
        assert!(b2.product().equals(&full_twist(2).unwrap()).unwrap());
    }

    #[test]
    fn hurwitz_move_examples() {
        let f = s3(&["(1 2)", "(2 3)"]);
        let g = f.hurwitz_move(1, Direction::Forward).unwrap();
        assert_eq!(g.formatted_factors(), vec!["(2 3)", "(1 3)"]);
        assert_eq!(g.product(), f.product());
        let back = g.hurwitz_move(1, Direction::Inverse).unwrap();
        assert!(back.same_factors(&f));
        assert!(f.hurwitz_move(2, Direction::Forward).is_err());
        assert!(f.hurwitz_move(0, Direction::Forward).is_err());

        let free = Factorization::parse(FreeGroup::new(2), &["g1", "g2"]).unwrap();
        let moved = free.hurwitz_move(1, Direction::Forward).unwrap();
        assert_eq!(moved.formatted_factors(), vec!["g2", "g2^-1 g1 g2"]);
    }

    #[test]
    fn simultaneous_conjugation_examples() {
        let ctx = SymmetricGroup::new(3);
        let f = s3(&["(1 2)", "(1 2)"]);
        assert!(f.simultaneous_conjugate(&ctx.identity()).same_factors(&f));
        let b = Permutation::parse_cycles("(1 3)", 3).unwrap();
        assert_eq!(f.simultaneous_conjugate(&b).formatted_factors(), vec!["(2 3)", "(2 3)"]);
    }

    #[test]
    fn compose_conjugated_examples() {
        let ctx = SymmetricGroup::new(3);
        let f = s3(&["(1 2)"]);
        let g = s3(&["(2 3)", "(1 3)"]);
        let plain = f.compose_conjugated(&g, &ctx.identity()).unwrap();
        assert_eq!(plain.formatted_factors(), vec!["(1 2)", "(2 3)", "(1 3)"]);
        let other = Factorization::parse(SymmetricGroup::new(4), &["(1 2)"]).unwrap();
        assert_eq!(
            f.compose_conjugated(&other, &other.context().identity()).unwrap_err(),
            Error::ContextMismatch
        );
        // ψ commuting with φ' gives a factorization of φ φ'
        let phi2 = s3(&["(1 2)", "(1 2)", "(1 3)"]);
        let psi = Permutation::parse_cycles("(1 3)", 3).unwrap();
        assert_eq!(ctx.multiply(phi2.product(), &psi), ctx.multiply(&psi, phi2.product()));
        let c = f.compose_conjugated(&phi2, &psi).unwrap();
        assert_eq!(c.product(), &ctx.multiply(f.product(), phi2.product()));
    }

    #[test]
    fn rotation_conjugates_product() {
        let f = s3(&["(1 2)", "(2 3)", "(1 2)"]);
        let r = f.rotate(Direction::Forward);
        assert_eq!(r.formatted_factors(), vec!["(2 3)", "(1 2)", "(1 2)"]);
        assert!(r.rotate(Direction::Inverse).same_factors(&f));
        let ctx = f.context();
        let expect = ctx.conjugate(f.product(), &f.factors()[0]);
        assert_eq!(r.product(), &expect);
    }

    fn s4_factors() -> impl Strategy<Value = Vec<Permutation>> {
        let perm = prop::collection::vec(0usize..24, 1).prop_map(|v| nth_permutation(4, v[0]));
        prop::collection::vec(perm, 0..=5)
    }

    fn nth_permutation(n: usize, mut k: usize) -> Permutation {
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        for i in (1..=n).rev() {
            let f: usize = (1..i).product();
            out.push(pool.remove(k / f));
            k %= f;
        }
        Permutation::from_images(&out).unwrap()
    }

    fn b3_factors() -> impl Strategy<Value = Vec<BraidWord>> {
        let word = prop::collection::vec(prop_oneof![Just(1), Just(-1), Just(2), Just(-2)], 0..4)
            .prop_map(|v| BraidWord::from_signed(3, &v).unwrap());
        prop::collection::vec(word, 0..=5)
    }

    fn check_move_laws<C: GroupContext>(f: &Factorization<C>) -> std::result::Result<(), TestCaseError> {
        let ctx = f.context();
        for i in 1..f.len() {
            for d in [Direction::Forward, Direction::Inverse] {
                let g = f.hurwitz_move(i, d).unwrap();
                prop_assert!(ctx.equal(g.product(), f.product()));
                let recomputed = Factorization::new(ctx.clone(), g.factors().to_vec());
                prop_assert!(ctx.equal(recomputed.product(), f.product()));
                prop_assert!(g.hurwitz_move(i, d.flip()).unwrap().same_factors(f));
            }
            for j in i + 2..f.len() {
                let ij = f
                    .hurwitz_move(i, Direction::Forward)
                    .unwrap()
                    .hurwitz_move(j, Direction::Forward)
                    .unwrap();
                let ji = f
                    .hurwitz_move(j, Direction::Forward)
                    .unwrap()
                    .hurwitz_move(i, Direction::Forward)
                    .unwrap();
                prop_assert!(ij.same_factors(&ji));
            }
        }
        Ok(())
    }

    proptest! {
        #[test]
        fn move_laws_s4(factors in s4_factors()) {
            check_move_laws(&Factorization::new(SymmetricGroup::new(4), factors))?;
        }

        #[test]
        fn move_laws_b3(factors in b3_factors()) {
            check_move_laws(&Factorization::new(BraidGroup::new(3), factors))?;
        }

        #[test]
        fn conjugation_product_law(factors in s4_factors(), b in 0usize..24) {
            let ctx = SymmetricGroup::new(4);
            let f = Factorization::new(ctx.clone(), factors);
            let b = nth_permutation(4, b);
            let g = f.simultaneous_conjugate(&b);
            let recomputed = Factorization::new(ctx.clone(), g.factors().to_vec());
            prop_assert_eq!(recomputed.product(), &ctx.conjugate(f.product(), &b));
        }

        #[test]
        fn compose_conjugated_product_law(a in s4_factors(), c in s4_factors(), psi in 0usize..24) {
            let ctx = SymmetricGroup::new(4);
            let f1 = Factorization::new(ctx.clone(), a);
            let f2 = Factorization::new(ctx.clone(), c);
            let psi = nth_permutation(4, psi);
            let r = f1.compose_conjugated(&f2, &psi).unwrap();
            let recomputed = Factorization::new(ctx.clone(), r.factors().to_vec());
            let expect = ctx.multiply(f1.product(), &ctx.conjugate(f2.product(), &psi));
            prop_assert_eq!(recomputed.product(), &expect);
            prop_assert_eq!(r.product(), &expect);
        }
    }
}
