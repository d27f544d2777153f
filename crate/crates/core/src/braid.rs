//! Artin braid groups.
//!
//! Equality is decided through the faithful Artin action of `B_n` on the
//! free group `F_n = ⟨γ_1, …, γ_n⟩`:
//!
//! ```text
//! σ_i(γ_i)     = γ_{i+1}
//! σ_i(γ_{i+1}) = γ_{i+1}⁻¹ γ_i γ_{i+1}
//! σ_i(γ_j)     = γ_j            (j ≠ i, i+1)
//! ```
//!
//! Letters of a braid word act left to right: in `σ_1 σ_2` the generator
//! `σ_1` acts first, so `action(a·b) = action(a).then(action(b))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freegroup::{format_letters, parse_letters, push_reduced, reduce_letters, FreeWord, Letter};
use crate::perm::Permutation;

/// Word in the Artin generators `σ_1, …, σ_{n-1}` of `B_n`, freely reduced.
///
/// Free reduction is only a storage normalization; two different words may
/// denote the same braid. Use [`BraidWord::equals`] for equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Builds a braid from letters; every generator index must be `< strands`.
    pub fn new<I: IntoIterator<Item = Letter>>(strands: usize, letters: I) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        let letters = reduce_letters(letters);
        if let Some(bad) = letters.iter().find(|l| l.generator as usize >= strands) {
            return Err(Error::IndexOutOfRange {
                index: bad.generator as usize,
                max: strands - 1,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Signed generator indices: `2` is `σ_2`, `-2` is `σ_2⁻¹`.
    pub fn from_signed(strands: usize, indices: &[i32]) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::IndexOutOfRange {
                index: 0,
                max: strands.saturating_sub(1),
            });
        }
        BraidWord::new(strands, indices.iter().map(|&i| Letter::new(i.unsigned_abs(), i < 0)))
    }

    /// `σ_i` in `B_n`.
    pub fn generator(strands: usize, i: u32) -> Result<Self> {
        BraidWord::new(strands, [Letter::pos(i)])
    }

    /// Parses the body of a braid word (`s1 s2^-1`, `e`).
    pub fn parse_body(strands: usize, text: &str) -> Result<Self> {
        let letters = parse_letters(text, 's', Some(strands.saturating_sub(1) as u32))?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the exponents; the abelianization `B_n → Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                expected: self.strands,
                found: other.strands,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `b⁻¹ · self · b`.
    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord> {
        by.invert().multiply(self)?.multiply(by)
    }

    pub fn pow(&self, exponent: i64) -> BraidWord {
        let base = if exponent < 0 { self.invert() } else { self.clone() };
        let mut out = BraidWord::identity(self.strands);
        for _ in 0..exponent.unsigned_abs() {
            out = out.multiply(&base).expect("same strand count");
        }
        out
    }

    /// Images of `γ_1, …, γ_n` under the braid.
    ///
    /// Letters are folded from the right so each step rewrites only the two
    /// images touched by one generator.
    pub fn artin_action(&self) -> BraidAction {
        let mut images: Vec<FreeWord> = (1..=self.strands as u32).map(FreeWord::generator).collect();
        for l in self.letters.iter().rev() {
            let i = l.generator as usize - 1;
            let (gi, gj) = (images[i].clone(), images[i + 1].clone());
            if l.inverse {
                // σ_i⁻¹: γ_i ↦ γ_i γ_{i+1} γ_i⁻¹, γ_{i+1} ↦ γ_i
                images[i] = gi.multiply(&gj).multiply(&gi.invert());
                images[i + 1] = gi;
            } else {
                images[i] = gj.clone();
                images[i + 1] = gi.conjugate(&gj);
            }
        }
        BraidAction { images }
    }

    /// Exact equality through the Artin action.
    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        self.check_strands(other)?;
        Ok(self.artin_action() == other.artin_action())
    }

    /// The induced permutation of the punctures; `σ_i ↦ (i i+1)`.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            let i = l.generator as usize;
            p = p.then(&Permutation::transposition(self.strands, i, i + 1));
        }
        p
    }

    /// Body only, without the `braid n=…:` header.
    pub fn body_string(&self) -> String {
        format_letters(&self.letters, 's')
    }
}

/// `braid_equals` as a free function.
pub fn braid_equals(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.equals(b)
}

/// The full twist `Δ² = (σ_{n-1} ⋯ σ_1)^n`, generator of the center of `B_n`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("full twist needs n >= 2, got {n}")));
    }
    let round: Vec<Letter> = (1..n as u32).rev().map(Letter::pos).collect();
    BraidWord::new(n, round.iter().copied().cycle().take(n * round.len()))
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid n={}: {}", self.strands, self.body_string())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `braid n=<n>: <body>`
    fn from_str(s: &str) -> Result<Self> {
        let (header, body) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s, 1, "missing `braid n=<n>:` header"))?;
        let n = header
            .trim()
            .strip_prefix("braid")
            .and_then(|h| h.trim().strip_prefix("n="))
            .and_then(|n| n.trim().parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::parse(header.trim(), 1, "expected `braid n=<n>:`"))?;
        let offset = header.chars().count() + 1;
        BraidWord::parse_body(n, body).map_err(|e| shift_column(e, offset))
    }
}

pub(crate) fn shift_column(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { token, column, message } => Error::Parse {
            token,
            column: column + offset,
            message,
        },
        other => other,
    }
}

/// Automorphism of `F_n` given by the images of its generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidAction {
    images: Vec<FreeWord>,
}

impl BraidAction {
    pub fn identity(n: usize) -> Self {
        BraidAction {
            images: (1..=n as u32).map(FreeWord::generator).collect(),
        }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| *w == FreeWord::generator(k as u32 + 1))
    }

    /// Image of an arbitrary word.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        w.apply_endomorphism(&self.images)
    }

    /// `self` acts first, then `next`.
    pub fn then(&self, next: &BraidAction) -> BraidAction {
        BraidAction {
            images: self
                .images
                .iter()
                .map(|w| next.apply(w).expect("actions on the same free group"))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: usize, s: &str) -> BraidWord {
        BraidWord::parse_body(n, s).unwrap()
    }

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn generator_action_matches_formulas() {
        let a = b(3, "s1").artin_action();
        assert_eq!(a.images(), &[fw("g2"), fw("g2^-1 g1 g2"), fw("g3")]);
        assert!(BraidWord::identity(4).artin_action().is_identity());
    }

    #[test]
    fn inverse_generator_action() {
        let inv = b(2, "s1^-1").artin_action();
        assert_eq!(inv.images(), &[fw("g1 g2 g1^-1"), fw("g1")]);
        // oracle: composing with σ_1 in either order gives the identity
        let fwd = b(2, "s1").artin_action();
        assert!(fwd.then(&inv).is_identity());
        assert!(inv.then(&fwd).is_identity());
    }

    #[test]
    fn braid_relations() {
        assert!(b(3, "s1 s2 s1").equals(&b(3, "s2 s1 s2")).unwrap());
        assert!(b(4, "s1 s3").equals(&b(4, "s3 s1")).unwrap());
        assert!(!b(3, "s1").equals(&b(3, "s2")).unwrap());
        assert!(!b(3, "s1 s2").equals(&b(3, "s2 s1")).unwrap());
        assert!(b(3, "s1").equals(&b(4, "s1")).is_err());
    }

    #[test]
    fn permutations() {
        assert_eq!(b(3, "s1").permutation(), Permutation::transposition(3, 1, 2));
        assert!(BraidWord::identity(3).permutation().is_identity());
        // oracle: compose the 6 transpositions of (σ_2 σ_1)^3 by hand
        let mut p = Permutation::identity(3);
        for _ in 0..3 {
            p = p.then(&Permutation::transposition(3, 2, 3));
            p = p.then(&Permutation::transposition(3, 1, 2));
        }
        assert!(p.is_identity());
        assert!(full_twist(3).unwrap().permutation().is_identity());
    }

    #[test]
    fn full_twist_shape_and_center() {
        assert_eq!(full_twist(2).unwrap(), b(2, "s1 s1"));
        assert_eq!(full_twist(3).unwrap(), b(3, "s2 s1 s2 s1 s2 s1"));
        assert_eq!(full_twist(5).unwrap().len(), 20);
        assert!(full_twist(1).is_err());
        for n in 2..=6 {
            let d = full_twist(n).unwrap();
            for i in 1..n as u32 {
                let s = BraidWord::generator(n, i).unwrap();
                assert!(d.multiply(&s).unwrap().equals(&s.multiply(&d).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn text_form() {
        let w: BraidWord = "braid n=3: s1 s2 s1".parse().unwrap();
        assert_eq!(w, b(3, "s1 s2 s1"));
        assert_eq!(w.to_string(), "braid n=3: s1 s2 s1");
        assert_eq!("braid n=3: e".parse::<BraidWord>().unwrap(), BraidWord::identity(3));
        match "braid n=3: s1 s0".parse::<BraidWord>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "s0"),
            other => panic!("unexpected {other:?}"),
        }
        assert!("braid n=3: s3".parse::<BraidWord>().is_err());
        assert!("s1 s2".parse::<BraidWord>().is_err());
    }

    fn braid(n: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec((1..n as u32, any::<bool>()), 0..10)
            .prop_map(move |v| BraidWord::new(n, v.into_iter().map(|(g, i)| Letter::new(g, i))).unwrap())
    }

    proptest! {
        #[test]
        fn product_is_preserved(w in braid(5)) {
            let product = FreeWord::from_signed(&[1, 2, 3, 4, 5]);
            prop_assert_eq!(w.artin_action().apply(&product).unwrap(), product);
        }

        #[test]
        fn action_and_permutation_are_homomorphisms(a in braid(4), c in braid(4)) {
            let ac = a.multiply(&c).unwrap();
            prop_assert_eq!(ac.artin_action(), a.artin_action().then(&c.artin_action()));
            prop_assert_eq!(ac.permutation(), a.permutation().then(&c.permutation()));
        }

        #[test]
        fn inverse_cancels(a in braid(4)) {
            prop_assert!(a.multiply(&a.invert()).unwrap().artin_action().is_identity());
        }
    }
}
