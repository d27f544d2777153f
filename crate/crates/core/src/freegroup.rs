//! Reduced words in finitely generated free groups and finite presentations.
//!
//! Generators are 1-based: the free group on `γ_1, …, γ_k` uses indices
//! `1..=k`. Words are kept freely reduced at all times, so structural
//! equality of [`FreeWord`]s is equality in the free group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub generator: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: u32, inverse: bool) -> Self {
        debug_assert!(generator > 0, "generator indices are 1-based");
        Letter { generator, inverse }
    }

    pub fn pos(generator: u32) -> Self {
        Letter::new(generator, false)
    }

    pub fn neg(generator: u32) -> Self {
        Letter::new(generator, true)
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Push `letter` onto a freely reduced stack, cancelling against the top.
pub(crate) fn push_reduced(stack: &mut Vec<Letter>, letter: Letter) {
    match stack.last() {
        Some(&top) if top.cancels(letter) => {
            stack.pop();
        }
        _ => stack.push(letter),
    }
}

/// Single stack pass; the result is the unique freely reduced representative.
pub(crate) fn reduce_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Vec<Letter> {
    let mut stack = Vec::new();
    for l in letters {
        push_reduced(&mut stack, l);
    }
    stack
}

/// Element of a free group, stored as a freely reduced letter sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(index: u32) -> Self {
        FreeWord {
            letters: vec![Letter::pos(index)],
        }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        FreeWord {
            letters: reduce_letters(letters),
        }
    }

    /// Builds a word from signed indices: `3` is `γ_3`, `-3` is `γ_3^{-1}`.
    pub fn from_signed(indices: &[i32]) -> Self {
        FreeWord::reduce(indices.iter().map(|&i| {
            assert!(i != 0, "generator index 0 is not valid");
            Letter::new(i.unsigned_abs(), i < 0)
        }))
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring in the word, 0 for the identity.
    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|l| l.generator).max().unwrap_or(0)
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        FreeWord { letters }
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `b⁻¹ · self · b`.
    pub fn conjugate(&self, by: &FreeWord) -> FreeWord {
        by.invert().multiply(self).multiply(by)
    }

    pub fn pow(&self, exponent: i64) -> FreeWord {
        let base = if exponent < 0 { self.invert() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..exponent.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Signed occurrence count of every generator `1..=rank`.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut sums = vec![0; rank];
        for l in &self.letters {
            if let Some(s) = sums.get_mut(l.generator as usize - 1) {
                *s += l.sign();
            }
        }
        sums
    }

    /// Cyclic reduction: strips `x … x⁻¹` pairs from the two ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let mut start = 0;
        let mut end = l.len();
        while end - start >= 2 && l[start].cancels(l[end - 1]) {
            start += 1;
            end -= 1;
        }
        FreeWord {
            letters: l[start..end].to_vec(),
        }
    }

    /// Substitutes `images[k - 1]` for every occurrence of `γ_k` (and its
    /// inverse for `γ_k⁻¹`), then reduces.
    pub fn apply_endomorphism(&self, images: &[FreeWord]) -> Result<FreeWord> {
        let mut out = Vec::new();
        for l in &self.letters {
            let image = images
                .get(l.generator as usize - 1)
                .ok_or(Error::MissingImage(l.generator))?;
            if l.inverse {
                for &m in image.letters.iter().rev() {
                    push_reduced(&mut out, m.inv());
                }
            } else {
                for &m in &image.letters {
                    push_reduced(&mut out, m);
                }
            }
        }
        Ok(FreeWord { letters: out })
    }

    /// Renders with the given generator prefix, `e` for the identity.
    pub fn to_string_with(&self, prefix: char) -> String {
        format_letters(&self.letters, prefix)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with('g'))
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(FreeWord::reduce(parse_letters(s, 'g', None)?))
    }
}

pub(crate) fn format_letters(letters: &[Letter], prefix: char) -> String {
    if letters.is_empty() {
        return "e".to_string();
    }
    let mut out = String::new();
    for (k, l) in letters.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        out.push(prefix);
        out.push_str(&l.generator.to_string());
        if l.inverse {
            out.push_str("^-1");
        }
    }
    out
}

/// Parses whitespace-separated `<prefix><k>` / `<prefix><k>^-1` tokens. The
/// whole string `e` (or an empty string) is the identity. When `max` is set,
/// indices above it are rejected.
pub(crate) fn parse_letters(text: &str, prefix: char, max: Option<u32>) -> Result<Vec<Letter>> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "e" {
        return Ok(Vec::new());
    }
    let mut letters = Vec::new();
    for (column, token) in tokens_with_columns(text) {
        letters.push(parse_token(token, column, prefix, max)?);
    }
    Ok(letters)
}

/// Tokens with their 1-based character column in `text`.
pub(crate) fn tokens_with_columns(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (pos, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..pos]));
            }
        } else if start.is_none() {
            start = Some(pos);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
        .map(move |(byte, tok)| (text[..byte].chars().count() + 1, tok))
}

pub(crate) fn parse_token(token: &str, column: usize, prefix: char, max: Option<u32>) -> Result<Letter> {
    let body = token
        .strip_prefix(prefix)
        .ok_or_else(|| Error::parse(token, column, format!("expected `{prefix}<index>`")))?;
    let (digits, inverse) = match body.split_once('^') {
        None => (body, false),
        Some((d, "-1")) => (d, true),
        Some((d, "1")) => (d, false),
        Some(_) => return Err(Error::parse(token, column, "only exponents ^1 and ^-1 are allowed")),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            token,
            column,
            "generator index must be a positive integer",
        ));
    }
    let index: u32 = digits
        .parse()
        .map_err(|_| Error::parse(token, column, "generator index too large"))?;
    if index == 0 {
        return Err(Error::parse(token, column, "generator indices start at 1"));
    }
    if let Some(max) = max {
        if index > max {
            return Err(Error::parse(token, column, format!("generator index exceeds {max}")));
        }
    }
    Ok(Letter::new(index, inverse))
}

/// Finite presentation `⟨γ_1, …, γ_n | r_1, …, r_m⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<FreeWord>,
}

impl GroupPresentation {
    /// Relators must only use generators `1..=generators`.
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Result<Self> {
        for r in &relators {
            if r.max_generator() as usize > generators {
                return Err(Error::InvalidArgument(format!(
                    "relator `{r}` uses a generator beyond {generators}"
                )));
            }
        }
        Ok(GroupPresentation { generators, relators })
    }

    pub fn free(generators: usize) -> Self {
        GroupPresentation {
            generators,
            relators: Vec::new(),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// Sum of relator lengths.
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(FreeWord::len).sum()
    }

    /// Stable text form: `gens: n`, then one relator per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("gens: {}\n", self.generators);
        for r in &self.relators {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

/// `⟨γ_1, …, γ_k | γ_1 γ_2 ⋯ γ_k⟩`, the sphere with `k` punctures.
pub fn punctured_sphere_presentation(k: usize) -> GroupPresentation {
    assert!(k >= 1, "a punctured sphere needs at least one puncture");
    let product = FreeWord::reduce((1..=k as u32).map(Letter::pos));
    GroupPresentation {
        generators: k,
        relators: vec![product],
    }
}

/// Closed orientable surface of genus `g`. Generator `2i - 1` is `α_i` and
/// `2i` is `β_i`; the relator is `∏ α_i β_i α_i⁻¹ β_i⁻¹`.
pub fn surface_presentation(g: usize) -> GroupPresentation {
    if g == 0 {
        return GroupPresentation::free(0);
    }
    let mut letters = Vec::with_capacity(4 * g);
    for i in 0..g as u32 {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        letters.extend([Letter::pos(a), Letter::pos(b), Letter::neg(a), Letter::neg(b)]);
    }
    GroupPresentation {
        generators: 2 * g,
        relators: vec![FreeWord::reduce(letters)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(FreeWord::from_signed(&[1, -1]).is_identity());
        assert_eq!(FreeWord::from_signed(&[1, 2, -2, 3]), FreeWord::from_signed(&[1, 3]));
        let fixed = FreeWord::from_signed(&[-2, 1, 2]);
        assert_eq!(fixed.letters().len(), 3);
        assert_eq!(FreeWord::reduce(fixed.letters().iter().copied()), fixed);
    }

    #[test]
    fn conjugation_and_inverse() {
        let g1 = FreeWord::generator(1);
        let g2 = FreeWord::generator(2);
        assert_eq!(g1.conjugate(&FreeWord::identity()), g1);
        assert!(g1.multiply(&g1.invert()).is_identity());
        assert_eq!(g1.conjugate(&g2), w("g2^-1 g1 g2"));
    }

    #[test]
    fn endomorphism_examples() {
        let images = vec![w("g2"), w("g2^-1 g1 g2")];
        assert_eq!(w("g1 g2").apply_endomorphism(&images).unwrap(), w("g1 g2"));
        assert_eq!(w("g2").apply_endomorphism(&images).unwrap(), w("g2^-1 g1 g2"));
        let id = vec![w("g1"), w("g2"), w("g3")];
        assert_eq!(w("g3 g1^-1 g2").apply_endomorphism(&id).unwrap(), w("g3 g1^-1 g2"));
        assert_eq!(w("g3").apply_endomorphism(&images), Err(Error::MissingImage(3)));
    }

    #[test]
    fn presentations() {
        let p = punctured_sphere_presentation(3);
        assert_eq!(p.generators(), 3);
        assert_eq!(p.relators(), &[w("g1 g2 g3")]);
        let s = surface_presentation(1);
        assert_eq!(s.generators(), 2);
        assert_eq!(s.relators(), &[w("g1 g2 g1^-1 g2^-1")]);
        let s0 = surface_presentation(0);
        assert_eq!(s0.generators(), 0);
        assert!(s0.relators().is_empty());
        assert!(GroupPresentation::new(1, vec![w("g2")]).is_err());
    }

    #[test]
    fn text_syntax() {
        assert_eq!(w("e"), FreeWord::identity());
        assert_eq!(w(""), FreeWord::identity());
        assert_eq!(w("g1 g2^-1").to_string(), "g1 g2^-1");
        assert_eq!(FreeWord::identity().to_string(), "e");
        match "g1 g0".parse::<FreeWord>() {
            Err(Error::Parse { token, column, .. }) => {
                assert_eq!(token, "g0");
                assert_eq!(column, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!("g1^2".parse::<FreeWord>().is_err());
        assert!("s1".parse::<FreeWord>().is_err());
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(w("g2 g1 g3 g2^-1").cyclically_reduced(), w("g1 g3"));
        assert_eq!(w("g1 g2 g1^-1").cyclically_reduced(), w("g2"));
    }

    fn raw_letters() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec((1u32..4, any::<bool>()), 0..24)
            .prop_map(|v| v.into_iter().map(|(g, i)| Letter::new(g, i)).collect())
    }

    fn word() -> impl Strategy<Value = FreeWord> {
        raw_letters().prop_map(FreeWord::reduce)
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(raw in raw_letters()) {
            let once = FreeWord::reduce(raw);
            let twice = FreeWord::reduce(once.letters().iter().copied());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn group_axioms(a in word(), b in word(), c in word()) {
            prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
            prop_assert!(a.multiply(&a.invert()).is_identity());
            prop_assert_eq!(a.multiply(&FreeWord::identity()), a.clone());
            prop_assert_eq!(a.conjugate(&b).conjugate(&b.invert()), a);
        }

        #[test]
        fn endomorphism_is_homomorphic(a in word(), b in word(),
                                      imgs in prop::collection::vec(word(), 3)) {
            let lhs = a.multiply(&b).apply_endomorphism(&imgs).unwrap();
            let rhs = a.apply_endomorphism(&imgs).unwrap()
                .multiply(&b.apply_endomorphism(&imgs).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
