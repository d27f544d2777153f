//! The hyperelliptic mapping class group `Map_g^h`.
//!
//! Generators are the Dehn twists `ξ_1, …, ξ_{2g+1}` about a chain of curves
//! (lifts of the half-twists `σ_j` of the sphere with `2g+2` punctures) and
//! the hyperelliptic involution `H`, which is central of order two.
//!
//! Word equality in `Map_g^h` is not decided here. Elements are compared only
//! through quotient representations: the symplectic action on `H_1(C_g, Z)`,
//! the permutation of the branch points, and a cyclic abelian quotient.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::braid::{shift_column, BraidWord};
use crate::error::{Error, Result};
use crate::freegroup::{format_letters, parse_token, push_reduced, reduce_letters, tokens_with_columns, Letter};
use crate::linalg::IntMatrix;
use crate::perm::Permutation;

/// Word in `ξ_1, …, ξ_{2g+1}` and `H`.
///
/// `H` commutes with everything and squares to one, so it is stored as a
/// single flag and printed at the front. The `ξ` letters are freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct McgWord {
    genus: usize,
    central: bool,
    letters: Vec<Letter>,
}

impl McgWord {
    pub fn identity(genus: usize) -> Self {
        McgWord {
            genus,
            central: false,
            letters: Vec::new(),
        }
    }

    /// The hyperelliptic involution.
    pub fn involution(genus: usize) -> Self {
        McgWord {
            genus,
            central: true,
            letters: Vec::new(),
        }
    }

    pub fn new<I: IntoIterator<Item = Letter>>(genus: usize, central: bool, letters: I) -> Result<Self> {
        let letters = reduce_letters(letters);
        let max = 2 * genus as u32 + 1;
        if let Some(bad) = letters.iter().find(|l| l.generator > max) {
            return Err(Error::IndexOutOfRange {
                index: bad.generator as usize,
                max: max as usize,
            });
        }
        Ok(McgWord {
            genus,
            central,
            letters,
        })
    }

    /// Signed twist indices; `H` is not expressible here.
    pub fn from_signed(genus: usize, indices: &[i32]) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::IndexOutOfRange {
                index: 0,
                max: 2 * genus + 1,
            });
        }
        McgWord::new(
            genus,
            false,
            indices.iter().map(|&i| Letter::new(i.unsigned_abs(), i < 0)),
        )
    }

    pub fn twist(genus: usize, i: u32) -> Result<Self> {
        McgWord::new(genus, false, [Letter::pos(i)])
    }

    /// Parses a body such as `x1 x2^-1 H`.
    pub fn parse_body(genus: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "e" {
            return Ok(McgWord::identity(genus));
        }
        let max = 2 * genus as u32 + 1;
        let mut central = false;
        let mut letters = Vec::new();
        for (column, token) in tokens_with_columns(text) {
            match token {
                "H" | "H^-1" | "H^1" => central = !central,
                _ => letters.push(parse_token(token, column, 'x', Some(max))?),
            }
        }
        McgWord::new(genus, central, letters)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn has_involution(&self) -> bool {
        self.central
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of `ξ` letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty() && !self.central
    }

    fn check_genus(&self, other: &McgWord) -> Result<()> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &McgWord) -> Result<McgWord> {
        self.check_genus(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(McgWord {
            genus: self.genus,
            central: self.central ^ other.central,
            letters,
        })
    }

    pub fn invert(&self) -> McgWord {
        McgWord {
            genus: self.genus,
            central: self.central,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `b⁻¹ · self · b`.
    pub fn conjugate(&self, by: &McgWord) -> Result<McgWord> {
        by.invert().multiply(self)?.multiply(by)
    }

    pub fn pow(&self, exponent: i64) -> McgWord {
        let base = if exponent < 0 { self.invert() } else { self.clone() };
        let mut out = McgWord::identity(self.genus);
        for _ in 0..exponent.unsigned_abs() {
            out = out.multiply(&base).expect("same genus");
        }
        out
    }

    /// Body only, without the `mcg g=…:` header.
    pub fn body_string(&self) -> String {
        match (self.central, self.letters.is_empty()) {
            (false, _) => format_letters(&self.letters, 'x'),
            (true, true) => "H".to_string(),
            (true, false) => format!("H {}", format_letters(&self.letters, 'x')),
        }
    }

    /// Image in `Sp(2g, Z)` for the given chain; word order is matrix order.
    pub fn symplectic_rep(&self, chain: &ChainCurves) -> IntMatrix {
        assert_eq!(chain.genus(), self.genus, "chain genus mismatch");
        let mut m = IntMatrix::identity(2 * self.genus);
        for l in &self.letters {
            m = &m * chain.transvection(l.generator as usize, l.inverse);
        }
        if self.central {
            m = m.neg();
        }
        m
    }

    /// Image in `S_{2g+2}`: `ξ_i ↦ (i i+1)`, `H ↦ id`.
    pub fn puncture_permutation(&self) -> Permutation {
        let n = 2 * self.genus + 2;
        let mut p = Permutation::identity(n);
        for l in &self.letters {
            let i = l.generator as usize;
            p = p.then(&Permutation::transposition(n, i, i + 1));
        }
        p
    }

    /// Image in the cyclic quotient of [`abelian_modulus`]: `ξ_i ↦ 1`,
    /// `H ↦ 2(2g+1)`.
    pub fn abelian_image(&self) -> u64 {
        let m = abelian_modulus(self.genus) as i64;
        let xi: i64 = self.letters.iter().map(|l| l.sign()).sum();
        let h = if self.central {
            2 * (2 * self.genus as i64 + 1)
        } else {
            0
        };
        (xi + h).rem_euclid(m) as u64
    }
}

/// Order of the cyclic quotient `ξ_i ↦ 1` of `Map_g^h`:
/// `gcd(4(2g+1), (2g+1)(2g+2))`. The relators force exactly this modulus.
pub fn abelian_modulus(genus: usize) -> u64 {
    let a = 4 * (2 * genus as u64 + 1);
    let b = (2 * genus as u64 + 1) * (2 * genus as u64 + 2);
    num_integer::gcd(a, b)
}

impl fmt::Display for McgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mcg g={}: {}", self.genus, self.body_string())
    }
}

impl FromStr for McgWord {
    type Err = Error;

    /// `mcg g=<g>: <body>`
    fn from_str(s: &str) -> Result<Self> {
        let (header, body) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s, 1, "missing `mcg g=<g>:` header"))?;
        let g = header
            .trim()
            .strip_prefix("mcg")
            .and_then(|h| h.trim().strip_prefix("g="))
            .and_then(|g| g.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::parse(header.trim(), 1, "expected `mcg g=<g>:`"))?;
        let offset = header.chars().count() + 1;
        McgWord::parse_body(g, body).map_err(|e| shift_column(e, offset))
    }
}

/// Lifts `σ_j^{±1} ↦ ξ_j^{±1}` from `B_{2g+2}`; no `H` is inserted.
pub fn lift_braid(b: &BraidWord, genus: usize) -> Result<McgWord> {
    if b.strands() != 2 * genus + 2 {
        return Err(Error::StrandMismatch {
            expected: 2 * genus + 2,
            found: b.strands(),
        });
    }
    McgWord::new(genus, false, b.letters().iter().copied())
}

/// `(T_{a_1})(T_{a_2} T_{a_1}) ⋯ (T_{a_n} ⋯ T_{a_1})` for a chain `a_1, …, a_n`.
pub fn coxeter_element(genus: usize, chain: &[u32]) -> Result<McgWord> {
    if chain.is_empty() {
        return Err(Error::InvalidArgument("Coxeter element of an empty chain".into()));
    }
    let letters = (0..chain.len()).flat_map(|k| chain[..=k].iter().rev().map(|&a| Letter::pos(a)));
    McgWord::new(genus, false, letters)
}

/// Conjugator `c` with `c⁻¹ ξ_1 c = ξ_j`, built from
/// `ξ_{i+1} = (ξ_{i+1}⁻¹ ξ_i⁻¹)⁻¹ ξ_i (ξ_{i+1}⁻¹ ξ_i⁻¹)`.
pub fn twist_conjugator(genus: usize, j: u32) -> Result<McgWord> {
    if j == 0 || j as usize > 2 * genus + 1 {
        return Err(Error::IndexOutOfRange {
            index: j as usize,
            max: 2 * genus + 1,
        });
    }
    let letters = (1..j).flat_map(|i| [Letter::neg(i + 1), Letter::neg(i)]);
    McgWord::new(genus, false, letters)
}

/// Homology classes of the chain curves in the symplectic basis
/// `(a_1, b_1, …, a_g, b_g)` with `⟨a_i, b_i⟩ = 1`.
///
/// The chain is `a_1, b_1, a_2 − a_1, b_2, …, a_g − a_{g−1}, b_g, −a_g`;
/// consecutive classes pair to `+1`, all others to `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCurves {
    genus: usize,
    classes: Vec<Vec<i64>>,
    form: IntMatrix,
    transvections: Vec<[IntMatrix; 2]>,
}

impl ChainCurves {
    pub fn standard(genus: usize) -> Self {
        let dim = 2 * genus;
        let a = |i: usize| 2 * (i - 1);
        let b = |i: usize| 2 * (i - 1) + 1;
        let mut classes = Vec::with_capacity(2 * genus + 1);
        for i in 1..=genus {
            let mut v = vec![0; dim];
            v[a(i)] = 1;
            if i > 1 {
                v[a(i - 1)] = -1;
            }
            classes.push(v);
            let mut w = vec![0; dim];
            w[b(i)] = 1;
            classes.push(w);
        }
        let mut last = vec![0; dim];
        if genus > 0 {
            last[a(genus)] = -1;
        }
        classes.push(last);
        ChainCurves::from_classes(genus, classes).expect("standard chain is valid")
    }

    /// Validates the chain intersection pattern and unimodularity of the span.
    pub fn from_classes(genus: usize, classes: Vec<Vec<i64>>) -> Result<Self> {
        let dim = 2 * genus;
        if classes.len() != 2 * genus + 1 || classes.iter().any(|v| v.len() != dim) {
            return Err(Error::InvalidArgument(format!(
                "genus {genus} needs {} classes of length {dim}",
                2 * genus + 1
            )));
        }
        let form = standard_form(genus);
        let pairing = |u: &[i64], v: &[i64]| -> i64 {
            (0..genus)
                .map(|i| u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i])
                .sum()
        };
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                let p = pairing(&classes[i], &classes[j]);
                let ok = if j == i + 1 { p.abs() == 1 } else { p == 0 };
                if !ok {
                    return Err(Error::InvalidArgument(format!(
                        "chain classes {} and {} pair to {p}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if dim > 0 {
            let span = IntMatrix::from_rows(&classes);
            let diag = span.smith_diagonal();
            if diag.len() != dim || diag.iter().any(|d| !d.is_one()) {
                return Err(Error::InvalidArgument("chain classes do not span the lattice".into()));
            }
        }
        let transvections = classes
            .iter()
            .map(|v| [transvection(&form, v, 1), transvection(&form, v, -1)])
            .collect();
        Ok(ChainCurves {
            genus,
            classes,
            form,
            transvections,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn classes(&self) -> &[Vec<i64>] {
        &self.classes
    }

    /// The Gram matrix `J` of the intersection form.
    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    /// `x ↦ x ± ⟨x, v_i⟩ v_i` for the 1-based chain index `i`.
    pub fn transvection(&self, i: usize, inverse: bool) -> &IntMatrix {
        &self.transvections[i - 1][usize::from(inverse)]
    }

    /// Exact check of `Mᵀ J M = J`.
    pub fn preserves_form(&self, m: &IntMatrix) -> bool {
        &(&m.transpose() * &self.form) * m == self.form
    }
}

fn standard_form(genus: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * genus, 2 * genus);
    for i in 0..genus {
        j.set(2 * i, 2 * i + 1, BigInt::one());
        j.set(2 * i + 1, 2 * i, -BigInt::one());
    }
    j
}

/// `I + s · v (J v)ᵀ`, i.e. `x ↦ x + s ⟨x, v⟩ v`.
fn transvection(form: &IntMatrix, v: &[i64], s: i64) -> IntMatrix {
    let n = v.len();
    let jv: Vec<BigInt> = (0..n)
        .map(|r| (0..n).map(|c| form.get(r, c) * BigInt::from(v[c])).sum())
        .collect();
    let mut m = IntMatrix::identity(n);
    for (r, &vr) in v.iter().enumerate() {
        for (c, jc) in jv.iter().enumerate() {
            let add = BigInt::from(s * vr) * jc;
            if !add.is_zero() {
                let x = m.get(r, c) + add;
                m.set(r, c, x);
            }
        }
    }
    m
}

/// Conjugation-invariant data of a symplectic matrix `M`.
///
/// `fixed_rank` and `content` are the rank and entry gcd of `M − I`;
/// `signature` is that of the integral quadratic form `x ↦ xᵀ J (M − I) x`,
/// which changes only by congruence under symplectic conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymplecticClass {
    pub char_poly: Vec<String>,
    pub trace: String,
    pub fixed_rank: usize,
    pub content: String,
    pub signature: (usize, usize),
}

impl SymplecticClass {
    pub fn of(m: &IntMatrix, chain: &ChainCurves) -> Self {
        let n = m.rows();
        let shifted = m.sub(&IntMatrix::identity(n));
        let jq = chain.form() * &shifted;
        let sym = jq.add(&jq.transpose());
        SymplecticClass {
            char_poly: m.characteristic_polynomial().iter().map(|c| c.to_string()).collect(),
            trace: m.trace().to_string(),
            fixed_rank: shifted.rank(),
            content: shifted.content().to_string(),
            signature: sym.signature(),
        }
    }
}

impl fmt::Display for SymplecticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tr={} chi=[{}] rk={} gcd={} sig=({},{})",
            self.trace,
            self.char_poly.join(","),
            self.fixed_rank,
            self.content,
            self.signature.0,
            self.signature.1
        )
    }
}

/// Which group a relator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PresentationKind {
    /// `B_{2g+2}`
    Braid,
    /// `Map_{0,2g+2}`
    SphereMapping,
    /// `Map_g^h`
    Hyperelliptic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Representation {
    ArtinAction,
    Symplectic,
    /// Symplectic image modulo `±I`, the representation of `Map_{0,2g+2}`.
    ProjectiveSymplectic,
    PuncturePermutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Expectation {
    Identity,
    MinusIdentity,
    /// The word is not a relator of this group; the image must be nontrivial.
    NotIdentity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorCheck {
    pub presentation: PresentationKind,
    pub relator: String,
    pub representation: Representation,
    pub expected: Expectation,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorReport {
    pub genus: usize,
    pub checks: Vec<RelatorCheck>,
}

impl RelatorReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Evaluates the relators of `B_{2g+2}`, `Map_{0,2g+2}` and `Map_g^h` in
/// every available representation.
pub fn verify_presentation_relators(genus: usize) -> Result<RelatorReport> {
    if genus == 0 || genus > 4 {
        return Err(Error::InvalidArgument(format!(
            "relator check supports 1 <= g <= 4, got {genus}"
        )));
    }
    let n = 2 * genus + 2;
    let top = 2 * genus as i32 + 1;
    let chain = ChainCurves::standard(genus);
    let mut checks = Vec::new();

    // braid relations shared by all three presentations, as signed words
    let mut artin: Vec<Vec<i32>> = Vec::new();
    for i in 1..=top {
        for j in i + 2..=top {
            artin.push(vec![i, j, -i, -j]);
        }
        if i < top {
            artin.push(vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]);
        }
    }
    let ascending: Vec<i32> = (1..=top).collect();
    let palindrome: Vec<i32> = ascending.iter().chain(ascending.iter().rev()).copied().collect();
    let power: Vec<i32> = ascending.iter().copied().cycle().take(ascending.len() * n).collect();

    for r in &artin {
        let w = BraidWord::from_signed(n, r)?;
        checks.push(RelatorCheck {
            presentation: PresentationKind::Braid,
            relator: w.body_string(),
            representation: Representation::ArtinAction,
            expected: Expectation::Identity,
            holds: w.artin_action().is_identity(),
        });
    }
    for r in [&palindrome, &power] {
        let w = BraidWord::from_signed(n, r)?;
        checks.push(RelatorCheck {
            presentation: PresentationKind::Braid,
            relator: w.body_string(),
            representation: Representation::ArtinAction,
            expected: Expectation::NotIdentity,
            holds: !w.artin_action().is_identity(),
        });
    }

    let eval = |w: &McgWord, presentation, expected, checks: &mut Vec<RelatorCheck>| {
        let m = w.symplectic_rep(&chain);
        let id = IntMatrix::identity(2 * genus);
        let minus = id.neg();
        let (representation, holds) = match presentation {
            PresentationKind::SphereMapping => (Representation::ProjectiveSymplectic, m == id || m == minus),
            _ => (
                Representation::Symplectic,
                match expected {
                    Expectation::Identity => m == id,
                    Expectation::MinusIdentity => m == minus,
                    Expectation::NotIdentity => m != id,
                },
            ),
        };
        checks.push(RelatorCheck {
            presentation,
            relator: w.body_string(),
            representation,
            expected,
            holds,
        });
        let perm_expected = match expected {
            Expectation::MinusIdentity => Expectation::Identity,
            e => e,
        };
        let p = w.puncture_permutation();
        checks.push(RelatorCheck {
            presentation,
            relator: w.body_string(),
            representation: Representation::PuncturePermutation,
            expected: perm_expected,
            holds: p.is_identity() == (perm_expected == Expectation::Identity),
        });
    };

    for r in artin.iter().chain([&palindrome, &power]) {
        let w = McgWord::from_signed(genus, r)?;
        eval(&w, PresentationKind::SphereMapping, Expectation::Identity, &mut checks);
    }

    let h = McgWord::involution(genus);
    let pal = McgWord::from_signed(genus, &palindrome)?;
    eval(
        &pal,
        PresentationKind::Hyperelliptic,
        Expectation::MinusIdentity,
        &mut checks,
    );
    eval(
        &pal.multiply(&h)?,
        PresentationKind::Hyperelliptic,
        Expectation::Identity,
        &mut checks,
    );
    eval(
        &h,
        PresentationKind::Hyperelliptic,
        Expectation::MinusIdentity,
        &mut checks,
    );
    eval(
        &McgWord::from_signed(genus, &power)?,
        PresentationKind::Hyperelliptic,
        Expectation::Identity,
        &mut checks,
    );
    for i in 1..=top {
        let x = McgWord::twist(genus, i as u32)?;
        let comm = h.multiply(&x)?.multiply(&h.invert())?.multiply(&x.invert())?;
        eval(
            &comm,
            PresentationKind::Hyperelliptic,
            Expectation::Identity,
            &mut checks,
        );
    }
    for r in &artin {
        eval(
            &McgWord::from_signed(genus, r)?,
            PresentationKind::Hyperelliptic,
            Expectation::Identity,
            &mut checks,
        );
    }

    Ok(RelatorReport { genus, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mw(g: usize, s: &str) -> McgWord {
        McgWord::parse_body(g, s).unwrap()
    }

    #[test]
    fn involution_is_front_loaded_and_squares_away() {
        let w = mw(2, "x1 H x2 H H");
        assert!(w.has_involution());
        assert_eq!(w.body_string(), "H x1 x2");
        assert_eq!(mw(2, "H x3 H"), mw(2, "x3"));
        assert_eq!(w.invert().body_string(), "H x2^-1 x1^-1");
        assert_eq!("mcg g=2: H x1".parse::<McgWord>().unwrap(), mw(2, "x1 H"));
        assert!(McgWord::parse_body(2, "x6").is_err());
        assert!(McgWord::parse_body(2, "x0").is_err());
    }

    #[test]
    fn lift_is_letterwise() {
        let b = BraidWord::parse_body(6, "s1 s5^-1 s3").unwrap();
        assert_eq!(lift_braid(&b, 2).unwrap(), mw(2, "x1 x5^-1 x3"));
        assert!(lift_braid(&BraidWord::identity(6), 2).unwrap().is_empty());
        assert!(lift_braid(&b, 3).is_err());
    }

    #[test]
    fn chain_is_valid() {
        for g in 1..=4 {
            let c = ChainCurves::standard(g);
            assert_eq!(c.classes().len(), 2 * g + 1);
        }
        // a broken chain is rejected
        let mut classes = ChainCurves::standard(2).classes().to_vec();
        classes.swap(0, 2);
        assert!(ChainCurves::from_classes(2, classes).is_err());
    }

    #[test]
    fn symplectic_images_for_genus_two() {
        let chain = ChainCurves::standard(2);
        assert!(McgWord::identity(2).symplectic_rep(&chain).is_identity());
        // oracle: direct multiplication of the transvection matrices
        let m: Vec<IntMatrix> = (1..=5).map(|i| chain.transvection(i, false).clone()).collect();
        for i in 0..4 {
            assert_eq!(&(&m[i] * &m[i + 1]) * &m[i], &(&m[i + 1] * &m[i]) * &m[i + 1]);
            for j in i + 2..5 {
                assert_eq!(&m[i] * &m[j], &m[j] * &m[i]);
            }
        }
        let mut pal = IntMatrix::identity(4);
        for i in (0..5).chain((0..5).rev()) {
            pal = &pal * &m[i];
        }
        assert_eq!(pal, IntMatrix::identity(4).neg());
        assert_eq!(
            mw(2, "x1 x2 x3 x4 x5 x5 x4 x3 x2 x1").symplectic_rep(&chain),
            IntMatrix::identity(4).neg()
        );
    }

    #[test]
    fn relator_report_holds() {
        for g in 1..=4 {
            let report = verify_presentation_relators(g).unwrap();
            let failed: Vec<_> = report.checks.iter().filter(|c| !c.holds).collect();
            assert!(failed.is_empty(), "g={g}: {failed:?}");
        }
        assert!(verify_presentation_relators(0).is_err());
    }

    #[test]
    fn coxeter_pattern() {
        assert_eq!(coxeter_element(2, &[3]).unwrap(), mw(2, "x3"));
        assert_eq!(coxeter_element(2, &[1, 2]).unwrap(), mw(2, "x1 x2 x1"));
        assert_eq!(coxeter_element(2, &[1, 2, 3]).unwrap(), mw(2, "x1 x2 x1 x3 x2 x1"));
        for n in 1..=5u32 {
            let chain: Vec<u32> = (1..=n).collect();
            assert_eq!(coxeter_element(2, &chain).unwrap().len(), (n * (n + 1) / 2) as usize);
        }
        assert!(coxeter_element(2, &[]).is_err());
        assert!(coxeter_element(2, &[6]).is_err());
    }

    #[test]
    fn twist_conjugators_transport_the_first_twist() {
        let chain = ChainCurves::standard(3);
        let x1 = McgWord::twist(3, 1).unwrap();
        for j in 1..=7 {
            let c = twist_conjugator(3, j).unwrap();
            let t = x1.conjugate(&c).unwrap();
            assert_eq!(t.symplectic_rep(&chain), *chain.transvection(j as usize, false));
            assert_eq!(
                t.puncture_permutation(),
                Permutation::transposition(8, j as usize, j as usize + 1)
            );
        }
    }

    #[test]
    fn abelian_quotient_matches_relators() {
        assert_eq!(abelian_modulus(1), 12);
        assert_eq!(abelian_modulus(2), 10);
        for g in 1..=4 {
            let top = 2 * g as i32 + 1;
            let asc: Vec<i32> = (1..=top).collect();
            let pal: Vec<i32> = asc.iter().chain(asc.iter().rev()).copied().collect();
            let pal = McgWord::from_signed(g, &pal).unwrap();
            assert_eq!(pal.abelian_image(), McgWord::involution(g).abelian_image());
            assert_eq!(McgWord::involution(g).pow(2).abelian_image(), 0);
            let power = McgWord::from_signed(g, &asc).unwrap().pow(2 * g as i64 + 2);
            assert_eq!(power.abelian_image(), 0);
        }
    }

    #[test]
    fn class_fingerprint_separates_twist_signs() {
        let chain = ChainCurves::standard(2);
        let pos = SymplecticClass::of(&mw(2, "x1").symplectic_rep(&chain), &chain);
        let pos3 = SymplecticClass::of(&mw(2, "x3").symplectic_rep(&chain), &chain);
        let neg = SymplecticClass::of(&mw(2, "x1^-1").symplectic_rep(&chain), &chain);
        assert_eq!(pos, pos3);
        assert_ne!(pos, neg);
        assert_eq!(pos.fixed_rank, 1);
        assert_eq!(pos.trace, "4");
    }

    fn word(g: usize) -> impl Strategy<Value = McgWord> {
        let top = 2 * g as u32 + 1;
        (any::<bool>(), prop::collection::vec((1..=top, any::<bool>()), 0..8))
            .prop_map(move |(h, v)| McgWord::new(g, h, v.into_iter().map(|(i, s)| Letter::new(i, s))).unwrap())
    }

    proptest! {
        #[test]
        fn symplectic_rep_is_homomorphic_genus2(a in word(2), b in word(2)) {
            let chain = ChainCurves::standard(2);
            let ab = a.multiply(&b).unwrap();
            let m = ab.symplectic_rep(&chain);
            prop_assert_eq!(&m, &(&a.symplectic_rep(&chain) * &b.symplectic_rep(&chain)));
            prop_assert!(chain.preserves_form(&m));
        }

        #[test]
        fn symplectic_rep_is_homomorphic_genus3(a in word(3), b in word(3)) {
            let chain = ChainCurves::standard(3);
            let m = a.multiply(&b).unwrap().symplectic_rep(&chain);
            prop_assert_eq!(&m, &(&a.symplectic_rep(&chain) * &b.symplectic_rep(&chain)));
            prop_assert!(chain.preserves_form(&m));
        }

        #[test]
        fn conjugation_invariant_class(a in word(2), c in word(2)) {
            let chain = ChainCurves::standard(2);
            let conj = a.conjugate(&c).unwrap();
            prop_assert_eq!(
                SymplecticClass::of(&a.symplectic_rep(&chain), &chain),
                SymplecticClass::of(&conj.symplectic_rep(&chain), &chain)
            );
        }

        #[test]
        fn lift_respects_concatenation(x in prop::collection::vec((1u32..6, any::<bool>()), 0..8),
                                       y in prop::collection::vec((1u32..6, any::<bool>()), 0..8)) {
            let bx = BraidWord::new(6, x.into_iter().map(|(i, s)| Letter::new(i, s))).unwrap();
            let by = BraidWord::new(6, y.into_iter().map(|(i, s)| Letter::new(i, s))).unwrap();
            prop_assert_eq!(
                lift_braid(&bx.multiply(&by).unwrap(), 2).unwrap(),
                lift_braid(&bx, 2).unwrap().multiply(&lift_braid(&by, 2).unwrap()).unwrap()
            );
        }
    }
}
