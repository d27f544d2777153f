use std::fmt;
use std::sync::Arc;

use crate::braid::{BraidAction, BraidWord};
use crate::error::{Error, Result};
use crate::freegroup::{FreeWord, Letter};
use crate::mcg::{ChainCurves, McgWord, SymplecticClass};
use crate::perm::Permutation;

use super::GroupContext;

fn cycle_type_label(p: &Permutation) -> String {
    let parts: Vec<String> = p.cycle_type().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// The symmetric group `S_n`, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricGroup {
    degree: usize,
}

impl SymmetricGroup {
    pub fn new(degree: usize) -> Self {
        assert!(degree >= 1, "S_0 is not supported");
        SymmetricGroup { degree }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

impl GroupContext for SymmetricGroup {
    type Element = Permutation;
    type Key = Permutation;

    fn descriptor(&self) -> String {
        format!("symmetric:{}", self.degree)
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn multiply(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.then(b)
    }

    fn invert(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn key(&self, a: &Permutation) -> Permutation {
        a.clone()
    }

    fn generators(&self) -> Vec<Permutation> {
        (1..self.degree)
            .map(|i| Permutation::transposition(self.degree, i, i + 1))
            .collect()
    }

    fn format(&self, a: &Permutation) -> String {
        a.to_string()
    }

    /// Cycle notation `(1 3)(2 4)`, or a word `s1 s2^-1` in the adjacent
    /// transpositions `s_i = (i i+1)`.
    fn parse(&self, text: &str) -> Result<Permutation> {
        let t = text.trim();
        if t.starts_with('s') {
            let w = BraidWord::parse_body(self.degree, t)?;
            return Ok(w.permutation());
        }
        Permutation::parse_cycles(t, self.degree)
    }

    fn class_label(&self, a: &Permutation) -> Option<String> {
        Some(cycle_type_label(a))
    }

    fn abelian_label(&self, a: &Permutation) -> Option<String> {
        Some(a.sign().to_string())
    }
}

/// The braid group `B_n`; keys are Artin actions, hence exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidGroup {
    strands: usize,
}

impl BraidGroup {
    pub fn new(strands: usize) -> Self {
        assert!(strands >= 1, "B_0 is not supported");
        BraidGroup { strands }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }
}

impl fmt::Display for BraidAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|w| w.to_string()).collect();
        write!(f, "[{}]", parts.join(" | "))
    }
}

impl GroupContext for BraidGroup {
    type Element = BraidWord;
    type Key = BraidAction;

    fn descriptor(&self) -> String {
        format!("braid:{}", self.strands)
    }

    fn identity(&self) -> BraidWord {
        BraidWord::identity(self.strands)
    }

    fn multiply(&self, a: &BraidWord, b: &BraidWord) -> BraidWord {
        a.multiply(b).expect("braids of one context share the strand count")
    }

    fn invert(&self, a: &BraidWord) -> BraidWord {
        a.invert()
    }

    fn key(&self, a: &BraidWord) -> BraidAction {
        a.artin_action()
    }

    fn generators(&self) -> Vec<BraidWord> {
        (1..self.strands as u32)
            .map(|i| BraidWord::generator(self.strands, i).expect("index in range"))
            .collect()
    }

    fn format(&self, a: &BraidWord) -> String {
        a.body_string()
    }

    fn parse(&self, text: &str) -> Result<BraidWord> {
        let t = text.trim();
        if t.starts_with("braid") {
            let w: BraidWord = t.parse()?;
            if w.strands() != self.strands {
                return Err(Error::StrandMismatch {
                    expected: self.strands,
                    found: w.strands(),
                });
            }
            return Ok(w);
        }
        BraidWord::parse_body(self.strands, t)
    }

    fn class_label(&self, a: &BraidWord) -> Option<String> {
        Some(cycle_type_label(&a.permutation()))
    }

    fn abelian_label(&self, a: &BraidWord) -> Option<String> {
        Some(a.exponent_sum().to_string())
    }

    fn braid_word(&self, a: &BraidWord) -> Option<BraidWord> {
        Some(a.clone())
    }
}

/// Free group of rank `n`, optionally with a user-supplied homomorphism to a
/// symmetric group (images of the generators) used for class invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGroup {
    rank: usize,
    quotient: Option<Vec<Permutation>>,
}

impl FreeGroup {
    pub fn new(rank: usize) -> Self {
        FreeGroup { rank, quotient: None }
    }

    /// `images[k]` is the image of `γ_{k+1}`; all must share one degree.
    pub fn with_quotient(rank: usize, images: Vec<Permutation>) -> Result<Self> {
        if images.len() != rank {
            return Err(Error::InvalidArgument(format!(
                "quotient needs {rank} generator images, got {}",
                images.len()
            )));
        }
        if images.windows(2).any(|w| w[0].degree() != w[1].degree()) {
            return Err(Error::InvalidArgument("quotient images differ in degree".into()));
        }
        Ok(FreeGroup {
            rank,
            quotient: Some(images),
        })
    }

    fn image(&self, w: &FreeWord) -> Option<Permutation> {
        let images = self.quotient.as_ref()?;
        let degree = images.first().map_or(1, Permutation::degree);
        let mut p = Permutation::identity(degree);
        for l in w.letters() {
            let g = &images[l.generator as usize - 1];
            p = p.then(&if l.inverse { g.inverse() } else { g.clone() });
        }
        Some(p)
    }
}

impl GroupContext for FreeGroup {
    type Element = FreeWord;
    type Key = FreeWord;

    fn descriptor(&self) -> String {
        format!("free:{}", self.rank)
    }

    fn identity(&self) -> FreeWord {
        FreeWord::identity()
    }

    fn multiply(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.multiply(b)
    }

    fn invert(&self, a: &FreeWord) -> FreeWord {
        a.invert()
    }

    fn key(&self, a: &FreeWord) -> FreeWord {
        a.clone()
    }

    fn generators(&self) -> Vec<FreeWord> {
        (1..=self.rank as u32).map(FreeWord::generator).collect()
    }

    fn format(&self, a: &FreeWord) -> String {
        a.to_string()
    }

    fn parse(&self, text: &str) -> Result<FreeWord> {
        let w: FreeWord = text.parse()?;
        if w.max_generator() as usize > self.rank {
            return Err(Error::IndexOutOfRange {
                index: w.max_generator() as usize,
                max: self.rank,
            });
        }
        Ok(w)
    }

    fn class_label(&self, a: &FreeWord) -> Option<String> {
        self.image(a).map(|p| cycle_type_label(&p))
    }

    fn abelian_label(&self, a: &FreeWord) -> Option<String> {
        Some(format!("{:?}", a.exponent_sums(self.rank)))
    }
}

/// `Map_g^h` as words. Keys are syntactic (freely reduced words with `H`
/// normalized), so they are not exact: equal elements may have different
/// keys. Class labels come from the symplectic and puncture quotients.
#[derive(Debug, Clone)]
pub struct McgGroup {
    genus: usize,
    chain: Arc<ChainCurves>,
}

impl McgGroup {
    pub fn new(genus: usize) -> Self {
        McgGroup {
            genus,
            chain: Arc::new(ChainCurves::standard(genus)),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn chain(&self) -> &ChainCurves {
        &self.chain
    }
}

impl PartialEq for McgGroup {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus && self.chain.classes() == other.chain.classes()
    }
}

impl GroupContext for McgGroup {
    type Element = McgWord;
    type Key = McgWord;

    fn descriptor(&self) -> String {
        format!("mcg:{}", self.genus)
    }

    fn identity(&self) -> McgWord {
        McgWord::identity(self.genus)
    }

    fn multiply(&self, a: &McgWord, b: &McgWord) -> McgWord {
        a.multiply(b).expect("words of one context share the genus")
    }

    fn invert(&self, a: &McgWord) -> McgWord {
        a.invert()
    }

    fn key(&self, a: &McgWord) -> McgWord {
        a.clone()
    }

    fn exact_keys(&self) -> bool {
        false
    }

    fn generators(&self) -> Vec<McgWord> {
        (1..=2 * self.genus as u32 + 1)
            .map(|i| McgWord::new(self.genus, false, [Letter::pos(i)]).expect("index in range"))
            .collect()
    }

    fn format(&self, a: &McgWord) -> String {
        a.body_string()
    }

    fn parse(&self, text: &str) -> Result<McgWord> {
        let t = text.trim();
        if t.starts_with("mcg") {
            let w: McgWord = t.parse()?;
            if w.genus() != self.genus {
                return Err(Error::GenusMismatch {
                    left: self.genus,
                    right: w.genus(),
                });
            }
            return Ok(w);
        }
        McgWord::parse_body(self.genus, t)
    }

    fn class_label(&self, a: &McgWord) -> Option<String> {
        let class = SymplecticClass::of(&a.symplectic_rep(&self.chain), &self.chain);
        Some(format!("{class} perm={}", cycle_type_label(&a.puncture_permutation())))
    }

    fn abelian_label(&self, a: &McgWord) -> Option<String> {
        Some(format!(
            "{} mod {}",
            a.abelian_image(),
            crate::mcg::abelian_modulus(self.genus)
        ))
    }
}
