//! Monodromy data of Lefschetz fibrations over a disk or a sphere.
//!
//! Each critical value contributes a Dehn twist about a vanishing cycle.
//! Cycles are given as transports of the first chain curve, so a factor is
//! `c⁻¹ ξ_1^{±1} c`. The product of all factors is the boundary monodromy
//! `φ` over a disk and the identity over a sphere.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::{hurwitz_equivalent, Factorization, GroupContext, McgGroup, SearchOptions, Verdict};
use crate::freegroup::Letter;
use crate::mcg::McgWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Disk,
    Sphere,
}

/// `conjugator⁻¹ ξ_1^{orientation} conjugator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistFactor {
    conjugator: McgWord,
    orientation: i8,
}

impl TwistFactor {
    pub fn new(conjugator: McgWord, orientation: i8) -> Result<Self> {
        if orientation != 1 && orientation != -1 {
            return Err(Error::InvalidArgument(format!(
                "twist orientation must be 1 or -1, got {orientation}"
            )));
        }
        Ok(TwistFactor {
            conjugator,
            orientation,
        })
    }

    pub fn positive(conjugator: McgWord) -> Self {
        TwistFactor {
            conjugator,
            orientation: 1,
        }
    }

    pub fn conjugator(&self) -> &McgWord {
        &self.conjugator
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn word(&self) -> McgWord {
        let g = self.conjugator.genus();
        let twist = McgWord::new(g, false, [Letter::new(1, self.orientation < 0)]).expect("genus is positive");
        twist.conjugate(&self.conjugator).expect("same genus")
    }
}

/// JSON form of a fibration.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibrationSpec {
    pub genus: usize,
    pub base: Base,
    #[serde(default)]
    pub phi: String,
    pub factors: Vec<TwistFactorSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistFactorSpec {
    pub conjugator: String,
    pub orientation: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzFibration {
    genus: usize,
    base: Base,
    phi: McgWord,
    factors: Vec<TwistFactor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationCheck {
    pub representation: &'static str,
    pub holds: bool,
}

/// Necessary conditions only: a passing report does not prove that the
/// factor product equals `φ` in the mapping class group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<RepresentationCheck>,
}

impl ValidationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl LefschetzFibration {
    pub fn new(genus: usize, base: Base, phi: McgWord, factors: Vec<TwistFactor>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidArgument("fiber genus must be positive".into()));
        }
        if phi.genus() != genus {
            return Err(Error::GenusMismatch {
                left: genus,
                right: phi.genus(),
            });
        }
        if let Some(f) = factors.iter().find(|f| f.conjugator.genus() != genus) {
            return Err(Error::GenusMismatch {
                left: genus,
                right: f.conjugator.genus(),
            });
        }
        if base == Base::Sphere && phi != McgWord::identity(genus) {
            return Err(Error::InvalidArgument(
                "a fibration over the sphere has trivial φ".into(),
            ));
        }
        Ok(LefschetzFibration {
            genus,
            base,
            phi,
            factors,
        })
    }

    pub fn from_spec(spec: &FibrationSpec) -> Result<Self> {
        let g = spec.genus;
        let phi = match spec.phi.trim() {
            "" => McgWord::identity(g),
            text => McgWord::parse_body(g, text)?,
        };
        let factors = spec
            .factors
            .iter()
            .map(|f| TwistFactor::new(McgWord::parse_body(g, &f.conjugator)?, f.orientation))
            .collect::<Result<Vec<_>>>()?;
        LefschetzFibration::new(g, spec.base, phi, factors)
    }

    pub fn to_spec(&self) -> FibrationSpec {
        FibrationSpec {
            genus: self.genus,
            base: self.base,
            phi: self.phi.body_string(),
            factors: self
                .factors
                .iter()
                .map(|f| TwistFactorSpec {
                    conjugator: f.conjugator.body_string(),
                    orientation: f.orientation,
                })
                .collect(),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn phi(&self) -> &McgWord {
        &self.phi
    }

    pub fn factors(&self) -> &[TwistFactor] {
        &self.factors
    }

    /// The factor words as a factorization in `Map_g^h`.
    pub fn factorization(&self) -> Factorization<McgGroup> {
        Factorization::new(
            McgGroup::new(self.genus),
            self.factors.iter().map(TwistFactor::word).collect(),
        )
    }

    /// Compares the factor product with `φ` in the symplectic and puncture
    /// permutation representations.
    pub fn validate(&self) -> ValidationReport {
        let f = self.factorization();
        let ctx = f.context();
        let product = f.product();
        let symplectic = product.symplectic_rep(ctx.chain()) == self.phi.symplectic_rep(ctx.chain());
        let permutation = product.puncture_permutation() == self.phi.puncture_permutation();
        ValidationReport {
            checks: vec![
                RepresentationCheck {
                    representation: "symplectic",
                    holds: symplectic,
                },
                RepresentationCheck {
                    representation: "puncture-permutation",
                    holds: permutation,
                },
            ],
        }
    }

    /// True iff every twist is positively oriented.
    pub fn is_symplectic_type(&self) -> bool {
        self.factors.iter().all(|f| f.orientation > 0)
    }

    /// Factors of `self` followed by those of `other` conjugated by `psi`.
    /// Over a disk the boundary monodromy becomes `φ_1 ψ⁻¹ φ_2 ψ`.
    pub fn fiber_sum(&self, other: &LefschetzFibration, psi: &McgWord) -> Result<LefschetzFibration> {
        if self.genus != other.genus || psi.genus() != self.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: if other.genus != self.genus {
                    other.genus
                } else {
                    psi.genus()
                },
            });
        }
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        let mut factors = self.factors.clone();
        for f in &other.factors {
            factors.push(TwistFactor {
                conjugator: f.conjugator.multiply(psi)?,
                orientation: f.orientation,
            });
        }
        let phi = match self.base {
            Base::Disk => self.phi.multiply(&other.phi.conjugate(psi)?)?,
            Base::Sphere => McgWord::identity(self.genus),
        };
        LefschetzFibration::new(self.genus, self.base, phi, factors)
    }
}

/// Equivalence of fibrations through Hurwitz moves and simultaneous
/// conjugation. Conjugators default to the twists of `f1`; rotation is only
/// admitted over the sphere.
pub fn kas_equivalent(
    f1: &LefschetzFibration,
    f2: &LefschetzFibration,
    options: &SearchOptions<McgWord>,
) -> Result<Verdict<McgWord>> {
    if options.budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if f1.genus != f2.genus {
        return Err(Error::GenusMismatch {
            left: f1.genus,
            right: f2.genus,
        });
    }
    if f1.base != f2.base {
        return Err(Error::BaseMismatch);
    }
    if options.allow_rotation && f1.base == Base::Disk {
        return Err(Error::InvalidArgument(
            "cyclic rotation is only admitted over the sphere".into(),
        ));
    }
    let a = f1.factorization();
    let b = f2.factorization();
    let mut conjugators = options.conjugators.clone().unwrap_or_else(|| {
        let mut twists = Vec::new();
        for w in a.factors() {
            if !twists.contains(w) {
                twists.push(w.clone());
            }
        }
        twists
    });
    conjugators.retain(|c| *c != a.context().identity());
    let opts = SearchOptions {
        budget: options.budget,
        allow_conjugation: true,
        conjugators: Some(conjugators),
        allow_rotation: options.allow_rotation,
    };
    hurwitz_equivalent(&a, &b, &opts)
}
