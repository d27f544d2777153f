//! Fundamental groups of plane curve complements from braid monodromy.
//!
//! A factorization `β_1 ∘ ⋯ ∘ β_m` in `B_d` gives the presentation with
//! generators `γ_1, …, γ_d` and relators `γ_j = β_k(γ_j)` for every factor.
//! In the projective case `γ_1 ⋯ γ_d = 1` is added. Groups are compared
//! through their abelianization and counts of homomorphisms to small
//! symmetric groups.

mod homcount;
mod tietze;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::{BraidGroup, CuspidalFactorSpec, CuspidalFactorization, Factorization};
use crate::freegroup::{FreeWord, GroupPresentation, Letter};
use crate::linalg::IntMatrix;

pub use homcount::count_homs;
pub use tietze::tietze_simplify;

/// Braid monodromy of a curve of degree `strands`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyInput {
    strands: usize,
    factors: Vec<BraidWord>,
    projective: bool,
}

impl MonodromyInput {
    pub fn new(strands: usize, factors: Vec<BraidWord>, projective: bool) -> Result<Self> {
        if let Some(b) = factors.iter().find(|b| b.strands() != strands) {
            return Err(Error::StrandMismatch {
                expected: strands,
                found: b.strands(),
            });
        }
        Ok(MonodromyInput {
            strands,
            factors,
            projective,
        })
    }

    pub fn from_factorization(f: &Factorization<BraidGroup>, projective: bool) -> Self {
        MonodromyInput {
            strands: f.context().strands(),
            factors: f.factors().to_vec(),
            projective,
        }
    }

    /// Each cuspidal factor contributes the single braid `w⁻¹ σ_1^e w`.
    pub fn from_cuspidal(c: &CuspidalFactorization, projective: bool) -> Self {
        MonodromyInput::from_factorization(&c.to_factorization(), projective)
    }

    pub fn from_spec(spec: &MonodromySpec) -> Result<Self> {
        match (&spec.factors, &spec.cuspidal) {
            (Some(words), None) => {
                let factors = words
                    .iter()
                    .map(|w| BraidWord::parse_body(spec.strands, w))
                    .collect::<Result<Vec<_>>>()?;
                MonodromyInput::new(spec.strands, factors, spec.projective)
            }
            (None, Some(cusps)) => {
                let c = CuspidalFactorization::from_specs(spec.strands, cusps)?;
                Ok(MonodromyInput::from_cuspidal(&c, spec.projective))
            }
            _ => Err(Error::InvalidArgument(
                "give exactly one of `factors` and `cuspidal`".into(),
            )),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[BraidWord] {
        &self.factors
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }
}

/// JSON form: `factors` holds braid bodies, `cuspidal` holds
/// `(conjugator, exponent)` pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonodromySpec {
    pub strands: usize,
    #[serde(default)]
    pub projective: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cuspidal: Option<Vec<CuspidalFactorSpec>>,
}

/// Relators `γ_j β(γ_j)⁻¹`, freely reduced, without trivial or repeated ones.
pub fn presentation(m: &MonodromyInput) -> Result<GroupPresentation> {
    let d = m.strands;
    let mut seen = BTreeSet::new();
    let mut relators = Vec::new();
    let mut push = |w: FreeWord| {
        if !w.is_identity() && seen.insert(w.clone()) {
            relators.push(w);
        }
    };
    for b in &m.factors {
        let action = b.artin_action();
        for (j, image) in action.images().iter().enumerate() {
            push(FreeWord::generator(j as u32 + 1).multiply(&image.invert()));
        }
    }
    if m.projective {
        push(FreeWord::reduce((1..=d as u32).map(Letter::pos)));
    }
    GroupPresentation::new(d, relators)
}

/// Invariant factors of the abelianization: the non-unit Smith diagonal
/// entries followed by one zero per free summand.
pub fn abelianization(p: &GroupPresentation) -> Vec<u64> {
    let n = p.generators();
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(n)).collect();
    let diag = if rows.is_empty() || n == 0 {
        Vec::new()
    } else {
        IntMatrix::from_rows(&rows).smith_diagonal()
    };
    let mut out: Vec<u64> = diag
        .iter()
        .filter(|d| **d != 1.into())
        .map(|d| d.to_u64().expect("invariant factor fits in u64"))
        .collect();
    out.extend(std::iter::repeat_n(0, n - diag.len()));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintConfig {
    /// Degrees `k` of the symmetric groups `S_k` to count homomorphisms into.
    pub degrees: Vec<usize>,
    /// Number of generator eliminations allowed before counting.
    pub simplify_effort: usize,
}

impl Default for FingerprintConfig {
    fn default() -> Self {
        FingerprintConfig {
            degrees: vec![2, 3, 4],
            simplify_effort: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FingerprintRecord {
    pub abelianization: Vec<u64>,
    /// `k -> |Hom(G, S_k)|`
    pub hom_counts: BTreeMap<usize, u64>,
}

pub fn fingerprint(p: &GroupPresentation, config: &FingerprintConfig) -> Result<FingerprintRecord> {
    let simple = tietze_simplify(p, config.simplify_effort);
    let mut hom_counts = BTreeMap::new();
    for &k in &config.degrees {
        hom_counts.insert(k, count_homs(&simple, k)?);
    }
    Ok(FingerprintRecord {
        abelianization: abelianization(&simple),
        hom_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::surface_presentation;

    fn input(d: usize, words: &[&str], projective: bool) -> MonodromyInput {
        let factors = words.iter().map(|w| BraidWord::parse_body(d, w).unwrap()).collect();
        MonodromyInput::new(d, factors, projective).unwrap()
    }

    #[test]
    fn no_factors_is_free() {
        let p = presentation(&input(3, &[], false)).unwrap();
        assert_eq!(p, GroupPresentation::free(3));
        assert_eq!(abelianization(&p), vec![0, 0, 0]);
    }

    #[test]
    fn single_node_affine() {
        let p = presentation(&input(2, &["s1"], false)).unwrap();
        // hand reduction: g1 = g2 from both strands
        let texts: Vec<String> = p.relators().iter().map(|r| r.to_string()).collect();
        assert_eq!(texts, vec!["g1 g2^-1", "g1^-1 g2"]);
        assert_eq!(abelianization(&p), vec![0]);
    }

    #[test]
    fn smooth_conic() {
        let p = presentation(&input(2, &["s1", "s1"], true)).unwrap();
        assert_eq!(abelianization(&p), vec![2]);
        assert_eq!(count_homs(&p, 3).unwrap(), 4);
        let fp = fingerprint(&p, &FingerprintConfig::default()).unwrap();
        assert_eq!(fp.abelianization, vec![2]);
        assert_eq!(fp.hom_counts[&2], 2);
        assert_eq!(fp.hom_counts[&4], 10);
    }

    #[test]
    fn surfaces_have_free_abelianization() {
        for g in 1..=4 {
            assert_eq!(abelianization(&surface_presentation(g)), vec![0; 2 * g]);
        }
    }

    #[test]
    fn strand_mismatch() {
        let b = BraidWord::parse_body(3, "s1").unwrap();
        assert!(MonodromyInput::new(2, vec![b], false).is_err());
    }

    #[test]
    fn spec_forms() {
        let spec: MonodromySpec = MonodromySpec {
            strands: 3,
            projective: false,
            factors: None,
            cuspidal: Some(vec![CuspidalFactorSpec {
                conjugator: "s2".into(),
                exponent: 3,
            }]),
        };
        let m = MonodromyInput::from_spec(&spec).unwrap();
        assert_eq!(m.factors().len(), 1);
        assert_eq!(m.factors()[0].len(), 5);
        let both = MonodromySpec {
            factors: Some(vec![]),
            ..spec
        };
        assert!(MonodromyInput::from_spec(&both).is_err());
    }
}
