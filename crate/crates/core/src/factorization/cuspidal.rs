use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

use super::{BraidGroup, Factorization};

/// `w⁻¹ σ_1^e w` with `e ∈ {1, 2, 3}`: a tangency, node or cusp.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspidalFactor {
    conjugator: BraidWord,
    exponent: u8,
}

impl CuspidalFactor {
    pub fn new(conjugator: BraidWord, exponent: u8) -> Result<Self> {
        if !(1..=3).contains(&exponent) {
            return Err(Error::InvalidArgument(format!(
                "cuspidal exponent must be 1, 2 or 3, got {exponent}"
            )));
        }
        if conjugator.strands() < 2 {
            return Err(Error::InvalidArgument(
                "cuspidal factors need at least two strands".into(),
            ));
        }
        Ok(CuspidalFactor { conjugator, exponent })
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn exponent(&self) -> u8 {
        self.exponent
    }

    /// The conjugated half-twist `w⁻¹ σ_1 w`.
    pub fn half_twist(&self) -> BraidWord {
        let s1 = BraidWord::generator(self.conjugator.strands(), 1).expect("at least two strands");
        s1.conjugate(&self.conjugator).expect("same strand count")
    }

    /// `w⁻¹ σ_1^e w`.
    pub fn braid(&self) -> BraidWord {
        let s1 = BraidWord::generator(self.conjugator.strands(), 1).expect("at least two strands");
        s1.pow(self.exponent as i64)
            .conjugate(&self.conjugator)
            .expect("same strand count")
    }
}

/// Braid-monodromy factorization all of whose factors are conjugated powers
/// of a half-twist with exponent 1, 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspidalFactorization {
    strands: usize,
    factors: Vec<CuspidalFactor>,
}

/// Serialized form of one factor: `{ "conjugator": "<braid body>", "exponent": e }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspidalFactorSpec {
    pub conjugator: String,
    pub exponent: u8,
}

impl CuspidalFactorization {
    pub fn new(strands: usize, factors: Vec<CuspidalFactor>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| f.conjugator.strands() != strands) {
            return Err(Error::StrandMismatch {
                expected: strands,
                found: f.conjugator.strands(),
            });
        }
        Ok(CuspidalFactorization { strands, factors })
    }

    /// Factors are `(conjugator, exponent)` pairs. Raw braid words are not
    /// accepted: recognizing a conjugate of `σ_1^e` would need a conjugacy
    /// solver.
    pub fn from_specs(strands: usize, specs: &[CuspidalFactorSpec]) -> Result<Self> {
        let factors = specs
            .iter()
            .map(|s| CuspidalFactor::new(BraidWord::parse_body(strands, &s.conjugator)?, s.exponent))
            .collect::<Result<Vec<_>>>()?;
        CuspidalFactorization::new(strands, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[CuspidalFactor] {
        &self.factors
    }

    /// One braid factor `w⁻¹ σ_1^e w` per cuspidal factor, without regeneration.
    pub fn to_factorization(&self) -> Factorization<BraidGroup> {
        Factorization::new(
            BraidGroup::new(self.strands),
            self.factors.iter().map(CuspidalFactor::braid).collect(),
        )
    }

    /// Replaces every `w⁻¹ σ_1^e w` by `e` consecutive copies of `w⁻¹ σ_1 w`.
    pub fn regenerate(&self) -> Factorization<BraidGroup> {
        let factors = self
            .factors
            .iter()
            .flat_map(|f| std::iter::repeat_n(f.half_twist(), f.exponent as usize))
            .collect();
        Factorization::new(BraidGroup::new(self.strands), factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(strands: usize, parts: &[(&str, u8)]) -> CuspidalFactorization {
        let specs: Vec<CuspidalFactorSpec> = parts
            .iter()
            .map(|(c, e)| CuspidalFactorSpec {
                conjugator: c.to_string(),
                exponent: *e,
            })
            .collect();
        CuspidalFactorization::from_specs(strands, &specs).unwrap()
    }

    #[test]
    fn regeneration_of_a_cusp() {
        let c = cf(3, &[("e", 3)]);
        let r = c.regenerate();
        assert_eq!(r.formatted_factors(), vec!["s1", "s1", "s1"]);
        assert!(r.product().equals(c.to_factorization().product()).unwrap());
    }

    #[test]
    fn exponent_one_is_unchanged() {
        let c = cf(3, &[("s2", 1), ("s1 s2", 1)]);
        let r = c.regenerate();
        assert_eq!(r.len(), 2);
        assert!(r.same_factors(&c.to_factorization()));
    }

    #[test]
    fn length_and_product_contract() {
        let c = cf(4, &[("s2", 2), ("s3 s1^-1", 3), ("e", 1), ("s2^-1 s3", 2)]);
        let r = c.regenerate();
        assert_eq!(r.len(), 2 + 3 + 1 + 2);
        assert!(r.product().equals(c.to_factorization().product()).unwrap());
    }

    #[test]
    fn invalid_inputs() {
        let bad = CuspidalFactorSpec {
            conjugator: "e".into(),
            exponent: 4,
        };
        assert!(CuspidalFactorization::from_specs(3, &[bad]).is_err());
    }
}
