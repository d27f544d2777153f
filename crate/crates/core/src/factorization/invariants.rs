use serde::Serialize;

use crate::error::{Error, Result};
use crate::vankampen::{self, FingerprintConfig, FingerprintRecord, MonodromyInput};

use super::{Factorization, GroupContext};

/// Invariants of factorizations under Hurwitz moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantMode {
    /// Number of factors.
    Length,
    /// Canonical key of the product. Not stable under conjugation.
    ProductKey,
    /// Multiset of factor conjugacy classes in the context's quotient,
    /// together with the class of the product.
    QuotientClasses,
    /// Multiset of factor images in an abelian quotient, with their sum.
    AbelianImage,
    /// Abelianization and symmetric-group hom counts of the van Kampen group
    /// of the (affine) braid factorization.
    VanKampen(FingerprintConfig),
}

impl InvariantMode {
    pub fn name(&self) -> &'static str {
        match self {
            InvariantMode::Length => "length",
            InvariantMode::ProductKey => "product",
            InvariantMode::QuotientClasses => "quotient-classes",
            InvariantMode::AbelianImage => "abelian-image",
            InvariantMode::VanKampen(_) => "van-kampen",
        }
    }

    /// Whether simultaneous conjugation (and cyclic rotation) also preserve it.
    pub fn conjugation_stable(&self) -> bool {
        !matches!(self, InvariantMode::ProductKey)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum InvariantValue {
    Length { value: usize },
    Product { key: String },
    QuotientClasses { factors: Vec<String>, product: String },
    AbelianImage { factors: Vec<String>, product: String },
    VanKampen { fingerprint: FingerprintRecord },
}

impl std::fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InvariantValue::Length { value } => write!(f, "{value}"),
            InvariantValue::Product { key } => f.write_str(key),
            InvariantValue::QuotientClasses { factors, product }
            | InvariantValue::AbelianImage { factors, product } => {
                write!(f, "factors {{{}}}; product {product}", factors.join("; "))
            }
            InvariantValue::VanKampen { fingerprint } => write!(
                f,
                "abelianization {:?}; hom counts {:?}",
                fingerprint.abelianization, fingerprint.hom_counts
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub entries: Vec<(String, InvariantValue)>,
}

impl InvariantRecord {
    pub fn get(&self, name: &str) -> Option<&InvariantValue> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

/// Computes the requested invariants; fails if the context lacks the
/// structure a mode needs.
pub fn invariants<C: GroupContext>(f: &Factorization<C>, modes: &[InvariantMode]) -> Result<InvariantRecord> {
    let ctx = f.context();
    let mut entries = Vec::with_capacity(modes.len());
    for mode in modes {
        let value = match mode {
            InvariantMode::Length => InvariantValue::Length { value: f.len() },
            InvariantMode::ProductKey => InvariantValue::Product {
                key: ctx.key(f.product()).to_string(),
            },
            InvariantMode::QuotientClasses => {
                let label = |e| {
                    ctx.class_label(e)
                        .ok_or(Error::UnsupportedInvariant("quotient-classes"))
                };
                InvariantValue::QuotientClasses {
                    factors: sorted(f.factors().iter().map(label).collect::<Result<_>>()?),
                    product: label(f.product())?,
                }
            }
            InvariantMode::AbelianImage => {
                let label = |e| ctx.abelian_label(e).ok_or(Error::UnsupportedInvariant("abelian-image"));
                InvariantValue::AbelianImage {
                    factors: sorted(f.factors().iter().map(label).collect::<Result<_>>()?),
                    product: label(f.product())?,
                }
            }
            InvariantMode::VanKampen(config) => {
                let strands = ctx
                    .braid_word(&ctx.identity())
                    .ok_or(Error::UnsupportedInvariant("van-kampen"))?
                    .strands();
                let factors = f
                    .factors()
                    .iter()
                    .map(|e| ctx.braid_word(e).ok_or(Error::UnsupportedInvariant("van-kampen")))
                    .collect::<Result<Vec<_>>>()?;
                let input = MonodromyInput::new(strands, factors, false)?;
                let p = vankampen::presentation(&input)?;
                InvariantValue::VanKampen {
                    fingerprint: vankampen::fingerprint(&p, config)?,
                }
            }
        };
        entries.push((mode.name().to_string(), value));
    }
    Ok(InvariantRecord { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::{BraidGroup, Direction, FreeGroup, McgGroup, SymmetricGroup};
    use crate::perm::Permutation;

    #[test]
    fn class_multiset_is_move_invariant_in_s3() {
        let f = Factorization::parse(SymmetricGroup::new(3), &["(1 2)", "(2 3)", "(1 2)"]).unwrap();
        let modes = [InvariantMode::QuotientClasses];
        let base = invariants(&f, &modes).unwrap();
        // oracle: the multiset of cycle types of three transpositions
        match base.get("quotient-classes").unwrap() {
            InvariantValue::QuotientClasses { factors, .. } => {
                assert_eq!(factors, &vec!["[2,1]".to_string(); 3]);
            }
            other => panic!("unexpected {other:?}"),
        }
        for i in 1..3 {
            for d in [Direction::Forward, Direction::Inverse] {
                let g = f.hurwitz_move(i, d).unwrap();
                assert_eq!(invariants(&g, &modes).unwrap(), base);
            }
        }
    }

    #[test]
    fn product_key_behaviour() {
        let ctx = SymmetricGroup::new(3);
        let f = Factorization::parse(ctx.clone(), &["(1 2)", "(2 3)"]).unwrap();
        let modes = [InvariantMode::Length, InvariantMode::ProductKey];
        let base = invariants(&f, &modes).unwrap();
        let moved = f.hurwitz_move(1, Direction::Forward).unwrap();
        assert_eq!(invariants(&moved, &modes).unwrap(), base);
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let conj = f.simultaneous_conjugate(&b);
        let expected = ctx.conjugate(f.product(), &b).to_string();
        assert_eq!(
            invariants(&conj, &modes).unwrap().get("product"),
            Some(&InvariantValue::Product { key: expected })
        );
        assert_ne!(invariants(&conj, &modes).unwrap(), base);
    }

    #[test]
    fn missing_structure_is_an_error() {
        let f = Factorization::parse(FreeGroup::new(2), &["g1", "g2"]).unwrap();
        assert_eq!(
            invariants(&f, &[InvariantMode::QuotientClasses]),
            Err(Error::UnsupportedInvariant("quotient-classes"))
        );
        assert!(invariants(&f, &[InvariantMode::VanKampen(FingerprintConfig::default())]).is_err());
        let m = Factorization::parse(McgGroup::new(2), &["x1"]).unwrap();
        assert!(invariants(&m, &[InvariantMode::VanKampen(FingerprintConfig::default())]).is_err());
    }

    #[test]
    fn van_kampen_mode_on_braids() {
        let f = Factorization::parse(BraidGroup::new(2), &["s1"]).unwrap();
        let rec = invariants(&f, &[InvariantMode::VanKampen(FingerprintConfig::default())]).unwrap();
        match rec.get("van-kampen").unwrap() {
            InvariantValue::VanKampen { fingerprint } => assert_eq!(fingerprint.abelianization, vec![0]),
            other => panic!("unexpected {other:?}"),
        }
    }
}
