use monodromy_core::factorization::{
    invariants, BraidGroup, CuspidalFactor, CuspidalFactorization, InvariantMode, InvariantValue,
};
use monodromy_core::freegroup::GroupPresentation;
use monodromy_core::vankampen::{
    abelianization, count_homs, fingerprint, presentation, tietze_simplify, FingerprintConfig, MonodromyInput,
};
use monodromy_core::{BraidWord, Direction, Factorization, FreeWord, GroupContext};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn cuspidal_b3(max: usize) -> impl Strategy<Value = CuspidalFactorization> {
    let factor = (
        prop::collection::vec(prop::sample::select(vec![1i32, 2, -1, -2]), 0..3),
        1u8..=3,
    )
        .prop_map(|(w, e)| CuspidalFactor::new(BraidWord::from_signed(3, &w).unwrap(), e).unwrap());
    prop::collection::vec(factor, 1..=max).prop_map(|f| CuspidalFactorization::new(3, f).unwrap())
}

fn print(f: &Factorization<BraidGroup>) -> InvariantValue {
    let config = FingerprintConfig {
        degrees: vec![2, 3],
        simplify_effort: 16,
    };
    let rec = invariants(f, &[InvariantMode::VanKampen(config)]).unwrap();
    rec.entries[0].1.clone()
}

/// Determinant of a small integer matrix by cofactor expansion.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for c in 0..m.len() {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|first| {
            subsets(n, k - 1)
                .into_iter()
                .filter(move |rest| rest.first().is_none_or(|&r| r > first))
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Invariant factors from determinantal divisors `d_k = gcd of k×k minors`.
fn naive_invariant_factors(rows: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=rows.len().min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows.len(), k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                g = g.gcd(&det(&sub).abs());
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    let rank = divisors.len() - 1;
    let mut out: Vec<u64> = divisors
        .windows(2)
        .map(|w| (&w[1] / &w[0]).try_into().unwrap())
        .filter(|&x: &u64| x != 1)
        .collect();
    out.extend(std::iter::repeat_n(0, cols - rank));
    out
}

fn small_presentation() -> impl Strategy<Value = GroupPresentation> {
    (1usize..=3).prop_flat_map(|n| {
        let letter = prop::sample::select((1..=n as i32).flat_map(|g| [g, -g]).collect::<Vec<_>>());
        prop::collection::vec(prop::collection::vec(letter, 1..6), 0..3).prop_map(move |rels| {
            GroupPresentation::new(n, rels.iter().map(|r| FreeWord::from_signed(r)).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fingerprint_is_hurwitz_invariant(c in cuspidal_b3(4), i in 1usize..4, fwd in any::<bool>(), by in 1u32..3) {
        let f = c.to_factorization();
        let base = print(&f);
        if i < f.len() {
            let d = if fwd { Direction::Forward } else { Direction::Inverse };
            prop_assert_eq!(print(&f.hurwitz_move(i, d).unwrap()), base.clone());
        }
        let b = BraidWord::generator(3, by).unwrap();
        prop_assert_eq!(print(&f.simultaneous_conjugate(&b)), base.clone());
        prop_assert_eq!(print(&f.simultaneous_conjugate(&f.context().invert(&b))), base);
    }

    #[test]
    fn abelianization_matches_determinantal_divisors(
        rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 1..=4),
        cols in 1usize..=4,
    ) {
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..cols].to_vec()).collect();
        let relators: Vec<FreeWord> = rows
            .iter()
            .map(|r| {
                let letters: Vec<i32> = r
                    .iter()
                    .enumerate()
                    .flat_map(|(g, &e)| std::iter::repeat_n(if e > 0 { g as i32 + 1 } else { -(g as i32 + 1) }, e.unsigned_abs() as usize))
                    .collect();
                FreeWord::from_signed(&letters)
            })
            .collect();
        let p = GroupPresentation::new(cols, relators).unwrap();
        prop_assert_eq!(abelianization(&p), naive_invariant_factors(&rows, cols));
    }

    #[test]
    fn simplification_keeps_fingerprints(p in small_presentation()) {
        let s = tietze_simplify(&p, 8);
        prop_assert!(s.generators() <= p.generators());
        prop_assert_eq!(abelianization(&s), abelianization(&p));
        for k in 2..=4 {
            prop_assert_eq!(count_homs(&s, k).unwrap(), count_homs(&p, k).unwrap());
        }
    }
}

#[test]
fn regenerated_and_raw_cusp_inputs_differ() {
    // a single cusp in B_2 gives <a, b | aba = bab>, its regeneration a smooth curve
    let cusp = CuspidalFactorization::new(2, vec![CuspidalFactor::new(BraidWord::identity(2), 3).unwrap()]).unwrap();
    let raw = presentation(&MonodromyInput::from_cuspidal(&cusp, false)).unwrap();
    let regen = presentation(&MonodromyInput::from_factorization(&cusp.regenerate(), false)).unwrap();
    let config = FingerprintConfig::default();
    let a = fingerprint(&raw, &config).unwrap();
    let b = fingerprint(&regen, &config).unwrap();
    assert_eq!(a.abelianization, vec![0]);
    assert_eq!(b.abelianization, vec![0]);
    // the braid group B_3 surjects onto S_3, Z does not
    assert!(a.hom_counts[&3] > b.hom_counts[&3]);
}
