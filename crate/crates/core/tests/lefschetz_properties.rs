use monodromy_core::lefschetz::{Base, LefschetzFibration, TwistFactor};
use monodromy_core::mcg::ChainCurves;
use monodromy_core::{Letter, McgWord};
use proptest::prelude::*;

fn word(g: usize, max: usize) -> impl Strategy<Value = McgWord> {
    let top = 2 * g as u32 + 1;
    (any::<bool>(), prop::collection::vec((1..=top, any::<bool>()), 0..=max))
        .prop_map(move |(h, ls)| McgWord::new(g, h, ls.into_iter().map(|(i, inv)| Letter::new(i, inv))).unwrap())
}

/// A disk fibration whose φ is the literal product of its factors, so it
/// validates in every representation.
fn disk(g: usize) -> impl Strategy<Value = LefschetzFibration> {
    prop::collection::vec((word(g, 3), prop::sample::select(vec![1i8, -1])), 0..=4).prop_map(move |fs| {
        let factors: Vec<TwistFactor> = fs.into_iter().map(|(c, o)| TwistFactor::new(c, o).unwrap()).collect();
        let phi = factors
            .iter()
            .fold(McgWord::identity(g), |acc, f| acc.multiply(&f.word()).unwrap());
        LefschetzFibration::new(g, Base::Disk, phi, factors).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fiber_sum_is_associative_for_trivial_gluing(a in disk(2), b in disk(2), c in disk(2)) {
        let id = McgWord::identity(2);
        let left = a.fiber_sum(&b, &id).unwrap().fiber_sum(&c, &id).unwrap();
        let right = a.fiber_sum(&b.fiber_sum(&c, &id).unwrap(), &id).unwrap();
        prop_assert_eq!(left.factors(), right.factors());
        prop_assert!(left.factorization().same_factors(&right.factorization()));
    }

    #[test]
    fn fiber_sum_preserves_validity(a in disk(2), b in disk(2), psi in word(2, 4)) {
        prop_assert!(a.validate().all_hold());
        prop_assert!(b.validate().all_hold());
        let s = a.fiber_sum(&b, &psi).unwrap();
        prop_assert!(s.validate().all_hold());
        prop_assert_eq!(s.is_symplectic_type(), a.is_symplectic_type() && b.is_symplectic_type());
        let chain = ChainCurves::standard(2);
        let image = |w: &McgWord| w.symplectic_rep(&chain);
        let psi_inv = psi.invert();
        let expected = &(&(&image(a.phi()) * &image(&psi_inv)) * &image(b.phi())) * &image(&psi);
        prop_assert_eq!(image(s.factorization().product()), expected);
    }
}
