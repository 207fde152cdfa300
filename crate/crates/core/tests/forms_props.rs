mod common;

use chiral_core::{
    cyclic_isometric, determinant, factorize, group_from_presentation, linking_form_from_seifert, BigInt, BigUint,
    CyclicLinkingForm, IntMatrix,
};
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random Seifert matrices whose determinant is at most `max_det`.
fn small_seifert(seed: u64, max_det: u64) -> Option<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let genus = if seed.is_multiple_of(3) { 2 } else { 1 };
    let a = common::random_seifert(&mut rng, genus, 4);
    let det = determinant(&a.symmetrized().unwrap()).unwrap().abs();
    (det <= BigInt::from(max_det)).then_some(a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_order_is_determinant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_seifert(&mut rng, 1 + (seed % 3) as usize, 9);
        let m = a.symmetrized().unwrap();
        let g = group_from_presentation(&m).unwrap();
        let det = determinant(&m).unwrap().abs().to_biguint().unwrap();
        prop_assert_eq!(g.order(), det.clone());

        let f = factorize(&det).unwrap();
        let mut product = BigUint::one();
        for p in f.primes() {
            let part = g.primary_part(p).unwrap();
            prop_assert_eq!(part.length(), f.multiplicity(p));
            prop_assert_eq!(part.to_group().primary_part(p).unwrap(), part.clone());
            product *= part.order();
        }
        prop_assert_eq!(product, g.order());
    }

    #[test]
    fn group_invariant_under_unimodular_congruence(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_seifert(&mut rng, 2, 5);
        let p = common::random_unimodular(&mut rng, 4);
        let b = p.transpose().mul(&a).unwrap().mul(&p).unwrap();
        let ga = group_from_presentation(&a.symmetrized().unwrap()).unwrap();
        let gb = group_from_presentation(&b.symmetrized().unwrap()).unwrap();
        prop_assert_eq!(ga, gb);
    }

    #[test]
    fn forms_are_nonsingular_with_nonsingular_restrictions(seed in any::<u64>()) {
        let Some(a) = small_seifert(seed, 400) else { return Ok(()) };
        let form = linking_form_from_seifert(&a).unwrap();
        prop_assert!(form.is_nonsingular());
        prop_assert!(common::adjoint_injective_brute_force(&form));
        for p in form.group().order_factorization().unwrap().primes() {
            let part = form.restrict_to_primary(p).unwrap();
            prop_assert!(part.is_nonsingular());
            prop_assert!(common::adjoint_injective_brute_force(&part));
        }
    }

    #[test]
    fn restriction_matches_brute_force_subgroup(seed in any::<u64>()) {
        let Some(a) = small_seifert(seed, 2000) else { return Ok(()) };
        let form = linking_form_from_seifert(&a).unwrap();
        let orders = common::orders(&form);
        let all = common::elements(&orders);
        for p in form.group().order_factorization().unwrap().primes() {
            let part = form.restrict_to_primary(p).unwrap();
            prop_assert_eq!(part.group().order(), BigUint::from(all.iter().filter(|x| common::in_primary_part(x, &orders, p)).count()));
            if part.rank() != 1 {
                continue;
            }
            // Any generator of the cyclic p-part found by enumeration gives
            // an isometric form to the restriction.
            let q = part.group().order().to_u64().unwrap();
            let generator = all
                .iter()
                .find(|x| common::in_primary_part(x, &orders, p) && common::element_order(x, &orders) == q)
                .unwrap();
            let self_pairing = common::pairing(&form, generator, generator);
            let k = (self_pairing * BigInt::from(q)).to_integer();
            let n = part.group().order_factorization().unwrap().multiplicity(p);
            let brute = CyclicLinkingForm::new(p, n, k).unwrap();
            prop_assert!(cyclic_isometric(&part.cyclic_parameter().unwrap(), &brute));
        }
    }

    #[test]
    fn negation_is_an_involution(seed in any::<u64>()) {
        let Some(a) = small_seifert(seed, 10_000) else { return Ok(()) };
        let form = linking_form_from_seifert(&a).unwrap();
        prop_assert_eq!(form.negate().negate(), form.clone());
        let mirror = a.transpose().map(|e| -e);
        let mirrored = linking_form_from_seifert(&mirror).unwrap();
        prop_assert_eq!(mirrored.group(), form.group());
    }
}

/// Distinct primary parts are orthogonal, checked over every pair of elements.
#[test]
fn primary_parts_are_orthogonal() {
    let mut checked = 0;
    let mut seed = 0u64;
    while checked < 40 {
        seed += 1;
        let Some(a) = small_seifert(seed, 10_000) else { continue };
        let form = linking_form_from_seifert(&a).unwrap();
        let primes: Vec<u64> = form.group().order_factorization().unwrap().primes().collect();
        if primes.len() < 2 {
            continue;
        }
        let orders = common::orders(&form);
        let all = common::elements(&orders);
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                let hp: Vec<_> = all.iter().filter(|x| common::in_primary_part(x, &orders, p)).collect();
                let hq: Vec<_> = all.iter().filter(|x| common::in_primary_part(x, &orders, q)).collect();
                for x in &hp {
                    for y in &hq {
                        assert!(common::pairing(&form, x, y).is_zero(), "{a}: λ({x:?}, {y:?}) ≠ 0");
                        assert!(form.value(&common::to_big(x), &common::to_big(y)).is_zero());
                    }
                }
            }
        }
        checked += 1;
    }
}

#[test]
fn cyclic_isometry_is_an_equivalence() {
    for p in common::primes_up_to(100).into_iter().skip(1) {
        let mut q = p;
        let mut n = 1;
        while q <= 100 {
            let forms: Vec<_> =
                (1..q).filter(|k| k % p != 0).map(|k| CyclicLinkingForm::new(p, n, k).unwrap()).collect();
            let squares: Vec<bool> = (0..q).map(|a| common::is_unit_square_brute_force(a, q, p)).collect();
            for f in &forms {
                assert!(cyclic_isometric(f, f));
                for g in &forms {
                    assert_eq!(cyclic_isometric(f, g), cyclic_isometric(g, f));
                    // Exactly two classes, split by the square class of k.
                    let same = squares[((f.unit().to_u64().unwrap() * g.unit().to_u64().unwrap()) % q) as usize];
                    assert_eq!(cyclic_isometric(f, g), same, "{f} vs {g}");
                }
            }
            q *= p;
            n += 1;
        }
    }
}

#[test]
fn two_primary_cyclic_forms() {
    for n in 1..=6u32 {
        let q = 1u64 << n;
        for k in (1..q).step_by(2) {
            for l in (1..q).step_by(2) {
                let f = CyclicLinkingForm::new(2, n, k).unwrap();
                let g = CyclicLinkingForm::new(2, n, l).unwrap();
                let brute = (1..q).step_by(2).any(|r| (k * r * r) % q == l);
                assert_eq!(cyclic_isometric(&f, &g), brute, "{f} vs {g}");
            }
        }
    }
}
