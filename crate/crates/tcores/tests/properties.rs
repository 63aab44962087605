//! Property tests for the algebraic invariants: conjugation, the coding
//! maps, canonical vector classes, form reduction, and the constrained
//! representation enumerator.

use proptest::prelude::*;

use tcores::forms::QuadForm;
use tcores::ncoding::{size_from_ncoding, NCoding};
use tcores::partition::Partition;
use tcores::squares::{
    alpha_inverse, alpha_map, canonical_bkm, canonical_os, enumerate_reps,
    enumerate_reps_sequential, squares_to_tcore, tcore_to_squares,
};

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=12, 0..=10).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn arb_coding() -> impl Strategy<Value = NCoding> {
    (2usize..=8, prop::collection::vec(-5i64..=5, 8)).prop_map(|(t, raw)| {
        let mut entries: Vec<i64> = raw.into_iter().take(t - 1).collect();
        let sum: i64 = entries.iter().sum();
        entries.push(-sum);
        NCoding::new(entries).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution_preserving_hooks(lambda in arb_partition()) {
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.conjugate(), lambda.clone());
        prop_assert_eq!(conj.size(), lambda.size());
        prop_assert_eq!(conj.hook_multiset(), lambda.hook_multiset());
        for t in 2..=5u32 {
            prop_assert_eq!(conj.is_t_core(t), lambda.is_t_core(t));
        }
    }

    #[test]
    fn coding_maps_invert(coding in arb_coding()) {
        prop_assert_eq!(coding.conjugate().conjugate(), coding.clone());
        prop_assert_eq!(alpha_inverse(&alpha_map(&coding)).unwrap(), coding.clone());
        prop_assert_eq!(squares_to_tcore(&tcore_to_squares(&coding)).unwrap(), coding.clone());

        // The doubled map is zero-sum with the stated square sum.
        let t = coding.t() as i64;
        let n = size_from_ncoding(&coding) as i64;
        let w = alpha_map(&coding);
        prop_assert_eq!(w.values().iter().sum::<i64>(), 0);
        prop_assert_eq!(w.target(), 8 * t * n + t * (t * t - 1) / 3);

        // Anti-symmetry of the image characterizes self-conjugacy.
        let anti = (0..t as usize)
            .all(|k| w.values()[k] == -w.values()[t as usize - 1 - k]);
        prop_assert_eq!(anti, coding.is_self_conjugate());
    }

    #[test]
    fn os_class_invariant_under_allowed_moves(
        x in -30i64..=30,
        y in -30i64..=30,
        z in -30i64..=30,
        perm in 0usize..6,
        pair in 0usize..3,
    ) {
        let v = [x, y, z];
        let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let p = orders[perm];
        let mut w = [v[p[0]], v[p[1]], v[p[2]]];
        let flips = [[0, 1], [0, 2], [1, 2]][pair];
        w[flips[0]] = -w[flips[0]];
        w[flips[1]] = -w[flips[1]];
        prop_assert_eq!(canonical_os(x, y, z), canonical_os(w[0], w[1], w[2]));
        prop_assert_eq!(
            canonical_os(x, y, z).project_bkm().values().to_vec(),
            canonical_bkm(&[w[0], w[1], w[2]])
        );
    }

    #[test]
    fn bkm_class_invariant_under_signs_and_order(
        v in prop::collection::vec(-40i64..=40, 1..=6),
        flips in prop::collection::vec(any::<bool>(), 6),
        seed in any::<u64>(),
    ) {
        let mut w: Vec<i64> = v
            .iter()
            .zip(flips.iter().chain(std::iter::repeat(&false)))
            .map(|(&val, &f)| if f { -val } else { val })
            .collect();
        // Cheap deterministic shuffle.
        let len = w.len();
        for i in 0..len {
            let j = (seed as usize).wrapping_mul(31).wrapping_add(i * 7) % len;
            w.swap(i, j);
        }
        prop_assert_eq!(canonical_bkm(&v), canonical_bkm(&w));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn reduction_is_idempotent_and_preserves_discriminant(
        a in 1i64..=50,
        b in -50i64..=50,
        c in 1i64..=50,
    ) {
        prop_assume!(b * b - 4 * a * c < 0);
        let form = QuadForm::new(a, b, c).unwrap();
        let reduced = form.reduce();
        prop_assert!(reduced.is_reduced());
        prop_assert_eq!(reduced.discriminant(), form.discriminant());
        prop_assert_eq!(reduced.reduce(), reduced);
        // Inversion is an involution on classes.
        prop_assert_eq!(reduced.inverse().inverse(), reduced);
    }
}

proptest! {
    #[test]
    fn enumerated_representations_satisfy_their_constraints(
        target in 0i64..=60,
        modulus in 1i64..=4,
        raw_residues in prop::collection::vec(prop::collection::vec(0i64..=3, 1..=2), 1..=3),
        with_sum in any::<bool>(),
        sum in -6i64..=6,
    ) {
        let residues: Vec<Vec<i64>> = raw_residues
            .iter()
            .map(|cands| cands.iter().map(|r| r.rem_euclid(modulus)).collect())
            .collect();
        let linear = if with_sum { Some(sum) } else { None };
        let found = enumerate_reps(target, modulus, &residues, linear);
        prop_assert_eq!(&found, &enumerate_reps_sequential(target, modulus, &residues, linear));
        for v in &found {
            prop_assert_eq!(v.len(), residues.len());
            prop_assert_eq!(v.iter().map(|x| x * x).sum::<i64>(), target);
            for (x, classes) in v.iter().zip(&residues) {
                prop_assert!(classes.iter().any(|r| (x - r).rem_euclid(modulus) == 0));
            }
            if let Some(s) = linear {
                prop_assert_eq!(v.iter().sum::<i64>(), s);
            }
        }
        // Ascending and duplicate-free.
        prop_assert!(found.windows(2).all(|w| w[0] < w[1]));
    }
}
