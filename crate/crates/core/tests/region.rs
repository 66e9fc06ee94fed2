mod common;

use lozenge::counting::count_bruteforce;
use lozenge::lattice::Region;
use lozenge::region::*;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn hexagon_has_expected_triangle_counts() {
    for (a, b, c) in [(1, 1, 1), (3, 4, 2), (0, 2, 5)] {
        let r = build_region(&DentedHexParams::hexagon(a, b, c));
        let n = (a * b + b * c + c * a) as usize;
        assert_eq!((r.up_count(), r.down_count()), (n, n));
    }
}

#[test]
fn splitting_above_a_line_multiplies() {
    let p = DentedHexParams::new(2, 2, 2, 2, vec![1], vec![2]).unwrap();
    let r = build_region(&p);
    let mut found = false;
    for line in 1..p.height() {
        let part = cells_above_line(&r, line);
        if check_split(&r, &part) == SplitVerdict::Multiplicative {
            let north: Region = part.iter().copied().collect();
            let south = r.without(part.iter());
            assert_eq!(count_bruteforce(&r), count_bruteforce(&north) * count_bruteforce(&south));
            found = true;
        }
    }
    assert!(found);
}

#[test]
fn tileability_criterion_examples() {
    let p = DentedHexParams::new(2, 2, 2, 2, vec![1], vec![1]).unwrap();
    assert_eq!(first_violation(&p).unwrap(), Some(1));
    assert!(count_bruteforce(&build_region(&p)).is_zero());
    let p = DentedHexParams::new(2, 2, 2, 2, vec![1], vec![2]).unwrap();
    assert!(is_tileable(&p).unwrap());
    let p = DentedHexParams::new(2, 2, 2, 3, vec![1], vec![2]).unwrap();
    assert!(matches!(is_tileable(&p), Err(ParamError::Unbalanced { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn tileable_iff_positive_count(p in common::balanced(3, 3, 3)) {
        prop_assert_eq!(is_tileable(&p).unwrap(), !count_bruteforce(&build_region(&p)).is_zero());
    }

    #[test]
    fn balance_matches_dent_count(p in common::params(2, 3, 3, 1)) {
        let r = build_region(&p);
        prop_assert_eq!(r.is_balanced(), p.t() == p.m() + p.n());
        prop_assert_eq!(r.balance(), p.t() as i64 - p.m() as i64 - p.n() as i64);
    }

    #[test]
    fn reduction_preserves_count(p in common::balanced(3, 3, 3)) {
        let r = build_region(&p);
        let before = count_bruteforce(&r);
        match reduce_forced(&r) {
            Ok(red) => {
                prop_assert_eq!(red.forced.len() * 2 + red.region.len(), r.len());
                prop_assert_eq!(count_bruteforce(&red.region), before);
            }
            Err(_) => prop_assert!(before.is_zero()),
        }
    }

    #[test]
    fn mirror_preserves_count(p in common::balanced(3, 3, 3)) {
        let q = p.mirrored();
        prop_assert!(build_region(&q).congruent(&build_region(&p).mirrored()));
        prop_assert_eq!(count_bruteforce(&build_region(&q)), count_bruteforce(&build_region(&p)));
    }

    #[test]
    fn split_verdicts_are_sound(p in common::balanced(2, 3, 3)) {
        let r = build_region(&p);
        let total = count_bruteforce(&r);
        for line in 1..p.height() {
            let part = cells_above_line(&r, line);
            let north: Region = part.iter().copied().collect();
            let south = r.without(part.iter());
            match check_split(&r, &part) {
                SplitVerdict::Multiplicative =>
                    prop_assert_eq!(&total, &(count_bruteforce(&north) * count_bruteforce(&south))),
                SplitVerdict::Zero => prop_assert!(total.is_zero()),
                SplitVerdict::NotApplicable => {}
            }
        }
    }
}
