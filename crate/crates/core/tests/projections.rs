mod common;

use common::balanced_strings;
use dyck4d::{all_modifications, lift, parse_word, project, sample_uniform, word_to_path, AxisSet};
use proptest::prelude::*;

#[test]
fn every_modification_lifts_back_exhaustively() {
    let mods = all_modifications();
    assert_eq!(mods.len(), 11);
    for n in 0..=6 {
        for s in balanced_strings(n) {
            let path = word_to_path(&parse_word(&s).unwrap());
            for &axes in &mods {
                let proj = project(&path, axes);
                assert_eq!(proj.points.len(), path.nodes().len());
                assert!(proj.points[0].iter().all(|&c| c == 0));
                assert_eq!(lift(&proj).unwrap(), path, "{s} on {axes}");
            }
        }
    }
}

#[test]
fn monotonic_image_stays_below_the_diagonal() {
    for n in 0..=6 {
        for s in balanced_strings(n) {
            let proj = project(&word_to_path(&parse_word(&s).unwrap()), AxisSet::LR);
            assert!(proj.points.iter().all(|p| p[0] >= p[1]));
        }
    }
}

#[test]
fn json_round_trip_through_lift() {
    let path = word_to_path(&parse_word("(()(()))()").unwrap());
    for axes in all_modifications() {
        let json = serde_json::to_string(&project(&path, axes)).unwrap();
        let back = serde_json::from_str(&json).unwrap();
        assert_eq!(lift(&back).unwrap(), path);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_long_paths_lift_back(n in 0u64..=100, seed in any::<u64>(), which in 0usize..11) {
        let path = word_to_path(&sample_uniform(n, seed));
        let axes = all_modifications()[which];
        prop_assert_eq!(lift(&project(&path, axes)).unwrap(), path);
    }
}
