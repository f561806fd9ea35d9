mod oracle;

use std::collections::BTreeSet;

use yangmul::search::{search_bs, search_bs_pruned, SearchSpec};
use yangmul::seq::bs_verify;
use yangmul::BaseSeqQuad;

fn as_set(found: &[BaseSeqQuad]) -> BTreeSet<[Vec<i64>; 4]> {
    found
        .iter()
        .map(|q| q.seqs().clone().map(|s| s.into_entries()))
        .collect()
}

#[test]
fn engines_match_enumeration_oracle() {
    for m in 1..=4 {
        for n in 1..=m.min(3) {
            let spec = SearchSpec::new(m, n);
            let naive = search_bs(&spec).unwrap();
            let pruned = search_bs_pruned(&spec).unwrap();
            let expected = oracle::enumerate_bs(m, n);
            assert_eq!(as_set(&naive), expected, "naive BS({m},{n})");
            assert_eq!(as_set(&pruned), expected, "pruned BS({m},{n})");
            assert_eq!(naive, pruned, "order BS({m},{n})");
        }
    }
}

#[test]
fn bs22_count_matches_full_enumeration() {
    let expected = oracle::enumerate_bs(2, 2).len();
    assert_eq!(search_bs(&SearchSpec::new(2, 2)).unwrap().len(), expected);
}

#[test]
fn results_are_sound_and_sorted() {
    let found = search_bs_pruned(&SearchSpec::new(4, 3)).unwrap();
    let keys: Vec<String> = found
        .iter()
        .map(|q| q.seqs().iter().map(|s| s.to_string()).collect::<String>())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for q in found {
        let [a, b, c, d] = q.seqs().clone();
        assert!(bs_verify(a, b, c, d, 4, 3).is_ok());
    }
}

#[test]
fn adjacent_sizes_are_nonempty() {
    for n in 1..=3 {
        assert!(!search_bs_pruned(&SearchSpec::new(n + 1, n)).unwrap().is_empty(), "BS({},{n})", n + 1);
    }
}

#[test]
fn symmetry_reduction_picks_one_per_orbit() {
    for (m, n) in [(2, 1), (3, 2), (3, 3)] {
        let full = as_set(&search_bs_pruned(&SearchSpec::new(m, n)).unwrap());
        let reduced = search_bs_pruned(&SearchSpec::new(m, n).with_symmetry_reduction(true)).unwrap();
        // Every full solution lies in the orbit of exactly one representative.
        let mut covered = BTreeSet::new();
        for rep in &reduced {
            let base = rep.seqs().clone().map(|s| s.into_entries());
            for reverse in [false, true] {
                for mask in 0..16u8 {
                    let image: [Vec<i64>; 4] = std::array::from_fn(|k| {
                        let sign = if mask >> k & 1 == 1 { -1 } else { 1 };
                        let mut s: Vec<i64> = base[k].iter().map(|v| sign * v).collect();
                        if reverse {
                            s.reverse();
                        }
                        s
                    });
                    assert!(full.contains(&image));
                    covered.insert(image);
                }
            }
        }
        assert_eq!(covered, full);
        let orbit_total: usize = reduced.len();
        assert!(orbit_total < full.len());
    }
}

#[test]
fn larger_instance_is_nonempty() {
    // Count is recorded, not predicted.
    let found = search_bs_pruned(&SearchSpec::new(7, 6).with_symmetry_reduction(true)).unwrap();
    assert!(!found.is_empty());
    eprintln!("BS(7,6) canonical representatives: {}", found.len());
}
