//! Property tests for the structural invariants that lend themselves to
//! randomized inputs: parsing round trips, the arc calculus, crossing-test
//! consistency, and canonical rotations.

use proptest::prelude::*;

use starfact::noncross::{
    canonical_necklace, count_lnc, enumerate_lnc, is_noncrossing_cyclic, LabeledPartition,
    PresentedNecklace, TypeVector,
};
use starfact::perm::{falling_factorial, is_excerpt, merge_cycles, slice_cycle, Cycle, Permutation};

fn permutation_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_one_line(&images).expect("valid one-line word"))
    })
}

fn cycle_strategy(max_len: usize) -> impl Strategy<Value = Cycle> {
    (1..=max_len).prop_flat_map(move |len| {
        Just((1..=(2 * max_len)).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(move |pool| Cycle::new(pool[..len].to_vec()).expect("distinct elements"))
    })
}

proptest! {
    #[test]
    fn parse_inverts_display(p in permutation_strategy(10)) {
        let text = p.to_string();
        let back = Permutation::parse(&text, None).expect("canonical output parses");
        prop_assert_eq!(back, p);
    }

    #[test]
    fn canonicalization_is_rotation_invariant(c in cycle_strategy(6), rot in 0usize..6) {
        let mut word = c.elements().to_vec();
        let len = word.len();
        word.rotate_left(rot % len);
        prop_assert_eq!(Cycle::new(word).unwrap(), c);
    }

    #[test]
    fn slice_then_merge_recreates_cycle(c in cycle_strategy(6), raw_cuts in proptest::collection::vec(1usize..=6, 1..4)) {
        let len = c.len();
        let cuts: Vec<usize> = raw_cuts.into_iter().map(|g| 1 + (g - 1) % len).collect();
        let arcs = slice_cycle(&c, &cuts).unwrap();
        for arc in &arcs {
            prop_assert!(is_excerpt(arc, &c));
            prop_assert!(arc.elements().iter().all(|x| c.contains(*x)));
        }
        // Rebuild by walking the cyclic word: the arcs in slicing order
        // concatenate to a rotation of the original word. Re-merge them
        // innermost-first through merge_cycles using the arc words.
        let mut sorted_cuts: Vec<usize> = cuts.clone();
        sorted_cuts.sort_unstable();
        sorted_cuts.dedup();
        let words: Vec<Vec<usize>> = sorted_cuts
            .iter()
            .enumerate()
            .map(|(i, &g)| {
                let next = sorted_cuts[(i + 1) % sorted_cuts.len()];
                let span = if sorted_cuts.len() == 1 { len } else { (next + len - g) % len };
                (0..span).map(|o| c.elements()[(g + o) % len]).collect()
            })
            .collect();
        let mut acc = words[0].clone();
        for word in &words[1..] {
            let host = Cycle::new(acc.clone()).unwrap();
            let block = Cycle::new(word.clone()).unwrap();
            // Insert the next arc right after the accumulated word's end.
            let gap = host
                .elements()
                .iter()
                .position(|&x| x == *acc.last().unwrap())
                .unwrap()
                + 1;
            let rotation = block
                .elements()
                .iter()
                .position(|&x| x == word[0])
                .unwrap()
                + 1;
            let merged = merge_cycles(&block, rotation, &host, gap).unwrap();
            acc = {
                // Read the merged word back starting from acc's first element.
                let start = merged
                    .elements()
                    .iter()
                    .position(|&x| x == acc[0])
                    .unwrap();
                (0..merged.len())
                    .map(|o| merged.elements()[(start + o) % merged.len()])
                    .collect()
            };
        }
        prop_assert_eq!(Cycle::new(acc).unwrap(), c);
    }

    #[test]
    fn cyclic_crossing_matches_linear_partition_test(word in proptest::collection::vec(1usize..=4, 1..10)) {
        // A cyclic word is noncrossing exactly when the partition of its
        // positions by label is linearly noncrossing from every cut point.
        let cyclic = is_noncrossing_cyclic(&word);
        let len = word.len();
        for cut in 0..len {
            let rotated: Vec<usize> = (0..len).map(|o| word[(cut + o) % len]).collect();
            let labels: Vec<usize> = {
                let mut seen = Vec::new();
                for &l in &rotated {
                    if !seen.contains(&l) {
                        seen.push(l);
                    }
                }
                seen
            };
            let parts: Vec<Vec<usize>> = labels
                .iter()
                .map(|&l| {
                    (0..len)
                        .filter(|&q| rotated[q] == l)
                        .map(|q| q + 1)
                        .collect()
                })
                .collect();
            let partition = LabeledPartition::new(len, parts).unwrap();
            prop_assert_eq!(
                starfact::noncross::is_noncrossing_partition(&partition),
                cyclic,
                "cut {} of {:?}", cut, word
            );
        }
    }

    #[test]
    fn canonical_necklace_is_least_rotation(word in proptest::collection::vec(1usize..=4, 1..10)) {
        let necklace = canonical_necklace(&PresentedNecklace::new(word.clone()));
        let len = word.len();
        let mut best = word.clone();
        for start in 1..len {
            let rotation: Vec<usize> = (0..len).map(|o| word[(start + o) % len]).collect();
            if rotation < best {
                best = rotation;
            }
        }
        prop_assert_eq!(necklace.word(), &best[..]);
        let again = canonical_necklace(&PresentedNecklace::new(necklace.word().to_vec()));
        prop_assert_eq!(again.word(), necklace.word());
    }

    #[test]
    fn lnc_count_is_symmetric_in_the_type(sizes in proptest::collection::vec(1usize..=3, 1..4)) {
        let x = TypeVector::new(sizes.clone()).unwrap();
        let mut reversed = sizes.clone();
        reversed.reverse();
        let y = TypeVector::new(reversed).unwrap();
        prop_assert_eq!(count_lnc(&x), count_lnc(&y));
        if x.total() <= 7 {
            prop_assert_eq!(enumerate_lnc(&x).unwrap().len(), enumerate_lnc(&y).unwrap().len());
        }
    }

    #[test]
    fn falling_factorial_recurrence(a in -6i64..12, b in 0u64..6) {
        let direct = falling_factorial(a, b + 1);
        let step = falling_factorial(a, b) * num_bigint::BigInt::from(a - b as i64);
        prop_assert_eq!(direct, step);
    }
}
