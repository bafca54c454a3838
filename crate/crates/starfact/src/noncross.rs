//! Crossing tests on cyclic words and set partitions, labeled noncrossing
//! partitions and necklaces of a prescribed type, and their exact counts.
//!
//! A *labeled noncrossing partition* of type `x = (x_1, …, x_m)` is a
//! noncrossing set partition of `[x_1 + ⋯ + x_m]` whose `i`-th part has
//! size `x_i` and carries label `i`. Reading the labels around the circle
//! gives a cyclic word; quotienting by rotation gives *labeled noncrossing
//! necklaces*.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm::{falling_factorial, Permutation};
use crate::star::CycleWord;
use crate::words::{enumerate_pattern_free_words, format_word};

/// Largest ground-set size accepted by the enumeration routines.
pub const MAX_ENUM_GROUND: usize = 12;

/// Prescribed part sizes `(x_1, …, x_m)`, all positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector {
    sizes: Vec<usize>,
}

impl TypeVector {
    pub fn new(sizes: Vec<usize>) -> Result<TypeVector> {
        if sizes.is_empty() {
            return Err(Error::Parse("type vector must be nonempty".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::ZeroElement);
        }
        Ok(TypeVector { sizes })
    }

    /// Parses a comma list such as `"3,4,2,2"`.
    pub fn parse(text: &str) -> Result<TypeVector> {
        let sizes = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("not an integer: \"{t}\"")))
            })
            .collect::<Result<Vec<usize>>>()?;
        TypeVector::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of parts `m`.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Ground-set size `|x| = Σ x_i`.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.sizes.iter().map(ToString::to_string).collect();
        write!(f, "{}", shown.join(","))
    }
}

/// A cyclic word of labels with a fixed origin: position 0 is the topmost
/// bead and reading order is counterclockwise, i.e. increasing index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PresentedNecklace {
    word: Vec<usize>,
}

impl PresentedNecklace {
    pub fn new(word: Vec<usize>) -> PresentedNecklace {
        PresentedNecklace { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The presentation with origin moved to position `i`.
    pub fn rotated_to(&self, i: usize) -> PresentedNecklace {
        let mut word = self.word.clone();
        word.rotate_left(i % self.word.len().max(1));
        PresentedNecklace { word }
    }

    /// Whether the label multiset matches `x`: exactly `x_i` beads carry
    /// label `i`.
    pub fn matches_type(&self, x: &TypeVector) -> bool {
        let mut counts = vec![0usize; x.len() + 1];
        for &l in &self.word {
            if l == 0 || l > x.len() {
                return false;
            }
            counts[l] += 1;
        }
        (1..=x.len()).all(|i| counts[i] == x.sizes()[i - 1])
    }
}

impl fmt::Display for PresentedNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.word))
    }
}

/// A rotation class of presented necklaces, keyed by its lexicographically
/// least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    canonical: Vec<usize>,
}

impl Necklace {
    pub fn word(&self) -> &[usize] {
        &self.canonical
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.canonical))
    }
}

/// Whether no two labels alternate `i … j … i … j` around the cyclic word.
///
/// For each label pair, the word restricted to those labels is scanned for
/// its number of maximal runs read cyclically; four or more runs means the
/// pair alternates, i.e. crosses.
pub fn is_noncrossing_cyclic(word: &[usize]) -> bool {
    let labels: BTreeSet<usize> = word.iter().copied().collect();
    let labels: Vec<usize> = labels.into_iter().collect();
    for (a_idx, &a) in labels.iter().enumerate() {
        for &b in &labels[a_idx + 1..] {
            let seq: Vec<usize> = word.iter().copied().filter(|&l| l == a || l == b).collect();
            if seq.len() < 4 {
                continue;
            }
            let transitions = (0..seq.len())
                .filter(|&q| seq[q] != seq[(q + 1) % seq.len()])
                .count();
            if transitions >= 4 {
                return false;
            }
        }
    }
    true
}

/// Whether no two blocks interleave `a < b < c < d` with `a, c` in one
/// block and `b, d` in the other. Blocks are judged on the line, not the
/// circle.
pub(crate) fn parts_noncrossing(parts: &[Vec<usize>]) -> bool {
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if parts_alternate(a, b) {
                return false;
            }
        }
    }
    true
}

/// Merges two sorted blocks and counts runs; four or more alternating runs
/// is exactly the pattern `a < b < c < d`.
fn parts_alternate(a: &[usize], b: &[usize]) -> bool {
    let mut tags: Vec<(usize, bool)> = a.iter().map(|&x| (x, false)).collect();
    tags.extend(b.iter().map(|&x| (x, true)));
    tags.sort_unstable();
    let runs = 1 + tags.windows(2).filter(|w| w[0].1 != w[1].1).count();
    runs >= 4
}

/// A partition of `[n]` into labeled parts: part `i` (1-based) carries
/// label `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPartition {
    ground: usize,
    parts: Vec<Vec<usize>>,
}

impl LabeledPartition {
    /// Builds a labeled partition; parts must be disjoint, nonempty, and
    /// cover `[ground]`. Elements within a part are sorted.
    pub fn new(ground: usize, parts: Vec<Vec<usize>>) -> Result<LabeledPartition> {
        let mut seen = vec![false; ground + 1];
        let mut covered = 0usize;
        let mut parts = parts;
        for part in parts.iter_mut() {
            if part.is_empty() {
                return Err(Error::Parse("partition part must be nonempty".into()));
            }
            part.sort_unstable();
            for &x in part.iter() {
                if x == 0 {
                    return Err(Error::ZeroElement);
                }
                if x > ground {
                    return Err(Error::ElementOutOfRange {
                        element: x,
                        n: ground,
                    });
                }
                if seen[x] {
                    return Err(Error::DuplicateElement(x));
                }
                seen[x] = true;
                covered += 1;
            }
        }
        if covered != ground {
            return Err(Error::Parse(format!(
                "parts cover {covered} of {ground} elements"
            )));
        }
        Ok(LabeledPartition { ground, parts })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// The word assigning to each position of `[ground]` the label of its
    /// part.
    pub fn label_word(&self) -> Vec<usize> {
        let mut word = vec![0usize; self.ground];
        for (label0, part) in self.parts.iter().enumerate() {
            for &x in part {
                word[x - 1] = label0 + 1;
            }
        }
        word
    }

    pub fn type_of(&self) -> TypeVector {
        TypeVector::new(self.parts.iter().map(Vec::len).collect()).expect("parts are nonempty")
    }
}

impl fmt::Display for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label0, part) in self.parts.iter().enumerate() {
            if label0 > 0 {
                write!(f, " ")?;
            }
            let inner: Vec<String> = part.iter().map(ToString::to_string).collect();
            write!(f, "{}:{{{}}}", label0 + 1, inner.join(","))?;
        }
        Ok(())
    }
}

/// Whether the labeled partition is noncrossing.
pub fn is_noncrossing_partition(partition: &LabeledPartition) -> bool {
    parts_noncrossing(partition.parts())
}

/// The type vector `ℓ'` of a permutation and pivot: entry `i` is `ℓ_i + 1`
/// except at the pivot's cycle, where it is `ℓ_p`. Its total is `n + m - 1`.
pub fn type_vector(perm: &Permutation, k: usize) -> Result<TypeVector> {
    let p = perm.cycle_index_of(k)?;
    let sizes = perm
        .cycle_lengths()
        .iter()
        .enumerate()
        .map(|(idx, &len)| if idx + 1 == p { len } else { len + 1 })
        .collect();
    TypeVector::new(sizes)
}

/// Closes a valid cycle word into a presented necklace by appending one
/// bead with the pivot-cycle label `p` after the last letter; the origin
/// stays at the word's first letter, so the inserted bead sits between the
/// first and last letters of the cyclic word.
pub fn word_to_necklace(word: &CycleWord, p: usize) -> PresentedNecklace {
    let mut beads = word.letters().to_vec();
    beads.push(p);
    PresentedNecklace::new(beads)
}

/// The rotation class of a presentation, keyed by the lexicographically
/// least rotation.
pub fn canonical_necklace(presented: &PresentedNecklace) -> Necklace {
    let word = presented.word();
    let len = word.len();
    if len == 0 {
        return Necklace { canonical: vec![] };
    }
    let mut best: Vec<usize> = word.to_vec();
    for start in 1..len {
        let candidate: Vec<usize> = (0..len).map(|o| word[(start + o) % len]).collect();
        if candidate < best {
            best = candidate;
        }
    }
    Necklace { canonical: best }
}

fn check_enum_bound(x: &TypeVector) -> Result<()> {
    if x.total() > MAX_ENUM_GROUND {
        return Err(Error::BoundExceeded {
            what: "enumeration ground set",
            requested: x.total(),
            limit: MAX_ENUM_GROUND,
        });
    }
    Ok(())
}

/// All labeled noncrossing partitions of type `x`, ordered by label word.
pub fn enumerate_lnc(x: &TypeVector) -> Result<Vec<LabeledPartition>> {
    check_enum_bound(x)?;
    let ground = x.total();
    let words = enumerate_pattern_free_words(x.sizes(), None);
    Ok(words
        .into_iter()
        .map(|word| {
            let mut parts = vec![Vec::new(); x.len()];
            for (pos0, label) in word.into_iter().enumerate() {
                parts[label - 1].push(pos0 + 1);
            }
            LabeledPartition::new(ground, parts).expect("enumerated parts partition the ground set")
        })
        .collect())
}

/// All labeled noncrossing necklaces of type `x`: one canonical
/// representative per rotation class of `enumerate_lnc(x)`.
pub fn enumerate_lncn(x: &TypeVector) -> Result<Vec<Necklace>> {
    let partitions = enumerate_lnc(x)?;
    let canon: BTreeSet<Vec<usize>> = partitions
        .iter()
        .map(|p| {
            canonical_necklace(&PresentedNecklace::new(p.label_word()))
                .word()
                .to_vec()
        })
        .collect();
    Ok(canon
        .into_iter()
        .map(|canonical| Necklace { canonical })
        .collect())
}

/// Exact size of the labeled noncrossing partition set of type `x`: the
/// falling factorial `(|x|)_{m-1}`, for every type.
pub fn count_lnc(x: &TypeVector) -> BigInt {
    falling_factorial(x.total() as i64, (x.len() - 1) as u64)
}

/// Exact size of the labeled noncrossing necklace set of type `x`:
/// `(|x| - 1)_{m-2}`.
///
/// The closed form is applied in its proven regime: at least two parts,
/// and (beyond two parts) at most one part of size 1. Types outside the
/// regime are refused; `enumerate_lncn` remains available for them.
pub fn count_lncn(x: &TypeVector) -> Result<BigInt> {
    let m = x.len();
    if m < 2 {
        return Err(Error::OutsideFormulaRegime(
            "necklace count formula needs at least two parts".into(),
        ));
    }
    let ones = x.sizes().iter().filter(|&&s| s == 1).count();
    if m > 2 && ones > 1 {
        return Err(Error::OutsideFormulaRegime(format!(
            "{ones} parts of size 1 with {m} parts"
        )));
    }
    Ok(falling_factorial(x.total() as i64 - 1, (m - 2) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_crossing_examples() {
        // The 11-bead necklace of type (3,4,2,2).
        assert!(is_noncrossing_cyclic(&[2, 1, 1, 1, 2, 2, 2, 4, 3, 3, 4]));
        assert!(!is_noncrossing_cyclic(&[1, 2, 1, 2]));
        assert!(is_noncrossing_cyclic(&[1, 2, 3, 4]));
        assert!(is_noncrossing_cyclic(&[1, 2, 2, 1]));
        // Cyclically two runs per pair even though the word looks split.
        assert!(is_noncrossing_cyclic(&[2, 1, 1, 2]));
    }

    #[test]
    fn partition_crossing_examples() {
        let nc = LabeledPartition::new(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(is_noncrossing_partition(&nc));
        let crossing = LabeledPartition::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert!(!is_noncrossing_partition(&crossing));
        let singletons = LabeledPartition::new(3, vec![vec![1], vec![2], vec![3]]).unwrap();
        assert!(is_noncrossing_partition(&singletons));
    }

    #[test]
    fn type_vector_examples() {
        let perm = Permutation::parse("(13)(285)(4)(67)", None).unwrap();
        assert_eq!(
            type_vector(&perm, 6).unwrap(),
            TypeVector::new(vec![3, 4, 2, 2]).unwrap()
        );
        assert_eq!(
            type_vector(&perm, 3).unwrap(),
            TypeVector::new(vec![2, 4, 2, 3]).unwrap()
        );
        let c5 = Permutation::parse("(12345)", None).unwrap();
        assert_eq!(
            type_vector(&c5, 2).unwrap(),
            TypeVector::new(vec![5]).unwrap()
        );
        assert_eq!(type_vector(&perm, 6).unwrap().total(), 8 + 4 - 1);
    }

    #[test]
    fn necklace_closure_examples() {
        let word = CycleWord::new(vec![2, 1, 1, 1, 2, 2, 2, 4, 3, 3]);
        let necklace = word_to_necklace(&word, 4);
        assert_eq!(necklace.to_string(), "21112224334");
        assert_eq!(
            word_to_necklace(&CycleWord::new(vec![1, 1]), 1).to_string(),
            "111"
        );
        assert_eq!(
            word_to_necklace(&CycleWord::new(vec![]), 3).to_string(),
            "3"
        );
    }

    #[test]
    fn canonical_rotation_examples() {
        let presented = PresentedNecklace::new(vec![2, 1, 1, 1, 2, 2, 2, 4, 3, 3, 4]);
        assert_eq!(canonical_necklace(&presented).to_string(), "11122243342");
        let a = canonical_necklace(&PresentedNecklace::new(vec![1, 1, 2, 2]));
        let b = canonical_necklace(&PresentedNecklace::new(vec![2, 2, 1, 1]));
        assert_eq!(a, b);
        assert_eq!(
            canonical_necklace(&PresentedNecklace::new(vec![1, 1, 1])).to_string(),
            "111"
        );
    }

    #[test]
    fn enumerate_lnc_examples() {
        let x22 = TypeVector::new(vec![2, 2]).unwrap();
        let partitions = enumerate_lnc(&x22).unwrap();
        assert_eq!(partitions.len(), 4);
        let shown: Vec<String> = partitions.iter().map(ToString::to_string).collect();
        assert!(shown.contains(&"1:{1,2} 2:{3,4}".to_string()));
        assert!(shown.contains(&"1:{2,3} 2:{1,4}".to_string()));

        let single = TypeVector::new(vec![5]).unwrap();
        assert_eq!(enumerate_lnc(&single).unwrap().len(), 1);

        let big = TypeVector::new(vec![3, 4, 2, 2]).unwrap();
        assert_eq!(enumerate_lnc(&big).unwrap().len(), 990);
    }

    #[test]
    fn enumerate_lncn_examples() {
        let x22 = TypeVector::new(vec![2, 2]).unwrap();
        assert_eq!(enumerate_lncn(&x22).unwrap().len(), 1);
        let big = TypeVector::new(vec![3, 4, 2, 2]).unwrap();
        assert_eq!(enumerate_lncn(&big).unwrap().len(), 90);
        let x11 = TypeVector::new(vec![1, 1]).unwrap();
        let necklaces = enumerate_lncn(&x11).unwrap();
        assert_eq!(necklaces.len(), 1);
        assert_eq!(necklaces[0].to_string(), "12");
    }

    #[test]
    fn count_examples() {
        let x22 = TypeVector::new(vec![2, 2]).unwrap();
        assert_eq!(count_lnc(&x22), BigInt::from(4));
        assert_eq!(count_lncn(&x22).unwrap(), BigInt::from(1));
        let big = TypeVector::new(vec![3, 4, 2, 2]).unwrap();
        assert_eq!(count_lncn(&big).unwrap(), BigInt::from(90));
        let single = TypeVector::new(vec![7]).unwrap();
        assert_eq!(count_lnc(&single), BigInt::from(1));
        let two_ones = TypeVector::new(vec![2, 1, 1]).unwrap();
        assert_eq!(count_lnc(&two_ones), BigInt::from(12));
        assert_eq!(enumerate_lnc(&two_ones).unwrap().len(), 12);
        assert_eq!(enumerate_lncn(&two_ones).unwrap().len(), 3);
    }

    #[test]
    fn count_lncn_regime() {
        let single = TypeVector::new(vec![7]).unwrap();
        assert!(matches!(
            count_lncn(&single),
            Err(Error::OutsideFormulaRegime(_))
        ));
        let two_ones = TypeVector::new(vec![2, 1, 1]).unwrap();
        assert!(matches!(
            count_lncn(&two_ones),
            Err(Error::OutsideFormulaRegime(_))
        ));
        // Any pair of parts is inside the regime.
        let x11 = TypeVector::new(vec![1, 1]).unwrap();
        assert_eq!(count_lncn(&x11).unwrap(), BigInt::from(1));
    }

    #[test]
    fn enumeration_bound() {
        let too_big = TypeVector::new(vec![7, 6]).unwrap();
        assert!(matches!(
            enumerate_lnc(&too_big),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn rotations_distinct_for_multiple_labels() {
        let x = TypeVector::new(vec![2, 3, 1]).unwrap();
        for necklace in enumerate_lncn(&x).unwrap() {
            let presented = PresentedNecklace::new(necklace.word().to_vec());
            let rotations: BTreeSet<Vec<usize>> = (0..presented.len())
                .map(|i| presented.rotated_to(i).word().to_vec())
                .collect();
            assert_eq!(rotations.len(), presented.len());
        }
    }

    #[test]
    fn lnc_count_matches_formula_up_to_eight() {
        fn compositions(total: usize) -> Vec<Vec<usize>> {
            if total == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=total {
                for mut rest in compositions(total - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for total in 1..=8 {
            for sizes in compositions(total) {
                let x = TypeVector::new(sizes).unwrap();
                let enumerated = enumerate_lnc(&x).unwrap().len();
                assert_eq!(BigInt::from(enumerated), count_lnc(&x), "type {x}");
            }
        }
    }
}
