//! Minimal transitive star factorizations: verification, the cycle word of
//! a factorization, valid words, structured enumeration, and the exact
//! count.
//!
//! A star factorization of `π ∈ S_n` with pivot `k` is a product of
//! transpositions `(k i)`, multiplied right to left. It is *transitive*
//! when every generator `(k i)`, `i ∈ [n] \ {k}`, appears at least once,
//! and *minimal transitive* when additionally its length is `n + m - 2`,
//! where `m` is the number of cycles of `π` (fixed points included).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm::{factorial, parse_cycle_groups, product_right_to_left, Permutation};
use crate::words::{contains_scattered, enumerate_pattern_free_words, format_word};

/// A sequence of star transpositions with a common pivot `k`: the companion
/// list `(i_1, …, i_r)` stands for the product `(k i_1) (k i_2) ⋯ (k i_r)`,
/// applied right to left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarFactorization {
    n: usize,
    pivot: usize,
    companions: Vec<usize>,
}

impl StarFactorization {
    pub fn new(n: usize, pivot: usize, companions: Vec<usize>) -> Result<StarFactorization> {
        if pivot == 0 || pivot > n {
            return Err(Error::ElementOutOfRange { element: pivot, n });
        }
        for &i in &companions {
            if i == 0 || i > n {
                return Err(Error::ElementOutOfRange { element: i, n });
            }
            if i == pivot {
                return Err(Error::InvalidTransposition(pivot, i));
            }
        }
        Ok(StarFactorization {
            n,
            pivot,
            companions,
        })
    }

    /// Parses factorization text such as `"(6 8)(6 1)(6 3)"`. Every factor
    /// must be a pair whose first entry is the shared pivot.
    pub fn parse(text: &str, n: Option<usize>) -> Result<StarFactorization> {
        let groups = parse_cycle_groups(text)?;
        let mut pivot = None;
        let mut companions = Vec::with_capacity(groups.len());
        let mut max_elem = 0usize;
        for group in &groups {
            if group.len() != 2 {
                return Err(Error::Parse(format!(
                    "factor must be a transposition, got {} entries",
                    group.len()
                )));
            }
            let (k, i) = (group[0], group[1]);
            match pivot {
                None => pivot = Some(k),
                Some(p) if p != k => {
                    return Err(Error::Parse(format!(
                        "factors do not share a pivot: {p} vs {k}"
                    )))
                }
                _ => {}
            }
            companions.push(i);
            max_elem = max_elem.max(k).max(i);
        }
        let pivot = pivot.ok_or_else(|| Error::Parse("empty factorization".into()))?;
        let n = match n {
            Some(n) if n >= max_elem => n,
            Some(n) => {
                return Err(Error::ElementOutOfRange {
                    element: max_elem,
                    n,
                })
            }
            None => max_elem,
        };
        StarFactorization::new(n, pivot, companions)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn companions(&self) -> &[usize] {
        &self.companions
    }

    /// Number of factors.
    pub fn len(&self) -> usize {
        self.companions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.companions.is_empty()
    }

    /// Factors as `(pivot, companion)` pairs, left to right.
    pub fn factors(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.companions.iter().map(move |&i| (self.pivot, i))
    }

    /// Right-to-left product of the factors.
    pub fn product(&self) -> Result<Permutation> {
        let factors: Vec<(usize, usize)> = self.factors().collect();
        product_right_to_left(&factors, self.n)
    }
}

impl fmt::Display for StarFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &i in &self.companions {
            write!(f, "({} {})", self.pivot, i)?;
        }
        Ok(())
    }
}

/// The word over cycle indices `[m]` induced by a factorization: position
/// `q` holds the index of the cycle containing the `q`-th companion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleWord {
    letters: Vec<usize>,
}

impl CycleWord {
    pub fn new(letters: Vec<usize>) -> CycleWord {
        CycleWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for CycleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.letters))
    }
}

/// Whether `delta` is a minimal transitive star factorization of `perm`:
/// the product matches, every companion value in `[n] \ {k}` appears, and
/// the length is exactly `n + m - 2`.
pub fn verify_star_factorization(delta: &StarFactorization, perm: &Permutation) -> Result<bool> {
    if delta.n() != perm.n() {
        return Err(Error::SizeMismatch {
            left: delta.n(),
            right: perm.n(),
        });
    }
    let n = perm.n();
    let m = perm.cycle_count();
    if delta.len() != n + m - 2 {
        return Ok(false);
    }
    let covered: BTreeSet<usize> = delta.companions().iter().copied().collect();
    let wanted: BTreeSet<usize> = (1..=n).filter(|&x| x != delta.pivot()).collect();
    if covered != wanted {
        return Ok(false);
    }
    Ok(delta.product()? == *perm)
}

/// The cycle word `ω(δ)`, recording per factor `(k i)` the index of the
/// cycle of `perm` containing `i`. Requires a verified factorization.
pub fn cycle_word(delta: &StarFactorization, perm: &Permutation) -> Result<CycleWord> {
    if !verify_star_factorization(delta, perm)? {
        return Err(Error::NotAFactorization(delta.to_string()));
    }
    let letters = delta
        .companions()
        .iter()
        .map(|&i| perm.cycle_index_of(i))
        .collect::<Result<Vec<usize>>>()?;
    Ok(CycleWord::new(letters))
}

/// Whether `word` is a valid cycle word for `perm` with pivot `k`. Writing
/// `p` for the index of the pivot's cycle, validity requires: `p` occurs
/// `ℓ_p - 1` times; every other `j` occurs `ℓ_j + 1` times; no scattered
/// pattern `i j i j` with `i ≠ j`; and no scattered pattern `i p i` with
/// `i ≠ p`.
pub fn is_valid_word(word: &CycleWord, perm: &Permutation, k: usize) -> Result<bool> {
    let p = perm.cycle_index_of(k)?;
    let m = perm.cycle_count();
    let lengths = perm.cycle_lengths();
    let mut counts = vec![0usize; m + 1];
    for &letter in word.letters() {
        if letter == 0 || letter > m {
            return Ok(false);
        }
        counts[letter] += 1;
    }
    for j in 1..=m {
        let want = if j == p {
            lengths[j - 1] - 1
        } else {
            lengths[j - 1] + 1
        };
        if counts[j] != want {
            return Ok(false);
        }
    }
    let letters = word.letters();
    for i in 1..=m {
        for j in 1..=m {
            if i != j && contains_scattered(letters, &[i, j, i, j]) {
                return Ok(false);
            }
        }
        if i != p && contains_scattered(letters, &[i, p, i]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Expands a valid cycle word into the unique factorization whose doubled
/// factor for cycle `j ≠ p` is `(k c_j)`.
///
/// The companions at the positions labeled `j` walk the cycle backwards
/// from `c_j` a full loop, repeating `c_j` at the end; the positions
/// labeled `p` walk backwards from the pivot's predecessor, covering the
/// pivot cycle once without the pivot itself.
pub fn fill_word(
    word: &CycleWord,
    perm: &Permutation,
    k: usize,
    doubled: &BTreeMap<usize, usize>,
) -> Result<StarFactorization> {
    if !is_valid_word(word, perm, k)? {
        return Err(Error::InvalidWord(word.to_string()));
    }
    let p = perm.cycle_index_of(k)?;
    let m = perm.cycle_count();
    for j in 1..=m {
        if j == p {
            if doubled.contains_key(&j) {
                return Err(Error::InvalidDoubled(format!(
                    "cycle {j} contains the pivot and takes no doubled factor"
                )));
            }
        } else {
            match doubled.get(&j) {
                None => {
                    return Err(Error::InvalidDoubled(format!("missing entry for cycle {j}")))
                }
                Some(&c) if !perm.cycle(j).contains(c) => {
                    return Err(Error::InvalidDoubled(format!(
                        "{c} does not belong to cycle {j}"
                    )))
                }
                _ => {}
            }
        }
    }
    if doubled.keys().any(|&j| j == 0 || j > m) {
        return Err(Error::InvalidDoubled("cycle index out of range".into()));
    }

    let mut companions = vec![0usize; word.len()];
    for j in 1..=m {
        let positions: Vec<usize> = word
            .letters()
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == j)
            .map(|(q, _)| q)
            .collect();
        let len_j = perm.cycle(j).len();
        let values: Vec<usize> = if j == p {
            // prev(k), prev²(k), …: the pivot cycle minus the pivot.
            let mut x = k;
            (1..len_j)
                .map(|_| {
                    x = perm.apply_inverse(x);
                    x
                })
                .collect()
        } else {
            let c = doubled[&j];
            let mut x = c;
            let mut vals = vec![c];
            for _ in 0..len_j {
                x = perm.apply_inverse(x);
                vals.push(x);
            }
            vals
        };
        debug_assert_eq!(values.len(), positions.len());
        for (q, v) in positions.into_iter().zip(values) {
            companions[q] = v;
        }
    }
    StarFactorization::new(perm.n(), k, companions)
}

/// All valid cycle words for `perm` with pivot `k`, in lexicographic order.
pub fn valid_words(perm: &Permutation, k: usize) -> Result<Vec<CycleWord>> {
    let p = perm.cycle_index_of(k)?;
    let mults: Vec<usize> = perm
        .cycle_lengths()
        .iter()
        .enumerate()
        .map(|(idx, &len)| if idx + 1 == p { len - 1 } else { len + 1 })
        .collect();
    Ok(enumerate_pattern_free_words(&mults, Some(p))
        .into_iter()
        .map(CycleWord::new)
        .collect())
}

/// Deterministic stream of all minimal transitive star factorizations of a
/// permutation with a fixed pivot, ordered lexicographically by cycle word
/// and then by doubled-factor choices (cycle index major, element rank
/// minor).
pub struct Factorizations {
    perm: Permutation,
    pivot: usize,
    words: Vec<CycleWord>,
    /// `(cycle index, elements sorted ascending)` for every non-pivot cycle.
    choice_pools: Vec<(usize, Vec<usize>)>,
    word_idx: usize,
    /// 0-based selection into each pool; odometer with the last axis fastest.
    selection: Vec<usize>,
}

impl Factorizations {
    fn advance(&mut self) {
        for axis in (0..self.selection.len()).rev() {
            self.selection[axis] += 1;
            if self.selection[axis] < self.choice_pools[axis].1.len() {
                return;
            }
            self.selection[axis] = 0;
        }
        self.word_idx += 1;
    }
}

impl Iterator for Factorizations {
    type Item = StarFactorization;

    fn next(&mut self) -> Option<StarFactorization> {
        if self.word_idx >= self.words.len() {
            return None;
        }
        let doubled: BTreeMap<usize, usize> = self
            .choice_pools
            .iter()
            .zip(&self.selection)
            .map(|((j, pool), &sel)| (*j, pool[sel]))
            .collect();
        let delta = fill_word(&self.words[self.word_idx], &self.perm, self.pivot, &doubled)
            .expect("enumerated words and choices are valid by construction");
        self.advance();
        Some(delta)
    }
}

/// Enumerates `⋆_k(perm)`, each factorization exactly once.
pub fn enumerate_factorizations(perm: &Permutation, k: usize) -> Result<Factorizations> {
    let p = perm.cycle_index_of(k)?;
    let words = valid_words(perm, k)?;
    let choice_pools: Vec<(usize, Vec<usize>)> = (1..=perm.cycle_count())
        .filter(|&j| j != p)
        .map(|j| {
            let mut elems = perm.cycle(j).elements().to_vec();
            elems.sort_unstable();
            (j, elems)
        })
        .collect();
    let selection = vec![0usize; choice_pools.len()];
    Ok(Factorizations {
        perm: perm.clone(),
        pivot: k,
        words,
        choice_pools,
        word_idx: 0,
        selection,
    })
}

/// Exact number of minimal transitive star factorizations of `perm` for any
/// pivot: `(n + m - 2)! / n! · ℓ_1 ⋯ ℓ_m`.
pub fn count_factorizations(perm: &Permutation) -> BigInt {
    let n = perm.n();
    let m = perm.cycle_count();
    let mut numerator = factorial(n + m - 2);
    for len in perm.cycle_lengths() {
        numerator *= BigInt::from(len);
    }
    numerator / factorial(n)
}
