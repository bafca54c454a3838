//! The bijection between star factorizations and pairs (labeled
//! noncrossing necklace, choice tuple), the shift maps that move a
//! preimage between pivot types, and the composite pivot-change map.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * Necklace presentations are read counterclockwise (increasing index)
//!   from the origin at position 0; ordinals like "d-th appearance" count
//!   in that reading order.
//! * `factorization_to_necklace` orients its output so that the first
//!   occurrence of label 1 in the closed word (cycle word followed by the
//!   inserted bead) is the origin.
//! * After removing a bead, the remaining word is read starting from the
//!   position immediately after the removal.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::noncross::{
    is_noncrossing_cyclic, type_vector, word_to_necklace, PresentedNecklace,
};
use crate::perm::Permutation;
use crate::star::{cycle_word, fill_word, CycleWord, StarFactorization};

/// One 1-based choice per cycle of the underlying permutation; the entry
/// for cycle `i` ranges over `[ℓ_i]`. For a non-pivot cycle the choice
/// ranks the doubled companion among the cycle's elements; for the pivot
/// cycle it selects which bead of that label the necklace map removes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChoiceTuple {
    entries: Vec<usize>,
}

impl ChoiceTuple {
    pub fn new(entries: Vec<usize>) -> ChoiceTuple {
        ChoiceTuple { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for ChoiceTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "{}", shown.join(","))
    }
}

/// A presented noncrossing necklace with its choice tuple, tied to a
/// permutation and pivot. This is the domain element the necklace-to-
/// factorization map consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecklacePreimage {
    perm: Permutation,
    pivot: usize,
    necklace: PresentedNecklace,
    choices: ChoiceTuple,
    degenerate: bool,
}

impl NecklacePreimage {
    pub fn new(
        perm: Permutation,
        pivot: usize,
        necklace: PresentedNecklace,
        choices: ChoiceTuple,
    ) -> Result<NecklacePreimage> {
        let expected_type = type_vector(&perm, pivot)?;
        if !necklace.matches_type(&expected_type) {
            return Err(Error::NecklaceTypeMismatch);
        }
        if !is_noncrossing_cyclic(necklace.word()) {
            return Err(Error::CrossingNecklace);
        }
        let lengths = perm.cycle_lengths();
        if choices.len() != lengths.len() {
            return Err(Error::SizeMismatch {
                left: choices.len(),
                right: lengths.len(),
            });
        }
        for (idx, (&value, &bound)) in choices.entries().iter().zip(&lengths).enumerate() {
            if value == 0 || value > bound {
                return Err(Error::ChoiceOutOfBounds {
                    cycle: idx + 1,
                    value,
                    bound,
                });
            }
        }
        Ok(NecklacePreimage {
            perm,
            pivot,
            necklace,
            choices,
            degenerate: false,
        })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn necklace(&self) -> &PresentedNecklace {
        &self.necklace
    }

    pub fn choices(&self) -> &ChoiceTuple {
        &self.choices
    }

    /// Marks the single-cycle case, where the necklace carries no
    /// information beyond the pivot cycle itself.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

impl fmt::Display for NecklacePreimage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "necklace={};origin=0;d={}", self.necklace, self.choices)
    }
}

/// Builds the star factorization determined by a necklace preimage: remove
/// the selected bead of the pivot-cycle label, read the remaining word from
/// just after the removal, and expand it with the doubled companions the
/// choice tuple selects.
pub fn necklace_to_factorization(pre: &NecklacePreimage) -> Result<StarFactorization> {
    let perm = pre.perm();
    let p = perm.cycle_index_of(pre.pivot())?;
    let word = pre.necklace().word();
    let len = word.len();

    let p_positions: Vec<usize> = (0..len).filter(|&q| word[q] == p).collect();
    let removal_rank = pre.choices().entries()[p - 1];
    let removed = p_positions[removal_rank - 1];

    let letters: Vec<usize> = (1..len).map(|o| word[(removed + o) % len]).collect();
    let omega = CycleWord::new(letters);

    let mut doubled = BTreeMap::new();
    for j in 1..=perm.cycle_count() {
        if j == p {
            continue;
        }
        let mut elems = perm.cycle(j).elements().to_vec();
        elems.sort_unstable();
        doubled.insert(j, elems[pre.choices().entries()[j - 1] - 1]);
    }
    fill_word(&omega, perm, pre.pivot(), &doubled)
}

/// Recovers the necklace preimage of a verified factorization, using the
/// first-label-1 orientation convention. For a single-cycle permutation the
/// product domain collapses; the returned preimage is the all-pivot-label
/// necklace with all choices 1, flagged degenerate.
pub fn factorization_to_necklace(
    delta: &StarFactorization,
    perm: &Permutation,
) -> Result<NecklacePreimage> {
    let omega = cycle_word(delta, perm)?;
    let k = delta.pivot();
    let p = perm.cycle_index_of(k)?;
    let m = perm.cycle_count();

    if m == 1 {
        let necklace = PresentedNecklace::new(vec![1; perm.n()]);
        let mut pre =
            NecklacePreimage::new(perm.clone(), k, necklace, ChoiceTuple::new(vec![1]))?;
        pre.degenerate = true;
        return Ok(pre);
    }

    let mut entries = vec![0usize; m];
    for j in 1..=m {
        if j == p {
            continue;
        }
        let companions: Vec<usize> = delta
            .companions()
            .iter()
            .copied()
            .filter(|&i| perm.cycle(j).contains(i))
            .collect();
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for c in companions {
            *counts.entry(c).or_insert(0) += 1;
        }
        let doubled_value = counts
            .iter()
            .find(|&(_, &count)| count == 2)
            .map(|(&c, _)| c)
            .ok_or_else(|| Error::NotAFactorization(delta.to_string()))?;
        let mut elems = perm.cycle(j).elements().to_vec();
        elems.sort_unstable();
        entries[j - 1] = elems.iter().position(|&e| e == doubled_value).unwrap() + 1;
    }

    let closed = word_to_necklace(&omega, p);
    let closed_word = closed.word();
    let origin = closed_word
        .iter()
        .position(|&l| l == 1)
        .expect("label 1 occurs in the closed word");
    let presentation = closed.rotated_to(origin);
    let inserted_new_pos = (closed_word.len() - 1 + closed_word.len() - origin) % closed_word.len();
    let removal_rank = presentation.word()[..=inserted_new_pos]
        .iter()
        .filter(|&&l| l == p)
        .count();
    entries[p - 1] = removal_rank;

    NecklacePreimage::new(perm.clone(), k, presentation, ChoiceTuple::new(entries))
}

/// Rewrites a necklace segment in place: starting at the `ordinal`-th bead
/// labeled `from_label`, walk in direction `dir` (+1 counterclockwise,
/// -1 clockwise) to the first bead labeled `to_label`, then move the
/// `from_label` bead copy as deep into the segment as possible while
/// keeping the word noncrossing. The walked word `from s_1 … s_t` (with
/// `s_t = to_label`) becomes `from s_1 … s_{h-1} from s_h … s_{t-1}` for
/// the maximal feasible `h`.
fn rewrite_segment(
    word: &[usize],
    from_label: usize,
    ordinal: usize,
    to_label: usize,
    dir: isize,
) -> Result<Vec<usize>> {
    let len = word.len();
    let start = (0..len)
        .filter(|&q| word[q] == from_label)
        .nth(ordinal - 1)
        .expect("ordinal is within the label multiplicity");

    let step = |q: usize| -> usize { (q as isize + dir).rem_euclid(len as isize) as usize };
    let mut segment = vec![start];
    let mut q = start;
    loop {
        q = step(q);
        segment.push(q);
        if word[q] == to_label {
            break;
        }
        if segment.len() > len {
            return Err(Error::ShiftDefect("target label not found".into()));
        }
    }
    let t = segment.len() - 1;
    let walked: Vec<usize> = segment[1..].iter().map(|&pos| word[pos]).collect();

    for h in (1..=t).rev() {
        let mut candidate = word.to_vec();
        for v in 1..=t {
            candidate[segment[v]] = match v.cmp(&h) {
                std::cmp::Ordering::Less => walked[v - 1],
                std::cmp::Ordering::Equal => from_label,
                std::cmp::Ordering::Greater => walked[v - 2],
            };
        }
        if is_noncrossing_cyclic(&candidate) {
            return Ok(candidate);
        }
    }
    Err(Error::ShiftDefect(
        "no segment rewrite keeps the necklace noncrossing".into(),
    ))
}

/// Moves a preimage from its pivot's type to `new_pivot`'s type, keeping
/// the choice tuple. When both pivots share a cycle the necklace is
/// unchanged; otherwise one bead of the new pivot-cycle label is traded
/// for one of the old, scanning counterclockwise.
///
/// The map is total and deterministic but not injective: trades that
/// retreat past nested blocks can collapse distinct preimages to one
/// image, so [`shift_preimage_inverse`] undoes it only outside those
/// configurations (see the crate README for the smallest examples).
pub fn shift_preimage(pre: &NecklacePreimage, new_pivot: usize) -> Result<NecklacePreimage> {
    let perm = pre.perm();
    let p_old = perm.cycle_index_of(pre.pivot())?;
    let p_new = perm.cycle_index_of(new_pivot)?;
    if p_old == p_new {
        let mut out = NecklacePreimage::new(
            perm.clone(),
            new_pivot,
            pre.necklace().clone(),
            pre.choices().clone(),
        )?;
        out.degenerate = pre.degenerate;
        return Ok(out);
    }
    let ordinal = pre.choices().entries()[p_old - 1];
    let rewritten = rewrite_segment(pre.necklace().word(), p_old, ordinal, p_new, 1)?;
    NecklacePreimage::new(
        perm.clone(),
        new_pivot,
        PresentedNecklace::new(rewritten),
        pre.choices().clone(),
    )
}

/// Inverse of [`shift_preimage`]: identical construction with the scan
/// running clockwise.
pub fn shift_preimage_inverse(pre: &NecklacePreimage, new_pivot: usize) -> Result<NecklacePreimage> {
    let perm = pre.perm();
    let p_old = perm.cycle_index_of(pre.pivot())?;
    let p_new = perm.cycle_index_of(new_pivot)?;
    if p_old == p_new {
        let mut out = NecklacePreimage::new(
            perm.clone(),
            new_pivot,
            pre.necklace().clone(),
            pre.choices().clone(),
        )?;
        out.degenerate = pre.degenerate;
        return Ok(out);
    }
    let ordinal = pre.choices().entries()[p_old - 1];
    let rewritten = rewrite_segment(pre.necklace().word(), p_old, ordinal, p_new, -1)?;
    NecklacePreimage::new(
        perm.clone(),
        new_pivot,
        PresentedNecklace::new(rewritten),
        pre.choices().clone(),
    )
}

/// The pivot-change map `⋆_k(π) → ⋆_{k'}(π)`: decompose the factorization
/// into its necklace preimage, shift it to the new pivot's type, and
/// reassemble. It inherits [`shift_preimage`]'s defect: the two sides
/// always have the same cardinality, but this map is not injective on
/// every permutation.
pub fn repivot(
    delta: &StarFactorization,
    perm: &Permutation,
    new_pivot: usize,
) -> Result<StarFactorization> {
    let pre = factorization_to_necklace(delta, perm)?;
    let shifted = shift_preimage(&pre, new_pivot)?;
    necklace_to_factorization(&shifted)
}
