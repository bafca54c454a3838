//! Backtracking enumeration of words with prescribed letter multiplicities
//! and forbidden scattered patterns. Shared by the cycle-word and labeled
//! noncrossing partition enumerators.

/// Whether `pattern` occurs in `word` as a scattered (not necessarily
/// contiguous) subsequence.
pub(crate) fn contains_scattered(word: &[usize], pattern: &[usize]) -> bool {
    let mut want = pattern.iter();
    let mut next = want.next();
    for &letter in word {
        match next {
            Some(&p) if p == letter => next = want.next(),
            Some(_) => {}
            None => break,
        }
    }
    next.is_none()
}

/// All words over the alphabet `1..=m` in which letter `i` appears exactly
/// `mults[i-1]` times and no scattered pattern `i j i j` (`i ≠ j`) occurs.
/// With `pivot = Some(p)`, scattered `i p i` (`i ≠ p`) is forbidden as well.
/// Output is in lexicographic order.
pub(crate) fn enumerate_pattern_free_words(
    mults: &[usize],
    pivot: Option<usize>,
) -> Vec<Vec<usize>> {
    let m = mults.len();
    let total: usize = mults.iter().sum();
    let mut out = Vec::new();
    let mut prefix: Vec<usize> = Vec::with_capacity(total);
    let mut remaining = mults.to_vec();
    backtrack(&mut prefix, &mut remaining, m, total, pivot, &mut out);
    out
}

fn backtrack(
    prefix: &mut Vec<usize>,
    remaining: &mut [usize],
    m: usize,
    total: usize,
    pivot: Option<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if prefix.len() == total {
        out.push(prefix.clone());
        return;
    }
    for letter in 1..=m {
        if remaining[letter - 1] == 0 || !may_append(prefix, letter, m, pivot) {
            continue;
        }
        remaining[letter - 1] -= 1;
        prefix.push(letter);
        backtrack(prefix, remaining, m, total, pivot, out);
        prefix.pop();
        remaining[letter - 1] += 1;
    }
}

/// A forbidden pattern completed by appending `letter` must end with it, so
/// it suffices to look for the pattern's prefix in the current word.
fn may_append(prefix: &[usize], letter: usize, m: usize, pivot: Option<usize>) -> bool {
    for i in 1..=m {
        if i != letter && contains_scattered(prefix, &[i, letter, i]) {
            return false;
        }
    }
    if let Some(p) = pivot {
        if letter != p && contains_scattered(prefix, &[letter, p]) {
            return false;
        }
    }
    true
}

/// Compact display for words: a digit string when every letter is at most
/// 9, comma-separated integers otherwise.
pub(crate) fn format_word(letters: &[usize]) -> String {
    if letters.iter().all(|&l| l <= 9) {
        letters.iter().map(ToString::to_string).collect()
    } else {
        letters
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}
