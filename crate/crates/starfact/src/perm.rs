//! Permutations of `[n] = {1, …, n}` in disjoint-cycle form, together with
//! the arc calculus on cycles (excerpts, merges, slicings) that drives the
//! slicing poset.
//!
//! Canonical form: every cycle is rotated so its minimal element comes
//! first, cycles are sorted by minimal element, and fixed points are kept
//! as explicit singleton cycles. The cycle count `m` therefore always
//! includes fixed points.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// A cyclic word of distinct positive integers.
///
/// The element list is stored in canonical rotation (minimal element first),
/// so two cycles compare equal exactly when their words are rotations of one
/// another. Reflections are *not* identified: `(1 2 3)` ≠ `(1 3 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    elements: Vec<usize>,
}

impl Cycle {
    /// Builds a cycle from its element word, canonicalizing the rotation.
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Parse("cycle must be nonempty".into()));
        }
        let mut seen = BTreeSet::new();
        for &x in &elements {
            if x == 0 {
                return Err(Error::ZeroElement);
            }
            if !seen.insert(x) {
                return Err(Error::DuplicateElement(x));
            }
        }
        let mut elements = elements;
        let min_pos = elements
            .iter()
            .enumerate()
            .min_by_key(|&(_, x)| *x)
            .map(|(i, _)| i)
            .unwrap();
        elements.rotate_left(min_pos);
        Ok(Cycle { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Canonical element word, minimal element first.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn min_element(&self) -> usize {
        self.elements[0]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(&x)
    }

    fn position_of(&self, x: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == x)
    }

    /// Element following `x` in cyclic order, if `x` belongs to the cycle.
    pub fn next(&self, x: usize) -> Option<usize> {
        let i = self.position_of(x)?;
        Some(self.elements[(i + 1) % self.elements.len()])
    }

    /// Element preceding `x` in cyclic order, if `x` belongs to the cycle.
    pub fn prev(&self, x: usize) -> Option<usize> {
        let i = self.position_of(x)?;
        let t = self.elements.len();
        Some(self.elements[(i + t - 1) % t])
    }

    /// The rotation of the element word starting at 1-based position `r`.
    fn rotation(&self, r: usize) -> Vec<usize> {
        let t = self.elements.len();
        (0..t).map(|o| self.elements[(r - 1 + o) % t]).collect()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A permutation of `[n]`, stored as canonical disjoint cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: usize,
    cycles: Vec<Cycle>,
}

impl Permutation {
    /// The identity of the symmetric group on `[n]`.
    ///
    /// Panics if `n` is zero; the ground set must be nonempty.
    pub fn identity(n: usize) -> Permutation {
        assert!(n >= 1, "ground set must be nonempty");
        Permutation {
            n,
            cycles: (1..=n).map(|x| Cycle { elements: vec![x] }).collect(),
        }
    }

    /// Builds a permutation from raw cycle words.
    ///
    /// Elements of `[n]` not mentioned become singleton cycles; `n` defaults
    /// to the maximal element mentioned.
    pub fn from_cycles(cycles: Vec<Vec<usize>>, n: Option<usize>) -> Result<Permutation> {
        let mut built: Vec<Cycle> = Vec::with_capacity(cycles.len());
        let mut support = BTreeSet::new();
        let mut max_elem = 0usize;
        for word in cycles {
            let cycle = Cycle::new(word)?;
            for &x in cycle.elements() {
                if !support.insert(x) {
                    return Err(Error::DuplicateElement(x));
                }
                max_elem = max_elem.max(x);
            }
            built.push(cycle);
        }
        let n = match n {
            Some(n) => {
                if n < max_elem {
                    return Err(Error::ElementOutOfRange {
                        element: max_elem,
                        n,
                    });
                }
                n
            }
            None => max_elem,
        };
        if n == 0 {
            return Err(Error::Parse("permutation has empty ground set".into()));
        }
        for x in 1..=n {
            if !support.contains(&x) {
                built.push(Cycle { elements: vec![x] });
            }
        }
        built.sort_by_key(Cycle::min_element);
        Ok(Permutation { n, cycles: built })
    }

    /// Builds a permutation from its one-line image list: `images[i-1]` is
    /// the image of `i`.
    pub fn from_one_line(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Parse("permutation has empty ground set".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in images {
            if v == 0 {
                return Err(Error::ZeroElement);
            }
            if v > n {
                return Err(Error::ElementOutOfRange { element: v, n });
            }
            if seen[v] {
                return Err(Error::DuplicateElement(v));
            }
            seen[v] = true;
        }
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cycle.push(x);
                x = images[x - 1];
            }
            cycles.push(Cycle { elements: cycle });
        }
        Ok(Permutation { n, cycles })
    }

    /// Parses cycle notation, e.g. `"(1 3)(2 8 5)(4)(6 7)"`.
    ///
    /// Two input styles are accepted. With separators (spaces or commas)
    /// inside a cycle, each token is a full integer, so `"(1 10)"` is the
    /// transposition of 1 and 10. Without separators a multi-character
    /// cycle is read one digit per element (`"(285)"` means 2, 8, 5), the
    /// compact style common for single-digit ground sets; if that reading
    /// is impossible the token is taken as one integer. Omitted elements
    /// become fixed points and `n` defaults to the largest element.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Permutation> {
        let groups = parse_cycle_groups(text)?;
        Permutation::from_cycles(groups, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of disjoint cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Cycle lengths in canonical cycle order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Cycle::len).collect()
    }

    /// 1-based index of the cycle containing `x`.
    pub fn cycle_index_of(&self, x: usize) -> Result<usize> {
        if x == 0 || x > self.n {
            return Err(Error::ElementOutOfRange {
                element: x,
                n: self.n,
            });
        }
        Ok(self
            .cycles
            .iter()
            .position(|c| c.contains(x))
            .expect("cycles partition the ground set")
            + 1)
    }

    /// The cycle with 1-based index `i`.
    pub fn cycle(&self, i: usize) -> &Cycle {
        &self.cycles[i - 1]
    }

    /// Image of `x`. Panics if `x` is outside `[1, n]`.
    pub fn apply(&self, x: usize) -> usize {
        assert!(x >= 1 && x <= self.n, "element out of range");
        self.cycles
            .iter()
            .find_map(|c| c.next(x))
            .expect("cycles partition the ground set")
    }

    /// Preimage of `x`. Panics if `x` is outside `[1, n]`.
    pub fn apply_inverse(&self, x: usize) -> usize {
        assert!(x >= 1 && x <= self.n, "element out of range");
        self.cycles
            .iter()
            .find_map(|c| c.prev(x))
            .expect("cycles partition the ground set")
    }

    pub fn is_identity(&self) -> bool {
        self.cycles.iter().all(|c| c.len() == 1)
    }

    /// One-line image list: entry `i-1` is the image of `i`.
    pub fn one_line(&self) -> Vec<usize> {
        (1..=self.n).map(|x| self.apply(x)).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "{cycle}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        Permutation::parse(s, None)
    }
}

/// Splits parenthesized cycle notation into element groups. Shared by the
/// permutation and factorization parsers.
pub(crate) fn parse_cycle_groups(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut raw_groups: Vec<&str> = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected '(' at \"{rest}\"")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse("unbalanced parenthesis".into()))?;
        let inner = &rest[1..close];
        if inner.contains('(') {
            return Err(Error::Parse("nested parenthesis".into()));
        }
        raw_groups.push(inner);
        rest = &rest[close + 1..];
    }
    let token_groups: Vec<Vec<&str>> = raw_groups
        .iter()
        .map(|g| {
            g.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect()
        })
        .collect();
    if token_groups.iter().any(Vec::is_empty) {
        return Err(Error::Parse("empty cycle \"()\"".into()));
    }

    let has_multi_token = token_groups.iter().any(|g| g.len() > 1);
    if !has_multi_token {
        // Single-token groups: try the compact one-digit-per-element reading.
        let compact: Option<Vec<Vec<usize>>> = token_groups
            .iter()
            .map(|g| {
                g[0].chars()
                    .map(|c| match c {
                        '1'..='9' => Some(c as usize - '0' as usize),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        if let Some(groups) = compact {
            let flat: Vec<usize> = groups.iter().flatten().copied().collect();
            let distinct: BTreeSet<usize> = flat.iter().copied().collect();
            if distinct.len() == flat.len() {
                return Ok(groups);
            }
        }
    }

    token_groups
        .iter()
        .map(|g| {
            g.iter()
                .map(|t| {
                    let v: usize = t
                        .parse()
                        .map_err(|_| Error::Parse(format!("not an integer: \"{t}\"")))?;
                    if v == 0 {
                        return Err(Error::ZeroElement);
                    }
                    Ok(v)
                })
                .collect()
        })
        .collect()
}

/// Product of a transposition sequence, multiplied from right to left: the
/// rightmost factor is applied first, so the result sends `x` to
/// `g_1(g_2(…g_r(x)…))`. The empty sequence yields the identity.
pub fn product_right_to_left(factors: &[(usize, usize)], n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::Parse("permutation has empty ground set".into()));
    }
    for &(a, b) in factors {
        for x in [a, b] {
            if x == 0 || x > n {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
        }
        if a == b {
            return Err(Error::InvalidTransposition(a, b));
        }
    }
    let mut images: Vec<usize> = (1..=n).collect();
    for &(a, b) in factors.iter().rev() {
        for v in images.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }
    Permutation::from_one_line(&images)
}

/// Whether `part` is an excerpt of `whole`: some contiguous arc of
/// `whole`'s cyclic word, read in cyclic order, equals `part` as a cycle.
/// Arcs may have any length from 1 (singleton excerpts) up to the full
/// cycle, which counts as an excerpt of itself.
pub fn is_excerpt(part: &Cycle, whole: &Cycle) -> bool {
    let t = whole.len();
    let s = part.len();
    if s > t {
        return false;
    }
    (0..t).any(|start| {
        let arc: Vec<usize> = (0..s).map(|o| whole.elements[(start + o) % t]).collect();
        Cycle::new(arc).map(|a| a == *part).unwrap_or(false)
    })
}

/// Inserts rotation `r` of `inserted` (1-based start position in its
/// canonical word) as a contiguous block into gap `g` of `host`, where gap
/// `g` sits between the `g`-th and `(g+1)`-th letters of `host`'s canonical
/// word, cyclically.
pub fn merge_cycles(inserted: &Cycle, r: usize, host: &Cycle, g: usize) -> Result<Cycle> {
    if r == 0 || r > inserted.len() {
        return Err(Error::IndexOutOfRange {
            index: r,
            len: inserted.len(),
        });
    }
    if g == 0 || g > host.len() {
        return Err(Error::IndexOutOfRange {
            index: g,
            len: host.len(),
        });
    }
    if let Some(&x) = inserted.elements.iter().find(|x| host.contains(**x)) {
        return Err(Error::OverlappingSupports(x));
    }
    let mut word = host.elements[..g].to_vec();
    word.extend(inserted.rotation(r));
    word.extend(&host.elements[g..]);
    Cycle::new(word)
}

/// Slices a cycle at the given set of gaps (1-based, gap `g` after the
/// `g`-th letter) into the arcs between consecutive cuts. A single cut
/// returns the whole cycle.
pub fn slice_cycle(cycle: &Cycle, cuts: &[usize]) -> Result<Vec<Cycle>> {
    let t = cycle.len();
    let cut_set: BTreeSet<usize> = cuts.iter().copied().collect();
    if cut_set.is_empty() {
        return Err(Error::EmptyCuts);
    }
    for &g in &cut_set {
        if g == 0 || g > t {
            return Err(Error::IndexOutOfRange { index: g, len: t });
        }
    }
    let cs: Vec<usize> = cut_set.into_iter().collect();
    let d = cs.len();
    let mut arcs = Vec::with_capacity(d);
    for i in 0..d {
        let start = cs[i] % t;
        let len = if d == 1 {
            t
        } else {
            (cs[(i + 1) % d] + t - cs[i]) % t
        };
        let word: Vec<usize> = (0..len).map(|o| cycle.elements[(start + o) % t]).collect();
        arcs.push(Cycle::new(word)?);
    }
    Ok(arcs)
}

/// Falling factorial `(a)_b = a (a-1) ⋯ (a-b+1)`, with `(a)_0 = 1`.
pub fn falling_factorial(a: i64, b: u64) -> BigInt {
    (0..b).map(|t| BigInt::from(a - t as i64)).product()
}

/// `n!` as a big integer.
pub(crate) fn factorial(n: usize) -> BigInt {
    falling_factorial(n as i64, n as u64)
}

/// All permutations of `[n]` in lexicographic one-line order. Factorial
/// growth; intended for small `n`.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn extend(prefix: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::from_one_line(prefix).expect("valid one-line word"));
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, n, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        extend(&mut Vec::new(), &mut vec![false; n + 1], n, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(word: &[usize]) -> Cycle {
        Cycle::new(word.to_vec()).unwrap()
    }

    #[test]
    fn parse_compact_example() {
        let p = Permutation::parse("(285)(13)(67)(4)", Some(8)).unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 8 5)(4)(6 7)");
        assert_eq!(p.n(), 8);
    }

    #[test]
    fn parse_identity_of_s1() {
        let p = Permutation::parse("(1)", Some(1)).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.n(), 1);
    }

    #[test]
    fn parse_already_canonical() {
        let p = Permutation::parse("(13)(24)", Some(4)).unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 4)");
    }

    #[test]
    fn parse_fills_fixed_points_and_infers_n() {
        let p = Permutation::parse("(2 5)", None).unwrap();
        assert_eq!(p.n(), 5);
        assert_eq!(p.to_string(), "(1)(2 5)(3)(4)");
    }

    #[test]
    fn parse_spaced_two_digit_elements() {
        let p = Permutation::parse("(1 10)", None).unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.cycle_count(), 9);
    }

    #[test]
    fn parse_roundtrips_large_identity() {
        let id = Permutation::identity(12);
        let back = Permutation::parse(&id.to_string(), None).unwrap();
        assert_eq!(back, id);
    }

    #[test]
    fn parse_errors() {
        assert!(Permutation::parse("(1 2)(2 3)", None).is_err());
        assert!(Permutation::parse("(0 1)", None).is_err());
        assert!(Permutation::parse("((1 2)", None).is_err());
        assert!(Permutation::parse("(1 2", None).is_err());
        assert!(Permutation::parse("1 2", None).is_err());
        assert!(Permutation::parse("()", None).is_err());
        assert!(Permutation::parse("(1 3)", Some(2)).is_err());
    }

    #[test]
    fn cycle_data_examples() {
        let p = Permutation::parse("(13)(285)(4)(67)", None).unwrap();
        assert_eq!(p.cycle_count(), 4);
        assert_eq!(p.cycle_lengths(), vec![2, 3, 1, 2]);

        let id3 = Permutation::identity(3);
        assert_eq!(id3.cycle_count(), 3);
        assert_eq!(id3.cycle_lengths(), vec![1, 1, 1]);

        let c6 = Permutation::parse("(123456)", None).unwrap();
        assert_eq!(c6.cycle_count(), 1);
        assert_eq!(c6.cycle_lengths(), vec![6]);
    }

    #[test]
    fn cycle_index_examples() {
        let p = Permutation::parse("(13)(285)(4)(67)", None).unwrap();
        assert_eq!(p.cycle_index_of(6).unwrap(), 4);
        assert_eq!(p.cycle_index_of(3).unwrap(), 1);
        assert!(p.cycle_index_of(9).is_err());
        let id = Permutation::identity(5);
        for k in 1..=5 {
            assert_eq!(id.cycle_index_of(k).unwrap(), k);
        }
    }

    #[test]
    fn product_worked_example() {
        let factors = [
            (6, 8),
            (6, 1),
            (6, 3),
            (6, 1),
            (6, 2),
            (6, 5),
            (6, 8),
            (6, 7),
            (6, 4),
            (6, 4),
        ];
        let p = product_right_to_left(&factors, 8).unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 8 5)(4)(6 7)");
    }

    #[test]
    fn product_small_cases() {
        let p = product_right_to_left(&[(1, 3), (1, 2)], 3).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)");
        let id = product_right_to_left(&[], 4).unwrap();
        assert!(id.is_identity());
        assert!(product_right_to_left(&[(1, 5)], 4).is_err());
        assert!(product_right_to_left(&[(2, 2)], 4).is_err());
    }

    #[test]
    fn excerpt_examples() {
        assert!(is_excerpt(&cycle(&[1, 5]), &cycle(&[1, 2, 3, 4, 5])));
        assert!(!is_excerpt(&cycle(&[1, 3]), &cycle(&[1, 2, 3, 4])));
        let c = cycle(&[2, 8, 5]);
        assert!(is_excerpt(&c, &c));
        assert!(is_excerpt(&cycle(&[4]), &cycle(&[1, 4, 2])));
        assert!(!is_excerpt(&cycle(&[1, 2, 3, 4, 5]), &cycle(&[1, 2, 3])));
    }

    #[test]
    fn merge_all_gaps() {
        let a = cycle(&[4]);
        let b = cycle(&[1, 3, 2]);
        let merged: Vec<String> = (1..=3)
            .map(|g| merge_cycles(&a, 1, &b, g).unwrap().to_string())
            .collect();
        assert_eq!(merged, vec!["(1 4 3 2)", "(1 3 4 2)", "(1 3 2 4)"]);
    }

    #[test]
    fn merge_two_fixed_points() {
        let m = merge_cycles(&cycle(&[7]), 1, &cycle(&[2]), 1).unwrap();
        assert_eq!(m.to_string(), "(2 7)");
    }

    #[test]
    fn merge_with_rotation() {
        // Block starting at 8 inserted after 7 of (6 7).
        let a = cycle(&[2, 8, 5]);
        let b = cycle(&[6, 7]);
        let m = merge_cycles(&a, 2, &b, 2).unwrap();
        assert_eq!(m.to_string(), "(2 6 7 8 5)");
        assert_eq!(m, cycle(&[6, 7, 8, 5, 2]));
    }

    #[test]
    fn merge_errors() {
        let a = cycle(&[1, 2]);
        let b = cycle(&[2, 3]);
        assert_eq!(
            merge_cycles(&a, 1, &b, 1),
            Err(Error::OverlappingSupports(2))
        );
        let c = cycle(&[5]);
        assert!(merge_cycles(&c, 2, &b, 1).is_err());
        assert!(merge_cycles(&c, 1, &b, 3).is_err());
    }

    #[test]
    fn slice_examples() {
        let c = cycle(&[1, 2, 3, 4, 5]);
        // Cuts before 2, before 4, before 5.
        let arcs = slice_cycle(&c, &[1, 3, 4]).unwrap();
        let shown: Vec<String> = arcs.iter().map(Cycle::to_string).collect();
        assert_eq!(shown, vec!["(2 3)", "(4)", "(1 5)"]);

        let c3 = cycle(&[1, 2, 3]);
        for g in 1..=3 {
            assert_eq!(slice_cycle(&c3, &[g]).unwrap(), vec![c3.clone()]);
        }
        let pairs: BTreeSet<Vec<Cycle>> = [[1, 2], [1, 3], [2, 3]]
            .iter()
            .map(|cuts| {
                let mut arcs = slice_cycle(&c3, cuts).unwrap();
                arcs.sort();
                arcs
            })
            .collect();
        let expect: BTreeSet<Vec<Cycle>> = [
            vec![cycle(&[2]), cycle(&[3, 1])],
            vec![cycle(&[2, 3]), cycle(&[1])],
            vec![cycle(&[3]), cycle(&[1, 2])],
        ]
        .into_iter()
        .map(|mut v| {
            v.sort();
            v
        })
        .collect();
        assert_eq!(pairs, expect);
        assert_eq!(pairs.len(), 3); // binomial(3, 2)
    }

    #[test]
    fn slice_errors() {
        let c = cycle(&[1, 2, 3]);
        assert_eq!(slice_cycle(&c, &[]), Err(Error::EmptyCuts));
        assert!(slice_cycle(&c, &[4]).is_err());
        assert!(slice_cycle(&c, &[0]).is_err());
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(10, 2), BigInt::from(90));
        assert_eq!(falling_factorial(7, 0), BigInt::from(1));
        assert_eq!(falling_factorial(4, 1), BigInt::from(4));
        assert_eq!(falling_factorial(11, 3), BigInt::from(990));
    }

    #[test]
    fn apply_and_inverse() {
        let p = Permutation::parse("(1 3)(2 8 5)(4)(6 7)", None).unwrap();
        assert_eq!(p.apply(2), 8);
        assert_eq!(p.apply(5), 2);
        assert_eq!(p.apply_inverse(8), 2);
        assert_eq!(p.apply(4), 4);
        assert_eq!(p.one_line(), vec![3, 8, 1, 4, 2, 7, 6, 5]);
        assert_eq!(Permutation::from_one_line(&p.one_line()).unwrap(), p);
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(1).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        let s3 = all_permutations(3);
        assert_eq!(s3.len(), 6);
        let distinct: BTreeSet<_> = s3.iter().collect();
        assert_eq!(distinct.len(), 6);
    }
}
