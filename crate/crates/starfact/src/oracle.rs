//! Brute-force reference implementations used only for cross-checking the
//! structural algorithms at small sizes. Nothing here shares logic with
//! the code it validates: products are recomputed on one-line arrays,
//! crossings are tested straight from the four-point definition, and the
//! order relation is decided by raw search.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poset::IntervalPoset;
use crate::star::{enumerate_factorizations, StarFactorization};

/// Default ceiling on the number of candidate words a brute search may
/// visit.
pub const DEFAULT_WORD_BUDGET: u128 = 100_000_000;

/// Largest `n` for the subword order oracle.
pub const MAX_SUBWORD_N: usize = 4;

/// Largest `n` for the slicing reachability oracle.
pub const MAX_REACHABILITY_N: usize = 6;

/// Largest interval height for the hypercube isomorphism check.
pub const MAX_HYPERCUBE_RANK: usize = 6;

/// Outcome of one oracle-versus-implementation comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub subject: String,
    pub instance: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl OracleReport {
    pub fn new(
        subject: impl Into<String>,
        instance: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> OracleReport {
        let expected = expected.into();
        let actual = actual.into();
        let pass = expected == actual;
        OracleReport {
            subject: subject.into(),
            instance: instance.into(),
            expected,
            actual,
            pass,
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] expected={} actual={} {}",
            self.subject,
            self.instance,
            self.expected,
            self.actual,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

/// One-line image array of `perm`, computed directly from its cycles.
fn one_line_of(perm: &Permutation) -> Vec<usize> {
    let n = perm.n();
    let mut images: Vec<usize> = (0..=n).collect();
    for cycle in perm.cycles() {
        let word = cycle.elements();
        for (i, &x) in word.iter().enumerate() {
            images[x] = word[(i + 1) % word.len()];
        }
    }
    images
}

/// Every sequence over `[n] \ {k}` of length `n + m - 2` whose right-to-left
/// product is `perm` and whose companion set covers all of `[n] \ {k}`,
/// found by exhausting all `(n-1)^(n+m-2)` candidate words.
pub fn brute_star_factorizations(
    perm: &Permutation,
    k: usize,
) -> Result<Vec<StarFactorization>> {
    let n = perm.n();
    if k == 0 || k > n {
        return Err(Error::ElementOutOfRange { element: k, n });
    }
    let m = perm.cycle_count();
    let length = n + m - 2;
    let pool: Vec<usize> = (1..=n).filter(|&x| x != k).collect();
    let candidates = (pool.len() as u128).pow(length as u32);
    if candidates > DEFAULT_WORD_BUDGET {
        return Err(Error::BudgetExceeded {
            required: candidates,
            budget: DEFAULT_WORD_BUDGET,
        });
    }
    let target = one_line_of(perm);

    let mut out = Vec::new();
    let mut word = vec![0usize; length]; // indices into pool
    loop {
        let companions: Vec<usize> = word.iter().map(|&i| pool[i]).collect();
        let covered: BTreeSet<usize> = companions.iter().copied().collect();
        if covered.len() == pool.len() {
            // Apply factors right to left on a one-line array.
            let mut images: Vec<usize> = (0..=n).collect();
            for &c in companions.iter().rev() {
                for v in images.iter_mut().skip(1) {
                    if *v == k {
                        *v = c;
                    } else if *v == c {
                        *v = k;
                    }
                }
            }
            if images == target {
                out.push(
                    StarFactorization::new(n, k, companions)
                        .expect("companions drawn from the valid pool"),
                );
            }
        }
        // Odometer over the candidate words, last position fastest.
        let mut axis = length;
        loop {
            if axis == 0 {
                return Ok(out);
            }
            axis -= 1;
            word[axis] += 1;
            if word[axis] < pool.len() {
                break;
            }
            word[axis] = 0;
        }
        if length == 0 {
            return Ok(out);
        }
    }
}

/// All assignments of `[Σ sizes]` into labeled parts of the given sizes
/// that pass the four-point crossing test, by exhausting combinations.
pub fn brute_lnc(sizes: &[usize]) -> Result<Vec<Vec<Vec<usize>>>> {
    let ground: usize = sizes.iter().sum();
    if ground > 10 {
        return Err(Error::BoundExceeded {
            what: "brute partition ground set",
            requested: ground,
            limit: 10,
        });
    }
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::Parse("part sizes must be positive".into()));
    }

    fn four_point_crossing(a: &[usize], b: &[usize]) -> bool {
        for &x in a {
            for &y in b {
                for &z in a {
                    for &w in b {
                        if x < y && y < z && z < w {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn choose(pool: &[usize], size: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
        // (chosen, remaining) pairs, chosen in ascending order.
        if size == 0 {
            return vec![(Vec::new(), pool.to_vec())];
        }
        let mut out = Vec::new();
        for (i, &x) in pool.iter().enumerate() {
            if pool.len() - i < size {
                break;
            }
            let rest: Vec<usize> = pool[i + 1..].to_vec();
            for (mut chosen, mut remaining) in choose(&rest, size - 1) {
                chosen.insert(0, x);
                let mut rem = pool[..i].to_vec();
                rem.append(&mut remaining);
                out.push((chosen, rem));
            }
        }
        out
    }

    fn assign(
        sizes: &[usize],
        pool: Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        match sizes.split_first() {
            None => {
                for i in 0..acc.len() {
                    for j in i + 1..acc.len() {
                        if four_point_crossing(&acc[i], &acc[j])
                            || four_point_crossing(&acc[j], &acc[i])
                        {
                            return;
                        }
                    }
                }
                out.push(acc.clone());
            }
            Some((&first, rest)) => {
                for (chosen, remaining) in choose(&pool, first) {
                    acc.push(chosen);
                    assign(rest, remaining, acc, out);
                    acc.pop();
                }
            }
        }
    }

    let pool: Vec<usize> = (1..=ground).collect();
    let mut out = Vec::new();
    assign(sizes, pool, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Whether some factorization of `a` is a scattered subword of some
/// factorization of `b`, both with pivot `k`. This is the literal subword
/// reading of the order; feasible only at very small sizes.
pub fn subword_leq_oracle(a: &Permutation, b: &Permutation, k: usize) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if a.n() > MAX_SUBWORD_N {
        return Err(Error::BoundExceeded {
            what: "subword oracle ground set",
            requested: a.n(),
            limit: MAX_SUBWORD_N,
        });
    }
    let gammas: Vec<Vec<usize>> = enumerate_factorizations(a, k)?
        .map(|g| g.companions().to_vec())
        .collect();
    let deltas: Vec<Vec<usize>> = enumerate_factorizations(b, k)?
        .map(|d| d.companions().to_vec())
        .collect();

    fn is_subsequence(needle: &[usize], haystack: &[usize]) -> bool {
        let mut want = needle.iter();
        let mut next = want.next();
        for &x in haystack {
            match next {
                Some(&w) if w == x => next = want.next(),
                Some(_) => {}
                None => break,
            }
        }
        next.is_none()
    }

    Ok(gammas
        .iter()
        .any(|g| deltas.iter().any(|d| is_subsequence(g, d))))
}

/// Whether `b` is reachable from `a` by repeatedly replacing one cycle
/// with two of its arcs, by breadth-first search on raw cycle lists.
pub fn reachability_leq_oracle(a: &Permutation, b: &Permutation) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if a.n() > MAX_REACHABILITY_N {
        return Err(Error::BoundExceeded {
            what: "reachability oracle ground set",
            requested: a.n(),
            limit: MAX_REACHABILITY_N,
        });
    }

    fn normalize(mut cycles: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        for cycle in cycles.iter_mut() {
            let min_pos = cycle
                .iter()
                .enumerate()
                .min_by_key(|&(_, x)| *x)
                .map(|(i, _)| i)
                .unwrap();
            cycle.rotate_left(min_pos);
        }
        cycles.sort();
        cycles
    }

    let start = normalize(a.cycles().iter().map(|c| c.elements().to_vec()).collect());
    let target = normalize(b.cycles().iter().map(|c| c.elements().to_vec()).collect());
    let target_rank = target.len();

    let mut seen: HashSet<Vec<Vec<usize>>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        if state == target {
            return Ok(true);
        }
        if state.len() >= target_rank {
            continue;
        }
        for (idx, cycle) in state.iter().enumerate() {
            let t = cycle.len();
            if t < 2 {
                continue;
            }
            for c1 in 0..t {
                for c2 in c1 + 1..t {
                    // Split after positions c1 and c2.
                    let first: Vec<usize> = (c1 + 1..=c2).map(|q| cycle[q]).collect();
                    let second: Vec<usize> = (c2 + 1..c2 + 1 + t - (c2 - c1))
                        .map(|q| cycle[q % t])
                        .collect();
                    let mut next: Vec<Vec<usize>> = state
                        .iter()
                        .enumerate()
                        .filter(|&(q, _)| q != idx)
                        .map(|(_, c)| c.clone())
                        .collect();
                    next.push(first);
                    next.push(second);
                    let next = normalize(next);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Whether the interval is isomorphic to the boolean lattice of its
/// height, checked on the interval's own cover graph: the rank profile
/// must be binomial and mapping each element to its set of atoms below
/// must be an order embedding onto the full power set.
pub fn hypercube_iso(iv: &IntervalPoset) -> Result<bool> {
    let rank = iv.height();
    if rank > MAX_HYPERCUBE_RANK {
        return Err(Error::BoundExceeded {
            what: "hypercube oracle rank",
            requested: rank,
            limit: MAX_HYPERCUBE_RANK,
        });
    }
    let size = iv.len();
    if size != 1usize << rank {
        return Ok(false);
    }

    // Up-set reachability from the cover edges.
    let mut above: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); size];
    let mut ups: Vec<Vec<usize>> = vec![Vec::new(); size];
    for &(lo, hi) in iv.edges() {
        ups[lo].push(hi);
    }
    for s in (0..size).rev() {
        let mut reach = BTreeSet::from([s]);
        for &u in &ups[s] {
            reach.extend(above[u].iter().copied());
        }
        above[s] = reach;
    }
    let reaches = |lo: usize, hi: usize| above[lo].contains(&hi);

    let bottom_rank = iv.ranks()[0];
    for h in 0..=rank {
        let count = iv
            .ranks()
            .iter()
            .filter(|&&r| r - bottom_rank == h)
            .count();
        if count != binomial(rank, h) {
            return Ok(false);
        }
    }

    let bottom = (0..size)
        .find(|&s| iv.ranks()[s] == bottom_rank)
        .expect("interval is nonempty");
    let atoms: Vec<usize> = ups[bottom].clone();
    if atoms.len() != rank {
        return Ok(false);
    }

    let atom_sets: Vec<BTreeSet<usize>> = (0..size)
        .map(|s| {
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &a)| reaches(a, s))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let distinct: BTreeSet<&BTreeSet<usize>> = atom_sets.iter().collect();
    if distinct.len() != size {
        return Ok(false);
    }
    for s in 0..size {
        for t in 0..size {
            if reaches(s, t) != atom_sets[s].is_subset(&atom_sets[t]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1usize;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::interval;

    fn perm(text: &str) -> Permutation {
        Permutation::parse(text, None).unwrap()
    }

    #[test]
    fn brute_identity_s3() {
        let found = brute_star_factorizations(&Permutation::identity(3), 1).unwrap();
        let words: BTreeSet<Vec<usize>> =
            found.iter().map(|d| d.companions().to_vec()).collect();
        let expect: BTreeSet<Vec<usize>> = [
            vec![2, 2, 3, 3],
            vec![3, 3, 2, 2],
            vec![2, 3, 3, 2],
            vec![3, 2, 2, 3],
        ]
        .into_iter()
        .collect();
        assert_eq!(words, expect);
    }

    #[test]
    fn brute_three_cycle() {
        let found = brute_star_factorizations(&perm("(123)"), 1).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].to_string(), "(1 3)(1 2)");
    }

    #[test]
    fn brute_two_transpositions() {
        let found = brute_star_factorizations(&perm("(13)(24)"), 1).unwrap();
        assert_eq!(found.len(), 4);
    }

    #[test]
    fn brute_empty_for_singleton() {
        let found = brute_star_factorizations(&Permutation::identity(1), 1).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].is_empty());
    }

    #[test]
    fn brute_budget() {
        let id = Permutation::identity(8);
        assert!(matches!(
            brute_star_factorizations(&id, 1),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn brute_lnc_counts() {
        assert_eq!(brute_lnc(&[2, 2]).unwrap().len(), 4);
        assert_eq!(brute_lnc(&[7]).unwrap().len(), 1);
        assert_eq!(brute_lnc(&[2, 1, 1]).unwrap().len(), 12);
        assert!(matches!(
            brute_lnc(&[6, 5]),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn subword_oracle_examples() {
        assert!(subword_leq_oracle(&perm("(1234)"), &perm("(13)(2)(4)"), 1).unwrap());
        assert!(!subword_leq_oracle(&perm("(1234)"), &perm("(13)(24)"), 1).unwrap());
        let p = perm("(12)(34)");
        assert!(subword_leq_oracle(&p, &p, 2).unwrap());
    }

    #[test]
    fn reachability_examples() {
        assert!(reachability_leq_oracle(&perm("(1234)"), &perm("(13)(2)(4)")).unwrap());
        let p = perm("(132)");
        assert!(reachability_leq_oracle(&p, &p).unwrap());
        assert!(reachability_leq_oracle(&p, &perm("(12)(3)")).unwrap());
        assert!(!reachability_leq_oracle(&perm("(1234)"), &perm("(13)(24)")).unwrap());
    }

    #[test]
    fn hypercube_examples() {
        let boolean = interval(&perm("(1423)"), &perm("(123)(4)")).unwrap();
        assert!(hypercube_iso(&boolean).unwrap());

        let nc3 = interval(&perm("(123)"), &Permutation::identity(3)).unwrap();
        assert!(!hypercube_iso(&nc3).unwrap());

        let p = perm("(12)(3)");
        let point = interval(&p, &p).unwrap();
        assert!(hypercube_iso(&point).unwrap());
    }
}
