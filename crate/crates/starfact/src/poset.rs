//! The slicing order on the symmetric group: `a ≼ b` when `b` is obtained
//! from `a` by repeatedly slicing cycles into noncrossing arcs. Covers
//! split one cycle into two arcs, rank is the cycle count, n-cycles are
//! the minimal elements and the identity is the unique maximal element.
//! Intervals are products of noncrossing partition lattices; this module
//! builds Hasse diagrams, intervals, the `NC(d)` lattices, the explicit
//! interval isomorphism certificate, and the boolean-interval counts.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::noncross::{is_noncrossing_cyclic, parts_noncrossing};
use crate::perm::{all_permutations, merge_cycles, slice_cycle, Cycle, Permutation};

/// Largest ground set for whole-poset construction (7! = 5040 vertices).
pub const MAX_POSET_N: usize = 7;

/// Largest `d` for noncrossing partition lattice construction.
pub const MAX_NC_GROUND: usize = 8;

/// Whether `a ≼ b` in the slicing order.
///
/// Criterion: every cycle of `b` lies inside a single cycle of `a`; within
/// each cycle of `a` the supports of the `b`-cycles it hosts are mutually
/// noncrossing around its cyclic word; and each hosted cycle, read in the
/// host's cyclic order, equals itself as a cycle. This is the reflexive
/// transitive closure of single slicings.
pub fn leq(a: &Permutation, b: &Permutation) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let mut hosted: Vec<Vec<&Cycle>> = vec![Vec::new(); a.cycle_count()];
    for d in b.cycles() {
        let host_idx = a.cycle_index_of(d.min_element())?;
        let host = a.cycle(host_idx);
        if !d.elements().iter().all(|&x| host.contains(x)) {
            return Ok(false);
        }
        hosted[host_idx - 1].push(d);
    }
    for (idx, parts) in hosted.iter().enumerate() {
        let host = a.cycle(idx + 1);
        let label_word: Vec<usize> = host
            .elements()
            .iter()
            .map(|&x| {
                parts
                    .iter()
                    .position(|d| d.contains(x))
                    .expect("hosted cycles cover the host")
                    + 1
            })
            .collect();
        if !is_noncrossing_cyclic(&label_word) {
            return Ok(false);
        }
        for d in parts {
            let arc: Vec<usize> = host
                .elements()
                .iter()
                .copied()
                .filter(|&x| d.contains(x))
                .collect();
            if Cycle::new(arc)? != **d {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The elements covered by `perm`: all merges of two of its cycles, over
/// every rotation of the inserted cycle and every gap of the host. The
/// count is `Σ_{i<j} ℓ_i ℓ_j`.
pub fn covers_down(perm: &Permutation) -> Vec<Permutation> {
    let m = perm.cycle_count();
    let mut out = BTreeSet::new();
    for i in 1..=m {
        for j in (i + 1)..=m {
            let host = perm.cycle(i);
            let inserted = perm.cycle(j);
            for r in 1..=inserted.len() {
                for g in 1..=host.len() {
                    let merged = merge_cycles(inserted, r, host, g)
                        .expect("disjoint cycles of one permutation");
                    let mut words: Vec<Vec<usize>> = perm
                        .cycles()
                        .iter()
                        .enumerate()
                        .filter(|&(q, _)| q + 1 != i && q + 1 != j)
                        .map(|(_, c)| c.elements().to_vec())
                        .collect();
                    words.push(merged.elements().to_vec());
                    out.insert(
                        Permutation::from_cycles(words, Some(perm.n()))
                            .expect("merged cycles partition the ground set"),
                    );
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The elements covering `perm`: all two-cut slicings of each of its
/// cycles. The count is `Σ_i binomial(ℓ_i, 2)`.
pub fn covers_up(perm: &Permutation) -> Vec<Permutation> {
    let mut out = Vec::new();
    for (idx, cycle) in perm.cycles().iter().enumerate() {
        let len = cycle.len();
        for g1 in 1..=len {
            for g2 in (g1 + 1)..=len {
                let arcs = slice_cycle(cycle, &[g1, g2]).expect("valid cuts");
                let mut words: Vec<Vec<usize>> = perm
                    .cycles()
                    .iter()
                    .enumerate()
                    .filter(|&(q, _)| q != idx)
                    .map(|(_, c)| c.elements().to_vec())
                    .collect();
                words.extend(arcs.iter().map(|c| c.elements().to_vec()));
                out.push(
                    Permutation::from_cycles(words, Some(perm.n()))
                        .expect("arcs partition the ground set"),
                );
            }
        }
    }
    out.sort();
    out
}

fn dot_graph(labels: &[String], ranks: &[usize], edges: &[(usize, usize)]) -> String {
    let mut dot = String::from("digraph star_poset {\n  rankdir=BT;\n  node [shape=box];\n");
    let rank_values: BTreeSet<usize> = ranks.iter().copied().collect();
    for rank in rank_values {
        dot.push_str("  { rank=same;");
        for (idx, label) in labels.iter().enumerate() {
            if ranks[idx] == rank {
                dot.push_str(&format!(" v{idx} [label=\"{label}\"];"));
            }
        }
        dot.push_str(" }\n");
    }
    for &(lo, hi) in edges {
        dot.push_str(&format!("  v{lo} -> v{hi};\n"));
    }
    dot.push_str("}\n");
    dot
}

/// The Hasse diagram of the slicing order on all of `S_n`.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    n: usize,
    vertices: Vec<Permutation>,
    edges: Vec<(usize, usize)>,
    ranks: Vec<usize>,
}

impl HasseDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices sorted by rank (cycle count), then canonical form.
    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    /// Cover pairs as `(lower, upper)` vertex indices.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Cycle count per vertex.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn vertex_index(&self, perm: &Permutation) -> Option<usize> {
        self.vertices.iter().position(|v| v == perm)
    }

    /// Vertices with no cover below them.
    pub fn minimal_elements(&self) -> Vec<&Permutation> {
        let uppers: BTreeSet<usize> = self.edges.iter().map(|&(_, hi)| hi).collect();
        (0..self.vertices.len())
            .filter(|i| !uppers.contains(i))
            .map(|i| &self.vertices[i])
            .collect()
    }

    /// Vertices with no cover above them.
    pub fn maximal_elements(&self) -> Vec<&Permutation> {
        let lowers: BTreeSet<usize> = self.edges.iter().map(|&(lo, _)| lo).collect();
        (0..self.vertices.len())
            .filter(|i| !lowers.contains(i))
            .map(|i| &self.vertices[i])
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = self.vertices.iter().map(Permutation::to_string).collect();
        dot_graph(&labels, &self.ranks, &self.edges)
    }
}

/// Builds the full poset on `S_n`, graded by cycle count.
pub fn build_poset(n: usize) -> Result<HasseDiagram> {
    if n == 0 || n > MAX_POSET_N {
        return Err(Error::BoundExceeded {
            what: "poset ground set",
            requested: n,
            limit: MAX_POSET_N,
        });
    }
    let mut vertices = all_permutations(n);
    vertices.sort_by(|a, b| (a.cycle_count(), a).cmp(&(b.cycle_count(), b)));
    let index: HashMap<&Permutation, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut edges = Vec::new();
    for (lo, vertex) in vertices.iter().enumerate() {
        for upper in covers_up(vertex) {
            edges.push((lo, index[&upper]));
        }
    }
    let ranks: Vec<usize> = vertices.iter().map(Permutation::cycle_count).collect();
    Ok(HasseDiagram {
        n,
        vertices,
        edges,
        ranks,
    })
}

/// The induced subposet of a closed interval `[bottom, top]`, with its
/// cover edges.
#[derive(Debug, Clone)]
pub struct IntervalPoset {
    bottom: Permutation,
    top: Permutation,
    elements: Vec<Permutation>,
    edges: Vec<(usize, usize)>,
    ranks: Vec<usize>,
}

impl IntervalPoset {
    pub fn bottom(&self) -> &Permutation {
        &self.bottom
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank difference between top and bottom.
    pub fn height(&self) -> usize {
        self.top.cycle_count() - self.bottom.cycle_count()
    }

    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = self.elements.iter().map(Permutation::to_string).collect();
        dot_graph(&labels, &self.ranks, &self.edges)
    }
}

/// Builds the interval `[lower, upper]`; errors if the endpoints are
/// incomparable.
pub fn interval(lower: &Permutation, upper: &Permutation) -> Result<IntervalPoset> {
    if !leq(lower, upper)? {
        return Err(Error::Incomparable);
    }
    let mut set: BTreeSet<Permutation> = BTreeSet::new();
    set.insert(lower.clone());
    let mut queue: VecDeque<Permutation> = VecDeque::from([lower.clone()]);
    while let Some(current) = queue.pop_front() {
        for candidate in covers_up(&current) {
            if !set.contains(&candidate) && leq(&candidate, upper)? {
                set.insert(candidate.clone());
                queue.push_back(candidate);
            }
        }
    }
    let mut elements: Vec<Permutation> = set.into_iter().collect();
    elements.sort_by(|a, b| (a.cycle_count(), a).cmp(&(b.cycle_count(), b)));
    let index: HashMap<&Permutation, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut edges = Vec::new();
    for (lo, element) in elements.iter().enumerate() {
        for upper_cover in covers_up(element) {
            if let Some(&hi) = index.get(&upper_cover) {
                edges.push((lo, hi));
            }
        }
    }
    let ranks: Vec<usize> = elements.iter().map(Permutation::cycle_count).collect();
    Ok(IntervalPoset {
        bottom: lower.clone(),
        top: upper.clone(),
        elements,
        edges,
        ranks,
    })
}

/// The lattice of noncrossing partitions of `[d]` under refinement, with
/// the all-singletons partition at the bottom. Its size is the Catalan
/// number `C_d`, and the poset is self-dual.
#[derive(Debug, Clone)]
pub struct NCLattice {
    d: usize,
    elements: Vec<Vec<Vec<usize>>>,
}

impl NCLattice {
    pub fn d(&self) -> usize {
        self.d
    }

    /// Partitions as sorted blocks, in restricted-growth enumeration order.
    pub fn elements(&self) -> &[Vec<Vec<usize>>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, parts: &[Vec<usize>]) -> Option<usize> {
        let normalized = normalize_partition(parts);
        self.elements.iter().position(|e| *e == normalized)
    }

    /// Whether element `i` is below element `j`, i.e. refines it.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        refines(&self.elements[i], &self.elements[j])
    }
}

/// Kreweras complement of a partition of `[t]` read around a circle: the
/// coarsest partition of the gap points that together with `parts` stays
/// noncrossing. Gap `i` sits after element `i`; gaps `i < j` join exactly
/// when `{i+1, …, j}` is a union of complete blocks.
pub(crate) fn kreweras_complement(parts: &[Vec<usize>], t: usize) -> Vec<Vec<usize>> {
    let mut repr: Vec<usize> = (0..=t).collect();
    fn find(repr: &mut Vec<usize>, x: usize) -> usize {
        if repr[x] != x {
            let root = find(repr, repr[x]);
            repr[x] = root;
        }
        repr[x]
    }
    for i in 1..=t {
        for j in (i + 1)..=t {
            let window: BTreeSet<usize> = (i + 1..=j).collect();
            let union_of_blocks = parts.iter().all(|block| {
                let inside = block.iter().filter(|x| window.contains(x)).count();
                inside == 0 || inside == block.len()
            });
            if union_of_blocks {
                let (a, b) = (find(&mut repr, i), find(&mut repr, j));
                repr[a] = b;
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 1..=t {
        let root = find(&mut repr, x);
        blocks.entry(root).or_default().push(x);
    }
    normalize_partition(&blocks.into_values().collect::<Vec<_>>())
}

/// Sorts blocks internally and by minimum.
pub(crate) fn normalize_partition(parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut normalized: Vec<Vec<usize>> = parts
        .iter()
        .map(|block| {
            let mut b = block.clone();
            b.sort_unstable();
            b
        })
        .collect();
    normalized.sort();
    normalized
}

/// Whether every block of `p` is contained in a block of `q`.
pub fn refines(p: &[Vec<usize>], q: &[Vec<usize>]) -> bool {
    let mut owner = BTreeMap::new();
    for (idx, block) in q.iter().enumerate() {
        for &x in block {
            owner.insert(x, idx);
        }
    }
    p.iter().all(|block| {
        let Some(&first_owner) = owner.get(&block[0]) else {
            return false;
        };
        block.iter().all(|x| owner.get(x) == Some(&first_owner))
    })
}

/// Builds `NC(d)` by filtering all set partitions of `[d]`.
pub fn nc_lattice(d: usize) -> Result<NCLattice> {
    if d == 0 || d > MAX_NC_GROUND {
        return Err(Error::BoundExceeded {
            what: "noncrossing lattice ground set",
            requested: d,
            limit: MAX_NC_GROUND,
        });
    }
    // Restricted-growth strings enumerate each set partition once.
    fn extend(rgs: &mut Vec<usize>, max_used: usize, d: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if rgs.len() == d {
            let block_count = max_used + 1;
            let mut blocks = vec![Vec::new(); block_count];
            for (pos0, &b) in rgs.iter().enumerate() {
                blocks[b].push(pos0 + 1);
            }
            if parts_noncrossing(&blocks) {
                out.push(normalize_partition(&blocks));
            }
            return;
        }
        for b in 0..=max_used + 1 {
            rgs.push(b);
            extend(rgs, max_used.max(b), d, out);
            rgs.pop();
        }
    }
    let mut elements = Vec::new();
    let mut rgs = vec![0usize];
    extend(&mut rgs, 0, d, &mut elements);
    Ok(NCLattice { d, elements })
}

/// One lattice factor of an interval: a cycle of the bottom permutation,
/// the cycles of the top it is sliced into, and the component of gap
/// positions carrying this factor. The factor contributes `NC(d)` with
/// `d` the component size; when the top's parts are plain arcs of the
/// cycle there is a single nontrivial component whose size is the number
/// of parts.
#[derive(Debug, Clone)]
pub struct NcIsoFactor {
    pub cycle: Cycle,
    pub excerpts: Vec<Cycle>,
    /// Gap positions (1-based along the cycle word) of this component.
    pub component: Vec<usize>,
}

impl NcIsoFactor {
    /// Size `d` of this factor's noncrossing lattice `NC(d)`.
    pub fn size(&self) -> usize {
        self.component.len()
    }
}

fn partition_display(parts: &[Vec<usize>]) -> String {
    parts
        .iter()
        .map(|block| {
            let inner: Vec<String> = block.iter().map(ToString::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect()
}

/// The verification certificate for the interval-to-product-of-`NC(d)`
/// isomorphism: the factor decomposition, the explicit assignment of each
/// interval element to its tuple of factor coordinates, and a pass flag
/// with failure notes.
#[derive(Debug, Clone)]
pub struct NcIsoReport {
    pub factors: Vec<NcIsoFactor>,
    /// `(element, coordinate per factor)` in element order, displayed.
    pub assignments: Vec<(String, Vec<String>)>,
    pub interval_size: usize,
    pub expected_size: usize,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Positions (1-based) occupied along `cycle`'s canonical word by each of
/// the cycles of `fine` lying inside it, one block per hosted cycle.
fn position_partition(cycle: &Cycle, fine: &Permutation) -> Vec<Vec<usize>> {
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (pos0, &x) in cycle.elements().iter().enumerate() {
        let owner = fine
            .cycle_index_of(x)
            .expect("hosted elements are in range");
        blocks.entry(owner).or_default().push(pos0 + 1);
    }
    normalize_partition(&blocks.into_values().collect::<Vec<_>>())
}

/// Maps every element of `[lower, upper]` to a tuple of noncrossing
/// partitions, one per lattice factor, and verifies the map is a bijection
/// onto the product of the `NC(d)` that matches the order in both
/// directions. A passing certificate establishes the interval is
/// isomorphic to the product of noncrossing partition lattices whose
/// sizes the factors report.
///
/// The factor components of each sliced cycle are the blocks of the
/// Kreweras complement of the positions its top-side parts occupy; an
/// element's coordinate in a factor is the complement of its own position
/// partition restricted to that component. When every part is a plain arc
/// this reduces to one `NC(d)` per cycle with `d` parts, and the
/// coordinate to the partition grouping arcs by the element's cycles.
pub fn interval_nc_iso(lower: &Permutation, upper: &Permutation) -> Result<NcIsoReport> {
    let iv = interval(lower, upper)?;
    let mut failures = Vec::new();

    let mut factors = Vec::new();
    // Per cycle of `lower`: its excerpt list (for the report) and the
    // Kreweras components that carry the lattice factors.
    let mut cycle_components: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    for (idx, cycle) in lower.cycles().iter().enumerate() {
        let mut excerpts: Vec<Cycle> = upper
            .cycles()
            .iter()
            .filter(|d| cycle.contains(d.min_element()))
            .cloned()
            .collect();
        excerpts.sort_by_key(|d| {
            cycle
                .elements()
                .iter()
                .position(|x| d.contains(*x))
                .expect("excerpt lies inside the cycle")
        });
        let base = position_partition(cycle, upper);
        let components = kreweras_complement(&base, cycle.len());
        for component in &components {
            factors.push(NcIsoFactor {
                cycle: cycle.clone(),
                excerpts: excerpts.clone(),
                component: component.clone(),
            });
        }
        cycle_components.push((idx, components));
    }

    let lattices = factors
        .iter()
        .map(|f| nc_lattice(f.size()))
        .collect::<Result<Vec<NCLattice>>>()?;
    let expected_size = lattices.iter().map(NCLattice::len).product::<usize>();

    // Coordinates of every interval element.
    let mut images: Vec<Vec<Vec<Vec<usize>>>> = Vec::with_capacity(iv.len());
    for element in iv.elements() {
        let mut tuple = Vec::new();
        for &(cycle_idx, ref components) in &cycle_components {
            let cycle = &lower.cycles()[cycle_idx];
            let complement = kreweras_complement(&position_partition(cycle, element), cycle.len());
            for component in components {
                // Restrict the complement to this component, relabeling
                // positions by their rank inside it.
                let rank: BTreeMap<usize, usize> = component
                    .iter()
                    .enumerate()
                    .map(|(r, &pos)| (pos, r + 1))
                    .collect();
                let mut restricted: Vec<Vec<usize>> = Vec::new();
                for block in &complement {
                    let inside: Vec<usize> =
                        block.iter().filter_map(|pos| rank.get(pos).copied()).collect();
                    if inside.len() != block.len() && !inside.is_empty() {
                        failures.push(format!(
                            "element {element}: complement block straddles components on cycle {cycle}"
                        ));
                    }
                    if !inside.is_empty() {
                        restricted.push(inside);
                    }
                }
                let restricted = normalize_partition(&restricted);
                if !parts_noncrossing(&restricted) {
                    failures.push(format!(
                        "element {element} has a crossing coordinate {} on cycle {cycle}",
                        partition_display(&restricted)
                    ));
                }
                tuple.push(restricted);
            }
        }
        images.push(tuple);
    }

    if iv.len() != expected_size {
        failures.push(format!(
            "interval has {} elements, product of lattices has {expected_size}",
            iv.len()
        ));
    }
    let distinct: BTreeSet<&Vec<Vec<Vec<usize>>>> = images.iter().collect();
    if distinct.len() != images.len() {
        failures.push("assignment is not injective".into());
    }
    for s in 0..iv.len() {
        for t in 0..iv.len() {
            let below = leq(&iv.elements()[s], &iv.elements()[t])?;
            let componentwise =
                (0..factors.len()).all(|f| refines(&images[s][f], &images[t][f]));
            if below != componentwise {
                failures.push(format!(
                    "order agreement fails between {} and {}",
                    iv.elements()[s],
                    iv.elements()[t]
                ));
            }
        }
    }

    let assignments = iv
        .elements()
        .iter()
        .zip(&images)
        .map(|(element, tuple)| {
            (
                element.to_string(),
                tuple.iter().map(|p| partition_display(p)).collect(),
            )
        })
        .collect();
    Ok(NcIsoReport {
        factors,
        assignments,
        interval_size: iv.len(),
        expected_size,
        pass: failures.is_empty(),
        failures,
    })
}

/// Whether `[lower, upper]` is boolean, i.e. isomorphic to a boolean
/// algebra: every lattice factor must be `NC(1)` or `NC(2)`, so every
/// Kreweras component of every sliced cycle has at most two gaps. When
/// the upper parts are plain arcs this is the condition that each cycle
/// of `lower` is sliced into at most two arcs.
pub fn is_boolean_interval(lower: &Permutation, upper: &Permutation) -> Result<bool> {
    if !leq(lower, upper)? {
        return Err(Error::Incomparable);
    }
    for cycle in lower.cycles() {
        let base = position_partition(cycle, upper);
        if kreweras_complement(&base, cycle.len())
            .iter()
            .any(|component| component.len() > 2)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of boolean intervals `[σ, perm]` in which σ merges the cycles
/// of `perm` in disjoint pairs: a sum over partial matchings of the cycle
/// indices, each matched pair `{i, j}` weighted `ℓ_i ℓ_j`. Merging two
/// cycles always yields a boolean interval, and below the identity (or
/// any permutation of short cycles) these are all of them, so the count
/// specializes to the involution numbers there.
pub fn count_boolean_above(perm: &Permutation) -> BigInt {
    fn matchings(free: &[usize], lengths: &[usize]) -> BigInt {
        if free.len() <= 1 {
            return BigInt::from(1);
        }
        let first = free[0];
        let rest = &free[1..];
        let mut total = matchings(rest, lengths);
        for (pos, &partner) in rest.iter().enumerate() {
            let mut remaining = rest.to_vec();
            remaining.remove(pos);
            total += BigInt::from(lengths[first] * lengths[partner])
                * matchings(&remaining, lengths);
        }
        total
    }
    let lengths = perm.cycle_lengths();
    let indices: Vec<usize> = (0..lengths.len()).collect();
    matchings(&indices, &lengths)
}

/// Number of boolean intervals with `perm` as minimal element. Slicings
/// of one cycle of length `ℓ` correspond to the noncrossing partitions of
/// `[ℓ]`, and the boolean ones to those whose Kreweras complement is a
/// partial matching; there are Motzkin-number `M_ℓ` of those, so the
/// count is `Π_i M_{ℓ_i}`.
pub fn count_boolean_below(perm: &Permutation) -> BigInt {
    perm.cycle_lengths()
        .iter()
        .map(|&len| motzkin(len))
        .product()
}

/// Motzkin numbers by the convolution recurrence.
fn motzkin(n: usize) -> BigInt {
    let mut m: Vec<BigInt> = vec![BigInt::from(1), BigInt::from(1)];
    for i in 1..n {
        let mut next = m[i].clone();
        for k in 0..i {
            next += m[k].clone() * m[i - 1 - k].clone();
        }
        m.push(next);
    }
    m[n].clone()
}
