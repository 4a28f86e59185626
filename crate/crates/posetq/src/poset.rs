//! Finite strict partial orders with dense relation storage.
//!
//! A [`Poset`] keeps its strict order `i < j` as one bitset row per element,
//! so comparability queries are O(1) and closure/reduction are word-parallel.
//! All instances here are desk scale (up to a few thousand elements), where
//! the quadratic footprint is irrelevant and the constant-time `lt` dominates
//! every downstream algorithm.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A finite strict partial order on elements `0..n`.
///
/// Invariants (enforced by construction):
/// - irreflexive: `lt(i, i)` never holds,
/// - antisymmetric: `lt(i, j)` and `lt(j, i)` never both hold,
/// - transitively closed: `lt(i, j)` and `lt(j, k)` imply `lt(i, k)`.
///
/// Equality is structural: same ground set size and same relation; labels
/// are presentation only.
#[derive(Clone)]
pub struct Poset {
    n: usize,
    words: usize,
    /// Row i holds the up-set of i: bit j set iff i < j.
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Poset {}

/// The transitive reduction of a poset: exactly the cover pairs `(u, v)`,
/// sorted ascending. Unique for finite strict orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

/// A permutation of `0..n` respecting the order: `lt(i, j)` implies
/// `i` is placed before `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearExtension {
    /// Element at each position.
    order: Vec<usize>,
    /// Position of each element (inverse of `order`).
    pos: Vec<usize>,
}

/// Two linear extensions whose intersection is exactly the order;
/// a certificate that the poset is 2-dimensional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizer {
    pub lx: LinearExtension,
    pub ly: LinearExtension,
}

/// A partition of the ground set into chains, `chain_of[i]` in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPartition {
    pub chain_of: Vec<usize>,
    pub k: usize,
}

/// Output of [`Poset::width`]: the width together with both Dilworth
/// certificates (a maximum antichain and a minimum chain partition of the
/// same size).
#[derive(Debug, Clone)]
pub struct WidthCertificate {
    pub width: usize,
    pub antichain: Vec<usize>,
    pub chains: ChainPartition,
}

impl Poset {
    /// Builds the poset generated by `pairs` (each meaning `i < j`) via
    /// transitive closure. Rejects out-of-range indices and cycles; a cycle
    /// is reported with an element witness path.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        for &(i, j) in pairs {
            let bad = if i >= n { Some(i) } else if j >= n { Some(j) } else { None };
            if let Some(index) = bad {
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        let words = words_for(n);
        let mut rows = vec![0u64; n * words];
        for &(i, j) in pairs {
            if i == j {
                return Err(Error::CycleDetected(vec![i, i]));
            }
            rows[i * words + j / WORD] |= 1 << (j % WORD);
        }
        close_in_place(&mut rows, n, words);
        for i in 0..n {
            if rows[i * words + i / WORD] >> (i % WORD) & 1 == 1 {
                return Err(Error::CycleDetected(find_cycle(n, pairs, i)));
            }
        }
        Ok(Poset { n, words, rows, labels: None })
    }

    /// The n-element antichain (empty relation).
    pub fn antichain(n: usize) -> Poset {
        Poset { n, words: words_for(n), rows: vec![0; n * words_for(n)], labels: None }
    }

    /// The n-element chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_relations(n, &pairs).expect("chain generators are acyclic")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Poset {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff `i < j` in the order.
    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) || self.lt(j, i)
    }

    /// All strict order pairs `(i, j)` with `i < j`, ascending.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.successors(i) {
                out.push((i, j));
            }
        }
        out
    }

    /// Iterator over the up-set of `i` in index order.
    pub fn successors(&self, i: usize) -> BitRowIter<'_> {
        BitRowIter::new(&self.rows[i * self.words..(i + 1) * self.words])
    }

    /// Number of strict order pairs.
    pub fn relation_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The dual poset: same ground set, every relation reversed.
    pub fn dual(&self) -> Poset {
        let mut rows = vec![0u64; self.n * self.words];
        for i in 0..self.n {
            for j in self.successors(i) {
                rows[j * self.words + i / WORD] |= 1 << (i % WORD);
            }
        }
        Poset { n: self.n, words: self.words, rows, labels: self.labels.clone() }
    }

    /// Exactly the cover pairs: `(u, v)` with `u < v` and nothing strictly
    /// between. Re-closing the covers reproduces the poset.
    pub fn cover_edges(&self) -> CoverGraph {
        let mut edges = Vec::new();
        let mut via = vec![0u64; self.words];
        for i in 0..self.n {
            via.fill(0);
            // Everything reachable through an intermediate k with i < k.
            for k in self.successors(i) {
                let krow = &self.rows[k * self.words..(k + 1) * self.words];
                for (acc, w) in via.iter_mut().zip(krow) {
                    *acc |= w;
                }
            }
            let irow = &self.rows[i * self.words..(i + 1) * self.words];
            for (w, (own, skip)) in irow.iter().zip(via.iter()).enumerate() {
                let mut bits = own & !skip;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    edges.push((i, w * WORD + b));
                    bits &= bits - 1;
                }
            }
        }
        edges.sort_unstable();
        CoverGraph { n: self.n, edges }
    }

    /// True iff `order` respects every relation. Errors if `order` is not a
    /// permutation of `0..n`.
    pub fn is_linear_extension(&self, order: &[usize]) -> Result<bool> {
        let pos = invert_permutation(order, self.n)?;
        for i in 0..self.n {
            for j in self.successors(i) {
                if pos[i] > pos[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Streams every linear extension exactly once, lexicographically by
    /// element index at each minimal-choice point. The stream is
    /// deterministic; consuming it fully visits e(P) extensions.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }

    /// Counts linear extensions by enumeration, aborting once the count
    /// would exceed `cap`.
    pub fn count_linear_extensions(&self, cap: u64) -> Result<u64> {
        let mut count = 0u64;
        for _ in self.linear_extensions() {
            count += 1;
            if count > cap {
                return Err(Error::CountExceeded { cap });
            }
        }
        Ok(count)
    }

    /// A seeded random linear extension, produced by repeatedly choosing
    /// uniformly among the currently minimal elements. Deterministic given
    /// the seed. Note this is NOT uniform over all extensions; it is a
    /// cheap falsification sampler, not a uniform sampler.
    ///
    /// For many draws from the same poset, build one
    /// [`ExtensionSampler`] instead of paying the cover-graph setup per
    /// call.
    pub fn sample_linear_extension(&self, seed: u64) -> LinearExtension {
        ExtensionSampler::new(self).sample(seed)
    }

    /// Series composition: every element of `self` below every element of
    /// `other`. Indices of `self` are kept, `other`'s are shifted by
    /// `self.n()`; that offset is part of the public contract.
    pub fn compose_series(&self, other: &Poset) -> Poset {
        self.compose(other, true)
    }

    /// Parallel composition: disjoint union, no cross relations. Same index
    /// contract as [`Poset::compose_series`].
    pub fn compose_parallel(&self, other: &Poset) -> Poset {
        self.compose(other, false)
    }

    fn compose(&self, other: &Poset, series: bool) -> Poset {
        let n = self.n + other.n;
        let words = words_for(n);
        let mut rows = vec![0u64; n * words];
        let set = |rows: &mut Vec<u64>, i: usize, j: usize| {
            rows[i * words + j / WORD] |= 1 << (j % WORD);
        };
        for i in 0..self.n {
            for j in self.successors(i) {
                set(&mut rows, i, j);
            }
        }
        for i in 0..other.n {
            for j in other.successors(i) {
                set(&mut rows, self.n + i, self.n + j);
            }
        }
        if series {
            for i in 0..self.n {
                for j in self.n..n {
                    set(&mut rows, i, j);
                }
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            _ => {
                let mut l = Vec::with_capacity(n);
                for i in 0..self.n {
                    l.push(self.label(i).unwrap_or("").to_string());
                }
                for i in 0..other.n {
                    l.push(other.label(i).unwrap_or("").to_string());
                }
                Some(l)
            }
        };
        // Series cross-pairs compose with closed blocks, so the result is
        // already closed; no re-closure needed.
        Poset { n, words, rows, labels }
    }

    /// Width of the poset together with a maximum antichain and a minimum
    /// chain partition certifying each other (Dilworth). Computed via
    /// maximum bipartite matching on the split digraph of the closed
    /// relation.
    pub fn width(&self) -> WidthCertificate {
        if self.n == 0 {
            return WidthCertificate {
                width: 0,
                antichain: Vec::new(),
                chains: ChainPartition { chain_of: Vec::new(), k: 0 },
            };
        }
        let matching = hopcroft_karp(self);
        let matched = matching.right_of.iter().filter(|m| m.is_some()).count();
        let width = self.n - matched;

        // Chains: matched pair (i -> j) makes i and j consecutive in a chain.
        let mut chain_of = vec![usize::MAX; self.n];
        let mut k = 0;
        for head in 0..self.n {
            if matching.left_of[head].is_some() {
                continue; // not a chain head: something is matched onto it
            }
            let mut e = head;
            loop {
                chain_of[e] = k;
                match matching.right_of[e] {
                    Some(next) => e = next,
                    None => break,
                }
            }
            k += 1;
        }
        debug_assert_eq!(k, width);
        debug_assert!(chain_of.iter().all(|&c| c != usize::MAX));

        // Antichain via Koenig: alternate from unmatched left vertices; the
        // elements free of the minimum vertex cover are pairwise
        // incomparable and there are exactly `width` of them.
        let (z_left, z_right) = matching.alternating_reachable(self);
        let antichain: Vec<usize> =
            (0..self.n).filter(|&i| z_left[i] && !z_right[i]).collect();
        debug_assert_eq!(antichain.len(), width);

        WidthCertificate { width, antichain, chains: ChainPartition { chain_of, k } }
    }

    /// Validates that `chains` partitions the ground set into chains of this
    /// poset.
    pub fn check_chain_partition(&self, chains: &ChainPartition) -> Result<()> {
        if chains.chain_of.len() != self.n {
            return Err(Error::InvalidChainPartition(format!(
                "partition covers {} elements, poset has {}",
                chains.chain_of.len(),
                self.n
            )));
        }
        for (i, &c) in chains.chain_of.iter().enumerate() {
            if c >= chains.k {
                return Err(Error::InvalidChainPartition(format!(
                    "element {i} assigned chain {c} >= k = {}",
                    chains.k
                )));
            }
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                if chains.chain_of[i] == chains.chain_of[j] && !self.comparable(i, j) {
                    return Err(Error::InvalidChainPartition(format!(
                        "elements {i} and {j} share chain {} but are incomparable",
                        chains.chain_of[i]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Validates the realizer invariant: `lt(i, j)` iff `i` precedes `j` in
    /// both extensions.
    pub fn check_realizer(&self, realizer: &Realizer) -> Result<()> {
        if realizer.lx.len() != self.n || realizer.ly.len() != self.n {
            return Err(Error::GroundSetMismatch { left: realizer.lx.len(), right: self.n });
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if i == j {
                    continue;
                }
                let both = realizer.lx.pos(i) < realizer.lx.pos(j)
                    && realizer.ly.pos(i) < realizer.ly.pos(j);
                if both != self.lt(i, j) {
                    return Err(Error::InvalidRealizer(format!(
                        "intersection disagrees with order on pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Order-isomorphism test by backtracking with degree/level pruning.
    /// Returns a witness mapping (checkable in quadratic time) when the
    /// posets are isomorphic. Intended for small instances.
    pub fn is_isomorphic(&self, other: &Poset) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        if self.relation_count() != other.relation_count() {
            return None;
        }
        let sig_self = invariant_signatures(self);
        let sig_other = invariant_signatures(other);
        {
            let mut a = sig_self.clone();
            let mut b = sig_other.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return None;
            }
        }
        // Map the rarest signatures first to fail fast.
        let mut order: Vec<usize> = (0..self.n).collect();
        let mut freq = std::collections::HashMap::new();
        for s in &sig_self {
            *freq.entry(*s).or_insert(0usize) += 1;
        }
        order.sort_by_key(|&i| (freq[&sig_self[i]], i));

        let mut mapping = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        if self.iso_search(other, &sig_self, &sig_other, &order, 0, &mut mapping, &mut used) {
            Some(mapping)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_search(
        &self,
        other: &Poset,
        sig_self: &[(usize, usize, usize, usize)],
        sig_other: &[(usize, usize, usize, usize)],
        order: &[usize],
        depth: usize,
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for cand in 0..self.n {
            if used[cand] || sig_other[cand] != sig_self[v] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                self.lt(u, v) == other.lt(mapping[u], cand)
                    && self.lt(v, u) == other.lt(cand, mapping[u])
            });
            if !consistent {
                continue;
            }
            mapping[v] = cand;
            used[cand] = true;
            if self.iso_search(other, sig_self, sig_other, order, depth + 1, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    /// Checks that `map` is an order-isomorphism from `self` onto `other`.
    pub fn check_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        if self.n != other.n || map.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &m in map {
            if m >= self.n || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if self.lt(i, j) != other.lt(map[i], map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, pairs={:?})", self.n, self.relation_pairs())
    }
}

/// Per-element invariants used to prune isomorphism search:
/// (downset size, upset size, cover in-degree, cover out-degree).
fn invariant_signatures(p: &Poset) -> Vec<(usize, usize, usize, usize)> {
    let covers = p.cover_edges();
    let mut cin = vec![0usize; p.n()];
    let mut cout = vec![0usize; p.n()];
    for &(u, v) in &covers.edges {
        cout[u] += 1;
        cin[v] += 1;
    }
    let mut down = vec![0usize; p.n()];
    let mut up = vec![0usize; p.n()];
    for (i, u) in up.iter_mut().enumerate() {
        for j in p.successors(i) {
            *u += 1;
            down[j] += 1;
        }
    }
    (0..p.n()).map(|i| (down[i], up[i], cin[i], cout[i])).collect()
}

/// Floyd-Warshall style closure on bitset rows.
fn close_in_place(rows: &mut [u64], n: usize, words: usize) {
    for k in 0..n {
        let (kw, kb) = (k / WORD, k % WORD);
        for i in 0..n {
            if i == k {
                continue;
            }
            if rows[i * words + kw] >> kb & 1 == 1 {
                let (ri, rk) = if i < k {
                    let (a, b) = rows.split_at_mut(k * words);
                    (&mut a[i * words..(i + 1) * words], &b[..words])
                } else {
                    let (a, b) = rows.split_at_mut(i * words);
                    (&mut b[..words], &a[k * words..(k + 1) * words])
                };
                for (x, y) in ri.iter_mut().zip(rk) {
                    *x |= y;
                }
            }
        }
    }
}

/// DFS back-edge search on the raw generator pairs, used only to produce a
/// readable cycle witness once the closure says one exists.
fn find_cycle(n: usize, pairs: &[(usize, usize)], hint: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in pairs {
        adj[i].push(j);
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    let starts = std::iter::once(hint).chain(0..n);
    for s in starts {
        if state[s] != 0 {
            continue;
        }
        let mut stack = vec![(s, 0usize)];
        state[s] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next];
                *next += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        parent[w] = v;
                        stack.push((w, 0));
                    }
                    1 => {
                        // Found a cycle w -> ... -> v -> w.
                        let mut cycle = vec![w];
                        let mut cur = v;
                        while cur != w {
                            cycle.push(cur);
                            cur = parent[cur];
                        }
                        cycle.push(w);
                        cycle.reverse();
                        return cycle;
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    // Closure flagged a cycle, so the DFS must find one.
    unreachable!("cycle reported by closure but not found in generators")
}

fn invert_permutation(order: &[usize], n: usize) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(Error::NotAPermutation { n });
    }
    let mut pos = vec![usize::MAX; n];
    for (p, &e) in order.iter().enumerate() {
        if e >= n || pos[e] != usize::MAX {
            return Err(Error::NotAPermutation { n });
        }
        pos[e] = p;
    }
    Ok(pos)
}

impl LinearExtension {
    /// Validates that `order` is a permutation and an extension of `p`.
    pub fn new(p: &Poset, order: Vec<usize>) -> Result<LinearExtension> {
        let pos = invert_permutation(&order, p.n())?;
        for i in 0..p.n() {
            for j in p.successors(i) {
                if pos[i] > pos[j] {
                    return Err(Error::NotAnExtension { below: i, above: j });
                }
            }
        }
        Ok(LinearExtension { order, pos })
    }

    /// Wraps a permutation already known to be a valid extension.
    pub(crate) fn from_order_unchecked(order: Vec<usize>) -> LinearExtension {
        let mut pos = vec![0usize; order.len()];
        for (p, &e) in order.iter().enumerate() {
            pos[e] = p;
        }
        LinearExtension { order, pos }
    }

    /// Builds an extension from a position-per-element map.
    pub fn identity(n: usize) -> LinearExtension {
        LinearExtension::from_order_unchecked((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Element at position `p`.
    #[inline]
    pub fn at(&self, p: usize) -> usize {
        self.order[p]
    }

    /// Position of element `e`.
    #[inline]
    pub fn pos(&self, e: usize) -> usize {
        self.pos[e]
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The reversed sequence, i.e. this extension read as an extension of
    /// the dual poset.
    pub fn reversed(&self) -> LinearExtension {
        let mut order = self.order.clone();
        order.reverse();
        LinearExtension::from_order_unchecked(order)
    }
}

/// Iterator over bits set in a row.
pub struct BitRowIter<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl<'a> BitRowIter<'a> {
    fn new(row: &'a [u64]) -> Self {
        let bits = if row.is_empty() { 0 } else { row[0] };
        BitRowIter { row, word: 0, bits }
    }
}

impl Iterator for BitRowIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.bits == 0 {
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.bits = self.row[self.word];
        }
        let b = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.word * WORD + b)
    }
}

/// Reusable random-topological sampler over a fixed cover DAG. Each draw
/// picks uniformly among the currently minimal elements; the stream is a
/// pure function of the seed.
pub struct ExtensionSampler {
    n: usize,
    succ: Vec<Vec<usize>>,
    base_pending: Vec<usize>,
}

impl ExtensionSampler {
    pub fn new(p: &Poset) -> ExtensionSampler {
        let covers = p.cover_edges();
        let mut succ = vec![Vec::new(); p.n()];
        let mut base_pending = vec![0usize; p.n()];
        for &(u, v) in &covers.edges {
            succ[u].push(v);
            base_pending[v] += 1;
        }
        ExtensionSampler { n: p.n(), succ, base_pending }
    }

    pub fn sample(&self, seed: u64) -> LinearExtension {
        let mut rng = SplitMix64::new(seed);
        let mut pending = self.base_pending.clone();
        let mut avail: Vec<usize> = (0..self.n).filter(|&i| pending[i] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while !avail.is_empty() {
            let pick = rng.next_below(avail.len());
            let e = avail.swap_remove(pick);
            order.push(e);
            for &s in &self.succ[e] {
                pending[s] -= 1;
                if pending[s] == 0 {
                    avail.push(s);
                }
            }
        }
        debug_assert_eq!(order.len(), self.n);
        LinearExtension::from_order_unchecked(order)
    }
}

/// Backtracking stream of all linear extensions in deterministic
/// (index-lexicographic) order. Holds private mutable state; single
/// consumer.
pub struct LinearExtensions<'p> {
    n: usize,
    succ: Vec<Vec<usize>>,
    pending: Vec<usize>,
    placed: Vec<bool>,
    prefix: Vec<usize>,
    cursor: Vec<usize>,
    done: bool,
    _poset: std::marker::PhantomData<&'p Poset>,
}

impl<'p> LinearExtensions<'p> {
    fn new(p: &'p Poset) -> Self {
        let covers = p.cover_edges();
        let n = p.n();
        let mut succ = vec![Vec::new(); n];
        let mut pending = vec![0usize; n];
        for &(u, v) in &covers.edges {
            succ[u].push(v);
            pending[v] += 1;
        }
        LinearExtensions {
            n,
            succ,
            pending,
            placed: vec![false; n],
            prefix: Vec::with_capacity(n),
            cursor: vec![0; n + 1],
            done: false,
            _poset: std::marker::PhantomData,
        }
    }

    fn place(&mut self, e: usize) {
        self.placed[e] = true;
        self.prefix.push(e);
        for &s in &self.succ[e] {
            self.pending[s] -= 1;
        }
    }

    fn backtrack(&mut self) {
        let e = self.prefix.pop().expect("backtrack on empty prefix");
        self.placed[e] = false;
        for &s in &self.succ[e] {
            self.pending[s] += 1;
        }
        self.cursor[self.prefix.len()] = e + 1;
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            // The empty poset has exactly one (empty) extension.
            self.done = true;
            return Some(LinearExtension::from_order_unchecked(Vec::new()));
        }
        if self.prefix.len() == self.n {
            self.backtrack();
        }
        loop {
            let depth = self.prefix.len();
            let mut e = self.cursor[depth];
            while e < self.n && (self.placed[e] || self.pending[e] != 0) {
                e += 1;
            }
            if e == self.n {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.backtrack();
                continue;
            }
            self.cursor[depth] = e;
            self.place(e);
            if self.prefix.len() == self.n {
                return Some(LinearExtension::from_order_unchecked(self.prefix.clone()));
            }
            self.cursor[self.prefix.len()] = 0;
        }
    }
}

struct Matching {
    /// right_of[i]: the right-copy matched to left-copy i, if any.
    right_of: Vec<Option<usize>>,
    /// left_of[j]: the left-copy matched to right-copy j, if any.
    left_of: Vec<Option<usize>>,
}

impl Matching {
    /// Vertices reachable by alternating paths from unmatched left copies
    /// (Koenig's construction). Returns (reachable left, reachable right).
    fn alternating_reachable(&self, p: &Poset) -> (Vec<bool>, Vec<bool>) {
        let n = p.n();
        let mut z_left = vec![false; n];
        let mut z_right = vec![false; n];
        let mut queue: std::collections::VecDeque<usize> = (0..n)
            .filter(|&i| self.right_of[i].is_none())
            .inspect(|&i| z_left[i] = true)
            .collect();
        while let Some(i) = queue.pop_front() {
            for j in p.successors(i) {
                if z_right[j] || self.right_of[i] == Some(j) {
                    continue; // only non-matching edges leave the left side
                }
                z_right[j] = true;
                if let Some(i2) = self.left_of[j] {
                    if !z_left[i2] {
                        z_left[i2] = true;
                        queue.push_back(i2);
                    }
                }
            }
        }
        (z_left, z_right)
    }
}

/// Hopcroft-Karp maximum matching on the split digraph: left copy of `i`
/// adjacent to right copy of `j` iff `i < j` in the poset.
fn hopcroft_karp(p: &Poset) -> Matching {
    let n = p.n();
    let mut right_of: Vec<Option<usize>> = vec![None; n];
    let mut left_of: Vec<Option<usize>> = vec![None; n];
    let mut dist = vec![usize::MAX; n];

    loop {
        // BFS layering from unmatched left vertices.
        let mut queue = std::collections::VecDeque::new();
        for i in 0..n {
            if right_of[i].is_none() {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = usize::MAX;
            }
        }
        let mut found_free = false;
        while let Some(i) = queue.pop_front() {
            for j in p.successors(i) {
                match left_of[j] {
                    None => found_free = true,
                    Some(i2) => {
                        if dist[i2] == usize::MAX {
                            dist[i2] = dist[i] + 1;
                            queue.push_back(i2);
                        }
                    }
                }
            }
        }
        if !found_free {
            break;
        }
        // Layered DFS augmentation.
        fn try_augment(
            p: &Poset,
            i: usize,
            right_of: &mut Vec<Option<usize>>,
            left_of: &mut Vec<Option<usize>>,
            dist: &mut Vec<usize>,
        ) -> bool {
            for j in p.successors(i) {
                let ok = match left_of[j] {
                    None => true,
                    Some(i2) => {
                        dist[i2] == dist[i].wrapping_add(1)
                            && try_augment(p, i2, right_of, left_of, dist)
                    }
                };
                if ok {
                    right_of[i] = Some(j);
                    left_of[j] = Some(i);
                    return true;
                }
            }
            dist[i] = usize::MAX;
            false
        }
        for i in 0..n {
            if right_of[i].is_none() && dist[i] == 0 {
                try_augment(p, i, &mut right_of, &mut left_of, &mut dist);
            }
        }
    }
    Matching { right_of, left_of }
}
