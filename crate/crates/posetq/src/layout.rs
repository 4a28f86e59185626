//! Rainbows, queue partitions, and the exact queue-number solver.
//!
//! A k-rainbow under a linear extension is a set of k cover edges that
//! pairwise nest: lefts strictly increasing, rights strictly decreasing.
//! Nesting is strict throughout; edges sharing an endpoint do not nest.
//! A queue is an edge set with no nested pair, and the queue-number of a
//! poset is the minimum over linear extensions of the largest rainbow.

use crate::error::{Error, Result};
use crate::lis::longest_strictly_decreasing;
use crate::poset::{ChainPartition, CoverGraph, LinearExtension, Poset};

/// Labelling of cover edges by queue ids, parallel to `CoverGraph::edges`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueueAssignment {
    pub queue_of: Vec<usize>,
    /// Number of queue ids allocated (some may be unused).
    pub queues: usize,
    pub scope: QueueScope,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueueScope {
    /// Nesting-free for one specific extension.
    PerExtension,
    /// Nesting-free for every linear extension of the poset.
    Universal,
}

/// A concrete rainbow: edges listed outermost first, so positions satisfy
/// `l_1 < l_2 < ... < l_k < r_k < ... < r_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowWitness {
    pub edges: Vec<(usize, usize)>,
}

/// Result of [`max_rainbow`]: the extremal size plus a witness.
#[derive(Debug, Clone)]
pub struct Rainbow {
    pub size: usize,
    pub witness: RainbowWitness,
}

/// Outcome of the exact queue-number search.
#[derive(Debug, Clone)]
pub struct QueueNumberSearch {
    /// Best value found; the queue-number when `exact`.
    pub qn: usize,
    /// Proven lower bound (equals `qn` when `exact`).
    pub lower: usize,
    pub exact: bool,
    pub best: LinearExtension,
    pub assignment: QueueAssignment,
    pub nodes: u64,
}

/// Maps each cover edge to its (left, right) positions under `ext`,
/// rejecting orders that are not extensions of the covers' poset.
fn edge_positions(ext: &LinearExtension, covers: &CoverGraph) -> Result<Vec<(usize, usize)>> {
    if ext.len() != covers.n {
        return Err(Error::GroundSetMismatch { left: ext.len(), right: covers.n });
    }
    covers
        .edges
        .iter()
        .map(|&(u, v)| {
            if ext.pos(u) < ext.pos(v) {
                Ok((ext.pos(u), ext.pos(v)))
            } else {
                Err(Error::NotAnExtension { below: u, above: v })
            }
        })
        .collect()
}

/// Length of the largest rainbow among `points`, O(m log m): sort by
/// (left asc, right asc) and take the longest strictly decreasing
/// subsequence of rights. Equal lefts sort by ascending right, so a strict
/// descent never uses two edges sharing a left position.
pub(crate) fn max_rainbow_len(points: &[(usize, usize)]) -> usize {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    let rights: Vec<usize> = pts.iter().map(|p| p.1).collect();
    longest_strictly_decreasing(&rights)
}

/// True iff no two of `points` nest (single-queue validity).
pub(crate) fn nesting_free(points: &[(usize, usize)]) -> bool {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    // Max right over all strictly earlier left positions; any right below
    // it closes a nested pair.
    let mut max_prev = 0usize;
    let mut i = 0;
    while i < pts.len() {
        let mut j = i;
        while j < pts.len() && pts[j].0 == pts[i].0 {
            if i > 0 && pts[j].1 < max_prev {
                return false;
            }
            j += 1;
        }
        let group_max = pts[i..j].iter().map(|p| p.1).max().unwrap();
        if i == 0 {
            max_prev = group_max;
        } else {
            max_prev = max_prev.max(group_max);
        }
        i = j;
    }
    true
}

/// The largest rainbow of `covers` under `ext`, with a witness.
///
/// Among maximum rainbows the witness is the lexicographically smallest by
/// canonical edge order (the sorted order of `covers.edges`), so reruns are
/// reproducible. Quadratic in the edge count; use the solver's internal
/// fast path when only the size matters.
pub fn max_rainbow(ext: &LinearExtension, covers: &CoverGraph) -> Result<Rainbow> {
    let pts = edge_positions(ext, covers)?;
    let m = pts.len();
    // inward[e]: longest rainbow starting at e and proceeding strictly
    // inside it. Processing by decreasing left position makes every inner
    // candidate already solved.
    let mut by_left: Vec<usize> = (0..m).collect();
    by_left.sort_unstable_by(|&a, &b| pts[b].0.cmp(&pts[a].0));
    let mut inward = vec![1usize; m];
    for &e in &by_left {
        for f in 0..m {
            if pts[e].0 < pts[f].0 && pts[f].1 < pts[e].1 {
                inward[e] = inward[e].max(inward[f] + 1);
            }
        }
    }
    let size = inward.iter().copied().max().unwrap_or(0);
    let mut witness = Vec::with_capacity(size);
    let mut need = size;
    let mut outer: Option<usize> = None;
    while need > 0 {
        // Smallest canonical edge index extending the rainbow with the
        // required remaining depth.
        let e = (0..m)
            .find(|&e| {
                inward[e] == need
                    && outer.is_none_or(|o| pts[o].0 < pts[e].0 && pts[e].1 < pts[o].1)
            })
            .expect("witness reconstruction follows the DP");
        witness.push(covers.edges[e]);
        outer = Some(e);
        need -= 1;
    }
    Ok(Rainbow { size, witness: RainbowWitness { edges: witness } })
}

/// Checks that `witness` is a valid rainbow under `ext`.
pub fn check_rainbow(ext: &LinearExtension, witness: &RainbowWitness) -> bool {
    let k = witness.edges.len();
    for w in 0..k {
        let (a, b) = witness.edges[w];
        if ext.pos(a) >= ext.pos(b) {
            return false;
        }
        if w + 1 < k {
            let (a2, b2) = witness.edges[w + 1];
            if !(ext.pos(a) < ext.pos(a2) && ext.pos(b2) < ext.pos(b)) {
                return false;
            }
        }
    }
    true
}

/// Minimum queue partition for a fixed extension, by Mirsky levels on the
/// nesting order: an edge's queue id is the length of the longest rainbow
/// in which it is innermost, minus one. Uses exactly `max_rainbow` many
/// queues.
pub fn min_queue_partition(ext: &LinearExtension, covers: &CoverGraph) -> Result<QueueAssignment> {
    let pts = edge_positions(ext, covers)?;
    let m = pts.len();
    let mut by_left: Vec<usize> = (0..m).collect();
    by_left.sort_unstable_by_key(|&e| pts[e].0);
    // depth[e]: longest rainbow ending at e as the innermost edge.
    let mut depth = vec![1usize; m];
    for &e in &by_left {
        for f in 0..m {
            if pts[f].0 < pts[e].0 && pts[e].1 < pts[f].1 {
                depth[e] = depth[e].max(depth[f] + 1);
            }
        }
    }
    let queues = depth.iter().copied().max().unwrap_or(0);
    Ok(QueueAssignment {
        queue_of: depth.iter().map(|d| d - 1).collect(),
        queues,
        scope: QueueScope::PerExtension,
    })
}

/// Validates a queue assignment against one extension: no two edges with
/// the same queue id may nest.
pub fn check_queue_assignment(
    ext: &LinearExtension,
    covers: &CoverGraph,
    qa: &QueueAssignment,
) -> Result<bool> {
    if qa.queue_of.len() != covers.edges.len() {
        return Err(Error::GroundSetMismatch {
            left: qa.queue_of.len(),
            right: covers.edges.len(),
        });
    }
    let pts = edge_positions(ext, covers)?;
    let mut buckets: Vec<Vec<(usize, usize)>> = vec![Vec::new(); qa.queues];
    for (e, &q) in qa.queue_of.iter().enumerate() {
        buckets[q].push(pts[e]);
    }
    Ok(buckets.iter().all(|b| nesting_free(b)))
}

/// The Heath-Pemmaraju universal assignment: with a chain partition into w
/// chains, edge (u, v) goes to queue (chain(u), chain(v)). Each of the w^2
/// queues is nesting-free under EVERY linear extension: two same-queue
/// edges (a,d), (b,c) with a<b<c<d in the extension would force a<b, c<d
/// inside chains and hence a<d by transitivity, contradicting that (a,d)
/// is a cover.
pub fn hp_queue_assignment(p: &Poset, chains: &ChainPartition) -> Result<QueueAssignment> {
    p.check_chain_partition(chains)?;
    let covers = p.cover_edges();
    let w = chains.k;
    let queue_of = covers
        .edges
        .iter()
        .map(|&(u, v)| chains.chain_of[u] * w + chains.chain_of[v])
        .collect();
    Ok(QueueAssignment { queue_of, queues: w * w, scope: QueueScope::Universal })
}

/// Exact queue-number by branch and bound over linear-extension prefixes.
///
/// Prefixes grow by minimal elements in index order; a prefix is pruned as
/// soon as the rainbow already forced among its closed edges reaches the
/// incumbent. The incumbent starts at the value of the lexicographically
/// first extension. `cap` bounds search nodes; when exceeded the result is
/// flagged inexact and carries the best-found upper bound with a trivial
/// lower bound.
pub fn exact_queue_number(p: &Poset, cap: u64) -> QueueNumberSearch {
    let covers = p.cover_edges();

    let greedy = p
        .linear_extensions()
        .next()
        .expect("every finite poset has an extension");
    if covers.edges.is_empty() {
        let assignment =
            QueueAssignment { queue_of: Vec::new(), queues: 0, scope: QueueScope::PerExtension };
        return QueueNumberSearch { qn: 0, lower: 0, exact: true, best: greedy, assignment, nodes: 0 };
    }
    let greedy_val =
        max_rainbow_len(&edge_positions(&greedy, &covers).expect("greedy is an extension"));

    let mut search = Search::new(p.n(), &covers, greedy_val, greedy, cap);
    search.run();

    let assignment = min_queue_partition(&search.best_ext, &covers).expect("best is an extension");
    QueueNumberSearch {
        qn: search.best_val,
        lower: if search.capped { 0 } else { search.best_val },
        exact: !search.capped,
        best: search.best_ext,
        assignment,
        nodes: search.nodes,
    }
}

struct Search {
    n: usize,
    succ: Vec<Vec<usize>>,
    preds: Vec<Vec<usize>>,
    pending: Vec<usize>,
    placed: Vec<bool>,
    pos: Vec<usize>,
    prefix: Vec<usize>,
    /// Max depth among closed edges whose left endpoint sits at a position.
    depth_at_left: Vec<usize>,
    /// Per placement: previous forced value plus overwritten cells.
    undo: Vec<(usize, Vec<(usize, usize)>)>,
    forced: usize,
    cursor: Vec<usize>,
    best_val: usize,
    best_ext: LinearExtension,
    nodes: u64,
    cap: u64,
    capped: bool,
}

impl Search {
    fn new(n: usize, covers: &CoverGraph, best_val: usize, best_ext: LinearExtension, cap: u64) -> Search {
        let mut succ = vec![Vec::new(); n];
        let mut preds = vec![Vec::new(); n];
        for &(u, v) in &covers.edges {
            succ[u].push(v);
            preds[v].push(u);
        }
        let pending = (0..n).map(|i| preds[i].len()).collect();
        Search {
            n,
            succ,
            preds,
            pending,
            placed: vec![false; n],
            pos: vec![usize::MAX; n],
            prefix: Vec::with_capacity(n),
            depth_at_left: vec![0; n],
            undo: Vec::with_capacity(n),
            forced: 0,
            cursor: vec![0; n + 1],
            best_val,
            best_ext,
            nodes: 0,
            cap,
            capped: false,
        }
    }

    /// Appends `e` to the prefix. Every cover edge ending at `e` closes
    /// now; its rainbow depth is 1 + the max depth among edges closed
    /// strictly earlier with strictly larger left position (those lie
    /// strictly inside it). Edges closing at this same placement share
    /// their right endpoint and never nest, so all depths are read from
    /// the table before any of them is written.
    fn place(&mut self, e: usize) {
        let at = self.prefix.len();
        self.placed[e] = true;
        self.pos[e] = at;
        self.prefix.push(e);
        for &s in &self.succ[e] {
            self.pending[s] -= 1;
        }
        let prev_forced = self.forced;
        let mut closing: Vec<(usize, usize)> = Vec::with_capacity(self.preds[e].len());
        for pi in 0..self.preds[e].len() {
            let l = self.pos[self.preds[e][pi]];
            let mut d = 1;
            for q in l + 1..at {
                d = d.max(self.depth_at_left[q] + 1);
            }
            closing.push((l, d));
        }
        let mut log = Vec::new();
        for (l, d) in closing {
            if d > self.depth_at_left[l] {
                log.push((l, self.depth_at_left[l]));
                self.depth_at_left[l] = d;
            }
            self.forced = self.forced.max(d);
        }
        self.undo.push((prev_forced, log));
    }

    /// Pops the last placement and advances the cursor at that depth.
    /// Returns false when the root has been exhausted.
    fn backtrack(&mut self) -> bool {
        let e = match self.prefix.pop() {
            Some(e) => e,
            None => return false,
        };
        self.placed[e] = false;
        self.pos[e] = usize::MAX;
        for &s in &self.succ[e] {
            self.pending[s] += 1;
        }
        let (prev_forced, log) = self.undo.pop().expect("undo stack parallels prefix");
        for (l, v) in log {
            self.depth_at_left[l] = v;
        }
        self.forced = prev_forced;
        self.cursor[self.prefix.len()] = e + 1;
        true
    }

    fn run(&mut self) {
        loop {
            if self.prefix.len() == self.n {
                if self.forced < self.best_val {
                    self.best_val = self.forced;
                    self.best_ext = LinearExtension::from_order_unchecked(self.prefix.clone());
                    if self.best_val == 1 {
                        return; // nothing below 1 once edges exist
                    }
                }
                if !self.backtrack() {
                    return;
                }
                continue;
            }
            let depth = self.prefix.len();
            let mut e = self.cursor[depth];
            while e < self.n && (self.placed[e] || self.pending[e] != 0) {
                e += 1;
            }
            if e == self.n {
                if !self.backtrack() {
                    return;
                }
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                self.capped = true;
                return;
            }
            self.cursor[depth] = e;
            self.place(e);
            if self.forced >= self.best_val {
                // Every completion carries this rainbow already: prune.
                self.backtrack();
            } else {
                self.cursor[self.prefix.len()] = 0;
            }
        }
    }
}
