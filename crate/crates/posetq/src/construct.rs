//! Parametric generators for the poset families used by the lower-bound
//! machinery, each returning the poset plus a structure record locating its
//! named parts.
//!
//! Index layouts are fixed and part of the public contract:
//!
//! - `build_r(u)`: `Q1` block, then `a`, then `Q2` block, then `b`. The
//!   realizer is `L_x = b, L_x(Q1), a, L_x(Q2)` and
//!   `L_y = L_y(Q1), a, L_y(Q2), b`.
//! - `build_p(w)`, w >= 3: `R` block, `X` chain, `Y` chain, `P_inner`
//!   block, `a`, then the mirrored duals `P_inner_dual`, `X_dual`,
//!   `Y_dual`, `R_dual`, and finally `b`. `x_i` covers the i-th element of
//!   `L_x` in `R`; the dual chain element `xd_i` is covered by the dual
//!   copy of that same element (mirror-symmetric attachment), and likewise
//!   for `Y`. The recorded `dual_map` is the block reflection fixing `a`
//!   and `b`.
//! - `lift_simple(p)`: `bottom`, lower copy, upper copy, `top`, `b`.
//! - `lift_diagonal(p)`: `bottom`, lower copy, upper copy, `mid_low`,
//!   `mid_high`, `top`, with crossing cover edges (bottom, mid_high) and
//!   (mid_low, top). In every extension one of the two crossing edges
//!   spans a whole copy: if mid_high ends up after all of the lower copy,
//!   (bottom, mid_high) does; otherwise mid_high precedes all of the upper
//!   copy, hence so does mid_low, and (mid_low, top) does.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poset::{LinearExtension, Poset, Realizer};

/// Family tags for generated records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    R,
    P,
    AntichainEs,
    Kww,
    PlanarHp,
    LiftSimple,
    LiftDiagonal,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            Family::R => "ru",
            Family::P => "pw",
            Family::AntichainEs => "antichain-es",
            Family::Kww => "kww",
            Family::PlanarHp => "planar-hp",
            Family::LiftSimple => "lift-simple",
            Family::LiftDiagonal => "lift-diagonal",
        };
        f.write_str(tag)
    }
}

/// A generated poset together with named element sets, an optional
/// realizer, and an optional self-duality witness.
#[derive(Debug, Clone)]
pub struct ConstructionRecord {
    pub family: Family,
    pub parameter: usize,
    pub poset: Poset,
    /// Disjoint named parts covering the ground set.
    pub parts: BTreeMap<String, Vec<usize>>,
    pub realizer: Option<Realizer>,
    /// When present: an order-isomorphism onto the dual poset fixing the
    /// elements named `a` and `b` (where those parts exist).
    pub dual_map: Option<Vec<usize>>,
}

impl ConstructionRecord {
    pub fn part(&self, name: &str) -> Option<&[usize]> {
        self.parts.get(name).map(|v| v.as_slice())
    }

    /// Checks that the parts are disjoint and cover the ground set.
    pub fn check_parts(&self) -> Result<()> {
        let mut seen = vec![false; self.poset.n()];
        for (name, elems) in &self.parts {
            for &e in elems {
                if e >= self.poset.n() {
                    return Err(Error::IndexOutOfRange { index: e, n: self.poset.n() });
                }
                if seen[e] {
                    return Err(Error::InvalidParameter(format!(
                        "part {name} re-covers element {e}"
                    )));
                }
                seen[e] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidParameter(format!(
                "element {missing} not covered by any part"
            )));
        }
        Ok(())
    }
}

fn labels_from_parts(n: usize, parts: &BTreeMap<String, Vec<usize>>) -> Vec<String> {
    let mut labels = vec![String::new(); n];
    for (name, elems) in parts {
        if elems.len() == 1 {
            labels[elems[0]] = name.clone();
        } else {
            for (k, &e) in elems.iter().enumerate() {
                labels[e] = format!("{name}.{k}");
            }
        }
    }
    labels
}

fn finish(
    family: Family,
    parameter: usize,
    poset: Poset,
    parts: BTreeMap<String, Vec<usize>>,
    realizer: Option<Realizer>,
    dual_map: Option<Vec<usize>>,
) -> ConstructionRecord {
    let labels = labels_from_parts(poset.n(), &parts);
    let record = ConstructionRecord {
        family,
        parameter,
        poset: poset.with_labels(labels),
        parts,
        realizer,
        dual_map,
    };
    debug_assert!(record.check_parts().is_ok());
    record
}

/// Number of elements of the reinforcement poset of width `u`:
/// r(u) = (3/2) * 2^u - 2.
pub fn r_count(u: usize) -> usize {
    3 * (1usize << (u - 1)) - 2
}

/// The reinforcement poset of width `u`, with its realizer and self-duality
/// witness.
///
/// Recursive shape for u >= 2: two copies `Q1`, `Q2` of the previous level
/// in series around a middle element `a`, composed in parallel with an
/// element `b` incomparable to everything. The realizer puts `b` first in
/// `L_x` and last in `L_y`, which is what forces every linear extension to
/// contain a long sequence oppositely ordered to `L_x` or to `L_y`.
pub fn build_r(u: usize) -> Result<ConstructionRecord> {
    if u < 1 {
        return Err(Error::InvalidParameter("build_r requires width >= 1".into()));
    }
    if u == 1 {
        let poset = Poset::antichain(1);
        let mut parts = BTreeMap::new();
        parts.insert("base".to_string(), vec![0]);
        let realizer = Realizer { lx: LinearExtension::identity(1), ly: LinearExtension::identity(1) };
        return Ok(finish(Family::R, 1, poset, parts, Some(realizer), Some(vec![0])));
    }
    let inner = build_r(u - 1)?;
    let m = inner.poset.n();
    let single = Poset::antichain(1);
    let poset = inner
        .poset
        .compose_series(&single)
        .compose_series(&inner.poset)
        .compose_parallel(&single);
    let a = m;
    let b = 2 * m + 1;

    let mut parts = BTreeMap::new();
    parts.insert("Q1".into(), (0..m).collect());
    parts.insert("a".into(), vec![a]);
    parts.insert("Q2".into(), (m + 1..2 * m + 1).collect());
    parts.insert("b".into(), vec![b]);

    let inner_real = inner.realizer.as_ref().expect("build_r always carries a realizer");
    let mut lx = Vec::with_capacity(2 * m + 2);
    lx.push(b);
    lx.extend(inner_real.lx.order().iter().copied());
    lx.push(a);
    lx.extend(inner_real.lx.order().iter().map(|&e| e + m + 1));
    let mut ly = Vec::with_capacity(2 * m + 2);
    ly.extend(inner_real.ly.order().iter().copied());
    ly.push(a);
    ly.extend(inner_real.ly.order().iter().map(|&e| e + m + 1));
    ly.push(b);
    let realizer = Realizer {
        lx: LinearExtension::new(&poset, lx)?,
        ly: LinearExtension::new(&poset, ly)?,
    };

    // The reflection swaps the two copies through the previous level's
    // reflection, fixing a and b.
    let inner_dual = inner.dual_map.as_ref().expect("build_r always carries a dual map");
    let mut dual_map = vec![0usize; 2 * m + 2];
    for i in 0..m {
        dual_map[i] = m + 1 + inner_dual[i];
        dual_map[m + 1 + i] = inner_dual[i];
    }
    dual_map[a] = a;
    dual_map[b] = b;

    Ok(finish(Family::R, u, poset, parts, Some(realizer), Some(dual_map)))
}

/// Element count of `build_p(w)` with the default trivial bases:
/// p(1) = 1, p(2) = 2, p(w) = 2 p(w-2) + 6 r(w-2) + 2.
pub fn p_count(w: usize) -> usize {
    match w {
        1 => 1,
        2 => 2,
        _ => 2 * p_count(w - 2) + 6 * r_count(w - 2) + 2,
    }
}

/// The lifted poset of width `w` with default bases (a single element for
/// odd `w`, a 2-antichain for even `w`).
pub fn build_p(w: usize) -> Result<ConstructionRecord> {
    build_p_with(w, None, false)
}

/// `build_p` with an optional custom base for the recursion bottom (its
/// width must be 1 or 2 matching the parity of `w`), and an optional
/// compact variant that drops the middle element `a`, adding all relations
/// between the inner copy and its dual instead.
pub fn build_p_with(
    w: usize,
    base: Option<&ConstructionRecord>,
    omit_a: bool,
) -> Result<ConstructionRecord> {
    if w < 1 {
        return Err(Error::InvalidParameter("build_p requires width >= 1".into()));
    }
    if w <= 2 {
        let (poset, dual_map) = match base {
            Some(record) => {
                let got = record.poset.width().width;
                if got != w {
                    return Err(Error::InvalidParameter(format!(
                        "base width {got} does not match parity seed {w}"
                    )));
                }
                (record.poset.clone(), record.dual_map.clone())
            }
            None => (Poset::antichain(w), Some((0..w).collect())),
        };
        let mut parts = BTreeMap::new();
        parts.insert("base".to_string(), (0..poset.n()).collect());
        return Ok(finish(Family::P, w, poset, parts, None, dual_map));
    }

    let inner_p = build_p_with(w - 2, base, omit_a)?;
    let inner_r = build_r(w - 2)?;
    let r = inner_r.poset.n();
    let p = inner_p.poset.n();
    let a_slot = if omit_a { 0 } else { 1 };
    let n = 6 * r + 2 * p + a_slot + 1;

    // Fixed block layout.
    let rx = 0; // R
    let xx = r; // X
    let yx = 2 * r; // Y
    let px = 3 * r; // P_inner
    let a = 3 * r + p; // only when !omit_a
    let pdx = 3 * r + p + a_slot; // P_inner_dual
    let xdx = pdx + p; // X_dual
    let ydx = xdx + r; // Y_dual
    let rdx = ydx + r; // R_dual
    let b = rdx + r;
    debug_assert_eq!(b + 1, n);

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    // Copies keep their relations; dual copies reverse them.
    for (i, j) in inner_r.poset.relation_pairs() {
        pairs.push((rx + i, rx + j));
        pairs.push((rdx + j, rdx + i));
    }
    for (i, j) in inner_p.poset.relation_pairs() {
        pairs.push((px + i, px + j));
        pairs.push((pdx + j, pdx + i));
    }
    // The four chains; the dual chains descend in index.
    for i in 0..r - 1 {
        pairs.push((xx + i, xx + i + 1));
        pairs.push((yx + i, yx + i + 1));
        pairs.push((xdx + i + 1, xdx + i));
        pairs.push((ydx + i + 1, ydx + i));
    }
    // b below x_1, y_1 and above their dual counterparts.
    pairs.push((b, xx));
    pairs.push((b, yx));
    pairs.push((xdx, b));
    pairs.push((ydx, b));
    // a above all of P_inner and below all of its dual; or, in the compact
    // variant, all relations between the two copies directly.
    if omit_a {
        for i in 0..p {
            for j in 0..p {
                pairs.push((px + i, pdx + j));
            }
        }
    } else {
        for i in 0..p {
            pairs.push((px + i, a));
            pairs.push((a, pdx + i));
        }
    }
    // All of P_inner above all of R; mirrored below the duals.
    for i in 0..r {
        for j in 0..p {
            pairs.push((rx + i, px + j));
            pairs.push((pdx + j, rdx + i));
        }
    }
    // x_i covers the i-th element of L_x (a cover because L_x is a linear
    // extension); y_i likewise along L_y; the dual chains attach to the
    // dual copies of the same elements.
    let real = inner_r.realizer.as_ref().expect("build_r always carries a realizer");
    for i in 0..r {
        let ex = real.lx.at(i);
        let ey = real.ly.at(i);
        pairs.push((rx + ex, xx + i));
        pairs.push((rx + ey, yx + i));
        pairs.push((xdx + i, rdx + ex));
        pairs.push((ydx + i, rdx + ey));
    }

    let poset = Poset::from_relations(n, &pairs)?;

    let mut parts: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    parts.insert("R".into(), (rx..rx + r).collect());
    parts.insert("X".into(), (xx..xx + r).collect());
    parts.insert("Y".into(), (yx..yx + r).collect());
    parts.insert("P_inner".into(), (px..px + p).collect());
    if !omit_a {
        parts.insert("a".into(), vec![a]);
    }
    parts.insert("P_inner_dual".into(), (pdx..pdx + p).collect());
    parts.insert("X_dual".into(), (xdx..xdx + r).collect());
    parts.insert("Y_dual".into(), (ydx..ydx + r).collect());
    parts.insert("R_dual".into(), (rdx..rdx + r).collect());
    parts.insert("b".into(), vec![b]);

    // Reflection: swap each block with its dual block elementwise, fixing
    // a and b.
    let mut dual_map = vec![0usize; n];
    for i in 0..r {
        dual_map[rx + i] = rdx + i;
        dual_map[rdx + i] = rx + i;
        dual_map[xx + i] = xdx + i;
        dual_map[xdx + i] = xx + i;
        dual_map[yx + i] = ydx + i;
        dual_map[ydx + i] = yx + i;
    }
    for i in 0..p {
        dual_map[px + i] = pdx + i;
        dual_map[pdx + i] = px + i;
    }
    if !omit_a {
        dual_map[a] = a;
    }
    dual_map[b] = b;

    Ok(finish(Family::P, w, poset, parts, None, Some(dual_map)))
}

/// A `u`-antichain with the (identity, reverse) realizer: the baseline
/// reinforcement whose guaranteed rainbow is ceil(sqrt(u)) by
/// Erdos-Szekeres.
pub fn build_antichain_es(u: usize) -> Result<ConstructionRecord> {
    if u < 1 {
        return Err(Error::InvalidParameter("build_antichain_es requires size >= 1".into()));
    }
    let poset = Poset::antichain(u);
    let mut parts = BTreeMap::new();
    parts.insert("R".to_string(), (0..u).collect::<Vec<_>>());
    let realizer = Realizer {
        lx: LinearExtension::identity(u),
        ly: LinearExtension::new(&poset, (0..u).rev().collect())?,
    };
    Ok(finish(Family::AntichainEs, u, poset, parts, Some(realizer), Some((0..u).collect())))
}

/// The height-2 poset on 2w elements whose cover graph is the complete
/// bipartite graph K_{w,w}; attains queue-number = width.
pub fn build_kww(w: usize) -> Result<ConstructionRecord> {
    if w < 1 {
        return Err(Error::InvalidParameter("build_kww requires width >= 1".into()));
    }
    let mut pairs = Vec::with_capacity(w * w);
    for i in 0..w {
        for j in 0..w {
            pairs.push((i, w + j));
        }
    }
    let poset = Poset::from_relations(2 * w, &pairs)?;
    let mut parts = BTreeMap::new();
    parts.insert("bottom".to_string(), (0..w).collect::<Vec<_>>());
    parts.insert("top".to_string(), (w..2 * w).collect::<Vec<_>>());
    // Swapping levels reverses every relation.
    let dual_map = (0..2 * w).map(|i| (i + w) % (2 * w)).collect();
    Ok(finish(Family::Kww, w, poset, parts, None, Some(dual_map)))
}

/// The planar construction: an `r`-antichain with realizer (identity,
/// reverse), an `r`-chain X matched upward in `L_x` order, and an
/// `r`-chain Y matched downward in `L_y` order. On n = 3r elements its
/// queue-number is at least ceil(sqrt(n/3)).
pub fn build_planar_hp(r: usize) -> Result<ConstructionRecord> {
    if r < 1 {
        return Err(Error::InvalidParameter("build_planar_hp requires size >= 1".into()));
    }
    let mut pairs = Vec::new();
    for i in 0..r - 1 {
        pairs.push((r + i, r + i + 1)); // X chain
        pairs.push((2 * r + i, 2 * r + i + 1)); // Y chain
    }
    for i in 0..r {
        // x_{i+1} covers the (i+1)-th element of L_x = identity.
        pairs.push((i, r + i));
        // The (i+1)-th element of L_y = reverse covers y_{i+1}.
        pairs.push((2 * r + i, r - 1 - i));
    }
    let poset = Poset::from_relations(3 * r, &pairs)?;
    let mut parts = BTreeMap::new();
    parts.insert("R".to_string(), (0..r).collect::<Vec<_>>());
    parts.insert("X".to_string(), (r..2 * r).collect::<Vec<_>>());
    parts.insert("Y".to_string(), (2 * r..3 * r).collect::<Vec<_>>());
    Ok(finish(Family::PlanarHp, r, poset, parts, None, None))
}

/// Simple lift: two copies of `p` in series between a global bottom and a
/// global top, plus one element `b` above the bottom and below the top but
/// incomparable to both copies. Width grows by one; in any extension one
/// of b's two cover edges nests over a whole copy, so the queue-number
/// grows by at least one.
pub fn lift_simple(p: &Poset) -> Result<ConstructionRecord> {
    if p.n() == 0 {
        return Err(Error::InvalidParameter("lift_simple requires a nonempty poset".into()));
    }
    let n = p.n();
    let total = 2 * n + 3;
    let bottom = 0;
    let lower = 1;
    let upper = n + 1;
    let top = 2 * n + 1;
    let b = 2 * n + 2;

    let mut pairs = Vec::new();
    for (i, j) in p.relation_pairs() {
        pairs.push((lower + i, lower + j));
        pairs.push((upper + i, upper + j));
    }
    for i in 0..n {
        for j in 0..n {
            pairs.push((lower + i, upper + j));
        }
    }
    for e in 1..total {
        if e != top {
            pairs.push((bottom, e));
            pairs.push((e, top));
        }
    }
    pairs.push((bottom, top));
    let poset = Poset::from_relations(total, &pairs)?;
    let mut parts = BTreeMap::new();
    parts.insert("bottom".to_string(), vec![bottom]);
    parts.insert("P_lower".to_string(), (lower..lower + n).collect::<Vec<_>>());
    parts.insert("P_upper".to_string(), (upper..upper + n).collect::<Vec<_>>());
    parts.insert("top".to_string(), vec![top]);
    parts.insert("b".to_string(), vec![b]);
    Ok(finish(Family::LiftSimple, n, poset, parts, None, None))
}

/// Diagonal lift: two copies of `p` in series, an anchor below the lower
/// copy, an anchor above the upper copy, and a 2-chain beside the copies,
/// wired so the cover edges (bottom, mid_high) and (mid_low, top) cross.
/// Width grows by one and the queue-number by at least one (see module
/// docs for the case split).
pub fn lift_diagonal(p: &Poset) -> Result<ConstructionRecord> {
    if p.n() == 0 {
        return Err(Error::InvalidParameter("lift_diagonal requires a nonempty poset".into()));
    }
    let n = p.n();
    let total = 2 * n + 4;
    let bottom = 0;
    let lower = 1;
    let upper = n + 1;
    let mid_low = 2 * n + 1;
    let mid_high = 2 * n + 2;
    let top = 2 * n + 3;

    let mut pairs = Vec::new();
    for (i, j) in p.relation_pairs() {
        pairs.push((lower + i, lower + j));
        pairs.push((upper + i, upper + j));
    }
    for i in 0..n {
        for j in 0..n {
            pairs.push((lower + i, upper + j));
        }
        pairs.push((bottom, lower + i));
        pairs.push((upper + i, top));
    }
    pairs.push((bottom, mid_high)); // first crossing cover edge
    pairs.push((mid_low, top)); // second crossing cover edge
    pairs.push((mid_low, mid_high));
    let poset = Poset::from_relations(total, &pairs)?;
    let mut parts = BTreeMap::new();
    parts.insert("bottom".to_string(), vec![bottom]);
    parts.insert("P_lower".to_string(), (lower..lower + n).collect::<Vec<_>>());
    parts.insert("P_upper".to_string(), (upper..upper + n).collect::<Vec<_>>());
    parts.insert("mid_low".to_string(), vec![mid_low]);
    parts.insert("mid_high".to_string(), vec![mid_high]);
    parts.insert("top".to_string(), vec![top]);
    Ok(finish(Family::LiftDiagonal, n, poset, parts, None, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::exact_queue_number;

    #[test]
    fn r_counts_match_closed_form() {
        // r(u) = 2 r(u-1) + 2 starting at r(1) = 1.
        let mut expect = 1;
        for u in 1..=8 {
            assert_eq!(r_count(u), expect, "r({u})");
            assert_eq!(build_r(u).unwrap().poset.n(), expect, "build_r({u})");
            expect = 2 * expect + 2;
        }
        assert_eq!(r_count(2), 4);
        assert_eq!(r_count(3), 10);
        assert_eq!(r_count(4), 22);
    }

    #[test]
    fn r_rejects_zero() {
        assert!(build_r(0).is_err());
    }

    #[test]
    fn r1_is_single_element() {
        let r1 = build_r(1).unwrap();
        assert_eq!(r1.poset.n(), 1);
        let real = r1.realizer.unwrap();
        assert_eq!(real.lx.order(), &[0]);
        assert_eq!(real.ly.order(), &[0]);
    }

    #[test]
    fn r2_shape() {
        // Chain Q1 < a < Q2 in parallel with isolated b.
        let r2 = build_r(2).unwrap();
        let p = &r2.poset;
        assert_eq!(p.n(), 4);
        assert!(p.lt(0, 1) && p.lt(1, 2) && p.lt(0, 2));
        for e in 0..3 {
            assert!(!p.comparable(3, e));
        }
        let real = r2.realizer.as_ref().unwrap();
        assert_eq!(real.lx.order(), &[3, 0, 1, 2]);
        assert_eq!(real.ly.order(), &[0, 1, 2, 3]);
        assert_eq!(r2.poset.cover_edges().edges.len(), 2);
    }

    #[test]
    fn r_realizer_is_valid() {
        for u in 1..=8 {
            let rec = build_r(u).unwrap();
            rec.poset.check_realizer(rec.realizer.as_ref().unwrap()).unwrap();
        }
    }

    #[test]
    fn r_width_equals_parameter() {
        for u in 1..=6 {
            assert_eq!(build_r(u).unwrap().poset.width().width, u, "width(R_{u})");
        }
    }

    #[test]
    fn r_is_self_dual_with_a_b_fixed() {
        for u in 2..=8 {
            let rec = build_r(u).unwrap();
            let dual = rec.poset.dual();
            let map = rec.dual_map.as_ref().unwrap();
            assert!(rec.poset.check_isomorphism(&dual, map), "R_{u} reflection");
            assert_eq!(map[rec.part("a").unwrap()[0]], rec.part("a").unwrap()[0]);
            assert_eq!(map[rec.part("b").unwrap()[0]], rec.part("b").unwrap()[0]);
        }
    }

    #[test]
    fn r2_dual_isomorphic_via_search() {
        let rec = build_r(2).unwrap();
        let dual = rec.poset.dual();
        let map = rec.poset.is_isomorphic(&dual).unwrap();
        assert!(rec.poset.check_isomorphism(&dual, &map));
    }

    #[test]
    fn r_extension_counts() {
        // e(R_u) = e(R_{u-1})^2 * (2 r(u-1) + 2): 1, 4, 160, ...
        assert_eq!(build_r(2).unwrap().poset.linear_extensions().count(), 4);
        assert_eq!(build_r(3).unwrap().poset.linear_extensions().count(), 160);
    }

    #[test]
    fn p_counts_match_recursion() {
        assert_eq!(p_count(3), 10);
        assert_eq!(p_count(4), 30);
        assert_eq!(p_count(5), 82);
        for w in 1..=6 {
            assert_eq!(build_p(w).unwrap().poset.n(), p_count(w), "p({w})");
        }
    }

    #[test]
    fn p_width_equals_parameter() {
        for w in 1..=5 {
            assert_eq!(build_p(w).unwrap().poset.width().width, w, "width(P_{w})");
        }
    }

    #[test]
    fn p_is_self_dual_with_a_b_fixed() {
        for w in 3..=7 {
            let rec = build_p(w).unwrap();
            let dual = rec.poset.dual();
            let map = rec.dual_map.as_ref().unwrap();
            assert!(rec.poset.check_isomorphism(&dual, map), "P_{w} reflection");
            assert_eq!(map[rec.part("a").unwrap()[0]], rec.part("a").unwrap()[0]);
            assert_eq!(map[rec.part("b").unwrap()[0]], rec.part("b").unwrap()[0]);
        }
    }

    #[test]
    fn p_attachment_edges_are_covers() {
        for w in 3..=5 {
            let rec = build_p(w).unwrap();
            let covers = rec.poset.cover_edges();
            let inner = build_r(w - 2).unwrap();
            let real = inner.realizer.as_ref().unwrap();
            let x = rec.part("X").unwrap();
            let y = rec.part("Y").unwrap();
            let xd = rec.part("X_dual").unwrap();
            let yd = rec.part("Y_dual").unwrap();
            let r_part = rec.part("R").unwrap();
            let rd_part = rec.part("R_dual").unwrap();
            for i in 0..x.len() {
                let ex = r_part[real.lx.at(i)];
                assert!(covers.edges.contains(&(ex, x[i])), "w={w}: x_{} attachment", i + 1);
                let ey = r_part[real.ly.at(i)];
                assert!(covers.edges.contains(&(ey, y[i])), "w={w}: y_{} attachment", i + 1);
                let exd = rd_part[real.lx.at(i)];
                assert!(covers.edges.contains(&(xd[i], exd)), "w={w}: dual x_{}", i + 1);
                let eyd = rd_part[real.ly.at(i)];
                assert!(covers.edges.contains(&(yd[i], eyd)), "w={w}: dual y_{}", i + 1);
            }
        }
    }

    #[test]
    fn p_custom_base_and_width_mismatch() {
        let chain3 = ConstructionRecord {
            family: Family::P,
            parameter: 1,
            poset: Poset::chain(3),
            parts: BTreeMap::from([("base".to_string(), vec![0, 1, 2])]),
            realizer: None,
            dual_map: None,
        };
        // Width 1 base is accepted for odd w.
        let p3 = build_p_with(3, Some(&chain3), false).unwrap();
        assert_eq!(p3.poset.n(), 2 * 3 + 6 * r_count(1) + 2);
        assert_eq!(p3.poset.width().width, 3);
        // ... and rejected for even w.
        assert!(build_p_with(4, Some(&chain3), false).is_err());
    }

    #[test]
    fn p_compact_variant() {
        // p'(w) = 2 p'(w-2) + 6 r(w-2) + 1.
        let p3 = build_p_with(3, None, true).unwrap();
        assert_eq!(p3.poset.n(), 9); // 2*1 + 6*r(1) + 1
        assert!(p3.part("a").is_none());
        assert_eq!(p3.poset.width().width, 3);
        let map = p3.dual_map.as_ref().unwrap();
        assert!(p3.poset.check_isomorphism(&p3.poset.dual(), map));
        let p5 = build_p_with(5, None, true).unwrap();
        assert_eq!(p5.poset.n(), 79); // 2*9 + 6*r(3) + 1
        assert_eq!(p5.poset.width().width, 5);
    }

    #[test]
    fn antichain_es_record() {
        let rec = build_antichain_es(4).unwrap();
        assert_eq!(rec.poset.n(), 4);
        rec.poset.check_realizer(rec.realizer.as_ref().unwrap()).unwrap();
        assert_eq!(rec.poset.relation_count(), 0);
        assert!(build_antichain_es(1).unwrap().poset.n() == 1);
        assert!(build_antichain_es(0).is_err());
    }

    #[test]
    fn kww_shape_and_queue_number() {
        let rec = build_kww(1).unwrap();
        assert_eq!(rec.poset, Poset::chain(2));
        let rec = build_kww(2).unwrap();
        assert_eq!(rec.poset.n(), 4);
        assert_eq!(rec.poset.cover_edges().edges.len(), 4);
        assert_eq!(rec.poset.width().width, 2);
        let search = exact_queue_number(&rec.poset, 1_000_000);
        assert!(search.exact);
        assert_eq!(search.qn, 2);
        let map = rec.dual_map.as_ref().unwrap();
        assert!(rec.poset.check_isomorphism(&rec.poset.dual(), map));
    }

    #[test]
    fn planar_hp_shapes() {
        // r = 1: the chain y1 < m < x1.
        let rec = build_planar_hp(1).unwrap();
        assert_eq!(rec.poset.n(), 3);
        assert!(rec.poset.lt(2, 0) && rec.poset.lt(0, 1) && rec.poset.lt(2, 1));
        // n = 3r.
        assert_eq!(build_planar_hp(4).unwrap().poset.n(), 12);
        // Matchings are covers.
        let rec = build_planar_hp(3).unwrap();
        let covers = rec.poset.cover_edges();
        for i in 0..3 {
            assert!(covers.edges.contains(&(i, 3 + i)));
            assert!(covers.edges.contains(&(6 + i, 2 - i)));
        }
        // qn >= ceil(sqrt(n/3)) = 2 at r = 3.
        let search = exact_queue_number(&rec.poset, 1_000_000);
        assert!(search.exact);
        assert!(search.qn >= 2);
    }

    #[test]
    fn r3_sample_is_a_valid_extension() {
        let rec = build_r(3).unwrap();
        let ext = rec.poset.sample_linear_extension(0);
        assert!(rec.poset.is_linear_extension(ext.order()).unwrap());
    }

    #[test]
    fn lift_simple_counts_and_width() {
        let one = Poset::antichain(1);
        let rec = lift_simple(&one).unwrap();
        assert_eq!(rec.poset.n(), 5);
        assert_eq!(rec.poset.width().width, 2);
        // b has exactly the two cover edges (bottom, b) and (b, top).
        let covers = rec.poset.cover_edges();
        let b = rec.part("b").unwrap()[0];
        let incident: Vec<_> =
            covers.edges.iter().filter(|&&(u, v)| u == b || v == b).collect();
        assert_eq!(incident.len(), 2);
    }

    #[test]
    fn lift_simple_raises_queue_number() {
        let chain2 = Poset::chain(2);
        let rec = lift_simple(&chain2).unwrap();
        let search = exact_queue_number(&rec.poset, 10_000_000);
        assert!(search.exact);
        assert!(search.qn >= 2, "qn(lift_simple(chain2)) = {}", search.qn);
    }

    #[test]
    fn lift_diagonal_shape_and_queue_number() {
        let chain2 = Poset::chain(2);
        let rec = lift_diagonal(&chain2).unwrap();
        assert_eq!(rec.poset.n(), 8);
        assert_eq!(rec.poset.width().width, 2);
        // The two crossing edges really are covers.
        let covers = rec.poset.cover_edges();
        let bottom = rec.part("bottom").unwrap()[0];
        let mid_low = rec.part("mid_low").unwrap()[0];
        let mid_high = rec.part("mid_high").unwrap()[0];
        let top = rec.part("top").unwrap()[0];
        assert!(covers.edges.contains(&(bottom, mid_high)));
        assert!(covers.edges.contains(&(mid_low, top)));
        let search = exact_queue_number(&rec.poset, 10_000_000);
        assert!(search.exact);
        assert!(search.qn >= 2);
        assert!(lift_diagonal(&Poset::antichain(0)).is_err());
    }

    #[test]
    fn parts_partition_every_record() {
        let records = vec![
            build_r(4).unwrap(),
            build_p(4).unwrap(),
            build_antichain_es(5).unwrap(),
            build_kww(3).unwrap(),
            build_planar_hp(3).unwrap(),
            lift_simple(&Poset::chain(2)).unwrap(),
            lift_diagonal(&Poset::chain(2)).unwrap(),
        ];
        for rec in records {
            rec.check_parts().unwrap();
        }
    }
}
