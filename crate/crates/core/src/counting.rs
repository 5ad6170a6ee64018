//! Pair counts `N_(A,B)^g = #{(a, b) in A x B : a * b = g}` and
//! inverse-closure helpers.

use crate::error::Result;
use crate::group::{ElementIndex, GroupTable};
use crate::subset::SubsetMask;

pub type PairCount = usize;

/// Counts ordered pairs `(a, b)` in `A x B` with `a * b = target`, as
/// `|A ∩ target * B^-1|`.
pub fn count_pair(g: &GroupTable, a: &SubsetMask, b: &SubsetMask, target: ElementIndex) -> Result<PairCount> {
    g.check_mask(a)?;
    g.check_mask(b)?;
    g.element(target.0)?;
    Ok(count_pair_unchecked(g, a, b, target.0))
}

#[inline]
pub(crate) fn count_pair_unchecked(g: &GroupTable, a: &SubsetMask, b: &SubsetMask, target: usize) -> usize {
    if a.len() < b.len() {
        // a * b = t  <=>  b = a^-1 t
        a.iter().filter(|x| b.has(g.mul_raw(g.inv_raw(x.0), target))).count()
    } else {
        b.iter().filter(|y| a.has(g.mul_raw(target, g.inv_raw(y.0)))).count()
    }
}

pub fn is_inverse_closed(g: &GroupTable, s: &SubsetMask) -> bool {
    s.owner_order() == g.order() && s.iter().all(|x| s.has(g.inv_raw(x.0)))
}

/// `{s^-1 : s in S}`.
pub fn inverse_set(g: &GroupTable, s: &SubsetMask) -> Result<SubsetMask> {
    g.check_mask(s)?;
    let mut out = SubsetMask::empty(g.order());
    for x in s.iter() {
        out.insert(g.inv(x));
    }
    Ok(out)
}
