use std::fmt;

use crate::error::{Error, Result};
use crate::group::ElementIndex;

/// A set of group elements stored as a fixed-width bit mask over element
/// indices `0..owner_order`.
///
/// Signature, quasi-signature and cube-root verifiers require the mask to
/// be identity-free (see [`SubsetMask::require_identity_free`]); difference
/// sets may contain the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    order: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(order: usize) -> Self {
        SubsetMask { order, words: vec![0; order.div_ceil(64)] }
    }

    /// `G \ {e}`.
    pub fn all_nonidentity(order: usize) -> Self {
        let mut m = Self::empty(order);
        for i in 1..order {
            m.set(i);
        }
        m
    }

    pub fn from_indices(order: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut m = Self::empty(order);
        for i in indices {
            if i >= order {
                return Err(Error::ElementOutOfRange { index: i, order });
            }
            m.set(i);
        }
        Ok(m)
    }

    pub fn owner_order(&self) -> usize {
        self.order
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub(crate) fn has(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn contains(&self, x: ElementIndex) -> bool {
        x.0 < self.order && self.has(x.0)
    }

    /// Panics if `x` is out of range.
    pub fn insert(&mut self, x: ElementIndex) {
        assert!(x.0 < self.order, "element {} out of range", x.0);
        self.set(x.0);
    }

    pub fn remove(&mut self, x: ElementIndex) {
        if x.0 < self.order {
            self.words[x.0 / 64] &= !(1 << (x.0 % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains_identity(&self) -> bool {
        self.order > 0 && self.has(0)
    }

    pub fn require_identity_free(&self) -> Result<()> {
        if self.contains_identity() {
            Err(Error::ContainsIdentity)
        } else {
            Ok(())
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementIndex> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(ElementIndex(wi * 64 + b))
            })
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().map(|x| x.0).collect()
    }

    fn zip_words(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.order, other.order);
        SubsetMask { order: self.order, words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect() }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection_len(other) == 0
    }

    /// `(G \ {e}) \ self`.
    pub fn complement_nonidentity(&self) -> Self {
        Self::all_nonidentity(self.order).difference(self)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({}){:?}", self.order, self.indices())
    }
}
