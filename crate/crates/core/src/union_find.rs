//! Disjoint sets with path halving.
//!
//! Both structures link the larger root under the smaller one, so the
//! representative of a set is always its smallest member. Representatives
//! therefore do not depend on the order of `unite` calls, which is what lets
//! contraction assign canonical supervertex ids from a parallel sweep.

use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicUsize, Ordering};

/// An index passed to a union-find structure was not below its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexOutOfRange {
    pub index: usize,
    pub size: usize,
}

impl fmt::Display for IndexOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "index {} out of range for union-find of size {}",
            self.index, self.size
        )
    }
}

impl core::error::Error for IndexOutOfRange {}

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Representative (smallest member) of the set containing `x`.
    ///
    /// Panics if `x` is out of range; see [`UnionFind::try_find`].
    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            let grand = self.parent[self.parent[x]];
            self.parent[x] = grand;
            x = grand;
        }
        x
    }

    /// Merges the sets of `a` and `b`. Returns `false` if they were already
    /// one set.
    pub fn unite(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn try_find(&mut self, x: usize) -> Result<usize, IndexOutOfRange> {
        self.check(x)?;
        Ok(self.find(x))
    }

    pub fn try_unite(&mut self, a: usize, b: usize) -> Result<bool, IndexOutOfRange> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.unite(a, b))
    }

    fn check(&self, x: usize) -> Result<(), IndexOutOfRange> {
        if x < self.parent.len() {
            Ok(())
        } else {
            Err(IndexOutOfRange {
                index: x,
                size: self.parent.len(),
            })
        }
    }
}

/// Lock-free union-find for concurrent `unite` sweeps.
///
/// Every parent pointer satisfies `parent[x] <= x`, so path halving by
/// compare-and-swap never breaks the structure and the root of each set is
/// its minimum.
#[derive(Debug)]
pub struct AtomicUnionFind {
    parent: Vec<AtomicUsize>,
}

impl AtomicUnionFind {
    pub fn new(size: usize) -> Self {
        Self {
            parent: (0..size).map(AtomicUsize::new).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&self, mut x: usize) -> usize {
        loop {
            let p = self.parent[x].load(Ordering::Acquire);
            if p == x {
                return x;
            }
            let grand = self.parent[p].load(Ordering::Acquire);
            if grand != p {
                // Losing this race is harmless: someone else shortened the path.
                let _ =
                    self.parent[x].compare_exchange(p, grand, Ordering::AcqRel, Ordering::Acquire);
            }
            x = grand;
        }
    }

    pub fn unite(&self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (a, b);
        loop {
            a = self.find(a);
            b = self.find(b);
            if a == b {
                return false;
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            if self.parent[hi]
                .compare_exchange(hi, lo, Ordering::AcqRel, Ordering::Acquire)
                .is_ok()
            {
                return true;
            }
        }
    }
}
