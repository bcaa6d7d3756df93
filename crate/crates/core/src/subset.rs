//! Subsets of the edge set of a ribbon graph, stored as bitmasks.

use crate::map::EdgeId;

/// A subset of the edges of one host graph. Edges are identified by their
/// rank in the host's sorted label order, so symmetric difference and
/// complement are single word operations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSubset {
    bits: u64,
    universe: u32,
}

impl EdgeSubset {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= 64, "edge universe limited to 64 edges");
        EdgeSubset {
            bits: 0,
            universe: universe as u32,
        }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= 64, "edge universe limited to 64 edges");
        let bits = if universe == 0 {
            0
        } else {
            u64::MAX >> (64 - universe)
        };
        EdgeSubset {
            bits,
            universe: universe as u32,
        }
    }

    pub fn from_bits(bits: u64, universe: usize) -> Self {
        let full = Self::full(universe);
        assert!(bits & !full.bits == 0, "bits outside universe");
        EdgeSubset {
            bits,
            universe: universe as u32,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.universe())
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        debug_assert!(e.index() < self.universe());
        self.bits >> e.index() & 1 == 1
    }

    pub fn insert(&mut self, e: EdgeId) {
        assert!(e.index() < self.universe());
        self.bits |= 1 << e.index();
    }

    pub fn remove(&mut self, e: EdgeId) {
        assert!(e.index() < self.universe());
        self.bits &= !(1 << e.index());
    }

    pub fn complement(&self) -> Self {
        EdgeSubset {
            bits: Self::full(self.universe()).bits & !self.bits,
            universe: self.universe,
        }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.check_host(other);
        EdgeSubset {
            bits: self.bits ^ other.bits,
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_host(other);
        EdgeSubset {
            bits: self.bits | other.bits,
            universe: self.universe,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_host(other);
        EdgeSubset {
            bits: self.bits & other.bits,
            universe: self.universe,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_host(other);
        EdgeSubset {
            bits: self.bits & !other.bits,
            universe: self.universe,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_host(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_host(other);
        self.bits & other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        let bits = self.bits;
        (0..self.universe())
            .filter(move |i| bits >> i & 1 == 1)
            .map(EdgeId::new)
    }

    /// All subsets of the universe, ascending by bit pattern.
    pub fn all(universe: usize) -> impl Iterator<Item = EdgeSubset> {
        assert!(
            universe <= 20,
            "exhaustive subset iteration guarded at 20 edges"
        );
        (0u64..1 << universe).map(move |bits| EdgeSubset {
            bits,
            universe: universe as u32,
        })
    }

    fn check_host(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "edge subsets from different hosts"
        );
    }
}

impl std::fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EdgeSubset({:#b}/{})", self.bits, self.universe)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_and_symmetric_difference() {
        let a = EdgeSubset::from_bits(0b0101, 4);
        let b = EdgeSubset::from_bits(0b0110, 4);
        assert_eq!(a.complement().bits(), 0b1010);
        assert_eq!(a.symmetric_difference(&b).bits(), 0b0011);
        assert_eq!(a.symmetric_difference(&a), EdgeSubset::empty(4));
        assert!(a.complement().complement() == a);
    }

    #[test]
    fn iteration_order_is_ascending() {
        let a = EdgeSubset::from_bits(0b1001, 4);
        let ids: Vec<usize> = a.iter().map(|e| e.index()).collect();
        assert_eq!(ids, vec![0, 3]);
    }
}
