//! Cosets, coset partitions and the blocks `aHbH`.

use alloc::{vec, vec::Vec};

use crate::{error::Error, group::Subgroup, perm::Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A left or right coset; `representative` is its least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coset {
    pub side: Side,
    pub representative: usize,
    pub members: Vec<usize>,
}

/// A product set `aHbH` of two left cosets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    /// The representative pair `(a, b)` the block was built from.
    pub rep_pair: (usize, usize),
    pub members: Vec<usize>,
}

impl Block {
    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn intersects(&self, other: &Block) -> bool {
        sorted_intersect(&self.members, &other.members)
    }

    pub fn contains_all(&self, indices: &[usize]) -> bool {
        indices.iter().all(|&i| self.contains(i))
    }
}

pub(crate) fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Disjoint classes covering `0..domain_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition from classes, returning `None` unless they are disjoint and cover
    /// `0..domain_size`.
    pub fn from_classes(domain_size: usize, classes: Vec<Vec<usize>>) -> Option<Self> {
        let mut class_of = vec![usize::MAX; domain_size];
        for (c, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= domain_size || class_of[x] != usize::MAX {
                    return None;
                }
                class_of[x] = c;
            }
        }
        if class_of.contains(&usize::MAX) {
            return None;
        }
        Some(Partition { classes, class_of })
    }

    pub fn domain_size(&self) -> usize {
        self.class_of.len()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

impl<'g> Subgroup<'g> {
    /// `aH` or `Ha`, for `a` given by index.
    pub fn coset_of(&self, a: usize, side: Side) -> Coset {
        let g = self.parent();
        let mut members: Vec<usize> = self
            .members()
            .iter()
            .map(|&h| match side {
                Side::Left => g.mul(a, h),
                Side::Right => g.mul(h, a),
            })
            .collect();
        members.sort_unstable();
        Coset {
            side,
            representative: members[0],
            members,
        }
    }

    pub fn coset(&self, a: &Permutation, side: Side) -> Result<Coset, Error> {
        Ok(self.coset_of(self.parent().require(a)?, side))
    }

    /// `b⁻¹a ∈ H`.
    pub fn same_left_coset_of(&self, a: usize, b: usize) -> bool {
        let g = self.parent();
        self.contains(g.mul(g.inv(b), a))
    }

    pub fn same_left_coset(&self, a: &Permutation, b: &Permutation) -> Result<bool, Error> {
        let g = self.parent();
        Ok(self.same_left_coset_of(g.require(a)?, g.require(b)?))
    }

    /// The cosets of one side in order of their least member.
    pub fn coset_partition(&self, side: Side) -> Partition {
        let n = self.parent().order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::with_capacity(n / self.order());
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let coset = self.coset_of(a, side);
            for &x in &coset.members {
                class_of[x] = classes.len();
            }
            classes.push(coset.members);
        }
        Partition { classes, class_of }
    }

    /// The block `aHbH = {a·h₁·b·h₂}` for `a`, `b` given by index.
    pub fn block_of(&self, a: usize, b: usize) -> Block {
        let g = self.parent();
        let mut inside = vec![false; g.order()];
        for &h1 in self.members() {
            let x = g.mul(g.mul(a, h1), b);
            if inside[x] {
                continue;
            }
            for &h2 in self.members() {
                inside[g.mul(x, h2)] = true;
            }
        }
        Block {
            rep_pair: (a, b),
            members: (0..g.order()).filter(|&i| inside[i]).collect(),
        }
    }

    pub fn block(&self, a: &Permutation, b: &Permutation) -> Result<Block, Error> {
        let g = self.parent();
        Ok(self.block_of(g.require(a)?, g.require(b)?))
    }

    /// One block per pair of left-coset representatives, without duplicate member sets.
    ///
    /// Blocks appear in order of their least representative pair, so the first block is always
    /// `HH = H`.
    pub fn all_blocks(&self) -> Vec<Block> {
        let reps: Vec<usize> = self
            .coset_partition(Side::Left)
            .classes
            .iter()
            .map(|c| c[0])
            .collect();
        let mut seen = alloc::collections::BTreeSet::new();
        let mut blocks = Vec::new();
        for &a in &reps {
            for &b in &reps {
                let block = self.block_of(a, b);
                if seen.insert(block.members.clone()) {
                    blocks.push(block);
                }
            }
        }
        blocks
    }

    /// `aH = Ha` for every `a` in the parent group.
    pub fn is_normal(&self) -> bool {
        (0..self.parent().order())
            .all(|a| self.coset_of(a, Side::Left).members == self.coset_of(a, Side::Right).members)
    }
}

#[cfg(test)]
mod tests {
    use alloc::{string::String, vec::Vec};

    use super::*;
    use crate::group::{catalog_group, FiniteGroup};

    fn p(s: &str) -> Permutation {
        Permutation::parse(s, Some(3)).unwrap()
    }

    fn names(g: &FiniteGroup, set: &[usize]) -> Vec<String> {
        set.iter()
            .map(|&i| g.element(i).to_cycle_string())
            .collect()
    }

    #[test]
    fn coset_examples() {
        let s3 = catalog_group("S3").unwrap();
        let h = s3.subgroup_generated(&[p("(2,3)")]).unwrap();
        let c = h.coset(&p("(1,2)"), Side::Left).unwrap();
        assert_eq!(names(&s3, &c.members), ["(1,2)", "(1,3,2)"]);
        assert_eq!(s3.element(c.representative).to_cycle_string(), "(1,2)");
        let c = h.coset(&p("(1,2,3)"), Side::Left).unwrap();
        assert_eq!(names(&s3, &c.members), ["(1,2,3)", "(1,3)"]);
        let c = h.coset(&p("(2,3)"), Side::Left).unwrap();
        assert_eq!(c.members, h.members());
        let s4_elt = Permutation::parse("(1,4)", None).unwrap();
        assert_eq!(h.coset(&s4_elt, Side::Left).unwrap_err(), Error::NotInGroup);
    }

    #[test]
    fn same_left_coset_examples() {
        let s3 = catalog_group("S3").unwrap();
        let h = s3.subgroup_generated(&[p("(2,3)")]).unwrap();
        assert!(h.same_left_coset(&p("(1,2)"), &p("(1,2)")).unwrap());
        assert!(h.same_left_coset(&p("(1,2)"), &p("(1,3,2)")).unwrap());
        assert!(!h.same_left_coset(&p("(1,2)"), &p("(1,2,3)")).unwrap());
    }

    #[test]
    fn partition_examples() {
        let s3 = catalog_group("S3").unwrap();
        assert_eq!(s3.whole().coset_partition(Side::Left).len(), 1);
        assert_eq!(s3.trivial_subgroup().coset_partition(Side::Left).len(), 6);
        let h = s3.subgroup_generated(&[p("(2,3)")]).unwrap();
        let part = h.coset_partition(Side::Left);
        let classes: Vec<Vec<String>> = part.classes.iter().map(|c| names(&s3, c)).collect();
        assert_eq!(
            classes,
            [["()", "(2,3)"], ["(1,2)", "(1,3,2)"], ["(1,2,3)", "(1,3)"]]
        );
    }

    #[test]
    fn block_examples() {
        let s3 = catalog_group("S3").unwrap();
        let h = s3.subgroup_generated(&[p("(2,3)")]).unwrap();
        let e = Permutation::identity(3);
        assert_eq!(h.block(&e, &e).unwrap().members, h.members());
        // h1, h2 in {(), (2,3)}: (1,2)(1,2) = (), (1,2)(1,2)(2,3) = (2,3),
        // (1,2)(2,3)(1,2) = (1,3), (1,2)(2,3)(1,2)(2,3) = (1,2,3)
        let b = h.block(&p("(1,2)"), &p("(1,2)")).unwrap();
        assert_eq!(names(&s3, &b.members), ["()", "(2,3)", "(1,2,3)", "(1,3)"]);

        let rot = s3.subgroup_generated(&[p("(1,2,3)")]).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(
                    rot.block_of(a, b).members,
                    rot.coset_of(s3.mul(a, b), Side::Left).members
                );
            }
        }
    }

    #[test]
    fn all_blocks_examples() {
        let s3 = catalog_group("S3").unwrap();
        let whole = s3.whole().all_blocks();
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].members.len(), 6);

        let triv = s3.trivial_subgroup().all_blocks();
        assert_eq!(triv.len(), 6);
        assert!(triv.iter().all(|b| b.members.len() == 1));

        let h = s3.subgroup_generated(&[p("(2,3)")]).unwrap();
        let blocks: Vec<Vec<String>> = h
            .all_blocks()
            .iter()
            .map(|b| names(&s3, &b.members))
            .collect();
        assert_eq!(blocks[0], ["()", "(2,3)"]);
        assert!(blocks.contains(&names(&s3, &[0, 1, 3, 5])));
        assert!(blocks.contains(&names(&s3, &[2, 3, 4, 5])));
    }

    #[test]
    fn normality() {
        let s3 = catalog_group("S3").unwrap();
        assert!(s3.subgroup_generated(&[p("(1,2,3)")]).unwrap().is_normal());
        assert!(!s3.subgroup_generated(&[p("(1,2)")]).unwrap().is_normal());
        assert!(s3.whole().is_normal());
        assert!(s3.trivial_subgroup().is_normal());
    }

    #[test]
    fn partition_from_classes_validates() {
        assert!(
            Partition::from_classes(3, alloc::vec![alloc::vec![0, 2], alloc::vec![1]]).is_some()
        );
        assert!(Partition::from_classes(3, alloc::vec![alloc::vec![0, 2]]).is_none());
        assert!(
            Partition::from_classes(2, alloc::vec![alloc::vec![0, 1], alloc::vec![1]]).is_none()
        );
    }
}
