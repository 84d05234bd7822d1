//! Block co-membership relations and the fixpoint chain `S₀ ⊆ S₁ ⊆ …`.
//!
//! Two elements are ψ-related when some block `aHbH` contains both. θ lifts this to left cosets
//! and ρ relates blocks that intersect. All three are reflexive and symmetric; none is
//! transitive in general. Collecting ψ-neighbours of `H` until nothing new appears yields a set
//! `S`, which is always the normal closure of `H`.

use alloc::{collections::BTreeSet, vec, vec::Vec};

use crate::{
    bits::BitMatrix,
    coset::{Coset, Partition, Side},
    error::Error,
    group::Subgroup,
};

/// What the indices of a [`SymmetricRelation`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// Indices into the group's element list.
    Elements,
    /// Indices into the left-coset partition.
    Cosets,
    /// Indices into [`Subgroup::all_blocks`].
    Blocks,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricRelation {
    domain: Domain,
    matrix: BitMatrix,
}

impl SymmetricRelation {
    fn new(domain: Domain, size: usize) -> Self {
        SymmetricRelation {
            domain,
            matrix: BitMatrix::new(size),
        }
    }

    fn relate(&mut self, x: usize, y: usize) {
        self.matrix.set(x, y);
        self.matrix.set(y, x);
    }

    fn relate_all(&mut self, set: &[usize]) {
        for &x in set {
            for &y in set {
                self.matrix.set(x, y);
            }
        }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.len() == 0
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.matrix.get(x, y)
    }

    /// Everything related to `x`, ascending.
    pub fn neighbours(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.matrix.ones(x)
    }

    /// Unordered pairs `x <= y`, ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |x| {
            self.neighbours(x)
                .filter(move |&y| y >= x)
                .map(move |y| (x, y))
        })
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|x| self.related(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|x| self.neighbours(x).all(|y| self.related(y, x)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransitivityReport {
    pub transitive: bool,
    /// The least `(x, y, z)` with `x ~ y`, `y ~ z` and not `x ~ z`.
    pub counterexample: Option<(usize, usize, usize)>,
}

pub fn transitivity_report(rel: &SymmetricRelation) -> TransitivityReport {
    let counterexample = (0..rel.len()).find_map(|x| {
        rel.neighbours(x)
            .find_map(|y| rel.matrix.first_difference(y, x).map(|z| (x, y, z)))
    });
    TransitivityReport {
        transitive: counterexample.is_none(),
        counterexample,
    }
}

/// ψ: co-membership in some block, over element indices.
pub fn psi_relation(h: &Subgroup<'_>) -> SymmetricRelation {
    let mut rel = SymmetricRelation::new(Domain::Elements, h.parent().order());
    for block in h.all_blocks() {
        rel.relate_all(&block.members);
    }
    // a = e·e·a·e lies in the block eHaH
    assert!(rel.is_reflexive(), "psi must be reflexive");
    rel
}

/// ψ rebuilt from blocks `aHbH` whose representatives are chosen by `pick`.
///
/// `pick` receives the index of a left coset (in [`Subgroup::coset_partition`] order) together
/// with its members and returns the representative to use. Since blocks only depend on the
/// cosets, every choice yields the same relation as [`psi_relation`].
pub fn psi_relation_with_representatives(
    h: &Subgroup<'_>,
    mut pick: impl FnMut(usize, &[usize]) -> usize,
) -> SymmetricRelation {
    let cosets = h.coset_partition(Side::Left);
    let mut rel = SymmetricRelation::new(Domain::Elements, h.parent().order());
    let mut seen = BTreeSet::new();
    for i in 0..cosets.len() {
        for j in 0..cosets.len() {
            let a = pick(i, &cosets.classes[i]);
            let b = pick(j, &cosets.classes[j]);
            let block = h.block_of(a, b);
            if seen.insert(block.members.clone()) {
                rel.relate_all(&block.members);
            }
        }
    }
    rel
}

fn check_left_coset(h: &Subgroup<'_>, c: &Coset) -> Result<(), Error> {
    if c.side != Side::Left
        || c.representative >= h.parent().order()
        || h.coset_of(c.representative, Side::Left).members != c.members
    {
        return Err(Error::ForeignCoset);
    }
    Ok(())
}

/// Whether elements `a` and `b` factor as `a = m₁n₁`, `b = m₂n₂` with `m₁H = m₂H` and
/// `n₁H = n₂H`.
pub(crate) fn factor_related(h: &Subgroup<'_>, a: usize, b: usize) -> bool {
    let g = h.parent();
    (0..g.order()).any(|m1| {
        let n1 = g.mul(g.inv(m1), a);
        h.members().iter().any(|&k| {
            let m2 = g.mul(m1, k);
            let n2 = g.mul(g.inv(m2), b);
            h.same_left_coset_of(n1, n2)
        })
    })
}

/// θ on two left cosets of `h`, decided on their representatives by searching for factorings
/// `a = m₁n₁`, `b = m₂n₂` with `m₁H = m₂H` and `n₁H = n₂H`.
pub fn theta(h: &Subgroup<'_>, a: &Coset, b: &Coset) -> Result<bool, Error> {
    check_left_coset(h, a)?;
    check_left_coset(h, b)?;
    Ok(factor_related(h, a.representative, b.representative))
}

/// θ over all left cosets of `h`, indexed like [`Subgroup::coset_partition`].
pub fn theta_relation(h: &Subgroup<'_>) -> SymmetricRelation {
    let cosets = h.coset_partition(Side::Left);
    let mut rel = SymmetricRelation::new(Domain::Cosets, cosets.len());
    for i in 0..cosets.len() {
        for j in i..cosets.len() {
            if factor_related(h, cosets.classes[i][0], cosets.classes[j][0]) {
                rel.relate(i, j);
            }
        }
    }
    rel
}

/// ρ: two blocks are related when they intersect. Indexed like [`Subgroup::all_blocks`].
pub fn rho_relation(h: &Subgroup<'_>) -> SymmetricRelation {
    let blocks = h.all_blocks();
    let mut rel = SymmetricRelation::new(Domain::Blocks, blocks.len());
    for i in 0..blocks.len() {
        for j in i..blocks.len() {
            if blocks[i].intersects(&blocks[j]) {
                rel.relate(i, j);
            }
        }
    }
    rel
}

/// The stages `S₀ = H`, `Sₙ = {g | g ψ s for some s ∈ Sₙ₋₁}` up to the first repeat.
#[derive(Debug, Clone)]
pub struct ChainTrace<'g> {
    pub subgroup: Subgroup<'g>,
    /// `stages[fixpoint_index] == stages[fixpoint_index - 1]` and nothing follows it.
    pub stages: Vec<Vec<usize>>,
    pub fixpoint_index: usize,
}

impl<'g> ChainTrace<'g> {
    /// The limit set `S`.
    pub fn s(&self) -> &[usize] {
        self.stages.last().expect("at least two stages")
    }

    /// `S` as a subgroup, after checking it contains the identity and is closed.
    pub fn s_subgroup(&self) -> Result<Subgroup<'g>, Error> {
        let g = self.subgroup.parent();
        let s = self.s();
        let mut inside = vec![false; g.order()];
        for &x in s {
            inside[x] = true;
        }
        if !inside[0] || !s.iter().all(|&x| s.iter().all(|&y| inside[g.mul(x, y)])) {
            return Err(Error::NotASubgroup);
        }
        Ok(Subgroup::from_parts(g, s.to_vec(), s.to_vec()))
    }

    /// The classes of `~`: `g₁ ~ g₂` when both lie in one left translate `aS`.
    pub fn sim_partition(&self) -> Result<Partition, Error> {
        Ok(self.s_subgroup()?.coset_partition(Side::Left))
    }
}

pub fn s_chain<'g>(h: &Subgroup<'g>) -> ChainTrace<'g> {
    let psi = psi_relation(h);
    let n = h.parent().order();
    let mut stages = vec![h.members().to_vec()];
    loop {
        let current = stages.last().unwrap();
        let mut inside = vec![false; n];
        for &s in current {
            for g in psi.neighbours(s) {
                inside[g] = true;
            }
        }
        let next: Vec<usize> = (0..n).filter(|&g| inside[g]).collect();
        let done = &next == current;
        stages.push(next);
        if done {
            break;
        }
    }
    ChainTrace {
        subgroup: h.clone(),
        fixpoint_index: stages.len() - 1,
        stages,
    }
}

pub fn sim_partition(h: &Subgroup<'_>) -> Result<Partition, Error> {
    s_chain(h).sim_partition()
}
