//! Normal closures, quotient groups, and checks tying the block chain to `nc(H)`.

use alloc::{vec, vec::Vec};

use crate::{
    coset::{Partition, Side},
    error::Error,
    group::{FiniteGroup, Subgroup},
    relations::{rho_relation, s_chain, transitivity_report},
};

/// The subgroup generated by every conjugate of every element of `h`.
///
/// The stored generators are the distinct conjugates of `h`'s own generators.
pub fn normal_closure<'g>(h: &Subgroup<'g>) -> Subgroup<'g> {
    let g = h.parent();
    let mut conjugates = vec![false; g.order()];
    for x in 0..g.order() {
        for &k in h.members() {
            conjugates[g.conjugate(k, x)] = true;
        }
    }
    let all: Vec<usize> = (0..g.order()).filter(|&i| conjugates[i]).collect();
    let members = g.closure(&all);

    let mut generators: Vec<usize> = h
        .generator_indices()
        .iter()
        .flat_map(|&k| (0..g.order()).map(move |x| g.conjugate(k, x)))
        .collect();
    generators.sort_unstable();
    generators.dedup();
    Subgroup::from_parts(g, generators, members)
}

/// The intersection of all normal subgroups containing `h`, found by enumerating subgroups.
pub fn minimal_normal_oracle<'g>(h: &Subgroup<'g>) -> Result<Subgroup<'g>, Error> {
    let g = h.parent();
    let subgroups = g.all_subgroups()?;
    let mut inside = vec![true; g.order()];
    for n in subgroups.iter().filter(|n| n.is_normal()) {
        if h.members().iter().all(|&x| n.contains(x)) {
            for (x, flag) in inside.iter_mut().enumerate() {
                *flag &= n.contains(x);
            }
        }
    }
    let members: Vec<usize> = (0..g.order()).filter(|&x| inside[x]).collect();
    subgroups
        .into_iter()
        .find(|n| n.members() == members)
        .ok_or(Error::NotASubgroup)
}

#[derive(Debug, Clone)]
pub struct TheoremReport<'g> {
    pub subgroup: Subgroup<'g>,
    pub s: Vec<usize>,
    pub nc: Vec<usize>,
    /// `S == nc(H)` as sets.
    pub equal: bool,
    /// The classes of `~` are exactly the left cosets of `nc(H)`.
    pub partition_equal: bool,
    pub fixpoint_index: usize,
}

impl TheoremReport<'_> {
    pub fn holds(&self) -> bool {
        self.equal && self.partition_equal
    }
}

pub fn verify_theorem<'g>(h: &Subgroup<'g>) -> TheoremReport<'g> {
    let trace = s_chain(h);
    let nc = normal_closure(h);
    let partition_equal = match trace.sim_partition() {
        Ok(p) => p == nc.coset_partition(Side::Left),
        Err(_) => false,
    };
    TheoremReport {
        subgroup: h.clone(),
        equal: trace.s() == nc.members(),
        s: trace.s().to_vec(),
        nc: nc.members().to_vec(),
        partition_equal,
        fixpoint_index: trace.fixpoint_index,
    }
}

/// `G / N` for a normal subgroup `N`.
#[derive(Debug, Clone)]
pub struct QuotientGroup<'g> {
    pub kernel: Subgroup<'g>,
    /// Left cosets of the kernel, ordered by least member.
    pub classes: Partition,
    /// `table[i][j]` is the class of `rep(i)·rep(j)`.
    pub table: Vec<Vec<usize>>,
}

impl<'g> QuotientGroup<'g> {
    pub fn parent(&self) -> &'g FiniteGroup {
        self.kernel.parent()
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes.classes[class][0]
    }

    /// Index of the kernel's own class; always 0.
    pub fn identity_class(&self) -> usize {
        self.classes.class_of[0]
    }

    pub fn is_latin_square(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let row_ok = |seen: &mut Vec<bool>, cell: &dyn Fn(usize) -> usize| {
            seen.iter_mut().for_each(|s| *s = false);
            (0..n).all(|k| {
                let c = cell(k);
                c < n && !core::mem::replace(&mut seen[c], true)
            })
        };
        (0..n).all(|i| {
            row_ok(&mut seen, &|j| self.table[i][j]) && row_ok(&mut seen, &|j| self.table[j][i])
        })
    }

    /// The kernel class is a two-sided identity of the table.
    pub fn has_kernel_identity(&self) -> bool {
        let e = self.identity_class();
        self.kernel.contains(self.representative(e))
            && (0..self.order()).all(|i| self.table[e][i] == i && self.table[i][e] == i)
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        let t = &self.table;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
    }
}

pub fn quotient_group<'g>(n: &Subgroup<'g>) -> Result<QuotientGroup<'g>, Error> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let g = n.parent();
    let classes = n.coset_partition(Side::Left);
    let reps: Vec<usize> = classes.classes.iter().map(|c| c[0]).collect();
    let table = reps
        .iter()
        .map(|&a| {
            reps.iter()
                .map(|&b| classes.class_of[g.mul(a, b)])
                .collect()
        })
        .collect();
    Ok(QuotientGroup {
        kernel: n.clone(),
        classes,
        table,
    })
}

/// `G / nc(H)`, which is the ordinary quotient whenever `H` is normal.
pub fn generalized_quotient<'g>(h: &Subgroup<'g>) -> QuotientGroup<'g> {
    let q = quotient_group(&normal_closure(h)).expect("normal closure is normal");
    if h.is_normal() {
        let direct = quotient_group(h).expect("checked normal");
        assert!(
            direct.classes == q.classes && direct.table == q.table,
            "generalized quotient disagrees with the ordinary quotient"
        );
    }
    q
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoLemmaReport {
    pub rho_transitive: bool,
    /// Union of the blocks meeting `HH = H`.
    pub union_blocks_meeting_h: Vec<usize>,
    pub matches_nc: bool,
    /// `!rho_transitive || matches_nc`.
    pub consistent: bool,
}

pub fn rho_lemma_check(h: &Subgroup<'_>) -> RhoLemmaReport {
    let g = h.parent();
    let blocks = h.all_blocks();
    let rho = rho_relation(h);
    let rho_transitive = transitivity_report(&rho).transitive;
    debug_assert_eq!(blocks[0].members, h.members());
    let mut inside = vec![false; g.order()];
    for b in rho.neighbours(0) {
        for &x in &blocks[b].members {
            inside[x] = true;
        }
    }
    let union: Vec<usize> = (0..g.order()).filter(|&x| inside[x]).collect();
    let matches_nc = union == normal_closure(h).members();
    RhoLemmaReport {
        rho_transitive,
        union_blocks_meeting_h: union,
        matches_nc,
        consistent: !rho_transitive || matches_nc,
    }
}
