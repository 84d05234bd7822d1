//! Multiplication tables with rows and columns grouped by `nc(H)`-coset, then by `H`-coset.

use alloc::{string::String, vec::Vec};

use crate::{closure::normal_closure, coset::Side, group::Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HCosetGroup {
    pub rep: String,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NcCosetGroup {
    pub rep: String,
    pub h_cosets: Vec<HCosetGroup>,
}

/// Every permutation is held in canonical cycle notation.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NestedTable {
    #[cfg_attr(feature = "serde", serde(rename = "group"))]
    pub group_label: String,
    #[cfg_attr(feature = "serde", serde(rename = "subgroup_generators"))]
    pub subgroup_gens: Vec<String>,
    pub normal_closure: Vec<String>,
    pub nc_cosets: Vec<NcCosetGroup>,
    /// `cells[r][c]` is row element composed with column element, in [`NestedTable::order`].
    pub cells: Vec<Vec<String>>,
}

impl NestedTable {
    /// Row (and column) labels in display order.
    pub fn order(&self) -> impl Iterator<Item = &str> {
        self.nc_cosets
            .iter()
            .flat_map(|n| &n.h_cosets)
            .flat_map(|h| &h.elements)
            .map(String::as_str)
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Cell addressed by row and column labels.
    pub fn cell(&self, row: &str, col: &str) -> Option<&str> {
        let r = self.order().position(|x| x == row)?;
        let c = self.order().position(|x| x == col)?;
        Some(&self.cells[r][c])
    }
}

/// Groups elements by `nc(H)`-coset, then by `H`-coset, each ordered by least member.
pub fn build_nested_table(h: &Subgroup<'_>) -> NestedTable {
    let g = h.parent();
    let nc = normal_closure(h);
    let name = |i: usize| g.element(i).to_cycle_string();
    let h_part = h.coset_partition(Side::Left);

    let mut order = Vec::with_capacity(g.order());
    let nc_cosets = nc
        .coset_partition(Side::Left)
        .classes
        .iter()
        .map(|outer| {
            // H-cosets in order of least member; each lies inside one nc(H)-coset
            let mut inner: Vec<usize> = outer.iter().map(|&x| h_part.class_of[x]).collect();
            inner.sort_unstable();
            inner.dedup();
            let h_cosets = inner
                .iter()
                .map(|&c| {
                    let members = &h_part.classes[c];
                    order.extend_from_slice(members);
                    HCosetGroup {
                        rep: name(members[0]),
                        elements: members.iter().map(|&x| name(x)).collect(),
                    }
                })
                .collect();
            NcCosetGroup {
                rep: name(outer[0]),
                h_cosets,
            }
        })
        .collect();

    let cells = order
        .iter()
        .map(|&r| order.iter().map(|&c| name(g.mul(r, c))).collect())
        .collect();

    NestedTable {
        group_label: g.label().into(),
        subgroup_gens: h.generators().map(|p| p.to_cycle_string()).collect(),
        normal_closure: nc.elements().map(|p| p.to_cycle_string()).collect(),
        nc_cosets,
        cells,
    }
}
