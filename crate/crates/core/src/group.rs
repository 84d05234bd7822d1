//! Finite permutation groups, the group catalog and subgroup enumeration.

use alloc::{
    collections::{BTreeSet, VecDeque},
    format,
    string::{String, ToString},
    vec,
    vec::Vec,
};
use core::fmt;

use crate::{error::Error, perm::Permutation};

/// Order caps for group generation and for exhaustive subgroup enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_subgroup_search_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 10080,
            max_subgroup_search_order: 48,
        }
    }
}

// Groups up to this order carry a precomputed multiplication table.
const TABLE_LIMIT: usize = 1024;

/// A fully enumerated permutation group.
///
/// Elements are kept in ascending lexicographic order of their image sequences, so the identity
/// sits at index 0. Most of the crate refers to elements by their index in this list.
#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    degree: usize,
    elements: Vec<Permutation>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl FiniteGroup {
    /// Closure of `generators` under composition, with the default order cap.
    pub fn generate(generators: &[Permutation], label: &str) -> Result<Self, Error> {
        Self::generate_with_cap(generators, label, Limits::default().max_order)
    }

    pub fn generate_with_cap(
        generators: &[Permutation],
        label: &str,
        cap: usize,
    ) -> Result<Self, Error> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let identity = Permutation::identity(degree);
        let mut seen = BTreeSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    if seen.len() > cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(Self::from_sorted_closed(label, seen.into_iter().collect()))
    }

    /// Builds a group from an explicit element list, checking the group axioms.
    pub fn from_elements(label: &str, elements: Vec<Permutation>) -> Result<Self, Error> {
        let degree = elements.first().ok_or(Error::EmptyGenerators)?.degree();
        if let Some(g) = elements.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        if !elements[0].is_identity() {
            return Err(Error::NotASubgroup);
        }
        for x in &elements {
            if elements.binary_search(&x.inverse()).is_err() {
                return Err(Error::NotASubgroup);
            }
            for y in &elements {
                if elements.binary_search(&x.then(y)).is_err() {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(Self::from_sorted_closed(label, elements))
    }

    fn from_sorted_closed(label: &str, elements: Vec<Permutation>) -> Self {
        let degree = elements[0].degree();
        let find = |p: &Permutation| elements.binary_search(p).expect("group is closed");
        let inverses = elements.iter().map(|x| find(&x.inverse())).collect();
        let table = (elements.len() <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(elements.len() * elements.len());
            for x in &elements {
                t.extend(elements.iter().map(|y| find(&x.then(y)) as u32));
            }
            t
        });
        FiniteGroup {
            label: label.to_string(),
            degree,
            elements,
            inverses,
            table,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    /// Always 0: the identity is the least element.
    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(p).ok()
    }

    pub(crate) fn require(&self, p: &Permutation) -> Result<usize, Error> {
        self.index_of(p).ok_or(Error::NotInGroup)
    }

    /// Index of `elements[a]` composed with `elements[b]` (`a` applied first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self
                .elements
                .binary_search(&self.elements[a].then(&self.elements[b]))
                .expect("group is closed"),
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// The conjugate of `h` by `g`: apply `g⁻¹`, then `h`, then `g`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    /// Sorted index set of the subgroup generated by the given elements.
    pub fn closure(&self, generators: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0];
        let mut next = 0;
        while next < members.len() {
            let x = members[next];
            next += 1;
            for &g in generators {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    pub fn subgroup_generated(&self, generators: &[Permutation]) -> Result<Subgroup<'_>, Error> {
        let gens = generators
            .iter()
            .map(|g| self.require(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.subgroup_from_indices(gens))
    }

    pub fn subgroup_from_indices(&self, generators: Vec<usize>) -> Subgroup<'_> {
        let members = self.closure(&generators);
        Subgroup {
            parent: self,
            generators,
            members,
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup<'_> {
        self.subgroup_from_indices(vec![0])
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup {
            parent: self,
            generators: (0..self.order()).collect(),
            members: (0..self.order()).collect(),
        }
    }

    /// Every subgroup exactly once, sorted by order and then member set.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup<'_>>, Error> {
        self.all_subgroups_with_cap(Limits::default().max_subgroup_search_order)
    }

    /// Joins cyclic subgroups until no new member set appears.
    pub fn all_subgroups_with_cap(&self, cap: usize) -> Result<Vec<Subgroup<'_>>, Error> {
        if self.order() > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
        let mut seen = BTreeSet::new();
        let mut cyclic: Vec<usize> = Vec::new();
        let mut found = Vec::new();
        for g in 0..self.order() {
            let sub = self.subgroup_from_indices(vec![g]);
            if seen.insert(sub.members.clone()) {
                cyclic.push(g);
                found.push(sub);
            }
        }
        let mut next = 0;
        while next < found.len() {
            for &g in &cyclic {
                if found[next].contains(g) {
                    continue;
                }
                let mut gens = found[next].generators.clone();
                gens.push(g);
                let members = self.closure(&gens);
                if seen.insert(members.clone()) {
                    found.push(Subgroup {
                        parent: self,
                        generators: gens,
                        members,
                    });
                }
            }
            next += 1;
        }
        found.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        Ok(found)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

/// A subgroup of a [`FiniteGroup`], stored as a sorted set of element indices.
#[derive(Clone)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    generators: Vec<usize>,
    members: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    /// Wraps a sorted index set already known to be closed.
    pub(crate) fn from_parts(
        parent: &'g FiniteGroup,
        generators: Vec<usize>,
        members: Vec<usize>,
    ) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            parent,
            generators,
            members,
        }
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn generators(&self) -> impl Iterator<Item = &'g Permutation> + '_ {
        self.generators.iter().map(|&i| self.parent.element(i))
    }

    pub fn elements(&self) -> impl Iterator<Item = &'g Permutation> + '_ {
        self.members.iter().map(|&i| self.parent.element(i))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Generators in cycle notation separated by `;`.
    pub fn generators_string(&self) -> String {
        let mut gens: Vec<String> = self.generators().map(|g| g.to_cycle_string()).collect();
        if gens.is_empty() {
            gens.push("()".to_string());
        }
        gens.join(";")
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(<{}> of order {} in {})",
            self.generators_string(),
            self.order(),
            self.parent.label
        )
    }
}

/// Looks up a named group: `S<n>`, `A<n>`, `C<n>`, `D<n>` or `Q8`.
///
/// Standard generators:
/// * `S<n>`: `(1,2)` and `(1,2,…,n)`, for `1 <= n <= 7`.
/// * `A<n>`: the 3-cycles `(1,2,k)` for `3 <= k <= n`, for `1 <= n <= 7`.
/// * `C<n>`: `(1,2,…,n)`.
/// * `D<n>`: the rotation `(1,2,…,n)` and the reflection `i ↦ n + 2 - i (mod n)` fixing 1;
///   order `2n` on `n >= 3` points.
/// * `Q8`: left multiplication by `i` and `j` on `1, -1, i, -i, j, -j, k, -k` (points 1 to 8).
pub fn catalog_group(name: &str) -> Result<FiniteGroup, Error> {
    catalog_group_with_cap(name, Limits::default().max_order)
}

pub fn catalog_group_with_cap(name: &str, cap: usize) -> Result<FiniteGroup, Error> {
    let unknown = || Error::UnknownGroup(name.to_string());
    let mut chars = name.chars();
    let family = chars.next().ok_or_else(unknown)?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown());
    }
    if name == "Q8" {
        let i = Permutation::parse("(1,3,2,4)(5,7,6,8)", Some(8))?;
        let j = Permutation::parse("(1,5,2,6)(3,8,4,7)", Some(8))?;
        return FiniteGroup::generate_with_cap(&[i, j], name, cap);
    }
    let in_range = |min: usize, max: usize| -> Result<usize, Error> {
        match digits.parse::<usize>() {
            Ok(n) if (min..=max).contains(&n) => Ok(n),
            _ => Err(Error::ParameterOutOfRange {
                name: name.to_string(),
                min,
                max,
            }),
        }
    };
    let cycle = |points: &mut dyn Iterator<Item = usize>, n: usize| -> Permutation {
        let text = format!(
            "({})",
            points.map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        );
        Permutation::parse(&text, Some(n)).expect("well-formed cycle")
    };
    let gens = match family {
        'S' => {
            let n = in_range(1, 7)?;
            if n == 1 {
                vec![Permutation::identity(1)]
            } else {
                vec![cycle(&mut (1..=2), n), cycle(&mut (1..=n), n)]
            }
        }
        'A' => {
            let n = in_range(1, 7)?;
            if n < 3 {
                vec![Permutation::identity(n)]
            } else {
                (3..=n)
                    .map(|k| cycle(&mut [1, 2, k].into_iter(), n))
                    .collect()
            }
        }
        'C' => {
            let n = in_range(1, cap)?;
            if n == 1 {
                vec![Permutation::identity(1)]
            } else {
                vec![cycle(&mut (1..=n), n)]
            }
        }
        'D' => {
            let n = in_range(3, cap / 2)?;
            let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n + 1).collect();
            vec![
                cycle(&mut (1..=n), n),
                Permutation::from_images(&reflection)?,
            ]
        }
        _ => return Err(unknown()),
    };
    FiniteGroup::generate_with_cap(&gens, name, cap)
}
