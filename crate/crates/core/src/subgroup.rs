//! Subgroups, cosets, quotients and lifting.
//!
//! A [`Subgroup`] carries its own table, its parent group and the positions of
//! its elements in the parent roster. Its roster keeps whatever order it was
//! built in: cyclic subgroups list powers of the generator, most others follow
//! the parent order. [`Subgroup::is_parent_ordered`] reports which.

use std::collections::HashMap;

use crate::element::Element;
use crate::error::{domain, Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, Debug)]
pub struct Subgroup {
    group: FiniteGroup,
    parent: FiniteGroup,
    embedding: Vec<usize>,
}

/// Structural equality of the subgroups as groups (roster and table).
impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// The subgroup of `parent` on the given roster (identity first), with the
    /// operation restricted from `parent`.
    pub fn from_elements(parent: &FiniteGroup, roster: Vec<Element>) -> Result<Subgroup> {
        let embedding = roster.iter().map(|x| parent.ind(x)).collect::<Result<Vec<_>>>()?;
        Subgroup::from_indices(parent, embedding)
    }

    pub(crate) fn from_indices(parent: &FiniteGroup, embedding: Vec<usize>) -> Result<Subgroup> {
        if embedding.first() != Some(&0) {
            return domain("a subgroup roster must start with the parent identity");
        }
        let n = embedding.len();
        let local: HashMap<usize, usize> = embedding.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        if local.len() != n {
            return domain("subgroup roster has duplicate elements");
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in &embedding {
            for &b in &embedding {
                let ab = parent.op_index(a, b);
                match local.get(&ab) {
                    Some(&k) => table.push(k),
                    None => {
                        return domain(format!(
                            "{} is not closed: {} * {} = {}",
                            "subgroup roster",
                            parent.elt(a),
                            parent.elt(b),
                            parent.elt(ab)
                        ))
                    }
                }
            }
        }
        let roster = embedding.iter().map(|&i| parent.elt(i).clone()).collect();
        Ok(Subgroup { group: FiniteGroup::from_trusted(roster, table), parent: parent.clone(), embedding })
    }

    /// Views `group` as a subgroup of `parent`, checking that its elements lie
    /// in `parent` and that both operations agree.
    pub fn of(group: &FiniteGroup, parent: &FiniteGroup) -> Result<Subgroup> {
        if !subgroupp(group, parent) {
            return domain("group is not a subgroup of the given parent");
        }
        let embedding = group.elements().iter().map(|x| parent.ind(x)).collect::<Result<Vec<_>>>()?;
        Ok(Subgroup { group: group.clone(), parent: parent.clone(), embedding })
    }

    /// The whole of `g` as a subgroup of itself.
    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup { group: g.clone(), parent: g.clone(), embedding: (0..g.order()).collect() }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn elements(&self) -> &[Element] {
        self.group.elements()
    }

    /// Parent-roster positions of the subgroup roster.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.group.contains(x)
    }

    pub fn is_parent_ordered(&self) -> bool {
        self.embedding.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Re-homes this subgroup into `g`, which must contain it.
    pub fn within(&self, g: &FiniteGroup) -> Result<Subgroup> {
        if self.parent == *g {
            return Ok(Subgroup { parent: g.clone(), ..self.clone() });
        }
        Subgroup::of(&self.group, g)
    }

    pub(crate) fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.parent.order()];
        for &i in &self.embedding {
            mask[i] = true;
        }
        mask
    }
}

pub(crate) fn check_parent(h: &Subgroup, g: &FiniteGroup) -> Result<()> {
    if h.parent == *g {
        Ok(())
    } else {
        domain("subgroup does not belong to the given group")
    }
}

/// True iff every element of `h` lies in `g`, the identities agree and the
/// operation of `h` is the restriction of `g`'s.
pub fn subgroupp(h: &FiniteGroup, g: &FiniteGroup) -> bool {
    if h.identity() != g.identity() {
        return false;
    }
    let Some(idx) = h.elements().iter().map(|x| g.index_of(x)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    let n = h.order();
    (0..n).all(|a| (0..n).all(|b| idx[h.op_index(a, b)] == g.op_index(idx[a], idx[b])))
}

/// `<a>` with roster `[e, a, a^2, ...]`.
pub fn cyclic(a: &Element, g: &FiniteGroup) -> Result<Subgroup> {
    let i = g.ind(a)?;
    Subgroup::from_indices(g, g.power_indices(i))
}

pub fn trivial_subgroup(g: &FiniteGroup) -> Subgroup {
    Subgroup::from_indices(g, vec![0]).expect("identity is a subgroup")
}

/// `h ∩ k`, ordered by the roster of `g`.
pub fn group_intersection(h: &Subgroup, k: &Subgroup, g: &FiniteGroup) -> Result<Subgroup> {
    check_parent(h, g)?;
    check_parent(k, g)?;
    let (hm, km) = (h.mask(), k.mask());
    let common = (0..g.order()).filter(|&i| hm[i] && km[i]).collect();
    Subgroup::from_indices(g, common)
}

pub(crate) fn lcoset_indices(x: usize, h: &Subgroup, g: &FiniteGroup) -> Vec<usize> {
    let mut out: Vec<usize> = h.embedding.iter().map(|&j| g.op_index(x, j)).collect();
    out.sort_unstable();
    out
}

/// The left coset `x h`, ordered by the roster of `g`.
pub fn lcoset(x: &Element, h: &Subgroup, g: &FiniteGroup) -> Result<Vec<Element>> {
    check_parent(h, g)?;
    let i = g.ind(x)?;
    Ok(lcoset_indices(i, h, g).into_iter().map(|j| g.elt(j).clone()).collect())
}

pub(crate) fn lcosets_indices(h: &Subgroup, g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut covered = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() {
        if covered[x] {
            continue;
        }
        let coset = lcoset_indices(x, h, g);
        for &j in &coset {
            covered[j] = true;
        }
        out.push(coset);
    }
    out
}

/// All left cosets of `h`, each ordered by `g` and listed by their first
/// (smallest-index) member, so the identity coset comes first.
pub fn lcosets(h: &Subgroup, g: &FiniteGroup) -> Result<Vec<Vec<Element>>> {
    check_parent(h, g)?;
    Ok(lcosets_indices(h, g)
        .into_iter()
        .map(|c| c.into_iter().map(|j| g.elt(j).clone()).collect())
        .collect())
}

pub fn normalp(h: &Subgroup, g: &FiniteGroup) -> Result<bool> {
    check_parent(h, g)?;
    let mask = h.mask();
    Ok((0..g.order()).all(|x| {
        let xi = g.inv_index(x);
        h.embedding.iter().all(|&a| mask[g.op_index(x, g.op_index(a, xi))])
    }))
}

fn coset_element(coset: &[usize], g: &FiniteGroup) -> Element {
    Element::Seq(coset.iter().map(|&j| g.elt(j).clone()).collect())
}

/// `g / n`; its elements are the cosets of `n` as sequence elements.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<FiniteGroup> {
    if !normalp(n, g)? {
        return domain("quotient requires a normal subgroup");
    }
    let cosets = lcosets_indices(n, g);
    let mut which = vec![0usize; g.order()];
    for (c, coset) in cosets.iter().enumerate() {
        for &j in coset {
            which[j] = c;
        }
    }
    let q = cosets.len();
    let mut table = Vec::with_capacity(q * q);
    for a in &cosets {
        for b in &cosets {
            table.push(which[g.op_index(a[0], b[0])]);
        }
    }
    let roster = cosets.iter().map(|c| coset_element(c, g)).collect();
    Ok(FiniteGroup::from_trusted(roster, table))
}

/// Union of the cosets of `n` that belong to `h`, a subgroup of `g / n`.
/// The roster is the concatenation of those cosets in `h`'s roster order.
pub fn lift(h: &Subgroup, n: &Subgroup, g: &FiniteGroup) -> Result<Subgroup> {
    let q = quotient(g, n)?;
    if *h.parent() != q {
        return domain("lift expects a subgroup of the quotient by the given normal subgroup");
    }
    lift_unchecked(h, g)
}

/// `lift` for callers that built `h` inside the matching quotient themselves.
pub(crate) fn lift_unchecked(h: &Subgroup, g: &FiniteGroup) -> Result<Subgroup> {
    let mut roster = Vec::new();
    for coset in h.elements() {
        let members = coset
            .as_seq()
            .ok_or_else(|| Error::Internal(format!("quotient element {coset} is not a coset")))?;
        roster.extend(members.iter().cloned());
    }
    Subgroup::from_elements(g, roster)
}
