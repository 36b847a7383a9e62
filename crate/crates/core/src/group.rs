//! Finite groups represented by their full operation table.
//!
//! The roster lists the elements with the identity first; the table holds
//! roster indices, so `table[i][j]` is the index of `roster[i] * roster[j]`.
//! Elements are the public currency; indices stay behind the API except for
//! the few `*_index` helpers the other modules share.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::element::Element;
use crate::error::{domain, AxiomViolation, Error, Result};

/// Largest group order the builders and direct products will construct.
pub const MAX_ORDER: usize = 256;

struct GroupData {
    roster: Vec<Element>,
    index: HashMap<Element, usize>,
    table: Vec<usize>,
    inverses: Vec<usize>,
    orders: OnceLock<Vec<u64>>,
}

/// A validated finite group. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.roster == other.data.roster && self.data.table == other.data.table)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("roster", &self.data.roster)
            .finish()
    }
}

/// Checks the group axioms on `(roster, table)` and returns the group, or the
/// first axiom that fails together with its witnesses.
pub fn validate_group(roster: Vec<Element>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    FiniteGroup::new(roster, table)
}

impl FiniteGroup {
    pub fn new(roster: Vec<Element>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = roster.len();
        if n == 0 {
            return Err(AxiomViolation::Empty.into());
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(AxiomViolation::Shape {
                n,
                rows: table.len(),
                lengths: table.iter().map(Vec::len).collect(),
            }
            .into());
        }
        let mut index = HashMap::with_capacity(n);
        for (i, x) in roster.iter().enumerate() {
            if index.insert(x.clone(), i).is_some() {
                return Err(AxiomViolation::DuplicateElement(x.clone()).into());
            }
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                if entry >= n {
                    return Err(AxiomViolation::Closure {
                        x: roster[i].clone(),
                        y: roster[j].clone(),
                        entry,
                    }
                    .into());
                }
            }
        }
        for i in 0..n {
            if table[0][i] != i || table[i][0] != i {
                return Err(AxiomViolation::Identity {
                    identity: roster[0].clone(),
                    witness: roster[i].clone(),
                }
                .into());
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let at = |i: usize, j: usize| flat[i * n + j];
        for x in 0..n {
            for y in 0..n {
                let xy = at(x, y);
                for z in 0..n {
                    if at(xy, z) != at(x, at(y, z)) {
                        return Err(AxiomViolation::Associativity {
                            x: roster[x].clone(),
                            y: roster[y].clone(),
                            z: roster[z].clone(),
                        }
                        .into());
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            match (0..n).find(|&y| at(x, y) == 0 && at(y, x) == 0) {
                Some(y) => inverses.push(y),
                None => return Err(AxiomViolation::MissingInverse(roster[x].clone()).into()),
            }
        }
        Ok(FiniteGroup::assemble(roster, index, flat, inverses))
    }

    /// Builds a group from a table the caller has derived from an existing
    /// group (restriction, cosets, tuples). Axioms are re-checked only in
    /// debug builds.
    pub(crate) fn from_trusted(roster: Vec<Element>, table: Vec<usize>) -> Self {
        let n = roster.len();
        debug_assert_eq!(table.len(), n * n);
        let index: HashMap<Element, usize> =
            roster.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        debug_assert_eq!(index.len(), n, "duplicate roster entries");
        let mut inverses = vec![usize::MAX; n];
        for x in 0..n {
            if inverses[x] != usize::MAX {
                continue;
            }
            let y = (0..n).find(|&y| table[x * n + y] == 0).expect("trusted table lacks an inverse");
            inverses[x] = y;
            inverses[y] = x;
        }
        let g = FiniteGroup::assemble(roster, index, table, inverses);
        #[cfg(debug_assertions)]
        if n <= 16 {
            let rows = (0..n).map(|i| g.data.table[i * n..(i + 1) * n].to_vec()).collect();
            if let Err(e) = FiniteGroup::new(g.data.roster.clone(), rows) {
                panic!("derived table is not a group: {e}");
            }
        }
        g
    }

    fn assemble(
        roster: Vec<Element>,
        index: HashMap<Element, usize>,
        table: Vec<usize>,
        inverses: Vec<usize>,
    ) -> Self {
        FiniteGroup {
            data: Arc::new(GroupData { roster, index, table, inverses, orders: OnceLock::new() }),
        }
    }

    pub fn order(&self) -> usize {
        self.data.roster.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.data.roster
    }

    pub fn identity(&self) -> &Element {
        &self.data.roster[0]
    }

    /// The operation table as rows of roster indices.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.data.table.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.data.index.contains_key(x)
    }

    /// Position of `x` in the roster.
    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.data.index.get(x).copied()
    }

    pub(crate) fn ind(&self, x: &Element) -> Result<usize> {
        self.index_of(x).ok_or_else(|| Error::NotMember { element: x.clone() })
    }

    pub(crate) fn elt(&self, i: usize) -> &Element {
        &self.data.roster[i]
    }

    #[inline]
    pub(crate) fn op_index(&self, i: usize, j: usize) -> usize {
        self.data.table[i * self.order() + j]
    }

    #[inline]
    pub(crate) fn inv_index(&self, i: usize) -> usize {
        self.data.inverses[i]
    }

    pub(crate) fn power_index(&self, i: usize, n: u64) -> usize {
        // Reduce by the element order first; the loop is then short.
        let k = n % self.order_indices()[i];
        (0..k).fold(0, |acc, _| self.op_index(acc, i))
    }

    /// Element orders indexed like the roster.
    pub(crate) fn order_indices(&self) -> &[u64] {
        self.data.orders.get_or_init(|| {
            (0..self.order())
                .map(|i| {
                    let mut k = 1;
                    let mut acc = i;
                    while acc != 0 {
                        acc = self.op_index(acc, i);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn op(&self, x: &Element, y: &Element) -> Result<Element> {
        let (i, j) = (self.ind(x)?, self.ind(y)?);
        Ok(self.elt(self.op_index(i, j)).clone())
    }

    pub fn inv(&self, x: &Element) -> Result<Element> {
        Ok(self.elt(self.inv_index(self.ind(x)?)).clone())
    }

    /// `x` composed with itself `n` times; `power(x, 0)` is the identity.
    pub fn power(&self, x: &Element, n: u64) -> Result<Element> {
        Ok(self.elt(self.power_index(self.ind(x)?, n)).clone())
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn zpower(&self, x: &Element, k: i64) -> Result<Element> {
        let i = self.ind(x)?;
        let base = if k < 0 { self.inv_index(i) } else { i };
        Ok(self.elt(self.power_index(base, k.unsigned_abs())).clone())
    }

    pub fn ord(&self, x: &Element) -> Result<u64> {
        Ok(self.order_indices()[self.ind(x)?])
    }

    /// `[e, a, a^2, ..., a^(ord a - 1)]`.
    pub fn powers(&self, a: &Element) -> Result<Vec<Element>> {
        let i = self.ind(a)?;
        Ok(self.power_indices(i).into_iter().map(|k| self.elt(k).clone()).collect())
    }

    pub(crate) fn power_indices(&self, i: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut acc = i;
        while acc != 0 {
            out.push(acc);
            acc = self.op_index(acc, i);
        }
        out
    }

    /// First element in roster order whose order is exactly `n`.
    pub fn elt_of_ord(&self, n: u64) -> Option<&Element> {
        self.order_indices().iter().position(|&k| k == n).map(|i| self.elt(i))
    }

    /// Largest element order; scans `n = |g|` downward as the construction does.
    pub fn max_ord(&self) -> u64 {
        let mut n = self.order() as u64;
        while n > 0 {
            if self.elt_of_ord(n).is_some() {
                return n;
            }
            n -= 1;
        }
        1
    }

    pub fn is_cyclic(&self) -> bool {
        self.max_ord() == self.order() as u64
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.op_index(i, j) == self.op_index(j, i)))
    }

    /// Inserts `x` into `l`, a duplicate-free list ordered by roster index.
    pub fn ord_insert(&self, x: &Element, l: &[Element]) -> Result<Vec<Element>> {
        let key = self.ind(x)?;
        let mut out = l.to_vec();
        let pos = l.iter().position(|y| match self.index_of(y) {
            Some(j) => j >= key,
            None => true,
        });
        match pos {
            Some(p) if l[p] == *x => {}
            Some(p) => out.insert(p, x.clone()),
            None => out.push(x.clone()),
        }
        Ok(out)
    }

    /// True iff `l` is strictly increasing in roster index.
    pub fn ordp(&self, l: &[Element]) -> bool {
        let mut last = None;
        for x in l {
            match self.index_of(x) {
                Some(i) if last.is_none_or(|j| j < i) => last = Some(i),
                _ => return false,
            }
        }
        true
    }
}

pub(crate) fn insert_index(sorted: &mut Vec<usize>, i: usize) {
    if let Err(pos) = sorted.binary_search(&i) {
        sorted.insert(pos, i);
    }
}

/// Z_n: roster `0..n`, addition mod `n`.
pub fn cyclic_group(n: u64) -> Result<FiniteGroup> {
    if n == 0 {
        return domain("cyclic group order must be at least 1");
    }
    if n as usize > MAX_ORDER {
        return Err(Error::TooLarge { order: n, limit: MAX_ORDER as u64 });
    }
    let n = n as usize;
    let roster = (0..n as u64).map(Element::Int).collect();
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    Ok(FiniteGroup::from_trusted(roster, table))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|v| if v >= first { v + 1 } else { v }));
            out.push(p);
        }
    }
    out
}

/// S_n on `{0, .., n-1}`, `n <= 5`. Elements are image tuples `(p(0) .. p(n-1))`
/// in lexicographic order, so the identity comes first; the product is
/// `(x * y)(i) = x(y(i))`.
pub fn symmetric_group(n: u64) -> Result<FiniteGroup> {
    if !(1..=5).contains(&n) {
        return domain(format!("symmetric group degree must be in 1..=5, got {n}"));
    }
    let perms = permutations(n as usize);
    let lookup: HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = Vec::with_capacity(perms.len() * perms.len());
    for x in &perms {
        for y in &perms {
            let xy: Vec<usize> = y.iter().map(|&i| x[i]).collect();
            table.push(lookup[xy.as_slice()]);
        }
    }
    let roster = perms.iter().map(|p| Element::ints(p.iter().map(|&v| v as u64))).collect();
    Ok(FiniteGroup::from_trusted(roster, table))
}
