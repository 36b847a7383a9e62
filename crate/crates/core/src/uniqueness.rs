//! Uniqueness of cyclic p-group factorizations.
//!
//! Given cyclic p-group lists `l`, `m` and an isomorphism between their direct
//! products, [`verify_unique_factorization`] runs the inductive argument as a
//! recursion: raise everything to the `p`-th power for the first prime `p`,
//! drop factors that became trivial, transport the isomorphism to the reduced
//! products and recurse. The order multisets of `l` and `m` are then
//! permutations of each other.

use crate::element::Element;
use crate::error::{domain, Error, Result};
use crate::group::{insert_index, FiniteGroup};
use crate::maps::{classify, compose_maps, inv_isomorphism, GroupMap};
use crate::numtheory::{is_prime, least_prime_divisor};
use crate::pgroup::cyclic_p_group_list_p;
use crate::products::{direct_product, group_tuples};
use crate::subgroup::Subgroup;

pub fn orders(l: &[FiniteGroup]) -> Vec<u64> {
    l.iter().map(|g| g.order() as u64).collect()
}

pub fn hits<T: PartialEq>(x: &T, l: &[T]) -> usize {
    l.iter().filter(|y| *y == x).count()
}

/// Multiset equality by repeatedly removing the head of `l` from `m`.
pub fn permutationp<T: PartialEq + Clone>(l: &[T], m: &[T]) -> bool {
    let mut rest = m.to_vec();
    for x in l {
        match rest.iter().position(|y| y == x) {
            Some(pos) => {
                rest.remove(pos);
            }
            None => return false,
        }
    }
    rest.is_empty()
}

/// First value of `l ++ m` whose occurrence counts in `l` and `m` differ.
pub fn hits_diff<T: PartialEq + Clone>(l: &[T], m: &[T]) -> Option<T> {
    l.iter().chain(m).find(|x| hits(*x, l) != hits(*x, m)).cloned()
}

/// The subgroup of `n`-th powers, ordered by `g`.
pub fn group_power(n: u64, g: &FiniteGroup) -> Result<Subgroup> {
    if n == 0 {
        return domain("group power exponent must be positive");
    }
    if !g.is_abelian() {
        return domain("group power needs an abelian group");
    }
    let mut idx = Vec::new();
    for i in (0..g.order()).rev() {
        insert_index(&mut idx, g.power_index(i, n));
    }
    Subgroup::from_indices(g, idx)
}

pub fn reduce_order(n: u64, p: u64) -> u64 {
    if p != 0 && n % p == 0 {
        n / p
    } else {
        n
    }
}

pub fn reduce_orders(orders: &[u64], p: u64) -> Vec<u64> {
    orders.iter().map(|&n| reduce_order(n, p)).collect()
}

pub fn group_power_list(n: u64, l: &[FiniteGroup]) -> Result<Vec<FiniteGroup>> {
    l.iter().map(|g| group_power(n, g).map(Subgroup::into_group)).collect()
}

/// Whether the `n`-th power of the direct product is exactly (roster and
/// table) the direct product of the `n`-th powers.
pub fn group_power_dp_check(n: u64, l: &[FiniteGroup]) -> Result<bool> {
    let left = group_power(n, &direct_product(l)?)?.into_group();
    let right = direct_product(&group_power_list(n, l)?)?;
    Ok(left == right)
}

pub fn first_prime(l: &[FiniteGroup]) -> Result<u64> {
    match l.first() {
        Some(g) => least_prime_divisor(g.order() as u64),
        None => domain("first-prime of an empty list"),
    }
}

pub fn delete_trivial(l: &[FiniteGroup]) -> Vec<FiniteGroup> {
    l.iter().filter(|g| g.order() != 1).cloned().collect()
}

pub fn reduce_cyclic(l: &[FiniteGroup], p: u64) -> Result<Vec<FiniteGroup>> {
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    Ok(delete_trivial(&group_power_list(p, l)?))
}

fn delete_trivial_elt(x: &Element, l: &[FiniteGroup]) -> Element {
    let items = x.as_seq().expect("tuple");
    Element::seq(items.iter().zip(l).filter(|(_, g)| g.order() != 1).map(|(c, _)| c.clone()))
}

/// Drops the components of trivial factors: an isomorphism from
/// `direct_product(l)` onto `direct_product(delete_trivial(l))`.
pub fn delete_trivial_iso(l: &[FiniteGroup]) -> Result<GroupMap> {
    if delete_trivial(l).is_empty() {
        return domain("every factor is trivial");
    }
    GroupMap::from_fn(&group_tuples(l)?, |x| delete_trivial_elt(x, l))
}

/// Transports `map: dp(l) -> dp(m)` to an isomorphism between the reduced products.
pub fn reduce_cyclic_iso(map: &GroupMap, l: &[FiniteGroup], m: &[FiniteGroup], p: u64) -> Result<GroupMap> {
    let lp = group_power_list(p, l)?;
    let mp = group_power_list(p, m)?;
    let l_reduced = delete_trivial(&lp);
    if l_reduced.is_empty() || delete_trivial(&mp).is_empty() {
        return domain("both reduced lists must be non-empty");
    }
    let back = inv_isomorphism(&delete_trivial_iso(&lp)?, &direct_product(&lp)?, &direct_product(&l_reduced)?)?;
    compose_maps(&delete_trivial_iso(&mp)?, &compose_maps(map, &back)?)
}

/// One level of the uniqueness recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessLevel {
    pub prime: u64,
    pub orders_l: Vec<u64>,
    pub orders_m: Vec<u64>,
    pub reduced_l: Vec<u64>,
    pub reduced_m: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessReport {
    pub orders_l: Vec<u64>,
    pub orders_m: Vec<u64>,
    pub permutation: bool,
    /// First order whose multiplicities differ, when not a permutation.
    pub witness: Option<u64>,
    pub levels: Vec<UniquenessLevel>,
}

impl std::fmt::Display for UniquenessReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "orders L: {:?}", self.orders_l)?;
        writeln!(f, "orders M: {:?}", self.orders_m)?;
        writeln!(f, "permutation: {}", self.permutation)?;
        if let Some(w) = self.witness {
            writeln!(f, "witness: {w}")?;
        }
        Ok(())
    }
}

fn verdict(l: &[u64], m: &[u64]) -> (bool, Option<u64>) {
    let perm = permutationp(l, m);
    let witness = hits_diff(l, m);
    debug_assert_eq!(perm, witness.is_none());
    (perm, witness)
}

/// Checks that isomorphic products of cyclic p-groups have permuted order
/// lists, re-verifying the transported isomorphism at every level.
pub fn verify_unique_factorization(l: &[FiniteGroup], m: &[FiniteGroup], map: &GroupMap) -> Result<UniquenessReport> {
    if l.is_empty() || m.is_empty() {
        return domain("both group lists must be non-empty");
    }
    if !cyclic_p_group_list_p(l) || !cyclic_p_group_list_p(m) {
        return domain("both lists must consist of non-trivial cyclic p-groups");
    }
    if !classify(map, &direct_product(l)?, &direct_product(m)?)?.isomorphism {
        return domain("the supplied map is not an isomorphism between the direct products");
    }
    let mut levels = Vec::new();
    let (permutation, witness) = descend(l, m, map, &mut levels)?;
    Ok(UniquenessReport { orders_l: orders(l), orders_m: orders(m), permutation, witness, levels })
}

fn descend(
    l: &[FiniteGroup],
    m: &[FiniteGroup],
    map: &GroupMap,
    levels: &mut Vec<UniquenessLevel>,
) -> Result<(bool, Option<u64>)> {
    let depth = levels.len();
    if depth > 0 && !classify(map, &direct_product(l)?, &direct_product(m)?)?.isomorphism {
        return Err(Error::Internal(format!("transported map is not an isomorphism at level {depth}")));
    }
    let p = first_prime(l)?;
    let l_reduced = reduce_cyclic(l, p)?;
    let m_reduced = reduce_cyclic(m, p)?;
    levels.push(UniquenessLevel {
        prime: p,
        orders_l: orders(l),
        orders_m: orders(m),
        reduced_l: orders(&l_reduced),
        reduced_m: orders(&m_reduced),
    });
    let (ol, om) = (orders(l), orders(m));
    if l_reduced.is_empty() || m_reduced.is_empty() {
        // Every factor on the empty side has order p, so every non-identity
        // element of its product has order p; the same then holds on the other side.
        if !(l_reduced.is_empty() && m_reduced.is_empty()) {
            return Err(Error::Internal(format!(
                "only one side reduced to nothing at level {depth} (p = {p})"
            )));
        }
        if ol.iter().chain(&om).any(|&k| k != p) {
            return Err(Error::Internal(format!("base case with an order other than {p}")));
        }
        return Ok(verdict(&ol, &om));
    }
    let reduced_map = reduce_cyclic_iso(map, l, m, p)?;
    let (inner, _) = descend(&l_reduced, &m_reduced, &reduced_map, levels)?;
    let (perm, witness) = verdict(&ol, &om);
    if inner && !perm {
        return Err(Error::Internal(format!(
            "reduced orders are permuted but {ol:?} and {om:?} are not (level {depth})"
        )));
    }
    Ok((perm, witness))
}
