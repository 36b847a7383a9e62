//! Decomposition of a finite abelian p-group into cyclic subgroups.
//!
//! For a non-cyclic abelian p-group `g` and an element `a` of maximal order,
//! [`g2`] builds a complement of `<a>`: pick an order-p coset `x<a>` of the
//! quotient, correct `x` by a power of `a` so that `y^p = e`, factor out
//! `c = <y>` and recurse in `g / c` until the quotient is cyclic, lifting the
//! result back through `c` on the way out. Iterating on the complement gives
//! [`cyclic_p_subgroup_list`].

use std::fmt;

use crate::element::Element;
use crate::error::{domain, Error, Result};
use crate::group::FiniteGroup;
use crate::numtheory::{is_prime, least_prime_divisor, powerp};
use crate::products::{internal_direct_product_p, product_orders};
use crate::subgroup::{cyclic, group_intersection, lcoset, lift_unchecked, quotient, subgroupp, Subgroup};

pub fn p_groupp(g: &FiniteGroup, p: u64) -> bool {
    is_prime(p) && powerp(g.order() as u64, p).unwrap_or(false)
}

pub fn max_ord(g: &FiniteGroup) -> u64 {
    g.max_ord()
}

pub fn cyclicp(g: &FiniteGroup) -> bool {
    g.is_cyclic()
}

/// The conjunct of the split hypothesis that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitHypothesis {
    NotPGroup,
    NotAbelian,
    Cyclic,
    NotMember,
    NotMaximalOrder,
}

impl fmt::Display for SplitHypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitHypothesis::NotPGroup => "group is not a p-group for the given p",
            SplitHypothesis::NotAbelian => "group is not abelian",
            SplitHypothesis::Cyclic => "group is already cyclic",
            SplitHypothesis::NotMember => "generator is not a group element",
            SplitHypothesis::NotMaximalOrder => "generator does not have maximal order",
        })
    }
}

/// Checks that `g` is a non-cyclic abelian p-group and `a` has maximal order.
pub fn phyp(a: &Element, p: u64, g: &FiniteGroup) -> Result<(), SplitHypothesis> {
    if !p_groupp(g, p) {
        return Err(SplitHypothesis::NotPGroup);
    }
    if !g.is_abelian() {
        return Err(SplitHypothesis::NotAbelian);
    }
    if g.is_cyclic() {
        return Err(SplitHypothesis::Cyclic);
    }
    match g.ord(a) {
        Err(_) => Err(SplitHypothesis::NotMember),
        Ok(k) if k != g.max_ord() => Err(SplitHypothesis::NotMaximalOrder),
        Ok(_) => Ok(()),
    }
}

fn require_phyp(a: &Element, p: u64, g: &FiniteGroup) -> Result<()> {
    phyp(a, p, g).map_err(|h| Error::Domain(format!("split hypothesis fails: {h}")))
}

/// The intermediate values of one splitting step.
#[derive(Debug, Clone)]
pub struct SplitData {
    pub a: Element,
    /// First member of the first order-p coset of `g / <a>`.
    pub x: Element,
    /// Position of `x^p` among the powers of `a`; divisible by `p`.
    pub i: u64,
    pub j: u64,
    /// `a^(-j) x`, of order `p` and outside `<a>`.
    pub y: Element,
    pub c: Subgroup,
}

pub fn g1(a: &Element, g: &FiniteGroup) -> Result<Subgroup> {
    cyclic(a, g)
}

pub fn split_witness(a: &Element, p: u64, g: &FiniteGroup) -> Result<SplitData> {
    require_phyp(a, p, g)?;
    let g1 = cyclic(a, g)?;
    let q = quotient(g, &g1)?;
    let coset = q
        .elt_of_ord(p)
        .ok_or_else(|| Error::Internal(format!("quotient of order {} has no element of order {p}", q.order())))?;
    let x = coset.as_seq().and_then(|c| c.first()).cloned().ok_or_else(|| Error::Internal("empty coset".into()))?;
    let xp = g.power(&x, p)?;
    let i = g1
        .elements()
        .iter()
        .position(|e| *e == xp)
        .ok_or_else(|| Error::Internal(format!("{xp} is not a power of {a}")))? as u64;
    if i % p != 0 {
        return Err(Error::Internal(format!("power index {i} is not divisible by {p}")));
    }
    let j = i / p;
    let y = g.op(&g.power(&g.inv(a)?, j)?, &x)?;
    let c = cyclic(&y, g)?;
    if c.order() as u64 != p {
        return Err(Error::Internal(format!("<{y}> has order {} instead of {p}", c.order())));
    }
    Ok(SplitData { a: a.clone(), x, i, j, y, c })
}

/// A complement of `<a>` in `g`.
pub fn g2(a: &Element, p: u64, g: &FiniteGroup) -> Result<Subgroup> {
    let split = split_witness(a, p, g)?;
    let g_star = quotient(g, &split.c)?;
    if g_star.is_cyclic() {
        return Ok(split.c);
    }
    let a_star = Element::Seq(lcoset(a, &split.c, g)?);
    let inner = g2(&a_star, p, &g_star)?;
    lift_unchecked(&inner, g)
}

/// The first conjunct of the complement conditions that fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesiredPropertyFailure {
    G1NotSubgroup,
    G1NotCyclic,
    G2NotSubgroup,
    OrderProduct { g1: usize, g2: usize, g: usize },
    Intersection { common: usize },
}

impl fmt::Display for DesiredPropertyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesiredPropertyFailure::G1NotSubgroup => f.write_str("g1 is not a subgroup"),
            DesiredPropertyFailure::G1NotCyclic => f.write_str("g1 is not cyclic"),
            DesiredPropertyFailure::G2NotSubgroup => f.write_str("g2 is not a subgroup"),
            DesiredPropertyFailure::OrderProduct { g1, g2, g } => write!(f, "{g1} * {g2} != {g}"),
            DesiredPropertyFailure::Intersection { common } => write!(f, "g1 and g2 share {common} elements"),
        }
    }
}

/// `g1` cyclic, both subgroups of `g`, `|g1||g2| = |g|` and `g1 ∩ g2` trivial.
pub fn desired_properties_check(
    g: &FiniteGroup,
    g1: &FiniteGroup,
    g2: &FiniteGroup,
) -> Result<(), DesiredPropertyFailure> {
    if !subgroupp(g1, g) {
        return Err(DesiredPropertyFailure::G1NotSubgroup);
    }
    if !g1.is_cyclic() {
        return Err(DesiredPropertyFailure::G1NotCyclic);
    }
    if !subgroupp(g2, g) {
        return Err(DesiredPropertyFailure::G2NotSubgroup);
    }
    if g1.order() * g2.order() != g.order() {
        return Err(DesiredPropertyFailure::OrderProduct { g1: g1.order(), g2: g2.order(), g: g.order() });
    }
    let h1 = Subgroup::of(g1, g).expect("checked");
    let h2 = Subgroup::of(g2, g).expect("checked");
    let common = group_intersection(&h1, &h2, g).expect("same parent");
    if !common.is_trivial() {
        return Err(DesiredPropertyFailure::Intersection { common: common.order() });
    }
    Ok(())
}

/// Cyclic, non-trivial, and a p-group for the least prime dividing its order.
pub fn cyclic_p_group_p(g: &FiniteGroup) -> bool {
    g.order() > 1
        && g.is_cyclic()
        && least_prime_divisor(g.order() as u64).is_ok_and(|p| p_groupp(g, p))
}

pub fn cyclic_p_group_list_p<'a>(l: impl IntoIterator<Item = &'a FiniteGroup>) -> bool {
    l.into_iter().all(cyclic_p_group_p)
}

/// Cyclic p-subgroups of a p-group whose internal direct product is the group.
#[derive(Debug, Clone)]
pub struct PFactorization {
    pub parent: FiniteGroup,
    pub factors: Vec<Subgroup>,
}

impl PFactorization {
    pub fn orders(&self) -> Vec<u64> {
        self.factors.iter().map(|h| h.order() as u64).collect()
    }
}

pub fn cyclic_p_subgroup_list(p: u64, g: &FiniteGroup) -> Result<PFactorization> {
    if !p_groupp(g, p) {
        return domain(format!("group of order {} is not a {p}-group", g.order()));
    }
    if !g.is_abelian() {
        return domain("cyclic p-subgroup list needs an abelian group");
    }
    let factors = p_factors(p, g)?;
    Ok(PFactorization { parent: g.clone(), factors })
}

fn p_factors(p: u64, g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    if g.is_cyclic() {
        return Ok(vec![Subgroup::whole(g)]);
    }
    let a = g.elt_of_ord(g.max_ord()).expect("max-ord is attained").clone();
    let complement = g2(&a, p, g)?;
    let mut out = vec![cyclic(&a, g)?];
    for h in p_factors(p, complement.group())? {
        out.push(h.within(g)?);
    }
    Ok(out)
}

/// Non-empty, cyclic p-groups, an internal direct product, orders multiply to `|g|`.
pub fn p_group_factorization_check(g: &FiniteGroup, factors: &[Subgroup]) -> Result<bool> {
    let groups: Vec<&FiniteGroup> = factors.iter().map(Subgroup::group).collect();
    Ok(!factors.is_empty()
        && cyclic_p_group_list_p(groups.iter().copied())
        && internal_direct_product_p(factors, g)?
        && product_orders(groups)? == g.order() as u64)
}
