//! Factorization of a finite abelian group into cyclic p-groups, together
//! with the explicit isomorphism from their direct product.

use std::fmt;

use crate::element::Element;
use crate::error::{domain, Error, Result};
use crate::group::FiniteGroup;
use crate::maps::{classify, GroupMap};
use crate::numtheory::{divides, gcd_bezout, least_prime_divisor, max_power_dividing};
use crate::pgroup::{cyclic_p_group_list_p, cyclic_p_subgroup_list};
use crate::products::{direct_product, product_list_map, product_orders};
use crate::subgroup::{group_intersection, Subgroup};

fn require_abelian(g: &FiniteGroup) -> Result<()> {
    if g.is_abelian() {
        Ok(())
    } else {
        domain("group is not abelian")
    }
}

/// Elements whose order divides `m`, in roster order.
pub fn subgroup_ord_dividing(m: u64, g: &FiniteGroup) -> Result<Subgroup> {
    require_abelian(g)?;
    if m == 0 {
        return domain("m must be positive");
    }
    let orders = g.order_indices();
    let mut idx = Vec::new();
    for (i, &k) in orders.iter().enumerate() {
        if divides(k, m)? {
            idx.push(i);
        }
    }
    Subgroup::from_indices(g, idx)
}

/// Splits `g` with `|g| = m n`, `gcd(m, n) = 1`, into the subgroups of orders
/// `m` and `n`.
pub fn rel_prime_split(g: &FiniteGroup, m: u64, n: u64) -> Result<(Subgroup, Subgroup)> {
    require_abelian(g)?;
    let (d, _, _) = gcd_bezout(m, n)?;
    if d != 1 {
        return domain(format!("{m} and {n} are not relatively prime"));
    }
    if m * n != g.order() as u64 {
        return domain(format!("{m} * {n} is not the group order {}", g.order()));
    }
    let h = subgroup_ord_dividing(m, g)?;
    let k = subgroup_ord_dividing(n, g)?;
    if h.order() as u64 != m || k.order() as u64 != n {
        return Err(Error::Internal(format!(
            "split of order {} gave orders {} and {}",
            g.order(),
            h.order(),
            k.order()
        )));
    }
    if !group_intersection(&h, &k, g)?.is_trivial() {
        return Err(Error::Internal("split subgroups intersect".into()));
    }
    Ok((h, k))
}

/// `x = x^(r n) x^(s m)` from `r n + s m = 1`; the first factor has order
/// dividing `m`, the second order dividing `n`.
pub fn bezout_decompose(g: &FiniteGroup, x: &Element, m: u64, n: u64) -> Result<(Element, Element)> {
    let (d, r, s) = gcd_bezout(m, n)?;
    if d != 1 {
        return domain(format!("{m} and {n} are not relatively prime"));
    }
    Ok((g.zpower(x, r * n as i64)?, g.zpower(x, s * m as i64)?))
}

/// Cyclic p-group factors of `g`: the p-blocks in increasing order of `p`,
/// each factored by [`cyclic_p_subgroup_list`].
pub fn cyclic_subgroup_list(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    require_abelian(g)?;
    let order = g.order() as u64;
    if order == 1 {
        return Ok(Vec::new());
    }
    let p = least_prime_divisor(order)?;
    let m = max_power_dividing(p, order)?;
    let n = order / m;
    let (h, k) = rel_prime_split(g, m, n)?;
    let mut out = Vec::new();
    for f in cyclic_p_subgroup_list(p, h.group())?.factors {
        out.push(f.within(g)?);
    }
    for f in cyclic_subgroup_list(k.group())? {
        out.push(f.within(g)?);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct AbelianFactorization {
    pub parent: FiniteGroup,
    pub factors: Vec<Subgroup>,
    /// Isomorphism from the direct product of the factors onto `parent`.
    /// For the trivial group this is the single pair `() -> e`.
    pub iso: GroupMap,
}

/// One cyclic factor as it appears in a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSummary {
    pub order: u64,
    pub prime: u64,
    pub generator: Element,
}

impl AbelianFactorization {
    pub fn orders(&self) -> Vec<u64> {
        self.factors.iter().map(|h| h.order() as u64).collect()
    }

    pub fn factor_groups(&self) -> Vec<FiniteGroup> {
        self.factors.iter().map(|h| h.group().clone()).collect()
    }

    /// The external direct product the isomorphism starts from.
    pub fn direct_product(&self) -> Result<FiniteGroup> {
        direct_product(&self.factor_groups())
    }

    pub fn summaries(&self) -> Vec<FactorSummary> {
        self.factors
            .iter()
            .map(|h| {
                let order = h.order() as u64;
                FactorSummary {
                    order,
                    prime: least_prime_divisor(order).unwrap_or(1),
                    generator: h.group().elt_of_ord(order).expect("factor is cyclic").clone(),
                }
            })
            .collect()
    }

    /// Line-oriented report: one `order=.. p=.. generator=..` line per factor.
    pub fn report(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AbelianFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.summaries() {
            writeln!(f, "order={} p={} generator={}", s.order, s.prime, s.generator)?;
        }
        writeln!(f, "iso verified: true")
    }
}

/// Factors `g` and verifies the resulting isomorphism before returning it.
pub fn abelian_factorization(g: &FiniteGroup) -> Result<AbelianFactorization> {
    let factors = cyclic_subgroup_list(g)?;
    if factors.is_empty() {
        let iso = GroupMap::from_pairs(vec![(Element::Seq(vec![]), g.identity().clone())])?;
        return Ok(AbelianFactorization { parent: g.clone(), factors, iso });
    }
    let groups: Vec<&FiniteGroup> = factors.iter().map(Subgroup::group).collect();
    if !cyclic_p_group_list_p(groups.iter().copied()) || product_orders(groups)? != g.order() as u64 {
        return Err(Error::Internal("factor list is not a cyclic p-group factorization".into()));
    }
    let iso = product_list_map(&factors, g)?;
    let factorization = AbelianFactorization { parent: g.clone(), factors, iso };
    let dp = factorization.direct_product()?;
    if !classify(&factorization.iso, &dp, g)?.isomorphism {
        return Err(Error::Internal("product map failed isomorphism verification".into()));
    }
    Ok(factorization)
}
