//! The built-in group corpus and the self-test sweep run by `fingroup selftest`.

use crate::abelian::abelian_factorization;
use crate::builder::Builder;
use crate::error::Result;
use crate::group::{symmetric_group, FiniteGroup};
use crate::maps::{classify, GroupMap};
use crate::numtheory::{is_prime, prime_divisors};
use crate::products::{direct_product, group_tuples, product_orders};
use crate::subgroup::{cyclic, lcosets, quotient};
use crate::uniqueness::{group_power_dp_check, permutationp, verify_unique_factorization};

fn extend_lists(max: u64, min_factor: u64, prefix: &mut Vec<u64>, product: u64, keep: &dyn Fn(u64) -> bool, out: &mut Vec<Vec<u64>>) {
    if !prefix.is_empty() {
        out.push(prefix.clone());
    }
    let mut f = min_factor;
    while product * f <= max {
        if keep(f) {
            prefix.push(f);
            extend_lists(max, f, prefix, product * f, keep, out);
            prefix.pop();
        }
        f += 1;
    }
}

/// Non-decreasing lists of cyclic orders (each at least 2) whose product is at most `max`.
pub fn cyclic_order_lists(max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    extend_lists(max, 2, &mut Vec::new(), 1, &|_| true, &mut out);
    out
}

/// As [`cyclic_order_lists`], restricted to prime-power orders.
pub fn prime_power_order_lists(max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    extend_lists(max, 2, &mut Vec::new(), 1, &|f| prime_divisors(f).len() == 1, &mut out);
    out
}

fn builder_for(orders: &[u64]) -> Builder {
    match orders {
        [n] => Builder::Cyclic(*n),
        _ => Builder::Product(orders.iter().map(|&n| Builder::Cyclic(n)).collect()),
    }
}

/// Every `Z_n` with `n <= max` and every direct product of at least two
/// cyclic groups with order at most `max`.
pub fn abelian_corpus(max: u64) -> Result<Vec<(Builder, FiniteGroup)>> {
    let mut out = vec![(Builder::Cyclic(1), Builder::Cyclic(1).build()?)];
    for orders in cyclic_order_lists(max) {
        let b = builder_for(&orders);
        let g = b.build()?;
        out.push((b, g));
    }
    Ok(out)
}

/// The abelian corpus plus `S_n` for `n <= 4`.
pub fn corpus(max: u64) -> Result<Vec<(Builder, FiniteGroup)>> {
    let mut out = abelian_corpus(max)?;
    for n in 1..=4 {
        let g = symmetric_group(n)?;
        if g.order() as u64 <= max {
            out.push((Builder::Symmetric(n), g));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn run_check(name: &'static str, f: impl FnOnce() -> Result<(usize, Option<String>)>) -> CheckResult {
    match f() {
        Ok((cases, failure)) => CheckResult { name, cases, failure },
        Err(e) => CheckResult { name, cases: 0, failure: Some(format!("error: {e}")) },
    }
}

fn check_axioms(groups: &[(Builder, FiniteGroup)]) -> Result<(usize, Option<String>)> {
    for (b, g) in groups {
        if let Err(e) = FiniteGroup::new(g.elements().to_vec(), g.table()) {
            return Ok((groups.len(), Some(format!("{b}: {e}"))));
        }
    }
    Ok((groups.len(), None))
}

fn check_cosets(groups: &[(Builder, FiniteGroup)]) -> Result<(usize, Option<String>)> {
    let mut cases = 0;
    for (b, g) in groups {
        for x in g.elements() {
            let h = cyclic(x, g)?;
            cases += 1;
            let cosets = lcosets(&h, g)?;
            let covered: usize = cosets.iter().map(Vec::len).sum();
            if g.order() % h.order() != 0 || covered != g.order() || cosets.iter().any(|c| c.len() != h.order()) {
                return Ok((cases, Some(format!("{b}: cosets of <{x}> do not partition the group"))));
            }
            if g.is_abelian() && quotient(g, &h)?.order() * h.order() != g.order() {
                return Ok((cases, Some(format!("{b}: quotient by <{x}> has the wrong order"))));
            }
        }
    }
    Ok((cases, None))
}

fn check_cauchy(groups: &[(Builder, FiniteGroup)]) -> Result<(usize, Option<String>)> {
    let mut cases = 0;
    for (b, g) in groups {
        for p in prime_divisors(g.order() as u64) {
            cases += 1;
            match g.elt_of_ord(p) {
                Some(x) if g.ord(x)? == p => {}
                _ => return Ok((cases, Some(format!("{b}: no element of order {p}")))),
            }
        }
    }
    Ok((cases, None))
}

fn check_factorizations(groups: &[(Builder, FiniteGroup)]) -> Result<(usize, Option<String>)> {
    let mut cases = 0;
    for (b, g) in groups.iter().filter(|(_, g)| g.is_abelian() && g.order() > 1) {
        cases += 1;
        let f = abelian_factorization(g)?;
        let dp = f.direct_product()?;
        let ok = product_orders(&f.factor_groups())? == g.order() as u64
            && classify(&f.iso, &dp, g)?.isomorphism;
        if !ok {
            return Ok((cases, Some(format!("{b}: factorization does not verify"))));
        }
    }
    Ok((cases, None))
}

fn check_group_power_dp(max: u64) -> Result<(usize, Option<String>)> {
    let mut cases = 0;
    for orders in cyclic_order_lists(max) {
        let l = builder_for(&orders).factors()?;
        for n in [2, 3] {
            cases += 1;
            if !group_power_dp_check(n, &l)? {
                return Ok((cases, Some(format!("{orders:?}, n = {n}"))));
            }
        }
    }
    Ok((cases, None))
}

fn check_swap_uniqueness(max: u64) -> Result<(usize, Option<String>)> {
    let mut cases = 0;
    for orders in prime_power_order_lists(max).into_iter().filter(|o| o.len() == 2) {
        let l = builder_for(&orders).factors()?;
        let m = vec![l[1].clone(), l[0].clone()];
        let swap = GroupMap::from_fn(&group_tuples(&l)?, |x| {
            let items = x.as_seq().expect("tuple");
            crate::Element::seq([items[1].clone(), items[0].clone()])
        })?;
        cases += 1;
        let report = verify_unique_factorization(&l, &m, &swap)?;
        if !report.permutation || !permutationp(&report.orders_l, &report.orders_m) {
            return Ok((cases, Some(format!("{orders:?} vs its swap"))));
        }
    }
    Ok((cases, None))
}

/// Runs the invariant sweeps over groups of order at most 32.
pub fn selftest() -> Vec<CheckResult> {
    const MAX: u64 = 32;
    let groups = match corpus(MAX) {
        Ok(g) => g,
        Err(e) => return vec![CheckResult { name: "corpus", cases: 0, failure: Some(e.to_string()) }],
    };
    vec![
        run_check("axioms", || check_axioms(&groups)),
        run_check("cosets", || check_cosets(&groups)),
        run_check("element-of-order", || check_cauchy(&groups)),
        run_check("abelian-factorization", || check_factorizations(&groups)),
        run_check("group-power-dp", || check_group_power_dp(24)),
        run_check("uniqueness", || check_swap_uniqueness(MAX)),
        run_check("direct-product-order", || {
            let mut cases = 0;
            for orders in cyclic_order_lists(MAX) {
                let l = builder_for(&orders).factors()?;
                cases += 1;
                if direct_product(&l)?.order() as u64 != product_orders(&l)? {
                    return Ok((cases, Some(format!("{orders:?}"))));
                }
            }
            Ok((cases, None))
        }),
    ]
}

/// Prime-power check used by callers that filter order lists.
pub fn is_prime_power(n: u64) -> bool {
    let ps = prime_divisors(n);
    ps.len() == 1 && is_prime(ps[0])
}
