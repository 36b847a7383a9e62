//! Direct products of group lists, products of subgroups inside a common
//! parent, and internal direct products.

use std::cmp::Ordering;

use crate::element::Element;
use crate::error::{domain, Error, Result};
use crate::group::{insert_index, FiniteGroup, MAX_ORDER};
use crate::maps::GroupMap;
use crate::numtheory::checked_product;
use crate::subgroup::{check_parent, group_intersection, lcoset_indices, lcosets_indices, normalp, trivial_subgroup, Subgroup};

/// Product of the group orders; `1` for the empty list.
pub fn product_orders<'a>(l: impl IntoIterator<Item = &'a FiniteGroup>) -> Result<u64> {
    l.into_iter().try_fold(1, |acc, g| checked_product(acc, g.order() as u64))
}

fn order_guard(l: &[FiniteGroup]) -> Result<usize> {
    if l.is_empty() {
        return domain("a group list must be non-empty");
    }
    let n = product_orders(l)?;
    if n > MAX_ORDER as u64 {
        return Err(Error::TooLarge { order: n, limit: MAX_ORDER as u64 });
    }
    Ok(n as usize)
}

/// Component-index tuples in Cartesian order, first factor varying slowest.
fn index_tuples(l: &[FiniteGroup]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(l.len())];
    for g in l.iter().rev() {
        out = (0..g.order())
            .flat_map(|i| {
                out.iter().map(move |rest| {
                    let mut t = Vec::with_capacity(rest.len() + 1);
                    t.push(i);
                    t.extend_from_slice(rest);
                    t
                })
            })
            .collect();
    }
    out
}

fn tuple_element(l: &[FiniteGroup], t: &[usize]) -> Element {
    Element::Seq(l.iter().zip(t).map(|(g, &i)| g.elt(i).clone()).collect())
}

/// The Cartesian product of the rosters; its first entry is the tuple of identities.
pub fn group_tuples(l: &[FiniteGroup]) -> Result<Vec<Element>> {
    order_guard(l)?;
    Ok(index_tuples(l).iter().map(|t| tuple_element(l, t)).collect())
}

/// Direct product with componentwise operation. Elements are tuples even for
/// a single factor.
pub fn direct_product(l: &[FiniteGroup]) -> Result<FiniteGroup> {
    let n = order_guard(l)?;
    let tuples = index_tuples(l);
    // Position of a tuple: mixed-radix number, first component most significant.
    let position = |t: &[usize]| t.iter().zip(l).fold(0, |acc, (&i, g)| acc * g.order() + i);
    let mut table = Vec::with_capacity(n * n);
    let mut prod = vec![0; l.len()];
    for x in &tuples {
        for y in &tuples {
            for (k, g) in l.iter().enumerate() {
                prod[k] = g.op_index(x[k], y[k]);
            }
            table.push(position(&prod));
        }
    }
    let roster = tuples.iter().map(|t| tuple_element(l, t)).collect();
    Ok(FiniteGroup::from_trusted(roster, table))
}

fn components(x: &Element, l: &[FiniteGroup]) -> Result<Vec<usize>> {
    let items = x
        .as_seq()
        .filter(|items| items.len() == l.len())
        .ok_or_else(|| Error::NotMember { element: x.clone() })?;
    items.iter().zip(l).map(|(c, g)| g.ind(c)).collect::<Result<Vec<_>>>().map_err(|_| Error::NotMember { element: x.clone() })
}

/// `ind(x) < ind(y)` in `direct_product(l)`, decided componentwise: the first
/// components compare by index, ties recurse on the tails.
pub fn dp_index_compare(l: &[FiniteGroup], x: &Element, y: &Element) -> Result<bool> {
    let (cx, cy) = (components(x, l)?, components(y, l)?);
    Ok(cx.cmp(&cy) == Ordering::Less)
}

/// All products `a b` with `a` in `h`, `b` in `k`, ordered by `g`.
pub fn products(h: &Subgroup, k: &Subgroup, g: &FiniteGroup) -> Result<Vec<Element>> {
    Ok(product_indices(h, k, g)?.into_iter().map(|i| g.elt(i).clone()).collect())
}

fn product_indices(h: &Subgroup, k: &Subgroup, g: &FiniteGroup) -> Result<Vec<usize>> {
    check_parent(h, g)?;
    check_parent(k, g)?;
    let mut out = Vec::new();
    for &a in h.embedding() {
        for &b in k.embedding() {
            insert_index(&mut out, g.op_index(a, b));
        }
    }
    Ok(out)
}

/// `h k` as a subgroup; needs `h` or `k` normal in `g`.
pub fn product_group(h: &Subgroup, k: &Subgroup, g: &FiniteGroup) -> Result<Subgroup> {
    if !(normalp(h, g)? || normalp(k, g)?) {
        return domain("product-group needs one of the factors to be normal");
    }
    Subgroup::from_indices(g, product_indices(h, k, g)?)
}

/// One coset of `k` for each coset of `h ∩ k` in `h`. Their concatenation has
/// no repeats and has the same members as [`products`].
pub fn lift_cosets(h: &Subgroup, k: &Subgroup, g: &FiniteGroup) -> Result<Vec<Vec<Element>>> {
    let common = group_intersection(h, k, g)?.within(h.group())?;
    Ok(lcosets_indices(&common, h.group())
        .into_iter()
        .map(|c| {
            let rep = h.embedding()[c[0]];
            lcoset_indices(rep, k, g).into_iter().map(|i| g.elt(i).clone()).collect()
        })
        .collect())
}

/// Product of a list of normal subgroups; the trivial subgroup when empty.
pub fn product_group_list(l: &[Subgroup], g: &FiniteGroup) -> Result<Subgroup> {
    match l.split_first() {
        None => Ok(trivial_subgroup(g)),
        Some((first, rest)) => product_group(first, &product_group_list(rest, g)?, g),
    }
}

/// Every member normal in `g`, each meeting the product of the later members trivially.
pub fn internal_direct_product_p(l: &[Subgroup], g: &FiniteGroup) -> Result<bool> {
    let Some((first, rest)) = l.split_first() else {
        return Ok(true);
    };
    if !internal_direct_product_p(rest, g)? || !normalp(first, g)? {
        return Ok(false);
    }
    let tail = product_group_list(rest, g)?;
    Ok(group_intersection(first, &tail, g)?.is_trivial())
}

/// `l ++ m`, checked to be an internal direct product: both parts are, and
/// their products intersect trivially.
pub fn internal_direct_product_append(l: &[Subgroup], m: &[Subgroup], g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    if !internal_direct_product_p(l, g)? || !internal_direct_product_p(m, g)? {
        return domain("both lists must be internal direct products");
    }
    let meet = group_intersection(&product_group_list(l, g)?, &product_group_list(m, g)?, g)?;
    if !meet.is_trivial() {
        return domain(format!("the two products share {} elements", meet.order()));
    }
    let joined: Vec<Subgroup> = l.iter().chain(m).cloned().collect();
    if !internal_direct_product_p(&joined, g)? {
        return Err(Error::Internal("appended list is not an internal direct product".into()));
    }
    Ok(joined)
}

/// Left-to-right product of the tuple's components in `g`.
pub fn product_list_val(x: &[Element], g: &FiniteGroup) -> Result<Element> {
    match x.split_last() {
        None => Ok(g.identity().clone()),
        Some((last, init)) => init.iter().rev().try_fold(last.clone(), |acc, c| g.op(c, &acc)),
    }
}

/// The map `direct_product(l) -> g` sending a tuple to the product of its
/// components; an isomorphism when `l` is an internal direct product whose
/// orders multiply to `|g|`.
pub fn product_list_map(l: &[Subgroup], g: &FiniteGroup) -> Result<GroupMap> {
    for h in l {
        check_parent(h, g)?;
    }
    if !internal_direct_product_p(l, g)? {
        return domain("product-list-map needs an internal direct product");
    }
    let groups: Vec<FiniteGroup> = l.iter().map(|h| h.group().clone()).collect();
    if product_orders(&groups)? != g.order() as u64 {
        return domain("factor orders do not multiply to the group order");
    }
    let tuples = group_tuples(&groups)?;
    GroupMap::try_from_fn(&tuples, |t| product_list_val(t.as_seq().expect("tuple"), g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group};
    use crate::maps::classify;
    use crate::subgroup::cyclic;

    fn z(n: u64) -> FiniteGroup {
        cyclic_group(n).unwrap()
    }

    fn i(v: u64) -> Element {
        Element::Int(v)
    }

    #[test]
    fn tuples_in_recursion_order() {
        assert_eq!(group_tuples(&[z(2)]).unwrap(), vec![Element::ints([0]), Element::ints([1])]);
        assert_eq!(
            group_tuples(&[z(2), z(2)]).unwrap(),
            vec![Element::ints([0, 0]), Element::ints([0, 1]), Element::ints([1, 0]), Element::ints([1, 1])]
        );
        assert_eq!(group_tuples(&[z(2), z(3), z(4)]).unwrap().len(), 24);
        assert!(group_tuples(&[]).is_err());
    }

    #[test]
    fn direct_product_basics() {
        let t = direct_product(&[z(1)]).unwrap();
        assert_eq!(t.order(), 1);
        let g = direct_product(&[z(2), z(3)]).unwrap();
        assert_eq!(g.ord(&Element::ints([1, 1])).unwrap(), 6);
        assert!(g.is_abelian());
        let s = direct_product(&[z(2), symmetric_group(3).unwrap()]).unwrap();
        assert!(!s.is_abelian());
        assert!(matches!(direct_product(&[z(16), z(17)]), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn index_compare_matches_roster() {
        let l = [z(2), z(3)];
        let g = direct_product(&l).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                let by_index = g.index_of(x) < g.index_of(y);
                assert_eq!(dp_index_compare(&l, x, y).unwrap(), by_index);
            }
        }
        let l2 = [z(2), z(2)];
        assert!(dp_index_compare(&l2, &Element::ints([0, 1]), &Element::ints([1, 0])).unwrap());
        assert!(!dp_index_compare(&l2, &Element::ints([1, 0]), &Element::ints([1, 0])).unwrap());
        assert!(dp_index_compare(&l2, &Element::ints([2, 0]), &Element::ints([1, 0])).is_err());
    }

    #[test]
    fn products_of_subgroups() {
        let z6 = z(6);
        let t = trivial_subgroup(&z6);
        assert_eq!(products(&t, &t, &z6).unwrap(), vec![i(0)]);
        let h = cyclic(&i(3), &z6).unwrap();
        let k = cyclic(&i(2), &z6).unwrap();
        assert_eq!(products(&h, &k, &z6).unwrap().len(), 6);
        let z4 = z(4);
        let two = cyclic(&i(2), &z4).unwrap();
        assert_eq!(products(&two, &two, &z4).unwrap(), vec![i(0), i(2)]);
        assert_eq!(product_group(&h, &k, &z6).unwrap().group(), &z6);
        let reordered = product_group(&cyclic(&i(5), &z6).unwrap(), &t, &z6).unwrap();
        assert_eq!(reordered.elements(), &[i(0), i(1), i(2), i(3), i(4), i(5)]);
    }

    #[test]
    fn product_group_needs_normal_factor() {
        let s3 = symmetric_group(3).unwrap();
        let a = cyclic(&Element::ints([1, 0, 2]), &s3).unwrap();
        let b = cyclic(&Element::ints([0, 2, 1]), &s3).unwrap();
        assert!(product_group(&a, &b, &s3).is_err());
        assert_eq!(products(&a, &b, &s3).unwrap().len(), 4);
    }

    #[test]
    fn lift_cosets_examples() {
        let z6 = z(6);
        let t = trivial_subgroup(&z6);
        let k = cyclic(&i(3), &z6).unwrap();
        assert_eq!(lift_cosets(&t, &k, &z6).unwrap(), vec![vec![i(0), i(3)]]);
        let h = cyclic(&i(2), &z6).unwrap();
        let lc = lift_cosets(&h, &k, &z6).unwrap();
        assert_eq!(lc.len(), 3);
        assert!(lc.iter().all(|c| c.len() == 2));
        let z4 = z(4);
        let two = cyclic(&i(2), &z4).unwrap();
        assert_eq!(lift_cosets(&two, &two, &z4).unwrap(), vec![vec![i(0), i(2)]]);
    }

    #[test]
    fn internal_products() {
        let z6 = z(6);
        assert!(product_group_list(&[], &z6).unwrap().is_trivial());
        let l = [cyclic(&i(3), &z6).unwrap(), cyclic(&i(2), &z6).unwrap()];
        assert!(internal_direct_product_p(&l, &z6).unwrap());
        let z4 = z(4);
        let two = cyclic(&i(2), &z4).unwrap();
        assert!(!internal_direct_product_p(&[two.clone(), two.clone()], &z4).unwrap());
        assert!(internal_direct_product_append(&[two.clone()], &[two], &z4).is_err());
        let joined = internal_direct_product_append(&l[..1], &l[1..], &z6).unwrap();
        assert_eq!(joined.len(), 2);
        assert_eq!(product_orders(&[]).unwrap(), 1);
        assert_eq!(product_orders(&[z(4), z(3)]).unwrap(), 12);
    }

    #[test]
    fn non_normal_members_fail_the_predicate() {
        let s3 = symmetric_group(3).unwrap();
        let a = cyclic(&Element::ints([1, 0, 2]), &s3).unwrap();
        assert!(!internal_direct_product_p(&[a], &s3).unwrap());
    }

    #[test]
    fn product_list_map_is_isomorphism() {
        let z6 = z(6);
        let l = [cyclic(&i(3), &z6).unwrap(), cyclic(&i(2), &z6).unwrap()];
        let m = product_list_map(&l, &z6).unwrap();
        assert_eq!(m.apply(&Element::ints([3, 2])).unwrap(), &i(5));
        let dp = direct_product(&[l[0].group().clone(), l[1].group().clone()]).unwrap();
        assert!(classify(&m, &dp, &z6).unwrap().isomorphism);

        let single = product_list_map(&[Subgroup::whole(&z6)], &z6).unwrap();
        for x in z6.elements() {
            assert_eq!(single.apply(&Element::seq([x.clone()])).unwrap(), x);
        }

        let v = direct_product(&[z(2), z(2)]).unwrap();
        let l = [cyclic(&Element::ints([1, 0]), &v).unwrap(), cyclic(&Element::ints([0, 1]), &v).unwrap()];
        let m = product_list_map(&l, &v).unwrap();
        let dp = direct_product(&[l[0].group().clone(), l[1].group().clone()]).unwrap();
        assert!(classify(&m, &dp, &v).unwrap().isomorphism);
        assert!(product_list_map(&l[..1], &v).is_err());
    }
}
