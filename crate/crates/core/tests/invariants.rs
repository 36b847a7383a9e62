mod common;

use std::collections::BTreeSet;

use common::*;
use fingroup::abelian::{bezout_decompose, rel_prime_split};
use fingroup::corpus::{abelian_corpus, corpus, cyclic_order_lists};
use fingroup::maps::{compose_maps, image, inv_isomorphism, kernel};
use fingroup::numtheory::gcd;
use fingroup::pgroup::{desired_properties_check, g1, g2, split_witness};
use fingroup::products::{dp_index_compare, product_list_map};
use fingroup::subgroup::{cyclic, group_intersection, lcosets, lift, normalp, quotient};
use fingroup::uniqueness::{
    group_power, group_power_list, hits, orders, reduce_order, reduce_orders, verify_unique_factorization,
};
use fingroup::{
    abelian_factorization, classify, cyclic_group, direct_product, homomorphism_check, Element, FiniteGroup,
    GroupMap, Subgroup,
};
use proptest::prelude::*;

fn small_corpus() -> Vec<FiniteGroup> {
    corpus(24).unwrap().into_iter().map(|(_, g)| g).collect()
}

#[test]
fn lagrange_cosets_quotients_lifts() {
    for g in small_corpus() {
        for h in all_subgroups(&g) {
            assert_eq!(g.order() % h.order(), 0);
            let cosets = lcosets(&h, &g).unwrap();
            let mut seen = BTreeSet::new();
            for c in &cosets {
                assert_eq!(c.len(), h.order());
                for x in c {
                    assert!(seen.insert(x.clone()), "cosets overlap");
                }
            }
            assert_eq!(seen.len(), g.order());
            for x in g.elements() {
                let cx = cosets.iter().find(|c| c.contains(x)).unwrap();
                assert_eq!(&fingroup::subgroup::lcoset(x, &h, &g).unwrap(), cx);
            }
            if normalp(&h, &g).unwrap() {
                let q = quotient(&g, &h).unwrap();
                assert_eq!(q.order() * h.order(), g.order());
                for s in all_subgroups(&q) {
                    assert_eq!(lift(&s, &h, &g).unwrap().order(), s.order() * h.order());
                }
            }
        }
    }
}

#[test]
fn element_orders_divide_group_order() {
    for (_, g) in corpus(64).unwrap() {
        let n = g.order() as u64;
        for x in g.elements() {
            assert_eq!(n % g.ord(x).unwrap(), 0);
            assert_eq!(g.ord(x).unwrap(), naive_ord(&g, x));
            assert_eq!(&g.power(x, n).unwrap(), g.identity());
        }
    }
}

#[test]
fn intersections_are_parent_ordered() {
    for g in small_corpus() {
        let subs = all_subgroups(&g);
        for h in &subs {
            for k in &subs {
                let m = group_intersection(h, k, &g).unwrap();
                assert!(m.is_parent_ordered());
                let want: BTreeSet<&Element> = h.elements().iter().filter(|x| k.contains(x)).collect();
                assert_eq!(m.elements().iter().collect::<BTreeSet<_>>(), want);
            }
        }
    }
}

fn sign(p: &Element) -> u64 {
    let v: Vec<u64> = p.as_seq().unwrap().iter().map(|e| e.as_int().unwrap()).collect();
    let mut inversions = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            inversions += (v[i] > v[j]) as u64;
        }
    }
    inversions % 2
}

/// Homomorphisms drawn from the corpus: power maps, quotient projections and
/// the sign of a permutation.
fn corpus_homomorphisms() -> Vec<(GroupMap, FiniteGroup, FiniteGroup)> {
    let mut out = Vec::new();
    for (_, g) in corpus(24).unwrap() {
        if g.is_abelian() {
            for k in 0..4 {
                let m = GroupMap::from_fn(g.elements(), |x| g.power(x, k).unwrap()).unwrap();
                out.push((m, g.clone(), g.clone()));
            }
        } else {
            let z2 = cyclic_group(2).unwrap();
            let m = GroupMap::from_fn(g.elements(), |x| Element::Int(sign(x))).unwrap();
            out.push((m, g.clone(), z2));
        }
        for x in g.elements().iter().take(6) {
            let h = cyclic(x, &g).unwrap();
            if normalp(&h, &g).unwrap() {
                let q = quotient(&g, &h).unwrap();
                let m = GroupMap::from_fn(g.elements(), |y| {
                    q.elements().iter().find(|c| c.as_seq().unwrap().contains(y)).unwrap().clone()
                })
                .unwrap();
                out.push((m, g.clone(), q));
            }
        }
    }
    out
}

#[test]
fn homomorphism_laws() {
    let homs = corpus_homomorphisms();
    assert!(homs.len() > 100);
    for (m, g, h) in &homs {
        homomorphism_check(m, g, h).unwrap();
        for x in g.elements() {
            let mx = m.apply(x).unwrap();
            assert_eq!(m.apply(&g.inv(x).unwrap()).unwrap(), &h.inv(mx).unwrap());
            for k in 0..=g.order() as u64 {
                assert_eq!(m.apply(&g.power(x, k).unwrap()).unwrap(), &h.power(mx, k).unwrap());
            }
        }
        let im = image(m, g, h).unwrap();
        let ker = kernel(m, g, h).unwrap();
        assert!(im.is_parent_ordered());
        let positions: Vec<usize> = ker.elements().iter().map(|x| g.index_of(x).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(im.order() * ker.order(), g.order());
        let c = classify(m, g, h).unwrap();
        assert_eq!(c.epimorphism, im.order() == h.order());
        assert_eq!(c.monomorphism, ker.order() == 1);
    }
    for (m1, g, h) in &homs {
        if g != h {
            continue;
        }
        for (m2, _, h2) in homs.iter().filter(|(_, d, _)| d == h).take(3) {
            let c = compose_maps(m2, m1).unwrap();
            homomorphism_check(&c, g, h2).unwrap();
        }
    }
}

#[test]
fn automorphism_inverses() {
    for n in 1..=24u64 {
        let g = cyclic_group(n).unwrap();
        for k in (1..=n).filter(|&k| gcd(k, n) == 1) {
            let m = GroupMap::from_fn(g.elements(), |x| g.power(x, k).unwrap()).unwrap();
            assert!(classify(&m, &g, &g).unwrap().isomorphism);
            let inv = inv_isomorphism(&m, &g, &g).unwrap();
            homomorphism_check(&inv, &g, &g).unwrap();
            let id = GroupMap::identity(g.elements());
            assert_eq!(compose_maps(&inv, &m).unwrap(), id);
            assert_eq!(compose_maps(&m, &inv).unwrap(), id);
        }
    }
}

#[test]
fn direct_products_and_index_compare() {
    for orders in cyclic_order_lists(24) {
        for l in arrangements(&orders) {
            let gs = cyclic_list(&l);
            let dp = direct_product(&gs).unwrap();
            assert_eq!(dp.order() as u64, l.iter().product::<u64>());
            fingroup::validate_group(dp.elements().to_vec(), dp.table()).unwrap();
            for (i, x) in dp.elements().iter().enumerate() {
                for (j, y) in dp.elements().iter().enumerate() {
                    assert_eq!(dp_index_compare(&gs, x, y).unwrap(), i < j);
                }
            }
        }
    }
    let mixed = direct_product(&[cyclic_group(3).unwrap(), fingroup::symmetric_group(3).unwrap()]).unwrap();
    fingroup::validate_group(mixed.elements().to_vec(), mixed.table()).unwrap();
}

#[test]
fn factorization_product_map_is_isomorphism() {
    for (_, g) in abelian_corpus(64).unwrap() {
        let f = abelian_factorization(&g).unwrap();
        if f.factors.is_empty() {
            continue;
        }
        let m = product_list_map(&f.factors, &g).unwrap();
        assert!(classify(&m, &f.direct_product().unwrap(), &g).unwrap().isomorphism);
        for h in f.factor_groups() {
            assert!(h.is_cyclic());
            assert!(prime_power_base(h.order() as u64).is_some());
        }
    }
}

#[test]
fn pgroup_split_properties() {
    let mut cases = 0;
    for (b, g) in abelian_corpus(64).unwrap() {
        let Some(p) = prime_power_base(g.order() as u64) else { continue };
        if g.is_cyclic() {
            continue;
        }
        let a = g.elt_of_ord(g.max_ord()).unwrap().clone();
        let first = g1(&a, &g).unwrap();
        let second = g2(&a, p, &g).unwrap();
        assert_eq!(desired_properties_check(&g, first.group(), second.group()), Ok(()), "{b}");

        let s = split_witness(&a, p, &g).unwrap();
        assert_eq!(s.i % p, 0);
        assert_eq!(&g.power(&s.y, p).unwrap(), g.identity());
        assert_eq!(g.ord(&s.y).unwrap(), p);
        assert!(!first.contains(&s.y));
        assert_eq!(s.c.order() as u64, p);

        let g_star = quotient(&g, &s.c).unwrap();
        let a_star = Element::Seq(fingroup::subgroup::lcoset(&a, &s.c, &g).unwrap());
        assert_eq!(g_star.ord(&a_star).unwrap(), g.max_ord(), "{b}");
        assert_eq!(g_star.max_ord(), g.max_ord(), "{b}");

        let f = fingroup::pgroup::cyclic_p_subgroup_list(p, &g).unwrap();
        assert!(f.orders().windows(2).all(|w| w[0] >= w[1]), "{b}: {:?}", f.orders());
        cases += 1;
    }
    assert!(cases > 15);
}

#[test]
fn relatively_prime_splits() {
    for (b, g) in abelian_corpus(64).unwrap() {
        let n = g.order() as u64;
        for m in (1..=n).filter(|&m| n % m == 0 && gcd(m, n / m) == 1) {
            let k = n / m;
            let (hm, hk) = rel_prime_split(&g, m, k).unwrap();
            assert_eq!((hm.order() as u64, hk.order() as u64), (m, k), "{b}");
            assert!(hm.elements().iter().all(|x| m % naive_ord(&g, x) == 0));
            assert!(hk.elements().iter().all(|x| k % naive_ord(&g, x) == 0));
            for x in g.elements() {
                let (u, v) = bezout_decompose(&g, x, m, k).unwrap();
                assert!(hm.contains(&u) && hk.contains(&v), "{b}");
                assert_eq!(&g.op(&u, &v).unwrap(), x);
            }
        }
    }
}

#[test]
fn powers_of_cyclic_groups() {
    for n in 1..=64u64 {
        let g = cyclic_group(n).unwrap();
        for p in [2, 3, 5, 7, 11, 13] {
            let h = group_power(p, &g).unwrap();
            assert!(h.group().is_cyclic());
            assert_eq!(h.order() as u64, reduce_order(n, p));
        }
    }
}

#[test]
fn group_power_lists_reduce_orders() {
    for multiset in cyclic_order_lists(48) {
        let gs = cyclic_list(&multiset);
        for p in [2, 3, 5, 7] {
            let reduced = group_power_list(p, &gs).unwrap();
            assert_eq!(orders(&reduced), reduce_orders(&multiset, p));
        }
    }
}

fn swap_map(g: &FiniteGroup) -> GroupMap {
    GroupMap::from_fn(g.elements(), |t| {
        let mut v = t.as_seq().unwrap().to_vec();
        v.reverse();
        Element::Seq(v)
    })
    .unwrap()
}

#[test]
fn isomorphisms_restrict_to_powers() {
    for multiset in cyclic_order_lists(48) {
        if multiset.len() != 2 || multiset[0] == multiset[1] {
            continue;
        }
        let a = direct_product(&cyclic_list(&multiset)).unwrap();
        let rev: Vec<u64> = multiset.iter().rev().copied().collect();
        let b = direct_product(&cyclic_list(&rev)).unwrap();
        let m = swap_map(&a);
        assert!(classify(&m, &a, &b).unwrap().isomorphism);
        for n in [2, 3] {
            let pa = group_power(n, &a).unwrap();
            let pb = group_power(n, &b).unwrap();
            let r = m.restrict(pa.elements()).unwrap();
            homomorphism_check(&r, pa.group(), pb.group()).unwrap();
            assert!(classify(&r, pa.group(), pb.group()).unwrap().isomorphism);
        }
    }
}

/// Two presentations of the same abelian group, related by reversing tuples,
/// factor into permuted order lists, and the factorization isomorphisms
/// transport to an isomorphism the uniqueness check accepts.
#[test]
fn end_to_end_uniqueness() {
    let mut cases = 0;
    for multiset in cyclic_order_lists(48) {
        if multiset.len() < 2 {
            continue;
        }
        let rev: Vec<u64> = multiset.iter().rev().copied().collect();
        let a = direct_product(&cyclic_list(&multiset)).unwrap();
        let b = direct_product(&cyclic_list(&rev)).unwrap();
        let fa = abelian_factorization(&a).unwrap();
        let fb = abelian_factorization(&b).unwrap();
        let (la, lb) = (fa.factor_groups(), fb.factor_groups());
        let db = fb.direct_product().unwrap();
        let back = inv_isomorphism(&fb.iso, &db, &b).unwrap();
        let map = compose_maps(&back, &compose_maps(&swap_map(&a), &fa.iso).unwrap()).unwrap();
        let report = verify_unique_factorization(&la, &lb, &map).unwrap();
        assert!(report.permutation, "{multiset:?}");
        for level in &report.levels {
            assert_eq!(level.orders_l.iter().product::<u64>(), level.orders_m.iter().product::<u64>());
            for v in level.orders_l.iter().chain(&level.orders_m).filter(|&&v| v != level.prime) {
                assert_eq!(hits(v, &level.orders_l), hits(v, &level.orders_m), "{multiset:?} at p = {}", level.prime);
            }
        }
        cases += 1;
    }
    assert!(cases > 20);
}

fn prime_power_parts(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        let mut q = 1;
        while rest % p == 0 {
            rest /= p;
            q *= p;
        }
        if q > 1 {
            out.push(q);
        }
        p += 1;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factor_orders_match_prime_power_split(l in prop::collection::vec(2u64..=12, 1..=3)) {
        prop_assume!(l.iter().product::<u64>() <= 128);
        let g = direct_product(&cyclic_list(&l)).unwrap();
        let mut got = abelian_factorization(&g).unwrap().orders();
        got.sort_unstable();
        // Elementary divisors: each Z_n splits into its prime-power parts, and
        // a product of cyclic groups has the union of those parts.
        let mut want: Vec<u64> = l.iter().flat_map(|&n| prime_power_parts(n)).collect();
        want.sort_unstable();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn subgroups_from_random_generators(n in 1u64..=24, picks in prop::collection::vec(0usize..24, 1..=3)) {
        let g = cyclic_group(n).unwrap();
        let gens: Vec<Element> = picks.iter().map(|&i| g.elements()[i % g.order()].clone()).collect();
        let span = closure(&g, &gens);
        let roster: Vec<Element> = span.iter().map(|&i| g.elements()[i].clone()).collect();
        let h = Subgroup::from_elements(&g, roster).unwrap();
        prop_assert!(h.is_parent_ordered());
        prop_assert_eq!(n % h.order() as u64, 0);
    }
}
