//! Oracles shared by the integration suites. Everything here works on
//! elements through `FiniteGroup::op` and plain collections, independent of
//! the subgroup, map and factorization code under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use fingroup::{Element, FiniteGroup, Subgroup};

/// Closure of a generating set under the group operation.
pub fn closure(g: &FiniteGroup, gens: &[Element]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([0]);
    let mut frontier: Vec<Element> = vec![g.identity().clone()];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = g.op(&x, s).unwrap();
            if set.insert(g.index_of(&y).unwrap()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Every subgroup of `g`, each as a parent-ordered roster.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut queue = vec![BTreeSet::from([0usize])];
    seen.insert(queue[0].clone());
    let mut i = 0;
    while i < queue.len() {
        let current = queue[i].clone();
        i += 1;
        for x in 0..g.order() {
            if current.contains(&x) {
                continue;
            }
            let mut gens: Vec<Element> = current.iter().map(|&k| g.elements()[k].clone()).collect();
            gens.push(g.elements()[x].clone());
            let next = closure(g, &gens);
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    queue
        .into_iter()
        .map(|s| Subgroup::from_elements(g, s.into_iter().map(|k| g.elements()[k].clone()).collect()).unwrap())
        .collect()
}

/// Order of `x` by repeated multiplication.
pub fn naive_ord(g: &FiniteGroup, x: &Element) -> u64 {
    let mut acc = x.clone();
    let mut k = 1;
    while acc != *g.identity() {
        acc = g.op(&acc, x).unwrap();
        k += 1;
    }
    k
}

/// Pairs `(x, f(x))` form a bijection `g -> h` preserving the operation.
pub fn is_isomorphism_pairs(pairs: &[(Element, Element)], g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if pairs.len() != g.order() || g.order() != h.order() {
        return false;
    }
    let lookup: std::collections::HashMap<&Element, &Element> = pairs.iter().map(|(x, y)| (x, y)).collect();
    if lookup.len() != g.order() || g.elements().iter().any(|x| !lookup.contains_key(x)) {
        return false;
    }
    let images: HashSet<&Element> = lookup.values().copied().collect();
    if images.len() != h.order() || images.iter().any(|y| !h.contains(y)) {
        return false;
    }
    g.elements().iter().all(|x| {
        g.elements().iter().all(|y| {
            let xy = g.op(x, y).unwrap();
            *lookup[&xy] == h.op(lookup[x], lookup[y]).unwrap()
        })
    })
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(k);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Every bijection `g -> h`, identity-fixing or not, as image-index vectors.
pub fn all_bijections(n: usize, fix_identity: bool) -> Vec<Vec<usize>> {
    if fix_identity {
        let rest: Vec<usize> = (1..n).collect();
        permutations_of(&rest).into_iter().map(|mut p| { p.insert(0, 0); p }).collect()
    } else {
        permutations_of(&(0..n).collect::<Vec<_>>())
    }
}

fn pairs_from_indices(g: &FiniteGroup, h: &FiniteGroup, images: &[usize]) -> Vec<(Element, Element)> {
    g.elements().iter().cloned().zip(images.iter().map(|&k| h.elements()[k].clone())).collect()
}

/// Exhaustive search over identity-fixing bijections.
pub fn brute_force_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<(Element, Element)>> {
    if g.order() != h.order() {
        return None;
    }
    all_bijections(g.order(), true)
        .into_iter()
        .map(|p| pairs_from_indices(g, h, &p))
        .find(|pairs| is_isomorphism_pairs(pairs, g, h))
}

/// Generator-image search for `dp(orders) -> h` with `h` abelian: send the
/// unit tuples to elements of the same orders, pruning as soon as the images
/// fail to generate a subgroup of the expected size.
pub fn generator_isomorphism(l: &[FiniteGroup], g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<(Element, Element)>> {
    if g.order() != h.order() {
        return None;
    }
    let n: Vec<u64> = l.iter().map(|f| f.order() as u64).collect();
    let mut chosen: Vec<Element> = Vec::new();
    fn power(h: &FiniteGroup, x: &Element, k: u64) -> Element {
        (0..k).fold(h.identity().clone(), |acc, _| h.op(&acc, x).unwrap())
    }
    fn dfs(
        h: &FiniteGroup,
        n: &[u64],
        chosen: &mut Vec<Element>,
        span: Vec<Element>,
    ) -> Option<Vec<Element>> {
        if chosen.len() == n.len() {
            return Some(chosen.clone());
        }
        let want = n[chosen.len()];
        for y in h.elements() {
            if naive_ord(h, y) != want {
                continue;
            }
            let mut next = Vec::with_capacity(span.len() * want as usize);
            let mut seen = HashSet::new();
            let mut ok = true;
            'outer: for s in &span {
                for k in 0..want {
                    let v = h.op(s, &power(h, y, k)).unwrap();
                    if !seen.insert(v.clone()) {
                        ok = false;
                        break 'outer;
                    }
                    next.push(v);
                }
            }
            if !ok {
                continue;
            }
            chosen.push(y.clone());
            if let Some(found) = dfs(h, n, chosen, next) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    let images = dfs(h, &n, &mut chosen, vec![h.identity().clone()])?;
    let pairs: Vec<(Element, Element)> = g
        .elements()
        .iter()
        .map(|t| {
            let comps = t.as_seq().unwrap();
            let value = comps.iter().zip(&images).fold(h.identity().clone(), |acc, (c, y)| {
                h.op(&acc, &power(h, y, c.as_int().unwrap())).unwrap()
            });
            (t.clone(), value)
        })
        .collect();
    is_isomorphism_pairs(&pairs, g, h).then_some(pairs)
}

/// Integer partitions of `n`, parts non-increasing.
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(n: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Ordered compositions of `n`.
pub fn compositions(n: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| compositions(n - first).into_iter().map(move |mut rest| { rest.insert(0, first); rest }))
        .collect()
}

/// Distinct orderings of a multiset.
pub fn arrangements(items: &[u64]) -> Vec<Vec<u64>> {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut out = BTreeSet::new();
    for p in permutations_of(&(0..sorted.len()).collect::<Vec<_>>()) {
        out.insert(p.iter().map(|&k| sorted[k]).collect::<Vec<_>>());
    }
    out.into_iter().collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).all(|d| n % d != 0)
}

pub fn prime_power_base(n: u64) -> Option<u64> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    (m == 1).then_some(p)
}

pub fn cyclic_list(orders: &[u64]) -> Vec<FiniteGroup> {
    orders.iter().map(|&n| fingroup::cyclic_group(n).unwrap()).collect()
}
