//! The factor orders of isomorphic products of cyclic p-groups agree up to
//! order. Here Z2 x Z4 and Z4 x Z2 are compared through the swap map.

use fingroup::uniqueness::{reduce_cyclic, verify_unique_factorization};
use fingroup::{cyclic_group, direct_product, Element, GroupMap};

fn main() -> fingroup::Result<()> {
    let l = vec![cyclic_group(2)?, cyclic_group(4)?];
    let m = vec![cyclic_group(4)?, cyclic_group(2)?];
    let dp = direct_product(&l)?;
    let swap = GroupMap::from_fn(dp.elements(), |t| {
        let mut v = t.as_seq().unwrap().to_vec();
        v.reverse();
        Element::Seq(v)
    })?;

    let report = verify_unique_factorization(&l, &m, &swap)?;
    print!("{report}");
    for level in &report.levels {
        println!("  p = {}: {:?} / {:?} -> {:?} / {:?}", level.prime, level.orders_l, level.orders_m, level.reduced_l, level.reduced_m);
    }

    let reduced: Vec<usize> = reduce_cyclic(&l, 2)?.iter().map(|g| g.order()).collect();
    println!("squares of Z2 x Z4 leave factors of orders {reduced:?}");
    Ok(())
}
