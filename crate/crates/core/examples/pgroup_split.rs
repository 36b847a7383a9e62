//! Split a cyclic factor off an abelian p-group and factor it completely.

use fingroup::pgroup::{cyclic_p_subgroup_list, desired_properties_check, g1, g2, split_witness};
use fingroup::{cyclic_group, direct_product};

fn main() -> fingroup::Result<()> {
    let g = direct_product(&[cyclic_group(2)?, cyclic_group(8)?, cyclic_group(4)?])?;
    let a = g.elt_of_ord(g.max_ord()).expect("max-ord is attained").clone();
    println!("|g| = {}, max-ord = {}, a = {a}", g.order(), g.max_ord());

    let s = split_witness(&a, 2, &g)?;
    println!("x = {}, i = {}, j = {}, y = {}, |c| = {}", s.x, s.i, s.j, s.y, s.c.order());

    let first = g1(&a, &g)?;
    let second = g2(&a, 2, &g)?;
    println!("|<a>| = {}, complement order {}", first.order(), second.order());
    println!("complement conditions: {:?}", desired_properties_check(&g, first.group(), second.group()));

    let f = cyclic_p_subgroup_list(2, &g)?;
    println!("cyclic factors of orders {:?}", f.orders());
    Ok(())
}
