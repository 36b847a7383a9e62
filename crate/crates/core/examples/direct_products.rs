//! External direct products, products of subgroups, and recognising an
//! internal direct product.

use fingroup::products::{internal_direct_product_p, lift_cosets, product_list_map, products};
use fingroup::subgroup::cyclic;
use fingroup::{classify, cyclic_group, direct_product, symmetric_group, Element};

fn main() -> fingroup::Result<()> {
    let g = direct_product(&[cyclic_group(2)?, cyclic_group(4)?])?;
    println!("Z2 x Z4 has order {}; first tuples: {}", g.order(),
        g.elements().iter().take(5).map(ToString::to_string).collect::<Vec<_>>().join(" "));

    let s3 = symmetric_group(3)?;
    let h = cyclic(&s3.elements()[1], &s3)?;
    let k = cyclic(&s3.elements()[2], &s3)?;
    let hk = products(&h, &k, &s3)?;
    println!("in S3, |HK| = {} for |H| = {}, |K| = {}", hk.len(), h.order(), k.order());
    for c in lift_cosets(&h, &k, &s3)? {
        println!("  {}", Element::Seq(c));
    }

    let z6 = cyclic_group(6)?;
    let parts = [cyclic(&Element::Int(3), &z6)?, cyclic(&Element::Int(2), &z6)?];
    println!("Z6 = <3> x <2> internally: {}", internal_direct_product_p(&parts, &z6)?);
    let m = product_list_map(&parts, &z6)?;
    let dp = direct_product(&[parts[0].group().clone(), parts[1].group().clone()])?;
    println!("product map is an isomorphism: {}", classify(&m, &dp, &z6)?.isomorphism);
    Ok(())
}
