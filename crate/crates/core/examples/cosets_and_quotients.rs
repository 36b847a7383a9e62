//! Cosets, normality and quotient groups inside Z12 and S3.

use fingroup::subgroup::{cyclic, lcosets, lift, normalp, quotient};
use fingroup::{cyclic_group, symmetric_group, Element, Subgroup};

fn main() -> fingroup::Result<()> {
    let z12 = cyclic_group(12)?;
    let n = cyclic(&Element::Int(4), &z12)?;
    println!("<4> in Z12: {:?}", n.elements().iter().map(ToString::to_string).collect::<Vec<_>>());
    for c in lcosets(&n, &z12)? {
        println!("  coset {}", Element::Seq(c));
    }

    let q = quotient(&z12, &n)?;
    println!("Z12 / <4> has order {} and is cyclic: {}", q.order(), q.is_cyclic());

    let gen = q.elements()[2].clone();
    let h = cyclic(&gen, &q)?;
    let up = lift(&h, &n, &z12)?;
    println!("lifting a subgroup of order {} gives order {}", h.order(), up.order());

    let s3 = symmetric_group(3)?;
    let t = cyclic(&s3.elements()[1], &s3)?;
    let r = cyclic(&s3.elements()[3], &s3)?;
    println!("in S3: <{}> normal: {}", s3.elements()[1], normalp(&t, &s3)?);
    println!("in S3: <{}> normal: {}", s3.elements()[3], normalp(&r, &s3)?);
    let whole = Subgroup::whole(&s3);
    println!("S3 / S3 has order {}", quotient(&s3, &whole)?.order());
    Ok(())
}
