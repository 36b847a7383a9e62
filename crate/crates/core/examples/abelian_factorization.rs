//! Factor abelian groups into cyclic groups of prime-power order.

use fingroup::{abelian_factorization, cyclic_group, direct_product};

fn main() -> fingroup::Result<()> {
    let z12 = cyclic_group(12)?;
    print!("{}", abelian_factorization(&z12)?);

    let g = direct_product(&[cyclic_group(6)?, cyclic_group(10)?])?;
    let f = abelian_factorization(&g)?;
    println!("Z6 x Z10 -> {:?}", f.orders());
    for s in f.summaries() {
        println!("  Z{} (p = {}) generated by {}", s.order, s.prime, s.generator);
    }
    for (x, y) in f.iso.pairs().iter().take(4) {
        println!("  {x} -> {y}");
    }
    Ok(())
}
