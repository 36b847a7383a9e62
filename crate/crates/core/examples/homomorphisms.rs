//! Maps between groups: homomorphism checks with witnesses, image, kernel
//! and inverses of isomorphisms.

use fingroup::maps::{compose_maps, image, inv_isomorphism, kernel};
use fingroup::{classify, cyclic_group, homomorphism_check, Element, GroupMap};

fn main() -> fingroup::Result<()> {
    let z12 = cyclic_group(12)?;
    let z4 = cyclic_group(4)?;

    let reduce = GroupMap::from_fn(z12.elements(), |x| Element::Int(x.as_int().unwrap() % 4))?;
    let c = classify(&reduce, &z12, &z4)?;
    println!("x mod 4: epi {} mono {} iso {}", c.epimorphism, c.monomorphism, c.isomorphism);
    let ker = kernel(&reduce, &z12, &z4)?;
    let im = image(&reduce, &z12, &z4)?;
    println!("  |image| = {}, kernel = {:?}", im.order(), ker.elements().iter().map(ToString::to_string).collect::<Vec<_>>());

    let not_hom = GroupMap::from_fn(z12.elements(), |x| Element::Int(x.as_int().unwrap() % 5 % 4))?;
    if let Err(w) = homomorphism_check(&not_hom, &z12, &z4) {
        println!("x mod 5 mod 4 fails: {w}");
    }

    let times5 = GroupMap::from_fn(z12.elements(), |x| z12.power(x, 5).unwrap())?;
    let back = inv_isomorphism(&times5, &z12, &z12)?;
    println!("inverse of x -> 5x sends 1 to {}", back.apply(&Element::Int(1))?);
    assert_eq!(compose_maps(&back, &times5)?, GroupMap::identity(z12.elements()));
    Ok(())
}
