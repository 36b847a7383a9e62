//! Build groups from tables, print them in the group file format, and see
//! what the validator says about a broken table.

use fingroup::format::{parse_group, print_group};
use fingroup::{cyclic_group, symmetric_group, validate_group, Element};

fn main() -> fingroup::Result<()> {
    let z4 = cyclic_group(4)?;
    print!("{}", print_group(&z4));

    let s3 = symmetric_group(3)?;
    println!("S3 has order {}, abelian: {}", s3.order(), s3.is_abelian());
    for x in s3.elements() {
        println!("  {x} has order {}", s3.ord(x)?);
    }

    let text = print_group(&s3);
    assert_eq!(parse_group(&text)?, s3);

    let roster = vec![Element::Int(0), Element::Int(1)];
    match validate_group(roster, vec![vec![0, 1], vec![1, 1]]) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
