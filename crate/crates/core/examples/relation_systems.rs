//! Extract the relation system of a tuple and test other tuples against it.
use bnsets::relations::{first_violation, paper_style_listing};
use bnsets::{extract, satisfies, subset, IntTuple};

fn main() -> bnsets::Result<()> {
    let t = IntTuple::from_i64s(&[4, 2, 1]);
    let r = extract(&t);
    print!("{}", r.to_text());
    println!();
    print!("{}", paper_style_listing(&t, false));

    for y in [[4, 2, 1], [0, 0, 1], [9, 3, 1]] {
        let y = IntTuple::from_i64s(&y);
        match first_violation(&y, &r)? {
            None => println!("({y}) satisfies the system"),
            Some(rel) => println!("({y}) violates {rel}"),
        }
    }

    // (-4, -2, 1) breaks 1 + 1 = 2 but keeps -2 + -2 = -4 and the unit products.
    let z = IntTuple::from_i64s(&[-4, -2, 1]);
    println!("B(4 2 1) within B(-4 -2 1): {}", subset(&r, &extract(&z))?);
    println!("B(-4 -2 1) within B(4 2 1): {}", subset(&extract(&z), &r)?);
    println!("self-consistent: {}", satisfies(&t, &r)?);
    Ok(())
}
