//! Turn a solution of the quartic into a full solution of the 20-entry tuple.
use bnsets::equations::{complete_witness_theorem1, paper_tuple, PaperTuple};
use bnsets::{extract, satisfies};
use num_bigint::BigInt;

fn main() -> bnsets::Result<()> {
    let t = paper_tuple(PaperTuple::Theorem1);
    let r = extract(&t);
    println!("tuple: {t}");
    for (x, y, z) in [(132, 143, 164), (-133, 143, 164), (-144, 132, -165)] {
        let s = complete_witness_theorem1(&BigInt::from(x), &BigInt::from(y), &BigInt::from(z))?;
        let yt = s.y_tuple(20)?;
        println!("({x}, {y}, {z}) -> {yt}  satisfies: {}", satisfies(&yt, &r)?);
    }
    Ok(())
}
