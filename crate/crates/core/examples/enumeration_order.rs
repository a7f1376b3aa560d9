//! Walk the first few shells of Z^2, N^2 and N1^2.
use bnsets::{enumerate_tuples, shell_compare, DomainKind, IntTuple};

fn main() -> bnsets::Result<()> {
    for domain in [DomainKind::Integers, DomainKind::Naturals, DomainKind::Positive] {
        let first: Vec<String> = enumerate_tuples(2, domain)?
            .take(12)
            .map(|t| format!("({})", t))
            .collect();
        println!("{domain}^2: {}", first.join(" "));
    }

    let a = IntTuple::from_i64s(&[-2, 1]);
    let b = IntTuple::from_i64s(&[2, -1]);
    println!("({a}) vs ({b}): {:?}", shell_compare(&a, &b)?);
    Ok(())
}
