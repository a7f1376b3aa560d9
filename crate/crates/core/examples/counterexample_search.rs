//! Look for tuples that keep every relation of t but move its first entry.
use bnsets::solver::{find_counterexample, Searcher};
use bnsets::{DomainKind, IntTuple};

fn main() -> bnsets::Result<()> {
    // 2 has no relations of its own, so anything else in the bound replaces it.
    let loose = IntTuple::from_i64s(&[2]);
    println!("(2): {:?}", find_counterexample(&loose, DomainKind::Integers, 3)?.map(|y| y.to_string()));

    // 2 = 1 + 1 is pinned down by the unit in the second slot.
    let pinned = IntTuple::from_i64s(&[2, 1]);
    println!("(2 1): {:?}", find_counterexample(&pinned, DomainKind::Integers, 50)?);

    let report = Searcher::new(DomainKind::Naturals, 6).threads(4).certify(&IntTuple::from_i64s(&[3, 2]))?;
    print!("{report}");
    Ok(())
}
