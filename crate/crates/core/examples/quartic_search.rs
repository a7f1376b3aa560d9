//! Tabulate the three named equations over small boxes.
use bnsets::equations::{search_equation_threads, NamedEquation};

fn main() -> bnsets::Result<()> {
    for (eq, bound) in [
        (NamedEquation::Quartic, 200),
        (NamedEquation::ShiftedQuartic, 330),
        (NamedEquation::SquaresMinusOne, 400),
    ] {
        println!("{eq}, 1..={bound}:");
        for (x, y, z) in search_equation_threads(eq, bound, 4)? {
            println!("  {x} {y} {z}");
        }
    }
    Ok(())
}
