//! Solve a relation system exactly in shell order, and compare with the
//! bounded search that caps only branching variables.
use bnsets::relations::{Relation, RelationSystem};
use bnsets::solver::{enumerate_solutions, solve_in_shell_order};
use bnsets::DomainKind;

fn main() -> bnsets::Result<()> {
    // y3 = 1 and y1 + y3 = y2: y1 is free and y2 is forced to y1 + 1, so the
    // capped search also returns (3 4 1), whose shell exceeds the cap.
    let mut r = RelationSystem::empty(3);
    r.insert(Relation::Unit(3))?;
    r.insert(Relation::Add(1, 3, 2))?;

    let exact: Vec<String> = solve_in_shell_order(&r, DomainKind::Integers, 3).map(|y| y.to_string()).collect();
    println!("shell <= 3: {exact:?}");

    let capped: Vec<String> = enumerate_solutions(&r, DomainKind::Integers, 3, 100)
        .into_iter()
        .map(|y| y.to_string())
        .collect();
    println!("branching <= 3: {capped:?}");
    Ok(())
}
