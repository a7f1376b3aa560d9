//! Encode "y solves B(t) and y_1 != t_1" as one polynomial and emit it.
use bnsets::dioph::{build_d, emit_text, evaluate_d, parse_smt2_assertion, witness_to_solution, EmitFormat};
use bnsets::IntTuple;

fn main() -> bnsets::Result<()> {
    let t = IntTuple::from_i64s(&[2]);
    let d = build_d(&t);
    println!("terms: {}", d.term_count());
    println!("{}", emit_text(&d, EmitFormat::Sexpr));
    let smt = emit_text(&d, EmitFormat::Smt2);
    print!("{smt}");

    // y = (0) moves the first entry; the bridge finds a and b that zero D.
    let s = witness_to_solution(&t, &IntTuple::from_i64s(&[0]))?;
    for (v, x) in s.iter() {
        println!("{v} = {x}");
    }
    println!("D = {}", evaluate_d(&d, &s)?);
    println!("SMT2 assertion = {}", parse_smt2_assertion(&smt)?.eval(&s)?);
    Ok(())
}
