//! Brute-force references shared by the integration tests. Nothing here
//! touches the solver or the ordering code.

#![allow(dead_code)]

use bnsets::{extract, satisfies, IntTuple};
use num_bigint::BigInt;

/// Every tuple in `[lo, hi]^n`, nested loops, unsorted.
pub fn box_tuples(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for prefix in &out {
            for v in lo..=hi {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Sort key of the shell order: largest absolute entry, then the entries.
pub fn shell_key(t: &[i64]) -> (i64, Vec<i64>) {
    (t.iter().map(|v| v.abs()).max().unwrap_or(0), t.to_vec())
}

pub fn sorted_box(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut all = box_tuples(n, lo, hi);
    all.sort_by_key(|t| shell_key(t));
    all
}

pub fn tuple(v: &[i64]) -> IntTuple {
    IntTuple::from_i64s(v)
}

/// Shell-least `y` in `[lo, bound]^n` solving `extract(t)` with `y_1 != t_1`,
/// found by checking every point of the box.
pub fn raw_counterexample(t: &IntTuple, lo: i64, bound: i64) -> Option<IntTuple> {
    let r = extract(t);
    let first = t.get(1).clone();
    sorted_box(t.arity(), lo, bound)
        .into_iter()
        .map(|y| tuple(&y))
        .find(|y| *y.get(1) != first && satisfies(y, &r).unwrap())
}

/// All tuples with `n <= 2` and entries in `[lo, hi]`.
pub fn small_tuples(lo: i64, hi: i64) -> Vec<IntTuple> {
    let mut out = Vec::new();
    for n in 1..=2 {
        out.extend(box_tuples(n, lo, hi).into_iter().map(|v| tuple(&v)));
    }
    out
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
