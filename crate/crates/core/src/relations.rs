//! Unit, additive and multiplicative relations among the entries of a tuple.
//!
//! A tuple `x` is in `B_n(K)` when every `y` in `K^n` that satisfies all the
//! relations of `x` agrees with `x` in the first coordinate. This module
//! computes those relations and checks them against other tuples.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::tuple::IntTuple;

/// A single relation, 1-based. Binary relations keep `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `x_i = 1`
    Unit(usize),
    /// `x_i + x_j = x_k`
    Add(usize, usize, usize),
    /// `x_i * x_j = x_k`
    Mul(usize, usize, usize),
}

impl Relation {
    /// Whether `y` (0-based slice) satisfies this relation.
    pub fn holds(&self, y: &[BigInt]) -> bool {
        match *self {
            Relation::Unit(i) => y[i - 1].is_one(),
            Relation::Add(i, j, k) => &y[i - 1] + &y[j - 1] == y[k - 1],
            Relation::Mul(i, j, k) => &y[i - 1] * &y[j - 1] == y[k - 1],
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        match *self {
            Relation::Unit(i) => vec![i],
            Relation::Add(i, j, k) | Relation::Mul(i, j, k) => vec![i, j, k],
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Relation::Unit(i) => write!(f, "U {i}"),
            Relation::Add(i, j, k) => write!(f, "A {i} {j} {k}"),
            Relation::Mul(i, j, k) => write!(f, "M {i} {j} {k}"),
        }
    }
}

/// Every relation a tuple satisfies, stored canonically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationSystem {
    n: usize,
    units: BTreeSet<usize>,
    adds: BTreeSet<(usize, usize, usize)>,
    muls: BTreeSet<(usize, usize, usize)>,
}

impl RelationSystem {
    /// The empty system on `n` variables.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            ..Self::default()
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn units(&self) -> &BTreeSet<usize> {
        &self.units
    }

    pub fn adds(&self) -> &BTreeSet<(usize, usize, usize)> {
        &self.adds
    }

    pub fn muls(&self) -> &BTreeSet<(usize, usize, usize)> {
        &self.muls
    }

    pub fn len(&self) -> usize {
        self.units.len() + self.adds.len() + self.muls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Adds a relation, canonicalising `i <= j`.
    pub fn insert(&mut self, rel: Relation) -> Result<()> {
        for idx in rel.indices() {
            if idx == 0 || idx > self.n {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    arity: self.n,
                });
            }
        }
        match rel {
            Relation::Unit(i) => {
                self.units.insert(i);
            }
            Relation::Add(i, j, k) => {
                self.adds.insert((i.min(j), i.max(j), k));
            }
            Relation::Mul(i, j, k) => {
                self.muls.insert((i.min(j), i.max(j), k));
            }
        }
        Ok(())
    }

    pub fn contains(&self, rel: &Relation) -> bool {
        match *rel {
            Relation::Unit(i) => self.units.contains(&i),
            Relation::Add(i, j, k) => self.adds.contains(&(i.min(j), i.max(j), k)),
            Relation::Mul(i, j, k) => self.muls.contains(&(i.min(j), i.max(j), k)),
        }
    }

    /// Units, then additions, then products, each in lexicographic order.
    pub fn relations(&self) -> impl Iterator<Item = Relation> + '_ {
        self.units
            .iter()
            .map(|&i| Relation::Unit(i))
            .chain(self.adds.iter().map(|&(i, j, k)| Relation::Add(i, j, k)))
            .chain(self.muls.iter().map(|&(i, j, k)| Relation::Mul(i, j, k)))
    }

    /// One relation per line in the `U i` / `A i j k` / `M i j k` format.
    pub fn to_text(&self) -> String {
        let mut out = format!("# arity {}\n", self.n);
        for rel in self.relations() {
            out.push_str(&rel.to_string());
            out.push('\n');
        }
        out
    }

    /// Parse the line format against a known arity. `#` starts a comment.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut sys = Self::empty(n);
        for (lineno, line) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut parts = body.split_whitespace();
            let kind = parts.next().unwrap_or_default();
            let idx = parts
                .map(|p| {
                    p.parse::<usize>().map_err(|_| Error::ParseInt {
                        line: line_no,
                        token: p.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let bad_len = |want: usize| Error::Syntax {
                line: line_no,
                message: format!("`{kind}` takes {want} indices, found {}", idx.len()),
            };
            let rel = match kind {
                "U" if idx.len() == 1 => Relation::Unit(idx[0]),
                "U" => return Err(bad_len(1)),
                "A" if idx.len() == 3 => Relation::Add(idx[0], idx[1], idx[2]),
                "M" if idx.len() == 3 => Relation::Mul(idx[0], idx[1], idx[2]),
                "A" | "M" => return Err(bad_len(3)),
                other => {
                    return Err(Error::Syntax {
                        line: line_no,
                        message: format!("unknown relation kind `{other}`"),
                    })
                }
            };
            sys.insert(rel)?;
        }
        Ok(sys)
    }
}

/// All relations the tuple satisfies.
pub fn extract(t: &IntTuple) -> RelationSystem {
    let x = t.entries();
    let n = x.len();
    let mut sys = RelationSystem::empty(n);
    for (i, v) in x.iter().enumerate() {
        if v.is_one() {
            sys.units.insert(i + 1);
        }
    }
    for i in 0..n {
        for j in i..n {
            let sum = &x[i] + &x[j];
            let prod = &x[i] * &x[j];
            for (k, v) in x.iter().enumerate() {
                if *v == sum {
                    sys.adds.insert((i + 1, j + 1, k + 1));
                }
                if *v == prod {
                    sys.muls.insert((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    sys
}

/// A `[i, j, k]` triple as printed in display listings.
pub type Triple = [usize; 3];

/// The additive and multiplicative triples in scan order: `i` ascending,
/// `j` from `i`, `k` over the full range.
///
/// With `skip_last_in_products`, product scans stop at `j = n - 1`; for a tuple
/// ending in 1 this hides the uninformative `x_i * 1 = x_i` rows.
pub fn extract_display(t: &IntTuple, skip_last_in_products: bool) -> (Vec<Triple>, Vec<Triple>) {
    let x = t.entries();
    let n = x.len();
    let mut adds = Vec::new();
    for i in 0..n {
        for j in i..n {
            let sum = &x[i] + &x[j];
            for (k, v) in x.iter().enumerate() {
                if *v == sum {
                    adds.push([i + 1, j + 1, k + 1]);
                }
            }
        }
    }
    let top = if skip_last_in_products {
        n.saturating_sub(1)
    } else {
        n
    };
    let mut muls = Vec::new();
    for i in 0..top {
        for j in i..top {
            let prod = &x[i] * &x[j];
            for (k, v) in x.iter().enumerate() {
                if *v == prod {
                    muls.push([i + 1, j + 1, k + 1]);
                }
            }
        }
    }
    (adds, muls)
}

/// `[i, j, k]` one per line.
pub fn format_triples(triples: &[Triple]) -> String {
    triples
        .iter()
        .map(|[i, j, k]| format!("[{i}, {j}, {k}]\n"))
        .collect()
}

/// Both display listings under `#` headers, as printed by `extract --paper-style`.
pub fn paper_style_listing(t: &IntTuple, skip_last_in_products: bool) -> String {
    let (adds, muls) = extract_display(t, skip_last_in_products);
    let n = t.arity();
    let mut out = String::from("# additive: i <= j, A[i] + A[j] = A[k]\n");
    out.push_str(&format_triples(&adds));
    if skip_last_in_products {
        out.push_str(&format!("# multiplicative: i <= j < {n}, A[i] * A[j] = A[k]\n"));
    } else {
        out.push_str("# multiplicative: i <= j, A[i] * A[j] = A[k]\n");
    }
    out.push_str(&format_triples(&muls));
    out
}

/// The first relation of `r` that `y` violates, in [`RelationSystem::relations`] order.
pub fn first_violation(y: &IntTuple, r: &RelationSystem) -> Result<Option<Relation>> {
    if y.arity() != r.arity() {
        return Err(Error::ArityMismatch {
            expected: r.arity(),
            found: y.arity(),
        });
    }
    Ok(r.relations().find(|rel| !rel.holds(y.entries())))
}

pub fn satisfies(y: &IntTuple, r: &RelationSystem) -> Result<bool> {
    Ok(first_violation(y, r)?.is_none())
}

/// Whether every relation of `r1` is also a relation of `r2`.
pub fn subset(r1: &RelationSystem, r2: &RelationSystem) -> Result<bool> {
    if r1.arity() != r2.arity() {
        return Err(Error::ArityMismatch {
            expected: r1.arity(),
            found: r2.arity(),
        });
    }
    Ok(r1.units.is_subset(&r2.units) && r1.adds.is_subset(&r2.adds) && r1.muls.is_subset(&r2.muls))
}
