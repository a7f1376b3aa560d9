//! Integer tuples, the three value domains, and variable assignments.
//!
//! Indices are 1-based everywhere in the public API to match the way the
//! relations are written down: `x_1 .. x_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};

/// A non-empty tuple of exact integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntTuple(Vec<BigInt>);

impl IntTuple {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyTuple);
        }
        Ok(Self(entries))
    }

    /// Convenience constructor for small literal tuples. Panics on an empty slice.
    pub fn from_i64s(entries: &[i64]) -> Self {
        Self::new(entries.iter().copied().map(BigInt::from).collect())
            .expect("tuple literal must be non-empty")
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// The entry at 1-based position `i`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i - 1]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    /// Largest absolute entry; the shell this tuple lives in.
    pub fn shell(&self) -> BigInt {
        self.0.iter().map(|v| v.abs()).max().unwrap_or_default()
    }

    /// Parse the whitespace separated text format. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("");
            for token in body.split_whitespace() {
                let value = BigInt::from_str(token).map_err(|_| Error::ParseInt {
                    line: lineno + 1,
                    token: token.to_string(),
                })?;
                entries.push(value);
            }
        }
        Self::new(entries)
    }

    /// Errors with the first entry that falls below the domain floor.
    pub fn check_domain(&self, domain: DomainKind) -> Result<()> {
        for (i, v) in self.0.iter().enumerate() {
            if !domain.contains(v) {
                return Err(Error::OutOfDomain {
                    index: i + 1,
                    value: v.clone(),
                    domain: domain.symbol(),
                });
            }
        }
        Ok(())
    }

    /// The tuple as a total assignment `i -> x_i`.
    pub fn to_assignment(&self) -> Assignment {
        let mut a = Assignment::new();
        for (i, v) in self.0.iter().enumerate() {
            a.values.insert(Var::Y(i + 1), v.clone());
        }
        a
    }
}

impl fmt::Display for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Which set of integers the tuples range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    /// All integers.
    Integers,
    /// Non-negative integers.
    Naturals,
    /// Positive integers.
    Positive,
}

impl DomainKind {
    /// Smallest admissible value, if any.
    pub fn floor(self) -> Option<i64> {
        match self {
            DomainKind::Integers => None,
            DomainKind::Naturals => Some(0),
            DomainKind::Positive => Some(1),
        }
    }

    pub fn contains(self, v: &BigInt) -> bool {
        match self {
            DomainKind::Integers => true,
            DomainKind::Naturals => !v.is_negative(),
            DomainKind::Positive => v.is_positive(),
        }
    }

    pub fn is_nonnegative(self) -> bool {
        self != DomainKind::Integers
    }

    /// Short name used by the CLI and the report format: `Z`, `N`, `N1`.
    pub fn symbol(self) -> &'static str {
        match self {
            DomainKind::Integers => "Z",
            DomainKind::Naturals => "N",
            DomainKind::Positive => "N1",
        }
    }
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for DomainKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "Z" => Ok(DomainKind::Integers),
            "N" => Ok(DomainKind::Naturals),
            "N1" => Ok(DomainKind::Positive),
            other => Err(format!("unknown domain `{other}` (expected Z, N or N1)")),
        }
    }
}

/// A variable of the relation system or of the sum-of-squares polynomial.
///
/// `A` and `B` are the two extra unknowns of the polynomial; `Y(i)` is the
/// i-th tuple coordinate (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    Y(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A => f.write_str("a"),
            Var::B => f.write_str("b"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// A partial map from variables to integers. Each variable is bound at most once.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<Var, BigInt>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Binds `var`. Rebinding to the same value is a no-op; a different value is an error.
    pub fn bind(&mut self, var: Var, value: BigInt) -> Result<()> {
        match self.values.get(&var) {
            Some(existing) if *existing != value => Err(Error::Rebind {
                var,
                existing: existing.clone(),
                new: value,
            }),
            Some(_) => Ok(()),
            None => {
                self.values.insert(var, value);
                Ok(())
            }
        }
    }

    pub fn with(mut self, var: Var, value: impl Into<BigInt>) -> Result<Self> {
        self.bind(var, value.into())?;
        Ok(self)
    }

    pub fn get(&self, var: Var) -> Option<&BigInt> {
        self.values.get(&var)
    }

    /// The value of `var`, or a missing-variable error.
    pub fn require(&self, var: Var) -> Result<&BigInt> {
        self.values.get(&var).ok_or(Error::MissingVariable(var))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &BigInt)> {
        self.values.iter()
    }

    /// True when every `Y(1..=n)` is bound.
    pub fn is_total(&self, n: usize) -> bool {
        (1..=n).all(|i| self.values.contains_key(&Var::Y(i)))
    }

    /// The `y_1..y_n` part as a tuple.
    pub fn y_tuple(&self, n: usize) -> Result<IntTuple> {
        let entries = (1..=n)
            .map(|i| self.require(Var::Y(i)).cloned())
            .collect::<Result<Vec<_>>>()?;
        IntTuple::new(entries)
    }
}

/// Partial assignment over `1..=n` stored densely.
pub(crate) fn dense_from(partial: &Assignment, n: usize) -> Result<Vec<Option<BigInt>>> {
    let mut dense = vec![None; n];
    for (var, value) in partial.iter() {
        match *var {
            Var::Y(i) if (1..=n).contains(&i) => dense[i - 1] = Some(value.clone()),
            Var::Y(i) => return Err(Error::IndexOutOfRange { index: i, arity: n }),
            Var::A | Var::B => {}
        }
    }
    Ok(dense)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_newlines() {
        let t = IntTuple::parse("# header\n1 2\n  -3 # trailing\n\n4").unwrap();
        assert_eq!(t, IntTuple::from_i64s(&[1, 2, -3, 4]));
        assert_eq!(t.to_string(), "1 2 -3 4");
    }

    #[test]
    fn rejects_empty_and_garbage() {
        assert_eq!(IntTuple::parse("# nothing\n"), Err(Error::EmptyTuple));
        assert!(matches!(
            IntTuple::parse("1\n2 x3"),
            Err(Error::ParseInt { line: 2, .. })
        ));
    }

    #[test]
    fn big_entries_survive() {
        let t = IntTuple::parse("123456789012345678901234567890").unwrap();
        assert_eq!(t.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn domain_floors() {
        let t = IntTuple::from_i64s(&[3, 0]);
        assert!(t.check_domain(DomainKind::Naturals).is_ok());
        assert!(matches!(
            t.check_domain(DomainKind::Positive),
            Err(Error::OutOfDomain { index: 2, .. })
        ));
        assert!(IntTuple::from_i64s(&[-1])
            .check_domain(DomainKind::Integers)
            .is_ok());
    }

    #[test]
    fn assignment_rejects_rebinding() {
        let mut a = Assignment::new();
        a.bind(Var::Y(1), 2.into()).unwrap();
        a.bind(Var::Y(1), 2.into()).unwrap();
        assert!(matches!(
            a.bind(Var::Y(1), 3.into()),
            Err(Error::Rebind { .. })
        ));
        assert!(!a.is_total(2));
        assert_eq!(a.require(Var::A), Err(Error::MissingVariable(Var::A)));
    }
}
