//! The shell order on integer tuples and its enumeration.
//!
//! Tuples are ranked by their largest absolute entry first, then
//! lexicographically with the usual signed order, leftmost entry first.
//! Every shell is finite, so the order is isomorphic to the naturals and the
//! stream below reaches every tuple after finitely many steps.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::tuple::{DomainKind, IntTuple};

/// Compare two tuples of equal arity in shell order.
pub fn shell_compare(t: &IntTuple, u: &IntTuple) -> Result<Ordering> {
    if t.arity() != u.arity() {
        return Err(Error::ArityMismatch {
            expected: t.arity(),
            found: u.arity(),
        });
    }
    Ok(shell_cmp_slices(t.entries(), u.entries()))
}

pub(crate) fn shell_cmp_slices(t: &[BigInt], u: &[BigInt]) -> Ordering {
    let st = t.iter().map(|v| v.abs()).max();
    let su = u.iter().map(|v| v.abs()).max();
    st.cmp(&su).then_with(|| t.cmp(u))
}

/// Lazy stream of every tuple of `domain^n` in strictly increasing shell order.
pub fn enumerate_tuples(n: usize, domain: DomainKind) -> Result<TupleStream> {
    if n == 0 {
        return Err(Error::EmptyTuple);
    }
    let start = match domain {
        DomainKind::Positive => BigInt::one(),
        _ => BigInt::zero(),
    };
    Ok(TupleStream {
        n,
        domain,
        shell: start.clone(),
        current: ShellIter::new(n, domain, start),
    })
}

/// See [`enumerate_tuples`].
#[derive(Debug, Clone)]
pub struct TupleStream {
    n: usize,
    domain: DomainKind,
    shell: BigInt,
    current: ShellIter,
}

impl TupleStream {
    /// The shell the stream is currently emitting from.
    pub fn current_shell(&self) -> &BigInt {
        &self.shell
    }
}

impl Iterator for TupleStream {
    type Item = IntTuple;

    fn next(&mut self) -> Option<IntTuple> {
        loop {
            if let Some(t) = self.current.next() {
                return Some(t);
            }
            self.shell += 1;
            self.current = ShellIter::new(self.n, self.domain, self.shell.clone());
        }
    }
}

/// All tuples of `domain^n` whose shell is exactly `r`, in lexicographic order.
pub fn shell_tuples(n: usize, domain: DomainKind, r: BigInt) -> ShellIter {
    ShellIter::new(n, domain, r)
}

/// Odometer over the box `[lo, r]^n` that skips interior points.
///
/// After each lexicographic step, a tuple with no entry on the shell boundary
/// has its last entry raised to `r`: with the prefix fixed, that is the
/// smallest boundary tuple not below it.
#[derive(Debug, Clone)]
pub struct ShellIter {
    r: BigInt,
    lo: BigInt,
    next: Option<Vec<BigInt>>,
}

impl ShellIter {
    fn new(n: usize, domain: DomainKind, r: BigInt) -> Self {
        let lo = match domain {
            DomainKind::Integers => -r.clone(),
            DomainKind::Naturals => BigInt::zero(),
            DomainKind::Positive => BigInt::one(),
        };
        let empty = n == 0 || r.is_negative() || r < lo;
        let mut it = Self {
            next: None,
            lo: lo.clone(),
            r,
        };
        if !empty {
            let mut first = vec![lo; n];
            it.fix_boundary(&mut first);
            it.next = Some(first);
        }
        it
    }

    fn on_boundary(&self, v: &[BigInt]) -> bool {
        v.iter().any(|x| x.abs() == self.r)
    }

    fn fix_boundary(&self, v: &mut [BigInt]) {
        if !self.on_boundary(v) {
            *v.last_mut().expect("non-empty") = self.r.clone();
        }
    }

    fn advance(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut w = v.to_vec();
        for pos in (0..w.len()).rev() {
            if w[pos] < self.r {
                w[pos] += 1;
                self.fix_boundary(&mut w);
                return Some(w);
            }
            w[pos] = self.lo.clone();
        }
        None
    }
}

impl Iterator for ShellIter {
    type Item = IntTuple;

    fn next(&mut self) -> Option<IntTuple> {
        let cur = self.next.take()?;
        self.next = self.advance(&cur);
        Some(IntTuple::new(cur).expect("arity is positive"))
    }
}
