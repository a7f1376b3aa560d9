//! Bounded search for solutions of relation systems and for membership
//! counterexamples.
//!
//! Plain enumeration of `K^n` is hopeless for the 13 to 20 entry tuples this
//! crate cares about, but their relation systems are mostly chains: a unit
//! fixes a variable, a sum with two known sides fixes the third, a product
//! with a known nonzero factor and known result fixes the other factor. The
//! search branches only on variables propagation cannot determine, and the
//! bound caps exactly those branching values. Forced values may exceed it.
//!
//! Branching always picks the lowest undetermined index, so which variables
//! count as branching is a function of the system alone and results are
//! reproducible. Solutions are reported in shell order of the full tuple.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::shell_cmp_slices;
use crate::relations::{extract, Relation, RelationSystem};
use crate::tuple::{dense_from, Assignment, DomainKind, IntTuple, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropagationStatus {
    /// Every variable is determined and all relations hold.
    Extended,
    /// A relation cannot be satisfied by any completion.
    Conflict,
    /// Fixpoint reached with undetermined variables left.
    Stuck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropagationResult {
    pub status: PropagationStatus,
    pub assignment: Assignment,
    pub free: BTreeSet<usize>,
    pub conflict_relation: Option<Relation>,
}

/// Run forcing rules to a fixpoint starting from `partial`.
///
/// Values in `partial` must lie in `domain`; a relation already violated by
/// `partial` is reported as a conflict.
pub fn propagate(
    r: &RelationSystem,
    partial: &Assignment,
    domain: DomainKind,
) -> Result<PropagationResult> {
    let n = r.arity();
    let mut vals = dense_from(partial, n)?;
    for (i, v) in vals.iter().enumerate() {
        if let Some(v) = v {
            if !domain.contains(v) {
                return Err(Error::OutOfDomain {
                    index: i + 1,
                    value: v.clone(),
                    domain: domain.symbol(),
                });
            }
        }
    }
    let prop = Propagator::new(r, domain);
    let outcome = prop.run_all(&mut vals);
    let mut assignment = Assignment::new();
    for (var, value) in partial.iter() {
        if matches!(var, Var::A | Var::B) {
            assignment.bind(*var, value.clone())?;
        }
    }
    let mut free = BTreeSet::new();
    for (i, v) in vals.into_iter().enumerate() {
        match v {
            Some(v) => assignment.bind(Var::Y(i + 1), v)?,
            None => {
                free.insert(i + 1);
            }
        }
    }
    let (status, conflict_relation) = match outcome {
        Err(rel) => (PropagationStatus::Conflict, Some(rel)),
        Ok(()) if free.is_empty() => (PropagationStatus::Extended, None),
        Ok(()) => (PropagationStatus::Stuck, None),
    };
    Ok(PropagationResult {
        status,
        assignment,
        free,
        conflict_relation,
    })
}

enum Step {
    Nothing,
    Force(usize, BigInt),
    Conflict,
}

/// Relations with per-variable occurrence lists, 0-based internally.
struct Propagator {
    rels: Vec<Relation>,
    occurs: Vec<Vec<usize>>,
    domain: DomainKind,
}

type Dense = Vec<Option<BigInt>>;

impl Propagator {
    fn new(r: &RelationSystem, domain: DomainKind) -> Self {
        let rels: Vec<Relation> = r.relations().collect();
        let mut occurs = vec![Vec::new(); r.arity()];
        for (id, rel) in rels.iter().enumerate() {
            let mut idx = rel.indices();
            idx.dedup();
            idx.sort_unstable();
            idx.dedup();
            for i in idx {
                occurs[i - 1].push(id);
            }
        }
        Self {
            rels,
            occurs,
            domain,
        }
    }

    fn run_all(&self, vals: &mut Dense) -> std::result::Result<(), Relation> {
        let queue: Vec<usize> = (0..self.rels.len()).collect();
        self.run(vals, queue)
    }

    /// Propagate after `var` was just assigned.
    fn run_from(&self, vals: &mut Dense, var: usize) -> std::result::Result<(), Relation> {
        self.run(vals, self.occurs[var].clone())
    }

    fn run(&self, vals: &mut Dense, mut queue: Vec<usize>) -> std::result::Result<(), Relation> {
        let mut queued = vec![false; self.rels.len()];
        for &id in &queue {
            queued[id] = true;
        }
        while let Some(id) = queue.pop() {
            queued[id] = false;
            match self.step(&self.rels[id], vals) {
                Step::Nothing => {}
                Step::Conflict => return Err(self.rels[id]),
                Step::Force(var, value) => {
                    if !self.domain.contains(&value) {
                        return Err(self.rels[id]);
                    }
                    vals[var] = Some(value);
                    for &other in &self.occurs[var] {
                        if !queued[other] {
                            queued[other] = true;
                            queue.push(other);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn step(&self, rel: &Relation, vals: &Dense) -> Step {
        match *rel {
            Relation::Unit(i) => match &vals[i - 1] {
                None => Step::Force(i - 1, BigInt::one()),
                Some(v) if v.is_one() => Step::Nothing,
                Some(_) => Step::Conflict,
            },
            Relation::Add(i, j, k) => add_step(i - 1, j - 1, k - 1, vals),
            Relation::Mul(i, j, k) => self.mul_step(i - 1, j - 1, k - 1, vals),
        }
    }

    fn mul_step(&self, i: usize, j: usize, k: usize, vals: &Dense) -> Step {
        let check = |ok: bool| if ok { Step::Nothing } else { Step::Conflict };
        if i == j && j == k {
            // y^2 = y
            return match &vals[i] {
                Some(v) => check(v.is_zero() || v.is_one()),
                None if self.domain == DomainKind::Positive => Step::Force(i, BigInt::one()),
                None => Step::Nothing,
            };
        }
        if i == j {
            // y_i^2 = y_k
            return match (&vals[i], &vals[k]) {
                (Some(a), Some(c)) => check(a * a == *c),
                (Some(a), None) => Step::Force(k, a * a),
                (None, Some(c)) => {
                    if c.is_negative() {
                        return Step::Conflict;
                    }
                    let root = c.sqrt();
                    if &root * &root != *c {
                        Step::Conflict
                    } else if root.is_zero() || self.domain.is_nonnegative() {
                        Step::Force(i, root)
                    } else {
                        Step::Nothing
                    }
                }
                (None, None) => Step::Nothing,
            };
        }
        if k == i || k == j {
            // y_p * y_q = y_p
            let (p, q) = if k == i { (i, j) } else { (j, i) };
            return match (&vals[p], &vals[q]) {
                (Some(vp), Some(vq)) => check(vp * vq == *vp),
                (Some(vp), None) if !vp.is_zero() => Step::Force(q, BigInt::one()),
                (None, Some(vq)) if !vq.is_one() => Step::Force(p, BigInt::zero()),
                _ => Step::Nothing,
            };
        }
        match (&vals[i], &vals[j], &vals[k]) {
            (Some(a), Some(b), Some(c)) => check(a * b == *c),
            (Some(a), Some(b), None) => Step::Force(k, a * b),
            (Some(f), None, Some(c)) => divide_step(f, c, j),
            (None, Some(f), Some(c)) => divide_step(f, c, i),
            _ => Step::Nothing,
        }
    }
}

/// `f * y_u = c` with `f`, `c` known.
fn divide_step(f: &BigInt, c: &BigInt, u: usize) -> Step {
    if f.is_zero() {
        return if c.is_zero() {
            Step::Nothing
        } else {
            Step::Conflict
        };
    }
    let (q, rem) = c.div_rem(f);
    if rem.is_zero() {
        Step::Force(u, q)
    } else {
        Step::Conflict
    }
}

/// `y_i + y_j - y_k = 0` as a linear form over the distinct variables.
fn add_step(i: usize, j: usize, k: usize, vals: &Dense) -> Step {
    let mut terms: [(usize, i64); 3] = [(i, 0), (j, 0), (k, 0)];
    let mut len = 0;
    for (var, c) in [(i, 1i64), (j, 1), (k, -1)] {
        match terms[..len].iter_mut().find(|(v, _)| *v == var) {
            Some(t) => t.1 += c,
            None => {
                terms[len] = (var, c);
                len += 1;
            }
        }
    }
    let mut constant = BigInt::zero();
    let mut unknown = None;
    for &(var, c) in &terms[..len] {
        if c == 0 {
            continue;
        }
        match &vals[var] {
            Some(v) => constant += v * c,
            None if unknown.is_none() => unknown = Some((var, c)),
            None => return Step::Nothing,
        }
    }
    match unknown {
        None if constant.is_zero() => Step::Nothing,
        None => Step::Conflict,
        Some((var, c)) => {
            let (q, rem) = (-constant).div_rem(&BigInt::from(c));
            if rem.is_zero() {
                Step::Force(var, q)
            } else {
                Step::Conflict
            }
        }
    }
}

/// Branching values `v` in the domain with `|v| <= bound`, in shell order.
fn candidates(domain: DomainKind, bound: u64) -> Vec<BigInt> {
    let mut out = Vec::new();
    match domain {
        DomainKind::Integers => {
            out.push(BigInt::zero());
            for v in 1..=bound {
                out.push(-BigInt::from(v));
                out.push(BigInt::from(v));
            }
        }
        DomainKind::Naturals => out.extend((0..=bound).map(BigInt::from)),
        DomainKind::Positive => out.extend((1..=bound).map(BigInt::from)),
    }
    out
}

/// Shared depth-first search state for one query.
struct Dfs<'a> {
    prop: Propagator,
    values: Vec<BigInt>,
    /// Prune any branch in which some coordinate exceeds this in absolute value.
    cap: Option<BigInt>,
    /// Prune branches whose first coordinate is already this value.
    skip_first: Option<&'a BigInt>,
}

impl Dfs<'_> {
    fn admissible(&self, vals: &Dense) -> bool {
        if let (Some(skip), Some(first)) = (self.skip_first, &vals[0]) {
            if first == skip {
                return false;
            }
        }
        match &self.cap {
            Some(cap) => vals.iter().flatten().all(|v| v.abs() <= *cap),
            None => true,
        }
    }

    fn explore(&self, vals: Dense, visit: &mut dyn FnMut(Vec<BigInt>)) {
        if !self.admissible(&vals) {
            return;
        }
        let Some(var) = vals.iter().position(Option::is_none) else {
            visit(vals.into_iter().map(|v| v.expect("total")).collect());
            return;
        };
        for value in &self.values {
            self.try_value(&vals, var, value, visit);
        }
    }

    fn try_value(&self, vals: &Dense, var: usize, value: &BigInt, visit: &mut dyn FnMut(Vec<BigInt>)) {
        let mut next = vals.clone();
        next[var] = Some(value.clone());
        if self.prop.run_from(&mut next, var).is_ok() {
            self.explore(next, visit);
        }
    }

    /// Root propagation, then split the first branching variable across workers.
    fn search<S, F>(&self, n: usize, threads: usize, make: impl Fn() -> S + Sync, visit: F) -> Vec<S>
    where
        S: Send,
        F: Fn(&mut S, Vec<BigInt>) + Sync,
    {
        let mut root: Dense = vec![None; n];
        if self.prop.run_all(&mut root).is_err() || !self.admissible(&root) {
            return vec![make()];
        }
        let Some(var) = root.iter().position(Option::is_none) else {
            let mut state = make();
            visit(&mut state, root.into_iter().map(|v| v.expect("total")).collect());
            return vec![state];
        };
        let threads = threads.max(1).min(self.values.len().max(1));
        let work = |shard: usize| {
            let mut state = make();
            let mut sink = |sol: Vec<BigInt>| visit(&mut state, sol);
            for value in self.values.iter().skip(shard).step_by(threads) {
                self.try_value(&root, var, value, &mut sink);
            }
            state
        };
        if threads == 1 {
            return vec![work(0)];
        }
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|shard| {
                    let work = &work;
                    scope.spawn(move || work(shard))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    }
}

fn sort_shell(sols: &mut [Vec<BigInt>]) {
    sols.sort_by(|a, b| shell_cmp_slices(a, b));
}

fn into_tuple(v: Vec<BigInt>) -> IntTuple {
    IntTuple::new(v).expect("arity is positive")
}

/// Outcome of [`certify_bounded`]: evidence for membership, never a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub tuple: IntTuple,
    pub domain: DomainKind,
    pub bound: u64,
    /// Solutions of the tuple's system that move the first coordinate, in shell order.
    pub counterexamples: Vec<IntTuple>,
    /// Solutions that keep the first coordinate.
    pub confirmations: u64,
    pub exhausted: bool,
}

impl SearchReport {
    pub fn has_counterexample(&self) -> bool {
        !self.counterexamples.is_empty()
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tuple: {}", self.tuple)?;
        writeln!(f, "domain: {}", self.domain)?;
        writeln!(f, "bound: {}", self.bound)?;
        writeln!(f, "exhausted: {}", self.exhausted)?;
        writeln!(f, "confirmations: {}", self.confirmations)?;
        writeln!(f, "counterexamples: {}", self.counterexamples.len())?;
        for w in &self.counterexamples {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Search configuration. The free functions of this module use one thread.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Searcher {
    pub domain: DomainKind,
    /// Cap on branching values, `|v| <= bound`.
    pub bound: u64,
    pub threads: usize,
}

impl Searcher {
    pub fn new(domain: DomainKind, bound: u64) -> Self {
        Self {
            domain,
            bound,
            threads: 1,
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    fn dfs<'a>(&self, r: &RelationSystem, skip_first: Option<&'a BigInt>) -> Dfs<'a> {
        Dfs {
            prop: Propagator::new(r, self.domain),
            values: candidates(self.domain, self.bound),
            cap: None,
            skip_first,
        }
    }

    /// The first `limit` solutions of `r` in shell order.
    ///
    /// All solutions within the bound are collected before sorting, so memory
    /// grows with the size of the bounded solution set, not with `limit`.
    pub fn solutions(&self, r: &RelationSystem, limit: usize) -> Vec<IntTuple> {
        let dfs = self.dfs(r, None);
        let parts = dfs.search(r.arity(), self.threads, Vec::new, |acc: &mut Vec<_>, s| {
            acc.push(s)
        });
        let mut all: Vec<Vec<BigInt>> = parts.into_iter().flatten().collect();
        sort_shell(&mut all);
        all.into_iter().take(limit).map(into_tuple).collect()
    }

    /// The shell-least `y` solving `extract(t)` with `y_1 != t_1`, if one is within the bound.
    pub fn counterexample(&self, t: &IntTuple) -> Result<Option<IntTuple>> {
        t.check_domain(self.domain)?;
        let r = extract(t);
        let first = t.get(1);
        let dfs = self.dfs(&r, Some(first));
        let best: Mutex<Option<Vec<BigInt>>> = Mutex::new(None);
        dfs.search(
            t.arity(),
            self.threads,
            || (),
            |_, sol| {
                let mut cell = best.lock().expect("best-witness lock");
                let better = match cell.as_ref() {
                    None => true,
                    Some(cur) => shell_cmp_slices(&sol, cur) == Ordering::Less,
                };
                if better {
                    *cell = Some(sol);
                }
            },
        );
        Ok(best.into_inner().expect("best-witness lock").map(into_tuple))
    }

    /// Exhaust the bounded search for `t` and report everything found.
    pub fn certify(&self, t: &IntTuple) -> Result<SearchReport> {
        t.check_domain(self.domain)?;
        let r = extract(t);
        let first = t.get(1).clone();
        let dfs = self.dfs(&r, None);
        let parts = dfs.search(
            t.arity(),
            self.threads,
            || (Vec::new(), 0u64),
            |(cex, confirmed): &mut (Vec<Vec<BigInt>>, u64), sol| {
                if sol[0] == first {
                    *confirmed += 1;
                } else {
                    cex.push(sol);
                }
            },
        );
        let mut counterexamples = Vec::new();
        let mut confirmations = 0;
        for (cex, confirmed) in parts {
            counterexamples.extend(cex);
            confirmations += confirmed;
        }
        sort_shell(&mut counterexamples);
        Ok(SearchReport {
            tuple: t.clone(),
            domain: self.domain,
            bound: self.bound,
            counterexamples: counterexamples.into_iter().map(into_tuple).collect(),
            confirmations,
            exhausted: true,
        })
    }
}

pub fn enumerate_solutions(
    r: &RelationSystem,
    domain: DomainKind,
    bound: u64,
    limit: usize,
) -> Vec<IntTuple> {
    Searcher::new(domain, bound).solutions(r, limit)
}

pub fn find_counterexample(t: &IntTuple, domain: DomainKind, bound: u64) -> Result<Option<IntTuple>> {
    Searcher::new(domain, bound).counterexample(t)
}

pub fn certify_bounded(t: &IntTuple, domain: DomainKind, bound: u64) -> Result<SearchReport> {
    Searcher::new(domain, bound).certify(t)
}

/// Solutions of `r` in exact shell order of the whole tuple, shell by shell
/// up to `max_shell`.
///
/// Unlike [`enumerate_solutions`] every coordinate, forced or not, is held to
/// the current shell, so this is the plain brute-force solve in shell order,
/// accelerated by propagation. A consistent system is guaranteed to yield
/// once `max_shell` reaches the shell of its least solution.
pub fn solve_in_shell_order(r: &RelationSystem, domain: DomainKind, max_shell: u64) -> ShellOrderedSolutions {
    ShellOrderedSolutions {
        prop_source: r.clone(),
        domain,
        next_shell: if domain == DomainKind::Positive { 1 } else { 0 },
        max_shell,
        pending: Vec::new().into_iter(),
    }
}

/// See [`solve_in_shell_order`].
pub struct ShellOrderedSolutions {
    prop_source: RelationSystem,
    domain: DomainKind,
    next_shell: u64,
    max_shell: u64,
    pending: std::vec::IntoIter<IntTuple>,
}

impl ShellOrderedSolutions {
    fn fill(&mut self, shell: u64) {
        let cap = BigInt::from(shell);
        let dfs = Dfs {
            prop: Propagator::new(&self.prop_source, self.domain),
            values: candidates(self.domain, shell),
            cap: Some(cap.clone()),
            skip_first: None,
        };
        let mut found = dfs
            .search(self.prop_source.arity(), 1, Vec::new, |acc: &mut Vec<_>, s| {
                if s.iter().any(|v: &BigInt| v.abs() == cap) {
                    acc.push(s);
                }
            })
            .pop()
            .unwrap_or_default();
        found.sort();
        self.pending = found.into_iter().map(into_tuple).collect::<Vec<_>>().into_iter();
    }
}

impl Iterator for ShellOrderedSolutions {
    type Item = IntTuple;

    fn next(&mut self) -> Option<IntTuple> {
        loop {
            if let Some(t) = self.pending.next() {
                return Some(t);
            }
            if self.next_shell > self.max_shell {
                return None;
            }
            let shell = self.next_shell;
            self.next_shell += 1;
            self.fill(shell);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[i64]) -> IntTuple {
        IntTuple::from_i64s(v)
    }

    fn y(pairs: &[(usize, i64)]) -> Assignment {
        let mut a = Assignment::new();
        for &(i, v) in pairs {
            a.bind(Var::Y(i), v.into()).unwrap();
        }
        a
    }

    #[test]
    fn propagate_forced_chain() {
        let res = propagate(&extract(&t(&[2, 1])), &Assignment::new(), DomainKind::Integers).unwrap();
        assert_eq!(res.status, PropagationStatus::Extended);
        assert_eq!(res.assignment, y(&[(1, 2), (2, 1)]));
        assert!(res.free.is_empty());
    }

    #[test]
    fn propagate_zero_idempotent() {
        let res = propagate(&extract(&t(&[0])), &Assignment::new(), DomainKind::Integers).unwrap();
        assert_eq!(res.status, PropagationStatus::Extended);
        assert_eq!(res.assignment, y(&[(1, 0)]));
    }

    #[test]
    fn propagate_empty_system_is_stuck() {
        let res = propagate(&extract(&t(&[2])), &Assignment::new(), DomainKind::Integers).unwrap();
        assert_eq!(res.status, PropagationStatus::Stuck);
        assert_eq!(res.free, BTreeSet::from([1]));
        assert!(res.assignment.is_empty());
    }

    #[test]
    fn propagate_reports_conflicts() {
        let r = extract(&t(&[2, 1]));
        let res = propagate(&r, &y(&[(1, 3)]), DomainKind::Integers).unwrap();
        assert_eq!(res.status, PropagationStatus::Conflict);
        assert_eq!(res.conflict_relation, Some(Relation::Add(2, 2, 1)));

        // 2 * y2 = 3 has no integer solution
        let mut r = RelationSystem::empty(3);
        r.insert(Relation::Mul(1, 2, 3)).unwrap();
        let res = propagate(&r, &y(&[(1, 2), (3, 3)]), DomainKind::Integers).unwrap();
        assert_eq!(res.status, PropagationStatus::Conflict);

        // zero factor with nonzero product
        let res = propagate(&r, &y(&[(1, 0), (3, 3)]), DomainKind::Integers).unwrap();
        assert_eq!(res.status, PropagationStatus::Conflict);

        // zero factor with zero product leaves the other factor free
        let res = propagate(&r, &y(&[(1, 0), (3, 0)]), DomainKind::Integers).unwrap();
        assert_eq!(res.status, PropagationStatus::Stuck);
        assert_eq!(res.free, BTreeSet::from([2]));
    }

    #[test]
    fn propagate_domain_floor_conflict() {
        // y1 + y2 = y3 with y1 = 3, y3 = 1 forces y2 = -2, not natural
        let mut r = RelationSystem::empty(3);
        r.insert(Relation::Add(1, 2, 3)).unwrap();
        let res = propagate(&r, &y(&[(1, 3), (3, 1)]), DomainKind::Naturals).unwrap();
        assert_eq!(res.status, PropagationStatus::Conflict);
        let res = propagate(&r, &y(&[(1, 3), (3, 1)]), DomainKind::Integers).unwrap();
        assert_eq!(res.status, PropagationStatus::Extended);
        assert_eq!(res.assignment.get(Var::Y(2)), Some(&BigInt::from(-2)));
        assert!(propagate(&r, &y(&[(1, -1)]), DomainKind::Naturals).is_err());
    }

    #[test]
    fn propagate_squares() {
        let mut r = RelationSystem::empty(2);
        r.insert(Relation::Mul(1, 1, 2)).unwrap();
        let z = propagate(&r, &y(&[(2, 9)]), DomainKind::Integers).unwrap();
        assert_eq!(z.status, PropagationStatus::Stuck);
        let nat = propagate(&r, &y(&[(2, 9)]), DomainKind::Naturals).unwrap();
        assert_eq!(nat.assignment.get(Var::Y(1)), Some(&BigInt::from(3)));
        let bad = propagate(&r, &y(&[(2, 8)]), DomainKind::Integers).unwrap();
        assert_eq!(bad.status, PropagationStatus::Conflict);
    }

    #[test]
    fn solutions_examples() {
        let sols = enumerate_solutions(&extract(&t(&[2, 1])), DomainKind::Integers, 5, usize::MAX);
        assert_eq!(sols, vec![t(&[2, 1])]);

        let mut units = RelationSystem::empty(1);
        units.insert(Relation::Unit(1)).unwrap();
        assert_eq!(
            enumerate_solutions(&units, DomainKind::Integers, 7, 10),
            vec![t(&[1])]
        );

        let all: Vec<_> = enumerate_solutions(&extract(&t(&[3, 2])), DomainKind::Integers, 1, 9);
        let first9: Vec<_> = crate::order::enumerate_tuples(2, DomainKind::Integers)
            .unwrap()
            .take(9)
            .collect();
        assert_eq!(all, first9);
    }

    #[test]
    fn counterexample_examples() {
        assert_eq!(
            find_counterexample(&t(&[2]), DomainKind::Integers, 0).unwrap(),
            Some(t(&[0]))
        );
        assert_eq!(find_counterexample(&t(&[1]), DomainKind::Integers, 9).unwrap(), None);
        assert_eq!(find_counterexample(&t(&[2, 1]), DomainKind::Integers, 10).unwrap(), None);
        assert!(find_counterexample(&t(&[0]), DomainKind::Positive, 3).is_err());
    }

    #[test]
    fn certify_examples() {
        let rep = certify_bounded(&t(&[1]), DomainKind::Integers, 3).unwrap();
        assert!(rep.counterexamples.is_empty());
        assert_eq!(rep.confirmations, 1);
        assert!(rep.exhausted);

        let rep = certify_bounded(&t(&[3, 2]), DomainKind::Integers, 1).unwrap();
        assert_eq!(rep.counterexamples.len(), 9);
        assert_eq!(rep.confirmations, 0);
        assert_eq!(
            rep.to_string().lines().take(6).collect::<Vec<_>>(),
            vec![
                "tuple: 3 2",
                "domain: Z",
                "bound: 1",
                "exhausted: true",
                "confirmations: 0",
                "counterexamples: 9"
            ]
        );
    }

    #[test]
    fn threads_do_not_change_results() {
        let tup = t(&[3, 2]);
        let one = certify_bounded(&tup, DomainKind::Integers, 3).unwrap();
        for k in [2, 8] {
            let many = Searcher::new(DomainKind::Integers, 3).threads(k).certify(&tup).unwrap();
            assert_eq!(one, many);
        }
    }

    #[test]
    fn shell_ordered_solving() {
        // y1 + y1 = y2, y2 * y2 = y3: least nonzero solutions in order
        let mut r = RelationSystem::empty(3);
        r.insert(Relation::Add(1, 1, 2)).unwrap();
        r.insert(Relation::Mul(2, 2, 3)).unwrap();
        let got: Vec<_> = solve_in_shell_order(&r, DomainKind::Integers, 16).collect();
        assert_eq!(got, vec![t(&[0, 0, 0]), t(&[-1, -2, 4]), t(&[1, 2, 4]), t(&[-2, -4, 16]), t(&[2, 4, 16])]);
    }
}
