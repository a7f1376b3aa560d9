//! The three quartic equations behind the example tuples, their bounded
//! searches, the example tuples themselves, and the map from quartic
//! solutions to solutions of the 20-entry tuple's relation system.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{NumOps, ToPrimitive, Zero};

use crate::crt::lemma_pair;
use crate::error::{Error, Result};
use crate::relations::Triple;
use crate::tuple::{Assignment, DomainKind, IntTuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedEquation {
    /// `x^2(x+1)^2 + y^2(y+1)^2 = z^2(z+1)^2`
    Quartic,
    /// `(x+14)^2(x+16)^2 + y^2(y+2)^2 = z^2(z+2)^2`
    ShiftedQuartic,
    /// `(x^2-1)^2 + (y^2-1)^2 = (z^2-1)^2`
    SquaresMinusOne,
}

/// A solution `(x, y, z)`.
pub type Solution = (u64, u64, u64);

impl NamedEquation {
    pub const ALL: [NamedEquation; 3] = [
        NamedEquation::Quartic,
        NamedEquation::ShiftedQuartic,
        NamedEquation::SquaresMinusOne,
    ];

    /// Smallest value each variable may take. The squares-minus-one form is
    /// studied over integers greater than 1; the other two over positive integers.
    pub fn domain_floor(self) -> u64 {
        match self {
            NamedEquation::SquaresMinusOne => 2,
            _ => 1,
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            NamedEquation::Quartic => "q1",
            NamedEquation::ShiftedQuartic => "q2",
            NamedEquation::SquaresMinusOne => "sq1",
        }
    }

    fn x_side<T: Term>(self, v: &T) -> T {
        match self {
            NamedEquation::ShiftedQuartic => {
                let p = (v.clone() + T::from(14i64)) * (v.clone() + T::from(16i64));
                p.clone() * p
            }
            _ => self.z_side(v),
        }
    }

    fn y_side<T: Term>(self, v: &T) -> T {
        self.z_side(v)
    }

    fn z_side<T: Term>(self, v: &T) -> T {
        let p = match self {
            NamedEquation::Quartic => v.clone() * (v.clone() + T::from(1i64)),
            NamedEquation::ShiftedQuartic => v.clone() * (v.clone() + T::from(2i64)),
            NamedEquation::SquaresMinusOne => v.clone() * v.clone() - T::from(1i64),
        };
        p.clone() * p
    }

    /// Whether `(x, y, z)` satisfies the identity, in exact arithmetic.
    pub fn holds(self, x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
        self.x_side(x) + self.y_side(y) == self.z_side(z)
    }
}

impl fmt::Display for NamedEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedEquation::Quartic => "x^2(x+1)^2 + y^2(y+1)^2 = z^2(z+1)^2",
            NamedEquation::ShiftedQuartic => "(x+14)^2(x+16)^2 + y^2(y+2)^2 = z^2(z+2)^2",
            NamedEquation::SquaresMinusOne => "(x^2-1)^2 + (y^2-1)^2 = (z^2-1)^2",
        })
    }
}

impl FromStr for NamedEquation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|e| e.cli_name() == s)
            .ok_or_else(|| format!("unknown equation `{s}` (expected q1, q2 or sq1)"))
    }
}

/// Exact integer arithmetic usable as a tabulation key.
trait Term: NumOps + Clone + Eq + Hash + From<i64> + Send + Sync {}
impl Term for i128 {}
impl Term for BigInt {}

/// All solutions with `floor <= x, y, z <= bound`.
pub fn search_equation(eq: NamedEquation, bound: u64) -> Result<BTreeSet<Solution>> {
    search_equation_threads(eq, bound, 1)
}

/// As [`search_equation`], sharding the `x` range across `threads` workers.
pub fn search_equation_threads(
    eq: NamedEquation,
    bound: u64,
    threads: usize,
) -> Result<BTreeSet<Solution>> {
    let floor = eq.domain_floor();
    if bound < floor {
        return Err(Error::Precondition(format!(
            "bound {bound} is below the domain floor {floor} of {}",
            eq.cli_name()
        )));
    }
    // Every side is increasing on the domain, so the largest sum decides
    // whether i128 can hold all intermediate values.
    let top = BigInt::from(bound);
    let widest = eq.x_side(&top) + eq.y_side(&top);
    if widest.to_i128().is_some() {
        Ok(tabulate::<i128>(eq, floor, bound, threads))
    } else {
        Ok(tabulate::<BigInt>(eq, floor, bound, threads))
    }
}

fn tabulate<T: Term>(eq: NamedEquation, floor: u64, bound: u64, threads: usize) -> BTreeSet<Solution> {
    let as_t = |v: u64| T::from(i64::try_from(v).expect("bound fits in i64"));
    let mut z_table: HashMap<T, Vec<u64>> = HashMap::with_capacity((bound - floor + 1) as usize);
    for z in floor..=bound {
        z_table.entry(eq.z_side(&as_t(z))).or_default().push(z);
    }
    let y_sides: Vec<(u64, T)> = (floor..=bound).map(|y| (y, eq.y_side(&as_t(y)))).collect();

    let threads = threads.max(1);
    let work = |shard: u64| {
        let mut found = Vec::new();
        let mut x = floor + shard;
        while x <= bound {
            let xs = eq.x_side(&as_t(x));
            for (y, ys) in &y_sides {
                if let Some(zs) = z_table.get(&(xs.clone() + ys.clone())) {
                    found.extend(zs.iter().map(|&z| (x, *y, z)));
                }
            }
            x += threads as u64;
        }
        found
    };
    if threads == 1 {
        return work(0).into_iter().collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads as u64)
            .map(|shard| {
                let work = &work;
                scope.spawn(move || work(shard))
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("equation worker panicked"))
            .collect()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PaperTuple {
    /// 20 entries, integer domain, built around the quartic and the CRT gadget.
    Theorem1,
    /// 17 entries, positive integers, built around the shifted quartic.
    Theorem2,
    /// 13 entries, positive integers, the quartic.
    B13Positive,
    /// 15 entries, non-negative integers, the quartic.
    B15Natural,
}

impl PaperTuple {
    pub const ALL: [PaperTuple; 4] = [
        PaperTuple::Theorem1,
        PaperTuple::Theorem2,
        PaperTuple::B13Positive,
        PaperTuple::B15Natural,
    ];

    /// The domain the tuple's membership statement is about.
    pub fn domain(self) -> DomainKind {
        match self {
            PaperTuple::Theorem1 => DomainKind::Integers,
            PaperTuple::Theorem2 | PaperTuple::B13Positive => DomainKind::Positive,
            PaperTuple::B15Natural => DomainKind::Naturals,
        }
    }

    /// The equation whose solution set the membership statement encodes.
    pub fn equation(self) -> NamedEquation {
        match self {
            PaperTuple::Theorem2 => NamedEquation::ShiftedQuartic,
            _ => NamedEquation::Quartic,
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            PaperTuple::Theorem1 => "t1",
            PaperTuple::Theorem2 => "t2",
            PaperTuple::B13Positive => "b13",
            PaperTuple::B15Natural => "b15",
        }
    }
}

impl FromStr for PaperTuple {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|p| p.cli_name() == s)
            .ok_or_else(|| format!("unknown tuple `{s}` (expected t1, t2, b13 or b15)"))
    }
}

/// CRT parameters of the 20-entry tuple for `132 * 133 * 143 * 144`.
pub const THEOREM1_B: i64 = 200_526_827;
pub const THEOREM1_A: i64 = 667_378_345;

pub fn paper_tuple(which: PaperTuple) -> IntTuple {
    let b = |v: i64| BigInt::from(v);
    let sq = |v: i64| BigInt::from(v) * BigInt::from(v);
    let entries: Vec<BigInt> = match which {
        PaperTuple::Theorem1 => {
            let bb = b(THEOREM1_B);
            let gadget = (&bb * 2 - 1) * (&bb * 3 - 1);
            vec![
                b(164 * 165),
                sq(164 * 165),
                b(164),
                b(165),
                b(132),
                b(133),
                b(132 * 133),
                sq(132 * 133),
                b(143),
                b(144),
                b(143 * 144),
                sq(143 * 144),
                b(132 * 133 * 143 * 144),
                bb.clone(),
                &bb * 2,
                &bb * 2 - 1,
                &bb * 3 - 1,
                gadget,
                b(THEOREM1_A),
                b(1),
            ]
        }
        PaperTuple::Theorem2 => vec![
            b(328),
            b(330),
            b(328 * 330),
            sq(328 * 330),
            b(264),
            b(266),
            b(264 * 266),
            sq(264 * 266),
            b(286),
            b(288),
            b(286 * 288),
            sq(286 * 288),
            b(250),
            b(16),
            b(4),
            b(2),
            b(1),
        ],
        PaperTuple::B13Positive => vec![
            b(164),
            b(165),
            b(164 * 165),
            sq(164 * 165),
            b(132),
            b(133),
            b(132 * 133),
            sq(132 * 133),
            b(143),
            b(144),
            b(143 * 144),
            sq(143 * 144),
            b(1),
        ],
        PaperTuple::B15Natural => vec![
            b(164),
            b(165),
            b(164 * 165),
            sq(164 * 165),
            b(131),
            b(132),
            b(133),
            b(132 * 133),
            sq(132 * 133),
            b(142),
            b(143),
            b(144),
            b(143 * 144),
            sq(143 * 144),
            b(1),
        ],
    };
    IntTuple::new(entries).expect("non-empty")
}

/// Recorded scan listings `(additive, multiplicative)` for the 20 and 17 entry
/// tuples, products scanned with `j < n`.
pub fn paper_display_fixture(which: PaperTuple) -> Option<(&'static [Triple], &'static [Triple])> {
    match which {
        PaperTuple::Theorem1 => Some((THEOREM1_ADDS, THEOREM1_MULS)),
        PaperTuple::Theorem2 => Some((THEOREM2_ADDS, THEOREM2_MULS)),
        _ => None,
    }
}

const THEOREM1_ADDS: &[Triple] = &[
    [3, 20, 4],
    [5, 20, 6],
    [8, 12, 2],
    [9, 20, 10],
    [14, 14, 15],
    [14, 16, 17],
    [16, 20, 15],
];
const THEOREM1_MULS: &[Triple] = &[
    [1, 1, 2],
    [3, 4, 1],
    [5, 6, 7],
    [7, 7, 8],
    [7, 11, 13],
    [9, 10, 11],
    [11, 11, 12],
    [13, 19, 18],
    [16, 17, 18],
];
const THEOREM2_ADDS: &[Triple] = &[
    [1, 16, 2],
    [5, 16, 6],
    [8, 12, 4],
    [9, 16, 10],
    [13, 14, 6],
    [16, 16, 15],
    [17, 17, 16],
];
const THEOREM2_MULS: &[Triple] = &[
    [1, 2, 3],
    [3, 3, 4],
    [5, 6, 7],
    [7, 7, 8],
    [9, 10, 11],
    [11, 11, 12],
    [15, 15, 14],
    [16, 16, 15],
];

/// Fill the 20-entry template from a solution of the quartic with
/// `x(x+1)y(y+1) != 0`: slots 1 to 13 follow the pattern of the tuple with
/// `(x, y, z)` in place of `(132, 143, 164)`, slots 14 to 19 come from the
/// CRT construction for slot 13, and slot 20 is 1.
pub fn complete_witness_theorem1(x: &BigInt, y: &BigInt, z: &BigInt) -> Result<Assignment> {
    if !NamedEquation::Quartic.holds(x, y, z) {
        return Err(Error::Precondition(format!(
            "({x}, {y}, {z}) does not solve {}",
            NamedEquation::Quartic
        )));
    }
    let pronic = |v: &BigInt| -> BigInt { v * (v + 1) };
    let (px, py, pz) = (pronic(x), pronic(y), pronic(z));
    let product: BigInt = &px * &py;
    if product.is_zero() {
        return Err(Error::Precondition(format!(
            "x(x+1)y(y+1) = 0 for ({x}, {y}, {z})"
        )));
    }
    let cert = lemma_pair(&product)?;
    let bb = cert.b;
    let entries = vec![
        pz.clone(),
        &pz * &pz,
        z.clone(),
        z + 1,
        x.clone(),
        x + 1,
        px.clone(),
        &px * &px,
        y.clone(),
        y + 1,
        py.clone(),
        &py * &py,
        product,
        bb.clone(),
        &bb * 2,
        &bb * 2 - 1,
        &bb * 3 - 1,
        (&bb * 2 - 1) * (&bb * 3 - 1),
        cert.a,
        BigInt::from(1),
    ];
    Ok(IntTuple::new(entries).expect("non-empty").to_assignment())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(eq: NamedEquation, bound: u64) -> BTreeSet<Solution> {
        let mut out = BTreeSet::new();
        let f = eq.domain_floor();
        for x in f..=bound {
            for y in f..=bound {
                for z in f..=bound {
                    if eq.holds(&x.into(), &y.into(), &z.into()) {
                        out.insert((x, y, z));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn small_bound_matches_triple_loop() {
        for eq in NamedEquation::ALL {
            for bound in [2, 14, 40] {
                assert_eq!(search_equation(eq, bound).unwrap(), naive(eq, bound), "{eq:?} {bound}");
            }
        }
        assert!(search_equation(NamedEquation::Quartic, 10).unwrap().is_empty());
        assert_eq!(
            search_equation(NamedEquation::SquaresMinusOne, 14).unwrap(),
            BTreeSet::from([(10, 13, 14), (13, 10, 14)])
        );
    }

    #[test]
    fn big_and_fixed_width_paths_agree() {
        for eq in NamedEquation::ALL {
            let fast = tabulate::<i128>(eq, eq.domain_floor(), 50, 1);
            let slow = tabulate::<BigInt>(eq, eq.domain_floor(), 50, 3);
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn bound_below_floor() {
        assert!(search_equation(NamedEquation::SquaresMinusOne, 1).is_err());
        assert!(search_equation(NamedEquation::Quartic, 0).is_err());
        assert!(search_equation(NamedEquation::Quartic, 1).unwrap().is_empty());
    }

    #[test]
    fn names_round_trip() {
        for eq in NamedEquation::ALL {
            assert_eq!(eq.cli_name().parse::<NamedEquation>().unwrap(), eq);
        }
        for p in PaperTuple::ALL {
            assert_eq!(p.cli_name().parse::<PaperTuple>().unwrap(), p);
        }
        assert!("q3".parse::<NamedEquation>().is_err());
    }

    #[test]
    fn tuple_shapes() {
        let t1 = paper_tuple(PaperTuple::Theorem1);
        assert_eq!(t1.arity(), 20);
        assert_eq!(t1.get(1), &BigInt::from(27060));
        assert_eq!(t1.get(2), &BigInt::from(732_243_600));
        assert_eq!(t1.get(19), &BigInt::from(THEOREM1_A));
        let t2 = paper_tuple(PaperTuple::Theorem2);
        assert_eq!(t2.arity(), 17);
        assert_eq!(&t2.entries()[12..], IntTuple::from_i64s(&[250, 16, 4, 2, 1]).entries());
        assert_eq!(paper_tuple(PaperTuple::B13Positive).arity(), 13);
        assert_eq!(paper_tuple(PaperTuple::B15Natural).arity(), 15);
    }

    #[test]
    fn template_reproduces_theorem1_tuple() {
        let a = complete_witness_theorem1(&132.into(), &143.into(), &164.into()).unwrap();
        assert_eq!(a, paper_tuple(PaperTuple::Theorem1).to_assignment());
    }

    #[test]
    fn template_preconditions() {
        let err = complete_witness_theorem1(&1.into(), &2.into(), &3.into()).unwrap_err();
        assert!(matches!(err, Error::Precondition(m) if m.contains("does not solve")));
        // 0 + f(y) = f(y) is a solution with a zero product
        let err = complete_witness_theorem1(&0.into(), &5.into(), &5.into()).unwrap_err();
        assert!(matches!(err, Error::Precondition(m) if m.contains("= 0")));
    }
}
