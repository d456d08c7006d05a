//! Representations `x³ + y³ + z³ = n` with height `x + y + z = t`.
//!
//! Shifting every coordinate by the height, `A = x − t` and so on, turns the
//! pair of equations into `ABC = (n − t³)/3`, `A + B + C = −2t`, which the
//! [`product_sum`](crate::product_sum) kernel solves exactly. The case
//! `n = t³` degenerates (`(t, a, −a)` works for every `a`) and is reported as
//! [`Outcome::InfiniteFamily`].

mod profile;
mod search;
mod sieve;
mod witness;

pub use profile::{euler_identity_holds, symmetric_profile, SymmetricProfile};
pub use search::{
    brute_cube_search, verify_giant, verify_identity, GIANT_TRIPLE, MAX_SEARCH_BOUND,
};
pub use sieve::{
    height_residue, lemma1_rule, theorem5_cases, theorem5_residue_table, HeightResidueRule,
    Parametrization, ResidueCase, LEMMA1_TABLE,
};
pub use witness::{
    parametric_witness, parametric_witness_naive, witness_bound, Witness, WitnessForm,
};

use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::product_sum::ProductSumInstance;
use crate::scalar::{ops, Integral};

/// A `(t, n)` query.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepQuery<T> {
    pub n: T,
    pub t: T,
}

/// An ordered solution `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeTriple<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

/// Why a query has no representations. Variants are listed in the order the
/// sieves are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmptyReason {
    /// `3 ∤ n − t³`.
    NotDivisibleBy3,
    /// `N₁ = (n − t³)/3` is odd, so `A + B + C` is odd but `−2t` is even.
    OddN1,
    /// `n ≡ ±4 (mod 9)`.
    Mod9Obstruction,
    /// The divisor scan found nothing.
    NoWitness,
}

impl EmptyReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            EmptyReason::NotDivisibleBy3 => "not_divisible_by_3",
            EmptyReason::OddN1 => "odd_n1",
            EmptyReason::Mod9Obstruction => "mod9_obstruction",
            EmptyReason::NoWitness => "no_witness",
        }
    }
}

impl fmt::Display for EmptyReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classified result of a query. `Finite` always carries at least one
/// representation; empty answers go through `Empty`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<V> {
    Finite(V),
    InfiniteFamily,
    Empty(EmptyReason),
}

/// Query result carrying the representations themselves.
pub type RepResult<T> = Outcome<Vec<CubeTriple<T>>>;

impl<V> Outcome<V> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Outcome::InfiniteFamily)
    }
}

impl Outcome<u64> {
    /// Count with the infinite family mapped to zero.
    pub fn count_or_zero(&self) -> u64 {
        match self {
            Outcome::Finite(c) => *c,
            _ => 0,
        }
    }
}

impl<T: Integral> CubeTriple<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        CubeTriple { x, y, z }
    }

    pub fn height(&self) -> Result<T> {
        ops::add(&ops::add(&self.x, &self.y)?, &self.z)
    }

    pub fn cube_sum(&self) -> Result<T> {
        ops::add(
            &ops::add(&ops::cube(&self.x)?, &ops::cube(&self.y)?)?,
            &ops::cube(&self.z)?,
        )
    }

    pub fn l1_norm(&self) -> Result<T> {
        ops::add(
            &ops::add(&ops::abs(&self.x)?, &ops::abs(&self.y)?)?,
            &ops::abs(&self.z)?,
        )
    }
}

impl<T: fmt::Display> fmt::Display for CubeTriple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl<T: Integral> RepQuery<T> {
    pub fn new(n: T, t: T) -> Self {
        RepQuery { n, t }
    }

    pub fn is_infinite_family(&self) -> Result<bool> {
        Ok(ops::cube(&self.t)? == self.n)
    }

    /// `N₁ = (n − t³)/3` when `3 | n − t³`.
    pub fn reduced_product(&self) -> Result<Option<T>> {
        let diff = ops::sub(&self.n, &ops::cube(&self.t)?)?;
        let three = ops::lit::<T>(3);
        Ok(diff.is_multiple_of(&three).then(|| diff / three))
    }

    /// The shifted product-sum problem `ABC = N₁`, `A + B + C = −2t`.
    pub fn instance(&self) -> Result<Option<ProductSumInstance<T>>> {
        match self.reduced_product()? {
            Some(n1) if !n1.is_zero() => {
                let s = ops::mul(&ops::lit(-2), &self.t)?;
                Ok(Some(ProductSumInstance::new(n1, s)?))
            }
            _ => Ok(None),
        }
    }

    /// Runs the sieve chain; `Ok(Ok(instance))` means the solver must decide.
    fn sieve(&self) -> Result<std::result::Result<ProductSumInstance<T>, Outcome<()>>> {
        if self.is_infinite_family()? {
            return Ok(Err(Outcome::InfiniteFamily));
        }
        let Some(n1) = self.reduced_product()? else {
            return Ok(Err(Outcome::Empty(EmptyReason::NotDivisibleBy3)));
        };
        if n1.is_odd() {
            return Ok(Err(Outcome::Empty(EmptyReason::OddN1)));
        }
        if matches!(ops::residue(&self.n, 9), 4 | 5) {
            return Ok(Err(Outcome::Empty(EmptyReason::Mod9Obstruction)));
        }
        let s = ops::mul(&ops::lit(-2), &self.t)?;
        Ok(Ok(ProductSumInstance::new(n1, s)?))
    }

    /// Number of representations at this height.
    pub fn count(&self) -> Result<Outcome<u64>> {
        Ok(match self.sieve()? {
            Err(o) => relabel(o),
            Ok(inst) => match inst.count_formula()? {
                0 => Outcome::Empty(EmptyReason::NoWitness),
                c => Outcome::Finite(c),
            },
        })
    }

    /// Representations at this height, lexicographically sorted.
    pub fn solve(&self) -> Result<RepResult<T>> {
        Ok(match self.sieve()? {
            Err(o) => relabel(o),
            Ok(inst) => {
                let mut out = inst
                    .enumerate()?
                    .into_iter()
                    .map(|p| {
                        Ok(CubeTriple::new(
                            ops::add(&p.a, &self.t)?,
                            ops::add(&p.b, &self.t)?,
                            ops::add(&p.c, &self.t)?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?;
                out.sort();
                if out.is_empty() {
                    Outcome::Empty(EmptyReason::NoWitness)
                } else {
                    Outcome::Finite(out)
                }
            }
        })
    }
}

fn relabel<V>(o: Outcome<()>) -> Outcome<V> {
    match o {
        Outcome::InfiniteFamily => Outcome::InfiniteFamily,
        Outcome::Empty(r) => Outcome::Empty(r),
        Outcome::Finite(()) => unreachable!("sieves never report a finite outcome"),
    }
}

/// Number of representations of `n` at height `t`.
pub fn rep_count<T: Integral>(q: &RepQuery<T>) -> Result<Outcome<u64>> {
    q.count()
}

/// Representations of `n` at height `t`, sorted; an error for `n = t³`.
pub fn rep_enumerate<T: Integral>(q: &RepQuery<T>) -> Result<Vec<CubeTriple<T>>> {
    match q.solve()? {
        Outcome::Finite(v) => Ok(v),
        Outcome::Empty(_) => Ok(Vec::new()),
        Outcome::InfiniteFamily => Err(Error::InfiniteFamily),
    }
}

/// `C(j, n)`: representations with height in `−j..=j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandCount<T> {
    /// Total over finite heights; infinite heights contribute zero.
    pub count: u64,
    pub infinite_heights: Vec<T>,
}

/// Sums [`rep_count`] over `t ∈ [−j, j]`, skipping heights with
/// `t ≢ n (mod 6)` without calling the solver.
pub fn band_count<T: Integral>(n: &T, j: u64) -> Result<BandCount<T>> {
    let j = i64::try_from(j).map_err(|_| Error::Overflow)?;
    let n6 = ops::residue(n, 6);
    let mut out = BandCount {
        count: 0,
        infinite_heights: Vec::new(),
    };
    for t in heights(n6, -j..=j) {
        let t: T = ops::lit(t);
        match rep_count(&RepQuery::new(n.clone(), t.clone()))? {
            Outcome::Finite(c) => out.count += c,
            Outcome::InfiniteFamily => out.infinite_heights.push(t),
            Outcome::Empty(_) => {}
        }
    }
    Ok(out)
}

/// Heights in `range` congruent to `residue (mod 6)`.
fn heights(residue: i64, range: RangeInclusive<i64>) -> impl Iterator<Item = i64> {
    let start = *range.start();
    let first = start + (residue - start).rem_euclid(6);
    (first..=*range.end()).step_by(6)
}
