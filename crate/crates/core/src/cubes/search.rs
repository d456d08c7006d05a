use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::CubeTriple;
use crate::error::{Error, Result};
use crate::scalar::{ops, Integral};

/// Largest coordinate bound accepted by [`brute_cube_search`].
pub const MAX_SEARCH_BOUND: u64 = 10_000;

/// A representation of 3 with 21-digit coordinates.
pub const GIANT_TRIPLE: [&str; 3] = [
    "569936821221962380720",
    "-569936821113563493509",
    "-472715493453327032",
];

/// Every `(x, y, z)` with `|x|, |y|, |z| ≤ bound` and `x³ + y³ + z³ = n`,
/// sorted. Cubes are hashed; each `(x, y)` pair looks up `n − x³ − y³`.
pub fn brute_cube_search<T: Integral>(n: &T, bound: u64) -> Result<Vec<CubeTriple<T>>> {
    if bound > MAX_SEARCH_BOUND {
        return Err(Error::BoundTooLarge(bound));
    }
    let b = bound as i64;
    let max_cube = b * b * b;
    let Some(target) = n
        .to_i64()
        .filter(|v| v.unsigned_abs() <= 3 * max_cube as u64)
    else {
        return Ok(Vec::new());
    };
    let roots: HashMap<i64, i64> = (-b..=b).map(|z| (z * z * z, z)).collect();
    let found: Vec<(i64, i64, i64)> = (-b..=b)
        .into_par_iter()
        .flat_map_iter(|x| {
            let roots = &roots;
            let rest = target - x * x * x;
            (-b..=b).filter_map(move |y| {
                let want = rest - y * y * y;
                if want.abs() > max_cube {
                    return None;
                }
                roots.get(&want).map(|&z| (x, y, z))
            })
        })
        .collect();
    Ok(found
        .into_iter()
        .map(|(x, y, z)| CubeTriple::new(ops::lit(x), ops::lit(y), ops::lit(z)))
        .collect())
}

/// Exact check of `x³ + y³ + z³ = n` on decimal inputs.
pub fn verify_identity(x: &str, y: &str, z: &str, n: &str) -> bool {
    let parse = |s: &str| s.parse::<BigInt>().ok();
    match (parse(x), parse(y), parse(z), parse(n)) {
        (Some(x), Some(y), Some(z), Some(n)) => {
            CubeTriple::new(x, y, z).cube_sum().is_ok_and(|s| s == n)
        }
        _ => false,
    }
}

/// Verifies the 21-digit representation of 3.
pub fn verify_giant() -> bool {
    verify_identity(GIANT_TRIPLE[0], GIANT_TRIPLE[1], GIANT_TRIPLE[2], "3")
}
