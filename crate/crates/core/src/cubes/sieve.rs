//! Congruence sieves on the height.
//!
//! Since `x³ ≡ x (mod 6)`, every representation satisfies `t ≡ n (mod 6)`.
//! [`LEMMA1_TABLE`] lists the same fact row by row, indexed by `n mod 9` and
//! by `k mod 4` where `n = 9k + (n mod 9)`. Rows for `n ≡ 4, 5 (mod 9)` are
//! absent: those `n` are never sums of three cubes.

use std::collections::BTreeSet;

use crate::scalar::{ops, Integral};

/// One row: `n = 9k + n_mod9` with `k ≡ k_mod4 (mod 4)` forces
/// `t ≡ t_mod6 (mod 6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeightResidueRule {
    pub n_mod9: u8,
    pub k_mod4: u8,
    pub t_mod6: u8,
}

const fn rule(n_mod9: u8, k_mod4: u8, t_mod6: u8) -> HeightResidueRule {
    HeightResidueRule {
        n_mod9,
        k_mod4,
        t_mod6,
    }
}

pub const LEMMA1_TABLE: [HeightResidueRule; 28] = [
    rule(0, 0, 0),
    rule(0, 1, 3),
    rule(0, 2, 0),
    rule(0, 3, 3),
    rule(1, 0, 1),
    rule(1, 1, 4),
    rule(1, 2, 1),
    rule(1, 3, 4),
    rule(2, 0, 2),
    rule(2, 1, 5),
    rule(2, 2, 2),
    rule(2, 3, 5),
    rule(3, 0, 3),
    rule(3, 1, 0),
    rule(3, 2, 3),
    rule(3, 3, 0),
    rule(6, 0, 0),
    rule(6, 1, 3),
    rule(6, 2, 0),
    rule(6, 3, 3),
    rule(7, 0, 1),
    rule(7, 1, 4),
    rule(7, 2, 1),
    rule(7, 3, 4),
    rule(8, 0, 2),
    rule(8, 1, 5),
    rule(8, 2, 2),
    rule(8, 3, 5),
];

/// Height residue from the literal table, `None` for `n ≡ ±4 (mod 9)`.
pub fn lemma1_rule<T: Integral>(n: &T) -> Option<u8> {
    let n_mod9 = ops::residue(n, 9);
    let k = (n.clone() - ops::lit::<T>(n_mod9)) / ops::lit::<T>(9);
    let k_mod4 = ops::residue(&k, 4);
    LEMMA1_TABLE
        .iter()
        .find(|r| i64::from(r.n_mod9) == n_mod9 && i64::from(r.k_mod4) == k_mod4)
        .map(|r| r.t_mod6)
}

/// The residue of `t` mod 6 compatible with `6 | n − t³`, or `None` when
/// `n ≡ ±4 (mod 9)`.
pub fn height_residue<T: Integral>(n: &T) -> Option<u8> {
    if matches!(ops::residue(n, 9), 4 | 5) {
        return None;
    }
    Some(ops::residue(n, 6) as u8)
}

/// Which square-difference parametrization of `4d = y² − k²` is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parametrization {
    /// `y = 2u + 1`, `k = 2v + 1`, `d = u² + u − v² − v`.
    Odd,
    /// `y = 2u`, `k = 2v`, `d = u² − v²`.
    Even,
}

/// Reachable residues of
/// `n ≡ 3·y·d − 6t·d + t³ (mod 18)` over `u, v ∈ 0..18`, given `t³` and
/// `6t` modulo 18.
pub fn theorem5_residue_table(
    t_cubed_mod18: i64,
    six_t_mod18: i64,
    form: Parametrization,
) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for u in 0..18_i64 {
        for v in 0..18_i64 {
            let (y, d) = match form {
                Parametrization::Odd => (2 * u + 1, u * u + u - v * v - v),
                Parametrization::Even => (2 * u, u * u - v * v),
            };
            let n = 3 * y * d - six_t_mod18 * d + t_cubed_mod18;
            out.insert(n.rem_euclid(18));
        }
    }
    out
}

/// One case of the mod-18 argument: an excluded class of `n`, the induced
/// `t³` and `6t` residues, and the residues the parametrizations can reach.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCase {
    pub n_mod18: i64,
    pub t_mod6: i64,
    pub t_cubed_mod18: i64,
    pub six_t_mod18: i64,
    pub claimed: BTreeSet<i64>,
}

/// The four cases `n ≡ 4, 13, 14, 5 (mod 18)`.
pub fn theorem5_cases() -> Vec<ResidueCase> {
    let case = |n_mod18: i64, t_mod6: i64, claimed: &[i64]| ResidueCase {
        n_mod18,
        t_mod6,
        t_cubed_mod18: (t_mod6 * t_mod6 * t_mod6).rem_euclid(18),
        six_t_mod18: (6 * t_mod6).rem_euclid(18),
        claimed: claimed.iter().copied().collect(),
    };
    vec![
        case(4, 4, &[10, 16]),
        case(13, 1, &[1, 7]),
        case(14, 5, &[11, 17]),
        // the last case states only "no solution"; the reachable set is
        // {2, 8}, which excludes 5
        case(5, 2, &[2, 8]),
    ]
}
