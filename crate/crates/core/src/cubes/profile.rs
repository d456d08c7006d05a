use crate::error::{Error, Result};
use crate::scalar::{ops, Integral};

/// Elementary symmetric data of a representation `(x, y, z)` of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricProfile<T> {
    /// `x + y + z`
    pub t: T,
    /// `xy + yz + zx`
    pub r: T,
    /// `xyz`
    pub s: T,
    /// `x² + y² + z²`
    pub n1: T,
    /// `3s − n`
    pub p: T,
    /// `n1 − r`
    pub eps: T,
}

impl<T: Integral> SymmetricProfile<T> {
    /// Invariant checks, each named by the relation it tests. Returns the
    /// names of the relations that fail.
    pub fn violations(&self, n: &T) -> Result<Vec<&'static str>> {
        let mut bad = Vec::new();
        let two = ops::lit::<T>(2);
        let three = ops::lit::<T>(3);
        let t2 = ops::square(&self.t)?;
        if ops::sub(&t2, &ops::mul(&two, &self.r)?)? != self.n1 {
            bad.push("t² − 2r = n1");
        }
        let lhs = ops::add(
            &ops::sub(
                &ops::mul(&three, &self.s)?,
                &ops::mul(&three, &ops::mul(&self.r, &self.t)?)?,
            )?,
            &ops::cube(&self.t)?,
        )?;
        if lhs != *n {
            bad.push("3s − 3rt + t³ = n");
        }
        let t_form = ops::mul(&self.t, &ops::sub(&t2, &ops::mul(&three, &self.r)?)?)?;
        if t_form != ops::neg(&self.p)? {
            bad.push("t(t² − 3r) = −p");
        }
        if ops::abs(&self.r)? > self.n1 {
            bad.push("|r| ≤ n1");
        }
        if t2 > ops::mul(&three, &self.n1)? {
            bad.push("t² ≤ 3·n1");
        }
        if self.eps.is_negative() {
            bad.push("eps ≥ 0");
        }
        // n − 3s = t·eps
        if ops::sub(n, &ops::mul(&three, &self.s)?)? != ops::mul(&self.t, &self.eps)? {
            bad.push("n − 3s = t·eps");
        }
        Ok(bad)
    }
}

/// `x³ + y³ + z³ − 3xyz = (x + y + z)(x² + y² + z² − xy − yz − zx)`,
/// evaluated exactly.
pub fn euler_identity_holds<T: Integral>(x: &T, y: &T, z: &T) -> Result<bool> {
    let cubes = ops::add(&ops::add(&ops::cube(x)?, &ops::cube(y)?)?, &ops::cube(z)?)?;
    let xyz = ops::mul(&ops::mul(x, y)?, z)?;
    let lhs = ops::sub(&cubes, &ops::mul(&ops::lit(3), &xyz)?)?;
    let sum = ops::add(&ops::add(x, y)?, z)?;
    let squares = ops::add(
        &ops::add(&ops::square(x)?, &ops::square(y)?)?,
        &ops::square(z)?,
    )?;
    let pairs = ops::add(
        &ops::add(&ops::mul(x, y)?, &ops::mul(y, z)?)?,
        &ops::mul(z, x)?,
    )?;
    Ok(lhs == ops::mul(&sum, &ops::sub(&squares, &pairs)?)?)
}

/// Symmetric profile of a representation; fails when `x³ + y³ + z³ ≠ n`.
pub fn symmetric_profile<T: Integral>(x: &T, y: &T, z: &T, n: &T) -> Result<SymmetricProfile<T>> {
    let cubes = ops::add(&ops::add(&ops::cube(x)?, &ops::cube(y)?)?, &ops::cube(z)?)?;
    if cubes != *n {
        return Err(Error::NotASolution {
            x: x.to_string(),
            y: y.to_string(),
            z: z.to_string(),
            n: n.to_string(),
        });
    }
    let t = ops::add(&ops::add(x, y)?, z)?;
    let r = ops::add(
        &ops::add(&ops::mul(x, y)?, &ops::mul(y, z)?)?,
        &ops::mul(z, x)?,
    )?;
    let s = ops::mul(&ops::mul(x, y)?, z)?;
    let n1 = ops::add(
        &ops::add(&ops::square(x)?, &ops::square(y)?)?,
        &ops::square(z)?,
    )?;
    let p = ops::sub(&ops::mul(&ops::lit(3), &s)?, n)?;
    let eps = ops::sub(&n1, &r)?;
    Ok(SymmetricProfile {
        t,
        r,
        s,
        n1,
        p,
        eps,
    })
}
