//! The partition polynomial ε_λ(x) and polynomial equivalence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gcd_symm::{g_vector, GVector};
use crate::partitions::Partition;
use crate::scalar::checked;
use crate::Int;

/// Monic integer polynomial of degree s-1, coefficients low degree first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionPolynomial(Vec<Int>);

impl PartitionPolynomial {
    /// `c_i = (-1)^{s-1-i} g_{i+1} / g_s`.
    pub fn from_g_vector(g: &GVector) -> Result<Self> {
        let s = g.len();
        let gs = g.last();
        let coefficients = (0..s)
            .map(|i| {
                let num = g.get(i + 1);
                if num % gs != 0 {
                    return Err(Error::Consistency(format!(
                        "g_s = {gs} does not divide g_{} = {num}",
                        i + 1
                    )));
                }
                let c = num / gs;
                Ok(if (s - 1 - i).is_multiple_of(2) { c } else { -c })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PartitionPolynomial(coefficients))
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    /// Horner evaluation in checked integers.
    pub fn eval(&self, x: Int) -> Result<Int> {
        self.0.iter().rev().try_fold(0 as Int, |acc, &c| {
            checked::add(checked::mul(acc, x, "polynomial evaluation")?, c, "polynomial evaluation")
        })
    }
}

/// Renders as e.g. `x^2 - 3x + 4`.
impl fmt::Display for PartitionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (power, magnitude) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "x")?,
                (1, m) => write!(f, "{m}x")?,
                (p, 1) => write!(f, "x^{p}")?,
                (p, m) => write!(f, "{m}x^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartitionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ε({self})")
    }
}

pub fn epsilon(lambda: &Partition) -> Result<PartitionPolynomial> {
    PartitionPolynomial::from_g_vector(&g_vector(lambda)?)
}

pub fn epsilon_eval(p: &PartitionPolynomial, x: Int) -> Result<Int> {
    p.eval(x)
}

/// Polynomial equivalence. Partitions with different part counts have
/// polynomials of different degrees and are never equivalent; different
/// totals may still be equivalent.
pub fn equivalent(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.s() != mu.s() {
        return Ok(false);
    }
    Ok(epsilon(lambda)? == epsilon(mu)?)
}

/// `(-1)^{s-1} g_s ε_λ(1)`, the number of distinct eigenvalues of a
/// permutation matrix of cycle type λ.
pub fn distinct_eigenvalue_count(lambda: &Partition) -> Result<Int> {
    let g = g_vector(lambda)?;
    let eps = PartitionPolynomial::from_g_vector(&g)?;
    let signed = checked::mul(g.last(), eps.eval(1)?, "eigenvalue count")?;
    let count = if lambda.s() % 2 == 1 { signed } else { -signed };
    if count <= 0 {
        return Err(Error::Consistency(format!(
            "non-positive eigenvalue count {count} for {lambda}"
        )));
    }
    Ok(count)
}
