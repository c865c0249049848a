//! Checked exact integer scalars.
//!
//! The elimination kernels in [`crate::linalg`] are written against
//! [`ExactInt`] so the same code runs at 64 bits and, when intermediate
//! minors outgrow that, again at 128 bits.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, PrimInt, Signed};

use crate::error::{Error, Result};

pub trait ExactInt:
    PrimInt
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Width of the type in bits.
    fn bits() -> u32 {
        Self::zero().count_zeros()
    }

    fn add_c(self, rhs: Self) -> Result<Self> {
        self.checked_add(&rhs)
            .ok_or_else(|| overflow::<Self>("addition"))
    }

    fn sub_c(self, rhs: Self) -> Result<Self> {
        self.checked_sub(&rhs)
            .ok_or_else(|| overflow::<Self>("subtraction"))
    }

    fn mul_c(self, rhs: Self) -> Result<Self> {
        self.checked_mul(&rhs)
            .ok_or_else(|| overflow::<Self>("multiplication"))
    }

    /// Division that must leave no remainder.
    fn div_exactly(self, rhs: Self) -> Result<Self> {
        let q = self
            .checked_div(&rhs)
            .ok_or_else(|| overflow::<Self>("division"))?;
        if q * rhs != self {
            return Err(Error::Consistency(format!(
                "inexact division {self} / {rhs}"
            )));
        }
        Ok(q)
    }
}

impl ExactInt for i32 {}
impl ExactInt for i64 {}
impl ExactInt for i128 {}

fn overflow<T: ExactInt>(op: &str) -> Error {
    Error::overflow(format!("{}-bit {op}", T::bits()))
}

/// Checked helpers on the crate's default scalar.
pub(crate) mod checked {
    use crate::error::{Error, Result};
    use crate::Int;

    pub fn add(a: Int, b: Int, ctx: &str) -> Result<Int> {
        a.checked_add(b).ok_or_else(|| Error::overflow(ctx))
    }

    pub fn sub(a: Int, b: Int, ctx: &str) -> Result<Int> {
        a.checked_sub(b).ok_or_else(|| Error::overflow(ctx))
    }

    pub fn mul(a: Int, b: Int, ctx: &str) -> Result<Int> {
        a.checked_mul(b).ok_or_else(|| Error::overflow(ctx))
    }

    pub fn sum<I: IntoIterator<Item = Int>>(it: I, ctx: &str) -> Result<Int> {
        it.into_iter().try_fold(0, |acc, x| add(acc, x, ctx))
    }
}
