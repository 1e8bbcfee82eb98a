//! Numeric bound for percentage arithmetic.
//!
//! Aggregation is written once over [`Scalar`] so the same code runs on
//! `f64`, `f32` or exact rationals such as `num_rational::Ratio<i64>`.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, ToPrimitive};

pub trait Scalar:
    Num + FromPrimitive + ToPrimitive + Copy + PartialOrd + Debug + Send + Sync
{
    fn from_count(count: u64) -> Self {
        Self::from_u64(count).expect("count representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Num + FromPrimitive + ToPrimitive + Copy + PartialOrd + Debug + Send + Sync
{
}
