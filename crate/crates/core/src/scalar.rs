//! Scalar abstraction: the toolkit is generic over the floating-point type.

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar usable throughout the toolkit (`f32` or `f64`).
pub trait Real:
    nalgebra::RealField
    + Float
    + FromPrimitive
    + ToPrimitive
    + Copy
    + Default
    + std::iter::Sum
    + serde::Serialize
    + serde::de::DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Lift an `f64` constant into this scalar type.
    fn of(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("constant not representable")
    }

    fn as_f64(self) -> f64 {
        <Self as ToPrimitive>::to_f64(&self).expect("scalar not representable as f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

// `Float` and `RealField` overlap on several method names; these free helpers
// keep generic call sites unambiguous.

#[inline]
pub fn rabs<T: Real>(x: T) -> T {
    Float::abs(x)
}

#[inline]
pub fn rmax<T: Real>(a: T, b: T) -> T {
    Float::max(a, b)
}

#[inline]
pub fn rmin<T: Real>(a: T, b: T) -> T {
    Float::min(a, b)
}

#[inline]
pub fn rsqrt<T: Real>(x: T) -> T {
    Float::sqrt(x)
}

#[inline]
pub fn rexp<T: Real>(x: T) -> T {
    Float::exp(x)
}

#[inline]
pub fn rln<T: Real>(x: T) -> T {
    Float::ln(x)
}

#[inline]
pub fn rpowf<T: Real>(x: T, e: T) -> T {
    Float::powf(x, e)
}

#[inline]
pub fn rpowi<T: Real>(x: T, e: i32) -> T {
    Float::powi(x, e)
}

#[inline]
pub fn rfloor<T: Real>(x: T) -> T {
    Float::floor(x)
}

#[inline]
pub fn rceil<T: Real>(x: T) -> T {
    Float::ceil(x)
}

#[inline]
pub fn rfinite<T: Real>(x: T) -> bool {
    Float::is_finite(x)
}

/// Relative closeness under tolerance `tol`, with an absolute fallback near zero.
pub fn close<T: Real>(a: T, b: T, tol: T) -> bool {
    let scale = rmax(rmax(rabs(a), rabs(b)), T::one());
    rabs(a - b) <= tol * scale
}
