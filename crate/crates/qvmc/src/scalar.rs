//! Scalar abstraction for the numeric core.
//!
//! Everything numerical in this crate is generic over [`Real`], which is
//! satisfied by `f32` and `f64`. Complex arithmetic uses
//! [`num_complex::Complex<T>`]; transcendental functions on complex values
//! come from `nalgebra::ComplexField`, which is implemented for
//! `Complex<T: RealField>`.

use nalgebra::RealField;
use num_traits::{FromPrimitive, Num, ToPrimitive};
use rand::Rng;
use rand_distr::StandardNormal;

/// Real scalar type the engine is generic over.
///
/// `RealField` supplies field operations and transcendentals; the extra
/// items cover IEEE specials and RNG sampling, which `RealField` does not
/// expose.
pub trait Real:
    RealField + Num + FromPrimitive + ToPrimitive + Copy + Default + Send + Sync + 'static
{
    fn infinity() -> Self;
    fn neg_infinity() -> Self;
    fn finite(self) -> bool;
    fn nan() -> Self;
    /// Draw from the standard normal distribution.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;
    /// Draw uniformly from `[0, 1)`.
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Real for $t {
            #[inline]
            fn infinity() -> Self {
                <$t>::INFINITY
            }
            #[inline]
            fn neg_infinity() -> Self {
                <$t>::NEG_INFINITY
            }
            #[inline]
            fn finite(self) -> bool {
                self.is_finite()
            }
            #[inline]
            fn nan() -> Self {
                <$t>::NAN
            }
            #[inline]
            fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rng.sample(StandardNormal)
            }
            #[inline]
            fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rng.random()
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);

/// Shorthand for converting an `f64` literal into the working scalar type.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}

/// Numerically careful sum of a slice: recursive pairwise splitting down to
/// small blocks. Keeps the result stable (to ~1e-12 relative) under
/// permutations of the input, which the estimator reproducibility contract
/// relies on.
pub fn pairwise_sum<T, F>(n: usize, f: F) -> T
where
    T: Copy + num_traits::Zero + core::ops::Add<Output = T>,
    F: Fn(usize) -> T + Copy,
{
    const BLOCK: usize = 64;
    fn go<T, F>(lo: usize, hi: usize, f: F) -> T
    where
        T: Copy + num_traits::Zero + core::ops::Add<Output = T>,
        F: Fn(usize) -> T + Copy,
    {
        if hi - lo <= BLOCK {
            let mut acc = T::zero();
            for i in lo..hi {
                acc = acc + f(i);
            }
            acc
        } else {
            let mid = lo + (hi - lo) / 2;
            go(lo, mid, f) + go(mid, hi, f)
        }
    }
    if n == 0 {
        T::zero()
    } else {
        go(0, n, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_sum_matches_naive_on_integers() {
        let v: Vec<f64> = (0..1000).map(|i| i as f64).collect();
        let s = pairwise_sum(v.len(), |i| v[i]);
        assert_eq!(s, 499_500.0);
    }

    #[test]
    fn pairwise_sum_permutation_stable() {
        let mut v: Vec<f64> = (0..5000).map(|i| ((i * 2654435761) % 1000) as f64 * 1e-3 + 1e6).collect();
        let s1 = pairwise_sum(v.len(), |i| v[i]);
        v.reverse();
        let s2 = pairwise_sum(v.len(), |i| v[i]);
        assert!((s1 - s2).abs() / s1.abs() < 1e-12);
    }

    #[test]
    fn generic_normal_draws_differ_between_types() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let a: f64 = Real::standard_normal(&mut rng);
        assert!(a.finite());
    }
}
