//! Scalar math shims that work in both std and no_std builds.
//!
//! Under `std` these forward to the platform intrinsics; otherwise libm.
//! All call sites in the crate go through this module so the core stays
//! `no_std`-clean.

macro_rules! unary {
    ($name:ident, $method:ident, $libm:path) => {
        #[inline]
        pub fn $name(x: f64) -> f64 {
            #[cfg(feature = "std")]
            {
                x.$method()
            }
            #[cfg(not(feature = "std"))]
            {
                $libm(x)
            }
        }
    };
}

unary!(abs, abs, libm::fabs);
unary!(floor, floor, libm::floor);
unary!(round, round, libm::round);
unary!(sqrt, sqrt, libm::sqrt);
unary!(exp, exp, libm::exp);
unary!(ln, ln, libm::log);
unary!(tanh, tanh, libm::tanh);
unary!(sin, sin, libm::sin);
unary!(cos, cos, libm::cos);
unary!(asin, asin, libm::asin);

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        y.atan2(x)
    }
    #[cfg(not(feature = "std"))]
    {
        libm::atan2(y, x)
    }
}

#[inline]
pub fn copysign(magnitude: f64, sign: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        magnitude.copysign(sign)
    }
    #[cfg(not(feature = "std"))]
    {
        libm::copysign(magnitude, sign)
    }
}

#[inline]
pub fn hypot2(v: [f64; 2]) -> f64 {
    sqrt(v[0] * v[0] + v[1] * v[1])
}

#[inline]
pub fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + exp(-x))
}

/// Degrees to radians.
#[inline]
pub fn to_rad(deg: f64) -> f64 {
    deg * (core::f64::consts::PI / 180.0)
}

/// Radians to degrees.
#[inline]
pub fn to_deg(rad: f64) -> f64 {
    rad * (180.0 / core::f64::consts::PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_is_half_away_from_zero() {
        assert_eq!(round(0.5), 1.0);
        assert_eq!(round(-0.5), -1.0);
        assert_eq!(round(1.5), 2.0);
        assert_eq!(round(-2.5), -3.0);
    }

    #[test]
    fn sigmoid_symmetry() {
        let x = 0.37;
        assert!((sigmoid(x) + sigmoid(-x) - 1.0).abs() < 1e-15);
    }
}
