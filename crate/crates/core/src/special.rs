//! Error functions tuned for the front equations: `erf`, `erfc`, and the
//! scaled complement `erfcx(x) = exp(x^2) erfc(x)`.
//!
//! Rational approximations after W. J. Cody's SPECFUN CALERF routine, which
//! splits the axis in three: a rational fit of erf on |x| <= 0.46875, a fit
//! of the scaled complement on (0.46875, 4), and an asymptotic correction to
//! 1/(x sqrt(pi)) beyond 4. Double-precision relative error stays near 1 ulp
//! through all three pieces.
//!
//! `erfcx` exists because the liquid side of the front equations needs
//! `exp(-x^2)/erfc(x)`: both factors under/overflow long before the ratio
//! does, while `1/erfcx(x)` evaluates it directly for any x >= 0.
//!
//! These are pure float kernels and follow libm conventions rather than
//! returning `Result`: NaN propagates, infinities map to their exact limits.

/// 1/sqrt(pi).
const SQRPI: f64 = 5.641_895_835_477_562_9e-1;
/// erf threshold between the small-|x| fit and the scaled-complement fit.
const THRESH: f64 = 0.46875;
/// Beyond this, exp(-x^2) underflows and erfc(x) is 0 in f64.
const XBIG: f64 = 26.543;
/// Beyond this, 1/(x sqrt(pi)) alone is full precision for erfcx.
const XHUGE: f64 = 6.71e7;
/// Beyond this, 1/(x sqrt(pi)) itself would underflow.
const XMAX: f64 = 2.53e307;
/// Below this magnitude erf(x) = 2x/sqrt(pi) to full precision.
const XSMALL: f64 = 1.11e-16;
/// Most negative x for which 2 exp(x^2) still fits in f64 (erfcx overflow edge).
const XNEG: f64 = -26.628;

const A: [f64; 5] = [
    3.161_123_743_870_565_6e0,
    1.138_641_541_510_501_56e2,
    3.774_852_376_853_020_2e2,
    3.209_377_589_138_469_47e3,
    1.857_777_061_846_031_53e-1,
];
const B: [f64; 4] = [
    2.360_129_095_234_412_09e1,
    2.440_246_379_344_441_73e2,
    1.282_616_526_077_372_28e3,
    2.844_236_833_439_170_62e3,
];
const C: [f64; 9] = [
    5.641_884_969_886_700_9e-1,
    8.883_149_794_388_375_94e0,
    6.611_919_063_714_162_95e1,
    2.986_351_381_974_001_31e2,
    8.819_522_212_417_690_9e2,
    1.712_047_612_634_070_58e3,
    2.051_078_377_826_071_47e3,
    1.230_339_354_797_997_25e3,
    2.153_115_354_744_038_46e-8,
];
const D: [f64; 8] = [
    1.574_492_611_070_983_47e1,
    1.176_939_508_913_124_99e2,
    5.371_811_018_620_098_58e2,
    1.621_389_574_566_690_19e3,
    3.290_799_235_733_459_63e3,
    4.362_619_090_143_247_16e3,
    3.439_367_674_143_721_64e3,
    1.230_339_354_803_749_42e3,
];
const P: [f64; 6] = [
    3.053_266_349_612_323_44e-1,
    3.603_448_999_498_044_39e-1,
    1.257_817_261_112_292_46e-1,
    1.608_378_514_874_227_66e-2,
    6.587_491_615_298_378_03e-4,
    1.631_538_713_730_209_78e-2,
];
const Q: [f64; 5] = [
    2.568_520_192_289_822_42e0,
    1.872_952_849_923_460_47e0,
    5.279_051_029_514_284_12e-1,
    6.051_834_131_244_131_91e-2,
    2.335_204_976_268_691_85e-3,
];

/// erf on |x| <= THRESH.
fn erf_small(x: f64) -> f64 {
    let y = x.abs();
    if y <= XSMALL {
        return x * A[3] / B[3];
    }
    let z = y * y;
    let mut num = A[4] * z;
    let mut den = z;
    for i in 0..3 {
        num = (num + A[i]) * z;
        den = (den + B[i]) * z;
    }
    x * (num + A[3]) / (den + B[3])
}

/// exp(-y^2) with the argument split at a 1/16 grid so the large-magnitude
/// part is squared exactly; keeps erfc accurate near the underflow edge.
fn exp_neg_sq(y: f64) -> f64 {
    let ysq = (y * 16.0).trunc() / 16.0;
    let del = (y - ysq) * (y + ysq);
    (-ysq * ysq).exp() * (-del).exp()
}

/// Scaled complement erfcx(y) for y >= THRESH.
fn erfcx_upper(y: f64) -> f64 {
    if y < 4.0 {
        let mut num = C[8] * y;
        let mut den = y;
        for i in 0..7 {
            num = (num + C[i]) * y;
            den = (den + D[i]) * y;
        }
        (num + C[7]) / (den + D[7])
    } else if y < XHUGE {
        let z = 1.0 / (y * y);
        let mut num = P[5] * z;
        let mut den = z;
        for i in 0..4 {
            num = (num + P[i]) * z;
            den = (den + Q[i]) * z;
        }
        let r = z * (num + P[4]) / (den + Q[4]);
        (SQRPI - r) / y
    } else if y < XMAX {
        SQRPI / y
    } else {
        0.0
    }
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let y = x.abs();
    if y <= THRESH {
        erf_small(x)
    } else if y < 6.0 {
        let e = 1.0 - exp_neg_sq(y) * erfcx_upper(y);
        if x < 0.0 {
            -e
        } else {
            e
        }
    } else {
        // erfc(6) < 2.2e-17: rounds to +-1 exactly.
        1.0_f64.copysign(x)
    }
}

/// Complementary error function, accurate in relative terms down to the
/// f64 underflow edge near x = 26.5.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let y = x.abs();
    if y <= THRESH {
        1.0 - erf_small(x)
    } else if x < 0.0 {
        2.0 - erfc(-x)
    } else if x < XBIG {
        exp_neg_sq(x) * erfcx_upper(x)
    } else {
        0.0
    }
}

/// Scaled complementary error function `exp(x^2) erfc(x)`.
///
/// Decays like `1/(x sqrt(pi))` instead of underflowing, which is what makes
/// the liquid-side factor [`f1`] computable at similarity arguments far from
/// the front. For x < 0 it grows like `2 exp(x^2)` and overflows to +inf
/// below x ~ -26.6.
pub fn erfcx(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x >= THRESH {
        erfcx_upper(x)
    } else if x >= 0.0 {
        (x * x).exp() * (1.0 - erf_small(x))
    } else if x > XNEG {
        let e = (x * x).exp();
        2.0 * e - erfcx(-x)
    } else {
        f64::INFINITY
    }
}

/// Liquid-side factor of the front equations, `F1(x) = exp(-x^2)/erfc(x)`,
/// computed as `1/erfcx(x)`. Grows like `x sqrt(pi)`; finite for any x >= 0.
pub fn f1(x: f64) -> f64 {
    1.0 / erfcx(x)
}

/// Solid-side factor, `F2(x) = exp(-x^2)/erf(x)`. Strictly decreasing on
/// (0, inf) with a pole at 0+: `f2(0.0)` returns +inf.
pub fn f2(x: f64) -> f64 {
    (-x * x).exp() / erf(x)
}
