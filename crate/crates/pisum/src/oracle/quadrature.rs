use std::f64::consts::PI;

use pisum_core::decimal::DecimalApprox;
use pisum_core::exact::BigRational;
use pisum_core::fourier::Family;

/// Requested absolute accuracy of each integral.
pub const ABS_TOLERANCE: f64 = 1e-13;

const MAX_INTERVALS: usize = 20_000;

// 15-point Kronrod abscissae on [0, 1); the odd-indexed ones and 0 are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("quadrature did not reach tolerance after {intervals} intervals (estimate {estimate:e}, error {error:e})")]
pub struct QuadratureError {
    pub estimate: f64,
    pub error: f64,
    pub intervals: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    roundoff: f64,
}

fn gauss_kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs = fc.abs() * WGK[7];
    for j in 0..7 {
        let x = h * XGK[j];
        let (f1, f2) = (f(c - x), f(c + x));
        kronrod += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    Panel {
        a,
        b,
        value: kronrod * h,
        error: ((kronrod - gauss) * h).abs(),
        roundoff: 50.0 * f64::EPSILON * abs * h.abs(),
    }
}

/// Adaptive Gauss–Kronrod (7/15) with bisection. A panel is accepted once its
/// Kronrod–Gauss difference is below its share of the tolerance, or below the
/// floating-point roundoff floor of its own sum.
fn adaptive(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<(f64, f64), QuadratureError> {
    let mut pending = vec![gauss_kronrod(&f, a, b)];
    let mut total = 0.0f64;
    let mut compensation = 0.0f64;
    let mut error = 0.0f64;
    let mut intervals = 1;
    while let Some(p) = pending.pop() {
        let share = tol * (p.b - p.a).abs() / (b - a).abs();
        if p.error <= share.max(p.roundoff) {
            // Neumaier summation
            let t = total + p.value;
            if total.abs() >= p.value.abs() {
                compensation += (total - t) + p.value;
            } else {
                compensation += (p.value - t) + total;
            }
            total = t;
            error += p.error + p.roundoff;
            continue;
        }
        if intervals >= MAX_INTERVALS {
            let rest: f64 = pending.iter().map(|q| q.value).sum::<f64>() + p.value;
            return Err(QuadratureError {
                estimate: total + compensation + rest,
                error: error + p.error + pending.iter().map(|q| q.error).sum::<f64>(),
                intervals,
            });
        }
        let mid = 0.5 * (p.a + p.b);
        pending.push(gauss_kronrod(&f, p.a, mid));
        pending.push(gauss_kronrod(&f, mid, p.b));
        intervals += 1;
    }
    Ok((total + compensation, error))
}

fn to_decimal(value: f64, error: f64) -> DecimalApprox {
    let v = BigRational::from_float(value).expect("finite quadrature result");
    let e = BigRational::from_float(error).expect("finite error estimate");
    DecimalApprox::new(v, e)
}

/// Numerical value of the `n`-th coefficient of a family:
///
/// * `FkCos`: `∫₀¹ x^{2k} cos(nπx) dx`
/// * `GkCos`: `(1/π)∫_{-π}^0 x^{2k} cos(nx) dx`
/// * `GkSin`: `(1/π)∫_{-π}^0 x^{2k} sin(nx) dx`
///
/// `n = 0` gives the constant term of the cosine families; it is rejected for `GkSin`.
pub fn integrate(family: Family, k: u32, n: u64) -> Result<DecimalApprox, QuadratureError> {
    let e = 2 * k as i32;
    let nf = n as f64;
    let (value, error) = match family {
        Family::FkCos => adaptive(|x| x.powi(e) * (nf * PI * x).cos(), 0.0, 1.0, ABS_TOLERANCE)?,
        Family::GkCos => {
            let (v, err) = adaptive(|x| x.powi(e) * (nf * x).cos(), -PI, 0.0, ABS_TOLERANCE * PI)?;
            (v / PI, err / PI)
        }
        Family::GkSin => {
            if n == 0 {
                return Err(QuadratureError {
                    estimate: 0.0,
                    error: f64::INFINITY,
                    intervals: 0,
                });
            }
            let (v, err) = adaptive(|x| x.powi(e) * (nf * x).sin(), -PI, 0.0, ABS_TOLERANCE * PI)?;
            (v / PI, err / PI)
        }
    };
    Ok(to_decimal(value, error))
}

/// The constant term `a_0` of a cosine family.
pub fn integrate_mean(family: Family, k: u32) -> Result<DecimalApprox, QuadratureError> {
    integrate(family, k, 0)
}
