use num_complex::Complex64;

const FACTOR: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// Faddeeva function `w(z) = e^{-z²} erfc(-iz)` (Poppe–Wijers algorithm).
pub fn faddeeva_w(z: Complex64) -> Complex64 {
    let (xi, yi) = (z.re, z.im);
    let xabs = xi.abs();
    let yabs = yi.abs();
    let x = xabs / 6.3;
    let y = yabs / 4.4;
    let mut qrho = x * x + y * y;
    let xabsq = xabs * xabs;
    let mut xquad = xabsq - yabs * yabs;
    let yquad = 2.0 * xabs * yabs;
    let series = qrho < 0.085264;

    let (mut u, mut v, u2, v2);
    if series {
        qrho = (1.0 - 0.85 * y) * qrho.sqrt();
        let n = (6.0 + 72.0 * qrho).round() as i64;
        let mut j = 2 * n + 1;
        let mut xsum = 1.0 / j as f64;
        let mut ysum = 0.0;
        for i in (1..=n).rev() {
            j -= 2;
            let fi = i as f64;
            let xaux = (xsum * xquad - ysum * yquad) / fi;
            ysum = (xsum * yquad + ysum * xquad) / fi;
            xsum = xaux + 1.0 / j as f64;
        }
        let u1 = -FACTOR * (xsum * yabs + ysum * xabs) + 1.0;
        let v1 = FACTOR * (xsum * xabs - ysum * yabs);
        let daux = (-xquad).exp();
        u2 = daux * yquad.cos();
        v2 = -daux * yquad.sin();
        u = u1 * u2 - v1 * v2;
        v = u1 * v2 + v1 * u2;
    } else {
        let (h, kapn, nu);
        if qrho > 1.0 {
            h = 0.0;
            kapn = 0i64;
            qrho = qrho.sqrt();
            nu = (3.0 + 1442.0 / (26.0 * qrho + 77.0)) as i64;
        } else {
            qrho = (1.0 - y) * (1.0 - qrho).sqrt();
            h = 1.88 * qrho;
            kapn = (7.0 + 34.0 * qrho).round() as i64;
            nu = (16.0 + 26.0 * qrho).round() as i64;
        }
        let h2 = 2.0 * h;
        let b = h > 0.0;
        let mut qlambda = if b { h2.powi(kapn as i32) } else { 0.0 };
        let (mut rx, mut ry, mut sx, mut sy) = (0.0, 0.0, 0.0, 0.0);
        for n in (0..=nu).rev() {
            let np1 = (n + 1) as f64;
            let tx = yabs + h + np1 * rx;
            let ty = xabs - np1 * ry;
            let c = 0.5 / (tx * tx + ty * ty);
            rx = c * tx;
            ry = c * ty;
            if b && n <= kapn {
                let tx = qlambda + sx;
                sx = rx * tx - ry * sy;
                sy = ry * tx + rx * sy;
                qlambda /= h2;
            }
        }
        if h == 0.0 {
            u = FACTOR * rx;
            v = FACTOR * ry;
        } else {
            u = FACTOR * sx;
            v = FACTOR * sy;
        }
        if yabs == 0.0 {
            u = (-xabs * xabs).exp();
        }
        u2 = 0.0;
        v2 = 0.0;
    }

    if yi < 0.0 {
        let (a2, b2) = if series {
            (2.0 * u2, 2.0 * v2)
        } else {
            xquad = -xquad;
            let w1 = 2.0 * xquad.exp();
            (w1 * yquad.cos(), -w1 * yquad.sin())
        };
        u = a2 - u;
        v = b2 - v;
        if xi > 0.0 {
            v = -v;
        }
    } else if xi < 0.0 {
        v = -v;
    }
    Complex64::new(u, v)
}

/// Complementary error function of a complex argument.
pub fn erfc_c(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        return Complex64::new(2.0, 0.0) - erfc_c(-z);
    }
    let w = faddeeva_w(Complex64::new(-z.im, z.re));
    let e = (-z * z).exp();
    if w.norm() == 0.0 || e.norm() == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    e * w
}

/// Error function of a complex argument, with a Taylor series near the origin.
pub fn erf_c(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        let z2 = z * z;
        let mut term = z;
        let mut sum = z;
        for k in 1..40 {
            term *= -z2 / k as f64;
            let t = term / (2 * k + 1) as f64;
            sum += t;
            if t.norm() < 1e-17 * sum.norm() {
                break;
            }
        }
        return sum * FACTOR;
    }
    Complex64::new(1.0, 0.0) - erfc_c(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIXTURES: [(f64, f64, f64, f64); 18] = [
        (1.0, 0.0, 0.15729920705028513066, 0.0),
        (0.5, 0.5, 0.35738708514517947168, -0.45788139443519221584),
        (-1.2, 0.7, 2.0663700129803380527, -0.12024336401600993436),
        (2.5, -3.1, -3.2540329966241548225, -2.4875600570715223574),
        (0.01, 0.02, 0.98871207047613786276, -0.022568335165829540422),
        (5.5, 1.0, 3.5090010793825915934e-15, 1.9390283572338339941e-14),
        (-4.0, -4.0, 1.9785492330760819259, 0.097339690630831865347),
        (0.0, 6.0, 1.0, -411275145582823.87097),
        (8.0, -0.3, 1.5244289639501015183e-30, -1.2178048443270166008e-29),
        (3.0, 7.0, 11930862314097288.471, 12859127259900898.767),
        (0.3, -9.5, 4.9331280258200403243e+37, 6.9819259584664990524e+37),
        (-9.0, 2.0, 2.0, 2.1983923518846455288e-35),
        (1.3, 2.9, -107.96253388571776375, -106.56607042285078675),
        (-0.2, -1.7, 4.7085748132861313887, 6.2618135011225509337),
        (6.4, 4.3, 7.6551425517204537831e-12, 1.0152460227649242387e-11),
        (0.7, 0.05, 0.32098805644891033561, -0.034564305246882904355),
        (2.0, 2.0, -0.15131086639806902401, -0.12729162946314079101),
        (-3.0, 0.5, 2.0000280653614764049, 2.6284897222588231396e-7),
    ];

    #[test]
    fn matches_reference_values() {
        for &(x, y, re, im) in FIXTURES.iter() {
            let got = erfc_c(Complex64::new(x, y));
            let want = Complex64::new(re, im);
            let rel = (got - want).norm() / want.norm();
            assert!(rel < 1e-12, "erfc({x}+{y}i): got {got}, want {want}, rel {rel:e}");
        }
    }

    #[test]
    fn trivial_values() {
        assert_eq!(erfc_c(Complex64::new(0.0, 0.0)), Complex64::new(1.0, 0.0));
        assert!((erfc_c(Complex64::new(1.0, 0.0)).re - 0.157_299_207_050_285_1).abs() < 1e-15);
    }

    #[test]
    fn erf_is_odd_on_grid() {
        for i in -8..=8 {
            for j in -8..=8 {
                let z = Complex64::new(i as f64 * 0.37, j as f64 * 0.29);
                let s = erf_c(z) + erf_c(-z);
                assert!(s.norm() <= 1e-12 * (1.0 + erf_c(z).norm()), "{z}: {s}");
            }
        }
    }

    #[test]
    fn series_matches_subtraction() {
        for &(x, y) in &[(0.3, 0.2), (-0.1, 0.45), (0.49, -0.01)] {
            let z = Complex64::new(x, y);
            let a = erf_c(z);
            let b = Complex64::new(1.0, 0.0) - erfc_c(z);
            assert!((a - b).norm() < 1e-14);
        }
    }
}
