//! Jacobi amplitude and incomplete elliptic integrals, parameter convention
//! `m = k²`.

use std::f64::consts::PI;

use super::SpecfunError;

/// Carlson's symmetric integral `R_F(x, y, z)`.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    let mut a = (x + y + z) / 3.0;
    let q = (3.0 * f64::EPSILON).powf(-1.0 / 6.0) * (a - x).abs().max((a - y).abs()).max((a - z).abs());
    let mut scale = 1.0;
    let a0 = a;
    let (x0, y0) = (x, y);
    while q / scale > a.abs() {
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sx * sz + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        a = 0.25 * (a + lam);
        scale *= 4.0;
    }
    let xx = (a0 - x0) / (scale * a);
    let yy = (a0 - y0) / (scale * a);
    let zz = -xx - yy;
    let e2 = xx * yy - zz * zz;
    let e3 = xx * yy * zz;
    (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / a.sqrt()
}

/// Carlson's degenerate integral `R_D(x, y, z)`.
pub fn carlson_rd(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    let (x0, y0) = (x, y);
    let a0 = (x + y + 3.0 * z) / 5.0;
    let mut a = a0;
    let q = (0.25 * f64::EPSILON).powf(-1.0 / 6.0) * (a - x).abs().max((a - y).abs()).max((a - z).abs());
    let mut scale = 1.0;
    let mut sum = 0.0;
    while q / scale > a.abs() {
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sx * sz + sy * sz;
        sum += 1.0 / (scale * sz * (z + lam));
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        a = 0.25 * (a + lam);
        scale *= 4.0;
    }
    let xx = (a0 - x0) / (scale * a);
    let yy = (a0 - y0) / (scale * a);
    let zz = -(xx + yy) / 3.0;
    let e2 = xx * yy - 6.0 * zz * zz;
    let e3 = (3.0 * xx * yy - 8.0 * zz * zz) * zz;
    let e4 = 3.0 * (xx * yy - zz * zz) * zz * zz;
    let e5 = xx * yy * zz * zz * zz;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    series / (scale * a * a.sqrt()) + 3.0 * sum
}

fn check_param(m: f64) -> Result<(), SpecfunError> {
    if !m.is_finite() || m > 1.0 {
        return Err(SpecfunError::ParameterOutOfRange(m));
    }
    Ok(())
}

/// Splits `φ = nπ + r` with `r ∈ [−π/2, π/2]`.
fn reduce(phi: f64) -> (f64, f64) {
    let n = (phi / PI).round();
    (n, phi - n * PI)
}

/// Complete integral of the first kind `K(m)`, `m < 1`.
pub fn elliptic_k(m: f64) -> Result<f64, SpecfunError> {
    check_param(m)?;
    if m == 1.0 {
        return Ok(f64::INFINITY);
    }
    Ok(carlson_rf(0.0, 1.0 - m, 1.0))
}

/// Incomplete integral of the first kind `F(φ|m) = ∫₀^φ (1 − m sin²θ)^{-1/2} dθ`.
pub fn elliptic_f(phi: f64, m: f64) -> Result<f64, SpecfunError> {
    check_param(m)?;
    let (n, r) = reduce(phi);
    let (s, c) = r.sin_cos();
    if m == 1.0 {
        if n != 0.0 || c == 0.0 {
            return Ok(phi.signum() * f64::INFINITY);
        }
        return Ok(s.atanh());
    }
    let part = s * carlson_rf(c * c, 1.0 - m * s * s, 1.0);
    let k = if n != 0.0 { carlson_rf(0.0, 1.0 - m, 1.0) } else { 0.0 };
    Ok(2.0 * n * k + part)
}

/// Incomplete integral of the second kind `E(φ|m) = ∫₀^φ (1 − m sin²θ)^{1/2} dθ`.
pub fn elliptic_e(phi: f64, m: f64) -> Result<f64, SpecfunError> {
    check_param(m)?;
    let (n, r) = reduce(phi);
    let (s, c) = r.sin_cos();
    if m == 1.0 {
        return Ok(2.0 * n + s);
    }
    let y = 1.0 - m * s * s;
    let part = s * carlson_rf(c * c, y, 1.0) - m / 3.0 * s * s * s * carlson_rd(c * c, y, 1.0);
    let complete = if n != 0.0 { complete_e(m) } else { 0.0 };
    Ok(2.0 * n * complete + part)
}

fn complete_e(m: f64) -> f64 {
    let y = 1.0 - m;
    carlson_rf(0.0, y, 1.0) - m / 3.0 * carlson_rd(0.0, y, 1.0)
}

/// Complete integral of the second kind `E(m) = E(π/2|m)`.
pub fn elliptic_e_complete(m: f64) -> Result<f64, SpecfunError> {
    check_param(m)?;
    if m == 1.0 {
        return Ok(1.0);
    }
    Ok(complete_e(m))
}

/// Descending Landen (AGM) scheme for `0 ≤ m < 1`.
fn am_agm(u: f64, m: f64) -> f64 {
    if m == 0.0 {
        return u;
    }
    let mut a = [0.0f64; 32];
    let mut c = [0.0f64; 32];
    a[0] = 1.0;
    let mut b = (1.0 - m).sqrt();
    c[0] = m.sqrt();
    let mut n = 0;
    while c[n].abs() > f64::EPSILON * a[n] && n < 31 {
        let an = a[n];
        a[n + 1] = 0.5 * (an + b);
        c[n + 1] = 0.5 * (an - b);
        b = (an * b).sqrt();
        n += 1;
    }
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for i in (1..=n).rev() {
        phi = 0.5 * (phi + (c[i] / a[i] * phi.sin()).asin());
    }
    phi
}

/// Jacobi amplitude: the inverse of `u = F(φ|m)`.
///
/// Negative parameters use the imaginary-modulus transformation; `m = 1`
/// gives the Gudermannian.
pub fn jacobi_am(u: f64, m: f64) -> Result<f64, SpecfunError> {
    check_param(m)?;
    if m == 1.0 {
        return Ok(u.sinh().atan());
    }
    if m >= 0.0 {
        return Ok(am_agm(u, m));
    }
    let mu = -m;
    let root = (1.0 + mu).sqrt();
    let theta = am_agm(u * root, mu / (1.0 + mu));
    let (n, r) = reduce(theta);
    let (s, c) = r.sin_cos();
    Ok(n * PI + (s / root).atan2(c))
}

/// `(sn, cn, dn)` at `(u|m)`.
pub fn jacobi_sn_cn_dn(u: f64, m: f64) -> Result<(f64, f64, f64), SpecfunError> {
    let phi = jacobi_am(u, m)?;
    let (s, c) = phi.sin_cos();
    Ok((s, c, (1.0 - m * s * s).max(0.0).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn am_at_zero_parameter_is_identity() {
        for x in [0.1, 1.0, 3.7] {
            assert_eq!(jacobi_am(x, 0.0).unwrap(), x);
        }
    }

    #[test]
    fn am_quarter_period() {
        let k = elliptic_k(0.5).unwrap();
        assert!((jacobi_am(k, 0.5).unwrap() - FRAC_PI_2).abs() < 1e-14);
        // known value K(0.5)
        assert!((k - 1.854_074_677_301_372).abs() < 1e-14);
    }

    #[test]
    fn am_gudermannian_and_rejections() {
        assert!((jacobi_am(0.7, 1.0).unwrap() - 0.7f64.sinh().atan()).abs() < 1e-15);
        assert!(jacobi_am(0.7, 1.2).is_err());
        assert!(elliptic_e(0.7, 1.0001).is_err());
    }

    #[test]
    fn complete_e_values() {
        assert!((elliptic_e(FRAC_PI_2, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((elliptic_e_complete(0.5).unwrap() - 1.350_643_881_047_675_5).abs() < 1e-14);
        assert!((elliptic_e(1.3, 0.0).unwrap() - 1.3).abs() < 1e-15);
    }

    #[test]
    fn f_inverts_am_across_parameters() {
        for &m in &[-2.0e4, -2.0, -0.3, 0.0, 0.2, 0.5, 0.9, 0.999, 0.99995] {
            for i in -40..=40 {
                let u = 0.173 * i as f64;
                let phi = jacobi_am(u, m).unwrap();
                let back = elliptic_f(phi, m).unwrap();
                assert!((back - u).abs() < 1e-9 * u.abs().max(1.0), "m={m} u={u} back={back}");
            }
        }
    }

    #[test]
    fn quasi_periodicity() {
        for &m in &[-3.0, 0.4, 1.0] {
            let phi = 0.7;
            let e = elliptic_e(phi, m).unwrap();
            let e2 = elliptic_e(phi + 2.0 * PI, m).unwrap();
            let ec = elliptic_e_complete(m).unwrap();
            assert!((e2 - e - 4.0 * ec).abs() < 1e-12);
        }
    }
}
