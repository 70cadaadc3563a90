//! Integer-order Bessel functions of the first kind.

/// `J_0(z), …, J_{nmax}(z)` for `z ≥ 0`.
///
/// Miller's backward recurrence normalised with `J₀ + 2ΣJ_{2k} = 1`; a power
/// series is used for small arguments.
pub fn bessel_j_orders(nmax: usize, z: f64) -> Vec<f64> {
    let z = z.abs();
    if z == 0.0 {
        let mut out = vec![0.0; nmax + 1];
        out[0] = 1.0;
        return out;
    }
    if z < 1e-3 {
        return (0..=nmax).map(|n| series(n, z)).collect();
    }
    let top = (nmax as f64).max(z);
    let mut start = top.ceil() as usize + 20 + (40.0 * top).sqrt().ceil() as usize;
    start += start % 2;

    let mut out = vec![0.0; nmax + 1];
    let mut j_next = 0.0;
    let mut j_cur = 1e-30;
    let mut norm = 0.0;
    for k in (1..=start).rev() {
        let j_prev = 2.0 * k as f64 / z * j_cur - j_next;
        j_next = j_cur;
        j_cur = j_prev;
        // j_cur now holds the unnormalised J_{k-1}
        let order = k - 1;
        if order <= nmax {
            out[order] = j_cur;
        }
        if order % 2 == 0 && order > 0 {
            norm += 2.0 * j_cur;
        }
        if j_cur.abs() > 1e200 {
            let s = 1e-200;
            j_cur *= s;
            j_next *= s;
            norm *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
        }
    }
    norm += j_cur;
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

fn series(n: usize, z: f64) -> f64 {
    let h = 0.5 * z;
    let mut term = 1.0;
    for k in 1..=n {
        term *= h / k as f64;
    }
    let mut sum = term;
    let h2 = h * h;
    for k in 1..40 {
        term *= -h2 / (k as f64 * (k + n) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// `J_n(z)` for `z ≥ 0`.
pub fn bessel_j(n: usize, z: f64) -> f64 {
    bessel_j_orders(n, z)[n]
}

/// `(J_{s−1}(z), J_s(z), J_{s+1}(z))` from one recurrence sweep, `s ≥ 1`.
pub fn bessel_j_triplet(s: usize, z: f64) -> (f64, f64, f64) {
    let v = bessel_j_orders(s + 1, z);
    (v[s - 1], v[s], v[s + 1])
}
