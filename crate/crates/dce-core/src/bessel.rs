//! Bessel functions of the first kind J_m for integer order.
//!
//! Three regimes, switched on the argument:
//!   * |x| ≤ 8: ascending power series (alternating terms stay small enough
//!     that cancellation keeps the absolute error below ~1e-14);
//!   * 8 < |x| ≤ 1000: Miller backward recurrence normalized with
//!     J₀ + 2·Σ_{k≥1} J_{2k} = 1 (stable for all orders);
//!   * |x| > 1000: Hankel asymptotic expansions for J₀/J₁ followed by
//!     forward recurrence (stable because supported orders ≤ 60 ≪ x).
//!
//! Target absolute accuracy 1e-13 for |x| ≤ 1e4, |m| ≤ 60, verified against
//! a 50-digit arbitrary-precision oracle in the test suite.

/// J_m(x) for integer order m.
pub fn bessel_j(m: i64, x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_infinite() {
        return 0.0;
    }
    // J_{-m}(x) = (-1)^m J_m(x);  J_m(-x) = (-1)^m J_m(x)
    let odd = m.rem_euclid(2) == 1;
    let mut sign = 1.0;
    if m < 0 && odd {
        sign = -sign;
    }
    if x < 0.0 && odd {
        sign = -sign;
    }
    let m = m.unsigned_abs() as u32;
    let x = x.abs();
    let val = if x == 0.0 {
        if m == 0 {
            1.0
        } else {
            0.0
        }
    } else if x <= 8.0 {
        series_jm(m, x)
    } else if x <= 1000.0 {
        miller_jm(m, x)
    } else {
        asymptotic_forward_jm(m, x)
    };
    sign * val
}

/// Derivative J_m'(x) = (J_{m−1}(x) − J_{m+1}(x))/2.
pub fn bessel_j_prime(m: i64, x: f64) -> f64 {
    0.5 * (bessel_j(m - 1, x) - bessel_j(m + 1, x))
}

/// Ascending series J_m(x) = (x/2)^m/m! Σ_k (−x²/4)^k / (k! (m+k)!).
fn series_jm(m: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    // leading coefficient (x/2)^m / m!, built multiplicatively to avoid
    // overflow/underflow in the factorial for large m
    let mut lead = 1.0;
    for k in 1..=m {
        lead *= half / k as f64;
        if lead == 0.0 {
            return 0.0; // deep underflow: J_m is below f64 range
        }
    }
    let z = -half * half;
    let mut term = lead;
    let mut sum = lead;
    for k in 1..200 {
        term *= z / (k as f64 * (m + k) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-30) {
            break;
        }
    }
    sum
}

/// Miller backward recurrence with series normalization.
fn miller_jm(m: u32, x: f64) -> f64 {
    let scale_of = |v: f64| v.abs() > 1e250;
    let top = (m as usize).max(x.ceil() as usize);
    let start = top + 20 + (2.0 * (top as f64).sqrt()).ceil() as usize;
    let mut fp = 0.0f64; // J_{n+1} surrogate
    let mut fc = 1e-30f64; // J_n surrogate
    let mut target = 0.0f64;
    let mut norm = 0.0f64; // J_0 + 2 sum J_{2k}
    for n in (0..=start).rev() {
        let fm = 2.0 * (n as f64 + 1.0) / x * fc - fp;
        fp = fc;
        fc = fm;
        // fc now holds the surrogate for J_n
        if n as u32 == m {
            target = fc;
        }
        if n % 2 == 0 {
            norm += if n == 0 { fc } else { 2.0 * fc };
        }
        if scale_of(fc) {
            let s = 1e-250;
            fp *= s;
            fc *= s;
            target *= s;
            norm *= s;
        }
    }
    target / norm
}

/// Hankel asymptotic expansion for J_n, n ∈ {0, 1}, valid for large x.
fn hankel_j01(n: u32, x: f64) -> f64 {
    let mu = 4.0 * (n * n) as f64;
    let w = 8.0 * x;
    // P collects the even-index terms of the Hankel series, Q the odd ones,
    // with signs following the period-4 pattern of i^k
    let mut p = 1.0;
    let mut q = 0.0;
    let mut num = 1.0f64; // running product (mu - 1)(mu - 9)...
    let mut fact = 1.0f64; // k!
    let mut pw = 1.0f64; // (8x)^k
    for k in 1..=10u32 {
        num *= mu - ((2 * k - 1) * (2 * k - 1)) as f64;
        fact *= k as f64;
        pw *= w;
        let term = num / (fact * pw);
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
    }
    let chi = x - (2.0 * n as f64 + 1.0) * std::f64::consts::FRAC_PI_4;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// Asymptotic J₀/J₁ plus stable forward recurrence up to order m ≪ x.
fn asymptotic_forward_jm(m: u32, x: f64) -> f64 {
    let j0 = hankel_j01(0, x);
    if m == 0 {
        return j0;
    }
    let j1 = hankel_j01(1, x);
    if m == 1 {
        return j1;
    }
    let mut jm1 = j0;
    let mut jc = j1;
    for n in 1..m {
        let jn = 2.0 * n as f64 / x * jc - jm1;
        jm1 = jc;
        jc = jn;
    }
    jc
}
