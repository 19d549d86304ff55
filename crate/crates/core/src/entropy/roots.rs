use std::f64::consts::E;

use super::EntropyError;

/// Largest positive root of `x^{m+1} - x^m - k`, the growth rate of the
/// gap shift with gap `m` extended to `k` nonzero symbols.
pub fn gap_root(m: u32, k: u64) -> f64 {
    assert!(m >= 1 && k >= 1, "gap_root needs m, k ≥ 1");
    let k = k as f64;
    let p = |x: f64| x.powi(m as i32) * (x - 1.0) - k;
    let base = k.powf(1.0 / f64::from(m + 1));
    let mut hi = base + 1.0;
    while p(hi) <= 0.0 {
        hi *= 2.0;
    }
    bisect(p, base.max(1.0), hi)
}

/// The `ε ∈ (0, 1]` with `(2e/ε)^ε = c`, or 1 when `c ≥ 2e`. The left side
/// increases on `(0, 1]` from its limit 1 at `0+`.
pub fn binomial_eps(c: f64) -> Result<f64, EntropyError> {
    if c.is_nan() || c <= 1.0 {
        return Err(EntropyError::InvalidArgument(format!("binomial_eps needs c > 1, got {c}")));
    }
    let target = c.ln();
    let g = |eps: f64| eps * (2.0 * E / eps).ln() - target;
    if g(1.0) <= 0.0 {
        return Ok(1.0);
    }
    Ok(bisect(|x| if x == 0.0 { -target } else { g(x) }, 0.0, 1.0))
}

/// Bisection for an increasing sign change of `f` on `[lo, hi]`, run until
/// the bracket holds adjacent floats.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}
