//! Small-denominator rational approximation by continued fractions.

/// Best convergent `p/q` of `x` with `1 ≤ q ≤ max_den`, as `(p, q)`.
///
/// Returns the last continued-fraction convergent whose denominator fits.
/// Semiconvergents are not considered.
pub fn nearest_rational(x: f64, max_den: u64) -> Option<(i64, u64)> {
    if !x.is_finite() || max_den == 0 {
        return None;
    }
    let sign = if x < 0.0 { -1 } else { 1 };
    let mut rest = x.abs();
    // Convergent recurrences h_n = a_n h_{n-1} + h_{n-2}, same for k.
    let (mut h_prev, mut h) = (0u64, 1u64);
    let (mut k_prev, mut k) = (1u64, 0u64);
    let mut best = None;
    for _ in 0..64 {
        let a = rest.floor();
        if a > u32::MAX as f64 {
            break;
        }
        let a = a as u64;
        let h_next = a.checked_mul(h)?.checked_add(h_prev)?;
        let k_next = a.checked_mul(k)?.checked_add(k_prev)?;
        if k_next > max_den {
            break;
        }
        (h_prev, h) = (h, h_next);
        (k_prev, k) = (k, k_next);
        best = Some((sign * h as i64, k));
        let frac = rest - a as f64;
        if frac.abs() < 1e-12 * rest.max(1.0) {
            break;
        }
        rest = 1.0 / frac;
    }
    best
}
