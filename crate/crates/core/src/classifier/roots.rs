use crate::error::{Error, Result};

/// Bisection on a sign-changing bracket `[lo, hi]`, stopping when
/// `|f(mid)| < ftol` and the bracket has collapsed to adjacent floats.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, ftol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
        return Err(Error::InvalidGrid(format!("bisection needs a sign change on [{lo}, {hi}]")));
    }
    let mut best = (f64::INFINITY, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid.abs() < best.0 {
            best = (fmid.abs(), mid);
        }
        if fmid == 0.0 || mid <= lo || mid >= hi {
            break;
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    if best.0 < ftol {
        Ok(best.1)
    } else {
        Err(Error::InvalidGrid(format!("bisection stalled at |f| = {:e}", best.0)))
    }
}

/// Golden-section search for a minimum of `f` on `[a, b]`; returns
/// `(argmin, min)`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if (b - a).abs() <= xtol * (1.0 + a.abs()) {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn golden_section_on_a_kink() {
        let (x, fx) = golden_section_min(|x| (x - 0.3).abs() * 48.0, 0.0, 1.0, 1e-15);
        assert!((x - 0.3).abs() < 1e-13);
        assert!(fx < 1e-11);
    }
}
