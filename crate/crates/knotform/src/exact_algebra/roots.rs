//! Simultaneous complex root finding (Aberth–Ehrlich) with Newton polish.

use num_complex::Complex64;

const MAX_ITER: usize = 500;

fn horner(c: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp)
}

/// All roots of `Σ c_k x^k` (ascending coefficients), with multiplicity.
pub fn complex_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    if c.len() <= 1 {
        return vec![];
    }
    let zeros = c.iter().take_while(|x| x.norm() == 0.0).count();
    let mut out = vec![Complex64::new(0.0, 0.0); zeros];
    let c: Vec<Complex64> = c[zeros..].to_vec();
    let n = c.len() - 1;
    if n == 0 {
        return out;
    }
    let lead = c[n];
    let c: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    // Cauchy bound for the initial circle.
    let radius = 1.0 + c[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let r0 = radius.min(2.0f64.max((c[0].norm()).powf(1.0 / n as f64)));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r0, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4))
        .collect();
    for _ in 0..MAX_ITER {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(&c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        s += 1.0 / d;
                    }
                }
            }
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(&c, *r);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if !step.is_finite() || step.norm() < 1e-17 {
                break;
            }
            *r -= step;
        }
    }
    out.extend(z);
    out.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixth_roots_from_trefoil_polynomial() {
        let c: Vec<Complex64> = [1.0, -1.0, 1.0].iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let r = complex_roots(&c);
        assert_eq!(r.len(), 2);
        for z in r {
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!((z.re - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn handles_zero_roots_and_repeats() {
        let c: Vec<Complex64> = [0.0, 1.0, -2.0, 1.0].iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let r = complex_roots(&c);
        assert_eq!(r.len(), 3);
        assert!(r[0].norm() < 1e-12);
        assert!((r[1] - 1.0).norm() < 1e-6 && (r[2] - 1.0).norm() < 1e-6);
    }
}
